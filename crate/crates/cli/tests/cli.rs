use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use icosa_core::clebsch::project_onto_complement;
use icosa_core::so3::{from_binary, K};
use icosa_exact::{rational_string, BinaryForm, QSqrt5};

fn icosa(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_icosa"))
        .args(args)
        .env_remove("ICOSA_PRECISION_BITS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn sextic_doc(c: [i64; 7]) -> String {
    let coeffs: Vec<String> = c.iter().map(|x| format!(r#"{{"q":"{x}"}}"#)).collect();
    format!(r#"{{"version":1,"basis":"binary-sextic","coefficients":[{}]}}"#, coeffs.join(","))
}

fn q5_json(x: &QSqrt5) -> String {
    format!(r#"{{"q5":["{}","{}"]}}"#, rational_string(&x.a), rational_string(&x.b))
}

fn cubic_doc(coeffs: &[String]) -> String {
    format!(r#"{{"version":1,"basis":"ternary-monomial-deg3","coefficients":[{}]}}"#, coeffs.join(","))
}

fn qi5_json(x: &K) -> String {
    let s = x.to_strings();
    format!(r#"{{"qi5":["{}","{}","{}","{}"]}}"#, s[0], s[1], s[2], s[3])
}

/// The cubic whose sextic is `z₁²z₂²(a z₁² + b z₁z₂ + c z₂²)`.
fn cubic_with_sextic(a: i64, b: i64, c: i64) -> String {
    let p = BinaryForm::new([0, 0, a, b, c, 0, 0].map(|x| K::from(QSqrt5::from(x))).to_vec());
    let f = from_binary(&p).unwrap();
    cubic_doc(&f.coefficients().iter().map(qi5_json).collect::<Vec<_>>())
}

#[test]
fn classify_normal_forms() {
    let out = icosa(&["classify", "--sextic", "-"], Some(&sextic_doc([0, 0, 1, -2, 1, 0, 0])));
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["verdict"], "InfinitelyMany");
    assert_eq!(r["flags"]["j6_zero"], true);
    assert_eq!(r["flags"]["square_of_cubic"], true);

    let r = json(&icosa(&["classify", "--sextic", "-"], Some(&sextic_doc([0, 0, 1, 0, -1, 0, 0]))));
    assert_eq!(r["verdict"], "InfinitelyMany");
    assert_eq!(r["flags"]["harmonic_double_pair"], true);
    assert_eq!(r["partition"], serde_json::json!([2, 2, 1, 1]));

    let r = json(&icosa(&["classify", "--sextic", "-"], Some(&sextic_doc([1, 0, 0, 0, 0, 0, -1]))));
    assert_eq!(r["verdict"], "TwoIcosahedralSets");
    assert_eq!(r["invariants"]["delta"], serde_json::json!({"q": "46656"}));
}

#[test]
fn generated_cubic_round_trip_and_classification() {
    let out = icosa(&["generate-cubic", "--seed", "11"], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let doc = json(&out);
    assert_eq!(doc["coefficients"].as_array().unwrap().len(), 10);
    assert_eq!(doc["version"], 1);
    assert_eq!(doc["basis"], "ternary-monomial-deg3");
    let r = json(&icosa(&["classify", "--cubic", "-"], Some(&text)));
    assert_eq!(r["verdict"], "TwoIcosahedralSets");
    assert_eq!(r["precision"], 128);

    let explicit = icosa(&["generate-cubic", "--seed", "2", "--param", "1/2,-1,3/4"], None);
    assert!(explicit.status.success(), "{}", String::from_utf8_lossy(&explicit.stderr));
    assert_eq!(icosa(&["generate-cubic", "--param", "1,2"], None).status.code(), Some(2));
}

#[test]
fn find_icosa_is_deterministic() {
    let doc = String::from_utf8(icosa(&["generate-cubic", "--seed", "4"], None).stdout).unwrap();
    let args = ["find-icosa", "--cubic", "-", "--starts", "60", "--seed", "9"];
    let a = icosa(&args, Some(&doc));
    let b = icosa(&args, Some(&doc));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["classes"], 2);
    assert_eq!(r["verdict"], "TwoIcosahedralSets");
    assert_eq!(r["solutions"][0]["axes"].as_array().unwrap().len(), 6);
}

#[test]
fn tritangent_cubic_shows_a_family() {
    let doc = cubic_with_sextic(1, -2, 1);
    let out = icosa(&["find-icosa", "--cubic", "-", "--starts", "60"], Some(&doc));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["verdict"], "InfinitelyMany");
    assert_eq!(r["family_signature"], true, "{r}");
}

#[test]
fn clebsch_cubic_has_one_set() {
    let b = [2, -1, 3].map(QSqrt5::from);
    let pb = project_onto_complement(&b).unwrap();
    let doc = cubic_doc(&pb.coefficients().iter().map(q5_json).collect::<Vec<_>>());
    let out = icosa(&["find-icosa", "--cubic", "-", "--starts", "120"], Some(&doc));
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["verdict"], "ExactlyOne");
    assert_eq!(r["classes"], 1, "{r}");
}

#[test]
fn verify_suites() {
    let out = icosa(&["verify", "mu-constants"], None);
    assert!(out.status.success());
    assert_eq!(json(&out)["passed"], true);
    let out = icosa(&["verify", "weights", "--max-d", "6"], None);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("2 ≤ d ≤ 6"));
    assert_eq!(icosa(&["verify", "special-curve"], None).status.code(), Some(0));
    assert_eq!(icosa(&["verify", "weights", "--max-d", "1"], None).status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_2() {
    assert_eq!(icosa(&["classify", "--sextic", "-"], Some("not json")).status.code(), Some(2));
    assert_eq!(icosa(&["classify", "--sextic", "-"], Some(&sextic_doc([0; 7]))).status.code(), Some(2));
    let short = r#"{"version":1,"basis":"binary-sextic","coefficients":[{"q":"1"}]}"#;
    assert_eq!(icosa(&["classify", "--sextic", "-"], Some(short)).status.code(), Some(2));
    let mut coeffs = vec![r#"{"q":"0"}"#.to_string(); 10];
    coeffs[0] = r#"{"q":"1"}"#.into();
    assert_eq!(icosa(&["classify", "--cubic", "-"], Some(&cubic_doc(&coeffs))).status.code(), Some(2));
    assert_eq!(icosa(&["classify", "--cubic", "/nonexistent.json"], None).status.code(), Some(2));
    assert_eq!(icosa(&["classify"], None).status.code(), Some(2));
}

#[test]
fn precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_icosa"))
        .args(["classify", "--sextic", "-"])
        .env("ICOSA_PRECISION_BITS", "200")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .and_then(|mut c| {
            c.stdin.take().unwrap().write_all(sextic_doc([1, 2, 0, 0, 0, 3, -1]).as_bytes())?;
            c.wait_with_output()
        })
        .unwrap();
    assert_eq!(json(&out)["precision"], 200);
}

#[test]
fn numeric_cubic_document() {
    let mut coeffs = vec![r#"["0","0"]"#.to_string(); 10];
    coeffs[1] = r#"["3","0"]"#.into();
    coeffs[4] = r#"["1","0.5"]"#.into();
    coeffs[6] = r#"["-1","0"]"#.into();
    let r = json(&icosa(&["classify", "--cubic", "-"], Some(&cubic_doc(&coeffs))));
    assert_eq!(r["invariants"]["delta_method"], "root-product");
    assert!(r["verdict"].is_string());
}
