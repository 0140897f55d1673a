//! Exact arithmetic layer: the fields Q, Q(√5) and Q(i, √5), sparse
//! multivariate polynomials, dense linear algebra, binary forms and their
//! resultants, Pfaffians, and certified complex root finding.

pub mod bigcomplex;
pub mod binary;
mod error;
pub mod field;
pub mod matrix;
pub mod pfaffian;
pub mod poly;
pub mod qsqrt5;
pub mod roots;
pub mod univariate;

pub use bigcomplex::BigComplex;
pub use binary::BinaryForm;
pub use error::{ExactError, Result};
pub use field::{parse_rational, q, rational_string, ComplexEmbedding, Field, Ring};
pub use matrix::{rank_of, Matrix};
pub use pfaffian::{det_expansion, pfaffian, SkewMatrix};
pub use poly::MultiPoly;
pub use qsqrt5::{IntoQISqrt5, QISqrt5, QSqrt5};
pub use roots::{complex_roots, exact_roots, Root, Roots};
pub use univariate::UniPoly;

pub use rug::{Float, Integer, Rational};
