//! Harmonic cubics, icosahedral isotropic subspaces and the geometry built
//! on them: Pfaffian curves, sextic invariants, a solver for icosahedral
//! sets on a cubic, the Clebsch surface, and a special elliptic curve.

pub mod clebsch;
pub mod error;
pub mod icosahedron;
pub mod invariants;
pub mod pfaffian_curve;
pub mod picard;
pub mod so3;
pub mod solver;
pub mod special_curve;

pub use error::{CoreError, Result};
