//! Polynomial solutions of the KZ equations over a prime field `F_p`.
//!
//! The crate constructs the `F_p`-hypergeometric solutions `I^{[l]}`,
//! checks them against the differential and algebraic equations, predicts
//! their leading terms, verifies the determinant of the coordinate matrix,
//! and cross-checks everything against a brute-force nullspace solver.

pub mod acceptance;
pub mod analysis;
pub mod construct;
pub mod error;
pub mod fp;
pub mod kz;
pub mod linalg;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod report;
pub mod sl2;

pub use error::{Error, Result};
pub use fp::{FpScalar, PrimeField};
pub use kz::KzInstance;
pub use par::Exec;
pub use poly::{Monomial, Permutation, Poly, VecPoly};
