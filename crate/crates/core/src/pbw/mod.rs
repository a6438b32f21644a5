//! Enveloping algebras in PBW form, the exterior coalgebra of the odd part,
//! symmetrization, the Bernoulli formal fields and the coderivation
//! identities for left and right multiplication by odd elements.

pub mod bernoulli;
pub mod exterior;
pub mod fields;
pub mod koszul;
pub mod phi;
pub mod uea;

use thiserror::Error;

pub use bernoulli::{bernoulli, fc_coefficient, BernoulliSeries};
pub use exterior::{wedge_basis, ExteriorElement, Presentation};
pub use fields::{formal_field, FormalVectorField};
pub use koszul::{coderivation_left, coderivation_right, verify_koszul_identities, worked_example, KoszulReport, KoszulRow, WorkedExample};
pub use phi::{phi_c_correspondence, verify_phi, PhiReport, PhiRow, SymElement};
pub use uea::{Enveloping, Monomial, UeaElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbwError {
    #[error("no generator with index {0}")]
    UnknownGenerator(usize),
    #[error("`{0}` is not odd")]
    NotOdd(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("expected a vector of length {0}, got {1}")]
    Dimension(usize, usize),
    #[error("series parameter must be 0, 1 or -1, got {0}")]
    Series(i64),
    #[error("the bracket does not satisfy the super Jacobi identity")]
    NotLie,
}
