//! Real Clifford modules, spin algebras and spinor bilinear forms.

pub mod forms;
pub mod gamma;
pub mod spin;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::liesuper::LieError;

pub use forms::{gamma_transfer, invariant_bilinear_forms, lambda_action, lambda_basis, schur_algebra, spinor_space, FormTarget};
pub use gamma::{minimal_dimension, CliffordRep, IrreducibilityReport};
pub use spin::SpinLieAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("signature (0,0) has no generators")]
    EmptySignature,
    #[error("matrices violate the Clifford relations")]
    Relations,
    #[error("element is not in the span of the spin generators")]
    NotInSpin,
    #[error("degree {0} exceeds the dimension {1}")]
    Degree(usize, usize),
    #[error("transfer map is not equivariant")]
    NotEquivariant,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `R^{r,s}`: `r` directions of norm +1 followed by `s` of norm -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub r: usize,
    pub s: usize,
}

impl Signature {
    pub fn new(r: usize, s: usize) -> Self {
        Signature { r, s }
    }

    pub fn dim(self) -> usize {
        self.r + self.s
    }

    pub fn eta(self, i: usize) -> i64 {
        if i < self.r {
            1
        } else {
            -1
        }
    }

    pub fn metric(self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.eta(i)).collect()
    }

    /// `r - s mod 8`, reported in `1..=8`.
    pub fn class(self) -> usize {
        let c = (self.r as i64 - self.s as i64).rem_euclid(8) as usize;
        if c == 0 {
            8
        } else {
            c
        }
    }

    /// Whether the Clifford algebra is a sum of two simple factors.
    pub fn is_non_simple(self) -> bool {
        (self.s as i64 - self.r as i64).rem_euclid(4) == 1
    }

    pub fn parse(text: &str) -> Option<Signature> {
        let (a, b) = text.split_once(',')?;
        Some(Signature::new(a.trim().parse().ok()?, b.trim().parse().ok()?))
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}
