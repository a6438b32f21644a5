//! Exact linear algebra over the rationals, with a `Z/2` grading.

pub mod map;
pub mod matrix;
pub mod rational;
pub mod solve;
pub mod space;
pub mod tensor;

use thiserror::Error;

pub use map::GradedMap;
pub use matrix::Matrix;
pub use rational::{fmt_q, parse_q, q, qi, Q};
pub use solve::{equivariant_maps, equivariant_subspace, intertwiners, kernel, nullspace, rank, solve_homogeneous, sparse_row, Echelon, SparseRow, Span};
pub use space::{koszul, GradedSpace, Parity};
pub use tensor::{dual_action, tensor_action, tensor_space, TensorElement, Variance};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("entry ({row}, {col}) breaks the block structure of a {parity} map")]
    ParityViolation { row: usize, col: usize, parity: Parity },
    #[error("generator lists differ in length: {0} vs {1}")]
    GeneratorCount(usize, usize),
    #[error("no generators supplied")]
    NoGenerators,
    #[error("generator {0} acts with different parities on different factors")]
    MixedGeneratorParity(usize),
}
