//! Lie superalgebras, reductive decompositions, representations and
//! invariant forms.

pub mod algebra;
pub mod decomposition;
pub mod examples;
pub mod forms;
pub mod json;
pub mod rep;

use thiserror::Error;

use crate::exactla::ExactError;

pub use algebra::{JacobiFailure, JacobiReport, LieSuperalgebra, SVec};
pub use decomposition::{invariant_tensors, ReductiveDecomposition, ReductiveReport};
pub use forms::{scalar_target, symmetrize, EquivarianceReport, SuperBilinearForm, Symmetry};
pub use rep::{RepReport, Representation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("basis index out of range")]
    IndexOutOfRange,
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),
    #[error("[{left}, {right}] has a component along `{result}` of the wrong parity")]
    BracketParity { left: String, right: String, result: String },
    #[error("[{0}, {0}] must vanish for an even element")]
    Antisymmetry(String),
    #[error("bracket [{0}, {1}] given twice with different values")]
    InconsistentBracket(String, String),
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("basis change mixes parities")]
    InhomogeneousBasis,
    #[error("span not closed under the bracket at [{0}, {1}]")]
    NotClosed(String, String),
    #[error("dimension mismatch: expected {0}, found {1}")]
    Dimension(usize, usize),
    #[error("action of `{0}` has the wrong parity")]
    ActionParity(String),
    #[error("super-Jacobi identity fails")]
    JacobiFails,
    #[error("index sets do not partition the basis")]
    BadPartition,
    #[error("decomposition is not reductive")]
    NotReductive,
    #[error("bilinear form is not homogeneous")]
    InhomogeneousForm,
    #[error("bilinear form lacks the declared symmetry")]
    SymmetryViolation,
    #[error("malformed algebra data: {0}")]
    Malformed(String),
}
