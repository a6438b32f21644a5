//! Homogeneous linear maps between graded spaces.

use super::matrix::Matrix;
use super::space::{GradedSpace, Parity};
use super::ExactError;

/// A homogeneous linear map. The matrix is `codomain.len() x domain.len()`
/// and respects the parity block structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    domain: GradedSpace,
    codomain: GradedSpace,
    matrix: Matrix,
    parity: Parity,
}

impl GradedMap {
    pub fn new(domain: GradedSpace, codomain: GradedSpace, matrix: Matrix, parity: Parity) -> Result<Self, ExactError> {
        if matrix.nrows() != codomain.len() || matrix.ncols() != domain.len() {
            return Err(ExactError::DimensionMismatch {
                expected: (codomain.len(), domain.len()),
                found: (matrix.nrows(), matrix.ncols()),
            });
        }
        for (i, j, _) in matrix.entries() {
            if codomain.parity(i) != domain.parity(j) + parity {
                return Err(ExactError::ParityViolation {
                    row: i,
                    col: j,
                    parity,
                });
            }
        }
        Ok(GradedMap {
            domain,
            codomain,
            matrix,
            parity,
        })
    }

    /// Endomorphism of `space`.
    pub fn endo(space: &GradedSpace, matrix: Matrix, parity: Parity) -> Result<Self, ExactError> {
        Self::new(space.clone(), space.clone(), matrix, parity)
    }

    /// Parity inferred from the first nonzero entry; zero maps are even.
    pub fn infer(domain: GradedSpace, codomain: GradedSpace, matrix: Matrix) -> Result<Self, ExactError> {
        let parity = matrix
            .entries()
            .next()
            .map(|(i, j, _)| codomain.parity(i) + domain.parity(j))
            .unwrap_or(Parity::Even);
        Self::new(domain, codomain, matrix, parity)
    }

    pub fn zero(domain: GradedSpace, codomain: GradedSpace) -> Self {
        let m = Matrix::zeros(codomain.len(), domain.len());
        GradedMap {
            domain,
            codomain,
            matrix: m,
            parity: Parity::Even,
        }
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mixed() -> GradedSpace {
        GradedSpace::new(vec![("x".into(), Parity::Even), ("s".into(), Parity::Odd)]).unwrap()
    }

    #[test]
    fn block_structure_is_enforced() {
        let v = mixed();
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(GradedMap::endo(&v, swap.clone(), Parity::Odd).is_ok());
        assert!(matches!(
            GradedMap::endo(&v, swap, Parity::Even),
            Err(ExactError::ParityViolation { .. })
        ));
        let diag = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
        assert_eq!(GradedMap::infer(v.clone(), v.clone(), diag).unwrap().parity(), Parity::Even);
        assert!(matches!(
            GradedMap::endo(&v, Matrix::identity(3), Parity::Even),
            Err(ExactError::DimensionMismatch { .. })
        ));
    }
}
