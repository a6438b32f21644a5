use super::{CliffordError, CliffordRep};
use crate::exactla::{q, Matrix, Parity, Span, Q};
use crate::liesuper::examples::wedge_matrix;
use crate::liesuper::LieSuperalgebra;
use num_traits::{One, Zero};

/// `spin(r,s)` spanned by `A_ij = ¼[γ_i, γ_j]` (`i < j`), with `ξ*(A_ij) =
/// e_i ∧ e_j` acting on vectors by `(a∧b)(x) = ⟨a,x⟩b - ⟨b,x⟩a`.
#[derive(Clone, Debug)]
pub struct SpinLieAlgebra {
    rep: CliffordRep,
    pairs: Vec<(usize, usize)>,
    generators: Vec<Matrix>,
    vector_action: Vec<Matrix>,
    spin_span: Span,
    so_span: Span,
}

fn flat_span(ms: &[Matrix]) -> Span {
    let f: Vec<Vec<Q>> = ms.iter().map(|m| m.flatten()).collect();
    Span::from_vectors(f.first().map_or(0, |x| x.len()), f.iter())
}

fn combine(ms: &[Matrix], c: &[Q]) -> Matrix {
    let (r, k) = (ms[0].nrows(), ms[0].ncols());
    ms.iter()
        .zip(c)
        .filter(|(_, a)| !a.is_zero())
        .fold(Matrix::zeros(r, k), |acc, (m, a)| acc.lin_comb(&Q::one(), m, a))
}

impl SpinLieAlgebra {
    pub fn new(rep: CliffordRep) -> Self {
        let n = rep.signature().dim();
        let eta = rep.signature().metric();
        let mut pairs = Vec::new();
        let mut generators = Vec::new();
        let mut vector_action = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
                generators.push(rep.gamma(i).mul(rep.gamma(j)).scale(&q(1, 2)));
                vector_action.push(wedge_matrix(&eta, i, j));
            }
        }
        let spin_span = flat_span(&generators);
        let so_span = flat_span(&vector_action);
        SpinLieAlgebra {
            rep,
            pairs,
            generators,
            vector_action,
            spin_span,
            so_span,
        }
    }

    pub fn rep(&self) -> &CliffordRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_index(&self, i: usize, j: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (i, j))
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn vector_action(&self) -> &[Matrix] {
        &self.vector_action
    }

    /// Indices of `A_{i,i+1}`, which already generate the algebra.
    pub fn chain_generators(&self) -> Vec<usize> {
        let n = self.rep.signature().dim();
        (0..n.saturating_sub(1)).map(|i| self.pair_index(i, i + 1).unwrap()).collect()
    }

    /// Spin matrix of `Σ c_k A_k`.
    pub fn spin_element(&self, c: &[Q]) -> Matrix {
        combine(&self.generators, c)
    }

    pub fn so_element(&self, c: &[Q]) -> Matrix {
        combine(&self.vector_action, c)
    }

    pub fn spin_coordinates(&self, m: &Matrix) -> Result<Vec<Q>, CliffordError> {
        if self.generators.is_empty() {
            return if m.is_zero() { Ok(Vec::new()) } else { Err(CliffordError::NotInSpin) };
        }
        self.spin_span.coordinates(&m.flatten()).ok_or(CliffordError::NotInSpin)
    }

    pub fn so_coordinates(&self, m: &Matrix) -> Result<Vec<Q>, CliffordError> {
        if self.vector_action.is_empty() {
            return if m.is_zero() { Ok(Vec::new()) } else { Err(CliffordError::NotInSpin) };
        }
        self.so_span.coordinates(&m.flatten()).ok_or(CliffordError::NotInSpin)
    }

    /// `ξ*`: spin matrix to `so(r,s)` matrix.
    pub fn xi_star(&self, m: &Matrix) -> Result<Matrix, CliffordError> {
        let c = self.spin_coordinates(m)?;
        let n = self.rep.signature().dim();
        Ok(if c.is_empty() { Matrix::zeros(n, n) } else { self.so_element(&c) })
    }

    pub fn xi_star_inv(&self, m: &Matrix) -> Result<Matrix, CliffordError> {
        let c = self.so_coordinates(m)?;
        let d = self.rep.spin_dim();
        Ok(if c.is_empty() { Matrix::zeros(d, d) } else { self.spin_element(&c) })
    }

    /// Bracket preservation of `ξ*` on all generator pairs and the
    /// compatibility `[A, γ(v)] = γ(ξ*(A) v)`.
    pub fn check_isomorphism(&self) -> bool {
        let k = self.dim();
        for a in 0..k {
            for b in a + 1..k {
                let lhs = self.xi_star(&self.generators[a].commutator(&self.generators[b]));
                let rhs = self.vector_action[a].commutator(&self.vector_action[b]);
                if lhs.as_ref() != Ok(&rhs) {
                    return false;
                }
            }
            for (i, g) in self.rep.gammas().iter().enumerate() {
                let lhs = self.generators[a].commutator(g);
                let col: Vec<Q> = (0..self.rep.gammas().len()).map(|j| self.vector_action[a].get(j, i)).collect();
                if lhs != self.rep.vector(&col) {
                    return false;
                }
            }
        }
        true
    }

    /// `so(r,s)` as a Lie algebra on the wedge basis, labels `M{i}_{j}`.
    pub fn so_algebra(&self) -> LieSuperalgebra {
        let basis = self
            .pairs
            .iter()
            .zip(&self.vector_action)
            .map(|(&(i, j), m)| (format!("M{i}_{j}"), Parity::Even, m.clone()))
            .collect();
        LieSuperalgebra::from_matrices(basis).expect("so(r,s) closes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Signature;

    #[test]
    fn xi_star_on_generator() {
        let sp = SpinLieAlgebra::new(CliffordRep::build(Signature::new(1, 2)).unwrap());
        let a = sp.rep().gamma(0).commutator(sp.rep().gamma(1)).scale(&q(1, 4));
        let x = sp.xi_star(&a).unwrap();
        assert_eq!(x, wedge_matrix(&[1, -1, -1], 0, 1));
        assert_eq!(sp.xi_star_inv(&x).unwrap(), a);
        assert!(sp.xi_star(&Matrix::zeros(2, 2)).unwrap().is_zero());
        assert!(sp.xi_star(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn isomorphism_in_several_signatures() {
        for (r, s) in [(1, 2), (2, 1), (3, 0), (1, 3), (3, 2), (0, 5)] {
            let sp = SpinLieAlgebra::new(CliffordRep::build(Signature::new(r, s)).unwrap());
            assert!(sp.check_isomorphism(), "({r},{s})");
            assert!(sp.so_algebra().check_super_jacobi().pass);
        }
    }
}
