//! Small reference algebras used by tests and by the catalog.

use super::algebra::sparse;
use super::{LieError, LieSuperalgebra};
use crate::exactla::{qi, GradedSpace, Matrix, Parity, Span, Q};

pub fn abelian(even: usize, odd: usize) -> LieSuperalgebra {
    let sp = GradedSpace::even("x", even)
        .direct_sum(&GradedSpace::odd("a", odd))
        .expect("distinct prefixes");
    LieSuperalgebra::abelian(sp)
}

/// `sl(2)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieSuperalgebra {
    let sp = GradedSpace::new(["h", "e", "f"].iter().map(|l| (l.to_string(), Parity::Even)).collect()).unwrap();
    LieSuperalgebra::new(
        sp,
        vec![
            (0, 1, vec![(1, qi(2))]),
            (0, 2, vec![(2, qi(-2))]),
            (1, 2, vec![(0, qi(1))]),
        ],
    )
    .unwrap()
}

/// `so(3)` with `[L_i, L_j] = ε_ijk L_k`.
pub fn so3() -> LieSuperalgebra {
    let sp = GradedSpace::even("L", 3);
    LieSuperalgebra::new(
        sp,
        vec![
            (0, 1, vec![(2, qi(1))]),
            (1, 2, vec![(0, qi(1))]),
            (2, 0, vec![(1, qi(1))]),
        ],
    )
    .unwrap()
}

/// The matrix `E_ij - E_ji`-type generator of `so(η)`: `x ↦ η(e_i,x)e_j -
/// η(e_j,x)e_i`, i.e. the wedge `e_i ∧ e_j` acting on vectors.
pub fn wedge_matrix(eta: &[i64], i: usize, j: usize) -> Matrix {
    let n = eta.len();
    Matrix::from_entries(n, n, vec![(j, i, qi(eta[i])), (i, j, qi(-eta[j]))])
}

/// `so(η)` for a diagonal metric, basis `M_ij = e_i∧e_j` (`i<j`).
pub fn so_diag(eta: &[i64]) -> LieSuperalgebra {
    let n = eta.len();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            basis.push((format!("M{i}{j}"), Parity::Even, wedge_matrix(eta, i, j)));
        }
    }
    LieSuperalgebra::from_matrices(basis).expect("so(η) closes")
}

/// Symplectic form `Ω` on `R^{2n}` in Darboux order `(p_1..p_n, q_1..q_n)`.
pub fn omega(n: usize) -> Matrix {
    let mut e = Vec::new();
    for i in 0..n {
        e.push((i, n + i, qi(1)));
        e.push((n + i, i, qi(-1)));
    }
    Matrix::from_entries(2 * n, 2 * n, e)
}

/// `osp(1|2n)`: even part `sp(2n)` acting on `R^{2n}`, odd bracket
/// `[u,v] = (u vᵀ + v uᵀ) Ω`.
pub fn osp1(n: usize) -> Result<LieSuperalgebra, LieError> {
    let d = 2 * n;
    let om = omega(n);
    // sp(2n) basis: S Ω for symmetric S
    let mut even = Vec::new();
    for a in 0..d {
        for b in a..d {
            let s = Matrix::from_entries(d, d, if a == b { vec![(a, a, qi(1))] } else { vec![(a, b, qi(1)), (b, a, qi(1))] });
            even.push((format!("X{a}_{b}"), s.mul(&om)));
        }
    }
    let ne = even.len();
    let flat: Vec<Vec<Q>> = even.iter().map(|e| e.1.flatten()).collect();
    let span = Span::from_vectors(d * d, flat.iter());
    let mut labels: Vec<(String, Parity)> = even.iter().map(|e| (e.0.clone(), Parity::Even)).collect();
    labels.extend((0..d).map(|i| (format!("a{i}"), Parity::Odd)));
    let space = GradedSpace::new(labels)?;
    let mut br = Vec::new();
    for i in 0..ne {
        for j in i..ne {
            let c = even[i].1.commutator(&even[j].1);
            let co = span.coordinates(&c.flatten()).ok_or(LieError::NotClosed(even[i].0.clone(), even[j].0.clone()))?;
            br.push((i, j, sparse(&co)));
        }
        for u in 0..d {
            let col: Vec<(usize, Q)> = (0..d)
                .map(|r| (ne + r, even[i].1.get(r, u)))
                .filter(|e| !num_traits::Zero::is_zero(&e.1))
                .collect();
            br.push((i, ne + u, col));
        }
    }
    for u in 0..d {
        for v in u..d {
            let s = Matrix::from_entries(d, d, vec![(u, v, qi(1)), (v, u, qi(1))]);
            let x = s.mul(&om);
            let co = span.coordinates(&x.flatten()).expect("symmetric times Ω lies in sp");
            br.push((ne + u, ne + v, sparse(&co)));
        }
    }
    LieSuperalgebra::new(space, br)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_algebras_pass_jacobi() {
        for g in [sl2(), so3(), so_diag(&[1, 1, -1]), abelian(2, 3)] {
            assert!(g.check_super_jacobi().pass);
            assert!(g.check_antisymmetry());
        }
    }

    #[test]
    fn osp14_is_a_superalgebra() {
        let g = osp1(2).unwrap();
        assert_eq!(g.space().dim(), (10, 4));
        let r = g.check_super_jacobi();
        assert!(r.pass, "{:?}", r.first);
    }
}
