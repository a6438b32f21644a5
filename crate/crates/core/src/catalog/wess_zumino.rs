//! Superconformal algebra `g0 = R·1 + so(2,4)`, `g1 = S + S'` with `S`, `S'`
//! two copies of the real spin module of `so(1,3)`. The second copy is
//! rescaled by `√2` so every structure constant is rational.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{CatalogEntry, CatalogError};
use crate::clifford::{gamma_transfer, invariant_bilinear_forms, CliffordRep, FormTarget, Signature};
use crate::exactla::{fmt_q, nullspace, q, qi, GradedSpace, Matrix, Parity, Q};
use crate::killing::{odd_bracket_space, OddAnsatz};
use crate::liesuper::{LieSuperalgebra, ReductiveDecomposition, SuperBilinearForm, Symmetry};

const N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WessZuminoVariant {
    /// Odd-odd coefficients as listed, carried through the rescaling.
    Literal,
    /// Odd-odd coefficients solved from the super-Jacobi identity.
    Calibrated,
}

struct Setup {
    rep: CliffordRep,
    pairs: Vec<(usize, usize)>,
    /// Admissible skew form with Clifford multiplication skew.
    beta: Matrix,
    j: Matrix,
    g0: LieSuperalgebra,
    rho: Vec<Matrix>,
}

fn block(m: &Matrix, r0: usize, c0: usize) -> Matrix {
    Matrix::from_entries(2 * N, 2 * N, m.entries().map(|(r, c, v)| (r + r0, c + c0, v.clone())))
}

fn diag(a: &Matrix, b: &Matrix) -> Matrix {
    block(a, 0, 0).add(&block(b, N, N))
}

impl Setup {
    fn new() -> Result<Setup, CatalogError> {
        let rep = CliffordRep::build(Signature::new(1, 3))?;
        if rep.spin_dim() != N {
            return Err(CatalogError::Construction("spin module of so(1,3) is not four dimensional".into()));
        }
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let j = rep.volume();
        if j.mul(&j) != Matrix::scalar(N, -Q::one()) {
            return Err(CatalogError::Construction("volume element is not a complex structure".into()));
        }
        let beta = admissible_beta(&rep)?;
        let half = q(1, 2);
        let mut basis = vec![
            ("one".to_string(), Parity::Even, diag(&j, &j.neg())),
            ("d".to_string(), Parity::Even, diag(&Matrix::scalar(N, half.clone()), &Matrix::scalar(N, -half.clone()))),
        ];
        for &(a, b) in &pairs {
            let m = rep.product(&[a, b]).scale(&half);
            basis.push((format!("M{a}_{b}"), Parity::Even, diag(&m, &m)));
        }
        for i in 0..4 {
            basis.push((format!("P{i}"), Parity::Even, block(&rep.gamma(i).scale(&half), 0, N)));
        }
        for i in 0..4 {
            basis.push((format!("K{i}"), Parity::Even, block(&rep.gamma(i).neg(), N, 0)));
        }
        let rho: Vec<Matrix> = basis.iter().map(|b| b.2.clone()).collect();
        let g0 = LieSuperalgebra::from_matrices(basis)?;
        Ok(Setup { rep, pairs, beta, j, g0, rho })
    }

    fn idx_p(&self, i: usize) -> usize {
        2 + self.pairs.len() + i
    }

    fn idx_k(&self, i: usize) -> usize {
        6 + self.pairs.len() + i
    }

    fn scalar(&self, m: Matrix) -> Result<SuperBilinearForm, CatalogError> {
        Ok(SuperBilinearForm::scalar(crate::clifford::spinor_space(N), m, Symmetry::None)?)
    }

    /// `Γ^1_β → P` on `S∨S`, `Γ^1_β → K` on `S'∨S'`, and on `S⊗S'`:
    /// `Γ^0_{β_J} → 1`, `Γ^0_β → d`, `Γ^2_β → M`.
    fn pieces(&self) -> Result<Vec<OddAnsatz>, CatalogError> {
        let b = self.scalar(self.beta.clone())?;
        let g1 = gamma_transfer(&b, 1, &self.rep)?;
        let g2 = gamma_transfer(&b, 2, &self.rep)?;
        let mixed = |m: &Matrix| block(m, 0, N).add(&block(&m.transpose(), N, 0));
        let bj = self.j.transpose().mul(&self.beta);
        Ok(vec![
            OddAnsatz {
                name: "S.S->V".into(),
                comps: (0..4).map(|i| (self.idx_p(i), block(g1.component(i), 0, 0))).collect(),
            },
            OddAnsatz {
                name: "S'.S'->V'".into(),
                comps: (0..4).map(|i| (self.idx_k(i), block(g1.component(i), N, N))).collect(),
            },
            OddAnsatz {
                name: "S.S'->1".into(),
                comps: vec![(0, mixed(&bj))],
            },
            OddAnsatz {
                name: "S.S'->d".into(),
                comps: vec![(1, mixed(&self.beta))],
            },
            OddAnsatz {
                name: "S.S'->so(1,3)".into(),
                comps: (0..self.pairs.len()).map(|k| (2 + k, mixed(g2.component(k)))).collect(),
            },
        ])
    }
}

/// The invariant skew form on `S` for which Clifford multiplication by a
/// vector is skew; unique up to scale.
fn admissible_beta(rep: &CliffordRep) -> Result<Matrix, CatalogError> {
    let forms: Vec<Matrix> = invariant_bilinear_forms(rep, FormTarget::Scalar, &[Symmetry::None]).iter().map(|f| f.component(0).clone()).collect();
    // columns: forms; rows: entries of γ_iᵀβ + βγ_i and β + βᵀ
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let conds = |b: &Matrix| -> Vec<Q> {
        let mut v = b.add(&b.transpose()).flatten();
        for i in 0..4 {
            let g = rep.gamma(i);
            v.extend(g.transpose().mul(b).add(&b.mul(g)).flatten());
        }
        v
    };
    let cols: Vec<Vec<Q>> = forms.iter().map(conds).collect();
    for r in 0..cols.first().map_or(0, |c| c.len()) {
        rows.push(cols.iter().map(|c| c[r].clone()).collect());
    }
    let ker = nullspace(&Matrix::from_dense(rows));
    if ker.len() != 1 {
        return Err(CatalogError::Construction(format!("{} admissible skew forms, expected 1", ker.len())));
    }
    let mut beta = Matrix::zeros(N, N);
    for (c, f) in ker[0].iter().zip(&forms) {
        beta = beta.lin_comb(&Q::one(), f, c);
    }
    Ok(beta)
}

/// Listed coefficients in the rescaled basis: `[S,S] = rΓ^1`, `[S',S'] =
/// -2rΓ^1`, and `√2·(-3/(2√2), -1/√2, 1/(4√2)) r` on `S⊗S'`.
pub fn wess_zumino_literal_coefficients(r: &Q) -> Vec<Q> {
    [qi(1), qi(-2), q(-3, 2), qi(-1), q(1, 4)].iter().map(|c| c * r).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WessZuminoCalibration {
    pub schema: u32,
    pub pieces: Vec<String>,
    /// Listed coefficients for `r = 1`.
    pub literal: Vec<String>,
    pub solutions: usize,
    /// Solved coefficients normalized to `1` on the first piece.
    pub solved: Option<Vec<String>>,
    /// Solved divided by listed, piece by piece.
    pub ratios: Option<Vec<String>>,
    pub literal_is_solution: bool,
}

fn solve(s: &Setup) -> Result<(WessZuminoCalibration, Option<Vec<Q>>), CatalogError> {
    let pieces = s.pieces()?;
    let sol = odd_bracket_space(&s.g0, &s.rho, &pieces);
    let lit = wess_zumino_literal_coefficients(&Q::one());
    let solved = (sol.len() == 1 && !sol[0][0].is_zero()).then(|| {
        let c = sol[0][0].clone();
        sol[0].iter().map(|x| x / &c).collect::<Vec<Q>>()
    });
    let ratios = solved.as_ref().map(|v| v.iter().zip(&lit).map(|(a, b)| fmt_q(&(a / b))).collect());
    Ok((
        WessZuminoCalibration {
            schema: 1,
            pieces: pieces.iter().map(|p| p.name.clone()).collect(),
            literal: lit.iter().map(fmt_q).collect(),
            solutions: sol.len(),
            solved: solved.as_ref().map(|v| v.iter().map(fmt_q).collect()),
            literal_is_solution: solved.as_ref() == Some(&lit),
            ratios,
        },
        solved,
    ))
}

pub fn wess_zumino_calibration() -> Result<WessZuminoCalibration, CatalogError> {
    Ok(solve(&Setup::new()?)?.0)
}

fn assemble(s: &Setup, coeffs: &[Q]) -> Result<ReductiveDecomposition, CatalogError> {
    let g0 = &s.g0;
    let d0 = g0.dim();
    let mut basis: Vec<(String, Parity)> = (0..d0).map(|i| (g0.label(i).to_string(), Parity::Even)).collect();
    basis.extend((0..N).map(|a| (format!("s{a}"), Parity::Odd)));
    basis.extend((0..N).map(|a| (format!("t{a}"), Parity::Odd)));
    let space = GradedSpace::new(basis).expect("distinct labels");
    let mut br: Vec<(usize, usize, Vec<(usize, Q)>)> = g0.upper_table().iter().map(|(&(i, j), v)| (i, j, v.clone())).collect();
    for (x, r) in s.rho.iter().enumerate() {
        for b in 0..2 * N {
            let col: Vec<(usize, Q)> = (0..2 * N).map(|l| (d0 + l, r.get(l, b))).filter(|e| !e.1.is_zero()).collect();
            br.push((x, d0 + b, col));
        }
    }
    let mut total = vec![Matrix::zeros(2 * N, 2 * N); d0];
    for (p, c) in s.pieces()?.iter().zip(coeffs) {
        for (k, m) in &p.comps {
            total[*k] = total[*k].lin_comb(&Q::one(), m, c);
        }
    }
    for a in 0..2 * N {
        for b in a..2 * N {
            let col: Vec<(usize, Q)> = (0..d0).map(|k| (k, total[k].get(a, b))).filter(|e| !e.1.is_zero()).collect();
            br.push((d0 + a, d0 + b, col));
        }
    }
    let g = LieSuperalgebra::new(space, br)?;
    let h: Vec<usize> = (0..d0).collect();
    let m: Vec<usize> = (d0..g.dim()).collect();
    Ok(ReductiveDecomposition::new(g, h, m)?)
}

pub fn wess_zumino_variant(r: &Q, variant: WessZuminoVariant) -> Result<CatalogEntry, CatalogError> {
    if r.is_zero() {
        return Err(CatalogError::Construction("r must be nonzero".into()));
    }
    let s = Setup::new()?;
    let (cal, solved) = solve(&s)?;
    let (coeffs, name) = match variant {
        WessZuminoVariant::Literal => (wess_zumino_literal_coefficients(r), "wess-zumino-literal"),
        WessZuminoVariant::Calibrated => {
            let c = solved.ok_or_else(|| CatalogError::Construction(format!("{} odd-odd solutions", cal.solutions)))?;
            (c.iter().map(|x| x * r).collect(), "wess-zumino")
        }
    };
    let d = assemble(&s, &coeffs)?;
    let notes = format!(
        "superconformal algebra, r = {}; S' rescaled by sqrt 2, so [P,(s,t)] = (1/2 P.t, 0) and [K,(s,t)] = (0, -K.s); odd-odd pieces {} with coefficients {}; h = g0, m = g1",
        fmt_q(r),
        cal.pieces.join(","),
        coeffs.iter().map(fmt_q).collect::<Vec<_>>().join(",")
    );
    Ok(CatalogEntry {
        name: name.into(),
        decomposition: d,
        adapted: None,
        flux: None,
        notes,
    })
}

pub fn build_wess_zumino(r: &Q) -> Result<CatalogEntry, CatalogError> {
    wess_zumino_variant(r, WessZuminoVariant::Calibrated)
}

/// Twistor spinor data `v ↦ -½ (v·s', 0)` in the rescaled basis: one
/// `4 × 4` matrix per basis spinor `s'`, column `i` the image of `e_i`.
pub fn twistor_spinor_maps() -> Result<Vec<Matrix>, CatalogError> {
    let rep = CliffordRep::build(Signature::new(1, 3))?;
    Ok((0..N)
        .map(|b| {
            let mut m = Matrix::zeros(N, 4);
            for i in 0..4 {
                for (r, c, v) in rep.gamma(i).entries() {
                    if c == b {
                        m.set(r, i, v * q(-1, 2));
                    }
                }
            }
            m
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_part_is_a_central_extension() {
        let s = Setup::new().unwrap();
        assert_eq!(s.g0.dim(), 16);
        assert!(s.g0.check_super_jacobi().pass);
        for i in 0..16 {
            assert!(s.g0.bracket_basis(0, i).is_empty());
        }
    }

    #[test]
    fn calibration_is_unique_and_differs_from_listing() {
        let c = wess_zumino_calibration().unwrap();
        assert_eq!(c.solutions, 1);
        assert_eq!(c.solved.unwrap(), ["1", "-1/2", "-3/4", "-1/2", "1/4"]);
        assert!(!c.literal_is_solution);
    }

    #[test]
    fn admissible_basis_types() {
        let s = Setup::new().unwrap();
        let bj = s.j.transpose().mul(&s.beta);
        assert_eq!(s.beta.transpose(), s.beta.neg());
        assert_eq!(bj.transpose(), bj.neg());
        for i in 0..4 {
            let g = s.rep.gamma(i);
            assert_eq!(g.transpose().mul(&s.beta), s.beta.mul(g).neg());
            assert_eq!(g.transpose().mul(&bj), bj.mul(g));
        }
    }

    #[test]
    fn entries_and_jacobi() {
        let e = build_wess_zumino(&qi(3)).unwrap();
        let g = e.algebra();
        assert_eq!((g.even_indices().len(), g.odd_indices().len()), (16, 8));
        assert!(g.check_super_jacobi().pass);
        let one = g.index("one").unwrap();
        let s0 = g.index("s0").unwrap();
        assert!(g.bracket_basis(one, s0).iter().all(|(k, _)| g.parity(*k) == Parity::Odd));
        assert!(!g.bracket_basis(one, s0).is_empty());
        let lit = wess_zumino_variant(&qi(1), WessZuminoVariant::Literal).unwrap();
        assert!(!lit.algebra().check_super_jacobi().pass);
    }

    #[test]
    fn zero_r_is_rejected() {
        assert!(build_wess_zumino(&Q::zero()).is_err());
    }
}
