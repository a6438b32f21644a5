//! Freund–Rubin backgrounds `AdS4 x S7` and `AdS7 x S4`: the symmetric
//! pair `(so(2,3) + so(0,8), so(1,3) + so(0,7))` (resp. the `7,4`
//! version) with the 32-dimensional spin module as odd part.

use num_traits::{One, Zero};
use serde::Serialize;

use super::{CatalogEntry, CatalogError};
use crate::clifford::{invariant_bilinear_forms, CliffordRep, FormTarget, Signature};
use crate::exactla::{fmt_q, q, qi, GradedSpace, Matrix, Parity, Q};
use crate::killing::{odd_bracket_space, supergravity_connection_term, AdaptedSupersymmetryAlgebra, Conventions, FluxForm, OddAnsatz};
use crate::liesuper::examples::wedge_matrix;
use crate::liesuper::{LieSuperalgebra, ReductiveDecomposition, Representation, Symmetry};

const N: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FreundRubin {
    AdS4xS7,
    AdS7xS4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FreundRubinVariant {
    /// `[v,Q] = -½ I v·Q` on the four-dimensional factor and `½ I w·Q` on
    /// the seven-dimensional one.
    Literal,
    /// `[m0, S]` from the supergravity connection with flux `3·vol`.
    Calibrated,
}

impl FreundRubin {
    /// Orthonormal indices of the anti-de Sitter and sphere factors.
    fn factors(self) -> (Vec<usize>, Vec<usize>) {
        match self {
            FreundRubin::AdS4xS7 => ((0..4).collect(), (4..11).collect()),
            FreundRubin::AdS7xS4 => ((0..7).collect(), (7..11).collect()),
        }
    }

    /// Indices of the four-dimensional factor carrying the flux.
    fn four(self) -> Vec<usize> {
        match self {
            FreundRubin::AdS4xS7 => (0..4).collect(),
            FreundRubin::AdS7xS4 => (7..11).collect(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FreundRubin::AdS4xS7 => "freund-rubin-ads4xs7",
            FreundRubin::AdS7xS4 => "freund-rubin-ads7xs4",
        }
    }
}

fn eta11() -> Vec<i64> {
    let mut v = vec![-1; 11];
    v[0] = 1;
    v
}

struct Setup {
    which: FreundRubin,
    rep: CliffordRep,
    pairs: Vec<(usize, usize)>,
    beta: Matrix,
    /// `dvol^♯` of the flux factor, indices raised with `η`.
    i4: Matrix,
}

impl Setup {
    fn new(which: FreundRubin) -> Result<Setup, CatalogError> {
        let rep = CliffordRep::build(Signature::new(1, 10))?;
        let (a, s) = which.factors();
        let mut pairs = Vec::new();
        for f in [&a, &s] {
            for (x, &i) in f.iter().enumerate() {
                for &j in &f[x + 1..] {
                    pairs.push((i, j));
                }
            }
        }
        let forms = invariant_bilinear_forms(&rep, FormTarget::Scalar, &[Symmetry::None]);
        let beta = forms.first().ok_or_else(|| CatalogError::Construction("no invariant scalar form".into()))?.component(0).clone();
        let four = which.four();
        let raise: i64 = four.iter().map(|&i| rep.eta(i)).product();
        let i4 = rep.product(&four).scale(&qi(raise));
        Ok(Setup { which, rep, pairs, beta, i4 })
    }

    fn h_len(&self) -> usize {
        self.pairs.len()
    }

    fn e(&self, i: usize) -> usize {
        self.h_len() + i
    }

    fn labels(&self) -> Vec<String> {
        let mut l: Vec<String> = self.pairs.iter().map(|(i, j)| format!("M{i}_{j}")).collect();
        l.extend((0..11).map(|i| format!("e{i}")));
        l
    }

    fn in_ads(&self, i: usize) -> bool {
        self.which.factors().0.contains(&i)
    }

    fn flux(&self) -> FluxForm {
        let f = self.which.four();
        let mut out = FluxForm::zero(11);
        out.add_term([f[0], f[1], f[2], f[3]], qi(3));
        out
    }

    /// `so(η)` pieces plus `[e_a, e_b] = λ e_a∧e_b` inside each factor.
    fn even(&self, lambda_ads: &Q, lambda_sphere: &Q) -> Result<LieSuperalgebra, CatalogError> {
        let eta = eta11();
        let space = GradedSpace::new(self.labels().into_iter().map(|l| (l, Parity::Even)).collect()).expect("distinct labels");
        let rot = |i: usize, j: usize| self.pairs.iter().position(|&x| x == (i, j)).expect("pair in a factor");
        let mut br = Vec::new();
        for (a, &(i, j)) in self.pairs.iter().enumerate() {
            let w = wedge_matrix(&eta, i, j);
            for (b, &(k, l)) in self.pairs.iter().enumerate().skip(a + 1) {
                let c = w.commutator(&wedge_matrix(&eta, k, l));
                let col: Vec<(usize, Q)> = self
                    .pairs
                    .iter()
                    .filter_map(|&(x, y)| {
                        let v = c.get(y, x) / qi(eta[x]);
                        (!v.is_zero()).then(|| (rot(x, y), v))
                    })
                    .collect();
                br.push((a, b, col));
            }
            for k in 0..11 {
                let col: Vec<(usize, Q)> = (0..11).filter(|&l| !w.get(l, k).is_zero()).map(|l| (self.e(l), w.get(l, k))).collect();
                br.push((a, self.e(k), col));
            }
        }
        for &(i, j) in &self.pairs {
            let lam = if self.in_ads(i) { lambda_ads } else { lambda_sphere };
            br.push((self.e(i), self.e(j), vec![(rot(i, j), lam.clone())]));
        }
        Ok(LieSuperalgebra::new(space, br)?)
    }

    fn rho_h(&self) -> Vec<Matrix> {
        self.pairs.iter().map(|&(i, j)| self.rep.product(&[i, j]).scale(&q(1, 2))).collect()
    }

    fn literal_m0(&self) -> Vec<Matrix> {
        let four = self.which.four();
        (0..11)
            .map(|i| {
                let c = if four.contains(&i) { q(-1, 2) } else { q(1, 2) };
                self.i4.mul(self.rep.gamma(i)).scale(&c)
            })
            .collect()
    }

    fn sugra_m0(&self, conv: Conventions) -> Result<Vec<Matrix>, CatalogError> {
        let f = self.flux();
        (0..11)
            .map(|k| {
                let x: Vec<Q> = (0..11).map(|r| if r == k { Q::one() } else { Q::zero() }).collect();
                Ok(supergravity_connection_term(&self.rep, &f, &x, conv)?)
            })
            .collect()
    }

    /// `λ` with `[ρ(e_i), ρ(e_j)] = λ ρ(M_ij)` for a pair inside a factor.
    fn lambda_for(&self, m0: &[Matrix], ads: bool) -> Option<Q> {
        let (a, s) = self.which.factors();
        let f = if ads { a } else { s };
        let (i, j) = (f[0], f[1]);
        let lhs = m0[i].commutator(&m0[j]);
        let rhs = self.rep.product(&[i, j]).scale(&q(1, 2));
        let (r, c, v) = rhs.entries().next()?;
        let lam = lhs.get(r, c) / v;
        (lhs == rhs.scale(&lam)).then_some(lam)
    }

    /// `Σ η^{ii} β(s, e_i t) e_i` per factor and `Σ η^{ii}η^{jj} β(s, I e_i e_j t) M_ij`.
    fn pieces(&self) -> Vec<OddAnsatz> {
        let (a, s) = self.which.factors();
        let vec_piece = |name: &str, f: &[usize]| OddAnsatz {
            name: name.into(),
            comps: f.iter().map(|&i| (self.e(i), self.beta.mul(self.rep.gamma(i)).scale(&qi(self.rep.eta(i))))).collect(),
        };
        let rot_piece = |name: &str, ads: bool| OddAnsatz {
            name: name.into(),
            comps: self
                .pairs
                .iter()
                .enumerate()
                .filter(|(_, (i, _))| self.in_ads(*i) == ads)
                .map(|(k, &(i, j))| {
                    let raise = qi(self.rep.eta(i) * self.rep.eta(j));
                    (k, self.beta.mul(&self.i4).mul(&self.rep.product(&[i, j])).scale(&raise))
                })
                .collect(),
        };
        vec![vec_piece("e-ads", &a), vec_piece("e-sphere", &s), rot_piece("M-ads", true), rot_piece("M-sphere", false)]
    }
}

/// Outcome for one choice of `[m0, S]`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FreundRubinChoice {
    /// `None` for the listed brackets.
    pub conventions: Option<Conventions>,
    /// `[e_a, e_b] = λ e_a∧e_b` forced by the representation property.
    pub lambda_ads: Option<String>,
    pub lambda_sphere: Option<String>,
    /// `|λ_ads / λ_sphere|`, the squared ratio of the sphere radius to the
    /// anti-de Sitter radius.
    pub curvature_ratio: Option<String>,
    pub representation: bool,
    pub odd_solutions: usize,
    pub coefficients: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FreundRubinCalibration {
    pub schema: u32,
    pub background: FreundRubin,
    pub pieces: Vec<String>,
    /// Expected `curvature_ratio` for radii in ratio 2:1.
    pub expected_ratio: String,
    pub literal: FreundRubinChoice,
    pub choices: Vec<FreundRubinChoice>,
    pub selected: Vec<Conventions>,
}

struct Solved {
    choice: FreundRubinChoice,
    g0: Option<LieSuperalgebra>,
    coeffs: Option<Vec<Q>>,
}

fn solve(s: &Setup, m0: &[Matrix], conventions: Option<Conventions>) -> Result<Solved, CatalogError> {
    let la = s.lambda_for(m0, true);
    let ls = s.lambda_for(m0, false);
    let mut choice = FreundRubinChoice {
        conventions,
        lambda_ads: la.as_ref().map(fmt_q),
        lambda_sphere: ls.as_ref().map(fmt_q),
        curvature_ratio: None,
        representation: false,
        odd_solutions: 0,
        coefficients: None,
    };
    let (Some(la), Some(ls)) = (la, ls) else {
        return Ok(Solved { choice, g0: None, coeffs: None });
    };
    if !ls.is_zero() {
        let r: Q = &la / &ls;
        choice.curvature_ratio = Some(fmt_q(&if r < Q::zero() { -r } else { r }));
    }
    let g0 = s.even(&la, &ls)?;
    let rho: Vec<Matrix> = s.rho_h().into_iter().chain(m0.iter().cloned()).collect();
    choice.representation = Representation::from_matrices(g0.clone(), GradedSpace::even("s", N), rho.clone())?.check().pass;
    if !choice.representation {
        return Ok(Solved { choice, g0: None, coeffs: None });
    }
    let sol = odd_bracket_space(&g0, &rho, &s.pieces());
    choice.odd_solutions = sol.len();
    let coeffs = (sol.len() == 1 && !sol[0][0].is_zero()).then(|| {
        let c = sol[0][0].clone();
        sol[0].iter().map(|x| x / &c).collect::<Vec<Q>>()
    });
    choice.coefficients = coeffs.as_ref().map(|v| v.iter().map(fmt_q).collect());
    Ok(Solved { choice, g0: Some(g0), coeffs })
}

fn calibration_with(s: &Setup) -> Result<(FreundRubinCalibration, Vec<Solved>), CatalogError> {
    let literal = solve(s, &s.literal_m0(), None)?.choice;
    let mut solved = Vec::new();
    for conv in Conventions::all() {
        solved.push(solve(s, &s.sugra_m0(conv)?, Some(conv))?);
    }
    let choices: Vec<FreundRubinChoice> = solved.iter().map(|x| x.choice.clone()).collect();
    let selected = solved
        .iter()
        .filter(|x| x.coeffs.as_ref().is_some_and(|c| c.iter().all(|v| !v.is_zero())))
        .filter_map(|x| x.choice.conventions)
        .collect();
    let expected_ratio = match s.which {
        FreundRubin::AdS4xS7 => "4",
        FreundRubin::AdS7xS4 => "1/4",
    };
    Ok((
        FreundRubinCalibration {
            schema: 1,
            background: s.which,
            pieces: s.pieces().iter().map(|p| p.name.clone()).collect(),
            expected_ratio: expected_ratio.into(),
            literal,
            choices,
            selected,
        },
        solved,
    ))
}

pub fn freund_rubin_calibration(which: FreundRubin) -> Result<FreundRubinCalibration, CatalogError> {
    Ok(calibration_with(&Setup::new(which)?)?.0)
}

fn assemble(s: &Setup, g0: &LieSuperalgebra, m0: &[Matrix], coeffs: &[Q]) -> Result<ReductiveDecomposition, CatalogError> {
    let d0 = g0.dim();
    let mut basis: Vec<(String, Parity)> = s.labels().into_iter().map(|l| (l, Parity::Even)).collect();
    basis.extend((0..N).map(|a| (format!("Q{a}"), Parity::Odd)));
    let space = GradedSpace::new(basis).expect("distinct labels");
    let mut br: Vec<(usize, usize, Vec<(usize, Q)>)> = g0.upper_table().iter().map(|(&(i, j), v)| (i, j, v.clone())).collect();
    for (x, r) in s.rho_h().iter().chain(m0).enumerate() {
        for b in 0..N {
            let col: Vec<(usize, Q)> = (0..N).map(|l| (d0 + l, r.get(l, b))).filter(|e| !e.1.is_zero()).collect();
            br.push((x, d0 + b, col));
        }
    }
    let mut total = vec![Matrix::zeros(N, N); d0];
    for (p, c) in s.pieces().iter().zip(coeffs) {
        for (k, m) in &p.comps {
            total[*k] = total[*k].lin_comb(&Q::one(), m, c);
        }
    }
    for a in 0..N {
        for b in a..N {
            let col: Vec<(usize, Q)> = (0..d0).map(|k| (k, total[k].get(a, b))).filter(|e| !e.1.is_zero()).collect();
            br.push((d0 + a, d0 + b, col));
        }
    }
    let g = LieSuperalgebra::new(space, br)?;
    let h: Vec<usize> = (0..s.h_len()).collect();
    let m: Vec<usize> = (s.h_len()..g.dim()).collect();
    Ok(ReductiveDecomposition::new(g, h, m)?)
}

pub fn freund_rubin_variant(which: FreundRubin, variant: FreundRubinVariant) -> Result<CatalogEntry, CatalogError> {
    let s = Setup::new(which)?;
    let (cal, solved) = calibration_with(&s)?;
    let (m0, found, notes) = match variant {
        FreundRubinVariant::Literal => {
            let m0 = s.literal_m0();
            let found = solve(&s, &m0, None)?;
            let notes = format!(
                "{} with the listed brackets; curvature ratio {} (radii 2:1 needs {})",
                which.name(),
                found.choice.curvature_ratio.clone().unwrap_or_default(),
                cal.expected_ratio
            );
            (m0, found, notes)
        }
        FreundRubinVariant::Calibrated => {
            let conv = *cal.selected.first().ok_or_else(|| CatalogError::Construction("no sign convention admits an odd-odd bracket".into()))?;
            let k = Conventions::all().iter().position(|c| *c == conv).expect("convention is enumerated");
            let m0 = s.sugra_m0(conv)?;
            let found = solve(&s, &m0, Some(conv))?;
            let notes = format!(
                "{} with [m0,S] from the supergravity connection under {:?} and flux 3 vol; lambda ads {}, sphere {}; odd-odd pieces {} with coefficients {}",
                which.name(),
                conv,
                solved[k].choice.lambda_ads.clone().unwrap_or_default(),
                solved[k].choice.lambda_sphere.clone().unwrap_or_default(),
                cal.pieces.join(","),
                solved[k].choice.coefficients.clone().unwrap_or_default().join(",")
            );
            (m0, found, notes)
        }
    };
    let g0 = found.g0.ok_or_else(|| CatalogError::Construction("[m0,S] is not a representation".into()))?;
    let coeffs = match variant {
        // the listed odd-odd bracket, one term per pair i < j
        FreundRubinVariant::Literal => vec![Q::one(); 4],
        FreundRubinVariant::Calibrated => found.coeffs.ok_or_else(|| CatalogError::Construction("odd-odd bracket is not unique".into()))?,
    };
    let d = assemble(&s, &g0, &m0, &coeffs)?;
    let m0_idx: Vec<usize> = (s.h_len()..s.h_len() + 11).collect();
    let m1_idx: Vec<usize> = (s.h_len() + 11..d.algebra().dim()).collect();
    let adapted = AdaptedSupersymmetryAlgebra::new(d.clone(), m0_idx, m1_idx, s.rep.clone(), Matrix::identity(11), 1)?;
    Ok(CatalogEntry {
        name: match variant {
            FreundRubinVariant::Literal => format!("{}-literal", which.name()),
            FreundRubinVariant::Calibrated => which.name().into(),
        },
        decomposition: d,
        adapted: Some(adapted),
        flux: Some(s.flux()),
        notes,
    })
}

pub fn build_freund_rubin(which: FreundRubin) -> Result<CatalogEntry, CatalogError> {
    freund_rubin_variant(which, FreundRubinVariant::Calibrated)
}
