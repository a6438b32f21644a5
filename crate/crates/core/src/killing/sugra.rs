use num_traits::{One, Zero};
use serde::Serialize;

use super::{AdaptedSupersymmetryAlgebra, FluxForm, KillingError};
use crate::clifford::{lambda_basis, CliffordRep, Signature};
use crate::exactla::{fmt_q, q, qi, Matrix, Span, Q};
use crate::liesuper::LieSuperalgebra;

/// Sign conventions entering the supergravity connection: Clifford
/// multiplication by a `k`-form picks up `clifford^k`, the flux an overall
/// `flux`, and the musical isomorphisms use the metric `musical·η`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Conventions {
    pub clifford: i64,
    pub flux: i64,
    pub musical: i64,
}

impl Conventions {
    pub const LITERAL: Conventions = Conventions {
        clifford: 1,
        flux: 1,
        musical: 1,
    };

    pub fn all() -> Vec<Conventions> {
        let mut v = Vec::new();
        for clifford in [1, -1] {
            for flux in [1, -1] {
                for musical in [1, -1] {
                    v.push(Conventions { clifford, flux, musical });
                }
            }
        }
        v
    }
}

/// Clifford action of `Σ_I ω^I γ_I` for a `k`-form given by components on
/// increasing index sets, raised with `musical·η`.
fn form_action(rep: &CliffordRep, k: usize, comps: &[(Vec<usize>, Q)], conv: Conventions) -> Matrix {
    let n = rep.spin_dim();
    let cl = qi(conv.clifford.pow(k as u32));
    let mut out = Matrix::zeros(n, n);
    for (idx, c) in comps {
        if c.is_zero() {
            continue;
        }
        let raise: i64 = idx.iter().map(|&i| conv.musical * rep.eta(i)).product();
        out = out.lin_comb(&Q::one(), &rep.product(idx), &(c * qi(raise) * &cl));
    }
    out
}

/// `f·(-(1/12) (X♭∧F)^♯ + (1/6) (i_X F)^♯)` acting on spinors, with `F` and
/// `X` in orthonormal coordinates of `R^{1,10}`.
pub fn supergravity_connection_term(rep: &CliffordRep, f: &FluxForm, x: &[Q], conv: Conventions) -> Result<Matrix, KillingError> {
    if rep.signature() != Signature::new(1, 10) || f.dim() != 11 || x.len() != 11 {
        return Err(KillingError::Signature);
    }
    let n = 11;
    let xflat: Vec<Q> = (0..n).map(|i| &x[i] * qi(conv.musical * rep.eta(i))).collect();
    let five: Vec<(Vec<usize>, Q)> = lambda_basis(n, 5)
        .into_iter()
        .map(|idx| {
            let mut c = Q::zero();
            for p in 0..5 {
                if xflat[idx[p]].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx.iter().enumerate().filter(|(j, _)| *j != p).map(|(_, &v)| v).collect();
                let sign = if p % 2 == 0 { Q::one() } else { -Q::one() };
                c += sign * &xflat[idx[p]] * f.get([rest[0], rest[1], rest[2], rest[3]]);
            }
            (idx, c)
        })
        .collect();
    let three: Vec<(Vec<usize>, Q)> = lambda_basis(n, 3)
        .into_iter()
        .map(|idx| {
            let c = (0..n).filter(|&i| !x[i].is_zero()).map(|i| &x[i] * f.get([i, idx[0], idx[1], idx[2]])).sum();
            (idx, c)
        })
        .collect();
    let t5 = form_action(rep, 5, &five, conv);
    let t3 = form_action(rep, 3, &three, conv);
    Ok(t5.scale(&q(-1, 12)).add(&t3.scale(&q(1, 6))).scale(&qi(conv.flux)))
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CalibrationChoice {
    pub conventions: Conventions,
    /// Number of nonzero entries of `C_X - term(X)` summed over basis `X`.
    pub residual_entries: usize,
    /// First offending `(X, row, col, value)`.
    pub first: Option<(String, String, String, String)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CalibrationReport {
    pub schema: u32,
    pub choices: Vec<CalibrationChoice>,
    /// Conventions reaching the minimal residual, in enumeration order.
    pub best: Vec<Conventions>,
    pub minimal_residual: usize,
}

impl CalibrationReport {
    pub fn exact(&self) -> bool {
        self.minimal_residual == 0
    }
}

/// Compares `C_X = [X, ·]|m1` with the supergravity term for every basis
/// vector `X` of `m0` under each sign convention. The flux is given in the
/// local basis of `m0`.
pub fn calibrate_flux(a: &AdaptedSupersymmetryAlgebra, f: &FluxForm) -> Result<CalibrationReport, KillingError> {
    let rep = a.rep();
    let g = a.algebra();
    let finv = a.frame().inverse().expect("frame is invertible");
    let f_ortho = f.pull_back(&finv);
    let k0 = a.m0().len();
    let mut choices = Vec::new();
    for conv in Conventions::all() {
        let mut residual_entries = 0;
        let mut first = None;
        for k in 0..k0 {
            let x = a.frame().apply(&a.unit_m0(k));
            let t = supergravity_connection_term(rep, &f_ortho, &x, conv)?;
            let t = a.delta(&t);
            let d = a.c_matrix(k).sub(&t);
            if let Some((r, c, v)) = d.entries().next() {
                if first.is_none() {
                    first = Some((
                        g.label(a.m0()[k]).to_string(),
                        g.label(a.m1()[r]).to_string(),
                        g.label(a.m1()[c]).to_string(),
                        fmt_q(v),
                    ));
                }
            }
            residual_entries += d.nnz();
        }
        choices.push(CalibrationChoice {
            conventions: conv,
            residual_entries,
            first,
        });
    }
    let minimal_residual = choices.iter().map(|c| c.residual_entries).min().unwrap_or(0);
    let best = choices.iter().filter(|c| c.residual_entries == minimal_residual).map(|c| c.conventions).collect();
    Ok(CalibrationReport {
        schema: 1,
        choices,
        best,
        minimal_residual,
    })
}

/// One candidate term of an odd-odd bracket `S ⊗ S -> g0`: the matrix of
/// `(s,t) ↦ coefficient of the g0 basis vector` for each listed component.
#[derive(Clone, Debug)]
pub struct OddAnsatz {
    pub name: String,
    pub comps: Vec<(usize, Matrix)>,
}

fn gather(p: &OddAnsatz, dim0: usize, n: usize) -> Vec<Matrix> {
    let mut out = vec![Matrix::zeros(n, n); dim0];
    for (k, m) in &p.comps {
        out[*k] = out[*k].add(m);
    }
    out
}

/// Coefficient vectors `c` for which `[s,t] = Σ_p c_p P_p(s,t)` completes
/// the even algebra `g0` and its representation `rho` on `S` to a Lie
/// superalgebra. Both the equivariance and the odd-odd-odd identity are
/// linear in `c`; equations are streamed into an echelon basis.
pub fn odd_bracket_space(g0: &LieSuperalgebra, rho: &[Matrix], pieces: &[OddAnsatz]) -> Vec<Vec<Q>> {
    let d0 = g0.dim();
    let np = pieces.len();
    let n = rho.first().map_or(0, |m| m.nrows());
    let ps: Vec<Vec<Matrix>> = pieces.iter().map(|p| gather(p, d0, n)).collect();
    let mut eqs = Span::new(np);
    let feed = |rows: &mut std::collections::BTreeMap<(usize, usize, usize), Vec<Q>>, eqs: &mut Span| {
        for (_, v) in std::mem::take(rows) {
            if v.iter().any(|x| !x.is_zero()) {
                eqs.insert(&v);
            }
        }
    };
    // equivariance: Σ_l ad_x[k][l] P[l] - ρ(x)ᵀ P[k] - P[k] ρ(x) = 0
    for x in 0..d0 {
        if eqs.dim() == np {
            break;
        }
        let ad = g0.ad_matrix(x);
        let r = &rho[x];
        let rt = r.transpose();
        let mut rows = std::collections::BTreeMap::new();
        for (pi, p) in ps.iter().enumerate() {
            for k in 0..d0 {
                let mut res = p[k].mul(r).add(&rt.mul(&p[k])).neg();
                for (l, c) in ad.row(k) {
                    res = res.lin_comb(&Q::one(), &p[*l], c);
                }
                for (a, b, v) in res.entries() {
                    rows.entry((k, a, b)).or_insert_with(|| vec![Q::zero(); np])[pi] += v;
                }
            }
        }
        feed(&mut rows, &mut eqs);
    }
    // odd-odd-odd: ρ(Γ(t,u))s + ρ(Γ(u,s))t + ρ(Γ(s,t))u = 0
    if eqs.dim() < np {
        let act: Vec<Vec<Vec<Matrix>>> = ps
            .iter()
            .map(|p| {
                (0..n)
                    .map(|b| {
                        (0..n)
                            .map(|c| {
                                let mut m = Matrix::zeros(n, n);
                                for k in 0..d0 {
                                    let v = p[k].get(b, c);
                                    if !v.is_zero() {
                                        m = m.lin_comb(&Q::one(), &rho[k], &v);
                                    }
                                }
                                m
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        for a in 0..n {
            let mut rows = std::collections::BTreeMap::new();
            for b in a..n {
                for c in b..n {
                    for (pi, m) in act.iter().enumerate() {
                        for (col_mat, col) in [(&m[b][c], a), (&m[c][a], b), (&m[a][b], c)] {
                            for r in 0..n {
                                let v = col_mat.get(r, col);
                                if !v.is_zero() {
                                    rows.entry((b * n + c, r, 0)).or_insert_with(|| vec![Q::zero(); np])[pi] += v;
                                }
                            }
                        }
                    }
                }
            }
            feed(&mut rows, &mut eqs);
            if eqs.dim() == np {
                break;
            }
        }
    }
    let rows: Vec<Vec<(usize, Q)>> = eqs
        .basis()
        .iter()
        .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect())
        .collect();
    crate::exactla::solve_homogeneous(rows, np)
}
