//! Polynomial super vector fields on a split super translation group
//! `H0 × (V ⊕ ΠS)`, the fundamental fields of left and right translations
//! and the Hopf structure of the translation factor.

mod field;
mod hopf;
mod poly;
mod verify;

pub use field::{FieldValue, PolySuperField};
pub use hopf::{hopf_translation, HopfReport, HopfTranslation};
pub use poly::{PolyKey, SuperPoly};
pub use verify::{verify_fundamental_fields, SvfReport};

use num_traits::Zero;
use thiserror::Error;

use crate::exactla::{Matrix, Parity, Q};
use crate::liesuper::{LieSuperalgebra, ReductiveDecomposition, SVec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SvfError {
    #[error("not a split translation algebra: {0}")]
    NotSplit(String),
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("dimension mismatch: expected {0}, got {1}")]
    Dimension(usize, usize),
}

/// `g = h0 ⊕ V ⊕ S` with `h0` even, `[V, V] = [V, S] = 0`, `[S, S] ⊆ V`
/// and `h0` acting on `V` and `S`. Coordinates are `x^k` on `V` and `s^α`
/// on `S`; `h0` enters through formal left and right invariant fields.
#[derive(Clone, Debug)]
pub struct SplitDomain {
    algebra: LieSuperalgebra,
    h0: Vec<usize>,
    v: Vec<usize>,
    s: Vec<usize>,
    /// `gamma[k]` is the matrix `Γ^k_{αβ}` of `[s_α, s_β] = Γ^k_{αβ} v_k`.
    gamma: Vec<Matrix>,
    /// `act_v[i][k][j]`: `[A_i, v_j] = Σ_k a^k_j v_k`.
    act_v: Vec<Matrix>,
    act_s: Vec<Matrix>,
    /// `[A_i, A_j] = Σ_l c^l_ij A_l` in local indices.
    h0_bracket: Vec<Vec<Vec<(usize, Q)>>>,
}

fn local(x: &SVec, idx: &[usize], what: &str, ctx: &str) -> Result<Vec<(usize, Q)>, SvfError> {
    let mut out = Vec::new();
    for (i, c) in x {
        match idx.iter().position(|j| j == i) {
            Some(p) => out.push((p, c.clone())),
            None => return Err(SvfError::NotSplit(format!("{ctx} leaves {what}"))),
        }
    }
    Ok(out)
}

impl SplitDomain {
    pub fn new(d: &ReductiveDecomposition) -> Result<Self, SvfError> {
        let g = d.algebra().clone();
        let h0 = d.h().to_vec();
        if h0.iter().any(|&i| g.parity(i) == Parity::Odd) {
            return Err(SvfError::NotSplit("isotropy has odd elements".into()));
        }
        let v: Vec<usize> = d.m().iter().copied().filter(|&i| g.parity(i) == Parity::Even).collect();
        let s: Vec<usize> = d.m().iter().copied().filter(|&i| g.parity(i) == Parity::Odd).collect();
        let (m, n) = (v.len(), s.len());
        let lb = |i: usize, j: usize| format!("[{}, {}]", g.label(i), g.label(j));
        for (a, &i) in v.iter().enumerate() {
            for &j in v[a..].iter().chain(&s) {
                if !g.bracket_basis(i, j).is_empty() {
                    return Err(SvfError::NotSplit(format!("{} is nonzero", lb(i, j))));
                }
            }
        }
        let mut gamma = vec![Matrix::zeros(n, n); m];
        for (a, &i) in s.iter().enumerate() {
            for (b, &j) in s.iter().enumerate() {
                for (k, c) in local(g.bracket_basis(i, j), &v, "V", &lb(i, j))? {
                    gamma[k].set(a, b, c);
                }
            }
        }
        let mut act_v = Vec::new();
        let mut act_s = Vec::new();
        let mut h0_bracket = Vec::new();
        for &a in &h0 {
            let mut mv = Matrix::zeros(m, m);
            for (j, &vj) in v.iter().enumerate() {
                for (k, c) in local(g.bracket_basis(a, vj), &v, "V", &lb(a, vj))? {
                    mv.set(k, j, c);
                }
            }
            let mut ms = Matrix::zeros(n, n);
            for (j, &sj) in s.iter().enumerate() {
                for (k, c) in local(g.bracket_basis(a, sj), &s, "S", &lb(a, sj))? {
                    ms.set(k, j, c);
                }
            }
            let row = h0
                .iter()
                .map(|&b| local(g.bracket_basis(a, b), &h0, "h0", &lb(a, b)))
                .collect::<Result<Vec<_>, _>>()?;
            act_v.push(mv);
            act_s.push(ms);
            h0_bracket.push(row);
        }
        Ok(SplitDomain {
            algebra: g,
            h0,
            v,
            s,
            gamma,
            act_v,
            act_s,
            h0_bracket,
        })
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.v.len()
    }

    pub fn dim_s(&self) -> usize {
        self.s.len()
    }

    pub fn dim_h0(&self) -> usize {
        self.h0.len()
    }

    pub fn h0(&self) -> &[usize] {
        &self.h0
    }

    pub fn v(&self) -> &[usize] {
        &self.v
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn gamma(&self, k: usize) -> &Matrix {
        &self.gamma[k]
    }

    pub fn even_names(&self) -> Vec<String> {
        (0..self.v.len()).map(|k| format!("x{k}")).collect()
    }

    pub fn odd_names(&self) -> Vec<String> {
        (0..self.s.len()).map(|a| format!("s{a}")).collect()
    }

    pub(crate) fn poly_zero(&self) -> SuperPoly {
        SuperPoly::zero(self.v.len(), self.s.len())
    }

    pub(crate) fn h0_bracket(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.h0_bracket[i][j]
    }

    pub fn zero_field(&self, parity: Parity) -> PolySuperField {
        PolySuperField::zero(self, parity)
    }

    fn split(&self, a: &[Q]) -> Result<(Vec<Q>, Vec<Q>, Vec<Q>, Parity), SvfError> {
        if a.len() != self.algebra.dim() {
            return Err(SvfError::Dimension(self.algebra.dim(), a.len()));
        }
        let p = self.algebra.element_parity(a).ok_or(SvfError::Inhomogeneous)?;
        let pick = |idx: &[usize]| idx.iter().map(|&i| a[i].clone()).collect::<Vec<Q>>();
        Ok((pick(&self.h0), pick(&self.v), pick(&self.s), p))
    }

    /// Fundamental field of the left translation action.
    pub fn left_field(&self, a: &[Q]) -> Result<PolySuperField, SvfError> {
        let (ah, av, as_, p) = self.split(a)?;
        let (m, n) = (self.dim_v(), self.dim_s());
        let mut f = self.zero_field(p);
        for (k, c) in av.iter().enumerate() {
            f.even[k].add_term((vec![0; m], vec![]), c.clone());
        }
        let half = Q::new(1.into(), 2.into());
        for (al, c) in as_.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            f.odd[al].add_term((vec![0; m], vec![]), -c.clone());
            for k in 0..m {
                for eta in 0..n {
                    let gm = self.gamma[k].get(al, eta);
                    f.even[k].add_term((vec![0; m], vec![eta]), -(c * &half * gm));
                }
            }
        }
        for (i, c) in ah.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            f.left_formal[i].add_term((vec![0; m], vec![]), c.clone());
            for (k, j, v) in self.act_v[i].entries() {
                let mut e = vec![0; m];
                e[j] = 1;
                f.even[k].add_term((e, vec![]), -(c * v));
            }
            for (al, be, v) in self.act_s[i].entries() {
                f.odd[al].add_term((vec![0; m], vec![be]), -(c * v));
            }
        }
        Ok(f)
    }

    /// Fundamental field of the right translation action in the chart
    /// through the identity of `H0`; the `h0` part is purely formal.
    pub fn right_field(&self, a: &[Q]) -> Result<PolySuperField, SvfError> {
        let (ah, av, as_, p) = self.split(a)?;
        let (m, n) = (self.dim_v(), self.dim_s());
        let mut f = self.zero_field(p);
        for (k, c) in av.iter().enumerate() {
            f.even[k].add_term((vec![0; m], vec![]), c.clone());
        }
        let half = Q::new(1.into(), 2.into());
        for (al, c) in as_.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            f.odd[al].add_term((vec![0; m], vec![]), -c.clone());
            for k in 0..m {
                for eta in 0..n {
                    let gm = self.gamma[k].get(al, eta);
                    f.even[k].add_term((vec![0; m], vec![eta]), c * &half * gm);
                }
            }
        }
        for (i, c) in ah.iter().enumerate() {
            f.right_formal[i].add_term((vec![0; m], vec![]), c.clone());
        }
        Ok(f)
    }

    pub fn field_bracket(&self, x: &PolySuperField, y: &PolySuperField) -> PolySuperField {
        x.bracket(self, y)
    }

    /// Coefficients of `x` at an even point, odd coordinates set to zero.
    pub fn evaluate_field(&self, x: &PolySuperField, point: &[Q]) -> Result<FieldValue, SvfError> {
        if point.len() != self.dim_v() {
            return Err(SvfError::Dimension(self.dim_v(), point.len()));
        }
        Ok(x.evaluate(point))
    }

    /// Left or right fields of the basis vectors of `g`, in basis order.
    pub fn basis_fields(&self, left: bool) -> Vec<PolySuperField> {
        (0..self.algebra.dim())
            .map(|i| {
                let e = self.algebra.basis_vector(i);
                if left {
                    self.left_field(&e)
                } else {
                    self.right_field(&e)
                }
                .expect("basis vectors are homogeneous")
            })
            .collect()
    }
}
