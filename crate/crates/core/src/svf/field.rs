use num_traits::One;
use serde::Serialize;

use super::{SplitDomain, SuperPoly};
use crate::exactla::{fmt_q, Parity, Q};

/// `Σ f^k ∂/∂x^k + Σ g^α ∂/∂s^α + Σ h^i F_i + Σ r^i R_i` with coefficients
/// on the left. `F_i` and `R_i` are formal left and right invariant fields
/// on `H0`: they kill the coordinates, commute with each other and satisfy
/// `[F_i, F_j] = c^l_ij F_l`, `[R_i, R_j] = -c^l_ij R_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySuperField {
    pub parity: Parity,
    pub even: Vec<SuperPoly>,
    pub odd: Vec<SuperPoly>,
    pub left_formal: Vec<SuperPoly>,
    pub right_formal: Vec<SuperPoly>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FieldValue {
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub left_formal: Vec<String>,
    pub right_formal: Vec<String>,
}

impl PolySuperField {
    pub fn zero(d: &SplitDomain, parity: Parity) -> Self {
        let z = d.poly_zero();
        PolySuperField {
            parity,
            even: vec![z.clone(); d.dim_v()],
            odd: vec![z.clone(); d.dim_s()],
            left_formal: vec![z.clone(); d.dim_h0()],
            right_formal: vec![z; d.dim_h0()],
        }
    }

    fn slots(&self) -> impl Iterator<Item = &SuperPoly> {
        self.even.iter().chain(&self.odd).chain(&self.left_formal).chain(&self.right_formal)
    }

    fn slots_mut(&mut self) -> impl Iterator<Item = &mut SuperPoly> {
        self.even.iter_mut().chain(self.odd.iter_mut()).chain(self.left_formal.iter_mut()).chain(self.right_formal.iter_mut())
    }

    pub fn is_zero(&self) -> bool {
        self.slots().all(SuperPoly::is_zero)
    }

    pub fn lin_comb(&self, a: &Q, other: &PolySuperField, b: &Q) -> PolySuperField {
        let mut out = self.clone();
        for (x, y) in out.slots_mut().zip(other.slots()) {
            *x = x.scale(a);
            x.add_scaled(y, b);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> PolySuperField {
        let mut out = self.clone();
        for x in out.slots_mut() {
            *x = x.scale(c);
        }
        out
    }

    /// The derivation applied to a polynomial; formal parts act by zero.
    pub fn apply(&self, p: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero(p.n_even(), p.n_odd());
        for (k, f) in self.even.iter().enumerate() {
            if !f.is_zero() {
                out.add_scaled(&f.mul(&p.d_even(k)), &Q::one());
            }
        }
        for (a, g) in self.odd.iter().enumerate() {
            if !g.is_zero() {
                out.add_scaled(&g.mul(&p.d_odd(a)), &Q::one());
            }
        }
        out
    }

    /// Supercommutator `XY - (-1)^{|X||Y|} YX`.
    pub fn bracket(&self, d: &SplitDomain, y: &PolySuperField) -> PolySuperField {
        let parity = self.parity + y.parity;
        let sign = if self.parity == Parity::Odd && y.parity == Parity::Odd { Q::one() } else { -Q::one() };
        let mut out = PolySuperField::zero(d, parity);
        for ((o, a), b) in out.slots_mut().zip(self.slots()).zip(y.slots()) {
            *o = self.apply(b);
            o.add_scaled(&y.apply(a), &sign);
        }
        for (i, hi) in self.left_formal.iter().enumerate() {
            for (j, kj) in y.left_formal.iter().enumerate() {
                if hi.is_zero() || kj.is_zero() {
                    continue;
                }
                let p = hi.mul(kj);
                for (l, c) in d.h0_bracket(i, j) {
                    out.left_formal[*l].add_scaled(&p, c);
                }
            }
        }
        for (i, hi) in self.right_formal.iter().enumerate() {
            for (j, kj) in y.right_formal.iter().enumerate() {
                if hi.is_zero() || kj.is_zero() {
                    continue;
                }
                let p = hi.mul(kj);
                for (l, c) in d.h0_bracket(i, j) {
                    out.right_formal[*l].add_scaled(&p, &-c.clone());
                }
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Q]) -> FieldValue {
        let ev = |v: &[SuperPoly]| v.iter().map(|p| fmt_q(&p.body_at(point))).collect();
        FieldValue {
            even: ev(&self.even),
            odd: ev(&self.odd),
            left_formal: ev(&self.left_formal),
            right_formal: ev(&self.right_formal),
        }
    }

    pub fn format(&self, d: &SplitDomain) -> String {
        let (en, on) = (d.even_names(), d.odd_names());
        let g = d.algebra();
        let mut parts = Vec::new();
        let mut push = |p: &SuperPoly, op: String| {
            if p.is_zero() {
                return;
            }
            let c = p.format(&en, &on);
            if p.terms().len() == 1 && p.terms().values().all(|v| v.is_one()) && p.terms().keys().all(|(e, o)| o.is_empty() && e.iter().all(|x| *x == 0)) {
                parts.push(op);
            } else {
                parts.push(format!("({c})*{op}"));
            }
        };
        for (k, p) in self.even.iter().enumerate() {
            push(p, format!("d/d{}", en[k]));
        }
        for (a, p) in self.odd.iter().enumerate() {
            push(p, format!("d/d{}", on[a]));
        }
        for (i, p) in self.left_formal.iter().enumerate() {
            push(p, format!("L[{}]", g.label(d.h0()[i])));
        }
        for (i, p) in self.right_formal.iter().enumerate() {
            push(p, format!("R[{}]", g.label(d.h0()[i])));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}
