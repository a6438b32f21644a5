use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::bernoulli::BernoulliSeries;
use super::exterior::{wedge_basis, ExteriorElement};
use super::uea::Enveloping;
use super::PbwError;
use crate::exactla::space::{perm_sign, permutations};
use crate::exactla::{fmt_q, qi, Parity, Q};
use crate::liesuper::algebra::{saxpby, sscale};
use crate::liesuper::SVec;

/// Linear map `Λ(g1) -> g` tabulated on basis wedges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalVectorField {
    pub name: String,
    pub parity: Parity,
    #[serde(skip)]
    table: BTreeMap<Vec<usize>, SVec>,
}

impl FormalVectorField {
    pub fn value(&self, w: &[usize]) -> SVec {
        self.table.get(w).cloned().unwrap_or_default()
    }

    pub fn eval(&self, v: &ExteriorElement) -> SVec {
        let mut out = SVec::new();
        for (w, c) in v.terms() {
            out = saxpby(&Q::one(), &out, c, &self.value(w));
        }
        out
    }

    /// Wedge degrees with a nonzero value.
    pub fn support_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.table.iter().filter(|(_, v)| !v.is_empty()).map(|(w, _)| w.len()).collect();
        d.dedup();
        d
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &SVec)> {
        self.table.iter()
    }
}

/// Coefficient multiplying `Σ_σ sgn(σ) ad a_σ(1) ∘ ... ∘ ad a_σ(k) (a)` on a
/// wedge of degree `k`. `θ` uses the opposite sign to `q1`.
pub fn field_coefficient(series: BernoulliSeries, k: usize) -> Q {
    match series {
        BernoulliSeries::Q1 => -series.coefficient(k),
        _ => series.coefficient(k),
    }
}

/// `Σ_σ sgn(σ) [w_σ(1), [w_σ(2), ... [w_σ(k), a]]]`.
pub fn alternating_ad(env: &Enveloping, w: &[usize], a: &SVec) -> SVec {
    let g = env.algebra();
    let mut out = SVec::new();
    for perm in permutations(w.len()) {
        let mut cur = a.clone();
        for &i in perm.iter().rev() {
            cur = g.bracket_sparse(&vec![(w[i], Q::one())], &cur);
            if cur.is_empty() {
                break;
            }
        }
        out = saxpby(&Q::one(), &out, &qi(perm_sign(&perm)), &cur);
    }
    out
}

/// `α^a` (series `p1`), `θ^a` (series `q1`) or `ε^a` (series `e`) on all
/// wedges up to `max_degree`.
pub fn formal_field(env: &Enveloping, a: usize, series: BernoulliSeries, max_degree: usize) -> Result<FormalVectorField, PbwError> {
    env.require_odd(&[a])?;
    let odd = env.algebra().odd_indices();
    let base: SVec = vec![(a, Q::one())];
    let mut table = BTreeMap::new();
    for w in wedge_basis(&odd, max_degree) {
        let c = field_coefficient(series, w.len());
        let v = if c.is_zero() { SVec::new() } else { sscale(&c, &alternating_ad(env, &w, &base)) };
        table.insert(w, v);
    }
    let name = match series {
        BernoulliSeries::P1 => "alpha",
        BernoulliSeries::Q1 => "theta",
        BernoulliSeries::E => "epsilon",
    };
    Ok(FormalVectorField {
        name: format!("{name}^{}", env.algebra().label(a)),
        parity: Parity::Odd,
        table,
    })
}

/// Text of a vector of `g` as `c*label + ...`.
pub fn format_vector(env: &Enveloping, v: &SVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter().map(|(i, c)| format!("{}*{}", fmt_q(c), env.algebra().label(*i))).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;
    use crate::liesuper::examples::osp1;

    #[test]
    fn theta_on_one_generator() {
        let g = osp1(1).unwrap();
        let env = Enveloping::new(g.clone());
        let (a, a1) = (3, 4);
        let th = formal_field(&env, a, BernoulliSeries::Q1, 2).unwrap();
        assert_eq!(th.value(&[a1]), sscale(&q(1, 2), g.bracket_basis(a1, a)));
        assert!(th.value(&[]).is_empty());
        let eps = formal_field(&env, a, BernoulliSeries::E, 2).unwrap();
        assert_eq!(eps.value(&[]), vec![(a, Q::one())]);
    }

    #[test]
    fn parity_of_support() {
        let g = osp1(2).unwrap();
        let env = Enveloping::new(g.clone());
        let a = g.odd_indices()[0];
        for (s, odd_deg) in [(BernoulliSeries::Q1, true), (BernoulliSeries::P1, false), (BernoulliSeries::E, false)] {
            let f = formal_field(&env, a, s, 4).unwrap();
            for (w, v) in f.entries() {
                if w.len() % 2 == 1 && !odd_deg || w.len() % 2 == 0 && odd_deg {
                    assert!(v.is_empty(), "{} on {:?}", f.name, w);
                }
            }
        }
    }
}
