use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::uea::{Enveloping, Monomial, UeaElement};
use super::PbwError;
use crate::exactla::space::{perm_sign, permutations};
use crate::exactla::{fmt_q, qi, Parity, Q};

/// Element of `Λ(g1)`: wedges of odd basis indices in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExteriorElement {
    terms: BTreeMap<Vec<usize>, Q>,
}

/// Sorts a wedge of distinct indices; `None` if an index repeats.
pub fn sort_wedge(idx: &[usize]) -> Option<(Q, Vec<usize>)> {
    let mut v = idx.to_vec();
    v.sort_unstable();
    if v.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    let pos: Vec<usize> = idx.iter().map(|i| v.binary_search(i).expect("present")).collect();
    Some((qi(perm_sign(&pos)), v))
}

impl ExteriorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::wedge(&[])
    }

    /// `b_{i1} ∧ ... ∧ b_{ik}` for odd basis indices in any order.
    pub fn wedge(idx: &[usize]) -> Self {
        let mut e = Self::zero();
        if let Some((s, v)) = sort_wedge(idx) {
            e.add_term(v, s);
        }
        e
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ExteriorElement, c: &Q) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn wedge_with(&self, other: &ExteriorElement) -> ExteriorElement {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                if let Some((s, v)) = sort_wedge(&idx) {
                    out.add_term(v, s * x * y);
                }
            }
        }
        out
    }

    /// Parity of a homogeneous element (degree mod 2).
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|w| Parity::from_bit(w.len() % 2));
        let first = ps.next().unwrap_or(Parity::Even);
        ps.all(|p| p == first).then_some(first)
    }

    /// Deconcatenation coproduct `Σ ± v_(1) ⊗ v_(2)` with the shuffle sign.
    pub fn coproduct(&self) -> Vec<(Vec<usize>, Vec<usize>, Q)> {
        let mut out = Vec::new();
        for (w, c) in &self.terms {
            out.extend(split_wedge(w).into_iter().map(|(l, r, s)| (l, r, s * c)));
        }
        out
    }

    /// Antipode, `(-1)^p` on degree `p`.
    pub fn antipode(&self) -> ExteriorElement {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let s = if w.len() % 2 == 0 { Q::one() } else { -Q::one() };
            out.add_term(w.clone(), s * c);
        }
        out
    }
}

/// All splittings of a sorted wedge into `(left, right)` with the sign of
/// the shuffle that brings `left ++ right` back to the original order.
pub fn split_wedge(w: &[usize]) -> Vec<(Vec<usize>, Vec<usize>, Q)> {
    let p = w.len();
    let mut out = Vec::with_capacity(1 << p);
    for mask in 0..(1usize << p) {
        let mut l = Vec::new();
        let mut r = Vec::new();
        let mut pos = Vec::new();
        for (i, &x) in w.iter().enumerate() {
            if mask & (1 << i) != 0 {
                l.push(x);
                pos.push(i);
            }
        }
        for (i, &x) in w.iter().enumerate() {
            if mask & (1 << i) == 0 {
                r.push(x);
                pos.push(i);
            }
        }
        out.push((l, r, qi(perm_sign(&pos))));
    }
    out
}

/// All wedges of odd basis indices of degree `<= max_degree`, by degree.
pub fn wedge_basis(odd: &[usize], max_degree: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 0..(1usize << odd.len()) {
        let w: Vec<usize> = odd.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect();
        if w.len() <= max_degree {
            out.push(w);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Element of `U(g0) ⊗ Λ(g1)`: even PBW monomial (ranks) paired with a
/// wedge of odd basis indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Presentation {
    terms: BTreeMap<(Monomial, Vec<usize>), Q>,
}

impl Presentation {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Vec<usize>), Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: Monomial, v: Vec<usize>, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, v)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `u ⊗ v` for `u ∈ U(g0)` and `v ∈ Λ(g1)`.
    pub fn tensor(u: &UeaElement, v: &ExteriorElement) -> Presentation {
        let mut out = Self::zero();
        for (m, a) in u.terms() {
            for (w, b) in v.terms() {
                out.add_term(m.clone(), w.clone(), a * b);
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Presentation, c: &Q) {
        for ((u, v), x) in &other.terms {
            self.add_term(u.clone(), v.clone(), x * c);
        }
    }
}

impl Enveloping {
    /// `γ(a_1 ∧ ... ∧ a_p) = (1/p!) Σ sgn(σ) a_σ(1) ··· a_σ(p)`, normal ordered.
    pub fn gamma(&self, v: &ExteriorElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (w, c) in v.terms() {
            out.add_scaled(&self.gamma_wedge(w), c);
        }
        out
    }

    fn gamma_wedge(&self, w: &[usize]) -> UeaElement {
        let p = w.len();
        let mut out = UeaElement::zero();
        let mut fact = Q::one();
        for perm in permutations(p) {
            let ranks: Vec<usize> = perm.iter().map(|&i| self.rank(w[i])).collect();
            out.add_scaled(&self.normal_order_ranks(&ranks), &qi(perm_sign(&perm)));
        }
        for i in 1..=p {
            fact *= qi(i as i64);
        }
        out.scale(&(Q::one() / fact))
    }

    /// `u ⊗ v ↦ u · γ(v)`.
    pub fn underline_gamma(&self, p: &Presentation) -> UeaElement {
        let mut out = UeaElement::zero();
        for ((u, w), c) in p.terms() {
            let g = self.gamma_wedge(w);
            let mut t = g;
            for &x in u.iter().rev() {
                t = self.lmul_letter(x, &t);
            }
            out.add_scaled(&t, c);
        }
        out
    }

    /// Inverse of [`Enveloping::underline_gamma`] by peeling off top-degree
    /// monomials: `u·γ(v)` has leading term the PBW monomial `u v`.
    pub fn underline_gamma_inv(&self, x: &UeaElement) -> Presentation {
        let mut rest = x.clone();
        let mut out = Presentation::zero();
        while let Some(deg) = rest.degree() {
            let (m, c) = rest
                .terms()
                .iter()
                .find(|(m, _)| m.len() == deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .expect("a term of top degree");
            let split = m.iter().position(|&r| r >= self.n_even()).unwrap_or(m.len());
            let u = m[..split].to_vec();
            let w: Vec<usize> = m[split..].iter().map(|&r| self.generator(r)).collect();
            let mut piece = Presentation::zero();
            piece.add_term(u.clone(), w.clone(), Q::one());
            rest.add_scaled(&self.underline_gamma(&piece), &-c.clone());
            out.add_term(u, w, c);
        }
        out
    }

    pub fn format_presentation(&self, p: &Presentation) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((u, w), c) in p.terms() {
            let left = if u.is_empty() {
                "1".to_string()
            } else {
                u.iter().map(|&r| self.rank_label(r)).collect::<Vec<_>>().join("*")
            };
            let right = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(|&i| self.algebra().label(i)).collect::<Vec<_>>().join("^")
            };
            parts.push(format!("{}*{}⊗{}", fmt_q(c), left, right));
        }
        parts.join(" + ")
    }

    /// Checks that every listed index is an odd generator.
    pub fn require_odd(&self, idx: &[usize]) -> Result<(), PbwError> {
        for &i in idx {
            if i >= self.algebra().dim() {
                return Err(PbwError::UnknownGenerator(i));
            }
            if !self.algebra().parity(i).is_odd() {
                return Err(PbwError::NotOdd(self.algebra().label(i).to_string()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::q;
    use crate::liesuper::examples::osp1;

    #[test]
    fn coproduct_of_two() {
        let v = ExteriorElement::wedge(&[3, 4]);
        let d = v.coproduct();
        assert_eq!(d.len(), 4);
        assert!(d.contains(&(vec![3], vec![4], qi(1))));
        assert!(d.contains(&(vec![4], vec![3], qi(-1))));
    }

    #[test]
    fn gamma_of_pair() {
        let g = osp1(1).unwrap();
        let u = Enveloping::new(g.clone());
        let (a1, a2) = (3, 4);
        let lhs = u.gamma(&ExteriorElement::wedge(&[a1, a2]));
        let mut rhs = u.normal_order(&[a1, a2]).unwrap();
        rhs.add_scaled(&u.from_sparse(g.bracket_basis(a1, a2)), &q(-1, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn underline_gamma_round_trip() {
        let g = osp1(1).unwrap();
        let u = Enveloping::new(g);
        let x = u.normal_order(&[3, 4]).unwrap();
        let p = u.underline_gamma_inv(&x);
        assert_eq!(u.underline_gamma(&p), x);
        for w in wedge_basis(&[3, 4], 2) {
            let v = ExteriorElement::wedge(&w);
            let p = u.underline_gamma_inv(&u.gamma(&v));
            assert_eq!(p, Presentation::tensor(&UeaElement::one(), &v));
        }
    }
}
