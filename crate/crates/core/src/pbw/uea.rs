use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::PbwError;
use crate::exactla::{fmt_q, koszul, q, Parity, Q};
use crate::liesuper::LieSuperalgebra;

/// PBW monomial as a nondecreasing list of ranks: even generators first,
/// then odd ones, each block in basis order. Odd ranks never repeat.
pub type Monomial = Vec<usize>;

/// Element of `U(g)` in PBW normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UeaElement {
    terms: BTreeMap<Monomial, Q>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), Q::one())
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut u = Self::zero();
        u.add_term(m, c);
        u
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn coefficient(&self, m: &[usize]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &UeaElement, c: &Q) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn scale(&self, c: &Q) -> UeaElement {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len()).max()
    }
}

/// PBW data for one Lie superalgebra: the generator order and a cache of
/// `x · m` for generators `x` and normal monomials `m`.
#[derive(Debug)]
pub struct Enveloping {
    g: LieSuperalgebra,
    order: Vec<usize>,
    rank: Vec<usize>,
    n_even: usize,
    brackets: Vec<Vec<Vec<(usize, Q)>>>,
    cache: Mutex<HashMap<(usize, Monomial), UeaElement>>,
}

impl Clone for Enveloping {
    fn clone(&self) -> Self {
        Enveloping::new(self.g.clone())
    }
}

impl Enveloping {
    pub fn new(g: LieSuperalgebra) -> Self {
        let order: Vec<usize> = g.even_indices().into_iter().chain(g.odd_indices()).collect();
        let mut rank = vec![0; g.dim()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let n_even = g.even_indices().len();
        let brackets = order
            .iter()
            .map(|&i| order.iter().map(|&j| g.bracket_basis(i, j).iter().map(|(k, c)| (rank[*k], c.clone())).collect()).collect())
            .collect();
        Enveloping {
            g,
            order,
            rank,
            n_even,
            brackets,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.g
    }

    pub fn n_even(&self) -> usize {
        self.n_even
    }

    pub fn n_odd(&self) -> usize {
        self.order.len() - self.n_even
    }

    pub fn rank(&self, basis_index: usize) -> usize {
        self.rank[basis_index]
    }

    /// Basis index of the generator with the given rank.
    pub fn generator(&self, rank: usize) -> usize {
        self.order[rank]
    }

    pub fn rank_parity(&self, r: usize) -> Parity {
        if r < self.n_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn monomial_parity(&self, m: &[usize]) -> Parity {
        Parity::from_bit(m.iter().filter(|&&r| r >= self.n_even).count() % 2)
    }

    /// Parity of a homogeneous element, `None` if it mixes parities.
    pub fn parity_of(&self, u: &UeaElement) -> Option<Parity> {
        let mut ps = u.terms.keys().map(|m| self.monomial_parity(m));
        let first = ps.next().unwrap_or(Parity::Even);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        w.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && p[0] < self.n_even))
    }

    fn check_word(&self, word: &[usize]) -> Result<(), PbwError> {
        match word.iter().find(|&&i| i >= self.g.dim()) {
            Some(&i) => Err(PbwError::UnknownGenerator(i)),
            None => Ok(()),
        }
    }

    /// Element of `g` (dense, basis order) as a degree-one element.
    pub fn from_vector(&self, x: &[Q]) -> UeaElement {
        let mut u = UeaElement::zero();
        for (i, c) in x.iter().enumerate() {
            u.add_term(vec![self.rank[i]], c.clone());
        }
        u
    }

    pub fn from_sparse(&self, x: &[(usize, Q)]) -> UeaElement {
        let mut u = UeaElement::zero();
        for (i, c) in x {
            u.add_term(vec![self.rank[*i]], c.clone());
        }
        u
    }

    /// Normal form of a word of basis indices.
    pub fn normal_order(&self, word: &[usize]) -> Result<UeaElement, PbwError> {
        self.check_word(word)?;
        let ranks: Vec<usize> = word.iter().map(|&i| self.rank[i]).collect();
        Ok(self.normal_order_ranks(&ranks))
    }

    pub(crate) fn normal_order_ranks(&self, ranks: &[usize]) -> UeaElement {
        let mut u = UeaElement::one();
        for &x in ranks.iter().rev() {
            u = self.lmul_letter(x, &u);
        }
        u
    }

    /// `x · u` for a generator of rank `x`.
    pub fn lmul_letter(&self, x: usize, u: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in &u.terms {
            out.add_scaled(&self.lmul_mono(x, m), c);
        }
        out
    }

    fn lmul_mono(&self, x: usize, m: &[usize]) -> UeaElement {
        let Some(&y) = m.first() else {
            return UeaElement::monomial(vec![x], Q::one());
        };
        if x < y || (x == y && x < self.n_even) {
            let mut w = Vec::with_capacity(m.len() + 1);
            w.push(x);
            w.extend_from_slice(m);
            return UeaElement::monomial(w, Q::one());
        }
        let key = (x, m.to_vec());
        if let Some(u) = self.cache.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return u.clone();
        }
        let rest = UeaElement::monomial(m[1..].to_vec(), Q::one());
        let mut out = UeaElement::zero();
        if x == y {
            // a·a = ½[a,a]
            for (k, c) in &self.brackets[x][x] {
                out.add_scaled(&self.lmul_letter(*k, &rest), &(c * q(1, 2)));
            }
        } else {
            // x·y = ±y·x + [x,y]
            let s = koszul(self.rank_parity(x), self.rank_parity(y));
            let xr = self.lmul_letter(x, &rest);
            out.add_scaled(&self.lmul_letter(y, &xr), &Q::from_integer(s.into()));
            for (k, c) in &self.brackets[x][y] {
                out.add_scaled(&self.lmul_letter(*k, &rest), c);
            }
        }
        self.cache.lock().unwrap_or_else(|e| e.into_inner()).insert(key, out.clone());
        out
    }

    /// Normal form by rewriting adjacent pairs, the position among all
    /// out-of-order pairs chosen by `pick(count)`. Used to test that the
    /// result does not depend on the rewriting order.
    pub fn normal_order_with(&self, word: &[usize], pick: &mut dyn FnMut(usize) -> usize) -> Result<UeaElement, PbwError> {
        self.check_word(word)?;
        let mut pending: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        pending.insert(word.iter().map(|&i| self.rank[i]).collect(), Q::one());
        let mut out = UeaElement::zero();
        while let Some((w, c)) = pending.pop_first() {
            if c.is_zero() {
                continue;
            }
            let viol: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && w[i] >= self.n_even))
                .collect();
            if viol.is_empty() {
                out.add_term(w, c);
                continue;
            }
            let i = viol[pick(viol.len()) % viol.len()];
            let (x, y) = (w[i], w[i + 1]);
            let mut push = |mid: &[usize], coeff: Q| {
                let mut nw = w[..i].to_vec();
                nw.extend_from_slice(mid);
                nw.extend_from_slice(&w[i + 2..]);
                *pending.entry(nw).or_insert_with(Q::zero) += coeff;
            };
            if x == y {
                for (k, b) in &self.brackets[x][x] {
                    push(&[*k], &c * b * q(1, 2));
                }
            } else {
                let s = koszul(self.rank_parity(x), self.rank_parity(y));
                push(&[y, x], &c * Q::from_integer(s.into()));
                for (k, b) in &self.brackets[x][y] {
                    push(&[*k], &c * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, u: &UeaElement, v: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in &u.terms {
            let mut t = v.clone();
            for &x in m.iter().rev() {
                t = self.lmul_letter(x, &t);
            }
            out.add_scaled(&t, c);
        }
        out
    }

    /// Supercommutator `[u, v]` of homogeneous elements.
    pub fn supercommutator(&self, u: &UeaElement, v: &UeaElement) -> UeaElement {
        let s = match (self.parity_of(u), self.parity_of(v)) {
            (Some(a), Some(b)) => koszul(a, b),
            _ => 1,
        };
        self.mul(u, v).sub(&self.mul(v, u).scale(&Q::from_integer(s.into())))
    }

    /// Antipode: `x ↦ -x` on generators, extended as a super
    /// anti-automorphism.
    pub fn antipode(&self, u: &UeaElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in &u.terms {
            let odd = m.iter().filter(|&&r| r >= self.n_even).count();
            let flips = m.len() + odd * odd.saturating_sub(1) / 2;
            let sign = if flips % 2 == 0 { Q::one() } else { -Q::one() };
            let rev: Vec<usize> = m.iter().rev().copied().collect();
            out.add_scaled(&self.normal_order_ranks(&rev), &(c * sign));
        }
        out
    }

    pub fn rank_label(&self, r: usize) -> &str {
        self.g.label(self.order[r])
    }

    /// Canonical text: terms by degree then monomial, each as coefficient
    /// then generators with exponents.
    pub fn format(&self, u: &UeaElement) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Monomial, &Q)> = u.terms.iter().collect();
        terms.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        let mut out = String::new();
        for (n, (m, c)) in terms.into_iter().enumerate() {
            if n > 0 {
                out.push_str(" + ");
            }
            out.push_str(&fmt_q(c));
            let mut i = 0;
            while i < m.len() {
                let mut j = i;
                while j < m.len() && m[j] == m[i] {
                    j += 1;
                }
                let _ = write!(out, "*{}", self.rank_label(m[i]));
                if j - i > 1 {
                    let _ = write!(out, "^{}", j - i);
                }
                i = j;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::examples::{osp1, sl2};

    #[test]
    fn normal_words_are_fixed() {
        let g = osp1(1).unwrap();
        let u = Enveloping::new(g);
        let w = vec![0, 0, 1, 3, 4];
        let n = u.normal_order(&w).unwrap();
        assert_eq!(n, UeaElement::monomial(w.iter().map(|&i| u.rank(i)).collect(), Q::one()));
    }

    #[test]
    fn odd_square_is_half_bracket() {
        let g = osp1(1).unwrap();
        let u = Enveloping::new(g.clone());
        let a = g.odd_indices()[0];
        let lhs = u.normal_order(&[a, a]).unwrap();
        let rhs = u.from_sparse(g.bracket_basis(a, a)).scale(&q(1, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_produces_bracket() {
        let g = sl2();
        let u = Enveloping::new(g.clone());
        let lhs = u.normal_order(&[2, 0]).unwrap();
        let mut rhs = u.normal_order(&[0, 2]).unwrap();
        rhs.add_scaled(&u.from_sparse(g.bracket_basis(2, 0)), &Q::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn antipode_is_involutive() {
        let g = osp1(1).unwrap();
        let u = Enveloping::new(g);
        for w in [vec![3, 4], vec![4, 3, 0], vec![2, 1, 0, 4, 3]] {
            let x = u.normal_order(&w).unwrap();
            assert_eq!(u.antipode(&u.antipode(&x)), x);
        }
        let x = u.normal_order(&[3]).unwrap();
        assert_eq!(u.antipode(&x), x.scale(&-Q::one()));
    }
}
