use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exactla::space::perm_sign;
use crate::exactla::{fmt_q, qi, Parity, Q};

/// Monomial: exponents of the even variables and an increasing list of odd
/// variables.
pub type PolyKey = (Vec<u32>, Vec<usize>);

/// Polynomial in commuting even and anticommuting odd variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperPoly {
    n_even: usize,
    n_odd: usize,
    terms: BTreeMap<PolyKey, Q>,
}

fn sort_odd(v: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut s = v.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    let pos: Vec<usize> = v.iter().map(|x| s.binary_search(x).expect("present")).collect();
    Some((perm_sign(&pos), s))
}

impl SuperPoly {
    pub fn zero(n_even: usize, n_odd: usize) -> Self {
        SuperPoly {
            n_even,
            n_odd,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_even: usize, n_odd: usize, c: Q) -> Self {
        let mut p = Self::zero(n_even, n_odd);
        p.add_term((vec![0; n_even], Vec::new()), c);
        p
    }

    pub fn even_var(n_even: usize, n_odd: usize, k: usize) -> Self {
        let mut e = vec![0; n_even];
        e[k] = 1;
        let mut p = Self::zero(n_even, n_odd);
        p.add_term((e, Vec::new()), Q::one());
        p
    }

    pub fn odd_var(n_even: usize, n_odd: usize, a: usize) -> Self {
        let mut p = Self::zero(n_even, n_odd);
        p.add_term((vec![0; n_even], vec![a]), Q::one());
        p
    }

    pub fn n_even(&self) -> usize {
        self.n_even
    }

    pub fn n_odd(&self) -> usize {
        self.n_odd
    }

    pub fn terms(&self) -> &BTreeMap<PolyKey, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: PolyKey, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn add_scaled(&mut self, other: &SuperPoly, c: &Q) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&self, other: &SuperPoly) -> SuperPoly {
        let mut p = self.clone();
        p.add_scaled(other, &Q::one());
        p
    }

    pub fn sub(&self, other: &SuperPoly) -> SuperPoly {
        let mut p = self.clone();
        p.add_scaled(other, &-Q::one());
        p
    }

    pub fn scale(&self, c: &Q) -> SuperPoly {
        let mut p = Self::zero(self.n_even, self.n_odd);
        p.add_scaled(self, c);
        p
    }

    pub fn mul(&self, other: &SuperPoly) -> SuperPoly {
        let mut p = Self::zero(self.n_even, self.n_odd);
        for ((ea, oa), a) in &self.terms {
            for ((eb, ob), b) in &other.terms {
                let mut odd = oa.clone();
                odd.extend_from_slice(ob);
                let Some((s, odd)) = sort_odd(&odd) else {
                    continue;
                };
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                p.add_term((e, odd), a * b * qi(s));
            }
        }
        p
    }

    /// Parity of a homogeneous polynomial; zero is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.terms.keys().map(|(_, o)| Parity::from_bit(o.len() % 2));
        let first = ps.next().unwrap_or(Parity::Even);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn d_even(&self, k: usize) -> SuperPoly {
        let mut p = Self::zero(self.n_even, self.n_odd);
        for ((e, o), c) in &self.terms {
            if e[k] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[k] -= 1;
            p.add_term((e2, o.clone()), c * qi(e[k] as i64));
        }
        p
    }

    /// Left derivative in the odd variable `a`.
    pub fn d_odd(&self, a: usize) -> SuperPoly {
        let mut p = Self::zero(self.n_even, self.n_odd);
        for ((e, o), c) in &self.terms {
            if let Some(pos) = o.iter().position(|&x| x == a) {
                let mut o2 = o.clone();
                o2.remove(pos);
                let s = if pos % 2 == 0 { Q::one() } else { -Q::one() };
                p.add_term((e.clone(), o2), c * s);
            }
        }
        p
    }

    /// Image under the algebra morphism sending even variable `k` to
    /// `even[k]` and odd variable `a` to `odd[a]`.
    pub fn substitute(&self, even: &[SuperPoly], odd: &[SuperPoly], n_even: usize, n_odd: usize) -> SuperPoly {
        let mut out = Self::zero(n_even, n_odd);
        for ((e, o), c) in &self.terms {
            let mut t = Self::constant(n_even, n_odd, c.clone());
            for (k, &n) in e.iter().enumerate() {
                for _ in 0..n {
                    t = t.mul(&even[k]);
                }
            }
            for &a in o {
                t = t.mul(&odd[a]);
            }
            out.add_scaled(&t, &Q::one());
        }
        out
    }

    /// Value at a point of the even variables with the odd variables set to
    /// zero.
    pub fn body_at(&self, point: &[Q]) -> Q {
        let mut v = Q::zero();
        for ((e, o), c) in &self.terms {
            if !o.is_empty() {
                continue;
            }
            let mut t = c.clone();
            for (k, &n) in e.iter().enumerate() {
                for _ in 0..n {
                    t *= &point[k];
                }
            }
            v += t;
        }
        v
    }

    pub fn format(&self, even: &[String], odd: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((e, o), c) in &self.terms {
            let mut s = fmt_q(c);
            for (k, &n) in e.iter().enumerate() {
                match n {
                    0 => {}
                    1 => s.push_str(&format!("*{}", even[k])),
                    _ => s.push_str(&format!("*{}^{n}", even[k])),
                }
            }
            for &a in o {
                s.push_str(&format!("*{}", odd[a]));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_variables_anticommute() {
        let a = SuperPoly::odd_var(1, 2, 0);
        let b = SuperPoly::odd_var(1, 2, 1);
        assert_eq!(a.mul(&b), b.mul(&a).scale(&-Q::one()));
        assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn left_odd_derivative() {
        let a = SuperPoly::odd_var(0, 2, 0);
        let b = SuperPoly::odd_var(0, 2, 1);
        let ab = a.mul(&b);
        assert_eq!(ab.d_odd(1), a.scale(&-Q::one()));
        assert_eq!(ab.d_odd(0), b);
    }
}
