//! Parities, graded spaces and the sign rule.

use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use super::ExactError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> usize {
        self as usize
    }

    pub fn from_bit(b: usize) -> Parity {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() + o.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(-1)^{|a||b|}` as `+1` or `-1`.
pub fn koszul(a: Parity, b: Parity) -> i64 {
    if a.is_odd() && b.is_odd() {
        -1
    } else {
        1
    }
}

/// Sign picked up when the items are sorted into the order given by `key`,
/// counting only transpositions of two odd items. Equal keys keep their order.
pub fn reorder_sign<K: Ord>(items: &[(K, Parity)]) -> i64 {
    let mut sign = 1;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i].0 > items[j].0 && items[i].1.is_odd() && items[j].1.is_odd() {
                sign = -sign;
            }
        }
    }
    sign
}

/// Sign of a permutation given as images of `0..n`.
pub fn perm_sign(p: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Ordered basis of labelled homogeneous vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSpace {
    basis: Vec<(String, Parity)>,
}

impl GradedSpace {
    pub fn new(basis: Vec<(String, Parity)>) -> Result<Self, ExactError> {
        let mut seen = HashSet::new();
        for (l, _) in &basis {
            if !seen.insert(l.as_str()) {
                return Err(ExactError::DuplicateLabel(l.clone()));
            }
        }
        Ok(GradedSpace { basis })
    }

    /// Even space with labels `prefix0, prefix1, ...`.
    pub fn even(prefix: &str, n: usize) -> Self {
        Self::uniform(prefix, n, Parity::Even)
    }

    pub fn odd(prefix: &str, n: usize) -> Self {
        Self::uniform(prefix, n, Parity::Odd)
    }

    fn uniform(prefix: &str, n: usize, p: Parity) -> Self {
        GradedSpace {
            basis: (0..n).map(|i| (format!("{prefix}{i}"), p)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// `(dim V_0, dim V_1)`.
    pub fn dim(&self) -> (usize, usize) {
        let odd = self.basis.iter().filter(|b| b.1.is_odd()).count();
        (self.len() - odd, odd)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].1
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].0
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.basis.iter().map(|b| b.0.as_str())
    }

    pub fn basis(&self) -> &[(String, Parity)] {
        &self.basis
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.0 == label)
    }

    /// Subspace spanned by the listed basis vectors, in the given order.
    pub fn restrict(&self, idx: &[usize]) -> GradedSpace {
        GradedSpace {
            basis: idx.iter().map(|&i| self.basis[i].clone()).collect(),
        }
    }

    /// Dual space; labels get a trailing `*`.
    pub fn dual(&self) -> GradedSpace {
        GradedSpace {
            basis: self
                .basis
                .iter()
                .map(|(l, p)| (format!("{l}*"), *p))
                .collect(),
        }
    }

    pub fn direct_sum(&self, other: &GradedSpace) -> Result<GradedSpace, ExactError> {
        let mut b = self.basis.clone();
        b.extend(other.basis.iter().cloned());
        GradedSpace::new(b)
    }
}

impl fmt::Display for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (e, o) = self.dim();
        write!(f, "{e}|{o}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_and_labels() {
        let v = GradedSpace::new(vec![
            ("x".into(), Parity::Even),
            ("s".into(), Parity::Odd),
            ("y".into(), Parity::Even),
        ])
        .unwrap();
        assert_eq!(v.dim(), (2, 1));
        assert_eq!(v.to_string(), "2|1");
        assert_eq!(v.index_of("y"), Some(2));
        assert!(GradedSpace::new(vec![("a".into(), Parity::Even), ("a".into(), Parity::Odd)]).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
        assert_eq!(perm_sign(&[1, 2, 0]), 1);
        assert_eq!(permutations(3).len(), 6);
        let items = [(2, Parity::Odd), (1, Parity::Odd), (0, Parity::Even)];
        assert_eq!(reorder_sign(&items), -1);
        assert_eq!(koszul(Parity::Odd, Parity::Odd), -1);
        assert_eq!(koszul(Parity::Even, Parity::Odd), 1);
    }
}
