use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::clifford::forms::sort_signed;
use crate::exactla::{fmt_q, parse_q, ExactError, Matrix, Q};

/// Alternating covariant 4-tensor on `m0`, stored by strictly increasing
/// index quadruples in the local basis of `m0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FluxForm {
    dim: usize,
    comps: BTreeMap<[usize; 4], Q>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FluxJson {
    pub dim: usize,
    pub components: Vec<([usize; 4], String)>,
}

impl FluxForm {
    pub fn zero(dim: usize) -> Self {
        FluxForm { dim, comps: BTreeMap::new() }
    }

    /// Adds `c · e^{i} ∧ e^{j} ∧ e^{k} ∧ e^{l}`; repeated indices give zero.
    pub fn add_term(&mut self, idx: [usize; 4], c: Q) {
        assert!(idx.iter().all(|&i| i < self.dim), "flux index out of range");
        if let Some((s, sorted)) = sort_signed(&idx) {
            let key = [sorted[0], sorted[1], sorted[2], sorted[3]];
            let v = self.comps.remove(&key).unwrap_or_else(Q::zero) + c * Q::from_integer(s.into());
            if !v.is_zero() {
                self.comps.insert(key, v);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// `F(e_i, e_j, e_k, e_l)` for any index order.
    pub fn get(&self, idx: [usize; 4]) -> Q {
        match sort_signed(&idx) {
            None => Q::zero(),
            Some((s, sorted)) => self
                .comps
                .get(&[sorted[0], sorted[1], sorted[2], sorted[3]])
                .map_or_else(Q::zero, |v| v * Q::from_integer(s.into())),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize; 4], &Q)> {
        self.comps.iter()
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut f = FluxForm::zero(self.dim);
        for (k, v) in &self.comps {
            f.add_term(*k, v * c);
        }
        f
    }

    pub fn add(&self, other: &FluxForm) -> Self {
        let mut f = self.clone();
        for (k, v) in &other.comps {
            f.add_term(*k, v.clone());
        }
        f
    }

    /// Pull back along `P`: `(P*F)(x..) = F(Px, ..)` where `P` maps the new
    /// basis into old coordinates (columns).
    pub fn pull_back(&self, p: &Matrix) -> FluxForm {
        let n = p.ncols();
        let pt = p.transpose();
        let mut out = FluxForm::zero(n);
        for (k, v) in &self.comps {
            // expand e^{k0}∧..∧e^{k3} into new coordinates
            for a in pt.entries().filter(|e| e.1 == k[0]) {
                for b in pt.entries().filter(|e| e.1 == k[1]) {
                    for c in pt.entries().filter(|e| e.1 == k[2]) {
                        for d in pt.entries().filter(|e| e.1 == k[3]) {
                            out.add_term([a.0, b.0, c.0, d.0], v * a.2 * b.2 * c.2 * d.2);
                        }
                    }
                }
            }
        }
        out
    }

    /// Infinitesimal action `(X·F)(v1..v4) = -Σ F(.., X v_i, ..)` is zero.
    pub fn is_invariant(&self, x: &Matrix) -> bool {
        let n = self.dim;
        let mut acc: BTreeMap<[usize; 4], Q> = BTreeMap::new();
        for (k, v) in &self.comps {
            // F∘(X in slot p): coefficient of e^{j} in e^{k_p}∘X is X[k_p][j]
            for p in 0..4 {
                for (j, xv) in x.row(k[p]) {
                    let mut idx = *k;
                    idx[p] = *j;
                    if let Some((s, sorted)) = sort_signed(&idx) {
                        let key = [sorted[0], sorted[1], sorted[2], sorted[3]];
                        *acc.entry(key).or_insert_with(Q::zero) += v * xv * Q::from_integer(s.into());
                    }
                }
            }
        }
        let _ = n;
        acc.values().all(|v| v.is_zero())
    }

    pub fn to_json(&self) -> FluxJson {
        FluxJson {
            dim: self.dim,
            components: self.comps.iter().map(|(k, v)| (*k, fmt_q(v))).collect(),
        }
    }

    pub fn from_json(j: &FluxJson) -> Result<Self, ExactError> {
        let mut f = FluxForm::zero(j.dim);
        for (k, v) in &j.components {
            f.add_term(*k, parse_q(v)?);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::qi;
    use crate::liesuper::examples::wedge_matrix;

    #[test]
    fn alternating_storage() {
        let mut f = FluxForm::zero(5);
        f.add_term([3, 0, 1, 2], qi(2));
        assert_eq!(f.get([0, 1, 2, 3]), qi(-2));
        assert_eq!(f.get([1, 0, 2, 3]), qi(2));
        f.add_term([0, 1, 2, 3], qi(2));
        assert!(f.is_zero());
    }

    #[test]
    fn volume_is_rotation_invariant() {
        let mut f = FluxForm::zero(5);
        f.add_term([0, 1, 2, 3], qi(1));
        let eta = [1, 1, 1, 1, 1];
        assert!(f.is_invariant(&wedge_matrix(&eta, 0, 2)));
        assert!(!f.is_invariant(&wedge_matrix(&eta, 0, 4)));
    }
}
