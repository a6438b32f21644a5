//! Tensor products of graded modules and the induced actions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::map::GradedMap;
use super::matrix::Matrix;
use super::rational::{qi, Q};
use super::space::{koszul, GradedSpace, Parity};
use super::ExactError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    /// A copy of the module itself.
    Vector,
    /// A copy of the dual module.
    Covector,
}

/// Action on the dual module: `(x·f)(v) = -(-1)^{|x||f|} f(x·v)`, i.e. minus
/// the supertranspose. For even `x` this is `-Aᵀ`.
pub fn dual_action(a: &GradedMap) -> GradedMap {
    let space = a.domain();
    let px = a.parity();
    let m = Matrix::from_entries(
        space.len(),
        space.len(),
        a.matrix()
            .entries()
            .map(|(j, k, v)| (k, j, -v.clone() * qi(koszul(px, space.parity(j))))),
    );
    GradedMap::new(space.dual(), space.dual(), m, px).expect("dual keeps block structure")
}

/// Basis of the tensor product; multi-indices are ordered with the last
/// factor running fastest.
pub fn tensor_space(factors: &[(GradedSpace, Variance)]) -> GradedSpace {
    let mut basis: Vec<(String, Parity)> = vec![(String::new(), Parity::Even)];
    for (k, (sp, var)) in factors.iter().enumerate() {
        let mut next = Vec::with_capacity(basis.len() * sp.len());
        for (l, p) in &basis {
            for (m, q) in sp.basis() {
                let m = match var {
                    Variance::Vector => m.clone(),
                    Variance::Covector => format!("{m}*"),
                };
                let label = if k == 0 { m } else { format!("{l}⊗{m}") };
                next.push((label, *p + *q));
            }
        }
        basis = next;
    }
    GradedSpace::new(basis).expect("tensor labels are unique")
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Leibniz extension of one action per factor to the tensor product. Each
/// factor supplies one map per generator, all lists of equal length, with
/// matching parities across a generator. Covector factors receive the dual
/// action. An odd generator passing an odd basis vector picks up a sign.
pub fn tensor_action(factors: &[(Vec<GradedMap>, Variance)]) -> Result<Vec<GradedMap>, ExactError> {
    if factors.is_empty() {
        return Err(ExactError::NoGenerators);
    }
    let ngen = factors[0].0.len();
    if factors.iter().any(|f| f.0.len() != ngen) {
        return Err(ExactError::GeneratorCount(ngen, factors.iter().map(|f| f.0.len()).max().unwrap_or(0)));
    }
    let spaces: Vec<(GradedSpace, Variance)> = factors
        .iter()
        .map(|(maps, v)| {
            let sp = maps.first().map(|m| m.domain().clone()).unwrap_or_else(|| GradedSpace::even("x", 0));
            (sp, *v)
        })
        .collect();
    let target = tensor_space(&spaces);
    let mut out = Vec::with_capacity(ngen);
    for g in 0..ngen {
        let px = factors[0].0[g].parity();
        let mut mats = Vec::with_capacity(factors.len());
        for (maps, var) in factors {
            let m = &maps[g];
            if m.parity() != px && !m.matrix().is_zero() {
                return Err(ExactError::MixedGeneratorParity(g));
            }
            let m = match var {
                Variance::Vector => m.clone(),
                Variance::Covector => dual_action(m),
            };
            mats.push(m);
        }
        let plain: Vec<(Matrix, Vec<Parity>)> = mats
            .iter()
            .map(|m| {
                let sp = m.domain();
                (m.matrix().transpose(), (0..sp.len()).map(|i| sp.parity(i)).collect())
            })
            .collect();
        let m = leibniz(&plain, px);
        out.push(GradedMap::new(target.clone(), target.clone(), m, px)?);
    }
    Ok(out)
}

/// Leibniz sum on bare matrices; each entry is `(transpose of action, factor
/// basis parities)`.
fn leibniz(factors: &[(Matrix, Vec<Parity>)], px: Parity) -> Matrix {
    let dims: Vec<usize> = factors.iter().map(|f| f.1.len()).collect();
    let st = strides(&dims);
    let total: usize = dims.iter().product();
    let mut entries = Vec::new();
    let mut idx = vec![0usize; dims.len()];
    for col in 0..total {
        let mut rem = col;
        for (k, s) in st.iter().enumerate() {
            idx[k] = rem / s;
            rem %= s;
        }
        let mut passed = Parity::Even;
        for (k, (at, pars)) in factors.iter().enumerate() {
            let sign = koszul(px, passed);
            for (r, v) in at.row(idx[k]) {
                let row = col - idx[k] * st[k] + r * st[k];
                entries.push((row, col, if sign < 0 { -v.clone() } else { v.clone() }));
            }
            passed = passed + pars[idx[k]];
        }
    }
    Matrix::from_entries(total, total, entries)
}

/// Sparse element of a tensor product of graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    factors: Vec<(GradedSpace, Variance)>,
    coeffs: BTreeMap<Vec<usize>, Q>,
}

impl TensorElement {
    pub fn zero(factors: Vec<(GradedSpace, Variance)>) -> Self {
        TensorElement {
            factors,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn factors(&self) -> &[(GradedSpace, Variance)] {
        &self.factors
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.0.len()).collect()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Q) {
        assert_eq!(idx.len(), self.factors.len(), "multi-index length");
        let e = self.coeffs.entry(idx.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn get(&self, idx: &[usize]) -> Q {
        self.coeffs.get(idx).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Parity of a basis multi-index under the sign rule.
    pub fn index_parity(&self, idx: &[usize]) -> Parity {
        idx.iter()
            .zip(&self.factors)
            .fold(Parity::Even, |p, (i, f)| p + f.0.parity(*i))
    }

    /// Common parity of all stored terms, `None` if inhomogeneous.
    pub fn parity(&self) -> Option<Parity> {
        let mut ps = self.coeffs.keys().map(|k| self.index_parity(k));
        let first = ps.next().unwrap_or(Parity::Even);
        ps.all(|p| p == first).then_some(first)
    }

    pub fn to_flat(&self) -> Vec<Q> {
        let dims = self.dims();
        let st = strides(&dims);
        let mut v = vec![Q::zero(); dims.iter().product()];
        for (k, c) in &self.coeffs {
            let pos: usize = k.iter().zip(&st).map(|(i, s)| i * s).sum();
            v[pos] = c.clone();
        }
        v
    }

    pub fn from_flat(factors: Vec<(GradedSpace, Variance)>, flat: &[Q]) -> Self {
        let dims: Vec<usize> = factors.iter().map(|f| f.0.len()).collect();
        let st = strides(&dims);
        let mut t = TensorElement::zero(factors);
        for (pos, c) in flat.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut rem = pos;
            let idx = st
                .iter()
                .map(|s| {
                    let i = rem / s;
                    rem %= s;
                    i
                })
                .collect();
            t.coeffs.insert(idx, c.clone());
        }
        t
    }

    /// Totally antisymmetric tensor `v_{i1} ∧ ... ∧ v_{ik}` on `k` copies of
    /// one space (even basis vectors): the signed sum over permutations.
    pub fn wedge(space: &GradedSpace, var: Variance, idx: &[usize]) -> Self {
        let factors = vec![(space.clone(), var); idx.len()];
        let mut t = TensorElement::zero(factors);
        for p in super::space::permutations(idx.len()) {
            let s = super::space::perm_sign(&p);
            let k: Vec<usize> = p.iter().map(|&i| idx[i]).collect();
            t.add_term(k, qi(s));
        }
        t
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut t = TensorElement::zero(self.factors.clone());
        if !c.is_zero() {
            t.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        t
    }

    pub fn add(&self, other: &TensorElement) -> Self {
        let mut t = self.clone();
        for (k, v) in &other.coeffs {
            t.add_term(k.clone(), v.clone());
        }
        t
    }

    /// Applies one action matrix per factor (Leibniz rule) directly on the
    /// sparse coefficients, without forming the big matrix.
    pub fn act(&self, per_factor: &[GradedMap]) -> Result<Self, ExactError> {
        if per_factor.len() != self.factors.len() {
            return Err(ExactError::GeneratorCount(self.factors.len(), per_factor.len()));
        }
        let px = per_factor.first().map(|m| m.parity()).unwrap_or(Parity::Even);
        let mats: Vec<Matrix> = per_factor
            .iter()
            .zip(&self.factors)
            .map(|(m, (_, var))| match var {
                Variance::Vector => m.matrix().transpose(),
                Variance::Covector => dual_action(m).matrix().transpose(),
            })
            .collect();
        let mut out = TensorElement::zero(self.factors.clone());
        for (k, c) in &self.coeffs {
            let mut passed = Parity::Even;
            for (f, at) in mats.iter().enumerate() {
                let sign = koszul(px, passed);
                for (r, v) in at.row(k[f]) {
                    let mut nk = k.clone();
                    nk[f] = *r;
                    let val = c * v;
                    out.add_term(nk, if sign < 0 { -val } else { val });
                }
                passed = passed + self.factors[f].0.parity(k[f]);
            }
        }
        Ok(out)
    }
}

/// Natural pairing of a vector with a covector of the same space.
pub fn pairing(v: &[Q], f: &[Q]) -> Q {
    v.iter().zip(f).map(|(a, b)| a * b).sum()
}

/// Identity action helper.
pub fn identity_action(space: &GradedSpace) -> GradedMap {
    GradedMap::endo(space, Matrix::scalar(space.len(), Q::one()), Parity::Even).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::q;

    fn act(space: &GradedSpace, rows: &[&[i64]]) -> GradedMap {
        GradedMap::endo(space, Matrix::from_ints(rows), Parity::Even).unwrap()
    }

    #[test]
    fn single_factor_passthrough() {
        let v = GradedSpace::even("v", 2);
        let a = act(&v, &[&[1, 2], &[3, 4]]);
        let t = tensor_action(&[(vec![a.clone()], Variance::Vector)]).unwrap();
        assert_eq!(t[0].matrix(), a.matrix());
    }

    #[test]
    fn leibniz_on_square() {
        let v = GradedSpace::even("v", 2);
        let a = act(&v, &[&[1, 2], &[0, -1]]);
        let t = tensor_action(&[(vec![a.clone()], Variance::Vector), (vec![a.clone()], Variance::Vector)]).unwrap();
        let i = Matrix::identity(2);
        let expect = a.matrix().kron(&i).add(&i.kron(a.matrix()));
        assert_eq!(t[0].matrix(), &expect);
    }

    #[test]
    fn dual_action_preserves_pairing() {
        // oracle: <A v, f> + <v, A* f> = 0 for the pairing to be invariant
        let v = GradedSpace::even("v", 3);
        let a = act(&v, &[&[1, 2, 0], &[0, -1, 5], &[3, 0, 2]]);
        let d = dual_action(&a);
        let x = vec![qi(1), q(1, 2), qi(-3)];
        let f = vec![qi(2), qi(7), q(-1, 3)];
        let lhs = pairing(&a.matrix().apply(&x), &f) + pairing(&x, &d.matrix().apply(&f));
        assert!(lhs.is_zero());
        assert_eq!(d.matrix(), &a.matrix().transpose().neg());
    }

    #[test]
    fn odd_generator_signs() {
        let v = GradedSpace::new(vec![("x".into(), Parity::Even), ("s".into(), Parity::Odd)]).unwrap();
        let a = GradedMap::endo(&v, Matrix::from_ints(&[&[0, 1], &[1, 0]]), Parity::Odd).unwrap();
        let t = tensor_action(&[(vec![a.clone()], Variance::Vector), (vec![a.clone()], Variance::Vector)]).unwrap();
        // a·(s⊗s) = (a s)⊗s - s⊗(a s) = x⊗s - s⊗x
        let col = 3; // s⊗s
        assert_eq!(t[0].matrix().get(1, col), qi(1));
        assert_eq!(t[0].matrix().get(2, col), qi(-1));
        let mut e = TensorElement::zero(vec![(v.clone(), Variance::Vector); 2]);
        e.add_term(vec![1, 1], qi(1));
        let r = e.act(&[a.clone(), a]).unwrap();
        assert_eq!(r.get(&[0, 1]), qi(1));
        assert_eq!(r.get(&[1, 0]), qi(-1));
    }
}
