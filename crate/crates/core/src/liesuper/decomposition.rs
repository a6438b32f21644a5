use serde::Serialize;

use super::algebra::SVec;
use super::{LieError, LieSuperalgebra};
use crate::exactla::solve::solve_homogeneous;
use crate::exactla::{tensor_action, GradedMap, GradedSpace, Matrix, Parity, TensorElement, Variance, Q};
use num_traits::{One, Zero};

/// `g = h + m` with `h` and `m` spanned by complementary sets of basis
/// vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductiveDecomposition {
    algebra: LieSuperalgebra,
    h: Vec<usize>,
    m: Vec<usize>,
    // global index -> (is_h, local index)
    loc: Vec<(bool, usize)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReductiveReport {
    pub subalgebra: bool,
    pub reductive: bool,
    pub symmetric: bool,
    pub degenerate: bool,
    /// Offending pairs as labels, `[h,h]` leaks first then `[h,m]` leaks.
    pub violations: Vec<(String, String)>,
}

impl ReductiveDecomposition {
    pub fn new(algebra: LieSuperalgebra, h: Vec<usize>, m: Vec<usize>) -> Result<Self, LieError> {
        let n = algebra.dim();
        let mut loc = vec![(false, usize::MAX); n];
        for (k, &i) in h.iter().enumerate() {
            if i >= n || loc[i].1 != usize::MAX {
                return Err(LieError::BadPartition);
            }
            loc[i] = (true, k);
        }
        for (k, &i) in m.iter().enumerate() {
            if i >= n || loc[i].1 != usize::MAX {
                return Err(LieError::BadPartition);
            }
            loc[i] = (false, k);
        }
        if loc.iter().any(|l| l.1 == usize::MAX) {
            return Err(LieError::BadPartition);
        }
        Ok(ReductiveDecomposition { algebra, h, m, loc })
    }

    pub fn from_labels(algebra: LieSuperalgebra, h: &[&str], m: &[&str]) -> Result<Self, LieError> {
        let hi = h.iter().map(|l| algebra.index(l)).collect::<Result<_, _>>()?;
        let mi = m.iter().map(|l| algebra.index(l)).collect::<Result<_, _>>()?;
        Self::new(algebra, hi, mi)
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn h(&self) -> &[usize] {
        &self.h
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    pub fn m_space(&self) -> GradedSpace {
        self.algebra.space().restrict(&self.m)
    }

    pub fn h_space(&self) -> GradedSpace {
        self.algebra.space().restrict(&self.h)
    }

    /// Local position of a global index: `(true, k)` for `h[k]`.
    pub fn locate(&self, i: usize) -> (bool, usize) {
        self.loc[i]
    }

    fn split(&self, v: &SVec) -> (SVec, SVec) {
        let mut hv = Vec::new();
        let mut mv = Vec::new();
        for (k, c) in v {
            let (is_h, l) = self.loc[*k];
            if is_h {
                hv.push((l, c.clone()));
            } else {
                mv.push((l, c.clone()));
            }
        }
        hv.sort_by_key(|e| e.0);
        mv.sort_by_key(|e| e.0);
        (hv, mv)
    }

    /// `[m_a, m_b]` split into `(h-part, m-part)` in local coordinates.
    pub fn bracket_mm(&self, a: usize, b: usize) -> (SVec, SVec) {
        self.split(self.algebra.bracket_basis(self.m[a], self.m[b]))
    }

    /// `[h_a, m_b]` in `m` coordinates (the `h` part is dropped; it vanishes
    /// for reductive input).
    pub fn bracket_hm(&self, a: usize, b: usize) -> SVec {
        self.split(self.algebra.bracket_basis(self.h[a], self.m[b])).1
    }

    pub fn check_reductive(&self) -> ReductiveReport {
        let g = &self.algebra;
        let mut violations = Vec::new();
        let mut sub = true;
        for &a in &self.h {
            for &b in &self.h {
                if !self.split(g.bracket_basis(a, b)).1.is_empty() {
                    sub = false;
                    violations.push((g.label(a).into(), g.label(b).into()));
                }
            }
        }
        let mut red = sub;
        for &a in &self.h {
            for &b in &self.m {
                if !self.split(g.bracket_basis(a, b)).0.is_empty() {
                    red = false;
                    violations.push((g.label(a).into(), g.label(b).into()));
                }
            }
        }
        let symmetric = self
            .m
            .iter()
            .all(|&a| self.m.iter().all(|&b| self.split(g.bracket_basis(a, b)).1.is_empty()));
        ReductiveReport {
            subalgebra: sub,
            reductive: red,
            symmetric: red && symmetric,
            degenerate: self.h.is_empty() || self.m.is_empty(),
            violations,
        }
    }

    pub fn require_reductive(&self) -> Result<(), LieError> {
        if self.check_reductive().reductive {
            Ok(())
        } else {
            Err(LieError::NotReductive)
        }
    }

    /// Matrix of `ad(h_a)` restricted to `m`.
    pub fn h_action_matrix(&self, a: usize) -> Matrix {
        let k = self.m.len();
        Matrix::from_entries(
            k,
            k,
            (0..k).flat_map(|b| self.bracket_hm(a, b).into_iter().map(move |(r, c)| (r, b, c))),
        )
    }

    /// Isotropy action on `m`, one map per `h` basis vector.
    pub fn isotropy_action(&self) -> Vec<GradedMap> {
        let ms = self.m_space();
        (0..self.h.len())
            .map(|a| GradedMap::endo(&ms, self.h_action_matrix(a), self.algebra.parity(self.h[a])).expect("reductive action"))
            .collect()
    }

    /// Isotropy action of arbitrary elements of `h` (local coordinates).
    pub fn isotropy_action_of(&self, gens: &[Vec<Q>]) -> Vec<GradedMap> {
        let ms = self.m_space();
        let base: Vec<Matrix> = (0..self.h.len()).map(|a| self.h_action_matrix(a)).collect();
        gens.iter()
            .map(|x| {
                let mut m = Matrix::zeros(ms.len(), ms.len());
                let mut par = Parity::Even;
                for (a, c) in x.iter().enumerate() {
                    if !c.is_zero() {
                        m = m.lin_comb(&Q::one(), &base[a], c);
                        par = self.algebra.parity(self.h[a]);
                    }
                }
                GradedMap::endo(&ms, m, par).expect("homogeneous generator")
            })
            .collect()
    }

    /// Basis of `h`-invariant tensors in `m^{⊗r} ⊗ (m*)^{⊗s}`.
    pub fn invariants_in_tensor(&self, r: usize, s: usize) -> Result<Vec<TensorElement>, LieError> {
        self.require_reductive()?;
        let gens: Vec<Vec<Q>> = (0..self.h.len())
            .map(|a| {
                let mut v = vec![Q::zero(); self.h.len()];
                v[a] = Q::one();
                v
            })
            .collect();
        Ok(self.invariants_under(&gens, r, s))
    }

    /// Same with a caller-supplied spanning set of `h`.
    pub fn invariants_under(&self, gens: &[Vec<Q>], r: usize, s: usize) -> Vec<TensorElement> {
        let acts = self.isotropy_action_of(gens);
        invariant_tensors(&self.m_space(), &acts, r, s)
    }
}

/// Joint kernel of the induced action on `V^{⊗r} ⊗ (V*)^{⊗s}`.
pub fn invariant_tensors(space: &GradedSpace, acts: &[GradedMap], r: usize, s: usize) -> Vec<TensorElement> {
    let factors: Vec<(GradedSpace, Variance)> = std::iter::repeat((space.clone(), Variance::Vector))
        .take(r)
        .chain(std::iter::repeat((space.clone(), Variance::Covector)).take(s))
        .collect();
    let total: usize = factors.iter().map(|f| f.0.len()).product();
    if factors.is_empty() {
        return vec![TensorElement::from_flat(factors, &[Q::one()])];
    }
    let mut rows = Vec::new();
    if !acts.is_empty() {
        let per: Vec<(Vec<GradedMap>, Variance)> = factors.iter().map(|(_, v)| (acts.to_vec(), *v)).collect();
        let big = tensor_action(&per).expect("consistent factors");
        for m in &big {
            for i in 0..total {
                let row = m.matrix().row(i);
                if !row.is_empty() {
                    rows.push(row.to_vec());
                }
            }
        }
    }
    solve_homogeneous(rows, total)
        .into_iter()
        .map(|v| TensorElement::from_flat(factors.clone(), &v))
        .collect()
}
