//! Lie superalgebras given by structure constants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::LieError;
use crate::exactla::{fmt_q, koszul, qi, GradedMap, GradedSpace, Matrix, Parity, Span, Q};

/// Sparse vector, sorted by index, no zeros.
pub type SVec = Vec<(usize, Q)>;

pub fn sparse(v: &[Q]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense(v: &SVec, n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `a*x + b*y` on sparse vectors.
pub fn saxpby(a: &Q, x: &SVec, b: &Q, y: &SVec) -> SVec {
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (i, c) in x {
        *acc.entry(*i).or_insert_with(Q::zero) += a * c;
    }
    for (i, c) in y {
        *acc.entry(*i).or_insert_with(Q::zero) += b * c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn sscale(a: &Q, x: &SVec) -> SVec {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, c)| (*i, a * c)).collect()
}

/// Finite-dimensional Lie superalgebra. Brackets are kept for `i <= j`; the
/// full table is expanded once for lookups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebra {
    space: GradedSpace,
    upper: BTreeMap<(usize, usize), SVec>,
    full: Vec<SVec>,
}

impl LieSuperalgebra {
    /// Builds from brackets `[b_i, b_j] = Σ c_k b_k`. Pairs may be given in
    /// either order; the reverse is filled in by super-antisymmetry. Giving a
    /// pair twice (in any order) must be consistent.
    pub fn new(space: GradedSpace, brackets: Vec<(usize, usize, SVec)>) -> Result<Self, LieError> {
        let n = space.len();
        let mut upper: BTreeMap<(usize, usize), SVec> = BTreeMap::new();
        for (i, j, v) in brackets {
            if i >= n || j >= n || v.iter().any(|(k, _)| *k >= n) {
                return Err(LieError::IndexOutOfRange);
            }
            let v: SVec = {
                let mut m: BTreeMap<usize, Q> = BTreeMap::new();
                for (k, c) in v {
                    *m.entry(k).or_insert_with(Q::zero) += c;
                }
                m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            };
            let target = space.parity(i) + space.parity(j);
            if let Some((k, _)) = v.iter().find(|(k, _)| space.parity(*k) != target) {
                return Err(LieError::BracketParity {
                    left: space.label(i).to_string(),
                    right: space.label(j).to_string(),
                    result: space.label(*k).to_string(),
                });
            }
            let (key, v) = if i <= j {
                ((i, j), v)
            } else {
                let s = -qi(koszul(space.parity(i), space.parity(j)));
                ((j, i), sscale(&s, &v))
            };
            if key.0 == key.1 && space.parity(key.0) == Parity::Even && !v.is_empty() {
                return Err(LieError::Antisymmetry(space.label(key.0).to_string()));
            }
            if let Some(old) = upper.get(&key) {
                if *old != v {
                    return Err(LieError::InconsistentBracket(
                        space.label(key.0).to_string(),
                        space.label(key.1).to_string(),
                    ));
                }
                continue;
            }
            if !v.is_empty() {
                upper.insert(key, v);
            }
        }
        let mut full = vec![Vec::new(); n * n];
        for ((i, j), v) in &upper {
            full[i * n + j] = v.clone();
            if i != j {
                let s = -qi(koszul(space.parity(*i), space.parity(*j)));
                full[j * n + i] = sscale(&s, v);
            }
        }
        Ok(LieSuperalgebra { space, upper, full })
    }

    pub fn abelian(space: GradedSpace) -> Self {
        Self::new(space, Vec::new()).expect("no brackets")
    }

    /// Superalgebra spanned by homogeneous supermatrices closed under the
    /// supercommutator. Fails if the span is not closed.
    pub fn from_matrices(basis: Vec<(String, Parity, Matrix)>) -> Result<Self, LieError> {
        let space = GradedSpace::new(basis.iter().map(|b| (b.0.clone(), b.1)).collect())?;
        let n = basis.len();
        let flat: Vec<Vec<Q>> = basis.iter().map(|b| b.2.flatten()).collect();
        let len = flat.first().map_or(0, |f| f.len());
        let span = Span::from_vectors(len, flat.iter());
        if span.dim() != n {
            return Err(LieError::DependentBasis);
        }
        let mut br = Vec::new();
        for i in 0..n {
            for j in i..n {
                let s = koszul(basis[i].1, basis[j].1);
                let c = basis[i].2.graded_commutator(&basis[j].2, s);
                let co = span
                    .coordinates(&c.flatten())
                    .ok_or_else(|| LieError::NotClosed(basis[i].0.clone(), basis[j].0.clone()))?;
                br.push((i, j, sparse(&co)));
            }
        }
        Self::new(space, br)
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.label(i)
    }

    pub fn index(&self, label: &str) -> Result<usize, LieError> {
        self.space
            .index_of(label)
            .ok_or_else(|| LieError::UnknownBasis(label.to_string()))
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.parity(i).is_odd()).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i).is_odd()).collect()
    }

    /// Stored upper-triangular table.
    pub fn upper_table(&self) -> &BTreeMap<(usize, usize), SVec> {
        &self.upper
    }

    /// `[b_i, b_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SVec {
        &self.full[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Q {
        self.bracket_basis(i, j)
            .iter()
            .find(|e| e.0 == k)
            .map(|e| e.1.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn bracket_sparse(&self, x: &SVec, y: &SVec) -> SVec {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in self.bracket_basis(*i, *j) {
                    *acc.entry(*k).or_insert_with(Q::zero) += &ab * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Bilinear bracket of two dense vectors.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Result<Vec<Q>, LieError> {
        if x.len() != self.dim() || y.len() != self.dim() {
            return Err(LieError::Dimension(self.dim(), x.len().max(y.len())));
        }
        Ok(dense(&self.bracket_sparse(&sparse(x), &sparse(y)), self.dim()))
    }

    /// Parity of a vector, `None` if it mixes parities. Zero is even.
    pub fn element_parity(&self, x: &[Q]) -> Option<Parity> {
        let mut p = None;
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match p {
                None => p = Some(self.parity(i)),
                Some(q) if q != self.parity(i) => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(Parity::Even))
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// Matrix of `ad(b_i)`.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        let n = self.dim();
        Matrix::from_entries(
            n,
            n,
            (0..n).flat_map(|j| self.bracket_basis(i, j).iter().map(move |(k, c)| (*k, j, c.clone()))),
        )
    }

    /// Super-Jacobi check on every ordered basis triple.
    pub fn check_super_jacobi(&self) -> JacobiReport {
        let n = self.dim();
        let per_i: Vec<Vec<(usize, usize, usize, SVec)>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut bad = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        let r = self.jacobi_residual(i, j, k);
                        if !r.is_empty() {
                            bad.push((i, j, k, r));
                        }
                    }
                }
                bad
            })
            .collect();
        JacobiReport::from_failures(self, per_i.into_iter().flatten().collect(), n * n * n)
    }

    /// `[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> SVec {
        let one = Q::one();
        let bi = vec![(i, one.clone())];
        let bj = vec![(j, one.clone())];
        let bk = vec![(k, one.clone())];
        let a = self.bracket_sparse(&bi, self.bracket_basis(j, k));
        let b = self.bracket_sparse(self.bracket_basis(i, j), &bk);
        let c = self.bracket_sparse(&bj, self.bracket_basis(i, k));
        let s = qi(koszul(self.parity(i), self.parity(j)));
        let bc = saxpby(&one, &b, &s, &c);
        saxpby(&one, &a, &-one.clone(), &bc)
    }

    /// Super-antisymmetry on every basis pair of the expanded table.
    pub fn check_antisymmetry(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = -qi(koszul(self.parity(i), self.parity(j)));
                *self.bracket_basis(i, j) == sscale(&s, self.bracket_basis(j, i))
            })
        })
    }

    /// Copy with one structure constant `c[i][j][k]` shifted by `delta`
    /// (the reversed pair follows by antisymmetry).
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: Q) -> Result<Self, LieError> {
        let mut br: Vec<(usize, usize, SVec)> = self
            .upper
            .iter()
            .map(|(&(a, b), v)| (a, b, v.clone()))
            .collect();
        let (a, b, d) = if i <= j {
            (i, j, delta)
        } else {
            (j, i, -delta * qi(koszul(self.parity(i), self.parity(j))))
        };
        match br.iter_mut().find(|e| e.0 == a && e.1 == b) {
            Some(e) => e.2 = saxpby(&Q::one(), &e.2, &Q::one(), &vec![(k, d)]),
            None => br.push((a, b, vec![(k, d)])),
        }
        Self::new(self.space.clone(), br)
    }

    /// Adjoint representation; refuses algebras failing Jacobi.
    pub fn adjoint_rep(&self) -> Result<super::Representation, LieError> {
        let rep = self.jacobi_free_adjoint();
        if !self.check_super_jacobi().pass {
            return Err(LieError::JacobiFails);
        }
        Ok(rep)
    }

    pub(crate) fn jacobi_free_adjoint(&self) -> super::Representation {
        let maps = (0..self.dim())
            .map(|i| GradedMap::endo(&self.space, self.ad_matrix(i), self.parity(i)).expect("ad respects parity"))
            .collect();
        super::Representation::new_unchecked(self.clone(), self.space.clone(), maps)
    }

    /// Subalgebra on a subset of basis vectors, when closed.
    pub fn restrict(&self, idx: &[usize]) -> Result<LieSuperalgebra, LieError> {
        let mut pos = vec![usize::MAX; self.dim()];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let mut br = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a) {
                let mut v = Vec::new();
                for (k, c) in self.bracket_basis(i, j) {
                    if pos[*k] == usize::MAX {
                        return Err(LieError::NotClosed(self.label(i).into(), self.label(j).into()));
                    }
                    v.push((pos[*k], c.clone()));
                }
                br.push((a, b, v));
            }
        }
        Self::new(self.space.restrict(idx), br)
    }

    /// Same algebra in a new basis: `new_b_a = Σ_i p[i][a] b_i` with
    /// invertible `p` (columns are the new basis vectors).
    pub fn change_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<LieSuperalgebra, LieError> {
        let n = self.dim();
        let cols: Vec<Vec<Q>> = (0..n).map(|a| (0..n).map(|i| p.get(i, a)).collect()).collect();
        let span = Span::from_vectors(n, cols.iter());
        if span.dim() != n {
            return Err(LieError::DependentBasis);
        }
        let mut parities = Vec::with_capacity(n);
        for c in &cols {
            parities.push(self.element_parity(c).ok_or(LieError::InhomogeneousBasis)?);
        }
        let space = GradedSpace::new(labels.into_iter().zip(parities).collect())?;
        let mut br = Vec::new();
        for a in 0..n {
            for b in a..n {
                let v = self.bracket(&cols[a], &cols[b])?;
                let co = span.coordinates(&v).expect("full rank");
                br.push((a, b, sparse(&co)));
            }
        }
        Self::new(space, br)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: [String; 3],
    pub indices: [usize; 3],
    pub residual: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct JacobiReport {
    pub pass: bool,
    pub triples_checked: usize,
    pub failures: usize,
    pub first: Option<JacobiFailure>,
    /// Failing triples (capped) for localisation.
    pub sample: Vec<JacobiFailure>,
    /// Failure counts by parity pattern of the triple, e.g. "eoo".
    pub by_parity: BTreeMap<String, usize>,
}

pub const SAMPLE_CAP: usize = 64;

impl JacobiReport {
    fn from_failures(g: &LieSuperalgebra, bad: Vec<(usize, usize, usize, SVec)>, total: usize) -> Self {
        let mk = |(i, j, k, r): &(usize, usize, usize, SVec)| JacobiFailure {
            triple: [g.label(*i).into(), g.label(*j).into(), g.label(*k).into()],
            indices: [*i, *j, *k],
            residual: r.iter().map(|(a, c)| (g.label(*a).to_string(), fmt_q(c))).collect(),
        };
        let mut by_parity = BTreeMap::new();
        for (i, j, k, _) in &bad {
            let key: String = [i, j, k]
                .iter()
                .map(|&&x| if g.parity(x).is_odd() { 'o' } else { 'e' })
                .collect();
            *by_parity.entry(key).or_insert(0) += 1;
        }
        JacobiReport {
            pass: bad.is_empty(),
            triples_checked: total,
            failures: bad.len(),
            first: bad.first().map(mk),
            sample: bad.iter().take(SAMPLE_CAP).map(mk).collect(),
            by_parity,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_reconstruction() {
        let sp = GradedSpace::new(vec![("v".into(), Parity::Even), ("a".into(), Parity::Odd), ("b".into(), Parity::Odd)]).unwrap();
        let g = LieSuperalgebra::new(sp, vec![(2, 1, vec![(0, qi(1))])]).unwrap();
        // odd-odd brackets are symmetric
        assert_eq!(g.structure_constant(1, 2, 0), qi(1));
        assert_eq!(g.structure_constant(2, 1, 0), qi(1));
        assert!(g.check_antisymmetry());
        assert!(g.check_super_jacobi().pass);
    }

    #[test]
    fn rejects_bad_parity_and_even_square() {
        let sp = GradedSpace::new(vec![("v".into(), Parity::Even), ("a".into(), Parity::Odd)]).unwrap();
        assert!(matches!(
            LieSuperalgebra::new(sp.clone(), vec![(0, 1, vec![(0, qi(1))])]),
            Err(LieError::BracketParity { .. })
        ));
        assert!(matches!(
            LieSuperalgebra::new(sp, vec![(0, 0, vec![(0, qi(1))])]),
            Err(LieError::Antisymmetry(_))
        ));
    }
}
