//! Exact kernels, spans and intertwiner spaces.
//!
//! Elimination is fraction-free on integer rows. Rows are scaled to primitive
//! integer vectors, pivots are the entries of smallest bit length among the
//! rows competing for a column, and every combination is divided back down
//! by the content of the result. Arithmetic runs on `i128` and restarts on
//! big integers the first time a product would overflow.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::map::GradedMap;
use super::matrix::Matrix;
use super::rational::{common_denominator, Q};
use super::space::Parity;
use super::ExactError;

/// Sparse rational row: `(column, value)` sorted by column.
pub type SparseRow = Vec<(usize, Q)>;

trait Ring: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    /// `a*b - c*d`, `None` on overflow.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn bits(&self) -> u64;
    fn is_unit(&self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, d: &Self) -> Self {
        *self / *d
    }
    fn bits(&self) -> u64 {
        128 - self.unsigned_abs().leading_zeros() as u64
    }
    fn is_unit(&self) -> bool {
        self.unsigned_abs() == 1
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn bits(&self) -> u64 {
        BigInt::bits(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type IRow<T> = Vec<(usize, T)>;

fn normalize<T: Ring>(row: &mut IRow<T>) {
    if row.is_empty() {
        return;
    }
    let mut g = row[0].1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = g.neg();
    }
    if !(g.is_unit() && !g.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// `a*r - b*p`, dropping zeros. Assumes the leading entries cancel.
fn combine<T: Ring>(r: &IRow<T>, a: &T, p: &IRow<T>, b: &T) -> Option<IRow<T>> {
    let zero = T::zero();
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let (c, v) = if j == p.len() || (i < r.len() && r[i].0 < p[j].0) {
            i += 1;
            (r[i - 1].0, T::mul_sub(a, &r[i - 1].1, b, &zero)?)
        } else if i == r.len() || p[j].0 < r[i].0 {
            j += 1;
            (p[j - 1].0, T::mul_sub(a, &zero, b, &p[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (r[i - 1].0, T::mul_sub(a, &r[i - 1].1, b, &p[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    Some(out)
}

fn row_bits<T: Ring>(r: &IRow<T>) -> u64 {
    r.iter().map(|(_, v)| v.bits()).max().unwrap_or(0)
}

/// Echelon form by leading-column buckets. Returns pivot rows ordered by
/// pivot column, or `None` if `T` overflowed.
fn eliminate<T: Ring>(rows: Vec<IRow<T>>, ncols: usize) -> Option<Vec<IRow<T>>> {
    let mut buckets: Vec<Vec<IRow<T>>> = vec![Vec::new(); ncols];
    for mut r in rows {
        if r.is_empty() {
            continue;
        }
        normalize(&mut r);
        buckets[r[0].0].push(r);
    }
    let mut pivots = Vec::new();
    for c in 0..ncols {
        let mut cand = std::mem::take(&mut buckets[c]);
        if cand.is_empty() {
            continue;
        }
        let best = (0..cand.len())
            .min_by_key(|&k| (cand[k][0].1.bits(), row_bits(&cand[k]), cand[k].len()))
            .unwrap();
        let piv = cand.swap_remove(best);
        for r in cand {
            if r == piv {
                continue;
            }
            let g = piv[0].1.gcd(&r[0].1);
            let a = piv[0].1.div_exact(&g);
            let b = r[0].1.div_exact(&g);
            let mut nr = combine(&r, &a, &piv, &b)?;
            if !nr.is_empty() {
                normalize(&mut nr);
                let lead = nr[0].0;
                debug_assert!(lead > c);
                buckets[lead].push(nr);
            }
        }
        pivots.push(piv);
    }
    Some(pivots)
}

fn to_integer_row(r: &[(usize, Q)]) -> IRow<BigInt> {
    let l = common_denominator(r.iter().map(|e| &e.1));
    r.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, (v.numer() * &l) / v.denom()))
        .collect()
}

/// Row echelon form of sparse rational rows over `ncols` columns.
/// Pivot rows are primitive integer rows sorted by pivot column.
pub struct Echelon {
    ncols: usize,
    rows: Vec<IRow<BigInt>>,
}

impl Echelon {
    pub fn new(rows: Vec<SparseRow>, ncols: usize) -> Echelon {
        let big: Vec<IRow<BigInt>> = rows.iter().map(|r| to_integer_row(r)).collect();
        let small: Option<Vec<IRow<i128>>> = big
            .iter()
            .map(|r| r.iter().map(|(c, v)| v.to_i128().map(|x| (*c, x))).collect())
            .collect();
        let rows = small
            .and_then(|s| eliminate(s, ncols))
            .map(|p| {
                p.into_iter()
                    .map(|r| r.into_iter().map(|(c, v)| (c, v.to_big())).collect())
                    .collect()
            })
            .unwrap_or_else(|| eliminate(big, ncols).expect("big integers do not overflow"));
        Echelon { ncols, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// Kernel basis with an identity block on the free columns: the vector
    /// for free column `f` has a 1 at `f` and 0 at every other free column.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut is_pivot = vec![false; self.ncols];
        for r in &self.rows {
            is_pivot[r[0].0] = true;
        }
        let free: Vec<usize> = (0..self.ncols).filter(|&c| !is_pivot[c]).collect();
        let rows: Vec<IRow<Q>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| (*c, Q::from_integer(v.clone()))).collect())
            .collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Q::zero(); self.ncols];
                x[f] = Q::one();
                for r in rows.iter().rev() {
                    let s: Q = r[1..]
                        .iter()
                        .filter(|(c, _)| !x[*c].is_zero())
                        .map(|(c, v)| v * &x[*c])
                        .sum();
                    if !s.is_zero() {
                        x[r[0].0] = -s / &r[0].1;
                    }
                }
                x
            })
            .collect()
    }
}

/// Kernel of a matrix, as dense vectors in echelon-normalized form.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Q>> {
    let rows = (0..m.nrows()).map(|i| m.row(i).to_vec()).collect();
    Echelon::new(rows, m.ncols()).kernel()
}

pub fn rank(m: &Matrix) -> usize {
    let rows = (0..m.nrows()).map(|i| m.row(i).to_vec()).collect();
    Echelon::new(rows, m.ncols()).rank()
}

/// Kernel of a graded map.
pub fn kernel(m: &GradedMap) -> Vec<Vec<Q>> {
    nullspace(m.matrix())
}

/// Sorts by column, sums repeated columns and drops zeros.
pub fn sparse_row(mut eq: Vec<(usize, Q)>) -> SparseRow {
    eq.sort_by_key(|e| e.0);
    let mut merged: SparseRow = Vec::with_capacity(eq.len());
    for (x, v) in eq {
        match merged.last_mut() {
            Some(last) if last.0 == x => last.1 += v,
            _ => merged.push((x, v)),
        }
    }
    merged.retain(|e| !e.1.is_zero());
    merged
}

/// Joint kernel of sparse equations over `ncols` unknowns.
pub fn solve_homogeneous(rows: Vec<SparseRow>, ncols: usize) -> Vec<Vec<Q>> {
    Echelon::new(rows, ncols).kernel()
}

/// Incrementally built subspace in reduced row echelon form. Each stored row
/// remembers its expression in terms of the vectors inserted so far, which
/// gives coordinates with respect to the inserted (independent) vectors.
#[derive(Clone, Debug)]
pub struct Span {
    n: usize,
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
    inserted: usize,
}

impl Span {
    pub fn new(n: usize) -> Span {
        Span {
            n,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn from_vectors<'a>(n: usize, vs: impl IntoIterator<Item = &'a Vec<Q>>) -> Span {
        let mut s = Span::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination of stored-row origins that was subtracted.
    fn reduce_tracked(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        let mut r = v.to_vec();
        let mut comb = vec![Q::zero(); self.inserted];
        for (p, row, orig) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let c = r[*p].clone();
            for (k, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    r[k] -= &c * x;
                }
            }
            for (k, x) in orig.iter().enumerate() {
                if !x.is_zero() {
                    comb[k] += &c * x;
                }
            }
        }
        (r, comb)
    }

    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Inserts `v`; returns whether it was independent of the span. Dependent
    /// vectors are not recorded as inserted.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let (mut r, comb) = self.reduce_tracked(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        self.inserted += 1;
        for row in &mut self.rows {
            row.2.push(Q::zero());
        }
        let mut orig: Vec<Q> = comb.into_iter().map(|c| -c).collect();
        orig.push(Q::one());
        let inv = Q::one() / &r[p];
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for x in orig.iter_mut() {
            *x *= &inv;
        }
        for (_, row, o) in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (k, x) in r.iter().enumerate() {
                if !x.is_zero() {
                    row[k] -= &c * x;
                }
            }
            for (k, x) in orig.iter().enumerate() {
                if !x.is_zero() {
                    o[k] -= &c * x;
                }
            }
        }
        let pos = self.rows.partition_point(|row| row.0 < p);
        self.rows.insert(pos, (p, r, orig));
        true
    }

    /// Coordinates of `v` with respect to the independent inserted vectors,
    /// in insertion order; `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vec<Q>> {
        let (r, comb) = self.reduce_tracked(v);
        if r.iter().all(|x| x.is_zero()) {
            Some(comb)
        } else {
            None
        }
    }

    /// Canonical basis: the reduced echelon rows.
    pub fn basis(&self) -> Vec<Vec<Q>> {
        self.rows.iter().map(|r| r.1.clone()).collect()
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.n == other.n && self.basis() == other.basis()
    }
}

/// Canonical reduced echelon basis of the span of `vs`.
pub fn rref_basis(n: usize, vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    Span::from_vectors(n, vs).basis()
}

/// Basis of all maps `T: domain -> codomain` with `T∘D_x = C_x∘T` for every
/// generator `x`. When `parity` is given only homogeneous maps of that parity
/// are sought.
pub fn equivariant_subspace(actions_on_domain: &[GradedMap], actions_on_codomain: &[GradedMap]) -> Result<Vec<Matrix>, ExactError> {
    equivariant_maps(actions_on_domain, actions_on_codomain, None)
}

pub fn equivariant_maps(dom: &[GradedMap], cod: &[GradedMap], parity: Option<Parity>) -> Result<Vec<Matrix>, ExactError> {
    if dom.len() != cod.len() {
        return Err(ExactError::GeneratorCount(dom.len(), cod.len()));
    }
    if dom.is_empty() {
        return Err(ExactError::NoGenerators);
    }
    let dspace = dom[0].domain().clone();
    let cspace = cod[0].domain().clone();
    for m in dom {
        check_endo(m, dspace.len())?;
    }
    for m in cod {
        check_endo(m, cspace.len())?;
    }
    let allowed = |i: usize, j: usize| match parity {
        None => true,
        Some(p) => cspace.parity(i) == dspace.parity(j) + p,
    };
    let dm: Vec<&Matrix> = dom.iter().map(|m| m.matrix()).collect();
    let cm: Vec<&Matrix> = cod.iter().map(|m| m.matrix()).collect();
    Ok(intertwiners(dspace.len(), cspace.len(), &dm, &cm, &allowed))
}

fn check_endo(m: &GradedMap, n: usize) -> Result<(), ExactError> {
    let mm = m.matrix();
    if mm.nrows() != n || mm.ncols() != n {
        return Err(ExactError::DimensionMismatch {
            expected: (n, n),
            found: (mm.nrows(), mm.ncols()),
        });
    }
    Ok(())
}

/// Core intertwiner solve on bare matrices. `allowed(i, j)` masks the
/// unknown entries `T[i][j]`.
pub fn intertwiners(dn: usize, cn: usize, dom: &[&Matrix], cod: &[&Matrix], allowed: &dyn Fn(usize, usize) -> bool) -> Vec<Matrix> {
    let mut var = vec![usize::MAX; cn * dn];
    let mut pos = Vec::new();
    for i in 0..cn {
        for j in 0..dn {
            if allowed(i, j) {
                var[i * dn + j] = pos.len();
                pos.push((i, j));
            }
        }
    }
    let nv = pos.len();
    let mut rows = Vec::new();
    for (d, c) in dom.iter().zip(cod) {
        let dt = d.transpose();
        for i in 0..cn {
            for j in 0..dn {
                // (T D)[i][j] - (C T)[i][j]
                let mut eq: Vec<(usize, Q)> = Vec::new();
                for (k, v) in dt.row(j) {
                    let x = var[i * dn + k];
                    if x != usize::MAX {
                        eq.push((x, v.clone()));
                    }
                }
                for (k, v) in c.row(i) {
                    let x = var[k * dn + j];
                    if x != usize::MAX {
                        eq.push((x, -v.clone()));
                    }
                }
                if eq.is_empty() {
                    continue;
                }
                eq.sort_by_key(|e| e.0);
                let mut merged: Vec<(usize, Q)> = Vec::with_capacity(eq.len());
                for (x, v) in eq {
                    match merged.last_mut() {
                        Some(last) if last.0 == x => last.1 += v,
                        _ => merged.push((x, v)),
                    }
                }
                merged.retain(|e| !e.1.is_zero());
                if !merged.is_empty() {
                    rows.push(merged);
                }
            }
        }
    }
    solve_homogeneous(rows, nv)
        .into_iter()
        .map(|sol| {
            Matrix::from_entries(
                cn,
                dn,
                sol.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (pos[k].0, pos[k].1, v)),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::{q, qi};
    use crate::exactla::space::GradedSpace;

    #[test]
    fn kernel_of_rank_one_map() {
        // [[1,2],[2,4]]: row reduction by hand leaves x + 2y = 0
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let k = nullspace(&m);
        assert_eq!(k, vec![vec![qi(-2), qi(1)]]);
    }

    #[test]
    fn kernel_trivial_cases() {
        assert!(nullspace(&Matrix::identity(2)).is_empty());
        assert_eq!(nullspace(&Matrix::zeros(3, 3)).len(), 3);
    }

    #[test]
    fn big_integer_fallback() {
        let big = 1i64 << 62;
        let m = Matrix::from_dense(vec![
            vec![qi(big), qi(big - 1), qi(3)],
            vec![qi(big - 3), qi(big), qi(5)],
        ]);
        let k = nullspace(&m);
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn span_coordinates() {
        let mut s = Span::new(3);
        assert!(s.insert(&[qi(1), qi(1), qi(0)]));
        assert!(s.insert(&[qi(0), qi(1), qi(1)]));
        assert!(!s.insert(&[qi(1), qi(2), qi(1)]));
        let c = s.coordinates(&[qi(2), q(5, 2), q(1, 2)]).unwrap();
        assert_eq!(c, vec![qi(2), q(1, 2)]);
        assert!(s.coordinates(&[qi(0), qi(0), qi(1)]).is_none());
    }

    #[test]
    fn commutant_of_rotation() {
        // hand solve: [[a,b],[c,d]] commuting with J forces d = a, c = -b
        let v = GradedSpace::even("v", 2);
        let j = GradedMap::endo(&v, Matrix::from_ints(&[&[0, -1], &[1, 0]]), Parity::Even).unwrap();
        let sols = equivariant_subspace(&[j.clone()], &[j]).unwrap();
        assert_eq!(sols.len(), 2);
    }

    #[test]
    fn unconstrained_and_mismatched() {
        let v = GradedSpace::even("v", 2);
        let z = GradedMap::zero(v.clone(), v.clone());
        assert_eq!(equivariant_subspace(&[z.clone()], &[z.clone()]).unwrap().len(), 4);
        assert!(equivariant_subspace(&[z.clone()], &[]).is_err());
    }
}
