//! Sparse row-major rational matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{fmt_q, qi, Q};

/// Row-major sparse matrix. Each row holds `(column, value)` pairs sorted by
/// column with no stored zeros, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Q)>>,
}

fn merge(a: &[(usize, Q)], ca: &Q, b: &[(usize, Q)], cb: &Q) -> Vec<(usize, Q)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let v = if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            i += 1;
            (a[i - 1].0, ca * &a[i - 1].1)
        } else if i == a.len() || b[j].0 < a[i].0 {
            j += 1;
            (b[j - 1].0, cb * &b[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, ca * &a[i - 1].1 + cb * &b[j - 1].1)
        };
        if !v.1.is_zero() {
            out.push(v);
        }
    }
    out
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Q::one())
    }

    pub fn scalar(n: usize, c: Q) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.data[i].push((i, c.clone()));
            }
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            m.data[i] = row
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_dense(
            rows.iter()
                .map(|r| r.iter().map(|&x| qi(x)).collect())
                .collect(),
        )
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Q)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry out of range");
            *acc[i].entry(j).or_insert_with(Q::zero) += v;
        }
        Matrix {
            rows,
            cols,
            data: acc
                .into_iter()
                .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    /// Row-major flat vector to matrix.
    pub fn from_flat(rows: usize, cols: usize, flat: &[Q]) -> Self {
        assert_eq!(flat.len(), rows * cols);
        Self::from_entries(
            rows,
            cols,
            flat.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k / cols, k % cols, v.clone())),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Q)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    row.remove(k);
                } else {
                    row[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    row.insert(k, (j, v));
                }
            }
        }
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.rows * self.cols];
        for (i, j, v) in self.entries() {
            out[i * self.cols + j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, v) in self.entries() {
            data[j].push((i, v.clone()));
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
                .collect(),
        }
    }

    /// `a*self + b*other`.
    pub fn lin_comb(&self, a: &Q, other: &Matrix, b: &Q) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| merge(x, a, y, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.lin_comb(&Q::one(), other, &Q::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.lin_comb(&Q::one(), other, &-Q::one())
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Q::one())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut data = Vec::with_capacity(self.rows);
        for r in &self.data {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, a) in r {
                for (j, b) in &other.data[*k] {
                    *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols, "shape mismatch in apply");
        self.data
            .iter()
            .map(|r| r.iter().fold(Q::zero(), |s, (j, a)| s + a * &v[*j]))
            .collect()
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// `AB - sign*BA`, the graded commutator for the given sign.
    pub fn graded_commutator(&self, other: &Matrix, sign: i64) -> Matrix {
        self.mul(other)
            .lin_comb(&Q::one(), &other.mul(self), &-qi(sign))
    }

    /// Kronecker product, `self` indexing the slow factor.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_entries(
            self.rows * r2,
            self.cols * c2,
            self.entries().flat_map(|(i, j, a)| {
                other
                    .entries()
                    .map(move |(k, l, b)| (i * r2 + k, j * c2 + l, a * b))
            }),
        )
    }

    /// Rows and columns selected by index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        Matrix::from_entries(
            rows.len(),
            cols.len(),
            rows.iter().enumerate().flat_map(|(ri, &r)| {
                let pos = &pos;
                self.data[r]
                    .iter()
                    .filter(move |(j, _)| pos[*j] != usize::MAX)
                    .map(move |(j, v)| (ri, pos[*j], v.clone()))
            }),
        )
    }

    /// Dense Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv = Matrix::identity(n).to_dense();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            inv.swap(c, p);
            let piv = a[c][c].clone();
            for j in 0..n {
                a[c][j] = &a[c][j] / &piv;
                inv[c][j] = &inv[c][j] / &piv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for j in 0..n {
                        let (x, y) = (&a[c][j] * &f, &inv[c][j] * &f);
                        a[r][j] -= x;
                        inv[r][j] -= y;
                    }
                }
            }
        }
        Some(Matrix::from_dense(inv))
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(fmt_q).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rational::q;

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_ints(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let b = a.inverse().unwrap();
        assert_eq!(a.mul(&b), Matrix::identity(3));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn products_and_sums() {
        let a = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_ints(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.sub(&a), Matrix::zeros(2, 2));
        assert_eq!(a.commutator(&b), Matrix::from_ints(&[&[2, 0], &[0, -2]]));
        assert_eq!(a.transpose().get(1, 0), qi(2));
        assert_eq!(a.apply(&[qi(1), q(1, 2)]), vec![qi(2), q(1, 2)]);
    }

    #[test]
    fn kron_and_set() {
        let s = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let k = s.kron(&Matrix::identity(2));
        assert_eq!(k.get(0, 2), qi(1));
        assert_eq!(k.nnz(), 4);
        let mut m = Matrix::zeros(2, 2);
        m.set(1, 1, q(1, 3));
        m.set(1, 1, qi(0));
        assert!(m.is_zero());
    }
}
