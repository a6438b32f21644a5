use serde::{Deserialize, Serialize};

use super::LieError;
use crate::exactla::{fmt_q, koszul, qi, GradedMap, GradedSpace, Matrix, Parity, Q};
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Skew,
    None,
}

/// Bilinear map `left ⊗ right -> target`, stored as one coefficient matrix
/// per target basis vector: `B(l_i, r_j) = Σ_k coeffs[k][i][j] t_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperBilinearForm {
    left: GradedSpace,
    right: GradedSpace,
    target: GradedSpace,
    coeffs: Vec<Matrix>,
    symmetry: Symmetry,
    parity: Parity,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EquivarianceReport {
    pub pass: bool,
    pub failures: usize,
    /// `(generator, left basis, right basis, target basis, residual)`.
    pub first: Option<(usize, usize, usize, usize, String)>,
}

/// The one-dimensional even target of scalar forms.
pub fn scalar_target() -> GradedSpace {
    GradedSpace::even("1", 1)
}

impl SuperBilinearForm {
    pub fn new(left: GradedSpace, right: GradedSpace, target: GradedSpace, coeffs: Vec<Matrix>, symmetry: Symmetry) -> Result<Self, LieError> {
        if coeffs.len() != target.len() {
            return Err(LieError::Dimension(target.len(), coeffs.len()));
        }
        for c in &coeffs {
            if c.nrows() != left.len() || c.ncols() != right.len() {
                return Err(LieError::Dimension(left.len() * right.len(), c.nrows() * c.ncols()));
            }
        }
        let mut parity = None;
        for (k, c) in coeffs.iter().enumerate() {
            for (i, j, _) in c.entries() {
                let p = target.parity(k) + left.parity(i) + right.parity(j);
                match parity {
                    None => parity = Some(p),
                    Some(q) if q != p => return Err(LieError::InhomogeneousForm),
                    _ => {}
                }
            }
        }
        let f = SuperBilinearForm {
            left,
            right,
            target,
            coeffs,
            symmetry,
            parity: parity.unwrap_or(Parity::Even),
        };
        if symmetry != Symmetry::None && !f.has_symmetry(symmetry) {
            return Err(LieError::SymmetryViolation);
        }
        Ok(f)
    }

    pub fn scalar(space: GradedSpace, m: Matrix, symmetry: Symmetry) -> Result<Self, LieError> {
        Self::new(space.clone(), space, scalar_target(), vec![m], symmetry)
    }

    pub fn zero(left: GradedSpace, right: GradedSpace, target: GradedSpace) -> Self {
        let coeffs = vec![Matrix::zeros(left.len(), right.len()); target.len()];
        SuperBilinearForm {
            left,
            right,
            target,
            coeffs,
            symmetry: Symmetry::None,
            parity: Parity::Even,
        }
    }

    pub fn left(&self) -> &GradedSpace {
        &self.left
    }

    pub fn right(&self) -> &GradedSpace {
        &self.right
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn coeffs(&self) -> &[Matrix] {
        &self.coeffs
    }

    pub fn component(&self, k: usize) -> &Matrix {
        &self.coeffs[k]
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Super-symmetry test: `B(x,y) = ±(-1)^{|x||y|} B(y,x)`.
    pub fn has_symmetry(&self, s: Symmetry) -> bool {
        if self.left != self.right {
            return false;
        }
        let sgn = match s {
            Symmetry::Symmetric => 1,
            Symmetry::Skew => -1,
            Symmetry::None => return true,
        };
        self.coeffs.iter().all(|c| {
            c.entries().all(|(i, j, v)| {
                c.get(j, i) * qi(sgn * koszul(self.left.parity(i), self.left.parity(j))) == *v
            }) && c.transpose().entries().all(|(i, j, v)| {
                c.get(i, j) * qi(sgn * koszul(self.left.parity(i), self.left.parity(j))) == *v
            })
        })
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> Vec<Q> {
        self.coeffs.iter().map(|c| c.get(i, j)).collect()
    }

    pub fn eval(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.coeffs
            .iter()
            .map(|c| {
                let cy = c.apply(y);
                x.iter().zip(&cy).map(|(a, b)| a * b).sum()
            })
            .collect()
    }

    pub fn scale(&self, a: &Q) -> Self {
        let mut f = self.clone();
        f.coeffs = f.coeffs.iter().map(|c| c.scale(a)).collect();
        f
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut f = self.clone();
        f.coeffs = f.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        if other.symmetry != self.symmetry {
            f.symmetry = Symmetry::None;
        }
        f
    }

    /// Copy with one coefficient shifted; symmetry is dropped.
    pub fn perturbed(&self, k: usize, i: usize, j: usize, delta: Q) -> Self {
        let mut f = self.clone();
        let v = f.coeffs[k].get(i, j) + delta;
        f.coeffs[k].set(i, j, v);
        f.symmetry = Symmetry::None;
        f
    }

    /// Composition with a linear map on the target.
    pub fn map_target(&self, t: &Matrix, target: GradedSpace) -> Result<Self, LieError> {
        let mut coeffs = Vec::with_capacity(target.len());
        for k in 0..target.len() {
            let mut m = Matrix::zeros(self.left.len(), self.right.len());
            for (l, c) in t.row(k) {
                m = m.lin_comb(&Q::one(), &self.coeffs[*l], c);
            }
            coeffs.push(m);
        }
        Self::new(self.left.clone(), self.right.clone(), target, coeffs, self.symmetry)
    }

    /// `x·B(s,t) = (-1)^{|x||B|}B(x·s,t) + (-1)^{|x|(|B|+|s|)}B(s,x·t)` for every
    /// generator and basis pair.
    pub fn check_equivariance(&self, on_left: &[GradedMap], on_right: &[GradedMap], on_target: &[GradedMap]) -> Result<EquivarianceReport, LieError> {
        if on_left.len() != on_right.len() || on_left.len() != on_target.len() {
            return Err(LieError::Dimension(on_left.len(), on_right.len().max(on_target.len())));
        }
        let mut failures = 0;
        let mut first = None;
        for (g, ((l, r), t)) in on_left.iter().zip(on_right).zip(on_target).enumerate() {
            let px = l.parity();
            let sb = qi(koszul(px, self.parity));
            let lt = l.matrix().transpose();
            for k in 0..self.target.len() {
                let mut res = Matrix::zeros(self.left.len(), self.right.len());
                for (kk, c) in t.matrix().row(k) {
                    res = res.lin_comb(&Q::one(), &self.coeffs[*kk], c);
                }
                let a = lt.mul(&self.coeffs[k]).scale(&sb);
                let b = self.coeffs[k].mul(r.matrix());
                let b = Matrix::from_entries(
                    b.nrows(),
                    b.ncols(),
                    b.entries().map(|(i, j, v)| {
                        let s = koszul(px, self.parity + self.left.parity(i));
                        (i, j, v * qi(s))
                    }),
                );
                let d = res.sub(&a).sub(&b);
                let hit = d.entries().next().map(|(i, j, v)| (i, j, fmt_q(v)));
                if let Some((i, j, v)) = hit {
                    failures += d.nnz();
                    if first.is_none() {
                        first = Some((g, i, j, k, v));
                    }
                }
            }
        }
        Ok(EquivarianceReport {
            pass: failures == 0,
            failures,
            first,
        })
    }

    pub fn is_zero_coeff(&self, k: usize, i: usize, j: usize) -> bool {
        self.coeffs[k].get(i, j).is_zero()
    }
}

/// Symmetric or skew part of a square coefficient matrix under the sign rule.
pub fn symmetrize(space: &GradedSpace, m: &Matrix, s: Symmetry) -> Matrix {
    let sgn = match s {
        Symmetry::Symmetric => 1,
        Symmetry::Skew => -1,
        Symmetry::None => return m.clone(),
    };
    let t = Matrix::from_entries(
        m.nrows(),
        m.ncols(),
        m.entries()
            .map(|(i, j, v)| (j, i, v * qi(sgn * koszul(space.parity(i), space.parity(j))))),
    );
    m.add(&t).scale(&crate::exactla::q(1, 2))
}
