use serde::Serialize;

use super::{LieError, LieSuperalgebra};
use crate::exactla::{fmt_q, koszul, qi, GradedMap, GradedSpace, Matrix, Q};
use num_traits::One;

/// One action matrix per basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieSuperalgebra,
    module: GradedSpace,
    maps: Vec<GradedMap>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RepReport {
    pub pass: bool,
    pub failures: usize,
    /// First failing basis pair with the offending matrix entry.
    pub first: Option<(String, String, usize, usize, String)>,
}

impl Representation {
    pub fn new(algebra: LieSuperalgebra, module: GradedSpace, maps: Vec<GradedMap>) -> Result<Self, LieError> {
        if maps.len() != algebra.dim() {
            return Err(LieError::Dimension(algebra.dim(), maps.len()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.domain() != &module || m.codomain() != &module {
                return Err(LieError::Dimension(module.len(), m.domain().len()));
            }
            if m.parity() != algebra.parity(i) && !m.matrix().is_zero() {
                return Err(LieError::ActionParity(algebra.label(i).to_string()));
            }
        }
        Ok(Self::new_unchecked(algebra, module, maps))
    }

    /// Builds from bare matrices, checking block structure.
    pub fn from_matrices(algebra: LieSuperalgebra, module: GradedSpace, mats: Vec<Matrix>) -> Result<Self, LieError> {
        let maps = mats
            .into_iter()
            .enumerate()
            .map(|(i, m)| GradedMap::endo(&module, m, algebra.parity(i)))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(algebra, module, maps)
    }

    pub(crate) fn new_unchecked(algebra: LieSuperalgebra, module: GradedSpace, maps: Vec<GradedMap>) -> Self {
        Representation { algebra, module, maps }
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.algebra
    }

    pub fn module(&self) -> &GradedSpace {
        &self.module
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        self.maps[i].matrix()
    }

    /// Action of a general (dense) algebra element.
    pub fn act_element(&self, x: &[Q]) -> Matrix {
        let n = self.module.len();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if !num_traits::Zero::is_zero(c) {
                m = m.lin_comb(&Q::one(), self.matrix(i), c);
            }
        }
        m
    }

    /// `ρ([x,y]) = ρ(x)ρ(y) - (-1)^{|x||y|}ρ(y)ρ(x)` on all basis pairs.
    pub fn check(&self) -> RepReport {
        let g = &self.algebra;
        let n = g.dim();
        let mut failures = 0;
        let mut first = None;
        for i in 0..n {
            for j in 0..n {
                let s = koszul(g.parity(i), g.parity(j));
                let lhs = self.matrix(i).graded_commutator(self.matrix(j), s);
                let rhs = g
                    .bracket_basis(i, j)
                    .iter()
                    .fold(Matrix::zeros(self.module.len(), self.module.len()), |acc, (k, c)| {
                        acc.lin_comb(&Q::one(), self.matrix(*k), c)
                    });
                let d = lhs.sub(&rhs);
                let hit = d.entries().next().map(|(a, b, v)| (a, b, fmt_q(v)));
                if let Some((a, b, v)) = hit {
                    failures += 1;
                    if first.is_none() {
                        first = Some((g.label(i).to_string(), g.label(j).to_string(), a, b, v));
                    }
                }
            }
        }
        RepReport {
            pass: failures == 0,
            failures,
            first,
        }
    }

    /// Same representation with every matrix scaled; used for negative tests.
    pub fn scaled(&self, c: i64) -> Representation {
        let maps = self
            .maps
            .iter()
            .map(|m| GradedMap::endo(&self.module, m.matrix().scale(&qi(c)), m.parity()).unwrap())
            .collect();
        Representation::new_unchecked(self.algebra.clone(), self.module.clone(), maps)
    }
}
