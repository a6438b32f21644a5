//! Invariant connections on reductive homogeneous superspaces, described by
//! their Nomizu maps `L: m -> gl(m)`.

mod holonomy;
mod table;

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactla::{fmt_q, koszul, q, qi, solve_homogeneous, sparse_row, GradedMap, Matrix, Parity, SparseRow, Q};
use crate::liesuper::{LieError, ReductiveDecomposition, SuperBilinearForm};

pub use holonomy::{infinitesimal_holonomy, parallel_tensor_space, HolonomyElement, HolonomyReport};
pub use table::{default_signatures, poincare_connection_table, table_row, table_tsv, TableRow, REFERENCE_D, TABLE_REPRESENTATIVES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectionError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("Nomizu data has the wrong shape: {0}")]
    Shape(String),
    #[error("map is not equivariant under the isotropy algebra")]
    NotEquivariant,
    #[error("metric is degenerate")]
    DegenerateMetric,
    #[error("metric is not invariant, even and super-symmetric")]
    BadMetric,
    #[error("the supersymmetry connection needs an even isotropy algebra and m = m0 + g1")]
    SupersymmetryShape,
}

/// `L(A)` for each basis vector `A` of `m`, as `|m| x |m|` matrices in the
/// local basis of `m`. The parity of `L(A)` as an operator is that of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NomizuMap {
    decomposition: ReductiveDecomposition,
    maps: Vec<Matrix>,
}

fn m_parity(d: &ReductiveDecomposition, a: usize) -> Parity {
    d.algebra().parity(d.m()[a])
}

impl NomizuMap {
    pub fn new(decomposition: ReductiveDecomposition, maps: Vec<Matrix>) -> Result<Self, ConnectionError> {
        let k = decomposition.m().len();
        if maps.len() != k {
            return Err(ConnectionError::Shape(format!("{} maps for dim m = {k}", maps.len())));
        }
        let ms = decomposition.m_space();
        for (a, l) in maps.iter().enumerate() {
            if l.nrows() != k || l.ncols() != k {
                return Err(ConnectionError::Shape(format!("L({}) is {}x{}", ms.label(a), l.nrows(), l.ncols())));
            }
            GradedMap::endo(&ms, l.clone(), ms.parity(a))
                .map_err(|_| ConnectionError::Shape(format!("L({}) has the wrong parity", ms.label(a))))?;
        }
        Ok(NomizuMap { decomposition, maps })
    }

    pub fn zero(decomposition: ReductiveDecomposition) -> Self {
        let k = decomposition.m().len();
        NomizuMap {
            maps: vec![Matrix::zeros(k, k); k],
            decomposition,
        }
    }

    pub fn decomposition(&self) -> &ReductiveDecomposition {
        &self.decomposition
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    /// Coordinates `L(A_a)[b][c]` flattened with `a` slowest.
    pub fn flatten(&self) -> Vec<Q> {
        self.maps.iter().flat_map(|m| m.flatten()).collect()
    }

    pub fn lin_comb(&self, a: &Q, other: &NomizuMap, b: &Q) -> NomizuMap {
        NomizuMap {
            decomposition: self.decomposition.clone(),
            maps: self.maps.iter().zip(&other.maps).map(|(x, y)| x.lin_comb(a, y, b)).collect(),
        }
    }

    /// Same data on another decomposition of the same shape.
    pub fn with_maps(&self, maps: Vec<Matrix>) -> Result<NomizuMap, ConnectionError> {
        NomizuMap::new(self.decomposition.clone(), maps)
    }

    /// `L(v)` for a general element `v` of `m` (local coordinates).
    pub fn apply(&self, v: &[Q]) -> Matrix {
        let k = self.maps.len();
        v.iter()
            .zip(&self.maps)
            .filter(|(c, _)| !c.is_zero())
            .fold(Matrix::zeros(k, k), |acc, (c, m)| acc.lin_comb(&Q::one(), m, c))
    }

    /// `L([B,A]) = [ad_B|m, L(A)]` (super commutator) for every `B` in `h`.
    pub fn is_equivariant(&self) -> bool {
        let d = &self.decomposition;
        let k = self.maps.len();
        d.h().iter().enumerate().all(|(hb, &gb)| {
            let pb = d.algebra().parity(gb);
            let ad = d.h_action_matrix(hb);
            (0..k).all(|a| {
                let col: Vec<Q> = (0..k).map(|r| ad.get(r, a)).collect();
                let lhs = self.apply(&col);
                let rhs = ad.graded_commutator(&self.maps[a], koszul(pb, m_parity(d, a)));
                lhs == rhs
            })
        })
    }
}

/// Basis of the Nomizu maps together with the dimension of each block
/// `V->V⊗V*`, `V->S⊗S*`, `S->V*⊗S`, `S->S*⊗V`, where `V` and `S` are the even
/// and odd parts of `m`. Blocks are reported when `h` is purely even, since
/// then the equivariance system splits along them.
#[derive(Clone, Debug)]
pub struct NomizuSpace {
    pub basis: Vec<NomizuMap>,
    pub blocks: Option<[usize; 4]>,
}

impl NomizuSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Exact membership of a Nomizu map in the span of the basis.
    pub fn contains(&self, n: &NomizuMap) -> bool {
        let len = n.flatten().len();
        let mut span = crate::exactla::Span::new(len);
        for b in &self.basis {
            span.insert(&b.flatten());
        }
        span.contains(&n.flatten())
    }
}

// block of the unknown L(A_a)[b][c]: parities (a, b, c)
fn block_of(pa: Parity, pc: Parity) -> usize {
    match (pa, pc) {
        (Parity::Even, Parity::Even) => 0,
        (Parity::Even, Parity::Odd) => 1,
        (Parity::Odd, Parity::Even) => 2,
        (Parity::Odd, Parity::Odd) => 3,
    }
}

pub fn nomizu_space(d: &ReductiveDecomposition) -> Result<NomizuSpace, ConnectionError> {
    nomizu_space_with(d, &[])
}

/// Nomizu maps that are also equivariant under extra even automorphisms `g`
/// of `m` (for disconnected isotropy groups): `L(gA) = g L(A) g⁻¹`.
pub fn nomizu_space_with(d: &ReductiveDecomposition, extra: &[Matrix]) -> Result<NomizuSpace, ConnectionError> {
    d.require_reductive()?;
    let k = d.m().len();
    let par: Vec<Parity> = (0..k).map(|a| m_parity(d, a)).collect();
    // unknowns: (a, b, c) with |b| = |a| + |c|
    let mut var = HashMap::new();
    let mut vars = Vec::new();
    for a in 0..k {
        for c in 0..k {
            for b in 0..k {
                if par[b] == par[a] + par[c] {
                    var.insert((a, b, c), vars.len());
                    vars.push((a, b, c));
                }
            }
        }
    }
    let mut rows: Vec<SparseRow> = Vec::new();
    let h_even = d.h().iter().all(|&i| d.algebra().parity(i) == Parity::Even);
    for (hb, &gb) in d.h().iter().enumerate() {
        let pb = d.algebra().parity(gb);
        let ad = d.h_action_matrix(hb);
        let adt = ad.transpose();
        for a in 0..k {
            let sign = qi(koszul(pb, par[a]));
            for b in 0..k {
                for c in 0..k {
                    if par[b] != par[a] + par[c] + pb {
                        continue;
                    }
                    let mut eq = Vec::new();
                    // L(ad_B A_a)[b][c]
                    for (a2, v) in adt.row(a) {
                        if let Some(&x) = var.get(&(*a2, b, c)) {
                            eq.push((x, v.clone()));
                        }
                    }
                    // - ad_B[b][e] L(A_a)[e][c]
                    for (e, v) in ad.row(b) {
                        if let Some(&x) = var.get(&(a, *e, c)) {
                            eq.push((x, -v.clone()));
                        }
                    }
                    // + sign L(A_a)[b][e] ad_B[e][c]
                    for (e, v) in adt.row(c) {
                        if let Some(&x) = var.get(&(a, b, *e)) {
                            eq.push((x, &sign * v));
                        }
                    }
                    let r = sparse_row(eq);
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
        }
    }
    for g in extra {
        if g.nrows() != k || g.ncols() != k {
            return Err(ConnectionError::Shape("extra group element has the wrong size".into()));
        }
        let gt = g.transpose();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    // (Σ_a' g[a'][a] L(A_a'))·g - g·L(A_a), entry (b,c)
                    let mut eq = Vec::new();
                    for (a2, ga) in gt.row(a) {
                        for (e, gec) in gt.row(c) {
                            if let Some(&x) = var.get(&(*a2, b, *e)) {
                                eq.push((x, ga * gec));
                            }
                        }
                    }
                    for (e, v) in g.row(b) {
                        if let Some(&x) = var.get(&(a, *e, c)) {
                            eq.push((x, -v.clone()));
                        }
                    }
                    let r = sparse_row(eq);
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
        }
    }
    let to_map = |sol: &[Q]| -> NomizuMap {
        let mut ents: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); k];
        for (x, c) in sol.iter().enumerate() {
            if !c.is_zero() {
                let (a, b, cc) = vars[x];
                ents[a].push((b, cc, c.clone()));
            }
        }
        NomizuMap {
            decomposition: d.clone(),
            maps: ents.into_iter().map(|e| Matrix::from_entries(k, k, e)).collect(),
        }
    };
    if h_even && extra.is_empty() {
        // solve each block separately
        let blk: Vec<usize> = vars.iter().map(|&(a, _, c)| block_of(par[a], par[c])).collect();
        let mut blocks = [0usize; 4];
        let mut basis = Vec::new();
        for bk in 0..4 {
            let local: Vec<usize> = (0..vars.len()).filter(|&x| blk[x] == bk).collect();
            let mut pos = vec![usize::MAX; vars.len()];
            for (i, &x) in local.iter().enumerate() {
                pos[x] = i;
            }
            let sub: Vec<SparseRow> = rows
                .iter()
                .filter(|r| blk[r[0].0] == bk)
                .map(|r| r.iter().map(|(x, v)| (pos[*x], v.clone())).collect())
                .collect();
            let sols = solve_homogeneous(sub, local.len());
            blocks[bk] = sols.len();
            for s in sols {
                let mut full = vec![Q::zero(); vars.len()];
                for (i, v) in s.into_iter().enumerate() {
                    full[local[i]] = v;
                }
                basis.push(to_map(&full));
            }
        }
        Ok(NomizuSpace {
            basis,
            blocks: Some(blocks),
        })
    } else {
        let basis = solve_homogeneous(rows, vars.len()).iter().map(|s| to_map(s)).collect();
        Ok(NomizuSpace { basis, blocks: None })
    }
}

/// `L = 0`.
pub fn canonical_nomizu(d: &ReductiveDecomposition) -> Result<NomizuMap, ConnectionError> {
    d.require_reductive()?;
    Ok(NomizuMap::zero(d.clone()))
}

/// Matrix of `[A_a, ·]_m` on `m`.
fn ad_m(d: &ReductiveDecomposition, a: usize) -> Matrix {
    let k = d.m().len();
    Matrix::from_entries(k, k, (0..k).flat_map(|b| d.bracket_mm(a, b).1.into_iter().map(move |(r, c)| (r, b, c))))
}

/// `L(A) = ½[A,·]_m`.
pub fn natural_torsion_free(d: &ReductiveDecomposition) -> Result<NomizuMap, ConnectionError> {
    d.require_reductive()?;
    let maps = (0..d.m().len()).map(|a| ad_m(d, a).scale(&q(1, 2))).collect();
    NomizuMap::new(d.clone(), maps)
}

/// For `g = (h + m0) + g1` with `h` even: `L(m0)` acts on `g1` by `ad`, and
/// is zero on `m0`; `L(g1) = 0`.
pub fn supersymmetry_nomizu(d: &ReductiveDecomposition) -> Result<NomizuMap, ConnectionError> {
    d.require_reductive()?;
    let g = d.algebra();
    if d.h().iter().any(|&i| g.parity(i) == Parity::Odd) || g.odd_indices().iter().any(|&i| d.locate(i).0) {
        return Err(ConnectionError::SupersymmetryShape);
    }
    let k = d.m().len();
    let par: Vec<Parity> = (0..k).map(|a| m_parity(d, a)).collect();
    let maps = (0..k)
        .map(|a| {
            if par[a] == Parity::Odd {
                return Matrix::zeros(k, k);
            }
            let full = ad_m(d, a);
            Matrix::from_entries(k, k, full.entries().filter(|(_, c, _)| par[*c] == Parity::Odd).map(|(r, c, v)| (r, c, v.clone())))
        })
        .collect();
    NomizuMap::new(d.clone(), maps)
}

/// Gram matrix of a scalar form restricted to `m`, checked to be even,
/// super-symmetric and `h`-invariant.
fn metric_gram(d: &ReductiveDecomposition, g: &SuperBilinearForm) -> Result<Matrix, ConnectionError> {
    let k = d.m().len();
    if g.target().len() != 1 || g.left().len() != k || g.right().len() != k {
        return Err(ConnectionError::BadMetric);
    }
    if g.parity() != Parity::Even || !g.has_symmetry(crate::liesuper::Symmetry::Symmetric) {
        return Err(ConnectionError::BadMetric);
    }
    let acts = d.isotropy_action();
    if !g.check_equivariance(&acts, &acts, &vec![GradedMap::zero(crate::liesuper::scalar_target(), crate::liesuper::scalar_target()); acts.len()])?.pass {
        return Err(ConnectionError::BadMetric);
    }
    Ok(g.component(0).clone())
}

/// `L(A)B = ½[A,B]_m + U(A,B)` with
/// `2g(U(A,B),C) = (-1)^{|B||C|} g(A,[C,B]_m) + (-1)^{|C|(|A|+|B|)} g([C,A]_m,B)`.
pub fn levi_civita_nomizu(d: &ReductiveDecomposition, g: &SuperBilinearForm) -> Result<NomizuMap, ConnectionError> {
    d.require_reductive()?;
    let gram = metric_gram(d, g)?;
    let ginv_t = gram.transpose().inverse().ok_or(ConnectionError::DegenerateMetric)?;
    let k = d.m().len();
    let par: Vec<Parity> = (0..k).map(|a| m_parity(d, a)).collect();
    let br: Vec<Vec<Vec<Q>>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| crate::liesuper::algebra::dense(&d.bracket_mm(a, b).1, k))
                .collect()
        })
        .collect();
    let gv = |x: &[Q], y: &[Q]| -> Q {
        let gy = gram.apply(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    };
    let unit = |i: usize| -> Vec<Q> {
        let mut v = vec![Q::zero(); k];
        v[i] = Q::one();
        v
    };
    let mut maps = Vec::with_capacity(k);
    for a in 0..k {
        let mut ents = Vec::new();
        for b in 0..k {
            let w: Vec<Q> = (0..k)
                .map(|c| {
                    let t1 = gv(&unit(a), &br[c][b]) * qi(koszul(par[b], par[c]));
                    let t2 = gv(&br[c][a], &unit(b)) * qi(koszul(par[c], par[a] + par[b]));
                    (t1 + t2) * q(1, 2)
                })
                .collect();
            let u = ginv_t.apply(&w);
            for r in 0..k {
                let v = &br[a][b][r] * q(1, 2) + &u[r];
                if !v.is_zero() {
                    ents.push((r, b, v));
                }
            }
        }
        maps.push(Matrix::from_entries(k, k, ents));
    }
    NomizuMap::new(d.clone(), maps)
}

/// A nondegenerate `h`-invariant even super-symmetric form on `m`, if the
/// invariant forms contain one. Tries a fixed sequence of integer
/// combinations of a basis.
pub fn invariant_metric(d: &ReductiveDecomposition) -> Result<Option<SuperBilinearForm>, ConnectionError> {
    let k = d.m().len();
    let par: Vec<Parity> = (0..k).map(|a| m_parity(d, a)).collect();
    let mut span = crate::exactla::Span::new(k * k);
    let mut basis: Vec<Matrix> = Vec::new();
    for t in d.invariants_in_tensor(0, 2)? {
        let mut m = Matrix::zeros(k, k);
        for (idx, c) in t.terms() {
            if par[idx[0]] != par[idx[1]] {
                continue;
            }
            let sign = qi(koszul(par[idx[0]], par[idx[1]]));
            m.set(idx[0], idx[1], m.get(idx[0], idx[1]) + c * q(1, 2));
            m.set(idx[1], idx[0], m.get(idx[1], idx[0]) + c * q(1, 2) * sign);
        }
        if !m.is_zero() && span.insert(&m.flatten()) {
            basis.push(m);
        }
    }
    if basis.is_empty() {
        return Ok(None);
    }
    for t in 1..=6u32 {
        let mut m = Matrix::zeros(k, k);
        for (j, b) in basis.iter().enumerate() {
            m = m.lin_comb(&Q::one(), b, &qi((j as i64 + 1).pow(t)));
        }
        if m.inverse().is_some() {
            return Ok(Some(SuperBilinearForm::scalar(d.m_space(), m, crate::liesuper::Symmetry::Symmetric)?));
        }
    }
    Ok(None)
}

/// Whether every `L(A)` is super-skew for `g`:
/// `g(L(A)X, Y) + (-1)^{|A||X|} g(X, L(A)Y) = 0`.
pub fn preserves_metric(n: &NomizuMap, g: &SuperBilinearForm) -> bool {
    let d = n.decomposition();
    let gram = g.component(0);
    let k = d.m().len();
    (0..k).all(|a| {
        let l = n.map(a);
        let pa = m_parity(d, a);
        // (L^T G)[x][y] + sign(x) (G L)[x][y]
        let lt_g = l.transpose().mul(gram);
        let g_l = gram.mul(l);
        (0..k).all(|x| {
            let s = qi(koszul(pa, m_parity(d, x)));
            (0..k).all(|y| (lt_g.get(x, y) + &s * g_l.get(x, y)).is_zero())
        })
    })
}

/// `R_o(A,B) = [L(A),L(B)] - L([A,B]_m) - ad([A,B]_h)|m`, indexed `[a][b]`.
pub fn curvature_at_o(n: &NomizuMap) -> Vec<Vec<Matrix>> {
    let d = n.decomposition();
    let k = d.m().len();
    let had: Vec<Matrix> = (0..d.h().len()).map(|i| d.h_action_matrix(i)).collect();
    (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    let (hp, mp) = d.bracket_mm(a, b);
                    let s = koszul(m_parity(d, a), m_parity(d, b));
                    let mut r = n.map(a).graded_commutator(n.map(b), s);
                    r = r.sub(&n.apply(&crate::liesuper::algebra::dense(&mp, k)));
                    for (i, c) in &hp {
                        r = r.lin_comb(&Q::one(), &had[*i], &-c.clone());
                    }
                    r
                })
                .collect()
        })
        .collect()
}

/// `T_o(A,B) = L(A)B - (-1)^{|A||B|} L(B)A - [A,B]_m`, indexed `[a][b]`.
pub fn torsion_at_o(n: &NomizuMap) -> Vec<Vec<Vec<Q>>> {
    let d = n.decomposition();
    let k = d.m().len();
    (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    let s = qi(koszul(m_parity(d, a), m_parity(d, b)));
                    let mp = crate::liesuper::algebra::dense(&d.bracket_mm(a, b).1, k);
                    (0..k).map(|r| n.map(a).get(r, b) - &s * n.map(b).get(r, a) - &mp[r]).collect()
                })
                .collect()
        })
        .collect()
}

pub fn is_torsion_free(n: &NomizuMap) -> bool {
    torsion_at_o(n).iter().flatten().flatten().all(|v| v.is_zero())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FlatReport {
    pub flat: bool,
    pub curvature_zero: bool,
    pub morphism: bool,
    pub agree: bool,
    /// First pair with nonzero curvature.
    pub witness: Option<(String, String)>,
    /// First pair where the extended map fails to be a morphism.
    pub morphism_witness: Option<(String, String)>,
}

/// Flatness by two independent criteria: vanishing curvature, and the
/// extension `Λ|h = ad|m`, `Λ|m = L` being a Lie superalgebra morphism
/// `g -> gl(m)`.
pub fn is_flat(n: &NomizuMap) -> FlatReport {
    let d = n.decomposition();
    let g = d.algebra();
    let ms = d.m_space();
    let curv = curvature_at_o(n);
    let k = d.m().len();
    let mut witness = None;
    'outer: for a in 0..k {
        for b in 0..k {
            if !curv[a][b].is_zero() {
                witness = Some((ms.label(a).to_string(), ms.label(b).to_string()));
                break 'outer;
            }
        }
    }
    // extended map on all of g
    let lam: Vec<Matrix> = (0..g.dim())
        .map(|i| match d.locate(i) {
            (true, l) => d.h_action_matrix(l),
            (false, l) => n.map(l).clone(),
        })
        .collect();
    let mut morphism_witness = None;
    'm: for i in 0..g.dim() {
        for j in 0..g.dim() {
            let lhs = lam[i].graded_commutator(&lam[j], koszul(g.parity(i), g.parity(j)));
            let rhs = g
                .bracket_basis(i, j)
                .iter()
                .fold(Matrix::zeros(k, k), |acc, (l, c)| acc.lin_comb(&Q::one(), &lam[*l], c));
            if lhs != rhs {
                morphism_witness = Some((g.label(i).to_string(), g.label(j).to_string()));
                break 'm;
            }
        }
    }
    let curvature_zero = witness.is_none();
    let morphism = morphism_witness.is_none();
    FlatReport {
        flat: curvature_zero,
        curvature_zero,
        morphism,
        agree: curvature_zero == morphism,
        witness,
        morphism_witness,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectionReport {
    pub schema: u32,
    /// `R_o(A,B)` for nonzero pairs: `(A, B, [(row, col, value)])`.
    pub curvature: Vec<(String, String, Vec<(String, String, String)>)>,
    /// `T_o(A,B)` for nonzero pairs.
    pub torsion: Vec<(String, String, Vec<(String, String)>)>,
    pub flat: FlatReport,
    pub holonomy: HolonomyReport,
}

pub fn connection_report(n: &NomizuMap) -> ConnectionReport {
    let d = n.decomposition();
    let ms = d.m_space();
    let k = d.m().len();
    let curv = curvature_at_o(n);
    let tors = torsion_at_o(n);
    let mut curvature = Vec::new();
    let mut torsion = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if !curv[a][b].is_zero() {
                curvature.push((
                    ms.label(a).to_string(),
                    ms.label(b).to_string(),
                    curv[a][b].entries().map(|(r, c, v)| (ms.label(r).to_string(), ms.label(c).to_string(), fmt_q(v))).collect(),
                ));
            }
            let t: Vec<(String, String)> = tors[a][b]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(r, v)| (ms.label(r).to_string(), fmt_q(v)))
                .collect();
            if !t.is_empty() {
                torsion.push((ms.label(a).to_string(), ms.label(b).to_string(), t));
            }
        }
    }
    ConnectionReport {
        schema: 1,
        curvature,
        torsion,
        flat: is_flat(n),
        holonomy: infinitesimal_holonomy(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::examples::{abelian, so3};
    use crate::liesuper::Symmetry;

    fn sphere() -> ReductiveDecomposition {
        ReductiveDecomposition::from_labels(so3(), &["L2"], &["L0", "L1"]).unwrap()
    }

    fn round(d: &ReductiveDecomposition) -> SuperBilinearForm {
        SuperBilinearForm::scalar(d.m_space(), Matrix::identity(2), Symmetry::Symmetric).unwrap()
    }

    #[test]
    fn sphere_nomizu_dimension() {
        // m ⊗ m* ⊗ m* has only odd so(2)-weights
        assert_eq!(nomizu_space(&sphere()).unwrap().dim(), 0);
    }

    #[test]
    fn trivial_isotropy_gives_full_even_space() {
        let g = abelian(2, 1);
        let d = ReductiveDecomposition::new(g, vec![], vec![0, 1, 2]).unwrap();
        // even blocks: 2*(4+1) + 1*(2*2) = 14
        assert_eq!(nomizu_space(&d).unwrap().dim(), 14);
    }

    #[test]
    fn sphere_levi_civita() {
        let d = sphere();
        let g = round(&d);
        let lc = levi_civita_nomizu(&d, &g).unwrap();
        assert!(lc.is_zero());
        assert!(is_torsion_free(&lc));
        assert!(preserves_metric(&lc, &g));
        let f = is_flat(&lc);
        assert!(!f.flat && f.agree);
        let hol = infinitesimal_holonomy(&lc);
        assert_eq!(hol.elements.len(), 1);
        let par = parallel_tensor_space(&lc, 0, 2);
        assert!(par.iter().any(|t| t.get(&[0, 0]) == t.get(&[1, 1]) && !t.get(&[0, 0]).is_zero()));
    }

    #[test]
    fn canonical_and_torsion_free() {
        let d = sphere();
        let c = canonical_nomizu(&d).unwrap();
        let t = natural_torsion_free(&d).unwrap();
        let sp = nomizu_space(&d).unwrap();
        assert!(sp.contains(&c) && sp.contains(&t));
        assert!(is_torsion_free(&t));
        // symmetric pair: natural torsion-free is canonical
        assert!(t.is_zero());
        let tc = torsion_at_o(&c);
        assert!(tc.iter().flatten().flatten().all(|v| v.is_zero()));
    }

    #[test]
    fn bad_metric_is_rejected() {
        let d = sphere();
        let g = SuperBilinearForm::scalar(d.m_space(), Matrix::from_ints(&[&[1, 0], &[0, 2]]), Symmetry::Symmetric).unwrap();
        assert_eq!(levi_civita_nomizu(&d, &g), Err(ConnectionError::BadMetric));
        let z = SuperBilinearForm::scalar(d.m_space(), Matrix::zeros(2, 2), Symmetry::Symmetric).unwrap();
        assert_eq!(levi_civita_nomizu(&d, &z), Err(ConnectionError::DegenerateMetric));
    }

    #[test]
    fn extra_group_elements_cut_down() {
        let d = ReductiveDecomposition::new(abelian(2, 0), vec![], vec![0, 1]).unwrap();
        assert_eq!(nomizu_space(&d).unwrap().dim(), 8);
        let r = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
        assert_eq!(nomizu_space_with(&d, &[r]).unwrap().dim(), 4);
    }
}
