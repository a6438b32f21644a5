//! Algebras of supersymmetry adapted to a spin structure, and the Killing
//! superalgebra checks at the origin.

mod brackets;
pub mod flux;
mod sugra;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::clifford::{CliffordError, CliffordRep, SpinLieAlgebra};
use crate::connection::{supersymmetry_nomizu, ConnectionError};
use crate::exactla::{fmt_q, GradedMap, GradedSpace, Matrix, Parity, Q};
use crate::liesuper::{LieError, ReductiveDecomposition, SuperBilinearForm, Symmetry};

pub use brackets::{curvature_entries, dirac_bracket, dirac_bracket_full, killing_superalgebra_check, kosmann_bracket, spinor_connection_curvature, KillingReport};
pub use flux::FluxForm;
pub use sugra::{calibrate_flux, odd_bracket_space, supergravity_connection_term, CalibrationChoice, CalibrationReport, Conventions, OddAnsatz};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KillingError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Connection(#[from] ConnectionError),
    #[error("bad adapted data: {0}")]
    Shape(String),
    #[error("isotropy element `{0}` does not act on m0 through so(r,s)")]
    NotSpinLift(String),
    #[error("argument has the wrong parity or lies outside the expected subspace")]
    Parity,
    #[error("body is not symmetric: [m0, m0] has an m0 component")]
    NotSymmetric,
    #[error("signature must be (1,10)")]
    Signature,
}

/// `g = (h + m0) + m1` with `m0 ≅ R^{r,s}` through an orthonormalising frame
/// and `m1` a sum of `copies` spinor modules in the standard spinor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedSupersymmetryAlgebra {
    decomposition: ReductiveDecomposition,
    m0: Vec<usize>,
    m1: Vec<usize>,
    rep: CliffordRep,
    frame: Matrix,
    frame_inv: Matrix,
    copies: usize,
    lift: Vec<Matrix>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AdaptedReport {
    pub pass: bool,
    /// `ξ*∘lift = ad_h|m0`.
    pub lift_even: bool,
    /// `ad_h|m1 = Δ∘lift`.
    pub lift_odd: bool,
    pub jacobi: bool,
    pub gamma_symmetric: bool,
    pub gamma_equivariant: bool,
    /// The supersymmetry connection reproduces `C` on the spinor block.
    pub supersymmetry_connection: bool,
    pub residuals: Vec<String>,
}

impl AdaptedSupersymmetryAlgebra {
    /// `frame` is `n x |m0|`; column `k` holds the orthonormal coordinates of
    /// `m0[k]`. The isotropy lift is computed as `ξ*⁻¹(F ad_h|m0 F⁻¹)`.
    pub fn new(decomposition: ReductiveDecomposition, m0: Vec<usize>, m1: Vec<usize>, rep: CliffordRep, frame: Matrix, copies: usize) -> Result<Self, KillingError> {
        let g = decomposition.algebra();
        let mut all: Vec<usize> = m0.iter().chain(&m1).copied().collect();
        all.sort_unstable();
        let mut m: Vec<usize> = decomposition.m().to_vec();
        m.sort_unstable();
        if all != m {
            return Err(KillingError::Shape("m0 and m1 must partition m".into()));
        }
        if m0.iter().any(|&i| g.parity(i) != Parity::Even) || m1.iter().any(|&i| g.parity(i) != Parity::Odd) {
            return Err(KillingError::Shape("m0 must be even and m1 odd".into()));
        }
        if decomposition.h().iter().any(|&i| g.parity(i) != Parity::Even) {
            return Err(KillingError::Shape("isotropy algebra must be even".into()));
        }
        let n = rep.signature().dim();
        if m0.len() != n || frame.nrows() != n || frame.ncols() != n {
            return Err(KillingError::Shape(format!("m0 has dimension {} but the signature has {n}", m0.len())));
        }
        if m1.len() != copies * rep.spin_dim() {
            return Err(KillingError::Shape(format!("m1 has dimension {}, expected {} x {}", m1.len(), copies, rep.spin_dim())));
        }
        let frame_inv = frame.inverse().ok_or_else(|| KillingError::Shape("frame is singular".into()))?;
        let mut a = AdaptedSupersymmetryAlgebra {
            decomposition,
            m0,
            m1,
            rep,
            frame,
            frame_inv,
            copies,
            lift: Vec::new(),
        };
        let sp = SpinLieAlgebra::new(a.rep.clone());
        let mut lift = Vec::new();
        for hb in 0..a.decomposition.h().len() {
            let x = a.frame.mul(&a.ad_h_m0(hb)).mul(&a.frame_inv);
            let l = sp
                .xi_star_inv(&x)
                .map_err(|_| KillingError::NotSpinLift(g_label(&a, a.decomposition.h()[hb])))?;
            lift.push(l);
        }
        a.lift = lift;
        Ok(a)
    }

    pub fn decomposition(&self) -> &ReductiveDecomposition {
        &self.decomposition
    }

    pub fn algebra(&self) -> &crate::liesuper::LieSuperalgebra {
        self.decomposition.algebra()
    }

    pub fn h(&self) -> &[usize] {
        self.decomposition.h()
    }

    pub fn m0(&self) -> &[usize] {
        &self.m0
    }

    pub fn m1(&self) -> &[usize] {
        &self.m1
    }

    pub fn rep(&self) -> &CliffordRep {
        &self.rep
    }

    pub fn frame(&self) -> &Matrix {
        &self.frame
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// Spin matrix lifting each isotropy basis element.
    pub fn lift(&self) -> &[Matrix] {
        &self.lift
    }

    /// Copy with every lift multiplied by `c`; used to exercise failures.
    pub fn with_scaled_lift(&self, c: &Q) -> Self {
        let mut a = self.clone();
        a.lift = a.lift.iter().map(|l| l.scale(c)).collect();
        a
    }

    /// `Δ` extended block-diagonally to `m1`.
    pub fn delta(&self, spin: &Matrix) -> Matrix {
        Matrix::identity(self.copies).kron(spin)
    }

    pub fn m0_space(&self) -> GradedSpace {
        self.algebra().space().restrict(&self.m0)
    }

    pub fn m1_space(&self) -> GradedSpace {
        self.algebra().space().restrict(&self.m1)
    }

    fn block(&self, x: usize, rows: &[usize], cols: &[usize]) -> Matrix {
        let g = self.algebra();
        let pos = |i: usize| rows.iter().position(|&r| r == i);
        Matrix::from_entries(
            rows.len(),
            cols.len(),
            cols.iter().enumerate().flat_map(|(c, &j)| {
                g.bracket_basis(x, j)
                    .iter()
                    .filter_map(move |(k, v)| pos(*k).map(|r| (r, c, v.clone())))
                    .collect::<Vec<_>>()
            }),
        )
    }

    /// `ad(h_b)` on `m0`.
    pub fn ad_h_m0(&self, hb: usize) -> Matrix {
        self.block(self.decomposition.h()[hb], &self.m0, &self.m0)
    }

    /// `ad(h_b)` on `m1`.
    pub fn ad_h_m1(&self, hb: usize) -> Matrix {
        self.block(self.decomposition.h()[hb], &self.m1, &self.m1)
    }

    /// `C_k = [m0_k, ·]` on `m1`.
    pub fn c_matrix(&self, k: usize) -> Matrix {
        self.block(self.m0[k], &self.m1, &self.m1)
    }

    /// `C: m0 ⊗ m1 -> m1` as a bilinear form.
    pub fn c_form(&self) -> SuperBilinearForm {
        let n1 = self.m1.len();
        let cs: Vec<Matrix> = (0..self.m0.len()).map(|k| self.c_matrix(k)).collect();
        let comps = (0..n1)
            .map(|t| Matrix::from_entries(self.m0.len(), n1, cs.iter().enumerate().flat_map(|(k, c)| c.row(t).iter().map(move |(j, v)| (k, *j, v.clone())).collect::<Vec<_>>())))
            .collect();
        SuperBilinearForm::new(self.m0_space(), self.m1_space(), self.m1_space(), comps, Symmetry::None).expect("C has consistent parity")
    }

    /// `Γ: m1 ⊗ m1 -> m0`, the `m0` part of the odd-odd bracket.
    pub fn gamma_form(&self) -> SuperBilinearForm {
        self.odd_odd_part(&self.m0, self.m0_space())
    }

    /// The `h` part of the odd-odd bracket.
    pub fn odd_h_form(&self) -> SuperBilinearForm {
        let h = self.decomposition.h().to_vec();
        let hs = self.algebra().space().restrict(&h);
        self.odd_odd_part(&h, hs)
    }

    fn odd_odd_part(&self, target: &[usize], ts: GradedSpace) -> SuperBilinearForm {
        let g = self.algebra();
        let n1 = self.m1.len();
        let mut comps = vec![Vec::new(); target.len()];
        for (a, &i) in self.m1.iter().enumerate() {
            for (b, &j) in self.m1.iter().enumerate() {
                for (k, v) in g.bracket_basis(i, j) {
                    if let Some(t) = target.iter().position(|x| x == k) {
                        comps[t].push((a, b, v.clone()));
                    }
                }
            }
        }
        let comps = comps.into_iter().map(|e| Matrix::from_entries(n1, n1, e)).collect();
        SuperBilinearForm::new(self.m1_space(), self.m1_space(), ts, comps, Symmetry::None).expect("odd-odd bracket is even")
    }

    pub fn check_adapted(&self) -> AdaptedReport {
        let g = self.algebra();
        let sp = SpinLieAlgebra::new(self.rep.clone());
        let mut residuals = Vec::new();
        let mut lift_even = true;
        let mut lift_odd = true;
        for (hb, &gi) in self.decomposition.h().iter().enumerate() {
            let want = self.frame.mul(&self.ad_h_m0(hb)).mul(&self.frame_inv);
            match sp.xi_star(&self.lift[hb]) {
                Ok(x) if x == want => {}
                Ok(x) => {
                    lift_even = false;
                    let d = x.sub(&want);
                    let (r, c, v) = d.entries().next().map(|(r, c, v)| (r, c, fmt_q(v))).unwrap();
                    residuals.push(format!("xi*(lift {}) - ad|m0: ({r},{c}) = {v}", g.label(gi)));
                }
                Err(_) => {
                    lift_even = false;
                    residuals.push(format!("lift of {} is not in spin", g.label(gi)));
                }
            }
            let d = self.ad_h_m1(hb).sub(&self.delta(&self.lift[hb]));
            let hit = d.entries().next().map(|(r, c, v)| (r, c, fmt_q(v)));
            if let Some((r, c, v)) = hit {
                lift_odd = false;
                residuals.push(format!("ad({})|m1 - Delta(lift): ({},{}) = {v}", g.label(gi), g.label(self.m1[r]), g.label(self.m1[c])));
            }
        }
        let jac = g.check_super_jacobi();
        if let Some(f) = jac.first.as_ref() {
            residuals.push(format!("jacobi fails at {:?}", f));
        }
        let gamma = self.gamma_form();
        // ordinary symmetry on odd arguments is graded skew
        let gamma_symmetric = gamma.has_symmetry(Symmetry::Skew);
        let on_m1: Vec<GradedMap> = (0..self.decomposition.h().len())
            .map(|hb| GradedMap::endo(&self.m1_space(), self.ad_h_m1(hb), Parity::Even).unwrap())
            .collect();
        let on_m0: Vec<GradedMap> = (0..self.decomposition.h().len())
            .map(|hb| GradedMap::endo(&self.m0_space(), self.ad_h_m0(hb), Parity::Even).unwrap())
            .collect();
        let gamma_equivariant = if on_m1.is_empty() {
            true
        } else {
            gamma.check_equivariance(&on_m1, &on_m1, &on_m0).map(|r| r.pass).unwrap_or(false)
        };
        if !gamma_equivariant {
            residuals.push("Gamma is not equivariant".into());
        }
        let supersymmetry_connection = self.supersymmetry_matches_c();
        if !supersymmetry_connection {
            residuals.push("supersymmetry connection differs from C".into());
        }
        let pass = lift_even && lift_odd && jac.pass && gamma_symmetric && gamma_equivariant && supersymmetry_connection;
        AdaptedReport {
            pass,
            lift_even,
            lift_odd,
            jacobi: jac.pass,
            gamma_symmetric,
            gamma_equivariant,
            supersymmetry_connection,
            residuals,
        }
    }

    fn supersymmetry_matches_c(&self) -> bool {
        let d = &self.decomposition;
        let Ok(n) = supersymmetry_nomizu(d) else {
            return false;
        };
        let loc = |i: usize| d.locate(i).1;
        self.m0.iter().enumerate().all(|(k, &gk)| {
            let l = n.map(loc(gk));
            let c = self.c_matrix(k);
            self.m1.iter().enumerate().all(|(r, &gr)| self.m1.iter().enumerate().all(|(s, &gs)| l.get(loc(gr), loc(gs)) == c.get(r, s)))
        })
    }

    /// Clifford action of an `m0` vector given in local coordinates.
    pub fn clifford_of(&self, v: &[Q]) -> Matrix {
        self.rep.vector(&self.frame.apply(v))
    }

    /// Metric on `m0` pulled back through the frame.
    pub fn m0_metric(&self) -> Matrix {
        let eta = Matrix::from_entries(
            self.frame.nrows(),
            self.frame.nrows(),
            (0..self.frame.nrows()).map(|i| (i, i, crate::exactla::qi(self.rep.eta(i)))),
        );
        self.frame.transpose().mul(&eta).mul(&self.frame)
    }

    pub(crate) fn unit_m0(&self, k: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.m0.len()];
        v[k] = Q::one();
        v
    }
}

fn g_label(a: &AdaptedSupersymmetryAlgebra, i: usize) -> String {
    a.algebra().label(i).to_string()
}
