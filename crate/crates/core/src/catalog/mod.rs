//! Worked algebras: Poincaré superalgebras, the maximally supersymmetric
//! plane wave, Freund–Rubin backgrounds and the Wess–Zumino superconformal
//! algebra.

mod freund_rubin;
mod planewave;
mod poincare;
mod wess_zumino;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clifford::{CliffordError, CliffordRep, Signature};
use crate::exactla::{fmt_q, parse_q, ExactError, Matrix};
use crate::killing::flux::FluxJson;
use crate::killing::{AdaptedSupersymmetryAlgebra, FluxForm, KillingError};
use crate::liesuper::json::{decomposition_from_json, decomposition_to_json, AlgebraJson};
use crate::liesuper::{LieError, LieSuperalgebra, ReductiveDecomposition};

pub use freund_rubin::{build_freund_rubin, freund_rubin_calibration, freund_rubin_variant, FreundRubin, FreundRubinCalibration, FreundRubinChoice, FreundRubinVariant};
pub use planewave::{build_cahen_wallach, planewave_calibration, planewave_flux, planewave_spot_checks, planewave_variant, PlaneWaveCalibration, PlaneWaveChoice, PlaneWaveSpotCheck, PlaneWaveVariant};
pub use poincare::{build_poincare, poincare_algebra, poincare_decomposition, poincare_gammas, poincare_superspacetime};
pub use wess_zumino::{build_wess_zumino, twistor_spinor_maps, wess_zumino_calibration, wess_zumino_literal_coefficients, wess_zumino_variant, WessZuminoCalibration, WessZuminoVariant};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Killing(#[from] KillingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("signature {0} has no symmetric equivariant vector-valued spinor form")]
    NoGamma(Signature),
    #[error("form index {0} out of range ({1} available)")]
    GammaChoice(usize, usize),
    #[error("unknown catalog entry `{0}`")]
    Unknown(String),
    #[error("malformed entry: {0}")]
    Malformed(String),
    #[error("imported entry fails its checks: {0}")]
    FailedCheck(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub decomposition: ReductiveDecomposition,
    pub adapted: Option<AdaptedSupersymmetryAlgebra>,
    pub flux: Option<FluxForm>,
    pub notes: String,
}

impl CatalogEntry {
    pub fn algebra(&self) -> &LieSuperalgebra {
        self.decomposition.algebra()
    }

    /// Flux invariance under the isotropy algebra acting on `m0`.
    pub fn flux_invariant(&self) -> Option<bool> {
        let (f, a) = (self.flux.as_ref()?, self.adapted.as_ref()?);
        Some((0..a.h().len()).all(|hb| f.is_invariant(&a.ad_h_m0(hb))))
    }
}

/// Names accepted by [`build`], in listing order.
pub const CATALOG: &[&str] = &[
    "poincare-1-2",
    "poincare-2-1",
    "poincare-3-0",
    "poincare-1-3",
    "poincare-3-1",
    "poincare-1-10",
    "cahen-wallach",
    "freund-rubin-ads4xs7",
    "freund-rubin-ads7xs4",
    "wess-zumino",
];

pub fn build(name: &str) -> Result<CatalogEntry, CatalogError> {
    if let Some(rest) = name.strip_prefix("poincare-") {
        let (r, s) = rest.split_once('-').ok_or_else(|| CatalogError::Unknown(name.into()))?;
        let r: usize = r.parse().map_err(|_| CatalogError::Unknown(name.into()))?;
        let s: usize = s.parse().map_err(|_| CatalogError::Unknown(name.into()))?;
        return build_poincare(Signature::new(r, s), 0);
    }
    match name {
        "cahen-wallach" => build_cahen_wallach(),
        "cahen-wallach-literal" => planewave_variant(PlaneWaveVariant::Literal),
        "freund-rubin-ads4xs7" => build_freund_rubin(FreundRubin::AdS4xS7),
        "freund-rubin-ads7xs4" => build_freund_rubin(FreundRubin::AdS7xS4),
        "freund-rubin-ads4xs7-literal" => freund_rubin_variant(FreundRubin::AdS4xS7, FreundRubinVariant::Literal),
        "freund-rubin-ads7xs4-literal" => freund_rubin_variant(FreundRubin::AdS7xS4, FreundRubinVariant::Literal),
        "wess-zumino" => build_wess_zumino(&crate::exactla::qi(1)),
        "wess-zumino-literal" => wess_zumino_variant(&crate::exactla::qi(1), WessZuminoVariant::Literal),
        _ => Err(CatalogError::Unknown(name.into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdaptedJson {
    pub r: usize,
    pub s: usize,
    pub m0: Vec<String>,
    pub m1: Vec<String>,
    /// Rows of the frame matrix.
    pub frame: Vec<Vec<String>>,
    pub copies: usize,
    /// Gamma matrices when they differ from the standard construction.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gammas: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub schema: u32,
    pub name: String,
    pub notes: String,
    pub algebra: AlgebraJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub adapted: Option<AdaptedJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flux: Option<FluxJson>,
}

pub fn export(e: &CatalogEntry) -> EntryJson {
    let g = e.algebra();
    EntryJson {
        schema: 1,
        name: e.name.clone(),
        notes: e.notes.clone(),
        algebra: decomposition_to_json(&e.decomposition),
        adapted: e.adapted.as_ref().map(|a| AdaptedJson {
            r: a.rep().signature().r,
            s: a.rep().signature().s,
            m0: a.m0().iter().map(|&i| g.label(i).to_string()).collect(),
            m1: a.m1().iter().map(|&i| g.label(i).to_string()).collect(),
            frame: a.frame().to_dense().iter().map(|r| r.iter().map(fmt_q).collect()).collect(),
            copies: a.copies(),
            gammas: custom_gammas(a.rep()),
        }),
        flux: e.flux.as_ref().map(|f| f.to_json()),
    }
}

fn custom_gammas(rep: &CliffordRep) -> Option<Vec<Vec<Vec<String>>>> {
    let standard = CliffordRep::build(rep.signature()).ok()?;
    if standard.gammas() == rep.gammas() {
        return None;
    }
    Some(rep.gammas().iter().map(|g| g.to_dense().iter().map(|r| r.iter().map(fmt_q).collect()).collect()).collect())
}

/// Square matrix from rows of rationals.
fn parse_rows(rows: &[Vec<String>]) -> Result<Matrix, CatalogError> {
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(CatalogError::Malformed("matrix is not square".into()));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|x| parse_q(x)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_dense(rows))
}

pub fn export_string(e: &CatalogEntry) -> String {
    serde_json::to_string_pretty(&export(e)).expect("entry serializes")
}

/// Rebuilds an entry without running its checks.
pub fn import_unchecked(j: &EntryJson) -> Result<CatalogEntry, CatalogError> {
    if j.schema != 1 {
        return Err(CatalogError::Malformed(format!("unsupported schema {}", j.schema)));
    }
    let d = decomposition_from_json(&j.algebra)?;
    let g = d.algebra();
    let adapted = match &j.adapted {
        None => None,
        Some(a) => {
            let idx = |l: &String| g.index(l);
            let m0 = a.m0.iter().map(idx).collect::<Result<Vec<_>, _>>()?;
            let m1 = a.m1.iter().map(idx).collect::<Result<Vec<_>, _>>()?;
            let sig = Signature::new(a.r, a.s);
            let rep = match &a.gammas {
                Some(gs) => {
                    let gs = gs.iter().map(|g| parse_rows(g)).collect::<Result<Vec<_>, _>>()?;
                    if gs.iter().any(|g| g.nrows() != gs[0].nrows()) {
                        return Err(CatalogError::Malformed("gamma matrices of different sizes".into()));
                    }
                    CliffordRep::from_gammas(sig, gs)?
                }
                None => CliffordRep::build(sig)?,
            };
            Some(AdaptedSupersymmetryAlgebra::new(d.clone(), m0, m1, rep, parse_rows(&a.frame)?, a.copies)?)
        }
    };
    let flux = j.flux.as_ref().map(FluxForm::from_json).transpose()?;
    Ok(CatalogEntry {
        name: j.name.clone(),
        decomposition: d,
        adapted,
        flux,
        notes: j.notes.clone(),
    })
}

/// Rebuilds an entry and re-runs its checks.
pub fn import(j: &EntryJson) -> Result<CatalogEntry, CatalogError> {
    let e = import_unchecked(j)?;
    e.decomposition.require_reductive()?;
    if !e.algebra().check_super_jacobi().pass {
        return Err(CatalogError::FailedCheck("super-Jacobi".into()));
    }
    if let Some(a) = &e.adapted {
        let r = a.check_adapted();
        if !r.pass {
            return Err(CatalogError::FailedCheck(format!("adapted: {:?}", r.residuals)));
        }
    }
    if e.flux_invariant() == Some(false) {
        return Err(CatalogError::FailedCheck("flux is not invariant".into()));
    }
    Ok(e)
}

pub fn import_str(s: &str) -> Result<CatalogEntry, CatalogError> {
    import(&parse_entry(s)?)
}

pub fn parse_entry(s: &str) -> Result<EntryJson, CatalogError> {
    serde_json::from_str(s).map_err(|e| CatalogError::Malformed(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poincare_round_trip() {
        let e = build("poincare-1-2").unwrap();
        let s = export_string(&e);
        assert_eq!(import_str(&s).unwrap(), e);
    }

    #[test]
    fn bad_parity_is_rejected() {
        let e = build("poincare-1-2").unwrap();
        let s = export_string(&e).replacen("\"odd\"", "\"even\"", 1);
        assert!(import_str(&s).is_err());
    }
}
