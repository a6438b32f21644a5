//! Command line front end. [`run`] parses arguments, loads the entry and
//! renders the report; `main` only prints and exits.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{self, CatalogEntry, FreundRubin};
use crate::clifford::{schur_algebra, CliffordRep, Signature};
use crate::connection::{self, NomizuMap};
use crate::exactla::{fmt_q, Matrix, TensorElement};
use crate::killing::{calibrate_flux, curvature_entries, killing_superalgebra_check, spinor_connection_curvature};
use crate::pbw;
use crate::svf::{verify_fundamental_fields, SplitDomain};

#[derive(Parser, Debug)]
#[command(name = "superlie", version, about = "Exact checks on Lie superalgebras and invariant superconnections")]
struct Cli {
    /// Output format; `nomizu-table` defaults to tsv, everything else to json.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in entry, see `catalog list`.
    #[arg(long)]
    catalog: Option<String>,
    /// Entry in the JSON exchange format.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct SourceOrSignature {
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Poincaré superspacetime of signature `R,S`.
    #[arg(long)]
    signature: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConnectionKind {
    Canonical,
    TorsionFree,
    LeviCivita,
    Supersymmetry,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Super-Jacobi identity on every basis triple.
    Jacobi(Source),
    /// Adapted supersymmetry algebra axioms.
    AdaptedCheck(Source),
    /// Dimension of the space of invariant connections.
    NomizuDim(SourceOrSignature),
    /// Invariant connections on Poincaré superspacetimes by signature class.
    NomizuTable {
        /// `R,S`, repeatable; defaults to one representative per class.
        #[arg(long)]
        signature: Vec<String>,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Curvature at the origin and flatness.
    Curvature {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "canonical")]
        connection: ConnectionKind,
    },
    /// Torsion at the origin.
    Torsion {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "canonical")]
        connection: ConnectionKind,
    },
    /// Infinitesimal holonomy algebra.
    Holonomy {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "canonical")]
        connection: ConnectionKind,
    },
    /// Tensors annihilated by the holonomy algebra.
    ParallelTensors {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "canonical")]
        connection: ConnectionKind,
        /// `R,S`: contravariant and covariant rank.
        #[arg(long, default_value = "0,2")]
        rank: String,
    },
    /// Coderivation identities in the enveloping algebra.
    PbwVerify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_degree: Option<usize>,
        /// `A,A1,A2`: odd labels for the expanded `a γ(a1 a2)`.
        #[arg(long)]
        example: Option<String>,
    },
    /// Symmetrization correspondence for `ad`, left and right multiplication.
    PhiVerify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Fundamental vector fields and the translation supergroup.
    SvfVerify(Source),
    /// Real Clifford module data for a signature.
    CliffordInfo {
        #[arg(long)]
        signature: String,
    },
    /// Commutant of the gamma matrices.
    Schur {
        #[arg(long)]
        signature: String,
    },
    /// Killing superalgebra brackets and spinor connection curvature.
    KillingCheck(Source),
    /// Sign convention search for entries carrying flux.
    Calibrate(Source),
    /// Built-in entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Export { name: String },
}

/// Errors that make the input unusable, reported with exit status 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

struct Outcome {
    pass: bool,
    report: Value,
    tsv: Option<String>,
    text: Option<String>,
    /// Print `text` as the json output instead of the envelope.
    raw: bool,
}

impl Outcome {
    fn new<T: Serialize>(pass: bool, report: &T) -> Self {
        Outcome {
            pass,
            report: serde_json::to_value(report).expect("reports serialize"),
            tsv: None,
            text: None,
            raw: false,
        }
    }
}

/// Runs one invocation; returns the exit status and what to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let name = command_name(&cli.command);
    let format = cli.format.unwrap_or(if name == "nomizu-table" { Format::Tsv } else { Format::Json });
    let (source, result) = dispatch(&cli.command);
    match result {
        Ok(out) => {
            let code = if out.pass { 0 } else { 1 };
            (code, render(format, name, &source, &out))
        }
        Err(InputError(msg)) => {
            let text = match format {
                Format::Json => {
                    let v = json!({"schema": 1, "command": name, "source": source, "pass": false, "error": msg});
                    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
                }
                _ => format!("error\t{msg}\n"),
            };
            (2, text)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Jacobi(_) => "jacobi",
        Command::AdaptedCheck(_) => "adapted-check",
        Command::NomizuDim(_) => "nomizu-dim",
        Command::NomizuTable { .. } => "nomizu-table",
        Command::Curvature { .. } => "curvature",
        Command::Torsion { .. } => "torsion",
        Command::Holonomy { .. } => "holonomy",
        Command::ParallelTensors { .. } => "parallel-tensors",
        Command::PbwVerify { .. } => "pbw-verify",
        Command::PhiVerify { .. } => "phi-verify",
        Command::SvfVerify(_) => "svf-verify",
        Command::CliffordInfo { .. } => "clifford-info",
        Command::Schur { .. } => "schur",
        Command::KillingCheck(_) => "killing-check",
        Command::Calibrate(_) => "calibrate",
        Command::Catalog { .. } => "catalog",
    }
}

fn describe(s: &Source) -> String {
    match (&s.catalog, &s.input) {
        (Some(c), _) => format!("catalog:{c}"),
        (_, Some(p)) => format!("input:{}", p.display()),
        _ => String::new(),
    }
}

fn load(s: &Source) -> Result<CatalogEntry, InputError> {
    match (&s.catalog, &s.input) {
        (Some(name), _) => Ok(catalog::build(name)?),
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            Ok(catalog::import_unchecked(&catalog::parse_entry(&text)?)?)
        }
        _ => Err(InputError("no source given".into())),
    }
}

fn parse_pair(text: &str, what: &str) -> Result<Signature, InputError> {
    Signature::parse(text).ok_or_else(|| InputError(format!("{what} must be R,S, got `{text}`")))
}

fn dispatch(c: &Command) -> (String, Result<Outcome, InputError>) {
    match c {
        Command::Jacobi(s) => (describe(s), load(s).map(|e| jacobi(&e))),
        Command::AdaptedCheck(s) => (describe(s), load(s).and_then(|e| adapted(&e))),
        Command::NomizuDim(s) => {
            let src = Source { catalog: s.catalog.clone(), input: s.input.clone() };
            match &s.signature {
                Some(sig) => (format!("signature:{sig}"), nomizu_dim_signature(sig)),
                None => (describe(&src), load(&src).and_then(|e| nomizu_dim(&e.decomposition))),
            }
        }
        Command::NomizuTable { signature, parallel } => ("poincare".into(), nomizu_table(signature, *parallel)),
        Command::Curvature { source, connection } => (describe(source), load(source).and_then(|e| curvature(&e, *connection))),
        Command::Torsion { source, connection } => (describe(source), load(source).and_then(|e| torsion(&e, *connection))),
        Command::Holonomy { source, connection } => (describe(source), load(source).and_then(|e| holonomy(&e, *connection))),
        Command::ParallelTensors { source, connection, rank } => {
            (describe(source), load(source).and_then(|e| parallel_tensors(&e, *connection, rank)))
        }
        Command::PbwVerify { source, max_degree, example } => {
            (describe(source), load(source).and_then(|e| pbw_verify(&e, *max_degree, example.as_deref())))
        }
        Command::PhiVerify { source, max_degree } => (describe(source), load(source).and_then(|e| phi_verify(&e, *max_degree))),
        Command::SvfVerify(s) => (describe(s), load(s).and_then(|e| svf_verify(&e))),
        Command::CliffordInfo { signature } => (format!("signature:{signature}"), clifford_info(signature)),
        Command::Schur { signature } => (format!("signature:{signature}"), schur(signature)),
        Command::KillingCheck(s) => (describe(s), load(s).and_then(|e| killing_check(&e))),
        Command::Calibrate(s) => (describe(s), load(s).and_then(|e| calibrate(&e))),
        Command::Catalog { action } => match action {
            CatalogAction::List => ("catalog".into(), Ok(catalog_list())),
            CatalogAction::Export { name } => (format!("catalog:{name}"), catalog_export(name)),
        },
    }
}

fn jacobi(e: &CatalogEntry) -> Outcome {
    let r = e.algebra().check_super_jacobi();
    let red = e.decomposition.check_reductive();
    let (even, odd) = e.algebra().space().dim();
    let mut out = Outcome::new(
        r.pass,
        &json!({"name": e.name, "dim_even": even, "dim_odd": odd, "jacobi": r, "reductive": red}),
    );
    out.text = Some(format!(
        "{}: {} triples, {} failures{}\n",
        e.name,
        r.triples_checked,
        r.failures,
        r.first.as_ref().map(|f| format!(", first {:?}", f)).unwrap_or_default()
    ));
    out
}

fn adapted(e: &CatalogEntry) -> Result<Outcome, InputError> {
    let a = e.adapted.as_ref().ok_or_else(|| InputError(format!("`{}` carries no adapted structure", e.name)))?;
    let r = a.check_adapted();
    Ok(Outcome::new(r.pass, &json!({"name": e.name, "adapted": r, "flux_invariant": e.flux_invariant()})))
}

fn nomizu_dim(d: &crate::liesuper::ReductiveDecomposition) -> Result<Outcome, InputError> {
    let sp = connection::nomizu_space(d)?;
    let mut out = Outcome::new(true, &json!({"dim": sp.dim(), "blocks": sp.blocks}));
    out.text = Some(format!("{}\n", sp.dim()));
    out.tsv = Some(format!("dim\t{}\n", sp.dim()));
    Ok(out)
}

fn nomizu_dim_signature(text: &str) -> Result<Outcome, InputError> {
    let sig = parse_pair(text, "signature")?;
    let row = connection::table_row(sig)?;
    let pass = row.matches();
    let mut out = Outcome::new(pass, &row);
    out.tsv = Some(connection::table_tsv(&[row.clone()]));
    out.text = Some(format!("{}\n", row.d));
    Ok(out)
}

fn nomizu_table(sigs: &[String], parallel: usize) -> Result<Outcome, InputError> {
    let sigs = if sigs.is_empty() {
        connection::default_signatures()
    } else {
        sigs.iter().map(|s| parse_pair(s, "signature")).collect::<Result<Vec<_>, _>>()?
    };
    let rows = connection::poincare_connection_table(&sigs, parallel.max(1))?;
    let pass = rows.iter().all(|r| r.matches());
    let tsv = connection::table_tsv(&rows);
    let mut out = Outcome::new(pass, &json!({ "rows": rows }));
    out.text = Some(tsv.clone());
    out.tsv = Some(tsv);
    Ok(out)
}

fn nomizu_of(e: &CatalogEntry, kind: ConnectionKind) -> Result<NomizuMap, InputError> {
    let d = &e.decomposition;
    Ok(match kind {
        ConnectionKind::Canonical => connection::canonical_nomizu(d)?,
        ConnectionKind::TorsionFree => connection::natural_torsion_free(d)?,
        ConnectionKind::Supersymmetry => connection::supersymmetry_nomizu(d)?,
        ConnectionKind::LeviCivita => {
            let g = connection::invariant_metric(d)?.ok_or_else(|| InputError(format!("`{}` has no invariant metric on m", e.name)))?;
            connection::levi_civita_nomizu(d, &g)?
        }
    })
}

fn curvature(e: &CatalogEntry, kind: ConnectionKind) -> Result<Outcome, InputError> {
    let n = nomizu_of(e, kind)?;
    let r = connection::connection_report(&n);
    let mut out = Outcome::new(
        r.flat.agree,
        &json!({"name": e.name, "connection": kind_name(kind), "curvature": r.curvature, "flat": r.flat}),
    );
    let mut tsv = String::from("A\tB\trow\tcol\tvalue\n");
    for (a, b, entries) in &r.curvature {
        for (row, col, v) in entries {
            tsv.push_str(&format!("{a}\t{b}\t{row}\t{col}\t{v}\n"));
        }
    }
    out.tsv = Some(tsv);
    Ok(out)
}

fn torsion(e: &CatalogEntry, kind: ConnectionKind) -> Result<Outcome, InputError> {
    let n = nomizu_of(e, kind)?;
    let r = connection::connection_report(&n);
    let torsion_free = r.torsion.is_empty();
    let mut report = json!({"name": e.name, "connection": kind_name(kind), "torsion_free": torsion_free, "torsion": r.torsion});
    let mut pass = torsion_free || !matches!(kind, ConnectionKind::TorsionFree | ConnectionKind::LeviCivita);
    if kind == ConnectionKind::LeviCivita {
        let g = connection::invariant_metric(&e.decomposition)?.expect("checked in nomizu_of");
        let preserves = connection::preserves_metric(&n, &g);
        report["preserves_metric"] = json!(preserves);
        pass &= preserves;
    }
    let mut out = Outcome::new(pass, &report);
    let mut tsv = String::from("A\tB\tcomponent\tvalue\n");
    for (a, b, entries) in &r.torsion {
        for (c, v) in entries {
            tsv.push_str(&format!("{a}\t{b}\t{c}\t{v}\n"));
        }
    }
    out.tsv = Some(tsv);
    Ok(out)
}

fn holonomy(e: &CatalogEntry, kind: ConnectionKind) -> Result<Outcome, InputError> {
    let n = nomizu_of(e, kind)?;
    let h = connection::infinitesimal_holonomy(&n);
    let mut out = Outcome::new(true, &json!({"name": e.name, "connection": kind_name(kind), "holonomy": h}));
    out.text = Some(format!("dim {}\n", h.dim));
    Ok(out)
}

fn tensor_terms(t: &TensorElement) -> Vec<String> {
    t.terms()
        .map(|(idx, c)| {
            let labels: Vec<&str> = idx.iter().zip(t.factors()).map(|(&i, (sp, _))| sp.label(i)).collect();
            format!("{}*[{}]", fmt_q(c), labels.join(","))
        })
        .collect()
}

fn parallel_tensors(e: &CatalogEntry, kind: ConnectionKind, rank: &str) -> Result<Outcome, InputError> {
    let rk = parse_pair(rank, "rank")?;
    let n = nomizu_of(e, kind)?;
    let ts = connection::parallel_tensor_space(&n, rk.r, rk.s);
    let tensors: Vec<Vec<String>> = ts.iter().map(tensor_terms).collect();
    let mut out = Outcome::new(
        true,
        &json!({"name": e.name, "connection": kind_name(kind), "rank": [rk.r, rk.s], "dim": ts.len(), "tensors": tensors}),
    );
    out.text = Some(format!("dim {}\n", ts.len()));
    Ok(out)
}

fn kind_name(k: ConnectionKind) -> &'static str {
    match k {
        ConnectionKind::Canonical => "canonical",
        ConnectionKind::TorsionFree => "torsion-free",
        ConnectionKind::LeviCivita => "levi-civita",
        ConnectionKind::Supersymmetry => "supersymmetry",
    }
}

fn label_index(e: &CatalogEntry, l: &str) -> Result<usize, InputError> {
    let g = e.algebra();
    (0..g.dim()).find(|&i| g.label(i) == l).ok_or_else(|| InputError(format!("no generator `{l}`")))
}

fn pbw_error(e: pbw::PbwError) -> Result<Outcome, InputError> {
    match e {
        pbw::PbwError::NotLie => {
            let mut out = Outcome::new(false, &json!({"error": e.to_string()}));
            out.text = Some(format!("{e}\n"));
            Ok(out)
        }
        other => Err(InputError(other.to_string())),
    }
}

fn pbw_verify(e: &CatalogEntry, max_degree: Option<usize>, example: Option<&str>) -> Result<Outcome, InputError> {
    let g = e.algebra();
    let deg = max_degree.unwrap_or(g.odd_indices().len());
    let r = match pbw::verify_koszul_identities(g, deg) {
        Ok(r) => r,
        Err(err) => return pbw_error(err),
    };
    let worked = match example {
        Some(ex) => {
            let l: Vec<&str> = ex.split(',').map(str::trim).collect();
            if l.len() != 3 {
                return Err(InputError(format!("--example takes three labels, got `{ex}`")));
            }
            let (a, a1, a2) = (label_index(e, l[0])?, label_index(e, l[1])?, label_index(e, l[2])?);
            Some(pbw::worked_example(g, a, a1, a2)?)
        }
        None => None,
    };
    let pass = r.pass && worked.as_ref().is_none_or(|w| w.pass);
    let mut text = String::new();
    let mut tsv = String::from("identity\ta\tv\tlhs\trhs\tequal\n");
    for row in &r.rows {
        let v = row.v.join("^");
        text.push_str(&format!(
            "{} a={} v=[{}]\n  lhs: {}\n  rhs: {}\n  {}\n",
            row.identity,
            row.a,
            v,
            row.lhs,
            row.rhs,
            if row.equal { "equal" } else { "DIFFER" }
        ));
        tsv.push_str(&format!("{}\t{}\t{}\t{}\t{}\t{}\n", row.identity, row.a, v, row.lhs, row.rhs, row.equal));
    }
    if let Some(w) = &worked {
        text.push_str(&format!(
            "example {} * gamma({} {})\n  coefficients: {}\n  lhs: {}\n  rhs: {}\n  presentation: {}\n",
            w.a,
            w.a1,
            w.a2,
            w.coefficients.join(", "),
            w.lhs,
            w.rhs,
            w.presentation
        ));
    }
    text.push_str(&format!("{} checks, {} failures\n", r.checks, r.failures));
    let mut out = Outcome::new(pass, &json!({"name": e.name, "identities": r, "example": worked}));
    out.text = Some(text);
    out.tsv = Some(tsv);
    Ok(out)
}

fn phi_verify(e: &CatalogEntry, max_degree: Option<usize>) -> Result<Outcome, InputError> {
    let g = e.algebra();
    let deg = max_degree.unwrap_or(g.odd_indices().len().min(3));
    let reports = match pbw::verify_phi(g, deg) {
        Ok(r) => r,
        Err(err) => return pbw_error(err),
    };
    let pass = reports.iter().all(|r| r.pass);
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!("c={} x={} {}: {}/{} ok\n", r.c, r.x, r.operator, r.checks - r.failures, r.checks));
    }
    let mut out = Outcome::new(pass, &json!({"name": e.name, "max_degree": deg, "reports": reports}));
    out.text = Some(text);
    Ok(out)
}

fn svf_verify(e: &CatalogEntry) -> Result<Outcome, InputError> {
    let d = SplitDomain::new(&e.decomposition)?;
    let r = verify_fundamental_fields(&d);
    let mut text = String::new();
    for f in &r.fields {
        text.push_str(&format!("{}\n  left:  {}\n  right: {}\n", f.element, f.left, f.right));
    }
    text.push_str(&format!("{} checks, {} failures\n", r.checks, r.failures.len()));
    for f in &r.failures {
        text.push_str(&format!("  {f}\n"));
    }
    let mut out = Outcome::new(r.pass, &r);
    out.text = Some(text);
    Ok(out)
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|row| row.iter().map(fmt_q).collect()).collect()
}

fn clifford_info(text: &str) -> Result<Outcome, InputError> {
    let sig = parse_pair(text, "signature")?;
    let rep = CliffordRep::build(sig)?;
    let irr = rep.certify_irreducible();
    let relations = rep.check_relations();
    let gammas: Vec<Vec<Vec<String>>> = rep.gammas().iter().map(matrix_rows).collect();
    let mut out = Outcome::new(
        relations && irr.irreducible,
        &json!({
            "signature": sig,
            "class": sig.class(),
            "spin_dim": rep.spin_dim(),
            "relations": relations,
            "irreducibility": irr,
            "gammas": gammas,
        }),
    );
    out.text = Some(format!(
        "signature {} class {} spin dim {} relations {} irreducible {}\n",
        sig,
        sig.class(),
        rep.spin_dim(),
        relations,
        irr.irreducible
    ));
    Ok(out)
}

fn schur(text: &str) -> Result<Outcome, InputError> {
    let sig = parse_pair(text, "signature")?;
    let rep = CliffordRep::build(sig)?;
    let basis = schur_algebra(&rep);
    let rows: Vec<Vec<Vec<String>>> = basis.iter().map(matrix_rows).collect();
    let mut out = Outcome::new(true, &json!({"signature": sig, "dim": basis.len(), "basis": rows}));
    out.text = Some(format!("dim {}\n", basis.len()));
    Ok(out)
}

fn killing_check(e: &CatalogEntry) -> Result<Outcome, InputError> {
    let a = e.adapted.as_ref().ok_or_else(|| InputError(format!("`{}` carries no adapted structure", e.name)))?;
    let r = killing_superalgebra_check(a);
    let curv = spinor_connection_curvature(a)?;
    let nonzero = curvature_entries(&curv);
    let pass = r.pass && nonzero.is_empty();
    let mut out = Outcome::new(pass, &json!({"name": e.name, "killing": r, "curvature_nonzero": nonzero}));
    out.text = Some(format!(
        "{}: kosmann {} dirac {} jacobi {} curvature {}\n",
        e.name,
        r.kosmann_matches,
        r.dirac_matches,
        r.transported_jacobi.pass,
        if nonzero.is_empty() { "zero" } else { "nonzero" }
    ));
    Ok(out)
}

fn calibrate(e: &CatalogEntry) -> Result<Outcome, InputError> {
    let base = e.name.trim_end_matches("-literal");
    match base {
        "cahen-wallach" => {
            let cal = catalog::planewave_calibration()?;
            let calibrated = catalog::build_cahen_wallach()?;
            let spot = catalog::planewave_spot_checks(&calibrated)?;
            let pass = !cal.selected.is_empty() && spot.pass;
            Ok(Outcome::new(pass, &json!({"name": e.name, "calibration": cal, "spot_checks": spot})))
        }
        "freund-rubin-ads4xs7" | "freund-rubin-ads7xs4" => {
            let which = if base == "freund-rubin-ads4xs7" { FreundRubin::AdS4xS7 } else { FreundRubin::AdS7xS4 };
            let cal = catalog::freund_rubin_calibration(which)?;
            Ok(Outcome::new(!cal.selected.is_empty(), &json!({"name": e.name, "calibration": cal})))
        }
        "wess-zumino" => {
            let cal = catalog::wess_zumino_calibration()?;
            Ok(Outcome::new(cal.solutions == 1, &json!({"name": e.name, "calibration": cal})))
        }
        _ => {
            let (a, f) = match (&e.adapted, &e.flux) {
                (Some(a), Some(f)) => (a, f),
                _ => return Err(InputError(format!("`{}` has no flux to calibrate", e.name))),
            };
            let cal = calibrate_flux(a, f)?;
            Ok(Outcome::new(cal.exact(), &json!({"name": e.name, "calibration": cal})))
        }
    }
}

fn catalog_list() -> Outcome {
    let variants = ["cahen-wallach-literal", "freund-rubin-ads4xs7-literal", "freund-rubin-ads7xs4-literal", "wess-zumino-literal"];
    let mut out = Outcome::new(true, &json!({"entries": catalog::CATALOG, "literal_variants": variants}));
    let all: Vec<&str> = catalog::CATALOG.iter().copied().chain(variants).collect();
    let listing = all.join("\n") + "\n";
    out.text = Some(listing.clone());
    out.tsv = Some(listing);
    out
}

fn catalog_export(name: &str) -> Result<Outcome, InputError> {
    let e = catalog::build(name)?;
    let mut out = Outcome::new(true, &catalog::export(&e));
    out.raw = true;
    out.text = Some(catalog::export_string(&e) + "\n");
    Ok(out)
}

fn flatten(v: &Value, path: String, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(x, p, out);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => out.push((path, s.clone())),
        other => out.push((path, other.to_string())),
    }
}

fn render(format: Format, command: &str, source: &str, out: &Outcome) -> String {
    let status = if out.pass { "PASS" } else { "FAIL" };
    match format {
        Format::Json if out.raw => out.text.clone().unwrap_or_default(),
        Format::Json => {
            let v = json!({"schema": 1, "command": command, "source": source, "pass": out.pass, "report": out.report});
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Tsv => match &out.tsv {
            Some(t) => t.clone(),
            None => {
                let mut rows = Vec::new();
                flatten(&out.report, String::new(), &mut rows);
                let mut s = String::from("path\tvalue\n");
                for (p, v) in rows {
                    s.push_str(&format!("{p}\t{v}\n"));
                }
                s
            }
        },
        Format::Text => {
            let body = match &out.text {
                Some(t) => t.clone(),
                None => {
                    let mut rows = Vec::new();
                    flatten(&out.report, String::new(), &mut rows);
                    rows.into_iter().map(|(p, v)| format!("{p} = {v}\n")).collect()
                }
            };
            format!("{command} {source}: {status}\n{body}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        run(std::iter::once("superlie").chain(args.iter().copied()))
    }

    #[test]
    fn jacobi_on_catalog_entry() {
        let (code, out) = call(&["jacobi", "--catalog", "poincare-1-2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn literal_entry_fails_with_status_one() {
        let (code, out) = call(&["jacobi", "--catalog", "wess-zumino-literal"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["report"]["jacobi"]["failures"].as_u64().unwrap() > 0);
    }

    #[test]
    fn unknown_entry_and_bad_flags() {
        assert_eq!(call(&["jacobi", "--catalog", "nope"]).0, 2);
        assert_eq!(call(&["jacobi"]).0, 2);
        assert_eq!(call(&["jacobi", "--catalog", "poincare-1-2", "--input", "x.json"]).0, 2);
        assert_eq!(call(&["nomizu-dim", "--signature", "banana"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn malformed_input_file() {
        let dir = std::env::temp_dir().join(format!("superlie-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join("bad.json");
        std::fs::write(&p, "{\"schema\": 1, \"name\": 3}").unwrap();
        let (code, out) = call(&["jacobi", "--input", p.to_str().unwrap()]);
        assert_eq!(code, 2);
        assert!(out.contains("error"));
    }

    #[test]
    fn export_then_import() {
        let (code, text) = call(&["catalog", "export", "poincare-1-2"]);
        assert_eq!(code, 0);
        let dir = std::env::temp_dir().join(format!("superlie-cli-rt-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join("p.json");
        std::fs::write(&p, text).unwrap();
        let (code, _) = call(&["jacobi", "--input", p.to_str().unwrap()]);
        assert_eq!(code, 0);
    }

    #[test]
    fn nomizu_dim_formats() {
        let (code, out) = call(&["nomizu-dim", "--signature", "3,1", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.ends_with("\n24\n"), "{out}");
        let (_, tsv) = call(&["nomizu-dim", "--catalog", "poincare-3-1", "--format", "tsv"]);
        assert_eq!(tsv, "dim\t24\n");
    }

    #[test]
    fn text_output_is_deterministic() {
        let a = call(&["torsion", "--catalog", "poincare-1-2", "--connection", "torsion-free", "--format", "text"]);
        let b = call(&["torsion", "--catalog", "poincare-1-2", "--connection", "torsion-free", "--format", "text"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
}
