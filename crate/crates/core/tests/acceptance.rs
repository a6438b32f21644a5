//! One line per acceptance criterion; exits nonzero when any criterion fails.

mod common;

use std::time::Instant;

use common::*;
use proptest::prelude::*;
use superlie::catalog::{self, build, planewave_spot_checks, CatalogEntry, CATALOG};
use superlie::clifford::Signature;
use superlie::connection::{
    canonical_nomizu, default_signatures, infinitesimal_holonomy, invariant_metric, is_flat, is_torsion_free, levi_civita_nomizu,
    natural_torsion_free, poincare_connection_table, preserves_metric, table_row, REFERENCE_D,
};
use superlie::exactla::q;
use superlie::killing::{killing_superalgebra_check, spinor_connection_curvature};
use superlie::liesuper::examples::osp1;
use superlie::pbw::{bernoulli, verify_koszul_identities, verify_phi, worked_example, Enveloping};
use superlie::svf::{verify_fundamental_fields, SplitDomain};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn entries() -> Vec<CatalogEntry> {
    CATALOG.iter().map(|n| build(n).unwrap_or_else(|e| panic!("{n}: {e}"))).collect()
}

fn dimension_table() -> Outcome {
    let sigs = default_signatures();
    ensure(sigs.iter().all(|s| s.dim() >= 3), "representative below dimension 3")?;
    let rows = poincare_connection_table(&sigs, 4).map_err(|e| e.to_string())?;
    let got: Vec<usize> = rows.iter().map(|r| r.d).collect();
    ensure(rows.iter().map(|r| r.class).eq(1..=8), "one row per class")?;
    ensure(got == REFERENCE_D, format!("D = {got:?}"))?;
    Ok(format!("D = {got:?}"))
}

fn signature_independence() -> Outcome {
    let pairs = [((4, 0), (0, 4)), ((1, 4), (5, 0)), ((4, 1), (0, 5))];
    let mut seen = Vec::new();
    for (a, b) in pairs {
        let (ra, rb) = (table_row(Signature::new(a.0, a.1)), table_row(Signature::new(b.0, b.1)));
        let (ra, rb) = (ra.map_err(|e| e.to_string())?, rb.map_err(|e| e.to_string())?);
        ensure(ra.class == rb.class, "pair in different classes")?;
        ensure(ra.d == rb.d && ra.matches(), format!("class {}: {:?} gives {}, {:?} gives {}", ra.class, a, ra.d, b, rb.d))?;
        seen.push(format!("class {}: {}", ra.class, ra.d));
    }
    Ok(seen.join(", "))
}

fn worked_identity() -> Outcome {
    let g = osp1(1).map_err(|e| e.to_string())?;
    let odd = g.odd_indices();
    let (x, y) = (odd[0], odd[1]);
    let want = ["-1/6", "1/6", "1/2", "-1/2"];
    for (a, a1, a2) in [(x, x, y), (y, x, y), (x, y, x), (y, y, x)] {
        let w = worked_example(&g, a, a1, a2).map_err(|e| e.to_string())?;
        ensure(w.pass, format!("{} g({} {}) expansion differs", w.a, w.a1, w.a2))?;
        ensure(w.coefficients == want, format!("coefficients {:?}", w.coefficients))?;
    }
    Ok("coefficients -1/6, 1/6, 1/2, -1/2 on osp(1|2)".into())
}

fn koszul() -> Outcome {
    let p = build("poincare-1-2").map_err(|e| e.to_string())?;
    let full = p.algebra().odd_indices().len();
    let r = verify_koszul_identities(p.algebra(), full).map_err(|e| e.to_string())?;
    ensure(r.pass && r.max_degree == full, format!("poincare: {} of {} fail", r.failures, r.checks))?;
    ensure(bernoulli(4) == q(-1, 30), "b4")?;
    let g = osp1(2).map_err(|e| e.to_string())?;
    ensure(g.odd_indices().len() == 4, "synthetic algebra has four odd generators")?;
    let s = verify_koszul_identities(&g, 4).map_err(|e| e.to_string())?;
    ensure(s.pass, format!("osp(1|4): {} of {} fail", s.failures, s.checks))?;
    ensure(s.field_degrees.contains(&4), "degree 4 terms never reached")?;
    Ok(format!("{} checks on poincare-1-2, {} on osp(1|4) up to degree 4", r.checks, s.checks))
}

fn phi() -> Outcome {
    let p = build("poincare-1-2").map_err(|e| e.to_string())?;
    let full = p.algebra().odd_indices().len();
    let reports = verify_phi(p.algebra(), full).map_err(|e| e.to_string())?;
    for c in [0, 1, -1] {
        ensure(reports.iter().any(|r| r.c == c), format!("c = {c} not covered"))?;
    }
    let bad: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| format!("c={} x={}", r.c, r.x)).collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!("{} operator checks", reports.iter().map(|r| r.checks).sum::<usize>()))
}

fn catalog_soundness() -> Outcome {
    let mut notes = Vec::new();
    for e in entries() {
        let r = e.algebra().check_super_jacobi();
        ensure(r.pass, format!("{}: {} Jacobi failures", e.name, r.failures))?;
        ensure(e.decomposition.check_reductive().reductive, format!("{} not reductive", e.name))?;
        if let Some(inv) = e.flux_invariant() {
            ensure(inv, format!("{}: flux not invariant", e.name))?;
            notes.push(format!("{} flux invariant", e.name));
        }
    }
    for name in ["cahen-wallach-literal", "freund-rubin-ads4xs7-literal", "freund-rubin-ads7xs4-literal", "wess-zumino-literal"] {
        let e = build(name).map_err(|e| e.to_string())?;
        let r = e.algebra().check_super_jacobi();
        if !r.pass {
            ensure(r.first.is_some() && !r.sample.is_empty() && !r.by_parity.is_empty(), format!("{name}: failures not localized"))?;
            notes.push(format!("{name} localized ({} triples, {:?})", r.failures, r.by_parity));
        }
    }
    let w = catalog::wess_zumino_calibration().map_err(|e| e.to_string())?;
    ensure(w.solutions == 1 && !w.literal_is_solution, "wess-zumino calibration")?;
    Ok(notes.join("; "))
}

fn connections() -> Outcome {
    let mut lc = 0;
    for e in entries() {
        let d = &e.decomposition;
        let err = |x: superlie::connection::ConnectionError| format!("{}: {x}", e.name);
        let can = canonical_nomizu(d).map_err(err)?;
        let nat = natural_torsion_free(d).map_err(err)?;
        if e.name.starts_with("poincare") {
            ensure(is_flat(&can).flat, format!("{}: canonical not flat", e.name))?;
            ensure(infinitesimal_holonomy(&can).dim == 0, format!("{}: holonomy not empty", e.name))?;
        }
        ensure(is_torsion_free(&nat), format!("{}: natural connection has torsion", e.name))?;
        for n in [&can, &nat] {
            let f = is_flat(n);
            ensure(f.agree, format!("{}: flatness criteria disagree at {:?} {:?}", e.name, f.witness, f.morphism_witness))?;
        }
        if let Some(g) = invariant_metric(d).map_err(err)? {
            let l = levi_civita_nomizu(d, &g).map_err(err)?;
            ensure(is_torsion_free(&l) && preserves_metric(&l, &g), format!("{}: Levi-Civita fails", e.name))?;
            ensure(is_flat(&l).agree, format!("{}: flatness criteria disagree", e.name))?;
            lc += 1;
        }
    }
    Ok(format!("{} entries, Levi-Civita on {lc}", CATALOG.len()))
}

fn flat_spinor_connection() -> Outcome {
    let mut n = 0;
    for e in entries() {
        let Some(a) = &e.adapted else { continue };
        let curv = spinor_connection_curvature(a).map_err(|x| format!("{}: {x}", e.name))?;
        let bad: Vec<String> = curv.iter().filter(|c| !c.2.is_zero()).map(|c| format!("R({},{})", c.0, c.1)).collect();
        ensure(bad.is_empty(), format!("{}: {}", e.name, bad.join(" ")))?;
        n += 1;
    }
    Ok(format!("{n} adapted entries"))
}

fn killing() -> Outcome {
    let mut fails = Vec::new();
    for e in entries() {
        let Some(a) = &e.adapted else { continue };
        let r = killing_superalgebra_check(a);
        if !r.pass {
            fails.push(format!("{}: {:?}", e.name, r.mismatches));
        }
    }
    let cw = build("cahen-wallach").map_err(|e| e.to_string())?;
    let spot = planewave_spot_checks(&cw).map_err(|e| e.to_string())?;
    if !spot.q_plus_match {
        fails.push(format!("[q,Q+] coefficient {:?} (expected {})", spot.q_plus, spot.q_plus_expected));
    }
    if !spot.minus_minus_match {
        fails.push(format!("[Q-,Q-] mismatch {:?}", spot.minus_minus_mismatch));
    }
    ensure(fails.is_empty(), fails.join("; "))?;
    Ok("bracket tables regenerated, spot checks match".into())
}

fn svf() -> Outcome {
    let p = build("poincare-1-2").map_err(|e| e.to_string())?;
    let d = SplitDomain::new(&p.decomposition).map_err(|e| e.to_string())?;
    let r = verify_fundamental_fields(&d);
    ensure(r.homomorphism && r.anti_homomorphism && r.supercommute && r.coproduct_fields, format!("{:?}", r.failures))?;
    ensure(r.hopf.pass, format!("hopf: {:?}", r.hopf.failures))?;
    ensure(r.pass, format!("{:?}", r.failures))?;
    Ok(format!("{} checks", r.checks + r.hopf.checks))
}

fn properties() -> Outcome {
    let osp = Enveloping::new(osp1(2).map_err(|e| e.to_string())?);
    sample(100, (words(14, 6), prop::collection::vec(any::<usize>(), 1..8)), |(w, p)| check_confluence(&osp, &w, &p))
        .map_err(|e| format!("confluence: {e}"))?;
    let d = build("poincare-1-2").map_err(|e| e.to_string())?.decomposition;
    sample(8, unipotent_entries(d.algebra().dim()), |(l, u)| check_holonomy_invariance(&d, &l, &u)).map_err(|e| format!("holonomy: {e}"))?;
    let (spin, vector) = spin_generators(Signature::new(2, 2));
    sample(8, unipotent_entries(spin.len()), |(l, u)| {
        check_recombination(&spin, &spin, &l, &u)?;
        check_recombination(&vector, &vector, &l, &u)
    })
    .map_err(|e| format!("recombination: {e}"))?;
    sample(50, (words(10, 3), prop::collection::vec(any::<bool>(), 4), uea_terms(14, 4)), |(e, o, t)| {
        check_gamma_round_trip(&osp, &e, &o, &t)
    })
    .map_err(|e| format!("gamma: {e}"))?;
    sample(8, unipotent_entries(d.algebra().dim()), |(l, u)| check_json_round_trip(&rebased(&d, &l, &u))).map_err(|e| format!("json: {e}"))?;
    for e in entries() {
        let back = catalog::import_str(&catalog::export_string(&e)).map_err(|x| format!("{}: {x}", e.name))?;
        ensure(back == e, format!("{}: export/import differs", e.name))?;
    }
    Ok("confluence, holonomy basis change, recombination, gamma and JSON round trips".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("dimension table", dimension_table),
        ("signature independence", signature_independence),
        ("worked PBW identity", worked_identity),
        ("Koszul coderivation identities", koszul),
        ("Phi_c correspondence", phi),
        ("catalog soundness", catalog_soundness),
        ("connection suite", connections),
        ("flat spinor connection", flat_spinor_connection),
        ("Killing superalgebra", killing),
        ("super vector fields", svf),
        ("property suites", properties),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = format!("criterion {:>2}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|x| *x == (i + 1).to_string()) {
            continue;
        }
        let t = Instant::now();
        let r = f();
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("{id} PASS {name} ({secs:.1}s): {detail}"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL {name} ({secs:.1}s): {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
