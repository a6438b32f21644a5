use num_traits::Zero;
use serde::Serialize;

use super::{hopf_translation, HopfReport, PolySuperField, SplitDomain, SuperPoly};
use crate::exactla::{Parity, Q};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FieldRow {
    pub element: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SvfReport {
    pub schema: u32,
    pub dim_h0: usize,
    pub dim_v: usize,
    pub dim_s: usize,
    pub fields: Vec<FieldRow>,
    /// `[φ(a), φ(b)] = φ([a, b])` over all basis pairs.
    pub homomorphism: bool,
    /// `[φ̂(a), φ̂(b)] = -φ̂([a, b])` over pairs in `V ⊕ S` and in `h0`.
    pub anti_homomorphism: bool,
    /// `[φ(a), φ̂(b)] = 0` for `a, b` in `V ⊕ S` and for `a, b` in `h0`.
    pub supercommute: bool,
    /// Fields on `V ⊕ S` agree with the derivations read off `m*`.
    pub coproduct_fields: bool,
    pub hopf: HopfReport,
    pub checks: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

fn combine(d: &SplitDomain, fields: &[PolySuperField], v: &[Q], parity: Parity) -> PolySuperField {
    let mut out = d.zero_field(parity);
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            out = out.lin_comb(&Q::from_integer(1.into()), &fields[i], c);
        }
    }
    out
}

pub fn verify_fundamental_fields(d: &SplitDomain) -> SvfReport {
    let g = d.algebra();
    let n = g.dim();
    let left = d.basis_fields(true);
    let right = d.basis_fields(false);
    let trans: Vec<usize> = d.v().iter().chain(d.s()).copied().collect();
    let mut failures = Vec::new();
    let mut checks = 0;
    let (mut hom, mut anti, mut comm, mut cop) = (true, true, true, true);
    let pair = |i: usize, j: usize| format!("({}, {})", g.label(i), g.label(j));
    for i in 0..n {
        for j in i..n {
            let p = g.parity(i) + g.parity(j);
            let br = g.bracket(&g.basis_vector(i), &g.basis_vector(j)).expect("basis vectors");
            checks += 1;
            if d.field_bracket(&left[i], &left[j]) != combine(d, &left, &br, p) {
                hom = false;
                failures.push(format!("left homomorphism on {}", pair(i, j)));
            }
            let both_trans = trans.contains(&i) && trans.contains(&j);
            let both_h0 = d.h0().contains(&i) && d.h0().contains(&j);
            if both_trans || both_h0 {
                checks += 1;
                let neg: Vec<Q> = br.iter().map(|c| -c.clone()).collect();
                if d.field_bracket(&right[i], &right[j]) != combine(d, &right, &neg, p) {
                    anti = false;
                    failures.push(format!("right anti-homomorphism on {}", pair(i, j)));
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let both_trans = trans.contains(&i) && trans.contains(&j);
            let both_h0 = d.h0().contains(&i) && d.h0().contains(&j);
            if !(both_trans || both_h0) {
                continue;
            }
            checks += 1;
            if !d.field_bracket(&left[i], &right[j]).is_zero() {
                comm = false;
                failures.push(format!("left/right supercommutation on {}", pair(i, j)));
            }
        }
    }
    let hopf = hopf_translation(d);
    let gens: Vec<SuperPoly> = (0..d.dim_v())
        .map(|k| SuperPoly::even_var(d.dim_v(), d.dim_s(), k))
        .chain((0..d.dim_s()).map(|a| SuperPoly::odd_var(d.dim_v(), d.dim_s(), a)))
        .collect();
    for (pos, &i) in trans.iter().enumerate() {
        let (odd, idx) = if pos < d.dim_v() { (false, pos) } else { (true, pos - d.dim_v()) };
        for z in &gens {
            for (fields, is_left) in [(&left, true), (&right, false)] {
                checks += 1;
                if fields[i].apply(z) != hopf.derivation(z, odd, idx, is_left) {
                    cop = false;
                    let side = if is_left { "left" } else { "right" };
                    failures.push(format!("{side} field of {} against coproduct", g.label(i)));
                }
            }
        }
    }
    let hopf_report = hopf.verify();
    checks += hopf_report.checks;
    failures.extend(hopf_report.failures.iter().cloned());
    let fields = (0..n)
        .map(|i| FieldRow {
            element: g.label(i).to_string(),
            left: left[i].format(d),
            right: right[i].format(d),
        })
        .collect();
    let pass = failures.is_empty();
    SvfReport {
        schema: 1,
        dim_h0: d.dim_h0(),
        dim_v: d.dim_v(),
        dim_s: d.dim_s(),
        fields,
        homomorphism: hom,
        anti_homomorphism: anti,
        supercommute: comm,
        coproduct_fields: cop,
        hopf: hopf_report,
        checks,
        failures,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    #[test]
    fn poincare_fields_verify() {
        let e = build("poincare-1-2").unwrap();
        let d = SplitDomain::new(&e.decomposition).unwrap();
        let r = verify_fundamental_fields(&d);
        assert!(r.pass, "{:?}", r.failures);
    }

    #[test]
    fn odd_left_field_at_origin() {
        let e = build("poincare-1-2").unwrap();
        let d = SplitDomain::new(&e.decomposition).unwrap();
        let s0 = d.s()[0];
        let f = d.left_field(&d.algebra().basis_vector(s0)).unwrap();
        let v = d.evaluate_field(&f, &vec![Q::zero(); d.dim_v()]).unwrap();
        assert_eq!(v.odd[0], "-1");
        assert!(v.even.iter().all(|x| x == "0"));
    }

    #[test]
    fn right_fields_are_not_a_homomorphism() {
        let e = build("poincare-1-2").unwrap();
        let d = SplitDomain::new(&e.decomposition).unwrap();
        let g = d.algebra();
        let right = d.basis_fields(false);
        let s0 = d.s()[0];
        let br = g.bracket(&g.basis_vector(s0), &g.basis_vector(s0)).unwrap();
        assert!(br.iter().any(|c| !c.is_zero()));
        let lhs = d.field_bracket(&right[s0], &right[s0]);
        assert!(!lhs.is_zero());
        assert_ne!(lhs, combine(&d, &right, &br, Parity::Even));
    }
}
