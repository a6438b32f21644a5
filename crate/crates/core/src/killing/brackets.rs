use num_traits::{One, Zero};
use serde::Serialize;

use super::{AdaptedSupersymmetryAlgebra, KillingError};
use crate::exactla::{Matrix, Parity, Q};
use crate::liesuper::algebra::sparse;
use crate::liesuper::{JacobiReport, LieSuperalgebra};

/// Value at the origin of the Kosmann derivative of the Killing spinor `ψ^s`
/// along the Killing vector of `x`: `-Δ(lift x)s` for `x ∈ h` and `-C(x,s)`
/// for `x ∈ m0`. `x` is a global even vector, `s` is in `m1` coordinates.
pub fn kosmann_bracket(a: &AdaptedSupersymmetryAlgebra, x: &[Q], s: &[Q]) -> Result<Vec<Q>, KillingError> {
    let g = a.algebra();
    if x.len() != g.dim() || s.len() != a.m1().len() {
        return Err(KillingError::Parity);
    }
    if x.iter().enumerate().any(|(i, c)| !c.is_zero() && g.parity(i) == Parity::Odd) {
        return Err(KillingError::Parity);
    }
    let n1 = a.m1().len();
    let mut op = Matrix::zeros(n1, n1);
    for (hb, &i) in a.h().iter().enumerate() {
        if !x[i].is_zero() {
            op = op.lin_comb(&Q::one(), &a.delta(&a.lift()[hb]), &x[i]);
        }
    }
    for (k, &i) in a.m0().iter().enumerate() {
        if !x[i].is_zero() {
            op = op.lin_comb(&Q::one(), &a.c_matrix(k), &x[i]);
        }
    }
    Ok(op.apply(s).into_iter().map(|v| -v).collect())
}

/// `-Γ(s,t)`, the Dirac current at the origin, in `m0` coordinates.
pub fn dirac_bracket(a: &AdaptedSupersymmetryAlgebra, s: &[Q], t: &[Q]) -> Vec<Q> {
    a.gamma_form().eval(s, t).into_iter().map(|v| -v).collect()
}

/// `-[s,t]` including the isotropy part, as a global vector.
pub fn dirac_bracket_full(a: &AdaptedSupersymmetryAlgebra, s: &[Q], t: &[Q]) -> Vec<Q> {
    let g = a.algebra();
    let mut out = vec![Q::zero(); g.dim()];
    for (k, v) in dirac_bracket(a, s, t).into_iter().enumerate() {
        out[a.m0()[k]] = v;
    }
    for (k, v) in a.odd_h_form().eval(s, t).into_iter().enumerate() {
        out[a.h()[k]] = -v;
    }
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct KillingReport {
    pub pass: bool,
    pub kosmann_matches: bool,
    pub dirac_matches: bool,
    /// Super-Jacobi for the transported table.
    pub transported_jacobi: JacobiReport,
    /// Super-Jacobi for the original table, checked independently.
    pub original_jacobi: bool,
    pub mismatches: Vec<String>,
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

/// Rebuilds the bracket table from Killing vectors and spinors: even-even
/// brackets are those of Killing vector fields, even-odd come from the
/// Kosmann derivative and odd-odd from the Dirac current. The result must be
/// the negative of the original table and satisfy super-Jacobi.
pub fn killing_superalgebra_check(a: &AdaptedSupersymmetryAlgebra) -> KillingReport {
    let g = a.algebra();
    let n = g.dim();
    let n1 = a.m1().len();
    let mut table = Vec::new();
    let mut mismatches = Vec::new();
    let mut kosmann_matches = true;
    let mut dirac_matches = true;
    let m1_pos = |i: usize| a.m1().iter().position(|&x| x == i);
    for i in 0..n {
        for j in i..n {
            let orig = g.bracket_basis(i, j);
            let neg: Vec<(usize, Q)> = orig.iter().map(|(k, v)| (*k, -v.clone())).collect();
            let got = match (g.parity(i), g.parity(j)) {
                (Parity::Even, Parity::Even) => neg.clone(),
                (Parity::Even, Parity::Odd) | (Parity::Odd, Parity::Even) => {
                    let (x, s) = if g.parity(i) == Parity::Even { (i, j) } else { (j, i) };
                    let Some(sp) = m1_pos(s) else {
                        mismatches.push(format!("{} is odd but not in m1", g.label(s)));
                        continue;
                    };
                    let v = kosmann_bracket(a, &unit(n, x), &unit(n1, sp)).expect("even basis vector");
                    let mut out = vec![Q::zero(); n];
                    for (k, c) in v.into_iter().enumerate() {
                        out[a.m1()[k]] = c;
                    }
                    // [s, x] = -[x, s] for odd s and even x
                    let out = if x == i { out } else { out.into_iter().map(|c| -c).collect() };
                    let sv = sparse(&out);
                    if sv != neg {
                        kosmann_matches = false;
                        mismatches.push(format!("kosmann [{}, {}]", g.label(i), g.label(j)));
                    }
                    sv
                }
                (Parity::Odd, Parity::Odd) => {
                    let (Some(si), Some(sj)) = (m1_pos(i), m1_pos(j)) else {
                        continue;
                    };
                    let sv = sparse(&dirac_bracket_full(a, &unit(n1, si), &unit(n1, sj)));
                    if sv != neg {
                        dirac_matches = false;
                        mismatches.push(format!("dirac [{}, {}]", g.label(i), g.label(j)));
                    }
                    sv
                }
            };
            if !got.is_empty() {
                table.push((i, j, got));
            }
        }
    }
    mismatches.truncate(32);
    let transported_jacobi = match LieSuperalgebra::new(g.space().clone(), table) {
        Ok(t) => t.check_super_jacobi(),
        Err(_) => {
            mismatches.push("transported table is not a valid bracket table".into());
            crate::liesuper::examples::abelian(0, 0).check_super_jacobi()
        }
    };
    let original_jacobi = g.check_super_jacobi().pass;
    KillingReport {
        pass: kosmann_matches && dirac_matches && transported_jacobi.pass && original_jacobi,
        kosmann_matches,
        dirac_matches,
        transported_jacobi,
        original_jacobi,
        mismatches,
    }
}

/// `R(A,B)|m1 = [C_A, C_B] - C_{[A,B]_m0} - Δ(lift([A,B]_h))` for `A, B ∈ m0`,
/// as `(A, B, operator)` over ordered pairs `A < B`.
pub fn spinor_connection_curvature(a: &AdaptedSupersymmetryAlgebra) -> Result<Vec<(String, String, Matrix)>, KillingError> {
    let g = a.algebra();
    let d = a.decomposition();
    let k0 = a.m0().len();
    let cs: Vec<Matrix> = (0..k0).map(|k| a.c_matrix(k)).collect();
    let mut out = Vec::new();
    for x in 0..k0 {
        for y in x + 1..k0 {
            let br = g.bracket_basis(a.m0()[x], a.m0()[y]);
            let mut r = cs[x].commutator(&cs[y]);
            for (k, v) in br {
                match d.locate(*k) {
                    (true, hb) => r = r.lin_comb(&Q::one(), &a.delta(&a.lift()[hb]), &-v.clone()),
                    (false, _) => match a.m0().iter().position(|i| i == k) {
                        Some(p) => r = r.lin_comb(&Q::one(), &cs[p], &-v.clone()),
                        None => return Err(KillingError::Parity),
                    },
                }
            }
            if br.iter().any(|(k, _)| !d.locate(*k).0) {
                return Err(KillingError::NotSymmetric);
            }
            out.push((g.label(a.m0()[x]).to_string(), g.label(a.m0()[y]).to_string(), r));
        }
    }
    Ok(out)
}

/// Nonzero entries of a curvature table as strings, for reports.
pub fn curvature_entries(t: &[(String, String, Matrix)]) -> Vec<(String, String, usize)> {
    t.iter().filter(|e| !e.2.is_zero()).map(|e| (e.0.clone(), e.1.clone(), e.2.nnz())).collect()
}
