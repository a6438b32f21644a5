use num_traits::Zero;

use super::{CatalogEntry, CatalogError};
use crate::clifford::forms::invariant_forms_for;
use crate::clifford::{CliffordRep, FormTarget, Signature, SpinLieAlgebra};
use crate::exactla::{GradedSpace, Matrix, Parity, Q};
use crate::killing::AdaptedSupersymmetryAlgebra;
use crate::liesuper::{LieSuperalgebra, ReductiveDecomposition, SuperBilinearForm, Symmetry};

/// Symmetric equivariant `S ⊗ S -> R^{r,s}` forms for a signature.
pub fn poincare_gammas(rep: &CliffordRep) -> Vec<SuperBilinearForm> {
    let sp = SpinLieAlgebra::new(rep.clone());
    invariant_forms_for(&sp, FormTarget::Vector, &[Symmetry::Symmetric])
}

/// `so(r,s) ⋉ (R^{r,s} + S)` with `[A,s] = Δ(A)s`, `[R^{r,s}, S] = 0`,
/// `[R^{r,s}, R^{r,s}] = 0` and `[s,t] = Γ(s,t)`. Basis `M{i}_{j}`, `e{k}`,
/// `s{α}`. A `None` form gives the odd-commutative extension.
pub fn poincare_algebra(rep: &CliffordRep, gamma: Option<&SuperBilinearForm>) -> LieSuperalgebra {
    let sp = SpinLieAlgebra::new(rep.clone());
    let so = sp.so_algebra();
    let n = rep.signature().dim();
    let nn = rep.spin_dim();
    let nm = so.dim();
    let mut basis: Vec<(String, Parity)> = so.space().basis().to_vec();
    basis.extend((0..n).map(|k| (format!("e{k}"), Parity::Even)));
    basis.extend((0..nn).map(|a| (format!("s{a}"), Parity::Odd)));
    let space = GradedSpace::new(basis).expect("distinct labels");
    let mut br: Vec<(usize, usize, Vec<(usize, Q)>)> = so.upper_table().iter().map(|(&(i, j), v)| (i, j, v.clone())).collect();
    for a in 0..nm {
        let w = &sp.vector_action()[a];
        for k in 0..n {
            let col: Vec<(usize, Q)> = (0..n).map(|l| (nm + l, w.get(l, k))).filter(|e| !e.1.is_zero()).collect();
            br.push((a, nm + k, col));
        }
        let s = &sp.generators()[a];
        for b in 0..nn {
            let col: Vec<(usize, Q)> = (0..nn).map(|l| (nm + n + l, s.get(l, b))).filter(|e| !e.1.is_zero()).collect();
            br.push((a, nm + n + b, col));
        }
    }
    if let Some(g) = gamma {
        for a in 0..nn {
            for b in a..nn {
                let col: Vec<(usize, Q)> = (0..n).map(|k| (nm + k, g.component(k).get(a, b))).filter(|e| !e.1.is_zero()).collect();
                br.push((nm + n + a, nm + n + b, col));
            }
        }
    }
    LieSuperalgebra::new(space, br).expect("Poincaré brackets are consistent")
}

/// Splits the Poincaré algebra as `so(r,s) + (R^{r,s} + S)`.
pub fn poincare_decomposition(g: LieSuperalgebra, sig: Signature) -> ReductiveDecomposition {
    let nm = sig.dim() * (sig.dim().saturating_sub(1)) / 2;
    let h: Vec<usize> = (0..nm).collect();
    let m: Vec<usize> = (nm..g.dim()).collect();
    ReductiveDecomposition::new(g, h, m).expect("complementary index sets")
}

/// The superspacetime used for connection counts: the Poincaré algebra with
/// the first symmetric form when one exists, else with `Γ = 0`. The Nomizu
/// space only sees the isotropy action on `m`, so it does not depend on `Γ`.
pub fn poincare_superspacetime(sig: Signature) -> Result<(ReductiveDecomposition, bool), CatalogError> {
    let rep = CliffordRep::build(sig)?;
    let gammas = poincare_gammas(&rep);
    let g = poincare_algebra(&rep, gammas.first());
    Ok((poincare_decomposition(g, sig), !gammas.is_empty()))
}

/// Poincaré superalgebra for a signature and a choice among the symmetric
/// equivariant vector-valued forms.
pub fn build_poincare(sig: Signature, gamma_choice: usize) -> Result<CatalogEntry, CatalogError> {
    let rep = CliffordRep::build(sig)?;
    let gammas = poincare_gammas(&rep);
    if gammas.is_empty() {
        return Err(CatalogError::NoGamma(sig));
    }
    let gamma = gammas.get(gamma_choice).ok_or(CatalogError::GammaChoice(gamma_choice, gammas.len()))?;
    let g = poincare_algebra(&rep, Some(gamma));
    let d = poincare_decomposition(g, sig);
    let n = sig.dim();
    let nm = n * (n.saturating_sub(1)) / 2;
    let m0: Vec<usize> = (nm..nm + n).collect();
    let m1: Vec<usize> = (nm + n..d.algebra().dim()).collect();
    let adapted = AdaptedSupersymmetryAlgebra::new(d.clone(), m0, m1, rep, Matrix::identity(n), 1)?;
    Ok(CatalogEntry {
        name: format!("poincare-{}-{}", sig.r, sig.s),
        decomposition: d,
        adapted: Some(adapted),
        flux: None,
        notes: format!(
            "Poincaré superalgebra in signature {sig}; Γ is basis element {gamma_choice} of {} symmetric equivariant vector-valued spinor forms",
            gammas.len()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poincare_1_2_is_a_superalgebra() {
        let e = build_poincare(Signature::new(1, 2), 0).unwrap();
        let g = e.algebra();
        assert_eq!(g.space().dim(), (6, 2));
        assert!(g.check_super_jacobi().pass);
        let a = e.adapted.as_ref().unwrap();
        let r = a.check_adapted();
        assert!(r.pass, "{:?}", r);
    }

    #[test]
    fn translations_commute() {
        let e = build_poincare(Signature::new(3, 1), 0).unwrap();
        let g = e.algebra();
        for i in 0..4 {
            for j in 0..4 {
                let (a, b) = (g.index(&format!("e{i}")).unwrap(), g.index(&format!("e{j}")).unwrap());
                assert!(g.bracket_basis(a, b).is_empty());
            }
        }
    }

    #[test]
    fn missing_gamma_is_an_error() {
        assert!(matches!(build_poincare(Signature::new(2, 3), 0), Err(CatalogError::NoGamma(_))));
        assert!(matches!(build_poincare(Signature::new(1, 2), 5), Err(CatalogError::GammaChoice(5, 1))));
    }
}
