use super::{CliffordError, CliffordRep, SpinLieAlgebra};
use crate::exactla::solve::solve_homogeneous;
use crate::exactla::{intertwiners, qi, GradedMap, GradedSpace, Matrix, Q};
use crate::liesuper::{scalar_target, SuperBilinearForm, Symmetry};
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormTarget {
    Scalar,
    Vector,
    /// `Λ^k R^{r,s}`.
    Lambda(usize),
}

pub fn spinor_space(n: usize) -> GradedSpace {
    GradedSpace::even("s", n)
}

pub fn vector_space(n: usize) -> GradedSpace {
    GradedSpace::even("e", n)
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn lambda_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn lambda_space(n: usize, k: usize) -> GradedSpace {
    GradedSpace::new(
        lambda_basis(n, k)
            .iter()
            .map(|b| {
                let l: Vec<String> = b.iter().map(|i| i.to_string()).collect();
                (format!("e{}", l.join("^")), crate::exactla::Parity::Even)
            })
            .collect(),
    )
    .expect("distinct subsets")
}

/// Sort a multi-index, returning the permutation sign, or `None` on repeats.
pub fn sort_signed(idx: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((sign, v))
    }
}

/// Derivation action of an endomorphism of `R^n` on `Λ^k R^n`.
pub fn lambda_action(m: &Matrix, k: usize) -> Matrix {
    let n = m.nrows();
    let basis = lambda_basis(n, k);
    let pos: std::collections::HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let mt = m.transpose();
    let mut e = Vec::new();
    for (col, b) in basis.iter().enumerate() {
        for slot in 0..k {
            for (r, c) in mt.row(b[slot]) {
                let mut nb = b.clone();
                nb[slot] = *r;
                if let Some((s, sorted)) = sort_signed(&nb) {
                    e.push((pos[&sorted], col, c * qi(s)));
                }
            }
        }
    }
    Matrix::from_entries(basis.len(), basis.len(), e)
}

/// Basis of the `spin`-equivariant endomorphisms of `S`.
pub fn schur_algebra(rep: &CliffordRep) -> Vec<Matrix> {
    let sp = SpinLieAlgebra::new(rep.clone());
    let gens: Vec<&Matrix> = sp.chain_generators().iter().map(|&i| &sp.generators()[i]).collect();
    let n = rep.spin_dim();
    intertwiners(n, n, &gens, &gens, &|_, _| true)
}

fn target_action(sp: &SpinLieAlgebra, t: FormTarget, a: usize) -> Matrix {
    match t {
        FormTarget::Scalar => Matrix::zeros(1, 1),
        FormTarget::Vector => sp.vector_action()[a].clone(),
        FormTarget::Lambda(k) => lambda_action(&sp.vector_action()[a], k),
    }
}

fn target_space(sig_dim: usize, t: FormTarget) -> GradedSpace {
    match t {
        FormTarget::Scalar => scalar_target(),
        FormTarget::Vector => vector_space(sig_dim),
        FormTarget::Lambda(k) => lambda_space(sig_dim, k),
    }
}

/// Equivariant bilinear maps `S ⊗ S -> target` having every requested
/// symmetry (`Symmetry::None` imposes nothing).
pub fn invariant_bilinear_forms(rep: &CliffordRep, target: FormTarget, symmetry: &[Symmetry]) -> Vec<SuperBilinearForm> {
    let sp = SpinLieAlgebra::new(rep.clone());
    invariant_forms_for(&sp, target, symmetry)
}

pub fn invariant_forms_for(sp: &SpinLieAlgebra, target: FormTarget, symmetry: &[Symmetry]) -> Vec<SuperBilinearForm> {
    let n = sp.rep().spin_dim();
    let d = sp.rep().signature().dim();
    let tsp = target_space(d, target);
    let t = tsp.len();
    let chain = sp.chain_generators();
    let dom: Vec<Matrix> = chain.iter().map(|&a| sp.generators()[a].clone()).collect();
    let cod: Vec<Matrix> = chain
        .iter()
        .map(|&a| {
            let st = sp.generators()[a].transpose().neg();
            st.kron(&Matrix::identity(t)).add(&Matrix::identity(n).kron(&target_action(sp, target, a)))
        })
        .collect();
    let dr: Vec<&Matrix> = dom.iter().collect();
    let cr: Vec<&Matrix> = cod.iter().collect();
    let maps = intertwiners(n, n * t, &dr, &cr, &|_, _| true);
    let unpack = |phi: &Matrix| -> Vec<Matrix> {
        let mut comps = vec![Vec::new(); t];
        for (row, j, v) in phi.entries() {
            comps[row % t].push((row / t, j, v.clone()));
        }
        comps.into_iter().map(|e| Matrix::from_entries(n, n, e)).collect()
    };
    let raw: Vec<Vec<Matrix>> = maps.iter().map(unpack).collect();
    // impose the symmetries on the coefficient vector
    let mut rows = Vec::new();
    for s in symmetry {
        let sgn = match s {
            Symmetry::Symmetric => qi(1),
            Symmetry::Skew => qi(-1),
            Symmetry::None => continue,
        };
        for k in 0..t {
            for a in 0..n {
                for b in 0..n {
                    let row: Vec<(usize, Q)> = raw
                        .iter()
                        .enumerate()
                        .map(|(l, f)| (l, f[k].get(a, b) - &sgn * f[k].get(b, a)))
                        .filter(|e| !e.1.is_zero())
                        .collect();
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let declared = match symmetry.iter().find(|s| **s != Symmetry::None) {
        Some(s) => *s,
        None => Symmetry::None,
    };
    let ss = spinor_space(n);
    solve_homogeneous(rows, raw.len())
        .into_iter()
        .map(|c| {
            let comps: Vec<Matrix> = (0..t)
                .map(|k| {
                    raw.iter().zip(&c).fold(Matrix::zeros(n, n), |acc, (f, a)| {
                        if a.is_zero() {
                            acc
                        } else {
                            acc.lin_comb(&Q::one(), &f[k], a)
                        }
                    })
                })
                .collect();
            SuperBilinearForm::new(ss.clone(), ss.clone(), tsp.clone(), comps, declared).expect("solver output is consistent")
        })
        .collect()
}

/// Spin actions on `S`, `S` and the target, for equivariance checks.
pub fn form_actions(sp: &SpinLieAlgebra, target: FormTarget) -> (Vec<GradedMap>, Vec<GradedMap>) {
    let n = sp.rep().spin_dim();
    let d = sp.rep().signature().dim();
    let ss = spinor_space(n);
    let ts = target_space(d, target);
    let on_s = sp
        .generators()
        .iter()
        .map(|g| GradedMap::endo(&ss, g.clone(), crate::exactla::Parity::Even).unwrap())
        .collect();
    let on_t = (0..sp.dim())
        .map(|a| GradedMap::endo(&ts, target_action(sp, target, a), crate::exactla::Parity::Even).unwrap())
        .collect();
    (on_s, on_t)
}

/// `⟨Γ^k_β(s,t), e_I⟩ = Σ_π sgn(π) β(γ_{I_π(1)} ··· γ_{I_π(k)} s, t)`, stored
/// as components along the basis `e_I` of `Λ^k` (dividing by `⟨e_I, e_I⟩`).
pub fn gamma_transfer(beta: &SuperBilinearForm, k: usize, rep: &CliffordRep) -> Result<SuperBilinearForm, CliffordError> {
    let d = rep.signature().dim();
    if k > d {
        return Err(CliffordError::Degree(k, d));
    }
    let n = rep.spin_dim();
    let fact: i64 = (1..=k as i64).product();
    let b = beta.component(0);
    let comps: Vec<Matrix> = lambda_basis(d, k)
        .iter()
        .map(|idx| {
            let norm: i64 = idx.iter().map(|&i| rep.eta(i)).product();
            rep.product(idx).transpose().mul(b).scale(&(qi(fact) / qi(norm)))
        })
        .collect();
    let ss = spinor_space(n);
    let mut f = SuperBilinearForm::new(ss.clone(), ss, lambda_space(d, k), comps, Symmetry::None)?;
    for s in [Symmetry::Symmetric, Symmetry::Skew] {
        if f.has_symmetry(s) && !f.is_zero() {
            f = SuperBilinearForm::new(f.left().clone(), f.right().clone(), f.target().clone(), f.coeffs().to_vec(), s)?;
            break;
        }
    }
    let sp = SpinLieAlgebra::new(rep.clone());
    let (on_s, on_t) = form_actions(&sp, FormTarget::Lambda(k));
    if !f.check_equivariance(&on_s, &on_s, &on_t)?.pass {
        return Err(CliffordError::NotEquivariant);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Signature;

    fn rep(r: usize, s: usize) -> CliffordRep {
        CliffordRep::build(Signature::new(r, s)).unwrap()
    }

    #[test]
    fn schur_dimensions() {
        assert_eq!(schur_algebra(&rep(1, 2)).len(), 1);
        assert_eq!(schur_algebra(&rep(0, 2)).len(), 2);
        assert_eq!(schur_algebra(&rep(2, 1)).len(), 4);
    }

    #[test]
    fn scalar_forms_lorentz() {
        assert_eq!(invariant_bilinear_forms(&rep(1, 3), FormTarget::Scalar, &[Symmetry::None]).len(), 2);
        let both = invariant_bilinear_forms(&rep(1, 3), FormTarget::Scalar, &[Symmetry::Symmetric, Symmetry::Skew]);
        assert!(both.is_empty());
    }

    #[test]
    fn vector_forms_are_equivariant() {
        let c = rep(1, 2);
        let fs = invariant_bilinear_forms(&c, FormTarget::Vector, &[Symmetry::Symmetric]);
        assert!(!fs.is_empty());
        let sp = SpinLieAlgebra::new(c);
        let (on_s, on_t) = form_actions(&sp, FormTarget::Vector);
        for f in &fs {
            assert!(f.check_equivariance(&on_s, &on_s, &on_t).unwrap().pass);
        }
        let bad = fs[0].perturbed(0, 0, 0, qi(1));
        assert!(!bad.check_equivariance(&on_s, &on_s, &on_t).unwrap().pass);
    }

    #[test]
    fn lambda_action_matches_vector_for_k1() {
        let m = Matrix::from_ints(&[&[0, 1, 0], &[-1, 0, 2], &[0, 3, 0]]);
        assert_eq!(lambda_action(&m, 1), m);
        assert_eq!(lambda_action(&m, 3), Matrix::zeros(1, 1));
    }
}
