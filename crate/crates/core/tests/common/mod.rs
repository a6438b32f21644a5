//! Property checks shared by the proptest suite and the acceptance run.
#![allow(dead_code)]

use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use superlie::clifford::{CliffordRep, Signature, SpinLieAlgebra};
use superlie::connection::{infinitesimal_holonomy, natural_torsion_free, nomizu_space};
use superlie::exactla::{intertwiners, qi, Matrix, Span, Q};
use superlie::liesuper::json::{algebra_from_json, algebra_to_json, decomposition_from_json, decomposition_to_json, AlgebraJson};
use superlie::liesuper::{LieSuperalgebra, ReductiveDecomposition};
use superlie::pbw::{Enveloping, ExteriorElement, Presentation, UeaElement};

/// Runs `test` on `cases` deterministic samples of `strategy`.
pub fn sample<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

pub fn words(letters: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..letters, 0..=max_len)
}

/// Normal form of `word` under the default strategy and under rewriting at
/// positions chosen by `picks`.
pub fn check_confluence(env: &Enveloping, word: &[usize], picks: &[usize]) -> Result<(), TestCaseError> {
    let want = env.normal_order(word).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let mut k = 0;
    let mut pick = |n: usize| {
        k += 1;
        picks[k % picks.len()] % n
    };
    let got = env.normal_order_with(word, &mut pick).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&got, &want, "word {:?}", word);
    prop_assert!(got.terms().keys().all(|m| env.is_normal(m)));
    Ok(())
}

/// `Σ c_i · word_i` normal ordered.
pub fn uea_element(env: &Enveloping, terms: &[(Vec<usize>, i64)]) -> UeaElement {
    let mut u = UeaElement::zero();
    for (w, c) in terms {
        u.add_scaled(&env.normal_order(w).expect("valid word"), &qi(*c));
    }
    u
}

pub fn uea_terms(letters: usize, max_len: usize) -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((words(letters, max_len), -3i64..=3), 1..4)
}

pub fn check_antipode_involution(env: &Enveloping, terms: &[(Vec<usize>, i64)]) -> Result<(), TestCaseError> {
    let u = uea_element(env, terms);
    prop_assert_eq!(env.antipode(&env.antipode(&u)), u);
    Ok(())
}

/// `γ̲⁻¹ ∘ γ̲ = id` on `U(g0) ⊗ Λ(g1)` and `γ̲ ∘ γ̲⁻¹ = id` on `U(g)`.
pub fn check_gamma_round_trip(env: &Enveloping, even_word: &[usize], odd_pick: &[bool], terms: &[(Vec<usize>, i64)]) -> Result<(), TestCaseError> {
    let g = env.algebra();
    let even = g.even_indices();
    let odd = g.odd_indices();
    let mut ranks: Vec<usize> = even_word.iter().map(|&i| env.rank(even[i % even.len()])).collect();
    ranks.sort();
    let w: Vec<usize> = odd.iter().zip(odd_pick).filter(|(_, &b)| b).map(|(&i, _)| i).collect();
    let p = Presentation::tensor(&UeaElement::monomial(ranks, Q::one()), &ExteriorElement::wedge(&w));
    prop_assert_eq!(env.underline_gamma_inv(&env.underline_gamma(&p)), p);
    let u = uea_element(env, terms);
    prop_assert_eq!(env.underline_gamma(&env.underline_gamma_inv(&u)), u);
    Ok(())
}

/// Unipotent `L·U` acting inside each block of indices.
pub fn block_unipotent(n: usize, blocks: &[Vec<usize>], lower: &[i64], upper: &[i64]) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for b in blocks {
        for (x, &i) in b.iter().enumerate() {
            for &j in &b[..x] {
                l.set(i, j, qi(lower[i * n + j]));
                u.set(j, i, qi(upper[j * n + i]));
            }
        }
    }
    l.mul(&u)
}

/// The decomposition in a basis mixed within `h0, h1, m0, m1`.
pub fn rebased(d: &ReductiveDecomposition, lower: &[i64], upper: &[i64]) -> ReductiveDecomposition {
    let g = d.algebra();
    let n = g.dim();
    let mut blocks = Vec::new();
    for part in [d.h(), d.m()] {
        for odd in [false, true] {
            blocks.push(part.iter().copied().filter(|&i| g.parity(i).is_odd() == odd).collect::<Vec<_>>());
        }
    }
    let p = block_unipotent(n, &blocks, lower, upper);
    let labels = (0..n).map(|i| format!("b{i}")).collect();
    let g2 = g.change_basis(&p, labels).expect("invertible homogeneous change");
    ReductiveDecomposition::new(g2, d.h().to_vec(), d.m().to_vec()).expect("blocks preserve h and m")
}

/// Holonomy of the natural torsion-free connection and the number of
/// invariant connections do not depend on the basis.
pub fn check_holonomy_invariance(d: &ReductiveDecomposition, lower: &[i64], upper: &[i64]) -> Result<(), TestCaseError> {
    let e = rebased(d, lower, upper);
    let hol = |d: &ReductiveDecomposition| infinitesimal_holonomy(&natural_torsion_free(d).expect("reductive")).dim;
    prop_assert_eq!(hol(&e), hol(d));
    prop_assert_eq!(nomizu_space(&e).expect("reductive").dim(), nomizu_space(d).expect("reductive").dim());
    Ok(())
}

/// Intertwiners `ρ -> σ` are unchanged when the generators are replaced by
/// invertible combinations of themselves.
pub fn check_recombination(dom: &[Matrix], cod: &[Matrix], lower: &[i64], upper: &[i64]) -> Result<(), TestCaseError> {
    let k = dom.len();
    let p = block_unipotent(k, &[(0..k).collect()], lower, upper);
    let mix = |gens: &[Matrix]| -> Vec<Matrix> {
        (0..k)
            .map(|a| {
                (0..k).fold(Matrix::zeros(gens[0].nrows(), gens[0].ncols()), |acc, i| acc.lin_comb(&Q::one(), &gens[i], &p.get(i, a)))
            })
            .collect()
    };
    let (dn, cn) = (dom[0].nrows(), cod[0].nrows());
    let solve = |d: &[Matrix], c: &[Matrix]| {
        let dr: Vec<&Matrix> = d.iter().collect();
        let cr: Vec<&Matrix> = c.iter().collect();
        let sols: Vec<Vec<Q>> = intertwiners(dn, cn, &dr, &cr, &|_, _| true).iter().map(|m| m.flatten()).collect();
        Span::from_vectors(dn * cn, sols.iter())
    };
    let a = solve(dom, cod);
    let b = solve(&mix(dom), &mix(cod));
    prop_assert!(a.same_as(&b), "dims {} vs {}", a.dim(), b.dim());
    Ok(())
}

pub fn spin_generators(sig: Signature) -> (Vec<Matrix>, Vec<Matrix>) {
    let spin = SpinLieAlgebra::new(CliffordRep::build(sig).expect("signature"));
    (spin.generators().to_vec(), spin.vector_action().to_vec())
}

pub fn check_json_round_trip(d: &ReductiveDecomposition) -> Result<(), TestCaseError> {
    let g = d.algebra();
    let text = serde_json::to_string(&algebra_to_json(g)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let back: AlgebraJson = serde_json::from_str(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let g2: LieSuperalgebra = algebra_from_json(&back).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(&g2, g);
    let text = serde_json::to_string(&decomposition_to_json(d)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let back: AlgebraJson = serde_json::from_str(&text).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let d2 = decomposition_from_json(&back).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(d2.h(), d.h());
    prop_assert_eq!(d2.m(), d.m());
    prop_assert_eq!(d2.algebra(), g);
    Ok(())
}

pub fn unipotent_entries(n: usize) -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
    (prop::collection::vec(-2i64..=2, n * n), prop::collection::vec(-2i64..=2, n * n))
}
