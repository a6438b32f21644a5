mod common;

use common::*;
use proptest::prelude::*;
use superlie::catalog::build;
use superlie::clifford::Signature;
use superlie::liesuper::examples::osp1;
use superlie::pbw::Enveloping;
use std::sync::OnceLock;

fn osp14() -> &'static Enveloping {
    static E: OnceLock<Enveloping> = OnceLock::new();
    E.get_or_init(|| Enveloping::new(osp1(2).unwrap()))
}

fn poincare12() -> &'static Enveloping {
    static E: OnceLock<Enveloping> = OnceLock::new();
    E.get_or_init(|| Enveloping::new(build("poincare-1-2").unwrap().algebra().clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normal_order_is_confluent(word in words(14, 6), picks in prop::collection::vec(any::<usize>(), 1..8)) {
        check_confluence(osp14(), &word, &picks)?;
    }

    #[test]
    fn normal_order_is_confluent_poincare(word in words(8, 6), picks in prop::collection::vec(any::<usize>(), 1..8)) {
        check_confluence(poincare12(), &word, &picks)?;
    }

    #[test]
    fn antipode_is_an_involution(terms in uea_terms(14, 4)) {
        check_antipode_involution(osp14(), &terms)?;
    }

    #[test]
    fn gamma_round_trip(even in words(10, 3), odd in prop::collection::vec(any::<bool>(), 4), terms in uea_terms(14, 4)) {
        check_gamma_round_trip(osp14(), &even, &odd, &terms)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn holonomy_does_not_depend_on_basis((lower, upper) in unipotent_entries(8)) {
        let d = build("poincare-1-2").unwrap().decomposition;
        check_holonomy_invariance(&d, &lower, &upper)?;
    }

    #[test]
    fn json_round_trip_in_any_basis((lower, upper) in unipotent_entries(8)) {
        let d = build("poincare-1-2").unwrap().decomposition;
        check_json_round_trip(&rebased(&d, &lower, &upper))?;
    }

    #[test]
    fn intertwiners_survive_recombination((lower, upper) in unipotent_entries(6)) {
        let (spin, vector) = spin_generators(Signature::new(2, 2));
        check_recombination(&spin, &spin, &lower, &upper)?;
        check_recombination(&vector, &vector, &lower, &upper)?;
    }
}
