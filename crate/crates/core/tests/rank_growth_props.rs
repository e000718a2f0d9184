use num_bigint::BigUint;
use proptest::prelude::*;
use symlevel_core::character::{CharacterTable, TableSet};
use symlevel_core::crystal::{specht_rank_formula, RankKind};
use symlevel_core::growth::{
    alternating_bounds_hold, an_plancherel, f_prod, g_diagonal, g_nodewise, growth_report, plancherel,
};
use symlevel_core::numbers::pow;
use symlevel_core::rank::{e2_profile, e3_profile, rank2_oracle, rank3_oracle, verify_sign_eigenspace_recursion};
use symlevel_core::tensor::kronecker_decompose;
use symlevel_core::{Partition, Sequential};

#[test]
fn oracles_match_closed_forms_and_account_for_dimension() {
    let set = TableSet::build(10, &Sequential).unwrap();
    for n in 1..=10 {
        let t = set.get(n).unwrap();
        for lam in t.classes() {
            let chi = t.class_function(lam).unwrap();
            assert_eq!(rank2_oracle(&chi).unwrap(), specht_rank_formula(lam, RankKind::Rank2), "{lam}");
            assert_eq!(rank3_oracle(&chi).unwrap(), specht_rank_formula(lam, RankKind::Rank3), "{lam}");
            let degree = BigUint::try_from(chi.degree().clone()).unwrap();
            assert_eq!(e2_profile(&chi).unwrap().total_dimension(), degree);
            assert_eq!(e3_profile(&chi).unwrap().total_dimension(), degree);
        }
    }
}

#[test]
fn sign_twist_reflects_e2_profile() {
    let set = TableSet::build(12, &Sequential).unwrap();
    for n in 1..=12 {
        let t = set.get(n).unwrap();
        for lam in t.classes() {
            let a = e2_profile(&t.class_function(lam).unwrap()).unwrap();
            let b = e2_profile(&t.class_function(&lam.conjugate()).unwrap()).unwrap();
            let reflected: Vec<BigUint> = a.counts.iter().rev().cloned().collect();
            assert_eq!(b.counts, reflected, "{lam}");
            assert_eq!(a.max_type().max(b.max_type()), n / 2);
        }
    }
}

#[test]
fn sign_eigenspace_recursion_to_ten() {
    let set = TableSet::build(10, &Sequential).unwrap();
    for n in 2..=10 {
        let r = verify_sign_eigenspace_recursion(&set, n).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.instances_checked > 0);
    }
}

#[test]
fn alternating_measure_is_within_factor_two() {
    for n in 2..=7 {
        let t = CharacterTable::build(n, &Sequential).unwrap();
        for a in t.classes() {
            for b in t.classes() {
                let dec = kronecker_decompose(&t, a, b).unwrap();
                assert!(alternating_bounds_hold(&dec).unwrap());
                assert!(an_plancherel(&dec).unwrap() <= plancherel(&dec).unwrap());
            }
        }
    }
}

#[test]
fn growth_witnesses_up_to_nine() {
    for n in 1..=9 {
        let t = CharacterTable::build(n, &Sequential).unwrap();
        for a in t.classes() {
            for b in t.classes() {
                let r = growth_report(&t, a, b).unwrap();
                if r.witness_expected() {
                    assert!(r.max_level_witness, "{a} ⊗ {b}");
                }
                let linear = |l: &Partition| l.level() == 0 || l.len() == n;
                assert_eq!(r.exponent.is_none(), linear(a) && linear(b));
            }
        }
    }
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=9, 0..=9).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn f_submultiplicative_random(i in 1i64..=60, j in 0usize..=60, k in 0usize..=60) {
        prop_assert!(f_prod(i, j + k) <= pow(3, j + k) * f_prod(i, j) * f_prod(i, k));
    }

    #[test]
    fn g_formulas_agree_random(lam in partition_strategy()) {
        prop_assert_eq!(g_diagonal(&lam), g_nodewise(&lam));
    }
}
