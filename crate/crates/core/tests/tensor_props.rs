use num_bigint::BigUint;
use num_traits::{One, Zero};
use symlevel_core::character::{specht_dim, CharacterTable, TableSet};
use symlevel_core::numbers::binomial;
use symlevel_core::partition::enumerate_partitions;
use symlevel_core::tensor::{kronecker_coeff, kronecker_decompose, lr_coeff_characters, lr_coeff_tableaux};
use symlevel_core::{Partition, Sequential};

#[test]
fn kronecker_is_symmetric_in_all_arguments() {
    for n in 1..=7 {
        let t = CharacterTable::build(n, &Sequential).unwrap();
        let ps = t.classes();
        for a in ps {
            for b in ps {
                for c in ps {
                    let g = kronecker_coeff(&t, a, b, c).unwrap();
                    for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                        assert_eq!(kronecker_coeff(&t, x, y, z).unwrap(), g);
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_and_sign_delta_rules() {
    for n in 1..=8 {
        let t = CharacterTable::build(n, &Sequential).unwrap();
        let triv = Partition::row(n);
        let sign = Partition::column(n);
        for a in t.classes() {
            for b in t.classes() {
                let g1 = kronecker_coeff(&t, a, b, &triv).unwrap();
                let g2 = kronecker_coeff(&t, a, b, &sign).unwrap();
                assert_eq!(g1, BigUint::from((a == b) as u8));
                assert_eq!(g2, BigUint::from((*a == b.conjugate()) as u8));
            }
        }
    }
}

#[test]
fn lr_dimension_bookkeeping() {
    for l in 0..=4 {
        for m in 0..=4 {
            for lam in enumerate_partitions(l).unwrap() {
                for mu in enumerate_partitions(m).unwrap() {
                    let mut total = BigUint::zero();
                    for nu in enumerate_partitions(l + m).unwrap() {
                        total += lr_coeff_tableaux(&lam, &mu, &nu).unwrap() * specht_dim(&nu).unwrap();
                    }
                    let expected = binomial(l + m, l) * specht_dim(&lam).unwrap() * specht_dim(&mu).unwrap();
                    assert_eq!(total, expected, "{lam} {mu}");
                }
            }
        }
    }
}

#[test]
fn lr_routes_agree_small() {
    let set = TableSet::build(6, &Sequential).unwrap();
    for n in 0..=6 {
        for nu in enumerate_partitions(n).unwrap() {
            for l in 0..=n {
                for lam in enumerate_partitions(l).unwrap() {
                    for mu in enumerate_partitions(n - l).unwrap() {
                        assert_eq!(
                            lr_coeff_tableaux(&lam, &mu, &nu).unwrap(),
                            lr_coeff_characters(&set, &lam, &mu, &nu).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn maximal_level_constituent_exists() {
    for n in 1..=10 {
        let t = CharacterTable::build(n, &Sequential).unwrap();
        for a in t.classes() {
            for b in t.classes() {
                let s = a.level() + b.level();
                if 2 * s > n {
                    continue;
                }
                let dec = kronecker_decompose(&t, a, b).unwrap();
                assert!(dec.constituents().any(|nu| nu.level() == s), "{a} ⊗ {b}");
                assert_eq!(dec.max_level(), Some(s));
            }
        }
    }
}

#[test]
fn lr_with_empty_factor_is_identity() {
    for n in 0..=6 {
        for a in enumerate_partitions(n).unwrap() {
            for b in enumerate_partitions(n).unwrap() {
                let c = lr_coeff_tableaux(&a, &Partition::empty(), &b).unwrap();
                assert_eq!(c.is_one(), a == b);
            }
        }
    }
}
