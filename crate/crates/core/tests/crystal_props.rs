use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use symlevel_core::crystal::{
    e_tilde, epsilon, i_signature, normal_nodes, reduced_signature, removable_residues, Sign,
    SignatureString,
};
use symlevel_core::partition::{enumerate_partitions, partitions_up_to};
use symlevel_core::{Characteristic, Partition};

fn chars() -> [Characteristic; 4] {
    [0, 2, 3, 5].map(|p| Characteristic::new(p).unwrap())
}

/// Residues worth probing: every residue mod p, or for p = 0 the contents
/// of all rim nodes (other residues have empty signatures).
fn residues(lam: &Partition, p: Characteristic) -> Vec<i64> {
    if p.is_zero() {
        let mut r: Vec<i64> = lam
            .addable_nodes()
            .into_iter()
            .chain(lam.removable_nodes())
            .map(|n| n.content())
            .collect();
        r.sort_unstable();
        r.dedup();
        r
    } else {
        (0..p.get() as i64).collect()
    }
}

#[test]
fn e_tilde_preserves_regularity() {
    for p in chars() {
        for parts in partitions_up_to(14).unwrap() {
            for lam in parts.into_iter().filter(|l| l.is_p_regular(p)) {
                for i in residues(&lam, p) {
                    let eps = epsilon(&lam, i, p).unwrap();
                    let mut current = lam.clone();
                    for k in 1..=eps {
                        let next = e_tilde(&lam, i, p, k).unwrap().expect("k <= ε");
                        assert!(next.is_p_regular(p), "ẽ_{i}^{k} {lam} = {next} at p={p}");
                        assert_eq!(next.size() + k, lam.size());
                        assert_eq!(e_tilde(&current, i, p, 1).unwrap(), Some(next.clone()));
                        current = next;
                    }
                    assert_eq!(e_tilde(&lam, i, p, eps + 1).unwrap(), None);
                }
            }
        }
    }
}

/// Erases randomly chosen adjacent `-+` pairs until none remain.
fn random_erasure(sig: &SignatureString, rng: &mut StdRng) -> Vec<Sign> {
    let mut s = sig.signs();
    loop {
        let spots: Vec<usize> = (0..s.len().saturating_sub(1))
            .filter(|&k| s[k] == Sign::Minus && s[k + 1] == Sign::Plus)
            .collect();
        if spots.is_empty() {
            return s;
        }
        let k = spots[rng.gen_range(0..spots.len())];
        s.drain(k..k + 2);
    }
}

#[test]
fn reduction_is_independent_of_erasure_order() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for p in [2, 3, 5].map(|p| Characteristic::new(p).unwrap()) {
        for parts in partitions_up_to(10).unwrap() {
            for lam in parts {
                for i in 0..p.get() as i64 {
                    let sig = i_signature(&lam, i, p).unwrap();
                    let reduced = reduced_signature(&sig).signs();
                    for _ in 0..50 {
                        assert_eq!(random_erasure(&sig, &mut rng), reduced, "{lam} i={i} p={p}");
                    }
                }
            }
        }
    }
}

#[test]
fn top_removable_node_of_a_regular_partition_is_normal() {
    for p in chars() {
        for n in 1..=12 {
            for lam in enumerate_partitions(n).unwrap().into_iter().filter(|l| l.is_p_regular(p)) {
                let top = *lam.removable_nodes().last().unwrap();
                assert_eq!(top.row, lam.removable_nodes().iter().map(|n| n.row).min().unwrap());
                let i = top.residue(p);
                assert!(normal_nodes(&lam, i, p).unwrap().contains(&top), "{lam} p={p}");
            }
        }
    }
}

#[test]
fn every_nonempty_regular_partition_has_a_normal_node() {
    for p in chars() {
        for parts in partitions_up_to(12).unwrap().into_iter().skip(1) {
            for lam in parts.into_iter().filter(|l| l.is_p_regular(p)) {
                let total: usize = removable_residues(&lam, p)
                    .into_iter()
                    .map(|i| epsilon(&lam, i, p).unwrap())
                    .sum();
                assert!(total >= 1, "{lam} p={p}");
            }
        }
    }
}

#[test]
fn characteristic_zero_epsilons() {
    let p = Characteristic::ZERO;
    for parts in partitions_up_to(12).unwrap() {
        for lam in parts {
            let span = lam.len() as i64 + lam.first() as i64 + 2;
            let mut ones = 0;
            for i in -span..=span {
                let e = epsilon(&lam, i, p).unwrap();
                assert!(e <= 1);
                ones += e;
            }
            assert_eq!(ones, lam.removable_nodes().len(), "{lam}");
        }
    }
}
