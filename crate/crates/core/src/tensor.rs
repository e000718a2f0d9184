//! Kronecker and Littlewood–Richardson coefficients.
//!
//! Kronecker coefficients come from the class-weighted triple sum over a
//! character table. Littlewood–Richardson coefficients have two independent
//! routes: LR tableau enumeration and Frobenius reciprocity over the Young
//! subgroup `S_l × S_m`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::character::{specht_dim, CharacterTable, TableSet};
use crate::error::{check_cap, domain, Result};
use crate::numbers::{exact_div, factorial, to_natural};
use crate::parallel::ParallelMap;
use crate::partition::{Characteristic, Partition};
use crate::report::{Failure, VerificationReport};

/// Default cap on `n` for the Murnaghan–Littlewood sweep.
pub const MURNAGHAN_LITTLEWOOD_CAP: usize = 10;

/// A module in the Grothendieck group: partitions of `n` with positive
/// multiplicities. Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    n: usize,
    mult: BTreeMap<Partition, BigUint>,
}

impl Decomposition {
    pub fn new(n: usize) -> Self {
        Decomposition { n, mult: BTreeMap::new() }
    }

    /// Builds from `(partition, multiplicity)` pairs; repeated partitions add up.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigUint)>,
    {
        let mut d = Decomposition::new(n);
        for (p, m) in pairs {
            d.add(p, m)?;
        }
        Ok(d)
    }

    pub fn add(&mut self, lam: Partition, m: BigUint) -> Result<()> {
        if lam.size() != self.n {
            return Err(domain(alloc::format!("{lam} is not a partition of {}", self.n)));
        }
        if m.is_zero() {
            return Ok(());
        }
        *self.mult.entry(lam).or_default() += m;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multiplicity(&self, lam: &Partition) -> BigUint {
        self.mult.get(lam).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.mult.iter()
    }

    pub fn constituents(&self) -> impl Iterator<Item = &Partition> {
        self.mult.keys()
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    /// `Σ_λ m_λ dim S^λ`.
    pub fn dimension(&self) -> Result<BigUint> {
        let mut acc = BigUint::zero();
        for (lam, m) in &self.mult {
            acc += specht_dim(lam)? * m;
        }
        Ok(acc)
    }

    /// Largest level among constituents.
    pub fn max_level(&self) -> Option<usize> {
        self.mult.keys().map(Partition::level).max()
    }
}

fn same_size(table: &CharacterTable, parts: &[&Partition]) -> Result<()> {
    if parts.iter().any(|p| p.size() != table.n()) {
        return Err(domain(alloc::format!("all partitions must have size {}", table.n())));
    }
    Ok(())
}

fn row<'a>(table: &'a CharacterTable, lam: &Partition) -> Result<&'a [BigInt]> {
    table
        .row(lam)
        .ok_or_else(|| domain(alloc::format!("{lam} is not a partition of {}", table.n())))
}

/// `|C_μ| χ^λ(μ) χ^μ'(μ)` for every class, the reusable half of a
/// Kronecker triple sum.
fn weighted_product(table: &CharacterTable, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    table
        .class_sizes()
        .iter()
        .zip(a.iter().zip(b))
        .map(|(s, (x, y))| BigInt::from(s.clone()) * x * y)
        .collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Kronecker coefficient `g(λ, μ, ν) = ⟨χ^λ χ^μ, χ^ν⟩`.
pub fn kronecker_coeff(
    table: &CharacterTable,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigUint> {
    same_size(table, &[lam, mu, nu])?;
    let prod = weighted_product(table, row(table, lam)?, row(table, mu)?);
    let sum = dot(&prod, row(table, nu)?);
    let g = exact_div(&sum, &factorial(table.n()), "kronecker coefficient")?;
    to_natural(g, "kronecker coefficient")
}

/// All constituents of `S^λ ⊗ S^μ` with their multiplicities.
pub fn kronecker_decompose(
    table: &CharacterTable,
    lam: &Partition,
    mu: &Partition,
) -> Result<Decomposition> {
    same_size(table, &[lam, mu])?;
    let (a, b) = (row(table, lam)?, row(table, mu)?);
    let prod = weighted_product(table, a, b);
    let order = factorial(table.n());
    let mut dec = Decomposition::new(table.n());
    for (nu, r) in table.classes().iter().zip(table.rows()) {
        let g = to_natural(exact_div(&dot(&prod, r), &order, "kronecker coefficient")?, "kronecker")?;
        dec.add(nu.clone(), g)?;
    }
    let expect = specht_dim(lam)? * specht_dim(mu)?;
    if dec.dimension()? != expect {
        return Err(crate::error::arithmetic(alloc::format!(
            "dimension bookkeeping failed for {lam} ⊗ {mu}"
        )));
    }
    Ok(dec)
}

/// Number of LR tableaux of shape `ν/λ` and weight `μ`: semistandard fillings
/// whose reverse reading word (right to left, top to bottom) is a lattice word.
pub fn lr_coeff_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    if lam.size() + mu.size() != nu.size() {
        return Err(domain(alloc::format!("|{lam}| + |{mu}| != |{nu}|")));
    }
    if !nu.contains(lam) {
        return Ok(BigUint::zero());
    }
    // Cells in reading order.
    let mut cells = Vec::with_capacity(mu.size());
    for r in 1..=nu.len() {
        for c in (lam.part(r) + 1..=nu.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut search = LrSearch {
        lam,
        weight: mu.parts(),
        cells: &cells,
        filling: vec![vec![0u8; nu.first() + 2]; nu.len() + 1],
        counts: vec![0usize; mu.len() + 1],
        found: 0,
    };
    search.run(0);
    Ok(BigUint::from(search.found))
}

struct LrSearch<'a> {
    lam: &'a Partition,
    weight: &'a [usize],
    cells: &'a [(usize, usize)],
    filling: Vec<Vec<u8>>,
    counts: Vec<usize>,
    found: u64,
}

impl LrSearch<'_> {
    fn run(&mut self, k: usize) {
        if k == self.cells.len() {
            self.found += 1;
            return;
        }
        let (r, c) = self.cells[k];
        // Right neighbour already filled when it lies in the skew shape.
        let max_v = if self.filling[r].get(c + 1).copied().unwrap_or(0) > 0 {
            self.filling[r][c + 1] as usize
        } else {
            self.weight.len()
        };
        let min_v = if r > 1 && c > self.lam.part(r - 1) {
            self.filling[r - 1][c] as usize + 1
        } else {
            1
        };
        for v in min_v..=max_v {
            if self.counts[v] >= self.weight[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.filling[r][c] = v as u8;
            self.run(k + 1);
            self.filling[r][c] = 0;
            self.counts[v] -= 1;
        }
    }
}

/// `c^ν_{λμ}` as the multiplicity of `χ^ν` restricted to `S_l × S_m` in
/// `χ^λ ⊠ χ^μ`. Needs the tables of sizes `|λ|`, `|μ|` and `|ν|`.
pub fn lr_coeff_characters(
    tables: &TableSet,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<BigUint> {
    if lam.size() + mu.size() != nu.size() {
        return Err(domain(alloc::format!("|{lam}| + |{mu}| != |{nu}|")));
    }
    let missing = || domain(alloc::format!("character tables up to {} are required", nu.size()));
    let tl = tables.get(lam.size()).ok_or_else(missing)?;
    let tm = tables.get(mu.size()).ok_or_else(missing)?;
    let tn = tables.get(nu.size()).ok_or_else(missing)?;
    let (rl, rm, rn) = (row(tl, lam)?, row(tm, mu)?, row(tn, nu)?);
    let mut acc = BigInt::zero();
    for (ai, alpha) in tl.classes().iter().enumerate() {
        if rl[ai].is_zero() {
            continue;
        }
        let wa = BigInt::from(tl.class_sizes()[ai].clone()) * &rl[ai];
        for (bi, beta) in tm.classes().iter().enumerate() {
            if rm[bi].is_zero() {
                continue;
            }
            let merged = alpha.union(beta);
            let ci = tn.index_of(&merged).expect("merged cycle type has size |ν|");
            if rn[ci].is_zero() {
                continue;
            }
            acc += &wa * BigInt::from(tm.class_sizes()[bi].clone()) * &rm[bi] * &rn[ci];
        }
    }
    let order = factorial(lam.size()) * factorial(mu.size());
    to_natural(exact_div(&acc, &order, "induction multiplicity")?, "induction multiplicity")
}

/// Triples `(α, β, γ)` of `p`-regular partitions of `n` with
/// `level(γ) = level(α) + level(β)`.
pub fn murnaghan_littlewood_instances(
    n: usize,
    p: Characteristic,
) -> Result<Vec<(Partition, Partition, Partition)>> {
    check_cap("murnaghan-littlewood sweep", n, MURNAGHAN_LITTLEWOOD_CAP)?;
    let parts: Vec<Partition> = crate::partition::enumerate_partitions(n)?
        .into_iter()
        .filter(|l| l.is_p_regular(p))
        .collect();
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            for c in &parts {
                if c.level() == a.level() + b.level() {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    Ok(out)
}

/// Checks `g(λ, μ, ν) = c^{ν̄}_{λ̄ μ̄}` for every triple of partitions of `n`
/// at maximal level.
pub fn verify_murnaghan_littlewood<P: ParallelMap>(
    table: &CharacterTable,
    par: &P,
) -> Result<VerificationReport> {
    let n = table.n();
    check_cap("murnaghan-littlewood sweep", n, MURNAGHAN_LITTLEWOOD_CAP)?;
    let classes = table.classes();
    let order = factorial(n);
    let partials = par.map_indexed(classes.len(), |i| -> Result<VerificationReport> {
        let lam = &classes[i];
        let mut rep = VerificationReport::new("murnaghan_littlewood");
        for (j, mu) in classes.iter().enumerate() {
            let prod = weighted_product(table, &table.rows()[i], &table.rows()[j]);
            for (k, nu) in classes.iter().enumerate() {
                if nu.level() != lam.level() + mu.level() {
                    continue;
                }
                let lhs = exact_div(&dot(&prod, &table.rows()[k]), &order, "kronecker coefficient")?;
                let rhs = BigInt::from(lr_coeff_tableaux(&lam.bar(), &mu.bar(), &nu.bar())?);
                rep.check(lhs == rhs, || {
                    Failure::new()
                        .with("lambda", lam)
                        .with("mu", mu)
                        .with("nu", nu)
                        .with("lhs", lhs.clone())
                        .with("rhs", rhs.clone())
                });
            }
        }
        Ok(rep)
    });
    let mut report = VerificationReport::new("murnaghan_littlewood")
        .with_param("n", n as i64)
        .with_param("p", 0);
    for part in partials {
        report.merge(part?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallel::Sequential;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn nat(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn kronecker_examples() {
        let t4 = CharacterTable::build(4, &Sequential).unwrap();
        let col = Partition::column(4);
        assert_eq!(kronecker_coeff(&t4, &col, &col, &p(&[4])).unwrap(), nat(1));
        assert_eq!(kronecker_coeff(&t4, &p(&[3, 1]), &p(&[3, 1]), &p(&[2, 2])).unwrap(), nat(1));
        for mu in t4.classes() {
            for nu in t4.classes() {
                let g = kronecker_coeff(&t4, &p(&[4]), mu, nu).unwrap();
                assert_eq!(g, nat((mu == nu) as u32));
            }
        }
        assert!(kronecker_coeff(&t4, &p(&[3]), &p(&[4]), &p(&[4])).is_err());
    }

    #[test]
    fn decompositions() {
        let t3 = CharacterTable::build(3, &Sequential).unwrap();
        let d = kronecker_decompose(&t3, &p(&[2, 1]), &p(&[2, 1])).unwrap();
        let expect =
            Decomposition::from_pairs(3, [(p(&[3]), nat(1)), (p(&[2, 1]), nat(1)), (p(&[1, 1, 1]), nat(1))])
                .unwrap();
        assert_eq!(d, expect);
        let t4 = CharacterTable::build(4, &Sequential).unwrap();
        let d = kronecker_decompose(&t4, &p(&[4]), &p(&[4])).unwrap();
        assert_eq!(d, Decomposition::from_pairs(4, [(p(&[4]), nat(1))]).unwrap());
        let d = kronecker_decompose(&t4, &p(&[4]), &p(&[3, 1])).unwrap();
        assert_eq!(d, Decomposition::from_pairs(4, [(p(&[3, 1]), nat(1))]).unwrap());
    }

    #[test]
    fn decomposition_drops_zeros() {
        let mut d = Decomposition::new(2);
        d.add(p(&[2]), BigUint::zero()).unwrap();
        assert!(d.is_empty());
        assert!(d.add(p(&[3]), nat(1)).is_err());
    }

    #[test]
    fn lr_examples() {
        let tables = TableSet::build(6, &Sequential).unwrap();
        let cases: [(&[usize], &[usize], &[usize], u32); 6] = [
            (&[2], &[1], &[2, 1], 1),
            (&[3], &[2], &[5], 1),
            (&[2, 1], &[2, 1], &[3, 2, 1], 2),
            (&[1], &[1], &[2], 1),
            (&[1], &[1], &[1, 1], 1),
            (&[2], &[2], &[2, 2], 1),
        ];
        for (l, m, n, want) in cases {
            let (l, m, n) = (p(l), p(m), p(n));
            assert_eq!(lr_coeff_tableaux(&l, &m, &n).unwrap(), nat(want), "{l} {m} {n}");
            assert_eq!(lr_coeff_characters(&tables, &l, &m, &n).unwrap(), nat(want), "{l} {m} {n}");
        }
        assert_eq!(lr_coeff_tableaux(&p(&[3]), &p(&[1]), &p(&[2, 2])).unwrap(), nat(0));
        assert!(lr_coeff_tableaux(&p(&[2]), &p(&[1]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn murnaghan_littlewood_small() {
        for n in 0..=4 {
            let t = CharacterTable::build(n, &Sequential).unwrap();
            let r = verify_murnaghan_littlewood(&t, &Sequential).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.instances_checked > 0);
        }
        let t4 = CharacterTable::build(4, &Sequential).unwrap();
        let (a, b, c) = (p(&[3, 1]), p(&[3, 1]), p(&[2, 2]));
        assert_eq!(kronecker_coeff(&t4, &a, &b, &c).unwrap(), nat(1));
        assert_eq!(lr_coeff_tableaux(&a.bar(), &b.bar(), &c.bar()).unwrap(), nat(1));
    }

    #[test]
    fn instance_lists_respect_regularity() {
        let all = murnaghan_littlewood_instances(4, Characteristic::ZERO).unwrap();
        let two = murnaghan_littlewood_instances(4, Characteristic::new(2).unwrap()).unwrap();
        assert!(two.len() < all.len());
        assert!(two.iter().all(|(a, b, c)| {
            let p2 = Characteristic::new(2).unwrap();
            a.is_p_regular(p2) && b.is_p_regular(p2) && c.is_p_regular(p2)
        }));
        assert!(murnaghan_littlewood_instances(11, Characteristic::ZERO).is_err());
    }
}
