//! Characteristic-zero 2-rank and 3-rank from restrictions to the Young
//! subgroups `E₂ = S₂^m × S_{n-2m}` and `E₃ = S₃^l × S_{n-3l}`.
//!
//! A character only sees the conjugacy class of an element of `S₂^m`
//! (resp. `S₃^l`), which depends on how many factors act nontrivially (resp.
//! how many act as transpositions and 3-cycles). The multiplicities are
//! collated by those counts, so each restriction costs polynomially many
//! character values. The residual factor `S_{n-2m}` (`S_{n-3l}`) does not
//! affect the type and is ignored.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::character::{CharacterTable, ClassFunction, TableSet};
use crate::crystal::{specht_rank_formula, RankKind};
use crate::error::{arithmetic, check_cap, domain, Result};
use crate::numbers::{binomial, factorial, pow};
use crate::parallel::ParallelMap;
use crate::partition::Partition;
use crate::report::{Failure, VerificationReport};
use crate::tensor::{kronecker_decompose, lr_coeff_characters, Decomposition};

/// Default cap on `n` for the tensor additivity sweep.
pub const TENSOR_ADDITIVITY_CAP: usize = 10;
/// Default cap on `n` for the Specht rank sweep.
pub const SPECHT_RANK_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YoungSubgroup {
    E2,
    E3,
}

/// Restriction type profile: `counts[r]` is the total multiplicity of all
/// type-`r` irreducibles of `E₂`/`E₃` in the restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeProfile {
    pub n: usize,
    pub kind: YoungSubgroup,
    pub counts: Vec<BigUint>,
}

impl TypeProfile {
    /// Largest type with positive multiplicity.
    pub fn max_type(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Dimension of one irreducible of the given type.
    pub fn irreducible_dim(&self, r: usize) -> BigUint {
        match self.kind {
            YoungSubgroup::E2 => BigUint::one(),
            YoungSubgroup::E3 => pow(2, r),
        }
    }

    /// `Σ_r counts[r] · dim(type r)`, the dimension of the restriction.
    pub fn total_dimension(&self) -> BigUint {
        self.counts
            .iter()
            .enumerate()
            .map(|(r, c)| c * self.irreducible_dim(r))
            .sum()
    }
}

fn value_at(chi: &ClassFunction, cycle_type: Vec<usize>) -> Result<&BigInt> {
    let ct = Partition::from_unsorted(cycle_type);
    chi.value(&ct)
        .ok_or_else(|| arithmetic(alloc::format!("class function has no value at {ct}")))
}

fn natural_multiplicity(sum: BigInt, order: &BigUint) -> Result<BigUint> {
    let order = BigInt::from(order.clone());
    if (&sum % &order) != BigInt::zero() {
        return Err(domain("restriction multiplicity is not an integer: input is not a character"));
    }
    let m = sum / order;
    if m.is_negative() {
        return Err(domain("negative restriction multiplicity: input is not a character"));
    }
    Ok(m.magnitude().clone())
}

/// Type profile of the restriction to `E₂`.
///
/// The multiplicity of a fixed linear character with `r` sign factors is
/// `2^{-m} Σ_t χ(2^t 1^{n-2t}) K_r(t)` with the Krawtchouk weight
/// `K_r(t) = Σ_j (-1)^j binom(r, j) binom(m-r, t-j)`.
pub fn e2_profile(chi: &ClassFunction) -> Result<TypeProfile> {
    let n = chi.n();
    let m = n / 2;
    let values: Vec<BigInt> = (0..=m)
        .map(|t| {
            let mut ct = vec![2; t];
            ct.extend(core::iter::repeat_n(1, n - 2 * t));
            value_at(chi, ct).cloned()
        })
        .collect::<Result<_>>()?;
    let order = pow(2, m);
    let mut counts = Vec::with_capacity(m + 1);
    for r in 0..=m {
        let mut sum = BigInt::zero();
        for (t, v) in values.iter().enumerate() {
            sum += v * krawtchouk(m, r, t);
        }
        let mult = natural_multiplicity(sum, &order)?;
        counts.push(mult * binomial(m, r));
    }
    let profile = TypeProfile { n, kind: YoungSubgroup::E2, counts };
    check_dimension(&profile, chi)?;
    Ok(profile)
}

fn krawtchouk(m: usize, r: usize, t: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=r.min(t) {
        let term = BigInt::from(binomial(r, j) * binomial(m - r, t - j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Polynomial in `(#identity, #transposition, #3-cycle)` factor counts.
type Poly3 = Vec<Vec<Vec<BigInt>>>;

fn poly_mul_linear(poly: &Poly3, l: usize, e: i64, t: i64, c: i64) -> Poly3 {
    let mut out = vec![vec![vec![BigInt::zero(); l + 1]; l + 1]; l + 1];
    for x in 0..=l {
        for y in 0..=l - x {
            for z in 0..=l - x - y {
                let v = &poly[x][y][z];
                if v.is_zero() {
                    continue;
                }
                if x < l {
                    out[x + 1][y][z] += v * e;
                }
                if y < l {
                    out[x][y + 1][z] += v * t;
                }
                if z < l {
                    out[x][y][z + 1] += v * c;
                }
            }
        }
    }
    out
}

/// Type profile of the restriction to `E₃`.
///
/// For an irreducible with `a` trivial, `b` sign and `c` two-dimensional
/// factors, the class-weighted character sum over `S₃^l` is read off the
/// coefficients of `(E+3T+2C)^a (E-3T+2C)^b (2E-2C)^c`.
pub fn e3_profile(chi: &ClassFunction) -> Result<TypeProfile> {
    let n = chi.n();
    let l = n / 3;
    let rest = n - 3 * l;
    // chi value for x identity, y transposition, z 3-cycle factors.
    let mut values = vec![vec![vec![BigInt::zero(); l + 1]; l + 1]; l + 1];
    for x in 0..=l {
        for y in 0..=l - x {
            let z = l - x - y;
            let mut ct = vec![3; z];
            ct.extend(core::iter::repeat_n(2, y));
            ct.extend(core::iter::repeat_n(1, y + 3 * x + rest));
            values[x][y][z] = value_at(chi, ct)?.clone();
        }
    }
    let order = pow(6, l);
    let mut counts = vec![BigUint::zero(); l + 1];
    for c in 0..=l {
        for b in 0..=l - c {
            let a = l - b - c;
            let mut poly: Poly3 = vec![vec![vec![BigInt::zero(); l + 1]; l + 1]; l + 1];
            poly[0][0][0] = BigInt::one();
            for _ in 0..a {
                poly = poly_mul_linear(&poly, l, 1, 3, 2);
            }
            for _ in 0..b {
                poly = poly_mul_linear(&poly, l, 1, -3, 2);
            }
            for _ in 0..c {
                poly = poly_mul_linear(&poly, l, 2, 0, -2);
            }
            let mut sum = BigInt::zero();
            for x in 0..=l {
                for y in 0..=l - x {
                    let z = l - x - y;
                    sum += &poly[x][y][z] * &values[x][y][z];
                }
            }
            let mult = natural_multiplicity(sum, &order)?;
            let arrangements = factorial(l) / (factorial(a) * factorial(b) * factorial(c));
            counts[c] += mult * arrangements;
        }
    }
    let profile = TypeProfile { n, kind: YoungSubgroup::E3, counts };
    check_dimension(&profile, chi)?;
    Ok(profile)
}

fn check_dimension(profile: &TypeProfile, chi: &ClassFunction) -> Result<()> {
    if BigInt::from(profile.total_dimension()) != *chi.degree() {
        return Err(arithmetic("restriction dimensions do not add up to the degree"));
    }
    Ok(())
}

/// 2-rank of a character: the largest `E₂` type in its restriction.
pub fn rank2_oracle(chi: &ClassFunction) -> Result<usize> {
    Ok(e2_profile(chi)?.max_type())
}

/// 3-rank of a character: the largest `E₃` type in its restriction.
pub fn rank3_oracle(chi: &ClassFunction) -> Result<usize> {
    Ok(e3_profile(chi)?.max_type())
}

fn oracle_of(table: &CharacterTable, lam: &Partition, kind: RankKind) -> Result<usize> {
    let chi = table
        .class_function(lam)
        .ok_or_else(|| domain(alloc::format!("{lam} is not a partition of {}", table.n())))?;
    match kind {
        RankKind::Rank2 => rank2_oracle(&chi),
        RankKind::Rank3 => rank3_oracle(&chi),
    }
}

/// 2-rank of a module: the maximum over its composition factors.
pub fn module_rank2(table: &CharacterTable, dec: &Decomposition) -> Result<usize> {
    if dec.is_empty() {
        return Err(domain("rank of the zero module is undefined"));
    }
    let mut best = 0;
    for nu in dec.constituents() {
        best = best.max(oracle_of(table, nu, RankKind::Rank2)?);
    }
    Ok(best)
}

/// Checks the oracle ranks against the closed forms for every `λ ⊢ k`,
/// `1 ≤ k ≤ n`, together with `max(r₂(λ), r₂(λ')) = ⌊k/2⌋`.
pub fn verify_specht_rank<P: ParallelMap>(tables: &TableSet, n: usize, par: &P) -> Result<VerificationReport> {
    check_cap("specht rank sweep", n, SPECHT_RANK_CAP)?;
    let mut report = VerificationReport::new("specht_rank").with_param("n", n as i64);
    for k in 1..=n {
        let table = tables
            .get(k)
            .ok_or_else(|| domain(alloc::format!("character table of S_{k} is required")))?;
        let classes = table.classes();
        let partials = par.map_indexed(classes.len(), |i| -> Result<VerificationReport> {
            let lam = &classes[i];
            let mut rep = VerificationReport::new("specht_rank");
            let r2 = oracle_of(table, lam, RankKind::Rank2)?;
            let r3 = oracle_of(table, lam, RankKind::Rank3)?;
            let r2_conj = oracle_of(table, &lam.conjugate(), RankKind::Rank2)?;
            let f2 = specht_rank_formula(lam, RankKind::Rank2);
            let f3 = specht_rank_formula(lam, RankKind::Rank3);
            rep.check(r2 == f2, || {
                Failure::new().with("lambda", lam).with("kind", "rank2").with("oracle", r2).with("formula", f2)
            });
            rep.check(r3 == f3, || {
                Failure::new().with("lambda", lam).with("kind", "rank3").with("oracle", r3).with("formula", f3)
            });
            let top = r2.max(r2_conj);
            rep.check(top == k / 2, || {
                Failure::new().with("lambda", lam).with("kind", "sign_twist").with("oracle", top).with("formula", k / 2)
            });
            Ok(rep)
        });
        for part in partials {
            report.merge(part?);
        }
    }
    Ok(report)
}

/// For every pair `(λ, μ)` of partitions of `n` whose 2-ranks sum to at most
/// `n/2`, checks that the 2-rank of `S^λ ⊗ S^μ` is that sum.
pub fn verify_tensor_rank_additivity<P: ParallelMap>(
    table: &CharacterTable,
    par: &P,
) -> Result<VerificationReport> {
    let n = table.n();
    check_cap("tensor rank additivity sweep", n, TENSOR_ADDITIVITY_CAP)?;
    let classes = table.classes();
    let oracle: Vec<usize> = par
        .map_indexed(classes.len(), |i| oracle_of(table, &classes[i], RankKind::Rank2))
        .into_iter()
        .collect::<Result<_>>()?;
    let partials = par.map_indexed(classes.len(), |i| -> Result<VerificationReport> {
        let lam = &classes[i];
        let mut rep = VerificationReport::new("tensor_rank_additivity");
        for (j, mu) in classes.iter().enumerate() {
            let sum = oracle[i] + oracle[j];
            if 2 * sum > n {
                continue;
            }
            let dec = kronecker_decompose(table, lam, mu)?;
            let got = dec
                .constituents()
                .map(|nu| oracle[table.index_of(nu).expect("constituent of S_n")])
                .max()
                .unwrap_or(0);
            rep.check(got == sum, || {
                Failure::new()
                    .with("lambda", lam)
                    .with("mu", mu)
                    .with("rank_sum", sum)
                    .with("tensor_rank", got)
            });
        }
        Ok(rep)
    });
    let mut report = VerificationReport::new("tensor_rank_additivity")
        .with_param("n", n as i64)
        .with_param("p", 0);
    for part in partials {
        report.merge(part?);
    }
    Ok(report)
}

/// Character-level form of `r₂(V) = 1 + r₂(V₋)`, where `V₋` is the
/// `(-1)`-eigenspace of a transposition viewed as an `S_{n-2}`-module.
/// Its constituents are the `σ ⊢ n-2` with `c^λ_{σ,(1,1)} > 0`.
pub fn verify_sign_eigenspace_recursion(tables: &TableSet, n: usize) -> Result<VerificationReport> {
    check_cap("sign eigenspace sweep", n, TENSOR_ADDITIVITY_CAP)?;
    let mut report = VerificationReport::new("sign_eigenspace_recursion").with_param("n", n as i64);
    if n < 2 {
        return Ok(report);
    }
    let missing = || domain(alloc::format!("character tables up to {n} are required"));
    let table = tables.get(n).ok_or_else(missing)?;
    let lower = tables.get(n - 2).ok_or_else(missing)?;
    let column2 = Partition::column(2);
    for lam in table.classes() {
        let rank = oracle_of(table, lam, RankKind::Rank2)?;
        let mut best: Option<usize> = None;
        for sigma in lower.classes() {
            if !lr_coeff_characters(tables, sigma, &column2, lam)?.is_zero() {
                let r = oracle_of(lower, sigma, RankKind::Rank2)?;
                best = Some(best.map_or(r, |b| b.max(r)));
            }
        }
        let expect = best.map_or(0, |b| b + 1);
        report.check(rank == expect, || {
            Failure::new().with("lambda", lam).with("rank", rank).with("recursion", expect)
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parallel::Sequential;
    use alloc::collections::BTreeMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rank2_examples() {
        for n in 2..=8 {
            let t = CharacterTable::build(n, &Sequential).unwrap();
            let triv = t.class_function(&Partition::row(n)).unwrap();
            let std = t.class_function(&p(&[n - 1, 1])).unwrap();
            let sign = t.class_function(&Partition::column(n)).unwrap();
            assert_eq!(rank2_oracle(&triv).unwrap(), 0);
            assert_eq!(rank2_oracle(&std).unwrap(), 1);
            assert_eq!(rank2_oracle(&sign).unwrap(), n / 2);
        }
    }

    #[test]
    fn rank3_examples() {
        for n in 4..=9 {
            let t = CharacterTable::build(n, &Sequential).unwrap();
            let triv = t.class_function(&Partition::row(n)).unwrap();
            let std = t.class_function(&p(&[n - 1, 1])).unwrap();
            let sign = t.class_function(&Partition::column(n)).unwrap();
            assert_eq!(rank3_oracle(&triv).unwrap(), 0);
            assert_eq!(rank3_oracle(&sign).unwrap(), 0);
            assert_eq!(rank3_oracle(&std).unwrap(), 1);
        }
    }

    #[test]
    fn profiles_account_for_dimension() {
        let t = CharacterTable::build(7, &Sequential).unwrap();
        for lam in t.classes() {
            let chi = t.class_function(lam).unwrap();
            for prof in [e2_profile(&chi).unwrap(), e3_profile(&chi).unwrap()] {
                assert_eq!(BigInt::from(prof.total_dimension()), *chi.degree());
            }
        }
    }

    #[test]
    fn non_characters_rejected() {
        let t = CharacterTable::build(4, &Sequential).unwrap();
        let a = t.class_function(&p(&[4])).unwrap();
        let b = t.class_function(&p(&[3, 1])).unwrap();
        // trivial minus standard is a virtual character with a negative part
        let values: BTreeMap<Partition, BigInt> =
            a.iter().map(|(k, v)| (k.clone(), v - b.value(k).unwrap())).collect();
        let virt = ClassFunction::new(4, values).unwrap();
        assert!(rank2_oracle(&virt).is_err());
    }

    #[test]
    fn module_ranks() {
        let t3 = CharacterTable::build(3, &Sequential).unwrap();
        let dec = kronecker_decompose(&t3, &p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(module_rank2(&t3, &dec).unwrap(), 1);
        let t6 = CharacterTable::build(6, &Sequential).unwrap();
        let one = |l: Partition| (l, BigUint::one());
        let d = Decomposition::from_pairs(6, [one(p(&[6]))]).unwrap();
        assert_eq!(module_rank2(&t6, &d).unwrap(), 0);
        let d = Decomposition::from_pairs(6, [one(p(&[6])), one(Partition::column(6))]).unwrap();
        assert_eq!(module_rank2(&t6, &d).unwrap(), 3);
        assert!(module_rank2(&t6, &Decomposition::new(6)).is_err());
    }

    #[test]
    fn additivity_small() {
        let t4 = CharacterTable::build(4, &Sequential).unwrap();
        let dec = kronecker_decompose(&t4, &p(&[3, 1]), &p(&[3, 1])).unwrap();
        assert_eq!(module_rank2(&t4, &dec).unwrap(), 2);
        for n in 1..=6 {
            let t = CharacterTable::build(n, &Sequential).unwrap();
            let r = verify_tensor_rank_additivity(&t, &Sequential).unwrap();
            assert!(r.passed() && r.instances_checked > 0, "{r:?}");
        }
    }

    #[test]
    fn specht_rank_and_recursion_small() {
        let tables = TableSet::build(7, &Sequential).unwrap();
        let r = verify_specht_rank(&tables, 7, &Sequential).unwrap();
        assert!(r.passed(), "{r:?}");
        for n in 2..=7 {
            let r = verify_sign_eigenspace_recursion(&tables, n).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
