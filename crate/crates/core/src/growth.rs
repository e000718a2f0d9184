//! Plancherel measures, hook-distance products and dimension bounds.
//!
//! Every inequality is decided on cross-multiplied exact integers. Floating
//! point only appears in the reported growth exponent.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::character::{specht_dim, CharacterTable};
use crate::error::{arithmetic, check_cap, domain, Result};
use crate::numbers::{binomial, factorial, ln_biguint, pow};
use crate::parallel::ParallelMap;
use crate::partition::{enumerate_partitions, Characteristic, Partition};
use crate::report::{Failure, VerificationReport};
use crate::tensor::{kronecker_decompose, Decomposition};

pub const F_SWEEP_CAP: usize = 60;
pub const G_SWEEP_CAP: usize = 14;
pub const DIMENSION_SWEEP_CAP: usize = 30;
pub const DIM_BOUND_CAP: usize = 24;
pub const GROWTH_CAP: usize = 14;

/// Sum of `dim²` over the distinct constituents; multiplicities are ignored.
pub fn plancherel(dec: &Decomposition) -> Result<BigUint> {
    let mut acc = BigUint::zero();
    for lam in dec.constituents() {
        let d = specht_dim(lam)?;
        acc += &d * &d;
    }
    Ok(acc)
}

/// Plancherel measure of the restriction to `A_n`. A conjugate pair
/// `{λ, λ'}` restricts to one irreducible of dimension `dim λ`; a
/// self-conjugate `λ` splits into two of dimension `dim λ / 2`.
pub fn an_plancherel(dec: &Decomposition) -> Result<BigUint> {
    if dec.n() < 2 {
        return Err(domain("alternating group measure needs n >= 2"));
    }
    let mut acc = BigUint::zero();
    for lam in dec.constituents() {
        let conj = lam.conjugate();
        let d = specht_dim(lam)?;
        if conj == *lam {
            let (half, rem) = d.div_rem(&BigUint::from(2u32));
            if !rem.is_zero() {
                return Err(arithmetic(alloc::format!("self-conjugate {lam} has odd dimension {d}")));
            }
            acc += BigUint::from(2u32) * &half * &half;
        } else if conj > *lam || dec.multiplicity(&conj).is_zero() {
            // count each conjugate pair once
            acc += &d * &d;
        }
    }
    Ok(acc)
}

/// `f(i, j) = max(1, |i - j|)`.
pub fn f_pair(i: i64, j: i64) -> u64 {
    (i - j).unsigned_abs().max(1)
}

/// `F(i, k) = Π_{j=1..k} f(i, j)`; `F(i, 0) = 1`.
pub fn f_prod(i: i64, k: usize) -> BigUint {
    (1..=k as i64).fold(BigUint::one(), |acc, j| acc * f_pair(i, j))
}

/// `G(λ) = Π_{i ≤ d} (λ_i - i)! (λ'_i - i)!` over the diagonal.
pub fn g_diagonal(lam: &Partition) -> BigUint {
    let conj = lam.conjugate();
    (1..=lam.diagonal_length()).fold(BigUint::one(), |acc, i| {
        acc * factorial(lam.part(i) - i) * factorial(conj.part(i) - i)
    })
}

/// `G(λ) = Π_{(i,j) ∈ λ} f(i, j)`.
pub fn g_nodewise(lam: &Partition) -> BigUint {
    lam.nodes()
        .fold(BigUint::one(), |acc, n| acc * f_pair(n.row as i64, n.col as i64))
}

/// `G(λ)` by both formulas, which must agree.
pub fn g_of(lam: &Partition) -> Result<BigUint> {
    let a = g_diagonal(lam);
    let b = g_nodewise(lam);
    if a != b {
        return Err(arithmetic(alloc::format!("G({lam}): diagonal {a} != nodewise {b}")));
    }
    Ok(a)
}

/// Ratio `num/den` kept in lowest terms for reporting.
fn ratio_string(num: &BigUint, den: &BigUint) -> alloc::string::String {
    let g = num.gcd(den);
    alloc::format!("{}/{}", num / &g, den / &g)
}

/// Exhaustive check of `F(i, j+k) ≤ 3^{j+k} F(i, j) F(i, k)`.
pub fn check_f_submultiplicative(max_i: usize, max_j: usize, max_k: usize) -> Result<VerificationReport> {
    for (name, v) in [("max_i", max_i), ("max_j", max_j), ("max_k", max_k)] {
        check_cap(name, v, F_SWEEP_CAP)?;
    }
    let mut report = VerificationReport::new("F_submultiplicative")
        .with_param("max_i", max_i as i64)
        .with_param("max_j", max_j as i64)
        .with_param("max_k", max_k as i64);
    // `worst[0]` ranges over all (j, k); `worst[1]` only over j, k >= 1,
    // since j = k = 0 always gives ratio 1.
    type Ratio = (BigUint, BigUint, (usize, usize, usize));
    let mut worst: [Option<Ratio>; 2] = [None, None];
    for i in 1..=max_i {
        let table: Vec<BigUint> = (0..=max_j + max_k).map(|k| f_prod(i as i64, k)).collect();
        for j in 0..=max_j {
            for k in 0..=max_k {
                let lhs = &table[j + k];
                let rhs = pow(3, j + k) * &table[j] * &table[k];
                report.check(*lhs <= rhs, || {
                    Failure::new()
                        .with("i", i)
                        .with("j", j)
                        .with("k", k)
                        .with("lhs", lhs.clone())
                        .with("rhs", rhs.clone())
                });
                let slots: &[usize] = if j > 0 && k > 0 { &[0, 1] } else { &[0] };
                for &slot in slots {
                    let better = match &worst[slot] {
                        None => true,
                        Some((wn, wd, _)) => lhs * wd > wn * &rhs,
                    };
                    if better {
                        worst[slot] = Some((lhs.clone(), rhs.clone(), (i, j, k)));
                    }
                }
            }
        }
    }
    for (slot, suffix) in [(0, ""), (1, "_nontrivial")] {
        if let Some((num, den, (i, j, k))) = &worst[slot] {
            report.observe(&alloc::format!("worst_ratio{suffix}"), ratio_string(num, den));
            report.observe(&alloc::format!("worst_at{suffix}"), alloc::format!("i={i},j={j},k={k}"));
        }
    }
    Ok(report)
}

/// Exhaustive check of `G(λ+μ) ≤ 3^{|λ|+|μ|} G(λ) G(μ)` for `|λ|+|μ| ≤ max_n`.
pub fn check_g_submultiplicative(max_n: usize) -> Result<VerificationReport> {
    check_cap("G sweep", max_n, G_SWEEP_CAP)?;
    let by_size: Vec<Vec<(Partition, BigUint)>> = (0..=max_n)
        .map(|k| {
            enumerate_partitions(k)?
                .into_iter()
                .map(|l| g_of(&l).map(|g| (l, g)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new("G_submultiplicative").with_param("max_n", max_n as i64);
    for l in 0..=max_n {
        for m in 0..=max_n - l {
            let bound = pow(3, l + m);
            for (lam, gl) in &by_size[l] {
                for (mu, gm) in &by_size[m] {
                    let nu = lam.sum(mu);
                    let gn = g_of(&nu)?;
                    let rhs = &bound * gl * gm;
                    report.check(gn <= rhs, || {
                        Failure::new()
                            .with("lambda", lam)
                            .with("mu", mu)
                            .with("lhs", gn.clone())
                            .with("rhs", rhs.clone())
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Agreement of the two formulas for `G` on every `λ ⊢ n ≤ max_n`.
pub fn check_g_formulas(max_n: usize) -> Result<VerificationReport> {
    check_cap("G formula sweep", max_n, DIMENSION_SWEEP_CAP)?;
    let mut report = VerificationReport::new("G_dual_formula").with_param("max_n", max_n as i64);
    for n in 0..=max_n {
        for lam in enumerate_partitions(n)? {
            let (a, b) = (g_diagonal(&lam), g_nodewise(&lam));
            report.check(a == b, || {
                Failure::new().with("lambda", &lam).with("diagonal", a.clone()).with("nodewise", b.clone())
            });
        }
    }
    Ok(report)
}

/// For `λ ⊢ n ≤ max_n` with level `l ≤ n/3`:
/// `binom(n,l) dim(λ̄) ≤ 2 dim(λ)`, `dim(λ) ≤ binom(n,l) dim(λ̄)` and, for
/// `l ≥ 1`, `l^l dim(λ) ≥ (n-2l)^l`.
pub fn check_lambda_vs_bar(max_n: usize) -> Result<VerificationReport> {
    check_cap("lambda vs bar sweep", max_n, DIMENSION_SWEEP_CAP)?;
    let mut report = VerificationReport::new("lambda_vs_bar").with_param("max_n", max_n as i64);
    for n in 1..=max_n {
        for lam in enumerate_partitions(n)? {
            let l = lam.level();
            if 3 * l > n {
                continue;
            }
            let dim = specht_dim(&lam)?;
            let scaled_bar = binomial(n, l) * specht_dim(&lam.bar())?;
            report.check(scaled_bar <= (BigUint::from(2u32) * &dim), || {
                Failure::new().with("lambda", &lam).with("bound", "lower").with("dim", dim.clone())
            });
            report.check(dim <= scaled_bar, || {
                Failure::new().with("lambda", &lam).with("bound", "upper").with("dim", dim.clone())
            });
            if l >= 1 {
                let lhs = pow(l as u64, l) * &dim;
                let rhs = pow((n - 2 * l) as u64, l);
                report.check(lhs >= rhs, || {
                    Failure::new().with("lambda", &lam).with("bound", "power").with("dim", dim.clone())
                });
            }
        }
    }
    Ok(report)
}

/// `dim(λ)² · l! ≤ n^{2l}` for every `λ ⊢ n ≤ max_n`, `l` the level.
pub fn check_lambda_upper(max_n: usize) -> Result<VerificationReport> {
    check_cap("lambda upper sweep", max_n, DIMENSION_SWEEP_CAP)?;
    let mut report = VerificationReport::new("lambda_upper").with_param("max_n", max_n as i64);
    for n in 1..=max_n {
        for lam in enumerate_partitions(n)? {
            let l = lam.level();
            let dim = specht_dim(&lam)?;
            let lhs = &dim * &dim * factorial(l);
            let rhs = pow(n as u64, 2 * l);
            report.check(lhs <= rhs, || {
                Failure::new().with("lambda", &lam).with("lhs", lhs.clone()).with("rhs", rhs.clone())
            });
        }
    }
    Ok(report)
}

/// Lower bound for `dim D^λ` at level `l`: `binom(⌊n/2⌋, l)` for `p ≠ 2`,
/// `2^l binom(⌊n/3⌋, l)` for `p = 2`.
pub fn dim_lower_bound(n: usize, l: usize, p: Characteristic) -> BigUint {
    if p.get() == 2 {
        pow(2, l) * binomial(n / 3, l)
    } else {
        binomial(n / 2, l)
    }
}

/// `dim S^λ ≥ binom(⌊n/2⌋, min(l, ⌊n/2⌋))` for every `λ ⊢ n ≤ max_n`.
pub fn check_dim_bound_char0(max_n: usize) -> Result<VerificationReport> {
    check_cap("dimension bound sweep", max_n, DIM_BOUND_CAP)?;
    let mut report = VerificationReport::new("dim_bound").with_param("max_n", max_n as i64).with_param("p", 0);
    for n in 1..=max_n {
        for lam in enumerate_partitions(n)? {
            let r = lam.level().min(n / 2);
            let dim = specht_dim(&lam)?;
            let bound = binomial(n / 2, r);
            report.check(dim >= bound, || {
                Failure::new().with("lambda", &lam).with("dim", dim.clone()).with("bound", bound.clone())
            });
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRecord {
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    pub plancherel_v: BigUint,
    pub plancherel_w: BigUint,
    pub plancherel_tensor: BigUint,
    /// `ln|V⊗W| / ln(|V||W|)`; `None` when `|V||W| = 1`.
    pub exponent: Option<f64>,
    /// Some constituent has level `level(λ) + level(μ)`.
    pub max_level_witness: bool,
}

impl GrowthRecord {
    /// Whether the maximal-level constituent is guaranteed:
    /// `1 ≤ level(λ) + level(μ) ≤ n/2`.
    pub fn witness_expected(&self) -> bool {
        let s = self.lambda.level() + self.mu.level();
        s >= 1 && 2 * s <= self.n
    }
}

/// Plancherel measures of `S^λ`, `S^μ` and `S^λ ⊗ S^μ`.
pub fn growth_report(table: &CharacterTable, lam: &Partition, mu: &Partition) -> Result<GrowthRecord> {
    let n = table.n();
    check_cap("growth report", n, GROWTH_CAP)?;
    let dec = kronecker_decompose(table, lam, mu)?;
    let dl = specht_dim(lam)?;
    let dm = specht_dim(mu)?;
    let pv = &dl * &dl;
    let pw = &dm * &dm;
    let pt = plancherel(&dec)?;
    let base = &pv * &pw;
    let exponent = if base.is_one() { None } else { Some(ln_biguint(&pt) / ln_biguint(&base)) };
    let target = lam.level() + mu.level();
    let max_level_witness = dec.constituents().any(|nu| nu.level() == target);
    Ok(GrowthRecord {
        n,
        lambda: lam.clone(),
        mu: mu.clone(),
        plancherel_v: pv,
        plancherel_w: pw,
        plancherel_tensor: pt,
        exponent,
        max_level_witness,
    })
}

/// Growth records for every unordered pair `λ ≤ μ` of partitions of `n`.
pub fn growth_sweep<P: ParallelMap>(table: &CharacterTable, par: &P) -> Result<Vec<GrowthRecord>> {
    check_cap("growth sweep", table.n(), GROWTH_CAP)?;
    let classes = table.classes();
    let rows = par.map_indexed(classes.len(), |i| {
        classes[i..]
            .iter()
            .map(|mu| growth_report(table, &classes[i], mu))
            .collect::<Result<Vec<_>>>()
    });
    let mut out = Vec::new();
    for r in rows {
        out.extend(r?);
    }
    Ok(out)
}

/// Exact `|U|_{S_n}` and `|U|_{A_n}` for reporting the splitting bounds.
pub fn alternating_bounds_hold(dec: &Decomposition) -> Result<bool> {
    let g = plancherel(dec)?;
    let s = an_plancherel(dec)?;
    Ok(g >= s && BigInt::from(s) * 2 >= BigInt::from(g))
}
