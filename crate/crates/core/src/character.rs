//! Ordinary characters of the symmetric groups.
//!
//! Values are computed with the rim-hook (Murnaghan–Nakayama) recursion,
//! always stripping the largest cycle first. Full tables are built layer by
//! layer: the table of `S_k` is assembled from the tables of `S_{k-a}`, which
//! plays the role of the `(partition, remaining cycles)` memo. Every quantity
//! is an exact integer or rational.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{arithmetic, check_cap, domain, Result};
use crate::numbers::factorial;
use crate::parallel::ParallelMap;
use crate::partition::{enumerate_partitions, Partition};

/// Hard cap on `n` for full character tables.
pub const TABLE_CAP: usize = 20;

/// Order of the centralizer of an element of the given cycle type:
/// `prod_k k^{m_k} m_k!`.
pub fn centralizer_order(cycle_type: &Partition) -> BigUint {
    cycle_type
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (k, m)| {
            acc * crate::numbers::pow(k as u64, m) * factorial(m)
        })
}

/// Size of the conjugacy class with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> BigUint {
    factorial(cycle_type.size()) / centralizer_order(cycle_type)
}

/// Dimension of the Specht module, by the hook length formula.
pub fn specht_dim(lam: &Partition) -> Result<BigUint> {
    let hooks = lam
        .nodes()
        .fold(BigUint::one(), |acc, node| acc * lam.hook_length(node) as u64);
    let (q, r) = factorial(lam.size()).div_rem(&hooks);
    if !r.is_zero() {
        return Err(arithmetic(alloc::format!("hook product of {lam} does not divide n!")));
    }
    Ok(q)
}

/// All ways to strip a rim hook of length `len` from `lam`, as
/// `(remaining partition, sign)` with sign `(-1)^{leg length}`.
pub fn rim_hooks(lam: &Partition, len: usize) -> Vec<(Partition, i8)> {
    let h = lam.len();
    let beta: Vec<usize> = (1..=h).map(|i| lam.part(i) + h - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < len {
            continue;
        }
        let target = b - len;
        if beta.contains(&target) {
            continue;
        }
        // beta is strictly decreasing; beads strictly between target and b
        // sit at positions idx+1.. with value > target.
        let between = beta[idx + 1..].iter().take_while(|&&x| x > target).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (h - 1 - i))
            .filter(|&x| x > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_sorted_unchecked(parts), sign));
    }
    out
}

/// Memoized single-value evaluation of characters.
#[derive(Debug, Default)]
pub struct CharacterMemo {
    memo: BTreeMap<(Partition, Partition), BigInt>,
}

impl CharacterMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ` on the class of `cycle_type`.
    pub fn value(&mut self, lam: &Partition, cycle_type: &Partition) -> Result<BigInt> {
        if lam.size() != cycle_type.size() {
            return Err(domain(alloc::format!(
                "character {lam} evaluated on cycle type {cycle_type} of a different size"
            )));
        }
        Ok(self.eval(lam, cycle_type))
    }

    fn eval(&mut self, lam: &Partition, cycles: &Partition) -> BigInt {
        if cycles.is_empty() {
            return BigInt::one();
        }
        let key = (lam.clone(), cycles.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let tail = cycles.bar();
        let mut acc = BigInt::zero();
        for (rest, sign) in rim_hooks(lam, cycles.first()) {
            let v = self.eval(&rest, &tail);
            if sign > 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// `χ^λ(μ)` with a throwaway memo.
pub fn character_value(lam: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    CharacterMemo::new().value(lam, cycle_type)
}

/// An integer-valued class function on `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    /// Fails unless `values` has exactly one entry per partition of `n`.
    pub fn new(n: usize, values: BTreeMap<Partition, BigInt>) -> Result<Self> {
        let classes = enumerate_partitions(n)?;
        if values.len() != classes.len() || classes.iter().any(|c| !values.contains_key(c)) {
            return Err(domain(alloc::format!("class function must cover all partitions of {n}")));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> Option<&BigInt> {
        self.values.get(cycle_type)
    }

    /// Value at the identity.
    pub fn degree(&self) -> &BigInt {
        &self.values[&Partition::column(self.n)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.values.iter()
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(domain("pointwise product of class functions of different n"));
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| (k.clone(), v * &other.values[k]))
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }
}

/// `(1/n!) Σ_μ |C_μ| f(μ) g(μ)`.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    if f.n != g.n {
        return Err(domain("inner product of class functions of different n"));
    }
    let mut acc = BigInt::zero();
    for (mu, fv) in &f.values {
        acc += BigInt::from(class_size(mu)) * fv * &g.values[mu];
    }
    Ok(BigRational::new(acc, factorial(f.n).into()))
}

/// Full character table of `S_n`. Rows (irreducibles) and columns (classes)
/// are both indexed by the partitions of `n` in reverse-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    class_sizes: Vec<BigUint>,
    rows: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    /// Builds the table of `S_n`, distributing rows through `par`.
    pub fn build<P: ParallelMap>(n: usize, par: &P) -> Result<Self> {
        let mut set = TableSet::build(n, par)?;
        Ok(set.tables.pop().expect("table set contains size n"))
    }

    /// Reassembles a table from raw data (e.g. a cache file), checking that
    /// the classes, class sizes and degrees are consistent.
    pub fn from_rows(n: usize, class_sizes: Vec<BigUint>, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        check_cap("character table", n, TABLE_CAP)?;
        let classes = enumerate_partitions(n)?;
        let k = classes.len();
        if class_sizes.len() != k || rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(domain(alloc::format!("character table of S_{n} must be {k}x{k}")));
        }
        for (c, s) in classes.iter().zip(&class_sizes) {
            if *s != class_size(c) {
                return Err(domain(alloc::format!("wrong class size for {c}")));
            }
        }
        let identity = k - 1;
        for (lam, row) in classes.iter().zip(&rows) {
            if row[identity] != BigInt::from(specht_dim(lam)?) {
                return Err(domain(alloc::format!("degree of {lam} disagrees with hook formula")));
            }
        }
        if rows[0].iter().any(|v| !v.is_one()) {
            return Err(domain("first row must be the trivial character"));
        }
        // Row norms, column norms and orthogonality to the trivial row: any
        // single altered entry breaks at least one of these.
        let order = BigInt::from(factorial(n));
        let sizes: Vec<BigInt> = class_sizes.iter().cloned().map(BigInt::from).collect();
        for (lam, row) in classes.iter().zip(&rows) {
            let mut norm = BigInt::zero();
            let mut against_trivial = BigInt::zero();
            for (s, v) in sizes.iter().zip(row) {
                norm += s * v * v;
                against_trivial += s * v;
            }
            let trivial = lam.len() <= 1;
            if norm != order || (!trivial && !against_trivial.is_zero()) {
                return Err(domain(alloc::format!("row {lam} is not an irreducible character")));
            }
        }
        for (j, mu) in classes.iter().enumerate() {
            let col: BigInt = rows.iter().map(|r| &r[j] * &r[j]).sum();
            if col != BigInt::from(centralizer_order(mu)) {
                return Err(domain(alloc::format!("column {mu} fails column orthogonality")));
            }
        }
        let index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        Ok(CharacterTable { n, classes, index, class_sizes, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n`, in row and column order.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn row(&self, lam: &Partition) -> Option<&[BigInt]> {
        self.index_of(lam).map(|i| self.rows[i].as_slice())
    }

    pub fn value(&self, lam: &Partition, cycle_type: &Partition) -> Option<&BigInt> {
        Some(&self.rows[self.index_of(lam)?][self.index_of(cycle_type)?])
    }

    pub fn degree(&self, lam: &Partition) -> Option<&BigInt> {
        self.row(lam).and_then(|r| r.last())
    }

    pub fn class_function(&self, lam: &Partition) -> Option<ClassFunction> {
        let row = self.row(lam)?;
        let values = self.classes.iter().cloned().zip(row.iter().cloned()).collect();
        Some(ClassFunction { n: self.n, values })
    }

    /// `Σ_μ |C_μ| f(μ) g(μ)` for rows given as slices in class order.
    pub fn weighted_sum(&self, f: &[BigInt], g: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for ((s, a), b) in self.class_sizes.iter().zip(f).zip(g) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc += BigInt::from(s.clone()) * a * b;
        }
        acc
    }
}

/// Tables of `S_0, …, S_n`.
#[derive(Debug, Clone)]
pub struct TableSet {
    tables: Vec<CharacterTable>,
}

impl TableSet {
    pub fn build<P: ParallelMap>(n: usize, par: &P) -> Result<Self> {
        check_cap("character table", n, TABLE_CAP)?;
        let mut tables: Vec<CharacterTable> = Vec::with_capacity(n + 1);
        tables.push(CharacterTable {
            n: 0,
            classes: alloc::vec![Partition::empty()],
            index: [(Partition::empty(), 0)].into_iter().collect(),
            class_sizes: alloc::vec![BigUint::one()],
            rows: alloc::vec![alloc::vec![BigInt::one()]],
        });
        let mut set = TableSet { tables };
        set.extend_to(n, par)?;
        Ok(set)
    }

    /// Wraps tables already known for `S_0, …, S_n`, in that order.
    pub fn from_tables(tables: Vec<CharacterTable>) -> Result<Self> {
        if tables.is_empty() || tables.iter().enumerate().any(|(k, t)| t.n != k) {
            return Err(domain("tables must cover S_0, ..., S_n in order"));
        }
        Ok(TableSet { tables })
    }

    /// Extends the set by one layer per step up to `S_n`.
    pub fn extend_to<P: ParallelMap>(&mut self, n: usize, par: &P) -> Result<()> {
        check_cap("character table", n, TABLE_CAP)?;
        for k in self.tables.len()..=n {
            let next = build_layer(k, &self.tables, par)?;
            self.tables.push(next);
        }
        Ok(())
    }

    pub fn tables(&self) -> &[CharacterTable] {
        &self.tables
    }

    pub fn max_n(&self) -> usize {
        self.tables.len() - 1
    }

    pub fn get(&self, k: usize) -> Option<&CharacterTable> {
        self.tables.get(k)
    }

    pub fn into_table(mut self, k: usize) -> Option<CharacterTable> {
        if k < self.tables.len() {
            Some(self.tables.swap_remove(k))
        } else {
            None
        }
    }
}

fn build_layer<P: ParallelMap>(k: usize, lower: &[CharacterTable], par: &P) -> Result<CharacterTable> {
    let classes = enumerate_partitions(k)?;
    let index: BTreeMap<Partition, usize> =
        classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    // Each class strips its largest cycle `a`; the tail lives in S_{k-a}.
    let class_plan: Vec<(usize, usize)> = classes
        .iter()
        .map(|mu| {
            let a = mu.first();
            let tail = mu.bar();
            (a, lower[k - a].index[&tail])
        })
        .collect();
    let rows = par.map_indexed(classes.len(), |r| {
        let lam = &classes[r];
        // hooks[a] = (row index in S_{k-a}, sign) for each rim hook of length a
        let hooks: Vec<Vec<(usize, i8)>> = (0..=k)
            .map(|a| {
                if a == 0 {
                    return Vec::new();
                }
                rim_hooks(lam, a)
                    .into_iter()
                    .map(|(rest, s)| (lower[k - a].index[&rest], s))
                    .collect()
            })
            .collect();
        class_plan
            .iter()
            .map(|&(a, tail_idx)| {
                let mut acc = BigInt::zero();
                for &(row, sign) in &hooks[a] {
                    let v = &lower[k - a].rows[row][tail_idx];
                    if sign > 0 {
                        acc += v;
                    } else {
                        acc -= v;
                    }
                }
                acc
            })
            .collect::<Vec<BigInt>>()
    });
    let class_sizes = classes.iter().map(class_size).collect();
    Ok(CharacterTable { n: k, classes, index, class_sizes, rows })
}

/// Sign of a permutation with the given cycle type.
pub fn sign_of_class(cycle_type: &Partition) -> i8 {
    if (cycle_type.size() - cycle_type.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
