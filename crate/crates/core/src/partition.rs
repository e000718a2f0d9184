//! Partitions, Young diagrams, nodes and residues.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. The
//! same type indexes irreducible characters and conjugacy classes (cycle
//! types). Nodes are 1-indexed `(row, col)` pairs.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{check_cap, domain, Error, Result};

/// Hard cap on `n` for [`enumerate_partitions`]. `p(60) = 966467`.
pub const ENUMERATION_CAP: usize = 60;

/// Characteristic of the ground field: `0` or an integer `>= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Characteristic(u32);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u32) -> Result<Self> {
        if p == 1 {
            Err(Error::InvalidCharacteristic(p))
        } else {
            Ok(Characteristic(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl TryFrom<u32> for Characteristic {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Characteristic::new(p)
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A node `(row, col)` of the plane, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub const fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    /// `col - row`, the content of the node.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Residue `col - row` reduced into `0..p`, or the plain content for `p = 0`.
    pub fn residue(self, p: Characteristic) -> i64 {
        residue(self, p)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

pub fn residue(node: Node, p: Characteristic) -> i64 {
    let c = node.content();
    if p.is_zero() {
        c
    } else {
        c.rem_euclid(p.get() as i64)
    }
}

/// A partition: weakly decreasing positive parts. The empty partition is the
/// unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, rejecting increasing or zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain("partition parts must be weakly decreasing"));
        }
        Ok(Self::from_sorted_unchecked(parts))
    }

    /// Sorts the parts into weakly decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted_unchecked(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted_unchecked(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed, reading 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    /// Whether the diagram of `other` is contained in this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Level `n - λ₁`.
    pub fn level(&self) -> usize {
        self.size - self.first()
    }

    /// The partition with its first row removed; a partition of the level.
    pub fn bar(&self) -> Partition {
        Self::from_sorted_unchecked(self.parts.iter().skip(1).copied().collect())
    }

    /// Puts `first` back on top of `self`, the inverse of [`Partition::bar`].
    /// Returns `None` when `first` is smaller than the current first part.
    pub fn with_first_row(&self, first: usize) -> Option<Partition> {
        if first == 0 || first < self.first() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Some(Self::from_sorted_unchecked(parts))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&r| r >= c).count())
            .collect();
        Self::from_sorted_unchecked(parts)
    }

    /// Componentwise sum, missing parts read as 0.
    pub fn sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (1..=len).map(|i| self.part(i) + other.part(i)).collect();
        Self::from_sorted_unchecked(parts)
    }

    /// Union of the multisets of parts (used for merging cycle types).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let take_left = j == other.len() || (i < self.len() && self.parts[i] >= other.parts[j]);
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Self::from_sorted_unchecked(parts)
    }

    /// Dominance order. Errors when the sizes differ.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size != other.size {
            return Err(domain("dominance compares partitions of the same size"));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No part value is repeated `p` or more times. Every partition is
    /// 0-regular.
    pub fn is_p_regular(&self, p: Characteristic) -> bool {
        if p.is_zero() {
            return true;
        }
        let p = p.get() as usize;
        self.multiplicities().iter().all(|&(_, m)| m < p)
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Removable nodes, bottom-left to top-right.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let h = self.len();
        (1..=h)
            .rev()
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Node::new(r, self.part(r)))
            .collect()
    }

    /// Addable nodes, bottom-left to top-right.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let h = self.len();
        (1..=h + 1)
            .rev()
            .filter(|&r| r == 1 || self.part(r - 1) > self.part(r))
            .map(|r| Node::new(r, self.part(r) + 1))
            .collect()
    }

    /// Removes a removable node; `None` if `node` is not removable.
    pub fn remove_node(&self, node: Node) -> Option<Partition> {
        let r = node.row;
        if r == 0 || r > self.len() || self.part(r) != node.col || self.part(r + 1) >= node.col {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        if parts[r - 1] == 0 {
            parts.pop();
        }
        Some(Self::from_sorted_unchecked(parts))
    }

    /// Adds an addable node; `None` if `node` is not addable.
    pub fn add_node(&self, node: Node) -> Option<Partition> {
        let r = node.row;
        if r == 0 || r > self.len() + 1 || self.part(r) + 1 != node.col {
            return None;
        }
        if r > 1 && self.part(r - 1) < node.col {
            return None;
        }
        let mut parts = self.parts.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Some(Self::from_sorted_unchecked(parts))
    }

    /// Hook length of a node in the diagram.
    pub fn hook_length(&self, node: Node) -> usize {
        let arm = self.part(node.row) - node.col;
        let leg = self.parts[node.row..].iter().take_while(|&&r| r >= node.col).count();
        arm + leg + 1
    }

    /// All nodes, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| Node::new(i + 1, c)))
    }

    /// Number of nodes on the main diagonal (Durfee size).
    pub fn diagonal_length(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }
}

/// Reverse-lexicographic: larger first parts come first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Accepts `"[5,2,1]"`, `"5,2,1"`, `"[]"` and the empty string.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = match (t.strip_prefix('['), t.strip_suffix(']')) {
            (Some(_), Some(_)) if t.len() >= 2 => &t[1..t.len() - 1],
            (None, None) => t,
            _ => return Err(Error::Parse(alloc::format!("unbalanced brackets in {s:?}"))),
        };
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(alloc::format!("bad part {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| match e {
            Error::Domain(m) => Error::Parse(alloc::format!("{m}: {s:?}")),
            other => other,
        })
    }
}

impl Partition {
    pub fn literal(&self) -> String {
        alloc::format!("{self}")
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    check_cap("partition enumeration", n, ENUMERATION_CAP)?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of every size `0..=n`, indexed by size.
pub fn partitions_up_to(n: usize) -> Result<Vec<Vec<Partition>>> {
    (0..=n).map(enumerate_partitions).collect()
}
