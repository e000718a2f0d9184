//! Signatures, normal and good nodes, and the crystal operators `ẽ_i`.
//!
//! Signatures are read along the rim from bottom left to top right. The
//! `i`-good node is the earliest surviving `-` in that reading.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Error, Result};
use crate::partition::{Characteristic, Node, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// An `i`-addable node.
    Plus,
    /// An `i`-removable node.
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedNode {
    pub sign: Sign,
    pub node: Node,
}

/// A sequence of signed nodes in rim order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignatureString {
    pub entries: Vec<SignedNode>,
}

impl SignatureString {
    pub fn new(entries: Vec<SignedNode>) -> Self {
        SignatureString { entries }
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.entries.iter().map(|e| e.sign).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nodes carrying a `-`.
    pub fn minus_nodes(&self) -> Vec<Node> {
        self.entries
            .iter()
            .filter(|e| e.sign == Sign::Minus)
            .map(|e| e.node)
            .collect()
    }
}

/// Renders as `+(3,1) -(1,2)`.
impl fmt::Display for SignatureString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}", e.sign.symbol(), e.node)?;
        }
        Ok(())
    }
}

fn check_residue(i: i64, p: Characteristic) -> Result<()> {
    if !p.is_zero() && !(0..p.get() as i64).contains(&i) {
        return Err(Error::InvalidResidue { residue: i, p: p.get() });
    }
    Ok(())
}

/// The `i`-signature of `lam`: `+` for `i`-addable and `-` for `i`-removable
/// nodes, bottom left to top right.
pub fn i_signature(lam: &Partition, i: i64, p: Characteristic) -> Result<SignatureString> {
    check_residue(i, p)?;
    let mut entries: Vec<SignedNode> = lam
        .addable_nodes()
        .into_iter()
        .filter(|n| n.residue(p) == i)
        .map(|node| SignedNode { sign: Sign::Plus, node })
        .chain(
            lam.removable_nodes()
                .into_iter()
                .filter(|n| n.residue(p) == i)
                .map(|node| SignedNode { sign: Sign::Minus, node }),
        )
        .collect();
    entries.sort_by(|a, b| b.node.row.cmp(&a.node.row).then(a.node.col.cmp(&b.node.col)));
    Ok(SignatureString { entries })
}

/// Erases adjacent `-+` pairs until none remain.
pub fn reduced_signature(sig: &SignatureString) -> SignatureString {
    let mut stack: Vec<SignedNode> = Vec::with_capacity(sig.len());
    for &e in &sig.entries {
        match (stack.last(), e.sign) {
            (Some(top), Sign::Plus) if top.sign == Sign::Minus => {
                stack.pop();
            }
            _ => stack.push(e),
        }
    }
    SignatureString { entries: stack }
}

/// `i`-normal nodes in rim order.
pub fn normal_nodes(lam: &Partition, i: i64, p: Characteristic) -> Result<Vec<Node>> {
    Ok(reduced_signature(&i_signature(lam, i, p)?).minus_nodes())
}

/// `ε_i(λ)`, the number of `i`-normal nodes.
pub fn epsilon(lam: &Partition, i: i64, p: Characteristic) -> Result<usize> {
    Ok(normal_nodes(lam, i, p)?.len())
}

/// The `i`-good node, if `ε_i(λ) > 0`.
pub fn good_node(lam: &Partition, i: i64, p: Characteristic) -> Result<Option<Node>> {
    Ok(normal_nodes(lam, i, p)?.first().copied())
}

/// `ẽ_i^k λ`, or `None` when `k > ε_i(λ)`.
pub fn e_tilde(lam: &Partition, i: i64, p: Characteristic, k: usize) -> Result<Option<Partition>> {
    check_residue(i, p)?;
    let mut current = lam.clone();
    for _ in 0..k {
        let Some(node) = good_node(&current, i, p)? else {
            return Ok(None);
        };
        current = current
            .remove_node(node)
            .expect("normal nodes are removable");
    }
    Ok(Some(current))
}

/// Residues that occur among the removable nodes of `lam`, ascending.
pub fn removable_residues(lam: &Partition, p: Characteristic) -> Vec<i64> {
    let mut res: Vec<i64> = lam.removable_nodes().iter().map(|n| n.residue(p)).collect();
    res.sort_unstable();
    res.dedup();
    res
}

/// All normal nodes of `lam` over every residue, as `(residue, node)`.
pub fn all_normal_nodes(lam: &Partition, p: Characteristic) -> Result<Vec<(i64, Node)>> {
    let mut out = Vec::new();
    for i in removable_residues(lam, p) {
        out.extend(normal_nodes(lam, i, p)?.into_iter().map(|n| (i, n)));
    }
    Ok(out)
}

fn require_regular(lam: &Partition, p: Characteristic) -> Result<()> {
    if !lam.is_p_regular(p) {
        return Err(domain(alloc::format!("{lam} is not {p}-regular")));
    }
    Ok(())
}

/// Exactly one normal node over all residues.
pub fn is_jantzen_seitz(lam: &Partition, p: Characteristic) -> Result<bool> {
    require_regular(lam, p)?;
    Ok(all_normal_nodes(lam, p)?.len() == 1)
}

/// `r₂(D^λ) = min(level, ⌊n/2⌋)` for `p ≠ 2`, `r₃(D^λ) = min(level, ⌊n/3⌋)`
/// for `p = 2`.
pub fn rank_formula(lam: &Partition, p: Characteristic) -> Result<usize> {
    require_regular(lam, p)?;
    let n = lam.size();
    let cap = if p.get() == 2 { n / 3 } else { n / 2 };
    Ok(lam.level().min(cap))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankKind {
    Rank2,
    Rank3,
}

/// Ranks of Specht modules in characteristic zero.
pub fn specht_rank_formula(lam: &Partition, kind: RankKind) -> usize {
    let n = lam.size();
    match kind {
        RankKind::Rank2 => lam.level().min(n / 2),
        RankKind::Rank3 => lam.level().min(lam.conjugate().level()).min(n / 3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ch(p: u32) -> Characteristic {
        Characteristic::new(p).unwrap()
    }

    fn sig(signs: &[Sign]) -> SignatureString {
        SignatureString::new(
            signs
                .iter()
                .enumerate()
                .map(|(k, &sign)| SignedNode { sign, node: Node::new(10 - k, k + 1) })
                .collect(),
        )
    }

    use Sign::{Minus as M, Plus as P};

    #[test]
    fn signatures() {
        let s = i_signature(&p(&[2, 1]), 1, ch(2)).unwrap();
        assert_eq!(s.signs(), vec![M, M]);
        assert_eq!(s.minus_nodes(), vec![Node::new(2, 1), Node::new(1, 2)]);
        let s = i_signature(&p(&[5]), 4, Characteristic::ZERO).unwrap();
        assert_eq!(s.to_string(), "-(1,5)");
        let s = i_signature(&p(&[2, 1]), 1, ch(3)).unwrap();
        assert_eq!(s.to_string(), "+(3,1) -(1,2)");
        assert!(i_signature(&p(&[2, 1]), 3, ch(3)).is_err());
        assert!(i_signature(&p(&[2, 1]), -1, ch(3)).is_err());
    }

    #[test]
    fn reduction() {
        assert!(reduced_signature(&sig(&[M, P])).is_empty());
        assert_eq!(reduced_signature(&sig(&[P, M])).signs(), vec![P, M]);
        assert_eq!(reduced_signature(&sig(&[M, M, P, M])).signs(), vec![M, M]);
        assert_eq!(reduced_signature(&sig(&[M, M, P, P, P])).signs(), vec![P]);
    }

    #[test]
    fn normal_and_good() {
        assert_eq!(epsilon(&p(&[2, 1]), 1, ch(2)).unwrap(), 2);
        assert_eq!(epsilon(&p(&[2, 1]), 2, ch(3)).unwrap(), 0);
        for i in -3..8 {
            let e = epsilon(&p(&[5]), i, Characteristic::ZERO).unwrap();
            assert_eq!(e, (i == 4) as usize);
        }
        assert_eq!(good_node(&p(&[2, 1]), 1, ch(2)).unwrap(), Some(Node::new(2, 1)));
        assert_eq!(e_tilde(&p(&[2, 1]), 1, ch(2), 1).unwrap(), Some(p(&[2])));
        assert_eq!(e_tilde(&p(&[5]), 4, Characteristic::ZERO, 1).unwrap(), Some(p(&[4])));
        assert_eq!(e_tilde(&p(&[2, 1]), 2, ch(3), 1).unwrap(), None);
        assert_eq!(e_tilde(&p(&[2, 1]), 2, ch(3), 0).unwrap(), Some(p(&[2, 1])));
        assert_eq!(e_tilde(&p(&[2, 1]), 1, ch(2), 2).unwrap(), Some(p(&[1])));
        assert_eq!(e_tilde(&p(&[2, 1]), 1, ch(2), 3).unwrap(), None);
    }

    #[test]
    fn jantzen_seitz() {
        assert!(is_jantzen_seitz(&p(&[6]), ch(3)).unwrap());
        assert!(is_jantzen_seitz(&p(&[6]), Characteristic::ZERO).unwrap());
        assert!(is_jantzen_seitz(&p(&[2, 1]), ch(3)).unwrap());
        assert!(!is_jantzen_seitz(&p(&[2, 1]), ch(2)).unwrap());
        assert!(is_jantzen_seitz(&p(&[1, 1]), ch(2)).is_err());
    }

    #[test]
    fn rank_formulas() {
        assert_eq!(rank_formula(&p(&[5, 2]), Characteristic::ZERO).unwrap(), 2);
        assert_eq!(rank_formula(&p(&[7]), ch(5)).unwrap(), 0);
        assert_eq!(rank_formula(&p(&[2, 1]), ch(2)).unwrap(), 1);
        assert!(rank_formula(&p(&[2, 2]), ch(2)).is_err());
        assert_eq!(specht_rank_formula(&p(&[3, 3]), RankKind::Rank3), 2);
        assert_eq!(specht_rank_formula(&p(&[6]), RankKind::Rank2), 0);
        assert_eq!(specht_rank_formula(&Partition::column(6), RankKind::Rank3), 0);
        assert_eq!(specht_rank_formula(&Partition::column(6), RankKind::Rank2), 3);
    }
}
