use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// The four families of variables the engine works with.
///
/// The declaration order is also the canonical block order inside a
/// [`VarSet`], so a mixed set always lists Chern variables before Segre
/// variables, and so on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKind {
    /// `c1, …, cr`, `ci` of weight `i`.
    Chern,
    /// `s1, …, sn`, `si` of weight `i`.
    Segre,
    /// `t1, …, tr`, formal Chern roots, weight 1.
    Root,
    /// `u1, …, um`, first Chern classes of the tautological line bundles, weight 1.
    Formal,
}

impl VarKind {
    pub fn letter(self) -> char {
        match self {
            VarKind::Chern => 'c',
            VarKind::Segre => 's',
            VarKind::Root => 't',
            VarKind::Formal => 'u',
        }
    }

    pub fn from_letter(letter: char) -> Option<Self> {
        match letter {
            'c' => Some(VarKind::Chern),
            's' => Some(VarKind::Segre),
            't' => Some(VarKind::Root),
            'u' => Some(VarKind::Formal),
            _ => None,
        }
    }

    /// Grading weight of the `index`-th variable (1-based).
    pub fn weight(self, index: u32) -> i64 {
        match self {
            VarKind::Chern | VarKind::Segre => i64::from(index),
            VarKind::Root | VarKind::Formal => 1,
        }
    }
}

/// A single variable, e.g. `c2` or `t4`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub kind: VarKind,
    pub index: u32,
}

impl Var {
    pub fn new(kind: VarKind, index: u32) -> Self {
        Var { kind, index }
    }

    pub fn chern(index: u32) -> Self {
        Var::new(VarKind::Chern, index)
    }

    pub fn segre(index: u32) -> Self {
        Var::new(VarKind::Segre, index)
    }

    pub fn root(index: u32) -> Self {
        Var::new(VarKind::Root, index)
    }

    pub fn formal(index: u32) -> Self {
        Var::new(VarKind::Formal, index)
    }

    pub fn weight(self) -> i64 {
        self.kind.weight(self.index)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.index)
    }
}

/// An ordered collection of variable blocks, at most one block per kind.
///
/// Exponent vectors of monomials are laid out block after block in
/// [`VarKind`] order. The empty set is the ring of constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VarSet {
    blocks: Vec<(VarKind, u32)>,
}

impl VarSet {
    pub fn empty() -> Self {
        VarSet::default()
    }

    pub fn single(kind: VarKind, count: u32) -> Self {
        let blocks = if count == 0 {
            vec![]
        } else {
            vec![(kind, count)]
        };
        VarSet { blocks }
    }

    pub fn chern(rank: u32) -> Self {
        VarSet::single(VarKind::Chern, rank)
    }

    pub fn segre(n: u32) -> Self {
        VarSet::single(VarKind::Segre, n)
    }

    pub fn roots(rank: u32) -> Self {
        VarSet::single(VarKind::Root, rank)
    }

    pub fn formal(m: u32) -> Self {
        VarSet::single(VarKind::Formal, m)
    }

    /// Builds a set from `(kind, count)` pairs; zero counts are dropped.
    pub fn from_blocks(blocks: impl IntoIterator<Item = (VarKind, u32)>) -> Result<Self> {
        let mut blocks: Vec<_> = blocks.into_iter().filter(|&(_, n)| n > 0).collect();
        blocks.sort();
        if blocks.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Contract(
                "a variable set holds at most one block per kind".into(),
            ));
        }
        Ok(VarSet { blocks })
    }

    /// Adjoins the blocks of `other`. Kinds present in both must agree in size.
    pub fn union(&self, other: &VarSet) -> Result<Self> {
        let mut blocks = self.blocks.clone();
        for &(kind, count) in &other.blocks {
            match self.count(kind) {
                0 => blocks.push((kind, count)),
                c if c == count => {}
                _ => {
                    return Err(Error::VarSetMismatch {
                        lhs: self.clone(),
                        rhs: other.clone(),
                    })
                }
            }
        }
        VarSet::from_blocks(blocks)
    }

    pub fn without(&self, kind: VarKind) -> Self {
        VarSet {
            blocks: self
                .blocks
                .iter()
                .copied()
                .filter(|b| b.0 != kind)
                .collect(),
        }
    }

    pub fn blocks(&self) -> &[(VarKind, u32)] {
        &self.blocks
    }

    /// Total number of variables.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.1 as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The kind of a single-block set.
    pub fn kind(&self) -> Option<VarKind> {
        match self.blocks.as_slice() {
            [(kind, _)] => Some(*kind),
            _ => None,
        }
    }

    pub fn count(&self, kind: VarKind) -> u32 {
        self.blocks.iter().find(|b| b.0 == kind).map_or(0, |b| b.1)
    }

    pub fn block_range(&self, kind: VarKind) -> Option<Range<usize>> {
        let mut start = 0;
        for &(k, n) in &self.blocks {
            if k == kind {
                return Some(start..start + n as usize);
            }
            start += n as usize;
        }
        None
    }

    pub fn position(&self, var: Var) -> Option<usize> {
        let range = self.block_range(var.kind)?;
        if var.index == 0 || var.index as usize > range.len() {
            return None;
        }
        Some(range.start + var.index as usize - 1)
    }

    pub fn var_at(&self, pos: usize) -> Var {
        let mut start = 0;
        for &(kind, n) in &self.blocks {
            if pos < start + n as usize {
                return Var::new(kind, (pos - start + 1) as u32);
            }
            start += n as usize;
        }
        panic!("position {pos} out of range for {self}")
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.blocks
            .iter()
            .flat_map(|&(kind, n)| (1..=n).map(move |i| Var::new(kind, i)))
    }

    pub fn weights(&self) -> Vec<i64> {
        self.vars().map(Var::weight).collect()
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|&(k, n)| format!("{}1..{}{}", k.letter(), k.letter(), n))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_are_canonically_ordered() {
        let mixed = VarSet::roots(3).union(&VarSet::segre(2)).unwrap();
        assert_eq!(mixed.blocks(), &[(VarKind::Segre, 2), (VarKind::Root, 3)]);
        assert_eq!(mixed.position(Var::root(1)), Some(2));
        assert_eq!(mixed.var_at(1), Var::segre(2));
        assert_eq!(mixed.weights(), vec![1, 2, 1, 1, 1]);
        assert_eq!(mixed.position(Var::root(4)), None);
    }

    #[test]
    fn union_rejects_size_conflicts() {
        assert!(VarSet::chern(3).union(&VarSet::chern(4)).is_err());
        assert_eq!(
            VarSet::chern(3).union(&VarSet::chern(3)).unwrap(),
            VarSet::chern(3)
        );
    }

    #[test]
    fn chern_weights_follow_index() {
        assert_eq!(VarSet::chern(4).weights(), vec![1, 2, 3, 4]);
        assert_eq!(VarSet::formal(2).weights(), vec![1, 1]);
    }
}
