//! Multi-indices: finite sets of direction labels.
//!
//! Cells of a multiple category are graded by the set of directions they
//! extend in.  A [`MultiIndex`] is such a set, stored as a strictly
//! increasing vector of direction labels so equality and ordering are
//! structural.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A finite set of direction labels, kept sorted and duplicate-free.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u8>);

impl MultiIndex {
    /// The empty index (dimension 0).
    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    /// Build from an arbitrary list of directions; sorts and deduplicates.
    pub fn new(mut dirs: Vec<u8>) -> Self {
        dirs.sort_unstable();
        dirs.dedup();
        MultiIndex(dirs)
    }

    /// The singleton index {a}.
    pub fn single(a: u8) -> Self {
        MultiIndex(vec![a])
    }

    /// Number of directions (the dimension of cells of this index).
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: u8) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    /// The position of direction `a` within the sorted index, if present.
    /// Faces and operations on cells are addressed by this position.
    pub fn position_of(&self, a: u8) -> Option<usize> {
        self.0.binary_search(&a).ok()
    }

    /// The direction at `pos`.
    pub fn direction_at(&self, pos: usize) -> u8 {
        self.0[pos]
    }

    /// Directions in increasing order.
    pub fn dirs(&self) -> &[u8] {
        &self.0
    }

    /// This index with `a` added (no-op if already present).
    pub fn with(&self, a: u8) -> Self {
        match self.0.binary_search(&a) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut v = self.0.clone();
                v.insert(pos, a);
                MultiIndex(v)
            }
        }
    }

    /// This index with `a` removed (no-op if absent).
    pub fn without(&self, a: u8) -> Self {
        match self.0.binary_search(&a) {
            Ok(pos) => {
                let mut v = self.0.clone();
                v.remove(pos);
                MultiIndex(v)
            }
            Err(_) => self.clone(),
        }
    }

    /// Union of two indices.
    pub fn union(&self, other: &MultiIndex) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MultiIndex::new(v)
    }

    /// All subsets of this index, in a deterministic order (by size, then
    /// lexicographically).
    pub fn subsets(&self) -> Vec<MultiIndex> {
        let n = self.0.len();
        let mut out: Vec<MultiIndex> = (0u32..(1 << n))
            .map(|mask| {
                MultiIndex(
                    (0..n)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect();
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl From<&[u8]> for MultiIndex {
    fn from(dirs: &[u8]) -> Self {
        MultiIndex::new(dirs.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_dedups() {
        let i = MultiIndex::new(vec![2, 0, 2, 1]);
        assert_eq!(i.dirs(), &[0, 1, 2]);
        assert_eq!(i.dim(), 3);
    }

    #[test]
    fn positions_follow_sorted_order() {
        let i = MultiIndex::new(vec![3, 1]);
        assert_eq!(i.position_of(1), Some(0));
        assert_eq!(i.position_of(3), Some(1));
        assert_eq!(i.position_of(2), None);
        assert_eq!(i.direction_at(1), 3);
    }

    #[test]
    fn with_and_without_are_inverse_on_fresh_labels() {
        let i = MultiIndex::new(vec![0, 2]);
        assert_eq!(i.with(1).dirs(), &[0, 1, 2]);
        assert_eq!(i.with(1).without(1), i);
        assert_eq!(i.without(5), i);
    }

    #[test]
    fn subsets_enumerates_the_power_set() {
        let i = MultiIndex::new(vec![0, 1]);
        let subs = i.subsets();
        assert_eq!(subs.len(), 4);
        assert_eq!(subs[0], MultiIndex::empty());
        assert_eq!(subs[3], i);
    }

    #[test]
    fn display_is_braced_list() {
        assert_eq!(MultiIndex::new(vec![1, 0]).to_string(), "{0,1}");
        assert_eq!(MultiIndex::empty().to_string(), "{}");
    }
}
