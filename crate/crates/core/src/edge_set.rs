//! Edge subsets as bit masks, and total orders on the edge set.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of edges a graph may carry; subsets are stored in a `u64`.
pub const MAX_EDGES: usize = 64;

/// A subset of the edges of some host graph, one bit per edge index.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    /// All edges of a graph with `n` edges.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_EDGES);
        if n == MAX_EDGES {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        EdgeSet(1u64 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(EdgeSet::EMPTY, |s, e| s.with(e))
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Self {
        EdgeSet(self.0 | 1u64 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Self {
        EdgeSet(self.0 & !(1u64 << e))
    }

    #[inline]
    pub fn toggled(self, e: usize) -> Self {
        EdgeSet(self.0 ^ 1u64 << e)
    }

    pub fn union(self, other: Self) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        EdgeSet(self.0 ^ other.0)
    }

    /// Complement inside a graph with `n` edges.
    pub fn complement(self, n: usize) -> Self {
        EdgeSet::full(n).difference(self)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Edge indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> impl Iterator<Item = EdgeSet> {
        let full = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = EdgeSet(cur);
            if cur == full {
                done = true;
            } else {
                cur = (cur.wrapping_sub(full)) & full;
            }
            Some(out)
        })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A total order on the edges of a graph: `rank[e]` is the position of edge `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeOrder {
    rank: Vec<usize>,
}

impl EdgeOrder {
    /// Edges ordered by index.
    pub fn identity(n: usize) -> Self {
        EdgeOrder {
            rank: (0..n).collect(),
        }
    }

    /// Builds an order from the sequence of edges, lowest first.
    pub fn from_sequence(seq: &[usize], n: usize) -> Result<Self> {
        if seq.len() != n {
            return Err(Error::InvalidOrder(format!(
                "expected {n} edges, got {}",
                seq.len()
            )));
        }
        let mut rank = vec![usize::MAX; n];
        for (pos, &e) in seq.iter().enumerate() {
            if e >= n || rank[e] != usize::MAX {
                return Err(Error::InvalidOrder(format!("edge index {e} repeated or out of range")));
            }
            rank[e] = pos;
        }
        Ok(EdgeOrder { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    /// `a ≺ b`
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// Edges listed from lowest to highest.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.rank.len()];
        for (e, &r) in self.rank.iter().enumerate() {
            seq[r] = e;
        }
        seq
    }
}
