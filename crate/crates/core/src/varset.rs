//! Bitset over variable (or vertex) indices.
//!
//! Indices `0..n` are the x-block and `n..n+m` the y-block of a
//! [`VariableUniverse`](crate::VariableUniverse). The representation limits a
//! universe to 64 variables; every enumerating operation checks this.

use std::cmp::Ordering;
use std::fmt;

/// Largest universe a [`VarSet`] can address.
pub const MAX_VARS: usize = 64;

/// A set of variable indices, stored as a bitmask.
///
/// Ordering is lexicographic on the ascending index sequence, so `{0,1} <
/// {0,2} < {1}` and a prefix sorts before its extensions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, …, len-1}`.
    pub fn full(len: usize) -> Self {
        assert!(len <= MAX_VARS, "universe of {len} exceeds {MAX_VARS}");
        if len == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << len) - 1)
        }
    }

    /// The contiguous range `{start, …, start+len-1}`.
    pub fn range(start: usize, len: usize) -> Self {
        VarSet(Self::full(len).0 << start)
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_VARS);
        VarSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VarSet::EMPTY, |acc, i| acc.with(i))
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | Self::singleton(i).0)
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1u64 << i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VarSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Largest index plus one, or zero for the empty set.
    pub fn span(self) -> usize {
        MAX_VARS - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    /// All subsets of `self` with exactly `k` elements, in lexicographic order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VarSet> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let len = elems.len();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(VarSet::from_indices(idx.iter().map(|&p| elems[p])));
            let mut p = k;
            while p > 0 && idx[p - 1] == p - 1 + len - k {
                p -= 1;
            }
            if p == 0 {
                return out;
            }
            idx[p - 1] += 1;
            for q in p..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both sets agree below the lowest differing index `t`.
        let t = diff.trailing_zeros();
        let above = !((1u64 << t) - 1);
        let self_has = self.0 >> t & 1 == 1;
        let lacking = if self_has { other.0 } else { self.0 };
        // The set lacking `t` is a prefix of the other iff it has nothing at or above `t`.
        let lacking_is_prefix = lacking & above == 0;
        if self_has == lacking_is_prefix {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VarSet::from_indices(iter)
    }
}

/// Ascending iterator over the indices of a [`VarSet`].
#[derive(Clone)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl DoubleEndedIterator for Indices {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << i);
        Some(i)
    }
}

impl ExactSizeIterator for Indices {}

/// Keep only the inclusion-minimal sets, sorted canonically.
pub fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keep only the inclusion-maximal sets, sorted canonically.
pub fn maximal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}
