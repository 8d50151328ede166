//! Bit-parallel subsets of a finite point universe.
//!
//! A [`PointSet`] carries the size of its universe so that complements and
//! cross-space mixups are caught at the call site instead of producing
//! silently wrong masks. Universes are capped at 64 points.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported universe.
pub const MAX_POINTS: usize = 64;

/// A subset of the points `0..n` of one semitopology, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    bits: u64,
    n: u8,
}

impl PointSet {
    /// The empty subset of a universe with `n` points.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "universe too large: {n} > {MAX_POINTS}");
        PointSet { bits: 0, n: n as u8 }
    }

    /// The full universe of `n` points.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "universe too large: {n} > {MAX_POINTS}");
        let bits = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        PointSet { bits, n: n as u8 }
    }

    /// The singleton `{p}`.
    pub fn singleton(n: usize, p: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(p);
        s
    }

    /// Builds a set from point indices; indices must lie below `n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut s = Self::empty(n);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Raw mask accessor, mainly for hashing/serialization.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Size of the universe this set lives in.
    pub fn universe_len(&self) -> usize {
        self.n as usize
    }

    pub fn insert(&mut self, p: usize) {
        assert!(p < self.n as usize, "point {p} outside universe 0..{}", self.n);
        self.bits |= 1 << p;
    }

    pub fn contains(&self, p: usize) -> bool {
        p < self.n as usize && self.bits & (1 << p) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.n as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check(other);
        PointSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check(other);
        PointSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check(other);
        PointSet { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn complement(&self) -> Self {
        PointSet { bits: Self::full(self.n as usize).bits & !self.bits, n: self.n }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    /// Nonempty intersection. Empty sets intersect nothing, including themselves.
    pub fn intersects(&self, other: &Self) -> bool {
        self.check(other);
        self.bits & other.bits != 0
    }

    /// Nonempty intersection inside `scope`: `self ∩ scope ∩ other ≠ ∅`.
    pub fn intersects_within(&self, scope: &Self, other: &Self) -> bool {
        self.check(other);
        self.check(scope);
        self.bits & scope.bits & other.bits != 0
    }

    /// Ascending point indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.n as usize;
        (0..n).filter(move |&i| self.bits & (1 << i) != 0)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "point sets from different universes");
    }
}

/// Canonical order: by cardinality, then lexicographic on ascending indices.
/// Used for deterministic report and partition output.
impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| {
                // Lexicographic on ascending indices: the smallest index is
                // the most significant reversed bit, and holding a smaller
                // first-differing index means a *larger* reversed mask.
                other.bits.reverse_bits().cmp(&self.bits.reverse_bits())
            })
            .then_with(|| self.n.cmp(&other.n))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}
