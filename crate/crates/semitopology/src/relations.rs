//! Intersection relations, transitive sets, topens and the maximal-topen
//! partition.
//!
//! A set `T` is *transitive* when any two opens that both meet `T` must meet
//! each other; a *topen* is a nonempty transitive open. Two points are
//! *intertwined* when their pair set is transitive, i.e. every pair of their
//! neighbourhoods meets. Topens are the regions guaranteed to stay in
//! agreement under continuous value assignments, and the maximal ones
//! partition the space together with a residue of leftover points.

use crate::error::{Error, Result};
use crate::set::PointSet;
use crate::space::SemiTopology;

/// Disjoint maximal topens plus the points lying in no topen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopenPartition {
    pub topens: Vec<PointSet>,
    pub residue: PointSet,
}

/// `x ⋔ y`: the sets intersect. False whenever either side is empty.
pub fn between(x: &PointSet, y: &PointSet) -> bool {
    x.intersects(y)
}

/// `x ⋔_y z`: the sets intersect inside `y`.
pub fn between_in(x: &PointSet, y: &PointSet, z: &PointSet) -> bool {
    x.intersects_within(y, z)
}

impl SemiTopology {
    /// Do all pairs of opens meeting `t` meet each other?
    ///
    /// Quantifying over generators suffices: an open meeting `t` contains a
    /// generator meeting `t` (pick a witness point and its covering
    /// generator), and the whole space meets every nonempty open outright.
    pub fn is_transitive(&self, t: &PointSet) -> bool {
        let relevant: Vec<&PointSet> = self.basis().iter().filter(|g| g.intersects(t)).collect();
        for (i, a) in relevant.iter().enumerate() {
            for b in &relevant[i + 1..] {
                if !a.intersects(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Like [`is_transitive`](Self::is_transitive) but the witnessing
    /// intersection must land inside `t` itself.
    ///
    /// Same generator reduction; pairs involving the whole space are
    /// automatic because `P ⋔ t ⋔ O` already exhibits a point of `t ∩ O`.
    pub fn is_strongly_transitive(&self, t: &PointSet) -> bool {
        let relevant: Vec<&PointSet> = self.basis().iter().filter(|g| g.intersects(t)).collect();
        for (i, a) in relevant.iter().enumerate() {
            for b in relevant.iter().skip(i) {
                if !a.intersects_within(t, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Nonempty, open and transitive.
    pub fn is_topen(&self, t: &PointSet) -> bool {
        !t.is_empty() && self.is_open(t) && self.is_transitive(t)
    }

    /// Nonempty, open and strongly transitive.
    pub fn is_strong_topen(&self, t: &PointSet) -> bool {
        !t.is_empty() && self.is_open(t) && self.is_strongly_transitive(t)
    }

    /// Do all nonempty open subsets of `t` pairwise intersect?
    ///
    /// Reduces to generators contained in `t`: a nonempty open subset of `t`
    /// is a union of such generators (or the whole space, when `t` is the
    /// whole space, in which case it meets every nonempty open anyway).
    pub fn is_hyperconnected(&self, t: &PointSet) -> bool {
        let inside: Vec<&PointSet> = self.basis().iter().filter(|g| g.is_subset(t)).collect();
        for (i, a) in inside.iter().enumerate() {
            for b in &inside[i + 1..] {
                if !a.intersects(b) {
                    return false;
                }
            }
        }
        true
    }

    /// Are `p` and `q` intertwined, i.e. does every neighbourhood of `p` meet
    /// every neighbourhood of `q`?
    ///
    /// Generator reduction: every open neighbourhood contains a generator
    /// neighbourhood, except for the implicit whole space, whose pairs meet
    /// trivially (the other side is a nonempty neighbourhood). In particular
    /// a point covered by no generator is intertwined with everything, and
    /// the relation is reflexive.
    pub fn intertwined(&self, p: usize, q: usize) -> bool {
        for a in self.basis_neighbourhoods(p) {
            for b in self.basis_neighbourhoods(q) {
                if !a.intersects(b) {
                    return false;
                }
            }
        }
        true
    }

    /// `∗p`: the set of points intertwined with `p`. Always a closed set.
    pub fn intertwined_of(&self, p: usize) -> PointSet {
        let mut out = self.empty_set();
        for q in self.points() {
            if self.intertwined(p, q) {
                out.insert(q);
            }
        }
        out
    }

    /// Are all points pairwise intertwined? Equivalently: the whole space is
    /// transitive, all nonempty opens pairwise meet, every nonempty open is
    /// topen (the equivalences are exercised in tests).
    pub fn is_intertwined_space(&self) -> bool {
        self.is_transitive(&self.universe())
    }

    /// Partition of the space into its maximal topens plus the residue of
    /// points with no topen neighbourhood.
    ///
    /// Maximal topens are computed as the communities of regular points:
    /// the community of a regular point is its greatest topen neighbourhood,
    /// which makes the partition canonical and order-independent. Output is
    /// in canonical set order.
    pub fn maximal_topen_partition(&self) -> TopenPartition {
        let mut topens: Vec<PointSet> = Vec::new();
        let mut covered = self.empty_set();
        for p in self.points() {
            let community = self.interior(&self.intertwined_of(p));
            if community.contains(p) && self.is_topen(&community) && !topens.contains(&community) {
                covered = covered.union(&community);
                topens.push(community);
            }
        }
        topens.sort();
        TopenPartition { topens, residue: covered.complement() }
    }

    /// The unique maximal topen containing the topen `t`: the community of
    /// any of its points.
    pub fn maximal_topen_containing(&self, t: &PointSet) -> Result<PointSet> {
        if !self.is_topen(t) {
            return Err(Error::NotTopen);
        }
        let p = t.iter().next().expect("topens are nonempty");
        Ok(self.interior(&self.intertwined_of(p)))
    }

    /// Is the empty set meet-irreducible among the opens of the subspace on
    /// `t`, i.e. do no two nonempty subspace opens have empty intersection?
    /// That is exactly the subspace being an intertwined space, and it
    /// coincides with strong transitivity of `t` (tested equivalence).
    pub fn is_meet_irreducible_empty(&self, t: &PointSet) -> bool {
        self.subspace(t).is_intertwined_space()
    }
}
