//! Value assignments and consensus as continuity.
//!
//! A value assignment gives every point a value from a finite discrete
//! codomain. Continuity at a point means constancy on some open
//! neighbourhood (the two notions coincide for discrete codomains), and the
//! payoff is: continuous assignments cannot split a transitive set, and a
//! value agreed on an open set propagates to its closure.

use crate::error::{Error, Result};
use crate::set::PointSet;
use crate::space::SemiTopology;

pub type ValueId = usize;

/// Total map from points to values, with display labels for the values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueAssignment {
    values: Vec<ValueId>,
    labels: Vec<String>,
}

impl ValueAssignment {
    /// `values[p]` is the value of point `p`; each must index into `labels`.
    pub fn new(values: Vec<ValueId>, labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::BadParams("assignment needs at least one value label".into()));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= labels.len()) {
            return Err(Error::BadParams(format!("value id {v} has no label")));
        }
        Ok(ValueAssignment { values, labels })
    }

    /// Constant assignment over `n` points.
    pub fn constant(n: usize, label: &str) -> Self {
        ValueAssignment { values: vec![0; n], labels: vec![label.to_string()] }
    }

    pub fn value(&self, p: usize) -> ValueId {
        self.values[p]
    }

    pub fn label_of(&self, v: ValueId) -> &str {
        &self.labels[v]
    }

    pub fn value_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Id of the label, if present.
    pub fn value_by_label(&self, label: &str) -> Option<ValueId> {
        self.labels.iter().position(|l| l == label)
    }

    fn constant_on(&self, s: &PointSet) -> bool {
        let mut iter = s.iter();
        match iter.next() {
            None => true,
            Some(first) => {
                let v = self.values[first];
                iter.all(|p| self.values[p] == v)
            }
        }
    }
}

/// Result of propagating an agreed value outward from an open seed.
///
/// Grade 2 is the seed itself (committed by acting); grade 1 is the rest of
/// the closure, every point of which has all its neighbourhoods already
/// touching the seed. `trace` lists the frontier after each pass; `rounds`
/// counts the passes that grew it (at least one pass always runs), and the
/// tested invariant is that a single pass reaches the fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropagationResult {
    pub seed: PointSet,
    pub value: ValueId,
    pub committed_grade2: PointSet,
    pub committed_grade1: PointSet,
    pub rounds: usize,
    pub trace: Vec<PointSet>,
}

impl SemiTopology {
    /// Is `f` constant on some open neighbourhood of `p`?
    ///
    /// Checking generator neighbourhoods suffices: constancy on a union
    /// implies constancy on a member, and constancy on the whole space
    /// implies constancy on every generator neighbourhood, so the implicit
    /// whole-space neighbourhood only matters for points no generator covers.
    pub fn continuous_at(&self, f: &ValueAssignment, p: usize) -> bool {
        let mut has_basis_neighbourhood = false;
        for g in self.basis_neighbourhoods(p) {
            has_basis_neighbourhood = true;
            if f.constant_on(g) {
                return true;
            }
        }
        if has_basis_neighbourhood {
            false
        } else {
            f.constant_on(&self.universe())
        }
    }

    pub fn continuous_on(&self, f: &ValueAssignment, s: &PointSet) -> bool {
        s.iter().all(|p| self.continuous_at(f, p))
    }

    /// Continuous at every point; equivalently every value preimage is open
    /// (the preimage forms are cross-checked in tests).
    pub fn is_continuous(&self, f: &ValueAssignment) -> bool {
        self.points().all(|p| self.continuous_at(f, p))
    }

    /// Preimage of one value.
    pub fn preimage(&self, f: &ValueAssignment, v: ValueId) -> PointSet {
        PointSet::from_indices(self.len(), self.points().filter(|&p| f.value(p) == v))
    }

    /// A pair of continuity points of `t` carrying different values, if any.
    /// Absent for every `f` exactly when `t` is transitive.
    pub fn find_split(&self, f: &ValueAssignment, t: &PointSet) -> Option<(usize, usize)> {
        let witnesses: Vec<usize> = t.iter().filter(|&p| self.continuous_at(f, p)).collect();
        for (i, &p) in witnesses.iter().enumerate() {
            for &q in &witnesses[i + 1..] {
                if f.value(p) != f.value(q) {
                    return Some((p, q));
                }
            }
        }
        None
    }

    /// Builds an assignment witnessing that `t` is not transitive: paint a
    /// failing open `a` with one value and its complement with another, so
    /// the two sides of the failure split `t` while staying continuous
    /// there. Returns `None` exactly when `t` is transitive.
    pub fn build_splitting_assignment(&self, t: &PointSet) -> Option<ValueAssignment> {
        let relevant: Vec<&PointSet> = self.basis().iter().filter(|g| g.intersects(t)).collect();
        for (i, a) in relevant.iter().enumerate() {
            for b in &relevant[i + 1..] {
                if !a.intersects(b) {
                    let values = self
                        .points()
                        .map(|p| if a.contains(p) { 0 } else { 1 })
                        .collect();
                    let f = ValueAssignment::new(values, vec!["A".into(), "B".into()])
                        .expect("two labels, ids 0 and 1");
                    return Some(f);
                }
            }
        }
        None
    }

    /// Closure propagation: grade 2 for the convinced open seed, grade 1 for
    /// every further point all of whose neighbourhoods meet the seed.
    ///
    /// Iterates `C ↦ C ∪ {p : every generator neighbourhood of p meets C}`
    /// from the seed until stable. The result is exactly `closure(seed)` and
    /// one pass reaches it (closure idempotence); both are pinned invariants.
    pub fn propagate(&self, seed: &PointSet, value: ValueId) -> Result<PropagationResult> {
        if seed.is_empty() {
            return Err(Error::SeedEmpty);
        }
        if !self.is_open(seed) {
            return Err(Error::SeedNotOpen);
        }
        let mut trace = vec![*seed];
        let mut grown = 0usize;
        loop {
            let cur = *trace.last().expect("trace starts nonempty");
            let mut next = cur;
            'points: for p in self.points() {
                if next.contains(p) {
                    continue;
                }
                for g in self.basis_neighbourhoods(p) {
                    if !g.intersects(&cur) {
                        continue 'points;
                    }
                }
                // Every generator neighbourhood of p meets the current set
                // (vacuously so for uncovered points, whose only
                // neighbourhood is the whole space).
                next.insert(p);
            }
            if next == cur {
                break;
            }
            grown += 1;
            trace.push(next);
        }
        let reached = *trace.last().expect("nonempty");
        Ok(PropagationResult {
            seed: *seed,
            value,
            committed_grade2: *seed,
            committed_grade1: reached.difference(seed),
            rounds: grown.max(1),
            trace,
        })
    }

    /// Maximal topens that the open seed intersects; each is contained in
    /// `closure(seed)` (tested invariant).
    pub fn topen_reached_by(&self, seed: &PointSet) -> Result<Vec<PointSet>> {
        if !self.is_open(seed) {
            return Err(Error::SeedNotOpen);
        }
        Ok(self
            .maximal_topen_partition()
            .topens
            .into_iter()
            .filter(|t| t.intersects(seed))
            .collect())
    }
}
