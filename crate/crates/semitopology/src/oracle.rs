//! Brute-force reference implementations of every predicate.
//!
//! Each function here quantifies literally over the fully enumerated open
//! family, with no generator reductions and no shared helpers beyond the
//! [`PointSet`] primitive — the point is to be an independent check on the
//! fast paths, not to be fast. The family itself is enumerated by walking
//! every subset mask of the basis, which caps the basis size this module
//! will accept.

use crate::error::{Error, Result};
use crate::set::PointSet;
use crate::space::SemiTopology;
use crate::values::ValueAssignment;

/// Largest basis the mask walk will enumerate (2^20 unions).
const MAX_ORACLE_BASIS: usize = 20;

/// Agreement record for one predicate on one instance, as produced by the
/// `oracle-diff` fuzzing command.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub predicate: &'static str,
    pub instance: String,
    pub fast: String,
    pub oracle: String,
    pub agree: bool,
}

/// Every open set, computed as the union of each subset of the basis, plus
/// the whole space.
pub fn opens(st: &SemiTopology) -> Result<Vec<PointSet>> {
    let k = st.basis().len();
    if k > MAX_ORACLE_BASIS {
        return Err(Error::FamilyTruncated);
    }
    let mut fam: Vec<PointSet> = Vec::with_capacity(1 << k);
    for mask in 0u64..(1 << k) {
        let mut u = st.empty_set();
        for (i, g) in st.basis().iter().enumerate() {
            if mask & (1 << i) != 0 {
                u = u.union(g);
            }
        }
        fam.push(u);
    }
    fam.push(st.universe());
    fam.sort();
    fam.dedup();
    Ok(fam)
}

/// Complements of the opens.
pub fn closeds(fam: &[PointSet]) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = fam.iter().map(|o| o.complement()).collect();
    out.sort();
    out.dedup();
    out
}

pub fn is_open(fam: &[PointSet], s: &PointSet) -> bool {
    fam.contains(s)
}

pub fn interior(fam: &[PointSet], s: &PointSet) -> PointSet {
    let mut out = PointSet::empty(s.universe_len());
    for o in fam {
        if o.is_subset(s) {
            out = out.union(o);
        }
    }
    out
}

pub fn closure(fam: &[PointSet], n: usize, s: &PointSet) -> PointSet {
    let mut out = PointSet::empty(n);
    for p in 0..n {
        let in_closure = fam
            .iter()
            .filter(|o| o.contains(p))
            .all(|o| o.intersects(s));
        if in_closure {
            out.insert(p);
        }
    }
    out
}

pub fn is_closed(fam: &[PointSet], n: usize, s: &PointSet) -> bool {
    closure(fam, n, s) == *s
}

pub fn is_transitive(fam: &[PointSet], t: &PointSet) -> bool {
    fam.iter()
        .filter(|o| o.intersects(t))
        .all(|o| fam.iter().filter(|o2| o2.intersects(t)).all(|o2| o.intersects(o2)))
}

pub fn is_strongly_transitive(fam: &[PointSet], t: &PointSet) -> bool {
    fam.iter().filter(|o| o.intersects(t)).all(|o| {
        fam.iter()
            .filter(|o2| o2.intersects(t))
            .all(|o2| o.intersects_within(t, o2))
    })
}

pub fn is_topen(fam: &[PointSet], t: &PointSet) -> bool {
    !t.is_empty() && is_open(fam, t) && is_transitive(fam, t)
}

pub fn is_hyperconnected(fam: &[PointSet], t: &PointSet) -> bool {
    let sub: Vec<&PointSet> = fam.iter().filter(|o| !o.is_empty() && o.is_subset(t)).collect();
    sub.iter().all(|a| sub.iter().all(|b| a.intersects(b)))
}

pub fn intertwined(fam: &[PointSet], p: usize, q: usize) -> bool {
    fam.iter()
        .filter(|o| o.contains(p))
        .all(|o| fam.iter().filter(|o2| o2.contains(q)).all(|o2| o.intersects(o2)))
}

pub fn intertwined_of(fam: &[PointSet], n: usize, p: usize) -> PointSet {
    PointSet::from_indices(n, (0..n).filter(|&q| intertwined(fam, p, q)))
}

pub fn community(fam: &[PointSet], n: usize, p: usize) -> PointSet {
    interior(fam, &intertwined_of(fam, n, p))
}

pub fn is_regular(fam: &[PointSet], n: usize, p: usize) -> bool {
    let k = community(fam, n, p);
    k.contains(p) && is_topen(fam, &k)
}

pub fn is_weakly_regular(fam: &[PointSet], n: usize, p: usize) -> bool {
    community(fam, n, p).contains(p)
}

pub fn is_quasiregular(fam: &[PointSet], n: usize, p: usize) -> bool {
    !community(fam, n, p).is_empty()
}

pub fn is_unconflicted(fam: &[PointSet], n: usize, p: usize) -> bool {
    (0..n).all(|q| {
        (0..n).all(|r| {
            !(intertwined(fam, q, p) && intertwined(fam, p, r)) || intertwined(fam, q, r)
        })
    })
}

/// Same definition as [`is_unconflicted`] over a precomputed matrix of
/// star sets (`star[p] = intertwined_of(p)`), so callers sweeping many
/// points do not recompute the intertwined quantifier per pair.
pub fn is_unconflicted_via(star: &[PointSet], p: usize) -> bool {
    star[p]
        .iter()
        .all(|q| star[p].iter().all(|r| star[q].contains(r)))
}

/// The all-opens form of hypertransitivity: any two opens that meet every
/// neighbourhood of `p` must meet each other.
pub fn is_hypertransitive(fam: &[PointSet], p: usize) -> bool {
    let nbhd: Vec<&PointSet> = fam.iter().filter(|o| o.contains(p)).collect();
    let touching: Vec<&PointSet> = fam
        .iter()
        .filter(|o| nbhd.iter().all(|q| o.intersects(q)))
        .collect();
    touching.iter().all(|a| touching.iter().all(|b| a.intersects(b)))
}

pub fn minimal_closed_neighbourhoods(fam: &[PointSet]) -> Vec<PointSet> {
    let cns: Vec<PointSet> = closeds(fam)
        .into_iter()
        .filter(|c| !interior(fam, c).is_empty())
        .collect();
    let mut out: Vec<PointSet> = cns
        .iter()
        .filter(|c| !cns.iter().any(|d| d.is_strict_subset(c)))
        .copied()
        .collect();
    out.sort();
    out
}

pub fn regular_opens(fam: &[PointSet], n: usize) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = fam
        .iter()
        .filter(|o| interior(fam, &closure(fam, n, o)) == **o)
        .copied()
        .collect();
    out.sort();
    out
}

pub fn regular_closeds(fam: &[PointSet], n: usize) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = closeds(fam)
        .into_iter()
        .filter(|c| closure(fam, n, &interior(fam, c)) == *c)
        .collect();
    out.sort();
    out
}

/// Continuity at `p` over the full family: some open neighbourhood of `p`
/// on which `f` is constant.
pub fn continuous_at(fam: &[PointSet], f: &ValueAssignment, p: usize) -> bool {
    fam.iter().filter(|o| o.contains(p)).any(|o| {
        let mut values = o.iter().map(|q| f.value(q));
        match values.next() {
            None => true,
            Some(first) => values.all(|v| v == first),
        }
    })
}

pub fn is_continuous(fam: &[PointSet], n: usize, f: &ValueAssignment) -> bool {
    (0..n).all(|p| continuous_at(fam, f, p))
}
