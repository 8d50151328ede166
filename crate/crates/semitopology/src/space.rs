//! Finite semitopologies presented by a generating basis.
//!
//! A semitopology is a set of points together with a family of open sets
//! that contains the empty set and the whole space and is closed under
//! arbitrary unions; unlike a topology, intersections of opens need not be
//! open. Here the family is presented by a finite basis of generators: the
//! opens are exactly the unions of generator subfamilies, plus the empty
//! set and the whole space (both adjoined implicitly, so a point covered by
//! no generator simply has the whole space as its only neighbourhood).
//!
//! All operations are pure; a [`SemiTopology`] is immutable after
//! construction and safe to share across threads.

use crate::error::{Error, Result};
use crate::set::{PointSet, MAX_POINTS};

/// Default cap on the number of distinct opens [`SemiTopology::enumerate_opens`]
/// will produce before flagging truncation.
pub const DEFAULT_OPENS_CAP: usize = 1 << 20;

/// A finite semitopology: labelled points plus a canonicalized basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiTopology {
    labels: Vec<String>,
    basis: Vec<PointSet>,
}

/// The fully enumerated open family of a space: every distinct union of
/// generators plus the empty and full sets, in canonical order.
///
/// `truncated` is set when the enumeration hit its cap, in which case
/// `opens` is a partial family and callers that need exactness must bail.
#[derive(Clone, Debug)]
pub struct OpenFamily {
    pub opens: Vec<PointSet>,
    pub truncated: bool,
}

impl SemiTopology {
    /// Space with `n` points labelled `"0"`, `"1"`, … and the given generators.
    pub fn new<I>(n: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: IntoIterator<Item = usize>,
    {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, generators)
    }

    /// Space with explicit point labels. Labels must be unique and nonempty;
    /// at most 64 points. Empty and duplicate generators are dropped.
    pub fn with_labels<I>(labels: Vec<String>, generators: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: IntoIterator<Item = usize>,
    {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(Error::BadParams(format!("{n} points exceeds the {MAX_POINTS}-point limit")));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::BadParams(format!("point {i} has an empty label")));
            }
            if labels[..i].contains(l) {
                return Err(Error::BadParams(format!("duplicate point label `{l}`")));
            }
        }
        let mut basis: Vec<PointSet> = Vec::new();
        for gen in generators {
            let mut set = PointSet::empty(n);
            for p in gen {
                if p >= n {
                    return Err(Error::BadParams(format!("generator point {p} outside universe 0..{n}")));
                }
                set.insert(p);
            }
            if !set.is_empty() {
                basis.push(set);
            }
        }
        basis.sort();
        basis.dedup();
        Ok(SemiTopology { labels, basis })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: usize) -> &str {
        &self.labels[p]
    }

    /// Index of the point with the given label.
    pub fn point(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Canonicalized generators (deduplicated, empty set dropped). The empty
    /// set and the whole space are open implicitly and not listed here.
    pub fn basis(&self) -> &[PointSet] {
        &self.basis
    }

    pub fn points(&self) -> impl Iterator<Item = usize> {
        0..self.labels.len()
    }

    pub fn universe(&self) -> PointSet {
        PointSet::full(self.labels.len())
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.labels.len())
    }

    /// Generators containing `p`. The whole space is always an additional,
    /// implicit neighbourhood of every point.
    pub fn basis_neighbourhoods(&self, p: usize) -> impl Iterator<Item = &PointSet> {
        self.basis.iter().filter(move |g| g.contains(p))
    }

    /// Is `s` an open set?
    ///
    /// Openness reduces to the basis: a set is open iff every one of its
    /// points has a generator neighbourhood inside it (unions of those
    /// witnesses rebuild the set), with the empty and full sets open by
    /// definition.
    pub fn is_open(&self, s: &PointSet) -> bool {
        if s.is_empty() || s.is_full() {
            return true;
        }
        let mut covered = self.empty_set();
        for g in &self.basis {
            if g.is_subset(s) {
                covered = covered.union(g);
            }
        }
        covered == *s
    }

    /// Greatest open subset of `s`: the union of all generators inside `s`,
    /// or the whole space when `s` is the whole space.
    pub fn interior(&self, s: &PointSet) -> PointSet {
        if s.is_full() {
            return *s;
        }
        let mut out = self.empty_set();
        for g in &self.basis {
            if g.is_subset(s) {
                out = out.union(g);
            }
        }
        out
    }

    /// Points whose every open neighbourhood intersects `s`.
    ///
    /// Quantifying over generator neighbourhoods suffices: every open
    /// neighbourhood of `p` other than the whole space contains a generator
    /// neighbourhood of `p`, and the whole space intersects any nonempty `s`.
    /// The empty `s` is its own closure (the whole space is a neighbourhood
    /// of every point and misses it).
    pub fn closure(&self, s: &PointSet) -> PointSet {
        if s.is_empty() {
            return *s;
        }
        let mut out = self.empty_set();
        'points: for p in self.points() {
            for g in self.basis_neighbourhoods(p) {
                if !g.intersects(s) {
                    continue 'points;
                }
            }
            out.insert(p);
        }
        out
    }

    /// A set is closed when it equals its own closure; equivalently its
    /// complement is open (the equivalence is cross-checked in tests).
    pub fn is_closed(&self, s: &PointSet) -> bool {
        self.closure(s) == *s
    }

    pub fn complement(&self, s: &PointSet) -> PointSet {
        s.complement()
    }

    /// Enumerates every distinct open set, stopping with `truncated` set if
    /// more than `cap` distinct opens appear.
    pub fn enumerate_opens(&self, cap: usize) -> OpenFamily {
        let mut seen = std::collections::HashSet::new();
        let mut opens = vec![self.empty_set()];
        seen.insert(self.empty_set());
        let mut truncated = false;
        'outer: for g in &self.basis {
            for i in 0..opens.len() {
                let u = opens[i].union(g);
                if seen.insert(u) {
                    if opens.len() >= cap {
                        truncated = true;
                        break 'outer;
                    }
                    opens.push(u);
                }
            }
        }
        if !truncated && seen.insert(self.universe()) {
            if opens.len() >= cap {
                truncated = true;
            } else {
                opens.push(self.universe());
            }
        }
        opens.sort();
        OpenFamily { opens, truncated }
    }

    /// Subspace induced on `t`: points of `t`, generators `g ∩ t` with the
    /// empty set dropped and duplicates merged. Point `i` of the subspace is
    /// the `i`-th smallest member of `t` and keeps its label.
    pub fn subspace(&self, t: &PointSet) -> SemiTopology {
        let members: Vec<usize> = t.iter().collect();
        let labels: Vec<String> = members.iter().map(|&p| self.labels[p].clone()).collect();
        let gens = self.basis.iter().map(|g| {
            members
                .iter()
                .enumerate()
                .filter(|(_, &p)| g.contains(p))
                .map(|(i, _)| i)
                .collect::<Vec<_>>()
        });
        SemiTopology::with_labels(labels, gens).expect("subspace of a valid space is valid")
    }

    /// Renders a set with point labels, e.g. `{0,2}`.
    pub fn format_set(&self, s: &PointSet) -> String {
        let mut out = String::from("{");
        for (k, p) in s.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[p]);
        }
        out.push('}');
        out
    }

    /// Parses a comma-separated list of point labels into a set.
    /// Whitespace around labels is ignored; an empty string is the empty set.
    pub fn parse_set(&self, text: &str) -> Result<PointSet> {
        let text = text.trim();
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(text);
        let mut out = self.empty_set();
        for part in inner.split(',') {
            let label = part.trim();
            if label.is_empty() {
                continue;
            }
            match self.point(label) {
                Some(p) => out.insert(p),
                None => return Err(Error::BadParams(format!("unknown point label `{label}`"))),
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for SemiTopology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SemiTopology(n={}, basis=[", self.len())?;
        for (k, g) in self.basis.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.format_set(g))?;
        }
        write!(f, "])")
    }
}
