//! Per-point taxonomy: communities, regularity grades, conflictedness,
//! hypertransitivity, closed neighbourhoods and regular open/closed sets.
//!
//! The community of `p` is the interior of `∗p` (the points intertwined
//! with `p`); `p` is regular when its community is a topen neighbourhood,
//! weakly regular when merely an open neighbourhood, quasiregular when
//! nonempty. Two independent characterisations tie the grades together:
//! regular = weakly regular + unconflicted, and regular = quasiregular +
//! hypertransitive; both are enforced as invariants by the test suite.

use crate::error::{Error, Result};
use crate::set::PointSet;
use crate::space::{OpenFamily, SemiTopology};

/// Classification record for a single point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub point: usize,
    /// `∗p`: all points intertwined with this one. Always closed.
    pub intertwined: PointSet,
    /// `K(p) = interior(∗p)`. Always a regular open set.
    pub community: PointSet,
    pub regular: bool,
    pub weakly_regular: bool,
    pub quasiregular: bool,
    pub unconflicted: bool,
    /// Meaningless unless `hypertransitive_known`.
    pub hypertransitive: bool,
    /// False when the open-family cap blocked the exact check.
    pub hypertransitive_known: bool,
}

/// Classification of every point of a space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub points: Vec<PointClass>,
    /// True when the enumeration cap prevented the hypertransitivity checks.
    pub truncated: bool,
}

impl SemiTopology {
    /// `K(p)`: the interior of the set of points intertwined with `p`.
    pub fn community(&self, p: usize) -> PointSet {
        self.interior(&self.intertwined_of(p))
    }

    pub fn is_regular(&self, p: usize) -> bool {
        let k = self.community(p);
        k.contains(p) && self.is_topen(&k)
    }

    pub fn is_weakly_regular(&self, p: usize) -> bool {
        self.community(p).contains(p)
    }

    pub fn is_quasiregular(&self, p: usize) -> bool {
        !self.community(p).is_empty()
    }

    /// No witness `q ⋒ p ⋒ r` with `q`, `r` not intertwined.
    pub fn is_unconflicted(&self, p: usize) -> bool {
        let star: Vec<usize> = self.intertwined_of(p).iter().collect();
        for (i, &q) in star.iter().enumerate() {
            for &r in &star[i + 1..] {
                if !self.intertwined(q, r) {
                    return false;
                }
            }
        }
        true
    }

    /// Hypertransitivity of `p`: any two opens that each meet every
    /// neighbourhood of `p` must meet each other.
    ///
    /// An open meets every neighbourhood of `p` exactly when `p` lies in its
    /// closure, and it suffices to test pairs of *regular* opens (any open
    /// shares its closure with the regular open `interior(closure(O))`, and
    /// two opens meet iff those interiors meet). This needs the exact open
    /// family, so a truncated family is an error; there is no sound
    /// generator reduction here.
    pub fn is_hypertransitive(&self, p: usize, family: &OpenFamily) -> Result<bool> {
        Ok(self.hypertransitive_all(family)?[p])
    }

    /// Hypertransitivity of every point at once; the regular-open list and
    /// its closures are shared across points.
    pub fn hypertransitive_all(&self, family: &OpenFamily) -> Result<Vec<bool>> {
        if family.truncated {
            return Err(Error::FamilyTruncated);
        }
        let regs = self.regular_opens(family)?;
        let closures: Vec<PointSet> = regs.iter().map(|o| self.closure(o)).collect();
        let out = self
            .points()
            .map(|p| {
                let touching: Vec<&PointSet> = regs
                    .iter()
                    .zip(&closures)
                    .filter(|(_, cl)| cl.contains(p))
                    .map(|(o, _)| o)
                    .collect();
                touching
                    .iter()
                    .enumerate()
                    .all(|(i, a)| touching[i + 1..].iter().all(|b| a.intersects(b)))
            })
            .collect();
        Ok(out)
    }

    /// Classifies one point; hypertransitivity is reported unknown when the
    /// family is truncated.
    pub fn classify(&self, p: usize, family: &OpenFamily) -> PointClass {
        let hyper = self.is_hypertransitive(p, family).ok();
        self.classify_with(p, hyper)
    }

    fn classify_with(&self, p: usize, hypertransitive: Option<bool>) -> PointClass {
        let intertwined = self.intertwined_of(p);
        let community = self.interior(&intertwined);
        PointClass {
            point: p,
            intertwined,
            community,
            regular: community.contains(p) && self.is_topen(&community),
            weakly_regular: community.contains(p),
            quasiregular: !community.is_empty(),
            unconflicted: self.is_unconflicted(p),
            hypertransitive: hypertransitive.unwrap_or(false),
            hypertransitive_known: hypertransitive.is_some(),
        }
    }

    /// Classifies every point, enumerating the open family once with `cap`.
    pub fn classify_all(&self, cap: usize) -> Classification {
        let family = self.enumerate_opens(cap);
        let hyper = self.hypertransitive_all(&family).ok();
        let points = self
            .points()
            .map(|p| self.classify_with(p, hyper.as_ref().map(|h| h[p])))
            .collect();
        Classification { points, truncated: family.truncated }
    }

    /// Is `c` a closed set whose interior contains `p`?
    pub fn is_closed_neighbourhood(&self, c: &PointSet, p: usize) -> bool {
        self.is_closed(c) && self.interior(c).contains(p)
    }

    /// All closed sets whose interior contains `p`, in canonical order.
    /// Their intersection is exactly `∗p` (tested invariant).
    pub fn closed_neighbourhoods_of(&self, p: usize, family: &OpenFamily) -> Result<Vec<PointSet>> {
        if family.truncated {
            return Err(Error::FamilyTruncated);
        }
        let mut out: Vec<PointSet> = family
            .opens
            .iter()
            .map(|o| o.complement())
            .filter(|c| self.interior(c).contains(p))
            .collect();
        out.sort();
        Ok(out)
    }

    /// Inclusion-minimal closed sets with nonempty interior.
    ///
    /// Fast path without enumerating the family: every closed neighbourhood
    /// contains `closure(g)` for some generator `g` inside its interior
    /// (the interior is a union of generators, or the whole space when the
    /// basis is empty), and each `closure(g)` is itself a closed
    /// neighbourhood. Minimal candidates therefore coincide with minimal
    /// closed neighbourhoods; the oracle cross-checks this over the full
    /// family.
    pub fn minimal_closed_neighbourhoods(&self) -> Vec<PointSet> {
        let mut candidates: Vec<PointSet> = self.basis().iter().map(|g| self.closure(g)).collect();
        candidates.push(self.universe());
        // closure(g) always has the generator inside its interior, but the
        // whole space fails the nonempty-interior requirement when there
        // are no points at all.
        candidates.retain(|c| !self.interior(c).is_empty());
        candidates.sort();
        candidates.dedup();
        let mut out: Vec<PointSet> = candidates
            .iter()
            .filter(|c| !candidates.iter().any(|d| d.is_strict_subset(c)))
            .copied()
            .collect();
        out.sort();
        out
    }

    /// Fixed point of `interior ∘ closure`.
    pub fn is_regular_open(&self, s: &PointSet) -> bool {
        self.is_open(s) && self.interior(&self.closure(s)) == *s
    }

    /// Fixed point of `closure ∘ interior`.
    pub fn is_regular_closed(&self, s: &PointSet) -> bool {
        self.is_closed(s) && self.closure(&self.interior(s)) == *s
    }

    /// All regular open sets, i.e. the distinct values of
    /// `interior(closure(O))` over the family.
    pub fn regular_opens(&self, family: &OpenFamily) -> Result<Vec<PointSet>> {
        if family.truncated {
            return Err(Error::FamilyTruncated);
        }
        let mut out: Vec<PointSet> = family
            .opens
            .iter()
            .map(|o| self.interior(&self.closure(o)))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// All regular closed sets; closure and interior restrict to a bijection
    /// between these and the regular opens (tested invariant).
    pub fn regular_closeds(&self, family: &OpenFamily) -> Result<Vec<PointSet>> {
        if family.truncated {
            return Err(Error::FamilyTruncated);
        }
        let mut out: Vec<PointSet> = family
            .opens
            .iter()
            .map(|o| self.closure(&self.interior(&o.complement())))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// `s` minus its interior.
    pub fn boundary(&self, s: &PointSet) -> PointSet {
        s.difference(&self.interior(s))
    }

    /// Common boundary points of two sets.
    pub fn kiss(&self, s: &PointSet, t: &PointSet) -> PointSet {
        self.boundary(s).intersection(&self.boundary(t))
    }

    /// Intertwined preorder: `p ≤⋒ q` when `∗p ⊆ ∗q`.
    pub fn intertwined_preorder_leq(&self, p: usize, q: usize) -> bool {
        self.intertwined_of(p).is_subset(&self.intertwined_of(q))
    }

    /// Hausdorff means every point is intertwined only with itself.
    pub fn is_hausdorff(&self) -> bool {
        self.points()
            .all(|p| self.intertwined_of(p) == PointSet::singleton(self.len(), p))
    }

    /// Searches for a regular point.
    ///
    /// Constructive path: descend the intertwined preorder to a point whose
    /// `∗` is inclusion-minimal, then pick the first point of its community;
    /// in a quasiregular space that candidate is always regular. When the
    /// candidate fails (possible only in non-quasiregular spaces) every
    /// point is scanned. Returns `None` exactly when no regular point exists.
    pub fn find_regular_point(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let mut cur_star = self.intertwined_of(0);
        loop {
            let mut improved = false;
            for q in self.points() {
                let star = self.intertwined_of(q);
                if star.is_strict_subset(&cur_star) {
                    cur_star = star;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        if let Some(candidate) = self.interior(&cur_star).iter().next() {
            if self.is_regular(candidate) {
                return Some(candidate);
            }
        }
        self.points().find(|&p| self.is_regular(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::DEFAULT_OPENS_CAP;

    fn space(n: usize, gens: &[&[usize]]) -> SemiTopology {
        SemiTopology::new(n, gens.iter().map(|g| g.to_vec())).unwrap()
    }

    fn set(n: usize, pts: &[usize]) -> PointSet {
        PointSet::from_indices(n, pts.iter().copied())
    }

    #[test]
    fn community_examples() {
        let top_left = space(3, &[&[0], &[2]]);
        assert_eq!(top_left.community(1), PointSet::full(3));

        let lower_right = space(4, &[&[0], &[1], &[2], &[0, 1, 3], &[1, 2, 3]]);
        assert_eq!(lower_right.community(3), set(4, &[1]));

        let square = space(4, &[&[3, 0], &[0, 1], &[1, 2], &[2, 3]]);
        for p in square.points() {
            assert!(square.community(p).is_empty());
        }
    }

    #[test]
    fn classify_fig2_top_left() {
        let st = space(3, &[&[0], &[2]]);
        let c = st.classify_all(DEFAULT_OPENS_CAP);
        assert!(c.points[0].regular && c.points[2].regular);
        let one = &c.points[1];
        assert!(one.weakly_regular && !one.regular && !one.unconflicted);
    }

    #[test]
    fn classify_fig2_top_right() {
        let st = space(3, &[&[0], &[0, 1], &[2], &[1, 2], &[0, 2]]);
        let c = st.classify_all(DEFAULT_OPENS_CAP);
        let one = &c.points[1];
        assert!(!one.quasiregular && !one.weakly_regular && !one.regular);
        // Hypertransitive although not even quasiregular.
        assert!(one.hypertransitive_known && one.hypertransitive);
        assert!(one.unconflicted);
    }

    #[test]
    fn classify_fig2_lower_right() {
        let st = space(4, &[&[0], &[1], &[2], &[0, 1, 3], &[1, 2, 3]]);
        let fam = st.enumerate_opens(DEFAULT_OPENS_CAP);
        let star = st.classify(3, &fam);
        assert!(star.quasiregular && !star.weakly_regular);
        assert!(star.unconflicted);
        // Witness O' = {1}, O'' = {0,2}: both meet every neighbourhood of
        // the residue point but miss each other.
        assert!(star.hypertransitive_known && !star.hypertransitive);
    }

    #[test]
    fn hypertransitive_needs_exact_family() {
        let st = space(3, &[&[0], &[2]]);
        let fam = st.enumerate_opens(2);
        assert!(fam.truncated);
        assert_eq!(st.is_hypertransitive(0, &fam), Err(Error::FamilyTruncated));
        let c = st.classify_all(2);
        assert!(c.truncated);
        assert!(c.points.iter().all(|p| !p.hypertransitive_known));
    }

    #[test]
    fn closed_neighbourhoods_examples() {
        let sierpinski = space(2, &[&[1]]);
        let fam = sierpinski.enumerate_opens(16);
        let cns = sierpinski.closed_neighbourhoods_of(0, &fam).unwrap();
        assert_eq!(cns, vec![PointSet::full(2)]);

        let square = space(4, &[&[3, 0], &[0, 1], &[1, 2], &[2, 3]]);
        let fam = square.enumerate_opens(64);
        let cns = square.closed_neighbourhoods_of(0, &fam).unwrap();
        assert!(cns.contains(&set(4, &[0, 3])) && cns.contains(&set(4, &[0, 1])));
        // The whole space is a closed neighbourhood of every point.
        assert!(cns.contains(&square.universe()));
    }

    #[test]
    fn minimal_closed_neighbourhood_examples() {
        let square = space(4, &[&[3, 0], &[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(
            square.minimal_closed_neighbourhoods(),
            vec![set(4, &[0, 1]), set(4, &[0, 3]), set(4, &[1, 2]), set(4, &[2, 3])]
        );

        let irregular_right = space(5, &[&[1], &[2], &[3], &[4], &[0, 1, 2, 3], &[0, 1, 2, 4]]);
        let min = irregular_right.minimal_closed_neighbourhoods();
        assert_eq!(min, vec![set(5, &[3]), set(5, &[4]), set(5, &[0, 1]), set(5, &[0, 2])]);
        let star0 = irregular_right.intertwined_of(0);
        assert_eq!(star0, set(5, &[0, 1, 2]));
        assert!(!min.contains(&star0), "∗0 is a closed neighbourhood but not minimal");

        let intertwined = space(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(intertwined.minimal_closed_neighbourhoods(), vec![intertwined.universe()]);
    }

    #[test]
    fn empty_space_has_no_closed_neighbourhoods() {
        let initial = space(0, &[]);
        assert!(initial.minimal_closed_neighbourhoods().is_empty());
        assert_eq!(initial.find_regular_point(), None);
    }

    #[test]
    fn regular_open_examples() {
        let sierpinski = space(2, &[&[1]]);
        assert!(!sierpinski.is_regular_open(&set(2, &[1])), "interior(closure({{1}})) is the whole space");
        let square = space(4, &[&[3, 0], &[0, 1], &[1, 2], &[2, 3]]);
        assert!(square.is_regular_open(&set(4, &[0, 1])), "clopen sets are regular open");
        assert!(square.is_regular_closed(&set(4, &[0, 1])));
        for p in square.points() {
            assert!(square.is_regular_open(&square.community(p)));
        }
    }

    #[test]
    fn boundary_and_kiss_examples() {
        let top_left = space(3, &[&[0], &[2]]);
        assert!(top_left.boundary(&top_left.intertwined_of(1)).is_empty());
        assert_eq!(top_left.boundary(&top_left.intertwined_of(0)), set(3, &[1]));
        let s = set(3, &[0, 1]);
        assert_eq!(top_left.kiss(&s, &s), top_left.boundary(&s));
    }

    #[test]
    fn intertwined_preorder_examples() {
        let top_left = space(3, &[&[0], &[2]]);
        assert!(top_left.intertwined_preorder_leq(0, 1));
        assert!(!top_left.intertwined_preorder_leq(1, 0));
        for p in top_left.points() {
            assert!(top_left.intertwined_preorder_leq(p, p));
        }
        // q ∈ K(p) implies q ≤⋒ p.
        for p in top_left.points() {
            for q in top_left.community(p).iter() {
                assert!(top_left.intertwined_preorder_leq(q, p));
            }
        }
    }

    #[test]
    fn find_regular_point_examples() {
        let square = space(4, &[&[3, 0], &[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(square.find_regular_point(), None);

        let top_left = space(3, &[&[0], &[2]]);
        let p = top_left.find_regular_point().unwrap();
        assert!(p == 0 || p == 2);
        assert!(top_left.is_regular(p));

        let discrete = space(3, &[&[0], &[1], &[2]]);
        assert!(discrete.find_regular_point().is_some());

        // Not quasiregular overall, yet regular points exist: fall back to scan.
        let top_right = space(3, &[&[0], &[0, 1], &[2], &[1, 2], &[0, 2]]);
        let p = top_right.find_regular_point().unwrap();
        assert!(top_right.is_regular(p));
    }

    /// Weak regularity plus `∗p` being minimal among all closed
    /// neighbourhoods does NOT force regularity. Witness: point 4 below is
    /// weakly regular, `∗4 = {2,3,4}` is a minimal closed neighbourhood
    /// (every closed strict subset has empty interior), yet `K(4) = {2,3,4}`
    /// is not transitive because `{0,2}` and `{1,3}` both meet it and miss
    /// each other. The forward direction — regular points do have minimal
    /// stars — holds and is exercised across the law suite.
    #[test]
    fn minimal_star_does_not_force_regularity() {
        let st = space(5, &[&[0, 1], &[0, 2], &[1, 3], &[2, 3, 4]]);
        let star4 = st.intertwined_of(4);
        assert_eq!(star4, set(5, &[2, 3, 4]));
        assert!(st.is_weakly_regular(4));
        assert!(st.minimal_closed_neighbourhoods().contains(&star4));
        assert!(!st.is_regular(4));
        // The gap: 2 ∈ K(4) has ∗2 = {2,4} strictly below ∗4, but ∗2 has
        // empty interior, so it is not itself a closed neighbourhood and
        // minimality of ∗4 among closed neighbourhoods never sees it.
        let star2 = st.intertwined_of(2);
        assert_eq!(star2, set(5, &[2, 4]));
        assert!(star2.is_strict_subset(&star4));
        assert!(st.interior(&star2).is_empty());
        // Restoring quasiregularity of the community repairs the
        // equivalence on this witness.
        assert!(!st.community(4).iter().all(|q| st.is_quasiregular(q)));
    }

    #[test]
    fn hausdorff_examples() {
        assert!(space(4, &[&[3, 0], &[0, 1], &[1, 2], &[2, 3]]).is_hausdorff());
        assert!(!space(2, &[&[1]]).is_hausdorff());
        assert!(space(3, &[&[0], &[1], &[2]]).is_hausdorff());
    }
}
