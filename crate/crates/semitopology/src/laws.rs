//! Named invariant checks for one space: fast-path/oracle agreement, the
//! structural theorems, and the value-assignment laws.
//!
//! `check_space` powers the CLI `check` subcommand and the acceptance
//! suite. Each law returns a [`LawReport`]; a law that cannot be verified
//! exactly (family truncated, or a basis too large to brute-force) passes
//! vacuously but says so in its detail.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle;
use crate::oracle::OracleReport;
use crate::set::PointSet;
use crate::space::{OpenFamily, SemiTopology};
use crate::values::ValueAssignment;

/// Outcome of one named law on one space.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

impl LawReport {
    fn pass(name: &'static str) -> Self {
        LawReport { name, ok: true, detail: String::new() }
    }

    fn skip(name: &'static str, why: &str) -> Self {
        LawReport { name, ok: true, detail: format!("skipped: {why}") }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        LawReport { name, ok: false, detail }
    }
}

fn verdict(name: &'static str, failure: Option<String>) -> LawReport {
    match failure {
        None => LawReport::pass(name),
        Some(detail) => LawReport::fail(name, detail),
    }
}

/// Deterministic probe sets: every subset for small spaces, otherwise a
/// structured-plus-seeded sample.
pub fn probe_sets(st: &SemiTopology) -> Vec<PointSet> {
    let n = st.len();
    let mut out: Vec<PointSet> = Vec::new();
    if n <= 10 {
        for bits in 0u64..(1 << n) {
            out.push(PointSet::from_indices(n, (0..n).filter(|i| bits & (1 << i) != 0)));
        }
        return out;
    }
    out.push(st.empty_set());
    out.push(st.universe());
    for p in st.points() {
        out.push(PointSet::singleton(n, p));
    }
    for g in st.basis() {
        out.push(*g);
        out.push(g.complement());
        out.push(st.closure(g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e71_707e);
    for _ in 0..256 {
        let bits: u64 = rng.gen();
        out.push(PointSet::from_indices(n, (0..n).filter(|i| bits & (1 << i) != 0)));
    }
    out.sort();
    out.dedup();
    out
}

/// Deterministic sample of assignments with one, two and three values.
fn probe_assignments(st: &SemiTopology) -> Vec<ValueAssignment> {
    let n = st.len();
    let mut out = vec![ValueAssignment::constant(n, "A")];
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a55_16e5);
    for values in [2usize, 3] {
        for _ in 0..6 {
            let labels = (0..values).map(|v| format!("v{v}")).collect();
            let vs = (0..n).map(|_| rng.gen_range(0..values)).collect();
            out.push(ValueAssignment::new(vs, labels).expect("labels cover ids"));
        }
    }
    // Splitting witnesses for a few probe sets keep the split laws honest.
    for t in probe_sets(st).into_iter().take(32) {
        if let Some(f) = st.build_splitting_assignment(&t) {
            out.push(f);
        }
    }
    out
}

/// Compares every fast-path predicate against its brute-force oracle on
/// one space, returning the first disagreement (formatted for display) or
/// `None` when everything agrees. Errors with `FamilyTruncated` when the
/// basis is too large to enumerate.
///
/// Cheap predicates are compared on every subset for spaces of up to eight
/// points; the predicates whose oracle form is quadratic in the family are
/// compared on a deterministic sample.
pub fn oracle_mismatch(st: &SemiTopology) -> crate::error::Result<Option<OracleReport>> {
    let fam = oracle::opens(st)?;
    let n = st.len();
    let report = |predicate: &'static str, instance: String, fast: String, orc: String| {
        Some(OracleReport { predicate, instance, agree: false, fast, oracle: orc })
    };

    let family = st.enumerate_opens(1 << 21);
    if family.truncated || family.opens != fam {
        return Ok(report(
            "enumerate_opens",
            "full family".into(),
            format!("{:?}", family.opens),
            format!("{fam:?}"),
        ));
    }

    let probes = probe_sets(st);
    for s in &probes {
        if st.is_open(s) != oracle::is_open(&fam, s) {
            return Ok(report("is_open", format!("{s:?}"), st.is_open(s).to_string(), oracle::is_open(&fam, s).to_string()));
        }
        let (fast_int, orc_int) = (st.interior(s), oracle::interior(&fam, s));
        if fast_int != orc_int {
            return Ok(report("interior", format!("{s:?}"), format!("{fast_int:?}"), format!("{orc_int:?}")));
        }
        let (fast_cl, orc_cl) = (st.closure(s), oracle::closure(&fam, n, s));
        if fast_cl != orc_cl {
            return Ok(report("closure", format!("{s:?}"), format!("{fast_cl:?}"), format!("{orc_cl:?}")));
        }
        if st.is_closed(s) != oracle::is_closed(&fam, n, s) {
            return Ok(report("is_closed", format!("{s:?}"), st.is_closed(s).to_string(), oracle::is_closed(&fam, n, s).to_string()));
        }
    }

    // Quadratic-in-family quantifiers: exhaustive over all subsets for
    // small spaces, otherwise a structured deterministic sample of
    // generators, their closures, star sets, and a stride through the
    // probes.
    let mut quant: Vec<PointSet> = if n <= 8 {
        probes.clone()
    } else {
        let mut sample: Vec<PointSet> = st.basis().to_vec();
        sample.extend(st.basis().iter().map(|g| st.closure(g)));
        sample.extend(st.points().map(|p| st.intertwined_of(p)));
        sample.push(st.empty_set());
        sample.push(st.universe());
        sample.extend(probes.iter().step_by(1 + probes.len() / 48).copied());
        sample
    };
    quant.sort();
    quant.dedup();
    for s in &quant {
        if st.is_transitive(s) != oracle::is_transitive(&fam, s) {
            return Ok(report("is_transitive", format!("{s:?}"), st.is_transitive(s).to_string(), oracle::is_transitive(&fam, s).to_string()));
        }
        if st.is_strongly_transitive(s) != oracle::is_strongly_transitive(&fam, s) {
            return Ok(report("is_strongly_transitive", format!("{s:?}"), st.is_strongly_transitive(s).to_string(), oracle::is_strongly_transitive(&fam, s).to_string()));
        }
        if st.is_topen(s) != oracle::is_topen(&fam, s) {
            return Ok(report("is_topen", format!("{s:?}"), st.is_topen(s).to_string(), oracle::is_topen(&fam, s).to_string()));
        }
        if st.is_hyperconnected(s) != oracle::is_hyperconnected(&fam, s) {
            return Ok(report("is_hyperconnected", format!("{s:?}"), st.is_hyperconnected(s).to_string(), oracle::is_hyperconnected(&fam, s).to_string()));
        }
    }

    // Definitional star matrix; every entry is the literal quantifier.
    let star: Vec<PointSet> = (0..n).map(|p| oracle::intertwined_of(&fam, n, p)).collect();
    let fast_hyper_all = st.hypertransitive_all(&family).expect("family is exact here");
    for p in st.points() {
        for q in st.points() {
            if st.intertwined(p, q) != star[p].contains(q) {
                return Ok(report(
                    "intertwined",
                    format!("{} ⋒ {}", st.label(p), st.label(q)),
                    st.intertwined(p, q).to_string(),
                    star[p].contains(q).to_string(),
                ));
            }
        }
        let tag = || format!("point {}", st.label(p));
        if st.intertwined_of(p) != star[p] {
            return Ok(report("intertwined_of", tag(), format!("{:?}", st.intertwined_of(p)), format!("{:?}", star[p])));
        }
        let orc_comm = oracle::interior(&fam, &star[p]);
        if st.community(p) != orc_comm {
            return Ok(report("community", tag(), format!("{:?}", st.community(p)), format!("{orc_comm:?}")));
        }
        let orc_regular = orc_comm.contains(p) && oracle::is_topen(&fam, &orc_comm);
        if st.is_regular(p) != orc_regular {
            return Ok(report("is_regular", tag(), st.is_regular(p).to_string(), orc_regular.to_string()));
        }
        if st.is_weakly_regular(p) != orc_comm.contains(p) {
            return Ok(report("is_weakly_regular", tag(), st.is_weakly_regular(p).to_string(), orc_comm.contains(p).to_string()));
        }
        if st.is_quasiregular(p) != !orc_comm.is_empty() {
            return Ok(report("is_quasiregular", tag(), st.is_quasiregular(p).to_string(), (!orc_comm.is_empty()).to_string()));
        }
        let orc_unconflicted = oracle::is_unconflicted_via(&star, p);
        if st.is_unconflicted(p) != orc_unconflicted {
            return Ok(report("is_unconflicted", tag(), st.is_unconflicted(p).to_string(), orc_unconflicted.to_string()));
        }
        let fast_hyper = fast_hyper_all[p];
        let orc_hyper = oracle::is_hypertransitive(&fam, p);
        if fast_hyper != orc_hyper {
            return Ok(report("is_hypertransitive", tag(), fast_hyper.to_string(), orc_hyper.to_string()));
        }
    }

    let (fast_mcn, orc_mcn) = (st.minimal_closed_neighbourhoods(), oracle::minimal_closed_neighbourhoods(&fam));
    if fast_mcn != orc_mcn {
        return Ok(report("minimal_closed_neighbourhoods", "whole space".into(), format!("{fast_mcn:?}"), format!("{orc_mcn:?}")));
    }
    let (fast_ro, orc_ro) = (st.regular_opens(&family)?, oracle::regular_opens(&fam, n));
    if fast_ro != orc_ro {
        return Ok(report("regular_opens", "whole space".into(), format!("{fast_ro:?}"), format!("{orc_ro:?}")));
    }
    let (fast_rc, orc_rc) = (st.regular_closeds(&family)?, oracle::regular_closeds(&fam, n));
    if fast_rc != orc_rc {
        return Ok(report("regular_closeds", "whole space".into(), format!("{fast_rc:?}"), format!("{orc_rc:?}")));
    }

    for (i, f) in probe_assignments(st).iter().take(10).enumerate() {
        for p in st.points() {
            if st.continuous_at(f, p) != oracle::continuous_at(&fam, f, p) {
                return Ok(report(
                    "continuous_at",
                    format!("assignment {i}, point {}", st.label(p)),
                    st.continuous_at(f, p).to_string(),
                    oracle::continuous_at(&fam, f, p).to_string(),
                ));
            }
        }
        if st.is_continuous(f) != oracle::is_continuous(&fam, n, f) {
            return Ok(report("is_continuous", format!("assignment {i}"), st.is_continuous(f).to_string(), oracle::is_continuous(&fam, n, f).to_string()));
        }
    }

    Ok(None)
}

fn law_oracle_agreement(st: &SemiTopology) -> LawReport {
    const NAME: &str = "fast paths agree with brute-force oracle";
    match oracle_mismatch(st) {
        Err(_) => LawReport::skip(NAME, "basis too large to enumerate the full family"),
        Ok(None) => LawReport::pass(NAME),
        Ok(Some(r)) => LawReport::fail(
            NAME,
            format!("{} on {}: fast={} oracle={}", r.predicate, r.instance, r.fast, r.oracle),
        ),
    }
}

fn law_partition(st: &SemiTopology, family: &OpenFamily) -> LawReport {
    const NAME: &str = "maximal topens partition the regular points";
    let part = st.maximal_topen_partition();
    let mut covered = st.empty_set();
    for t in &part.topens {
        if t.intersects(&covered) {
            return LawReport::fail(NAME, format!("topen {t:?} overlaps an earlier one"));
        }
        if !st.is_topen(t) {
            return LawReport::fail(NAME, format!("partition member {t:?} is not topen"));
        }
        for p in t.iter() {
            if st.community(p) != *t {
                return LawReport::fail(
                    NAME,
                    format!("{t:?} is not the community of its member {}", st.label(p)),
                );
            }
        }
        covered = covered.union(t);
    }
    if covered.complement() != part.residue {
        return LawReport::fail(NAME, "residue is not the complement of the topens".into());
    }
    for p in st.points() {
        if st.is_regular(p) != covered.contains(p) {
            return LawReport::fail(
                NAME,
                format!("point {} regular={} but covered={}", st.label(p), st.is_regular(p), covered.contains(p)),
            );
        }
    }
    if !family.truncated {
        for o in &family.opens {
            if st.is_topen(o) && !part.topens.iter().any(|t| o.is_subset(t)) {
                return LawReport::fail(NAME, format!("topen {o:?} escapes every partition member"));
            }
        }
    }
    LawReport::pass(NAME)
}

fn law_regular_eq_wr_unconflicted(st: &SemiTopology) -> LawReport {
    const NAME: &str = "regular = weakly regular + unconflicted";
    let failure = st.points().find_map(|p| {
        let lhs = st.is_regular(p);
        let rhs = st.is_weakly_regular(p) && st.is_unconflicted(p);
        (lhs != rhs).then(|| format!("point {}: regular={lhs} wr∧uc={rhs}", st.label(p)))
    });
    verdict(NAME, failure)
}

fn law_regular_eq_qr_hypertransitive(st: &SemiTopology, family: &OpenFamily) -> LawReport {
    const NAME: &str = "regular = quasiregular + hypertransitive";
    if family.truncated {
        return LawReport::skip(NAME, "family truncated");
    }
    let hyper = match st.hypertransitive_all(family) {
        Ok(h) => h,
        Err(e) => return LawReport::fail(NAME, e.to_string()),
    };
    let failure = st.points().find_map(|p| {
        let lhs = st.is_regular(p);
        let rhs = st.is_quasiregular(p) && hyper[p];
        (lhs != rhs).then(|| format!("point {}: regular={lhs} qr∧ht={rhs}", st.label(p)))
    });
    verdict(NAME, failure)
}

fn law_star_is_closed_nbhd_intersection(st: &SemiTopology, family: &OpenFamily) -> LawReport {
    const NAME: &str = "star = intersection of closed neighbourhoods; closure(community) = star when weakly regular";
    if family.truncated {
        return LawReport::skip(NAME, "family truncated");
    }
    for p in st.points() {
        let star = st.intertwined_of(p);
        let cns = match st.closed_neighbourhoods_of(p, family) {
            Ok(c) => c,
            Err(e) => return LawReport::fail(NAME, e.to_string()),
        };
        let mut meet = st.universe();
        for c in &cns {
            meet = meet.intersection(c);
        }
        if meet != star {
            return LawReport::fail(
                NAME,
                format!("point {}: ⋂ closed nbhds = {meet:?} ≠ ∗p = {star:?}", st.label(p)),
            );
        }
        if st.is_weakly_regular(p) && st.closure(&st.community(p)) != star {
            return LawReport::fail(
                NAME,
                format!("weakly regular {}: closure(K) ≠ ∗p", st.label(p)),
            );
        }
    }
    LawReport::pass(NAME)
}

fn law_regular_eq_wr_minimal_cn(st: &SemiTopology) -> LawReport {
    const NAME: &str = "regular = weakly regular + star minimal among all closed neighbourhoods";
    let minimal = st.minimal_closed_neighbourhoods();
    let failure = st.points().find_map(|p| {
        let star = st.intertwined_of(p);
        let lhs = st.is_regular(p);
        let rhs = st.is_weakly_regular(p) && minimal.contains(&star);
        (lhs != rhs).then(|| format!("point {}: regular={lhs} wr∧minimal={rhs}", st.label(p)))
    });
    verdict(NAME, failure)
}

fn law_interior_closure_algebra(st: &SemiTopology, family: &OpenFamily) -> LawReport {
    const NAME: &str = "interior/closure laws and the regular-open/closed bijection";
    let sets = probe_sets(st);
    for s in &sets {
        let int = st.interior(s);
        let cl = st.closure(s);
        if !int.is_subset(s) || !s.is_subset(&cl) {
            return LawReport::fail(NAME, format!("{s:?}: interior/closure not decreasing/increasing"));
        }
        if st.interior(&int) != int || st.closure(&cl) != cl {
            return LawReport::fail(NAME, format!("{s:?}: idempotence fails"));
        }
        if st.interior(&s.complement()) != cl.complement()
            || st.closure(&s.complement()) != int.complement()
        {
            return LawReport::fail(NAME, format!("{s:?}: duality fails"));
        }
        let ic = st.interior(&cl);
        if st.interior(&st.closure(&ic)) != ic {
            return LawReport::fail(NAME, format!("{s:?}: interior∘closure does not stabilise"));
        }
    }
    for (i, a) in sets.iter().enumerate() {
        // A sparse pair sample keeps monotonicity quadratic-free.
        for b in sets.iter().skip(i).step_by(7) {
            if a.is_subset(b)
                && (!st.interior(a).is_subset(&st.interior(b)) || !st.closure(a).is_subset(&st.closure(b)))
            {
                return LawReport::fail(NAME, format!("monotonicity fails on {a:?} ⊆ {b:?}"));
            }
        }
    }
    if !family.truncated && family.opens.len() <= 1 << 16 {
        let ros = match st.regular_opens(family) {
            Ok(v) => v,
            Err(e) => return LawReport::fail(NAME, e.to_string()),
        };
        let rcs = match st.regular_closeds(family) {
            Ok(v) => v,
            Err(e) => return LawReport::fail(NAME, e.to_string()),
        };
        let mut closures: Vec<PointSet> = ros.iter().map(|o| st.closure(o)).collect();
        closures.sort();
        if closures != rcs {
            return LawReport::fail(NAME, "closure does not map regular opens onto regular closeds".into());
        }
        for o in &ros {
            if st.interior(&st.closure(o)) != *o {
                return LawReport::fail(NAME, format!("{o:?}: interior∘closure is not the identity on regular opens"));
            }
        }
        for c in &rcs {
            if st.closure(&st.interior(c)) != *c {
                return LawReport::fail(NAME, format!("{c:?}: closure∘interior is not the identity on regular closeds"));
            }
        }
    }
    LawReport::pass(NAME)
}

fn law_minimal_closed_nbhds(st: &SemiTopology, family: &OpenFamily) -> LawReport {
    const NAME: &str = "minimal nonempty regular closed sets = minimal closed neighbourhoods";
    if family.truncated {
        return LawReport::skip(NAME, "family truncated");
    }
    let fast = st.minimal_closed_neighbourhoods();
    let rcs = match st.regular_closeds(family) {
        Ok(v) => v,
        Err(e) => return LawReport::fail(NAME, e.to_string()),
    };
    let nonempty: Vec<&PointSet> = rcs.iter().filter(|c| !c.is_empty()).collect();
    let mut minimal_rc: Vec<PointSet> = nonempty
        .iter()
        .filter(|c| !nonempty.iter().any(|d| d.is_strict_subset(c)))
        .map(|c| **c)
        .collect();
    minimal_rc.sort();
    if fast != minimal_rc {
        return LawReport::fail(
            NAME,
            format!("fast path {fast:?} vs minimal nonempty regular closeds {minimal_rc:?}"),
        );
    }
    LawReport::pass(NAME)
}

fn law_quasiregular_has_regular_point(st: &SemiTopology) -> LawReport {
    const NAME: &str = "a quasiregular space yields a regular point";
    let found = st.find_regular_point();
    if let Some(p) = found {
        if !st.is_regular(p) {
            return LawReport::fail(NAME, format!("find_regular_point returned irregular {}", st.label(p)));
        }
    }
    let scan = st.points().find(|&p| st.is_regular(p));
    if found.is_some() != scan.is_some() {
        return LawReport::fail(NAME, "constructive search disagrees with the full scan".into());
    }
    if !st.is_empty() && st.points().all(|p| st.is_quasiregular(p)) && found.is_none() {
        return LawReport::fail(NAME, "quasiregular space without a regular point".into());
    }
    LawReport::pass(NAME)
}

fn law_closure_below_star(st: &SemiTopology) -> LawReport {
    const NAME: &str = "closure(p) ⊆ ∗p, equal when interior(closure(p)) is nonempty";
    let failure = st.points().find_map(|p| {
        let cl = st.closure(&PointSet::singleton(st.len(), p));
        let star = st.intertwined_of(p);
        if !cl.is_subset(&star) {
            return Some(format!("point {}: closure ⊄ star", st.label(p)));
        }
        if !st.interior(&cl).is_empty() && cl != star {
            return Some(format!("point {}: interior(closure) nonempty but closure ≠ star", st.label(p)));
        }
        None
    });
    verdict(NAME, failure)
}

fn law_no_split_of_transitive(st: &SemiTopology) -> LawReport {
    const NAME: &str = "continuous assignments cannot split transitive sets; splitting assignments exist exactly otherwise";
    let assignments = probe_assignments(st);
    for t in probe_sets(st) {
        let transitive = st.is_transitive(&t);
        match st.build_splitting_assignment(&t) {
            Some(_) if transitive => {
                return LawReport::fail(NAME, format!("built a splitting assignment for transitive {t:?}"));
            }
            Some(f) => {
                if st.find_split(&f, &t).is_none() {
                    return LawReport::fail(NAME, format!("claimed splitting assignment fails to split {t:?}"));
                }
            }
            None if !transitive => {
                return LawReport::fail(NAME, format!("no splitting assignment for non-transitive {t:?}"));
            }
            None => {}
        }
        if transitive {
            for f in &assignments {
                if let Some((p, q)) = st.find_split(f, &t) {
                    return LawReport::fail(
                        NAME,
                        format!("transitive {t:?} split at {}/{}", st.label(p), st.label(q)),
                    );
                }
            }
        }
    }
    LawReport::pass(NAME)
}

fn law_propagation_reaches_closure(st: &SemiTopology, family: &OpenFamily) -> LawReport {
    const NAME: &str = "propagation from an open seed reaches exactly closure(seed) in one round";
    let mut seeds: Vec<PointSet> = st.basis().to_vec();
    if !family.truncated {
        seeds.extend(family.opens.iter().take(1 << 12));
    }
    seeds.sort();
    seeds.dedup();
    for seed in seeds.iter().filter(|s| !s.is_empty()) {
        let r = match st.propagate(seed, 0) {
            Ok(r) => r,
            Err(e) => return LawReport::fail(NAME, format!("seed {seed:?}: {e}")),
        };
        let reached = r.committed_grade2.union(&r.committed_grade1);
        if reached != st.closure(seed) {
            return LawReport::fail(NAME, format!("seed {seed:?} reached {reached:?}"));
        }
        if r.committed_grade2 != *seed || r.committed_grade1.intersects(seed) {
            return LawReport::fail(NAME, format!("seed {seed:?}: grades overlap"));
        }
        if r.rounds != 1 {
            return LawReport::fail(NAME, format!("seed {seed:?}: {} rounds", r.rounds));
        }
        match st.topen_reached_by(seed) {
            Err(e) => return LawReport::fail(NAME, format!("seed {seed:?}: {e}")),
            Ok(topens) => {
                for t in topens {
                    if !t.is_subset(&reached) {
                        return LawReport::fail(NAME, format!("reached topen {t:?} outside closure"));
                    }
                }
            }
        }
    }
    LawReport::pass(NAME)
}

fn law_intertwined_continuity_points_agree(st: &SemiTopology) -> LawReport {
    const NAME: &str = "intertwined continuity points carry equal values";
    for f in probe_assignments(st) {
        for p in st.points() {
            for q in st.points().skip(p + 1) {
                if st.intertwined(p, q)
                    && st.continuous_at(&f, p)
                    && st.continuous_at(&f, q)
                    && f.value(p) != f.value(q)
                {
                    return LawReport::fail(
                        NAME,
                        format!("{} ⋒ {} disagree under a continuous-at-both assignment", st.label(p), st.label(q)),
                    );
                }
            }
        }
    }
    LawReport::pass(NAME)
}

/// Runs every law against one space. `cap` bounds the open-family
/// enumeration used by the exact checks.
pub fn check_space(st: &SemiTopology, cap: usize) -> Vec<LawReport> {
    let family = st.enumerate_opens(cap);
    vec![
        law_oracle_agreement(st),
        law_partition(st, &family),
        law_regular_eq_wr_unconflicted(st),
        law_regular_eq_qr_hypertransitive(st, &family),
        law_star_is_closed_nbhd_intersection(st, &family),
        law_regular_eq_wr_minimal_cn(st),
        law_interior_closure_algebra(st, &family),
        law_minimal_closed_nbhds(st, &family),
        law_quasiregular_has_regular_point(st),
        law_closure_below_star(st),
        law_no_split_of_transitive(st),
        law_propagation_reaches_closure(st, &family),
        law_intertwined_continuity_points_agree(st),
    ]
}

/// The structural theorems only (laws b–i), without the oracle sweep or the
/// value laws; used where the caller iterates over many instances and wants
/// the cheaper subset.
pub fn theorem_reports(st: &SemiTopology, cap: usize) -> Vec<LawReport> {
    let family = st.enumerate_opens(cap);
    vec![
        law_partition(st, &family),
        law_regular_eq_wr_unconflicted(st),
        law_regular_eq_qr_hypertransitive(st, &family),
        law_star_is_closed_nbhd_intersection(st, &family),
        law_regular_eq_wr_minimal_cn(st),
        law_interior_closure_algebra(st, &family),
        law_minimal_closed_nbhds(st, &family),
        law_quasiregular_has_regular_point(st),
        law_closure_below_star(st),
    ]
}

/// The value/consensus laws only (the split, propagation and agreement
/// checks).
pub fn value_reports(st: &SemiTopology, cap: usize) -> Vec<LawReport> {
    let family = st.enumerate_opens(cap);
    vec![
        law_no_split_of_transitive(st),
        law_propagation_reaches_closure(st, &family),
        law_intertwined_continuity_points_agree(st),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::space::DEFAULT_OPENS_CAP;

    #[test]
    fn all_laws_hold_on_the_gallery() {
        for (name, _) in gallery::NAMES {
            let params: &[u64] = match *name {
                "discrete" | "trivial" | "supermajority" | "all_but_one" => &[4],
                "more_than_one" => &[4],
                "grid_quorum" | "two_triples_line" => &[3],
                "final_segment_block" => &[12],
                _ => &[],
            };
            let st = gallery::build(name, params).unwrap();
            for law in check_space(&st, DEFAULT_OPENS_CAP) {
                assert!(law.ok, "{name}: law `{}` failed: {}", law.name, law.detail);
            }
        }
    }

    #[test]
    fn laws_hold_on_random_spaces() {
        for seed in 0..40 {
            let st = gallery::random_semitopology(1 + (seed as usize % 6), seed as usize % 7, seed).unwrap();
            for law in check_space(&st, DEFAULT_OPENS_CAP) {
                assert!(law.ok, "seed {seed}: law `{}` failed: {}", law.name, law.detail);
            }
        }
    }
}
