//! Acceptance gate: five criteria, one test each, every run printing a
//! `PASS` line with its elapsed time. Criteria and their time budgets:
//!
//! 1. fixture exactness — every pinned example table matches, < 1 s;
//! 2. oracle equivalence — 1,000 seeded random spaces (n ≤ 8, k ≤ 10) and
//!    every basis family on three points agree with the brute force, < 60 s;
//! 3. theorem suite — the structural laws hold on the same 1,000 spaces;
//! 4. value laws — split/propagation/agreement on 1,000 (space, assignment)
//!    pairs, < 30 s;
//! 5. CLI contract — byte-exact round-trips, `check` exit 0 on every
//!    fixture, clean `oracle-diff`, < 30 s.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use semitopology::{doc, gallery, laws, PointSet, SemiTopology, ValueAssignment, DEFAULT_OPENS_CAP};

const CAP: usize = DEFAULT_OPENS_CAP;

/// The random corpus shared by criteria 2–4: seeds 0..1000, n ≤ 8, k ≤ 10.
fn corpus() -> impl Iterator<Item = (u64, SemiTopology)> {
    (0..1000u64).map(|seed| {
        let n = 1 + (seed as usize % 8);
        let k = seed as usize % 11;
        (seed, gallery::random_semitopology(n, k, seed).expect("corpus parameters are valid"))
    })
}

fn subsets(n: usize) -> impl Iterator<Item = PointSet> {
    (0u64..(1 << n)).map(move |bits| PointSet::from_indices(n, (0..n).filter(|i| bits & (1 << i) != 0)))
}

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("acceptance {criterion}: PASS in {:.2?}", elapsed);
    assert!(
        elapsed < budget,
        "{criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

fn resolve(st: &SemiTopology, labels: &[&str]) -> PointSet {
    PointSet::from_indices(st.len(), labels.iter().map(|l| st.point(l).expect("pinned label")))
}

#[test]
fn criterion_1_fixture_exactness() {
    let start = Instant::now();

    // Every pinned table: star sets, communities, flags, partition, minimal
    // closed neighbourhoods. Zero tolerance.
    for pin in gallery::PINNED {
        let st = gallery::build(pin.name, pin.params).unwrap();
        let classification = st.classify_all(CAP);
        assert!(!classification.truncated, "{}", pin.name);
        assert_eq!(st.len(), pin.points.len(), "{}", pin.name);
        for expect in pin.points {
            let p = st.point(expect.label).unwrap();
            let got = &classification.points[p];
            let want_flags: Vec<bool> = "RWQUH"
                .chars()
                .zip(expect.flags.chars())
                .map(|(mark, have)| mark == have)
                .collect();
            assert_eq!(got.intertwined, resolve(&st, expect.star), "{} ∗{}", pin.name, expect.label);
            assert_eq!(got.community, resolve(&st, expect.community), "{} K({})", pin.name, expect.label);
            assert!(got.hypertransitive_known, "{}", pin.name);
            let have_flags = [got.regular, got.weakly_regular, got.quasiregular, got.unconflicted, got.hypertransitive];
            assert_eq!(have_flags.to_vec(), want_flags, "{} flags of {}", pin.name, expect.label);
        }
        let part = st.maximal_topen_partition();
        let mut topens: Vec<PointSet> = pin.topens.iter().map(|t| resolve(&st, t)).collect();
        topens.sort();
        assert_eq!(part.topens, topens, "{} topens", pin.name);
        assert_eq!(part.residue, resolve(&st, pin.residue), "{} residue", pin.name);
        let mut mcn: Vec<PointSet> = pin.min_closed_nbhds.iter().map(|c| resolve(&st, c)).collect();
        mcn.sort();
        assert_eq!(st.minimal_closed_neighbourhoods(), mcn, "{} minimal closed nbhds", pin.name);
    }

    // Pinned point-wise facts beyond the tables.
    let sierpinski = gallery::build("sierpinski", &[]).unwrap();
    assert_eq!(sierpinski.closure(&PointSet::singleton(2, 0)), PointSet::singleton(2, 0));
    assert_eq!(sierpinski.closure(&PointSet::singleton(2, 1)), PointSet::full(2));
    let fam = sierpinski.enumerate_opens(CAP);
    assert_eq!(
        sierpinski.closed_neighbourhoods_of(0, &fam).unwrap(),
        vec![PointSet::full(2)],
        "the only closed neighbourhood of 0 is the whole space"
    );
    assert!(!sierpinski.is_regular_open(&PointSet::singleton(2, 1)));
    assert!(
        sierpinski
            .closure(&PointSet::singleton(2, 0))
            .is_strict_subset(&sierpinski.intertwined_of(0)),
        "closure(0) sits strictly below ∗0"
    );

    let top_left = gallery::build("fig2_top_left", &[]).unwrap();
    assert!(top_left.boundary(&top_left.intertwined_of(1)).is_empty());
    assert_eq!(
        top_left.interior(&PointSet::from_indices(3, [0, 1])),
        PointSet::singleton(3, 0)
    );

    let square = gallery::build("square", &[]).unwrap();
    assert!(square.interior(&PointSet::singleton(4, 0)).is_empty());
    let fam = square.enumerate_opens(CAP);
    let zero_cns = square.closed_neighbourhoods_of(0, &fam).unwrap();
    let minimal_of_zero: Vec<&PointSet> = zero_cns
        .iter()
        .filter(|c| !zero_cns.iter().any(|d| d.is_strict_subset(c)))
        .collect();
    assert_eq!(
        minimal_of_zero,
        vec![&PointSet::from_indices(4, [0, 1]), &PointSet::from_indices(4, [0, 3])],
        "0 has two minimal closed neighbourhoods"
    );

    // The closed set {1,*} in ast12: its interior is {1}, and * sits on the
    // boundary without being intertwined with any interior point.
    let ast12 = gallery::build("ast12", &[]).unwrap();
    let star_pt = ast12.point("*").unwrap();
    let one = ast12.point("1").unwrap();
    let c = PointSet::from_indices(3, [star_pt, one]);
    assert!(ast12.is_closed(&c));
    assert_eq!(ast12.interior(&c), PointSet::singleton(3, one));
    assert_eq!(ast12.boundary(&c), PointSet::singleton(3, star_pt));
    assert!(!ast12.intertwined(star_pt, one));

    // ast12b: two closed neighbourhoods kissing at the regular point *.
    let ast12b = gallery::build("ast12b", &[]).unwrap();
    let s = ast12b.point("*").unwrap();
    let c1 = resolve(&ast12b, &["*", "1"]);
    let c2 = resolve(&ast12b, &["*", "3"]);
    assert!(ast12b.is_closed(&c1) && ast12b.is_closed(&c2));
    assert!(!ast12b.interior(&c1).is_empty() && !ast12b.interior(&c2).is_empty());
    assert_eq!(ast12b.kiss(&c1, &c2), PointSet::singleton(4, s));
    assert!(ast12b.is_regular(s) && ast12b.is_unconflicted(s));

    // counterexample_1: * lies on the boundary of ∗1 = {*,1}.
    let ce1 = gallery::build("counterexample_1", &[]).unwrap();
    let s = ce1.point("*").unwrap();
    let one = ce1.point("1").unwrap();
    assert_eq!(ce1.intertwined_of(one), resolve(&ce1, &["*", "1"]));
    assert!(ce1.boundary(&ce1.intertwined_of(one)).contains(s));

    // fig2_lower_right: {1} and {0,2} witness the failure of
    // hypertransitivity at * — both open, both meeting every neighbourhood
    // of *, yet disjoint.
    let lr = gallery::build("fig2_lower_right", &[]).unwrap();
    let s = lr.point("*").unwrap();
    let o1 = resolve(&lr, &["1"]);
    let o2 = resolve(&lr, &["0", "2"]);
    assert!(lr.is_open(&o1) && lr.is_open(&o2));
    assert!(lr.closure(&o1).contains(s) && lr.closure(&o2).contains(s));
    assert!(!o1.intersects(&o2));

    // fig_irregular_right: ∗0 is a closed neighbourhood but not minimal.
    let ir = gallery::build("fig_irregular_right", &[]).unwrap();
    let star0 = ir.intertwined_of(0);
    assert!(ir.is_closed(&star0) && !ir.interior(&star0).is_empty());
    assert!(!ir.minimal_closed_neighbourhoods().contains(&star0));

    // Parametric families.
    assert!(gallery::build("supermajority", &[4]).unwrap().is_intertwined_space());
    assert!(gallery::build("all_but_one", &[5]).unwrap().is_intertwined_space());
    assert!(gallery::build("grid_quorum", &[3]).unwrap().is_intertwined_space());
    let mto = gallery::build("more_than_one", &[4]).unwrap();
    assert!(mto.points().all(|p| !mto.is_quasiregular(p)));

    // two_triples_line: the ends of the line can be split by a locally
    // continuous assignment from m = 3 up (the m = 2 truncation collapses
    // into an intertwined space), while the whole line can never be split
    // by a globally continuous assignment.
    for m in 2..=5usize {
        let line = gallery::build("two_triples_line", &[m as u64]).unwrap();
        let ends = PointSet::from_indices(2 * m + 1, [0, 2 * m]);
        if m == 2 {
            assert!(line.is_intertwined_space());
            assert!(line.build_splitting_assignment(&ends).is_none());
        } else {
            let f = line.build_splitting_assignment(&ends).unwrap();
            let (p, q) = line.find_split(&f, &ends).unwrap();
            assert_ne!(f.value(p), f.value(q));
        }
        for f in [
            line.build_splitting_assignment(&ends),
            Some(ValueAssignment::constant(2 * m + 1, "A")),
        ]
        .into_iter()
        .flatten()
        {
            if line.is_continuous(&f) {
                assert!(line.find_split(&f, &line.universe()).is_none());
            }
        }
    }

    // final_segment_block: eight closed sets strictly between closure(0)
    // and ∗0, at any admissible truncation.
    for n in [12u64, 16] {
        let blocks = gallery::build("final_segment_block", &[n]).unwrap();
        let zero = PointSet::singleton(n as usize, 0);
        assert_eq!(blocks.closure(&zero), zero);
        let star0 = blocks.intertwined_of(0);
        assert_eq!(star0, PointSet::from_indices(n as usize, 0..10));
        let strictly_between = (2..10)
            .map(|top| PointSet::from_indices(n as usize, 0..top))
            .filter(|c| blocks.is_closed(c) && zero.is_strict_subset(c) && c.is_strict_subset(&star0))
            .count();
        assert_eq!(strictly_between, 8);
    }

    // nbhd examples: {0,1} and {0,2} are neighbourhoods of 0, {0} is not open.
    let nbhd = gallery::build("nbhd_triangle", &[]).unwrap();
    assert!(nbhd.is_open(&PointSet::from_indices(3, [0, 1])));
    assert!(nbhd.is_open(&PointSet::from_indices(3, [0, 2])));
    assert!(!nbhd.is_open(&PointSet::singleton(3, 0)));

    // two_min: point 1 has two distinct minimal open neighbourhoods.
    let two_min = gallery::build("two_min", &[]).unwrap();
    let fam = two_min.enumerate_opens(CAP);
    let nbhds: Vec<&PointSet> = fam.opens.iter().filter(|o| o.contains(1)).collect();
    let minimal: Vec<&&PointSet> = nbhds
        .iter()
        .filter(|o| !nbhds.iter().any(|other| other.is_strict_subset(o)))
        .collect();
    assert_eq!(minimal.len(), 2);

    finish("1 (fixture exactness)", start, Duration::from_secs(1));
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();

    for (seed, st) in corpus() {
        if let Some(bad) = laws::oracle_mismatch(&st).expect("corpus bases fit the oracle") {
            panic!(
                "seed {seed}: {} on {} disagrees: fast={} oracle={}",
                bad.predicate, bad.instance, bad.fast, bad.oracle
            );
        }
    }

    // Exhaustive over every basis family on three points: all subsets of the
    // seven nonempty generators.
    let generators: Vec<Vec<usize>> = (1u64..8)
        .map(|bits| (0..3).filter(|i| bits & (1 << i) != 0).collect())
        .collect();
    for mask in 0u64..(1 << 7) {
        let basis: Vec<Vec<usize>> = generators
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, g)| g.clone())
            .collect();
        let st = SemiTopology::new(3, basis).unwrap();
        if let Some(bad) = laws::oracle_mismatch(&st).unwrap() {
            panic!(
                "basis mask {mask}: {} on {} disagrees: fast={} oracle={}",
                bad.predicate, bad.instance, bad.fast, bad.oracle
            );
        }
    }

    finish("2 (oracle equivalence)", start, Duration::from_secs(60));
}

#[test]
fn criterion_3_theorem_suite() {
    let start = Instant::now();

    // Tally violations per law over the whole corpus so the report shows
    // every law's standing, then require zero violations for each.
    let mut tallies: Vec<(&'static str, usize, String)> = Vec::new();
    for (seed, st) in corpus() {
        for (i, law) in laws::theorem_reports(&st, CAP).into_iter().enumerate() {
            if tallies.len() <= i {
                tallies.push((law.name, 0, String::new()));
            }
            assert!(
                law.ok || !law.detail.is_empty(),
                "laws must carry a witness when they fail"
            );
            assert!(
                !law.ok || law.detail.is_empty(),
                "seed {seed}: law `{}` did not run exactly: {}",
                law.name,
                law.detail
            );
            if !law.ok {
                let entry = &mut tallies[i];
                entry.1 += 1;
                if entry.2.is_empty() {
                    entry.2 = format!("first witness at seed {seed}: {}", law.detail);
                }
            }
        }
    }
    for (name, violations, witness) in &tallies {
        let mark = if *violations == 0 { "PASS" } else { "FAIL" };
        println!("acceptance 3 law [{mark}] {name}: {violations} violation(s) {witness}");
    }
    let elapsed = start.elapsed();
    println!("acceptance 3 (theorem suite): checked in {elapsed:.2?}");
    for (name, violations, witness) in tallies {
        assert_eq!(
            violations, 0,
            "law `{name}` violated on the corpus; {witness}. A five-point refutation of the \
             reverse direction of the minimal-star law is pinned in the classification tests \
             (basis {{0,1}},{{0,2}},{{1,3}},{{2,3,4}}, point 4)."
        );
    }
}

#[test]
fn criterion_4_value_laws() {
    let start = Instant::now();

    for (seed, st) in corpus() {
        let n = st.len();
        // One random assignment per instance, two or three values.
        let values = 2 + (seed as usize % 2);
        let labels: Vec<String> = (0..values).map(|v| format!("v{v}")).collect();
        let picks: Vec<usize> = (0..n).map(|p| (seed as usize + p * 7) % values).collect();
        let f = ValueAssignment::new(picks, labels).unwrap();

        let continuity = PointSet::from_indices(n, st.points().filter(|&p| st.continuous_at(&f, p)));

        for t in subsets(n) {
            if st.is_transitive(&t) {
                assert!(st.find_split(&f, &t).is_none(), "seed {seed}: split of transitive {t:?}");
                assert!(
                    st.build_splitting_assignment(&t).is_none(),
                    "seed {seed}: splitting assignment for transitive {t:?}"
                );
            } else {
                let g = st
                    .build_splitting_assignment(&t)
                    .unwrap_or_else(|| panic!("seed {seed}: no splitting assignment for {t:?}"));
                let (p, q) = st
                    .find_split(&g, &t)
                    .unwrap_or_else(|| panic!("seed {seed}: assignment fails to split {t:?}"));
                assert_ne!(g.value(p), g.value(q));
            }
        }

        // Propagation from every nonempty open seed.
        for seed_set in st.enumerate_opens(CAP).opens.iter().filter(|o| !o.is_empty()) {
            let r = st.propagate(seed_set, 0).unwrap();
            assert_eq!(
                r.committed_grade2.union(&r.committed_grade1),
                st.closure(seed_set),
                "seed {seed}: propagation result"
            );
            assert_eq!(r.committed_grade2, *seed_set);
            assert!(!r.committed_grade1.intersects(seed_set));
            assert_eq!(r.rounds, 1, "seed {seed}: fixpoint must land in one round");
        }

        // Intertwined continuity points agree.
        for p in continuity.iter() {
            for q in continuity.iter().filter(|&q| q > p) {
                if st.intertwined(p, q) {
                    assert_eq!(f.value(p), f.value(q), "seed {seed}: {p} ⋒ {q} disagree");
                }
            }
        }
    }

    finish("4 (value laws)", start, Duration::from_secs(30));
}

fn semitop() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semitop"))
}

#[test]
fn criterion_5_cli_contract() {
    let start = Instant::now();
    let dir = std::env::temp_dir().join(format!("semitop-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let mut fixtures: Vec<(String, PathBuf)> = Vec::new();
    for pin in gallery::PINNED {
        let st = gallery::build(pin.name, pin.params).unwrap();

        // Byte-exact round trip through the document format.
        let text = doc::save_string(&st, None);
        let loaded = doc::load_str(&text).unwrap();
        assert!(loaded.warnings.is_empty(), "{}", pin.name);
        assert_eq!(doc::save_string(&loaded.space, None), text, "{} round trip", pin.name);

        let path = dir.join(format!("{}.json", pin.name));
        std::fs::write(&path, &text).unwrap();
        fixtures.push((pin.name.to_string(), path));
    }

    // `gallery` writes the same canonical document the library produces.
    let out = dir.join("gallery_out.json");
    let status = semitop().args(["gallery", "fig2_top_left", "--out"]).arg(&out).status().unwrap();
    assert!(status.success());
    let via_cli = std::fs::read_to_string(&out).unwrap();
    let direct = doc::save_string(&gallery::build("fig2_top_left", &[]).unwrap(), None);
    assert_eq!(via_cli, direct);

    // `check` exits 0 on every fixture.
    for (name, path) in &fixtures {
        let output = semitop().arg("check").arg(path).output().unwrap();
        assert!(
            output.status.success(),
            "check failed on {name}:\n{}\n{}",
            String::from_utf8_lossy(&output.stdout),
            String::from_utf8_lossy(&output.stderr)
        );
    }

    // Classify on the top-left space reports the pinned row for point 1.
    let (_, top_left) = fixtures.iter().find(|(n, _)| n == "fig2_top_left").unwrap().clone();
    let output = semitop().arg("classify").arg(&top_left).arg("--json").output().unwrap();
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let row = &parsed["points"][1];
    assert_eq!(row["weakly_regular"], serde_json::json!(true));
    assert_eq!(row["regular"], serde_json::json!(false));

    // Propagate matches the pinned grades.
    let output = semitop()
        .arg("propagate")
        .arg(&top_left)
        .args(["--seed", "0", "--value", "A", "--json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(parsed["grade2"], serde_json::json!(["0"]));
    assert_eq!(parsed["grade1"], serde_json::json!(["1"]));

    // Exit code 2 on malformed and on schema-invalid documents.
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{oops").unwrap();
    let status = semitop().arg("classify").arg(&bad).status().unwrap();
    assert_eq!(status.code(), Some(2));
    std::fs::write(&bad, r#"{"points":["0"],"basis":[["zz"]]}"#).unwrap();
    let status = semitop().arg("partition").arg(&bad).status().unwrap();
    assert_eq!(status.code(), Some(2));
    let status = semitop().arg("no-such-command").status().unwrap();
    assert_eq!(status.code(), Some(2));

    // export-dot emits a graph mentioning every point.
    let output = semitop().arg("export-dot").arg(&top_left).output().unwrap();
    assert!(output.status.success());
    let dot = String::from_utf8_lossy(&output.stdout);
    assert!(dot.starts_with("graph semitopology {") && dot.contains("cluster_topen"));

    // oracle-diff stays clean over 200 iterations.
    let output = semitop()
        .args(["oracle-diff", "--iters", "200", "--seed", "7"])
        .current_dir(&dir)
        .output()
        .unwrap();
    assert!(
        output.status.success(),
        "oracle-diff failed:\n{}",
        String::from_utf8_lossy(&output.stderr)
    );

    std::fs::remove_dir_all(&dir).ok();
    finish("5 (CLI contract)", start, Duration::from_secs(30));
}
