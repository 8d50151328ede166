//! Named example spaces and parametric families, with pinned expectations.
//!
//! Every named space that has a known classification carries a pinned table
//! (star sets, communities, flags, partition, minimal closed
//! neighbourhoods). The tables were frozen from an independent brute-force
//! enumeration and the fixture test suite replays them against the library;
//! they are also the data behind the `gallery` CLI subcommand.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::space::SemiTopology;

/// All fixture names accepted by [`build`]. Parametric families list the
/// parameters they take.
pub const NAMES: &[(&str, &str)] = &[
    ("discrete", "n — every subset open"),
    ("trivial", "n — only the empty set and the whole space"),
    ("supermajority", "n — subsets of at least ⌈2n/3⌉ points"),
    ("all_but_one", "n — complements of singletons"),
    ("more_than_one", "n — subsets of at least two points"),
    ("grid_quorum", "k — k×k grid, a quorum is a full row plus a full column"),
    ("two_min", "a point with two distinct minimal open neighbourhoods"),
    ("fig2_top_left", "three points, opens {0} and {2}; two maximal topens"),
    ("fig2_top_right", "three points, all pairs except {0,1},{1,2} open"),
    ("fig2_lower_left", "five points, two topen communities and a conflicted middle"),
    ("fig2_lower_right", "singletons plus two overlapping triples; residue point *"),
    ("not_strong_topen", "triangle of pair sets; a topen that is not strong"),
    ("not_strongly_transitive", "a topology where {0,2} is transitive but not strongly"),
    ("square", "four clopen edges of a square; no topens at all"),
    ("fig_irregular_left", "community {1,2} shared by an outside point"),
    ("fig_irregular_right", "a community containing two distinct topens"),
    ("sierpinski", "two points, {1} open"),
    ("two_triples_line", "m — overlapping triples {2i,2i+1,2i+2} on 0..=2m"),
    ("final_segment_block", "N — final segments plus the block {0..9}, N ≥ 12"),
    ("fig_boundaries_mid", "boundary point of ∗0 that is conflicted yet weakly regular"),
    ("fig_boundaries_right", "boundary point that is conflicted and not quasiregular"),
    ("counterexample_1", "boundary point of ∗1 not intertwined with its interior"),
    ("ast12", "closed neighbourhood {1,*} whose interior misses *"),
    ("ast12b", "two closed neighbourhoods kissing at a regular point"),
    ("nbhd_triangle", "{0,1},{0,2} are neighbourhoods of 0 but {0} is not open"),
];

fn need(params: &[u64], count: usize, name: &str) -> Result<()> {
    if params.len() != count {
        return Err(Error::BadParams(format!(
            "fixture `{name}` takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn size(params: &[u64], name: &str, min: u64, max: u64) -> Result<usize> {
    need(params, 1, name)?;
    let n = params[0];
    if n < min || n > max {
        return Err(Error::BadParams(format!(
            "fixture `{name}` needs a parameter in {min}..={max}, got {n}"
        )));
    }
    Ok(n as usize)
}

fn plain(n: usize, gens: &[&[usize]]) -> SemiTopology {
    SemiTopology::new(n, gens.iter().map(|g| g.to_vec())).expect("fixture bases are valid")
}

fn labelled(labels: &[&str], gens: &[&[usize]]) -> SemiTopology {
    SemiTopology::with_labels(
        labels.iter().map(|s| s.to_string()).collect(),
        gens.iter().map(|g| g.to_vec()),
    )
    .expect("fixture bases are valid")
}

/// Builds a named space. Parametric families take their parameters in
/// `params`; fixed fixtures take none.
pub fn build(name: &str, params: &[u64]) -> Result<SemiTopology> {
    let fixed = |st: SemiTopology| -> Result<SemiTopology> {
        need(params, 0, name)?;
        Ok(st)
    };
    match name {
        "discrete" => {
            let n = size(params, name, 1, 64)?;
            Ok(SemiTopology::new(n, (0..n).map(|i| vec![i]))?)
        }
        "trivial" => {
            let n = size(params, name, 1, 64)?;
            Ok(SemiTopology::new(n, Vec::<Vec<usize>>::new())?)
        }
        "supermajority" => {
            let n = size(params, name, 1, 20)?;
            let threshold = (2 * n).div_ceil(3);
            Ok(SemiTopology::new(n, subsets_of_size(n, threshold))?)
        }
        "all_but_one" => {
            let n = size(params, name, 1, 64)?;
            Ok(SemiTopology::new(
                n,
                (0..n).map(|p| (0..n).filter(|&q| q != p).collect::<Vec<_>>()),
            )?)
        }
        "more_than_one" => {
            let n = size(params, name, 2, 20)?;
            Ok(SemiTopology::new(n, subsets_of_size(n, 2))?)
        }
        "grid_quorum" => {
            let k = size(params, name, 1, 8)?;
            let gens = (0..k).flat_map(|r| {
                (0..k).map(move |c| {
                    let row = (0..k).map(move |j| r * k + j);
                    let col = (0..k).map(move |i| i * k + c);
                    row.chain(col).collect::<Vec<_>>()
                })
            });
            Ok(SemiTopology::new(k * k, gens)?)
        }
        "two_min" => fixed(plain(3, &[&[0, 1], &[1, 2]])),
        "fig2_top_left" | "fig_boundaries_mid" => fixed(plain(3, &[&[0], &[2]])),
        "fig2_top_right" => fixed(plain(3, &[&[0], &[0, 1], &[2], &[1, 2], &[0, 2]])),
        "fig2_lower_left" => fixed(plain(5, &[&[0, 1], &[1], &[3], &[3, 4]])),
        "fig2_lower_right" => fixed(labelled(
            &["0", "1", "2", "*"],
            &[&[0], &[1], &[2], &[0, 1, 3], &[1, 2, 3]],
        )),
        "not_strong_topen" => fixed(plain(3, &[&[0, 2], &[1, 2], &[0, 1]])),
        "not_strongly_transitive" => fixed(plain(3, &[&[1], &[0, 1], &[1, 2]])),
        "square" => fixed(plain(4, &[&[3, 0], &[0, 1], &[1, 2], &[2, 3]])),
        "fig_irregular_left" => fixed(plain(5, &[&[1, 2], &[0, 1, 3], &[0, 2, 4], &[3], &[4]])),
        "fig_irregular_right" => fixed(plain(5, &[&[1], &[2], &[3], &[4], &[0, 1, 2, 3], &[0, 1, 2, 4]])),
        "sierpinski" => fixed(plain(2, &[&[1]])),
        "two_triples_line" => {
            let m = size(params, name, 1, 31)?;
            let gens = (0..m).map(|i| vec![2 * i, 2 * i + 1, 2 * i + 2]);
            Ok(SemiTopology::new(2 * m + 1, gens)?)
        }
        "final_segment_block" => {
            let n = size(params, name, 12, 64)?;
            let mut gens: Vec<Vec<usize>> = (0..n).map(|i| (i..n).collect()).collect();
            gens.push((0..10).collect());
            Ok(SemiTopology::new(n, gens)?)
        }
        "fig_boundaries_right" => fixed(plain(
            5,
            &[&[0], &[4], &[0, 1], &[3, 4], &[0, 1, 2, 3], &[1, 2, 3, 4]],
        )),
        "counterexample_1" => fixed(labelled(
            &["*", "1", "2", "3"],
            &[&[1], &[2], &[3], &[0, 1, 2], &[0, 1, 3]],
        )),
        "ast12" => fixed(labelled(&["*", "1", "2"], &[&[1], &[2], &[0, 2]])),
        "ast12b" => fixed(labelled(&["*", "1", "2", "3"], &[&[1], &[2], &[3], &[0, 2]])),
        "nbhd_triangle" => fixed(plain(3, &[&[0, 1], &[0, 2], &[1, 2]])),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    // All size-`size` subsets; unions rebuild every superset, which gives
    // exactly the "at least `size`" family.
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, size, current, out);
            current.pop();
        }
    }
    rec(0, n, size.min(n), &mut current, &mut out);
    out
}

/// `n` points and `k` generators drawn uniformly from the nonempty subsets,
/// deterministic in `seed`. Duplicates collapse, so the space may end up
/// with fewer than `k` generators.
pub fn random_semitopology(n: usize, k: usize, seed: u64) -> Result<SemiTopology> {
    if n == 0 || n > 16 {
        return Err(Error::BadParams(format!("random space needs 1 ≤ n ≤ 16, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = (1u64 << n) - 1;
    let gens: Vec<Vec<usize>> = (0..k)
        .map(|_| {
            let bits = rng.gen_range(1..=full);
            (0..n).filter(|i| bits & (1 << i) != 0).collect()
        })
        .collect();
    SemiTopology::new(n, gens)
}

/// Pinned expectations for one point: flags are five characters, one per
/// column `R W Q U H` (regular, weakly regular, quasiregular, unconflicted,
/// hypertransitive), with `-` for false.
#[derive(Clone, Copy, Debug)]
pub struct PinnedPoint {
    pub label: &'static str,
    pub star: &'static [&'static str],
    pub community: &'static [&'static str],
    pub flags: &'static str,
}

/// Pinned classification of one fixture.
#[derive(Clone, Copy, Debug)]
pub struct Pinned {
    pub name: &'static str,
    pub params: &'static [u64],
    pub points: &'static [PinnedPoint],
    pub topens: &'static [&'static [&'static str]],
    pub residue: &'static [&'static str],
    pub min_closed_nbhds: &'static [&'static [&'static str]],
}

macro_rules! pt {
    ($label:literal, $star:expr, $community:expr, $flags:literal) => {
        PinnedPoint { label: $label, star: &$star, community: &$community, flags: $flags }
    };
}

/// The frozen fixture tables. Values were computed by definitional
/// brute-force enumeration of the full open family, independently of the
/// library code they now pin down.
pub const PINNED: &[Pinned] = &[
    Pinned {
        name: "two_min",
        params: &[],
        points: &[
            pt!("0", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("2", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2"]],
    },
    Pinned {
        name: "fig2_top_left",
        params: &[],
        points: &[
            pt!("0", ["0", "1"], ["0"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1", "2"], "-WQ--"),
            pt!("2", ["1", "2"], ["2"], "RWQUH"),
        ],
        topens: &[&["0"], &["2"]],
        residue: &["1"],
        min_closed_nbhds: &[&["0", "1"], &["1", "2"]],
    },
    Pinned {
        name: "fig2_top_right",
        params: &[],
        points: &[
            pt!("0", ["0"], ["0"], "RWQUH"),
            pt!("1", ["1"], [], "---UH"),
            pt!("2", ["2"], ["2"], "RWQUH"),
        ],
        topens: &[&["0"], &["2"]],
        residue: &["1"],
        min_closed_nbhds: &[&["0"], &["2"]],
    },
    Pinned {
        name: "fig2_lower_left",
        params: &[],
        points: &[
            pt!("0", ["0", "1", "2"], ["0", "1"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1"], "RWQUH"),
            pt!("2", ["0", "1", "2", "3", "4"], ["0", "1", "2", "3", "4"], "-WQ--"),
            pt!("3", ["2", "3", "4"], ["3", "4"], "RWQUH"),
            pt!("4", ["2", "3", "4"], ["3", "4"], "RWQUH"),
        ],
        topens: &[&["0", "1"], &["3", "4"]],
        residue: &["2"],
        min_closed_nbhds: &[&["0", "1", "2"], &["2", "3", "4"]],
    },
    Pinned {
        name: "fig2_lower_right",
        params: &[],
        points: &[
            pt!("0", ["0"], ["0"], "RWQUH"),
            pt!("1", ["1", "*"], ["1"], "RWQUH"),
            pt!("2", ["2"], ["2"], "RWQUH"),
            pt!("*", ["1", "*"], ["1"], "--QU-"),
        ],
        topens: &[&["0"], &["1"], &["2"]],
        residue: &["*"],
        min_closed_nbhds: &[&["0"], &["2"], &["1", "*"]],
    },
    Pinned {
        name: "not_strong_topen",
        params: &[],
        points: &[
            pt!("0", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("2", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2"]],
    },
    Pinned {
        name: "not_strongly_transitive",
        params: &[],
        points: &[
            pt!("0", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("2", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2"]],
    },
    Pinned {
        name: "square",
        params: &[],
        points: &[
            pt!("0", ["0"], [], "---UH"),
            pt!("1", ["1"], [], "---UH"),
            pt!("2", ["2"], [], "---UH"),
            pt!("3", ["3"], [], "---UH"),
        ],
        topens: &[],
        residue: &["0", "1", "2", "3"],
        min_closed_nbhds: &[&["0", "1"], &["0", "3"], &["1", "2"], &["2", "3"]],
    },
    Pinned {
        name: "fig_irregular_left",
        params: &[],
        points: &[
            pt!("0", ["0", "1", "2"], ["1", "2"], "--QU-"),
            pt!("1", ["0", "1", "2"], ["1", "2"], "RWQUH"),
            pt!("2", ["0", "1", "2"], ["1", "2"], "RWQUH"),
            pt!("3", ["3"], ["3"], "RWQUH"),
            pt!("4", ["4"], ["4"], "RWQUH"),
        ],
        topens: &[&["3"], &["4"], &["1", "2"]],
        residue: &["0"],
        min_closed_nbhds: &[&["3"], &["4"], &["0", "1", "2"]],
    },
    Pinned {
        name: "fig_irregular_right",
        params: &[],
        points: &[
            pt!("0", ["0", "1", "2"], ["1", "2"], "--Q--"),
            pt!("1", ["0", "1"], ["1"], "RWQUH"),
            pt!("2", ["0", "2"], ["2"], "RWQUH"),
            pt!("3", ["3"], ["3"], "RWQUH"),
            pt!("4", ["4"], ["4"], "RWQUH"),
        ],
        topens: &[&["1"], &["2"], &["3"], &["4"]],
        residue: &["0"],
        min_closed_nbhds: &[&["3"], &["4"], &["0", "1"], &["0", "2"]],
    },
    Pinned {
        name: "sierpinski",
        params: &[],
        points: &[
            pt!("0", ["0", "1"], ["0", "1"], "RWQUH"),
            pt!("1", ["0", "1"], ["0", "1"], "RWQUH"),
        ],
        topens: &[&["0", "1"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1"]],
    },
    Pinned {
        name: "fig_boundaries_mid",
        params: &[],
        points: &[
            pt!("0", ["0", "1"], ["0"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1", "2"], "-WQ--"),
            pt!("2", ["1", "2"], ["2"], "RWQUH"),
        ],
        topens: &[&["0"], &["2"]],
        residue: &["1"],
        min_closed_nbhds: &[&["0", "1"], &["1", "2"]],
    },
    Pinned {
        name: "fig_boundaries_right",
        params: &[],
        points: &[
            pt!("0", ["0"], ["0"], "RWQUH"),
            pt!("1", ["1", "2"], [], "---UH"),
            pt!("2", ["1", "2", "3"], [], "-----"),
            pt!("3", ["2", "3"], [], "---UH"),
            pt!("4", ["4"], ["4"], "RWQUH"),
        ],
        topens: &[&["0"], &["4"]],
        residue: &["1", "2", "3"],
        min_closed_nbhds: &[&["0"], &["4"]],
    },
    Pinned {
        name: "counterexample_1",
        params: &[],
        points: &[
            pt!("*", ["*", "1"], ["1"], "--QU-"),
            pt!("1", ["*", "1"], ["1"], "RWQUH"),
            pt!("2", ["2"], ["2"], "RWQUH"),
            pt!("3", ["3"], ["3"], "RWQUH"),
        ],
        topens: &[&["1"], &["2"], &["3"]],
        residue: &["*"],
        min_closed_nbhds: &[&["2"], &["3"], &["*", "1"]],
    },
    Pinned {
        name: "ast12",
        params: &[],
        points: &[
            pt!("*", ["*", "2"], ["*", "2"], "RWQUH"),
            pt!("1", ["1"], ["1"], "RWQUH"),
            pt!("2", ["*", "2"], ["*", "2"], "RWQUH"),
        ],
        topens: &[&["1"], &["*", "2"]],
        residue: &[],
        min_closed_nbhds: &[&["1"], &["*", "2"]],
    },
    Pinned {
        name: "ast12b",
        params: &[],
        points: &[
            pt!("*", ["*", "2"], ["*", "2"], "RWQUH"),
            pt!("1", ["1"], ["1"], "RWQUH"),
            pt!("2", ["*", "2"], ["*", "2"], "RWQUH"),
            pt!("3", ["3"], ["3"], "RWQUH"),
        ],
        topens: &[&["1"], &["3"], &["*", "2"]],
        residue: &[],
        min_closed_nbhds: &[&["1"], &["3"], &["*", "2"]],
    },
    Pinned {
        name: "nbhd_triangle",
        params: &[],
        points: &[
            pt!("0", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("2", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2"]],
    },
    Pinned {
        name: "two_triples_line",
        params: &[3],
        points: &[
            pt!("0", ["0", "1", "2", "3"], ["0", "1", "2"], "RWQUH"),
            pt!("1", ["0", "1", "2", "3"], ["0", "1", "2"], "RWQUH"),
            pt!("2", ["0", "1", "2", "3"], ["0", "1", "2"], "RWQUH"),
            pt!("3", ["0", "1", "2", "3", "4", "5", "6"], ["0", "1", "2", "3", "4", "5", "6"], "-WQ--"),
            pt!("4", ["3", "4", "5", "6"], ["4", "5", "6"], "RWQUH"),
            pt!("5", ["3", "4", "5", "6"], ["4", "5", "6"], "RWQUH"),
            pt!("6", ["3", "4", "5", "6"], ["4", "5", "6"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2"], &["4", "5", "6"]],
        residue: &["3"],
        min_closed_nbhds: &[&["0", "1", "2", "3"], &["3", "4", "5", "6"]],
    },
    Pinned {
        name: "supermajority",
        params: &[4],
        points: &[
            pt!("0", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("1", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("2", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("3", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2", "3"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2", "3"]],
    },
    Pinned {
        name: "discrete",
        params: &[3],
        points: &[
            pt!("0", ["0"], ["0"], "RWQUH"),
            pt!("1", ["1"], ["1"], "RWQUH"),
            pt!("2", ["2"], ["2"], "RWQUH"),
        ],
        topens: &[&["0"], &["1"], &["2"]],
        residue: &[],
        min_closed_nbhds: &[&["0"], &["1"], &["2"]],
    },
    Pinned {
        name: "trivial",
        params: &[3],
        points: &[
            pt!("0", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("1", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
            pt!("2", ["0", "1", "2"], ["0", "1", "2"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2"]],
    },
    Pinned {
        name: "all_but_one",
        params: &[4],
        points: &[
            pt!("0", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("1", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("2", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("3", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2", "3"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2", "3"]],
    },
    Pinned {
        name: "grid_quorum",
        params: &[2],
        points: &[
            pt!("0", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("1", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("2", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
            pt!("3", ["0", "1", "2", "3"], ["0", "1", "2", "3"], "RWQUH"),
        ],
        topens: &[&["0", "1", "2", "3"]],
        residue: &[],
        min_closed_nbhds: &[&["0", "1", "2", "3"]],
    },
    Pinned {
        name: "final_segment_block",
        params: &[12],
        points: &[
            pt!("0", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("1", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("2", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("3", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("4", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("5", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("6", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("7", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("8", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("9", ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"], "RWQUH"),
            pt!("10", ["10", "11"], ["10", "11"], "RWQUH"),
            pt!("11", ["10", "11"], ["10", "11"], "RWQUH"),
        ],
        topens: &[
            &["10", "11"],
            &["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"],
        ],
        residue: &[],
        min_closed_nbhds: &[
            &["10", "11"],
            &["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"],
        ],
    },
    Pinned {
        name: "more_than_one",
        params: &[4],
        points: &[
            pt!("0", ["0"], [], "---UH"),
            pt!("1", ["1"], [], "---UH"),
            pt!("2", ["2"], [], "---UH"),
            pt!("3", ["3"], [], "---UH"),
        ],
        topens: &[],
        residue: &["0", "1", "2", "3"],
        min_closed_nbhds: &[
            &["0", "1"], &["0", "2"], &["0", "3"], &["1", "2"], &["1", "3"], &["2", "3"],
        ],
    },
];
