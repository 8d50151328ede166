//! `semitop`: inspect finite semitopologies from JSON documents.
//!
//! Exit codes: 0 on success, 1 when `check` or `oracle-diff` finds a
//! violation, 2 on usage, parse or schema errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use semitopology::{doc, dot, gallery, laws, Classification, SemiTopology, ValueAssignment};
use serde_json::json;

/// Enumeration cap override, in distinct open sets.
const CAP_ENV: &str = "SEMITOP_OPENS_CAP";

#[derive(Parser)]
#[command(name = "semitop", version, about = "Finite semitopology toolbox")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-point classification table: ∗p, K(p) and the five flags.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Maximal topens and the residue.
    Partition {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Closure of a set of points.
    Closure {
        file: PathBuf,
        /// Comma-separated point labels, e.g. `0,2`.
        #[arg(long)]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Interior of a set of points.
    Interior {
        file: PathBuf,
        #[arg(long)]
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Propagate an agreed value from an open seed to its closure.
    Propagate {
        file: PathBuf,
        /// Comma-separated point labels forming the open seed.
        #[arg(long)]
        seed: String,
        /// Value committed by the seed.
        #[arg(long)]
        value: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the full invariant suite on the loaded space.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a named example space; with no name, list what is available.
    Gallery {
        name: Option<String>,
        /// Parameters for parametric families.
        params: Vec<u64>,
        /// Write the document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz rendering: points, generator boxes, dashed topen hulls.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fuzz fast paths against the brute-force oracle on random spaces.
    OracleDiff {
        /// Largest point count to draw.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Largest generator count to draw.
        #[arg(long, default_value_t = 8)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        iters: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn opens_cap() -> usize {
    match std::env::var(CAP_ENV) {
        Ok(text) => text.parse().unwrap_or_else(|_| {
            eprintln!("warning: ignoring unparseable {CAP_ENV}={text}");
            semitopology::DEFAULT_OPENS_CAP
        }),
        Err(_) => semitopology::DEFAULT_OPENS_CAP,
    }
}

/// Failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn violation(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<doc::DocError> for Failure {
    fn from(e: doc::DocError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<semitopology::Error> for Failure {
    fn from(e: semitopology::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn load(path: &Path) -> Result<doc::Loaded, Failure> {
    let loaded = doc::load(path)?;
    for warning in &loaded.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(loaded)
}

fn set_json(st: &SemiTopology, s: &semitopology::PointSet) -> serde_json::Value {
    json!(s.iter().map(|p| st.label(p)).collect::<Vec<_>>())
}

fn cmd_classify(st: &SemiTopology, as_json: bool) {
    let classification = st.classify_all(opens_cap());
    if as_json {
        let points: Vec<_> = classification
            .points
            .iter()
            .map(|c| {
                json!({
                    "label": st.label(c.point),
                    "intertwined": set_json(st, &c.intertwined),
                    "community": set_json(st, &c.community),
                    "regular": c.regular,
                    "weakly_regular": c.weakly_regular,
                    "quasiregular": c.quasiregular,
                    "unconflicted": c.unconflicted,
                    "hypertransitive": if c.hypertransitive_known {
                        json!(c.hypertransitive)
                    } else {
                        json!(null)
                    },
                })
            })
            .collect();
        println!("{}", json!({"points": points, "truncated": classification.truncated}));
        return;
    }
    let mut rows = vec![[
        "point".to_string(),
        "*p".to_string(),
        "K(p)".to_string(),
        "regular".to_string(),
        "weakly_regular".to_string(),
        "quasiregular".to_string(),
        "unconflicted".to_string(),
        "hypertransitive".to_string(),
    ]];
    for c in &classification.points {
        rows.push([
            st.label(c.point).to_string(),
            st.format_set(&c.intertwined),
            st.format_set(&c.community),
            c.regular.to_string(),
            c.weakly_regular.to_string(),
            c.quasiregular.to_string(),
            c.unconflicted.to_string(),
            if c.hypertransitive_known { c.hypertransitive.to_string() } else { "unknown".into() },
        ]);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0))
        .collect();
    for row in &rows {
        let line: Vec<String> =
            row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        println!("{}", line.join("  ").trim_end());
    }
    if classification.truncated {
        eprintln!("warning: open family truncated; hypertransitivity reported as unknown");
    }
}

fn cmd_partition(st: &SemiTopology, as_json: bool) {
    let partition = st.maximal_topen_partition();
    if as_json {
        println!(
            "{}",
            json!({
                "topens": partition.topens.iter().map(|t| set_json(st, t)).collect::<Vec<_>>(),
                "residue": set_json(st, &partition.residue),
            })
        );
        return;
    }
    if partition.topens.is_empty() {
        println!("maximal topens: none");
    } else {
        println!("maximal topens:");
        for t in &partition.topens {
            println!("  {}", st.format_set(t));
        }
    }
    println!("residue: {}", st.format_set(&partition.residue));
}

fn cmd_set_op(st: &SemiTopology, set: &str, closure: bool, as_json: bool) -> Result<(), Failure> {
    let s = st.parse_set(set)?;
    let result = if closure { st.closure(&s) } else { st.interior(&s) };
    if as_json {
        println!("{}", json!({ "input": set_json(st, &s), "result": set_json(st, &result) }));
    } else {
        println!("{}", st.format_set(&result));
    }
    Ok(())
}

fn cmd_propagate(
    st: &SemiTopology,
    assignment: Option<&ValueAssignment>,
    seed: &str,
    value: &str,
    as_json: bool,
) -> Result<(), Failure> {
    let seed = st.parse_set(seed)?;
    let value_id = assignment.and_then(|f| f.value_by_label(value)).unwrap_or(0);
    let result = st.propagate(&seed, value_id)?;
    if as_json {
        println!(
            "{}",
            json!({
                "value": value,
                "grade2": set_json(st, &result.committed_grade2),
                "grade1": set_json(st, &result.committed_grade1),
                "rounds": result.rounds,
                "trace": result.trace.iter().map(|t| set_json(st, t)).collect::<Vec<_>>(),
            })
        );
        return Ok(());
    }
    println!("value {value} propagates from open seed {}", st.format_set(&result.seed));
    for (i, frontier) in result.trace.iter().enumerate() {
        println!("  round {i}: {}", st.format_set(frontier));
    }
    println!("grade 2 (acted): {}", st.format_set(&result.committed_grade2));
    println!("grade 1 (obliged): {}", st.format_set(&result.committed_grade1));
    println!("rounds: {}", result.rounds);
    Ok(())
}

fn cmd_check(st: &SemiTopology, as_json: bool) -> Result<(), Failure> {
    let reports = laws::check_space(st, opens_cap());
    let all_ok = reports.iter().all(|r| r.ok);
    if as_json {
        let list: Vec<_> = reports
            .iter()
            .map(|r| json!({"law": r.name, "ok": r.ok, "detail": r.detail}))
            .collect();
        println!("{}", json!({"ok": all_ok, "laws": list}));
    } else {
        for r in &reports {
            let mark = if r.ok { "PASS" } else { "FAIL" };
            if r.detail.is_empty() {
                println!("{mark}  {}", r.name);
            } else {
                println!("{mark}  {} ({})", r.name, r.detail);
            }
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::violation("one or more laws failed"))
    }
}

fn cmd_gallery(name: Option<String>, params: &[u64], out: Option<&Path>) -> Result<(), Failure> {
    let Some(name) = name else {
        println!("available fixtures:");
        for (name, description) in gallery::NAMES {
            println!("  {name:<24} {description}");
        }
        return Ok(());
    };
    let st = gallery::build(&name, params)?;
    let text = doc::save_string(&st, None);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_export_dot(st: &SemiTopology, out: Option<&Path>) -> Result<(), Failure> {
    let classification: Classification = st.classify_all(opens_cap());
    let text = dot::export_dot(st, &classification);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_oracle_diff(n: usize, k: usize, iters: u64, seed: u64) -> Result<(), Failure> {
    if n == 0 || n > 16 {
        return Err(Failure::usage("--n must be between 1 and 16"));
    }
    for i in 0..iters {
        let instance_seed = seed.wrapping_add(i);
        // Vary size and generator count deterministically across iterations.
        let ni = 1 + (instance_seed as usize % n);
        let ki = instance_seed as usize % (k + 1);
        let st = gallery::random_semitopology(ni, ki, instance_seed)?;
        if let Some(bad) = laws::oracle_mismatch(&st)? {
            let reproducer = PathBuf::from("oracle-diff-reproducer.json");
            doc::save(&reproducer, &st, None)?;
            eprintln!(
                "disagreement after {i} iteration(s): {} on {}\n  fast   = {}\n  oracle = {}\n\
                 reproducer written to {}",
                bad.predicate,
                bad.instance,
                bad.fast,
                bad.oracle,
                reproducer.display()
            );
            return Err(Failure::violation("fast path disagrees with oracle"));
        }
    }
    println!("oracle-diff: {iters} instance(s), no disagreement");
    Ok(())
}

fn wants_json(command: &Command) -> bool {
    match command {
        Command::Classify { json, .. }
        | Command::Partition { json, .. }
        | Command::Closure { json, .. }
        | Command::Interior { json, .. }
        | Command::Propagate { json, .. }
        | Command::Check { json, .. } => *json,
        _ => false,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { file, json } => {
            let loaded = load(&file)?;
            cmd_classify(&loaded.space, json);
            Ok(())
        }
        Command::Partition { file, json } => {
            let loaded = load(&file)?;
            cmd_partition(&loaded.space, json);
            Ok(())
        }
        Command::Closure { file, set, json } => {
            let loaded = load(&file)?;
            cmd_set_op(&loaded.space, &set, true, json)
        }
        Command::Interior { file, set, json } => {
            let loaded = load(&file)?;
            cmd_set_op(&loaded.space, &set, false, json)
        }
        Command::Propagate { file, seed, value, json } => {
            let loaded = load(&file)?;
            cmd_propagate(&loaded.space, loaded.assignment.as_ref(), &seed, &value, json)
        }
        Command::Check { file, json } => {
            let loaded = load(&file)?;
            cmd_check(&loaded.space, json)
        }
        Command::Gallery { name, params, out } => cmd_gallery(name, &params, out.as_deref()),
        Command::ExportDot { file, out } => {
            let loaded = load(&file)?;
            cmd_export_dot(&loaded.space, out.as_deref())
        }
        Command::OracleDiff { n, k, iters, seed } => cmd_oracle_diff(n, k, iters, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = wants_json(&cli.command);
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if as_json {
                println!("{}", json!({ "error": failure.message }));
            } else {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}
