//! Graphviz export: points, generator boxes, and dashed topen hulls.
//!
//! Points become circle nodes coloured by their classification grade
//! (regular, weakly regular, quasiregular, none), with a doubled border for
//! conflicted points. Each generator is a solid box joined to its member
//! points, and each maximal topen becomes a dashed cluster (maximal topens
//! are disjoint, so clusters never overlap). Output is deterministic.

use std::fmt::Write as _;

use crate::classify::Classification;
use crate::space::SemiTopology;

fn grade_colour(regular: bool, weakly_regular: bool, quasiregular: bool) -> &'static str {
    if regular {
        "#b5e0b5"
    } else if weakly_regular {
        "#f2e394"
    } else if quasiregular {
        "#f5c584"
    } else {
        "#e8a3a3"
    }
}

fn quoted(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Renders the space as a Graphviz `graph`.
pub fn export_dot(st: &SemiTopology, classification: &Classification) -> String {
    let mut out = String::new();
    out.push_str("graph semitopology {\n");
    out.push_str("  layout=fdp;\n  node [fontname=\"Helvetica\"];\n");

    let partition = st.maximal_topen_partition();
    let mut emitted = st.empty_set();

    for (i, topen) in partition.topens.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_topen_{i} {{");
        let _ = writeln!(out, "    label={};", quoted(&format!("topen {}", st.format_set(topen))));
        out.push_str("    style=dashed;\n");
        for p in topen.iter() {
            let _ = writeln!(out, "    {};", point_node(st, classification, p));
            emitted.insert(p);
        }
        out.push_str("  }\n");
    }
    for p in st.points() {
        if !emitted.contains(p) {
            let _ = writeln!(out, "  {};", point_node(st, classification, p));
        }
    }
    for (i, g) in st.basis().iter().enumerate() {
        let _ = writeln!(
            out,
            "  gen_{i} [shape=box, style=solid, label={}];",
            quoted(&st.format_set(g))
        );
        for p in g.iter() {
            let _ = writeln!(out, "  {} -- gen_{i} [style=dotted];", quoted(st.label(p)));
        }
    }
    out.push_str("}\n");
    out
}

fn point_node(st: &SemiTopology, classification: &Classification, p: usize) -> String {
    let class = &classification.points[p];
    let colour = grade_colour(class.regular, class.weakly_regular, class.quasiregular);
    let peripheries = if class.unconflicted { 1 } else { 2 };
    format!(
        "{} [shape=circle, style=filled, fillcolor={}, peripheries={}]",
        quoted(st.label(p)),
        quoted(colour),
        peripheries
    )
}
