//! Graphviz rendering of diagram fragments.
//!
//! Edge legend: CD dashed, C solid, SC dotted (all undirected); LI and RI
//! are arrows from the stronger form to the weaker one. Unconnected pairs
//! are omitted. Fuzzy renderings append the IF pair to each edge label.

use std::fmt::Write;

use crate::degree::IFPair;
use crate::diagram::{Diagram, RelationKind};
use crate::fuzzy_diagram::{AnnotatedSquare, FuzzyAristotelianDiagram};

struct Edge {
    from: usize,
    to: usize,
    kind: RelationKind,
    pair: Option<IFPair>,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn render(name: &str, labels: &[String], edges: &[Edge]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\"];", escape(label)).unwrap();
    }
    for edge in edges {
        let (from, to) = match edge.kind {
            RelationKind::RI => (edge.to, edge.from),
            _ => (edge.from, edge.to),
        };
        let style = match edge.kind {
            RelationKind::CD => "style=dashed, dir=none",
            RelationKind::C => "style=solid, dir=none",
            RelationKind::SC => "style=dotted, dir=none",
            RelationKind::LI | RelationKind::RI => "style=solid, arrowhead=normal",
            RelationKind::BI | RelationKind::Un => continue,
        };
        // Arrows always read as "implies", so RI is drawn as LI reversed.
        let shown = if edge.kind == RelationKind::RI {
            RelationKind::LI
        } else {
            edge.kind
        };
        let label = match &edge.pair {
            Some(pair) => format!("{shown} {pair}"),
            None => shown.to_string(),
        };
        writeln!(
            out,
            "  n{from} -> n{to} [label=\"{}\", {style}];",
            escape(&label)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn diagram_to_dot(name: &str, diagram: &Diagram) -> String {
    let n = diagram.len();
    let edges: Vec<Edge> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(from, to)| Edge {
            from,
            to,
            kind: diagram.relation(from, to),
            pair: None,
        })
        .collect();
    render(name, diagram.labels(), &edges)
}

pub fn fuzzy_diagram_to_dot(name: &str, diagram: &FuzzyAristotelianDiagram) -> String {
    let n = diagram.len();
    let edges: Vec<Edge> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(from, to)| {
            let rel = diagram.classify_fuzzy(from, to);
            Edge {
                from,
                to,
                kind: rel.kind,
                pair: Some(rel.annotation),
            }
        })
        .collect();
    render(name, diagram.labels(), &edges)
}

pub fn annotated_square_to_dot(name: &str, square: &AnnotatedSquare) -> String {
    let edges: Vec<Edge> = square
        .edges
        .iter()
        .map(|e| Edge {
            from: e.from,
            to: e.to,
            kind: e.kind,
            pair: Some(e.pair.clone()),
        })
        .collect();
    render(name, square.diagram.labels(), &edges)
}
