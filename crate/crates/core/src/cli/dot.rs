//! Graphviz DOT output. Nodes come in label order and edges in
//! lexicographic order, so equal inputs give byte-equal text.

use std::fmt::Write;

use crate::graph::{Digraph, Graph};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn nodes(out: &mut String, n: usize, names: Option<&[String]>) {
    for v in 0..n {
        match names.and_then(|m| m.get(v)).filter(|s| !s.is_empty()) {
            Some(name) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", escape(name));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
}

/// `names[v]` is used as the display label of `v` when present.
pub fn digraph_dot(d: &Digraph, names: Option<&[String]>) -> String {
    let mut out = String::from("digraph D {\n");
    nodes(&mut out, d.n(), names);
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

pub fn graph_dot(g: &Graph, names: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    nodes(&mut out, g.n(), names);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
