//! Plain-text digraph and graph files.
//!
//! ```text
//! # comment
//! dag 3
//! a 0 1
//! a 1 2
//! ```
//!
//! Graph files use the header `graph <n>` and edge lines `e <u> <v>`.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with 1-based character columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((k + 1, byte)),
            (true, Some((c, b))) => {
                out.push((c, &line[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &line[b..]));
    }
    out
}

fn number(line: usize, (col, tok): (usize, &str)) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, col, format!("expected a non-negative integer, found `{tok}`")))
}

/// Shared lexer: header keyword, pair keyword, and whether pairs are ordered.
fn parse_pairs(text: &str, header: &str, item: &str, ordered: bool) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut n = None;
    let mut pairs = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let toks = tokens(raw);
        let Some(&(col, first)) = toks.first() else { continue };
        if first.starts_with('#') {
            continue;
        }
        match n {
            None => {
                if first != header {
                    return Err(parse_err(
                        line,
                        col,
                        format!("expected header `{header} <n>`, found `{first}`"),
                    ));
                }
                if toks.len() != 2 {
                    let c = toks.get(2).map_or(col + first.len(), |t| t.0);
                    return Err(parse_err(line, c, "header takes exactly one number"));
                }
                let count = number(line, toks[1])?;
                if count > MAX_VERTICES {
                    return Err(parse_err(
                        line,
                        toks[1].0,
                        format!("at most {MAX_VERTICES} vertices are supported"),
                    ));
                }
                n = Some(count);
            }
            Some(count) => {
                if first != item {
                    return Err(parse_err(
                        line,
                        col,
                        format!("expected `{item} <u> <v>`, found `{first}`"),
                    ));
                }
                if toks.len() != 3 {
                    let c = toks.get(3).map_or(col + first.len(), |t| t.0);
                    return Err(parse_err(line, c, format!("`{item}` takes exactly two vertices")));
                }
                let u = number(line, toks[1])?;
                let v = number(line, toks[2])?;
                for (x, t) in [(u, toks[1]), (v, toks[2])] {
                    if x >= count {
                        return Err(parse_err(
                            line,
                            t.0,
                            format!("vertex {x} out of range for {count} vertices"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line, toks[1].0, "self-loop"));
                }
                let key = if ordered { (u, v) } else { (u.min(v), u.max(v)) };
                if !seen.insert(key) {
                    return Err(parse_err(line, col, format!("duplicate {item} line for ({u}, {v})")));
                }
                if ordered && seen.contains(&(v, u)) {
                    return Err(parse_err(line, col, format!("antiparallel arc ({u}, {v})")));
                }
                pairs.push((u, v));
            }
        }
    }
    match n {
        Some(n) => Ok((n, pairs)),
        None => Err(parse_err(last_line.max(1), 1, format!("missing header `{header} <n>`"))),
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let (n, arcs) = parse_pairs(text, "dag", "a", true)?;
    Digraph::from_arcs(n, arcs)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, edges) = parse_pairs(text, "graph", "e", false)?;
    Graph::from_edges(n, edges)
}

/// Arcs in lexicographic order.
pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("dag {}\n", d.n());
    for (u, v) in d.arcs() {
        let _ = writeln!(s, "a {u} {v}");
    }
    s
}

/// Edges as `u < v`, in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digraph_round_trip() {
        let text = "# three vertices\n\ndag 3\na 0 1\n  # inline comment line\na 2 1\n";
        let d = parse_digraph(text).unwrap();
        assert_eq!(d.arcs(), vec![(0, 1), (2, 1)]);
        assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
    }

    #[test]
    fn graph_round_trip() {
        let g = parse_graph("graph 4\ne 3 0\ne 1 2\n").unwrap();
        assert_eq!(write_graph(&g), "graph 4\ne 0 3\ne 1 2\n");
    }

    fn err_at(text: &str) -> (usize, usize) {
        match parse_digraph(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics_point_at_the_token() {
        assert_eq!(err_at("dag 3\na 0 7\n"), (2, 5));
        assert_eq!(err_at("dag 3\na 0 1\na 0 1\n"), (3, 1));
        assert_eq!(err_at("dag 3\na 0 1\na 1 0\n"), (3, 1));
        assert_eq!(err_at("dag 3\na 1 1\n"), (2, 3));
        assert_eq!(err_at("dag x\n"), (1, 5));
        assert_eq!(err_at("graph 3\n"), (1, 1));
        assert_eq!(err_at("dag 3\ne 0 1\n"), (2, 1));
        assert_eq!(err_at("dag 3\na 0 1 2\n"), (2, 7));
        assert_eq!(err_at("# nothing\n"), (1, 1));
    }

    #[test]
    fn graph_duplicates_are_unordered() {
        assert!(matches!(
            parse_graph("graph 3\ne 0 1\ne 1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
