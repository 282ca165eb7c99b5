//! Plain-text graph files.
//!
//! ```text
//! # comment
//! digraph 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The header is `digraph <n>` or `graph <n>`, followed by one `u v` pair per
//! line with 0-based vertices. In a digraph `u u` is a loop; in a graph it is
//! an error, and repeated or reversed pairs name the same edge.

use std::fmt::Write as _;

use squadgraph::verify::Instance;
use squadgraph::{Digraph, Error, Result, UGraph};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// The first keyword of the first non-comment line, if any.
pub fn header_keyword(text: &str) -> Option<&str> {
    meaningful(text).next().and_then(|(_, l)| l.split_whitespace().next())
}

pub fn parse_graph_file(text: &str) -> Result<Instance> {
    let mut lines = meaningful(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_error(1, "empty file"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or_default();
    let n: usize = match (words.next().map(str::parse), words.next()) {
        (Some(Ok(n)), None) => n,
        _ => {
            return Err(parse_error(
                hline,
                format!("expected `digraph <n>` or `graph <n>`, found `{header}`"),
            ))
        }
    };
    let directed = match kind {
        "digraph" => true,
        "graph" => false,
        _ => return Err(parse_error(hline, format!("unknown header `{kind}`"))),
    };
    let mut pairs = Vec::new();
    for (no, line) in lines {
        let nums: Vec<_> = line.split_whitespace().map(str::parse::<usize>).collect();
        let (u, v) = match nums.as_slice() {
            [Ok(u), Ok(v)] => (*u, *v),
            _ => return Err(parse_error(no, format!("expected `u v`, found `{line}`"))),
        };
        if u >= n || v >= n {
            return Err(parse_error(no, format!("vertex out of range 0..{n} in `{line}`")));
        }
        if !directed && u == v {
            return Err(parse_error(no, format!("loop `{line}` in an undirected graph")));
        }
        pairs.push((u, v));
    }
    Ok(if directed {
        Instance::Digraph(Digraph::from_arcs(n, &pairs)?)
    } else {
        Instance::Graph(UGraph::from_edges(n, &pairs)?)
    })
}

/// Normalized form: header, then arcs (or edges `u < v`) in ascending order.
pub fn write_graph_file(instance: &Instance) -> String {
    let mut s = String::new();
    match instance {
        Instance::Digraph(d) => {
            writeln!(s, "digraph {}", d.order()).unwrap();
            for (u, v) in d.arcs() {
                writeln!(s, "{u} {v}").unwrap();
            }
        }
        Instance::Graph(g) => {
            writeln!(s, "graph {}", g.order()).unwrap();
            for (u, v) in g.edges() {
                writeln!(s, "{u} {v}").unwrap();
            }
        }
    }
    s
}
