//! Plain-text formats for graphs, list assignments and colorings.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! name unbalanced triangle
//! n 3
//! e 0 1 +
//! e 1 2 +
//! e 0 2 -
//! ```
//!
//! The `n` header is required and precedes all edges; `name` is optional.
//! Signs are `+` or `-` (`+1` and `-1` are accepted too). List files have one
//! line `l <v> <c1> <c2> ...` per vertex, coloring files one line `c <v> <color>`.

use serde::Serialize;

use crate::coloring::{ColorSet, SignedColoring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::list_coloring::ListAssignment;

/// A parsed graph file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphDocument {
    pub graph: SignedGraph,
    pub name: Option<String>,
    /// Comment lines without the leading `#` and one following space.
    pub comments: Vec<String>,
}

impl GraphDocument {
    pub fn new(graph: SignedGraph) -> Self {
        GraphDocument {
            graph,
            name: None,
            comments: Vec::new(),
        }
    }
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("bad {what} {token:?}")))
}

fn parse_sign(token: Option<&str>, line: usize) -> Result<Sign> {
    match token {
        Some("+") | Some("+1") => Ok(Sign::Positive),
        Some("-") | Some("-1") => Ok(Sign::Negative),
        Some(t) => Err(parse_error(line, format!("bad sign token {t:?}"))),
        None => Err(parse_error(line, "missing sign")),
    }
}

pub fn parse_graph(text: &str) -> Result<GraphDocument> {
    let comments = text
        .lines()
        .map(str::trim)
        .filter_map(|l| l.strip_prefix('#'))
        .map(|c| c.strip_prefix(' ').unwrap_or(c).to_string())
        .collect();
    let mut name = None;
    let mut n = None;
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("name") => {
                if n.is_some() || name.is_some() {
                    return Err(parse_error(line, "name must come once, before the header"));
                }
                name = Some(content["name".len()..].trim().to_string());
                continue;
            }
            Some("n") => {
                if n.is_some() {
                    return Err(parse_error(line, "duplicate header"));
                }
                n = Some(parse_usize(tokens.next(), line, "vertex count")?);
            }
            Some("e") => {
                let count = n.ok_or_else(|| parse_error(line, "edge before the `n` header"))?;
                let u = parse_usize(tokens.next(), line, "vertex id")?;
                let v = parse_usize(tokens.next(), line, "vertex id")?;
                let sign = parse_sign(tokens.next(), line)?;
                for w in [u, v] {
                    if w >= count {
                        return Err(parse_error(
                            line,
                            format!("vertex {w} out of range for n = {count}"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_error(line, format!("loop at vertex {u}")));
                }
                edges.push(Edge::new(u, v, sign));
            }
            Some(other) => return Err(parse_error(line, format!("unknown directive {other:?}"))),
            None => unreachable!("content lines are non-empty"),
        }
        if let Some(extra) = tokens.next() {
            return Err(parse_error(line, format!("unexpected token {extra:?}")));
        }
    }
    let n = n.ok_or_else(|| parse_error(text.lines().count().max(1), "missing `n` header"))?;
    Ok(GraphDocument {
        graph: SignedGraph::from_edges(n, edges)?,
        name,
        comments,
    })
}

/// The graph alone, in file format.
pub fn write_graph(g: &SignedGraph) -> String {
    write_document(&GraphDocument::new(g.clone()))
}

/// Comments first, then the name, the header and the edges in order.
pub fn write_document(doc: &GraphDocument) -> String {
    let mut out = String::new();
    for c in &doc.comments {
        if c.is_empty() {
            out.push_str("#\n");
        } else {
            out.push_str(&format!("# {c}\n"));
        }
    }
    if let Some(name) = &doc.name {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str(&format!("n {}\n", doc.graph.vertex_count()));
    for e in doc.graph.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.sign));
    }
    out
}

pub fn parse_lists(text: &str, g: &SignedGraph) -> Result<ListAssignment> {
    let n = g.vertex_count();
    let mut lists: Vec<Option<ColorSet>> = vec![None; n];
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        if tokens.next() != Some("l") {
            return Err(parse_error(line, "expected `l <vertex> <colors...>`"));
        }
        let v = parse_usize(tokens.next(), line, "vertex id")?;
        if v >= n {
            return Err(parse_error(
                line,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        if lists[v].is_some() {
            return Err(parse_error(line, format!("duplicate list for vertex {v}")));
        }
        let mut list = ColorSet::new();
        for t in tokens {
            let c: i64 = t
                .parse()
                .map_err(|_| parse_error(line, format!("non-integer color {t:?}")))?;
            list.insert(c);
        }
        lists[v] = Some(list);
    }
    let mut out = Vec::with_capacity(n);
    for (v, l) in lists.into_iter().enumerate() {
        out.push(l.ok_or(Error::UncoveredVertex(v))?);
    }
    Ok(ListAssignment::new(out))
}

pub fn write_lists(l: &ListAssignment) -> String {
    let mut out = String::new();
    for (v, list) in l.lists().iter().enumerate() {
        out.push_str(&format!("l {v}"));
        for c in list.iter() {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

pub fn parse_coloring(text: &str, g: &SignedGraph) -> Result<SignedColoring> {
    let n = g.vertex_count();
    let mut colors: Vec<Option<i64>> = vec![None; n];
    for (line, content) in content_lines(text) {
        let mut tokens = content.split_whitespace();
        if tokens.next() != Some("c") {
            return Err(parse_error(line, "expected `c <vertex> <color>`"));
        }
        let v = parse_usize(tokens.next(), line, "vertex id")?;
        if v >= n {
            return Err(parse_error(
                line,
                format!("vertex {v} out of range for n = {n}"),
            ));
        }
        if colors[v].is_some() {
            return Err(parse_error(line, format!("duplicate color for vertex {v}")));
        }
        let t = tokens
            .next()
            .ok_or_else(|| parse_error(line, "missing color"))?;
        colors[v] = Some(
            t.parse()
                .map_err(|_| parse_error(line, format!("non-integer color {t:?}")))?,
        );
    }
    let mut out = Vec::with_capacity(n);
    for (v, c) in colors.into_iter().enumerate() {
        out.push(c.ok_or(Error::UncoveredVertex(v))?);
    }
    Ok(SignedColoring::new(out))
}

pub fn write_coloring(phi: &SignedColoring) -> String {
    phi.colors()
        .iter()
        .enumerate()
        .map(|(v, c)| format!("c {v} {c}\n"))
        .collect()
}
