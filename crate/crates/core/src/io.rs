//! Text formats: DIMACS-style edge lists and colorings.
//!
//! Edge lists use a `p <n> <m>` header (an optional format word such as
//! `p edge 5 4` is accepted) followed by exactly `m` lines `e <u> <v>` with
//! 1-indexed endpoints. Blank lines and lines starting with `c` are ignored.
//!
//! Colorings are one line per class, `<class>: <vertices>`, both 1-indexed,
//! or JSON `{"classes": [[...], ...]}` with 1-indexed vertices.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::coloring::Partition;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate header"));
                }
                let nums: Vec<&str> = match fields.len() {
                    3 => fields[1..].to_vec(),
                    4 => fields[2..].to_vec(),
                    _ => return Err(parse_err(line_no, "header must be `p <n> <m>`")),
                };
                let n = nums[0]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count '{}'", nums[0])))?;
                let m = nums[1]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad edge count '{}'", nums[1])))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "edge before header"))?;
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "edge line must be `e <u> <v>`"));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields[1..]) {
                    let x: usize =
                        f.parse().map_err(|_| parse_err(line_no, format!("bad vertex '{f}'")))?;
                    if x == 0 || x > n {
                        return Err(parse_err(line_no, format!("vertex {x} outside 1..={n}")));
                    }
                    *slot = x - 1;
                }
                edges.push((ends[0], ends[1], line_no));
            }
            other => return Err(parse_err(line_no, format!("unknown line type '{other}'"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p` header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, found {}", edges.len())));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v, line_no) in &edges {
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {}", u + 1)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, format!("repeated edge {} {}", u + 1, v + 1)));
        }
    }
    let pairs: Vec<_> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::from_edges(n, &pairs)
}

pub fn read_edge_list(path: &Path) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Text coloring format. Class indices and vertices are 1-indexed.
pub fn write_coloring(p: &Partition) -> String {
    let mut out = String::new();
    for (i, class) in p.classes().iter().enumerate() {
        let verts: Vec<String> = class.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "{}: {}", i + 1, verts.join(" "));
    }
    out
}

/// Parses the text coloring format over a universe of `n` vertices.
pub fn parse_coloring(text: &str, n: usize) -> Result<Partition> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let (head, rest) =
            line.split_once(':').ok_or_else(|| parse_err(line_no, "expected `<class>: ...`"))?;
        let index: usize =
            head.trim().parse().map_err(|_| parse_err(line_no, "bad class index"))?;
        if index != classes.len() + 1 {
            return Err(parse_err(line_no, format!("expected class {}", classes.len() + 1)));
        }
        let mut class = Vec::new();
        for f in rest.split_whitespace() {
            let x: usize = f.parse().map_err(|_| parse_err(line_no, format!("bad vertex '{f}'")))?;
            if x == 0 || x > n {
                return Err(parse_err(line_no, format!("vertex {x} outside 1..={n}")));
            }
            class.push(x - 1);
        }
        classes.push(class);
    }
    Partition::new(n, classes, None)
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    classes: Vec<Vec<usize>>,
}

pub fn coloring_to_json(p: &Partition) -> String {
    let classes = p.classes().iter().map(|c| c.iter().map(|v| v + 1).collect()).collect();
    serde_json::to_string(&ColoringJson { classes }).expect("plain data serializes")
}

pub fn coloring_from_json(text: &str, n: usize) -> Result<Partition> {
    let parsed: ColoringJson = serde_json::from_str(text)?;
    let mut classes = Vec::with_capacity(parsed.classes.len());
    for class in parsed.classes {
        let mut out = Vec::with_capacity(class.len());
        for x in class {
            if x == 0 || x > n {
                return Err(parse_err(0, format!("vertex {x} outside 1..={n}")));
            }
            out.push(x - 1);
        }
        classes.push(out);
    }
    Partition::new(n, classes, None)
}
