//! DIMACS `.col` reader and writer.
//!
//! Vertex ids are 1-based in the file and 0-based in memory.

use std::fmt::Write as _;

use bchrom_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parse a DIMACS graph. `c` lines are comments, exactly one `p edge n m`
/// header must precede all `e u v` lines, and duplicate edges collapse.
/// The edge count in the header is not enforced.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(err(line, "duplicate problem line"));
                }
                let format = tok.next();
                if !matches!(format, Some("edge" | "col")) {
                    return Err(err(line, "expected `p edge <n> <m>`"));
                }
                let count = |t: Option<&str>, what: &str| {
                    t.and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| err(line, format!("malformed {what} in problem line")))
                };
                n = Some(count(tok.next(), "vertex count")?);
                count(tok.next(), "edge count")?;
                if tok.next().is_some() {
                    return Err(err(line, "trailing tokens in problem line"));
                }
            }
            Some("e") => {
                let Some(n) = n else {
                    return Err(err(line, "edge before problem line"));
                };
                let mut endpoint = || -> Result<usize, ParseError> {
                    let v: usize = tok
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| err(line, "malformed edge line"))?;
                    if v == 0 || v > n {
                        return Err(err(line, format!("vertex {v} out of range 1..={n}")));
                    }
                    Ok(v - 1)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if u == v {
                    return Err(err(line, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing problem line"))?;
    Ok(Graph::from_edges(n, edges).expect("endpoints checked while parsing"))
}

/// Comment line, header, then edges sorted and 1-based.
pub fn write_dimacs(g: &Graph, comment: &str) -> String {
    let mut out = String::new();
    for line in comment.lines() {
        writeln!(out, "c {line}").unwrap();
    }
    if comment.is_empty() {
        out.push_str("c\n");
    }
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
