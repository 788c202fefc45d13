//! Plain-text graph format.
//!
//! ```text
//! graph <n>
//! parts <u_count> <u_1> ... <u_count>
//! e <u> <v>
//! ```
//!
//! The `parts` line is optional; `#` starts a comment line. The text must
//! end with a newline.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, Vertex};
use crate::error::{parse_err, Error, Result};

impl Graph {
    pub fn to_text(&self) -> String {
        let mut out = format!("graph {}\n", self.n);
        if let Some(parts) = &self.parts {
            out.push_str(&format!("parts {}", parts.left.len()));
            for v in &parts.left {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        for (u, v) in &self.edges {
            writeln!(out, "e {u} {v}").unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        if !text.ends_with('\n') {
            return parse_err(text.lines().count().max(1), "missing trailing newline");
        }
        let mut n: Option<usize> = None;
        let mut parts: Option<Vec<Vertex>> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            if raw.starts_with('#') {
                continue;
            }
            let mut tok = raw.split_whitespace();
            match (tok.next(), n) {
                (Some("graph"), None) => {
                    n = Some(number(tok.next(), line)?);
                    end(tok, line)?;
                }
                (Some(_), None) | (None, None) => {
                    return parse_err(line, "expected `graph <n>` header");
                }
                (Some("parts"), Some(_)) if parts.is_none() && edges.is_empty() => {
                    let count: usize = number(tok.next(), line)?;
                    let left = tok.map(|t| number(Some(t), line)).collect::<Result<Vec<Vertex>>>()?;
                    if left.len() != count {
                        return parse_err(
                            line,
                            format!("parts lists {} vertices, header says {count}", left.len()),
                        );
                    }
                    parts = Some(left);
                }
                (Some("e"), Some(_)) => {
                    let u = number(tok.next(), line)?;
                    let v = number(tok.next(), line)?;
                    end(tok, line)?;
                    edges.push((u, v));
                }
                (Some(other), Some(_)) => {
                    return parse_err(line, format!("unexpected record `{other}`"));
                }
                (None, Some(_)) => return parse_err(line, "empty line"),
            }
        }
        let Some(n) = n else {
            return parse_err(1, "expected `graph <n>` header");
        };
        let last = text.lines().count();
        let g = Graph::new(n, edges).map_err(|e| at_line(e, last))?;
        match parts {
            Some(left) => g.with_bipartition(&left).map_err(|e| at_line(e, last)),
            None => Ok(g),
        }
    }
}

fn at_line(e: Error, line: usize) -> Error {
    match e {
        Error::InvalidArgument(message) => Error::Parse { line, message },
        other => other,
    }
}

fn number<T: FromStr>(tok: Option<&str>, line: usize) -> Result<T> {
    match tok.map(str::parse) {
        Some(Ok(x)) => Ok(x),
        Some(Err(_)) => parse_err(line, format!("malformed number `{}`", tok.unwrap())),
        None => parse_err(line, "missing number"),
    }
}

fn end<'a>(mut tok: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match tok.next() {
        Some(extra) => parse_err(line, format!("unexpected trailing token `{extra}`")),
        None => Ok(()),
    }
}
