//! Recolouring sequences: the certificate format shared by every
//! constructive routine, and the checker that validates them.

use std::fmt::Write as _;

use serde::Serialize;

use crate::colouring::{is_proper, Colour, Colouring, Palette};
use crate::error::{parse_err, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub vertex: Vertex,
    pub colour: Colour,
}

/// A walk in a reconfiguration graph, given by its start colouring and the
/// single-vertex recolourings applied in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecolouringSequence {
    pub start: Colouring,
    pub steps: Vec<Step>,
}

impl RecolouringSequence {
    pub fn empty(start: Colouring) -> Self {
        RecolouringSequence {
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Colouring reached after all steps.
    pub fn end(&self) -> Colouring {
        let mut c = self.start.clone();
        for s in &self.steps {
            c.set(s.vertex, s.colour);
        }
        c
    }

    /// The same walk traversed backwards.
    pub fn reversed(&self) -> RecolouringSequence {
        let mut current = self.start.clone();
        let mut undo = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            undo.push(Step {
                vertex: s.vertex,
                colour: current.get(s.vertex),
            });
            current.set(s.vertex, s.colour);
        }
        undo.reverse();
        RecolouringSequence {
            start: current,
            steps: undo,
        }
    }

    /// `seq <len>` followed by one `r <vertex> <colour>` line per step.
    pub fn to_text(&self) -> String {
        let mut out = format!("seq {}\n", self.steps.len());
        for s in &self.steps {
            writeln!(out, "r {} {}", s.vertex, s.colour).unwrap();
        }
        out
    }

    /// Parses the step list; the start colouring is supplied separately.
    pub fn from_text(start: Colouring, text: &str) -> Result<RecolouringSequence> {
        let mut declared = None;
        let mut steps = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            if line.starts_with('#') {
                continue;
            }
            let tok: Vec<&str> = line.split_whitespace().collect();
            match (tok.as_slice(), declared) {
                (["seq", len], None) => match len.parse::<usize>() {
                    Ok(l) => declared = Some(l),
                    Err(_) => return parse_err(lineno, format!("malformed length `{len}`")),
                },
                (["r", v, c], Some(_)) => match (v.parse::<Vertex>(), c.parse::<Colour>()) {
                    (Ok(vertex), Ok(colour)) if colour >= 1 => steps.push(Step { vertex, colour }),
                    _ => return parse_err(lineno, "malformed step"),
                },
                (_, None) => return parse_err(lineno, "expected `seq <len>` header"),
                _ => return parse_err(lineno, "expected `r <vertex> <colour>`"),
            }
        }
        match declared {
            None => parse_err(1, "expected `seq <len>` header"),
            Some(l) if l != steps.len() => parse_err(
                text.lines().count(),
                format!("header declares {l} steps, found {}", steps.len()),
            ),
            Some(_) => Ok(RecolouringSequence { start, steps }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub length: usize,
    pub per_vertex_counts: Vec<usize>,
    /// Index of the first offending step. `None` for a valid sequence, and
    /// also when every step is fine but the start is invalid or the final
    /// colouring misses the target.
    pub failure_step: Option<usize>,
}

impl VerifyReport {
    pub fn max_per_vertex(&self) -> usize {
        self.per_vertex_counts.iter().copied().max().unwrap_or(0)
    }
}

/// Replays `seq` checking that every step changes one vertex to a different
/// admissible colour, keeps the colouring proper, and that the walk ends at
/// `target`.
pub fn verify_sequence(g: &Graph, palette: &Palette, seq: &RecolouringSequence, target: &Colouring) -> VerifyReport {
    let n = g.n();
    let mut report = VerifyReport {
        valid: false,
        length: seq.steps.len(),
        per_vertex_counts: vec![0; n],
        failure_step: None,
    };
    let start_ok = seq.start.len() == n
        && palette.check_size(n).is_ok()
        && palette.respects(&seq.start)
        && is_proper(g, &seq.start).unwrap_or(false);
    if !start_ok {
        return report;
    }
    let mut cur = seq.start.clone();
    for (i, s) in seq.steps.iter().enumerate() {
        let ok = s.vertex < n
            && cur.get(s.vertex) != s.colour
            && palette.allows(s.vertex, s.colour)
            && g.neighbours(s.vertex).iter().all(|&w| cur.get(w) != s.colour);
        if !ok {
            report.failure_step = Some(i);
            return report;
        }
        cur.set(s.vertex, s.colour);
        report.per_vertex_counts[s.vertex] += 1;
    }
    report.valid = cur == *target;
    report
}
