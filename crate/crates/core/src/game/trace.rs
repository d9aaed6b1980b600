//! Game records, their line format, and replay.
//!
//! ```text
//! #graph grid3x3.g
//! #order robber-first
//! #cops 2
//! P 8 1 4
//! 1 7 4 4
//! CAPTURED 2
//! ```
//!
//! `P` is the placement; each numbered line holds the positions after that
//! round (robber first, then the cops in order).

use std::fmt::Write as _;

use thiserror::Error;

use super::{simulate, GameConfig, GameError, MoveOrder, Outcome};
use crate::graph::{Graph, Vertex};
use crate::strategies::simple::{ScriptedCops, ScriptedRobber};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RoundRecord {
    pub round: usize,
    pub robber: Vertex,
    pub cops: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub order: MoveOrder,
    pub placement: RoundRecord,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace line {line}: {message}")]
pub struct TraceError {
    pub line: usize,
    pub message: String,
}

impl Trace {
    pub fn cop_count(&self) -> usize {
        self.placement.cops.len()
    }

    pub fn length(&self) -> Option<usize> {
        self.outcome.capture_round()
    }

    /// Placement followed by every round record.
    pub fn positions(&self) -> impl Iterator<Item = &RoundRecord> {
        std::iter::once(&self.placement).chain(&self.rounds)
    }

    pub fn to_text(&self, graph_label: &str, render: impl Fn(Vertex) -> String) -> String {
        let mut out = String::new();
        writeln!(out, "#graph {graph_label}").unwrap();
        writeln!(out, "#order {}", self.order).unwrap();
        writeln!(out, "#cops {}", self.cop_count()).unwrap();
        for record in self.positions() {
            if record.round == 0 {
                out.push('P');
            } else {
                write!(out, "{}", record.round).unwrap();
            }
            write!(out, " {}", render(record.robber)).unwrap();
            for &c in &record.cops {
                write!(out, " {}", render(c)).unwrap();
            }
            out.push('\n');
        }
        match self.outcome {
            Outcome::Captured(t) => writeln!(out, "CAPTURED {t}").unwrap(),
            Outcome::Survived(t) => writeln!(out, "SURVIVED {t}").unwrap(),
        }
        out
    }

    /// Parses [`Trace::to_text`] output. Returns the `#graph` label with the trace.
    pub fn parse(text: &str, parse_vertex: impl Fn(&str) -> Option<Vertex>) -> Result<(String, Trace), TraceError> {
        let err = |line: usize, message: String| TraceError { line, message };
        let mut label = None;
        let mut order = None;
        let mut cops = None;
        let mut records = Vec::new();
        let mut outcome = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            if outcome.is_some() {
                return Err(err(line, "content after the outcome line".into()));
            }
            if let Some(rest) = raw.strip_prefix("#graph ") {
                label = Some(rest.to_string());
                continue;
            }
            if let Some(rest) = raw.strip_prefix("#order ") {
                order = Some(rest.parse::<MoveOrder>().map_err(|e| err(line, e))?);
                continue;
            }
            if let Some(rest) = raw.strip_prefix("#cops ") {
                cops = Some(rest.parse::<usize>().map_err(|e| err(line, e.to_string()))?);
                continue;
            }
            if raw.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = raw.split_whitespace().collect();
            let number = |s: &str| s.parse::<usize>().map_err(|e| err(line, format!("{s:?}: {e}")));
            match fields[0] {
                "CAPTURED" | "SURVIVED" if fields.len() == 2 => {
                    let t = number(fields[1])?;
                    outcome = Some(if fields[0] == "CAPTURED" { Outcome::Captured(t) } else { Outcome::Survived(t) });
                }
                head => {
                    let round = if head == "P" { 0 } else { number(head)? };
                    if round != records.len() {
                        return Err(err(line, format!("expected round {}, found {round}", records.len())));
                    }
                    let k = cops.ok_or_else(|| err(line, "missing #cops header".into()))?;
                    if fields.len() != k + 2 {
                        return Err(err(line, format!("expected {} positions, found {}", k + 1, fields.len() - 1)));
                    }
                    let mut positions = fields[1..]
                        .iter()
                        .map(|f| parse_vertex(f).ok_or_else(|| err(line, format!("bad vertex {f:?}"))));
                    let robber = positions.next().expect("length checked")?;
                    let cops = positions.collect::<Result<Vec<_>, _>>()?;
                    records.push(RoundRecord { round, robber, cops });
                }
            }
        }
        let eof = text.lines().count();
        let outcome = outcome.ok_or_else(|| err(eof, "missing outcome line".into()))?;
        let mut records = records.into_iter();
        let placement = records.next().ok_or_else(|| err(eof, "missing placement line".into()))?;
        let trace = Trace {
            order: order.ok_or_else(|| err(eof, "missing #order header".into()))?,
            placement,
            rounds: records.collect(),
            outcome,
        };
        Ok((label.unwrap_or_default(), trace))
    }
}

/// Replays the recorded moves through the engine. For a legal trace the
/// result equals the input.
pub fn replay(g: &Graph, trace: &Trace) -> Result<Trace, GameError> {
    let max_rounds = match trace.outcome {
        Outcome::Captured(t) => t.max(1),
        Outcome::Survived(t) => t,
    };
    let config = GameConfig::new(trace.cop_count(), trace.order, max_rounds)?;
    let cops = ScriptedCops::new(trace.placement.cops.clone(), trace.rounds.iter().map(|r| r.cops.clone()).collect());
    let robber = ScriptedRobber::new(trace.placement.robber, trace.rounds.iter().map(|r| r.robber).collect());
    simulate(g, &config, &cops, &robber)
}
