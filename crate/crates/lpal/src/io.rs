//! Line-oriented text formats for instances and line concepts.
//!
//! Instance files:
//!
//! ```text
//! # comment
//! vertices 3
//! dfix 0
//! cfix 1
//! edge 0 1 1/2 2 3
//! edge 1 2 0 1 inf
//! ```
//!
//! Each `edge` record is `u v cost fmin fmax`, with `inf` for an unbounded
//! fmax. Concept files hold one `line freq v0 v1 ... vk` record per line of
//! the plan. `#` starts a comment; blank lines are ignored. Serialization is
//! canonical, and parsing a serialized value reproduces it exactly.

use std::fmt::Write as _;

use thiserror::Error;

use crate::concept::{Line, LineConcept};
use crate::cost::Cost;
use crate::error::Result;
use crate::graph::Graph;
use crate::instance::{EdgeData, Instance, MaxFrequency};

/// A syntax or structure error, with the 1-based source line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> std::result::Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Meaningful lines of the input: (1-based number, comment-stripped tokens).
fn records(input: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    input.lines().enumerate().filter_map(|(i, raw)| {
        let text = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = text.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> std::result::Result<T, ParseError> {
    tok.parse().or_else(|_| err(line, format!("malformed {what} {tok:?}")))
}

fn parse_cost(tok: &str, line: usize, what: &str) -> std::result::Result<Cost, ParseError> {
    tok.parse().or_else(|_| err(line, format!("malformed {what} {tok:?}")))
}

pub fn parse_instance(input: &str) -> std::result::Result<Instance, ParseError> {
    let mut vertices: Option<(usize, usize)> = None;
    let mut dfix: Option<(usize, Cost)> = None;
    let mut cfix: Option<(usize, Cost)> = None;
    let mut edges: Vec<(usize, usize, usize, EdgeData)> = Vec::new();

    for (line, tokens) in records(input) {
        match tokens[0] {
            "vertices" => {
                if vertices.is_some() {
                    return err(line, "repeated vertices record");
                }
                let [_, n] = tokens[..] else {
                    return err(line, "expected: vertices <n>");
                };
                vertices = Some((line, parse_num(n, line, "vertex count")?));
            }
            "dfix" | "cfix" => {
                let slot = if tokens[0] == "dfix" { &mut dfix } else { &mut cfix };
                if slot.is_some() {
                    return err(line, format!("repeated {} record", tokens[0]));
                }
                let [name, value] = tokens[..] else {
                    return err(line, format!("expected: {} <rational>", tokens[0]));
                };
                *slot = Some((line, parse_cost(value, line, name)?));
            }
            "edge" => {
                let [_, u, v, cost, fmin, fmax] = tokens[..] else {
                    return err(line, "expected: edge <u> <v> <cost> <fmin> <fmax>");
                };
                let u = parse_num(u, line, "vertex")?;
                let v = parse_num(v, line, "vertex")?;
                let cost = parse_cost(cost, line, "edge cost")?;
                let fmin = parse_num(fmin, line, "fmin")?;
                let fmax = if fmax == "inf" {
                    MaxFrequency::Infinite
                } else {
                    MaxFrequency::Finite(parse_num(fmax, line, "fmax")?)
                };
                edges.push((line, u, v, EdgeData { cost, fmin, fmax }));
            }
            other => return err(line, format!("unknown record {other:?}")),
        }
    }

    let Some((_, n)) = vertices else {
        return err(0, "missing vertices record");
    };
    let Some((_, dfix)) = dfix else {
        return err(0, "missing dfix record");
    };
    let Some((_, cfix)) = cfix else {
        return err(0, "missing cfix record");
    };

    let first_edge_line = edges.first().map_or(0, |&(l, ..)| l);
    let graph = Graph::new(n, edges.iter().map(|&(_, u, v, _)| (u, v)))
        .or_else(|e| err(first_edge_line, e.to_string()))?;
    Instance::new(graph, dfix, cfix, edges.iter().map(|&(.., d)| d))
        .or_else(|e| err(first_edge_line, e.to_string()))
}

pub fn serialize_instance(instance: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", instance.graph().vertex_count()).unwrap();
    writeln!(out, "dfix {}", instance.dfix()).unwrap();
    writeln!(out, "cfix {}", instance.cfix()).unwrap();
    for (e, [u, v]) in instance.graph().edges().enumerate() {
        let d = instance.edge_data(e);
        writeln!(out, "edge {u} {v} {} {} {}", d.cost, d.fmin, d.fmax).unwrap();
    }
    out
}

/// Parses a concept file. The second return value counts duplicate lines
/// that were merged; callers typically warn when it is nonzero.
pub fn parse_concept(input: &str) -> std::result::Result<(LineConcept, usize), ParseError> {
    let mut entries = Vec::new();
    for (line, tokens) in records(input) {
        match tokens[0] {
            "line" => {
                if tokens.len() < 3 {
                    return err(line, "expected: line <freq> <v0> [v1 ...]");
                }
                let freq: u64 = parse_num(tokens[1], line, "frequency")?;
                if freq == 0 {
                    return err(line, "frequency must be positive");
                }
                let vertices = tokens[2..]
                    .iter()
                    .map(|t| parse_num(t, line, "vertex"))
                    .collect::<std::result::Result<Vec<usize>, _>>()?;
                let l = Line::new(vertices).or_else(|e| err(line, e.to_string()))?;
                entries.push((l, freq));
            }
            other => return err(line, format!("unknown record {other:?}")),
        }
    }
    Ok(LineConcept::from_entries(entries))
}

pub fn serialize_concept(concept: &LineConcept) -> String {
    let mut out = String::new();
    for (line, freq) in concept.entries() {
        write!(out, "line {freq}").unwrap();
        for v in line.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Convenience wrapper returning the crate-wide error type.
pub fn instance_from_str(input: &str) -> Result<Instance> {
    Ok(parse_instance(input)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# tiny instance
vertices 3
dfix 1/2
cfix 1
edge 0 1 2/3 2 3   # first edge
edge 1 2 0 1 inf
";

    #[test]
    fn parses_comments_and_inf() {
        let inst = parse_instance(SAMPLE).unwrap();
        assert_eq!(inst.graph().vertex_count(), 3);
        assert_eq!(inst.dfix(), Cost::new(1, 2).unwrap());
        assert_eq!(inst.fmax(0), MaxFrequency::Finite(3));
        assert_eq!(inst.fmax(1), MaxFrequency::Infinite);
        assert_eq!(inst.edge_cost(0), Cost::new(2, 3).unwrap());
    }

    #[test]
    fn instance_round_trip_is_exact() {
        let inst = parse_instance(SAMPLE).unwrap();
        let text = serialize_instance(&inst);
        let again = parse_instance(&text).unwrap();
        assert_eq!(inst, again);
        assert_eq!(serialize_instance(&again), text);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_instance("vertices 3\ndfix 0\ncfix 0\nedge 0 1 x 1 2\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_instance("vertices two\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_concept("line 1 0 1\nline 0 1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn concept_round_trip_merges_duplicates() {
        let (c, merged) = parse_concept("line 2 0 1 2\nline 3 2 1 0\nline 1 4 5\n").unwrap();
        assert_eq!(merged, 1);
        let text = serialize_concept(&c);
        let (again, merged2) = parse_concept(&text).unwrap();
        assert_eq!(merged2, 0);
        assert_eq!(c, again);
        assert_eq!(serialize_concept(&again), text);
    }

    #[test]
    fn missing_records_are_rejected() {
        assert!(parse_instance("vertices 2\ncfix 0\n").is_err());
        assert!(parse_instance("dfix 0\ncfix 0\n").is_err());
    }
}
