use std::fmt;

use crate::concept::{Line, LineConcept};
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Upper frequency bound of an edge; `Infinite` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaxFrequency {
    Finite(u64),
    Infinite,
}

impl MaxFrequency {
    pub fn finite(self) -> Option<u64> {
        match self {
            MaxFrequency::Finite(v) => Some(v),
            MaxFrequency::Infinite => None,
        }
    }

    pub fn allows(self, total: u64) -> bool {
        match self {
            MaxFrequency::Finite(v) => total <= v,
            MaxFrequency::Infinite => true,
        }
    }
}

impl PartialOrd for MaxFrequency {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MaxFrequency {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use MaxFrequency::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for MaxFrequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxFrequency::Finite(v) => write!(f, "{v}"),
            MaxFrequency::Infinite => write!(f, "inf"),
        }
    }
}

/// Per-edge planning data: line cost share, and the frequency window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeData {
    pub cost: Cost,
    pub fmin: u64,
    pub fmax: MaxFrequency,
}

/// A line planning instance: a graph with per-edge cost and frequency
/// windows plus the two fixed cost parameters.
///
/// The cost of a concept `(L, f)` is
/// `dfix * |L| + sum over lines of f_l * (cfix + sum of edge costs on l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    graph: Graph,
    dfix: Cost,
    cfix: Cost,
    edges: Vec<EdgeData>,
}

impl Instance {
    pub fn new(
        graph: Graph,
        dfix: Cost,
        cfix: Cost,
        edges: impl IntoIterator<Item = EdgeData>,
    ) -> Result<Instance> {
        let edges: Vec<EdgeData> = edges.into_iter().collect();
        if edges.len() != graph.edge_count() {
            return Err(Error::InvalidInstance(format!(
                "{} edge records for {} graph edges",
                edges.len(),
                graph.edge_count()
            )));
        }
        if dfix.is_negative() || cfix.is_negative() {
            return Err(Error::InvalidInstance("dfix and cfix must be nonnegative".into()));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.cost.is_negative() {
                return Err(Error::InvalidInstance(format!("edge {i} has negative cost")));
            }
            if !e.fmax.allows(e.fmin) {
                return Err(Error::InvalidInstance(format!(
                    "edge {i} has fmin {} above fmax {}",
                    e.fmin, e.fmax
                )));
            }
        }
        Ok(Instance { graph, dfix, cfix, edges })
    }

    /// Instance with the same `(cost, fmin, fmax)` triple on every edge.
    pub fn uniform(graph: Graph, dfix: Cost, cfix: Cost, edge: EdgeData) -> Instance {
        let m = graph.edge_count();
        Instance::new(graph, dfix, cfix, std::iter::repeat(edge).take(m)).unwrap()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dfix(&self) -> Cost {
        self.dfix
    }

    pub fn cfix(&self) -> Cost {
        self.cfix
    }

    pub fn edge_data(&self, edge: usize) -> EdgeData {
        self.edges[edge]
    }

    pub fn edge_cost(&self, edge: usize) -> Cost {
        self.edges[edge].cost
    }

    pub fn fmin(&self, edge: usize) -> u64 {
        self.edges[edge].fmin
    }

    pub fn fmax(&self, edge: usize) -> MaxFrequency {
        self.edges[edge].fmax
    }

    /// Total frequency per edge under `concept`, indexed by edge.
    pub fn total_frequency(&self, concept: &LineConcept) -> Result<Vec<u64>> {
        let mut totals = vec![0u64; self.graph.edge_count()];
        for (line, freq) in concept.entries() {
            for e in line.edge_ids(&self.graph)? {
                totals[e] += freq;
            }
        }
        Ok(totals)
    }

    /// Checks the frequency windows and flags zero-edge lines.
    pub fn is_feasible(&self, concept: &LineConcept) -> Result<FeasibilityReport> {
        let totals = self.total_frequency(concept)?;
        let mut report = FeasibilityReport::default();
        for (e, &total) in totals.iter().enumerate() {
            let EdgeData { fmin, fmax, .. } = self.edges[e];
            if total < fmin || !fmax.allows(total) {
                report.edge_violations.push(EdgeViolation { edge: e, total, fmin, fmax });
            }
        }
        report.zero_edge_lines = concept
            .entries()
            .iter()
            .filter(|(l, _)| l.is_zero_edge())
            .count();
        Ok(report)
    }

    /// Exact cost of a concept. Feasibility is not required.
    pub fn concept_cost(&self, concept: &LineConcept) -> Result<Cost> {
        let mut cost = self.dfix * concept.line_count() as u64;
        for (line, freq) in concept.entries() {
            cost += self.line_cost(line)? * *freq;
        }
        Ok(cost)
    }

    /// `cfix` plus the edge costs along `line` (one unit of frequency).
    pub fn line_cost(&self, line: &Line) -> Result<Cost> {
        let mut cost = self.cfix;
        for e in line.edge_ids(&self.graph)? {
            cost += self.edges[e].cost;
        }
        Ok(cost)
    }
}

/// Outcome of a feasibility check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeasibilityReport {
    /// Edges whose total frequency falls outside `[fmin, fmax]`.
    pub edge_violations: Vec<EdgeViolation>,
    /// Zero-edge entries; a finished concept must not contain any.
    pub zero_edge_lines: usize,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.edge_violations.is_empty() && self.zero_edge_lines == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeViolation {
    pub edge: usize,
    pub total: u64,
    pub fmin: u64,
    pub fmax: MaxFrequency,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_edge_path() -> Instance {
        Instance::new(
            Graph::path(3),
            Cost::ZERO,
            Cost::from_int(1),
            [
                EdgeData { cost: Cost::from_int(2), fmin: 2, fmax: MaxFrequency::Finite(3) },
                EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Infinite },
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_fmin_above_fmax() {
        let bad = Instance::new(
            Graph::path(2),
            Cost::ZERO,
            Cost::ZERO,
            [EdgeData { cost: Cost::ZERO, fmin: 3, fmax: MaxFrequency::Finite(2) }],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn totals_cost_and_feasibility() {
        let inst = two_edge_path();
        let concept = LineConcept::new([
            (Line::new([0, 1, 2]).unwrap(), 2),
            (Line::new([1, 2]).unwrap(), 1),
        ]);
        assert_eq!(inst.total_frequency(&concept).unwrap(), vec![2, 3]);
        assert!(inst.is_feasible(&concept).unwrap().is_feasible());
        // 2 * (1 + 2) + 1 * 1, dfix = 0
        assert_eq!(inst.concept_cost(&concept).unwrap(), Cost::from_int(7));
    }

    #[test]
    fn violations_are_reported_per_edge() {
        let inst = two_edge_path();
        let concept = LineConcept::new([(Line::new([1, 2]).unwrap(), 4)]);
        let report = inst.is_feasible(&concept).unwrap();
        assert!(!report.is_feasible());
        assert_eq!(report.edge_violations.len(), 1);
        assert_eq!(report.edge_violations[0].edge, 0);
        assert_eq!(report.edge_violations[0].total, 0);
    }

    #[test]
    fn zero_edge_lines_are_flagged() {
        let inst = two_edge_path();
        let concept = LineConcept::new([
            (Line::new([0, 1, 2]).unwrap(), 2),
            (Line::new([1, 2]).unwrap(), 1),
            (Line::zero_edge(0), 1),
        ]);
        let report = inst.is_feasible(&concept).unwrap();
        assert_eq!(report.zero_edge_lines, 1);
        assert!(!report.is_feasible());
    }

    #[test]
    fn nonadjacent_line_is_invalid() {
        let inst = two_edge_path();
        let concept = LineConcept::new([(Line::new([0, 2]).unwrap(), 1)]);
        assert!(matches!(inst.total_frequency(&concept), Err(Error::InvalidLine(_))));
    }
}
