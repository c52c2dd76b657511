use crate::error::{Error, Result};
use crate::graph::Graph;

/// An undirected simple path given by its vertex sequence.
///
/// A line is a value on its own; whether its consecutive vertices are actually
/// adjacent is checked by the operations that pair it with a [`Graph`]. The
/// sequence is stored in canonical orientation (the smaller endpoint first),
/// so a line and its reversal compare equal:
///
/// ```
/// use lpal::Line;
///
/// let a = Line::new([0, 3, 1]).unwrap();
/// let b = Line::new([1, 3, 0]).unwrap();
/// assert_eq!(a, b);
/// ```
///
/// A single-vertex sequence is a zero-edge line. Those occur internally in
/// the tree solver; feasibility checking flags them and solvers never emit
/// them in final output.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line {
    vertices: Vec<usize>,
}

impl Line {
    pub fn new(vertices: impl Into<Vec<usize>>) -> Result<Line> {
        let mut vertices = vertices.into();
        if vertices.is_empty() {
            return Err(Error::InvalidLine("empty vertex sequence".into()));
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidLine(format!("repeated vertex in {vertices:?}")));
        }
        if vertices.first() > vertices.last() {
            vertices.reverse();
        }
        Ok(Line { vertices })
    }

    pub fn zero_edge(v: usize) -> Line {
        Line { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_zero_edge(&self) -> bool {
        self.vertices.len() == 1
    }

    /// `true` if `v` is an end of the line. A zero-edge line has one end.
    pub fn ends_at(&self, v: usize) -> bool {
        let (a, b) = self.endpoints();
        a == v || b == v
    }

    /// Resolves consecutive vertex pairs against `graph`.
    pub fn edge_ids(&self, graph: &Graph) -> Result<Vec<usize>> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= graph.vertex_count()) {
            return Err(Error::InvalidLine(format!("vertex {v} outside the graph")));
        }
        self.vertices
            .windows(2)
            .map(|w| {
                graph.edge_between(w[0], w[1]).ok_or_else(|| {
                    Error::InvalidLine(format!("vertices {} and {} are not adjacent", w[0], w[1]))
                })
            })
            .collect()
    }
}

/// A set of lines with positive frequencies.
///
/// Entries are kept sorted by endpoint pair and then by vertex sequence, and
/// duplicates (up to reversal) are merged by summing frequencies, so two
/// concepts describing the same plan compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LineConcept {
    entries: Vec<(Line, u64)>,
}

impl LineConcept {
    pub fn empty() -> LineConcept {
        LineConcept::default()
    }

    /// Builds a concept, merging duplicate lines. Zero-frequency entries are
    /// dropped. The second return value counts entries merged into an earlier
    /// duplicate, for callers that want to warn about them.
    pub fn from_entries(entries: impl IntoIterator<Item = (Line, u64)>) -> (LineConcept, usize) {
        let mut concept = LineConcept::empty();
        let mut merged = 0;
        for (line, freq) in entries {
            if freq == 0 {
                continue;
            }
            if concept.add(line, freq) {
                merged += 1;
            }
        }
        (concept, merged)
    }

    pub fn new(entries: impl IntoIterator<Item = (Line, u64)>) -> LineConcept {
        LineConcept::from_entries(entries).0
    }

    /// Adds frequency to a line, inserting it if absent. Returns `true` if
    /// the line was already present.
    pub fn add(&mut self, line: Line, freq: u64) -> bool {
        if freq == 0 {
            return false;
        }
        let key = (line.endpoints(), line);
        match self
            .entries
            .binary_search_by(|(l, _)| (l.endpoints(), l.clone()).cmp(&key))
        {
            Ok(i) => {
                self.entries[i].1 += freq;
                true
            }
            Err(i) => {
                self.entries.insert(i, (key.1, freq));
                false
            }
        }
    }

    pub fn entries(&self) -> &[(Line, u64)] {
        &self.entries
    }

    pub fn line_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all line frequencies.
    pub fn total_line_frequency(&self) -> u64 {
        self.entries.iter().map(|&(_, f)| f).sum()
    }

    /// Total frequency of lines with an end at `v`. A zero-edge line at `v`
    /// contributes its frequency once.
    pub fn ends_at(&self, v: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(l, _)| l.ends_at(v))
            .map(|&(_, f)| f)
            .sum()
    }

    /// Number of one-edge lines, weighted by nothing (distinct lines).
    pub fn one_edge_line_count(&self) -> usize {
        self.entries.iter().filter(|(l, _)| l.edge_count() == 1).count()
    }

    /// Drops zero-edge lines, returning how many entries were removed.
    pub fn strip_zero_edge_lines(&mut self) -> usize {
        let before = self.entries.len();
        self.entries.retain(|(l, _)| !l.is_zero_edge());
        before - self.entries.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_rejects_empty_and_repeats() {
        assert!(Line::new([]).is_err());
        assert!(Line::new([1, 2, 1]).is_err());
    }

    #[test]
    fn reversal_is_merged() {
        let (c, merged) = LineConcept::from_entries([
            (Line::new([0, 1, 2]).unwrap(), 2),
            (Line::new([2, 1, 0]).unwrap(), 3),
        ]);
        assert_eq!(merged, 1);
        assert_eq!(c.entries().len(), 1);
        assert_eq!(c.entries()[0].1, 5);
    }

    #[test]
    fn ends_count_zero_edge_once() {
        let c = LineConcept::new([
            (Line::zero_edge(4), 3),
            (Line::new([4, 1]).unwrap(), 2),
            (Line::new([1, 2]).unwrap(), 7),
        ]);
        assert_eq!(c.ends_at(4), 5);
        assert_eq!(c.ends_at(1), 9);
    }

    #[test]
    fn entries_sorted_by_endpoints() {
        let c = LineConcept::new([
            (Line::new([3, 4]).unwrap(), 1),
            (Line::new([0, 5]).unwrap(), 1),
            (Line::new([0, 2, 4]).unwrap(), 1),
        ]);
        let ends: Vec<_> = c.entries().iter().map(|(l, _)| l.endpoints()).collect();
        assert_eq!(ends, vec![(0, 4), (0, 5), (3, 4)]);
    }
}
