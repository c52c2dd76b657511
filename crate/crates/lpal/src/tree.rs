//! Optimal line concepts on trees.
//!
//! [`solve_tree_dp`] runs a dynamic program over rooted subtrees. The state
//! for a subtree with root `r` is a [`CostVector`]: entry `k` is the cheapest
//! cost of a feasible concept on the subtree that leaves at least `k` line
//! ends available at `r` for later extension, where a not-yet-extended line
//! may still be a zero-edge stub. Subtrees combine through two operations,
//! extending a child subtree across its parent edge and merging two subtrees
//! sharing a root, and the full tree's answer is entry `0` at the root.
//!
//! [`solve_tree_fixed_freq`] handles the fixed-frequency case (`fmin = fmax`)
//! in polynomial time independent of the frequency values by starting from
//! one line per edge and merging line ends at each vertex, guided by the star
//! solver on the local neighborhood.

use std::collections::BTreeMap;

use crate::concept::{Line, LineConcept};
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::instance::{EdgeData, Instance};
use crate::star;

/// Costs of a rooted subtree conditioned on the number of line ends kept
/// available at its root; `None` marks an unreachable requirement.
///
/// Entries are nondecreasing: asking for more ends cannot get cheaper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostVector {
    entries: Vec<Option<Cost>>,
}

impl CostVector {
    /// Largest supported end count `b`; the vector has `b + 1` entries.
    pub fn bound(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entry(&self, k: usize) -> Option<Cost> {
        self.entries[k]
    }

    pub fn entries(&self) -> &[Option<Cost>] {
        &self.entries
    }
}

/// Vector of a single vertex: `k` ends are `k` zero-edge stubs.
pub fn cost_vector_leaf(cfix: Cost, bound: usize) -> CostVector {
    CostVector { entries: (0..=bound as u64).map(|k| Some(cfix * k)).collect() }
}

/// Extends a subtree across the edge from its root to a new parent root.
///
/// The new root's ends are all copies of the connecting edge, so entry `k`
/// places `max(k, fmin)` copies and chooses how many child ends to continue
/// into them. Fails if `fmin` exceeds the vector bound; entries above `fmax`
/// are unreachable.
pub fn cost_vector_introduce_parent(
    child: &CostVector,
    edge: &EdgeData,
    cfix: Cost,
) -> Result<CostVector> {
    Ok(extend_with_choices(child, edge, cfix)?.0)
}

/// Merges the vectors of two subtrees sharing their root vertex; at least
/// one of the two must attach to the root by a single edge — the caller's
/// decomposition is responsible for that precondition. Entry `k` considers
/// every split `k = k1 + k2 - 2m` with `m <= min(k1, k2)`, where `m` pairs
/// of ends, one from each side, join into through lines, each refunding one
/// `cfix`. A join consumes an end on both sides, so `m` cannot exceed
/// either requirement; because cost vectors are nondecreasing, surplus ends
/// beyond a side's requirement never pay off and this bound loses nothing.
pub fn cost_vector_merge(left: &CostVector, right: &CostVector, cfix: Cost) -> CostVector {
    merge_with_choices(left, right, cfix).0
}

fn extend_with_choices(
    child: &CostVector,
    edge: &EdgeData,
    cfix: Cost,
) -> Result<(CostVector, Vec<Option<usize>>)> {
    let b = child.bound();
    let fmin = edge.fmin as usize;
    if edge.fmin > b as u64 {
        return Err(Error::BoundTooSmall {
            bound: b as u64,
            reason: format!("edge demands fmin {}", edge.fmin),
        });
    }
    let unit = cfix + edge.cost;
    let mut entries = vec![None; b + 1];
    let mut choices = vec![None; b + 1];
    for k in 0..=b {
        if !edge.fmax.allows(k as u64) {
            continue;
        }
        let a = k.max(fmin);
        let base = unit * a as u64;
        for m in 0..=a {
            let Some(c) = child.entries[m] else { continue };
            let value = c + base - cfix * m as u64;
            if entries[k].is_none_or(|cur| value < cur) {
                entries[k] = Some(value);
                choices[k] = Some(m);
            }
        }
    }
    Ok((CostVector { entries }, choices))
}

fn merge_with_choices(
    left: &CostVector,
    right: &CostVector,
    cfix: Cost,
) -> (CostVector, Vec<Option<(usize, usize, usize)>>) {
    let b = left.bound();
    assert_eq!(b, right.bound(), "merging vectors with different bounds");
    let mut entries = vec![None; b + 1];
    let mut choices = vec![None; b + 1];
    for k in 0..=b {
        // Ascending m, then ascending k1, so ties resolve to the smallest.
        for m in 0..=b {
            if k + 2 * m > 2 * b {
                break;
            }
            let lo = m.max((k + 2 * m).saturating_sub(b));
            let hi = b.min(k + m);
            for k1 in lo..=hi {
                let k2 = k + 2 * m - k1;
                let (Some(l), Some(r)) = (left.entries[k1], right.entries[k2]) else { continue };
                let value = l + r - cfix * m as u64;
                if entries[k].is_none_or(|cur| value < cur) {
                    entries[k] = Some(value);
                    choices[k] = Some((k1, k2, m));
                }
            }
        }
    }
    (CostVector { entries }, choices)
}

/// Result of a tree solver: the optimal cost and, when requested, a concept
/// achieving it.
#[derive(Debug, Clone, PartialEq)]
pub struct TreeSolution {
    pub cost: Cost,
    pub concept: Option<LineConcept>,
}

enum Step {
    Leaf { vertex: usize },
    Extend { child: usize, child_vertex: usize, parent_vertex: usize, fmin: usize, choice: Vec<Option<usize>> },
    Merge { left: usize, right: usize, choice: Vec<Option<(usize, usize, usize)>> },
}

/// Solves a tree instance with `dfix = 0` by dynamic programming.
///
/// `bound` limits the line ends tracked per vertex and must dominate every
/// finite fmax; `None` uses the largest finite fmax, and an instance with an
/// infinite fmax requires an explicit bound. With `reconstruct` the optimal
/// cost comes with a concept achieving it, free of zero-edge lines.
pub fn solve_tree_dp(instance: &Instance, bound: Option<u64>, reconstruct: bool) -> Result<TreeSolution> {
    let graph = instance.graph();
    if !graph.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        )));
    }
    if !instance.dfix().is_zero() {
        return Err(Error::NonzeroDfix(instance.dfix().to_string()));
    }

    let finite_max = (0..graph.edge_count()).filter_map(|e| instance.fmax(e).finite()).max();
    let infinite = (0..graph.edge_count()).any(|e| instance.fmax(e).finite().is_none());
    let b = match bound {
        Some(b) => b,
        None if infinite => {
            return Err(Error::BoundTooSmall {
                bound: 0,
                reason: "an edge has infinite fmax; pass an explicit bound".into(),
            })
        }
        None => finite_max.unwrap_or(0),
    };
    if let Some(fmax) = finite_max {
        if fmax > b {
            return Err(Error::BoundTooSmall {
                bound: b,
                reason: format!("an edge has fmax {fmax}"),
            });
        }
    }
    let b = b as usize;

    // Iterative post-order from root 0; recursion would overflow on long
    // paths.
    let n = graph.vertex_count();
    let root = 0;
    let mut parent = vec![usize::MAX; n];
    let mut preorder = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        preorder.push(v);
        for &(w, _) in graph.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }

    let mut steps: Vec<Step> = Vec::new();
    let mut vectors: Vec<Option<CostVector>> = Vec::new();
    let mut vertex_state = vec![usize::MAX; n];
    let cfix = instance.cfix();

    for &v in preorder.iter().rev() {
        let mut acc_id = steps.len();
        steps.push(Step::Leaf { vertex: v });
        vectors.push(Some(cost_vector_leaf(cfix, b)));
        for &(w, e) in graph.neighbors(v) {
            if parent[w] != v || w == v {
                continue;
            }
            let child_id = vertex_state[w];
            let child_vec = vectors[child_id].take().expect("child consumed once");
            let (lifted_vec, choice) = extend_with_choices(&child_vec, &instance.edge_data(e), cfix)?;
            let lifted_id = steps.len();
            steps.push(Step::Extend {
                child: child_id,
                child_vertex: w,
                parent_vertex: v,
                fmin: instance.fmin(e) as usize,
                choice: if reconstruct { choice } else { Vec::new() },
            });
            vectors.push(Some(lifted_vec));

            let left_vec = vectors[lifted_id].take().unwrap();
            let right_vec = vectors[acc_id].take().unwrap();
            let (merged_vec, choice) = merge_with_choices(&left_vec, &right_vec, cfix);
            let merged_id = steps.len();
            steps.push(Step::Merge {
                left: lifted_id,
                right: acc_id,
                choice: if reconstruct { choice } else { Vec::new() },
            });
            vectors.push(Some(merged_vec));
            acc_id = merged_id;
        }
        vertex_state[v] = acc_id;
    }

    let root_state = vertex_state[root];
    let root_vector = vectors[root_state].take().unwrap();
    let Some(cost) = root_vector.entry(0) else {
        return Err(Error::Infeasible);
    };
    if !reconstruct {
        return Ok(TreeSolution { cost, concept: None });
    }

    let concept = reconstruct_concept(&steps, root_state);
    debug_assert_eq!(instance.concept_cost(&concept).unwrap(), cost);
    debug_assert!(instance.is_feasible(&concept).unwrap().is_feasible());
    Ok(TreeSolution { cost, concept: Some(concept) })
}

/// Rebuilds an optimal concept from the recorded choices. Lines are carried
/// as frequency-one units whose last vertex is the currently open end.
fn reconstruct_concept(steps: &[Step], root_state: usize) -> LineConcept {
    let mut requested: Vec<Option<usize>> = vec![None; steps.len()];
    requested[root_state] = Some(0);
    for id in (0..steps.len()).rev() {
        let Some(k) = requested[id] else { continue };
        match &steps[id] {
            Step::Leaf { .. } => {}
            Step::Extend { child, choice, .. } => {
                requested[*child] = Some(choice[k].expect("finite entry has a choice"));
            }
            Step::Merge { left, right, choice } => {
                let (k1, k2, _) = choice[k].expect("finite entry has a choice");
                requested[*left] = Some(k1);
                requested[*right] = Some(k2);
            }
        }
    }

    let mut open: Vec<Vec<Vec<usize>>> = vec![Vec::new(); steps.len()];
    let mut closed: Vec<Vec<usize>> = Vec::new();
    for id in 0..steps.len() {
        let Some(k) = requested[id] else { continue };
        match &steps[id] {
            Step::Leaf { vertex } => {
                open[id] = vec![vec![*vertex]; k];
            }
            Step::Extend { child, child_vertex, parent_vertex, fmin, choice } => {
                let m = choice[k].unwrap();
                let a = k.max(*fmin);
                let mut units = std::mem::take(&mut open[*child]);
                let mut kept = Vec::with_capacity(a);
                for mut unit in units.drain(..m) {
                    unit.push(*parent_vertex);
                    kept.push(unit);
                }
                closed.extend(units);
                kept.resize_with(a, || vec![*child_vertex, *parent_vertex]);
                open[id] = kept;
            }
            Step::Merge { left, right, choice } => {
                let (_, _, m) = choice[k].unwrap();
                let mut lu = std::mem::take(&mut open[*left]);
                let mut ru = std::mem::take(&mut open[*right]);
                for (a, b) in lu.drain(..m).zip(ru.drain(..m)) {
                    // Both units end at the shared root; joining them makes a
                    // through line, finished from here on. A zero-edge stub
                    // joins by disappearing into the other unit.
                    let mut joined = a;
                    joined.pop();
                    joined.extend(b.into_iter().rev());
                    closed.push(joined);
                }
                lu.extend(ru);
                open[id] = lu;
            }
        }
    }
    closed.extend(std::mem::take(&mut open[root_state]));

    LineConcept::new(
        closed
            .into_iter()
            .filter(|unit| unit.len() > 1)
            .map(|unit| (Line::new(unit).expect("units are simple paths"), 1)),
    )
}

/// Solves a tree instance with `fmin = fmax` and `dfix = 0` in time
/// polynomial in the vertex count alone.
pub fn solve_tree_fixed_freq(instance: &Instance) -> Result<TreeSolution> {
    let concept = run_fixed_freq(instance, |_, _| {})?;
    let cost = instance.concept_cost(&concept)?;
    Ok(TreeSolution { cost, concept: Some(concept) })
}

/// A working line during the fixed-frequency merge: a tree path tracked by
/// its endpoints and the incident edge at each endpoint.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PathEnds {
    pub ends: [usize; 2],
    pub edges: [usize; 2],
    pub freq: u64,
}

pub(crate) fn run_fixed_freq(
    instance: &Instance,
    mut after_vertex: impl FnMut(usize, &BTreeMap<(usize, usize), PathEnds>),
) -> Result<LineConcept> {
    let graph = instance.graph();
    if !graph.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges",
            graph.vertex_count(),
            graph.edge_count()
        )));
    }
    if !instance.dfix().is_zero() {
        return Err(Error::NonzeroDfix(instance.dfix().to_string()));
    }
    for e in 0..graph.edge_count() {
        if instance.fmax(e) != crate::instance::MaxFrequency::Finite(instance.fmin(e)) {
            return Err(Error::UnequalBounds {
                edge: e,
                fmin: instance.fmin(e),
                fmax: instance.fmax(e).to_string(),
            });
        }
    }

    let mut lines: BTreeMap<(usize, usize), PathEnds> = BTreeMap::new();
    for (e, [u, v]) in graph.edges().enumerate() {
        if instance.fmin(e) > 0 {
            lines.insert((u, v), PathEnds { ends: [u, v], edges: [e, e], freq: instance.fmin(e) });
        }
    }

    for v in 0..graph.vertex_count() {
        // Pair frequencies of an optimal concept on the local star.
        let local = star_subinstance(instance, v);
        let star_concept = star::solve_star(&local)?;
        let mut pair_freq: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (line, freq) in star_concept.entries() {
            if line.edge_count() == 2 {
                let (a, b) = line.endpoints();
                let ea = graph.neighbors(v)[a - 1].1;
                let eb = graph.neighbors(v)[b - 1].1;
                let key = (ea.min(eb), ea.max(eb));
                *pair_freq.entry(key).or_default() += freq;
            }
        }

        let ending: Vec<(usize, usize)> = lines
            .iter()
            .filter(|(_, rec)| rec.freq > 0 && (rec.ends[0] == v || rec.ends[1] == v))
            .map(|(&key, _)| key)
            .collect();
        for i in 0..ending.len() {
            for j in i + 1..ending.len() {
                let (r1, r2) = (lines[&ending[i]], lines[&ending[j]]);
                if r1.freq == 0 || r2.freq == 0 {
                    continue;
                }
                let (far1, e1) = far_end(&r1, v);
                let (far2, e2) = far_end(&r2, v);
                if e1 == e2 {
                    continue;
                }
                let key = (e1.min(e2), e1.max(e2));
                let Some(available) = pair_freq.get_mut(&key) else { continue };
                let d = (*available).min(r1.freq).min(r2.freq);
                if d == 0 {
                    continue;
                }
                *available -= d;
                lines.get_mut(&ending[i]).unwrap().freq -= d;
                lines.get_mut(&ending[j]).unwrap().freq -= d;
                let merged_key = (far1.0.min(far2.0), far1.0.max(far2.0));
                let merged = lines.entry(merged_key).or_insert(PathEnds {
                    ends: [merged_key.0, merged_key.1],
                    edges: if far1.0 < far2.0 { [far1.1, far2.1] } else { [far2.1, far1.1] },
                    freq: 0,
                });
                merged.freq += d;
            }
        }
        after_vertex(v, &lines);
    }

    Ok(LineConcept::new(lines.into_iter().filter(|(_, rec)| rec.freq > 0).map(
        |((x, y), rec)| {
            (Line::new(graph.tree_path(x, y)).expect("tree paths are simple"), rec.freq)
        },
    )))
}

/// The non-`v` end of a working line and the incident edge at `v`.
fn far_end(rec: &PathEnds, v: usize) -> ((usize, usize), usize) {
    if rec.ends[0] == v {
        ((rec.ends[1], rec.edges[1]), rec.edges[0])
    } else {
        ((rec.ends[0], rec.edges[0]), rec.edges[1])
    }
}

/// The star around `v`: local vertex 0 is `v` and local vertex `i` is the
/// i-th neighbor in adjacency order.
fn star_subinstance(instance: &Instance, v: usize) -> Instance {
    let graph = instance.graph();
    let neighbors = graph.neighbors(v);
    Instance::new(
        crate::graph::Graph::star(neighbors.len()),
        Cost::ZERO,
        Cost::ZERO,
        neighbors.iter().map(|&(_, e)| EdgeData {
            cost: Cost::ZERO,
            fmin: instance.fmin(e),
            fmax: crate::instance::MaxFrequency::Infinite,
        }),
    )
    .expect("local star is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::instance::MaxFrequency;

    fn costs(v: &CostVector) -> Vec<Option<i64>> {
        v.entries().iter().map(|e| e.map(|c| c.as_integer().unwrap())).collect()
    }

    fn fixed(c: u64, f: u64) -> EdgeData {
        EdgeData { cost: Cost::from_int(c), fmin: f, fmax: MaxFrequency::Finite(f) }
    }

    #[test]
    fn leaf_vector_counts_stubs() {
        let v = cost_vector_leaf(Cost::from_int(1), 3);
        assert_eq!(costs(&v), vec![Some(0), Some(1), Some(2), Some(3)]);
    }

    #[test]
    fn introduce_parent_over_demand_two_edge() {
        let child = cost_vector_leaf(Cost::from_int(1), 3);
        let edge = EdgeData { cost: Cost::ZERO, fmin: 2, fmax: MaxFrequency::Finite(3) };
        let v = cost_vector_introduce_parent(&child, &edge, Cost::from_int(1)).unwrap();
        assert_eq!(costs(&v), vec![Some(2), Some(2), Some(2), Some(3)]);
    }

    #[test]
    fn introduce_parent_blocks_entries_above_fmax() {
        let child = cost_vector_leaf(Cost::from_int(1), 4);
        let edge = EdgeData { cost: Cost::from_int(2), fmin: 1, fmax: MaxFrequency::Finite(2) };
        let v = cost_vector_introduce_parent(&child, &edge, Cost::from_int(1)).unwrap();
        assert_eq!(costs(&v), vec![Some(3), Some(3), Some(6), None, None]);
    }

    #[test]
    fn introduce_parent_rejects_small_bound() {
        let child = cost_vector_leaf(Cost::from_int(1), 2);
        let edge = EdgeData { cost: Cost::ZERO, fmin: 3, fmax: MaxFrequency::Finite(3) };
        assert!(matches!(
            cost_vector_introduce_parent(&child, &edge, Cost::ZERO),
            Err(Error::BoundTooSmall { .. })
        ));
    }

    #[test]
    fn merge_refunds_joined_ends() {
        let cfix = Cost::from_int(1);
        let a = cost_vector_leaf(cfix, 2);
        let edge = EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Finite(2) };
        let lifted = cost_vector_introduce_parent(&a, &edge, cfix).unwrap();
        // One forced end on each side joins into a single through line.
        let merged = cost_vector_merge(&lifted, &lifted.clone(), cfix);
        assert_eq!(merged.entry(0), Some(Cost::from_int(1)));
    }

    #[test]
    fn merge_never_joins_missing_ends() {
        // Left subtree: an edge with demand 2 (two forced ends), right
        // subtree: an optional edge. A join needs an end on both sides, so
        // nothing can be refunded against the empty right side: entry 0 is
        // the two forced left lines at cost 6, not a phantom 4.
        let cfix = Cost::from_int(2);
        let child = cost_vector_leaf(cfix, 4);
        let e1 = EdgeData { cost: Cost::from_int(1), fmin: 2, fmax: MaxFrequency::Finite(4) };
        let e2 = EdgeData { cost: Cost::from_int(3), fmin: 0, fmax: MaxFrequency::Finite(3) };
        let l1 = cost_vector_introduce_parent(&child, &e1, cfix).unwrap();
        let l2 = cost_vector_introduce_parent(&child, &e2, cfix).unwrap();
        assert_eq!(costs(&l1), vec![Some(6), Some(6), Some(6), Some(9), Some(12)]);
        assert_eq!(costs(&l2), vec![Some(0), Some(5), Some(10), Some(15), None]);
        let merged = cost_vector_merge(&l1, &l2, cfix);
        assert_eq!(costs(&merged), vec![Some(6), Some(6), Some(6), Some(9), Some(12)]);
    }

    fn path_23_instance() -> Instance {
        Instance::new(
            Graph::path(3),
            Cost::ZERO,
            Cost::from_int(1),
            [fixed(0, 2), fixed(0, 3)],
        )
        .unwrap()
    }

    #[test]
    fn short_path_reconstruction_is_forced() {
        let sol = solve_tree_dp(&path_23_instance(), None, true).unwrap();
        assert_eq!(sol.cost, Cost::from_int(3));
        let concept = sol.concept.unwrap();
        let entries: Vec<(Vec<usize>, u64)> = concept
            .entries()
            .iter()
            .map(|(l, f)| (l.vertices().to_vec(), *f))
            .collect();
        assert_eq!(entries, vec![(vec![0, 1, 2], 2), (vec![1, 2], 1)]);
    }

    #[test]
    fn fixed_freq_agrees_on_short_path() {
        let sol = solve_tree_fixed_freq(&path_23_instance()).unwrap();
        assert_eq!(sol.cost, Cost::from_int(3));
        let concept = sol.concept.unwrap();
        assert!(path_23_instance().is_feasible(&concept).unwrap().is_feasible());
    }

    #[test]
    fn single_vertex_tree_is_free() {
        let inst = Instance::new(Graph::new(1, []).unwrap(), Cost::ZERO, Cost::from_int(5), []).unwrap();
        let sol = solve_tree_dp(&inst, None, true).unwrap();
        assert_eq!(sol.cost, Cost::ZERO);
        assert!(sol.concept.unwrap().is_empty());
    }

    #[test]
    fn infinite_fmax_needs_explicit_bound() {
        let inst = Instance::uniform(
            Graph::path(3),
            Cost::ZERO,
            Cost::from_int(1),
            EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Infinite },
        );
        assert!(matches!(solve_tree_dp(&inst, None, false), Err(Error::BoundTooSmall { .. })));
        let sol = solve_tree_dp(&inst, Some(2), true).unwrap();
        assert_eq!(sol.cost, Cost::from_int(1));
    }

    #[test]
    fn validations() {
        let cycle = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let inst = Instance::uniform(cycle, Cost::ZERO, Cost::ZERO, fixed(0, 1));
        assert!(matches!(solve_tree_dp(&inst, None, false), Err(Error::NotATree(_))));
        assert!(matches!(solve_tree_fixed_freq(&inst), Err(Error::NotATree(_))));

        let dfix = Instance::uniform(Graph::path(3), Cost::from_int(1), Cost::ZERO, fixed(0, 1));
        assert!(matches!(solve_tree_dp(&dfix, None, false), Err(Error::NonzeroDfix(_))));

        let loose = Instance::uniform(
            Graph::path(3),
            Cost::ZERO,
            Cost::ZERO,
            EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Finite(2) },
        );
        assert!(matches!(solve_tree_fixed_freq(&loose), Err(Error::UnequalBounds { .. })));

        let tight = Instance::uniform(Graph::path(3), Cost::ZERO, Cost::ZERO, fixed(0, 4));
        assert!(matches!(solve_tree_dp(&tight, Some(3), false), Err(Error::BoundTooSmall { .. })));
    }

    #[test]
    fn fixed_freq_keeps_untouched_demand_intact() {
        // Invariant: before a vertex is processed, the lines ending there
        // through each incident edge still sum to the edge demand.
        let graph = Graph::new(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let fmins = [3, 2, 4, 1, 3];
        let inst = Instance::new(
            graph,
            Cost::ZERO,
            Cost::from_int(1),
            fmins.map(|f| fixed(0, f)),
        )
        .unwrap();
        let concept = run_fixed_freq(&inst, |done, lines| {
            let graph = inst.graph();
            for v in done + 1..graph.vertex_count() {
                for &(_, e) in graph.neighbors(v) {
                    let total: u64 = lines
                        .values()
                        .filter(|rec| {
                            rec.freq > 0
                                && ((rec.ends[0] == v && rec.edges[0] == e)
                                    || (rec.ends[1] == v && rec.edges[1] == e))
                        })
                        .map(|rec| rec.freq)
                        .sum();
                    assert_eq!(total, inst.fmin(e), "vertex {v} edge {e} after {done}");
                }
            }
        })
        .unwrap();
        assert!(inst.is_feasible(&concept).unwrap().is_feasible());
    }
}
