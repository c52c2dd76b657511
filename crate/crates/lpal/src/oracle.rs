//! Exhaustive branch-and-bound solver for small instances.
//!
//! The oracle enumerates every simple path of the graph and searches over
//! per-path frequencies. It is exponential and deliberately simple; its job
//! is to be an independent source of ground truth for the polynomial solvers
//! and the instance constructions, not to be fast.

use std::time::{Duration, Instant};

use crate::concept::{Line, LineConcept};
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;

/// Limits for the oracle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Refuse graphs with more vertices than this.
    pub max_vertices: usize,
    /// Per-line frequency cap. Every line is capped by the smallest finite
    /// fmax along it; this value caps it further. `None` derives a fallback
    /// from the instance, the sum of all fmin values, which applies only to
    /// lines whose edges all have infinite fmax.
    pub frequency_cap: Option<u64>,
    /// Abort with [`Error::Timeout`] when exceeded.
    pub time_budget: Option<Duration>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_vertices: 8, frequency_cap: None, time_budget: None }
    }
}

impl OracleConfig {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        OracleConfig { max_vertices, ..Default::default() }
    }
}

/// All simple paths of a graph, each with at least one edge, deduplicated up
/// to reversal and stored with the smaller endpoint first.
#[derive(Debug, Clone)]
pub struct PathCatalog {
    paths: Vec<Line>,
}

impl PathCatalog {
    pub fn paths(&self) -> &[Line] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Enumerates every simple path with at least one edge.
///
/// A tree on `n` vertices yields exactly `n * (n - 1) / 2` paths.
pub fn enumerate_simple_paths(graph: &Graph) -> PathCatalog {
    let n = graph.vertex_count();
    let mut paths = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut on_path = vec![false; n];

    fn extend(graph: &Graph, current: &mut Vec<usize>, on_path: &mut [bool], paths: &mut Vec<Line>) {
        let v = *current.last().unwrap();
        for &(w, _) in graph.neighbors(v) {
            if on_path[w] {
                continue;
            }
            current.push(w);
            on_path[w] = true;
            // Each undirected path is seen from both ends; keep one copy.
            if current[0] < w {
                paths.push(Line::new(current.clone()).unwrap());
            }
            extend(graph, current, on_path, paths);
            on_path[w] = false;
            current.pop();
        }
    }

    for start in 0..n {
        current.push(start);
        on_path[start] = true;
        extend(graph, &mut current, &mut on_path, &mut paths);
        on_path[start] = false;
        current.pop();
    }
    paths.sort_by(|a, b| (a.endpoints(), a.vertices()).cmp(&(b.endpoints(), b.vertices())));
    PathCatalog { paths }
}

/// An optimal concept with its cost.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleSolution {
    pub cost: Cost,
    pub concept: LineConcept,
}

/// Finds a minimum-cost feasible concept by exhaustive search.
pub fn oracle_solve(instance: &Instance, config: &OracleConfig) -> Result<OracleSolution> {
    let mut search = Search::new(instance, config, Mode::Optimize)?;
    search.run()?;
    match search.best.take() {
        Some((cost, assigned)) => Ok(OracleSolution { cost, concept: search.concept(&assigned) }),
        None => Err(Error::Infeasible),
    }
}

/// Decides whether a feasible concept of cost at most `threshold` exists.
///
/// Errors with [`Error::Infeasible`] when no feasible concept exists at all.
pub fn oracle_decide(instance: &Instance, threshold: Cost, config: &OracleConfig) -> Result<bool> {
    let mut search = Search::new(instance, config, Mode::Decide(threshold))?;
    search.run()?;
    if search.best.is_some() {
        return Ok(true);
    }
    // Nothing at or under the threshold; distinguish "expensive" from
    // "infeasible" with a pruning-free probe for any feasible concept.
    let mut probe = Search::new(instance, config, Mode::AnyFeasible)?;
    probe.run()?;
    match probe.best {
        Some(_) => Ok(false),
        None => Err(Error::Infeasible),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Mode {
    Optimize,
    Decide(Cost),
    AnyFeasible,
}

struct PathInfo {
    line: Line,
    edges: Vec<usize>,
    unit_cost: Cost,
    cap: u64,
}

struct Search<'a> {
    instance: &'a Instance,
    paths: Vec<PathInfo>,
    by_edge: Vec<Vec<usize>>,
    totals: Vec<u64>,
    /// A path is locked once its frequency is decided on the current branch,
    /// or when an earlier sibling branch already enumerated its values.
    locked: Vec<bool>,
    assigned: Vec<u64>,
    cost: Cost,
    mode: Mode,
    best: Option<(Cost, Vec<u64>)>,
    budget: Option<Duration>,
    deadline: Option<Instant>,
    nodes: u64,
    done: bool,
}

impl<'a> Search<'a> {
    fn new(instance: &'a Instance, config: &OracleConfig, mode: Mode) -> Result<Search<'a>> {
        let graph = instance.graph();
        if graph.vertex_count() > config.max_vertices {
            return Err(Error::TooLarge(format!(
                "{} vertices exceeds the oracle limit of {}",
                graph.vertex_count(),
                config.max_vertices
            )));
        }
        let demand_sum: u64 = (0..graph.edge_count()).map(|e| instance.fmin(e)).sum();

        let catalog = enumerate_simple_paths(graph);
        let mut paths: Vec<PathInfo> = catalog
            .paths
            .into_iter()
            .map(|line| {
                let edges = line.edge_ids(graph).expect("catalog paths are valid");
                let finite_fmax = edges.iter().filter_map(|&e| instance.fmax(e).finite()).min();
                let cap = match (config.frequency_cap, finite_fmax) {
                    (Some(n), Some(b)) => n.min(b),
                    (Some(n), None) => n,
                    (None, Some(b)) => b,
                    (None, None) => demand_sum,
                };
                let unit_cost = instance.line_cost(&line).expect("catalog paths are valid");
                PathInfo { line, edges, unit_cost, cap }
            })
            .collect();
        // Longer paths first: they satisfy more demand per unit of cfix. The
        // sort is stable, so ties keep the canonical catalog order.
        paths.sort_by(|a, b| b.edges.len().cmp(&a.edges.len()));

        let mut by_edge = vec![Vec::new(); graph.edge_count()];
        for (i, p) in paths.iter().enumerate() {
            for &e in &p.edges {
                by_edge[e].push(i);
            }
        }

        Ok(Search {
            instance,
            totals: vec![0; graph.edge_count()],
            locked: vec![false; paths.len()],
            assigned: vec![0; paths.len()],
            cost: Cost::ZERO,
            mode,
            best: None,
            budget: config.time_budget,
            deadline: config.time_budget.map(|b| Instant::now() + b),
            nodes: 0,
            done: false,
            paths,
            by_edge,
        })
    }

    fn concept(&self, assigned: &[u64]) -> LineConcept {
        LineConcept::new(
            assigned
                .iter()
                .enumerate()
                .filter(|&(_, &f)| f > 0)
                .map(|(i, &f)| (self.paths[i].line.clone(), f)),
        )
    }

    fn deficit(&self, e: usize) -> u64 {
        self.instance.fmin(e).saturating_sub(self.totals[e])
    }

    /// Largest frequency this path could take, limited by its cap and by the
    /// fmax slack of every edge on it.
    fn headroom(&self, p: usize) -> u64 {
        let info = &self.paths[p];
        let mut room = info.cap;
        for &e in &info.edges {
            if let Some(fmax) = self.instance.fmax(e).finite() {
                room = room.min(fmax - self.totals[e]);
            }
        }
        room
    }

    /// A cost every completion of the current partial assignment must pay.
    fn lower_bound(&self) -> Cost {
        let m = self.instance.graph().edge_count();
        let mut bound = self.cost;
        let mut max_deficit = 0u64;
        for e in 0..m {
            let d = self.deficit(e);
            if d > 0 {
                max_deficit = max_deficit.max(d);
                bound += self.instance.edge_cost(e) * d;
            }
        }
        if max_deficit > 0 {
            bound += self.instance.cfix() * max_deficit;
            // Any line meets at most two deficit edges at one vertex, so the
            // deficit degree bounds how many new lines must be paid for.
            let graph = self.instance.graph();
            let spread = (0..graph.vertex_count())
                .map(|v| {
                    let dd =
                        graph.neighbors(v).iter().filter(|&&(_, e)| self.deficit(e) > 0).count();
                    (dd as u64).div_ceil(2)
                })
                .max()
                .unwrap_or(1);
            bound += self.instance.dfix() * spread.max(1);
        }
        bound
    }

    fn prune(&self) -> bool {
        match self.mode {
            Mode::Optimize => {
                self.best.as_ref().is_some_and(|(best, _)| self.lower_bound() >= *best)
            }
            Mode::Decide(threshold) => self.lower_bound() > threshold,
            Mode::AnyFeasible => false,
        }
    }

    fn run(&mut self) -> Result<()> {
        self.search()
    }

    fn search(&mut self) -> Result<()> {
        if self.done {
            return Ok(());
        }
        if self.nodes % 256 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::Timeout(self.budget.unwrap()));
                }
            }
        }
        self.nodes += 1;
        if self.prune() {
            return Ok(());
        }

        // Branch on the deficit edge with the fewest usable paths.
        let m = self.instance.graph().edge_count();
        let mut target: Option<(usize, usize)> = None;
        for e in 0..m {
            if self.deficit(e) == 0 {
                continue;
            }
            let usable = self.by_edge[e]
                .iter()
                .filter(|&&p| !self.locked[p] && self.headroom(p) > 0)
                .count();
            if usable == 0 {
                return Ok(());
            }
            if target.is_none_or(|(best, _)| usable < best) {
                target = Some((usable, e));
            }
        }

        let Some((usable, e)) = target else {
            self.record_solution();
            return Ok(());
        };

        let deficit = self.deficit(e);
        let candidates: Vec<usize> = self.by_edge[e]
            .iter()
            .copied()
            .filter(|&p| !self.locked[p] && self.headroom(p) > 0)
            .collect();
        // Solutions are split by the first candidate that carries frequency:
        // branch i fixes a frequency for candidate i and zeroes candidates
        // before it. Locks make both exclusions stick down the subtree.
        for &p in &candidates {
            let max_freq = self.headroom(p);
            // A lone candidate must absorb the whole deficit by itself.
            let min_freq = if usable == 1 { deficit.min(max_freq) } else { 1 };
            self.locked[p] = true;
            for freq in (min_freq..=max_freq).rev() {
                self.assign(p, freq);
                self.search()?;
                self.unassign(p, freq);
                if self.done {
                    break;
                }
            }
            if self.done {
                break;
            }
        }
        for &p in &candidates {
            self.locked[p] = false;
        }
        Ok(())
    }

    fn assign(&mut self, p: usize, freq: u64) {
        for &e in &self.paths[p].edges {
            self.totals[e] += freq;
        }
        self.assigned[p] = freq;
        self.cost += self.instance.dfix() + self.paths[p].unit_cost * freq;
    }

    fn unassign(&mut self, p: usize, freq: u64) {
        for &e in &self.paths[p].edges {
            self.totals[e] -= freq;
        }
        self.assigned[p] = 0;
        self.cost -= self.instance.dfix() + self.paths[p].unit_cost * freq;
    }

    fn record_solution(&mut self) {
        debug_assert!((0..self.instance.graph().edge_count()).all(|e| self.deficit(e) == 0));
        match self.mode {
            Mode::Optimize => {
                if self.best.as_ref().is_none_or(|(best, _)| self.cost < *best) {
                    self.best = Some((self.cost, self.assigned.clone()));
                }
            }
            Mode::Decide(threshold) => {
                if self.cost <= threshold {
                    self.best = Some((self.cost, self.assigned.clone()));
                    self.done = true;
                }
            }
            Mode::AnyFeasible => {
                self.best = Some((self.cost, self.assigned.clone()));
                self.done = true;
            }
        }
    }
}
