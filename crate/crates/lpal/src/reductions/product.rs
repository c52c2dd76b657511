//! Composing instances by substitution.
//!
//! An *antenna* is a unit-demand edge hanging off the rest of the network
//! at a degree-one tip. An instance with exactly two antennae can stand in
//! for a single edge: the product construction replaces every unit-demand
//! edge of an outer instance by a fresh copy of an inner instance, gluing
//! the copy's antenna tips onto the edge's endpoints.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;

/// A unit-demand edge with a degree-one endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Antenna {
    pub edge: usize,
    pub tip: usize,
}

/// All antennae, ordered by edge and then tip. An edge whose endpoints
/// both have degree one contributes two antennae.
pub fn find_antennae(instance: &Instance) -> Vec<Antenna> {
    let graph = instance.graph();
    let mut found = Vec::new();
    for (e, [u, v]) in graph.edges().enumerate() {
        if instance.fmin(e) != 1 {
            continue;
        }
        for tip in [u, v] {
            if graph.degree(tip) == 1 {
                found.push(Antenna { edge: e, tip });
            }
        }
    }
    found
}

/// Substitutes `inner` into every unit-demand edge of `outer`.
///
/// Both instances must have exactly two antennae and agree on `dfix` and
/// `cfix`. Each unit-demand edge of `outer` is removed and replaced by a
/// copy of `inner` whose first antenna tip lands on the edge's smaller
/// endpoint. Outer vertices keep their ids; copy vertices follow in outer
/// edge order.
pub fn instance_product(inner: &Instance, outer: &Instance) -> Result<Instance> {
    let inner_antennae = find_antennae(inner);
    if inner_antennae.len() != 2 {
        return Err(Error::NotNice(format!(
            "inner instance has {} antennae, need exactly 2",
            inner_antennae.len()
        )));
    }
    if find_antennae(outer).len() != 2 {
        return Err(Error::NotNice(format!(
            "outer instance has {} antennae, need exactly 2",
            find_antennae(outer).len()
        )));
    }
    if inner.dfix() != outer.dfix() || inner.cfix() != outer.cfix() {
        return Err(Error::ParameterMismatch(format!(
            "dfix {} vs {}, cfix {} vs {}",
            inner.dfix(),
            outer.dfix(),
            inner.cfix(),
            outer.cfix()
        )));
    }

    let inner_graph = inner.graph();
    let outer_graph = outer.graph();
    let tips = [inner_antennae[0].tip, inner_antennae[1].tip];

    let mut edges = Vec::new();
    let mut data = Vec::new();
    for (e, endpoints) in outer_graph.edges().enumerate() {
        if outer.fmin(e) != 1 {
            edges.push(endpoints);
            data.push(outer.edge_data(e));
        }
    }

    let mut next_vertex = outer_graph.vertex_count();
    for (e, [u, v]) in outer_graph.edges().enumerate() {
        if outer.fmin(e) == 1 {
            // Map each inner vertex into the product: tips onto the outer
            // endpoints, the rest onto fresh ids.
            let mut map = vec![usize::MAX; inner_graph.vertex_count()];
            map[tips[0]] = u;
            map[tips[1]] = v;
            for w in 0..inner_graph.vertex_count() {
                if map[w] == usize::MAX {
                    map[w] = next_vertex;
                    next_vertex += 1;
                }
            }
            for (ie, [a, b]) in inner_graph.edges().enumerate() {
                edges.push([map[a], map[b]]);
                data.push(inner.edge_data(ie));
            }
        }
    }

    let product = Instance::new(
        Graph::new(next_vertex, edges.iter().map(|&[a, b]| (a, b)))?,
        outer.dfix(),
        outer.cfix(),
        data,
    )?;
    debug_assert_eq!(find_antennae(&product).len(), 2);
    Ok(product)
}
