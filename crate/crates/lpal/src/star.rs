//! Optimal line concepts on stars.
//!
//! On a star every line is either one edge or two edges through the center,
//! so with `dfix = 0` an optimal concept meets every demand exactly and only
//! the number of line starts costs anything beyond the forced edge costs.
//! The solver pairs the demands of different edges into two-edge lines so
//! that at most one one-edge line remains.

use crate::concept::{Line, LineConcept};
use crate::error::{Error, Result};
use crate::instance::Instance;

/// Why a concept on a star is optimal, per the three sufficient conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OptimalityCondition {
    /// No one-edge line at all.
    NoOneEdgeLine,
    /// Exactly one one-edge line, at frequency one.
    OneOneEdgeLineFreqOne,
    /// One edge demands more than all others combined, and the total line
    /// frequency equals that demand.
    DominantEdge,
    /// None of the conditions applies; optimality is not certified.
    None,
}

struct StarView {
    center: usize,
    /// `(leaf vertex, edge index, fmin)` for every edge with positive demand.
    demands: Vec<(usize, usize, u64)>,
}

fn star_view(instance: &Instance) -> Result<StarView> {
    let graph = instance.graph();
    let center = graph
        .star_center()
        .ok_or_else(|| Error::NotAStar(format!("{} vertices, {} edges", graph.vertex_count(), graph.edge_count())))?;
    if !instance.dfix().is_zero() {
        return Err(Error::NonzeroDfix(instance.dfix().to_string()));
    }
    let mut demands: Vec<(usize, usize, u64)> = graph
        .neighbors(center)
        .iter()
        .map(|&(leaf, e)| (leaf, e, instance.fmin(e)))
        .filter(|&(.., fmin)| fmin > 0)
        .collect();
    // Largest demand first; ties keep edge-index order (stable sort).
    demands.sort_by(|a, b| b.2.cmp(&a.2));
    Ok(StarView { center, demands })
}

/// Computes an optimal line concept for a star instance with `dfix = 0`.
///
/// The result covers every edge at exactly its fmin and contains at most one
/// one-edge line. Runs in time cubic in the number of leaves.
pub fn solve_star(instance: &Instance) -> Result<LineConcept> {
    let StarView { center, demands } = star_view(instance)?;

    // One-edge frequency per demand slot; at most one slot stays positive.
    let mut single = vec![0u64; demands.len()];
    // Frequencies of two-edge lines, keyed by demand-slot pair (i > j).
    let mut pair: Vec<Vec<u64>> = (0..demands.len()).map(|i| vec![0; i]).collect();
    // Slot with a positive one-edge line, if any.
    let mut open: Option<usize> = None;

    for k in 0..demands.len() {
        let mut remaining = demands[k].2;

        // First absorb the open one-edge line into two-edge lines with k.
        if let Some(bar) = open {
            let a = single[bar].min(remaining);
            single[bar] -= a;
            pair[k][bar] += a;
            remaining -= a;
            if single[bar] == 0 {
                open = None;
            }
        }

        // Split existing two-edge lines (i, j) into (k, i) and (k, j).
        'pairs: for i in (1..k).rev() {
            for j in (0..i).rev() {
                if remaining <= 1 {
                    break 'pairs;
                }
                let b = pair[i][j].min(remaining / 2);
                if b == 0 {
                    continue;
                }
                pair[i][j] -= b;
                pair[k][i] += b;
                pair[k][j] += b;
                remaining -= 2 * b;
            }
        }

        if remaining > 0 {
            single[k] = remaining;
            open = Some(k);
        }
    }

    let mut entries = Vec::new();
    for (k, &(leaf, ..)) in demands.iter().enumerate() {
        if single[k] > 0 {
            entries.push((Line::new([center, leaf])?, single[k]));
        }
        for j in 0..k {
            if pair[k][j] > 0 {
                entries.push((Line::new([demands[j].0, center, leaf])?, pair[k][j]));
            }
        }
    }
    Ok(LineConcept::new(entries))
}

/// Certifies optimality of a concept on a star with `dfix = 0`.
///
/// Requires a feasible concept whose edge totals all equal fmin; anything
/// else is an [`Error::InfeasibleInput`]. Conditions are checked in order
/// and the first match is returned.
pub fn optimality_condition(
    instance: &Instance,
    concept: &LineConcept,
) -> Result<OptimalityCondition> {
    let view = star_view(instance)?;
    let totals = instance.total_frequency(concept)?;
    for (e, &total) in totals.iter().enumerate() {
        if total != instance.fmin(e) {
            return Err(Error::InfeasibleInput(format!(
                "edge {e} has total {total}, demand {}",
                instance.fmin(e)
            )));
        }
    }
    if concept.entries().iter().any(|(l, _)| l.is_zero_edge()) {
        return Err(Error::InfeasibleInput("zero-edge line in concept".into()));
    }

    let one_edge: Vec<u64> = concept
        .entries()
        .iter()
        .filter(|(l, _)| l.edge_count() == 1)
        .map(|&(_, f)| f)
        .collect();
    if one_edge.is_empty() {
        return Ok(OptimalityCondition::NoOneEdgeLine);
    }
    if one_edge.len() == 1 && one_edge[0] == 1 {
        return Ok(OptimalityCondition::OneOneEdgeLineFreqOne);
    }

    let demand_sum: u64 = view.demands.iter().map(|&(.., f)| f).sum();
    let dominant = view
        .demands
        .iter()
        .any(|&(.., fmin)| fmin > demand_sum - fmin && concept.total_line_frequency() == fmin);
    if dominant {
        return Ok(OptimalityCondition::DominantEdge);
    }
    Ok(OptimalityCondition::None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Cost;
    use crate::graph::Graph;
    use crate::instance::{EdgeData, MaxFrequency};

    fn star_instance(fmins: &[u64], cfix: u64) -> Instance {
        Instance::new(
            Graph::star(fmins.len()),
            Cost::ZERO,
            Cost::from_int(cfix),
            fmins.iter().map(|&fmin| EdgeData {
                cost: Cost::ZERO,
                fmin,
                fmax: MaxFrequency::Infinite,
            }),
        )
        .unwrap()
    }

    fn check_exact_cover(instance: &Instance, concept: &LineConcept) {
        let totals = instance.total_frequency(concept).unwrap();
        for (e, &t) in totals.iter().enumerate() {
            assert_eq!(t, instance.fmin(e), "edge {e}");
        }
        assert!(concept.one_edge_line_count() <= 1);
    }

    #[test]
    fn balanced_star_needs_no_one_edge_lines() {
        let inst = star_instance(&[5, 3, 4, 2], 1);
        let concept = solve_star(&inst).unwrap();
        check_exact_cover(&inst, &concept);
        assert_eq!(concept.total_line_frequency(), 7);
        assert_eq!(concept.one_edge_line_count(), 0);
        assert_eq!(
            optimality_condition(&inst, &concept).unwrap(),
            OptimalityCondition::NoOneEdgeLine
        );
    }

    #[test]
    fn dominant_edge_forces_one_edge_lines() {
        let inst = star_instance(&[7, 2, 1], 1);
        let concept = solve_star(&inst).unwrap();
        check_exact_cover(&inst, &concept);
        assert_eq!(concept.total_line_frequency(), 7);
        assert_eq!(
            optimality_condition(&inst, &concept).unwrap(),
            OptimalityCondition::DominantEdge
        );
    }

    #[test]
    fn odd_total_leaves_single_unit_line() {
        let inst = star_instance(&[3, 2], 1);
        let concept = solve_star(&inst).unwrap();
        check_exact_cover(&inst, &concept);
        assert_eq!(concept.total_line_frequency(), 3);
        assert_eq!(
            optimality_condition(&inst, &concept).unwrap(),
            OptimalityCondition::OneOneEdgeLineFreqOne
        );
    }

    #[test]
    fn zero_demand_edges_are_dropped() {
        let inst = star_instance(&[0, 4, 0, 4], 1);
        let concept = solve_star(&inst).unwrap();
        check_exact_cover(&inst, &concept);
        assert_eq!(concept.one_edge_line_count(), 0);
        assert_eq!(concept.total_line_frequency(), 4);
    }

    #[test]
    fn all_zero_demand_is_empty() {
        let inst = star_instance(&[0, 0], 1);
        let concept = solve_star(&inst).unwrap();
        assert!(concept.is_empty());
    }

    #[test]
    fn single_edge_star() {
        let inst = star_instance(&[4], 1);
        let concept = solve_star(&inst).unwrap();
        check_exact_cover(&inst, &concept);
        assert_eq!(concept.one_edge_line_count(), 1);
        assert_eq!(
            optimality_condition(&inst, &concept).unwrap(),
            OptimalityCondition::DominantEdge
        );
    }

    #[test]
    fn rejects_nonzero_dfix_and_non_stars() {
        let star = Graph::star(2);
        let inst = Instance::uniform(
            star,
            Cost::from_int(1),
            Cost::ZERO,
            EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Infinite },
        );
        assert!(matches!(solve_star(&inst), Err(Error::NonzeroDfix(_))));

        let path = Instance::uniform(
            Graph::path(4),
            Cost::ZERO,
            Cost::ZERO,
            EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Infinite },
        );
        assert!(matches!(solve_star(&path), Err(Error::NotAStar(_))));
    }

    #[test]
    fn optimality_check_requires_exact_totals() {
        let inst = star_instance(&[2, 2], 1);
        let loose = LineConcept::new([(Line::new([1, 0, 2]).unwrap(), 3)]);
        assert!(matches!(
            optimality_condition(&inst, &loose),
            Err(Error::InfeasibleInput(_))
        ));
    }
}
