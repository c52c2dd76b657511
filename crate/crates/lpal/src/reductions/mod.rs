//! Constructions that translate between number partitioning problems and
//! line planning instances, plus transformations that reshape instances
//! while preserving their answers.
//!
//! * [`ThreePartitionInstance::to_path_instance`] turns a 3-partition
//!   question into a decision question on a path network.
//! * [`PmppInstance`] (pairwise merge into `K` pairs) maps to a star
//!   network, and [`pmpp_solution_to_concept`] turns a pairing back into a
//!   cheap line concept.
//! * [`PlscInstance`] (partial Latin square completion) maps to a merge
//!   problem over its row, column, and cell symbols.
//! * [`lift_fmax`] removes the upper frequency bounds of a fixed-frequency
//!   instance at the price of edge costs.
//! * [`instance_product`] composes two instances, substituting one into
//!   every unit-demand edge of the other.

mod latin_square;
mod pmpp;
mod product;
mod three_partition;

pub use latin_square::{PlscCell, PlscInstance};
pub use pmpp::{brute_force_pmpp, pmpp_solution_to_concept, PmppInstance, PmppSolution};
pub use product::{find_antennae, instance_product, Antenna};
pub use three_partition::{ThreePartitionInstance, ThreePartitionSolution};

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::instance::{Instance, MaxFrequency};

/// Replaces every upper frequency bound of a fixed-frequency instance with
/// infinity, compensating through edge costs: with every edge priced at
/// `budget + 1`, exceeding any demand immediately overshoots the returned
/// budget, so feasibility within it is unchanged.
///
/// Requires `cfix = 0`, zero edge costs, and `fmin = fmax` everywhere.
/// Returns the relaxed instance together with the adjusted budget for a
/// decision question that previously used `budget`.
pub fn lift_fmax(instance: &Instance, budget: Cost) -> Result<(Instance, Cost)> {
    if !instance.cfix().is_zero() {
        return Err(Error::HypothesisViolated(format!(
            "lifting needs cfix = 0, got {}",
            instance.cfix()
        )));
    }
    let mut demand_sum = 0u64;
    for e in 0..instance.graph().edge_count() {
        if !instance.edge_cost(e).is_zero() {
            return Err(Error::HypothesisViolated(format!(
                "lifting needs zero edge costs, edge {e} costs {}",
                instance.edge_cost(e)
            )));
        }
        if instance.fmax(e) != MaxFrequency::Finite(instance.fmin(e)) {
            return Err(Error::HypothesisViolated(format!(
                "lifting needs fmin = fmax, edge {e} has fmin {} fmax {}",
                instance.fmin(e),
                instance.fmax(e)
            )));
        }
        demand_sum += instance.fmin(e);
    }
    let edge_cost = budget + Cost::from_int(1);
    let lifted = Instance::new(
        instance.graph().clone(),
        instance.dfix(),
        instance.cfix(),
        (0..instance.graph().edge_count()).map(|e| crate::instance::EdgeData {
            cost: edge_cost,
            fmin: instance.fmin(e),
            fmax: MaxFrequency::Infinite,
        }),
    )?;
    let lifted_budget = budget + edge_cost * demand_sum;
    Ok((lifted, lifted_budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::instance::EdgeData;

    #[test]
    fn lifting_prices_demand_into_budget() {
        // The path instance of the worked 3-partition example: 6 numbers,
        // budget 6, demands summing to 98.
        let reduction = ThreePartitionInstance::new([1, 2, 2, 4, 5, 6], 2)
            .unwrap()
            .to_path_instance()
            .unwrap();
        let inst = &reduction.instance;
        let demand_sum: u64 = (0..inst.graph().edge_count()).map(|e| inst.fmin(e)).sum();
        assert_eq!(demand_sum, 98);
        let (lifted, budget) = lift_fmax(inst, Cost::from_int(6)).unwrap();
        assert_eq!(budget, Cost::from_int(692));
        assert!(lifted.fmax(0) == MaxFrequency::Infinite);
        assert_eq!(lifted.edge_cost(3), Cost::from_int(7));
        assert_eq!(lifted.fmin(2), inst.fmin(2));
    }

    #[test]
    fn lifting_rejects_loose_bounds_and_costs() {
        let loose = Instance::uniform(
            Graph::path(2),
            Cost::from_int(1),
            Cost::ZERO,
            EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Finite(2) },
        );
        assert!(matches!(lift_fmax(&loose, Cost::ZERO), Err(Error::HypothesisViolated(_))));

        let priced = Instance::uniform(
            Graph::path(2),
            Cost::from_int(1),
            Cost::ZERO,
            EdgeData { cost: Cost::from_int(1), fmin: 1, fmax: MaxFrequency::Finite(1) },
        );
        assert!(matches!(lift_fmax(&priced, Cost::ZERO), Err(Error::HypothesisViolated(_))));

        let charged = Instance::uniform(
            Graph::path(2),
            Cost::from_int(1),
            Cost::from_int(1),
            EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Finite(1) },
        );
        assert!(matches!(lift_fmax(&charged, Cost::ZERO), Err(Error::HypothesisViolated(_))));
    }
}
