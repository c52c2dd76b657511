//! 3-partition as a line planning question on a path.

use crate::concept::{Line, LineConcept};
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{EdgeData, Instance, MaxFrequency};

/// A 3-partition question: split `3p` positive integers into `p` triples,
/// each summing to the same target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    numbers: Vec<u64>,
    p: usize,
}

/// A partition into triples, given as indices into the number list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePartitionSolution {
    pub triples: Vec<[usize; 3]>,
}

/// The path instance a 3-partition question maps to: the question has a
/// solution exactly when a feasible concept of cost at most `budget` exists.
#[derive(Debug, Clone, PartialEq)]
pub struct PathReduction {
    pub instance: Instance,
    pub budget: Cost,
}

impl ThreePartitionInstance {
    pub fn new(numbers: impl Into<Vec<u64>>, p: usize) -> Result<Self> {
        let numbers = numbers.into();
        if p == 0 || numbers.len() != 3 * p {
            return Err(Error::InvalidInstance(format!(
                "need 3p = {} numbers for p = {p}, got {}",
                3 * p,
                numbers.len()
            )));
        }
        if numbers.contains(&0) {
            return Err(Error::InvalidInstance("numbers must be positive".into()));
        }
        Ok(Self { numbers, p })
    }

    pub fn numbers(&self) -> &[u64] {
        &self.numbers
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// The common triple sum `h`; the total must divide evenly.
    pub fn target(&self) -> Result<u64> {
        let sum: u64 = self.numbers.iter().sum();
        if sum % self.p as u64 != 0 {
            return Err(Error::NotDivisible { sum, divisor: self.p as u64 });
        }
        Ok(sum / self.p as u64)
    }

    /// Whether every subset summing to the target has exactly three
    /// elements. The path reduction decides 3-partition exactly on
    /// instances with this property; without it a cheap concept may group
    /// the numbers into non-triples.
    pub fn target_subsets_are_triples(&self) -> Result<bool> {
        let h = self.target()?;
        let n = self.numbers.len();
        if n > 24 {
            return Err(Error::TooLarge(format!("{n} numbers; subset scan supports up to 24")));
        }
        for mask in 1u32..1 << n {
            let sum: u64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.numbers[i]).sum();
            if sum == h && mask.count_ones() != 3 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Builds the path instance. On a path of `4p` vertices, `p` feeder
    /// edges inject `h` units each and the remaining edges step the demand
    /// down by one number at a time, so a concept with only `3p` lines must
    /// start one line per number at a feeder chosen by its triple.
    pub fn to_path_instance(&self) -> Result<PathReduction> {
        let h = self.target()?;
        let p = self.p;
        let n = 4 * p;
        let mut demands = Vec::with_capacity(n - 1);
        let mut prefix = 0u64;
        for v in 0..n - 1 {
            if v < p {
                prefix += h;
            } else {
                prefix -= self.numbers[v - p];
            }
            demands.push(prefix);
        }
        let instance = Instance::new(
            Graph::path(n),
            Cost::from_int(1),
            Cost::ZERO,
            demands.into_iter().map(|d| EdgeData {
                cost: Cost::ZERO,
                fmin: d,
                fmax: MaxFrequency::Finite(d),
            }),
        )?;
        Ok(PathReduction { instance, budget: Cost::from_int(3 * p as u64) })
    }

    /// Turns a partition into a concept of `3p` lines on the path instance:
    /// the line for number `i` in triple `k` runs from feeder vertex
    /// `p - 1 - k` to vertex `p + i` with frequency `x_i`.
    pub fn solution_to_concept(&self, solution: &ThreePartitionSolution) -> Result<LineConcept> {
        let h = self.target()?;
        if solution.triples.len() != self.p {
            return Err(Error::BadPartition(format!(
                "expected {} triples, got {}",
                self.p,
                solution.triples.len()
            )));
        }
        let mut seen = vec![false; self.numbers.len()];
        for triple in &solution.triples {
            let mut sum = 0u64;
            for &i in triple {
                if i >= self.numbers.len() || seen[i] {
                    return Err(Error::BadPartition(format!("index {i} out of range or repeated")));
                }
                seen[i] = true;
                sum += self.numbers[i];
            }
            if sum != h {
                return Err(Error::BadPartition(format!("triple sums to {sum}, target is {h}")));
            }
        }

        let p = self.p;
        let mut entries = Vec::with_capacity(3 * p);
        for (k, triple) in solution.triples.iter().enumerate() {
            for &i in triple {
                let path: Vec<usize> = (p - 1 - k..=p + i).collect();
                entries.push((Line::new(path)?, self.numbers[i]));
            }
        }
        Ok(LineConcept::new(entries))
    }

    /// Exhaustive search over all partitions into triples.
    pub fn brute_force(&self) -> Result<Option<ThreePartitionSolution>> {
        if self.numbers.len() > 15 {
            return Err(Error::TooLarge(format!(
                "{} numbers; exhaustive partitioning supports up to 15",
                self.numbers.len()
            )));
        }
        let h = match self.target() {
            Ok(h) => h,
            Err(Error::NotDivisible { .. }) => return Ok(None),
            Err(e) => return Err(e),
        };
        let mut used = vec![false; self.numbers.len()];
        let mut triples = Vec::with_capacity(self.p);
        if self.search(h, &mut used, &mut triples) {
            Ok(Some(ThreePartitionSolution { triples }))
        } else {
            Ok(None)
        }
    }

    fn search(&self, h: u64, used: &mut [bool], triples: &mut Vec<[usize; 3]>) -> bool {
        let Some(first) = used.iter().position(|&u| !u) else { return true };
        used[first] = true;
        for second in first + 1..self.numbers.len() {
            if used[second] || self.numbers[first] + self.numbers[second] >= h {
                continue;
            }
            used[second] = true;
            for third in second + 1..self.numbers.len() {
                if used[third]
                    || self.numbers[first] + self.numbers[second] + self.numbers[third] != h
                {
                    continue;
                }
                used[third] = true;
                triples.push([first, second, third]);
                if self.search(h, used, triples) {
                    return true;
                }
                triples.pop();
                used[third] = false;
            }
            used[second] = false;
        }
        used[first] = false;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_example() -> ThreePartitionInstance {
        ThreePartitionInstance::new([1, 2, 2, 4, 5, 6], 2).unwrap()
    }

    #[test]
    fn path_demands_step_down_by_number() {
        let red = worked_example().to_path_instance().unwrap();
        let inst = &red.instance;
        assert_eq!(inst.graph().vertex_count(), 8);
        let demands: Vec<u64> = (0..7).map(|e| inst.fmin(e)).collect();
        assert_eq!(demands, vec![10, 20, 19, 17, 15, 11, 6]);
        assert_eq!(red.budget, Cost::from_int(6));
        assert_eq!(inst.dfix(), Cost::from_int(1));
        assert!(inst.cfix().is_zero());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            ThreePartitionInstance::new([1, 2, 3], 2),
            Err(Error::InvalidInstance(_))
        ));
        assert!(matches!(
            ThreePartitionInstance::new([1, 0, 3], 1),
            Err(Error::InvalidInstance(_))
        ));
        let odd = ThreePartitionInstance::new([1, 1, 1, 1, 1, 2], 2).unwrap();
        assert!(matches!(odd.target(), Err(Error::NotDivisible { sum: 7, divisor: 2 })));
        assert_eq!(odd.brute_force().unwrap(), None);
    }

    #[test]
    fn partition_maps_to_six_cheap_lines() {
        let inst = worked_example();
        let solution = ThreePartitionSolution { triples: vec![[1, 2, 5], [0, 3, 4]] };
        let concept = inst.solution_to_concept(&solution).unwrap();
        let red = inst.to_path_instance().unwrap();
        assert_eq!(concept.line_count(), 6);
        assert!(red.instance.is_feasible(&concept).unwrap().is_feasible());
        assert_eq!(red.instance.concept_cost(&concept).unwrap(), red.budget);

        let freqs: Vec<u64> = concept.entries().iter().map(|(_, f)| *f).collect();
        let mut sorted = freqs.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 2, 4, 5, 6]);
    }

    #[test]
    fn rejects_wrong_partitions() {
        let inst = worked_example();
        let unbalanced = ThreePartitionSolution { triples: vec![[0, 1, 2], [3, 4, 5]] };
        assert!(matches!(inst.solution_to_concept(&unbalanced), Err(Error::BadPartition(_))));
        let repeated = ThreePartitionSolution { triples: vec![[1, 2, 5], [0, 3, 3]] };
        assert!(matches!(inst.solution_to_concept(&repeated), Err(Error::BadPartition(_))));
    }

    #[test]
    fn brute_force_finds_the_partition() {
        let found = worked_example().brute_force().unwrap().unwrap();
        let concept = worked_example().solution_to_concept(&found).unwrap();
        assert_eq!(concept.line_count(), 6);

        let no = ThreePartitionInstance::new([1, 1, 1, 1, 1, 5], 2).unwrap();
        assert_eq!(no.brute_force().unwrap(), None);
    }

    #[test]
    fn strictness_check_spots_non_triple_sums() {
        let strict = ThreePartitionInstance::new([3, 3, 4, 3, 3, 4], 2).unwrap();
        assert!(strict.target_subsets_are_triples().unwrap());
        // {4, 6} already reaches the worked example's target of 10.
        assert!(!worked_example().target_subsets_are_triples().unwrap());
        // {9, 3} and {1, 1, 1, 9} both reach the target of 12.
        let loose = ThreePartitionInstance::new([9, 3, 1, 1, 1, 9], 2).unwrap();
        assert!(!loose.target_subsets_are_triples().unwrap());
    }
}
