//! Merging numbers into equal-sum pairs, and the star instances deciding it.

use crate::concept::{Line, LineConcept};
use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{EdgeData, Instance, MaxFrequency};

/// Asks whether `k` pairwise disjoint pairs of subsets with equal sums can
/// be carved out of a multiset of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmppInstance {
    numbers: Vec<u64>,
    k: usize,
}

/// `k` disjoint pairs of index sets; the two sides of each pair sum to the
/// same value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmppSolution {
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
}

impl PmppInstance {
    pub fn new(numbers: impl Into<Vec<u64>>, k: usize) -> Result<Self> {
        let numbers = numbers.into();
        if numbers.contains(&0) {
            return Err(Error::InvalidInstance("numbers must be positive".into()));
        }
        if k > numbers.len() / 2 {
            return Err(Error::InvalidInstance(format!(
                "{k} pairs need at least {} numbers, got {}",
                2 * k,
                numbers.len()
            )));
        }
        Ok(Self { numbers, k })
    }

    pub fn numbers(&self) -> &[u64] {
        &self.numbers
    }

    pub fn pair_target(&self) -> usize {
        self.k
    }

    /// The star instance deciding this question: leaf `i` demands exactly
    /// `x_i`, each line costs `1`, and a concept with at most `m - k` lines
    /// exists exactly when `k` pairs can be merged.
    pub fn to_star_instance(&self) -> (Instance, Cost) {
        let m = self.numbers.len();
        let instance = Instance::new(
            Graph::star(m),
            Cost::from_int(1),
            Cost::ZERO,
            self.numbers.iter().map(|&x| EdgeData {
                cost: Cost::ZERO,
                fmin: x,
                fmax: MaxFrequency::Finite(x),
            }),
        )
        .expect("star instances are well formed");
        (instance, Cost::from_int((m - self.k) as u64))
    }
}

/// Turns a pairing into a concept on the star instance with `m - k` lines:
/// each pair merges its two sides end to end by repeatedly joining the
/// currently smallest remainders, and every unpaired number keeps its own
/// one-edge line.
pub fn pmpp_solution_to_concept(
    instance: &PmppInstance,
    solution: &PmppSolution,
) -> Result<LineConcept> {
    let numbers = instance.numbers();
    if solution.pairs.len() != instance.pair_target() {
        return Err(Error::InvalidSolution(format!(
            "expected {} pairs, got {}",
            instance.pair_target(),
            solution.pairs.len()
        )));
    }
    let mut used = vec![false; numbers.len()];
    for (a, b) in &solution.pairs {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidSolution("pair sides must be nonempty".into()));
        }
        let mut sums = [0u64; 2];
        for (side, sum) in [a, b].into_iter().zip(sums.iter_mut()) {
            for &i in side {
                if i >= numbers.len() || used[i] {
                    return Err(Error::InvalidSolution(format!(
                        "index {i} out of range or repeated"
                    )));
                }
                used[i] = true;
                *sum += numbers[i];
            }
        }
        if sums[0] != sums[1] {
            return Err(Error::InvalidSolution(format!(
                "pair sides sum to {} and {}",
                sums[0], sums[1]
            )));
        }
    }

    // Leaf for number i is vertex i + 1; the hub is vertex 0.
    let mut entries = Vec::new();
    for (a, b) in &solution.pairs {
        let mut left: Vec<(usize, u64)> = a.iter().map(|&i| (i, numbers[i])).collect();
        let mut right: Vec<(usize, u64)> = b.iter().map(|&i| (i, numbers[i])).collect();
        // Sorted descending by value, so the smallest remainder is last.
        for side in [&mut left, &mut right] {
            side.sort_by(|x, y| y.1.cmp(&x.1));
        }
        while let (Some(la), Some(rb)) = (left.last(), right.last()) {
            let (ia, va) = *la;
            let (ib, vb) = *rb;
            let f = va.min(vb);
            entries.push((Line::new([ia + 1, 0, ib + 1])?, f));
            // Sort descending by remainder so the smallest sits at the end.
            for side in [&mut left, &mut right] {
                side.last_mut().unwrap().1 -= f;
                if side.last().unwrap().1 == 0 {
                    side.pop();
                }
                side.sort_by(|x, y| y.1.cmp(&x.1));
            }
        }
        debug_assert!(left.is_empty() && right.is_empty(), "equal sums drain together");
    }
    for (i, &x) in numbers.iter().enumerate() {
        if !used[i] {
            entries.push((Line::new([0, i + 1])?, x));
        }
    }
    Ok(LineConcept::new(entries))
}

/// Exhaustive search for `k` disjoint equal-sum pairs; supports up to 12
/// numbers.
pub fn brute_force_pmpp(instance: &PmppInstance) -> Result<Option<PmppSolution>> {
    let numbers = instance.numbers();
    let m = numbers.len();
    if m > 12 {
        return Err(Error::TooLarge(format!("{m} numbers; exhaustive pairing supports up to 12")));
    }
    if instance.pair_target() == 0 {
        return Ok(Some(PmppSolution { pairs: Vec::new() }));
    }

    // A subset works as a pair when some proper sub-subset reaches half its
    // sum; record one such split per subset.
    let mut splittable: Vec<(u32, u32)> = Vec::new();
    for mask in 1u32..1 << m {
        let sum: u64 = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| numbers[i]).sum();
        if sum % 2 != 0 {
            continue;
        }
        if let Some(half) = subset_with_sum(numbers, mask, sum / 2) {
            splittable.push((mask, half));
        }
    }

    let mut chosen = Vec::with_capacity(instance.pair_target());
    if pick_disjoint(&splittable, 0, 0, instance.pair_target(), &mut chosen) {
        let pairs = chosen
            .iter()
            .map(|&(mask, half)| {
                let a = (0..m).filter(|i| half >> i & 1 == 1).collect();
                let b = (0..m).filter(|i| mask >> i & 1 == 1 && half >> i & 1 == 0).collect();
                (a, b)
            })
            .collect();
        Ok(Some(PmppSolution { pairs }))
    } else {
        Ok(None)
    }
}

fn subset_with_sum(numbers: &[u64], mask: u32, target: u64) -> Option<u32> {
    fn go(numbers: &[u64], mask: u32, i: usize, target: u64, acc: u32) -> Option<u32> {
        if target == 0 {
            return if acc == 0 { None } else { Some(acc) };
        }
        if i >= numbers.len() {
            return None;
        }
        if mask >> i & 1 == 1 && numbers[i] <= target {
            if let Some(found) = go(numbers, mask, i + 1, target - numbers[i], acc | 1 << i) {
                return Some(found);
            }
        }
        go(numbers, mask, i + 1, target, acc)
    }
    go(numbers, mask, 0, target, 0)
}

fn pick_disjoint(
    splittable: &[(u32, u32)],
    from: usize,
    taken: u32,
    left: usize,
    chosen: &mut Vec<(u32, u32)>,
) -> bool {
    if left == 0 {
        return true;
    }
    for i in from..splittable.len() {
        let (mask, half) = splittable[i];
        if mask & taken != 0 {
            continue;
        }
        chosen.push((mask, half));
        if pick_disjoint(splittable, i + 1, taken | mask, left - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
