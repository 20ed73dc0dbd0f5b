//! Exhaustive search for fair independent sets in partitioned cycles.

use super::{check_bound, SolverLimits, SolverReport};
use crate::error::{Error, Result};
use crate::partition::CyclePartitionInstance;
use crate::problems::{verify_fisc, IndependentSetSolution};
use std::time::Instant;

/// Finds the lexicographically smallest independent set whose intersection
/// with every part `V_i` has size at least `|V_i|/2 - 1`.
///
/// The search walks subsets of `1..=n` in preorder over sorted element lists
/// (so a set is visited before every proper extension), keeps independence by
/// construction, and returns at the first fairness hit; that visit order is
/// exactly lexicographic order, so the first hit is the smallest. A subtree
/// is skipped only when even taking every remaining vertex of some part
/// could not reach that part's quota, which never discards a fair extension.
pub fn brute_fisc(
    inst: &CyclePartitionInstance,
    limits: &SolverLimits,
) -> Result<SolverReport<IndependentSetSolution>> {
    check_bound("fisc cycle length", inst.n(), limits.fisc_max_n)?;
    let start = Instant::now();
    let n = inst.n();
    let m = inst.m();
    let part_of = inst.part_of_slice();
    // Fairness per part: 2*count + 2 >= size, i.e. count >= floor((size-1)/2).
    let needed: Vec<usize> = inst.part_sizes().iter().map(|&s| s.saturating_sub(1) / 2).collect();
    // suffix[i][v] = how many vertices of part i+1 lie in v..=n.
    let mut suffix = vec![vec![0usize; n + 2]; m];
    for v in (1..=n).rev() {
        for i in 0..m {
            suffix[i][v] = suffix[i][v + 1] + usize::from(part_of[v - 1] == i + 1);
        }
    }

    let mut search = Search {
        n,
        part_of,
        needed: &needed,
        suffix: &suffix,
        chosen: Vec::new(),
        in_set: vec![false; n + 1],
        counts: vec![0; m],
        nodes: 0,
    };
    let found = search.dfs(1);
    let nodes_explored = search.nodes;
    match found {
        Some(vertices) => {
            let solution = IndependentSetSolution::new(vertices);
            if !verify_fisc(inst, &solution)? {
                return Err(Error::inconsistent(format!(
                    "search accepted {solution:?} but the verifier rejects it"
                )));
            }
            Ok(SolverReport {
                solution,
                nodes_explored,
                elapsed: start.elapsed(),
            })
        }
        None => Err(Error::inconsistent(format!(
            "no fair independent set in {inst}, contradicting the existence guarantee",
        ))),
    }
}

struct Search<'a> {
    n: usize,
    part_of: &'a [usize],
    needed: &'a [usize],
    suffix: &'a [Vec<usize>],
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    counts: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    /// Visits the current set, then all extensions by vertices `>= next`.
    fn dfs(&mut self, next: usize) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.counts.iter().zip(self.needed).all(|(c, need)| c >= need) {
            return Some(self.chosen.clone());
        }
        // Even claiming every later vertex of a short part cannot help.
        for i in 0..self.counts.len() {
            if self.counts[i] + self.suffix[i][next.min(self.n + 1)] < self.needed[i] {
                return None;
            }
        }
        for v in next..=self.n {
            if self.blocked(v) {
                continue;
            }
            self.chosen.push(v);
            self.in_set[v] = true;
            let part = self.part_of[v - 1] - 1;
            self.counts[part] += 1;
            let hit = self.dfs(v + 1);
            self.counts[part] -= 1;
            self.in_set[v] = false;
            self.chosen.pop();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    /// Cycle adjacency against already-chosen (hence smaller) vertices.
    fn blocked(&self, v: usize) -> bool {
        (v > 1 && self.in_set[v - 1]) || (v == self.n && self.in_set[1])
    }
}
