//! Reductions between the path split, cycle split, and fair independent set
//! problems. These are the combinatorially light links of the chain: a wrap
//! edge, a successor shift, and a single parity-repair vertex.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::{CyclePartitionInstance, PathPartitionInstance};
use crate::problems::{verify_fisc, IndependentSetSolution, SplitSolution};

fn require_odd_parts(inst: &PathPartitionInstance) -> Result<()> {
    if let Some((i, size)) = inst
        .part_sizes()
        .iter()
        .enumerate()
        .find(|(_, &s)| s % 2 == 0)
        .map(|(i, &s)| (i + 1, s))
    {
        return Err(Error::instance(format!(
            "part {i} has even size {size}; the path problem needs odd parts"
        )));
    }
    Ok(())
}

/// Closes the path into a cycle, keeping vertices and parts. A fair
/// independent set of the cycle is one of the path a fortiori.
pub fn fsplitp_to_fisc(inst: &PathPartitionInstance) -> Result<CyclePartitionInstance> {
    require_odd_parts(inst)?;
    Ok(inst.close_into_cycle())
}

/// Pulls a fair independent set of the wrapped cycle back to a split of the
/// path: trim the set to exactly `(|V_i| - 1) / 2` vertices per part
/// (dropping the highest-indexed surplus) and pair every kept vertex with its
/// clockwise successor.
pub fn fisc_backmap_to_fsplitp(
    inst: &PathPartitionInstance,
    sol: &IndependentSetSolution,
) -> Result<SplitSolution> {
    let cycle = fsplitp_to_fisc(inst)?;
    if !verify_fisc(&cycle, sol)? {
        return Err(Error::usage(
            "solution does not verify as a fair independent set on the wrapped cycle",
        ));
    }
    let n = inst.n();
    let mut keep: BTreeSet<usize> = BTreeSet::new();
    for (i, part) in inst.parts().iter().enumerate() {
        let target = (part.len() - 1) / 2;
        // Parts are sorted ascending, so taking the first `target` hits
        // drops the highest-indexed surplus.
        keep.extend(
            part.iter()
                .copied()
                .filter(|&v| sol.contains(v))
                .take(target),
        );
        debug_assert!(
            keep.iter().filter(|&&v| inst.part_of(v).unwrap() == i + 1).count() == target,
            "fairness guarantees at least (|V_i| - 1)/2 solution vertices per part"
        );
    }
    let successors: BTreeSet<usize> = keep.iter().map(|&v| v % n + 1).collect();
    Ok(SplitSolution {
        s1: keep,
        s2: successors,
    })
}

/// Repairs the parity mismatch between vertex and part counts by inserting
/// one vertex, numbered `n + 1` (between `n` and `1` on the cycle), into the
/// lowest-indexed even-sized part. Returns the repaired instance and the
/// inserted vertex, `None` when the parities already agree.
pub fn fisc_to_fsplitc(
    inst: &CyclePartitionInstance,
) -> Result<(CyclePartitionInstance, Option<usize>)> {
    let n = inst.n();
    let m = inst.m();
    if n % 2 == m % 2 {
        return Ok((inst.clone(), None));
    }
    let mut parts = inst.parts();
    let grown = parts
        .iter()
        .position(|p| p.len() % 2 == 0)
        .ok_or_else(|| {
            // All-odd part sizes force n = m (mod 2), so this branch would
            // contradict the parity test above.
            Error::inconsistent("parities differ yet every part is odd-sized")
        })?;
    parts[grown].push(n + 1);
    Ok((
        CyclePartitionInstance::from_parts(n + 1, &parts)?,
        Some(n + 1),
    ))
}

/// Pulls a parity-exact split back to a fair independent set of the original
/// cycle. The added vertex sits between `n` and `1`, so any set holding both
/// of its neighbors stops being independent once the wrap edge returns; at
/// least one of the two disjoint sets is safe, and that one is returned,
/// restricted to the original vertices.
pub fn fsplitc_backmap_to_fisc(
    added_vertex: Option<usize>,
    sol: &SplitSolution,
) -> Result<IndependentSetSolution> {
    let Some(added) = added_vertex else {
        return Ok(IndependentSetSolution {
            vertices: sol.s1.clone(),
        });
    };
    if added < 2 {
        return Err(Error::usage(format!(
            "added vertex {added} cannot be the repair vertex of any cycle"
        )));
    }
    let (lo, hi) = (1, added - 1);
    let safe = |s: &BTreeSet<usize>| !(s.contains(&lo) && s.contains(&hi));
    let chosen = if safe(&sol.s1) {
        &sol.s1
    } else if safe(&sol.s2) {
        &sol.s2
    } else {
        // Disjoint sets cannot both contain the same two vertices.
        return Err(Error::inconsistent(format!(
            "both sets contain vertices {lo} and {hi}, impossible for disjoint sets"
        )));
    };
    Ok(IndependentSetSolution {
        vertices: chosen.iter().copied().filter(|&v| v != added).collect(),
    })
}

/// Closes the path into a cycle; the same wrap as `fsplitp_to_fisc`, exposed
/// separately because the target problem differs (a split with bands on both
/// sets rather than a single fair set).
pub fn fsplitp_to_fsplitc(inst: &PathPartitionInstance) -> Result<CyclePartitionInstance> {
    require_odd_parts(inst)?;
    Ok(inst.close_into_cycle())
}

/// A split of the wrapped cycle is verbatim a split of the path: cycle
/// independence is stronger, the coverage requirement is stronger (exactly
/// one uncovered per part means at most `m` uncovered in total), and the
/// band on the first set follows from its cycle-side band.
pub fn fsplitc_backmap_to_fsplitp(sol: &SplitSolution) -> SplitSolution {
    sol.clone()
}
