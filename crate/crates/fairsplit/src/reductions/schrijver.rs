//! The link from fair independent sets to monochromatic edges among stable
//! subsets: trim every part to odd size, relabel the survivors along the
//! cycle, and color each stable subset by the first part quota it overflows.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::oracles::{ColoringOracle, RelabelContext};
use crate::partition::CyclePartitionInstance;
use crate::problems::{IndependentSetSolution, SchrijverInstance};
use crate::sign::StableKSubset;

/// Builds the quota-colored stable-subset instance. Each even-sized part
/// loses its highest-indexed vertex, the kept vertices are relabeled `1..n'`
/// in ascending order, and part `i` gets quota `r_i = (|V'_i| - 1) / 2`.
/// With `k` the quota total, the output lives on `n' = 2k + m` vertices and
/// its coloring `c(S) = ` the smallest part whose pullback count exceeds its
/// quota, else `m + 1`, uses exactly the legal palette `[m + 1]`.
///
/// When every part keeps a single vertex (`k = 0`) there is nothing to
/// search for and the empty set already treats every part fairly; that case
/// is reported as a degenerate error so pipelines can short-circuit.
pub fn fisc_to_schrijver(
    inst: &CyclePartitionInstance,
) -> Result<(SchrijverInstance, RelabelContext)> {
    let m = inst.m();
    let mut removed_vertices = vec![None; m];
    let mut r = vec![0usize; m];
    for (i, part) in inst.parts().iter().enumerate() {
        let mut kept = part.len();
        if kept % 2 == 0 {
            removed_vertices[i] = part.last().copied();
            kept -= 1;
        }
        r[i] = (kept - 1) / 2;
    }
    let k: usize = r.iter().sum();
    if k == 0 {
        return Err(Error::Degenerate(format!(
            "every one of the {m} parts has size at most 2, so the empty set \
             is already fair and the quota coloring has nothing to find"
        )));
    }
    let removed: BTreeSet<usize> = removed_vertices.iter().flatten().copied().collect();
    let new_to_old: Vec<usize> = (1..=inst.n()).filter(|v| !removed.contains(v)).collect();
    let context = RelabelContext {
        removed_vertices,
        new_to_old,
        r,
        k,
    };
    let oracle = ColoringOracle::schrijver_from_fisc(inst.clone(), context.clone())?;
    Ok((SchrijverInstance::new(2 * k + m, k, oracle)?, context))
}

/// Pulls a monochromatic edge back through the relabeling. Two disjoint
/// subsets cannot both exceed a quota `r_i` inside a kept part of size
/// `2 r_i + 1`, so the common color must be `m + 1`; that in turn pins both
/// pullbacks to exactly `r_i` vertices per part, making either endpoint a
/// fair independent set of the source cycle. The first endpoint is returned.
pub fn schrijver_backmap_to_fisc(
    inst: &SchrijverInstance,
    context: &RelabelContext,
    s1: &StableKSubset,
    s2: &StableKSubset,
) -> Result<IndependentSetSolution> {
    let m = context.r.len();
    if inst.n() != 2 * context.k + m || context.new_to_old.len() != inst.n() {
        return Err(Error::usage(format!(
            "relabel context describes {} kept vertices with k={}, m={m}; \
             instance has n={}",
            context.new_to_old.len(),
            context.k,
            inst.n()
        )));
    }
    if !s1.is_disjoint_from(s2) {
        return Err(Error::usage(format!(
            "{s1} and {s2} share a vertex, so they form no edge"
        )));
    }
    let c1 = inst.color_of(s1)?;
    let c2 = inst.color_of(s2)?;
    if c1 != c2 {
        return Err(Error::usage(format!(
            "colors differ ({c1} vs {c2}); not a monochromatic edge"
        )));
    }
    if c1 != m + 1 {
        return Err(Error::inconsistent(format!(
            "disjoint subsets share color {c1}, yet a part of size 2r+1 \
             cannot let both exceed its quota"
        )));
    }
    Ok(IndependentSetSolution::new(
        s1.elements().iter().map(|&v| context.new_to_old[v - 1]),
    ))
}
