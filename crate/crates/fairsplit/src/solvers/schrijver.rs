//! Monochromatic-edge search in colored Schrijver graphs, plus an exact
//! chromatic-number solver used to check the headline count independently.

use super::{check_bound, SolverLimits, SolverReport};
use crate::error::{Error, Result};
use crate::problems::{verify_schrijver, SchrijverInstance};
use crate::sign::{count_stable_k_subsets, enumerate_stable_k_subsets, StableKSubset};
use std::time::Instant;

/// Finds two disjoint stable `k`-subsets with the same color.
///
/// Subsets are enumerated in lexicographic order and bucketed by color; the
/// first hit against an earlier same-colored subset is returned, so the
/// result minimizes the later endpoint first, then the earlier one. The
/// palette has `n - 2k + 1` colors while the graph needs `n - 2k + 2`, so a
/// coloring that never produces such an edge has broken its contract; after
/// exhausting all pairs that is reported as an oracle violation.
pub fn brute_schrijver(
    inst: &SchrijverInstance,
    limits: &SolverLimits,
) -> Result<SolverReport<(StableKSubset, StableKSubset)>> {
    let n = inst.n();
    let k = inst.k();
    let total = count_stable_k_subsets(n, k)?;
    check_bound("stable subset count", total, limits.schrijver_max_subsets)?;
    let start = Instant::now();
    let subsets = enumerate_stable_k_subsets(n, k)?;
    let masks: Option<Vec<u128>> = (n <= 128).then(|| {
        subsets
            .iter()
            .map(|s| s.elements().iter().fold(0u128, |acc, &v| acc | 1 << (v - 1)))
            .collect()
    });
    let mut nodes = 0u64;
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); inst.palette()];
    for (idx, s) in subsets.iter().enumerate() {
        nodes += 1;
        let color = inst.color_of(s)?;
        for &earlier in &buckets[color - 1] {
            nodes += 1;
            let disjoint = match &masks {
                Some(ms) => ms[earlier] & ms[idx] == 0,
                None => subsets[earlier].is_disjoint_from(s),
            };
            if disjoint {
                let pair = (subsets[earlier].clone(), s.clone());
                if !verify_schrijver(inst, &pair.0, &pair.1)? {
                    return Err(Error::inconsistent(format!(
                        "search accepted ({}, {}) but the verifier rejects it",
                        pair.0, pair.1
                    )));
                }
                return Ok(SolverReport {
                    solution: pair,
                    nodes_explored: nodes,
                    elapsed: start.elapsed(),
                });
            }
        }
        buckets[color - 1].push(idx);
    }
    Err(Error::oracle(
        format!("coloring of S({n},{k})"),
        format!(
            "no monochromatic edge among {total} stable subsets; \
             the graph needs {} colors but the palette offers {}, \
             so a within-palette coloring must create one",
            n - 2 * k + 2,
            inst.palette()
        ),
    ))
}

/// Exact chromatic number of the Schrijver graph `S(n,k)` by iterated
/// branch-and-bound colorability checks. Independent of the quota-coloring
/// machinery; used to confirm that the value is `n - 2k + 2`.
pub fn chromatic_number(n: usize, k: usize, limits: &SolverLimits) -> Result<SolverReport<usize>> {
    let verts = enumerate_stable_k_subsets(n, k)?;
    check_bound("stable subset count", verts.len(), limits.chromatic_max_vertices)?;
    // Color sets live in u128 words; the default cap of 60 vertices sits far
    // below this, but a raised limit must not overflow silently.
    check_bound("chromatic bitset width", verts.len(), 128)?;
    let start = Instant::now();
    let v = verts.len();
    let mut adj = vec![0u128; v];
    for i in 0..v {
        for j in i + 1..v {
            if verts[i].is_disjoint_from(&verts[j]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(adj[i].count_ones()));

    // Greedy clique for the lower bound.
    let mut clique: u128 = 0;
    for &i in &order {
        if adj[i] & clique == clique {
            clique |= 1 << i;
        }
    }
    let lower = clique.count_ones() as usize;
    // Greedy sequential coloring for the upper bound.
    let mut greedy = vec![0usize; v];
    let mut upper = 0;
    for &i in &order {
        let mut used: u128 = 0;
        for j in 0..v {
            if adj[i] >> j & 1 == 1 && greedy[j] > 0 {
                used |= 1 << (greedy[j] - 1);
            }
        }
        let c = used.trailing_ones() as usize + 1;
        greedy[i] = c;
        upper = upper.max(c);
    }

    let mut nodes = 0u64;
    let mut answer = upper;
    for target in lower.max(1)..upper {
        if colorable(&adj, target, &mut nodes) {
            answer = target;
            break;
        }
    }
    Ok(SolverReport {
        solution: answer,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Complete backtracking check for a proper `target`-coloring, choosing the
/// most saturated vertex first and treating unused colors as interchangeable.
fn colorable(adj: &[u128], target: usize, nodes: &mut u64) -> bool {
    let v = adj.len();
    let mut colors = vec![0usize; v];
    rec(adj, target, &mut colors, 0, nodes)
}

fn rec(adj: &[u128], target: usize, colors: &mut [usize], used: usize, nodes: &mut u64) -> bool {
    *nodes += 1;
    let v = adj.len();
    // Most saturated uncolored vertex, degree as the tie-break.
    let mut pick = None;
    let mut pick_key = (0usize, 0u32);
    for i in 0..v {
        if colors[i] > 0 {
            continue;
        }
        let mut seen: u128 = 0;
        for j in 0..v {
            if adj[i] >> j & 1 == 1 && colors[j] > 0 {
                seen |= 1 << (colors[j] - 1);
            }
        }
        let key = (seen.count_ones() as usize, adj[i].count_ones());
        if pick.is_none() || key > pick_key {
            pick = Some((i, seen));
            pick_key = key;
        }
    }
    let Some((i, seen)) = pick else {
        return true;
    };
    let fresh_allowed = used < target;
    for c in 1..=used.min(target) {
        if seen >> (c - 1) & 1 == 0 {
            colors[i] = c;
            if rec(adj, target, colors, used, nodes) {
                return true;
            }
            colors[i] = 0;
        }
    }
    if fresh_allowed {
        colors[i] = used + 1;
        if rec(adj, target, colors, used + 1, nodes) {
            return true;
        }
        colors[i] = 0;
    }
    false
}
