//! Discretization of consensus halving into path splitting, and the
//! interpretation of a path split as cuts and labels on `[0,1]`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{ConHalvInstance, CutLabelSolution, PieceLabel};
use crate::partition::PathPartitionInstance;
use crate::problems::SplitSolution;
use crate::rational::Rational;

/// Everything the cut-and-label back-map needs to know about how a path was
/// carved out of `[0,1]`: the sub-interval mass, where each vertex sits,
/// which part it belongs to, and which part is the interleaving one.
///
/// Positions are nondecreasing along the path. Vertices flagged imperfect
/// stand for a sub-interval lighter than `delta`; parity and filler vertices
/// carry no mass of their own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscretizationContext {
    pub delta: Rational,
    pub positions: Vec<Rational>,
    pub part_of: Vec<usize>,
    pub imperfect_vertices: BTreeSet<usize>,
    pub parity_extra_vertices: BTreeSet<usize>,
    pub interleave_part_index: usize,
}

/// Discretizes each measure into sub-intervals of mass `delta`, one part per
/// measure with a vertex at each sub-interval midpoint, and threads an
/// interleaving part through the gaps so that the path strictly alternates
/// between measured and filler vertices.
///
/// `delta = eps / (4 (2p + m + 3))` where `p` bounds the block count of any
/// measure. Parts are padded to odd size: measured parts by one vertex at
/// position zero (ordered first), the filler part by one vertex at position
/// one (ordered last). Every part ends up with `|V_i| * delta` mass between
/// `1` and `1 + (p + 1) delta`, counting each vertex at `delta`.
pub fn conhalv_to_fsplitp(
    inst: &ConHalvInstance,
) -> Result<(PathPartitionInstance, DiscretizationContext)> {
    if !inst.eps().is_positive() {
        return Err(Error::usage(format!(
            "discretization needs eps > 0, got {}",
            inst.eps()
        )));
    }
    let m = inst.m();
    let p = inst.block_bound();
    let delta = inst.eps() / &Rational::from(4 * (2 * p + m + 3));

    struct Pre {
        position: Rational,
        part: usize,
        imperfect: bool,
        parity: bool,
    }
    let mut originals: Vec<Pre> = Vec::new();
    for (i, density) in inst.measures().iter().enumerate() {
        let subs = density.quantile_subdivide(&delta)?;
        let count = subs.len();
        for (mid, imperfect) in subs {
            originals.push(Pre {
                position: mid,
                part: i + 1,
                imperfect,
                parity: false,
            });
        }
        if count % 2 == 0 {
            originals.push(Pre {
                position: Rational::zero(),
                part: i + 1,
                imperfect: false,
                parity: true,
            });
        }
    }
    // Stable sort keeps creation order behind (position, part), so equal
    // positions resolve deterministically.
    originals.sort_by(|a, b| a.position.cmp(&b.position).then(a.part.cmp(&b.part)));

    let interleave_part = m + 1;
    let t = originals.len();
    let n = 2 * t + usize::from(t % 2 == 0);
    let half = Rational::new(1, 2).unwrap();
    let mut positions = Vec::with_capacity(n);
    let mut part_of = Vec::with_capacity(n);
    let mut imperfect_vertices = BTreeSet::new();
    let mut parity_extra_vertices = BTreeSet::new();
    for (j, o) in originals.iter().enumerate() {
        let gap_mid = if j == 0 {
            Rational::zero()
        } else {
            (&originals[j - 1].position + &o.position) * half.clone()
        };
        positions.push(gap_mid);
        part_of.push(interleave_part);
        positions.push(o.position.clone());
        part_of.push(o.part);
        let id = positions.len();
        if o.imperfect {
            imperfect_vertices.insert(id);
        }
        if o.parity {
            parity_extra_vertices.insert(id);
        }
    }
    if t % 2 == 0 {
        positions.push(Rational::one());
        part_of.push(interleave_part);
        parity_extra_vertices.insert(positions.len());
    }
    let path = PathPartitionInstance::from_part_of(part_of.clone())?;
    debug_assert!(path.all_parts_odd());
    let ctx = DiscretizationContext {
        delta,
        positions,
        part_of,
        imperfect_vertices,
        parity_extra_vertices,
        interleave_part_index: interleave_part,
    };
    Ok((path, ctx))
}

/// Reads a path split as a halving of `[0,1]`: the uncovered vertices,
/// padded to exactly `m + 1` by moving the highest-indexed members of the
/// second set, become cut locations; each stretch of path between them is a
/// piece, labeled by which side its measured vertices lie on. Zero-width
/// pieces (coincident or endpoint cuts) are dropped, so the result has at
/// most `m + 1` cuts.
///
/// Stretches holding measured vertices from both sides cannot come from a
/// verified split and are reported as an internal inconsistency. Stretches
/// with no measured vertex are labeled plus by convention; they may carry
/// filler mass only.
pub fn conhalv_backmap(
    ctx: &DiscretizationContext,
    sol: &SplitSolution,
) -> Result<CutLabelSolution> {
    let n = ctx.part_of.len();
    if n == 0 || ctx.positions.len() != n {
        return Err(Error::usage(
            "discretization context needs matching nonempty position and part tables",
        ));
    }
    if ctx.interleave_part_index < 2 {
        return Err(Error::usage(
            "interleave part index must be at least 2 (one measured part plus filler)",
        ));
    }
    let zero = Rational::zero();
    let one = Rational::one();
    for (i, w) in ctx.positions.windows(2).enumerate() {
        if w[0] > w[1] {
            return Err(Error::usage(format!(
                "positions decrease between vertices {} and {}",
                i + 1,
                i + 2
            )));
        }
    }
    if ctx.positions[0] < zero || ctx.positions[n - 1] > one {
        return Err(Error::usage("positions must lie in [0,1]"));
    }
    let m = ctx.interleave_part_index - 1;
    for &v in sol.s1.iter().chain(&sol.s2) {
        if v < 1 || v > n {
            return Err(Error::usage(format!("vertex {v} outside 1..={n}")));
        }
    }
    if let Some(w) = sol.s1.intersection(&sol.s2).next() {
        return Err(Error::usage(format!("sets overlap at vertex {w}")));
    }

    let mut s2 = sol.s2.clone();
    let mut cut_ids: BTreeSet<usize> = (1..=n)
        .filter(|v| !sol.s1.contains(v) && !s2.contains(v))
        .collect();
    if cut_ids.len() > m + 1 {
        return Err(Error::usage(format!(
            "{} vertices uncovered; a verified split leaves at most {}",
            cut_ids.len(),
            m + 1
        )));
    }
    while cut_ids.len() < m + 1 {
        let Some(&moved) = s2.iter().next_back() else {
            return Err(Error::inconsistent(
                "cannot pad the cut set to m + 1 vertices: the second side ran empty",
            ));
        };
        s2.remove(&moved);
        cut_ids.insert(moved);
    }

    // One label per stretch of covered vertices between consecutive cuts.
    let cut_ids: Vec<usize> = cut_ids.into_iter().collect();
    let mut labels = Vec::with_capacity(m + 2);
    let mut stretch_start = 1usize;
    for j in 0..=cut_ids.len() {
        let stretch_end = cut_ids.get(j).copied().unwrap_or(n + 1);
        let mut label: Option<PieceLabel> = None;
        for v in stretch_start..stretch_end {
            if ctx.part_of[v - 1] == ctx.interleave_part_index {
                continue;
            }
            let side = if sol.s1.contains(&v) {
                PieceLabel::Plus
            } else {
                PieceLabel::Minus
            };
            match label {
                None => label = Some(side),
                Some(l) if l != side => {
                    return Err(Error::inconsistent(format!(
                        "piece {} holds measured vertices from both sides",
                        j + 1
                    )));
                }
                Some(_) => {}
            }
        }
        labels.push(label.unwrap_or(PieceLabel::Plus));
        stretch_start = stretch_end + 1;
    }

    // Numeric boundaries; coincident cuts and cuts at the endpoints produce
    // zero-width pieces, dropped together with their labels.
    let mut boundaries = Vec::with_capacity(cut_ids.len() + 2);
    boundaries.push(zero);
    boundaries.extend(cut_ids.iter().map(|&v| ctx.positions[v - 1].clone()));
    boundaries.push(one);
    let mut cuts = Vec::new();
    let mut kept_labels = Vec::new();
    for (w, &label) in boundaries.windows(2).zip(&labels) {
        if w[0] < w[1] {
            if !kept_labels.is_empty() {
                cuts.push(w[0].clone());
            }
            kept_labels.push(label);
        }
    }
    CutLabelSolution::new(cuts, kept_labels)
}
