//! The links into the octahedral labeling problem, from quota colorings of
//! stable subsets and directly from cycle splitting, plus the back-maps that
//! peel a complementary sign-vector pair apart into the witness the source
//! problem wants.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::oracles::{overfull_parts, LambdaOracle};
use crate::partition::CyclePartitionInstance;
use crate::problems::{OTuckerInstance, SchrijverInstance, SplitSolution};
use crate::sign::{SignVector, StableKSubset};

/// Wraps the two-case labeling rule around a coloring instance: vectors
/// below alternation `2k` get their signed alternation count, the rest
/// compare the colors of the two supports of their alternation truncation.
pub fn schrijver_to_otucker(inst: &SchrijverInstance) -> Result<OTuckerInstance> {
    OTuckerInstance::new(inst.n(), LambdaOracle::from_schrijver(inst.clone()))
}

/// Splits a complementary pair back into a monochromatic edge. If either
/// vector hits the tie sub-case (truncated supports sharing a color), those
/// supports already form the edge. Otherwise equal label magnitudes force
/// both vectors into the strict sub-case with opposite signs, and the
/// positively labeled vector's plus support pairs with the negatively
/// labeled vector's minus support: one sits inside `y^+`, the other inside
/// `y^-`, so they are disjoint, and the matching magnitudes equate their
/// colors.
pub fn otucker_backmap_to_schrijver(
    inst: &SchrijverInstance,
    x: &SignVector,
    y: &SignVector,
) -> Result<(StableKSubset, StableKSubset)> {
    let n = inst.n();
    let k = inst.k();
    for v in [x, y] {
        if v.len() != n {
            return Err(Error::usage(format!(
                "vector {v} has length {}, instance has n={n}",
                v.len()
            )));
        }
        if v.is_zero() {
            return Err(Error::usage(
                "the zero vector carries no label and belongs to no complementary pair",
            ));
        }
    }
    for v in [x, y] {
        if v.alt() >= 2 * k {
            let (zp, zm) = truncated_sides(inst, v)?;
            if inst.color_of(&zp)? == inst.color_of(&zm)? {
                return Ok((zp, zm));
            }
        }
    }
    if x.alt() < 2 * k || y.alt() < 2 * k {
        return Err(Error::inconsistent(
            "low-alternation vectors carry first-nonzero labels, which never pair \
             up antipodally under refinement",
        ));
    }
    let (xp, xm) = truncated_sides(inst, x)?;
    let (yp, ym) = truncated_sides(inst, y)?;
    let x_positive = inst.color_of(&xp)? < inst.color_of(&xm)?;
    let y_positive = inst.color_of(&yp)? < inst.color_of(&ym)?;
    let (s1, s2) = match (x_positive, y_positive) {
        (true, false) => (xp, ym),
        (false, true) => (yp, xm),
        _ => {
            return Err(Error::inconsistent(
                "both labels carry the same sign; the pair cannot be complementary",
            ))
        }
    };
    if !s1.is_disjoint_from(&s2) {
        return Err(Error::inconsistent(format!(
            "{s1} and {s2} overlap; the input vectors cannot be refinement-ordered"
        )));
    }
    if inst.color_of(&s1)? != inst.color_of(&s2)? {
        return Err(Error::inconsistent(
            "chosen supports disagree on color; the labels cannot have had equal \
             magnitude",
        ));
    }
    Ok((s1, s2))
}

/// Supports of the truncation to alternation `2k`, as stable subsets. An
/// exactly `2k`-alternating vector has `k` entries of each sign, never both
/// endpoints of the cycle, and a sign change (hence a gap) between
/// consecutive support positions, so stability cannot fail.
fn truncated_sides(
    inst: &SchrijverInstance,
    v: &SignVector,
) -> Result<(StableKSubset, StableKSubset)> {
    let z = v.truncate_alternation(2 * inst.k())?;
    let make = |support: BTreeSet<usize>| {
        StableKSubset::new(inst.n(), support.into_iter().collect()).map_err(|e| {
            Error::inconsistent(format!(
                "support of a {}-alternating truncation should be stable: {e}",
                2 * inst.k()
            ))
        })
    };
    Ok((make(z.support_plus())?, make(z.support_minus())?))
}

/// Wraps the overfull-part labeling rule around a partitioned cycle.
/// Requires the usual parity `n = m (mod 2)` and refuses the all-singleton
/// case, where the empty split already solves the source problem.
pub fn fsplitc_to_otucker(inst: &CyclePartitionInstance) -> Result<OTuckerInstance> {
    if inst.n() % 2 != inst.m() % 2 {
        return Err(Error::instance(format!(
            "cycle splitting requires n = {} and m = {} to share parity",
            inst.n(),
            inst.m()
        )));
    }
    OTuckerInstance::new(inst.n(), LambdaOracle::from_fsplitc(inst.clone())?)
}

/// Reads the split off the endpoint that overfills no part. Exactly one
/// endpoint of a valid pair does: overfull parts survive refinement, equal
/// overfull magnitudes force equal label signs, and equal alternation counts
/// under refinement force equal first signs, so neither two overfull nor two
/// overfull-free endpoints can carry opposite labels. The overfull-free
/// endpoint's label magnitude pins its support to an exactly alternating
/// all-but-one-per-part cover, whose sides are the two independent sets.
pub fn otucker_backmap_to_fsplitc(
    inst: &CyclePartitionInstance,
    x: &SignVector,
    y: &SignVector,
) -> Result<SplitSolution> {
    for v in [x, y] {
        if v.len() != inst.n() {
            return Err(Error::usage(format!(
                "vector {v} has length {}, instance has n={}",
                v.len(),
                inst.n()
            )));
        }
        if v.is_zero() {
            return Err(Error::usage(
                "the zero vector carries no label and belongs to no complementary pair",
            ));
        }
    }
    let x_clean = overfull_parts(inst, x).is_empty();
    let y_clean = overfull_parts(inst, y).is_empty();
    let chosen = match (x_clean, y_clean) {
        (true, false) => x,
        (false, true) => y,
        (true, true) => {
            return Err(Error::inconsistent(
                "neither endpoint overfills a part, so both labels are equal signed \
                 alternation counts; no complementary pair looks like this",
            ))
        }
        (false, false) => {
            return Err(Error::inconsistent(
                "both endpoints overfill a part, forcing equal label signs; no \
                 complementary pair looks like this",
            ))
        }
    };
    Ok(SplitSolution {
        s1: chosen.support_plus(),
        s2: chosen.support_minus(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::ColoringOracle;
    use crate::problems::{verify_fisc, verify_fsplitc, verify_otucker, verify_schrijver};
    use crate::rational::Rational;
    use crate::reductions::{fisc_to_schrijver, schrijver_backmap_to_fisc};
    use crate::sign::enumerate_stable_k_subsets;
    use crate::sign::testutil::{all_vectors, sv};

    fn cyc(n: usize, parts: &[Vec<usize>]) -> CyclePartitionInstance {
        CyclePartitionInstance::from_parts(n, parts).unwrap()
    }

    fn constant_table_instance(n: usize, k: usize, color: usize) -> SchrijverInstance {
        let entries = enumerate_stable_k_subsets(n, k)
            .unwrap()
            .into_iter()
            .map(|s| (s.elements().to_vec(), color));
        SchrijverInstance::new(n, k, ColoringOracle::table(n, k, entries).unwrap()).unwrap()
    }

    /// Every complementary pair of the instance, by exhaustive search over
    /// comparable nonzero pairs.
    fn complementary_pairs(inst: &OTuckerInstance) -> Vec<(SignVector, SignVector)> {
        let vectors = all_vectors(inst.n());
        let mut out = Vec::new();
        for y in &vectors {
            if y.is_zero() {
                continue;
            }
            for x in &vectors {
                if x.is_zero() || !x.precedes(y).unwrap() {
                    continue;
                }
                if verify_otucker(inst, x, y).unwrap() {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn low_alternation_keeps_first_nonzero_label() {
        let source = constant_table_instance(6, 2, 1);
        let inst = schrijver_to_otucker(&source).unwrap();
        assert_eq!(inst.n(), 6);
        assert_eq!(inst.label_of(&sv("+00000")).unwrap(), 1);
        assert_eq!(inst.label_of(&sv("0-0+00")).unwrap(), -2);
    }

    #[test]
    fn tie_case_backmap_ignores_the_partner() {
        let source = constant_table_instance(6, 2, 1);
        // alt 4 with a constant coloring: truncated supports share color 1.
        let x = sv("+-+-00");
        let garbage = sv("++++++");
        let (s1, s2) = otucker_backmap_to_schrijver(&source, &x, &garbage).unwrap();
        assert_eq!(s1.elements(), &[1, 3]);
        assert_eq!(s2.elements(), &[2, 4]);
        assert!(verify_schrijver(&source, &s1, &s2).unwrap());
    }

    #[test]
    fn constant_coloring_pairs_all_backmap_to_edges() {
        let source = constant_table_instance(6, 2, 1);
        let inst = schrijver_to_otucker(&source).unwrap();
        let pairs = complementary_pairs(&inst);
        assert!(!pairs.is_empty(), "the labeling problem is total");
        for (x, y) in pairs {
            let (s1, s2) = otucker_backmap_to_schrijver(&source, &x, &y).unwrap();
            assert!(
                verify_schrijver(&source, &s1, &s2).unwrap(),
                "pair ({x}, {y}) mapped to non-edge ({s1}, {s2})"
            );
        }
    }

    #[test]
    fn quota_coloring_pairs_chain_back_to_fair_sets() {
        // The full chain in miniature: fair set problem -> coloring ->
        // labeling, then both back-maps in sequence.
        let fisc = cyc(6, &[vec![1, 2, 3], vec![4, 5, 6]]);
        let (schr, ctx) = fisc_to_schrijver(&fisc).unwrap();
        let inst = schrijver_to_otucker(&schr).unwrap();
        let pairs = complementary_pairs(&inst);
        assert!(!pairs.is_empty());
        for (x, y) in pairs {
            let (s1, s2) = otucker_backmap_to_schrijver(&schr, &x, &y).unwrap();
            assert!(verify_schrijver(&schr, &s1, &s2).unwrap());
            let back = schrijver_backmap_to_fisc(&schr, &ctx, &s1, &s2).unwrap();
            assert!(verify_fisc(&fisc, &back).unwrap(), "pair ({x}, {y})");
        }
    }

    #[test]
    fn split_link_rejects_parity_mismatch_and_singletons() {
        assert!(matches!(
            fsplitc_to_otucker(&cyc(5, &[vec![1, 2], vec![3, 4, 5]])),
            Err(Error::Instance(_))
        ));
        assert!(matches!(
            fsplitc_to_otucker(&cyc(2, &[vec![1], vec![2]])),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn split_link_frozen_labels() {
        let inst = fsplitc_to_otucker(&cyc(4, &[vec![1, 2], vec![3, 4]])).unwrap();
        // Half-half on part 1, smallest covered vertex on the plus side.
        assert_eq!(inst.label_of(&sv("+-00")).unwrap(), 2);
        // No part overfull: signed alternation count.
        assert_eq!(inst.label_of(&sv("+000")).unwrap(), 1);
        assert_eq!(inst.label_of(&sv("+0-0")).unwrap(), 2);
    }

    #[test]
    fn split_pairs_all_backmap_to_verified_splits() {
        let sources = [
            cyc(4, &[vec![1, 2], vec![3, 4]]),
            cyc(5, &[vec![1, 2, 3, 4, 5]]),
            cyc(6, &[vec![1, 3, 5], vec![2, 4, 6]]),
        ];
        let zero = Rational::zero();
        for source in sources {
            let inst = fsplitc_to_otucker(&source).unwrap();
            let pairs = complementary_pairs(&inst);
            assert!(!pairs.is_empty(), "on {source}");
            for (x, y) in pairs {
                let split = otucker_backmap_to_fsplitc(&source, &x, &y).unwrap();
                assert!(
                    verify_fsplitc(&source, &split, &zero).unwrap(),
                    "pair ({x}, {y}) on {source} gave {:?}",
                    split
                );
            }
        }
    }

    #[test]
    fn split_backmap_rejects_malformed_pairs() {
        let source = cyc(4, &[vec![1, 2], vec![3, 4]]);
        // Both endpoints overfull-free.
        assert!(matches!(
            otucker_backmap_to_fsplitc(&source, &sv("+000"), &sv("+000")),
            Err(Error::Inconsistent(_))
        ));
        // Both endpoints overfull.
        assert!(matches!(
            otucker_backmap_to_fsplitc(&source, &sv("+-00"), &sv("+-00")),
            Err(Error::Inconsistent(_))
        ));
        // Zero vector and length mismatch.
        assert!(matches!(
            otucker_backmap_to_fsplitc(&source, &sv("0000"), &sv("+-00")),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            otucker_backmap_to_fsplitc(&source, &sv("+-0"), &sv("+-00")),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn edge_backmap_rejects_malformed_pairs() {
        let source = constant_table_instance(6, 2, 1);
        // Low alternation on both sides, no tie available.
        assert!(matches!(
            otucker_backmap_to_schrijver(&source, &sv("+00000"), &sv("+00000")),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            otucker_backmap_to_schrijver(&source, &sv("000000"), &sv("+00000")),
            Err(Error::Usage(_))
        ));
    }
}
