//! End-to-end solving through the reduction chain instead of direct search.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{brute_fsplitp, brute_otucker, brute_schrijver, check_bound, SolverLimits, SolverReport};
use crate::error::{Error, Result};
use crate::measures::{verify_conhalv, ConHalvInstance, CutLabelSolution};
use crate::partition::CyclePartitionInstance;
use crate::problems::{verify_fisc, IndependentSetSolution};
use crate::rational::Rational;
use crate::reductions::{
    conhalv_backmap, conhalv_to_fsplitp, fisc_to_schrijver, otucker_backmap_to_schrijver,
    schrijver_backmap_to_fisc, schrijver_to_otucker,
};

/// Which lifted problem does the searching when a fair independent set is
/// produced through the reduction chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PipelineRoute {
    /// Stop at the stable-subset coloring and search for a monochromatic edge.
    ViaSchrijver,
    /// Lift once more to sign vectors and search for a complementary pair.
    /// The search dimension equals the coloring's vertex count, so this
    /// route refuses much earlier than the direct one.
    ViaOtucker,
}

/// Solves a fair-independent-set instance by lifting it along the reduction
/// chain, searching the lifted problem, and mapping the answer back down.
///
/// Parts of size at most 2 everywhere make the empty set fair; that
/// degenerate case short-circuits without any search. Otherwise the quota
/// coloring is built and either searched directly or lifted to a labeling
/// first, per `route`. The result is re-verified against the source instance
/// before it is returned.
pub fn pipeline_solve_fisc(
    inst: &CyclePartitionInstance,
    route: PipelineRoute,
    limits: &SolverLimits,
) -> Result<SolverReport<IndependentSetSolution>> {
    let start = Instant::now();
    let (sch, ctx) = match fisc_to_schrijver(inst) {
        Ok(pair) => pair,
        Err(Error::Degenerate(_)) => {
            let sol = IndependentSetSolution::new([]);
            if !verify_fisc(inst, &sol)? {
                return Err(Error::inconsistent(format!(
                    "all parts of {inst} have size <= 2, yet the empty set is not fair"
                )));
            }
            return Ok(SolverReport {
                solution: sol,
                nodes_explored: 0,
                elapsed: start.elapsed(),
            });
        }
        Err(e) => return Err(e),
    };
    let (s1, s2, nodes) = match route {
        PipelineRoute::ViaSchrijver => {
            let report = brute_schrijver(&sch, limits)?;
            let (a, b) = report.solution;
            (a, b, report.nodes_explored)
        }
        PipelineRoute::ViaOtucker => {
            let lifted = schrijver_to_otucker(&sch)?;
            let report = brute_otucker(&lifted, limits)?;
            let (x, y) = report.solution;
            let (a, b) = otucker_backmap_to_schrijver(&sch, &x, &y)?;
            (a, b, report.nodes_explored)
        }
    };
    let sol = schrijver_backmap_to_fisc(&sch, &ctx, &s1, &s2)?;
    if !verify_fisc(inst, &sol)? {
        return Err(Error::inconsistent(format!(
            "pipeline produced {sol}, which fails verification on {inst}"
        )));
    }
    Ok(SolverReport {
        solution: sol,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Halves every measure by discretizing to a split path, searching it at a
/// quarter of the requested tolerance, and reading cuts off the labeling.
///
/// The constructed path has one vertex per grid cell, which can run to a few
/// hundred; `limits.conhalv_path_max_n` guards that size and the split
/// search is run with its cap lifted to match. The back-mapped cut set is
/// re-verified at the original tolerance before it is returned.
pub fn pipeline_solve_conhalv(
    inst: &ConHalvInstance,
    limits: &SolverLimits,
) -> Result<SolverReport<CutLabelSolution>> {
    let start = Instant::now();
    let (path, ctx) = conhalv_to_fsplitp(inst)?;
    check_bound(
        "discretized path length",
        path.n(),
        limits.conhalv_path_max_n,
    )?;
    let inner = SolverLimits {
        fsplit_max_n: limits.conhalv_path_max_n,
        ..*limits
    };
    let quarter = inst.eps() / &Rational::from_int(4);
    let report = brute_fsplitp(&path, &quarter, &inner)?;
    let sol = conhalv_backmap(&ctx, &report.solution)?;
    if !verify_conhalv(inst, &sol)? {
        return Err(Error::inconsistent(format!(
            "pipeline cuts fail verification at tolerance {} over {} measures",
            inst.eps(),
            inst.measures().len()
        )));
    }
    Ok(SolverReport {
        solution: sol,
        nodes_explored: report.nodes_explored,
        elapsed: start.elapsed(),
    })
}
