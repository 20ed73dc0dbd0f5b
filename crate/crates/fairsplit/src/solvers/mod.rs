//! Desk-scale exhaustive solvers. Every existence theorem in the problem
//! family gets an executable witness here: each solver enumerates its whole
//! search space (within configured bounds), verifies what it finds, and
//! returns the lexicographically first solution so results are stable across
//! runs and implementations.
//!
//! Bounds are configuration, not constants. An oversized instance is refused
//! loudly with [`Error::BoundExceeded`](crate::error::Error::BoundExceeded);
//! no solver ever silently truncates its search.

mod fisc;
mod fsplit;
mod generator;
mod otucker;
mod pipeline;
mod schrijver;

pub use fisc::brute_fisc;
pub use fsplit::{brute_fsplitc, brute_fsplitp};
pub use generator::{generate_instance, GenKind, Generated};
pub use otucker::brute_otucker;
pub use pipeline::{pipeline_solve_conhalv, pipeline_solve_fisc, PipelineRoute};
pub use schrijver::{brute_schrijver, chromatic_number};

use crate::error::{Error, Result};
use std::time::Duration;

/// Ceilings for the exhaustive searches, all overridable by callers.
///
/// Each bound caps the quantity that actually drives the search-space size:
/// vertex counts for the backtracking solvers, stable-subset count for the
/// monochromatic-edge search (its space is quadratic in that count), and the
/// sign-vector dimension for the complementary-pair search (5^n ordered
/// pairs). The consensus-halving pipeline gets its own path cap because the
/// discretized paths it builds are far longer than anything worth feeding to
/// the generic split solver directly, yet its structured enumeration stays
/// cheap when the number of parts is small.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverLimits {
    /// Max cycle length for `brute_fisc`.
    pub fisc_max_n: usize,
    /// Max instance length for `brute_fsplitc` / `brute_fsplitp`.
    pub fsplit_max_n: usize,
    /// Max discretized path length for `pipeline_solve_conhalv`.
    pub conhalv_path_max_n: usize,
    /// Max sign-vector dimension for `brute_otucker`.
    pub otucker_max_n: usize,
    /// Max stable-subset count for `brute_schrijver`.
    pub schrijver_max_subsets: usize,
    /// Max stable-subset count for `chromatic_number`.
    pub chromatic_max_vertices: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            fisc_max_n: 24,
            fsplit_max_n: 18,
            conhalv_path_max_n: 1024,
            otucker_max_n: 10,
            schrijver_max_subsets: 100_000,
            chromatic_max_vertices: 60,
        }
    }
}

/// A verified solution plus how much work the search did to find it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverReport<T> {
    pub solution: T,
    /// Search states examined; monotone under identical inputs, so golden
    /// tests may freeze it.
    pub nodes_explored: u64,
    /// Wall-clock time. Excluded from serialized provenance to keep solver
    /// output byte-deterministic.
    pub elapsed: Duration,
}

fn check_bound(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::BoundExceeded {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}
