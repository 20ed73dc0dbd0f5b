//! Fair splits of partitioned cycles and paths.
//!
//! A cycle (or path) on vertices `1..=n` comes with a partition into parts
//! `V_1..V_m`. The library verifies and solves a family of total search
//! problems over such instances: finding an independent set that meets every
//! part fairly, splitting all but a few vertices into two fair independent
//! sets, consensus halving of the unit interval with exact rational measures,
//! finding monochromatic edges in colored Schrijver graphs, and finding
//! complementary sign-vector pairs under antipodal labelings of the signed
//! hypercube.
//!
//! The interesting structure is in the reductions connecting these problems
//! (see [`reductions`]), each of which carries an explicit back-map pulling a
//! target solution back to a verified source solution. Brute-force solvers
//! (see [`solvers`]) make every link executable at desk scale, and the `io` /
//! `cli` modules give the whole chain a file-based interface.
//!
//! All fairness arithmetic is exact: measures, cut positions, and tolerance
//! comparisons use big rationals end to end. No floating point participates
//! in any verdict.

pub mod cli;
pub mod error;
pub mod io;
pub mod measures;
pub mod oracles;
pub mod partition;
pub mod problems;
pub mod rational;
pub mod reductions;
pub mod sign;
pub mod solvers;

pub use error::{Error, Result};
pub use measures::{ConHalvInstance, CutLabelSolution, PieceLabel, PiecewiseConstantDensity};
pub use oracles::{ColoringOracle, LambdaOracle, RelabelContext};
pub use partition::{CyclePartitionInstance, PathPartitionInstance};
pub use problems::{IndependentSetSolution, OTuckerInstance, SchrijverInstance, SplitSolution};
pub use rational::Rational;
pub use sign::{is_stable, Sign, SignVector, StableKSubset};
pub use solvers::{
    brute_fisc, brute_fsplitc, brute_fsplitp, brute_otucker, brute_schrijver, chromatic_number,
    generate_instance, pipeline_solve_conhalv, pipeline_solve_fisc, GenKind, Generated,
    PipelineRoute, SolverLimits, SolverReport,
};
