//! Seeded pseudo-random instance families for corpora, demos, and the CLI.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::measures::{ConHalvInstance, DensityBlock, PiecewiseConstantDensity};
use crate::partition::{CyclePartitionInstance, PathPartitionInstance};
use crate::rational::{ratio, Rational};

/// Instance family to draw from. Every family is total over its declared
/// parameter domain and rejects anything else as a usage error, so a corpus
/// loop never has to retry seeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenKind {
    /// Uniform random cycle partition into `m` nonempty parts.
    Fisc { n: usize, m: usize },
    /// Like `Fisc` but demands the splitting parity `n ≡ m (mod 2)`.
    FsplitC { n: usize, m: usize },
    /// Random path partition with every part of odd size.
    FsplitP { n: usize, m: usize },
    /// `measures` densities on `[0,1]`, each `blocks` separated uniform
    /// chunks of equal mass; the cut budget is one more than the measure
    /// count.
    ConHalv {
        measures: usize,
        blocks: usize,
        eps: Rational,
    },
    /// A cycle on `3t` vertices cut into `t` scattered triples; the smallest
    /// family whose exact complexity is still open, kept exercisable here.
    CyclePlusTriangles { t: usize },
    /// Every vertex its own part; the degenerate fully-covered case.
    AllSingleton { n: usize },
    /// One part holding the whole cycle.
    SinglePart { n: usize },
}

/// What came out; the tag tells serializers which problem envelope to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Fisc(CyclePartitionInstance),
    FsplitC(CyclePartitionInstance),
    FsplitP(PathPartitionInstance),
    ConHalv(ConHalvInstance),
}

/// Draws one instance. The same `(kind, seed)` pair always yields the same
/// instance, byte for byte once serialized.
pub fn generate_instance(kind: &GenKind, seed: u64) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        GenKind::Fisc { n, m } => Ok(Generated::Fisc(CyclePartitionInstance::from_parts(
            *n,
            &random_partition(*n, *m, &mut rng)?,
        )?)),
        GenKind::FsplitC { n, m } => {
            if n % 2 != m % 2 {
                return Err(Error::usage(format!(
                    "cycle splitting requires n = {n} and m = {m} to share parity"
                )));
            }
            Ok(Generated::FsplitC(CyclePartitionInstance::from_parts(
                *n,
                &random_partition(*n, *m, &mut rng)?,
            )?))
        }
        GenKind::FsplitP { n, m } => Ok(Generated::FsplitP(PathPartitionInstance::from_parts(
            *n,
            &random_odd_partition(*n, *m, &mut rng)?,
        )?)),
        GenKind::ConHalv {
            measures,
            blocks,
            eps,
        } => Ok(Generated::ConHalv(random_conhalv(
            *measures, *blocks, eps, &mut rng,
        )?)),
        GenKind::CyclePlusTriangles { t } => {
            if *t == 0 {
                return Err(Error::usage("need at least one triple"));
            }
            let n = 3 * t;
            let mut pool: Vec<usize> = (1..=n).collect();
            pool.shuffle(&mut rng);
            let parts: Vec<Vec<usize>> = pool
                .chunks(3)
                .map(|c| {
                    let mut part = c.to_vec();
                    part.sort_unstable();
                    part
                })
                .collect();
            Ok(Generated::Fisc(CyclePartitionInstance::from_parts(
                n, &parts,
            )?))
        }
        GenKind::AllSingleton { n } => {
            let parts: Vec<Vec<usize>> = (1..=*n).map(|v| vec![v]).collect();
            Ok(Generated::Fisc(CyclePartitionInstance::from_parts(
                *n, &parts,
            )?))
        }
        GenKind::SinglePart { n } => Ok(Generated::Fisc(CyclePartitionInstance::from_parts(
            *n,
            &[(1..=*n).collect()],
        )?)),
    }
}

/// Partition of `1..=n` into `m` nonempty parts: a shuffle seats one vertex
/// per part, the rest land uniformly.
fn random_partition(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<usize>>> {
    if m == 0 || n < m {
        return Err(Error::usage(format!(
            "cannot split {n} vertices into {m} nonempty parts"
        )));
    }
    let mut pool: Vec<usize> = (1..=n).collect();
    pool.shuffle(rng);
    let mut parts = vec![Vec::new(); m];
    for (i, &v) in pool.iter().enumerate() {
        let p = if i < m { i } else { rng.gen_range(0..m) };
        parts[p].push(v);
    }
    for part in &mut parts {
        part.sort_unstable();
    }
    Ok(parts)
}

/// Partition with all-odd part sizes: start from singletons and hand out the
/// remaining vertices in pairs, then scatter via a shuffled pool.
fn random_odd_partition(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<usize>>> {
    if m == 0 || n < m {
        return Err(Error::usage(format!(
            "cannot split {n} vertices into {m} nonempty parts"
        )));
    }
    if n % 2 != m % 2 {
        return Err(Error::usage(format!(
            "{m} odd part sizes sum to the parity of {m}, so n = {n} is impossible"
        )));
    }
    let mut sizes = vec![1usize; m];
    for _ in 0..(n - m) / 2 {
        sizes[rng.gen_range(0..m)] += 2;
    }
    let mut pool: Vec<usize> = (1..=n).collect();
    pool.shuffle(rng);
    let mut parts = Vec::with_capacity(m);
    let mut at = 0;
    for s in sizes {
        let mut part = pool[at..at + s].to_vec();
        at += s;
        part.sort_unstable();
        parts.push(part);
    }
    Ok(parts)
}

/// Each measure spreads mass `1/blocks` over `blocks` pairwise non-adjacent
/// cells of a `4 * blocks` grid, so the block list never merges and stays
/// canonical.
fn random_conhalv(
    measures: usize,
    blocks: usize,
    eps: &Rational,
    rng: &mut ChaCha8Rng,
) -> Result<ConHalvInstance> {
    if measures == 0 || blocks == 0 {
        return Err(Error::usage(
            "need at least one measure and one block per measure",
        ));
    }
    let grid = 4 * blocks;
    let mut densities = Vec::with_capacity(measures);
    for _ in 0..measures {
        let mut picks = BTreeSet::new();
        while picks.len() < blocks {
            picks.insert(rng.gen_range(1..=grid - blocks + 1));
        }
        // Shifting the j-th pick right by j turns distinct cells into
        // pairwise non-adjacent ones.
        let cells: Vec<DensityBlock> = picks
            .iter()
            .enumerate()
            .map(|(j, a)| {
                let cell = a + j;
                DensityBlock {
                    lo: ratio((cell - 1) as i64, grid as i64),
                    hi: ratio(cell as i64, grid as i64),
                    value: ratio(grid as i64, blocks as i64),
                }
            })
            .collect();
        densities.push(PiecewiseConstantDensity::new(cells)?);
    }
    ConHalvInstance::new(densities, eps.clone(), measures + 1)
}
