//! Color and label oracles evaluated from serializable descriptors.
//!
//! Solvers never see closures. An oracle is a descriptor that is either an
//! explicit lookup table (guarded to small dimensions) or a recipe naming a
//! source instance; derived descriptors evaluate lazily by applying the
//! corresponding construction rule to each query. Keeping oracles as plain
//! data makes every pipeline stage a JSON-to-JSON transformation and lets a
//! run be reproduced from its instance documents alone.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::CyclePartitionInstance;
use crate::problems::SchrijverInstance;
use crate::sign::{Sign, SignVector, StableKSubset};

/// Explicit tables above this dimension are refused; they grow exponentially
/// while derived descriptors stay constant-size.
pub const MAX_TABLE_DIMENSION: usize = 12;

/// A coloring of stable subsets given entry by entry, kept sorted by set so
/// lookups can binary-search and serialization is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColorTableRepr", into = "ColorTableRepr")]
pub struct ColorTable {
    n: usize,
    k: usize,
    entries: Vec<(Vec<usize>, usize)>,
}

#[derive(Clone, Serialize, Deserialize)]
struct ColorEntryRepr {
    set: Vec<usize>,
    color: usize,
}

#[derive(Clone, Serialize, Deserialize)]
struct ColorTableRepr {
    n: usize,
    k: usize,
    entries: Vec<ColorEntryRepr>,
}

impl From<ColorTable> for ColorTableRepr {
    fn from(t: ColorTable) -> Self {
        ColorTableRepr {
            n: t.n,
            k: t.k,
            entries: t
                .entries
                .into_iter()
                .map(|(set, color)| ColorEntryRepr { set, color })
                .collect(),
        }
    }
}

impl TryFrom<ColorTableRepr> for ColorTable {
    type Error = Error;
    fn try_from(r: ColorTableRepr) -> Result<Self> {
        ColorTable::new(
            r.n,
            r.k,
            r.entries.into_iter().map(|e| (e.set, e.color)),
        )
    }
}

impl ColorTable {
    pub fn new(
        n: usize,
        k: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, usize)>,
    ) -> Result<Self> {
        if k < 1 {
            return Err(Error::usage("color table needs k >= 1"));
        }
        if n < 1 || n > MAX_TABLE_DIMENSION {
            return Err(Error::usage(format!(
                "explicit table oracles are limited to 1 <= n <= {MAX_TABLE_DIMENSION}, \
                 got n={n}; use a derived descriptor instead"
            )));
        }
        let mut canonical: Vec<(Vec<usize>, usize)> = Vec::new();
        for (set, color) in entries {
            // Normalizes order and checks stability; the color is taken as
            // given so that ill-formed oracles remain representable.
            let s = StableKSubset::new(n, set)?;
            if s.k() != k {
                return Err(Error::usage(format!(
                    "table entry {s} has {} elements, expected k={k}",
                    s.k()
                )));
            }
            canonical.push((s.elements().to_vec(), color));
        }
        canonical.sort();
        for w in canonical.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::usage(format!(
                    "duplicate table entry for {:?}",
                    w[0].0
                )));
            }
        }
        Ok(ColorTable {
            n,
            k,
            entries: canonical,
        })
    }

    fn lookup(&self, s: &StableKSubset) -> Result<usize> {
        match self
            .entries
            .binary_search_by(|(set, _)| set.as_slice().cmp(s.elements()))
        {
            Ok(i) => Ok(self.entries[i].1),
            Err(_) => Err(Error::oracle(
                s.to_string(),
                "color table has no entry for this subset",
            )),
        }
    }
}

/// A labeling of nonzero sign vectors given entry by entry, sorted by vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LambdaTableRepr", into = "LambdaTableRepr")]
pub struct LambdaTable {
    n: usize,
    entries: Vec<(SignVector, i64)>,
}

#[derive(Clone, Serialize, Deserialize)]
struct LambdaEntryRepr {
    x: SignVector,
    value: i64,
}

#[derive(Clone, Serialize, Deserialize)]
struct LambdaTableRepr {
    n: usize,
    entries: Vec<LambdaEntryRepr>,
}

impl From<LambdaTable> for LambdaTableRepr {
    fn from(t: LambdaTable) -> Self {
        LambdaTableRepr {
            n: t.n,
            entries: t
                .entries
                .into_iter()
                .map(|(x, value)| LambdaEntryRepr { x, value })
                .collect(),
        }
    }
}

impl TryFrom<LambdaTableRepr> for LambdaTable {
    type Error = Error;
    fn try_from(r: LambdaTableRepr) -> Result<Self> {
        LambdaTable::new(r.n, r.entries.into_iter().map(|e| (e.x, e.value)))
    }
}

impl LambdaTable {
    pub fn new(n: usize, entries: impl IntoIterator<Item = (SignVector, i64)>) -> Result<Self> {
        if n < 1 || n > MAX_TABLE_DIMENSION {
            return Err(Error::usage(format!(
                "explicit table oracles are limited to 1 <= n <= {MAX_TABLE_DIMENSION}, \
                 got n={n}; use a derived descriptor instead"
            )));
        }
        let mut canonical: Vec<(SignVector, i64)> = Vec::new();
        for (x, value) in entries {
            if x.len() != n {
                return Err(Error::usage(format!(
                    "table entry {x} has length {}, expected n={n}",
                    x.len()
                )));
            }
            if x.is_zero() {
                return Err(Error::usage(
                    "the all-zero vector does not belong in a label table",
                ));
            }
            // The value is taken as given: out-of-range or non-antipodal
            // tables must stay representable so violations can be exercised.
            canonical.push((x, value));
        }
        canonical.sort();
        for w in canonical.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::usage(format!("duplicate table entry for {}", w[0].0)));
            }
        }
        Ok(LambdaTable {
            n,
            entries: canonical,
        })
    }

    fn lookup(&self, x: &SignVector) -> Result<i64> {
        match self.entries.binary_search_by(|(v, _)| v.cmp(x)) {
            Ok(i) => Ok(self.entries[i].1),
            Err(_) => Err(Error::oracle(
                x.to_string(),
                "label table has no entry for this vector",
            )),
        }
    }
}

/// Everything needed to pull a monochromatic-edge solution back through the
/// parity trim of a partitioned cycle: which vertex each part lost, how the
/// survivors were renumbered, and the per-part quotas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelabelContext {
    /// Per part, the vertex dropped by the trim (`None` for parts that were
    /// already odd-sized).
    pub removed_vertices: Vec<Option<usize>>,
    /// `new_to_old[v - 1]` is the original id of relabeled vertex `v`;
    /// strictly increasing, so relabeling preserves the cycle order.
    pub new_to_old: Vec<usize>,
    /// Per-part quotas `r_i = (|V'_i| - 1) / 2`.
    pub r: Vec<usize>,
    /// Total quota; the relabeled cycle has `2k + m` vertices.
    pub k: usize,
}

impl RelabelContext {
    /// Structural consistency with the cycle the context claims to trim.
    pub fn validate_against(&self, source: &CyclePartitionInstance) -> Result<()> {
        let m = source.m();
        if self.r.len() != m || self.removed_vertices.len() != m {
            return Err(Error::instance(format!(
                "relabel context has {} quotas and {} removals for {m} parts",
                self.r.len(),
                self.removed_vertices.len()
            )));
        }
        let k: usize = self.r.iter().sum();
        if self.k != k {
            return Err(Error::instance(format!(
                "relabel context claims k={}, quotas sum to {k}",
                self.k
            )));
        }
        if self.new_to_old.len() != 2 * k + m {
            return Err(Error::instance(format!(
                "relabeled cycle should have 2k+m={} vertices, map has {}",
                2 * k + m,
                self.new_to_old.len()
            )));
        }
        let n = source.n();
        for w in self.new_to_old.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::instance(
                    "relabeling map must be strictly increasing",
                ));
            }
        }
        if let Some(&last) = self.new_to_old.last() {
            if last > n || self.new_to_old[0] < 1 {
                return Err(Error::instance(format!(
                    "relabeling map leaves the vertex range [1, {n}]"
                )));
            }
        }
        let mut removed_count = 0usize;
        for (i, removed) in self.removed_vertices.iter().enumerate() {
            if let Some(v) = removed {
                removed_count += 1;
                if source.part_of(*v)? != i + 1 {
                    return Err(Error::instance(format!(
                        "removed vertex {v} is not in part {}",
                        i + 1
                    )));
                }
                if self.new_to_old.binary_search(v).is_ok() {
                    return Err(Error::instance(format!(
                        "vertex {v} is both removed and relabeled"
                    )));
                }
            }
        }
        if self.new_to_old.len() + removed_count != n {
            return Err(Error::instance(format!(
                "{} kept plus {removed_count} removed vertices do not cover [{n}]",
                self.new_to_old.len()
            )));
        }
        // Per part, the survivors must realize the announced quota.
        let mut kept = vec![0usize; m];
        for &old in &self.new_to_old {
            kept[source.part_of(old)? - 1] += 1;
        }
        for (i, (&have, &quota)) in kept.iter().zip(&self.r).enumerate() {
            if have != 2 * quota + 1 {
                return Err(Error::instance(format!(
                    "part {} keeps {have} vertices, quota r={quota} needs {}",
                    i + 1,
                    2 * quota + 1
                )));
            }
        }
        Ok(())
    }
}

/// Evaluable coloring of the stable `k`-subsets of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ColoringOracle {
    /// Explicit finite table.
    Table(ColorTable),
    /// Quota rule over a trimmed partitioned cycle: the color of `S` is the
    /// first part whose quota `r_i` its pullback exceeds, and `m + 1` when no
    /// part is overfull.
    SchrijverFromFisc {
        source: CyclePartitionInstance,
        context: RelabelContext,
    },
}

impl ColoringOracle {
    pub fn table(
        n: usize,
        k: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, usize)>,
    ) -> Result<Self> {
        Ok(ColoringOracle::Table(ColorTable::new(n, k, entries)?))
    }

    pub fn schrijver_from_fisc(
        source: CyclePartitionInstance,
        context: RelabelContext,
    ) -> Result<Self> {
        context.validate_against(&source)?;
        Ok(ColoringOracle::SchrijverFromFisc { source, context })
    }

    /// `(n, k)` of the colored graph.
    pub fn dimensions(&self) -> Option<(usize, usize)> {
        match self {
            ColoringOracle::Table(t) => Some((t.n, t.k)),
            ColoringOracle::SchrijverFromFisc { context, .. } => {
                Some((context.new_to_old.len(), context.k))
            }
        }
    }

    /// Deep consistency check; deserialization validates tables on its own,
    /// but derived descriptors assembled by hand can lie about their context.
    pub fn validate(&self) -> Result<()> {
        match self {
            ColoringOracle::Table(_) => Ok(()),
            ColoringOracle::SchrijverFromFisc { source, context } => {
                context.validate_against(source)
            }
        }
    }

    pub fn color(&self, s: &StableKSubset) -> Result<usize> {
        if let Some((n, k)) = self.dimensions() {
            if s.n() != n || s.k() != k {
                return Err(Error::usage(format!(
                    "queried {s} on a coloring of stable {k}-subsets of [{n}]"
                )));
            }
        }
        match self {
            ColoringOracle::Table(t) => t.lookup(s),
            ColoringOracle::SchrijverFromFisc { source, context } => {
                color_via_quotas(source, context, s)
            }
        }
    }
}

/// Color rule of the cycle-to-coloring reduction: pull the subset back to the
/// original vertex ids, count per part, and report the first overfull part,
/// defaulting to `m + 1`.
fn color_via_quotas(
    source: &CyclePartitionInstance,
    context: &RelabelContext,
    s: &StableKSubset,
) -> Result<usize> {
    let m = source.m();
    if context.r.len() != m {
        return Err(Error::instance(format!(
            "relabel context has {} quotas for {m} parts",
            context.r.len()
        )));
    }
    let mut counts = vec![0usize; m];
    for &v in s.elements() {
        let old = context.new_to_old.get(v - 1).copied().ok_or_else(|| {
            Error::usage(format!("vertex {v} outside the relabeled cycle"))
        })?;
        counts[source.part_of(old)? - 1] += 1;
    }
    for (i, (&have, &quota)) in counts.iter().zip(&context.r).enumerate() {
        if have > quota {
            return Ok(i + 1);
        }
    }
    Ok(m + 1)
}

/// Evaluable antipodal labeling of nonzero sign vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LambdaOracle {
    /// Explicit finite table.
    Table(LambdaTable),
    /// Two-case rule over a colored graph: low alternation maps to the signed
    /// alternation count; high alternation truncates to an alternating core
    /// and compares the colors of its two supports.
    OtuckerFromSchrijver { source: SchrijverInstance },
    /// Largest-overfull-part rule over a partitioned cycle.
    OtuckerFromFsplitc { source: CyclePartitionInstance },
}

impl LambdaOracle {
    pub fn table(n: usize, entries: impl IntoIterator<Item = (SignVector, i64)>) -> Result<Self> {
        Ok(LambdaOracle::Table(LambdaTable::new(n, entries)?))
    }

    pub fn from_schrijver(source: SchrijverInstance) -> Self {
        LambdaOracle::OtuckerFromSchrijver { source }
    }

    /// Rejects `n = m`: with every part a singleton the rule's label range
    /// collapses through zero, and the trivial empty split already solves the
    /// source problem.
    pub fn from_fsplitc(source: CyclePartitionInstance) -> Result<Self> {
        if source.n() == source.m() {
            return Err(Error::Degenerate(format!(
                "all {} parts are singletons; the empty split solves this instance directly",
                source.m()
            )));
        }
        Ok(LambdaOracle::OtuckerFromFsplitc { source })
    }

    /// Length of the labeled vectors.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            LambdaOracle::Table(t) => Some(t.n),
            LambdaOracle::OtuckerFromSchrijver { source } => Some(source.n()),
            LambdaOracle::OtuckerFromFsplitc { source } => Some(source.n()),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            LambdaOracle::Table(_) | LambdaOracle::OtuckerFromSchrijver { .. } => Ok(()),
            LambdaOracle::OtuckerFromFsplitc { source } => {
                if source.n() == source.m() {
                    Err(Error::Degenerate(
                        "labeling over an all-singleton partition is degenerate".into(),
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn label(&self, x: &SignVector) -> Result<i64> {
        if let Some(n) = self.dimension() {
            if x.len() != n {
                return Err(Error::usage(format!(
                    "queried a vector of length {} on a labeling of length {n}",
                    x.len()
                )));
            }
        }
        if x.is_zero() {
            return Err(Error::domain("labels are defined on nonzero vectors only"));
        }
        match self {
            LambdaOracle::Table(t) => t.lookup(x),
            LambdaOracle::OtuckerFromSchrijver { source } => label_via_colors(source, x),
            LambdaOracle::OtuckerFromFsplitc { source } => label_via_parts(source, x),
        }
    }
}

fn sign_of_first(x: &SignVector) -> Result<i64> {
    match x.first_nonzero() {
        Some(Sign::Plus) => Ok(1),
        Some(Sign::Minus) => Ok(-1),
        _ => Err(Error::domain("labels are defined on nonzero vectors only")),
    }
}

/// Label rule of the coloring-to-labeling reduction. Below the alternation
/// threshold `2k` the label is the signed alternation count; at or above it,
/// the truncation `A_2k(x)` has stable supports of size `k` each, and the
/// strictly smaller of their colors wins, ties falling through to the signed
/// maximum label.
fn label_via_colors(source: &SchrijverInstance, x: &SignVector) -> Result<i64> {
    let n = source.n();
    let k = source.k();
    let sgn = sign_of_first(x)?;
    let alt = x.alt();
    if alt <= 2 * k - 1 {
        return Ok(sgn * alt as i64);
    }
    let z = x.truncate_alternation(2 * k)?;
    let make = |support: std::collections::BTreeSet<usize>| {
        StableKSubset::new(n, support.into_iter().collect()).map_err(|e| {
            Error::inconsistent(format!(
                "support of a {}-alternating truncation should be stable: {e}",
                2 * k
            ))
        })
    };
    let zp = make(z.support_plus())?;
    let zm = make(z.support_minus())?;
    let cp = source.color_of(&zp)?;
    let cm = source.color_of(&zm)?;
    Ok(match cp.cmp(&cm) {
        Ordering::Less => (cp + 2 * k - 1) as i64,
        Ordering::Greater => -((cm + 2 * k - 1) as i64),
        Ordering::Equal => sgn * (n as i64 - 1),
    })
}

/// Which parts a vector overfills, and how. `HalfHalf` means both supports
/// hold exactly half the part (the part is fully covered and evenly split);
/// `Exceeds` means one support alone holds more than half.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Overfull {
    HalfHalf,
    Exceeds(Sign),
}

pub(crate) fn overfull_parts(
    source: &CyclePartitionInstance,
    x: &SignVector,
) -> Vec<(usize, Overfull)> {
    let m = source.m();
    let sizes = source.part_sizes();
    let mut plus = vec![0usize; m];
    let mut minus = vec![0usize; m];
    for (idx, &s) in x.entries().iter().enumerate() {
        let part = source.part_of_slice()[idx];
        match s {
            Sign::Plus => plus[part - 1] += 1,
            Sign::Minus => minus[part - 1] += 1,
            Sign::Zero => {}
        }
    }
    let mut out = Vec::new();
    for i in 0..m {
        let size = sizes[i];
        if 2 * plus[i] > size {
            out.push((i + 1, Overfull::Exceeds(Sign::Plus)));
        } else if 2 * minus[i] > size {
            out.push((i + 1, Overfull::Exceeds(Sign::Minus)));
        } else if 2 * plus[i] == size && 2 * minus[i] == size {
            out.push((i + 1, Overfull::HalfHalf));
        }
    }
    out
}

/// Label rule of the split-to-labeling reduction. A vector that overfills no
/// part gets its signed alternation count; otherwise the largest overfull
/// part `i` fixes the magnitude `i + n - m - 1`, signed by the exceeding side
/// or, in the evenly split case, by the side owning the part's smallest
/// covered vertex.
fn label_via_parts(source: &CyclePartitionInstance, x: &SignVector) -> Result<i64> {
    let n = source.n();
    let m = source.m();
    if n == m {
        return Err(Error::Degenerate(
            "labeling over an all-singleton partition is degenerate".into(),
        ));
    }
    let Some(&(part, how)) = overfull_parts(source, x).last() else {
        return Ok(sign_of_first(x)? * x.alt() as i64);
    };
    let magnitude = (part + n - m - 1) as i64;
    let positive = match how {
        Overfull::Exceeds(side) => side == Sign::Plus,
        Overfull::HalfHalf => {
            let first_covered = x
                .entries()
                .iter()
                .zip(source.part_of_slice())
                .find(|&(&s, &p)| p == part && !s.is_zero())
                .map(|(&s, _)| s);
            first_covered == Some(Sign::Plus)
        }
    };
    Ok(if positive { magnitude } else { -magnitude })
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;
    use crate::sign::enumerate_stable_k_subsets;

    /// Table oracle sending every stable `k`-subset of `[n]` to `color`;
    /// empty when no such subsets exist.
    pub(crate) fn constant_coloring(n: usize, k: usize, color: usize) -> ColoringOracle {
        let entries: Vec<(Vec<usize>, usize)> = enumerate_stable_k_subsets(n, k)
            .map(|all| {
                all.into_iter()
                    .map(|s| (s.elements().to_vec(), color))
                    .collect()
            })
            .unwrap_or_default();
        ColoringOracle::table(n, k, entries).unwrap()
    }

    /// `+1`/`-1` by the first nonzero entry, materialized as a table.
    pub(crate) fn sign_of_first_nonzero(n: usize) -> LambdaOracle {
        let entries = crate::sign::testutil::all_vectors(n)
            .into_iter()
            .filter(|v| !v.is_zero())
            .map(|v| {
                let s = if v.first_nonzero() == Some(Sign::Plus) {
                    1
                } else {
                    -1
                };
                (v, s)
            });
        LambdaOracle::table(n, entries).unwrap()
    }

    pub(crate) fn table_lambda(
        n: usize,
        pairs: impl IntoIterator<Item = (SignVector, i64)>,
    ) -> LambdaOracle {
        LambdaOracle::table(n, pairs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sign::testutil::{all_vectors, sv};
    use crate::sign::enumerate_stable_k_subsets;
    use tests_support::constant_coloring;

    fn subset(n: usize, elements: &[usize]) -> StableKSubset {
        StableKSubset::new(n, elements.to_vec()).unwrap()
    }

    fn cyc(n: usize, parts: &[Vec<usize>]) -> CyclePartitionInstance {
        CyclePartitionInstance::from_parts(n, parts).unwrap()
    }

    fn identity_context(m: usize, n: usize, r: Vec<usize>) -> RelabelContext {
        let k = r.iter().sum();
        RelabelContext {
            removed_vertices: vec![None; m],
            new_to_old: (1..=n).collect(),
            r,
            k,
        }
    }

    #[test]
    fn color_table_lookup_and_missing_entry() {
        let oracle = ColoringOracle::table(6, 2, vec![(vec![1, 3], 1), (vec![2, 5], 2)]).unwrap();
        assert_eq!(oracle.dimensions(), Some((6, 2)));
        assert_eq!(oracle.color(&subset(6, &[1, 3])).unwrap(), 1);
        assert_eq!(oracle.color(&subset(6, &[2, 5])).unwrap(), 2);
        match oracle.color(&subset(6, &[1, 4])) {
            Err(Error::OracleViolation { query, .. }) => assert_eq!(query, "{1,4}"),
            other => panic!("expected oracle violation, got {other:?}"),
        }
        // Dimension mismatch is a usage error, not a violation.
        assert!(matches!(
            oracle.color(&subset(8, &[1, 3])),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn table_construction_rejects_malformed_input() {
        // Duplicate sets, even with equal colors.
        assert!(ColoringOracle::table(6, 2, vec![(vec![1, 3], 1), (vec![3, 1], 1)]).is_err());
        // Entry of the wrong size.
        assert!(ColoringOracle::table(6, 2, vec![(vec![1, 3, 5], 1)]).is_err());
        // Unstable entry.
        assert!(ColoringOracle::table(6, 2, vec![(vec![1, 2], 1)]).is_err());
        // Above the table size guard.
        assert!(ColoringOracle::table(13, 2, Vec::new()).is_err());
        assert!(LambdaOracle::table(13, Vec::new()).is_err());
        // Zero vector and duplicates in label tables.
        assert!(LambdaOracle::table(2, vec![(sv("00"), 1)]).is_err());
        assert!(LambdaOracle::table(2, vec![(sv("+0"), 1), (sv("+0"), 2)]).is_err());
        // Length mismatch.
        assert!(LambdaOracle::table(3, vec![(sv("+0"), 1)]).is_err());
    }

    #[test]
    fn lambda_table_lookup() {
        let oracle = LambdaOracle::table(2, vec![(sv("+0"), 1), (sv("-0"), -1)]).unwrap();
        assert_eq!(oracle.dimension(), Some(2));
        assert_eq!(oracle.label(&sv("+0")).unwrap(), 1);
        assert!(matches!(
            oracle.label(&sv("0+")),
            Err(Error::OracleViolation { .. })
        ));
        assert!(matches!(oracle.label(&sv("00")), Err(Error::Domain(_))));
        assert!(matches!(oracle.label(&sv("+00")), Err(Error::Usage(_))));
    }

    #[test]
    fn quota_coloring_frozen_examples() {
        // Two odd parts of three: nothing trimmed, quotas r = (1, 1).
        let source = cyc(6, &[vec![1, 2, 3], vec![4, 5, 6]]);
        let ctx = identity_context(2, 6, vec![1, 1]);
        let oracle = ColoringOracle::schrijver_from_fisc(source, ctx).unwrap();
        assert_eq!(oracle.dimensions(), Some((6, 2)));
        // Two elements in the first part exceed its quota of one.
        assert_eq!(oracle.color(&subset(6, &[1, 3])).unwrap(), 1);
        // One element per part: no quota exceeded, default color m+1.
        assert_eq!(oracle.color(&subset(6, &[1, 4])).unwrap(), 3);
        assert_eq!(oracle.color(&subset(6, &[4, 6])).unwrap(), 2);
    }

    #[test]
    fn quota_coloring_range_is_always_within_palette() {
        let source = cyc(7, &[vec![1, 2, 3, 4, 5], vec![6], vec![7]]);
        // Part sizes 5, 1, 1: quotas (2, 0, 0), k = 2, n' = 2k + m = 7.
        let ctx = identity_context(3, 7, vec![2, 0, 0]);
        let oracle = ColoringOracle::schrijver_from_fisc(source, ctx).unwrap();
        let (n, k) = oracle.dimensions().unwrap();
        let palette = n - 2 * k + 1;
        for s in enumerate_stable_k_subsets(n, k).unwrap() {
            let c = oracle.color(&s).unwrap();
            assert!(c >= 1 && c <= palette, "color {c} for {s}");
        }
    }

    #[test]
    fn relabel_context_validation_catches_lies() {
        let source = cyc(6, &[vec![1, 2, 3], vec![4, 5, 6]]);
        let good = identity_context(2, 6, vec![1, 1]);
        assert!(good.validate_against(&source).is_ok());

        let mut wrong_k = good.clone();
        wrong_k.k = 3;
        assert!(wrong_k.validate_against(&source).is_err());

        let mut wrong_len = good.clone();
        wrong_len.new_to_old.pop();
        assert!(wrong_len.validate_against(&source).is_err());

        let mut not_increasing = good.clone();
        not_increasing.new_to_old.swap(0, 1);
        assert!(not_increasing.validate_against(&source).is_err());

        let mut wrong_quota = good.clone();
        wrong_quota.r = vec![2, 0];
        assert!(wrong_quota.validate_against(&source).is_err());

        // A removal that is also kept.
        let mut double_booked = good;
        double_booked.removed_vertices[0] = Some(3);
        assert!(double_booked.validate_against(&source).is_err());
    }

    #[test]
    fn color_rule_labeling_low_alternation() {
        let inst = SchrijverInstance::new(6, 2, constant_coloring(6, 2, 1)).unwrap();
        let oracle = LambdaOracle::from_schrijver(inst);
        assert_eq!(oracle.label(&sv("+00000")).unwrap(), 1);
        assert_eq!(oracle.label(&sv("-00000")).unwrap(), -1);
        assert_eq!(oracle.label(&sv("+-+000")).unwrap(), 3);
        assert_eq!(oracle.label(&sv("0-+-00")).unwrap(), -3);
    }

    #[test]
    fn color_rule_labeling_high_alternation() {
        // Single out one subset with a smaller color; everything else ties.
        let mut entries: Vec<(Vec<usize>, usize)> = enumerate_stable_k_subsets(6, 2)
            .unwrap()
            .into_iter()
            .map(|s| (s.elements().to_vec(), 2))
            .collect();
        for e in &mut entries {
            if e.0 == vec![1, 3] {
                e.1 = 1;
            }
        }
        let inst =
            SchrijverInstance::new(6, 2, ColoringOracle::table(6, 2, entries).unwrap()).unwrap();
        let oracle = LambdaOracle::from_schrijver(inst);

        // alt = 4: truncation keeps the vector, supports {1,3} and {2,4}.
        // The plus support's color 1 beats 2, so the label is +(1 + 2k - 1).
        assert_eq!(oracle.label(&sv("+-+-00")).unwrap(), 4);
        // Negation swaps the supports and the sign.
        assert_eq!(oracle.label(&sv("-+-+00")).unwrap(), -4);
        // Supports {2,4} vs {3,5}: both color 2, tie, signed maximum label.
        assert_eq!(oracle.label(&sv("0+-+-0")).unwrap(), 5);
        assert_eq!(oracle.label(&sv("0-+-+0")).unwrap(), -5);
        // A longer vector still truncates to its first four alternations:
        // supports {1,3} and {2,4} again.
        assert_eq!(oracle.label(&sv("+-+-+-")).unwrap(), 4);
    }

    #[test]
    fn color_rule_labeling_is_antipodal_and_in_range_exhaustively() {
        for (n, k) in [(4, 1), (5, 2), (6, 2)] {
            let inst = SchrijverInstance::new(n, k, constant_coloring(n, k, 1)).unwrap();
            let oracle = LambdaOracle::from_schrijver(inst);
            for x in all_vectors(n) {
                if x.is_zero() {
                    continue;
                }
                let v = oracle.label(&x).unwrap();
                assert!(v != 0 && v.unsigned_abs() as usize <= n - 1, "{x} -> {v}");
                assert_eq!(oracle.label(&x.negate()).unwrap(), -v, "at {x}");
            }
        }
    }

    #[test]
    fn part_rule_labeling_frozen_examples() {
        let source = cyc(4, &[vec![1, 2], vec![3, 4]]);
        let oracle = LambdaOracle::from_fsplitc(source).unwrap();
        // Part one evenly split between the supports; its smallest covered
        // vertex 1 carries plus, magnitude 1 + 4 - 2 - 1 = 2.
        assert_eq!(oracle.label(&sv("+-00")).unwrap(), 2);
        assert_eq!(oracle.label(&sv("-+00")).unwrap(), -2);
        // No part overfull: signed alternation count.
        assert_eq!(oracle.label(&sv("+000")).unwrap(), 1);
        assert_eq!(oracle.label(&sv("+0-0")).unwrap(), 2);
        // One side exceeding half a part decides the sign; the later part
        // has the larger magnitude 2 + 4 - 2 - 1 = 3.
        assert_eq!(oracle.label(&sv("++00")).unwrap(), 2);
        assert_eq!(oracle.label(&sv("00--")).unwrap(), -3);
        // Largest overfull part wins.
        assert_eq!(oracle.label(&sv("++--")).unwrap(), -3);
    }

    #[test]
    fn part_rule_labeling_is_antipodal_and_in_range_exhaustively() {
        let instances = [
            cyc(4, &[vec![1, 2], vec![3, 4]]),
            cyc(5, &[vec![1, 2, 3], vec![4, 5]]),
            cyc(6, &[vec![1, 4], vec![2, 5], vec![3, 6]]),
            cyc(5, &[vec![1, 2, 3, 4, 5]]),
        ];
        for source in instances {
            let n = source.n();
            let oracle = LambdaOracle::from_fsplitc(source).unwrap();
            for x in all_vectors(n) {
                if x.is_zero() {
                    continue;
                }
                let v = oracle.label(&x).unwrap();
                assert!(v != 0 && v.unsigned_abs() as usize <= n - 1, "{x} -> {v}");
                assert_eq!(oracle.label(&x.negate()).unwrap(), -v, "at {x}");
            }
        }
    }

    #[test]
    fn part_rule_rejects_all_singleton_partitions() {
        let source = cyc(2, &[vec![1], vec![2]]);
        assert!(matches!(
            LambdaOracle::from_fsplitc(source),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn descriptor_serde_round_trips() {
        let table = ColoringOracle::table(6, 2, vec![(vec![1, 3], 1)]).unwrap();
        let j = serde_json::to_string(&table).unwrap();
        assert_eq!(
            j,
            "{\"kind\":\"table\",\"n\":6,\"k\":2,\"entries\":[{\"set\":[1,3],\"color\":1}]}"
        );
        assert_eq!(serde_json::from_str::<ColoringOracle>(&j).unwrap(), table);

        let source = cyc(6, &[vec![1, 2, 3], vec![4, 5, 6]]);
        let derived =
            ColoringOracle::schrijver_from_fisc(source.clone(), identity_context(2, 6, vec![1, 1]))
                .unwrap();
        let j = serde_json::to_string(&derived).unwrap();
        assert!(j.starts_with("{\"kind\":\"schrijver_from_fisc\""), "{j}");
        assert_eq!(serde_json::from_str::<ColoringOracle>(&j).unwrap(), derived);

        let lambda = LambdaOracle::from_fsplitc(cyc(4, &[vec![1, 2], vec![3, 4]])).unwrap();
        let j = serde_json::to_string(&lambda).unwrap();
        assert!(j.starts_with("{\"kind\":\"otucker_from_fsplitc\""), "{j}");
        assert_eq!(serde_json::from_str::<LambdaOracle>(&j).unwrap(), lambda);

        let inst = SchrijverInstance::new(6, 2, constant_coloring(6, 2, 1)).unwrap();
        let lambda = LambdaOracle::from_schrijver(inst);
        let j = serde_json::to_string(&lambda).unwrap();
        assert!(j.starts_with("{\"kind\":\"otucker_from_schrijver\""), "{j}");
        assert_eq!(serde_json::from_str::<LambdaOracle>(&j).unwrap(), lambda);

        // Malformed tables are rejected at parse time.
        let bad = "{\"kind\":\"table\",\"n\":6,\"k\":2,\"entries\":[{\"set\":[1,2],\"color\":1}]}";
        assert!(serde_json::from_str::<ColoringOracle>(bad).is_err());
    }
}
