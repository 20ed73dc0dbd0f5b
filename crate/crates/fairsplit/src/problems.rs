//! The search problems and their verifiers.
//!
//! Every verifier returns `Ok(true)`/`Ok(false)` for a well-posed query and
//! reserves `Err` for malformed input or an oracle caught breaking its
//! contract, so "not a solution" and "the question is broken" never blur.
//! Each `verify_*` has a `*_violation` twin naming the first violated clause;
//! the CLI surfaces those diagnostics.
//!
//! Fairness thresholds compare exact rationals. A count requirement like
//! "at least half the part, minus one" is evaluated as `2*count >= size - 2`
//! over integers, never through floats.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracles::{ColoringOracle, LambdaOracle};
use crate::partition::{CyclePartitionInstance, PathPartitionInstance};
use crate::rational::Rational;
use crate::sign::{SignVector, StableKSubset};

/// An independent set in a partitioned cycle, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndependentSetSolution {
    pub vertices: BTreeSet<usize>,
}

impl IndependentSetSolution {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        IndependentSetSolution {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

impl fmt::Display for IndependentSetSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices)
    }
}

/// Two disjoint independent sets covering most of the instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSolution {
    pub s1: BTreeSet<usize>,
    pub s2: BTreeSet<usize>,
}

impl SplitSolution {
    pub fn new(
        s1: impl IntoIterator<Item = usize>,
        s2: impl IntoIterator<Item = usize>,
    ) -> Self {
        SplitSolution {
            s1: s1.into_iter().collect(),
            s2: s2.into_iter().collect(),
        }
    }

    pub fn covered(&self) -> usize {
        self.s1.len() + self.s2.len()
    }
}

/// Fair-independent-set check: `sol` is independent in the cycle and meets
/// every part `V_i` in at least `|V_i|/2 - 1` vertices.
pub fn verify_fisc(inst: &CyclePartitionInstance, sol: &IndependentSetSolution) -> Result<bool> {
    Ok(fisc_violation(inst, sol)?.is_none())
}

pub fn fisc_violation(
    inst: &CyclePartitionInstance,
    sol: &IndependentSetSolution,
) -> Result<Option<String>> {
    let n = inst.n();
    for &v in &sol.vertices {
        if v < 1 || v > n {
            return Err(Error::usage(format!("vertex {v} outside 1..={n}")));
        }
    }
    if let Some((u, v)) = adjacent_pair_cycle(&sol.vertices, n) {
        return Ok(Some(format!("independence violated at edge ({u},{v})")));
    }
    let counts = part_counts(inst.part_of_slice(), inst.m(), &sol.vertices);
    for (i, (&count, &size)) in counts.iter().zip(&inst.part_sizes()).enumerate() {
        // count >= size/2 - 1  <=>  2*count >= size - 2.
        if 2 * count + 2 < size {
            return Ok(Some(format!(
                "part {} has {} of {} vertices, below half minus one",
                i + 1,
                count,
                size
            )));
        }
    }
    Ok(None)
}

/// Fair-split check on a cycle: `s1`, `s2` disjoint independent sets leaving
/// exactly one vertex of every part uncovered, each side holding at least
/// `(1/2 - eps)|V_i| - 1` vertices of every part.
pub fn verify_fsplitc(
    inst: &CyclePartitionInstance,
    sol: &SplitSolution,
    eps: &Rational,
) -> Result<bool> {
    Ok(fsplitc_violation(inst, sol, eps)?.is_none())
}

pub fn fsplitc_violation(
    inst: &CyclePartitionInstance,
    sol: &SplitSolution,
    eps: &Rational,
) -> Result<Option<String>> {
    if inst.n() % 2 != inst.m() % 2 {
        return Err(Error::instance(format!(
            "cycle splitting requires n = {} and m = {} to share parity",
            inst.n(),
            inst.m()
        )));
    }
    check_split_shape(inst.n(), sol, eps)?;
    if let Some(w) = sol.s1.intersection(&sol.s2).next() {
        return Ok(Some(format!("sets overlap at vertex {w}")));
    }
    for (name, set) in [("S1", &sol.s1), ("S2", &sol.s2)] {
        if let Some((u, v)) = adjacent_pair_cycle(set, inst.n()) {
            return Ok(Some(format!(
                "independence of {name} violated at edge ({u},{v})"
            )));
        }
    }
    let sizes = inst.part_sizes();
    let c1 = part_counts(inst.part_of_slice(), inst.m(), &sol.s1);
    let c2 = part_counts(inst.part_of_slice(), inst.m(), &sol.s2);
    for i in 0..inst.m() {
        if c1[i] + c2[i] != sizes[i] - 1 {
            return Ok(Some(format!(
                "part {} covers {} of {} vertices, expected all but one",
                i + 1,
                c1[i] + c2[i],
                sizes[i]
            )));
        }
    }
    let half = Rational::new(1, 2).unwrap();
    let floor_band = &half - eps;
    for (name, counts) in [("S1", &c1), ("S2", &c2)] {
        for i in 0..inst.m() {
            let need = &floor_band * &Rational::from(sizes[i]) - Rational::one();
            if Rational::from(counts[i]) < need {
                return Ok(Some(format!(
                    "{} holds {} vertices of part {}, below ({})*{} - 1",
                    name,
                    counts[i],
                    i + 1,
                    floor_band,
                    sizes[i]
                )));
            }
        }
    }
    Ok(None)
}

/// Fair-split check on a path: `s1`, `s2` disjoint independent sets covering
/// all but at most `m` vertices, with a two-sided band on `s1` only:
/// `(1/2 - eps)|V_i| - 1 <= |s1 ∩ V_i| <= (1/2 + eps)|V_i|`.
///
/// Every part must have odd size.
pub fn verify_fsplitp(
    inst: &PathPartitionInstance,
    sol: &SplitSolution,
    eps: &Rational,
) -> Result<bool> {
    Ok(fsplitp_violation(inst, sol, eps)?.is_none())
}

pub fn fsplitp_violation(
    inst: &PathPartitionInstance,
    sol: &SplitSolution,
    eps: &Rational,
) -> Result<Option<String>> {
    if !inst.all_parts_odd() {
        return Err(Error::instance(
            "path splitting requires every part to have odd size",
        ));
    }
    check_split_shape(inst.n(), sol, eps)?;
    if let Some(w) = sol.s1.intersection(&sol.s2).next() {
        return Ok(Some(format!("sets overlap at vertex {w}")));
    }
    for (name, set) in [("S1", &sol.s1), ("S2", &sol.s2)] {
        if let Some((u, v)) = adjacent_pair_path(set) {
            return Ok(Some(format!(
                "independence of {name} violated at edge ({u},{v})"
            )));
        }
    }
    if sol.covered() + inst.m() < inst.n() {
        return Ok(Some(format!(
            "only {} of {} vertices covered, may leave at most {}",
            sol.covered(),
            inst.n(),
            inst.m()
        )));
    }
    let sizes = inst.part_sizes();
    let c1 = part_counts(inst.part_of_slice(), inst.m(), &sol.s1);
    let half = Rational::new(1, 2).unwrap();
    for i in 0..inst.m() {
        let size = Rational::from(sizes[i]);
        let lo = (&half - eps) * size.clone() - Rational::one();
        let hi = (&half + eps) * size;
        let have = Rational::from(c1[i]);
        if have < lo || have > hi {
            return Ok(Some(format!(
                "S1 holds {} vertices of part {}, outside [{}, {}]",
                c1[i],
                i + 1,
                lo,
                hi
            )));
        }
    }
    Ok(None)
}

fn check_split_shape(n: usize, sol: &SplitSolution, eps: &Rational) -> Result<()> {
    if eps.is_negative() || *eps > Rational::one() {
        return Err(Error::usage(format!("eps must lie in [0,1], got {eps}")));
    }
    for &v in sol.s1.iter().chain(&sol.s2) {
        if v < 1 || v > n {
            return Err(Error::usage(format!("vertex {v} outside 1..={n}")));
        }
    }
    Ok(())
}

fn part_counts(part_of: &[usize], m: usize, set: &BTreeSet<usize>) -> Vec<usize> {
    let mut counts = vec![0usize; m];
    for &v in set {
        counts[part_of[v - 1] - 1] += 1;
    }
    counts
}

fn adjacent_pair_path(set: &BTreeSet<usize>) -> Option<(usize, usize)> {
    let mut prev: Option<usize> = None;
    for &v in set {
        if prev == Some(v - 1) {
            return Some((v - 1, v));
        }
        prev = Some(v);
    }
    None
}

fn adjacent_pair_cycle(set: &BTreeSet<usize>, n: usize) -> Option<(usize, usize)> {
    if let Some(pair) = adjacent_pair_path(set) {
        return Some(pair);
    }
    if n >= 2 && set.contains(&1) && set.contains(&n) {
        return Some((n, 1));
    }
    None
}

/// A colored Schrijver graph: vertices are the stable `k`-subsets of `[n]`,
/// edges join disjoint subsets, and `coloring` assigns each vertex a color
/// in `1..=(n - 2k + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SchrijverRepr", into = "SchrijverRepr")]
pub struct SchrijverInstance {
    n: usize,
    k: usize,
    coloring: ColoringOracle,
}

#[derive(Serialize, Deserialize)]
struct SchrijverRepr {
    n: usize,
    k: usize,
    coloring: ColoringOracle,
}

impl From<SchrijverInstance> for SchrijverRepr {
    fn from(i: SchrijverInstance) -> Self {
        SchrijverRepr {
            n: i.n,
            k: i.k,
            coloring: i.coloring,
        }
    }
}

impl TryFrom<SchrijverRepr> for SchrijverInstance {
    type Error = Error;
    fn try_from(r: SchrijverRepr) -> Result<Self> {
        SchrijverInstance::new(r.n, r.k, r.coloring)
    }
}

impl SchrijverInstance {
    pub fn new(n: usize, k: usize, coloring: ColoringOracle) -> Result<Self> {
        if k < 1 || n < 2 * k {
            return Err(Error::instance(format!(
                "Schrijver instance needs n >= 2k >= 2, got n={n}, k={k}"
            )));
        }
        if let Some((on, ok)) = coloring.dimensions() {
            if on != n || ok != k {
                return Err(Error::instance(format!(
                    "coloring oracle is for ({on},{ok}), instance is ({n},{k})"
                )));
            }
        }
        coloring.validate()?;
        Ok(SchrijverInstance { n, k, coloring })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of legal colors, `n - 2k + 1`.
    pub fn palette(&self) -> usize {
        self.n - 2 * self.k + 1
    }

    pub fn coloring(&self) -> &ColoringOracle {
        &self.coloring
    }

    /// Query the coloring, enforcing the palette range.
    pub fn color_of(&self, s: &StableKSubset) -> Result<usize> {
        let c = self.color_raw(s)?;
        if c < 1 || c > self.palette() {
            return Err(Error::oracle(
                s.to_string(),
                format!("color {c} outside 1..={}", self.palette()),
            ));
        }
        Ok(c)
    }

    /// Query the coloring without confirming the palette range; callers that
    /// only compare colors for inequality use this to keep proper colorings
    /// answerable.
    pub fn color_raw(&self, s: &StableKSubset) -> Result<usize> {
        if s.n() != self.n || s.k() != self.k {
            return Err(Error::usage(format!(
                "subset {s} is not a stable {}-subset of [{}]",
                self.k, self.n
            )));
        }
        self.coloring.color(s)
    }
}

/// Monochromatic-edge check: `s1`, `s2` disjoint (hence adjacent) and equal
/// in color. The palette range is confirmed only on colors the answer relies
/// on: a pair that already fails disjointness or color equality is plain
/// `false`, while an equal out-of-palette color is an oracle violation. This
/// keeps proper colorings (which necessarily spill one color past the
/// palette) answering `false` on every edge instead of erroring.
pub fn verify_schrijver(
    inst: &SchrijverInstance,
    s1: &StableKSubset,
    s2: &StableKSubset,
) -> Result<bool> {
    Ok(schrijver_violation(inst, s1, s2)?.is_none())
}

pub fn schrijver_violation(
    inst: &SchrijverInstance,
    s1: &StableKSubset,
    s2: &StableKSubset,
) -> Result<Option<String>> {
    let c1 = inst.color_raw(s1)?;
    let c2 = inst.color_raw(s2)?;
    if !s1.is_disjoint_from(s2) {
        return Ok(Some(format!("{s1} and {s2} are not disjoint")));
    }
    if c1 != c2 {
        return Ok(Some(format!("colors differ: {s1} has {c1}, {s2} has {c2}")));
    }
    if c1 < 1 || c1 > inst.palette() {
        return Err(Error::oracle(
            format!("{s1}, {s2}"),
            format!("common color {c1} outside 1..={}", inst.palette()),
        ));
    }
    Ok(None)
}

/// A labeling of the signed hypercube: `lambda` maps every nonzero sign
/// vector of length `n` into `{-(n-1), ..., -1, 1, ..., n-1}` and is
/// expected to be antipodal (`lambda(-x) = -lambda(x)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OTuckerRepr", into = "OTuckerRepr")]
pub struct OTuckerInstance {
    n: usize,
    lambda: LambdaOracle,
}

#[derive(Serialize, Deserialize)]
struct OTuckerRepr {
    n: usize,
    lambda: LambdaOracle,
}

impl From<OTuckerInstance> for OTuckerRepr {
    fn from(i: OTuckerInstance) -> Self {
        OTuckerRepr {
            n: i.n,
            lambda: i.lambda,
        }
    }
}

impl TryFrom<OTuckerRepr> for OTuckerInstance {
    type Error = Error;
    fn try_from(r: OTuckerRepr) -> Result<Self> {
        OTuckerInstance::new(r.n, r.lambda)
    }
}

impl OTuckerInstance {
    pub fn new(n: usize, lambda: LambdaOracle) -> Result<Self> {
        if n < 2 {
            return Err(Error::instance(format!(
                "octahedral instance needs n >= 2 for a nonempty label range, got n={n}"
            )));
        }
        if let Some(on) = lambda.dimension() {
            if on != n {
                return Err(Error::instance(format!(
                    "label oracle is for n={on}, instance is n={n}"
                )));
            }
        }
        lambda.validate()?;
        Ok(OTuckerInstance { n, lambda })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> &LambdaOracle {
        &self.lambda
    }

    /// Query the labeling, enforcing the `+-[n-1]` range.
    pub fn label_of(&self, x: &SignVector) -> Result<i64> {
        if x.len() != self.n {
            return Err(Error::usage(format!(
                "vector {x} has length {}, instance has n={}",
                x.len(),
                self.n
            )));
        }
        if x.is_zero() {
            return Err(Error::domain("labels are defined on nonzero vectors only"));
        }
        let v = self.lambda.label(x)?;
        let bound = (self.n - 1) as i64;
        if v == 0 || v.abs() > bound {
            return Err(Error::oracle(
                x.to_string(),
                format!("label {v} outside +-1..={bound}"),
            ));
        }
        Ok(v)
    }
}

/// Complementary-pair check: `x` precedes `y` and `lambda(x) = -lambda(y)`.
/// Antipodality of the labeling is spot-checked on the queried points, and a
/// breach is an oracle violation rather than a plain `false`.
pub fn verify_otucker(inst: &OTuckerInstance, x: &SignVector, y: &SignVector) -> Result<bool> {
    Ok(otucker_violation(inst, x, y)?.is_none())
}

pub fn otucker_violation(
    inst: &OTuckerInstance,
    x: &SignVector,
    y: &SignVector,
) -> Result<Option<String>> {
    let lx = inst.label_of(x)?;
    let ly = inst.label_of(y)?;
    for (v, lv) in [(x, lx), (y, ly)] {
        let flipped = inst.label_of(&v.negate())?;
        if flipped != -lv {
            return Err(Error::oracle(
                v.to_string(),
                format!("labeling is not antipodal: value {lv} but {flipped} at the negation"),
            ));
        }
    }
    if !x.precedes(y)? {
        return Ok(Some(format!("{x} does not precede {y}")));
    }
    if lx != -ly {
        return Ok(Some(format!(
            "labels are not complementary: {lx} and {ly}"
        )));
    }
    Ok(None)
}
