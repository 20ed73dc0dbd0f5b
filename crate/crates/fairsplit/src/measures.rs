//! Exact measures on `[0,1]` and consensus halving.
//!
//! Probability measures are given by piecewise-constant densities with
//! rational breakpoints and values. Everything in this module is exact
//! big-rational arithmetic; no floating point participates in any
//! comparison.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// One constant block of a density: value `value > 0` on `[lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityBlock {
    pub lo: Rational,
    pub hi: Rational,
    pub value: Rational,
}

impl DensityBlock {
    pub fn mass(&self) -> Rational {
        &self.value * &(&self.hi - &self.lo)
    }
}

/// A probability density on `[0,1]`: finitely many disjoint constant blocks,
/// listed left to right, with strictly positive values and total mass exactly
/// one. Gaps between blocks carry no mass; zero-value blocks are forbidden
/// (a gap already says "no mass here", and unique representations keep
/// serialized instances canonical).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DensityRepr", into = "DensityRepr")]
pub struct PiecewiseConstantDensity {
    blocks: Vec<DensityBlock>,
}

#[derive(Serialize, Deserialize)]
struct DensityRepr {
    blocks: Vec<DensityBlock>,
}

impl From<PiecewiseConstantDensity> for DensityRepr {
    fn from(d: PiecewiseConstantDensity) -> Self {
        DensityRepr { blocks: d.blocks }
    }
}

impl TryFrom<DensityRepr> for PiecewiseConstantDensity {
    type Error = Error;
    fn try_from(r: DensityRepr) -> Result<Self> {
        PiecewiseConstantDensity::new(r.blocks)
    }
}

impl PiecewiseConstantDensity {
    pub fn new(blocks: Vec<DensityBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::instance("density needs at least one block"));
        }
        let zero = Rational::zero();
        let one = Rational::one();
        let mut prev_hi = zero.clone();
        let mut total = Rational::zero();
        for (i, b) in blocks.iter().enumerate() {
            if b.lo < prev_hi || b.lo < zero || b.hi > one {
                return Err(Error::instance(format!(
                    "block {i} [{}, {}] is out of order or outside [0,1]",
                    b.lo, b.hi
                )));
            }
            if b.hi <= b.lo {
                return Err(Error::instance(format!(
                    "block {i} [{}, {}] has nonpositive width",
                    b.lo, b.hi
                )));
            }
            if !b.value.is_positive() {
                return Err(Error::instance(format!(
                    "block {i} has value {}; zero-value blocks are represented by gaps",
                    b.value
                )));
            }
            total = total + b.mass();
            prev_hi = b.hi.clone();
        }
        if total != one {
            return Err(Error::instance(format!(
                "density has total mass {total}, expected 1/1"
            )));
        }
        Ok(PiecewiseConstantDensity { blocks })
    }

    /// The uniform density on `[0,1]`.
    pub fn uniform() -> Self {
        PiecewiseConstantDensity {
            blocks: vec![DensityBlock {
                lo: Rational::zero(),
                hi: Rational::one(),
                value: Rational::one(),
            }],
        }
    }

    pub fn blocks(&self) -> &[DensityBlock] {
        &self.blocks
    }

    /// Measure of `[lo, hi]`: clip each block to the interval and integrate.
    ///
    /// Requires `0 <= lo <= hi <= 1`.
    pub fn mass(&self, lo: &Rational, hi: &Rational) -> Result<Rational> {
        let zero = Rational::zero();
        let one = Rational::one();
        if lo < &zero || hi > &one || lo > hi {
            return Err(Error::usage(format!(
                "mass interval [{lo}, {hi}] must satisfy 0 <= lo <= hi <= 1"
            )));
        }
        let mut total = Rational::zero();
        for b in &self.blocks {
            let clip_lo = b.lo.clone().max(lo.clone());
            let clip_hi = b.hi.clone().min(hi.clone());
            if clip_hi > clip_lo {
                total = total + &b.value * &(clip_hi - clip_lo);
            }
        }
        Ok(total)
    }

    /// Cut the support into left-to-right sub-intervals of mass exactly
    /// `delta`, block by block; a block whose mass is not a multiple of
    /// `delta` ends with one lighter sub-interval, flagged imperfect.
    ///
    /// Returns each sub-interval's midpoint together with its imperfect flag,
    /// in left-to-right order. Requires `delta > 0`.
    pub fn quantile_subdivide(&self, delta: &Rational) -> Result<Vec<(Rational, bool)>> {
        if !delta.is_positive() {
            return Err(Error::usage(format!("delta must be positive, got {delta}")));
        }
        let mut out = Vec::new();
        for b in &self.blocks {
            let mass = b.mass();
            let count = (&mass / delta).ceil_to_usize()?;
            // Constant value inside a block makes equal-mass pieces equal
            // width.
            let full_width = delta / &b.value;
            let half = Rational::new(1, 2).unwrap();
            for j in 0..count {
                let lo = &b.lo + &(&full_width * &Rational::from(j));
                let (hi, imperfect) = if j + 1 == count {
                    let exact = Rational::from(count) * delta.clone() == mass;
                    (b.hi.clone(), !exact)
                } else {
                    (&lo + &full_width, false)
                };
                let mid = (&lo + &hi) * half.clone();
                out.push((mid, imperfect));
            }
        }
        Ok(out)
    }
}

/// Labels for the pieces between consecutive cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PieceLabel {
    Plus,
    Minus,
}

impl PieceLabel {
    pub fn flip(self) -> Self {
        match self {
            PieceLabel::Plus => PieceLabel::Minus,
            PieceLabel::Minus => PieceLabel::Plus,
        }
    }
}

/// Consensus-halving instance: `m` exact measures, a tolerance `eps`, and a
/// cut budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConHalvRepr", into = "ConHalvRepr")]
pub struct ConHalvInstance {
    measures: Vec<PiecewiseConstantDensity>,
    eps: Rational,
    cut_budget: usize,
}

#[derive(Serialize, Deserialize)]
struct ConHalvRepr {
    measures: Vec<PiecewiseConstantDensity>,
    eps: Rational,
    cut_budget: usize,
}

impl From<ConHalvInstance> for ConHalvRepr {
    fn from(i: ConHalvInstance) -> Self {
        ConHalvRepr {
            measures: i.measures,
            eps: i.eps,
            cut_budget: i.cut_budget,
        }
    }
}

impl TryFrom<ConHalvRepr> for ConHalvInstance {
    type Error = Error;
    fn try_from(r: ConHalvRepr) -> Result<Self> {
        ConHalvInstance::new(r.measures, r.eps, r.cut_budget)
    }
}

impl ConHalvInstance {
    pub fn new(
        measures: Vec<PiecewiseConstantDensity>,
        eps: Rational,
        cut_budget: usize,
    ) -> Result<Self> {
        if measures.is_empty() {
            return Err(Error::instance("consensus halving needs m >= 1 measures"));
        }
        if eps.is_negative() {
            return Err(Error::instance(format!("eps must be >= 0, got {eps}")));
        }
        Ok(ConHalvInstance {
            measures,
            eps,
            cut_budget,
        })
    }

    pub fn m(&self) -> usize {
        self.measures.len()
    }

    pub fn measures(&self) -> &[PiecewiseConstantDensity] {
        &self.measures
    }

    pub fn eps(&self) -> &Rational {
        &self.eps
    }

    pub fn cut_budget(&self) -> usize {
        self.cut_budget
    }

    /// Largest block count over the measures; the polynomial size bound the
    /// discretization step depends on.
    pub fn block_bound(&self) -> usize {
        self.measures
            .iter()
            .map(|d| d.blocks().len())
            .max()
            .unwrap_or(0)
    }
}

/// A candidate halving: cuts `0 < c_1 < ... < c_t < 1` and a label for each
/// of the `t + 1` pieces they delimit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CutLabelRepr", into = "CutLabelRepr")]
pub struct CutLabelSolution {
    cuts: Vec<Rational>,
    labels: Vec<PieceLabel>,
}

#[derive(Serialize, Deserialize)]
struct CutLabelRepr {
    cuts: Vec<Rational>,
    labels: Vec<PieceLabel>,
}

impl From<CutLabelSolution> for CutLabelRepr {
    fn from(s: CutLabelSolution) -> Self {
        CutLabelRepr {
            cuts: s.cuts,
            labels: s.labels,
        }
    }
}

impl TryFrom<CutLabelRepr> for CutLabelSolution {
    type Error = Error;
    fn try_from(r: CutLabelRepr) -> Result<Self> {
        CutLabelSolution::new(r.cuts, r.labels)
    }
}

impl CutLabelSolution {
    pub fn new(cuts: Vec<Rational>, labels: Vec<PieceLabel>) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        for w in cuts.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::usage(format!(
                    "cuts must be strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if cuts.iter().any(|c| c <= &zero || c >= &one) {
            return Err(Error::usage("cuts must lie strictly inside (0,1)"));
        }
        if labels.len() != cuts.len() + 1 {
            return Err(Error::usage(format!(
                "{} cuts delimit {} pieces, got {} labels",
                cuts.len(),
                cuts.len() + 1,
                labels.len()
            )));
        }
        Ok(CutLabelSolution { cuts, labels })
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn labels(&self) -> &[PieceLabel] {
        &self.labels
    }

    /// Pieces as `(lo, hi, label)` triples covering `[0,1]`.
    pub fn pieces(&self) -> Vec<(Rational, Rational, PieceLabel)> {
        let mut bounds = Vec::with_capacity(self.cuts.len() + 2);
        bounds.push(Rational::zero());
        bounds.extend(self.cuts.iter().cloned());
        bounds.push(Rational::one());
        bounds
            .windows(2)
            .zip(&self.labels)
            .map(|(w, &l)| (w[0].clone(), w[1].clone(), l))
            .collect()
    }

    /// Signed-side mass of one measure: `(mu(I+), mu(I-))`.
    pub fn side_masses(&self, density: &PiecewiseConstantDensity) -> Result<(Rational, Rational)> {
        let mut plus = Rational::zero();
        let mut minus = Rational::zero();
        for (lo, hi, label) in self.pieces() {
            let m = density.mass(&lo, &hi)?;
            match label {
                PieceLabel::Plus => plus = plus + m,
                PieceLabel::Minus => minus = minus + m,
            }
        }
        Ok((plus, minus))
    }
}

/// Whether `sol` halves every measure of `inst` within `inst.eps`, using at
/// most the instance's cut budget. Exact comparison throughout.
pub fn verify_conhalv(inst: &ConHalvInstance, sol: &CutLabelSolution) -> Result<bool> {
    Ok(conhalv_violation(inst, sol)?.is_none())
}

/// Like [`verify_conhalv`], but names the first violated clause.
pub fn conhalv_violation(inst: &ConHalvInstance, sol: &CutLabelSolution) -> Result<Option<String>> {
    if sol.cuts().len() > inst.cut_budget() {
        return Ok(Some(format!(
            "cut budget exceeded: {} cuts, budget {}",
            sol.cuts().len(),
            inst.cut_budget()
        )));
    }
    for (i, density) in inst.measures().iter().enumerate() {
        let (plus, minus) = sol.side_masses(density)?;
        let imbalance = (plus - minus).abs();
        if imbalance > *inst.eps() {
            return Ok(Some(format!(
                "measure {} imbalance {} exceeds eps {}",
                i + 1,
                imbalance,
                inst.eps()
            )));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn block(lo: Rational, hi: Rational, value: Rational) -> DensityBlock {
        DensityBlock { lo, hi, value }
    }

    #[test]
    fn density_validation() {
        assert!(PiecewiseConstantDensity::new(vec![]).is_err());
        // Mass must be exactly one.
        assert!(PiecewiseConstantDensity::new(vec![block(
            ratio(0, 1),
            ratio(1, 2),
            Rational::one()
        )])
        .is_err());
        // Zero-value block forbidden even if the rest sums to one.
        assert!(PiecewiseConstantDensity::new(vec![
            block(ratio(0, 1), ratio(1, 2), ratio(2, 1)),
            block(ratio(1, 2), ratio(1, 1), ratio(0, 1)),
        ])
        .is_err());
        // Overlap forbidden.
        assert!(PiecewiseConstantDensity::new(vec![
            block(ratio(0, 1), ratio(3, 4), Rational::one()),
            block(ratio(1, 2), ratio(1, 1), Rational::one()),
        ])
        .is_err());
        // Gaps are fine.
        let gappy = PiecewiseConstantDensity::new(vec![
            block(ratio(0, 1), ratio(1, 4), ratio(2, 1)),
            block(ratio(3, 4), ratio(1, 1), ratio(2, 1)),
        ])
        .unwrap();
        assert_eq!(gappy.blocks().len(), 2);
    }

    #[test]
    fn mass_examples() {
        let d = PiecewiseConstantDensity::new(vec![block(ratio(0, 1), ratio(1, 2), ratio(2, 1))])
            .unwrap();
        assert_eq!(d.mass(&ratio(1, 4), &ratio(3, 4)).unwrap(), ratio(1, 2));
        assert_eq!(d.mass(&ratio(0, 1), &ratio(1, 1)).unwrap(), ratio(1, 1));
        assert_eq!(d.mass(&ratio(1, 2), &ratio(1, 1)).unwrap(), ratio(0, 1));
        assert_eq!(
            d.mass(&ratio(1, 3), &ratio(1, 3)).unwrap(),
            Rational::zero()
        );
        assert!(d.mass(&ratio(1, 2), &ratio(1, 4)).is_err());
        assert!(d.mass(&ratio(-1, 2), &ratio(1, 4)).is_err());
        assert!(d.mass(&ratio(1, 2), &ratio(5, 4)).is_err());
    }

    #[test]
    fn mass_is_additive() {
        let d = PiecewiseConstantDensity::new(vec![
            block(ratio(0, 1), ratio(1, 4), ratio(2, 1)),
            block(ratio(1, 2), ratio(1, 1), Rational::one()),
        ])
        .unwrap();
        let probes = [
            (ratio(0, 1), ratio(1, 5), ratio(7, 10)),
            (ratio(1, 8), ratio(3, 8), ratio(5, 8)),
            (ratio(0, 1), ratio(1, 2), ratio(1, 1)),
        ];
        for (a, b, c) in probes {
            let whole = d.mass(&a, &c).unwrap();
            let split = d.mass(&a, &b).unwrap() + d.mass(&b, &c).unwrap();
            assert_eq!(whole, split);
        }
    }

    #[test]
    fn quantile_uniform_quarters() {
        let d = PiecewiseConstantDensity::uniform();
        let subs = d.quantile_subdivide(&ratio(1, 4)).unwrap();
        let want = [ratio(1, 8), ratio(3, 8), ratio(5, 8), ratio(7, 8)];
        assert_eq!(subs.len(), 4);
        for (i, (mid, imperfect)) in subs.iter().enumerate() {
            assert_eq!(*mid, want[i]);
            assert!(!imperfect);
        }
    }

    #[test]
    fn quantile_with_imperfect_tail() {
        let d = PiecewiseConstantDensity::uniform();
        let subs = d.quantile_subdivide(&ratio(2, 5)).unwrap();
        assert_eq!(
            subs,
            vec![
                (ratio(1, 5), false),
                (ratio(3, 5), false),
                (ratio(9, 10), true),
            ]
        );
    }

    #[test]
    fn quantile_respects_block_value() {
        let d = PiecewiseConstantDensity::new(vec![block(ratio(0, 1), ratio(1, 2), ratio(2, 1))])
            .unwrap();
        let subs = d.quantile_subdivide(&ratio(1, 2)).unwrap();
        assert_eq!(subs, vec![(ratio(1, 8), false), (ratio(3, 8), false)]);
        assert!(d.quantile_subdivide(&ratio(0, 1)).is_err());
    }

    #[test]
    fn quantile_masses_sum_to_one() {
        let d = PiecewiseConstantDensity::new(vec![
            block(ratio(0, 1), ratio(1, 4), ratio(2, 1)),
            block(ratio(1, 2), ratio(1, 1), Rational::one()),
        ])
        .unwrap();
        for delta in [ratio(1, 3), ratio(1, 7), ratio(2, 9)] {
            let subs = d.quantile_subdivide(&delta).unwrap();
            let imperfect = subs.iter().filter(|(_, f)| *f).count();
            assert!(imperfect <= d.blocks().len());
            // Midpoint count times delta is within one imperfect piece per
            // block of the unit mass.
            let lower = Rational::one();
            let count = Rational::from(subs.len());
            let total_cap = &count * &delta;
            assert!(total_cap >= lower);
        }
    }

    #[test]
    fn cut_label_validation() {
        assert!(CutLabelSolution::new(
            vec![ratio(1, 2)],
            vec![PieceLabel::Plus, PieceLabel::Minus]
        )
        .is_ok());
        assert!(CutLabelSolution::new(vec![ratio(1, 2)], vec![PieceLabel::Plus]).is_err());
        assert!(CutLabelSolution::new(
            vec![ratio(1, 2), ratio(1, 2)],
            vec![PieceLabel::Plus, PieceLabel::Minus, PieceLabel::Plus]
        )
        .is_err());
        assert!(CutLabelSolution::new(
            vec![ratio(0, 1)],
            vec![PieceLabel::Plus, PieceLabel::Minus]
        )
        .is_err());
    }

    #[test]
    fn verify_conhalv_examples() {
        let inst = ConHalvInstance::new(
            vec![PiecewiseConstantDensity::uniform()],
            ratio(1, 10),
            2,
        )
        .unwrap();
        let exact = CutLabelSolution::new(
            vec![ratio(1, 2)],
            vec![PieceLabel::Plus, PieceLabel::Minus],
        )
        .unwrap();
        assert!(verify_conhalv(&inst, &exact).unwrap());

        let lopsided = CutLabelSolution::new(
            vec![ratio(3, 4)],
            vec![PieceLabel::Plus, PieceLabel::Minus],
        )
        .unwrap();
        assert!(!verify_conhalv(&inst, &lopsided).unwrap());
        let why = conhalv_violation(&inst, &lopsided).unwrap().unwrap();
        assert!(why.contains("imbalance"), "{why}");

        // Budget of zero cuts: the single piece covers everything.
        let tight = ConHalvInstance::new(
            vec![PiecewiseConstantDensity::uniform()],
            ratio(1, 10),
            0,
        )
        .unwrap();
        assert!(!verify_conhalv(&tight, &exact).unwrap());
        let one_piece = CutLabelSolution::new(vec![], vec![PieceLabel::Plus]).unwrap();
        assert!(!verify_conhalv(&tight, &one_piece).unwrap());
        let forgiving = ConHalvInstance::new(
            vec![PiecewiseConstantDensity::uniform()],
            Rational::one(),
            0,
        )
        .unwrap();
        assert!(verify_conhalv(&forgiving, &one_piece).unwrap());
    }

    #[test]
    fn side_masses_are_exact() {
        let d = PiecewiseConstantDensity::new(vec![
            block(ratio(0, 1), ratio(1, 4), ratio(2, 1)),
            block(ratio(1, 2), ratio(1, 1), Rational::one()),
        ])
        .unwrap();
        let sol = CutLabelSolution::new(
            vec![ratio(1, 8), ratio(5, 8)],
            vec![PieceLabel::Plus, PieceLabel::Minus, PieceLabel::Plus],
        )
        .unwrap();
        let (plus, minus) = sol.side_masses(&d).unwrap();
        // [0,1/8): 2 * 1/8 = 1/4 plus; [1/8,5/8): 2*(1/8)+1*(1/8) = 3/8 minus;
        // [5/8,1]: 3/8 plus.
        assert_eq!(plus, ratio(5, 8));
        assert_eq!(minus, ratio(3, 8));
        assert_eq!(plus + minus, Rational::one());
    }

    #[test]
    fn instance_serde_round_trip() {
        let inst = ConHalvInstance::new(
            vec![PiecewiseConstantDensity::uniform()],
            ratio(2, 5),
            2,
        )
        .unwrap();
        let j = serde_json::to_string(&inst).unwrap();
        let back: ConHalvInstance = serde_json::from_str(&j).unwrap();
        assert_eq!(back, inst);
        assert!(j.contains("\"2/5\""));
    }
}
