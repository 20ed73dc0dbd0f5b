//! Sign vectors, alternation, and stable subsets of a cycle.
//!
//! A sign vector is an element of `{+,-,0}^n` read as a pair of disjoint
//! subsets of `[n]` (the positive and negative supports). The operations here
//! are the combinatorial core behind the Tucker-style reductions:
//!
//! * [`SignVector::alt`] measures the longest alternating subsequence of the
//!   nonzero entries;
//! * [`SignVector::reduce_to_alternating`] keeps one witness of that
//!   alternation and zeroes everything else;
//! * [`SignVector::truncate_alternation`] further truncates the witness to a
//!   prescribed alternation length.
//!
//! Vertices and positions are 1-based everywhere in the public API.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One entry of a sign vector. The derived order `Minus < Zero < Plus` is the
/// entry order under which vectors compare lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    fn from_char(c: char) -> Result<Sign> {
        match c {
            '-' => Ok(Sign::Minus),
            '0' => Ok(Sign::Zero),
            '+' => Ok(Sign::Plus),
            other => Err(Error::usage(format!(
                "invalid sign character {other:?}, expected '+', '-' or '0'"
            ))),
        }
    }
}

/// Element of `{+,-,0}^n`, `n >= 1`. Serializes as a string like `"+-0+"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::usage("sign vector must have length >= 1"));
        }
        Ok(SignVector(entries))
    }

    /// The all-zero vector of length `n`.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![Sign::Zero; n])
    }

    /// Length `n`; at least 1 by construction.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Sign] {
        &self.0
    }

    /// Entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> Result<Sign> {
        self.0
            .get(i.wrapping_sub(1))
            .copied()
            .ok_or_else(|| Error::usage(format!("position {i} out of range 1..={}", self.len())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|s| s.is_zero())
    }

    pub fn first_nonzero(&self) -> Option<Sign> {
        self.0.iter().copied().find(|s| !s.is_zero())
    }

    /// 1-based positions carrying `+`.
    pub fn support_plus(&self) -> BTreeSet<usize> {
        self.support_of(Sign::Plus)
    }

    /// 1-based positions carrying `-`.
    pub fn support_minus(&self) -> BTreeSet<usize> {
        self.support_of(Sign::Minus)
    }

    fn support_of(&self, which: Sign) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == which)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn negate(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.flip()).collect())
    }

    /// Whether every nonzero entry of `self` agrees with `other`. This is the
    /// partial order under which the hypercube labelings are monotone.
    pub fn precedes(&self, other: &SignVector) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::usage(format!(
                "length mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .all(|(&a, &b)| a.is_zero() || a == b))
    }

    /// Length of the longest alternating subsequence of the nonzero entries.
    /// Zero exactly for the all-zero vector.
    ///
    /// Computed by a linear scan: one plus the number of sign changes along
    /// the nonzero entries, which is a classical exchange argument away from
    /// the subsequence definition (cross-checked exhaustively in tests).
    pub fn alt(&self) -> usize {
        let mut count = 0usize;
        let mut last: Option<Sign> = None;
        for &s in &self.0 {
            if s.is_zero() {
                continue;
            }
            if last != Some(s) {
                count += 1;
                last = Some(s);
            }
        }
        count
    }

    /// Zeroes every nonzero entry that repeats the previous kept sign,
    /// leaving one canonical alternating witness: the first nonzero entry is
    /// kept, and afterwards a nonzero entry is kept iff it differs from the
    /// last kept one.
    ///
    /// The result precedes `self`, has the same `alt`, equals `alt` in
    /// support size, and its supports are stable (no two consecutive
    /// positions). Errors on the all-zero vector.
    pub fn reduce_to_alternating(&self) -> Result<SignVector> {
        if self.is_zero() {
            return Err(Error::domain(
                "alternating reduction is undefined on the all-zero vector",
            ));
        }
        let mut out = vec![Sign::Zero; self.len()];
        let mut last: Option<Sign> = None;
        for (i, &s) in self.0.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            if last != Some(s) {
                out[i] = s;
                last = Some(s);
            }
        }
        Ok(SignVector(out))
    }

    /// [`reduce_to_alternating`](Self::reduce_to_alternating), then zero the
    /// last `alt(self) - r` kept entries so exactly `r` survive.
    ///
    /// Requires `0 <= r <= alt(self)` and a nonzero vector.
    pub fn truncate_alternation(&self, r: usize) -> Result<SignVector> {
        let reduced = self.reduce_to_alternating()?;
        let alt = self.alt();
        if r > alt {
            return Err(Error::domain(format!(
                "cannot truncate to alternation {r}: vector only alternates {alt} times"
            )));
        }
        let mut out = reduced.0;
        let mut kept = 0usize;
        for s in out.iter_mut() {
            if s.is_zero() {
                continue;
            }
            kept += 1;
            if kept > r {
                *s = Sign::Zero;
            }
        }
        Ok(SignVector(out))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s.chars().map(Sign::from_char).collect::<Result<Vec<_>>>()?;
        SignVector::new(entries)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether `elements` (a subset of `[n]`) contains no two cyclically
/// consecutive numbers, `n` and `1` included.
pub fn is_stable(elements: &BTreeSet<usize>, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::usage("ground set [n] needs n >= 1"));
    }
    for &v in elements {
        if v < 1 || v > n {
            return Err(Error::usage(format!("element {v} outside 1..={n}")));
        }
    }
    Ok(elements.iter().all(|&v| {
        let succ = v % n + 1;
        !elements.contains(&succ)
    }))
}

/// A `k`-subset of `[n]` with no two cyclically consecutive elements.
/// `k >= 1` and `n >= 2k` always hold.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "StableKSubsetRepr", into = "StableKSubsetRepr")]
pub struct StableKSubset {
    n: usize,
    elements: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct StableKSubsetRepr {
    n: usize,
    elements: Vec<usize>,
}

impl From<StableKSubset> for StableKSubsetRepr {
    fn from(s: StableKSubset) -> Self {
        StableKSubsetRepr {
            n: s.n,
            elements: s.elements,
        }
    }
}

impl TryFrom<StableKSubsetRepr> for StableKSubset {
    type Error = Error;

    fn try_from(r: StableKSubsetRepr) -> Result<Self> {
        StableKSubset::new(r.n, r.elements)
    }
}

impl StableKSubset {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let k = elements.len();
        if k == 0 {
            return Err(Error::usage("stable subset must be nonempty"));
        }
        if n < 2 * k {
            return Err(Error::usage(format!(
                "no stable {k}-subset fits in [{n}]: need n >= 2k"
            )));
        }
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if !is_stable(&set, n)? {
            return Err(Error::usage(format!(
                "{elements:?} contains cyclically consecutive elements of [{n}]"
            )));
        }
        Ok(StableKSubset { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    /// Sorted ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    pub fn is_disjoint_from(&self, other: &StableKSubset) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.elements.len() && j < other.elements.len() {
            match self.elements[i].cmp(&other.elements[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

/// All stable `k`-subsets of `[n]` in lexicographic order of their sorted
/// element lists.
pub fn enumerate_stable_k_subsets(n: usize, k: usize) -> Result<Vec<StableKSubset>> {
    if k < 1 || n < 2 * k {
        return Err(Error::usage(format!(
            "stable {k}-subsets of [{n}] need n >= 2k >= 2"
        )));
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    // Gap >= 2 between chosen elements; if 1 is chosen, n is excluded.
    fn rec(n: usize, k: usize, next_min: usize, cur: &mut Vec<usize>, out: &mut Vec<StableKSubset>) {
        if cur.len() == k {
            out.push(StableKSubset {
                n,
                elements: cur.clone(),
            });
            return;
        }
        let hi = if !cur.is_empty() && cur[0] == 1 { n - 1 } else { n };
        for v in next_min..=hi {
            // Remaining picks must still fit with gaps of two.
            let left = k - cur.len() - 1;
            if v + 2 * left > hi {
                break;
            }
            cur.push(v);
            rec(n, k, v + 2, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    Ok(out)
}

/// How many stable `k`-subsets `[n]` has, without enumerating:
/// `n/(n-k) * C(n-k, k)`.
pub fn count_stable_k_subsets(n: usize, k: usize) -> Result<usize> {
    if k < 1 || n < 2 * k {
        return Err(Error::usage(format!(
            "stable {k}-subsets of [{n}] need n >= 2k >= 2"
        )));
    }
    // binomial with u128 intermediates; instance sizes keep this tiny.
    let binom = |a: usize, b: usize| -> u128 {
        if b > a {
            return 0;
        }
        let mut r: u128 = 1;
        for i in 0..b {
            r = r * (a - i) as u128 / (i + 1) as u128;
        }
        r
    };
    let total = binom(n - k, k) * n as u128 / (n - k) as u128;
    usize::try_from(total).map_err(|_| Error::usage("stable subset count overflows usize"))
}

impl fmt::Display for StableKSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
