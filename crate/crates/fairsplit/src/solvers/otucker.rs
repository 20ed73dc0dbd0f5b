//! Complementary-pair search over antipodally labeled sign vectors.

use super::{check_bound, SolverLimits, SolverReport};
use crate::error::{Error, Result};
use crate::problems::{verify_otucker, OTuckerInstance};
use crate::sign::{Sign, SignVector};
use std::time::Instant;

/// Finds vectors `x ⪯ y` with `λ(x) = -λ(y)`.
///
/// The whole labeling is read up front into a base-3-indexed table (digit
/// order Minus < Zero < Plus, so integer order is lexicographic vector
/// order); a range breach anywhere therefore surfaces before any pair does.
/// The scan then visits the `5^n` comparable pairs ordered by `(y, x)` and
/// returns the first complementary one. For a labeling that is genuinely
/// antipodal into `±[n-1]` a pair always exists; exhausting the scan without
/// one proves the oracle broke that promise.
pub fn brute_otucker(
    inst: &OTuckerInstance,
    limits: &SolverLimits,
) -> Result<SolverReport<(SignVector, SignVector)>> {
    let n = inst.n();
    check_bound("sign vector dimension", n, limits.otucker_max_n)?;
    let start = Instant::now();
    let mut pow3 = vec![1usize; n + 1];
    for i in 1..=n {
        pow3[i] = pow3[i - 1] * 3;
    }
    let total = pow3[n];
    let zero_code = (total - 1) / 2;

    let mut nodes = 0u64;
    let mut labels = vec![0i64; total];
    for code in 0..total {
        if code == zero_code {
            continue;
        }
        labels[code] = inst.label_of(&decode(code, n)?)?;
    }

    for y_code in 0..total {
        if y_code == zero_code {
            continue;
        }
        let y = decode(y_code, n)?;
        let want = -labels[y_code];
        if let Some(x_code) = find_complement(
            y.entries(),
            0,
            0,
            true,
            &pow3,
            &labels,
            zero_code,
            want,
            &mut nodes,
        ) {
            let x = decode(x_code, n)?;
            if !verify_otucker(inst, &x, &y)? {
                return Err(Error::inconsistent(format!(
                    "search accepted ({x}, {y}) but the verifier rejects it"
                )));
            }
            return Ok(SolverReport {
                solution: (x, y),
                nodes_explored: nodes,
                elapsed: start.elapsed(),
            });
        }
    }
    Err(Error::oracle(
        format!("labeling of the nonzero sign vectors in dimension {n}"),
        format!(
            "no pair x ⪯ y with complementary labels among all {total} vectors; \
             an antipodal labeling into ±1..={} always has one",
            n - 1
        ),
    ))
}

fn decode(mut code: usize, n: usize) -> Result<SignVector> {
    let mut entries = vec![Sign::Zero; n];
    for i in (0..n).rev() {
        entries[i] = match code % 3 {
            0 => Sign::Minus,
            1 => Sign::Zero,
            _ => Sign::Plus,
        };
        code /= 3;
    }
    SignVector::new(entries)
}

/// First `x ⪯ y` in lexicographic order with `labels[x] == want`. Walks the
/// subvector tree choosing the smaller sign first at every position.
#[allow(clippy::too_many_arguments)]
fn find_complement(
    y: &[Sign],
    i: usize,
    code: usize,
    all_zero: bool,
    pow3: &[usize],
    labels: &[i64],
    zero_code: usize,
    want: i64,
    nodes: &mut u64,
) -> Option<usize> {
    if i == y.len() {
        *nodes += 1;
        debug_assert_eq!(all_zero, code == zero_code);
        if all_zero || labels[code] != want {
            return None;
        }
        return Some(code);
    }
    let w = pow3[y.len() - 1 - i];
    let next = |digit: usize, zeroing: bool, nodes: &mut u64| {
        find_complement(
            y,
            i + 1,
            code + digit * w,
            all_zero && zeroing,
            pow3,
            labels,
            zero_code,
            want,
            nodes,
        )
    };
    match y[i] {
        Sign::Minus => next(0, false, nodes).or_else(|| next(1, true, nodes)),
        Sign::Zero => next(1, true, nodes),
        Sign::Plus => next(1, true, nodes).or_else(|| next(2, false, nodes)),
    }
}
