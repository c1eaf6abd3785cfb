//! Summation engines: direct summation with caller-supplied tail bounds for
//! absolutely convergent series, and Chebyshev acceleration for alternating
//! series.

use crate::error::{Error, Result};
use crate::reduce::{compensated_sum, sum_range, BLOCK};

/// Default term budget for direct summation.
pub const DEFAULT_MAX_TERMS: u64 = 100_000_000;

/// Term budget for the alternating-series accelerator.
pub const ALTERNATING_MAX_TERMS: u64 = 10_000;

/// Outcome of one summation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumResult {
    pub value: f64,
    pub tail_bound: f64,
    pub terms_used: u64,
}

/// Sums `term(n)` for `n = start, start+1, ...` until the caller's tail
/// bound certifies the remainder below `tol`.
///
/// `tail(n)` must be a non-increasing upper bound on `|sum_{m>n} term(m)|`;
/// the engine does not infer bounds. Fails with a budget error when more
/// than [`DEFAULT_MAX_TERMS`] terms would be needed.
pub fn sum_with_tail(
    start: u64,
    term: impl Fn(u64) -> f64 + Sync,
    tail: impl Fn(u64) -> f64,
    tol: f64,
) -> Result<SumResult> {
    sum_with_tail_bounded(start, term, tail, tol, DEFAULT_MAX_TERMS)
}

/// As [`sum_with_tail`] with an explicit term budget.
pub fn sum_with_tail_bounded(
    start: u64,
    term: impl Fn(u64) -> f64 + Sync,
    tail: impl Fn(u64) -> f64,
    tol: f64,
    max_terms: u64,
) -> Result<SumResult> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be > 0, got {tol}")));
    }
    let limit = start.saturating_add(max_terms.max(1)).saturating_sub(1);

    // geometric probe for the first block-aligned cutoff with tail <= tol,
    // then a binary refinement; tail is non-increasing so this is valid
    let mut hi = start.saturating_add(BLOCK - 1).min(limit);
    loop {
        if tail(hi) <= tol {
            break;
        }
        if hi >= limit {
            return Err(Error::SeriesBudget {
                tail_bound: tail(limit),
                tol,
                terms: limit - start + 1,
            });
        }
        hi = hi
            .saturating_add((hi - start + 1).max(BLOCK))
            .min(limit);
    }
    let mut lo = start;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if tail(mid) <= tol {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let cutoff = hi; // smallest n >= start with tail(n) <= tol

    let value = sum_range(start, cutoff + 1, term);
    Ok(SumResult {
        value,
        tail_bound: tail(cutoff),
        terms_used: cutoff - start + 1,
    })
}

/// Sums the alternating series `sum_{m>=1} (-1)^(m+1) term_abs(m)` by the
/// Chebyshev-weighted acceleration of Cohen, Rodriguez Villegas and Zagier.
///
/// `term_abs` must be eventually monotone decreasing to zero. Uses about
/// `1.31 * digits` terms.
pub fn sum_alternating(term_abs: impl Fn(u64) -> f64, tol: f64) -> Result<SumResult> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be > 0, got {tol}")));
    }
    let digits = (-tol.log10()).ceil().max(1.0);
    let n = ((1.31 * digits).ceil() as u64 + 6).max(20);
    if n > ALTERNATING_MAX_TERMS {
        return Err(Error::SeriesBudget {
            tail_bound: f64::NAN,
            tol,
            terms: n,
        });
    }

    let base = 3.0 + 8.0f64.sqrt();
    let dn = base.powi(n as i32);
    let d = 0.5 * (dn + 1.0 / dn);
    let mut b = -1.0;
    let mut c = -d;
    let mut terms = Vec::with_capacity(n as usize);
    let mut a_max = 0.0f64;
    for k in 0..n {
        c = b - c;
        let a = term_abs(k + 1);
        a_max = a_max.max(a.abs());
        terms.push(c * a);
        let kf = k as f64;
        b = (kf + n as f64) * (kf - n as f64) * b / ((kf + 0.5) * (kf + 1.0));
    }
    let value = compensated_sum(terms.into_iter()) / d;
    Ok(SumResult {
        value,
        tail_bound: 3.0 * a_max / d,
        terms_used: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonpositive_tolerance() {
        assert!(sum_with_tail(1, |_| 0.0, |_| 0.0, 0.0).is_err());
        assert!(sum_alternating(|_| 0.0, -1.0).is_err());
    }

    #[test]
    fn budget_error_when_tail_never_converges() {
        let r = sum_with_tail_bounded(1, |n| 1.0 / n as f64, |_| 1.0, 1e-6, 100_000);
        assert!(matches!(r, Err(Error::SeriesBudget { .. })));
    }

    #[test]
    fn geometric_series_with_exact_tail() {
        // sum 2^-n from n=1 is 1; tail after n is 2^-n
        let r = sum_with_tail(1, |n| 0.5f64.powi(n as i32), |n| 0.5f64.powi(n as i32), 1e-12)
            .unwrap();
        assert!((r.value - 1.0).abs() <= r.tail_bound + 1e-13);
        assert!(r.terms_used >= 1);
        assert!(r.tail_bound <= 1e-12);
    }

    #[test]
    fn alternating_ln2_sanity() {
        let r = sum_alternating(|m| 1.0 / m as f64, 1e-12).unwrap();
        assert!((r.value - 2.0f64.ln()).abs() < 1e-12, "err {}", (r.value - 2.0f64.ln()).abs());
        assert!(r.terms_used <= 40);
    }

    #[test]
    fn alternating_leibniz() {
        let r = sum_alternating(|m| 1.0 / (2.0 * m as f64 - 1.0), 1e-12).unwrap();
        assert!((r.value - std::f64::consts::FRAC_PI_4).abs() < 1e-13);
    }
}
