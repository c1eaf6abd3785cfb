//! Deterministic compensated reduction.
//!
//! Every sum in this crate runs through the same fixed blocking scheme:
//! the index range is cut into blocks of [`BLOCK`] terms, each block is
//! accumulated with Neumaier compensation, and the block sums are combined
//! in block order. The parallel path distributes blocks over threads and
//! collects them back in index order, so the sequential and parallel
//! builds produce bit-identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Terms per reduction block.
pub const BLOCK: u64 = 1 << 14;

/// Neumaier-compensated sum of an iterator, in iteration order.
pub fn compensated_sum(iter: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for x in iter {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn block_bounds(lo: u64, hi: u64, block: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    let mut a = lo;
    while a < hi {
        let b = (a + block).min(hi);
        v.push((a, b));
        a = b;
    }
    v
}

/// Sum of `f(n)` for `n` in `lo..hi`, sequential blocked reduction.
pub fn sum_range_seq(lo: u64, hi: u64, f: impl Fn(u64) -> f64) -> f64 {
    let partials: Vec<f64> = block_bounds(lo, hi, BLOCK)
        .into_iter()
        .map(|(a, b)| compensated_sum((a..b).map(&f)))
        .collect();
    compensated_sum(partials.into_iter())
}

/// Sum of `f(n)` for `n` in `lo..hi`, blocks distributed over threads and
/// recombined in index order.
#[cfg(feature = "parallel")]
pub fn sum_range_par(lo: u64, hi: u64, f: impl Fn(u64) -> f64 + Sync) -> f64 {
    let partials: Vec<f64> = block_bounds(lo, hi, BLOCK)
        .into_par_iter()
        .map(|(a, b)| compensated_sum((a..b).map(&f)))
        .collect();
    compensated_sum(partials.into_iter())
}

/// Sum of `f(n)` for `n` in `lo..hi` on the configured execution path.
pub fn sum_range(lo: u64, hi: u64, f: impl Fn(u64) -> f64 + Sync) -> f64 {
    #[cfg(feature = "parallel")]
    {
        sum_range_par(lo, hi, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sum_range_seq(lo, hi, f)
    }
}

/// Maps `f` over `0..n`, preserving index order in the output.
pub fn map_collect_seq<T: Send>(n: usize, f: impl Fn(usize) -> T + Send + Sync) -> Vec<T> {
    (0..n).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_collect_par<T: Send>(n: usize, f: impl Fn(usize) -> T + Send + Sync) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `f` over `0..n` on the configured execution path; output is in
/// index order either way.
pub fn map_collect<T: Send>(n: usize, f: impl Fn(usize) -> T + Send + Sync) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        map_collect_par(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_collect_seq(n, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_beats_naive_on_harmonic() {
        // sum 1/n forward vs the same thing blocked must agree tightly
        let n = 200_000u64;
        let direct = compensated_sum((1..=n).map(|k| 1.0 / k as f64));
        let blocked = sum_range_seq(1, n + 1, |k| 1.0 / k as f64);
        assert!((direct - blocked).abs() < 1e-13);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential_bitwise() {
        let f = |n: u64| ((n as f64) * 0.7).sin() / (n as f64 + 1.0);
        let a = sum_range_seq(0, 1_000_000, f);
        let b = sum_range_par(0, 1_000_000, f);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn empty_range_is_zero() {
        assert_eq!(sum_range_seq(5, 5, |_| 1.0), 0.0);
    }
}
