//! Counting formulas for the independent subsets of P_n^(h), the h-th power
//! of the path on n vertices, and for the edge count of the inclusion-order
//! Hasse diagram of those subsets.
//!
//! The Hasse edge count can be computed by three independent routes —
//! a weighted sum of the by-size counts, a double sum of per-vertex
//! coefficients, and a convolution of h-Fibonacci numbers — which the
//! verification suites compare against each other and against brute force.

use crate::error::{Error, Result};
use crate::sequences::{binom, convolve, SequenceSpec};
use crate::ExactInt;
use num_traits::Zero;

/// Upper summation limit ceil(n / (h+1)); independent subsets of P_n^(h)
/// and Q_n^(h) larger than this are impossible.
pub(crate) fn k_limit(h: u32, n: u32) -> u32 {
    (n as u64).div_ceil(h as u64 + 1) as u32
}

/// p_{n,k}^(h): independent k-subsets of P_n^(h), as binom(n - hk + h, k).
pub fn p_count(h: u32, n: u32, k: u32) -> ExactInt {
    let a = n as i128 + h as i128 - h as i128 * k as i128;
    if a < 0 || (k as i128) > a {
        return ExactInt::zero();
    }
    binom(a as i64, k as i64)
}

/// p_n^(h): all independent subsets of P_n^(h), summed by size.
pub fn p_total(h: u32, n: u32) -> ExactInt {
    (0..=k_limit(h, n)).map(|k| p_count(h, n, k)).sum()
}

/// p_n^(h) again, via the recurrence n+1 for n <= h+1,
/// p_{n-1} + p_{n-h-1} above it.
pub fn p_total_rec(h: u32, n: u32) -> ExactInt {
    let h = h as usize;
    let n = n as usize;
    let mut table: Vec<ExactInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let value = if m <= h + 1 {
            ExactInt::from(m as u64 + 1)
        } else {
            &table[m - 1] + &table[m - h - 1]
        };
        table.push(value);
    }
    table.pop().expect("table has n+1 entries")
}

/// p_{n,k}^(h) extended to negative n by clamping to n = 0:
/// 1 for k = 0 and 0 for k >= 1 when n < 0.
pub fn pbar_count(h: u32, n: i64, k: u32) -> ExactInt {
    if n < 0 {
        p_count(h, 0, k)
    } else {
        p_count(h, u32::try_from(n).expect("n fits in u32"), k)
    }
}

/// p_n^(h) extended to negative n by clamping to p_0 = 1.
pub fn pbar_total(h: u32, n: i64) -> ExactInt {
    if n < 0 {
        ExactInt::from(1)
    } else {
        p_total(h, u32::try_from(n).expect("n fits in u32"))
    }
}

fn t_coeff_unchecked(h: u32, n: u32, k: u32, i: u32) -> ExactInt {
    let left = i as i64 - h as i64 - 1;
    let right = n as i64 - i as i64 - h as i64;
    let mut acc = ExactInt::zero();
    for r in 0..k {
        acc += pbar_count(h, left, r) * pbar_count(h, right, k - 1 - r);
    }
    acc
}

/// T_{k,i}^(n,h): independent k-subsets of P_n^(h) that contain vertex v_i.
///
/// The empty sum at k = 0 is 0 — the empty set contains no vertex.
pub fn t_coeff(h: u32, n: u32, k: u32, i: u32) -> Result<ExactInt> {
    if i < 1 || i > n {
        return Err(Error::VertexOutOfRange { i, n });
    }
    Ok(t_coeff_unchecked(h, n, k, i))
}

/// Edge count of the Hasse diagram of independent subsets of P_n^(h):
/// every non-empty k-subset covers exactly its k one-smaller subsets,
/// so the count is sum over k of k * p_{n,k}^(h).
pub fn h_edges_weighted(h: u32, n: u32) -> ExactInt {
    (1..=k_limit(h, n)).map(|k| p_count(h, n, k) * k).sum()
}

/// The same edge count as a double sum of the per-vertex coefficients
/// T_{k,i}^(n,h); only defined for n >= 1.
pub fn h_edges_via_t(h: u32, n: u32) -> Result<ExactInt> {
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    let mut acc = ExactInt::zero();
    for k in 1..=k_limit(h, n) {
        for i in 1..=n {
            acc += t_coeff_unchecked(h, n, k, i);
        }
    }
    Ok(acc)
}

/// The same edge count as the convolution square of the h-Fibonacci
/// sequence.
pub fn h_edges_conv(h: u32, n: u32) -> ExactInt {
    let f = SequenceSpec::h_fibonacci(h);
    convolve(f, f, n)
}
