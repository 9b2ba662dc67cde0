//! Counting formulas for the independent subsets of Q_n^(h), the h-th power
//! of the cycle on n vertices, and for the edge count of the corresponding
//! Hasse diagram.
//!
//! The edge count M_n^(h) has a weighted-sum route and a closed form
//! n * F_{n-h}^(h); a third route, the convolution of the h-Fibonacci and
//! h-Lucas sequences, is conjectural — [`conjecture_scan`] searches for
//! counterexamples instead of assuming it.

use crate::error::{Error, Result};
use crate::path::k_limit;
use crate::report::{Mismatch, VerificationReport};
use crate::sequences::{binom, convolve, h_fibonacci, SequenceSpec};
use crate::ExactInt;
use num_traits::Zero;

/// q_{n,k}^(h): independent k-subsets of Q_n^(h).
///
/// 1 for k = 0, n for k = 1, and (n/k) * binom(n - hk - 1, k - 1) above
/// that, evaluated as an exact division of the integer product.
///
/// # Panics
/// If the division is not exact, which would mean the formula itself is
/// implemented wrong — the count is provably integral.
pub fn q_count(h: u32, n: u32, k: u32) -> ExactInt {
    match k {
        0 => ExactInt::from(1),
        1 => ExactInt::from(n),
        _ => {
            let a = n as i128 - h as i128 * k as i128 - 1;
            if a < 0 || (k as i128 - 1) > a {
                return ExactInt::zero();
            }
            let product = binom(a as i64, k as i64 - 1) * n;
            let k = ExactInt::from(k);
            assert!(
                (&product % &k).is_zero(),
                "n * binom(n-hk-1, k-1) not divisible by k at h={h}, n={n}, k={k}"
            );
            product / k
        }
    }
}

/// q_n^(h): all independent subsets of Q_n^(h), summed by size.
pub fn q_total(h: u32, n: u32) -> ExactInt {
    (0..=k_limit(h, n)).map(|k| q_count(h, n, k)).sum()
}

/// q_n^(h) via the recurrence: n+1 while n <= 2h+1 (the cycle power is
/// complete there), q_{n-1} + q_{n-h-1} above it.
pub fn q_total_rec(h: u32, n: u32) -> ExactInt {
    let h = h as usize;
    let n = n as usize;
    let mut table: Vec<ExactInt> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let value = if m <= 2 * h + 1 {
            ExactInt::from(m as u64 + 1)
        } else {
            &table[m - 1] + &table[m - h - 1]
        };
        table.push(value);
    }
    table.pop().expect("table has n+1 entries")
}

/// Edge count of the Hasse diagram of independent subsets of Q_n^(h),
/// as the weighted sum over k of k * q_{n,k}^(h).
pub fn m_edges_weighted(h: u32, n: u32) -> ExactInt {
    (1..=k_limit(h, n)).map(|k| q_count(h, n, k) * k).sum()
}

/// The same edge count in closed form, n * F_{n-h}^(h); defined for n > h.
pub fn m_edges_closed(h: u32, n: u32) -> Result<ExactInt> {
    if n <= h {
        return Err(Error::BelowDiagonal { h, n });
    }
    Ok(h_fibonacci(h, n - h).expect("n - h >= 1") * n)
}

/// The conjectured third route: the convolution of the h-Fibonacci and
/// h-Lucas sequences evaluated at n - h; defined for n > h.
pub fn m_edges_conjecture(h: u32, n: u32) -> Result<ExactInt> {
    if n <= h {
        return Err(Error::BelowDiagonal { h, n });
    }
    let f = SequenceSpec::h_fibonacci(h);
    let l = SequenceSpec::h_lucas(h);
    Ok(convolve(f, l, n - h))
}

/// Compares the three M_n^(h) routes for every 0 <= h <= h_max and
/// h < n <= n_max, reporting each disagreement as a counterexample.
pub fn conjecture_scan(h_max: u32, n_max: u32) -> VerificationReport {
    let mut report = VerificationReport::new(format!(
        "conjecture h=0..{h_max} n=..{n_max}"
    ));
    for h in 0..=h_max {
        for n in h + 1..=n_max {
            let weighted = m_edges_weighted(h, n);
            let closed = m_edges_closed(h, n).expect("n > h");
            let convolved = m_edges_conjecture(h, n).expect("n > h");
            report.check(
                || format!("h={h} n={n}"),
                &[
                    ("weighted", &weighted),
                    ("closed", &closed),
                    ("convolution", &convolved),
                ],
            );
        }
    }
    report
}

/// The n = h boundary cells excluded from [`conjecture_scan`]: the table
/// convolution is an empty sum (0) there while the diagram has n edges,
/// so the two are expected to differ. Returned for informational display.
pub fn conjecture_boundary(h_max: u32, n_max: u32) -> Vec<Mismatch> {
    let mut cells = Vec::new();
    for h in 0..=h_max.min(n_max) {
        let n = h;
        let weighted = m_edges_weighted(h, n);
        let convolved = ExactInt::zero(); // empty convolution at n - h = 0
        cells.push(Mismatch {
            location: format!("h={h} n={n} (boundary)"),
            values: vec![
                ("weighted".to_string(), weighted.to_string()),
                ("convolution".to_string(), convolved.to_string()),
            ],
        });
    }
    cells
}
