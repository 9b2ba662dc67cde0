//! Cross-checking suites: route agreement, recurrence agreement, the shift
//! and remark identities, and brute-force oracle comparisons. These back
//! the CLI `verify` command and the integration tests.

use crate::cycle::{m_edges_closed, m_edges_conjecture, m_edges_weighted, q_count, q_total,
                   q_total_rec};
use crate::enumerate::{CubeVariant, Enumerator};
use crate::graph::{build_graph, GraphSpec};
use crate::hasse::build_hasse;
use crate::path::{h_edges_conv, h_edges_via_t, h_edges_weighted, p_count, p_total, p_total_rec,
                  pbar_total, t_coeff};
use crate::report::{Mismatch, VerificationReport};
use crate::sequences::{binom, h_fibonacci, h_lucas};
use crate::ExactInt;
use num_traits::Zero;

/// Brute force stays within h <= 4, n <= 16; formula-only checks run over
/// the full requested ranges.
pub const ORACLE_H_MAX: u32 = 4;
pub const ORACLE_N_MAX: u32 = 16;

fn k_limit(h: u32, n: u32) -> u32 {
    (n + h) / (h + 1)
}

/// Path-family suite: three-route edge counts, recurrence and shift
/// identities, per-vertex row sums, the Fibonacci remarks, and brute-force
/// census comparison within the oracle range.
pub fn verify_path(h_max: u32, n_max: u32, enumerator: Enumerator) -> VerificationReport {
    let mut report = VerificationReport::new(format!("path h=0..{h_max} n=0..{n_max}"));

    for h in 0..=h_max {
        for n in 0..=n_max {
            let weighted = h_edges_weighted(h, n);
            let convolved = h_edges_conv(h, n);
            if n >= 1 {
                let via_t = h_edges_via_t(h, n).expect("n >= 1");
                report.check(
                    || format!("H routes h={h} n={n}"),
                    &[
                        ("weighted", &weighted),
                        ("via-t", &via_t),
                        ("convolution", &convolved),
                    ],
                );
            } else {
                report.check(
                    || format!("H routes h={h} n={n}"),
                    &[("weighted", &weighted), ("convolution", &convolved)],
                );
            }

            let closed = p_total(h, n);
            let recurred = p_total_rec(h, n);
            report.check(
                || format!("p total h={h} n={n}"),
                &[("closed", &closed), ("recurrence", &recurred)],
            );
        }
    }

    // Shift property p_{n,k}^(h) = p_{n-k+1,k}^(h-1).
    for h in 1..=h_max {
        for n in 0..=n_max {
            for k in 0..=n {
                let lhs = p_count(h, n, k);
                let rhs = p_count(h - 1, n - k + 1, k);
                report.check(
                    || format!("shift h={h} n={n} k={k}"),
                    &[("p(h)", &lhs), ("p(h-1) shifted", &rhs)],
                );
            }
        }
    }

    // Row sums of the per-vertex coefficients.
    for h in 0..=h_max {
        for n in 1..=n_max {
            for k in 1..=k_limit(h, n) {
                let row: ExactInt = (1..=n).map(|i| t_coeff(h, n, k, i).expect("i in range")).sum();
                let weighted = p_count(h, n, k) * k;
                report.check(
                    || format!("row sum h={h} n={n} k={k}"),
                    &[("sum of T", &row), ("k*p", &weighted)],
                );
            }
        }
    }

    // p_n^(1) follows the Fibonacci sequence, offset by two.
    for n in 0..=n_max {
        let total = p_total(1, n);
        let fib = h_fibonacci(1, n + 2).expect("n+2 >= 1");
        report.check(
            || format!("fibonacci remark n={n}"),
            &[("p(1,n)", &total), ("F(n+2)", &fib)],
        );
    }

    // The h-Fibonacci sequence is the path totals with a clamped prefix.
    for h in 0..=h_max {
        for i in 1..=n_max {
            let f = h_fibonacci(h, i).expect("i >= 1");
            let clamped = pbar_total(h, i as i64 - h as i64 - 1);
            report.check(
                || format!("prefix identity h={h} i={i}"),
                &[("F", &f), ("pbar", &clamped)],
            );
        }
    }

    oracle_path(&mut report, h_max, n_max, enumerator);
    report
}

fn oracle_path(report: &mut VerificationReport, h_max: u32, n_max: u32, enumerator: Enumerator) {
    let h_cap = h_max.min(ORACLE_H_MAX);
    let n_cap = n_max.min(ORACLE_N_MAX).min(enumerator.limit());
    report.note(format!("oracle range h=0..{h_cap} n=0..{n_cap}"));
    for h in 0..=h_cap {
        for n in 0..=n_cap {
            let g = build_graph(&GraphSpec::path(n, h));
            let census = enumerator.census(&g).expect("within capacity");
            let sets = enumerator.independent_sets(&g).expect("within capacity");

            let total = census.total();
            let formula_total = p_total(h, n);
            report.check(
                || format!("oracle p total h={h} n={n}"),
                &[("enumerated", &total), ("formula", &formula_total)],
            );

            for k in 0..=census.max_size() + 1 {
                let counted = census.size_count(k);
                let formula = p_count(h, n, k);
                report.check(
                    || format!("oracle p h={h} n={n} k={k}"),
                    &[("enumerated", &counted), ("formula", &formula)],
                );
                for i in 1..=n {
                    let counted = census.vertex_count(k, i);
                    let formula = t_coeff(h, n, k, i).expect("i in range");
                    report.check(
                        || format!("oracle T h={h} n={n} k={k} i={i}"),
                        &[("enumerated", &counted), ("formula", &formula)],
                    );
                }
            }

            let hasse = build_hasse(&sets).expect("enumeration is downward closed");
            let covers = ExactInt::from(hasse.cover_count() as u64);
            let formula_edges = h_edges_weighted(h, n);
            report.check(
                || format!("oracle H h={h} n={n}"),
                &[("covers", &covers), ("formula", &formula_edges)],
            );
        }
    }
}

/// Cycle-family suite: recurrence agreement, the three M routes (the
/// convolution route being the conjecture under test), divisibility, the
/// complete-graph regime, the Lucas remarks, and the brute-force census.
pub fn verify_cycle(h_max: u32, n_max: u32, enumerator: Enumerator) -> VerificationReport {
    let mut report = VerificationReport::new(format!("cycle h=0..{h_max} n=0..{n_max}"));

    for h in 0..=h_max {
        for n in 0..=n_max {
            let closed = q_total(h, n);
            let recurred = q_total_rec(h, n);
            report.check(
                || format!("q total h={h} n={n}"),
                &[("closed", &closed), ("recurrence", &recurred)],
            );

            if n > h {
                let weighted = m_edges_weighted(h, n);
                let closed = m_edges_closed(h, n).expect("n > h");
                let convolved = m_edges_conjecture(h, n).expect("n > h");
                report.check(
                    || format!("M routes h={h} n={n}"),
                    &[
                        ("weighted", &weighted),
                        ("closed", &closed),
                        ("convolution", &convolved),
                    ],
                );
            }

            // k must divide n * binom(n-hk-1, k-1) exactly.
            for k in 2..=k_limit(h, n) + 2 {
                let product = binom(n as i64 - (h as i64) * (k as i64) - 1, k as i64 - 1) * n;
                report.check_that((&product % ExactInt::from(k)).is_zero(), || Mismatch {
                    location: format!("divisibility h={h} n={n} k={k}"),
                    values: vec![
                        ("product".into(), product.to_string()),
                        ("k".into(), k.to_string()),
                    ],
                });
            }
        }

        // Complete regime: only the empty set and singletons.
        for n in 1..=(2 * h + 1).min(n_max) {
            let total = q_total(h, n);
            let expected = ExactInt::from(n + 1);
            report.check(
                || format!("complete regime q h={h} n={n}"),
                &[("q", &total), ("n+1", &expected)],
            );
            let edges = m_edges_weighted(h, n);
            let expected = ExactInt::from(n);
            report.check(
                || format!("complete regime M h={h} n={n}"),
                &[("M", &edges), ("n", &expected)],
            );
        }
    }

    // q_n^(1) follows the Lucas sequence for n >= 2.
    for n in 2..=n_max {
        let total = q_total(1, n);
        let lucas = h_lucas(1, n + 1).expect("n+1 >= 1");
        report.check(
            || format!("lucas remark n={n}"),
            &[("q(1,n)", &total), ("L(n)", &lucas)],
        );
    }

    // M_n^(1) = n * F_{n-1} for n >= 2.
    for n in 2..=n_max {
        let edges = m_edges_weighted(1, n);
        let product = h_fibonacci(1, n - 1).expect("n-1 >= 1") * n;
        report.check(
            || format!("edge remark n={n}"),
            &[("M(1,n)", &edges), ("n*F(n-1)", &product)],
        );
    }

    oracle_cycle(&mut report, h_max, n_max, enumerator);
    report
}

fn oracle_cycle(report: &mut VerificationReport, h_max: u32, n_max: u32, enumerator: Enumerator) {
    let h_cap = h_max.min(ORACLE_H_MAX);
    let n_cap = n_max.min(ORACLE_N_MAX).min(enumerator.limit());
    report.note(format!("oracle range h=0..{h_cap} n=0..{n_cap}"));
    for h in 0..=h_cap {
        for n in 0..=n_cap {
            let g = build_graph(&GraphSpec::cycle(n, h));
            let census = enumerator.census(&g).expect("within capacity");
            let sets = enumerator.independent_sets(&g).expect("within capacity");

            let total = census.total();
            let formula_total = q_total(h, n);
            report.check(
                || format!("oracle q total h={h} n={n}"),
                &[("enumerated", &total), ("formula", &formula_total)],
            );

            for k in 0..=census.max_size() + 1 {
                let counted = census.size_count(k);
                let formula = q_count(h, n, k);
                report.check(
                    || format!("oracle q h={h} n={n} k={k}"),
                    &[("enumerated", &counted), ("formula", &formula)],
                );
            }

            let hasse = build_hasse(&sets).expect("enumeration is downward closed");
            let covers = ExactInt::from(hasse.cover_count() as u64);
            let formula_edges = m_edges_weighted(h, n);
            report.check(
                || format!("oracle M h={h} n={n}"),
                &[("covers", &covers), ("formula", &formula_edges)],
            );
        }
    }
}

/// Cube suite: the characteristic-vector correspondence for Fibonacci and
/// Lucas cubes, string counts against the sequence formulas, and the
/// per-vertex string-membership identity.
pub fn verify_cubes(n_max: u32, enumerator: Enumerator) -> VerificationReport {
    let n_cap = n_max.min(12).min(enumerator.limit());
    let mut report = VerificationReport::new(format!("cubes n=1..{n_cap}"));

    for n in 1..=n_cap {
        let fib = enumerator
            .cube_correspondence(n, CubeVariant::Fibonacci)
            .expect("within capacity");
        merge(&mut report, fib);
        if n >= 2 {
            let lucas = enumerator
                .cube_correspondence(n, CubeVariant::Lucas)
                .expect("within capacity");
            merge(&mut report, lucas);
        }
    }

    for n in 1..=n_cap {
        let fib_count =
            ExactInt::from(enumerator.fibonacci_strings(n).expect("capacity").len() as u64);
        let expected = h_fibonacci(1, n + 2).expect("n+2 >= 1");
        report.check(
            || format!("fibonacci string count n={n}"),
            &[("strings", &fib_count), ("F(n+2)", &expected)],
        );
        if n >= 2 {
            let lucas_count =
                ExactInt::from(enumerator.lucas_strings(n).expect("capacity").len() as u64);
            let expected = q_total(1, n);
            report.check(
                || format!("lucas string count n={n}"),
                &[("strings", &lucas_count), ("q(1,n)", &expected)],
            );
        }

        // Strings with k ones and a fixed 1-bit at position i are counted
        // by the per-vertex path coefficients.
        let strings = enumerator.fibonacci_strings(n).expect("capacity");
        for k in 0..=n.div_ceil(2) {
            for i in 1..=n {
                let counted = ExactInt::from(
                    strings.iter().filter(|s| s.ones() == k && s.bit(i) == 1).count() as u64,
                );
                let formula = t_coeff(1, n, k, i).expect("i in range");
                report.check(
                    || format!("string membership n={n} k={k} i={i}"),
                    &[("strings", &counted), ("T", &formula)],
                );
            }
        }
    }

    report
}

fn merge(into: &mut VerificationReport, from: VerificationReport) {
    into.cases += from.cases;
    into.failures.extend(from.failures);
    into.informational.extend(from.informational);
    into.notes.extend(from.notes);
}

/// Runs all three suites.
pub fn verify_all(h_max: u32, n_max: u32, enumerator: Enumerator) -> Vec<VerificationReport> {
    vec![
        verify_path(h_max, n_max, enumerator),
        verify_cycle(h_max, n_max, enumerator),
        verify_cubes(n_max, enumerator),
    ]
}
