//! Acceptance suite: exercises the CLI and the library against the frozen
//! reference tables and the cross-route identities, one test per
//! criterion, each printing a pass line with its runtime.


use fibcube::{
    build_graph, build_hasse, conjecture_scan, h_edges_conv, h_edges_via_t, h_edges_weighted,
    h_fibonacci, h_lucas, m_edges_closed, m_edges_conjecture, m_edges_weighted, p_count, p_total,
    p_total_rec, q_count, q_total, q_total_rec, t_coeff, CubeVariant, Enumerator, ExactInt,
    GraphSpec,
};
use std::time::{Duration, Instant};

fn cli(args: &[&str]) -> (String, i32) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fibcube").chain(args.iter().copied());
    let code = fibcube_cli::run(argv, &mut out, &mut err);
    assert!(
        err.is_empty(),
        "stderr for {args:?}: {}",
        String::from_utf8_lossy(&err)
    );
    (String::from_utf8(out).expect("utf-8 output"), code)
}

/// Runs a table command in CSV format and parses the cell grid.
fn cli_table(args: &[&str]) -> Vec<Vec<u64>> {
    let mut full = args.to_vec();
    full.extend_from_slice(&["--format", "csv"]);
    let (text, code) = cli(&full);
    assert_eq!(code, 0, "table command failed: {args:?}");
    text.lines()
        .skip(1)
        .map(|line| {
            line.split(',')
                .skip(1)
                .map(|cell| cell.parse().expect("integer cell"))
                .collect()
        })
        .collect()
}

fn grid<const C: usize, const R: usize>(table: &[[u64; C]; R]) -> Vec<Vec<u64>> {
    table.iter().map(|row| row.to_vec()).collect()
}

fn assert_runtime(what: &str, elapsed: Duration, bound: Duration) {
    assert!(
        elapsed <= bound,
        "{what} took {elapsed:?}, over the {bound:?} budget"
    );
}

#[test]
fn criterion_1_table_reproduction() {
    let start = Instant::now();

    // Path-family tables.
    assert_eq!(
        cli_table(&["table", "-q", "p-nk", "--h", "4", "--n", "0..14", "--k", "0..4"]),
        grid(&tables::P4_BY_SIZE),
        "p_{{n,k}}^(4) by-size table"
    );
    assert_eq!(
        cli_table(&["table", "-q", "p-total", "--h", "0..10", "--n", "0..14"]),
        grid(&tables::P_TOTAL),
        "p_n^(h) table"
    );

    // H_n^(h) via all three routes; via-t is defined for n >= 1, the
    // other routes cover the full grid including the n=0 column.
    for route in ["weighted", "convolution"] {
        assert_eq!(
            cli_table(&["table", "-q", "h", "--route", route, "--h", "0..10", "--n", "0..11"]),
            grid(&tables::H_EDGES),
            "H_n^(h) table via {route}"
        );
    }
    let expected_from_1: Vec<Vec<u64>> = grid(&tables::H_EDGES)
        .iter()
        .map(|row| row[1..].to_vec())
        .collect();
    assert_eq!(
        cli_table(&["table", "-q", "h", "--route", "via-t", "--h", "0..10", "--n", "1..11"]),
        expected_from_1,
        "H_n^(h) table via via-t"
    );

    // Per-vertex coefficient tables.
    assert_eq!(
        cli_table(&["table", "-q", "t", "--h", "2", "--n", "7", "--k", "0..3", "--i", "1..7"]),
        grid(&tables::T_7_2)
    );
    assert_eq!(
        cli_table(&["table", "-q", "t", "--h", "2", "--n", "10", "--k", "0..4", "--i", "1..10"]),
        grid(&tables::T_10_2)
    );
    assert_eq!(
        cli_table(&["table", "-q", "t", "--h", "3", "--n", "15", "--k", "0..4", "--i", "1..13"]),
        grid(&tables::T_15_3)
    );
    assert_eq!(
        cli_table(&["table", "-q", "t", "--h", "1", "--n", "6", "--k", "0..3", "--i", "1..6"]),
        grid(&tables::T_6_1)
    );

    // Sequence tables.
    assert_eq!(
        cli_table(&["table", "-q", "h-fib", "--h", "0..10", "--n", "1..13"]),
        grid(&tables::H_FIB),
        "h-Fibonacci table"
    );
    assert_eq!(
        cli_table(&["table", "-q", "h-lucas", "--h", "0..10", "--n", "1..15"]),
        grid(&tables::H_LUCAS),
        "h-Lucas table"
    );

    // Cycle-family tables.
    assert_eq!(
        cli_table(&["table", "-q", "q-nk", "--h", "1", "--n", "0..16", "--k", "0..8"]),
        grid(&tables::Q1_BY_SIZE)
    );
    assert_eq!(
        cli_table(&["table", "-q", "q-nk", "--h", "2", "--n", "0..17", "--k", "0..5"]),
        grid(&tables::Q2_BY_SIZE)
    );
    assert_eq!(
        cli_table(&["table", "-q", "q-nk", "--h", "3", "--n", "0..14", "--k", "0..4"]),
        grid(&tables::Q3_BY_SIZE)
    );
    assert_eq!(
        cli_table(&["table", "-q", "q-nk", "--h", "4", "--n", "0..14", "--k", "0..3"]),
        grid(&tables::Q4_BY_SIZE)
    );
    assert_eq!(
        cli_table(&["table", "-q", "q-total", "--h", "0..10", "--n", "0..17"]),
        grid(&tables::Q_TOTAL),
        "q_n^(h) table"
    );

    // M_n^(h) via the weighted route over the full grid, and via the
    // closed form n * F_{n-h} over its domain n > h, row by row.
    assert_eq!(
        cli_table(&["table", "-q", "m", "--h", "0..6", "--n", "0..15"]),
        grid(&tables::M_EDGES),
        "M_n^(h) table via weighted"
    );
    for h in 0..=6u32 {
        let h_arg = h.to_string();
        let n_arg = format!("{}..15", h + 1);
        assert_eq!(
            cli_table(&["table", "-q", "m", "--route", "closed", "--h", &h_arg, "--n", &n_arg]),
            vec![tables::M_EDGES[h as usize][(h + 1) as usize..].to_vec()],
            "M_n^({h}) row via closed"
        );
    }

    // The conjectured convolution table, zeros at n <= h included.
    assert_eq!(
        cli_table(&["table", "-q", "conjecture-m", "--h", "0..10", "--n", "0..15"]),
        grid(&tables::M_CONJ),
        "convolution M table"
    );

    let elapsed = start.elapsed();
    assert_runtime("criterion 1", elapsed, Duration::from_secs(1));
    println!("acceptance criterion 1 (table reproduction): pass in {elapsed:?}");
}

#[test]
fn criterion_2_triple_route_identity() {
    let start = Instant::now();
    for h in 0..=10u32 {
        for n in 1..=30u32 {
            let weighted = h_edges_weighted(h, n);
            assert_eq!(weighted, h_edges_via_t(h, n).unwrap(), "H via-t h={h} n={n}");
            assert_eq!(weighted, h_edges_conv(h, n), "H convolution h={h} n={n}");
        }
        for n in h + 1..=30u32 {
            let weighted = m_edges_weighted(h, n);
            assert_eq!(weighted, m_edges_closed(h, n).unwrap(), "M closed h={h} n={n}");
            assert_eq!(
                weighted,
                m_edges_conjecture(h, n).unwrap(),
                "M convolution h={h} n={n}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert_runtime("criterion 2", elapsed, Duration::from_secs(1));
    println!("acceptance criterion 2 (triple-route identity): pass in {elapsed:?}");
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let enumerator = Enumerator::default();
    for h in 0..=4u32 {
        for n in 0..=16u32 {
            // Path family: census by size, by vertex, totals, covers.
            let g = build_graph(&GraphSpec::path(n, h));
            let census = enumerator.census(&g).unwrap();
            assert_eq!(census.total(), p_total(h, n), "p total h={h} n={n}");
            for k in 0..=census.max_size() + 1 {
                assert_eq!(census.size_count(k), p_count(h, n, k), "p h={h} n={n} k={k}");
                for i in 1..=n {
                    assert_eq!(
                        census.vertex_count(k, i),
                        t_coeff(h, n, k, i).unwrap(),
                        "T h={h} n={n} k={k} i={i}"
                    );
                }
            }
            let sets = enumerator.independent_sets(&g).unwrap();
            let hasse = build_hasse(&sets).unwrap();
            assert_eq!(
                ExactInt::from(hasse.cover_count() as u64),
                h_edges_weighted(h, n),
                "H covers h={h} n={n}"
            );

            // Cycle family: census by size, totals, covers.
            let g = build_graph(&GraphSpec::cycle(n, h));
            let census = enumerator.census(&g).unwrap();
            assert_eq!(census.total(), q_total(h, n), "q total h={h} n={n}");
            for k in 0..=census.max_size() + 1 {
                assert_eq!(census.size_count(k), q_count(h, n, k), "q h={h} n={n} k={k}");
            }
            let sets = enumerator.independent_sets(&g).unwrap();
            let hasse = build_hasse(&sets).unwrap();
            assert_eq!(
                ExactInt::from(hasse.cover_count() as u64),
                m_edges_weighted(h, n),
                "M covers h={h} n={n}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert_runtime("criterion 3", elapsed, Duration::from_secs(60));
    println!("acceptance criterion 3 (oracle equivalence): pass in {elapsed:?}");
}

#[test]
fn criterion_4_cube_correspondence() {
    let start = Instant::now();
    let enumerator = Enumerator::default();
    for n in 1..=12u32 {
        let report = enumerator.cube_correspondence(n, CubeVariant::Fibonacci).unwrap();
        assert!(report.passed(), "fibonacci n={n}: {report}");
    }
    for n in 2..=12u32 {
        let report = enumerator.cube_correspondence(n, CubeVariant::Lucas).unwrap();
        assert!(report.passed(), "lucas n={n}: {report}");
    }
    let elapsed = start.elapsed();
    assert_runtime("criterion 4", elapsed, Duration::from_secs(10));
    println!("acceptance criterion 4 (cube correspondence): pass in {elapsed:?}");
}

#[test]
fn criterion_5_remark_identities() {
    let start = Instant::now();
    for n in 0..=17u32 {
        assert_eq!(p_total(1, n), h_fibonacci(1, n + 2).unwrap(), "p(1,{n})");
    }
    for n in 2..=13u32 {
        assert_eq!(q_total(1, n), h_lucas(1, n + 1).unwrap(), "q(1,{n})");
    }
    for n in 2..=15u32 {
        assert_eq!(
            m_edges_weighted(1, n),
            h_fibonacci(1, n - 1).unwrap() * n,
            "M(1,{n})"
        );
    }
    let elapsed = start.elapsed();
    println!("acceptance criterion 5 (remark identities): pass in {elapsed:?}");
}

#[test]
fn criterion_6_conjecture_scan() {
    let start = Instant::now();
    let (text, code) = cli(&["conjecture", "--h", "0..8", "--n", "..60"]);
    assert_eq!(code, 0, "conjecture scan exit code; output:\n{text}");
    assert!(text.contains("0 failures"), "scan output:\n{text}");

    let report = conjecture_scan(8, 60);
    assert!(report.passed(), "{report}");
    assert_eq!(report.cases, (0..=8u64).map(|h| 60 - h).sum::<u64>());

    let elapsed = start.elapsed();
    assert_runtime("criterion 6", elapsed, Duration::from_secs(5));
    println!("acceptance criterion 6 (conjecture scan): pass in {elapsed:?}");
}

#[test]
fn criterion_7_recurrence_and_shift() {
    let start = Instant::now();
    for h in 0..=10u32 {
        for n in 0..=30u32 {
            assert_eq!(p_total(h, n), p_total_rec(h, n), "p h={h} n={n}");
            assert_eq!(q_total(h, n), q_total_rec(h, n), "q h={h} n={n}");
        }
    }
    for h in 1..=10u32 {
        for n in 0..=30u32 {
            for k in 0..=n {
                assert_eq!(
                    p_count(h, n, k),
                    p_count(h - 1, n - k + 1, k),
                    "shift h={h} n={n} k={k}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    println!("acceptance criterion 7 (recurrence and shift agreement): pass in {elapsed:?}");
}
