//! Acceptance checks, one status line per criterion on stderr:
//!
//! ```text
//! cargo test -p bicliques --test acceptance
//! ```
//!
//! Criteria run one after another inside a single test so the timing
//! comparisons are not disturbed by parallel test threads.

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use bicliques::bipartite::bipartite_solve;
use bicliques::oracle::{brute_mbs, brute_mibs};
use bicliques::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(PartialEq)]
enum Status {
    Pass,
    Fail,
    Skip,
    Info,
}

struct Report {
    failures: Vec<usize>,
}

impl Report {
    fn record(&mut self, id: usize, title: &str, status: Status, detail: String) {
        let tag = match status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Info => "INFO",
        };
        // Written to the handle directly so the line shows without --nocapture.
        let line = format!("[{tag}] criterion {id}: {title}: {detail}\n");
        std::io::stderr().write_all(line.as_bytes()).unwrap();
        if status == Status::Fail {
            self.failures.push(id);
        }
    }
}

fn erdos_renyi(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn sorted(result: EnumerationResult) -> Vec<Biclique> {
    assert!(!result.timed_out);
    result.into_sorted_vec()
}

/// Compares every algorithm with the oracles on `g`; returns the names of
/// those that disagree.
fn oracle_mismatches(g: &Graph, seed: u64) -> Vec<&'static str> {
    let opts = RunOptions::default();
    let mibs = brute_mibs(g).unwrap();
    let mbs = brute_mbs(g).unwrap();
    let greedy = greedy_oct(g, seed);
    let exact = min_oct_exhaustive(g, g.n()).unwrap();
    let mut bad = Vec::new();
    if sorted(enum_mib(g, &opts)) != mibs {
        bad.push("enum-mib");
    }
    if sorted(oct_mib2(g, &greedy, &opts).unwrap()) != mibs {
        bad.push("oct-mib2/greedy");
    }
    if sorted(oct_mib2(g, &exact, &opts).unwrap()) != mibs {
        bad.push("oct-mib2/exact");
    }
    if sorted(mica(g, &opts)) != mbs {
        bad.push("mica");
    }
    if sorted(oct_mica(g, &greedy, &opts).unwrap()) != mbs {
        bad.push("oct-mica/greedy");
    }
    if sorted(oct_mica(g, &exact, &opts).unwrap()) != mbs {
        bad.push("oct-mica/exact");
    }
    bad
}

fn oracle_equivalence(report: &mut Report) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let densities = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
    let mut graphs = 0;
    let mut mismatches = Vec::new();
    for round in 0..30u64 {
        for &p in &densities {
            let n = rng.random_range(2..=14);
            let g = erdos_renyi(n, p, &mut rng);
            for name in oracle_mismatches(&g, round) {
                mismatches.push(format!("{name} on G(n={n}, p={p})"));
            }

            let n_o = rng.random_range(0..=4);
            let n_r = rng.random_range(1..=4);
            let n_l = rng.random_range(n_r..=14 - n_o - n_r);
            let params = GeneratorParams {
                n_l,
                n_r,
                n_o,
                d_lr: p,
                d_cross: p,
                d_o: p,
                cv_lr: 0.5,
                cv_cross: 0.5,
                seed: rng.random(),
            };
            let (g, _) = generate(&params).unwrap();
            for name in oracle_mismatches(&g, round) {
                mismatches.push(format!("{name} on {params:?}"));
            }
            graphs += 2;
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && graphs >= 500 && elapsed < Duration::from_secs(300);
    let mut detail = format!(
        "{graphs} graphs, {} mismatches, {:.1} s (limit 300 s)",
        mismatches.len(),
        elapsed.as_secs_f64()
    );
    for m in mismatches.iter().take(5) {
        detail.push_str(&format!("\n    {m}"));
    }
    report.record(
        1,
        "oracle equivalence",
        if ok { Status::Pass } else { Status::Fail },
        detail,
    );
}

fn fixed_instances(report: &mut Report) {
    let parse = |s: &str| s.parse::<Graph>().unwrap();
    let cases = [
        ("C5", parse("5 5\n0 1\n1 2\n2 3\n3 4\n0 4"), 5, 5),
        ("K3", parse("3 3\n0 1\n0 2\n1 2"), 3, 3),
        ("K_{2,2}", parse("4 4\n0 2\n0 3\n1 2\n1 3"), 1, 1),
        ("P4", parse("4 3\n0 1\n1 2\n2 3"), 2, 2),
    ];
    let opts = RunOptions::default();
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g, m_i, m_b) in &cases {
        let d = greedy_oct(g, 0);
        let counts = [
            enum_mib(g, &opts).count,
            oct_mib2(g, &d, &opts).unwrap().count,
            brute_mibs(g).unwrap().len(),
        ];
        let mb_counts = [
            mica(g, &opts).count,
            oct_mica(g, &d, &opts).unwrap().count,
            brute_mbs(g).unwrap().len(),
        ];
        ok &= counts.iter().all(|c| c == m_i) && mb_counts.iter().all(|c| c == m_b);
        parts.push(format!("{name} M_I={} M_B={}", counts[0], mb_counts[0]));
    }
    report.record(
        2,
        "fixed small instances",
        if ok { Status::Pass } else { Status::Fail },
        parts.join(", "),
    );
}

fn bipartite_degeneration(report: &mut Report) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let opts = RunOptions::default();
    let mut bad = 0;
    for _ in 0..50 {
        let n_l = rng.random_range(1..=20);
        let n_r = rng.random_range(1..=12);
        let p = rng.random_range(0.05..0.6);
        let mut edges = Vec::new();
        for u in 0..n_l {
            for v in n_l..n_l + n_r {
                if rng.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n_l + n_r, edges).unwrap();
        let d = OctDecomposition::new(g.n(), (0..n_l).collect(), (n_l..g.n()).collect(), vec![])
            .unwrap();
        let expected = bipartite_solve(&g, d.left(), d.right()).unwrap();
        let mbs = sorted(oct_mica(&g, &d, &opts).unwrap());
        let mibs = sorted(oct_mib2(&g, &d, &opts).unwrap());
        if mbs != expected || mibs != mbs {
            bad += 1;
        }
    }
    report.record(
        3,
        "bipartite degeneration",
        if bad == 0 { Status::Pass } else { Status::Fail },
        format!("50 instances, {bad} disagreements"),
    );
}

/// Looks for `<name>.graph` (and optionally `<name>.oct`) under
/// `$BICLIQUES_DATA_DIR` or `tests/data`.
fn dataset(name: &str) -> Option<(Graph, OctDecomposition)> {
    let dir = std::env::var_os("BICLIQUES_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data"));
    let text = std::fs::read_to_string(dir.join(format!("{name}.graph"))).ok()?;
    let g = Graph::parse_edge_list(&text).expect("dataset parses");
    let d = match std::fs::read_to_string(dir.join(format!("{name}.oct"))) {
        Ok(text) => OctDecomposition::parse(&text, g.n()).expect("decomposition parses"),
        Err(_) => greedy_oct(&g, 0),
    };
    Some((g, d))
}

fn published_fixtures(report: &mut Report) {
    let fixtures = [("aa-30", 56, 36), ("aa-24", 3890, 1334)];
    let mut ok = true;
    let mut parts = Vec::new();
    let mut missing = Vec::new();
    for (name, m_i, m_b) in fixtures {
        let Some((g, d)) = dataset(name) else {
            missing.push(name);
            continue;
        };
        let opts = RunOptions::with_timeout(Duration::from_secs(60));
        let mibs = oct_mib2(&g, &d, &opts).unwrap();
        let mbs = oct_mica(&g, &d, &opts).unwrap();
        ok &= !mibs.timed_out && !mbs.timed_out && mibs.count == m_i && mbs.count == m_b;
        parts.push(format!(
            "{name}: M_I={} (want {m_i}, {:.2} s), M_B={} (want {m_b}, {:.2} s)",
            mibs.count, mibs.wall_time, mbs.count, mbs.wall_time
        ));
    }
    let title = "published dataset counts";
    if parts.is_empty() {
        report.record(
            4,
            title,
            Status::Skip,
            format!(
                "graphs {} not found; set BICLIQUES_DATA_DIR to a directory with <name>.graph files",
                missing.join(", ")
            ),
        );
    } else {
        if !missing.is_empty() {
            parts.push(format!("missing {}", missing.join(", ")));
        }
        report.record(
            4,
            title,
            if ok { Status::Pass } else { Status::Fail },
            parts.join("; "),
        );
    }
}

fn generator_fidelity(report: &mut Report) {
    let base = GeneratorParams::default();
    let mut d_lr = 0.0;
    let mut d_cross = 0.0;
    let mut identical = true;
    for seed in 0..5 {
        let p = GeneratorParams {
            seed,
            ..base.clone()
        };
        let (g, d) = generate(&p).unwrap();
        let stats = realized_stats(&g, &d);
        d_lr += stats.d_lr / 5.0;
        d_cross += stats.d_cross / 5.0;
        let (g2, d2) = generate(&p).unwrap();
        identical &= g.to_edge_list() == g2.to_edge_list() && d.to_string() == d2.to_string();
    }
    let rel = (d_lr - base.d_lr).abs() / base.d_lr;
    let ok = rel <= 0.10 && identical;
    report.record(
        5,
        "generator fidelity",
        if ok { Status::Pass } else { Status::Fail },
        format!(
            "n_L={} n_R={} n_O={}: mean d_LR={d_lr:.4} ({:.1}% off 0.05), mean d_cross={d_cross:.4}, same seed identical: {identical}",
            base.n_l,
            base.n_r,
            base.n_o,
            rel * 100.0
        ),
    );
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(|a, b| a.total_cmp(b));
    xs[xs.len() / 2]
}

fn relative_performance(report: &mut Report) {
    let limit = Duration::from_secs(120);
    let opts = RunOptions {
        timeout: Some(limit),
        keep_order: false,
    };
    let algorithms = [
        Algorithm::OctMica,
        Algorithm::Mica,
        Algorithm::OctMib2,
        Algorithm::EnumMib,
    ];
    let mut times = vec![Vec::new(); algorithms.len()];
    let mut all_finished = true;
    let mut counts_agree = true;
    for seed in 0..5 {
        let p = GeneratorParams {
            n_l: 450,
            n_r: 50,
            n_o: 10,
            seed,
            ..GeneratorParams::default()
        };
        let (g, d) = generate(&p).unwrap();
        let counts: Vec<usize> = algorithms
            .iter()
            .zip(&mut times)
            .map(|(a, t)| {
                let r = a.run(&g, Some(&d), &opts).unwrap();
                all_finished &= !r.timed_out;
                t.push(r.wall_time);
                r.count
            })
            .collect();
        counts_agree &= counts[0] == counts[1] && counts[2] == counts[3];
    }
    let med: Vec<f64> = times.into_iter().map(median).collect();
    let ok = all_finished && counts_agree && med[0] <= med[1] && med[2] <= med[3];
    report.record(
        6,
        "relative performance",
        if ok { Status::Pass } else { Status::Fail },
        format!(
            "median s: oct-mica {:.4} vs mica {:.4}, oct-mib2 {:.4} vs enum-mib {:.4}; all under 120 s: {all_finished}; counts agree: {counts_agree}",
            med[0], med[1], med[2], med[3]
        ),
    );
}

fn complexity_smoke(report: &mut Report) {
    let opts = RunOptions {
        timeout: Some(Duration::from_secs(120)),
        keep_order: false,
    };
    let mut rows = Vec::new();
    for scale in [1usize, 2, 4] {
        let p = GeneratorParams {
            n_l: 90 * scale,
            n_r: 10 * scale,
            n_o: 2 * scale,
            seed: 11,
            ..GeneratorParams::default()
        };
        let (g, _) = generate(&p).unwrap();
        let r = enum_mib(&g, &opts);
        let bound = r.count as f64 * g.m() as f64 * g.n() as f64;
        rows.push((g.n(), r.count, r.wall_time, bound));
    }
    let within = rows.windows(2).all(|w| {
        let observed = w[1].2 / w[0].2.max(1e-9);
        let predicted = w[1].3 / w[0].3.max(1.0);
        observed <= 3.0 * predicted
    });
    let detail = rows
        .iter()
        .map(|(n, c, t, _)| format!("n={n} M_I={c} {t:.4} s"))
        .collect::<Vec<_>>()
        .join(", ");
    report.record(
        7,
        "complexity smoke test (non-blocking)",
        Status::Info,
        format!("{detail}; growth within 3x of M_I*m*n: {within}"),
    );
}

#[test]
fn acceptance_criteria() {
    let mut report = Report {
        failures: Vec::new(),
    };
    oracle_equivalence(&mut report);
    fixed_instances(&mut report);
    bipartite_degeneration(&mut report);
    published_fixtures(&mut report);
    generator_fidelity(&mut report);
    relative_performance(&mut report);
    complexity_smoke(&mut report);
    assert!(
        report.failures.is_empty(),
        "failed criteria: {:?}",
        report.failures
    );
}
