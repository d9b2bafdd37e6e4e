//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use bidom::{
    combined_grid, compute_statistic, h_at, l_at, replicate_rng, run_simulation,
    sup_delta_functional, sup_delta_surface, Adjustment, BivariateSample, BootstrapConfig, Class,
    Direction, EmpiricalCdf, Functional, GeneratorFamily, Hypothesis, Order, SimulationConfig,
    StatisticKind, Surface,
};
use bidom_cli::report::TestReport;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// Random sample of `size` points; every other call snaps to a 1/10 lattice
/// so that ties between and within samples are common.
fn random_sample(rng: &mut impl Rng, size: usize) -> BivariateSample<f64> {
    let snap = rng.gen_bool(0.5);
    let mut coord = || {
        if snap {
            f64::from(rng.gen_range(0..=10u8)) / 10.0
        } else {
            rng.gen::<f64>()
        }
    };
    let points = (0..size).map(|_| (coord(), coord())).collect();
    BivariateSample::new(points).unwrap()
}

fn random_pair(rng: &mut impl Rng, max: usize) -> (BivariateSample<f64>, BivariateSample<f64>) {
    let m = rng.gen_range(2..=max);
    let n = rng.gen_range(2..=max);
    (random_sample(rng, m), random_sample(rng, n))
}

/// Sorted union of a uniform partition with `extra` breakpoints.
fn refined_nodes(cells: usize, extra: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut nodes: Vec<f64> = (0..=cells)
        .map(|k| k as f64 / cells as f64)
        .chain(extra)
        .collect();
    nodes.sort_by(f64::total_cmp);
    nodes.dedup();
    nodes
}

// 1. Closed forms of H and L against midpoint quadrature of cdf_at and k_at.
// The 2000-cell partition is refined at the sample coordinates so that each
// integrand is constant on every cell.
fn closed_form_exactness() -> Outcome {
    let mut rng = replicate_rng(1, 0);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let size = rng.gen_range(2..=50);
        let s = random_sample(&mut rng, size);
        let cdf = EmpiricalCdf::new(&s);
        let xs = refined_nodes(2000, s.points().iter().map(|p| p.0));
        let ys = refined_nodes(2000, s.points().iter().map(|p| p.1));
        let coarse = |v: &[f64], extra: Vec<f64>| -> Vec<bool> {
            v.iter()
                .enumerate()
                .map(|(k, x)| k % 50 == 0 || extra.contains(x) || k == v.len() - 1)
                .collect()
        };
        let qx = coarse(&xs, s.points().iter().map(|p| p.0).collect());
        let qy = coarse(&ys, s.points().iter().map(|p| p.1).collect());
        let mx: Vec<f64> = xs.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        let wx: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        // per x-cell running integrals over the y-cells below the current row
        let mut col_f = vec![0.0; mx.len()];
        let mut col_k = vec![0.0; mx.len()];
        for j in 0..ys.len() - 1 {
            let (my, wy) = (0.5 * (ys[j] + ys[j + 1]), ys[j + 1] - ys[j]);
            for i in 0..mx.len() {
                col_f[i] += cdf.cdf_at(mx[i], my) * wx[i] * wy;
                col_k[i] += cdf.k_at(mx[i], my) * wx[i] * wy;
            }
            if !qy[j + 1] {
                continue;
            }
            let y = ys[j + 1];
            let (mut hf, mut hk) = (0.0, 0.0);
            for i in 0..mx.len() {
                hf += col_f[i];
                hk += col_k[i];
                if qx[i + 1] {
                    let x = xs[i + 1];
                    worst = worst.max((h_at(&s, x, y) - hf).abs());
                    worst = worst.max((l_at(&s, x, y) - hk).abs());
                }
            }
        }
    }
    check(
        worst <= 1e-5,
        format!("max abs error {worst:.3e} (tol 1e-5)"),
    )
}

fn delta_at(
    which: usize,
    a: &BivariateSample<f64>,
    b: &BivariateSample<f64>,
    fa: &EmpiricalCdf<f64>,
    fb: &EmpiricalCdf<f64>,
    x: f64,
    y: f64,
) -> f64 {
    match which {
        0 => fa.cdf_at(x, y) - fb.cdf_at(x, y),
        1 => fa.k_at(x, y) - fb.k_at(x, y),
        2 => h_at(a, x, y) - h_at(b, x, y),
        _ => l_at(a, x, y) - l_at(b, x, y),
    }
}

// 2. Exact suprema against a 513² probe grid plus every combined-grid vertex.
fn supremum_exactness() -> Outcome {
    let mut rng = replicate_rng(2, 0);
    let (mut vertex_gap, mut probe_excess) = (0.0f64, f64::NEG_INFINITY);
    for _ in 0..200 {
        let (a, b) = random_pair(&mut rng, 30);
        let (fa, fb) = (EmpiricalCdf::new(&a), EmpiricalCdf::new(&b));
        let grid = combined_grid(&a, &b);
        let exact = [
            sup_delta_surface(Surface::DeltaF, &fa, &fb, &grid)
                .unwrap()
                .value,
            sup_delta_surface(Surface::DeltaK, &fa, &fb, &grid)
                .unwrap()
                .value,
            sup_delta_functional(Functional::DeltaH, &a, &b, &grid)
                .unwrap()
                .value,
            sup_delta_functional(Functional::DeltaL, &a, &b, &grid)
                .unwrap()
                .value,
        ];
        for (w, &e) in exact.iter().enumerate() {
            let on_vertices = grid
                .vertices()
                .map(|(x, y)| delta_at(w, &a, &b, &fa, &fb, x, y))
                .fold(f64::NEG_INFINITY, f64::max);
            let mut on_probes = f64::NEG_INFINITY;
            for i in 0..513 {
                for j in 0..513 {
                    let (x, y) = (i as f64 / 512.0, j as f64 / 512.0);
                    on_probes = on_probes.max(delta_at(w, &a, &b, &fa, &fb, x, y));
                }
            }
            vertex_gap = vertex_gap.max((on_vertices - e).abs());
            probe_excess = probe_excess.max(on_probes - e);
        }
    }
    check(
        vertex_gap <= 1e-12 && probe_excess <= 1e-12,
        format!("vertex gap {vertex_gap:.2e}, probe excess {probe_excess:.2e} (tol 1e-12)"),
    )
}

// 3. Hand-derived values.
fn hand_values() -> Outcome {
    let s = |p: &[(f64, f64)]| BivariateSample::new(p.to_vec()).unwrap();
    let lambda = compute_statistic(
        StatisticKind::LAMBDA,
        &s(&[(0.2, 0.2), (0.6, 0.6)]),
        &s(&[(0.4, 0.4)]),
    )
    .unwrap()
    .value;
    let mu = compute_statistic(StatisticKind::MU, &s(&[(0.0, 0.0)]), &s(&[(0.5, 0.5)]))
        .unwrap()
        .value;
    let want_lambda = (2.0f64 / 3.0).sqrt() * 0.5;
    let want_mu = 0.5f64.sqrt() * 0.75;
    let err = (lambda - want_lambda).abs().max((mu - want_mu).abs());
    check(
        err <= 1e-12,
        format!("lambda {lambda:.15}, mu {mu:.15}, max error {err:.1e} (tol 1e-12)"),
    )
}

// 4. Nonnegativity, and exact zero on identical samples.
fn nonnegativity() -> Outcome {
    let mut rng = replicate_rng(4, 0);
    let (mut min, mut max_self) = (f64::INFINITY, 0.0f64);
    for _ in 0..1000 {
        let (a, b) = random_pair(&mut rng, 40);
        for kind in StatisticKind::ALL {
            min = min.min(compute_statistic(kind, &a, &b).unwrap().value);
            max_self = max_self.max(compute_statistic(kind, &a, &a).unwrap().value.abs());
        }
    }
    check(
        min >= 0.0 && max_self == 0.0,
        format!("smallest value {min:.3e}, largest self-comparison {max_self}"),
    )
}

fn write_sample(path: &Path, s: &BivariateSample<f64>) {
    let text: String = s
        .points()
        .iter()
        .map(|(x, y)| format!("{x},{y}\n"))
        .collect();
    std::fs::write(path, text).unwrap();
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_bidom"))
        .args(args)
        .env_remove("BIDOM_THREADS")
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

// 5. Byte-identical reports; worker count leaves the replicate multiset alone.
fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (pa, pb) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    let mut rng = replicate_rng(5, 0);
    write_sample(&pa, &random_sample(&mut rng, 60));
    write_sample(&pb, &random_sample(&mut rng, 45));
    let (pa, pb) = (pa.to_str().unwrap(), pb.to_str().unwrap());
    let mut problems = Vec::new();
    for (order, class) in [("first", "submodular"), ("second", "supermodular")] {
        let base = [
            "test",
            "--a",
            pa,
            "--b",
            pb,
            "--order",
            order,
            "--class",
            class,
            "--replicates",
            "199",
            "--seed",
            "11",
            "--include-replicates",
        ];
        let with = |workers: &str| {
            let mut v = base.to_vec();
            v.extend(["--workers", workers]);
            run_cli(&v)
        };
        if run_cli(&base) != run_cli(&base) {
            problems.push(format!("{order}/{class}: repeated runs differ"));
        }
        let reports: Vec<TestReport> = ["1", "3"]
            .into_iter()
            .map(|w| serde_json::from_slice(&with(w)).unwrap())
            .collect();
        for (c1, c3) in reports[0].conditions.iter().zip(&reports[1].conditions) {
            let sorted = |v: &Option<Vec<f64>>| {
                let mut v = v.clone().unwrap();
                v.sort_by(f64::total_cmp);
                v
            };
            if sorted(&c1.replicates) != sorted(&c3.replicates) {
                problems.push(format!(
                    "{order}/{class} {}: replicate multiset changed",
                    c1.name
                ));
            }
        }
    }
    check(
        problems.is_empty(),
        if problems.is_empty() {
            "identical bytes across runs; same replicates with 1 and 3 workers".into()
        } else {
            problems.join("; ")
        },
    )
}

fn simulate(
    family_a: GeneratorFamily,
    family_b: GeneratorFamily,
    size: usize,
    trials: usize,
    direction: Direction,
    seed: u64,
) -> f64 {
    let cfg = SimulationConfig {
        family_a,
        family_b,
        m: size,
        n: size,
        trials,
        hypothesis: Hypothesis::new(Order::First, Class::Submodular, direction).unwrap(),
        bootstrap: BootstrapConfig {
            replicates: 199,
            seed,
            beta: 0.05,
            workers: None,
        },
        adjustment: Adjustment::None,
    };
    run_simulation(&cfg).unwrap().frequency
}

// 6. Size under equal generators.
fn size_calibration() -> Outcome {
    let u = GeneratorFamily::IndependentUniform;
    let freq = simulate(u, u, 100, 500, Direction::ADominatesB, 6);
    check(
        (0.02..=0.09).contains(&freq),
        format!("rejection frequency {freq:.3} (want [0.02, 0.09])"),
    )
}

// 7. Power against a false dominance claim, and size of the true one.
fn power() -> Outcome {
    let (u, s) = (
        GeneratorFamily::IndependentUniform,
        GeneratorFamily::ScaledUniform(0.8),
    );
    let false_claim = simulate(u, s, 200, 200, Direction::BDominatesA, 7);
    let true_claim = simulate(u, s, 200, 200, Direction::ADominatesB, 7);
    check(
        false_claim >= 0.9 && true_claim <= 0.05,
        format!("false direction {false_claim:.3} (want >= 0.9), true direction {true_claim:.3} (want <= 0.05)"),
    )
}

/// `max_z (F_a - F_b)(z)` on one coordinate, merged from sorted values and
/// formed on integer counts.
fn univariate_ks(a: &[f64], b: &[f64]) -> f64 {
    let sorted = |v: &[f64]| {
        let mut v = v.to_vec();
        v.sort_by(f64::total_cmp);
        v
    };
    let (a, b) = (sorted(a), sorted(b));
    let (m, n) = (a.len() as i64, b.len() as i64);
    let (mut i, mut j, mut best) = (0usize, 0usize, 0i64);
    for z in sorted(&[a.as_slice(), b.as_slice(), &[0.0]].concat()) {
        while i < a.len() && a[i] <= z {
            i += 1;
        }
        while j < b.len() && b[j] <= z {
            j += 1;
        }
        best = best.max(i as i64 * n - j as i64 * m);
    }
    best as f64 / (m * n) as f64
}

// 8. Marginal statistic equals the univariate KS-type statistic.
fn marginal_agreement() -> Outcome {
    let mut rng = replicate_rng(8, 0);
    let kind = StatisticKind::new(Order::First, Class::MarginalX);
    let mut mismatches = 0;
    for _ in 0..100 {
        let (a, b) = random_pair(&mut rng, 60);
        let xs = |s: &BivariateSample<f64>| s.points().iter().map(|p| p.0).collect::<Vec<_>>();
        let got = compute_statistic(kind, &a, &b).unwrap();
        let want = univariate_ks(&xs(&a), &xs(&b));
        if got.raw_sup != want || got.value != want * got.scale {
            mismatches += 1;
        }
    }
    check(mismatches == 0, format!("{mismatches}/100 mismatches"))
}

// 9. k_at against a direct count of the union event.
fn union_counts() -> Outcome {
    let mut rng = replicate_rng(9, 0);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let size = rng.gen_range(1..=30);
        let s = random_sample(&mut rng, size);
        let cdf = EmpiricalCdf::new(&s);
        for q in 0..100 {
            let (x, y) = if q % 2 == 0 {
                let p = s.points()[rng.gen_range(0..size)];
                let o = s.points()[rng.gen_range(0..size)];
                (p.0, o.1)
            } else {
                (rng.gen(), rng.gen())
            };
            let direct = s.points().iter().filter(|p| p.0 <= x || p.1 <= y).count();
            if cdf.k_at(x, y) != direct as f64 / size as f64 {
                mismatches += 1;
            }
        }
    }
    check(mismatches == 0, format!("{mismatches}/100000 mismatches"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("closed-form exactness", closed_form_exactness),
        ("supremum exactness", supremum_exactness),
        ("hand-derived values", hand_values),
        ("nonnegativity and zero cases", nonnegativity),
        ("bootstrap determinism", determinism),
        ("size calibration", size_calibration),
        ("power and consistency", power),
        ("marginal agreement", marginal_agreement),
        ("union-event counts", union_counts),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(d) => println!("criterion {} {name}: PASS ({d}) [{secs:.1}s]", k + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({d}) [{secs:.1}s]", k + 1)
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
