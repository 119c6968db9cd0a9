//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use raag_growth::census::verify_series_vs_census;
use raag_growth::engine::{
    bounded_excursion_series, excursion_distribution, graph_product_series, lambda_gap_scan, threshold_scan,
};
use raag_growth::series::{pole_analysis, scaled_deviation, tail_error_bound};
use raag_growth::words::{
    brute_force_vertex_excursion, flat_excursion, reduce_word, vertex_excursion, FlatExcursion, FlatMode, Letter,
    Word,
};
use raag_growth::{Clique, DefiningGraph, QPolynomial, Series, VertexGroupSpec};

const LAMBDA_TOLERANCE: f64 = 1e-9;
const TAIL_BOUND_CEILING: f64 = 1e-20;
const SLOPE_RELATIVE_TOLERANCE: f64 = 0.05;
const LOW_THRESHOLD_CEILING: f64 = 0.05;
const HIGH_THRESHOLD_FLOOR: f64 = 0.95;
const THRESHOLD_RADII: [usize; 4] = [100, 300, 1000, 3000];

fn zxz2() -> DefiningGraph {
    DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap()
}

fn path3() -> DefiningGraph {
    DefiningGraph::raag(["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap()
}

fn pentagon() -> DefiningGraph {
    DefiningGraph::raag(["a", "b", "c", "d", "e"], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
}

fn dihedral() -> DefiningGraph {
    DefiningGraph::new(["x", "y"], &[], vec![VertexGroupSpec::FiniteCyclic(2); 2]).unwrap()
}

fn poly(c: &[i64]) -> QPolynomial {
    QPolynomial::from_i64s(c)
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn exact_formulas() -> Outcome {
    let g = zxz2();
    let expected = Series::new(poly(&[1, 2, 1]), poly(&[1, -4, -1])).unwrap();
    if graph_product_series(&g).unwrap() != expected {
        return outcome(false, "growth series differs from (1+t)^2/(1-4t-t^2)");
    }
    for e in 0..=10usize {
        let f = bounded_excursion_series(&g, 0, e).unwrap().series;
        let mut top = vec![0i64; e + 2];
        top[0] = 1;
        top[1] = 1;
        top[e + 1] -= 2;
        let num = &poly(&[1, 2, 1]) * &poly(&top);
        let mut corr = vec![0i64; e + 3];
        corr[e + 2] = 8;
        let den = &(&poly(&[1, -4, -1]) * &poly(&[1, 1])) + &poly(&corr);
        if f.num() * &den != &num * f.den() {
            return outcome(false, format!("bounded series differs at E = {e}"));
        }
    }
    outcome(true, "growth series and bounded series for E = 0..10 match")
}

fn growth_rates() -> Outcome {
    let l1 = pole_analysis(&graph_product_series(&zxz2()).unwrap()).unwrap().lambda;
    let l2 = pole_analysis(&graph_product_series(&pentagon()).unwrap()).unwrap().lambda;
    let d1 = (l1 - (2.0 + 5f64.sqrt())).abs();
    let d2 = (l2 - (4.0 + 5f64.sqrt())).abs();
    outcome(
        d1 < LAMBDA_TOLERANCE && d2 < LAMBDA_TOLERANCE,
        format!("lambda = {l1:.12} (err {d1:.1e}), pentagon {l2:.12} (err {d2:.1e})"),
    )
}

fn oracle_equivalence() -> Outcome {
    let cases: [(&str, DefiningGraph, usize, usize); 4] = [
        ("Z*Z^2", zxz2(), 10, 4),
        ("path", path3(), 9, 4),
        ("pentagon", pentagon(), 7, 3),
        ("Z/2*Z/2", dihedral(), 12, 4),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, g, n, e) in cases {
        let report = verify_series_vs_census(&g, n, e).unwrap();
        pass &= report.is_ok();
        notes.push(format!("{name} n<={n}: {} checks, {} mismatches", report.checked, report.mismatches.len()));
    }
    outcome(pass, notes.join("; "))
}

fn exact_exponential_growth() -> Outcome {
    let n = 200;
    let mut notes = Vec::new();
    let mut pass = true;
    for (name, g, radius) in [("Z*Z^2", zxz2(), 0.9), ("pentagon", pentagon(), 0.5)] {
        let f = graph_product_series(&g).unwrap();
        let pole = pole_analysis(&f).unwrap();
        let bound = tail_error_bound(&f, &pole, radius, n).unwrap();
        let dev = scaled_deviation(&f, &pole, n).unwrap();
        pass &= dev.upper() <= bound && bound < TAIL_BOUND_CEILING;
        notes.push(format!("{name}: |a_n/lambda^n - c| = {:.3e} <= bound {bound:.3e}", dev.upper()));
    }
    outcome(pass, notes.join("; "))
}

fn gap_law() -> Outcome {
    let scan = lambda_gap_scan(&zxz2(), 0, 8, 25).unwrap();
    let target = -(2.0 + 5f64.sqrt()).ln();
    match scan.slope {
        Some(s) => {
            let rel = ((s - target) / target).abs();
            outcome(
                rel <= SLOPE_RELATIVE_TOLERANCE,
                format!("slope {s:.5} vs {target:.5} (relative error {rel:.3})"),
            )
        }
        None => outcome(false, "no slope fitted"),
    }
}

fn trend(g: &DefiningGraph, v: usize) -> (bool, String) {
    let scan = threshold_scan(g, v, &THRESHOLD_RADII, &[0.3, 1.4]).unwrap();
    let (low, high) = scan.rows.split_at(THRESHOLD_RADII.len());
    let p = |rows: &[raag_growth::engine::ThresholdRow]| rows.iter().map(|r| r.probability).collect::<Vec<_>>();
    let (lo, hi) = (p(low), p(high));
    let decreasing = lo.windows(2).all(|w| w[1] < w[0]) && *lo.last().unwrap() < LOW_THRESHOLD_CEILING;
    let increasing = hi.windows(2).all(|w| w[1] > w[0]) && *hi.last().unwrap() > HIGH_THRESHOLD_FLOOR;
    let fmt = |xs: &[f64]| xs.iter().map(|x| format!("{x:.4e}")).collect::<Vec<_>>().join(", ");
    (
        decreasing && increasing,
        format!("c=0.3: [{}] decreasing={decreasing}; c=1.4: [{}] increasing={increasing}", fmt(&lo), fmt(&hi)),
    )
}

fn threshold_law() -> Outcome {
    let (pass, detail) = trend(&zxz2(), 0);
    outcome(pass, detail)
}

fn reducible_trichotomy() -> Outcome {
    let g = path3();
    for n in 1..=30u32 {
        let d = excursion_distribution(&g, 1, n as usize).unwrap();
        let t = BigInt::from(3).pow(n - 1);
        let expected = BigRational::new(4 * &t, 8 * &t - 2);
        if d.probabilities[0] != expected {
            return outcome(false, format!("P_n(E_b = 0) differs from the closed form at n = {n}"));
        }
    }
    let (pass, detail) = trend(&g, 0);
    outcome(pass, format!("P_n(E_b = 0) exact for n <= 30; v = a: {detail}"))
}

/// Every element of length at most `n_max`, by breadth-first search on reduced words.
fn ball(g: &DefiningGraph, n_max: usize) -> Vec<Vec<Letter>> {
    let gens: Vec<Letter> = (0..g.len()).flat_map(|v| [Letter::new(v, false), Letter::new(v, true)]).collect();
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    seen.insert(Vec::new());
    let mut frontier = vec![Vec::new()];
    for _ in 0..n_max {
        let mut next = Vec::new();
        for w in &frontier {
            for &x in &gens {
                let mut letters = w.clone();
                letters.push(x);
                let r = reduce_word(&Word::new(g, letters).unwrap()).letters();
                if r.len() == w.len() + 1 && seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

fn random_word<'g>(g: &'g DefiningGraph, len: usize, rng: &mut ChaCha8Rng) -> Word<'g> {
    let letters = (0..len).map(|_| Letter::new(rng.gen_range(0..g.len()), rng.gen_bool(0.5))).collect();
    Word::new(g, letters).unwrap()
}

fn normal_form_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0usize;
    for (g, radius) in [(zxz2(), 8), (pentagon(), 6)] {
        for letters in ball(&g, radius) {
            let w = Word::new(&g, letters).unwrap();
            for v in 0..g.len() {
                checked += 1;
                if vertex_excursion(&w, v) != brute_force_vertex_excursion(&w, v).unwrap() {
                    return outcome(false, format!("mismatch on {w} at vertex {}", g.name(v)));
                }
            }
        }
        let mut random = 0;
        while random < 1000 {
            let w = random_word(&g, rng.gen_range(1..=24), &mut rng);
            if reduce_word(&w).len() > 12 {
                continue;
            }
            random += 1;
            for v in 0..g.len() {
                checked += 1;
                if vertex_excursion(&w, v) != brute_force_vertex_excursion(&w, v).unwrap() {
                    return outcome(false, format!("mismatch on {w} at vertex {}", g.name(v)));
                }
            }
        }
    }
    outcome(true, format!("{checked} (word, vertex) pairs agree"))
}

fn flat_sandwich() -> Outcome {
    let g = zxz2();
    let clique = Clique::new(&g, vec![1, 2]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let w = random_word(&g, rng.gen_range(1..=10), &mut rng);
        let exact = match flat_excursion(&w, &clique, FlatMode::Exact).unwrap() {
            FlatExcursion::Exact(k) => k,
            other => return outcome(false, format!("unexpected {other:?}")),
        };
        let (lower, upper) = match flat_excursion(&w, &clique, FlatMode::Bounds).unwrap() {
            FlatExcursion::Bounds { lower, upper } => (lower, upper),
            other => return outcome(false, format!("unexpected {other:?}")),
        };
        if exact < lower || exact > upper {
            return outcome(false, format!("{w}: exact {exact} outside [{lower}, {upper}]"));
        }
    }
    outcome(true, "500 random words inside [max E_v, 2 max E_v]")
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("exact formula reproduction", Duration::from_secs(1), exact_formulas),
        ("growth rates", Duration::from_secs(1), growth_rates),
        ("series vs census", Duration::from_secs(120), oracle_equivalence),
        ("exact exponential growth", Duration::from_secs(5), exact_exponential_growth),
        ("gap law", Duration::from_secs(10), gap_law),
        ("logarithmic threshold", Duration::from_secs(60), threshold_law),
        ("reducible trichotomy", Duration::from_secs(30), reducible_trichotomy),
        ("normal form equivalence", Duration::from_secs(120), normal_form_equivalence),
        ("flat sandwich", Duration::from_secs(60), flat_sandwich),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= *limit;
        let pass = result.pass && in_time;
        if !pass {
            failed += 1;
        }
        println!(
            "[{}] {}. {name}: {} ({:.2}s, limit {}s{})",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            result.detail,
            elapsed.as_secs_f64(),
            limit.as_secs(),
            if in_time { "" } else { ", too slow" },
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
