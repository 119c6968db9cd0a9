use std::collections::HashSet;


use raag_growth::census::{census_probabilities, sphere_census, verify_series_vs_census};
use raag_growth::engine::{excursion_distribution, graph_product_series};
use raag_growth::series::{taylor_coefficients, CoefficientMode};
use raag_growth::words::{flat_excursion, reduce_word, FlatExcursion, FlatMode, Letter, Word};
use raag_growth::{Clique, DefiningGraph, VertexGroupSpec};

fn three_vertex_graphs() -> Vec<DefiningGraph> {
    let names = ["a", "b", "c"];
    vec![
        DefiningGraph::raag(names, &[]).unwrap(),
        DefiningGraph::raag(names, &[(1, 2)]).unwrap(),
        DefiningGraph::raag(names, &[(0, 1), (1, 2)]).unwrap(),
        DefiningGraph::raag(names, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
    ]
}

fn pentagon() -> DefiningGraph {
    DefiningGraph::raag(["a", "b", "c", "d", "e"], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
}

fn assert_matches_series(g: &DefiningGraph, n: usize) {
    let census = sphere_census(g, n, &[], None).unwrap();
    let f = graph_product_series(g).unwrap();
    let c = taylor_coefficients(&f, n, CoefficientMode::Exact).unwrap().integers().unwrap();
    let expected: Vec<u64> = c.iter().map(|x| u64::try_from(x).unwrap()).collect();
    assert_eq!(census.sizes, expected);
}

#[test]
fn census_matches_series_on_small_graphs() {
    for g in three_vertex_graphs() {
        assert_matches_series(&g, 10);
    }
    assert_matches_series(&pentagon(), 8);
    let mixed = DefiningGraph::new(
        ["x", "y", "z"],
        &[(0, 1)],
        vec![VertexGroupSpec::FiniteCyclic(3), VertexGroupSpec::FiniteCyclic(4), VertexGroupSpec::InfiniteCyclic],
    )
    .unwrap();
    assert_matches_series(&mixed, 10);
}

#[test]
fn histograms_match_distributions() {
    for g in three_vertex_graphs().into_iter().chain([pentagon()]) {
        let vertices: Vec<usize> = (0..g.len()).collect();
        let census = sphere_census(&g, 7, &vertices, None).unwrap();
        for &v in &vertices {
            for n in 0..=7 {
                let d = excursion_distribution(&g, v, n).unwrap();
                assert_eq!(census_probabilities(&census, v, n).unwrap(), d.probabilities);
            }
        }
    }
}

#[test]
fn verification_with_finite_vertex_groups() {
    let g = DefiningGraph::new(
        ["x", "y", "z"],
        &[(1, 2)],
        vec![VertexGroupSpec::FiniteCyclic(2), VertexGroupSpec::FiniteCyclic(5), VertexGroupSpec::InfiniteCyclic],
    )
    .unwrap();
    let report = verify_series_vs_census(&g, 8, 3).unwrap();
    assert!(report.is_ok(), "{:?}", report.mismatches);
}

#[test]
fn census_is_schedule_independent() {
    let g = pentagon();
    let clique = Clique::new(&g, vec![0, 1]).unwrap();
    let parallel = sphere_census(&g, 6, &[0, 2], Some(&clique)).unwrap();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let serial = pool.install(|| sphere_census(&g, 6, &[0, 2], Some(&clique)).unwrap());
    assert_eq!(parallel, serial);
}

#[test]
fn flat_excursion_sandwich_element_by_element() {
    let g = DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap();
    let clique = Clique::new(&g, vec![1, 2]).unwrap();
    let gens: Vec<Letter> = (0..3).flat_map(|v| [Letter::new(v, false), Letter::new(v, true)]).collect();
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([Vec::new()]);
    let mut frontier = vec![Vec::new()];
    for _ in 0..7 {
        let mut next = Vec::new();
        for w in &frontier {
            for &x in &gens {
                let mut l = w.clone();
                l.push(x);
                let r = reduce_word(&Word::new(&g, l).unwrap()).letters();
                if r.len() == w.len() + 1 && seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    let mut histogram = vec![vec![0u64; 8]; 8];
    for l in &seen {
        let w = Word::new(&g, l.clone()).unwrap();
        let FlatExcursion::Exact(k) = flat_excursion(&w, &clique, FlatMode::Exact).unwrap() else { panic!() };
        let FlatExcursion::Bounds { lower, upper } = flat_excursion(&w, &clique, FlatMode::Bounds).unwrap() else {
            panic!()
        };
        assert!(lower <= k && k <= upper, "{w}");
        histogram[l.len()][k] += 1;
    }
    let census = sphere_census(&g, 7, &[], Some(&clique)).unwrap();
    let flat = census.flat_histogram.unwrap();
    for n in 0..=7 {
        assert_eq!(flat[n][..], histogram[n][..=n]);
    }
    // a flat excursion of k needs at least k letters
    assert!(flat.iter().enumerate().all(|(n, row)| row.len() == n + 1));
}
