use std::collections::HashSet;

use proptest::prelude::*;

use raag_growth::words::{
    brute_force_vertex_excursion, normal_form_rel_vertex, reduce_word, reduced_vertex_excursion, vertex_excursion,
    Letter, Word,
};
use raag_growth::{DefiningGraph, VertexGroupSpec};

fn graphs() -> Vec<DefiningGraph> {
    vec![
        DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap(),
        DefiningGraph::raag(["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap(),
        DefiningGraph::raag(["a", "b", "c", "d", "e"], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        DefiningGraph::new(
            ["x", "y", "z"],
            &[(0, 1)],
            vec![VertexGroupSpec::FiniteCyclic(2), VertexGroupSpec::FiniteCyclic(5), VertexGroupSpec::FiniteCyclic(4)],
        )
        .unwrap(),
    ]
}

fn letters(g: &DefiningGraph, raw: &[(usize, bool)]) -> Vec<Letter> {
    raw.iter().map(|&(v, inv)| Letter::new(v % g.len(), inv)).collect()
}

fn raw_word(max: usize) -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..5, any::<bool>()), 0..=max)
}

proptest! {
    #[test]
    fn reduction_is_idempotent(gi in 0usize..4, raw in raw_word(30)) {
        let g = &graphs()[gi];
        let r = reduce_word(&Word::new(g, letters(g, &raw)).unwrap());
        let again = reduce_word(&r.to_word());
        prop_assert_eq!(r.letters(), again.letters());
    }

    #[test]
    fn equal_elements_share_a_canonical_word(
        gi in 0usize..4,
        raw in raw_word(20),
        inserts in prop::collection::vec((0usize..64, 0usize..5, any::<bool>()), 0..6),
        swaps in prop::collection::vec(0usize..64, 0..40),
    ) {
        let g = &graphs()[gi];
        let original = letters(g, &raw);
        let mut w = original.clone();
        for &(pos, v, inv) in &inserts {
            let x = Letter::new(v % g.len(), inv);
            let at = pos % (w.len() + 1);
            w.insert(at, x.inv());
            w.insert(at, x);
        }
        for &pos in &swaps {
            if w.len() < 2 {
                break;
            }
            let i = pos % (w.len() - 1);
            if w[i].vertex != w[i + 1].vertex && g.adjacent(w[i].vertex, w[i + 1].vertex) {
                w.swap(i, i + 1);
            }
        }
        let a = reduce_word(&Word::new(g, original).unwrap());
        let b = reduce_word(&Word::new(g, w).unwrap());
        prop_assert_eq!(a.letters(), b.letters());
    }

    #[test]
    fn word_times_inverse_is_trivial(gi in 0usize..4, raw in raw_word(25)) {
        let g = &graphs()[gi];
        let w = Word::new(g, letters(g, &raw)).unwrap();
        prop_assert!(reduce_word(&w.concat(&w.inverse())).is_empty());
    }

    #[test]
    fn decomposition_is_length_additive(gi in 0usize..4, raw in raw_word(30)) {
        let g = &graphs()[gi];
        let r = reduce_word(&Word::new(g, letters(g, &raw)).unwrap());
        for v in 0..g.len() {
            let d = normal_form_rel_vertex(&r, v);
            prop_assert_eq!(d.len(), r.len());
            let back = reduce_word(&Word::new(g, d.letters()).unwrap());
            prop_assert_eq!(back.letters(), r.letters());
            prop_assert!(d.prefix.iter().all(|s| s.vertex != v && g.adjacent(s.vertex, v)));
            for (i, (a, t)) in d.blocks.iter().enumerate() {
                prop_assert!(i == 0 || *a != 0);
                if i + 1 < d.blocks.len() {
                    prop_assert!(t.iter().any(|s| s.vertex != v && !g.adjacent(s.vertex, v)));
                }
            }
            prop_assert_eq!(d.excursion(), reduced_vertex_excursion(&r, v));
        }
    }
}

/// Every reduced word up to length `n`, by breadth-first search.
fn ball(g: &DefiningGraph, n: usize) -> Vec<Vec<Letter>> {
    let gens: Vec<Letter> = (0..g.len()).flat_map(|v| [Letter::new(v, false), Letter::new(v, true)]).collect();
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([Vec::new()]);
    let mut frontier = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &frontier {
            for &x in &gens {
                let mut l = w.clone();
                l.push(x);
                let r = reduce_word(&Word::new(g, l).unwrap()).letters();
                if r.len() == w.len() + 1 && seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

#[test]
fn excursion_matches_brute_force_on_path_and_finite_groups() {
    for (gi, radius) in [(1, 8), (3, 8)] {
        let g = &graphs()[gi];
        for l in ball(g, radius) {
            let w = Word::new(g, l).unwrap();
            for v in 0..g.len() {
                assert_eq!(vertex_excursion(&w, v), brute_force_vertex_excursion(&w, v).unwrap(), "{w}");
            }
        }
    }
}

#[test]
fn canonical_words_are_geodesic() {
    // sphere sizes from the ball agree with the known growth of the path graph
    let g = &graphs()[1];
    let mut counts = [0u64; 6];
    for l in ball(g, 5) {
        counts[l.len()] += 1;
    }
    assert_eq!(counts, [1, 6, 22, 70, 214, 646]);
}
