//! Brute-force sphere enumeration, used to check the generating functions.
//!
//! Elements are enumerated as canonical geodesic words. Every canonical word
//! of length `n + 1` extends a unique canonical word of length `n` (its prefix),
//! so a depth-first search that only accepts canonical extensions visits each
//! element exactly once and needs no visited set. Subtrees are independent
//! and are searched in parallel.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::engine::{sphere_sizes, ExcursionSetup};
use crate::graph::{Clique, DefiningGraph, VertexGroupSpec};
use crate::words::{flat_excursion, FlatExcursion, FlatMode, Letter, Word, BRUTE_FORCE_LIMIT};
use crate::{Result, Series};

/// Largest sphere the census will enumerate.
pub const CENSUS_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("sphere budget exceeded; largest feasible radius is {reached}")]
    BudgetExceeded { reached: usize },
    #[error("vertex {0:?} has an explicit vertex group and cannot be enumerated")]
    NotCyclic(String),
    #[error("flat excursion is only enumerated up to radius {limit}")]
    FlatRadius { limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereCensus {
    pub n_max: usize,
    /// `sizes[n] = a_n`.
    pub sizes: Vec<u64>,
    /// `(v, h)` with `h[n][k]` the number of length-`n` elements with `E_v = k`.
    pub vertex_histograms: Vec<(usize, Vec<Vec<u64>>)>,
    /// Same, for the flat excursion of the tracked clique.
    pub flat_histogram: Option<Vec<Vec<u64>>>,
}

impl SphereCensus {
    /// `#{ |g| = n, E_v(g) <= e }`, when `v` was tracked.
    pub fn bounded_count(&self, v: usize, n: usize, e: usize) -> Option<u64> {
        let (_, h) = self.vertex_histograms.iter().find(|(u, _)| *u == v)?;
        Some(h[n].iter().take(e + 1).sum())
    }
}

struct Walker<'a> {
    graph: &'a DefiningGraph,
    alphabet: Vec<Letter>,
    n_max: usize,
    tracked: &'a [usize],
    clique: Option<&'a Clique>,
}

#[derive(Clone)]
struct Tally {
    sizes: Vec<u64>,
    vertex: Vec<Vec<Vec<u64>>>,
    flat: Vec<Vec<u64>>,
}

impl Tally {
    fn new(n_max: usize, tracked: usize, flat: bool) -> Self {
        let hist = || (0..=n_max).map(|n| vec![0u64; n + 1]).collect::<Vec<_>>();
        Self {
            sizes: vec![0; n_max + 1],
            vertex: (0..tracked).map(|_| hist()).collect(),
            flat: if flat { hist() } else { Vec::new() },
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.sizes.iter_mut().zip(&other.sizes) {
            *a += b;
        }
        for (h, o) in self.vertex.iter_mut().zip(&other.vertex) {
            add_hist(h, o);
        }
        add_hist(&mut self.flat, &other.flat);
        self
    }
}

fn add_hist(h: &mut [Vec<u64>], o: &[Vec<u64>]) {
    for (row, orow) in h.iter_mut().zip(o) {
        for (a, b) in row.iter_mut().zip(orow) {
            *a += b;
        }
    }
}

impl Walker<'_> {
    /// Is `word + x` a canonical geodesic word, given that `word` is one?
    fn accepts(&self, word: &[Letter], x: Letter) -> bool {
        let g = self.graph;
        let mut i = word.len();
        while i > 0 {
            let z = word[i - 1];
            if z.vertex != x.vertex && g.adjacent(z.vertex, x.vertex) {
                // x could move left past z: only allowed if z sorts first
                if z.vertex > x.vertex {
                    return false;
                }
                i -= 1;
                continue;
            }
            if z.vertex == x.vertex {
                if z.inverse != x.inverse {
                    return false;
                }
                let run = word[..i].iter().rev().take_while(|l| **l == z).count() + 1;
                return spelling_is_canonical(g.group(x.vertex), run, x.inverse);
            }
            break;
        }
        spelling_is_canonical(g.group(x.vertex), 1, x.inverse)
    }

    fn record(&self, word: &[Letter], tally: &mut Tally) {
        let n = word.len();
        tally.sizes[n] += 1;
        for (slot, &v) in self.tracked.iter().enumerate() {
            let mut best = 0;
            let mut run = 0;
            for l in word {
                run = if l.vertex == v { run + 1 } else { 0 };
                best = best.max(run);
            }
            tally.vertex[slot][n][best] += 1;
        }
        if let Some(clique) = self.clique {
            let w = Word::new(self.graph, word.to_vec()).expect("letters of the graph");
            if let Ok(FlatExcursion::Exact(k)) = flat_excursion(&w, clique, FlatMode::Exact) {
                tally.flat[n][k] += 1;
            }
        }
    }

    fn walk(&self, word: &mut Vec<Letter>, tally: &mut Tally) {
        self.record(word, tally);
        if word.len() == self.n_max {
            return;
        }
        for &x in &self.alphabet {
            if self.accepts(word, x) {
                word.push(x);
                self.walk(word, tally);
                word.pop();
            }
        }
    }

    /// Canonical words of length exactly `depth`.
    fn frontier(&self, depth: usize) -> Vec<Vec<Letter>> {
        let mut level = vec![Vec::new()];
        for _ in 0..depth {
            level = level
                .iter()
                .flat_map(|w| {
                    self.alphabet.iter().filter(|&&x| self.accepts(w, x)).map(move |&x| {
                        let mut next = w.clone();
                        next.push(x);
                        next
                    })
                })
                .collect();
        }
        level
    }
}

/// Whether `run` copies of one letter spell a residue canonically.
fn spelling_is_canonical(spec: &VertexGroupSpec, run: usize, inverse: bool) -> bool {
    match spec {
        VertexGroupSpec::FiniteCyclic(m) => {
            let m = *m as usize;
            if inverse {
                2 * run < m
            } else {
                2 * run <= m
            }
        }
        _ => true,
    }
}

pub fn sphere_census(
    g: &DefiningGraph,
    n_max: usize,
    tracked_vertices: &[usize],
    tracked_clique: Option<&Clique>,
) -> Result<SphereCensus> {
    sphere_census_with_budget(g, n_max, tracked_vertices, tracked_clique, CENSUS_BUDGET)
}

pub fn sphere_census_with_budget(
    g: &DefiningGraph,
    n_max: usize,
    tracked_vertices: &[usize],
    tracked_clique: Option<&Clique>,
    budget: u64,
) -> Result<SphereCensus> {
    for v in 0..g.len() {
        if !g.group(v).is_cyclic() {
            return Err(CensusError::NotCyclic(g.name(v).to_string()).into());
        }
    }
    for &v in tracked_vertices {
        if v >= g.len() {
            return Err(crate::GraphError::UnknownVertex(format!("#{v}")).into());
        }
    }
    if tracked_clique.is_some() && n_max > BRUTE_FORCE_LIMIT {
        return Err(CensusError::FlatRadius { limit: BRUTE_FORCE_LIMIT }.into());
    }
    let sizes = sphere_sizes(g, n_max)?;
    if let Some(n) = sizes.iter().position(|a| a > &BigRational::from_integer(budget.into())) {
        return Err(CensusError::BudgetExceeded { reached: n.saturating_sub(1) }.into());
    }

    let mut alphabet = Vec::new();
    for v in 0..g.len() {
        alphabet.push(Letter::new(v, false));
        if spelling_is_canonical(g.group(v), 1, true) {
            alphabet.push(Letter::new(v, true));
        }
    }
    let walker = Walker {
        graph: g,
        alphabet,
        n_max,
        tracked: tracked_vertices,
        clique: tracked_clique,
    };
    let empty = || Tally::new(n_max, tracked_vertices.len(), tracked_clique.is_some());

    // record shallow levels directly, then fan out over the subtrees below them
    let split = n_max.min(3);
    let mut tally = empty();
    for depth in 0..split {
        for w in walker.frontier(depth) {
            walker.record(&w, &mut tally);
        }
    }
    let roots = walker.frontier(split);
    let deep = roots
        .into_par_iter()
        .map(|mut w| {
            let mut t = empty();
            walker.walk(&mut w, &mut t);
            t
        })
        .reduce(empty, Tally::merge);
    let tally = tally.merge(deep);

    Ok(SphereCensus {
        n_max,
        sizes: tally.sizes,
        vertex_histograms: tracked_vertices.iter().copied().zip(tally.vertex).collect(),
        flat_histogram: tracked_clique.map(|_| tally.flat),
    })
}

/// Which generating function disagreed with the census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Witness {
    Sphere { n: usize },
    Bounded { n: usize, vertex: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub witness: Witness,
    pub series: String,
    pub census: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n_max: usize,
    pub e_max: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Smallest radius with a mismatch.
    pub fn first_failure(&self) -> Option<usize> {
        self.mismatches
            .iter()
            .map(|m| match m.witness {
                Witness::Sphere { n } | Witness::Bounded { n, .. } => n,
            })
            .min()
    }
}

/// Compares the growth series and every bounded-excursion series
/// (each vertex, `E <= e_max`) with a census up to `n_max`.
pub fn verify_series_vs_census(g: &DefiningGraph, n_max: usize, e_max: usize) -> Result<VerificationReport> {
    let vertices: Vec<usize> = (0..g.len()).collect();
    let census = sphere_census(g, n_max, &vertices, None)?;
    let series = crate::engine::graph_product_series(g)?;
    let mut report = compare_sphere_counts(&series, &census);
    report.e_max = e_max;
    for &v in &vertices {
        let setup = ExcursionSetup::new(g, v)?;
        for e in 0..=e_max {
            let f = setup.fraction(e)?;
            let coeffs = f.coefficients(n_max)?;
            for (n, c) in coeffs.iter().enumerate() {
                report.checked += 1;
                let counted = census.bounded_count(v, n, e).expect("every vertex is tracked");
                if !equals_count(c, counted) {
                    report.mismatches.push(Mismatch {
                        witness: Witness::Bounded { n, vertex: v, bound: e },
                        series: c.to_string(),
                        census: counted,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Compares the coefficients of an arbitrary series with census sphere sizes.
pub fn compare_sphere_counts(series: &Series, census: &SphereCensus) -> VerificationReport {
    let mut report = VerificationReport {
        n_max: census.n_max,
        e_max: 0,
        checked: 0,
        mismatches: Vec::new(),
    };
    let coeffs = match crate::series::expand_fraction(series.num(), series.den(), census.n_max) {
        Ok(c) => c,
        Err(_) => {
            report.mismatches.push(Mismatch {
                witness: Witness::Sphere { n: 0 },
                series: "not expandable".into(),
                census: census.sizes.first().copied().unwrap_or(0),
            });
            return report;
        }
    };
    for (n, (c, &a)) in coeffs.iter().zip(&census.sizes).enumerate() {
        report.checked += 1;
        if !equals_count(c, a) {
            report.mismatches.push(Mismatch {
                witness: Witness::Sphere { n },
                series: c.to_string(),
                census: a,
            });
        }
    }
    report
}

fn equals_count(c: &BigRational, count: u64) -> bool {
    c.is_integer() && c.to_integer() == BigInt::from(count)
}

/// Census histogram of `E_v` at radius `n` as exact probabilities.
pub fn census_probabilities(census: &SphereCensus, v: usize, n: usize) -> Option<Vec<BigRational>> {
    let (_, h) = census.vertex_histograms.iter().find(|(u, _)| *u == v)?;
    let total = census.sizes[n];
    if total.is_zero() {
        return None;
    }
    Some(
        h[n].iter()
            .map(|&k| BigRational::new(k.into(), total.into()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(g: &DefiningGraph, n: usize) -> Vec<u64> {
        sphere_census(g, n, &[], None).unwrap().sizes
    }

    #[test]
    fn census_examples() {
        let zxz2 = DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap();
        assert_eq!(sizes(&zxz2, 4), vec![1, 6, 26, 110, 466]);
        let path = DefiningGraph::raag(["a", "b", "c"], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(sizes(&path, 3), vec![1, 6, 22, 70]);
        let z = DefiningGraph::raag(["a"], &[]).unwrap();
        assert_eq!(sizes(&z, 5), vec![1, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn finite_vertex_groups() {
        let d = DefiningGraph::new(["x", "y"], &[], vec![VertexGroupSpec::FiniteCyclic(2); 2]).unwrap();
        assert_eq!(sizes(&d, 6), vec![1, 2, 2, 2, 2, 2, 2]);
        let c5 = DefiningGraph::new(["x"], &[], vec![VertexGroupSpec::FiniteCyclic(5)]).unwrap();
        assert_eq!(sizes(&c5, 3), vec![1, 2, 2, 0]);
        let c4 = DefiningGraph::new(["x"], &[], vec![VertexGroupSpec::FiniteCyclic(4)]).unwrap();
        assert_eq!(sizes(&c4, 3), vec![1, 2, 1, 0]);
    }

    #[test]
    fn budget_is_enforced() {
        let zxz2 = DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap();
        let err = sphere_census_with_budget(&zxz2, 5, &[], None, 200).unwrap_err();
        assert_eq!(err, crate::Error::Census(CensusError::BudgetExceeded { reached: 3 }));
    }

    #[test]
    fn histograms_sum_to_sphere() {
        let zxz2 = DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap();
        let bc = Clique::new(&zxz2, vec![1, 2]).unwrap();
        let c = sphere_census(&zxz2, 5, &[0, 1], Some(&bc)).unwrap();
        for n in 0..=5 {
            for (_, h) in &c.vertex_histograms {
                assert_eq!(h[n].iter().sum::<u64>(), c.sizes[n]);
            }
            assert_eq!(c.flat_histogram.as_ref().unwrap()[n].iter().sum::<u64>(), c.sizes[n]);
        }
        assert_eq!(c.vertex_histograms[0].1[2], vec![8, 16, 2]);
    }

    #[test]
    fn corrupted_series_is_caught() {
        let zxz2 = DefiningGraph::raag(["a", "b", "c"], &[(1, 2)]).unwrap();
        let census = sphere_census(&zxz2, 6, &[], None).unwrap();
        let good = crate::engine::graph_product_series(&zxz2).unwrap();
        assert!(compare_sphere_counts(&good, &census).is_ok());
        let mut den = good.den().coeffs().to_vec();
        den[2] += BigRational::from_integer(1.into());
        let bad = Series::new(good.num().clone(), crate::QPolynomial::new(den)).unwrap();
        assert_eq!(compare_sphere_counts(&bad, &census).first_failure(), Some(2));
    }
}
