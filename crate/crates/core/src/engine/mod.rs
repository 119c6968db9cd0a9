//! Growth series of graph products and of their bounded-excursion subsets,
//! plus the classification and scan operations built on them.

mod classify;
mod scans;

pub use classify::{classify, Classification, ComponentGrowth, Regime};
pub use scans::{lambda_gap_scan, threshold_scan, GapRow, GapScan, ThresholdRow, ThresholdScan};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::graph::{DefiningGraph, VertexGroupSpec};
use crate::series::{expand_fraction, integer_coefficients, SeriesError};
use crate::{Error, QPolynomial, Result, Series};

/// Spherical growth series of a single vertex group.
pub fn vertex_series(spec: &VertexGroupSpec) -> Result<Series> {
    match spec {
        VertexGroupSpec::InfiniteCyclic => {
            Ok(Series::new(QPolynomial::from_i64s(&[1, 1]), QPolynomial::from_i64s(&[1, -1]))?)
        }
        VertexGroupSpec::FiniteCyclic(m) => {
            if *m < 2 {
                return Err(Error::Domain(format!("cyclic order {m} must be at least 2")));
            }
            let m = *m as usize;
            let mut c = vec![0i64; m / 2 + 1];
            for k in 0..m {
                c[k.min(m - k)] += 1;
            }
            Ok(Series::polynomial(QPolynomial::from_i64s(&c)))
        }
        VertexGroupSpec::Explicit(s) => {
            if !s.constant_term().is_one() {
                return Err(Error::Domain("explicit vertex series must have constant term 1".into()));
            }
            Ok(s.clone())
        }
    }
}

/// Growth series of the radius-`bound` ball of the vertex group, as a polynomial.
pub fn truncated_vertex_series(spec: &VertexGroupSpec, bound: usize) -> Result<QPolynomial> {
    if let VertexGroupSpec::InfiniteCyclic = spec {
        let mut c = vec![2i64; bound + 1];
        c[0] = 1;
        return Ok(QPolynomial::from_i64s(&c));
    }
    let s = vertex_series(spec)?;
    if s.is_polynomial() {
        return Ok(s.num().truncate(bound));
    }
    Ok(QPolynomial::new(expand_fraction(s.num(), s.den(), bound)?))
}

/// `1/G = sum over cliques D of prod_{v in D} (1/G_v - 1)`.
pub fn graph_product_series(g: &DefiningGraph) -> Result<Series> {
    let (num, den) = graph_product_parts(g)?;
    Ok(Series::new(num, den)?)
}

/// Unreduced `(P, Q)` with `G = P/Q`, `P(0) = Q(0) = 1`.
fn graph_product_parts(g: &DefiningGraph) -> Result<(QPolynomial, QPolynomial)> {
    if g.is_empty() {
        return Ok((QPolynomial::one(), QPolynomial::one()));
    }
    // h_v = 1/G_v - 1 = (Q_v - P_v) / P_v
    let mut h_num = Vec::with_capacity(g.len());
    let mut h_den = Vec::with_capacity(g.len());
    for v in 0..g.len() {
        let s = vertex_series(g.group(v))?;
        h_num.push(s.den() - s.num());
        h_den.push(s.num().clone());
    }
    // common denominator L = prod_v P_v; clique D contributes prod_{D} h_num * prod_{not D} h_den
    let common = h_den.iter().fold(QPolynomial::one(), |acc, d| &acc * d);
    let mut sum = QPolynomial::zero();
    for clique in g.cliques() {
        let mut term = QPolynomial::one();
        for v in 0..g.len() {
            let factor = if clique.contains(v) { &h_num[v] } else { &h_den[v] };
            term = &term * factor;
        }
        sum = &sum + &term;
    }
    Ok((common, sum))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    DirectProduct,
    FreeProduct,
    Amalgam,
}

/// Growth series of `G1 x G2`, `G1 * G2`, or `G1 *_K G2` (admissible inclusions assumed).
pub fn combine_series(kind: ProductKind, g1: &Series, g2: &Series, k: Option<&Series>) -> Result<Series> {
    match kind {
        ProductKind::DirectProduct => Ok(g1.mul(g2)),
        ProductKind::FreeProduct => Ok(amalgam(g1, g2, &Series::one())?),
        ProductKind::Amalgam => {
            let k = k.ok_or_else(|| Error::Domain("amalgam requires the amalgamated subgroup series".into()))?;
            Ok(amalgam(g1, g2, k)?)
        }
    }
}

fn amalgam(g1: &Series, g2: &Series, k: &Series) -> Result<Series, SeriesError> {
    let inv = g1.recip()?.add(&g2.recip()?).sub(&k.recip()?);
    inv.recip()
}

/// Elements whose excursion in the vertex group of `vertex` is at most `bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedExcursionSeries {
    pub vertex: usize,
    pub bound: usize,
    pub series: Series,
}

/// Unreduced numerator and denominator of a bounded-excursion series.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundedFraction {
    pub num: QPolynomial,
    pub den: QPolynomial,
}

impl BoundedFraction {
    /// Coefficients `0..=n_max` as integers when the fraction is integral, else as rationals.
    pub fn coefficients(&self, n_max: usize) -> Result<Vec<BigRational>> {
        Ok(expand_fraction(&self.num, &self.den, n_max)?)
    }

    pub fn integer_coefficients(&self, n_max: usize) -> Result<Option<Vec<BigInt>>> {
        Ok(integer_coefficients(&self.num, &self.den, n_max)?)
    }
}

/// The pieces of the decomposition `(G_A x G_B) *_{G_B} G_Z` at one vertex,
/// reusable across many bounds.
#[derive(Debug, Clone)]
pub struct ExcursionSetup {
    vertex: usize,
    spec: VertexGroupSpec,
    link: (QPolynomial, QPolynomial),
    rest: (QPolynomial, QPolynomial),
}

impl ExcursionSetup {
    pub fn new(g: &DefiningGraph, vertex: usize) -> Result<Self> {
        if vertex >= g.len() {
            return Err(crate::GraphError::UnknownVertex(format!("#{vertex}")).into());
        }
        let link = g.induced(&g.link(vertex));
        let rest: Vec<usize> = (0..g.len()).filter(|&u| u != vertex).collect();
        let rest = g.induced(&rest);
        let reduce = |(p, q): (QPolynomial, QPolynomial)| -> Result<(QPolynomial, QPolynomial)> {
            let s = Series::new(p, q)?;
            Ok((s.num().clone(), s.den().clone()))
        };
        Ok(Self {
            vertex,
            spec: g.group(vertex).clone(),
            link: reduce(graph_product_parts(&link)?)?,
            rest: reduce(graph_product_parts(&rest)?)?,
        })
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    /// `1/G_E = (1/G_B)(1/A_E - 1) + 1/G_Z`, i.e.
    /// `G_E = P_B A_E P_Z / (Q_B P_Z (1 - A_E) + Q_Z P_B A_E)`.
    pub fn fraction(&self, bound: usize) -> Result<BoundedFraction> {
        let ball = truncated_vertex_series(&self.spec, bound)?;
        let (pb, qb) = &self.link;
        let (pz, qz) = &self.rest;
        let num = &(pb * &ball) * pz;
        let outside = &QPolynomial::one() - &ball;
        let den = &(&(qb * pz) * &outside) + &(&(qz * pb) * &ball);
        Ok(BoundedFraction { num, den })
    }

    pub fn series(&self, bound: usize) -> Result<BoundedExcursionSeries> {
        let f = self.fraction(bound)?;
        Ok(BoundedExcursionSeries {
            vertex: self.vertex,
            bound,
            series: Series::new(f.num, f.den)?,
        })
    }
}

pub fn bounded_excursion_series(g: &DefiningGraph, vertex: usize, bound: usize) -> Result<BoundedExcursionSeries> {
    ExcursionSetup::new(g, vertex)?.series(bound)
}

/// Exact law of the excursion on the sphere of radius `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcursionDistribution {
    pub n: usize,
    pub sphere_size: BigRational,
    /// `probabilities[k] = P_n(E_v = k)`, `k = 0..=n`.
    pub probabilities: Vec<BigRational>,
    pub mean: BigRational,
    /// Least `k` with `P_n(E_v <= k) >= 1/2`.
    pub median: usize,
}

/// `P_n(E_v = k) = (a_{n,k} - a_{n,k-1}) / a_n`.
pub fn excursion_distribution(g: &DefiningGraph, vertex: usize, n: usize) -> Result<ExcursionDistribution> {
    let setup = ExcursionSetup::new(g, vertex)?;
    let (p, q) = graph_product_parts(g)?;
    let a_n = expand_fraction(&p, &q, n)?.pop().expect("n+1 coefficients");
    if a_n.is_zero() {
        return Err(Error::Domain(format!("sphere of radius {n} is empty")));
    }
    // cumulative counts a_{n,k}; for k >= n every element qualifies
    let cumulative: Vec<BigRational> = (0..n)
        .into_par_iter()
        .map(|k| {
            let f = setup.fraction(k)?;
            Ok(f.coefficients(n)?.pop().expect("n+1 coefficients"))
        })
        .chain(rayon::iter::once(Ok(a_n.clone())))
        .collect::<Result<_>>()?;
    let mut probabilities = Vec::with_capacity(n + 1);
    let mut prev = BigRational::zero();
    for c in &cumulative {
        probabilities.push((c - &prev) / &a_n);
        prev = c.clone();
    }
    let mean = probabilities
        .iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (k, p)| acc + p * BigRational::from_integer(k.into()));
    let half = BigRational::new(1.into(), 2.into());
    let median = cumulative
        .iter()
        .position(|c| c / &a_n >= half)
        .unwrap_or(n);
    Ok(ExcursionDistribution {
        n,
        sphere_size: a_n,
        probabilities,
        mean,
        median,
    })
}

/// Sphere sizes `a_0..=a_{n_max}` of the graph product, exact.
pub fn sphere_sizes(g: &DefiningGraph, n_max: usize) -> Result<Vec<BigRational>> {
    let (p, q) = graph_product_parts(g)?;
    Ok(expand_fraction(&p, &q, n_max)?)
}
