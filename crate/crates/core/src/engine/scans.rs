use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{classify, graph_product_parts, ExcursionSetup};
use crate::graph::DefiningGraph;
use crate::series::{expand_fraction, pole_analysis_with_precision, rational_to_f64, SeriesError};
use crate::{Error, Result, Series};

/// Root enclosure width for the scans; gaps shrink like `lambda^-E`.
const GAP_PRECISION: f64 = 1e-80;
/// Largest radius accepted by [`threshold_scan`].
pub const MAX_THRESHOLD_RADIUS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapRow {
    pub bound: usize,
    pub lambda_e: f64,
    /// `lambda - lambda_E`, computed from exact root enclosures.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GapScan {
    pub lambda: f64,
    pub rows: Vec<GapRow>,
    /// Bounds in the range whose bounded group has no exponential pole.
    pub skipped: Vec<usize>,
    /// Least-squares slope of `ln(gap)` against `E`; expected near `-ln(lambda)`.
    pub slope: Option<f64>,
}

/// `lambda_E` for each `E` in `e_min..=e_max` and the fitted decay rate of the gap.
pub fn lambda_gap_scan(g: &DefiningGraph, vertex: usize, e_min: usize, e_max: usize) -> Result<GapScan> {
    if e_min > e_max {
        return Err(Error::Domain(format!("empty range {e_min}..={e_max}")));
    }
    let class = classify(g)?;
    if !class.irreducible || class.lambda <= 1.0 {
        return Err(Error::Domain("gap scan needs an irreducible graph with exponential growth".into()));
    }
    let (p, q) = graph_product_parts(g)?;
    let full = pole_analysis_with_precision(&Series::new(p, q)?, GAP_PRECISION)?;
    let lambda = full.lambda_exact();
    let setup = ExcursionSetup::new(g, vertex)?;
    let outcomes: Vec<(usize, Option<GapRow>)> = (e_min..=e_max)
        .into_par_iter()
        .map(|e| {
            let bounded = setup.series(e)?;
            match pole_analysis_with_precision(&bounded.series, GAP_PRECISION) {
                Ok(pole) => {
                    let gap = rational_to_f64(&(&lambda - pole.lambda_exact()));
                    Ok((e, Some(GapRow { bound: e, lambda_e: pole.lambda, gap })))
                }
                Err(SeriesError::NoExponentialPole) => Ok((e, None)),
                Err(err) => Err(err.into()),
            }
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (e, row) in outcomes {
        match row {
            Some(r) => rows.push(r),
            None => skipped.push(e),
        }
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.gap > 0.0)
        .map(|r| (r.bound as f64, r.gap.ln()))
        .collect();
    Ok(GapScan {
        lambda: full.lambda,
        rows,
        skipped,
        slope: least_squares_slope(&points),
    })
}

fn least_squares_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdRow {
    pub n: usize,
    pub c: f64,
    pub bound: usize,
    #[serde(skip)]
    pub exact: BigRational,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdScan {
    /// `1 / ln(lambda)`, absent without exponential growth.
    pub threshold: Option<f64>,
    pub rows: Vec<ThresholdRow>,
}

/// `E = floor(c ln n)`; radius 0 and 1 both give `E = 0`.
pub fn threshold_bound(c: f64, n: usize) -> usize {
    if n <= 1 {
        return 0;
    }
    (c * (n as f64).ln()).floor().max(0.0) as usize
}

/// `P_n(E_v <= floor(c ln n))` for every `c` in `c_list` (outer) and `n` in `n_list` (inner).
pub fn threshold_scan(g: &DefiningGraph, vertex: usize, n_list: &[usize], c_list: &[f64]) -> Result<ThresholdScan> {
    if let Some(&n) = n_list.iter().find(|&&n| n > MAX_THRESHOLD_RADIUS) {
        return Err(Error::Domain(format!("radius {n} exceeds the limit {MAX_THRESHOLD_RADIUS}")));
    }
    if let Some(&c) = c_list.iter().find(|c| !(c.is_finite() && **c >= 0.0)) {
        return Err(Error::Domain(format!("threshold constant {c} must be finite and nonnegative")));
    }
    let setup = ExcursionSetup::new(g, vertex)?;
    let n_max = n_list.iter().copied().max().unwrap_or(0);
    let (p, q) = graph_product_parts(g)?;
    let spheres = coefficients(&p, &q, n_max)?;

    let mut wanted: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in c_list {
        for &n in n_list {
            let e = threshold_bound(c, n);
            let top = wanted.entry(e).or_insert(0);
            *top = (*top).max(n);
        }
    }
    let bounded: BTreeMap<usize, Vec<BigRational>> = wanted
        .into_par_iter()
        .map(|(e, n)| {
            let f = setup.fraction(e)?;
            Ok((e, coefficients(&f.num, &f.den, n)?))
        })
        .collect::<Result<_>>()?;

    let mut rows = Vec::with_capacity(c_list.len() * n_list.len());
    for &c in c_list {
        for &n in n_list {
            let e = threshold_bound(c, n);
            let exact = if spheres[n].is_zero() {
                BigRational::one()
            } else {
                &bounded[&e][n] / &spheres[n]
            };
            rows.push(ThresholdRow {
                n,
                c,
                bound: e,
                probability: rational_to_f64(&exact),
                exact,
            });
        }
    }
    let threshold = classify(g)
        .ok()
        .filter(|class| class.lambda > 1.0)
        .map(|class| 1.0 / class.lambda.ln());
    Ok(ThresholdScan { threshold, rows })
}

fn coefficients(p: &crate::QPolynomial, q: &crate::QPolynomial, n: usize) -> Result<Vec<BigRational>> {
    Ok(expand_fraction(p, q, n)?)
}
