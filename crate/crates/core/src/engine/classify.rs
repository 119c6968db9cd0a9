use serde::Serialize;

use super::graph_product_series;
use crate::graph::DefiningGraph;
use crate::series::{smallest_positive_root, SeriesError};
use crate::Result;

/// Two growth rates closer than this (relatively) are treated as equal.
const RATE_TOLERANCE: f64 = 1e-9;
const RATE_PRECISION: f64 = 1e-30;

/// Predicted behaviour of the excursion in one vertex group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// Typical excursion of order `log n`.
    Logarithmic,
    /// The excursion vanishes with probability bounded away from zero.
    PositiveProbabilityZero,
    /// No exponential growth at all.
    Degenerate,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Logarithmic => "logarithmic",
            Self::PositiveProbabilityZero => "positive-probability-zero",
            Self::Degenerate => "degenerate",
        })
    }
}

/// A connected component of the opposite graph, i.e. a direct factor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentGrowth {
    pub vertices: Vec<usize>,
    /// Exponential growth rate, `1.0` when the factor grows subexponentially.
    pub lambda: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub irreducible: bool,
    pub abelian: bool,
    pub components: Vec<ComponentGrowth>,
    pub lambda: f64,
    pub pure_exponential: bool,
    pub s: usize,
    /// Per-vertex regimes; only predicted for right-angled Artin groups.
    pub regimes: Option<Vec<Regime>>,
}

pub fn classify(g: &DefiningGraph) -> Result<Classification> {
    let mut components = Vec::new();
    for vertices in g.opposite().connected_components() {
        let lambda = growth_rate(&g.induced(&vertices))?;
        components.push(ComponentGrowth { vertices, lambda });
    }
    let lambda = components.iter().map(|c| c.lambda).fold(1.0, f64::max);
    let attains = |x: f64| (x - lambda).abs() <= RATE_TOLERANCE * lambda;
    let s = components.iter().filter(|c| attains(c.lambda)).count();
    let exponential = lambda > 1.0 && !attains(1.0);
    let regimes = g.is_raag().then(|| {
        let mut out = vec![Regime::Degenerate; g.len()];
        for c in &components {
            let regime = if !exponential {
                Regime::Degenerate
            } else if attains(c.lambda) {
                Regime::Logarithmic
            } else {
                Regime::PositiveProbabilityZero
            };
            for &v in &c.vertices {
                out[v] = regime;
            }
        }
        out
    });
    Ok(Classification {
        irreducible: components.len() == 1,
        abelian: g.is_complete() && g.groups().iter().all(|s| s.is_cyclic()),
        pure_exponential: exponential && s == 1,
        lambda: if exponential { lambda } else { 1.0 },
        s,
        components,
        regimes,
    })
}

fn growth_rate(g: &DefiningGraph) -> Result<f64> {
    let f = graph_product_series(g)?;
    match smallest_positive_root(f.den(), RATE_PRECISION) {
        Ok(root) => Ok(1.0 / root.value),
        Err(SeriesError::NoRootInUnitInterval) => Ok(1.0),
        Err(e) => Err(e.into()),
    }
}
