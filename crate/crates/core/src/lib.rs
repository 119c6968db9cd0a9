//! Growth series and excursion statistics for right-angled Artin groups and
//! graph products.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`]: defining graphs, opposite graphs, components, cliques.
//! - [`series`]: exact rational series, coefficient recurrences, dominant
//!   poles and tail bounds. Polynomials are generic over the scalar; the
//!   aliases below fix the exact and floating instances used elsewhere.
//! - [`engine`]: growth series of graph products, bounded-excursion series,
//!   growth classification and the asymptotic scans.
//! - [`words`]: geodesic reduction, vertex-relative normal forms and
//!   excursion of explicit elements.
//! - [`census`]: brute-force sphere enumeration used as an independent oracle.

pub mod census;
pub mod engine;
pub mod graph;
pub mod series;
pub mod words;

use num_rational::BigRational;
use thiserror::Error;

pub use graph::{Clique, DefiningGraph, GraphError, VertexGroupSpec};
pub use series::{Polynomial, RationalSeries, SeriesError};

/// Polynomial with exact rational coefficients.
pub type QPolynomial = Polynomial<BigRational>;
/// Polynomial with `f64` coefficients.
pub type FPolynomial = Polynomial<f64>;
/// Exact rational series; every growth series in the crate has this type.
pub type Series = RationalSeries<BigRational>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Word(#[from] words::WordError),
    #[error(transparent)]
    Census(#[from] census::CensusError),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
