//! Dominant-pole asymptotics for rational series.
//!
//! For `f = P/Q` with a simple smallest positive pole `r = 1/lambda` and
//! every other pole strictly farther out, `a_n / lambda^n` converges to
//! `c = g(r)` with `g(t) = f(t) (1 - lambda t)`. Since `Q = Q~ (1 - lambda t)`
//! we get `Q~(r) = -Q'(r)/lambda` and so `c = -lambda P(r) / Q'(r)`.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeffs::{expand_fraction, rational_to_f64};
use super::roots::{complex_roots, smallest_positive_root, RootEnclosure};
use super::SeriesError;
use crate::Series;

/// Default enclosure width for the dominant root.
pub const POLE_PRECISION: f64 = 1e-40;
/// Another root whose modulus is within this relative distance of `r` is a tie.
pub const MODULUS_TIE_TOLERANCE: f64 = 1e-6;
/// Samples on the circle `|t| = R` when estimating `sup |g|`.
pub const SUP_SAMPLES: usize = 4096;
/// Multiplier applied to the sampled supremum.
pub const SUP_SAFETY_FACTOR: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct PoleInfo {
    pub root: RootEnclosure,
    pub r: f64,
    pub lambda: f64,
    /// `|Q'(r)|`
    pub simplicity_margin: f64,
    /// `(second smallest root modulus) / r - 1`; infinite when `Q` has no other root.
    pub modulus_gap: f64,
    /// `lim a_n / lambda^n`
    pub asymptotic_constant: f64,
    /// Moduli of the remaining denominator roots, ascending.
    pub other_moduli: Vec<f64>,
}

impl PoleInfo {
    /// `lambda` as an exact rational, from the midpoint of the root enclosure.
    pub fn lambda_exact(&self) -> BigRational {
        self.root.midpoint().recip()
    }
}

pub fn pole_analysis(f: &Series) -> Result<PoleInfo, SeriesError> {
    pole_analysis_with_precision(f, POLE_PRECISION)
}

pub fn pole_analysis_with_precision(f: &Series, precision: f64) -> Result<PoleInfo, SeriesError> {
    let root = match smallest_positive_root(f.den(), precision) {
        Ok(r) => r,
        Err(SeriesError::NoRootInUnitInterval) => return Err(SeriesError::NoExponentialPole),
        Err(e) => return Err(e),
    };
    let r = root.value;
    let lambda = 1.0 / r;
    let num = f.num().to_f64();
    let p_at_r = num.eval(&r);
    let scale: f64 = num.coeffs().iter().enumerate().map(|(k, c)| c.abs() * r.powi(k as i32)).sum();
    if p_at_r.abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
        return Err(SeriesError::NumeratorVanishes);
    }

    let den = f.den().to_f64();
    let mut roots = complex_roots(&den);
    let nearest = roots
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| (**a - r).norm().total_cmp(&(**b - r).norm()))
        .map(|(i, _)| i);
    if let Some(i) = nearest {
        roots.swap_remove(i);
    }
    let mut other_moduli: Vec<f64> = roots.iter().map(|z| z.norm()).collect();
    other_moduli.sort_by(f64::total_cmp);
    let modulus_gap = other_moduli.first().map_or(f64::INFINITY, |m| m / r - 1.0);
    if modulus_gap < MODULUS_TIE_TOLERANCE {
        return Err(SeriesError::ModulusTie {
            r,
            other: other_moduli[0],
        });
    }

    let asymptotic_constant = -lambda * p_at_r / root.derivative;
    Ok(PoleInfo {
        r,
        lambda,
        simplicity_margin: root.derivative.abs(),
        modulus_gap,
        asymptotic_constant,
        other_moduli,
        root,
    })
}

/// Upper bound on `|a_n / lambda^n - c|` from the Cauchy estimate on `|t| = radius`:
/// `sup|g| (R'/R)^(n+1) / (1 - R'/R)` with `R'` just above `r`, the supremum
/// sampled and inflated by [`SUP_SAFETY_FACTOR`].
pub fn tail_error_bound(f: &Series, pole: &PoleInfo, radius: f64, n: usize) -> Result<f64, SeriesError> {
    if !(radius > pole.r && radius < 1.0) {
        return Err(SeriesError::InvalidRadius { radius, r: pole.r });
    }
    if let Some(&m) = pole.other_moduli.iter().find(|&&m| m <= radius) {
        return Err(SeriesError::RootInsideRadius { modulus: m, radius });
    }
    let r_prime = pole.r * (1.0 + 1e-12);
    let ratio = r_prime / radius;
    let sup = sup_on_circle(f, pole.lambda, radius) * SUP_SAFETY_FACTOR;
    let log_bound = sup.ln() + (n as f64 + 1.0) * ratio.ln() - (1.0 - ratio).ln();
    Ok(log_bound.exp())
}

fn sup_on_circle(f: &Series, lambda: f64, radius: f64) -> f64 {
    let num = f.num().to_f64();
    let den = f.den().to_f64();
    let lift = |c: &f64| Complex64::new(*c, 0.0);
    (0..SUP_SAMPLES)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / SUP_SAMPLES as f64;
            let t = Complex64::from_polar(radius, theta);
            let g = num.eval_in(t, lift) * (Complex64::new(1.0, 0.0) - t * lambda) / den.eval_in(t, lift);
            g.norm()
        })
        .fold(0.0, f64::max)
}

/// `|a_n / lambda^n - c|` evaluated in exact arithmetic on a refined root enclosure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    pub value: f64,
    /// Variation of the evaluated quantity across the enclosure; the true
    /// deviation lies within `value +- spread`.
    pub spread: f64,
}

impl Deviation {
    pub fn upper(&self) -> f64 {
        self.value + self.spread
    }
}

/// Exact-arithmetic version of `|a_n / lambda^n - c|`, for deviations far
/// below double precision. `c` is taken as `-P(r) / (r Q'(r))`.
pub fn scaled_deviation(f: &Series, pole: &PoleInfo, n: usize) -> Result<Deviation, SeriesError> {
    let a_n = expand_fraction(f.num(), f.den(), n)?.pop().expect("n+1 coefficients");
    let bits_per_step = pole.lambda.log2().ceil().max(1.0) as u64 + 4;
    let bits = 128 + (n as u64 + 1) * bits_per_step;
    let width = BigRational::new(1.into(), num_bigint::BigInt::one() << bits);
    let enc = pole.root.refine(f.den(), &width);
    let dq = f.den().derivative();
    let eval = |x: &BigRational| -> BigRational {
        let xn = num_traits::pow::pow(x.clone(), n);
        &a_n * xn + f.num().eval(x) / (x * dq.eval(x))
    };
    let mid = enc.midpoint();
    let at_mid = eval(&mid);
    let spread = if enc.lo == enc.hi {
        BigRational::zero()
    } else {
        let a = (eval(&enc.lo) - &at_mid).abs();
        let b = (eval(&enc.hi) - &at_mid).abs();
        a.max(b)
    };
    Ok(Deviation {
        value: rational_to_f64(&at_mid.abs()),
        spread: rational_to_f64(&spread),
    })
}
