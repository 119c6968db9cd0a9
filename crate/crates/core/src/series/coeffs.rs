//! Taylor coefficients of rational series via the denominator recurrence
//! `a_n = p_n - sum_{k>=1} q_k a_{n-k}` (with `q_0 = 1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::SeriesError;
use crate::{QPolynomial, Series};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoefficientMode {
    Exact,
    /// Entry `n` holds `a_n / lambda^n`.
    ScaledFloat(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientTable {
    Exact(Vec<BigRational>),
    ScaledFloat { lambda: f64, values: Vec<f64> },
}

impl CoefficientTable {
    pub fn len(&self) -> usize {
        match self {
            Self::Exact(v) => v.len(),
            Self::ScaledFloat { values, .. } => values.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn exact(&self) -> Option<&[BigRational]> {
        match self {
            Self::Exact(v) => Some(v),
            Self::ScaledFloat { .. } => None,
        }
    }

    pub fn scaled(&self) -> Option<&[f64]> {
        match self {
            Self::Exact(_) => None,
            Self::ScaledFloat { values, .. } => Some(values),
        }
    }

    /// Exact entries as integers, if every entry is integral.
    pub fn integers(&self) -> Option<Vec<BigInt>> {
        self.exact()?
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

pub fn taylor_coefficients(
    f: &Series,
    n_max: usize,
    mode: CoefficientMode,
) -> Result<CoefficientTable, SeriesError> {
    match mode {
        CoefficientMode::Exact => Ok(CoefficientTable::Exact(expand_fraction(f.num(), f.den(), n_max)?)),
        CoefficientMode::ScaledFloat(lambda) => Ok(CoefficientTable::ScaledFloat {
            lambda,
            values: scaled_coefficients(f, n_max, lambda)?,
        }),
    }
}

/// Coefficients `0..=n_max` of `num/den`, which need not be in lowest terms.
pub fn expand_fraction(
    num: &QPolynomial,
    den: &QPolynomial,
    n_max: usize,
) -> Result<Vec<BigRational>, SeriesError> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(SeriesError::NotExpandable);
    }
    let num = num.scale(&d0.recip());
    let den = den.scale(&d0.recip());
    if let (Some(p), Some(q)) = (integral(&num), integral(&den)) {
        return Ok(integer_recurrence(&p, &q, n_max)
            .into_iter()
            .map(BigRational::from_integer)
            .collect());
    }
    let p = num.coeffs();
    let q = den.coeffs();
    let mut out: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut a = p.get(n).cloned().unwrap_or_else(BigRational::zero);
        for k in 1..q.len().min(n + 1) {
            if !q[k].is_zero() {
                a -= &q[k] * &out[n - k];
            }
        }
        out.push(a);
    }
    Ok(out)
}

/// Integer coefficients of `num/den`, or `None` when the normalized fraction is not integral.
pub fn integer_coefficients(
    num: &QPolynomial,
    den: &QPolynomial,
    n_max: usize,
) -> Result<Option<Vec<BigInt>>, SeriesError> {
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(SeriesError::NotExpandable);
    }
    let num = num.scale(&d0.recip());
    let den = den.scale(&d0.recip());
    Ok(match (integral(&num), integral(&den)) {
        (Some(p), Some(q)) => Some(integer_recurrence(&p, &q, n_max)),
        _ => None,
    })
}

fn integral(p: &QPolynomial) -> Option<Vec<BigInt>> {
    p.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// `q[0]` must be 1.
pub(crate) fn integer_recurrence(p: &[BigInt], q: &[BigInt], n_max: usize) -> Vec<BigInt> {
    debug_assert!(q.first().is_some_and(One::is_one));
    // (k, q_k) for the nonzero tail of the denominator
    let taps: Vec<(usize, &BigInt)> = q.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).collect();
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut a = p.get(n).cloned().unwrap_or_default();
        for &(k, qk) in &taps {
            if k > n {
                break;
            }
            a -= qk * &out[n - k];
        }
        out.push(a);
    }
    out
}

/// `a_n / lambda^n` for `n = 0..=n_max`, rescaling every step so no
/// intermediate quantity grows with `n`.
pub fn scaled_coefficients<F>(f: &Series, n_max: usize, lambda: F) -> Result<Vec<F>, SeriesError>
where
    F: Float + FromPrimitive,
{
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(lambda > F::zero()) {
        return Err(SeriesError::InvalidScale);
    }
    let to_f = |c: &BigRational| F::from_f64(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan);
    let inv = lambda.recip();
    // b_n = p_n lambda^-n - sum_k (q_k lambda^-k) b_{n-k}
    let p: Vec<F> = f
        .num()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| to_f(c) * inv.powi(n as i32))
        .collect();
    let q: Vec<(usize, F)> = f
        .den()
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, to_f(c) * inv.powi(k as i32)))
        .collect();
    let mut out: Vec<F> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut b = p.get(n).copied().unwrap_or_else(F::zero);
        for &(k, qk) in &q {
            if k > n {
                break;
            }
            b = b - qk * out[n - k];
        }
        out.push(b);
    }
    Ok(out)
}

/// `num / den` as an `f64`, correct even when both exceed the `f64` range.
pub fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if den.is_zero() {
        return f64::NAN;
    }
    if num.is_zero() {
        return 0.0;
    }
    let negative = num.is_negative() != den.is_negative();
    let (n, d) = (num.abs(), den.abs());
    // keep ~64 significant bits of the quotient
    let shift = d.bits() as i64 - n.bits() as i64 + 64;
    let q = if shift >= 0 {
        (n << shift as u64) / &d
    } else {
        n / (d << (-shift) as u64)
    };
    let mantissa = q.to_f64().unwrap_or(f64::INFINITY);
    let v = scale_pow2(mantissa, -shift);
    if negative {
        -v
    } else {
        v
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    ratio_to_f64(x.numer(), x.denom())
}

fn scale_pow2(mut x: f64, mut e: i64) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e as i32)
}
