//! Real root isolation with exact signs, plus floating-point complex roots.
//!
//! The smallest positive root is isolated with a Sturm chain and bisected on
//! rational midpoints, so the enclosure can never bracket the wrong root.
//! Complex roots come from companion-matrix eigenvalues and are only used
//! for modulus comparisons.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coeffs::rational_to_f64;
use super::SeriesError;
use crate::{FPolynomial, QPolynomial};

/// Bisection steps always performed, independent of the requested precision.
pub const MIN_BISECTIONS: usize = 60;
/// Below this `|q'(r)|` the root is treated as multiple.
pub const SIMPLE_ROOT_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct RootEnclosure {
    /// The root lies in `[lo, hi]`; `q(lo)` and `q(hi)` have opposite signs unless `lo == hi`.
    pub lo: BigRational,
    pub hi: BigRational,
    /// Newton-polished floating value.
    pub value: f64,
    /// `q'(value)`
    pub derivative: f64,
}

impl RootEnclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    /// Continue sign bisection until the width is at most `precision`.
    pub fn refine(&self, q: &QPolynomial, precision: &BigRational) -> RootEnclosure {
        let ints = primitive_integer(q);
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let s_lo = sign_at(&ints, &lo);
        while &hi - &lo > *precision {
            let mid = (&lo + &hi) / BigRational::from_integer(2.into());
            let s = sign_at(&ints, &mid);
            if s == 0 {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        RootEnclosure {
            lo,
            hi,
            value: self.value,
            derivative: self.derivative,
        }
    }
}

/// Smallest root of `q` in the open interval `(0, 1)`.
///
/// Requires `q(0) > 0`. The enclosure width ends up at most `precision`
/// (and at most `2^-60`).
pub fn smallest_positive_root(q: &QPolynomial, precision: f64) -> Result<RootEnclosure, SeriesError> {
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(precision > 0.0) {
        return Err(SeriesError::InvalidPrecision);
    }
    if !q.coeff(0).is_positive() {
        return Err(SeriesError::NonPositiveAtOrigin);
    }
    let ints = primitive_integer(q);
    let chain = sturm_chain(q);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let v0 = variations(&chain, &zero);
    let v1 = variations(&chain, &one);
    let at_one = usize::from(sign_at(&ints, &one) == 0);
    if v0 - v1 <= at_one {
        return Err(SeriesError::NoRootInUnitInterval);
    }

    let half = BigRational::new(1.into(), 2.into());
    let (mut lo, mut hi) = (zero, one);
    let mut v_lo = v0;
    let mut steps = 0usize;
    // phase 1: shrink until (lo, hi] holds exactly one distinct root with a sign change
    loop {
        let s_lo = sign_at(&ints, &lo);
        let s_hi = sign_at(&ints, &hi);
        let count = v_lo - variations(&chain, &hi);
        if count == 1 && s_hi == 0 {
            lo = hi.clone();
            break;
        }
        if count == 1 && s_lo * s_hi < 0 {
            break;
        }
        if steps > 4 * MIN_BISECTIONS && count == 1 {
            // one distinct root, no sign change: even multiplicity
            return Err(SeriesError::NonSimpleRoot { derivative: 0.0 });
        }
        let mid = (&lo + &hi) * &half;
        let v_mid = variations(&chain, &mid);
        if v_lo - v_mid >= 1 {
            hi = mid;
        } else {
            lo = mid;
            v_lo = v_mid;
        }
        steps += 1;
    }

    // phase 2: plain sign bisection
    let target = BigRational::from_float(precision).unwrap_or_else(|| BigRational::new(1.into(), 2.into()));
    let s_lo = sign_at(&ints, &lo);
    while lo != hi && (steps < MIN_BISECTIONS || &hi - &lo > target) {
        let mid = (&lo + &hi) * &half;
        let s = sign_at(&ints, &mid);
        if s == 0 {
            lo = mid.clone();
            hi = mid;
            break;
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        steps += 1;
    }

    let qf = q.to_f64();
    let dqf = qf.derivative();
    let (lo_f, hi_f) = (rational_to_f64(&lo), rational_to_f64(&hi));
    let mid_f = rational_to_f64(&((&lo + &hi) * &half));
    let mut x = mid_f;
    for _ in 0..60 {
        let d = dqf.eval(&x);
        if d == 0.0 {
            break;
        }
        let next = x - qf.eval(&x) / d;
        if !(lo_f..=hi_f).contains(&next) {
            break;
        }
        if next == x {
            break;
        }
        x = next;
    }
    let derivative = dqf.eval(&x);
    if derivative.abs() < SIMPLE_ROOT_THRESHOLD {
        return Err(SeriesError::NonSimpleRoot { derivative });
    }
    Ok(RootEnclosure {
        lo,
        hi,
        value: x,
        derivative,
    })
}

/// All complex roots of `q` from the eigenvalues of its companion matrix,
/// each polished by a few Newton steps.
pub fn complex_roots(q: &FPolynomial) -> Vec<Complex64> {
    let Some(d) = q.degree() else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    let lead = q.coeffs()[d];
    let mut m = DMatrix::<f64>::zeros(d, d);
    for i in 1..d {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..d {
        m[(i, d - 1)] = -q.coeffs()[i] / lead;
    }
    let dq = q.derivative();
    m.complex_eigenvalues()
        .iter()
        .map(|&z| {
            let mut z = z;
            for _ in 0..4 {
                let f = q.eval_in(z, |c| Complex64::new(*c, 0.0));
                let df = dq.eval_in(z, |c| Complex64::new(*c, 0.0));
                if df.norm() == 0.0 {
                    break;
                }
                let step = f / df;
                if !step.re.is_finite() || !step.im.is_finite() || step.norm() > 1e-3 * (1.0 + z.norm()) {
                    break;
                }
                z -= step;
            }
            z
        })
        .collect()
}

/// Scale by a positive rational so all coefficients are coprime integers.
pub(crate) fn primitive_integer(q: &QPolynomial) -> Vec<BigInt> {
    let l = q
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = q.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|c| c / &g).collect()
    }
}

/// Sign of `sum c_i x^i` at a rational point, using integer arithmetic only.
pub(crate) fn sign_at(coeffs: &[BigInt], x: &BigRational) -> i32 {
    let Some((last, rest)) = coeffs.split_last() else {
        return 0;
    };
    // homogenized Horner: q^d * p(n/q), with q > 0
    let (n, d) = (x.numer(), x.denom());
    let mut acc = last.clone();
    let mut pw = d.clone();
    for c in rest.iter().rev() {
        acc = acc * n + c * &pw;
        pw *= d;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn sturm_chain(q: &QPolynomial) -> Vec<Vec<BigInt>> {
    let to_q = |v: &[BigInt]| QPolynomial::new(v.iter().cloned().map(BigRational::from_integer).collect());
    let mut chain = vec![primitive_integer(q)];
    let d = q.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(primitive_integer(&d));
    loop {
        let n = chain.len();
        let (_, r) = to_q(&chain[n - 2]).div_rem(&to_q(&chain[n - 1]));
        if r.is_zero() {
            break;
        }
        chain.push(primitive_integer(&-&r));
    }
    chain
}

fn variations(chain: &[Vec<BigInt>], x: &BigRational) -> usize {
    let mut count = 0;
    let mut prev = 0;
    for p in chain {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QPolynomial {
        QPolynomial::from_i64s(c)
    }

    #[test]
    fn golden_type_quadratic() {
        let r = smallest_positive_root(&q(&[1, -4, -1]), 1e-30).unwrap();
        assert!((r.value - (5f64.sqrt() - 2.0)).abs() < 1e-15);
        assert!((1.0 / r.value - (2.0 + 5f64.sqrt())).abs() < 1e-13);
        assert!(r.width() <= BigRational::from_float(1e-30).unwrap());
        // the enclosure brackets a sign change
        let ints = primitive_integer(&q(&[1, -4, -1]));
        assert_eq!(sign_at(&ints, &r.lo) * sign_at(&ints, &r.hi), -1);
    }

    #[test]
    fn linear_root_is_exact() {
        let r = smallest_positive_root(&q(&[1, -3]), 1e-12).unwrap();
        assert!(r.lo <= BigRational::new(1.into(), 3.into()) && BigRational::new(1.into(), 3.into()) <= r.hi);
        assert!((r.value - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn picks_smaller_of_two_positive_roots() {
        // 11t^2 - 8t + 1: roots (4 -+ sqrt 5)/11
        let r = smallest_positive_root(&q(&[1, -8, 11]), 1e-20).unwrap();
        let expected = (4.0 - 5f64.sqrt()) / 11.0;
        assert!((r.value - expected).abs() < 1e-15);
    }

    #[test]
    fn root_at_one_is_not_interior() {
        assert_eq!(
            smallest_positive_root(&q(&[1, -1]), 1e-12),
            Err(SeriesError::NoRootInUnitInterval)
        );
        assert_eq!(
            smallest_positive_root(&q(&[1, 0, 1]), 1e-12),
            Err(SeriesError::NoRootInUnitInterval)
        );
    }

    #[test]
    fn double_root_is_flagged() {
        // (1 - 3t)^2
        let err = smallest_positive_root(&q(&[1, -6, 9]), 1e-12).unwrap_err();
        assert!(matches!(err, SeriesError::NonSimpleRoot { .. }));
    }

    #[test]
    fn double_root_after_simple_one_is_skipped_correctly() {
        // (1 - 5t)(1 - 2t)^2: smallest positive root 1/5 is simple
        let p = &q(&[1, -5]) * &q(&[1, -2]).pow(2);
        let r = smallest_positive_root(&p, 1e-15).unwrap();
        assert!((r.value - 0.2).abs() < 1e-15);
    }

    #[test]
    fn companion_roots_of_quadratic() {
        let mut roots = complex_roots(&FPolynomial::from_i64s(&[1, -4, -1]));
        roots.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
        assert!((roots[0].re - (5f64.sqrt() - 2.0)).abs() < 1e-12);
        assert!((roots[1].re + (5f64.sqrt() + 2.0)).abs() < 1e-12);
        let unit = complex_roots(&FPolynomial::from_i64s(&[1, 0, 1]));
        assert!(unit.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
    }
}
