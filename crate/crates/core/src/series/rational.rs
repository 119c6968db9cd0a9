use std::fmt;

use num_rational::{BigRational, Rational64};
use num_traits::ToPrimitive;

use super::poly::{Polynomial, Scalar};
use super::SeriesError;

/// Exact fields, where polynomial gcd and normalization are meaningful.
pub trait ExactField: Scalar + ToPrimitive + PartialOrd + fmt::Display {}

impl ExactField for BigRational {}
impl ExactField for Rational64 {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A rational function `num/den` viewed as a power series at the origin.
///
/// Always stored in lowest terms with `den(0) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: ExactField> RationalSeries<T> {
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self, SeriesError> {
        if den.is_zero() {
            return Err(SeriesError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(SeriesError::NotExpandable);
        }
        let inv = T::one() / d0;
        Ok(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    /// Builds from a numerator/denominator already known to be coprime; only rescales `den(0)` to 1.
    pub(crate) fn from_coprime(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self, SeriesError> {
        let d0 = den.coeff(0);
        if d0.is_zero() {
            return Err(SeriesError::NotExpandable);
        }
        let inv = T::one() / d0;
        Ok(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn polynomial(p: Polynomial<T>) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::polynomial(Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn constant_term(&self) -> T {
        self.num.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Self::new(num, den).expect("den(0) = 1 is preserved by addition")
    }

    pub fn sub(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        let den = &self.den * &other.den;
        Self::new(num, den).expect("den(0) = 1 is preserved by subtraction")
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // cross-cancel first so the gcd runs on smaller inputs
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = other.den.div_rem(&g1).0;
        let n2 = other.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        Self::from_coprime(&n1 * &n2, &d1 * &d2).expect("den(0) != 0 is preserved by multiplication")
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Self::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn combine(&self, other: &Self, op: SeriesOp) -> Result<Self, SeriesError> {
        match op {
            SeriesOp::Add => Ok(self.add(other)),
            SeriesOp::Sub => Ok(self.sub(other)),
            SeriesOp::Mul => Ok(self.mul(other)),
            SeriesOp::Div => self.div(other),
        }
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let n = self.num.to_f64().eval(&t);
        let d = self.den.to_f64().eval(&t);
        n / d
    }
}

/// Free-function form of [`RationalSeries::combine`].
pub fn rf_combine<T: ExactField>(
    a: &RationalSeries<T>,
    b: &RationalSeries<T>,
    op: SeriesOp,
) -> Result<RationalSeries<T>, SeriesError> {
    a.combine(b, op)
}

impl<T: ExactField> fmt::Display for RationalSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<T: fmt::Debug> fmt::Debug for RationalSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RationalSeries")
            .field("num", &self.num)
            .field("den", &self.den)
            .finish()
    }
}
