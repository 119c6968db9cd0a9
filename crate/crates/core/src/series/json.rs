//! JSON form of a series: `{"num": [...], "den": [...]}` with coefficients as
//! integers or `"p/q"` strings, constant term first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::SeriesError;
use crate::{QPolynomial, Series};

pub fn coefficient_to_json(c: &BigRational) -> Value {
    if c.is_integer() {
        if let Some(i) = c.to_integer().to_i64() {
            return json!(i);
        }
        return json!(c.to_integer().to_string());
    }
    json!(format!("{}/{}", c.numer(), c.denom()))
}

pub fn coefficient_from_json(v: &Value) -> Result<BigRational, SeriesError> {
    let bad = || SeriesError::Parse(format!("bad coefficient {v}"));
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(bad),
        Value::String(s) => parse_rational(s).ok_or_else(bad),
        _ => Err(bad()),
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn polynomial_to_json(p: &QPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(coefficient_to_json).collect())
}

pub fn polynomial_from_json(v: &Value) -> Result<QPolynomial, SeriesError> {
    let arr = v
        .as_array()
        .ok_or_else(|| SeriesError::Parse("coefficient list must be an array".into()))?;
    Ok(QPolynomial::new(
        arr.iter().map(coefficient_from_json).collect::<Result<_, _>>()?,
    ))
}

pub fn series_to_json(f: &Series) -> Value {
    json!({ "num": polynomial_to_json(f.num()), "den": polynomial_to_json(f.den()) })
}

pub fn series_from_json(v: &Value) -> Result<Series, SeriesError> {
    let num = v
        .get("num")
        .ok_or_else(|| SeriesError::Parse("missing \"num\"".into()))?;
    let den = v
        .get("den")
        .ok_or_else(|| SeriesError::Parse("missing \"den\"".into()))?;
    Series::new(polynomial_from_json(num)?, polynomial_from_json(den)?)
}
