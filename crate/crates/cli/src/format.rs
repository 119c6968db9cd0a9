//! Number formatting shared by the subcommands.

use num_rational::BigRational;
use serde_json::{json, Value};

use raag_growth::series::json::coefficient_to_json;
use raag_growth::series::rational_to_f64;
use raag_growth::QPolynomial;

/// Nine significant digits, trailing zeros dropped.
pub fn float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-4..9).contains(&magnitude) {
        let decimals = (8 - magnitude).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.8e}");
        let (mantissa, exponent) = s.split_once('e').expect("scientific notation");
        format!("{}e{exponent}", trim(mantissa.to_string()))
    }
}

fn trim(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

pub fn rational_float(x: &BigRational, exact: bool) -> String {
    if exact {
        x.to_string()
    } else {
        float(rational_to_f64(x))
    }
}

pub fn exact_or_float(x: &BigRational, exact: bool) -> Value {
    if exact {
        coefficient_to_json(x)
    } else {
        json!(rational_to_f64(x))
    }
}

/// `[1,-4,-1]`
pub fn poly_list(p: &QPolynomial) -> String {
    let items: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", items.join(","))
}
