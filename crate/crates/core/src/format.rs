//! Text serializations: significant-digit number formatting, CSV and JSON.

use std::fmt::Write as _;

use serde_json::json;

use crate::numbertheory::CensusRecord;
use crate::spectrum::Spectrum;

/// Digits used for eigenvalues and other spectral quantities.
pub const VALUE_DIGITS: usize = 12;
/// Digits used for census ratios.
pub const RATIO_DIGITS: usize = 6;

/// Formats `value` with `digits` significant digits in the style of C's
/// `%g`: fixed notation for moderate exponents, scientific otherwise, with
/// trailing zeros removed.
pub fn sig(value: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, value);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{value:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = String::from("index,value\n");
    for (i, v) in s.values.iter().enumerate() {
        let _ = writeln!(out, "{i},{}", sig(*v, VALUE_DIGITS));
    }
    out
}

/// JSON object `{n, k, source, values}`.
pub fn spectrum_json(s: &Spectrum) -> serde_json::Value {
    json!({
        "n": s.n,
        "k": s.k,
        "source": s.source,
        "values": s.values,
    })
}

pub fn census_csv(records: &[CensusRecord]) -> String {
    let mut out = String::from("N,a_lower,b_count,ratio\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            r.big_n,
            r.a_lower,
            r.b_count,
            sig(r.ratio, RATIO_DIGITS)
        );
    }
    out
}
