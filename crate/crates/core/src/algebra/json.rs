//! JSON encodings for exact values.
//!
//! Rationals are strings `"p/q"` in lowest terms (`"p"` for integers). A
//! [`UniPoly`] is an array of such strings indexed by power; a [`BiPoly`] is an
//! array indexed by `t`-power of μ-polynomials; a [`RatFn`] is
//! `{"num": [...], "den": [...]}`.

use serde_json::{json, Value};

use super::{
    format_rational, parse_rational, AlgebraError, BiPoly, Matrix, RatFn, RatFnPoly, Rational,
    UniPoly,
};

fn bad(what: &str) -> AlgebraError {
    AlgebraError::BadJson(format!("expected {what}"))
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value) -> Result<Rational, AlgebraError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => Err(bad("rational string")),
    }
}

pub fn unipoly_to_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn unipoly_from_json(v: &Value) -> Result<UniPoly, AlgebraError> {
    let arr = v.as_array().ok_or_else(|| bad("array of rationals"))?;
    Ok(UniPoly::from_coeffs(
        arr.iter()
            .map(rational_from_json)
            .collect::<Result<_, _>>()?,
    ))
}

pub fn bipoly_to_json(p: &BiPoly) -> Value {
    Value::Array(p.coeffs().iter().map(unipoly_to_json).collect())
}

pub fn bipoly_from_json(v: &Value) -> Result<BiPoly, AlgebraError> {
    let arr = v.as_array().ok_or_else(|| bad("array of polynomials"))?;
    Ok(BiPoly::from_coeffs(
        arr.iter()
            .map(unipoly_from_json)
            .collect::<Result<_, _>>()?,
    ))
}

pub fn ratfn_to_json(r: &RatFn) -> Value {
    json!({ "num": unipoly_to_json(r.num()), "den": unipoly_to_json(r.den()) })
}

pub fn ratfn_from_json(v: &Value) -> Result<RatFn, AlgebraError> {
    let num = unipoly_from_json(v.get("num").ok_or_else(|| bad("\"num\""))?)?;
    let den = unipoly_from_json(v.get("den").ok_or_else(|| bad("\"den\""))?)?;
    RatFn::new(num, den).ok_or_else(|| bad("nonzero denominator"))
}

pub fn ratfnpoly_to_json(p: &RatFnPoly) -> Value {
    Value::Array(p.coeffs().iter().map(ratfn_to_json).collect())
}

pub fn ratfnpoly_from_json(v: &Value) -> Result<RatFnPoly, AlgebraError> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad("array of rational functions"))?;
    Ok(RatFnPoly::from_coeffs(
        arr.iter().map(ratfn_from_json).collect::<Result<_, _>>()?,
    ))
}

pub fn rational_matrix_to_json(m: &Matrix<Rational>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational_to_json).collect()))
            .collect(),
    )
}

pub fn rational_matrix_from_json(v: &Value) -> Result<Matrix<Rational>, AlgebraError> {
    let rows = v.as_array().ok_or_else(|| bad("array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad("row array"))?
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipoly_encoding_matches_documented_example() {
        // (t + mu)^2 - 1
        let p = &(&BiPoly::t() + &BiPoly::mu()).pow(2) - &BiPoly::one();
        let v = bipoly_to_json(&p);
        assert_eq!(v, json!([["-1", "0", "1"], ["0", "2"], ["1"]]));
        assert_eq!(bipoly_from_json(&v).unwrap(), p);
    }

    #[test]
    fn ratfn_encoding() {
        let r = RatFn::new(UniPoly::from_ints(&[2]), UniPoly::from_ints(&[0, 4])).unwrap();
        let v = ratfn_to_json(&r);
        assert_eq!(v, json!({"num": ["1/2"], "den": ["0", "1"]}));
        assert_eq!(ratfn_from_json(&v).unwrap(), r);
        assert!(ratfn_from_json(&json!({"num": ["1"], "den": []})).is_err());
    }
}
