//! JSON forms of triangular resonant maps and linear maps.
//!
//! A map `sigma` is written as
//! `{"weights": [1, 2], "g": {"1": {}, "2": {"2,0": "1"}}}`: component keys
//! are 1-based, exponents are comma-joined and coefficients are rational
//! strings. A linear map is a row-major array of `n^2` rational strings; a
//! nested array of rows is accepted on input.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::linear::LinearMap;
use crate::poly::Rational;
use crate::resonant::TriangularResonantMap;
use crate::text::{format_rational, parse_rational};
use crate::weights::{MultiIndex, WeightVector};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn multi_index_to_json(alpha: &MultiIndex) -> Value {
    json!(alpha.exponents())
}

fn exponent_key(alpha: &MultiIndex) -> String {
    alpha
        .exponents()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_exponent_key(key: &str) -> Result<MultiIndex> {
    key.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| parse_err(format!("invalid exponent key `{key}`")))
        })
        .collect::<Result<Vec<_>>>()
        .map(MultiIndex::new)
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        other => Err(parse_err(format!("expected a rational string, found {other}"))),
    }
}

pub fn weights_to_json(m: &WeightVector) -> Value {
    json!(m.as_slice())
}

/// Reads a JSON array of integers and validates it as a weight vector.
pub fn weights_from_json(v: &Value) -> Result<WeightVector> {
    let arr = v.as_array().ok_or_else(|| parse_err("`weights` must be an array"))?;
    let raw = arr
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| parse_err(format!("invalid weight {x}"))))
        .collect::<Result<Vec<_>>>()?;
    WeightVector::new(&raw)
}

pub fn sigma_to_json(sigma: &TriangularResonantMap) -> Value {
    let mut g = Map::new();
    for (k, gk) in sigma.nonlinear_parts().iter().enumerate() {
        let mut terms = Map::new();
        for (alpha, c) in gk.terms() {
            terms.insert(exponent_key(alpha), rational_to_json(c));
        }
        g.insert((k + 1).to_string(), Value::Object(terms));
    }
    json!({ "weights": weights_to_json(sigma.weights()), "g": g })
}

pub fn sigma_from_json(v: &Value) -> Result<TriangularResonantMap> {
    let obj = v.as_object().ok_or_else(|| parse_err("sigma must be a JSON object"))?;
    let m = weights_from_json(obj.get("weights").ok_or_else(|| parse_err("missing `weights`"))?)?;
    let mut coeffs = std::collections::BTreeMap::new();
    if let Some(g) = obj.get("g") {
        let g = g.as_object().ok_or_else(|| parse_err("`g` must be an object"))?;
        for (key, terms) in g {
            let i: usize = key
                .parse()
                .map_err(|_| parse_err(format!("invalid component key `{key}`")))?;
            let terms = terms
                .as_object()
                .ok_or_else(|| parse_err(format!("component `{key}` must be an object")))?;
            for (akey, c) in terms {
                let alpha = parse_exponent_key(akey)?;
                let c = rational_from_json(c)?;
                let slot = coeffs
                    .entry((i, alpha))
                    .or_insert_with(|| Rational::from_integer(0.into()));
                *slot += c;
            }
        }
    }
    TriangularResonantMap::from_coefficients(&m, &coeffs)
}

pub fn linear_to_json(l: &LinearMap) -> Value {
    Value::Array(l.entries().iter().map(rational_to_json).collect())
}

pub fn linear_from_json(v: &Value) -> Result<LinearMap> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err("linear map must be a JSON array"))?;
    if arr.iter().all(Value::is_array) && !arr.is_empty() {
        let rows = arr
            .iter()
            .map(|row| {
                row.as_array()
                    .unwrap()
                    .iter()
                    .map(rational_from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return LinearMap::from_rows(rows);
    }
    let entries = arr.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?;
    let n = (entries.len() as f64).sqrt().round() as usize;
    if n * n != entries.len() || n == 0 {
        return Err(parse_err(format!(
            "linear map has {} entries, which is not a positive square",
            entries.len()
        )));
    }
    LinearMap::new(n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resonant::default_pool;
    use proptest::prelude::*;

    #[test]
    fn sigma_layout() {
        let m = WeightVector::new(&[1, 2]).unwrap();
        let s = TriangularResonantMap::random(&m, 0, &[Rational::new(3.into(), 2.into())]).unwrap();
        let v = sigma_to_json(&s);
        assert_eq!(v.to_string(), r#"{"weights":[1,2],"g":{"1":{},"2":{"2,0":"3/2"}}}"#);
        assert_eq!(sigma_from_json(&v).unwrap(), s);
    }

    #[test]
    fn sigma_errors() {
        let bad = serde_json::from_str::<Value>(r#"{"weights":[1,2],"g":{"1":{"0,1":"1"}}}"#).unwrap();
        assert!(matches!(sigma_from_json(&bad), Err(Error::NotResonant { .. })));
        let bad = serde_json::from_str::<Value>(r#"{"weights":[2,4]}"#).unwrap();
        assert_eq!(sigma_from_json(&bad), Err(Error::NotCoprime { gcd: 2 }));
        let bad = serde_json::from_str::<Value>(r#"{"weights":[1,2],"g":{"x":{}}}"#).unwrap();
        assert!(matches!(sigma_from_json(&bad), Err(Error::Parse(_))));
        let bad = serde_json::from_str::<Value>(r#"{"g":{}}"#).unwrap();
        assert!(matches!(sigma_from_json(&bad), Err(Error::Parse(_))));
    }

    #[test]
    fn linear_layouts() {
        let flat = serde_json::from_str::<Value>(r#"["1","1/2",0,"-3"]"#).unwrap();
        let nested = serde_json::from_str::<Value>(r#"[["1","1/2"],["0","-3"]]"#).unwrap();
        let a = linear_from_json(&flat).unwrap();
        assert_eq!(a, linear_from_json(&nested).unwrap());
        assert_eq!(linear_to_json(&a).to_string(), r#"["1","1/2","0","-3"]"#);
        let bad = serde_json::from_str::<Value>(r#"["1","2","3"]"#).unwrap();
        assert!(matches!(linear_from_json(&bad), Err(Error::Parse(_))));
        let bad = serde_json::from_str::<Value>(r#"[["1","2"],["3"]]"#).unwrap();
        assert!(matches!(linear_from_json(&bad), Err(Error::DimensionMismatch { .. })));
    }

    proptest! {
        #[test]
        fn sigma_json_round_trip(seed in any::<u64>(), which in 0usize..4) {
            let raw = [vec![1, 2], vec![1, 2, 3], vec![1, 1, 2, 4], vec![2, 3, 4]][which].clone();
            let m = WeightVector::new(&raw).unwrap();
            let s = TriangularResonantMap::random(&m, seed, &default_pool()).unwrap();
            let text = serde_json::to_string(&sigma_to_json(&s)).unwrap();
            let back = sigma_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
