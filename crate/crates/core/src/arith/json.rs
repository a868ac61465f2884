//! JSON form of exact scalars.
//!
//! A rational function is `{"num": [[degE, degL, [re_num, re_den, im_num, im_den]], ...], "den": [...]}`
//! with terms in ascending `(degE, degL)` order. Integers that fit in an `i64`
//! are JSON numbers; larger ones are decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{BiPoly, GaussianRational, RationalFunction};

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(k) => json!(k),
        None => Value::String(n.to_string()),
    }
}

fn int_from(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

pub fn gaussian_to_json(c: &GaussianRational) -> Value {
    Value::Array(c.to_parts().iter().map(int_value).collect())
}

pub fn gaussian_from_json(v: &Value) -> Option<GaussianRational> {
    let arr = v.as_array()?;
    if arr.len() != 4 {
        return None;
    }
    let parts: Vec<BigInt> = arr.iter().map(int_from).collect::<Option<_>>()?;
    let parts: [BigInt; 4] = parts.try_into().ok()?;
    GaussianRational::from_parts(parts)
}

pub fn bipoly_to_json(p: &BiPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|((a, b), c)| json!([a, b, gaussian_to_json(c)]))
            .collect(),
    )
}

pub fn bipoly_from_json(v: &Value) -> Option<BiPoly> {
    let mut terms = Vec::new();
    for t in v.as_array()? {
        let t = t.as_array()?;
        if t.len() != 3 {
            return None;
        }
        let a = u32::try_from(t[0].as_u64()?).ok()?;
        let b = u32::try_from(t[1].as_u64()?).ok()?;
        terms.push(((a, b), gaussian_from_json(&t[2])?));
    }
    Some(BiPoly::from_terms(terms))
}

pub fn ratfunc_to_json(f: &RationalFunction) -> Value {
    json!({ "num": bipoly_to_json(f.num()), "den": bipoly_to_json(f.den()) })
}

pub fn ratfunc_from_json(v: &Value) -> Option<RationalFunction> {
    let num = bipoly_from_json(v.get("num")?)?;
    let den = bipoly_from_json(v.get("den")?)?;
    RationalFunction::new(num, den).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::expr::parse_scalar;

    #[test]
    fn scalar_json_shape() {
        let f = parse_scalar("(lam - E^2)/(2*lam)").unwrap();
        let v = ratfunc_to_json(&f);
        assert_eq!(
            v,
            json!({"num": [[0, 1, [1, 2, 0, 1]], [2, 0, [-1, 2, 0, 1]]], "den": [[0, 1, [1, 1, 0, 1]]]})
        );
        assert_eq!(ratfunc_from_json(&v), Some(f));
    }

    #[test]
    fn big_integers_become_strings() {
        let big = GaussianRational::from_parts([
            BigInt::from(10).pow(30),
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(1),
        ])
        .unwrap();
        let v = gaussian_to_json(&big);
        assert!(v[0].is_string());
        assert_eq!(gaussian_from_json(&v), Some(big));
    }
}
