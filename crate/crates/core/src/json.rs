//! JSON forms shared by the CLI and the registry.
//!
//! A field element is its array of `l` base-`p` digits (ascending), a
//! polynomial an array of elements (ascending degree), a rational function
//! `{"num": .., "den": ..}`, and a field `{"p", "l", "modulus"}`. Big
//! integers are decimal strings. Object keys come out sorted, so equal
//! values always serialize to identical bytes.

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use crate::algebra::{Fe, Field, Poly, RatFunc};
use crate::curves::{FPoint, Family, TwistCurve};
use crate::{Error, Result};

fn malformed<T>(what: &str) -> Result<T> {
    Err(Error::Malformed(what.to_string()))
}

pub fn field(f: &Field) -> Value {
    json!({ "p": f.p(), "l": f.l(), "modulus": f.modulus() })
}

pub fn parse_field(v: &Value) -> Result<Field> {
    let p = v.get("p").and_then(Value::as_u64);
    let l = v.get("l").and_then(Value::as_u64);
    let (Some(p), Some(l)) = (p, l) else {
        return malformed("field needs integer p and l");
    };
    match v.get("modulus") {
        Some(m) => {
            let m: Vec<u64> = serde_json::from_value(m.clone()).map_err(|e| Error::Malformed(e.to_string()))?;
            let f = Field::with_modulus(p, m)?;
            if f.l() as u64 != l {
                return malformed("modulus degree disagrees with l");
            }
            Ok(f)
        }
        None => Field::new(p, l as u32),
    }
}

pub fn fe(f: &Field, a: Fe) -> Value {
    json!(f.digits(a))
}

pub fn parse_fe(f: &Field, v: &Value) -> Result<Fe> {
    match v {
        Value::Array(_) => {
            let d: Vec<u64> = serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(e.to_string()))?;
            f.from_digits(&d)
        }
        // plain integers are accepted as prime-field values
        Value::Number(n) => n.as_i64().map(|i| f.from_int(i)).ok_or_else(|| Error::Malformed("integer".into())),
        _ => malformed("field element must be a digit array"),
    }
}

pub fn poly(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| fe(p.field(), c)).collect())
}

pub fn parse_poly(f: &Field, v: &Value) -> Result<Poly> {
    let Value::Array(items) = v else {
        return malformed("polynomial must be an array");
    };
    let c = items.iter().map(|x| parse_fe(f, x)).collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(f, c))
}

pub fn ratfunc(r: &RatFunc) -> Value {
    json!({ "num": poly(r.num()), "den": poly(r.den()) })
}

pub fn parse_ratfunc(f: &Field, v: &Value) -> Result<RatFunc> {
    match v {
        Value::Array(_) => Ok(parse_poly(f, v)?.into()),
        Value::Object(m) => {
            let num = m.get("num").map(|x| parse_poly(f, x)).transpose()?;
            let den = m.get("den").map(|x| parse_poly(f, x)).transpose()?;
            match (num, den) {
                (Some(n), Some(d)) => RatFunc::new(n, d),
                (Some(n), None) => Ok(n.into()),
                _ => malformed("rational function needs num"),
            }
        }
        _ => malformed("rational function must be an object"),
    }
}

pub fn point(p: &FPoint) -> Value {
    match p {
        FPoint::Infinity => json!("infinity"),
        FPoint::Affine { x, y } => json!({ "x": ratfunc(x), "y": ratfunc(y) }),
    }
}

pub fn parse_point(f: &Field, v: &Value) -> Result<FPoint> {
    if v.as_str() == Some("infinity") {
        return Ok(FPoint::Infinity);
    }
    let (Some(x), Some(y)) = (v.get("x"), v.get("y")) else {
        return malformed("point needs x and y, or \"infinity\"");
    };
    Ok(FPoint::Affine { x: parse_ratfunc(f, x)?, y: parse_ratfunc(f, y)? })
}

pub fn curve(c: &TwistCurve) -> Value {
    let mut v = json!({
        "family": c.family().name(),
        "field": field(c.field()),
        "A": poly(c.twist_poly()),
    });
    match c.family() {
        Family::Quadratic { .. } => {
            v["f"] = poly(&c.cubic_f().expect("quadratic"));
        }
        Family::Sextic { sign, .. } => {
            v["sign"] = json!(sign);
        }
        _ => {}
    }
    v
}

pub fn parse_curve(v: &Value) -> Result<TwistCurve> {
    let f = parse_field(v.get("field").ok_or_else(|| Error::Malformed("curve needs field".into()))?)?;
    let a = parse_poly(&f, v.get("A").ok_or_else(|| Error::Malformed("curve needs A".into()))?)?;
    match v.get("family").and_then(Value::as_str) {
        Some("quadratic") => {
            let cubic = parse_poly(&f, v.get("f").ok_or_else(|| Error::Malformed("quadratic needs f".into()))?)?;
            TwistCurve::quadratic(a, &cubic)
        }
        Some("cubic") => TwistCurve::cubic(a),
        Some("quartic") => TwistCurve::quartic(a),
        Some("sextic") => {
            let sign = v.get("sign").and_then(Value::as_i64).unwrap_or(1);
            TwistCurve::sextic(a, sign as i8)
        }
        _ => malformed("family must be quadratic, cubic, quartic or sextic"),
    }
}

pub fn big(n: &BigUint) -> Value {
    Value::String(n.to_string())
}

pub fn bigint(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

/// Compact serialization; keys are sorted by construction.
pub fn to_line(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_serialize_as_digits() {
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(fe(&f9, Fe(5)), json!([2, 1]));
        assert_eq!(parse_fe(&f9, &json!([2, 1])).unwrap(), Fe(5));
        assert_eq!(field(&f9), json!({"p": 3, "l": 2, "modulus": [1, 0, 1]}));
    }

    #[test]
    fn curves_and_points_round_trip() {
        let f7 = Field::prime(7).unwrap();
        let c = TwistCurve::quadratic(
            Poly::from_terms(&f7, &[(7, 1), (1, -1)]),
            &Poly::from_terms(&f7, &[(3, 1), (1, -1)]),
        )
        .unwrap();
        let back = parse_curve(&curve(&c)).unwrap();
        assert_eq!(back, c);
        let p = FPoint::affine(Poly::from_terms(&f7, &[(3, 1)]), Poly::t(&f7));
        assert_eq!(parse_point(&f7, &point(&p)).unwrap(), p);
        assert_eq!(parse_point(&f7, &json!("infinity")).unwrap(), FPoint::Infinity);
    }

    #[test]
    fn keys_are_sorted() {
        let f5 = Field::prime(5).unwrap();
        let s = to_line(&curve(&TwistCurve::sextic(Poly::one(&f5), -1).unwrap()));
        let a = s.find("\"A\"").unwrap();
        let fam = s.find("\"family\"").unwrap();
        let sign = s.find("\"sign\"").unwrap();
        assert!(a < fam && fam < sign);
    }
}
