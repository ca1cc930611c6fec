//! JSON wire format for series:
//! `{"order":N,"ring":"int|rat|bivar","coeffs":[…]}`.
//!
//! Integers are decimal strings, rationals `"num/den"` strings, bivariate
//! coefficients arrays of `[eα, eβ, "<decimal>"]` triples.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use super::bivar::BivarPoly;
use super::ring::CoeffRing;
use super::trunc::TruncSeries;
use crate::error::{Error, Result};

pub trait JsonCoeff: CoeffRing {
    const RING_TAG: &'static str;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

fn as_str(v: &Value) -> Result<&str> {
    v.as_str()
        .ok_or_else(|| Error::Parse(format!("expected a string, got {v}")))
}

impl JsonCoeff for BigInt {
    const RING_TAG: &'static str = "int";

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse_int(as_str(v)?)
    }
}

/// Formats as `"num/den"`, always with an explicit denominator.
pub fn rational_to_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"num/den"` or a bare integer. Decimal points are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (parse_int(n.trim())?, parse_int(d.trim())?),
        None => (parse_int(s)?, BigInt::one()),
    };
    if num_traits::Zero::is_zero(&den) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

impl JsonCoeff for BigRational {
    const RING_TAG: &'static str = "rat";

    fn to_json(&self) -> Value {
        Value::String(rational_to_string(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        parse_rational(as_str(v)?)
    }
}

impl JsonCoeff for BivarPoly<BigInt> {
    const RING_TAG: &'static str = "bivar";

    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|((a, b), c)| json!([a, b, c.to_string()]))
                .collect(),
        )
    }

    fn from_json(v: &Value) -> Result<Self> {
        let terms = v
            .as_array()
            .ok_or_else(|| Error::Parse("bivariate coefficient must be an array".into()))?;
        let mut p = <BivarPoly<BigInt> as num_traits::Zero>::zero();
        for t in terms {
            let bad = || Error::Parse(format!("bad bivariate term {t}"));
            let arr = t.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
            let a = arr[0].as_u64().ok_or_else(bad)? as u32;
            let b = arr[1].as_u64().ok_or_else(bad)? as u32;
            let c = parse_int(as_str(&arr[2])?)?;
            p.add_term(a, b, &c);
        }
        Ok(p)
    }
}

pub fn series_to_json<R: JsonCoeff>(s: &TruncSeries<R>) -> Value {
    json!({
        "order": s.order(),
        "ring": R::RING_TAG,
        "coeffs": s.coeffs().iter().map(JsonCoeff::to_json).collect::<Vec<_>>(),
    })
}

pub fn series_from_json<R: JsonCoeff>(v: &Value) -> Result<TruncSeries<R>> {
    let ring = v.get("ring").and_then(Value::as_str).unwrap_or_default();
    if ring != R::RING_TAG {
        return Err(Error::Parse(format!(
            "ring mismatch: expected {:?}, found {ring:?}",
            R::RING_TAG
        )));
    }
    let order = v
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing order".into()))? as usize;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing coeffs".into()))?
        .iter()
        .map(R::from_json)
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != order + 1 {
        return Err(Error::Parse(format!(
            "order {order} needs {} coefficients, found {}",
            order + 1,
            coeffs.len()
        )));
    }
    Ok(TruncSeries::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        let q = parse_rational("6/4").unwrap();
        assert_eq!(rational_to_string(&q), "3/2");
        assert_eq!(rational_to_string(&parse_rational("-5").unwrap()), "-5/1");
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn bivar_layout() {
        let p = BivarPoly::<BigInt>::weight_sum();
        let s = TruncSeries::from_coeffs(vec![BivarPoly::one(), p]);
        let v = series_to_json(&s);
        assert_eq!(
            v.to_string(),
            r#"{"order":1,"ring":"bivar","coeffs":[[[0,0,"1"]],[[0,1,"1"],[1,0,"1"]]]}"#
        );
        assert_eq!(series_from_json::<BivarPoly<BigInt>>(&v).unwrap(), s);
    }

    #[test]
    fn ring_mismatch_rejected() {
        let s = TruncSeries::from_coeffs(vec![BigInt::from(1)]);
        let v = series_to_json(&s);
        assert!(series_from_json::<BigRational>(&v).is_err());
    }
}
