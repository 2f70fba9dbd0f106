//! Exact JSON forms: rationals as `"num/den"` strings, series and polynomials as
//! `{valuation, order, coeffs}` objects.

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::{fmt_q, parse_q, Q};
use super::series::Series;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub valuation: i64,
    pub order: i64,
    pub coeffs: Vec<String>,
}

impl From<&Series> for SeriesJson {
    fn from(s: &Series) -> Self {
        SeriesJson { valuation: s.valuation(), order: s.order(), coeffs: s.coeffs().iter().map(fmt_q).collect() }
    }
}

impl SeriesJson {
    pub fn to_series(&self) -> Result<Series> {
        let c = self.coeffs.iter().map(|x| parse_q(x)).collect::<Result<Vec<Q>>>()?;
        let s = Series::new(self.valuation, c, self.order);
        if s.valuation() != self.valuation && !s.is_zero() {
            return Err(Error::Json(format!("leading coefficient at t^{} is zero", self.valuation)));
        }
        Ok(s)
    }
}

/// Polynomials use the series layout with `valuation = 0` and `order = degree + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub valuation: i64,
    pub order: i64,
    pub coeffs: Vec<String>,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        PolyJson { valuation: 0, order: p.coeffs().len() as i64, coeffs: p.coeffs().iter().map(fmt_q).collect() }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<Poly> {
        let c = self.coeffs.iter().map(|x| parse_q(x)).collect::<Result<Vec<Q>>>()?;
        Ok(Poly::new(c).shift(self.valuation.max(0) as usize))
    }
}

pub fn rational_to_json(x: &Q) -> serde_json::Value {
    serde_json::Value::String(fmt_q(x))
}

pub fn series_to_json(s: &Series) -> serde_json::Value {
    serde_json::to_value(SeriesJson::from(s)).expect("series serializes")
}

pub fn series_from_json(v: &serde_json::Value) -> Result<Series> {
    let j: SeriesJson = serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
    j.to_series()
}

/// `#[serde(with = "qstr")]` for rational fields.
pub mod qstr {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::arith::rational::{fmt_q, parse_q, Q};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}
