use num::Zero;
use serde::{Deserialize, Serialize};

use super::json::PolyJson;
use super::poly::Poly;
use crate::error::{Error, Result};

/// `t^d · p(1/t)`.
pub fn palin_reflect(p: &Poly, d: i64) -> Result<Poly> {
    let deg = p.degree().map_or(-1, |x| x as i64);
    if d < deg || d < 0 {
        return Err(Error::MalformedCenter { center: d, degree: deg });
    }
    Ok(p.reflect(d as usize))
}

/// Polynomial with a declared palindromy center `d`: `P(t) = t^d P(1/t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PalinJson", try_from = "PalinJson")]
pub struct PalinPoly {
    pub poly: Poly,
    pub center: i64,
}

impl PalinPoly {
    pub fn new(poly: Poly, center: i64) -> Self {
        PalinPoly { poly, center }
    }

    pub fn is_palindromic(&self) -> bool {
        if self.poly.is_zero() {
            return true;
        }
        let d = self.center;
        if d < 0 || self.poly.degree().unwrap() as i64 > d {
            return false;
        }
        (0..=d).all(|k| self.poly.coeff(k as usize) == self.poly.coeff((d - k) as usize))
    }

    /// First index violating `c_k = c_(d-k)`.
    pub fn first_violation(&self) -> Option<i64> {
        (0..=self.center.max(0)).find(|&k| self.poly.coeff(k as usize) != self.poly.coeff((self.center - k) as usize))
    }

    /// Fill every unknown coefficient from its mirror under `k -> d-k`.
    pub fn complete(known: &[Option<super::Q>], d: i64) -> Result<Self> {
        let mut c = Vec::with_capacity(d as usize + 1);
        for k in 0..=d {
            let own = known.get(k as usize).cloned().flatten();
            let mirror = known.get((d - k) as usize).cloned().flatten();
            match (own, mirror) {
                (Some(a), _) => c.push(a),
                (None, Some(b)) => c.push(b),
                (None, None) => return Err(Error::Domain(format!("coefficient {k} undetermined by center {d}"))),
            }
        }
        Ok(PalinPoly::new(Poly::new(c), d))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.coeffs().iter().all(|x| x.is_zero())
    }
}

#[derive(Serialize, Deserialize)]
struct PalinJson {
    center: i64,
    #[serde(flatten)]
    poly: PolyJson,
}

impl From<PalinPoly> for PalinJson {
    fn from(p: PalinPoly) -> Self {
        PalinJson { center: p.center, poly: PolyJson::from(&p.poly) }
    }
}

impl TryFrom<PalinJson> for PalinPoly {
    type Error = Error;
    fn try_from(j: PalinJson) -> Result<Self> {
        Ok(PalinPoly::new(j.poly.to_poly()?, j.center))
    }
}
