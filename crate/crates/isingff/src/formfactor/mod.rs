//! Palindromic coefficient polynomials `C^(n)_m(N;t)`, the constants `K^(n)_m`, and the
//! assembly of `f^(n)_{N,N}` in the `F_N`, `F_(N+1)` basis.

pub mod alt;
pub mod c2;
pub mod c3;
pub mod c4;
pub mod emit;
pub mod fixtures;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{PalinPoly, Poly, Series, Q};
use crate::error::{Error, Result};
use crate::hyper::f_series;
use crate::seq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    /// The value stands for `f / t^(N/2)`.
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Constructed,
    Fixture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerTerm {
    pub k: i64,
    #[serde(with = "crate::arith::json::qstr")]
    pub coeff: Q,
}

/// `f^(n)_{N,N} = Σ K_k f^(k) + Σ_m C_m F_N^(n-m) F_(N+1)^m`, with `k = 0` the constant 1.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormFactorExpr {
    pub n: i64,
    #[serde(rename = "N")]
    pub big_n: i64,
    pub lower_terms: Vec<LowerTerm>,
    pub c_polys: Vec<PalinPoly>,
    pub parity: Parity,
    pub source: Source,
}

impl FormFactorExpr {
    /// Constant term, or the coefficient of `f^(k)`.
    pub fn lower(&self, k: i64) -> Q {
        self.lower_terms.iter().find(|l| l.k == k).map(|l| l.coeff.clone()).unwrap_or_else(Q::zero)
    }

    pub fn poly(&self, m: usize) -> Poly {
        self.c_polys.get(m).map(|p| p.poly.clone()).unwrap_or_else(Poly::zero)
    }

    /// The polynomial part `Σ_m C_m F_N^(n-m) F_(N+1)^m` only.
    pub fn basis_part(&self, order: i64) -> Series {
        let fnn = f_series(self.big_n, order);
        let fm = f_series(self.big_n + 1, order);
        let mut acc = Series::zero(order);
        for (m, p) in self.c_polys.iter().enumerate() {
            if p.poly.is_zero() {
                continue;
            }
            let m = m as u32;
            let e = self.n as u32 - m;
            acc = acc.add(&Series::from_poly(&p.poly, order).mul(&fnn.pow(e)).mul(&fm.pow(m)));
        }
        acc
    }

    pub fn assemble(&self, order: i64) -> Result<Series> {
        let mut acc = self.basis_part(order);
        for l in &self.lower_terms {
            acc = acc.add(&lower_series(l.k, self.big_n, order)?.scale(&l.coeff));
        }
        Ok(acc)
    }
}

/// `1` for `k = 0`, `λ_N F_N` for `k = 1`, and the (normalized) assembled `f^(k)` otherwise.
pub fn lower_series(k: i64, big_n: i64, order: i64) -> Result<Series> {
    match k {
        0 => Ok(Series::one(order)),
        1 => Ok(f_series(big_n, order).scale(&seq::lambda(big_n))),
        _ => form_factor(k, big_n)?.assemble(order),
    }
}

fn palin(p: Poly) -> PalinPoly {
    let center = match (p.valuation(), p.degree()) {
        (Some(v), Some(d)) => (v + d) as i64,
        _ => 0,
    };
    PalinPoly::new(p, center)
}

/// Build from the closed-form construction; `n = 1..4`, `N >= 1` (`n = 1` for any `N`).
pub fn construct(n: i64, big_n: i64) -> Result<FormFactorExpr> {
    let lt = |k: i64, coeff: Q| LowerTerm { k, coeff };
    let (lower_terms, c_polys) = match n {
        1 => (vec![], vec![palin(Poly::constant(seq::lambda(big_n)))]),
        _ if big_n < 1 => return Err(Error::Domain(format!("construction of f^({n}) needs N >= 1, got {big_n}"))),
        2 => (vec![lt(0, c2::k2_0(big_n))], (0..3).map(|m| c2::c2_poly(big_n, m)).collect::<Result<Vec<_>>>()?),
        3 => (vec![lt(1, c3::k3_0(big_n))], c3::c3_polys(big_n)?),
        4 => {
            let s = c4::c4_solve(big_n)?;
            (vec![lt(0, s.k0), lt(2, s.k1)], s.polys)
        }
        _ => return Err(Error::Domain(format!("no construction for n = {n}"))),
    };
    Ok(FormFactorExpr { n, big_n, lower_terms, c_polys, parity: Parity::of(n), source: Source::Constructed })
}

fn cache() -> &'static Mutex<HashMap<(i64, i64), Arc<FormFactorExpr>>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), Arc<FormFactorExpr>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Constructed expression where available, otherwise the stored table.
pub fn form_factor(n: i64, big_n: i64) -> Result<Arc<FormFactorExpr>> {
    if let Some(e) = cache().lock().unwrap().get(&(n, big_n)) {
        return Ok(e.clone());
    }
    let e = if n == 1 || (big_n >= 1 && (2..=4).contains(&n)) {
        construct(n, big_n)?
    } else {
        fixtures::lookup(n, big_n)?.to_expr()
    };
    let e = Arc::new(e);
    cache().lock().unwrap().insert((n, big_n), e.clone());
    Ok(e)
}

pub fn assemble(n: i64, big_n: i64, order: i64) -> Result<Series> {
    form_factor(n, big_n)?.assemble(order)
}

/// Degree law: `C^(n)_m` has valuation `m` and `val + deg = ⌊n/2⌋(2N+1) + m`.
pub fn degree_law_holds(e: &FormFactorExpr) -> bool {
    e.c_polys.iter().enumerate().all(|(m, p)| {
        p.poly.is_zero()
            || (p.poly.valuation() == Some(m) && p.center == (e.n / 2) * (2 * e.big_n + 1) + m as i64 && p.is_palindromic())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn f2_leading_and_oracle() {
        for big_n in 1..=3 {
            let s = assemble(2, big_n, 2 * big_n + 6).unwrap();
            let l = seq::lambda(big_n + 1);
            assert_eq!(s.leading(), Some((big_n + 1, &l * &l / Q::from_integer((2 * big_n + 1).into()))));
        }
        assert_eq!(assemble(2, 1, 4).unwrap().coeff(2), q(3, 64));
    }

    #[test]
    fn degree_law() {
        for n in 2..=4 {
            for big_n in 1..=3 {
                assert!(degree_law_holds(&form_factor(n, big_n).unwrap()), "n={n} N={big_n}");
            }
        }
    }
}
