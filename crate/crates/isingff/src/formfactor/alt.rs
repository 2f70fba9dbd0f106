//! Independent assembly routes for `f^(2)` and `f^(3)`, and the low-order cancellation report.

use serde::Serialize;

use super::{assemble, c2, c3};
use crate::arith::rational::{q, qi, Q};
use crate::arith::Series;
use crate::error::{Error, Result};
use crate::hyper::f_series;
use crate::seq;

/// `f^(2)_{N,N} = N f^(2)_{1,1} - (N/2) Σ_{j<N} λ_j λ_(j+1) t^(j+1) F_j F_(j+1) / (j(j+1))`.
pub fn f2_recursion_series(big_n: i64, order: i64) -> Result<Series> {
    if big_n < 1 {
        return Err(Error::Domain("the f^(2) recursion starts at N = 1".into()));
    }
    let mut sum = Series::zero(order);
    for j in 1..big_n {
        let c = seq::lambda(j) * seq::lambda(j + 1) / qi(j * (j + 1));
        sum = sum.add(&f_series(j, order).mul(&f_series(j + 1, order)).shift(j + 1).scale(&c));
    }
    let f11 = assemble(2, 1, order)?;
    Ok(f11.scale(&qi(big_n)).sub(&sum.scale(&q(big_n, 2))).truncate(order))
}

/// Normalized `f^(3)/t^(N/2) = {2/3 + ((N-1)/N) f^(2)} λ_N F_N + Σ C̄_m F_N^(3-m) F_(N+1)^m`.
pub fn f3_alternative(big_n: i64, order: i64) -> Result<Series> {
    if big_n < 1 {
        return Err(Error::Domain("the alternative f^(3) form needs N >= 1".into()));
    }
    let fnn = f_series(big_n, order);
    let fm = f_series(big_n + 1, order);
    let f2 = assemble(2, big_n, order)?;
    let pref = f2.scale(&q(big_n - 1, big_n)).add(&Series::one(order).scale(&q(2, 3)));
    let mut acc = pref.mul(&fnn).scale(&seq::lambda(big_n));
    let mid = c3::c31_middle(big_n)?;
    for m in 0..4 {
        let p = c3::c3_bar_poly(big_n, m, &mid)?;
        let mu = m as u32;
        acc = acc.add(&Series::from_poly(&p.poly, order).mul(&fnn.pow(3 - mu)).mul(&fm.pow(mu)));
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CancellationReport {
    pub n: i64,
    #[serde(rename = "N")]
    pub big_n: i64,
    /// Zero claimed through `t^through` (of the normalized series for odd `n`).
    pub through: i64,
    pub zero_through: bool,
    pub first_exponent: Option<i64>,
    #[serde(with = "opt_q")]
    pub first_coeff: Option<Q>,
    pub expected_exponent: i64,
    #[serde(with = "crate::arith::json::qstr")]
    pub expected_coeff: Q,
}

mod opt_q {
    use serde::Serializer;

    use crate::arith::rational::{fmt_q, Q};

    pub fn serialize<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_some(&fmt_q(v)),
            None => s.serialize_none(),
        }
    }
}

impl CancellationReport {
    pub fn passed(&self) -> bool {
        self.zero_through
            && self.first_exponent == Some(self.expected_exponent)
            && self.first_coeff.as_ref() == Some(&self.expected_coeff)
    }
}

/// Integer exponent of the leading term, normalized by `t^(N/2)` for odd `n`.
pub fn expected_leading(n: i64, big_n: i64) -> Result<(i64, Q)> {
    let (e, c) = seq::selberg_leading(n, big_n)?;
    let e = if n % 2 == 1 { e - q(big_n, 2) } else { e };
    if !e.is_integer() {
        return Err(Error::Degenerate(format!("non-integral leading exponent {e}")));
    }
    Ok((e.to_integer().try_into().expect("small exponent"), c))
}

/// The claimed zero range: `t^N` for `n = 2`, `t^(N+1)` for `n = 3` (normalized), `t^(2N+3)` for `n = 4`.
pub fn claimed_zero_through(n: i64, big_n: i64) -> Result<i64> {
    match n {
        2 => Ok(big_n),
        3 => Ok(big_n + 1),
        4 => Ok(2 * big_n + 3),
        _ => Err(Error::Domain(format!("no cancellation statement for n = {n}"))),
    }
}

pub fn cancellation_report(n: i64, big_n: i64) -> Result<CancellationReport> {
    let through = claimed_zero_through(n, big_n)?;
    let (expected_exponent, expected_coeff) = expected_leading(n, big_n)?;
    let order = expected_exponent.max(through) + 1;
    let s = assemble(n, big_n, order)?;
    let zero_through = s.vanishes_below(through + 1);
    let lead = s.leading();
    Ok(CancellationReport {
        n,
        big_n,
        through,
        zero_through,
        first_exponent: lead.as_ref().map(|l| l.0),
        first_coeff: lead.map(|l| l.1),
        expected_exponent,
        expected_coeff,
    })
}

/// `f^(2)` assembled against the literal recursion, and `f^(3)` against its alternative form.
pub fn pipelines_agree(big_n: i64, order: i64) -> Result<(bool, bool)> {
    let a2 = assemble(2, big_n, order)? == f2_recursion_series(big_n, order)?;
    let a3 = assemble(3, big_n, order)? == f3_alternative(big_n, order)?;
    Ok((a2, a3))
}

/// `C^(2)_0(N;t) (N+1) β_(N+1)^2 t^2 / N = C^(2)_2(N+1;t)`.
pub fn c2_cross_relation(big_n: i64) -> Result<bool> {
    let lhs = c2::c2_poly(big_n, 0)?.poly.shift(2).scale(&(qi(big_n + 1) * num::pow(seq::beta(big_n + 1)?, 2) / qi(big_n)));
    Ok(lhs == c2::c2_poly(big_n + 1, 2)?.poly)
}

/// `K^(3)_0 λ_N + A^(3)_0 + ((N-1)/N) λ_N A^(2)_0`.
pub fn c3_constant_law_residual(big_n: i64) -> Result<Q> {
    let l = seq::lambda(big_n);
    Ok(c3::k3_0(big_n) * &l + c3::amplitude3(big_n, 0)? + q(big_n - 1, big_n) * &l * c2::amplitude2(big_n, 0)?)
}

#[cfg(test)]
mod tests {
    use num::Zero;

    use super::*;

    #[test]
    fn recursion_and_alternative() {
        for big_n in 1..=3 {
            assert_eq!(pipelines_agree(big_n, 2 * big_n + 8).unwrap(), (true, true), "N={big_n}");
        }
        let s = f2_recursion_series(3, 6).unwrap();
        let l = seq::lambda(4);
        assert_eq!(s.leading(), Some((4, &l * &l / qi(7))));
    }

    #[test]
    fn cancellation_examples() {
        let r = cancellation_report(2, 4).unwrap();
        assert!(r.passed() && r.through == 4 && r.first_exponent == Some(5));
        let r = cancellation_report(3, 2).unwrap();
        assert!(r.passed() && r.first_exponent == Some(4));
        let r = cancellation_report(4, 1).unwrap();
        assert!(r.passed() && r.first_exponent == Some(6));
    }

    #[test]
    fn cross_relation_and_constants() {
        for big_n in 1..=4 {
            assert!(c2_cross_relation(big_n).unwrap());
            assert!(c3_constant_law_residual(big_n).unwrap().is_zero());
        }
    }
}
