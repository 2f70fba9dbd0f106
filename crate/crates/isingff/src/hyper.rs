//! Hypergeometric basis series and the local solutions of the second-order operator.

use num::{One, Zero};

use crate::arith::rational::{binomial, q, qi, Q};
use crate::arith::{LogSeries, Series};
use crate::error::{Error, Result};
use crate::seq::{self, SeqContext};

/// `₂F₁(a, b; c; t)` through `t^(order-1)`.
pub fn hyp2f1(a: &Q, b: &Q, c: &Q, order: i64) -> Series {
    let mut coeffs = Vec::with_capacity(order.max(0) as usize);
    let mut term = Q::one();
    for n in 0..order {
        coeffs.push(term.clone());
        let n = qi(n);
        term = term * (a + &n) * (b + &n) / ((c + &n) * (&n + Q::one()));
    }
    Series::new(0, coeffs, order)
}

/// `F_N = ₂F₁(1/2, N+1/2; N+1; t)`, coefficients `b_n(N)`.
pub fn f_series(big_n: i64, order: i64) -> Series {
    let ctx = SeqContext::new(big_n);
    Series::from_fn(0, order, |n| ctx.b(n))
}

pub fn fbar_series(big_n: i64, order: i64) -> Series {
    hyp2f1(&q(3, 2), &(qi(big_n) + q(3, 2)), &qi(big_n + 2), order)
}

pub fn g_series(big_n: i64, order: i64) -> Series {
    hyp2f1(&q(3, 2), &(qi(big_n) + q(3, 2)), &qi(big_n + 1), order)
}

/// `u1(N) = t^(N+1) F_N`.
pub fn u1_series(big_n: i64, order: i64) -> Series {
    f_series(big_n, order - big_n - 1).shift(big_n + 1)
}

/// The analytic function `w2(N) = t Σ_(n<N) a_n t^n + t^(N+1) N λ² Σ b_n k_n t^n`.
pub fn w2_series(big_n: i64, order: i64) -> Result<Series> {
    if big_n < 1 {
        return Err(Error::Domain("u2 needs N >= 1".into()));
    }
    let ctx = SeqContext::new(big_n);
    let c = qi(big_n) * ctx.lambda() * ctx.lambda();
    let mut coeffs = vec![Q::zero(); order.max(0) as usize];
    for n in 0..big_n {
        if n + 1 < order {
            coeffs[(n + 1) as usize] += ctx.a(n)?;
        }
    }
    for n in 0..(order - big_n - 1).max(0) {
        coeffs[(big_n + 1 + n) as usize] += &c * ctx.b(n) * ctx.k(n);
    }
    Ok(Series::new(0, coeffs, order))
}

/// `u2(N) = w2(N) - N λ_N² u1(N) ln t`.
pub fn u2_logseries(big_n: i64, order: i64) -> Result<LogSeries> {
    let w2 = w2_series(big_n, order)?;
    let l = seq::lambda(big_n);
    let c = qi(big_n) * &l * &l;
    Ok(LogSeries::new(w2, u1_series(big_n, order).scale(&-c)))
}

/// Every basis series for one `N`, at one truncation order.
#[derive(Clone, Debug)]
pub struct BasisBundle {
    pub big_n: i64,
    pub order: i64,
    pub f_n: Series,
    pub f_n1: Series,
    pub fbar_n: Series,
    pub g_n: Series,
    pub u1_n: Series,
    pub u1_n1: Series,
    pub u2_n: LogSeries,
    pub u2_n1: LogSeries,
}

impl BasisBundle {
    pub fn new(big_n: i64, order: i64) -> Result<Self> {
        Ok(BasisBundle {
            big_n,
            order,
            f_n: f_series(big_n, order),
            f_n1: f_series(big_n + 1, order),
            fbar_n: fbar_series(big_n, order),
            g_n: g_series(big_n, order),
            u1_n: u1_series(big_n, order),
            u1_n1: u1_series(big_n + 1, order),
            u2_n: u2_logseries(big_n, order)?,
            u2_n1: u2_logseries(big_n + 1, order)?,
        })
    }
}

/// `u1(N) u2(N+1) - β_N u2(N) u1(N+1) - t^(N+2)`, both channels.
pub fn wronskian_residual(big_n: i64, order: i64) -> Result<LogSeries> {
    let b = BasisBundle::new(big_n, order)?;
    let beta = seq::beta(big_n)?;
    let lhs = b.u2_n1.mul_series(&b.u1_n).sub(&b.u2_n.mul_series(&b.u1_n1).scale(&beta));
    Ok(lhs.sub(&LogSeries::from(Series::monomial(Q::one(), big_n + 2, order))))
}

/// `Σ_j (-1)^j C(n,j) β^j [u2(N+1)/t]^(n-j) u2(N)^j F_N^(n-j) F_(N+1)^j - 1`.
pub fn wronskian_power_residual(big_n: i64, power: u32, order: i64) -> Result<LogSeries> {
    let b = BasisBundle::new(big_n, order + 1)?;
    let beta = seq::beta(big_n)?;
    let v = b.u2_n1.shift(-1);
    let n = power as i64;
    let mut acc = LogSeries::from(Series::one(order).scale(&-Q::one()));
    for j in 0..=n {
        let sign = if j % 2 == 0 { Q::one() } else { -Q::one() };
        let c = sign * binomial(n, j) * num::pow(beta.clone(), j as usize);
        let term = v
            .pow((n - j) as u32)
            .mul(&b.u2_n.pow(j as u32))
            .mul_series(&b.f_n.pow((n - j) as u32))
            .mul_series(&b.f_n1.pow(j as u32))
            .scale(&c);
        acc = acc.add(&term);
    }
    Ok(acc.truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_and_u_heads() {
        let f0 = f_series(0, 4);
        assert_eq!(f0.coeffs(), &[qi(1), q(1, 4), q(9, 64), q(25, 256)]);
        assert_eq!(f_series(1, 3).coeff(1), q(3, 8));
        let u1 = u1_series(1, 6);
        assert_eq!(u1.leading(), Some((2, qi(1))));
        assert_eq!(u1.coeff(3), q(3, 8));
        let u2 = u2_logseries(1, 8).unwrap();
        assert_eq!(u2.analytic().leading(), Some((1, qi(1))));
        assert_eq!(u2.analytic().coeff(2), Q::zero() - q(1, 4));
        assert_eq!(u2.logpart(), u1_series(1, 8).scale(&-q(1, 4)));
    }

    #[test]
    fn wronskian_zero() {
        for n in [1, 4] {
            assert!(wronskian_residual(n, n + 12).unwrap().is_zero());
        }
    }
}
