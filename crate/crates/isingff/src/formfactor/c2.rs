use num::{One, Zero};

use crate::arith::rational::{binomial, q, Q};
use crate::arith::{LogSeries, PalinPoly, Series};
use crate::error::{Error, Result};
use crate::hyper::u2_logseries;
use crate::seq::{self, SeqContext};

/// `A^(2)_m = (-1)^(m+1) (N/2) C(2,m) β^m`.
pub fn amplitude2(big_n: i64, m: i64) -> Result<Q> {
    let sign = if m % 2 == 0 { -Q::one() } else { Q::one() };
    Ok(sign * q(big_n, 2) * binomial(2, m) * num::pow(seq::beta(big_n)?, m as usize))
}

/// Analytic part of `t^-shift · Π factors · extra`; the log channels must vanish below `t^known`.
pub(crate) fn product_core(factors: &[&LogSeries], extra: Option<&Series>, shift: i64, known: i64) -> Result<Series> {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = acc.mul(f);
    }
    if let Some(s) = extra {
        acc = acc.mul_series(s);
    }
    let acc = acc.shift(-shift);
    if !acc.log_free_below(known) {
        return Err(Error::Domain("log channel reaches the known coefficient range".into()));
    }
    Ok(acc.analytic().clone())
}

/// Coefficients `c^(2)_(m;n)` of the core: known from u2 products, middle term for `m = 1`,
/// the rest by palindromy about `2N+1-m`.
pub fn c2_core(big_n: i64, m: i64) -> Result<Vec<Q>> {
    if big_n < 1 {
        return Err(Error::Domain("C^(2) construction needs N >= 1".into()));
    }
    let order = 2 * big_n + 6;
    let u = u2_logseries(big_n, order)?;
    let v = u2_logseries(big_n + 1, order)?;
    let (s, known) = match m {
        2 => (product_core(&[&u, &u], None, 2, big_n)?, big_n),
        1 => (product_core(&[&u, &v], None, 2, big_n)?, big_n),
        0 => (product_core(&[&v, &v], None, 2, big_n + 1)?, big_n + 1),
        _ => return Err(Error::Domain(format!("C^(2)_{m}"))),
    };
    let center = 2 * big_n + 1 - m;
    let mut core: Vec<Option<Q>> = vec![None; center as usize + 1];
    for n in 0..known {
        core[n as usize] = Some(s.coeff(n));
    }
    if m == 1 {
        core[big_n as usize] = Some(c21_middle(big_n)?);
    }
    let p = PalinPoly::complete(&core, center)?;
    Ok(p.poly.coeffs().to_vec().into_iter().chain(std::iter::repeat(Q::zero())).take(center as usize + 1).collect())
}

/// `c^(2)_(1;N) = λ_N² + Σ_k a_k(N) a_(N-1-k)(N)`.
pub fn c21_middle(big_n: i64) -> Result<Q> {
    let ctx = SeqContext::new(big_n);
    let mut s = ctx.lambda() * ctx.lambda();
    for k in 0..big_n {
        s += ctx.a(k)? * ctx.a(big_n - 1 - k)?;
    }
    Ok(s)
}

/// Full `C^(2)_m(N;t) = A^(2)_m t^m Σ c_(m;n) t^n`, palindromic about `2N+1+m`.
pub fn c2_poly(big_n: i64, m: i64) -> Result<PalinPoly> {
    let a = amplitude2(big_n, m)?;
    let core = c2_core(big_n, m)?;
    let mut c = vec![Q::zero(); m as usize];
    c.extend(core.into_iter().map(|x| x * &a));
    Ok(PalinPoly::new(crate::arith::Poly::new(c), 2 * big_n + 1 + m))
}

pub fn k2_0(big_n: i64) -> Q {
    q(big_n, 2)
}

/// `c^(2)_(2;n)` for any index, zero outside the core.
pub fn c22(big_n: i64, n: i64) -> Result<Q> {
    let core = c2_core(big_n, 2)?;
    Ok(if n < 0 { Q::zero() } else { core.get(n as usize).cloned().unwrap_or_else(Q::zero) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;

    #[test]
    fn n1_polys() {
        let p2 = c2_poly(1, 2).unwrap();
        assert_eq!(p2.poly, Poly::from_ints(&[0, 0, 1, 1]).scale(&-q(81, 128)));
        let p1 = c2_poly(1, 1).unwrap();
        assert_eq!(p1.poly, Poly::from_ints(&[0, 4, 5, 4]).scale(&q(9, 32)));
        assert_eq!(c21_middle(1).unwrap(), q(5, 4));
        for n in 1..6 {
            assert_eq!(c2_poly(n, 0).unwrap().poly.coeff(0), -q(n, 2));
            for m in 0..3 {
                assert!(c2_poly(n, m).unwrap().is_palindromic());
            }
        }
    }
}
