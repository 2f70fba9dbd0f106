use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num::BigRational as Q;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qbig(n: BigInt) -> Q {
    Q::from_integer(n)
}

/// `"num/den"`, or `"num"` when the denominator is one.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad("numerator"))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad("denominator"))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(qbig(BigInt::from_str(s).map_err(|_| bad("integer"))?)),
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: i64, k: i64) -> Q {
    if k < 0 || k > n {
        return Q::zero();
    }
    let mut r = Q::one();
    for i in 0..k {
        r = r * qi(n - i) / qi(i + 1);
    }
    r
}

/// Generalized binomial coefficient `e choose k` for rational `e`.
pub fn binomial_q(e: &Q, k: u64) -> Q {
    let mut r = Q::one();
    for i in 0..k {
        r = r * (e - qi(i as i64)) / qi(i as i64 + 1);
    }
    r
}

pub fn qpow(x: &Q, e: i64) -> Q {
    if e >= 0 {
        num::pow(x.clone(), e as usize)
    } else {
        num::pow(x.recip(), (-e) as usize)
    }
}

/// Prime-power factorization by trial division; `None` when a cofactor above the bound remains.
pub fn small_factor(n: &BigInt) -> Option<Vec<(u64, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n && p < 100_000 {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        if BigInt::from(p) * BigInt::from(p) <= n {
            return None;
        }
        out.push((u64::try_from(n).ok()?, 1));
    }
    Some(out)
}
