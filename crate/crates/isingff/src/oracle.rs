//! Independent series expansion of the n-fold form-factor integrals by binomial
//! expansion in `t` and exact half-integer Beta moments.

use std::collections::HashMap;

use num::{One, Zero};

use crate::arith::rational::{binomial_q, q, qi, Q};
use crate::arith::Series;
use crate::error::{Error, Result};
use crate::seq::gamma_half;

/// `Γ(a2/2)Γ(b2/2)/Γ((a2+b2)/2) / π` for doubled arguments whose √π powers total two.
pub fn beta_half(a2: i64, b2: i64) -> Result<Q> {
    if a2 <= 0 || b2 <= 0 {
        return Err(Error::Domain(format!("beta_half({a2}/2, {b2}/2)")));
    }
    let (ga, pa) = gamma_half(a2);
    let (gb, pb) = gamma_half(b2);
    let (gc, pc) = gamma_half(a2 + b2);
    if pa + pb - pc != 2 {
        return Err(Error::Domain(format!("beta_half({a2}/2, {b2}/2) is not a single multiple of pi")));
    }
    Ok(ga * gb / gc)
}

/// Identifies `∫₀¹ x^(p + h/2) (1-x)^(e1/2) (1-tx)^(e2/2) dx` with `h, e1, e2 ∈ {-1, +1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MomentKey {
    pub p: i64,
    pub half_offset: i8,
    pub eps_onemx: i8,
    pub eps_onemtx: i8,
}

impl MomentKey {
    pub fn new(p: i64, half_offset: i8, eps_onemx: i8, eps_onemtx: i8) -> Self {
        MomentKey { p, half_offset, eps_onemx, eps_onemtx }
    }
}

/// Series in `t` of the moment `key`, π-normalized.
pub fn moment_series(key: MomentKey, order: i64) -> Result<Series> {
    let e2 = q(key.eps_onemtx as i64, 2);
    let mut c = Vec::with_capacity(order.max(0) as usize);
    for k in 0..order.max(0) {
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        let a2 = 2 * (key.p + k) + key.half_offset as i64 + 2;
        let b2 = key.eps_onemx as i64 + 2;
        c.push(sign * binomial_q(&e2, k as u64) * beta_half(a2, b2)?);
    }
    Ok(Series::new(0, c, order))
}

#[derive(Clone, Copy)]
struct VarKind {
    half: i8,
    e1: i8,
    e2: i8,
    base: i64,
}

/// Expanded `Π_(i<j) (x_i - x_j)^2` over `k` variables as `(exponents, coefficient)`.
fn vandermonde_sq(k: usize) -> Vec<(Vec<i64>, i64)> {
    let mut terms: HashMap<Vec<i64>, i64> = HashMap::new();
    terms.insert(vec![0; k], 1);
    for i in 0..k {
        for j in (i + 1)..k {
            let mut next: HashMap<Vec<i64>, i64> = HashMap::new();
            for (e, c) in &terms {
                for (di, dj, w) in [(2, 0, 1), (1, 1, -2), (0, 2, 1)] {
                    let mut e2 = e.clone();
                    e2[i] += di;
                    e2[j] += dj;
                    *next.entry(e2).or_insert(0) += c * w;
                }
            }
            terms = next.into_iter().filter(|(_, c)| *c != 0).collect();
        }
    }
    let mut v: Vec<_> = terms.into_iter().collect();
    v.sort();
    v
}

/// All nonnegative vectors of length `len` with sum at most `max`.
fn compositions(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for v in &out {
            let used: i64 = v.iter().sum();
            for m in 0..=(max - used) {
                let mut w = v.clone();
                w.push(m);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

struct MomentCache {
    map: HashMap<(MomentKey, i64), Series>,
}

impl MomentCache {
    fn get(&mut self, key: MomentKey, order: i64) -> Result<Series> {
        if let Some(s) = self.map.get(&(key, order)) {
            return Ok(s.clone());
        }
        let s = moment_series(key, order)?;
        self.map.insert((key, order), s.clone());
        Ok(s)
    }
}

fn integrate(a: VarKind, na: usize, b: VarKind, nb: usize, prefactor_pow: i64, weight: Q, order: i64) -> Result<Series> {
    let inner = order - prefactor_pow;
    if inner <= 0 {
        return Ok(Series::zero(order));
    }
    let pairs: Vec<(usize, usize)> = (0..na).flat_map(|i| (0..nb).map(move |j| (i, na + j))).collect();
    let va = vandermonde_sq(na);
    let vb = vandermonde_sq(nb);
    let kinds: Vec<VarKind> = (0..na).map(|_| a).chain((0..nb).map(|_| b)).collect();
    let mut cache = MomentCache { map: HashMap::new() };
    let mut total = vec![Q::zero(); inner as usize];
    for ms in compositions(pairs.len(), inner - 1) {
        let msum: i64 = ms.iter().sum();
        let rem = inner - msum;
        let w: i64 = ms.iter().map(|m| m + 1).product();
        let mut extra = vec![0i64; na + nb];
        for (&(i, j), &m) in pairs.iter().zip(&ms) {
            extra[i] += m;
            extra[j] += m;
        }
        let mut acc = Series::zero(rem);
        for (ea, ca) in &va {
            for (eb, cb) in &vb {
                let mut prod = Series::one(rem).scale(&qi(ca * cb));
                for (i, k) in kinds.iter().enumerate() {
                    let vpow = if i < na { ea[i] } else { eb[i - na] };
                    let key = MomentKey::new(k.base + extra[i] + vpow, k.half, k.e1, k.e2);
                    prod = prod.mul(&cache.get(key, rem)?);
                }
                acc = acc.add(&prod);
            }
        }
        for k in 0..rem {
            total[(msum + k) as usize] += qi(w) * acc.coeff(k);
        }
    }
    Ok(Series::new(0, total, inner).scale(&weight).shift(prefactor_pow))
}

fn factorial_q(n: i64) -> Q {
    (1..=n).fold(Q::one(), |acc, k| acc * qi(k))
}

/// Series of `f^(n)_{N,N}` for even `n`, or `f^(n)_{N,N} / t^(N/2)` for odd `n`.
pub fn oracle_f(nfold: i64, big_n: i64, order: i64) -> Result<Series> {
    if nfold < 1 || big_n < 0 {
        return Err(Error::Domain(format!("oracle_f({nfold}, {big_n})")));
    }
    let n = nfold / 2;
    if nfold % 2 == 0 {
        let a = VarKind { half: 1, e1: -1, e2: -1, base: big_n };
        let b = VarKind { half: -1, e1: 1, e2: 1, base: big_n };
        let w = (factorial_q(n) * factorial_q(n)).recip();
        integrate(a, n as usize, b, n as usize, n * (big_n + n), w, order)
    } else {
        let a = VarKind { half: -1, e1: -1, e2: -1, base: big_n };
        let b = VarKind { half: 1, e1: 1, e2: 1, base: big_n };
        let w = (factorial_q(n) * factorial_q(n + 1)).recip();
        integrate(a, n as usize + 1, b, n as usize, n * big_n + n * (n + 1), w, order)
    }
}

pub fn oracle_f4(big_n: i64, order: i64) -> Result<Series> {
    oracle_f(4, big_n, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::f_series;
    use crate::seq::lambda;

    #[test]
    fn beta_half_cases() {
        assert_eq!(beta_half(1, 1).unwrap(), Q::one());
        assert_eq!(beta_half(3, 1).unwrap(), q(1, 2));
        for n in 0..6 {
            assert_eq!(beta_half(2 * n + 1, 1).unwrap(), lambda(n));
        }
        assert!(beta_half(2, 2).is_err());
    }

    #[test]
    fn moments() {
        let k = MomentKey::new(1, -1, -1, 1);
        let s = moment_series(k, 3).unwrap();
        assert_eq!(s.coeff(0), beta_half(3, 1).unwrap());
        assert_eq!(s.coeff(1), -q(1, 2) * beta_half(5, 1).unwrap());
    }

    #[test]
    fn f1_is_lambda_f() {
        for n in 0..5 {
            assert_eq!(oracle_f(1, n, 10).unwrap(), f_series(n, 10).scale(&lambda(n)));
        }
    }

    #[test]
    fn f2_leading_and_n0() {
        let s = oracle_f(2, 1, 6).unwrap();
        assert_eq!(s.leading(), Some((2, q(3, 64))));
        let s0 = oracle_f(2, 0, 6).unwrap();
        let expect = f_series(0, 6).mul(&f_series(1, 6)).scale(&q(1, 4)).shift(1).truncate(6);
        assert_eq!(s0, expect);
    }

    #[test]
    fn f3_leading() {
        let s = oracle_f(3, 1, 8).unwrap();
        assert_eq!(s.leading(), Some((3, q(1, 1024))));
    }
}
