//! Scalar sequences: Pochhammer symbols, structure constants, the `a`/`b`/`k`
//! coefficient families, harmonic partial sums and Selberg leading terms.

use std::collections::HashMap;
use std::sync::Mutex;

use num::{One, Zero};

use crate::arith::rational::{factorial, q, qbig, qi, Q};
use crate::error::{Error, Result};

pub fn pochhammer(x: &Q, n: i64) -> Result<Q> {
    if n < 0 {
        return Err(Error::NegativeLength(n));
    }
    let mut r = Q::one();
    for i in 0..n {
        r *= x + qi(i);
    }
    Ok(r)
}

fn poch(x: Q, n: i64) -> Q {
    pochhammer(&x, n).expect("nonnegative length")
}

fn fact(n: i64) -> Q {
    qbig(factorial(n as u64))
}

pub fn lambda(n: i64) -> Q {
    poch(q(1, 2), n) / fact(n)
}

pub fn beta(n: i64) -> Result<Q> {
    if n < 1 {
        return Err(Error::Domain(format!("beta_N needs N >= 1, got {n}")));
    }
    Ok(q((2 * n + 1) * (2 * n + 1), 4 * n * (n + 1)))
}

/// `(λ_N, β_N)`.
pub fn structure_constants(n: i64) -> Result<(Q, Q)> {
    Ok((lambda(n), beta(n)?))
}

pub fn a_coeff(big_n: i64, n: i64) -> Result<Q> {
    if n < 0 || (n > 0 && n >= big_n) {
        return Err(Error::Range { big_n, n, limit: big_n.max(1) });
    }
    Ok(poch(q(1, 2), n) * poch(q(1, 2) - qi(big_n), n) / (poch(qi(1 - big_n), n) * fact(n)))
}

/// The alternative closed form `λ_N (1/2)_n (N-n)! / ((1/2)_(N-n) n!)`, kept only to test it.
pub fn a_coeff_alt(big_n: i64, n: i64) -> Q {
    lambda(big_n) * poch(q(1, 2), n) * fact(big_n - n) / (poch(q(1, 2), big_n - n) * fact(n))
}

pub fn b_coeff(big_n: i64, n: i64) -> Q {
    poch(q(1, 2), n) * poch(q(1, 2) + qi(big_n), n) / (poch(qi(big_n + 1), n) * fact(n))
}

/// `H_n(z) = Σ_(k<n) 1/(z+k)`.
pub fn harmonic_partial(z: &Q, n: i64) -> Q {
    (0..n).fold(Q::zero(), |acc, k| acc + (z + qi(k)).recip())
}

pub fn k_coeff(big_n: i64, n: i64) -> Q {
    let one = Q::one();
    let half = q(1, 2);
    harmonic_partial(&one, n) + harmonic_partial(&one, n + big_n)
        - harmonic_partial(&half, n)
        - harmonic_partial(&half, n + big_n)
}

/// `Γ(x2/2) = r · √π^p` with `p ∈ {0, 1}`.
pub fn gamma_half(x2: i64) -> (Q, i32) {
    assert!(x2 > 0, "gamma at nonpositive argument");
    if x2 % 2 == 0 {
        (fact(x2 / 2 - 1), 0)
    } else {
        (poch(q(1, 2), (x2 - 1) / 2), 1)
    }
}

/// Leading exponent and coefficient at `t -> 0` of the `nfold`-fold integral, from the
/// Selberg evaluation. Odd exponents are absolute (half-integers for odd `N`).
pub fn selberg_leading(nfold: i64, big_n: i64) -> Result<(Q, Q)> {
    if nfold < 2 || big_n < 0 {
        return Err(Error::Domain(format!("selberg_leading({nfold}, {big_n})")));
    }
    let mut num: Vec<i64> = Vec::new();
    let mut den: Vec<i64> = Vec::new();
    let n = nfold / 2;
    let (exponent, mut coeff, mut pi2) = if nfold % 2 == 0 {
        num.extend([2 * big_n + 2 * n + 1, 2 * n + 1]);
        den.extend([2 * big_n + 1, 1]);
        for j in 0..n {
            for _ in 0..2 {
                num.extend([2 * big_n + 2 * j + 1, 2 * j + 1, 2 * j + 4]);
                den.push(2 * big_n + 2 * n + 2 * j + 2);
            }
        }
        (qi(n * (big_n + n)), (fact(n) * fact(n)).recip(), -4 * n as i32)
    } else {
        num.extend([2 * big_n + 1, 1]);
        den.push(2 * big_n + 2 * n + 2);
        for j in 0..n {
            for _ in 0..2 {
                num.extend([2 * big_n + 2 * j + 3, 2 * j + 3, 2 * j + 4]);
                den.push(2 * big_n + 2 * n + 2 * j + 4);
            }
        }
        (qi(big_n) * (qi(n) + q(1, 2)) + qi(n * (n + 1)), fact(n).recip(), -(4 * n as i32 + 2))
    };
    for x in num {
        let (g, p) = gamma_half(x);
        coeff *= g;
        pi2 += p;
    }
    for x in den {
        let (g, p) = gamma_half(x);
        coeff /= g;
        pi2 -= p;
    }
    if pi2 != 0 {
        return Err(Error::Domain(format!("residual sqrt(pi) power {pi2}")));
    }
    Ok((exponent, coeff))
}

/// Memoized sequence values for one `N`; safe to share between threads.
pub struct SeqContext {
    pub big_n: i64,
    a: Mutex<HashMap<i64, Q>>,
    b: Mutex<Vec<Q>>,
    k: Mutex<HashMap<i64, Q>>,
}

impl SeqContext {
    pub fn new(big_n: i64) -> Self {
        SeqContext { big_n, a: Mutex::new(HashMap::new()), b: Mutex::new(vec![Q::one()]), k: Mutex::new(HashMap::new()) }
    }

    pub fn a(&self, n: i64) -> Result<Q> {
        if let Some(v) = self.a.lock().unwrap().get(&n) {
            return Ok(v.clone());
        }
        let v = a_coeff(self.big_n, n)?;
        self.a.lock().unwrap().insert(n, v.clone());
        Ok(v)
    }

    /// `b_n(N)` via the term ratio `(n+1/2)(n+N+1/2)/((n+N+1)(n+1))`.
    pub fn b(&self, n: i64) -> Q {
        let mut b = self.b.lock().unwrap();
        while b.len() as i64 <= n {
            let m = b.len() as i64 - 1;
            let r = (qi(m) + q(1, 2)) * (qi(m + self.big_n) + q(1, 2)) / (qi(m + self.big_n + 1) * qi(m + 1));
            let next = b[m as usize].clone() * r;
            b.push(next);
        }
        b[n as usize].clone()
    }

    pub fn k(&self, n: i64) -> Q {
        if let Some(v) = self.k.lock().unwrap().get(&n) {
            return v.clone();
        }
        let v = k_coeff(self.big_n, n);
        self.k.lock().unwrap().insert(n, v.clone());
        v
    }

    pub fn lambda(&self) -> Q {
        lambda(self.big_n)
    }

    pub fn beta(&self) -> Result<Q> {
        beta(self.big_n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_cases() {
        assert_eq!(pochhammer(&q(3, 7), 0).unwrap(), Q::one());
        assert_eq!(pochhammer(&q(1, 2), 2).unwrap(), q(3, 4));
        assert_eq!(pochhammer(&qi(-1), 2).unwrap(), Q::zero());
        assert_eq!(pochhammer(&q(-3, 2), 4).unwrap(), q(-3, 2) * q(-1, 2) * q(1, 2) * q(3, 2));
        assert!(pochhammer(&qi(1), -1).is_err());
    }

    #[test]
    fn constants() {
        assert_eq!(lambda(0), Q::one());
        assert_eq!(lambda(2), q(3, 8));
        assert_eq!(beta(1).unwrap(), q(9, 8));
        assert!(beta(0).is_err());
    }

    #[test]
    fn coefficient_families() {
        for n in 0..6 {
            assert_eq!(a_coeff(n, 0).unwrap(), Q::one());
        }
        assert_eq!(a_coeff(2, 1).unwrap(), q(3, 4));
        assert!(a_coeff(1, 1).is_err());
        assert_eq!(b_coeff(5, 0), Q::one());
        assert_eq!(b_coeff(0, 1), q(1, 4));
        assert_eq!(b_coeff(1, 1), q(3, 8));
        assert_eq!(harmonic_partial(&Q::one(), 0), Q::zero());
        assert_eq!(harmonic_partial(&Q::one(), 2), q(3, 2));
        assert_eq!(harmonic_partial(&q(1, 2), 1), qi(2));
        assert_eq!(k_coeff(0, 0), Q::zero());
        assert_eq!(k_coeff(1, 0), qi(-1));
        assert_eq!(k_coeff(0, 1), qi(-2));
    }

    #[test]
    fn memo_matches_closed_form() {
        let ctx = SeqContext::new(3);
        for n in 0..20 {
            assert_eq!(ctx.b(n), b_coeff(3, n));
        }
        for n in 0..3 {
            assert_eq!(ctx.a(n).unwrap(), a_coeff(3, n).unwrap());
        }
    }

    #[test]
    fn selberg_specializations() {
        assert_eq!(selberg_leading(2, 1).unwrap(), (qi(2), q(3, 64)));
        for n in 0..=12 {
            let (e, c) = selberg_leading(2, n).unwrap();
            assert_eq!(e, qi(n + 1));
            assert_eq!(c, lambda(n + 1) * lambda(n + 1) / qi(2 * n + 1));
            let (e, c) = selberg_leading(3, n).unwrap();
            assert_eq!(e, q(3 * n + 4, 2));
            assert_eq!(c, num::pow(lambda(n + 1), 3) / qi(2 * (2 * n + 1) * (n + 2) * (n + 2)));
        }
    }
}
