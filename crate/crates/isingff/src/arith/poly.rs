use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::rational::{fmt_q, qi, Q};

/// Dense univariate polynomial in `t`; `c[k]` is the coefficient of `t^k`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Q>,
}

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn constant(x: Q) -> Self {
        Poly::new(vec![x])
    }

    pub fn t() -> Self {
        Poly::monomial(Q::one(), 1)
    }

    pub fn monomial(x: Q, k: usize) -> Self {
        let mut c = vec![Q::zero(); k + 1];
        c[k] = x;
        Poly::new(c)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| qi(x)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.c.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn lead(&self) -> Q {
        self.c.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, x: &Q) -> Self {
        if x.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|a| a * x).collect() }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![Q::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Divide by `t^k`; the low coefficients must vanish.
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(self.c.iter().take(k).all(|x| x.is_zero()));
        Poly::new(self.c.iter().skip(k).cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.c.iter().enumerate().skip(1).map(|(k, a)| a * qi(k as i64)).collect())
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.c.iter().rev().fold(Q::zero(), |acc, a| acc * x + a)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Poly::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.c.len() - 1;
        let inv = d.lead().recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut qc = vec![Q::zero(); r.len() - dd];
        for i in (0..qc.len()).rev() {
            let f = &r[i + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[i + j] -= &f * b;
            }
            qc[i] = f;
        }
        r.truncate(dd);
        (Poly::new(qc), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (va, vb) = (self.valuation().unwrap(), other.valuation().unwrap());
        let v = va.min(vb);
        let (a, b) = (self.unshift(va), other.unshift(vb));
        let core = if a.c.len() == 1 || b.c.len() == 1 || modular_coprime(&a, &b) {
            Poly::one()
        } else {
            primitive_gcd(a, b)
        };
        core.shift(v)
    }

    /// `t^d p(1/t)` for `d >= deg p`.
    pub fn reflect(&self, d: usize) -> Poly {
        let mut c = vec![Q::zero(); d + 1];
        for (k, a) in self.c.iter().enumerate() {
            c[d - k] = a.clone();
        }
        Poly::new(c)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denom_lcm(&self) -> num::BigInt {
        use num::Integer;
        self.c.iter().fold(num::BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Integer coefficients with unit content and positive leading term.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        let c = if self.lead() < Q::zero() { -c } else { c };
        self.scale(&c.recip())
    }

    /// Gcd of the numerators after clearing denominators.
    pub fn content(&self) -> Q {
        use num::Integer;
        let l = self.denom_lcm();
        let g = self
            .c
            .iter()
            .fold(num::BigInt::zero(), |acc, x| acc.gcd(&(x * Q::from_integer(l.clone())).to_integer()));
        if g.is_zero() {
            Q::one()
        } else {
            Q::new(g, l)
        }
    }
}

/// Euclid on primitive integer remainders, which keeps coefficient growth in check.
fn primitive_gcd(a: Poly, b: Poly) -> Poly {
    let (mut a, mut b) = (a.primitive(), b.primitive());
    if a.c.len() < b.c.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = if r.is_zero() { r } else { r.primitive() };
    }
    a.monic()
}

const PRIME: u64 = 2_147_483_647;

fn mod_p(x: &Q) -> Option<u64> {
    use num::ToPrimitive;
    let p = num::BigInt::from(PRIME);
    let n = (x.numer() % &p + &p) % &p;
    let d = (x.denom() % &p).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(n.to_u64()? * pow_mod(d, PRIME - 2) % PRIME)
}

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    r
}

/// Sufficient test for a trivial gcd: the images modulo a prime have a constant gcd and the
/// leading coefficients survive the reduction.
fn modular_coprime(a: &Poly, b: &Poly) -> bool {
    let red = |p: &Poly| p.c.iter().map(mod_p).collect::<Option<Vec<u64>>>();
    let (Some(mut x), Some(mut y)) = (red(a), red(b)) else { return false };
    if x.last() == Some(&0) || y.last() == Some(&0) {
        return false;
    }
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !y.is_empty() {
        let inv = pow_mod(*y.last().unwrap(), PRIME - 2);
        while x.len() >= y.len() {
            let f = x.last().unwrap() * inv % PRIME;
            let off = x.len() - y.len();
            for (j, c) in y.iter().enumerate() {
                x[off + j] = (x[off + j] + PRIME - f * c % PRIME) % PRIME;
            }
            trim(&mut x);
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a < &Q::zero();
            let mag = if neg { -a } else { a.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{}", fmt_q(&mag))?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}t", if unit { "" } else { "*" })?,
                _ => write!(f, "{}t^{k}", if unit { "" } else { "*" })?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, o: Poly) -> Poly {
                (&self).$f(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
