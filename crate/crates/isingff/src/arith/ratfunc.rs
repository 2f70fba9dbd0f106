use std::fmt;

use num::{One, Zero};

use super::poly::Poly;
use super::rational::{qi, Q};
use super::series::Series;

/// Reduced rational function `num/den` with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.degree() == Some(0) { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let l = d.lead();
        if !l.is_one() {
            let inv = l.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Q::one())
    }

    pub fn constant(x: Q) -> Self {
        RatFunc { num: Poly::constant(x), den: Poly::one() }
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            RatFunc::poly(Poly::monomial(Q::one(), k as usize))
        } else {
            RatFunc { num: Poly::one(), den: Poly::monomial(Q::one(), (-k) as usize) }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::new(&self.num + &o.num, self.den.clone());
        }
        RatFunc::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel before multiplying
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).0;
        let d2 = o.den.div_rem(&g1).0;
        let n2 = o.num.div_rem(&g2).0;
        let d1 = self.den.div_rem(&g2).0;
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let l = den.lead().recip();
        RatFunc { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn scale(&self, x: &Q) -> RatFunc {
        if x.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(x), den: self.den.clone() }
    }

    pub fn inv(&self) -> RatFunc {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    pub fn derivative(&self) -> RatFunc {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RatFunc::new(n, &self.den * &self.den)
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut r = RatFunc::one();
        for _ in 0..e.abs() {
            r = r.mul(&base);
        }
        r
    }

    /// Order of vanishing at `t = 0` (negative for a pole).
    pub fn valuation(&self) -> Option<i64> {
        Some(self.num.valuation()? as i64 - self.den.valuation().unwrap() as i64)
    }

    /// Laurent expansion at `t = 0` through `t^(order-1)`.
    pub fn to_series(&self, order: i64) -> Series {
        let Some(v) = self.valuation() else { return Series::zero(order) };
        let nv = self.num.valuation().unwrap();
        let dv = self.den.valuation().unwrap();
        let n = self.num.unshift(nv);
        let d = self.den.unshift(dv);
        let rel = order - v;
        if rel <= 0 {
            return Series::zero(order);
        }
        let ns = Series::from_poly(&n, rel);
        let ds = Series::from_poly(&d, rel);
        ns.div(&ds).expect("unit denominator").shift(v)
    }

    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// `r(1/t)`.
    pub fn invert_arg(&self) -> RatFunc {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let n = self.num.reflect(dn);
        let d = self.den.reflect(dd);
        let k = dd as i64 - dn as i64;
        RatFunc::new(n, d).mul(&RatFunc::t_pow(k))
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(x: i64) -> Self {
        RatFunc::constant(qi(x))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.num.scale(&self.den.lead().recip()))
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
