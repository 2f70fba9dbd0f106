use std::fmt;

use num::{One, Zero};

use super::poly::Poly;
use super::rational::{fmt_q, qi, Q};

/// Truncated Laurent series `Σ coeffs[i] t^(valuation+i)`, exact below `t^order`.
///
/// `coeffs.len() == order - valuation` and the first coefficient is nonzero; the zero
/// series has no coefficients and `valuation == order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    valuation: i64,
    coeffs: Vec<Q>,
    order: i64,
}

impl Series {
    /// Coefficients start at `t^start`; entries at or beyond `order` are dropped.
    pub fn new(start: i64, mut coeffs: Vec<Q>, order: i64) -> Self {
        let keep = (order - start).max(0) as usize;
        coeffs.truncate(keep);
        coeffs.resize(keep, Q::zero());
        match coeffs.iter().position(|x| !x.is_zero()) {
            None => Series::zero(order),
            Some(lead) => {
                coeffs.drain(..lead);
                Series { valuation: start + lead as i64, coeffs, order }
            }
        }
    }

    pub fn zero(order: i64) -> Self {
        Series { valuation: order, coeffs: vec![], order }
    }

    pub fn one(order: i64) -> Self {
        Series::monomial(Q::one(), 0, order)
    }

    pub fn monomial(c: Q, k: i64, order: i64) -> Self {
        Series::new(k, vec![c], order)
    }

    pub fn from_poly(p: &Poly, order: i64) -> Self {
        Series::new(0, p.coeffs().to_vec(), order)
    }

    pub fn from_fn(start: i64, order: i64, f: impl Fn(i64) -> Q) -> Self {
        Series::new(start, (start..order).map(f).collect(), order)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k`; panics when `k` is at or above the truncation order.
    pub fn coeff(&self, k: i64) -> Q {
        assert!(k < self.order, "coefficient t^{k} beyond order {}", self.order);
        if k < self.valuation {
            Q::zero()
        } else {
            self.coeffs[(k - self.valuation) as usize].clone()
        }
    }

    /// Coefficients of `t^lo .. t^(hi-1)`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<Q> {
        (lo..hi).map(|k| self.coeff(k)).collect()
    }

    /// Lowest nonzero power and its coefficient.
    pub fn leading(&self) -> Option<(i64, Q)> {
        self.coeffs.first().map(|c| (self.valuation, c.clone()))
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        Series::new(self.valuation, self.coeffs.clone(), order)
    }

    pub fn scale(&self, x: &Q) -> Self {
        if x.is_zero() {
            return Series::zero(self.order);
        }
        Series { valuation: self.valuation, coeffs: self.coeffs.iter().map(|c| c * x).collect(), order: self.order }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Q::one())
    }

    /// Multiply by `t^k` (any sign).
    pub fn shift(&self, k: i64) -> Self {
        Series { valuation: self.valuation + k, coeffs: self.coeffs.clone(), order: self.order + k }
    }

    pub fn add(&self, o: &Series) -> Self {
        let order = self.order.min(o.order);
        let start = self.valuation.min(o.valuation).min(order);
        let mut c = vec![Q::zero(); (order - start) as usize];
        for s in [self, o] {
            for (i, x) in s.coeffs.iter().enumerate() {
                let k = s.valuation + i as i64;
                if k < order {
                    c[(k - start) as usize] += x;
                }
            }
        }
        Series::new(start, c, order)
    }

    pub fn sub(&self, o: &Series) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Series) -> Self {
        let order = (self.order + o.valuation).min(o.order + self.valuation);
        let start = self.valuation + o.valuation;
        if self.is_zero() || o.is_zero() || order <= start {
            return Series::zero(order);
        }
        let n = (order - start) as usize;
        let mut c = vec![Q::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                c[i + j] += a * b;
            }
        }
        Series::new(start, c, order)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Series::one(self.order - self.valuation);
        }
        let mut r = self.clone();
        for _ in 1..e {
            r = r.mul(self);
        }
        r
    }

    pub fn derivative(&self) -> Self {
        let c = self.coeffs.iter().enumerate().map(|(i, x)| x * qi(self.valuation + i as i64)).collect();
        Series::new(self.valuation - 1, c, self.order - 1)
    }

    /// Multiplicative inverse; `None` for the zero series.
    pub fn inverse(&self) -> Option<Self> {
        let v = self.valuation;
        let c0 = self.coeffs.first()?.recip();
        let n = self.coeffs.len();
        let mut r: Vec<Q> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                r.push(c0.clone());
                continue;
            }
            let mut s = Q::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &r[k - j];
            }
            r.push(-s * &c0);
        }
        Some(Series::new(-v, r, n as i64 - v))
    }

    pub fn div(&self, o: &Series) -> Option<Self> {
        Some(self.mul(&o.inverse()?))
    }

    /// The polynomial `Σ c_k t^k` over `0 <= k < order`; negative powers must vanish.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.valuation < 0 && !self.is_zero() {
            return None;
        }
        Some(Poly::new((0..self.order.max(0)).map(|k| self.coeff(k)).collect()))
    }

    /// Exact zero through `t^(k-1)`.
    pub fn vanishes_below(&self, k: i64) -> bool {
        self.order >= k && self.valuation >= k
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.valuation + i as i64;
            let neg = c < &Q::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", fmt_q(&mag))?,
                1 => write!(f, "{} t", fmt_q(&mag))?,
                _ => write!(f, "{} t^{k}", fmt_q(&mag))?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(t^{})", self.order)
    }
}
