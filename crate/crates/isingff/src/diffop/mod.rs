//! Linear differential operators `Σ r_k(t) D_t^k` with rational-function coefficients.

pub mod catalog;
pub mod coupled;
pub mod identities;
pub mod odes;
pub mod recur;
pub mod sym;

use std::fmt;

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::json::PolyJson;
use crate::arith::rational::{fmt_q, qi, Q};
use crate::arith::{LogSeries, Poly, RatFunc, Series};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<RatFunc>,
}

impl DiffOp {
    /// `coeffs[k]` multiplies `D^k`; trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(RatFunc::zero());
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> Self {
        DiffOp::new(vec![])
    }

    pub fn identity() -> Self {
        DiffOp::mul_by(RatFunc::one())
    }

    /// Multiplication by `r`.
    pub fn mul_by(r: RatFunc) -> Self {
        DiffOp::new(vec![r])
    }

    pub fn d() -> Self {
        DiffOp::new(vec![RatFunc::zero(), RatFunc::one()])
    }

    /// `D - r`.
    pub fn d_minus(r: RatFunc) -> Self {
        DiffOp::new(vec![r.neg(), RatFunc::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RatFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn leading(&self) -> &RatFunc {
        self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(o.coeffs.len());
        DiffOp::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &DiffOp) -> DiffOp {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn scale(&self, x: &Q) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|c| c.scale(x)).collect())
    }

    /// `r · self`.
    pub fn lmul(&self, r: &RatFunc) -> DiffOp {
        DiffOp::new(self.coeffs.iter().map(|c| c.mul(r)).collect())
    }

    /// `D ∘ self`.
    fn d_compose(&self) -> DiffOp {
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] = out[k].add(&c.derivative());
            out[k + 1] = out[k + 1].add(c);
        }
        DiffOp::new(out)
    }

    /// `self ∘ b`: apply `b`, then `self`.
    pub fn compose(&self, b: &DiffOp) -> DiffOp {
        let mut acc = DiffOp::zero();
        let mut dk = b.clone();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                dk = dk.d_compose();
            }
            if !a.is_zero() {
                acc = acc.add(&dk.lmul(a));
            }
        }
        acc
    }

    pub fn pow(&self, e: u32) -> DiffOp {
        (0..e).fold(DiffOp::identity(), |acc, _| self.compose(&acc))
    }

    /// `t^(-α) ∘ self ∘ t^α`, using `t^(-α) D t^α = D + α/t`; `α` may be fractional.
    pub fn conj_tpow(&self, alpha: &Q) -> DiffOp {
        let shifted = DiffOp::new(vec![RatFunc::t_pow(-1).scale(alpha), RatFunc::one()]);
        let mut acc = DiffOp::zero();
        let mut pk = DiffOp::identity();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                pk = shifted.compose(&pk);
            }
            acc = acc.add(&pk.lmul(a));
        }
        acc
    }

    /// The operator in `s = 1/t`: `D_t = -s^2 D_s`, coefficients `r_k(1/s)`.
    pub fn invert_arg(&self) -> DiffOp {
        let dt = DiffOp::new(vec![RatFunc::zero(), RatFunc::t_pow(2).neg()]);
        let mut acc = DiffOp::zero();
        let mut pk = DiffOp::identity();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                pk = dt.compose(&pk);
            }
            acc = acc.add(&pk.lmul(&a.invert_arg()));
        }
        acc
    }

    /// Left multiple with coprime integer polynomial coefficients and positive leading term.
    pub fn normalize(&self) -> DiffOp {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = Poly::one();
        for c in &self.coeffs {
            let g = den.gcd(c.den());
            den = (&den * c.den()).div_rem(&g).0;
        }
        let polys: Vec<Poly> = self.coeffs.iter().map(|c| (c.num() * &den).div_rem(c.den()).0).collect();
        let g = polys.iter().filter(|p| !p.is_zero()).fold(Poly::zero(), |acc, p| if acc.is_zero() { p.monic() } else { acc.gcd(p) });
        let polys: Vec<Poly> = polys.iter().map(|p| p.div_rem(&g).0).collect();
        let content = polys.iter().filter(|p| !p.is_zero()).fold(Q::zero(), |acc, p| gcd_q(&acc, &p.content()));
        let lead = polys.last().unwrap().lead();
        let s = if lead.is_negative() { -content.recip() } else { content.recip() };
        DiffOp::new(polys.iter().map(|p| RatFunc::poly(p.scale(&s))).collect())
    }

    /// `(q, r)` with `self = q ∘ b + r` and `ord r < ord b`.
    pub fn right_div(&self, b: &DiffOp) -> (DiffOp, DiffOp) {
        let mut r = self.clone();
        let mut q = DiffOp::zero();
        let m = b.order();
        while !r.is_zero() && r.order() >= m {
            let k = r.order() - m;
            let c = r.leading().div(b.leading());
            let mut mono = vec![RatFunc::zero(); k + 1];
            mono[k] = c;
            let mono = DiffOp::new(mono);
            r = r.sub(&mono.compose(b));
            q = q.add(&mono);
        }
        (q, r)
    }

    /// `Σ r_k · x^(k)`. Pole orders of the coefficients are absorbed by a valuation shift.
    pub fn apply(&self, x: &LogSeries) -> Result<LogSeries> {
        let mut acc: Option<LogSeries> = None;
        let mut dx = x.clone();
        for (k, r) in self.coeffs.iter().enumerate() {
            if k > 0 {
                dx = dx.derivative();
            }
            if r.is_zero() {
                continue;
            }
            let v = r.valuation().unwrap();
            let xv = dx.channels().iter().map(|c| c.valuation()).min().unwrap().min(dx.order());
            let rs = r.to_series(v + (dx.order() - xv).max(0));
            let term = dx.mul_series(&rs);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        let out = acc.unwrap_or_else(|| LogSeries::analytic_only(Series::zero(x.order())));
        let xv = x.channels().iter().map(|c| c.valuation()).min().unwrap().min(x.order());
        if out.order() <= xv - self.order() as i64 + self.min_valuation() {
            return Err(Error::IllPosed(format!("no exact coefficients left below t^{}", out.order())));
        }
        Ok(out)
    }

    pub fn apply_series(&self, x: &Series) -> Result<Series> {
        Ok(self.apply(&LogSeries::analytic_only(x.clone()))?.analytic().clone())
    }

    fn min_valuation(&self) -> i64 {
        self.coeffs.iter().filter_map(|c| c.valuation()).min().unwrap_or(0)
    }

    /// Apply to a polynomial exactly, returning a rational function.
    pub fn apply_ratfunc(&self, p: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        let mut d = p.clone();
        for (k, r) in self.coeffs.iter().enumerate() {
            if k > 0 {
                d = d.derivative();
            }
            acc = acc.add(&r.mul(&d));
        }
        acc
    }

    /// Indicial polynomial at `t = 0` in the exponent variable `e`.
    pub fn indicial_poly(&self) -> Poly {
        let shift = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.valuation().map(|v| v - k as i64))
            .min()
            .unwrap_or(0);
        let mut acc = Poly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let Some(v) = c.valuation() else { continue };
            if v - k as i64 != shift {
                continue;
            }
            let lc = c.to_series(v + 1).coeff(v);
            let mut falling = Poly::one();
            for j in 0..k {
                falling = &falling * &Poly::new(vec![qi(-(j as i64)), Q::one()]);
            }
            acc = &acc + &falling.scale(&lc);
        }
        acc
    }

    /// Rational indicial exponents at `t = 0` with multiplicity, ascending, plus the degree of
    /// the unresolved (irrational) remainder.
    pub fn indicial_exponents(&self) -> (Vec<Q>, usize) {
        rational_roots(&self.indicial_poly())
    }
}

fn gcd_q(a: &Q, b: &Q) -> Q {
    use num::Integer;
    if a.is_zero() {
        return b.abs();
    }
    Q::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

/// Rational roots with multiplicity via the rational root theorem on the primitive integer form.
pub fn rational_roots(p: &Poly) -> (Vec<Q>, usize) {
    use num::{BigInt, Integer};
    let mut rest = p.clone();
    let mut roots = Vec::new();
    if rest.is_zero() {
        return (roots, 0);
    }
    while rest.coeff(0).is_zero() && rest.degree().unwrap_or(0) > 0 {
        roots.push(Q::zero());
        rest = rest.unshift(1);
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = n.abs();
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if n.is_multiple_of(&d) {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out
    };
    loop {
        let deg = rest.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        rest = rest.primitive();
        let ints: Vec<BigInt> = rest.coeffs().iter().map(|c| c.to_integer()).collect();
        let (a0, an) = (ints[0].clone(), ints[deg].clone());
        let mut found = None;
        'outer: for pp in divisors(&a0) {
            for qq in divisors(&an) {
                for s in [1, -1] {
                    let cand = Q::new(&pp * BigInt::from(s), qq.clone());
                    if rest.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'outer;
                    }
                }
            }
        }
        let Some(r) = found else { break };
        rest = rest.div_rem(&Poly::new(vec![-r.clone(), Q::one()])).0;
        roots.push(r);
    }
    roots.sort();
    (roots, rest.degree().unwrap_or(0))
}

#[derive(Serialize)]
pub struct DiffOpJson {
    pub order: usize,
    pub coeffs: Vec<(PolyJson, PolyJson)>,
}

impl From<&DiffOp> for DiffOpJson {
    fn from(op: &DiffOp) -> Self {
        DiffOpJson {
            order: op.order(),
            coeffs: op.coeffs.iter().map(|c| (PolyJson::from(c.num()), PolyJson::from(c.den()))).collect(),
        }
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*D")?,
                _ => write!(f, "({c})*D^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exponents as strings, for reports.
pub fn fmt_exponents(e: &[Q]) -> Vec<String> {
    e.iter().map(fmt_q).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    fn t() -> RatFunc {
        RatFunc::t_pow(1)
    }

    #[test]
    fn d_of_t_squared() {
        let x = LogSeries::analytic_only(Series::monomial(qi(1), 2, 10));
        let y = DiffOp::d().apply(&x).unwrap();
        assert_eq!(y.analytic(), &Series::monomial(qi(2), 1, 9));
    }

    #[test]
    fn commutator_is_identity() {
        let tm = DiffOp::mul_by(t());
        let c = DiffOp::d().compose(&tm).sub(&tm.compose(&DiffOp::d()));
        assert_eq!(c, DiffOp::identity());
        let l = DiffOp::new(vec![t(), RatFunc::t_pow(-2), RatFunc::one()]);
        assert_eq!(l.compose(&DiffOp::identity()), l);
    }

    #[test]
    fn right_division_round_trip() {
        let a = DiffOp::new(vec![t(), RatFunc::t_pow(-1), t(), RatFunc::one()]);
        let b = DiffOp::new(vec![RatFunc::one(), t(), RatFunc::one()]);
        let p = a.compose(&b);
        let (qq, r) = p.right_div(&b);
        assert!(r.is_zero());
        assert_eq!(qq, a);
    }

    #[test]
    fn euler_exponents() {
        // t^2 D^2 - 2 t D + 2 has exponents 1, 2
        let op = DiffOp::new(vec![RatFunc::from(2), t().scale(&qi(-2)), RatFunc::t_pow(2)]);
        assert_eq!(op.indicial_exponents(), (vec![qi(1), qi(2)], 0));
        let half = DiffOp::new(vec![RatFunc::constant(q(1, 4)), RatFunc::zero(), RatFunc::t_pow(2)]);
        assert_eq!(half.indicial_exponents(), (vec![q(1, 2), q(1, 2)], 0));
    }

    #[test]
    fn conjugation_matches_composition() {
        let op = DiffOp::new(vec![t(), RatFunc::t_pow(-1), RatFunc::one()]);
        let a = qi(3);
        let lhs = DiffOp::mul_by(RatFunc::t_pow(3)).compose(&op.conj_tpow(&a));
        let rhs = op.compose(&DiffOp::mul_by(RatFunc::t_pow(3)));
        assert_eq!(lhs, rhs);
    }
}
