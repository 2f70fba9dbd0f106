use num::{One, Zero};

use super::c2::{c2_poly, k2_0};
use crate::arith::linalg::solve_exact;
use crate::arith::rational::{q, qi, Q};
use crate::arith::{LogSeries, PalinPoly, Poly, Series};
use crate::error::{Error, Result};
use crate::hyper::{f_series, u2_logseries};
use crate::seq;

/// Constructed `f^(4)` layer for one `N`.
#[derive(Clone, Debug)]
pub struct C4Solution {
    pub polys: Vec<PalinPoly>,
    pub kbar: Q,
    pub k0: Q,
    pub k1: Q,
    pub middle: Q,
    /// Log channels of every truncated expression vanish through its known order.
    pub log_free: bool,
}

struct Parts {
    u: LogSeries,
    v: LogSeries,
    fnn: LogSeries,
    fm: LogSeries,
    c: [LogSeries; 3],
    b: Q,
    lam2: Q,
    four_over_n: Q,
    order: i64,
}

fn prod(xs: &[&LogSeries]) -> LogSeries {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = acc.mul(x);
    }
    acc
}

impl Parts {
    fn tp(&self, k: i64) -> LogSeries {
        LogSeries::from(Series::monomial(Q::one(), k, self.order + k))
    }

    fn vp(&self, e: u32) -> LogSeries {
        self.v.pow(e)
    }

    fn up(&self, e: u32) -> LogSeries {
        self.u.pow(e)
    }

    /// `(constant part, K̄ part, known order)` of the truncated expression for `C^(4)_m`.
    fn expression(&self, m: usize, big_n: i64) -> (LogSeries, LogSeries, i64) {
        let (b, l2, f) = (&self.b, &self.lam2, &self.four_over_n);
        let b2 = b * b;
        let b3 = &b2 * b;
        let b4 = &b3 * b;
        let two3 = q(2, 3);
        let (c0, c1, c2) = (&self.c[0], &self.c[1], &self.c[2]);
        let (fnn, fm) = (&self.fnn, &self.fm);
        let (u, v) = (&self.u, &self.v);
        match m {
            0 => {
                let k = self.vp(4).shift(-4).scale(&-Q::one()).sub(&prod(&[c0, &self.vp(2)]).shift(-2).scale(f));
                let br = prod(&[c0, &self.vp(2)])
                    .shift(-2)
                    .sub(&prod(&[c0, &self.vp(2), u, fm]).shift(-2).scale(&(qi(2) * b)))
                    .sub(&prod(&[c1, &self.vp(3), fm]).shift(-3));
                let c = br.scale(&two3).add(&prod(&[&self.vp(3), &self.tp(big_n + 2), fm]).shift(-4).scale(&(l2 * b)));
                (c, k, 2 * big_n + 1)
            }
            1 => {
                let k = prod(&[&self.vp(3), u]).shift(-3).scale(&(qi(4) * b)).add(
                    &prod(&[c0, v, u])
                        .shift(-1)
                        .scale(&(qi(2) * b))
                        .sub(&prod(&[c1, &self.vp(2)]).shift(-2))
                        .scale(f),
                );
                let br = prod(&[c0, v, &self.up(2), fm])
                    .shift(-1)
                    .scale(&(qi(6) * &b2))
                    .add(&prod(&[c1, &self.vp(3), fnn]).shift(-3).scale(&qi(2)))
                    .sub(&prod(&[c2, &self.vp(3), fm]).shift(-3).scale(&qi(2)));
                let tail = prod(&[&self.vp(3), &self.tp(big_n + 1), fnn])
                    .shift(-3)
                    .scale(b)
                    .add(&prod(&[&self.vp(2), u, &self.tp(big_n + 2), fm]).shift(-3).scale(&(qi(3) * &b2)));
                (br.scale(&two3).sub(&tail.scale(l2)), k, 2 * big_n + 1)
            }
            2 => {
                let br = prod(&[c0, &self.up(2)])
                    .scale(&b2)
                    .sub(&prod(&[c1, v, u]).shift(-1).scale(&(qi(2) * b)))
                    .add(&prod(&[c2, &self.vp(2)]).shift(-2));
                let k = prod(&[&self.vp(2), &self.up(2)]).shift(-2).scale(&(qi(-6) * &b2)).sub(&br.scale(f));
                let inner = prod(&[c0, &self.up(3), fm])
                    .scale(&(qi(-6) * &b3))
                    .sub(&prod(&[c1, v, u]).shift(-1).scale(&(qi(9) * b)))
                    .add(&prod(&[c2, &self.vp(3), fnn]).shift(-3).scale(&qi(6)));
                let tail = prod(&[&self.vp(2), u, &self.tp(big_n + 1), fnn])
                    .shift(-2)
                    .scale(&(qi(3) * &b2))
                    .add(&prod(&[v, &self.up(2), &self.tp(big_n + 2), fm]).shift(-2).scale(&(qi(3) * &b3)));
                let c = br.scale(&qi(-2)).add(&inner.scale(&two3)).add(&tail.scale(l2));
                (c, k, 2 * big_n + 1)
            }
            3 => {
                let k = prod(&[v, &self.up(3)]).shift(-1).scale(&(qi(4) * &b3)).sub(
                    &prod(&[c1, &self.up(2)])
                        .scale(&b2)
                        .sub(&prod(&[c2, v, u]).shift(-1).scale(&(qi(2) * b)))
                        .scale(f),
                );
                let inner = prod(&[c0, &self.up(3), fnn])
                    .scale(&(qi(2) * &b3))
                    .sub(&prod(&[c1, &self.up(3), fm]).scale(&(qi(2) * &b3)))
                    .sub(&prod(&[c2, &self.vp(2), u, fnn]).shift(-2).scale(&(qi(6) * b)));
                let tail = prod(&[v, &self.up(2), &self.tp(big_n + 1), fnn])
                    .shift(-1)
                    .scale(&(qi(3) * &b3))
                    .add(&prod(&[&self.up(3), &self.tp(big_n + 2), fm]).shift(-1).scale(&b4));
                (inner.scale(&two3).sub(&tail.scale(l2)), k, 2 * big_n + 2)
            }
            _ => {
                let k = self.up(4).scale(&-b4.clone()).sub(&prod(&[c2, &self.up(2)]).scale(&(f * &b2)));
                let inner = prod(&[c1, &self.up(3), fnn])
                    .scale(&b3)
                    .add(&prod(&[c2, v, &self.up(2), fnn]).shift(-1).scale(&(qi(2) * &b2)))
                    .add(&prod(&[c2, &self.up(2)]).scale(&b2));
                let tail = prod(&[&self.up(3), &self.tp(big_n + 1), fnn]).scale(&(l2 * &b4));
                (inner.scale(&two3).add(&tail), k, 2 * big_n + 3)
            }
        }
    }
}

/// Assembled `f^(2)_{N,N}` from the constructed `C^(2)_m`.
pub fn assemble2_constructed(big_n: i64, order: i64) -> Result<Series> {
    let fnn = f_series(big_n, order);
    let fm = f_series(big_n + 1, order);
    let mut acc = Series::one(order).scale(&k2_0(big_n));
    for m in 0..3u32 {
        let p = c2_poly(big_n, m as i64)?;
        acc = acc.add(&Series::from_poly(&p.poly, order).mul(&fnn.pow(2 - m)).mul(&fm.pow(m)));
    }
    Ok(acc)
}

fn basis_term(p: &Poly, m: u32, fnn: &Series, fm: &Series, order: i64) -> Series {
    Series::from_poly(p, order).mul(&fnn.pow(4 - m)).mul(&fm.pow(m))
}

/// Build `C^(4)_m`, `K̄`, `K^(4)_0`, `K^(4)_1` and the middle coefficient of `C^(4)_2`.
pub fn c4_solve(big_n: i64) -> Result<C4Solution> {
    if big_n < 1 {
        return Err(Error::Domain("C^(4) construction needs N >= 1".into()));
    }
    let order = 2 * big_n + 10;
    let lam = seq::lambda(big_n);
    let cs = (0..3)
        .map(|m| Ok(LogSeries::from(Series::from_poly(&c2_poly(big_n, m)?.poly, order))))
        .collect::<Result<Vec<_>>>()?;
    let parts = Parts {
        u: u2_logseries(big_n, order)?,
        v: u2_logseries(big_n + 1, order)?,
        fnn: LogSeries::from(f_series(big_n, order)),
        fm: LogSeries::from(f_series(big_n + 1, order)),
        c: [cs[0].clone(), cs[1].clone(), cs[2].clone()],
        b: seq::beta(big_n)?,
        lam2: qi(big_n) * &lam * &lam / qi(3),
        four_over_n: q(4, big_n),
        order,
    };
    let mid_idx = 2 * big_n + 2;
    let mut const_polys = Vec::new();
    let mut kbar_polys = Vec::new();
    let mut exprs = Vec::new();
    for m in 0..5usize {
        let (c, k, known) = parts.expression(m, big_n);
        let center = 4 * big_n + 2 + m as i64;
        let fill = |s: &LogSeries| -> Result<Poly> {
            let mut known_c: Vec<Option<Q>> = vec![None; center as usize + 1];
            for j in 0..=known {
                known_c[j as usize] = Some(s.coeff(0, j));
            }
            if m == 2 {
                known_c[mid_idx as usize] = Some(Q::zero());
            }
            Ok(PalinPoly::complete(&known_c, center)?.poly)
        };
        const_polys.push(fill(&c)?);
        kbar_polys.push(fill(&k)?);
        exprs.push((c, k, known));
    }
    let ord = 2 * big_n + 5;
    let fnn = f_series(big_n, ord);
    let fm = f_series(big_n + 1, ord);
    let mut sc = Series::zero(ord);
    let mut sk = Series::zero(ord);
    for m in 0..5u32 {
        sc = sc.add(&basis_term(&const_polys[m as usize], m, &fnn, &fm, ord));
        sk = sk.add(&basis_term(&kbar_polys[m as usize], m, &fnn, &fm, ord));
    }
    let sx = basis_term(&Poly::monomial(Q::one(), mid_idx as usize), 2, &fnn, &fm, ord);
    let f2 = assemble2_constructed(big_n, ord)?;
    // unknowns: K̄, K0, K1, X
    let rows_n = 2 * big_n + 4;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..rows_n {
        let one = if j == 0 { Q::one() } else { Q::zero() };
        rows.push(vec![sk.coeff(j), one, f2.coeff(j), sx.coeff(j)]);
        rhs.push(-sc.coeff(j));
    }
    let sol = solve_exact(rows, rhs)?;
    let (kbar, k0, k1, x) = (sol[0].clone(), sol[1].clone(), sol[2].clone(), sol[3].clone());
    let mut polys = Vec::new();
    let mut log_free = true;
    for m in 0..5usize {
        let mut p = &const_polys[m] + &kbar_polys[m].scale(&kbar);
        if m == 2 {
            p = &p + &Poly::monomial(x.clone(), mid_idx as usize);
        }
        polys.push(PalinPoly::new(p, 4 * big_n + 2 + m as i64));
        let (c, k, known) = &exprs[m];
        let total = c.add(&k.scale(&kbar));
        log_free &= total.log_free_below(known + 1);
    }
    Ok(C4Solution { polys, kbar, k0, k1, middle: x, log_free })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_constants() {
        let s = c4_solve(1).unwrap();
        assert_eq!(s.k0, -q(1, 24));
        assert_eq!(s.k1, q(5, 6));
        assert_eq!(s.kbar, q(3, 8));
        assert_eq!(s.middle, q(3645, 2048));
        assert_eq!(s.polys[4].poly, Poly::from_ints(&[0, 0, 0, 0, 1, 4, 1]).scale(&q(2187, 32768)));
        for p in &s.polys {
            assert!(p.is_palindromic());
        }
    }
}

