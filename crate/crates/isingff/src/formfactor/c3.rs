use num::{One, Zero};

use super::c2::{c22, c2_poly, product_core};
use crate::arith::rational::{binomial, q, qi, Q};
use crate::arith::{PalinPoly, Series};
use crate::error::{Error, Result};
use crate::hyper::{f_series, u1_series, u2_logseries};
use crate::seq;

/// `A^(3)_m = (-1)^(m+1) (2/3) C(3,m) λ_N β_N^m`.
pub fn amplitude3(big_n: i64, m: i64) -> Result<Q> {
    let sign = if m % 2 == 0 { -Q::one() } else { Q::one() };
    Ok(sign * q(2, 3) * binomial(3, m) * seq::lambda(big_n) * num::pow(seq::beta(big_n)?, m as usize))
}

pub fn k3_0(big_n: i64) -> Q {
    q(3 * big_n + 1, 6)
}

/// Exponents `(a, b)` of `u2(N)^a u2(N+1)^b` in the core of `C^(3)_m`.
fn core_exponents(m: i64) -> (usize, usize) {
    match m {
        3 => (3, 0),
        2 => (2, 1),
        1 => (1, 2),
        _ => (0, 3),
    }
}

fn known_len(big_n: i64, m: i64) -> i64 {
    if m == 0 {
        big_n + 1
    } else {
        big_n
    }
}

/// `[t^(-N-4) u2(N)^a u2(N+1)^b u1(N)]` as a series.
pub fn c3_core_product(big_n: i64, m: i64) -> Result<Series> {
    if big_n < 1 || !(0..=3).contains(&m) {
        return Err(Error::Domain(format!("C^(3)_{m} at N={big_n}")));
    }
    let order = 2 * big_n + 10;
    let u = u2_logseries(big_n, order)?;
    let v = u2_logseries(big_n + 1, order)?;
    let (a, b) = core_exponents(m);
    let mut fs = vec![&u; a];
    fs.extend(vec![&v; b]);
    product_core(&fs, Some(&u1_series(big_n, order)), big_n + 4, known_len(big_n, m))
}

fn core_coeff(s: &Series, n: i64) -> Q {
    if n < 0 {
        Q::zero()
    } else {
        s.coeff(n)
    }
}

/// The closed-form middle core coefficient of `C^(3)_1` as displayed alongside the
/// quartic sums; kept as a claim under test.
pub fn c31_middle_claimed(big_n: i64) -> Result<Q> {
    let (l, b) = (seq::lambda(big_n), seq::beta(big_n)?);
    let n = qi(big_n);
    let c33 = c3_core_product(big_n, 3)?;
    let c32 = c3_core_product(big_n, 2)?;
    let c22v = c22(big_n, big_n - 1)?;
    Ok(&b * &l * &l / &n
        + &b * &l * (qi(big_n - 1) * core_coeff(&c32, big_n - 1) + qi(4) * c22v)
        - q(2, 3) * &b * &l / (&n * &n)
            * (qi(2 * big_n * big_n) * core_coeff(&c33, big_n - 2)
                + (&n * &n - q(1, 4)) * core_coeff(&c33, big_n - 1)))
}

/// The `A^(3)_m t^m` core part `C̄^(3)_m`, without the `C^(2)_m` admixture.
pub fn c3_bar_poly(big_n: i64, m: i64, middle: &Q) -> Result<PalinPoly> {
    let s = c3_core_product(big_n, m)?;
    let center = 2 * big_n + 1 - m;
    let mut core: Vec<Option<Q>> = vec![None; center.max(0) as usize + 1];
    for n in 0..known_len(big_n, m).min(center + 1) {
        core[n as usize] = Some(s.coeff(n));
    }
    if m == 1 {
        core[big_n as usize] = Some(middle.clone());
    }
    let core = PalinPoly::complete(&core, center)?.poly;
    let amp = amplitude3(big_n, m)?;
    Ok(PalinPoly::new(core.scale(&amp).shift(m as usize), 2 * big_n + 1 + m))
}

/// `C^(3)_m` with an explicit middle core coefficient for `m = 1`.
pub fn c3_poly_with_middle(big_n: i64, m: i64, middle: &Q) -> Result<PalinPoly> {
    let mut p = c3_bar_poly(big_n, m, middle)?.poly;
    if m < 3 {
        p = &p + &c2_poly(big_n, m)?.poly.scale(&(q(big_n - 1, big_n) * seq::lambda(big_n)));
    }
    Ok(PalinPoly::new(p, 2 * big_n + 1 + m))
}

/// Normalized `f^(3)/t^(N/2) = K λ F_N + Σ C_m F_N^(3-m) F_(N+1)^m`.
pub fn assemble3(big_n: i64, polys: &[PalinPoly], order: i64) -> Series {
    let fnn = f_series(big_n, order);
    let fn1 = f_series(big_n + 1, order);
    let mut acc = fnn.scale(&(k3_0(big_n) * seq::lambda(big_n)));
    for (m, p) in polys.iter().enumerate() {
        let term = Series::from_poly(&p.poly, order).mul(&fnn.pow(3 - m as u32)).mul(&fn1.pow(m as u32));
        acc = acc.add(&term);
    }
    acc
}

/// The middle core coefficient of `C^(3)_1` fixed by requiring the `t^(N+1)` coefficient of
/// the normalized assembly to vanish.
pub fn c31_middle(big_n: i64) -> Result<Q> {
    let zero = Q::zero();
    let polys = (0..4).map(|m| c3_poly_with_middle(big_n, m, &zero)).collect::<Result<Vec<_>>>()?;
    let base = assemble3(big_n, &polys, big_n + 2).coeff(big_n + 1);
    Ok(-base / amplitude3(big_n, 1)?)
}

pub fn c3_polys(big_n: i64) -> Result<Vec<PalinPoly>> {
    let mid = c31_middle(big_n)?;
    (0..4).map(|m| c3_poly_with_middle(big_n, m, &mid)).collect()
}

pub fn c3_poly(big_n: i64, m: i64) -> Result<PalinPoly> {
    let mid = c31_middle(big_n)?;
    c3_poly_with_middle(big_n, m, &mid)
}

/// The quartic sum for `c^(3)_(1;n)` read literally, with `a_(k-m)(N+1)` in the third factor
/// and negative indices contributing zero.
pub fn c31_literal_sum(big_n: i64, n: i64) -> Result<Q> {
    let an = |j: i64| if j < 0 { Ok(Q::zero()) } else { seq::a_coeff(big_n, j) };
    let an1 = |j: i64| if j < 0 { Ok(Q::zero()) } else { seq::a_coeff(big_n + 1, j) };
    let mut s = Q::zero();
    for m in 0..=n {
        for l in 0..=m {
            for k in 0..=l {
                s += an(k)? * an1(l - k)? * an1(k - m)? * seq::b_coeff(big_n, n - m);
            }
        }
    }
    Ok(s)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Poly;

    #[test]
    fn n1_matches_known_lines() {
        let ps = c3_polys(1).unwrap();
        assert_eq!(ps[3].poly, Poly::monomial(q(243, 512), 3));
        let c0 = Poly::from_ints(&[1, 1]) * Poly::from_ints(&[8, 13, 8]);
        assert_eq!(ps[0].poly, c0.scale(&-q(1, 24)));
        assert_eq!(k3_0(1), q(2, 3));
        for p in &ps {
            assert!(p.is_palindromic());
        }
    }

    #[test]
    fn constant_law() {
        for n in 1..6 {
            let l = seq::lambda(n);
            let lhs = k3_0(n) * &l + amplitude3(n, 0).unwrap()
                + q(n - 1, n) * &l * super::super::c2::amplitude2(n, 0).unwrap();
            assert_eq!(lhs, Q::zero());
        }
    }
}
