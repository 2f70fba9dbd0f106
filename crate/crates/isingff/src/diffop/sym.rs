//! Symmetric powers and products of second-order operators.
//!
//! For factors `L_g` with multiplicities `k_g`, every product of solutions is a combination of
//! the monomials `Π_g y_g^(k_g - j_g) (y_g')^(j_g)` with rational-function coefficients, and
//! differentiation acts on that state space through `y'' = -p y' - q y`. The minimal operator is
//! the first linear dependency among successive derivatives of a start vector.

use crate::arith::RatFunc;
use crate::error::{Error, Result};

use super::DiffOp;

/// `y'' = -p y' - q y`, or `y' = -q y` for a first-order factor.
struct Group {
    p: RatFunc,
    q: RatFunc,
    k: usize,
    first: bool,
}

struct StateSpace {
    groups: Vec<Group>,
    radix: Vec<usize>,
    dim: usize,
}

impl StateSpace {
    fn new(factors: &[(&DiffOp, usize)]) -> Result<Self> {
        let mut groups = Vec::new();
        for (op, k) in factors {
            match op.order() {
                1 => groups.push(Group { p: RatFunc::zero(), q: op.coeff(0).div(&op.coeff(1)), k: *k, first: true }),
                2 => {
                    let a2 = op.coeff(2);
                    groups.push(Group { p: op.coeff(1).div(&a2), q: op.coeff(0).div(&a2), k: *k, first: false })
                }
                o => return Err(Error::Domain(format!("symmetric construction needs order 1 or 2, got {o}"))),
            }
        }
        let radix: Vec<usize> = groups.iter().map(|g| if g.first { 1 } else { g.k + 1 }).collect();
        let dim = radix.iter().product();
        Ok(StateSpace { groups, radix, dim })
    }

    fn digits(&self, mut s: usize) -> Vec<usize> {
        self.radix
            .iter()
            .map(|r| {
                let d = s % r;
                s /= r;
                d
            })
            .collect()
    }

    fn index(&self, d: &[usize]) -> usize {
        d.iter().zip(&self.radix).rev().fold(0, |acc, (x, r)| acc * r + x)
    }

    fn derive(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        let mut w: Vec<RatFunc> = v.iter().map(|c| c.derivative()).collect();
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = self.digits(s);
            for (g, grp) in self.groups.iter().enumerate() {
                if grp.first {
                    w[s] = w[s].sub(&c.mul(&grp.q).scale(&crate::arith::qi(grp.k as i64)));
                    continue;
                }
                let j = d[g];
                if j < grp.k {
                    let mut e = d.clone();
                    e[g] = j + 1;
                    let i = self.index(&e);
                    w[i] = w[i].add(&c.scale(&crate::arith::qi((grp.k - j) as i64)));
                }
                if j > 0 {
                    let jj = crate::arith::qi(j as i64);
                    w[s] = w[s].sub(&c.mul(&grp.p).scale(&jj));
                    let mut e = d.clone();
                    e[g] = j - 1;
                    let i = self.index(&e);
                    w[i] = w[i].sub(&c.mul(&grp.q).scale(&jj));
                }
            }
        }
        w
    }

    /// Minimal operator annihilating `pre` applied to every product of solutions.
    fn annihilate(&self, pre: &DiffOp) -> Result<DiffOp> {
        let mut base = vec![RatFunc::zero(); self.dim];
        base[0] = RatFunc::one();
        let mut start = vec![RatFunc::zero(); self.dim];
        let mut dk = base;
        for (i, c) in pre.coeffs().iter().enumerate() {
            if i > 0 {
                dk = self.derive(&dk);
            }
            for (s, x) in dk.iter().enumerate() {
                start[s] = start[s].add(&x.mul(c));
            }
        }
        if start.iter().all(|x| x.is_zero()) {
            return Err(Error::Degenerate("the start operator annihilates every product".into()));
        }
        let mut ech = Echelon::default();
        let mut v = start;
        loop {
            if let Some(c) = ech.insert(&v) {
                let mut coeffs: Vec<RatFunc> = c.iter().map(|x| x.neg()).collect();
                coeffs.push(RatFunc::one());
                return Ok(DiffOp::new(coeffs));
            }
            if ech.rows.len() > self.dim {
                return Err(Error::Degenerate("no dependency within the state space".into()));
            }
            v = self.derive(&v);
        }
    }
}

fn weight(x: &RatFunc) -> usize {
    x.num().degree().unwrap_or(0) + x.den().degree().unwrap_or(0)
}

/// Incremental echelon form of the Krylov vectors `v_0, v_1, ...`; each reduced row remembers
/// its expression in the inserted vectors.
#[derive(Default)]
struct Echelon {
    /// (reduced vector with unit pivot, pivot index, combination of inserted vectors)
    rows: Vec<(Vec<RatFunc>, usize, Vec<RatFunc>)>,
}

impl Echelon {
    /// Insert `v_k`; on dependency return `x` with `v_k = Σ_(i<k) x_i v_i`.
    fn insert(&mut self, v: &[RatFunc]) -> Option<Vec<RatFunc>> {
        let k = self.rows.len();
        let mut r = v.to_vec();
        let mut comb = vec![RatFunc::zero(); k + 1];
        comb[k] = RatFunc::one();
        for (row, p, c) in &self.rows {
            let f = r[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row).chain(comb.iter_mut().zip(c)) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        let piv = r.iter().enumerate().filter(|(_, x)| !x.is_zero()).min_by_key(|(_, x)| weight(x)).map(|(i, _)| i);
        match piv {
            None => Some(comb[..k].iter().map(RatFunc::neg).collect()),
            Some(p) => {
                let inv = r[p].inv();
                let r = r.iter().map(|x| x.mul(&inv)).collect();
                let comb = comb.iter().map(|x| x.mul(&inv)).collect();
                self.rows.push((r, p, comb));
                None
            }
        }
    }
}

/// Minimal operator annihilating `pre` applied to all products with one factor per listed
/// operator; repeated operators are grouped into symmetric powers.
pub fn annihilator_of_image(ops: &[&DiffOp], pre: &DiffOp) -> Result<DiffOp> {
    let mut groups: Vec<(&DiffOp, usize)> = Vec::new();
    for op in ops {
        match groups.iter_mut().find(|(g, _)| g == op) {
            Some(g) => g.1 += 1,
            None => groups.push((op, 1)),
        }
    }
    StateSpace::new(&groups)?.annihilate(pre)
}

/// Generic dimension of the product space.
pub fn product_dimension(ops: &[&DiffOp]) -> usize {
    let mut counts: Vec<(&DiffOp, usize)> = Vec::new();
    for op in ops {
        match counts.iter_mut().find(|(g, _)| g == op) {
            Some(g) => g.1 += 1,
            None => counts.push((op, 1)),
        }
    }
    counts.iter().map(|(op, k)| if op.order() == 1 { 1 } else { k + 1 }).product()
}

/// `Sym^k(L)` for a second-order `L`, monic.
pub fn symmetric_power(op: &DiffOp, k: usize) -> Result<DiffOp> {
    let ops = vec![op; k];
    symmetric_product(&ops)
}

/// Minimal monic annihilator of products of one solution from each factor.
pub fn symmetric_product(ops: &[&DiffOp]) -> Result<DiffOp> {
    if ops.is_empty() {
        return Err(Error::Domain("empty symmetric product".into()));
    }
    let m = annihilator_of_image(ops, &DiffOp::identity())?;
    let dim = product_dimension(ops);
    if m.order() != dim {
        return Err(Error::Degenerate(format!("order {} below generic {}", m.order(), dim)));
    }
    Ok(m)
}

/// `Sym(ops) · t^a`: the annihilator of `t^(-a)` times the products.
pub fn symmetric_product_shifted(ops: &[&DiffOp], a: i64) -> Result<DiffOp> {
    annihilator_of_image(ops, &DiffOp::mul_by(RatFunc::t_pow(-a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{qi, Series, LogSeries};

    #[test]
    fn sym1_is_monic_input() {
        let t = RatFunc::t_pow(1);
        let l = DiffOp::new(vec![RatFunc::t_pow(-2), t.clone(), RatFunc::one()]);
        assert_eq!(symmetric_power(&l, 1).unwrap(), l);
    }

    #[test]
    fn sym2_of_constant_coefficient() {
        // y'' + y = 0: squares of sin/cos satisfy y''' + 4y' = 0
        let l = DiffOp::new(vec![RatFunc::one(), RatFunc::zero(), RatFunc::one()]);
        let s = symmetric_power(&l, 2).unwrap();
        assert_eq!(s, DiffOp::new(vec![RatFunc::zero(), RatFunc::from(4), RatFunc::zero(), RatFunc::one()]));
    }

    #[test]
    fn first_order_factors_collapse() {
        let l = DiffOp::d_minus(RatFunc::t_pow(-1));
        let s = symmetric_product(&[&l, &l]).unwrap();
        assert_eq!(s, DiffOp::d_minus(RatFunc::t_pow(-1).scale(&qi(2))));
    }

    #[test]
    fn repeated_second_order_factor() {
        // D^2 with solutions 1, t; its square has solutions 1, t, t^2
        let l = DiffOp::new(vec![RatFunc::zero(), RatFunc::zero(), RatFunc::one()]);
        let s = symmetric_power(&l, 2).unwrap();
        assert_eq!(s.order(), 3);
        let x = LogSeries::analytic_only(Series::monomial(qi(1), 2, 8));
        assert!(s.apply(&x).unwrap().is_zero());
    }
}
