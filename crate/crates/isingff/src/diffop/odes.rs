//! Inhomogeneous linear ODEs for single coefficient polynomials.

use super::catalog::build_named;
use super::coupled::RhsScale;
use crate::arith::expr::parse_ratfunc;
use crate::arith::RatFunc;
use crate::error::Result;
use crate::formfactor::{c2::c2_poly, c3::c3_poly};

pub struct OdeSpec {
    pub name: &'static str,
    pub op: &'static str,
    /// The unknown is `C^(level)_m`.
    pub level: i64,
    pub m: i64,
    pub scale: RhsScale,
    pub rhs: &'static str,
    /// The displayed right-hand side when it differs from `rhs`.
    pub printed_rhs: Option<&'static str>,
}

pub const ODES: &[OdeSpec] = &[
    OdeSpec {
        name: "ode-c2_0",
        op: "Omega2_0",
        level: 2,
        m: 0,
        scale: RhsScale::LambdaSquared,
        rhs: "N(N+1)(2N+1)^2/2 (1-t) t^N",
        printed_rhs: None,
    },
    OdeSpec {
        name: "ode-c2_1",
        op: "Omega2_1",
        level: 2,
        m: 1,
        scale: RhsScale::LambdaSquared,
        rhs: "(2N+1)^2(-2N^2(N+1)(t+1)^2+(4N+1)t)/(4(N+1)) (1-t) t^(N+1)",
        printed_rhs: Some("(2N+1)^2(-2N^2(N+1)(t+1)^2+(4N+1)t)/(N+1) (1-t) t^(N+1)"),
    },
    OdeSpec {
        name: "ode-c2_2",
        op: "Omega2_2",
        level: 2,
        m: 2,
        scale: RhsScale::LambdaSquared,
        rhs: "N^2(2N+1)^4/(8(N+1)^2) (1-t) t^(N+2)",
        printed_rhs: None,
    },
    OdeSpec {
        name: "ode-c3_3",
        op: "Omega3_3",
        level: 3,
        m: 3,
        scale: RhsScale::B0,
        rhs: "-3(t^2-1)N^2(2N+1)^6/(N+1)^3 t^(N+3)",
        printed_rhs: None,
    },
];

pub fn spec(name: &str) -> Option<&'static OdeSpec> {
    ODES.iter().find(|s| s.name == name)
}

impl OdeSpec {
    pub fn unknown(&self, big_n: i64) -> Result<RatFunc> {
        let p = if self.level == 2 { c2_poly(big_n, self.m)? } else { c3_poly(big_n, self.m)? };
        Ok(RatFunc::poly(p.poly))
    }

    pub fn inhomogeneity(&self, big_n: i64, printed: bool) -> Result<RatFunc> {
        let s = if printed { self.printed_rhs.unwrap_or(self.rhs) } else { self.rhs };
        Ok(parse_ratfunc(s, &[("N", big_n)])?.scale(&self.scale.value(big_n)))
    }

    /// `Ω C - I`.
    pub fn residual(&self, big_n: i64, printed: bool) -> Result<RatFunc> {
        let op = build_named(self.op, big_n)?;
        Ok(op.apply_ratfunc(&self.unknown(big_n)?).sub(&self.inhomogeneity(big_n, printed)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residuals_vanish() {
        for n in 1..4 {
            for s in ODES {
                assert!(s.residual(n, false).unwrap().is_zero(), "{} N={n}", s.name);
            }
            assert!(!spec("ode-c2_1").unwrap().residual(n, true).unwrap().is_zero());
        }
    }
}
