//! First-order and second-order coupled systems satisfied by the vectors `(C_0, ..., C_n)`.

use super::DiffOp;
use crate::arith::expr::parse_ratfunc;
use crate::arith::{Q, RatFunc};
use crate::error::Result;
use crate::seq;

/// Which overall constant multiplies the right-hand sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhsScale {
    LambdaSquared,
    /// `B_0 = λ_N^3 / 3`.
    B0,
}

impl RhsScale {
    pub fn value(self, big_n: i64) -> Q {
        let l = seq::lambda(big_n);
        match self {
            RhsScale::LambdaSquared => &l * &l,
            RhsScale::B0 => &l * &l * &l / Q::from_integer(3.into()),
        }
    }
}

/// One displayed equation: per unknown, the coefficients of `D^0, D^1, ...`.
pub struct RowSpec {
    pub label: &'static str,
    pub entries: &'static [&'static [&'static str]],
    pub rhs: &'static str,
}

pub struct SystemSpec {
    pub name: &'static str,
    pub unknowns: usize,
    pub scale: RhsScale,
    pub rows: &'static [RowSpec],
}

pub struct CoupledSystem {
    pub name: &'static str,
    pub labels: Vec<&'static str>,
    pub matrix: Vec<Vec<DiffOp>>,
    pub rhs: Vec<RatFunc>,
}

impl CoupledSystem {
    pub fn build(spec: &SystemSpec, big_n: i64) -> Result<Self> {
        let vars = [("N", big_n)];
        let scale = spec.scale.value(big_n);
        let mut matrix = Vec::new();
        let mut rhs = Vec::new();
        for row in spec.rows {
            let mut ops = Vec::new();
            for j in 0..spec.unknowns {
                let cs = row.entries.get(j).copied().unwrap_or(&[]);
                ops.push(DiffOp::new(cs.iter().map(|c| parse_ratfunc(c, &vars)).collect::<Result<Vec<_>>>()?));
            }
            matrix.push(ops);
            rhs.push(parse_ratfunc(row.rhs, &vars)?.scale(&scale));
        }
        Ok(CoupledSystem { name: spec.name, labels: spec.rows.iter().map(|r| r.label).collect(), matrix, rhs })
    }

    /// `Σ_j A_ij C_j - I_i` for each row.
    pub fn residuals(&self, unknowns: &[RatFunc]) -> Vec<RatFunc> {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, r)| {
                row.iter().zip(unknowns).fold(RatFunc::zero(), |acc, (op, c)| acc.add(&op.apply_ratfunc(c))).sub(r)
            })
            .collect()
    }
}

const EQN1: RowSpec = RowSpec {
    label: "C2 system row 1",
    entries: &[
        &["0", "1"],
        &["-(N+1)/((2N+1)t)", "2(N+1)/(2N+1)"],
        &["-4(N+1)^2/((2N+1)^2 t)", "4(N+1)^2/(2N+1)^2"],
    ],
    rhs: "(2N+1)/4 t^N",
};

const EQN2_C0: &[&str] = &["(2N+1)/(2(N+1))"];
const EQN2_C1_ZEROTH: &str = "1 + 1/(2N+1) + (1-2t+N(1-t))/((2N+1)t)";
const EQN2_C2_ZEROTH: &str = "2(N+1)(3+2N-2t)/((2N+1)^2 t)";
const EQN2_RHS: &str = "(2N+1)(t-N(1-t))/(4(N+1)) t^N";

/// The first derivative term acts on `C_1`.
const EQN2: RowSpec = RowSpec {
    label: "C2 system row 2",
    entries: &[EQN2_C0, &[EQN2_C1_ZEROTH, "-(1-t)/(2N+1)"], &[EQN2_C2_ZEROTH, "-4(N+1)(1-t)/(2N+1)^2"]],
    rhs: EQN2_RHS,
};

/// Literal transcription: both derivative terms act on `C_2`.
const EQN2_PRINTED: RowSpec = RowSpec {
    label: "C2 system row 2",
    entries: &[EQN2_C0, &[EQN2_C1_ZEROTH], &[EQN2_C2_ZEROTH, "-(1-t)/(2N+1) - 4(N+1)(1-t)/(2N+1)^2"]],
    rhs: EQN2_RHS,
};

const EQN3: RowSpec = RowSpec {
    label: "C2 system row 3",
    entries: &[&[], &["-(1-t)/(4(N+1))"], &["-(2+2N-t)(1-t)/((2N+1)^2 t)", "(1-t)^2/(2N+1)^2"]],
    rhs: "-(2N+1)^2/(16(N+1)^2) (1-t) t^(N+1)",
};

pub const C2_SYSTEM: SystemSpec =
    SystemSpec { name: "C2 first-order system", unknowns: 3, scale: RhsScale::LambdaSquared, rows: &[EQN1, EQN2, EQN3] };

pub const C2_SYSTEM_PRINTED: SystemSpec = SystemSpec {
    name: "C2 first-order system, literal",
    unknowns: 3,
    scale: RhsScale::LambdaSquared,
    rows: &[EQN1, EQN2_PRINTED, EQN3],
};

const C3_ROW1_LHS: &[&[&str]] = &[
    &["-(2N+1)/(2(t-1)t)", "(t N+2t-N-1)/((t-1)t)", "1"],
    &["-(N+1)(2t N+1+t)/(t^2(2N+1)(t-1))", "2(N+1)(t N-N+t)/(t(t-1)(2N+1))", "2(N+1)/(2N+1)"],
    &["-2(N+1)^2(2t N+3)/(t^2(2N+1)^2(t-1))", "4(N+1)^2(t N-N+1)/(t(t-1)(2N+1)^2)", "4(N+1)^2/(2N+1)^2"],
    &["-8(N+1)^3(t N-t+3)/((t-1)(2N+1)^3t^2)", "8(N+1)^3(t N-N+2-t)/(t(2N+1)^3(t-1))", "8(N+1)^3/(2N+1)^3"],
];

/// The constant term carries an extra factor `N`.
const C3_ROW1: RowSpec = RowSpec { label: "C3 system row 1", entries: C3_ROW1_LHS, rhs: "3/4 N(2N+1) t^(N-1)" };

const C3_ROW1_PRINTED: RowSpec = RowSpec { label: "C3 system row 1", entries: C3_ROW1_LHS, rhs: "3/4 (2N+1) t^(N-1)" };

const C3_ROW2: RowSpec = RowSpec {
    label: "C3 system row 2",
    entries: &[
        &["0", "6"],
        &["-2(N+1)(2N+6t N+3t+2)/(t^2(2N+1)^2)", "4(N+1)(5t N+N+3t+1)/(t(2N+1)^2)", "4(t-1)(N+1)/(2N+1)^2"],
        &["-8(N+1)^2(4t N+4N+5+t)/(t^2(2N+1)^3)", "8(N+1)^2(2N+4t N+t+4)/(t(2N+1)^3)", "16(N+1)^2(t-1)/(2N+1)^3"],
        &["-24(N+1)^3(6N+2t N+9-2t)/((2N+1)^4t^2)", "48(N+1)^3(t N+N+3-t)/(t(2N+1)^4)", "48(N+1)^3(t-1)/(2N+1)^4"],
    ],
    rhs: "3/2 t^(N-1)(2N^2 t+t+4t N-2N-2N^2)",
};

const C3_ROW4: RowSpec = RowSpec {
    label: "C3 system row 4",
    entries: &[
        &[],
        &["1"],
        &["4(N+1)(2N+2-t)/(t(2N+1)^2)", "4(t-1)(N+1)/(2N+1)^2"],
        &[
            "4(N+1)^2(12N^2-16t N-2t^2 N+30N+2t^2+18-17t)/((2N+1)^4t^2)",
            "8(t-1)(N+1)^2(t N+5N-t+5)/(t(2N+1)^4)",
            "8(t-1)^2(N+1)^2/(2N+1)^4",
        ],
    ],
    rhs: "3/4 (2N+1)^2/(N+1) t^(N+1)",
};

const C3_ROW3: RowSpec = RowSpec {
    label: "C3 system row 3",
    entries: &[
        &["6"],
        &["4(N+1)(4N+2t N+4-t)/(t(2N+1)^2)", "16(t-1)(N+1)/(2N+1)^2"],
        &[
            "8(N+1)^2(4N^2+8N^2 t-10t^2 N+10t N+12N-t-4t^2+8)/((2N+1)^4t^2)",
            "16(t-1)(N+1)^2(5t N+3N+2t+3)/(t(2N+1)^4)",
            "16(t-1)^2(N+1)^2/(2N+1)^4",
        ],
        &[
            "48(N+1)^3(4N^2-2t^2 N-10t N+16N+2t^2+13-14t)/((2N+1)^5t^2)",
            "96(N+1)^3(t-1)(t N+3N+4-t)/(t(2N+1)^5)",
            "96(t-1)^2(N+1)^3/(2N+1)^5",
        ],
    ],
    rhs: "3 t^N(3N(t-1)+2t-1)",
};

pub const C3_SYSTEM: SystemSpec =
    SystemSpec { name: "C3 coupled system", unknowns: 4, scale: RhsScale::B0, rows: &[C3_ROW1, C3_ROW2, C3_ROW4, C3_ROW3] };

pub const C3_SYSTEM_PRINTED: SystemSpec = SystemSpec {
    name: "C3 coupled system, literal",
    unknowns: 4,
    scale: RhsScale::B0,
    rows: &[C3_ROW1_PRINTED, C3_ROW2, C3_ROW4, C3_ROW3],
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formfactor::{c2::c2_poly, c3::c3_polys};

    fn c2_unknowns(n: i64) -> Vec<RatFunc> {
        (0..3).map(|m| RatFunc::poly(c2_poly(n, m).unwrap().poly)).collect()
    }

    #[test]
    fn c2_system_rows() {
        for n in 1..4 {
            let r = CoupledSystem::build(&C2_SYSTEM, n).unwrap().residuals(&c2_unknowns(n));
            assert!(r.iter().all(RatFunc::is_zero), "N={n}");
            let p = CoupledSystem::build(&C2_SYSTEM_PRINTED, n).unwrap().residuals(&c2_unknowns(n));
            assert!(p[0].is_zero() && !p[1].is_zero() && p[2].is_zero());
        }
    }

    #[test]
    fn c3_system_rows() {
        for n in 1..3 {
            let cs: Vec<RatFunc> = c3_polys(n).unwrap().into_iter().map(|p| RatFunc::poly(p.poly)).collect();
            let r = CoupledSystem::build(&C3_SYSTEM, n).unwrap().residuals(&cs);
            assert!(r.iter().all(RatFunc::is_zero), "N={n}");
        }
    }
}
