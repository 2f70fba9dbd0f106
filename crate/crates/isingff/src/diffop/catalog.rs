//! Named operators, stored as coefficient expressions in `t` with the integer parameter `N`
//! (and `M = -(N+1)` where a display substitutes it).

use serde::Serialize;

use super::{DiffOp, DiffOpJson};
use crate::arith::expr::parse_ratfunc;
use crate::arith::RatFunc;
use crate::error::{Error, Result};

pub struct NamedOp {
    pub name: &'static str,
    pub about: &'static str,
    /// Coefficients of `D^0, D^1, ...`.
    pub coeffs: &'static [&'static str],
    /// Inclusive range of `N`.
    pub range: (i64, i64),
}

const O2: &[&str] = &["(4+4N-t-2N t)/(4t^2(1-t))", "-(1+N-N t)/(t(1-t))", "1"];

const L2: &[&str] = &["-1/(4t) + 1/(4(t-1)) - N^2/(4t^2)", "(2t-1)/((t-1)t)", "1"];

const L4: &[&str] = &[
    "81/16 (5t-1)(5t-4)/(t^3(t-1)^3) + 9/8 (8-17t)N^2/((t-1)t^4) + 9/16 N^4/t^4",
    "(2t-1)(122t^2-122t+9)/((t-1)^3t^3) + (23-32t)N^2/(2(t-1)t^3)",
    "(241t^2-241t+46)/(2(t-1)^2t^2) - 5/2 N^2/t^2",
    "10(2t-1)/((t-1)t)",
    "1",
];

const Q_OP: &[&str] = &[
    "9/8 (2t-1)/((t-1)t) - 9/8 (2t-1)N^2/t^2",
    "(41t^2-41t+6)/(4(t-1)t) - 9/4 (t-1)N^2/t",
    "7/2 (2t-1)",
    "(t-1)t",
];

const R_OP: &[&str] = &[
    "9/8 (2t-1)(125t^2-125t+16)/((t-1)^2t^2) - 9N^2/4 (10t-9)/(2t^2)",
    "21/4 (6-29t+29t^2)/((t-1)t) - 9N^2/4 (t-1)/t",
    "23/2 (2t-1)",
    "(t-1)t",
];

const I1: &[&str] = &["-(t-2)/(2t^2(t-1)) - N/(2t^2)", "1/t"];

const OMEGA2_0: &[&str] = &[
    "(2N+1)(2N t-2N-1)",
    "2(N+2N^2+(1+4N-4N^2)t-(5N-2N^2)t^2)",
    "-6(N-(N-1)t)(1-t)t",
    "2(1-t)^2t^2",
];

const OMEGA2_1: &[&str] = &[
    "-(4+8N+4N^2+(5+6N)t-(5+10N+4N^2)t^2)",
    "2(2+4N+2N^2+(3+4N-2N^2)t-(3+8N+2N^2)t^2+2N^2t^3)t",
    "-2(1-t)(1+3N+4t+(1-3N)t^2)t^2",
    "2(1-t)^2(1+t)t^3",
];

const OMEGA2_2: &[&str] = &[
    "-(16+24N+8N^2-(15+28N+12N^2)t+(2+6N+4N^2)t^2)",
    "2(7+9N+2N^2-(7+12N+4N^2)t+(1+3N+2N^2)t^2)t",
    "-6(1+N-N t)(1-t)t^2",
    "2(1-t)^2t^3",
];

const OMEGA3_3: &[&str] = &[
    "4(2(N-1)(2N+1)(3N+1)(N+1)t^4 - (2N+3)(36N^3-7N^2-69N-32)t^3 + 4(N+2)(36N^3-10N^2-116N-69)t^2 \
     - (2N+5)(60N^3-23N^2-275N-188)t + 18(2N+3)(N+3)(N-3)(N+1))",
    "-8((N-1)(2N+1)(3N+1)(N+1)t^4 - (-130N+40N^3-47+24N^4-73N^2)t^3 + 2(18N^4-129+45N^3-113N^2-270N)t^2 \
     - (-253N^2-422+24N^4-740N+80N^3)t + (N+1)(6N^3+19N^2-114N-211))t",
    "20(t-1)(2N(N-1)(N+1)t^3 - 3(2N^3-4N^2-8N-3)t^2 + 3(-13+2N^3-8N^2-24N)t - 2(N-9)(N+2)(N+1))t^2",
    "40(t-1)^2((N-1)^2t^2 - (4N+1+2N^2)t + (N+5)(N+1))t^3",
    "-40(t-1)^3((N-1)t-N-1)t^4",
    "8(t-1)^4t^5",
];

// (t-1) t (D - d ln R^A / dt), R^A = (t-1)^(2(2N+1)) t^(-2(N+1))
const J3_0: &[&str] = &["-t^(N+1)(t-1)t(2(2N+1)/(t-1) - 2(N+1)/t)", "t^(N+1)(t-1)t"];

// the simplified second line of the same display, read literally
const J3_0_SIMPLIFIED: &[&str] = &["-t^(N+1)(2N+2(N+1))", "t^(N+1)(t-1)t"];

// d ln R^B / dt with R^B = (t+1)(t-1)^(4N-3) t^(-2N-6) P_N
const G3_0: &[&str] = &[
    "-t^(N+1)(t-1)t(1/(t+1) + (4N-3)/(t-1) - (2N+6)/t \
     + (2(4N+3)(3N+2)t + 2(20N^2+15N+2))/((4N+3)(3N+2)(t^2+1) + 2(20N^2+15N+2)t))",
    "t^(N+1)(t-1)t",
];

const J3_2: &[&str] = &["t^(N+2)(2(N+1)t + 2N)", "t^(N+2)(t-1)t"];

// R^B evaluated at M = -(N+1)
const G3_2: &[&str] = &[
    "-t^(N+2)(t-1)t(1/(t+1) + (4M-3)/(t-1) - (2M+6)/t \
     + (2(4M+3)(3M+2)t + 2(20M^2+15M+2))/((4M+3)(3M+2)(t^2+1) + 2(20M^2+15M+2)t))",
    "t^(N+2)(t-1)t",
];

fn j4_0_poly(big_n: i64) -> Option<&'static str> {
    Some(match big_n {
        2 => "t^2(t+1)(2t^2+t+2)",
        3 => "t^2(t+1)(64t^4+16t^3+99t^2+16t+64)",
        4 => "t^2(t+1)(576t^6+96t^5+730t^4+425t^3+730t^2+96t+576)",
        5 => "t^2(t+1)(16384t^8+2048t^7+19264t^6+6608t^5+28861t^4+6608t^3+19264t^2+2048t+16384)",
        _ => return None,
    })
}

/// `(norm, zeroth-order polynomial)` of `norm · J^(4)_1 = (t-1) J^(4)_0 D - 2t P`.
fn j4_1_parts(big_n: i64) -> Option<(&'static str, &'static str)> {
    Some(match big_n {
        2 => ("2t^3", "10t^4+2t^3-5t-4"),
        3 => ("64t^4", "448t^6+32t^5+95t^4-220t^2-112t-128"),
        4 => ("576t^5", "5184t^8+192t^7+406t^6+1148t^5-2471t^3-1288t^2-864t-1152"),
        5 => (
            "16384t^6",
            "180224t^10+4096t^9+7488t^8+15168t^7+41307t^6-83454t^4-44112t^3-29952t^2-22528t-32768",
        ),
        _ => return None,
    })
}

const J4_2_AT_2: &[&str] = &[
    "3(1040t^5-1176t^4-233t^3-100t^2+168t+256)/(16t^6)",
    "-t(t-1)(432t^4+80t^3-99t^2-240t-208)/(16t^6)",
    "8(t-1)^2 t^2(t+1)(2t^2+t+2)/(16t^6)",
];

pub const CATALOG: &[NamedOp] = &[
    NamedOp { name: "O2", about: "second-order operator with solutions u1(N), u2(N)", coeffs: O2, range: (0, i64::MAX) },
    NamedOp { name: "L2", about: "annihilator of f^(1)", coeffs: L2, range: (0, i64::MAX) },
    NamedOp { name: "L4", about: "left factor of the f^(3) annihilator", coeffs: L4, range: (0, i64::MAX) },
    NamedOp { name: "Q", about: "intertwiner L4 Q = R Sym^3(L2)", coeffs: Q_OP, range: (0, i64::MAX) },
    NamedOp { name: "R", about: "intertwiner L4 Q = R Sym^3(L2)", coeffs: R_OP, range: (0, i64::MAX) },
    NamedOp { name: "I1", about: "order-one intertwiner of O2", coeffs: I1, range: (0, i64::MAX) },
    NamedOp { name: "Omega2_0", about: "homogeneous operator for C^(2)_0", coeffs: OMEGA2_0, range: (1, i64::MAX) },
    NamedOp { name: "Omega2_1", about: "homogeneous operator for C^(2)_1", coeffs: OMEGA2_1, range: (1, i64::MAX) },
    NamedOp { name: "Omega2_2", about: "homogeneous operator for C^(2)_2", coeffs: OMEGA2_2, range: (1, i64::MAX) },
    NamedOp { name: "Omega3_3", about: "fifth-order operator for C^(3)_3", coeffs: OMEGA3_3, range: (1, i64::MAX) },
    NamedOp { name: "J3_0", about: "intertwiner into M^(3)_0", coeffs: J3_0, range: (1, i64::MAX) },
    NamedOp {
        name: "J3_0_simplified",
        about: "second, simplified line of the J^(3)_0 display",
        coeffs: J3_0_SIMPLIFIED,
        range: (1, i64::MAX),
    },
    NamedOp { name: "G3_0", about: "left intertwiner for M^(3)_0", coeffs: G3_0, range: (1, i64::MAX) },
    NamedOp { name: "J3_2", about: "intertwiner into M^(3)_2", coeffs: J3_2, range: (1, i64::MAX) },
    NamedOp { name: "G3_2", about: "left intertwiner for M^(3)_2", coeffs: G3_2, range: (1, i64::MAX) },
    NamedOp { name: "J4_0", about: "order-zero intertwiner into M^(4)_3", coeffs: &[], range: (2, 5) },
    NamedOp { name: "J4_1", about: "order-one intertwiner into M^(4)_5;1", coeffs: &[], range: (2, 5) },
    NamedOp { name: "J4_2", about: "order-two intertwiner into M^(4)_7", coeffs: J4_2_AT_2, range: (2, 2) },
];

fn parse_coeffs(cs: &[&str], big_n: i64) -> Result<DiffOp> {
    let vars = [("N", big_n), ("M", -(big_n + 1))];
    Ok(DiffOp::new(cs.iter().map(|c| parse_ratfunc(c, &vars)).collect::<Result<Vec<RatFunc>>>()?))
}

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.name).collect()
}

pub fn build_named(name: &str, big_n: i64) -> Result<DiffOp> {
    let entry = CATALOG.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    if big_n < entry.range.0 || big_n > entry.range.1 {
        return Err(Error::Domain(format!("{name} is tabulated for N in {}..={}, not {big_n}", entry.range.0, entry.range.1)));
    }
    match name {
        "J4_0" => parse_coeffs(&[j4_0_poly(big_n).unwrap()], big_n),
        "J4_1" => {
            let (norm, p) = j4_1_parts(big_n).unwrap();
            let vars = [("N", big_n)];
            let norm = parse_ratfunc(norm, &vars)?;
            let j0 = parse_ratfunc(j4_0_poly(big_n).unwrap(), &vars)?;
            let t = RatFunc::t_pow(1);
            let d1 = t.sub(&RatFunc::one()).mul(&j0).div(&norm);
            let d0 = parse_ratfunc(p, &vars)?.mul(&t).scale(&crate::arith::qi(-2)).div(&norm);
            Ok(DiffOp::new(vec![d0, d1]))
        }
        _ => parse_coeffs(entry.coeffs, big_n),
    }
}

#[derive(Serialize)]
pub struct CatalogEntryJson {
    pub name: &'static str,
    pub about: &'static str,
    #[serde(rename = "N")]
    pub big_n: i64,
    pub operator: DiffOpJson,
}

/// Every entry valid at `N`, as JSON.
pub fn dump(big_n: i64) -> Result<Vec<CatalogEntryJson>> {
    CATALOG
        .iter()
        .filter(|e| big_n >= e.range.0 && big_n <= e.range.1)
        .map(|e| {
            Ok(CatalogEntryJson { name: e.name, about: e.about, big_n, operator: DiffOpJson::from(&build_named(e.name, big_n)?) })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::expr::parse_ratfunc;
    use crate::arith::Poly;

    #[test]
    fn o2_zeroth_coefficient() {
        for n in 0..4 {
            let op = build_named("O2", n).unwrap();
            let want = parse_ratfunc("(4+4N-t-2N t)/(4t^2(1-t))", &[("N", n)]).unwrap();
            assert_eq!(op.coeff(0), want);
        }
    }

    #[test]
    fn j4_0_at_two() {
        let op = build_named("J4_0", 2).unwrap();
        assert_eq!(op.order(), 0);
        let want = &(&Poly::from_ints(&[0, 0, 1]) * &Poly::from_ints(&[1, 1])) * &Poly::from_ints(&[2, 1, 2]);
        assert_eq!(op.coeff(0), RatFunc::poly(want));
    }

    #[test]
    fn omega2_2_leading() {
        let op = build_named("Omega2_2", 3).unwrap();
        assert_eq!(op.order(), 3);
        assert_eq!(op.coeff(3), parse_ratfunc("2(1-t)^2t^3", &[]).unwrap());
    }

    #[test]
    fn out_of_catalog() {
        assert!(matches!(build_named("J4_0", 6), Err(Error::Domain(_))));
        assert!(matches!(build_named("nope", 1), Err(Error::UnknownName(_))));
        assert!(dump(2).unwrap().iter().any(|e| e.name == "J4_2"));
    }
}
