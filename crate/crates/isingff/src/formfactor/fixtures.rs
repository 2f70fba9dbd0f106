//! Stored factorized tables and their comparison against the constructions.

use std::sync::OnceLock;

use serde::Serialize;

use super::{construct, palin, FormFactorExpr, LowerTerm, Parity, Source};
use crate::arith::expr::{parse_poly, parse_rational};
use crate::arith::rational::fmt_q;
use crate::arith::Poly;
use crate::error::{Error, Result};
use crate::oracle;

const CORPUS: &str = include_str!("../../data/tables.txt");

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureTable {
    pub n: i64,
    pub big_n: i64,
    pub lower: Vec<LowerTerm>,
    /// `(a, b, C)` for the monomial `F_N^a F_(N+1)^b`, as printed.
    pub terms: Vec<(i64, i64, Poly)>,
    /// Replacements for printed terms.
    pub errata: Vec<(i64, i64, Poly)>,
}

impl FixtureTable {
    /// The table with errata applied.
    pub fn to_expr(&self) -> FormFactorExpr {
        self.build(true)
    }

    pub fn printed_expr(&self) -> FormFactorExpr {
        self.build(false)
    }

    fn build(&self, corrected: bool) -> FormFactorExpr {
        let mut c_polys: Vec<Poly> = vec![Poly::zero(); self.n as usize + 1];
        let errata = if corrected { &self.errata[..] } else { &[] };
        for (_, b, p) in self.terms.iter().chain(errata) {
            c_polys[*b as usize] = p.clone();
        }
        FormFactorExpr {
            n: self.n,
            big_n: self.big_n,
            lower_terms: self.lower.clone(),
            c_polys: c_polys.into_iter().map(palin).collect(),
            parity: Parity::of(self.n),
            source: Source::Fixture,
        }
    }
}

fn header_field(tok: &str, key: &str, line: usize) -> Result<i64> {
    tok.strip_prefix(key)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse { pos: line, msg: format!("expected {key}<int>, got {tok:?}") })
}

pub fn parse_corpus(text: &str) -> Result<Vec<FixtureTable>> {
    let mut out = Vec::new();
    let mut cur: Option<FixtureTable> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { pos: lineno, msg };
        if let Some(rest) = line.strip_prefix("table ") {
            if cur.is_some() {
                return Err(err("nested table".into()));
            }
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(err(format!("bad header {line:?}")));
            }
            let n = header_field(toks[0], "n=", lineno)?;
            let big_n = header_field(toks[1], "N=", lineno)?;
            cur = Some(FixtureTable { n, big_n, lower: vec![], terms: vec![], errata: vec![] });
            continue;
        }
        if line == "end" {
            out.push(cur.take().ok_or_else(|| err("end outside table".into()))?);
            continue;
        }
        let t = cur.as_mut().ok_or_else(|| err("entry outside table".into()))?;
        let (lhs, rhs) = line.split_once(':').ok_or_else(|| err(format!("missing ':' in {line:?}")))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        let int = |s: &str| s.parse::<i64>().map_err(|_| err(format!("bad index {s:?}")));
        match toks.as_slice() {
            ["lower", k] => t.lower.push(LowerTerm { k: int(k)?, coeff: parse_rational(rhs.trim())? }),
            [kw @ ("term" | "erratum"), a, b] => {
                let (a, b) = (int(a)?, int(b)?);
                if a + b != t.n {
                    return Err(err(format!("monomial degree {} != {}", a + b, t.n)));
                }
                let entry = (a, b, parse_poly(rhs.trim(), &[])?);
                if *kw == "term" {
                    t.terms.push(entry);
                } else if t.terms.iter().any(|x| (x.0, x.1) == (a, b)) {
                    t.errata.push(entry);
                } else {
                    return Err(err(format!("erratum for absent term {a} {b}")));
                }
            }
            _ => return Err(err(format!("unknown entry {line:?}"))),
        }
    }
    if cur.is_some() {
        return Err(Error::Parse { pos: text.lines().count(), msg: "unterminated table".into() });
    }
    Ok(out)
}

pub fn corpus() -> &'static [FixtureTable] {
    static C: OnceLock<Vec<FixtureTable>> = OnceLock::new();
    C.get_or_init(|| parse_corpus(CORPUS).expect("stored corpus parses"))
}

pub fn lookup(n: i64, big_n: i64) -> Result<&'static FixtureTable> {
    corpus()
        .iter()
        .find(|t| t.n == n && t.big_n == big_n)
        .ok_or_else(|| Error::UnknownName(format!("no construction or stored table for n={n} N={big_n}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Constructed expression compared term by term.
    Constructed,
    /// Assembled table compared with the integral series.
    Oracle { order: i64 },
    ParseOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: i64,
    #[serde(rename = "N")]
    pub big_n: i64,
    /// `Some(m)` for `C_m`, `None` for a lower-order constant.
    pub m: Option<i64>,
    /// Coefficient index for polynomials, `k` of `f^(k)` for constants.
    pub index: i64,
}

/// Evidence that the printed form of a table is wrong.
#[derive(Clone, Debug, Serialize)]
pub struct Refutation {
    /// Monomials `(a, b)` replaced by errata.
    pub terms: Vec<(i64, i64)>,
    pub refuted: bool,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub n: i64,
    #[serde(rename = "N")]
    pub big_n: i64,
    pub kind: CheckKind,
    pub palindromic: bool,
    pub mismatches: Vec<Mismatch>,
    pub erratum: Option<Refutation>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.palindromic && self.mismatches.is_empty() && self.erratum.as_ref().map_or(true, |r| r.refuted)
    }
}

fn compare_exprs(built: &FormFactorExpr, table: &FormFactorExpr) -> Vec<Mismatch> {
    let mut out = Vec::new();
    let mk = |m: Option<i64>, index: i64| Mismatch { n: table.n, big_n: table.big_n, m, index };
    let mut ks: Vec<i64> = built.lower_terms.iter().chain(&table.lower_terms).map(|l| l.k).collect();
    ks.sort();
    ks.dedup();
    for k in ks {
        if built.lower(k) != table.lower(k) {
            out.push(mk(None, k));
        }
    }
    for m in 0..=table.n as usize {
        let (a, b) = (built.poly(m), table.poly(m));
        let len = a.coeffs().len().max(b.coeffs().len());
        for i in 0..len {
            if a.coeff(i) != b.coeff(i) {
                out.push(mk(Some(m as i64), i as i64));
            }
        }
    }
    out
}

fn series_mismatches(n: i64, big_n: i64, a: &crate::arith::Series, b: &crate::arith::Series, order: i64) -> Vec<Mismatch> {
    (0..order).filter(|&j| a.coeff(j) != b.coeff(j)).map(|j| Mismatch { n, big_n, m: None, index: j }).collect()
}

/// Series order used when an `N = 0` table is checked against the integrals.
pub fn oracle_order(n: i64, big_n: i64) -> i64 {
    if n == 4 {
        8
    } else {
        2 * big_n + 8
    }
}

pub fn check_table(t: &FixtureTable) -> Result<TableCheck> {
    let expr = t.to_expr();
    let palindromic = expr.c_polys.iter().all(|p| p.is_palindromic());
    let (kind, mismatches) = if t.n >= 5 {
        (CheckKind::ParseOnly, vec![])
    } else if t.big_n >= 1 {
        (CheckKind::Constructed, compare_exprs(&construct(t.n, t.big_n)?, &expr))
    } else {
        let order = oracle_order(t.n, t.big_n);
        let table = expr.assemble(order)?;
        let integral = if t.n == 4 { oracle::oracle_f4(t.big_n, order)? } else { oracle::oracle_f(t.n, t.big_n, order)? };
        (CheckKind::Oracle { order }, series_mismatches(t.n, t.big_n, &table, &integral, order))
    };
    let erratum = if t.errata.is_empty() { None } else { Some(refute_printed(t)?) };
    Ok(TableCheck { n: t.n, big_n: t.big_n, kind, palindromic, mismatches, erratum })
}

/// A printed form is refuted by a broken palindromy or, for `n <= 4`, by disagreement with
/// the integral series.
fn refute_printed(t: &FixtureTable) -> Result<Refutation> {
    let printed = t.printed_expr();
    let terms = t.errata.iter().map(|e| (e.0, e.1)).collect();
    if let Some((m, p)) = printed.c_polys.iter().enumerate().find(|(_, p)| !p.is_palindromic()) {
        let k = p.first_violation().unwrap_or(0);
        let witness = format!(
            "printed C_{m}: t^{k} coefficient {} vs mirror t^{} coefficient {}",
            fmt_q(&p.poly.coeff(k as usize)),
            p.center - k,
            fmt_q(&p.poly.coeff((p.center - k) as usize))
        );
        return Ok(Refutation { terms, refuted: true, witness });
    }
    if t.n > 4 {
        return Ok(Refutation { terms, refuted: false, witness: "printed form palindromic; no integral series".into() });
    }
    let order = if t.n == 4 { 8 } else { 2 * t.big_n + 4 };
    let a = printed.assemble(order)?;
    let b = if t.n == 4 { oracle::oracle_f4(t.big_n, order)? } else { oracle::oracle_f(t.n, t.big_n, order)? };
    Ok(match (0..order).find(|&j| a.coeff(j) != b.coeff(j)) {
        Some(j) => Refutation {
            terms,
            refuted: true,
            witness: format!("printed table t^{j} coefficient {} vs integral {}", fmt_q(&a.coeff(j)), fmt_q(&b.coeff(j))),
        },
        None => Refutation { terms, refuted: false, witness: format!("printed table agrees with integral through t^{}", order - 1) },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureReport {
    pub tables: Vec<TableCheck>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.tables.iter().all(TableCheck::passed)
    }

    pub fn compared(&self) -> usize {
        self.tables.iter().filter(|t| t.kind != CheckKind::ParseOnly).count()
    }
}

pub fn fixtures_check() -> Result<FixtureReport> {
    use rayon::prelude::*;
    let tables = corpus().par_iter().map(check_table).collect::<Result<Vec<_>>>()?;
    Ok(FixtureReport { tables })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, Q};

    #[test]
    fn corpus_shape() {
        let c = corpus();
        assert_eq!(c.len(), 4 + 5 + 4 + 3);
        let t = lookup(2, 2).unwrap();
        let p = &t.terms[0].2;
        assert_eq!(p.coeff(0), -Q::from_integer(1.into()));
        assert_eq!(lookup(3, 2).unwrap().terms[3].2.coeff(3), q(15625, 165888) * Q::from_integer(3.into()));
    }

    #[test]
    fn full_check() {
        let r = fixtures_check().unwrap();
        for t in &r.tables {
            assert!(t.passed(), "{t:?}");
        }
        assert_eq!(r.compared(), 13);
        let fixed: Vec<_> = r.tables.iter().filter(|t| t.erratum.is_some()).map(|t| (t.n, t.big_n)).collect();
        assert_eq!(fixed, vec![(3, 4), (4, 0), (4, 2), (4, 3), (5, 1)]);
    }
}
