//! Renderers for form-factor expressions and series, selected by name.

use num::{One, Signed, Zero};

use super::FormFactorExpr;
use crate::arith::rational::{fmt_q, small_factor};
use crate::arith::{Poly, Series, Q};
use crate::error::{Error, Result};

/// A coefficient polynomial split as `sign · content · t^v · (t+1)^k · rest`, with `rest`
/// integral, primitive and of positive leading coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct Factored {
    pub negative: bool,
    pub content: Q,
    pub t_power: usize,
    pub t_plus_one: usize,
    pub rest: Poly,
}

pub fn factor_display(p: &Poly) -> Option<Factored> {
    let v = p.valuation()?;
    let mut rest = p.unshift(v);
    let content = rest.content();
    rest = rest.scale(&(Q::one() / &content));
    let negative = rest.lead().is_negative();
    if negative {
        rest = rest.scale(&-Q::one());
    }
    let tp1 = Poly::from_ints(&[1, 1]);
    let mut k = 0;
    while rest.degree().unwrap_or(0) > 0 {
        let (quo, rem) = rest.div_rem(&tp1);
        if !rem.is_zero() {
            break;
        }
        rest = quo;
        k += 1;
    }
    Some(Factored { negative, content, t_power: v, t_plus_one: k, rest })
}

fn prime_powers(n: &num::BigInt, latex: bool) -> String {
    if n.is_one() {
        return "1".into();
    }
    match small_factor(n) {
        Some(fs) => fs
            .iter()
            .map(|&(p, e)| match (e, latex) {
                (1, _) => p.to_string(),
                (_, true) => format!("{p}^{{{e}}}"),
                (_, false) => format!("{p}^{e}"),
            })
            .collect::<Vec<_>>()
            .join(if latex { "\\cdot " } else { "*" }),
        None => n.to_string(),
    }
}

fn latex_q(x: &Q) -> String {
    let num = prime_powers(x.numer(), true);
    if x.denom().is_one() {
        num
    } else {
        format!("\\frac{{{num}}}{{{}}}", prime_powers(x.denom(), true))
    }
}

fn latex_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (k, a) in p.coeffs().iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let sign = if a.is_negative() { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = a.abs();
        let c = if mag.is_one() && k > 0 { String::new() } else { fmt_q(&mag) };
        let t = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{{{k}}}"),
        };
        out.push_str(&format!("{sign}{c}{t}"));
    }
    out
}

fn f_monomial(big_n: i64, a: i64, b: i64, latex: bool) -> Vec<String> {
    let one = |j: i64, e: i64| match (e, latex) {
        (1, true) => format!("F_{{{j}}}"),
        (_, true) => format!("F_{{{j}}}^{{{e}}}"),
        (1, false) => format!("F_{j}"),
        (_, false) => format!("F_{j}^{e}"),
    };
    let mut out = vec![];
    if a > 0 {
        out.push(one(big_n, a));
    }
    if b > 0 {
        out.push(one(big_n + 1, b));
    }
    out
}

fn lhs(n: i64, big_n: i64, latex: bool) -> String {
    let f = if latex { format!("f^{{({n})}}_{{{big_n},{big_n}}}") } else { format!("f^({n})_{{{big_n},{big_n}}}") };
    norm_wrap(f, n, big_n, latex)
}

fn norm_wrap(f: String, n: i64, big_n: i64, latex: bool) -> String {
    if n % 2 == 0 || big_n == 0 {
        return f;
    }
    let p = if big_n % 2 == 0 { (big_n / 2).to_string() } else { format!("{big_n}/2") };
    if latex {
        format!("\\frac{{{f}}}{{t^{{{p}}}}}")
    } else {
        format!("{f}/t^({p})")
    }
}

fn lower_name(k: i64, big_n: i64, latex: bool) -> String {
    lhs(k, big_n, latex)
}

/// Signed terms `(negative, body)` of the expression, in display order.
fn terms(e: &FormFactorExpr, latex: bool) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut lower = e.lower_terms.clone();
    lower.sort_by_key(|l| l.k);
    for l in lower {
        if l.coeff.is_zero() {
            continue;
        }
        let neg = l.coeff.is_negative();
        let mag = l.coeff.abs();
        let body = match (l.k, latex) {
            (0, true) => latex_q(&mag),
            (0, false) => fmt_q(&mag),
            (k, true) if mag.is_one() => lower_name(k, e.big_n, true),
            (k, true) => format!("{} \\cdot {}", latex_q(&mag), lower_name(k, e.big_n, true)),
            (k, false) if mag.is_one() => lower_name(k, e.big_n, false),
            (k, false) => format!("{}·{}", fmt_q(&mag), lower_name(k, e.big_n, false)),
        };
        out.push((neg, body));
    }
    for (m, p) in e.c_polys.iter().enumerate() {
        let Some(fd) = factor_display(&p.poly) else { continue };
        let mut parts: Vec<String> = Vec::new();
        let tp = match fd.t_power {
            0 => None,
            1 => Some("t".to_string()),
            v => Some(if latex { format!("t^{{{v}}}") } else { format!("t^{v}") }),
        };
        match tp {
            // (t^v/d) for unit numerators in text mode
            Some(t) if !latex && fd.content.numer().is_one() && !fd.content.denom().is_one() => {
                parts.push(format!("({t}/{})", fd.content.denom()))
            }
            tp => {
                if !fd.content.is_one() {
                    parts.push(if latex { latex_q(&fd.content) } else { fmt_q(&fd.content) });
                }
                parts.extend(tp);
            }
        }
        match fd.t_plus_one {
            0 => {}
            1 => parts.push("(t+1)".into()),
            k => parts.push(if latex { format!("(t+1)^{{{k}}}") } else { format!("(t+1)^{k}") }),
        }
        if fd.rest.degree().unwrap_or(0) > 0 {
            parts.push(if latex { format!("({})", latex_poly(&fd.rest)) } else { format!("({})", fd.rest).replace(' ', "") });
        }
        parts.extend(f_monomial(e.big_n, e.n - m as i64, m as i64, latex));
        out.push((fd.negative, parts.join(if latex { " " } else { "·" })));
    }
    out
}

fn join_terms(ts: Vec<(bool, String)>, sep: &str) -> String {
    let mut s = String::new();
    for (i, (neg, body)) in ts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(&format!("{sep}- ")),
            (_, false) => s.push_str(&format!("{sep}+ ")),
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub trait Emitter: Send + Sync {
    fn name(&self) -> &'static str;
    fn expr(&self, e: &FormFactorExpr) -> Result<String>;
    fn series(&self, n: i64, big_n: i64, s: &Series) -> Result<String>;
}

pub struct Text;
pub struct Latex;
pub struct Json;
/// The stored-table syntax, readable back by the fixture parser.
pub struct Table;

fn series_text(s: &Series, latex: bool) -> String {
    let mut out = String::new();
    for (i, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = s.valuation() + i as i64;
        let sign = if c.is_negative() { " - " } else if out.is_empty() { "" } else { " + " };
        let sign = if out.is_empty() && c.is_negative() { "-" } else { sign };
        let mag = c.abs();
        let coeff = if latex { latex_q(&mag) } else { fmt_q(&mag) };
        let t = match (k, latex) {
            (0, _) => String::new(),
            (1, _) => " t".into(),
            (_, true) => format!(" t^{{{k}}}"),
            (_, false) => format!(" t^{k}"),
        };
        out.push_str(&format!("{sign}{coeff}{t}"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(&if latex { format!(" + O(t^{{{}}})", s.order()) } else { format!(" + O(t^{})", s.order()) });
    out
}

impl Emitter for Text {
    fn name(&self) -> &'static str {
        "text"
    }
    fn expr(&self, e: &FormFactorExpr) -> Result<String> {
        Ok(format!("{} = {}", lhs(e.n, e.big_n, false), join_terms(terms(e, false), " ")))
    }
    fn series(&self, n: i64, big_n: i64, s: &Series) -> Result<String> {
        Ok(format!("{} = {}", lhs(n, big_n, false), series_text(s, false)))
    }
}

impl Emitter for Latex {
    fn name(&self) -> &'static str {
        "latex"
    }
    fn expr(&self, e: &FormFactorExpr) -> Result<String> {
        let ts = terms(e, true);
        Ok(format!("{} &= {}", lhs(e.n, e.big_n, true), join_terms(ts, "\n  \\nonumber\\\\ &\\quad ")))
    }
    fn series(&self, n: i64, big_n: i64, s: &Series) -> Result<String> {
        Ok(format!("{} = {}", lhs(n, big_n, true), series_text(s, true)))
    }
}

impl Emitter for Json {
    fn name(&self) -> &'static str {
        "json"
    }
    fn expr(&self, e: &FormFactorExpr) -> Result<String> {
        serde_json::to_string_pretty(e).map_err(|x| Error::Json(x.to_string()))
    }
    fn series(&self, n: i64, big_n: i64, s: &Series) -> Result<String> {
        let v = serde_json::json!({
            "n": n,
            "N": big_n,
            "normalized": n % 2 == 1,
            "series": crate::arith::json::series_to_json(s),
        });
        serde_json::to_string_pretty(&v).map_err(|x| Error::Json(x.to_string()))
    }
}

impl Emitter for Table {
    fn name(&self) -> &'static str {
        "table"
    }
    fn expr(&self, e: &FormFactorExpr) -> Result<String> {
        let mut s = format!("table n={} N={}\n", e.n, e.big_n);
        for l in &e.lower_terms {
            s.push_str(&format!("lower {} : {}\n", l.k, fmt_q(&l.coeff)));
        }
        for (m, p) in e.c_polys.iter().enumerate() {
            if p.poly.is_zero() {
                continue;
            }
            let body = format!("{}", p.poly).replace(' ', "");
            s.push_str(&format!("term {} {} : {}\n", e.n - m as i64, m, body));
        }
        s.push_str("end\n");
        Ok(s)
    }
    fn series(&self, n: i64, big_n: i64, s: &Series) -> Result<String> {
        Text.series(n, big_n, s)
    }
}

pub fn emitters() -> Vec<Box<dyn Emitter>> {
    vec![Box::new(Text), Box::new(Latex), Box::new(Json), Box::new(Table)]
}

pub fn emitter(name: &str) -> Result<Box<dyn Emitter>> {
    emitters()
        .into_iter()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::UnknownName(format!("format {name:?}")))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::formfactor::fixtures::{lookup, parse_corpus};
    use crate::formfactor::form_factor;

    #[test]
    fn text_lines() {
        let e = lookup(2, 0).unwrap().to_expr();
        assert_eq!(Text.expr(&e).unwrap(), "f^(2)_{0,0} = (t/4)·F_0·F_1");
        let e = form_factor(3, 1).unwrap();
        let l = Latex.expr(&e).unwrap();
        assert!(l.contains("\\frac{3^{5}}{2^{9}} t^{3} F_{2}^{3}"), "{l}");
    }

    #[test]
    fn table_round_trip() {
        for (n, big_n) in [(2, 1), (3, 2), (4, 1)] {
            let e = form_factor(n, big_n).unwrap();
            let back = parse_corpus(&Table.expr(&e).unwrap()).unwrap();
            assert_eq!(back[0].to_expr().c_polys, e.c_polys);
            assert_eq!(back[0].lower, e.lower_terms);
        }
    }

    #[test]
    fn json_round_trip() {
        let e = form_factor(4, 1).unwrap();
        let s = Json.expr(&e).unwrap();
        let back: FormFactorExpr = serde_json::from_str(&s).unwrap();
        assert_eq!(&back, e.as_ref());
    }
}
