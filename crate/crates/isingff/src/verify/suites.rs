use super::{Config, Suite, Task};
use crate::arith::rational::{fmt_q, q, qi, Q};
use crate::arith::RatFunc;
use crate::diffop::coupled::{CoupledSystem, SystemSpec, C2_SYSTEM, C2_SYSTEM_PRINTED, C3_SYSTEM, C3_SYSTEM_PRINTED};
use crate::diffop::identities::{run_identity, IDENTITIES};
use crate::diffop::odes::ODES;
use crate::diffop::recur::{recursion_checks, Normalized};
use crate::error::Result;
use crate::formfactor::alt::{cancellation_report, expected_leading};
use crate::formfactor::c4::c4_solve;
use crate::formfactor::fixtures::{check_table, corpus, CheckKind};
use crate::formfactor::{assemble, c2, c3};
use crate::hyper::{wronskian_power_residual, wronskian_residual};
use crate::oracle;
use crate::report::Check;
use crate::seq;

fn task(f: impl Fn() -> Vec<Check> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

/// A task whose body may fail; an error becomes one failed row.
fn fallible(name: String, f: impl Fn() -> Result<Vec<Check>> + Send + Sync + 'static) -> Task {
    task(move || f().unwrap_or_else(|e| vec![Check::check(name.clone(), false, format!("error: {e}"))]))
}

fn first_diff(a: &crate::arith::Series, b: &crate::arith::Series, order: i64) -> Option<i64> {
    (0..order).find(|&j| a.coeff(j) != b.coeff(j))
}

pub struct Fixtures;

impl Suite for Fixtures {
    fn name(&self) -> &'static str {
        "fixtures"
    }

    fn about(&self) -> &'static str {
        "stored tables against the construction (N >= 1) or the integral series (N = 0)"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let keep = cfg.big_n;
        corpus()
            .iter()
            .filter(|t| keep.map_or(true, |(a, b)| (a..=b).contains(&t.big_n)))
            .map(|t| {
                let (n, big_n) = (t.n, t.big_n);
                let name = format!("f^({n}) N={big_n} table");
                fallible(name.clone(), move || {
                    let t = corpus().iter().find(|x| x.n == n && x.big_n == big_n).expect("table listed");
                    let c = check_table(t)?;
                    let how = match &c.kind {
                        CheckKind::Constructed => "constructed expression".to_string(),
                        CheckKind::Oracle { order } => format!("integral series through t^{}", order - 1),
                        CheckKind::ParseOnly => "parsed; no construction at this n".to_string(),
                    };
                    let detail = if c.mismatches.is_empty() {
                        format!("{how}: all coefficients equal, palindromic {}", c.palindromic)
                    } else {
                        format!("{how}: {} mismatches, first {:?}", c.mismatches.len(), c.mismatches[0])
                    };
                    let mut out = vec![Check::check(name.clone(), c.palindromic && c.mismatches.is_empty(), detail)];
                    if let Some(r) = &c.erratum {
                        out.push(Check::finding(
                            format!("f^({n}) N={big_n} table as displayed, terms {:?}", r.terms),
                            !r.refuted,
                            r.witness.clone(),
                        ));
                        out.push(Check::check(format!("f^({n}) N={big_n} displayed form refuted"), r.refuted, r.witness.clone()));
                    }
                    Ok(out)
                })
            })
            .collect()
    }
}

pub struct Oracle;

impl Suite for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn about(&self) -> &'static str {
        "assembled series against the exact integral expansion"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let mut out = Vec::new();
        for n in cfg.n_in(2, 4) {
            let ns = if n == 4 { cfg.big_n_in(1, 1) } else { cfg.big_n_in(0, 4) };
            for big_n in ns {
                let order = cfg.order.unwrap_or(if n == 4 { 8 } else { 2 * big_n + 8 });
                let name = format!("f^({n}) N={big_n} equals the integral through t^{}", order - 1);
                out.push(fallible(name.clone(), move || {
                    let a = assemble(n, big_n, order)?;
                    let b = oracle::oracle_f(n, big_n, order)?;
                    let d = first_diff(&a, &b, order);
                    let detail = match d {
                        None => format!("{order} coefficients equal"),
                        Some(j) => format!("t^{j}: assembled {} vs integral {}", fmt_q(&a.coeff(j)), fmt_q(&b.coeff(j))),
                    };
                    Ok(vec![Check::check(name.clone(), d.is_none(), detail)])
                }));
            }
        }
        out
    }
}

pub struct Leading;

/// The displayed small-`t` laws: exponent (normalized for odd `n`) and coefficient.
fn displayed_leading(n: i64, big_n: i64) -> Option<(i64, Q)> {
    let l = seq::lambda(big_n + 1);
    match n {
        2 => Some((big_n + 1, &l * &l / qi(2 * big_n + 1))),
        3 => Some((big_n + 2, &l * &l * &l / qi(2 * (2 * big_n + 1) * (big_n + 2) * (big_n + 2)))),
        _ => None,
    }
}

impl Suite for Leading {
    fn name(&self) -> &'static str {
        "leading"
    }

    fn about(&self) -> &'static str {
        "first nonzero term against the displayed laws and the Selberg evaluation"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let mut out = Vec::new();
        for n in cfg.n_in(2, 4) {
            let ns = if n == 4 { cfg.big_n_in(1, 2) } else { cfg.big_n_in(0, 6) };
            for big_n in ns {
                let name = format!("f^({n}) N={big_n} leading term");
                out.push(fallible(name.clone(), move || {
                    let (e, c) = expected_leading(n, big_n)?;
                    let s = assemble(n, big_n, e + 1)?;
                    let got = s.leading();
                    let show = |x: &Option<(i64, Q)>| match x {
                        Some((e, c)) => format!("{} t^{e}", fmt_q(c)),
                        None => "none".into(),
                    };
                    let mut rows = vec![Check::check(
                        format!("{name} matches the Selberg evaluation"),
                        got == Some((e, c.clone())),
                        format!("assembled {} vs Selberg {}", show(&got), show(&Some((e, c)))),
                    )];
                    if let Some(d) = displayed_leading(n, big_n) {
                        rows.push(Check::check(
                            format!("{name} matches the small-t law"),
                            got == Some(d.clone()),
                            format!("assembled {} vs law {}", show(&got), show(&Some(d))),
                        ));
                    }
                    Ok(rows)
                }));
            }
        }
        out
    }
}

pub struct Wronskian;

impl Suite for Wronskian {
    fn name(&self) -> &'static str {
        "wronskian"
    }

    fn about(&self) -> &'static str {
        "u1(N)u2(N+1) - β u2(N)u1(N+1) = t^(N+2) and its powers"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let (plo, phi) = cfg.powers.unwrap_or((2, 4));
        let mut out = Vec::new();
        for big_n in cfg.big_n_in(1, 6) {
            let order = cfg.order.unwrap_or(big_n + 11);
            let name = format!("Wronskian N={big_n}");
            out.push(fallible(name.clone(), move || {
                let r = wronskian_residual(big_n, order)?;
                Ok(vec![Check::check(
                    name.clone(),
                    r.is_zero() && r.order() >= order,
                    format!("residual zero through t^{} in both channels", r.order() - 1),
                )])
            }));
            for p in plo..=phi {
                let name = format!("Wronskian power {p} N={big_n}");
                out.push(fallible(name.clone(), move || {
                    let r = wronskian_power_residual(big_n, p, order)?;
                    Ok(vec![Check::check(
                        name.clone(),
                        r.is_zero() && r.order() >= order,
                        format!("residual zero through t^{}", r.order() - 1),
                    )])
                }));
            }
        }
        out
    }
}

pub struct Odes;

fn system_rows(spec: &'static SystemSpec, big_n: i64, literal: bool) -> Result<Vec<Check>> {
    let unknowns: Vec<RatFunc> = if spec.unknowns == 3 {
        (0..3).map(|m| Ok(RatFunc::poly(c2::c2_poly(big_n, m)?.poly))).collect::<Result<_>>()?
    } else {
        c3::c3_polys(big_n)?.into_iter().map(|p| RatFunc::poly(p.poly)).collect()
    };
    let sys = CoupledSystem::build(spec, big_n)?;
    let res = sys.residuals(&unknowns);
    Ok(sys
        .labels
        .iter()
        .zip(res)
        .map(|(l, r)| {
            let name = format!("{} {l} N={big_n}", spec.name);
            let detail = if r.is_zero() { "residual zero".to_string() } else { format!("residual {r}") };
            if literal {
                Check::finding(name, r.is_zero(), detail)
            } else {
                Check::check(name, r.is_zero(), detail)
            }
        })
        .collect())
}

impl Suite for Odes {
    fn name(&self) -> &'static str {
        "ode"
    }

    fn about(&self) -> &'static str {
        "inhomogeneous ODEs, coefficient recursions, sum rules and coupled systems"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let mut out = Vec::new();
        for big_n in cfg.big_n_in(1, 4) {
            for spec in ODES {
                let name = format!("{} N={big_n}", spec.name);
                out.push(fallible(name.clone(), move || {
                    let r = spec.residual(big_n, false)?;
                    let mut rows = vec![Check::check(
                        name.clone(),
                        r.is_zero(),
                        if r.is_zero() { "Ω C = I exactly".to_string() } else { format!("residual {r}") },
                    )];
                    if spec.printed_rhs.is_some() {
                        let p = spec.residual(big_n, true)?;
                        rows.push(Check::finding(
                            format!("{} with the displayed right-hand side N={big_n}", spec.name),
                            p.is_zero(),
                            format!("Ω C - I = {p}"),
                        ));
                    }
                    Ok(rows)
                }));
            }
            out.push(fallible(format!("recursions N={big_n}"), move || recursion_checks(big_n)));
            for (spec, literal) in [(&C2_SYSTEM, false), (&C2_SYSTEM_PRINTED, true), (&C3_SYSTEM, false), (&C3_SYSTEM_PRINTED, true)] {
                out.push(fallible(format!("{} N={big_n}", spec.name), move || system_rows(spec, big_n, literal)));
            }
        }
        out
    }
}

pub struct Operators;

impl Suite for Operators {
    fn name(&self) -> &'static str {
        "operators"
    }

    fn about(&self) -> &'static str {
        "symmetric powers, homomorphisms, decompositions and intertwiners"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let mut out = Vec::new();
        for id in IDENTITIES {
            let ns: Vec<i64> = match cfg.big_n {
                Some((a, b)) => (a.max(id.range.0)..=b.min(id.range.1)).collect(),
                None => (id.range.0..=id.range.1).collect(),
            };
            for big_n in ns {
                out.push(task(move || run_identity(id, big_n)));
            }
        }
        out
    }
}

pub struct Cancellation;

fn cancellation_rows(n: i64, big_n: i64) -> Result<Vec<Check>> {
    let r = cancellation_report(n, big_n)?;
    let lead = match (&r.first_exponent, &r.first_coeff) {
        (Some(e), Some(c)) => format!("{} t^{e}", fmt_q(c)),
        _ => "none".into(),
    };
    Ok(vec![
        Check::check(format!("f^({n}) N={big_n} vanishes through t^{}", r.through), r.zero_through, format!("first term {lead}")),
        Check::check(
            format!("f^({n}) N={big_n} first term is the Selberg value"),
            r.passed(),
            format!("{lead} vs {} t^{}", fmt_q(&r.expected_coeff), r.expected_exponent),
        ),
    ])
}

impl Suite for Cancellation {
    fn name(&self) -> &'static str {
        "cancellation"
    }

    fn about(&self) -> &'static str {
        "low-order cancellation of the assembled series"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let mut out = Vec::new();
        for n in cfg.n_in(2, 4) {
            let ns = if n == 4 { cfg.big_n_in(1, 4) } else { cfg.big_n_in(1, 6) };
            for big_n in ns {
                out.push(fallible(format!("f^({n}) N={big_n} cancellation"), move || cancellation_rows(n, big_n)));
            }
        }
        out
    }
}

pub struct ScaleUp;

impl Suite for ScaleUp {
    fn name(&self) -> &'static str {
        "scaleup"
    }

    fn about(&self) -> &'static str {
        "f^(4) construction for larger N, checked by cancellation and the Selberg value"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        cfg.big_n_in(1, 10)
            .into_iter()
            .map(|big_n| {
                fallible(format!("f^(4) N={big_n}"), move || {
                    let s = c4_solve(big_n)?;
                    let mut rows = vec![
                        Check::check(
                            format!("C^(4) N={big_n} palindromic and log-free"),
                            s.log_free && s.polys.iter().all(|p| p.is_palindromic()),
                            format!("K̄ = {}, K0 = {}, K1 = {}", fmt_q(&s.kbar), fmt_q(&s.k0), fmt_q(&s.k1)),
                        ),
                        Check::check(
                            format!("K̄ N={big_n} equals N(N+2)/8"),
                            s.kbar == q(big_n * (big_n + 2), 8),
                            fmt_q(&s.kbar),
                        ),
                    ];
                    rows.extend(cancellation_rows(4, big_n)?);
                    Ok(rows)
                })
            })
            .collect()
    }
}

pub struct Findings;

fn andef_rows(big_n: i64) -> Result<Vec<Check>> {
    let mut bad = None;
    for n in 0..big_n {
        let (a, b) = (seq::a_coeff(big_n, n)?, seq::a_coeff_alt(big_n, n));
        if a != b && bad.is_none() {
            bad = Some((n, a, b));
        }
    }
    let detail = match &bad {
        None => format!("both forms agree for n < {big_n}"),
        Some((n, a, b)) => format!("n={n}: first form {} vs second form {}", fmt_q(a), fmt_q(b)),
    };
    Ok(vec![Check::finding(format!("second form of a_n(N) N={big_n}"), bad.is_none(), detail)])
}

fn harmonic_rows(big_n: i64) -> Result<Vec<Check>> {
    let conv = (0..big_n).map(|k| Ok(seq::a_coeff(big_n, k)? * seq::a_coeff(big_n, big_n - 1 - k)?)).sum::<Result<Q>>()?;
    let l = seq::lambda(big_n);
    let closed = &l * &l * qi(2 * big_n) * seq::harmonic_partial(&q(1, 2), big_n);
    let coeff = Normalized::c2(big_n, 2)?.c(big_n - 1);
    Ok(vec![
        Check::check(
            format!("c^(2)_(2;N-1) equals the convolution Σ a_k a_(N-1-k) N={big_n}"),
            coeff == conv,
            format!("{} vs {}", fmt_q(&coeff), fmt_q(&conv)),
        ),
        Check::finding(
            format!("c^(2)_(2;N-1) = 2N λ_N^2 H_N(1/2) N={big_n}"),
            conv == closed,
            format!("convolution {} vs closed form {}", fmt_q(&conv), fmt_q(&closed)),
        ),
    ])
}

fn c31_rows(big_n: i64) -> Result<Vec<Check>> {
    let (mid, claimed) = (c3::c31_middle(big_n)?, c3::c31_middle_claimed(big_n)?);
    Ok(vec![Check::finding(
        format!("closed form of the middle coefficient of C^(3)_1 N={big_n}"),
        mid == claimed,
        format!("fixed by cancellation {} vs closed form {}", fmt_q(&mid), fmt_q(&claimed)),
    )])
}

impl Suite for Findings {
    fn name(&self) -> &'static str {
        "findings"
    }

    fn about(&self) -> &'static str {
        "displayed closed forms reported with witnesses; never fatal unless a cross-check breaks"
    }

    fn tasks(&self, cfg: &Config) -> Vec<Task> {
        let mut out = Vec::new();
        for big_n in cfg.big_n_in(1, 6) {
            out.push(fallible(format!("a_n(N) forms N={big_n}"), move || andef_rows(big_n)));
            out.push(fallible(format!("H_N(1/2) form N={big_n}"), move || harmonic_rows(big_n)));
            out.push(fallible(format!("C^(3)_1 middle N={big_n}"), move || c31_rows(big_n)));
        }
        out
    }
}
