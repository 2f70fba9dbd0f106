use isingff::arith::json::{series_from_json, series_to_json};
use isingff::arith::logseries::LogSeries;
use isingff::arith::palin::palin_reflect;
use isingff::arith::rational::{q, qi, Q};
use isingff::arith::{Poly, Series};
use isingff::formfactor::{form_factor, FormFactorExpr};
use isingff::seq;
use proptest::prelude::*;

const ORDER: i64 = 8;

fn rat() -> impl Strategy<Value = Q> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| q(n, d))
}

fn series() -> impl Strategy<Value = Series> {
    (0i64..3, prop::collection::vec(rat(), 0..7)).prop_map(|(v, c)| Series::new(v, c, ORDER))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_deg + 1).prop_map(Poly::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn reflect_is_an_involution(p in poly(6), extra in 0i64..4) {
        let d = p.degree().unwrap_or(0) as i64 + extra;
        let r = palin_reflect(&p, d).unwrap();
        prop_assert_eq!(palin_reflect(&r, d).unwrap(), p);
    }

    #[test]
    fn log_free_product_rule(a in series(), b in series()) {
        let (la, lb) = (LogSeries::analytic_only(a.clone()), LogSeries::analytic_only(b.clone()));
        let lhs = la.mul(&lb).derivative();
        let rhs = la.derivative().mul(&lb).add(&la.mul(&lb.derivative()));
        let o = lhs.order().min(rhs.order());
        prop_assert_eq!(lhs.truncate(o), rhs.truncate(o));
        prop_assert!(lhs.log_free());
    }

    #[test]
    fn series_json_round_trip(a in series()) {
        prop_assert_eq!(series_from_json(&series_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn a_term_ratio(big_n in 2i64..14, n in 0i64..12) {
        prop_assume!(n + 1 < big_n);
        let ratio = (q(1, 2) + qi(n)) * (q(1, 2) - qi(big_n) + qi(n)) / ((qi(1 - big_n + n)) * qi(n + 1));
        prop_assert_eq!(seq::a_coeff(big_n, n + 1).unwrap(), seq::a_coeff(big_n, n).unwrap() * ratio);
    }

    #[test]
    fn b_term_ratio(big_n in 0i64..14, n in 0i64..14) {
        let ratio = (q(1, 2) + qi(n)) * (q(1, 2) + qi(big_n + n)) / (qi(big_n + 1 + n) * qi(n + 1));
        prop_assert_eq!(seq::b_coeff(big_n, n + 1), seq::b_coeff(big_n, n) * ratio);
    }
}

#[test]
fn expression_json_round_trip() {
    for (n, big_n) in [(2, 1), (3, 2), (4, 1), (5, 1)] {
        let e = form_factor(n, big_n).unwrap();
        let text = serde_json::to_string(&*e).unwrap();
        let back: FormFactorExpr = serde_json::from_str(&text).unwrap();
        assert_eq!(back, *e, "n={n} N={big_n}");
    }
}

#[test]
fn selberg_specializes_to_one_fold_laws() {
    for big_n in 0..=12 {
        let l1 = seq::lambda(big_n + 1);
        let (k2, v2) = isingff::formfactor::alt::expected_leading(2, big_n).unwrap();
        assert_eq!((k2, v2), (big_n + 1, &l1 * &l1 / qi(2 * big_n + 1)), "N={big_n}");
        let (k3, v3) = isingff::formfactor::alt::expected_leading(3, big_n).unwrap();
        let d3 = qi(2 * (2 * big_n + 1) * (big_n + 2) * (big_n + 2));
        assert_eq!((k3, v3), (big_n + 2, &l1 * &l1 * &l1 / d3), "N={big_n}");
    }
}
