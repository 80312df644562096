use proptest::prelude::*;

use pn_blowup::chow::{chi_line, ChowClass};
use pn_blowup::les::{DimInterval, Solver, SolverOptions};
use pn_blowup::projcoh::{h_line, h_omega};
use pn_blowup::sections::SubKind;
use pn_blowup::sheafdag::{Registry, SheafExpr};

fn leaf() -> impl Strategy<Value = SheafExpr> {
    prop_oneof![
        (-6i64..=6, -6i64..=6).prop_map(|(p, q)| SheafExpr::line(p, q)),
        (0usize..4, -6i64..=6, -6i64..=6).prop_map(|(l, p, q)| SheafExpr::omega(l, p, q)),
        (-4i64..=4).prop_map(|m| SheafExpr::push(SubKind::Wp, m)),
        (-4i64..=4).prop_map(|m| SheafExpr::push(SubKind::Kappa, m)),
    ]
}

fn expr() -> impl Strategy<Value = SheafExpr> {
    leaf().prop_recursive(3, 16, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..4).prop_map(SheafExpr::sum),
            (inner, -3i64..=3, -3i64..=3).prop_map(|(e, a, b)| e.twist(a, b)),
        ]
    })
}

fn class() -> impl Strategy<Value = ChowClass> {
    prop::collection::vec(-3i64..=3, 3).prop_map(|c| {
        let n = 5;
        let a = ChowClass::scalar(n, num_rational::BigRational::from_integer(c[0].into()));
        &(&a + &ChowClass::xi(n).scale_int(c[1])) + &ChowClass::alpha(n).pow(2).scale_int(c[2])
    })
}

proptest! {
    #[test]
    fn normal_form_is_idempotent(e in expr()) {
        let once = e.normalize();
        prop_assert_eq!(once.normalize(), once.clone());
        let reg = Registry::new(5);
        let r = reg.normalize(&e).unwrap();
        prop_assert_eq!(reg.normalize(&r).unwrap(), r);
    }

    #[test]
    fn twists_compose(e in expr(), a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
        let reg = Registry::new(5);
        let lhs = reg.normalize(&e.twist(a, b).twist(c, d)).unwrap();
        let rhs = reg.normalize(&e.twist(a + c, b + d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn serre_duality_for_lines(n in 3usize..=7, p in -8i64..=8, q in -8i64..=8) {
        let nn = n as i64;
        for i in 0..=nn {
            prop_assert_eq!(h_line(i, p, q, n), h_line(nn - i, -2 - p, 1 - nn - q, n));
        }
        let alt: i64 = (0..=nn).map(|i| if i % 2 == 0 { 1 } else { -1 } * h_line(i, p, q, n)).sum();
        prop_assert_eq!(chi_line(p, q, n).unwrap(), alt.into());
    }

    #[test]
    fn serre_duality_for_differentials(n in 3usize..=6, l in 0usize..6, p in -6i64..=6, q in -6i64..=6) {
        prop_assume!(l < n);
        let nn = n as i64;
        for i in 0..=nn {
            prop_assert_eq!(h_omega(i, l, p, q, n), h_omega(nn - i, n - 1 - l, -2 - p, 1 - q, n));
        }
    }

    #[test]
    fn chow_ring_laws(a in class(), b in class(), c in class()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn split_sums_are_recovered(terms in prop::collection::vec((-5i64..=5, -5i64..=5), 1..4)) {
        let n = 4;
        let reg = Registry::new(n);
        let e = SheafExpr::sum(terms.iter().map(|&(p, q)| SheafExpr::line(p, q)).collect());
        let mut s = Solver::new(&reg, SolverOptions::default());
        let h = s.h_all(&e).unwrap();
        for (i, v) in h.iter().enumerate() {
            let truth: i64 = terms.iter().map(|&(p, q)| h_line(i as i64, p, q, n)).sum();
            prop_assert_eq!(*v, DimInterval::exact(truth));
        }
    }

    #[test]
    fn interval_sums_contain_sums(a in 0i64..20, w1 in 0i64..5, b in 0i64..20, w2 in 0i64..5, x in 0i64..5, y in 0i64..5) {
        let i = DimInterval::new(a, a + w1);
        let j = DimInterval::new(b, b + w2);
        let (u, v) = (a + x.min(w1), b + y.min(w2));
        prop_assert!(i.add(&j).contains(u + v));
        prop_assert!(i.sub(&j).contains(u - v));
    }
}
