//! Worked examples for each module. Printed values are checked as literals; derived values are
//! checked against an oracle computed here.

use num_bigint::BigInt;
use num_rational::BigRational;

use pn_blowup::beilinson::{c_terms, contribution_tables, monad_for, monad_from_table, query_table, query_twists};
use pn_blowup::chow::{chern_tangent, chi_line, charge, delta, hrr_chi, slope, todd_tangent, ChowClass, Monomial, Polarization};
use pn_blowup::instanton::{
    build_elementary, build_even4, build_odd, check, moduli_dimension, restrict_to_divisor, ulrich_check, CheckOptions,
    Divisor, InstantonVerdict,
};
use pn_blowup::les::{CohTable, DimInterval, Key, Solver, SolverOptions};
use pn_blowup::projcoh::{exceptional_collection, h_line, h_line_all, h_omega};
use pn_blowup::sections::{h0_ideal, h0_line_model, restrict_matrix, CoordinateMode, SectionBasis, SubKind, SubvarietySpec};
use pn_blowup::sheafdag::{Provenance, Registry, SheafExpr};
use pn_blowup::stability::{region, Certifier, Verdict};
use pn_blowup::Error;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn binom(top: i64, k: i64) -> i64 {
    if k < 0 || top < k {
        return 0;
    }
    (0..k).fold(1i64, |acc, j| acc * (top - j) / (j + 1))
}

fn xi(n: usize) -> ChowClass {
    ChowClass::xi(n)
}

fn alpha(n: usize) -> ChowClass {
    ChowClass::alpha(n)
}

fn wp_kappa(n: usize) -> Vec<SubvarietySpec> {
    vec![SubvarietySpec::new(SubKind::Wp, n).unwrap(), SubvarietySpec::new(SubKind::Kappa, n).unwrap()]
}

fn q1_q2() -> Vec<SubvarietySpec> {
    vec![SubvarietySpec::new(SubKind::Q1, 4).unwrap(), SubvarietySpec::new(SubKind::Q2, 4).unwrap()]
}

/// Reduction in `Q[ξ, α]/(α^n, ξ² − αξ)` done on exponent pairs: `ξ^k α^l ↦ ξ^{k+l}` for `k ≥ 1`.
fn reduce_monomial(n: usize, k: usize, l: usize) -> Option<Monomial> {
    if k == 0 {
        if l == 0 {
            Some(Monomial::One)
        } else if l < n {
            Some(Monomial::Alpha(l))
        } else {
            None
        }
    } else if k + l <= n {
        Some(Monomial::Xi(k + l))
    } else {
        None
    }
}

#[test]
fn chow_products() {
    let n = 5;
    assert_eq!(&xi(n) * &alpha(n), xi(n).pow(2));
    assert!(alpha(n).pow(5).is_zero());
    assert_eq!(xi(n).pow(5).degree(), int(1));
    let h = &xi(n) + &alpha(n);
    let h4 = h.pow(4);
    // oracle: binomial expansion of (ξ + α)^4 reduced monomial by monomial
    let mut expect = ChowClass::zero(n);
    for j in 0..=4usize {
        if let Some(m) = reduce_monomial(n, 4 - j, j) {
            let mut term = ChowClass::monomial(n, m);
            term = term.scale_int(binom(4, j as i64));
            expect = &expect + &term;
        }
    }
    assert_eq!(h4, expect);
    assert_eq!(h4, &xi(n).pow(4).scale_int(15) + &alpha(n).pow(4));
    assert_eq!((&alpha(n) * &h4).degree(), int(15));
    assert_eq!((&xi(n) * &h4).degree(), int(16));
}

#[test]
fn tangent_classes() {
    let c1 = chern_tangent(3).part(1);
    assert_eq!(c1, &alpha(3).scale_int(2) + &xi(3).scale_int(2));
    for n in [4usize, 5, 7] {
        let c1 = chern_tangent(n).part(1);
        assert_eq!(c1, ChowClass::divisor(n, 2, n as i64 - 1));
        assert_eq!(todd_tangent(n).part(0), ChowClass::one(n));
    }
}

#[test]
fn euler_characteristics() {
    for n in 3..=7 {
        assert_eq!(chi_line(0, 0, n).unwrap(), BigInt::from(1));
        assert_eq!(hrr_chi(&ChowClass::one(n)), int(1));
    }
    assert_eq!(chi_line(1, -1, 5).unwrap(), BigInt::from(1));
    assert_eq!(h_line_all(1, -1, 5), vec![1, 0, 0, 0, 0, 0]);
    for n in [3usize, 4, 5, 7] {
        for q in -6..=6 {
            assert_eq!(chi_line(-1, q, n).unwrap(), BigInt::from(0));
            assert!(h_line_all(-1, q, n).iter().all(|&h| h == 0));
        }
    }
    for n in 3..=7usize {
        for p in -6..=6 {
            for q in -6..=6 {
                let ch = ChowClass::divisor(n, p, q).exp();
                assert_eq!(hrr_chi(&ch), BigRational::from_integer(chi_line(p, q, n).unwrap()));
            }
        }
    }
}

#[test]
fn prototype_euler_characteristic() {
    let c = build_odd(5).unwrap();
    let chi = c.registry.chi_of(&c.sheaf).unwrap();
    // last column of the table is all zero
    assert_eq!(chi, BigInt::from(0));
    let ch = c.registry.chern_of(&c.sheaf).unwrap();
    assert_eq!(ch.part(1), alpha(5).scale_int(-2));
    assert_eq!(ch.part(2), xi(5).pow(2));
}

#[test]
fn slopes_and_charges() {
    let l = Polarization::standard(5).unwrap();
    assert_eq!(l.twist(), (1, 1));
    assert_eq!(slope(&alpha(5).scale_int(-2), 2, &l), int(-15));
    assert_eq!(charge(&xi(5).pow(2), &l), int(8));
    for n in [5usize, 7, 9] {
        let l = Polarization::standard(n).unwrap();
        let expect = ((n as i64 - 1) / 2).pow(n as u32 - 2);
        assert_eq!(charge(&xi(n).pow(2), &l), int(expect));
    }
}

#[test]
fn line_bundle_cohomology() {
    for n in 3..=7usize {
        for k in 0..n as i64 {
            assert!(h_line_all(0, -k, n).iter().all(|&h| h == 0) || k == 0);
        }
        for m in 2 - n as i64..=1 {
            assert!(h_line_all(-1, m, n).iter().all(|&h| h == 0));
        }
    }
    let direct: i64 = (0..=3).map(|k| binom(5 + k - 1 + 1, 4)).sum();
    assert_eq!(direct, 5 + 15 + 35 + 70);
    assert_eq!(h_line(0, 3, 1, 5), 125);
}

#[test]
fn differential_cohomology() {
    for n in [4usize, 5] {
        for l in 0..n {
            assert_eq!(h_omega(l as i64, l, 0, 0, n), 1);
        }
    }
    // Bott on P⁴: h⁰(Ω¹(k)) = C(k + 4 − 1, k)·C(k − 1, 1), which is 10 at k = 2
    let bott = |k: i64| binom(k + 3, k) * binom(k - 1, 1);
    assert_eq!(bott(2), 10);
    for k in 2..=5 {
        assert_eq!(h_omega(0, 1, 0, k, 5), bott(k));
    }
    for n in [3usize, 4, 5] {
        for l in 0..n {
            for q in -5..=5 {
                for i in 0..=n as i64 {
                    assert_eq!(h_omega(i, l, -1, q, n), 0);
                }
            }
        }
    }
}

#[test]
fn exceptional_collections() {
    let c5 = exceptional_collection(5);
    assert_eq!(
        c5.bundles,
        vec![(-1, -3), (-1, -2), (-1, -1), (-1, 0), (-1, 1), (0, -4), (0, -3), (0, -2), (0, -1), (0, 0)]
    );
    assert!(c5.verified());
    assert_eq!(exceptional_collection(3).bundles.len(), 6);
    assert_eq!(c5.structure_sheaf_h0, 1);
}

#[test]
fn section_bases() {
    for n in 3..=7 {
        assert_eq!(SectionBasis::new(0, 0, n).len(), 1);
    }
    assert_eq!(SectionBasis::new(2, 0, 5).len(), 1 + 5 + 15);
    assert_eq!(h0_line_model(2, -1, 4), 5);
}

#[test]
fn ideal_sections() {
    let x = wp_kappa(5);
    let m = restrict_matrix(&x, 1, -1, CoordinateMode::Fixed).unwrap();
    assert_eq!(m.target_dims.iter().map(|t| t.1).collect::<Vec<_>>(), vec![1, 0]);
    assert_eq!(m.matrix.nullity(), 0);
    assert_eq!(h0_ideal(&x, 0, 1, CoordinateMode::Fixed).unwrap(), 0);
    let m = restrict_matrix(&q1_q2(), 2, -1, CoordinateMode::Fixed).unwrap();
    assert_eq!((m.source_dim, m.matrix.rows()), (5, 4));
    assert!(m.matrix.nullity() >= 1);
    // 21 sections, evaluation onto an 11-dimensional target of full rank
    let m = restrict_matrix(&x, 2, 0, CoordinateMode::Fixed).unwrap();
    assert_eq!(m.source_dim, 21);
    assert_eq!(m.matrix.rows(), 11);
    assert_eq!(m.source_dim - m.matrix.rank(), 10);
    assert_eq!(h0_ideal(&x, 2, 0, CoordinateMode::Fixed).unwrap(), 10);
    for p in -15..=-1 {
        assert_eq!(h0_ideal(&x, 1 - p, p - 1, CoordinateMode::Fixed).unwrap(), 0);
    }
}

#[test]
fn generic_coordinates_agree() {
    let x = wp_kappa(5);
    for seed in [1u64, 7, 99] {
        assert_eq!(h0_ideal(&x, 2, 0, CoordinateMode::Random(seed)).unwrap(), 10);
    }
}

#[test]
fn serre_constructions() {
    let c = build_odd(5).unwrap();
    let r = c.registry.record("F-seq").unwrap();
    assert_eq!(r.provenance, Provenance::SerreConstruction);
    assert_eq!(r.sub, SheafExpr::line(0, 0));
    assert_eq!(r.quot, SheafExpr::ideal("X", 2, 0));
    let f = SheafExpr::named("F");
    assert_eq!(c.registry.chern_of(&f).unwrap().part(1), xi(5).scale_int(2));
    let c7 = build_odd(7).unwrap();
    assert_eq!(c7.registry.record("F-seq").unwrap().quot, SheafExpr::ideal("X", 2, 0));
    let e = build_even4().unwrap();
    assert_eq!(e.registry.record("F-seq").unwrap().quot, SheafExpr::ideal("X", 2, 1));
    let ch = e.registry.chern_of(&e.sheaf).unwrap();
    assert_eq!(ch.part(1), -&alpha(4));
    assert_eq!(ch.part(2), (&xi(4).pow(2) - &alpha(4).pow(2)).scale_int(2));
    assert_eq!(e.charge().unwrap(), int(2));
}

#[test]
fn hypotheses_are_checked() {
    let mut reg = Registry::new(5);
    reg.add_config("X", wp_kappa(5)).unwrap();
    assert!(matches!(reg.serre_construct("X", (1, 0), "F"), Err(Error::Hypothesis(_))));
}

#[test]
fn whitney_on_split_sum() {
    let reg = Registry::new(5);
    let e = SheafExpr::sum(vec![SheafExpr::line(1, 0), SheafExpr::line(-1, 0)]);
    let c = reg.chern_of(&e).unwrap();
    assert_eq!(c, &ChowClass::one(5) - &xi(5).pow(2));
}

#[test]
fn elementary_transforms() {
    for n in [5usize, 7] {
        let g = build_elementary(n).unwrap();
        let e = g.parent.clone().unwrap();
        let r = g.registry.record("G-seq").unwrap();
        assert_eq!(r.provenance, Provenance::ElementaryTransform);
        // c(E) = c(G)·c(O_℘) with c(O_℘) from its resolution
        let cg = g.registry.chern_of(&g.sheaf).unwrap();
        let ce = g.registry.chern_of(&e).unwrap();
        let cp = g.registry.chern_of(&SheafExpr::push(SubKind::Wp, 0)).unwrap();
        assert_eq!(ce, &cg * &cp);
        let base = build_odd(n).unwrap().charge().unwrap();
        assert!(g.charge().unwrap() > base);
        let [_, _, q] = r.twisted(2, 3);
        assert_eq!(g.registry.normalize(&q).unwrap(), SheafExpr::push(SubKind::Wp, 5));
    }
}

#[test]
fn prototype_entries() {
    let c = build_odd(5).unwrap();
    let mut s = Solver::new(&c.registry, SolverOptions::default());
    assert_eq!(s.h(&c.sheaf.twist(0, -4), 4).unwrap(), DimInterval::exact(6));
    for a in -3..=3 {
        for b in -3..=3 {
            for i in [2usize, 3] {
                assert_eq!(s.h(&c.sheaf.twist(a, b), i).unwrap(), DimInterval::exact(0), "h{i} at ({a},{b})");
            }
        }
    }
    let reg = Registry::new(5);
    let mut s = Solver::new(&reg, SolverOptions::default());
    assert_eq!(s.h(&SheafExpr::line(-5, -5), 5).unwrap(), DimInterval::exact(h_line(0, 3, 1, 5)));
    let twists: Vec<(i64, i64)> = (-6..=6).map(|q| (-1, q)).collect();
    let mut s = Solver::new(&reg, SolverOptions::default());
    let t = SheafExpr::line(0, 0);
    let tab = s.table(&t.twist(0, 0), &twists).unwrap();
    assert!(tab.rows.iter().all(|r| r.iter().all(|v| *v == DimInterval::exact(0))));
}

#[test]
fn prototype_table() {
    let c = build_odd(5).unwrap();
    let mut s = Solver::new(&c.registry, SolverOptions::default());
    let t = s.table(&c.sheaf, &exceptional_collection(5).bundles).unwrap();
    let nz: Vec<(usize, (i64, i64), i64)> = t.nonzero().into_iter().map(|(i, tw, v)| (i, tw, v.value().unwrap())).collect();
    let mut want = vec![(4, (-1, -3), 1), (4, (0, -4), 6), (4, (0, -3), 1), (1, (-1, 1), 1)];
    let mut got = nz.clone();
    want.sort();
    got.sort();
    assert_eq!(got, want);
    assert!(t.is_exact());
}

#[test]
fn divisor_restrictions_untwisted() {
    let c = build_odd(5).unwrap();
    let h = restrict_to_divisor(&c, Divisor::H, &[0], SolverOptions::default()).unwrap();
    assert!(h.rows[0].h.iter().all(|v| *v == DimInterval::exact(0)));
    let e = restrict_to_divisor(&c, Divisor::Exceptional, &[0], SolverOptions::default()).unwrap();
    let got: Vec<_> = e.rows[0].h.iter().map(|v| v.value()).collect();
    assert_eq!(got, vec![Some(1), Some(0), Some(0), Some(0), Some(0)]);
    let hk = restrict_to_divisor(&c, Divisor::H, &(-6..=6).collect::<Vec<_>>(), SolverOptions::default()).unwrap();
    assert!(hk.rows.iter().all(|r| r.h[2] == DimInterval::exact(0)));
}

#[test]
fn delta_bookkeeping() {
    let reg = Registry::new(5);
    let mut s = Solver::new(&reg, SolverOptions::default());
    for (p, q) in [(0, 0), (1, 2), (2, -1), (3, 1)] {
        let e = SheafExpr::line(p, q);
        let h = h_line_all(p, q, 5);
        assert!(h[2..].iter().all(|&x| x == 0));
        assert_eq!(s.value(&Key::delta(&e)).value().or_else(|| {
            s.expand(&e, 1).unwrap();
            s.solve().unwrap();
            s.value(&Key::delta(&e)).value()
        }), Some(h[0] - h[1]));
        assert_eq!(BigInt::from(h[0] - h[1]), chi_line(p, q, 5).unwrap());
    }
    let m = moduli_dimension(SolverOptions::default()).unwrap();
    assert_eq!(m.delta_ideal.engine, DimInterval::exact(10));
    assert!(m.delta_i2.engine.is_bounded());
    assert_eq!(m.delta_i2.printed, "-4");
    assert!(!m.delta_i2.trace.is_empty());
}

#[test]
fn region_membership() {
    let l = Polarization::standard(5).unwrap();
    let r = region(&l, int(-15), true);
    assert!(r.contains(1, -2));
    assert!(!r.contains(0, -1));
    assert!(r.on_boundary(0, -1));
    let l4 = Polarization::custom(4, 1, 1);
    let c = build_even4().unwrap();
    let mu = slope(&c.c1().unwrap(), 2, &l4);
    let r4 = region(&l4, mu, true);
    assert_eq!(r4.closed_form(), (BigRational::new((-1).into(), 2.into()), BigRational::new(8.into(), 7.into())));
    assert_eq!(delta((1, 0), &l4), BigInt::from(8));
}

#[test]
fn certificates() {
    let c = build_odd(5).unwrap();
    let mut cert = Certifier::new(&c.registry, SolverOptions::default());
    let out = cert.certify(&c.sheaf, &c.polarization, true).unwrap();
    assert_eq!(out.verdict, Verdict::SemistableCertified);
    assert!(out.explicit_cases() <= 40);
    assert!(out.coverage.window_uncovered.is_empty() && out.coverage.sample_uncovered.is_empty());
    let c7 = build_odd(7).unwrap();
    let mut cert = Certifier::new(&c7.registry, SolverOptions::default());
    assert_eq!(cert.certify(&c7.sheaf, &c7.polarization, true).unwrap().verdict, Verdict::SemistableCertified);
    let e = build_even4().unwrap();
    let mut cert = Certifier::new(&e.registry, SolverOptions::default());
    let out = cert.certify(&e.sheaf, &e.polarization, true).unwrap();
    assert_eq!(out.verdict, Verdict::Violation);
    let w = out.witness.unwrap();
    assert_eq!(w.theta, (1, -1));
    assert!(w.h0.lo.unwrap() >= 1);
}

#[test]
fn monad_terms() {
    let c = build_odd(5).unwrap();
    let t = query_table(&c.registry, &c.sheaf, SolverOptions::default()).unwrap();
    let plus = c_terms(&t, 1, 5).unwrap();
    assert_eq!(plus.summands.len(), 1);
    assert_eq!(plus.summands[0].multiplicity, 1);
    assert_eq!(plus.summands[0].bundle, SheafExpr::omega(3, 0, 3));
    let zero = c_terms(&t, 0, 5).unwrap();
    let mut bundles: Vec<(String, i64)> = zero.summands.iter().map(|s| (s.bundle.to_string(), s.multiplicity)).collect();
    bundles.sort();
    assert_eq!(bundles, vec![("O(0,−1)".to_string(), 6), ("O(−1,0)".to_string(), 1)]);
    let m = monad_for(&c.registry, &c.sheaf, SolverOptions::default()).unwrap();
    assert_eq!(m.to_string(), "0 → O(−1,−1) → O(−1,0) ⊕ O(0,−1)^6 → Ω^3(0,3) → 0");
}

#[test]
fn seven_dimensional_monad() {
    let c = build_odd(7).unwrap();
    let m = monad_for(&c.registry, &c.sheaf, SolverOptions::default()).unwrap();
    // oracle: term formulas instantiated at n = 7 from the table entries
    let t = &m.table;
    let n = 7usize;
    let get = |s: usize, tw: (i64, i64)| t.get(s, tw).and_then(|v| v.value()).unwrap();
    let mut expect_zero = 0;
    for (s, h, q) in [(0usize, 0usize, 0usize), (1, 0, 1), (1, 1, 0), (n - 1, 0, n - 1), (n - 1, 1, n - 2), (n, 1, n - 1)] {
        let tw = (-(h as i64), h as i64 - q as i64);
        expect_zero += get(s, tw);
    }
    let got_zero: i64 = m.zero.summands.iter().map(|s| s.multiplicity).sum();
    assert_eq!(got_zero, expect_zero);
    assert!(m.checks.rank && m.checks.chern && m.checks.euler);
    assert!(!m.minus.is_zero() && !m.zero.is_zero() && !m.plus.is_zero());
}

#[test]
fn monad_obstruction_is_reported() {
    let n = 5;
    let tw = query_twists(n);
    let mut rows = vec![vec![DimInterval::exact(0); tw.len()]; n + 1];
    let j = tw.iter().position(|t| *t == (0, 2 - n as i64)).unwrap();
    rows[n][j] = DimInterval::exact(1);
    let t = CohTable { sheaf: "Z".into(), n, columns: tw.iter().map(|t| format!("{t:?}")).collect(), rows, twists: tw };
    let reg = Registry::new(n);
    let r = monad_from_table(&reg, &SheafExpr::line(0, 0), t);
    assert!(matches!(r, Err(Error::MonadObstruction { degree: 2, .. })));
    let zero_table = query_table(&Registry::new(n), &SheafExpr::zero(), SolverOptions::default()).unwrap();
    for p in -3..=3 {
        assert!(c_terms(&zero_table, p, n).unwrap().is_zero());
    }
}

#[test]
fn index_tables() {
    for n in [5usize, 7] {
        let rows = |p| contribution_tables(p, n).into_iter().map(|r| (r.s, r.pairs)).collect::<Vec<_>>();
        assert_eq!(rows(0), vec![(0, vec![(0, 0)]), (1, vec![(0, 1), (1, 0)]), (n - 1, vec![(0, n - 1), (1, n - 2)]), (n, vec![(1, n - 1)])]);
        assert_eq!(rows(1), vec![(0, vec![]), (1, vec![(0, 0)]), (n - 1, vec![(0, n - 2), (1, n - 3)]), (n, vec![(0, n - 1), (1, n - 2)])]);
        assert_eq!(rows(-1), vec![(0, vec![(0, 1), (1, 0)]), (1, vec![(0, 2), (1, 1)]), (n - 1, vec![(1, n - 1)]), (n, vec![(0, n - 1), (1, n - 2)])]);
    }
}

#[test]
fn instanton_checks() {
    let opts = CheckOptions::default();
    let p5 = build_odd(5).unwrap();
    assert_eq!(p5.c1().unwrap(), alpha(5).scale_int(-2));
    assert_eq!(p5.charge().unwrap(), int(8));
    assert_eq!(check(&p5, &opts).unwrap().verdict, InstantonVerdict::Instanton);
    assert_eq!(build_odd(7).unwrap().charge().unwrap(), int(243));
    assert_eq!(build_odd(9).unwrap().charge().unwrap(), int(16384));
    let e = check(&build_even4().unwrap(), &opts).unwrap();
    assert!(e.cohomology_passes());
    assert_eq!(e.stability.verdict, Verdict::Violation);
    assert_eq!(e.verdict, InstantonVerdict::NotInstanton);
    let g = check(&build_elementary(5).unwrap(), &opts).unwrap();
    assert!(g.cohomology_passes());
}

#[test]
fn even_example_details() {
    let c = build_even4().unwrap();
    let c2 = c.c2().unwrap();
    assert_eq!(c2, (&xi(4).pow(2) - &alpha(4).pow(2)).scale_int(2));
    let mut s = Solver::new(&c.registry, SolverOptions::default());
    assert!(s.h(&c.sheaf.twist(1, -1), 0).unwrap().lo.unwrap() >= 1);
    for a in -3..=3 {
        for b in -3..=3 {
            assert_eq!(s.h(&c.sheaf.twist(a, b), 2).unwrap(), DimInterval::exact(0));
        }
    }
}

#[test]
fn moduli_numbers() {
    let m = moduli_dimension(SolverOptions::default()).unwrap();
    assert_eq!(m.delta_ideal.engine, DimInterval::exact(10));
    assert_eq!(m.normal_sections, DimInterval::exact(12));
    assert!(m.h1_ee.engine.is_bounded());
    assert_eq!(m.h1_ee.printed, "5 or 6");
    assert!(m.replay_ok && m.fixpoint_ok);
}

#[test]
fn ulrich_vanishings() {
    let u = ulrich_check(SolverOptions::default()).unwrap();
    for (i, v) in &u.first {
        if (1..=3).contains(i) {
            assert_eq!(*v, DimInterval::exact(0), "h{i}(F⊗L^-{i})");
        }
    }
    assert_eq!(u.second[0], (0, DimInterval::exact(0)));
    assert!(u.top.engine.is_bounded());
    assert_eq!(u.top.printed, "54");
    let c = build_odd(5).unwrap();
    let mut s = Solver::new(&c.registry, SolverOptions::default());
    assert_eq!(s.h(&c.sheaf, 0).unwrap(), DimInterval::exact(0));
}

#[test]
fn zero_sheaf_vanishes() {
    let reg = Registry::new(4);
    let mut s = Solver::new(&reg, SolverOptions::default());
    assert!(s.h_all(&SheafExpr::zero()).unwrap().iter().all(|v| *v == DimInterval::exact(0)));
}
