//! Slope semistability of rank-2 sheaves through the Hoppe-type vanishing test
//! `h⁰(E ⊗ θ) = 0` for every line bundle `θ` with `δ_L(θ) < −μ_L(E)`.
//!
//! Twists are written `θ = O(−p, −q)`, so the test set is `{(p, q) : p·A + q·B > μ}` with
//! `A = δ_L(O(1,0))` and `B = δ_L(O(0,1))`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chow::{delta, slope, Polarization};
use crate::error::{Error, Result};
use crate::les::{DimInterval, FactSource, Key, Solver, SolverOptions};
use crate::linalg::RankReport;
use crate::projcoh::h_line;
use crate::sections::restrict_matrix;
use crate::sheafdag::{Registry, SheafExpr};

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn floor_i64(x: &BigRational) -> i64 {
    x.floor().to_integer().to_i64().expect("small bound")
}

#[derive(Debug, Clone, Serialize)]
pub struct HoppeRegion {
    pub polarization: Polarization,
    #[serde(serialize_with = "ser_rat")]
    pub mu: BigRational,
    #[serde(serialize_with = "ser_int")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_int")]
    pub b: BigInt,
    /// `true` tests `δ < −μ` (semistability), `false` tests `δ ≤ −μ` (stability).
    pub strict: bool,
}

fn ser_rat<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_int<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub fn region(l: &Polarization, mu: BigRational, strict: bool) -> HoppeRegion {
    HoppeRegion { polarization: *l, mu, a: delta((1, 0), l), b: delta((0, 1), l), strict }
}

impl HoppeRegion {
    fn value(&self, p: i64, q: i64) -> BigRational {
        BigRational::from_integer(&self.a * p + &self.b * q)
    }

    pub fn contains(&self, p: i64, q: i64) -> bool {
        let v = self.value(p, q);
        if self.strict {
            v > self.mu
        } else {
            v >= self.mu
        }
    }

    pub fn on_boundary(&self, p: i64, q: i64) -> bool {
        self.value(p, q) == self.mu
    }

    /// `(c, s)` with the region reading `q > c − s·p` (or `≥`); needs `B > 0`.
    pub fn closed_form(&self) -> (BigRational, BigRational) {
        let b = BigRational::from_integer(self.b.clone());
        (&self.mu / &b, BigRational::from_integer(self.a.clone()) / b)
    }

    /// Smallest `q` in the region for the given `p`.
    pub fn q_min(&self, p: i64) -> i64 {
        let t = (&self.mu - BigRational::from_integer(&self.a * p)) / BigRational::from_integer(self.b.clone());
        if self.strict {
            floor_i64(&t) + 1
        } else {
            let f = floor_i64(&t);
            if BigRational::from_integer(f.into()) == t {
                f
            } else {
                f + 1
            }
        }
    }
}

/// The displayed closed-form test regions: `q > −1 − p / (1 − (1 − 2/(n−1))^{n−1})` for odd
/// `n ≥ 5` and `q > −1/2 − (8/7)p` on the four-dimensional blow-up.
pub fn closed_form_region(n: usize) -> Option<(BigRational, BigRational)> {
    if n == 4 {
        return Some((rat(-1, 2), rat(8, 7)));
    }
    if n < 5 || n % 2 == 0 {
        return None;
    }
    let r = rat(n as i64 - 3, n as i64 - 1);
    let mut pw = BigRational::one();
    for _ in 0..n - 1 {
        pw *= &r;
    }
    Some((rat(-1, 1), BigRational::one() / (BigRational::one() - pw)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mechanism {
    /// Both outer terms of the defining sequence have no sections.
    #[serde(rename = "LINE-BOUND")]
    LineBound,
    /// Injected into a twist already shown to have no sections.
    #[serde(rename = "FRONTIER-MONOTONE")]
    FrontierMonotone,
    /// Decided by the sequence solver with a sections-oracle value in its support.
    #[serde(rename = "ORACLE")]
    Oracle,
    /// Decided by the sequence solver from closed formulas alone.
    #[serde(rename = "LES")]
    Les,
    #[serde(rename = "AXIOM")]
    Axiom,
    /// Sections of a subsheaf with the same slope are bounded by those of the parent.
    #[serde(rename = "SUBSHEAF")]
    Subsheaf,
}

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub p: i64,
    pub q: i64,
    /// Column `E(−p, −q)`.
    pub sheaf: String,
    pub mechanism: Mechanism,
    pub h0: DimInterval,
    /// `h⁰` of the two outer terms of the defining sequence.
    pub line_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominated_by: Option<(i64, i64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "SEMISTABLE-CERTIFIED")]
    SemistableCertified,
    #[serde(rename = "VIOLATION")]
    Violation,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub p: i64,
    pub q: i64,
    /// `θ` as a twist pair.
    pub theta: (i64, i64),
    pub h0: DimInterval,
    /// The ideal-sheaf term whose sections survive, with its evaluation matrix.
    pub ideal: Option<String>,
    pub evaluation: Option<RankReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Coverage {
    pub window_points: usize,
    pub window_uncovered: Vec<(i64, i64)>,
    pub sampled: usize,
    pub sample_uncovered: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Boundary {
    pub p: i64,
    pub q: i64,
    pub h0: DimInterval,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityCertificate {
    pub sheaf: String,
    pub n: usize,
    pub region: HoppeRegion,
    pub verdict: Verdict,
    /// Outer terms `O(a, b)` whose sections bound those of the column.
    pub bounding_lines: Vec<(i64, i64)>,
    /// `p` range outside which every column has a zero line bound.
    pub window: (i64, i64),
    pub cases: Vec<Case>,
    pub boundary: Vec<Boundary>,
    pub witness: Option<Witness>,
    pub coverage: Coverage,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
}

impl StabilityCertificate {
    pub fn explicit_cases(&self) -> usize {
        self.cases.len()
    }

    pub fn to_markdown(&self) -> String {
        let (c, s) = self.region.closed_form();
        let mut out = format!(
            "### Stability of {}\n\nμ = {}, test region q {} {} − ({})·p, verdict **{}**\n\n",
            self.sheaf,
            self.region.mu,
            if self.region.strict { ">" } else { "≥" },
            c,
            s,
            verdict_str(self.verdict)
        );
        out.push_str("| p | q | column | h⁰ | line bound | mechanism |\n|---|---|---|---|---|---|\n");
        for k in &self.cases {
            let mech = serde_json::to_value(k.mechanism).map(|v| v.as_str().unwrap_or("").to_string()).unwrap_or_default();
            let dom = k.dominated_by.map(|(a, b)| format!(" via ({a},{b})")).unwrap_or_default();
            out.push_str(&format!("| {} | {} | {} | {} | {} | {mech}{dom} |\n", k.p, k.q, k.sheaf, k.h0, k.line_bound));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("\nWitness: h⁰ at θ = O({},{}) is {}", w.theta.0, w.theta.1, w.h0));
            if let (Some(i), Some(r)) = (&w.ideal, &w.evaluation) {
                out.push_str(&format!(", from H⁰({i}): {} → {} evaluation with rank {}", r.cols, r.rows, r.rank));
            }
            out.push('\n');
        }
        out
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::SemistableCertified => "SEMISTABLE-CERTIFIED",
        Verdict::Violation => "VIOLATION",
        Verdict::Inconclusive => "INCONCLUSIVE",
    }
}

fn h0_line(a: i64, b: i64, n: usize) -> i64 {
    h_line(0, a, b, n)
}

/// The defining sequence `0 → O(a,b) → E → I_X(c,d) → 0`: returns `(a,b)`, `(c,d)`, config.
fn defining_sequence(reg: &Registry, e: &SheafExpr) -> Result<((i64, i64), (i64, i64), String)> {
    let e = reg.normalize(e)?;
    for (idx, tw) in reg.matching(&e) {
        let [sub, mid, quot] = reg.records()[idx].twisted(tw.0, tw.1);
        if reg.normalize(&mid)? != e {
            continue;
        }
        if let (SheafExpr::Line { p, q }, SheafExpr::Ideal { config, p: c, q: d }) = (sub.normalize(), quot.normalize()) {
            return Ok(((p, q), (c, d), config));
        }
    }
    Err(Error::Hypothesis(format!("{e} has no registered sequence 0 → line → {e} → ideal → 0")))
}

pub struct Certifier<'r> {
    reg: &'r Registry,
    pub solver: Solver<'r>,
    seed: u64,
    samples: usize,
}

impl<'r> Certifier<'r> {
    pub fn new(reg: &'r Registry, opts: SolverOptions) -> Self {
        Certifier { reg, solver: Solver::new(reg, opts), seed: 0x5eed, samples: 1000 }
    }

    pub fn with_sampling(mut self, seed: u64, samples: usize) -> Self {
        self.seed = seed;
        self.samples = samples;
        self
    }

    /// Runs the reduction: line bounds outside a finite window, then domination by known zeros,
    /// then the solver on what is left.
    pub fn certify(&mut self, e: &SheafExpr, l: &Polarization, strict: bool) -> Result<StabilityCertificate> {
        let n = self.reg.n();
        let e = self.reg.normalize(e)?;
        if self.reg.rank_of(&e)? != 2 {
            return Err(Error::Hypothesis(format!("{e} is not of rank 2")));
        }
        let c1 = self.reg.chern_of(&e)?.part(1);
        let mu = slope(&c1, 2, l);
        let reg_ = region(l, mu, strict);
        let ((a0, b0), (a1, b1), config) = defining_sequence(self.reg, &e)?;
        let lines = vec![(a0, b0), (a1, b1)];
        if reg_.a <= reg_.b || !reg_.b.is_positive() {
            return Err(Error::Hypothesis("the test region is not bounded by finitely many line-bound failures".into()));
        }
        let bound = |p: i64, q: i64| h0_line(a0 - p, b0 - q, n) + h0_line(a1 - p, b1 - q, n);

        // Points where the bound can be nonzero: p ≤ a and p + q ≤ a + b for one of the lines.
        let mut window_pts: BTreeMap<(i64, i64), ()> = BTreeMap::new();
        let mut p_lo = i64::MAX;
        let p_hi = a0.max(a1);
        for &(a, b) in &lines {
            let am = BigRational::from_integer(reg_.a.clone() - reg_.b.clone());
            let t = (&reg_.mu - BigRational::from_integer(&reg_.b * (a + b))) / am;
            let lo = floor_i64(&t);
            p_lo = p_lo.min(lo);
            for p in lo..=a {
                for q in reg_.q_min(p)..=(a + b - p) {
                    if reg_.contains(p, q) {
                        window_pts.insert((p, q), ());
                    }
                }
            }
        }
        let mut order: Vec<(i64, i64)> = window_pts.keys().copied().collect();
        order.sort_by_key(|&(p, q)| (p, p + q, q));

        let mut cases: Vec<Case> = Vec::new();
        let mut zeros: Vec<(i64, i64)> = Vec::new();
        let mut violations: Vec<(i64, i64, DimInterval)> = Vec::new();
        let mut inconclusive = false;
        for &(p, q) in &order {
            let col = self.reg.normalize(&e.twist(-p, -q))?;
            let lb = bound(p, q);
            if lb == 0 {
                zeros.push((p, q));
                continue;
            }
            let dom = zeros.iter().copied().find(|&(p2, q2)| h0_line(p - p2, q - q2, n) > 0);
            let case = if let Some(d) = dom {
                Case {
                    p,
                    q,
                    sheaf: col.to_string(),
                    mechanism: Mechanism::FrontierMonotone,
                    h0: DimInterval::exact(0),
                    line_bound: lb,
                    dominated_by: Some(d),
                }
            } else {
                let v = self.solver.h(&col, 0)?;
                let uses_oracle = self
                    .solver
                    .support(&Key::h(&col, 0))
                    .iter()
                    .any(|s| s.source == FactSource::Oracle);
                let uses_axiom = self
                    .solver
                    .support(&Key::h(&col, 0))
                    .iter()
                    .any(|s| matches!(s.source, FactSource::Axiom | FactSource::User));
                let mechanism = if uses_axiom {
                    Mechanism::Axiom
                } else if uses_oracle {
                    Mechanism::Oracle
                } else {
                    Mechanism::Les
                };
                Case { p, q, sheaf: col.to_string(), mechanism, h0: v, line_bound: lb, dominated_by: None }
            };
            match case.h0.value() {
                Some(0) => zeros.push((p, q)),
                _ if case.h0.lo.is_some_and(|x| x >= 1) => violations.push((p, q, case.h0)),
                _ => inconclusive = true,
            }
            cases.push(case);
        }

        let mut boundary = Vec::new();
        if strict {
            for p in p_lo..=p_hi {
                for q in (reg_.q_min(p) - 2)..reg_.q_min(p) {
                    if reg_.on_boundary(p, q) && bound(p, q) > 0 {
                        let col = e.twist(-p, -q);
                        boundary.push(Boundary { p, q, h0: self.solver.h(&col, 0)? });
                    }
                }
            }
        }

        let covered = |p: i64, q: i64| -> bool {
            bound(p, q) == 0
                || zeros.contains(&(p, q))
                || zeros.iter().any(|&(p2, q2)| h0_line(p - p2, q - q2, n) > 0)
        };
        let window_uncovered: Vec<(i64, i64)> =
            order.iter().copied().filter(|&(p, q)| !covered(p, q)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut sampled = 0;
        let mut sample_uncovered = Vec::new();
        let span = 40 * (p_hi - p_lo).abs().max(10);
        while sampled < self.samples {
            let p = rng.gen_range(-span..=span);
            let q = rng.gen_range(-span..=span);
            if !reg_.contains(p, q) || window_pts.contains_key(&(p, q)) {
                continue;
            }
            sampled += 1;
            if !covered(p, q) {
                sample_uncovered.push((p, q));
            }
        }

        let witness = if let Some(&(p, q, v)) = violations.iter().min_by_key(|(p, q, _)| (p.abs() + q.abs(), -p)) {
            let (ic, id) = (a1 - p, b1 - q);
            let x = self.reg.config(&config)?;
            let m = restrict_matrix(x, ic, id, self.solver.options().coordinates)?;
            Some(Witness {
                p,
                q,
                theta: (-p, -q),
                h0: v,
                ideal: Some(SheafExpr::ideal(&config, ic, id).to_string()),
                evaluation: Some(m.rank_report()),
            })
        } else {
            None
        };
        let verdict = if witness.is_some() {
            Verdict::Violation
        } else if inconclusive || !window_uncovered.is_empty() || !sample_uncovered.is_empty() {
            Verdict::Inconclusive
        } else {
            Verdict::SemistableCertified
        };
        Ok(StabilityCertificate {
            sheaf: e.to_string(),
            n,
            region: reg_,
            verdict,
            bounding_lines: lines,
            window: (p_lo, p_hi),
            cases,
            boundary,
            witness,
            coverage: Coverage { window_points: order.len(), window_uncovered, sampled, sample_uncovered },
            parent: None,
        })
    }
}

/// Certificate for a subsheaf `G ⊂ E` of the same rank and first Chern class: each `h⁰(G(t))`
/// is bounded by `h⁰(E(t))`, so every zero of the parent transfers.
pub fn certify_subsheaf(
    reg: &Registry,
    g: &SheafExpr,
    parent: &StabilityCertificate,
    parent_sheaf: &SheafExpr,
) -> Result<StabilityCertificate> {
    let g = reg.normalize(g)?;
    let pe = reg.normalize(parent_sheaf)?;
    if reg.rank_of(&g)? != reg.rank_of(&pe)? || reg.det_of(&g)? != reg.det_of(&pe)? {
        return Err(Error::Hypothesis(format!("{g} and {pe} differ in rank or determinant")));
    }
    let mut cert = parent.clone();
    cert.sheaf = g.to_string();
    cert.parent = Some(pe.to_string());
    for c in &mut cert.cases {
        c.sheaf = reg.normalize(&g.twist(-c.p, -c.q))?.to_string();
        c.mechanism = Mechanism::Subsheaf;
    }
    if parent.verdict != Verdict::SemistableCertified {
        cert.verdict = Verdict::Inconclusive;
        cert.witness = None;
    }
    Ok(cert)
}

/// `A/B` and `μ/B` against the closed forms, as exact rationals.
pub fn region_matches_closed_form(r: &HoppeRegion, n: usize) -> Option<bool> {
    let (c, s) = closed_form_region(n)?;
    let (c2, s2) = r.closed_form();
    Some(c == c2 && s == s2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_dimensional_region() {
        let l = Polarization::standard(5).unwrap();
        let r = region(&l, rat(-15, 1), true);
        assert_eq!(r.closed_form(), (rat(-1, 1), rat(16, 15)));
        assert!(r.contains(1, -2));
        assert!(!r.contains(0, -1));
        assert!(r.on_boundary(0, -1));
        assert_eq!(region_matches_closed_form(&r, 5), Some(true));
    }

    #[test]
    fn q_min_respects_strictness() {
        let l = Polarization::standard(5).unwrap();
        let s = region(&l, rat(-15, 1), true);
        let ns = region(&l, rat(-15, 1), false);
        assert_eq!(s.q_min(0), 0);
        assert_eq!(ns.q_min(0), -1);
        assert_eq!(s.q_min(1), -2);
    }

    #[test]
    fn closed_forms_for_higher_odd_dimensions() {
        for n in [7usize, 9] {
            let l = Polarization::standard(n).unwrap();
            let c1 = crate::chow::ChowClass::alpha(n).scale_int(-2);
            let r = region(&l, slope(&c1, 2, &l), true);
            assert_eq!(region_matches_closed_form(&r, n), Some(true), "n = {n}");
        }
    }
}
