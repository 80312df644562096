//! Monomial models of `H⁰(O(p, q))` and evaluation matrices onto subvarieties.
//!
//! A section of `O(p, q)` is a form of degree `d = p + q` in `x₀..xₙ` vanishing to order at
//! least `q` at `p₀ = [1:0:…:0]`, i.e. every monomial has `x₀`-exponent at most `p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chow::{ChowClass, TwistPair};
use crate::error::{Error, Result};
use crate::linalg::{QMatrix, RankReport};
use crate::poly::{monomials, Exponents, Poly};
use crate::projcoh::binom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SubKind {
    /// Pull-back of a codimension-2 linear space missing the blown-up point.
    #[serde(rename = "wp")]
    Wp,
    /// Hyperplane of the exceptional divisor.
    #[serde(rename = "kappa")]
    Kappa,
    /// Quadric surface cut by a hyperplane and a quadric missing the blown-up point (`n = 4`).
    #[serde(rename = "q1")]
    Q1,
    /// Quadric surface inside the exceptional divisor (`n = 4`).
    #[serde(rename = "q2")]
    Q2,
}

impl SubKind {
    pub fn in_exceptional(self) -> bool {
        matches!(self, SubKind::Kappa | SubKind::Q2)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SubKind::Wp => "℘",
            SubKind::Kappa => "κ",
            SubKind::Q1 => "Q₁",
            SubKind::Q2 => "Q₂",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "wp" | "℘" | "p" => Ok(SubKind::Wp),
            "kappa" | "κ" | "k" => Ok(SubKind::Kappa),
            "q1" | "Q1" => Ok(SubKind::Q1),
            "q2" | "Q2" => Ok(SubKind::Q2),
            _ => Err(Error::Invalid(format!("unknown subvariety kind {s:?}"))),
        }
    }
}

impl fmt::Display for SubKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubvarietySpec {
    pub kind: SubKind,
    pub n: usize,
}

impl SubvarietySpec {
    pub fn new(kind: SubKind, n: usize) -> Result<Self> {
        match kind {
            SubKind::Wp | SubKind::Kappa if n < 3 => {
                Err(Error::Invalid(format!("{kind} needs n ≥ 3, got {n}")))
            }
            SubKind::Q1 | SubKind::Q2 if n != 4 => {
                Err(Error::Invalid(format!("{kind} is only defined for n = 4, got {n}")))
            }
            _ => Ok(SubvarietySpec { kind, n }),
        }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            SubKind::Wp | SubKind::Kappa => self.n - 2,
            SubKind::Q1 | SubKind::Q2 => 2,
        }
    }

    /// Degree of `O(p, q)` restricted to the component.
    pub fn restriction_degree(&self, p: i64, q: i64) -> i64 {
        match self.kind {
            SubKind::Wp | SubKind::Q1 => p + q,
            SubKind::Kappa | SubKind::Q2 => q,
        }
    }

    /// Degree of `det N` on the component's own hyperplane class.
    pub fn det_normal(&self) -> i64 {
        match self.kind {
            SubKind::Wp => 2,
            SubKind::Kappa => 0,
            SubKind::Q1 => 3,
            SubKind::Q2 => 1,
        }
    }

    /// Twist `O(a, 0)` or `O(0, a)` realising `O_Y(m)` as `O ⊗ O_Y`.
    pub fn twist_for_degree(&self, m: i64) -> TwistPair {
        match self.kind {
            SubKind::Wp | SubKind::Q1 => (m, 0),
            SubKind::Kappa | SubKind::Q2 => (0, m),
        }
    }

    /// Koszul resolution of `O_Y` as signed line bundles.
    pub fn resolution(&self) -> Vec<(TwistPair, i64)> {
        match self.kind {
            SubKind::Wp => vec![((0, 0), 1), ((-1, 0), -2), ((-2, 0), 1)],
            SubKind::Kappa => vec![((0, 0), 1), ((-1, 1), -1), ((0, -1), -1), ((-1, 0), 1)],
            SubKind::Q1 => vec![((0, 0), 1), ((-1, 0), -1), ((-2, 0), -1), ((-3, 0), 1)],
            SubKind::Q2 => vec![((0, 0), 1), ((-1, 1), -1), ((-2, -2), -1), ((-3, -1), 1)],
        }
    }

    /// `c₂(O_Y)`.
    pub fn c2(&self) -> ChowClass {
        let n = self.n;
        let xi2 = ChowClass::xi(n).pow(2);
        let a2 = ChowClass::alpha(n).pow(2);
        match self.kind {
            SubKind::Wp => -&xi2,
            SubKind::Kappa => &a2 - &xi2,
            SubKind::Q1 => xi2.scale_int(-2),
            SubKind::Q2 => (&a2 - &xi2).scale_int(2),
        }
    }

    /// `h^i(Y, O_Y(m))`.
    pub fn h(&self, i: i64, m: i64) -> i64 {
        match self.kind {
            SubKind::Wp | SubKind::Kappa => {
                let d = self.dim() as i64;
                if i == 0 {
                    binom(m + d, d)
                } else if i == d {
                    binom(-m - 1, d)
                } else {
                    0
                }
            }
            SubKind::Q1 | SubKind::Q2 => {
                if i == 0 && m >= 0 {
                    (m + 1) * (m + 1)
                } else if i == 2 && m <= -2 {
                    (m + 1) * (m + 1)
                } else {
                    0
                }
            }
        }
    }
}

impl fmt::Display for SubvarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

/// Rejects configurations whose components meet.
pub fn check_disjoint(x: &[SubvarietySpec]) -> Result<()> {
    let in_e = x.iter().filter(|y| y.kind.in_exceptional()).count();
    let off_e = x.len() - in_e;
    if in_e > 1 || off_e > 1 {
        return Err(Error::Overlap(format!(
            "{} components inside the exceptional divisor and {} outside; two of the same side meet",
            in_e, off_e
        )));
    }
    if let Some(y) = x.iter().find(|y| y.n != x[0].n) {
        return Err(Error::DimensionMismatch(x[0].n, y.n));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionBasis {
    pub n: usize,
    pub p: i64,
    pub q: i64,
    pub monomials: Vec<Exponents>,
}

impl SectionBasis {
    pub fn new(p: i64, q: i64, n: usize) -> Self {
        let monomials = if p < 0 {
            Vec::new()
        } else {
            monomials(n + 1, p + q).into_iter().filter(|e| e[0] as i64 <= p).collect()
        };
        SectionBasis { n, p, q, monomials }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

pub fn h0_line_model(p: i64, q: i64, n: usize) -> i64 {
    SectionBasis::new(p, q, n).len() as i64
}

/// Where the defining equations come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum CoordinateMode {
    /// `℘ = {x₀ = x₁ = 0}`, `κ = {yₙ = 0}`, `Q₁ = {x₀ + x₂ = 0, Σ xᵢ² = 0}`, `Q₂ = {Σ yᵢ² = 0}`.
    #[default]
    Fixed,
    /// Pseudorandom integer coefficients in `[-9, 9]` from a seeded ChaCha stream.
    Random(u64),
}

/// The chosen equations, recorded for reports.
#[derive(Debug, Clone)]
struct Equations {
    wp: (Vec<i64>, Vec<i64>),
    kappa: Vec<i64>,
    q1_plane: Vec<i64>,
    q1_rest: Poly,
    q2_rest: Poly,
}

fn sum_of_squares_rest(nvars: usize, weights: &[i64]) -> Poly {
    let mut r = Poly::zero(nvars);
    for (i, &w) in weights.iter().enumerate() {
        let mut e = vec![0; nvars];
        e[i + 1] = 2;
        r = r.add(&Poly::term(nvars, e, w));
    }
    r
}

impl Equations {
    fn new(n: usize, mode: CoordinateMode) -> Self {
        match mode {
            CoordinateMode::Fixed => Equations {
                wp: (vec![0; n - 1], vec![0; n - 1]),
                kappa: vec![0; n - 1],
                q1_plane: vec![0, -1, 0, 0],
                q1_rest: sum_of_squares_rest(4, &[2, 1, 1]),
                q2_rest: sum_of_squares_rest(4, &[1, 1, 1]),
            },
            CoordinateMode::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut draw = |k: usize| -> Vec<i64> { (0..k).map(|_| rng.gen_range(-9..=9)).collect() };
                let wp = (draw(n - 1), draw(n - 1));
                let kappa = draw(n - 1);
                let q1_plane = draw(4);
                let rest = |r: &[i64]| {
                    let mut p = Poly::zero(4);
                    for (j, e) in monomials(4, 2).into_iter().filter(|e| e[0] < 2).enumerate() {
                        p = p.add(&Poly::term(4, e, r[j]));
                    }
                    p
                };
                let c1 = draw(9);
                let c2 = draw(9);
                Equations { wp, kappa, q1_plane, q1_rest: rest(&c1), q2_rest: rest(&c2) }
            }
        }
    }
}

/// Restriction of one basis monomial to a component, as a polynomial on the component's model.
fn restrict_monomial(e: &Exponents, y: &SubvarietySpec, p: i64, eq: &Equations) -> Option<Poly> {
    let n = y.n;
    let nv = n + 1;
    let mono = Poly::term(nv, e.clone(), 1);
    match y.kind {
        SubKind::Wp => {
            // variables x₂..xₙ
            let m = n - 1;
            let mut images = vec![Poly::linear(&eq.wp.0), Poly::linear(&eq.wp.1)];
            images.extend((0..m).map(|i| Poly::var(m, i)));
            Some(mono.substitute(&images))
        }
        SubKind::Kappa => {
            if e[0] as i64 != p {
                return Some(Poly::zero(n - 1));
            }
            // F_q lives on y₁..yₙ; impose yₙ = Σ c_i y_i
            let m = n - 1;
            let mut images = vec![Poly::constant(m, 1)];
            images.extend((0..m).map(|i| Poly::var(m, i)));
            images.push(Poly::linear(&eq.kappa));
            Some(mono.substitute(&images))
        }
        SubKind::Q1 => {
            let mut images = vec![Poly::linear(&eq.q1_plane)];
            images.extend((0..4).map(|i| Poly::var(4, i)));
            Some(mono.substitute(&images).reduce_quadric(0, &eq.q1_rest))
        }
        SubKind::Q2 => {
            if e[0] as i64 != p {
                return Some(Poly::zero(4));
            }
            let mut images = vec![Poly::constant(4, 1)];
            images.extend((0..4).map(|i| Poly::var(4, i)));
            Some(mono.substitute(&images).reduce_quadric(0, &eq.q2_rest))
        }
    }
}

fn target_basis(y: &SubvarietySpec, p: i64, q: i64) -> Vec<Exponents> {
    let d = y.restriction_degree(p, q);
    match y.kind {
        SubKind::Wp | SubKind::Kappa => {
            if y.kind == SubKind::Kappa && p < 0 {
                Vec::new()
            } else {
                monomials(y.n - 1, d)
            }
        }
        SubKind::Q1 | SubKind::Q2 => monomials(4, d).into_iter().filter(|e| e[0] < 2).collect(),
    }
}

#[derive(Debug, Clone)]
pub struct RestrictionMatrix {
    pub source_dim: usize,
    pub target_dims: Vec<(SubvarietySpec, usize)>,
    pub matrix: QMatrix,
}

impl RestrictionMatrix {
    pub fn rank_report(&self) -> RankReport {
        self.matrix.rank_report()
    }
}

/// Estimated elimination cost, used to cap oracle calls.
pub fn restriction_cost(x: &[SubvarietySpec], p: i64, q: i64) -> usize {
    let n = x.first().map_or(0, |y| y.n);
    let src = h0_line_model(p, q, n).max(0) as usize;
    let tgt: usize = x.iter().map(|y| y.h(0, y.restriction_degree(p, q)).max(0) as usize).sum();
    src * tgt
}

pub fn restrict_matrix(
    x: &[SubvarietySpec],
    p: i64,
    q: i64,
    mode: CoordinateMode,
) -> Result<RestrictionMatrix> {
    check_disjoint(x)?;
    let n = x.first().map(|y| y.n).ok_or_else(|| Error::Invalid("empty configuration".into()))?;
    let basis = SectionBasis::new(p, q, n);
    let eq = Equations::new(n, mode);
    let targets: Vec<Vec<Exponents>> = x.iter().map(|y| target_basis(y, p, q)).collect();
    let rows: usize = targets.iter().map(|t| t.len()).sum();
    let mut m = QMatrix::zeros(rows, basis.len());
    for (col, e) in basis.monomials.iter().enumerate() {
        let mut offset = 0;
        for (y, tb) in x.iter().zip(&targets) {
            if !tb.is_empty() {
                if let Some(img) = restrict_monomial(e, y, p, &eq) {
                    for (row, c) in img.coordinates(tb).into_iter().enumerate() {
                        if c != BigInt::from(0) {
                            m.set(offset + row, col, BigRational::from_integer(c));
                        }
                    }
                }
            }
            offset += tb.len();
        }
    }
    Ok(RestrictionMatrix {
        source_dim: basis.len(),
        target_dims: x.iter().copied().zip(targets.iter().map(|t| t.len())).collect(),
        matrix: m,
    })
}

pub fn h0_ideal(x: &[SubvarietySpec], p: i64, q: i64, mode: CoordinateMode) -> Result<i64> {
    Ok(restrict_matrix(x, p, q, mode)?.matrix.nullity() as i64)
}
