//! Exact arithmetic in the Chow ring of the blow-up of projective `n`-space at a point.
//!
//! The ring is `Q[α, ξ] / (αⁿ, ξ² − αξ)` where `α` is the pull-back of a hyperplane of the
//! base `P^{n-1}` and `ξ` the pull-back of a hyperplane of `Pⁿ`. Elements are stored in the
//! basis `{1, ξ^k (1 ≤ k ≤ n), α^l (1 ≤ l ≤ n-1)}`; the exceptional divisor has class `ξ − α`.
//! Multiplication uses the rewrite rules `ξ^k·α^l = ξ^{k+l}` for `k + l ≤ n` (zero beyond),
//! `α^n = 0`, and integration is `∫ξⁿ = 1`, `∫α^l = 0` for `l < n`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A twist pair `(p, q)` standing for the line bundle `O(pξ + qα)`.
pub type TwistPair = (i64, i64);

/// A basis monomial of the Chow ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Monomial {
    One,
    Xi(usize),
    Alpha(usize),
}

impl Monomial {
    pub fn degree(self) -> usize {
        match self {
            Monomial::One => 0,
            Monomial::Xi(k) => k,
            Monomial::Alpha(l) => l,
        }
    }
}

/// Product of two basis monomials in normal form (`None` when it vanishes).
fn monomial_product(n: usize, a: Monomial, b: Monomial) -> Option<Monomial> {
    use Monomial::*;
    match (a, b) {
        (One, m) | (m, One) => Some(m),
        (Xi(k), Xi(j)) => (k + j <= n).then_some(Xi(k + j)),
        (Alpha(l), Alpha(m)) => (l + m < n).then_some(Alpha(l + m)),
        (Xi(k), Alpha(l)) | (Alpha(l), Xi(k)) => (k + l <= n).then_some(Xi(k + l)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    n: usize,
    // [r0, r1..rn, s1..s_{n-1}]
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ChowClass {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2, "the blow-up needs ambient dimension n >= 2");
        ChowClass {
            n,
            coeffs: vec![BigRational::zero(); 2 * n],
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, BigRational::one())
    }

    pub fn scalar(n: usize, c: BigRational) -> Self {
        let mut out = Self::zero(n);
        out.coeffs[0] = c;
        out
    }

    pub fn monomial(n: usize, m: Monomial) -> Self {
        let mut out = Self::zero(n);
        if let Some(idx) = out.index(m) {
            out.coeffs[idx] = BigRational::one();
        }
        out
    }

    pub fn xi(n: usize) -> Self {
        Self::monomial(n, Monomial::Xi(1))
    }

    pub fn alpha(n: usize) -> Self {
        Self::monomial(n, Monomial::Alpha(1))
    }

    /// First Chern class `pξ + qα` of `O(p, q)`.
    pub fn divisor(n: usize, p: i64, q: i64) -> Self {
        &Self::xi(n).scale_int(p) + &Self::alpha(n).scale_int(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, m: Monomial) -> Option<usize> {
        match m {
            Monomial::One => Some(0),
            Monomial::Xi(k) if (1..=self.n).contains(&k) => Some(k),
            Monomial::Alpha(l) if (1..self.n).contains(&l) => Some(self.n + l),
            _ => None,
        }
    }

    fn monomial_at(&self, idx: usize) -> Monomial {
        if idx == 0 {
            Monomial::One
        } else if idx <= self.n {
            Monomial::Xi(idx)
        } else {
            Monomial::Alpha(idx - self.n)
        }
    }

    pub fn coeff(&self, m: Monomial) -> BigRational {
        self.index(m)
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn set_coeff(&mut self, m: Monomial, c: BigRational) {
        let idx = self
            .index(m)
            .unwrap_or_else(|| panic!("{m:?} is not a basis monomial for n = {}", self.n));
        self.coeffs[idx] = c;
    }

    /// Nonzero `(monomial, coefficient)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.monomial_at(i), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.n, other.n))
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                if let Some(m) = monomial_product(self.n, ma, mb) {
                    let idx = out.index(m).expect("normal form monomial");
                    out.coeffs[idx] += ca * cb;
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ChowClass { n: self.n, coeffs })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&rat(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Homogeneous part of codimension `d`.
    pub fn part(&self, d: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            if m.degree() == d {
                out.set_coeff(m, c.clone());
            }
        }
        out
    }

    /// Integral against the fundamental class: the coefficient of `ξⁿ`.
    pub fn degree(&self) -> BigRational {
        self.coeff(Monomial::Xi(self.n))
    }

    pub fn constant(&self) -> BigRational {
        self.coeffs[0].clone()
    }

    /// Evaluates the power series `Σ a_k x^k` at `x = self`; `self` must have no constant term.
    pub fn eval_series(&self, series: &[BigRational]) -> Self {
        assert!(self.constant().is_zero(), "series argument must be nilpotent");
        let mut acc = Self::zero(self.n);
        let mut power = Self::one(self.n);
        for (k, a) in series.iter().enumerate() {
            if k > self.n {
                break;
            }
            acc = &acc + &power.scale(a);
            power = &power * self;
        }
        acc
    }

    /// `exp(self)` truncated at codimension `n`.
    pub fn exp(&self) -> Self {
        self.eval_series(&exp_series(self.n))
    }

    /// Multiplicative inverse of a class with constant term 1.
    pub fn inverse_unipotent(&self) -> Self {
        assert!(self.constant().is_one(), "only unipotent classes are inverted");
        let nil = self - &Self::one(self.n);
        let series: Vec<BigRational> = (0..=self.n)
            .map(|k| if k % 2 == 0 { rat(1) } else { rat(-1) })
            .collect();
        nil.eval_series(&series)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let name = match m {
                Monomial::One => String::new(),
                Monomial::Xi(1) => "ξ".into(),
                Monomial::Xi(k) => format!("ξ^{k}"),
                Monomial::Alpha(1) => "α".into(),
                Monomial::Alpha(l) => format!("α^{l}"),
            };
            if name.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs}{name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        self.try_add(rhs).expect("Chow classes of different dimension")
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self + &(-rhs)
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale_int(-1)
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        self.try_mul(rhs).expect("Chow classes of different dimension")
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn exp_series(n: usize) -> Vec<BigRational> {
    (0..=n)
        .map(|k| BigRational::new(BigInt::one(), factorial(k)))
        .collect()
}

/// Coefficients of `x / (1 − e^{−x})` up to `x^n`.
pub fn todd_series(n: usize) -> Vec<BigRational> {
    // (1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!
    let denom: Vec<BigRational> = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            BigRational::new(BigInt::from(sign), factorial(k + 1))
        })
        .collect();
    let mut inv = vec![BigRational::zero(); n + 1];
    inv[0] = BigRational::one();
    for k in 1..=n {
        let mut s = BigRational::zero();
        for j in 1..=k {
            s += &denom[j] * &inv[k - j];
        }
        inv[k] = -s;
    }
    inv
}

/// Total Chern class `(1 + α)ⁿ (1 + 2ξ − α)` of the tangent bundle.
pub fn chern_tangent(n: usize) -> ChowClass {
    let one = ChowClass::one(n);
    let a = ChowClass::alpha(n);
    let x = ChowClass::xi(n);
    let base = (&one + &a).pow(n as u32);
    let last = &(&one + &x.scale_int(2)) - &a;
    &base * &last
}

/// Todd class from the Chern roots `α` (n times), `ξ` and `ξ − α`.
pub fn todd_tangent(n: usize) -> ChowClass {
    let td = todd_series(n);
    let a = ChowClass::alpha(n);
    let x = ChowClass::xi(n);
    let e = &x - &a;
    let ta = a.eval_series(&td).pow(n as u32);
    &(&ta * &x.eval_series(&td)) * &e.eval_series(&td)
}

/// Chern character `exp(pξ + qα)` of `O(p, q)`.
pub fn ch_line(n: usize, p: i64, q: i64) -> ChowClass {
    ChowClass::divisor(n, p, q).exp()
}

/// Hirzebruch–Riemann–Roch: `∫ ch · Td`.
pub fn hrr_chi(ch: &ChowClass) -> BigRational {
    (ch * &todd_tangent(ch.n())).degree()
}

/// Closed-form Euler characteristic of `O(p, q)`.
pub fn chi_line(p: i64, q: i64, n: usize) -> Result<BigInt> {
    let rising = |start: i64, len: usize| -> BigInt {
        (0..len as i64).fold(BigInt::one(), |acc, j| acc * BigInt::from(start + j))
    };
    let num = rising(p + q + 1, n) - rising(q, n);
    let (quot, rem) = num.div_rem(&factorial(n));
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(Error::NonIntegral(format!("{num}/{}", factorial(n))))
    }
}

/// An ample line bundle `O(a, b)` used to measure degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polarization {
    pub n: usize,
    pub a: i64,
    pub b: i64,
}

impl Polarization {
    /// The fixed polarization `O(1, N_n)` for odd `n ≥ 3`: `N_3 = 1`, `N_n = (n − 3)/2`.
    pub fn standard(n: usize) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::Invalid(format!(
                "no default polarization for n = {n}; pass an explicit (a, b)"
            )));
        }
        let nn = if n == 3 { 1 } else { (n as i64 - 3) / 2 };
        Ok(Polarization { n, a: 1, b: nn })
    }

    pub fn custom(n: usize, a: i64, b: i64) -> Self {
        Polarization { n, a, b }
    }

    pub fn twist(&self) -> TwistPair {
        (self.a, self.b)
    }

    pub fn c1(&self) -> ChowClass {
        ChowClass::divisor(self.n, self.a, self.b)
    }

    /// `L^{⊗2} ⊗ ω`.
    pub fn instanton_determinant(&self) -> TwistPair {
        let w = CanonicalData::new(self.n).omega;
        (2 * self.a + w.0, 2 * self.b + w.1)
    }
}

/// The canonical bundle `ω = O(−2, 1 − n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalData {
    pub n: usize,
    pub omega: TwistPair,
}

impl CanonicalData {
    pub fn new(n: usize) -> Self {
        CanonicalData {
            n,
            omega: (-2, 1 - n as i64),
        }
    }
}

/// `δ_L(θ) = c₁(θ)·c₁(L)^{n−1}` for a line bundle `θ`.
pub fn delta(theta: TwistPair, l: &Polarization) -> BigInt {
    degree_against(&ChowClass::divisor(l.n, theta.0, theta.1), l)
}

/// `c₁·c₁(L)^{n−1}` for an arbitrary first Chern class.
pub fn degree_against(c1: &ChowClass, l: &Polarization) -> BigInt {
    let d = (c1 * &l.c1().pow(l.n as u32 - 1)).degree();
    assert!(d.is_integer(), "degree of an integral class");
    d.to_integer()
}

pub fn slope(c1: &ChowClass, rank: u32, l: &Polarization) -> BigRational {
    assert!(rank > 0, "slope needs positive rank");
    BigRational::new(degree_against(c1, l), BigInt::from(rank))
}

/// `c₂·c₁(L)^{n−2}`.
pub fn charge(c2: &ChowClass, l: &Polarization) -> BigRational {
    (c2 * &l.c1().pow(l.n as u32 - 2)).degree()
}

pub fn to_i64(x: &BigInt) -> i64 {
    x.to_i64().expect("value fits in i64")
}
