use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::chow::{chi_line, ChowClass, TwistPair};
use crate::error::Result;
use crate::projcoh::binom;

/// Grothendieck class written as a signed combination of line bundles `O(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KClass {
    terms: BTreeMap<TwistPair, BigInt>,
}

impl KClass {
    pub fn zero() -> Self {
        KClass::default()
    }

    pub fn line(p: i64, q: i64) -> Self {
        let mut k = KClass::zero();
        k.add_line((p, q), BigInt::one());
        k
    }

    /// `pr*Ω^l_{P^{n-1}} ⊗ O(p, q)`, from the Koszul complex of the Euler sequence.
    pub fn omega(l: usize, p: i64, q: i64, n: usize) -> Self {
        let mut k = KClass::zero();
        for j in 0..=l {
            let t = (l - j) as i64;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            k.add_line((p, q - t), BigInt::from(sign * binom(n as i64, t)));
        }
        k
    }

    pub fn from_terms(terms: &[(TwistPair, i64)]) -> Self {
        let mut k = KClass::zero();
        for &(t, c) in terms {
            k.add_line(t, BigInt::from(c));
        }
        k
    }

    fn add_line(&mut self, t: TwistPair, c: BigInt) {
        let e = self.terms.entry(t).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TwistPair, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &KClass) -> KClass {
        let mut k = self.clone();
        for (t, c) in &other.terms {
            k.add_line(*t, c.clone());
        }
        k
    }

    pub fn sub(&self, other: &KClass) -> KClass {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> KClass {
        let mut k = KClass::zero();
        for (t, v) in &self.terms {
            k.add_line(*t, v * c);
        }
        k
    }

    pub fn twist(&self, a: i64, b: i64) -> KClass {
        KClass { terms: self.terms.iter().map(|(&(p, q), c)| ((p + a, q + b), c.clone())).collect() }
    }

    pub fn rank(&self) -> i64 {
        self.terms.values().map(|c| c.to_i64().expect("rank fits i64")).sum()
    }

    /// First Chern class as a twist pair.
    pub fn det(&self) -> TwistPair {
        self.terms.iter().fold((0, 0), |(a, b), (&(p, q), c)| {
            let c = c.to_i64().expect("multiplicity fits i64");
            (a + c * p, b + c * q)
        })
    }

    pub fn chern(&self, n: usize) -> ChowClass {
        let mut c = ChowClass::one(n);
        for (&(p, q), k) in &self.terms {
            let one_plus = &ChowClass::one(n) + &ChowClass::divisor(n, p, q);
            let base = if k.is_negative() { one_plus.inverse_unipotent() } else { one_plus };
            let e = k.abs().to_u32().expect("multiplicity fits u32");
            c = &c * &base.pow(e);
        }
        c
    }

    pub fn chi(&self, n: usize) -> Result<BigInt> {
        let mut s = BigInt::zero();
        for (&(p, q), k) in &self.terms {
            s += k * chi_line(p, q, n)?;
        }
        Ok(s)
    }
}
