//! Sparse multivariate polynomials with integer coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

/// All exponent vectors of total degree `degree` in `nvars` variables, in lexicographic order
/// (largest first in the leading variable).
pub fn monomials(nvars: usize, degree: i64) -> Vec<Exponents> {
    let mut out = Vec::new();
    if degree < 0 {
        return out;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, degree as u32, &mut out);
    out
}

fn fill(cur: &mut Exponents, pos: usize, left: u32, out: &mut Vec<Exponents>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Poly::term(nvars, vec![0; nvars], c)
    }

    pub fn term(nvars: usize, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Poly::zero(nvars);
        p.add_term(exps, c.into());
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::term(nvars, e, 1)
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; n];
                e[i] = 1;
                p.add_term(e, c.into());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(self.nvars, 1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces each variable `x_i` by `images[i]`; all images share one ring.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut m = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = cache.entry((i, k)).or_insert_with(|| images[i].pow(k)).clone();
                m = m.mul(&pw);
            }
            out = out.add(&m);
        }
        out
    }

    /// Normal form modulo `x_v² + rest` where `rest` is at most linear in `x_v`: every
    /// surviving monomial has `x_v`-exponent at most one.
    pub fn reduce_quadric(&self, v: usize, rest: &Poly) -> Poly {
        let mut cur = self.clone();
        loop {
            let Some((e, c)) = cur
                .terms
                .iter()
                .filter(|(e, _)| e[v] >= 2)
                .max_by_key(|(e, _)| e[v])
                .map(|(e, c)| (e.clone(), c.clone()))
            else {
                return cur;
            };
            let mut quotient = e.clone();
            quotient[v] -= 2;
            let q = Poly::term(self.nvars, quotient, c.clone());
            cur.terms.remove(&e);
            cur = cur.add(&q.mul(rest).scale(&-BigInt::one()));
        }
    }

    /// Coordinates against a monomial basis; panics if a term falls outside it.
    pub fn coordinates(&self, basis: &[Exponents]) -> Vec<BigInt> {
        let idx: BTreeMap<&Exponents, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut v = vec![BigInt::zero(); basis.len()];
        for (e, c) in &self.terms {
            let i = *idx.get(e).expect("term outside target basis");
            v[i] = c.clone();
        }
        v
    }
}
