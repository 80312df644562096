//! Terms of the Beilinson-type complex on the blow-up
//!
//! `C^p = ⊕_{s − i = p} ⊕_{q + h = i} H^s(F ⊗ O(−h, h − q)) ⊗ Ω^q(−h, q)`,
//!
//! with `h ∈ {0, 1}` and `0 ≤ q ≤ n − 1`, and the monad they assemble into.

use std::fmt;

use serde::Serialize;

use crate::chow::TwistPair;
use crate::error::{Error, Result};
use crate::les::{CohTable, Solver, SolverOptions};
use crate::sheafdag::{KClass, Registry, SheafExpr};

/// `Ω^q ⊗ O(−h, q)` with `Ω⁰ = O` and `Ω^{n−1} = O(0, −n)`.
pub fn coefficient_bundle(h: usize, q: usize, n: usize) -> SheafExpr {
    let (a, b) = (-(h as i64), q as i64);
    if q == n - 1 {
        SheafExpr::line(a, b - n as i64)
    } else {
        SheafExpr::omega(q, a, b)
    }
}

/// Twist of `F` whose cohomology multiplies `coefficient_bundle(h, q)`.
pub fn query_twist(h: usize, q: usize) -> TwistPair {
    (-(h as i64), h as i64 - q as i64)
}

/// All twists a term computation reads: `O(−h, h − q)` over `h ∈ {0,1}`, `q ∈ [0, n−1]`.
pub fn query_twists(n: usize) -> Vec<TwistPair> {
    let mut v = Vec::new();
    for h in 0..2 {
        for q in 0..n {
            v.push(query_twist(h, q));
        }
    }
    v
}

#[derive(Debug, Clone, Serialize)]
pub struct MonadSummand {
    pub multiplicity: i64,
    pub s: usize,
    pub h: usize,
    pub q: usize,
    /// e.g. `H^4(E(0,−3))`
    pub group: String,
    pub bundle: SheafExpr,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonadTerm {
    pub p: i64,
    pub summands: Vec<MonadSummand>,
}

impl MonadTerm {
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn expr(&self) -> SheafExpr {
        let mut terms = Vec::new();
        for s in &self.summands {
            for _ in 0..s.multiplicity {
                terms.push(s.bundle.clone());
            }
        }
        SheafExpr::sum(terms)
    }

    pub fn kclass(&self, n: usize) -> KClass {
        let mut k = KClass::zero();
        for s in &self.summands {
            let b = match &s.bundle {
                SheafExpr::Line { p, q } => KClass::line(*p, *q),
                SheafExpr::Omega { l, p, q } => KClass::omega(*l, *p, *q, n),
                _ => unreachable!("coefficient bundles are lines or twisted differentials"),
            };
            k = k.add(&b.scale(s.multiplicity));
        }
        k
    }
}

impl fmt::Display for MonadTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr())
    }
}

/// Degree-`p` term from an exact table over `query_twists(n)`.
pub fn c_terms(table: &CohTable, p: i64, n: usize) -> Result<MonadTerm> {
    let mut summands = Vec::new();
    for s in 0..=n {
        let i = s as i64 - p;
        for h in 0..2usize {
            let q = i - h as i64;
            if q < 0 || q >= n as i64 {
                continue;
            }
            let q = q as usize;
            let tw = query_twist(h, q);
            let j = table
                .twists
                .iter()
                .position(|t| *t == tw)
                .ok_or_else(|| Error::Invalid(format!("table lacks the twist O({},{})", tw.0, tw.1)))?;
            let v = table.rows[s][j];
            let m = v.value().ok_or_else(|| Error::Inexact(format!("h^{s}({})", table.columns[j])))?;
            if m != 0 {
                summands.push(MonadSummand {
                    multiplicity: m,
                    s,
                    h,
                    q,
                    group: format!("H^{s}({})", table.columns[j]),
                    bundle: coefficient_bundle(h, q, n),
                });
            }
        }
    }
    Ok(MonadTerm { p, summands })
}

#[derive(Debug, Clone, Serialize)]
pub struct MonadChecks {
    pub rank: bool,
    pub chern: bool,
    pub euler: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Monad {
    pub sheaf: String,
    pub n: usize,
    pub minus: MonadTerm,
    pub zero: MonadTerm,
    pub plus: MonadTerm,
    pub table: CohTable,
    pub checks: MonadChecks,
}

impl Monad {
    pub fn terms(&self) -> [&MonadTerm; 3] {
        [&self.minus, &self.zero, &self.plus]
    }
}

impl fmt::Display for Monad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 → {} → {} → {} → 0", self.minus, self.zero, self.plus)
    }
}

/// Table of `e` over the query twists, solved on a fresh session.
pub fn query_table(reg: &Registry, e: &SheafExpr, opts: SolverOptions) -> Result<CohTable> {
    let mut s = Solver::new(reg, opts);
    s.table(e, &query_twists(reg.n()))
}

/// Checks `C^p = 0` away from `{−1, 0, 1}` and returns the three remaining terms.
pub fn monad_from_table(reg: &Registry, e: &SheafExpr, table: CohTable) -> Result<Monad> {
    let n = reg.n();
    for p in -(n as i64)..=(n as i64) {
        if (-1..=1).contains(&p) {
            continue;
        }
        let t = c_terms(&table, p, n)?;
        if !t.is_zero() {
            let groups: Vec<String> = t.summands.iter().map(|s| s.group.clone()).collect();
            return Err(Error::MonadObstruction { degree: p, detail: groups.join(", ") });
        }
    }
    let minus = c_terms(&table, -1, n)?;
    let zero = c_terms(&table, 0, n)?;
    let plus = c_terms(&table, 1, n)?;
    let k = zero.kclass(n).sub(&minus.kclass(n)).sub(&plus.kclass(n));
    let ke = reg.kclass(e)?;
    let checks = MonadChecks {
        rank: k.rank() == ke.rank(),
        chern: k.chern(n) == ke.chern(n),
        euler: k.chi(n)? == ke.chi(n)?,
    };
    Ok(Monad { sheaf: e.to_string(), n, minus, zero, plus, table, checks })
}

pub fn monad_for(reg: &Registry, e: &SheafExpr, opts: SolverOptions) -> Result<Monad> {
    let t = query_table(reg, e, opts)?;
    monad_from_table(reg, e, t)
}

/// Where an `(h, q)` entry of a contribution table comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowSource {
    /// Produced by `s − (h + q) = p`.
    Formula,
    /// Listed with the degree `−1` terms although `h + q ≤ n < s + 1`.
    Listed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContributionRow {
    pub s: usize,
    pub pairs: Vec<(usize, usize)>,
    pub source: RowSource,
}

fn formula_pairs(p: i64, s: usize, n: usize) -> Vec<(usize, usize)> {
    let i = s as i64 - p;
    let mut v = Vec::new();
    for h in 0..2usize {
        let q = i - h as i64;
        if (0..n as i64).contains(&q) {
            v.push((h, q as usize));
        }
    }
    v.sort_by_key(|&(h, q)| (h, std::cmp::Reverse(q)));
    v
}

/// Contributing `(h, q)` for `s ∈ {0, 1, n−1, n}` (the middle range vanishes for instantons).
///
/// In degree `−1` the row `s = n` is empty by the formula; the listed monad keeps the pairs
/// `(0, n−1)`, `(1, n−2)` there, and so does this table, marked [`RowSource::Listed`].
pub fn contribution_tables(p: i64, n: usize) -> Vec<ContributionRow> {
    let mut rows = Vec::new();
    for s in [0, 1, n - 1, n] {
        let pairs = formula_pairs(p, s, n);
        if p == -1 && s == n {
            rows.push(ContributionRow { s, pairs: vec![(0, n - 1), (1, n - 2)], source: RowSource::Listed });
        } else {
            rows.push(ContributionRow { s, pairs, source: RowSource::Formula });
        }
    }
    rows
}

/// Groups that would feed `C^2`: `(s, twist)`.
pub fn obstruction_list(n: usize) -> Vec<(usize, TwistPair)> {
    let mut v = Vec::new();
    for s in [n, n - 1] {
        for (h, q) in formula_pairs(2, s, n) {
            v.push((s, query_twist(h, q)));
        }
    }
    v
}
