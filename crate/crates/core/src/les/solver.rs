use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::chain::{narrow_chain, ChainState};
use super::interval::DimInterval;
use crate::chow::TwistPair;
use crate::error::{Error, Result};
use crate::projcoh::{h_line, h_omega};
use crate::sections::{h0_ideal, restriction_cost, CoordinateMode, SubvarietySpec};
use crate::sheafdag::{Registry, SheafExpr};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "key", rename_all = "snake_case")]
pub enum Key {
    H { sheaf: SheafExpr, i: usize },
    Delta { sheaf: SheafExpr },
}

impl Key {
    pub fn h(sheaf: &SheafExpr, i: usize) -> Self {
        Key::H { sheaf: sheaf.clone(), i }
    }

    pub fn delta(sheaf: &SheafExpr) -> Self {
        Key::Delta { sheaf: sheaf.clone() }
    }

    pub fn sheaf(&self) -> &SheafExpr {
        match self {
            Key::H { sheaf, .. } | Key::Delta { sheaf } => sheaf,
        }
    }

    fn initial(&self) -> DimInterval {
        match self {
            Key::H { .. } => DimInterval::NONNEG,
            Key::Delta { .. } => DimInterval::UNBOUNDED,
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::H { sheaf, i } => write!(f, "h^{i}({sheaf})"),
            Key::Delta { sheaf } => write!(f, "δ({sheaf})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FactSource {
    #[serde(rename = "FORMULA")]
    Formula,
    #[serde(rename = "ORACLE")]
    Oracle,
    #[serde(rename = "DUALITY")]
    Duality,
    #[serde(rename = "LES")]
    Les,
    #[serde(rename = "AXIOM")]
    Axiom,
    #[serde(rename = "USER")]
    User,
}

impl fmt::Display for FactSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FactSource::Formula => "FORMULA",
            FactSource::Oracle => "ORACLE",
            FactSource::Duality => "DUALITY",
            FactSource::Les => "LES",
            FactSource::Axiom => "AXIOM",
            FactSource::User => "USER",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ConstraintKind {
    Fact { key: Key, value: DimInterval },
    Equal { a: Key, b: Key },
    /// `total = Σ multiplicity · part`
    SumEq { total: Key, parts: Vec<(Key, i64)> },
    /// `delta = h0 − h1`
    DeltaDef { delta: Key, h0: Key, h1: Key },
    /// Long exact sequence of a twisted registered sequence.
    Chain { record: String, twist: TwistPair, h: Vec<Key>, delta: [Key; 3] },
}

#[derive(Debug, Clone, Serialize)]
pub struct Constraint {
    pub id: usize,
    pub label: String,
    pub source: FactSource,
    #[serde(flatten)]
    pub kind: ConstraintKind,
}

impl Constraint {
    pub fn keys(&self) -> Vec<&Key> {
        match &self.kind {
            ConstraintKind::Fact { key, .. } => vec![key],
            ConstraintKind::Equal { a, b } => vec![a, b],
            ConstraintKind::SumEq { total, parts } => {
                let mut v = vec![total];
                v.extend(parts.iter().map(|p| &p.0));
                v
            }
            ConstraintKind::DeltaDef { delta, h0, h1 } => vec![delta, h0, h1],
            ConstraintKind::Chain { h, delta, .. } => h.iter().chain(delta.iter()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub constraint: usize,
    pub label: String,
    pub source: FactSource,
    pub key: Key,
    pub before: DimInterval,
    pub after: DimInterval,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SolverOptions {
    /// How many registered sequences deep an expression is unfolded.
    pub depth: usize,
    pub use_oracle: bool,
    /// Largest `source × target` evaluation matrix the oracle will eliminate.
    pub oracle_cost_cap: usize,
    pub coordinates: CoordinateMode,
    pub iteration_cap: usize,
    /// Widest rank range the exhaustive pass enumerates.
    pub dp_cap: i64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            depth: 4,
            use_oracle: true,
            oracle_cost_cap: 250_000,
            coordinates: CoordinateMode::Fixed,
            iteration_cap: 1_000_000,
            dp_cap: 160,
        }
    }
}

fn fmt_int(v: i64) -> String {
    if v < 0 {
        format!("−{}", -v)
    } else {
        v.to_string()
    }
}

type State = BTreeMap<Key, DimInterval>;

fn get(st: &State, k: &Key) -> DimInterval {
    st.get(k).copied().unwrap_or_else(|| k.initial())
}

fn tighten(
    st: &State,
    out: &mut BTreeMap<Key, DimInterval>,
    k: &Key,
    by: &DimInterval,
    label: &str,
) -> Result<()> {
    let cur = out.get(k).copied().unwrap_or_else(|| get(st, k));
    match cur.intersect(by) {
        None => Err(Error::Infeasible { key: k.to_string(), detail: format!("{label}: {cur} ∩ {by} is empty") }),
        Some(v) => {
            if v != cur {
                out.insert(k.clone(), v);
            }
            Ok(())
        }
    }
}

/// Applies one constraint to `st`; returns the strictly tighter values, in key order.
fn apply(c: &Constraint, st: &State, opts: &SolverOptions) -> Result<Vec<(Key, DimInterval)>> {
    let mut out: BTreeMap<Key, DimInterval> = BTreeMap::new();
    let cur = |out: &BTreeMap<Key, DimInterval>, k: &Key| out.get(k).copied().unwrap_or_else(|| get(st, k));
    match &c.kind {
        ConstraintKind::Fact { key, value } => tighten(st, &mut out, key, value, &c.label)?,
        ConstraintKind::Equal { a, b } => {
            let (va, vb) = (get(st, a), get(st, b));
            tighten(st, &mut out, a, &vb, &c.label)?;
            tighten(st, &mut out, b, &va, &c.label)?;
        }
        ConstraintKind::SumEq { total, parts } => {
            for _ in 0..2 {
                let sum = parts
                    .iter()
                    .fold(DimInterval::exact(0), |acc, (k, m)| acc.add(&cur(&out, k).scale(*m)));
                tighten(st, &mut out, total, &sum, &c.label)?;
                for (idx, (k, m)) in parts.iter().enumerate() {
                    let others = parts
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != idx)
                        .fold(DimInterval::exact(0), |acc, (_, (k2, m2))| acc.add(&cur(&out, k2).scale(*m2)));
                    let rest = cur(&out, total).sub(&others).div_exact_range(*m);
                    tighten(st, &mut out, k, &rest, &c.label)?;
                }
            }
        }
        ConstraintKind::DeltaDef { delta, h0, h1 } => {
            for _ in 0..2 {
                let (d, a, b) = (cur(&out, delta), cur(&out, h0), cur(&out, h1));
                tighten(st, &mut out, delta, &a.sub(&b), &c.label)?;
                let d = cur(&out, delta).intersect(&d).unwrap_or(d);
                tighten(st, &mut out, h0, &d.add(&b), &c.label)?;
                let a = cur(&out, h0);
                tighten(st, &mut out, h1, &a.sub(&d), &c.label)?;
            }
        }
        ConstraintKind::Chain { h, delta, .. } => {
            let mut cs = ChainState {
                d: h.iter().map(|k| get(st, k)).collect(),
                delta: [get(st, &delta[0]), get(st, &delta[1]), get(st, &delta[2])],
            };
            narrow_chain(&mut cs, opts.dp_cap)
                .map_err(|detail| Error::Infeasible { key: c.label.clone(), detail })?;
            for (k, v) in h.iter().zip(&cs.d) {
                tighten(st, &mut out, k, v, &c.label)?;
            }
            for (k, v) in delta.iter().zip(&cs.delta) {
                tighten(st, &mut out, k, v, &c.label)?;
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Grid of intervals `h^i(F ⊗ O(twist))`.
#[derive(Debug, Clone, Serialize)]
pub struct CohTable {
    pub sheaf: String,
    pub n: usize,
    pub twists: Vec<TwistPair>,
    pub columns: Vec<String>,
    /// `rows[i][j] = h^i` of column `j`.
    pub rows: Vec<Vec<DimInterval>>,
}

impl CohTable {
    pub fn is_exact(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.is_exact())
    }

    pub fn get(&self, i: usize, twist: TwistPair) -> Option<DimInterval> {
        let j = self.twists.iter().position(|t| *t == twist)?;
        Some(self.rows[i][j])
    }

    pub fn nonzero(&self) -> Vec<(usize, TwistPair, DimInterval)> {
        let mut v = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if x.value() != Some(0) {
                    v.push((i, self.twists[j], *x));
                }
            }
        }
        v
    }

    /// Column headers `name(a,b)` for the twists instead of normal forms.
    pub fn with_label(mut self, name: &str) -> Self {
        self.columns = self
            .twists
            .iter()
            .map(|&(a, b)| if (a, b) == (0, 0) { name.to_string() } else { format!("{name}({},{})", fmt_int(a), fmt_int(b)) })
            .collect();
        self.sheaf = name.to_string();
        self
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!("| | {} |\n|---|", self.columns.join(" | "));
        s.push_str(&"---|".repeat(self.columns.len()));
        s.push('\n');
        for (i, row) in self.rows.iter().enumerate().rev() {
            s.push_str(&format!("| h^{i} | "));
            s.push_str(&row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" | "));
            s.push_str(" |\n");
        }
        s
    }
}

/// Propagation session over a fixed registry.
pub struct Solver<'r> {
    reg: &'r Registry,
    opts: SolverOptions,
    state: State,
    constraints: Vec<Constraint>,
    watchers: BTreeMap<Key, Vec<usize>>,
    expanded: BTreeMap<SheafExpr, usize>,
    chains: BTreeSet<(usize, TwistPair)>,
    oracle_tried: BTreeSet<SheafExpr>,
    pending: VecDeque<usize>,
    queued: Vec<bool>,
    trace: Vec<TraceStep>,
    applications: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolverStats {
    pub keys: usize,
    pub constraints: usize,
    pub applications: usize,
    pub trace_steps: usize,
}

impl<'r> Solver<'r> {
    pub fn new(reg: &'r Registry, opts: SolverOptions) -> Self {
        Solver {
            reg,
            opts,
            state: BTreeMap::new(),
            constraints: Vec::new(),
            watchers: BTreeMap::new(),
            expanded: BTreeMap::new(),
            chains: BTreeSet::new(),
            oracle_tried: BTreeSet::new(),
            pending: VecDeque::new(),
            queued: Vec::new(),
            trace: Vec::new(),
            applications: 0,
        }
    }

    pub fn registry(&self) -> &Registry {
        self.reg
    }

    pub fn options(&self) -> &SolverOptions {
        &self.opts
    }

    pub fn n(&self) -> usize {
        self.reg.n()
    }

    fn add_constraint(&mut self, kind: ConstraintKind, label: String, source: FactSource) -> usize {
        let id = self.constraints.len();
        let c = Constraint { id, label, source, kind };
        for k in c.keys() {
            self.state.entry(k.clone()).or_insert_with(|| k.initial());
            let w = self.watchers.entry(k.clone()).or_default();
            if w.last() != Some(&id) {
                w.push(id);
            }
        }
        self.constraints.push(c);
        self.queued.push(true);
        self.pending.push_back(id);
        id
    }

    /// Injects an externally justified bound.
    pub fn add_fact(&mut self, key: Key, value: DimInterval, source: FactSource, label: &str) -> Result<()> {
        let sheaf = self.reg.normalize(key.sheaf())?;
        self.expand(&sheaf, self.opts.depth)?;
        let key = match key {
            Key::H { i, .. } => Key::h(&sheaf, i),
            Key::Delta { .. } => Key::delta(&sheaf),
        };
        self.add_constraint(ConstraintKind::Fact { key, value }, label.to_string(), source);
        Ok(())
    }

    /// Unfolds `e` through the registry, adding keys and constraints.
    pub fn expand(&mut self, e: &SheafExpr, depth: usize) -> Result<()> {
        let e = self.reg.normalize(e)?;
        let n = self.n();
        let first = match self.expanded.get(&e) {
            Some(&d) if d >= depth => return Ok(()),
            Some(_) => false,
            None => true,
        };
        self.expanded.insert(e.clone(), depth);
        if first {
            self.add_constraint(
                ConstraintKind::DeltaDef { delta: Key::delta(&e), h0: Key::h(&e, 0), h1: Key::h(&e, 1) },
                format!("δ({e}) = h⁰ − h¹"),
                FactSource::Formula,
            );
            for i in 0..=n {
                self.state.entry(Key::h(&e, i)).or_insert(DimInterval::NONNEG);
            }
        }
        match &e {
            SheafExpr::Line { p, q } => {
                if first {
                    for i in 0..=n {
                        let v = h_line(i as i64, *p, *q, n);
                        self.add_constraint(
                            ConstraintKind::Fact { key: Key::h(&e, i), value: DimInterval::exact(v) },
                            format!("line bundle formula for h^{i}({e})"),
                            FactSource::Formula,
                        );
                    }
                }
            }
            SheafExpr::Omega { l, p, q } => {
                if first {
                    for i in 0..=n {
                        let v = h_omega(i as i64, *l, *p, *q, n);
                        self.add_constraint(
                            ConstraintKind::Fact { key: Key::h(&e, i), value: DimInterval::exact(v) },
                            format!("Bott pushforward for h^{i}({e})"),
                            FactSource::Formula,
                        );
                    }
                }
            }
            SheafExpr::Push { sub, m } => {
                if first {
                    let y = SubvarietySpec::new(*sub, n)?;
                    for i in 0..=n {
                        let v = y.h(i as i64, *m);
                        self.add_constraint(
                            ConstraintKind::Fact { key: Key::h(&e, i), value: DimInterval::exact(v) },
                            format!("cohomology of {e} on its component"),
                            FactSource::Formula,
                        );
                    }
                }
            }
            SheafExpr::Sum { terms } => {
                let mut grouped: BTreeMap<&SheafExpr, i64> = BTreeMap::new();
                for t in terms {
                    *grouped.entry(t).or_default() += 1;
                }
                if first {
                    for i in 0..=n {
                        let parts = grouped.iter().map(|(t, m)| (Key::h(t, i), *m)).collect();
                        self.add_constraint(
                            ConstraintKind::SumEq { total: Key::h(&e, i), parts },
                            format!("additivity of h^{i} over {e}"),
                            FactSource::Formula,
                        );
                    }
                    let parts = grouped.iter().map(|(t, m)| (Key::delta(t), *m)).collect();
                    self.add_constraint(
                        ConstraintKind::SumEq { total: Key::delta(&e), parts },
                        format!("additivity of δ over {e}"),
                        FactSource::Formula,
                    );
                }
                let children: Vec<SheafExpr> = grouped.keys().map(|t| (*t).clone()).collect();
                for t in children {
                    self.expand(&t, depth)?;
                }
            }
            SheafExpr::Ideal { .. } | SheafExpr::Named { .. } | SheafExpr::Twist { .. } | SheafExpr::Dual { .. } => {
                if depth == 0 {
                    return Ok(());
                }
                for (idx, tw) in self.reg.matching(&e) {
                    let rec = &self.reg.records()[idx];
                    let terms: Vec<SheafExpr> = rec
                        .twisted(tw.0, tw.1)
                        .iter()
                        .map(|t| self.reg.normalize(t))
                        .collect::<Result<_>>()?;
                    if self.chains.insert((idx, tw)) {
                        let mut h = Vec::with_capacity(3 * (n + 1));
                        for i in 0..=n {
                            for t in &terms {
                                h.push(Key::h(t, i));
                            }
                        }
                        let delta = [Key::delta(&terms[0]), Key::delta(&terms[1]), Key::delta(&terms[2])];
                        let label = format!(
                            "long exact sequence of {} ⊗ O({},{}): 0 → {} → {} → {} → 0",
                            rec.id, tw.0, tw.1, terms[0], terms[1], terms[2]
                        );
                        let source = FactSource::Les;
                        self.add_constraint(
                            ConstraintKind::Chain { record: rec.id.clone(), twist: tw, h, delta },
                            label,
                            source,
                        );
                    }
                    for t in terms {
                        if t != e {
                            self.expand(&t, depth - 1)?;
                        }
                    }
                }
                if let Some(dual) = self.reg.serre_dual(&e) {
                    let dual = self.reg.normalize(&dual)?;
                    if first && dual != e {
                        for i in 0..=n {
                            self.add_constraint(
                                ConstraintKind::Equal { a: Key::h(&e, i), b: Key::h(&dual, n - i) },
                                format!("Serre duality h^{i}({e}) = h^{}({dual})", n - i),
                                FactSource::Duality,
                            );
                        }
                    }
                    self.expand(&dual, depth - 1)?;
                }
            }
        }
        Ok(())
    }

    fn propagate(&mut self) -> Result<()> {
        while let Some(cid) = self.pending.pop_front() {
            self.queued[cid] = false;
            self.applications += 1;
            if self.applications > self.opts.iteration_cap {
                return Err(Error::IterationCap(self.opts.iteration_cap));
            }
            let changes = apply(&self.constraints[cid], &self.state, &self.opts)?;
            for (k, v) in changes {
                let before = get(&self.state, &k);
                self.state.insert(k.clone(), v);
                let c = &self.constraints[cid];
                self.trace.push(TraceStep {
                    step: self.trace.len(),
                    constraint: cid,
                    label: c.label.clone(),
                    source: c.source,
                    key: k.clone(),
                    before,
                    after: v,
                });
                if let Some(ws) = self.watchers.get(&k) {
                    for &w in ws {
                        if !self.queued[w] {
                            self.queued[w] = true;
                            self.pending.push_back(w);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn run_oracles(&mut self) -> Result<bool> {
        let candidates: Vec<SheafExpr> = self
            .expanded
            .keys()
            .filter(|e| matches!(e, SheafExpr::Ideal { .. }) && !self.oracle_tried.contains(*e))
            .filter(|e| !get(&self.state, &Key::h(e, 0)).is_exact())
            .cloned()
            .collect();
        let mut added = false;
        for e in candidates {
            self.oracle_tried.insert(e.clone());
            let SheafExpr::Ideal { config, p, q } = &e else { unreachable!() };
            let x = self.reg.config(config)?.to_vec();
            if restriction_cost(&x, *p, *q) > self.opts.oracle_cost_cap {
                continue;
            }
            let v = h0_ideal(&x, *p, *q, self.opts.coordinates)?;
            self.add_constraint(
                ConstraintKind::Fact { key: Key::h(&e, 0), value: DimInterval::exact(v) },
                format!("kernel of the evaluation matrix for H⁰({e})"),
                FactSource::Oracle,
            );
            added = true;
        }
        Ok(added)
    }

    /// Runs propagation, calling the sections oracle on ideal sheaves left inexact, until stable.
    pub fn solve(&mut self) -> Result<()> {
        loop {
            self.propagate()?;
            if !self.opts.use_oracle || !self.run_oracles()? {
                return Ok(());
            }
        }
    }

    pub fn value(&self, k: &Key) -> DimInterval {
        get(&self.state, k)
    }

    pub fn h(&mut self, e: &SheafExpr, i: usize) -> Result<DimInterval> {
        let e = self.reg.normalize(e)?;
        self.expand(&e, self.opts.depth)?;
        self.solve()?;
        Ok(self.value(&Key::h(&e, i)))
    }

    pub fn h_all(&mut self, e: &SheafExpr) -> Result<Vec<DimInterval>> {
        let e = self.reg.normalize(e)?;
        self.expand(&e, self.opts.depth)?;
        self.solve()?;
        Ok((0..=self.n()).map(|i| self.value(&Key::h(&e, i))).collect())
    }

    pub fn delta01(&mut self, e: &SheafExpr) -> Result<DimInterval> {
        let e = self.reg.normalize(e)?;
        self.expand(&e, self.opts.depth)?;
        self.solve()?;
        Ok(self.value(&Key::delta(&e)))
    }

    pub fn table(&mut self, e: &SheafExpr, twists: &[TwistPair]) -> Result<CohTable> {
        let cols: Vec<SheafExpr> =
            twists.iter().map(|&(a, b)| self.reg.normalize(&e.twist(a, b))).collect::<Result<_>>()?;
        for c in &cols {
            self.expand(c, self.opts.depth)?;
        }
        self.solve()?;
        let n = self.n();
        Ok(CohTable {
            sheaf: e.to_string(),
            n,
            twists: twists.to_vec(),
            columns: cols.iter().map(|c| c.to_string()).collect(),
            rows: (0..=n).map(|i| cols.iter().map(|c| self.value(&Key::h(c, i))).collect()).collect(),
        })
    }

    pub fn trace(&self) -> &[TraceStep] {
        &self.trace
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Steps that changed `k`, oldest first.
    pub fn steps_for(&self, k: &Key) -> Vec<&TraceStep> {
        self.trace.iter().filter(|s| s.key == *k).collect()
    }

    /// Steps that changed `k` or, transitively, an input of a constraint that changed it.
    pub fn support(&self, k: &Key) -> Vec<&TraceStep> {
        let mut want: BTreeSet<&Key> = BTreeSet::new();
        want.insert(k);
        let mut keep = vec![false; self.trace.len()];
        for (idx, s) in self.trace.iter().enumerate().rev() {
            if want.contains(&s.key) {
                keep[idx] = true;
                for k2 in self.constraints[s.constraint].keys() {
                    want.insert(k2);
                }
            }
        }
        self.trace.iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect()
    }

    pub fn stats(&self) -> SolverStats {
        SolverStats {
            keys: self.state.len(),
            constraints: self.constraints.len(),
            applications: self.applications,
            trace_steps: self.trace.len(),
        }
    }

    /// Re-applies the recorded constraints in trace order from the initial state and checks
    /// each step and the final state.
    pub fn replay(&self) -> Result<()> {
        let mut st: State = BTreeMap::new();
        for s in &self.trace {
            let cur = get(&st, &s.key);
            if cur == s.after {
                continue;
            }
            if cur != s.before {
                return Err(Error::Invalid(format!(
                    "replay diverged at step {} on {}: have {cur}, recorded {}",
                    s.step, s.key, s.before
                )));
            }
            for (k, v) in apply(&self.constraints[s.constraint], &st, &self.opts)? {
                st.insert(k, v);
            }
            let now = get(&st, &s.key);
            if now != s.after {
                return Err(Error::Invalid(format!(
                    "replay of step {} on {} gives {now}, recorded {}",
                    s.step, s.key, s.after
                )));
            }
        }
        for (k, v) in &self.state {
            if get(&st, k) != *v {
                return Err(Error::Invalid(format!("replayed value of {k} differs from the solved one")));
            }
        }
        Ok(())
    }

    /// Every constraint holds at the current state (no further narrowing possible).
    pub fn check_fixpoint(&self) -> Result<()> {
        for c in &self.constraints {
            let ch = apply(c, &self.state, &self.opts)?;
            if !ch.is_empty() {
                return Err(Error::Invalid(format!("constraint {} still narrows {}", c.label, ch[0].0)));
            }
        }
        Ok(())
    }

    pub fn trace_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.trace)?)
    }
}
