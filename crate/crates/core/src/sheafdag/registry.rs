use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::expr::{restricted, SheafExpr};
use super::kclass::KClass;
use crate::chow::{ChowClass, TwistPair};
use crate::error::{Error, Result};
use crate::projcoh::h_line;
use crate::sections::{check_disjoint, SubKind, SubvarietySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "RESOLUTION")]
    Resolution,
    #[serde(rename = "RESTRICTION")]
    Restriction,
    #[serde(rename = "SERRE-CONSTRUCTION")]
    SerreConstruction,
    #[serde(rename = "ELEMENTARY-TRANSFORM")]
    ElementaryTransform,
    #[serde(rename = "USER-AXIOM")]
    UserAxiom,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Resolution => "RESOLUTION",
            Provenance::Restriction => "RESTRICTION",
            Provenance::SerreConstruction => "SERRE-CONSTRUCTION",
            Provenance::ElementaryTransform => "ELEMENTARY-TRANSFORM",
            Provenance::UserAxiom => "USER-AXIOM",
        };
        f.write_str(s)
    }
}

/// `0 → sub → mid → quot → 0`, valid after any line-bundle twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SESRecord {
    pub id: String,
    pub sub: SheafExpr,
    pub mid: SheafExpr,
    pub quot: SheafExpr,
    pub provenance: Provenance,
    #[serde(default)]
    pub note: String,
}

impl SESRecord {
    pub fn new(id: &str, sub: SheafExpr, mid: SheafExpr, quot: SheafExpr, provenance: Provenance) -> Self {
        SESRecord { id: id.to_string(), sub, mid, quot, provenance, note: String::new() }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }

    pub fn terms(&self) -> [&SheafExpr; 3] {
        [&self.sub, &self.mid, &self.quot]
    }

    pub fn twisted(&self, a: i64, b: i64) -> [SheafExpr; 3] {
        [self.sub.twist(a, b), self.mid.twist(a, b), self.quot.twist(a, b)]
    }
}

impl fmt::Display for SESRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 → {} → {} → {} → 0", self.sub, self.mid, self.quot)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Sub,
    Mid,
    Quot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Definition {
    record: usize,
    role: Role,
    /// the term is `Named ⊗ O(twist)`
    twist: TwistPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedSheaf {
    pub id: String,
    pub rank: i64,
    pub locally_free: bool,
    /// First Chern class as a twist pair, when known.
    pub det: Option<TwistPair>,
    #[serde(default)]
    pub note: String,
    #[serde(skip)]
    definition: Option<Definition>,
}

/// Append-only store of configurations, named sheaves and short exact sequences.
#[derive(Debug, Clone)]
pub struct Registry {
    n: usize,
    configs: BTreeMap<String, Vec<SubvarietySpec>>,
    named: BTreeMap<String, NamedSheaf>,
    records: Vec<SESRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RegistryDoc {
    n: usize,
    #[serde(default)]
    configs: BTreeMap<String, Vec<SubvarietySpec>>,
    #[serde(default)]
    named: Vec<NamedSheaf>,
    #[serde(default)]
    records: Vec<SESRecord>,
}

impl Registry {
    pub fn new(n: usize) -> Self {
        Registry { n, configs: BTreeMap::new(), named: BTreeMap::new(), records: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn records(&self) -> &[SESRecord] {
        &self.records
    }

    pub fn record(&self, id: &str) -> Option<&SESRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn named(&self, id: &str) -> Option<&NamedSheaf> {
        self.named.get(id)
    }

    pub fn named_sheaves(&self) -> impl Iterator<Item = &NamedSheaf> {
        self.named.values()
    }

    pub fn config(&self, id: &str) -> Result<&[SubvarietySpec]> {
        self.configs
            .get(id)
            .map(|v| v.as_slice())
            .ok_or_else(|| Error::Unresolvable(format!("configuration {id}")))
    }

    pub fn configs(&self) -> impl Iterator<Item = (&String, &Vec<SubvarietySpec>)> {
        self.configs.iter()
    }

    /// Registers `X` and its restriction sequence `0 → I_X → O → ⊕ O_Y → 0`.
    pub fn add_config(&mut self, id: &str, x: Vec<SubvarietySpec>) -> Result<()> {
        check_disjoint(&x)?;
        if let Some(y) = x.iter().find(|y| y.n != self.n) {
            return Err(Error::DimensionMismatch(self.n, y.n));
        }
        if self.configs.contains_key(id) {
            return Err(Error::Invalid(format!("configuration {id} already registered")));
        }
        let quot = SheafExpr::sum(x.iter().map(|y| restricted(y, 0, 0)).collect());
        self.configs.insert(id.to_string(), x);
        let rec = SESRecord::new(
            &format!("restrict-{id}"),
            SheafExpr::ideal(id, 0, 0),
            SheafExpr::line(0, 0),
            quot,
            Provenance::Restriction,
        );
        self.add_record(rec)
    }

    pub fn add_named(
        &mut self,
        id: &str,
        rank: i64,
        locally_free: bool,
        det: Option<TwistPair>,
        note: &str,
    ) -> Result<SheafExpr> {
        if self.named.contains_key(id) {
            return Err(Error::Invalid(format!("sheaf {id} already registered")));
        }
        self.named.insert(
            id.to_string(),
            NamedSheaf {
                id: id.to_string(),
                rank,
                locally_free,
                det,
                note: note.to_string(),
                definition: None,
            },
        );
        Ok(SheafExpr::named(id))
    }

    /// Normal form with duals of rank-2 locally free named sheaves rewritten as twists.
    pub fn normalize(&self, e: &SheafExpr) -> Result<SheafExpr> {
        Ok(match e.normalize() {
            SheafExpr::Dual { inner } => match &*inner {
                SheafExpr::Named { id } => {
                    let s = self.named.get(id).ok_or_else(|| Error::Unresolvable(id.clone()))?;
                    match (s.rank, s.locally_free, s.det) {
                        (2, true, Some((a, b))) => inner.twist(-a, -b),
                        _ => {
                            return Err(Error::Unresolvable(format!(
                                "dual of {id} needs a rank-2 locally free sheaf with known determinant"
                            )))
                        }
                    }
                }
                _ => return Err(Error::Unresolvable(format!("dual of {inner}"))),
            },
            SheafExpr::Twist { inner, a, b } => {
                let base = self.normalize(&inner)?;
                base.twist(a, b)
            }
            SheafExpr::Sum { terms } => {
                SheafExpr::sum(terms.iter().map(|t| self.normalize(t)).collect::<Result<_>>()?)
            }
            other => other,
        })
    }

    fn unknown_named(&self, e: &SheafExpr, out: &mut BTreeSet<String>) {
        match e {
            SheafExpr::Named { id } => {
                if self.named.get(id).is_some_and(|s| s.definition.is_none()) {
                    out.insert(id.clone());
                }
            }
            SheafExpr::Twist { inner, .. } | SheafExpr::Dual { inner } => self.unknown_named(inner, out),
            SheafExpr::Sum { terms } => terms.iter().for_each(|t| self.unknown_named(t, out)),
            _ => {}
        }
    }

    /// Adds a sequence. If exactly one named sheaf in it has no class yet, the sequence
    /// becomes its definition; if none, the class additivity and rank additivity are checked.
    pub fn add_record(&mut self, mut rec: SESRecord) -> Result<()> {
        if self.records.iter().any(|r| r.id == rec.id) {
            return Err(Error::Invalid(format!("sequence {} already registered", rec.id)));
        }
        rec.sub = self.normalize(&rec.sub)?;
        rec.mid = self.normalize(&rec.mid)?;
        rec.quot = self.normalize(&rec.quot)?;
        let mut unknown = BTreeSet::new();
        for t in rec.terms() {
            self.check_known(t)?;
            self.unknown_named(t, &mut unknown);
        }
        let idx = self.records.len();
        match unknown.len() {
            0 => {
                self.records.push(rec);
                if let Err(e) = self.check_record(idx) {
                    self.records.pop();
                    return Err(e);
                }
            }
            1 => {
                let id = unknown.into_iter().next().unwrap();
                let mut def = None;
                for (role, t) in [(Role::Sub, &rec.sub), (Role::Mid, &rec.mid), (Role::Quot, &rec.quot)] {
                    let hit = match t {
                        SheafExpr::Named { id: j } if *j == id => Some((0, 0)),
                        SheafExpr::Twist { inner, a, b } if **inner == SheafExpr::named(&id) => Some((*a, *b)),
                        _ => None,
                    };
                    if let Some(tw) = hit {
                        if def.is_some() {
                            return Err(Error::Invalid(format!("{id} appears twice in {}", rec.id)));
                        }
                        def = Some(Definition { record: idx, role, twist: tw });
                    }
                }
                let def = def.ok_or_else(|| {
                    Error::Invalid(format!("{id} in {} must appear as a bare or twisted term", rec.id))
                })?;
                self.records.push(rec);
                self.named.get_mut(&id).unwrap().definition = Some(def);
                if let Err(e) = self.check_record(idx) {
                    self.records.pop();
                    self.named.get_mut(&id).unwrap().definition = None;
                    return Err(e);
                }
            }
            _ => {
                return Err(Error::Unresolvable(format!(
                    "sequence {} involves several undefined sheaves: {:?}",
                    rec.id, unknown
                )))
            }
        }
        Ok(())
    }

    fn check_known(&self, e: &SheafExpr) -> Result<()> {
        match e {
            SheafExpr::Named { id } if !self.named.contains_key(id) => Err(Error::Unresolvable(id.clone())),
            SheafExpr::Ideal { config, .. } => self.config(config).map(|_| ()),
            SheafExpr::Push { sub, .. } => SubvarietySpec::new(*sub, self.n).map(|_| ()),
            SheafExpr::Omega { l, .. } if *l >= self.n => {
                Err(Error::Invalid(format!("Ω^{l} vanishes on a base of dimension {}", self.n - 1)))
            }
            SheafExpr::Twist { inner, .. } | SheafExpr::Dual { inner } => self.check_known(inner),
            SheafExpr::Sum { terms } => terms.iter().try_for_each(|t| self.check_known(t)),
            _ => Ok(()),
        }
    }

    /// Rank and Whitney consistency of a stored sequence.
    pub fn check_record(&self, idx: usize) -> Result<()> {
        let r = &self.records[idx];
        let [a, b, c] = [self.kclass(&r.sub)?, self.kclass(&r.mid)?, self.kclass(&r.quot)?];
        if a.rank() + c.rank() != b.rank() {
            return Err(Error::Hypothesis(format!("ranks do not add up in {}", r.id)));
        }
        let n = self.n;
        if b.chern(n) != &a.chern(n) * &c.chern(n) {
            return Err(Error::Hypothesis(format!("Whitney formula fails in {}", r.id)));
        }
        if let Some(id) = r.terms().iter().find_map(|t| match t {
            SheafExpr::Named { id } => Some(id.clone()),
            SheafExpr::Twist { inner, .. } => match &**inner {
                SheafExpr::Named { id } => Some(id.clone()),
                _ => None,
            },
            _ => None,
        }) {
            let s = &self.named[&id];
            let k = self.kclass(&SheafExpr::named(&id))?;
            if k.rank() != s.rank {
                return Err(Error::Hypothesis(format!("{id} has declared rank {} but class rank {}", s.rank, k.rank())));
            }
            if let Some(d) = s.det {
                if k.det() != d {
                    return Err(Error::Hypothesis(format!("{id} has declared determinant {d:?} but class {:?}", k.det())));
                }
            }
        }
        Ok(())
    }

    pub fn kclass(&self, e: &SheafExpr) -> Result<KClass> {
        self.kclass_guarded(e, &mut Vec::new())
    }

    fn kclass_guarded(&self, e: &SheafExpr, stack: &mut Vec<String>) -> Result<KClass> {
        let n = self.n;
        Ok(match e {
            SheafExpr::Line { p, q } => KClass::line(*p, *q),
            SheafExpr::Omega { l, p, q } => KClass::omega(*l, *p, *q, n),
            SheafExpr::Push { sub, m } => {
                let y = SubvarietySpec::new(*sub, n)?;
                let (a, b) = y.twist_for_degree(*m);
                KClass::from_terms(&y.resolution()).twist(a, b)
            }
            SheafExpr::Sum { terms } => {
                let mut k = KClass::zero();
                for t in terms {
                    k = k.add(&self.kclass_guarded(t, stack)?);
                }
                k
            }
            SheafExpr::Ideal { config, p, q } => {
                let mut k = KClass::line(0, 0);
                for y in self.config(config)? {
                    k = k.sub(&KClass::from_terms(&y.resolution()));
                }
                k.twist(*p, *q)
            }
            SheafExpr::Twist { inner, a, b } => self.kclass_guarded(inner, stack)?.twist(*a, *b),
            SheafExpr::Dual { .. } => return self.kclass_guarded(&self.normalize(e)?, stack),
            SheafExpr::Named { id } => {
                if stack.contains(id) {
                    return Err(Error::Unresolvable(format!("cyclic definition of {id}")));
                }
                let s = self.named.get(id).ok_or_else(|| Error::Unresolvable(id.clone()))?;
                let d = s.definition.ok_or_else(|| Error::Unresolvable(format!("{id} has no defining sequence")))?;
                stack.push(id.clone());
                let r = &self.records[d.record];
                let term = match d.role {
                    Role::Mid => self.kclass_guarded(&r.sub, stack)?.add(&self.kclass_guarded(&r.quot, stack)?),
                    Role::Sub => self.kclass_guarded(&r.mid, stack)?.sub(&self.kclass_guarded(&r.quot, stack)?),
                    Role::Quot => self.kclass_guarded(&r.mid, stack)?.sub(&self.kclass_guarded(&r.sub, stack)?),
                };
                stack.pop();
                term.twist(-d.twist.0, -d.twist.1)
            }
        })
    }

    pub fn chern_of(&self, e: &SheafExpr) -> Result<ChowClass> {
        Ok(self.kclass(e)?.chern(self.n))
    }

    pub fn rank_of(&self, e: &SheafExpr) -> Result<i64> {
        Ok(self.kclass(e)?.rank())
    }

    pub fn det_of(&self, e: &SheafExpr) -> Result<TwistPair> {
        Ok(self.kclass(e)?.det())
    }

    pub fn chi_of(&self, e: &SheafExpr) -> Result<BigInt> {
        self.kclass(e)?.chi(self.n)
    }

    /// For a locally free `e` with known determinant, the sheaf `e^∨ ⊗ ω` computing
    /// `h^i(e) = h^{n-i}(e^∨ ⊗ ω)`.
    pub fn serre_dual(&self, e: &SheafExpr) -> Option<SheafExpr> {
        let n = self.n as i64;
        match e {
            SheafExpr::Line { p, q } => Some(SheafExpr::line(-2 - p, 1 - n - q)),
            SheafExpr::Named { .. } | SheafExpr::Twist { .. } => {
                let (base, (a, b)) = e.anchor()?;
                let SheafExpr::Named { id } = &base else { return None };
                let s = self.named.get(id)?;
                if !s.locally_free || s.rank != 2 {
                    return None;
                }
                let (da, db) = s.det?;
                Some(base.twist(-da - a - 2, -db - b + 1 - n))
            }
            _ => None,
        }
    }

    /// Sequences with a term of the same anchor as `e`, with the twist that makes it match.
    pub fn matching(&self, e: &SheafExpr) -> Vec<(usize, TwistPair)> {
        let Some((base, (a, b))) = e.anchor() else { return Vec::new() };
        let mut out = BTreeSet::new();
        for (i, r) in self.records.iter().enumerate() {
            for t in r.terms() {
                if let Some((tb, (ta, tb2))) = t.anchor() {
                    if tb == base {
                        out.insert((i, (a - ta, b - tb2)));
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Hartshorne–Serre: a rank-2 bundle `F` with `0 → O → F → I_X ⊗ S → 0`.
    pub fn serre_construct(&mut self, config: &str, s: TwistPair, id: &str) -> Result<SheafExpr> {
        let n = self.n;
        let x = self.config(config)?.to_vec();
        let (a, b) = s;
        for i in [1, 2] {
            let h = h_line(i, -a, -b, n);
            if h != 0 {
                return Err(Error::Hypothesis(format!("h^{i}(S^-1) = {h} for S = O({a},{b})")));
            }
        }
        for y in &x {
            let d = y.restriction_degree(a, b);
            if d != y.det_normal() {
                return Err(Error::Hypothesis(format!(
                    "S restricts to O({d}) on {y} but det N is O({})",
                    y.det_normal()
                )));
            }
        }
        let f = self.add_named(id, 2, true, Some(s), &format!("extension of I_{config}({a},{b}) by O"))?;
        self.add_record(SESRecord::new(
            &format!("{id}-seq"),
            SheafExpr::line(0, 0),
            f.clone(),
            SheafExpr::ideal(config, a, b),
            Provenance::SerreConstruction,
        ))?;
        Ok(f)
    }

    /// Kernel `G` of an assumed surjection `E → O_Y`.
    pub fn elementary_transform(&mut self, e: &SheafExpr, sub: SubKind, id: &str) -> Result<SheafExpr> {
        if sub != SubKind::Wp {
            return Err(Error::Invalid(format!("elementary transforms are supported along ℘ only, got {sub}")));
        }
        let e = self.normalize(e)?;
        let k = self.kclass(&e)?;
        if k.rank() != 2 {
            return Err(Error::Invalid(format!("{e} has rank {}", k.rank())));
        }
        let g = self.add_named(id, 2, false, Some(k.det()), &format!("kernel of {e} → O_℘"))?;
        self.add_record(
            SESRecord::new(
                &format!("{id}-seq"),
                g.clone(),
                e,
                SheafExpr::push(SubKind::Wp, 0),
                Provenance::ElementaryTransform,
            )
            .with_note("surjection onto the pushforward is assumed, not verified"),
        )?;
        Ok(g)
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = RegistryDoc {
            n: self.n,
            configs: self.configs.clone(),
            named: self.named.values().cloned().collect(),
            records: self.records.iter().filter(|r| r.provenance != Provenance::Restriction).cloned().collect(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: RegistryDoc = serde_json::from_str(s)?;
        let mut r = Registry::new(doc.n);
        r.merge_doc(doc)?;
        Ok(r)
    }

    /// Adds everything from an exported document that is not already present.
    pub fn merge_json(&mut self, s: &str) -> Result<()> {
        let doc: RegistryDoc = serde_json::from_str(s)?;
        if doc.n != self.n {
            return Err(Error::DimensionMismatch(self.n, doc.n));
        }
        self.merge_doc(doc)
    }

    fn merge_doc(&mut self, doc: RegistryDoc) -> Result<()> {
        for (id, x) in doc.configs {
            match self.configs.get(&id) {
                Some(have) if *have == x => {}
                Some(_) => return Err(Error::Invalid(format!("configuration {id} differs from the registered one"))),
                None => self.add_config(&id, x)?,
            }
        }
        for s in doc.named {
            if !self.named.contains_key(&s.id) {
                self.add_named(&s.id, s.rank, s.locally_free, s.det, &s.note)?;
            }
        }
        for rec in doc.records {
            if rec.provenance == Provenance::Restriction && self.record(&rec.id).is_some() {
                continue;
            }
            if self.record(&rec.id).is_none() {
                self.add_record(rec)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{charge, Polarization};

    fn prototype(n: usize) -> (Registry, SheafExpr) {
        let mut r = Registry::new(n);
        r.add_config(
            "X",
            vec![SubvarietySpec::new(SubKind::Wp, n).unwrap(), SubvarietySpec::new(SubKind::Kappa, n).unwrap()],
        )
        .unwrap();
        let f = r.serre_construct("X", (2, 0), "F").unwrap();
        (r, f)
    }

    #[test]
    fn serre_construction_classes() {
        let (r, f) = prototype(5);
        assert_eq!(r.det_of(&f).unwrap(), (2, 0));
        let e = f.twist(-1, -1);
        let c = r.chern_of(&e).unwrap();
        assert_eq!(c.part(1), ChowClass::alpha(5).scale_int(-2));
        assert_eq!(c.part(2), ChowClass::xi(5).pow(2));
        let l = Polarization::standard(5).unwrap();
        assert_eq!(charge(&c.part(2), &l), num_rational::BigRational::from_integer(8.into()));
    }

    #[test]
    fn every_record_satisfies_whitney() {
        let (mut r, f) = prototype(7);
        r.elementary_transform(&f.twist(-1, -1), SubKind::Wp, "G").unwrap();
        for i in 0..r.records().len() {
            r.check_record(i).unwrap();
        }
    }

    #[test]
    fn hypothesis_failures_are_reported() {
        let (mut r, _) = prototype(5);
        let err = r.serre_construct("X", (1, 0), "F2").unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
        assert!(r.elementary_transform(&SheafExpr::line(0, 0), SubKind::Wp, "G").is_err());
    }

    #[test]
    fn dual_of_rank_two_bundle() {
        let (r, f) = prototype(5);
        let e = f.twist(-1, -1);
        let ed = r.normalize(&e.dual()).unwrap();
        assert_eq!(ed, f.twist(-1, -1).twist(0, 2));
    }

    #[test]
    fn elementary_transform_class() {
        let (mut r, f) = prototype(5);
        let e = f.twist(-1, -1);
        let g = r.elementary_transform(&e, SubKind::Wp, "G").unwrap();
        let c = r.chern_of(&g).unwrap();
        assert_eq!(c.part(2), ChowClass::xi(5).pow(2).scale_int(2));
        let rec = r.record("G-seq").unwrap();
        assert_eq!(rec.twisted(2, 1)[2], SheafExpr::push(SubKind::Wp, 3));
    }

    #[test]
    fn json_round_trip() {
        let (r, _) = prototype(5);
        let s = r.to_json().unwrap();
        let back = Registry::from_json(&s).unwrap();
        assert_eq!(back.records(), r.records());
        assert_eq!(back.to_json().unwrap(), s);
    }

    #[test]
    fn matching_finds_twists() {
        let (r, f) = prototype(5);
        let m = r.matching(&f.twist(-1, -1));
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].1, (-1, -1));
        let m = r.matching(&SheafExpr::ideal("X", 1, -1));
        assert_eq!(m.len(), 2);
    }
}
