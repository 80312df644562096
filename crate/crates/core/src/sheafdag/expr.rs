use std::fmt;

use serde::{Deserialize, Serialize};

use crate::sections::{SubKind, SubvarietySpec};

/// Symbolic sheaf on the blow-up. Build values through the constructors below, which keep
/// everything in normal form: twists are pushed into every constructor except `Named` and
/// `Dual`, sums are flat and sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SheafExpr {
    Line { p: i64, q: i64 },
    Omega { l: usize, p: i64, q: i64 },
    /// `ι_* O_Y(m)` for a component of the given kind.
    Push { sub: SubKind, m: i64 },
    Sum { terms: Vec<SheafExpr> },
    /// `I_X ⊗ O(p, q)` for a registered configuration `X`.
    Ideal { config: String, p: i64, q: i64 },
    Named { id: String },
    Twist { inner: Box<SheafExpr>, a: i64, b: i64 },
    Dual { inner: Box<SheafExpr> },
}

impl SheafExpr {
    pub fn line(p: i64, q: i64) -> Self {
        SheafExpr::Line { p, q }
    }

    pub fn omega(l: usize, p: i64, q: i64) -> Self {
        if l == 0 {
            SheafExpr::Line { p, q }
        } else {
            SheafExpr::Omega { l, p, q }
        }
    }

    pub fn push(sub: SubKind, m: i64) -> Self {
        SheafExpr::Push { sub, m }
    }

    pub fn ideal(config: &str, p: i64, q: i64) -> Self {
        SheafExpr::Ideal { config: config.to_string(), p, q }
    }

    pub fn named(id: &str) -> Self {
        SheafExpr::Named { id: id.to_string() }
    }

    pub fn zero() -> Self {
        SheafExpr::Sum { terms: Vec::new() }
    }

    pub fn sum(terms: Vec<SheafExpr>) -> Self {
        let mut flat = Vec::new();
        for t in terms {
            match t {
                SheafExpr::Sum { terms } => flat.extend(terms),
                other => flat.push(other),
            }
        }
        flat.sort();
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            SheafExpr::Sum { terms: flat }
        }
    }

    /// `k` copies of `self`.
    pub fn times(&self, k: usize) -> Self {
        SheafExpr::sum(vec![self.clone(); k])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SheafExpr::Sum { terms } if terms.is_empty())
    }

    /// `self ⊗ O(a, b)` in normal form.
    pub fn twist(&self, a: i64, b: i64) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        match self {
            SheafExpr::Line { p, q } => SheafExpr::Line { p: p + a, q: q + b },
            SheafExpr::Omega { l, p, q } => SheafExpr::Omega { l: *l, p: p + a, q: q + b },
            SheafExpr::Push { sub, m } => {
                let deg = match sub {
                    SubKind::Wp | SubKind::Q1 => a + b,
                    SubKind::Kappa | SubKind::Q2 => b,
                };
                SheafExpr::Push { sub: *sub, m: m + deg }
            }
            SheafExpr::Sum { terms } => SheafExpr::sum(terms.iter().map(|t| t.twist(a, b)).collect()),
            SheafExpr::Ideal { config, p, q } => {
                SheafExpr::Ideal { config: config.clone(), p: p + a, q: q + b }
            }
            SheafExpr::Twist { inner, a: a0, b: b0 } => {
                let (na, nb) = (a0 + a, b0 + b);
                if na == 0 && nb == 0 {
                    (**inner).clone()
                } else {
                    SheafExpr::Twist { inner: inner.clone(), a: na, b: nb }
                }
            }
            SheafExpr::Named { .. } | SheafExpr::Dual { .. } => {
                SheafExpr::Twist { inner: Box::new(self.clone()), a, b }
            }
        }
    }

    /// Formal dual; line bundles are inverted, anything else stays symbolic until a registry
    /// supplies a determinant.
    pub fn dual(&self) -> Self {
        match self {
            SheafExpr::Line { p, q } => SheafExpr::Line { p: -p, q: -q },
            SheafExpr::Sum { terms } => SheafExpr::sum(terms.iter().map(|t| t.dual()).collect()),
            SheafExpr::Twist { inner, a, b } => inner.dual().twist(-a, -b),
            SheafExpr::Dual { inner } => (**inner).clone(),
            other => SheafExpr::Dual { inner: Box::new(other.clone()) },
        }
    }

    /// Re-normalises a value that may have been built or deserialised by hand.
    pub fn normalize(&self) -> Self {
        match self {
            SheafExpr::Omega { l: 0, p, q } => SheafExpr::line(*p, *q),
            SheafExpr::Sum { terms } => SheafExpr::sum(terms.iter().map(|t| t.normalize()).collect()),
            SheafExpr::Twist { inner, a, b } => inner.normalize().twist(*a, *b),
            SheafExpr::Dual { inner } => inner.normalize().dual(),
            other => other.clone(),
        }
    }

    /// Base object and twist: `Twist(x, a, b)` gives `(x, (a, b))`, `Ideal(X, p, q)` gives
    /// `(Ideal(X, 0, 0), (p, q))`. Used to match terms of registered sequences.
    pub fn anchor(&self) -> Option<(SheafExpr, (i64, i64))> {
        match self {
            SheafExpr::Named { .. } | SheafExpr::Dual { .. } => Some((self.clone(), (0, 0))),
            SheafExpr::Twist { inner, a, b } => Some(((**inner).clone(), (*a, *b))),
            SheafExpr::Ideal { config, p, q } => Some((SheafExpr::ideal(config, 0, 0), (*p, *q))),
            _ => None,
        }
    }

    pub fn is_split(&self) -> bool {
        match self {
            SheafExpr::Line { .. } => true,
            SheafExpr::Sum { terms } => terms.iter().all(|t| t.is_split()),
            _ => false,
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

impl fmt::Display for SheafExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SheafExpr::Line { p, q } => write!(f, "O({},{})", fmt_int(*p), fmt_int(*q)),
            SheafExpr::Omega { l, p, q } => write!(f, "Ω^{l}({},{})", fmt_int(*p), fmt_int(*q)),
            SheafExpr::Push { sub, m } => write!(f, "O_{sub}({})", fmt_int(*m)),
            SheafExpr::Sum { terms } => {
                if terms.is_empty() {
                    return f.write_str("0");
                }
                let mut first = true;
                let mut i = 0;
                while i < terms.len() {
                    let mut j = i;
                    while j < terms.len() && terms[j] == terms[i] {
                        j += 1;
                    }
                    if !first {
                        f.write_str(" ⊕ ")?;
                    }
                    first = false;
                    if j - i > 1 {
                        write!(f, "{}^{}", terms[i], j - i)?;
                    } else {
                        write!(f, "{}", terms[i])?;
                    }
                    i = j;
                }
                Ok(())
            }
            SheafExpr::Ideal { config, p, q } => {
                write!(f, "I_{config}({},{})", fmt_int(*p), fmt_int(*q))
            }
            SheafExpr::Named { id } => f.write_str(id),
            SheafExpr::Twist { inner, a, b } => match &**inner {
                SheafExpr::Named { id } => write!(f, "{id}({},{})", fmt_int(*a), fmt_int(*b)),
                other => write!(f, "({other})({},{})", fmt_int(*a), fmt_int(*b)),
            },
            SheafExpr::Dual { inner } => write!(f, "({inner})^∨"),
        }
    }
}

/// Push expression for a component at the twist `(p, q)`.
pub fn restricted(y: &SubvarietySpec, p: i64, q: i64) -> SheafExpr {
    SheafExpr::push(y.kind, y.restriction_degree(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twists_normalise() {
        assert_eq!(SheafExpr::line(1, 2).twist(-1, 3), SheafExpr::line(0, 5));
        assert_eq!(SheafExpr::push(SubKind::Wp, 0).twist(2, 1), SheafExpr::push(SubKind::Wp, 3));
        assert_eq!(SheafExpr::push(SubKind::Kappa, 0).twist(2, 1), SheafExpr::push(SubKind::Kappa, 1));
        let f = SheafExpr::named("F");
        assert_eq!(f.twist(1, 1).twist(-1, -1), f);
        assert_eq!(SheafExpr::ideal("X", 2, 0).twist(-1, -1), SheafExpr::ideal("X", 1, -1));
    }

    #[test]
    fn sums_are_flat_and_sorted() {
        let a = SheafExpr::sum(vec![SheafExpr::line(0, 1), SheafExpr::line(-1, 0)]);
        let b = SheafExpr::sum(vec![SheafExpr::line(-1, 0), SheafExpr::sum(vec![SheafExpr::line(0, 1)])]);
        assert_eq!(a, b);
        assert_eq!(SheafExpr::sum(vec![SheafExpr::line(3, 3)]), SheafExpr::line(3, 3));
        assert!(SheafExpr::sum(vec![]).is_zero());
    }

    #[test]
    fn display() {
        let s = SheafExpr::sum(vec![SheafExpr::line(-1, 0), SheafExpr::line(0, -1).times(6)]);
        assert_eq!(s.to_string(), "O(−1,0) ⊕ O(0,−1)^6");
        assert_eq!(SheafExpr::named("E").twist(0, -4).to_string(), "E(0,−4)");
        assert_eq!(SheafExpr::omega(3, 0, 3).to_string(), "Ω^3(0,3)");
    }

    #[test]
    fn duals() {
        assert_eq!(SheafExpr::line(1, -2).dual(), SheafExpr::line(-1, 2));
        let e = SheafExpr::named("E");
        assert_eq!(e.twist(1, 0).dual().dual(), e.twist(1, 0));
    }

    #[test]
    fn serde_round_trip() {
        let e = SheafExpr::sum(vec![SheafExpr::named("E").twist(-1, 2), SheafExpr::push(SubKind::Kappa, 1)]);
        let s = serde_json::to_string(&e).unwrap();
        let back: SheafExpr = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }
}
