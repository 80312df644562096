use std::fmt;

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Closed integer interval; a missing bound is infinite. Dimensions use `[0, ∞)` as the
/// starting value, `h⁰ − h¹` style quantities start unbounded on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DimInterval {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl DimInterval {
    pub const UNBOUNDED: DimInterval = DimInterval { lo: None, hi: None };
    pub const NONNEG: DimInterval = DimInterval { lo: Some(0), hi: None };

    pub fn exact(v: i64) -> Self {
        DimInterval { lo: Some(v), hi: Some(v) }
    }

    pub fn new(lo: i64, hi: i64) -> Self {
        DimInterval { lo: Some(lo), hi: Some(hi) }
    }

    pub fn at_least(lo: i64) -> Self {
        DimInterval { lo: Some(lo), hi: None }
    }

    pub fn at_most(hi: i64) -> Self {
        DimInterval { lo: None, hi: Some(hi) }
    }

    pub fn is_exact(&self) -> bool {
        matches!((self.lo, self.hi), (Some(a), Some(b)) if a == b)
    }

    pub fn value(&self) -> Option<i64> {
        if self.is_exact() {
            self.lo
        } else {
            None
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn width(&self) -> Option<i64> {
        Some(self.hi? - self.lo?)
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo.is_none_or(|l| l <= v) && self.hi.is_none_or(|h| v <= h)
    }

    /// `self ⊆ other`.
    pub fn within(&self, other: &DimInterval) -> bool {
        let lo_ok = match (other.lo, self.lo) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a <= b,
        };
        let hi_ok = match (other.hi, self.hi) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => b <= a,
        };
        lo_ok && hi_ok
    }

    /// `None` when empty.
    pub fn intersect(&self, other: &DimInterval) -> Option<DimInterval> {
        let lo = match (self.lo, other.lo) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, None) => a,
            (None, b) => b,
        };
        let hi = match (self.hi, other.hi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        match (lo, hi) {
            (Some(l), Some(h)) if l > h => None,
            _ => Some(DimInterval { lo, hi }),
        }
    }

    pub fn add(&self, other: &DimInterval) -> DimInterval {
        DimInterval {
            lo: self.lo.zip(other.lo).map(|(a, b)| a + b),
            hi: self.hi.zip(other.hi).map(|(a, b)| a + b),
        }
    }

    pub fn neg(&self) -> DimInterval {
        DimInterval { lo: self.hi.map(|v| -v), hi: self.lo.map(|v| -v) }
    }

    pub fn sub(&self, other: &DimInterval) -> DimInterval {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> DimInterval {
        assert!(k > 0);
        DimInterval { lo: self.lo.map(|v| v * k), hi: self.hi.map(|v| v * k) }
    }

    /// Integers `x` with `k·x` in `self`.
    pub fn div_exact_range(&self, k: i64) -> DimInterval {
        assert!(k > 0);
        DimInterval { lo: self.lo.map(|v| v.div_euclid(k) + i64::from(v.rem_euclid(k) != 0)), hi: self.hi.map(|v| v.div_euclid(k)) }
    }
}

impl fmt::Display for DimInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.value() {
            return write!(f, "{v}");
        }
        let lo = self.lo.map_or("−∞".to_string(), |v| v.to_string());
        let hi = self.hi.map_or("∞".to_string(), |v| v.to_string());
        write!(f, "[{lo}, {hi}]")
    }
}

impl Serialize for DimInterval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("bounds", &[self.lo, self.hi])?;
        if self.is_exact() {
            m.serialize_entry("exact", &true)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for DimInterval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            bounds: [Option<i64>; 2],
        }
        let r = Raw::deserialize(d)?;
        Ok(DimInterval { lo: r.bounds[0], hi: r.bounds[1] })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_and_arithmetic() {
        let a = DimInterval::new(0, 5);
        let b = DimInterval::at_least(3);
        assert_eq!(a.intersect(&b), Some(DimInterval::new(3, 5)));
        assert_eq!(a.intersect(&DimInterval::new(6, 7)), None);
        assert_eq!(a.sub(&b), DimInterval { lo: None, hi: Some(2) });
        assert_eq!(DimInterval::new(-3, 7).div_exact_range(2), DimInterval::new(-1, 3));
        assert!(DimInterval::exact(4).within(&a));
        assert!(!b.within(&a));
    }

    #[test]
    fn serialisation_marks_exact_values() {
        assert_eq!(serde_json::to_string(&DimInterval::exact(6)).unwrap(), r#"{"bounds":[6,6],"exact":true}"#);
        assert_eq!(serde_json::to_string(&DimInterval::NONNEG).unwrap(), r#"{"bounds":[0,null]}"#);
        let back: DimInterval = serde_json::from_str(r#"{"bounds":[1,3]}"#).unwrap();
        assert_eq!(back, DimInterval::new(1, 3));
    }
}
