//! Segments on a cuspidal line and their elementary calculus.
//!
//! A segment [ν^b ρ, ν^e ρ] is the set {ν^b ρ, ν^{b+1} ρ, …, ν^e ρ}; it is
//! determined by its line and the two endpoint exponents with e − b ∈ ℤ≥0.
//! Provided here:
//! - construction with validation ([`Segment::new`]);
//! - the linking and precedence relations;
//! - union / intersection (where defined);
//! - the two shortenings (drop end / drop beginning) and twists.
//!
//! The empty segment is not a value: operations that can empty a segment
//! return `Option<Segment>` and callers drop `None`s.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::line::{require_same_line, CuspidalPoint, HalfExp, Line};

/// A non-empty segment [ν^b ρ, ν^e ρ] with e − b ∈ ℤ≥0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    line: Line,
    b: HalfExp,
    e: HalfExp,
}

impl Segment {
    /// Validating constructor: requires e − b to be a non-negative integer
    /// (in particular b and e lie on the same ℤ-coset of the line).
    pub fn new(line: Line, b: HalfExp, e: HalfExp) -> Result<Segment> {
        match e.integer_distance(b) {
            Some(d) if d >= 0 => Ok(Segment { line, b, e }),
            _ => Err(Error::NonIntegralOrNegativeLength {
                b: b.to_string(),
                e: e.to_string(),
            }),
        }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    /// Beginning exponent b(Δ).
    pub fn begin(&self) -> HalfExp {
        self.b
    }

    /// End exponent e(Δ).
    pub fn end(&self) -> HalfExp {
        self.e
    }

    /// Number of points, e − b + 1 ≥ 1.
    pub fn card(&self) -> i64 {
        self.e.integer_distance(self.b).expect("validated at construction") + 1
    }

    /// The points ν^b ρ, …, ν^e ρ in increasing order.
    pub fn points(&self) -> impl Iterator<Item = CuspidalPoint> + '_ {
        (0..self.card()).map(|i| CuspidalPoint::new(self.line.clone(), self.b + i))
    }

    /// Exponents b, b+1, …, e in increasing order.
    pub fn exponents(&self) -> impl Iterator<Item = HalfExp> + '_ {
        (0..self.card()).map(|i| self.b + i)
    }

    fn same_coset(&self, other: &Segment) -> bool {
        self.b.integer_distance(other.b).is_some()
    }

    /// Containment as point sets (same line assumed by the caller).
    pub(crate) fn contains_on_line(&self, other: &Segment) -> bool {
        debug_assert_eq!(self.line, other.line);
        self.same_coset(other) && self.b <= other.b && other.e <= self.e
    }

    pub(crate) fn linked_on_line(&self, other: &Segment) -> bool {
        debug_assert_eq!(self.line, other.line);
        if !self.same_coset(other) {
            return false; // disjoint cosets: the union skips by half-steps
        }
        let touching = std::cmp::max(self.b, other.b) <= std::cmp::min(self.e, other.e) + 1;
        touching && !self.contains_on_line(other) && !other.contains_on_line(self)
    }

    /// Linked: the union is a segment differing from both.
    pub fn linked(&self, other: &Segment) -> Result<bool> {
        require_same_line(&self.line, &other.line)?;
        Ok(self.linked_on_line(other))
    }

    pub(crate) fn precedes_on_line(&self, other: &Segment) -> bool {
        // Linked segments never share a beginning (equal beginnings force
        // containment), so "begins the union" is a strict comparison.
        self.linked_on_line(other) && self.b < other.b
    }

    /// The relation Δ1 → Δ2: linked, and Δ1 begins the union.
    pub fn precedes(&self, other: &Segment) -> Result<bool> {
        require_same_line(&self.line, &other.line)?;
        Ok(self.precedes_on_line(other))
    }

    pub(crate) fn union_on_line(&self, other: &Segment) -> Option<Segment> {
        debug_assert_eq!(self.line, other.line);
        let touching = self.same_coset(other)
            && std::cmp::max(self.b, other.b) <= std::cmp::min(self.e, other.e) + 1;
        touching.then(|| Segment {
            line: self.line.clone(),
            b: std::cmp::min(self.b, other.b),
            e: std::cmp::max(self.e, other.e),
        })
    }

    /// Set-theoretic union, defined when the segments overlap or are
    /// adjacent (an adjacent disjoint pair still unions to a segment).
    pub fn union(&self, other: &Segment) -> Result<Segment> {
        require_same_line(&self.line, &other.line)?;
        self.union_on_line(other).ok_or(Error::UnionNotASegment)
    }

    pub(crate) fn intersection_on_line(&self, other: &Segment) -> Option<Segment> {
        debug_assert_eq!(self.line, other.line);
        if !self.same_coset(other) {
            return None;
        }
        let b = std::cmp::max(self.b, other.b);
        let e = std::cmp::min(self.e, other.e);
        (b <= e).then(|| Segment { line: self.line.clone(), b, e })
    }

    /// Set-theoretic intersection; `None` when empty.
    pub fn intersection(&self, other: &Segment) -> Result<Option<Segment>> {
        require_same_line(&self.line, &other.line)?;
        Ok(self.intersection_on_line(other))
    }

    /// Δ⁻: drop the end point; a singleton empties to `None`.
    pub fn minus_end(&self) -> Option<Segment> {
        (self.b < self.e).then(|| Segment {
            line: self.line.clone(),
            b: self.b,
            e: self.e - 1,
        })
    }

    /// ⁻Δ: drop the beginning point; a singleton empties to `None`.
    pub fn minus_begin(&self) -> Option<Segment> {
        (self.b < self.e).then(|| Segment {
            line: self.line.clone(),
            b: self.b + 1,
            e: self.e,
        })
    }

    /// ν^z Δ: shift both endpoints by z.
    pub fn twist(&self, z: HalfExp) -> Segment {
        Segment { line: self.line.clone(), b: self.b + z, e: self.e + z }
    }

    /// Hermitian dual on a centered line: [b, e] ↦ [−e, −b].
    pub fn hermitian_dual(&self) -> Segment {
        Segment { line: self.line.clone(), b: -self.e, e: -self.b }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.b, self.e)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]@{}", self.b, self.e, self.line)
    }
}

#[derive(Serialize, Deserialize)]
struct SegmentJson {
    line: Line,
    b: HalfExp,
    e: HalfExp,
}

impl Serialize for Segment {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SegmentJson { line: self.line.clone(), b: self.b, e: self.e }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Segment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SegmentJson::deserialize(deserializer)?;
        Segment::new(raw.line, raw.b, raw.e).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{hseg, seg};

    #[test]
    fn construction_validates_length() {
        let rho = Line::default();
        let s = Segment::new(rho.clone(), HalfExp::half(-1), HalfExp::half(1)).unwrap();
        assert_eq!(s.card(), 2);
        let singleton = Segment::new(rho.clone(), HalfExp::ZERO, HalfExp::ZERO).unwrap();
        assert_eq!(singleton.card(), 1);
        // Non-integral and negative lengths are both rejected.
        let err = Segment::new(rho.clone(), HalfExp::ZERO, HalfExp::half(1)).unwrap_err();
        assert_eq!(err.kind(), "NonIntegralOrNegativeLength");
        let err = Segment::new(rho, HalfExp::int(1), HalfExp::ZERO).unwrap_err();
        assert_eq!(err.kind(), "NonIntegralOrNegativeLength");
    }

    #[test]
    fn cardinalities() {
        assert_eq!(seg(0, 0).card(), 1);
        assert_eq!(hseg(-1, 1).card(), 2);
        assert_eq!(seg(-2, 2).card(), 5);
    }

    #[test]
    fn linked_pairs() {
        assert!(seg(0, 1).linked(&seg(1, 2)).unwrap());
        assert!(!seg(0, 1).linked(&seg(0, 1)).unwrap());
        assert!(!seg(0, 0).linked(&seg(2, 2)).unwrap());
        // Adjacency counts as linked; containment does not.
        assert!(seg(0, 0).linked(&seg(1, 1)).unwrap());
        assert!(!seg(0, 3).linked(&seg(1, 2)).unwrap());
        // Different ℤ-cosets never link even when the ranges interleave.
        assert!(!seg(0, 1).linked(&hseg(1, 3)).unwrap());
        // Different lines are an error, not `false`.
        let tau = Segment::new(Line::new("tau"), HalfExp::ZERO, HalfExp::ZERO).unwrap();
        assert_eq!(seg(0, 0).linked(&tau).unwrap_err().kind(), "LineMismatch");
    }

    #[test]
    fn linked_is_symmetric() {
        let pool = [seg(0, 1), seg(1, 2), seg(0, 0), seg(2, 2), seg(0, 3), seg(1, 1)];
        for a in &pool {
            for b in &pool {
                assert_eq!(a.linked(b).unwrap(), b.linked(a).unwrap());
            }
        }
    }

    #[test]
    fn precedes_direction() {
        assert!(seg(0, 1).precedes(&seg(1, 2)).unwrap());
        assert!(!seg(1, 2).precedes(&seg(0, 1)).unwrap());
        assert!(seg(0, 0).precedes(&seg(1, 1)).unwrap());
        // On a linked pair exactly one direction holds.
        let pool = [seg(0, 1), seg(1, 2), seg(0, 0), seg(1, 1), seg(0, 2), seg(2, 3)];
        for a in &pool {
            for b in &pool {
                if a.linked(b).unwrap() {
                    assert_ne!(a.precedes(b).unwrap(), b.precedes(a).unwrap());
                }
            }
        }
    }

    #[test]
    fn union_and_intersection() {
        assert_eq!(seg(0, 2).union(&seg(1, 3)).unwrap(), seg(0, 3));
        assert_eq!(seg(0, 2).intersection(&seg(1, 3)).unwrap(), Some(seg(1, 2)));
        assert_eq!(seg(0, 0).union(&seg(1, 1)).unwrap(), seg(0, 1));
        assert_eq!(seg(0, 0).intersection(&seg(1, 1)).unwrap(), None);
        assert_eq!(seg(0, 0).union(&seg(2, 2)).unwrap_err().kind(), "UnionNotASegment");
    }

    #[test]
    fn union_intersection_count_points() {
        let pool = [seg(0, 2), seg(1, 3), seg(0, 0), seg(1, 1), seg(2, 4), seg(3, 3)];
        for a in &pool {
            for b in &pool {
                if let Ok(u) = a.union(b) {
                    let i = a.intersection(b).unwrap().map_or(0, |s| s.card());
                    assert_eq!(u.card() + i, a.card() + b.card());
                }
            }
        }
    }

    #[test]
    fn shortenings() {
        assert_eq!(seg(0, 2).minus_end(), Some(seg(0, 1)));
        assert_eq!(seg(0, 2).minus_begin(), Some(seg(1, 2)));
        assert_eq!(seg(0, 0).minus_end(), None);
        assert_eq!(hseg(-1, 1).minus_end(), Some(hseg(-1, -1)));
        // The two shortenings commute on card ≥ 3.
        let s = seg(-1, 4);
        assert_eq!(
            s.minus_end().unwrap().minus_begin(),
            s.minus_begin().unwrap().minus_end()
        );
        // On card 2 both orders empty out consistently.
        let t = seg(0, 1);
        assert_eq!(t.minus_end().unwrap().minus_begin(), None);
        assert_eq!(t.minus_begin().unwrap().minus_end(), None);
    }

    #[test]
    fn twists_shift_both_ends() {
        assert_eq!(hseg(-1, 1).twist(HalfExp::half(1)), seg(0, 1));
        assert_eq!(seg(0, 1).twist(HalfExp::ZERO), seg(0, 1));
        assert_eq!(seg(0, 0).twist(HalfExp::int(-2)), seg(-2, -2));
    }

    #[test]
    fn hermitian_dual_reverses() {
        assert_eq!(seg(0, 1).hermitian_dual(), seg(-1, 0));
        assert_eq!(hseg(-1, 1).hermitian_dual(), hseg(-1, 1));
        assert_eq!(seg(2, 5).hermitian_dual().hermitian_dual(), seg(2, 5));
    }

    #[test]
    fn json_shape() {
        let s = hseg(-1, 3); // [-1/2, 3/2]
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"line": "rho", "b": "-1/2", "e": "3/2"})
        );
        let back: Segment = serde_json::from_value(json).unwrap();
        assert_eq!(back, s);
        // Invalid payloads are rejected by the constructor.
        let bad: std::result::Result<Segment, _> =
            serde_json::from_value(serde_json::json!({"line": "rho", "b": "0", "e": "1/2"}));
        assert!(bad.is_err());
    }

    #[test]
    fn points_enumerate_support() {
        let s = hseg(-1, 3);
        let exps: Vec<String> = s.points().map(|p| p.exp.to_string()).collect();
        assert_eq!(exps, ["-1/2", "1/2", "3/2"]);
    }
}
