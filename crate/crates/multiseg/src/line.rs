//! The cuspidal line: exact half-integer exponents and points on one line.
//!
//! Provides:
//! - [`HalfExp`] — an exact element of ½ℤ, stored as its doubled value;
//! - [`Line`] — the opaque label of a cuspidal representation ρ;
//! - [`CuspidalPoint`] — a twist ν^x ρ, i.e. a line label plus an exponent.
//!
//! All arithmetic is integer-exact; there are no floats anywhere in the
//! crate. The line label carries no structure beyond equality: every result
//! in scope depends only on the ℤ-offsets along a single line.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact element of ½ℤ. The exponent x of a twist ν^x ρ.
///
/// Internally stores 2x, so every value of the domain is representable
/// exactly and comparison is plain integer comparison.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfExp {
    twice: i64,
}

impl HalfExp {
    pub const ZERO: HalfExp = HalfExp { twice: 0 };

    /// p/2 as a `HalfExp`.
    pub fn half(p: i64) -> HalfExp {
        HalfExp { twice: p }
    }

    /// The integer n as a `HalfExp`.
    pub fn int(n: i64) -> HalfExp {
        HalfExp { twice: 2 * n }
    }

    /// The doubled value 2x. Exposed for compact hashing/fingerprints.
    pub fn twice(self) -> i64 {
        self.twice
    }

    /// Whether x ∈ ℤ.
    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// x − y as an integer, when it is one.
    pub fn integer_distance(self, other: HalfExp) -> Option<i64> {
        let diff = self.twice - other.twice;
        (diff % 2 == 0).then_some(diff / 2)
    }
}

impl std::ops::Add for HalfExp {
    type Output = HalfExp;
    fn add(self, rhs: HalfExp) -> HalfExp {
        HalfExp { twice: self.twice + rhs.twice }
    }
}

impl std::ops::Sub for HalfExp {
    type Output = HalfExp;
    fn sub(self, rhs: HalfExp) -> HalfExp {
        HalfExp { twice: self.twice - rhs.twice }
    }
}

impl std::ops::Neg for HalfExp {
    type Output = HalfExp;
    fn neg(self) -> HalfExp {
        HalfExp { twice: -self.twice }
    }
}

/// Integer steps x + n are ubiquitous (segments advance by 1).
impl std::ops::Add<i64> for HalfExp {
    type Output = HalfExp;
    fn add(self, rhs: i64) -> HalfExp {
        HalfExp { twice: self.twice + 2 * rhs }
    }
}

impl std::ops::Sub<i64> for HalfExp {
    type Output = HalfExp;
    fn sub(self, rhs: i64) -> HalfExp {
        HalfExp { twice: self.twice - 2 * rhs }
    }
}

impl std::ops::AddAssign for HalfExp {
    fn add_assign(&mut self, rhs: HalfExp) {
        self.twice += rhs.twice;
    }
}

impl fmt::Display for HalfExp {
    /// Integers print bare (`"2"`), proper halves with a `/2` suffix in
    /// lowest terms (`"-3/2"`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfExp {
    type Err = Error;

    /// Accepts the serialized forms: an integer (`"-2"`) or a doubled
    /// numerator over 2 (`"3/2"`).
    fn from_str(s: &str) -> Result<HalfExp> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not a half-integer: {s:?}")))
        };
        match s.strip_suffix("/2") {
            Some(num) => Ok(HalfExp::half(parse_int(num)?)),
            None => Ok(HalfExp::int(parse_int(s)?)),
        }
    }
}

impl Serialize for HalfExp {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfExp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Opaque label of a cuspidal representation ρ. Cheap to clone; compared by
/// name only. The default label is `"rho"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line(Arc<str>);

impl Line {
    pub fn new(label: impl AsRef<str>) -> Line {
        Line(Arc::from(label.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Default for Line {
    fn default() -> Line {
        Line::new("rho")
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line({})", self.0)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Line::new(String::deserialize(deserializer)?))
    }
}

/// Check two line labels for equality, producing the crate error otherwise.
pub(crate) fn require_same_line(left: &Line, right: &Line) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LineMismatch { left: left.clone(), right: right.clone() })
    }
}

/// A point ν^x ρ on a cuspidal line.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CuspidalPoint {
    pub line: Line,
    pub exp: HalfExp,
}

impl CuspidalPoint {
    pub fn new(line: Line, exp: HalfExp) -> CuspidalPoint {
        CuspidalPoint { line, exp }
    }

    /// ν^z · (ν^x ρ) = ν^{x+z} ρ.
    pub fn twist(&self, z: HalfExp) -> CuspidalPoint {
        CuspidalPoint { line: self.line.clone(), exp: self.exp + z }
    }

    /// Hermitian dual on a centered line: exponent negation, ν^x ρ ↦ ν^{−x} ρ.
    pub fn hermitian_dual(&self) -> CuspidalPoint {
        CuspidalPoint { line: self.line.clone(), exp: -self.exp }
    }
}

impl fmt::Display for CuspidalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^{}({})", self.exp, self.line)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_constructors() {
        assert_eq!(HalfExp::half(0), HalfExp::ZERO);
        assert_eq!(HalfExp::half(-3).to_string(), "-3/2");
        assert_eq!(HalfExp::half(2) + HalfExp::half(2), HalfExp::int(2));
    }

    #[test]
    fn arithmetic_is_exact_and_ordered() {
        let x = HalfExp::half(1); // 1/2
        assert_eq!(x + 1, HalfExp::half(3));
        assert_eq!(x - 1, HalfExp::half(-1));
        assert_eq!(-x, HalfExp::half(-1));
        assert!(HalfExp::half(-1) < HalfExp::ZERO);
        assert!(HalfExp::int(1) > HalfExp::half(1));
        assert_eq!(x.integer_distance(HalfExp::half(-1)), Some(1));
        assert_eq!(x.integer_distance(HalfExp::ZERO), None);
        assert!(!x.is_integer());
        assert!(HalfExp::int(-4).is_integer());
    }

    #[test]
    fn display_lowest_terms() {
        assert_eq!(HalfExp::int(2).to_string(), "2");
        assert_eq!(HalfExp::half(-3).to_string(), "-3/2");
        assert_eq!(HalfExp::half(4).to_string(), "2");
        assert_eq!(HalfExp::ZERO.to_string(), "0");
        assert_eq!(HalfExp::half(5).to_string(), "5/2");
    }

    #[test]
    fn parse_round_trip() {
        for twice in -25..=25 {
            let x = HalfExp::half(twice);
            assert_eq!(x.to_string().parse::<HalfExp>().unwrap(), x);
        }
        assert_eq!("3/2".parse::<HalfExp>().unwrap(), HalfExp::half(3));
        assert_eq!("-2".parse::<HalfExp>().unwrap(), HalfExp::int(-2));
        assert!("0.5".parse::<HalfExp>().is_err());
        assert!("one".parse::<HalfExp>().is_err());
        assert!("3/4".parse::<HalfExp>().is_err());
    }

    #[test]
    fn serde_uses_strings() {
        let x = HalfExp::half(-3);
        assert_eq!(serde_json::to_string(&x).unwrap(), "\"-3/2\"");
        let back: HalfExp = serde_json::from_str("\"-3/2\"").unwrap();
        assert_eq!(back, x);
        let two: HalfExp = serde_json::from_str("\"2\"").unwrap();
        assert_eq!(two, HalfExp::int(2));
    }

    #[test]
    fn point_twist() {
        let rho = Line::default();
        let p = CuspidalPoint::new(rho.clone(), HalfExp::ZERO);
        assert_eq!(p.twist(HalfExp::half(1)).exp, HalfExp::half(1));
        let q = CuspidalPoint::new(rho.clone(), HalfExp::int(-1));
        assert_eq!(q.twist(HalfExp::ZERO), q);
        let r = CuspidalPoint::new(rho, HalfExp::half(1));
        assert_eq!(r.twist(HalfExp::half(-1)).exp, HalfExp::ZERO);
    }

    #[test]
    fn point_twists_compose() {
        let p = CuspidalPoint::new(Line::default(), HalfExp::half(3));
        for z1 in -4..=4 {
            for z2 in -4..=4 {
                let (z1, z2) = (HalfExp::half(z1), HalfExp::half(z2));
                assert_eq!(p.twist(z1).twist(z2), p.twist(z1 + z2));
            }
        }
    }

    #[test]
    fn point_hermitian_dual() {
        let rho = Line::default();
        let mk = |p| CuspidalPoint::new(rho.clone(), HalfExp::half(p));
        assert_eq!(mk(1).hermitian_dual(), mk(-1));
        assert_eq!(mk(0).hermitian_dual(), mk(0));
        assert_eq!(mk(-4).hermitian_dual(), mk(4));
        for p in -10..=10 {
            assert_eq!(mk(p).hermitian_dual().hermitian_dual(), mk(p));
        }
    }

    #[test]
    fn lines_compare_by_label() {
        assert_eq!(Line::new("rho"), Line::default());
        assert_ne!(Line::new("tau"), Line::default());
        assert_eq!(serde_json::to_string(&Line::default()).unwrap(), "\"rho\"");
    }
}
