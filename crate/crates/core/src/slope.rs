//! Slopes on a torus and the unimodular maps acting on them.
//!
//! A slope is stored as a coprime pair `(a, b)` modulo the identification
//! `(a, b) ~ (-a, -b)`. The canonical representative has `b > 0`, or is the
//! meridian `1/0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{gcd, mod_inverse, narrow};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope {
    a: i64,
    b: i64,
}

impl Slope {
    /// The slope `1/0`.
    pub const MERIDIAN: Slope = Slope { a: 1, b: 0 };
    /// The slope `0/1`.
    pub const LONGITUDE: Slope = Slope { a: 0, b: 1 };

    /// Builds a slope from a pair that must already be coprime.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        Self::coprime(a as i128, b as i128)
    }

    /// Builds a slope from any nonzero pair, dividing out the common factor.
    pub fn reduced(a: i128, b: i128) -> Result<Self> {
        Ok(Self::reduced_with_factor(a, b)?.0)
    }

    /// Like [`Slope::reduced`] but also returns the factor that was removed.
    pub fn reduced_with_factor(a: i128, b: i128) -> Result<(Self, u128)> {
        let g = gcd(a, b);
        if g == 0 {
            return Err(Error::ZeroSlope);
        }
        let g_signed = g as i128;
        Ok((Self::canonical(a / g_signed, b / g_signed)?, g))
    }

    pub(crate) fn coprime(a: i128, b: i128) -> Result<Self> {
        match gcd(a, b) {
            0 => Err(Error::ZeroSlope),
            1 => Self::canonical(a, b),
            g => Err(Error::NotReduced { a, b, gcd: g }),
        }
    }

    fn canonical(a: i128, b: i128) -> Result<Self> {
        let (a, b) = if b < 0 || (b == 0 && a < 0) {
            (-a, -b)
        } else {
            (a, b)
        };
        Ok(Slope {
            a: narrow(a, "slope component")?,
            b: narrow(b, "slope component")?,
        })
    }

    /// Parses `[-]DIGITS/[-]DIGITS`. Non-reduced pairs are rejected unless
    /// `reduce` is set.
    pub fn parse(text: &str, reduce: bool) -> Result<Self> {
        let malformed = || Error::Malformed {
            what: "slope",
            text: text.to_string(),
        };
        let (num, den) = text.trim().split_once('/').ok_or_else(malformed)?;
        let a = parse_signed(num).ok_or_else(malformed)?;
        let b = parse_signed(den).ok_or_else(malformed)?;
        if reduce {
            Self::reduced(a, b)
        } else {
            Self::coprime(a, b)
        }
    }

    pub fn numerator(&self) -> i64 {
        self.a
    }

    pub fn denominator(&self) -> i64 {
        self.b
    }

    pub fn is_meridian(&self) -> bool {
        *self == Self::MERIDIAN
    }
}

/// Optional leading `-`, then ASCII digits only. Values that do not fit the
/// slope range still parse here and are rejected later as overflow.
fn parse_signed(text: &str) -> Option<i128> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    // Anything longer than 38 digits cannot fit an i128; clamp so the
    // narrowing step reports overflow instead of a parse error.
    let magnitude = digits.parse::<i128>().unwrap_or(i128::MAX / 2);
    Some(if text.starts_with('-') {
        -magnitude
    } else {
        magnitude
    })
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Slope::parse(s, false)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a slope literal, optionally reducing non-coprime pairs.
pub fn parse_slope(text: &str, reduce: bool) -> Result<Slope> {
    Slope::parse(text, reduce)
}

/// Signed cross determinant `a1*b2 - b1*a2` of the canonical representatives.
pub(crate) fn cross(r1: Slope, r2: Slope) -> i128 {
    r1.a as i128 * r2.b as i128 - r1.b as i128 * r2.a as i128
}

/// Geometric intersection number `|a1*b2 - b1*a2|`.
pub fn distance(r1: Slope, r2: Slope) -> Result<u64> {
    u64::try_from(cross(r1, r2).unsigned_abs()).map_err(|_| Error::Overflow("slope distance"))
}

pub fn negate(r: Slope) -> Slope {
    if r.b == 0 {
        return r;
    }
    Slope { a: -r.a, b: r.b }
}

/// The two slopes at equal distance from `r1` and `r2`, as
/// `(difference, sum)` = `((a1-a2)/(b1-b2), (a1+a2)/(b1+b2))` reduced.
pub fn equidistant_slopes(r1: Slope, r2: Slope) -> Result<(Slope, Slope)> {
    if r1 == r2 {
        return Err(Error::EqualSlopes(r1.to_string(), r2.to_string()));
    }
    let (a1, b1, a2, b2) = (r1.a as i128, r1.b as i128, r2.a as i128, r2.b as i128);
    let difference = Slope::reduced(a1 - a2, b1 - b2)?;
    let sum = Slope::reduced(a1 + a2, b1 + b2)?;
    Ok((difference, sum))
}

/// A 2x2 integer matrix of determinant ±1, acting on column vectors `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularMap {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap {
        m11: 1,
        m12: 0,
        m21: 0,
        m22: 1,
    };

    /// Entries must lie in `[-i64::MAX, i64::MAX]` like slope components.
    pub fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> Result<Self> {
        if [m11, m12, m21, m22].contains(&i64::MIN) {
            return Err(Error::Overflow("matrix entry"));
        }
        let m = UnimodularMap { m11, m12, m21, m22 };
        match m.wide_det() {
            1 | -1 => Ok(m),
            d => Err(Error::NotUnimodular(d)),
        }
    }

    fn wide_det(&self) -> i128 {
        self.m11 as i128 * self.m22 as i128 - self.m12 as i128 * self.m21 as i128
    }

    /// Either `1` or `-1`.
    pub fn det(&self) -> i64 {
        self.wide_det() as i64
    }

    /// Matrix product `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> Result<Self> {
        let entry = |x: i64, y: i64, z: i64, w: i64| {
            narrow(
                x as i128 * y as i128 + z as i128 * w as i128,
                "matrix product",
            )
        };
        Ok(UnimodularMap {
            m11: entry(self.m11, other.m11, self.m12, other.m21)?,
            m12: entry(self.m11, other.m12, self.m12, other.m22)?,
            m21: entry(self.m21, other.m11, self.m22, other.m21)?,
            m22: entry(self.m21, other.m12, self.m22, other.m22)?,
        })
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        UnimodularMap {
            m11: d * self.m22,
            m12: -d * self.m12,
            m21: -d * self.m21,
            m22: d * self.m11,
        }
    }
}

/// Image of `r` under `m`. Fails only when the image leaves the `i64` range.
pub fn apply_map(m: &UnimodularMap, r: Slope) -> Result<Slope> {
    let (a, b) = (r.a as i128, r.b as i128);
    let x = m.m11 as i128 * a + m.m12 as i128 * b;
    let y = m.m21 as i128 * a + m.m22 as i128 * b;
    Slope::canonical(x, y)
}

/// Completes `r = (a, b)` to the matrix with rows `(a*, a)` and `(b*, b)`,
/// where `a*·b - b*·a = 1`.
///
/// For `b > 0` the smallest non-negative `b*` is chosen. The meridian has
/// no freedom in `b*` (it is forced to `-1`), and `a* = 0` is used.
pub fn complete_to_unimodular(r: Slope) -> UnimodularMap {
    let (a, b) = (r.a, r.b);
    if b == 0 {
        return UnimodularMap {
            m11: 0,
            m12: a,
            m21: -a,
            m22: 0,
        };
    }
    // -b*·a ≡ 1 (mod b)
    let inv = mod_inverse(a as i128, b as u64).expect("slope components are coprime");
    let b_star = (b as i128 - inv as i128).rem_euclid(b as i128);
    let a_star = (1 + b_star * a as i128) / b as i128;
    UnimodularMap {
        m11: a_star as i64,
        m12: a,
        m21: b_star as i64,
        m22: b,
    }
}
