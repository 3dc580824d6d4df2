//! Oriented lens spaces `L(p, q)` and their classification.
//!
//! `L(0, 1)` stands for S²×S¹ and `L(1, 0)` for S³. For `p >= 2` the residue
//! is kept in `[1, p)`; orientation reversal is `q ↦ p - q`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use crate::arith::mod_inverse;
use crate::arith::{gcd, mul_mod};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub const S3: LensSpace = LensSpace { p: 1, q: 0 };
    pub const S2_X_S1: LensSpace = LensSpace { p: 0, q: 1 };

    /// Normalizes any coprime pair, using `L(-p, -q) = L(p, q)` and reducing
    /// `q` modulo `p`.
    pub fn new(p: i128, q: i128) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        let p = u64::try_from(p).map_err(|_| Error::Overflow("lens space order"))?;
        Ok(match p {
            0 => Self::S2_X_S1,
            1 => Self::S3,
            _ => LensSpace {
                p,
                q: q.rem_euclid(p as i128) as u64,
            },
        })
    }

    /// Order of the first homology group (0 for S²×S¹).
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn reverse(&self) -> Self {
        reverse(*self)
    }

    /// Parses `L(P,Q)` with optional signs on either entry.
    pub fn parse(text: &str) -> Result<Self> {
        let malformed = || Error::Malformed {
            what: "lens space",
            text: text.to_string(),
        };
        let inner = text
            .trim()
            .strip_prefix("L(")
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(malformed)?;
        let (p, q) = inner.split_once(',').ok_or_else(malformed)?;
        let p = parse_int(p).ok_or_else(malformed)?;
        let q = parse_int(q).ok_or_else(malformed)?;
        Self::new(p, q)
    }
}

fn parse_int(text: &str) -> Option<i128> {
    let text = text.trim();
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

impl FromStr for LensSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LensSpace::parse(s)
    }
}

impl Serialize for LensSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LensSpace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn make_lens(p: i128, q: i128) -> Result<LensSpace> {
    LensSpace::new(p, q)
}

pub fn reverse(lens: LensSpace) -> LensSpace {
    if lens.p <= 1 {
        return lens;
    }
    LensSpace {
        p: lens.p,
        q: lens.p - lens.q,
    }
}

/// Orientation-preserving homeomorphism: `q2 ≡ q1` or `q1·q2 ≡ 1 (mod p)`.
pub fn is_oriented_homeo(l1: LensSpace, l2: LensSpace) -> bool {
    if l1.p != l2.p {
        return false;
    }
    let p = l1.p;
    p <= 1 || l1.q == l2.q || mul_mod(l1.q, l2.q, p) == 1
}

/// Homeomorphism ignoring orientation: `q2 ∈ {±q1, ±q1⁻¹} (mod p)`.
pub fn is_homeo(l1: LensSpace, l2: LensSpace) -> bool {
    if l1.p != l2.p {
        return false;
    }
    let p = l1.p;
    if p <= 1 {
        return true;
    }
    let prod = mul_mod(l1.q, l2.q, p);
    l2.q == l1.q || l2.q == p - l1.q || prod == 1 || prod == p - 1
}

pub fn is_amphicheiral(lens: LensSpace) -> bool {
    is_oriented_homeo(lens, reverse(lens))
}

/// Homotopy equivalence: `q1·q2 ≡ ±n² (mod p)` for some `n`, or `+n²` only
/// when `oriented` is set. Squares are enumerated over all residues.
pub fn is_homotopy_equivalent(l1: LensSpace, l2: LensSpace, oriented: bool) -> bool {
    if l1.p != l2.p {
        return false;
    }
    let p = l1.p;
    if p <= 1 {
        return true;
    }
    let target = mul_mod(l1.q, l2.q, p);
    let negated = (p - target) % p;
    (0..p).any(|n| {
        let sq = mul_mod(n, n, p);
        sq == target || (!oriented && sq == negated)
    })
}
