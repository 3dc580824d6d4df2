//! Integer helpers shared by the slope and lens modules.
//!
//! Slope components are bounded by `i64::MAX` in absolute value, so every
//! product of two components fits in an `i128` and sums of two such products
//! cannot overflow either. Conversions back to the narrow types are checked.

use crate::error::{Error, Result};

pub fn gcd(a: i128, b: i128) -> u128 {
    let (x, y) = (a.unsigned_abs(), b.unsigned_abs());
    // 128-bit division is slow; most scan inputs fit in 64 bits
    if let (Ok(x), Ok(y)) = (u64::try_from(x), u64::try_from(y)) {
        return gcd_u64(x, y) as u128;
    }
    let (mut x, mut y) = (x, y);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

fn gcd_u64(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        (x, y) = (y, x % y);
    }
    x
}

/// Returns `(g, x, y)` with `x*a + y*b = g` and `g = gcd(a, b) >= 0`.
///
/// Inputs must stay well inside the `i128` range (|a|, |b| < 2^126).
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Narrows to the symmetric slope range `[-i64::MAX, i64::MAX]`.
pub(crate) fn narrow(value: i128, context: &'static str) -> Result<i64> {
    match i64::try_from(value) {
        Ok(v) if v != i64::MIN => Ok(v),
        _ => Err(Error::Overflow(context)),
    }
}

/// The unique residue `x` in `[0, modulus)` with `value * x ≡ 1`.
pub fn mod_inverse(value: i128, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::NotUnit { value, modulus });
    }
    let m = modulus as i128;
    let (g, x, _) = ext_gcd(value.rem_euclid(m), m);
    if g != 1 {
        return Err(Error::NotUnit { value, modulus });
    }
    Ok(x.rem_euclid(m) as u64)
}

pub(crate) fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_conventions() {
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(-12, 18), 6);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(3 << 80, 6 << 70), 3 << 71);
        assert_eq!(gcd(i64::MAX as i128 * 4, 2), 2);
    }

    #[test]
    fn ext_gcd_bezout() {
        for a in -40i128..=40 {
            for b in -40i128..=40 {
                let (g, x, y) = ext_gcd(a, b);
                assert_eq!(g as u128, gcd(a, b));
                assert_eq!(x * a + y * b, g, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(18, 49), Ok(30));
        assert_eq!(mod_inverse(2, 17), Ok(9));
        assert_eq!(mod_inverse(-18, 49), Ok(19));
        for p in 2..50 {
            assert_eq!(mod_inverse(1, p), Ok(1));
        }
        assert_eq!(mod_inverse(5, 1), Ok(0));
        assert!(matches!(mod_inverse(7, 49), Err(Error::NotUnit { .. })));
        assert!(matches!(mod_inverse(1, 0), Err(Error::NotUnit { .. })));
    }

    #[test]
    fn inverse_matches_brute_force() {
        for p in 2u64..80 {
            for q in 0..p {
                let brute = (0..p).find(|x| (q * x) % p == 1);
                assert_eq!(mod_inverse(q as i128, p).ok(), brute, "q={q} p={p}");
            }
        }
    }

    #[test]
    fn narrow_rejects_min() {
        assert_eq!(narrow(i64::MAX as i128, "t"), Ok(i64::MAX));
        assert!(narrow(i64::MIN as i128, "t").is_err());
        assert!(narrow(1i128 << 70, "t").is_err());
    }
}
