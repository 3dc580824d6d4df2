//! Dehn fillings of the thickened torus and meridians of refilled solid tori.

use crate::error::{Error, Result};
use crate::lens::LensSpace;
use crate::slope::{complete_to_unimodular, Slope};

/// Fills the two boundary tori of T²×[0,1] along `r1 = a/b` and `r2 = c/d`.
///
/// With `a*·b - b*·a = 1` from [`complete_to_unimodular`], the result is
/// `L(bc - ad, a*·d - b*·c)`. The order of the lens space is always the
/// distance between the two slopes.
pub fn fill_two_sided(r1: Slope, r2: Slope) -> Result<LensSpace> {
    let m = complete_to_unimodular(r1);
    fill_with_completion(r1, r2, m.m11 as i128, m.m21 as i128)
}

/// [`fill_two_sided`] with an explicit completion `(a*, b*)` of `r1`.
pub fn fill_with_completion(r1: Slope, r2: Slope, a_star: i128, b_star: i128) -> Result<LensSpace> {
    let (a, b) = (r1.numerator() as i128, r1.denominator() as i128);
    let (c, d) = (r2.numerator() as i128, r2.denominator() as i128);
    let det = a_star
        .checked_mul(b)
        .zip(b_star.checked_mul(a))
        .and_then(|(x, y)| x.checked_sub(y))
        .ok_or(Error::Overflow("slope completion"))?;
    if det != 1 {
        return Err(Error::NotUnimodular(det));
    }
    let p = b * c - a * d;
    let q = a_star
        .checked_mul(d)
        .zip(b_star.checked_mul(c))
        .and_then(|(x, y)| x.checked_sub(y))
        .ok_or(Error::Overflow("lens space residue"))?;
    LensSpace::new(p, q)
}

/// Meridian of a solid torus refilled by surgery on a knot inside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Meridian {
    pub slope: Slope,
    /// Common factor divided out of `(p, k²q)`; `1` in the generic case.
    pub reduction: u64,
}

/// For `p/q` surgery on a knot of winding number `k`, the new meridian is
/// `p/(k²q)`.
pub fn gordon_meridian(surgery: Slope, winding: i64) -> Result<Meridian> {
    if winding <= 0 {
        return Err(Error::NonPositive {
            what: "winding number",
            value: winding as i128,
        });
    }
    let k = winding as i128;
    let den = k
        .checked_mul(k)
        .and_then(|k2| k2.checked_mul(surgery.denominator() as i128))
        .ok_or(Error::Overflow("meridian denominator"))?;
    let (slope, factor) = Slope::reduced_with_factor(surgery.numerator() as i128, den)?;
    Ok(Meridian {
        slope,
        reduction: u64::try_from(factor).map_err(|_| Error::Overflow("meridian reduction"))?,
    })
}

/// Lens space obtained by attaching a solid torus along `outer` to the
/// solid torus with the given meridian.
pub fn lens_from_construction(meridian: Slope, outer: Slope) -> Result<LensSpace> {
    fill_two_sided(meridian, outer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens::{is_homeo, is_oriented_homeo, reverse};
    use crate::slope::{apply_map, distance, UnimodularMap};
    use proptest::prelude::*;

    fn s(a: i64, b: i64) -> Slope {
        Slope::new(a, b).unwrap()
    }

    fn l(p: i128, q: i128) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn fill_examples() {
        for (p, q) in [(7, 2), (49, 18), (5, -3), (1, 4)] {
            assert_eq!(
                fill_two_sided(Slope::LONGITUDE, s(p, q)),
                Ok(l(p as i128, q as i128))
            );
        }
        assert_eq!(fill_two_sided(s(18, 49), Slope::MERIDIAN), Ok(l(49, 30)));
        assert_eq!(fill_two_sided(s(19, 49), Slope::MERIDIAN), Ok(l(49, 31)));
        assert_eq!(fill_two_sided(s(3, 5), s(3, 5)), Ok(LensSpace::S2_X_S1));
        assert_eq!(fill_two_sided(Slope::LONGITUDE, s(1, 5)), Ok(LensSpace::S3));
    }

    #[test]
    fn explicit_completion() {
        assert_eq!(
            fill_with_completion(s(18, 49), Slope::MERIDIAN, 7, 19),
            Ok(l(49, -19))
        );
        assert_eq!(
            fill_with_completion(s(18, 49), Slope::MERIDIAN, 7 + 18, 19 + 49),
            Ok(l(49, -19))
        );
        assert_eq!(
            fill_with_completion(s(18, 49), Slope::MERIDIAN, 1, 1),
            Err(Error::NotUnimodular(49 - 18))
        );
    }

    #[test]
    fn construction_examples() {
        assert_eq!(
            lens_from_construction(s(18, 49), Slope::MERIDIAN),
            Ok(l(49, 30))
        );
        assert_eq!(lens_from_construction(s(18, 49), s(37, 98)), Ok(l(49, 32)));
        // bc - ad = -49 here, so the pair (-49, 20) normalizes to L(49, 29).
        assert_eq!(lens_from_construction(s(19, 49), s(37, 98)), Ok(l(49, 29)));
        assert!(is_homeo(l(49, 29), l(49, 20)));
    }

    #[test]
    fn gordon_examples() {
        let m = gordon_meridian(s(18, 1), 7).unwrap();
        assert_eq!((m.slope, m.reduction), (s(18, 49), 1));
        assert_eq!(gordon_meridian(s(19, 1), 7).unwrap().slope, s(19, 49));
        for k in 1..20 {
            assert_eq!(
                gordon_meridian(Slope::MERIDIAN, k).unwrap().slope,
                Slope::MERIDIAN
            );
        }
        let m = gordon_meridian(s(6, 1), 3).unwrap();
        assert_eq!((m.slope, m.reduction), (s(2, 3), 3));
        assert!(matches!(
            gordon_meridian(s(1, 1), 0),
            Err(Error::NonPositive { .. })
        ));
        assert!(matches!(
            gordon_meridian(s(1, 1), -7),
            Err(Error::NonPositive { .. })
        ));
        assert!(matches!(
            gordon_meridian(s(1, i64::MAX), 3),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn construction_relative_orientation() {
        let f1 =
            lens_from_construction(gordon_meridian(s(18, 1), 7).unwrap().slope, Slope::MERIDIAN)
                .unwrap();
        let f2 =
            lens_from_construction(gordon_meridian(s(19, 1), 7).unwrap().slope, Slope::MERIDIAN)
                .unwrap();
        assert!(!is_oriented_homeo(f1, f2));
        assert!(is_oriented_homeo(f1, reverse(f2)));
        assert!(is_homeo(f1, l(49, 18)) && is_homeo(f2, l(49, 18)));
        assert_eq!((f1.q() * f2.q()) % 49, 48);
    }

    fn slope_strategy() -> impl Strategy<Value = Slope> {
        (-3000i64..3000, -3000i64..3000)
            .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
            .prop_map(|(a, b)| Slope::reduced(a as i128, b as i128).unwrap())
    }

    proptest! {
        #[test]
        fn order_is_distance(r1 in slope_strategy(), r2 in slope_strategy()) {
            let lens = fill_two_sided(r1, r2).unwrap();
            prop_assert_eq!(lens.p(), distance(r1, r2).unwrap());
        }

        #[test]
        fn swap_is_unoriented_symmetric(r1 in slope_strategy(), r2 in slope_strategy()) {
            prop_assert!(is_homeo(fill_two_sided(r1, r2).unwrap(), fill_two_sided(r2, r1).unwrap()));
        }

        #[test]
        fn choice_independent(r1 in slope_strategy(), r2 in slope_strategy(), k in -3i128..=3) {
            let m = complete_to_unimodular(r1);
            let (a, b) = (r1.numerator() as i128, r1.denominator() as i128);
            prop_assert_eq!(
                fill_with_completion(r1, r2, m.m11 as i128 + k * a, m.m21 as i128 + k * b),
                fill_two_sided(r1, r2)
            );
        }

        #[test]
        fn meridian_reduction_only_from_winding(p in -500i64..500, q in 1i64..500, k in 1i64..30) {
            let Ok(r) = Slope::new(p, q) else { return Ok(()); };
            let m = gordon_meridian(r, k).unwrap();
            let g = crate::arith::gcd(p as i128, k as i128) as u64;
            prop_assert_eq!(m.reduction > 1, g > 1);
        }

        #[test]
        fn reflection_reverses(r1 in slope_strategy(), r2 in slope_strategy()) {
            let flip = UnimodularMap::new(-1, 0, 0, 1).unwrap();
            let base = fill_two_sided(r1, r2).unwrap();
            let image = fill_two_sided(apply_map(&flip, r1).unwrap(), apply_map(&flip, r2).unwrap()).unwrap();
            prop_assert!(is_oriented_homeo(image, reverse(base)));
        }
    }
}
