//! Searching for pairs of meridians whose fillings along a common outer
//! slope give homeomorphic lens spaces.
//!
//! A pair of fillings can only be cosmetic when the outer slope is
//! equidistant from both meridians, so every candidate pair has exactly two
//! outer slopes to test.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mul_mod};
use crate::braid::type_iv_family;
use crate::error::{Error, Result};
use crate::filling::lens_from_construction;
use crate::lens::{is_oriented_homeo, reverse, LensSpace};
use crate::slope::{complete_to_unimodular, distance, equidistant_slopes, Slope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Truly,
    Reflectively,
    Both,
    Neither,
}

impl Classification {
    pub fn is_truly(self) -> bool {
        matches!(self, Classification::Truly | Classification::Both)
    }

    pub fn is_reflective(self) -> bool {
        matches!(self, Classification::Reflectively | Classification::Both)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Truly => "truly",
            Classification::Reflectively => "reflectively",
            Classification::Both => "both",
            Classification::Neither => "neither",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify_pair(l1: LensSpace, l2: LensSpace) -> Classification {
    match (
        is_oriented_homeo(l1, l2),
        is_oriented_homeo(l1, reverse(l2)),
    ) {
        (true, true) => Classification::Both,
        (true, false) => Classification::Truly,
        (false, true) => Classification::Reflectively,
        (false, false) => Classification::Neither,
    }
}

/// One evaluated candidate: two meridians filled along a shared outer slope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub meridian1: Slope,
    pub meridian2: Slope,
    pub outer: Slope,
    pub fill1: LensSpace,
    pub fill2: LensSpace,
    pub dist: u64,
    pub classification: Classification,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_is_non_example: Option<bool>,
}

impl CandidateReport {
    fn sort_key(&self) -> (u64, Slope, Slope, Slope) {
        (self.dist, self.meridian1, self.meridian2, self.outer)
    }
}

fn build_report(m1: Slope, m2: Slope, outer: Slope, provenance: String) -> Result<CandidateReport> {
    let fill1 = lens_from_construction(m1, outer)?;
    let fill2 = lens_from_construction(m2, outer)?;
    Ok(CandidateReport {
        meridian1: m1,
        meridian2: m2,
        outer,
        fill1,
        fill2,
        dist: fill1.p(),
        classification: classify_pair(fill1, fill2),
        provenance,
        family_is_non_example: None,
    })
}

/// Fills both meridians along each of the two equidistant outer slopes.
/// The difference slope is reported first, the sum slope second.
pub fn evaluate_construction(m1: Slope, m2: Slope) -> Result<Vec<CandidateReport>> {
    let (difference, sum) = equidistant_slopes(m1, m2)?;
    Ok(vec![
        build_report(m1, m2, difference, "construction/difference".into())?,
        build_report(m1, m2, sum, "construction/sum".into())?,
    ])
}

/// Canonical slopes `a/b` with `0 <= b <= height` and `|a| <= height`.
pub fn slopes_of_height(height: u64) -> Vec<Slope> {
    let h = height.min(i64::MAX as u64) as i64;
    let mut out = vec![Slope::MERIDIAN];
    for b in 1..=h {
        for a in -h..=h {
            if gcd(a as i128, b as i128) == 1 {
                out.push(Slope::new(a, b).expect("coprime"));
            }
        }
    }
    out.sort();
    out
}

/// Every unordered pair of meridians of height at most `max_height`, both
/// equidistant outer slopes, keeping non-`neither` reports with
/// `dist <= max_p`. Sorted by `(dist, meridian1, meridian2, outer)`.
pub fn scan_meridians(max_p: u64, max_height: u64) -> Result<Vec<CandidateReport>> {
    let slopes = slopes_of_height(max_height);
    let completions: Vec<_> = slopes.iter().map(|&r| complete_to_unimodular(r)).collect();

    let chunks: Vec<Result<Vec<CandidateReport>>> = (0..slopes.len())
        .into_par_iter()
        .map(|i| {
            let mut found = Vec::new();
            let m1 = slopes[i];
            let c1 = completions[i];
            for (j, &m2) in slopes.iter().enumerate().skip(i + 1) {
                let c2 = completions[j];
                let (difference, sum) = equidistant_slopes(m1, m2)?;
                for (outer, tag) in [(difference, "scan/difference"), (sum, "scan/sum")] {
                    let dist = distance(m1, outer)?;
                    if dist > max_p {
                        continue;
                    }
                    let fill1 = fast_fill(m1, c1.m11, c1.m21, outer)?;
                    let fill2 = fast_fill(m2, c2.m11, c2.m21, outer)?;
                    let classification = classify_pair(fill1, fill2);
                    if classification == Classification::Neither {
                        continue;
                    }
                    found.push(CandidateReport {
                        meridian1: m1,
                        meridian2: m2,
                        outer,
                        fill1,
                        fill2,
                        dist,
                        classification,
                        provenance: tag.to_string(),
                        family_is_non_example: None,
                    });
                }
            }
            Ok(found)
        })
        .collect();

    let mut reports = Vec::new();
    for chunk in chunks {
        reports.extend(chunk?);
    }
    reports.sort_by_key(CandidateReport::sort_key);
    Ok(reports)
}

// Same arithmetic as `fill_two_sided`, reusing a precomputed completion.
fn fast_fill(r1: Slope, a_star: i64, b_star: i64, r2: Slope) -> Result<LensSpace> {
    let (a, b) = (r1.numerator() as i128, r1.denominator() as i128);
    let (c, d) = (r2.numerator() as i128, r2.denominator() as i128);
    let q = (a_star as i128)
        .checked_mul(d)
        .zip((b_star as i128).checked_mul(c))
        .and_then(|(x, y)| x.checked_sub(y))
        .ok_or(Error::Overflow("lens space residue"))?;
    LensSpace::new(b * c - a * d, q)
}

/// Unordered pairs `{q, q'}` of distinct units mod `p` with `q·q' ≡ 1`.
pub fn heegaard_swap_pairs(p: u64) -> Vec<(u64, u64)> {
    if p < 2 {
        return Vec::new();
    }
    (1..p)
        .filter_map(|q| {
            let inv = crate::arith::mod_inverse(q as i128, p).ok()?;
            (q < inv).then_some((q, inv))
        })
        .collect()
}

/// Reports for both lens pairs of each family member `k = 1..=k_max`.
///
/// The family only gives the lens spaces, so each pair is realized by the
/// meridians `x/P` and `-x/P` with outer slope `1/0`, where `x ≡ Q⁻¹ (mod P)`.
/// Filling those gives `L(P, Q)` and its reverse.
pub fn scan_type_iv(k_max: u64) -> Result<Vec<CandidateReport>> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        let record = type_iv_family(k)?;
        for (label, (lens, _)) in [("plus", record.pair_plus), ("minus", record.pair_minus)] {
            let mut report = realize_reversed_pair(lens, format!("type-iv k={k} {label}"))?;
            report.family_is_non_example = Some(true);
            out.push(report);
        }
    }
    Ok(out)
}

fn realize_reversed_pair(lens: LensSpace, provenance: String) -> Result<CandidateReport> {
    let p = lens.p();
    let x = crate::arith::mod_inverse(lens.q() as i128, p)?;
    let p_signed = i64::try_from(p).map_err(|_| Error::Overflow("meridian denominator"))?;
    let m1 = Slope::new(x as i64, p_signed)?;
    let m2 = Slope::new(-(x as i64), p_signed)?;
    debug_assert_eq!(mul_mod(x, lens.q(), p), 1 % p);
    build_report(m1, m2, Slope::MERIDIAN, provenance)
}

/// Re-derives every report field from its slopes without going through
/// [`classify_pair`], returning a description of the first mismatch.
pub fn check_report(report: &CandidateReport) -> std::result::Result<(), String> {
    let d1 = distance(report.meridian1, report.outer).map_err(|e| e.to_string())?;
    let d2 = distance(report.meridian2, report.outer).map_err(|e| e.to_string())?;
    if d1 != report.dist || d2 != report.dist {
        return Err(format!(
            "distance mismatch: {d1}, {d2} vs recorded {}",
            report.dist
        ));
    }
    let f1 = lens_from_construction(report.meridian1, report.outer).map_err(|e| e.to_string())?;
    let f2 = lens_from_construction(report.meridian2, report.outer).map_err(|e| e.to_string())?;
    if (f1, f2) != (report.fill1, report.fill2) {
        return Err(format!(
            "fill mismatch: {f1} {f2} vs recorded {} {}",
            report.fill1, report.fill2
        ));
    }
    if f1.p() != report.dist || f2.p() != report.dist {
        return Err("fill order differs from distance".into());
    }
    // residues compared directly: same, inverse, negated, or negated inverse
    let p = f1.p();
    let (q1, q2) = (f1.q(), f2.q());
    let truly = p <= 1 || q1 == q2 || mul_mod(q1, q2, p) == 1;
    let reflective = p <= 1 || (q1 + q2) % p == 0 || mul_mod(q1, q2, p) == p - 1;
    if truly != report.classification.is_truly()
        || reflective != report.classification.is_reflective()
    {
        return Err(format!(
            "classification {} inconsistent with {f1} {f2}",
            report.classification
        ));
    }
    Ok(())
}
