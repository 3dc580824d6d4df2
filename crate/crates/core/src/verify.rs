//! End-to-end check of the L(49,18) construction from the braid `W_3^{-1} W_7^3`.

use std::fmt;

use serde::Serialize;

use crate::braid::{is_knot, paper_example, permutation_of};
use crate::filling::{gordon_meridian, lens_from_construction};
use crate::lens::{is_homeo, is_homotopy_equivalent, is_oriented_homeo, reverse, LensSpace};
use crate::search::{classify_pair, Classification};
use crate::slope::{distance, equidistant_slopes, Slope};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Runs the construction from tabulated special slopes to filled lens
/// spaces and records one check per fact.
pub fn verify_paper_example() -> VerifyReport {
    let mut report = VerifyReport { checks: Vec::new() };
    if let Err(e) = run(&mut report) {
        report.push("pipeline", false, format!("error: {e}"));
    }
    report
}

fn run(report: &mut VerifyReport) -> crate::Result<()> {
    let example = paper_example();
    let word = &example.word;
    report.push(
        "braid",
        word.to_string() == "W3^-1 W7^3",
        format!("word={word} permutation={}", permutation_of(word)),
    );
    report.push(
        "knot",
        is_knot(word),
        format!("closure is a knot: {}", is_knot(word)),
    );
    report.push(
        "winding",
        example.winding == 7,
        format!("winding={}", example.winding),
    );

    let [inf, s18, s19] = example.special_slopes;
    let expected_slopes = [Slope::MERIDIAN, Slope::new(18, 1)?, Slope::new(19, 1)?];
    report.push(
        "special slopes",
        example.special_slopes == expected_slopes,
        format!("slopes={inf} {s18} {s19}"),
    );

    let mer_inf = gordon_meridian(inf, 7)?;
    let mer18 = gordon_meridian(s18, 7)?;
    let mer19 = gordon_meridian(s19, 7)?;
    let (m1, m2) = (mer18.slope, mer19.slope);
    report.push(
        "meridians",
        mer_inf.slope == Slope::MERIDIAN
            && m1 == Slope::new(18, 49)?
            && m2 == Slope::new(19, 49)?
            && mer18.reduction == 1
            && mer19.reduction == 1,
        format!("meridians={} {m1} {m2}", mer_inf.slope),
    );

    let (difference, sum) = equidistant_slopes(m1, m2)?;
    report.push(
        "equidistant",
        difference == Slope::MERIDIAN && sum == Slope::new(37, 98)?,
        format!("outers={difference} {sum}"),
    );

    let d = distance(m1, difference)?;
    report.push(
        "distance",
        d == 49 && distance(m2, difference)? == 49,
        format!("distance={d}"),
    );

    let f1 = lens_from_construction(m1, difference)?;
    let f2 = lens_from_construction(m2, difference)?;
    let reflective = is_oriented_homeo(f1, reverse(f2)) && !is_oriented_homeo(f1, f2);
    report.push(
        "orientation",
        reflective && classify_pair(f1, f2) == Classification::Reflectively,
        format!(
            "fills={f1} {f2} pair={}",
            if reflective {
                "reflective"
            } else {
                "not-reflective"
            }
        ),
    );

    let target = LensSpace::new(49, 18)?;
    report.push(
        "lens type",
        f1.p() == 49 && is_homeo(f1, target) && is_homeo(f2, target),
        format!("both fills unoriented-homeomorphic to {target}"),
    );

    let product = (f1.q() * f2.q()) % 49;
    report.push(
        "witness",
        product == 48,
        format!(
            "witness {}*{}={} mod 49",
            f1.q(),
            f2.q(),
            product as i64 - 49
        ),
    );
    // the untranslated congruence (-18)(-19) = 342 = 7*49 - 1
    let raw = (-(m1.numerator() as i128)) * (-(m2.numerator() as i128));
    let p = d as i128;
    report.push(
        "residue check",
        raw == 342 && (raw + 1) % p == 0,
        format!(
            "(-{})*(-{})={raw} and {}*{p}={}",
            m1.numerator(),
            m2.numerator(),
            (raw + 1) / p,
            raw + 1
        ),
    );

    let g1 = lens_from_construction(m1, sum)?;
    let g2 = lens_from_construction(m2, sum)?;
    let homotopic = is_homotopy_equivalent(g1, g2, false);
    let oriented =
        is_homotopy_equivalent(g1, g2, true) || is_homotopy_equivalent(g1, reverse(g2), true);
    report.push(
        "homotopy remark",
        !is_homeo(g1, g2) && homotopic && oriented,
        format!("outer {sum}: fills={g1} {g2} homeomorphic=false homotopy-equivalent=true"),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let report = verify_paper_example();
        for c in &report.checks {
            assert!(c.passed, "{c}");
        }
        let text: Vec<String> = report.checks.iter().map(ToString::to_string).collect();
        let joined = text.join("\n");
        assert!(joined.contains("distance=49"));
        assert!(joined.contains("pair=reflective"));
        assert!(joined.contains("witness 30*31=-1 mod 49"));
    }
}
