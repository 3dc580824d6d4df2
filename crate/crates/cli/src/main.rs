use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use cosmetic_core::{
    apply_map, classify_pair, complete_to_unimodular, distance, equidistant_slopes,
    evaluate_construction, fill_two_sided, gordon_meridian, heegaard_swap_pairs, is_amphicheiral,
    is_homeo, is_homotopy_equivalent, is_knot, is_oriented_homeo, mod_inverse, negate, parse_slope,
    permutation_of, reverse, scan_meridians, scan_type_iv, type_iv_family, verify_paper_example,
    winding_number, BraidWord, CandidateReport, Error, ErrorKind, LensSpace, Slope, UnimodularMap,
};

/// Dehn filling arithmetic: slopes, lens spaces and cosmetic filling searches.
#[derive(Parser, Debug)]
#[command(name = "cosmetic", version)]
struct Cli {
    /// Print machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Slope arithmetic on the torus.
    #[command(subcommand)]
    Slope(SlopeCmd),
    /// Lens space of the two-sided filling along slopes A and B.
    Fill {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
    /// Meridian p/(k²q) of the solid torus refilled by p/q surgery.
    Meridian {
        #[arg(allow_hyphen_values = true)]
        surgery: String,
        #[arg(long)]
        winding: i64,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
    /// Lens space classification.
    #[command(subcommand)]
    Lens(LensCmd),
    /// Braid words in a solid torus.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Parametrized families of braids.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Searches for cosmetic filling pairs.
    #[command(subcommand)]
    Search(SearchCmd),
    /// End-to-end checks of known constructions.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug, Clone, Copy)]
struct ReduceFlag {
    /// Accept non-reduced slope literals such as 2/4 and divide out the factor.
    #[arg(long)]
    reduce: bool,
}

#[derive(Subcommand, Debug)]
enum SlopeCmd {
    /// Geometric intersection number |a1 b2 - b1 a2|.
    Distance {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
    /// The two slopes equidistant from A and B (difference first, then sum).
    Equidistant {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
    /// The slope -a/b.
    Negate {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
    /// Completion of a/b to a determinant-one matrix [a* a; b* b].
    Complete {
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
    /// Image of a slope under the matrix given as m11,m12,m21,m22.
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        map: String,
        #[arg(allow_hyphen_values = true)]
        slope: String,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
}

#[derive(Subcommand, Debug)]
enum LensCmd {
    /// Print the canonical form of L(P,Q).
    Canon { lens: String },
    /// Orientation reversal.
    Reverse { lens: String },
    /// truly / reflectively / both / neither.
    Classify { first: String, second: String },
    /// Homeomorphism test, orientation-preserving with --oriented.
    Homeo {
        first: String,
        second: String,
        #[arg(long)]
        oriented: bool,
    },
    /// Whether L admits an orientation-reversing self-homeomorphism.
    Amphicheiral { lens: String },
    /// Homotopy equivalence, orientation-preserving with --oriented.
    Homotopy {
        first: String,
        second: String,
        #[arg(long)]
        oriented: bool,
    },
    /// Inverse of Q modulo P.
    Inverse {
        #[arg(allow_hyphen_values = true)]
        q: i64,
        p: u64,
    },
    /// Pairs {q, q'} with q q' ≡ 1 mod P and q ≠ q'.
    SwapPairs { p: u64 },
}

#[derive(Subcommand, Debug)]
enum BraidCmd {
    /// Permutation, knot test and winding number of a braid word.
    Info {
        /// Tokens such as "W3^-1 W7^3".
        word: String,
        /// Strand count; defaults to the largest token index.
        #[arg(long)]
        strands: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// Pythagorean Type-IV braids W_s W_t^-s and their lens space pairs.
    TypeIv {
        /// Inclusive range A..B, or a single index.
        #[arg(long)]
        k: String,
    },
}

#[derive(Subcommand, Debug)]
enum SearchCmd {
    /// Scan meridian pairs of bounded height for cosmetic outer slopes.
    Meridians {
        #[arg(long)]
        max_p: u64,
        #[arg(long)]
        max_den: u64,
    },
    /// Evaluate both equidistant outer slopes for one meridian pair.
    Construction {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
        #[command(flatten)]
        reduce: ReduceFlag,
    },
    /// Reports for the Type-IV family, k = 1..=K.
    TypeIv {
        #[arg(long)]
        k_max: u64,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// The L(49,18) construction from the braid W3^-1 W7^3.
    PaperExample,
}

enum Failure {
    Core(Error),
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    if out.flush().is_err() {
        return ExitCode::SUCCESS;
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Domain => 1,
                ErrorKind::Overflow => 3,
            })
        }
    }
}

fn slope(text: &str, reduce: ReduceFlag) -> Result<Slope, Error> {
    parse_slope(text, reduce.reduce)
}

fn lens(text: &str) -> Result<LensSpace, Error> {
    text.parse()
}

fn emit(out: &mut impl Write, json: bool, value: &impl Serialize, text: impl AsRef<str>) {
    // write errors (closed pipe) surface at the final flush
    let _ = if json {
        let line = serde_json::to_string(value).expect("serializable");
        writeln!(out, "{line}")
    } else {
        writeln!(out, "{}", text.as_ref())
    };
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Slope(cmd) => run_slope(cmd, json, out),
        Command::Fill {
            first,
            second,
            reduce,
        } => {
            let (r1, r2) = (slope(first, *reduce)?, slope(second, *reduce)?);
            let l = fill_two_sided(r1, r2)?;
            emit(out, json, &json!({ "lens": l }), l.to_string());
            Ok(())
        }
        Command::Meridian {
            surgery,
            winding,
            reduce,
        } => {
            let m = gordon_meridian(slope(surgery, *reduce)?, *winding)?;
            if m.reduction > 1 {
                eprintln!(
                    "warning: common factor {} removed from the meridian",
                    m.reduction
                );
            }
            emit(
                out,
                json,
                &json!({ "meridian": m.slope, "reduction": m.reduction }),
                m.slope.to_string(),
            );
            Ok(())
        }
        Command::Lens(cmd) => run_lens(cmd, json, out),
        Command::Braid(BraidCmd::Info { word, strands }) => {
            let w = BraidWord::parse(word, *strands)?;
            let perm = permutation_of(&w);
            let knot = is_knot(&w);
            let winding = winding_number(&w);
            emit(
                out,
                json,
                &json!({
                    "word": w,
                    "strands": w.strands(),
                    "permutation": perm.to_string(),
                    "cycle_type": perm.cycle_type(),
                    "is_knot": knot,
                    "winding": winding,
                }),
                format!("word={w}\npermutation={perm}\nknot={knot}\nwinding={winding}"),
            );
            Ok(())
        }
        Command::Family(FamilyCmd::TypeIv { k }) => {
            let (lo, hi) = parse_range(k)?;
            for k in lo..=hi {
                let record = type_iv_family(k)?;
                let text = format!(
                    "k={} s={} t={} u={} word={} plus={} {} minus={} {}",
                    record.k,
                    record.s,
                    record.t,
                    record.u,
                    record.word,
                    record.pair_plus.0,
                    record.pair_plus.1,
                    record.pair_minus.0,
                    record.pair_minus.1
                );
                emit(out, json, &record, text);
            }
            Ok(())
        }
        Command::Search(cmd) => {
            let reports = match cmd {
                SearchCmd::Meridians { max_p, max_den } => scan_meridians(*max_p, *max_den)?,
                SearchCmd::Construction {
                    first,
                    second,
                    reduce,
                } => evaluate_construction(slope(first, *reduce)?, slope(second, *reduce)?)?,
                SearchCmd::TypeIv { k_max } => scan_type_iv(*k_max)?,
            };
            for r in &reports {
                emit(out, json, r, report_line(r));
            }
            Ok(())
        }
        Command::Verify(VerifyCmd::PaperExample) => {
            let report = verify_paper_example();
            if json {
                emit(
                    out,
                    true,
                    &json!({ "passed": report.passed(), "checks": report.checks }),
                    "",
                );
            } else {
                for check in &report.checks {
                    let _ = writeln!(out, "{check}");
                }
                let _ = writeln!(
                    out,
                    "{}",
                    if report.passed() {
                        "RESULT PASS"
                    } else {
                        "RESULT FAIL"
                    }
                );
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn run_slope(cmd: &SlopeCmd, json: bool, out: &mut impl Write) -> Outcome {
    match cmd {
        SlopeCmd::Distance {
            first,
            second,
            reduce,
        } => {
            let d = distance(slope(first, *reduce)?, slope(second, *reduce)?)?;
            emit(out, json, &json!({ "distance": d }), d.to_string());
        }
        SlopeCmd::Equidistant {
            first,
            second,
            reduce,
        } => {
            let (d, s) = equidistant_slopes(slope(first, *reduce)?, slope(second, *reduce)?)?;
            emit(
                out,
                json,
                &json!({ "difference": d, "sum": s }),
                format!("{d} {s}"),
            );
        }
        SlopeCmd::Negate {
            slope: text,
            reduce,
        } => {
            let r = negate(slope(text, *reduce)?);
            emit(out, json, &json!({ "slope": r }), r.to_string());
        }
        SlopeCmd::Complete {
            slope: text,
            reduce,
        } => {
            let m = complete_to_unimodular(slope(text, *reduce)?);
            emit(
                out,
                json,
                &json!({ "a_star": m.m11, "b_star": m.m21, "matrix": [[m.m11, m.m12], [m.m21, m.m22]] }),
                format!("{} {}\n{} {}", m.m11, m.m12, m.m21, m.m22),
            );
        }
        SlopeCmd::Apply {
            map,
            slope: text,
            reduce,
        } => {
            let m = parse_map(map)?;
            let r = apply_map(&m, slope(text, *reduce)?)?;
            emit(out, json, &json!({ "slope": r }), r.to_string());
        }
    }
    Ok(())
}

fn run_lens(cmd: &LensCmd, json: bool, out: &mut impl Write) -> Outcome {
    let boolean = |out: &mut _, key: &str, value: bool| {
        emit(out, json, &json!({ key: value }), value.to_string());
    };
    match cmd {
        LensCmd::Canon { lens: text } => {
            let l = lens(text)?;
            emit(out, json, &json!({ "lens": l }), l.to_string());
        }
        LensCmd::Reverse { lens: text } => {
            let l = reverse(lens(text)?);
            emit(out, json, &json!({ "lens": l }), l.to_string());
        }
        LensCmd::Classify { first, second } => {
            let c = classify_pair(lens(first)?, lens(second)?);
            emit(out, json, &json!({ "classification": c }), c.as_str());
        }
        LensCmd::Homeo {
            first,
            second,
            oriented,
        } => {
            let (a, b) = (lens(first)?, lens(second)?);
            let v = if *oriented {
                is_oriented_homeo(a, b)
            } else {
                is_homeo(a, b)
            };
            boolean(out, "homeomorphic", v);
        }
        LensCmd::Amphicheiral { lens: text } => {
            boolean(out, "amphicheiral", is_amphicheiral(lens(text)?));
        }
        LensCmd::Homotopy {
            first,
            second,
            oriented,
        } => {
            let v = is_homotopy_equivalent(lens(first)?, lens(second)?, *oriented);
            boolean(out, "homotopy_equivalent", v);
        }
        LensCmd::Inverse { q, p } => {
            let x = mod_inverse(*q as i128, *p)?;
            emit(out, json, &json!({ "inverse": x }), x.to_string());
        }
        LensCmd::SwapPairs { p } => {
            let pairs = heegaard_swap_pairs(*p);
            let text: Vec<String> = pairs.iter().map(|(a, b)| format!("{a},{b}")).collect();
            emit(
                out,
                json,
                &json!({ "p": p, "pairs": pairs }),
                text.join("\n"),
            );
        }
    }
    Ok(())
}

fn report_line(r: &CandidateReport) -> String {
    format!(
        "dist={} meridians={},{} outer={} fills={},{} {} provenance={}",
        r.dist, r.meridian1, r.meridian2, r.outer, r.fill1, r.fill2, r.classification, r.provenance
    )
}

fn parse_range(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("expected a range like 1..10, got `{text}`"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (text, text),
    };
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_map(text: &str) -> Result<UnimodularMap, Failure> {
    let entries: Vec<i64> = text
        .split(',')
        .map(|e| e.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("expected m11,m12,m21,m22, got `{text}`")))?;
    match entries[..] {
        [a, b, c, d] => Ok(UnimodularMap::new(a, b, c, d)?),
        _ => Err(Failure::Usage(format!(
            "expected four matrix entries, got `{text}`"
        ))),
    }
}
