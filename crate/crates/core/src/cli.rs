//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid word or input, 2 syntax error (including
//! bad command-line usage), 3 budget exceeded.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bracket::{jones_normalized, kauffman_bracket, planar_diagram};
use crate::catalog::{catalog, WordSource, ENTRIES};
use crate::construct::connected_sum;
use crate::dsl::serialize;
use crate::error::Error;
use crate::invariants::{otp_compare, otp_vector, tangle_trunk, EmbeddingReport};
use crate::render::{render_profile, Format};
use crate::search::{beam_search, classify_positions, Objective, ObjectiveKind, SearchConfig, SearchResult};
use crate::word::AnyWord;

#[derive(Parser, Debug)]
#[command(name = "thinpos", version, about = "Invariants and position search for Morse words of knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the per-embedding report of a word as JSON.
    Analyze { source: String },
    /// Search for a better position under an objective.
    Optimize {
        source: String,
        #[arg(long, value_enum, default_value = "width")]
        objective: ObjectiveArg,
        #[arg(long, default_value_t = 64)]
        beam: usize,
        #[arg(long, default_value_t = 32)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        insertions: usize,
        #[arg(long, default_value_t = 500_000)]
        max_visited: usize,
    },
    /// Connected sum of two knot words.
    Sum { a: String, b: String },
    /// Compare the thick-level vectors of two words.
    Compare { a: String, b: String },
    /// Kauffman bracket and writhe-normalized bracket.
    Bracket { source: String },
    /// List catalog entries, or print one.
    Catalog { name: Option<String> },
    /// Draw the thick and thin levels.
    Render {
        source: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
    },
    /// Mark which of several positions of one knot are width-, critical- or OTP-minimal.
    Classify {
        #[arg(required = true)]
        sources: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectiveArg {
    Width,
    Critical,
    Otp,
    Trunk,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

fn resolve(source: &str) -> Result<AnyWord, Error> {
    source.parse::<WordSource>()?.resolve()
}

fn resolve_closed(source: &str) -> Result<crate::MorseWord, Error> {
    source.parse::<WordSource>()?.resolve_closed()
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

#[derive(Serialize)]
struct TangleReport {
    boundary: usize,
    trunk: usize,
    arcs: usize,
}

#[derive(Serialize)]
struct OptimizeReport<'a> {
    start: String,
    objective: String,
    #[serde(flatten)]
    result: &'a SearchResult,
}

#[derive(Serialize)]
struct SumReport {
    word: String,
    report: EmbeddingReport,
}

#[derive(Serialize)]
struct CompareReport {
    first: Vec<usize>,
    second: Vec<usize>,
    ordering: &'static str,
}

#[derive(Serialize)]
struct BracketReport {
    crossings: usize,
    writhe: i64,
    bracket: String,
    normalized: String,
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Error> {
    match command {
        Command::Analyze { source } => match resolve(&source)? {
            AnyWord::Closed(w) => writeln!(out, "{}", json(&EmbeddingReport::of(&w)?))?,
            AnyWord::Tangle(t) => {
                let report = TangleReport { boundary: t.boundary(), trunk: tangle_trunk(&t), arcs: t.components().arcs };
                writeln!(out, "{}", json(&report))?
            }
        },
        Command::Optimize { source, objective, beam, steps, seed, insertions, max_visited } => {
            let start = resolve_closed(&source)?;
            let objective = Objective::new(match objective {
                ObjectiveArg::Width => ObjectiveKind::GabaiWidth,
                ObjectiveArg::Critical => ObjectiveKind::CriticalCount,
                ObjectiveArg::Otp => ObjectiveKind::OTPLex,
                ObjectiveArg::Trunk => ObjectiveKind::TrunkOnly,
            });
            let config = SearchConfig {
                beam_width: beam,
                max_steps: steps,
                insertion_budget: insertions,
                random_seed: seed,
                max_visited,
            };
            let print = |out: &mut dyn Write, r: &SearchResult| -> std::io::Result<()> {
                let report = OptimizeReport { start: start.to_string(), objective: objective.to_string(), result: r };
                writeln!(out, "{}", json(&report))
            };
            match beam_search(&start, &objective, &config) {
                Ok(r) => print(out, &r)?,
                Err(Error::BudgetExceeded { what, best }) => {
                    if let Some(b) = &best {
                        print(out, b)?;
                    }
                    return Err(Error::BudgetExceeded { what, best });
                }
                Err(e) => return Err(e),
            }
        }
        Command::Sum { a, b } => {
            let word = connected_sum(&resolve_closed(&a)?, &resolve_closed(&b)?)?;
            let report = SumReport { word: word.to_string(), report: EmbeddingReport::of(&word)? };
            writeln!(out, "{}", json(&report))?
        }
        Command::Compare { a, b } => {
            let (wa, wb) = (resolve_closed(&a)?, resolve_closed(&b)?);
            let (first, second) = (otp_vector(&wa), otp_vector(&wb));
            let ordering = match otp_compare(&first, &second) {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            writeln!(out, "{}", json(&CompareReport { first, second, ordering }))?
        }
        Command::Bracket { source } => {
            let w = resolve_closed(&source)?;
            let bracket = kauffman_bracket(&w)?;
            let writhe = planar_diagram(&w).writhe();
            let normalized = jones_normalized(&w)?;
            let report = BracketReport {
                crossings: w.crossing_count(),
                writhe,
                bracket: bracket.to_string(),
                normalized: normalized.to_string(),
            };
            writeln!(out, "{}", json(&report))?
        }
        Command::Catalog { name: None } => {
            for e in ENTRIES {
                writeln!(out, "{:<18} {}", e.name, e.about)?;
            }
        }
        Command::Catalog { name: Some(name) } => writeln!(out, "{}", serialize(&catalog(&name)?))?,
        Command::Render { source, format } => {
            let w = resolve_closed(&source)?;
            let f = match format {
                FormatArg::Ascii => Format::Ascii,
                FormatArg::Svg => Format::Svg,
            };
            write!(out, "{}", render_profile(&w, f))?
        }
        Command::Classify { sources } => {
            let words = sources.iter().map(|s| resolve_closed(s)).collect::<Result<Vec<_>, _>>()?;
            let classes = classify_positions(&words)?;
            for c in &classes {
                writeln!(err, "{}: {}", sources[c.index], c.cell())?;
            }
            writeln!(out, "{}", json(&classes))?
        }
    }
    Ok(())
}

/// Runs the command line, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("thinpos").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn analyze_unknot() {
        let (code, out, _) = call(&["analyze", "b1 d1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["width"], 2);
        assert_eq!(v["proportion"]["num"], 1);
        assert_eq!(v["proportion"]["den"], 1);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["analyze", "b1 d3"]).0, 1);
        assert_eq!(call(&["analyze", "b1 q1"]).0, 2);
        assert_eq!(call(&["analyze", "catalog:nope"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
