//! The `skein` command line tool.
//!
//! Exit codes: `0` on success, `1` when a verification or identity check
//! ran fine but found a mismatch, `2` for invalid input of any kind (bad
//! arguments, unreadable files, out-of-domain parameters, diagrams over the
//! crossing budget).
//!
//! When `SKEIN_CACHE` names a directory, deterministic command output is
//! cached there keyed on the command, its arguments, and any input file
//! contents; a repeated invocation replays the stored bytes.

use crate::algebra::SkeinElement;
use crate::cable::{cable_expansion, torus_knot_jones, CableError, CableExpansion};
use crate::cache::{Cache, CacheKey};
use crate::laurent::{ComplexValue, LaurentError, LaurentPoly};
use crate::oracle::{verify_cable_expansion, Diagram, DiagramError, VerifyError};
use crate::roots::{
    cosh_delta_check, delta_collapse_check, evaluate_jones_at_roots, omega_annihilation_check,
    omega_unknot_check, prime_cosh_sum_check, star_check, swap_symmetry_check,
    theta_exchange_check, CheckResult, ParityFn, ParityFunctionPair, RootContext, RootsError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Debug, Parser)]
#[command(
    name = "skein",
    version,
    about = "Exact computations in the Kauffman bracket skein algebra of the solid torus"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a torus cable of a basis element into the annular basis.
    Expand(ExpandArgs),
    /// Compute the colored invariant of a torus knot as a Laurent polynomial.
    JonesTorus(JonesArgs),
    /// Brute-force diagram computations that double-check the closed forms.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Numeric identity checks at roots of unity.
    Roots {
        #[command(subcommand)]
        command: RootsCommand,
    },
    /// Evaluate a stored expansion against a companion invariant table.
    Satellite(SatelliteArgs),
    /// Print companion invariant tables for use with `satellite`.
    Companion {
        #[command(subcommand)]
        command: CompanionCommand,
    },
}

#[derive(Debug, Args)]
struct ExpandArgs {
    /// Strands running along the annulus (must be coprime to q).
    p: i64,
    /// Signed full twists relative to the annulus framing.
    q: i64,
    /// Color of the cabled basis element.
    color: i64,
    /// Color left on the core strand.
    core: i64,
    /// Total framing to carry (defaults to the canonical p*q).
    #[arg(long)]
    framing: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Args)]
struct JonesArgs {
    p: i64,
    q: i64,
    /// Color of the knot (0 gives the empty skein, 1 the ordinary invariant).
    color: i64,
    /// Framing of the knot (0 is the invariant normalization).
    #[arg(long, default_value_t = 0)]
    framing: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum OracleCommand {
    /// Recompute a cable expansion from a raw diagram state sum and compare.
    Verify {
        p: i64,
        q: i64,
        /// Color of the cable (bounded by the 26-crossing state-sum budget).
        color: i64,
    },
    /// Evaluate the bracket of a diagram file.
    Bracket {
        file: PathBuf,
        /// Color the whole diagram instead of taking the plain bracket.
        #[arg(long)]
        color: Option<i64>,
        /// Basis for annular results: powers of the core curve, or the
        /// orthogonal basis the expansions use.
        #[arg(long, value_enum, default_value_t = Basis::Z)]
        basis: Basis,
    },
}

#[derive(Debug, Subcommand)]
enum RootsCommand {
    /// Run one family of identity checks over its built-in grid.
    Check {
        /// Evaluation level; the root is exp(i*pi/(2(r+1))).
        #[arg(long)]
        r: i64,
        /// Which family: 2 swap symmetry, 3 delta collapse, 4 theta
        /// exchange, 5 prime cosh sums, omega annihilation, star absorption.
        #[arg(long)]
        lemma: LemmaFamily,
    },
    /// Tabulate the normalized torus invariant at its own level per color.
    Growth {
        p: i64,
        q: i64,
        /// Largest color to tabulate.
        max_color: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct SatelliteArgs {
    /// Expansion file as written by `expand` (text format).
    #[arg(long)]
    expansion: PathBuf,
    /// Companion table file as written by `companion`.
    #[arg(long)]
    companion: PathBuf,
}

#[derive(Debug, Subcommand)]
enum CompanionCommand {
    /// Table of unknot values (-1)^l [l+1].
    Unknot {
        #[arg(long)]
        max_color: i64,
    },
    /// Table of zero-framed torus knot values.
    Torus {
        p: i64,
        q: i64,
        #[arg(long)]
        max_color: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// Sorted-key JSON record ("structured" is accepted as an alias).
    #[value(alias = "structured")]
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Z,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LemmaFamily {
    Swap,
    DeltaCollapse,
    ThetaExchange,
    PrimeCosh,
    Omega,
    Star,
}

impl FromStr for LemmaFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2" => Ok(LemmaFamily::Swap),
            "3" => Ok(LemmaFamily::DeltaCollapse),
            "4" => Ok(LemmaFamily::ThetaExchange),
            "5" => Ok(LemmaFamily::PrimeCosh),
            "omega" => Ok(LemmaFamily::Omega),
            "star" => Ok(LemmaFamily::Star),
            other => Err(format!(
                "unknown check family '{other}' (expected 2, 3, 4, 5, omega, or star)"
            )),
        }
    }
}

impl clap::builder::ValueParserFactory for LemmaFamily {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| LemmaFamily::from_str(s))
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Cable(#[from] CableError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Roots(#[from] RootsError),
    #[error("cannot read {path}: {source}")]
    FileRead {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    FileFormat { path: PathBuf, message: String },
}

impl From<VerifyError> for CliError {
    fn from(err: VerifyError) -> Self {
        match err {
            VerifyError::Diagram(e) => CliError::Diagram(e),
            VerifyError::Cable(e) => CliError::Cable(e),
        }
    }
}

/// What a successful command produced: the bytes for stdout, and whether a
/// comparison it ran came out unequal.
struct Outcome {
    output: String,
    mismatch: bool,
}

impl Outcome {
    fn clean(output: String) -> Self {
        Outcome {
            output,
            mismatch: false,
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if outcome.mismatch {
                1
            } else {
                0
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command) -> Result<Outcome, CliError> {
    let cache = Cache::from_env();
    match command {
        Command::Expand(args) => cached(&cache, expand_key(&args), || expand(&args)),
        Command::JonesTorus(args) => cached(&cache, jones_key(&args), || jones(&args)),
        Command::Oracle {
            command: OracleCommand::Verify { p, q, color },
        } => {
            let key = CacheKey::new("oracle-verify")
                .arg("p", p)
                .arg("q", q)
                .arg("color", color);
            cached(&cache, key, || oracle_verify(p, q, color))
        }
        Command::Oracle {
            command:
                OracleCommand::Bracket {
                    file,
                    color,
                    basis,
                },
        } => {
            let text = read_input(&file)?;
            let key = CacheKey::new("oracle-bracket")
                .arg("color", format_option(color))
                .arg("basis", format!("{basis:?}"))
                .file("diagram", &text);
            cached(&cache, key, || oracle_bracket(&file, &text, color, basis))
        }
        Command::Roots {
            command: RootsCommand::Check { r, lemma },
        } => roots_check(r, lemma),
        Command::Roots {
            command:
                RootsCommand::Growth {
                    p,
                    q,
                    max_color,
                    format,
                },
        } => {
            let key = CacheKey::new("roots-growth")
                .arg("p", p)
                .arg("q", q)
                .arg("max_color", max_color)
                .arg("format", format!("{format:?}"));
            cached(&cache, key, || growth(p, q, max_color, format))
        }
        Command::Satellite(args) => {
            let expansion_text = read_input(&args.expansion)?;
            let companion_text = read_input(&args.companion)?;
            let key = CacheKey::new("satellite")
                .file("expansion", &expansion_text)
                .file("companion", &companion_text);
            cached(&cache, key, || {
                satellite(&args, &expansion_text, &companion_text)
            })
        }
        Command::Companion { command } => companion(command),
    }
}

/// Replays a cached result when one exists; otherwise computes, and stores
/// the output if the computation succeeded without a mismatch.
fn cached(
    cache: &Cache,
    key: CacheKey,
    compute: impl FnOnce() -> Result<Outcome, CliError>,
) -> Result<Outcome, CliError> {
    if let Some(hit) = cache.fetch(&key) {
        return Ok(Outcome::clean(hit));
    }
    let outcome = compute()?;
    if !outcome.mismatch {
        cache.store(&key, &outcome.output);
    }
    Ok(outcome)
}

fn read_input(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::FileRead {
        path: path.to_path_buf(),
        source,
    })
}

fn format_option(value: Option<i64>) -> String {
    value.map_or_else(|| "none".to_string(), |v| v.to_string())
}

fn expand_key(args: &ExpandArgs) -> CacheKey {
    CacheKey::new("expand")
        .arg("p", args.p)
        .arg("q", args.q)
        .arg("color", args.color)
        .arg("core", args.core)
        .arg("framing", format_option(args.framing))
        .arg("format", format!("{:?}", args.format))
}

fn expand(args: &ExpandArgs) -> Result<Outcome, CliError> {
    let mut expansion = cable_expansion(args.p, args.q, args.color, args.core)?;
    if let Some(framing) = args.framing {
        expansion = expansion.adjust_framing(framing - expansion.params.framing);
    }
    let output = match args.format {
        Format::Text => format!("{expansion}"),
        Format::Json => {
            let mut line = serde_json::to_string(&expansion_json(&expansion))
                .expect("expansion serializes");
            line.push('\n');
            line
        }
    };
    Ok(Outcome::clean(output))
}

fn expansion_json(expansion: &CableExpansion) -> serde_json::Value {
    serde_json::json!({
        "p": expansion.params.p,
        "q": expansion.params.q,
        "color": expansion.params.color,
        "core": expansion.params.core_color,
        "framing": expansion.params.framing,
        "element": element_json(&expansion.element),
    })
}

fn element_json(element: &SkeinElement) -> serde_json::Value {
    serde_json::Value::Array(
        element
            .terms()
            .map(|(n, coeff)| serde_json::json!([n, laurent_json(coeff)]))
            .collect(),
    )
}

fn laurent_json(poly: &LaurentPoly) -> serde_json::Value {
    serde_json::Value::Array(
        poly.terms()
            .map(|(exp, coeff)| serde_json::json!([exp, coeff.to_string()]))
            .collect(),
    )
}

fn jones_key(args: &JonesArgs) -> CacheKey {
    CacheKey::new("jones-torus")
        .arg("p", args.p)
        .arg("q", args.q)
        .arg("color", args.color)
        .arg("framing", args.framing)
        .arg("format", format!("{:?}", args.format))
}

fn jones(args: &JonesArgs) -> Result<Outcome, CliError> {
    let value = torus_knot_jones(args.p, args.q, args.color, args.framing)?;
    let output = match args.format {
        Format::Text => format!("{value}\n"),
        Format::Json => {
            let mut line = serde_json::to_string(&serde_json::json!({
                "p": args.p,
                "q": args.q,
                "color": args.color,
                "framing": args.framing,
                "jones": laurent_json(&value),
            }))
            .expect("invariant serializes");
            line.push('\n');
            line
        }
    };
    Ok(Outcome::clean(output))
}

fn oracle_verify(p: i64, q: i64, color: i64) -> Result<Outcome, CliError> {
    let report = verify_cable_expansion(p, q, color)?;
    let verdict = if report.matched { "PASS" } else { "FAIL" };
    let mut output = format!(
        "ORACLE p={p} q={q} N={color} writhe={} sigma={} {verdict}\n",
        report.writhe,
        p * q
    );
    if !report.matched {
        let _ = writeln!(output, "expected {}", report.expected);
        let _ = writeln!(output, "computed {}", report.computed);
    }
    Ok(Outcome {
        output,
        mismatch: !report.matched,
    })
}

fn oracle_bracket(
    path: &Path,
    text: &str,
    color: Option<i64>,
    basis: Basis,
) -> Result<Outcome, CliError> {
    let diagram: Diagram = text.parse().map_err(|e: DiagramError| CliError::FileFormat {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let output = if diagram.annular {
        match (color, basis) {
            (Some(c), Basis::E) => format!("{}\n", diagram.colored_annulus_bracket(c)?),
            (Some(c), Basis::Z) => {
                format!("{}\n", diagram.colored_annulus_bracket(c)?.to_z_polynomial())
            }
            (None, Basis::Z) => format!("{}\n", diagram.annulus_bracket()?),
            (None, Basis::E) => format!("{}\n", diagram.annulus_bracket()?.to_e_basis()),
        }
    } else {
        match color {
            Some(c) => format!("{}\n", diagram.colored_planar_bracket(c)?),
            None => format!("{}\n", diagram.kauffman_bracket()?),
        }
    };
    Ok(Outcome::clean(output))
}

fn check_line(output: &mut String, label: &str, params: &str, check: CheckResult) -> bool {
    let verdict = if check.pass { "PASS" } else { "FAIL" };
    let _ = writeln!(output, "{label} {params} {verdict} {:.11e}", check.residual);
    check.pass
}

fn roots_check(r: i64, lemma: LemmaFamily) -> Result<Outcome, CliError> {
    let ctx = RootContext::new(r)?;
    let mut output = String::new();
    let mut all_pass = true;
    match lemma {
        LemmaFamily::Swap => {
            for (p, q) in [(1, 0), (0, 1), (2, 3), (3, 2), (2, 5)] {
                for color in 0..=2 {
                    for core in 0..=1 {
                        for l in 0..=6 {
                            let check = match swap_symmetry_check(&ctx, p, q, color, core, l) {
                                Ok(check) => check,
                                // Points outside the level's color range are
                                // not part of the grid.
                                Err(RootsError::ColorRange { .. }) => continue,
                                Err(err) => return Err(err.into()),
                            };
                            let params =
                                format!("p={p} q={q} color={color} core={core} l={l}");
                            all_pass &= check_line(&mut output, "LEMMA2", &params, check);
                        }
                    }
                }
            }
        }
        LemmaFamily::DeltaCollapse => {
            let pairs = [
                (
                    "poly",
                    ParityFunctionPair::new(
                        ParityFn::EvenPolynomial(vec![
                            ComplexValue::new(1.0, 0.0),
                            ComplexValue::new(0.5, -0.25),
                        ]),
                        ParityFn::OddPolynomial(vec![
                            ComplexValue::new(0.0, 1.0),
                            ComplexValue::new(1.0, 0.0),
                        ]),
                    )?,
                ),
                (
                    "exp",
                    ParityFunctionPair::new(
                        ParityFn::GaussianExp(ComplexValue::new(0.02, 0.03)),
                        ParityFn::SinhLinear(ComplexValue::new(-0.01, 0.05)),
                    )?,
                ),
            ];
            for (kind, pair) in &pairs {
                for t in 0..=3 {
                    for p in 1..=3 {
                        for k_prime in -3..=3 {
                            let check = delta_collapse_check(pair, t, p, k_prime)?;
                            let params = format!("kind={kind} t={t} p={p} kp={k_prime}");
                            all_pass &= check_line(&mut output, "LEMMA3", &params, check);
                        }
                    }
                }
            }
        }
        LemmaFamily::ThetaExchange => {
            let draws = [
                (
                    ComplexValue::new(0.01, 0.07),
                    ComplexValue::new(0.05, -0.02),
                    ComplexValue::new(-0.03, 0.04),
                    ComplexValue::new(0.2, -0.1),
                ),
                (
                    ComplexValue::new(-0.04, 0.02),
                    ComplexValue::new(0.0, 0.09),
                    ComplexValue::new(0.06, 0.0),
                    ComplexValue::new(-0.3, 0.05),
                ),
                (
                    ComplexValue::new(0.03, -0.06),
                    ComplexValue::new(-0.08, 0.01),
                    ComplexValue::new(0.02, 0.08),
                    ComplexValue::new(0.0, 0.4),
                ),
            ];
            for (draw, (a1, a2, a3, zeta)) in draws.iter().enumerate() {
                for n in 0..=6 {
                    let check = theta_exchange_check(*a1, *a2, *a3, *zeta, n)?;
                    let params = format!("draw={draw} n={n}");
                    all_pass &= check_line(&mut output, "LEMMA4", &params, check);
                }
            }
        }
        LemmaFamily::PrimeCosh => {
            for eta in 1..=(2 * r + 1) {
                if eta.rem_euclid(r + 1) == 0 {
                    continue;
                }
                let check = prime_cosh_sum_check(&ctx, eta)?;
                all_pass &= check_line(&mut output, "LEMMA5", &format!("eta={eta}"), check);
            }
            for l in 0..=3 {
                for s in 0..=1 {
                    for q in 1..=3 {
                        for k_prime in -2..=2 {
                            let check = match cosh_delta_check(&ctx, l, s, q, k_prime) {
                                Ok(check) => check,
                                // Arguments hitting a multiple of r+1 are
                                // outside the identity's hypotheses.
                                Err(RootsError::DivisibleArgument { .. }) => continue,
                                Err(err) => return Err(err.into()),
                            };
                            let params = format!("l={l} s={s} q={q} kp={k_prime}");
                            all_pass &= check_line(&mut output, "LEMMA5", &params, check);
                        }
                    }
                }
            }
        }
        LemmaFamily::Omega => {
            for m in 1..r {
                let check = omega_annihilation_check(&ctx, m)?;
                all_pass &= check_line(&mut output, "OMEGA", &format!("m={m}"), check);
            }
            let check = omega_unknot_check(&ctx)?;
            all_pass &= check_line(&mut output, "OMEGA", "closure", check);
        }
        LemmaFamily::Star => {
            let top = ((r - 1) / 2).min(4);
            for l in 0..=top {
                for k in 0..=top {
                    let check = star_check(&ctx, l, k)?;
                    let params = format!("l={l} k={k}");
                    all_pass &= check_line(&mut output, "STAR", &params, check);
                }
            }
        }
    }
    Ok(Outcome {
        output,
        mismatch: !all_pass,
    })
}

fn growth(p: i64, q: i64, max_color: i64, format: Format) -> Result<Outcome, CliError> {
    let rows = evaluate_jones_at_roots(p, q, max_color)?;
    let output = match format {
        Format::Text => {
            let mut out = String::new();
            for row in &rows {
                let _ = writeln!(
                    out,
                    "N={} r={} value={:+.11e}{:+.11e}i",
                    row.color, row.level, row.value.re, row.value.im
                );
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "color": row.color,
                        "level": row.level,
                        "re": row.value.re,
                        "im": row.value.im,
                    })
                })
                .collect();
            let mut line = serde_json::to_string(&serde_json::json!({
                "p": p,
                "q": q,
                "rows": rows,
            }))
            .expect("growth table serializes");
            line.push('\n');
            line
        }
    };
    Ok(Outcome::clean(output))
}

fn satellite(
    args: &SatelliteArgs,
    expansion_text: &str,
    companion_text: &str,
) -> Result<Outcome, CliError> {
    let expansion: CableExpansion =
        expansion_text
            .parse()
            .map_err(|e: CableError| CliError::FileFormat {
                path: args.expansion.clone(),
                message: e.to_string(),
            })?;
    let table = parse_companion(&args.companion, companion_text)?;
    let value = expansion.evaluate_satellite(&table)?;
    Ok(Outcome::clean(format!("{value}\n")))
}

/// Parses a companion table: one `color polynomial` pair per line, with
/// blank lines and `#` comments skipped.
fn parse_companion(path: &Path, text: &str) -> Result<BTreeMap<i64, LaurentPoly>, CliError> {
    let bad = |message: String| CliError::FileFormat {
        path: path.to_path_buf(),
        message,
    };
    let mut table = BTreeMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (color, poly) = line
            .split_once(' ')
            .ok_or_else(|| bad(format!("line {}: expected 'color polynomial'", index + 1)))?;
        let color: i64 = color
            .parse()
            .map_err(|_| bad(format!("line {}: bad color '{color}'", index + 1)))?;
        if color < 0 {
            return Err(bad(format!("line {}: negative color {color}", index + 1)));
        }
        let poly: LaurentPoly = poly
            .trim()
            .parse()
            .map_err(|e: LaurentError| bad(format!("line {}: {e}", index + 1)))?;
        if table.insert(color, poly).is_some() {
            return Err(bad(format!("line {}: duplicate color {color}", index + 1)));
        }
    }
    Ok(table)
}

fn companion(command: CompanionCommand) -> Result<Outcome, CliError> {
    let mut output = String::new();
    match command {
        CompanionCommand::Unknot { max_color } => {
            if max_color < 0 {
                return Err(CableError::NegativeColor(max_color).into());
            }
            for l in 0..=max_color {
                let sign = if l % 2 == 1 { -1 } else { 1 };
                let value = LaurentPoly::quantum_integer(l + 1).shift_scale(0, &sign.into());
                let _ = writeln!(output, "{l} {value}");
            }
        }
        CompanionCommand::Torus { p, q, max_color } => {
            if max_color < 0 {
                return Err(CableError::NegativeColor(max_color).into());
            }
            for l in 0..=max_color {
                let value = torus_knot_jones(p, q, l, 0)?;
                let _ = writeln!(output, "{l} {value}");
            }
        }
    }
    Ok(Outcome::clean(output))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).unwrap()
    }

    fn run_capture(args: &[&str]) -> (i32, String) {
        let cli = parse(args);
        match execute(cli.command) {
            Ok(outcome) => ((outcome.mismatch as i32), outcome.output),
            Err(err) => (2, format!("error: {err}")),
        }
    }

    #[test]
    fn expand_text_golden_bytes() {
        let (code, out) = run_capture(&["skein", "expand", "2", "3", "1", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2 3 1 0 6\n{0: {0:1}, 2: {12:-1}}\n");
    }

    #[test]
    fn expand_json_golden_bytes() {
        let (code, out) = run_capture(&["skein", "expand", "2", "3", "1", "0", "--format", "json"]);
        assert_eq!(code, 0);
        // serde_json emits object keys in sorted order.
        assert_eq!(
            out,
            "{\"color\":1,\"core\":0,\"element\":[[0,[[0,\"1\"]]],[2,[[12,\"-1\"]]]],\
             \"framing\":6,\"p\":2,\"q\":3}\n"
        );
        let (code, aliased) =
            run_capture(&["skein", "expand", "2", "3", "1", "0", "--format", "structured"]);
        assert_eq!(code, 0);
        assert_eq!(aliased, out);
    }

    #[test]
    fn expand_respects_framing_override() {
        let (code, out) = run_capture(&["skein", "expand", "2", "3", "1", "0", "--framing", "0"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("2 3 1 0 0\n"));
    }

    #[test]
    fn jones_text_golden_bytes() {
        let (code, out) = run_capture(&["skein", "jones-torus", "2", "3", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{-18:1, -10:-1, -6:-1, -2:-1}\n");
    }

    #[test]
    fn non_coprime_slope_is_invalid_input() {
        let (code, _) = run_capture(&["skein", "expand", "2", "4", "1", "0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn oracle_verify_reports_pass() {
        let (code, out) = run_capture(&["skein", "oracle", "verify", "2", "3", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "ORACLE p=2 q=3 N=1 writhe=3 sigma=6 PASS\n");
    }

    #[test]
    fn oracle_verify_enforces_the_budget() {
        let (code, _) = run_capture(&["skein", "oracle", "verify", "5", "4", "3"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn roots_check_families_pass() {
        for lemma in ["2", "3", "4", "5", "omega", "star"] {
            let r = if lemma == "5" { "4" } else { "9" };
            let (code, out) = run_capture(&["skein", "roots", "check", "--r", r, "--lemma", lemma]);
            assert_eq!(code, 0, "family {lemma}: {out}");
            assert!(!out.is_empty());
            assert!(out.lines().all(|line| line.contains(" PASS ")));
        }
    }

    #[test]
    fn composite_level_rejected_for_prime_family() {
        let (code, out) = run_capture(&["skein", "roots", "check", "--r", "5", "--lemma", "5"]);
        assert_eq!(code, 2, "{out}");
    }

    #[test]
    fn growth_rows_per_color() {
        let (code, out) = run_capture(&["skein", "roots", "growth", "2", "3", "2"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("N=0 r=1 value=+1.00000000000e0"));
    }

    #[test]
    fn companion_unknot_table() {
        let (code, out) = run_capture(&["skein", "companion", "unknot", "--max-color", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0 {0:1}\n1 {-2:-1, 2:-1}\n2 {-4:1, 0:1, 4:1}\n");
    }

    #[test]
    fn companion_tables_parse_back() {
        let (_, out) = run_capture(&["skein", "companion", "torus", "2", "3", "--max-color", "2"]);
        let table = parse_companion(Path::new("t"), &out).unwrap();
        assert_eq!(table.len(), 3);
        assert_eq!(table[&0], LaurentPoly::one());
    }

    #[test]
    fn companion_rejects_bad_lines() {
        let path = Path::new("c");
        assert!(parse_companion(path, "0 {0:1}\n0 {0:1}\n").is_err());
        assert!(parse_companion(path, "x {0:1}\n").is_err());
        assert!(parse_companion(path, "1\n").is_err());
        assert!(parse_companion(path, "# comment\n\n3 {0:1}\n").is_ok());
    }

    #[test]
    fn lemma_family_names() {
        assert!(LemmaFamily::from_str("6").is_err());
        assert_eq!(LemmaFamily::from_str("omega").unwrap(), LemmaFamily::Omega);
    }
}
