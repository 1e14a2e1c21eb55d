//! `homlie validate | build | corpus`.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check or a
//! construction's hypothesis fails, 2 for unreadable input or bad usage.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::bialgebra::{
    check_triple_equivalence, coadjoint_matched_pair, double_from_matched_pair, dual_algebra, manin_double,
    validate_bialgebra, validate_manin_triple, validate_matched_pair, Cobracket, HomLieBialgebra,
};
use crate::coboundary::{
    check_chybe, cobracket_from_r, hom_double, lemma44_residuals, lemma46_check, twist_compatible_space,
    validate_coboundary, RMatrix,
};
use crate::corpus::{self, BUILTINS};
use crate::error::{Error, Result};
use crate::format::{self, Structure};
use crate::hom_lie::{is_weakly_involutive, validate_hom_lie, HomLieAlgebra};
use crate::operators::{
    commutator_hom_lie, cor512_solutions, cor56_checks, left_mult_rep, r_from_o_operator, validate_hlsa,
    validate_o_operator, OOperatorCandidate,
};
use crate::random::{combination, seeded, small_matrix};
use crate::report::{CheckReport, Condition};
use crate::representation::{adjoint_rep, hom_dual_representation, semidirect_product, validate_representation};
use crate::tensor::{parse_rational, Matrix};

/// Number of random r-matrices drawn per seeded suite.
pub const FUZZ_CASES: usize = 50;

#[derive(Debug, Parser)]
#[command(name = "homlie", version, about = "Exact checks and constructions for Hom-Lie algebras and bialgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run checks on a structure file or `builtin:NAME`.
    Validate {
        input: String,
        #[arg(long = "check", value_enum)]
        checks: Vec<Check>,
        #[command(flatten)]
        overrides: Overrides,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Without an `rmatrix`, lemma44 and lemma46 run on seeded random r.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Construct a new structure and print it as a structure file.
    Build {
        #[arg(value_enum)]
        construction: Construction,
        input: String,
        #[command(flatten)]
        overrides: Overrides,
        /// Which of the two solutions `cor512` emits.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// List the builtin structures.
    Corpus {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Default, clap::Args)]
pub struct Overrides {
    /// r-matrix as a sum of terms like `e1^e2`, `2*e1.e2`, `-1/2 e2^e1`.
    #[arg(long)]
    pub rmatrix: Option<String>,
    #[arg(long, value_enum)]
    pub rep: Option<RepChoice>,
    #[arg(long, value_enum)]
    pub cobracket: Option<CobracketChoice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepChoice {
    Adjoint,
    Coadjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CobracketChoice {
    Zero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    #[value(name = "hom-lie")]
    HomLie,
    #[value(name = "weakly-involutive")]
    WeaklyInvolutive,
    #[value(name = "representation")]
    Representation,
    #[value(name = "matched-pair")]
    MatchedPair,
    #[value(name = "manin-triple")]
    ManinTriple,
    #[value(name = "bialgebra")]
    Bialgebra,
    #[value(name = "coboundary")]
    Coboundary,
    #[value(name = "chybe")]
    Chybe,
    #[value(name = "o-operator")]
    OOperator,
    #[value(name = "lsa")]
    Lsa,
    #[value(name = "triple-equivalence")]
    TripleEquivalence,
    #[value(name = "hom-double")]
    HomDouble,
    #[value(name = "lemma44")]
    Lemma44,
    #[value(name = "lemma46")]
    Lemma46,
    #[value(name = "thm58")]
    Thm58,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::HomLie => "hom-lie",
            Check::WeaklyInvolutive => "weakly-involutive",
            Check::Representation => "representation",
            Check::MatchedPair => "matched-pair",
            Check::ManinTriple => "manin-triple",
            Check::Bialgebra => "bialgebra",
            Check::Coboundary => "coboundary",
            Check::Chybe => "chybe",
            Check::OOperator => "o-operator",
            Check::Lsa => "lsa",
            Check::TripleEquivalence => "triple-equivalence",
            Check::HomDouble => "hom-double",
            Check::Lemma44 => "lemma44",
            Check::Lemma46 => "lemma46",
            Check::Thm58 => "thm58",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Semidirect,
    Double,
    HomDouble,
    Dual,
    Cobracket,
    Commutator,
    OOperatorR,
    Cor512,
}

/// Parses `e1^e2 + 2*e1.e2 - 1/2 e2^e1` into an `n × n` coefficient matrix.
/// `^` is the wedge `a⊗b − b⊗a`, `.` the plain tensor product.
pub fn parse_rmatrix(text: &str, n: usize) -> Result<Matrix> {
    let loc = |m: String| Error::parse("--rmatrix", m);
    let mut out = Matrix::zeros(n, n);
    let normalized = text.replace('-', "+-");
    for raw in normalized.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            continue;
        }
        let (sign, term) = match term.strip_prefix('-') {
            Some(t) => (-1, t.trim()),
            None => (1, term),
        };
        let start = term.find('e').ok_or_else(|| loc(format!("`{raw}`: expected a basis product like e1^e2")))?;
        let coeff_text = term[..start].trim().trim_end_matches('*').trim();
        let coeff =
            if coeff_text.is_empty() { crate::tensor::one() } else { parse_rational(coeff_text).map_err(loc)? };
        let coeff = coeff * crate::tensor::rat(sign);
        let body = &term[start..];
        let (wedge, (a, b)) = match (body.split_once('^'), body.split_once('.')) {
            (Some(p), None) => (true, p),
            (None, Some(p)) => (false, p),
            _ => return Err(loc(format!("`{raw}`: expected eI^eJ or eI.eJ"))),
        };
        let index = |s: &str| -> Result<usize> {
            let k: usize = s
                .trim()
                .strip_prefix('e')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| loc(format!("`{s}` is not a basis vector")))?;
            if k == 0 || k > n {
                return Err(loc(format!("e{k} outside e1..e{n}")));
            }
            Ok(k - 1)
        };
        let (i, j) = (index(a)?, index(b)?);
        out.add_at(i, j, &coeff);
        if wedge {
            out.add_at(j, i, &-coeff);
        }
    }
    Ok(out)
}

pub fn load(input: &str) -> Result<Structure> {
    if input.starts_with("builtin:") {
        return corpus::builtin(input);
    }
    let text = std::fs::read_to_string(PathBuf::from(input)).map_err(|e| Error::parse(input, e.to_string()))?;
    format::parse(&text, &corpus::builtin)
}

fn apply_overrides(mut s: Structure, o: &Overrides) -> Result<Structure> {
    if let Some(text) = &o.rmatrix {
        let a = s.algebra()?.clone();
        let r = RMatrix::new(a.clone(), parse_rmatrix(text, a.dim())?)?;
        s.rmatrix = Some(r);
    }
    if let Some(CobracketChoice::Zero) = o.cobracket {
        s.cobracket = Some(Cobracket::zero(s.algebra()?.clone()));
    }
    match o.rep {
        Some(RepChoice::Adjoint) => s.representation = Some(adjoint_rep(s.algebra()?)),
        Some(RepChoice::Coadjoint) => s.representation = Some(hom_dual_representation(&adjoint_rep(s.algebra()?))?),
        None => {}
    }
    Ok(s.normalized())
}

/// The cobracket section, or the one induced by the r-matrix.
fn bialgebra_of(s: &Structure) -> Result<HomLieBialgebra> {
    match (&s.cobracket, &s.rmatrix) {
        (Some(c), _) => Ok(HomLieBialgebra::new(c.clone())),
        (None, Some(r)) => Ok(HomLieBialgebra::new(cobracket_from_r(r))),
        (None, None) => Err(Error::MissingSection("cobracket")),
    }
}

fn candidate(s: &Structure) -> Result<OOperatorCandidate> {
    OOperatorCandidate::new(s.representation()?.clone(), s.ooperator()?.clone())
}

/// A failed hypothesis becomes a failing report; other errors propagate.
fn settle(r: Result<CheckReport>) -> Result<CheckReport> {
    match r {
        Err(Error::Precondition { op, report }) => {
            let mut out = CheckReport::labelled(Condition::Hypothesis, format!("{op}: precondition failed"));
            out.absorb(*report);
            Ok(out)
        }
        other => other,
    }
}

fn seeded_rs(a: &HomLieAlgebra, seed: u64, skew: bool) -> Vec<RMatrix> {
    let mut rng = seeded(seed);
    let n = a.dim();
    (0..FUZZ_CASES)
        .map(|_| {
            let m = if skew {
                combination(&mut rng, &twist_compatible_space(a, true), n, n)
            } else {
                small_matrix(&mut rng, n, n)
            };
            RMatrix::new(a.clone(), m).expect("square")
        })
        .collect()
}

fn over_rs(
    s: &Structure,
    seed: Option<u64>,
    skew: bool,
    f: fn(&RMatrix) -> Result<CheckReport>,
) -> Result<CheckReport> {
    if let Some(r) = &s.rmatrix {
        return settle(f(r));
    }
    let Some(seed) = seed else {
        return Err(Error::MissingSection("rmatrix"));
    };
    let a = s.algebra()?;
    let mut out = CheckReport::labelled(Condition::Agreement, format!("{FUZZ_CASES} seeded r (seed {seed})"));
    for (k, r) in seeded_rs(a, seed, skew).iter().enumerate() {
        out.absorb(settle(f(r))?.with_label(format!("r #{}", k + 1)));
    }
    Ok(out)
}

pub fn run_check(s: &Structure, check: Check, seed: Option<u64>) -> Result<CheckReport> {
    match check {
        Check::HomLie => Ok(validate_hom_lie(s.algebra()?)),
        Check::WeaklyInvolutive => Ok(is_weakly_involutive(s.algebra()?)),
        Check::Representation => Ok(validate_representation(s.representation()?)),
        Check::MatchedPair => {
            let bi = bialgebra_of(s)?;
            Ok(match coadjoint_matched_pair(&bi) {
                Ok(mp) => validate_matched_pair(&mp),
                Err(report) => *report,
            })
        }
        Check::ManinTriple => {
            let bi = bialgebra_of(s)?;
            settle(validate_manin_triple(&manin_double(&bi), bi.algebra().dim()))
        }
        Check::Bialgebra => Ok(validate_bialgebra(&bialgebra_of(s)?)),
        Check::Coboundary => settle(validate_coboundary(s.rmatrix()?).map(|c| c.report)),
        Check::Chybe => Ok(check_chybe(s.rmatrix()?)),
        Check::OOperator => Ok(validate_o_operator(&candidate(s)?)),
        Check::Lsa => {
            let l = s.lsa()?;
            let mut report = validate_hlsa(l);
            if report.passed {
                report.absorb(commutator_hom_lie(l).1.with_label("commutator algebra"));
                report.absorb(left_mult_rep(l).1.with_label("left multiplication"));
                report.absorb(settle(cor56_checks(l))?);
            }
            Ok(report)
        }
        Check::TripleEquivalence => Ok(check_triple_equivalence(&bialgebra_of(s)?)),
        Check::HomDouble => settle(hom_double(&bialgebra_of(s)?).map(|d| d.report)),
        Check::Lemma44 => over_rs(s, seed, false, lemma44_residuals),
        Check::Lemma46 => over_rs(s, seed, true, lemma46_check),
        Check::Thm58 => settle(r_from_o_operator(&candidate(s)?).map(|sol| sol.report)),
    }
}

/// Checks run when none are named: one per section present.
pub fn default_checks(s: &Structure) -> Vec<Check> {
    let mut out = Vec::new();
    if s.algebra.is_some() {
        out.push(Check::HomLie);
    }
    if s.representation.is_some() {
        out.push(Check::Representation);
    }
    if s.cobracket.is_some() {
        out.push(Check::Bialgebra);
    }
    if s.rmatrix.is_some() {
        out.push(Check::Chybe);
    }
    if s.lsa.is_some() {
        out.push(Check::Lsa);
    }
    if s.ooperator.is_some() {
        out.push(Check::OOperator);
    }
    out
}

pub fn build(s: &Structure, construction: Construction, which: u8) -> Result<Structure> {
    let name = |what: &str| format!("{what}({})", s.name);
    Ok(match construction {
        Construction::Semidirect => {
            Structure::new(name("semidirect")).with_algebra(semidirect_product(s.representation()?)?)
        }
        Construction::Double => {
            let bi = bialgebra_of(s)?;
            let mp = coadjoint_matched_pair(&bi).map_err(|r| Error::precondition("double", *r))?;
            Structure::new(name("double")).with_algebra(double_from_matched_pair(&mp)?)
        }
        Construction::HomDouble => {
            let d = hom_double(&bialgebra_of(s)?)?;
            let cb = cobracket_from_r(&d.r);
            Structure::new(name("hom-double")).with_algebra(d.algebra).with_rmatrix(d.r).with_cobracket(cb)
        }
        Construction::Dual => Structure::new(name("dual")).with_algebra(dual_algebra(s.cobracket()?)),
        Construction::Cobracket => {
            let r = s.rmatrix()?;
            Structure::new(s.name.clone())
                .with_algebra(r.base().clone())
                .with_rmatrix(r.clone())
                .with_cobracket(cobracket_from_r(r))
        }
        Construction::Commutator => {
            let l = s.lsa()?;
            let (g, report) = commutator_hom_lie(l);
            if !report.passed {
                return Err(Error::precondition("commutator", report));
            }
            Structure::new(name("commutator"))
                .with_algebra(g)
                .with_representation(left_mult_rep(l).0)
                .with_lsa(l.clone())
        }
        Construction::OOperatorR => {
            let sol = r_from_o_operator(&candidate(s)?)?;
            Structure::new(name("o-operator-r")).with_algebra(sol.algebra).with_rmatrix(sol.r)
        }
        Construction::Cor512 => {
            let sol = cor512_solutions(s.lsa()?)?;
            let r = if which == 1 { sol.r1 } else { sol.r2 };
            Structure::new(format!("r{which}({})", s.name)).with_algebra(sol.algebra).with_rmatrix(r)
        }
    })
}

#[derive(Serialize)]
struct CatalogEntry<'a> {
    #[serde(flatten)]
    builtin: &'a corpus::Builtin,
    dim: usize,
    sections: Vec<&'static str>,
}

fn sections(s: &Structure) -> Vec<&'static str> {
    let mut out = Vec::new();
    for (present, name) in [
        (s.algebra.is_some(), "algebra"),
        (s.representation.is_some(), "representation"),
        (s.cobracket.is_some(), "cobracket"),
        (s.rmatrix.is_some(), "rmatrix"),
        (s.lsa.is_some(), "lsa"),
        (s.ooperator.is_some(), "ooperator"),
    ] {
        if present {
            out.push(name);
        }
    }
    out
}

fn corpus_listing(json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    if json {
        let entries: Vec<_> = BUILTINS
            .iter()
            .map(|b| {
                let s = corpus::builtin(b.name).expect("builtins construct");
                let dim = s.algebra.as_ref().map(HomLieAlgebra::dim).or(s.lsa.as_ref().map(|l| l.dim())).unwrap_or(0);
                CatalogEntry { builtin: b, dim, sections: sections(&s) }
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&entries).expect("serializable"))
    } else {
        let width = BUILTINS.iter().map(|b| b.name.len()).max().unwrap_or(0);
        for b in BUILTINS {
            let aliases =
                if b.aliases.is_empty() { String::new() } else { format!(" (also {})", b.aliases.join(", ")) };
            writeln!(out, "{:width$}  {}{aliases}", b.name, b.description)?;
        }
        Ok(())
    }
}

fn validate(
    s: &Structure,
    checks: &[Check],
    seed: Option<u64>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<bool> {
    let checks = if checks.is_empty() { default_checks(s) } else { checks.to_vec() };
    let mut results = Vec::new();
    for &c in &checks {
        results.push((c, run_check(s, c, seed)?));
    }
    let passed = results.iter().all(|(_, r)| r.passed);
    match format {
        OutputFormat::Text => {
            for (c, r) in &results {
                let _ = writeln!(out, "== {} ==\n{r}", c.name());
            }
            let _ = writeln!(out, "{}: {}", s.name, if passed { "PASS" } else { "FAIL" });
        }
        OutputFormat::Json => {
            let checks: Vec<_> = results.iter().map(|(c, r)| json!({ "check": c.name(), "report": r })).collect();
            let doc = json!({ "structure": s.name, "passed": passed, "checks": checks });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(passed)
}

fn report_error(e: &Error, err: &mut dyn Write) -> u8 {
    let _ = writeln!(err, "error: {e}");
    match e {
        Error::Precondition { .. } => 1,
        _ => 2,
    }
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Corpus { json } => {
            let _ = corpus_listing(json, out);
            return 0;
        }
        Command::Validate { input, checks, overrides, format, seed } => load(&input)
            .and_then(|s| apply_overrides(s, &overrides))
            .and_then(|s| validate(&s, &checks, seed, format, out))
            .map(|passed| if passed { 0 } else { 1 }),
        Command::Build { construction, input, overrides, which } => load(&input)
            .and_then(|s| apply_overrides(s, &overrides))
            .and_then(|s| build(&s, construction, which))
            .map(|built| {
                let _ = write!(out, "{}", format::emit(&built));
                0
            }),
    };
    result.unwrap_or_else(|e| report_error(&e, err))
}
