//! Subcommands: `construct`, `betti` and `verify`.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use syzygy::constructions::{
    artinian_quotient, complete_intersection_quadrics, cone, curve_on_scroll, elliptic_normal_curve,
    general_points, geometric_linear_section, inner_projection, points_on_rnc, projected_monomial_curve,
    projected_scroll_fourfold, projected_scroll_surface, projected_scroll_threefold, rational_normal_curve,
    scroll, Construction, ScrollSpec,
};
use syzygy::invariants::{betti_table, derived_invariants, hilbert_data};
use syzygy::kernel::{Field, FieldSpec, PrimeField, Rationals};
use syzygy::verify::{run_suite, CheckGroup, SuiteConfig};

use crate::ideal_file::{render, IdealFile, ParseError};
use crate::report::{BettiJson, Report};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad command-line usage; exit status 2.
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error(transparent)]
    Algebra(#[from] syzygy::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Parser)]
#[command(name = "syzygy", version, about = "Exact Betti tables and syzygy checks for projective schemes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a scheme and write its ideal file.
    Construct(ConstructArgs),
    /// Print the Betti table of an ideal file.
    Betti(BettiArgs),
    /// Run check suites and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Rational normal curve of degree --d.
    Rnc,
    /// Rational normal scroll S(--blocks).
    Scroll,
    /// Almost minimal degree curve of codimension --e on S(1,e-1).
    AlmostMinimalCurve,
    /// Almost minimal degree surface of codimension --e on S(0,1,e-1).
    AlmostMinimalSurface,
    /// Almost minimal degree threefold of codimension --e.
    AlmostMinimalThreefold,
    /// Almost minimal degree fourfold of codimension --e.
    AlmostMinimalFourfold,
    /// Elliptic normal curve of codimension --e (e = 1 mod 3, e >= 4).
    Elliptic,
    /// --d general points of P^e.
    Points,
    /// --d points on the rational normal curve of P^e.
    PointsOnRnc,
    /// Curve of class --alpha H + --k F on S(--a, --b).
    CurveOnScroll,
    /// Complete intersection of --count quadrics in --vars variables.
    Quadrics,
    /// Cone over --input with --count new variables.
    Cone,
    /// Saturated section of --input by --count general hyperplanes.
    Section,
    /// Quotient of --input by --count general linear forms, unsaturated.
    Artinian,
    /// Projection of --input from --point.
    InnerProjection,
}

impl Kind {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    fn needs_seed(self) -> bool {
        matches!(
            self,
            Kind::Points | Kind::PointsOnRnc | Kind::CurveOnScroll | Kind::Quadrics | Kind::Section | Kind::Artinian
        )
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    pub kind: Kind,
    #[arg(long)]
    pub e: Option<u32>,
    #[arg(long)]
    pub d: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    pub blocks: Vec<u32>,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long)]
    pub vars: Option<usize>,
    /// Input ideal file for cone, section, artinian and inner-projection.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub point: Vec<i64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// `Q` or a prime; defaults to the input's field, else 32003.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub json: bool,
    /// Recompute over `Q` or another prime instead of the file's field.
    #[arg(long)]
    pub field: Option<String>,
    /// Stop after this many rows instead of detecting the last one.
    #[arg(long)]
    pub max_rows: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Bound,
    Extremal,
    DivisorClass,
    GenusTwo,
    Dichotomy,
    InnerProjection,
    Lefschetz,
    BrokenDivisor,
    Tables,
    All,
}

impl CheckArg {
    fn groups(self) -> Vec<CheckGroup> {
        match self {
            CheckArg::Bound => vec![CheckGroup::Bound],
            CheckArg::Extremal => vec![CheckGroup::Extremal],
            CheckArg::DivisorClass => vec![CheckGroup::DivisorClass],
            CheckArg::GenusTwo => vec![CheckGroup::GenusTwo],
            CheckArg::Dichotomy => vec![CheckGroup::Dichotomy],
            CheckArg::InnerProjection => vec![CheckGroup::InnerProjection],
            CheckArg::Lefschetz => vec![CheckGroup::Lefschetz],
            CheckArg::BrokenDivisor => vec![CheckGroup::BrokenDivisor],
            CheckArg::Tables => vec![CheckGroup::Tables],
            CheckArg::All => CheckGroup::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub check: Vec<CheckArg>,
    #[arg(long, default_value_t = 3)]
    pub e_min: usize,
    /// Defaults to --e-min.
    #[arg(long)]
    pub e_max: Option<usize>,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_field_arg(s: &str) -> Result<FieldSpec, CliError> {
    let spec = if s == "Q" || s == "q" {
        FieldSpec::Rationals
    } else {
        FieldSpec::Prime(s.parse().map_err(|_| usage(format!("--field expects Q or a prime, got `{s}`")))?)
    };
    spec.validate().map_err(|e| usage(e.to_string()))?;
    Ok(spec)
}

fn read_ideal_file(path: &Path) -> Result<IdealFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    IdealFile::parse(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

/// Runs `body` over the field described by `spec`.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Prime(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
            FieldSpec::Rationals => {
                let $f = Rationals;
                $body
            }
        }
    };
}

pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Construct(args) => cmd_construct(&args).map(|()| 0),
        Command::Betti(args) => cmd_betti(&args).map(|()| 0),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn required<T: Copy>(v: Option<T>, flag: &str, kind: Kind) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("`construct {}` requires --{flag}", kind.name())))
}

fn cmd_construct(args: &ConstructArgs) -> Result<(), CliError> {
    let kind = args.kind;
    if kind.needs_seed() && args.seed.is_none() {
        return Err(usage(format!("`construct {}` is randomized and requires --seed", kind.name())));
    }
    let input = match (&args.input, matches!(kind, Kind::Cone | Kind::Section | Kind::Artinian | Kind::InnerProjection)) {
        (Some(path), true) => Some(read_ideal_file(path)?),
        (None, true) => return Err(usage(format!("`construct {}` requires --input", kind.name()))),
        (Some(_), false) => return Err(usage(format!("`construct {}` takes no --input", kind.name()))),
        (None, false) => None,
    };
    let spec = match (&args.field, &input) {
        (Some(s), _) => parse_field_arg(s)?,
        (None, Some(file)) => file.field,
        (None, None) => FieldSpec::default(),
    };
    let text = with_field!(spec, |f| construct_text(&f, args, input.as_ref())?);
    write_output(args.out.as_deref(), &text)
}

fn construct_text<F: Field>(field: &F, args: &ConstructArgs, input: Option<&IdealFile>) -> Result<String, CliError> {
    let kind = args.kind;
    let seed = args.seed.unwrap_or(0);
    let mut meta: Vec<(String, String)> = vec![("construction".into(), kind.name())];
    let mut param = |k: &str, v: String| meta.push((k.to_string(), v));
    let from_input = |file: &IdealFile| -> Result<Construction<F>, CliError> {
        let ideal = file.ideal(field).map_err(|source| CliError::Parse { path: "--input".into(), source })?;
        let name = file.metadata("name").unwrap_or("input").to_string();
        Ok(Construction::new(name, ideal))
    };
    let c = match kind {
        Kind::Rnc => {
            let d = required(args.d, "d", kind)?;
            param("d", d.to_string());
            rational_normal_curve(field, d)?
        }
        Kind::Scroll => {
            if args.blocks.is_empty() {
                return Err(usage("`construct scroll` requires --blocks"));
            }
            param("blocks", args.blocks.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
            scroll(field, &ScrollSpec::new(args.blocks.clone())?)?
        }
        Kind::AlmostMinimalCurve | Kind::AlmostMinimalSurface | Kind::AlmostMinimalThreefold | Kind::AlmostMinimalFourfold => {
            let e = required(args.e, "e", kind)?;
            param("e", e.to_string());
            match kind {
                Kind::AlmostMinimalCurve => projected_monomial_curve(field, e)?,
                Kind::AlmostMinimalSurface => projected_scroll_surface(field, e)?,
                Kind::AlmostMinimalThreefold => projected_scroll_threefold(field, e)?,
                _ => projected_scroll_fourfold(field, e)?,
            }
        }
        Kind::Elliptic => {
            let e = required(args.e, "e", kind)?;
            param("e", e.to_string());
            elliptic_normal_curve(field, e)?
        }
        Kind::Points | Kind::PointsOnRnc => {
            let e = required(args.e, "e", kind)? as usize;
            let d = required(args.d, "d", kind)? as usize;
            param("e", e.to_string());
            param("d", d.to_string());
            if kind == Kind::Points {
                general_points(field, e, d, seed)?
            } else {
                points_on_rnc(field, e, d, seed)?
            }
        }
        Kind::CurveOnScroll => {
            let (a, b) = (required(args.a, "a", kind)?, required(args.b, "b", kind)?);
            let (alpha, k) = (required(args.alpha, "alpha", kind)?, required(args.k, "k", kind)?);
            for (key, v) in [("a", a as i64), ("b", b as i64), ("alpha", alpha as i64), ("k", k)] {
                param(key, v.to_string());
            }
            curve_on_scroll(field, a, b, alpha, k, seed)?
        }
        Kind::Quadrics => {
            let n = required(args.vars, "vars", kind)?;
            let count = required(args.count, "count", kind)?;
            param("vars", n.to_string());
            param("count", count.to_string());
            complete_intersection_quadrics(field, n, count, seed)?
        }
        Kind::Cone | Kind::Section | Kind::Artinian => {
            let base = from_input(input.expect("checked by caller"))?;
            let count = required(args.count, "count", kind)?;
            param("count", count.to_string());
            match kind {
                Kind::Cone => cone(&base, count)?,
                Kind::Section => geometric_linear_section(&base, count, seed)?,
                _ => {
                    let q = artinian_quotient(&base.ideal, count, seed)?;
                    param("regular", q.regular.to_string());
                    Construction::new(format!("artinian({},{count})", base.name), q.ideal)
                }
            }
        }
        Kind::InnerProjection => {
            let base = from_input(input.expect("checked by caller"))?;
            if args.point.is_empty() {
                return Err(usage("`construct inner-projection` requires --point"));
            }
            let point: Vec<F::Elem> = args.point.iter().map(|&x| field.from_i64(x)).collect();
            param("point", args.point.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
            let ideal = inner_projection(&base.ideal, &point)?;
            Construction::new(format!("projection({})", base.name), ideal)
        }
    };
    if kind.needs_seed() {
        meta.push(("seed".into(), seed.to_string()));
    }
    meta.insert(1, ("name".into(), c.name.clone()));
    Ok(render(&c.ideal, &meta))
}

fn cmd_betti(args: &BettiArgs) -> Result<(), CliError> {
    let file = read_ideal_file(&args.file)?;
    let spec = match &args.field {
        Some(s) => parse_field_arg(s)?,
        None => file.field,
    };
    let path = args.file.display().to_string();
    let text = with_field!(spec, |f| {
        let ideal = file.ideal(&f).map_err(|source| CliError::Parse { path: path.clone(), source })?;
        let gb = ideal.groebner();
        let table = betti_table(&gb, None, args.max_rows.map(|r| r.saturating_sub(1)))?;
        if args.json {
            let inv = derived_invariants(&table, &hilbert_data(&gb)?)?;
            let mut s = serde_json::to_string(&BettiJson::new(&table, &inv)).expect("serializable");
            s.push('\n');
            s
        } else {
            table.render()
        }
    });
    write_output(None, &text)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, CliError> {
    let e_max = args.e_max.unwrap_or(args.e_min);
    if args.e_min < 2 {
        return Err(usage(format!("--e-min must be at least 2, got {}", args.e_min)));
    }
    if e_max < args.e_min {
        return Err(usage(format!("--e-max {e_max} is below --e-min {}", args.e_min)));
    }
    let mut groups: Vec<CheckGroup> = args.check.iter().flat_map(|c| c.groups()).collect();
    groups.sort_unstable();
    groups.dedup();
    let names: Vec<&str> = groups.iter().map(|g| g.name()).collect();
    let command = format!("verify --check {} --e-min {} --e-max {e_max} --seed {}", names.join(","), args.e_min, args.seed);
    let config = SuiteConfig { e_min: args.e_min, e_max, seed: args.seed, groups };
    let report = Report::new(command, args.seed, run_suite(&config));
    let mut json = serde_json::to_string_pretty(&report).expect("serializable");
    json.push('\n');
    write_output(args.out.as_deref(), &json)?;
    let failures = report.failures();
    eprintln!("{} checks, {failures} failed", report.items.len());
    Ok(if failures == 0 { 0 } else { 1 })
}

/// Size of the worker pool from `SYZYGY_THREADS`, single-threaded when unset.
pub fn thread_count(var: Option<&str>) -> Result<usize, CliError> {
    match var {
        None => Ok(1),
        Some(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| usage(format!("SYZYGY_THREADS must be a positive integer, got `{s}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_parsing() {
        assert_eq!(thread_count(None).unwrap(), 1);
        assert_eq!(thread_count(Some("4")).unwrap(), 4);
        assert!(thread_count(Some("0")).is_err());
        assert!(thread_count(Some("many")).is_err());
    }

    #[test]
    fn kind_names_are_kebab_case() {
        assert_eq!(Kind::AlmostMinimalCurve.name(), "almost-minimal-curve");
        assert_eq!(Kind::InnerProjection.name(), "inner-projection");
    }
}
