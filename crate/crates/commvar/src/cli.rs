//! Command-line frontend. Exit status contract: 0 when all populated
//! tracks agree, 1 on any disagreement or failed check, 2 on usage
//! errors, 3 on budget refusals.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::formulas::{decompose_cijm, dim_cijm, dim_cr_zsub, is_irreducible_cijm, n_value};
use crate::groebner::{krull_dimension, GroebnerConfig};
use crate::lie::{commuting_ideal, MixedSpec, VarietyKind, VarietySpec};
use crate::pointcount::{count_points, dimension_slope, CountConfig};
use crate::report::{Cache, Record};
use crate::ring::{CoefficientField, MonomialOrder};
use crate::support::{support_variety, WeightA2};
use crate::verify::{self, CheckOutcome, VerifyError};

pub const EXIT_AGREE: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "commvar",
    version,
    about = "Dimensions of commuting and mixed commuting varieties, three independent ways"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension report for a mixed family or the centralizer family
    Dim(DimArgs),
    /// Write the commuting ideal of a mixed specification
    Ideal(IdealArgs),
    /// Run cross-track verification suites
    Verify(VerifyArgs),
    /// Support varieties for Frobenius kernels of SL3
    Support(SupportArgs),
}

#[derive(Args)]
struct DimArgs {
    /// Mixed factor counts "i,j,m"
    #[arg(long, value_name = "I,J,M", conflicts_with = "zsub")]
    cijm: Option<String>,
    /// The centralizer-tuple family instead of a mixed family
    #[arg(long)]
    zsub: bool,
    /// Matrix size for --zsub
    #[arg(long, default_value_t = 3)]
    n: u32,
    /// Number of factors for --zsub
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Field characteristic (0 for the rationals)
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Also compute the Groebner-basis dimension track
    #[arg(long)]
    groebner: bool,
    /// Also compute point-count slopes over q in {2,3,5}
    #[arg(long)]
    pointcount: bool,
    #[arg(long, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct IdealArgs {
    /// Factor kinds joined by '+', e.g. "zsub+zsub" or "v1+v2"
    #[arg(long)]
    spec: String,
    #[arg(long, default_value_t = 3)]
    n: u32,
    /// Field characteristic (0 for the rationals)
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[arg(long, default_value = "grevlex")]
    order: String,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Rank loci of fully generic matrices
    #[arg(long)]
    detvar_grid: bool,
    /// Three-band staircases, full grid i+j+m <= 5
    #[arg(long)]
    staircase_grid: bool,
    /// General staircase shapes up to 16 variables
    #[arg(long)]
    staircase_general: bool,
    /// Centralizer-family dimensions in both characteristic branches
    #[arg(long)]
    zsub_branches: bool,
    /// Symbolic intersection identities at n = 3
    #[arg(long)]
    intersections: bool,
    /// Sliced recursion step for the mixed families
    #[arg(long)]
    sliced: bool,
    /// Closed-form seams, inequality, irreducibility grid
    #[arg(long)]
    formulas: bool,
    /// Exact point counts and dimension slopes
    #[arg(long)]
    pointcount: bool,
    /// Digit-pattern handoff for support varieties
    #[arg(long)]
    support: bool,
    /// Run every suite
    #[arg(long)]
    all: bool,
    /// Cache directory for expensive counts (or COMMVAR_CACHE)
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct SupportArgs {
    /// Highest weight "c1,c2"
    #[arg(long, value_name = "C1,C2", conflicts_with = "batch")]
    lambda: Option<String>,
    #[arg(long, default_value_t = 7)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Batch file: one "c1 c2 p r" row per line (commas also accepted)
    #[arg(long)]
    batch: Option<PathBuf>,
    #[arg(long, default_value = "text")]
    format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum OutputFormat {
    Text,
    Records,
}

fn parse_triple(s: &str) -> Result<(u32, u32, u32), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated integers, got `{s}`"));
    }
    let mut vals = [0u32; 3];
    for (slot, part) in vals.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| format!("bad integer `{part}`"))?;
    }
    Ok((vals[0], vals[1], vals[2]))
}

fn field_for(characteristic: u64) -> Result<CoefficientField, String> {
    if characteristic == 0 {
        Ok(CoefficientField::rationals())
    } else {
        CoefficientField::prime(characteristic)
            .map_err(|_| format!("{characteristic} is not prime"))
    }
}

fn emit(record: &Record) -> i32 {
    match record.to_line() {
        Ok(line) => {
            println!("{line}");
            EXIT_AGREE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_dim(args: &DimArgs) -> i32 {
    let gb = GroebnerConfig::default();
    if args.zsub {
        let divides = args.characteristic != 0 && args.n as u64 % args.characteristic == 0;
        let formula = match dim_cr_zsub(args.n, args.r, divides) {
            Ok(d) => d,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let branch = if divides { "divides" } else { "coprime" };
        let mut groebner_dim = None;
        if args.groebner {
            let field = match field_for(if args.characteristic == 0 {
                32003
            } else {
                args.characteristic
            }) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            };
            let computed = MixedSpec::uniform(VarietyKind::ZSub, args.n as usize, args.r as usize)
                .map_err(VerifyError::from)
                .and_then(|spec| {
                    let ideal = commuting_ideal(&spec, field, MonomialOrder::Grevlex)?;
                    Ok(krull_dimension(&ideal, &gb)?)
                });
            match computed {
                Ok(d) => groebner_dim = Some(d),
                Err(e) if e.is_budget() => {
                    eprintln!("error: {e}");
                    return EXIT_BUDGET;
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        let agree = groebner_dim.map(|d| d == formula).unwrap_or(true);
        match args.format {
            OutputFormat::Text => {
                println!("zsub family n = {}, r = {}: dim {formula} ({branch} branch)", args.n, args.r);
                if let Some(d) = groebner_dim {
                    println!("groebner dimension: {d} ({})", if agree { "agrees" } else { "DISAGREES" });
                }
            }
            OutputFormat::Records => {
                let mut rec = Record::new()
                    .push("spec", format!("zsub^{}:n{}", args.r, args.n))
                    .push("track", "formula")
                    .push("dim", formula)
                    .push("branch", branch);
                if let Some(d) = groebner_dim {
                    rec = rec.push("groebner_dim", d);
                }
                let code = emit(&rec);
                if code != EXIT_AGREE {
                    return code;
                }
            }
        }
        return if agree { EXIT_AGREE } else { EXIT_DISAGREE };
    }

    let Some(cijm) = &args.cijm else {
        eprintln!("error: pass --cijm I,J,M or --zsub");
        return EXIT_USAGE;
    };
    let (i, j, m) = match parse_triple(cijm) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if i + j + m == 0 {
        eprintln!("error: at least one factor is required");
        return EXIT_USAGE;
    }
    let formula = dim_cijm(i, j, m);
    let irreducible = is_irreducible_cijm(i, j, m);
    let mut groebner_dim = None;
    let mut groebner_note = None;
    if args.groebner {
        if i >= 1 {
            match verify::sliced_dimension(i, j, m, &gb) {
                Ok(slice) => {
                    groebner_dim = Some((4 + slice).max(dim_cijm(i - 1, j, m)));
                }
                Err(e) if e.is_budget() => {
                    eprintln!("error: {e}");
                    return EXIT_BUDGET;
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        } else if j + m == 1 {
            let kind = if j == 1 {
                VarietyKind::NilpotentCone
            } else {
                VarietyKind::FullSl
            };
            let computed = MixedSpec::uniform(kind, 3, 1)
                .map_err(VerifyError::from)
                .and_then(|spec| {
                    let field = CoefficientField::prime(32003).unwrap();
                    let ideal = commuting_ideal(&spec, field, MonomialOrder::Grevlex)?;
                    Ok(krull_dimension(&ideal, &gb)?)
                });
            match computed {
                Ok(d) => groebner_dim = Some(d),
                Err(e) if e.is_budget() => {
                    eprintln!("error: {e}");
                    return EXIT_BUDGET;
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        } else {
            groebner_note = Some("skipped: multi-factor ambient tuples exceed the symbolic budget");
        }
    }
    let mut slopes = Vec::new();
    if args.pointcount {
        let mut factors = vec![VarietySpec::new(VarietyKind::SubregClosure, 3); i as usize];
        factors.extend(vec![VarietySpec::new(VarietyKind::NilpotentCone, 3); j as usize]);
        factors.extend(vec![VarietySpec::new(VarietyKind::FullSl, 3); m as usize]);
        let counts: Result<Vec<(u64, u128)>, _> = MixedSpec::new(factors)
            .map_err(VerifyError::from)
            .and_then(|spec| {
                [2u64, 3, 5]
                    .iter()
                    .map(|&q| {
                        Ok((q, count_points(&spec, q, &CountConfig::default())?.count))
                    })
                    .collect()
            });
        match counts {
            Ok(c) => slopes.push(dimension_slope(&c)),
            Err(e) if e.is_budget() => {
                eprintln!("error: {e}");
                return EXIT_BUDGET;
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    let gb_agree = groebner_dim.map(|d| d == formula).unwrap_or(true);
    let slope_agree = slopes
        .iter()
        .all(|s| (s - formula as f64).abs() <= 0.75);
    match args.format {
        OutputFormat::Text => {
            println!("mixed family ({i},{j},{m}): dim {formula}, irreducible {irreducible}");
            if i >= 1 {
                if let Ok(pieces) = decompose_cijm(i, j, m) {
                    for p in pieces {
                        println!("  component {} of dim {}", p.label, p.dim);
                    }
                }
            }
            if let Some(d) = groebner_dim {
                println!("groebner dimension: {d} ({})", if gb_agree { "agrees" } else { "DISAGREES" });
            }
            if let Some(note) = groebner_note {
                println!("groebner track {note}");
            }
            for s in &slopes {
                println!("point-count slope: {s:.4} ({})", if slope_agree { "agrees" } else { "DISAGREES" });
            }
        }
        OutputFormat::Records => {
            let mut rec = Record::new()
                .push("spec", format!("cijm{i},{j},{m}"))
                .push("track", "formula")
                .push("dim", formula)
                .push("irreducible", irreducible)
                .push("rank_bound", n_value(i, j, m));
            if let Some(d) = groebner_dim {
                rec = rec.push("groebner_dim", d);
            }
            for s in &slopes {
                rec = rec.push("slope", format!("{s:.4}"));
            }
            let code = emit(&rec);
            if code != EXIT_AGREE {
                return code;
            }
        }
    }
    if gb_agree && slope_agree {
        EXIT_AGREE
    } else {
        EXIT_DISAGREE
    }
}

fn parse_mixed_spec(spec: &str, n: usize) -> Result<MixedSpec, String> {
    let mut factors = Vec::new();
    for part in spec.split('+') {
        let kind: VarietyKind = part.trim().parse()?;
        factors.push(VarietySpec::new(kind, n));
    }
    MixedSpec::new(factors).map_err(|e| e.to_string())
}

fn cmd_ideal(args: &IdealArgs) -> i32 {
    let spec = match parse_mixed_spec(&args.spec, args.n as usize) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let field = match field_for(args.characteristic) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let order = match args.order.parse::<MonomialOrder>() {
        Ok(o) => o,
        Err(_) => {
            eprintln!("error: unknown order `{}` (use grevlex or lex)", args.order);
            return EXIT_USAGE;
        }
    };
    let ideal = match commuting_ideal(&spec, field, order) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut text = String::new();
    text.push_str(&ideal.ring().var_names().join(" "));
    text.push('\n');
    for g in ideal.generators() {
        text.push_str(&g.to_string());
        text.push('\n');
    }
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
        None => {
            print!("{text}");
            let _ = std::io::stdout().flush();
        }
    }
    EXIT_AGREE
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let gb = GroebnerConfig::default();
    let counting = CountConfig::default();
    let cache_dir = args
        .cache
        .clone()
        .or_else(|| std::env::var_os("COMMVAR_CACHE").map(PathBuf::from));
    let cache = cache_dir.map(Cache::new);

    let any_flag = args.detvar_grid
        || args.staircase_grid
        || args.staircase_general
        || args.zsub_branches
        || args.intersections
        || args.sliced
        || args.formulas
        || args.pointcount
        || args.support;
    let default_run = !any_flag && !args.all;
    let want = |flag: bool, in_default: bool| args.all || flag || (default_run && in_default);

    let mut outcomes: Vec<CheckOutcome> = Vec::new();
    let mut run = |result: Result<CheckOutcome, VerifyError>| -> Option<i32> {
        match result {
            Ok(outcome) => {
                outcomes.push(outcome);
                None
            }
            Err(e) if e.is_budget() => {
                eprintln!("error: {e}");
                Some(EXIT_BUDGET)
            }
            Err(e) => {
                eprintln!("error: {e}");
                Some(EXIT_USAGE)
            }
        }
    };

    if want(args.formulas, true) {
        if let Some(code) = run(verify::check_formulas()) {
            return code;
        }
    }
    if want(args.intersections, true) {
        if let Some(code) = run(verify::check_intersections()) {
            return code;
        }
    }
    if want(args.support, true) {
        if let Some(code) = run(verify::check_support()) {
            return code;
        }
    }
    if want(args.staircase_grid, true) {
        if let Some(code) = run(verify::check_staircase_grid(&gb)) {
            return code;
        }
    }
    if want(args.detvar_grid, false) {
        if let Some(code) = run(verify::check_detvar_grid(&gb)) {
            return code;
        }
    }
    if want(args.staircase_general, false) {
        if let Some(code) = run(verify::check_staircase_general(&gb)) {
            return code;
        }
    }
    if want(args.zsub_branches, false) {
        if let Some(code) = run(verify::check_zsub_branches(&gb)) {
            return code;
        }
    }
    if want(args.sliced, false) {
        if let Some(code) = run(verify::check_sliced(&gb)) {
            return code;
        }
    }
    if want(args.pointcount, false) {
        if let Some(code) = run(verify::check_pointcount(&counting, cache.as_ref())) {
            return code;
        }
    }

    let mut all_pass = true;
    for outcome in &outcomes {
        for rec in &outcome.records {
            let code = emit(rec);
            if code != EXIT_AGREE {
                return code;
            }
        }
    }
    for outcome in &outcomes {
        all_pass &= outcome.pass;
        let code = emit(
            &Record::new()
                .push("summary", outcome.name)
                .push("status", if outcome.pass { "pass" } else { "fail" }),
        );
        if code != EXIT_AGREE {
            return code;
        }
    }
    if all_pass {
        EXIT_AGREE
    } else {
        EXIT_DISAGREE
    }
}

fn support_row(c1: u64, c2: u64, p: u64, r: usize, format: OutputFormat) -> i32 {
    let report = match support_variety(WeightA2::new(c1, c2), p, r) {
        Ok(rep) => rep,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match format {
        OutputFormat::Text => {
            let classes: Vec<String> = report
                .digits
                .iter()
                .map(|(d, regular)| {
                    format!("{d}{}", if *regular { " regular" } else { " singular" })
                })
                .collect();
            println!(
                "lambda = ({c1},{c2}), p = {p}, r = {r}: dim {}, {} [{}]{}",
                report.dim,
                if report.irreducible { "irreducible" } else { "reducible" },
                classes.join("; "),
                if report.truncated { " (higher digits ignored)" } else { "" }
            );
        }
        OutputFormat::Records => {
            let digits: Vec<String> = report
                .digits
                .iter()
                .map(|(d, regular)| {
                    format!("{}.{}:{}", d.c1, d.c2, if *regular { "r" } else { "s" })
                })
                .collect();
            let rec = Record::new()
                .push("spec", format!("lambda{c1},{c2}"))
                .push("track", "support")
                .push("p", p)
                .push("r", r)
                .push("a", report.a)
                .push("b", report.b)
                .push("dim", report.dim)
                .push("irreducible", report.irreducible)
                .push("digits", digits.join(";"));
            let code = emit(&rec);
            if code != EXIT_AGREE {
                return code;
            }
        }
    }
    EXIT_AGREE
}

fn cmd_support(args: &SupportArgs) -> i32 {
    if let Some(path) = &args.batch {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .collect();
            if fields.len() != 4 {
                eprintln!("error: batch rows are `c1 c2 p r`, got `{line}`");
                return EXIT_USAGE;
            }
            let parsed: Result<Vec<u64>, _> = fields.iter().map(|f| f.parse::<u64>()).collect();
            let Ok(vals) = parsed else {
                eprintln!("error: bad integer in `{line}`");
                return EXIT_USAGE;
            };
            let code = support_row(vals[0], vals[1], vals[2], vals[3] as usize, args.format);
            if code != EXIT_AGREE {
                return code;
            }
        }
        return EXIT_AGREE;
    }
    let Some(lambda) = &args.lambda else {
        eprintln!("error: pass --lambda C1,C2 or --batch FILE");
        return EXIT_USAGE;
    };
    let parts: Vec<&str> = lambda.split(',').collect();
    let parsed: Option<(u64, u64)> = match parts.as_slice() {
        [a, b] => a.trim().parse().ok().zip(b.trim().parse().ok()),
        _ => None,
    };
    let Some((c1, c2)) = parsed else {
        eprintln!("error: --lambda expects two comma-separated integers");
        return EXIT_USAGE;
    };
    support_row(c1, c2, args.p, args.r, args.format)
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_AGREE };
        }
    };
    match &cli.command {
        Command::Dim(args) => cmd_dim(args),
        Command::Ideal(args) => cmd_ideal(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Support(args) => cmd_support(args),
    }
}
