//! The `riordan` command line. [`run`] does all the work and returns the
//! text and exit code, so tests can drive it without a subprocess.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use riordan_core::counting::{
    brute_force_is, count_is, count_is_banded, count_maximum_is, independence_number,
    list_maximal_is, BigCount, BANDED_MAX_WIDTH,
};
use riordan_core::graphs::{BitGraph, ExportFormat, GraphSpec};
use riordan_core::series::{evaluate, parse};
use riordan_core::verify::{
    bound_report, random_polynomial_specs, random_toeplitz_specs, reports_to_csv, sweep_bounds,
    verify_decomposition, verify_table1, BoundReport, DEFAULT_MAX_N,
};

pub const MAX_N_ENV: &str = "RIORDAN_MAX_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "riordan",
    version,
    about = "Riordan graphs: build, count, bound, verify"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Power series over GF(2).
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// Graph construction and export.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// Exact counts on a graph.
    Count {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t = What::Is)]
        what: What,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        guard: Guard,
    },
    /// Every applicable bound against the exact count.
    Bounds {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        guard: Guard,
    },
    /// Reproduction and consistency checks.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Debug, Subcommand)]
enum SeriesAction {
    /// Evaluates an expression to the given number of coefficients.
    Eval {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
enum GraphAction {
    Build {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyAction {
    /// Pascal, Motzkin and Catalan counts against the published table.
    Table1 {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Bound reports over a range of n. FAMILY is a spec with `{n}` in
    /// place of the order, or `random-toeplitz` / `random-riordan`.
    Sweep {
        #[arg(long)]
        family: String,
        /// Inclusive range `a..b`.
        #[arg(long)]
        range: String,
        /// Number of specs for the random families.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        guard: Guard,
    },
    /// Predicted odd/even blocks against the built graph.
    Decomposition {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, clap::Args)]
struct Guard {
    /// Largest n to accept; defaults to $RIORDAN_MAX_N or 40.
    #[arg(long)]
    max_n: Option<usize>,
    /// Skip the size guard.
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Is,
    Cliques,
    Alpha,
    MaxIs,
    Maximal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Auto,
    Brute,
    Branch,
    Banded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn checked(stdout: String, passed: bool) -> Self {
        Outcome {
            code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            stdout,
            stderr: String::new(),
        }
    }
}

/// Invalid input, reported as one line on stderr with exit code 2.
struct Invalid(String);

impl<E: std::fmt::Display> From<E> for Invalid {
    fn from(e: E) -> Self {
        Invalid(e.to_string())
    }
}

type CliResult = Result<Outcome, Invalid>;

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let env_max = std::env::var(MAX_N_ENV).ok();
    match execute(cli.command, env_max.as_deref()) {
        Ok(outcome) => outcome,
        Err(Invalid(message)) => Outcome {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.lines().next().unwrap_or_default()),
        },
    }
}

fn execute(command: Command, env_max: Option<&str>) -> CliResult {
    match command {
        Command::Series {
            action:
                SeriesAction::Eval {
                    expr,
                    order,
                    format,
                },
        } => series_eval(&expr, order, format),
        Command::Graph {
            action: GraphAction::Build { spec, format },
        } => {
            let graph = parse_spec(&spec)?.build()?;
            let format = match format {
                GraphFormat::Dot => ExportFormat::Dot,
                GraphFormat::Json => ExportFormat::Json,
            };
            let mut text = graph.export(format);
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Ok(Outcome::ok(text))
        }
        Command::Count {
            spec,
            what,
            engine,
            format,
            guard,
        } => {
            let spec = parse_spec(&spec)?;
            check_guard(spec.n(), &guard, env_max)?;
            count(&spec, what, engine, format)
        }
        Command::Bounds {
            spec,
            format,
            guard,
        } => {
            let spec = parse_spec(&spec)?;
            check_guard(spec.n(), &guard, env_max)?;
            let report = bound_report(&spec)?;
            let passed = report.all_hold();
            let text = match format {
                Format::Json => to_json(&report),
                Format::Csv => reports_to_csv(std::slice::from_ref(&report)),
                Format::Table => report_table(std::slice::from_ref(&report)),
            };
            Ok(Outcome::checked(text, passed))
        }
        Command::Verify { action } => verify(action, env_max),
    }
}

fn parse_spec(text: &str) -> Result<GraphSpec, Invalid> {
    Ok(text.parse::<GraphSpec>()?)
}

fn guard_limit(guard: &Guard, env_max: Option<&str>) -> Result<Option<usize>, Invalid> {
    if guard.force {
        return Ok(None);
    }
    if let Some(n) = guard.max_n {
        return Ok(Some(n));
    }
    match env_max {
        Some(v) => v.trim().parse().map(Some).map_err(|_| {
            Invalid(format!(
                "{MAX_N_ENV} must be a nonnegative integer, got `{v}`"
            ))
        }),
        None => Ok(Some(DEFAULT_MAX_N)),
    }
}

fn check_guard(n: usize, guard: &Guard, env_max: Option<&str>) -> Result<(), Invalid> {
    match guard_limit(guard, env_max)? {
        Some(max) if n > max => Err(Invalid(format!(
            "n={n} exceeds the size guard {max}; pass --force to run anyway"
        ))),
        _ => Ok(()),
    }
}

fn number(v: &BigCount) -> Value {
    Value::Number(v.to_string().parse().expect("decimal digits"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn reject_csv(format: Format) -> Result<(), Invalid> {
    if format == Format::Csv {
        return Err(Invalid(
            "csv output is only available for bound reports".into(),
        ));
    }
    Ok(())
}

fn series_eval(expr: &str, order: usize, format: Format) -> CliResult {
    reject_csv(format)?;
    let parsed = parse(expr)?;
    let series = evaluate(&parsed, order)?;
    Ok(Outcome::ok(match format {
        Format::Table => format!("{series}\n"),
        _ => to_json(&json!({
            "expr": parsed.to_string(),
            "order": order,
            "coefficients": series.bits(),
        })),
    }))
}

fn count(spec: &GraphSpec, what: What, engine: Engine, format: Format) -> CliResult {
    reject_csv(format)?;
    let graph = spec.build()?;
    let (engine_name, result) = match what {
        What::Is | What::Cliques => {
            let target = if what == What::Cliques {
                graph.complement()
            } else {
                graph.clone()
            };
            let engine = resolve_engine(spec, what, engine);
            let value = count_with(&target, engine)?;
            (engine_label(engine), number(&value))
        }
        What::Alpha | What::MaxIs => {
            if !matches!(engine, Engine::Auto | Engine::Branch) {
                return Err(Invalid(format!(
                    "--what {} supports only the branch engine",
                    what_label(what)
                )));
            }
            let value = if what == What::Alpha {
                json!(independence_number(&graph))
            } else {
                let m = count_maximum_is(&graph);
                json!({ "size": m.size, "count": number(&m.count), "witnesses": m.witnesses })
            };
            ("branch", value)
        }
        What::Maximal => {
            if engine != Engine::Auto {
                return Err(Invalid("--what maximal has no engine choice".into()));
            }
            let sets = list_maximal_is(&graph)?;
            (
                "bron-kerbosch",
                json!({ "count": sets.len(), "sets": sets }),
            )
        }
    };
    Ok(Outcome::ok(match format {
        Format::Table => match &result {
            Value::Object(_) => to_json(&result),
            other => format!("{other}\n"),
        },
        _ => to_json(&json!({
            "spec": spec.to_string(),
            "what": what_label(what),
            "engine": engine_name,
            "value": result,
        })),
    }))
}

fn what_label(what: What) -> &'static str {
    match what {
        What::Is => "is",
        What::Cliques => "cliques",
        What::Alpha => "alpha",
        What::MaxIs => "max-is",
        What::Maximal => "maximal",
    }
}

fn engine_label(engine: Engine) -> &'static str {
    match engine {
        Engine::Auto => "auto",
        Engine::Brute => "brute",
        Engine::Branch => "branch",
        Engine::Banded => "banded",
    }
}

/// Auto picks the banded sweep for Toeplitz specs with largest distance at
/// most the banded limit, and branch and reduce otherwise.
fn resolve_engine(spec: &GraphSpec, what: What, engine: Engine) -> Engine {
    if engine != Engine::Auto {
        return engine;
    }
    match spec {
        GraphSpec::Toeplitz { distances, .. }
            if what == What::Is && distances.iter().all(|&d| d <= BANDED_MAX_WIDTH) =>
        {
            Engine::Banded
        }
        _ => Engine::Branch,
    }
}

fn count_with(graph: &BitGraph, engine: Engine) -> Result<BigCount, Invalid> {
    Ok(match engine {
        Engine::Brute => brute_force_is(graph)?,
        Engine::Banded => count_is_banded(graph, graph.bandwidth().max(1))?,
        Engine::Branch | Engine::Auto => count_is(graph),
    })
}

fn report_table(reports: &[BoundReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}  n={}  i={}", r.spec, r.n, r.exact);
        for e in &r.entries {
            let _ = writeln!(
                out,
                "  {:<28} {:<6} value={:<12} target={:<12} {}{}",
                e.name,
                format!("{:?}", e.relation).to_lowercase(),
                e.value,
                e.target,
                if e.holds { "holds" } else { "VIOLATED" },
                if e.tight { " tight" } else { "" },
            );
        }
        for c in &r.checks {
            let _ = writeln!(
                out,
                "  {} {}",
                if c.holds { "ok  " } else { "FAIL" },
                c.name
            );
        }
        for note in &r.notes {
            let _ = writeln!(out, "  note: {note}");
        }
    }
    out
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, Invalid> {
    let bad = || Invalid(format!("range must look like `a..b`, got `{text}`"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn verify(action: VerifyAction, env_max: Option<&str>) -> CliResult {
    match action {
        VerifyAction::Table1 { max_n, format } => {
            reject_csv(format)?;
            let report = verify_table1(max_n)?;
            let text = match format {
                Format::Table => {
                    let mut out = String::new();
                    for c in &report.cells {
                        let _ = writeln!(
                            out,
                            "{:<8} n={:<3} expected={:<5} actual={:<5} {}",
                            c.family,
                            c.n,
                            c.expected,
                            c.actual,
                            if c.pass { "pass" } else { "FAIL" }
                        );
                    }
                    let _ = writeln!(out, "{} passed, {} failed", report.passed, report.failed);
                    out
                }
                _ => to_json(&report),
            };
            Ok(Outcome::checked(text, report.all_pass()))
        }
        VerifyAction::Sweep {
            family,
            range,
            count,
            seed,
            format,
            guard,
        } => {
            let range = parse_range(&range)?;
            let limit = guard_limit(&guard, env_max)?.unwrap_or(usize::MAX);
            let (reports, seed) = match family.as_str() {
                "random-toeplitz" | "random-riordan" => {
                    if *range.end() > limit {
                        return Err(Invalid(format!(
                            "n={} exceeds the size guard {limit}; pass --force to run anyway",
                            range.end()
                        )));
                    }
                    let specs = random_family(&family, &range, count, seed)?;
                    let reports = specs
                        .iter()
                        .map(bound_report)
                        .collect::<Result<Vec<_>, _>>()?;
                    (reports, Some(seed))
                }
                template => (sweep_bounds(template, range, limit)?, None),
            };
            let violations: Vec<String> = reports.iter().flat_map(|r| r.violations()).collect();
            let text = match format {
                Format::Json => to_json(&json!({
                    "family": family,
                    "seed": seed,
                    "reports": reports,
                    "violations": violations,
                })),
                Format::Csv => reports_to_csv(&reports),
                Format::Table => report_table(&reports),
            };
            Ok(Outcome::checked(text, violations.is_empty()))
        }
        VerifyAction::Decomposition { spec, format } => {
            reject_csv(format)?;
            let parsed = parse_spec(&spec)?;
            let riordan = parsed
                .riordan()
                .ok_or_else(|| Invalid(format!("`{spec}` is not a Riordan graph spec")))?;
            let check = verify_decomposition(&riordan)?;
            let text = match format {
                Format::Table => format!(
                    "{} n={}: {}{}\n",
                    check.spec,
                    check.n,
                    if check.passed {
                        "blocks match"
                    } else {
                        "MISMATCH"
                    },
                    check
                        .first_mismatch
                        .map(|m| format!(" at {} ({}, {})", m.block, m.row, m.col))
                        .unwrap_or_default()
                ),
                _ => to_json(&check),
            };
            Ok(Outcome::checked(text, check.passed))
        }
    }
}

/// Random specs with `n` drawn from the generator's range, capped at the
/// top of `range`, and kept only when `n` falls inside `range`.
fn random_family(
    family: &str,
    range: &RangeInclusive<usize>,
    count: usize,
    seed: u64,
) -> Result<Vec<GraphSpec>, Invalid> {
    let n_max = *range.end();
    let mut specs = match family {
        "random-toeplitz" if n_max >= 4 => random_toeplitz_specs(seed, count, n_max),
        "random-riordan" if n_max >= 2 => random_polynomial_specs(seed, count, n_max),
        _ => {
            return Err(Invalid(format!(
                "range {range:?} is too small for {family}"
            )))
        }
    };
    specs.retain(|s| range.contains(&s.n()));
    specs.sort_by_key(GraphSpec::n);
    Ok(specs)
}
