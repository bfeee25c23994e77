//! Command implementations behind the `umbra` binary. Each command returns
//! an [`Outcome`] instead of printing, so it can be driven in-process.

pub mod config;
pub mod records;
pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use umbra_core::algebra::{parse_rational, rational_latex};
use umbra_core::barnes::{
    bb_number_multinomial, bb_number_series, bb_number_umbral, bb_polynomial, norlund_polynomial,
    BarnesContext,
};
use umbra_core::identities::{
    run_cases, suite_cases, Case, PalindromicWeights, Ranges, Verifier, IDENTITY_IDS,
};
use umbra_core::umbral::{bernoulli_number, StandardMoments};
use umbra_core::{MultiPoly, Rational};

use config::Config;
use records::{rationals, NumberRecord, PolynomialRecord, ReportRecord, TableRecord};
use render::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "umbra",
    version,
    about = "Exact Bernoulli-Barnes computations and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bernoulli-Barnes number B_k(a).
    Number(NumberArgs),
    /// Bernoulli-Barnes polynomial B_j(x; a) or Nörlund polynomial.
    Polynomial(PolynomialArgs),
    /// Rectangular table of exact values.
    Table(TableArgs),
    /// Check one identity, or `all`, over parameter ranges.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Umbral,
    Multinomial,
    Series,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Umbral => "umbral",
            Method::Multinomial => "multinomial",
            Method::Series => "series",
        }
    }
}

/// Parameters as `--a 1,2/3` (numeric) or `--n 3` / `--a n=3` (symbolic).
#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, conflicts_with = "a")]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct NumberArgs {
    #[arg(long)]
    pub k: u32,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "umbral")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PolynomialArgs {
    #[arg(long)]
    pub j: u32,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Nörlund order; replaces the parameters with (1, ..., 1).
    #[arg(long, conflicts_with_all = ["a", "n"])]
    pub norlund: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Bernoulli,
    Norlund,
    Bb,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    /// Highest index for bernoulli and bb tables.
    #[arg(long)]
    pub k: Option<u32>,
    /// Highest degree for the norlund table.
    #[arg(long)]
    pub j: Option<u32>,
    /// Highest order for the norlund table; parameter count for bb.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// An identity id or `all`.
    pub identity: String,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub p: Option<u32>,
    /// Highest sequence index for self_dual.
    #[arg(long)]
    pub len: Option<u32>,
    /// Palindromic weights alpha_0,...,alpha_n.
    #[arg(long, allow_hyphen_values = true)]
    pub weights: Option<String>,
    /// Range overrides such as `m=0..6,n=1..4`.
    #[arg(long)]
    pub ranges: Option<String>,
    /// Start from the built-in ranges, ignoring any config file ranges.
    #[arg(long)]
    pub default_ranges: bool,
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(msg: impl Into<String>) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
            code: EXIT_USAGE,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Number(args) => number(&args),
        Command::Polynomial(args) => polynomial(&args),
        Command::Table(args) => table(&args),
        Command::Verify(args) => return verify(&args),
    };
    result.unwrap_or_else(Outcome::usage)
}

enum ParamSpec {
    Symbolic(usize),
    Numeric(Vec<Rational>),
}

fn param_spec(a: Option<&str>, n: Option<usize>) -> Result<ParamSpec, String> {
    match (a, n) {
        (_, Some(n)) => Ok(ParamSpec::Symbolic(n)),
        (Some(s), None) => match s.trim().strip_prefix("n=") {
            Some(count) => count
                .trim()
                .parse()
                .map(ParamSpec::Symbolic)
                .map_err(|_| format!("bad parameter count '{count}'")),
            None => parse_list(s).map(ParamSpec::Numeric),
        },
        (None, None) => Err("give parameters with --a or --n".into()),
    }
}

fn parse_list(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).map_err(|e| e.to_string()))
        .collect()
}

fn context(spec: &ParamSpec) -> Result<BarnesContext, String> {
    match spec {
        ParamSpec::Symbolic(n) => BarnesContext::symbolic(*n),
        ParamSpec::Numeric(v) => BarnesContext::numeric(v.clone()),
    }
    .map_err(|e| e.to_string())
}

fn single_value(
    header: &[&str],
    row: Vec<String>,
    latex: String,
    format: Format,
    json: String,
) -> String {
    match format {
        Format::Json => json + "\n",
        Format::Csv => render::csv_rows(header, &[row]),
        Format::Latex => format!("${latex}$\n"),
    }
}

fn number(args: &NumberArgs) -> Result<Outcome, String> {
    let spec = param_spec(args.params.a.as_deref(), args.params.n)?;
    let ctx = context(&spec)?;
    let value = match args.method {
        Method::Umbral => bb_number_umbral(args.k, &ctx),
        Method::Multinomial => bb_number_multinomial(args.k, &ctx),
        Method::Series => bb_number_series(args.k, &ctx),
    };
    let (a, n) = match &spec {
        ParamSpec::Symbolic(n) => (None, Some(*n)),
        ParamSpec::Numeric(v) => (Some(rationals(v)), None),
    };
    let record = NumberRecord {
        kind: "number".into(),
        method: args.method.name().into(),
        k: args.k,
        a,
        n,
        cleared: !ctx.is_numeric(),
        value: value.to_string(),
    };
    let out = single_value(
        &["k", "method", "cleared", "value"],
        vec![
            args.k.to_string(),
            record.method.clone(),
            record.cleared.to_string(),
            record.value.clone(),
        ],
        value.to_latex(),
        args.format,
        render::json_line(&record),
    );
    Ok(Outcome::ok(out))
}

fn polynomial(args: &PolynomialArgs) -> Result<Outcome, String> {
    let (value, record) = if let Some(order) = args.norlund {
        let value = norlund_polynomial(args.j, order);
        let record = PolynomialRecord {
            kind: "polynomial".into(),
            j: args.j,
            a: None,
            n: None,
            norlund: Some(order),
            cleared: false,
            value: value.to_string(),
        };
        (value, record)
    } else {
        let spec = param_spec(args.params.a.as_deref(), args.params.n)?;
        let ctx = context(&spec)?;
        let value = bb_polynomial(args.j, &ctx);
        let (a, n) = match &spec {
            ParamSpec::Symbolic(n) => (None, Some(*n)),
            ParamSpec::Numeric(v) => (Some(rationals(v)), None),
        };
        let record = PolynomialRecord {
            kind: "polynomial".into(),
            j: args.j,
            a,
            n,
            norlund: None,
            cleared: !ctx.is_numeric(),
            value: value.to_string(),
        };
        (value, record)
    };
    let out = single_value(
        &["j", "cleared", "value"],
        vec![
            args.j.to_string(),
            record.cleared.to_string(),
            record.value.clone(),
        ],
        value.to_latex(),
        args.format,
        render::json_line(&record),
    );
    Ok(Outcome::ok(out))
}

fn table(args: &TableArgs) -> Result<Outcome, String> {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut latex_rows: Vec<Vec<String>> = Vec::new();
    let (name, columns) = match args.kind {
        TableKind::Bernoulli => {
            for k in 0..=args.k.map_or(-1, i64::from) {
                let b = bernoulli_number(k as usize);
                rows.push(vec![k.to_string(), b.to_string()]);
                latex_rows.push(vec![k.to_string(), rational_latex(&b)]);
            }
            ("bernoulli", vec!["k".to_string(), "B_k".to_string()])
        }
        TableKind::Norlund => {
            let mut columns = vec!["j".to_string()];
            if let (Some(top_j), Some(top_n)) = (args.j, args.n) {
                columns.extend((0..=top_n).map(|n| format!("n={n}")));
                for j in 0..=top_j {
                    let cells: Vec<MultiPoly> =
                        (0..=top_n).map(|n| norlund_polynomial(j, n)).collect();
                    let mut row = vec![j.to_string()];
                    row.extend(cells.iter().map(ToString::to_string));
                    rows.push(row);
                    let mut lrow = vec![j.to_string()];
                    lrow.extend(cells.iter().map(MultiPoly::to_latex));
                    latex_rows.push(lrow);
                }
            }
            ("norlund", columns)
        }
        TableKind::Bb => {
            let spec = param_spec(args.a.as_deref(), args.n)?;
            let ctx = context(&spec)?;
            let label = if ctx.is_numeric() {
                "B_k(a)"
            } else {
                "a1...an*B_k(a)"
            };
            for k in 0..=args.k.map_or(-1, i64::from) {
                let v = bb_number_umbral(k as u32, &ctx);
                rows.push(vec![k.to_string(), v.to_string()]);
                latex_rows.push(vec![k.to_string(), v.to_latex()]);
            }
            ("bb", vec!["k".to_string(), label.to_string()])
        }
    };
    let record = TableRecord {
        kind: "table".into(),
        table: name.into(),
        columns,
        rows,
    };
    Ok(Outcome::ok(render::table(
        &record,
        &latex_rows,
        args.format,
    )))
}

/// The single case named by `id` when every parameter it needs is given.
fn explicit_case(
    id: &str,
    args: &VerifyArgs,
    weights: Option<&PalindromicWeights>,
) -> Option<Case> {
    let n = args.n.map(|v| v as usize);
    let case = match id {
        "difference_formula" => Case::Difference { m: args.m?, n: n? },
        "reflection" => Case::Reflection { m: args.m?, n: n? },
        "general_expansion" => Case::GeneralExpansion { m: args.m?, n: n? },
        "shift_negation" => Case::ShiftNegation { m: args.m?, n: n? },
        "uniform_ftc" => Case::UniformFtc { m: args.m? },
        "multi_uniform_difference" => Case::MultiUniform { m: args.m?, n: n? },
        "self_dual" => Case::SelfDual {
            len: args.len?,
            n: n?,
        },
        "symmetry_1" => Case::Symmetry1 {
            l: args.l?,
            m: args.m?,
            n: n?,
        },
        "symmetry_2" => Case::Symmetry2 {
            l: args.l?,
            m: args.m?,
            n: n?,
        },
        "odd_recurrence" => Case::OddRecurrence { m: args.m?, n: n? },
        "even_recurrence" => Case::EvenRecurrence { m: args.m?, n: n? },
        "main_identity" => Case::Main { m: args.m?, n: n? },
        "palindromic_general" => Case::Palindromic {
            weights: weights?.clone(),
            m: args.m?,
        },
        "norlund_recurrence" => Case::Norlund {
            r: args.r?,
            p: args.p?,
        },
        "norlund_recurrence_shifted" => Case::NorlundShifted {
            r: args.r?,
            p: args.p?,
        },
        _ => return None,
    };
    Some(case)
}

fn select_cases(args: &VerifyArgs, cfg: &Config) -> Result<Vec<Case>, String> {
    let id = args.identity.as_str();
    if id != "all" && !IDENTITY_IDS.contains(&id) {
        return Err(format!(
            "unknown identity '{id}'; expected one of: all, {}",
            IDENTITY_IDS.join(", ")
        ));
    }
    let weights = args
        .weights
        .as_deref()
        .map(|w| parse_list(w).and_then(|v| PalindromicWeights::new(v).map_err(|e| e.to_string())))
        .transpose()?;
    if let Some(case) = explicit_case(id, args, weights.as_ref()) {
        case.validate().map_err(|e| e.to_string())?;
        return Ok(vec![case]);
    }

    let mut ranges = Ranges::default();
    if !args.default_ranges {
        cfg.apply_ranges(&mut ranges);
        if let Some(spec) = &args.ranges {
            ranges.apply(spec).map_err(|e| e.to_string())?;
        }
    }
    for (key, value) in [
        ("m", args.m),
        ("l", args.l),
        ("n", args.n),
        ("len", args.len),
        ("p", args.p),
    ] {
        if let Some(v) = value {
            *ranges.get_mut(key).expect("known key") = v..=v;
        }
    }
    let mut cases: Vec<Case> = suite_cases(&ranges)
        .into_iter()
        .filter(|c| id == "all" || c.id() == id)
        .filter(|c| match (c, args.r) {
            (Case::Norlund { r, .. } | Case::NorlundShifted { r, .. }, Some(want)) => *r == want,
            _ => true,
        })
        .collect();
    if let Some(w) = weights {
        let odd_ms: Vec<u32> = cases
            .iter()
            .filter_map(|c| match c {
                Case::Palindromic { m, .. } => Some(*m),
                _ => None,
            })
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        cases.retain(|c| !matches!(c, Case::Palindromic { .. }));
        cases.extend(odd_ms.into_iter().map(|m| Case::Palindromic {
            weights: w.clone(),
            m,
        }));
    }
    Ok(cases)
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let cfg = match &args.config {
        Some(path) => match Config::load(path) {
            Ok(c) => c,
            Err(e) => return Outcome::usage(e),
        },
        None => Config::default(),
    };
    let cases = match select_cases(args, &cfg) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let seed = args.seed.or(cfg.seed).unwrap_or(0);
    let workers = args.workers.or(cfg.workers).unwrap_or(0);
    let verifier = Verifier::new(&StandardMoments).seed(seed);
    let reports = match run_cases(&cases, &verifier, workers) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let records: Vec<ReportRecord> = reports.iter().map(ReportRecord::from).collect();
    let failed: Vec<&ReportRecord> = records.iter().filter(|r| !r.all_passed()).collect();
    let mut stderr = format!(
        "{} reports: {} passed, {} failed\n",
        records.len(),
        records.len() - failed.len(),
        failed.len()
    );
    for r in &failed {
        stderr.push_str(&format!("FAIL {} {}\n", r.identity, r.params_text()));
    }
    Outcome {
        stdout: render::reports(&records, args.format),
        stderr,
        code: if failed.is_empty() {
            EXIT_OK
        } else {
            EXIT_FAILED
        },
    }
}
