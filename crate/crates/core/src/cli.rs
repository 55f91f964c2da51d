//! Command-line front end.
//!
//! Every command builds a [`Report`], an ordered list of named values. The
//! text and JSON renderings are both produced from it, and
//! [`Report::decode`] rebuilds a report from its JSON form.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value as Json};

use crate::error::Error;
use crate::expr::parse_object;
use crate::k0::{lambda_sigma, lambda_t, zeta, zeta_rational, LaurentPolynomial, RepSeries, TruncatedSeries};
use crate::motive::GradedTateObject;
use crate::oracle::Budget;
use crate::partition::{partitions_up_to, Partition};
use crate::schur::{classify, schur_apply, schur_vanishes};
use crate::verify::{run_all, Tally};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Largest `--max` accepted by `vanish-table`.
pub const MAX_TABLE_SIZE: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "mixed-tate", version, about = "Schur functors, lambda-rings and zeta functions of split mixed Tate objects")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Read expressions from a file, one per line.
    #[arg(long, global = true, value_name = "PATH")]
    pub file: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite-dimensionality data of an object.
    Classify { expr: Option<String> },
    /// Evaluate a Schur functor on an object.
    Schur {
        /// Partition such as `[2,1]` or `2,1`.
        lambda: String,
        expr: Option<String>,
    },
    /// Vanishing verdicts for every partition of size at most `--max`.
    VanishTable {
        expr: Option<String>,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// The class in K0 as a Laurent polynomial in tau.
    K0 { expr: Option<String> },
    /// The lambda-series of the class.
    Lambda {
        expr: Option<String>,
        #[arg(long, env = "MIXED_TATE_ORDER", default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
    },
    /// The zeta function of the class.
    Zeta {
        expr: Option<String>,
        #[arg(long, env = "MIXED_TATE_ORDER", default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        /// Print the rational form instead of the truncated series.
        #[arg(long)]
        rational: bool,
        /// Cancel common factors of the rational form.
        #[arg(long, requires = "rational")]
        reduced: bool,
    },
    /// The representation-ring-valued lambda-series.
    LambdaSigma {
        expr: Option<String>,
        #[arg(long, env = "MIXED_TATE_ORDER", default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
    },
    /// Cross-check the evaluators against the oracle and the lambda-ring laws.
    Verify {
        /// Largest total dimension in the agreement grid.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Largest partition size in the agreement grid.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Random cases per property suite.
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A single reported value.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Count(u64),
    Flag(bool),
    Index(Option<u64>),
    Class(LaurentPolynomial),
    Object(GradedTateObject),
    Series(TruncatedSeries),
    Polynomial(Vec<LaurentPolynomial>),
    Table(Vec<(Partition, bool)>),
    Sigma(RepSeries),
    Tally(Tally),
}

impl Value {
    fn to_json(&self) -> Json {
        match self {
            Value::Count(n) => json!(n),
            Value::Flag(b) => json!(b),
            Value::Index(i) => json!(i),
            Value::Class(c) => ser(c),
            Value::Object(x) => ser(x),
            Value::Series(s) => ser(s),
            Value::Polynomial(p) => Json::Array(p.iter().map(ser).collect()),
            Value::Table(rows) => Json::Array(
                rows.iter()
                    .map(|(l, v)| json!({ "partition": l.to_string(), "vanishes": v }))
                    .collect(),
            ),
            Value::Sigma(s) => ser(s),
            Value::Tally(t) => json!({ "passed": t.passed, "total": t.total }),
        }
    }

    /// Reads `v` as a value of the same kind as `self`.
    fn decode_like(&self, v: &Json) -> Option<Value> {
        fn de<T: serde::de::DeserializeOwned>(v: &Json) -> Option<T> {
            serde_json::from_value(v.clone()).ok()
        }
        Some(match self {
            Value::Count(_) => Value::Count(v.as_u64()?),
            Value::Flag(_) => Value::Flag(v.as_bool()?),
            Value::Index(_) => Value::Index(if v.is_null() { None } else { Some(v.as_u64()?) }),
            Value::Class(_) => Value::Class(de(v)?),
            Value::Object(_) => Value::Object(de(v)?),
            Value::Series(_) => Value::Series(de(v)?),
            Value::Polynomial(_) => Value::Polynomial(de(v)?),
            Value::Table(_) => Value::Table(
                v.as_array()?
                    .iter()
                    .map(|row| Some((row["partition"].as_str()?.parse().ok()?, row["vanishes"].as_bool()?)))
                    .collect::<Option<_>>()?,
            ),
            Value::Sigma(_) => Value::Sigma(de(v)?),
            Value::Tally(_) => Value::Tally(Tally { passed: v["passed"].as_u64()?, total: v["total"].as_u64()? }),
        })
    }

    fn text_lines(&self) -> Vec<String> {
        match self {
            Value::Count(n) => vec![n.to_string()],
            Value::Flag(b) => vec![b.to_string()],
            Value::Index(i) => vec![i.map_or_else(|| "none".to_string(), |n| n.to_string())],
            Value::Class(c) => vec![c.to_string()],
            Value::Object(x) => vec![x.to_string()],
            Value::Series(s) => vec![s.to_string()],
            Value::Polynomial(p) => vec![crate::k0::render_t_polynomial(p)],
            Value::Table(rows) => rows
                .iter()
                .map(|(l, v)| format!("{l}: {}", if *v { "vanishes" } else { "nonzero" }))
                .collect(),
            Value::Sigma(s) => s
                .coefficients()
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    let body: Vec<String> = c
                        .iter()
                        .map(|(mu, p)| match p.num_terms() {
                            1 if p.is_one() => format!("V{mu}"),
                            1 => format!("{p}*V{mu}"),
                            _ => format!("({p})*V{mu}"),
                        })
                        .collect();
                    let body = if body.is_empty() { "0".to_string() } else { body.join(" + ") };
                    format!("t^{n}: {body}")
                })
                .collect(),
            Value::Tally(t) => vec![format!("{}/{}", t.passed, t.total)],
        }
    }
}

fn ser<T: serde::Serialize>(v: &T) -> Json {
    serde_json::to_value(v).expect("serializable")
}

/// The structured result of one command.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub fields: Vec<(String, Value)>,
}

impl Report {
    fn push(&mut self, key: &str, value: Value) {
        self.fields.push((key.to_string(), value));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Json {
        Json::Object(self.fields.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<Map<_, _>>())
    }

    /// Rebuilds a report with the same keys and kinds as `self` from JSON.
    pub fn decode(&self, doc: &Json) -> Option<Report> {
        let obj = doc.as_object()?;
        if obj.len() != self.fields.len() {
            return None;
        }
        let fields = self
            .fields
            .iter()
            .map(|(k, v)| Some((k.clone(), v.decode_like(obj.get(k)?)?)))
            .collect::<Option<_>>()?;
        Some(Report { fields })
    }

    /// `key: value` lines. Multi-line values go below their key, indented.
    /// A report with a single one-line value prints just the value.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let [(_, v)] = self.fields.as_slice() {
            if let [line] = v.text_lines().as_slice() {
                out.push_str(line);
                out.push('\n');
                return out;
            }
        }
        for (k, v) in &self.fields {
            let lines = v.text_lines();
            if matches!(v, Value::Table(_) | Value::Sigma(_)) {
                out.push_str(&format!("{k}:\n"));
                for line in &lines {
                    out.push_str(&format!("  {line}\n"));
                }
            } else {
                out.push_str(&format!("{k}: {}\n", lines.join(" ")));
            }
        }
        out
    }
}

/// Output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    let t = text.trim();
    if t.starts_with('[') {
        t.parse()
    } else {
        format!("[{t}]").parse()
    }
}

/// Runs one command on one object.
pub fn evaluate(command: &Command, x: &GradedTateObject) -> Result<Report, Error> {
    let mut r = Report::default();
    match command {
        Command::Classify { .. } => {
            let c = classify(x);
            r.push("d_plus", Value::Count(c.d_plus));
            r.push("d_minus", Value::Count(c.d_minus));
            r.push("evenly_finite", Value::Flag(c.evenly_finite));
            r.push("oddly_finite", Value::Flag(c.oddly_finite));
            r.push("alt_vanishing_index", Value::Index(c.alt_vanishing_index));
            r.push("sym_vanishing_index", Value::Index(c.sym_vanishing_index));
            r.push("kimura_dimension", Value::Count(c.kimura_dimension));
            r.push("square_vanishing_index", Value::Count(c.square_vanishing_index));
        }
        Command::Schur { lambda, .. } => {
            let lambda = parse_partition(lambda)?;
            let y = schur_apply(&lambda, x);
            r.push("k0", Value::Class(y.k0_class()));
            r.push("object", Value::Object(y));
        }
        Command::VanishTable { max, .. } => {
            if *max > MAX_TABLE_SIZE {
                return Err(Error::BudgetExceeded(format!("--max {max} exceeds {MAX_TABLE_SIZE}")));
            }
            let mut rows = Vec::new();
            for lambda in partitions_up_to(*max).into_iter().filter(|l| !l.is_empty()) {
                let v = schur_vanishes(&lambda, x)?;
                rows.push((lambda, v));
            }
            r.push("d_plus", Value::Count(x.d_plus()));
            r.push("d_minus", Value::Count(x.d_minus()));
            r.push("vanishing", Value::Table(rows));
        }
        Command::K0 { .. } => r.push("class", Value::Class(x.k0_class())),
        Command::Lambda { order, .. } => r.push("lambda_t", Value::Series(lambda_t(&x.k0_class(), *order as usize))),
        Command::Zeta { order, rational, reduced, .. } => {
            if *rational {
                let mut q = zeta_rational(x);
                if *reduced {
                    q = q.reduced();
                }
                r.push("numerator", Value::Polynomial(q.numerator()));
                r.push("denominator", Value::Polynomial(q.denominator()));
            } else {
                r.push("zeta", Value::Series(zeta(&x.k0_class(), *order as usize)));
            }
        }
        Command::LambdaSigma { order, .. } => r.push("lambda_sigma", Value::Sigma(lambda_sigma(x, *order as usize))),
        Command::Verify { .. } => unreachable!("verify takes no object"),
    }
    Ok(r)
}

fn expression(command: &Command) -> Option<&str> {
    match command {
        Command::Classify { expr }
        | Command::Schur { expr, .. }
        | Command::VanishTable { expr, .. }
        | Command::K0 { expr }
        | Command::Lambda { expr, .. }
        | Command::Zeta { expr, .. }
        | Command::LambdaSigma { expr, .. } => expr.as_deref(),
        Command::Verify { .. } => None,
    }
}

fn verify(max_dim: usize, max_size: usize, cases: usize, seed: u64) -> Result<(Report, bool), Error> {
    let budget = Budget::default();
    if max_dim > budget.max_dim || max_size > budget.max_size {
        return Err(Error::BudgetExceeded(format!(
            "grid dim {max_dim}, size {max_size} exceeds oracle budget dim {}, size {}",
            budget.max_dim, budget.max_size
        )));
    }
    let s = run_all(max_dim, max_size, cases, seed)?;
    let mut r = Report::default();
    r.push("triple_agreement", Value::Tally(s.triple_agreement));
    r.push("shift_duality", Value::Tally(s.shift_duality));
    r.push("coproduct", Value::Tally(s.coproduct));
    r.push("lambda_ring", Value::Tally(s.lambda_ring));
    r.push("pipeline", Value::Tally(s.pipeline));
    Ok((r, s.ok()))
}

fn render(report: &Report, json: bool) -> String {
    if json {
        format!("{}\n", report.to_json())
    } else {
        report.to_text()
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stderr: text, code, ..Default::default() }
            } else {
                Outcome { stdout: text, code, ..Default::default() }
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let fail = |e: Error| Outcome { stderr: format!("error: {e}\n"), code: exit_code(&e), ..Default::default() };

    if let Command::Verify { max_dim, max_size, cases, seed } = cli.command {
        return match verify(max_dim, max_size, cases, seed) {
            Ok((report, ok)) => Outcome {
                stdout: render(&report, cli.json),
                stderr: if ok { String::new() } else { "error: verification failed\n".into() },
                code: if ok { EXIT_OK } else { EXIT_VERIFY },
            },
            Err(e) => fail(e),
        };
    }

    let inputs: Vec<String> = match (&cli.file, expression(&cli.command)) {
        (Some(_), Some(_)) => return fail(Error::OutOfRange("give either an expression or --file, not both".into())),
        (None, None) => return fail(Error::OutOfRange("missing object expression".into())),
        (None, Some(e)) => vec![e.to_string()],
        (Some(path), None) => match std::fs::read_to_string(path) {
            Ok(text) => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from)
                .collect(),
            Err(e) => return fail(Error::OutOfRange(format!("cannot read {}: {e}", path.display()))),
        },
    };

    let mut reports = Vec::new();
    for (line, input) in inputs.iter().enumerate() {
        let result = parse_object(input).and_then(|x| evaluate(&cli.command, &x));
        match result {
            Ok(r) => reports.push(r),
            Err(e) if cli.file.is_some() => {
                let mut out = fail(e);
                out.stderr = format!("line {}: {}", line + 1, out.stderr);
                return out;
            }
            Err(e) => return fail(e),
        }
    }

    let stdout = if cli.file.is_none() {
        render(&reports[0], cli.json)
    } else if cli.json {
        let docs: Vec<Json> = inputs
            .iter()
            .zip(&reports)
            .map(|(e, r)| json!({ "expression": e, "result": r.to_json() }))
            .collect();
        format!("{}\n", Json::Array(docs))
    } else {
        let blocks: Vec<String> = inputs.iter().zip(&reports).map(|(e, r)| format!("# {e}\n{}", r.to_text())).collect();
        blocks.join("\n")
    };
    Outcome { stdout, code: EXIT_OK, ..Default::default() }
}
