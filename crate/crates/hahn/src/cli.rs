//! The `hahn` command line.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use hahn_core::beta::beta_axioms_check;
use hahn_core::levels::{decompose, degree, generator_set, level_class, level_equiv, level_group};
use hahn_core::oracle::bounded_mn_search;
use hahn_core::series::{flatten_last, series_cmp, series_sign};
use hahn_core::{FieldDescriptor, Rational, Series, Sign};
use serde::Serialize;
use serde_json::json;

use crate::derive::derivative_at;
use crate::error::{Error, Result};
use crate::parse::{parse_field, parse_series, parse_series_in};
use crate::report::{AxiomJson, DecompositionJson, DegreeJson};
use crate::sample::{to_naive, Sampler};

#[derive(Debug, Parser)]
#[command(
    name = "hahn",
    version,
    about = "Exact arithmetic in generalized power-series fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Field descriptor, e.g. "Q box lex(Z,Z)".
    #[arg(long, global = true, default_value = "Q box Z")]
    pub field: String,
    /// Number of terms kept when inverting.
    #[arg(long, global = true, default_value_t = 8)]
    pub depth: usize,
    /// Largest multiplier tried by the brute-force level search.
    #[arg(long, global = true, default_value_t = 1000)]
    pub bound: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to a canonical series.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two series: LT, EQ or GT.
    Cmp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Sign of a series: negative, zero or positive.
    Sign {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Level class of a positive series, or level equivalence of two.
    Level {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Generator set of the field.
    Gen,
    /// Number of Archimedean classes of the level group.
    Degree,
    /// Archimedean base, class groups and level group of the field.
    Decompose,
    /// Group the terms of a series over lex(..) by their last coordinate.
    Flatten {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check the ball axioms on a seeded random corpus.
    BetaCheck {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// f'(c), read off f(c + x^-1); always over Q box Z.
    Derive {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout: stdout + "\n",
            stderr: String::new(),
        },
        Err(Failed { error, stdout }) => Outcome {
            code: error.exit_code(),
            stdout,
            stderr: format!("error: {error}\n"),
        },
    }
}

/// An error together with whatever was produced before it.
struct Failed {
    error: Error,
    stdout: String,
}

impl<E: Into<Error>> From<E> for Failed {
    fn from(e: E) -> Self {
        Failed {
            error: e.into(),
            stdout: String::new(),
        }
    }
}

fn emit<T: Serialize>(cli: &Cli, text: String, value: &T) -> String {
    match cli.output {
        Output::Text => text,
        Output::Json => serde_json::to_string(value).expect("serializable"),
    }
}

fn sign_name(s: Sign) -> &'static str {
    match s {
        Sign::Negative => "negative",
        Sign::Zero => "zero",
        Sign::Positive => "positive",
    }
}

fn execute(cli: &Cli) -> std::result::Result<String, Failed> {
    let field: FieldDescriptor = parse_field(&cli.field)?;
    let series = |text: &str| -> Result<Series> { parse_series_in(text, &field, cli.depth) };
    let out = match &cli.command {
        Command::Eval { expr } => {
            let s = series(expr)?.to_string();
            emit(cli, s.clone(), &json!({ "series": s }))
        }
        Command::Cmp { a, b } => {
            let ord = match series_cmp(&series(a)?, &series(b)?).map_err(Error::from)? {
                std::cmp::Ordering::Less => "LT",
                std::cmp::Ordering::Equal => "EQ",
                std::cmp::Ordering::Greater => "GT",
            };
            emit(cli, ord.into(), &json!({ "cmp": ord }))
        }
        Command::Sign { expr } => {
            let s = sign_name(series_sign(&series(expr)?).map_err(Error::from)?);
            emit(cli, s.into(), &json!({ "sign": s }))
        }
        Command::Level { a, b: None } => {
            let c = level_class(&series(a)?).map_err(Error::from)?.to_string();
            emit(cli, c.clone(), &json!({ "level": c }))
        }
        Command::Level { a, b: Some(b) } => {
            let (a, b) = (series(a)?, series(b)?);
            let equiv = level_equiv(&a, &b).map_err(Error::from)?;
            let witness = match (to_naive(&a), to_naive(&b)) {
                (Some(na), Some(nb)) => bounded_mn_search(&na, &nb, cli.bound).map_err(Error::from)?,
                _ => None,
            };
            let mut text = String::from(if equiv { "equivalent" } else { "inequivalent" });
            if let Some((m, n)) = witness {
                text += &format!(" ({m},{n})");
            }
            emit(
                cli,
                text,
                &json!({ "equivalent": equiv, "witness": witness.map(|(m, n)| [m, n]) }),
            )
        }
        Command::Gen => {
            let gens = generator_set(&field).map_err(Error::from)?;
            let text = gens.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            emit(
                cli,
                text,
                &json!({ "generators": gens.iter().map(|c| c.0).collect::<Vec<_>>() }),
            )
        }
        Command::Degree => {
            let d = degree(&field).map_err(Error::from)?;
            emit(cli, d.to_string(), &json!({ "degree": DegreeJson::from(d) }))
        }
        Command::Decompose => {
            let report = DecompositionJson::from(&decompose(&field).map_err(Error::from)?);
            emit(cli, report.to_text(), &report)
        }
        Command::Flatten { expr } => {
            let s = flatten_last(&series(expr)?)
                .map_err(Error::from)?
                .display_with(&["z", "y", "w", "v", "u"])
                .to_string();
            emit(cli, s.clone(), &json!({ "series": s }))
        }
        Command::BetaCheck { samples } => return beta_check(cli, &field, *samples),
        Command::Derive { expr, at } => {
            let z = hahn_core::GroupDescriptor::Integers;
            let f = parse_series(expr, &z, cli.depth)?;
            let c = constant(at, cli.depth)?;
            let d = derivative_at(&f, &c, cli.depth)?.to_string();
            emit(cli, d.clone(), &json!({ "derivative": d }))
        }
    };
    Ok(out)
}

fn constant(text: &str, depth: usize) -> Result<Rational> {
    let s = parse_series(text, &hahn_core::GroupDescriptor::Trivial, depth)?;
    match s.rational_terms().as_deref() {
        Some([]) => Ok(Rational::from_integer(0.into())),
        Some([(_, q)]) => Ok(q.clone()),
        _ => Err(Error::Usage(format!("--at expects a rational constant, got {text}"))),
    }
}

fn beta_check(cli: &Cli, field: &FieldDescriptor, samples: usize) -> std::result::Result<String, Failed> {
    let g = level_group(field);
    let mut sampler = Sampler::new(cli.seed);
    let corpus: Vec<_> = (0..samples).map(|_| sampler.beta_sample(&g, 4)).collect();
    let reports = beta_axioms_check(&corpus).map_err(Error::from)?;
    let out = match cli.output {
        Output::Json => {
            serde_json::to_string(&reports.iter().map(AxiomJson::from).collect::<Vec<_>>()).expect("serializable")
        }
        Output::Text => reports
            .iter()
            .map(|r| {
                let mut line = format!(
                    "axiom {}: {} samples, {} failures",
                    r.axiom,
                    r.samples_run,
                    r.failures.len()
                );
                for f in &r.failures {
                    let inputs: Vec<String> = f.inputs.iter().map(ToString::to_string).collect();
                    line += &format!("\n  {} [{}]", f.reason, inputs.join("; "));
                }
                line
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
    if failed > 0 {
        return Err(Failed {
            error: Error::Undefined(format!("{failed} axiom failures")),
            stdout: out + "\n",
        });
    }
    Ok(out)
}
