//! Command-line front end. Every subcommand produces a [`Report`]; exit codes
//! are 0 for a positive result, 2 for a negative mathematical verdict, 3 when
//! a resource budget ran out and 1 for usage or input errors.

pub mod commands;
pub mod input;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

pub const DEFAULT_SEED: u64 = 20_250_101;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "subadjoint", version, about = "Exact checks for legendrian varieties and the subadjoint classification")]
pub struct Cli {
    /// Seed for every random sample
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Maximum number of S-pairs processed by Buchberger's algorithm
    #[arg(long, global = true, default_value_t = subadjoint_core::groebner::DEFAULT_PAIR_BUDGET)]
    pub budget: usize,
    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit human-readable text
    #[arg(long, global = true)]
    pub text: bool,
    /// Override the form of the input file: `standard` or a JSON matrix file
    #[arg(long, global = true)]
    pub form: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Legendrian verdict for an input file (`-` reads stdin)
    Check { file: String },
    /// Poisson bracket of two polynomials in the variables of an input file
    Bracket {
        file: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Reduced Gröbner basis of the ideal of an input file
    Gb { file: String },
    /// Normal form of a polynomial modulo the ideal of an input file
    Nf {
        file: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Lie algebra spanned by the quadrics: dimension, rank, roots and type
    Algebra { file: String },
    /// Rerun the classification of candidate representations
    Classify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, default_value_t = 100)]
        max_dim: u64,
    },
    /// List catalog entries, or print one in the input format
    Catalog { name: Option<String> },
    /// Check the curve t ↦ (1, f1, f2, f3) against f1' = f2' f3 − f3' f2
    Curve {
        #[arg(allow_hyphen_values = true)]
        f1: String,
        #[arg(allow_hyphen_values = true)]
        f2: String,
        #[arg(allow_hyphen_values = true)]
        f3: String,
    },
    /// Build X_f for a homogeneous f in y1…y_{n−1} and check it
    Xf {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Number of variables of f (default: the highest index used)
        #[arg(long)]
        vars: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Negative,
    Undecided,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Negative => "negative",
            Status::Undecided => "undecided",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => EXIT_OK,
            Status::Negative => EXIT_NEGATIVE,
            Status::Undecided => EXIT_UNDECIDED,
            Status::Error => EXIT_USAGE,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub timings: Vec<(String, f64)>,
    pub status: Status,
    /// Name of the exhausted budget when undecided.
    pub budget: Option<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report { command: command.into(), inputs, result: Value::Null, timings: Vec::new(), status: Status::Ok, budget: None }
    }

    /// Runs `f`, recording its duration under `phase`.
    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.timings.push((phase.into(), t.elapsed().as_secs_f64()));
        out
    }

    pub fn to_json(&self) -> Value {
        let timings: Map<String, Value> = self.timings.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "timings": timings,
            "status": self.status.as_str(),
        });
        if let Some(b) = &self.budget {
            v["exhausted_budget"] = json!(b);
        }
        v
    }
}

/// Outcome of a subcommand: a report, or raw text for `catalog <name>`.
pub enum Output {
    Report(Report),
    Raw(String),
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match commands::dispatch(&cli, stdin) {
        Ok(Output::Raw(s)) => {
            let _ = out.write_all(s.as_bytes());
            EXIT_OK
        }
        Ok(Output::Report(r)) => {
            let text = if cli.text { render_text(&r) } else { serde_json::to_string_pretty(&r.to_json()).unwrap() + "\n" };
            let _ = out.write_all(text.as_bytes());
            r.status.exit_code()
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) | Value::Array(_) if !is_flat(x) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(x, indent + 2, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x))),
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_value(x, indent + 2, out);
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(", "),
        _ => v.to_string(),
    }
}

pub fn render_text(r: &Report) -> String {
    let mut out = format!("{} [{}]\n", r.command, r.status.as_str());
    if let Some(table) = r.result.get("table").and_then(Value::as_str) {
        out.push_str(table);
    } else {
        render_value(&r.result, 2, &mut out);
    }
    if let Some(b) = &r.budget {
        out.push_str(&format!("  exhausted budget: {b}\n"));
    }
    out
}
