//! Command-line front end.
//!
//! Every command prints one report, as text or as JSON carrying
//! `"schema": 1`. Exit status: 0 when every verdict passes, 1 on a failed
//! verdict, 2 on a usage error, 3 when a computation exceeds the
//! exact-arithmetic threshold and the probabilistic fallback is disabled.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::centralizer::{self, CentralizerError, SCHEMA};
use crate::hecke::{check_bar_relations, check_hecke_relations, HeckeError, HeckeParams};
use crate::linalg::ExactPolicy;
use crate::qfield::{parse_bigrat, BigRat};
use crate::qsuper::{check_qsuper_relations, check_rho2_table, QsuperError};
use crate::report::RelationReport;
use crate::superspace::SuperDims;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    /// Hecke relations for pi_r(T_i) and q*pi_r(T_i)
    Relations,
    /// Quantum superalgebra relations and the two-site tables
    Qrelations,
    /// Commutators between the two actions
    Commute,
    /// Images, commutants and the double centralizer verdict
    Duality,
    /// Image dimensions against sums over hook shapes
    Hook,
    /// Dimensions after setting q = t
    Specialize,
    /// Every report above; includes `specialize` when --t is given
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "swdual", version, about = "Exact checks of super Schur-Weyl duality on V^(x)r")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Hecke relations for pi_r(T_i) and q*pi_r(T_i)
    Relations(Opts),
    /// Quantum superalgebra relations and the two-site tables
    Qrelations(Opts),
    /// Commutators between the two actions
    Commute(Opts),
    /// Images, commutants and the double centralizer verdict
    Duality(Opts),
    /// Image dimensions against sums over hook shapes
    Hook(Opts),
    /// Dimensions after setting q = t (requires --t)
    Specialize(Opts),
    /// Every report; includes the specialization when --t is given
    All(Opts),
}

#[derive(clap::Args, Debug, Clone)]
struct Opts {
    /// Number of even basis vectors
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Number of odd basis vectors
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Tensor power
    #[arg(long, default_value_t = 3)]
    r: usize,
    /// Specialization point, a nonzero rational written p/q
    #[arg(long)]
    t: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest (m+n)^r handled by exact arithmetic over Q(q)
    #[arg(long, default_value_t = 32)]
    exact_threshold: usize,
    /// Seed for the specialization points used above the threshold
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fail with exit status 3 instead of falling back above the threshold
    #[arg(long)]
    no_fallback: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub dims: SuperDims,
    pub r: usize,
    pub command: Command,
    pub t: Option<BigRat>,
    pub format: Format,
    pub policy: ExactPolicy,
}

/// Exit status and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

fn config_from(command: Command, o: Opts) -> Result<RunConfig, String> {
    let dims = SuperDims::new(o.m, o.n).map_err(|e| e.to_string())?;
    if o.r == 0 {
        return Err("--r must be at least 1".into());
    }
    let t = match &o.t {
        Some(s) => {
            let t = parse_bigrat(s).map_err(|e| format!("--t: {e}"))?;
            if num_traits::Zero::is_zero(&t) {
                return Err("--t must be nonzero".into());
            }
            Some(t)
        }
        None => None,
    };
    if command == Command::Specialize && t.is_none() {
        return Err("specialize requires --t".into());
    }
    Ok(RunConfig {
        dims,
        r: o.r,
        command,
        t,
        format: o.format,
        policy: ExactPolicy {
            exact_threshold: o.exact_threshold,
            seed: o.seed,
            allow_fallback: !o.no_fallback,
            ..ExactPolicy::default()
        },
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let (command, opts) = match cli.command {
        Sub::Relations(o) => (Command::Relations, o),
        Sub::Qrelations(o) => (Command::Qrelations, o),
        Sub::Commute(o) => (Command::Commute, o),
        Sub::Duality(o) => (Command::Duality, o),
        Sub::Hook(o) => (Command::Hook, o),
        Sub::Specialize(o) => (Command::Specialize, o),
        Sub::All(o) => (Command::All, o),
    };
    match config_from(command, opts) {
        Ok(cfg) => run(&cfg),
        Err(msg) => Outcome::usage(format!("error: {msg}\n")),
    }
}

/// One named section of the output with its pass/fail status.
struct Section {
    name: &'static str,
    passed: bool,
    value: Value,
    text: String,
}

fn relation_text(rep: &RelationReport) -> String {
    let mut s = String::new();
    for c in &rep.checks {
        let idx: Vec<String> = c.indices.iter().map(|i| i.to_string()).collect();
        let _ = write!(s, "  {} [{}]: ", c.relation, idx.join(","));
        match &c.witness_entry {
            None => s.push_str("zero\n"),
            Some(w) => {
                let _ = writeln!(s, "nonzero at ({}, {}) = {}", w.row, w.col, w.value);
            }
        }
    }
    s
}

fn relation_section(name: &'static str, rep: RelationReport) -> Section {
    Section {
        name,
        passed: rep.passed(),
        text: relation_text(&rep),
        value: serde_json::to_value(&rep).expect("report serializes"),
    }
}

fn fields_text(v: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            if k == "schema" || k == "shapes" {
                continue;
            }
            match x {
                Value::Object(_) => {
                    let _ = writeln!(s, "  {k}:");
                    for line in fields_text(x).lines() {
                        let _ = writeln!(s, "  {line}");
                    }
                }
                _ => {
                    let _ = writeln!(s, "  {k}: {x}");
                }
            }
        }
    }
    s
}

fn struct_section<T: Serialize>(name: &'static str, passed: bool, rep: &T) -> Section {
    let value = serde_json::to_value(rep).expect("report serializes");
    Section {
        name,
        passed,
        text: fields_text(&value),
        value,
    }
}

fn hecke_err(e: HeckeError) -> CentralizerError {
    e.into()
}

fn qsuper_err(e: QsuperError) -> CentralizerError {
    e.into()
}

fn sections(cfg: &RunConfig) -> Result<Vec<Section>, CentralizerError> {
    let (dims, r) = (cfg.dims, cfg.r);
    let want = |c: Command| cfg.command == c || cfg.command == Command::All;
    let mut out = Vec::new();
    if want(Command::Relations) {
        let p = HeckeParams::new(dims, r).map_err(hecke_err)?;
        out.push(relation_section("relations", check_hecke_relations(&p).map_err(hecke_err)?));
        out.push(relation_section("bar_relations", check_bar_relations(&p).map_err(hecke_err)?));
    }
    if want(Command::Qrelations) {
        out.push(relation_section(
            "qrelations",
            check_qsuper_relations(dims, r).map_err(qsuper_err)?,
        ));
        out.push(relation_section("rho2_tables", check_rho2_table(dims).map_err(qsuper_err)?));
    }
    if want(Command::Commute) {
        out.push(relation_section("commute", centralizer::verify_commutation(dims, r)?));
    }
    let needs_analysis = [Command::Duality, Command::Hook, Command::Specialize, Command::All]
        .contains(&cfg.command);
    if needs_analysis {
        let analysis = centralizer::analyse(dims, r, &cfg.policy)?;
        if want(Command::Duality) {
            let rep = &analysis.report;
            out.push(struct_section("duality", rep.passed(), rep));
        }
        if want(Command::Hook) {
            let rep = analysis.hook_report();
            out.push(struct_section("hook", rep.passed(), &rep));
        }
        if let (true, Some(t)) = (want(Command::Specialize), &cfg.t) {
            let rep = analysis.probe(t)?;
            out.push(struct_section("specialize", rep.bounded, &rep));
        }
    }
    Ok(out)
}

/// Runs a validated configuration.
pub fn run(cfg: &RunConfig) -> Outcome {
    let secs = match sections(cfg) {
        Ok(s) => s,
        Err(e) => {
            let code = if e.is_resource_limit() { EXIT_RESOURCE } else { EXIT_FAIL };
            return Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            };
        }
    };
    let passed = secs.iter().all(|s| s.passed);
    let stdout = match cfg.format {
        Format::Json => {
            let mut reports = serde_json::Map::new();
            for s in &secs {
                reports.insert(s.name.to_string(), s.value.clone());
            }
            let doc = json!({
                "schema": SCHEMA,
                "command": cfg.command,
                "m": cfg.dims.m(),
                "n": cfg.dims.n(),
                "r": cfg.r,
                "passed": passed,
                "reports": reports,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("json");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("m = {}, n = {}, r = {}\n", cfg.dims.m(), cfg.dims.n(), cfg.r);
            for sec in &secs {
                let verdict = if sec.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{} {}", sec.name, verdict);
                s.push_str(&sec.text);
            }
            let _ = writeln!(s, "overall {}", if passed { "PASS" } else { "FAIL" });
            s
        }
    };
    Outcome {
        code: if passed { EXIT_PASS } else { EXIT_FAIL },
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run_from(std::iter::once("swdual").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["relations", "--m", "0", "--n", "0"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["relations", "--r", "0"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["specialize"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["specialize", "--t", "0"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["specialize", "--t", "x"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["duality", "--format", "yaml"]).code, EXIT_USAGE);
    }

    #[test]
    fn text_output() {
        let out = run_args(&["relations", "--r", "2"]);
        assert_eq!(out.code, EXIT_PASS);
        assert!(out.stdout.contains("quadratic [1]: zero"));
        assert!(out.stdout.ends_with("overall PASS\n"));
    }

    #[test]
    fn resource_limit_code() {
        let out = run_args(&["duality", "--r", "3", "--exact-threshold", "4", "--no-fallback"]);
        assert_eq!(out.code, EXIT_RESOURCE);
        assert!(out.stderr.contains("threshold"));
    }

    #[test]
    fn json_is_deterministic() {
        let args = ["duality", "--r", "2", "--format", "json", "--exact-threshold", "2"];
        let a = run_args(&args);
        let b = run_args(&args);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["reports"]["duality"]["probabilistic"], true);
    }
}
