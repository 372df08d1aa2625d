// Copyright 2026 The zxsimp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `zxsimp`: simplify, contract and verify ZX-diagrams, and solve Potts,
//! Jones and colouring instances. Input and output are JSON.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use zxsimp::catalogue::{verify_catalogue, DEFAULT_TOL};
use zxsimp::problems::{count_colourings, evaluate_potts, jones_at_root, Graph, PdCode, PottsValue, SignedGraph};
use zxsimp::random::{random_diagram, rng, DiagramShape};
use zxsimp::semantics::{contract_closed, interpret};
use zxsimp::trace::Trace;
use zxsimp::{ledger, simplify, Diagram, Dim, Error};

#[derive(Parser, Debug)]
#[command(name = "zxsimp", version, about = "Qubit and qutrit ZX-diagram simplifier")]
struct Cli {
    /// Wire dimension (diagrams) or Potts/colouring parameter (problems).
    #[arg(long, global = true)]
    d: Option<u32>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Relative tolerance for floating-point comparisons.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Include the rewrite trace in the output.
    #[arg(long, global = true)]
    trace: bool,
    /// Input file, or `-` for stdin.
    #[arg(long, global = true)]
    input: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simplify a diagram and report the exact scalar.
    Simplify { file: Option<PathBuf> },
    /// Contract a diagram with the dense oracle.
    Contract { file: Option<PathBuf> },
    /// Check every catalogued rule, the calibration table and a random suite.
    Verify {
        /// Report every rule instance, not only per-rule summaries.
        #[arg(long)]
        full: bool,
        /// Number of random closed diagrams per dimension.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Potts partition function of a signed graph.
    Potts { file: Option<PathBuf> },
    /// Jones polynomial of a PD code at a lattice root of unity.
    Jones { file: Option<PathBuf> },
    /// Number of proper colourings of a graph.
    ColourCount { file: Option<PathBuf> },
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => 3,
            Error::UnsoundRule { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read_input(cli: &Cli, file: &Option<PathBuf>) -> Result<String, Failure> {
    let source = match (&cli.input, file) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) => p.display().to_string(),
        (None, None) => return Err(fail(1, "no input given")),
    };
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| fail(1, format!("reading stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(&source).map_err(|e| fail(1, format!("reading {source}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| fail(1, format!("{what}: {e} at line {}, column {}", e.line(), e.column())))
}

fn read_diagram(cli: &Cli, file: &Option<PathBuf>) -> Result<Diagram, Failure> {
    let a = Diagram::from_json(&read_input(cli, file)?)?;
    if let Some(d) = cli.d {
        if d as usize != a.dim().value() {
            return Err(fail(1, format!("--d {d} but the diagram has d = {}", a.dim().value())));
        }
    }
    Ok(a)
}

fn required_d(cli: &Cli) -> Result<u32, Failure> {
    cli.d.ok_or_else(|| fail(1, "--d is required"))
}

fn complex_json(z: num_complex::Complex64) -> Value {
    json!({ "value_re": z.re, "value_im": z.im })
}

fn trace_json(t: &Trace) -> Value {
    serde_json::to_value(&t.steps).expect("trace serialises")
}

fn with_fields(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn run_simplify(cli: &Cli, file: &Option<PathBuf>) -> Result<Value, Failure> {
    let a = read_diagram(cli, file)?;
    let s = simplify(&a)?;
    let mut out = json!({
        "d": a.dim().value(),
        "spiders_before": a.spider_count(),
        "spiders_left": s.spiders_left(),
        "steps": s.trace.len(),
        "partial": s.partial,
        "scalar": s.scalar,
    });
    if let Some(v) = s.value {
        out = with_fields(out, complex_json(v));
    }
    if !a.is_closed() || s.partial {
        out["residual"] = s.residual.to_json_value();
    }
    if cli.trace {
        out["trace"] = trace_json(&s.trace);
    }
    Ok(out)
}

fn run_contract(cli: &Cli, file: &Option<PathBuf>) -> Result<Value, Failure> {
    let a = read_diagram(cli, file)?;
    if a.is_closed() {
        let z = contract_closed(&a)?;
        return Ok(with_fields(json!({ "d": a.dim().value() }), complex_json(z)));
    }
    let t = interpret(&a)?;
    let entries: Vec<[f64; 2]> = t.data().iter().map(|z| [z.re, z.im]).collect();
    Ok(json!({
        "d": a.dim().value(),
        "outputs": t.n_out(),
        "inputs": t.n_in(),
        "entries": entries,
    }))
}

#[derive(Serialize)]
struct RuleSummary {
    rule: &'static str,
    dim: Dim,
    family: zxsimp::catalogue::RuleFamily,
    instances: usize,
    zero_instances: usize,
    needs_review: bool,
}

// Random closed diagrams small enough for the oracle, simplified and
// compared against contraction.
fn random_suite(seed: u64, samples: usize, tol: f64) -> Value {
    let mut r = rng(seed);
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for dim in [Dim::Qubit, Dim::Qutrit] {
        for i in 0..samples {
            let spiders = 2 + i % 6;
            let shape = DiagramShape {
                hbox_rate: 0.2,
                ..DiagramShape::closed(spiders, spiders + 2)
            };
            let a = random_diagram(&mut r, dim, shape);
            let Ok(expected) = contract_closed(&a) else {
                continue;
            };
            checked += 1;
            let ok = match simplify(&a) {
                Ok(s) if !s.partial => {
                    let z = s.scalar.to_complex();
                    (z - expected).norm() <= tol * expected.norm().max(1.0)
                }
                _ => false,
            };
            if !ok {
                mismatches.push(json!({ "d": dim.value(), "index": i, "diagram": a.to_json_value() }));
            }
        }
    }
    json!({ "seed": seed, "checked": checked, "mismatches": mismatches })
}

fn run_verify(cli: &Cli, full: bool, samples: usize) -> Result<(Value, bool), Failure> {
    let report = verify_catalogue(cli.tol);
    let summaries: Vec<RuleSummary> = report
        .rules
        .iter()
        .map(|r| RuleSummary {
            rule: r.rule,
            dim: r.dim,
            family: r.family,
            instances: r.instances.len(),
            zero_instances: r.zero_instances,
            needs_review: r.needs_review,
        })
        .collect();
    let (table, errors) = ledger::calibrate_all();
    let stored = ledger::table();
    let mut drift = Vec::new();
    for (rule, sigs) in stored {
        for (sig, law) in sigs {
            if table.get(rule).and_then(|m| m.get(sig)) != Some(law) {
                drift.push(format!("{rule} [{sig}]"));
            }
        }
    }
    let calibration_ok = errors.is_empty() && drift.is_empty();
    let random = random_suite(cli.seed, samples, cli.tol);
    let random_ok = random["mismatches"].as_array().is_some_and(|m| m.is_empty());
    let passed = report.passed() && calibration_ok && random_ok;
    let mut out = json!({
        "passed": passed,
        "catalogue": {
            "entries": report.rules.len() + report.failures.len(),
            "verified": report.rules.len(),
            "instances": report.instances,
            "rules": summaries,
            "failures": report.failures,
        },
        "calibration": {
            "cases": ledger::calibration_cases().len(),
            "errors": errors.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            "drift": drift,
        },
        "random": random,
    });
    if full {
        out["catalogue"]["reports"] = serde_json::to_value(&report.rules).expect("report serialises");
    }
    Ok((out, passed))
}

fn potts_json(p: &PottsValue) -> Value {
    with_fields(complex_json(p.value), json!({ "exact": p.exact, "method": p.method }))
}

fn run_potts(cli: &Cli, file: &Option<PathBuf>) -> Result<Value, Failure> {
    let d = required_d(cli)?;
    let g: SignedGraph = parse_json(&read_input(cli, file)?, "signed graph")?;
    g.check()?;
    Ok(with_fields(json!({ "d": d }), potts_json(&evaluate_potts(&g, d)?)))
}

fn run_jones(cli: &Cli, file: &Option<PathBuf>) -> Result<Value, Failure> {
    let d = required_d(cli)?;
    let pd = PdCode::from_json(&read_input(cli, file)?)?;
    let r = jones_at_root(&pd, d)?;
    let mut out = with_fields(
        json!({
            "d": d,
            "t": [r.t.re, r.t.im],
            "bracket": r.bracket.to_string(),
            "writhe": r.writhe,
            "method": "oracle",
        }),
        complex_json(r.value),
    );
    if let Some(p) = &r.potts {
        out["potts"] = potts_json(p);
    }
    Ok(out)
}

fn run_colour_count(cli: &Cli, file: &Option<PathBuf>) -> Result<Value, Failure> {
    let d = required_d(cli)?;
    let g: Graph = parse_json(&read_input(cli, file)?, "graph")?;
    let c = count_colourings(&g, d)?;
    let mut out = json!({ "d": d, "count": c.count, "method": c.method });
    if cli.trace {
        if let Some(t) = &c.trace {
            out["trace"] = trace_json(t);
        }
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<(Value, bool), Failure> {
    let ok = |v: Value| Ok((v, true));
    match &cli.command {
        Command::Simplify { file } => ok(run_simplify(cli, file)?),
        Command::Contract { file } => ok(run_contract(cli, file)?),
        Command::Verify { full, samples } => run_verify(cli, *full, *samples),
        Command::Potts { file } => ok(run_potts(cli, file)?),
        Command::Jones { file } => ok(run_jones(cli, file)?),
        Command::ColourCount { file } => ok(run_colour_count(cli, file)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((v, passed)) => {
            let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&v).expect("output serialises"));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
