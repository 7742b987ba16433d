//! `empath`: run, check and inspect empathic agent simulations.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use empath_core::harness::{load_project, load_scenario, Project, Severity, TraceFilter, DEFAULT_TICKS};
use empath_core::parser::Scenario;
use empath_core::trace::{write_jsonl, TraceRecord};
use serde_json::Value;

const EXIT_INVALID: u8 = 1;
const EXIT_RUNTIME: u8 = 2;

#[derive(Parser)]
#[command(name = "empath", version, about = "Empathic BDI agent simulator")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a project and write the trace as JSON Lines.
    Run {
        mas: PathBuf,
        #[arg(long)]
        scenario: Option<PathBuf>,
        /// Defaults to the scenario's `run` line, else 10.
        #[arg(long)]
        ticks: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Reason on one thread per agent. The trace does not change.
        #[arg(long)]
        parallel: bool,
    },
    /// Parse and validate a project without running it.
    Check {
        mas: PathBuf,
        #[arg(long)]
        scenario: Option<PathBuf>,
    },
    /// Print the records of a trace file that match a filter.
    Trace {
        /// e.g. `agent=lily,rule=EmSel1`
        #[arg(long, default_value = "")]
        filter: String,
        path: PathBuf,
    },
}

/// Error with an exit code attached.
struct Failure(u8, anyhow::Error);

fn invalid<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure(EXIT_INVALID, e.into())
}

fn scenario_for(project: &Project, path: Option<&Path>) -> Result<Scenario, Failure> {
    match path {
        None => Ok(Scenario::default()),
        Some(p) => load_scenario(p, &project.agent_ids()).map_err(invalid),
    }
}

fn summary_text(summary: &Value) -> String {
    let mut out = String::new();
    if let Some(agents) = summary["agents"].as_object() {
        for (id, s) in agents {
            let links: Vec<String> = s["links"]
                .as_object()
                .map(|m| m.iter().map(|(k, v)| format!("{}={}", k, v)).collect())
                .unwrap_or_default();
            out.push_str(&format!(
                "{}: mood {} ({} {}) links [{}] memory {}\n",
                id,
                s["mood"],
                s["mood_label"].as_str().unwrap_or("?"),
                s["mood_intensity"],
                links.join(", "),
                s["memory"]
            ));
        }
    }
    out
}

fn run(
    mas: &Path,
    scenario: Option<&Path>,
    ticks: Option<u64>,
    seed: u64,
    trace: Option<&Path>,
    parallel: bool,
) -> Result<(), Failure> {
    let project = load_project(mas).map_err(invalid)?;
    let sc = scenario_for(&project, scenario)?;
    let ticks = ticks.or(sc.run_length).unwrap_or(DEFAULT_TICKS);
    let mut sim = project.simulation(sc, seed).map_err(invalid)?;
    sim.parallel = parallel;
    let outcome = sim.run(ticks);

    let write = |records: &[TraceRecord]| -> Result<()> {
        match trace {
            Some(p) => {
                let f = fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?;
                let mut w = BufWriter::new(f);
                write_jsonl(&mut w, records)?;
                w.flush()?;
            }
            None => {
                let stdout = io::stdout();
                let mut w = BufWriter::new(stdout.lock());
                write_jsonl(&mut w, records)?;
                w.flush()?;
            }
        }
        Ok(())
    };
    write(&sim.records).map_err(|e| Failure(EXIT_RUNTIME, e))?;
    outcome.map_err(|e| Failure(EXIT_RUNTIME, e.into()))?;

    let text = summary_text(&sim.summary());
    if trace.is_some() {
        print!("{}", text);
    } else {
        eprint!("{}", text);
    }
    Ok(())
}

fn check(mas: &Path, scenario: Option<&Path>) -> Result<(), Failure> {
    let project = load_project(mas).map_err(invalid)?;
    let sc = match scenario {
        Some(p) => Some(scenario_for(&project, Some(p))?),
        None => None,
    };
    let diags = project.diagnostics(sc.as_ref());
    for d in &diags {
        println!("{}", d);
    }
    let errors = diags.iter().filter(|d| d.severity == Severity::Error).count();
    let warnings = diags.iter().filter(|d| d.severity == Severity::Warning).count();
    println!("{}: {} agent(s), {} error(s), {} warning(s)", mas.display(), project.agents.len(), errors, warnings);
    if errors > 0 {
        return Err(invalid(anyhow::anyhow!("{} error(s)", errors)));
    }
    Ok(())
}

fn filter_trace(spec: &str, path: &Path) -> Result<(), Failure> {
    let filter = TraceFilter::parse(spec).map_err(|e| invalid(anyhow::anyhow!(e)))?;
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())).map_err(invalid)?;
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec = TraceRecord::from_json_line(line)
            .map_err(|e| invalid(anyhow::anyhow!("{}:{}: {}", path.display(), i + 1, e)))?;
        if filter.matches(&rec) {
            writeln!(w, "{}", line).map_err(|e| Failure(EXIT_RUNTIME, e.into()))?;
        }
    }
    w.flush().map_err(|e| Failure(EXIT_RUNTIME, e.into()))?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.cmd {
        Command::Run { mas, scenario, ticks, seed, trace, parallel } => {
            run(mas, scenario.as_deref(), *ticks, *seed, trace.as_deref(), *parallel)
        }
        Command::Check { mas, scenario } => check(mas, scenario.as_deref()),
        Command::Trace { filter, path } => filter_trace(filter, path),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, e)) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(code)
        }
    }
}
