use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use lefkit::arrangements::{
    free_search, generic_splitting, slp2_bridge, terao_experiment, LineArrangement,
};
use lefkit::catalog;
use lefkit::exactlin::{FieldSpec, Rationals, DEFAULT_PRIME, DEFAULT_SECOND_PRIME};
use lefkit::gradedideal::IdealSpec;
use lefkit::lefschetz::{
    laplace_report, slp_scan, TrialPolicy, DEFAULT_SEED, DEFAULT_TRIALS, RATIONAL_LIMIT,
};
use lefkit::polyring::dim_forms;
use serde::Serialize;
use serde_json::{json, Value};

mod render;

#[derive(Parser, Debug)]
#[command(
    name = "lefkit",
    version,
    about = "Weak and Strong Lefschetz checks for artinian ideals"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Prime used for the random trials.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Prime used to confirm failures.
    #[arg(long, global = true, default_value_t = DEFAULT_SECOND_PRIME)]
    second_prime: u64,
    /// Random linear forms per map.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, global = true, env = "LEFKIT_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit the JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Confirm every failure over the rationals.
    #[arg(long, global = true)]
    rational_verify: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplication by a general linear form in every degree.
    CheckWlp { file: PathBuf },
    /// Multiplication by L^k for k up to the range.
    CheckSlp {
        file: PathBuf,
        /// Largest power of L.
        #[arg(long)]
        range: usize,
        /// Source degrees, as A..B.
        #[arg(long, value_parser = parse_window)]
        degrees: Option<(usize, usize)>,
    },
    /// Laplace equations for syzygy degree i and range k.
    Laplace {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        k: usize,
    },
    /// The apolar complement of the ideal in one degree.
    Perp {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Line arrangements in the plane.
    Arrangement {
        #[command(subcommand)]
        action: ArrangementCommand,
    },
    /// Built-in examples with known verdicts.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand, Debug)]
enum ArrangementCommand {
    /// Splitting type of the derivation bundle on a general line.
    Splitting { file: PathBuf },
    /// Saito certificate search.
    Free { file: PathBuf },
    /// SLP at range 2 for the d-th powers of 2d+1 lines against unstability.
    Slp2 { file: PathBuf },
    /// Pad a free arrangement and another one and compare their SLP verdicts.
    Terao { free: PathBuf, other: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// Run one entry, a prefix ending in `*`, or `all`.
    Run {
        #[arg(default_value = "all")]
        name: String,
    },
    List,
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: usize = a
        .trim()
        .parse()
        .map_err(|e| format!("bad start `{a}`: {e}"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|e| format!("bad end `{b}`: {e}"))?;
    if a > b {
        return Err(format!("empty window {a}..{b}"));
    }
    Ok((a, b))
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Mismatch,
}

impl From<lefkit::Error> for Failure {
    fn from(e: lefkit::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    input: Value,
    policy: TrialPolicy,
    result: Value,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_ideal(path: &Path) -> Result<IdealSpec, Failure> {
    IdealSpec::from_json(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_arrangement(path: &Path) -> Result<LineArrangement, Failure> {
    LineArrangement::from_json(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A prime named in the ideal file applies unless `--prime` is given;
/// `"field": "rational"` turns on rational confirmation.
fn policy_for(global: &GlobalOpts, file_field: Option<&FieldSpec>) -> TrialPolicy {
    let mut policy = TrialPolicy {
        trials: global.trials,
        seed: global.seed,
        prime: global.prime.unwrap_or(DEFAULT_PRIME),
        second_prime: global.second_prime,
        rational_verify: global.rational_verify,
    };
    match file_field {
        Some(FieldSpec::Prime(p)) if global.prime.is_none() => policy.prime = *p,
        Some(FieldSpec::Rational) => policy.rational_verify = true,
        _ => {}
    }
    policy
}

fn ideal_echo(path: &Path, spec: &IdealSpec) -> Value {
    let gens: Vec<String> = spec
        .generators
        .iter()
        .map(|g| g.format_with(&spec.vars))
        .collect();
    json!({ "file": path.display().to_string(), "vars": spec.vars, "generators": gens })
}

fn execute(cli: &Cli) -> Result<(RunReport, String), Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::CheckWlp { file } | Command::CheckSlp { file, .. } => {
            let spec = load_ideal(file)?;
            let policy = policy_for(g, spec.field.as_ref());
            policy.validate()?;
            let ideal = spec.instantiate(&policy.primary_field()?)?;
            let (name, k_max, window) = match &cli.command {
                Command::CheckSlp { range, degrees, .. } => ("check-slp", *range, *degrees),
                _ => ("check-wlp", 1, None),
            };
            let verdict = slp_scan(&ideal, k_max, window, policy)?;
            let text = render::scan(&verdict, name == "check-wlp");
            let report = RunReport {
                command: name.into(),
                input: ideal_echo(file, &spec),
                policy,
                result: serde_json::to_value(&verdict).expect("serializable"),
            };
            Ok((report, text))
        }
        Command::Laplace { file, i, k } => {
            let spec = load_ideal(file)?;
            let policy = policy_for(g, spec.field.as_ref());
            policy.validate()?;
            let ideal = spec.instantiate(&policy.primary_field()?)?;
            let rep = laplace_report(&ideal, *i, *k, policy)?;
            let text = render::laplace(&rep);
            let report = RunReport {
                command: "laplace".into(),
                input: ideal_echo(file, &spec),
                policy,
                result: serde_json::to_value(&rep).expect("serializable"),
            };
            Ok((report, text))
        }
        Command::Perp { file, degree } => {
            let spec = load_ideal(file)?;
            let policy = policy_for(g, spec.field.as_ref());
            policy.validate()?;
            let exact = dim_forms(spec.nvars(), *degree as i64) <= RATIONAL_LIMIT;
            let (field, basis) = if exact {
                let basis = spec.instantiate(&Rationals)?.perp_basis(*degree)?;
                (
                    FieldSpec::Rational,
                    basis
                        .iter()
                        .map(|f| f.format_with(&spec.vars))
                        .collect::<Vec<_>>(),
                )
            } else {
                let f = policy.primary_field()?;
                let basis = spec.instantiate(&f)?.perp_basis(*degree)?;
                (
                    FieldSpec::Prime(policy.prime),
                    basis.iter().map(|f| f.format_with(&spec.vars)).collect(),
                )
            };
            let text = render::perp(*degree, &field, &basis);
            let report = RunReport {
                command: "perp".into(),
                input: ideal_echo(file, &spec),
                policy,
                result: json!({ "degree": degree, "field": field, "dim": basis.len(), "basis": basis }),
            };
            Ok((report, text))
        }
        Command::Arrangement { action } => {
            let policy = policy_for(g, None);
            policy.validate()?;
            let (name, input, result, text) = match action {
                ArrangementCommand::Splitting { file } => {
                    let arr = load_arrangement(file)?;
                    let r = generic_splitting(&arr, &policy)?;
                    let text = render::splitting(&r);
                    (
                        "arrangement splitting",
                        arr_echo(file, &arr),
                        serde_json::to_value(&r),
                        text,
                    )
                }
                ArrangementCommand::Free { file } => {
                    let arr = load_arrangement(file)?;
                    let r = free_search(&Rationals, &arr, &policy)?;
                    let text = render::freeness(&r);
                    (
                        "arrangement free",
                        arr_echo(file, &arr),
                        serde_json::to_value(&r),
                        text,
                    )
                }
                ArrangementCommand::Slp2 { file } => {
                    let arr = load_arrangement(file)?;
                    let r = slp2_bridge(&arr, &policy)?;
                    let text = render::bridge(&r);
                    (
                        "arrangement slp2",
                        arr_echo(file, &arr),
                        serde_json::to_value(&r),
                        text,
                    )
                }
                ArrangementCommand::Terao { free, other } => {
                    let a = load_arrangement(free)?;
                    let b = load_arrangement(other)?;
                    let r = terao_experiment(&a, &b, &policy)?;
                    let text = render::terao(&r);
                    let input = json!({ "free": arr_echo(free, &a), "other": arr_echo(other, &b) });
                    ("arrangement terao", input, serde_json::to_value(&r), text)
                }
            };
            let report = RunReport {
                command: name.into(),
                input,
                policy,
                result: result.expect("serializable"),
            };
            Ok((report, text))
        }
        Command::Catalog { action } => {
            let policy = policy_for(g, None);
            match action {
                CatalogCommand::List => {
                    let entries = catalog::entries();
                    let list: Vec<Value> = entries
                        .iter()
                        .map(|e| json!({ "name": e.name, "about": e.about }))
                        .collect();
                    let text = render::catalog_list(&entries);
                    let report = RunReport {
                        command: "catalog list".into(),
                        input: Value::Null,
                        policy,
                        result: json!(list),
                    };
                    Ok((report, text))
                }
                CatalogCommand::Run { name } => {
                    let start = Instant::now();
                    let run = catalog::run(name, &policy)?;
                    let text = render::catalog_run(&run, start.elapsed());
                    let report = RunReport {
                        command: "catalog run".into(),
                        input: json!({ "name": name }),
                        policy,
                        result: serde_json::to_value(&run).expect("serializable"),
                    };
                    Ok((report, text))
                }
            }
        }
    }
}

fn arr_echo(path: &Path, arr: &LineArrangement) -> Value {
    json!({ "file": path.display().to_string(), "lines": arr.coefficients() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match execute(&cli) {
        Ok((report, text)) => {
            let body = if cli.global.json {
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            } else if matches!(cli.command, Command::Catalog { .. }) {
                text
            } else {
                format!("{text}time: {:.3}s\n", start.elapsed().as_secs_f64())
            };
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            let mismatch = report.command == "catalog run"
                && report.result["failed"].as_u64().unwrap_or(0) > 0;
            if mismatch {
                finish(Err(Failure::Mismatch))
            } else {
                finish(Ok(()))
            }
        }
        Err(e) => finish(Err(e)),
    }
}

fn finish(r: Result<(), Failure>) -> ExitCode {
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
