//! Command-line front-end: solve, verify, orbit, and pairs.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use report::{Check, PairFiber, RunReport, SolutionJson};
use tauring::error::Error;
use tauring::forms::{
    builtin_form, builtin_sos, reference_components, split_components, verify_sos, QForm,
};
use tauring::golden_ring::GoldenVec;
use tauring::solver::{
    pair_candidates_d3, solutions_for_pair_d3, solve_oracle_with, solve_sos, OracleConfig,
    SolutionSet,
};
use tauring::symmetry::{
    coordinate_swap, orbit, preserves_form, solution_symmetry_group, tau_reflection,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_DISAGREEMENT: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INVALID_FORM: u8 = 65;
const EXIT_CAP_EXCEEDED: u8 = 66;

#[derive(Parser)]
#[command(
    name = "tauring",
    version,
    about = "Exact solver for quadratic-form Diophantine equations over the golden-ratio ring Z[τ]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Omit the elapsed-time field so identical reruns are byte-identical
    #[arg(long, global = true)]
    stable_output: bool,

    /// Worker threads for the oracle scan; the output is identical for any value
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,

    /// Safety cap on the number of points the oracle scan may visit
    #[arg(long, default_value_t = 1_000_000_000, global = true)]
    max_points: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Solve f(k) = 1 for a built-in or user-supplied positive definite form
    #[command(group(ArgGroup::new("target").required(true).args(["dim", "form"])))]
    Solve {
        /// Built-in form arity
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        dim: Option<u8>,

        /// JSON file with a custom form: {"d": n, "coeffs": [{"i","j","a","b"}, ...]}
        #[arg(long, value_name = "FILE")]
        form: Option<PathBuf>,

        /// Defaults to `both` for built-ins and `oracle` for custom forms
        #[arg(long, value_enum)]
        method: Option<Method>,
    },

    /// Check the component-equation fixtures, the sum-of-squares
    /// identity, and (for --dim 2) the symmetry-group relations
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        dim: u8,
    },

    /// Print the orbit of an arity-2 seed under the symmetry group
    Orbit {
        /// Seed vector, e.g. "1,0" or "(τ, τ)"
        seed: String,
    },

    /// List the admissible (a₂, b₃) pairs and their arity-3 solutions
    Pairs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Sos,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::LengthMismatch { .. } | Error::ArityMismatch { .. } => {
                EXIT_USAGE
            }
            Error::EnumerationCapExceeded { .. } | Error::GroupCapExceeded { .. } => {
                EXIT_CAP_EXCEEDED
            }
            _ => EXIT_INVALID_FORM,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match execute(&cli) {
        Ok((report, code)) => {
            let rendered = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => {
                    let mut s = report.to_json();
                    s.push('\n');
                    s
                }
                Format::Csv => report.to_csv(),
            };
            print!("{rendered}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn execute(cli: &Cli) -> Result<(RunReport, u8), Failure> {
    let started = Instant::now();
    let (mut report, code) = match &cli.command {
        Command::Solve { dim, form, method } => cmd_solve(cli, *dim, form.as_deref(), *method)?,
        Command::Verify { dim } => cmd_verify(*dim as usize)?,
        Command::Orbit { seed } => cmd_orbit(seed)?,
        Command::Pairs => cmd_pairs()?,
    };
    if !cli.stable_output {
        report.elapsed_ms = Some(started.elapsed().as_millis());
    }
    Ok((report, code))
}

/// Finds the built-in arity whose form equals `f`, if any; custom forms
/// have no known sum-of-squares decomposition.
fn matching_builtin(f: &QForm) -> Option<usize> {
    [2, 3, 4]
        .into_iter()
        .find(|&d| builtin_form(d).ok().as_ref() == Some(f))
}

fn cmd_solve(
    cli: &Cli,
    dim: Option<u8>,
    form_path: Option<&std::path::Path>,
    method: Option<Method>,
) -> Result<(RunReport, u8), Failure> {
    let (f, descriptor) = match (dim, form_path) {
        (Some(d), None) => (builtin_form(d as usize)?, format!("builtin d={d}")),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", path.display()))
            })?;
            let f = QForm::from_json_str(&text)?;
            let descriptor = format!("{} (d={})", path.display(), f.arity());
            (f, descriptor)
        }
        _ => unreachable!("clap group enforces exactly one of --dim/--form"),
    };
    if !f.is_positive_definite_both() {
        return Err(Error::NotPositiveDefinite.into());
    }
    let method = method.unwrap_or(if dim.is_some() {
        Method::Both
    } else {
        Method::Oracle
    });
    let oracle_cfg = OracleConfig {
        max_points: cli.max_points,
        jobs: cli.jobs,
    };

    let sos_input = match method {
        Method::Oracle => None,
        _ => match matching_builtin(&f) {
            Some(d) => Some(builtin_sos(d)?),
            None => {
                return Err(Failure::new(
                    EXIT_INVALID_FORM,
                    "no sum-of-squares decomposition is known for this form; \
                     use --method oracle",
                ))
            }
        },
    };

    let mut report = RunReport::new("solve");
    report.form = Some(descriptor);
    report.checks.push(Check::new(
        "form-positive-definite-both-embeddings",
        true,
    ));

    let (set, code): (SolutionSet, u8) = match method {
        Method::Sos => {
            report.method = Some("sos".into());
            (solve_sos(&f, sos_input.as_ref().unwrap())?, 0)
        }
        Method::Oracle => {
            report.method = Some("oracle".into());
            (solve_oracle_with(&f, &oracle_cfg)?, 0)
        }
        Method::Both => {
            report.method = Some("both".into());
            let by_sos = solve_sos(&f, sos_input.as_ref().unwrap())?;
            let by_oracle = solve_oracle_with(&f, &oracle_cfg)?;
            let agree = by_sos.same_solutions(&by_oracle);
            report
                .checks
                .push(Check::new("solve-sos-equals-solve-oracle", agree));
            (by_sos, if agree { 0 } else { EXIT_DISAGREEMENT })
        }
    };

    report.solution_count = Some(set.len());
    report.solutions = Some(set.iter().map(SolutionJson::from_vec).collect());
    Ok((report, code))
}

fn cmd_verify(d: usize) -> Result<(RunReport, u8), Failure> {
    let f = builtin_form(d)?;
    let split = split_components(&f);
    let reference = reference_components(d)?;
    let sos = builtin_sos(d)?;

    let mut report = RunReport::new("verify");
    report.form = Some(format!("builtin d={d}"));
    report.checks.push(Check::new(
        "form-positive-definite-both-embeddings",
        f.is_positive_definite_both(),
    ));
    report.checks.push(Check::new(
        "rational-component-matches-reference",
        split.a == reference.a,
    ));
    report.checks.push(Check::new(
        "tau-component-matches-reference",
        split.b == reference.b,
    ));
    report
        .checks
        .push(Check::new("sos-identity", verify_sos(&sos, &split)));

    if d == 2 {
        let swap = coordinate_swap();
        let refl = tau_reflection();
        let rot = swap.compose(&refl)?;
        let group = solution_symmetry_group();
        report.checks.push(Check::new(
            "swap-is-involution",
            swap.compose(&swap)?.is_identity(),
        ));
        report.checks.push(Check::new(
            "reflection-is-involution",
            refl.compose(&refl)?.is_identity(),
        ));
        report.checks.push(Check::new(
            "rotation-power-10-is-identity",
            rot.pow(10).is_identity(),
        ));
        report.checks.push(Check::new(
            "rotation-power-5-is-not-identity",
            !rot.pow(5).is_identity(),
        ));
        report
            .checks
            .push(Check::new("group-order-20", group.order() == 20));
        let mut preserved = true;
        for g in group.elements() {
            preserved &= preserves_form(g, &f)?;
        }
        report
            .checks
            .push(Check::new("group-preserves-form", preserved));
        let seed = GoldenVec::from_pairs(&[(1, 0), (0, 0)]);
        let orb = orbit(&group, &seed)?;
        let set = solve_sos(&f, &sos)?;
        report.checks.push(Check::new(
            "orbit-of-unit-equals-solution-set",
            orb == set.as_slice(),
        ));
    }

    let code = if report.all_checks_pass() {
        0
    } else {
        EXIT_CHECK_FAILED
    };
    Ok((report, code))
}

fn cmd_orbit(seed_text: &str) -> Result<(RunReport, u8), Failure> {
    let seed: GoldenVec = seed_text.parse()?;
    if seed.len() != 2 {
        return Err(Failure::new(
            EXIT_USAGE,
            format!("orbit seeds must have arity 2, got {}", seed.len()),
        ));
    }
    let group = solution_symmetry_group();
    let orb = orbit(&group, &seed)?;
    let mut report = RunReport::new("orbit");
    report.seed = Some(seed.to_string());
    report.solution_count = Some(orb.len());
    report.solutions = Some(orb.iter().map(SolutionJson::from_vec).collect());
    Ok((report, 0))
}

fn cmd_pairs() -> Result<(RunReport, u8), Failure> {
    let mut fibers = Vec::new();
    let mut union: Vec<GoldenVec> = Vec::new();
    for (a2, b3) in pair_candidates_d3() {
        let members = solutions_for_pair_d3((a2, b3))?;
        union.extend(members.iter().cloned());
        fibers.push(PairFiber {
            a2,
            b3,
            solution_count: members.len(),
            solutions: members.iter().map(SolutionJson::from_vec).collect(),
        });
    }
    union.sort();
    let disjoint = union.windows(2).all(|w| w[0] != w[1]);
    let full_set = solve_sos(&builtin_form(3)?, &builtin_sos(3)?)?;
    let covers = union == full_set.as_slice();

    let mut report = RunReport::new("pairs");
    report.form = Some("builtin d=3".into());
    report.pairs = Some(fibers);
    report
        .checks
        .push(Check::new("fibers-pairwise-disjoint", disjoint));
    report
        .checks
        .push(Check::new("fiber-union-equals-solution-set", covers));
    let code = if report.all_checks_pass() {
        0
    } else {
        EXIT_CHECK_FAILED
    };
    Ok((report, code))
}
