//! Command-line front end. Every command writes one JSON document to stdout.

mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use weyl_lie::classify::classification_report;
use weyl_lie::enumerate::{enumerate_subalgebras, glossary_report};
use weyl_lie::fock_oracle::unitarity_defect;
use weyl_lie::igusa::{identity_check, symplectic_search};
use weyl_lie::lie_engine::search_chain;
use weyl_lie::wei_norman::{self, Algebra, Control, ControlSpec};
use weyl_lie::{lie_closure, named, Budget, LieSpan};

use input::{CliError, ControlsFile};

const EXIT_CODES: &str = "\
Exit codes:
  0  success (including closures that come out infinite or inconclusive)
  1  domain error, e.g. a basis that is not closed or a failed self-test
  2  usage error: bad flags, unreadable files, malformed JSON (the message names the field)

Environment:
  WEYL_LIE_THREADS  caps the worker pool used by enumerate and selftest";

#[derive(Debug, Parser)]
#[command(name = "weyl-lie", version, about = "Lie algebras generated by skew-hermitian Weyl polynomials", after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lie closure of a generator set: finite basis, infiniteness witness, or budget report.
    Closure {
        /// JSON array of polynomials.
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, default_value_t = 64)]
        budget_dim: usize,
        #[arg(long, default_value_t = 24)]
        budget_deg: u32,
    },
    /// Fingerprint and catalog class of a closed basis.
    Classify {
        /// JSON array of polynomials spanning a bracket-closed subspace.
        #[arg(long)]
        basis: PathBuf,
    },
    /// Subalgebras generated by subsets of a basis.
    Enumerate {
        /// JSON array of polynomials; defaults to the six Schrödinger monomials.
        #[arg(long)]
        basis: Option<PathBuf>,
        /// Group the Schrödinger enumeration by class instead of listing records.
        #[arg(long, conflicts_with = "basis")]
        glossary: bool,
        /// With --glossary, print a markdown table instead of JSON.
        #[arg(long, requires = "glossary")]
        markdown: bool,
    },
    /// Igusa-type infiniteness certificate for a pair of elements.
    Igusa {
        /// JSON file with one polynomial.
        #[arg(long)]
        e1: PathBuf,
        /// JSON file with one polynomial.
        #[arg(long)]
        e2: PathBuf,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Wei–Norman factors, residual and oracle fidelity for given controls.
    Simulate {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        /// JSON object `{"h": .., "n_steps": .., "controls": [..]}`.
        #[arg(long, required_unless_present = "preset", conflicts_with = "preset")]
        controls: Option<PathBuf>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        #[arg(long, default_value_t = 64)]
        fock_dim: usize,
        /// Also write `t, f1.., phase` rows to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Reproduces the commutator table and the glossary counts.
    Selftest,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Wh2,
    Schrodinger,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Wh2 => Algebra::Wh2,
            AlgebraArg::Schrodinger => Algebra::Schrodinger,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Preset {
    /// Constant drive `u1 = 1`, `u2 = 0.2` up to t = 2.
    Constant,
    /// `u1 = 1`, `u2 = 0.2 sin t`, `u3 = 0.2 cos t` (plus `u5 = 0.1 sin 2t`) up to t = 1.
    Sinusoid,
}

fn preset(algebra: Algebra, p: Preset) -> ControlSpec {
    let sin = |amplitude: f64, omega: f64, phase: f64| Control::Sinusoid {
        amplitude,
        omega,
        phase,
        offset: 0.0,
    };
    let (h, n_steps, mut controls) = match p {
        Preset::Constant => (1e-3, 2000, vec![Control::Constant(1.0), Control::Constant(0.2), Control::Constant(0.0)]),
        Preset::Sinusoid => (
            1e-3,
            1000,
            vec![Control::Constant(1.0), sin(0.2, 1.0, 0.0), sin(0.2, 1.0, std::f64::consts::FRAC_PI_2)],
        ),
    };
    if algebra == Algebra::Schrodinger {
        controls.push(Control::Constant(0.0));
        controls.push(match p {
            Preset::Constant => Control::Constant(0.0),
            Preset::Sinusoid => sin(0.1, 2.0, 0.0),
        });
    }
    ControlSpec {
        algebra,
        h,
        n_steps,
        controls,
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("WEYL_LIE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("WEYL_LIE_THREADS={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn closure(gens: PathBuf, budget: Budget) -> Result<serde_json::Value, CliError> {
    let gens = input::read_polys(&gens)?;
    Ok(serde_json::to_value(lie_closure(&gens, budget).report())?)
}

fn classify(basis: PathBuf) -> Result<serde_json::Value, CliError> {
    let elements = input::read_polys(&basis)?;
    let span = LieSpan::spanned_by(&elements);
    if let Some((i, j)) = span.closure_defect() {
        return Err(CliError::Domain(format!(
            "basis is not closed: the bracket of elements {i} and {j} leaves the span"
        )));
    }
    Ok(serde_json::to_value(classification_report(&span)?)?)
}

fn enumerate(basis: Option<PathBuf>, glossary: bool, markdown: bool) -> Result<Output, CliError> {
    if glossary {
        let report = glossary_report()?;
        return Ok(if markdown {
            Output::Text(report.to_markdown())
        } else {
            Output::Json(serde_json::to_value(report)?)
        });
    }
    let basis = match basis {
        Some(path) => input::read_polys(&path)?,
        None => named::schrodinger_basis(),
    };
    let records: Vec<_> = enumerate_subalgebras(&basis)?.iter().map(|r| r.to_json()).collect();
    Ok(Output::Json(serde_json::to_value(records)?))
}

fn igusa(e1: PathBuf, e2: PathBuf, samples: usize, seed: u64) -> Result<serde_json::Value, CliError> {
    let (x, y) = (input::read_poly(&e1)?, input::read_poly(&e2)?);
    let identity = identity_check(&x, &y)?;
    let found = symplectic_search(&x, &y, samples, seed)?;
    let chain = found
        .as_ref()
        .and_then(|_| search_chain(&[x.clone(), y.clone()], 8, 3))
        .map(|c| c.to_json());
    Ok(json!({
        "verdict": if found.is_some() { "infinite" } else { "inconclusive" },
        "identity_frame": identity.to_json(),
        "certificate": found.map(|c| c.to_json()),
        "chain": chain,
        "samples": samples,
        "seed": seed,
    }))
}

#[derive(Serialize)]
struct Fidelity {
    fock_dim: usize,
    t: f64,
    min_fidelity: f64,
    unitarity_defect_factored: f64,
    unitarity_defect_direct: f64,
}

fn simulate(
    algebra: Algebra,
    controls: Option<PathBuf>,
    preset_name: Option<Preset>,
    fock_dim: usize,
    csv_path: Option<PathBuf>,
) -> Result<serde_json::Value, CliError> {
    let spec = match (controls, preset_name) {
        (Some(path), _) => {
            let file: ControlsFile = input::read_json(&path)?;
            file.into_spec(algebra)
        }
        (None, Some(p)) => preset(algebra, p),
        (None, None) => return Err(CliError::Usage("either --controls or --preset is required".into())),
    };
    spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let sol = wei_norman::solve(&spec)?;
    let residual = wei_norman::residual_check(&spec, &sol)?;
    let last = spec.n_steps;
    let factored = wei_norman::factored_propagator_with_phase(&sol, last, fock_dim)?;
    let direct = wei_norman::direct_propagator(&spec, fock_dim, last)?;
    let interior = fock_dim.saturating_sub(4);
    let fidelity = Fidelity {
        fock_dim,
        t: spec.time(last),
        min_fidelity: wei_norman::min_fidelity(&factored, &direct),
        unitarity_defect_factored: unitarity_defect(&factored, interior),
        unitarity_defect_direct: unitarity_defect(&direct, interior),
    };
    if let Some(path) = csv_path {
        write_csv(&path, &spec, &sol).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(json!({
        "algebra": algebra,
        "method": format!("{:?}", sol.method),
        "h": spec.h,
        "n_steps": spec.n_steps,
        "f": sol.f,
        "phase": sol.phase,
        "error_estimate": sol.error_estimate,
        "residual": residual,
        "fidelity": fidelity,
    }))
}

fn write_csv(path: &PathBuf, spec: &ControlSpec, sol: &wei_norman::FactorSolution) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_path(path)?;
    let mut header = vec!["t".to_string()];
    header.extend((1..=sol.f.len()).map(|j| format!("f{j}")));
    header.push("phase".to_string());
    w.write_record(&header)?;
    for k in 0..sol.len() {
        let mut row = vec![spec.time(k).to_string()];
        row.extend(sol.f.iter().map(|f| f[k].to_string()));
        row.push(sol.phase[k].to_string());
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn selftest() -> Result<serde_json::Value, CliError> {
    let basis = named::schrodinger_basis();
    let table = named::table1();
    let mut failures = Vec::new();
    for entry in &table {
        let got = basis[entry.row].bracket(&basis[entry.col]);
        if got != entry.value {
            failures.push(format!(
                "[{}, {}] = {got}, expected {}",
                named::SCHRODINGER_LABELS[entry.row],
                named::SCHRODINGER_LABELS[entry.col],
                entry.value
            ));
        }
    }
    let table_ok = table.len() - failures.len();
    let glossary = glossary_report()?;
    let mismatches = glossary.mismatches();
    let report = vec![
        format!("table1: {table_ok}/{}", table.len()),
        format!("glossary: {} records, {} mismatches", glossary.total, mismatches.len()),
    ];
    let ok = failures.is_empty() && mismatches.is_empty();
    let value = json!({
        "ok": ok,
        "report": report,
        "failures": failures.into_iter().chain(mismatches).collect::<Vec<_>>(),
    });
    if ok {
        Ok(value)
    } else {
        Err(CliError::Failed(value))
    }
}

enum Output {
    Json(serde_json::Value),
    Text(String),
}

fn run(cli: Cli) -> Result<Output, CliError> {
    configure_threads()?;
    let json = match cli.command {
        Command::Closure {
            gens,
            budget_dim,
            budget_deg,
        } => closure(
            gens,
            Budget {
                max_dim: budget_dim,
                max_degree: budget_deg,
            },
        )?,
        Command::Classify { basis } => classify(basis)?,
        Command::Enumerate {
            basis,
            glossary,
            markdown,
        } => return enumerate(basis, glossary, markdown),
        Command::Igusa { e1, e2, samples, seed } => igusa(e1, e2, samples, seed)?,
        Command::Simulate {
            algebra,
            controls,
            preset,
            fock_dim,
            csv,
        } => simulate(algebra.into(), controls, preset, fock_dim, csv)?,
        Command::Selftest => selftest()?,
    };
    Ok(Output::Json(json))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &serde_json::Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize")));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Output::Json(v)) => {
            print_json(&v);
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(v)) => {
            print_json(&v);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
