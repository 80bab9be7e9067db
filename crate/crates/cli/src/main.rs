//! `deformed-dicke`: generate, tabulate, verify, decompose and plot
//! undeformed, q-deformed and h-deformed multi-qubit states.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
//! range or computation errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use deformed_dicke::clebsch::{couple_chain, ASign, CoupledBasis};
use deformed_dicke::coproducts::DeformationTag;
use deformed_dicke::decomp::{acin3, schmidt2};
use deformed_dicke::export::{numeric_csv, state_svg, DecompositionExport, StateExport};
use deformed_dicke::hilbert::MAX_SITES;
use deformed_dicke::scalar::QValue;
use deformed_dicke::selector::{default_site_cap, resolve, Deformation, Parameter, ResolvedState, Selector};
use deformed_dicke::table::{NamedState, StateTable};
use deformed_dicke::verify::{run, Suite, VerifyOptions};

/// Overrides the per-deformation chain-size cap (never above the hard limit).
const MAX_N_ENV: &str = "DEFORMED_DICKE_MAX_N";

#[derive(Parser)]
#[command(name = "deformed-dicke", version, about = "Exact deformed Dicke states and their checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one state and write it as JSON or CSV.
    Generate(GenerateArgs),
    /// Write the full h-deformed coupled basis of N qubits as CSV.
    Table {
        /// Number of qubits, 2 to 4.
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites and report every check.
    Verify(VerifyArgs),
    /// Schmidt (2 qubits) or Acín (3 qubits) canonical form of a state.
    Decompose {
        kind: DecompositionKind,
        /// State selector such as `h:2:D-2`, `h:3:M1` or `ket:uu`.
        state: String,
        #[command(flatten)]
        parameter: ParameterArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Density-matrix heatmap of a state as SVG.
    Plot {
        /// State selector such as `h:2:M0`.
        state: String,
        #[command(flatten)]
        parameter: ParameterArgs,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct GenerateArgs {
    deformation: DeformationArg,
    /// Number of qubits.
    n: usize,
    /// Dicke state with this many excitations.
    #[arg(long, conflicts_with_all = ["path", "m"], required_unless_present = "path")]
    k: Option<usize>,
    /// Coupling-path label: D, M, V, T, R or Q.
    #[arg(long, requires = "m")]
    path: Option<char>,
    /// Twice the magnetic quantum number (the H eigenvalue) of the path state.
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i32>,
    #[command(flatten)]
    parameter: ParameterArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ParameterArgs {
    /// Jordanian deformation parameter used for numeric output.
    #[arg(long, allow_negative_numbers = true, conflicts_with = "q")]
    h: Option<f64>,
    /// Standard deformation parameter (positive).
    #[arg(long)]
    q: Option<f64>,
}

impl ParameterArgs {
    fn parameter(&self) -> Result<Parameter> {
        Ok(match (self.h, self.q) {
            (Some(h), _) if !h.is_finite() => bail!("h must be finite"),
            (Some(h), _) => Parameter::H(h),
            (None, Some(q)) => Parameter::Q(QValue::new(q)?),
            (None, None) => Parameter::None,
        })
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Largest chain size to check (each check also has its own limit).
    #[arg(long)]
    max_n: Option<usize>,
    /// Seed for the randomized instances.
    #[arg(long, default_value_t = VerifyOptions::default().seed)]
    seed: u64,
    /// Also write the machine-readable report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Drops the alternating sign of the CG a-array, to confirm the golden
    /// checks catch it.
    #[arg(long, hide = true)]
    flip_a_sign: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeformationArg {
    None,
    Q,
    H,
}

impl From<DeformationArg> for Deformation {
    fn from(d: DeformationArg) -> Self {
        match d {
            DeformationArg::None => Deformation::None,
            DeformationArg::Q => Deformation::Q,
            DeformationArg::H => Deformation::H,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecompositionKind {
    Schmidt,
    Acin,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Coproducts,
    Cg,
    Dicke,
    Identity,
    Decomp,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Coproducts => Suite::Coproducts,
            SuiteArg::Cg => Suite::Cg,
            SuiteArg::Dicke => Suite::Dicke,
            SuiteArg::Identity => Suite::Identity,
            SuiteArg::Decomp => Suite::Decomp,
            SuiteArg::All => Suite::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(command: Command) -> Result<ExitCode> {
    match command {
        Command::Generate(args) => generate(args)?,
        Command::Table { n, out } => table(n, out.as_deref())?,
        Command::Verify(args) => return verify(args),
        Command::Decompose { kind, state, parameter, out } => decompose(kind, &state, &parameter, out.as_deref())?,
        Command::Plot { state, parameter, out } => plot(&state, &parameter, &out)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn site_cap(deformation: Deformation) -> Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => {
            let n: usize = v.trim().parse().with_context(|| format!("{MAX_N_ENV}={v:?} is not a site count"))?;
            if n == 0 || n > MAX_SITES {
                bail!("{MAX_N_ENV} must be in 1..={MAX_SITES}");
            }
            Ok(n)
        }
        Err(std::env::VarError::NotPresent) => Ok(default_site_cap(deformation)),
        Err(e) => bail!("{MAX_N_ENV}: {e}"),
    }
}

/// Writes to `out` via a sibling temporary file and a rename, or to stdout.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    let Some(path) = out else {
        std::io::stdout().write_all(text.as_bytes())?;
        return Ok(());
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp =
        tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a file in {}", dir.display()))?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn load(text: &str, parameter: Parameter) -> Result<(Selector, ResolvedState)> {
    let selector: Selector = text.parse()?;
    let state = resolve(&selector, parameter, site_cap(selector.deformation())?)?;
    Ok((selector, state))
}

fn generate(args: GenerateArgs) -> Result<()> {
    let deformation = Deformation::from(args.deformation);
    let target = match (args.k, args.path, args.m) {
        (Some(k), _, _) => format!("k={k}"),
        (None, Some(label), Some(m)) => format!("{label}{m}"),
        _ => bail!("give either --k or both --path and --m"),
    };
    let text = format!("{deformation}:{}:{target}", args.n);
    let parameter = args.parameter.parameter()?;
    let (selector, state) = load(&text, parameter)?;
    let text = match args.format {
        Format::Json => StateExport::new(&selector, parameter, &state)?.to_json()?,
        Format::Csv => match &state {
            ResolvedState::Exact(s) => {
                StateTable::new(s.n_sites(), vec![NamedState { name: selector.label(), state: s.clone() }])?.to_csv()?
            }
            ResolvedState::Numeric(s) => numeric_csv(&selector.label(), s)?,
        },
    };
    emit(args.out.as_deref(), &text)
}

fn table(n: usize, out: Option<&Path>) -> Result<()> {
    if !(2..=4).contains(&n) {
        bail!("table size {n} is outside 2..=4");
    }
    let CoupledBasis::Exact(states) = couple_chain(n, DeformationTag::HExact)? else {
        unreachable!("the h coupling is exact");
    };
    let rows = states.into_iter().map(|s| NamedState { name: s.name(), state: s.state }).collect();
    emit(out, &StateTable::new(n, rows)?.to_csv()?)
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let options = VerifyOptions {
        max_n: args.max_n,
        cg_sign: if args.flip_a_sign { ASign::Flipped } else { ASign::Alternating },
        seed: args.seed,
    };
    let report = run(args.suite.into(), &options);
    print!("{report}");
    if let Some(path) = &args.json {
        emit(Some(path), &report.to_json()?)?;
    }
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn decompose(kind: DecompositionKind, state_text: &str, parameter: &ParameterArgs, out: Option<&Path>) -> Result<()> {
    let parameter = parameter.parameter()?;
    let (selector, state) = load(state_text, parameter)?;
    let h = match parameter {
        Parameter::H(h) => Some(h),
        _ => None,
    };
    let numeric = state.numeric(h)?;
    let n = numeric.n_sites();
    let export = match kind {
        DecompositionKind::Schmidt if n == 2 => {
            DecompositionExport::schmidt(&selector, parameter, &schmidt2(&numeric)?)
        }
        DecompositionKind::Acin if n == 3 => DecompositionExport::acin(&selector, parameter, &acin3(&numeric)?),
        DecompositionKind::Schmidt => bail!("the Schmidt form needs 2 qubits, {selector} has {n}"),
        DecompositionKind::Acin => bail!("the Acín form needs 3 qubits, {selector} has {n}"),
    };
    emit(out, &export.to_json()?)
}

fn plot(state_text: &str, parameter: &ParameterArgs, out: &Path) -> Result<()> {
    let parameter = parameter.parameter()?;
    let selector: Selector = state_text.parse()?;
    if selector.n_sites() > 4 {
        bail!("plots are limited to 4 qubits, {selector} has {}", selector.n_sites());
    }
    let (selector, state) = load(state_text, parameter)?;
    let (h, title) = match parameter {
        Parameter::H(h) => (Some(h), format!("{selector}, h = {h}")),
        Parameter::Q(q) => (None, format!("{selector}, q = {}", q.value())),
        Parameter::None => (None, selector.to_string()),
    };
    emit(Some(out), &state_svg(&state.numeric(h)?, &title)?)
}
