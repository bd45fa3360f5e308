//! Command-line front end: argument parsing, validation and report files.

mod input;

pub use input::{read_table, FunctionSpec, GridSpec};

use crate::bessel_bases::{lp_rate, Bandwidth, Family};
use crate::expansions::{default_probes, expansion_report, EXPANSION_MARGIN};
use crate::prolate_core::{
    basis_from_json, basis_to_json, build_basis, default_truncation, Construction, ProlateBasis,
};
use crate::specfun::Order;
use crate::transforms::{
    fourier_out_of_band, hankel_out_of_band, muckenhoupt_estimate, operator_norm_scan, project_fourier,
    project_hankel, FourierRoute, HankelRoute, Projector, TestFunction, WeightSpec,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Exit status for invalid configuration.
pub const EXIT_CONFIG: i32 = 2;
/// Exit status for numerical failure.
pub const EXIT_NUMERICS: i32 = 3;
/// Exit status for unreadable input or unwritable output.
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerics(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Numerics(_) => EXIT_NUMERICS,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

fn numerics<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Numerics(e.to_string())
}

#[derive(Debug, Parser, Serialize)]
#[command(name = "prolatekit", version, about = "Prolate bases, band-limiting projectors and expansion diagnostics")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
pub enum Command {
    /// Build a PSWF or CPSWF basis and write it as JSON.
    Basis(BasisArgs),
    /// Expand a function in a stored basis and tabulate convergence.
    Expand(ExpandArgs),
    /// Apply a band-limiting projector.
    Project(ProjectArgs),
    /// Fitted L^p decay rates of the spherical Bessel functions.
    Rates(RatesArgs),
    /// Dyadic Muckenhoupt bracket estimates of a weight.
    Apweight(ApweightArgs),
    /// Lower bounds on projector operator norms over a test family.
    Normscan(NormscanArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum FamilyArg {
    Fourier,
    Hankel,
}

#[derive(Debug, Args, Serialize)]
pub struct FamilyArgs {
    #[arg(long, value_enum, default_value = "fourier")]
    pub family: FamilyArg,
    /// Hankel order, required for `--family hankel`.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Band limit (angular frequency).
    #[arg(long)]
    pub c: f64,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<(Family, Bandwidth), CliError> {
        let c = Bandwidth::new(self.c).map_err(|e| CliError::Config(e.to_string()))?;
        let family = match (self.family, self.alpha) {
            (FamilyArg::Fourier, None) => Family::Fourier,
            (FamilyArg::Fourier, Some(_)) => {
                return Err(CliError::Config("--alpha applies to the hankel family only".into()))
            }
            (FamilyArg::Hankel, Some(a)) => Family::Hankel(Order::new(a).map_err(|e| CliError::Config(e.to_string()))?),
            (FamilyArg::Hankel, None) => return Err(CliError::Config("--family hankel needs --alpha".into())),
        };
        Ok((family, c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum ConstructionArg {
    Tridiagonal,
    Gram,
}

#[derive(Debug, Args, Serialize)]
pub struct BasisArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Truncation; defaults to ceil(2c/pi) + 40.
    #[arg(long = "K")]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value = "tridiagonal")]
    pub construction: ConstructionArg,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct ExpandArgs {
    /// Basis JSON written by `basis`.
    #[arg(long)]
    pub basis: PathBuf,
    /// `builtin:jn:<n>`, `builtin:psi:<n>`, `builtin:fejer`, `builtin:bump:<scale>` or a CSV path.
    #[arg(long)]
    pub function: String,
    /// Largest truncation; defaults to K - 10.
    #[arg(long = "N")]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,
    /// Probe grid `a:b:count`; defaults to i sqrt(2)/10, i = 1..10.
    #[arg(long)]
    pub probes: Option<String>,
    /// Also write the coefficient table here.
    #[arg(long)]
    #[serde(skip)]
    pub coefficients: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum RouteArg {
    Sinc,
    Hilbert,
    Lommel,
    WeightedHilbert,
    Spectral,
}

#[derive(Debug, Args, Serialize)]
pub struct ProjectArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub function: String,
    /// Defaults to `sinc` (fourier) or `lommel` (hankel).
    #[arg(long, value_enum)]
    pub route: Option<RouteArg>,
    /// Truncation of the basis used by `builtin:psi`.
    #[arg(long = "K")]
    pub k: Option<usize>,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct RatesArgs {
    #[arg(long, value_enum, default_value = "fourier")]
    pub family: FamilyArg,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Comma-separated exponents.
    #[arg(long, value_delimiter = ',', required = true)]
    pub p: Vec<f64>,
    #[arg(long, default_value_t = 10)]
    pub nmin: usize,
    #[arg(long, default_value_t = 80)]
    pub nmax: usize,
    /// Also write the per-n norms here.
    #[arg(long)]
    #[serde(skip)]
    pub norms: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct ApweightArgs {
    /// Power weight x^beta.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Piecewise-constant weight: `x,value` rows, value held on [x_i, x_{i+1}).
    #[arg(long, conflicts_with = "beta")]
    pub weight: Option<PathBuf>,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 12)]
    pub depth: usize,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, default_value_t = 1.0)]
    pub b: f64,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct NormscanArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub q: f64,
    /// Number of test functions.
    #[arg(long, default_value_t = 20)]
    pub count: usize,
    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

/// SHA-256 of the configuration with output paths left out.
pub fn config_hash(config: &RunConfig) -> String {
    let json = serde_json::to_string(config).expect("config serialises");
    Sha256::digest(json.as_bytes()).iter().fold(String::new(), |mut s, b| {
        write!(s, "{b:02x}").unwrap();
        s
    })
}

fn provenance(config: &RunConfig) -> String {
    format!("# prolatekit {} config-sha256 {}\n", env!("CARGO_PKG_VERSION"), config_hash(config))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("PROLATEKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Config(format!("PROLATEKIT_THREADS must be a positive integer, got {v}")))?;
    // a pool built earlier in the same process is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parse `args` (including the program name), run, and return the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { 0 };
        }
    };
    match configure_threads().and_then(|_| execute(&config)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("prolatekit: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(config: &RunConfig) -> Result<(), CliError> {
    match &config.command {
        Command::Basis(a) => cmd_basis(a),
        Command::Expand(a) => cmd_expand(config, a),
        Command::Project(a) => cmd_project(config, a),
        Command::Rates(a) => cmd_rates(config, a),
        Command::Apweight(a) => cmd_apweight(config, a),
        Command::Normscan(a) => cmd_normscan(config, a),
    }
}

fn construct(family: Family, c: Bandwidth, k: Option<usize>, how: Construction) -> Result<ProlateBasis, CliError> {
    let k = k.unwrap_or_else(|| default_truncation(c));
    if k < 4 {
        return Err(CliError::Config(format!("--K must be at least 4, got {k}")));
    }
    build_basis(family, c, k, how).map_err(numerics)
}

pub fn cmd_basis(a: &BasisArgs) -> Result<(), CliError> {
    let (family, c) = a.family.resolve()?;
    let how = match a.construction {
        ConstructionArg::Tridiagonal => Construction::Tridiagonal,
        ConstructionArg::Gram => Construction::Gram,
    };
    let basis = construct(family, c, a.k, how)?;
    emit(a.out.as_deref(), &basis_to_json(&basis))
}

pub fn cmd_expand(config: &RunConfig, a: &ExpandArgs) -> Result<(), CliError> {
    let spec: FunctionSpec = a.function.parse().map_err(CliError::Config)?;
    let probes = match &a.probes {
        Some(s) => s.parse::<GridSpec>().map_err(CliError::Config)?.points(),
        None => default_probes(),
    };
    if !(a.p >= 1.0 && a.p.is_finite()) {
        return Err(CliError::Config(format!("--p must lie in [1, inf), got {}", a.p)));
    }
    let text = std::fs::read_to_string(&a.basis).map_err(|e| CliError::Io(format!("{}: {e}", a.basis.display())))?;
    let basis = basis_from_json(&text).map_err(|e| CliError::Config(e.to_string()))?;
    let limit = basis.k.saturating_sub(EXPANSION_MARGIN);
    let n_max = a.n_max.unwrap_or(limit);
    if n_max > limit {
        return Err(CliError::Config(format!("--N {n_max} exceeds K - {EXPANSION_MARGIN} = {limit}")));
    }
    if let Family::Hankel(_) = basis.family {
        if probes.iter().any(|x| *x <= 0.0) {
            return Err(CliError::Config("hankel probes must be positive".into()));
        }
    }
    let f = spec.sample(basis.family, basis.c, Some(&basis))?;
    let report = expansion_report(&f, &basis, n_max, a.p, &probes).map_err(numerics)?;
    let head = provenance(config);
    if let Some(path) = &a.coefficients {
        emit(Some(path), &format!("{head}{}", report.coefficients_csv()))?;
    }
    emit(a.out.as_deref(), &format!("{head}{}", report.to_csv()))
}

pub fn cmd_project(config: &RunConfig, a: &ProjectArgs) -> Result<(), CliError> {
    let (family, c) = a.family.resolve()?;
    let spec: FunctionSpec = a.function.parse().map_err(CliError::Config)?;
    let basis = if spec.needs_basis() { Some(construct(family, c, a.k, Construction::Tridiagonal)?) } else { None };
    let f = spec.sample(family, c, basis.as_ref())?;
    let (out, mass) = match family {
        Family::Fourier => {
            let route = match a.route {
                None | Some(RouteArg::Sinc) => FourierRoute::Sinc,
                Some(RouteArg::Hilbert) => FourierRoute::Hilbert,
                Some(r) => return Err(CliError::Config(format!("route {r:?} is not a fourier route"))),
            };
            let g = project_fourier(&f, c, route).map_err(numerics)?;
            let mass = fourier_out_of_band(&g, c).map_err(numerics)?;
            (g, mass)
        }
        Family::Hankel(alpha) => {
            let route = match a.route {
                None | Some(RouteArg::Lommel) => HankelRoute::Lommel,
                Some(RouteArg::WeightedHilbert) => HankelRoute::WeightedHilbert,
                Some(RouteArg::Spectral) => HankelRoute::Spectral,
                Some(r) => return Err(CliError::Config(format!("route {r:?} is not a hankel route"))),
            };
            let g = project_hankel(&f, alpha, c, route).map_err(numerics)?;
            let mass = hankel_out_of_band(&g, alpha, c).map_err(numerics)?;
            (g, mass)
        }
    };
    let mut s = provenance(config);
    writeln!(s, "# out_of_band_mass {mass:.16e}").unwrap();
    s.push_str("x,value\n");
    for (x, v) in out.grid.nodes.iter().zip(&out.values) {
        writeln!(s, "{x:.16e},{v:.16e}").unwrap();
    }
    emit(a.out.as_deref(), &s)
}

pub fn cmd_rates(config: &RunConfig, a: &RatesArgs) -> Result<(), CliError> {
    let (family, c) = FamilyArgs { family: a.family, alpha: a.alpha, c: a.c }.resolve()?;
    if a.nmin < 1 || a.nmax <= a.nmin {
        return Err(CliError::Config(format!("need 1 <= nmin < nmax, got {}..{}", a.nmin, a.nmax)));
    }
    if let Some(p) = a.p.iter().find(|p| !(**p > 1.0 && p.is_finite())) {
        return Err(CliError::Config(format!("--p entries must lie in (1, inf), got {p}")));
    }
    let ns: Vec<usize> = (a.nmin..=a.nmax).collect();
    let mut rates = Vec::with_capacity(a.p.len());
    for &p in &a.p {
        rates.push(lp_rate(p, family, c, &ns).map_err(numerics)?);
    }
    let head = provenance(config);
    let mut s = head.clone();
    s.push_str("p,slope,predicted,n_min,n_max,log_band_min,log_band_max\n");
    for r in &rates {
        let predicted = r.predicted.map_or("nan".to_string(), |v| format!("{v:.16e}"));
        let (lo, hi) = r.log_band();
        writeln!(s, "{},{:.16e},{predicted},{},{},{lo:.16e},{hi:.16e}", r.p, r.slope, a.nmin, a.nmax).unwrap();
    }
    if let Some(path) = &a.norms {
        let mut t = head;
        t.push_str("p,n,norm\n");
        for r in &rates {
            for (n, v) in &r.norms {
                writeln!(t, "{},{n},{v:.16e}", r.p).unwrap();
            }
        }
        emit(Some(path), &t)?;
    }
    emit(a.out.as_deref(), &s)
}

fn tabulated_weight(path: &Path) -> Result<WeightSpec, CliError> {
    let (breaks, mut values) = read_table(path)?;
    values.pop();
    Ok(WeightSpec::Tabulated { breaks, values })
}

pub fn cmd_apweight(config: &RunConfig, a: &ApweightArgs) -> Result<(), CliError> {
    let omega = match (&a.beta, &a.weight) {
        (Some(beta), None) => WeightSpec::Power { beta: *beta },
        (None, Some(path)) => tabulated_weight(path)?,
        _ => return Err(CliError::Config("give exactly one of --beta and --weight".into())),
    };
    if !(a.p > 1.0 && a.p.is_finite()) {
        return Err(CliError::Config(format!("--p must lie in (1, inf), got {}", a.p)));
    }
    if a.depth > 30 {
        return Err(CliError::Config(format!("--depth {} is above 30", a.depth)));
    }
    let report = muckenhoupt_estimate(&omega, a.p, (a.a, a.b), a.depth).map_err(|e| CliError::Config(e.to_string()))?;
    emit(a.out.as_deref(), &format!("{}{}", provenance(config), report.to_csv()))
}

pub fn cmd_normscan(config: &RunConfig, a: &NormscanArgs) -> Result<(), CliError> {
    let (family, c) = a.family.resolve()?;
    if !(a.p > 1.0 && a.p.is_finite() && a.q >= a.p && a.q.is_finite()) {
        return Err(CliError::Config(format!("need 1 < p <= q < inf, got p = {}, q = {}", a.p, a.q)));
    }
    if a.count == 0 {
        return Err(CliError::Config("--count must be positive".into()));
    }
    let op = match family {
        Family::Fourier => Projector::Fourier { c },
        Family::Hankel(alpha) => Projector::Hankel { alpha, c },
    };
    let family = TestFunction::standard_family(&op, a.count);
    let report = operator_norm_scan(&op, a.p, a.q, &family).map_err(numerics)?;
    emit(a.out.as_deref(), &format!("{}{}", provenance(config), report.to_csv()))
}
