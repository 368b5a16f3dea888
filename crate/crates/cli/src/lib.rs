//! `fockspec`: spectra of fermionic many-particle operators from the command
//! line.
//!
//! [`run`] does all the work and returns the rendered output instead of
//! printing it, so the binary is a thin wrapper and tests can call it
//! directly.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fock_spectra::dirac::{dirac_dgamma_spectrum, min_energy_sector, one_particle_spectrum, r3, BoxParams};
use fock_spectra::oracle::{verify_trials, DEFAULT_SET_TOL};
use fock_spectra::set::Component;
use fock_spectra::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "fockspec", version, about = "Spectra of fermionic n-particle and second-quantized operators")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Sum,
    Product,
}

impl From<Mode> for Composition {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sum => Composition::Sum,
            Mode::Product => Composition::Product,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Point spectrum of the additive n-particle operator.
    PointSum(SectorArgs),
    /// Point spectrum of the n-th exterior power.
    PointProd(SectorArgs),
    /// Spectrum (points and intervals) of the additive n-particle operator.
    SpectrumSum(SectorArgs),
    /// Spectrum of the n-th exterior power.
    SpectrumProd(SectorArgs),
    /// Spectrum of the additive second quantization, truncated at --nmax.
    Dgamma(FockArgs),
    /// Spectrum of the multiplicative second quantization, truncated at --nmax.
    Gamma(FockArgs),
    /// Point spectrum of a sum over distinguishable tensor factors.
    TensorSum(TensorArgs),
    /// Point spectrum of a tensor product of distinguishable factors.
    TensorProd(TensorArgs),
    /// Compare sector formulas with diagonalized compound matrices.
    Verify(VerifyArgs),
    /// Free Dirac fermions in a periodic box.
    Dirac(DiracArgs),
}

#[derive(Debug, Args)]
struct SectorArgs {
    /// Spectral-data file.
    #[arg(long, value_name = "FILE")]
    spec: PathBuf,
    /// Particle number.
    #[arg(long)]
    n: u64,
}

#[derive(Debug, Args)]
struct FockArgs {
    #[arg(long, value_name = "FILE")]
    spec: PathBuf,
    /// Highest particle-number sector included.
    #[arg(long)]
    nmax: u64,
    /// Restrict the output to the closed window LO:HI (dgamma only).
    #[arg(long, value_name = "LO:HI", value_parser = parse_window)]
    window: Option<(Scalar, Scalar)>,
    /// Use the point spectrum only.
    #[arg(long)]
    point: bool,
}

#[derive(Debug, Args)]
struct TensorArgs {
    /// One spectral-data file per tensor factor; repeat the flag.
    #[arg(long, value_name = "FILE", required = true)]
    spec: Vec<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// One-particle dimension.
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_SET_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Mode::Sum)]
    mode: Mode,
}

#[derive(Debug, Args)]
struct DiracArgs {
    /// Box side length.
    #[arg(long = "L", value_name = "FLOAT", default_value_t = 2.0 * PI)]
    side: f64,
    /// Bare mass.
    #[arg(long = "M", value_name = "FLOAT", default_value_t = 0.0)]
    mass: f64,
    /// List all many-fermion energies up to this value.
    #[arg(long)]
    cutoff: Option<f64>,
    /// Print the one-particle level table for |k|² up to this value.
    #[arg(long)]
    nmax: Option<u64>,
    /// Print the ground-state energy of the n-fermion sector.
    #[arg(long)]
    n: Option<u64>,
    /// Print the number of integer triples with a² + b² + c² = N.
    #[arg(long, value_name = "N")]
    r3: Option<u64>,
}

fn parse_window(s: &str) -> Result<(Scalar, Scalar), String> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got `{s}`"))?;
    let lo: Scalar = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: Scalar = hi.parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("window lower end {lo} exceeds upper end {hi}"));
    }
    Ok((lo, hi))
}

/// Exit code plus everything destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::fail(message),
    }
}

type CmdResult = Result<Outcome, String>;

fn dispatch(cli: &Cli) -> CmdResult {
    let format = cli.format;
    match &cli.command {
        Command::PointSum(a) => point_sector(a, Composition::Sum),
        Command::PointProd(a) => point_sector(a, Composition::Product),
        Command::SpectrumSum(a) => full_sector(a, Composition::Sum, format),
        Command::SpectrumProd(a) => full_sector(a, Composition::Product, format),
        Command::Dgamma(a) => fock(a, Composition::Sum, format),
        Command::Gamma(a) => fock(a, Composition::Product, format),
        Command::TensorSum(a) => tensor(a, Composition::Sum),
        Command::TensorProd(a) => tensor(a, Composition::Product),
        Command::Verify(a) => verify(a, format),
        Command::Dirac(a) => dirac(a, format),
    }
}

fn load(path: &Path) -> Result<SpectralData, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_spectral_data(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn point_sector(args: &SectorArgs, op: Composition) -> CmdResult {
    let data = load(&args.spec)?;
    let out = point_spectrum_nfold(data.points(), args.n, op).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(render_points(&out)))
}

fn full_sector(args: &SectorArgs, op: Composition, format: Format) -> CmdResult {
    let data = load(&args.spec)?;
    let out = spectrum_nfold(&data, args.n, op).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(render_set(&out, format)))
}

fn fock(args: &FockArgs, op: Composition, format: Format) -> CmdResult {
    let data = load(&args.spec)?;
    if op == Composition::Product && args.window.is_some() {
        return Err("--window applies to dgamma only".into());
    }
    match (op, args.point) {
        (Composition::Sum, true) => {
            let mut out = dgamma_point_spectrum(data.points(), args.nmax).map_err(|e| e.to_string())?;
            if let Some((lo, hi)) = &args.window {
                out.retain(|x| lo <= x && x <= hi);
            }
            Ok(Outcome::ok(render_points(&out)))
        }
        (Composition::Product, true) => {
            let out = gamma_point_spectrum(data.points(), args.nmax).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(render_points(&out)))
        }
        (Composition::Sum, false) => {
            let window = args.window.as_ref().map(|(lo, hi)| (lo, hi));
            let (out, report) = dgamma_spectrum(&data, args.nmax, window).map_err(|e| e.to_string())?;
            let mut outcome = Outcome::ok(render_set(&out, format));
            outcome.stderr = render_report(&report);
            Ok(outcome)
        }
        (Composition::Product, false) => {
            let out = gamma_spectrum(&data, args.nmax).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(render_set(&out, format)))
        }
    }
}

fn tensor(args: &TensorArgs, op: Composition) -> CmdResult {
    let factors = args
        .spec
        .iter()
        .map(|p| load(p).map(|d| d.points().clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let out = match op {
        Composition::Sum => tensor_point_spectrum_sum(&factors),
        Composition::Product => tensor_point_spectrum_product(&factors),
    }
    .map_err(|e| e.to_string())?;
    Ok(Outcome::ok(render_points(&out)))
}

fn verify(args: &VerifyArgs, format: Format) -> CmdResult {
    if args.dim == 0 {
        return Err("--dim must be at least 1".into());
    }
    if !(args.tol > 0.0) {
        return Err("--tol must be positive".into());
    }
    let reports =
        verify_trials(args.dim, args.n, args.trials, args.seed, args.tol, args.mode.into()).map_err(|e| e.to_string())?;
    let matched = reports.iter().filter(|r| r.matched).count();

    let mut stdout = String::new();
    let mut stderr = String::new();
    match format {
        Format::Text => writeln!(stdout, "{matched}/{} matched", reports.len()).unwrap(),
        Format::Csv => {
            stdout.push_str("trial,matched,max_deviation\n");
            for (t, r) in reports.iter().enumerate() {
                writeln!(stdout, "{t},{},{}", r.matched, format_float(r.max_deviation)).unwrap();
            }
        }
    }
    for (t, r) in reports.iter().enumerate().filter(|(_, r)| !r.matched) {
        writeln!(stderr, "trial {t} (seed {}): {r}", args.seed.wrapping_add(t as u64)).unwrap();
    }
    Ok(Outcome {
        code: if matched == reports.len() { EXIT_OK } else { EXIT_MISMATCH },
        stdout,
        stderr,
    })
}

fn dirac(args: &DiracArgs, format: Format) -> CmdResult {
    if let Some(n) = args.r3 {
        return Ok(Outcome::ok(format!("{}\n", r3(n))));
    }
    let params = BoxParams::new(args.side, args.mass).map_err(|e| e.to_string())?;
    let mut stdout = String::new();
    let mut stderr = String::new();
    let mut any = false;

    if let Some(n_max) = args.nmax {
        any = true;
        let table = one_particle_spectrum(&params, n_max);
        if format == Format::Csv {
            stdout.push_str("n,energy,multiplicity\n");
        }
        for l in &table.levels {
            match format {
                Format::Text => writeln!(stdout, "{} {} {}", l.n, format_float(l.energy), l.multiplicity),
                Format::Csv => writeln!(stdout, "{},{},{}", l.n, format_float(l.energy), l.multiplicity),
            }
            .unwrap();
        }
    }
    if let Some(n) = args.n {
        any = true;
        writeln!(stdout, "{}", format_float(min_energy_sector(&params, n))).unwrap();
    }
    if let Some(cutoff) = args.cutoff {
        any = true;
        let spectrum = dirac_dgamma_spectrum(&params, cutoff).map_err(|e| e.to_string())?;
        if format == Format::Csv {
            stdout.push_str("energy\n");
        }
        for e in &spectrum.energies {
            writeln!(stdout, "{}", format_float(*e)).unwrap();
        }
        if spectrum.merged > 0 {
            writeln!(stderr, "merged {} numerically coincident energies", spectrum.merged).unwrap();
        }
    }
    if !any {
        return Err("dirac needs one of --cutoff, --nmax, --n or --r3".into());
    }
    Ok(Outcome {
        code: EXIT_OK,
        stdout,
        stderr,
    })
}

/// Points render identically in text and CSV.
fn render_points(values: &BTreeSet<Scalar>) -> String {
    let mut out = String::new();
    for v in values {
        writeln!(out, "{v}").unwrap();
    }
    out
}

fn render_set(set: &RealSetUnion, format: Format) -> String {
    match format {
        Format::Text if set.is_empty() => String::new(),
        Format::Text => format!("{set}\n"),
        Format::Csv => {
            let mut out = String::new();
            for c in set.components() {
                match c {
                    Component::Point(x) => writeln!(out, "{x}"),
                    Component::Interval(iv) => writeln!(out, "{},{}", iv.lo(), iv.hi()),
                }
                .unwrap();
            }
            out
        }
    }
}

fn render_report(report: &TruncationReport) -> String {
    let mut line = format!("complete: {}", if report.complete { "yes" } else { "no" });
    if let Some(r) = report.required_n_max {
        write!(line, ", required nmax: {r}").unwrap();
    }
    if let Some(d) = &report.delta {
        write!(line, ", spectral gap: {d}").unwrap();
    }
    line.push('\n');
    line
}

/// `x` with 12 significant digits, trailing zeros trimmed; scientific
/// notation outside `1e-5 <= |x| < 1e12`.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (11 - exp) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
