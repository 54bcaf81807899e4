//! Command-line front end: single-state measurement, dynamics sweeps, phase
//! classification, monogamy scans and oracle certification.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or validation failure,
//! 3 tolerance breach.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dynamics::{self, bipartition_measures, boundary_scan, classify, pair_gqd, PairLabel};
use crate::error::Error;
use crate::measures::{concurrence_x, gqd1_x, measure_x, MeasureSet};
use crate::monogamy::{sweep_reports, COLUMNS};
use crate::oracle::{concurrence_wootters, gqd1_brute, gqd2_brute, OptimizerConfig};
use crate::sampling::{random_density, random_x_state};
use crate::state::{bloch_decompose, x_project, StateFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;

pub const GQD2_TOL: f64 = 1e-6;
pub const GQD1_LOWER_TOL: f64 = 1e-9;
pub const GQD1_UPPER_TOL: f64 = 5e-3;
pub const CONCURRENCE_TOL: f64 = 1e-10;

#[derive(Debug, Parser)]
#[command(name = "gqd", version, about = "Geometric quantum discords of few-qubit states")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct CommonArgs {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form measures of a two-qubit state read from JSON.
    Measure {
        /// State file (dense or pure JSON form).
        state: PathBuf,
        /// Also run the brute-force oracles and report the gaps.
        #[arg(long)]
        oracle: bool,
    },
    /// Pairwise and bipartite measures along the cavity-reservoir trajectory.
    Dynamics {
        /// Values of α: `a,b,c` or `start:stop:step`.
        #[arg(long, default_value = "0.7071067811865476")]
        alpha: String,
        /// Values of κt: `a,b,c` or `start:stop:step`.
        #[arg(long = "kt", default_value = "0:5:0.05")]
        kt: String,
        /// Comma-separated labels among c1c2, r1r2, c1r1, c1r2, c1_c2r2, c1_rest.
        #[arg(long, default_value = "c1c2,r1r2,c1r1,c1r2")]
        pairs: String,
    },
    /// Evolution type of the cavity-pair GQD-2 for each α, then the boundaries.
    Classify {
        #[arg(long, default_value = "0.1:0.95:0.05")]
        alpha: String,
    },
    /// Signed monogamy deficits centered on c1.
    Monogamy {
        #[arg(long, default_value = "0.7071067811865476")]
        alpha: String,
        #[arg(long = "kt", default_value = "0:5:0.05")]
        kt: String,
    },
    /// Compare closed forms against the brute-force oracles on random states.
    OracleCheck {
        /// Samples for the GQD-2 and concurrence comparisons.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Samples for the (expensive) GQD-1 comparison; capped by `samples`.
        #[arg(long, default_value_t = 10)]
        gqd1_samples: usize,
        /// Simplex starts per GQD-1 minimization.
        #[arg(long, default_value_t = 64)]
        starts: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(Error),
    Tolerance(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Tolerance(_) => EXIT_TOLERANCE,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Validation(e) => write!(f, "validation error: {e}"),
            CliError::Tolerance(m) => write!(f, "tolerance breach: {m}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Validation(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Output text and whether a tolerance check failed (the report is still
/// written in that case).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub breach: bool,
}

/// Decimal rendering with 12 significant digits, independent of locale.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let rounded: f64 = format!("{v:.11e}").parse().unwrap_or(v);
    let mag = rounded.abs();
    if rounded == 0.0 {
        "0".into()
    } else if !(1e-4..1e15).contains(&mag) {
        format!("{rounded:e}")
    } else {
        format!("{rounded}")
    }
}

/// Parses `a,b,c`, a single value, or an inclusive `start:stop:step` range.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, CliError> {
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("not a number: '{t}'")));
    let parts: Vec<&str> = s.split(':').collect();
    let grid = match parts.len() {
        1 => s.split(',').filter(|t| !t.trim().is_empty()).map(num).collect::<Result<Vec<_>, _>>()?,
        3 => {
            let (start, stop, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
            if !(step > 0.0) {
                return Err(CliError::Usage(format!("step must be positive in '{s}'")));
            }
            if stop < start {
                return Err(CliError::Usage(format!("empty range '{s}'")));
            }
            let n = ((stop - start) / step + 1e-9).floor() as usize;
            (0..=n).map(|i| start + step * i as f64).collect()
        }
        _ => return Err(CliError::Usage(format!("bad grid '{s}'"))),
    };
    if grid.is_empty() {
        return Err(CliError::Usage(format!("empty grid '{s}'")));
    }
    if grid.iter().any(|v| !v.is_finite()) {
        return Err(CliError::Usage(format!("non-finite value in '{s}'")));
    }
    Ok(grid)
}

fn parse_pairs(s: &str) -> Result<Vec<PairLabel>, CliError> {
    let v = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<PairLabel>().map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Err(CliError::Usage("no pair labels given".into()));
    }
    Ok(v)
}

fn measures_at(alpha: f64, kt: f64, label: PairLabel) -> crate::error::Result<MeasureSet<f64>> {
    let p = dynamics::point(alpha, kt)?;
    match label {
        PairLabel::C1C2R2 | PairLabel::C1Rest => bipartition_measures(&p, label),
        _ => pair_gqd(&p, label),
    }
}

fn cmd_dynamics(alpha: &str, kt: &str, pairs: &str) -> Result<Outcome, CliError> {
    let alphas = parse_grid(alpha)?;
    let kts = parse_grid(kt)?;
    let labels = parse_pairs(pairs)?;
    let mut jobs: Vec<(f64, f64, PairLabel)> = Vec::with_capacity(alphas.len() * kts.len() * labels.len());
    for &a in &alphas {
        for &k in &kts {
            jobs.extend(labels.iter().map(|&l| (a, k, l)));
        }
    }
    let rows = jobs
        .par_iter()
        .map(|&(a, k, l)| {
            let m = measures_at(a, k, l)?;
            Ok(format!(
                "{},{},{},{},{},{},{}\n",
                fmt_num(a),
                fmt_num(k),
                l,
                fmt_num(m.d_g1),
                fmt_num(m.d_g2),
                fmt_num(m.concurrence),
                fmt_num(m.d_g1 * m.d_g1 - m.d_g2)
            ))
        })
        .collect::<crate::error::Result<Vec<String>>>()?;
    let mut text = String::from("alpha,kappa_t,pair,dg1,dg2,concurrence,hierarchy_gap\n");
    rows.iter().for_each(|r| text.push_str(r));
    Ok(Outcome { text, breach: false })
}

fn cmd_classify(alpha: &str) -> Result<Outcome, CliError> {
    let alphas = parse_grid(alpha)?;
    let classes = alphas.par_iter().map(|&a| classify(a)).collect::<crate::error::Result<Vec<_>>>()?;
    let mut text = String::from("alpha,type,n_roots,root_1,root_2,revival_time\n");
    let opt = |v: Option<&f64>| v.map(|x| fmt_num(*x)).unwrap_or_default();
    for (a, c) in alphas.iter().zip(&classes) {
        let _ = writeln!(
            text,
            "{},{},{},{},{},{}",
            fmt_num(*a),
            c.kind,
            c.sudden_changes.len(),
            opt(c.sudden_changes.first()),
            opt(c.sudden_changes.get(1)),
            opt(c.revival.as_ref())
        );
    }
    let b = boundary_scan::<f64>()?;
    let _ = writeln!(text, "# alpha_revival,{}", fmt_num(b.alpha_revival));
    let _ = writeln!(text, "# alpha_sudden,{}", fmt_num(b.alpha_sudden));
    Ok(Outcome { text, breach: false })
}

fn cmd_monogamy(alpha: &str, kt: &str) -> Result<Outcome, CliError> {
    let alphas = parse_grid(alpha)?;
    let kts = parse_grid(kt)?;
    let mut text = format!("alpha,kappa_t,{}\n", COLUMNS.join(","));
    for &a in &alphas {
        let sweep = sweep_reports(a, &kts)?;
        for (k, r) in &sweep.rows {
            let vals: Vec<String> = r.values().iter().map(|v| fmt_num(*v)).collect();
            let _ = writeln!(text, "{},{},{}", fmt_num(a), fmt_num(*k), vals.join(","));
        }
    }
    Ok(Outcome { text, breach: false })
}

fn gap_json(closed: &MeasureSet<f64>, oracle: &MeasureSet<f64>) -> Value {
    json!({
        "dg1": oracle.d_g1 - closed.d_g1,
        "dg2": oracle.d_g2 - closed.d_g2,
        "concurrence": oracle.concurrence - closed.concurrence,
    })
}

fn cmd_measure(path: &PathBuf, oracle: bool, seed: u64) -> Result<Outcome, CliError> {
    let text = std::fs::read_to_string(path)?;
    let file: StateFile =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("cannot parse state file: {e}")))?;
    let rho = file.to_density()?;
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch { expected: 4, found: rho.dim() }.into());
    }
    let closed = match x_project(&rho) {
        Ok(x) => Some(measure_x(&x)?),
        Err(e @ Error::NotXShape { .. }) if !oracle => return Err(e.into()),
        Err(Error::NotXShape { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let mut out = match &closed {
        Some(m) => serde_json::to_value(m).expect("measure set serializes"),
        None => json!({}),
    };
    if oracle {
        let cfg = OptimizerConfig::with_seed(seed);
        let o = MeasureSet {
            d_g1: gqd1_brute(&rho, &cfg)?,
            d_g2: gqd2_brute(&rho, &cfg)?,
            concurrence: concurrence_wootters(&rho)?,
        };
        out["oracle"] = serde_json::to_value(o).expect("measure set serializes");
        if let Some(c) = &closed {
            out["gap"] = gap_json(c, &o);
        }
    }
    let mut s = serde_json::to_string_pretty(&out).expect("json value serializes");
    s.push('\n');
    Ok(Outcome { text: s, breach: false })
}

fn cmd_oracle_check(samples: usize, gqd1_samples: usize, starts: usize, seed: u64) -> Result<Outcome, CliError> {
    if samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    if starts == 0 {
        return Err(CliError::Usage("--starts must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dense =
        (0..samples).map(|_| random_density::<f64, _>(&mut rng, 4)).collect::<crate::error::Result<Vec<_>>>()?;
    let xs = (0..samples).map(|_| random_x_state::<f64, _>(&mut rng)).collect::<crate::error::Result<Vec<_>>>()?;
    let cfg = OptimizerConfig { starts, seed, ..OptimizerConfig::default() };

    let gqd2_gap = dense
        .par_iter()
        .map(|rho| Ok((gqd2_brute(rho, &cfg)? - crate::measures::gqd2_closed(&bloch_decompose(rho)?)?).abs()))
        .collect::<crate::error::Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let conc_gap = xs
        .par_iter()
        .map(|x| Ok((concurrence_wootters(&x.to_density()?)? - concurrence_x(x)).abs()))
        .collect::<crate::error::Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let gqd1: Vec<f64> = xs[..gqd1_samples.min(samples)]
        .par_iter()
        .map(|x| Ok(gqd1_brute(&x.to_density()?, &cfg)? - gqd1_x(x)))
        .collect::<crate::error::Result<Vec<f64>>>()?;
    let below = gqd1.iter().fold(0.0f64, |m, g| m.max(-g));
    let above = gqd1.iter().fold(0.0f64, |m, g| m.max(*g));

    let checks = [
        ("gqd2_max_abs_gap", gqd2_gap, gqd2_gap <= GQD2_TOL),
        ("concurrence_max_abs_gap", conc_gap, conc_gap <= CONCURRENCE_TOL),
        ("gqd1_max_below_closed", below, below <= GQD1_LOWER_TOL),
        ("gqd1_max_above_closed", above, above <= GQD1_UPPER_TOL),
    ];
    let mut text = String::from("check,value,status\n");
    for (name, v, ok) in checks {
        let _ = writeln!(text, "{name},{},{}", fmt_num(v), if ok { "pass" } else { "fail" });
    }
    let _ = writeln!(text, "# samples,{samples}");
    let _ = writeln!(text, "# gqd1_samples,{}", gqd1.len());
    Ok(Outcome { text, breach: checks.iter().any(|c| !c.2) })
}

/// Runs one parsed command inside a thread pool sized by `--jobs`.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.common.jobs {
        if j == 0 {
            return Err(CliError::Usage("--jobs must be positive".into()));
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| CliError::Usage(e.to_string()))?;
    pool.install(|| match &cli.command {
        Command::Measure { state, oracle } => cmd_measure(state, *oracle, cli.common.seed),
        Command::Dynamics { alpha, kt, pairs } => cmd_dynamics(alpha, kt, pairs),
        Command::Classify { alpha } => cmd_classify(alpha),
        Command::Monogamy { alpha, kt } => cmd_monogamy(alpha, kt),
        Command::OracleCheck { samples, gqd1_samples, starts } => {
            cmd_oracle_check(*samples, *gqd1_samples, *starts, cli.common.seed)
        }
    })
}

/// Parses arguments, runs the command, writes the output and returns the
/// process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{e}");
            return e.exit_code();
        }
    };
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("{}", CliError::Io(e));
        return EXIT_IO;
    }
    if outcome.breach {
        eprintln!("{}", CliError::Tolerance("see report".into()));
        return EXIT_TOLERANCE;
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.5), "0.5");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_num(2.0 / 3.0), "0.666666666667");
        assert_eq!(fmt_num(123456.7890123456), "123456.789012");
        assert_eq!(fmt_num(-1.1102230246251565e-16), "-1.11022302463e-16");
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("0:1:0.25").unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(parse_grid("0.1,0.2").unwrap(), vec![0.1, 0.2]);
        assert_eq!(parse_grid("0.3").unwrap(), vec![0.3]);
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("1:0:0.1").is_err());
        assert!(parse_grid("").is_err());
        assert!(parse_grid("a,b").is_err());
        assert_eq!(parse_grid("0.1:0.95:0.05").unwrap().len(), 18);
    }

    #[test]
    fn zero_samples_is_usage_error() {
        let e = cmd_oracle_check(0, 0, 1, 0).unwrap_err();
        assert_eq!(e.exit_code(), EXIT_VALIDATION);
    }
}
