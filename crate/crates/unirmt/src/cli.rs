//! Command-line front end: distribution queries, the three tests on user
//! data, and simulation presets.
//!
//! Exit codes: 0 success, 2 usage/input errors, 1 runtime math errors.
//! Every success path emits machine-parseable output (JSON by default, CSV
//! with `--format csv`) and echoes the resolved configuration.

use crate::error::Error;
use crate::io::{read_grouped_csv, read_matrix_csv, write_output};
use crate::linalg::{DataMatrix, Orientation};
use crate::mat::Mat;
use crate::report::TestReport;
use crate::sim::{DimsSpec, DistributionKind, Scenario, SimConfig};
use crate::tw::Tw1Table;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "unirmt",
    version,
    about = "Largest-root tests calibrated by the Tracy-Widom law",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Replacement distribution table: two-column CSV (abscissa, cdf)
    #[arg(long, global = true, value_name = "CSV")]
    tw_table: Option<PathBuf>,

    /// Write output here instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Query the type-1 Tracy-Widom distribution
    Tw(TwArgs),
    /// Independence test between two observed random vectors
    TestCca(TestCcaArgs),
    /// Equality-of-means test across groups
    TestManova(TestManovaArgs),
    /// Linear or intra-subject hypothesis in the multivariate linear model
    TestLm(TestLmArgs),
    /// Run a seeded Monte-Carlo experiment
    Simulate(SimulateArgs),
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct TwArgs {
    /// CDF at this point
    #[arg(long, value_name = "S", conflicts_with_all = ["quantile", "pvalue"])]
    cdf: Option<f64>,
    /// Quantile at this probability
    #[arg(long, value_name = "P", conflicts_with = "pvalue")]
    quantile: Option<f64>,
    /// Upper-tail probability at this point
    #[arg(long, value_name = "S")]
    pvalue: Option<f64>,
}

#[derive(Args, Debug)]
struct TestCcaArgs {
    /// First sample, observations-in-rows CSV
    #[arg(long, value_name = "CSV")]
    z: PathBuf,
    /// Second sample, observations-in-rows CSV
    #[arg(long, value_name = "CSV")]
    y: PathBuf,
    /// Significance level in (0, 1)
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
}

#[derive(Args, Debug)]
struct TestManovaArgs {
    /// One CSV per group (repeat the flag); observations-in-rows
    #[arg(long = "group", value_name = "CSV")]
    groups: Vec<PathBuf>,
    /// Single CSV with a group-label column
    #[arg(long, value_name = "CSV", conflicts_with = "groups")]
    data: Option<PathBuf>,
    /// Zero-based index of the label column in --data
    #[arg(long, default_value_t = 0, requires = "data")]
    label_column: usize,
    /// Significance level in (0, 1)
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
}

#[derive(Args, Debug)]
struct TestLmArgs {
    /// Responses Y, observations-in-rows CSV (N x p2)
    #[arg(long, value_name = "CSV")]
    y: PathBuf,
    /// Design X, observations-in-rows CSV (N x p1)
    #[arg(long, value_name = "CSV")]
    x: PathBuf,
    /// Hypothesis rows C (g1 x p1)
    #[arg(long, value_name = "CSV")]
    c: PathBuf,
    /// Optional response-side contrast D (p2 x g2); switches to the
    /// intra-subject route
    #[arg(long, value_name = "CSV")]
    d: Option<PathBuf>,
    /// Hypothesized value (g1 x p2, or g1 x g2 with --d); defaults to zeros
    #[arg(long, value_name = "CSV")]
    gamma: Option<PathBuf>,
    /// Significance level in (0, 1)
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PresetArg {
    Table1,
    Table2,
    Table3,
    Table4,
    Custom,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DistArg {
    Normal,
    Discrete,
    Gamma,
}

impl DistArg {
    fn kind(self) -> DistributionKind {
        match self {
            DistArg::Normal => DistributionKind::StandardNormal,
            DistArg::Discrete => DistributionKind::DiscreteThreePoint,
            DistArg::Gamma => DistributionKind::StandardizedGamma,
        }
    }
}

#[derive(Args, Debug)]
struct SimulateArgs {
    /// Experiment preset; table presets pin the reference dimension tuples
    #[arg(long, value_enum)]
    preset: PresetArg,
    /// Dimension tuple m1,n1,n2,n for --preset custom
    #[arg(long, value_name = "M1,N1,N2,N")]
    quad: Option<String>,
    /// Data distribution (preset default when omitted)
    #[arg(long, value_enum)]
    dist: Option<DistArg>,
    /// Replications per cell
    #[arg(long, default_value_t = 2000)]
    reps: usize,
    /// Magnification factor applied to the dimension tuple
    #[arg(long, default_value_t = 1)]
    mag: usize,
    /// Master seed for the replication streams
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Significance level for rejection-rate cells
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Dependence levels for the table2 preset, comma separated
    #[arg(long, value_name = "T1,T2,...")]
    tau: Option<String>,
    /// Worker threads (0 = all available cores)
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

/// Parses argv and runs one command; returns the process exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!(
                "{}",
                json!({"error": {"kind": error_kind(&e), "message": e.to_string()}})
            );
            exit_code(&e)
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Dimension(_) => "invalid-dimension",
        Error::Argument(_) => "invalid-argument",
        Error::RankDeficient { .. } => "rank-deficient",
        Error::NotPositiveDefinite(_) => "not-positive-definite",
        Error::Orthogonality(_) => "orthogonality-violation",
        Error::Calibration(_) => "calibration-domain",
        Error::NoRoot { .. } => "no-root",
        Error::Saturated => "saturated",
        Error::NonConvergence(_) => "non-convergence",
        Error::Config(_) => "invalid-config",
        Error::Io(_) => "io",
        Error::Parse { .. } => "parse",
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Dimension(_)
        | Error::Argument(_)
        | Error::Config(_)
        | Error::Io(_)
        | Error::Parse { .. } => 2,
        _ => 1,
    }
}

fn load_table(path: &Option<PathBuf>) -> crate::error::Result<Tw1Table> {
    match path {
        Some(p) => Tw1Table::from_csv(p),
        None => Ok(Tw1Table::builtin().clone()),
    }
}

fn dispatch(cli: Cli) -> crate::error::Result<()> {
    let tw = load_table(&cli.tw_table)?;
    let out = cli.out.as_deref();
    match cli.cmd {
        Cmd::Tw(args) => {
            let (query, input, value) = match (args.cdf, args.quantile, args.pvalue) {
                (Some(s), None, None) => ("cdf", s, tw.cdf(s)?),
                (None, Some(p), None) => ("quantile", p, tw.quantile(p)?),
                (None, None, Some(s)) => ("pvalue", s, tw.pvalue(s)?),
                _ => {
                    return Err(Error::Config(
                        "pass exactly one of --cdf, --quantile, --pvalue".into(),
                    ))
                }
            };
            let content = match cli.format {
                FormatArg::Json => format!(
                    "{}\n",
                    json!({"command": "tw", "query": query, "input": input, "value": value})
                ),
                FormatArg::Csv => {
                    format!("query,input,value\n{query},{input},{value}\n")
                }
            };
            write_output(out, &content)
        }
        Cmd::TestCca(args) => {
            let z = DataMatrix::new(read_matrix_csv(&args.z)?, Orientation::ObservationsInRows)?;
            let y = DataMatrix::new(read_matrix_csv(&args.y)?, Orientation::ObservationsInRows)?;
            let input = crate::cca::CcaInput::new(z, y, args.alpha)?;
            let report = crate::cca::cca_independence_test(&input, &tw)?;
            let config = json!({
                "z": args.z.display().to_string(),
                "y": args.y.display().to_string(),
                "alpha": args.alpha,
            });
            emit_report(out, cli.format, "test-cca", config, &report)
        }
        Cmd::TestManova(args) => {
            let mats: Vec<Mat> = if let Some(data) = &args.data {
                read_grouped_csv(data, args.label_column)?
                    .into_iter()
                    .map(|(_, m)| m)
                    .collect()
            } else {
                if args.groups.len() < 2 {
                    return Err(Error::Config(
                        "pass --group at least twice, or --data with a label column".into(),
                    ));
                }
                args.groups
                    .iter()
                    .map(|p| read_matrix_csv(p))
                    .collect::<crate::error::Result<_>>()?
            };
            let groups = mats
                .into_iter()
                .map(|m| DataMatrix::new(m, Orientation::ObservationsInRows))
                .collect::<crate::error::Result<Vec<_>>>()?;
            let sample = crate::manova::GroupedSample::new(groups, args.alpha)?;
            let report = crate::manova::manova_test(&sample, &tw)?;
            let config = json!({
                "groups": args.groups.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
                "data": args.data.as_ref().map(|p| p.display().to_string()),
                "label_column": args.data.as_ref().map(|_| args.label_column),
                "alpha": args.alpha,
            });
            emit_report(out, cli.format, "test-manova", config, &report)
        }
        Cmd::TestLm(args) => {
            let y = DataMatrix::new(read_matrix_csv(&args.y)?, Orientation::ObservationsInRows)?;
            let x = DataMatrix::new(read_matrix_csv(&args.x)?, Orientation::ObservationsInRows)?;
            let c = read_matrix_csv(&args.c)?;
            let d = args.d.as_ref().map(|p| read_matrix_csv(p)).transpose()?;
            let response_cols = match &d {
                Some(d) => d.cols(),
                None => y.n_variables(),
            };
            let gamma = match &args.gamma {
                Some(p) => read_matrix_csv(p)?,
                None => Mat::zeros(c.rows(), response_cols),
            };
            let input =
                crate::linmodel::LinModelInput::new(y, x, c, d.clone(), gamma, args.alpha)?;
            let report = if d.is_some() {
                crate::linmodel::intra_subject_test(&input, &tw)?
            } else {
                crate::linmodel::linear_hypothesis_test(&input, &tw)?
            };
            let config = json!({
                "y": args.y.display().to_string(),
                "x": args.x.display().to_string(),
                "c": args.c.display().to_string(),
                "d": args.d.as_ref().map(|p| p.display().to_string()),
                "gamma": args.gamma.as_ref().map(|p| p.display().to_string()),
                "alpha": args.alpha,
            });
            emit_report(out, cli.format, "test-lm", config, &report)
        }
        Cmd::Simulate(args) => {
            let scenario = match args.preset {
                PresetArg::Table1 => Scenario::Table1Quantiles,
                PresetArg::Table2 => Scenario::Table2CcaPower,
                PresetArg::Table3 => Scenario::Table3Manova,
                PresetArg::Table4 => Scenario::Table4LinModel,
                PresetArg::Custom => Scenario::CustomOmega,
            };
            let mut config = SimConfig::preset(scenario);
            config.magnification = args.mag;
            config.replications = args.reps;
            config.seed = args.seed;
            config.alpha = args.alpha;
            if let Some(dist) = args.dist {
                config.distribution = dist.kind();
            }
            if let Some(quad) = &args.quad {
                if scenario != Scenario::CustomOmega {
                    return Err(Error::Config(
                        "--quad only applies to --preset custom".into(),
                    ));
                }
                let parts: Vec<usize> = quad
                    .split(',')
                    .map(|v| {
                        v.trim().parse::<usize>().map_err(|_| Error::Config(
                            format!("cannot parse {v:?} in --quad; expected m1,n1,n2,n"),
                        ))
                    })
                    .collect::<crate::error::Result<_>>()?;
                if parts.len() != 4 {
                    return Err(Error::Config(
                        "--quad needs exactly four integers m1,n1,n2,n".into(),
                    ));
                }
                config.dims = DimsSpec::Omega {
                    m1: parts[0],
                    n1: parts[1],
                    n2: parts[2],
                    n: parts[3],
                };
            }
            if let Some(tau) = &args.tau {
                if scenario != Scenario::Table2CcaPower {
                    return Err(Error::Config("--tau only applies to --preset table2".into()));
                }
                config.taus = tau
                    .split(',')
                    .map(|v| {
                        v.trim().parse::<f64>().map_err(|_| {
                            Error::Config(format!("cannot parse {v:?} in --tau"))
                        })
                    })
                    .collect::<crate::error::Result<_>>()?;
            }

            let table = if args.workers > 0 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(args.workers)
                    .build()
                    .map_err(|e| Error::Config(format!("cannot build worker pool: {e}")))?;
                pool.install(|| crate::sim::run_scenario(&config, &tw))?
            } else {
                crate::sim::run_scenario(&config, &tw)?
            };
            let content = match cli.format {
                FormatArg::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({"command": "simulate", "table": table}))
                        .expect("serializable")
                ),
                FormatArg::Csv => table.to_csv(),
            };
            write_output(out, &content)
        }
    }
}

fn emit_report(
    out: Option<&std::path::Path>,
    format: FormatArg,
    command: &str,
    config: serde_json::Value,
    report: &TestReport,
) -> crate::error::Result<()> {
    let content = match format {
        FormatArg::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "command": command,
                "config": config,
                "report": report,
            }))
            .expect("serializable")
        ),
        FormatArg::Csv => report.to_csv(),
    };
    write_output(out, &content)
}
