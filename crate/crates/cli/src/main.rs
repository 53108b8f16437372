//! `paramcost` command-line front end.

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};

use paramcost::cocomo2::{effort_app_composition, nop, ObjectPointInput, ScaleFactorProfile};
use paramcost::cocomo81::PhaseWeights;
use paramcost::config::{Registry, CONFIG_ENV};
use paramcost::dataset::{embedded_corpus, load_corpus, Corpus};
use paramcost::delphi::{delphi_estimate, load_rounds, ExpertRound};
use paramcost::evaluation::paper::{compare_table, tables_for_models, CellStatus};
use paramcost::evaluation::{calibrate_corpus, evaluate, ModelConfig};
use paramcost::fpa::{adjusted_fp, sloc_from_fp, ufp, ComplexityAdjustment, FunctionPointCounts};
use paramcost::slim::SlimParams;
use paramcost::{table_round, EffortPm, Mode, SizeKloc};

mod failure;

use failure::{Failure, ResultExt, WithPath};

#[derive(Parser, Debug)]
#[command(name = "paramcost", version, about = "Parametric software cost estimation")]
struct Cli {
    /// Model parameter overrides (`key = value` lines).
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,

    /// Print run metadata (version, timestamp) to stderr.
    #[arg(long, global = true)]
    meta: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Estimate a single project.
    Estimate(Box<EstimateArgs>),
    /// Run size-driven models over a corpus.
    Evaluate(EvaluateArgs),
    /// Fit `effort = a * size^b` to a corpus.
    Calibrate(CalibrateArgs),
    /// Export or validate corpora.
    #[command(subcommand)]
    Dataset(DatasetCommand),
    /// Inspect model parameters.
    #[command(subcommand)]
    Config(ConfigCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EstimateModel {
    Cocomo81Basic,
    Cocomo81Intermediate,
    Cocomo81Detailed,
    Cocomo2App,
    Cocomo2Early,
    Cocomo2Post,
    Slim,
    Fpa,
    Delphi,
}

#[derive(Args, Debug)]
struct EstimateArgs {
    #[arg(long, value_enum)]
    model: EstimateModel,
    /// COCOMO81 development mode.
    #[arg(long)]
    mode: Option<String>,
    /// Size in KLOC.
    #[arg(long)]
    size: Option<f64>,
    #[arg(long)]
    eaf: Option<f64>,
    /// Driver rating such as `RELY=high`; unrated drivers are nominal.
    #[arg(long = "driver")]
    drivers: Vec<String>,
    /// Sum of the detailed model's phase weights.
    #[arg(long)]
    phase_sum: Option<f64>,
    /// Sum of the five scale-factor weights.
    #[arg(long)]
    scale_sum: Option<f64>,
    /// Scale-factor weight such as `PREC=3.72`; unset factors share the remainder of 0.
    #[arg(long = "scale")]
    scales: Vec<String>,
    #[arg(long)]
    object_points: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    reuse: f64,
    /// New object points per person-month.
    #[arg(long)]
    productivity: Option<f64>,
    /// SLIM environment factor E.
    #[arg(long)]
    environment: Option<f64>,
    /// SLIM manpower buildup D0.
    #[arg(long)]
    buildup: Option<f64>,
    /// Size in lines of code (SLIM).
    #[arg(long)]
    sloc: Option<f64>,
    /// Function count such as `inputs.simple=4`.
    #[arg(long = "count")]
    counts: Vec<String>,
    /// The 14 complexity adjustment values, comma separated.
    #[arg(long, value_delimiter = ',')]
    adjustment: Vec<u8>,
    /// Language for FP to SLOC conversion.
    #[arg(long)]
    language: Option<String>,
    /// Expert estimates in PM, comma separated.
    #[arg(long, value_delimiter = ',')]
    estimates: Vec<f64>,
    /// Delphi rounds CSV (`round,expert,estimate_pm`).
    #[arg(long)]
    rounds: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
    PlotData,
}

#[derive(Args, Debug)]
struct EvaluateArgs {
    /// Comma-separated selectors: `all`, a model id, or a COCOMO81 id with a mode suffix.
    #[arg(long, default_value = "all")]
    models: String,
    /// Corpus CSV; the embedded corpus when omitted.
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Compare against the published tables for the selected models.
    #[arg(long)]
    against_paper: bool,
}

#[derive(Args, Debug)]
struct CalibrateArgs {
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Stock model selector to compare MMRE against.
    #[arg(long)]
    baseline: Option<String>,
}

#[derive(Subcommand, Debug)]
enum DatasetCommand {
    /// Write the embedded corpus as CSV.
    Export {
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check a corpus file and report every rejected row.
    Validate { path: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ConfigCommand {
    /// Print the effective parameters in config-file syntax.
    Show,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.meta {
        let secs = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        eprintln!("# paramcost {} unix_time={secs}", env!("CARGO_PKG_VERSION"));
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(out) = &f.stdout {
                print!("{out}");
            }
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

/// Returns everything destined for stdout so that failures print nothing partial.
fn run(cli: &Cli) -> Result<String, Failure> {
    let registry = match &cli.config {
        Some(path) => Registry::from_path(path).classify().with_path(path)?,
        None => Registry::default(),
    };
    match &cli.command {
        Command::Estimate(args) => estimate(args, &registry),
        Command::Evaluate(args) => cmd_evaluate(args, &registry),
        Command::Calibrate(args) => calibrate(args, &registry),
        Command::Dataset(DatasetCommand::Export { output }) => {
            let csv = embedded_corpus().to_csv_string().classify()?;
            match output {
                Some(path) => {
                    std::fs::write(path, csv).map_err(|e| Failure::io(e.into()).path(path))?;
                    Ok(String::new())
                }
                None => Ok(csv),
            }
        }
        Command::Dataset(DatasetCommand::Validate { path }) => {
            let corpus = read_corpus(path)?;
            Ok(format!("{}: {} projects, valid\n", path.display(), corpus.len()))
        }
        Command::Config(ConfigCommand::Show) => Ok(registry.to_config_string()),
    }
}

fn read_corpus(path: &Path) -> Result<Corpus, Failure> {
    let file = File::open(path).map_err(|e| Failure::io(e.into()).path(path))?;
    load_corpus(file).classify().with_path(path)
}

fn corpus_or_embedded(path: &Option<PathBuf>) -> Result<Corpus, Failure> {
    match path {
        Some(p) => read_corpus(p),
        None => Ok(embedded_corpus()),
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, model: EstimateModel) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{flag} is required for {}", model_name(model))))
}

fn model_name(model: EstimateModel) -> String {
    model.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn size_arg(args: &EstimateArgs) -> Result<SizeKloc, Failure> {
    SizeKloc::new(need(args.size, "size", args.model)?).classify()
}

fn mode_arg(args: &EstimateArgs) -> Result<Mode, Failure> {
    let raw = args
        .mode
        .as_deref()
        .ok_or_else(|| Failure::usage(format!("--mode is required for {}", model_name(args.model))))?;
    raw.parse::<Mode>().map_err(|e| Failure::usage(e.to_string()))
}

/// EAF from `--eaf` or a driver profile, defaulting to 1.
fn eaf_arg(
    args: &EstimateArgs,
    eaf_of: impl Fn(&paramcost::drivers::DriverProfile) -> paramcost::Result<f64>,
    nominal: paramcost::drivers::DriverProfile,
) -> Result<f64, Failure> {
    match (args.eaf, args.drivers.is_empty()) {
        (Some(_), false) => Err(Failure::usage("--eaf and --driver are mutually exclusive")),
        (Some(eaf), true) => Ok(eaf),
        (None, true) => Ok(1.0),
        (None, false) => {
            let mut profile = nominal;
            for d in &args.drivers {
                profile.apply_assignment(d).classify()?;
            }
            eaf_of(&profile).classify()
        }
    }
}

fn effort_lines(out: &mut String, effort: EffortPm) {
    out.push_str(&format!("effort_pm: {}\n", effort.value()));
    out.push_str(&format!("effort: {:.1} PM\n", effort.value()));
    out.push_str(&format!("table_effort_pm: {}\n", table_round(effort)));
}

fn estimate(args: &EstimateArgs, registry: &Registry) -> Result<String, Failure> {
    let mut out = format!("model: {}\n", model_name(args.model));
    let c81 = &registry.cocomo81;
    let c2 = &registry.cocomo2;
    match args.model {
        EstimateModel::Cocomo81Basic => {
            let (mode, size) = (mode_arg(args)?, size_arg(args)?);
            out.push_str(&format!("mode: {mode}\nsize_kloc: {}\n", size.value()));
            effort_lines(&mut out, c81.effort_basic(size, mode));
        }
        EstimateModel::Cocomo81Intermediate | EstimateModel::Cocomo81Detailed => {
            let (mode, size) = (mode_arg(args)?, size_arg(args)?);
            let eaf = eaf_arg(args, |p| c81.eaf(p), c81.drivers.nominal_profile())?;
            out.push_str(&format!("mode: {mode}\nsize_kloc: {}\neaf: {eaf}\n", size.value()));
            if args.model == EstimateModel::Cocomo81Intermediate {
                effort_lines(&mut out, c81.effort_intermediate(size, mode, eaf).classify()?);
            } else {
                let weights = args.phase_sum.map(PhaseWeights::from_sum).transpose().classify()?;
                let d = c81.effort_detailed(size, mode, eaf, weights.as_ref()).classify()?;
                let sum = weights.as_ref().unwrap_or_else(|| c81.phase_weights.get(mode)).sum();
                out.push_str(&format!("phase_weight_sum: {sum}\n"));
                effort_lines(&mut out, d.total);
                for (phase, e) in &d.breakdown {
                    out.push_str(&format!("phase.{phase}: {}\n", e.value()));
                }
                if d.zero_weights {
                    out.push_str("warning: all phase weights are zero\n");
                }
            }
        }
        EstimateModel::Cocomo2App => {
            let input = ObjectPointInput {
                object_points: need(args.object_points, "object-points", args.model)?,
                reuse_percent: args.reuse,
                productivity_rate: need(args.productivity, "productivity", args.model)?,
            };
            let new_points = nop(&input).classify()?;
            let effort = effort_app_composition(&input).classify()?;
            out.push_str(&format!(
                "object_points: {}\nreuse_percent: {}\nproductivity: {}\nnop: {new_points}\n",
                input.object_points, input.reuse_percent, input.productivity_rate
            ));
            effort_lines(&mut out, effort);
        }
        EstimateModel::Cocomo2Early => {
            let size = size_arg(args)?;
            let eaf = eaf_arg(args, |p| c2.eaf_early(p), c2.early_drivers.nominal_profile())?;
            out.push_str(&format!("size_kloc: {}\neaf: {eaf}\n", size.value()));
            effort_lines(&mut out, c2.effort_early_design(size, eaf).classify()?);
        }
        EstimateModel::Cocomo2Post => {
            let size = size_arg(args)?;
            let profile = match (args.scale_sum, args.scales.is_empty()) {
                (Some(_), false) => return Err(Failure::usage("--scale-sum and --scale are mutually exclusive")),
                (Some(sum), true) => ScaleFactorProfile::uniform(sum).classify()?,
                (None, false) => {
                    let mut p = ScaleFactorProfile::new([0.0; 5]).classify()?;
                    for s in &args.scales {
                        let (name, w) = s
                            .split_once('=')
                            .ok_or_else(|| Failure::usage(format!("expected FACTOR=weight, got `{s}`")))?;
                        let w: f64 = w.trim().parse().map_err(|_| Failure::usage(format!("bad weight in `{s}`")))?;
                        p.set(name.trim(), w).classify()?;
                    }
                    p
                }
                (None, true) => return Err(Failure::usage("--scale-sum or --scale is required for cocomo2-post")),
            };
            let eaf = eaf_arg(args, |p| c2.eaf_post(p), c2.post_drivers.nominal_profile())?;
            out.push_str(&format!(
                "size_kloc: {}\nscale_sum: {}\nexponent: {}\neaf: {eaf}\n",
                size.value(),
                profile.sum(),
                c2.post_arch_exponent(&profile)
            ));
            effort_lines(&mut out, c2.effort_post_architecture(size, &profile, eaf).classify()?);
        }
        EstimateModel::Slim => {
            let params = SlimParams {
                environment: need(args.environment, "environment", args.model)?,
                buildup: need(args.buildup, "buildup", args.model)?,
                size_loc: need(args.sloc, "sloc", args.model)?,
            };
            let est = params.estimate().classify()?;
            out.push_str(&format!(
                "environment: {}\nbuildup: {}\nsize_loc: {}\neffort_py: {}\ndelivery_time_years: {}\n",
                params.environment,
                params.buildup,
                params.size_loc,
                est.effort.value(),
                est.delivery_time_years
            ));
            effort_lines(&mut out, est.effort.to_person_months());
            for a in &est.advisories {
                out.push_str(&format!("advisory: {a}\n"));
            }
        }
        EstimateModel::Fpa => {
            let mut counts = FunctionPointCounts::new();
            for c in &args.counts {
                counts.apply_assignment(c).classify()?;
            }
            let values: [u8; 14] = args.adjustment.clone().try_into().map_err(|v: Vec<u8>| {
                Failure::usage(format!("--adjustment needs 14 values, got {}", v.len()))
            })?;
            let adjustment = ComplexityAdjustment::new(values).classify()?;
            let unadjusted = ufp(&counts, &registry.fpa.weights).classify()?;
            let fp = adjusted_fp(unadjusted, &adjustment).classify()?;
            out.push_str(&format!(
                "ufp: {unadjusted}\ntca: {}\nadjustment_factor: {}\nfp: {fp}\n",
                adjustment.total(),
                adjustment.factor()
            ));
            if let Some(lang) = &args.language {
                let factor = registry.fpa.language(lang).classify()?;
                let sloc = sloc_from_fp(fp, factor).classify()?;
                out.push_str(&format!(
                    "language: {}\nsloc_per_fp: {}\nsloc: {sloc}\nsize_kloc: {}\n",
                    factor.language,
                    factor.sloc_per_fp,
                    sloc / 1000.0
                ));
            }
        }
        EstimateModel::Delphi => match (&args.rounds, args.estimates.is_empty()) {
            (Some(_), false) => return Err(Failure::usage("--estimates and --rounds are mutually exclusive")),
            (None, true) => return Err(Failure::usage("--estimates or --rounds is required for delphi")),
            (None, false) => {
                let round = ExpertRound::new(args.estimates.clone()).classify()?;
                delphi_lines(&mut out, &round);
            }
            (Some(path), true) => {
                let file = File::open(path).map_err(|e| Failure::io(e.into()).path(path))?;
                for (n, round) in load_rounds(file).classify().with_path(path)? {
                    out.push_str(&format!("round: {n}\n"));
                    delphi_lines(&mut out, &round);
                }
            }
        },
    }
    Ok(out)
}

fn delphi_lines(out: &mut String, round: &ExpertRound) {
    out.push_str(&format!(
        "least: {}\navg: {}\nhighest: {}\n",
        round.least(),
        round.avg(),
        round.highest()
    ));
    effort_lines(out, delphi_estimate(round));
}

fn cmd_evaluate(args: &EvaluateArgs, registry: &Registry) -> Result<String, Failure> {
    let configs = ModelConfig::parse_selectors(&args.models).map_err(|e| Failure::usage(e.to_string()))?;
    if configs.is_empty() {
        return Err(Failure::usage("--models selects nothing"));
    }
    if args.against_paper && args.corpus.is_some() {
        return Err(Failure::usage("--against-paper compares the embedded corpus only"));
    }
    let corpus = corpus_or_embedded(&args.corpus)?;
    let report = evaluate(&corpus, &configs, registry).classify()?;
    let mut out = match args.format {
        Format::Table => report.to_table(&corpus),
        Format::Csv => report.to_csv().classify()?,
        Format::Json => report.to_json().classify()? + "\n",
        Format::PlotData => report.to_plot_data(&corpus).classify()?,
    };
    if !args.against_paper {
        return Ok(out);
    }

    let tables = tables_for_models(configs.iter().map(|c| c.model_id()));
    let mut listing = String::new();
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for table in &tables {
        for check in compare_table(table, registry).classify()? {
            match check.status {
                CellStatus::Pass => pass += 1,
                CellStatus::Fail => fail += 1,
                CellStatus::Artifact => skip += 1,
            }
            if check.status != CellStatus::Pass {
                listing.push_str(&format!("{check}\n"));
            }
        }
    }
    let ids: Vec<&str> = tables.iter().map(|t| t.id).collect();
    listing.push_str(&format!(
        "paper comparison (tables {}): {pass} passed, {fail} failed, {skip} skipped\n",
        if ids.is_empty() { "none".to_string() } else { ids.join(", ") }
    ));
    // Keep machine-readable formats clean on stdout.
    if args.format == Format::Table {
        out.push('\n');
        out.push_str(&listing);
    } else {
        eprint!("{listing}");
    }
    if fail > 0 {
        return Err(Failure::paper(out, anyhow!("{fail} cells outside tolerance")));
    }
    Ok(out)
}

fn calibrate(args: &CalibrateArgs, registry: &Registry) -> Result<String, Failure> {
    let baseline = match &args.baseline {
        Some(s) => ModelConfig::parse_selectors(s).map_err(|e| Failure::usage(e.to_string()))?,
        None => Vec::new(),
    };
    let corpus = corpus_or_embedded(&args.corpus)?;
    let fit = calibrate_corpus(&corpus).classify()?;
    let mut out = format!(
        "n: {}\na: {}\nb: {}\nlog_residual: {}\n",
        fit.n,
        fit.constants.a(),
        fit.constants.b(),
        fit.log_residual
    );
    if baseline.is_empty() {
        return Ok(out);
    }
    let fitted = ModelConfig::PowerLaw { name: "calibrated".into(), constants: fit.constants };
    let mut configs = baseline.clone();
    configs.push(fitted.clone());
    let report = evaluate(&corpus, &configs, registry).classify()?;
    let mmre_of = |c: &ModelConfig| {
        report
            .summary(c.model_id(), &c.label())
            .map(|s| s.mmre)
            .ok_or_else(|| Failure::validation(anyhow!("no summary for {c}")))
    };
    // Log-space residual of any configuration, comparable with the fit's own.
    let residual_of = |c: &ModelConfig| {
        report
            .rows_for(c.model_id(), &c.label())
            .map(|r| (r.actual_pm / r.estimated_pm).ln().powi(2))
            .sum::<f64>()
    };
    for c in &baseline {
        out.push_str(&format!("baseline {c}: mmre {} log_residual {}\n", mmre_of(c)?, residual_of(c)));
    }
    out.push_str(&format!("calibrated: mmre {} log_residual {}\n", mmre_of(&fitted)?, residual_of(&fitted)));
    Ok(out)
}
