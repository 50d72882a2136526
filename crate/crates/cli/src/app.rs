//! Command-line parsing and dispatch.

use std::path::PathBuf;
use std::{fmt, fs};

use citeweight::fixture;
use citeweight::influence::{DEFAULT_MAX_ITER, DEFAULT_TOLERANCE, PAPER_CYCLES};
use citeweight::matrix::DEFAULT_MAX_JOURNALS;
use citeweight::{
    influence_trace, linear_fit, matrix_power, parse_matrix_csv, pinski_narin_normalize, power_weakness_ratio,
    self_citation_diagnostics, self_citation_sensitivity, transpose, CitationMatrix, ErrorKind, Indicator,
    IterationMode, LabelsMode, ParseOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::report::{render_report, render_sections, Column, Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "citeweight",
    version,
    about = "Journal influence weights and self-citation sensitivity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Influence weights of the normalized matrix
    Iw {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        citations: SelfCitationArgs,
        #[command(flatten)]
        iteration: IterationArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Power-weakness ratio from the raw matrix and its transpose
    Pwr {
        #[command(flatten)]
        input: InputArgs,
        /// Number of cycles
        #[arg(short = 'k', long = "iterations", default_value_t = PAPER_CYCLES)]
        cycles: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Citations divided by the row journal's reference total
    Normalize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// K-th power of the raw matrix
    Power {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 'k', long = "exponent")]
        exponent: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-journal self-citation counts, rates and cited/citing ratios
    Diagnose {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Indicator values with and without self-citations
    Sensitivity {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = IndicatorArg::Iw)]
        indicator: IndicatorArg,
        #[command(flatten)]
        iteration: IterationArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Least-squares line of influence weights without against with self-citations
    Fit {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        iteration: IterationArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Normalized matrix, seven-cycle weights and trendline of the bundled example
    ReproducePaper {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct InputSource {
    /// Matrix file (comma separated, rows cited, columns citing)
    #[arg(long, short = 'i')]
    pub input: Option<PathBuf>,
    /// Bundled dataset
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(fixture::NAMES))]
    pub fixture: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    #[command(flatten)]
    pub source: InputSource,
    /// First row and column of the file hold journal labels
    #[arg(long)]
    pub labeled: bool,
    /// Analyse the citing side (rows become citing journals)
    #[arg(long)]
    pub transpose: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_JOURNALS)]
    pub max_journals: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SelfCitationArgs {
    /// Keep within-journal citations (default)
    #[arg(long, conflicts_with = "no_self_citations")]
    pub self_citations: bool,
    /// Zero the diagonal before normalizing
    #[arg(long)]
    pub no_self_citations: bool,
}

#[derive(Debug, Clone, Args)]
pub struct IterationArgs {
    /// Run exactly this many cycles instead of iterating to tolerance
    #[arg(long, conflicts_with_all = ["tolerance", "max_iter"])]
    pub iterations: Option<usize>,
    /// L1 change between cycles at which iteration stops
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, short = 'f', value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndicatorArg {
    Iw,
    RawCited,
    CitedCitingRatio,
}

/// Where the matrix comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    File(PathBuf),
    Fixture(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Task {
    InfluenceWeights,
    PowerWeakness { cycles: usize },
    Normalize,
    Power { exponent: u32 },
    Diagnose,
    Sensitivity(IndicatorArg),
    Fit,
    ReproducePaper,
}

/// Validated settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub task: Task,
    pub source: Option<Source>,
    pub labels_mode: LabelsMode,
    pub transpose: bool,
    pub max_journals: usize,
    pub self_citations: bool,
    pub mode: IterationMode,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            task: Task::ReproducePaper,
            source: None,
            labels_mode: LabelsMode::Headerless,
            transpose: false,
            max_journals: DEFAULT_MAX_JOURNALS,
            self_citations: true,
            mode: IterationMode::default(),
            format: Format::default(),
            output: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Data = 2,
    Numerical = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: ExitCode::Usage,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        CliError {
            code: ExitCode::Data,
            message: message.into(),
        }
    }

    fn kind(&self) -> &'static str {
        match self.code {
            ExitCode::Success => "none",
            ExitCode::Usage => "usage",
            ExitCode::Data => "data",
            ExitCode::Numerical => "numerical",
        }
    }
}

impl fmt::Display for CliError {
    /// `error[<kind>]: <message>` on a single line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_line = self.message.replace(['\n', '\r'], " ");
        write!(f, "error[{}]: {}", self.kind(), one_line.trim())
    }
}

impl From<citeweight::Error> for CliError {
    fn from(e: citeweight::Error) -> Self {
        CliError {
            code: match e.kind() {
                ErrorKind::Data => ExitCode::Data,
                ErrorKind::Numerical => ExitCode::Numerical,
            },
            message: e.to_string(),
        }
    }
}

fn iteration_mode(args: &IterationArgs) -> Result<IterationMode, CliError> {
    let mode = match args.iterations {
        Some(k) => IterationMode::Fixed(k),
        None => IterationMode::Tolerance {
            epsilon: args.tolerance,
            max_iter: args.max_iter,
        },
    };
    mode.validate().map_err(|e| CliError::usage(e.to_string()))?;
    Ok(mode)
}

impl RunConfig {
    fn with_input(mut self, input: &InputArgs) -> Self {
        self.source = match (&input.source.input, &input.source.fixture) {
            (Some(path), _) => Some(Source::File(path.clone())),
            (None, Some(name)) => Some(Source::Fixture(name.clone())),
            (None, None) => None,
        };
        self.labels_mode = if input.labeled {
            LabelsMode::Labeled
        } else {
            LabelsMode::Headerless
        };
        self.transpose = input.transpose;
        self.max_journals = input.max_journals;
        self
    }

    fn with_output(mut self, output: &OutputArgs) -> Self {
        self.format = output.format;
        self.output.clone_from(&output.output);
        self
    }

    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let base = RunConfig::default();
        let config = match &cli.command {
            Command::Iw {
                input,
                citations,
                iteration,
                output,
            } => RunConfig {
                task: Task::InfluenceWeights,
                self_citations: !citations.no_self_citations,
                mode: iteration_mode(iteration)?,
                ..base.with_input(input).with_output(output)
            },
            Command::Pwr { input, cycles, output } => {
                if *cycles == 0 {
                    return Err(CliError::usage("--iterations must be at least 1"));
                }
                RunConfig {
                    task: Task::PowerWeakness { cycles: *cycles },
                    ..base.with_input(input).with_output(output)
                }
            }
            Command::Normalize { input, output } => RunConfig {
                task: Task::Normalize,
                ..base.with_input(input).with_output(output)
            },
            Command::Power {
                input,
                exponent,
                output,
            } => {
                if *exponent == 0 {
                    return Err(CliError::usage("--exponent must be at least 1"));
                }
                RunConfig {
                    task: Task::Power { exponent: *exponent },
                    ..base.with_input(input).with_output(output)
                }
            }
            Command::Diagnose { input, output } => RunConfig {
                task: Task::Diagnose,
                ..base.with_input(input).with_output(output)
            },
            Command::Sensitivity {
                input,
                indicator,
                iteration,
                output,
            } => RunConfig {
                task: Task::Sensitivity(*indicator),
                mode: iteration_mode(iteration)?,
                ..base.with_input(input).with_output(output)
            },
            Command::Fit {
                input,
                iteration,
                output,
            } => RunConfig {
                task: Task::Fit,
                mode: iteration_mode(iteration)?,
                ..base.with_input(input).with_output(output)
            },
            Command::ReproducePaper { output } => RunConfig {
                task: Task::ReproducePaper,
                ..base.with_output(output)
            },
        };
        Ok(config)
    }

    fn load(&self) -> Result<CitationMatrix, CliError> {
        let matrix = match &self.source {
            Some(Source::Fixture(name)) => {
                fixture::by_name(name).ok_or_else(|| CliError::usage(format!("unknown fixture {name:?}")))?
            }
            Some(Source::File(path)) => {
                let bytes =
                    fs::read(path).map_err(|e| CliError::data(format!("cannot read {}: {e}", path.display())))?;
                let options = ParseOptions {
                    labels: self.labels_mode,
                    max_journals: self.max_journals,
                };
                parse_matrix_csv(&bytes, options)
                    .map_err(|e| CliError::from(e).prefixed(&path.display().to_string()))?
            }
            None => return Err(CliError::usage("no input given; use --input or --fixture")),
        };
        Ok(if self.transpose { transpose(&matrix) } else { matrix })
    }
}

impl CliError {
    fn prefixed(mut self, context: &str) -> Self {
        self.message = format!("{context}: {}", self.message);
        self
    }
}

fn mode_meta(mode: IterationMode) -> Value {
    match mode {
        IterationMode::Fixed(k) => Value::from(k),
        IterationMode::Tolerance { .. } => Value::from("tolerance"),
    }
}

fn influence_report(m: &CitationMatrix, self_citations: bool, mode: IterationMode) -> Result<Report, CliError> {
    let trace = influence_trace(m, self_citations, mode)?;
    if matches!(mode, IterationMode::Tolerance { .. }) && !trace.converged {
        return Err(citeweight::Error::NotConverged {
            cycles: trace.iterations_used(),
            delta: trace.final_delta(),
            tolerance: trace.tolerance,
        }
        .into());
    }
    let weights = trace.final_weights();
    let first = trace.raw_at(1).expect("at least one cycle");
    let mut report = Report::new(
        "influence_weight",
        vec![Column::fixed("influence_weight", 4), Column::new("cycle1_raw")],
    )
    .meta("iterations", mode_meta(mode))
    .meta("cycles_used", trace.iterations_used())
    .meta("converged", trace.converged)
    .meta("self_citations", self_citations);
    for ((journal, w), r) in weights.iter().zip(first.values()) {
        report.push_row(journal, vec![Some(w), Some(*r)]);
    }
    report.push_summary("final_delta", Some(trace.final_delta()));
    Ok(report)
}

fn normalize_report(m: &CitationMatrix) -> Result<Report, CliError> {
    let nm = pinski_narin_normalize(m)?;
    let mut columns: Vec<Column> = m.journals().iter().map(|l| Column::fixed(l, 3)).collect();
    columns.push(Column::fixed("CITATIONS", 3));
    let mut report = Report::new("normalized_matrix", columns);
    let sums = nm.row_sums();
    for (i, journal) in m.journals().iter().enumerate() {
        let mut values: Vec<Option<f64>> = nm.values().row(i).iter().map(|v| Some(*v)).collect();
        values.push(Some(sums[i]));
        report.push_row(journal, values);
    }
    report.push_summary("total", Some(sums.iter().sum()));
    Ok(report)
}

fn sensitivity_report(m: &CitationMatrix, indicator: Indicator) -> Result<Report, CliError> {
    let r = self_citation_sensitivity(m, indicator)?;
    let decimals = if matches!(indicator, Indicator::InfluenceWeight(_)) {
        4
    } else {
        3
    };
    let mut report = Report::new(
        r.indicator.name(),
        vec![
            Column::fixed("with", decimals),
            Column::fixed("without", decimals),
            Column::fixed("pct_change", 2),
        ],
    );
    if let Indicator::InfluenceWeight(mode) = indicator {
        report = report.meta("iterations", mode_meta(mode));
    }
    for (i, journal) in r.journals().iter().enumerate() {
        report.push_row(journal, vec![Some(r.with[i]), Some(r.without[i]), r.pct_change[i]]);
    }
    report.push_summary("max_abs_pct_change", r.max_abs_pct_change());
    report.push_summary("mean_abs_pct_change", r.mean_abs_pct_change());
    Ok(report)
}

fn fit_report(m: &CitationMatrix, mode: IterationMode) -> Result<Report, CliError> {
    let with = influence_trace(m, true, mode)?.final_weights();
    let without = influence_trace(m, false, mode)?.final_weights();
    let fit = linear_fit(&with, &without)?;
    let mut report = Report::new(
        "influence_weight_fit",
        vec![Column::fixed("with", 4), Column::fixed("without", 4)],
    )
    .meta("iterations", mode_meta(mode));
    for ((journal, x), y) in with.iter().zip(without.values()) {
        report.push_row(journal, vec![Some(x), Some(*y)]);
    }
    report.push_summary("slope", Some(fit.slope));
    report.push_summary("intercept", Some(fit.intercept));
    report.push_summary("pearson_r", fit.pearson_r);
    report.push_summary("n_points", Some(fit.n_points as f64));
    Ok(report)
}

/// Computes the configured result and renders it.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let rendered = match config.task {
        Task::ReproducePaper => {
            let m = fixture::price_1981();
            let paper = IterationMode::Fixed(PAPER_CYCLES);
            let sections = [
                ("normalized_matrix", normalize_report(&m)?),
                (
                    "influence_weights",
                    sensitivity_report(&m, Indicator::InfluenceWeight(paper))?,
                ),
                ("trendline", fit_report(&m, paper)?),
            ];
            render_sections(&sections, config.format)
        }
        task => {
            let m = config.load()?;
            let report = match task {
                Task::InfluenceWeights => influence_report(&m, config.self_citations, config.mode)?,
                Task::PowerWeakness { cycles } => {
                    let pw = power_weakness_ratio(&m, cycles)?;
                    let mut report = Report::new(
                        "power_weakness_ratio",
                        vec![Column::new("power"), Column::new("weakness"), Column::new("ratio")],
                    )
                    .meta("iterations", cycles);
                    for (i, journal) in m.journals().iter().enumerate() {
                        report.push_row(
                            journal,
                            vec![
                                Some(pw.power.values()[i]),
                                Some(pw.weakness.values()[i]),
                                Some(pw.ratio.values()[i]),
                            ],
                        );
                    }
                    report
                }
                Task::Normalize => normalize_report(&m)?,
                Task::Power { exponent } => {
                    let p = matrix_power(&m, exponent)?;
                    let columns = m.journals().iter().map(Column::new).collect();
                    let mut report = Report::new("matrix_power", columns).meta("exponent", exponent);
                    for (journal, row) in m.journals().iter().zip(p.rows()) {
                        report.push_row(journal, row.iter().map(|v| Some(*v)).collect());
                    }
                    report
                }
                Task::Diagnose => {
                    let d = self_citation_diagnostics(&m);
                    let mut report = Report::new(
                        "self_citation_diagnostics",
                        [
                            "S",
                            "d",
                            "g",
                            "self_cited_rate",
                            "self_citing_rate",
                            "ratio_with",
                            "ratio_without",
                        ]
                        .into_iter()
                        .map(Column::new)
                        .collect(),
                    );
                    for (journal, e) in m.journals().iter().zip(&d.entries) {
                        report.push_row(
                            journal,
                            vec![
                                Some(e.self_citations),
                                Some(e.cited_by_others),
                                Some(e.citing_others),
                                e.self_cited_rate,
                                e.self_citing_rate,
                                e.cited_citing_ratio_with,
                                e.cited_citing_ratio_without,
                            ],
                        );
                    }
                    report.push_summary("grand_total", Some(d.grand_total));
                    report
                }
                Task::Sensitivity(arg) => {
                    let indicator = match arg {
                        IndicatorArg::Iw => Indicator::InfluenceWeight(config.mode),
                        IndicatorArg::RawCited => Indicator::RawCited,
                        IndicatorArg::CitedCitingRatio => Indicator::CitedCitingRatio,
                    };
                    sensitivity_report(&m, indicator)?
                }
                Task::Fit => fit_report(&m, config.mode)?,
                Task::ReproducePaper => unreachable!("handled above"),
            };
            render_report(&report, config.format)
        }
    };
    Ok(rendered)
}

/// Runs `config` and writes the result to its destination.
pub fn execute(config: &RunConfig) -> Result<Option<String>, CliError> {
    let text = run(config)?;
    match &config.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}
