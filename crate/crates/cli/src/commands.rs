use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use sphnn_core::constructor::decide_satisfiable_on;
use sphnn_core::export::{export_json, import_json, render_svg, LabelPlacement, RenderSpec};
use sphnn_core::logic::{parse_statement_list, translate_statement, ConstraintFormula, Statement};
use sphnn_core::reasoner::{decide_statements, evaluate_corpus, CorpusReport};
use sphnn_core::{Error, Satisfiability, Sphere};

use crate::manifest::{ConfigFile, CorpusSource, OutputFormat, RunManifest, DESK_DIMS, FULL_DIMS};

#[derive(Debug, Parser)]
#[command(
    name = "sphnn",
    version,
    about = "Syllogistic reasoning with Euler diagrams on spheres"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the last statement follows from the others.
    Decide(DecideArgs),
    /// Draw a diagram in which all statements hold.
    Construct(ConstructArgs),
    /// Render a configuration JSON file as SVG.
    Render(RenderArgs),
    /// Write a built-in corpus as JSON lines.
    GenCorpus(GenCorpusArgs),
    /// Evaluate a corpus over several dimensions and write reports.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// JSON file with default settings; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Seed for initialisation and perturbations.
    #[arg(long, env = "SPHNN_SEED")]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    /// Premises followed by the conclusion; a single comma-separated list also works.
    #[arg(required = true)]
    pub statements: Vec<String>,
    #[arg(long)]
    pub dim: Option<usize>,
    /// Terms naming individuals, e.g. `--atomic a,b`.
    #[arg(long, value_delimiter = ',')]
    pub atomic: Vec<String>,
    /// Directory for the counter-model of an invalid argument.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(required = true)]
    pub statements: Vec<String>,
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub atomic: Vec<String>,
    /// Write the configuration here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Configuration JSON as written by `construct` or `decide`.
    pub input: PathBuf,
    /// SVG file to write; standard output by default.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also draw the complement of these terms.
    #[arg(long, value_delimiter = ',')]
    pub complement: Vec<String>,
    #[arg(long)]
    pub legend: bool,
    #[arg(long, default_value_t = 480)]
    pub size: u32,
}

#[derive(Debug, Args)]
pub struct GenCorpusArgs {
    #[arg(long, value_parser = ["extended16", "classic256"])]
    pub corpus: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// `extended16`, `classic256`, or a JSON-lines corpus file.
    #[arg(long)]
    pub corpus: Option<String>,
    /// Comma-separated ambient dimensions.
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Use every dimension up to 10000.
    #[arg(long, conflicts_with = "dims")]
    pub full_grid: bool,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Outputs to write.
    #[arg(long, value_delimiter = ',', value_enum)]
    pub format: Option<Vec<OutputFormat>>,
    #[command(flatten)]
    pub common: Common,
}

/// Exit status for a successful decision: 0 valid, 1 invalid.
fn verdict_code(valid: bool) -> ExitCode {
    if valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Parses every argument as a comma-separated statement list, pointing at
/// the offending column on failure.
fn parse_statements(args: &[String], atomic: &[String]) -> Result<Vec<Statement>> {
    let mut out = Vec::new();
    for arg in args {
        match parse_statement_list(arg, atomic) {
            Ok(list) => out.extend(list),
            Err(e @ Error::Parse { column, .. }) => {
                let caret = format!("{}^", " ".repeat(column.saturating_sub(1)));
                bail!("{e}\n  {arg}\n  {caret}");
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(out)
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            fs::write(p, text).with_context(|| format!("writing {}", p.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn decide(args: &DecideArgs) -> Result<ExitCode> {
    let file = ConfigFile::load(args.common.config.as_deref())?;
    let cfg = file.solver(args.common.seed)?;
    let atomic = if args.atomic.is_empty() {
        file.atomic.clone().unwrap_or_default()
    } else {
        args.atomic.clone()
    };
    let n = args.dim.or(file.dim).unwrap_or(3);
    let mut statements = parse_statements(&args.statements, &atomic)?;
    if statements.len() < 2 {
        bail!("need at least one premise and a conclusion");
    }
    let conclusion = statements.pop().unwrap();
    let verdict = decide_statements(&statements, &conclusion, &cfg, &Sphere::unit(n)?)?;
    if verdict.valid {
        println!("VALID");
    } else {
        let dir = args
            .out
            .clone()
            .or(file.out)
            .unwrap_or_else(|| PathBuf::from("sphnn-out"));
        let path = dir.join("counter_model.json");
        let conf = verdict
            .counter_model
            .as_ref()
            .expect("invalid verdicts carry a model");
        write_or_print(Some(&path), &export_json(conf))?;
        println!("INVALID");
        println!("counter-model: {}", path.display());
    }
    Ok(verdict_code(verdict.valid))
}

pub fn construct(args: &ConstructArgs) -> Result<ExitCode> {
    let file = ConfigFile::load(args.common.config.as_deref())?;
    let cfg = file.solver(args.common.seed)?;
    let atomic = if args.atomic.is_empty() {
        file.atomic.clone().unwrap_or_default()
    } else {
        args.atomic.clone()
    };
    let n = args.dim.or(file.dim).unwrap_or(3);
    let statements = parse_statements(&args.statements, &atomic)?;
    let mut formula = ConstraintFormula::single(Default::default());
    for s in &statements {
        formula = formula.and(&translate_statement(s)?);
    }
    match decide_satisfiable_on(&formula, &cfg, &Sphere::unit(n)?)? {
        Satisfiability::Sat { configuration, .. } => {
            write_or_print(args.out.as_deref(), &(export_json(&configuration) + "\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Satisfiability::Unsat { .. } => {
            eprintln!("no diagram found: the statements are inconsistent");
            Ok(ExitCode::from(1))
        }
    }
}

pub fn render(args: &RenderArgs) -> Result<ExitCode> {
    let text = fs::read_to_string(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let conf = import_json(&text)?;
    let spec = RenderSpec {
        width: args.size,
        height: args.size,
        complemented: args.complement.clone(),
        labels: if args.legend {
            LabelPlacement::Legend
        } else {
            LabelPlacement::Centroid
        },
        ..RenderSpec::default()
    };
    write_or_print(args.out.as_deref(), &render_svg(&conf, &spec)?)?;
    Ok(ExitCode::SUCCESS)
}

pub fn gen_corpus(args: &GenCorpusArgs) -> Result<ExitCode> {
    let tasks = CorpusSource::parse(&args.corpus).load()?;
    let mut text = String::new();
    for t in &tasks {
        text.push_str(&t.to_json_line());
        text.push('\n');
    }
    write_or_print(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

/// Merges flags over the config file into a validated manifest.
pub fn bench_manifest(args: &BenchArgs) -> Result<RunManifest> {
    let file = ConfigFile::load(args.common.config.as_deref())?;
    let dims = if args.full_grid {
        FULL_DIMS.to_vec()
    } else {
        args.dims
            .clone()
            .or_else(|| file.dims.clone())
            .unwrap_or_else(|| DESK_DIMS.to_vec())
    };
    let corpus = args
        .corpus
        .clone()
        .or_else(|| file.corpus.clone())
        .unwrap_or_else(|| "extended16".to_string());
    let manifest = RunManifest {
        corpus: CorpusSource::parse(&corpus),
        dims,
        solver: file.solver(args.common.seed)?,
        out: args
            .out
            .clone()
            .or_else(|| file.out.clone())
            .unwrap_or_else(|| PathBuf::from("sphnn-bench")),
        formats: args
            .format
            .clone()
            .or_else(|| file.formats.clone())
            .unwrap_or_else(|| vec![OutputFormat::Csv, OutputFormat::Json]),
        jobs: args.jobs.or(file.jobs),
    };
    manifest.validate()?;
    Ok(manifest)
}

/// Runs the benchmark described by `manifest` and writes its reports.
pub fn run_bench(manifest: &RunManifest) -> Result<CorpusReport> {
    manifest.validate()?;
    let tasks = manifest.corpus.load()?;
    if tasks.is_empty() {
        bail!("the corpus is empty");
    }
    fs::create_dir_all(&manifest.out)
        .with_context(|| format!("creating output directory {}", manifest.out.display()))?;
    let report = evaluate_corpus(&tasks, &manifest.solver, &manifest.dims, manifest.jobs)?;
    let write = |name: &str, text: &str| -> Result<()> {
        let p = manifest.out.join(name);
        fs::write(&p, text).with_context(|| format!("writing {}", p.display()))
    };
    write("manifest.json", &serde_json::to_string_pretty(manifest)?)?;
    if manifest.formats.contains(&OutputFormat::Csv) {
        write("report.csv", &report.to_csv_string())?;
    }
    if manifest.formats.contains(&OutputFormat::Json) {
        write("summary.json", &report.summary_json())?;
    }
    if manifest.formats.contains(&OutputFormat::Svg) {
        let dir = manifest.out.join("svg");
        fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        for r in report.records.iter().filter(|r| matches!(r.dim, 2 | 3)) {
            if let Some(conf) = &r.counter_model {
                let svg = render_svg(conf, &RenderSpec::default())?;
                let p = dir.join(format!("{}-d{}.svg", r.task_id, r.dim));
                fs::write(&p, svg).with_context(|| format!("writing {}", p.display()))?;
            }
        }
    }
    Ok(report)
}

pub fn bench(args: &BenchArgs) -> Result<ExitCode> {
    let manifest = bench_manifest(args)?;
    let report = run_bench(&manifest)?;
    let s = &report.summary;
    println!(
        "runs {}  accuracy {:.4}  valid verdicts {}",
        s.runs, s.accuracy, s.valid_verdicts
    );
    println!(
        "mean time: valid {:.3}s  invalid {:.3}s  (invalid <5s: {}, valid <120s: {})",
        s.mean_time_valid_s, s.mean_time_invalid_s, s.under_5s_invalid, s.under_120s_valid
    );
    println!("reports in {}", manifest.out.display());
    Ok(ExitCode::SUCCESS)
}

pub fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Decide(a) => decide(a),
        Command::Construct(a) => construct(a),
        Command::Render(a) => render(a),
        Command::GenCorpus(a) => gen_corpus(a),
        Command::Bench(a) => bench(a),
    }
}
