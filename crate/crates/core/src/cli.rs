//! The `tubecat` command line: `catalog`, `verify`, `tube` and `center`.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on input
//! errors. Diagnostics go to stderr, reports to stdout or `--output`.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::category::{
    builtin_catalog, catalog_entry, catalog_names, load_spec_unchecked, verify_dims, verify_pentagon, verify_unitarity,
    FusionCategorySpec,
};
use crate::center::{report_from, run_pipeline};
use crate::diagram::{run_all_suites, Engine};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::tube::{build_delta, CompiledMaps, LambdaObject, TubeAlgebra};

/// Colon-separated directories searched for `<name>.json` category files.
pub const CATALOG_DIR_ENV: &str = "TUBECAT_CATALOG_DIR";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "tubecat",
    version,
    about = "Fusion-category diagrams, tube algebras and Drinfeld centers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the builtin categories.
    Catalog(CommonArgs),
    /// Run the relation suites on a category.
    Verify(CategoryArgs),
    /// Build the tube algebra of an object.
    Tube(CategoryArgs),
    /// Decompose the tube algebra and report the center simples.
    Center(CategoryArgs),
}

#[derive(Debug, Args, Clone)]
pub struct CommonArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args, Clone)]
pub struct CategoryArgs {
    /// Catalog name, path to a category JSON file, or `-` for stdin.
    #[arg(long)]
    pub category: String,
    /// `all-simples` or a list such as `1:1,tau:2`.
    #[arg(long, default_value = "all-simples")]
    pub lambda: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(flatten)]
    pub common: CommonArgs,
}

/// Resolved configuration of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct CliConfig {
    pub command: CommandKind,
    pub category: String,
    pub lambda: String,
    pub seed: u64,
    pub tol: f64,
    pub output: Option<PathBuf>,
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Catalog,
    Verify,
    Tube,
    Center,
}

impl From<Cli> for CliConfig {
    fn from(cli: Cli) -> Self {
        let (command, args) = match cli.command {
            Command::Catalog(common) => {
                return CliConfig {
                    command: CommandKind::Catalog,
                    category: String::new(),
                    lambda: "all-simples".into(),
                    seed: 1,
                    tol: 1e-9,
                    output: common.output,
                    format: common.format,
                }
            }
            Command::Verify(a) => (CommandKind::Verify, a),
            Command::Tube(a) => (CommandKind::Tube, a),
            Command::Center(a) => (CommandKind::Center, a),
        };
        CliConfig {
            command,
            category: args.category,
            lambda: args.lambda,
            seed: args.seed,
            tol: args.tol,
            output: args.common.output,
            format: args.common.format,
        }
    }
}

/// Outcome of a command: the rendered report and whether all checks passed.
struct Outcome {
    body: String,
    pass: bool,
}

/// Exit code for an error: input problems are 2, failed checks are 1.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Tolerance { .. } | Error::NotInCommutant { .. } | Error::DegenerateSpectrum(_) => 1,
        Error::Consistency { .. } => 1,
        Error::Schema(_) | Error::Shape(_) | Error::EmptySpace(_) | Error::Unsupported(_) | Error::Io(_) => 2,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    run(&CliConfig::from(cli))
}

/// Runs one command and returns its exit code.
pub fn run(config: &CliConfig) -> i32 {
    if config.tol.is_nan() || config.tol <= 0.0 {
        eprintln!("error: --tol must be positive");
        return 2;
    }
    let result = match config.command {
        CommandKind::Catalog => catalog_cmd(config),
        CommandKind::Verify => verify_cmd(config),
        CommandKind::Tube => tube_cmd(config),
        CommandKind::Center => center_cmd(config),
    };
    match result.and_then(|o| write_output(config, &o.body).map(|_| o.pass)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn write_output(config: &CliConfig, body: &str) -> Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &config.output {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn search_dirs() -> Vec<PathBuf> {
    std::env::var_os(CATALOG_DIR_ENV)
        .map(|v| std::env::split_paths(&v).collect())
        .unwrap_or_default()
}

/// Resolves a category argument without checking pentagon or unitarity.
///
/// Order: `-` (stdin), builtin names, `<name>.json` in the directories of
/// `TUBECAT_CATALOG_DIR`, then a file path.
pub fn resolve_category(arg: &str) -> Result<FusionCategorySpec> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        return load_spec_unchecked(buf.as_bytes());
    }
    if catalog_names().contains(&arg) {
        return catalog_entry(arg);
    }
    for dir in search_dirs() {
        let p = dir.join(format!("{arg}.json"));
        if p.is_file() {
            return load_file(&p);
        }
    }
    let p = Path::new(arg);
    if p.is_file() {
        return load_file(p);
    }
    Err(Error::Schema(format!(
        "unknown category '{arg}': not a catalog name or a readable file"
    )))
}

fn load_file(p: &Path) -> Result<FusionCategorySpec> {
    let f = std::fs::File::open(p)?;
    load_spec_unchecked(std::io::BufReader::new(f))
}

#[derive(Serialize)]
struct CatalogItem {
    name: String,
    title: String,
    rank: usize,
    labels: Vec<String>,
    dims: Vec<f64>,
    global_dim: f64,
}

fn catalog_cmd(config: &CliConfig) -> Result<Outcome> {
    let items: Vec<CatalogItem> = builtin_catalog()
        .into_iter()
        .map(|s| CatalogItem {
            title: s.metadata.get("title").cloned().unwrap_or_default(),
            rank: s.rank(),
            labels: s.ring.labels().to_vec(),
            dims: (0..s.rank()).map(|x| s.d(x)).collect(),
            global_dim: s.global_dim(),
            name: s.name,
        })
        .collect();
    let body = match config.format {
        Format::Json => crate::json::to_string(&items),
        Format::Text => items
            .iter()
            .map(|i| {
                format!(
                    "{:<14} rank={} dim={:.10} labels={} {}",
                    i.name,
                    i.rank,
                    i.global_dim,
                    i.labels.join(","),
                    i.title
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome { body, pass: true })
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    category: &'a str,
    tol: f64,
    seed: u64,
    suites: &'a [VerificationReport],
    pass: bool,
}

/// Relation suites for a category. Data-level suites always run; the
/// diagram suites need a multiplicity-free category.
pub fn verify_reports(spec: FusionCategorySpec, tol: f64, seed: u64) -> Vec<VerificationReport> {
    match Engine::new(spec.clone()) {
        Ok(engine) => run_all_suites(&engine, tol, seed),
        Err(_) => vec![
            verify_pentagon(&spec, tol),
            verify_unitarity(&spec, tol),
            verify_dims(&spec, tol),
        ],
    }
}

fn render_suites(config: &CliConfig, name: &str, suites: &[VerificationReport]) -> Outcome {
    let pass = suites.iter().all(|r| r.pass);
    let body = match config.format {
        Format::Json => crate::json::to_string(&VerifyJson {
            category: name,
            tol: config.tol,
            seed: config.seed,
            suites,
            pass,
        }),
        Format::Text => {
            let mut out = format!("verify {} category={name}\n", if pass { "PASS" } else { "FAIL" });
            for r in suites {
                out.push_str(&r.to_text());
                out.push('\n');
            }
            out
        }
    };
    Outcome { body, pass }
}

fn verify_cmd(config: &CliConfig) -> Result<Outcome> {
    let spec = resolve_category(&config.category)?;
    let name = spec.name.clone();
    let suites = verify_reports(spec, config.tol, config.seed);
    Ok(render_suites(config, &name, &suites))
}

/// Loads a category for the tube and center commands, requiring that the
/// data checks pass first.
fn checked_engine(config: &CliConfig) -> Result<Arc<Engine>> {
    let spec = resolve_category(&config.category)?;
    spec.validate(config.tol.max(crate::category::LOAD_TOL))?;
    Ok(Arc::new(Engine::new(spec)?))
}

#[derive(Serialize)]
struct TubeOut<'a> {
    #[serde(flatten)]
    tube: crate::tube::TubeJson,
    checks: Vec<(&'a str, f64, bool)>,
    pass: bool,
}

fn tube_cmd(config: &CliConfig) -> Result<Outcome> {
    let engine = checked_engine(config)?;
    let lambda = LambdaObject::parse(engine.spec(), &config.lambda)?;
    let alg = TubeAlgebra::build(engine.clone(), lambda.clone())?;
    let mut checks = alg.verify(config.tol);
    let delta = build_delta(engine.clone(), lambda, config.tol)?;
    let maps = CompiledMaps::new(&alg, &delta)?;
    let (lo, hi) = maps.gram_spectrum();
    checks.extend(delta.verify(config.tol));
    checks.push(VerificationReport::from_cases(
        "gram_positive",
        vec![(
            vec!["min_eigenvalue".into()],
            if lo > config.tol * hi.max(1.0) { 0.0 } else { 1.0 },
        )],
        0.5,
    ));
    let pass = checks.iter().all(|r| r.pass);
    let body = match config.format {
        Format::Json => crate::json::to_string(&TubeOut {
            tube: alg.to_json_value(),
            checks: checks
                .iter()
                .map(|r| (r.suite.as_str(), r.max_residual, r.pass))
                .collect(),
            pass,
        }),
        Format::Text => {
            let sp = engine.spec();
            let mut out = format!(
                "tube {} category={} lambda={} dim={}\n",
                if pass { "PASS" } else { "FAIL" },
                sp.name,
                config.lambda,
                alg.dim()
            );
            for a in 0..sp.rank() {
                out.push_str(&format!(
                    "  direction {:<8} dim={}\n",
                    sp.label(a),
                    alg.direction_dim(a)
                ));
            }
            out.push_str(&format!("  gram spectrum [{lo:.6e}, {hi:.6e}]\n"));
            for r in &checks {
                out.push_str(&format!("  {}\n", r.to_text()));
            }
            out
        }
    };
    Ok(Outcome { body, pass })
}

fn center_cmd(config: &CliConfig) -> Result<Outcome> {
    let engine = checked_engine(config)?;
    let lambda = LambdaObject::parse(engine.spec(), &config.lambda)?;
    let pipe = run_pipeline(engine.clone(), lambda, config.seed, config.tol)?;
    let report = report_from(&engine, &pipe, config.seed);
    let body = match config.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Ok(Outcome {
        body,
        pass: report.pass,
    })
}
