use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nilpairs::catalog::{self, CatalogEntry, DEFAULT_SEED};
use nilpairs::classify::Analysis;
use nilpairs::grading::BiGrading;
use nilpairs::pairs::{solve_characteristic, verify_characteristic, Characteristic, NilpotentPair};
use nilpairs::parse::{parse_element, parse_labels};
use nilpairs::render::GridRender;
use nilpairs::report::ReportDocument;
use nilpairs::rootsystem::{build_algebra, levi_data, CartanType, LieAlgebra};
use nilpairs::suite::{self, SuiteOptions};
use thiserror::Error;

/// Exact analysis of nilpotent pairs in semisimple Lie algebras.
#[derive(Parser)]
#[command(name = "nilpairs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an algebra and print its invariants.
    Build(AlgebraArgs),
    /// Analyze a nilpotent pair: characteristic, bi-grading, classification and checks.
    Analyze(AnalyzeArgs),
    /// Render the bi-grading induced by two label vectors.
    Grid(GridArgs),
    /// Run the property battery over the catalog.
    Suite(SuiteArgs),
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// Cartan type such as `E6`, `C3`, `A1xA1`, or a family letter used with --rank.
    #[arg(long = "type")]
    type_: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Catalog entry id; replaces --type/--e1/--e2.
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long)]
    e1: Option<String>,
    #[arg(long)]
    e2: Option<String>,
    /// Simple-root labels of h1; solved for when absent.
    #[arg(long = "h1-labels", allow_hyphen_values = true)]
    h1_labels: Option<String>,
    #[arg(long = "h2-labels", allow_hyphen_values = true)]
    h2_labels: Option<String>,
    /// Also print the dimension grid.
    #[arg(long)]
    grid: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long)]
    catalog: Option<String>,
    #[arg(long = "h1-labels", allow_hyphen_values = true)]
    h1_labels: Option<String>,
    #[arg(long = "h2-labels", allow_hyphen_values = true)]
    h2_labels: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct SuiteArgs {
    /// A property name, `figures`, or a catalog id prefix.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Directory holding the golden grid files.
    #[arg(long = "golden-dir")]
    golden_dir: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Solver(String),
    #[error("{0}")]
    Invariant(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invariant(_) => 1,
            CliError::Input(_) | CliError::Solver(_) => 2,
        }
    }
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

fn algebra(args: &AlgebraArgs) -> Result<LieAlgebra, CliError> {
    let t = args.type_.as_deref().ok_or_else(|| input("--type is required"))?;
    let name = match args.rank {
        Some(r) => format!("{t}{r}"),
        None => t.to_string(),
    };
    let ctype: CartanType = name.parse().map_err(input)?;
    build_algebra(&ctype).map_err(input)
}

fn catalog_entry(id: &str, seed: u64) -> Result<CatalogEntry, CliError> {
    catalog::entry(id, seed).map_err(|e| match e {
        catalog::CatalogError::Unknown(_) | catalog::CatalogError::InvalidPartition(_) => input(e),
        catalog::CatalogError::Mismatch { .. } => CliError::Invariant(e.to_string()),
        _ => CliError::Solver(e.to_string()),
    })
}

fn build(args: &AlgebraArgs) -> Result<(), CliError> {
    let alg = algebra(args)?;
    let rs = alg.root_system();
    let all: Vec<usize> = (0..alg.rank()).collect();
    let data = levi_data(rs, &all).map_err(input)?;
    if args.json {
        let doc = serde_json::json!({
            "name": alg.name(),
            "dim": alg.dim(),
            "rank": alg.rank(),
            "positive_roots": rs.num_positive(),
            "cartan": rs.cartan(),
            "exponents": data.exponents,
            "coxeter": data.coxeter_max,
            "cartan_det": data.cartan_det,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        return Ok(());
    }
    println!(
        "{}: dim {}, rank {}, {} positive roots",
        alg.name(),
        alg.dim(),
        alg.rank(),
        rs.num_positive()
    );
    println!(
        "exponents {:?}, Coxeter number {}, det Cartan {}",
        data.exponents, data.coxeter_max, data.cartan_det
    );
    println!("Cartan matrix (row i: alpha_j(h_i)):");
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        println!("  {}", cells.join(""));
    }
    Ok(())
}

fn analyze(args: &AnalyzeArgs) -> Result<(), CliError> {
    let (doc, alg_holder);
    if let Some(id) = &args.catalog {
        let entry = catalog_entry(id, args.seed)?;
        doc = ReportDocument::for_entry(&entry, args.seed).map_err(|e| CliError::Solver(e.to_string()))?;
    } else {
        alg_holder = algebra(&args.algebra)?;
        let alg = &alg_holder;
        let e1 = parse_element(alg, args.e1.as_deref().ok_or_else(|| input("--e1 is required"))?).map_err(input)?;
        let e2 = parse_element(alg, args.e2.as_deref().ok_or_else(|| input("--e2 is required"))?).map_err(input)?;
        let pair = NilpotentPair::new(alg, e1, e2).map_err(input)?;
        let ch = match (&args.h1_labels, &args.h2_labels) {
            (Some(l1), Some(l2)) => {
                let h1 = alg
                    .element_from_labels(&parse_labels(l1).map_err(input)?)
                    .map_err(input)?;
                let h2 = alg
                    .element_from_labels(&parse_labels(l2).map_err(input)?)
                    .map_err(input)?;
                let v = verify_characteristic(alg, &pair, &h1, &h2);
                if let Some(c) = v.first_failure() {
                    return Err(CliError::Invariant(format!(
                        "given labels are not a characteristic: {} fails",
                        c.name()
                    )));
                }
                Characteristic { h1, h2 }
            }
            (None, None) => solve_characteristic(alg, &pair).map_err(|e| CliError::Solver(e.to_string()))?,
            _ => return Err(input("give both --h1-labels and --h2-labels or neither")),
        };
        let a = Analysis::new(alg, pair, ch).map_err(|e| CliError::Solver(e.to_string()))?;
        doc = ReportDocument::build(&a, args.seed);
    }
    if args.algebra.json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_text());
        if args.grid {
            println!();
            print!("{}", doc.grid.to_ascii());
        }
    }
    if doc.passed() {
        Ok(())
    } else {
        let names: Vec<&str> = doc.failures().map(|c| c.name.as_str()).collect();
        Err(CliError::Invariant(format!(
            "failed checks: {}{}",
            names.join(", "),
            if doc.violations.is_empty() {
                ""
            } else {
                " (flag violations)"
            }
        )))
    }
}

fn grid(args: &GridArgs) -> Result<(), CliError> {
    let g = if let Some(id) = &args.catalog {
        let entry = catalog_entry(id, args.seed)?;
        let a = entry.analysis().map_err(|e| CliError::Solver(e.to_string()))?;
        GridRender::from_grading(&a.grading, Some(&a.z_e))
    } else {
        let alg = algebra(&args.algebra)?;
        let labels = |l: &Option<String>, flag: &str| -> Result<_, CliError> {
            let l = l.as_deref().ok_or_else(|| input(format!("{flag} is required")))?;
            let v = parse_labels(l).map_err(input)?;
            alg.element_from_labels(&v).map_err(input)
        };
        let h1 = labels(&args.h1_labels, "--h1-labels")?;
        let h2 = labels(&args.h2_labels, "--h2-labels")?;
        let grading = BiGrading::new(&alg, &h1, &h2).map_err(input)?;
        GridRender::from_grading(&grading, None)
    };
    if args.algebra.json {
        println!("{}", serde_json::to_string_pretty(&g).expect("json"));
    } else {
        print!("{}", g.to_ascii());
        println!("total {}", g.total());
    }
    Ok(())
}

fn run_suite(args: &SuiteArgs) -> Result<(), CliError> {
    let opts = SuiteOptions {
        filter: args.filter.clone(),
        seed: args.seed,
        golden_dir: args.golden_dir.clone().unwrap_or_else(suite::default_golden_dir),
    };
    let summary = suite::run(&opts);
    print!("{}", summary.to_text());
    if summary.tallies.is_empty() && summary.errors.is_empty() {
        return Err(input(format!(
            "filter {:?} matches nothing",
            args.filter.as_deref().unwrap_or("")
        )));
    }
    if summary.passed() {
        Ok(())
    } else if summary.tallies.values().all(|t| t.failed.is_empty()) {
        Err(CliError::Solver("some catalog entries could not be built".into()))
    } else {
        Err(CliError::Invariant("suite failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(a) => build(a),
        Command::Analyze(a) => analyze(a),
        Command::Grid(a) => grid(a),
        Command::Suite(a) => run_suite(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
