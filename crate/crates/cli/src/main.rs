//! Command line driver. Reads a JSON input document (file argument or
//! stdin), runs the requested analysis, and writes a JSON report with
//! stable key order to stdout or `--output`.
//!
//! Exit codes: 0 success, 1 schema violation, 2 precondition error,
//! 3 budget exhaustion, 4 internal consistency failure.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use toric_gauss::gauss::{self, EnumerationMode};
use toric_gauss::io::{self, InputDocument};
use toric_gauss::point::PointConfiguration;
use toric_gauss::{families, jets, oracle, polytope, Error};

#[derive(Parser)]
#[command(
    name = "toric-gauss",
    about = "Exact higher order Gauss map invariants of projective toric varieties",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Input document path; `-` or omitted reads stdin.
    input: Option<PathBuf>,

    /// Jet order k (overrides the input document).
    #[arg(short = 'k', long = "order", visible_alias = "k")]
    order: Option<u32>,

    /// Enumeration strategy for the Gauss analysis.
    #[arg(long, value_parser = ["full", "exchange"])]
    mode: Option<String>,

    /// Enumeration budget (subset extensions / exchange tests).
    #[arg(long)]
    budget: Option<u64>,

    /// Worker threads for subset enumeration (default: all cores).
    #[arg(long)]
    threads: Option<usize>,

    /// Reject input whose affine span is a proper subspace instead of
    /// reducing to it.
    #[arg(long = "strict-dim")]
    strict_dim: bool,

    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the matrix of k-jets at (1,...,1) and its rank.
    Jets(CommonArgs),
    /// Report generic k-jet spannedness, and full spannedness via the edge
    /// criterion when the hull is smooth.
    Spanned(CommonArgs),
    /// Full order-k Gauss map analysis: B_k, fiber dimension, projection,
    /// fiber points and classification flags.
    Gauss(CommonArgs),
    /// Finiteness classification combining the Gauss analysis with the
    /// polytope predicates.
    Classify(CommonArgs),
    /// Cross-check the pruned enumeration and the exchange walk against the
    /// unpruned brute-force oracle.
    Oracle(CommonArgs),
    /// Generate a bundled family instance and analyze it.
    Family {
        /// Family name; `pnN` is the two-parameter singular family.
        name: String,
        /// Dimension parameter n >= 2.
        #[arg(long)]
        n: usize,
        /// Width parameter N >= 2.
        #[arg(long = "N", visible_alias = "big-n")]
        big_n: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Schema(_) | Error::DimensionMismatch(_) => 1,
        Error::BudgetExceeded { .. } => 3,
        Error::Mismatch(_) | Error::ConsistencyViolation(_) => 4,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Jets(args) => with_input(&args, |cfg, k, _, _| {
            let jm = jets::jet_matrix(cfg, k);
            Ok(io::to_json_pretty(&io::jets_document(cfg, &jm)))
        }),
        Command::Spanned(args) => with_input(&args, |cfg, k, _, _| {
            let dimension = jets::osculating_dimension(cfg, k);
            let q = jets::jet_row_count(cfg.ambient_rank(), k);
            let hull = polytope::convex_hull(cfg)?;
            let hull_smooth = polytope::is_smooth(&hull);
            let fully_spanned = if hull_smooth {
                Some(polytope::edge_criterion_kjet(&hull, k)?)
            } else {
                None
            };
            let doc = io::SpannedDocument {
                schema: io::SCHEMA_VERSION,
                command: "spanned".to_string(),
                order: k,
                ambient_rank: cfg.ambient_rank(),
                q,
                osculating_dimension: dimension,
                generically_spanned: dimension == q,
                hull_smooth,
                fully_spanned,
                integers_exceed_53bit: false,
            };
            Ok(io::to_json_pretty(&doc))
        }),
        Command::Gauss(args) => with_input(&args, |cfg, k, mode, budget| {
            let report = gauss::analyze(cfg, k, mode, budget)?;
            Ok(io::to_json_pretty(&io::gauss_document(&report, "gauss")))
        }),
        Command::Classify(args) => with_input(&args, |cfg, k, mode, budget| {
            let report = gauss::analyze(cfg, k, mode, budget)?;
            let classification = gauss::classify(cfg, k, budget)?;
            Ok(io::to_json_pretty(&io::classify_document(
                cfg,
                k,
                &classification,
                report.fiber_dimension,
            )))
        }),
        Command::Oracle(args) => with_input(&args, |cfg, k, _, budget| {
            let check = oracle::cross_check(cfg, k, budget)?;
            eprintln!(
                "timing: oracle {}us, pruned {}us, exchange {}us",
                check.oracle_micros, check.full_micros, check.exchange_micros
            );
            Ok(io::to_json_pretty(&io::oracle_document(&check)))
        }),
        Command::Family {
            name,
            n,
            big_n,
            common,
        } => {
            if name != "pnN" {
                return Err(Error::Schema(format!(
                    "argument \"name\": unknown family {name:?}, expected \"pnN\""
                )));
            }
            if n < 2 || big_n < 2 {
                return Err(Error::Schema(
                    "arguments \"--n\" and \"--N\" must be at least 2".to_string(),
                ));
            }
            let cfg = families::pn_family(n, big_n);
            let k = common.order.unwrap_or(2);
            let budget = common.budget.unwrap_or(gauss::DEFAULT_BUDGET);
            let mode = parse_mode(common.mode.as_deref())?.unwrap_or(EnumerationMode::Full);
            install_pool(common.threads, || {
                let report = gauss::analyze(&cfg, k, mode, budget)?;
                emit(&common, io::to_json_pretty(&io::gauss_document(&report, "family")))
            })
        }
    }
}

fn parse_mode(mode: Option<&str>) -> Result<Option<EnumerationMode>, Error> {
    match mode {
        None => Ok(None),
        Some("full") => Ok(Some(EnumerationMode::Full)),
        Some("exchange") => Ok(Some(EnumerationMode::Exchange)),
        Some(other) => Err(Error::Schema(format!(
            "flag \"--mode\": expected \"full\" or \"exchange\", found {other:?}"
        ))),
    }
}

fn read_input(args: &CommonArgs) -> Result<InputDocument, Error> {
    let text = match &args.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Schema(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    InputDocument::parse(&text)
}

fn with_input<F>(args: &CommonArgs, f: F) -> Result<(), Error>
where
    F: FnOnce(&PointConfiguration, u32, EnumerationMode, u64) -> Result<String, Error>
        + Send,
{
    let mut doc = read_input(args)?;
    if args.strict_dim {
        doc.options.strict_dimension = Some(true);
    }
    let cfg = doc.resolve_configuration()?;
    let k = args
        .order
        .or(doc.order)
        .ok_or_else(|| Error::Schema("field \"order\": required (or pass --order)".to_string()))?;
    let mode = parse_mode(args.mode.as_deref())?
        .or(doc.mode()?)
        .unwrap_or(EnumerationMode::Full);
    let budget = args
        .budget
        .or(doc.options.budget)
        .unwrap_or(gauss::DEFAULT_BUDGET);
    install_pool(args.threads, || {
        let out = f(&cfg, k, mode, budget)?;
        emit(args, out)
    })
}

fn install_pool<F>(threads: Option<usize>, f: F) -> Result<(), Error>
where
    F: FnOnce() -> Result<(), Error> + Send,
{
    match threads {
        None => f(),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| Error::Schema(format!("flag \"--threads\": {e}")))?;
            pool.install(f)
        }
    }
}

fn emit(args: &CommonArgs, text: String) -> Result<(), Error> {
    match &args.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
