//! Command-line front end for the permutation-weight and q-Eulerian
//! polynomial engines.
//!
//! Exit codes: 0 on success or a passing sweep, 1 when a verification
//! sweep or engine comparison finds violations, 2 for usage, parse, and
//! input errors.
//!
//! Environment: `QEULER_CACHE` names a table file that compute commands
//! read as a starting point (and that `cache save`/`cache load` use when
//! `--path` is omitted); `QEULER_ENUM_CEILING` overrides the brute-force
//! enumeration ceiling.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use qeuler_core::cache;
use qeuler_core::eulerian::{self, EulerianTable, DEFAULT_ENUM_CEILING};
use qeuler_core::golden;
use qeuler_core::partitions::{self, PartitionTable};
use qeuler_core::perm::{self, Permutation};
use qeuler_core::report::VerificationReport;
use qeuler_core::stabilization;
use qeuler_core::Poly2;

#[derive(Parser)]
#[command(
    name = "qeuler",
    version,
    about = "Permutation weights, q-Eulerian polynomials, and their stabilized series"
)]
struct Cli {
    /// Worker threads for enumeration (default: all cores); 1 gives the
    /// same output, single-threaded
    #[arg(long, global = true, value_name = "J")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weight, descent count, and split trace of one permutation
    Weight {
        /// Permutation word: digits ("781659243") or comma-separated
        /// ("6,5,9,2,4,3,10")
        perm: String,
    },
    /// Print the polynomial E_n
    En(EnArgs),
    /// Print a prefix of the stabilized series W_d(t)
    Wd {
        /// Series index, at least 1
        #[arg(long)]
        d: usize,
        /// Highest t-exponent to include
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
    /// Two-type partition numbers T(n, k)
    Tnk(TnkArgs),
    /// Run a verification sweep; exit 0 iff it passes
    Verify(VerifyArgs),
    /// Save or load the polynomial table as a plain-text file
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Args)]
struct EnArgs {
    /// Symmetric group size
    #[arg(long)]
    n: usize,
    /// Engine: exhaustive enumeration, the recurrence, or both compared
    #[arg(long, value_enum, default_value_t = Method::Recur)]
    method: Method,
    #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
    format: PolyFormat,
    /// Diff both engines against the transcribed reference tables
    /// (n <= 10; enumeration column included through n = 8); exit stays 0
    /// on reference-only mismatches
    #[arg(long)]
    golden: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Recur,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    /// Canonical one-line form, x groups ascending
    Text,
    /// "d,m,coefficient" rows
    Csv,
    /// "d m coefficient" rows
    Lines,
}

#[derive(Args)]
#[command(group = ArgGroup::new("selector").required(true).args(["n", "table"]))]
struct TnkArgs {
    /// Partition total (needs --k)
    #[arg(long, requires = "k")]
    n: Option<usize>,
    /// Number of second-type parts (needs --n)
    #[arg(long, requires = "n")]
    k: Option<usize>,
    /// Print the whole triangle for rows 0..=N instead
    #[arg(long, value_name = "N", conflicts_with_all = ["n", "k"])]
    table: Option<usize>,
    /// Triangle layout (single values always print bare)
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    /// Aligned triangle rows
    Text,
    /// "n,k,T" rows
    Csv,
    /// "index value" rows, triangle read row by row from index 0
    Bfile,
}

#[derive(Args)]
struct VerifyArgs {
    /// Report format
    #[arg(long, value_enum, default_value_t = ReportFormat::Text, global = true)]
    format: ReportFormat,

    #[command(subcommand)]
    suite: Suite,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Suite {
    /// Enumeration vs recurrence engine on every coefficient
    Recurrence {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Constancy of top-of-range coefficients once n passes d + k + 1
    Stabilization {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Coefficient shift equality above the threshold, failure at and
    /// below it
    Shift {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Exhaustive weight-gap bounds and their sharpness
    Disparity {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Anchoring map: weight-preserving bijection onto words ending in 1
    Bijection {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Column shift between E_n and its ending-in-1 restriction
    #[command(name = "lemma45")]
    Lemma45 {
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
    /// Partition triangle: published rows, enumeration agreement,
    /// append-ones expansion, alternating-sum identity
    Partitions {
        /// Bound for the enumeration-vs-count sweep
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Bound for the append-ones domain sweep
        #[arg(long, default_value_t = 15)]
        append_n: usize,
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        #[arg(long, default_value_t = 20)]
        max_d: usize,
    },
    /// Conjectured series identities: alternating sum and the partition
    /// correspondence (evidence, not proof)
    Conjecture {
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 10)]
        max_d: usize,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Compute E_0..E_max_n and write them to the cache file
    Save {
        /// Cache file (default: $QEULER_CACHE)
        #[arg(long)]
        path: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Read and validate a cache file, reporting what it holds
    Load {
        /// Cache file (default: $QEULER_CACHE)
        #[arg(long)]
        path: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok((text, code)) => {
            use std::io::Write as _;
            let mut stdout = std::io::stdout().lock();
            // A closed pipe on the receiving end is not our failure; keep
            // the command's exit code and stop writing.
            let _ = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush());
            code
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

type CmdOutput = Result<(String, ExitCode), String>;

fn run(command: Command) -> CmdOutput {
    match command {
        Command::Weight { perm } => cmd_weight(&perm),
        Command::En(args) => cmd_en(args),
        Command::Wd { d, terms } => cmd_wd(d, terms),
        Command::Tnk(args) => cmd_tnk(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Cache { action } => cmd_cache(action),
    }
}

fn enum_ceiling() -> Result<usize, String> {
    match std::env::var("QEULER_ENUM_CEILING") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| format!("QEULER_ENUM_CEILING must be a nonnegative integer, got {raw:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUM_CEILING),
        Err(e) => Err(format!("QEULER_ENUM_CEILING: {e}")),
    }
}

/// Starting table for compute commands: the file named by `QEULER_CACHE`
/// when it is set and exists, otherwise empty. Compute commands never
/// write the cache implicitly; `cache save` does that explicitly.
fn seeded_table() -> Result<EulerianTable, String> {
    match std::env::var("QEULER_CACHE") {
        Ok(raw) if !raw.is_empty() => {
            let path = PathBuf::from(&raw);
            if path.exists() {
                cache::load(&path).map_err(|e| format!("cache file {raw}: {e}"))
            } else {
                Ok(EulerianTable::new())
            }
        }
        _ => Ok(EulerianTable::new()),
    }
}

fn cache_path(flag: Option<PathBuf>) -> Result<PathBuf, String> {
    if let Some(path) = flag {
        return Ok(path);
    }
    match std::env::var("QEULER_CACHE") {
        Ok(raw) if !raw.is_empty() => Ok(PathBuf::from(raw)),
        _ => Err("no cache file named: pass --path or set QEULER_CACHE".to_string()),
    }
}

fn cmd_weight(text: &str) -> CmdOutput {
    let p: Permutation = text.parse().map_err(|e| format!("{e}"))?;
    let stats = p.stats();
    let split = p.split().map_err(|e| format!("{e}"))?;
    let pieces: Vec<String> = split.pieces.iter().map(ToString::to_string).collect();
    let (weight, trace) = p.weight_traced();
    let mut out = String::new();
    let _ = writeln!(out, "permutation: {p}");
    let _ = writeln!(out, "length: {}", stats.length);
    let _ = writeln!(out, "descents: {}", stats.descents);
    let _ = writeln!(out, "weight: {weight}");
    let _ = writeln!(out, "disparity: {}", stats.disparity);
    let _ = writeln!(out, "split: {}", pieces.join(" . "));
    let _ = writeln!(out, "trace:");
    out.push_str(&trace);
    Ok((out, ExitCode::SUCCESS))
}

fn render_poly(poly: &Poly2, format: PolyFormat) -> String {
    match format {
        PolyFormat::Text => format!("{}\n", poly.render()),
        PolyFormat::Csv => poly.to_csv(),
        PolyFormat::Lines => poly.to_lines(),
    }
}

fn cmd_en(args: EnArgs) -> CmdOutput {
    let ceiling = enum_ceiling()?;
    if args.golden {
        let reference = golden::golden_en(args.n).map_err(|e| e.to_string())?;
        let mut table = seeded_table()?;
        let recur = eulerian::en_recur(args.n, &mut table);
        let brute = if args.n <= ceiling.min(8) {
            Some(eulerian::en_brute(args.n, ceiling).map_err(|e| e.to_string())?)
        } else {
            None
        };
        let diff = golden::three_way_diff(&recur, brute.as_ref(), &reference);
        let code = if diff.engines_agree { ExitCode::SUCCESS } else { ExitCode::from(1) };
        return Ok((diff.render(), code));
    }
    match args.method {
        Method::Brute => {
            let poly = eulerian::en_brute(args.n, ceiling)
                .map_err(|e| format!("{e}, or raise QEULER_ENUM_CEILING"))?;
            Ok((render_poly(&poly, args.format), ExitCode::SUCCESS))
        }
        Method::Recur => {
            let mut table = seeded_table()?;
            let poly = eulerian::en_recur(args.n, &mut table);
            Ok((render_poly(&poly, args.format), ExitCode::SUCCESS))
        }
        Method::Both => {
            let brute = eulerian::en_brute(args.n, ceiling)
                .map_err(|e| format!("{e}, or raise QEULER_ENUM_CEILING"))?;
            let mut table = seeded_table()?;
            let recur = eulerian::en_recur(args.n, &mut table);
            let mut out = render_poly(&recur, args.format);
            if brute == recur {
                out.push_str("diff: engines agree\n");
                Ok((out, ExitCode::SUCCESS))
            } else {
                let keys: std::collections::BTreeSet<(usize, usize)> = brute
                    .terms()
                    .chain(recur.terms())
                    .map(|(d, m, _)| (d, m))
                    .collect();
                for (d, m) in keys {
                    let b = brute.coeff_xq(d, m);
                    let r = recur.coeff_xq(d, m);
                    if b != r {
                        let _ = writeln!(out, "diff: x^{d} q^{m} enumeration={b} recurrence={r}");
                    }
                }
                Ok((out, ExitCode::from(1)))
            }
        }
    }
}

fn cmd_wd(d: usize, terms: usize) -> CmdOutput {
    let mut table = seeded_table()?;
    let prefix = stabilization::wd_prefix(d, terms, &mut table).map_err(|e| e.to_string())?;
    let out = format!("series: {}\ncsv: {}\n", prefix.render(), prefix.render_csv());
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_tnk(args: TnkArgs) -> CmdOutput {
    let mut table = PartitionTable::new();
    match (args.n, args.k, args.table) {
        (Some(n), Some(k), None) => Ok((format!("{}\n", table.count(n, k)), ExitCode::SUCCESS)),
        (None, None, Some(n_max)) => {
            let out = match args.format {
                TableFormat::Text => partitions::render_triangle(n_max, &mut table),
                TableFormat::Csv => partitions::triangle_csv(n_max, &mut table),
                TableFormat::Bfile => partitions::triangle_b_file(n_max, &mut table),
            };
            Ok((out, ExitCode::SUCCESS))
        }
        _ => Err("pass either --n with --k, or --table".to_string()),
    }
}

fn render_reports(reports: &[VerificationReport], format: ReportFormat) -> String {
    let mut out = String::new();
    match format {
        ReportFormat::Text => {
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                out.push_str(&report.render_text());
            }
        }
        ReportFormat::Csv => {
            for (i, report) in reports.iter().enumerate() {
                let csv = report.render_csv();
                if i == 0 {
                    out.push_str(&csv);
                } else {
                    for line in csv.lines().skip(1) {
                        out.push_str(line);
                        out.push('\n');
                    }
                }
            }
        }
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> CmdOutput {
    let reports: Vec<VerificationReport> = match args.suite {
        Suite::Recurrence { max_n } => {
            vec![eulerian::verify_brute_recur(max_n, enum_ceiling()?).map_err(|e| e.to_string())?]
        }
        Suite::Stabilization { max_n } => {
            let mut table = seeded_table()?;
            vec![stabilization::verify_stabilization(max_n, &mut table)]
        }
        Suite::Shift { max_n } => {
            let mut table = seeded_table()?;
            vec![stabilization::verify_shift(max_n, &mut table)]
        }
        Suite::Disparity { max_n } => vec![stabilization::verify_disparity(max_n)],
        Suite::Bijection { max_n } => vec![perm::verify_bijection(max_n)],
        Suite::Lemma45 { max_k } => {
            vec![eulerian::verify_star_shift(max_k, enum_ceiling()?).map_err(|e| e.to_string())?]
        }
        Suite::Partitions { max_n, append_n, max_k, max_d } => {
            let mut table = PartitionTable::new();
            vec![
                partitions::check_reference_triangle(&mut table),
                partitions::sweep_enumeration(max_n, &mut table),
                partitions::sweep_append_ones(append_n, &mut table),
                partitions::sweep_alternating_t(max_k, max_d, &mut table),
            ]
        }
        Suite::Conjecture { max_k, max_d } => {
            let mut etable = seeded_table()?;
            let mut ptable = PartitionTable::new();
            vec![
                partitions::sweep_alternating_w(max_k, max_d, &mut etable)
                    .map_err(|e| e.to_string())?,
                partitions::sweep_series_partition_match(max_k, max_d, &mut etable, &mut ptable)
                    .map_err(|e| e.to_string())?,
            ]
        }
    };
    let out = render_reports(&reports, args.format);
    let code = if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok((out, code))
}

fn cmd_cache(action: CacheAction) -> CmdOutput {
    match action {
        CacheAction::Save { path, max_n } => {
            let path = cache_path(path)?;
            let mut table = EulerianTable::new();
            table.ensure(max_n);
            cache::save(&table, &path).map_err(|e| e.to_string())?;
            let out = format!("saved E_0..E_{max_n} to {}\n", path.display());
            Ok((out, ExitCode::SUCCESS))
        }
        CacheAction::Load { path } => {
            let path = cache_path(path)?;
            let table = cache::load(&path).map_err(|e| e.to_string())?;
            let out = match table.max_n() {
                Some(max_n) => format!(
                    "loaded {} polynomials, E_0..E_{max_n}, from {}\n",
                    table.len(),
                    path.display()
                ),
                None => format!("loaded empty table from {}\n", path.display()),
            };
            Ok((out, ExitCode::SUCCESS))
        }
    }
}
