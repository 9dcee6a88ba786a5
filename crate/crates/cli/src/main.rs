use chromroots::chromatic::{chromatic_polynomial, to_falling_factorial};
use chromroots::experiments::corpus::{corpus_all_real_census, extremal_imaginary_search, Corpus};
use chromroots::experiments::lc::{lc_numeric_oracle, quartic_lc, quartic_lc_root};
use chromroots::experiments::scans::{bipartite_scan, bipartite_scan_csv, is_nondecreasing};
use chromroots::experiments::sweep::{random_sweep, ExperimentConfig, SCHEMA_VERSION};
use chromroots::graph::RingParams;
use chromroots::graph::io::{parse_edgelist, read_graph6, write_graph6};
use chromroots::poly::PolyJson;
use chromroots::ring::{ring_root_report, ring_scan, ring_scan_csv};
use chromroots::roots::{count_real_roots, find_roots};
use chromroots::{Error, Graph};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const LONG_VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    "\nlibrary: chromroots ",
    env!("CARGO_PKG_VERSION"),
    "\njson schema: 1",
);

#[derive(Parser, Debug)]
#[command(name = "chromroots", version, long_version = LONG_VERSION, arg_required_else_help = true)]
#[command(about = "Chromatic polynomials, their roots and non-real root certificates")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "CHROMROOTS_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chromatic polynomial of one graph.
    Chrom {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Chromatic roots of one graph, with an exact all-real decision.
    Roots {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Root report for the ring of cliques C4(a,b,c,d).
    Ring {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        d: usize,
        /// Isolation width for the W roots, as a power of ten.
        #[arg(long, default_value_t = 20)]
        digits: u32,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also write the nonreal chromatic roots as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Leftmost W root and its bound for symmetric rings a = 2..amax.
    RingScan {
        #[arg(long, default_value_t = 40)]
        amax: usize,
        #[arg(long, default_value_t = 12)]
        digits: u32,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Discriminant certificates on G(n,p) samples.
    Random {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Also decide realness exactly (small n only).
        #[arg(long)]
        exact: bool,
        /// TOML file with any of n, p, trials, seed, jobs, exact; flags win.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Omit per-trial records.
        #[arg(long)]
        summary_only: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// All-real statistics over a graph6 corpus.
    Census {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Graph with the chromatic root of largest imaginary part in a graph6 corpus.
    Extremal {
        file: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Largest imaginary part of the roots of K_{n/2,n/2} for even n <= nmax.
    BipartiteScan {
        #[arg(long, default_value_t = 16)]
        nmax: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Evaluate lc(p), optionally against the numeric oracle.
    Lc {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        oracle: bool,
    },
    /// Largest root of lc in (0, 1).
    LcRoot {
        #[arg(long, default_value_t = 12)]
        digits: u32,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RandomFile {
    n: Option<usize>,
    p: Option<f64>,
    trials: Option<u64>,
    seed: Option<u64>,
    jobs: Option<usize>,
    exact: Option<bool>,
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Computation(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

/// Write via a sibling temporary file and rename, so readers never see a
/// partial file.
fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .ok_or_else(|| Failure::Usage(format!("{} is not a file path", path.display())))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let io = |e: std::io::Error| Failure::Computation(format!("writing {}: {e}", path.display()));
    std::fs::write(&tmp, contents).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        io(e)
    })
}

fn emit(path: Option<&Path>, contents: &str) -> CliResult<()> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Computation(format!("stdout: {e}")))
        }
    }
}

fn emit_json(path: Option<&Path>, value: &impl serde::Serialize) -> CliResult<()> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Computation(e.to_string()))?;
    s.push('\n');
    emit(path, &s)
}

fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))
}

fn load_graph(path: &Path, format: Format) -> CliResult<Graph> {
    let text = read_text(path)?;
    match format {
        Format::Edgelist => Ok(parse_edgelist(&text)?),
        Format::Graph6 => {
            let mut records = read_graph6(text.as_bytes())?;
            if records.len() != 1 {
                return Err(Failure::Usage(format!(
                    "{} holds {} graphs; expected exactly one (use census/extremal for corpora)",
                    path.display(),
                    records.len()
                )));
            }
            Ok(records.remove(0).graph?)
        }
    }
}

fn load_corpus(path: &Path) -> CliResult<Corpus> {
    let f = std::fs::File::open(path).map_err(|e| Failure::Usage(format!("reading {}: {e}", path.display())))?;
    Ok(Corpus::read(std::io::BufReader::new(f))?)
}

fn need<T>(v: Option<T>, name: &str) -> CliResult<T> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required (flag or config file)")))
}

fn tolerance(digits: u32) -> BigRational {
    BigRational::new(1.into(), BigInt::from(10).pow(digits))
}

fn warn_errors(kind: &str, errors: &[chromroots::experiments::corpus::LineError]) {
    for e in errors {
        eprintln!("warning: {kind} line {}: {}", e.line, e.message);
    }
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be >= 1".into()));
        }
        // Only fails if the pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    match cli.command {
        Command::Chrom { file, format, json } => {
            let g = load_graph(&file, format)?;
            let p = chromatic_polynomial(&g)?;
            let doc = json!({
                "schema": SCHEMA_VERSION,
                "graph6": write_graph6(&g)?,
                "n": g.order(),
                "m": g.size(),
                "polynomial": PolyJson::from(&p),
                "text": p.to_string(),
                "falling_factorial": to_falling_factorial(&p).coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            emit_json(json.as_deref(), &doc)
        }
        Command::Roots { file, format, json } => {
            let g = load_graph(&file, format)?;
            let p = chromatic_polynomial(&g)?;
            let roots = find_roots(&p)?;
            let count = count_real_roots(&p)?;
            let doc = json!({
                "schema": SCHEMA_VERSION,
                "graph6": write_graph6(&g)?,
                "polynomial": PolyJson::from(&p),
                "distinct_real": count.distinct_real,
                "distinct_total": count.distinct_total,
                "report": roots.report(),
            });
            emit_json(json.as_deref(), &doc)?;
            if !roots.converged {
                return Err(Failure::Computation(format!(
                    "root residual {:e} above tolerance; report marked indeterminate",
                    roots.residual
                )));
            }
            Ok(())
        }
        Command::Ring { a, b, c, d, digits, json, csv } => {
            let params = RingParams::new(a, b, c, d)?;
            let report = ring_root_report(params, &tolerance(digits))?;
            if let Some(path) = csv {
                let mut s = String::from("re,im\n");
                for [re, im] in &report.chromatic_nonreal {
                    s.push_str(&format!("{re},{im}\n"));
                }
                write_atomic(&path, &s)?;
            }
            emit_json(json.as_deref(), &json!({ "schema": SCHEMA_VERSION, "report": report }))
        }
        Command::RingScan { amax, digits, csv } => {
            if amax < 2 {
                return Err(Failure::Usage("--amax must be >= 2".into()));
            }
            let rows = ring_scan(amax, &tolerance(digits))?;
            emit(csv.as_deref(), &ring_scan_csv(&rows))
        }
        Command::Random { n, p, trials, seed, exact, config, summary_only, json } => {
            let file: RandomFile = match &config {
                Some(path) => toml::from_str(&read_text(path)?)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                None => RandomFile::default(),
            };
            let mut cfg = ExperimentConfig::new(
                need(n.or(file.n), "n")?,
                need(p.or(file.p), "p")?,
                need(trials.or(file.trials), "trials")?,
                need(seed.or(file.seed), "seed")?,
            );
            cfg.exact = exact || file.exact.unwrap_or(false);
            cfg.jobs = cli.jobs.or(file.jobs);
            let report = random_sweep(&cfg)?;
            if summary_only {
                emit_json(json.as_deref(), &report.summary_json())
            } else {
                emit_json(json.as_deref(), &report)
            }
        }
        Command::Census { file, json } => {
            let corpus = load_corpus(&file)?;
            let report = corpus_all_real_census(&corpus);
            warn_errors("census", &report.errors);
            emit_json(json.as_deref(), &report)
        }
        Command::Extremal { file, json } => {
            let corpus = load_corpus(&file)?;
            let report = extremal_imaginary_search(&corpus)?;
            warn_errors("extremal: excluded", &report.excluded);
            emit_json(json.as_deref(), &report)
        }
        Command::BipartiteScan { nmax, csv } => {
            if nmax < 4 {
                return Err(Failure::Usage("--nmax must be >= 4".into()));
            }
            let rows = bipartite_scan(nmax)?;
            if !is_nondecreasing(rows.iter().map(|r| r.ratio)) {
                eprintln!("note: max_imag/n is not monotone over this range");
            }
            emit(csv.as_deref(), &bipartite_scan_csv(&rows))
        }
        Command::Lc { p, oracle } => {
            if !(p > 0.0 && p <= 1.0) {
                return Err(Failure::Usage(format!("--p must lie in (0, 1], got {p}")));
            }
            let exact = BigRational::from_float(p).expect("finite");
            let mut doc = json!({
                "schema": SCHEMA_VERSION,
                "p": p,
                "lc": quartic_lc(&exact).to_f64(),
            });
            if oracle {
                doc["oracle"] = serde_json::to_value(lc_numeric_oracle(p)?).expect("serialisable");
            }
            emit_json(None, &doc)
        }
        Command::LcRoot { digits } => {
            let r = quartic_lc_root(&tolerance(digits))?;
            emit_json(
                None,
                &json!({
                    "schema": SCHEMA_VERSION,
                    "root": r.to_f64(),
                    "lo": r.lo.to_string(),
                    "hi": r.hi.to_string(),
                }),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
