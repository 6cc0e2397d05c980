use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bicliques::bench::{to_csv, Sweep, SweepParam};
use bicliques::{
    generate, greedy_oct, min_oct_exhaustive, realized_stats, validate_oct, Algorithm, Error,
    GeneratorParams, Graph, OctDecomposition, RunOptions,
};
use clap::{Args, Parser, Subcommand};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 124;

#[derive(Parser)]
#[command(
    name = "bicliques",
    version,
    about = "Maximal (induced) biclique enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a near-bipartite graph and its OCT decomposition.
    Generate {
        #[command(flatten)]
        params: GenFlags,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output prefix; writes <OUT>.graph and <OUT>.oct.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Compute or check an OCT decomposition.
    Oct {
        graph: PathBuf,
        /// Exact search allowing at most K vertices in O (small graphs only).
        #[arg(long, value_name = "K", conflicts_with = "check")]
        exact: Option<usize>,
        /// Seed for the greedy heuristic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check this decomposition instead of computing one.
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Enumerate maximal bicliques or maximal induced bicliques.
    Enumerate {
        graph: PathBuf,
        #[arg(short, long)]
        algorithm: Algorithm,
        /// Decomposition file for oct-mib2 and oct-mica.
        #[arg(long, value_name = "FILE", conflicts_with = "oct_heuristic")]
        oct: Option<PathBuf>,
        /// Compute a decomposition with the greedy heuristic.
        #[arg(long)]
        oct_heuristic: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the bicliques, one per line, sorted.
        #[arg(long, conflicts_with = "count_only")]
        list: bool,
        /// Keep only a membership index, not the ordered listing.
        #[arg(long)]
        count_only: bool,
        /// Stop after this many seconds and report a partial count.
        #[arg(long, value_name = "SECONDS")]
        timeout: Option<f64>,
    },
    /// Run a parameter sweep over generated graphs and write CSV.
    Bench {
        #[command(flatten)]
        params: GenFlags,
        /// Generator parameter to vary: nl, nr, no, d_lr, d_cross, d_o or cv.
        #[arg(long, requires = "values")]
        vary: Option<SweepParam>,
        #[arg(long, value_delimiter = ',', requires = "vary")]
        values: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4")]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        algorithms: Vec<Algorithm>,
        #[arg(long, value_name = "SECONDS")]
        timeout: Option<f64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write CSV here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenFlags {
    #[arg(long, default_value_t = 909)]
    nl: usize,
    #[arg(long, default_value_t = 91)]
    nr: usize,
    #[arg(long, default_value_t = 10)]
    no: usize,
    #[arg(long, default_value_t = 0.05)]
    d_lr: f64,
    /// Defaults to --d-lr.
    #[arg(long)]
    d_cross: Option<f64>,
    /// Defaults to --d-lr.
    #[arg(long)]
    d_o: Option<f64>,
    /// Sets both --cv-lr and --cv-cross.
    #[arg(long, default_value_t = 0.5)]
    cv: f64,
    #[arg(long)]
    cv_lr: Option<f64>,
    #[arg(long)]
    cv_cross: Option<f64>,
}

impl GenFlags {
    fn params(&self, seed: u64) -> GeneratorParams {
        GeneratorParams {
            n_l: self.nl,
            n_r: self.nr,
            n_o: self.no,
            d_lr: self.d_lr,
            d_cross: self.d_cross.unwrap_or(self.d_lr),
            d_o: self.d_o.unwrap_or(self.d_lr),
            cv_lr: self.cv_lr.unwrap_or(self.cv),
            cv_cross: self.cv_cross.unwrap_or(self.cv),
            seed,
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_)
            | Error::InvalidSweep(_)
            | Error::UnknownAlgorithm(_)
            | Error::MissingDecomposition(_)
            | Error::TooLarge { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse_edge_list(&read(path)?)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn timeout(seconds: Option<f64>) -> Result<Option<Duration>, Failure> {
    seconds
        .map(|s| {
            Duration::try_from_secs_f64(s)
                .map_err(|_| Failure::Usage(format!("invalid timeout {s}")))
        })
        .transpose()
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut stdout = BufWriter::new(io::stdout().lock());
    match cli.command {
        Command::Generate { params, seed, out } => {
            let p = params.params(seed);
            let (g, d) = generate(&p)?;
            write(&with_extension(&out, "graph"), &g.to_edge_list())?;
            write(&with_extension(&out, "oct"), &d.to_string())?;
            writeln!(stdout, "n={} m={}", g.n(), g.m())?;
            writeln!(stdout, "{}", realized_stats(&g, &d))?;
        }
        Command::Oct {
            graph,
            exact,
            seed,
            check,
            out,
        } => {
            let g = load_graph(&graph)?;
            if let Some(path) = check {
                let d = OctDecomposition::parse(&read(&path)?, g.n())?;
                let violations = validate_oct(&g, &d)?;
                if violations.is_empty() {
                    writeln!(stdout, "valid n_o={}", d.n_oct())?;
                } else {
                    for (u, v) in &violations {
                        writeln!(stdout, "violation {u} {v}")?;
                    }
                    return Err(Failure::Runtime(format!(
                        "{} edges inside L or R",
                        violations.len()
                    )));
                }
                return Ok(0);
            }
            let start = Instant::now();
            let d = match exact {
                Some(k) => min_oct_exhaustive(&g, k)
                    .ok_or_else(|| Failure::Runtime(format!("no OCT set of size <= {k}")))?,
                None => greedy_oct(&g, seed),
            };
            let elapsed = start.elapsed().as_secs_f64();
            match out {
                Some(path) => write(&path, &d.to_string())?,
                None => write!(stdout, "{d}")?,
            }
            writeln!(io::stderr(), "n_o={} oct_time_s={elapsed:.6}", d.n_oct())?;
        }
        Command::Enumerate {
            graph,
            algorithm,
            oct,
            oct_heuristic,
            seed,
            list,
            count_only,
            timeout: seconds,
        } => {
            let g = load_graph(&graph)?;
            let d = match (oct, oct_heuristic) {
                (Some(path), _) => Some(OctDecomposition::parse(&read(&path)?, g.n())?),
                (None, true) => {
                    let start = Instant::now();
                    let d = greedy_oct(&g, seed);
                    writeln!(
                        stdout,
                        "n_o={} oct_time_s={:.6}",
                        d.n_oct(),
                        start.elapsed().as_secs_f64()
                    )?;
                    Some(d)
                }
                (None, false) => None,
            };
            let opts = RunOptions {
                timeout: timeout(seconds)?,
                keep_order: list || !count_only,
            };
            let result = algorithm.run(&g, d.as_ref(), &opts)?;
            if list {
                for b in result.bicliques.iter() {
                    writeln!(stdout, "{b}")?;
                }
            }
            writeln!(stdout, "count={}", result.count)?;
            writeln!(stdout, "wall_time_s={:.6}", result.wall_time)?;
            if result.timed_out {
                writeln!(stdout, "timed_out=true")?;
                stdout.flush()?;
                return Ok(EXIT_TIMEOUT);
            }
        }
        Command::Bench {
            params,
            vary,
            values,
            seeds,
            algorithms,
            timeout: seconds,
            jobs,
            out,
        } => {
            let sweep = Sweep {
                base: params.params(0),
                vary: vary.map(|p| (p, values)),
                seeds,
                algorithms,
                timeout: timeout(seconds)?,
                jobs,
            };
            let csv = to_csv(&sweep.run()?);
            match out {
                Some(path) => write(&path, &csv)?,
                None => stdout.write_all(csv.as_bytes())?,
            }
        }
    }
    stdout.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
