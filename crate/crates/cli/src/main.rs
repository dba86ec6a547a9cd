use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use depolar::io::polarized_names;
use depolar::polar::{
    depolarize_chains, depolarize_in, infer_order, natural_order, ordered_support_poset, EnumerationLimits, OrderedSupportPoset,
};
use depolar::reliability::{
    bounds, consecutive_k_of_n_ideal, exhaustive_reliability, monte_carlo, reliability, reliability_levels, Direction,
    Ladder,
};
use depolar::scalar::to_exact_string;
use depolar::{
    betti_numbers, enumerate_depolarizations, graded_numerator, hilbert_numerator, is_quasi_stable,
    min_path_partition, polarize_ideal, support_poset, IdealFile, MonomialIdeal, PathPartition, ProbabilityTable,
    Rational, SystemFile,
};

#[derive(Parser)]
#[command(name = "depolar", version, about = "Polarization, depolarization and reliability of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Polarize an ideal.
    Polarize {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Depolarize a squarefree ideal along a path partition.
    Depolarize {
        input: PathBuf,
        /// Blocks separated by `;`, variables by `,`, bottom first: `x1,x2;x3`.
        #[arg(short, long)]
        partition: String,
        /// Accept any chain partition, not only gap-free paths; chains give
        /// every depolarization.
        #[arg(long)]
        chains: bool,
        #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
        format: RecordFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Hasse diagram of the support poset.
    SupportPoset {
        input: PathBuf,
        /// Variable order breaking ties between equal supports; unlisted
        /// variables follow in their natural order.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, value_enum, default_value_t = PosetFormat::Dot)]
        format: PosetFormat,
        #[command(flatten)]
        out: Output,
    },
    /// All depolarizations up to renaming, as JSON lines.
    Enumerate {
        input: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_vars: usize,
        #[arg(long, default_value_t = 200_000)]
        max_partitions: usize,
        /// Only the depolarizations with fewest variables.
        #[arg(long)]
        maximal: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Hilbert series numerator of an ideal, or of the j-reliability ideal of a system.
    Hilbert {
        input: PathBuf,
        #[arg(short = 'j', long)]
        level: Option<u32>,
        /// Print the total-degree specialization instead.
        #[arg(long)]
        graded: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Betti numbers.
    Betti {
        input: PathBuf,
        #[arg(short = 'j', long)]
        level: Option<u32>,
        #[arg(long, value_enum, default_value_t = BettiFormat::Graded)]
        format: BettiFormat,
        #[command(flatten)]
        out: Output,
    },
    /// Whether an ideal is quasi-stable.
    QuasiStable {
        input: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Reliability of a system file.
    Reliability {
        input: PathBuf,
        #[arg(short = 'j', long)]
        level: Option<u32>,
        #[arg(long, value_enum, default_value_t = Method::Algebraic)]
        method: Method,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Evaluate in double precision.
        #[arg(long)]
        float: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Truncation bounds for R_j.
    Bounds {
        input: PathBuf,
        #[arg(short = 'j', long)]
        level: u32,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_enum, default_value_t = LadderArg::Mvt)]
        ladder: LadderArg,
        #[command(flatten)]
        out: Output,
    },
    /// Time Hilbert numerators of a consecutive k-out-of-n ideal and its maximal depolarization.
    Bench {
        #[arg(long, num_args = 1.., required = true)]
        n: Vec<usize>,
        #[arg(long, num_args = 1.., required = true)]
        k: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RecordFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum BettiFormat {
    Graded,
    Multigraded,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Algebraic,
    Exhaustive,
    MonteCarlo,
}

#[derive(Clone, Copy, ValueEnum)]
enum LadderArg {
    Mvt,
    Taylor,
}

enum Failure {
    Domain(depolar::Error),
    Io(String),
    Input(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Io(m) | Failure::Input(m) => write!(f, "{m}"),
        }
    }
}

impl From<depolar::Error> for Failure {
    fn from(e: depolar::Error) -> Self {
        Failure::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn emit(out: &Output, text: &str) -> CliResult<()> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn is_system_file(text: &str) -> bool {
    !text.lines().any(|l| l.trim_start().starts_with("vars:"))
}

/// An ideal file, or the j-reliability ideal of a system file with `x1..xn` names.
fn load_ideal(path: &Path, level: Option<u32>) -> CliResult<IdealFile> {
    let text = read(path)?;
    if !is_system_file(&text) {
        if level.is_some() {
            return Err(Failure::Input("--level applies to system files only".into()));
        }
        return Ok(IdealFile::parse(&text)?);
    }
    let file = SystemFile::parse(&text)?;
    let j = level.ok_or_else(|| Failure::Input("system file given: choose a level with --level".into()))?;
    let ideal = file.system.j_reliability_ideal(j)?;
    Ok(IdealFile::new(IdealFile::default_names(ideal.num_vars()), ideal))
}

fn load_system(path: &Path) -> CliResult<(SystemFile, ProbabilityTable<Rational>)> {
    let file = SystemFile::parse(&read(path)?)?;
    let probs = file
        .probabilities
        .clone()
        .ok_or_else(|| Failure::Input(format!("{} has no probability table", path.display())))?;
    Ok((file, probs))
}

fn resolve(names: &[String], name: &str) -> CliResult<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| Failure::Input(format!("unknown variable {name:?}")))
}

fn split_names(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty())
}

fn parse_partition(text: &str, names: &[String]) -> CliResult<PathPartition> {
    let blocks = text
        .split(';')
        .map(|b| split_names(b).map(|n| resolve(names, n)).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<Vec<_>>>()?;
    Ok(PathPartition::new(blocks.into_iter().filter(|b| !b.is_empty()).collect()))
}

/// The squarefree ideal the poset lives on, with names for its variables.
fn squarefree(file: &IdealFile) -> CliResult<(MonomialIdeal, Vec<String>)> {
    if file.ideal.is_squarefree() {
        return Ok((file.ideal.clone(), file.names.clone()));
    }
    let (p, map) = polarize_ideal(&file.ideal)?;
    Ok((p, polarized_names(&file.names, &map.caps())))
}

fn value_text(v: &Rational, float: bool) -> String {
    if float {
        format!("{}", depolar::Scalar::to_f64(v))
    } else {
        to_exact_string(v)
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Polarize { input, out } => {
            let file = load_ideal(&input, None)?;
            let (p, map) = polarize_ideal(&file.ideal)?;
            let names = polarized_names(&file.names, &map.caps());
            emit(&out, &IdealFile::new(names, p).to_text())
        }
        Command::Depolarize { input, partition, chains, format, out } => {
            let file = load_ideal(&input, None)?;
            let (ideal, names) = squarefree(&file)?;
            ideal.require_proper()?;
            let partition = parse_partition(&partition, &names)?;
            let record = if chains {
                depolarize_chains(&ideal, &partition)?
            } else {
                let poset = support_poset(&ideal)?;
                let ordered = ordered_support_poset(&poset, &infer_order(&poset, &partition))?;
                depolarize_in(&ideal, &ordered, &partition)?
            };
            let text = match format {
                RecordFormat::Json => format!("{}\n", record.to_json(&names)),
                RecordFormat::Text => {
                    let ynames = IdealFile::default_names(record.num_vars())
                        .into_iter()
                        .map(|n| n.replacen('x', "y", 1))
                        .collect();
                    IdealFile::new(ynames, record.ideal).to_text()
                }
            };
            emit(&out, &text)
        }
        Command::SupportPoset { input, order, format, out } => {
            let file = load_ideal(&input, None)?;
            let (ideal, names) = squarefree(&file)?;
            let poset = support_poset(&ideal)?;
            let ordered: OrderedSupportPoset = match order {
                Some(o) => {
                    let mut order = split_names(&o).map(|n| resolve(&names, n)).collect::<CliResult<Vec<_>>>()?;
                    let rest: Vec<usize> = poset.vars().iter().copied().filter(|v| !order.contains(v)).collect();
                    order.extend(rest);
                    ordered_support_poset(&poset, &order)?
                }
                None => natural_order(&poset),
            };
            let text = match format {
                PosetFormat::Dot => ordered.to_dot(&names),
                PosetFormat::Text => {
                    let mut s = String::new();
                    for (i, &v) in poset.vars().iter().enumerate() {
                        let set: Vec<&str> = poset.sets()[i].iter().map(|&g| names[g].as_str()).collect();
                        s.push_str(&format!("C({}) = {{{}}}\n", names[v], set.join(", ")));
                    }
                    for (a, b) in ordered.covers() {
                        s.push_str(&format!("{} < {}\n", names[a], names[b]));
                    }
                    let min = min_path_partition(&ordered);
                    s.push_str(&format!("width {}\nminimum path partition {}\n", ordered.width(), min.len()));
                    s
                }
            };
            emit(&out, &text)
        }
        Command::Enumerate { input, max_vars, max_partitions, maximal, out } => {
            let file = load_ideal(&input, None)?;
            let (_, names) = squarefree(&file)?;
            let limits = EnumerationLimits { max_vars, max_partitions, ..EnumerationLimits::default() };
            let poset = enumerate_depolarizations(&file.ideal, &limits)?;
            let mut text = String::new();
            for (i, class) in poset.classes.iter().enumerate() {
                let is_max = poset.maximum.contains(&i);
                if maximal && !is_max {
                    continue;
                }
                let mut v = class.record.to_json(&names);
                v["class"] = i.into();
                v["partitions"] = class.partitions.len().into();
                v["maximal"] = is_max.into();
                v["coarser"] = poset
                    .refinement
                    .iter()
                    .filter(|&&(f, _)| f == i)
                    .map(|&(_, c)| c)
                    .collect::<Vec<_>>()
                    .into();
                text.push_str(&v.to_string());
                text.push('\n');
            }
            emit(&out, &text)
        }
        Command::Hilbert { input, level, graded, out } => {
            let file = load_ideal(&input, level)?;
            let text = if graded {
                let coeffs = graded_numerator(&file.ideal);
                coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
            } else {
                hilbert_numerator(&file.ideal).display_with(&file.names).to_string()
            };
            emit(&out, &format!("{text}\n"))
        }
        Command::Betti { input, level, format, out } => {
            let file = load_ideal(&input, level)?;
            let table = betti_numbers(&file.ideal)?;
            let mut s = String::new();
            match format {
                BettiFormat::Graded => {
                    for ((i, d), c) in table.graded() {
                        s.push_str(&format!("{i} {d} {c}\n"));
                    }
                }
                BettiFormat::Multigraded => {
                    for ((i, mu), c) in table.entries() {
                        s.push_str(&format!("{i} {} {c}\n", depolar::io::format_monomial(mu, &file.names)));
                    }
                }
            }
            emit(&out, &s)
        }
        Command::QuasiStable { input, out } => {
            let file = load_ideal(&input, None)?;
            emit(&out, &format!("{}\n", is_quasi_stable(&file.ideal)))
        }
        Command::Reliability { input, level, method, trials, seed, float, out } => {
            let (file, probs) = load_system(&input)?;
            let system = &file.system;
            let mut s = String::new();
            match (method, level) {
                (Method::Algebraic, Some(j)) => {
                    if float {
                        let r = reliability(system, &probs.to_scalar::<f64>(), j)?;
                        s.push_str(&format!("{}\n", r.reliability));
                    } else {
                        s.push_str(&format!("{}\n", to_exact_string(&reliability(system, &probs, j)?.reliability)));
                    }
                }
                (Method::Algebraic, None) => {
                    s.push_str("j R_j r_j\n");
                    for r in reliability_levels(system, &probs)? {
                        s.push_str(&format!(
                            "{} {} {}\n",
                            r.level,
                            value_text(&r.reliability, float),
                            value_text(&r.point_mass, float)
                        ));
                    }
                }
                (Method::Exhaustive, level) => {
                    let j = level.ok_or_else(|| Failure::Input("--method exhaustive needs --level".into()))?;
                    s.push_str(&format!("{}\n", value_text(&exhaustive_reliability(system, &probs, j)?, float)));
                }
                (Method::MonteCarlo, level) => {
                    let j = level.ok_or_else(|| Failure::Input("--method monte-carlo needs --level".into()))?;
                    let e = monte_carlo(system, &probs, j, trials, seed)?;
                    s.push_str(&format!("{} +- {} ({} of {})\n", e.mean, e.std_error, e.hits, e.trials));
                }
            }
            emit(&out, &s)
        }
        Command::Bounds { input, level, depth, ladder, out } => {
            let (file, probs) = load_system(&input)?;
            let ladder = match ladder {
                LadderArg::Mvt => Ladder::MayerVietoris,
                LadderArg::Taylor => Ladder::Taylor,
            };
            let r = bounds(&file.system, &probs, level, ladder, depth)?;
            let mut s = format!("exact {}\n", to_exact_string(&r.reliability));
            for b in r.bounds.unwrap_or_default() {
                let dir = match b.direction {
                    Direction::Upper => "upper",
                    Direction::Lower => "lower",
                };
                let holds = if b.holds { "holds" } else { "VIOLATED" };
                s.push_str(&format!("{} {} {dir} {holds}\n", b.depth, to_exact_string(&b.value)));
            }
            emit(&out, &s)
        }
        Command::Bench { n, k, out } => {
            let mut s = String::from("n,k,gens,time_original_ms,time_depolarized_ms,equal\n");
            for &n in &n {
                for &k in &k {
                    if k == 0 || k > n {
                        return Err(Failure::Input(format!("need 1 <= k <= n, got n={n} k={k}")));
                    }
                    let ideal = consecutive_k_of_n_ideal(k, n);
                    let poset = natural_order(&support_poset(&ideal)?);
                    let record = depolarize_in(&ideal, &poset, &min_path_partition(&poset))?;

                    let t = Instant::now();
                    let h = hilbert_numerator(&ideal);
                    let t_orig = t.elapsed().as_secs_f64() * 1e3;
                    let t = Instant::now();
                    let hd = hilbert_numerator(&record.ideal);
                    let t_dep = t.elapsed().as_secs_f64() * 1e3;

                    let equal = h.total_degree_specialization() == hd.total_degree_specialization();
                    s.push_str(&format!("{n},{k},{},{t_orig:.3},{t_dep:.3},{equal}\n", ideal.len()));
                }
            }
            emit(&out, &s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
