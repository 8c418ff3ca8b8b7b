mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use attractors::minimality::{is_minimal_k_attractor_in, MinimalityVerdict};
use attractors::optimizer::{build_marker_graph, DEFAULT_BUDGET};
use attractors::sharp::{build_gadget_attractor, gen_sharp_gadget, min_2_sharp_attractor, SetCoverInstance};
use attractors::verify::{is_k_attractor_in, is_k_sharp_attractor, report_occurrences, SharpVerdict, Verdict};
use attractors::{AttractorSet, EquivClasses, Error, SuffixIndex};
use clap::{Parser, Subcommand, ValueEnum};

use report::{Format, Summary, VerifyReport, WitnessReport};

/// Exit codes: 0 success or valid, 1 invalid or not minimal, 2 usage or
/// input error, 3 search budget exceeded.
#[derive(Parser)]
#[command(name = "attractors", version, about = "Compute and check string k-attractors")]
struct Cli {
    /// Output style for results and the summary record.
    #[arg(long, value_enum, default_value_t = FormatArg::Plain, global = true)]
    format: FormatArg,
    /// Read texts as one decimal symbol per line instead of raw bytes.
    #[arg(long, global = true)]
    integers: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check that GAMMA is a k-attractor (or k-sharp attractor) of TEXT.
    Verify {
        text: PathBuf,
        gamma: PathBuf,
        k: usize,
        /// Only substrings of length exactly k must be covered.
        #[arg(long)]
        sharp: bool,
    },
    /// Check that GAMMA is a minimal k-attractor and list removable positions.
    MinimalCheck { text: PathBuf, gamma: PathBuf, k: usize },
    /// Exact minimum k-attractor by exhaustive candidate search.
    Minimum {
        text: PathBuf,
        k: usize,
        /// Largest size to search; defaults to the greedy size.
        #[arg(long)]
        bound: Option<usize>,
        /// Maximum number of subset evaluations.
        #[arg(long, env = "ATTRACTOR_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// A minimal k-attractor.
    Minimal { text: PathBuf, k: usize },
    /// Greedy approximation of the minimum k-attractor.
    Greedy { text: PathBuf, k: usize },
    /// Minimum 2-sharp attractor.
    Sharp2 { text: PathBuf },
    /// Occurrences of TEXT[from..=to] that contain a position of GAMMA.
    Occurrences {
        text: PathBuf,
        gamma: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Build the sharp-attractor gadget of a set-cover instance.
    Gadget {
        instance: PathBuf,
        /// Output prefix: writes PREFIX.txt and PREFIX.legend.
        #[arg(long)]
        out: PathBuf,
        /// Overrides k from the instance header.
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated 1-based set indices; also writes PREFIX.gamma.
        #[arg(long, value_delimiter = ',')]
        cover: Option<Vec<usize>>,
    },
    /// Instance statistics only.
    Stats { text: PathBuf, k: usize },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InstanceTooLarge { .. } => Failure::Budget(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Plain => Format::Plain,
        FormatArg::Json => Format::Json,
    };
    match run(cli.command, cli.integers, format) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("hint: raise --budget or ATTRACTOR_BUDGET, or pass a smaller --bound");
            ExitCode::from(3)
        }
    }
}

struct Loaded {
    text: attractors::RemappedText,
    index: SuffixIndex,
}

fn load(path: &Path, integers: bool) -> Result<Loaded, Failure> {
    let text = input::read_text(path, integers)?;
    let index = SuffixIndex::new(&text);
    Ok(Loaded { text, index })
}

fn summary(l: &Loaded, k: usize) -> Summary {
    Summary {
        n: l.text.len(),
        sigma: l.text.sigma() as usize,
        k,
        ..Summary::default()
    }
}

fn run(command: Command, integers: bool, format: Format) -> Result<u8, Failure> {
    let start = Instant::now();
    match command {
        Command::Verify { text, gamma, k, sharp } => {
            let l = load(&text, integers)?;
            l.index.check_k(k)?;
            let gamma = input::read_gamma(&gamma, l.text.len())?;
            let mut report = VerifyReport {
                n: l.text.len(),
                sigma: l.text.sigma() as usize,
                k,
                sharp,
                size: gamma.len(),
                ..VerifyReport::default()
            };
            if sharp {
                report.valid = match is_k_sharp_attractor(&l.index, &gamma, k)? {
                    SharpVerdict::Valid => true,
                    SharpVerdict::Invalid { offset } => {
                        let (lo, hi) = l.index.pattern_range(offset, k)?;
                        report.witness = Some(WitnessReport::new(&l.text, !integers, offset, k, (lo, hi)));
                        false
                    }
                };
            } else {
                let universe = l.index.universe(k)?;
                report.universe = Some(universe.len());
                report.valid = match is_k_attractor_in(&l.index, &universe, &gamma)? {
                    Verdict::Valid => true,
                    Verdict::Invalid(w) => {
                        report.witness = Some(WitnessReport::new(&l.text, !integers, w.offset, w.len, (w.edge.l, w.edge.r)));
                        false
                    }
                };
            }
            report.ms = start.elapsed().as_secs_f64() * 1e3;
            report.emit(format);
            Ok(if report.valid { 0 } else { 1 })
        }
        Command::MinimalCheck { text, gamma, k } => {
            let l = load(&text, integers)?;
            l.index.check_k(k)?;
            let gamma = input::read_gamma(&gamma, l.text.len())?;
            let universe = l.index.universe(k)?;
            let verdict = is_minimal_k_attractor_in(&l.index, &universe, &gamma)?;
            let mut s = summary(&l, k);
            s.universe = Some(universe.len());
            s.candidates = Some(EquivClasses::new(&l.text, k)?.len());
            s.ms = start.elapsed().as_secs_f64() * 1e3;
            let (status, shown, code) = match &verdict {
                MinimalityVerdict::Minimal => ("minimal", None, 0),
                MinimalityVerdict::NotMinimal { removable } => ("not_minimal", Some(removable), 1),
                MinimalityVerdict::NotAttractor(_) => ("not_attractor", None, 1),
            };
            s.status = Some(status);
            s.emit(shown, format);
            Ok(code)
        }
        Command::Minimum { text, k, bound, budget } => {
            solve(&text, integers, k, format, start, |g| g.find_minimum(bound, budget))
        }
        Command::Minimal { text, k } => solve(&text, integers, k, format, start, |g| Ok(g.find_minimal())),
        Command::Greedy { text, k } => solve(&text, integers, k, format, start, |g| Ok(g.greedy())),
        Command::Stats { text, k } => {
            let l = load(&text, integers)?;
            l.index.check_k(k)?;
            let classes = EquivClasses::new(&l.text, k)?;
            let graph = build_marker_graph(&l.index, &classes, k)?;
            let mut s = summary(&l, k);
            s.universe = Some(graph.universe().len());
            s.candidates = Some(graph.candidates().len());
            s.graph_edges = Some(graph.edge_count());
            s.ms = start.elapsed().as_secs_f64() * 1e3;
            s.emit(None, format);
            Ok(0)
        }
        Command::Sharp2 { text } => {
            let l = load(&text, integers)?;
            let gamma = min_2_sharp_attractor(l.text.symbols())?;
            let mut s = summary(&l, 2);
            s.ms = start.elapsed().as_secs_f64() * 1e3;
            s.emit(Some(&gamma), format);
            Ok(0)
        }
        Command::Occurrences { text, gamma, from, to, limit } => {
            let l = load(&text, integers)?;
            let n = l.text.len();
            if from == 0 || from > to || to > n {
                return Err(Failure::Input(format!(
                    "need 1 <= from <= to <= {n}, got from = {from}, to = {to}"
                )));
            }
            let gamma = input::read_gamma(&gamma, n)?;
            let len = to - from + 1;
            let mut found = report_occurrences(&l.index, &gamma, from - 1, len, limit.unwrap_or(n))?;
            found.sort_unstable();
            let found = AttractorSet::from_offsets(found, n);
            let mut s = summary(&l, len);
            s.ms = start.elapsed().as_secs_f64() * 1e3;
            s.emit(Some(&found), format);
            Ok(0)
        }
        Command::Gadget { instance, out, k, cover } => {
            let contents = input::read_to_string(&instance)?;
            let inst = SetCoverInstance::parse(&contents)?;
            let k = k.unwrap_or(inst.k);
            let gadget = gen_sharp_gadget(&inst, k)?;
            let body: String = gadget.symbols.iter().map(|c| format!("{c}\n")).collect();
            input::write(&out, "txt", &body)?;
            input::write(&out, "legend", &gadget.legend_file())?;
            let gamma = match cover {
                Some(sets) => {
                    let chosen = sets
                        .iter()
                        .map(|&i| {
                            i.checked_sub(1)
                                .ok_or_else(|| Failure::Input("set indices are 1-based".into()))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let gamma = build_gadget_attractor(&gadget, &chosen)?;
                    let body: String = gamma.positions().map(|p| format!("{p}\n")).collect();
                    input::write(&out, "gamma", &body)?;
                    Some(gamma)
                }
                None => None,
            };
            let text = gadget.text();
            let mut s = Summary {
                n: text.len(),
                sigma: text.sigma() as usize,
                k,
                ..Summary::default()
            };
            s.ms = start.elapsed().as_secs_f64() * 1e3;
            s.emit(gamma.as_ref(), format);
            Ok(0)
        }
    }
}

fn solve(
    text: &Path,
    integers: bool,
    k: usize,
    format: Format,
    start: Instant,
    algorithm: impl FnOnce(&attractors::MarkerGraph) -> attractors::Result<AttractorSet>,
) -> Result<u8, Failure> {
    let l = load(text, integers)?;
    l.index.check_k(k)?;
    let classes = EquivClasses::new(&l.text, k)?;
    let graph = build_marker_graph(&l.index, &classes, k)?;
    let gamma = algorithm(&graph)?;
    let mut s = summary(&l, k);
    s.universe = Some(graph.universe().len());
    s.candidates = Some(graph.candidates().len());
    s.graph_edges = Some(graph.edge_count());
    s.ms = start.elapsed().as_secs_f64() * 1e3;
    s.emit(Some(&gamma), format);
    Ok(0)
}
