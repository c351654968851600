use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::value::RawValue;

use sunchaser_core::color::{
    augment_generalized_sun, color_hamiltonian, color_outerplanar, verify_coupon,
};
use sunchaser_core::format::{
    coloring_from_json, coloring_to_json, graph_from_json, graph_to_json, to_dot, AnyGraph,
};
use sunchaser_core::generate::{
    enumerate_triangulations, fan, parasol, random_hamiltonian, random_triangulation, sun_of,
};
use sunchaser_core::oracle::check_characterization;
use sunchaser_core::recognize::classify_generalized_sun;
use sunchaser_core::{Chord, Coloring, ColoringOutcome, OuterplanarTriangulation, SunVerdict};

const EXIT_WITNESS: u8 = 2;

/// Coupon-colorings of polygon triangulations and Hamiltonian sphere triangulations.
///
/// Graph and coloring arguments are JSON file paths; `-` reads standard input.
#[derive(Parser)]
#[command(author, version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph document.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Order (for `sun`: order of the base triangulation).
        #[arg(long)]
        n: Option<usize>,
        /// Number of parasol ribs.
        #[arg(long)]
        k: Option<usize>,
        /// Required by `random` and `random-ht`; makes `sun` use a random base.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Report degree-2 and central vertices and whether the graph is a generalized sun.
    Classify { graph: String },
    /// Two-class coupon-coloring; exit 2 with the recognizer verdict for a generalized sun.
    Color {
        graph: String,
        #[arg(long, value_enum, default_value_t = Output::Json)]
        out: Output,
    },
    /// Check a coloring; exit 1 when some vertex misses a class.
    Verify { graph: String, coloring: String },
    /// Repair a generalized sun with one added edge.
    Augment { graph: String },
    /// Stream every triangulation of the n-gon as JSON lines, in rank order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only shard `i` of `m` (0-based), e.g. `2/8`.
        #[arg(long, value_parser = parse_shard)]
        shard: Option<(usize, usize)>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Cross-check search, recognizer and colorer on every triangulation of each order.
    Check {
        /// An order or an inclusive range such as `6..14`.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Re-emit a graph, normalized, as JSON or DOT.
    Convert {
        graph: String,
        #[arg(long)]
        coloring: Option<String>,
        #[arg(long, value_enum, default_value_t = Output::Dot)]
        format: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Fan,
    Sun,
    Parasol,
    Random,
    RandomHt,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Dot,
}

fn parse_shard(s: &str) -> std::result::Result<(usize, usize), String> {
    let (i, m) = s.split_once('/').ok_or("expected i/m")?;
    let i: usize = i.parse().map_err(|e| format!("{e}"))?;
    let m: usize = m.parse().map_err(|e| format!("{e}"))?;
    if m == 0 || i >= m {
        return Err(format!("shard {i} of {m} does not exist"));
    }
    Ok((i, m))
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: usize = hi.parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_graph(path: &str) -> Result<AnyGraph> {
    graph_from_json(&read_input(path)?).with_context(|| format!("parsing {path}"))
}

fn read_coloring(path: &str) -> Result<Coloring> {
    coloring_from_json(&read_input(path)?).with_context(|| format!("parsing {path}"))
}

fn outerplanar(g: AnyGraph, what: &str) -> Result<OuterplanarTriangulation> {
    match g {
        AnyGraph::Outerplanar(g) => Ok(g),
        AnyGraph::Hamiltonian(_) => bail!("{what} needs an outerplanar graph"),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()?
            .install(f)),
    }
}

fn gen(family: Family, n: Option<usize>, k: Option<usize>, seed: Option<u64>) -> Result<()> {
    let need_n = || n.ok_or_else(|| anyhow!("--n is required"));
    let need_seed = || seed.ok_or_else(|| anyhow!("--seed is required for random graphs"));
    let g: AnyGraph = match family {
        Family::Fan => fan(need_n()?)?.into(),
        Family::Sun => {
            let base = match seed {
                Some(s) => random_triangulation(need_n()?, s)?,
                None => fan(need_n()?)?,
            };
            sun_of(&base).into()
        }
        Family::Parasol => parasol(k.ok_or_else(|| anyhow!("--k is required"))?)?.into(),
        Family::Random => random_triangulation(need_n()?, need_seed()?)?.into(),
        Family::RandomHt => random_hamiltonian(need_n()?, need_seed()?)?.into(),
    };
    println!("{}", graph_to_json(&g));
    Ok(())
}

fn color(path: &str, out: Output) -> Result<u8> {
    let g = read_graph(path)?;
    let coloring = match &g {
        AnyGraph::Outerplanar(og) => match color_outerplanar(og)? {
            ColoringOutcome::Colored(c) => c,
            ColoringOutcome::GeneralizedSun(verdict) => {
                print_json(&verdict)?;
                return Ok(EXIT_WITNESS);
            }
        },
        AnyGraph::Hamiltonian(ht) => color_hamiltonian(ht)?,
    };
    match out {
        Output::Json => println!("{}", coloring_to_json(&coloring)),
        Output::Dot => print!("{}", to_dot(&g, Some(&coloring))?),
    }
    Ok(0)
}

fn verify(graph: &str, coloring: &str) -> Result<u8> {
    let g = read_graph(graph)?;
    let c = read_coloring(coloring)?;
    let verdict = verify_coupon(&g, &c)?;
    print_json(&verdict)?;
    Ok(if verdict.valid { 0 } else { 1 })
}

#[derive(Serialize)]
struct AugmentReport {
    added_edge: Chord,
    removed_chord: Chord,
    exchanged: Box<RawValue>,
    coloring: Coloring,
}

fn augment(path: &str) -> Result<()> {
    let g = outerplanar(read_graph(path)?, "augment")?;
    let a = augment_generalized_sun(&g)?;
    print_json(&AugmentReport {
        added_edge: a.added_edge,
        removed_chord: a.removed_chord,
        exchanged: RawValue::from_string(graph_to_json(&a.exchanged.clone().into()))?,
        coloring: a.coloring,
    })
}

fn enumerate(n: usize, shard: Option<(usize, usize)>, jobs: Option<usize>) -> Result<()> {
    use rayon::prelude::*;
    const CHUNK: u64 = 4096;

    let mut cursor = enumerate_triangulations(n)?;
    if let Some((i, m)) = shard {
        cursor = cursor.shard(i, m);
    }
    // Fixed-size chunks rendered in parallel and written in rank order.
    let chunks = cursor.remaining().div_ceil(CHUNK).max(1) as usize;
    with_jobs(jobs, move || -> Result<()> {
        let stdout = io::stdout();
        let mut out = BufWriter::new(stdout.lock());
        for part in cursor.split(chunks) {
            let graphs: Vec<_> = part.collect();
            let lines: Vec<String> = graphs
                .into_par_iter()
                .map(|g| graph_to_json(&g.into()))
                .collect();
            for line in lines {
                writeln!(out, "{line}")?;
            }
        }
        out.flush()?;
        Ok(())
    })?
}

fn check(orders: RangeInclusive<usize>, jobs: Option<usize>) -> Result<u8> {
    let mut clean = true;
    for n in orders {
        let report = with_jobs(jobs, || check_characterization(n))??;
        clean &= report.is_clean();
        print_json(&report)?;
    }
    Ok(if clean { 0 } else { 1 })
}

fn convert(path: &str, coloring: Option<&str>, format: Output) -> Result<()> {
    let g = read_graph(path)?;
    match format {
        Output::Json => println!("{}", graph_to_json(&g)),
        Output::Dot => {
            let c = coloring.map(read_coloring).transpose()?;
            print!("{}", to_dot(&g, c.as_ref())?);
        }
    }
    Ok(())
}

fn classify(path: &str) -> Result<()> {
    let g = outerplanar(read_graph(path)?, "classify")?;
    let verdict: SunVerdict = classify_generalized_sun(&g);
    print_json(&verdict)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { family, n, k, seed } => gen(family, n, k, seed).map(|_| 0),
        Command::Classify { graph } => classify(&graph).map(|_| 0),
        Command::Color { graph, out } => color(&graph, out),
        Command::Verify { graph, coloring } => verify(&graph, &coloring),
        Command::Augment { graph } => augment(&graph).map(|_| 0),
        Command::Enumerate { n, shard, jobs } => enumerate(n, shard, jobs).map(|_| 0),
        Command::Check { n, jobs } => check(n, jobs),
        Command::Convert {
            graph,
            coloring,
            format,
        } => convert(&graph, coloring.as_deref(), format).map(|_| 0),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
