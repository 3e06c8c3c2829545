use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod job;
mod output;

use job::{Failure, Outcome};

#[derive(Parser, Debug)]
#[command(name = "crossed", version, about = "Free crossed resolutions, tensor products and their checks")]
struct Cli {
    /// Seed for sampled property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sampled elements per crossed module law.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Human-readable output instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Standard resolution of a named finite group (C2, S3, C2xC2, ...).
    #[arg(long)]
    pub standard: Option<String>,
    /// Periodic resolution of the cyclic group of order p.
    #[arg(long)]
    pub cyclic: Option<u64>,
    /// A complex in JSON form.
    #[arg(long)]
    pub complex: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a resolution as JSON.
    Resolve {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        maxdim: usize,
    },
    /// Print the boundary of one generator.
    Boundary {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        gen: String,
    },
    /// Run the axiom suite and emit a JSON-lines report.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        maxdim: Option<usize>,
        /// Also check exactness of the chain complex (finite groups).
        #[arg(long)]
        exactness: bool,
    },
    /// Integral homology of a resolution of a finite group.
    Homology {
        #[command(flatten)]
        source: Source,
        /// Dimension range `a..b`, inclusive, or a single dimension.
        #[arg(long, default_value = "1..2")]
        dims: String,
    },
    /// Tensor product of two complexes given as JSON.
    Tensor {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value_t = 4)]
        maxdim: usize,
    },
    /// Graph tensor product over a graph description.
    GraphProduct {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        maxdim: usize,
    },
    /// Enumerate extensions of K by the cyclic group of order p.
    Extensions {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: String,
    },
}

fn init_threads() {
    if let Ok(v) = std::env::var("CROSSED_KERNEL_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    init_threads();
    let ctx = job::Context {
        seed: cli.seed,
        samples: cli.samples,
        pretty: cli.pretty,
    };
    let result = match cli.command {
        Command::Resolve { source, maxdim } => job::resolve(&source, maxdim),
        Command::Boundary { complex, gen } => job::boundary(&ctx, &complex, &gen),
        Command::Verify {
            source,
            maxdim,
            exactness,
        } => job::verify(&ctx, &source, maxdim, exactness),
        Command::Homology { source, dims } => job::homology(&ctx, &source, &dims),
        Command::Tensor { left, right, maxdim } => job::tensor(&left, &right, maxdim),
        Command::GraphProduct { graph, maxdim } => job::graph_product(&ctx, &graph, maxdim),
        Command::Extensions { p, k } => job::extensions(&ctx, p, &k),
    };
    match result {
        Ok(Outcome { text, artifact, passed }) => {
            let written = match (&cli.out, artifact) {
                (Some(path), Some(a)) => {
                    print!("{text}");
                    std::fs::write(path, a)
                }
                (Some(path), None) => std::fs::write(path, text),
                (None, _) => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if passed { 0 } else { 1 })
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("check failed: {e:#}");
            ExitCode::from(1)
        }
    }
}
