use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use cb_lab::commands::{self, BoundsArgs, GenerateArgs, GenerateKind};

/// Exact-arithmetic lab for Cayley-Bacharach conditions on finite point
/// sets: decide CB(k), scan levels, search for low-degree curves, generate
/// certified configurations, audit the classical bounds and fuzz for
/// counterexample candidates.
#[derive(Parser)]
#[command(name = "cb-lab", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide CB(k) for a point-set document; exit 0 when it holds, 1 when
    /// it fails (a failure witness is reported).
    Check {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Scan k = 1..max-k and report the CB level.
    Level {
        file: PathBuf,
        /// Defaults to |Γ| - 2, the largest level a set of that size allows.
        #[arg(long)]
        max_k: Option<usize>,
    },
    /// Search for a curve of degree at most --degree through the set.
    FindCurve {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Generate certified point configurations (written canonically).
    Generate {
        #[command(subcommand)]
        kind: GenerateCommand,
    },
    /// Audit a statement on a point-set file or a freshly generated
    /// instance; exit 2 when a violation candidate appears.
    Audit {
        /// `min-cardinality`, `curve-h2` .. `curve-h6`, or `all`.
        #[arg(long)]
        statement: String,
        file: Option<PathBuf>,
        /// Compact generator spec, e.g. `ci-plane:d=3,e=3,p=11,seed=7`.
        #[arg(long, conflicts_with = "file")]
        generated: Option<String>,
        /// Certified CB level; defaults to the generator's expected level
        /// or a level scan.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Seeded counterexample search; exit 2 on any violation candidate.
    Fuzz {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        trials: usize,
        /// Prime modulus of the search field (palette: 7, 11, 13, 31, 101).
        #[arg(long, default_value_t = 11)]
        p: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Exact bound calculators.
    Bounds {
        /// `lp`, `su`, `castelnuovo-p3`, `castelnuovo-p4`, `cg-obstruction`,
        /// `correspondences`, `linear-series`, `plane-config`,
        /// `corollary-threshold`.
        #[arg(long)]
        formula: String,
        #[arg(long)]
        h: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        pa: Option<u64>,
        #[arg(long)]
        a: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        #[arg(long, default_value_t = 5)]
        h_max: u32,
        #[arg(long, default_value = "corollary")]
        variant: String,
    },
}

#[derive(Args)]
struct CommonGen {
    #[arg(long)]
    seed: Option<u64>,
    /// Write the document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Transverse complete intersection of two plane curves over F_p.
    CiPlane {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        common: CommonGen,
    },
    /// Zero-dimensional complete intersection in P^n over F_p.
    CiPn {
        /// Hypersurface degrees, comma separated (their count fixes n).
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<usize>,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        common: CommonGen,
    },
    /// k+2 points on a line: the extremal CB(k) family.
    Collinear {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// `rational` or a prime modulus.
        #[arg(long)]
        field: String,
        #[command(flatten)]
        common: CommonGen,
    },
    /// Samples on a rational normal curve of degree n in P^n.
    Rnc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        field: String,
        #[command(flatten)]
        common: CommonGen,
    },
    /// Random points on a union of random linear subspaces.
    PlaneConfig {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        counts: Vec<usize>,
        #[arg(long)]
        field: String,
        #[command(flatten)]
        common: CommonGen,
    },
    /// Distinct uniformly random points.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        field: String,
        #[command(flatten)]
        common: CommonGen,
    },
}

fn init_thread_pool() {
    if let Ok(v) = std::env::var("CB_LAB_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
        }
    }
}

fn dispatch(cli: Cli) -> commands::CmdResult {
    match cli.command {
        Command::Check { file, k } => commands::cmd_check(&file, k),
        Command::Level { file, max_k } => commands::cmd_level(&file, max_k),
        Command::FindCurve { file, degree } => commands::cmd_find_curve(&file, degree),
        Command::Generate { kind } => {
            let (kind, common) = match kind {
                GenerateCommand::CiPlane { d, e, p, common } => {
                    (GenerateKind::CiPlane { d, e, p }, common)
                }
                GenerateCommand::CiPn { degrees, p, common } => {
                    (GenerateKind::CiPn { degrees, p }, common)
                }
                GenerateCommand::Collinear { n, k, field, common } => (
                    GenerateKind::Collinear { n, k, field: commands::parse_field_spec(&field)? },
                    common,
                ),
                GenerateCommand::Rnc { n, s, field, common } => {
                    (GenerateKind::Rnc { n, s, field: commands::parse_field_spec(&field)? }, common)
                }
                GenerateCommand::PlaneConfig { n, dims, counts, field, common } => (
                    GenerateKind::PlaneConfig {
                        n,
                        dims,
                        counts,
                        field: commands::parse_field_spec(&field)?,
                    },
                    common,
                ),
                GenerateCommand::Random { n, m, field, common } => (
                    GenerateKind::Random { n, m, field: commands::parse_field_spec(&field)? },
                    common,
                ),
            };
            commands::cmd_generate(kind, GenerateArgs { seed: common.seed, out: common.out })
        }
        Command::Audit { statement, file, generated, k } => {
            commands::cmd_audit(&statement, file.as_deref(), generated.as_deref(), k)
        }
        Command::Fuzz { h, trials, p, seed } => commands::cmd_fuzz(h, trials, p, seed),
        Command::Bounds { formula, h, k, d, n, m, pa, a, b, h_max, variant } => {
            let args = BoundsArgs { h, k, d, n, m, pa, a, b, h_max, variant };
            commands::cmd_bounds(&formula, &args)
        }
    }
}

fn main() {
    init_thread_pool();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    std::process::exit(0);
                }
                _ => {
                    eprint!("{e}");
                    std::process::exit(64);
                }
            }
        }
    };
    match dispatch(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
