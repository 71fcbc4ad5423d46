use clap::{Parser, ValueEnum};
use dyngb::Strategy;
use dyngb_cli::{run_all, RunSpec, TSV_HEADER};

/// Gröbner basis runner: classical Buchberger under a fixed order, or the
/// dynamic algorithm that refines the order as it goes.
#[derive(Parser, Debug)]
#[command(name = "dyngb", version, about)]
struct Args {
    /// Systems to run: a file path, cyclic-N, or katsura-N. Repeatable.
    #[arg(long = "system", required = true, num_args = 1..)]
    systems: Vec<String>,

    /// Compute with a fixed ordering instead of the dynamic algorithm.
    #[arg(long = "static")]
    static_mode: bool,

    /// Ordering for static runs: grevlex, lex, weight:w1,...,wn, or
    /// matrix:r1;r2;... (rows of comma-separated integers).
    #[arg(long, default_value = "grevlex")]
    order: String,

    /// Critical pair selection strategy.
    #[arg(long, value_enum, default_value_t = StrategyArg::Normal)]
    strategy: StrategyArg,

    /// Compute sugar degrees under the current weight vector.
    #[arg(long)]
    weighted_sugar: bool,

    /// Disable the boundary-vectors criterion.
    #[arg(long)]
    no_boundary_vectors: bool,

    /// Disable the disjoint-cones criterion.
    #[arg(long)]
    no_disjoint_cones: bool,

    /// Homogenize the inputs before running.
    #[arg(long)]
    homogenize: bool,

    /// Verify the result by brute force (every S-polynomial reduces to 0).
    #[arg(long)]
    verify: bool,

    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputArg::Tsv)]
    output: OutputArg,

    /// Tie-breaking seed among Hilbert-equal candidates; 0 is the
    /// deterministic default order.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Write the reduced basis of the last run to a file.
    #[arg(long)]
    out_basis: Option<String>,

    /// Run this many systems in parallel.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Sugar,
    Normal,
    Mindeg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputArg {
    Tsv,
    Json,
}

fn main() {
    let args = Args::parse();
    let strategy = match args.strategy {
        StrategyArg::Sugar => Strategy::Sugar,
        StrategyArg::Normal => Strategy::Normal,
        StrategyArg::Mindeg => Strategy::MinDeg,
    };
    let specs: Vec<RunSpec> = args
        .systems
        .iter()
        .map(|system| RunSpec {
            system: system.clone(),
            static_mode: args.static_mode,
            order: args.order.clone(),
            strategy,
            weighted_sugar: args.weighted_sugar,
            use_boundary_vectors: !args.no_boundary_vectors,
            use_disjoint_cones: !args.no_disjoint_cones,
            homogenize: args.homogenize,
            verify: args.verify,
            seed: args.seed,
        })
        .collect();

    let outputs = run_all(&specs, args.jobs);

    let mut any_input_error = false;
    let mut any_unverified = false;
    if matches!(args.output, OutputArg::Tsv) {
        println!("{}", TSV_HEADER);
    }
    for out in &outputs {
        match out {
            Ok(run) => {
                match args.output {
                    OutputArg::Tsv => println!("{}", run.report.tsv_row()),
                    OutputArg::Json => println!("{}", run.report.json()),
                }
                if run.report.verified == Some(false) {
                    any_unverified = true;
                }
            }
            Err(e) => {
                eprintln!("error: {}", e);
                any_input_error = true;
            }
        }
    }
    if let (Some(path), false) = (&args.out_basis, any_input_error) {
        if let Some(Ok(last)) = outputs.last() {
            if let Err(e) = std::fs::write(path, dyngb_cli::render_basis(last)) {
                eprintln!("error: {}: {}", path, e);
                any_input_error = true;
            }
        }
    }
    if any_input_error {
        std::process::exit(2);
    }
    if any_unverified {
        std::process::exit(1);
    }
}
