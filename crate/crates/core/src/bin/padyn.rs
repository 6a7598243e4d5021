use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use padyn::report::{self, Output, RunConfig};

#[derive(Parser)]
#[command(name = "padyn", version, about = "Exact p-adic dynamics of (3,1)-rational maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Case, root norms, Siegel radius and a sphere table.
    Classify,
    /// Iterate a seed point exactly.
    Orbit,
    /// Inspect one sphere: class, displacement radius, minimal balls, partition.
    Spheres,
    /// Ergodicity verdict on a sphere, with an optional visit-frequency probe.
    Ergodicity,
    /// 2-periodic orbit certificate for a parameter q, or a grid scan.
    Periodic,
    /// Pre-image radius ladder of the critical sphere (zeta case).
    Radii,
    /// Reduce (x^3 + a x^2 + b x + c)/(d x + e) to canonical form.
    Reduce,
}

#[derive(Args)]
struct Flags {
    #[arg(long, global = true)]
    p: Option<u64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    e: Option<String>,
    /// Seed or sample point.
    #[arg(long, global = true, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, global = true)]
    steps: Option<usize>,
    #[arg(long, global = true)]
    depth: Option<u32>,
    #[arg(long, global = true)]
    iters: Option<u64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, global = true)]
    kmax: Option<u32>,
    #[arg(long, global = true)]
    m: Option<u32>,
    /// Sphere radius exponent e (radius p^e); repeatable or comma-separated.
    #[arg(long = "r-exp", global = true, allow_hyphen_values = true, value_delimiter = ',')]
    r_exp: Vec<String>,
    #[arg(long, global = true)]
    grid_num: Option<i64>,
    #[arg(long, global = true)]
    grid_den: Option<i64>,
    /// Stop iterating once a point needs more bits than this.
    #[arg(long, global = true)]
    max_bits: Option<u64>,
    /// `key = value` file filling any flag not given on the command line.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// CSV output path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
}

impl Flags {
    fn run_config(&self) -> padyn::Result<RunConfig> {
        let mut cfg = RunConfig {
            p: self.p,
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            x: self.x.clone(),
            steps: self.steps,
            depth: self.depth,
            iters: self.iters,
            q: self.q.clone(),
            kmax: self.kmax,
            m: self.m,
            r_exp: self.r_exp.clone(),
            grid_num: self.grid_num,
            grid_den: self.grid_den,
            max_bits: self.max_bits,
        };
        if let Some(path) = &self.config {
            cfg.fill_from_file(path)?;
        }
        Ok(cfg)
    }
}

fn run(cli: &Cli) -> padyn::Result<Output> {
    let cfg = cli.flags.run_config()?;
    match cli.command {
        Command::Classify => report::cmd_classify(&cfg),
        Command::Orbit => report::cmd_orbit(&cfg),
        Command::Spheres => report::cmd_spheres(&cfg),
        Command::Ergodicity => report::cmd_ergodicity(&cfg),
        Command::Periodic => report::cmd_periodic(&cfg),
        Command::Radii => report::cmd_radii(&cfg),
        Command::Reduce => report::cmd_reduce(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    if let (Some(path), Some(csv)) = (&cli.flags.out, &out.csv) {
        if let Err(e) = std::fs::write(path, csv) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::FAILURE;
        }
    }
    if cli.flags.json {
        print!("{}", out.report.to_json());
    } else {
        print!("{}", out.report.to_text());
    }
    // text reports already list warnings inline
    for w in out.report.warnings.iter().filter(|_| cli.flags.json) {
        eprintln!("warning: {w}");
    }
    ExitCode::SUCCESS
}
