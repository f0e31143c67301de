//! `injcol`: decide, certify and sweep locally-injective oriented colouring
//! problems from the command line.
//!
//! Exit status: 0 on YES (or a clean sweep, or an accepted certificate),
//! 1 on NO (or a mismatch, or a rejected certificate), 2 on any error.

use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use injcol::format;
use injcol::named;
use injcol::sweep::{run_sweep, SweepConfig};
use injcol::{decide, verify, Certificate, Mode, OrientedGraph, Target, Tournament};

#[derive(Parser)]
#[command(
    name = "injcol",
    version,
    about = "Locally-injective oriented colouring deciders"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one graph and emit its certificate.
    Decide(DecideArgs),
    /// Check a certificate independently of the deciders.
    Certify(CertifyArgs),
    /// Write a named graph in the text format.
    Gen(GenArgs),
    /// Compare every decider with the brute-force oracle on many graphs.
    VerifyDuality(SweepArgs),
}

#[derive(Args)]
struct ProblemArgs {
    /// Target tournament: t1, t2, t3, c3, t1r or t2r.
    #[arg(long)]
    target: Tournament,
    /// Injectivity mode: ios or iot.
    #[arg(long, default_value = "ios")]
    mode: Mode,
}

impl ProblemArgs {
    fn target(&self) -> Target {
        Target::new(self.target, self.mode)
    }
}

#[derive(Args)]
struct DecideArgs {
    /// Graph file in the text format; `-` reads standard input.
    input: PathBuf,
    #[command(flatten)]
    problem: ProblemArgs,
    /// Also write the certificate document to this file.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Do not print the certificate; only the exit status reports the verdict.
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Args)]
struct CertifyArgs {
    /// Graph file the certificate refers to.
    input: PathBuf,
    /// Certificate document as written by `decide`.
    certificate: PathBuf,
    /// Oracle node budget for the obstruction check.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Graph name, e.g. H3, B2c, X2, K13_2, C_7, P5, T3.
    name: String,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Smallest vertex count of the exhaustive part.
    #[arg(long, default_value_t = 2)]
    min_n: usize,
    /// Largest vertex count of the exhaustive part; below `min-n` skips it.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Number of random graphs after the exhaustive part.
    #[arg(long, default_value_t = 0)]
    samples: u64,
    /// Vertex count range of the random graphs, `lo..hi` inclusive or one number.
    #[arg(long, default_value = "6..12", value_parser = parse_range)]
    sample_n: (usize, usize),
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restrict to these problems, e.g. `ios-t2r,iot-t1r`; all eight by default.
    #[arg(long, value_delimiter = ',')]
    problems: Vec<Target>,
    /// Oracle node budget per search.
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads.
    #[arg(long, env = "INJCOL_WORKERS")]
    workers: Option<usize>,
    /// Print the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let number = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a vertex count"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (number(lo)?, number(hi.trim_start_matches('='))?),
        None => {
            let n = number(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// An error message; always exits with status 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<OrientedGraph, Failure> {
    format::parse(&read_text(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn verdict_status(yes: bool) -> ExitCode {
    ExitCode::from(if yes { 0 } else { 1 })
}

fn cmd_decide(args: &DecideArgs) -> Result<ExitCode, Failure> {
    let g = read_graph(&args.input)?;
    let cert = decide(args.problem.target(), &g)?;
    let mut doc = cert.to_json();
    doc.push('\n');
    if let Some(path) = &args.certificate {
        write_out(Some(path), &doc)?;
    }
    if !args.quiet {
        write_out(None, &doc)?;
    }
    Ok(verdict_status(cert.is_yes()))
}

fn cmd_certify(args: &CertifyArgs) -> Result<ExitCode, Failure> {
    let g = read_graph(&args.input)?;
    let cert: Certificate = serde_json::from_str(&read_text(&args.certificate)?)
        .map_err(|e| Failure(format!("{}: {e}", args.certificate.display())))?;
    let report = match args.budget {
        Some(b) => injcol::verify::verify_with_budget(&g, cert.target, &cert, b)?,
        None => verify(&g, cert.target, &cert)?,
    };
    if !args.quiet {
        write_out(
            None,
            &format!("{}\n", serde_json::to_string_pretty(&report)?),
        )?;
    }
    Ok(verdict_status(report.passed()))
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode, Failure> {
    let g = named::named(&args.name)?;
    write_out(args.output.as_deref(), &format::serialize(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_duality(args: &SweepArgs) -> Result<ExitCode, Failure> {
    let mut config = SweepConfig {
        min_exhaustive_n: args.min_n,
        max_exhaustive_n: args.max_n,
        samples: args.samples,
        sample_n: args.sample_n,
        seed: args.seed,
        workers: args.workers,
        ..SweepConfig::default()
    };
    if !args.problems.is_empty() {
        if let Some(t) = args.problems.iter().find(|t| !t.is_supported()) {
            return Err(Failure(format!("no decider for {t}")));
        }
        config.targets = args.problems.clone();
    }
    if let Some(b) = args.budget {
        config.budget = b;
    }
    let report = run_sweep(&config)?;
    let text = if args.json {
        format!("{}\n", serde_json::to_string_pretty(&report)?)
    } else {
        report.render()
    };
    write_out(None, &text)?;
    Ok(verdict_status(report.is_clean()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Decide(a) => cmd_decide(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::VerifyDuality(a) => cmd_verify_duality(a),
    };
    result.unwrap_or_else(|Failure(message)| {
        eprintln!("injcol: {message}");
        ExitCode::from(2)
    })
}
