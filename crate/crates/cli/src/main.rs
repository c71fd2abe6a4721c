//! `gbcode`: command-line front end. Every command prints one JSON report.
//! Exit status 0 when no verdict is falsified, 2 when one is, 1 on bad input.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use gbcode::{Limits, OrderKind};
use serde_json::{json, Value};

use commands::{BettiArgs, CounterexampleArgs, Ctx};
use report::{digest, Report, SCHEMA};

#[derive(Parser, Debug)]
#[command(name = "gbcode", version, about = "Groebner bases, weights and Betti numbers of linear codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Monomial order.
    #[arg(long, global = true, default_value = "degrevlex")]
    order: OrderKind,
    /// Worker threads for data-parallel sections (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized scans.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on listed codewords.
    #[arg(long, global = true)]
    max_enumeration: Option<u128>,
    /// Cap on cosets visited by a basis traversal.
    #[arg(long, global = true)]
    max_cosets: Option<u128>,
    /// Cap on vertices for homology computations.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Include wall-clock time (makes reports non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    Heap,
    Degree,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Tier {
    Structural,
    Brute,
    Gb,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generalized Hamming weights d_1..d_upto by exhaustive search.
    Ghw {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Supports of the minimal-support codewords.
    MinimalSupports {
        #[arg(long)]
        code: PathBuf,
    },
    /// Reduced Groebner basis of the code ideal.
    Groebner {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_enum, default_value = "heap")]
        route: Route,
        /// Include every basis element in the report.
        #[arg(long)]
        elements: bool,
    },
    /// m1, m2, d2 and whether M_G is a d2-test set.
    D2test {
        #[arg(long)]
        code: PathBuf,
        /// JSON list of words to test as a d2-test set.
        #[arg(long)]
        set: Option<PathBuf>,
    },
    /// Betti numbers of a square-free monomial ideal.
    Betti {
        #[arg(long, conflicts_with = "ideal")]
        code: Option<PathBuf>,
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// mg, all, or a JSON file of codewords.
        #[arg(long, default_value = "mg")]
        set: String,
        /// Compute the whole table, not just the minima.
        #[arg(long)]
        full: bool,
        /// Characteristic of the coefficient field.
        #[arg(long = "char", default_value_t = 2, value_parser = parse_char)]
        ell: u8,
    },
    /// Builds and verifies the code family on which M_G misses d2.
    Counterexample {
        #[arg(long, default_value_t = 3)]
        q: u32,
        /// Use only the first t words of P.
        #[arg(long)]
        truncate: Option<usize>,
        #[arg(long, value_enum, default_value = "structural")]
        verify: Tier,
        /// Search for a seed of length at most this instead of the two-row family.
        #[arg(long)]
        search: Option<usize>,
    },
    /// Checks the order conditions for GF(q) words of length n.
    OrderCheck {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Also check dominance of the first m blocks.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Reproduces the reference examples end to end.
    PaperExamples,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Ghw { .. } => "ghw",
            Command::MinimalSupports { .. } => "minimal-supports",
            Command::Groebner { .. } => "groebner",
            Command::D2test { .. } => "d2test",
            Command::Betti { .. } => "betti",
            Command::Counterexample { .. } => "counterexample",
            Command::OrderCheck { .. } => "order-check",
            Command::PaperExamples => "paper-examples",
        }
    }

    /// Arguments echoed into the report; paths are reduced to file names so the
    /// digest depends on content, not location.
    fn args(&self) -> Value {
        let name = |p: &PathBuf| p.file_name().map(|s| s.to_string_lossy().into_owned());
        let opt = |p: &Option<PathBuf>| p.as_ref().and_then(name);
        match self {
            Command::Ghw { code, upto } => json!({ "code": name(code), "upto": upto }),
            Command::MinimalSupports { code } => json!({ "code": name(code) }),
            Command::Groebner { code, route, elements } => {
                json!({ "code": name(code), "route": format!("{route:?}").to_lowercase(), "elements": elements })
            }
            Command::D2test { code, set } => json!({ "code": name(code), "set": opt(set) }),
            Command::Betti { code, ideal, set, full, ell } => {
                json!({ "code": opt(code), "ideal": opt(ideal), "set": set, "full": full, "char": ell })
            }
            Command::Counterexample { q, truncate, verify, search } => {
                json!({ "q": q, "truncate": truncate, "verify": format!("{verify:?}").to_lowercase(), "search": search })
            }
            Command::OrderCheck { q, n, m } => json!({ "q": q, "n": n, "m": m }),
            Command::PaperExamples => json!({}),
        }
    }
}

fn parse_char(s: &str) -> Result<u8, String> {
    match s {
        "2" | "3" | "5" => Ok(s.parse().unwrap()),
        _ => Err(format!("{s} is not one of 2, 3, 5")),
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut l = Limits::default();
    if let Some(x) = cli.max_enumeration {
        l.enumeration = x;
    }
    if let Some(x) = cli.max_cosets {
        l.cosets = x;
    }
    if let Some(x) = cli.max_vertices {
        l.betti_vertices = x;
    }
    l
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> commands::CliResult {
    match &cli.command {
        Command::Ghw { code, upto } => commands::ghw(ctx, code, *upto),
        Command::MinimalSupports { code } => commands::minimal_supports(ctx, code),
        Command::Groebner { code, route, elements } => {
            let route = format!("{route:?}").to_lowercase();
            commands::groebner(ctx, code, &route, *elements)
        }
        Command::D2test { code, set } => commands::d2test(ctx, code, set.as_ref()),
        Command::Betti { code, ideal, set, full, ell } => commands::betti_cmd(
            ctx,
            BettiArgs { code: code.as_ref(), ideal: ideal.as_ref(), set, full: *full, ell: *ell },
        ),
        Command::Counterexample { q, truncate, verify, search } => {
            let verify = format!("{verify:?}").to_lowercase();
            commands::counterexample(
                ctx,
                CounterexampleArgs { q: *q, truncate: *truncate, verify: &verify, search: *search },
            )
        }
        Command::OrderCheck { q, n, m } => commands::order_check(ctx, *q, *n, *m),
        Command::PaperExamples => commands::paper_examples(ctx),
    }
}

fn emit(cli_out: Option<&PathBuf>, text: &str) -> std::io::Result<()> {
    match cli_out {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(1);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }

    let limits = limits(&cli);
    let config = json!({
        "command": cli.command.name(),
        "args": cli.command.args(),
        "order": cli.order,
        "seed": cli.seed,
        "caps": {
            "enumeration": limits.enumeration.to_string(),
            "cosets": limits.cosets.to_string(),
            "vertices": limits.betti_vertices,
        },
    });
    let mut ctx = Ctx { order: cli.order, seed: cli.seed, limits, inputs: Vec::new() };
    let start = Instant::now();
    let outcome = dispatch(&cli, &mut ctx);
    let input_digest = digest(&ctx.inputs, &config);

    let (text, code) = match outcome {
        Ok((results, verdicts)) => {
            let report = Report {
                schema: SCHEMA,
                command: cli.command.name().to_string(),
                config,
                input_digest,
                results,
                verdicts: verdicts.0,
                timing_ms: cli.timing.then(|| start.elapsed().as_millis()),
            };
            let code = if report.falsified() { 2 } else { 0 };
            (serde_json::to_string_pretty(&report).expect("report serializes"), code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            let body = json!({
                "schema": SCHEMA,
                "command": cli.command.name(),
                "input_digest": input_digest,
                "error": { "kind": e.kind(), "message": e.message() },
            });
            (serde_json::to_string_pretty(&body).expect("error serializes"), 1)
        }
    };
    if let Err(e) = emit(cli.out.as_ref(), &(text + "\n")) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
