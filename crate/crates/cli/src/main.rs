//! `ncx`: command-line front end for N-complex computations.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 when the
//! input cannot be read, parsed or interpreted.

mod commands;
mod report;
mod selftest;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use ncx_core::homalg::ShortExactSequence;
use ncx_core::io::{self, Document};
use ncx_core::ncomplex::NComplex;
use ncx_core::nhomog::build_a_rn;
use ncx_core::qdga::qpoly_example;
use rand::SeedableRng;

use commands::{parse_field, write_output, CliError, CliResult};
use report::Report;

#[derive(Parser)]
#[command(name = "ncx", version, about = "Exact computations with N-complexes")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Append wall-clock time to the report (output is then not reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a complex, sequence or algebra file and check its axioms.
    Validate { path: String },
    /// Dimensions of the amplitude cohomology H_(k) per degree.
    Cohomology {
        path: String,
        /// `all` or a single k in 1..N-1.
        #[arg(long, default_value = "all")]
        k: String,
        /// Also print representatives of a basis of each H_(k)^n.
        #[arg(long)]
        representatives: bool,
    },
    /// Tensor product of two complexes.
    Tensor {
        a: String,
        b: String,
        /// Output file; without it the product is written to stdout.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Exactness of the internal hexagons of a complex.
    Hexagon {
        path: String,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Snake hexagons and connecting maps of a short exact sequence.
    Ses {
        path: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Triangle of q-binomial coefficients up to row N.
    Qbinom {
        #[arg(long = "N")]
        big_n: usize,
        /// `cyclotomic[:J]` or `fp:P[:Q]`.
        #[arg(long, default_value = "cyclotomic")]
        field: String,
    },
    /// Graded q-differential algebra checks.
    Qdga {
        #[command(subcommand)]
        action: QdgaAction,
    },
    /// Write example documents.
    Examples {
        #[command(subcommand)]
        example: Example,
    },
    /// Randomized property checks.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum QdgaAction {
    /// Check unit, associativity, d^N = 0 and the twisted Leibniz rule.
    Check { path: String },
}

#[derive(Subcommand)]
enum Example {
    /// Staircase: one-dimensional modules with identity differentials.
    Staircase {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        start: i64,
        #[arg(long, default_value = "cyclotomic")]
        field: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Staircase of length `len` with the tail from `cut` on as subcomplex.
    Ses {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        cut: usize,
        #[arg(long, default_value = "cyclotomic")]
        field: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Truncated polynomial algebra K[θ] with d(θ^a) = [a]_q θ^{a+1}.
    Qpoly {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        window: usize,
        #[arg(long, default_value = "cyclotomic")]
        field: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// N-homogeneous algebra with polynomial coefficients and its N-differential.
    Nhomog {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        n: usize,
        #[arg(long = "maxdeg-alg")]
        maxdeg_alg: usize,
        #[arg(long = "maxdeg-poly")]
        maxdeg_poly: u32,
        #[arg(long, default_value = "cyclotomic")]
        field: String,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Random N-complex (sum of staircases in a random basis).
    Random {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "cyclotomic")]
        field: String,
        #[arg(short, long)]
        output: Option<String>,
    },
}

/// What a command produced: a report, or a document for stdout.
enum Outcome {
    Report(Report),
    Document(String),
}

fn emit_document(report: &mut Report, doc: &Document, output: Option<&str>) -> CliResult<Option<String>> {
    let text = io::to_canonical_string(&doc.to_json());
    match output {
        None => Ok(Some(text)),
        Some(path) => {
            let digest = write_output(path, &text)?;
            report.line(format!("wrote {path} ({}) sha256={digest}", doc.kind()));
            Ok(None)
        }
    }
}

fn example(report: &mut Report, e: Example) -> CliResult<Option<String>> {
    let (doc, output) = match e {
        Example::Staircase { big_n, len, start, field, output } => {
            let f = parse_field(&field, big_n)?;
            (Document::Complex(NComplex::staircase(&f, start, len)), output)
        }
        Example::Ses { big_n, len, cut, field, output } => {
            let f = parse_field(&field, big_n)?;
            (Document::Ses(ShortExactSequence::staircase_quotient(&f, len, cut)?), output)
        }
        Example::Qpoly { big_n, window, field, output } => {
            let f = parse_field(&field, big_n)?;
            (Document::Algebra(qpoly_example(&f, window)?), output)
        }
        Example::Nhomog { big_n, n, maxdeg_alg, maxdeg_poly, field, output } => {
            let f = parse_field(&field, big_n)?;
            let a = build_a_rn(&f, n, big_n, maxdeg_alg, maxdeg_poly)?;
            let dims: Vec<String> = a.base().dims().iter().map(|d| d.to_string()).collect();
            report.line(format!("algebra dims by degree: ({})", dims.join(", ")));
            (Document::Algebra(a.to_qdga()?), output)
        }
        Example::Random { big_n, seed, field, output } => {
            let f = parse_field(&field, big_n)?;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let c = ncx_core::gen::random_complex(&f, ncx_core::gen::ComplexShape::default(), &mut rng);
            (Document::Complex(c), output)
        }
    };
    emit_document(report, &doc, output.as_deref())
}

fn run(cli: Cli, echo: String) -> CliResult<Outcome> {
    let mut report = Report::new(echo);
    let r = &mut report;
    match cli.command {
        Command::Validate { path } => commands::validate(r, &path)?,
        Command::Cohomology { path, k, representatives } => commands::cohomology(r, &path, &k, representatives)?,
        Command::Tensor { a, b, output } => {
            if let Some(t) = commands::tensor(r, &a, &b)? {
                if let Some(text) = emit_document(r, &Document::Complex(t), output.as_deref())? {
                    return Ok(Outcome::Document(text));
                }
            }
        }
        Command::Hexagon { path, l, m } => commands::hexagon(r, &path, l, m)?,
        Command::Ses { path, n } => commands::ses(r, &path, n)?,
        Command::Qbinom { big_n, field } => commands::qbinom(r, big_n, &field)?,
        Command::Qdga { action: QdgaAction::Check { path } } => commands::qdga_check(r, &path)?,
        Command::Examples { example: e } => {
            if let Some(text) = example(r, e)? {
                return Ok(Outcome::Document(text));
            }
        }
        Command::Selftest { seed, trials } => selftest::run(r, seed, trials),
    }
    Ok(Outcome::Report(report))
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("NCX_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError(format!("NCX_THREADS must be a positive integer, got \"{v}\"")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError(format!("cannot configure threads: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let echo = std::iter::once("ncx".to_string()).chain(std::env::args().skip(1)).collect::<Vec<_>>().join(" ");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {}", e.0);
        return ExitCode::from(2);
    }
    let (json, timing) = (cli.json, cli.timing);
    let start = Instant::now();
    match run(cli, echo) {
        Ok(Outcome::Document(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report(report)) => {
            let elapsed = timing.then(|| start.elapsed());
            if json {
                print!("{}", report.render_json(elapsed));
            } else {
                print!("{}", report.render_text(elapsed));
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
    }
}
