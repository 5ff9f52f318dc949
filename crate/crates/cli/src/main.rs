use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bicyclic::enumeration::{enumerate_bicyclic, EnumerationConfig, Mode};
use bicyclic::graph::{read_graph6, to_graph6};
use bicyclic::invariants::InvariantSummary;
use bicyclic::spectral::{char_poly, spectral_radius_with_tol, DEFAULT_TOLERANCE};
use bicyclic::verify::{self, Check, CSV_HEADER};
use bicyclic::{build_family, Exec, FamilySpec, Graph};

#[derive(Parser)]
#[command(name = "bicyclic", version, about = "Spectral extremal checks for bicyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumMode {
    Structured,
    Bruteforce,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    /// Ascending integer coefficients, space separated.
    Coeffs,
    /// Human-readable polynomial.
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate connected bicyclic graphs on n vertices as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: Option<usize>,
        /// Output file; standard output when omitted or "-".
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "structured")]
        mode: EnumMode,
        #[arg(long)]
        sequential: bool,
    },
    /// Build a named family member and print it as graph6.
    Construct {
        /// F, F', M, M1, M1', M2, M3, M3', M4, M5, M6 or Bsharp.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Independence number (k for Bsharp); unused by F and F'.
        #[arg(long, default_value_t = 0)]
        alpha: usize,
        /// "g6" or "-" for standard output, otherwise a file path.
        #[arg(long, default_value = "g6")]
        out: String,
    },
    /// Graph invariants for every graph in a graph6 file.
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        csv: bool,
    },
    /// Characteristic polynomial of every graph in a graph6 file.
    Poly {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "coeffs")]
        format: PolyFormat,
    },
    /// Certified spectral radius of every graph in a graph6 file.
    Rho {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long)]
        csv: bool,
    },
    /// Check the extremal theorem for one n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        sequential: bool,
    },
    /// Run a sweep described by a key=value config file.
    Sweep {
        config: PathBuf,
    },
    /// Check the polynomial identity catalog and ordering lemmas.
    Identities {
        #[arg(long, default_value_t = 8)]
        n_min: usize,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
    },
}

enum Failure {
    Usage(String),
    Assertion,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn exec(sequential: bool) -> Exec {
    if sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn read_input(path: &Path) -> Result<Vec<Graph>, Failure> {
    let graphs = if path == Path::new("-") {
        read_graph6(io::stdin().lock())?
    } else {
        let file = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        read_graph6(BufReader::new(file))?
    };
    Ok(graphs)
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        None => Box::new(BufWriter::new(io::stdout().lock())),
        Some(p) if p == Path::new("-") => Box::new(BufWriter::new(io::stdout().lock())),
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
    })
}

fn print_checks(checks: &[Check]) -> bool {
    let mut ok = true;
    for c in checks {
        let tag = match (c.passed, c.asserted) {
            (true, true) => "PASS",
            (false, true) => "FAIL",
            (true, false) => "REPORT",
            (false, false) => "REPORT-FAIL",
        };
        println!("{tag} {}: {}", c.name, c.detail);
        ok &= !c.is_failure();
    }
    ok
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Enumerate { n, alpha, out, mode, sequential } => {
            let mode = match mode {
                EnumMode::Structured => Mode::Structured,
                EnumMode::Bruteforce => Mode::Bruteforce,
            };
            let cfg = EnumerationConfig::new(n).mode(mode).alpha(alpha).exec(exec(sequential));
            let mut w = output(out.as_deref())?;
            let mut count = 0usize;
            for g in enumerate_bicyclic(&cfg)? {
                writeln!(w, "{}", to_graph6(&g))?;
                count += 1;
                if count % 10_000 == 0 {
                    eprintln!("{count} graphs");
                }
            }
            w.flush()?;
            eprintln!("{count} graphs total");
        }
        Command::Construct { family, n, alpha, out } => {
            let g = build_family(&FamilySpec::from_name(&family, n, alpha)?)?;
            let path = (out != "g6").then(|| PathBuf::from(out));
            let mut w = output(path.as_deref())?;
            writeln!(w, "{}", to_graph6(&g))?;
            w.flush()?;
        }
        Command::Invariants { input, csv } => {
            let graphs = read_input(&input)?;
            if csv {
                println!("{}", InvariantSummary::CSV_HEADER);
            }
            for g in &graphs {
                let s = InvariantSummary::of(g);
                if csv {
                    println!("{}", s.csv_row());
                } else {
                    println!("{s:?}");
                }
            }
        }
        Command::Poly { input, format } => {
            for g in &read_input(&input)? {
                let p = char_poly(g);
                match format {
                    PolyFormat::Coeffs => println!("{}", p.to_coeff_string()),
                    PolyFormat::Pretty => println!("{p}"),
                }
            }
        }
        Command::Rho { input, tol, csv } => {
            if csv {
                println!("n,m,rho_lo,rho_hi");
            }
            for g in &read_input(&input)? {
                let c = spectral_radius_with_tol(g, tol)?;
                if csv {
                    println!("{},{},{:.15},{:.15}", g.n(), g.m(), c.lo_f64(), c.hi_f64());
                } else {
                    println!("{} rho in [{}, {}]", to_graph6(g), c.lo_f64(), c.hi_f64());
                }
            }
        }
        Command::Verify { n, sequential } => {
            let report = verify::verify_theorem1(n, exec(sequential))?;
            println!("{CSV_HEADER}");
            for r in &report.records {
                println!("{}", r.csv_row());
            }
            if !print_checks(&report.checks) {
                return Err(Failure::Assertion);
            }
        }
        Command::Sweep { config } => {
            let report = verify::run_sweep_file(&config)?;
            print_checks(&report.identity_results);
            print_checks(&report.lemma_audits);
            eprintln!("wrote {}", report.config.out_dir.display());
            if !report.passed() {
                return Err(Failure::Assertion);
            }
        }
        Command::Identities { n_min, n_max } => {
            if n_min > n_max || n_min < 4 {
                return Err(Failure::Usage(format!("bad range {n_min}..{n_max}")));
            }
            if !print_checks(&verify::run_identity_catalog(n_min, n_max)) {
                return Err(Failure::Assertion);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion) => {
            eprintln!("assertion failure");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

