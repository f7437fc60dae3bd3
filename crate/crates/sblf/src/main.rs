use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Serialize;

use sblf::{
    build_ws, chain_twists, hurwitz_equivalent_bounded, parse_class_expr, parse_curve_expr,
    run_paper_lemmas, standard_model, twist_from_curve_expr, ChainTwistTable, Error,
    Factorization, FactorizationEntry, MappingClass, Result, SBLFDescriptor, SearchStatus,
    DEFAULT_CLOSED_BOUND,
};

/// Exact verifier and invariant calculator for simplified broken
/// Lefschetz fibration data.
///
/// All output is a single JSON document on stdout. Exit codes: 0 for
/// success / true / equal / equivalent, 1 for false / invalid /
/// distinct, 2 for unknown, 64 for usage errors, 65 for unreadable or
/// unparsable input (the message goes to stderr).
#[derive(Parser)]
#[command(name = "sblf", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a built-in verification suite and print its report.
    Verify {
        /// Suite name; `paper-lemmas` is the identity suite.
        suite: String,
        /// Run a single check by id.
        #[arg(long)]
        only: Option<String>,
    },
    /// Check the validity criterion of a descriptor file (`-` reads
    /// stdin).
    Validate {
        file: String,
    },
    /// Print Euler characteristic, first homology and b2 of a
    /// descriptor file (`-` reads stdin).
    Invariants {
        file: String,
    },
    /// Print the member W_s of the standard genus-2 family as a
    /// descriptor.
    Ws {
        /// Fibre-sum parameter, at least 2.
        #[arg(long)]
        s: usize,
        /// Normalize the multiplicity-one log transform.
        #[arg(long)]
        normalized: bool,
    },
    /// Mapping-class computations.
    Mcg {
        #[command(subcommand)]
        cmd: McgCmd,
    },
    /// Factorization computations.
    Hurwitz {
        #[command(subcommand)]
        cmd: HurwitzCmd,
    },
}

#[derive(Subcommand)]
enum McgCmd {
    /// Decide equality of two twist-word expressions.
    Equal {
        left: String,
        right: String,
        /// Compare as classes of the closed surface instead of the
        /// bounded one.
        #[arg(long)]
        closed: bool,
        /// Centralizer sweep bound for closed comparison.
        #[arg(long)]
        bound: Option<u64>,
        /// Fibre genus of the chain-twist table.
        #[arg(long, default_value_t = 2)]
        genus: usize,
    },
}

#[derive(Subcommand)]
enum HurwitzCmd {
    /// Search for a bounded Hurwitz equivalence between two
    /// factorization files (JSON arrays of curve expressions; `-`
    /// reads stdin).
    Equiv {
        first: String,
        second: String,
        /// Maximum number of elementary moves.
        #[arg(long)]
        depth: usize,
        /// Twist-word radius for the global-conjugation ball.
        #[arg(long, default_value_t = 2)]
        ball: usize,
        /// Fibre genus of the chain-twist table.
        #[arg(long, default_value_t = 2)]
        genus: usize,
    },
}

#[derive(Serialize)]
struct HurwitzReport {
    status: String,
    depth: usize,
    moves: Vec<String>,
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_factorization(table: &ChainTwistTable, path: &str) -> Result<Factorization> {
    let text = read_input(path)?;
    let exprs: Vec<String> = serde_json::from_str(&text)?;
    let mut entries = Vec::new();
    for e in &exprs {
        let parsed = parse_curve_expr(table, e)?;
        let (curve, class) = twist_from_curve_expr(table, &parsed)?;
        entries.push(FactorizationEntry::new(curve, class)?);
    }
    Factorization::new(table.model(), entries)
}

/// Writes to stdout, exiting quietly when the consumer has closed the
/// pipe (e.g. `sblf verify paper-lemmas | head`).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(65);
    }
}

fn print_json<T: Serialize>(value: &T) {
    emit(&format!("{}\n", serde_json::to_string(value).expect("reports serialize")));
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify { suite, only } => {
            if suite != "paper-lemmas" {
                return Err(Error::UnknownName(format!("no such suite `{suite}`")));
            }
            let report = run_paper_lemmas(only.as_deref())?;
            print_json(&report);
            Ok(report.exit_code())
        }
        Command::Validate { file } => {
            let descriptor = SBLFDescriptor::from_json(&read_input(&file)?)?;
            let report = descriptor.validate()?;
            print_json(&report);
            Ok(report.status.exit_code())
        }
        Command::Invariants { file } => {
            let descriptor = SBLFDescriptor::from_json(&read_input(&file)?)?;
            let report = descriptor.invariants()?;
            print_json(&report);
            Ok(0)
        }
        Command::Ws { s, normalized } => {
            let descriptor = build_ws(s, normalized)?;
            emit(&format!("{}\n", descriptor.to_json()));
            Ok(0)
        }
        Command::Mcg { cmd } => match cmd {
            McgCmd::Equal { left, right, closed, bound, genus } => {
                let table = chain_twists(&standard_model(genus)?)?;
                let l = MappingClass::from_word(&table, &parse_class_expr(&table, &left)?)?;
                let r = MappingClass::from_word(&table, &parse_class_expr(&table, &right)?)?;
                let verdict = if closed {
                    l.equal_closed(&r, bound.unwrap_or(DEFAULT_CLOSED_BOUND))?
                } else if l.equal_bounded(&r)? {
                    sblf::Verdict::equal()
                } else {
                    sblf::Verdict::Distinct
                };
                print_json(&verdict);
                Ok(verdict.exit_code())
            }
        },
        Command::Hurwitz { cmd } => match cmd {
            HurwitzCmd::Equiv { first, second, depth, ball, genus } => {
                let table = chain_twists(&standard_model(genus)?)?;
                let f1 = load_factorization(&table, &first)?;
                let f2 = load_factorization(&table, &second)?;
                let outcome = hurwitz_equivalent_bounded(&table, &f1, &f2, depth, ball)?;
                let report = HurwitzReport {
                    status: outcome.status.as_str().to_string(),
                    depth: if outcome.status == SearchStatus::Equivalent {
                        outcome.moves.len()
                    } else {
                        outcome.depth_searched
                    },
                    moves: outcome.moves.iter().map(|m| m.to_string()).collect(),
                };
                print_json(&report);
                Ok(outcome.status.exit_code())
            }
        },
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                emit(&e.to_string());
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(64);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(65);
        }
    }
}
