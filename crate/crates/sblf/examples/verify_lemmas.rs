//! Runs the built-in identity suite — every word identity the crate
//! certifies about the genus-2 chain twists — and prints one line per
//! check.
//!
//! ```bash
//! cargo run --example verify_lemmas
//! ```

use sblf::run_paper_lemmas;

fn main() -> sblf::Result<()> {
    let report = run_paper_lemmas(None)?;
    for check in &report.checks {
        println!("{} {}", if check.pass { "ok  " } else { "FAIL" }, check.id);
    }
    println!(
        "\n{} checks, all_pass = {}",
        report.checks.len(),
        report.all_pass
    );
    std::process::exit(report.exit_code());
}
