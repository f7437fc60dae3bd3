//! Builds the chain-twist table of a bounded surface and prints each
//! twist as a free-group automorphism, then runs the table's
//! self-validation suite (braid and commutation relations, boundary
//! fixing, homology transvections, the hyperelliptic involution).
//!
//! Pass a genus on the command line to see the general construction;
//! the default is the genus-2 table used everywhere else.
//!
//! ```bash
//! cargo run --example twist_table        # genus 2
//! cargo run --example twist_table -- 3   # genus 3
//! ```

use sblf::{chain_twists, standard_model};

fn main() -> sblf::Result<()> {
    let genus: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("genus must be a number"))
        .unwrap_or(2);

    let model = standard_model(genus)?;
    let table = chain_twists(&model)?;

    println!(
        "surface: genus {}, one boundary component, free group of rank {}",
        model.genus(),
        model.rank()
    );
    println!("generators: a_i = x(2i-1), b_i = x(2i)\n");

    for entry in table.entries() {
        println!(
            "{}  (twist about {} = {})",
            entry.name(),
            entry.curve().name().unwrap_or("?"),
            entry.curve().class()
        );
        let aut = entry.automorphism();
        for i in 1..=model.rank() {
            let image = aut.image(i);
            if image.letters() != [i as i32] {
                println!("    x{i} -> {image}");
            }
        }
    }

    println!("\nself-validation:");
    let checks = table.validation_report();
    let mut failed = 0;
    for check in &checks {
        if !check.pass {
            failed += 1;
            println!("  FAIL {}", check.name);
        }
    }
    println!(
        "  {} checks, {} failed{}",
        checks.len(),
        failed,
        if failed == 0 { " — table is consistent" } else { "" }
    );
    Ok(())
}
