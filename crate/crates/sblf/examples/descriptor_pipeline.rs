//! Builds a fibration descriptor by hand, runs the validity criterion,
//! and prints the reports the `sblf` binary would emit — the library
//! side of `sblf validate` / `sblf invariants`.
//!
//! The descriptor here uses a literal cycle, so the monodromy
//! conditions come back `unknown` rather than `pass`: twists are only
//! defined for curves reachable from the named table curves, and the
//! report says so instead of guessing. Invariants, cycle
//! classification, and homology are exact regardless.
//!
//! ```bash
//! cargo run --example descriptor_pipeline
//! ```

use sblf::{CycleSpec, SBLFDescriptor};

fn main() -> sblf::Result<()> {
    // A small hyperelliptic example: one separating and one
    // non-separating Lefschetz cycle, round handle along c5.
    let descriptor = SBLFDescriptor::new(
        2,
        vec![
            CycleSpec::new("[1,2,-1,-2]", Some("sep")),
            CycleSpec::new("c5", None),
        ],
        Some("c5".to_string()),
        true,
        false,
    )?;

    println!("descriptor JSON:\n{}\n", descriptor.to_json());
    let reparsed = SBLFDescriptor::from_json(&descriptor.to_json())?;
    println!("round-trips bit-exactly: {}", reparsed.to_json() == descriptor.to_json());

    let validation = descriptor.validate()?;
    println!("\nvalidity: {}", validation.status.as_str());
    for condition in &validation.conditions {
        println!(
            "  {:24} {}{}",
            condition.name,
            condition.status.as_str(),
            condition.detail.as_deref().map(|d| format!("  ({d})")).unwrap_or_default()
        );
    }

    let cycles = descriptor.classify_cycles()?;
    println!(
        "\ncycles: {} separating, {} non-separating",
        cycles.separating_count, cycles.nonseparating_count
    );
    println!("hyperelliptic: {}", descriptor.is_hyperelliptic()?);
    let fixed = descriptor.fixed_point_descriptor()?;
    println!("involution fixed-point data: {}", serde_json::to_string(&fixed).unwrap());

    println!("\ninvariants: {}", serde_json::to_string(&descriptor.invariants()?).unwrap());
    println!("betti:      {}", serde_json::to_string(&descriptor.betti_report()?).unwrap());

    let pi1 = descriptor.fundamental_group()?;
    println!("\nfundamental group of the total space:\n{pi1}");
    Ok(())
}
