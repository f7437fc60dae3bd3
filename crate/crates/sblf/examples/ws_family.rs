//! Builds the standard family W_s of simplified broken Lefschetz
//! fibrations (s >= 2), checks the validity criterion for each member,
//! and prints the exact invariants of the total space — Euler
//! characteristic, first homology, second Betti number — before and
//! after normalizing the multiplicity-one log transform.
//!
//! ```bash
//! cargo run --example ws_family
//! ```

use sblf::build_ws;

fn main() -> sblf::Result<()> {
    for s in 2..=8 {
        let plain = build_ws(s, false)?;
        let normalized = build_ws(s, true)?;

        let validation = plain.validate()?;
        let inv = plain.invariants()?;
        let inv_norm = normalized.invariants()?;
        let cycles = plain.classify_cycles()?;

        println!(
            "W_{s}: {} cycles ({} separating), validity {}",
            plain.cycles().len(),
            cycles.separating_count,
            validation.status.as_str(),
        );
        println!("     invariants            {}", serde_json::to_string(&inv).unwrap());
        println!("     normalized invariants {}", serde_json::to_string(&inv_norm).unwrap());
        println!("     hyperelliptic: {}", plain.is_hyperelliptic()?);
    }

    // The round handle's fixed-point data for one member in full.
    let w4 = build_ws(4, false)?;
    let fixed = w4.fixed_point_descriptor()?;
    println!("\nW_4 involution fixed-point data: {}", serde_json::to_string(&fixed).unwrap());
    Ok(())
}
