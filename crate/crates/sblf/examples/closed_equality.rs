//! Compares mapping classes two ways: exactly on the bounded surface
//! (where classes are honest free-group automorphisms) and up to the
//! closed surface's extra relation (where boundary twists die and some
//! bounded-distinct classes merge).
//!
//! The star witnesses: the square of the hyperelliptic involution is
//! nontrivial on the bounded surface but trivial on the closed one,
//! and the two a1-parallel twists t11, t12 become a single class.
//!
//! ```bash
//! cargo run --example closed_equality
//! ```

use sblf::{
    chain_twists, hyperelliptic_involution, standard_model, twist, MappingClass,
    DEFAULT_CLOSED_BOUND,
};

fn main() -> sblf::Result<()> {
    let model = standard_model(2)?;
    let table = chain_twists(&model)?;
    let identity = MappingClass::identity(&model);

    let iota = hyperelliptic_involution(&table);
    let iota_squared = iota.pow(2)?;
    println!("iota^2 bounded-equal to identity: {}", iota_squared.equal_bounded(&identity)?);
    let verdict = iota_squared.equal_closed(&identity, DEFAULT_CLOSED_BOUND)?;
    println!("iota^2 closed-equal  to identity: {}", verdict.status());
    if let sblf::Verdict::Equal { witness: Some(w) } = &verdict {
        println!("  (conjugating witness in pi_1: {w})");
    }

    let t11 = twist(&table, "t11")?;
    let t12 = twist(&table, "t12")?;
    println!("\nt11 bounded-equal to t12: {}", t11.equal_bounded(&t12)?);
    let verdict = t11.equal_closed(&t12, DEFAULT_CLOSED_BOUND)?;
    println!("t11 closed-equal  to t12: {}", verdict.status());

    // Genuinely distinct classes stay distinct: they already differ on
    // the homology of the closed surface.
    let t2 = twist(&table, "t2")?;
    let t3 = twist(&table, "t3")?;
    println!("\nt2 closed-equal to t3: {}", t2.equal_closed(&t3, DEFAULT_CLOSED_BOUND)?.status());

    // A deliberately tiny search bound reports unknown instead of
    // guessing: the third verdict value.
    let verdict = t11.equal_closed(&t12, 0)?;
    println!("t11 vs t12 with a zero search bound: {}", verdict.status());
    Ok(())
}
