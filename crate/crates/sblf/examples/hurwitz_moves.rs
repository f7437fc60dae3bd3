//! Plays with monodromy factorizations: elementary moves preserve the
//! total monodromy, and a bounded bidirectional search recovers a move
//! sequence between equivalent factorizations.
//!
//! ```bash
//! cargo run --example hurwitz_moves
//! ```

use sblf::{
    chain_twists, hurwitz_equivalent_bounded, standard_model, Factorization, FactorizationEntry,
    Move, MoveDirection, SearchStatus,
};

fn main() -> sblf::Result<()> {
    let model = standard_model(2)?;
    let table = chain_twists(&model)?;

    // The twists about the first three chain curves, in travel order.
    let entries: Vec<FactorizationEntry> = ["t11", "t2", "t3"]
        .iter()
        .map(|name| FactorizationEntry::table_twist(&table, name))
        .collect::<sblf::Result<_>>()?;
    let factorization = Factorization::new(&model, entries)?;

    let describe = |f: &Factorization| {
        f.entries()
            .iter()
            .map(|e| e.curve().class().to_string())
            .collect::<Vec<_>>()
            .join("  |  ")
    };
    println!("start:   {}", describe(&factorization));

    // One forward move braids an adjacent pair; the total monodromy is
    // untouched.
    let moved = factorization.elementary_move(Move { index: 0, direction: MoveDirection::Forward })?;
    println!("after f0: {}", describe(&moved));
    let same_total = factorization
        .total_monodromy()?
        .equal_bounded(&moved.total_monodromy()?)?;
    println!("total monodromy preserved: {same_total}");

    // Scramble with a few moves, then ask the search to find a path
    // back. The witness is replayable.
    let scrambled = factorization.apply_moves(&[
        Move { index: 1, direction: MoveDirection::Forward },
        Move { index: 0, direction: MoveDirection::Backward },
        Move { index: 1, direction: MoveDirection::Forward },
    ])?;
    println!("\nscrambled: {}", describe(&scrambled));

    let outcome = hurwitz_equivalent_bounded(&table, &factorization, &scrambled, 6, 0)?;
    println!("search status: {}", outcome.status.as_str());
    if outcome.status == SearchStatus::Equivalent {
        let trace: Vec<String> = outcome.moves.iter().map(|m| m.to_string()).collect();
        println!("move trace: {}", trace.join(" "));
        let replayed = factorization.apply_moves(&outcome.moves)?;
        let matches = replayed
            .entries()
            .iter()
            .zip(scrambled.entries())
            .all(|(a, b)| a.curve().class() == b.curve().class());
        println!("replaying the trace reproduces the scramble: {matches}");
    }

    // Factorizations with different totals are certified distinct
    // without any search.
    let shorter = Factorization::new(
        &model,
        vec![
            FactorizationEntry::table_twist(&table, "t11")?,
            FactorizationEntry::table_twist(&table, "t2")?,
            FactorizationEntry::table_twist(&table, "t4")?,
        ],
    )?;
    let outcome = hurwitz_equivalent_bounded(&table, &factorization, &shorter, 6, 0)?;
    println!("\nagainst a different factorization: {}", outcome.status.as_str());
    Ok(())
}
