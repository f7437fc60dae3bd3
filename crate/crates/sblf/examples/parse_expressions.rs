//! Tours the text grammar: twist-word expressions with powers and
//! parentheses, named curves, twist-image curves `(classes)(curve)`,
//! and literal curves as bracketed letter lists. Everything round-trips
//! through the printer.
//!
//! ```bash
//! cargo run --example parse_expressions
//! ```

use sblf::{
    chain_twists, eval_curve_expr, hyperelliptic_involution, parse_class_expr, parse_curve_expr,
    print_class_expr, print_curve_expr, standard_model, MappingClass,
};

fn main() -> sblf::Result<()> {
    let model = standard_model(2)?;
    let table = chain_twists(&model)?;
    let iota = hyperelliptic_involution(&table);

    // Twist words multiply in travel order: "t4 t5" acts by t4 first.
    for text in ["t4 t5 t4", "t2^-1 t3^2", "(t5 t4 t3 t2)^5", "(t4 t5)^3 t5^-4"] {
        let word = parse_class_expr(&table, text)?;
        let class = MappingClass::from_word(&table, &word)?;
        println!("{text:20} -> {}", print_class_expr(&word));
        if class.equal_bounded(&iota)? {
            println!("{:20}    (this is the hyperelliptic involution)", "");
        }
    }

    // Curves: named table curves, images under classes, raw words.
    println!();
    for text in ["c4", "(t5^2 t4^-1)(c4)", "(t2 t3)(c11)", "[1, 2, -1, -2]"] {
        let expr = parse_curve_expr(&table, text)?;
        let curve = eval_curve_expr(&table, &expr)?;
        println!(
            "{text:20} -> {}   homology {:?}, separating: {}",
            print_curve_expr(&expr),
            curve.homology_class()?,
            curve.is_separating()?
        );
    }

    // Errors carry byte positions.
    for text in ["t6", "(t2", "t2^x"] {
        match parse_class_expr(&table, text) {
            Err(e) => println!("\n{text:6} rejected: {e}"),
            Ok(_) => println!("\n{text:6} unexpectedly parsed"),
        }
    }
    Ok(())
}
