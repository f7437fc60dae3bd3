//! Caps off the last handle of the genus-2 surface and studies the
//! induced map on mapping classes: which twists descend, what they
//! descend to, and which lie in the kernel — the part of a monodromy
//! that a round handle attached along the capped curve can absorb.
//!
//! ```bash
//! cargo run --example cap_quotient
//! ```

use sblf::{cap_along_last_handle, chain_twists, standard_model, Error, MappingClass};

fn main() -> sblf::Result<()> {
    let model = standard_model(2)?;
    let table = chain_twists(&model)?;
    let cap = cap_along_last_handle(&model);
    let class_of = |name: &str| MappingClass::from_word(&table, &[(name.to_string(), 1)]);

    println!(
        "capping along {} : rank {} -> rank {}",
        cap.capped_curve_word(),
        cap.source_rank(),
        cap.target_rank()
    );

    for name in ["t11", "t12", "t2", "t3", "t5", "xi"] {
        let class = class_of(name)?;
        let induced = cap.induced_automorphism(class.automorphism())?;
        if induced.is_identity() {
            println!("{name:4} descends to the identity (kernel element)");
        } else {
            let images: Vec<String> = (1..=cap.target_rank())
                .map(|i| format!("x{i} -> {}", induced.image(i)))
                .collect();
            println!("{name:4} descends to  {}", images.join(", "));
        }
    }

    // t4 moves the capped curve, so no induced map exists for it.
    let t4 = class_of("t4")?;
    match cap.induced_automorphism(t4.automorphism()) {
        Err(Error::CapUndefined) => println!("t4   does not preserve the curve: no descent"),
        other => println!("t4   unexpected outcome: {other:?}"),
    }

    // The kernel is closed under products and under conjugation by
    // anything in the cap's domain.
    let product = class_of("t5")?.pow(-3)?.then(&class_of("xi")?.pow(2)?)?;
    println!("\nt5^-3 xi^2 in kernel: {}", cap.in_kernel(product.automorphism())?);
    let t2 = class_of("t2")?;
    let conjugated = t2.then(&product)?.then(&t2.inverse())?;
    println!("its t2-conjugate in kernel: {}", cap.in_kernel(conjugated.automorphism())?);
    Ok(())
}
