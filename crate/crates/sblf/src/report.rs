//! The built-in verification suite for the genus-2 chain calculus.
//!
//! Every relation the rest of the crate relies on is re-proved here
//! from the frozen twist table, each under a stable identifier:
//! braid and commutation relations, the chain relation, the
//! involution's defining words and symmetries, the conjugated twist
//! families about the image curves of `c4`, `c5` and `c11`, the
//! product identities those families satisfy, membership of the
//! products in the capping kernel, and the closed-model collapses
//! (`iota2^2 = 1`, `t11 = t12`). All equalities of bounded classes are
//! exact; closed-model checks return certified verdicts.

use serde::Serialize;

use crate::cap::cap_along_last_handle;
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::mcg::{
    conjugated_twist, hyperelliptic_involution, verify_identity, MappingClass, TwistWord,
    DEFAULT_CLOSED_BOUND,
};
use crate::surface::{chain_twists, standard_model, transvection_matrix, ChainTwistTable, Curve};

#[derive(Clone, Debug, Serialize)]
pub struct SuiteCheck {
    pub id: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<SuiteCheck>,
    pub all_pass: bool,
}

impl SuiteReport {
    pub fn exit_code(&self) -> i32 {
        if self.all_pass {
            0
        } else {
            1
        }
    }
}

fn tw(tokens: &[(&str, i32)]) -> TwistWord {
    tokens.iter().map(|(n, e)| (n.to_string(), *e)).collect()
}

/// The twist about `t4^-j(c5)` together with that curve.
fn beta(table: &ChainTwistTable, j: i32) -> Result<(Curve, MappingClass)> {
    let conj = MappingClass::from_word(table, &tw(&[("t4", -j)]))?;
    conjugated_twist(table, "t5", &conj)
}

/// The twist about `(t5^2 t4^(1-i))(c4)` together with that curve.
fn alpha(table: &ChainTwistTable, i: i32) -> Result<(Curve, MappingClass)> {
    let conj = MappingClass::from_word(table, &tw(&[("t5", 2), ("t4", 1 - i)]))?;
    conjugated_twist(table, "t4", &conj)
}

/// The twists about the two image curves of `c11`.
fn gamma(table: &ChainTwistTable, k: usize) -> Result<(Curve, MappingClass)> {
    let word = match k {
        1 => tw(&[("t2", 1), ("t3", 1), ("t4", 1), ("t5", 2)]),
        2 => tw(&[("t2", 1), ("t3", 1), ("t4", 1)]),
        _ => return Err(Error::IndexOutOfRange(format!("gamma index {k}"))),
    };
    let conj = MappingClass::from_word(table, &word)?;
    conjugated_twist(table, "t11", &conj)
}

/// `alpha_1 ... alpha_(s-2) beta_(s-1) beta_(-1)` in travel order.
fn alphabeta_product(table: &ChainTwistTable, s: i32) -> Result<MappingClass> {
    let mut acc = MappingClass::identity(table.model());
    for i in 1..=s - 2 {
        acc = acc.then(&alpha(table, i)?.1)?;
    }
    acc = acc.then(&beta(table, s - 1)?.1)?;
    acc.then(&beta(table, -1)?.1)
}

/// A conjugated-twist family member is checked three ways: the curve
/// comes out as the expected canonical cyclic word, the travel word
/// stored on the class re-evaluates to the same automorphism, and the
/// class itself matches `expected_word` when one is given.
fn conjugate_check(
    table: &ChainTwistTable,
    built: &(Curve, MappingClass),
    curve_letters: &[i32],
    expected_word: Option<&TwistWord>,
) -> Result<bool> {
    let (curve, class) = built;
    if curve.class().letters() != curve_letters {
        return Ok(false);
    }
    let reevaluated = MappingClass::from_word(table, class.word())?;
    if !reevaluated.equal_bounded(class)? {
        return Ok(false);
    }
    match expected_word {
        Some(w) => Ok(MappingClass::from_word(table, w)?.equal_bounded(class)?),
        None => Ok(true),
    }
}

/// Run the identity suite, optionally restricted to a single check id.
pub fn run_paper_lemmas(only: Option<&str>) -> Result<SuiteReport> {
    let table = chain_twists(&standard_model(2)?)?;
    let model = table.model().clone();
    let cap = cap_along_last_handle(&model);
    let iota = hyperelliptic_involution(&table);
    let mut checks: Vec<SuiteCheck> = Vec::new();

    macro_rules! check {
        ($id:expr, $body:expr) => {
            if only.map_or(true, |o| o == $id) {
                let pass: bool = $body?;
                checks.push(SuiteCheck { id: $id.to_string(), pass });
            }
        };
    }

    // The chain relation in the handle being capped.
    check!(
        "eq1",
        verify_identity(
            &table,
            &tw(&[("t4", 1), ("t5", 2), ("t4", 1)]),
            &tw(&[("t5", -1), ("xi", 1), ("t5", -1)]),
        )
    );

    // Braid relations between chain neighbours.
    for (a, b) in [("t11", "t2"), ("t12", "t2"), ("t2", "t3"), ("t3", "t4"), ("t4", "t5")] {
        check!(
            &format!("braid-{a}-{b}"),
            verify_identity(
                &table,
                &tw(&[(a, 1), (b, 1), (a, 1)]),
                &tw(&[(b, 1), (a, 1), (b, 1)]),
            )
        );
    }

    // Commutation between distant chain curves (and the disjoint pair
    // t11, t12).
    for (a, b) in [
        ("t11", "t12"),
        ("t11", "t3"),
        ("t11", "t4"),
        ("t11", "t5"),
        ("t12", "t3"),
        ("t12", "t4"),
        ("t12", "t5"),
        ("t2", "t4"),
        ("t2", "t5"),
        ("t3", "t5"),
    ] {
        check!(
            &format!("commute-{a}-{b}"),
            verify_identity(&table, &tw(&[(a, 1), (b, 1)]), &tw(&[(b, 1), (a, 1)]))
        );
    }

    // Every table twist fixes the boundary word exactly.
    check!("delta-fixing", {
        let delta = model.boundary_word();
        let mut all = true;
        for e in table.entries() {
            all &= e.automorphism().fixes_word(&delta)?;
        }
        Ok::<bool, Error>(all)
    });

    // Every table twist acts on homology by the transvection of its
    // curve.
    check!("transvections", {
        let mut all = true;
        for e in table.entries() {
            let v = e.curve().homology_class()?;
            all &= e.automorphism().abelianization_matrix() == transvection_matrix(&model, &v);
        }
        Ok::<bool, Error>(all)
    });

    // The involution: both defining words, the boundary-curve swap,
    // and commutation with the rest of the chain.
    check!("iota2-words", {
        let palindrome = MappingClass::from_word(
            &table,
            &tw(&[
                ("t11", 1),
                ("t2", 1),
                ("t3", 1),
                ("t4", 1),
                ("t5", 2),
                ("t4", 1),
                ("t3", 1),
                ("t2", 1),
                ("t11", 1),
            ]),
        )?;
        palindrome.equal_bounded(&iota)
    });
    check!(
        "iota2-swap",
        verify_identity(
            &table,
            &[iota.word().to_vec(), tw(&[("t11", 1)])].concat(),
            &[tw(&[("t12", 1)]), iota.word().to_vec()].concat(),
        )
    );
    for k in ["t2", "t3", "t4", "t5"] {
        check!(
            &format!("iota2-commute-{k}"),
            verify_identity(
                &table,
                &[iota.word().to_vec(), tw(&[(k, 1)])].concat(),
                &[tw(&[(k, 1)]), iota.word().to_vec()].concat(),
            )
        );
    }

    check!("iota2-homology", {
        let rank = model.rank();
        let mut minus = IntegerMatrix::zero(rank, rank);
        for i in 0..rank {
            minus.set_i64(i, i, -1);
        }
        Ok::<bool, Error>(iota.automorphism().abelianization_matrix() == minus)
    });
    check!(
        "lefschetz-number",
        Ok::<bool, Error>(iota.automorphism().lefschetz_number() == 6)
    );

    // Conjugated twist families and their curves.
    for j in 1..=5i32 {
        check!(&format!("conjugate-beta-{j}"), {
            let mut letters = vec![3];
            letters.extend(std::iter::repeat_n(-4, j as usize));
            let mut expected = tw(&[("t4", j)]);
            expected.push(("t5".to_string(), 1));
            expected.push(("t4".to_string(), -j));
            conjugate_check(&table, &beta(&table, j)?, &letters, Some(&expected))
        });
    }
    check!("conjugate-beta-neg1", {
        let expected = tw(&[("t4", -1), ("t5", 1), ("t4", 1)]);
        conjugate_check(&table, &beta(&table, -1)?, &[3, 4], Some(&expected))
    });
    let alpha_curves: [(i32, &[i32]); 3] = [
        (1, &[3, 3, -4]),
        (2, &[3, -4, 3, -4, -4]),
        (3, &[3, -4, -4, 3, -4, -4, -4]),
    ];
    for (i, letters) in alpha_curves {
        check!(
            &format!("conjugate-alpha-{i}"),
            conjugate_check(&table, &alpha(&table, i)?, letters, None)
        );
    }
    check!(
        "conjugate-gamma-1",
        conjugate_check(&table, &gamma(&table, 1)?, &[2, 3, 3, -4, -3], None)
    );
    check!(
        "conjugate-gamma-2",
        conjugate_check(&table, &gamma(&table, 2)?, &[2, -4, -3], None)
    );

    // Product identities for the families.
    check!("lem-beta", {
        let lhs = beta(&table, 1)?.1.then(&beta(&table, -1)?.1)?;
        let rhs = MappingClass::from_word(&table, &tw(&[("xi", 1), ("t5", -4)]))?;
        lhs.equal_bounded(&rhs)
    });
    check!("lem-gamma", {
        let lhs = gamma(&table, 1)?.1.then(&gamma(&table, 2)?.1)?;
        let rhs = MappingClass::from_word(
            &table,
            &tw(&[
                ("iota2", 1),
                ("t5", -2),
                ("t11", -1),
                ("t2", -1),
                ("t3", -2),
                ("t2", -1),
                ("t11", -1),
            ]),
        )?;
        lhs.equal_bounded(&rhs)
    });
    for s in 3..=8i32 {
        check!(&format!("lem-alphabeta-s{s}"), {
            let lhs = alphabeta_product(&table, s)?;
            let rhs =
                MappingClass::from_word(&table, &tw(&[("xi", s - 1), ("t5", -5 * s + 6)]))?;
            lhs.equal_bounded(&rhs)
        });
    }

    // Kernel membership after capping along a_2.
    check!("kernel-beta", {
        let p = beta(&table, 1)?.1.then(&beta(&table, -1)?.1)?;
        p.in_cap_kernel()
    });
    check!("kernel-gamma", {
        let p = gamma(&table, 1)?.1.then(&gamma(&table, 2)?.1)?;
        p.in_cap_kernel()
    });
    for s in 3..=8i32 {
        check!(&format!("kernel-alphabeta-s{s}"), {
            alphabeta_product(&table, s)?.in_cap_kernel()
        });
    }

    // The capping map itself: the twists that must die, and one that
    // must survive.
    check!("phi-t5-trivial", {
        let t5 = table.get("t5")?.automorphism();
        Ok::<bool, Error>(cap.induced_automorphism(t5)?.is_identity())
    });
    check!("phi-xi-trivial", {
        let xi = MappingClass::from_word(&table, &tw(&[("xi", 1)]))?;
        Ok::<bool, Error>(cap.induced_automorphism(xi.automorphism())?.is_identity())
    });
    check!("phi-t2-nontrivial", {
        let t2 = table.get("t2")?.automorphism();
        let induced = cap.induced_automorphism(t2)?;
        Ok::<bool, Error>(!induced.is_identity() && induced.image(1).letters() == [1, 2])
    });

    // Collapses that only hold on the closed surface.
    check!("iota2-squared-closed", {
        let square = iota.then(&iota)?;
        let id = MappingClass::identity(&model);
        assert!(!square.equal_bounded(&id)?);
        Ok::<bool, Error>(square.equal_closed(&id, DEFAULT_CLOSED_BOUND)?.is_equal())
    });
    check!("t11-t12-closed", {
        let t11 = MappingClass::from_word(&table, &tw(&[("t11", 1)]))?;
        let t12 = MappingClass::from_word(&table, &tw(&[("t12", 1)]))?;
        assert!(!t11.equal_bounded(&t12)?);
        Ok::<bool, Error>(t11.equal_closed(&t12, DEFAULT_CLOSED_BOUND)?.is_equal())
    });

    if let Some(o) = only {
        if checks.is_empty() {
            return Err(Error::UnknownName(format!("no such check `{o}`")));
        }
    }
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(SuiteReport { suite: "paper-lemmas".to_string(), checks, all_pass })
}
