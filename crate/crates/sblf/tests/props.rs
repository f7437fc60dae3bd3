//! Property-based tests for the algebraic core: reduced words, cyclic
//! words, free automorphisms, Smith normal form, mapping-class
//! equality, the expression grammar, and the capped-surface quotient.

use std::sync::OnceLock;

use proptest::prelude::*;

use sblf::{
    cap_along_last_handle, chain_twists, parse_class_expr, print_class_expr, smith_normal_form,
    standard_model, CapModel, ChainTwistTable, CyclicWord, IntegerMatrix, MappingClass, TwistWord,
    Word,
};

const RANK: usize = 4;

fn table() -> &'static ChainTwistTable {
    static TABLE: OnceLock<ChainTwistTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        chain_twists(&standard_model(2).expect("genus-2 model")).expect("chain-twist table")
    })
}

fn cap() -> &'static CapModel {
    static CAP: OnceLock<CapModel> = OnceLock::new();
    CAP.get_or_init(|| cap_along_last_handle(table().model()))
}

/// A generator or its inverse in the rank-4 free group.
fn letter() -> impl Strategy<Value = i32> {
    prop_oneof![1i32..=RANK as i32, -(RANK as i32)..=-1i32]
}

/// Unreduced letter sequences, to exercise the reduction itself.
fn raw_letters() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(letter(), 0..24)
}

fn word() -> impl Strategy<Value = Word> {
    raw_letters().prop_map(|raw| Word::reduce(RANK, &raw).expect("within cap"))
}

/// Twist words over the genus-2 chain names, with small exponents so
/// composed automorphism images stay well under the word cap.
fn twist_word() -> impl Strategy<Value = TwistWord> {
    words_over(vec!["t11", "t12", "t2", "t3", "t4", "t5"])
}

/// Twist words over generators that preserve the capped curve `c5`, the
/// domain of the capping homomorphism (`t4` moves the curve and does
/// not descend).
fn stabilizer_twist_word() -> impl Strategy<Value = TwistWord> {
    words_over(vec!["t11", "t12", "t2", "t3", "t5", "xi"])
}

fn words_over(names: Vec<&'static str>) -> impl Strategy<Value = TwistWord> {
    let syllable = (prop::sample::select(names), prop_oneof![1i32..=2, -2i32..=-1])
        .prop_map(|(name, e)| (name.to_string(), e));
    prop::collection::vec(syllable, 0..5)
}

fn class(word: &TwistWord) -> MappingClass {
    MappingClass::from_word(table(), word).expect("class from word")
}

/// Small integer matrices for Smith normal form round trips.
fn small_matrix() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(-6i64..=6, rows * cols).prop_map(move |entries| {
            let mut m = IntegerMatrix::zero(rows, cols);
            for (k, &v) in entries.iter().enumerate() {
                m.set_i64(k / cols, k % cols, v);
            }
            m
        })
    })
}

proptest! {
    #[test]
    fn reduction_leaves_no_adjacent_cancellation(raw in raw_letters()) {
        let w = Word::reduce(RANK, &raw).unwrap();
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0], -pair[1]);
        }
        let again = Word::reduce(RANK, w.letters()).unwrap();
        prop_assert_eq!(again, w);
    }

    #[test]
    fn multiplication_is_associative(a in word(), b in word(), c in word()) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverses_cancel(a in word()) {
        prop_assert!(a.multiply(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.inverse().inverse(), a);
    }

    #[test]
    fn pow_matches_repeated_multiplication(a in word(), e in -4i32..=4) {
        let mut expected = Word::identity(RANK);
        let factor = if e < 0 { a.inverse() } else { a.clone() };
        for _ in 0..e.unsigned_abs() {
            expected = expected.multiply(&factor).unwrap();
        }
        prop_assert_eq!(a.pow(e).unwrap(), expected);
    }

    #[test]
    fn abelianization_is_additive(a in word(), b in word()) {
        let product = a.multiply(&b).unwrap().abelianize();
        let sum: Vec<i64> = a
            .abelianize()
            .iter()
            .zip(b.abelianize())
            .map(|(x, y)| x + y)
            .collect();
        prop_assert_eq!(product, sum);
    }

    #[test]
    fn conjugation_preserves_cyclic_classes(w in word(), g in word()) {
        let conj = g.multiply(&w).unwrap().multiply(&g.inverse()).unwrap();
        for oriented in [true, false] {
            prop_assert_eq!(
                CyclicWord::conjugacy_class(&conj, oriented),
                CyclicWord::conjugacy_class(&w, oriented)
            );
        }
    }

    #[test]
    fn unoriented_classes_identify_inverses(w in word()) {
        prop_assert_eq!(
            CyclicWord::conjugacy_class(&w.inverse(), false),
            CyclicWord::conjugacy_class(&w, false)
        );
        let oriented_inverse = CyclicWord::conjugacy_class(&w.inverse(), true);
        prop_assert_eq!(oriented_inverse.with_orientation(false),
            CyclicWord::conjugacy_class(&w, false));
    }

    #[test]
    fn smith_normal_form_reconstructs_the_matrix(m in small_matrix()) {
        let snf = smith_normal_form(&m);
        let umv = snf.u.mul(&m).unwrap().mul(&snf.v).unwrap();
        prop_assert_eq!(&umv, &snf.d);
        prop_assert!(snf.u.mul(&snf.u_inv).unwrap().is_identity());
        // Diagonal, non-negative, with each entry dividing the next.
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    prop_assert_eq!(snf.d.get(i, j), &num_bigint::BigInt::from(0));
                }
            }
        }
        let diag = snf.diagonal();
        for pair in diag.windows(2) {
            use num_traits::Zero;
            prop_assert!(pair[0] >= num_bigint::BigInt::zero());
            if !pair[0].is_zero() {
                prop_assert!((&pair[1] % &pair[0]).is_zero());
            } else {
                prop_assert!(pair[1].is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn automorphisms_compose_functionally(
        u in twist_word(),
        v in twist_word(),
        w in word(),
    ) {
        let f = class(&u).automorphism().clone();
        let g = class(&v).automorphism().clone();
        let composed = f.compose(&g).unwrap();
        prop_assert_eq!(composed.apply(&w).unwrap(), f.apply(&g.apply(&w).unwrap()).unwrap());
        prop_assert!(f.compose(&f.inverse()).unwrap().is_identity());
        prop_assert_eq!(f.inverse().apply(&f.apply(&w).unwrap()).unwrap(), w);
    }

    #[test]
    fn abelianization_is_functorial(u in twist_word(), v in twist_word()) {
        let f = class(&u).automorphism().clone();
        let g = class(&v).automorphism().clone();
        let lhs = f.compose(&g).unwrap().abelianization_matrix();
        let rhs = f.abelianization_matrix().mul(&g.abelianization_matrix()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(f
            .abelianization_matrix()
            .mul(&f.inverse().abelianization_matrix())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn lefschetz_number_is_a_conjugacy_invariant(u in twist_word(), v in twist_word()) {
        let f = class(&u);
        let g = class(&v);
        let conj = g.then(&f).unwrap().then(&g.inverse()).unwrap();
        prop_assert_eq!(
            conj.automorphism().lefschetz_number(),
            f.automorphism().lefschetz_number()
        );
    }

    #[test]
    fn bounded_equality_ignores_free_insertions(
        u in twist_word(),
        name in prop::sample::select(vec!["t11", "t12", "t2", "t3", "t4", "t5"]),
        e in prop_oneof![1i32..=2, -2i32..=-1],
        split in 0usize..5,
    ) {
        let original = class(&u);
        let cut = split.min(u.len());
        let mut padded: TwistWord = u[..cut].to_vec();
        padded.push((name.to_string(), e));
        padded.push((name.to_string(), -e));
        padded.extend_from_slice(&u[cut..]);
        prop_assert!(class(&padded).equal_bounded(&original).unwrap());
        prop_assert!(original.pow(0).unwrap().equal_bounded(
            &MappingClass::identity(table().model())).unwrap());
    }

    #[test]
    fn class_expressions_round_trip(u in twist_word()) {
        let printed = print_class_expr(&u);
        let reparsed = parse_class_expr(table(), &printed).unwrap();
        prop_assert_eq!(print_class_expr(&reparsed), printed);
        prop_assert!(class(&reparsed).equal_bounded(&class(&u)).unwrap());
    }

    #[test]
    fn capping_is_a_homomorphism(u in stabilizer_twist_word(), v in stabilizer_twist_word()) {
        let f = class(&u).automorphism().clone();
        let g = class(&v).automorphism().clone();
        let phi_f = cap().induced_automorphism(&f).unwrap();
        let phi_g = cap().induced_automorphism(&g).unwrap();
        let phi_fg = cap().induced_automorphism(&f.compose(&g).unwrap()).unwrap();
        prop_assert_eq!(&phi_fg, &phi_f.compose(&phi_g).unwrap());
        prop_assert!(phi_f.compose(&phi_f.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cap_kernel_is_closed_under_products_and_conjugation(
        u in stabilizer_twist_word(),
        exponents in prop::collection::vec((prop::bool::ANY, -2i32..=2), 1..4),
    ) {
        // Products of t5 and xi powers lie in the kernel, and stay
        // there after conjugating by any class in the cap's domain.
        let mut kernel_word: TwistWord = Vec::new();
        for (use_xi, e) in exponents {
            if e != 0 {
                let name = if use_xi { "xi" } else { "t5" };
                kernel_word.push((name.to_string(), e));
            }
        }
        let k = class(&kernel_word);
        prop_assert!(cap().in_kernel(k.automorphism()).unwrap());
        let g = class(&u);
        let conj = g.then(&k).unwrap().then(&g.inverse()).unwrap();
        prop_assert!(cap().in_kernel(conj.automorphism()).unwrap());
    }
}
