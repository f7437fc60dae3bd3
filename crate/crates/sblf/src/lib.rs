//! Exact combinatorial topology of simplified broken Lefschetz
//! fibrations over the sphere.
//!
//! The crate models the bounded surface `Σ_{g,1}` through its free
//! fundamental group, so that mapping classes are honest free-group
//! automorphisms and every equality of classes is decided exactly — no
//! floating point, no normal forms modulo unproved relations. On top
//! of that sit:
//!
//! * [`surface`] — the polygon model, the frozen chain-twist table
//!   with its self-validation suite, homology and intersection data;
//! * [`mcg`] — mapping classes with travel-order twist words, bounded
//!   (exact) and closed (conjugacy-certified) equality, curve actions;
//! * [`cap`] — the descent of classes to the capped-off surface and
//!   its kernel;
//! * [`hurwitz`] — monodromy factorizations, elementary moves, and a
//!   bounded equivalence search with move traces;
//! * [`blf`] — fibration descriptors, the validity criterion, Euler
//!   characteristic, fundamental group, homology and Betti reports,
//!   and the standard `W_s` family;
//! * [`expr`] — the text grammar for twist words and curves;
//! * [`report`] — the built-in identity suite with stable check ids.
//!
//! Supporting layers: reduced words and cyclic words ([`word`]), free
//! automorphisms ([`aut`]), exact integer matrices and Smith normal
//! form ([`matrix`]), finitely presented groups ([`presentation`]),
//! small-cancellation reduction in the closed surface group
//! ([`dehn`]), and three-valued verdicts with witnesses ([`verdict`]).

pub mod aut;
pub mod blf;
pub mod cap;
pub mod dehn;
pub mod error;
pub mod expr;
pub mod hurwitz;
pub mod matrix;
pub mod mcg;
pub mod presentation;
pub mod report;
pub mod surface;
pub mod verdict;
pub mod word;

pub use aut::FreeAutomorphism;
pub use blf::{
    build_ws, BettiReport, CheckStatus, ConditionReport, CycleClassification, CycleSpec,
    DirectedBLFDescriptor, FixedPointDescriptor, InvariantsReport, SBLFDescriptor,
    ValidationReport,
};
pub use cap::{cap_along_last_handle, CapModel};
pub use dehn::ClosedWords;
pub use error::{Error, Result};
pub use expr::{
    eval_curve_expr, parse_class_expr, parse_curve_expr, print_class_expr, print_curve_expr,
    twist_from_curve_expr, CurveExpr,
};
pub use hurwitz::{
    hurwitz_equivalent_bounded, Factorization, FactorizationEntry, Move, MoveDirection,
    SearchOutcome, SearchStatus,
};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithNormalForm};
pub use mcg::{
    conjugated_twist, curves_equal_closed, hyperelliptic_involution, invert_twist_word,
    is_symmetric_curve, is_symmetric_curve_closed, twist, verify_identity, MappingClass,
    TwistWord, DEFAULT_CLOSED_BOUND,
};
pub use presentation::GroupPresentation;
pub use report::{run_paper_lemmas, SuiteCheck, SuiteReport};
pub use surface::{
    chain_twists, separating_curve_twist, standard_model, transvection_matrix, ChainTwistTable,
    Curve, SurfaceModel, TableCheck, TableEntry,
};
pub use verdict::Verdict;
pub use word::{CyclicWord, Word};
