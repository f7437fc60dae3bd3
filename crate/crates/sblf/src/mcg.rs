//! Mapping classes of the bounded surface, represented exactly.
//!
//! A mapping class of `Σ_{g,1}` is stored as the automorphism it
//! induces on the free fundamental group, together with the twist word
//! that produced it. Twist words are written in *travel order*: in
//! `t4 t5 t4^-1` the leftmost factor acts first, so the word denotes
//! the function `t4^-1 ∘ t5 ∘ t4`. This matches the usual convention
//! for monodromy factorizations, where a fibre transported past the
//! critical points picks up the twists in the order it meets them.
//!
//! Equality of bounded-surface classes is exact equality of
//! automorphisms. Equality after capping the boundary is conjugacy in
//! the closed surface group, decided (one-sidedly) through the
//! small-cancellation machinery in [`crate::dehn`].

use std::fmt;

use crate::aut::FreeAutomorphism;
use crate::cap::cap_along_last_handle;
use crate::dehn::ClosedWords;
use crate::error::{Error, Result};
use crate::surface::{ChainTwistTable, Curve, SurfaceModel};
use crate::verdict::Verdict;
use crate::word::CyclicWord;

/// A signed word in named twists, leftmost factor acting first.
pub type TwistWord = Vec<(String, i32)>;

/// Default exponent bound for the centralizer sweep in closed-model
/// equality tests.
pub const DEFAULT_CLOSED_BOUND: u64 = 12;

/// Invert a travel-order word: reverse the factors and their signs.
pub fn invert_twist_word(word: &[(String, i32)]) -> TwistWord {
    word.iter().rev().map(|(n, e)| (n.clone(), -e)).collect()
}

/// A mapping class of the bounded surface.
#[derive(Clone, Debug)]
pub struct MappingClass {
    model: SurfaceModel,
    word: TwistWord,
    aut: FreeAutomorphism,
}

/// Resolve one twist name to its automorphism. Besides the table rows
/// this accepts the genus-2 shorthand names `xi` (the rotation
/// `(t4 t5)^3`) and `iota2` (the hyperelliptic involution).
fn resolve_name(table: &ChainTwistTable, name: &str) -> Result<FreeAutomorphism> {
    if let Ok(entry) = table.get(name) {
        return Ok(entry.automorphism().clone());
    }
    if table.model().genus() == 2 {
        match name {
            "xi" => {
                let w: TwistWord = (0..3)
                    .flat_map(|_| [("t4".to_string(), 1), ("t5".to_string(), 1)])
                    .collect();
                return table.eval_travel(&w);
            }
            "iota2" => return Ok(table.involution_automorphism().clone()),
            _ => {}
        }
    }
    Err(Error::UnknownName(name.to_string()))
}

impl MappingClass {
    /// The identity class.
    pub fn identity(model: &SurfaceModel) -> MappingClass {
        MappingClass {
            model: model.clone(),
            word: Vec::new(),
            aut: FreeAutomorphism::identity(model.rank()),
        }
    }

    /// Evaluate a travel-order twist word over the table alphabet
    /// (plus `xi`/`iota2` at genus 2).
    pub fn from_word(table: &ChainTwistTable, word: &[(String, i32)]) -> Result<MappingClass> {
        let mut acc = FreeAutomorphism::identity(table.model().rank());
        for (name, e) in word {
            let aut = resolve_name(table, name)?;
            acc = aut.pow(*e)?.compose(&acc)?;
        }
        Ok(MappingClass { model: table.model().clone(), word: word.to_vec(), aut: acc })
    }

    /// Wrap a raw boundary-fixing automorphism. The twist word is left
    /// empty; use this only for classes that have no table expression.
    pub fn from_automorphism(model: &SurfaceModel, aut: FreeAutomorphism) -> Result<MappingClass> {
        if aut.rank() != model.rank() {
            return Err(Error::RankMismatch { left: model.rank(), right: aut.rank() });
        }
        Ok(MappingClass { model: model.clone(), word: Vec::new(), aut })
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn word(&self) -> &[(String, i32)] {
        &self.word
    }

    pub fn automorphism(&self) -> &FreeAutomorphism {
        &self.aut
    }

    /// `self` followed by `next` (travel order), so the result acts as
    /// `next ∘ self`.
    pub fn then(&self, next: &MappingClass) -> Result<MappingClass> {
        if self.model != next.model {
            return Err(Error::ModelMismatch(
                "mapping classes live on different surface models".to_string(),
            ));
        }
        let mut word = self.word.clone();
        word.extend(next.word.iter().cloned());
        Ok(MappingClass {
            model: self.model.clone(),
            word,
            aut: next.aut.compose(&self.aut)?,
        })
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass {
            model: self.model.clone(),
            word: invert_twist_word(&self.word),
            aut: self.aut.inverse(),
        }
    }

    pub fn pow(&self, e: i32) -> Result<MappingClass> {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = MappingClass::identity(&self.model);
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base)?;
        }
        Ok(acc)
    }

    /// Image of a curve under the class.
    pub fn apply_to_curve(&self, curve: &Curve) -> Result<Curve> {
        let cls = self.aut.apply_cyclic(curve.class())?;
        Ok(Curve::from_word(&cls.to_word(), curve.declared_simple(), None))
    }

    /// Exact equality as classes of the bounded surface.
    pub fn equal_bounded(&self, other: &MappingClass) -> Result<bool> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(
                "mapping classes live on different surface models".to_string(),
            ));
        }
        Ok(self.aut == other.aut)
    }

    /// Equality as classes of the *closed* surface (capping the
    /// boundary): true iff the automorphisms differ by conjugation in
    /// the one-relator quotient. `bound` limits the centralizer sweep;
    /// an exhausted search reports `Unknown`, never a wrong verdict.
    pub fn equal_closed(&self, other: &MappingClass, bound: u64) -> Result<Verdict> {
        if self.model != other.model {
            return Err(Error::ModelMismatch(
                "mapping classes live on different surface models".to_string(),
            ));
        }
        if self.aut == other.aut {
            return Ok(Verdict::equal());
        }
        // Inner automorphisms act trivially on closed-surface homology,
        // so differing homology actions certify distinctness.
        if self.aut.abelianization_matrix() != other.aut.abelianization_matrix() {
            return Ok(Verdict::Distinct);
        }
        let h = self.aut.compose(&other.aut.inverse())?;
        let dehn = ClosedWords::new(self.model.rank(), &self.model.boundary_word());
        dehn.inner_witness(&h, bound)
    }

    /// Whether the class fixes the unoriented isotopy class of a curve
    /// (in the bounded model).
    pub fn preserves_curve(&self, curve: &Curve) -> Result<bool> {
        let image = self.aut.apply_cyclic(curve.class())?;
        Ok(image == *curve.class())
    }

    /// Whether the class fixes the curve together with an orientation.
    pub fn preserves_curve_oriented(&self, curve: &Curve) -> Result<bool> {
        let oriented = curve.oriented_class();
        let image = self.aut.apply_cyclic(&oriented)?;
        Ok(image == oriented)
    }

    /// Whether the class descends to the identity after capping along
    /// the last handle's `a_g` curve. Fails with `CapUndefined` when
    /// the class does not preserve that curve.
    pub fn in_cap_kernel(&self) -> Result<bool> {
        cap_along_last_handle(&self.model).in_kernel(&self.aut)
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return if self.aut.is_identity() {
                write!(f, "id")
            } else {
                write!(f, "[rank-{} automorphism]", self.aut.rank())
            };
        }
        let mut first = true;
        for (name, e) in &self.word {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The table twist about a named curve row, as a mapping class.
pub fn twist(table: &ChainTwistTable, name: &str) -> Result<MappingClass> {
    table.get(name)?;
    MappingClass::from_word(table, &[(name.to_string(), 1)])
}

/// The hyperelliptic involution of the chain model.
pub fn hyperelliptic_involution(table: &ChainTwistTable) -> MappingClass {
    MappingClass {
        model: table.model().clone(),
        word: table.involution_word(),
        aut: table.involution_automorphism().clone(),
    }
}

/// The twist about the image curve `φ(c)`, where `c` is the curve of a
/// table twist and `φ` is any mapping class: `t_{φ(c)} = φ t_c φ^-1`
/// as functions, i.e. the travel word `φ^-1 · t_c · φ`.
pub fn conjugated_twist(
    table: &ChainTwistTable,
    base_twist: &str,
    conjugator: &MappingClass,
) -> Result<(Curve, MappingClass)> {
    let entry = table.get(base_twist)?;
    let cls = conjugator.aut.apply_cyclic(entry.curve().class())?;
    let curve = Curve::from_word(&cls.to_word(), true, None);
    let mut word = invert_twist_word(&conjugator.word);
    word.push((base_twist.to_string(), 1));
    word.extend(conjugator.word.iter().cloned());
    let aut = conjugator
        .aut
        .compose(entry.automorphism())?
        .compose(&conjugator.aut.inverse())?;
    Ok((curve, MappingClass { model: table.model().clone(), word, aut }))
}

/// Whether two travel-order twist words define the same class of the
/// bounded surface.
pub fn verify_identity(
    table: &ChainTwistTable,
    lhs: &[(String, i32)],
    rhs: &[(String, i32)],
) -> Result<bool> {
    let l = MappingClass::from_word(table, lhs)?;
    let r = MappingClass::from_word(table, rhs)?;
    l.equal_bounded(&r)
}

/// Whether the hyperelliptic involution fixes the curve's unoriented
/// class in the bounded model. This certifies symmetry; because the
/// involution was fixed once and for all, a `false` here does not rule
/// out symmetry with respect to some other involution.
pub fn is_symmetric_curve(table: &ChainTwistTable, curve: &Curve) -> Result<bool> {
    let image = table.involution_automorphism().apply_cyclic(curve.class())?;
    Ok(image == *curve.class())
}

/// Symmetry of the curve after capping the boundary: conjugacy of the
/// involution image with the curve in the closed surface group.
pub fn is_symmetric_curve_closed(table: &ChainTwistTable, curve: &Curve) -> Result<Verdict> {
    let model = table.model();
    let dehn = ClosedWords::new(model.rank(), &model.boundary_word());
    let image = table.involution_automorphism().apply_cyclic(curve.class())?;
    Ok(dehn.conjugate(&image.to_word(), &curve.class().to_word(), false))
}

/// Conjugacy of two curves in the closed surface group.
pub fn curves_equal_closed(
    model: &SurfaceModel,
    a: &CyclicWord,
    b: &CyclicWord,
    oriented: bool,
) -> Verdict {
    let dehn = ClosedWords::new(model.rank(), &model.boundary_word());
    dehn.conjugate(&a.to_word(), &b.to_word(), oriented)
}
