//! Capping off the last handle of the bounded surface.
//!
//! Gluing a handle-filling cap along the non-separating curve `a_g`
//! turns `Σ_{g,1}` into `Σ_{g-1,1}`. A mapping class that preserves
//! the (unoriented) curve descends to the capped surface; on the free
//! fundamental group the descent simply erases the last handle's
//! letters `a_g, b_g`. The kernel of this descent is exactly the part
//! of the monodromy that a fibration can absorb into the round handle
//! attached along the same curve.

use crate::aut::FreeAutomorphism;
use crate::error::{Error, Result};
use crate::surface::SurfaceModel;
use crate::word::{CyclicWord, Word};

/// The descent map induced by capping along `a_g`.
#[derive(Clone, Debug)]
pub struct CapModel {
    source_rank: usize,
    target_rank: usize,
}

/// Cap along the last handle's `a_g` curve (the standard round curve
/// of the chain model).
pub fn cap_along_last_handle(model: &SurfaceModel) -> CapModel {
    CapModel { source_rank: model.rank(), target_rank: model.rank() - 2 }
}

impl CapModel {
    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    /// The curve being capped, as a word in the source group: `a_g`.
    pub fn capped_curve_word(&self) -> Word {
        Word::generator(self.source_rank, self.source_rank - 1).expect("a_g exists")
    }

    /// Erase the last handle's letters and reduce in the smaller group.
    fn descend_word(&self, w: &Word) -> Result<Word> {
        let keep = self.target_rank as i32;
        let letters: Vec<i32> =
            w.letters().iter().copied().filter(|l| l.abs() <= keep).collect();
        Word::reduce(self.target_rank, &letters)
    }

    /// Whether an automorphism preserves the unoriented class of the
    /// capped curve (the precondition for it to descend).
    pub fn preserves_capped_curve(&self, aut: &FreeAutomorphism) -> Result<bool> {
        let c = CyclicWord::conjugacy_class(&self.capped_curve_word(), false);
        Ok(aut.apply_cyclic(&c)? == c)
    }

    /// The automorphism of the capped surface's group induced by `aut`.
    /// Fails with `CapUndefined` when `aut` does not preserve the
    /// capped curve.
    pub fn induced_automorphism(&self, aut: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        if aut.rank() != self.source_rank {
            return Err(Error::RankMismatch { left: self.source_rank, right: aut.rank() });
        }
        if !self.preserves_capped_curve(aut)? {
            return Err(Error::CapUndefined);
        }
        let mut images = Vec::with_capacity(self.target_rank);
        let mut inverses = Vec::with_capacity(self.target_rank);
        for i in 1..=self.target_rank {
            images.push(self.descend_word(aut.image(i))?);
            inverses.push(self.descend_word(aut.inverse_image(i))?);
        }
        FreeAutomorphism::new(self.target_rank, images, inverses)
    }

    /// Whether `aut` lies in the kernel of the descent (acts trivially
    /// on the capped surface).
    pub fn in_kernel(&self, aut: &FreeAutomorphism) -> Result<bool> {
        Ok(self.induced_automorphism(aut)?.is_identity())
    }
}
