//! Automorphisms of a finite-rank free group, given by generator images.
//!
//! Every [`FreeAutomorphism`] carries precomputed images for its inverse
//! as well, so inverting is O(1) and applying the inverse never requires
//! solving a word problem. Composition is functional: `f.compose(&g)`
//! is the map `w -> f(g(w))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::word::{word_cap, CyclicWord, Word};

/// An automorphism of the free group `F_rank`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl FreeAutomorphism {
    /// Build from generator images of the map and of its inverse,
    /// verifying that the two really compose to the identity both ways.
    pub fn new(rank: usize, images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        if images.len() != rank || inverse_images.len() != rank {
            return Err(Error::NotAnAutomorphism(format!(
                "expected {rank} images, got {} and {}",
                images.len(),
                inverse_images.len()
            )));
        }
        for w in images.iter().chain(&inverse_images) {
            if w.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: w.rank() });
            }
        }
        let f = FreeAutomorphism { rank, images, inverse_images };
        let g = f.inverse();
        for i in 1..=rank {
            let x = Word::generator(rank, i)?;
            if f.apply(&g.apply(&x)?)? != x || g.apply(&f.apply(&x)?)? != x {
                return Err(Error::NotAnAutomorphism(format!(
                    "claimed inverse fails on generator x{i}"
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(rank: usize) -> Self {
        let gens: Vec<Word> = (1..=rank).map(|i| Word::generator(rank, i).unwrap()).collect();
        FreeAutomorphism { rank, images: gens.clone(), inverse_images: gens }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of the generator `x_i` (1-based).
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    /// Image of `x_i` under the inverse automorphism.
    pub fn inverse_image(&self, i: usize) -> &Word {
        &self.inverse_images[i - 1]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Substitute generator images into `w` and reduce.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.substitute(&self.images, w)
    }

    /// Apply the inverse automorphism.
    pub fn apply_inverse(&self, w: &Word) -> Result<Word> {
        self.substitute(&self.inverse_images, w)
    }

    fn substitute(&self, table: &[Word], w: &Word) -> Result<Word> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank() });
        }
        let cap = word_cap();
        let mut stack: Vec<i32> = Vec::new();
        for &l in w.letters() {
            let img = &table[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &m in img.letters() {
                    if stack.last() == Some(&-m) {
                        stack.pop();
                    } else {
                        stack.push(m);
                    }
                }
            } else {
                for &m in img.letters().iter().rev() {
                    let m = -m;
                    if stack.last() == Some(&-m) {
                        stack.pop();
                    } else {
                        stack.push(m);
                    }
                }
            }
            if stack.len() > cap {
                return Err(Error::WordCapExceeded { cap });
            }
        }
        Word::reduce(self.rank, &stack)
    }

    /// Apply to a conjugacy class, preserving its orientation convention.
    pub fn apply_cyclic(&self, c: &CyclicWord) -> Result<CyclicWord> {
        let w = self.apply(&c.to_word())?;
        Ok(CyclicWord::conjugacy_class(&w, c.oriented()))
    }

    /// Functional composition: the returned map sends `w` to
    /// `self(other(w))`.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut images = Vec::with_capacity(self.rank);
        for w in &other.images {
            images.push(self.apply(w)?);
        }
        let mut inverse_images = Vec::with_capacity(self.rank);
        for w in &self.inverse_images {
            inverse_images.push(other.apply_inverse(w)?);
        }
        Ok(FreeAutomorphism { rank: self.rank, images, inverse_images })
    }

    /// O(1): swap the two image tables.
    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism {
            rank: self.rank,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// Integer power, including negative exponents.
    pub fn pow(&self, e: i32) -> Result<FreeAutomorphism> {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeAutomorphism::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            acc = base.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [(i + 1) as i32])
    }

    /// Does the map fix the word `w` exactly (not just up to conjugacy)?
    pub fn fixes_word(&self, w: &Word) -> Result<bool> {
        Ok(&self.apply(w)? == w)
    }

    /// The induced map on `H_1(F) = Z^rank`, as a matrix whose `i`-th
    /// column is the exponent vector of the image of `x_i`. Functorial:
    /// the matrix of `f.compose(&g)` is `matrix(f) * matrix(g)`.
    pub fn abelianization_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.rank, self.rank);
        for (j, w) in self.images.iter().enumerate() {
            for (i, &e) in w.abelianize().iter().enumerate() {
                m.set_i64(i, j, e);
            }
        }
        m
    }

    /// `2 - trace` of the induced map on `H_1`; for the closed surface
    /// this is the Lefschetz number of a representative diffeomorphism.
    pub fn lefschetz_number(&self) -> i64 {
        let tr = self.abelianization_matrix().trace_i64();
        2 - tr
    }
}

impl fmt::Debug for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAutomorphism(rank {}):", self.rank)?;
        for (i, w) in self.images.iter().enumerate() {
            write!(f, " x{} -> {};", i + 1, w)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, raw: &[i32]) -> Word {
        Word::reduce(rank, raw).unwrap()
    }

    /// The Nielsen map a -> ab, b -> b on F_2.
    fn nielsen() -> FreeAutomorphism {
        FreeAutomorphism::new(
            2,
            vec![w(2, &[1, 2]), w(2, &[2])],
            vec![w(2, &[1, -2]), w(2, &[2])],
        )
        .unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let id = FreeAutomorphism::identity(3);
        let u = w(3, &[1, -2, 3, 3]);
        assert_eq!(id.apply(&u).unwrap(), u);
        assert!(id.is_identity());
    }

    #[test]
    fn constructor_rejects_wrong_inverse() {
        let bad = FreeAutomorphism::new(
            2,
            vec![w(2, &[1, 2]), w(2, &[2])],
            vec![w(2, &[1, 2]), w(2, &[2])],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn apply_substitutes_and_reduces() {
        let f = nielsen();
        // f(ab^-1) = (ab) b^-1 = a
        assert_eq!(f.apply(&w(2, &[1, -2])).unwrap(), w(2, &[1]));
        // f^-1(ab) = (ab^-1) b = a
        assert_eq!(f.apply_inverse(&w(2, &[1, 2])).unwrap(), w(2, &[1]));
    }

    #[test]
    fn compose_is_functional() {
        let f = nielsen();
        let g = f.inverse();
        assert!(f.compose(&g).unwrap().is_identity());
        assert!(g.compose(&f).unwrap().is_identity());
        // (f . f)(a) = f(ab) = ab b = abb
        let ff = f.compose(&f).unwrap();
        assert_eq!(ff.apply(&w(2, &[1])).unwrap(), w(2, &[1, 2, 2]));
        assert_eq!(ff, f.pow(2).unwrap());
        assert_eq!(f.pow(-1).unwrap(), g);
    }

    #[test]
    fn cyclic_application_lands_in_canonical_form() {
        let f = nielsen();
        let c = CyclicWord::conjugacy_class(&w(2, &[2, 1]), true);
        // f(x2 x1) = x2 x1 x2, canonically rotated to start at x1.
        let fc = f.apply_cyclic(&c).unwrap();
        assert_eq!(fc.letters(), &[1, 2, 2]);
    }

    #[test]
    fn abelianization_is_functorial() {
        let f = nielsen();
        let m = f.abelianization_matrix();
        let m2 = f.compose(&f).unwrap().abelianization_matrix();
        assert_eq!(m.mul(&m).unwrap(), m2);
    }
}
