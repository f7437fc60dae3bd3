//! Freely reduced words and cyclic words in a finite-rank free group.
//!
//! Letters are nonzero `i32` values: letter `k > 0` is the generator
//! `x_k`, letter `-k` its inverse. A [`Word`] is always stored freely
//! reduced; a [`CyclicWord`] is additionally stored in a canonical
//! rotation so that equality of values is equality of conjugacy classes.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Hard cap on word length, configurable via the `SBLF_WORD_CAP`
/// environment variable (read once per process; default one million
/// letters). Operations that would exceed it fail loudly instead of
/// silently truncating.
pub fn word_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("SBLF_WORD_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(1_000_000)
    })
}

/// Sort key realizing the letter order `x1 < x1^-1 < x2 < x2^-1 < ...`.
#[inline]
fn letter_key(l: i32) -> u64 {
    debug_assert!(l != 0);
    (l.unsigned_abs() as u64) * 2 + u64::from(l < 0)
}

fn check_letters(rank: usize, letters: &[i32]) -> Result<()> {
    for &l in letters {
        if l == 0 || l.unsigned_abs() as usize > rank {
            return Err(Error::InvalidLetter { letter: l, rank });
        }
    }
    Ok(())
}

/// Push a letter onto a reduction stack, cancelling against the top.
#[inline]
fn push_reduced(stack: &mut Vec<i32>, l: i32) {
    if stack.last() == Some(&-l) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

/// A freely reduced word in the free group of the given rank.
///
/// Equality is exact equality of reduced words, i.e. equality in the
/// free group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<i32>,
}

impl Word {
    /// The empty word.
    pub fn identity(rank: usize) -> Word {
        Word { rank, letters: Vec::new() }
    }

    /// The single generator `x_i` (1-based).
    pub fn generator(rank: usize, i: usize) -> Result<Word> {
        let l = i32::try_from(i).map_err(|_| Error::InvalidLetter { letter: i32::MAX, rank })?;
        check_letters(rank, &[l])?;
        Ok(Word { rank, letters: vec![l] })
    }

    /// Freely reduce a raw letter sequence.
    pub fn reduce(rank: usize, raw: &[i32]) -> Result<Word> {
        check_letters(rank, raw)?;
        if raw.len() > word_cap() {
            return Err(Error::WordCapExceeded { cap: word_cap() });
        }
        let mut stack = Vec::with_capacity(raw.len());
        for &l in raw {
            push_reduced(&mut stack, l);
        }
        Ok(Word { rank, letters: stack })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn same_rank(&self, other: &Word) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    /// Concatenate and reduce. Fails if the (already reduced) result
    /// would exceed the word cap.
    pub fn multiply(&self, other: &Word) -> Result<Word> {
        self.same_rank(other)?;
        if self.letters.len() + other.letters.len() > word_cap() {
            return Err(Error::WordCapExceeded { cap: word_cap() });
        }
        let mut stack = self.letters.clone();
        stack.reserve(other.letters.len());
        for &l in &other.letters {
            push_reduced(&mut stack, l);
        }
        Ok(Word { rank: self.rank, letters: stack })
    }

    /// The group inverse (reverse the word and negate each letter).
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|&l| -l).collect();
        Word { rank: self.rank, letters }
    }

    /// Integer power, including negative exponents.
    pub fn pow(&self, e: i32) -> Result<Word> {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity(self.rank);
        for _ in 0..e.unsigned_abs() {
            acc = acc.multiply(&base)?;
        }
        Ok(acc)
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Word) -> Result<Word> {
        self.multiply(other)?.multiply(&self.inverse())
    }

    /// Exponent-sum vector in `Z^rank` (image in the abelianization).
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            let idx = l.unsigned_abs() as usize - 1;
            v[idx] += if l > 0 { 1 } else { -1 };
        }
        v
    }

    /// Split off the maximal conjugating part: returns `(u, c)` with
    /// `self = u * c * u^-1` and `c` cyclically reduced.
    pub fn cyclic_split(&self) -> (Word, Word) {
        let mut lo = 0usize;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == -self.letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        let u = Word { rank: self.rank, letters: self.letters[..lo].to_vec() };
        let c = Word { rank: self.rank, letters: self.letters[lo..hi].to_vec() };
        (u, c)
    }

    /// The cyclically reduced core of the word.
    pub fn cyclic_reduce(&self) -> Word {
        self.cyclic_split().1
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Least rotation of a cyclically reduced letter sequence under the
/// letter order `x1 < x1^-1 < x2 < x2^-1 < ...`.
fn least_rotation(letters: &[i32]) -> Vec<i32> {
    let n = letters.len();
    if n <= 1 {
        return letters.to_vec();
    }
    let key: Vec<u64> = letters.iter().map(|&l| letter_key(l)).collect();
    let mut best = 0usize;
    for cand in 1..n {
        for k in 0..n {
            let a = key[(best + k) % n];
            let b = key[(cand + k) % n];
            if b < a {
                best = cand;
                break;
            }
            if b > a {
                break;
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&letters[best..]);
    out.extend_from_slice(&letters[..best]);
    out
}

fn lex_le(a: &[i32], b: &[i32]) -> bool {
    let ka = a.iter().map(|&l| letter_key(l));
    let kb = b.iter().map(|&l| letter_key(l));
    ka.cmp(kb) != std::cmp::Ordering::Greater
}

/// A conjugacy class of the free group, stored as the canonical
/// (cyclically reduced, lexicographically least) rotation.
///
/// With `oriented == false` the class is additionally identified with
/// the class of the inverse word, which is the right notion for an
/// unoriented curve on a surface.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicWord {
    rank: usize,
    letters: Vec<i32>,
    oriented: bool,
}

impl CyclicWord {
    /// Canonical form of the conjugacy class of `w`.
    pub fn conjugacy_class(w: &Word, oriented: bool) -> CyclicWord {
        let core = w.cyclic_reduce();
        let fwd = least_rotation(core.letters());
        let letters = if oriented {
            fwd
        } else {
            let inv: Vec<i32> = core.letters().iter().rev().map(|&l| -l).collect();
            let bwd = least_rotation(&inv);
            if lex_le(&fwd, &bwd) {
                fwd
            } else {
                bwd
            }
        };
        CyclicWord { rank: w.rank(), letters, oriented }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The canonical representative's letters.
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn oriented(&self) -> bool {
        self.oriented
    }

    /// A linear word representing this class.
    pub fn to_word(&self) -> Word {
        Word { rank: self.rank, letters: self.letters.clone() }
    }

    /// Reinterpret with the other orientation convention.
    pub fn with_orientation(&self, oriented: bool) -> CyclicWord {
        CyclicWord::conjugacy_class(&self.to_word(), oriented)
    }

    /// Exponent-sum vector of the class (well defined on conjugacy
    /// classes; for unoriented classes only up to global sign, and this
    /// returns the vector of the stored canonical representative).
    pub fn abelianize(&self) -> Vec<i64> {
        self.to_word().abelianize()
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.oriented { "oriented" } else { "unoriented" };
        write!(f, "CyclicWord[{tag}]{:?}", self.letters)
    }
}

impl fmt::Display for CyclicWord {
    /// The canonical representative, rendered like [`Word`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}
