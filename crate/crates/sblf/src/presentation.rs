//! Finite group presentations and their abelian invariants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{smith_normal_form, IntegerMatrix};
use crate::word::{CyclicWord, Word};

/// A finite presentation `< x_1..x_n | r_1, ..., r_k >`. Relators are
/// words in the free group of rank `generator_count`.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if r.rank() != generator_count {
                return Err(Error::RankMismatch { left: generator_count, right: r.rank() });
            }
        }
        Ok(GroupPresentation { generator_count, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The abelianized relation matrix: one column per relator, one row
    /// per generator.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.generator_count, self.relators.len());
        for (j, r) in self.relators.iter().enumerate() {
            for (i, &e) in r.abelianize().iter().enumerate() {
                m.set_i64(i, j, e);
            }
        }
        m
    }

    /// Invariant factors of `H_1 = Z^n / (relator columns)`: torsion
    /// factors greater than one in ascending (divisibility) order,
    /// followed by one `0` per free `Z` summand. The trivial group is
    /// the empty list and `Z^k` is `k` zeros.
    pub fn first_homology(&self) -> Vec<BigInt> {
        let m = self.relation_matrix();
        let snf = smith_normal_form(&m);
        let diag = snf.diagonal();
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        let mut out: Vec<BigInt> =
            diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect();
        for _ in 0..self.generator_count - nonzero {
            out.push(BigInt::zero());
        }
        out
    }

    /// For a group with `H_1` infinite cyclic and torsion-free, a vector
    /// in `Z^generator_count` whose image generates `H_1`. Errors if
    /// `H_1` is not exactly `Z`.
    pub fn free_part_generator(&self) -> Result<Vec<BigInt>> {
        let h1 = self.first_homology();
        if h1.len() != 1 || !h1[0].is_zero() {
            return Err(Error::NormalizationUnavailable(
                h1.iter().map(|d| d.to_string()).collect(),
            ));
        }
        let m = self.relation_matrix();
        let snf = smith_normal_form(&m);
        let diag = snf.diagonal();
        // The cokernel in SNF coordinates is generated by e_i for each
        // free index i; pulling back through u recovers the original
        // basis: x = u_inv * e_i.
        let free_index = (0..self.generator_count)
            .find(|&i| i >= diag.len() || diag[i].is_zero())
            .expect("H_1 = Z guarantees a free index");
        Ok((0..self.generator_count).map(|r| snf.u_inv.get(r, free_index).clone()).collect())
    }

    /// Bounded Tietze simplification: cyclically reduces and dedupes
    /// relators, deletes generators that are forced trivial by a
    /// length-one relator, and deletes a generator together with its
    /// defining relator when the generator occurs exactly once in the
    /// whole presentation. Repeats to a fixpoint. The result presents
    /// the same group.
    pub fn tietze_simplify(&self) -> GroupPresentation {
        let mut gens = self.generator_count;
        let mut rels: Vec<Vec<i32>> =
            self.relators.iter().map(|r| r.letters().to_vec()).collect();

        for _ in 0..100 {
            let mut changed = false;

            // Cyclically reduce, drop trivial relators, dedupe by
            // unoriented conjugacy class.
            let mut seen = std::collections::HashSet::new();
            let mut next: Vec<Vec<i32>> = Vec::new();
            for r in &rels {
                let w = Word::reduce(gens, r).expect("letters stay in range");
                let core = w.cyclic_reduce();
                if core.is_empty() {
                    changed = changed || !w.is_empty() || !r.is_empty();
                    continue;
                }
                let key = CyclicWord::conjugacy_class(&core, false);
                if seen.insert(key) {
                    if core.letters() != r.as_slice() {
                        changed = true;
                    }
                    next.push(core.letters().to_vec());
                } else {
                    changed = true;
                }
            }
            rels = next;

            // A relator `x_g^±1` forces the generator to be trivial:
            // delete the generator everywhere.
            if let Some(pos) = rels.iter().position(|r| r.len() == 1) {
                let g = rels[pos][0].unsigned_abs() as i32;
                rels.remove(pos);
                for r in &mut rels {
                    r.retain(|&l| l.abs() != g);
                }
                rels = renumber(rels, g);
                gens -= 1;
                changed = true;
            } else {
                // A generator occurring exactly once in exactly one
                // relator is defined by that relator; remove both.
                let mut count = vec![0usize; gens + 1];
                for r in &rels {
                    for &l in r {
                        count[l.unsigned_abs() as usize] += 1;
                    }
                }
                if let Some(g) = (1..=gens).find(|&g| count[g] == 1) {
                    let g = g as i32;
                    let pos = rels
                        .iter()
                        .position(|r| r.iter().any(|&l| l.abs() == g))
                        .expect("counted occurrence exists");
                    rels.remove(pos);
                    rels = renumber(rels, g);
                    gens -= 1;
                    changed = true;
                }
            }

            if !changed {
                break;
            }
        }

        let relators = rels
            .into_iter()
            .map(|r| Word::reduce(gens, &r).expect("letters stay in range"))
            .collect();
        GroupPresentation { generator_count: gens, relators }
    }
}

/// Shift letters above a removed generator down by one.
fn renumber(rels: Vec<Vec<i32>>, removed: i32) -> Vec<Vec<i32>> {
    rels.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|l| {
                    if l.abs() > removed {
                        l - l.signum()
                    } else {
                        l
                    }
                })
                .collect()
        })
        .collect()
}

impl std::fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "< ")?;
        for i in 1..=self.generator_count {
            if i > 1 {
                write!(f, ", ")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, " | ")?;
        for (k, r) in self.relators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, " >")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, raw: &[i32]) -> Word {
        Word::reduce(rank, raw).unwrap()
    }

    #[test]
    fn homology_of_surface_group() {
        // Genus-2 closed surface group: one relator [a1,b1][a2,b2].
        let delta = w(4, &[1, 2, -1, -2, 3, 4, -3, -4]);
        let p = GroupPresentation::new(4, vec![delta]).unwrap();
        assert_eq!(p.first_homology(), vec![BigInt::zero(); 4]);
    }

    #[test]
    fn homology_with_torsion() {
        // < a, b | a^2 > abelianizes to Z/2 + Z.
        let p = GroupPresentation::new(2, vec![w(2, &[1, 1])]).unwrap();
        assert_eq!(p.first_homology(), vec![BigInt::from(2), BigInt::zero()]);
    }

    #[test]
    fn homology_of_trivial_group() {
        let p = GroupPresentation::new(1, vec![w(1, &[1])]).unwrap();
        assert_eq!(p.first_homology(), Vec::<BigInt>::new());
    }

    #[test]
    fn free_part_generator_of_infinite_cyclic() {
        // < a, b | b > has H_1 = Z generated by a.
        let p = GroupPresentation::new(2, vec![w(2, &[2])]).unwrap();
        let g = p.free_part_generator().unwrap();
        let abs: Vec<BigInt> = g.iter().map(num_traits::Signed::abs).collect();
        assert_eq!(abs, vec![BigInt::from(1), BigInt::zero()]);

        // Not available when H_1 has torsion or higher rank.
        let q = GroupPresentation::new(2, vec![w(2, &[1, 1])]).unwrap();
        assert!(q.free_part_generator().is_err());
        let r = GroupPresentation::new(2, vec![]).unwrap();
        assert!(r.free_part_generator().is_err());
    }

    #[test]
    fn tietze_removes_trivial_generator() {
        // < a, b | b > simplifies to the free group on one generator.
        let p = GroupPresentation::new(2, vec![w(2, &[2])]).unwrap();
        let s = p.tietze_simplify();
        assert_eq!(s.generator_count(), 1);
        assert!(s.relators().is_empty());
        assert_eq!(s.first_homology(), p.first_homology());
    }

    #[test]
    fn tietze_removes_once_used_generator() {
        // < a, b | a b a > : b occurs once, so b is defined by the
        // relator and the presentation collapses to a free group.
        let p = GroupPresentation::new(2, vec![w(2, &[1, 2, 1])]).unwrap();
        let s = p.tietze_simplify();
        assert_eq!(s.generator_count(), 1);
        assert!(s.relators().is_empty());
        assert_eq!(s.first_homology(), p.first_homology());
    }

    #[test]
    fn tietze_dedupes_conjugate_relators() {
        let r1 = w(2, &[1, 2, -1, -2]);
        let r2 = w(2, &[2, -1, -2, 1]); // a rotation of r1
        let p = GroupPresentation::new(2, vec![r1, r2]).unwrap();
        let s = p.tietze_simplify();
        assert_eq!(s.relators().len(), 1);
        assert_eq!(s.first_homology(), p.first_homology());
    }
}
