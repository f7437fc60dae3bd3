//! The combinatorial surface model and its standard Dehn twists.
//!
//! `Σ_{g,1}` (genus g, one boundary circle) has free fundamental group
//! on `a_1, b_1, ..., a_g, b_g`; the boundary is the product of
//! commutators `δ = [a_1,b_1]···[a_g,b_g]`. Letters are numbered
//! `a_i = 2i-1`, `b_i = 2i`. Mapping classes of the bounded surface act
//! faithfully as automorphisms fixing `δ` exactly, so equality of
//! mapping classes is exact equality of automorphisms.
//!
//! The chain-twist automorphisms are constructed through the
//! hyperelliptic double cover: `Σ_{g,1}` double-covers a disc branched
//! at `2g+1` points, each chain twist (from position 2 on) is the lift
//! of the half-twist swapping two adjacent branch points, and a
//! recursive change of basis rewrites those lifts in the handle
//! generators. The genus-2 table is additionally frozen as literal
//! letter data and unit-tested against the construction. Everything is
//! kept honest by `validation_report`, which over-determines the table:
//! boundary preservation, all braid/commutation relations, symplectic
//! transvection homology, and the involution identities must all hold,
//! and `chain_twists` refuses to return a table that fails any of them.

use std::collections::HashMap;

use crate::aut::FreeAutomorphism;
use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;
use crate::word::{CyclicWord, Word};

/// The fixed polygonal model of a compact surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    genus: usize,
    boundary_components: usize,
}

/// The bounded model `Σ_{g,1}` (one boundary circle).
pub fn standard_model(genus: usize) -> Result<SurfaceModel> {
    if genus < 2 {
        return Err(Error::UnsupportedGenus(genus));
    }
    Ok(SurfaceModel { genus, boundary_components: 1 })
}

impl SurfaceModel {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_components(&self) -> usize {
        self.boundary_components
    }

    /// The same polygon with the boundary capped off (words are then
    /// read modulo the relator `δ`).
    pub fn closed(&self) -> SurfaceModel {
        SurfaceModel { genus: self.genus, boundary_components: 0 }
    }

    /// Rank of the (bounded-model) fundamental group.
    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    /// `δ = [a_1,b_1]···[a_g,b_g]`, freely reduced of length 4g.
    pub fn boundary_word(&self) -> Word {
        let mut letters = Vec::with_capacity(4 * self.genus);
        for i in 0..self.genus as i32 {
            let a = 2 * i + 1;
            let b = 2 * i + 2;
            letters.extend_from_slice(&[a, b, -a, -b]);
        }
        Word::reduce(self.rank(), &letters).expect("commutator product is reduced")
    }

    /// Human name of generator letter `k`: `a1, b1, a2, ...`.
    pub fn generator_name(&self, k: usize) -> String {
        if k % 2 == 1 {
            format!("a{}", k.div_ceil(2))
        } else {
            format!("b{}", k / 2)
        }
    }

    /// The symplectic intersection form on `H_1` in the basis
    /// `[a_1],[b_1],...`: block-diagonal with blocks `[[0,1],[-1,0]]`.
    pub fn intersection_form(&self) -> IntegerMatrix {
        let mut j = IntegerMatrix::zero(self.rank(), self.rank());
        for i in 0..self.genus {
            j.set_i64(2 * i, 2 * i + 1, 1);
            j.set_i64(2 * i + 1, 2 * i, -1);
        }
        j
    }
}

/// The symplectic transvection `x -> x + <x, v> v` as a matrix in the
/// `[a_1],[b_1],...` basis. This is the homology action of a
/// right-handed Dehn twist about a curve with class `v`; it is
/// independent of the orientation chosen for the curve.
pub fn transvection_matrix(model: &SurfaceModel, v: &[i64]) -> IntegerMatrix {
    let n = model.rank();
    let j = model.intersection_form();
    // (Jv)_k = sum_m J[k][m] v[m]
    let jv: Vec<i64> = (0..n)
        .map(|k| {
            (0..n)
                .map(|m| {
                    let e = i64::try_from(j.get(k, m).clone()).expect("J entries are 0/±1");
                    e * v[m]
                })
                .sum()
        })
        .collect();
    let mut t = IntegerMatrix::identity(n);
    for (col, &jvc) in jv.iter().enumerate() {
        for (row, &vr) in v.iter().enumerate() {
            let cur = i64::try_from(t.get(row, col).clone()).expect("small entries");
            t.set_i64(row, col, cur + vr * jvc);
        }
    }
    t
}

/// An unoriented curve on the surface, as a conjugacy class in the
/// bounded-model fundamental group.
#[derive(Clone, Debug)]
pub struct Curve {
    name: Option<String>,
    cls: CyclicWord,
    declared_simple: bool,
}

impl Curve {
    pub fn from_word(w: &Word, declared_simple: bool, name: Option<String>) -> Curve {
        Curve { name, cls: CyclicWord::conjugacy_class(w, false), declared_simple }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn class(&self) -> &CyclicWord {
        &self.cls
    }

    pub fn declared_simple(&self) -> bool {
        self.declared_simple
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Curve {
        self.name = Some(name.into());
        self
    }

    fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("{:?}", self.cls))
    }

    /// Homology class of (one orientation of) the curve. Only
    /// meaningful for embedded curves, hence the simplicity guard.
    pub fn homology_class(&self) -> Result<Vec<i64>> {
        if !self.declared_simple {
            return Err(Error::NotSimple(self.label()));
        }
        Ok(self.cls.abelianize())
    }

    /// A simple closed curve separates iff it is null-homologous.
    pub fn is_separating(&self) -> Result<bool> {
        Ok(self.homology_class()?.iter().all(|&e| e == 0))
    }

    /// The stored representative as an oriented class (for orientation-
    /// sensitive comparisons).
    pub fn oriented_class(&self) -> CyclicWord {
        CyclicWord::conjugacy_class(&self.cls.to_word(), true)
    }
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.cls == other.cls
    }
}
impl Eq for Curve {}

/// One row of the chain-twist table.
#[derive(Clone, Debug)]
pub struct TableEntry {
    name: String,
    /// Position along the chain (t11 and t12 share position 1).
    chain_position: usize,
    curve: Curve,
    aut: FreeAutomorphism,
}

impl TableEntry {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn automorphism(&self) -> &FreeAutomorphism {
        &self.aut
    }
}

/// Outcome of one table self-validation check.
#[derive(Clone, Debug)]
pub struct TableCheck {
    pub name: String,
    pub pass: bool,
}

// ---------------------------------------------------------------------------
// Frozen genus-2 twist data (right-handed twists). Images are listed
// for a1, b1, a2, b2 in order. The general double-cover construction
// below reproduces these exact words at genus 2 (unit-tested).
// ---------------------------------------------------------------------------

type RawImages = [&'static [i32]; 4];

/// t11: twist about c11 (the a1 curve next to the boundary).
const T11_IMG: RawImages = [&[1], &[2, -1], &[3], &[4]];
const T11_INV: RawImages = [&[1], &[2, 1], &[3], &[4]];
/// t2: twist about c2 (the b1 curve).
const T2_IMG: RawImages = [&[1, 2], &[2], &[3], &[4]];
const T2_INV: RawImages = [&[1, -2], &[2], &[3], &[4]];
/// t3: twist about c3 (the connector curve between the handles).
const T3_IMG: RawImages =
    [&[1, 3, 1, -3, -1], &[1, 3, -1, -3, 2, -3, -1], &[1, 3, -1], &[4, -3, -1]];
const T3_INV: RawImages =
    [&[-3, 1, 3], &[-3, -1, 3, 1, 2, 1, 3], &[-3, -1, 3, 1, 3], &[4, 1, 3]];
/// t4: twist about c4 (the b2 curve).
const T4_IMG: RawImages = [&[1], &[2], &[3, 4], &[4]];
const T4_INV: RawImages = [&[1], &[2], &[3, -4], &[4]];
/// t5: twist about c5 (the a2 curve, the standard round curve).
const T5_IMG: RawImages = [&[1], &[2], &[3], &[4, -3]];
const T5_INV: RawImages = [&[1], &[2], &[3], &[4, 3]];

/// Curve words for the genus-2 chain (c12 is computed from c11 via the
/// involution during table construction).
const C11_WORD: &[i32] = &[1];
const C2_WORD: &[i32] = &[2];
const C3_WORD: &[i32] = &[1, 3];
const C4_WORD: &[i32] = &[4];
const C5_WORD: &[i32] = &[3];

// ---------------------------------------------------------------------------
// General chain twists through the hyperelliptic double cover.
//
// `Σ_{g,1}` is the double cover of a disc branched at `2g+1` marked
// points. Joining the basepoint to each marked point gives loops
// `x_1..x_{2g+1}` downstairs whose even subwords `u_j = x_j x_1^{-1}`
// (j = 2..2g+1) lift to free generators of `π_1` upstairs. The chain
// twist at position k >= 2 is the lift of the half-twist of the disc
// swapping marked points k-1 and k, so its automorphism is
// `Φ ∘ L_{k-1} ∘ A`, where `A` rewrites the handle generators in the
// cover basis, `L_m` is the lifted half-twist, and `Φ = A^{-1}`. The
// position-1 twist (about the `a_1` curve next to the boundary) is one
// of the two lifts of the loop around the first marked point and is
// given directly. The involution itself is the lift of the full twist
// of the disc about all `2g+1` points: `(t_2 ··· t_{2g+1})^{2g+1}`.
// ---------------------------------------------------------------------------

/// Freely reduced concatenation of raw letter words.
fn cat(parts: &[&[i32]]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for part in parts {
        for &l in *part {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
    }
    out
}

fn inv(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

/// Re-index every letter up by `by` handles' worth of generators.
fn shift(w: &[i32], by: i32) -> Vec<i32> {
    w.iter().map(|&l| if l > 0 { l + by } else { l - by }).collect()
}

/// Handle generators `a_1, b_1, ..., a_g, b_g` written in the cover
/// basis (cover letter j encodes `u_{j+1}`). Recursive over the genus:
/// handle 1 is cut off along the arc chain `M = u_3 u_4^{-1} ··· u_{2g+1}`,
/// and the remaining handles form the same picture one size down over
/// the primed generators `u'_j = u_{j+2} u_3^{-1}`.
fn handles_in_cover_basis(g: usize) -> Vec<Vec<i32>> {
    if g == 1 {
        return vec![vec![-1, 2], vec![1]];
    }
    let m: Vec<i32> =
        (2..=2 * g as i32).map(|j| if j % 2 == 0 { j } else { -j }).collect();
    let m_inv = inv(&m);
    let mut out = Vec::with_capacity(2 * g);
    out.push(cat(&[&[1], &m_inv])); // a1 = u2 M^-1
    out.push(cat(&[&m, &[-1], &m_inv])); // b1 = M u2^-1 M^-1
    let unprime = |w: &[i32]| -> Vec<i32> {
        // primed letter j encodes u'_{j+1} = u_{j+3} u_3^{-1}
        let mut raw = Vec::with_capacity(2 * w.len());
        for &l in w {
            let j = l.abs();
            if l > 0 {
                raw.extend_from_slice(&[j + 2, -2]);
            } else {
                raw.extend_from_slice(&[2, -(j + 2)]);
            }
        }
        cat(&[&raw])
    };
    for w in handles_in_cover_basis(g - 1) {
        out.push(unprime(&w));
    }
    out
}

/// Cover generators `u_2..u_{2g+1}` written in the handle basis; the
/// inverse substitution of [`handles_in_cover_basis`].
fn cover_basis_in_handles(g: usize) -> Vec<Vec<i32>> {
    if g == 1 {
        return vec![vec![2], vec![2, 1]];
    }
    let sub: Vec<Vec<i32>> =
        cover_basis_in_handles(g - 1).iter().map(|w| shift(w, 2)).collect();
    // E' = u'_2^{-1} u'_3 ··· u'_{2g-1} in handle letters
    let mut e = Vec::new();
    for (j, w) in sub.iter().enumerate() {
        if j % 2 == 0 {
            e = cat(&[&e, &inv(w)]);
        } else {
            e = cat(&[&e, w]);
        }
    }
    // M = b1^-1 a1^-1 telescopes to u_3 E', so u_3 = E'^-1 M.
    let u3 = cat(&[&inv(&e), &[-2, -1]]);
    let mut out = Vec::with_capacity(2 * g);
    out.push(vec![1, -2, -1]); // u2 = a1 b1^-1 a1^-1
    out.push(u3.clone());
    for w in &sub {
        out.push(cat(&[w, &u3])); // u_{j+2} = u'_j u_3
    }
    out
}

/// The change of basis between the handle generators and the cover
/// generators, as a verified automorphism of `F_{2g}` (images: handle
/// letters in the cover basis; inverse images: the other direction).
fn branched_cover_basis(model: &SurfaceModel) -> Result<FreeAutomorphism> {
    let g = model.genus();
    build_aut(model.rank(), &handles_in_cover_basis(g), &cover_basis_in_handles(g))
}

/// Lift of the disc half-twist swapping marked points `k` and `k+1`
/// (`1 <= k <= 2g`), in cover letters.
fn half_twist_lift(rank: usize, k: usize) -> Result<FreeAutomorphism> {
    let mut images: Vec<Vec<i32>> = (1..=rank as i32).map(|i| vec![i]).collect();
    let mut inverses = images.clone();
    let k = k as i32;
    if k == 1 {
        for j in 2..=rank as i32 {
            images[j as usize - 1] = vec![j, 1];
            inverses[j as usize - 1] = vec![j, -1];
        }
    } else {
        images[k as usize - 2] = vec![k - 1, -k, k - 1];
        images[k as usize - 1] = vec![k - 1];
        inverses[k as usize - 2] = vec![k];
        inverses[k as usize - 1] = vec![k, -(k - 1), k];
    }
    build_aut(rank, &images, &inverses)
}

/// Curve word and twist automorphism for chain position `k` (1-based).
fn chain_entry(
    model: &SurfaceModel,
    basis: &FreeAutomorphism,
    k: usize,
) -> Result<(Vec<i32>, FreeAutomorphism)> {
    let rank = model.rank();
    if k == 1 {
        let mut images: Vec<Vec<i32>> = (1..=rank as i32).map(|i| vec![i]).collect();
        let mut inverses = images.clone();
        images[1] = vec![2, -1];
        inverses[1] = vec![2, 1];
        return Ok((vec![1], build_aut(rank, &images, &inverses)?));
    }
    let lift = half_twist_lift(rank, k - 1)?;
    let aut = basis.inverse().compose(&lift)?.compose(basis)?;
    // The twist curve is the lift of the arc between marked points k-1
    // and k: the class of u_{k-1} u_k^{-1} (with u_1 = 1).
    let in_cover = if k == 2 {
        vec![-1]
    } else {
        vec![k as i32 - 2, -(k as i32 - 1)]
    };
    let curve = basis.apply_inverse(&Word::reduce(rank, &in_cover)?)?;
    Ok((curve.letters().to_vec(), aut))
}

fn build_aut(rank: usize, images: &[Vec<i32>], inverses: &[Vec<i32>]) -> Result<FreeAutomorphism> {
    let imgs: Result<Vec<Word>> = images.iter().map(|v| Word::reduce(rank, v)).collect();
    let invs: Result<Vec<Word>> = inverses.iter().map(|v| Word::reduce(rank, v)).collect();
    FreeAutomorphism::new(rank, imgs?, invs?)
}

fn raw4(data: RawImages) -> Vec<Vec<i32>> {
    data.iter().map(|s| s.to_vec()).collect()
}

/// The chain-twist table for a surface model.
pub struct ChainTwistTable {
    model: SurfaceModel,
    entries: Vec<TableEntry>,
    by_twist: HashMap<String, usize>,
    by_curve: HashMap<String, usize>,
    involution: FreeAutomorphism,
}

/// Build and self-validate the chain-twist table. At genus 2 the table
/// carries the doubled boundary-adjacent curve (names t11, t12, t2..t5
/// with curves c11, c12, c2..c5); at higher genus the plain chain
/// t1..t(2g+1) with curves c1..c(2g+1).
pub fn chain_twists(model: &SurfaceModel) -> Result<ChainTwistTable> {
    let table = ChainTwistTable::build(model)?;
    table.validate()?;
    Ok(table)
}

impl ChainTwistTable {
    fn build(model: &SurfaceModel) -> Result<ChainTwistTable> {
        let g = model.genus();
        if g < 2 {
            return Err(Error::UnsupportedGenus(g));
        }
        let rank = model.rank();
        let mut entries: Vec<TableEntry> = Vec::new();

        let push = |entries: &mut Vec<TableEntry>,
                    name: &str,
                    pos: usize,
                    curve_name: &str,
                    curve_word: &[i32],
                    aut: FreeAutomorphism|
         -> Result<()> {
            let w = Word::reduce(rank, curve_word)?;
            let curve = Curve::from_word(&w, true, Some(curve_name.to_string()));
            entries.push(TableEntry { name: name.to_string(), chain_position: pos, curve, aut });
            Ok(())
        };

        if g == 2 {
            push(
                &mut entries,
                "t11",
                1,
                "c11",
                C11_WORD,
                build_aut(rank, &raw4(T11_IMG), &raw4(T11_INV))?,
            )?;
            // t12 is pinned by the involution swap relation; see below.
            push(&mut entries, "t2", 2, "c2", C2_WORD, build_aut(rank, &raw4(T2_IMG), &raw4(T2_INV))?)?;
            push(&mut entries, "t3", 3, "c3", C3_WORD, build_aut(rank, &raw4(T3_IMG), &raw4(T3_INV))?)?;
            push(&mut entries, "t4", 4, "c4", C4_WORD, build_aut(rank, &raw4(T4_IMG), &raw4(T4_INV))?)?;
            push(&mut entries, "t5", 5, "c5", C5_WORD, build_aut(rank, &raw4(T5_IMG), &raw4(T5_INV))?)?;
        } else {
            let basis = branched_cover_basis(model)?;
            for k in 1..=2 * g + 1 {
                let (curve, aut) = chain_entry(model, &basis, k)?;
                push(&mut entries, &format!("t{k}"), k, &format!("c{k}"), &curve, aut)?;
            }
        }

        // The hyperelliptic involution is the lift of the full twist of
        // the disc about its 2g+1 marked points: as a travel word (the
        // leftmost factor acts first), (t2 ··· t_{2g+1})^{2g+1}. At
        // genus 2 this is the familiar (t2 t3 t4 t5)^5.
        let involution = {
            let mut acc = FreeAutomorphism::identity(rank);
            let lookup = |name: &str, entries: &[TableEntry]| -> FreeAutomorphism {
                entries.iter().find(|e| e.name == name).expect("chain entry").aut.clone()
            };
            let block: Vec<String> = (2..=2 * g + 1).rev().map(|k| format!("t{k}")).collect();
            for _ in 0..2 * g + 1 {
                for n in &block {
                    acc = lookup(n, &entries).compose(&acc)?;
                }
            }
            acc
        };

        if g == 2 {
            // t12 := iota^-1 . t11 . iota — the unique table element
            // making the swap relation  iota t11 = t12 iota  hold as a
            // travel-word identity. Its curve is the iota^-1 image of
            // c11 (the same unoriented class as the iota image).
            let t11 = entries[0].aut.clone();
            let iota_inv = involution.inverse();
            let t12 = iota_inv.compose(&t11)?.compose(&involution)?;
            let c12_cls = iota_inv.apply_cyclic(entries[0].curve.class())?;
            let curve = Curve {
                name: Some("c12".to_string()),
                cls: c12_cls,
                declared_simple: true,
            };
            entries.insert(
                1,
                TableEntry { name: "t12".to_string(), chain_position: 1, curve, aut: t12 },
            );
        }

        let mut by_twist = HashMap::new();
        let mut by_curve = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_twist.insert(e.name.clone(), i);
            by_curve.insert(e.curve.name().expect("table curves are named").to_string(), i);
        }
        Ok(ChainTwistTable { model: model.clone(), entries, by_twist, by_curve, involution })
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn twist_names(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn curve_names(&self) -> Vec<&str> {
        self.entries.iter().filter_map(|e| e.curve.name()).collect()
    }

    pub fn get(&self, twist_name: &str) -> Result<&TableEntry> {
        self.by_twist
            .get(twist_name)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownName(twist_name.to_string()))
    }

    pub fn curve(&self, curve_name: &str) -> Result<&Curve> {
        Ok(&self.entry_for_curve(curve_name)?.curve)
    }

    /// The table row whose twist is about the named curve.
    pub fn entry_for_curve(&self, curve_name: &str) -> Result<&TableEntry> {
        self.by_curve
            .get(curve_name)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| Error::UnknownCurve(curve_name.to_string()))
    }

    /// Travel-order evaluation of a signed twist word over the table
    /// alphabet: in `[(n1,e1),(n2,e2),...]` the leftmost factor acts
    /// first, so the result is the function `...(n2^e2)((n1^e1)(w))`.
    pub fn eval_travel(&self, word: &[(String, i32)]) -> Result<FreeAutomorphism> {
        let mut acc = FreeAutomorphism::identity(self.model.rank());
        for (name, e) in word {
            let aut = &self.get(name)?.aut;
            acc = aut.pow(*e)?.compose(&acc)?;
        }
        Ok(acc)
    }

    /// The hyperelliptic involution automorphism (cached at build).
    pub fn involution_automorphism(&self) -> &FreeAutomorphism {
        &self.involution
    }

    /// The involution as a twist word over the table alphabet (travel
    /// order): `2g+1` repetitions of the block `t_{2g+1} ··· t_2`.
    pub fn involution_word(&self) -> Vec<(String, i32)> {
        let g = self.model.genus();
        let block: Vec<(String, i32)> =
            (2..=2 * g + 1).rev().map(|k| (format!("t{k}"), 1)).collect();
        (0..2 * g + 1).flat_map(|_| block.iter().cloned()).collect()
    }

    /// Run every self-validation check and report each outcome. The
    /// checks over-determine the frozen data: any wrong letter, wrong
    /// handedness or wrong composition convention fails at least one.
    pub fn validation_report(&self) -> Vec<TableCheck> {
        let mut checks = Vec::new();
        let mut record = |name: String, pass: bool| checks.push(TableCheck { name, pass });
        let delta = self.model.boundary_word();
        let rank = self.model.rank();

        for e in &self.entries {
            let pass = e.aut.fixes_word(&delta).unwrap_or(false);
            record(format!("boundary-fixed-{}", e.name), pass);
        }

        for (i, a) in self.entries.iter().enumerate() {
            for b in self.entries.iter().skip(i + 1) {
                let diff = a.chain_position.abs_diff(b.chain_position);
                let lhs_rhs = |l: &[&TableEntry], r: &[&TableEntry]| -> bool {
                    let ev = |seq: &[&TableEntry]| {
                        let mut acc = FreeAutomorphism::identity(rank);
                        for e in seq {
                            acc = e.aut.compose(&acc).expect("rank matches");
                        }
                        acc
                    };
                    ev(l) == ev(r)
                };
                if diff == 1 {
                    let pass = lhs_rhs(&[a, b, a], &[b, a, b]);
                    record(format!("braid-{}-{}", a.name, b.name), pass);
                } else {
                    let pass = lhs_rhs(&[a, b], &[b, a]);
                    record(format!("commute-{}-{}", a.name, b.name), pass);
                }
            }
        }

        let j = self.model.intersection_form();
        for e in &self.entries {
            let m = e.aut.abelianization_matrix();
            match e.curve.homology_class() {
                Ok(v) => {
                    let expected = transvection_matrix(&self.model, &v);
                    record(format!("transvection-{}", e.name), m == expected);
                }
                Err(_) => record(format!("transvection-{}", e.name), false),
            }
            // Mᵀ J M = J: the twist preserves the intersection form.
            let mt = {
                let mut t = IntegerMatrix::zero(rank, rank);
                for r in 0..rank {
                    for c in 0..rank {
                        t.set(r, c, m.get(c, r).clone());
                    }
                }
                t
            };
            let preserved = mt
                .mul(&j)
                .and_then(|x| x.mul(&m))
                .map(|x| x == j)
                .unwrap_or(false);
            record(format!("symplectic-{}", e.name), preserved);
        }

        // Involution identities.
        let iota = &self.involution;
        let minus_identity = {
            let mut m = IntegerMatrix::zero(rank, rank);
            for i in 0..rank {
                m.set_i64(i, i, -1);
            }
            m
        };
        record(
            "involution-homology".to_string(),
            iota.abelianization_matrix() == minus_identity,
        );
        record(
            "involution-lefschetz".to_string(),
            iota.lefschetz_number() == 2 * self.model.genus() as i64 + 2,
        );

        if self.model.genus() == 2 {
            let ev = |names: &[&str]| -> FreeAutomorphism {
                let word: Vec<(String, i32)> =
                    names.iter().map(|n| (n.to_string(), 1)).collect();
                self.eval_travel(&word).expect("table names")
            };
            // The two expressions for the involution agree.
            let palindrome =
                ev(&["t11", "t2", "t3", "t4", "t5", "t5", "t4", "t3", "t2", "t11"]);
            record("involution-words".to_string(), &palindrome == iota);

            // Swap relation (travel order): iota t11 = t12 iota.
            let t11 = &self.get("t11").expect("t11").aut;
            let t12 = &self.get("t12").expect("t12").aut;
            let lhs = t11.compose(iota).expect("rank");
            let rhs = iota.compose(t12).expect("rank");
            record("involution-swap-t11-t12".to_string(), lhs == rhs);
        }

        // Every chain twist from position 2 on is symmetric, so it
        // commutes with the involution. (The position-1 twists do not:
        // conjugating by iota exchanges the two lifts of the first
        // marked-point loop.)
        for e in self.entries.iter().filter(|e| e.chain_position >= 2) {
            let t = &e.aut;
            let pass = t.compose(iota).expect("rank") == iota.compose(t).expect("rank");
            record(format!("involution-commute-{}", e.name), pass);
        }

        checks
    }

    /// Abort with the first failed check, if any.
    pub fn validate(&self) -> Result<()> {
        for check in self.validation_report() {
            if !check.pass {
                return Err(Error::TableValidation(check.name));
            }
        }
        Ok(())
    }

    /// A copy with one automorphism swapped out, *without* running the
    /// validation suite. Exists so that negative controls can observe
    /// the suite catching a corrupted table; never use the result for
    /// real computation.
    pub fn with_replaced_automorphism(
        &self,
        twist_name: &str,
        aut: FreeAutomorphism,
    ) -> Result<ChainTwistTable> {
        let idx = *self
            .by_twist
            .get(twist_name)
            .ok_or_else(|| Error::UnknownName(twist_name.to_string()))?;
        if aut.rank() != self.model.rank() {
            return Err(Error::RankMismatch { left: self.model.rank(), right: aut.rank() });
        }
        let mut entries = self.entries.clone();
        entries[idx].aut = aut;
        Ok(ChainTwistTable {
            model: self.model.clone(),
            entries,
            by_twist: self.by_twist.clone(),
            by_curve: self.by_curve.clone(),
            involution: self.involution.clone(),
        })
    }
}

/// The twist about the separating curve `d_k = [a_1,b_1]···[a_k,b_k]`
/// (the boundary of the first k handles), `1 <= k < g`. Generators of
/// the enclosed handles are conjugated by `d_k`; the rest are fixed.
pub fn separating_curve_twist(
    model: &SurfaceModel,
    handles: usize,
) -> Result<(Curve, FreeAutomorphism)> {
    let g = model.genus();
    if handles == 0 || handles >= g {
        return Err(Error::IndexOutOfRange(format!(
            "separating curve d_{handles} needs 1 <= {handles} < genus {g}"
        )));
    }
    let rank = model.rank();
    let mut letters = Vec::new();
    for i in 0..handles as i32 {
        let a = 2 * i + 1;
        let b = 2 * i + 2;
        letters.extend_from_slice(&[a, b, -a, -b]);
    }
    let d = Word::reduce(rank, &letters)?;
    let mut images = Vec::with_capacity(rank);
    let mut inverses = Vec::with_capacity(rank);
    for i in 1..=rank {
        let x = Word::generator(rank, i)?;
        if i <= 2 * handles {
            images.push(d.conjugate(&x)?);
            inverses.push(d.inverse().conjugate(&x)?);
        } else {
            images.push(x.clone());
            inverses.push(x);
        }
    }
    let aut = FreeAutomorphism::new(rank, images, inverses)?;
    let curve = Curve::from_word(&d, true, Some(format!("d{handles}")));
    Ok((curve, aut))
}
