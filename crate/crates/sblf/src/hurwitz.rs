//! Monodromy factorizations and Hurwitz moves.
//!
//! A factorization is an ordered list of Dehn twists, each recorded as
//! its curve together with the twist as a mapping class. The product
//! is taken in travel order (first entry acts first). Elementary
//! Hurwitz moves braid adjacent entries while preserving the total
//! monodromy exactly:
//!
//! * forward at `i`:  `(a, b) -> (b, t)` where `t = b a b^-1` as
//!   functions — the twist about the image curve `b(curve_a)`;
//! * backward at `i`: `(a, b) -> (s, a)` where `s = a^-1 b a` as
//!   functions — the twist about `a^-1(curve_b)`.
//!
//! The two moves at the same position are mutually inverse. Two
//! factorizations are compared up to a bounded number of moves and an
//! optional global conjugation drawn from a small ball of twist words;
//! verdicts are one-sided (`Unknown` when the search is exhausted).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::mcg::{MappingClass, TwistWord};
use crate::surface::{ChainTwistTable, Curve, SurfaceModel};

/// One twist in a factorization: the curve and the class twisting
/// about it. Constructors keep the two in sync; the pair itself is
/// trusted thereafter.
#[derive(Clone, Debug)]
pub struct FactorizationEntry {
    curve: Curve,
    class: MappingClass,
}

impl FactorizationEntry {
    pub fn new(curve: Curve, class: MappingClass) -> Result<FactorizationEntry> {
        if class.model().rank() != curve.class().to_word().rank() {
            return Err(Error::RankMismatch {
                left: class.model().rank(),
                right: curve.class().to_word().rank(),
            });
        }
        Ok(FactorizationEntry { curve, class })
    }

    /// The table twist about a named chain curve.
    pub fn table_twist(table: &ChainTwistTable, twist_name: &str) -> Result<FactorizationEntry> {
        let entry = table.get(twist_name)?;
        let class = crate::mcg::twist(table, twist_name)?;
        Ok(FactorizationEntry { curve: entry.curve().clone(), class })
    }

    /// The twist about `conjugator(curve of base_twist)`.
    pub fn conjugated(
        table: &ChainTwistTable,
        base_twist: &str,
        conjugator: &MappingClass,
    ) -> Result<FactorizationEntry> {
        let (curve, class) = crate::mcg::conjugated_twist(table, base_twist, conjugator)?;
        Ok(FactorizationEntry { curve, class })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn class(&self) -> &MappingClass {
        &self.class
    }
}

/// Direction of an elementary move on an adjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveDirection {
    Forward,
    Backward,
}

/// An elementary move: braid the pair at `index` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    pub index: usize,
    pub direction: MoveDirection,
}

impl Move {
    pub fn inverse(self) -> Move {
        let direction = match self.direction {
            MoveDirection::Forward => MoveDirection::Backward,
            MoveDirection::Backward => MoveDirection::Forward,
        };
        Move { index: self.index, direction }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            MoveDirection::Forward => write!(f, "f{}", self.index),
            MoveDirection::Backward => write!(f, "b{}", self.index),
        }
    }
}

/// An ordered monodromy factorization.
#[derive(Clone, Debug)]
pub struct Factorization {
    model: SurfaceModel,
    entries: Vec<FactorizationEntry>,
}

impl Factorization {
    pub fn new(model: &SurfaceModel, entries: Vec<FactorizationEntry>) -> Result<Factorization> {
        for e in &entries {
            if e.class.model() != model {
                return Err(Error::ModelMismatch(
                    "factorization entry lives on a different surface model".to_string(),
                ));
            }
        }
        Ok(Factorization { model: model.clone(), entries })
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn entries(&self) -> &[FactorizationEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The product of all entries in travel order.
    pub fn total_monodromy(&self) -> Result<MappingClass> {
        let mut acc = MappingClass::identity(&self.model);
        for e in &self.entries {
            acc = acc.then(&e.class)?;
        }
        Ok(acc)
    }

    /// Apply one elementary move; fails if the pair index is out of
    /// range.
    pub fn elementary_move(&self, mv: Move) -> Result<Factorization> {
        let i = mv.index;
        if self.entries.len() < 2 || i + 1 >= self.entries.len() {
            return Err(Error::IndexOutOfRange(format!(
                "move {mv} on a factorization of length {}",
                self.entries.len()
            )));
        }
        let a = &self.entries[i];
        let b = &self.entries[i + 1];
        let mut entries = self.entries.clone();
        match mv.direction {
            MoveDirection::Forward => {
                // (a, b) -> (b, b a b^-1).
                let conj = conjugate_entry(a, &b.class)?;
                entries[i] = b.clone();
                entries[i + 1] = conj;
            }
            MoveDirection::Backward => {
                // (a, b) -> (a^-1 b a, a).
                let conj = conjugate_entry(b, &a.class.inverse())?;
                entries[i + 1] = a.clone();
                entries[i] = conj;
            }
        }
        Ok(Factorization { model: self.model.clone(), entries })
    }

    /// Apply a sequence of moves left to right.
    pub fn apply_moves(&self, moves: &[Move]) -> Result<Factorization> {
        let mut cur = self.clone();
        for &mv in moves {
            cur = cur.elementary_move(mv)?;
        }
        Ok(cur)
    }

    /// Conjugate every entry by `h` (changes the total monodromy to
    /// its `h`-conjugate).
    pub fn global_conjugate(&self, h: &MappingClass) -> Result<Factorization> {
        let entries: Result<Vec<_>> =
            self.entries.iter().map(|e| conjugate_entry(e, h)).collect();
        Ok(Factorization { model: self.model.clone(), entries: entries? })
    }

    /// Canonical hash key: the curves' canonical letters and the
    /// automorphisms' images. Words are deliberately excluded — two
    /// states reached along different move paths are the same
    /// factorization when curves and automorphisms agree.
    fn state_key(&self) -> Vec<i32> {
        const SEP: i32 = i32::MIN;
        const END: i32 = i32::MIN + 1;
        let mut key = Vec::new();
        for e in &self.entries {
            key.extend_from_slice(e.curve.class().letters());
            key.push(SEP);
            let aut = e.class.automorphism();
            for i in 1..=aut.rank() {
                key.extend_from_slice(aut.image(i).letters());
                key.push(SEP);
            }
            key.push(END);
        }
        key
    }
}

/// The twist about `h(curve)`: curve mapped through `h`, class
/// conjugated, travel word `h^-1 · word · h`.
fn conjugate_entry(e: &FactorizationEntry, h: &MappingClass) -> Result<FactorizationEntry> {
    let cls = h.automorphism().apply_cyclic(e.curve.class())?;
    let curve = Curve::from_word(&cls.to_word(), e.curve.declared_simple(), None);
    let class = h.inverse().then(&e.class)?.then(h)?;
    Ok(FactorizationEntry { curve, class })
}

/// Outcome of a bounded Hurwitz-equivalence search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Equivalent,
    Distinct,
    Unknown,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::Equivalent => "equivalent",
            SearchStatus::Distinct => "distinct",
            SearchStatus::Unknown => "unknown",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            SearchStatus::Equivalent => 0,
            SearchStatus::Distinct => 1,
            SearchStatus::Unknown => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Moves taking the first factorization to the (possibly globally
    /// conjugated) second one; empty unless `Equivalent`.
    pub moves: Vec<Move>,
    /// The global conjugator used, when one was needed.
    pub conjugator: Option<MappingClass>,
    /// Move budget that was actually searched.
    pub depth_searched: usize,
}

/// All classes given by reduced twist words of length at most
/// `radius` over the table alphabet (deduplicated, identity first).
fn conjugator_ball(table: &ChainTwistTable, radius: usize) -> Result<Vec<MappingClass>> {
    let names = table.twist_names();
    let mut out: Vec<MappingClass> = vec![MappingClass::identity(table.model())];
    let mut seen: Vec<TwistWord> = vec![Vec::new()];
    let mut frontier: Vec<TwistWord> = vec![Vec::new()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &frontier {
            for name in &names {
                for e in [1, -1] {
                    if let Some((last_n, last_e)) = w.last() {
                        if last_n == name && *last_e == -e {
                            continue;
                        }
                    }
                    let mut nw = w.clone();
                    nw.push((name.to_string(), e));
                    next.push(nw);
                }
            }
        }
        for w in &next {
            if !seen.contains(w) {
                seen.push(w.clone());
                out.push(MappingClass::from_word(table, w)?);
            }
        }
        frontier = next;
    }
    // Distinct words can give equal classes; keep the first of each.
    let mut unique: Vec<MappingClass> = Vec::new();
    for c in out {
        if !unique.iter().any(|u| u.automorphism() == c.automorphism()) {
            unique.push(c);
        }
    }
    Ok(unique)
}

/// Decide Hurwitz equivalence of two factorizations up to `depth`
/// elementary moves and a global conjugation from the radius-`ball`
/// twist-word ball. `Distinct` means distinct *within that relation*:
/// either the lengths differ, or no conjugator in the ball matches the
/// total monodromies (the totals are a move invariant). `Unknown`
/// means the move search was exhausted without meeting.
pub fn hurwitz_equivalent_bounded(
    table: &ChainTwistTable,
    first: &Factorization,
    second: &Factorization,
    depth: usize,
    ball: usize,
) -> Result<SearchOutcome> {
    if first.model() != second.model() {
        return Err(Error::ModelMismatch(
            "factorizations live on different surface models".to_string(),
        ));
    }
    if first.len() != second.len() {
        return Ok(SearchOutcome {
            status: SearchStatus::Distinct,
            moves: Vec::new(),
            conjugator: None,
            depth_searched: 0,
        });
    }

    // Filter the conjugator ball by the move-invariant total monodromy:
    // h qualifies iff h total_2 h^-1 = total_1... equivalently moves of
    // first can only reach global conjugates of second whose total is
    // exactly total_1. Cheap homology comparison first.
    let total_first = first.total_monodromy()?;
    let total_second = second.total_monodromy()?;
    let m1 = total_first.automorphism().abelianization_matrix();
    let mut targets: Vec<(Option<MappingClass>, Factorization)> = Vec::new();
    for h in conjugator_ball(table, ball)? {
        let mh = h.automorphism().abelianization_matrix();
        let m2 = total_second.automorphism().abelianization_matrix();
        if mh.mul(&m2)? != m1.mul(&mh)? {
            continue;
        }
        let conj_total = h
            .automorphism()
            .compose(total_second.automorphism())?
            .compose(&h.automorphism().inverse())?;
        if &conj_total != total_first.automorphism() {
            continue;
        }
        let conj = if h.automorphism().is_identity() {
            None
        } else {
            Some(h.clone())
        };
        targets.push((conj, second.global_conjugate(&h)?));
    }
    if targets.is_empty() {
        return Ok(SearchOutcome {
            status: SearchStatus::Distinct,
            moves: Vec::new(),
            conjugator: None,
            depth_searched: 0,
        });
    }

    // Bidirectional breadth-first search over move sequences. Both
    // moves at each index are generated in a fixed order, so results
    // are deterministic.
    let mut fwd_seen: HashMap<Vec<i32>, Vec<Move>> = HashMap::new();
    let mut bwd_seen: HashMap<Vec<i32>, (usize, Vec<Move>)> = HashMap::new();
    let mut fwd_frontier: Vec<(Factorization, Vec<Move>)> = Vec::new();
    let mut bwd_frontier: Vec<(Factorization, usize, Vec<Move>)> = Vec::new();

    let join = |fwd: &[Move], bwd: &[Move], target: usize, targets: &[(Option<MappingClass>, Factorization)], depth_searched: usize| {
        let mut moves = fwd.to_vec();
        moves.extend(bwd.iter().rev().map(|m| m.inverse()));
        SearchOutcome {
            status: SearchStatus::Equivalent,
            moves,
            conjugator: targets[target].0.clone(),
            depth_searched,
        }
    };

    let start_key = first.state_key();
    fwd_seen.insert(start_key.clone(), Vec::new());
    fwd_frontier.push((first.clone(), Vec::new()));
    for (idx, (_, t)) in targets.iter().enumerate() {
        let key = t.state_key();
        if key == start_key {
            return Ok(join(&[], &[], idx, &targets, 0));
        }
        if let std::collections::hash_map::Entry::Vacant(slot) = bwd_seen.entry(key) {
            slot.insert((idx, Vec::new()));
            bwd_frontier.push((t.clone(), idx, Vec::new()));
        }
    }

    let mut fwd_depth = 0usize;
    let mut bwd_depth = 0usize;
    while fwd_depth + bwd_depth < depth
        && (!fwd_frontier.is_empty() || !bwd_frontier.is_empty())
    {
        let expand_forward = if fwd_frontier.is_empty() {
            false
        } else if bwd_frontier.is_empty() {
            true
        } else {
            fwd_frontier.len() <= bwd_frontier.len()
        };
        if expand_forward {
            fwd_depth += 1;
            let mut next = Vec::new();
            for (fac, trace) in &fwd_frontier {
                for i in 0..fac.len().saturating_sub(1) {
                    for dir in [MoveDirection::Forward, MoveDirection::Backward] {
                        let mv = Move { index: i, direction: dir };
                        let succ = fac.elementary_move(mv)?;
                        let key = succ.state_key();
                        if fwd_seen.contains_key(&key) {
                            continue;
                        }
                        let mut t = trace.clone();
                        t.push(mv);
                        if let Some((idx, btrace)) = bwd_seen.get(&key) {
                            return Ok(join(&t, btrace, *idx, &targets, fwd_depth + bwd_depth));
                        }
                        fwd_seen.insert(key, t.clone());
                        next.push((succ, t));
                    }
                }
            }
            fwd_frontier = next;
        } else {
            bwd_depth += 1;
            let mut next = Vec::new();
            for (fac, tidx, trace) in &bwd_frontier {
                for i in 0..fac.len().saturating_sub(1) {
                    for dir in [MoveDirection::Forward, MoveDirection::Backward] {
                        let mv = Move { index: i, direction: dir };
                        let succ = fac.elementary_move(mv)?;
                        let key = succ.state_key();
                        if bwd_seen.contains_key(&key) {
                            continue;
                        }
                        let mut t = trace.clone();
                        t.push(mv);
                        if let Some(ftrace) = fwd_seen.get(&key) {
                            return Ok(join(ftrace, &t, *tidx, &targets, fwd_depth + bwd_depth));
                        }
                        bwd_seen.insert(key, (*tidx, t.clone()));
                        next.push((succ, *tidx, t));
                    }
                }
            }
            bwd_frontier = next;
        }
    }

    Ok(SearchOutcome {
        status: SearchStatus::Unknown,
        moves: Vec::new(),
        conjugator: None,
        depth_searched: depth,
    })
}
