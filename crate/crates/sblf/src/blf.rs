//! Descriptors of simplified broken Lefschetz fibrations and their
//! invariants.
//!
//! A descriptor records combinatorial fibration data over the sphere:
//! the higher-side fibre genus, the ordered Lefschetz vanishing cycles
//! (as curve expressions over the chain-twist table), at most one
//! round cycle, and two flags (existence of a section; whether the
//! multiplicity-one log transform on the round handle has been
//! normalized away). Validity of the data is checked exactly:
//!
//! * with a round cycle `c`: `c` must be non-separating, the total
//!   Lefschetz monodromy must preserve `c`, and must die after capping
//!   the surface along `c`;
//! * without one: the total monodromy must be trivial as a class of
//!   the closed surface.
//!
//! Conditions that the exact machinery cannot decide are reported as
//! `unknown` rather than guessed.

use serde::{Deserialize, Serialize};

use crate::cap::cap_along_last_handle;
use crate::error::{Error, Result};
use crate::expr::{self, CurveExpr};
use crate::mcg::{self, MappingClass, DEFAULT_CLOSED_BOUND};
use crate::presentation::GroupPresentation;
use crate::surface::{chain_twists, standard_model, ChainTwistTable, Curve};
use crate::verdict::Verdict;
use crate::word::Word;

/// One vanishing cycle, as written in a descriptor file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CycleSpec {
    pub expr: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl CycleSpec {
    pub fn new(expr: impl Into<String>, name: Option<&str>) -> CycleSpec {
        CycleSpec { expr: expr.into(), name: name.map(|s| s.to_string()) }
    }

    fn label(&self, index: usize) -> String {
        self.name.clone().unwrap_or_else(|| format!("cycle {index}"))
    }
}

/// A simplified broken Lefschetz fibration descriptor.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SBLFDescriptor {
    format: u32,
    genus: usize,
    cycles: Vec<CycleSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    round_cycle: Option<String>,
    has_section: bool,
    normalized: bool,
}

/// Outcome of one validity condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unknown,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Unknown => "unknown",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CheckStatus::Pass => 0,
            CheckStatus::Fail => 1,
            CheckStatus::Unknown => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Per-condition validity report; `status` is the worst condition.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub status: CheckStatus,
    pub conditions: Vec<ConditionReport>,
}

impl ValidationReport {
    fn new(conditions: Vec<ConditionReport>) -> ValidationReport {
        let mut status = CheckStatus::Pass;
        for c in &conditions {
            match c.status {
                CheckStatus::Fail => {
                    status = CheckStatus::Fail;
                    break;
                }
                CheckStatus::Unknown => status = CheckStatus::Unknown,
                CheckStatus::Pass => {}
            }
        }
        ValidationReport { status, conditions }
    }
}

/// Counts of separating / non-separating Lefschetz cycles.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CycleClassification {
    pub separating_count: usize,
    pub nonseparating_count: usize,
}

/// Structure of the hyperelliptic involution's fixed-point data on the
/// total space, computable from the cycle classification. Callers are
/// responsible for only asking this of valid hyperelliptic
/// descriptors.
#[derive(Clone, Debug, Serialize)]
pub struct FixedPointDescriptor {
    /// One isolated fixed point for each separating vanishing cycle.
    pub isolated_points: usize,
    /// Whether the two-dimensional part of the fixed locus is closed
    /// and orientable (it is unless a round cycle is present).
    pub orientable_surface_part: bool,
    /// The quotient 4-manifold, as a connected-sum pattern.
    pub quotient_target: String,
    /// Whether the total monodromy preserves the round cycle with its
    /// orientation, when that is computable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub round_curve_preserved_oriented: Option<bool>,
    /// Untwisted versus twisted bundle structure over the quotient is
    /// not decided by this machinery.
    pub bundle_type: String,
}

/// The classical invariants reported by the command-line interface.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvariantsReport {
    pub chi: i64,
    pub h1: Vec<i64>,
    pub b2: i64,
}

/// Full Betti data of the total space.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BettiReport {
    pub chi: i64,
    pub h1: Vec<i64>,
    pub b0: i64,
    pub b1: i64,
    pub b2: i64,
    pub b3: i64,
    pub b4: i64,
}

struct ResolvedCycle {
    label: String,
    curve: Curve,
    twist: Option<MappingClass>,
}

struct Resolved {
    table: ChainTwistTable,
    cycles: Vec<ResolvedCycle>,
    round: Option<Curve>,
}

impl SBLFDescriptor {
    pub fn new(
        genus: usize,
        cycles: Vec<CycleSpec>,
        round_cycle: Option<String>,
        has_section: bool,
        normalized: bool,
    ) -> Result<SBLFDescriptor> {
        if genus < 2 {
            return Err(Error::UnsupportedGenus(genus));
        }
        Ok(SBLFDescriptor { format: 1, genus, cycles, round_cycle, has_section, normalized })
    }

    pub fn from_json(text: &str) -> Result<SBLFDescriptor> {
        let d: SBLFDescriptor = serde_json::from_str(text)?;
        if d.format != 1 {
            return Err(Error::Json(format!("unsupported format {}", d.format)));
        }
        if d.genus < 2 {
            return Err(Error::UnsupportedGenus(d.genus));
        }
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serializes")
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn cycles(&self) -> &[CycleSpec] {
        &self.cycles
    }

    pub fn round_cycle(&self) -> Option<&str> {
        self.round_cycle.as_deref()
    }

    pub fn has_section(&self) -> bool {
        self.has_section
    }

    pub fn normalized(&self) -> bool {
        self.normalized
    }

    /// The chain-twist table for this descriptor's fibre.
    pub fn table(&self) -> Result<ChainTwistTable> {
        chain_twists(&standard_model(self.genus)?)
    }

    fn resolve(&self) -> Result<Resolved> {
        let table = self.table()?;
        let mut cycles = Vec::new();
        for (i, spec) in self.cycles.iter().enumerate() {
            let parsed = expr::parse_curve_expr(&table, &spec.expr)?;
            let curve = expr::eval_curve_expr(&table, &parsed)?;
            let curve = match &spec.name {
                Some(n) => curve.with_name(n.clone()),
                None => curve,
            };
            let twist = match &parsed {
                CurveExpr::Named(_) | CurveExpr::Image(_, _) => {
                    Some(expr::twist_from_curve_expr(&table, &parsed)?.1)
                }
                CurveExpr::Literal(_) => None,
            };
            cycles.push(ResolvedCycle { label: spec.label(i), curve, twist });
        }
        let round = match &self.round_cycle {
            Some(e) => {
                let parsed = expr::parse_curve_expr(&table, e)?;
                Some(expr::eval_curve_expr(&table, &parsed)?)
            }
            None => None,
        };
        Ok(Resolved { table, cycles, round })
    }

    /// The product of the Lefschetz twists in travel order, when every
    /// cycle determines one.
    pub fn total_monodromy(&self) -> Result<Option<MappingClass>> {
        let resolved = self.resolve()?;
        total_of(&resolved)
    }

    /// Check the fibration validity criterion condition by condition.
    pub fn validate(&self) -> Result<ValidationReport> {
        let resolved = self.resolve()?;
        let mut conditions = Vec::new();
        let delta_cls = Curve::from_word(
            &resolved.table.model().boundary_word(),
            true,
            None,
        );

        // Every vanishing cycle must be essential: neither trivial nor
        // boundary-parallel.
        let mut essential = CheckStatus::Pass;
        let mut essential_detail = None;
        for c in &resolved.cycles {
            if c.curve.class().letters().is_empty() {
                essential = CheckStatus::Fail;
                essential_detail = Some(format!("{} is null-homotopic", c.label));
                break;
            }
            if c.curve == delta_cls {
                essential = CheckStatus::Fail;
                essential_detail = Some(format!("{} is boundary-parallel", c.label));
                break;
            }
        }
        conditions.push(ConditionReport {
            name: "cycles-essential".to_string(),
            status: essential,
            detail: essential_detail,
        });

        let unresolved: Vec<String> = resolved
            .cycles
            .iter()
            .filter(|c| c.twist.is_none())
            .map(|c| c.label.clone())
            .collect();
        let total = total_of(&resolved)?;

        match &resolved.round {
            Some(round) => {
                let (status, detail) = match round.is_separating() {
                    Ok(false) => (CheckStatus::Pass, None),
                    Ok(true) => (
                        CheckStatus::Fail,
                        Some("round cycle is null-homologous".to_string()),
                    ),
                    Err(e) => (CheckStatus::Unknown, Some(e.to_string())),
                };
                conditions.push(ConditionReport {
                    name: "round-nonseparating".to_string(),
                    status,
                    detail,
                });

                match &total {
                    Some(t) => {
                        let preserved = t.preserves_curve(round)?;
                        conditions.push(ConditionReport {
                            name: "total-preserves-round".to_string(),
                            status: if preserved { CheckStatus::Pass } else { CheckStatus::Fail },
                            detail: None,
                        });
                        let cap = cap_along_last_handle(resolved.table.model());
                        let standard = Curve::from_word(&cap.capped_curve_word(), true, None);
                        if *round != standard {
                            conditions.push(ConditionReport {
                                name: "total-in-cap-kernel".to_string(),
                                status: CheckStatus::Unknown,
                                detail: Some(
                                    "round cycle is not the standard capped curve a_g"
                                        .to_string(),
                                ),
                            });
                        } else if !preserved {
                            conditions.push(ConditionReport {
                                name: "total-in-cap-kernel".to_string(),
                                status: CheckStatus::Fail,
                                detail: Some(
                                    "total monodromy does not preserve the capped curve"
                                        .to_string(),
                                ),
                            });
                        } else {
                            let in_kernel = t.in_cap_kernel()?;
                            conditions.push(ConditionReport {
                                name: "total-in-cap-kernel".to_string(),
                                status: if in_kernel {
                                    CheckStatus::Pass
                                } else {
                                    CheckStatus::Fail
                                },
                                detail: None,
                            });
                        }
                    }
                    None => {
                        let detail = Some(format!(
                            "no twist is defined for literal cycles: {}",
                            unresolved.join(", ")
                        ));
                        conditions.push(ConditionReport {
                            name: "total-preserves-round".to_string(),
                            status: CheckStatus::Unknown,
                            detail: detail.clone(),
                        });
                        conditions.push(ConditionReport {
                            name: "total-in-cap-kernel".to_string(),
                            status: CheckStatus::Unknown,
                            detail,
                        });
                    }
                }
            }
            None => match &total {
                Some(t) => {
                    let id = MappingClass::identity(resolved.table.model());
                    let verdict = t.equal_closed(&id, DEFAULT_CLOSED_BOUND)?;
                    let (status, detail) = match verdict {
                        Verdict::Equal { .. } => (CheckStatus::Pass, None),
                        Verdict::Distinct => (
                            CheckStatus::Fail,
                            Some("total monodromy is a nontrivial class of the closed fibre"
                                .to_string()),
                        ),
                        Verdict::Unknown { bound } => (
                            CheckStatus::Unknown,
                            Some(format!("conjugacy search exhausted at bound {bound}")),
                        ),
                    };
                    conditions.push(ConditionReport {
                        name: "total-closed-trivial".to_string(),
                        status,
                        detail,
                    });
                }
                None => {
                    conditions.push(ConditionReport {
                        name: "total-closed-trivial".to_string(),
                        status: CheckStatus::Unknown,
                        detail: Some(format!(
                            "no twist is defined for literal cycles: {}",
                            unresolved.join(", ")
                        )),
                    });
                }
            },
        }
        Ok(ValidationReport::new(conditions))
    }

    /// Count separating and non-separating Lefschetz cycles.
    pub fn classify_cycles(&self) -> Result<CycleClassification> {
        let resolved = self.resolve()?;
        let mut separating = 0;
        let mut nonseparating = 0;
        for c in &resolved.cycles {
            if c.curve.is_separating()? {
                separating += 1;
            } else {
                nonseparating += 1;
            }
        }
        Ok(CycleClassification {
            separating_count: separating,
            nonseparating_count: nonseparating,
        })
    }

    /// Whether every cycle (and the round cycle) is symmetric under
    /// the standard hyperelliptic involution of the chain model —
    /// fixed as an unoriented class either in the bounded surface or,
    /// failing that, after capping the boundary (isotopies of fibre
    /// curves may cross the capped disc). This is one-sided: `true`
    /// certifies hyperellipticity, while `false` only means the fixed
    /// involution does not exhibit it.
    pub fn is_hyperelliptic(&self) -> Result<bool> {
        let resolved = self.resolve()?;
        let symmetric = |curve: &Curve| -> Result<bool> {
            if mcg::is_symmetric_curve(&resolved.table, curve)? {
                return Ok(true);
            }
            Ok(mcg::is_symmetric_curve_closed(&resolved.table, curve)?.is_equal())
        };
        for c in &resolved.cycles {
            if !symmetric(&c.curve)? {
                return Ok(false);
            }
        }
        if let Some(round) = &resolved.round {
            if !symmetric(round)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Fixed-point data of the hyperelliptic involution on the total
    /// space (meaningful for valid hyperelliptic descriptors, which the
    /// caller is responsible for checking).
    pub fn fixed_point_descriptor(&self) -> Result<FixedPointDescriptor> {
        let classification = self.classify_cycles()?;
        let resolved = self.resolve()?;
        let s = classification.separating_count;
        let round_preserved = match (&resolved.round, total_of(&resolved)?) {
            (Some(round), Some(total)) => Some(total.preserves_curve_oriented(round)?),
            _ => None,
        };
        let quotient_target = if s == 0 {
            "S".to_string()
        } else {
            format!("S # {} CP2-bar", 2 * s)
        };
        Ok(FixedPointDescriptor {
            isolated_points: s,
            orientable_surface_part: resolved.round.is_none(),
            quotient_target,
            round_curve_preserved_oriented: round_preserved,
            bundle_type: "undetermined".to_string(),
        })
    }

    /// Euler characteristic of the total space over the sphere.
    pub fn euler_characteristic(&self) -> i64 {
        let g = self.genus as i64;
        let n = self.cycles.len() as i64;
        let fibre = 2 - 2 * g;
        match self.round_cycle {
            // Higher-genus side, round handle, lower-genus side.
            Some(_) => fibre + n + (2 - 2 * (g - 1)),
            None => 2 * fibre + n,
        }
    }

    /// Presentation of the fundamental group of the total space,
    /// available when the fibration has a section: the fibre group
    /// modulo the boundary relator, the vanishing cycles, and the
    /// round cycle; a normalized log transform additionally kills the
    /// free generator of the first homology.
    pub fn fundamental_group(&self) -> Result<GroupPresentation> {
        if !self.has_section {
            return Err(Error::NoSection(
                "the fundamental-group presentation requires a section".to_string(),
            ));
        }
        let resolved = self.resolve()?;
        let rank = resolved.table.model().rank();
        let mut relators = vec![resolved.table.model().boundary_word()];
        for c in &resolved.cycles {
            relators.push(c.curve.class().to_word());
        }
        if let Some(round) = &resolved.round {
            relators.push(round.class().to_word());
        }
        let base = GroupPresentation::new(rank, relators.clone())?;
        if !self.normalized {
            return Ok(base);
        }
        let v = base.free_part_generator()?;
        let mut letters = Vec::new();
        for (i, e) in v.iter().enumerate() {
            let e = i64::try_from(e.clone())
                .map_err(|_| Error::Json("homology generator exponent overflows".to_string()))?;
            let letter = (i + 1) as i32;
            for _ in 0..e.unsigned_abs() {
                letters.push(if e < 0 { -letter } else { letter });
            }
        }
        relators.push(Word::reduce(rank, &letters)?);
        GroupPresentation::new(rank, relators)
    }

    /// Invariant factors of the first homology of the total space
    /// (`0` denotes a free factor).
    pub fn first_homology(&self) -> Result<Vec<i64>> {
        let h1 = self.fundamental_group()?.first_homology();
        h1.into_iter()
            .map(|d| {
                i64::try_from(d)
                    .map_err(|_| Error::Json("homology invariant overflows".to_string()))
            })
            .collect()
    }

    pub fn betti_report(&self) -> Result<BettiReport> {
        let h1 = self.first_homology()?;
        let chi = self.euler_characteristic();
        let b1 = h1.iter().filter(|&&d| d == 0).count() as i64;
        let b2 = chi - 2 + 2 * b1;
        Ok(BettiReport { chi, h1, b0: 1, b1, b2, b3: b1, b4: 1 })
    }

    pub fn invariants(&self) -> Result<InvariantsReport> {
        let betti = self.betti_report()?;
        Ok(InvariantsReport { chi: betti.chi, h1: betti.h1, b2: betti.b2 })
    }
}

fn total_of(resolved: &Resolved) -> Result<Option<MappingClass>> {
    let mut acc = MappingClass::identity(resolved.table.model());
    for c in &resolved.cycles {
        match &c.twist {
            Some(t) => acc = acc.then(t)?,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// The standard genus-2 family over the sphere: `s - 2` twists about
/// image curves of `c4`, two about images of `c5`, two about images of
/// `c11`, and the round cycle `c5`. Defined for `s >= 2`.
pub fn build_ws(s: usize, normalized: bool) -> Result<SBLFDescriptor> {
    if s < 2 {
        return Err(Error::IndexOutOfRange(format!(
            "the family starts at s = 2, got {s}"
        )));
    }
    let mut cycles = Vec::new();
    for i in 1..=s.saturating_sub(2) {
        let expr = if i == 1 {
            "(t5^2)(c4)".to_string()
        } else {
            format!("(t5^2 t4^{})(c4)", 1 - i as i64)
        };
        cycles.push(CycleSpec::new(expr, Some(&format!("alpha{i}"))));
    }
    let j = s - 1;
    let beta_expr = if j == 1 {
        "(t4^-1)(c5)".to_string()
    } else {
        format!("(t4^-{j})(c5)")
    };
    cycles.push(CycleSpec::new(beta_expr, Some(&format!("beta{j}"))));
    cycles.push(CycleSpec::new("(t4)(c5)", Some("beta-1")));
    cycles.push(CycleSpec::new("(t2 t3 t4 t5^2)(c11)", Some("gamma1")));
    cycles.push(CycleSpec::new("(t2 t3 t4)(c11)", Some("gamma2")));
    SBLFDescriptor::new(2, cycles, Some("c5".to_string()), true, normalized)
}

/// A directed broken fibration summary: only the counts that determine
/// the coarse invariants are kept.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DirectedBLFDescriptor {
    pub genus: usize,
    /// Total number of Lefschetz cycles.
    pub cycle_count: usize,
    /// How many of them are separating.
    pub separating_count: usize,
    /// Number of round levels the genus steps down through.
    pub round_levels: usize,
}

impl DirectedBLFDescriptor {
    pub fn euler_characteristic(&self) -> i64 {
        let g = self.genus as i64;
        let n = self.cycle_count as i64;
        let s2 = self.round_levels as i64;
        (2 - 2 * g) + n + (2 - 2 * (g - s2))
    }

    /// Quotient pattern of the hyperelliptic involution: one sphere
    /// summand per round level and two blow-ups per separating cycle.
    pub fn quotient_target(&self) -> String {
        format!("# {} S # {} CP2-bar", self.round_levels, 2 * self.separating_count)
    }

    /// Only the single-descent case is decided exactly; deeper round
    /// chains are reported, not guessed.
    pub fn validate(&self) -> ValidationReport {
        let mut conditions = Vec::new();
        if self.separating_count > self.cycle_count {
            conditions.push(ConditionReport {
                name: "counts-consistent".to_string(),
                status: CheckStatus::Fail,
                detail: Some("more separating cycles than cycles".to_string()),
            });
        } else {
            conditions.push(ConditionReport {
                name: "counts-consistent".to_string(),
                status: CheckStatus::Pass,
                detail: None,
            });
        }
        if self.round_levels <= 1 {
            conditions.push(ConditionReport {
                name: "single-round-level".to_string(),
                status: CheckStatus::Pass,
                detail: None,
            });
        } else {
            conditions.push(ConditionReport {
                name: "single-round-level".to_string(),
                status: CheckStatus::Unknown,
                detail: Some(
                    "monodromy conditions across multiple round levels are not decided"
                        .to_string(),
                ),
            });
        }
        ValidationReport::new(conditions)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ws_shape() {
        let w2 = build_ws(2, false).unwrap();
        assert_eq!(w2.cycles().len(), 4);
        assert_eq!(w2.cycles()[0].name.as_deref(), Some("beta1"));
        let w6 = build_ws(6, false).unwrap();
        assert_eq!(w6.cycles().len(), 8);
        assert_eq!(w6.cycles()[0].expr, "(t5^2)(c4)");
        assert_eq!(w6.cycles()[1].expr, "(t5^2 t4^-1)(c4)");
        assert_eq!(w6.cycles()[4].expr, "(t4^-5)(c5)");
        assert_eq!(w6.round_cycle(), Some("c5"));
        assert!(build_ws(1, false).is_err());
    }

    #[test]
    fn ws_validates_and_has_the_expected_invariants() {
        for s in [2usize, 3, 6] {
            let d = build_ws(s, false).unwrap();
            let report = d.validate().unwrap();
            assert_eq!(report.status, CheckStatus::Pass, "W_{s}: {report:?}");
            assert_eq!(d.euler_characteristic(), s as i64);
            assert_eq!(d.first_homology().unwrap(), vec![0], "W_{s}");
            let inv = d.invariants().unwrap();
            assert_eq!(inv.b2, s as i64);
        }
    }

    #[test]
    fn normalization_kills_the_free_factor() {
        let d = build_ws(6, true).unwrap();
        assert_eq!(d.first_homology().unwrap(), Vec::<i64>::new());
        let inv = d.invariants().unwrap();
        assert_eq!(inv.chi, 6);
        assert_eq!(inv.b2, 4);
    }

    #[test]
    fn ws_cycles_are_nonseparating_and_symmetric() {
        let d = build_ws(4, false).unwrap();
        let c = d.classify_cycles().unwrap();
        assert_eq!(c.separating_count, 0);
        assert_eq!(c.nonseparating_count, 6);
        assert!(d.is_hyperelliptic().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let d = build_ws(3, true).unwrap();
        let text = d.to_json();
        let back = SBLFDescriptor::from_json(&text).unwrap();
        assert_eq!(back, d);
        assert!(text.starts_with("{\"format\":1,\"genus\":2,"));
        assert!(SBLFDescriptor::from_json("{\"format\":2,\"genus\":2,\"cycles\":[],\"has_section\":true,\"normalized\":false}").is_err());
    }

    #[test]
    fn literal_cycles_leave_monodromy_conditions_unknown() {
        let d = SBLFDescriptor::new(
            2,
            vec![CycleSpec::new("[1,2,-1,-2]", Some("sep"))],
            Some("c5".to_string()),
            true,
            false,
        )
        .unwrap();
        let report = d.validate().unwrap();
        assert_eq!(report.status, CheckStatus::Unknown);
        let kernel = report
            .conditions
            .iter()
            .find(|c| c.name == "total-in-cap-kernel")
            .unwrap();
        assert_eq!(kernel.status, CheckStatus::Unknown);
        assert!(kernel.detail.as_deref().unwrap().contains("sep"));

        let c = d.classify_cycles().unwrap();
        assert_eq!(c.separating_count, 1);
        let fixed = d.fixed_point_descriptor().unwrap();
        assert_eq!(fixed.isolated_points, 1);
        assert_eq!(fixed.quotient_target, "S # 2 CP2-bar");
    }

    #[test]
    fn boundary_parallel_cycles_are_rejected() {
        let d = SBLFDescriptor::new(
            2,
            vec![CycleSpec::new("[1,2,-1,-2,3,4,-3,-4]", None)],
            Some("c5".to_string()),
            true,
            false,
        )
        .unwrap();
        let report = d.validate().unwrap();
        assert_eq!(report.status, CheckStatus::Fail);
        assert_eq!(report.conditions[0].name, "cycles-essential");
        assert_eq!(report.conditions[0].status, CheckStatus::Fail);
    }

    #[test]
    fn separating_round_cycle_fails() {
        let d = SBLFDescriptor::new(
            2,
            vec![CycleSpec::new("(t4)(c5)", None)],
            Some("[1,2,-1,-2]".to_string()),
            true,
            false,
        )
        .unwrap();
        let report = d.validate().unwrap();
        let round = report
            .conditions
            .iter()
            .find(|c| c.name == "round-nonseparating")
            .unwrap();
        assert_eq!(round.status, CheckStatus::Fail);
    }

    #[test]
    fn no_round_requires_closed_trivial_total() {
        // A single twist is never trivial on the closed surface.
        let d = SBLFDescriptor::new(
            2,
            vec![CycleSpec::new("c2", None)],
            None,
            true,
            false,
        )
        .unwrap();
        let report = d.validate().unwrap();
        assert_eq!(report.status, CheckStatus::Fail);
        let cond = report
            .conditions
            .iter()
            .find(|c| c.name == "total-closed-trivial")
            .unwrap();
        assert_eq!(cond.status, CheckStatus::Fail);
    }

    #[test]
    fn trivial_bundle_invariants() {
        // No cycles, no round cycle: the trivial genus-2 bundle.
        let d = SBLFDescriptor::new(2, Vec::new(), None, true, false).unwrap();
        let report = d.validate().unwrap();
        assert_eq!(report.status, CheckStatus::Pass);
        let betti = d.betti_report().unwrap();
        assert_eq!(betti.chi, -4);
        assert_eq!(betti.b1, 4);
        assert_eq!(betti.b2, 2);
    }

    #[test]
    fn directed_summary() {
        let d = DirectedBLFDescriptor {
            genus: 2,
            cycle_count: 5,
            separating_count: 1,
            round_levels: 3,
        };
        assert_eq!(d.quotient_target(), "# 3 S # 2 CP2-bar");
        let report = d.validate();
        assert_eq!(report.status, CheckStatus::Unknown);
        let single = DirectedBLFDescriptor {
            genus: 2,
            cycle_count: 4,
            separating_count: 0,
            round_levels: 1,
        };
        assert_eq!(single.validate().status, CheckStatus::Pass);
        assert_eq!(single.euler_characteristic(), 2);
    }

    #[test]
    fn no_section_means_no_presentation() {
        let d = SBLFDescriptor::new(2, Vec::new(), None, false, false).unwrap();
        assert!(matches!(d.fundamental_group(), Err(Error::NoSection(_))));
    }
}
