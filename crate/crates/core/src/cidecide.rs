//! Complete-intersection decisions for commuting varieties of `U_n` and
//! `B_n`, and the membership witness showing that `U_6` fails.
//!
//! A presentation by `r` generators (plus `u` unit relations for `B_n`) is
//! a complete intersection exactly when the ideal has codimension `r + u`;
//! codimension never exceeds `r + u`. For `U_n` with `n ≥ 6` the witness
//! exhibits 7 generators inside a 6-generated ideal, which caps the
//! codimension of that subsequence at 6 and rules out regularity.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::groebner::{buchberger, GroebnerStats, Limits};
use crate::groupmat::{commutator_word_in, entry_name, group_ring, CommutatorSystem, GroupKind, Role};
use crate::polyring::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "CI")]
    Ci,
    #[serde(rename = "NotCI")]
    NotCi,
    Incomplete,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Ci => "CI",
            Verdict::NotCi => "NotCI",
            Verdict::Incomplete => "Incomplete",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

impl Verdict {
    /// True for verdicts that settle the question.
    pub fn is_definite(self) -> bool {
        matches!(self, Verdict::Ci | Verdict::NotCi)
    }
}

/// Whether a row reproduces a published classification entry or was
/// obtained only by this tool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Literature,
    ToolDerived,
}

impl Source {
    pub fn of(kind: GroupKind, n: usize, genus: usize) -> Self {
        let known = genus == 1
            && match kind {
                GroupKind::Unipotent => n <= 6,
                GroupKind::Borel => n <= 3,
            };
        if known { Source::Literature } else { Source::ToolDerived }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CIReport {
    pub group: GroupKind,
    pub n: usize,
    pub genus: usize,
    pub field: FieldSpec,
    pub order: String,
    pub nvars: usize,
    pub generators: usize,
    pub unit_relations: usize,
    pub dim: Option<usize>,
    pub codim: Option<usize>,
    pub verdict: Verdict,
    pub exterior_factors: usize,
    /// Homology splitting asserted for unipotent CI verdicts.
    pub structure: Option<String>,
    pub source: Source,
    pub witness: Option<WitnessReport>,
    pub stats: Option<GroebnerStats>,
    pub reason: Option<String>,
    pub wall_seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCheck {
    pub position: (usize, usize),
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipCheck {
    pub position: (usize, usize),
    pub in_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub n: usize,
    pub field: FieldSpec,
    pub order: String,
    pub substitution: Vec<String>,
    pub surviving: Vec<PatternCheck>,
    pub pattern: Vec<PatternCheck>,
    pub bounding_ideal: Vec<String>,
    pub memberships: Vec<MembershipCheck>,
    /// Upper bound on the codimension of the ideal of the checked entries.
    pub codim_bound: usize,
    pub subsequence_length: usize,
    pub conclusion: Verdict,
    pub failure: Option<String>,
    pub stats: Option<GroebnerStats>,
    pub wall_seconds: f64,
}

/// Positions whose entries are checked by the witness.
pub const WITNESS_POSITIONS: [(usize, usize); 7] = [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (4, 6)];

const WITNESS_ZEROED: [(usize, usize); 2] = [(2, 3), (4, 5)];

fn witness_expected(position: (usize, usize)) -> Option<&'static str> {
    match position {
        (1, 4) => Some("x_1_1_2*y_1_2_4 + x_1_1_3*y_1_3_4 - x_1_3_4*y_1_1_3 - x_1_2_4*y_1_1_2"),
        (3, 6) => Some("x_1_3_4*y_1_4_6 + x_1_3_5*y_1_5_6 - x_1_5_6*y_1_3_5 - x_1_4_6*y_1_3_4"),
        _ => None,
    }
}

pub fn order_label(seed: u64) -> String {
    if seed == 0 { "grevlex".into() } else { format!("grevlex:seed={seed}") }
}

fn system<F: Field>(field: F, kind: GroupKind, n: usize, genus: usize, seed: u64) -> Result<CommutatorSystem<F>> {
    if n < 2 {
        return Err(Error::Config(format!("n must be at least 2, got {n}")));
    }
    if genus < 1 {
        return Err(Error::Config("genus must be at least 1".into()));
    }
    let ring = group_ring(field, kind, n, genus)?.reordered(seed);
    commutator_word_in(&ring, kind, n, genus)
}

/// Gröbner-based decision. Unipotent groups with `n ≥ 6` at genus 1 are
/// settled by the membership witness instead, which needs only the
/// 6-generated bounding ideal.
pub fn decide_ci<F: Field>(field: F, kind: GroupKind, n: usize, genus: usize, seed: u64, limits: &Limits) -> Result<CIReport> {
    let start = Instant::now();
    let sys = system(field.clone(), kind, n, genus, seed)?;
    let r = sys.generators.len();
    let u = sys.unit_relations.len();
    let mut report = CIReport {
        group: kind,
        n,
        genus,
        field: field.spec(),
        order: order_label(seed),
        nvars: sys.ring.nvars(),
        generators: r,
        unit_relations: u,
        dim: None,
        codim: None,
        verdict: Verdict::Incomplete,
        exterior_factors: kind.exterior_factor_count(n),
        structure: None,
        source: Source::of(kind, n, genus),
        witness: None,
        stats: None,
        reason: None,
        wall_seconds: 0.0,
    };

    if kind == GroupKind::Unipotent && n >= 6 && genus == 1 {
        let w = witness_for(&sys, seed, limits)?;
        report.verdict = match w.conclusion {
            Verdict::NotCi => Verdict::NotCi,
            _ => Verdict::Inconclusive,
        };
        report.reason = w.failure.clone();
        report.stats = w.stats;
        report.witness = Some(w);
        report.wall_seconds = start.elapsed().as_secs_f64();
        return Ok(report);
    }

    let mut gens = sys.generator_polys();
    gens.extend(sys.unit_relations.iter().cloned());
    match buchberger(&sys.ring, &gens, limits) {
        Ok(gb) => {
            let st = gb.krull_dimension();
            let codim = st.codim();
            report.dim = st.dim;
            report.codim = Some(codim);
            report.stats = Some(gb.stats);
            report.verdict = if codim == r + u { Verdict::Ci } else { Verdict::NotCi };
            if report.verdict == Verdict::Ci && kind == GroupKind::Unipotent {
                report.structure = Some(format!(
                    "HR_* = HR_0 (x) exterior factor on {} degree-1 generators",
                    report.exterior_factors
                ));
            }
        }
        Err(inc) => {
            report.stats = Some(inc.stats);
            report.reason = Some(inc.reason);
        }
    }
    report.wall_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Runs [`decide_ci`] over the field named by `spec`.
pub fn decide_ci_spec(spec: FieldSpec, kind: GroupKind, n: usize, genus: usize, seed: u64, limits: &Limits) -> Result<CIReport> {
    match spec {
        FieldSpec::Rationals => decide_ci(Rationals, kind, n, genus, seed, limits),
        FieldSpec::Prime(p) => decide_ci(PrimeField::new(p)?, kind, n, genus, seed, limits),
    }
}

/// The membership witness for `U_n`, `n ≥ 6`, genus 1. All checks run in
/// the `U_n` ring itself, so for `n > 6` the conclusion is certified by
/// the same computation rather than inferred from a 6×6 submatrix.
pub fn u6_witness<F: Field>(field: F, n: usize, seed: u64, limits: &Limits) -> Result<WitnessReport> {
    if n < 6 {
        return Err(Error::Config(format!("the witness needs n ≥ 6, got {n}")));
    }
    let sys = system(field, GroupKind::Unipotent, n, 1, seed)?;
    witness_for(&sys, seed, limits)
}

pub fn u6_witness_spec(spec: FieldSpec, n: usize, seed: u64, limits: &Limits) -> Result<WitnessReport> {
    match spec {
        FieldSpec::Rationals => u6_witness(Rationals, n, seed, limits),
        FieldSpec::Prime(p) => u6_witness(PrimeField::new(p)?, n, seed, limits),
    }
}

fn witness_for<F: Field>(sys: &CommutatorSystem<F>, seed: u64, limits: &Limits) -> Result<WitnessReport> {
    let start = Instant::now();
    let ring = &sys.ring;
    let zero = Polynomial::zero(ring);
    let killed: Vec<String> = WITNESS_ZEROED
        .iter()
        .flat_map(|&(i, j)| [entry_name(Role::X, 1, i, j), entry_name(Role::Y, 1, i, j)])
        .collect();
    let assignment: Vec<(&str, Polynomial<F>)> = killed.iter().map(|v| (v.as_str(), zero.clone())).collect();

    let mut report = WitnessReport {
        n: sys.n,
        field: ring.field().spec(),
        order: order_label(seed),
        substitution: killed.iter().map(|v| format!("{v}=0")).collect(),
        surviving: Vec::new(),
        pattern: Vec::new(),
        bounding_ideal: Vec::new(),
        memberships: Vec::new(),
        codim_bound: 0,
        subsequence_length: WITNESS_POSITIONS.len(),
        conclusion: Verdict::Inconclusive,
        failure: None,
        stats: None,
        wall_seconds: 0.0,
    };

    let mut bounding: Vec<Polynomial<F>> = killed.iter().map(|v| Polynomial::var_named(ring, v)).collect::<Result<_>>()?;
    for &pos in &WITNESS_POSITIONS {
        let f = sys
            .generator_at(pos.0, pos.1)
            .ok_or_else(|| Error::Shape(format!("no generator at {pos:?}")))?;
        let image = f.substitute_named(&assignment)?;
        let expected = match witness_expected(pos) {
            Some(text) => Polynomial::parse(ring, text)?,
            None => zero.clone(),
        };
        let check = PatternCheck {
            position: pos,
            expected: expected.to_string(),
            actual: image.to_string(),
            matches: image == expected,
        };
        if !check.matches && report.failure.is_none() {
            report.failure = Some(format!("substituted entry at {pos:?} differs from the expected pattern"));
        }
        if witness_expected(pos).is_some() {
            report.surviving.push(check.clone());
            bounding.push(image);
        }
        report.pattern.push(check);
    }
    report.bounding_ideal = bounding.iter().map(|p| p.to_string()).collect();
    report.codim_bound = bounding.len();

    if report.failure.is_none() {
        match buchberger(ring, &bounding, limits) {
            Ok(gb) => {
                report.stats = Some(gb.stats);
                for &pos in &WITNESS_POSITIONS {
                    let f = sys.generator_at(pos.0, pos.1).expect("checked above");
                    let in_ideal = gb.contains(f);
                    if !in_ideal && report.failure.is_none() {
                        report.failure = Some(format!("entry at {pos:?} is not in the bounding ideal"));
                    }
                    report.memberships.push(MembershipCheck { position: pos, in_ideal });
                }
            }
            Err(inc) => {
                report.stats = Some(inc.stats);
                report.failure = Some(format!("bounding ideal basis incomplete: {}", inc.reason));
            }
        }
    }
    if report.failure.is_none() && report.codim_bound < report.subsequence_length {
        report.conclusion = Verdict::NotCi;
    }
    report.wall_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Field used by the table when none is forced: rationals for the small
/// cases, `GF(32003)` for `U_n` with `n ≥ 5` and `B_n` with `n ≥ 3`.
pub fn default_table_field(kind: GroupKind, n: usize) -> FieldSpec {
    let small = match kind {
        GroupKind::Unipotent => n <= 4,
        GroupKind::Borel => n <= 2,
    };
    if small { FieldSpec::Rationals } else { FieldSpec::default_prime() }
}

/// Decides every `n` in `2..=max_n` for one family, in parallel on a pool
/// of `jobs` threads (0 means one per core). Rows are returned in order of
/// `n`.
pub fn classify_table(
    kind: GroupKind,
    max_n: usize,
    genus: usize,
    field: Option<FieldSpec>,
    seed: u64,
    limits: &Limits,
    jobs: usize,
) -> Result<Vec<CIReport>> {
    use rayon::prelude::*;
    if max_n < 2 {
        return Err(Error::Config(format!("max-n must be at least 2, got {max_n}")));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    pool.install(|| {
        (2..=max_n)
            .into_par_iter()
            .map(|n| {
                let spec = field.unwrap_or_else(|| default_table_field(kind, n));
                decide_ci_spec(spec, kind, n, genus, seed, limits)
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_unipotent_cases() {
        let lim = Limits::default();
        let u2 = decide_ci(Rationals, GroupKind::Unipotent, 2, 1, 0, &lim).unwrap();
        assert_eq!((u2.nvars, u2.generators, u2.dim, u2.codim, u2.verdict), (2, 0, Some(2), Some(0), Verdict::Ci));
        let u3 = decide_ci(Rationals, GroupKind::Unipotent, 3, 1, 0, &lim).unwrap();
        assert_eq!((u3.nvars, u3.generators, u3.dim, u3.codim, u3.verdict), (6, 1, Some(5), Some(1), Verdict::Ci));
        assert_eq!(u3.exterior_factors, 2);
        assert!(u3.structure.is_some());
        assert_eq!(u3.source, Source::Literature);
    }

    #[test]
    fn borel_two() {
        let b2 = decide_ci(Rationals, GroupKind::Borel, 2, 1, 0, &Limits::default()).unwrap();
        assert_eq!((b2.nvars, b2.generators, b2.unit_relations), (10, 1, 4));
        assert_eq!((b2.dim, b2.codim, b2.verdict), (Some(5), Some(5), Verdict::Ci));
        assert_eq!(b2.exterior_factors, 2);
        assert!(b2.structure.is_none());
    }

    #[test]
    fn witness_over_prime_field() {
        let w = u6_witness(PrimeField::new(32003).unwrap(), 6, 0, &Limits::default()).unwrap();
        assert_eq!(w.conclusion, Verdict::NotCi, "{:?}", w.failure);
        assert_eq!(w.pattern.len(), 7);
        assert!(w.pattern.iter().all(|c| c.matches));
        assert!(w.memberships.iter().all(|m| m.in_ideal));
        assert_eq!((w.codim_bound, w.subsequence_length), (6, 7));
    }

    #[test]
    fn higher_genus_rows_are_tool_derived() {
        assert_eq!(Source::of(GroupKind::Unipotent, 3, 2), Source::ToolDerived);
        assert_eq!(Source::of(GroupKind::Borel, 4, 1), Source::ToolDerived);
        assert_eq!(Source::of(GroupKind::Borel, 3, 1), Source::Literature);
    }

    #[test]
    fn report_json_round_trip() {
        let r = decide_ci(Rationals, GroupKind::Unipotent, 3, 1, 0, &Limits::default()).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"verdict\":\"CI\""));
        assert!(s.contains("\"group\":\"un\""));
        assert_eq!(serde_json::from_str::<CIReport>(&s).unwrap(), r);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(decide_ci(Rationals, GroupKind::Unipotent, 1, 1, 0, &Limits::default()).is_err());
        assert!(decide_ci(Rationals, GroupKind::Unipotent, 3, 0, 0, &Limits::default()).is_err());
        assert!(u6_witness(Rationals, 5, 0, &Limits::default()).is_err());
    }
}
