//! End-to-end classification of integral design lattices by minimum.
//!
//! For strength `t` and each minimum `m ≤ M`:
//!
//! * `m ≤ 5` is covered by the published classification of integral 7-design
//!   lattices of small minimum and is reported as cited;
//! * when the count system is square (`⌊m/2⌋ + 1 = (t-1)/2`) the dimension scan is
//!   followed by the dual-class analysis and the elimination rules;
//! * when there are more equations than unknowns, the lattice is also a
//!   `(t-2)`-design, so the survivors at strength `t-2` are filtered through the
//!   (overdetermined) strength-`t` scan.

use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dualclass::{
    analyze, extremal_bound, rule_even_dual, rule_hecke, rule_hermite_cited, rule_no_dual_norm,
    undecided, DualAnalysis, EliminationVerdict, Outcome, RuleId,
};
use crate::error::{Error, Result};
use crate::exactmath::{format_rational, serde_q, BigRational};
use crate::feasibility::{scan, FeasibleSolution, ScanReport, SingularDimension};
use crate::lattice::{fixtures, verify_design, GramMatrix, PairBudget};
use crate::moments::DesignProblem;

pub const DEFAULT_CONFIG: &str = include_str!("../data/default_config.json");

/// Environment variable naming a config file to use when none is passed explicitly.
pub const CONFIG_ENV: &str = "DESIGNLAT_CONFIG";

/// Largest minimum covered by the cited classification.
pub const CITED_MINIMUM: u32 = 5;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyConfig {
    #[serde(default)]
    pub gamma_bounds: Vec<GammaBound>,
    #[serde(default)]
    pub determinant_hypotheses: Vec<DeterminantHypothesis>,
}

/// Upper bound on the Hermite constant `γ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaBound {
    pub n: u32,
    #[serde(with = "serde_q")]
    pub bound: BigRational,
    pub citation: String,
}

/// Determinant a non-unimodular candidate must have, derived outside this crate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantHypothesis {
    pub n: u32,
    pub minimum: u32,
    #[serde(with = "serde_q")]
    pub determinant: BigRational,
    pub note: String,
}

impl ClassifyConfig {
    pub fn bundled() -> Self {
        Self::parse(DEFAULT_CONFIG).expect("bundled config parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let config: ClassifyConfig =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("bad config: {e}")))?;
        for g in &config.gamma_bounds {
            if g.bound <= BigRational::from_integer(0.into()) {
                return Err(Error::Input(format!(
                    "non-positive gamma bound for n = {}",
                    g.n
                )));
            }
        }
        for d in &config.determinant_hypotheses {
            if d.determinant <= BigRational::from_integer(0.into()) {
                return Err(Error::Input(format!(
                    "non-positive determinant for n = {}",
                    d.n
                )));
            }
        }
        Ok(config)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn gamma_bound(&self, n: u32) -> Option<&GammaBound> {
        self.gamma_bounds.iter().find(|g| g.n == n)
    }

    pub fn determinant(&self, n: u32, minimum: u32) -> Option<&DeterminantHypothesis> {
        self.determinant_hypotheses
            .iter()
            .find(|d| d.n == n && d.minimum == minimum)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub n_max: u32,
    /// Re-verify cited lattices that have a bundled Gram fixture.
    pub verify_fixtures: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            n_max: crate::feasibility::DEFAULT_N_MAX,
            verify_fixtures: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    Cited,
}

/// A lattice type left standing at the end of the analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub n: u32,
    pub minimum: u32,
    #[serde(with = "serde_q::int")]
    pub s: BigInt,
    pub name: String,
    pub even: bool,
    pub unimodular: bool,
    pub extremal: bool,
    pub provenance: Provenance,
    /// Cited facts the survivor's status also rests on.
    pub citations: Vec<String>,
    /// Result of re-verifying a bundled fixture, when requested.
    pub verified: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Eliminated,
    Survives,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRecord {
    pub n: u32,
    #[serde(with = "serde_q::int")]
    pub s: BigInt,
    pub dual: DualAnalysis,
    /// Rules applied under the hypothesis that the lattice is not unimodular.
    pub non_unimodular: Vec<EliminationVerdict>,
    /// Rule applied under the hypothesis that the lattice is unimodular.
    pub unimodular: Option<EliminationVerdict>,
    pub status: Status,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Cited,
    Computed,
    Reduced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub from_strength: u32,
    pub candidates: Vec<u32>,
    pub kept: Vec<u32>,
    pub dropped: Vec<u32>,
    pub previous: Box<MinimumRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimumRecord {
    pub minimum: u32,
    pub strength: u32,
    pub method: Method,
    pub citation: Option<String>,
    pub scan: Option<ScanReport>,
    pub dimensions: Vec<DimensionRecord>,
    /// Integral solutions with a vanishing count; excluded from the analysis.
    pub zero_count: Vec<FeasibleSolution>,
    pub reduction: Option<Reduction>,
    pub survivors: Vec<Survivor>,
    pub undecided: Vec<String>,
    /// Cited statements re-checked against bundled fixtures, when requested.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fixture_checks: Vec<FixtureCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub strength: u32,
    pub minimum_max: u32,
    pub n_max: u32,
    pub minima: Vec<MinimumRecord>,
    #[serde(rename = "final")]
    pub final_lattices: Vec<Survivor>,
    pub undecided: Vec<String>,
    pub conclusion: String,
}

impl Certificate {
    pub fn is_decided(&self) -> bool {
        self.undecided.is_empty()
    }

    pub fn final_dimensions(&self) -> Vec<u32> {
        self.final_lattices.iter().map(|s| s.n).collect()
    }
}

const MARTINET_SMALL_MINIMUM: &str = "Martinet: the integral 7-design lattices of minimum at most 5 are E8, O23, \
Lambda16, Lambda23, Lambda24 and the unimodular lattices of dimension 32 and minimum 4; of these only the \
Leech lattice Lambda24 is an 11-design and the others give no 8-design. The minimal vectors of Lambda24 \
form an 11-design and not a 12-design, so none is a 13-design";
const VENKOV_EXTREMAL: &str =
    "Venkov: minimal vectors of an extremal even unimodular lattice of dimension \
divisible by 24 form an 11-design";

/// Whole pipeline for strength `t` and minima `1..=minimum_max`.
pub fn classify(
    strength: u32,
    minimum_max: u32,
    config: &ClassifyConfig,
    options: &ClassifyOptions,
) -> Result<Certificate> {
    if strength < 9 || strength.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "classification needs an odd strength ≥ 9, got {strength}"
        )));
    }
    if minimum_max == 0 {
        return Err(Error::Domain("minimum bound must be positive".into()));
    }
    let mut minima = Vec::new();
    if minimum_max >= 1 {
        minima.push(cited_record(
            strength,
            minimum_max.min(CITED_MINIMUM),
            options,
        )?);
    }
    for m in CITED_MINIMUM + 1..=minimum_max {
        minima.push(classify_minimum(strength, m, config, options)?);
    }
    let final_lattices: Vec<Survivor> = minima.iter().flat_map(|r| r.survivors.clone()).collect();
    let undecided: Vec<String> = minima.iter().flat_map(|r| r.undecided.clone()).collect();
    let conclusion = conclusion(strength, minimum_max, &final_lattices, &undecided);
    Ok(Certificate {
        strength,
        minimum_max,
        n_max: options.n_max,
        minima,
        final_lattices,
        undecided,
        conclusion,
    })
}

fn cited_record(strength: u32, up_to: u32, options: &ClassifyOptions) -> Result<MinimumRecord> {
    let mut survivors = Vec::new();
    let leech_survives = strength <= 11 && up_to >= 4;
    if leech_survives {
        survivors.push(Survivor {
            n: 24,
            minimum: 4,
            s: BigInt::from(98280),
            name: "the Leech lattice Λ24".into(),
            even: true,
            unimodular: true,
            extremal: true,
            provenance: Provenance::Cited,
            citations: vec![MARTINET_SMALL_MINIMUM.into()],
            verified: None,
        });
    }
    let mut fixture_checks = Vec::new();
    if options.verify_fixtures {
        type Case = (&'static str, fn() -> GramMatrix, u32, bool);
        let cases: [Case; 3] = [
            ("E8", fixtures::e8, 2, false),
            ("Lambda16", fixtures::barnes_wall, 4, false),
            ("Lambda24", fixtures::leech, 4, leech_survives),
        ];
        for (name, gram, minimum, expected) in cases {
            if minimum > up_to {
                continue;
            }
            let check = check_fixture(name, &gram(), minimum, strength, expected)?;
            if name == "Lambda24" {
                if let Some(leech) = survivors.first_mut() {
                    leech.verified = Some(check.passes);
                }
            }
            fixture_checks.push(check);
        }
    }
    Ok(MinimumRecord {
        minimum: up_to,
        strength,
        method: Method::Cited,
        citation: Some(MARTINET_SMALL_MINIMUM.into()),
        scan: None,
        dimensions: Vec::new(),
        zero_count: Vec::new(),
        reduction: None,
        survivors,
        undecided: Vec::new(),
        fixture_checks,
    })
}

/// A cited statement re-derived from a bundled Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureCheck {
    pub name: String,
    pub minimum: i64,
    pub kissing_number: usize,
    pub strength: u32,
    pub passes: bool,
}

fn check_fixture(
    name: &str,
    g: &GramMatrix,
    minimum: u32,
    strength: u32,
    expected: bool,
) -> Result<FixtureCheck> {
    let budget = PairBudget {
        force: true,
        ..PairBudget::default()
    };
    let cert = verify_design(g, strength, budget)?;
    if cert.minimum != i64::from(minimum) {
        return Err(Error::Structural(format!(
            "bundled {name} has minimum {}, expected {minimum}",
            cert.minimum
        )));
    }
    if cert.passes != expected {
        return Err(Error::Structural(format!(
            "bundled {name} {} a {strength}-design, contradicting the cited classification",
            if cert.passes { "is" } else { "is not" }
        )));
    }
    Ok(FixtureCheck {
        name: name.into(),
        minimum: cert.minimum,
        kissing_number: cert.kissing_number,
        strength,
        passes: cert.passes,
    })
}

/// Analysis for one minimum `m > 5` at strength `t`.
pub fn classify_minimum(
    strength: u32,
    minimum: u32,
    config: &ClassifyConfig,
    options: &ClassifyOptions,
) -> Result<MinimumRecord> {
    let k = (minimum / 2) as usize;
    let r = ((strength - 1) / 2) as usize;
    if k + 1 > r {
        return Err(Error::Domain(format!(
            "minimum {minimum} needs strength at least {} for a determined count system",
            2 * k + 3
        )));
    }
    let problem = DesignProblem::new(minimum, strength)?;
    let report = scan(problem, 1, options.n_max)?;
    if k + 1 == r {
        classify_square(problem, report, config)
    } else {
        let previous = classify_minimum(strength - 2, minimum, config, options)?;
        Ok(reduce(problem, report, previous))
    }
}

/// Replays the dual-class analysis and elimination rules over a square scan.
pub fn classify_square(
    problem: DesignProblem,
    report: ScanReport,
    config: &ClassifyConfig,
) -> Result<MinimumRecord> {
    let m = problem.minimum;
    let dimensions: Vec<DimensionRecord> = report
        .solutions
        .par_iter()
        .map(|sol| analyze_dimension(problem, sol, config))
        .collect::<Result<_>>()?;

    let mut undecided: Vec<String> = report
        .singular
        .iter()
        .filter(|s| s.consistent)
        .map(|s: &SingularDimension| {
            format!(
                "m = {m}, n = {}: singular count system with a solution family",
                s.n
            )
        })
        .collect();
    let mut survivors = Vec::new();
    for d in &dimensions {
        match d.status {
            Status::Survives => survivors.push(extremal_survivor(d.n, m, d.s.clone(), Vec::new())),
            Status::Undecided => undecided.push(undecided_reason(m, d)),
            Status::Eliminated => {}
        }
    }
    Ok(MinimumRecord {
        minimum: m,
        strength: problem.strength,
        method: Method::Computed,
        citation: None,
        zero_count: report.zero_count_solutions.clone(),
        scan: Some(report),
        dimensions,
        reduction: None,
        survivors,
        undecided,
        fixture_checks: Vec::new(),
    })
}

fn undecided_reason(m: u32, d: &DimensionRecord) -> String {
    let needs: Vec<String> = d
        .non_unimodular
        .iter()
        .chain(&d.unimodular)
        .filter(|v| v.outcome == Outcome::Undecided)
        .map(|v| match &v.witness {
            crate::dualclass::Witness::Missing { needs } => needs.clone(),
            _ => format!("{:?}", v.rule),
        })
        .collect();
    format!(
        "m = {m}, n = {}: undecided, needs {}",
        d.n,
        needs.join("; ")
    )
}

fn extremal_survivor(n: u32, minimum: u32, s: BigInt, citations: Vec<String>) -> Survivor {
    Survivor {
        n,
        minimum,
        s,
        name: format!("extremal even unimodular lattice in dimension {n}"),
        even: true,
        unimodular: true,
        extremal: minimum == extremal_bound(n),
        provenance: Provenance::Computed,
        citations,
        verified: None,
    }
}

/// Both branches for one feasible dimension.
pub fn analyze_dimension(
    problem: DesignProblem,
    sol: &FeasibleSolution,
    config: &ClassifyConfig,
) -> Result<DimensionRecord> {
    let n = sol.n;
    let m = problem.minimum;
    let dual = analyze(problem, n, &sol.s)?;
    let roots = dual.root_norms();

    let mut non_unimodular = vec![rule_no_dual_norm(&roots)];
    if non_unimodular[0].outcome == Outcome::Survives {
        let even = rule_even_dual(&roots);
        let survives = even.outcome == Outcome::Survives;
        non_unimodular.push(even);
        if survives {
            non_unimodular.push(hermite_from_config(n, m, config));
        }
    }
    let last = non_unimodular.last().expect("at least one rule").outcome;
    let non_unimodular_excluded = matches!(last, Outcome::ForcesUnimodular | Outcome::Eliminated);

    // With no non-unimodular lattice possible in this dimension, the even
    // sublattice (same minimal vectors when m is even) must be unimodular,
    // so the lattice itself is even unimodular.
    let (unimodular, status) = if !non_unimodular_excluded {
        (
            None,
            if last == Outcome::Undecided {
                Status::Undecided
            } else {
                Status::Survives
            },
        )
    } else if m % 2 == 1 {
        let v = undecided(
            RuleId::Hecke,
            format!("an argument for odd minimum {m} (even sublattice loses the minimal vectors)"),
        );
        (Some(v), Status::Undecided)
    } else {
        let v = rule_hecke(n, m);
        let status = if v.outcome == Outcome::Survives {
            Status::Survives
        } else {
            Status::Eliminated
        };
        (Some(v), status)
    };
    Ok(DimensionRecord {
        n,
        s: sol.s.clone(),
        dual,
        non_unimodular,
        unimodular,
        status,
    })
}

fn hermite_from_config(n: u32, m: u32, config: &ClassifyConfig) -> EliminationVerdict {
    let Some(det) = config.determinant(n, m) else {
        return undecided(
            RuleId::Hermite,
            format!("a determinant hypothesis for n = {n}, m = {m}"),
        );
    };
    let Some(gamma) = config.gamma_bound(n) else {
        return undecided(
            RuleId::Hermite,
            format!("an upper bound for the Hermite constant γ_{n}"),
        );
    };
    rule_hermite_cited(
        n,
        &BigRational::from_integer(m.into()),
        &det.determinant,
        &gamma.bound,
        Some(format!("{} | determinant: {}", gamma.citation, det.note)),
    )
}

fn reduce(problem: DesignProblem, report: ScanReport, previous: MinimumRecord) -> MinimumRecord {
    let m = problem.minimum;
    let t = problem.strength;
    let feasible: BTreeSet<(u32, BigInt)> = report
        .solutions
        .iter()
        .chain(&report.zero_count_solutions)
        .map(|s| (s.n, s.s.clone()))
        .collect();
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    let mut survivors = Vec::new();
    for sv in &previous.survivors {
        if feasible.contains(&(sv.n, sv.s.clone())) {
            kept.push(sv.n);
            let mut next = sv.clone();
            if t == 11 && sv.n % 24 == 0 && sv.extremal {
                next.citations.push(VENKOV_EXTREMAL.into());
            }
            survivors.push(next);
        } else {
            dropped.push(sv.n);
        }
    }
    let mut undecided = previous.undecided.clone();
    for sv in &survivors {
        if !sv.citations.iter().any(|c| c == VENKOV_EXTREMAL) {
            undecided.push(format!(
                "m = {m}, n = {}: strength-{t} moment conditions hold but no design theorem is on record",
                sv.n
            ));
        }
    }
    MinimumRecord {
        minimum: m,
        strength: t,
        method: Method::Reduced,
        citation: None,
        zero_count: report.zero_count_solutions.clone(),
        scan: Some(report),
        dimensions: Vec::new(),
        reduction: Some(Reduction {
            from_strength: previous.strength,
            candidates: previous.survivors.iter().map(|s| s.n).collect(),
            kept,
            dropped,
            previous: Box::new(previous),
        }),
        survivors,
        undecided,
        fixture_checks: Vec::new(),
    }
}

fn conclusion(
    strength: u32,
    minimum_max: u32,
    survivors: &[Survivor],
    undecided: &[String],
) -> String {
    if !undecided.is_empty() {
        return format!(
            "Undecided: the classification of integral {strength}-design lattices with minimum ≤ {minimum_max} \
             needs further input ({} open item(s)).",
            undecided.len()
        );
    }
    if survivors.is_empty() {
        return format!(
            "There is no integral {strength}-design lattice with minimum ≤ {minimum_max}."
        );
    }
    let mut names: Vec<String> = Vec::new();
    for s in survivors
        .iter()
        .filter(|s| s.provenance == Provenance::Cited)
    {
        if !names.contains(&s.name) {
            names.push(s.name.clone());
        }
    }
    let mut computed: Vec<u32> = survivors
        .iter()
        .filter(|s| s.provenance == Provenance::Computed)
        .map(|s| s.n)
        .collect();
    computed.dedup();
    match computed.as_slice() {
        [] => {}
        [n] => names.push(format!(
            "the extremal even unimodular lattices in dimension {n}"
        )),
        [head @ .., last] => names.push(format!(
            "the extremal even unimodular lattices in dimensions {} and {last}",
            head.iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )),
    }
    let list = match names.len() {
        1 => names[0].clone(),
        _ => format!(
            "{} and {}",
            names[..names.len() - 1].join(", "),
            names[names.len() - 1]
        ),
    };
    if names.len() == 1 && survivors[0].provenance == Provenance::Cited {
        return format!(
            "The only integral {strength}-design lattice with minimum ≤ {minimum_max} is {list}."
        );
    }
    format!("The only integral {strength}-design lattices with minimum ≤ {minimum_max} are {list}.")
}

/// One-line summary of a verdict for text reports.
pub fn describe_verdict(v: &EliminationVerdict) -> String {
    use crate::dualclass::Witness;
    let outcome = match v.outcome {
        Outcome::Eliminated => "eliminated",
        Outcome::Survives => "survives",
        Outcome::ForcesUnimodular => "forces unimodular",
        Outcome::Undecided => "undecided",
    };
    let detail = match &v.witness {
        Witness::Roots { roots, offending } => format!(
            "roots {{{}}}, not even integers {{{}}}",
            roots.iter().map(format_rational).collect::<Vec<_>>().join(", "),
            offending.iter().map(format_rational).collect::<Vec<_>>().join(", ")
        ),
        Witness::Hermite {
            n,
            minimum,
            determinant,
            gamma_bound,
            lhs,
            rhs,
            ..
        } => format!(
            "{}^{n} = {} {} ({})^{n} * {} = {}",
            format_rational(minimum),
            format_rational(lhs),
            if v.outcome == Outcome::Eliminated { ">" } else { "<=" },
            format_rational(gamma_bound),
            format_rational(determinant),
            format_rational(rhs)
        ),
        Witness::Hecke { n, minimum, divisible_by_8, extremal_bound, .. } => format!(
            "8 | {n}: {divisible_by_8}, minimum {minimum} vs bound 2*floor({n}/24)+2 = {extremal_bound}"
        ),
        Witness::Missing { needs } => format!("needs {needs}"),
    };
    let rule = match v.rule {
        RuleId::NoDualNorm => "no-dual-norm",
        RuleId::EvenDual => "even-dual",
        RuleId::Hermite => "hermite",
        RuleId::Hecke => "hecke",
    };
    format!("{rule}: {outcome} ({detail})")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use num_traits::ToPrimitive;

    fn quick() -> ClassifyOptions {
        ClassifyOptions {
            n_max: 128,
            verify_fixtures: false,
        }
    }

    #[test]
    fn bundled_config() {
        let c = ClassifyConfig::bundled();
        assert_eq!(c.gamma_bound(26).unwrap().bound, rat(9, 2));
        assert_eq!(c.determinant(26, 6).unwrap().determinant, int(3));
        assert!(c.determinant(26, 8).is_none());
        assert!(ClassifyConfig::parse(
            "{\"gamma_bounds\": [{\"n\": 2, \"bound\": \"-1\", \"citation\": \"\"}]}"
        )
        .is_err());
        assert_eq!(
            ClassifyConfig::parse("{}").unwrap(),
            ClassifyConfig::default()
        );
    }

    /// The shipped γ_26 bound dominates Blichfeldt's bound:
    /// `(2/π) Γ(15)^{1/13} ≤ 9/2  ⇔  14! ≤ (9π/4)^{13}`, checked with `π > 3.14159`.
    #[test]
    fn gamma_26_bound_dominates_blichfeldt() {
        let factorial: BigInt = (1..=14u32).map(BigInt::from).product();
        let pi_lower = rat(314159, 100000);
        let base = rat(9, 4) * pi_lower;
        assert!(base.pow(13) >= BigRational::from_integer(factorial));
    }

    #[test]
    fn strength_nine_minimum_six() {
        let rec = classify_minimum(9, 6, &ClassifyConfig::bundled(), &quick()).unwrap();
        assert_eq!(rec.method, Method::Computed);
        let statuses: Vec<(u32, Status)> = rec.dimensions.iter().map(|d| (d.n, d.status)).collect();
        assert_eq!(
            statuses,
            vec![
                (26, Status::Eliminated),
                (36, Status::Eliminated),
                (44, Status::Eliminated),
                (46, Status::Eliminated),
                (48, Status::Survives),
                (49, Status::Eliminated),
            ]
        );
        let d26 = &rec.dimensions[0];
        assert_eq!(d26.non_unimodular.last().unwrap().rule, RuleId::Hermite);
        assert_eq!(
            d26.non_unimodular.last().unwrap().outcome,
            Outcome::Eliminated
        );
        let d36 = &rec.dimensions[1];
        assert_eq!(d36.non_unimodular.last().unwrap().rule, RuleId::EvenDual);
        assert_eq!(rec.survivors.len(), 1);
        assert!(rec.survivors[0].extremal);
        assert!(rec.undecided.is_empty());
    }

    #[test]
    fn missing_config_is_undecided() {
        let rec = classify_minimum(9, 6, &ClassifyConfig::default(), &quick()).unwrap();
        let d26 = &rec.dimensions[0];
        assert_eq!(d26.status, Status::Undecided);
        assert_eq!(rec.undecided.len(), 1);
        assert!(rec.undecided[0].contains("n = 26"));
        let cert = classify(9, 7, &ClassifyConfig::default(), &quick()).unwrap();
        assert!(!cert.is_decided());
        assert!(cert.conclusion.starts_with("Undecided"));
    }

    #[test]
    fn strength_eleven_reduces_minimum_six() {
        let rec = classify_minimum(11, 6, &ClassifyConfig::bundled(), &quick()).unwrap();
        let red = rec.reduction.as_ref().unwrap();
        assert_eq!(
            (red.candidates.clone(), red.kept.clone()),
            (vec![48], vec![48])
        );
        assert!(rec.survivors[0]
            .citations
            .iter()
            .any(|c| c == VENKOV_EXTREMAL));
        assert!(rec.undecided.is_empty());
    }

    #[test]
    fn strength_thirteen_drops_everything() {
        let rec = classify_minimum(13, 8, &ClassifyConfig::bundled(), &quick()).unwrap();
        let red = rec.reduction.as_ref().unwrap();
        assert_eq!(red.candidates, vec![72]);
        assert_eq!(red.dropped, vec![72]);
        assert!(rec.survivors.is_empty());
    }

    #[test]
    fn conclusions() {
        let cert = classify(9, 7, &ClassifyConfig::bundled(), &quick()).unwrap();
        assert_eq!(cert.final_dimensions(), vec![24, 48]);
        assert_eq!(
            cert.conclusion,
            "The only integral 9-design lattices with minimum ≤ 7 are the Leech lattice Λ24 and \
             the extremal even unimodular lattices in dimension 48."
        );
        let cert = classify(9, 5, &ClassifyConfig::bundled(), &quick()).unwrap();
        assert_eq!(
            cert.conclusion,
            "The only integral 9-design lattice with minimum ≤ 5 is the Leech lattice Λ24."
        );
        let cert = classify(9, 3, &ClassifyConfig::bundled(), &quick()).unwrap();
        assert_eq!(
            cert.conclusion,
            "There is no integral 9-design lattice with minimum ≤ 3."
        );
        assert!(classify(9, 9, &ClassifyConfig::bundled(), &quick()).is_err());
        assert!(classify(7, 5, &ClassifyConfig::bundled(), &quick()).is_err());
    }

    #[test]
    fn fixture_checks_follow_the_minimum_bound() {
        let options = ClassifyOptions {
            n_max: 64,
            verify_fixtures: true,
        };
        let cert = classify(9, 3, &ClassifyConfig::bundled(), &options).unwrap();
        let checks = &cert.minima[0].fixture_checks;
        assert_eq!(checks.len(), 1);
        assert_eq!((checks[0].name.as_str(), checks[0].passes), ("E8", false));
        assert_eq!(checks[0].kissing_number, 240);
    }

    #[test]
    fn survivor_counts_match_table() {
        let cert = classify(9, 6, &ClassifyConfig::bundled(), &quick()).unwrap();
        let s48 = cert.final_lattices.iter().find(|s| s.n == 48).unwrap();
        assert_eq!(s48.s.to_u64(), Some(26208000));
    }
}
