//! Dual-class analysis and the elimination rules.
//!
//! If an integral design lattice is not unimodular, a vector `v` of the dual that
//! is minimal in its class modulo the lattice has `|(v, x)| ≤ m/2` against every
//! minimal vector `x`. The counts `t_j = #{x : (x, v) = j}` then satisfy the dual
//! system with right-hand sides in `t = (v, v)`, and eliminating the counts leaves
//! one polynomial in `t` whose positive rational roots are the only possible norms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{format_rational, is_integer, serde_q, BigRational, QPolynomial};
use crate::moments::{build_dual_system, DesignProblem, DualSystem};

/// Count polynomials `t_j(t)` recovered from the first `k` dual equations, and
/// the eliminated polynomial from the last one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub counts: Vec<QPolynomial>,
    /// Primitive integer form of `Σ_j A_{r,j} t_j(t) − rhs_r(t)`.
    pub polynomial: QPolynomial,
}

/// Solves the leading `k x k` block by Cramer's rule over `Q[t]` and
/// substitutes into the final equation.
pub fn eliminate(d: &DualSystem) -> Result<Elimination> {
    let k = d.matrix.cols();
    let r = d.matrix.rows();
    if r != k + 1 {
        return Err(Error::Dimension(format!(
            "dual elimination needs k+1 equations in k unknowns, got {r} in {k}"
        )));
    }
    let block = d.matrix.leading_block(k, k);
    let det = block.determinant()?;
    if det.is_zero() {
        return Err(Error::Structural("leading dual block is singular".into()));
    }
    let inv_det = BigRational::one() / &det;
    let mut counts = Vec::with_capacity(k);
    for j in 0..k {
        // det(block with column j replaced by rhs) is linear in the rhs entries:
        // expand along column j with the cofactors of the constant entries.
        let mut numerator = QPolynomial::zero();
        for i in 0..k {
            let mut unit = vec![BigRational::zero(); k];
            unit[i] = BigRational::one();
            let cofactor = block.with_column(j, &unit).determinant()?;
            if !cofactor.is_zero() {
                numerator = &numerator + &d.rhs[i].scale(&cofactor);
            }
        }
        counts.push(numerator.scale(&inv_det));
    }
    let mut last = -&d.rhs[k];
    for (j, count) in counts.iter().enumerate() {
        last = &last + &count.scale(&d.matrix[(k, j)]);
    }
    Ok(Elimination {
        counts,
        polynomial: last.normalized(),
    })
}

/// Eliminated polynomial `p_n(t)` in primitive integer form.
pub fn eliminate_to_polynomial(d: &DualSystem) -> Result<QPolynomial> {
    Ok(eliminate(d)?.polynomial)
}

/// A positive rational root together with the dual counts it forces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCounts {
    #[serde(with = "serde_q")]
    pub norm: BigRational,
    #[serde(with = "serde_q::vec")]
    pub counts: Vec<BigRational>,
    /// Some `t_j` is negative or fractional. Informational only; the root is
    /// still passed to the elimination rules.
    pub inadmissible_counts: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualAnalysis {
    pub n: u32,
    #[serde(with = "serde_q::int")]
    pub s: BigInt,
    /// Coefficients of `p_n`, ascending degree.
    #[serde(with = "serde_q::int_vec")]
    pub polynomial: Vec<BigInt>,
    pub roots: Vec<RootCounts>,
}

impl DualAnalysis {
    pub fn root_norms(&self) -> Vec<BigRational> {
        self.roots.iter().map(|r| r.norm.clone()).collect()
    }

    pub fn polynomial(&self) -> QPolynomial {
        QPolynomial::new(
            self.polynomial
                .iter()
                .cloned()
                .map(BigRational::from_integer)
                .collect(),
        )
    }
}

pub fn analyze(problem: DesignProblem, n: u32, s: &BigInt) -> Result<DualAnalysis> {
    let system = build_dual_system(problem, n, s)?;
    let elim = eliminate(&system)?;
    let mut roots = Vec::new();
    for norm in elim.polynomial.rational_roots()? {
        if !norm.is_positive() {
            continue;
        }
        let counts: Vec<BigRational> = elim.counts.iter().map(|c| c.eval(&norm)).collect();
        let full = system.matrix.mul_vec(&counts)?;
        if full != system.rhs_at(&norm) {
            return Err(Error::Structural(format!(
                "dual counts at t = {} do not satisfy the dual system",
                format_rational(&norm)
            )));
        }
        let inadmissible_counts = counts.iter().any(|c| c.is_negative() || !is_integer(c));
        roots.push(RootCounts {
            norm,
            counts,
            inadmissible_counts,
        });
    }
    Ok(DualAnalysis {
        n,
        s: s.clone(),
        polynomial: elim.polynomial.primitive_integer_coefficients(),
        roots,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    /// `p_n` has no positive rational root, so no dual class can exist.
    NoDualNorm,
    /// Every possible dual norm is an even integer.
    EvenDual,
    /// Hermite invariant of the hypothesized lattice beats a bound on `γ_n`.
    Hermite,
    /// Even unimodular lattices: `8 | n` and `m ≤ 2⌊n/24⌋ + 2`.
    Hecke,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Eliminated,
    Survives,
    ForcesUnimodular,
    Undecided,
}

/// Exact quantities behind a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Roots {
        #[serde(with = "serde_q::vec")]
        roots: Vec<BigRational>,
        /// Roots that are not even integers.
        #[serde(with = "serde_q::vec")]
        offending: Vec<BigRational>,
    },
    Hermite {
        n: u32,
        #[serde(with = "serde_q")]
        minimum: BigRational,
        #[serde(with = "serde_q")]
        determinant: BigRational,
        #[serde(with = "serde_q")]
        gamma_bound: BigRational,
        /// `m^n`
        #[serde(with = "serde_q")]
        lhs: BigRational,
        /// `bound^n · det`
        #[serde(with = "serde_q")]
        rhs: BigRational,
        citation: Option<String>,
    },
    Hecke {
        n: u32,
        minimum: u32,
        divisible_by_8: bool,
        /// `2⌊n/24⌋ + 2`
        extremal_bound: u32,
        extremal: bool,
    },
    Missing {
        needs: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationVerdict {
    pub rule: RuleId,
    pub outcome: Outcome,
    pub witness: Witness,
}

fn is_even_integer(q: &BigRational) -> bool {
    is_integer(q) && (q.numer() % 2u32).is_zero()
}

/// No positive rational norm: a non-unimodular lattice is impossible.
pub fn rule_no_dual_norm(roots: &[BigRational]) -> EliminationVerdict {
    EliminationVerdict {
        rule: RuleId::NoDualNorm,
        outcome: if roots.is_empty() {
            Outcome::ForcesUnimodular
        } else {
            Outcome::Survives
        },
        witness: Witness::Roots {
            roots: roots.to_vec(),
            offending: roots.to_vec(),
        },
    }
}

/// All dual norms even integers: the dual would be even, hence integral, hence
/// equal to the lattice.
pub fn rule_even_dual(roots: &[BigRational]) -> EliminationVerdict {
    let offending: Vec<BigRational> = roots
        .iter()
        .filter(|r| !is_even_integer(r))
        .cloned()
        .collect();
    EliminationVerdict {
        rule: RuleId::EvenDual,
        outcome: if !roots.is_empty() && offending.is_empty() {
            Outcome::ForcesUnimodular
        } else {
            Outcome::Survives
        },
        witness: Witness::Roots {
            roots: roots.to_vec(),
            offending,
        },
    }
}

/// Eliminated iff `m / det^{1/n} > gamma_bound`, decided as `m^n > bound^n · det`.
pub fn rule_hermite(
    n: u32,
    minimum: u32,
    det: &BigRational,
    gamma_bound: &BigRational,
) -> EliminationVerdict {
    rule_hermite_cited(
        n,
        &BigRational::from_integer(minimum.into()),
        det,
        gamma_bound,
        None,
    )
}

/// [`rule_hermite`] for a rational minimum, carrying the bound's citation.
pub fn rule_hermite_cited(
    n: u32,
    minimum: &BigRational,
    det: &BigRational,
    gamma_bound: &BigRational,
    citation: Option<String>,
) -> EliminationVerdict {
    let lhs = minimum.pow(n as i32);
    let rhs = gamma_bound.pow(n as i32) * det;
    let outcome = if lhs > rhs {
        Outcome::Eliminated
    } else {
        Outcome::Survives
    };
    EliminationVerdict {
        rule: RuleId::Hermite,
        outcome,
        witness: Witness::Hermite {
            n,
            minimum: minimum.clone(),
            determinant: det.clone(),
            gamma_bound: gamma_bound.clone(),
            lhs,
            rhs,
            citation,
        },
    }
}

pub fn extremal_bound(n: u32) -> u32 {
    2 * (n / 24) + 2
}

/// Conditions on an even unimodular lattice of dimension `n` and minimum `m`.
pub fn rule_hecke(n: u32, minimum: u32) -> EliminationVerdict {
    let divisible_by_8 = n.is_multiple_of(8);
    let bound = extremal_bound(n);
    let survives = divisible_by_8 && minimum <= bound;
    EliminationVerdict {
        rule: RuleId::Hecke,
        outcome: if survives {
            Outcome::Survives
        } else {
            Outcome::Eliminated
        },
        witness: Witness::Hecke {
            n,
            minimum,
            divisible_by_8,
            extremal_bound: bound,
            extremal: divisible_by_8 && minimum == bound,
        },
    }
}

pub fn undecided(rule: RuleId, needs: impl Into<String>) -> EliminationVerdict {
    EliminationVerdict {
        rule,
        outcome: Outcome::Undecided,
        witness: Witness::Missing {
            needs: needs.into(),
        },
    }
}
