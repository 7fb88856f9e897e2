//! Dimension scans over the count systems.
//!
//! For each `n` the leading `(k+1) x (k+1)` block of the count system is solved
//! exactly; any further equations (strengths above the square case) are checked by
//! substitution. A dimension is feasible when `s` is a positive integer and every
//! `s_j` a non-negative integer.

use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{is_integer, serde_q, BigInt, BigRational, SquareSolution};
use crate::moments::{build_count_system, design_constant, CountSystem, DesignProblem};

/// Largest dimension scanned when no range is given.
pub const DEFAULT_N_MAX: u32 = 512;

/// One integral solution `(n, s, s_1..s_k)` of a count system.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FeasibleSolution {
    pub n: u32,
    #[serde(with = "serde_q::int")]
    pub s: BigInt,
    #[serde(with = "serde_q::int_vec")]
    pub counts: Vec<BigInt>,
}

impl FeasibleSolution {
    pub fn kissing_number(&self) -> BigInt {
        &self.s * 2
    }

    pub fn has_zero_count(&self) -> bool {
        self.counts.iter().any(Zero::is_zero)
    }
}

/// A dimension whose leading block is singular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularDimension {
    pub n: u32,
    /// Rank of the full coefficient matrix.
    pub rank: usize,
    /// Whether the right-hand side lies in the column span. When false the
    /// dimension has no solution at all; when true a solution family exists and
    /// [`brute_force_check`] has to decide integrality.
    pub consistent: bool,
}

/// Per-dimension classification produced while scanning.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimensionOutcome {
    Feasible(FeasibleSolution),
    /// Integral with `s ≥ 1` but some `s_j = 0`; kept apart from `Feasible`.
    ZeroCount(FeasibleSolution),
    Infeasible,
    Singular(SingularDimension),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub problem: DesignProblem,
    pub n_min: u32,
    pub n_max: u32,
    /// Solutions with every count strictly positive, sorted by `n`.
    pub solutions: Vec<FeasibleSolution>,
    /// Integral solutions with some vanishing count, sorted by `n`.
    pub zero_count_solutions: Vec<FeasibleSolution>,
    pub singular: Vec<SingularDimension>,
    /// Dimensions with a unique but non-integral or negative solution.
    pub infeasible: usize,
}

impl ScanReport {
    pub fn dimensions(&self) -> Vec<u32> {
        self.solutions.iter().map(|s| s.n).collect()
    }

    pub fn solution(&self, n: u32) -> Option<&FeasibleSolution> {
        self.solutions.iter().find(|s| s.n == n)
    }

    /// Every `n` in range appears in exactly one bucket.
    pub fn is_complete(&self) -> bool {
        let mut seen = BTreeSet::new();
        let all = self
            .solutions
            .iter()
            .chain(&self.zero_count_solutions)
            .map(|s| s.n)
            .chain(self.singular.iter().map(|s| s.n));
        for n in all {
            if n < self.n_min || n > self.n_max || !seen.insert(n) {
                return false;
            }
        }
        seen.len() + self.infeasible == (self.n_max - self.n_min + 1) as usize
    }
}

/// Solves the count system for one dimension.
pub fn solve_dimension(problem: DesignProblem, n: u32) -> Result<DimensionOutcome> {
    let sys = build_count_system(problem, n)?;
    let k = problem.bound();
    let block = sys.matrix.leading_block(k + 1, k + 1);
    match block.solve_square(&sys.rhs[..k + 1])? {
        SquareSolution::Unique(x) => Ok(classify_solution(&sys, &x)),
        SquareSolution::Singular { .. } => {
            let rank = sys.matrix.rank();
            let consistent = sys.matrix.augmented(&sys.rhs)?.rank() == rank;
            Ok(DimensionOutcome::Singular(SingularDimension {
                n,
                rank,
                consistent,
            }))
        }
    }
}

fn classify_solution(sys: &CountSystem, x: &[BigRational]) -> DimensionOutcome {
    if sys
        .matrix
        .mul_vec(x)
        .map(|lhs| lhs != sys.rhs)
        .unwrap_or(true)
    {
        return DimensionOutcome::Infeasible;
    }
    if !x.iter().all(is_integer) {
        return DimensionOutcome::Infeasible;
    }
    let (counts, s) = x.split_at(x.len() - 1);
    let s = s[0].to_integer();
    if !s.is_positive() || counts.iter().any(Signed::is_negative) {
        return DimensionOutcome::Infeasible;
    }
    let solution = FeasibleSolution {
        n: sys.n,
        s,
        counts: counts.iter().map(BigRational::to_integer).collect(),
    };
    if solution.has_zero_count() {
        DimensionOutcome::ZeroCount(solution)
    } else {
        DimensionOutcome::Feasible(solution)
    }
}

/// Scans `n_min..=n_max`. Dimensions are independent and solved in parallel;
/// the report is assembled in ascending `n`.
pub fn scan(problem: DesignProblem, n_min: u32, n_max: u32) -> Result<ScanReport> {
    if n_min == 0 {
        return Err(Error::Domain(
            "dimension range must start at 1 or later".into(),
        ));
    }
    if n_max < n_min {
        return Err(Error::Input(format!(
            "empty dimension range {n_min}..={n_max}"
        )));
    }
    let outcomes: Vec<DimensionOutcome> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| solve_dimension(problem, n))
        .collect::<Result<_>>()?;

    let mut report = ScanReport {
        problem,
        n_min,
        n_max,
        solutions: Vec::new(),
        zero_count_solutions: Vec::new(),
        singular: Vec::new(),
        infeasible: 0,
    };
    for outcome in outcomes {
        match outcome {
            DimensionOutcome::Feasible(s) => report.solutions.push(s),
            DimensionOutcome::ZeroCount(s) => report.zero_count_solutions.push(s),
            DimensionOutcome::Singular(s) => report.singular.push(s),
            DimensionOutcome::Infeasible => report.infeasible += 1,
        }
    }
    Ok(report)
}

/// Exhaustive search for integral solutions with `1 ≤ s ≤ s_max` in a single
/// dimension. Independent of the elimination path used by [`scan`]: candidate
/// values of `s` are those making every right-hand side integral and
/// non-negative, and counts are enumerated from `s_k` down with budget pruning.
///
/// Returns `None` if more than `node_budget` search nodes would be visited.
pub fn brute_force_check_bounded(
    problem: DesignProblem,
    n: u32,
    s_max: u64,
    node_budget: u64,
) -> Result<Option<Vec<FeasibleSolution>>> {
    let k = problem.bound();
    let r = problem.equations();
    let m = BigInt::from(problem.minimum);
    // b_i(s) = c_i m^{2i} s - m^{2i} = Σ_j j^{2i} s_j
    let mut slopes = Vec::with_capacity(r);
    let mut offsets = Vec::with_capacity(r);
    for i in 1..=r as u32 {
        let m_pow = num_traits::pow(m.clone(), 2 * i as usize);
        slopes.push(design_constant(n, i)? * BigRational::from_integer(m_pow.clone()));
        offsets.push(m_pow);
    }
    // s must clear every slope denominator
    let step = slopes.iter().fold(BigInt::from(1), |acc, q| {
        num_integer::Integer::lcm(&acc, q.denom())
    });
    let Some(step) = step.to_u64() else {
        return Ok(Some(Vec::new()));
    };

    let powers: Vec<Vec<i128>> = (0..=k)
        .map(|j| (1..=r as u32).map(|i| (j as i128).pow(2 * i)).collect())
        .collect();

    let fixed = |q: &BigInt| {
        q.to_i128()
            .ok_or_else(|| Error::Resource("moment system exceeds 128-bit range".into()))
    };
    let slopes: Vec<(i128, i128)> = slopes
        .iter()
        .map(|q| Ok((fixed(q.numer())?, fixed(q.denom())?)))
        .collect::<Result<_>>()?;
    let offsets: Vec<i128> = offsets.iter().map(fixed).collect::<Result<_>>()?;
    let step = step as i128;

    let mut search = CountSearch {
        r,
        powers: &powers,
        nodes: 0,
        budget: node_budget,
        found: Vec::new(),
    };
    let mut solutions = Vec::new();
    let mut s = step;
    let mut budgets = vec![0i128; r];
    while s <= s_max as i128 {
        for (b, (&(num, den), &offset)) in budgets.iter_mut().zip(slopes.iter().zip(&offsets)) {
            *b = num
                .checked_mul(s / den)
                .and_then(|v| v.checked_sub(offset))
                .ok_or_else(|| Error::Resource("moment budget exceeds 128-bit range".into()))?;
        }
        if budgets.iter().all(|&b| b >= 0) {
            let mut counts = vec![0i128; k];
            if !search.descend(k, &budgets, &mut counts) {
                return Ok(None);
            }
            solutions.extend(search.found.drain(..).map(|counts| FeasibleSolution {
                n,
                s: BigInt::from(s),
                counts: counts.into_iter().map(BigInt::from).collect(),
            }));
        }
        s += step;
    }
    Ok(Some(solutions))
}

/// [`brute_force_check_bounded`] without a node budget.
pub fn brute_force_check(
    problem: DesignProblem,
    n: u32,
    s_max: u64,
) -> Result<Vec<FeasibleSolution>> {
    Ok(brute_force_check_bounded(problem, n, s_max, u64::MAX)?.unwrap_or_default())
}

struct CountSearch<'a> {
    r: usize,
    /// `powers[j][i-1] = j^{2i}`
    powers: &'a [Vec<i128>],
    nodes: u64,
    budget: u64,
    found: Vec<Vec<i128>>,
}

impl CountSearch<'_> {
    /// Chooses `s_level` given the remaining right-hand sides `b`. Returns false
    /// when the node budget runs out.
    fn descend(&mut self, level: usize, b: &[i128], counts: &mut [i128]) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        if level == 0 {
            if b.iter().all(|&v| v == 0) {
                self.found.push(counts.to_vec());
            }
            return true;
        }
        let j = level;
        let pj = &self.powers[j];
        // remaining indices are 1..=j, so for every i < i':
        //   b_i ≤ b_{i'} ≤ j^{2(i'-i)} b_i
        // and b_i ≥ 0 throughout
        for i in 0..self.r {
            if b[i] < 0 {
                return true;
            }
        }
        for i in 0..self.r.saturating_sub(1) {
            if b[i + 1] < b[i] {
                return true;
            }
            if b[i + 1] > pj[0] * b[i] {
                return true;
            }
        }
        let mut hi = b[0] / pj[0];
        for i in 1..self.r {
            hi = hi.min(b[i] / pj[i]);
        }
        // with only indices < j left, rest_{i+1} ≤ (j-1)^2 rest_i must hold, i.e.
        // v j^{2i} (j^2 - (j-1)^2) ≥ b_{i+1} - (j-1)^2 b_i
        let next = &self.powers[j - 1];
        let mut lo = 0i128;
        for i in 0..self.r - 1 {
            let need = b[i + 1] - next[0] * b[i];
            let per = pj[i] * (pj[0] - next[0]);
            if need > 0 {
                lo = lo.max((need + per - 1) / per);
            }
        }
        let mut rest = vec![0i128; self.r];
        for v in lo..=hi {
            for i in 0..self.r {
                rest[i] = b[i] - v * pj[i];
            }
            counts[j - 1] = v;
            if !self.descend(j - 1, &rest, counts) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(report: &ScanReport) -> Vec<(u32, i64)> {
        report
            .solutions
            .iter()
            .map(|s| (s.n, s.s.to_i64().unwrap()))
            .collect()
    }

    #[test]
    fn minimum_six_strength_nine() {
        let report = scan(DesignProblem::new(6, 9).unwrap(), 1, DEFAULT_N_MAX).unwrap();
        assert_eq!(
            pairs(&report),
            vec![
                (26, 69888),
                (36, 1149120),
                (44, 8500800),
                (46, 13395200),
                (48, 26208000),
                (49, 50992095)
            ]
        );
        assert!(report.is_complete());
        // the rank-one "lattice" in dimension 1 solves every system with all counts 0
        assert_eq!(
            report
                .zero_count_solutions
                .iter()
                .map(|s| s.n)
                .collect::<Vec<_>>(),
            vec![1]
        );
        assert!(report.singular.iter().all(|s| !s.consistent));
    }

    #[test]
    fn minimum_seven_is_empty() {
        let report = scan(DesignProblem::new(7, 9).unwrap(), 1, DEFAULT_N_MAX).unwrap();
        assert!(report.solutions.is_empty());
        assert!(report.is_complete());
    }

    #[test]
    fn e8_parameters_in_low_strength_scan() {
        let report = scan(DesignProblem::new(2, 7).unwrap(), 1, 64).unwrap();
        let e8 = report.solution(8).expect("n = 8 feasible");
        assert_eq!(e8.s, BigInt::from(120));
        assert_eq!(e8.counts, vec![BigInt::from(56)]);
    }

    #[test]
    fn overdetermined_scan_keeps_only_consistent_dimensions() {
        // strength 11 at minimum 6: five equations, four unknowns
        let report = scan(DesignProblem::new(6, 11).unwrap(), 1, DEFAULT_N_MAX).unwrap();
        assert_eq!(pairs(&report), vec![(48, 26208000)]);
    }

    #[test]
    fn range_errors() {
        let p = DesignProblem::new(6, 9).unwrap();
        assert!(scan(p, 0, 10).is_err());
        assert!(scan(p, 10, 9).is_err());
    }

    #[test]
    fn oracle_finds_table_entry() {
        let p = DesignProblem::new(6, 9).unwrap();
        let found = brute_force_check(p, 26, 70000).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].s, BigInt::from(69888));
        assert_eq!(
            found[0].counts,
            [34992, 10935, 2000].map(BigInt::from).to_vec()
        );
        assert!(brute_force_check(p, 27, 100_000).unwrap().is_empty());
    }

    #[test]
    fn oracle_handles_singular_dimension() {
        let p = DesignProblem::new(6, 9).unwrap();
        let report = scan(p, 50, 50).unwrap();
        assert_eq!(report.singular.len(), 1);
        assert!(brute_force_check(p, 50, 200_000).unwrap().is_empty());
    }

    #[test]
    fn oracle_respects_budget() {
        let p = DesignProblem::new(6, 9).unwrap();
        assert_eq!(brute_force_check_bounded(p, 26, 70000, 10).unwrap(), None);
    }
}
