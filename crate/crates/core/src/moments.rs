//! Design-moment constants and the two families of linear moment systems.
//!
//! For an antipodal set `X ∪ -X` of norm-`m` vectors in dimension `n` that is a
//! spherical `t`-design, every moment identity
//! `Σ_{x∈X} (x,α)^{2i} = c_i · |X| · m^i · (α,α)^i` with `i ≤ (t-1)/2` holds.
//! Evaluating at a minimal vector gives the count systems, evaluating at a
//! minimal dual-class representative gives the dual systems.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{int, BigInt, BigRational, QMatrix, QPolynomial};

/// `c_i = Π_{j<i} (1+2j)/(n+2j)`, so `c_0 = 1`, `c_1 = 1/n`, `c_2 = 3/(n(n+2))`.
pub fn design_constant(n: u32, i: u32) -> Result<BigRational> {
    if n == 0 && i > 0 {
        return Err(Error::Domain(format!(
            "design constant c_{i} in dimension 0"
        )));
    }
    Ok((0..i).fold(BigRational::one(), |acc, j| {
        acc * BigRational::new(BigInt::from(1 + 2 * j), BigInt::from(n + 2 * j))
    }))
}

/// Lattice minimum `m` and design strength `t` of a moment problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DesignProblem {
    pub minimum: u32,
    pub strength: u32,
}

impl DesignProblem {
    /// Requires `t` odd and at least one more equation than count unknowns,
    /// i.e. `(t-1)/2 ≥ ⌊m/2⌋ + 1`.
    pub fn new(minimum: u32, strength: u32) -> Result<Self> {
        if minimum == 0 {
            return Err(Error::Domain("lattice minimum must be positive".into()));
        }
        if strength.is_multiple_of(2) || strength < 3 {
            return Err(Error::Domain(format!(
                "design strength {strength} is not an odd number ≥ 3"
            )));
        }
        let p = DesignProblem { minimum, strength };
        if p.equations() < p.bound() + 1 {
            return Err(Error::Domain(format!(
                "strength {strength} gives {} equations for {} unknowns at minimum {minimum}",
                p.equations(),
                p.bound() + 1
            )));
        }
        Ok(p)
    }

    /// `k = ⌊m/2⌋`: largest `|(x, y)|` between non-antipodal minimal vectors,
    /// and between minimal vectors and minimal dual-class representatives.
    pub fn bound(&self) -> usize {
        (self.minimum / 2) as usize
    }

    /// `r = (t-1)/2` even-moment equations.
    pub fn equations(&self) -> usize {
        ((self.strength - 1) / 2) as usize
    }

    /// True when the count system is square (one equation per unknown).
    pub fn is_square(&self) -> bool {
        self.equations() == self.bound() + 1
    }

    fn moment_constants(&self, n: u32) -> Result<Vec<BigRational>> {
        (1..=self.equations() as u32)
            .map(|i| design_constant(n, i))
            .collect()
    }
}

/// Linear system in `(s_1, …, s_k, s)` for a given dimension.
///
/// Row `i` (1-based) reads `Σ_j j^{2i} s_j − c_i m^{2i} s = −m^{2i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSystem {
    pub problem: DesignProblem,
    pub n: u32,
    pub matrix: QMatrix,
    pub rhs: Vec<BigRational>,
}

impl CountSystem {
    pub fn unknown_labels(&self) -> Vec<String> {
        let mut labels: Vec<String> = (1..=self.problem.bound())
            .map(|j| format!("s_{j}"))
            .collect();
        labels.push("s".into());
        labels
    }

    /// Exact check of a candidate `(s_1..s_k, s)`.
    pub fn is_satisfied_by(&self, counts: &[BigInt], s: &BigInt) -> bool {
        if counts.len() != self.problem.bound() {
            return false;
        }
        let x: Vec<BigRational> = counts
            .iter()
            .chain(std::iter::once(s))
            .map(|v| BigRational::from_integer(v.clone()))
            .collect();
        self.matrix
            .mul_vec(&x)
            .map(|lhs| lhs == self.rhs)
            .unwrap_or(false)
    }
}

pub fn build_count_system(problem: DesignProblem, n: u32) -> Result<CountSystem> {
    let k = problem.bound();
    let r = problem.equations();
    let m = BigInt::from(problem.minimum);
    let constants = problem.moment_constants(n)?;
    let mut matrix = QMatrix::zeros(r, k + 1);
    let mut rhs = Vec::with_capacity(r);
    for (row, c) in constants.iter().enumerate() {
        let i = row as u32 + 1;
        for j in 1..=k {
            matrix[(row, j - 1)] = int(j as i64).pow(2 * i as i32);
        }
        let m_pow = BigRational::from_integer(num_traits::pow(m.clone(), 2 * i as usize));
        matrix[(row, k)] = -(c * &m_pow);
        rhs.push(-m_pow);
    }
    Ok(CountSystem {
        problem,
        n,
        matrix,
        rhs,
    })
}

/// Linear system in the dual-class counts `t_1..t_k` with right-hand sides in
/// `Q[t]`, `t` the norm of a minimal dual-class representative.
///
/// Row `i` reads `Σ_j j^{2i} t_j = c_i s m^i t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSystem {
    pub problem: DesignProblem,
    pub n: u32,
    pub s: BigInt,
    pub matrix: QMatrix,
    pub rhs: Vec<QPolynomial>,
}

impl DualSystem {
    /// Right-hand side evaluated at a concrete norm.
    pub fn rhs_at(&self, t: &BigRational) -> Vec<BigRational> {
        self.rhs.iter().map(|p| p.eval(t)).collect()
    }
}

pub fn build_dual_system(problem: DesignProblem, n: u32, s: &BigInt) -> Result<DualSystem> {
    if s <= &BigInt::zero() {
        return Err(Error::Domain(format!(
            "half kissing number {s} is not positive"
        )));
    }
    let k = problem.bound();
    let r = problem.equations();
    let constants = problem.moment_constants(n)?;
    let mut matrix = QMatrix::zeros(r, k);
    let mut rhs = Vec::with_capacity(r);
    let s_q = BigRational::from_integer(s.clone());
    for (row, c) in constants.iter().enumerate() {
        let i = row + 1;
        for j in 1..=k {
            matrix[(row, j - 1)] = int(j as i64).pow(2 * i as i32);
        }
        let m_pow = int(problem.minimum as i64).pow(i as i32);
        rhs.push(QPolynomial::monomial(c * &s_q * m_pow, i));
    }
    Ok(DualSystem {
        problem,
        n,
        s: s.clone(),
        matrix,
        rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn minimum_six_solutions() -> Vec<(u32, i64, [i64; 3])> {
        // counts (s_1, s_2, s_3) obtained by solving the systems; s from the published table
        vec![
            (26, 69888, [34992, 10935, 2000]),
            (36, 1149120, [565704, 127575, 8120]),
            (44, 8500800, [4137804, 658287, 20468]),
            (46, 13395200, [6485184, 944055, 24640]),
            (48, 26208000, [12608784, 1678887, 36848]),
            (49, 50992095, [24447744, 3112830, 62720]),
        ]
    }

    #[test]
    fn design_constants() {
        assert_eq!(design_constant(17, 0).unwrap(), int(1));
        assert_eq!(design_constant(26, 1).unwrap(), rat(1, 26));
        assert_eq!(design_constant(26, 2).unwrap(), rat(3, 728));
        assert_eq!(design_constant(48, 4).unwrap(), rat(105, 48 * 50 * 52 * 54));
        assert!(matches!(design_constant(0, 1), Err(Error::Domain(_))));
        assert_eq!(design_constant(0, 0).unwrap(), int(1));
    }

    #[test]
    fn design_constant_recurrence() {
        for n in 1..60u32 {
            for i in 1..8u32 {
                let lhs = design_constant(n, i).unwrap() * int((n + 2 * (i - 1)) as i64);
                let rhs = design_constant(n, i - 1).unwrap() * int(2 * i as i64 - 1);
                assert_eq!(lhs, rhs, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn problem_shapes() {
        let p = DesignProblem::new(7, 9).unwrap();
        assert_eq!((p.bound(), p.equations()), (3, 4));
        assert!(p.is_square());
        let p = DesignProblem::new(2, 7).unwrap();
        assert_eq!((p.bound(), p.equations()), (1, 3));
        assert!(!p.is_square());
        assert!(DesignProblem::new(6, 8).is_err());
        assert!(DesignProblem::new(8, 9).is_err());
        assert!(DesignProblem::new(0, 9).is_err());
    }

    #[test]
    fn count_system_rows() {
        let p = DesignProblem::new(6, 9).unwrap();
        let sys = build_count_system(p, 26).unwrap();
        assert_eq!((sys.matrix.rows(), sys.matrix.cols()), (4, 4));
        let row: Vec<_> = sys.matrix.row(0).to_vec();
        assert_eq!(row, vec![int(1), int(4), int(9), -rat(36, 26)]);
        assert_eq!(sys.rhs[0], int(-36));
        assert_eq!(sys.matrix[(3, 2)], int(3i64.pow(8)));
        assert_eq!(
            sys.matrix[(3, 3)],
            -(design_constant(26, 4).unwrap() * int(6i64.pow(8)))
        );
        assert_eq!(sys.unknown_labels(), ["s_1", "s_2", "s_3", "s"]);

        let sys = build_count_system(DesignProblem::new(8, 11).unwrap(), 56).unwrap();
        assert_eq!((sys.matrix.rows(), sys.matrix.cols()), (5, 5));
        let first: Vec<_> = sys.matrix.row(0)[..4].to_vec();
        assert_eq!(first, vec![int(1), int(4), int(9), int(16)]);

        let sys = build_count_system(DesignProblem::new(11, 13).unwrap(), 30).unwrap();
        assert_eq!((sys.matrix.rows(), sys.matrix.cols()), (6, 6));
    }

    #[test]
    fn published_counts_satisfy_count_systems() {
        let p = DesignProblem::new(6, 9).unwrap();
        for (n, s, counts) in minimum_six_solutions() {
            let sys = build_count_system(p, n).unwrap();
            let counts: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
            assert!(sys.is_satisfied_by(&counts, &BigInt::from(s)), "n={n}");
            assert!(!sys.is_satisfied_by(&counts, &BigInt::from(s + 1)));
        }
        // E8: 56 minimal vectors at inner product ±1 with a fixed one
        let sys = build_count_system(DesignProblem::new(2, 7).unwrap(), 8).unwrap();
        assert!(sys.is_satisfied_by(&[BigInt::from(56)], &BigInt::from(120)));
    }

    #[test]
    fn dual_system_rhs() {
        let p = DesignProblem::new(6, 9).unwrap();
        let d = build_dual_system(p, 26, &BigInt::from(69888)).unwrap();
        assert_eq!(d.rhs[0], QPolynomial::monomial(int(16128), 1));
        for (i, poly) in d.rhs.iter().enumerate() {
            assert_eq!(poly.degree(), Some(i + 1));
            assert!(poly.eval(&int(0)).is_zero());
        }
        assert_eq!((d.matrix.rows(), d.matrix.cols()), (4, 3));

        let d = build_dual_system(
            DesignProblem::new(8, 11).unwrap(),
            56,
            &BigInt::from(237875400),
        )
        .unwrap();
        assert_eq!((d.matrix.rows(), d.matrix.cols()), (5, 4));
        assert!(build_dual_system(p, 26, &BigInt::from(0)).is_err());
    }
}
