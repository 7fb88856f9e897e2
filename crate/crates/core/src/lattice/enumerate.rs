//! Fincke–Pohst enumeration of minimal vectors.
//!
//! The search runs in floating point on the decomposition
//! `xᵀGx = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)²` with radius `B + 1/2`, where `B` is
//! the smallest diagonal entry. Norms are integers, so the extra half unit admits
//! no additional lattice vectors while absorbing rounding in the partial sums; the
//! decomposition is audited against `G` before use and every hit is re-checked in
//! exact integer arithmetic.

use serde::{Deserialize, Serialize};

use super::GramMatrix;
use crate::error::{Error, Result};

/// Search nodes visited before giving up with a resource error.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Minimal vectors of a lattice, one per antipodal pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortVectorSet {
    pub dimension: usize,
    pub minimum: i64,
    /// Coordinates in the Gram basis; the first nonzero coordinate of each is
    /// positive, and the list is sorted lexicographically.
    pub vectors: Vec<Vec<i64>>,
}

impl ShortVectorSet {
    /// `s = |X|`
    pub fn half_kissing_number(&self) -> usize {
        self.vectors.len()
    }

    pub fn kissing_number(&self) -> usize {
        2 * self.vectors.len()
    }
}

pub fn minimal_vectors(g: &GramMatrix) -> Result<ShortVectorSet> {
    minimal_vectors_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn minimal_vectors_with_budget(g: &GramMatrix, node_budget: u64) -> Result<ShortVectorSet> {
    let n = g.dimension();
    let bound = (0..n).map(|i| g.get(i, i)).min().expect("nonempty");
    let mut found = short_vectors(g, bound, node_budget)?;
    let minimum = found.iter().map(|(_, norm)| *norm).min().ok_or_else(|| {
        Error::Structural("no vector of norm at most the smallest diagonal entry".into())
    })?;
    found.retain(|(_, norm)| *norm == minimum);
    let mut vectors: Vec<Vec<i64>> = found.into_iter().map(|(v, _)| v).collect();
    vectors.sort();
    Ok(ShortVectorSet {
        dimension: n,
        minimum,
        vectors,
    })
}

/// All nonzero `x` with `xᵀGx ≤ bound`, one per `±x`, with exact norms.
pub fn short_vectors(g: &GramMatrix, bound: i64, node_budget: u64) -> Result<Vec<(Vec<i64>, i64)>> {
    let n = g.dimension();
    // reversed order puts coordinate 0 at the top of the search tree, so the
    // "first nonzero coordinate positive" rule prunes half the tree
    let rev = |i: usize| n - 1 - i;
    let h: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| g.get(rev(i), rev(j)) as f64).collect())
        .collect();
    let q = decompose(&h)?;

    let mut search = Search {
        n,
        q: &q,
        radius: bound as f64 + 0.5,
        x: vec![0i64; n],
        nodes: 0,
        budget: node_budget,
        hits: Vec::new(),
    };
    search.level(n - 1, 0.0, true)?;

    let mut out = Vec::with_capacity(search.hits.len());
    for y in search.hits {
        let x: Vec<i64> = (0..n).map(|i| y[rev(i)]).collect();
        let norm = g.norm(&x);
        if norm <= bound as i128 {
            out.push((x, norm as i64));
        }
    }
    Ok(out)
}

/// `q[i][i]` diagonal weights and `q[i][j]`, `j > i`, multipliers.
fn decompose(h: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = h.len();
    let mut q = vec![vec![0.0; n]; n];
    for i in 0..n {
        let mut d = h[i][i];
        for k in 0..i {
            d -= q[k][k] * q[k][i] * q[k][i];
        }
        if d <= 0.0 {
            return Err(Error::Input(
                "Gram matrix numerically not positive definite".into(),
            ));
        }
        q[i][i] = d;
        for j in i + 1..n {
            let mut v = h[i][j];
            for k in 0..i {
                v -= q[k][k] * q[k][i] * q[k][j];
            }
            q[i][j] = v / d;
        }
    }
    // reconstruct h = Uᵀ D U (unit diagonal U) and make sure rounding stayed far
    // below the half-unit slack
    let unit = |k: usize, i: usize| if k == i { 1.0 } else { q[k][i] };
    let scale = h.iter().flatten().fold(1.0f64, |a, &b| a.max(b.abs()));
    for i in 0..n {
        for j in i..n {
            let v: f64 = (0..=i).map(|k| q[k][k] * unit(k, i) * unit(k, j)).sum();
            if (v - h[i][j]).abs() > 1e-9 * scale {
                return Err(Error::Input(
                    "Gram matrix too ill-conditioned for certified enumeration".into(),
                ));
            }
        }
    }
    Ok(q)
}

struct Search<'a> {
    n: usize,
    q: &'a [Vec<f64>],
    radius: f64,
    x: Vec<i64>,
    nodes: u64,
    budget: u64,
    hits: Vec<Vec<i64>>,
}

impl Search<'_> {
    /// Enumerates `x[i]` given `x[i+1..]`, with `used` the norm consumed so far.
    /// `all_zero` is true when every coordinate above `i` is zero.
    fn level(&mut self, i: usize, used: f64, all_zero: bool) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Resource(format!(
                "minimal-vector enumeration exceeded {} search nodes",
                self.budget
            )));
        }
        let qi = &self.q[i];
        let center: f64 = -(i + 1..self.n)
            .map(|j| qi[j] * self.x[j] as f64)
            .sum::<f64>();
        let room = (self.radius - used) / qi[i];
        if room < 0.0 {
            return Ok(());
        }
        let half = room.sqrt();
        let mut lo = (center - half).ceil() as i64;
        let hi = (center + half).floor() as i64;
        if all_zero {
            lo = lo.max(0);
        }
        for v in lo..=hi {
            let diff = v as f64 - center;
            let next = used + qi[i] * diff * diff;
            if next > self.radius {
                continue;
            }
            self.x[i] = v;
            let still_zero = all_zero && v == 0;
            if i == 0 {
                if !still_zero {
                    self.hits.push(self.x.clone());
                }
            } else {
                self.level(i - 1, next, still_zero)?;
            }
        }
        self.x[i] = 0;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_lattice() {
        let set = minimal_vectors(&GramMatrix::identity(5)).unwrap();
        assert_eq!(set.minimum, 1);
        assert_eq!(set.half_kissing_number(), 5);
        let mut expected: Vec<Vec<i64>> = (0..5)
            .map(|i| (0..5).map(|j| i64::from(i == j)).collect())
            .collect();
        expected.sort();
        assert_eq!(set.vectors, expected);
    }

    #[test]
    fn hexagonal_lattice() {
        let g = GramMatrix::parse("2\n2 -1\n-1 2\n").unwrap();
        let set = minimal_vectors(&g).unwrap();
        assert_eq!(set.minimum, 2);
        assert_eq!(set.vectors, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn short_vectors_up_to_bound() {
        let all = short_vectors(&GramMatrix::identity(2), 2, 1000).unwrap();
        let mut vs: Vec<_> = all.into_iter().collect();
        vs.sort();
        assert_eq!(
            vs,
            vec![
                (vec![0, 1], 1),
                (vec![1, -1], 2),
                (vec![1, 0], 1),
                (vec![1, 1], 2)
            ]
        );
    }

    #[test]
    fn budget_is_enforced() {
        let err = minimal_vectors_with_budget(&GramMatrix::identity(8), 5).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }
}
