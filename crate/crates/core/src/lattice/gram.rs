use std::fmt;
use std::path::Path;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{BigRational, QMatrix};

/// Gram matrix of an integral lattice: symmetric, integral, positive definite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    n: usize,
    entries: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct GramJson {
    n: usize,
    gram: Vec<Vec<i64>>,
}

impl GramMatrix {
    /// Validates symmetry and positive definiteness (all leading principal
    /// minors positive, computed exactly).
    pub fn new(n: usize, entries: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("Gram matrix of dimension 0".into()));
        }
        if entries.len() != n * n {
            return Err(Error::Input(format!(
                "{} entries for a {n}x{n} Gram matrix",
                entries.len()
            )));
        }
        let g = GramMatrix { n, entries };
        for i in 0..n {
            for j in 0..i {
                if g.get(i, j) != g.get(j, i) {
                    return Err(Error::Input(format!(
                        "Gram matrix not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        if let Some(k) = g.leading_minors().iter().position(|d| !d.is_positive()) {
            return Err(Error::Input(format!(
                "Gram matrix not positive definite: leading minor of order {} is not positive",
                k + 1
            )));
        }
        Ok(g)
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Input("Gram rows must all have length n".into()));
        }
        Self::new(n, rows.concat())
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        GramMatrix { n, entries }
    }

    /// Plain text: optional `#` comment lines, then `n`, then `n` rows of `n`
    /// integers. Text after `#` on any line is ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Input("empty Gram file".into()))?
            .parse()
            .map_err(|e| Error::Input(format!("bad dimension: {e}")))?;
        let entries = tokens
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|e| Error::Input(format!("bad entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, entries)
    }

    /// `{"n": 2, "gram": [[1, 0], [0, 1]]}`
    pub fn parse_json(text: &str) -> Result<Self> {
        let parsed: GramJson =
            serde_json::from_str(text).map_err(|e| Error::Input(format!("bad Gram JSON: {e}")))?;
        if parsed.gram.len() != parsed.n {
            return Err(Error::Input(format!(
                "\"n\" is {} but {} rows given",
                parsed.n,
                parsed.gram.len()
            )));
        }
        Self::from_rows(&parsed.gram)
    }

    /// Either format, chosen by the first non-blank character.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        let rows = (0..self.n).map(|i| self.row(i).to_vec()).collect();
        serde_json::to_string(&GramJson {
            n: self.n,
            gram: rows,
        })
        .expect("Gram JSON")
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// `xᵀ G y`
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i128 {
        let mut acc = 0i128;
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            let gy: i128 = self
                .row(i)
                .iter()
                .zip(y)
                .map(|(&g, &v)| g as i128 * v as i128)
                .sum();
            acc += x[i] as i128 * gy;
        }
        acc
    }

    pub fn norm(&self, x: &[i64]) -> i128 {
        self.inner(x, x)
    }

    /// `G x` as a coordinate vector.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(&g, &v)| g * v).sum())
            .collect()
    }

    pub fn is_even(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) % 2 == 0)
    }

    pub fn determinant(&self) -> BigRational {
        self.to_qmatrix().determinant().expect("square")
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        let rows: Vec<&[i64]> = (0..self.n).map(|i| self.row(i)).collect();
        QMatrix::from_i64_rows(&rows).expect("square")
    }

    /// Leading principal minors `det(G[..k, ..k])`, `k = 1..=n`, from one pass of
    /// elimination without row exchanges (zero pivots stop the pass).
    fn leading_minors(&self) -> Vec<BigRational> {
        let mut m = self.to_qmatrix();
        let mut minors = Vec::with_capacity(self.n);
        let mut running = BigRational::from_integer(1.into());
        for k in 0..self.n {
            let pivot = m[(k, k)].clone();
            running *= &pivot;
            minors.push(running.clone());
            if pivot.is_zero() {
                minors.resize(self.n, BigRational::zero());
                break;
            }
            for r in k + 1..self.n {
                if m[(r, k)].is_zero() {
                    continue;
                }
                let f = &m[(r, k)] / &pivot;
                for c in k..self.n {
                    let d = &f * &m[(k, c)];
                    m[(r, c)] -= d;
                }
            }
        }
        minors
    }

    /// `Bᵀ G B` for an integer matrix `B` whose columns are the new basis.
    pub fn transform(&self, basis_columns: &[Vec<i64>]) -> Result<GramMatrix> {
        let k = basis_columns.len();
        let mut entries = Vec::with_capacity(k * k);
        for a in basis_columns {
            for b in basis_columns {
                let v = self.inner(a, b);
                entries.push(
                    i64::try_from(v)
                        .map_err(|_| Error::Resource("Gram entry overflows i64".into()))?,
                );
            }
        }
        GramMatrix::new(k, entries)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(i64::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
