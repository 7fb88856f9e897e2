use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use super::BigRational;
use crate::error::{Error, Result};

/// Dense row-major matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

/// Outcome of [`QMatrix::solve_square`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareSolution {
    Unique(Vec<BigRational>),
    Singular { rank: usize },
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| super::int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Leading `rows x cols` block.
    pub fn leading_block(&self, rows: usize, cols: usize) -> QMatrix {
        let mut out = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Copy with column `col` replaced by `values`.
    pub fn with_column(&self, col: usize, values: &[BigRational]) -> QMatrix {
        let mut out = self.clone();
        for (i, v) in values.iter().enumerate() {
            out[(i, col)] = v.clone();
        }
        out
    }

    /// Matrix with `b` appended as an extra column.
    pub fn augmented(&self, b: &[BigRational]) -> Result<QMatrix> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.push(b[i].clone());
        }
        QMatrix::new(self.rows, self.cols + 1, entries)
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Reduces a copy to row echelon form. Returns the echelon matrix, the pivot
    /// columns and the parity of the row swaps performed.
    fn echelon(&self) -> (QMatrix, Vec<usize>, bool) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut odd_swaps = false;
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                m.swap_rows(p, row);
                odd_swaps = !odd_swaps;
            }
            let pivot = m[(row, col)].clone();
            for r in row + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &pivot;
                for c in col..m.cols {
                    let delta = &factor * &m[(row, c)];
                    m[(r, c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, odd_swaps)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn determinant(&self) -> Result<BigRational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let (m, pivots, odd_swaps) = self.echelon();
        if pivots.len() < self.rows {
            return Ok(BigRational::zero());
        }
        let mut det = (0..self.rows).fold(BigRational::one(), |acc, i| acc * &m[(i, i)]);
        if odd_swaps {
            det = -det;
        }
        Ok(det)
    }

    /// Exact solve of `self * x = b` for square `self`.
    pub fn solve_square(&self, b: &[BigRational]) -> Result<SquareSolution> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "solve_square on a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.augmented(b)?;
        let (m, pivots, _) = aug.echelon();
        let rank = pivots.iter().filter(|&&c| c < n).count();
        if rank < n {
            return Ok(SquareSolution::Singular { rank });
        }
        let mut x = vec![BigRational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = m[(i, n)].clone();
            for j in i + 1..n {
                acc -= &m[(i, j)] * &x[j];
            }
            x[i] = acc / &m[(i, i)];
        }
        Ok(SquareSolution::Unique(x))
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;

    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(super::format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_i64_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn assert_resubstitutes(a: &QMatrix, b: &[BigRational]) -> Vec<BigRational> {
        match a.solve_square(b).unwrap() {
            SquareSolution::Unique(x) => {
                assert_eq!(a.mul_vec(&x).unwrap(), b);
                x
            }
            other => panic!("expected a unique solution, got {other:?}"),
        }
    }

    #[test]
    fn solves_two_by_two() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let x = assert_resubstitutes(&a, &ints(&[5, 6]));
        assert_eq!(x, vec![int(-4), rat(9, 2)]);
    }

    #[test]
    fn identity_solve_returns_rhs() {
        let b = vec![rat(1, 3), int(-7), rat(22, 5), int(0)];
        let x = assert_resubstitutes(&QMatrix::identity(4), &b);
        assert_eq!(x, b);
    }

    #[test]
    fn singular_reports_rank() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(
            a.solve_square(&ints(&[1, 2])).unwrap(),
            SquareSolution::Singular { rank: 1 }
        );
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn needs_row_swap() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_resubstitutes(&a, &ints(&[1, 2, 3]));
        assert_eq!(a.determinant().unwrap(), int(-2));
    }

    #[test]
    fn determinants() {
        assert_eq!(QMatrix::identity(4).determinant().unwrap(), int(1));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).determinant().unwrap(), int(-2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant().unwrap(), int(0));
    }

    #[test]
    fn shape_errors() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(a.determinant(), Err(Error::Dimension(_))));
        assert!(matches!(
            a.solve_square(&ints(&[1, 2])),
            Err(Error::Dimension(_))
        ));
        let sq = m(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            sq.solve_square(&ints(&[1])),
            Err(Error::Dimension(_))
        ));
        assert!(QMatrix::new(2, 2, ints(&[1, 2, 3])).is_err());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec((-6i64..=6, 1i64..=3), n * n).prop_map(move |v| {
            QMatrix::new(n, n, v.into_iter().map(|(p, q)| rat(p, q)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn determinant_is_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (small_matrix(n), small_matrix(n)))) {
            let ab = &a * &b;
            prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        }

        #[test]
        fn unique_solutions_resubstitute(a in (1usize..=5).prop_flat_map(small_matrix), seed in proptest::collection::vec(-20i64..=20, 5)) {
            let b: Vec<BigRational> = seed[..a.rows()].iter().map(|&x| int(x)).collect();
            match a.solve_square(&b).unwrap() {
                SquareSolution::Unique(x) => {
                    prop_assert!(!a.determinant().unwrap().is_zero());
                    prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
                }
                SquareSolution::Singular { rank } => {
                    prop_assert!(a.determinant().unwrap().is_zero());
                    prop_assert_eq!(rank, a.rank());
                }
            }
        }
    }
}
