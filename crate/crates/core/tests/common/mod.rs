//! Independent oracles shared by the integration tests and the acceptance suite.
#![allow(dead_code, clippy::too_many_arguments, clippy::needless_range_loop)]

use designlat::exactmath::BigRational;
use designlat::feasibility::FeasibleSolution;
use designlat::lattice::GramMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `c_i = Π_{k<i} (1+2k)/(n+2k)` as a reduced (numerator, denominator) pair.
fn constant(n: u32, i: u32) -> (BigInt, BigInt) {
    let mut p = BigInt::one();
    let mut q = BigInt::one();
    for k in 0..i {
        p *= 1 + 2 * k;
        q *= n + 2 * k;
    }
    let g = p.gcd(&q);
    (p / &g, q / g)
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Integer rows `[1^{2i}·q, .., k^{2i}·q, -p·m^{2i} | -q·m^{2i}]` (row i scaled by the denominator q of c_i).
fn integer_system(m: u32, t: u32, n: u32) -> Vec<Vec<BigInt>> {
    let k = m / 2;
    let r = (t - 1) / 2;
    (1..=r)
        .map(|i| {
            let (p, q) = constant(n, i);
            let mp = BigInt::from(m).pow(2 * i);
            let mut row: Vec<BigInt> = (1..=k).map(|j| BigInt::from(j).pow(2 * i) * &q).collect();
            row.push(-(p * &mp));
            row.push(-(q * mp));
            row
        })
        .collect()
}

/// `Some(solution)` with `s ≥ 1` and integral non-negative counts, else `None`;
/// `Err(())` when the leading block is singular.
pub fn oracle(m: u32, t: u32, n: u32) -> Result<Option<FeasibleSolution>, ()> {
    let rows = integer_system(m, t, n);
    let u = (m / 2) as usize + 1;
    let block: Vec<Vec<BigInt>> = rows[..u].iter().map(|r| r[..u].to_vec()).collect();
    let det = bareiss_det(block.clone());
    if det.is_zero() {
        return Err(());
    }
    let mut x = Vec::with_capacity(u);
    for c in 0..u {
        let mut b = block.clone();
        for (i, row) in b.iter_mut().enumerate() {
            row[c] = rows[i][u].clone();
        }
        let num = bareiss_det(b);
        if !(&num % &det).is_zero() {
            return Ok(None);
        }
        x.push(num / &det);
    }
    for row in &rows[u..] {
        let lhs: BigInt = row[..u].iter().zip(&x).map(|(a, b)| a * b).sum();
        if lhs != row[u] {
            return Ok(None);
        }
    }
    let s = x.pop().unwrap();
    if !s.is_positive() || x.iter().any(Signed::is_negative) {
        return Ok(None);
    }
    Ok(Some(FeasibleSolution { n, s, counts: x }))
}

/// All nonzero `x` with `xᵀGx ≤ bound`, enumerated in exact arithmetic from the
/// factorisation `xᵀGx = Σ_i d_i (x_i + Σ_{j>i} μ_ij x_j)²`, where the `d_i` are
/// successive Schur complements. Returns `(minimum, count at minimum)` counting `±x` once.
pub fn exact_minimum(g: &GramMatrix) -> (i64, usize) {
    let n = g.dimension();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| q(g.get(i, j))).collect())
        .collect();
    let mut d = vec![BigRational::zero(); n];
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        d[i] = a[i][i].clone();
        for j in i + 1..n {
            mu[i][j] = &a[i][j] / &d[i];
        }
        for r in i + 1..n {
            for c in i + 1..n {
                a[r][c] = &a[r][c] - &mu[i][r] * &d[i] * &mu[i][c];
            }
        }
    }
    let bound = (0..n).map(|i| g.get(i, i)).min().unwrap();
    let mut norms: Vec<i64> = Vec::new();
    let mut x = vec![0i64; n];
    fn go(
        i: usize,
        used: BigRational,
        zero_above: bool,
        x: &mut Vec<i64>,
        d: &[BigRational],
        mu: &[Vec<BigRational>],
        bound: &BigRational,
        norms: &mut Vec<i64>,
    ) {
        let n = x.len();
        let c: BigRational = (i + 1..n).map(|j| &mu[i][j] * q(x[j])).sum();
        let room = bound - &used;
        let cost = |v: i64| &d[i] * (q(v) + &c) * (q(v) + &c);
        let start = (-c.clone()).floor().to_integer().to_i64().unwrap();
        let mut vals = Vec::new();
        let mut v = start;
        while cost(v) <= room {
            vals.push(v);
            v -= 1;
        }
        v = start + 1;
        while cost(v) <= room {
            vals.push(v);
            v += 1;
        }
        for v in vals {
            if zero_above && v < 0 {
                continue;
            }
            x[i] = v;
            let next = &used + cost(v);
            let z = zero_above && v == 0;
            if i == 0 {
                if !z {
                    norms.push(next.to_integer().to_i64().unwrap());
                }
            } else {
                go(i - 1, next, z, x, d, mu, bound, norms);
            }
        }
        x[i] = 0;
    }
    go(
        n - 1,
        BigRational::zero(),
        true,
        &mut x,
        &d,
        &mu,
        &q(bound),
        &mut norms,
    );
    let min = *norms.iter().min().unwrap();
    (min, norms.iter().filter(|&&v| v == min).count())
}
