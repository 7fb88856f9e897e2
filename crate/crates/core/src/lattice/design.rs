//! Design-strength certificates for concrete lattices.
//!
//! For an antipodal set `S` of norm-`m` vectors, `(x·y)^{2i}` expands into
//! Gegenbauer polynomials of degrees `0, 2, …, 2i` with positive coefficients,
//! and the pair sum of each Gegenbauer term is non-negative and vanishes exactly
//! when the harmonic moments of that degree do. Hence
//! `Σ_{x,y∈S} (x,y)^{2i} = c_i |S|² m^{2i}` holds iff `S` is a `(2i+1)`-design.
//! All pair sums come from the exact inner-product distribution over `X × X`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{minimal_vectors, GramMatrix, ShortVectorSet};
use crate::error::{Error, Result};
use crate::exactmath::{serde_q, BigRational};
use crate::moments::design_constant;

/// Ordered pairs of `X × X` allowed without `force`.
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairBudget {
    pub max_pairs: u64,
    pub force: bool,
}

impl Default for PairBudget {
    fn default() -> Self {
        PairBudget {
            max_pairs: DEFAULT_PAIR_BUDGET,
            force: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentCheck {
    pub i: u32,
    /// `Σ_{x,y∈S} (x,y)^{2i}`
    #[serde(with = "serde_q::int")]
    pub pair_sum: BigInt,
    /// `c_i |S|² m^{2i}`
    #[serde(with = "serde_q")]
    pub target: BigRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignCertificate {
    pub dimension: usize,
    pub minimum: i64,
    pub kissing_number: usize,
    pub requested_strength: u32,
    /// Whether `S` is a `requested_strength`-design.
    pub passes: bool,
    /// Largest odd `t ≤ requested_strength` for which `S` is a `t`-design.
    pub strength: u32,
    pub moments: Vec<MomentCheck>,
    /// First moment where equality fails, if any.
    pub failing_moment: Option<u32>,
    /// `(a, #{(x, y) ∈ X × X : (x, y) = a})` for every value that occurs.
    pub inner_product_distribution: Vec<(i64, u64)>,
}

pub fn verify_design(
    g: &GramMatrix,
    strength: u32,
    budget: PairBudget,
) -> Result<DesignCertificate> {
    let set = minimal_vectors(g)?;
    verify_design_on(g, &set, strength, budget)
}

/// Certificate for a minimal-vector set that has already been enumerated.
pub fn verify_design_on(
    g: &GramMatrix,
    set: &ShortVectorSet,
    strength: u32,
    budget: PairBudget,
) -> Result<DesignCertificate> {
    if strength.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "design strength {strength} must be odd"
        )));
    }
    let s = set.half_kissing_number() as u64;
    let pairs = s.saturating_mul(s);
    if pairs > budget.max_pairs && !budget.force {
        return Err(Error::Resource(format!(
            "{pairs} vector pairs exceed the budget of {}; rerun with --force",
            budget.max_pairs
        )));
    }
    let distribution = pair_distribution(g, set)?;
    let m = set.minimum;
    let top = (strength - 1) / 2;
    let total = BigRational::from_integer(BigInt::from(2 * s));
    let mut moments = Vec::with_capacity(top as usize);
    for i in 1..=top {
        let mut acc = BigInt::zero();
        for &(a, count) in &distribution {
            acc += BigInt::from(count) * num_traits::pow(BigInt::from(a), 2 * i as usize);
        }
        // S = X ∪ -X and the summand is even in each argument
        let pair_sum: BigInt = acc * 4u32;
        let target = design_constant(set.dimension as u32, i)?
            * &total
            * &total
            * BigRational::from_integer(num_traits::pow(BigInt::from(m), 2 * i as usize));
        let holds = BigRational::from_integer(pair_sum.clone()) == target;
        moments.push(MomentCheck {
            i,
            pair_sum,
            target,
            holds,
        });
    }
    let failing_moment = moments.iter().find(|c| !c.holds).map(|c| c.i);
    let passes = moments.last().is_none_or(|c| c.holds);
    if passes && failing_moment.is_some() {
        return Err(Error::Structural(
            "top pair moment balanced while a lower one is not".into(),
        ));
    }
    let strength_reached = match failing_moment {
        Some(i) => 2 * i - 1,
        None => strength,
    };
    Ok(DesignCertificate {
        dimension: set.dimension,
        minimum: m,
        kissing_number: set.kissing_number(),
        requested_strength: strength,
        passes,
        strength: strength_reached,
        moments,
        failing_moment,
        inner_product_distribution: distribution,
    })
}

/// Exact distribution of `(x, y)` over ordered pairs of `X × X`.
pub fn pair_distribution(g: &GramMatrix, set: &ShortVectorSet) -> Result<Vec<(i64, u64)>> {
    let m = set.minimum;
    let width = (2 * m + 1) as usize;
    let images: Vec<Vec<i64>> = set.vectors.iter().map(|v| g.apply(v)).collect();
    let counts = match PackedVectors::pack(&set.vectors, &images) {
        Some(packed) => packed.upper_triangle_counts(m),
        None => wide_upper_triangle_counts(g, set, m),
    };
    let Some(mut counts) = counts else {
        return Err(Error::Structural(
            "inner product of minimal vectors exceeds the minimum".into(),
        ));
    };
    // off-diagonal pairs were counted once; the diagonal contributes (x, x) = m
    for c in counts.iter_mut() {
        *c *= 2;
    }
    counts[width - 1] += set.vectors.len() as u64;
    Ok(counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(idx, c)| (idx as i64 - m, c))
        .collect())
}

/// Vectors and their Gram images as padded `i16` rows, for a dot-product kernel
/// that vectorizes well.
struct PackedVectors {
    stride: usize,
    coords: Vec<i16>,
    images: Vec<i16>,
}

const LANES: usize = 8;

impl PackedVectors {
    fn pack(vectors: &[Vec<i64>], images: &[Vec<i64>]) -> Option<Self> {
        let n = vectors.first().map_or(0, Vec::len);
        let stride = n.div_ceil(LANES).max(1) * LANES;
        let max_c = vectors
            .iter()
            .flatten()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0);
        let max_i = images
            .iter()
            .flatten()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0);
        // keep each product in i16 range inputs and the full sum inside i32
        if max_c > i16::MAX as u64 || max_i > i16::MAX as u64 {
            return None;
        }
        if (n as u64).checked_mul(max_c * max_i)? >= i32::MAX as u64 {
            return None;
        }
        let pad = |rows: &[Vec<i64>]| {
            let mut out = vec![0i16; rows.len() * stride];
            for (r, row) in rows.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    out[r * stride + c] = v as i16;
                }
            }
            out
        };
        Some(PackedVectors {
            stride,
            coords: pad(vectors),
            images: pad(images),
        })
    }

    fn row<'a>(&self, data: &'a [i16], i: usize) -> &'a [i16] {
        &data[i * self.stride..(i + 1) * self.stride]
    }

    /// Counts `(x_i, x_j)` over `i < j`, indexed by value `+ m`. `None` if some
    /// inner product falls outside `[-m, m]`.
    fn upper_triangle_counts(&self, m: i64) -> Option<Vec<u64>> {
        let count = self.coords.len() / self.stride;
        let width = (2 * m + 1) as usize;
        (0..count)
            .into_par_iter()
            .map(|i| {
                let mut local = vec![0u64; width];
                let x = self.row(&self.coords, i);
                for j in i + 1..count {
                    let y = self.row(&self.images, j);
                    let ip = dot_i16(x, y) as i64;
                    let idx = ip + m;
                    if idx < 0 || idx >= width as i64 {
                        return None;
                    }
                    local[idx as usize] += 1;
                }
                Some(local)
            })
            .try_reduce(
                || vec![0u64; width],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    Some(a)
                },
            )
    }
}

#[inline]
fn dot_i16(x: &[i16], y: &[i16]) -> i32 {
    let mut acc = [0i32; LANES];
    for (xc, yc) in x.chunks_exact(LANES).zip(y.chunks_exact(LANES)) {
        for l in 0..LANES {
            acc[l] += xc[l] as i32 * yc[l] as i32;
        }
    }
    acc.iter().sum()
}

fn wide_upper_triangle_counts(g: &GramMatrix, set: &ShortVectorSet, m: i64) -> Option<Vec<u64>> {
    let width = (2 * m + 1) as usize;
    let vs = &set.vectors;
    (0..vs.len())
        .into_par_iter()
        .map(|i| {
            let mut local = vec![0u64; width];
            let gx = g.apply(&vs[i]);
            for y in &vs[i + 1..] {
                let ip: i128 = gx.iter().zip(y).map(|(&a, &b)| a as i128 * b as i128).sum();
                if ip.abs() > m as i128 {
                    return None;
                }
                local[(ip as i64 + m) as usize] += 1;
            }
            Some(local)
        })
        .try_reduce(
            || vec![0u64; width],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                Some(a)
            },
        )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileMoment {
    pub i: u32,
    /// `D_{2i}(α) = Σ_{x∈X} (x,α)^{2i}`
    #[serde(with = "serde_q::int")]
    pub value: BigInt,
    /// `c_i s m^i (α,α)^i`
    #[serde(with = "serde_q")]
    pub target: BigRational,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentProfile {
    pub alpha: Vec<i64>,
    pub alpha_norm: i64,
    pub moments: Vec<ProfileMoment>,
    /// `counts[j] = #{x ∈ X : (x, α) = ±j}`
    pub counts: Vec<u64>,
}

impl MomentProfile {
    /// `s_j(α)` for `j = 1..=k`.
    pub fn counts_up_to(&self, k: usize) -> Vec<u64> {
        (1..=k)
            .map(|j| self.counts.get(j).copied().unwrap_or(0))
            .collect()
    }
}

/// Per-vector moments `D_{2i}(α)` for `i ≤ (t-1)/2`, and the histogram of `|(x, α)|`.
pub fn moment_profile(
    g: &GramMatrix,
    set: &ShortVectorSet,
    alpha: &[i64],
    strength: u32,
) -> Result<MomentProfile> {
    if alpha.len() != g.dimension() {
        return Err(Error::Dimension(format!(
            "vector of length {} in dimension {}",
            alpha.len(),
            g.dimension()
        )));
    }
    if alpha.iter().all(|&a| a == 0) {
        return Err(Error::Domain("moment profile at the zero vector".into()));
    }
    let ga = g.apply(alpha);
    let alpha_norm = g.norm(alpha) as i64;
    let products: Vec<i64> = set
        .vectors
        .iter()
        .map(|x| x.iter().zip(&ga).map(|(&a, &b)| a * b).sum::<i64>())
        .collect();
    let max = products.iter().map(|p| p.unsigned_abs()).max().unwrap_or(0) as usize;
    let mut counts = vec![0u64; max + 1];
    for p in &products {
        counts[p.unsigned_abs() as usize] += 1;
    }
    let s = BigRational::from_integer(BigInt::from(set.vectors.len()));
    let m = set.minimum;
    let mut moments = Vec::new();
    for i in 1..=(strength.saturating_sub(1) / 2) {
        let value = products.iter().fold(BigInt::zero(), |acc, &p| {
            acc + num_traits::pow(BigInt::from(p), 2 * i as usize)
        });
        let target = design_constant(set.dimension as u32, i)?
            * &s
            * BigRational::from_integer(num_traits::pow(
                BigInt::from(m) * BigInt::from(alpha_norm),
                i as usize,
            ));
        let holds = BigRational::from_integer(value.clone()) == target;
        moments.push(ProfileMoment {
            i,
            value,
            target,
            holds,
        });
    }
    Ok(MomentProfile {
        alpha: alpha.to_vec(),
        alpha_norm,
        moments,
        counts,
    })
}

impl DesignCertificate {
    pub fn moment(&self, i: u32) -> Option<&MomentCheck> {
        self.moments.iter().find(|c| c.i == i)
    }

    /// `pair_sum - target` at the first failing moment.
    pub fn discrepancy(&self) -> Option<BigRational> {
        let i = self.failing_moment?;
        let c = self.moment(i)?;
        Some(BigRational::from_integer(c.pair_sum.clone()) - &c.target)
    }
}
