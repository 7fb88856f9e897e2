use super::GramMatrix;
use crate::error::Result;

/// Gram matrix of `{λ : (λ, λ) even}`.
///
/// Parity of the norm is the linear functional `x ↦ Σ g_ii x_i (mod 2)`. With `p`
/// the first index of odd diagonal, the kernel has basis `2e_p`, `e_j + e_p` for
/// odd `g_jj`, and `e_j` for even `g_jj`. Even input is returned unchanged.
pub fn even_sublattice(g: &GramMatrix) -> Result<GramMatrix> {
    let n = g.dimension();
    let Some(p) = (0..n).find(|&i| g.get(i, i) % 2 != 0) else {
        return Ok(g.clone());
    };
    let basis: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut v = vec![0i64; n];
            if j == p {
                v[p] = 2;
            } else {
                v[j] = 1;
                if g.get(j, j) % 2 != 0 {
                    v[p] = 1;
                }
            }
            v
        })
        .collect();
    g.transform(&basis)
}
