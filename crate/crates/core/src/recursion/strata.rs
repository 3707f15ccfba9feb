use itertools::Itertools;

use crate::error::{Error, Result};
use crate::quiver::{euler_unchecked, flag_differences, DimVector, FlagType, Quiver};

/// One stratum of `F_u(U)` for `0 -> V -> U -> W -> 0`: flags meeting `V` in
/// type `v` and mapping onto type `w` in `W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StratumSplit {
    pub v: FlagType,
    pub w: FlagType,
    /// Fiber dimension of the stratum over `F_v(V) × F_w(W)`.
    pub rank: i64,
}

/// `Σ_{r<t} <w̄_r, v̄_t>`, the fiber dimension of the stratum `(v, w)` when
/// `Ext^1(W, V) = 0`.
pub fn stratum_rank(quiver: &Quiver, w_flag: &FlagType, v_flag: &FlagType) -> Result<i64> {
    if w_flag.len() != v_flag.len() {
        return Err(Error::input(format!(
            "flag types of different lengths ({} and {})",
            w_flag.len(),
            v_flag.len()
        )));
    }
    quiver.check_flag(w_flag)?;
    quiver.check_flag(v_flag)?;
    let wd = flag_differences(w_flag);
    let vd = flag_differences(v_flag);
    let mut rank = 0;
    for (r, w) in wd.iter().enumerate() {
        for v in &vd[r + 1..] {
            rank += euler_unchecked(quiver, w, v);
        }
    }
    Ok(rank)
}

/// Per-vertex chains `(a_1 ≤ ... ≤ a_d = top_v)` with `u_r − a_r` also
/// monotone and ending at `top_w`.
fn vertex_splits(u: &[u32], top_v: u32, top_w: u32) -> Vec<Vec<u32>> {
    fn go(u: &[u32], top_v: u32, top_w: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let r = prefix.len();
        if r == u.len() {
            out.push(prefix.clone());
            return;
        }
        let (prev_a, prev_u) = if r == 0 { (0, 0) } else { (prefix[r - 1], u[r - 1]) };
        let prev_b = prev_u - prev_a;
        let lo = prev_a.max(u[r].saturating_sub(top_w));
        let hi = top_v.min(u[r]);
        for a in lo..=hi {
            let b = u[r] - a;
            if b < prev_b || b > top_w {
                continue;
            }
            if r + 1 == u.len() && (a != top_v || b != top_w) {
                continue;
            }
            prefix.push(a);
            go(u, top_v, top_w, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(u, top_v, top_w, &mut Vec::new(), &mut out);
    out
}

/// All ways to write `u = v + w` with `v`, `w` flag types ending at `v_total`
/// and `w_total`, each with its stratum rank.
pub fn enumerate_splittings(
    quiver: &Quiver,
    u: &FlagType,
    v_total: &DimVector,
    w_total: &DimVector,
) -> Result<Vec<StratumSplit>> {
    quiver.check_flag(u)?;
    quiver.check_dims(v_total)?;
    quiver.check_dims(w_total)?;
    if &v_total.add(w_total) != u.top() {
        return Err(Error::input(format!("{v_total} + {w_total} is not the top {} of the flag type", u.top())));
    }
    let n = quiver.num_vertices();
    let per_vertex: Vec<Vec<Vec<u32>>> =
        (0..n).map(|i| vertex_splits(&u.at_vertex(i), v_total[i], w_total[i])).collect();
    let mut out = Vec::new();
    for choice in per_vertex.iter().map(|c| c.iter()).multi_cartesian_product() {
        let v_chains: Vec<Vec<u32>> = choice.iter().map(|c| (*c).clone()).collect();
        let w_chains: Vec<Vec<u32>> = (0..n)
            .map(|i| u.at_vertex(i).iter().zip(&v_chains[i]).map(|(a, b)| a - b).collect())
            .collect();
        let v = FlagType::from_vertex_chains(&v_chains)?;
        let w = FlagType::from_vertex_chains(&w_chains)?;
        let rank = stratum_rank(quiver, &w, &v)?;
        out.push(StratumSplit { v, w, rank });
    }
    Ok(out)
}
