//! Indecomposable representations of Dynkin quivers via reflection functors.
//!
//! For a positive root `β` we walk an admissible sequence of sinks
//! `k_1, k_2, ...` (repeating the sequence cyclically), replacing `β` by
//! `s_k β` and reversing the arrows at `k`, until `β = e_k` at a sink `k`. The
//! simple representation there is then carried back by source reflection
//! functors `S_k^-`, which only need cokernels. With row reduction that picks
//! pivot coordinates deterministically the construction is reproducible and
//! works over any field.

use crate::dynkin::{classify_dynkin, positive_roots};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::quiver::{DimVector, Quiver};

use super::representation::Representation;

/// Vertices ordered so that each is a sink once its predecessors have been
/// reflected: every arrow `i -> j` has `j` before `i`. Ties go to the smallest index.
pub fn admissible_sink_order(q: &Quiver) -> Result<Vec<usize>> {
    let n = q.num_vertices();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&i| !placed[i] && q.arrows().iter().all(|&(s, t)| s != i || placed[t]));
        let Some(k) = next else {
            return Err(Error::Unsupported("quiver has an oriented cycle".into()));
        };
        placed[k] = true;
        order.push(k);
    }
    Ok(order)
}

fn reflect_root(q: &Quiver, beta: &[i64], k: usize) -> Vec<i64> {
    let nbr_sum: i64 = q
        .arrows()
        .iter()
        .filter_map(|&(s, t)| {
            if s == k {
                Some(beta[t])
            } else if t == k {
                Some(beta[s])
            } else {
                None
            }
        })
        .sum();
    let mut out = beta.to_vec();
    out[k] = nbr_sum - beta[k];
    out
}

/// Source reflection at a source `k` of `rep.quiver()`: `V_k` is replaced by
/// the cokernel of `V_k -> ⊕_{k -> j} V_j`. The result lives on the quiver
/// with the arrows at `k` reversed.
fn source_reflection<F: Field>(rep: &Representation<F>, k: usize) -> Representation<F> {
    let q = rep.quiver();
    let f = rep.field();
    debug_assert!(q.is_source(k));
    let out_arrows: Vec<usize> = (0..q.arrows().len()).filter(|&h| q.arrows()[h].0 == k).collect();
    let vk = rep.dim_at(k);
    let mut blocks = Vec::with_capacity(out_arrows.len());
    let mut total = 0;
    for &h in &out_arrows {
        let t = q.arrows()[h].1;
        blocks.push(total..total + rep.dim_at(t));
        total += rep.dim_at(t);
    }
    // stacked map V_k -> ⊕ V_j as a (total x vk) matrix
    let mut stacked = Matrix::zeros(f, total, vk);
    for (&h, blk) in out_arrows.iter().zip(&blocks) {
        stacked.paste(blk.start, 0, rep.map(h));
    }
    // image basis in RREF; cokernel coordinates are the non-pivot positions
    let (img, pivots) = stacked.transpose().rref();
    let free: Vec<usize> = (0..total).filter(|c| !pivots.contains(c)).collect();
    let mut quotient = Matrix::zeros(f, free.len(), total);
    for (a, &j) in free.iter().enumerate() {
        quotient.set(a, j, f.one());
        for (row, &p) in pivots.iter().enumerate() {
            quotient.set(a, p, f.neg(img.get(row, j)));
        }
    }
    let new_q = q.reflect_at(k);
    let mut dims = rep.dims().clone();
    dims.0[k] = free.len() as u32;
    let maps = (0..q.arrows().len())
        .map(|h| match out_arrows.iter().position(|&x| x == h) {
            Some(pos) => quotient.select_cols(blocks[pos].clone()),
            None => rep.map(h).clone(),
        })
        .collect();
    Representation::from_parts(new_q, f.clone(), dims, maps)
}

/// The indecomposable representation with dimension vector `root`, built
/// deterministically from a simple representation by reflection functors.
pub fn indecomposable_for_root<F: Field>(quiver: &Quiver, root: &DimVector, field: &F) -> Result<Representation<F>> {
    quiver.check_dims(root)?;
    if !classify_dynkin(quiver).is_dynkin() {
        return Err(Error::Unsupported("indecomposables are only built for Dynkin quivers".into()));
    }
    if !positive_roots(quiver)?.contains(root) {
        return Err(Error::input(format!("{root} is not a positive root")));
    }
    let order = admissible_sink_order(quiver)?;
    let n = quiver.num_vertices();
    let mut q = quiver.clone();
    let mut beta: Vec<i64> = root.0.iter().map(|&x| x as i64).collect();
    let mut path = Vec::new();
    let cap = n * (n * n + 2);
    let mut step = 0;
    let base = loop {
        let k = order[step % n];
        debug_assert!(q.is_sink(k));
        let is_simple = beta.iter().enumerate().all(|(i, &x)| x == (i == k) as i64);
        if is_simple {
            break Representation::simple(&q, field, k);
        }
        let next = reflect_root(&q, &beta, k);
        if next.iter().any(|&x| x < 0) {
            return Err(Error::internal(format!("reflection made root {root} negative at vertex {k}")));
        }
        beta = next;
        path.push(k);
        q = q.reflect_at(k);
        step += 1;
        if step > cap {
            return Err(Error::internal(format!("reflection sequence for {root} did not terminate")));
        }
    };
    let mut rep = base;
    while let Some(k) = path.pop() {
        rep = source_reflection(&rep, k);
    }
    if rep.dims() != root || rep.quiver().arrows() != quiver.arrows() {
        return Err(Error::internal(format!("reflection functors produced dimension {} for root {root}", rep.dims())));
    }
    Ok(rep.with_quiver(quiver.clone()))
}
