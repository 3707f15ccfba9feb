//! Ground truth by enumeration: flags of subrepresentations over `F_p`,
//! counted straight from the definition.
//!
//! Subrepresentations are built one vertex at a time. When a vertex is
//! reached, every arrow to an already-assigned vertex becomes a bound: the
//! new subspace must contain the images of assigned sources and lie inside
//! the preimages of assigned targets. Only subspaces between those bounds are
//! generated, so every leaf of the search is a genuine subrepresentation.
//! Flags are built bottom-up, each step containing the previous one.

use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{enumerate_subspaces, q_multinomial, Field, Matrix, PrimeField, Subspace};
use crate::quiver::{flag_differences, DimVector, FlagType};
use crate::rep::{is_subrepresentation, Representation};

/// Default cap on the estimated number of candidate subspace tuples.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "FLAGMANN_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub budget: u128,
    /// Split the search at the first step and count branches in parallel.
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: DEFAULT_BUDGET, parallel: false }
    }
}

impl OracleConfig {
    /// Default configuration with the budget taken from `FLAGMANN_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            cfg.budget = raw
                .trim()
                .parse()
                .map_err(|_| Error::input(format!("{BUDGET_ENV}={raw} is not a nonnegative integer")))?;
        }
        Ok(cfg)
    }
}

type Sub = Subspace<PrimeField>;

/// A flag `V^1 ⊆ ... ⊆ V^d = V`: `steps[r][i]` is step `r + 1` at vertex `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct FlagPoint<F: Field> {
    pub steps: Vec<Vec<Subspace<F>>>,
}

impl<F: Field> FlagPoint<F> {
    pub fn flag_type(&self) -> FlagType {
        FlagType::new(self.steps.iter().map(|s| DimVector(s.iter().map(|x| x.dim() as u32).collect())).collect())
            .expect("flag steps are nested")
    }

    /// Checks nesting, arrow stability of every step, and that the last step is everything.
    pub fn validate(&self, rep: &Representation<F>) -> Result<()> {
        let last = self.steps.last().ok_or_else(|| Error::input("flag has no steps"))?;
        if !last.iter().all(|s| s.is_full()) {
            return Err(Error::input("last step of a flag must be the whole representation"));
        }
        for (r, step) in self.steps.iter().enumerate() {
            if !is_subrepresentation(rep, step)? {
                return Err(Error::input(format!("step {} is not a subrepresentation", r + 1)));
            }
            if r > 0 && !self.steps[r - 1].iter().zip(step).all(|(a, b)| b.contains(a)) {
                return Err(Error::input(format!("step {r} is not contained in step {}", r + 1)));
            }
        }
        Ok(())
    }
}

/// For each vertex in search order: arrows to vertices earlier in the order,
/// as `(arrow, other vertex, arrow points into this vertex)`.
struct SearchPlan {
    order: Vec<usize>,
    links: Vec<Vec<(usize, usize, bool)>>,
}

impl SearchPlan {
    fn new(rep: &Representation<PrimeField>) -> Self {
        let q = rep.quiver();
        let n = q.num_vertices();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        // BFS from the largest vertex of each component
        let mut by_size: Vec<usize> = (0..n).collect();
        by_size.sort_by_key(|&i| (std::cmp::Reverse(rep.dim_at(i)), i));
        for start in by_size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &(s, t) in q.arrows() {
                    let y = if s == x { t } else if t == x { s } else { continue };
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut pos = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let links = order
            .iter()
            .map(|&v| {
                q.arrows()
                    .iter()
                    .enumerate()
                    .filter_map(|(h, &(s, t))| {
                        if t == v && pos[s] < pos[v] {
                            Some((h, s, true))
                        } else if s == v && pos[t] < pos[v] {
                            Some((h, t, false))
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect();
        SearchPlan { order, links }
    }
}

struct SubrepSearch<'a> {
    rep: &'a Representation<PrimeField>,
    plan: &'a SearchPlan,
    target: &'a DimVector,
    within: Option<&'a [Sub]>,
    containing: Option<&'a [Sub]>,
}

impl SubrepSearch<'_> {
    fn run(&self, visit: &mut dyn FnMut(&[Sub])) {
        let n = self.rep.quiver().num_vertices();
        let mut assigned: Vec<Option<Sub>> = vec![None; n];
        self.step(0, &mut assigned, visit);
    }

    fn step(&self, pos: usize, assigned: &mut Vec<Option<Sub>>, visit: &mut dyn FnMut(&[Sub])) {
        let plan = self.plan;
        if pos == plan.order.len() {
            let tuple: Vec<Sub> = assigned.iter().map(|s| s.clone().expect("all vertices assigned")).collect();
            visit(&tuple);
            return;
        }
        let v = plan.order[pos];
        let field = self.rep.field();
        let n_v = self.rep.dim_at(v);
        let k = self.target[v] as usize;
        let mut lower = match self.containing {
            Some(c) => c[v].clone(),
            None => Subspace::zero(field, n_v),
        };
        let mut upper = match self.within {
            Some(w) => w[v].clone(),
            None => Subspace::full(field, n_v),
        };
        for &(h, other, incoming) in &plan.links[pos] {
            let s = assigned[other].as_ref().expect("earlier vertex assigned");
            if incoming {
                lower = lower.sum(&s.image(self.rep.map(h)));
            } else {
                upper = upper.intersect(&Subspace::preimage(self.rep.map(h), s));
            }
        }
        if lower.dim() > k || upper.dim() < k || !upper.contains(&lower) {
            return;
        }
        if lower.dim() == k {
            assigned[v] = Some(lower);
            self.step(pos + 1, assigned, visit);
            assigned[v] = None;
            return;
        }
        let complement = upper.complement_in(&lower);
        for t in enumerate_subspaces(complement.len(), k - lower.dim(), *field) {
            let mut rows = lower.basis().row_vecs();
            for r in 0..t.dim() {
                rows.push(Subspace::combine(field, n_v, t.basis().row(r), &complement));
            }
            assigned[v] = Some(Subspace::from_vectors(field, n_v, rows));
            self.step(pos + 1, assigned, visit);
        }
        assigned[v] = None;
    }
}

fn check_bounds(rep: &Representation<PrimeField>, target: &DimVector, bound: Option<&[Sub]>, upper: bool) -> Result<()> {
    rep.quiver().check_dims(target)?;
    if let Some(b) = bound {
        if b.len() != rep.quiver().num_vertices() {
            return Err(Error::input("bound needs one subspace per vertex"));
        }
        for (i, s) in b.iter().enumerate() {
            let ok = if upper { s.dim() >= target[i] as usize } else { s.dim() <= target[i] as usize };
            if s.ambient() != rep.dim_at(i) || !ok {
                return Err(Error::input(format!("bound at vertex {i} is incompatible with the target dimension")));
            }
        }
    }
    if !target.le(rep.dims()) {
        return Err(Error::input(format!("target {target} exceeds dimension {}", rep.dims())));
    }
    Ok(())
}

/// Every subrepresentation of dimension `target` that contains `containing`
/// and lies in `within`, each once (per-vertex row-reduced bases).
pub fn enumerate_subreps(
    rep: &Representation<PrimeField>,
    target: &DimVector,
    within: Option<&[Sub]>,
    containing: Option<&[Sub]>,
) -> Result<std::vec::IntoIter<Vec<Sub>>> {
    check_bounds(rep, target, within, true)?;
    check_bounds(rep, target, containing, false)?;
    let plan = SearchPlan::new(rep);
    let search = SubrepSearch { rep, plan: &plan, target, within, containing };
    let mut out = Vec::new();
    search.run(&mut |t| out.push(t.to_vec()));
    Ok(out.into_iter())
}

/// Upper bound on the candidate tuples the flag search can touch: the size of
/// the product of the per-vertex flag varieties.
pub fn estimate_candidates(rep: &Representation<PrimeField>, u: &FlagType) -> u128 {
    let q = rep.field().p() as u64;
    let diffs = flag_differences(u);
    (0..rep.quiver().num_vertices())
        .map(|i| q_multinomial(&diffs.iter().map(|d| d[i]).collect::<Vec<_>>(), q))
        .fold(1u128, |a, b| a.saturating_mul(b))
}

fn check_flag_type(rep: &Representation<PrimeField>, u: &FlagType, cfg: &OracleConfig) -> Result<()> {
    rep.quiver().check_flag(u)?;
    if u.top() != rep.dims() {
        return Err(Error::input(format!("flag type ends at {}, representation has dimension {}", u.top(), rep.dims())));
    }
    let estimate = estimate_candidates(rep, u);
    if estimate > cfg.budget {
        return Err(Error::BudgetExceeded { estimate, budget: cfg.budget });
    }
    Ok(())
}

/// Depth-first walk over all flags of type `u`; `visit` sees the proper steps
/// `V^1 .. V^{d-1}`.
fn walk_flags(rep: &Representation<PrimeField>, u: &FlagType, visit: &mut dyn FnMut(&[Vec<Sub>])) {
    let plan = SearchPlan::new(rep);
    let mut chain: Vec<Vec<Sub>> = Vec::with_capacity(u.len());
    walk_from(rep, &plan, u, &mut chain, visit);
}

fn walk_from(
    rep: &Representation<PrimeField>,
    plan: &SearchPlan,
    u: &FlagType,
    chain: &mut Vec<Vec<Sub>>,
    visit: &mut dyn FnMut(&[Vec<Sub>]),
) {
    let r = chain.len();
    if r + 1 >= u.len() {
        visit(chain);
        return;
    }
    let containing = chain.last().cloned();
    let search = SubrepSearch { rep, plan, target: &u.steps()[r], within: None, containing: containing.as_deref() };
    search.run(&mut |t| {
        chain.push(t.to_vec());
        walk_from(rep, plan, u, chain, visit);
        chain.pop();
    });
}

pub fn count_flags(rep: &Representation<PrimeField>, u: &FlagType) -> Result<u64> {
    count_flags_with(rep, u, &OracleConfig::default())
}

/// `|F_u(V)(F_p)|`.
pub fn count_flags_with(rep: &Representation<PrimeField>, u: &FlagType, cfg: &OracleConfig) -> Result<u64> {
    check_flag_type(rep, u, cfg)?;
    if !cfg.parallel || u.len() < 3 {
        let mut count = 0u64;
        walk_flags(rep, u, &mut |_| count += 1);
        return Ok(count);
    }
    let plan = SearchPlan::new(rep);
    let first: Vec<Vec<Sub>> = {
        let search = SubrepSearch { rep, plan: &plan, target: &u.steps()[0], within: None, containing: None };
        let mut out = Vec::new();
        search.run(&mut |t| out.push(t.to_vec()));
        out
    };
    Ok(first
        .into_par_iter()
        .map(|s| {
            let mut chain = vec![s];
            let mut count = 0u64;
            walk_from(rep, &plan, u, &mut chain, &mut |_| count += 1);
            count
        })
        .sum())
}

/// All flags of type `u`, refusing to materialize more than `limit`.
pub fn list_flags(rep: &Representation<PrimeField>, u: &FlagType, limit: usize) -> Result<Vec<FlagPoint<PrimeField>>> {
    check_flag_type(rep, u, &OracleConfig::default())?;
    let field = *rep.field();
    let full: Vec<Sub> = (0..rep.quiver().num_vertices()).map(|i| Subspace::full(&field, rep.dim_at(i))).collect();
    let mut out = Vec::new();
    let mut overflow = false;
    walk_flags(rep, u, &mut |chain| {
        if out.len() == limit {
            overflow = true;
            return;
        }
        let mut steps = chain.to_vec();
        steps.push(full.clone());
        out.push(FlagPoint { steps });
    });
    if overflow {
        return Err(Error::input(format!("more than {limit} flags of type {u}")));
    }
    Ok(out)
}

/// Flag type of `φ ∩ sub` for every flag `φ` of type `u` in `rep`, tallied.
pub fn stratum_counts(rep: &Representation<PrimeField>, sub: &[Sub], u: &FlagType) -> Result<BTreeMap<FlagType, u64>> {
    check_flag_type(rep, u, &OracleConfig::default())?;
    if !is_subrepresentation(rep, sub)? {
        return Err(Error::input("embedded subspaces are not a subrepresentation"));
    }
    let n = rep.quiver().num_vertices();
    let sub_dims = DimVector(sub.iter().map(|s| s.dim() as u32).collect());
    let mut tally = BTreeMap::new();
    walk_flags(rep, u, &mut |chain| {
        let mut steps: Vec<DimVector> = chain
            .iter()
            .map(|step| {
                DimVector(
                    (0..n).map(|i| (step[i].dim() + sub[i].dim() - step[i].sum(&sub[i]).dim()) as u32).collect(),
                )
            })
            .collect();
        steps.push(sub_dims.clone());
        *tally.entry(FlagType::new(steps).expect("intersections are nested")).or_insert(0) += 1;
    });
    Ok(tally)
}

/// Number of flags `φ` of type `u = v + w` in `rep` whose intersection with
/// `sub` has type `v`.
pub fn count_strata(
    rep: &Representation<PrimeField>,
    sub: &[Sub],
    u: &FlagType,
    v: &FlagType,
    w: &FlagType,
) -> Result<u64> {
    if &v.add(w)? != u {
        return Err(Error::input(format!("{v} + {w} is not {u}")));
    }
    Ok(stratum_counts(rep, sub, u)?.get(v).copied().unwrap_or(0))
}

/// The first block of a direct sum `V ⊕ W` as per-vertex subspaces.
pub fn leading_block(rep: &Representation<PrimeField>, dims: &DimVector) -> Vec<Sub> {
    let field = *rep.field();
    (0..rep.quiver().num_vertices())
        .map(|i| {
            let (k, n) = (dims[i] as usize, rep.dim_at(i));
            Subspace::span(&Matrix::identity(&field, n).select_rows(0..k))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn proj(p: u32) -> Representation<PrimeField> {
        let q = Quiver::linear_a(2);
        Representation::new(q, f(p), DimVector(vec![1, 1]), vec![Matrix::identity(&f(p), 1)]).unwrap()
    }

    fn space(n: u32, p: u32) -> Representation<PrimeField> {
        let q = Quiver::numbered(1, &[]).unwrap();
        Representation::new(q, f(p), DimVector(vec![n]), vec![]).unwrap()
    }

    #[test]
    fn subreps_of_projective() {
        let p = proj(2);
        assert_eq!(enumerate_subreps(&p, &DimVector(vec![0, 1]), None, None).unwrap().count(), 1);
        assert_eq!(enumerate_subreps(&p, &DimVector(vec![1, 1]), None, None).unwrap().count(), 1);
        assert_eq!(enumerate_subreps(&p, &DimVector(vec![0, 0]), None, None).unwrap().count(), 1);
        assert_eq!(enumerate_subreps(&p, &DimVector(vec![1, 0]), None, None).unwrap().count(), 0);
    }

    #[test]
    fn subreps_with_free_line() {
        // (F_2 -> F_2^2), arrow e1 -> e1: target (0,1) leaves the line free
        let q = Quiver::linear_a(2);
        let m = Matrix::from_i64(&f(2), 2, 1, &[1, 0]);
        let v = Representation::new(q, f(2), DimVector(vec![1, 2]), vec![m]).unwrap();
        assert_eq!(enumerate_subreps(&v, &DimVector(vec![0, 1]), None, None).unwrap().count(), 3);
        assert_eq!(enumerate_subreps(&v, &DimVector(vec![1, 1]), None, None).unwrap().count(), 1);
    }

    #[test]
    fn flags_of_vector_spaces() {
        assert_eq!(count_flags(&space(2, 2), &FlagType::from_slices(&[&[1], &[2]])).unwrap(), 3);
        assert_eq!(count_flags(&space(3, 2), &FlagType::from_slices(&[&[1], &[2], &[3]])).unwrap(), 21);
        assert_eq!(count_flags(&space(3, 2), &FlagType::from_slices(&[&[3]])).unwrap(), 1);
    }

    #[test]
    fn empty_flag_variety() {
        for p in [2, 3, 5] {
            assert_eq!(count_flags(&proj(p), &FlagType::from_slices(&[&[1, 0], &[1, 1]])).unwrap(), 0);
        }
    }

    #[test]
    fn parallel_count_matches_sequential() {
        let v = space(4, 3);
        let u = FlagType::from_slices(&[&[1], &[2], &[4]]);
        let seq = count_flags(&v, &u).unwrap();
        let par = count_flags_with(&v, &u, &OracleConfig { parallel: true, ..Default::default() }).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq, q_multinomial(&[1, 1, 2], 3) as u64);
    }

    #[test]
    fn budget_guard() {
        let cfg = OracleConfig { budget: 10, parallel: false };
        let err = count_flags_with(&space(3, 3), &FlagType::from_slices(&[&[1], &[3]]), &cfg).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { estimate: 13, budget: 10 }));
    }

    #[test]
    fn listed_flags_are_valid() {
        let v = space(2, 3);
        let u = FlagType::from_slices(&[&[1], &[2]]);
        let flags = list_flags(&v, &u, 100).unwrap();
        assert_eq!(flags.len(), 4);
        for phi in &flags {
            phi.validate(&v).unwrap();
            assert_eq!(phi.flag_type(), u);
        }
        assert!(list_flags(&v, &u, 2).is_err());
    }

    #[test]
    fn wrong_top_is_rejected() {
        assert!(count_flags(&space(2, 2), &FlagType::from_slices(&[&[1], &[1]])).is_err());
    }
}
