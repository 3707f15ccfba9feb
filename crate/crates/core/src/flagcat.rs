//! Flags as subrepresentations on the extended quiver `Γ̂_d`.
//!
//! `Γ̂_d` has one copy of the base quiver per level `r = 1..d` and an arrow
//! `(i, r) -> (i, r + 1)` for each vertex. A representation is in `Rep⁰` when
//! every square between consecutive levels commutes. `Φ` sends `V` to `d`
//! copies of itself joined by identities, and a flag of `V` becomes a
//! subrepresentation of `Φ(V)`. Hom spaces over `Γ̂_d` then give the fibers
//! of the stratification behind the recursion.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, PrimeField, Subspace};
use crate::oracle::{list_flags, FlagPoint};
use crate::quiver::{DimVector, FlagType, Quiver};
use crate::recursion::stratum_rank;
use crate::rep::{ext1_dim, hom_dim, Representation};

/// `Γ̂_d` for a base quiver. Vertex `(i, r)` has index `r·|I| + i` (levels
/// from 0); arrows are the level copies of the base arrows, level by level,
/// followed by the vertical arrows.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtendedQuiver {
    base: Quiver,
    d: usize,
    quiver: Quiver,
}

impl ExtendedQuiver {
    pub fn new(base: &Quiver, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::input("the extended quiver needs d >= 1"));
        }
        let n = base.num_vertices();
        let vertices = (0..d)
            .flat_map(|r| base.vertices().iter().map(move |name| format!("{name}@{}", r + 1)))
            .collect();
        let mut arrows = Vec::with_capacity(base.arrows().len() * d + n * (d - 1));
        for r in 0..d {
            arrows.extend(base.arrows().iter().map(|&(s, t)| (r * n + s, r * n + t)));
        }
        for r in 0..d - 1 {
            arrows.extend((0..n).map(|i| (r * n + i, (r + 1) * n + i)));
        }
        let quiver = Quiver::new(vertices, arrows)?;
        Ok(ExtendedQuiver { base: base.clone(), d, quiver })
    }

    pub fn base(&self) -> &Quiver {
        &self.base
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex(&self, i: usize, r: usize) -> usize {
        r * self.base.num_vertices() + i
    }

    /// Copy of base arrow `h` at level `r`.
    pub fn level_arrow(&self, h: usize, r: usize) -> usize {
        r * self.base.arrows().len() + h
    }

    /// `(i, r) -> (i, r + 1)`.
    pub fn vertical_arrow(&self, i: usize, r: usize) -> usize {
        self.base.arrows().len() * self.d + r * self.base.num_vertices() + i
    }
}

/// A representation of `Γ̂_d` whose squares commute.
#[derive(Debug, Clone, PartialEq)]
pub struct Rep0Representation<F: Field> {
    ext: ExtendedQuiver,
    rep: Representation<F>,
}

impl<F: Field> Rep0Representation<F> {
    pub fn new(ext: ExtendedQuiver, rep: Representation<F>) -> Result<Self> {
        if rep.quiver() != ext.quiver() {
            return Err(Error::input("representation is not on this extended quiver"));
        }
        for r in 0..ext.d() - 1 {
            for (h, &(s, t)) in ext.base().arrows().iter().enumerate() {
                let across_then_up = rep.map(ext.vertical_arrow(t, r)).mul(rep.map(ext.level_arrow(h, r)));
                let up_then_across = rep.map(ext.level_arrow(h, r + 1)).mul(rep.map(ext.vertical_arrow(s, r)));
                if across_then_up != up_then_across {
                    return Err(Error::input(format!("square of arrow {h} between levels {} and {} fails", r + 1, r + 2)));
                }
            }
        }
        Ok(Rep0Representation { ext, rep })
    }

    pub fn extended(&self) -> &ExtendedQuiver {
        &self.ext
    }

    pub fn rep(&self) -> &Representation<F> {
        &self.rep
    }

    /// Level `r` (from 0) as a representation of the base quiver.
    pub fn slice(&self, r: usize) -> Representation<F> {
        let ext = &self.ext;
        let n = ext.base().num_vertices();
        let dims = DimVector((0..n).map(|i| self.rep.dims()[ext.vertex(i, r)]).collect());
        let maps = (0..ext.base().arrows().len()).map(|h| self.rep.map(ext.level_arrow(h, r)).clone()).collect();
        Representation::from_parts(ext.base().clone(), self.rep.field().clone(), dims, maps)
    }
}

/// `Φ(V)`: `V` at every level, identities between levels.
pub fn phi<F: Field>(v: &Representation<F>, d: usize) -> Result<Rep0Representation<F>> {
    let ext = ExtendedQuiver::new(v.quiver(), d)?;
    let n = v.quiver().num_vertices();
    let dims = DimVector((0..d).flat_map(|_| v.dims().entries().iter().copied()).collect());
    let mut maps: Vec<Matrix<F>> = (0..d).flat_map(|_| v.maps().iter().cloned()).collect();
    for _ in 0..d - 1 {
        maps.extend((0..n).map(|i| Matrix::identity(v.field(), v.dim_at(i))));
    }
    let rep = Representation::new(ext.quiver().clone(), v.field().clone(), dims, maps)?;
    Rep0Representation::new(ext, rep)
}

/// Matrix of `a` restricted to `src -> dst`, in their stored bases.
fn restrict<F: Field>(a: &Matrix<F>, src: &Subspace<F>, dst: &Subspace<F>) -> Result<Matrix<F>> {
    let images = src.basis().mul(&a.transpose());
    let f = a.field();
    let mut m = Matrix::zeros(f, dst.dim(), src.dim());
    for c in 0..src.dim() {
        let coords = dst.coordinates(images.row(c)).ok_or_else(|| Error::input("map does not preserve the subspaces"))?;
        for (r, x) in coords.into_iter().enumerate() {
            m.set(r, c, x);
        }
    }
    Ok(m)
}

/// The subrepresentation `V' ⊆ Φ(V)` of a flag, and its inclusion as one
/// matrix per vertex of `Γ̂_d` (columns are the stored basis of `V'`).
pub fn flag_to_subrep<F: Field>(
    v: &Representation<F>,
    flag: &FlagPoint<F>,
) -> Result<(Rep0Representation<F>, Vec<Matrix<F>>)> {
    flag.validate(v)?;
    let target = phi(v, flag.steps.len())?;
    let subs: Vec<Subspace<F>> = flag.steps.iter().flatten().cloned().collect();
    let sub = subrep_of(&target, &subs)?;
    let inclusion = subs.iter().map(|s| s.basis().transpose()).collect();
    Ok((sub, inclusion))
}

/// The subrepresentation on per-vertex subspaces `subs` of `u`.
pub fn subrep_of<F: Field>(u: &Rep0Representation<F>, subs: &[Subspace<F>]) -> Result<Rep0Representation<F>> {
    let q = u.rep.quiver();
    if subs.len() != q.num_vertices() {
        return Err(Error::input("one subspace per vertex is required"));
    }
    let dims = DimVector(subs.iter().map(|s| s.dim() as u32).collect());
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(h, &(s, t))| restrict(u.rep.map(h), &subs[s], &subs[t]))
        .collect::<Result<Vec<_>>>()?;
    let rep = Representation::new(q.clone(), u.rep.field().clone(), dims, maps)?;
    Rep0Representation::new(u.ext.clone(), rep)
}

/// Coordinates on `F^n / S` using the non-pivot positions of `S`'s reduced basis.
struct QuotientSpace<F: Field> {
    sub: Subspace<F>,
    free: Vec<usize>,
}

impl<F: Field> QuotientSpace<F> {
    fn new(sub: &Subspace<F>) -> Self {
        let free = (0..sub.ambient()).filter(|c| !sub.pivots().contains(c)).collect();
        QuotientSpace { sub: sub.clone(), free }
    }

    fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.sub.field();
        let mut rest = v.to_vec();
        for (r, &p) in self.sub.pivots().iter().enumerate() {
            let c = rest[p].clone();
            if !f.is_zero(&c) {
                for (k, b) in self.sub.basis().row(r).iter().enumerate() {
                    rest[k] = f.sub(&rest[k], &f.mul(&c, b));
                }
            }
        }
        self.free.iter().map(|&k| rest[k].clone()).collect()
    }

    /// The unit vector lifting the `k`-th quotient coordinate.
    fn lift(&self, k: usize) -> Vec<F::Elem> {
        let f = self.sub.field();
        let mut v = vec![f.zero(); self.sub.ambient()];
        v[self.free[k]] = f.one();
        v
    }
}

/// `U / U'` for a subrepresentation given by per-vertex subspaces.
pub fn quotient<F: Field>(u: &Rep0Representation<F>, subs: &[Subspace<F>]) -> Result<Rep0Representation<F>> {
    let q = u.rep.quiver();
    if !crate::rep::is_subrepresentation(&u.rep, subs)? {
        return Err(Error::input("subspaces are not a subrepresentation"));
    }
    let f = u.rep.field();
    let spaces: Vec<QuotientSpace<F>> = subs.iter().map(QuotientSpace::new).collect();
    let dims = DimVector(spaces.iter().map(|s| s.free.len() as u32).collect());
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(h, &(s, t))| {
            let a = u.rep.map(h);
            let cols: Vec<Vec<F::Elem>> = (0..spaces[s].free.len())
                .map(|k| {
                    let lifted = Matrix::from_rows(f, a.cols(), vec![spaces[s].lift(k)]);
                    spaces[t].project(lifted.mul(&a.transpose()).row(0))
                })
                .collect();
            Matrix::from_rows(f, spaces[t].free.len(), cols).transpose()
        })
        .collect();
    let rep = Representation::new(q.clone(), f.clone(), dims, maps)?;
    Rep0Representation::new(u.ext.clone(), rep)
}

/// `dim Hom(W, V)` over `Γ̂_d`.
pub fn hom_dim_rep0<F: Field>(w: &Rep0Representation<F>, v: &Rep0Representation<F>) -> Result<usize> {
    if w.ext != v.ext {
        return Err(Error::input("representations live on different extended quivers"));
    }
    hom_dim(&w.rep, &v.rep)
}

/// Outcome of [`verify_fiber_rank`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    /// The predicted fiber dimension `Σ_{r<t} <w̄_r, v̄_t>`.
    pub rank: i64,
    /// Number of flags of type `v` in `V` and of type `w` in `W`.
    pub flags_v: usize,
    pub flags_w: usize,
    /// `dim Hom(W', Φ(V)/V')` for each sampled pair.
    pub fiber_dims: Vec<usize>,
    /// Indices into `fiber_dims` that disagree with `rank`.
    pub deviations: Vec<usize>,
}

impl FiberReport {
    pub fn ok(&self) -> bool {
        self.deviations.is_empty()
    }
}

/// Cap on flags materialized per side when sampling.
const SAMPLE_POOL: usize = 200_000;

/// Samples `samples` pairs of flags `(φ_V, φ_W)` of types `v`, `w` uniformly
/// (with replacement, seeded) and compares the fiber dimension with the rank.
pub fn verify_fiber_rank(
    v_rep: &Representation<PrimeField>,
    w_rep: &Representation<PrimeField>,
    v: &FlagType,
    w: &FlagType,
    samples: usize,
    seed: u64,
) -> Result<FiberReport> {
    if ext1_dim(w_rep, v_rep)? != 0 {
        return Err(Error::input("Ext^1(W, V) must vanish"));
    }
    let rank = stratum_rank(v_rep.quiver(), w, v)?;
    let v_flags = list_flags(v_rep, v, SAMPLE_POOL)?;
    let w_flags = list_flags(w_rep, w, SAMPLE_POOL)?;
    let mut report =
        FiberReport { rank, flags_v: v_flags.len(), flags_w: w_flags.len(), fiber_dims: Vec::new(), deviations: Vec::new() };
    if v_flags.is_empty() || w_flags.is_empty() {
        return Ok(report);
    }
    let d = v.len();
    let phi_v = phi(v_rep, d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..samples {
        let fv = v_flags.choose(&mut rng).expect("nonempty");
        let fw = w_flags.choose(&mut rng).expect("nonempty");
        let (w_sub, _) = flag_to_subrep(w_rep, fw)?;
        let v_subs: Vec<Subspace<PrimeField>> = fv.steps.iter().flatten().cloned().collect();
        let target = quotient(&phi_v, &v_subs)?;
        let dim = hom_dim_rep0(&w_sub, &target)?;
        if dim as i64 != rank {
            report.deviations.push(k);
        }
        report.fiber_dims.push(dim);
    }
    Ok(report)
}
