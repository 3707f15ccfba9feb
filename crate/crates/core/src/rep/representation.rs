use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Subspace};
use crate::quiver::{euler_unchecked, DimVector, Quiver};

use super::multiset::RootMultiset;
use super::reflection::indecomposable_for_root;

/// A representation: one vector space `F^{v_i}` per vertex and one matrix per
/// arrow `h: i -> j`, of shape `v_j x v_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation<F: Field> {
    quiver: Quiver,
    field: F,
    dims: DimVector,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(quiver: Quiver, field: F, dims: DimVector, maps: Vec<Matrix<F>>) -> Result<Self> {
        quiver.check_dims(&dims)?;
        if maps.len() != quiver.arrows().len() {
            return Err(Error::input(format!(
                "{} arrow maps given for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (h, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            let want = (dims[t] as usize, dims[s] as usize);
            if m.shape() != want {
                return Err(Error::input(format!("arrow {h} has shape {:?}, expected {:?}", m.shape(), want)));
            }
            if m.field() != &field {
                return Err(Error::input(format!("arrow {h} is over another field")));
            }
        }
        Ok(Representation { quiver, field, dims, maps })
    }

    pub fn zero(quiver: &Quiver, field: &F) -> Self {
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Representation { quiver: quiver.clone(), field: field.clone(), dims: quiver.zero_vector(), maps }
    }

    /// The simple representation at vertex `i`.
    pub fn simple(quiver: &Quiver, field: &F, i: usize) -> Self {
        let dims = quiver.simple(i);
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t] as usize, dims[s] as usize))
            .collect();
        Representation { quiver: quiver.clone(), field: field.clone(), dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i] as usize
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn map(&self, h: usize) -> &Matrix<F> {
        &self.maps[h]
    }

    /// Block direct sum; `self` occupies the first coordinates at every vertex.
    pub fn direct_sum(&self, other: &Representation<F>) -> Result<Representation<F>> {
        check_compatible(self, other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Representation { quiver: self.quiver.clone(), field: self.field.clone(), dims: self.dims.add(&other.dims), maps })
    }

    /// Same representation over a quiver with relabeled structure (same arrows and dims).
    pub(crate) fn with_quiver(self, quiver: Quiver) -> Representation<F> {
        Representation { quiver, ..self }
    }

    pub(crate) fn from_parts(quiver: Quiver, field: F, dims: DimVector, maps: Vec<Matrix<F>>) -> Self {
        debug_assert!(Self::new(quiver.clone(), field.clone(), dims.clone(), maps.clone()).is_ok());
        Representation { quiver, field, dims, maps }
    }
}

fn check_compatible<F: Field>(a: &Representation<F>, b: &Representation<F>) -> Result<()> {
    if a.quiver != b.quiver {
        return Err(Error::input("representations live on different quivers"));
    }
    if a.field != b.field {
        return Err(Error::input(format!(
            "representations are over different fields ({} vs {})",
            a.field.spec(),
            b.field.spec()
        )));
    }
    Ok(())
}

/// The linear system whose kernel is `Hom(W, V)`: unknowns are the entries of
/// `f_i: W_i -> V_i` (row-major, vertex by vertex), one equation per entry of
/// `f_j W_h - V_h f_i` for each arrow `h: i -> j`.
pub(crate) fn hom_system<F: Field>(w: &Representation<F>, v: &Representation<F>) -> (Matrix<F>, Vec<usize>) {
    let f = &w.field;
    let q = &w.quiver;
    let n = q.num_vertices();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut acc = 0;
    for i in 0..n {
        offsets.push(acc);
        acc += v.dim_at(i) * w.dim_at(i);
    }
    offsets.push(acc);
    let unknowns = acc;
    let rows: usize = q.arrows().iter().map(|&(s, t)| v.dim_at(t) * w.dim_at(s)).sum();
    let mut sys = Matrix::zeros(f, rows, unknowns);
    let mut row = 0;
    for (h, &(s, t)) in q.arrows().iter().enumerate() {
        let (wh, vh) = (&w.maps[h], &v.maps[h]);
        let (vt, ws, wt, vs) = (v.dim_at(t), w.dim_at(s), w.dim_at(t), v.dim_at(s));
        for a in 0..vt {
            for b in 0..ws {
                // + Σ_c f_t[a,c] W_h[c,b]
                for c in 0..wt {
                    let col = offsets[t] + a * wt + c;
                    let cur = sys.get(row, col).clone();
                    sys.set(row, col, f.add(&cur, wh.get(c, b)));
                }
                // − Σ_c V_h[a,c] f_s[c,b]
                for c in 0..vs {
                    let col = offsets[s] + c * ws + b;
                    let cur = sys.get(row, col).clone();
                    sys.set(row, col, f.sub(&cur, vh.get(a, c)));
                }
                row += 1;
            }
        }
    }
    (sys, offsets)
}

pub fn hom_dim<F: Field>(w: &Representation<F>, v: &Representation<F>) -> Result<usize> {
    check_compatible(w, v)?;
    let (sys, offsets) = hom_system(w, v);
    Ok(offsets.last().copied().unwrap_or(0) - sys.rank())
}

/// A basis of `Hom(W, V)`; each element is a tuple `(f_i)` of vertex maps.
pub type HomBasis<F> = Vec<Vec<Matrix<F>>>;

pub fn hom_basis<F: Field>(w: &Representation<F>, v: &Representation<F>) -> Result<HomBasis<F>> {
    check_compatible(w, v)?;
    let (sys, offsets) = hom_system(w, v);
    let f = &w.field;
    let n = w.quiver.num_vertices();
    Ok(sys
        .kernel_basis()
        .into_iter()
        .map(|x| {
            (0..n)
                .map(|i| {
                    let (rows, cols) = (v.dim_at(i), w.dim_at(i));
                    Matrix::from_rows(
                        f,
                        cols,
                        (0..rows).map(|a| x[offsets[i] + a * cols..offsets[i] + (a + 1) * cols].to_vec()).collect(),
                    )
                })
                .collect()
        })
        .collect())
}

/// `dim Ext^1(W, V) = dim Hom(W, V) − <w, v>`.
pub fn ext1_dim<F: Field>(w: &Representation<F>, v: &Representation<F>) -> Result<usize> {
    let hom = hom_dim(w, v)? as i64;
    let ext = hom - euler_unchecked(&w.quiver, &w.dims, &v.dims);
    if ext < 0 {
        return Err(Error::internal(format!(
            "negative Ext^1 ({ext}) between representations of dimension {} and {}",
            w.dims, v.dims
        )));
    }
    Ok(ext as usize)
}

pub fn is_rigid<F: Field>(v: &Representation<F>) -> Result<bool> {
    Ok(ext1_dim(v, v)? == 0)
}

/// Whether the per-vertex subspaces are stable under every arrow map.
pub fn is_subrepresentation<F: Field>(v: &Representation<F>, subspaces: &[Subspace<F>]) -> Result<bool> {
    let q = &v.quiver;
    if subspaces.len() != q.num_vertices() {
        return Err(Error::input("one subspace per vertex is required"));
    }
    for (i, s) in subspaces.iter().enumerate() {
        if s.ambient() != v.dim_at(i) {
            return Err(Error::input(format!("subspace at vertex {i} lives in the wrong ambient space")));
        }
    }
    Ok(q.arrows().iter().enumerate().all(|(h, &(s, t))| subspaces[t].contains(&subspaces[s].image(&v.maps[h]))))
}

/// The direct sum of indecomposables described by `roots`, summands in entry order.
pub fn build_rep<F: Field>(quiver: &Quiver, roots: &RootMultiset, field: &F) -> Result<Representation<F>> {
    let mut acc = Representation::zero(quiver, field);
    for (root, mult) in roots.entries() {
        let ind = indecomposable_for_root(quiver, root, field)?;
        for _ in 0..*mult {
            acc = acc.direct_sum(&ind)?;
        }
    }
    Ok(acc)
}
