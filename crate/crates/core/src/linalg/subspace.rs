use itertools::Itertools;

use super::field::{Field, PrimeField};
use super::matrix::Matrix;

/// A subspace of `F^n`, stored as its row-reduced basis. Two subspaces are
/// equal iff their stored bases are equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, n: usize) -> Self {
        Subspace { ambient: n, basis: Matrix::zeros(field, 0, n), pivots: Vec::new() }
    }

    pub fn full(field: &F, n: usize) -> Self {
        Subspace { ambient: n, basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    /// Span of the rows of `m`.
    pub fn span(m: &Matrix<F>) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn from_vectors(field: &F, n: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        Self::span(&Matrix::from_rows(field, n, vectors))
    }

    /// Kernel of `m` acting on column vectors.
    pub fn kernel(m: &Matrix<F>) -> Self {
        let basis = m.kernel_matrix();
        let pivots = pivots_of(&basis);
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Row-reduced basis, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = self.field();
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = rest[p].clone();
            if !f.is_zero(&c) {
                for (k, b) in self.basis.row(r).iter().enumerate() {
                    rest[k] = f.sub(&rest[k], &f.mul(&c, b));
                }
            }
            coords.push(c);
        }
        rest.iter().all(|x| f.is_zero(x)).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace<F>) -> bool {
        other.dim() <= self.dim() && (0..other.dim()).all(|r| self.contains_vector(other.basis.row(r)))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        Self::span(&self.basis.vstack(&other.basis))
    }

    /// `{y : <b, y> = 0 for all b}`.
    pub fn annihilator(&self) -> Subspace<F> {
        Self::kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        let constraints = self.annihilator().basis.vstack(&other.annihilator().basis);
        Self::kernel(&constraints)
    }

    /// Image under `a` (shape `m x n`, acting on column vectors of `F^n`).
    pub fn image(&self, a: &Matrix<F>) -> Subspace<F> {
        assert_eq!(a.cols(), self.ambient, "map does not start at this space");
        Self::span(&self.basis.mul(&a.transpose()))
    }

    /// `{x in F^n : a x in target}`.
    pub fn preimage(a: &Matrix<F>, target: &Subspace<F>) -> Subspace<F> {
        assert_eq!(a.rows(), target.ambient, "map does not land in target's space");
        let ann = target.annihilator();
        Self::kernel(&ann.basis.mul(a))
    }

    /// Vectors `c_1..c_m` in `self` with `self = sub ⊕ span(c)`; `sub` must be contained in `self`.
    pub fn complement_in(&self, sub: &Subspace<F>) -> Vec<Vec<F::Elem>> {
        debug_assert!(self.contains(sub));
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for r in 0..self.dim() {
            if acc.dim() == self.dim() {
                break;
            }
            let v = self.basis.row(r);
            if !acc.contains_vector(v) {
                out.push(v.to_vec());
                acc = Self::span(&acc.basis.vstack(&Matrix::from_rows(self.field(), self.ambient, vec![v.to_vec()])));
            }
        }
        out
    }

    /// Linear combination `Σ coeffs_j vectors_j`.
    pub fn combine(field: &F, n: usize, coeffs: &[F::Elem], vectors: &[Vec<F::Elem>]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); n];
        for (c, v) in coeffs.iter().zip(vectors) {
            if field.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(v) {
                *o = field.add(o, &field.mul(c, x));
            }
        }
        out
    }
}

fn pivots_of<F: Field>(m: &Matrix<F>) -> Vec<usize> {
    let f = m.field();
    (0..m.rows()).map(|r| (0..m.cols()).find(|&c| !f.is_zero(m.get(r, c))).expect("no zero rows")).collect()
}

/// Number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.pow(n - i) - 1);
        den = den.saturating_mul(q.pow(i + 1) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// Number of flags `0 ⊆ S_1 ⊆ ... ⊆ F_q^n` with the given successive jumps
/// (`parts` sums to `n`).
pub fn q_multinomial(parts: &[u32], q: u64) -> u128 {
    let mut remaining: u32 = parts.iter().sum();
    let mut acc: u128 = 1;
    for &k in parts {
        acc = acc.saturating_mul(gaussian_binomial(remaining, k, q));
        remaining -= k;
    }
    acc
}

/// Streaming enumeration of the `k`-dimensional subspaces of `F_p^n`, each
/// exactly once in reduced row echelon form: pivot patterns in lexicographic
/// order, and within a pattern the free entries as an odometer.
pub struct SubspaceIter {
    field: PrimeField,
    n: usize,
    k: usize,
    patterns: Box<dyn Iterator<Item = Vec<usize>> + Send>,
    current: Option<Pattern>,
}

struct Pattern {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    digits: Vec<u32>,
    done: bool,
}

impl Pattern {
    fn new(n: usize, pivots: Vec<usize>) -> Self {
        let mut free = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..n {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let digits = vec![0; free.len()];
        Pattern { pivots, free, digits, done: false }
    }
}

pub fn enumerate_subspaces(n: usize, k: usize, field: PrimeField) -> SubspaceIter {
    assert!(k <= n, "subspace dimension exceeds ambient dimension");
    let patterns: Box<dyn Iterator<Item = Vec<usize>> + Send> = Box::new((0..n).combinations(k));
    SubspaceIter { field, n, k, patterns, current: None }
}

impl Iterator for SubspaceIter {
    type Item = Subspace<PrimeField>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.current.as_ref().is_none_or(|p| p.done) {
            self.current = Some(Pattern::new(self.n, self.patterns.next()?));
        }
        let pat = self.current.as_mut().expect("pattern present");
        let mut m = Matrix::zeros(&self.field, self.k, self.n);
        for (r, &p) in pat.pivots.iter().enumerate() {
            m.set(r, p, 1);
        }
        for (&(r, c), &x) in pat.free.iter().zip(&pat.digits) {
            m.set(r, c, x);
        }
        // advance odometer
        let p = self.field.p();
        let mut pos = 0;
        loop {
            if pos == pat.digits.len() {
                pat.done = true;
                break;
            }
            pat.digits[pos] += 1;
            if pat.digits[pos] < p {
                break;
            }
            pat.digits[pos] = 0;
            pos += 1;
        }
        Some(Subspace { ambient: self.n, basis: m, pivots: pat.pivots.clone() })
    }
}
