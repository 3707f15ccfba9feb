//! Quivers, dimension vectors, flag types and the Euler form.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite quiver without loops. Vertices are named; arrows refer to vertices
/// by their position in [`Quiver::vertices`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for (a, name) in vertices.iter().enumerate() {
            if vertices[..a].contains(name) {
                return Err(Error::input(format!("duplicate vertex `{name}`")));
            }
        }
        for &(s, t) in &arrows {
            if s >= vertices.len() || t >= vertices.len() {
                return Err(Error::input(format!("arrow {s} -> {t} uses an undeclared vertex")));
            }
            if s == t {
                return Err(Error::input(format!("loop at vertex `{}`", vertices[s])));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Quiver with vertices named `1..=n` and the given 0-based arrows.
    pub fn numbered(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()).collect(), arrows.to_vec())
    }

    /// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Self {
        let arrows: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::numbered(n, &arrows).expect("valid path quiver")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Same underlying graph with the arrows at `k` reversed.
    pub fn reflect_at(&self, k: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| if s == k || t == k { (t, s) } else { (s, t) })
            .collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    pub fn is_sink(&self, k: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != k)
    }

    pub fn is_source(&self, k: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != k)
    }

    /// Every orientation of the underlying graph, in a fixed order.
    pub fn orientations(&self) -> Vec<Quiver> {
        let m = self.arrows.len();
        (0..1u64 << m)
            .map(|mask| {
                let arrows = self
                    .arrows
                    .iter()
                    .enumerate()
                    .map(|(h, &(s, t))| if mask >> h & 1 == 1 { (t, s) } else { (s, t) })
                    .collect();
                Quiver { vertices: self.vertices.clone(), arrows }
            })
            .collect()
    }

    pub fn zero_vector(&self) -> DimVector {
        DimVector(vec![0; self.num_vertices()])
    }

    /// Simple root `e_i`.
    pub fn simple(&self, i: usize) -> DimVector {
        let mut v = self.zero_vector();
        v.0[i] = 1;
        v
    }

    pub fn check_dims(&self, v: &DimVector) -> Result<()> {
        if v.len() != self.num_vertices() {
            return Err(Error::input(format!(
                "dimension vector {v} has {} entries, quiver has {} vertices",
                v.len(),
                self.num_vertices()
            )));
        }
        Ok(())
    }

    pub fn check_flag(&self, u: &FlagType) -> Result<()> {
        u.steps().iter().try_for_each(|s| self.check_dims(s))
    }

    /// Parses the line-oriented quiver format:
    ///
    /// ```text
    /// # A_2
    /// vertices: 1 2
    /// arrow: 1 -> 2
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line, msg };
            let (key, rest) = content
                .split_once(':')
                .ok_or_else(|| perr(format!("expected `key: value`, got `{content}`")))?;
            match key.trim() {
                "vertices" => {
                    if vertices.is_some() {
                        return Err(perr("`vertices` declared twice".into()));
                    }
                    let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                    if names.is_empty() {
                        return Err(perr("empty vertex list".into()));
                    }
                    vertices = Some(names);
                }
                "arrow" => {
                    let names = vertices
                        .as_ref()
                        .ok_or_else(|| perr("arrow before `vertices` line".into()))?;
                    let (s, t) = rest
                        .split_once("->")
                        .ok_or_else(|| perr(format!("expected `<src> -> <dst>`, got `{}`", rest.trim())))?;
                    let lookup = |name: &str| {
                        names
                            .iter()
                            .position(|v| v == name)
                            .ok_or_else(|| perr(format!("unknown vertex `{name}`")))
                    };
                    arrows.push((lookup(s.trim())?, lookup(t.trim())?));
                }
                other => return Err(perr(format!("unknown key `{other}`"))),
            }
        }
        let vertices = vertices.ok_or(Error::Parse { line: 0, msg: "missing `vertices` line".into() })?;
        Quiver::new(vertices, arrows)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for &(s, t) in &self.arrows {
            writeln!(f, "arrow: {} -> {}", self.vertices[s], self.vertices[t])?;
        }
        Ok(())
    }
}

/// Nonnegative integers indexed by the vertices of a quiver, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Self {
        DimVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> DimVector {
        DimVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Componentwise difference; `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A monotone chain `u_1 <= u_2 <= ... <= u_d` of dimension vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlagType {
    steps: Vec<DimVector>,
}

impl FlagType {
    pub fn new(steps: Vec<DimVector>) -> Result<Self> {
        let first = steps.first().ok_or_else(|| Error::input("flag type needs at least one step"))?;
        if steps.iter().any(|s| s.len() != first.len()) {
            return Err(Error::input("flag type steps have different lengths"));
        }
        for (r, pair) in steps.windows(2).enumerate() {
            if !pair[0].le(&pair[1]) {
                return Err(Error::input(format!(
                    "flag type is not monotone at step {}: {} then {}",
                    r + 1,
                    pair[0],
                    pair[1]
                )));
            }
        }
        Ok(FlagType { steps })
    }

    /// Convenience constructor from nested slices. Panics if not monotone.
    pub fn from_slices(steps: &[&[u32]]) -> Self {
        Self::new(steps.iter().map(|s| DimVector(s.to_vec())).collect()).expect("monotone flag type")
    }

    /// The one-step flag `(v)`.
    pub fn trivial(v: DimVector) -> Self {
        FlagType { steps: vec![v] }
    }

    /// Rebuilds a flag type from its consecutive differences.
    pub fn from_differences(diffs: &[DimVector]) -> Result<Self> {
        let mut steps = Vec::with_capacity(diffs.len());
        let mut acc: Option<DimVector> = None;
        for d in diffs {
            let next = match &acc {
                None => d.clone(),
                Some(prev) => prev.add(d),
            };
            steps.push(next.clone());
            acc = Some(next);
        }
        Self::new(steps)
    }

    pub fn steps(&self) -> &[DimVector] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn top(&self) -> &DimVector {
        self.steps.last().expect("nonempty")
    }

    pub fn num_vertices(&self) -> usize {
        self.steps[0].len()
    }

    pub fn is_zero(&self) -> bool {
        self.top().is_zero()
    }

    /// Zero flag of length `d`.
    pub fn zeros(n: usize, d: usize) -> Self {
        FlagType { steps: vec![DimVector::zeros(n); d] }
    }

    /// The chain at a single vertex.
    pub fn at_vertex(&self, i: usize) -> Vec<u32> {
        self.steps.iter().map(|s| s[i]).collect()
    }

    /// Builds a flag type from per-vertex chains (`chains[i][r]`).
    pub fn from_vertex_chains(chains: &[Vec<u32>]) -> Result<Self> {
        let d = chains.first().map_or(0, |c| c.len());
        let steps = (0..d).map(|r| DimVector(chains.iter().map(|c| c[r]).collect())).collect();
        Self::new(steps)
    }

    /// Componentwise sum of two flag types of the same length.
    pub fn add(&self, other: &FlagType) -> Result<FlagType> {
        if self.len() != other.len() {
            return Err(Error::input("flag types of different lengths"));
        }
        FlagType::new(self.steps.iter().zip(&other.steps).map(|(a, b)| a.add(b)).collect())
    }

    /// All flag types of length `d` ending at `top`.
    pub fn all_with_top(top: &DimVector, d: usize) -> Vec<FlagType> {
        if d == 0 {
            return Vec::new();
        }
        let per_vertex: Vec<Vec<Vec<u32>>> = top.0.iter().map(|&n| monotone_chains(n, d)).collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; per_vertex.len()];
        loop {
            let chains: Vec<Vec<u32>> = idx.iter().zip(&per_vertex).map(|(&k, c)| c[k].clone()).collect();
            out.push(Self::from_vertex_chains(&chains).expect("monotone"));
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    return out;
                }
                idx[pos] += 1;
                if idx[pos] < per_vertex[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Monotone sequences `a_1 <= ... <= a_d = n` with `a_1 >= 0`.
fn monotone_chains(n: u32, d: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, lo: u32, n: u32, d: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == d {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in lo..=n {
            prefix.push(a);
            go(prefix, a, n, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, n, d, &mut out);
    out
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// `<w, v> = Σ_i w_i v_i − Σ_{h: i→j} w_i v_j`.
pub fn euler_form(quiver: &Quiver, w: &DimVector, v: &DimVector) -> Result<i64> {
    quiver.check_dims(w)?;
    quiver.check_dims(v)?;
    Ok(euler_unchecked(quiver, w, v))
}

pub(crate) fn euler_unchecked(quiver: &Quiver, w: &DimVector, v: &DimVector) -> i64 {
    let diag: i64 = w.0.iter().zip(&v.0).map(|(&a, &b)| a as i64 * b as i64).sum();
    let off: i64 = quiver.arrows.iter().map(|&(s, t)| w[s] as i64 * v[t] as i64).sum();
    diag - off
}

/// Consecutive differences `ū_1 = u_1`, `ū_r = u_r − u_{r−1}`.
pub fn flag_differences(u: &FlagType) -> Vec<DimVector> {
    let mut out = Vec::with_capacity(u.len());
    let mut prev = DimVector::zeros(u.num_vertices());
    for s in u.steps() {
        out.push(s.checked_sub(&prev).expect("flag type is monotone"));
        prev = s.clone();
    }
    out
}
