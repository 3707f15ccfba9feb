//! Dynkin classification of the underlying graph and positive roots.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinKind {
    A(usize),
    D(usize),
    E(usize),
    NotDynkin,
}

impl fmt::Display for DynkinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinKind::A(n) => write!(f, "A{n}"),
            DynkinKind::D(n) => write!(f, "D{n}"),
            DynkinKind::E(n) => write!(f, "E{n}"),
            DynkinKind::NotDynkin => write!(f, "not Dynkin"),
        }
    }
}

/// The Dynkin type of a quiver together with a relabeling to the standard
/// (Bourbaki) numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinClass {
    pub kind: DynkinKind,
    /// `standard[k]` is the declared vertex carrying standard label `k + 1`.
    /// Empty when not Dynkin.
    pub standard: Vec<usize>,
}

impl DynkinClass {
    pub fn is_dynkin(&self) -> bool {
        self.kind != DynkinKind::NotDynkin
    }

    fn not_dynkin() -> Self {
        DynkinClass { kind: DynkinKind::NotDynkin, standard: Vec::new() }
    }

    /// Reads `v` in standard coordinates.
    pub fn to_standard(&self, v: &DimVector) -> Vec<u32> {
        self.standard.iter().map(|&i| v[i]).collect()
    }
}

/// Undirected adjacency; `None` if there are parallel edges.
fn simple_adjacency(q: &Quiver) -> Option<Vec<Vec<usize>>> {
    let mut adj = vec![Vec::new(); q.num_vertices()];
    let mut seen = BTreeSet::new();
    for &(s, t) in q.arrows() {
        let key = (s.min(t), s.max(t));
        if !seen.insert(key) {
            return None;
        }
        adj[s].push(t);
        adj[t].push(s);
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
    }
    Some(adj)
}

/// Walks away from `from` along the arm starting at `start`; vertices in order.
fn arm(adj: &[Vec<usize>], from: usize, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

/// Identifies the underlying undirected graph as `A_n`, `D_n`, `E_6/7/8` or
/// none of these. Orientation is ignored.
pub fn classify_dynkin(q: &Quiver) -> DynkinClass {
    let n = q.num_vertices();
    if n == 0 || q.arrows().len() + 1 != n {
        return DynkinClass::not_dynkin();
    }
    let Some(adj) = simple_adjacency(q) else {
        return DynkinClass::not_dynkin();
    };
    // n - 1 edges plus connected means tree.
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return DynkinClass::not_dynkin();
    }
    let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() >= 3).collect();
    if branch.is_empty() {
        if n == 1 {
            return DynkinClass { kind: DynkinKind::A(1), standard: vec![0] };
        }
        let end = (0..n).find(|&i| adj[i].len() == 1).expect("path has an endpoint");
        let path = arm(&adj, usize::MAX, end);
        return DynkinClass { kind: DynkinKind::A(n), standard: path };
    }
    if branch.len() > 1 || adj[branch[0]].len() > 3 {
        return DynkinClass::not_dynkin();
    }
    let c = branch[0];
    let mut arms: Vec<Vec<usize>> = adj[c].iter().map(|&s| arm(&adj, c, s)).collect();
    // stable: equal-length arms keep neighbor order
    arms.sort_by_key(|a| a.len());
    let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
    match lens.as_slice() {
        [1, 1, _] => {
            // D_n: long arm end = 1, ..., center = n-2, short leaves n-1, n
            let mut standard: Vec<usize> = arms[2].iter().rev().copied().collect();
            standard.push(c);
            standard.push(arms[0][0]);
            standard.push(arms[1][0]);
            DynkinClass { kind: DynkinKind::D(n), standard }
        }
        [1, 2, k @ 2..=4] => {
            // E_n: 1 - 3 - 4 - 5 - ..., 2 attached to 4
            let mut standard = vec![arms[1][1], arms[0][0], arms[1][0], c];
            standard.extend(arms[2].iter().copied());
            DynkinClass { kind: DynkinKind::E(k + 4), standard }
        }
        _ => DynkinClass::not_dynkin(),
    }
}

/// Symmetric bilinear pairing `(x, e_i)` of the Cartan form.
fn cartan_pairing(adj: &[Vec<usize>], x: &[i64], i: usize) -> i64 {
    2 * x[i] - adj[i].iter().map(|&j| x[j]).sum::<i64>()
}

/// All positive roots of the underlying Dynkin diagram, each once, ordered by
/// total dimension and then lexicographically in standard coordinates.
pub fn positive_roots(q: &Quiver) -> Result<Vec<DimVector>> {
    let class = classify_dynkin(q);
    if !class.is_dynkin() {
        return Err(Error::Unsupported("the quiver is not of Dynkin type".into()));
    }
    let adj = simple_adjacency(q).expect("Dynkin graphs are simple");
    let n = q.num_vertices();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        found.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let c = cartan_pairing(&adj, &x, i);
            if c == 0 {
                continue;
            }
            let mut y = x.clone();
            y[i] -= c;
            if y.iter().all(|&a| a >= 0) && found.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut roots: Vec<DimVector> =
        found.into_iter().map(|x| DimVector(x.into_iter().map(|a| a as u32).collect())).collect();
    roots.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| class.to_standard(a).cmp(&class.to_standard(b))));
    Ok(roots)
}

pub fn is_positive_root(q: &Quiver, v: &DimVector) -> Result<bool> {
    Ok(positive_roots(q)?.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_are_type_a() {
        let q = Quiver::numbered(3, &[(1, 0), (1, 2)]).unwrap();
        let c = classify_dynkin(&q);
        assert_eq!(c.kind, DynkinKind::A(3));
        assert_eq!(c.standard, vec![0, 1, 2]);
        assert_eq!(classify_dynkin(&Quiver::numbered(1, &[]).unwrap()).kind, DynkinKind::A(1));
    }

    #[test]
    fn star_is_d4() {
        let q = Quiver::numbered(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let c = classify_dynkin(&q);
        assert_eq!(c.kind, DynkinKind::D(4));
        assert_eq!(c.standard[1], 3);
    }

    #[test]
    fn cycles_and_multi_edges_are_not_dynkin() {
        let cyc = Quiver::numbered(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(classify_dynkin(&cyc).kind, DynkinKind::NotDynkin);
        let kronecker = Quiver::numbered(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(classify_dynkin(&kronecker).kind, DynkinKind::NotDynkin);
        let disconnected = Quiver::numbered(3, &[(0, 1)]).unwrap();
        assert_eq!(classify_dynkin(&disconnected).kind, DynkinKind::NotDynkin);
        // affine D4~: a vertex of degree 4
        let d4t = Quiver::numbered(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(classify_dynkin(&d4t).kind, DynkinKind::NotDynkin);
        // affine E6~: arms 2,2,2
        let e6t = Quiver::numbered(7, &[(0, 1), (1, 6), (2, 3), (3, 6), (4, 5), (5, 6)]).unwrap();
        assert_eq!(classify_dynkin(&e6t).kind, DynkinKind::NotDynkin);
    }

    #[test]
    fn exceptional_types() {
        // center 0, arms of lengths 1, 2, k
        for (k, expect) in [(2, 6), (3, 7), (4, 8)] {
            let mut arrows = vec![(1, 0), (2, 0), (3, 2), (4, 0)];
            for j in 0..k - 1 {
                arrows.push((5 + j, 4 + j));
            }
            let q = Quiver::numbered(4 + k, &arrows).unwrap();
            let c = classify_dynkin(&q);
            assert_eq!(c.kind, DynkinKind::E(expect));
            assert_eq!(c.standard[3], 0);
            assert_eq!(c.standard[1], 1);
        }
    }

    #[test]
    fn a2_roots_in_canonical_order() {
        let roots = positive_roots(&Quiver::linear_a(2)).unwrap();
        let r: Vec<Vec<u32>> = roots.into_iter().map(|r| r.0).collect();
        assert_eq!(r, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn d4_highest_root() {
        let q = Quiver::numbered(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let roots = positive_roots(&q).unwrap();
        assert_eq!(roots.len(), 12);
        assert_eq!(roots.last().unwrap(), &DimVector(vec![1, 1, 1, 2]));
    }

    #[test]
    fn not_dynkin_roots_error() {
        let cyc = Quiver::numbered(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(positive_roots(&cyc), Err(Error::Unsupported(_))));
    }
}
