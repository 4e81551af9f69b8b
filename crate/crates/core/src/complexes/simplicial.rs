//! Finite abstract simplicial complexes, graphs and matching complexes.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};

/// Default cap on the number of simplices materialized by any computation.
pub const DEFAULT_SIZE_BUDGET: usize = 4_000_000;

/// The simplex budget, read from `ORE_SIZE_BUDGET` when set.
pub fn size_budget() -> usize {
    std::env::var("ORE_SIZE_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SIZE_BUDGET)
}

/// A simplex as a sorted list of vertex indices.
pub type Simplex = Vec<u32>;

/// A simplicial complex given by labelled vertices and its maximal simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexRepr", into = "ComplexRepr")]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Simplex>,
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    vertices: Vec<String>,
    facets: Vec<Vec<u32>>,
}

impl TryFrom<ComplexRepr> for SimplicialComplex {
    type Error = OreError;
    fn try_from(r: ComplexRepr) -> Result<Self> {
        SimplicialComplex::from_simplices(r.vertices, r.facets)
    }
}

impl From<SimplicialComplex> for ComplexRepr {
    fn from(c: SimplicialComplex) -> Self {
        ComplexRepr {
            vertices: c.vertices,
            facets: c.facets,
        }
    }
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: Vec::new(),
        }
    }

    /// Builds the complex generated by `simplices`. Vertices not covered by
    /// any simplex become isolated points.
    pub fn from_simplices(vertices: Vec<String>, simplices: Vec<Simplex>) -> Result<Self> {
        let nv = vertices.len() as u32;
        let mut set: BTreeSet<Simplex> = BTreeSet::new();
        for mut s in simplices {
            s.sort_unstable();
            s.dedup();
            if let Some(&bad) = s.iter().find(|&&v| v >= nv) {
                return Err(OreError::Parse(format!("facet vertex {bad} out of range")));
            }
            if !s.is_empty() {
                set.insert(s);
            }
        }
        let mut covered = vec![false; vertices.len()];
        for s in &set {
            for &v in s {
                covered[v as usize] = true;
            }
        }
        for (v, c) in covered.iter().enumerate() {
            if !c {
                set.insert(vec![v as u32]);
            }
        }
        let facets = maximal(set);
        Ok(SimplicialComplex { vertices, facets })
    }

    /// Builds a complex whose facet list is already known to be maximal.
    pub(crate) fn from_facets_unchecked(vertices: Vec<String>, mut facets: Vec<Simplex>) -> Self {
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension, with −1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// All simplices grouped by dimension, each level sorted.
    pub fn simplices_by_dim(&self) -> Result<Vec<Vec<Simplex>>> {
        self.simplices_up_to(usize::MAX)
    }

    /// Simplices of dimension at most `max_dim`, grouped by dimension.
    pub fn simplices_up_to(&self, max_dim: usize) -> Result<Vec<Vec<Simplex>>> {
        let budget = size_budget();
        let bound: usize = self
            .facets
            .iter()
            .map(|f| {
                (1..=f.len().min(max_dim.saturating_add(1)))
                    .map(|k| binomial(f.len(), k))
                    .fold(0usize, usize::saturating_add)
            })
            .fold(0usize, usize::saturating_add);
        let top = self.dim().max(0) as usize;
        let levels = top.min(max_dim) + 1;
        let mut sets: Vec<HashSet<Simplex>> = vec![HashSet::new(); levels];
        let mut total = 0usize;
        for f in &self.facets {
            for k in 1..=f.len().min(levels) {
                for s in subsets(f, k) {
                    if sets[k - 1].insert(s) {
                        total += 1;
                        if total > budget {
                            return Err(OreError::BudgetExceeded {
                                what: "simplices",
                                size: bound.max(total),
                                budget,
                            });
                        }
                    }
                }
            }
        }
        if self.is_empty() {
            return Ok(Vec::new());
        }
        Ok(sets
            .into_iter()
            .map(|s| {
                let mut v: Vec<Simplex> = s.into_iter().collect();
                v.sort();
                v
            })
            .collect())
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        Ok(self.simplices_by_dim()?.iter().map(Vec::len).collect())
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        let mut s = s.to_vec();
        s.sort_unstable();
        self.facets.iter().any(|f| is_sorted_subset(&s, f))
    }

    /// Pairs of distinct vertices spanning an edge.
    pub fn edges(&self) -> BTreeSet<(u32, u32)> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for i in 0..f.len() {
                for j in i + 1..f.len() {
                    out.insert((f[i], f[j]));
                }
            }
        }
        out
    }

    /// Adjacency sets of the 1-skeleton.
    pub fn adjacency(&self) -> Vec<BTreeSet<u32>> {
        let mut adj = vec![BTreeSet::new(); self.vertices.len()];
        for (a, b) in self.edges() {
            adj[a as usize].insert(b);
            adj[b as usize].insert(a);
        }
        adj
    }

    /// Whether every clique of the 1-skeleton spans a simplex.
    pub fn is_flag(&self) -> bool {
        let flag = flag_complex(self.vertices.clone(), &self.edges().into_iter().collect::<Vec<_>>());
        flag.facets == self.facets
    }

    /// Whether `sigma` is a simplex that is a `k`-ground: every vertex is
    /// adjacent to all but at most `k` vertices of `sigma`.
    pub fn is_k_ground(&self, sigma: &[u32], k: usize) -> bool {
        self.contains(sigma) && ground_defect(&self.adjacency(), sigma) <= k
    }

    /// Number of simplices of the barycentric subdivision, counted as
    /// strict chains of nonempty faces.
    pub fn subdivision_size(&self) -> Result<u128> {
        Ok(self
            .simplices_by_dim()?
            .iter()
            .enumerate()
            .map(|(d, level)| level.len() as u128 * fubini(d + 1))
            .sum())
    }

    /// The full subcomplex on the given vertices.
    pub fn induced(&self, keep: &[u32]) -> SimplicialComplex {
        let keep_set: BTreeSet<u32> = keep.iter().copied().collect();
        let index: std::collections::HashMap<u32, u32> =
            keep_set.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let verts = keep_set.iter().map(|&v| self.vertices[v as usize].clone()).collect();
        let simplices = self
            .facets
            .iter()
            .map(|f| f.iter().filter_map(|v| index.get(v).copied()).collect())
            .collect();
        SimplicialComplex::from_simplices(verts, simplices).expect("indices in range")
    }

    /// Relabels vertices; `perm[v]` is the new index of `v`.
    pub fn relabel(&self, perm: &[u32], labels: Vec<String>) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Simplex = f.iter().map(|&v| perm[v as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        SimplicialComplex::from_facets_unchecked(labels, facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex({} vertices, {} facets, dim {})", self.vertices.len(), self.facets.len(), self.dim())
    }
}

/// Largest number of vertices of `sigma` missed by a single vertex.
/// A vertex of `sigma` does not count itself as missed.
pub fn ground_defect(adj: &[BTreeSet<u32>], sigma: &[u32]) -> usize {
    adj.iter()
        .enumerate()
        .map(|(v, nb)| {
            sigma
                .iter()
                .filter(|&&s| s as usize != v && !nb.contains(&s))
                .count()
        })
        .max()
        .unwrap_or(0)
}

fn is_sorted_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn maximal(set: BTreeSet<Simplex>) -> Vec<Simplex> {
    let mut by_size: Vec<Simplex> = set.into_iter().collect();
    by_size.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut kept: Vec<Simplex> = Vec::new();
    // faces of kept facets, for fast rejection
    let mut faces: HashSet<Simplex> = HashSet::new();
    for s in by_size {
        if faces.contains(&s) {
            continue;
        }
        if kept.iter().any(|f| f.len() > s.len() && is_sorted_subset(&s, f)) {
            continue;
        }
        if s.len() <= 12 {
            for k in 1..s.len() {
                for sub in subsets(&s, k) {
                    faces.insert(sub);
                }
            }
        }
        kept.push(s);
    }
    kept.sort();
    kept
}

/// All `k`-element subsets of a sorted slice, in lexicographic order.
pub fn subsets(s: &[u32], k: usize) -> Vec<Simplex> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > s.len() {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| s[i]).collect());
        let mut i = k;
        while i > 0 && idx[i - 1] == s.len() - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r.min(usize::MAX as u128) as usize
}

/// Ordered set partitions of an `n`-set.
pub fn fubini(n: usize) -> u128 {
    let mut a = vec![1u128; n + 1];
    for m in 1..=n {
        let mut s = 0u128;
        for k in 1..=m {
            s += binomial(m, k) as u128 * a[m - k];
        }
        a[m] = s;
    }
    a[n]
}

/// The clique complex of a graph on labelled vertices.
pub fn flag_complex(vertices: Vec<String>, edges: &[(u32, u32)]) -> SimplicialComplex {
    let n = vertices.len();
    let mut adj = vec![BTreeSet::new(); n];
    for &(a, b) in edges {
        if a != b {
            adj[a as usize].insert(b);
            adj[b as usize].insert(a);
        }
    }
    // Bron–Kerbosch with pivoting, maximal cliques
    let mut out = Vec::new();
    let all: BTreeSet<u32> = (0..n as u32).collect();
    bron_kerbosch(&adj, Vec::new(), all, BTreeSet::new(), &mut out);
    SimplicialComplex::from_facets_unchecked(vertices, out)
}

fn bron_kerbosch(
    adj: &[BTreeSet<u32>],
    r: Vec<u32>,
    mut p: BTreeSet<u32>,
    mut x: BTreeSet<u32>,
    out: &mut Vec<Simplex>,
) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            let mut s = r;
            s.sort_unstable();
            out.push(s);
        }
        return;
    }
    let pivot = *p
        .union(&x)
        .max_by_key(|&&u| p.intersection(&adj[u as usize]).count())
        .unwrap();
    let cand: Vec<u32> = p.difference(&adj[pivot as usize]).copied().collect();
    for v in cand {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.intersection(&adj[v as usize]).copied().collect();
        let x2 = x.intersection(&adj[v as usize]).copied().collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.remove(&v);
        x.insert(v);
    }
}

/// A simple graph on vertices `1..=n`, edges stored as `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(OreError::Graph(format!("bad edge {a}-{b} on {n} vertices")));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(SimpleGraph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// The path `1 - 2 - ... - n`.
    pub fn linear(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    /// The cycle on `n` vertices; for `n <= 2` the parallel edges collapse.
    pub fn cycle(n: usize) -> Self {
        let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        if n >= 2 {
            e.push((1, n));
        }
        Self::new(n, e).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        Self::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)))).unwrap()
    }

    /// Index of an edge in the sorted edge list.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }
}

/// Label used for the matching-complex vertex of an edge.
pub fn edge_label(a: usize, b: usize) -> String {
    format!("{}-{}", a.min(b), a.max(b))
}

/// The complex of matchings of `g`: vertices are edges, simplices are sets of
/// pairwise disjoint edges.
pub fn matching_complex(g: &SimpleGraph) -> SimplicialComplex {
    let labels: Vec<String> = g.edges.iter().map(|&(a, b)| edge_label(a, b)).collect();
    let mut facets = Vec::new();
    let mut used = vec![false; g.n + 1];
    let mut cur = Vec::new();
    maximal_matchings(g, 0, &mut used, &mut cur, &mut facets);
    SimplicialComplex::from_facets_unchecked(labels, facets)
}

fn maximal_matchings(
    g: &SimpleGraph,
    from: usize,
    used: &mut Vec<bool>,
    cur: &mut Vec<u32>,
    out: &mut Vec<Simplex>,
) {
    if from == g.edges.len() {
        let maximal = !g.edges.iter().any(|&(a, b)| !used[a] && !used[b]);
        if maximal && !cur.is_empty() {
            out.push(cur.clone());
        }
        return;
    }
    let (a, b) = g.edges[from];
    if !used[a] && !used[b] {
        used[a] = true;
        used[b] = true;
        cur.push(from as u32);
        maximal_matchings(g, from + 1, used, cur, out);
        cur.pop();
        used[a] = false;
        used[b] = false;
    }
    maximal_matchings(g, from + 1, used, cur, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_l4() {
        let m = matching_complex(&SimpleGraph::linear(4));
        assert_eq!(m.vertex_count(), 3);
        assert_eq!(m.facets(), &[vec![0, 2], vec![1]]);
        assert!(m.is_flag());
    }

    #[test]
    fn matching_complexes_are_flag() {
        for n in 2..=6 {
            assert!(matching_complex(&SimpleGraph::complete(n)).is_flag());
            assert!(matching_complex(&SimpleGraph::cycle(n)).is_flag());
        }
    }

    #[test]
    fn boundary_of_triangle_not_flag() {
        let c = SimplicialComplex::from_simplices(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert!(!c.is_flag());
        assert_eq!(c.f_vector().unwrap(), vec![3, 3]);
    }

    #[test]
    fn matching_counts_k6() {
        // matchings of K_6 by size: 15, 45, 15
        let f = matching_complex(&SimpleGraph::complete(6)).f_vector().unwrap();
        assert_eq!(f, vec![15, 45, 15]);
    }

    #[test]
    fn fubini_numbers() {
        let v: Vec<u128> = (0..6).map(fubini).collect();
        assert_eq!(v, vec![1, 1, 3, 13, 75, 541]);
    }

    #[test]
    fn two_ground_in_l8() {
        let g = SimpleGraph::linear(8);
        let m = matching_complex(&g);
        let sigma: Vec<u32> = [(1, 2), (3, 4), (5, 6), (7, 8)]
            .iter()
            .map(|&(a, b)| g.edge_index(a, b).unwrap() as u32)
            .collect();
        assert!(m.is_k_ground(&sigma, 2));
        assert!(!m.is_k_ground(&sigma, 1));
    }

    #[test]
    fn json_round_trip() {
        let m = matching_complex(&SimpleGraph::cycle(5));
        let s = serde_json::to_string(&m).unwrap();
        let back: SimplicialComplex = serde_json::from_str(&s).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(&[1, 2, 3], 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
