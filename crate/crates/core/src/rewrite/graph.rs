//! Directed multigraphs with named vertices and edges, and their isomorphisms.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};

/// A finite directed multigraph. Edge ids are unique; loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct MultiGraph {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, (String, String)>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRepr {
    id: String,
    src: String,
    dst: String,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<String>,
    edges: Vec<EdgeRepr>,
}

impl TryFrom<GraphRepr> for MultiGraph {
    type Error = OreError;
    fn try_from(r: GraphRepr) -> Result<Self> {
        let n = r.edges.len();
        let g = MultiGraph::new(
            r.vertices,
            r.edges.into_iter().map(|e| (e.id, e.src, e.dst)),
        )?;
        if g.edges.len() != n {
            return Err(OreError::Graph("duplicate edge id".into()));
        }
        Ok(g)
    }
}

impl From<MultiGraph> for GraphRepr {
    fn from(g: MultiGraph) -> Self {
        GraphRepr {
            vertices: g.vertices.into_iter().collect(),
            edges: g
                .edges
                .into_iter()
                .map(|(id, (src, dst))| EdgeRepr { id, src, dst })
                .collect(),
        }
    }
}

impl MultiGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: BTreeSet<String> = vertices.into_iter().collect();
        let mut map = BTreeMap::new();
        for (id, s, t) in edges {
            for v in [&s, &t] {
                if !vertices.contains(v) {
                    return Err(OreError::Graph(format!("edge {id} uses unknown vertex {v}")));
                }
            }
            if map.insert(id.clone(), (s, t)).is_some() {
                return Err(OreError::Graph(format!("duplicate edge id {id}")));
            }
        }
        Ok(MultiGraph { vertices, edges: map })
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeMap<String, (String, String)> {
        &self.edges
    }

    pub fn edge(&self, id: &str) -> Option<&(String, String)> {
        self.edges.get(id)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Ids of edges touching `v`, loops once.
    pub fn incident(&self, v: &str) -> Vec<&str> {
        self.edges
            .iter()
            .filter(|(_, (s, t))| s == v || t == v)
            .map(|(id, _)| id.as_str())
            .collect()
    }

    pub(crate) fn remove_edge(&mut self, id: &str) -> Option<(String, String)> {
        self.edges.remove(id)
    }

    pub(crate) fn remove_vertex(&mut self, v: &str) {
        self.vertices.remove(v);
    }

    pub(crate) fn add_vertex(&mut self, v: String) {
        self.vertices.insert(v);
    }

    pub(crate) fn add_edge(&mut self, id: String, s: String, t: String) {
        self.edges.insert(id, (s, t));
    }

    /// Renames every vertex and edge by appending `suffix`.
    pub fn renamed(&self, suffix: &str) -> MultiGraph {
        MultiGraph {
            vertices: self.vertices.iter().map(|v| format!("{v}{suffix}")).collect(),
            edges: self
                .edges
                .iter()
                .map(|(id, (s, t))| (format!("{id}{suffix}"), (format!("{s}{suffix}"), format!("{t}{suffix}"))))
                .collect(),
        }
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|(id, (s, t))| format!("{id}:{s}->{t}"))
            .collect();
        write!(f, "{{{}}}", edges.join(", "))
    }
}

/// An isomorphism between two multigraphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphIso {
    pub source: MultiGraph,
    pub target: MultiGraph,
    pub vmap: BTreeMap<String, String>,
    pub emap: BTreeMap<String, String>,
}

impl GraphIso {
    /// Validates bijectivity and incidence.
    pub fn new(
        source: MultiGraph,
        target: MultiGraph,
        vmap: BTreeMap<String, String>,
        emap: BTreeMap<String, String>,
    ) -> Result<Self> {
        let g = GraphIso { source, target, vmap, emap };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(OreError::Graph(format!("not an isomorphism: {m}")));
        let vk: BTreeSet<&String> = self.vmap.keys().collect();
        let vv: BTreeSet<&String> = self.vmap.values().collect();
        if vk != self.source.vertices.iter().collect() || vv != self.target.vertices.iter().collect() || vv.len() != vk.len() {
            return bad("vertex map");
        }
        let ek: BTreeSet<&String> = self.emap.keys().collect();
        let ev: BTreeSet<&String> = self.emap.values().collect();
        if ek != self.source.edges.keys().collect() || ev != self.target.edges.keys().collect() || ev.len() != ek.len() {
            return bad("edge map");
        }
        for (e, (s, t)) in &self.source.edges {
            let (s2, t2) = &self.target.edges[&self.emap[e]];
            if &self.vmap[s] != s2 || &self.vmap[t] != t2 {
                return bad(&format!("incidence of {e}"));
            }
        }
        Ok(())
    }

    pub fn identity(g: &MultiGraph) -> Self {
        GraphIso {
            source: g.clone(),
            target: g.clone(),
            vmap: g.vertices.iter().map(|v| (v.clone(), v.clone())).collect(),
            emap: g.edges.keys().map(|e| (e.clone(), e.clone())).collect(),
        }
    }

    /// The renaming `G → G.renamed(suffix)`.
    pub fn renaming(g: &MultiGraph, suffix: &str) -> Self {
        GraphIso {
            source: g.clone(),
            target: g.renamed(suffix),
            vmap: g.vertices.iter().map(|v| (v.clone(), format!("{v}{suffix}"))).collect(),
            emap: g.edges.keys().map(|e| (e.clone(), format!("{e}{suffix}"))).collect(),
        }
    }

    /// `self ∘ other`; `other` applies first.
    pub fn compose(&self, other: &GraphIso) -> Result<GraphIso> {
        if other.target != self.source {
            return Err(OreError::Graph("isomorphisms not composable".into()));
        }
        Ok(GraphIso {
            source: other.source.clone(),
            target: self.target.clone(),
            vmap: other.vmap.iter().map(|(a, b)| (a.clone(), self.vmap[b].clone())).collect(),
            emap: other.emap.iter().map(|(a, b)| (a.clone(), self.emap[b].clone())).collect(),
        })
    }

    pub fn inverse(&self) -> GraphIso {
        GraphIso {
            source: self.target.clone(),
            target: self.source.clone(),
            vmap: self.vmap.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            emap: self.emap.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.vmap.iter().all(|(a, b)| a == b)
            && self.emap.iter().all(|(a, b)| a == b)
    }
}

impl fmt::Display for GraphIso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.vmap.iter().map(|(a, b)| format!("{a}↦{b}")).collect();
        let e: Vec<String> = self.emap.iter().map(|(a, b)| format!("{a}↦{b}")).collect();
        write!(f, "[{}; {}]", v.join(","), e.join(","))
    }
}

/// Stable vertex colours of the disjoint union, by iterated refinement of
/// (out-degree, in-degree, loops) with neighbour colour multisets.
fn refine(graphs: [&MultiGraph; 2]) -> [HashMap<String, usize>; 2] {
    let mut colors: [HashMap<String, usize>; 2] = [HashMap::new(), HashMap::new()];
    let mut sigs: [HashMap<String, String>; 2] = [HashMap::new(), HashMap::new()];
    for (k, g) in graphs.iter().enumerate() {
        for v in &g.vertices {
            let out = g.edges.values().filter(|(s, t)| s == v && t != v).count();
            let inn = g.edges.values().filter(|(s, t)| t == v && s != v).count();
            let lp = g.edges.values().filter(|(s, t)| s == v && t == v).count();
            sigs[k].insert(v.clone(), format!("{out},{inn},{lp}"));
        }
    }
    let mut classes = 0;
    loop {
        let mut intern: BTreeMap<String, usize> = BTreeMap::new();
        for s in sigs.iter().flat_map(|m| m.values()) {
            intern.insert(s.clone(), 0);
        }
        for (i, v) in intern.values_mut().enumerate() {
            *v = i;
        }
        for k in 0..2 {
            colors[k] = sigs[k].iter().map(|(v, s)| (v.clone(), intern[s])).collect();
        }
        if intern.len() == classes {
            return colors;
        }
        classes = intern.len();
        for (k, g) in graphs.iter().enumerate() {
            for v in &g.vertices {
                let mut outs: Vec<usize> = g
                    .edges
                    .values()
                    .filter(|(s, t)| s == v && t != v)
                    .map(|(_, t)| colors[k][t])
                    .collect();
                let mut ins: Vec<usize> = g
                    .edges
                    .values()
                    .filter(|(s, t)| t == v && s != v)
                    .map(|(s, _)| colors[k][s])
                    .collect();
                outs.sort_unstable();
                ins.sort_unstable();
                sigs[k].insert(v.clone(), format!("{}|{outs:?}|{ins:?}", colors[k][v]));
            }
        }
    }
}

/// Isomorphisms `a → b`, at most `limit` of them, in a deterministic order.
pub fn isomorphisms(a: &MultiGraph, b: &MultiGraph, limit: usize) -> Vec<GraphIso> {
    let mut out = Vec::new();
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return out;
    }
    let [ca, cb] = refine([a, b]);
    let mut hist_a: Vec<usize> = ca.values().copied().collect();
    let mut hist_b: Vec<usize> = cb.values().copied().collect();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return out;
    }
    // multiplicity of edges between ordered vertex pairs
    let mult = |g: &MultiGraph| {
        let mut m: HashMap<(String, String), Vec<String>> = HashMap::new();
        for (id, (s, t)) in &g.edges {
            m.entry((s.clone(), t.clone())).or_default().push(id.clone());
        }
        m
    };
    let (ma, mb) = (mult(a), mult(b));
    let av: Vec<&String> = a.vertices.iter().collect();
    let bv: Vec<&String> = b.vertices.iter().collect();
    let mut assign: Vec<Option<usize>> = vec![None; av.len()];
    let mut used = vec![false; bv.len()];
    let count = |m: &HashMap<(String, String), Vec<String>>, x: &String, y: &String| {
        m.get(&(x.clone(), y.clone())).map_or(0, Vec::len)
    };

    struct Search<'a> {
        av: &'a [&'a String],
        bv: &'a [&'a String],
        ca: &'a HashMap<String, usize>,
        cb: &'a HashMap<String, usize>,
    }
    fn go(
        s: &Search,
        i: usize,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        ok: &dyn Fn(&[Option<usize>], usize, usize) -> bool,
        found: &mut dyn FnMut(&[Option<usize>]) -> bool,
    ) -> bool {
        if i == s.av.len() {
            return found(assign);
        }
        for j in 0..s.bv.len() {
            if used[j] || s.ca[s.av[i]] != s.cb[s.bv[j]] || !ok(assign, i, j) {
                continue;
            }
            assign[i] = Some(j);
            used[j] = true;
            let stop = go(s, i + 1, assign, used, ok, found);
            used[j] = false;
            assign[i] = None;
            if stop {
                return true;
            }
        }
        false
    }
    let ok = |assign: &[Option<usize>], i: usize, j: usize| {
        if count(&ma, av[i], av[i]) != count(&mb, bv[j], bv[j]) {
            return false;
        }
        assign.iter().enumerate().all(|(k, m)| match m {
            Some(l) => {
                count(&ma, av[i], av[k]) == count(&mb, bv[j], bv[*l])
                    && count(&ma, av[k], av[i]) == count(&mb, bv[*l], bv[j])
            }
            None => true,
        })
    };
    let search = Search { av: &av, bv: &bv, ca: &ca, cb: &cb };
    let mut found = |assign: &[Option<usize>]| -> bool {
        let vmap: BTreeMap<String, String> = assign
            .iter()
            .enumerate()
            .map(|(i, j)| (av[i].clone(), bv[j.unwrap()].clone()))
            .collect();
        // edge bijections: every matching of parallel classes
        let mut groups: Vec<(Vec<String>, Vec<String>)> = ma
            .iter()
            .map(|((s, t), ids)| {
                let mut x = ids.clone();
                x.sort();
                let mut y = mb[&(vmap[s].clone(), vmap[t].clone())].clone();
                y.sort();
                (x, y)
            })
            .collect();
        groups.sort();
        let mut emaps: Vec<BTreeMap<String, String>> = vec![BTreeMap::new()];
        for (x, y) in &groups {
            let perms = permutations(y.len());
            let mut next = Vec::new();
            for m in &emaps {
                for p in &perms {
                    let mut m2 = m.clone();
                    for (k, &pk) in p.iter().enumerate() {
                        m2.insert(x[k].clone(), y[pk].clone());
                    }
                    next.push(m2);
                }
            }
            emaps = next;
        }
        for emap in emaps {
            out.push(GraphIso {
                source: a.clone(),
                target: b.clone(),
                vmap: vmap.clone(),
                emap,
            });
            if out.len() >= limit {
                return true;
            }
        }
        false
    };
    go(&search, 0, &mut assign, &mut used, &ok, &mut found);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn find_isomorphism(a: &MultiGraph, b: &MultiGraph) -> Option<GraphIso> {
    isomorphisms(a, b, 1).pop()
}

pub fn automorphisms(g: &MultiGraph) -> Vec<GraphIso> {
    isomorphisms(g, g, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(v: &[&str], e: &[(&str, &str, &str)]) -> MultiGraph {
        MultiGraph::new(
            v.iter().map(|s| s.to_string()),
            e.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string())),
        )
        .unwrap()
    }

    #[test]
    fn directed_cycle_automorphisms() {
        let c3 = graph(&["a", "b", "c"], &[("x", "a", "b"), ("y", "b", "c"), ("z", "c", "a")]);
        let auts = automorphisms(&c3);
        assert_eq!(auts.len(), 3);
        for g in &auts {
            g.validate().unwrap();
        }
    }

    #[test]
    fn parallel_edges_permute() {
        let g = graph(&["a", "b"], &[("x", "a", "b"), ("y", "a", "b")]);
        assert_eq!(automorphisms(&g).len(), 2);
    }

    #[test]
    fn direction_matters() {
        let p = graph(&["a", "b", "c"], &[("x", "a", "b"), ("y", "b", "c")]);
        let q = graph(&["a", "b", "c"], &[("x", "a", "b"), ("y", "c", "b")]);
        assert!(find_isomorphism(&p, &q).is_none());
        assert!(find_isomorphism(&p, &p.renamed("'")).is_some());
    }

    #[test]
    fn json_shape() {
        let g = graph(&["v", "w"], &[("a", "v", "w")]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"vertices":["v","w"],"edges":[{"id":"a","src":"v","dst":"w"}]}"#);
        assert!(serde_json::from_str::<MultiGraph>(r#"{"vertices":["v"],"edges":[{"id":"a","src":"v","dst":"w"}]}"#).is_err());
    }
}
