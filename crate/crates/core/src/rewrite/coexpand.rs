//! Co-expansions: embedded copies of `R` that can be collapsed back to an
//! edge, and the complex `E(H)` they span.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::graph::{automorphisms, GraphIso, MultiGraph};
use super::rule::{RewriteMorphism, Rule};
use crate::complexes::{flag_complex, SimplicialComplex};
use crate::error::{OreError, Result};

/// Largest graph searched for patterns.
pub const PATTERN_EDGE_BOUND: usize = 64;

/// An embedded copy of `R` whose interior vertices carry no other edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern {
    pub edges: BTreeSet<String>,
    pub interior: BTreeSet<String>,
    pub src: String,
    pub dst: String,
    pub edge_map: BTreeMap<String, String>,
    pub vertex_map: BTreeMap<String, String>,
}

impl Pattern {
    pub fn label(&self) -> String {
        self.interior.iter().cloned().collect::<Vec<_>>().join(",")
    }

    pub fn is_disjoint(&self, other: &Pattern) -> bool {
        self.edges.is_disjoint(&other.edges)
    }
}

fn degree(g: &MultiGraph, v: &str) -> usize {
    g.incident(v).len()
}

/// All patterns of `rule` in `h`, sorted. Copies differing by an automorphism
/// of `R` fixing `v` and `w` are identified.
pub fn find_coexpansions(h: &MultiGraph, rule: &Rule) -> Result<Vec<Pattern>> {
    if h.edge_count() > PATTERN_EDGE_BOUND {
        return Err(OreError::BoundExceeded {
            what: "pattern search edges",
            n: h.edge_count(),
            bound: PATTERN_EDGE_BOUND,
        });
    }
    let r_edges: Vec<(&String, &(String, String))> = rule.graph.edges().iter().collect();
    let interior: BTreeSet<String> = rule.interior().into_iter().collect();
    let mut found: BTreeMap<(BTreeSet<String>, String, String), Pattern> = BTreeMap::new();
    let h_edges: Vec<(&String, &(String, String))> = h.edges().iter().collect();

    #[allow(clippy::too_many_arguments)]
    fn go(
        k: usize,
        r_edges: &[(&String, &(String, String))],
        h_edges: &[(&String, &(String, String))],
        interior: &BTreeSet<String>,
        emap: &mut BTreeMap<String, String>,
        vmap: &mut BTreeMap<String, String>,
        used: &mut BTreeSet<String>,
        out: &mut Vec<(BTreeMap<String, String>, BTreeMap<String, String>)>,
    ) {
        if k == r_edges.len() {
            out.push((emap.clone(), vmap.clone()));
            return;
        }
        let (xi, (a, b)) = r_edges[k];
        for (id, (s, t)) in h_edges {
            if used.contains(*id) {
                continue;
            }
            let mut added = Vec::new();
            let mut ok = true;
            for (r, img) in [(a, s), (b, t)] {
                match vmap.get(r) {
                    Some(x) if x != img => ok = false,
                    Some(_) => {}
                    None => {
                        // interior images are fresh and distinct from all others
                        let clash = vmap.iter().any(|(r2, x)| {
                            x == img && (interior.contains(r) || interior.contains(r2))
                        });
                        if clash {
                            ok = false;
                        } else {
                            vmap.insert(r.clone(), img.clone());
                            added.push(r.clone());
                        }
                    }
                }
                if !ok {
                    break;
                }
            }
            if ok {
                emap.insert(xi.clone(), (*id).clone());
                used.insert((*id).clone());
                go(k + 1, r_edges, h_edges, interior, emap, vmap, used, out);
                used.remove(*id);
                emap.remove(xi);
            }
            for r in added {
                vmap.remove(&r);
            }
        }
    }

    let mut raw = Vec::new();
    go(
        0,
        &r_edges,
        &h_edges,
        &interior,
        &mut BTreeMap::new(),
        &mut BTreeMap::new(),
        &mut BTreeSet::new(),
        &mut raw,
    );
    for (emap, vmap) in raw {
        let ok = interior
            .iter()
            .all(|u| degree(h, &vmap[u]) == degree(&rule.graph, u));
        if !ok {
            continue;
        }
        let p = Pattern {
            edges: emap.values().cloned().collect(),
            interior: interior.iter().map(|u| vmap[u].clone()).collect(),
            src: vmap[&rule.v].clone(),
            dst: vmap[&rule.w].clone(),
            edge_map: emap,
            vertex_map: vmap,
        };
        found
            .entry((p.edges.clone(), p.src.clone(), p.dst.clone()))
            .or_insert(p);
    }
    Ok(found.into_values().collect())
}

/// Collapses pairwise disjoint patterns to fresh edges `c1, c2, ...`.
/// Returns the expansion `G → G ◁ S` and an isomorphism `G ◁ S → H`.
pub fn contract(h: &MultiGraph, patterns: &[Pattern], rule: &Rule) -> Result<(RewriteMorphism, GraphIso)> {
    for (i, p) in patterns.iter().enumerate() {
        for q in &patterns[i + 1..] {
            if !p.is_disjoint(q) {
                return Err(OreError::Graph(format!(
                    "patterns {} and {} overlap",
                    p.label(),
                    q.label()
                )));
            }
        }
    }
    let mut g = h.clone();
    let mut fresh = Vec::new();
    let mut counter = 0;
    for p in patterns {
        for e in &p.edges {
            g.remove_edge(e);
        }
        for v in &p.interior {
            g.remove_vertex(v);
        }
        let name = loop {
            counter += 1;
            let c = format!("c{counter}");
            if h.edge(&c).is_none() {
                break c;
            }
        };
        g.add_edge(name.clone(), p.src.clone(), p.dst.clone());
        fresh.push(name);
    }
    let m = RewriteMorphism::new(rule, g, fresh.iter().cloned().collect())?;
    let mut vmap = BTreeMap::new();
    let mut emap = BTreeMap::new();
    for v in m.source.vertices() {
        let img = match v.split_once('/') {
            Some((c, u)) => {
                let p = &patterns[fresh.iter().position(|x| x == c).unwrap()];
                p.vertex_map[u].clone()
            }
            None => v.clone(),
        };
        vmap.insert(v.clone(), img);
    }
    for e in m.source.edges().keys() {
        let img = match e.split_once('.') {
            Some((c, xi)) if fresh.iter().any(|x| x == c) => {
                let p = &patterns[fresh.iter().position(|x| x == c).unwrap()];
                p.edge_map[xi].clone()
            }
            _ => e.clone(),
        };
        emap.insert(e.clone(), img);
    }
    let iso = GraphIso::new(m.source.clone(), h.clone(), vmap, emap)?;
    Ok((m, iso))
}

/// `E(H)` with its patterns.
#[derive(Clone, Debug)]
pub struct EGraph {
    pub patterns: Vec<Pattern>,
    pub complex: SimplicialComplex,
}

/// The complex of co-expansions of `h`: one vertex per pattern, simplices the
/// sets of pairwise disjoint patterns. Every facet is collapsed and re-expanded
/// as a check.
pub fn build_e_graph(h: &MultiGraph, rule: &Rule) -> Result<EGraph> {
    let patterns = find_coexpansions(h, rule)?;
    let mut edges = Vec::new();
    for i in 0..patterns.len() {
        for j in i + 1..patterns.len() {
            if patterns[i].is_disjoint(&patterns[j]) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let labels = patterns.iter().map(Pattern::label).collect();
    let complex = flag_complex(labels, &edges);
    for f in complex.facets() {
        let chosen: Vec<Pattern> = f.iter().map(|&i| patterns[i as usize].clone()).collect();
        contract(h, &chosen, rule)?;
    }
    Ok(EGraph { patterns, complex })
}

/// Orbits of patterns under `Aut(H)`, as sorted lists of pattern indices.
pub fn pattern_orbits(h: &MultiGraph, patterns: &[Pattern]) -> Vec<Vec<usize>> {
    let auts = automorphisms(h);
    let index: BTreeMap<&BTreeSet<String>, usize> =
        patterns.iter().enumerate().map(|(i, p)| (&p.edges, i)).collect();
    let mut seen = vec![false; patterns.len()];
    let mut orbits = Vec::new();
    for i in 0..patterns.len() {
        if seen[i] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for g in &auts {
            let img: BTreeSet<String> = patterns[i].edges.iter().map(|e| g.emap[e].clone()).collect();
            if let Some(&j) = index.get(&img) {
                orbit.insert(j);
                seen[j] = true;
            }
        }
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

fn graph(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> MultiGraph {
    MultiGraph::new(vertices, edges).expect("well-formed builder graph")
}

fn e(id: &str, s: &str, t: &str) -> (String, String, String) {
    (id.to_string(), s.to_string(), t.to_string())
}

/// A single edge `a: v → w`.
pub fn single_edge() -> MultiGraph {
    graph(vec!["v".into(), "w".into()], vec![e("a", "v", "w")])
}

/// Two looped vertices joined by a pair of opposite edges.
pub fn basilica_graph() -> MultiGraph {
    graph(
        vec!["x".into(), "y".into()],
        vec![
            e("lx", "x", "x"),
            e("ly", "y", "y"),
            e("xy", "x", "y"),
            e("yx", "y", "x"),
        ],
    )
}

/// Two triangles, each with loops at two corners, joined through their
/// unlooped corners by a chain of `middle` opposite edge pairs.
pub fn bad_graph(middle: usize) -> Result<MultiGraph> {
    if middle == 0 {
        return Err(OreError::BoundExceeded {
            what: "middle chain length (at least 1)",
            n: 0,
            bound: 1,
        });
    }
    let mut v: Vec<String> = ["o", "p", "q", "k", "l", "m"].iter().map(|s| s.to_string()).collect();
    let chain: Vec<String> = (0..=middle)
        .map(|i| match i {
            0 => "o".to_string(),
            i if i == middle => "k".to_string(),
            i => format!("c{i}"),
        })
        .collect();
    v.extend(chain[1..middle].iter().cloned());
    let mut edges = vec![
        e("op", "o", "p"),
        e("pp", "p", "p"),
        e("pq", "p", "q"),
        e("qq", "q", "q"),
        e("qo", "q", "o"),
        e("kl", "k", "l"),
        e("ll", "l", "l"),
        e("lm", "l", "m"),
        e("mm", "m", "m"),
        e("mk", "m", "k"),
    ];
    for i in 1..=middle {
        edges.push(e(&format!("f{i}"), &chain[i - 1], &chain[i]));
        edges.push(e(&format!("b{i}"), &chain[i], &chain[i - 1]));
    }
    Ok(graph(v, edges))
}
