//! Edge replacement rules and the category of expansions.
//!
//! Applying a rule at an edge `ε` removes `ε` and glues in a copy of `R`.
//! Created edges are named `ε.ξ` for `ξ ∈ E(R)` and created vertices `ε/u`
//! for interior `u ∈ V(R)`, so expansions at distinct edges commute as named
//! graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::graph::{GraphIso, MultiGraph};
use crate::error::{OreError, Result};

/// An edge replacement rule `e → R`; `R` contains the endpoints `v`, `w` of `e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub name: String,
    pub graph: MultiGraph,
    pub v: String,
    pub w: String,
}

fn edges(list: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    list.iter()
        .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
        .collect()
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

impl Rule {
    pub fn new(name: &str, graph: MultiGraph, v: &str, w: &str) -> Result<Rule> {
        if v == w || !graph.vertices().contains(v) || !graph.vertices().contains(w) {
            return Err(OreError::Graph("rule graph must contain both endpoints".into()));
        }
        for id in graph.edges().keys().chain(graph.vertices().iter()) {
            if id.is_empty() || id.contains('.') || id.contains('/') {
                return Err(OreError::Graph(format!("rule name {id:?} may not contain '.' or '/'")));
            }
        }
        let rule = Rule {
            name: name.to_string(),
            graph,
            v: v.to_string(),
            w: w.to_string(),
        };
        for u in rule.interior() {
            if rule.graph.incident(&u).is_empty() {
                return Err(OreError::Graph(format!("interior vertex {u} is isolated")));
            }
        }
        Ok(rule)
    }

    /// Subdivision: `v → m → w`.
    pub fn l2() -> Rule {
        let g = MultiGraph::new(names(&["v", "w", "m"]), edges(&[("1", "v", "m"), ("2", "m", "w")])).unwrap();
        Rule::new("L2", g, "v", "w").unwrap()
    }

    /// Two disconnected edges `v → a` and `b → w`.
    pub fn d2() -> Rule {
        let g = MultiGraph::new(
            names(&["v", "w", "a", "b"]),
            edges(&[("1", "v", "a"), ("2", "b", "w")]),
        )
        .unwrap();
        Rule::new("D2", g, "v", "w").unwrap()
    }

    /// `v → m → w` with a loop at the midpoint.
    pub fn basilica() -> Rule {
        let g = MultiGraph::new(
            names(&["v", "w", "m"]),
            edges(&[("1", "v", "m"), ("2", "m", "m"), ("3", "m", "w")]),
        )
        .unwrap();
        Rule::new("basilica", g, "v", "w").unwrap()
    }

    /// Vertices of `R` other than `v` and `w`.
    pub fn interior(&self) -> Vec<String> {
        self.graph
            .vertices()
            .iter()
            .filter(|u| **u != self.v && **u != self.w)
            .cloned()
            .collect()
    }

    pub fn edge_letters(&self) -> Vec<String> {
        self.graph.edges().keys().cloned().collect()
    }
}

impl FromStr for Rule {
    type Err = OreError;
    fn from_str(s: &str) -> Result<Rule> {
        match s {
            "L2" | "l2" => Ok(Rule::l2()),
            "D2" | "d2" => Ok(Rule::d2()),
            "basilica" => Ok(Rule::basilica()),
            _ => Err(OreError::Parse(format!("unknown rule {s:?} (expected L2, D2 or basilica)"))),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// `G ◁ ε`.
pub fn apply_rule(g: &MultiGraph, eps: &str, rule: &Rule) -> Result<MultiGraph> {
    let mut h = g.clone();
    let (s, t) = h
        .remove_edge(eps)
        .ok_or_else(|| OreError::MissingEdge(eps.to_string()))?;
    let place = |u: &String| -> String {
        if *u == rule.v {
            s.clone()
        } else if *u == rule.w {
            t.clone()
        } else {
            format!("{eps}/{u}")
        }
    };
    for u in rule.interior() {
        h.add_vertex(place(&u));
    }
    for (xi, (a, b)) in rule.graph.edges() {
        h.add_edge(format!("{eps}.{xi}"), place(a), place(b));
    }
    Ok(h)
}

/// Number of edges.
pub fn height_graph(g: &MultiGraph) -> usize {
    g.edge_count()
}

/// The address an expanded edge came from, if any.
pub fn parent_address(addr: &str) -> Option<&str> {
    addr.rfind('.').map(|i| &addr[..i])
}

/// Rewrites an address through `emap` at its longest prefix that is an edge
/// of the domain: `εζ ↦ g(ε)ζ`.
pub fn transport_edge(emap: &BTreeMap<String, String>, addr: &str) -> Result<String> {
    let mut cut = addr.len();
    loop {
        if let Some(img) = emap.get(&addr[..cut]) {
            return Ok(format!("{img}{}", &addr[cut..]));
        }
        match addr[..cut].rfind('.') {
            Some(i) => cut = i,
            None => return Err(OreError::MissingEdge(addr.to_string())),
        }
    }
}

fn transport_vertex(g: &GraphIso, v: &str) -> Result<String> {
    if let Some(img) = g.vmap.get(v) {
        return Ok(img.clone());
    }
    match v.find('/') {
        Some(i) => Ok(format!("{}{}", transport_edge(&g.emap, &v[..i])?, &v[i..])),
        None => Err(OreError::Graph(format!("vertex {v} outside the domain"))),
    }
}

/// A morphism of the expansion category: the target graph `G` expanded along
/// an ancestor-closed set of edge addresses, giving the source `G ◁ S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteMorphism {
    pub rule: Rule,
    pub target: MultiGraph,
    pub source: MultiGraph,
    pub expansions: BTreeSet<String>,
}

impl RewriteMorphism {
    pub fn new(rule: &Rule, target: MultiGraph, expansions: BTreeSet<String>) -> Result<Self> {
        // addresses are edges of the target or children of expanded addresses
        for a in &expansions {
            if target.edge(a).is_none() {
                match parent_address(a) {
                    Some(p) if expansions.contains(p) => {}
                    Some(_) => return Err(OreError::NotAncestorClosed(a.clone())),
                    None => return Err(OreError::MissingEdge(a.clone())),
                }
            }
        }
        let mut order: Vec<&String> = expansions.iter().collect();
        order.sort_by_key(|a| (a.matches('.').count(), (*a).clone()));
        let mut source = target.clone();
        for a in order {
            source = apply_rule(&source, a, rule)?;
        }
        Ok(RewriteMorphism {
            rule: rule.clone(),
            target,
            source,
            expansions,
        })
    }

    pub fn identity(rule: &Rule, g: &MultiGraph) -> Self {
        RewriteMorphism {
            rule: rule.clone(),
            target: g.clone(),
            source: g.clone(),
            expansions: BTreeSet::new(),
        }
    }

    /// The generator `λ^G_ε`.
    pub fn generator(rule: &Rule, g: &MultiGraph, eps: &str) -> Result<Self> {
        Self::new(rule, g.clone(), [eps.to_string()].into())
    }

    pub fn is_identity(&self) -> bool {
        self.expansions.is_empty()
    }

    /// `self · other`: expand the source of `self` further along `other`.
    pub fn compose(&self, other: &RewriteMorphism) -> Result<Self> {
        if self.source != other.target {
            return Err(OreError::BoundaryMismatch {
                context: "compose_rewrites",
                expected: self.source.edge_count(),
                found: other.target.edge_count(),
            });
        }
        let mut set = self.expansions.clone();
        set.extend(other.expansions.iter().cloned());
        Ok(RewriteMorphism {
            rule: self.rule.clone(),
            target: self.target.clone(),
            source: other.source.clone(),
            expansions: set,
        })
    }

    fn same_target(&self, other: &RewriteMorphism, what: &'static str) -> Result<()> {
        if self.target != other.target {
            return Err(OreError::BoundaryMismatch {
                context: what,
                expected: self.target.edge_count(),
                found: other.target.edge_count(),
            });
        }
        Ok(())
    }

    pub fn left_divides(&self, other: &RewriteMorphism) -> bool {
        self.target == other.target && self.expansions.is_subset(&other.expansions)
    }

    /// The `q` with `self · q = other`.
    pub fn left_quotient(&self, other: &RewriteMorphism) -> Result<Self> {
        self.same_target(other, "left_quotient")?;
        if !self.left_divides(other) {
            return Err(OreError::NotALeftFactor(format!("{self}")));
        }
        let rest = other.expansions.difference(&self.expansions).cloned().collect();
        Self::new(&self.rule, self.source.clone(), rest)
    }

    pub fn lcm(&self, other: &RewriteMorphism) -> Result<Self> {
        self.same_target(other, "lcm_rewrites")?;
        let set = self.expansions.union(&other.expansions).cloned().collect();
        Self::new(&self.rule, self.target.clone(), set)
    }

    pub fn gcd(&self, other: &RewriteMorphism) -> Result<Self> {
        self.same_target(other, "gcd_rewrites")?;
        let set = self.expansions.intersection(&other.expansions).cloned().collect();
        Self::new(&self.rule, self.target.clone(), set)
    }

    /// `(g·m, g^m)` for an isomorphism `g` out of the target.
    pub fn act(&self, g: &GraphIso) -> Result<(RewriteMorphism, GraphIso)> {
        if g.source != self.target {
            return Err(OreError::Graph("isomorphism domain is not the target".into()));
        }
        let set = self
            .expansions
            .iter()
            .map(|a| transport_edge(&g.emap, a))
            .collect::<Result<BTreeSet<_>>>()?;
        let moved = RewriteMorphism::new(&self.rule, g.target.clone(), set)?;
        let vmap = self
            .source
            .vertices()
            .iter()
            .map(|v| Ok((v.clone(), transport_vertex(g, v)?)))
            .collect::<Result<_>>()?;
        let emap = self
            .source
            .edges()
            .keys()
            .map(|e| Ok((e.clone(), transport_edge(&g.emap, e)?)))
            .collect::<Result<_>>()?;
        let cloned = GraphIso::new(self.source.clone(), moved.source.clone(), vmap, emap)?;
        Ok((moved, cloned))
    }

    /// Recovers `g` from `g^m`; fails when `h` is not of that form.
    pub fn uncloned(&self, h: &GraphIso) -> Result<GraphIso> {
        if h.source != self.source {
            return Err(OreError::Graph("isomorphism domain is not the source".into()));
        }
        let mut emap = BTreeMap::new();
        let mut target_set = BTreeSet::new();
        for e in self.target.edges().keys() {
            let img = if self.expansions.contains(e) {
                let child = self
                    .source
                    .edges()
                    .keys()
                    .find(|a| a.starts_with(&format!("{e}.")))
                    .ok_or_else(|| OreError::MissingEdge(e.clone()))?;
                let suffix = &child[e.len()..];
                let img = &h.emap[child];
                img.strip_suffix(suffix)
                    .ok_or(OreError::NotInImage(0))?
                    .to_string()
            } else {
                h.emap[e].clone()
            };
            emap.insert(e.clone(), img);
        }
        for a in &self.expansions {
            target_set.insert(transport_edge(&emap, a)?);
        }
        let vmap = self
            .target
            .vertices()
            .iter()
            .map(|v| (v.clone(), h.vmap[v].clone()))
            .collect();
        let target_graph = contract_set(&h.target, &target_set, &self.rule)?;
        let g = GraphIso::new(self.target.clone(), target_graph, vmap, emap)?;
        let (_, again) = self.act(&g)?;
        if &again != h {
            return Err(OreError::NotInImage(0));
        }
        Ok(g)
    }
}

/// Undoes a hereditary expansion set on a named graph.
fn contract_set(h: &MultiGraph, set: &BTreeSet<String>, rule: &Rule) -> Result<MultiGraph> {
    let mut order: Vec<&String> = set.iter().collect();
    order.sort_by_key(|a| std::cmp::Reverse((a.matches('.').count(), (*a).clone())));
    let mut g = h.clone();
    for a in order {
        // endpoints of the collapsed edge: images of v and w
        let mut s = None;
        let mut t = None;
        for (xi, (x, y)) in rule.graph.edges() {
            let (gx, gy) = g
                .remove_edge(&format!("{a}.{xi}"))
                .ok_or_else(|| OreError::MissingEdge(format!("{a}.{xi}")))?;
            for (r, img) in [(x, gx), (y, gy)] {
                if *r == rule.v {
                    s = Some(img);
                } else if *r == rule.w {
                    t = Some(img);
                }
            }
        }
        for u in rule.interior() {
            g.remove_vertex(&format!("{a}/{u}"));
        }
        g.add_edge(a.clone(), s.unwrap(), t.unwrap());
    }
    Ok(g)
}

impl fmt::Display for RewriteMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.expansions.iter().map(String::as_str).collect();
        write!(f, "λ{{{}}} on {}", s.join(","), self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> MultiGraph {
        MultiGraph::new(names(&["v", "w"]), edges(&[("a", "v", "w")])).unwrap()
    }

    #[test]
    fn basilica_on_an_edge() {
        let h = apply_rule(&single_edge(), "a", &Rule::basilica()).unwrap();
        assert_eq!(h.edge("a.1"), Some(&("v".into(), "a/m".into())));
        assert_eq!(h.edge("a.2"), Some(&("a/m".into(), "a/m".into())));
        assert_eq!(h.edge("a.3"), Some(&("a/m".into(), "w".into())));
        assert_eq!(height_graph(&h), height_graph(&single_edge()) + 2);
    }

    #[test]
    fn expansions_commute() {
        let g = MultiGraph::new(names(&["x", "y"]), edges(&[("a", "x", "y"), ("b", "y", "x")])).unwrap();
        let r = Rule::l2();
        let ab = apply_rule(&apply_rule(&g, "a", &r).unwrap(), "b", &r).unwrap();
        let ba = apply_rule(&apply_rule(&g, "b", &r).unwrap(), "a", &r).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(ab.edge_count(), 4);
        let la = RewriteMorphism::generator(&r, &g, "a").unwrap();
        let lb = RewriteMorphism::generator(&r, &g, "b").unwrap();
        let x = la.compose(&RewriteMorphism::generator(&r, &la.source, "b").unwrap()).unwrap();
        let y = lb.compose(&RewriteMorphism::generator(&r, &lb.source, "a").unwrap()).unwrap();
        assert_eq!(x, y);
        assert_eq!(la.lcm(&lb).unwrap(), x);
        assert_eq!(la.gcd(&la).unwrap(), la);
    }

    #[test]
    fn ancestor_closure_enforced() {
        let r = Rule::l2();
        assert!(matches!(
            RewriteMorphism::new(&r, single_edge(), ["a.1".to_string()].into()),
            Err(OreError::NotAncestorClosed(_))
        ));
        assert!(RewriteMorphism::new(&r, single_edge(), ["a".to_string(), "a.1".to_string()].into()).is_ok());
    }

    #[test]
    fn missing_edge() {
        assert!(matches!(apply_rule(&single_edge(), "z", &Rule::l2()), Err(OreError::MissingEdge(_))));
    }

    #[test]
    fn cloned_iso_fixes_fresh_letters() {
        let g = MultiGraph::new(names(&["x", "y"]), edges(&[("a", "x", "y"), ("b", "y", "x")])).unwrap();
        let swap = GraphIso::new(
            g.clone(),
            g.clone(),
            [("x", "y"), ("y", "x")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            [("a", "b"), ("b", "a")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        )
        .unwrap();
        let r = Rule::basilica();
        let la = RewriteMorphism::generator(&r, &g, "a").unwrap();
        let (moved, cloned) = la.act(&swap).unwrap();
        assert_eq!(moved.expansions, ["b".to_string()].into());
        assert_eq!(cloned.emap["a.2"], "b.2");
        assert_eq!(cloned.vmap["a/m"], "b/m");
        assert_eq!(la.uncloned(&cloned).unwrap(), swap);
    }
}
