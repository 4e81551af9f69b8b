//! Indirect-product axioms for the action of graph isomorphisms on
//! expansions, checked on enumerated instances.

use std::collections::BTreeSet;

use super::graph::{automorphisms, GraphIso, MultiGraph};
use super::rule::{RewriteMorphism, Rule};
use crate::error::{OreError, Result};
use crate::zs::CheckReport;

/// Expansions out of `g`: identity, single edges, pairs of edges, and an edge
/// together with one of its children.
pub fn enumerate_expansions(g: &MultiGraph, rule: &Rule) -> Result<Vec<RewriteMorphism>> {
    let edges: Vec<&String> = g.edges().keys().collect();
    let mut sets: Vec<BTreeSet<String>> = vec![BTreeSet::new()];
    for (i, a) in edges.iter().enumerate() {
        sets.push([(*a).clone()].into());
        for b in &edges[i + 1..] {
            sets.push([(*a).clone(), (*b).clone()].into());
        }
        for xi in rule.edge_letters() {
            sets.push([(*a).clone(), format!("{a}.{xi}")].into());
        }
    }
    sets.into_iter()
        .map(|s| RewriteMorphism::new(rule, g.clone(), s))
        .collect()
}

fn render(m: &RewriteMorphism) -> String {
    m.to_string()
}

/// IP1–IP8 and injectivity of the cloning action on a graph with at most
/// `max_edges` edges, using its automorphisms and a renamed copy.
pub fn check_iso_action(g: &MultiGraph, rule: &Rule, max_edges: usize) -> Result<CheckReport> {
    if g.edge_count() > max_edges {
        return Err(OreError::BoundExceeded {
            what: "graph edges for axiom checks",
            n: g.edge_count(),
            bound: max_edges,
        });
    }
    let mut rep = CheckReport::new(format!("iso action {rule} on {g}"));
    let auts = automorphisms(g);
    let rename = GraphIso::renaming(g, "'");
    let mut isos: Vec<GraphIso> = auts.clone();
    for a in &auts {
        isos.push(rename.compose(a)?);
    }
    let id = GraphIso::identity(g);
    let morphisms = enumerate_expansions(g, rule)?;
    for f in &morphisms {
        let (m, c) = f.act(&id)?;
        rep.expect("IP1", || render(f), &m == f, || (render(&m), render(f)));
        rep.expect("IP5", || render(f), c.is_identity(), || (c.to_string(), "1".into()));
        for h in &isos {
            let (hf, hc) = f.act(h)?;
            let back = f.uncloned(&hc);
            rep.expect(
                "injective",
                || format!("{h} {}", render(f)),
                back.as_ref() == Ok(h),
                || (format!("{back:?}"), h.to_string()),
            );
            let _ = hf;
        }
    }
    let one = RewriteMorphism::identity(rule, g);
    for h in &isos {
        let (m, c) = one.act(h)?;
        rep.expect("IP2", || h.to_string(), &c == h, || (c.to_string(), h.to_string()));
        rep.expect("IP6", || h.to_string(), m.is_identity(), || (render(&m), "1".into()));
    }
    // IP3, IP7: g2 an automorphism, g1 any isomorphism out of G
    for g2 in &auts {
        for g1 in &isos {
            let g12 = g1.compose(g2)?;
            for f in &morphisms {
                let (l, lc) = f.act(&g12)?;
                let (g2f, g2c) = f.act(g2)?;
                let (r, g1c) = g2f.act(g1)?;
                rep.expect("IP3", || format!("{g1} {g2} {}", render(f)), l == r, || (render(&l), render(&r)));
                let rc = g1c.compose(&g2c)?;
                rep.expect("IP7", || format!("{g1} {g2} {}", render(f)), lc == rc, || (lc.to_string(), rc.to_string()));
            }
        }
    }
    // IP4, IP8 on composites of two generators
    for e1 in g.edges().keys() {
        let f1 = RewriteMorphism::generator(rule, g, e1)?;
        for e2 in f1.source.edges().keys() {
            let f2 = RewriteMorphism::generator(rule, &f1.source, e2)?;
            let f12 = f1.compose(&f2)?;
            for h in &isos {
                let (hf12, hc12) = f12.act(h)?;
                let (hf1, hc1) = f1.act(h)?;
                let (hc1f2, hc1c) = f2.act(&hc1)?;
                let inst = || format!("{h} {e1} {e2}");
                rep.expect("IP4", inst, hc12 == hc1c, || (hc12.to_string(), hc1c.to_string()));
                let r = hf1.compose(&hc1f2)?;
                rep.expect("IP8", inst, hf12 == r, || (render(&hf12), render(&r)));
            }
        }
    }
    Ok(rep)
}

/// Right-Ore laws on enumerated expansions out of `g`: the lcm is a common
/// multiple dividing every enumerated common multiple; dually for the gcd.
pub fn check_ore_laws(g: &MultiGraph, rule: &Rule) -> Result<CheckReport> {
    let mut rep = CheckReport::new(format!("Ore laws {rule} on {g}"));
    let ms = enumerate_expansions(g, rule)?;
    for a in &ms {
        for b in &ms {
            let l = a.lcm(b)?;
            let d = a.gcd(b)?;
            let inst = || format!("{} | {}", render(a), render(b));
            rep.expect("lcm common multiple", inst, a.left_divides(&l) && b.left_divides(&l), || (render(&l), String::new()));
            rep.expect("gcd common divisor", inst, d.left_divides(a) && d.left_divides(b), || (render(&d), String::new()));
            let q = a.left_quotient(&l)?;
            rep.expect("lcm quotient", inst, a.compose(&q)? == l, || (render(&q), render(&l)));
            for c in &ms {
                if a.left_divides(c) && b.left_divides(c) {
                    rep.expect("lcm least", || format!("{} {}", inst(), render(c)), l.left_divides(c), || (render(&l), render(c)));
                }
                if c.left_divides(a) && c.left_divides(b) {
                    rep.expect("gcd greatest", || format!("{} {}", inst(), render(c)), c.left_divides(&d), || (render(c), render(&d)));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::coexpand::basilica_graph;

    #[test]
    fn basilica_axioms() {
        let rep = check_iso_action(&basilica_graph(), &Rule::basilica(), 6).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures.first());
        for ax in ["IP1", "IP2", "IP3", "IP4", "IP5", "IP6", "IP7", "IP8", "injective"] {
            assert!(rep.checked_for(ax) > 0, "{ax}");
        }
    }

    #[test]
    fn ore_laws_l2() {
        let g = MultiGraph::new(
            ["x".to_string(), "y".to_string()],
            [("a", "x", "y"), ("b", "y", "x")].map(|(a, b, c)| (a.into(), b.into(), c.into())),
        )
        .unwrap();
        assert!(check_ore_laws(&g, &Rule::l2()).unwrap().passed());
    }
}
