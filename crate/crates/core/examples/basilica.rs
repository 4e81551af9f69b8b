//! Edge replacement with the Basilica rule: expansions, co-expansion
//! patterns, and the complex E(H) of the bad graph, which is a circle.

use ore::complexes::reduced_homology;
use ore::rewrite::{apply_rule, bad_graph, basilica_graph, build_e_graph, check_iso_action, Rule};

fn main() -> ore::Result<()> {
    let rule = Rule::basilica();
    let g = basilica_graph();
    let g1 = apply_rule(&g, "lx", &rule)?;
    println!("basilica graph: {} edges; after expanding lx: {} edges", g.edge_count(), g1.edge_count());
    println!("edges: {:?}", g1.edges().keys().collect::<Vec<_>>());

    let rep = check_iso_action(&g, &rule, 8)?;
    println!("isomorphism action axioms: {} instances, passed = {}", rep.total(), rep.passed());

    for middle in 1..=3 {
        let h = bad_graph(middle)?;
        let e = build_e_graph(&h, &rule)?;
        let hom = reduced_homology(&e.complex, 1)?;
        println!(
            "bad graph, middle {middle}: {} edges, patterns {:?}, E(H) edges {}, H̃ = {}, {}",
            h.edge_count(),
            e.patterns.iter().map(|p| p.label()).collect::<Vec<_>>(),
            e.complex.edges().len(),
            hom[0],
            hom[1],
        );
    }
    Ok(())
}
