//! Homology of matching complexes of paths, cycles and complete graphs,
//! with the grounded connectivity certificate alongside.

use ore::complexes::{grounded_bound, homological_connectivity, matching_complex, reduced_homology, SimpleGraph};

fn main() -> ore::Result<()> {
    println!("{:<8} {:>6} {:>9} {:>8}  homology", "graph", "verts", "grounded", "conn");
    for n in 4..=9 {
        for (name, g) in [("L", SimpleGraph::linear(n)), ("C", SimpleGraph::cycle(n)), ("K", SimpleGraph::complete(n))] {
            let m = matching_complex(&g);
            let depth = m.dim().max(0) as usize;
            let h = reduced_homology(&m, depth)?;
            let groups: Vec<String> = h.iter().map(ToString::to_string).collect();
            println!(
                "{:<8} {:>6} {:>9} {:>8}  {}",
                format!("{name}_{n}"),
                m.vertex_count(),
                grounded_bound(&m)?,
                homological_connectivity(&m, depth)?,
                groups.join(", ")
            );
        }
    }
    Ok(())
}
