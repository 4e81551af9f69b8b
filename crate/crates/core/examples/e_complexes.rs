//! Complexes of elementary morphisms for F, T and V, compared with matching
//! complexes of the path, the cycle and the complete graph.

use ore::complexes::{build_e, e_to_matching_map};
use ore::zs::{Family, FamilyKind};

fn main() -> ore::Result<()> {
    for kind in [FamilyKind::F, FamilyKind::T, FamilyKind::V] {
        for n in 3..=6 {
            let e = build_e(Family::binary(kind), n)?;
            let m = e_to_matching_map(&e)?;
            println!(
                "E_{kind:?}({n}): {:>3} vertices, f = {:?}, onto M: {}, isomorphic: {}, fibers joins: {}",
                e.complex.vertex_count(),
                e.complex.f_vector()?,
                m.surjective,
                m.isomorphism,
                m.all_fibers_joins(),
            );
        }
    }
    let e = build_e(Family::binary(FamilyKind::V), 4)?;
    let m = e_to_matching_map(&e)?;
    for fib in m.fibers.iter().filter(|f| f.simplex.len() == 2).take(2) {
        println!("fiber over {:?}: {} vertices, {} top simplices", fib.simplex, fib.preimage_vertices, fib.top_simplices);
    }
    Ok(())
}
