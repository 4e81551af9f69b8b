//! Descending links of trees in the complex of forest fractions, and the
//! contractibility of positive sublevel complexes.

use ore::complexes::{descending_link, positive_sublevel_complex, reduced_homology};
use ore::forest::Forest;

fn main() -> ore::Result<()> {
    let b: Forest = "F(1;1,1,2,4)".parse()?;
    let dl = descending_link(&b)?;
    println!("descending link of {b}: {} vertices", dl.vertices.len());
    for v in &dl.vertices {
        println!("  {v}");
    }
    let h = reduced_homology(&dl.complex, 3)?;
    println!("  homology: {}", h.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));

    for n in 2..=6 {
        let x = positive_sublevel_complex(n, 2)?;
        let h = reduced_homology(&x, 2)?;
        println!("sublevel N={n}: {} vertices, f = {:?}, acyclic through dim 2: {}", x.vertex_count(), x.f_vector()?, h.iter().all(|g| g.is_zero()));
    }
    Ok(())
}
