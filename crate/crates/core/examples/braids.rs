//! Braid words, Garside normal forms and the projection to permutations.

use ore::units::{lift, BraidWord};

fn main() -> ore::Result<()> {
    let a = BraidWord::new(3, vec![1, 2, 1])?;
    let b = BraidWord::new(3, vec![2, 1, 2])?;
    println!("{a} = {b}: {}", a.braid_eq(&b)?);
    println!("normal form of {a}: {}", a.normal_form());

    let w = BraidWord::new(4, vec![1, -3, 2, 2, -1])?;
    println!("{w} -> {}, permutation {}", w.normal_form(), w.project());
    println!("positive lift of its permutation: {}", lift(&w.project()));

    for n in 2..=5 {
        let d = BraidWord::delta(n);
        let d2 = d.multiply(&d)?;
        println!("Δ_{n} = {d}: {} crossings, Δ² pure: {}", d.crossings(), d2.is_pure());
    }
    Ok(())
}
