//! Forest normal forms, the divisibility lattice and greedy normal forms.

use ore::forest::{garside_delta, irreducible_descendants, normal_form, Forest};

fn main() -> ore::Result<()> {
    // λ3 λ2 λ1 on three roots rewrites to a non-decreasing word
    let raw = [3, 2, 1];
    let f = normal_form(&raw, 3, 2)?;
    println!("{raw:?} -> {f}  (every rewrite order ends at {:?})", irreducible_descendants(&raw, 2));

    let a: Forest = "F(1;1,1)".parse()?;
    let b: Forest = "F(1;1,2)".parse()?;
    println!("a = {a}, b = {b}");
    println!("lcm = {}, gcd = {}", a.lcm(&b)?, a.gcd(&b)?);
    println!("a \\ lcm = {}", a.left_quotient(&a.lcm(&b)?)?);

    let t: Forest = "F(1;1,1,1,2,5)".parse()?;
    let parts: Vec<String> = t.greedy_factorization().iter().map(ToString::to_string).collect();
    println!("greedy factors of {t}: {}", parts.join(" · "));
    println!("Δ on 4 roots: {}", garside_delta(4, 2));

    let ternary = normal_form(&[1, 3], 1, 3)?;
    println!("ternary forest {ternary} has {} leaves", ternary.leaves());
    Ok(())
}
