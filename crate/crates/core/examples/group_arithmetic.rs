//! Products, inverses and element orders in F, T, V and BV.

use ore::forest::{Forest, Tree};
use ore::fraction::FractionElement;
use ore::units::{BraidWord, Rotation};
use ore::zs::{Family, FamilyKind, Unit};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> ore::Result<()> {
    let f = Family::binary(FamilyKind::F);
    let x0 = FractionElement::tree_pair(f, "F(1;1,1)".parse()?, "F(1;1,2)".parse()?)?;
    let x1 = FractionElement::tree_pair(f, "F(1;1,2,2)".parse()?, "F(1;1,2,3)".parse()?)?;
    let c = x0.inv().mul(&x1)?.mul(&x0)?;
    println!("x0 = {x0}\nx1 = {x1}\nx0⁻¹ x1 x0 = {}", c.reduce());

    let t = Family::binary(FamilyKind::T);
    for n in 2..=5 {
        let tree = Forest::from_tree(2, Tree::right_comb(n, 2))?;
        let r = FractionElement::conjugated_unit(t, tree, Unit::Rot(Rotation::new(n, 1)))?;
        println!("rotation on {n} leaves has order {:?}", r.order(16)?);
    }

    let bv = Family::binary(FamilyKind::BV);
    let s = FractionElement::conjugated_unit(bv, "F(1;1)".parse()?, Unit::Braid(BraidWord::new(2, vec![1])?))?;
    println!("braided swap {s}: order {:?}, image in V has order {:?}", s.order(8)?, s.project_to_v()?.order(8)?);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let v = Family::binary(FamilyKind::V);
    let a = FractionElement::random(v, 1, 5, 0, &mut rng)?;
    let b = FractionElement::random(v, 1, 4, 0, &mut rng)?;
    let ab = a.mul(&b)?;
    println!("random V elements:\n  a = {a}\n  b = {b}\n  ab = {}", ab.reduce());
    println!("  (ab)b⁻¹ = a: {}", ab.mul(&b.inv())?.eq(&a)?);
    Ok(())
}
