//! A rotation acting on a forest in the indirect product for `T`.

use ore::forest::Forest;
use ore::units::Rotation;
use ore::zs::{act, Family, FamilyKind, Unit};

fn main() -> ore::Result<()> {
    let t = Family::binary(FamilyKind::T);
    let g = Unit::Rot(Rotation::new(3, 1));
    let f = Forest::caret(3, 3, 2)?;
    let (gf, g_f) = act(&t, &g, &f)?;
    println!("g = {g}, f = {f}");
    println!("g·f = {gf}");
    println!("g^f = {g_f}");
    Ok(())
}
