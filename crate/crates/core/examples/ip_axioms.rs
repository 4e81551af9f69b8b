//! Exhaustive checks of the indirect-product axioms for the shipped
//! cloning systems, and a corrupted table that the checks reject.

use ore::zs::{check_bv_relations, check_ip_axioms, CorruptedV, Family, FamilyKind};

fn main() {
    for (kind, bound) in [(FamilyKind::F, 5), (FamilyKind::T, 5), (FamilyKind::V, 5), (FamilyKind::BV, 4)] {
        let rep = check_ip_axioms(&Family::binary(kind), bound);
        println!("{kind:?} up to degree {bound}: {} instances, passed = {}", rep.total(), rep.passed());
    }
    let rel = check_bv_relations(4);
    println!("braided cloning relations on 4 strands: passed = {}", rel.passed());

    let bad = check_ip_axioms(&CorruptedV, 4);
    println!("corrupted V: passed = {}", bad.passed());
    for f in bad.failures.iter().take(3) {
        println!("  {} fails at {}: {} vs {}", f.axiom, f.instance, f.lhs, f.rhs);
    }
}
