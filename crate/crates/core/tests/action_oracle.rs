//! Fractions act on the Cantor space of infinite addresses by prefix
//! replacement. Products, inverses and equality are checked against that
//! action, computed here from scratch out of the trees and the leaf
//! permutation.

use ore::forest::{Forest, Tree};
use ore::fraction::FractionElement;
use ore::zs::{Family, FamilyKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Addr = (usize, Vec<u8>);

fn tree_leaves(t: &Tree, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    match t {
        Tree::Leaf => out.push(prefix.clone()),
        Tree::Node(ch) => {
            for (k, c) in ch.iter().enumerate() {
                prefix.push(k as u8);
                tree_leaves(c, prefix, out);
                prefix.pop();
            }
        }
    }
}

fn leaves(f: &Forest) -> Vec<Addr> {
    let mut out = Vec::new();
    for (r, t) in f.trees().iter().enumerate() {
        let mut ls = Vec::new();
        tree_leaves(t, &mut Vec::new(), &mut ls);
        out.extend(ls.into_iter().map(|p| (r, p)));
    }
    out
}

fn depth(f: &Forest) -> usize {
    leaves(f).iter().map(|(_, p)| p.len()).max().unwrap_or(0)
}

/// Sends the point below leaf `j` of `src` to the same point below leaf
/// `σ(j)` of `dst`.
fn image(src: &[Addr], dst: &[Addr], sigma: &[usize], pt: &Addr) -> Addr {
    let j = src
        .iter()
        .position(|(r, p)| *r == pt.0 && pt.1.starts_with(p))
        .expect("point below some leaf");
    let (r, p) = &dst[sigma[j] - 1];
    let mut q = p.clone();
    q.extend_from_slice(&pt.1[src[j].1.len()..]);
    (*r, q)
}

/// The action of `x = f·u·g⁻¹`: a point under leaf `j` of `g` moves to leaf
/// `u(j)` of `f`.
fn act(x: &FractionElement, pt: &Addr) -> Addr {
    let sigma: Vec<usize> = x.unit.permutation().images().to_vec();
    image(&leaves(&x.den), &leaves(&x.num), &sigma, pt)
}

fn points(base: usize, d: usize, len: usize) -> Vec<Addr> {
    let mut paths = vec![Vec::new()];
    for _ in 0..len {
        paths = paths
            .into_iter()
            .flat_map(|p: Vec<u8>| {
                (0..d as u8).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    (0..base).flat_map(|r| paths.iter().map(move |p| (r, p.clone()))).collect()
}

/// Random points deep enough that every prefix map involved applies.
fn deep_points(base: usize, d: usize, len: usize, count: usize, rng: &mut ChaCha8Rng) -> Vec<Addr> {
    use rand::Rng;
    (0..count)
        .map(|_| (rng.gen_range(0..base), (0..len).map(|_| rng.gen_range(0..d as u8)).collect()))
        .collect()
}

fn depth_of(xs: &[&FractionElement]) -> usize {
    xs.iter().map(|x| depth(&x.num).max(depth(&x.den))).max().unwrap()
}

fn random(family: Family, base: usize, rng: &mut ChaCha8Rng) -> FractionElement {
    use rand::Rng;
    let leaves = base + (family.arity - 1) * rng.gen_range(0..=4);
    FractionElement::random(family, base, leaves, 3, rng).unwrap()
}

fn families() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for kind in FamilyKind::ALL {
        out.push((Family::binary(kind), 1));
    }
    for kind in [FamilyKind::F, FamilyKind::T, FamilyKind::V] {
        out.push((Family::new(kind, 3).unwrap(), 1));
        out.push((Family::new(kind, 3).unwrap(), 2));
    }
    out
}

#[test]
fn product_acts_as_composition() {
    for (family, base) in families() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let x = random(family, base, &mut rng);
            let y = random(family, base, &mut rng);
            let xy = x.mul(&y).unwrap();
            let l = depth_of(&[&x, &y, &xy]) * 2 + 1;
            for pt in deep_points(base, family.arity, l, 200, &mut rng) {
                assert_eq!(act(&xy, &pt), act(&x, &act(&y, &pt)), "{family}: x={x} y={y}");
            }
        }
    }
}

#[test]
fn inverse_acts_as_inverse_map() {
    for (family, base) in families() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..150 {
            let x = random(family, base, &mut rng);
            let xi = x.inv();
            let l = depth_of(&[&x]) * 2 + 1;
            for pt in deep_points(base, family.arity, l, 200, &mut rng) {
                assert_eq!(act(&xi, &act(&x, &pt)), pt, "{family}: x={x}");
            }
        }
    }
}

#[test]
fn equality_matches_the_action() {
    for (family, base) in families() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..150 {
            let x = random(family, base, &mut rng);
            let y = if rand::Rng::gen_bool(&mut rng, 0.5) {
                random(family, base, &mut rng)
            } else {
                x.reduce().expand(&ore::fraction::random_forest(x.reduce().leaves(), x.reduce().leaves() + family.arity - 1, family.arity, &mut rng)).unwrap()
            };
            let l = depth(&x.den).max(depth(&y.den));
            let same = points(base, family.arity, l).iter().all(|pt| act(&x, pt) == act(&y, pt));
            let lib = x.eq(&y).unwrap();
            if family.kind.is_braided() {
                // a pure braid acts trivially, so action equality is only necessary
                assert!(!lib || same, "{family}: x={x} y={y}");
            } else {
                assert_eq!(lib, same, "{family}: x={x} y={y}");
            }
        }
    }
}

#[test]
fn family_constraints_hold_for_the_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for kind in [FamilyKind::F, FamilyKind::T, FamilyKind::BF, FamilyKind::BT] {
        let family = Family::binary(kind);
        for _ in 0..200 {
            let x = random(family, 1, &mut rng);
            let l = depth_of(&[&x]) + 1;
            let pts = points(1, 2, l);
            let imgs: Vec<Addr> = pts.iter().map(|p| act(&x, p)).collect();
            // lexicographic order of points, up to one cyclic shift for T
            let descents = (0..imgs.len()).filter(|&i| imgs[(i + 1) % imgs.len()] < imgs[i]).count();
            match kind {
                FamilyKind::F | FamilyKind::BF => assert!(imgs.windows(2).all(|w| w[0] < w[1]), "{x}"),
                _ => assert!(descents <= 1, "{x}"),
            }
        }
    }
}
