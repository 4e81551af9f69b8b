//! Property tests over seeded random forests, fractions, complexes and
//! rewriting morphisms.

use std::collections::BTreeSet;

use ore::complexes::{flag_complex, reduced_homology, SimplicialComplex};
use ore::forest::{irreducible_descendants, normal_form, Forest};
use ore::fraction::{random_forest, FractionElement};
use ore::rewrite::{apply_rule, automorphisms, basilica_graph, bad_graph, MultiGraph, RewriteMorphism, Rule};
use ore::units::Permutation;
use ore::zs::{Family, FamilyKind};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn raw_word(roots: usize, len: usize, d: usize, r: &mut ChaCha8Rng) -> Vec<usize> {
    (0..len).map(|k| r.gen_range(1..=roots + k * (d - 1))).collect()
}

fn forest(roots: usize, carets: usize, d: usize, r: &mut ChaCha8Rng) -> Forest {
    random_forest(roots, roots + carets * (d - 1), d, r)
}

fn kind() -> impl Strategy<Value = FamilyKind> {
    prop::sample::select(FamilyKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normal_form_is_canonical(seed: u64, roots in 1usize..4, len in 0usize..9, d in 2usize..4) {
        let mut r = rng(seed);
        let w = raw_word(roots, len, d, &mut r);
        let f = normal_form(&w, roots, d).unwrap();
        prop_assert!(f.word().windows(2).all(|p| p[0] <= p[1]));
        prop_assert_eq!(normal_form(f.word(), roots, d).unwrap(), f.clone());
        prop_assert_eq!(f.leaves(), roots + len * (d - 1));
        if d == 2 && len <= 7 {
            prop_assert_eq!(irreducible_descendants(&w, d), vec![f.word().to_vec()]);
        }
    }

    #[test]
    fn composition_is_associative(seed: u64, roots in 1usize..4, d in 2usize..4) {
        let mut r = rng(seed);
        let a = forest(roots, r.gen_range(0..4), d, &mut r);
        let b = forest(a.leaves(), r.gen_range(0..4), d, &mut r);
        let c = forest(b.leaves(), r.gen_range(0..4), d, &mut r);
        let l = a.compose(&b).unwrap().compose(&c).unwrap();
        let rr = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(l, rr);
    }

    #[test]
    fn divisibility_and_quotients(seed: u64, roots in 1usize..4, d in 2usize..4) {
        let mut r = rng(seed);
        let a = forest(roots, r.gen_range(0..5), d, &mut r);
        let b = forest(a.leaves(), r.gen_range(0..5), d, &mut r);
        let ab = a.compose(&b).unwrap();
        prop_assert!(a.left_divides(&ab));
        prop_assert_eq!(a.left_quotient(&ab).unwrap(), b.clone());
        prop_assert_eq!(ab.right_quotient(&b).unwrap(), a.clone());
    }

    #[test]
    fn lattice_identities(seed: u64, roots in 1usize..4, d in 2usize..4) {
        let mut r = rng(seed);
        let a = forest(roots, r.gen_range(0..6), d, &mut r);
        let b = forest(roots, r.gen_range(0..6), d, &mut r);
        prop_assert_eq!(a.lcm(&b).unwrap(), b.lcm(&a).unwrap());
        prop_assert_eq!(a.gcd(&b).unwrap(), b.gcd(&a).unwrap());
        prop_assert_eq!(a.lcm(&a.gcd(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.gcd(&a.lcm(&b).unwrap()).unwrap(), a.clone());
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.left_divides(&a) && g.left_divides(&b));
    }

    #[test]
    fn greedy_factorization_multiplies_back(seed: u64, roots in 1usize..4, d in 2usize..4) {
        let mut r = rng(seed);
        let f = forest(roots, r.gen_range(0..7), d, &mut r);
        let parts = f.greedy_factorization();
        let mut acc = Forest::identity(roots, d);
        for p in &parts {
            prop_assert!(p.is_elementary() && !p.is_identity());
            acc = acc.compose(p).unwrap();
        }
        prop_assert_eq!(acc, f.clone());
        if !f.is_identity() {
            prop_assert!(f.head().unwrap().left_divides(&f));
        }
    }

    #[test]
    fn permutation_group_laws(seed: u64, n in 1usize..8) {
        let mut r = rng(seed);
        let mut rand_perm = || {
            let mut img: Vec<usize> = (1..=n).collect();
            for i in (1..n).rev() {
                img.swap(i, r.gen_range(0..=i));
            }
            Permutation::new(img).unwrap()
        };
        let (p, q, s) = (rand_perm(), rand_perm(), rand_perm());
        prop_assert_eq!(p.compose(&q).unwrap().compose(&s).unwrap(), p.compose(&q.compose(&s).unwrap()).unwrap());
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(p.reduced_word().len(), p.inversions());
    }

    #[test]
    fn fraction_representatives(seed: u64, k in kind(), steps in 0usize..4) {
        let family = Family::binary(k);
        let mut r = rng(seed);
        let x = FractionElement::random(family, 1, 1 + steps, 3, &mut r).unwrap();
        let h = forest(x.leaves(), r.gen_range(0..3), 2, &mut r);
        prop_assert!(x.expand(&h).unwrap().eq(&x).unwrap());
        prop_assert!(x.reduce().eq(&x).unwrap());
        prop_assert!(x.reduce().leaves() <= x.leaves());
        prop_assert!(x.mul(&x.inv()).unwrap().is_identity().unwrap());
        prop_assert!(x.inv().inv().eq(&x).unwrap());
    }

    #[test]
    fn flag_complexes_are_flag(seed: u64, n in 1u32..10, p in 0.1f64..0.9) {
        let mut r = rng(seed);
        let edges: Vec<(u32, u32)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| r.gen_bool(p)).collect();
        let x = flag_complex((0..n).map(|i| i.to_string()).collect(), &edges);
        prop_assert!(x.is_flag());
        prop_assert_eq!(x.edges().len(), edges.len());
        let again = SimplicialComplex::from_simplices(x.vertices().to_vec(), x.facets().to_vec()).unwrap();
        prop_assert_eq!(&again, &x);
        let back: SimplicialComplex = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        prop_assert_eq!(&back, &x);
        let h = reduced_homology(&x, 0).unwrap();
        // H̃_0 counts components minus one
        let mut comp: Vec<u32> = (0..n).collect();
        fn find(c: &mut Vec<u32>, i: u32) -> u32 { if c[i as usize] == i { i } else { let r = find(c, c[i as usize]); c[i as usize] = r; r } }
        for &(a, b) in &edges { let (ra, rb) = (find(&mut comp, a), find(&mut comp, b)); comp[ra as usize] = rb; }
        let roots = (0..n).filter(|&i| find(&mut comp, i) == i).count();
        prop_assert_eq!(h[0].betti, roots - 1);
    }
}

/// An ancestor-closed expansion set grown by random single expansions.
fn random_expansion(g: &MultiGraph, rule: &Rule, steps: usize, r: &mut ChaCha8Rng) -> RewriteMorphism {
    let mut cur = g.clone();
    let mut set = BTreeSet::new();
    for _ in 0..steps {
        let edges: Vec<String> = cur.edges().keys().cloned().collect();
        let e = edges[r.gen_range(0..edges.len())].clone();
        cur = apply_rule(&cur, &e, rule).unwrap();
        set.insert(e);
    }
    RewriteMorphism::new(rule, g.clone(), set).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_sets_form_a_lattice(seed: u64, which in 0usize..3, s1 in 0usize..5, s2 in 0usize..5) {
        let rule = [Rule::basilica(), Rule::l2(), Rule::d2()][which].clone();
        let g = basilica_graph();
        let mut r = rng(seed);
        let a = random_expansion(&g, &rule, s1, &mut r);
        let b = random_expansion(&g, &rule, s2, &mut r);
        let l = a.lcm(&b).unwrap();
        prop_assert!(a.left_divides(&l) && b.left_divides(&l));
        prop_assert_eq!(&l, &b.lcm(&a).unwrap());
        let q = a.left_quotient(&l).unwrap();
        prop_assert_eq!(a.compose(&q).unwrap(), l.clone());
        let gc = a.gcd(&b).unwrap();
        prop_assert!(gc.left_divides(&a) && gc.left_divides(&b));
        prop_assert_eq!(l.source.edge_count(), g.edge_count() + l.expansions.len() * (rule.graph.edge_count() - 1));
    }

    #[test]
    fn iso_action_unclones(seed: u64, s in 0usize..5) {
        let rule = Rule::basilica();
        let g = bad_graph(1).unwrap();
        let mut r = rng(seed);
        let m = random_expansion(&g, &rule, s, &mut r);
        for iso in automorphisms(&g) {
            let (moved, cloned) = m.act(&iso).unwrap();
            prop_assert_eq!(moved.expansions.len(), m.expansions.len());
            prop_assert_eq!(m.uncloned(&cloned).unwrap(), iso.clone());
        }
    }
}
