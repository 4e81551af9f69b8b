//! Integral homology against field ranks and closed-form simplex counts.

use num_bigint::BigInt;
use ore::complexes::snf::{smith_invariants, SparseMatrix};
use ore::complexes::{
    build_e, descending_link, flag_complex, matching_complex, positive_sublevel_complex, reduced_homology,
    SimpleGraph, SimplicialComplex,
};
use ore::forest::Forest;
use ore::zs::{Family, FamilyKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// All faces by dimension, enumerated from the facets.
fn faces(x: &SimplicialComplex) -> Vec<Vec<Vec<u32>>> {
    let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
    for f in x.facets() {
        for mask in 1u32..(1 << f.len()) {
            let s: Vec<u32> = (0..f.len()).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            let k = s.len() - 1;
            if by_dim.len() <= k {
                by_dim.resize(k + 1, BTreeSet::new());
            }
            by_dim[k].insert(s);
        }
    }
    by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let inv = |a: u64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let s = inv(m[r][c]);
        for j in 0..cols {
            m[r][j] = m[r][j] * s % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p * p - f * m[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced Betti numbers over `F_p`, with the augmentation as `∂_0`.
fn betti_mod_p(x: &SimplicialComplex, p: u64) -> Vec<usize> {
    let fs = faces(x);
    let boundary_rank = |k: usize| -> usize {
        if k == 0 {
            return usize::from(!fs.is_empty() && !fs[0].is_empty());
        }
        if k >= fs.len() {
            return 0;
        }
        let mut m = vec![vec![0u64; fs[k].len()]; fs[k - 1].len()];
        for (c, s) in fs[k].iter().enumerate() {
            for i in 0..s.len() {
                let mut t = s.clone();
                t.remove(i);
                let r = fs[k - 1].binary_search(&t).unwrap();
                m[r][c] = if i % 2 == 0 { 1 } else { p - 1 };
            }
        }
        rank_mod_p(m, p)
    };
    (0..fs.len()).map(|k| fs[k].len() - boundary_rank(k) - boundary_rank(k + 1)).collect()
}

fn check_universal_coefficients(name: &str, x: &SimplicialComplex) {
    let dim = x.dim().max(0) as usize;
    let h = reduced_homology(x, dim).unwrap();
    for p in [2u64, 3, 5] {
        let bp = betti_mod_p(x, p);
        let pb = BigInt::from(p);
        let t = |k: usize| h[k].torsion.iter().filter(|q| (*q % &pb) == BigInt::from(0)).count();
        for k in 0..=dim {
            let expect = h[k].betti + t(k) + if k > 0 { t(k - 1) } else { 0 };
            assert_eq!(bp.get(k).copied().unwrap_or(0), expect, "{name}: H_{k} over F_{p}, integral {:?}", h);
        }
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn matching_complex_face_counts() {
    for n in 2..=10u64 {
        let fl = matching_complex(&SimpleGraph::linear(n as usize)).f_vector().unwrap();
        for (i, &c) in fl.iter().enumerate() {
            let k = i as u64 + 1;
            assert_eq!(c as u64, binom(n - k, k), "L_{n}, {k}-matchings");
        }
        if n >= 3 {
            let fc = matching_complex(&SimpleGraph::cycle(n as usize)).f_vector().unwrap();
            for (i, &c) in fc.iter().enumerate() {
                let k = i as u64 + 1;
                assert_eq!(c as u64, n * binom(n - k, k) / (n - k), "C_{n}, {k}-matchings");
            }
        }
        let fk = matching_complex(&SimpleGraph::complete(n as usize)).f_vector().unwrap();
        assert_eq!(fk.len() as u64, n / 2);
        for (i, &c) in fk.iter().enumerate() {
            let k = i as u64 + 1;
            let expect = factorial(n) / (factorial(k) * factorial(n - 2 * k) * (1 << k));
            assert_eq!(c as u64, expect, "K_{n}, {k}-matchings");
        }
    }
}

#[test]
fn matching_complexes_obey_universal_coefficients() {
    for n in 2..=10 {
        check_universal_coefficients(&format!("M(L_{n})"), &matching_complex(&SimpleGraph::linear(n)));
        check_universal_coefficients(&format!("M(C_{n})"), &matching_complex(&SimpleGraph::cycle(n)));
    }
    for n in 2..=8 {
        check_universal_coefficients(&format!("M(K_{n})"), &matching_complex(&SimpleGraph::complete(n)));
    }
}

#[test]
fn known_small_matching_complexes() {
    // M(K_5) is the Petersen graph: 10 vertices, 15 edges, connected
    let h = reduced_homology(&matching_complex(&SimpleGraph::complete(5)), 1).unwrap();
    assert_eq!((h[0].betti, h[1].betti), (0, 6));
    // M(K_7) carries 3-torsion in degree one
    let h = reduced_homology(&matching_complex(&SimpleGraph::complete(7)), 2).unwrap();
    assert_eq!(h[1].torsion, vec![BigInt::from(3)]);
    assert_eq!(h[1].betti, 0);
    // M(C_5) is a pentagon
    let h = reduced_homology(&matching_complex(&SimpleGraph::cycle(5)), 1).unwrap();
    assert_eq!((h[0].betti, h[1].betti), (0, 1));
}

#[test]
fn other_complexes_obey_universal_coefficients() {
    for n in 2..=5 {
        let e = build_e(Family::binary(FamilyKind::V), n).unwrap();
        check_universal_coefficients(&format!("E_V({n})"), &e.complex);
    }
    let t: Forest = "F(1;1,1,2,4)".parse().unwrap();
    check_universal_coefficients("descending link", &descending_link(&t).unwrap().complex);
    check_universal_coefficients("sublevel 5", &positive_sublevel_complex(5, 2).unwrap());
}

#[test]
fn random_flag_complexes_obey_universal_coefficients() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(4..=11u32);
        let p = rng.gen_range(0.3..0.8);
        let edges: Vec<(u32, u32)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let x = flag_complex((0..n).map(|i| i.to_string()).collect(), &edges);
        check_universal_coefficients("flag", &x);
        let chi: i64 = x.f_vector().unwrap().iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        let h = reduced_homology(&x, x.dim() as usize).unwrap();
        let rchi: i64 = h.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum();
        assert_eq!(chi - 1, rchi, "reduced Euler characteristic");
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n).flat_map(|last| combos(last, k - 1).into_iter().map(move |mut c| { c.push(last); c })).collect()
}

/// Invariant factors as ratios of determinantal divisors.
fn determinantal_invariants(m: &[Vec<i64>]) -> (usize, Vec<i128>) {
    let (r, c) = (m.len(), m[0].len());
    let mut d = vec![1i128];
    for k in 1..=r.min(c) {
        let mut g = 0;
        for rs in combos(r, k) {
            for cs in combos(c, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        d.push(g);
    }
    let rank = d.len() - 1;
    let torsion = (1..=rank).map(|k| d[k] / d[k - 1]).filter(|&s| s > 1).collect();
    (rank, torsion)
}

#[test]
fn smith_invariants_match_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..400 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let sparse_p = rng.gen_range(0.2..1.0);
        let dense: Vec<Vec<i64>> =
            (0..r).map(|_| (0..c).map(|_| if rng.gen_bool(sparse_p) { rng.gen_range(-6..=6) } else { 0 }).collect()).collect();
        let mut m = SparseMatrix::new(r, c);
        for j in 0..c {
            for i in 0..r {
                if dense[i][j] != 0 {
                    m.columns[j].push((i as u32, dense[i][j]));
                }
            }
        }
        let got = smith_invariants(&m, 1 << 20).unwrap();
        let (rank, torsion) = determinantal_invariants(&dense);
        assert_eq!(got.rank, rank, "{dense:?}");
        assert_eq!(got.torsion, torsion.into_iter().map(BigInt::from).collect::<Vec<_>>(), "{dense:?}");
    }
}
