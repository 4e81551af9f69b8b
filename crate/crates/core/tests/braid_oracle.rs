//! Braid equality against the Artin representation in `Aut(F_n)`.

use ore::units::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Free = Vec<i32>;

fn reduce(w: Free) -> Free {
    let mut out: Free = Vec::with_capacity(w.len());
    for x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn inv(w: &Free) -> Free {
    w.iter().rev().map(|x| -x).collect()
}

fn substitute(w: &Free, images: &[Free]) -> Free {
    let mut out = Vec::new();
    for &x in w {
        let img = &images[x.unsigned_abs() as usize - 1];
        if x > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(inv(img));
        }
    }
    reduce(out)
}

/// Images of the free generators under the automorphism of the word.
fn artin(n: usize, word: &[i32]) -> Vec<Free> {
    let mut images: Vec<Free> = (1..=n as i32).map(|i| vec![i]).collect();
    for &s in word {
        let i = s.unsigned_abs() as i32;
        let mut gen: Vec<Free> = (1..=n as i32).map(|k| vec![k]).collect();
        if s > 0 {
            gen[i as usize - 1] = vec![i, i + 1, -i];
            gen[i as usize] = vec![i];
        } else {
            gen[i as usize - 1] = vec![i + 1];
            gen[i as usize] = vec![-(i + 1), i, i + 1];
        }
        images = images.iter().map(|w| substitute(w, &gen)).collect();
    }
    images
}

fn random_word(n: usize, len: usize, rng: &mut ChaCha8Rng) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) { i } else { -i }
        })
        .collect()
}

/// Inserts a relator or a cancelling pair at a random position.
fn perturb(n: usize, w: &[i32], rng: &mut ChaCha8Rng) -> Vec<i32> {
    let mut out = w.to_vec();
    let pos = rng.gen_range(0..=out.len());
    let i = rng.gen_range(1..n as i32);
    let ins: Vec<i32> = match rng.gen_range(0..3) {
        0 => vec![i, -i],
        1 if i + 1 < n as i32 => vec![i, i + 1, i, -(i + 1), -i, -(i + 1)],
        _ => {
            let j = rng.gen_range(1..n as i32);
            if (i - j).abs() >= 2 { vec![i, j, -i, -j] } else { vec![-i, i] }
        }
    };
    out.splice(pos..pos, ins);
    out
}

#[test]
fn braid_equality_matches_artin_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..600 {
        let n = rng.gen_range(2..=5);
        let w1 = random_word(n, rng.gen_range(0..=7), &mut rng);
        let w2 = if rng.gen_bool(0.5) {
            let mut w = w1.clone();
            for _ in 0..rng.gen_range(1..=3) {
                w = perturb(n, &w, &mut rng);
            }
            w
        } else {
            random_word(n, rng.gen_range(0..=7), &mut rng)
        };
        let a = BraidWord::new(n, w1.clone()).unwrap();
        let b = BraidWord::new(n, w2.clone()).unwrap();
        let lib = a.braid_eq(&b).unwrap();
        assert_eq!(lib, artin(n, &w1) == artin(n, &w2), "n={n} {w1:?} vs {w2:?}");
        assert_eq!(lib, a.normal_form() == b.normal_form(), "normal forms n={n} {w1:?} vs {w2:?}");
    }
}

#[test]
fn products_and_inverses_match_artin_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let a = BraidWord::new(n, random_word(n, 6, &mut rng)).unwrap();
        let b = BraidWord::new(n, random_word(n, 6, &mut rng)).unwrap();
        let ab = a.multiply(&b).unwrap();
        let mut cat = a.word.clone();
        cat.extend_from_slice(&b.word);
        assert_eq!(artin(n, &ab.word), artin(n, &cat));
        let id: Vec<Free> = (1..=n as i32).map(|i| vec![i]).collect();
        let ai = a.multiply(&a.inverse()).unwrap();
        assert_eq!(artin(n, &ai.word), id);
        assert_eq!(artin(n, &a.normal_form().to_word().word), artin(n, &a.word));
    }
}

#[test]
fn half_twist_squared_is_central_under_artin() {
    for n in 2..=5 {
        let d = BraidWord::delta(n);
        let mut d2 = d.word.clone();
        d2.extend_from_slice(&d.word);
        for i in 1..n as i32 {
            let mut l = d2.clone();
            l.push(i);
            let mut r = vec![i];
            r.extend_from_slice(&d2);
            assert_eq!(artin(n, &l), artin(n, &r), "n={n} s{i}");
        }
        // Δ is a positive word in which each pair of strands crosses once
        assert_eq!(d.word.len(), n * (n - 1) / 2);
        assert!(d.word.iter().all(|&x| x > 0));
    }
}
