//! Exhaustive and sampled verification of indirect product actions.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::forest::{normal_form, Forest};
use crate::units::{BraidWord, Permutation};
use crate::zs::family::{bv_clone, v_clone, Family, FamilyKind, Unit};
use crate::zs::{act, act_word, CloningSystem};

/// One checked instance of an identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomRecord {
    pub axiom: String,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// Per-axiom counts plus every failing instance, in a deterministic order.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: BTreeMap<String, usize>,
    pub failed: BTreeMap<String, usize>,
    pub failures: Vec<AxiomRecord>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn record(&mut self, axiom: &str, instance: impl FnOnce() -> String, lhs: String, rhs: String, pass: bool) {
        *self.checked.entry(axiom.to_string()).or_default() += 1;
        self.failed.entry(axiom.to_string()).or_default();
        if !pass {
            *self.failed.get_mut(axiom).unwrap() += 1;
            self.failures.push(AxiomRecord {
                axiom: axiom.to_string(),
                instance: instance(),
                lhs,
                rhs,
                pass,
            });
        }
    }

    /// Records `lhs == rhs` where both sides render lazily on failure.
    pub fn expect(&mut self, axiom: &str, instance: impl FnOnce() -> String, pass: bool, sides: impl FnOnce() -> (String, String)) {
        if pass {
            self.record(axiom, String::new, String::new(), String::new(), true);
        } else {
            let (l, r) = sides();
            self.record(axiom, instance, l, r, false);
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        for (k, v) in other.checked {
            *self.checked.entry(k).or_default() += v;
        }
        for (k, v) in other.failed {
            *self.failed.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total(&self) -> usize {
        self.checked.values().sum()
    }

    pub fn checked_for(&self, axiom: &str) -> usize {
        self.checked.get(axiom).copied().unwrap_or(0)
    }

    pub fn failed_for(&self, axiom: &str) -> usize {
        self.failed.get(axiom).copied().unwrap_or(0)
    }
}

fn merged(name: String, parts: Vec<CheckReport>) -> CheckReport {
    let mut r = CheckReport::new(name);
    for p in parts {
        r.merge(p);
    }
    r
}

/// IP1–IP8 for every unit of degree `≤ bound` returned by
/// [`CloningSystem::elements`], every caret, and every product of two
/// carets (which covers every defining relation of `F_d`).
pub fn check_ip_axioms<C: CloningSystem>(cs: &C, bound: usize) -> CheckReport {
    let d = cs.arity();
    let mut parts = Vec::new();
    for n in 1..=bound {
        let els = cs.elements(n);
        let carets: Vec<Forest> = (1..=n).map(|i| Forest::caret(i, n, d).unwrap()).collect();
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (1..=n + d - 1).map(move |j| (i, j)))
            .collect();
        let mut base = CheckReport::default();
        let one = cs.identity(n);
        for (i, f) in carets.iter().enumerate() {
            let (gf, gc) = act(cs, &one, f).unwrap();
            base.expect("IP1", || format!("n={n} f=λ{}", i + 1), gf == *f, || (gf.to_string(), f.to_string()));
            let id = cs.identity(f.leaves());
            base.expect("IP5", || format!("n={n} f=λ{}", i + 1), cs.equal(&gc, &id), || {
                (cs.encode(&gc), cs.encode(&id))
            });
        }
        for &(i, j) in &pairs {
            let f = normal_form(&[i, j], n, d).unwrap();
            let (gf, gc) = act(cs, &one, &f).unwrap();
            base.expect("IP1", || format!("n={n} f=λ{i}λ{j}"), gf == f, || (gf.to_string(), f.to_string()));
            let id = cs.identity(f.leaves());
            base.expect("IP5", || format!("n={n} f=λ{i}λ{j}"), cs.equal(&gc, &id), || {
                (cs.encode(&gc), cs.encode(&id))
            });
        }
        parts.push(base);
        let per_g: Vec<CheckReport> = els
            .par_iter()
            .map(|g| {
                let mut r = CheckReport::default();
                let ge = cs.encode(g);
                let idn = Forest::identity(n, d);
                let (gid, gcid) = act(cs, g, &idn).unwrap();
                r.expect("IP2", || format!("g={ge}"), cs.equal(&gcid, g), || (cs.encode(&gcid), ge.clone()));
                r.expect("IP6", || format!("g={ge}"), gid == idn, || (gid.to_string(), idn.to_string()));
                for &(i, j) in &pairs {
                    let f1 = Forest::caret(i, n, d).unwrap();
                    let f2 = Forest::caret(j, n + d - 1, d).unwrap();
                    let f12 = f1.compose(&f2).unwrap();
                    let (lf, lg) = act(cs, g, &f12).unwrap();
                    let (a1, c1) = act(cs, g, &f1).unwrap();
                    let (a2, c2) = act(cs, &c1, &f2).unwrap();
                    let inst = || format!("g={ge} f1=λ{i} f2=λ{j}");
                    r.expect("IP4", inst, cs.equal(&lg, &c2), || (cs.encode(&lg), cs.encode(&c2)));
                    let rf = a1.compose(&a2).unwrap();
                    r.expect("IP8", inst, lf == rf, || (lf.to_string(), rf.to_string()));
                }
                for g2 in &els {
                    let g12 = cs.mul(g, g2).unwrap();
                    for (i, f) in carets.iter().enumerate() {
                        let inst = || format!("g1={ge} g2={} f=λ{}", cs.encode(g2), i + 1);
                        let (l3, l7) = act(cs, &g12, f).unwrap();
                        let (a2, c2) = act(cs, g2, f).unwrap();
                        let (a1, c1) = act(cs, g, &a2).unwrap();
                        r.expect("IP3", inst, l3 == a1, || (l3.to_string(), a1.to_string()));
                        let r7 = cs.mul(&c1, &c2).unwrap();
                        r.expect("IP7", inst, cs.equal(&l7, &r7), || (cs.encode(&l7), cs.encode(&r7)));
                    }
                }
                r
            })
            .collect();
        parts.extend(per_g);
    }
    merged(format!("ip-axioms {} bound {bound}", cs.name()), parts)
}

fn braid(n: usize, w: &[i32]) -> Unit {
    Unit::Braid(BraidWord { n, word: w.to_vec() })
}

/// The relations that make the braid cloning table well defined, at degree `n`:
/// braid and commutation relations acting on and acted on by every caret,
/// and the forest relation `λ_ℓ λ_k = λ_k λ_{ℓ+1}` acting on every generator.
pub fn check_bv_relations(n: usize) -> CheckReport {
    let bv = Family::binary(FamilyKind::BV);
    let mut r = CheckReport::new(format!("bv-relations n={n}"));
    let enc = |u: &Unit| u.to_string();
    let side = |g: &Unit, word: &[usize]| -> (Forest, Unit) {
        let (w, c) = act_word(&bv, g, word).unwrap();
        (normal_form(&w, n, 2).unwrap(), c)
    };
    let rels: Vec<(&str, &str, Vec<i32>, Vec<i32>)> = {
        let mut v = Vec::new();
        for i in 1..n.saturating_sub(1) as i32 {
            v.push(("Eq4", "Eq5", vec![i, i + 1, i], vec![i + 1, i, i + 1]));
        }
        for i in 1..n as i32 {
            for j in 1..n as i32 {
                if (i - j).abs() >= 2 {
                    v.push(("Eq6", "Eq7", vec![i, j], vec![j, i]));
                }
            }
        }
        v
    };
    for (acts, acted, lw, rw) in &rels {
        for k in 1..=n {
            let (lf, lc) = side(&braid(n, lw), &[k]);
            let (rf, rc) = side(&braid(n, rw), &[k]);
            let inst = || format!("{lw:?}={rw:?} k={k}");
            r.expect(acts, inst, lf == rf, || (lf.to_string(), rf.to_string()));
            r.expect(acted, inst, bv.equal(&lc, &rc), || (enc(&lc), enc(&rc)));
        }
    }
    for i in 1..n as i32 {
        let g = braid(n, &[i]);
        for k in 1..=n {
            for l in k + 1..=n {
                let (lf, lc) = side(&g, &[l, k]);
                let (rf, rc) = side(&g, &[k, l + 1]);
                let inst = || format!("σ{i} l={l} k={k}");
                r.expect("Eq8", inst, lf == rf, || (lf.to_string(), rf.to_string()));
                r.expect("Eq9", inst, bv.equal(&lc, &rc), || (enc(&lc), enc(&rc)));
            }
        }
    }
    r
}

/// `π(β^f) = π(β)^f` for one instance.
pub fn pi_equivariance_instance(beta: &BraidWord, f: &Forest) -> (Permutation, Permutation) {
    let mut b = beta.clone();
    let mut p = beta.project();
    for &i in f.word() {
        b = bv_clone(&b, i);
        p = v_clone(&p, i, 2);
    }
    (b.project(), p)
}

/// Runs [`pi_equivariance_instance`] on explicit samples.
pub fn check_pi_equivariance(samples: &[(BraidWord, Forest)]) -> CheckReport {
    let mut r = CheckReport::new("pi-equivariance");
    for (b, f) in samples {
        let (l, rr) = pi_equivariance_instance(b, f);
        r.expect("pi-equivariance", || format!("β={b} f={f}"), l == rr, || (l.to_string(), rr.to_string()));
    }
    r
}

/// All signed words of length `≤ max_len` on `n ≤ max_n` strands against
/// every caret and every product of two carets.
pub fn pi_equivariance_exhaustive(max_n: usize, max_len: usize) -> CheckReport {
    let mut samples = Vec::new();
    for n in 1..=max_n {
        let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
        let mut words = vec![Vec::new()];
        let mut frontier: Vec<Vec<i32>> = vec![Vec::new()];
        for _ in 0..max_len {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    letters.iter().map(move |&x| {
                        let mut v = w.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
            words.extend(frontier.iter().cloned());
        }
        let mut forests = Vec::new();
        for i in 1..=n {
            forests.push(Forest::caret(i, n, 2).unwrap());
            for j in 1..=n + 1 {
                forests.push(normal_form(&[i, j], n, 2).unwrap());
            }
        }
        for w in &words {
            for f in &forests {
                samples.push((BraidWord { n, word: w.clone() }, f.clone()));
            }
        }
    }
    check_pi_equivariance(&samples)
}

/// `count` random instances with `2 ≤ n ≤ max_n`, `|β| ≤ max_len` and up to
/// four carets, from a seeded generator.
pub fn pi_equivariance_random(count: usize, max_n: usize, max_len: usize, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<(BraidWord, Forest)> = (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let len = rng.gen_range(0..=max_len);
            let word = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..n as i32);
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            let carets = rng.gen_range(0..=4);
            let mut leaves = n;
            let mut fw = Vec::new();
            for _ in 0..carets {
                fw.push(rng.gen_range(1..=leaves));
                leaves += 1;
            }
            (BraidWord { n, word }, normal_form(&fw, n, 2).unwrap())
        })
        .collect();
    check_pi_equivariance(&samples)
}

/// Cloning at each caret is injective on the enumerated units, and
/// [`CloningSystem::uncloned`] recovers every preimage.
pub fn check_injectivity<C: CloningSystem>(cs: &C, bound: usize) -> CheckReport {
    let mut parts = Vec::new();
    for n in 1..=bound {
        let els = cs.elements(n);
        for k in 1..=n {
            let images: Vec<C::Elem> = els.iter().map(|g| cs.clone_at(g, k).unwrap()).collect();
            let mut r = CheckReport::default();
            for (a, ia) in els.iter().zip(&images) {
                let back = cs.uncloned(ia, k);
                let ok = back.as_ref().map(|b| cs.equal(b, a)).unwrap_or(false);
                r.expect("recover", || format!("n={n} k={k} g={}", cs.encode(a)), ok, || {
                    (
                        back.as_ref().map(|b| cs.encode(b)).unwrap_or_else(|e| e.to_string()),
                        cs.encode(a),
                    )
                });
            }
            let distinct: Vec<CheckReport> = (0..els.len())
                .into_par_iter()
                .map(|x| {
                    let mut r = CheckReport::default();
                    for y in x + 1..els.len() {
                        if cs.equal(&els[x], &els[y]) {
                            continue;
                        }
                        let ok = !cs.equal(&images[x], &images[y]);
                        r.expect("injective", || format!("n={n} k={k}"), ok, || {
                            (cs.encode(&els[x]), cs.encode(&els[y]))
                        });
                    }
                    r
                })
                .collect();
            parts.push(r);
            parts.extend(distinct);
        }
    }
    merged(format!("injectivity {} bound {bound}", cs.name()), parts)
}

/// CS1 (cloning a product), CS2 (product of clonings) and CS3
/// (compatibility with permutation cloning away from the split leaf), plus
/// the homomorphism property of `ρ`.
pub fn validate_cloning_system<C: CloningSystem>(cs: &C, bound: usize) -> CheckReport {
    let d = cs.arity();
    let mut parts = Vec::new();
    for n in 1..=bound {
        let els = cs.elements(n);
        let per_g: Vec<CheckReport> = els
            .par_iter()
            .map(|g| {
                let mut r = CheckReport::default();
                let ge = cs.encode(g);
                for h in &els {
                    let gh = cs.mul(g, h).unwrap();
                    let lr = cs.rho(&gh);
                    let rr = cs.rho(g).compose(&cs.rho(h)).unwrap();
                    r.expect("rho-hom", || format!("g={ge} h={}", cs.encode(h)), lr == rr, || {
                        (lr.to_string(), rr.to_string())
                    });
                    for k in 1..=n {
                        let l = cs.clone_at(&gh, k).unwrap();
                        let a = cs.clone_at(g, cs.rho(h).apply(k)).unwrap();
                        let b = cs.clone_at(h, k).unwrap();
                        let rhs = cs.mul(&a, &b).unwrap();
                        r.expect("CS1", || format!("g={ge} h={} k={k}", cs.encode(h)), cs.equal(&l, &rhs), || {
                            (cs.encode(&l), cs.encode(&rhs))
                        });
                    }
                }
                for k in 1..=n {
                    for l in k + 1..=n {
                        let lhs = cs.clone_at(&cs.clone_at(g, l).unwrap(), k).unwrap();
                        let rhs = cs.clone_at(&cs.clone_at(g, k).unwrap(), l + d - 1).unwrap();
                        r.expect("CS2", || format!("g={ge} k={k} l={l}"), cs.equal(&lhs, &rhs), || {
                            (cs.encode(&lhs), cs.encode(&rhs))
                        });
                    }
                    let got = cs.rho(&cs.clone_at(g, k).unwrap());
                    let want = v_clone(&cs.rho(g), k, d);
                    let ok = (1..=n + d - 1)
                        .filter(|&i| i < k || i >= k + d)
                        .all(|i| got.apply(i) == want.apply(i));
                    r.expect("CS3", || format!("g={ge} k={k}"), ok, || (got.to_string(), want.to_string()));
                }
                r
            })
            .collect();
        parts.extend(per_g);
    }
    merged(format!("cloning-system {} bound {bound}", cs.name()), parts)
}

/// A cloning system paired with its validation report. Only a passing
/// report marks the system trusted.
pub struct Adapted<C> {
    pub system: C,
    pub report: CheckReport,
    pub trusted: bool,
}

pub fn cloning_system_adapter<C: CloningSystem>(cs: C, bound: usize) -> Adapted<C> {
    let report = validate_cloning_system(&cs, bound);
    let trusted = report.passed();
    Adapted {
        system: cs,
        report,
        trusted,
    }
}
