//! The shipped unit groupoids and their cloning maps: trivial (F), rotations
//! (T), permutations (V) and braids (BF, BT, BV).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};
use crate::forest::Forest;
use crate::units::{BraidWord, Permutation, Rotation};
use crate::zs::CloningSystem;

/// A unit morphism `G(n, n)` of one of the shipped families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Unit {
    Braid(BraidWord),
    Perm(Permutation),
    Rot(Rotation),
    Trivial { n: usize },
}

impl Unit {
    pub fn degree(&self) -> usize {
        match self {
            Unit::Braid(b) => b.n,
            Unit::Perm(p) => p.degree(),
            Unit::Rot(r) => r.degree(),
            Unit::Trivial { n } => *n,
        }
    }

    /// Underlying permutation of leaves.
    pub fn permutation(&self) -> Permutation {
        match self {
            Unit::Braid(b) => b.project(),
            Unit::Perm(p) => p.clone(),
            Unit::Rot(r) => r.to_permutation(),
            Unit::Trivial { n } => Permutation::identity(*n),
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Braid(b) => write!(f, "{b}"),
            Unit::Perm(p) => write!(f, "{p}"),
            Unit::Rot(r) => write!(f, "{r}"),
            Unit::Trivial { n } => write!(f, "1_{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    F,
    T,
    V,
    BF,
    BT,
    BV,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::F,
        FamilyKind::T,
        FamilyKind::V,
        FamilyKind::BF,
        FamilyKind::BT,
        FamilyKind::BV,
    ];

    pub fn is_braided(self) -> bool {
        matches!(self, FamilyKind::BF | FamilyKind::BT | FamilyKind::BV)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyKind::F => "F",
            FamilyKind::T => "T",
            FamilyKind::V => "V",
            FamilyKind::BF => "BF",
            FamilyKind::BT => "BT",
            FamilyKind::BV => "BV",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyKind {
    type Err = OreError;
    fn from_str(s: &str) -> Result<FamilyKind> {
        match s.to_ascii_uppercase().as_str() {
            "F" => Ok(FamilyKind::F),
            "T" => Ok(FamilyKind::T),
            "V" => Ok(FamilyKind::V),
            "BF" => Ok(FamilyKind::BF),
            "BT" => Ok(FamilyKind::BT),
            "BV" => Ok(FamilyKind::BV),
            _ => Err(OreError::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// A family of unit groupoids together with the arity of the forests it
/// decorates. Braided families exist only for arity 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Family {
    pub kind: FamilyKind,
    pub arity: usize,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity == 2 {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "{}_{}", self.kind, self.arity)
        }
    }
}

impl FromStr for Family {
    type Err = OreError;

    /// `"V"`, or `"V_3"` for ternary forests.
    fn from_str(s: &str) -> Result<Family> {
        match s.split_once('_') {
            Some((k, d)) => Family::new(
                k.parse()?,
                d.parse().map_err(|_| OreError::Parse(format!("bad arity in {s:?}")))?,
            ),
            None => Family::new(s.parse()?, 2),
        }
    }
}

impl TryFrom<String> for Family {
    type Error = OreError;
    fn try_from(s: String) -> Result<Family> {
        s.parse()
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

/// `g^{λ_i}` for a permutation `g`, generalized to `d`-ary carets: leaf `i`
/// splits into `d` consecutive leaves that land on `g(i), ..., g(i)+d−1`.
pub fn v_clone(g: &Permutation, i: usize, d: usize) -> Permutation {
    let n = g.degree();
    let gi = g.apply(i);
    let img = (1..=n + d - 1)
        .map(|j| {
            let (o, k) = if j < i {
                (j, 0)
            } else if j < i + d {
                (i, j - i)
            } else {
                (j - d + 1, 0)
            };
            let go = g.apply(o);
            if go < gi {
                go
            } else if go == gi {
                gi + k
            } else {
                go + d - 1
            }
        })
        .collect();
    Permutation::new(img).expect("cloning yields a bijection")
}

/// Inverse of [`v_clone`]: `g(j) = π_{g'(i)}(g'(τ_i(j)))`.
pub fn v_uncloned(gp: &Permutation, i: usize, d: usize) -> Result<Permutation> {
    if gp.degree() < d || i == 0 || i > gp.degree() + 1 - d {
        return Err(OreError::NotInImage(i));
    }
    let n = gp.degree() + 1 - d;
    let c = gp.apply(i);
    let img = (1..=n)
        .map(|j| {
            let t = if j <= i { j } else { j + d - 1 };
            let x = gp.apply(t);
            if x <= c {
                x
            } else if x >= c + d {
                x - d + 1
            } else {
                0
            }
        })
        .collect();
    let g = Permutation::new(img).map_err(|_| OreError::NotInImage(i))?;
    if v_clone(&g, i, d) == *gp {
        Ok(g)
    } else {
        Err(OreError::NotInImage(i))
    }
}

/// `σ_i^{λ_j}` for a positive generator.
pub fn bv_clone_generator(i: usize, j: usize) -> Vec<i32> {
    let i32_ = i as i32;
    if j < i {
        vec![i32_ + 1]
    } else if j == i {
        vec![i32_, i32_ + 1]
    } else if j == i + 1 {
        vec![i32_ + 1, i32_]
    } else {
        vec![i32_]
    }
}

/// `β^{λ_c}` for a braid word, cloning letters from the right:
/// `(s·rest)^λ = s^{rest·λ} · rest^λ`.
pub fn bv_clone(b: &BraidWord, c: usize) -> BraidWord {
    let mut pos = c;
    let mut rev: Vec<Vec<i32>> = Vec::with_capacity(b.word.len());
    for &x in b.word.iter().rev() {
        let i = x.unsigned_abs() as usize;
        if x > 0 {
            rev.push(bv_clone_generator(i, pos));
        } else {
            // (σ⁻¹)^{λ_c} = (σ^{λ_{c'}})⁻¹ with c' = π(σ)(c)
            let cp = transpose(i, pos);
            rev.push(bv_clone_generator(i, cp).into_iter().rev().map(|y| -y).collect());
        }
        pos = transpose(i, pos);
    }
    BraidWord {
        n: b.n + 1,
        word: rev.into_iter().rev().flatten().collect(),
    }
}

fn transpose(i: usize, p: usize) -> usize {
    if p == i {
        i + 1
    } else if p == i + 1 {
        i
    } else {
        p
    }
}

/// `g^f` for a rotation by counting the leaves of the last `ℓ` trees of `f`.
pub fn t_clone_by_last_trees(g: &Rotation, f: &Forest) -> Rotation {
    let sizes = f.tree_sizes();
    let l = g.shift();
    let k: usize = sizes[sizes.len() - l..].iter().sum();
    Rotation::new(f.leaves(), k as i64)
}

/// `g^f` for a rotation by counting the leaves of the first `ℓ` trees of `g·f`.
pub fn t_clone_by_first_trees(g: &Rotation, f: &Forest) -> Rotation {
    let moved = t_rotate_forest(g, f);
    let k: usize = moved.tree_sizes()[..g.shift()].iter().sum();
    Rotation::new(f.leaves(), k as i64)
}

/// `g·f` for a rotation: the trees of `f` rotated `ℓ` places to the right.
pub fn t_rotate_forest(g: &Rotation, f: &Forest) -> Forest {
    let trees = f.trees();
    let mut out = trees.clone();
    for (j, t) in trees.into_iter().enumerate() {
        out[g.apply(j + 1) - 1] = t;
    }
    Forest::from_trees(f.arity(), out).expect("rotation keeps arity")
}

impl Family {
    pub fn new(kind: FamilyKind, arity: usize) -> Result<Family> {
        if arity < 2 {
            return Err(OreError::InvalidArity(arity));
        }
        if kind.is_braided() && arity != 2 {
            return Err(OreError::FamilyViolation {
                family: kind.to_string(),
                detail: format!("braided families need arity 2, got {arity}"),
            });
        }
        Ok(Family { kind, arity })
    }

    pub fn binary(kind: FamilyKind) -> Family {
        Family { kind, arity: 2 }
    }

    /// Checks that `u` lies in this family's groupoid.
    pub fn check(&self, u: &Unit) -> Result<()> {
        let bad = |detail: String| OreError::FamilyViolation {
            family: self.to_string(),
            detail,
        };
        match (self.kind, u) {
            (FamilyKind::F, Unit::Trivial { .. })
            | (FamilyKind::T, Unit::Rot(_))
            | (FamilyKind::V, Unit::Perm(_)) => Ok(()),
            (FamilyKind::BV, Unit::Braid(b)) => b.validate(),
            (FamilyKind::BT, Unit::Braid(b)) => {
                b.validate()?;
                if b.is_cyclic() {
                    Ok(())
                } else {
                    Err(bad(format!("{b} does not project to a rotation")))
                }
            }
            (FamilyKind::BF, Unit::Braid(b)) => {
                b.validate()?;
                if b.is_pure() {
                    Ok(())
                } else {
                    Err(bad(format!("{b} is not pure")))
                }
            }
            (FamilyKind::F, u) if u.permutation().is_identity() => Ok(()),
            (FamilyKind::T, Unit::Perm(p)) if p.as_rotation().is_some() => Ok(()),
            _ => Err(bad(format!("{u} has the wrong kind"))),
        }
    }

    /// Converts compatible representations into this family's native one.
    pub fn coerce(&self, u: Unit) -> Result<Unit> {
        self.check(&u)?;
        Ok(match (self.kind, u) {
            (FamilyKind::F, u) => Unit::Trivial { n: u.degree() },
            (FamilyKind::T, Unit::Perm(p)) => Unit::Rot(p.as_rotation().unwrap()),
            (_, u) => u,
        })
    }

    /// A key that identifies equal units.
    pub fn key(&self, u: &Unit) -> String {
        match u {
            Unit::Braid(b) => format!("{}:{}", b.n, b.normal_form()),
            u => format!("{u}"),
        }
    }

    /// The unit `u` rewritten in a canonical spelling.
    pub fn canonical(&self, u: &Unit) -> Unit {
        match u {
            Unit::Braid(b) => Unit::Braid(b.canonical()),
            u => u.clone(),
        }
    }

    /// Generators of `G(n, n)`.
    pub fn generators(&self, n: usize) -> Vec<Unit> {
        match self.kind {
            FamilyKind::F => Vec::new(),
            FamilyKind::T => {
                if n > 1 {
                    vec![Unit::Rot(Rotation::new(n, 1))]
                } else {
                    Vec::new()
                }
            }
            FamilyKind::V => (1..n).map(|i| Unit::Perm(Permutation::adjacent(i, n))).collect(),
            FamilyKind::BV => (1..n)
                .map(|i| Unit::Braid(BraidWord { n, word: vec![i as i32] }))
                .collect(),
            FamilyKind::BT => {
                let mut g: Vec<Unit> = (1..n)
                    .map(|i| Unit::Braid(BraidWord { n, word: vec![i as i32, i as i32] }))
                    .collect();
                if n > 1 {
                    g.push(Unit::Braid(BraidWord {
                        n,
                        word: (1..n as i32).rev().collect(),
                    }));
                }
                g
            }
            FamilyKind::BF => {
                let mut g = Vec::new();
                for i in 1..n {
                    for j in i + 1..=n {
                        // A_ij = σ_{j-1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j-1}⁻¹
                        let (i, j) = (i as i32, j as i32);
                        let word: Vec<i32> = (i + 1..j)
                            .rev()
                            .chain([i, i])
                            .chain((i + 1..j).map(|x| -x))
                            .collect();
                        g.push(Unit::Braid(BraidWord { n, word }));
                    }
                }
                g
            }
        }
    }

    /// Elements of `G(n, n)` used by exhaustive checks: every element for
    /// finite groups, and all words of bounded length for braid groups
    /// (signed words up to length 2, positive words up to `max_len`).
    pub fn sample_elements(&self, n: usize, max_len: usize) -> Vec<Unit> {
        match self.kind {
            FamilyKind::F => vec![Unit::Trivial { n }],
            FamilyKind::T => Rotation::all(n).into_iter().map(Unit::Rot).collect(),
            FamilyKind::V => Permutation::all(n).into_iter().map(Unit::Perm).collect(),
            _ => {
                let mut out = Vec::new();
                let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
                let pos: Vec<i32> = (1..n as i32).collect();
                let mut words: Vec<Vec<i32>> = vec![Vec::new()];
                let mut frontier = vec![Vec::new()];
                for len in 1..=max_len.max(2) {
                    let alphabet = if len <= 2 { &letters } else { &pos };
                    let mut next = Vec::new();
                    for w in &frontier {
                        for &x in alphabet {
                            if len > 2 && w.iter().any(|&y| y < 0) {
                                continue;
                            }
                            let mut v: Vec<i32> = w.clone();
                            v.push(x);
                            next.push(v);
                        }
                    }
                    if len <= max_len {
                        words.extend(next.iter().cloned());
                    }
                    frontier = next;
                }
                for word in words {
                    let u = Unit::Braid(BraidWord { n, word });
                    if self.check(&u).is_ok() {
                        out.push(u);
                    }
                }
                out
            }
        }
    }

    fn trivial_mismatch(&self, a: &Unit, b: &Unit) -> OreError {
        OreError::FamilyMismatch(format!("{a}"), format!("{b}"))
    }
}

impl CloningSystem for Family {
    type Elem = Unit;

    fn name(&self) -> String {
        self.to_string()
    }

    fn arity(&self) -> usize {
        self.arity
    }

    fn identity(&self, n: usize) -> Unit {
        match self.kind {
            FamilyKind::F => Unit::Trivial { n },
            FamilyKind::T => Unit::Rot(Rotation::identity(n)),
            FamilyKind::V => Unit::Perm(Permutation::identity(n)),
            _ => Unit::Braid(BraidWord::identity(n)),
        }
    }

    fn degree(&self, g: &Unit) -> usize {
        g.degree()
    }

    fn mul(&self, a: &Unit, b: &Unit) -> Result<Unit> {
        if a.degree() != b.degree() {
            return Err(OreError::DegreeMismatch {
                expected: a.degree(),
                found: b.degree(),
            });
        }
        match (a, b) {
            (Unit::Trivial { n }, Unit::Trivial { .. }) => Ok(Unit::Trivial { n: *n }),
            (Unit::Rot(x), Unit::Rot(y)) => Ok(Unit::Rot(x.compose(y)?)),
            (Unit::Perm(x), Unit::Perm(y)) => Ok(Unit::Perm(x.compose(y)?)),
            (Unit::Braid(x), Unit::Braid(y)) => Ok(Unit::Braid(x.multiply(y)?)),
            _ => Err(self.trivial_mismatch(a, b)),
        }
    }

    fn inverse(&self, g: &Unit) -> Unit {
        match g {
            Unit::Trivial { n } => Unit::Trivial { n: *n },
            Unit::Rot(r) => Unit::Rot(r.inverse()),
            Unit::Perm(p) => Unit::Perm(p.inverse()),
            Unit::Braid(b) => Unit::Braid(b.inverse()),
        }
    }

    fn equal(&self, a: &Unit, b: &Unit) -> bool {
        match (a, b) {
            (Unit::Braid(x), Unit::Braid(y)) => x.braid_eq(y).unwrap_or(false),
            _ => a == b,
        }
    }

    fn rho(&self, g: &Unit) -> Permutation {
        g.permutation()
    }

    fn clone_at(&self, g: &Unit, k: usize) -> Result<Unit> {
        let n = g.degree();
        if k == 0 || k > n {
            return Err(OreError::IndexOutOfRange {
                step: 1,
                index: k,
                max: n,
            });
        }
        let d = self.arity;
        Ok(match g {
            Unit::Trivial { n } => Unit::Trivial { n: n + d - 1 },
            Unit::Rot(r) => {
                let l = r.shift();
                let extra = if k > n - l { d - 1 } else { 0 };
                Unit::Rot(Rotation::new(n + d - 1, (l + extra) as i64))
            }
            Unit::Perm(p) => Unit::Perm(v_clone(p, k, d)),
            Unit::Braid(b) => Unit::Braid(bv_clone(b, k)),
        })
    }

    fn uncloned(&self, g: &Unit, k: usize) -> Result<Unit> {
        let d = self.arity;
        let n = g.degree();
        if n < d || k == 0 || k + d - 1 > n {
            return Err(OreError::NotInImage(k));
        }
        let candidate = match g {
            Unit::Trivial { n } => Unit::Trivial { n: n + 1 - d },
            Unit::Rot(r) => {
                let p = v_uncloned(&r.to_permutation(), k, d)?;
                Unit::Rot(p.as_rotation().ok_or(OreError::NotInImage(k))?)
            }
            Unit::Perm(p) => Unit::Perm(v_uncloned(p, k, d)?),
            Unit::Braid(b) => Unit::Braid(b.delete_strand(k + 1)?),
        };
        if self.equal(&self.clone_at(&candidate, k)?, g) {
            Ok(candidate)
        } else {
            Err(OreError::NotInImage(k))
        }
    }

    fn elements(&self, n: usize) -> Vec<Unit> {
        self.sample_elements(n, 3)
    }

    fn encode(&self, g: &Unit) -> String {
        format!("{g}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_clone_example() {
        let g = Permutation::adjacent(1, 2);
        assert_eq!(v_clone(&g, 1, 2).images(), &[2, 3, 1]);
        assert_eq!(v_uncloned(&Permutation::new(vec![2, 3, 1]).unwrap(), 1, 2).unwrap(), g);
        assert!(v_uncloned(&Permutation::new(vec![3, 2, 1]).unwrap(), 1, 2).is_err());
    }

    #[test]
    fn v_clone_is_a_bijection_for_all_arities() {
        for d in 2..=4 {
            for n in 1..=4 {
                for g in Permutation::all(n) {
                    for i in 1..=n {
                        let c = v_clone(&g, i, d);
                        assert_eq!(c.degree(), n + d - 1);
                        assert_eq!(v_uncloned(&c, i, d).unwrap(), g);
                    }
                }
            }
        }
    }

    #[test]
    fn bv_table() {
        let b = |w: &[i32], n| BraidWord::new(n, w.to_vec()).unwrap();
        assert_eq!(bv_clone(&b(&[1], 3), 1).word, vec![1, 2]);
        assert_eq!(bv_clone(&b(&[2], 3), 1).word, vec![3]);
        assert_eq!(bv_clone(&b(&[1], 3), 3).word, vec![1]);
        assert_eq!(bv_clone(&b(&[1], 3), 2).word, vec![2, 1]);
        // inverse letters clone to inverses
        let x = b(&[1, -2], 3);
        let c = bv_clone(&x, 2);
        let y = bv_clone(&x.inverse(), Family::binary(FamilyKind::BV).rho(&Unit::Braid(x.clone())).apply(2));
        assert!(c.multiply(&y).unwrap().normal_form().is_identity());
    }

    #[test]
    fn rotation_acts_on_last_caret() {
        let t = Family::binary(FamilyKind::T);
        let g = Rotation::new(3, 1);
        let f = Forest::caret(3, 3, 2).unwrap();
        assert_eq!(t_rotate_forest(&g, &f), Forest::caret(1, 3, 2).unwrap());
        assert_eq!(t_clone_by_last_trees(&g, &f), Rotation::new(4, 2));
        assert_eq!(t_clone_by_first_trees(&g, &f), Rotation::new(4, 2));
        assert_eq!(t.clone_at(&Unit::Rot(g), 3).unwrap(), Unit::Rot(Rotation::new(4, 2)));
        // the same through the permutation formula
        assert_eq!(v_clone(&g.to_permutation(), 3, 2), Rotation::new(4, 2).to_permutation());
    }

    #[test]
    fn family_membership() {
        let bf = Family::binary(FamilyKind::BF);
        for g in bf.generators(4) {
            bf.check(&g).unwrap();
        }
        assert_eq!(bf.generators(4).len(), 6);
        let bt = Family::binary(FamilyKind::BT);
        for g in bt.generators(4) {
            bt.check(&g).unwrap();
        }
        assert!(bf
            .check(&Unit::Braid(BraidWord::new(3, vec![1]).unwrap()))
            .is_err());
        assert!(Family::new(FamilyKind::BV, 3).is_err());
        assert!(bf.sample_elements(3, 3).iter().all(|u| bf.check(u).is_ok()));
    }

    #[test]
    fn unit_json() {
        let u: Unit = serde_json::from_str(r#"{"n":3,"word":[1,2,-1]}"#).unwrap();
        assert!(matches!(u, Unit::Braid(_)));
        let u: Unit = serde_json::from_str(r#"{"n":3,"img":[2,3,1]}"#).unwrap();
        assert!(matches!(u, Unit::Perm(_)));
        let u: Unit = serde_json::from_str(r#"{"n":4,"shift":2}"#).unwrap();
        assert!(matches!(u, Unit::Rot(_)));
        let u: Unit = serde_json::from_str(r#"{"n":4}"#).unwrap();
        assert_eq!(u, Unit::Trivial { n: 4 });
    }
}
