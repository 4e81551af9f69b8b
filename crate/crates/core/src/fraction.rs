//! Elements of the fundamental groups `π₁(F_d ⋈ G, r)` as fractions
//! `f·u·g⁻¹`: the Thompson groups `F`, `T`, `V`, their Higman–Thompson
//! generalizations, and the braided groups `BF`, `BT`, `BV`.
//!
//! Elements are stored unreduced. Equality brings both denominators to
//! their least common multiple and compares the results.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};
use crate::forest::{Forest, Tree};
use crate::zs::{act, act_forest_on_unit, CloningSystem, Family, FamilyKind, Unit};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionElement {
    pub family: Family,
    pub base: usize,
    pub num: Forest,
    pub unit: Unit,
    pub den: Forest,
}

impl fmt::Display for FractionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {} | {}]", self.num, self.unit, self.den)
    }
}

impl FractionElement {
    pub fn new(family: Family, num: Forest, unit: Unit, den: Forest) -> Result<Self> {
        let unit = family.coerce(unit)?;
        let x = FractionElement {
            family,
            base: num.roots(),
            num,
            unit,
            den,
        };
        x.validate()?;
        Ok(x)
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.family.arity;
        for f in [&self.num, &self.den] {
            if f.arity() != d {
                return Err(OreError::ArityMismatch {
                    left: d,
                    right: f.arity(),
                });
            }
            if f.roots() != self.base {
                return Err(OreError::BoundaryMismatch {
                    context: "fraction base",
                    expected: self.base,
                    found: f.roots(),
                });
            }
        }
        if self.num.leaves() != self.den.leaves() {
            return Err(OreError::BoundaryMismatch {
                context: "fraction leaves",
                expected: self.num.leaves(),
                found: self.den.leaves(),
            });
        }
        if self.unit.degree() != self.num.leaves() {
            return Err(OreError::DegreeMismatch {
                expected: self.num.leaves(),
                found: self.unit.degree(),
            });
        }
        self.family.check(&self.unit)
    }

    pub fn identity(family: Family, base: usize) -> Self {
        FractionElement {
            family,
            base,
            num: Forest::identity(base, family.arity),
            unit: family.identity(base),
            den: Forest::identity(base, family.arity),
        }
    }

    /// The tree pair `[num, den]` with trivial unit.
    pub fn tree_pair(family: Family, num: Forest, den: Forest) -> Result<Self> {
        let u = family.identity(num.leaves());
        FractionElement::new(family, num, u, den)
    }

    /// `(t, u, t)`: the unit `u` conjugated into the group at `t`'s root count.
    pub fn conjugated_unit(family: Family, t: Forest, u: Unit) -> Result<Self> {
        FractionElement::new(family, t.clone(), u, t)
    }

    pub fn leaves(&self) -> usize {
        self.num.leaves()
    }

    pub fn carets(&self) -> usize {
        self.num.caret_count()
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.family != other.family {
            return Err(OreError::FamilyMismatch(
                self.family.to_string(),
                other.family.to_string(),
            ));
        }
        if self.base != other.base {
            return Err(OreError::BoundaryMismatch {
                context: "fraction base",
                expected: self.base,
                found: other.base,
            });
        }
        Ok(())
    }

    /// `(f·(u·h), u^h, g·h)`, an equivalent representative.
    pub fn expand(&self, h: &Forest) -> Result<Self> {
        if h.roots() != self.leaves() {
            return Err(OreError::BoundaryMismatch {
                context: "expand",
                expected: self.leaves(),
                found: h.roots(),
            });
        }
        let (uh, u2) = act(&self.family, &self.unit, h)?;
        Ok(FractionElement {
            family: self.family,
            base: self.base,
            num: self.num.compose(&uh)?,
            unit: self.family.canonical(&u2),
            den: self.den.compose(h)?,
        })
    }

    /// Both elements over the common denominator `lcm(den_x, den_y)`.
    fn common_denominator(&self, other: &Self) -> Result<(Self, Self)> {
        self.same_group(other)?;
        let l = self.den.lcm(&other.den)?;
        let a = self.expand(&self.den.left_quotient(&l)?)?;
        let b = other.expand(&other.den.left_quotient(&l)?)?;
        Ok((a, b))
    }

    pub fn eq(&self, other: &Self) -> Result<bool> {
        let (a, b) = self.common_denominator(other)?;
        Ok(a.num == b.num && self.family.equal(&a.unit, &b.unit))
    }

    pub fn is_identity(&self) -> Result<bool> {
        self.eq(&FractionElement::identity(self.family, self.base))
    }

    pub fn inv(&self) -> Self {
        FractionElement {
            family: self.family,
            base: self.base,
            num: self.den.clone(),
            unit: self.family.inverse(&self.unit),
            den: self.num.clone(),
        }
    }

    /// `x·y`: with `g_x·s = f_y·t = lcm(g_x, f_y)` and `h = u_y⁻¹·t`, the
    /// product is `(f_x (u_x·s), u_x^s u_y^h, g_y h)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let z = self.mul_unchecked(other)?;
        #[cfg(debug_assertions)]
        {
            let back = z.mul_unchecked(&other.inv())?;
            debug_assert!(back.eq(self)?, "(xy)y⁻¹ != x for x = {self}, y = {other}");
        }
        Ok(z)
    }

    fn mul_unchecked(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let fam = &self.family;
        let l = self.den.lcm(&other.num)?;
        let s = self.den.left_quotient(&l)?;
        let t = other.num.left_quotient(&l)?;
        let (us, ux_s) = act(fam, &self.unit, &s)?;
        let h = act(fam, &fam.inverse(&other.unit), &t)?.0;
        let uy_h = act_forest_on_unit(fam, &other.unit, &h)?;
        Ok(FractionElement {
            family: *fam,
            base: self.base,
            num: self.num.compose(&us)?,
            unit: fam.canonical(&fam.mul(&ux_s, &uy_h)?),
            den: other.den.compose(&h)?,
        })
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let mut acc = FractionElement::identity(self.family, self.base);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Least `1 ≤ k ≤ bound` with `x^k = 1`.
    pub fn order(&self, bound: usize) -> Result<Option<usize>> {
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_identity()? {
                return Ok(Some(k));
            }
            acc = acc.mul(self)?;
        }
        Ok(None)
    }

    /// Cancels bottom carets of the denominator whenever the unit and the
    /// numerator factor through the same caret, until none is left.
    pub fn reduce(&self) -> Self {
        let mut x = self.clone();
        let d = self.family.arity;
        'outer: loop {
            let n = x.leaves();
            if n < d {
                return x;
            }
            for k in 1..=n + 1 - d {
                let caret = Forest::caret(k, n + 1 - d, d).expect("caret in range");
                let Ok(g0) = x.den.right_quotient(&caret) else {
                    continue;
                };
                if g0.roots() != x.base {
                    continue;
                }
                let Ok(u0) = self.family.uncloned(&x.unit, k) else {
                    continue;
                };
                let moved = Forest::caret(self.family.rho(&u0).apply(k), n + 1 - d, d).unwrap();
                let Ok(f0) = x.num.right_quotient(&moved) else {
                    continue;
                };
                x = FractionElement {
                    family: x.family,
                    base: x.base,
                    num: f0,
                    unit: self.family.canonical(&u0),
                    den: g0,
                };
                continue 'outer;
            }
            return x;
        }
    }

    /// Image under `π`: braids become permutations, landing in V, T or F.
    pub fn project_to_v(&self) -> Result<Self> {
        let kind = match self.family.kind {
            FamilyKind::BV => FamilyKind::V,
            FamilyKind::BT => FamilyKind::T,
            FamilyKind::BF => FamilyKind::F,
            k => {
                return Err(OreError::FamilyViolation {
                    family: k.to_string(),
                    detail: "projection needs a braided family".into(),
                })
            }
        };
        let family = Family::new(kind, self.family.arity)?;
        FractionElement::new(
            family,
            self.num.clone(),
            Unit::Perm(self.unit.permutation()),
            self.den.clone(),
        )
    }

    /// A random element whose trees have `leaves` leaves and whose unit is a
    /// random group element (braid words of length `≤ braid_len`).
    pub fn random<R: Rng>(family: Family, base: usize, leaves: usize, braid_len: usize, rng: &mut R) -> Result<Self> {
        let d = family.arity;
        if !crate::forest::component_reachable(base, leaves, d) {
            return Err(OreError::BoundaryMismatch {
                context: "random leaves",
                expected: base,
                found: leaves,
            });
        }
        let num = random_forest(base, leaves, d, rng);
        let den = random_forest(base, leaves, d, rng);
        let unit = random_unit(family, leaves, braid_len, rng);
        FractionElement::new(family, num, unit, den)
    }
}

/// A random forest with `roots` roots and `leaves` leaves.
pub fn random_forest<R: Rng>(roots: usize, leaves: usize, d: usize, rng: &mut R) -> Forest {
    let mut word = Vec::new();
    let mut n = roots;
    while n < leaves {
        word.push(rng.gen_range(1..=n));
        n += d - 1;
    }
    crate::forest::normal_form(&word, roots, d).expect("indices in range")
}

/// A random unit of degree `n` in the family.
pub fn random_unit<R: Rng>(family: Family, n: usize, braid_len: usize, rng: &mut R) -> Unit {
    use crate::units::{BraidWord, Permutation, Rotation};
    match family.kind {
        FamilyKind::F => Unit::Trivial { n },
        FamilyKind::T => Unit::Rot(Rotation::new(n, rng.gen_range(0..n) as i64)),
        FamilyKind::V => {
            let mut img: Vec<usize> = (1..=n).collect();
            for i in (1..n).rev() {
                img.swap(i, rng.gen_range(0..=i));
            }
            Unit::Perm(Permutation::new(img).unwrap())
        }
        _ => {
            let gens = family.generators(n);
            let mut w = BraidWord::identity(n);
            if !gens.is_empty() {
                let len = rng.gen_range(0..=braid_len);
                for _ in 0..len {
                    let Unit::Braid(g) = &gens[rng.gen_range(0..gens.len())] else {
                        unreachable!()
                    };
                    let g = if rng.gen_bool(0.5) { g.clone() } else { g.inverse() };
                    w = w.multiply(&g).unwrap();
                }
            }
            Unit::Braid(w)
        }
    }
}

/// The single caret tree with `d` leaves, as a forest on one root.
pub fn caret_tree(d: usize) -> Forest {
    Forest::from_tree(d, Tree::Node(vec![Tree::Leaf; d])).expect("valid caret")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{BraidWord, Permutation, Rotation};

    fn fam(k: FamilyKind) -> Family {
        Family::binary(k)
    }

    fn f(s: &str) -> Forest {
        s.parse().unwrap()
    }

    #[test]
    fn v_expand_example() {
        let v = fam(FamilyKind::V);
        let x = FractionElement::new(v, f("F(1;1)"), Unit::Perm(Permutation::adjacent(1, 2)), f("F(1;1)")).unwrap();
        let y = x.expand(&f("F(2;1)")).unwrap();
        assert_eq!(y.num, f("F(1;1,2)"));
        assert_eq!(y.unit, Unit::Perm(Permutation::new(vec![2, 3, 1]).unwrap()));
        assert_eq!(y.den, f("F(1;1,1)"));
        assert!(x.eq(&y).unwrap());
        assert_eq!(y.reduce(), x);
        assert_eq!(x.order(10).unwrap(), Some(2));
    }

    #[test]
    fn f_x0_not_inverse() {
        let ff = fam(FamilyKind::F);
        let x0 = FractionElement::tree_pair(ff, f("F(1;1,1)"), f("F(1;1,2)")).unwrap();
        let x0i = FractionElement::tree_pair(ff, f("F(1;1,2)"), f("F(1;1,1)")).unwrap();
        assert!(!x0.eq(&x0i).unwrap());
        assert!(x0.inv().eq(&x0i).unwrap());
        assert!(x0.mul(&x0i).unwrap().is_identity().unwrap());
        assert_eq!(x0.reduce(), x0);
        assert_eq!(x0.order(20).unwrap(), None);
    }

    #[test]
    fn t_rotation_orders() {
        let t = fam(FamilyKind::T);
        let r2 = FractionElement::conjugated_unit(t, f("F(1;1)"), Unit::Rot(Rotation::new(2, 1))).unwrap();
        assert!(r2.mul(&r2).unwrap().is_identity().unwrap());
        for n in 2..=5 {
            let tree = crate::forest::normal_form(&vec![1; n - 1], 1, 2).unwrap();
            let r = FractionElement::conjugated_unit(t, tree, Unit::Rot(Rotation::new(n, 1))).unwrap();
            assert_eq!(r.order(10).unwrap(), Some(n));
        }
    }

    #[test]
    fn braided_examples() {
        let bv = fam(FamilyKind::BV);
        let s = FractionElement::new(bv, f("F(1;1)"), Unit::Braid(BraidWord::new(2, vec![1]).unwrap()), f("F(1;1)")).unwrap();
        let si = FractionElement::new(bv, f("F(1;1)"), Unit::Braid(BraidWord::new(2, vec![-1]).unwrap()), f("F(1;1)")).unwrap();
        assert!(!s.eq(&si).unwrap());
        assert_eq!(s.inv().unit, Unit::Braid(BraidWord::new(2, vec![-1]).unwrap()));
        assert!(s.mul(&si).unwrap().is_identity().unwrap());
        let p = s.project_to_v().unwrap();
        assert_eq!(p.unit, Unit::Perm(Permutation::adjacent(1, 2)));
        assert_eq!(s.order(6).unwrap(), None);
    }

    #[test]
    fn identity_reduces_to_trivial() {
        let v = fam(FamilyKind::V);
        let e = FractionElement::identity(v, 1).expand(&f("F(1;1,1,3)")).unwrap();
        assert_eq!(e.reduce(), FractionElement::identity(v, 1));
    }

    #[test]
    fn json_round_trip() {
        let bv = fam(FamilyKind::BV);
        let s = FractionElement::new(bv, f("F(1;1)"), Unit::Braid(BraidWord::new(2, vec![1]).unwrap()), f("F(1;1)")).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert!(j.starts_with(r#"{"family":"BV","base":1"#));
        let back: FractionElement = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn higman_thompson_base() {
        let v3 = Family::new(FamilyKind::V, 3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        use rand::SeedableRng;
        let x = FractionElement::random(v3, 2, 6, 0, &mut rng).unwrap();
        assert!(x.mul(&x.inv()).unwrap().is_identity().unwrap());
        assert!(FractionElement::random(v3, 2, 5, 0, &mut rng).is_err());
    }
}
