//! Indirect (Zappa–Szép) products `F ⋈ G` of the forest category with a
//! groupoid of units.
//!
//! A [`CloningSystem`] supplies the generator-level data: how a unit moves a
//! caret (`g·λ_k = λ_{ρ(g)k}`) and how a caret clones a unit (`g^{λ_k}`).
//! Both actions extend to arbitrary forests along caret words.

pub mod checks;
pub mod custom;
pub mod family;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};
use crate::forest::{normal_form, Forest};
use crate::units::Permutation;

pub use checks::{
    check_bv_relations, check_injectivity, check_ip_axioms, check_pi_equivariance,
    pi_equivariance_exhaustive, pi_equivariance_random, validate_cloning_system, AxiomRecord,
    CheckReport,
};
pub use custom::{CorruptedV, FnCloningSystem};
pub use family::{Family, FamilyKind, Unit};

/// Generator-level action data for an indirect product `F_d ⋈ G`.
pub trait CloningSystem: Sync {
    type Elem: Clone + fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    fn arity(&self) -> usize {
        2
    }
    fn identity(&self, n: usize) -> Self::Elem;
    fn degree(&self, g: &Self::Elem) -> usize;
    /// `a ∘ b`; `b` acts first.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn inverse(&self, g: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    /// The permutation `ρ(g)` through which `g` moves carets.
    fn rho(&self, g: &Self::Elem) -> Permutation;
    /// `g^{λ_k}`, a unit of degree `n + d − 1`.
    fn clone_at(&self, g: &Self::Elem, k: usize) -> Result<Self::Elem>;
    /// The `h` with `h^{λ_k} = g`.
    fn uncloned(&self, g: &Self::Elem, k: usize) -> Result<Self::Elem>;
    /// Units of degree `n` enumerated by exhaustive checks.
    fn elements(&self, n: usize) -> Vec<Self::Elem>;
    fn encode(&self, g: &Self::Elem) -> String;
}

/// Acts with `g` on a raw caret word at `g`'s degree. Returns the moved word
/// and `g` cloned along the whole word.
pub fn act_word<C: CloningSystem + ?Sized>(
    cs: &C,
    g: &C::Elem,
    word: &[usize],
) -> Result<(Vec<usize>, C::Elem)> {
    let mut g = g.clone();
    let mut out = Vec::with_capacity(word.len());
    for (step, &i) in word.iter().enumerate() {
        let n = cs.degree(&g);
        if i == 0 || i > n {
            return Err(OreError::IndexOutOfRange {
                step: step + 1,
                index: i,
                max: n,
            });
        }
        out.push(cs.rho(&g).apply(i));
        g = cs.clone_at(&g, i)?;
    }
    Ok((out, g))
}

fn check_source<C: CloningSystem + ?Sized>(cs: &C, g: &C::Elem, f: &Forest) -> Result<()> {
    if f.arity() != cs.arity() {
        return Err(OreError::ArityMismatch {
            left: cs.arity(),
            right: f.arity(),
        });
    }
    if cs.degree(g) != f.roots() {
        return Err(OreError::DegreeMismatch {
            expected: f.roots(),
            found: cs.degree(g),
        });
    }
    Ok(())
}

/// `(g·f, g^f)`.
pub fn act<C: CloningSystem + ?Sized>(cs: &C, g: &C::Elem, f: &Forest) -> Result<(Forest, C::Elem)> {
    check_source(cs, g, f)?;
    let (word, gf) = act_word(cs, g, f.word())?;
    Ok((normal_form(&word, f.roots(), f.arity())?, gf))
}

/// `g·f`: same root and leaf counts as `f`.
pub fn act_unit_on_forest<C: CloningSystem + ?Sized>(cs: &C, g: &C::Elem, f: &Forest) -> Result<Forest> {
    act(cs, g, f).map(|x| x.0)
}

/// `g^f`: a unit at the leaf count of `f`.
pub fn act_forest_on_unit<C: CloningSystem + ?Sized>(
    cs: &C,
    g: &C::Elem,
    f: &Forest,
) -> Result<C::Elem> {
    act(cs, g, f).map(|x| x.1)
}

/// `g^f` with `f` a forest over `f.leaves()`; inverse of [`act_forest_on_unit`].
pub fn unclone_along<C: CloningSystem + ?Sized>(cs: &C, g: &C::Elem, f: &Forest) -> Result<C::Elem> {
    let mut g = g.clone();
    for &i in f.word().iter().rev() {
        g = cs.uncloned(&g, i)?;
    }
    Ok(g)
}

/// A morphism `(f, g)` of `F ⋈ G`, denoting `f∘g` with `g` nearest the source.
/// The unit degree equals the leaf count of `f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndirectMorphism<E> {
    pub forest: Forest,
    pub unit: E,
}

impl<E: fmt::Display> fmt::Display for IndirectMorphism<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.forest, self.unit)
    }
}

impl<E: Clone> IndirectMorphism<E> {
    pub fn new<C: CloningSystem<Elem = E> + ?Sized>(cs: &C, forest: Forest, unit: E) -> Result<Self> {
        if cs.degree(&unit) != forest.leaves() {
            return Err(OreError::DegreeMismatch {
                expected: forest.leaves(),
                found: cs.degree(&unit),
            });
        }
        Ok(IndirectMorphism { forest, unit })
    }

    pub fn identity<C: CloningSystem<Elem = E> + ?Sized>(cs: &C, n: usize) -> Self {
        IndirectMorphism {
            forest: Forest::identity(n, cs.arity()),
            unit: cs.identity(n),
        }
    }

    pub fn roots(&self) -> usize {
        self.forest.roots()
    }

    pub fn leaves(&self) -> usize {
        self.forest.leaves()
    }
}

/// `(f1, g1)(f2, g2) = (f1 (g1·f2), g1^{f2} g2)`.
pub fn zs_compose<C: CloningSystem + ?Sized>(
    cs: &C,
    a: &IndirectMorphism<C::Elem>,
    b: &IndirectMorphism<C::Elem>,
) -> Result<IndirectMorphism<C::Elem>> {
    if cs.degree(&a.unit) != b.forest.roots() {
        return Err(OreError::BoundaryMismatch {
            context: "zs_compose",
            expected: cs.degree(&a.unit),
            found: b.forest.roots(),
        });
    }
    let (moved, cloned) = act(cs, &a.unit, &b.forest)?;
    Ok(IndirectMorphism {
        forest: a.forest.compose(&moved)?,
        unit: cs.mul(&cloned, &b.unit)?,
    })
}

/// Equality of indirect morphisms, deciding unit equality in the groupoid.
pub fn zs_eq<C: CloningSystem + ?Sized>(
    cs: &C,
    a: &IndirectMorphism<C::Elem>,
    b: &IndirectMorphism<C::Elem>,
) -> bool {
    a.forest == b.forest && cs.degree(&a.unit) == cs.degree(&b.unit) && cs.equal(&a.unit, &b.unit)
}

/// Checks family membership, then composes.
pub fn family_compose(
    fam: &Family,
    a: &IndirectMorphism<Unit>,
    b: &IndirectMorphism<Unit>,
) -> Result<IndirectMorphism<Unit>> {
    fam.check(&a.unit)?;
    fam.check(&b.unit)?;
    zs_compose(fam, a, b)
}
