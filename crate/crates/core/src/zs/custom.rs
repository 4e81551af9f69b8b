//! User-supplied cloning systems and a deliberately broken one for negative
//! controls.

use std::fmt;

use crate::error::{OreError, Result};
use crate::units::Permutation;
use crate::zs::family::{v_clone, v_uncloned};
use crate::zs::CloningSystem;

type Op<A, R> = Box<dyn Fn(A) -> R + Send + Sync>;

/// A cloning system assembled from closures: groups `G_n`, morphisms
/// `ρ_n: G_n → S_n` and cloning maps `κ_k^n: G_n → G_{n+1}`.
pub struct FnCloningSystem<E> {
    pub name: String,
    pub identity: Op<usize, E>,
    degree_fn: Box<dyn Fn(&E) -> usize + Send + Sync>,
    mul_fn: Box<dyn Fn(&E, &E) -> E + Send + Sync>,
    inverse_fn: Box<dyn Fn(&E) -> E + Send + Sync>,
    rho_fn: Box<dyn Fn(&E) -> Permutation + Send + Sync>,
    clone_fn: Box<dyn Fn(&E, usize) -> E + Send + Sync>,
    elements_fn: Box<dyn Fn(usize) -> Vec<E> + Send + Sync>,
}

impl<E: Clone + PartialEq + fmt::Debug + Send + Sync + 'static> FnCloningSystem<E> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        identity: impl Fn(usize) -> E + Send + Sync + 'static,
        degree: impl Fn(&E) -> usize + Send + Sync + 'static,
        mul: impl Fn(&E, &E) -> E + Send + Sync + 'static,
        inverse: impl Fn(&E) -> E + Send + Sync + 'static,
        rho: impl Fn(&E) -> Permutation + Send + Sync + 'static,
        clone: impl Fn(&E, usize) -> E + Send + Sync + 'static,
        elements: impl Fn(usize) -> Vec<E> + Send + Sync + 'static,
    ) -> Self {
        FnCloningSystem {
            name: name.into(),
            identity: Box::new(identity),
            degree_fn: Box::new(degree),
            mul_fn: Box::new(mul),
            inverse_fn: Box::new(inverse),
            rho_fn: Box::new(rho),
            clone_fn: Box::new(clone),
            elements_fn: Box::new(elements),
        }
    }
}

impl<E: Clone + PartialEq + fmt::Debug + Send + Sync + 'static> CloningSystem for FnCloningSystem<E> {
    type Elem = E;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn identity(&self, n: usize) -> E {
        (self.identity)(n)
    }

    fn degree(&self, g: &E) -> usize {
        (self.degree_fn)(g)
    }

    fn mul(&self, a: &E, b: &E) -> Result<E> {
        let (m, n) = (self.degree(a), self.degree(b));
        if m != n {
            return Err(OreError::DegreeMismatch {
                expected: m,
                found: n,
            });
        }
        Ok((self.mul_fn)(a, b))
    }

    fn inverse(&self, g: &E) -> E {
        (self.inverse_fn)(g)
    }

    fn equal(&self, a: &E, b: &E) -> bool {
        a == b
    }

    fn rho(&self, g: &E) -> Permutation {
        (self.rho_fn)(g)
    }

    fn clone_at(&self, g: &E, k: usize) -> Result<E> {
        let n = self.degree(g);
        if k == 0 || k > n {
            return Err(OreError::IndexOutOfRange {
                step: 1,
                index: k,
                max: n,
            });
        }
        Ok((self.clone_fn)(g, k))
    }

    /// Searches `G_{n−1}` for a preimage.
    fn uncloned(&self, g: &E, k: usize) -> Result<E> {
        let n = self.degree(g);
        if n < 2 || k >= n {
            return Err(OreError::NotInImage(k));
        }
        (self.elements_fn)(n - 1)
            .into_iter()
            .find(|h| (self.clone_fn)(h, k) == *g)
            .ok_or(OreError::NotInImage(k))
    }

    fn elements(&self, n: usize) -> Vec<E> {
        (self.elements_fn)(n)
    }

    fn encode(&self, g: &E) -> String {
        format!("{g:?}")
    }
}

/// The permutation cloning maps with the two daughter strands of the split
/// leaf exchanged, `j = i ↦ g(i)+1` and `j = i+1 ↦ g(i)`. Still a bijection,
/// but not an indirect product action.
#[derive(Clone, Copy, Debug, Default)]
pub struct CorruptedV;

impl CloningSystem for CorruptedV {
    type Elem = Permutation;

    fn name(&self) -> String {
        "V (corrupted)".into()
    }

    fn identity(&self, n: usize) -> Permutation {
        Permutation::identity(n)
    }

    fn degree(&self, g: &Permutation) -> usize {
        g.degree()
    }

    fn mul(&self, a: &Permutation, b: &Permutation) -> Result<Permutation> {
        a.compose(b)
    }

    fn inverse(&self, g: &Permutation) -> Permutation {
        g.inverse()
    }

    fn equal(&self, a: &Permutation, b: &Permutation) -> bool {
        a == b
    }

    fn rho(&self, g: &Permutation) -> Permutation {
        g.clone()
    }

    fn clone_at(&self, g: &Permutation, k: usize) -> Result<Permutation> {
        let c = v_clone(g, k, 2);
        let mut img = c.images().to_vec();
        img.swap(k - 1, k);
        Permutation::new(img)
    }

    fn uncloned(&self, g: &Permutation, k: usize) -> Result<Permutation> {
        if k == 0 || k >= g.degree() {
            return Err(OreError::NotInImage(k));
        }
        let mut img = g.images().to_vec();
        img.swap(k - 1, k);
        v_uncloned(&Permutation::new(img)?, k, 2)
    }

    fn elements(&self, n: usize) -> Vec<Permutation> {
        Permutation::all(n)
    }

    fn encode(&self, g: &Permutation) -> String {
        g.to_string()
    }
}
