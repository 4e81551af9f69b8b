//! Descending links and sublevel complexes of the forest groupoid.
//!
//! Vertices of the ambient complex are fractions `a = n∘d⁻¹` of forests with
//! a single root on top; `a ≤ a'` when `a⁻¹a'` is a forest.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::simplicial::{Simplex, SimplicialComplex};
use crate::error::{OreError, Result};
use crate::forest::{enumerate_elementary, Forest, Tree};

/// A groupoid fraction `num ∘ den⁻¹` of forests with equal leaf counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OreFraction {
    num: Forest,
    den: Forest,
}

impl OreFraction {
    pub fn new(num: Forest, den: Forest) -> Result<Self> {
        if num.arity() != den.arity() {
            return Err(OreError::ArityMismatch {
                left: num.arity(),
                right: den.arity(),
            });
        }
        if num.leaves() != den.leaves() {
            return Err(OreError::BoundaryMismatch {
                context: "fraction leaves",
                expected: num.leaves(),
                found: den.leaves(),
            });
        }
        Ok(OreFraction { num, den }.reduced())
    }

    /// A positive element `f`, as `f∘1⁻¹`.
    pub fn positive(f: Forest) -> Self {
        let id = Forest::identity(f.leaves(), f.arity());
        OreFraction { num: f, den: id }
    }

    pub fn num(&self) -> &Forest {
        &self.num
    }

    pub fn den(&self) -> &Forest {
        &self.den
    }

    /// Cancels common bottom carets; the result is the unique reduced form.
    fn reduced(mut self) -> Self {
        let d = self.num.arity();
        'outer: loop {
            let leaves = self.num.leaves();
            if leaves < d {
                break;
            }
            for i in 1..=leaves + 1 - d {
                let c = Forest::caret(i, leaves + 1 - d, d).expect("caret in range");
                if let (Ok(a), Ok(b)) = (self.num.right_quotient(&c), self.den.right_quotient(&c)) {
                    self.num = a;
                    self.den = b;
                    continue 'outer;
                }
            }
            break;
        }
        self
    }

    /// `self⁻¹ ∘ other` when it is a forest.
    pub fn quotient_if_positive(&self, other: &OreFraction) -> Result<Option<Forest>> {
        // (n1 d1⁻¹)⁻¹ n2 d2⁻¹ = d1 s (d2 t)⁻¹ with n1 s = n2 t = lcm(n1, n2)
        let l = self.num.lcm(&other.num)?;
        let s = self.num.left_quotient(&l)?;
        let t = other.num.left_quotient(&l)?;
        let x = self.den.compose(&s)?;
        let y = other.den.compose(&t)?;
        Ok(x.right_quotient(&y).ok())
    }
}

impl fmt::Display for OreFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_identity() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}·{}⁻¹", self.num, self.den)
        }
    }
}

/// Order complex of a finite poset given by its strict relation.
pub fn order_complex(labels: Vec<String>, less: &BTreeSet<(u32, u32)>) -> SimplicialComplex {
    let n = labels.len();
    let mut up: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut has_below = vec![false; n];
    for &(a, b) in less {
        up[a as usize].push(b);
        has_below[b as usize] = true;
    }
    // covers generate the maximal chains
    let covers: Vec<Vec<u32>> = (0..n)
        .map(|a| {
            up[a]
                .iter()
                .copied()
                .filter(|&b| !up[a].iter().any(|&c| less.contains(&(c, b))))
                .collect()
        })
        .collect();
    let mut facets = Vec::new();
    fn walk(v: u32, covers: &[Vec<u32>], chain: &mut Vec<u32>, out: &mut Vec<Simplex>) {
        chain.push(v);
        if covers[v as usize].is_empty() {
            let mut s = chain.clone();
            s.sort_unstable();
            out.push(s);
        }
        for &w in &covers[v as usize] {
            walk(w, covers, chain, out);
        }
        chain.pop();
    }
    for v in 0..n as u32 {
        if !has_below[v as usize] {
            walk(v, &covers, &mut Vec::new(), &mut facets);
        }
    }
    SimplicialComplex::from_simplices(labels, facets).expect("indices in range")
}

/// The descending link of a tree `b`: the poset of `b∘e⁻¹` over non-identity
/// elementary forests `e` with `b`'s leaf count, with its order complex.
#[derive(Clone, Debug)]
pub struct DescendingLink {
    pub tree: Forest,
    pub vertices: Vec<OreFraction>,
    /// The elementary forest behind each vertex.
    pub elementary: Vec<Forest>,
    pub less: BTreeSet<(u32, u32)>,
    pub complex: SimplicialComplex,
}

pub fn descending_link(b: &Forest) -> Result<DescendingLink> {
    if b.roots() != 1 {
        return Err(OreError::BoundaryMismatch {
            context: "descending link of a tree",
            expected: 1,
            found: b.roots(),
        });
    }
    let elementary: Vec<Forest> = enumerate_elementary(b.leaves(), b.arity())
        .into_iter()
        .filter(|e| !e.is_identity())
        .collect();
    let vertices: Vec<OreFraction> = elementary
        .iter()
        .map(|e| OreFraction::new(b.clone(), e.clone()))
        .collect::<Result<_>>()?;
    let distinct: BTreeSet<&OreFraction> = vertices.iter().collect();
    if distinct.len() != vertices.len() {
        return Err(OreError::Graph("descending link vertices collide".into()));
    }
    let mut less = BTreeSet::new();
    for (i, x) in vertices.iter().enumerate() {
        for (j, y) in vertices.iter().enumerate() {
            if i != j {
                if let Some(q) = x.quotient_if_positive(y)? {
                    if !q.is_identity() {
                        less.insert((i as u32, j as u32));
                    }
                }
            }
        }
    }
    let labels = vertices.iter().map(|v| v.to_string()).collect();
    let complex = order_complex(labels, &less);
    Ok(DescendingLink {
        tree: b.clone(),
        vertices,
        elementary,
        less,
        complex,
    })
}

/// Trees with fewer than `n_max` leaves, with simplices the chains
/// `t_0 < ... < t_k` for which `t_0⁻¹ t_k` is elementary.
pub fn positive_sublevel_complex(n_max: usize, arity: usize) -> Result<SimplicialComplex> {
    let mut trees: Vec<Forest> = Vec::new();
    for leaves in 1..n_max {
        for t in Tree::all_with_leaves(leaves, arity) {
            trees.push(Forest::from_tree(arity, t)?);
        }
    }
    let index: HashMap<&Forest, u32> = trees.iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
    let mut simplices: Vec<Simplex> = Vec::new();
    for (i, t0) in trees.iter().enumerate() {
        let l = t0.leaves();
        let room = (n_max - 1 - l) / (arity - 1);
        let m = room.min(l);
        if m == 0 {
            simplices.push(vec![i as u32]);
            continue;
        }
        // orderings of m distinct roots of the elementary factor
        let mut seq = Vec::new();
        orderings(l, m, &mut seq, &mut |order: &[usize]| {
            let mut chosen = vec![false; l];
            let mut s = vec![i as u32];
            for &r in order {
                chosen[r] = true;
                let e = Forest::from_trees(
                    arity,
                    chosen
                        .iter()
                        .map(|&c| if c { Tree::Node(vec![Tree::Leaf; arity]) } else { Tree::Leaf })
                        .collect(),
                )
                .expect("elementary forest");
                let t = t0.compose(&e).expect("leaves match roots");
                s.push(index[&t]);
            }
            s.sort_unstable();
            simplices.push(s);
        });
    }
    let labels = trees.iter().map(|t| t.to_string()).collect();
    SimplicialComplex::from_simplices(labels, simplices)
}

fn orderings(l: usize, m: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == m {
        f(cur);
        return;
    }
    for r in 0..l {
        if !cur.contains(&r) {
            cur.push(r);
            orderings(l, m, cur, f);
            cur.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::homology::reduced_homology;

    #[test]
    fn single_caret_link_is_a_point() {
        let b = Forest::caret(1, 1, 2).unwrap();
        let dl = descending_link(&b).unwrap();
        assert_eq!(dl.complex.vertex_count(), 1);
    }

    #[test]
    fn sublevel_n3() {
        let x = positive_sublevel_complex(3, 2).unwrap();
        assert_eq!(x.vertex_count(), 2);
        assert_eq!(x.facets(), &[vec![0, 1]]);
    }

    #[test]
    fn sublevel_is_contractible() {
        let x = positive_sublevel_complex(6, 2).unwrap();
        assert_eq!(x.vertex_count(), 23);
        let h = reduced_homology(&x, 3).unwrap();
        assert!(h.iter().all(|g| g.is_zero()));
    }

    #[test]
    fn fraction_reduction() {
        let t = Forest::from_tree(2, Tree::right_comb(3, 2)).unwrap();
        let c = Forest::caret(2, 2, 2).unwrap();
        let a = OreFraction::new(t, c).unwrap();
        assert_eq!(a, OreFraction::positive(Forest::caret(1, 1, 2).unwrap()));
    }
}
