//! Complexes of elementary morphisms.
//!
//! For a family with finite unit groups, `E(n)` is the set of non-unit
//! elementary morphisms `f∘u` with source `n`, modulo left multiplication by
//! units, ordered by left divisibility. Its atoms are the classes of single
//! carets; a class spans the simplex of atoms below it.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::simplicial::{matching_complex, SimpleGraph, Simplex, SimplicialComplex};
use crate::error::{OreError, Result};
use crate::forest::{enumerate_elementary, Forest};
use crate::zs::{act, CloningSystem, Family, FamilyKind, Unit};

/// Elements of `E(n)` are indexed by (forest index, unit index).
type Key = (u32, u32);

/// The coarse complex of `E(n)` together with the atom orbits.
#[derive(Clone, Debug)]
pub struct EComplex {
    pub family: Family,
    pub n: usize,
    /// Units of degree `n`, in enumeration order.
    pub units: Vec<Unit>,
    /// Atom representatives `(i, unit index)`: the caret `λ_i` at leaves
    /// `i..i+d-1` followed by the unit. Each is the least member of its orbit.
    pub atoms: Vec<(usize, u32)>,
    /// Atom id of every single-caret element.
    pub atom_of: HashMap<(usize, u32), u32>,
    pub complex: SimplicialComplex,
}

/// The full poset `E(n)`: classes, ranks (caret counts), strict order.
#[derive(Clone, Debug)]
pub struct EPoset {
    pub classes: usize,
    pub rank: Vec<usize>,
    pub less: BTreeSet<(u32, u32)>,
    /// Atoms below each class, as atom ids of the coarse complex.
    pub atoms_below: Vec<Simplex>,
}

fn check_family(family: &Family) -> Result<()> {
    if family.kind.is_braided() {
        return Err(OreError::FamilyViolation {
            family: family.to_string(),
            detail: "E(n) needs a finite unit group (F, T or V)".into(),
        });
    }
    Ok(())
}

/// Leaf offsets (1-based) at which an elementary forest has a caret.
fn caret_positions(f: &Forest) -> Vec<usize> {
    let mut out = Vec::new();
    let mut pos = 1;
    for s in f.tree_sizes() {
        if s > 1 {
            out.push(pos);
        }
        pos += s;
    }
    out
}

/// The elementary forest on `n` leaves with carets at the given leaf offsets.
fn forest_with_carets(n: usize, arity: usize, carets: &[usize]) -> Forest {
    use crate::forest::Tree;
    let mut trees = Vec::new();
    let mut pos = 1;
    let mut it = carets.iter().peekable();
    while pos <= n {
        if it.peek() == Some(&&pos) {
            it.next();
            trees.push(Tree::Node(vec![Tree::Leaf; arity]));
            pos += arity;
        } else {
            trees.push(Tree::Leaf);
            pos += 1;
        }
    }
    Forest::from_trees(arity, trees).expect("elementary forest")
}

struct Ctx<'a> {
    family: &'a Family,
    forests: Vec<Forest>,
    forest_idx: HashMap<(usize, Vec<usize>), u32>,
    units: Vec<Unit>,
    unit_idx: HashMap<Vec<usize>, u32>,
}

impl<'a> Ctx<'a> {
    fn new(family: &'a Family, n: usize) -> Self {
        let forests: Vec<Forest> = enumerate_elementary(n, family.arity)
            .into_iter()
            .filter(|f| !f.is_identity())
            .collect();
        let forest_idx = forests
            .iter()
            .enumerate()
            .map(|(i, f)| ((f.roots(), f.word().to_vec()), i as u32))
            .collect();
        let units = family.sample_elements(n, 0);
        let unit_idx = units
            .iter()
            .enumerate()
            .map(|(i, u)| (u.permutation().images().to_vec(), i as u32))
            .collect();
        Ctx {
            family,
            forests,
            forest_idx,
            units,
            unit_idx,
        }
    }

    fn unit_index(&self, u: &Unit) -> u32 {
        self.unit_idx[u.permutation().images()]
    }

    /// `h·(f∘u) = (h·f)∘(h^f∘u)`.
    fn left_act(&self, h: &Unit, f: &Forest, u: u32) -> Result<(Forest, u32)> {
        let (hf, cloned) = act(self.family, h, f)?;
        let nu = self.family.mul(&cloned, &self.units[u as usize])?;
        Ok((hf, self.unit_index(&nu)))
    }

    /// Orbit ids for all elements with the given forests, by breadth-first
    /// search under the unit generators at each root count.
    fn orbits(&self, forests: &[u32]) -> Result<(HashMap<Key, u32>, Vec<Key>)> {
        let mut id: HashMap<Key, u32> = HashMap::new();
        let mut reps = Vec::new();
        let mut gens_cache: HashMap<usize, Vec<Unit>> = HashMap::new();
        for &fi in forests {
            for ui in 0..self.units.len() as u32 {
                if id.contains_key(&(fi, ui)) {
                    continue;
                }
                let cls = reps.len() as u32;
                reps.push((fi, ui));
                id.insert((fi, ui), cls);
                let mut stack = vec![(fi, ui)];
                while let Some((f, u)) = stack.pop() {
                    let forest = &self.forests[f as usize];
                    let gens = gens_cache
                        .entry(forest.roots())
                        .or_insert_with(|| self.family.generators(forest.roots()));
                    for h in gens.iter() {
                        let (hf, nu) = self.left_act(h, forest, u)?;
                        let key = (self.forest_idx[&(hf.roots(), hf.word().to_vec())], nu);
                        if let std::collections::hash_map::Entry::Vacant(e) = id.entry(key) {
                            e.insert(cls);
                            stack.push(key);
                        }
                    }
                }
            }
        }
        Ok((id, reps))
    }
}

fn atom_label(family: &Family, i: usize, u: &Unit) -> String {
    match family.kind {
        FamilyKind::F => format!("λ{i}"),
        _ => format!("λ{i}·{u}"),
    }
}

/// Builds the coarse complex of `E(n)` for the families F, T and V.
pub fn build_e(family: Family, n: usize) -> Result<EComplex> {
    check_family(&family)?;
    if n == 0 {
        return Err(OreError::BoundaryMismatch { context: "E(n) source", expected: 1, found: 0 });
    }
    let d = family.arity;
    let ctx = Ctx::new(&family, n);
    let single: Vec<u32> = ctx
        .forests
        .iter()
        .enumerate()
        .filter(|(_, f)| f.caret_count() == 1)
        .map(|(i, _)| i as u32)
        .collect();
    let (orbit, reps) = ctx.orbits(&single)?;
    let mut atom_of = HashMap::new();
    for (&(f, u), &a) in &orbit {
        atom_of.insert((caret_positions(&ctx.forests[f as usize])[0], u), a);
    }
    let atoms: Vec<(usize, u32)> = reps
        .iter()
        .map(|&(f, u)| (caret_positions(&ctx.forests[f as usize])[0], u))
        .collect();
    let labels = atoms
        .iter()
        .map(|&(i, u)| atom_label(&family, i, &ctx.units[u as usize]))
        .collect();
    // simplices of the maximal elementary forests suffice
    let mut simplices = Vec::new();
    for f in &ctx.forests {
        let pos = caret_positions(f);
        let maximal = (1..=n + 1 - d).all(|p| {
            pos.iter().any(|&c| p + d > c && p < c + d)
        });
        if !maximal {
            continue;
        }
        for u in 0..ctx.units.len() as u32 {
            simplices.push(pos.iter().map(|&i| atom_of[&(i, u)]).collect());
        }
    }
    let complex = SimplicialComplex::from_simplices(labels, simplices)?;
    Ok(EComplex {
        family,
        n,
        units: ctx.units,
        atoms,
        atom_of,
        complex,
    })
}

impl EComplex {
    /// The full poset of classes, for checks against the coarse complex.
    pub fn poset(&self) -> Result<EPoset> {
        let ctx = Ctx::new(&self.family, self.n);
        let all: Vec<u32> = (0..ctx.forests.len() as u32).collect();
        let (orbit, reps) = ctx.orbits(&all)?;
        let mut less = BTreeSet::new();
        for (&(f, u), &b) in &orbit {
            let pos = caret_positions(&ctx.forests[f as usize]);
            for mask in 1..(1u32 << pos.len()) {
                let sub: Vec<usize> = pos
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let g = forest_with_carets(self.n, self.family.arity, &sub);
                let a = orbit[&(ctx.forest_idx[&(g.roots(), g.word().to_vec())], u)];
                if a != b {
                    less.insert((a, b));
                }
            }
        }
        let rank = reps
            .iter()
            .map(|&(f, _)| ctx.forests[f as usize].caret_count())
            .collect();
        let atoms_below = reps
            .iter()
            .map(|&(f, u)| {
                let mut s: Simplex = caret_positions(&ctx.forests[f as usize])
                    .into_iter()
                    .map(|i| self.atom_of[&(i, u)])
                    .collect();
                s.sort_unstable();
                s
            })
            .collect();
        Ok(EPoset {
            classes: reps.len(),
            rank,
            less,
            atoms_below,
        })
    }
}

impl EPoset {
    /// Number of nonempty strict chains.
    pub fn chain_count(&self) -> u128 {
        let mut order: Vec<usize> = (0..self.classes).collect();
        order.sort_by_key(|&c| self.rank[c]);
        let mut below: Vec<Vec<u32>> = vec![Vec::new(); self.classes];
        for &(a, b) in &self.less {
            below[b as usize].push(a);
        }
        let mut ending = vec![0u128; self.classes];
        for &c in &order {
            ending[c] = 1 + below[c].iter().map(|&a| ending[a as usize]).sum::<u128>();
        }
        ending.iter().sum()
    }

    /// Whether classes correspond bijectively to simplices of `x` with the
    /// order given by inclusion of atom sets.
    pub fn is_face_poset_of(&self, x: &SimplicialComplex) -> Result<bool> {
        let simplices: BTreeSet<Simplex> = x.simplices_by_dim()?.into_iter().flatten().collect();
        let images: BTreeSet<Simplex> = self.atoms_below.iter().cloned().collect();
        if images.len() != self.classes || images != simplices {
            return Ok(false);
        }
        for a in 0..self.classes {
            for b in 0..self.classes {
                if a == b {
                    continue;
                }
                let sub = self.atoms_below[a]
                    .iter()
                    .all(|v| self.atoms_below[b].binary_search(v).is_ok());
                if sub != self.less.contains(&(a as u32, b as u32)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Order complex of the poset, vertices labelled by class index.
    pub fn order_complex(&self) -> SimplicialComplex {
        super::morse::order_complex(
            (0..self.classes).map(|c| c.to_string()).collect(),
            &self.less,
        )
    }
}

/// Over a simplex of the matching complex: the preimage and its shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    /// Edges of the base simplex, as `(i, j)`.
    pub simplex: Vec<(usize, usize)>,
    pub preimage_vertices: usize,
    pub top_simplices: usize,
    /// The fiber is the join of one two-point set per edge.
    pub is_join: bool,
}

/// The vertex map from `E(n)` to the matching complex of the underlying graph.
#[derive(Clone, Debug)]
pub struct MatchingMap {
    pub graph: SimpleGraph,
    pub target: SimplicialComplex,
    /// Edge index of each atom.
    pub vertex_map: Vec<usize>,
    pub simplicial: bool,
    pub surjective: bool,
    pub isomorphism: bool,
    pub fibers: Vec<FiberReport>,
}

impl MatchingMap {
    pub fn all_fibers_joins(&self) -> bool {
        self.fibers.iter().all(|f| f.is_join)
    }
}

/// Maps each atom `λ_i∘u` to the edge `{u⁻¹(i), u⁻¹(i+1)}`: the linear graph
/// for F, the cycle for T and the complete graph for V. Fibers are computed
/// for V only.
pub fn e_to_matching_map(e: &EComplex) -> Result<MatchingMap> {
    if e.family.arity != 2 {
        return Err(OreError::FamilyViolation {
            family: e.family.to_string(),
            detail: "matching maps need binary carets".into(),
        });
    }
    let n = e.n;
    let graph = match e.family.kind {
        FamilyKind::F => SimpleGraph::linear(n),
        FamilyKind::T => SimpleGraph::cycle(n),
        _ => SimpleGraph::complete(n),
    };
    let target = matching_complex(&graph);
    let edge_of = |i: usize, u: u32| -> Result<usize> {
        let inv = e.units[u as usize].permutation().inverse();
        let (a, b) = (inv.apply(i), inv.apply(i + 1));
        graph
            .edge_index(a, b)
            .ok_or_else(|| OreError::MissingEdge(format!("{a}-{b}")))
    };
    let mut vertex_map = vec![usize::MAX; e.atoms.len()];
    for (&(i, u), &a) in &e.atom_of {
        let edge = edge_of(i, u)?;
        let slot = &mut vertex_map[a as usize];
        if *slot != usize::MAX && *slot != edge {
            return Err(OreError::Graph(format!(
                "atom {} is not mapped consistently",
                e.complex.vertices()[a as usize]
            )));
        }
        *slot = edge;
    }
    let image = |s: &Simplex| -> Simplex {
        let mut t: Simplex = s.iter().map(|&v| vertex_map[v as usize] as u32).collect();
        t.sort_unstable();
        t
    };
    let simplicial = e.complex.facets().iter().all(|s| {
        let t = image(s);
        let mut t2 = t.clone();
        t2.dedup();
        t2.len() == t.len() && target.contains(&t)
    });
    let images: BTreeSet<Simplex> = e.complex.facets().iter().map(image).collect();
    let surjective = target.facets().iter().all(|f| images.contains(f));
    let injective_vertices = vertex_map.iter().collect::<BTreeSet<_>>().len() == vertex_map.len()
        && vertex_map.len() == graph.edges.len();
    let isomorphism = simplicial
        && injective_vertices
        && images == target.facets().iter().cloned().collect::<BTreeSet<_>>();
    let mut fibers = Vec::new();
    if e.family.kind == FamilyKind::V && simplicial {
        for level in target.simplices_by_dim()? {
            for tau in level {
                let verts: Vec<u32> = (0..vertex_map.len() as u32)
                    .filter(|&v| tau.contains(&(vertex_map[v as usize] as u32)))
                    .collect();
                let fiber = e.complex.induced(&verts);
                let top = fiber
                    .facets()
                    .iter()
                    .filter(|s| s.len() == tau.len())
                    .count();
                // join of two-point sets: two preimages per edge, and the
                // facets are exactly the transversals
                let mut per_edge: HashMap<usize, usize> = HashMap::new();
                for &v in &verts {
                    *per_edge.entry(vertex_map[v as usize]).or_default() += 1;
                }
                let is_join = per_edge.len() == tau.len()
                    && per_edge.values().all(|&c| c == 2)
                    && fiber.facets().len() == 1 << tau.len()
                    && fiber.facets().iter().all(|s| {
                        s.len() == tau.len()
                            && s.iter()
                                .map(|&v| vertex_map[verts[v as usize] as usize])
                                .collect::<BTreeSet<_>>()
                                .len()
                                == tau.len()
                    });
                fibers.push(FiberReport {
                    simplex: tau.iter().map(|&t| graph.edges[t as usize]).collect(),
                    preimage_vertices: verts.len(),
                    top_simplices: top,
                    is_join,
                });
            }
        }
    }
    Ok(MatchingMap {
        graph,
        target,
        vertex_map,
        simplicial,
        surjective,
        isomorphism,
        fibers,
    })
}
