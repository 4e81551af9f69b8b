//! The forest categories `F_d`.
//!
//! Objects are positive integers (root or leaf counts). A morphism with `m`
//! roots and `n` leaves is a forest of `m` rooted ordered `d`-ary trees. Every
//! forest is a unique product of caret generators `λ_i` whose indices are
//! non-decreasing; that caret word is the canonical representation stored in
//! [`Forest`], so equality of forests is equality of words.
//!
//! Composition `f·g` grafts the trees of `g` onto the leaves of `f`. Least
//! common right-multiples and greatest common left-factors are unions and
//! intersections of caret sets inside the infinite `d`-ary forest on `m`
//! roots.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};

/// A rooted ordered tree: a leaf or a caret with `arity` children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Vec<Tree>),
}

impl Tree {
    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(ch) => ch.iter().map(Tree::leaves).sum(),
        }
    }

    pub fn carets(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(ch) => 1 + ch.iter().map(Tree::carets).sum::<usize>(),
        }
    }

    fn subtree(&self, path: &[u8]) -> Option<&Tree> {
        match (path.split_first(), self) {
            (None, t) => Some(t),
            (Some((&k, rest)), Tree::Node(ch)) => ch.get(k as usize)?.subtree(rest),
            (Some(_), Tree::Leaf) => None,
        }
    }

    fn collect_carets(&self, root: usize, path: &mut Vec<u8>, out: &mut BTreeSet<CaretAddr>) {
        if let Tree::Node(ch) = self {
            out.insert(CaretAddr {
                root,
                path: path.clone(),
            });
            for (k, c) in ch.iter().enumerate() {
                path.push(k as u8);
                c.collect_carets(root, path, out);
                path.pop();
            }
        }
    }

    fn collect_leaf_paths(&self, root: usize, path: &mut Vec<u8>, out: &mut Vec<CaretAddr>) {
        match self {
            Tree::Leaf => out.push(CaretAddr {
                root,
                path: path.clone(),
            }),
            Tree::Node(ch) => {
                for (k, c) in ch.iter().enumerate() {
                    path.push(k as u8);
                    c.collect_leaf_paths(root, path, out);
                    path.pop();
                }
            }
        }
    }

    fn preorder_word(&self, leaves_left: &mut usize, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf => *leaves_left += 1,
            Tree::Node(ch) => {
                out.push(*leaves_left + 1);
                for c in ch {
                    c.preorder_word(leaves_left, out);
                }
            }
        }
    }

    /// Right comb: every caret hangs off the last child of its parent.
    pub fn right_comb(leaves: usize, arity: usize) -> Tree {
        let mut t = Tree::Leaf;
        let mut have = 1;
        while have + arity - 1 <= leaves {
            let mut ch = vec![Tree::Leaf; arity - 1];
            ch.push(t);
            t = Tree::Node(ch);
            have += arity - 1;
        }
        t
    }

    /// Left comb: every caret hangs off the first child of its parent.
    pub fn left_comb(leaves: usize, arity: usize) -> Tree {
        let mut t = Tree::Leaf;
        let mut have = 1;
        while have + arity - 1 <= leaves {
            let mut ch = vec![t];
            ch.extend(std::iter::repeat_n(Tree::Leaf, arity - 1));
            t = Tree::Node(ch);
            have += arity - 1;
        }
        t
    }

    /// All `arity`-ary trees with exactly `leaves` leaves, in a fixed order.
    pub fn all_with_leaves(leaves: usize, arity: usize) -> Vec<Tree> {
        fn go(leaves: usize, arity: usize, memo: &mut Vec<Option<Vec<Tree>>>) -> Vec<Tree> {
            if let Some(v) = &memo[leaves] {
                return v.clone();
            }
            let mut out = Vec::new();
            if leaves == 1 {
                out.push(Tree::Leaf);
            } else if leaves > 1 && (leaves - 1).is_multiple_of(arity - 1) {
                // distribute leaves among `arity` children
                let mut parts = Vec::new();
                distribute(leaves, arity, arity, &mut parts, &mut |split| {
                    let options: Vec<Vec<Tree>> =
                        split.iter().map(|&l| go_ref(l, arity)).collect();
                    let mut idx = vec![0usize; arity];
                    'outer: loop {
                        out.push(Tree::Node(
                            (0..arity).map(|k| options[k][idx[k]].clone()).collect(),
                        ));
                        for k in (0..arity).rev() {
                            idx[k] += 1;
                            if idx[k] < options[k].len() {
                                continue 'outer;
                            }
                            idx[k] = 0;
                        }
                        break;
                    }
                });
            }
            memo[leaves] = Some(out.clone());
            out
        }
        fn go_ref(leaves: usize, arity: usize) -> Vec<Tree> {
            let mut memo = vec![None; leaves + 1];
            go(leaves, arity, &mut memo)
        }
        fn distribute(
            left: usize,
            arity: usize,
            slots: usize,
            acc: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if slots == 0 {
                if left == 0 {
                    f(acc);
                }
                return;
            }
            // each child has at least one leaf and a leaf count = 1 mod (arity - 1)
            let mut l = 1;
            while l + (slots - 1) <= left {
                acc.push(l);
                distribute(left - l, arity, slots - 1, acc, f);
                acc.pop();
                l += arity - 1;
            }
        }
        if arity < 2 || leaves == 0 {
            return Vec::new();
        }
        let mut memo = vec![None; leaves + 1];
        go(leaves, arity, &mut memo)
    }
}

/// Address of a node in the infinite `d`-ary forest: root index (0-based)
/// and descent path of child positions (each `0..d`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaretAddr {
    pub root: usize,
    pub path: Vec<u8>,
}

/// The carets of a forest as a set of addresses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaretSet {
    pub arity: usize,
    pub roots: usize,
    pub carets: BTreeSet<CaretAddr>,
}

impl CaretSet {
    /// Ancestor-closed: every caret's parent is a caret, or it sits at a root.
    pub fn is_ancestor_closed(&self) -> bool {
        self.carets.iter().all(|c| {
            c.root < self.roots
                && c.path.iter().all(|&k| (k as usize) < self.arity)
                && (c.path.is_empty() || {
                    let mut parent = c.clone();
                    parent.path.pop();
                    self.carets.contains(&parent)
                })
        })
    }

    pub fn union(&self, other: &CaretSet) -> CaretSet {
        CaretSet {
            arity: self.arity,
            roots: self.roots,
            carets: self.carets.union(&other.carets).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &CaretSet) -> CaretSet {
        CaretSet {
            arity: self.arity,
            roots: self.roots,
            carets: self.carets.intersection(&other.carets).cloned().collect(),
        }
    }

    pub fn is_subset(&self, other: &CaretSet) -> bool {
        self.carets.is_subset(&other.carets)
    }

    fn tree_at(&self, root: usize, path: &mut Vec<u8>) -> Tree {
        let addr = CaretAddr {
            root,
            path: path.clone(),
        };
        if self.carets.contains(&addr) {
            let mut ch = Vec::with_capacity(self.arity);
            for k in 0..self.arity {
                path.push(k as u8);
                ch.push(self.tree_at(root, path));
                path.pop();
            }
            Tree::Node(ch)
        } else {
            Tree::Leaf
        }
    }

    pub fn to_forest(&self) -> Result<Forest> {
        if !self.is_ancestor_closed() {
            return Err(OreError::NotAncestorClosed(format!("{:?}", self.carets)));
        }
        let trees = (0..self.roots)
            .map(|r| self.tree_at(r, &mut Vec::new()))
            .collect();
        Forest::from_trees(self.arity, trees)
    }
}

/// A morphism of `F_d`: a forest stored by its canonical caret word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ForestRepr", into = "ForestRepr")]
pub struct Forest {
    arity: usize,
    roots: usize,
    word: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ForestRepr {
    arity: usize,
    roots: usize,
    word: Vec<usize>,
}

impl TryFrom<ForestRepr> for Forest {
    type Error = OreError;
    fn try_from(r: ForestRepr) -> Result<Forest> {
        normal_form(&r.word, r.roots, r.arity)
    }
}

impl From<Forest> for ForestRepr {
    fn from(f: Forest) -> ForestRepr {
        ForestRepr {
            arity: f.arity,
            roots: f.roots,
            word: f.word,
        }
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if arity < 2 {
        Err(OreError::InvalidArity(arity))
    } else {
        Ok(())
    }
}

fn same_arity(a: &Forest, b: &Forest) -> Result<()> {
    if a.arity != b.arity {
        Err(OreError::ArityMismatch {
            left: a.arity,
            right: b.arity,
        })
    } else {
        Ok(())
    }
}

fn same_roots(a: &Forest, b: &Forest, context: &'static str) -> Result<()> {
    same_arity(a, b)?;
    if a.roots != b.roots {
        Err(OreError::BoundaryMismatch {
            context,
            expected: a.roots,
            found: b.roots,
        })
    } else {
        Ok(())
    }
}

/// Canonical non-decreasing caret word for a raw word of generators applied
/// to the identity forest on `roots` roots.
pub fn normal_form(word: &[usize], roots: usize, arity: usize) -> Result<Forest> {
    check_arity(arity)?;
    if roots == 0 {
        return Err(OreError::BoundaryMismatch {
            context: "normal_form roots",
            expected: 1,
            found: 0,
        });
    }
    let mut trees = vec![Tree::Leaf; roots];
    let mut leaves = roots;
    for (step, &i) in word.iter().enumerate() {
        if i == 0 || i > leaves {
            return Err(OreError::IndexOutOfRange {
                step: step + 1,
                index: i,
                max: leaves,
            });
        }
        split_leaf(&mut trees, i, arity);
        leaves += arity - 1;
    }
    Forest::from_trees(arity, trees)
}

fn split_leaf(trees: &mut [Tree], index: usize, arity: usize) {
    fn go(t: &mut Tree, remaining: &mut usize, arity: usize) -> bool {
        match t {
            Tree::Leaf => {
                if *remaining == 1 {
                    *t = Tree::Node(vec![Tree::Leaf; arity]);
                    true
                } else {
                    *remaining -= 1;
                    false
                }
            }
            Tree::Node(ch) => ch.iter_mut().any(|c| go(c, remaining, arity)),
        }
    }
    let mut remaining = index;
    for t in trees.iter_mut() {
        if go(t, &mut remaining, arity) {
            return;
        }
    }
}

impl Forest {
    pub fn identity(roots: usize, arity: usize) -> Forest {
        Forest {
            arity,
            roots,
            word: Vec::new(),
        }
    }

    /// The generator `λ_i` on `roots` roots (1-based index).
    pub fn caret(index: usize, roots: usize, arity: usize) -> Result<Forest> {
        normal_form(&[index], roots, arity)
    }

    pub fn from_trees(arity: usize, trees: Vec<Tree>) -> Result<Forest> {
        check_arity(arity)?;
        if trees.is_empty() {
            return Err(OreError::BoundaryMismatch {
                context: "forest roots",
                expected: 1,
                found: 0,
            });
        }
        fn valid(t: &Tree, arity: usize) -> bool {
            match t {
                Tree::Leaf => true,
                Tree::Node(ch) => ch.len() == arity && ch.iter().all(|c| valid(c, arity)),
            }
        }
        if !trees.iter().all(|t| valid(t, arity)) {
            return Err(OreError::ArityMismatch {
                left: arity,
                right: 0,
            });
        }
        let mut word = Vec::new();
        let mut left = 0;
        for t in &trees {
            t.preorder_word(&mut left, &mut word);
        }
        Ok(Forest {
            arity,
            roots: trees.len(),
            word,
        })
    }

    pub fn from_tree(arity: usize, tree: Tree) -> Result<Forest> {
        Forest::from_trees(arity, vec![tree])
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn roots(&self) -> usize {
        self.roots
    }

    pub fn leaves(&self) -> usize {
        self.roots + (self.arity - 1) * self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn caret_count(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Noetherianity witness `δ(f) = leaves − roots`; additive under composition.
    pub fn delta(&self) -> usize {
        self.leaves() - self.roots
    }

    pub fn trees(&self) -> Vec<Tree> {
        let mut trees = vec![Tree::Leaf; self.roots];
        for &i in &self.word {
            split_leaf(&mut trees, i, self.arity);
        }
        trees
    }

    /// Leaf counts of the individual trees.
    pub fn tree_sizes(&self) -> Vec<usize> {
        self.trees().iter().map(Tree::leaves).collect()
    }

    /// Every tree is trivial or a single caret.
    pub fn is_elementary(&self) -> bool {
        self.trees()
            .iter()
            .all(|t| t.carets() <= 1)
    }

    pub fn caret_set(&self) -> CaretSet {
        let mut carets = BTreeSet::new();
        for (r, t) in self.trees().iter().enumerate() {
            t.collect_carets(r, &mut Vec::new(), &mut carets);
        }
        CaretSet {
            arity: self.arity,
            roots: self.roots,
            carets,
        }
    }

    /// Leaf addresses in left-to-right order.
    pub fn leaf_addresses(&self) -> Vec<CaretAddr> {
        let mut out = Vec::new();
        for (r, t) in self.trees().iter().enumerate() {
            t.collect_leaf_paths(r, &mut Vec::new(), &mut out);
        }
        out
    }

    /// `self · other`: graft the trees of `other` onto the leaves of `self`.
    pub fn compose(&self, other: &Forest) -> Result<Forest> {
        same_arity(self, other)?;
        if self.leaves() != other.roots {
            return Err(OreError::BoundaryMismatch {
                context: "compose",
                expected: self.leaves(),
                found: other.roots,
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        normal_form(&word, self.roots, self.arity)
    }

    pub fn left_divides(&self, f: &Forest) -> bool {
        self.arity == f.arity
            && self.roots == f.roots
            && self.caret_set().is_subset(&f.caret_set())
    }

    /// Least common right-multiple: union of caret sets.
    pub fn lcm(&self, other: &Forest) -> Result<Forest> {
        same_roots(self, other, "lcm")?;
        self.caret_set().union(&other.caret_set()).to_forest()
    }

    /// Greatest common left-factor: intersection of caret sets.
    pub fn gcd(&self, other: &Forest) -> Result<Forest> {
        same_roots(self, other, "gcd")?;
        self.caret_set().intersection(&other.caret_set()).to_forest()
    }

    /// The unique `q` with `self · q = f`.
    pub fn left_quotient(&self, f: &Forest) -> Result<Forest> {
        same_roots(self, f, "left_quotient")?;
        if !self.left_divides(f) {
            return Err(OreError::NotALeftFactor(self.to_string()));
        }
        let f_trees = f.trees();
        let trees = self
            .leaf_addresses()
            .iter()
            .map(|a| {
                f_trees[a.root]
                    .subtree(&a.path)
                    .cloned()
                    .unwrap_or(Tree::Leaf)
            })
            .collect();
        Forest::from_trees(self.arity, trees)
    }

    /// The unique `a` with `a · b = self`, if `b` is a right factor.
    pub fn right_quotient(&self, b: &Forest) -> Result<Forest> {
        same_arity(self, b)?;
        if self.leaves() != b.leaves() {
            return Err(OreError::BoundaryMismatch {
                context: "right_quotient",
                expected: self.leaves(),
                found: b.leaves(),
            });
        }
        let not_factor = || OreError::NotARightFactor(b.to_string());
        let b_trees = b.trees();
        // block start offsets of b's trees
        let mut blocks = Vec::with_capacity(b_trees.len());
        let mut off = 0;
        for t in &b_trees {
            blocks.push((off, t));
            off += t.leaves();
        }
        // cut the subtree of `t` spanning exactly a block of b
        fn cut(
            t: &Tree,
            offset: usize,
            blocks: &[(usize, &Tree)],
            next: &mut usize,
        ) -> Option<Tree> {
            if let Some(&(start, bt)) = blocks.get(*next) {
                if start == offset && t == bt {
                    *next += 1;
                    return Some(Tree::Leaf);
                }
            }
            match t {
                Tree::Leaf => None,
                Tree::Node(ch) => {
                    let mut off = offset;
                    let mut out = Vec::with_capacity(ch.len());
                    for c in ch {
                        out.push(cut(c, off, blocks, next)?);
                        off += c.leaves();
                    }
                    Some(Tree::Node(out))
                }
            }
        }
        let mut next = 0;
        let mut off = 0;
        let mut trees = Vec::new();
        for t in self.trees() {
            trees.push(cut(&t, off, &blocks, &mut next).ok_or_else(not_factor)?);
            off += t.leaves();
        }
        if next != blocks.len() {
            return Err(not_factor());
        }
        Forest::from_trees(self.arity, trees)
    }

    /// Greatest elementary left-factor: `gcd(f, Δ(roots))`.
    pub fn head(&self) -> Result<Forest> {
        if self.is_identity() {
            return Err(OreError::NoHead);
        }
        self.gcd(&garside_delta(self.roots, self.arity))
    }

    /// Greedy factorization into elementary heads whose product is `self`.
    pub fn greedy_factorization(&self) -> Vec<Forest> {
        let mut rest = self.clone();
        let mut factors = Vec::new();
        while !rest.is_identity() {
            let h = rest.head().expect("non-identity has a head");
            rest = h.left_quotient(&rest).expect("head divides");
            factors.push(h);
        }
        factors
    }
}

/// The Garside map: `n` roots, each carrying a single caret.
pub fn garside_delta(n: usize, arity: usize) -> Forest {
    let word = (0..n).map(|k| 1 + k * arity).collect();
    Forest {
        arity,
        roots: n,
        word,
    }
}

/// All forests with `n_leaves` leaves whose trees are trivial or single
/// carets, identity included. Ordered by root count, then word.
pub fn enumerate_elementary(n_leaves: usize, arity: usize) -> Vec<Forest> {
    // compositions of n_leaves into parts 1 and arity
    fn go(left: usize, arity: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        cur.push(false);
        go(left - 1, arity, cur, out);
        cur.pop();
        if left >= arity {
            cur.push(true);
            go(left - arity, arity, cur, out);
            cur.pop();
        }
    }
    if n_leaves == 0 || arity < 2 {
        return Vec::new();
    }
    let mut shapes = Vec::new();
    go(n_leaves, arity, &mut Vec::new(), &mut shapes);
    let mut out: Vec<Forest> = shapes
        .into_iter()
        .map(|s| {
            let trees = s
                .into_iter()
                .map(|c| {
                    if c {
                        Tree::Node(vec![Tree::Leaf; arity])
                    } else {
                        Tree::Leaf
                    }
                })
                .collect();
            Forest::from_trees(arity, trees).expect("valid elementary forest")
        })
        .collect();
    out.sort_by(|a, b| b.roots.cmp(&a.roots).then_with(|| a.word.cmp(&b.word)));
    out
}

/// Every word reachable from `word` by rewriting a descent
/// `λ_i λ_j → λ_j λ_{i+d-1}` (`j < i`) at any position, `word` included.
pub fn rewrite_descendants(word: &[usize], arity: usize) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![word.to_vec()];
    while let Some(w) = stack.pop() {
        if !seen.insert(w.clone()) {
            continue;
        }
        for p in 0..w.len().saturating_sub(1) {
            let (i, j) = (w[p], w[p + 1]);
            if j < i {
                let mut v = w.clone();
                v[p] = j;
                v[p + 1] = i + arity - 1;
                stack.push(v);
            }
        }
    }
    seen
}

/// The descendants admitting no further rewrite.
pub fn irreducible_descendants(word: &[usize], arity: usize) -> Vec<Vec<usize>> {
    rewrite_descendants(word, arity)
        .into_iter()
        .filter(|w| w.windows(2).all(|p| p[0] <= p[1]))
        .collect()
}

/// Height function on objects: the identity.
pub fn height(n: usize) -> usize {
    n
}

/// `F_d(m, n)` is nonempty iff `m <= n` and `n ≡ m (mod d − 1)`.
pub fn component_reachable(m: usize, n: usize, arity: usize) -> bool {
    arity >= 2 && m >= 1 && m <= n && (n - m).is_multiple_of(arity - 1)
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity == 2 {
            write!(f, "F({}", self.roots)?;
        } else {
            write!(f, "F{}({}", self.arity, self.roots)?;
        }
        if !self.word.is_empty() {
            write!(f, ";")?;
            for (k, i) in self.word.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{i}")?;
            }
        }
        write!(f, ")")
    }
}

impl FromStr for Forest {
    type Err = OreError;

    /// Parses `F(m;i1,i2,...)` or `F3(m;...)` for arity 3. The word may be raw.
    fn from_str(s: &str) -> Result<Forest> {
        let bad = || OreError::Parse(format!("expected F(roots;word), got {s:?}"));
        let s = s.trim();
        let rest = s.strip_prefix('F').ok_or_else(bad)?;
        let open = rest.find('(').ok_or_else(bad)?;
        let arity = if open == 0 {
            2
        } else {
            rest[..open].parse().map_err(|_| bad())?
        };
        let body = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let (roots, word) = match body.split_once(';') {
            Some((r, w)) => (r, w),
            None => (body, ""),
        };
        let roots: usize = roots.trim().parse().map_err(|_| bad())?;
        let word = word
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        normal_form(&word, roots, arity)
    }
}
