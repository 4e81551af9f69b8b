use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};

/// A permutation of `{1..n}` stored by its image table.
///
/// Products follow function composition: `a.compose(&b)` applies `b` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermRepr", into = "PermRepr")]
pub struct Permutation {
    img: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermRepr {
    n: usize,
    img: Vec<usize>,
}

impl TryFrom<PermRepr> for Permutation {
    type Error = OreError;
    fn try_from(r: PermRepr) -> Result<Permutation> {
        if r.img.len() != r.n {
            return Err(OreError::InvalidPermutation(format!(
                "n = {} but {} images",
                r.n,
                r.img.len()
            )));
        }
        Permutation::new(r.img)
    }
}

impl From<Permutation> for PermRepr {
    fn from(p: Permutation) -> PermRepr {
        PermRepr {
            n: p.degree(),
            img: p.img,
        }
    }
}

impl Permutation {
    pub fn new(img: Vec<usize>) -> Result<Permutation> {
        let n = img.len();
        let mut seen = vec![false; n + 1];
        for &x in &img {
            if x == 0 || x > n || seen[x] {
                return Err(OreError::InvalidPermutation(format!("{img:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { img })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            img: (1..=n).collect(),
        }
    }

    /// The transposition `(i i+1)`.
    pub fn adjacent(i: usize, n: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// The reversal `i ↦ n + 1 − i`, the image of the half twist.
    pub fn reversal(n: usize) -> Permutation {
        Permutation {
            img: (1..=n).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(OreError::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Permutation {
            img: other.img.iter().map(|&j| self.img[j - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.img.iter().enumerate() {
            inv[j - 1] = i + 1;
        }
        Permutation { img: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i + 1 == j)
    }

    /// Number of inversions, the length of any reduced word.
    pub fn inversions(&self) -> usize {
        let n = self.degree();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.img[a] > self.img[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `i` with `self(i) > self(i+1)`; these `s_i` right-divide.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&i| self.img[i - 1] > self.img[i])
            .collect()
    }

    /// `i` with `self⁻¹(i) > self⁻¹(i+1)`; these `s_i` left-divide.
    pub fn left_descents(&self) -> Vec<usize> {
        self.inverse().right_descents()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        let p = self.img.iter().position(|&x| x == i).unwrap();
        let q = self.img.iter().position(|&x| x == i + 1).unwrap();
        p > q
    }

    /// `self ∘ s_i`.
    pub fn times_adjacent(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.img.swap(i - 1, i);
        p
    }

    /// `s_i ∘ self`.
    pub fn adjacent_times(&self, i: usize) -> Permutation {
        Permutation {
            img: self
                .img
                .iter()
                .map(|&x| {
                    if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    /// Reduced word `[i1, ..., ik]` with `self = s_i1 ∘ ... ∘ s_ik`, built by
    /// repeatedly splitting off the smallest right descent as the last letter.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..p.degree()).find(|&i| p.has_right_descent(i)) {
            rev.push(i);
            p = p.times_adjacent(i);
        }
        rev.reverse();
        rev
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self).unwrap();
            k += 1;
        }
        k
    }

    /// Shift `ℓ` if this permutation is the rotation `i ↦ i + ℓ mod n`.
    pub fn as_rotation(&self) -> Option<Rotation> {
        let n = self.degree();
        if n == 0 {
            return Some(Rotation { n: 0, shift: 0 });
        }
        let shift = (self.img[0] + n - 1) % n;
        let r = Rotation { n, shift };
        (r.to_permutation() == *self).then_some(r)
    }

    /// All permutations of degree `n` in lexicographic order of image tables.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { img: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.img.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// An element `ℓ + nZ` of the cyclic group acting on `n` cyclically ordered points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RotRepr", into = "RotRepr")]
pub struct Rotation {
    n: usize,
    shift: usize,
}

#[derive(Serialize, Deserialize)]
struct RotRepr {
    n: usize,
    shift: i64,
}

impl TryFrom<RotRepr> for Rotation {
    type Error = OreError;
    fn try_from(r: RotRepr) -> Result<Rotation> {
        if r.n == 0 {
            return Err(OreError::InvalidPermutation("rotation of degree 0".into()));
        }
        Ok(Rotation::new(r.n, r.shift))
    }
}

impl From<Rotation> for RotRepr {
    fn from(r: Rotation) -> RotRepr {
        RotRepr {
            n: r.n,
            shift: r.shift as i64,
        }
    }
}

impl Rotation {
    /// Reduces `shift` modulo `n`.
    pub fn new(n: usize, shift: i64) -> Rotation {
        Rotation {
            n,
            shift: shift.rem_euclid(n as i64) as usize,
        }
    }

    pub fn identity(n: usize) -> Rotation {
        Rotation { n, shift: 0 }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn compose(&self, other: &Rotation) -> Result<Rotation> {
        if self.n != other.n {
            return Err(OreError::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(Rotation::new(self.n, (self.shift + other.shift) as i64))
    }

    pub fn inverse(&self) -> Rotation {
        Rotation::new(self.n, -(self.shift as i64))
    }

    pub fn apply(&self, i: usize) -> usize {
        (i - 1 + self.shift) % self.n + 1
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation {
            img: (1..=self.n).map(|i| self.apply(i)).collect(),
        }
    }

    pub fn all(n: usize) -> Vec<Rotation> {
        (0..n).map(|s| Rotation { n, shift: s }).collect()
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rot({} mod {})", self.shift, self.n)
    }
}
