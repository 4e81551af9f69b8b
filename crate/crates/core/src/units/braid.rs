//! Braid groups with a Garside normal form.
//!
//! A braid is stored as a word in the signed generators `±i` (`σ_i^{±1}`).
//! The word problem is decided by the left-greedy normal form
//! `Δ^p · A_1 ⋯ A_k`, where every `A_j` is a permutation braid other than
//! `1` and `Δ`, and every adjacent pair is left-weighted.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{OreError, Result};
use crate::units::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    pub n: usize,
    pub word: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidNormalForm {
    pub n: usize,
    pub delta_power: i64,
    pub factors: Vec<Permutation>,
}

impl BraidWord {
    pub fn new(n: usize, word: Vec<i32>) -> Result<BraidWord> {
        for &x in &word {
            if x == 0 || x.unsigned_abs() as usize >= n {
                return Err(OreError::BraidIndex {
                    index: x,
                    strands: n,
                });
            }
        }
        Ok(BraidWord { n, word })
    }

    pub fn identity(n: usize) -> BraidWord {
        BraidWord { n, word: Vec::new() }
    }

    pub fn generator(i: i32, n: usize) -> Result<BraidWord> {
        BraidWord::new(n, vec![i])
    }

    /// The positive half twist, a reduced word for the reversal.
    pub fn delta(n: usize) -> BraidWord {
        lift(&Permutation::reversal(n))
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.word.iter().all(|&x| x > 0)
    }

    pub fn validate(&self) -> Result<()> {
        BraidWord::new(self.n, self.word.clone()).map(|_| ())
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(OreError::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Ok(BraidWord { n: self.n, word })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            word: self.word.iter().rev().map(|&x| -x).collect(),
        }
    }

    pub fn normal_form(&self) -> BraidNormalForm {
        normal_form(self)
    }

    /// Equality in the braid group.
    pub fn braid_eq(&self, other: &BraidWord) -> Result<bool> {
        if self.n != other.n {
            return Err(OreError::DegreeMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(self.normal_form() == other.normal_form())
    }

    /// The underlying permutation; the rightmost letter acts first.
    pub fn project(&self) -> Permutation {
        let mut p = Permutation::identity(self.n);
        for &x in &self.word {
            p = p.times_adjacent(x.unsigned_abs() as usize);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.project().is_identity()
    }

    pub fn is_cyclic(&self) -> bool {
        self.project().as_rotation().is_some()
    }

    /// Rewrites the word into the normal form's canonical spelling.
    pub fn canonical(&self) -> BraidWord {
        self.normal_form().to_word()
    }

    /// Removes the strand that starts at position `start` at the right end
    /// of the word (the end that acts first), renumbering the others.
    pub fn delete_strand(&self, start: usize) -> Result<BraidWord> {
        if start == 0 || start > self.n {
            return Err(OreError::BraidIndex {
                index: start as i32,
                strands: self.n,
            });
        }
        let mut p = start;
        let mut rev = Vec::with_capacity(self.word.len());
        for &x in self.word.iter().rev() {
            let j = x.unsigned_abs() as usize;
            if j == p {
                p = j + 1;
            } else if j + 1 == p {
                p = j;
            } else if j > p {
                rev.push(x.signum() * (j as i32 - 1));
            } else {
                rev.push(x);
            }
        }
        rev.reverse();
        Ok(BraidWord {
            n: self.n - 1,
            word: rev,
        })
    }

    /// Crossing count of a positive word; equals the inversion count for
    /// permutation braids.
    pub fn crossings(&self) -> usize {
        self.word.len()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1_{}", self.n);
        }
        for (k, &x) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if x > 0 {
                write!(f, "s{x}")?;
            } else {
                write!(f, "s{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

/// Positive permutation braid for `p`, spelled by a reduced word.
pub fn lift(p: &Permutation) -> BraidWord {
    BraidWord {
        n: p.degree(),
        word: p.reduced_word().into_iter().map(|i| i as i32).collect(),
    }
}

/// Conjugation by `Δ` on simple elements: `σ_i ↦ σ_{n−i}`.
fn tau(p: &Permutation) -> Permutation {
    let d = Permutation::reversal(p.degree());
    d.compose(p).unwrap().compose(&d).unwrap()
}

/// Makes `(a, b)` left-weighted; returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.degree();
    let mut changed = false;
    loop {
        let Some(i) = (1..n).find(|&i| b.has_left_descent(i) && !a.has_right_descent(i)) else {
            return changed;
        };
        *a = a.times_adjacent(i);
        *b = b.adjacent_times(i);
        changed = true;
    }
}

pub fn normal_form(w: &BraidWord) -> BraidNormalForm {
    let n = w.n;
    if n <= 1 {
        return BraidNormalForm {
            n,
            delta_power: 0,
            factors: Vec::new(),
        };
    }
    let delta = Permutation::reversal(n);
    let mut p: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.word.len());
    for &x in &w.word {
        let i = x.unsigned_abs() as usize;
        if x > 0 {
            factors.push(Permutation::adjacent(i, n));
        } else {
            // σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹); move Δ⁻¹ to the front with B·Δ⁻¹ = Δ⁻¹·τ(B)
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            p -= 1;
            factors.push(delta.times_adjacent(i));
        }
    }
    loop {
        let mut changed = false;
        for j in (0..factors.len().saturating_sub(1)).rev() {
            let (l, r) = factors.split_at_mut(j + 1);
            if left_weight(&mut l[j], &mut r[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let lead = factors.iter().take_while(|f| **f == delta).count();
    p += lead as i64;
    factors.drain(..lead);
    while factors.last().is_some_and(Permutation::is_identity) {
        factors.pop();
    }
    BraidNormalForm {
        n,
        delta_power: p,
        factors,
    }
}

impl BraidNormalForm {
    pub fn to_word(&self) -> BraidWord {
        let d = BraidWord::delta(self.n);
        let dp = if self.delta_power >= 0 { d.clone() } else { d.inverse() };
        let mut word = Vec::new();
        for _ in 0..self.delta_power.unsigned_abs() {
            word.extend_from_slice(&dp.word);
        }
        for f in &self.factors {
            word.extend(lift(f).word);
        }
        BraidWord { n: self.n, word }
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }
}

impl fmt::Display for BraidNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for x in &self.factors {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize, w: &[i32]) -> BraidWord {
        BraidWord::new(n, w.to_vec()).unwrap()
    }

    #[test]
    fn braid_relation() {
        let x = b(3, &[1, 2, 1]).normal_form();
        assert_eq!(x, b(3, &[2, 1, 2]).normal_form());
        assert_eq!(x.delta_power, 1);
        assert!(x.factors.is_empty());
    }

    #[test]
    fn cancellation_and_commutation() {
        assert!(b(3, &[1, -1]).normal_form().is_identity());
        assert!(b(4, &[-2, 3, -3, 2]).normal_form().is_identity());
        assert!(b(4, &[1, 3]).braid_eq(&b(4, &[3, 1])).unwrap());
        assert!(!b(3, &[1, 2]).braid_eq(&b(3, &[2, 1])).unwrap());
        assert!(b(3, &[1]).braid_eq(&b(4, &[1])).is_err());
    }

    #[test]
    fn delta_crossings() {
        assert_eq!(BraidWord::delta(4).crossings(), 6);
        assert_eq!(BraidWord::delta(5).crossings(), 10);
    }

    #[test]
    fn lift_and_project() {
        let c = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(lift(&c).word, vec![1, 2]);
        assert_eq!(b(3, &[1, 2]).project(), c);
        assert_eq!(lift(&Permutation::identity(3)).word, Vec::<i32>::new());
        assert_eq!(b(2, &[1]).project().images(), &[2, 1]);
    }

    #[test]
    fn pure_and_cyclic() {
        assert!(b(2, &[1, 1]).is_pure());
        assert!(!b(2, &[1]).is_pure());
        assert!(b(3, &[1, 2]).is_cyclic());
        assert!(!b(3, &[1]).is_cyclic());
    }

    #[test]
    fn negative_powers() {
        let d = BraidWord::delta(3);
        let nf = d.inverse().normal_form();
        assert_eq!(nf.delta_power, -1);
        assert!(nf.factors.is_empty());
        let w = b(3, &[-1]);
        let nf = w.normal_form();
        assert_eq!(nf.delta_power, -1);
        assert!(nf.to_word().braid_eq(&w).unwrap());
    }

    #[test]
    fn strand_deletion() {
        assert_eq!(b(3, &[1, 2]).delete_strand(2).unwrap().word, vec![1]);
        assert_eq!(b(4, &[3]).delete_strand(1).unwrap().word, vec![2]);
        assert_eq!(b(3, &[1, -1]).delete_strand(1).unwrap().word, Vec::<i32>::new());
    }
}
