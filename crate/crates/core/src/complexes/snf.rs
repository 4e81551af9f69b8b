//! Smith normal form invariants of sparse integer matrices.
//!
//! Unit pivots are eliminated first in a sparse `i64` representation with
//! checked arithmetic; whatever is left (no unit entries, or an entry that
//! would overflow) is finished densely over arbitrary-precision integers.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{OreError, Result};

/// A sparse integer matrix stored by columns of `(row, value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r as usize][c] += v;
            }
        }
        m
    }
}

/// Rank and the invariant factors greater than one, in divisibility order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmithInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

fn merge_sub(a: &[(u32, i64)], b: &[(u32, i64)], q: i64) -> Option<Vec<(u32, i64)>> {
    // a − q·b, both sorted by index
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, q.checked_mul(b[j].1)?.checked_neg()?));
            j += 1;
        } else {
            let v = a[i].1.checked_sub(q.checked_mul(b[j].1)?)?;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Smith invariants of `m`. `dense_budget` caps the number of entries of the
/// dense block left after sparse elimination.
pub fn smith_invariants(m: &SparseMatrix, dense_budget: usize) -> Result<SmithInvariants> {
    // rows as sorted (col, value) lists; columns as row-index sets
    let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); m.rows];
    for (c, col) in m.columns.iter().enumerate() {
        for &(r, v) in col {
            if v != 0 {
                rows[r as usize].push((c as u32, v));
            }
        }
    }
    for r in rows.iter_mut() {
        r.sort_unstable_by_key(|e| e.0);
        // merge duplicates
        let mut merged: Vec<(u32, i64)> = Vec::with_capacity(r.len());
        for &(c, v) in r.iter() {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|e| e.1 != 0);
        *r = merged;
    }
    let mut cols: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); m.cols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, _) in row {
            cols[c as usize].insert(r as u32);
        }
    }
    let mut row_alive = vec![true; m.rows];
    let mut col_alive = vec![true; m.cols];
    let mut rank = 0usize;
    let mut heap: BinaryHeap<Reverse<(usize, u32)>> = cols
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_empty())
        .map(|(c, s)| Reverse((s.len(), c as u32)))
        .collect();
    let mut stuck = vec![false; m.cols];
    while let Some(Reverse((cnt, c))) = heap.pop() {
        let cu = c as usize;
        if !col_alive[cu] || cols[cu].len() != cnt || cnt == 0 || stuck[cu] {
            continue;
        }
        // unit entry of column c in the shortest row
        let mut best: Option<(usize, u32)> = None;
        for &r in &cols[cu] {
            let row = &rows[r as usize];
            let v = row[row.binary_search_by_key(&c, |e| e.0).unwrap()].1;
            if v.abs() == 1 && best.is_none_or(|(l, _)| row.len() < l) {
                best = Some((row.len(), r));
            }
        }
        let Some((_, pr)) = best else {
            stuck[cu] = true;
            continue;
        };
        let prow = rows[pr as usize].clone();
        let pv = prow[prow.binary_search_by_key(&c, |e| e.0).unwrap()].1;
        let others: Vec<u32> = cols[cu].iter().copied().filter(|&r| r != pr).collect();
        let mut updates = Vec::with_capacity(others.len());
        let mut overflow = false;
        for &r in &others {
            let row = &rows[r as usize];
            let v = row[row.binary_search_by_key(&c, |e| e.0).unwrap()].1;
            match merge_sub(row, &prow, v * pv) {
                Some(nr) => updates.push((r, nr)),
                None => {
                    overflow = true;
                    break;
                }
            }
        }
        if overflow {
            stuck[cu] = true;
            continue;
        }
        for (r, nr) in updates {
            let old: BTreeSet<u32> = rows[r as usize].iter().map(|e| e.0).collect();
            let new: BTreeSet<u32> = nr.iter().map(|e| e.0).collect();
            for &x in old.difference(&new) {
                cols[x as usize].remove(&r);
                if col_alive[x as usize] {
                    stuck[x as usize] = false;
                    heap.push(Reverse((cols[x as usize].len(), x)));
                }
            }
            for &x in new.difference(&old) {
                cols[x as usize].insert(r);
                stuck[x as usize] = false;
                heap.push(Reverse((cols[x as usize].len(), x)));
            }
            for &x in new.intersection(&old) {
                stuck[x as usize] = false;
            }
            rows[r as usize] = nr;
        }
        // drop pivot row and column
        for &(x, _) in &prow {
            cols[x as usize].remove(&pr);
            if x != c && col_alive[x as usize] {
                stuck[x as usize] = false;
                heap.push(Reverse((cols[x as usize].len(), x)));
            }
        }
        rows[pr as usize].clear();
        row_alive[pr as usize] = false;
        col_alive[cu] = false;
        cols[cu].clear();
        rank += 1;
    }
    // dense remainder
    let live_rows: Vec<usize> = (0..m.rows).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..m.cols).filter(|&c| col_alive[c] && !cols[c].is_empty()).collect();
    if live_rows.is_empty() || live_cols.is_empty() {
        return Ok(SmithInvariants { rank, torsion: Vec::new() });
    }
    let size = live_rows.len() * live_cols.len();
    if size > dense_budget {
        return Err(OreError::BudgetExceeded {
            what: "dense Smith block",
            size,
            budget: dense_budget,
        });
    }
    let col_pos: std::collections::HashMap<usize, usize> =
        live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|&r| {
            let mut v = vec![BigInt::zero(); live_cols.len()];
            for &(c, x) in &rows[r] {
                v[col_pos[&(c as usize)]] = BigInt::from(x);
            }
            v
        })
        .collect();
    let diag = dense_smith_diagonal(&mut dense);
    rank += diag.len();
    let torsion = normalize_diagonal(diag)
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    Ok(SmithInvariants { rank, torsion })
}

/// Nonzero diagonal entries (absolute values) of a Smith-equivalent form.
/// Pivots are the smallest nonzero absolute value, ties broken by position.
pub fn dense_smith_diagonal(a: &mut Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let mut diag = Vec::new();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            // clear column t
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = floor_div(&a[i][t], &a[t][t]);
                    for j in t..cols {
                        let s = &q * &a[t][j];
                        a[i][j] -= s;
                    }
                    if !a[i][t].is_zero() {
                        done = false;
                    }
                }
            }
            // clear row t
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = floor_div(&a[t][j], &a[t][t]);
                    for i in t..rows {
                        let s = &q * &a[i][t];
                        a[i][j] -= s;
                    }
                    if !a[t][j].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
            // move the smallest nonzero of row/column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && (a[best.0][best.1].is_zero() || a[i][t].abs() < a[best.0][best.1].abs()) {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && (a[best.0][best.1].is_zero() || a[t][j].abs() < a[best.0][best.1].abs()) {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}

/// Turns a diagonal into invariant factors `d_1 | d_2 | ...`.
pub fn normalize_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
    use num_integer::Integer;
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sparse(dense: &[Vec<i64>]) -> SparseMatrix {
        let rows = dense.len();
        let cols = dense[0].len();
        let mut m = SparseMatrix::new(rows, cols);
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.columns[c].push((r as u32, v));
                }
            }
        }
        m
    }

    #[test]
    fn diagonal_examples() {
        let s = smith_invariants(&sparse(&[vec![2, 0], vec![0, 3]]), 100).unwrap();
        assert_eq!(s.rank, 2);
        assert_eq!(s.torsion, vec![BigInt::from(6)]);
        let s = smith_invariants(&sparse(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), 100).unwrap();
        assert_eq!(s.rank, 3);
        assert_eq!(s.torsion, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = smith_invariants(&sparse(&[vec![1, 1], vec![1, 1]]), 100).unwrap();
        assert_eq!(s, SmithInvariants { rank: 1, torsion: vec![] });
    }

    #[test]
    fn budget() {
        assert!(smith_invariants(&sparse(&[vec![2, 2], vec![2, 4]]), 1).is_err());
    }
}
