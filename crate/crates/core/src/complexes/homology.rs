//! Reduced integral homology and connectivity certificates.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::simplicial::{ground_defect, size_budget, Simplex, SimplicialComplex};
use super::snf::{smith_invariants, SmithInvariants, SparseMatrix};
use crate::error::Result;

/// A finitely generated abelian group `Z^betti ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|b| b.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Boundary map from `k`-simplices to `(k-1)`-simplices. For `k = 0` this is
/// the augmentation to a single row.
pub fn boundary_matrix(levels: &[Vec<Simplex>], k: usize) -> SparseMatrix {
    if k == 0 {
        let mut m = SparseMatrix::new(1, levels.first().map_or(0, Vec::len));
        for col in m.columns.iter_mut() {
            col.push((0, 1));
        }
        return m;
    }
    let faces = &levels[k - 1];
    let index: HashMap<&[u32], u32> = faces
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i as u32))
        .collect();
    let cells = levels.get(k).map_or(&[][..], Vec::as_slice);
    let mut m = SparseMatrix::new(faces.len(), cells.len());
    let mut face = Vec::with_capacity(k);
    for (c, s) in cells.iter().enumerate() {
        for j in 0..s.len() {
            face.clear();
            face.extend(s.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &v)| v));
            let sign = if j % 2 == 0 { 1 } else { -1 };
            m.columns[c].push((index[face.as_slice()], sign));
        }
        m.columns[c].sort_unstable_by_key(|e| e.0);
    }
    m
}

/// Reduced homology groups `H̃_0 ..= H̃_max_dim`. The empty complex has
/// `H̃_{-1} = Z`, which is not reported; all listed groups are then zero.
pub fn reduced_homology(x: &SimplicialComplex, max_dim: usize) -> Result<Vec<HomologyGroup>> {
    if x.is_empty() {
        return Ok(vec![HomologyGroup::default(); max_dim + 1]);
    }
    let levels = x.simplices_up_to(max_dim + 1)?;
    let budget = size_budget();
    let invariants: Vec<SmithInvariants> = (0..=max_dim + 1)
        .map(|k| {
            if k < levels.len() || k == 0 {
                smith_invariants(&boundary_matrix(&levels, k), budget)
            } else {
                Ok(SmithInvariants::default())
            }
        })
        .collect::<Result<_>>()?;
    Ok((0..=max_dim)
        .map(|k| {
            let ck = levels.get(k).map_or(0, Vec::len);
            HomologyGroup {
                betti: ck - invariants[k].rank - invariants[k + 1].rank,
                torsion: invariants[k + 1].torsion.clone(),
            }
        })
        .collect())
}

/// Largest `c <= max_dim` with `H̃_i = 0` for all `i <= c`; −1 when
/// `H̃_0 != 0` and −2 for the empty complex.
pub fn homological_connectivity(x: &SimplicialComplex, max_dim: usize) -> Result<i64> {
    if x.is_empty() {
        return Ok(-2);
    }
    let h = reduced_homology(x, max_dim)?;
    Ok(h.iter().take_while(|g| g.is_zero()).count() as i64 - 1)
}

/// Connectivity certified by a grounded simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundedCertificate {
    /// Claimed connectivity; `None` means the complex is a cone.
    pub connectivity: Option<i64>,
    /// The witnessing simplex and its ground defect `k`.
    pub simplex: Simplex,
    pub k: usize,
}

impl GroundedCertificate {
    /// Connectivity as an integer, with `i64::MAX` for a cone.
    pub fn bound(&self) -> i64 {
        self.connectivity.unwrap_or(i64::MAX)
    }
}

/// Best connectivity certificate from grounded simplices of a flag complex.
///
/// A `k`-ground of dimension `D` with `k >= 1` certifies
/// `(⌊D/k⌋ − 1)`-connectivity; a `0`-ground is a cone point. Non-flag or
/// empty complexes get no certificate (`-2`).
pub fn grounded_certificate(x: &SimplicialComplex) -> Result<GroundedCertificate> {
    let none = GroundedCertificate {
        connectivity: Some(-2),
        simplex: Vec::new(),
        k: 0,
    };
    if x.is_empty() || !x.is_flag() {
        return Ok(none);
    }
    let adj = x.adjacency();
    let mut best = none;
    for level in x.simplices_by_dim()? {
        for s in level {
            let k = ground_defect(&adj, &s);
            let dim = s.len() as i64 - 1;
            let conn = if k == 0 { None } else { Some(dim / k as i64 - 1) };
            let cand = GroundedCertificate { connectivity: conn, simplex: s, k };
            if cand.bound() > best.bound() {
                best = cand;
            }
        }
    }
    Ok(best)
}

/// Integer form of [`grounded_certificate`].
pub fn grounded_bound(x: &SimplicialComplex) -> Result<i64> {
    Ok(grounded_certificate(x)?.bound())
}

#[cfg(test)]
mod tests {
    use super::super::simplicial::{matching_complex, SimpleGraph};
    use super::*;

    fn group(betti: usize, torsion: &[i64]) -> HomologyGroup {
        HomologyGroup {
            betti,
            torsion: torsion.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    #[test]
    fn m_c5_is_a_circle() {
        let h = reduced_homology(&matching_complex(&SimpleGraph::cycle(5)), 2).unwrap();
        assert_eq!(h, vec![group(0, &[]), group(1, &[]), group(0, &[])]);
    }

    #[test]
    fn m_l4_disconnected() {
        let m = matching_complex(&SimpleGraph::linear(4));
        assert_eq!(homological_connectivity(&m, 3).unwrap(), -1);
        assert_eq!(grounded_bound(&m).unwrap(), -1);
    }

    #[test]
    fn m_k7_torsion() {
        let h = reduced_homology(&matching_complex(&SimpleGraph::complete(7)), 2).unwrap();
        assert_eq!(h[0], group(0, &[]));
        assert_eq!(h[1], group(0, &[3]));
    }

    #[test]
    fn cone_certificate() {
        let x = SimplicialComplex::from_simplices(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![0, 2]],
        )
        .unwrap();
        assert_eq!(grounded_bound(&x).unwrap(), i64::MAX);
        assert_eq!(homological_connectivity(&x, 2).unwrap(), 2);
    }

    #[test]
    fn empty_complex() {
        let e = SimplicialComplex::empty();
        assert_eq!(homological_connectivity(&e, 3).unwrap(), -2);
        assert_eq!(grounded_bound(&e).unwrap(), -2);
    }
}
