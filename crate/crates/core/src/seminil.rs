//! Combinatorial labels for irreducible components of the strictly
//! seminilpotent variety, and the matching count check against graded ranks.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::free_algebra::AlgebraError;
use crate::gkm::SerrePresentation;
use crate::quiver::{DimVector, Quiver};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeminilError {
    #[error("compositions have different weights ({0} and {1})")]
    WeightMismatch(u32, u32),
    #[error("unknown root system `{0}` (known: A2, A3)")]
    UnknownRootSystem(String),
    #[error("dimension vector has {got} entries, root system has rank {rank}")]
    RankMismatch { rank: usize, got: usize },
    #[error("quiver has {0} vertices; expected count = graded rank, no independent oracle")]
    MultiVertex(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    /// `None` if some part is zero.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        parts.iter().all(|&p| p > 0).then_some(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Sum of the last `len` parts.
    fn tail(&self, len: usize) -> u32 {
        self.0.iter().rev().take(len).sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// `None` unless the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// All compositions of `d`; the empty one for `d = 0`.
pub fn compositions(d: u32) -> Vec<Composition> {
    if d == 0 {
        return vec![Composition(Vec::new())];
    }
    let mut out = Vec::with_capacity(1 << (d - 1));
    for first in (1..=d).rev() {
        for rest in compositions(d - first) {
            let mut v = vec![first];
            v.extend_from_slice(&rest.0);
            out.push(Composition(v));
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| b.0.cmp(&a.0)));
    out
}

/// All partitions of `d`, largest first part first.
pub fn partitions(d: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            prefix.push(p);
            go(rem - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Tail-sum order with compositions aligned on the right: `c <= c'` iff the
/// sum of the last `t` parts of `c` is at most that of `c'` for every `t`.
pub fn composition_dominance_leq(c: &Composition, other: &Composition) -> Result<bool, SeminilError> {
    if c.weight() != other.weight() {
        return Err(SeminilError::WeightMismatch(c.weight(), other.weight()));
    }
    let len = c.0.len().max(other.0.len());
    Ok((1..=len).all(|t| c.tail(t) <= other.tail(t)))
}

/// Irreducible component count for the one-vertex quiver with `g` loops.
pub fn component_count_one_vertex(g: usize, d: u32) -> u64 {
    match (g, d) {
        (_, 0) | (0, _) => 1,
        (1, _) => partitions(d).len() as u64,
        _ => compositions(d).len() as u64,
    }
}

/// Positive roots of a named finite type, as coordinate vectors.
pub fn positive_roots(system: &str) -> Result<Vec<Vec<u32>>, SeminilError> {
    match system.to_ascii_uppercase().as_str() {
        "A2" => Ok(vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
        "A3" => Ok(vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ]),
        _ => Err(SeminilError::UnknownRootSystem(system.to_string())),
    }
}

/// Number of multisets of positive roots summing to `d`.
pub fn kostant_count(system: &str, d: &[u32]) -> Result<u64, SeminilError> {
    let roots = positive_roots(system)?;
    if d.len() != roots[0].len() {
        return Err(SeminilError::RankMismatch { rank: roots[0].len(), got: d.len() });
    }
    fn go(roots: &[Vec<u32>], rem: &mut Vec<u32>) -> u64 {
        let Some((first, rest)) = roots.split_first() else {
            return u64::from(rem.iter().all(|&x| x == 0));
        };
        let mut total = go(rest, rem);
        let mut taken = 0;
        while first.iter().zip(rem.iter()).all(|(r, x)| r <= x) {
            for (x, r) in rem.iter_mut().zip(first) {
                *x -= r;
            }
            taken += 1;
            total += go(rest, rem);
        }
        for (x, r) in rem.iter_mut().zip(first) {
            *x += r * taken;
        }
        total
    }
    Ok(go(&roots, &mut d.to_vec()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub d: u32,
    pub graded_dim: u64,
    pub components: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterReport {
    pub loops: usize,
    pub rows: Vec<CharacterRow>,
}

impl CharacterReport {
    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| r.graded_dim == r.components)
    }
}

/// Compares the classical graded dimension with the component count for
/// every `d <= max_d` on a one-vertex quiver.
pub fn character_identity_check(q: &Quiver, max_d: u32) -> Result<CharacterReport, SeminilError> {
    if q.vertex_count() != 1 {
        return Err(SeminilError::MultiVertex(q.vertex_count()));
    }
    let g = q.loops_at(0);
    let p = SerrePresentation::classical(q, max_d);
    let rows = (0..=max_d)
        .map(|d| {
            Ok(CharacterRow {
                d,
                graded_dim: p.graded_dimension(&DimVector(vec![d]))? as u64,
                components: component_count_one_vertex(g, d),
            })
        })
        .collect::<Result<_, SeminilError>>()?;
    Ok(CharacterReport { loops: g, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[u32]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    /// Euler's pentagonal recurrence for p(n).
    fn pentagonal(n: u32) -> u64 {
        let mut p = vec![1i64];
        for m in 1..=n as i64 {
            let mut acc = 0;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[(m - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    acc += sign * p[(m - g2) as usize];
                }
            }
            p.push(acc);
        }
        p[n as usize] as u64
    }

    #[test]
    fn enumerations() {
        let c3: Vec<Vec<u32>> = compositions(3).into_iter().map(|x| x.0).collect();
        assert_eq!(c3, vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(compositions(0), vec![Composition(vec![])]);
        for d in 1..=12 {
            let cs = compositions(d);
            assert_eq!(cs.len(), 1 << (d - 1));
            let set: std::collections::BTreeSet<_> = cs.iter().collect();
            assert_eq!(set.len(), cs.len());
            assert!(cs.iter().all(|x| x.weight() == d));
        }
        for d in 0..=15 {
            let ps = partitions(d);
            assert_eq!(ps.len() as u64, pentagonal(d), "d={d}");
            assert!(ps.iter().all(|p| Partition::new(p.0.clone()).is_some()));
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(!composition_dominance_leq(&c(&[1, 2]), &c(&[2, 1])).unwrap());
        assert!(composition_dominance_leq(&c(&[2, 1]), &c(&[1, 2])).unwrap());
        assert!(composition_dominance_leq(&c(&[1, 1, 1]), &c(&[3])).unwrap());
        assert!(!composition_dominance_leq(&c(&[3]), &c(&[1, 1, 1])).unwrap());
        assert_eq!(
            composition_dominance_leq(&c(&[1]), &c(&[2])),
            Err(SeminilError::WeightMismatch(1, 2))
        );
    }

    #[test]
    fn dominance_is_partial_order() {
        for d in 0..=6 {
            let cs = compositions(d);
            let le = |a: &Composition, b: &Composition| composition_dominance_leq(a, b).unwrap();
            for a in &cs {
                assert!(le(a, a));
                for b in &cs {
                    if le(a, b) && le(b, a) {
                        assert_eq!(a, b);
                    }
                    for x in &cs {
                        if le(a, b) && le(b, x) {
                            assert!(le(a, x));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn component_counts() {
        assert_eq!(component_count_one_vertex(0, 7), 1);
        assert_eq!(component_count_one_vertex(1, 4), 5);
        assert_eq!(component_count_one_vertex(2, 5), 16);
        assert_eq!(component_count_one_vertex(3, 0), 1);
    }

    #[test]
    fn kostant() {
        assert_eq!(kostant_count("A2", &[1, 1]).unwrap(), 2);
        assert_eq!(kostant_count("A2", &[2, 2]).unwrap(), 3);
        assert_eq!(kostant_count("A3", &[0, 0, 0]).unwrap(), 1);
        assert_eq!(kostant_count("A3", &[1, 1, 1]).unwrap(), 4);
        assert!(matches!(kostant_count("B2", &[1, 1]), Err(SeminilError::UnknownRootSystem(_))));
        assert!(kostant_count("A2", &[1]).is_err());
    }

    #[test]
    fn character_identity() {
        for g in 0..=3 {
            let r = character_identity_check(&Quiver::one_vertex(g), 5).unwrap();
            assert!(r.ok(), "g={g}: {r:?}");
        }
        let err = character_identity_check(&Quiver::linear(2), 3).unwrap_err();
        assert!(err.to_string().contains("no independent oracle"));
    }
}
