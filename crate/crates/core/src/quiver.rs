//! Quivers, dimension vectors, the generator index set and sign twists.
//!
//! A quiver is stored with its vertices in declaration order; that order
//! fixes the coordinates of every [`DimVector`] built against it.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("arrow {index} refers to undeclared vertex `{vertex}`")]
    UnknownVertex { index: usize, vertex: String },
    #[error("dimension vector has {got} entries, quiver has {expected} vertices")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no vertex named `{0}`")]
    NoSuchVertex(String),
    #[error("twist matrix must be {n}x{n}")]
    TwistShape { n: usize },
}

/// Loop-count classification of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// No loops.
    Real,
    /// Exactly one loop.
    Isotropic,
    /// Two or more loops.
    Hyperbolic,
}

impl VertexKind {
    pub fn is_real(self) -> bool {
        self == VertexKind::Real
    }

    pub fn is_imaginary(self) -> bool {
        !self.is_real()
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexKind::Real => "real",
            VertexKind::Isotropic => "isotropic",
            VertexKind::Hyperbolic => "hyperbolic",
        };
        f.write_str(s)
    }
}

/// On-disk form of a quiver: `{"vertices": [...], "arrows": [[s, t], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
}

/// Finite directed multigraph. Loops and parallel arrows are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    names: Vec<String>,
    index: HashMap<String, usize>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S)]) -> Result<Self, QuiverError> {
        let mut names = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.as_ref().to_string();
            if index.insert(v.clone(), names.len()).is_some() {
                return Err(QuiverError::DuplicateVertex(v));
            }
            names.push(v);
        }
        let mut resolved = Vec::with_capacity(arrows.len());
        for (k, (s, t)) in arrows.iter().enumerate() {
            let lookup = |name: &str| {
                index.get(name).copied().ok_or_else(|| QuiverError::UnknownVertex {
                    index: k,
                    vertex: name.to_string(),
                })
            };
            resolved.push((lookup(s.as_ref())?, lookup(t.as_ref())?));
        }
        Ok(Quiver { names, index, arrows: resolved })
    }

    pub fn from_spec(spec: &QuiverSpec) -> Result<Self, QuiverError> {
        Quiver::new(&spec.vertices, &spec.arrows)
    }

    pub fn to_spec(&self) -> QuiverSpec {
        QuiverSpec {
            vertices: self.names.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| (self.names[s].clone(), self.names[t].clone()))
                .collect(),
        }
    }

    /// One vertex `v` carrying `loops` loops.
    pub fn one_vertex(loops: usize) -> Self {
        let arrows = vec![("v", "v"); loops];
        Quiver::new(&["v"], &arrows).expect("well-formed")
    }

    /// Type A_n with arrows `v1 -> v2 -> ... -> vn`.
    pub fn linear(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let arrows: Vec<(String, String)> =
            names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        Quiver::new(&names, &arrows).expect("well-formed")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.index.get(name).copied().ok_or_else(|| QuiverError::NoSuchVertex(name.to_string()))
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.arrows.iter().filter(|&&(s, t)| s == v && t == v).count()
    }

    /// Number of arrows between two distinct vertices, in either direction.
    pub fn arrows_between(&self, a: usize, b: usize) -> usize {
        self.arrows
            .iter()
            .filter(|&&(s, t)| (s == a && t == b) || (s == b && t == a))
            .count()
    }

    pub fn kind(&self, v: usize) -> VertexKind {
        match self.loops_at(v) {
            0 => VertexKind::Real,
            1 => VertexKind::Isotropic,
            _ => VertexKind::Hyperbolic,
        }
    }

    pub fn classify_vertices(&self) -> Vec<(String, VertexKind)> {
        (0..self.vertex_count()).map(|v| (self.names[v].clone(), self.kind(v))).collect()
    }

    pub fn real_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.kind(v).is_real()).collect()
    }

    pub fn zero(&self) -> DimVector {
        DimVector::zero(self.vertex_count())
    }

    pub fn basis(&self, v: usize) -> DimVector {
        DimVector::basis(self.vertex_count(), v)
    }

    pub fn dim(&self, coords: &[u32]) -> Result<DimVector, QuiverError> {
        if coords.len() != self.vertex_count() {
            return Err(QuiverError::DimensionMismatch {
                expected: self.vertex_count(),
                got: coords.len(),
            });
        }
        Ok(DimVector(coords.to_vec()))
    }

    fn check(&self, d: &DimVector) -> Result<(), QuiverError> {
        if d.len() != self.vertex_count() {
            return Err(QuiverError::DimensionMismatch {
                expected: self.vertex_count(),
                got: d.len(),
            });
        }
        Ok(())
    }

    /// Euler form `sum_i d_i e_i - sum_{i->j} d_i e_j`.
    pub fn euler_form(&self, d: &DimVector, e: &DimVector) -> Result<i64, QuiverError> {
        self.check(d)?;
        self.check(e)?;
        Ok(self.euler_unchecked(d, e))
    }

    fn euler_unchecked(&self, d: &DimVector, e: &DimVector) -> i64 {
        let diag: i64 = d.0.iter().zip(&e.0).map(|(&a, &b)| a as i64 * b as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(s, t)| d.0[s] as i64 * e.0[t] as i64).sum();
        diag - off
    }

    pub fn symmetrized_form(&self, d: &DimVector, e: &DimVector) -> Result<i64, QuiverError> {
        Ok(self.euler_form(d, e)? + self.euler_form(e, d)?)
    }

    /// Matrix of the Euler form on simple roots, `m[i][j] = <e_i, e_j>`.
    pub fn euler_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut m = vec![vec![0i64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += 1;
        }
        for &(s, t) in &self.arrows {
            m[s][t] -= 1;
        }
        IntMatrix(m)
    }

    /// Matrix of the symmetrised Euler form on simple roots.
    pub fn symmetrized_matrix(&self) -> IntMatrix {
        let e = self.euler_matrix();
        let n = self.vertex_count();
        IntMatrix(
            (0..n).map(|i| (0..n).map(|j| e.0[i][j] + e.0[j][i]).collect()).collect(),
        )
    }

    /// `(i, j) = n m (1_{i'}, 1_{j'})` for `i = (i', n)`, `j = (j', m)`.
    pub fn generator_pairing(&self, i: GeneratorIndex, j: GeneratorIndex) -> i64 {
        let a = self.basis(i.vertex);
        let b = self.basis(j.vertex);
        let base = self.euler_unchecked(&a, &b) + self.euler_unchecked(&b, &a);
        i.level as i64 * j.level as i64 * base
    }

    /// Generators of weight at most `d` coordinatewise, ordered by (vertex, level).
    pub fn generators_within(&self, d: &DimVector) -> Vec<GeneratorIndex> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            let cap = if self.kind(v).is_real() { d.0[v].min(1) } else { d.0[v] };
            for level in 1..=cap {
                out.push(GeneratorIndex { vertex: v, level });
            }
        }
        out
    }

    /// Generators whose total weight is at most `bound`.
    pub fn generators_up_to(&self, bound: u32) -> Vec<GeneratorIndex> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            let cap = if self.kind(v).is_real() { bound.min(1) } else { bound };
            for level in 1..=cap {
                out.push(GeneratorIndex { vertex: v, level });
            }
        }
        out
    }

    pub fn generator(&self, vertex: usize, level: u32) -> Option<GeneratorIndex> {
        if vertex >= self.vertex_count() || level == 0 {
            return None;
        }
        if self.kind(vertex).is_real() && level != 1 {
            return None;
        }
        Some(GeneratorIndex { vertex, level })
    }

    /// The twist `Psi = (-1)^<-,->`.
    pub fn default_twist(&self) -> TwistForm {
        TwistForm { psi: self.euler_matrix() }
    }

    /// Checks `psi(d,e) + psi(e,d) = (d,e) mod 2` on all pairs of simple roots.
    pub fn validate_twist(&self, t: &TwistForm) -> Result<(), TwistViolation> {
        let n = self.vertex_count();
        let sym = self.symmetrized_matrix();
        for d in 0..n {
            for e in 0..n {
                let lhs = t.psi.0[d][e] + t.psi.0[e][d];
                if (lhs - sym.0[d][e]).rem_euclid(2) != 0 {
                    return Err(TwistViolation {
                        first: self.names[d].clone(),
                        second: self.names[e].clone(),
                        pairing: sym.0[d][e],
                    });
                }
            }
        }
        Ok(())
    }
}

/// Non-negative grading vector, dense in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(n: usize) -> Self {
        DimVector(vec![0; n])
    }

    pub fn basis(n: usize, v: usize) -> Self {
        let mut d = vec![0; n];
        d[v] = 1;
        DimVector(d)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn scaled(&self, k: u32) -> Self {
        DimVector(self.0.iter().map(|&x| x * k).collect())
    }

    /// `self <= other` coordinatewise.
    pub fn le(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        if !other.le(self) {
            return None;
        }
        Some(DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// All vectors with `0 <= e <= self` coordinatewise, in lexicographic order.
    pub fn below(&self) -> Vec<DimVector> {
        let mut out = vec![Vec::new()];
        for &c in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (c as usize + 1));
            for prefix in &out {
                for x in 0..=c {
                    let mut p = prefix.clone();
                    p.push(x);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(DimVector).collect()
    }

    /// All vectors of length `n` with total degree at most `bound`, ordered by
    /// total degree then lexicographically descending.
    pub fn all_up_to(n: usize, bound: u32) -> Vec<DimVector> {
        let mut out = DimVector(vec![bound; n])
            .below()
            .into_iter()
            .filter(|d| d.total() <= bound)
            .collect::<Vec<_>>();
        out.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| b.0.cmp(&a.0)));
        out
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVector {
    type Output = DimVector;
    fn sub(self, rhs: &DimVector) -> DimVector {
        self.checked_sub(rhs).expect("dimension vector underflow")
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Element `(i', n)` of the generator index set; its weight is `n e_{i'}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorIndex {
    pub vertex: usize,
    pub level: u32,
}

impl GeneratorIndex {
    pub fn new(vertex: usize, level: u32) -> Self {
        GeneratorIndex { vertex, level }
    }

    pub fn weight(&self, n: usize) -> DimVector {
        let mut d = vec![0; n];
        d[self.vertex] = self.level;
        DimVector(d)
    }
}

/// Sum of the weights of a sequence of generators.
pub fn word_weight(letters: &[GeneratorIndex], n: usize) -> DimVector {
    let mut d = vec![0; n];
    for l in letters {
        d[l.vertex] += l.level;
    }
    DimVector(d)
}

/// Square integer matrix indexed by vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntMatrix(pub Vec<Vec<i64>>);

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        IntMatrix(vec![vec![0; n]; n])
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        IntMatrix((0..n).map(|i| (0..n).map(|j| self.0[j][i]).collect()).collect())
    }

    pub fn plus(&self, other: &IntMatrix) -> Self {
        IntMatrix(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
                .collect(),
        )
    }

    /// `d^T M e`.
    pub fn eval(&self, d: &DimVector, e: &DimVector) -> i64 {
        let mut acc = 0i64;
        for (i, &di) in d.0.iter().enumerate() {
            if di == 0 {
                continue;
            }
            for (j, &ej) in e.0.iter().enumerate() {
                acc += di as i64 * self.0[i][j] * ej as i64;
            }
        }
        acc
    }
}

/// Sign-valued bilinear form `Psi(d, e) = (-1)^{d^T psi e}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistForm {
    pub psi: IntMatrix,
}

impl TwistForm {
    pub fn new(psi: IntMatrix, n: usize) -> Result<Self, QuiverError> {
        if psi.size() != n || psi.0.iter().any(|r| r.len() != n) {
            return Err(QuiverError::TwistShape { n });
        }
        Ok(TwistForm { psi })
    }

    pub fn trivial(n: usize) -> Self {
        TwistForm { psi: IntMatrix::zero(n) }
    }

    pub fn exponent(&self, d: &DimVector, e: &DimVector) -> i64 {
        self.psi.eval(d, e)
    }

    /// `+1` or `-1`.
    pub fn sign(&self, d: &DimVector, e: &DimVector) -> i64 {
        if self.exponent(d, e).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

/// First pair of simple roots on which a twist fails the parity condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Error)]
#[error("twist violates parity condition at ({first}, {second}): symmetrised pairing {pairing}")]
pub struct TwistViolation {
    pub first: String,
    pub second: String,
    pub pairing: i64,
}
