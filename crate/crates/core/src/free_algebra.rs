//! The graded free associative algebra on generator letters, and dense
//! per-degree row reduction over an exact field.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffs::Scalar;
use crate::quiver::{word_weight, DimVector, GeneratorIndex, Quiver};

/// Largest total degree for which words are enumerated.
pub const MAX_TOTAL_DEGREE: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("total degree {total} exceeds the limit {limit}")]
    BoundExceeded { total: u32, limit: u32 },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: DimVector, found: DimVector },
    #[error("bad serialized polynomial: {0}")]
    Decode(String),
    #[error("vertex {vertex} is not real")]
    NotReal { vertex: String },
    #[error("generator level {level} at vertex {vertex} is not available")]
    LevelUnavailable { vertex: String, level: u32 },
}

/// Finite sequence of generators; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<GeneratorIndex>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GeneratorIndex) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, n: usize) -> DimVector {
        word_weight(&self.0, n)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|g| format!("e[{},{}]", q.vertex_name(g.vertex), g.level))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Degree-lex: shorter words first, then lexicographic in (vertex, level).
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order on the words of one degree, fixing pivot choice in row reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// [`Word`]'s own degree-lex order.
    #[default]
    DegLex,
    /// Degree-lex with the letter order reversed.
    DegLexReversedLetters,
}

impl MonomialOrder {
    pub fn compare(self, a: &Word, b: &Word) -> Ordering {
        match self {
            MonomialOrder::DegLex => a.cmp(b),
            MonomialOrder::DegLexReversedLetters => a
                .len()
                .cmp(&b.len())
                .then_with(|| {
                    for (x, y) in a.0.iter().zip(&b.0) {
                        match y.cmp(x) {
                            Ordering::Equal => continue,
                            o => return o,
                        }
                    }
                    Ordering::Equal
                }),
        }
    }
}

/// All words of weight exactly `d`, ascending in degree-lex order.
pub fn enumerate_words(q: &Quiver, d: &DimVector) -> Result<Vec<Word>, AlgebraError> {
    let total = d.total();
    if total > MAX_TOTAL_DEGREE {
        return Err(AlgebraError::BoundExceeded { total, limit: MAX_TOTAL_DEGREE });
    }
    if d.len() != q.vertex_count() {
        return Err(AlgebraError::WrongDegree { expected: q.zero(), found: d.clone() });
    }
    let letters = q.generators_within(d);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill_words(&letters, &mut d.0.clone(), &mut prefix, &mut out);
    out.sort();
    Ok(out)
}

fn fill_words(
    letters: &[GeneratorIndex],
    remaining: &mut Vec<u32>,
    prefix: &mut Vec<GeneratorIndex>,
    out: &mut Vec<Word>,
) {
    if remaining.iter().all(|&x| x == 0) {
        out.push(Word(prefix.clone()));
        return;
    }
    for &g in letters {
        if remaining[g.vertex] >= g.level {
            remaining[g.vertex] -= g.level;
            prefix.push(g);
            fill_words(letters, remaining, prefix, out);
            prefix.pop();
            remaining[g.vertex] += g.level;
        }
    }
}

/// Finitely supported linear combination of words.
#[derive(Clone, PartialEq)]
pub struct NCPoly<S: Scalar> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for NCPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> fmt::Debug for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(w, c)| (&w.0, c))).finish()
    }
}

impl<S: Scalar> NCPoly<S> {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), S::one())
    }

    pub fn letter(g: GeneratorIndex) -> Self {
        Self::monomial(Word::letter(g), S::one())
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, S)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                let s = slot.plus(&c);
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.negated())).collect() }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.times(s))).collect() }
    }

    /// Concatenation product, extended bilinearly.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.times(c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.multiply(self))
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.multiply(other).sub(&other.multiply(self))
    }

    /// The common weight of all terms, or `None` when the terms disagree.
    /// The zero polynomial is homogeneous of every degree and returns `None`.
    pub fn degree(&self, n: usize) -> Option<DimVector> {
        let mut it = self.terms.keys().map(|w| w.weight(n));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: &DimVector) -> bool {
        self.terms.keys().all(|w| &w.weight(d.len()) == d)
    }

    pub fn map_coeffs<T: Scalar, F: Fn(&S) -> T>(&self, f: F) -> NCPoly<T> {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| format!("({c}) {}", w.render(q)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `[{"word": [[vertex, level], ...], "coeff": scalar}, ...]`.
    pub fn to_json(&self, q: &Quiver) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<serde_json::Value> = w
                    .0
                    .iter()
                    .map(|g| serde_json::json!([q.vertex_name(g.vertex), g.level]))
                    .collect();
                serde_json::json!({"word": word, "coeff": c.to_json()})
            })
            .collect();
        serde_json::Value::Array(items)
    }

    pub fn from_json(q: &Quiver, v: &serde_json::Value) -> Result<Self, AlgebraError> {
        let bad = |m: &str| AlgebraError::Decode(m.to_string());
        let items = v.as_array().ok_or_else(|| bad("expected a list of terms"))?;
        let mut out = Self::zero();
        for item in items {
            let word = item.get("word").and_then(|w| w.as_array()).ok_or_else(|| bad("word"))?;
            let mut letters = Vec::with_capacity(word.len());
            for l in word {
                let name = l.get(0).and_then(|x| x.as_str()).ok_or_else(|| bad("vertex"))?;
                let level = l.get(1).and_then(|x| x.as_u64()).ok_or_else(|| bad("level"))?;
                let vertex = q.vertex_index(name).map_err(|e| AlgebraError::Decode(e.to_string()))?;
                let g = q.generator(vertex, level as u32).ok_or_else(|| {
                    AlgebraError::LevelUnavailable { vertex: name.to_string(), level: level as u32 }
                })?;
                letters.push(g);
            }
            let c = item.get("coeff").and_then(S::from_json).ok_or_else(|| bad("coeff"))?;
            out.add_term(Word(letters), c);
        }
        Ok(out)
    }
}

/// `ad(a)^k (b)` with `ad(a)(x) = ax - xa`.
pub fn ad_power<S: Scalar>(a: &NCPoly<S>, k: u32, b: &NCPoly<S>) -> NCPoly<S> {
    (0..k).fold(b.clone(), |x, _| a.commutator(&x))
}

/// Reduced row echelon form of a subspace of one graded piece of the free
/// algebra, stored densely over that degree's words.
///
/// Columns are listed in decreasing monomial order, so each pivot is the
/// largest word of its row.
#[derive(Debug, Clone)]
pub struct GradedMatrix<S: Scalar> {
    degree: DimVector,
    order: MonomialOrder,
    columns: Vec<Word>,
    column_of: HashMap<Word, usize>,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> GradedMatrix<S> {
    pub fn empty(q: &Quiver, d: &DimVector, order: MonomialOrder) -> Result<Self, AlgebraError> {
        let mut columns = enumerate_words(q, d)?;
        columns.sort_by(|a, b| order.compare(b, a));
        let column_of = columns.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(GradedMatrix { degree: d.clone(), order, columns, column_of, rows: Vec::new(), pivots: Vec::new() })
    }

    pub fn degree(&self) -> &DimVector {
        &self.degree
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn free_dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.free_dimension()
    }

    /// Words of this degree, in decreasing monomial order.
    pub fn columns(&self) -> &[Word] {
        &self.columns
    }

    pub fn pivot_words(&self) -> Vec<Word> {
        self.pivots.iter().map(|&c| self.columns[c].clone()).collect()
    }

    /// Non-pivot words, in increasing monomial order.
    pub fn standard_monomials(&self) -> Vec<Word> {
        let mut is_pivot = vec![false; self.columns.len()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut out: Vec<Word> = self
            .columns
            .iter()
            .zip(is_pivot)
            .filter(|(_, p)| !p)
            .map(|(w, _)| w.clone())
            .collect();
        out.reverse();
        out
    }

    pub fn vectorize(&self, p: &NCPoly<S>) -> Result<Vec<S>, AlgebraError> {
        let mut v = vec![S::zero(); self.columns.len()];
        for (w, c) in p.terms() {
            let &i = self.column_of.get(w).ok_or_else(|| AlgebraError::WrongDegree {
                expected: self.degree.clone(),
                found: w.weight(self.degree.len()),
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn devectorize(&self, v: &[S]) -> NCPoly<S> {
        NCPoly::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.columns[i].clone(), c.clone())),
        )
    }

    fn reduce_vec(&self, v: &mut [S]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.minus(&f.times(r));
                }
            }
        }
    }

    /// Adds a vector to the span; returns whether the rank grew.
    pub fn insert_vec(&mut self, mut v: Vec<S>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce_vec(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("non-zero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = x.times(&inv);
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = x.minus(&f.times(r));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn insert(&mut self, p: &NCPoly<S>) -> Result<bool, AlgebraError> {
        let v = self.vectorize(p)?;
        Ok(self.insert_vec(v))
    }

    /// Representative of `p` modulo the span, supported on standard monomials.
    pub fn normal_form(&self, p: &NCPoly<S>) -> Result<NCPoly<S>, AlgebraError> {
        let mut v = self.vectorize(p)?;
        self.reduce_vec(&mut v);
        Ok(self.devectorize(&v))
    }

    pub fn contains(&self, p: &NCPoly<S>) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// The reduced basis rows as polynomials.
    pub fn basis(&self) -> Vec<NCPoly<S>> {
        self.rows.iter().map(|r| self.devectorize(r)).collect()
    }
}

/// Rank, pivot words and reduced basis of a span.
#[derive(Debug, Clone)]
pub struct SpanRank<S: Scalar> {
    pub rank: usize,
    pub pivots: Vec<Word>,
    pub basis: Vec<NCPoly<S>>,
}

pub fn span_rank<S: Scalar>(
    q: &Quiver,
    polys: &[NCPoly<S>],
    d: &DimVector,
) -> Result<SpanRank<S>, AlgebraError> {
    let mut m = GradedMatrix::empty(q, d, MonomialOrder::DegLex)?;
    for p in polys {
        if !p.is_homogeneous_of(d) {
            return Err(AlgebraError::Inhomogeneous);
        }
        m.insert(p)?;
    }
    Ok(SpanRank { rank: m.rank(), pivots: m.pivot_words(), basis: m.basis() })
}

/// Degree-`d` piece of the two-sided ideal generated by `generators`, as the
/// span of all `w r w'` with `weight(w) + deg(r) + weight(w') = d`.
pub fn ideal_graded_piece<S: Scalar>(
    q: &Quiver,
    generators: &[NCPoly<S>],
    d: &DimVector,
    order: MonomialOrder,
) -> Result<GradedMatrix<S>, AlgebraError> {
    let n = q.vertex_count();
    let mut m = GradedMatrix::empty(q, d, order)?;
    let mut words_cache: HashMap<DimVector, Vec<Word>> = HashMap::new();
    for r in generators {
        if r.is_zero() {
            continue;
        }
        let deg = r.degree(n).ok_or(AlgebraError::Inhomogeneous)?;
        let Some(rest) = d.checked_sub(&deg) else {
            continue;
        };
        for left in rest.below() {
            let right = &rest - &left;
            for part in [&left, &right] {
                if !words_cache.contains_key(part) {
                    words_cache.insert(part.clone(), enumerate_words(q, part)?);
                }
            }
            for wl in &words_cache[&left] {
                for wr in &words_cache[&right] {
                    let lhs = NCPoly::monomial(wl.clone(), S::one());
                    let rhs = NCPoly::monomial(wr.clone(), S::one());
                    m.insert(&lhs.multiply(r).multiply(&rhs))?;
                    if m.is_full() {
                        return Ok(m);
                    }
                }
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{rat, BigRational};
    use proptest::prelude::*;

    type P = NCPoly<BigRational>;

    fn a2() -> Quiver {
        Quiver::new(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn g(v: usize, l: u32) -> GeneratorIndex {
        GeneratorIndex::new(v, l)
    }

    fn e(v: usize) -> P {
        P::letter(g(v, 1))
    }

    fn w(letters: &[(usize, u32)]) -> Word {
        Word(letters.iter().map(|&(v, l)| g(v, l)).collect())
    }

    #[test]
    fn words_a2() {
        let q = a2();
        let ws = enumerate_words(&q, &DimVector(vec![1, 1])).unwrap();
        assert_eq!(ws, vec![w(&[(0, 1), (1, 1)]), w(&[(1, 1), (0, 1)])]);
        assert_eq!(enumerate_words(&q, &q.zero()).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn words_jordan() {
        let q = Quiver::one_vertex(1);
        let ws = enumerate_words(&q, &DimVector(vec![3])).unwrap();
        assert_eq!(
            ws,
            vec![w(&[(0, 3)]), w(&[(0, 1), (0, 2)]), w(&[(0, 2), (0, 1)]), w(&[(0, 1), (0, 1), (0, 1)])]
        );
        // compositions of d
        for d in 1..=8u32 {
            assert_eq!(enumerate_words(&q, &DimVector(vec![d])).unwrap().len(), 1 << (d - 1));
        }
        assert!(matches!(
            enumerate_words(&q, &DimVector(vec![MAX_TOTAL_DEGREE + 1])),
            Err(AlgebraError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn real_vertex_only_level_one() {
        let q = Quiver::one_vertex(0);
        let ws = enumerate_words(&q, &DimVector(vec![3])).unwrap();
        assert_eq!(ws, vec![w(&[(0, 1), (0, 1), (0, 1)])]);
    }

    #[test]
    fn products() {
        let (a, b) = (e(0), e(1));
        assert_eq!(a.multiply(&b), P::monomial(w(&[(0, 1), (1, 1)]), rat(1, 1)));
        let lhs = a.add(&b).multiply(&a.sub(&b));
        let expect = P::from_terms([
            (w(&[(0, 1), (0, 1)]), rat(1, 1)),
            (w(&[(0, 1), (1, 1)]), rat(-1, 1)),
            (w(&[(1, 1), (0, 1)]), rat(1, 1)),
            (w(&[(1, 1), (1, 1)]), rat(-1, 1)),
        ]);
        assert_eq!(lhs, expect);
        assert_eq!(lhs.multiply(&P::one()), lhs);
    }

    #[test]
    fn ad_powers() {
        let (a, b) = (e(0), e(1));
        assert_eq!(ad_power(&a, 0, &b), b);
        assert_eq!(
            ad_power(&a, 1, &b),
            P::from_terms([(w(&[(0, 1), (1, 1)]), rat(1, 1)), (w(&[(1, 1), (0, 1)]), rat(-1, 1))])
        );
        assert_eq!(
            ad_power(&a, 2, &b),
            P::from_terms([
                (w(&[(0, 1), (0, 1), (1, 1)]), rat(1, 1)),
                (w(&[(0, 1), (1, 1), (0, 1)]), rat(-2, 1)),
                (w(&[(1, 1), (0, 1), (0, 1)]), rat(1, 1)),
            ])
        );
    }

    #[test]
    fn span_ranks() {
        let q = a2();
        let d = DimVector(vec![1, 1]);
        let (a, b) = (e(0), e(1));
        let c = a.commutator(&b);
        let s = a.multiply(&b).add(&b.multiply(&a));
        assert_eq!(span_rank(&q, &[c.clone(), s], &d).unwrap().rank, 2);
        assert_eq!(span_rank(&q, &[c.clone(), c.scale(&rat(2, 1))], &d).unwrap().rank, 1);
        assert_eq!(span_rank::<BigRational>(&q, &[], &d).unwrap().rank, 0);
        assert!(matches!(
            span_rank(&q, &[a.add(&c)], &d),
            Err(AlgebraError::Inhomogeneous)
        ));
    }

    #[test]
    fn ideal_pieces() {
        let q = a2();
        let (a, b) = (e(0), e(1));
        let serre = vec![ad_power(&a, 2, &b), ad_power(&b, 2, &a)];
        let m = ideal_graded_piece(&q, &serre, &DimVector(vec![2, 1]), MonomialOrder::DegLex).unwrap();
        assert_eq!((m.free_dimension(), m.rank()), (3, 1));
        assert!(m.contains(&serre[0]).unwrap());
        let z = ideal_graded_piece(&q, &serre, &q.zero(), MonomialOrder::DegLex).unwrap();
        assert_eq!(z.rank(), 0);

        let j = Quiver::one_vertex(1);
        let (x1, x2) = (P::letter(g(0, 1)), P::letter(g(0, 2)));
        let comm = vec![x1.commutator(&x2)];
        let d2 = ideal_graded_piece(&j, &comm, &DimVector(vec![2]), MonomialOrder::DegLex).unwrap();
        assert_eq!((d2.free_dimension(), d2.rank()), (2, 0));
        let d3 = ideal_graded_piece(&j, &comm, &DimVector(vec![3]), MonomialOrder::DegLex).unwrap();
        assert_eq!((d3.free_dimension(), d3.rank()), (4, 1));
    }

    #[test]
    fn derivation_lemma() {
        // ad(a)^{M+1}(b) = ad(a)^{N+1}(c) = 0 forces ad(a)^{M+N+1}(bc) = 0.
        let q = Quiver::new(&["a", "b", "c"], &[]).unwrap();
        let (a, b, c) = (e(0), e(1), e(2));
        for m in 0..3u32 {
            for nn in 0..3u32 {
                let gens = vec![ad_power(&a, m + 1, &b), ad_power(&a, nn + 1, &c)];
                let target = ad_power(&a, m + nn + 1, &b.multiply(&c));
                let d = target.degree(3).unwrap();
                let piece = ideal_graded_piece(&q, &gens, &d, MonomialOrder::DegLex).unwrap();
                assert!(piece.contains(&target).unwrap(), "M={m} N={nn}");
                if m + nn > 0 {
                    let weaker = ad_power(&a, m + nn, &b.multiply(&c));
                    let dw = weaker.degree(3).unwrap();
                    let pw = ideal_graded_piece(&q, &gens, &dw, MonomialOrder::DegLex).unwrap();
                    assert!(!pw.contains(&weaker).unwrap(), "M={m} N={nn}");
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let q = a2();
        let p = ad_power(&e(0), 2, &e(1)).scale(&rat(1, 3));
        let v = p.to_json(&q);
        assert_eq!(v[0]["coeff"], serde_json::json!("1/3"));
        assert_eq!(P::from_json(&q, &v).unwrap(), p);
        assert!(P::from_json(&q, &serde_json::json!([{"word": [["z", 1]], "coeff": "1"}])).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        let word = proptest::collection::vec((0usize..2, 1u32..3), 0..3);
        proptest::collection::vec((word, -3i64..4), 0..4).prop_map(|ts| {
            P::from_terms(ts.into_iter().map(|(l, c)| (w(&l), rat(c, 1))))
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative_and_unital(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
            prop_assert_eq!(P::one().multiply(&x), x.clone());
            prop_assert_eq!(x.multiply(&P::one()), x);
        }

        #[test]
        fn weights_add(x in arb_poly(), y in arb_poly()) {
            let prod = x.multiply(&y);
            for (w, _) in prod.terms() {
                let ok = x.terms().any(|(u, _)| y.terms().any(|(v, _)| {
                    &u.concat(v) == w && (&u.weight(2) + &v.weight(2)) == w.weight(2)
                }));
                prop_assert!(ok);
            }
        }

        #[test]
        fn span_rank_ignores_input_order(seed in proptest::collection::vec((-2i64..3, -2i64..3, -2i64..3), 1..5)) {
            let q = Quiver::one_vertex(1);
            let d = DimVector(vec![3]);
            let words = enumerate_words(&q, &d).unwrap();
            let polys: Vec<P> = seed.iter().map(|&(x, y, z)| P::from_terms([
                (words[0].clone(), rat(x, 1)), (words[1].clone(), rat(y, 1)), (words[3].clone(), rat(z, 1)),
            ])).collect();
            let fwd = span_rank(&q, &polys, &d).unwrap();
            let mut rev = polys.clone();
            rev.reverse();
            let bwd = span_rank(&q, &rev, &d).unwrap();
            prop_assert_eq!(fwd.rank, bwd.rank);
            prop_assert_eq!(fwd.pivots, bwd.pivots);
        }

        #[test]
        fn ideal_rank_monotone(extra in proptest::collection::vec((-2i64..3, -2i64..3), 1..3)) {
            let q = a2();
            let (a, b) = (e(0), e(1));
            let base = vec![ad_power(&a, 2, &b)];
            let mut more = base.clone();
            for (x, y) in extra {
                more.push(a.multiply(&b).scale(&rat(x, 1)).add(&b.multiply(&a).scale(&rat(y, 1))));
            }
            let d = DimVector(vec![2, 2]);
            let r0 = ideal_graded_piece(&q, &base, &d, MonomialOrder::DegLex).unwrap().rank();
            let r1 = ideal_graded_piece(&q, &more, &d, MonomialOrder::DegLex).unwrap().rank();
            prop_assert!(r1 >= r0);
        }
    }
}
