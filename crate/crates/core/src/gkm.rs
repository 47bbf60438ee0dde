//! Serre presentations of the positive part of the algebra attached to a
//! quiver, classical (over `Q`) and quantum (over `Q(q)`), with per-degree
//! quotients, normal forms, divided powers and the `e~` generators.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::coeffs::{q_binomial, q_factorial, BigRational, LaurentPoly, RatFunc, Scalar};
use crate::free_algebra::{ad_power, AlgebraError, GradedMatrix, MonomialOrder, NCPoly, Word};
use crate::ncsf::s_from_psi_recursive;
use crate::quiver::{DimVector, GeneratorIndex, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Classical,
    Quantum,
    /// Quantum relations with `q` replaced by `-q`.
    QuantumNegQ,
    /// Caller-supplied relations.
    Custom,
}

/// `(j, i, N)` for each real `j` and `i != j` with `N = 1 - (j, i)` and
/// relation degree `N + level(i)` within `bound`.
fn ad_serre_triples(q: &Quiver, bound: u32) -> Vec<(GeneratorIndex, GeneratorIndex, u32)> {
    let gens = q.generators_up_to(bound);
    let mut out = Vec::new();
    for &j in gens.iter().filter(|g| q.kind(g.vertex).is_real()) {
        for &i in &gens {
            if i == j {
                continue;
            }
            let pairing = q.generator_pairing(j, i);
            let exp = 1 - pairing;
            if exp < 1 || exp as u32 + i.level > bound {
                continue;
            }
            out.push((j, i, exp as u32));
        }
    }
    out
}

fn commutator_pairs(q: &Quiver, bound: u32) -> Vec<(GeneratorIndex, GeneratorIndex)> {
    let gens = q.generators_up_to(bound);
    let mut out = Vec::new();
    for (a, &i) in gens.iter().enumerate() {
        for &j in &gens[a + 1..] {
            if i.level + j.level <= bound && q.generator_pairing(i, j) == 0 {
                out.push((i, j));
            }
        }
    }
    out
}

/// `ad(e_j)^{1-(j,i)}(e_i)` for real `j`, and `[e_i, e_j]` for orthogonal pairs.
pub fn serre_generators_classical(q: &Quiver, bound: u32) -> Vec<NCPoly<BigRational>> {
    let mut out = Vec::new();
    for (j, i, n) in ad_serre_triples(q, bound) {
        out.push(ad_power(&NCPoly::letter(j), n, &NCPoly::letter(i)));
    }
    for (i, j) in commutator_pairs(q, bound) {
        out.push(NCPoly::letter(i).commutator(&NCPoly::letter(j)));
    }
    out
}

/// `sum_k (-1)^k {N k}_q e_j^k e_i e_j^{N-k}` with `N = 1 - (j, i)`, and the
/// same commutators as the classical case.
pub fn serre_generators_quantum(q: &Quiver, bound: u32) -> Vec<NCPoly<RatFunc>> {
    let mut out = Vec::new();
    for (j, i, n) in ad_serre_triples(q, bound) {
        out.push(quantum_serre_element(j, i, n));
    }
    for (i, j) in commutator_pairs(q, bound) {
        out.push(NCPoly::letter(i).commutator(&NCPoly::letter(j)));
    }
    out
}

fn quantum_serre_element(j: GeneratorIndex, i: GeneratorIndex, n: u32) -> NCPoly<RatFunc> {
    let mut out = NCPoly::zero();
    for k in 0..=n {
        let b = q_binomial(n as i64, k as i64).expect("0 <= k <= n");
        let b = if k % 2 == 1 { b.neg() } else { b };
        let mut w = vec![j; k as usize];
        w.push(i);
        w.extend(std::iter::repeat_n(j, (n - k) as usize));
        out.add_term(Word(w), RatFunc::from_laurent(b));
    }
    out
}

/// Quantum relations with `q -> -q` applied to every coefficient.
pub fn serre_generators_quantum_neg_q(q: &Quiver, bound: u32) -> Vec<NCPoly<RatFunc>> {
    serre_generators_quantum(q, bound)
        .into_iter()
        .map(|r| r.map_coeffs(RatFunc::substitute_neg_q))
        .collect()
}

/// One graded piece of the quotient: the echelonised ideal piece and the
/// standard monomials it leaves.
#[derive(Debug, Clone)]
pub struct GradedQuotient<S: Scalar> {
    ideal: Arc<GradedMatrix<S>>,
}

impl<S: Scalar> GradedQuotient<S> {
    pub fn degree(&self) -> &DimVector {
        self.ideal.degree()
    }

    pub fn free_dimension(&self) -> usize {
        self.ideal.free_dimension()
    }

    pub fn ideal_rank(&self) -> usize {
        self.ideal.rank()
    }

    pub fn dim(&self) -> usize {
        self.free_dimension() - self.ideal_rank()
    }

    pub fn standard_monomials(&self) -> Vec<Word> {
        self.ideal.standard_monomials()
    }

    pub fn ideal(&self) -> &GradedMatrix<S> {
        &self.ideal
    }

    pub fn normal_form(&self, x: &NCPoly<S>) -> Result<NCPoly<S>, AlgebraError> {
        self.ideal.normal_form(x)
    }

    pub fn reduce_word(&self, w: &Word) -> Result<NCPoly<S>, AlgebraError> {
        self.normal_form(&NCPoly::monomial(w.clone(), S::one()))
    }

    /// Coordinates of a normal form against [`Self::standard_monomials`].
    pub fn coordinates(&self, x: &NCPoly<S>) -> Result<Vec<S>, AlgebraError> {
        let nf = self.normal_form(x)?;
        Ok(self.standard_monomials().iter().map(|w| nf.coeff(w)).collect())
    }

    pub fn row(&self) -> DimensionRow {
        DimensionRow {
            degree: self.degree().0.clone(),
            free: self.free_dimension(),
            ideal: self.ideal_rank(),
            dim: self.dim(),
        }
    }
}

/// One line of a graded dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRow {
    pub degree: Vec<u32>,
    pub free: usize,
    pub ideal: usize,
    pub dim: usize,
}

/// Outcome of reducing a Serre-type element modulo the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerreCheck {
    pub degree: Vec<u32>,
    pub exponent: u32,
    pub in_ideal: bool,
    /// Number of standard monomials left in the normal form.
    pub residual_terms: usize,
}

/// Generators and relations of the positive part, up to a total degree.
pub struct SerrePresentation<S: Scalar> {
    quiver: Quiver,
    flavor: Flavor,
    bound: u32,
    relations: Vec<NCPoly<S>>,
    order: MonomialOrder,
    cache: RwLock<HashMap<DimVector, Arc<GradedMatrix<S>>>>,
}

impl SerrePresentation<BigRational> {
    pub fn classical(q: &Quiver, bound: u32) -> Self {
        Self::build(q, Flavor::Classical, bound, serre_generators_classical(q, bound))
    }
}

impl SerrePresentation<RatFunc> {
    pub fn quantum(q: &Quiver, bound: u32) -> Self {
        Self::build(q, Flavor::Quantum, bound, serre_generators_quantum(q, bound))
    }

    pub fn quantum_neg_q(q: &Quiver, bound: u32) -> Self {
        Self::build(q, Flavor::QuantumNegQ, bound, serre_generators_quantum_neg_q(q, bound))
    }
}

impl<S: Scalar> SerrePresentation<S> {
    fn build(q: &Quiver, flavor: Flavor, bound: u32, relations: Vec<NCPoly<S>>) -> Self {
        SerrePresentation {
            quiver: q.clone(),
            flavor,
            bound,
            relations,
            order: MonomialOrder::DegLex,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Presentation with arbitrary homogeneous relations of degree at most `bound`.
    pub fn with_relations(q: &Quiver, bound: u32, relations: Vec<NCPoly<S>>) -> Result<Self, AlgebraError> {
        let n = q.vertex_count();
        for r in &relations {
            if r.is_zero() {
                continue;
            }
            let d = r.degree(n).ok_or(AlgebraError::Inhomogeneous)?;
            if d.total() > bound {
                return Err(AlgebraError::BoundExceeded { total: d.total(), limit: bound });
            }
        }
        Ok(Self::build(q, Flavor::Custom, bound, relations))
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self.cache = RwLock::new(HashMap::new());
        self
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn relations(&self) -> &[NCPoly<S>] {
        &self.relations
    }

    fn check_degree(&self, d: &DimVector) -> Result<(), AlgebraError> {
        if d.len() != self.quiver.vertex_count() {
            return Err(AlgebraError::WrongDegree { expected: self.quiver.zero(), found: d.clone() });
        }
        if d.total() > self.bound {
            return Err(AlgebraError::BoundExceeded { total: d.total(), limit: self.bound });
        }
        Ok(())
    }

    /// Ideal piece in degree `d`, built from the relations of that degree and
    /// `x I[d - x] + I[d - x] x` over letters `x`.
    fn ideal_piece(&self, d: &DimVector) -> Result<Arc<GradedMatrix<S>>, AlgebraError> {
        if let Some(m) = self.cache.read().expect("cache lock").get(d) {
            return Ok(Arc::clone(m));
        }
        let n = self.quiver.vertex_count();
        let mut m = GradedMatrix::empty(&self.quiver, d, self.order)?;
        for r in &self.relations {
            if !m.is_full() && !r.is_zero() && r.degree(n).as_ref() == Some(d) {
                m.insert(r)?;
            }
        }
        for x in self.quiver.generators_within(d) {
            if m.is_full() {
                break;
            }
            let rest = d - &x.weight(n);
            if rest.is_zero() {
                continue;
            }
            let sub = self.ideal_piece(&rest)?;
            let letter = NCPoly::letter(x);
            for b in sub.basis() {
                m.insert(&letter.multiply(&b))?;
                m.insert(&b.multiply(&letter))?;
                if m.is_full() {
                    break;
                }
            }
        }
        let m = Arc::new(m);
        self.cache
            .write()
            .expect("cache lock")
            .entry(d.clone())
            .or_insert_with(|| Arc::clone(&m));
        Ok(m)
    }

    pub fn quotient(&self, d: &DimVector) -> Result<GradedQuotient<S>, AlgebraError> {
        self.check_degree(d)?;
        Ok(GradedQuotient { ideal: self.ideal_piece(d)? })
    }

    pub fn graded_dimension(&self, d: &DimVector) -> Result<usize, AlgebraError> {
        Ok(self.quotient(d)?.dim())
    }

    /// Table of every degree of total at most `max_total`, the zero degree included.
    pub fn dimension_table(&self, max_total: u32) -> Result<Vec<DimensionRow>, AlgebraError> {
        DimVector::all_up_to(self.quiver.vertex_count(), max_total)
            .iter()
            .map(|d| Ok(self.quotient(d)?.row()))
            .collect()
    }

    pub fn normal_form(&self, x: &NCPoly<S>) -> Result<NCPoly<S>, AlgebraError> {
        if x.is_zero() {
            return Ok(NCPoly::zero());
        }
        let d = x.degree(self.quiver.vertex_count()).ok_or(AlgebraError::Inhomogeneous)?;
        self.quotient(&d)?.normal_form(x)
    }

    pub fn in_ideal(&self, x: &NCPoly<S>) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(x)?.is_zero())
    }

    fn real_letter(&self, v: usize) -> Result<GeneratorIndex, AlgebraError> {
        if !self.quiver.kind(v).is_real() {
            return Err(AlgebraError::NotReal { vertex: self.quiver.vertex_name(v).to_string() });
        }
        Ok(GeneratorIndex::new(v, 1))
    }

    fn letter(&self, v: usize, level: u32) -> Result<GeneratorIndex, AlgebraError> {
        self.quiver.generator(v, level).ok_or_else(|| AlgebraError::LevelUnavailable {
            vertex: self.quiver.vertex_name(v).to_string(),
            level,
        })
    }

    /// `e_{(v,1)}^n / n!`, or `/ [n]_q!` over `Q(q)`.
    pub fn divided_power(&self, v: usize, n: u32) -> Result<NCPoly<S>, AlgebraError> {
        let e = NCPoly::letter(self.real_letter(v)?);
        let fact = S::from_laurent(&q_factorial(n as i64).expect("n >= 0"));
        Ok(e.pow(n).scale(&fact.inverse().expect("factorial is non-zero")))
    }

    /// Image of `S_n` under `Psi_r -> e_{(v,r)}` at an imaginary vertex; the
    /// divided power at a real vertex.
    pub fn tilde_generator(&self, v: usize, n: u32) -> Result<NCPoly<S>, AlgebraError> {
        if n > self.bound {
            return Err(AlgebraError::BoundExceeded { total: n, limit: self.bound });
        }
        if self.quiver.kind(v).is_real() {
            return self.divided_power(v, n);
        }
        let s = s_from_psi_recursive(n);
        let mut out = NCPoly::zero();
        for (parts, c) in s.terms() {
            let word = parts.iter().map(|&r| self.letter(v, r)).collect::<Result<Vec<_>, _>>()?;
            out.add_term(Word(word), S::from_rational(c.clone()));
        }
        Ok(out)
    }

    fn serre_check(&self, x: &NCPoly<S>, exponent: u32) -> Result<SerreCheck, AlgebraError> {
        let n = self.quiver.vertex_count();
        let degree = x.degree(n).map(|d| d.0).unwrap_or_else(|| vec![0; n]);
        let nf = self.normal_form(x)?;
        Ok(SerreCheck { degree, exponent, in_ideal: nf.is_zero(), residual_terms: nf.len() })
    }

    /// Reduces `ad(e_j)^{N - lower}(e~_{(v,n)})` with `N = 1 - (j, (v,n))`.
    /// `lower = 0` is the relation itself, `lower = 1` a strictness control.
    pub fn tilde_serre_check(&self, j: usize, v: usize, n: u32, lower: u32) -> Result<SerreCheck, AlgebraError> {
        let ej = self.real_letter(j)?;
        let target = self.letter(v, n)?;
        let full = (1 - self.quiver.generator_pairing(ej, target)) as u32;
        let exponent = full.saturating_sub(lower);
        let total = exponent + n;
        if total > self.bound {
            return Err(AlgebraError::BoundExceeded { total, limit: self.bound });
        }
        let x = ad_power(&NCPoly::letter(ej), exponent, &self.tilde_generator(v, n)?);
        self.serre_check(&x, exponent)
    }

    /// Reduces `sum_{p=0}^{M} (-1)^p e_i^{(p)} e_{(j,n)} e_i^{(M-p)}` with
    /// `M = n t + 1`, `t` the number of arrows between `i` and `j` in either
    /// direction; `n = 0` puts the unit in the middle.
    pub fn divided_serre_check(&self, i: usize, j: usize, n: u32) -> Result<SerreCheck, AlgebraError> {
        self.real_letter(i)?;
        let t = self.quiver.arrows_between(i, j) as u32;
        let m = n * t + 1;
        let middle = if n == 0 { NCPoly::one() } else { NCPoly::letter(self.letter(j, n)?) };
        let total = m + n * u32::from(j != i);
        if total > self.bound {
            return Err(AlgebraError::BoundExceeded { total, limit: self.bound });
        }
        let mut x = NCPoly::zero();
        for p in 0..=m {
            let term = self.divided_power(i, p)?.multiply(&middle).multiply(&self.divided_power(i, m - p)?);
            x = if p % 2 == 0 { x.add(&term) } else { x.sub(&term) };
        }
        self.serre_check(&x, m)
    }
}

/// Laurent polynomial helper used by callers building quantum scalars.
pub fn quantum_scalar(p: &LaurentPoly) -> RatFunc {
    RatFunc::from_laurent(p.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;
    use crate::free_algebra::enumerate_words;

    type P = NCPoly<BigRational>;

    fn a2() -> Quiver {
        Quiver::new(&["a", "b"], &[("a", "b")]).unwrap()
    }

    fn g(v: usize, l: u32) -> GeneratorIndex {
        GeneratorIndex::new(v, l)
    }

    fn w(letters: &[(usize, u32)]) -> Word {
        Word(letters.iter().map(|&(v, l)| g(v, l)).collect())
    }

    fn d(x: &[u32]) -> DimVector {
        DimVector(x.to_vec())
    }

    /// Real vertex `a` joined by `t` arrows to a vertex `v` with `loops` loops.
    fn real_plus(loops: usize, t: usize) -> Quiver {
        let mut arrows = vec![("v", "v"); loops];
        arrows.extend(std::iter::repeat_n(("a", "v"), t));
        Quiver::new(&["a", "v"], &arrows).unwrap()
    }

    #[test]
    fn classical_generators() {
        let r = serre_generators_classical(&a2(), 4);
        assert_eq!(r.len(), 2);
        let ea = P::letter(g(0, 1));
        let eb = P::letter(g(1, 1));
        assert_eq!(r[0], ad_power(&ea, 2, &eb));
        assert_eq!(r[1], ad_power(&eb, 2, &ea));
        assert_eq!(r[0].degree(2), Some(d(&[2, 1])));

        let jordan = Quiver::one_vertex(1);
        let r = serre_generators_classical(&jordan, 4);
        // pairs {n, m} with n < m, n + m <= 4: (1,2), (1,3)
        assert_eq!(r.len(), 2);
        assert_eq!(r[0], P::letter(g(0, 1)).commutator(&P::letter(g(0, 2))));
        assert!(serre_generators_classical(&Quiver::one_vertex(2), 5).is_empty());
    }

    #[test]
    fn quantum_generators() {
        let r = serre_generators_quantum(&a2(), 3);
        let mut expect = NCPoly::<RatFunc>::zero();
        expect.add_term(w(&[(1, 1), (0, 1), (0, 1)]), <RatFunc as Scalar>::one());
        expect.add_term(w(&[(0, 1), (1, 1), (0, 1)]), quantum_scalar(&"-q - q^-1".parse().unwrap()));
        expect.add_term(w(&[(0, 1), (0, 1), (1, 1)]), <RatFunc as Scalar>::one());
        assert_eq!(r[0], expect);
        // at q = 1 the quantum element is (-1)^N ad^N
        let at_one = r[0].map_coeffs(|c| c.evaluate(&rat(1, 1)).unwrap());
        assert_eq!(at_one, serre_generators_classical(&a2(), 3)[0]);
        let jq = serre_generators_quantum(&Quiver::one_vertex(1), 4);
        let jc = serre_generators_classical(&Quiver::one_vertex(1), 4);
        assert_eq!(jq.len(), jc.len());
    }

    #[test]
    fn graded_dimensions() {
        let p = SerrePresentation::classical(&Quiver::one_vertex(0), 4);
        assert_eq!(p.graded_dimension(&d(&[4])).unwrap(), 1);
        let p = SerrePresentation::classical(&Quiver::one_vertex(1), 4);
        assert_eq!(p.graded_dimension(&d(&[4])).unwrap(), 5);
        let p = SerrePresentation::classical(&Quiver::one_vertex(2), 4);
        assert_eq!(p.graded_dimension(&d(&[4])).unwrap(), 8);
        let p = SerrePresentation::classical(&a2(), 4);
        assert_eq!(p.graded_dimension(&d(&[2, 1])).unwrap(), 2);
        let q22 = p.quotient(&d(&[2, 2])).unwrap();
        assert_eq!((q22.free_dimension(), q22.ideal_rank(), q22.dim()), (6, 3, 3));
        assert_eq!(p.graded_dimension(&d(&[0, 0])).unwrap(), 1);
        assert!(matches!(p.graded_dimension(&d(&[3, 2])), Err(AlgebraError::BoundExceeded { .. })));
    }

    #[test]
    fn recursive_ideal_matches_direct_span() {
        for (q, bound) in [(a2(), 5), (Quiver::one_vertex(1), 5), (real_plus(1, 1), 5), (Quiver::linear(3), 4)] {
            let p = SerrePresentation::classical(&q, bound);
            for dv in DimVector::all_up_to(q.vertex_count(), bound) {
                let direct = crate::free_algebra::ideal_graded_piece(&q, p.relations(), &dv, MonomialOrder::DegLex).unwrap();
                assert_eq!(p.quotient(&dv).unwrap().ideal_rank(), direct.rank(), "{dv}");
            }
        }
    }

    #[test]
    fn order_independence() {
        for q in [a2(), Quiver::one_vertex(1), real_plus(1, 2)] {
            let p = SerrePresentation::classical(&q, 5);
            let r = SerrePresentation::classical(&q, 5).with_order(MonomialOrder::DegLexReversedLetters);
            for dv in DimVector::all_up_to(q.vertex_count(), 5) {
                assert_eq!(p.graded_dimension(&dv).unwrap(), r.graded_dimension(&dv).unwrap());
            }
        }
    }

    #[test]
    fn normal_forms() {
        let p = SerrePresentation::classical(&a2(), 4);
        for r in p.relations() {
            assert!(p.normal_form(r).unwrap().is_zero());
        }
        let qd = p.quotient(&d(&[2, 1])).unwrap();
        for m in qd.standard_monomials() {
            let x = P::monomial(m.clone(), rat(1, 1));
            assert_eq!(qd.normal_form(&x).unwrap(), x);
        }
        for m in enumerate_words(&a2(), &d(&[2, 2])).unwrap() {
            let nf = p.quotient(&d(&[2, 2])).unwrap().reduce_word(&m).unwrap();
            assert_eq!(p.normal_form(&nf).unwrap(), nf, "idempotent");
        }
        let j = SerrePresentation::classical(&Quiver::one_vertex(1), 4);
        let x = P::letter(g(0, 2)).commutator(&P::letter(g(0, 1)));
        assert!(j.normal_form(&x).unwrap().is_zero());
        let free = SerrePresentation::classical(&Quiver::one_vertex(2), 4);
        for m in enumerate_words(free.quiver(), &d(&[3])).unwrap() {
            let x = P::monomial(m, rat(1, 1));
            assert_eq!(free.normal_form(&x).unwrap(), x);
        }
        let inhom = P::letter(g(0, 1)).add(&P::letter(g(0, 2)));
        assert_eq!(j.normal_form(&inhom), Err(AlgebraError::Inhomogeneous));
    }

    #[test]
    fn divided_powers() {
        let p = SerrePresentation::classical(&a2(), 4);
        assert_eq!(p.divided_power(0, 2).unwrap(), P::monomial(w(&[(0, 1), (0, 1)]), rat(1, 2)));
        assert_eq!(p.divided_power(0, 1).unwrap(), P::letter(g(0, 1)));
        let qp = SerrePresentation::quantum(&a2(), 4);
        let two = qp.divided_power(0, 2).unwrap();
        let expect = quantum_scalar(&"q + q^-1".parse().unwrap()).inverse().unwrap();
        assert_eq!(two.coeff(&w(&[(0, 1), (0, 1)])), expect);
        let j = SerrePresentation::classical(&Quiver::one_vertex(1), 4);
        assert!(matches!(j.divided_power(0, 2), Err(AlgebraError::NotReal { .. })));
    }

    #[test]
    fn tilde_generators() {
        let j = SerrePresentation::classical(&Quiver::one_vertex(1), 4);
        let t2 = j.tilde_generator(0, 2).unwrap();
        let expect = P::from_terms([(w(&[(0, 2)]), rat(1, 2)), (w(&[(0, 1), (0, 1)]), rat(1, 2))]);
        assert_eq!(t2, expect);
        let t3 = j.tilde_generator(0, 3).unwrap();
        let expect = P::from_terms([
            (w(&[(0, 3)]), rat(1, 3)),
            (w(&[(0, 1), (0, 2)]), rat(1, 3)),
            (w(&[(0, 2), (0, 1)]), rat(1, 6)),
            (w(&[(0, 1), (0, 1), (0, 1)]), rat(1, 6)),
        ]);
        assert_eq!(t3, expect);
        let p = SerrePresentation::classical(&a2(), 4);
        assert_eq!(p.tilde_generator(0, 2).unwrap(), p.divided_power(0, 2).unwrap());
        assert!(j.tilde_generator(0, 5).is_err());
    }

    #[test]
    fn tilde_is_triangular() {
        for loops in [1, 2, 3] {
            let p = SerrePresentation::classical(&Quiver::one_vertex(loops), 6);
            for n in 1..=6 {
                let t = p.tilde_generator(0, n).unwrap();
                assert_eq!(t.coeff(&w(&[(0, n)])), rat(1, n as i64));
                for (word, _) in t.terms() {
                    assert!(word.len() >= 2 || word == &w(&[(0, n)]));
                }
            }
        }
    }

    #[test]
    fn tilde_serre() {
        let p = SerrePresentation::classical(&real_plus(1, 1), 5);
        let ok = p.tilde_serre_check(0, 1, 2, 0).unwrap();
        assert_eq!(ok.exponent, 3);
        assert!(ok.in_ideal);
        let control = p.tilde_serre_check(0, 1, 2, 1).unwrap();
        assert!(!control.in_ideal);
        assert!(p.tilde_serre_check(0, 1, 1, 0).unwrap().in_ideal);
    }

    #[test]
    fn divided_serre() {
        let qa = SerrePresentation::quantum(&a2(), 4);
        assert!(qa.divided_serre_check(0, 1, 1).unwrap().in_ideal);
        let r0 = qa.divided_serre_check(0, 1, 0).unwrap();
        assert!(r0.in_ideal);
        let qv = SerrePresentation::quantum(&real_plus(1, 1), 5);
        let c = qv.divided_serre_check(0, 1, 2).unwrap();
        assert_eq!(c.degree, vec![3, 2]);
        assert!(c.in_ideal);
    }

    #[test]
    fn quantum_matches_classical_dimensions() {
        for q in [a2(), Quiver::one_vertex(1), Quiver::one_vertex(2)] {
            let c = SerrePresentation::classical(&q, 5);
            let qq = SerrePresentation::quantum(&q, 5);
            for dv in DimVector::all_up_to(q.vertex_count(), 5) {
                assert_eq!(c.graded_dimension(&dv).unwrap(), qq.graded_dimension(&dv).unwrap(), "{dv}");
            }
        }
    }

    #[test]
    fn custom_relations_validated() {
        let q = a2();
        let bad = P::letter(g(0, 1)).add(&P::letter(g(0, 1)).multiply(&P::letter(g(1, 1))));
        assert!(SerrePresentation::with_relations(&q, 4, vec![bad]).is_err());
        let p = SerrePresentation::with_relations(&q, 4, vec![P::letter(g(0, 1))]).unwrap();
        assert_eq!(p.graded_dimension(&d(&[1, 1])).unwrap(), 0);
        assert_eq!(p.flavor(), Flavor::Custom);
    }

    #[test]
    fn concurrent_readers() {
        let p = Arc::new(SerrePresentation::classical(&a2(), 5));
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let p = Arc::clone(&p);
                std::thread::spawn(move || p.graded_dimension(&d(&[3, 2])).unwrap())
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), 3);
        }
    }
}
