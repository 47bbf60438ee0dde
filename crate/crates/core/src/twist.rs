//! Sign twists of graded products, twisted tensor squares, the coproduct with
//! primitive generators, and the `q -> -q` comparison of quantum relations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffs::{q_binomial, LaurentPoly, RatFunc, Scalar};
use crate::free_algebra::{enumerate_words, AlgebraError, NCPoly, Word};
use crate::gkm::SerrePresentation;
use crate::quiver::{DimVector, GeneratorIndex, IntMatrix, Quiver, TwistForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("tensor factors use different twists")]
    Mismatch,
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Bicharacter `xi(u, v) = (-1)^{u^T S v} q^{u^T Q v}` on dimension vectors,
/// together with the sign twist `factor` used to multiply inside each tensor
/// factor (zero for the plain product).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorTwist {
    pub sign: IntMatrix,
    pub qexp: IntMatrix,
    pub factor: IntMatrix,
}

impl TensorTwist {
    /// `xi = 1`.
    pub fn trivial(n: usize) -> Self {
        TensorTwist { sign: IntMatrix::zero(n), qexp: IntMatrix::zero(n), factor: IntMatrix::zero(n) }
    }

    /// `xi_q(u, v) = q^{(u, v)}` with the symmetrised Euler form.
    pub fn quantum(q: &Quiver) -> Self {
        let n = q.vertex_count();
        TensorTwist { sign: IntMatrix::zero(n), qexp: q.symmetrized_matrix(), factor: IntMatrix::zero(n) }
    }

    /// `xi'(u, v) = Psi(v, u) / Psi(u, v) * xi(u, v)`, with both tensor
    /// factors multiplied by `*_Psi`.
    pub fn modified_by(&self, t: &TwistForm) -> Self {
        TensorTwist {
            sign: self.sign.plus(&t.psi).plus(&t.psi.transpose()),
            qexp: self.qexp.clone(),
            factor: self.factor.plus(&t.psi),
        }
    }

    pub fn eval<S: Scalar>(&self, u: &DimVector, v: &DimVector) -> S {
        let s = if self.sign.eval(u, v).rem_euclid(2) == 0 { 1 } else { -1 };
        S::sign(s).times(&S::q_pow(self.qexp.eval(u, v)))
    }

    fn size(&self) -> usize {
        self.sign.size()
    }
}

/// `Psi(deg p, deg r) p r`.
pub fn twisted_multiply<S: Scalar>(
    t: &TwistForm,
    p: &NCPoly<S>,
    r: &NCPoly<S>,
) -> Result<NCPoly<S>, TwistError> {
    if p.is_zero() || r.is_zero() {
        return Ok(NCPoly::zero());
    }
    let n = t.psi.size();
    let dp = p.degree(n).ok_or(TwistError::Inhomogeneous)?;
    let dr = r.degree(n).ok_or(TwistError::Inhomogeneous)?;
    Ok(p.multiply(r).scale(&S::sign(t.sign(&dp, &dr))))
}

/// Element of the `xi`-twisted tensor square of the free algebra.
#[derive(Clone, PartialEq)]
pub struct TensorPoly<S: Scalar> {
    twist: TensorTwist,
    terms: BTreeMap<(Word, Word), S>,
}

impl<S: Scalar> fmt::Debug for TensorPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|((a, b), c)| (format!("{a:?} (x) {b:?}"), c))).finish()
    }
}

impl<S: Scalar> TensorPoly<S> {
    pub fn zero(twist: TensorTwist) -> Self {
        TensorPoly { twist, terms: BTreeMap::new() }
    }

    pub fn one(twist: TensorTwist) -> Self {
        let mut t = Self::zero(twist);
        t.add_term(Word::empty(), Word::empty(), S::one());
        t
    }

    /// `a (x) b`.
    pub fn pure(twist: TensorTwist, a: &NCPoly<S>, b: &NCPoly<S>) -> Self {
        let mut t = Self::zero(twist);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.add_term(wa.clone(), wb.clone(), ca.times(cb));
            }
        }
        t
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot = slot.plus(&c);
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn twist(&self) -> &TensorTwist {
        &self.twist
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &S)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn coeff(&self, a: &Word, b: &Word) -> S {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self, TwistError> {
        if self.twist != other.twist {
            return Err(TwistError::Mismatch);
        }
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, TwistError> {
        self.add(&other.scale(&S::one().negated()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.twist.clone());
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c.times(s));
        }
        out
    }

    /// `(a (x) b)(a' (x) b') = xi(deg b, deg a') aa' (x) bb'`, the factor
    /// products taken with the factor twist.
    pub fn tensor_multiply(&self, other: &Self) -> Result<Self, TwistError> {
        if self.twist != other.twist {
            return Err(TwistError::Mismatch);
        }
        let n = self.twist.size();
        let mut out = Self::zero(self.twist.clone());
        let f = &self.twist.factor;
        for ((a, b), c) in &self.terms {
            let (da, db) = (a.weight(n), b.weight(n));
            for ((a2, b2), c2) in &other.terms {
                let da2 = a2.weight(n);
                let mut xi: S = self.twist.eval(&db, &da2);
                if (f.eval(&da, &da2) + f.eval(&db, &b2.weight(n))).rem_euclid(2) == 1 {
                    xi = xi.negated();
                }
                out.add_term(a.concat(a2), b.concat(b2), c.times(c2).times(&xi));
            }
        }
        Ok(out)
    }

    /// Groups terms by bidegree `(deg a, deg b)`.
    pub fn bidegree_components(&self) -> BTreeMap<(DimVector, DimVector), Self> {
        let n = self.twist.size();
        let mut out: BTreeMap<(DimVector, DimVector), Self> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            out.entry((a.weight(n), b.weight(n)))
                .or_insert_with(|| Self::zero(self.twist.clone()))
                .add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }
}

/// `Delta` of a single word: the sum over the letters sent left, weighted by
/// `xi(wt x_p, wt x_p')` for each right letter `p` before a left letter `p'`.
fn coproduct_word<S: Scalar>(w: &Word, twist: &TensorTwist, out: &mut TensorPoly<S>, c: &S) {
    let n = twist.size();
    let weights: Vec<DimVector> = w.0.iter().map(|g| g.weight(n)).collect();
    let m = w.len();
    for mask in 0u64..(1u64 << m) {
        let left = |p: usize| mask >> p & 1 == 1;
        let mut factor = c.clone();
        for p in 0..m {
            if left(p) {
                continue;
            }
            for p2 in p + 1..m {
                if left(p2) {
                    factor = factor.times(&twist.eval(&weights[p], &weights[p2]));
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (p, g) in w.0.iter().enumerate() {
            if left(p) {
                a.push(*g);
            } else {
                b.push(*g);
            }
        }
        out.add_term(Word(a), Word(b), factor);
    }
}

/// Algebra morphism into the `xi`-twisted tensor square with every generator
/// primitive.
pub fn coproduct<S: Scalar>(x: &NCPoly<S>, twist: &TensorTwist) -> TensorPoly<S> {
    let mut out = TensorPoly::zero(twist.clone());
    for (w, c) in x.terms() {
        coproduct_word(w, twist, &mut out, c);
    }
    out
}

/// Rescales the bidegree `(u, v)` part by `1 / Psi(u, v)`; the result lives
/// in the tensor square twisted by `xi'`.
pub fn twisted_coproduct<S: Scalar>(t: &TwistForm, x: &TensorPoly<S>) -> TensorPoly<S> {
    let n = x.twist.size();
    let mut out = TensorPoly::zero(x.twist.modified_by(t));
    for ((a, b), c) in &x.terms {
        let s = t.sign(&a.weight(n), &b.weight(n));
        out.add_term(a.clone(), b.clone(), c.times(&S::sign(s)));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescendsRow {
    pub relation: usize,
    pub degree: Vec<u32>,
    /// First bidegree whose component survives `nf (x) nf`.
    pub failing_bidegree: Option<(Vec<u32>, Vec<u32>)>,
}

/// For each relation `r`, checks `Delta(r)` lies in `I (x) F + F (x) I` by
/// reducing both tensor factors to normal form in every bidegree.
pub fn coproduct_descends_check<S: Scalar>(
    p: &SerrePresentation<S>,
    twist: &TensorTwist,
) -> Result<Vec<DescendsRow>, TwistError> {
    let n = p.quiver().vertex_count();
    let mut rows = Vec::new();
    for (idx, r) in p.relations().iter().enumerate() {
        let Some(degree) = r.degree(n) else {
            continue;
        };
        let delta = coproduct(r, twist);
        let mut failing = None;
        for ((u, v), part) in delta.bidegree_components() {
            let qu = p.quotient(&u)?;
            let qv = p.quotient(&v)?;
            let mut reduced = TensorPoly::zero(twist.clone());
            for (a, b, c) in part.terms() {
                let na = qu.reduce_word(a)?;
                let nb = qv.reduce_word(b)?;
                reduced = reduced.add(&TensorPoly::pure(twist.clone(), &na, &nb).scale(c))?;
            }
            if !reduced.is_zero() {
                failing = Some((u.0, v.0));
                break;
            }
        }
        rows.push(DescendsRow { relation: idx, degree: degree.0, failing_bidegree: failing });
    }
    Ok(rows)
}

/// Checks `Delta(e~_{(v,n)}) = sum_{a+b=n} e~_{(v,a)} (x) e~_{(v,b)}` in the
/// untwisted free tensor square, with `e~_0 = 1`.
pub fn tilde_coproduct_check<S: Scalar>(p: &SerrePresentation<S>, v: usize, n: u32) -> Result<bool, TwistError> {
    let twist = TensorTwist::trivial(p.quiver().vertex_count());
    let tilde = |k: u32| -> Result<NCPoly<S>, AlgebraError> {
        if k == 0 {
            Ok(NCPoly::one())
        } else {
            p.tilde_generator(v, k)
        }
    };
    let lhs = coproduct(&tilde(n)?, &twist);
    let mut rhs = TensorPoly::zero(twist.clone());
    for a in 0..=n {
        rhs = rhs.add(&TensorPoly::pure(twist.clone(), &tilde(a)?, &tilde(n - a)?))?;
    }
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusQTerm {
    pub k: u32,
    /// Sign turning the plain monomial into the left-nested twisted product.
    pub twist_sign: i8,
    pub coeff_q: String,
    pub coeff_minus_q: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinusQReport {
    pub exponent: u32,
    pub degree: Vec<u32>,
    pub twist_valid: bool,
    pub terms: Vec<MinusQTerm>,
    /// Constant `eps` with `c_{-q,k} * sign_k = eps * c_{q,k}` for every `k`.
    pub overall_sign: Option<i8>,
}

impl MinusQReport {
    pub fn holds(&self) -> bool {
        self.twist_valid && self.overall_sign.is_some()
    }
}

/// Writes each monomial `e_j^k e_i e_j^{N-k}` of the `(-q)`-Serre element as a
/// left-nested `Psi`-twisted product, and checks the rewritten element is a
/// single sign times the `q`-Serre element.
pub fn minus_q_correspondence_check(
    q: &Quiver,
    t: &TwistForm,
    j: GeneratorIndex,
    i: GeneratorIndex,
) -> Result<MinusQReport, TwistError> {
    let n = q.vertex_count();
    let exponent = (1 - q.generator_pairing(j, i)).max(0) as u32;
    let ej = NCPoly::<RatFunc>::letter(j);
    let ei = NCPoly::<RatFunc>::letter(i);
    let mut terms = Vec::new();
    let mut ratio: Option<RatFunc> = None;
    let mut constant = true;
    for k in 0..=exponent {
        let mut letters = vec![&ej; k as usize];
        letters.push(&ei);
        letters.extend(std::iter::repeat_n(&ej, (exponent - k) as usize));
        let mut twisted = NCPoly::one();
        let mut plain = NCPoly::one();
        for l in letters {
            twisted = twisted_multiply(t, &twisted, l)?;
            plain = plain.multiply(l);
        }
        let (w, c) = twisted.terms().next().map(|(w, c)| (w.clone(), c.clone())).expect("monomial");
        let sign: i8 = if c == plain.coeff(&w) { 1 } else { -1 };
        let b = q_binomial(exponent as i64, k as i64).expect("0 <= k <= N");
        let cq = if k % 2 == 1 { b.neg() } else { b };
        let cmq = cq.substitute_neg_q();
        let lhs = RatFunc::from_laurent(if sign < 0 { cmq.neg() } else { cmq.clone() });
        let r = lhs.div(&RatFunc::from_laurent(cq.clone())).expect("non-zero binomial");
        match &ratio {
            None => ratio = Some(r),
            Some(prev) if *prev == r => {}
            Some(_) => constant = false,
        }
        terms.push(MinusQTerm { k, twist_sign: sign, coeff_q: cq.to_string(), coeff_minus_q: cmq.to_string() });
    }
    let overall_sign = match (constant, ratio.as_ref().and_then(|r| r.as_laurent())) {
        (true, Some(p)) if p.is_one() => Some(1),
        (true, Some(p)) if *p == LaurentPoly::from_int(-1) => Some(-1),
        _ => None,
    };
    let degree = &j.weight(n).scaled(exponent) + &i.weight(n);
    Ok(MinusQReport { exponent, degree: degree.0, twist_valid: q.validate_twist(t).is_ok(), terms, overall_sign })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionPair {
    pub degree: Vec<u32>,
    pub dim_q: usize,
    pub dim_minus_q: usize,
}

/// `dim U_q[d]` against `dim U_{-q}[d]` for every `d` of total at most `bound`.
pub fn minus_q_dimension_clause(q: &Quiver, bound: u32) -> Result<Vec<DimensionPair>, TwistError> {
    let pq = SerrePresentation::quantum(q, bound);
    let pm = SerrePresentation::quantum_neg_q(q, bound);
    DimVector::all_up_to(q.vertex_count(), bound)
        .into_iter()
        .map(|d| {
            Ok(DimensionPair {
                dim_q: pq.graded_dimension(&d)?,
                dim_minus_q: pm.graded_dimension(&d)?,
                degree: d.0,
            })
        })
        .collect()
}

/// Checks `Delta^Psi(x *_Psi y) = Delta^Psi(x) Delta^Psi(y)` in the
/// `xi'`-twisted square for all pairs of words of total degree at most
/// `max_total`; returns the first failing pair.
pub fn twisted_bialgebra_check<S: Scalar>(
    q: &Quiver,
    t: &TwistForm,
    xi: &TensorTwist,
    max_total: u32,
) -> Result<Option<(Word, Word)>, TwistError> {
    let n = q.vertex_count();
    let mut words = Vec::new();
    for d in DimVector::all_up_to(n, max_total) {
        words.extend(enumerate_words(q, &d)?);
    }
    for x in &words {
        for y in &words {
            if x.weight(n).total() + y.weight(n).total() > max_total {
                continue;
            }
            let px = NCPoly::<S>::monomial(x.clone(), S::one());
            let py = NCPoly::<S>::monomial(y.clone(), S::one());
            let lhs = twisted_coproduct(t, &coproduct(&twisted_multiply(t, &px, &py)?, xi));
            let rhs = twisted_coproduct(t, &coproduct(&px, xi))
                .tensor_multiply(&twisted_coproduct(t, &coproduct(&py, xi)))?;
            if lhs != rhs {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// Checks, for every splitting `u = u' + u''`, `v = v' + v''`,
/// `Psi(u'+v', u''+v'') Psi(u',v') Psi(u'',v'') Psi(u'',v')
///  = Psi(u,v) Psi(u',u'') Psi(v',v'') Psi(v',u'')`.
pub fn psi_identity_check(t: &TwistForm, u: &DimVector, v: &DimVector) -> bool {
    let s = |a: &DimVector, b: &DimVector| t.sign(a, b);
    for u1 in u.below() {
        let u2 = u - &u1;
        for v1 in v.below() {
            let v2 = v - &v1;
            let lhs = s(&(&u1 + &v1), &(&u2 + &v2)) * s(&u1, &v1) * s(&u2, &v2) * s(&u2, &v1);
            let rhs = s(u, v) * s(&u1, &u2) * s(&v1, &v2) * s(&v1, &u2);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `(Delta (x) id) Delta = (id (x) Delta) Delta` on all words of total degree
/// at most `max_total`; returns the first failure.
pub fn coassociativity_check<S: Scalar>(
    q: &Quiver,
    xi: &TensorTwist,
    max_total: u32,
) -> Result<Option<Word>, TwistError> {
    type Triple<S> = BTreeMap<(Word, Word, Word), S>;
    fn push<S: Scalar>(t: &mut Triple<S>, k: (Word, Word, Word), c: S) {
        let slot = t.entry(k.clone()).or_insert_with(S::zero);
        *slot = slot.plus(&c);
        if slot.is_zero() {
            t.remove(&k);
        }
    }
    let n = q.vertex_count();
    for d in DimVector::all_up_to(n, max_total) {
        for w in enumerate_words(q, &d)? {
            let delta = coproduct(&NCPoly::<S>::monomial(w.clone(), S::one()), xi);
            let mut left: Triple<S> = BTreeMap::new();
            let mut right: Triple<S> = BTreeMap::new();
            for (a, b, c) in delta.terms() {
                for (a1, a2, c1) in coproduct(&NCPoly::<S>::monomial(a.clone(), S::one()), xi).terms() {
                    push(&mut left, (a1.clone(), a2.clone(), b.clone()), c.times(c1));
                }
                for (b1, b2, c2) in coproduct(&NCPoly::<S>::monomial(b.clone(), S::one()), xi).terms() {
                    push(&mut right, (a.clone(), b1.clone(), b2.clone()), c.times(c2));
                }
            }
            if left != right {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
