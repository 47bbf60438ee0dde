use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{poly_divrem, poly_gcd};
use super::{CoeffError, LaurentPoly};

/// Element of `Q(q)` in canonical form.
///
/// The denominator is an ordinary polynomial with non-zero constant term and
/// leading coefficient 1, coprime to the numerator. Zero is `0 / 1`. Two
/// values are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRatFunc", into = "RawRatFunc")]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct RawRatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl TryFrom<RawRatFunc> for RatFunc {
    type Error = CoeffError;
    fn try_from(raw: RawRatFunc) -> Result<Self, CoeffError> {
        RatFunc::new(raw.num, raw.den)
    }
}

impl From<RatFunc> for RawRatFunc {
    fn from(r: RatFunc) -> Self {
        RawRatFunc { num: r.num, den: r.den }
    }
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self::normalize(p, LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// `Some(p)` when the value is the Laurent polynomial `p`.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        // Move the power of q out of the denominator.
        let s = den.low_exp().unwrap();
        let mut num = num.shift(-s);
        let mut den = den.shift(-s);
        if !den.is_constant() {
            let t = num.low_exp().unwrap();
            let p = num.shift(-t);
            let (_, pd) = p.dense();
            let (_, dd) = den.dense();
            let g = poly_gcd(pd, dd);
            if g.len() > 1 {
                let (pq, _) = poly_divrem(pd, &g);
                let (dq, _) = poly_divrem(dd, &g);
                num = LaurentPoly::from_dense(t, pq);
                den = LaurentPoly::from_dense(0, dq);
            }
        }
        let lead = den.leading_coeff().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::normalize(LaurentPoly::zero(), LaurentPoly::one());
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: LaurentPoly::one() };
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inverse(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn substitute_neg_q(&self) -> Self {
        Self::normalize(self.num.substitute_neg_q(), self.den.substitute_neg_q())
    }

    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational, CoeffError> {
        let d = self.den.evaluate(q0)?;
        if d.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(self.num.evaluate(q0)? / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl super::Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }

    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn negated(&self) -> Self {
        self.neg()
    }

    fn inverse(&self) -> Option<Self> {
        RatFunc::inverse(self).ok()
    }

    fn from_rational(r: BigRational) -> Self {
        RatFunc { num: LaurentPoly::constant(r), den: LaurentPoly::one() }
    }

    fn from_laurent(p: &LaurentPoly) -> Self {
        RatFunc { num: p.clone(), den: LaurentPoly::one() }
    }

    fn q_pow(e: i64) -> Self {
        RatFunc { num: LaurentPoly::q_pow(e), den: LaurentPoly::one() }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    fn from_json(v: &serde_json::Value) -> Option<Self> {
        serde_json::from_value(v.clone()).ok()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}
