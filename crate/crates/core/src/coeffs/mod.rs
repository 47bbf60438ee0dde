//! Exact scalars: big rationals, Laurent polynomials in `q`, rational
//! functions in `q`, and the balanced q-numbers built from them.

mod laurent;
mod qnum;
mod ratfunc;

use std::fmt;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::LaurentPoly;
pub use qnum::{
    parity_case_split_sign, q_binomial, q_factorial, q_integer, qbinom_sign_probe,
    sign_law_report, SignLawReport, SignLawRow,
};
pub use ratfunc::RatFunc;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("argument must be non-negative, got {0}")]
    Negative(i64),
    #[error("binomial index out of range: n = {n}, k = {k}")]
    OutOfRange { n: i64, k: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("division leaves a non-zero remainder")]
    InexactDivision,
    #[error("cannot evaluate a Laurent polynomial at q = 0")]
    EvaluateAtZero,
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// Exact field of coefficients used by the free algebra and its quotients.
///
/// `from_laurent` and `q_pow` give the image of the Laurent ring: rational
/// functions keep `q` formal, rationals specialise at `q = 1`.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn from_rational(r: BigRational) -> Self;
    fn from_laurent(p: &LaurentPoly) -> Self;
    fn q_pow(e: i64) -> Self;
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn sign(s: i64) -> Self {
        if s < 0 {
            Self::one().negated()
        } else {
            Self::one()
        }
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn negated(&self) -> Self {
        -self
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn from_laurent(p: &LaurentPoly) -> Self {
        p.evaluate(&One::one()).expect("q = 1 is never zero")
    }

    fn q_pow(_e: i64) -> Self {
        One::one()
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(format_rational(self))
    }

    fn from_json(v: &serde_json::Value) -> Option<Self> {
        match v {
            serde_json::Value::String(s) => parse_rational(s).ok(),
            serde_json::Value::Number(n) => n.as_i64().map(|x| BigRational::from_integer(x.into())),
            _ => None,
        }
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CoeffError> {
    let s = s.trim();
    let err = || CoeffError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| err())?)),
    }
}

/// Least common multiple of the denominators of a list of rationals.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a BigRational>>(it: I) -> BigInt {
    use num_integer::Integer;
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}
