use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{format_rational, parse_rational, CoeffError};

/// Finitely supported Laurent polynomial `sum_e c_e q^e` with rational
/// coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are non-zero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// `c q^e`.
    pub fn monomial(e: i64, c: BigRational) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, BigRational::one())
    }

    pub fn from_dense(low: i64, coeffs: Vec<BigRational>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(terms: I) -> Self {
        let map: BTreeMap<i64, BigRational> =
            terms.into_iter().fold(BTreeMap::new(), |mut acc, (e, c)| {
                let slot = acc.entry(e).or_insert_with(BigRational::zero);
                *slot += c;
                acc
            });
        let Some((&lo, _)) = map.iter().next() else {
            return Self::zero();
        };
        let hi = *map.keys().next_back().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a non-zero coefficient (`None` for zero).
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a non-zero coefficient (`None` for zero).
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        if e < self.low || e >= self.low + self.coeffs.len() as i64 {
            return BigRational::zero();
        }
        self.coeffs[(e - self.low) as usize].clone()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Non-zero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub(crate) fn dense(&self) -> (i64, &[BigRational]) {
        (self.low, &self.coeffs)
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(other.low);
        let hi = self.high_exp().unwrap().max(other.high_exp().unwrap());
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms().chain(other.terms()) {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_dense(self.low + other.low, coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// `p(q) -> p(-q)`: the coefficient of `q^e` picks up `(-1)^e`.
    pub fn substitute_neg_q(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if (self.low + k as i64).rem_euclid(2) == 1 { -c } else { c.clone() })
            .collect();
        LaurentPoly { low: self.low, coeffs }
    }

    /// `p(q) -> p(q^{-1})`.
    pub fn bar(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(hi) => {
                let coeffs = self.coeffs.iter().rev().cloned().collect();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    pub fn evaluate(&self, q0: &BigRational) -> Result<BigRational, CoeffError> {
        if q0.is_zero() {
            return Err(CoeffError::EvaluateAtZero);
        }
        // Horner from the top, then scale by q0^low.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        let base = if self.low >= 0 { q0.clone() } else { q0.recip() };
        let mut pow = BigRational::one();
        for _ in 0..self.low.unsigned_abs() {
            pow *= &base;
        }
        Ok(acc * pow)
    }

    /// Exact quotient `self / divisor`; fails when the remainder is non-zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, CoeffError> {
        if divisor.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (q, r) = poly_divrem(&self.coeffs, &divisor.coeffs);
        if r.iter().any(|c| !c.is_zero()) {
            return Err(CoeffError::InexactDivision);
        }
        Ok(Self::from_dense(self.low - divisor.low, q))
    }
}

/// Long division of dense ordinary polynomials (index = exponent).
pub(crate) fn poly_divrem(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = num.to_vec();
    let dn = den.len();
    if rem.len() < dn {
        return (Vec::new(), rem);
    }
    let lead_inv = den[dn - 1].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - dn + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            if !d.is_zero() {
                rem[k + j] -= &c * d;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dn - 1);
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    (quot, rem)
}

/// Monic gcd of dense ordinary polynomials; both inputs non-zero and trimmed.
pub(crate) fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = poly_divrem(&a, &b);
        a = b;
        b = r;
    }
    let lead = a.last().expect("gcd of non-zero polynomials").clone();
    a.iter().map(|c| c / &lead).collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag_s = format_rational(&mag);
            match (e, mag.is_one()) {
                (0, _) => f.write_str(&mag_s)?,
                (_, true) => {}
                (_, false) => write!(f, "{mag_s}*")?,
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = CoeffError;

    /// Parses the textual form produced by `Display`, e.g. `q^3 - 1/2*q + 2 + q^-1`.
    fn from_str(s: &str) -> Result<Self, CoeffError> {
        let err = || CoeffError::Parse(s.to_string());
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(err());
        }
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in src.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        pieces.push(cur);

        let mut terms = Vec::new();
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (coeff_part, q_part) = match body.find('q') {
                Some(pos) => (&body[..pos], Some(&body[pos + 1..])),
                None => (body, None),
            };
            let coeff_part = coeff_part.strip_suffix('*').unwrap_or(coeff_part);
            let mut c = if coeff_part.is_empty() {
                if q_part.is_none() {
                    return Err(err());
                }
                BigRational::one()
            } else {
                parse_rational(coeff_part).map_err(|_| err())?
            };
            let e = match q_part {
                None => 0,
                Some("") => 1,
                Some(rest) => rest.strip_prefix('^').ok_or_else(err)?.parse().map_err(|_| err())?,
            };
            if neg {
                c = -c;
            }
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.terms().count()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            let c = parse_rational(&c).map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
