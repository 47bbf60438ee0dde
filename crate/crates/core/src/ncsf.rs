//! Noncommutative symmetric functions in the bases `Lambda` (elementary),
//! `S` (complete homogeneous) and `Psi` (power sums of the first kind).
//!
//! Elements are rational combinations of compositions; a composition
//! `(r1, ..., rm)` in basis `B` stands for the product `B_{r1} ... B_{rm}`,
//! and the empty composition is the unit `B_0 = 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffs::{format_rational, BigRational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcsfError {
    #[error("unknown basis `{0}` (expected lambda, s or psi)")]
    UnknownBasis(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NcsfBasis {
    Lambda,
    S,
    Psi,
}

impl NcsfBasis {
    fn symbol(self) -> &'static str {
        match self {
            NcsfBasis::Lambda => "Lambda",
            NcsfBasis::S => "S",
            NcsfBasis::Psi => "Psi",
        }
    }
}

impl FromStr for NcsfBasis {
    type Err = NcsfError;
    fn from_str(s: &str) -> Result<Self, NcsfError> {
        match s.to_ascii_lowercase().as_str() {
            "lambda" | "l" => Ok(NcsfBasis::Lambda),
            "s" => Ok(NcsfBasis::S),
            "psi" | "p" => Ok(NcsfBasis::Psi),
            _ => Err(NcsfError::UnknownBasis(s.to_string())),
        }
    }
}

impl fmt::Display for NcsfBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Composition ordered by length, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Comp(pub Vec<u32>);

impl Ord for Comp {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Comp {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Comp {
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    fn concat(&self, other: &Comp) -> Comp {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Comp(v)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct NcsfExpr {
    basis: NcsfBasis,
    terms: BTreeMap<Comp, BigRational>,
}

impl fmt::Debug for NcsfExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcsfExpr[{}]({self})", self.basis)
    }
}

impl NcsfExpr {
    pub fn zero(basis: NcsfBasis) -> Self {
        NcsfExpr { basis, terms: BTreeMap::new() }
    }

    pub fn one(basis: NcsfBasis) -> Self {
        Self::monomial(basis, Vec::new(), BigRational::one())
    }

    /// `B_k`; `B_0 = 1`.
    pub fn generator(basis: NcsfBasis, k: u32) -> Self {
        if k == 0 {
            Self::one(basis)
        } else {
            Self::monomial(basis, vec![k], BigRational::one())
        }
    }

    pub fn monomial(basis: NcsfBasis, parts: Vec<u32>, c: BigRational) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(Comp(parts), c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BigRational)>>(basis: NcsfBasis, it: I) -> Self {
        let mut e = Self::zero(basis);
        for (p, c) in it {
            e.add_term(Comp(p), c);
        }
        e
    }

    fn add_term(&mut self, comp: Comp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(comp.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&comp);
        }
    }

    pub fn basis(&self) -> NcsfBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(parts, coefficient)` in length-then-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(k, c)| (k.0.as_slice(), c))
    }

    pub fn coeff(&self, parts: &[u32]) -> BigRational {
        self.terms.get(&Comp(parts.to_vec())).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Common weight of all terms, `None` when inhomogeneous or zero.
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Comp::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = Self::zero(self.basis);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c * s);
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        let mut out = Self::zero(self.basis);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                out.add_term(k1.concat(k2), c1 * c2);
            }
        }
        out
    }

    /// Applies the algebra morphism sending generator `B_k` to `images(k)`.
    pub fn substitute<F: FnMut(u32) -> NcsfExpr>(&self, target: NcsfBasis, mut images: F) -> NcsfExpr {
        let mut cache: BTreeMap<u32, NcsfExpr> = BTreeMap::new();
        let mut out = NcsfExpr::zero(target);
        for (k, c) in &self.terms {
            let mut prod = NcsfExpr::one(target);
            for &r in &k.0 {
                let img = cache.entry(r).or_insert_with(|| images(r)).clone();
                prod = prod.multiply(&img);
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Rewrites the element in another basis.
    pub fn to_basis(&self, target: NcsfBasis) -> NcsfExpr {
        use NcsfBasis::*;
        match (self.basis, target) {
            (a, b) if a == b => self.clone(),
            (S, Psi) => self.substitute(Psi, s_from_psi_recursive),
            (Psi, S) => self.substitute(S, psi_in_s),
            (Lambda, S) => self.substitute(S, lambda_in_s),
            (S, Lambda) => self.substitute(Lambda, s_in_lambda),
            (Lambda, Psi) => self.to_basis(S).to_basis(Psi),
            (Psi, Lambda) => self.to_basis(S).to_basis(Lambda),
            _ => unreachable!(),
        }
    }

    /// Denominators of the coefficients.
    pub fn denominators(&self) -> Vec<num_bigint::BigInt> {
        self.terms.values().map(|c| c.denom().clone()).collect()
    }
}

impl fmt::Display for NcsfExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sym = self.basis.symbol();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mono: Vec<String> = k.0.iter().map(|r| format!("{sym}{r}")).collect();
            if k.0.is_empty() {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono.join(" "))?;
            } else {
                write!(f, "{} {}", format_rational(&mag), mono.join(" "))?;
            }
        }
        Ok(())
    }
}

/// `S_n` in the `Psi` basis from `n S_n = sum_{k<n} S_k Psi_{n-k}`.
pub fn s_from_psi_recursive(n: u32) -> NcsfExpr {
    s_table(n).pop().unwrap()
}

fn s_table(n: u32) -> Vec<NcsfExpr> {
    let mut table = vec![NcsfExpr::one(NcsfBasis::Psi)];
    for m in 1..=n {
        let mut acc = NcsfExpr::zero(NcsfBasis::Psi);
        for (k, sk) in table.iter().enumerate() {
            acc = acc.add(&sk.multiply(&NcsfExpr::generator(NcsfBasis::Psi, m - k as u32)));
        }
        table.push(acc.scale(&BigRational::new(1.into(), m.into())));
    }
    table
}

/// `S_n` in the `Psi` basis by the closed sum over `1 <= j_1 < ... < j_k < n`:
/// `(1/n) Psi_{j1} (prod_r Psi_{j_{r+1} - j_r} / j_r) Psi_{n - j_k} / j_k`,
/// the empty subsequence contributing `Psi_n / n`.
pub fn s_from_psi_explicit(n: u32) -> NcsfExpr {
    if n == 0 {
        return NcsfExpr::one(NcsfBasis::Psi);
    }
    let mut out = NcsfExpr::zero(NcsfBasis::Psi);
    let inner = n - 1;
    for mask in 0u64..(1u64 << inner) {
        let js: Vec<u32> = (1..n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let mut parts = Vec::with_capacity(js.len() + 1);
        let mut denom: u64 = n as u64;
        let mut prev = 0;
        for &j in &js {
            parts.push(j - prev);
            denom *= j as u64;
            prev = j;
        }
        parts.push(n - prev);
        out.add_term(Comp(parts), BigRational::new(1.into(), denom.into()));
    }
    out
}

/// `n S_n` as the quasi-determinant of the `n x n` matrix with first row
/// `Psi_1 .. Psi_n`, subdiagonal `-1, -2, .., -(n-1)` and `Psi_{c-r+1}` above,
/// boxed at the top-right entry; returns `S_n`.
///
/// Expands `|A|_{1n} = a_{1n} - r (A^{1n})^{-1} c` where `A^{1n}` is upper
/// triangular with scalar diagonal, solved by back substitution.
pub fn quasidet_expand(n: u32) -> NcsfExpr {
    use NcsfBasis::Psi;
    if n == 0 {
        return NcsfExpr::one(Psi);
    }
    let n = n as usize;
    let m = n - 1;
    // t[r][c] for rows 2..=n and columns 1..=n-1 of A (0-based r, c < m).
    let entry = |row: usize, col: usize| -> NcsfExpr {
        // 1-based row/col in A
        if col + 1 == row {
            NcsfExpr::one(Psi).scale(&BigRational::from_integer((1 - row as i64).into()))
        } else if col >= row {
            NcsfExpr::generator(Psi, (col - row + 1) as u32)
        } else {
            NcsfExpr::zero(Psi)
        }
    };
    let t = |r: usize, c: usize| entry(r + 2, c + 1);
    let rhs: Vec<NcsfExpr> = (0..m).map(|r| entry(r + 2, n)).collect();
    let mut x: Vec<NcsfExpr> = vec![NcsfExpr::zero(Psi); m];
    for r in (0..m).rev() {
        let mut acc = rhs[r].clone();
        for (c, xc) in x.iter().enumerate().skip(r + 1) {
            acc = acc.sub(&t(r, c).multiply(xc));
        }
        let diag = -(r as i64 + 1);
        x[r] = acc.scale(&BigRational::new(1.into(), diag.into()));
    }
    let mut det = entry(1, n);
    for (c, xc) in x.iter().enumerate() {
        det = det.sub(&entry(1, c + 1).multiply(xc));
    }
    det.scale(&BigRational::new(1.into(), (n as i64).into()))
}

/// `Psi_n` in the `S` basis, inverting `n S_n = sum_{k<n} S_k Psi_{n-k}`.
fn psi_in_s(n: u32) -> NcsfExpr {
    use NcsfBasis::S;
    let mut table: Vec<NcsfExpr> = vec![NcsfExpr::zero(S)];
    for m in 1..=n {
        let mut acc = NcsfExpr::generator(S, m).scale(&BigRational::from_integer(m.into()));
        for k in 1..m {
            acc = acc.sub(&NcsfExpr::generator(S, k).multiply(&table[(m - k) as usize]));
        }
        table.push(acc);
    }
    table.pop().unwrap()
}

/// `Lambda_n` in the `S` basis from `sigma(t) lambda(-t) = 1`.
fn lambda_in_s(n: u32) -> NcsfExpr {
    lambda_table(n).pop().unwrap()
}

fn lambda_table(n: u32) -> Vec<NcsfExpr> {
    use NcsfBasis::S;
    let mut table = vec![NcsfExpr::one(S)];
    for m in 1..=n {
        // sum_{k=0}^{m} S_{m-k} (-1)^k Lambda_k = 0
        let mut acc = NcsfExpr::zero(S);
        for k in 0..m {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let term = NcsfExpr::generator(S, m - k).multiply(&table[k as usize]);
            acc = acc.add(&term.scale(&BigRational::from_integer(sign.into())));
        }
        let lead_sign: i64 = if m % 2 == 0 { -1 } else { 1 };
        table.push(acc.scale(&BigRational::from_integer(lead_sign.into())));
    }
    table
}

/// `S_n` in the `Lambda` basis from `lambda(-t) sigma(t) = 1`.
fn s_in_lambda(n: u32) -> NcsfExpr {
    use NcsfBasis::Lambda;
    let mut table = vec![NcsfExpr::one(Lambda)];
    for m in 1..=n {
        let mut acc = NcsfExpr::zero(Lambda);
        for k in 1..=m {
            let sign: i64 = if k % 2 == 1 { 1 } else { -1 };
            let term = NcsfExpr::generator(Lambda, k).multiply(&table[(m - k) as usize]);
            acc = acc.add(&term.scale(&BigRational::from_integer(sign.into())));
        }
        table.push(acc);
    }
    table.pop().unwrap()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LambdaSigmaReport {
    pub bound: u32,
    /// `Lambda_k` rendered in the `S` basis, `k = 1..=bound`.
    pub lambdas: Vec<String>,
    /// First degree at which `lambda(-t) sigma(t)` has a non-zero coefficient.
    pub first_failure: Option<u32>,
}

impl LambdaSigmaReport {
    pub fn ok(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Solves `sigma(t) lambda(-t) = 1` for `Lambda_1..Lambda_N` in the `S` basis,
/// then checks the product in the other order, `lambda(-t) sigma(t)`, is 1
/// through degree `N`.
pub fn lambda_sigma_inverse_check(bound: u32) -> LambdaSigmaReport {
    use NcsfBasis::S;
    let lambdas = lambda_table(bound);
    let mut first_failure = None;
    for m in 1..=bound {
        let mut acc = NcsfExpr::zero(S);
        for k in 0..=m {
            let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
            let term = lambdas[k as usize].multiply(&NcsfExpr::generator(S, m - k));
            acc = acc.add(&term.scale(&BigRational::from_integer(sign.into())));
        }
        if !acc.is_zero() {
            first_failure = Some(m);
            break;
        }
    }
    LambdaSigmaReport {
        bound,
        lambdas: lambdas.iter().skip(1).map(|l| l.to_string()).collect(),
        first_failure,
    }
}

/// Finitely supported element of the tensor square, keyed by pairs of
/// compositions in one basis.
#[derive(Clone, PartialEq, Eq)]
pub struct NcsfTensor {
    basis: NcsfBasis,
    terms: BTreeMap<(Comp, Comp), BigRational>,
}

impl fmt::Debug for NcsfTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|((a, b), c)| (format!("{:?}(x){:?}", a.0, b.0), c)))
            .finish()
    }
}

impl NcsfTensor {
    pub fn zero(basis: NcsfBasis) -> Self {
        NcsfTensor { basis, terms: BTreeMap::new() }
    }

    fn add_term(&mut self, key: (Comp, Comp), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `a (x) b`.
    pub fn pure(a: &NcsfExpr, b: &NcsfExpr) -> Self {
        assert_eq!(a.basis, b.basis);
        let mut out = Self::zero(a.basis);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.add_term((ka.clone(), kb.clone()), ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &BigRational)> {
        self.terms.iter().map(|((a, b), c)| (a.0.as_slice(), b.0.as_slice(), c))
    }
}

/// Coproduct with every `Psi_k` primitive, extended multiplicatively into the
/// untwisted tensor square. The input is first rewritten in the `Psi` basis.
pub fn ncsf_coproduct(x: &NcsfExpr) -> NcsfTensor {
    let x = x.to_basis(NcsfBasis::Psi);
    let mut out = NcsfTensor::zero(NcsfBasis::Psi);
    for (comp, c) in &x.terms {
        let m = comp.0.len();
        for mask in 0u64..(1u64 << m) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, &r) in comp.0.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(r);
                } else {
                    right.push(r);
                }
            }
            out.add_term((Comp(left), Comp(right)), c.clone());
        }
    }
    out
}

/// `sum_{p+q=n} S_p (x) S_q`, both factors expanded in the `Psi` basis.
pub fn grouplike_sum(n: u32) -> NcsfTensor {
    let table = s_table(n);
    let mut out = NcsfTensor::zero(NcsfBasis::Psi);
    for p in 0..=n as usize {
        out = out.add(&NcsfTensor::pure(&table[p], &table[n as usize - p]));
    }
    out
}

/// Whether `Delta S_n = sum_{p+q=n} S_p (x) S_q`.
pub fn comult_s_check(n: u32) -> bool {
    ncsf_coproduct(&s_from_psi_recursive(n)) == grouplike_sum(n)
}

/// Checks `(Delta (x) id) Delta = (id (x) Delta) Delta` on every `Psi`
/// monomial of weight at most `max_weight`; returns the first failure.
pub fn coassociativity_check(max_weight: u32) -> Result<(), Vec<u32>> {
    type Triple = BTreeMap<(Comp, Comp, Comp), BigRational>;
    fn push(t: &mut Triple, k: (Comp, Comp, Comp), c: &BigRational) {
        let slot = t.entry(k.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            t.remove(&k);
        }
    }
    for w in 0..=max_weight {
        for comp in crate::seminil::compositions(w) {
            let x = NcsfExpr::monomial(NcsfBasis::Psi, comp.parts().to_vec(), BigRational::one());
            let d = ncsf_coproduct(&x);
            let mut left: Triple = BTreeMap::new();
            let mut right: Triple = BTreeMap::new();
            for ((a, b), c) in &d.terms {
                let da = ncsf_coproduct(&NcsfExpr { basis: NcsfBasis::Psi, terms: [(a.clone(), BigRational::one())].into() });
                for ((a1, a2), c1) in &da.terms {
                    push(&mut left, (a1.clone(), a2.clone(), b.clone()), &(c * c1));
                }
                let db = ncsf_coproduct(&NcsfExpr { basis: NcsfBasis::Psi, terms: [(b.clone(), BigRational::one())].into() });
                for ((b1, b2), c2) in &db.terms {
                    push(&mut right, (a.clone(), b1.clone(), b2.clone()), &(c * c2));
                }
            }
            if left != right {
                return Err(comp.parts().to_vec());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;
    use NcsfBasis::*;

    fn psi(parts: &[(Vec<u32>, BigRational)]) -> NcsfExpr {
        NcsfExpr::from_terms(Psi, parts.iter().cloned())
    }

    fn printed_2s2() -> NcsfExpr {
        psi(&[(vec![2], rat(1, 1)), (vec![1, 1], rat(1, 1))])
    }

    fn printed_3s3() -> NcsfExpr {
        psi(&[
            (vec![3], rat(1, 1)),
            (vec![1, 2], rat(1, 1)),
            (vec![2, 1], rat(1, 2)),
            (vec![1, 1, 1], rat(1, 2)),
        ])
    }

    #[test]
    fn small_cases() {
        assert_eq!(s_from_psi_recursive(0), NcsfExpr::one(Psi));
        assert_eq!(s_from_psi_recursive(2).scale(&rat(2, 1)), printed_2s2());
        assert_eq!(s_from_psi_recursive(3).scale(&rat(3, 1)), printed_3s3());
        assert_eq!(s_from_psi_explicit(1), NcsfExpr::generator(Psi, 1));
        assert_eq!(s_from_psi_explicit(2).scale(&rat(2, 1)), printed_2s2());
        assert_eq!(quasidet_expand(2).scale(&rat(2, 1)), printed_2s2());
        assert_eq!(quasidet_expand(3).scale(&rat(3, 1)), printed_3s3());
    }

    #[test]
    fn three_routes_agree() {
        for n in 1..=8 {
            let r = s_from_psi_recursive(n);
            assert_eq!(r, s_from_psi_explicit(n), "explicit n={n}");
            assert_eq!(r, quasidet_expand(n), "quasidet n={n}");
        }
    }

    #[test]
    fn display_order() {
        assert_eq!(
            printed_3s3().to_string(),
            "Psi3 + Psi1 Psi2 + 1/2 Psi2 Psi1 + 1/2 Psi1 Psi1 Psi1"
        );
    }

    #[test]
    fn lambda_sigma() {
        let r = lambda_sigma_inverse_check(5);
        assert!(r.ok());
        assert_eq!(r.lambdas[0], "S1");
        // Lambda_2 = S1^2 - S2
        assert_eq!(lambda_in_s(2), NcsfExpr::from_terms(S, [(vec![1, 1], rat(1, 1)), (vec![2], rat(-1, 1))]));
        assert_eq!(lambda_in_s(1), NcsfExpr::generator(S, 1));
    }

    #[test]
    fn basis_changes_round_trip() {
        for n in 1..=5 {
            for b in [Lambda, S, Psi] {
                let x = NcsfExpr::generator(b, n);
                for c in [Lambda, S, Psi] {
                    assert_eq!(x.to_basis(c).to_basis(b), x, "{b} -> {c} -> {b}, n={n}");
                }
            }
        }
    }

    #[test]
    fn coproducts() {
        let d = ncsf_coproduct(&NcsfExpr::generator(Psi, 3));
        let mut expect = NcsfTensor::zero(Psi);
        expect.add_term((Comp(vec![3]), Comp(vec![])), rat(1, 1));
        expect.add_term((Comp(vec![]), Comp(vec![3])), rat(1, 1));
        assert_eq!(d, expect);
        assert!(comult_s_check(2));
        let unit = ncsf_coproduct(&NcsfExpr::one(Psi));
        assert_eq!(unit.terms().collect::<Vec<_>>(), vec![(&[][..], &[][..], &rat(1, 1))]);
    }

    #[test]
    fn comult_s_through_eight() {
        for n in 0..=8 {
            assert!(comult_s_check(n), "n={n}");
        }
    }

    #[test]
    fn coassociative() {
        assert_eq!(coassociativity_check(6), Ok(()));
    }

    #[test]
    fn denominators_divide_factorial() {
        let mut fact = num_bigint::BigInt::from(1);
        for n in 1..=8u32 {
            fact *= n;
            for d in s_from_psi_recursive(n).denominators() {
                assert!((&fact % d).is_zero(), "n={n}");
            }
        }
    }

    #[test]
    fn leading_coefficient() {
        for n in 1..=6 {
            let s = s_from_psi_recursive(n);
            assert_eq!(s.coeff(&[n]), rat(1, n as i64));
        }
    }
}
