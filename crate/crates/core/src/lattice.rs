//! Integral forms inside the classical quotient: `Z`-lattices spanned by
//! products of divided powers, plain imaginary generators or `e~` generators,
//! kept in Hermite normal form over quotient coordinates.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeffs::{common_denominator, format_rational, BigInt, BigRational};
use crate::free_algebra::{AlgebraError, NCPoly};
use crate::gkm::{GradedQuotient, SerrePresentation};
use crate::quiver::DimVector;

/// Row-style Hermite normal form of an integer lattice: rows in echelon
/// form, positive pivots, entries above each pivot reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Hnf {
    pub fn new(ncols: usize) -> Self {
        Hnf { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<BigInt>>>(ncols: usize, rows: I) -> Self {
        let mut h = Hnf::new(ncols);
        for r in rows {
            h.insert(r);
        }
        h
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Product of the pivots: the covolume when the rank is full.
    pub fn pivot_product(&self) -> BigInt {
        self.rows.iter().zip(&self.pivots).map(|(r, &p)| r[p].clone()).product()
    }

    fn reduce(&self, v: &mut [BigInt]) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].div_floor(&r[p]);
            if !f.is_zero() {
                for (x, y) in v.iter_mut().zip(r) {
                    *x -= &f * y;
                }
            }
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the generating set; returns whether the lattice grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.ncols);
        if self.contains(&v) {
            return false;
        }
        let mut v = v;
        for col in 0..self.ncols {
            if v[col].is_zero() {
                continue;
            }
            match self.pivots.iter().position(|&p| p == col) {
                None => {
                    if v[col].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    let at = self.pivots.partition_point(|&p| p < col);
                    self.pivots.insert(at, col);
                    self.rows.insert(at, v);
                    break;
                }
                Some(i) => {
                    let a = self.rows[i][col].clone();
                    let b = v[col].clone();
                    let e = a.extended_gcd(&b);
                    let (g, x, y) = (e.gcd, e.x, e.y);
                    let (ag, bg) = (&a / &g, &b / &g);
                    let r = &self.rows[i];
                    let new_r: Vec<BigInt> = r.iter().zip(&v).map(|(ri, vi)| &x * ri + &y * vi).collect();
                    let new_v: Vec<BigInt> = r.iter().zip(&v).map(|(ri, vi)| &ag * vi - &bg * ri).collect();
                    self.rows[i] = new_r;
                    if self.rows[i][col].is_negative() {
                        self.rows[i].iter_mut().for_each(|z| *z = -&*z);
                    }
                    v = new_v;
                }
            }
        }
        self.normalize();
        true
    }

    fn normalize(&mut self) {
        for i in 0..self.rows.len() {
            let p = self.pivots[i];
            for j in 0..i {
                let f = self.rows[j][p].div_floor(&self.rows[i][p]);
                if !f.is_zero() {
                    let ri = self.rows[i].clone();
                    for (x, y) in self.rows[j].iter_mut().zip(&ri) {
                        *x -= &f * y;
                    }
                }
            }
        }
    }
}

/// Which integral generators span the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegralForm {
    /// Divided powers at real vertices, plain `e_{(i,n)}` at imaginary ones.
    DividedPower,
    /// Divided powers at real vertices, `e~_{(i,n)}` at imaginary ones.
    Tilde,
}

/// A `Z`-lattice inside one graded piece, stored as integer vectors of
/// quotient coordinates scaled by `denominator`.
#[derive(Debug, Clone)]
pub struct GradedLattice {
    pub degree: DimVector,
    pub dim: usize,
    pub denominator: BigInt,
    pub hnf: Hnf,
}

impl GradedLattice {
    fn contains_coords(&self, coords: &[BigRational]) -> bool {
        let scaled: Option<Vec<BigInt>> = coords
            .iter()
            .map(|c| {
                let s = c * BigRational::from_integer(self.denominator.clone());
                s.is_integer().then(|| s.to_integer())
            })
            .collect();
        scaled.is_some_and(|v| self.hnf.contains(&v))
    }

    /// Covolume relative to the standard-monomial lattice; `None` below full rank.
    pub fn covolume(&self) -> Option<BigRational> {
        if self.hnf.rank() < self.dim {
            return None;
        }
        let scale = num_traits::pow(self.denominator.clone(), self.dim);
        Some(BigRational::new(self.hnf.pivot_product(), scale))
    }

    /// Basis elements as polynomials over the standard monomials.
    fn basis_polys(&self, quot: &GradedQuotient<BigRational>) -> Vec<NCPoly<BigRational>> {
        let std = quot.standard_monomials();
        let den = BigRational::from_integer(self.denominator.clone());
        self.hnf
            .rows()
            .iter()
            .map(|r| {
                NCPoly::from_terms(
                    std.iter().zip(r).map(|(w, c)| (w.clone(), BigRational::from_integer(c.clone()) / &den)),
                )
            })
            .collect()
    }
}

/// Every sequence of integral generator labels `(vertex, level)` of weight `d`.
fn label_sequences(d: &DimVector) -> Vec<Vec<(usize, u32)>> {
    fn go(rem: &mut Vec<u32>, prefix: &mut Vec<(usize, u32)>, out: &mut Vec<Vec<(usize, u32)>>) {
        if rem.iter().all(|&x| x == 0) {
            out.push(prefix.clone());
            return;
        }
        for v in 0..rem.len() {
            for n in 1..=rem[v] {
                rem[v] -= n;
                prefix.push((v, n));
                go(rem, prefix, out);
                prefix.pop();
                rem[v] += n;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut d.0.clone(), &mut Vec::new(), &mut out);
    out
}

fn integral_generator(
    p: &SerrePresentation<BigRational>,
    form: IntegralForm,
    v: usize,
    n: u32,
) -> Result<NCPoly<BigRational>, AlgebraError> {
    let q = p.quiver();
    if q.kind(v).is_real() {
        return p.divided_power(v, n);
    }
    match form {
        IntegralForm::DividedPower => Ok(NCPoly::letter(q.generator(v, n).expect("imaginary vertex has every level"))),
        IntegralForm::Tilde => p.tilde_generator(v, n),
    }
}

/// Lattice in degree `d` spanned by all products of integral generators.
pub fn graded_lattice(
    p: &SerrePresentation<BigRational>,
    form: IntegralForm,
    d: &DimVector,
) -> Result<GradedLattice, AlgebraError> {
    let quot = p.quotient(d)?;
    let mut gens: BTreeMap<(usize, u32), NCPoly<BigRational>> = BTreeMap::new();
    let mut coords = Vec::new();
    for seq in label_sequences(d) {
        let mut x = NCPoly::one();
        for &(v, n) in &seq {
            if let std::collections::btree_map::Entry::Vacant(e) = gens.entry((v, n)) {
                e.insert(integral_generator(p, form, v, n)?);
            }
            x = x.multiply(&gens[&(v, n)]);
        }
        coords.push(quot.coordinates(&x)?);
    }
    let denominator = common_denominator(coords.iter().flatten());
    let den = BigRational::from_integer(denominator.clone());
    let dim = quot.dim();
    let hnf = Hnf::from_rows(dim, coords.iter().map(|c| c.iter().map(|x| (x * &den).to_integer()).collect()));
    Ok(GradedLattice { degree: d.clone(), dim, denominator, hnf })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRow {
    pub degree: Vec<u32>,
    pub dim: usize,
    pub rank: usize,
    /// Covolume against the standard-monomial lattice, as `p/q`.
    pub covolume: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureFailure {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub form: IntegralForm,
    pub rows: Vec<LatticeRow>,
    /// Every lattice has rank equal to the graded dimension.
    pub full_rank: bool,
    pub closure_failures: Vec<ClosureFailure>,
}

impl LatticeReport {
    pub fn ok(&self) -> bool {
        self.full_rank && self.closure_failures.is_empty()
    }
}

/// Builds the lattice in every degree below `max` (componentwise) and checks
/// that products of basis vectors of `L[d1]` and `L[d2]` lie in `L[d1 + d2]`.
pub fn integral_lattice_closure(
    p: &SerrePresentation<BigRational>,
    form: IntegralForm,
    max: &DimVector,
) -> Result<LatticeReport, AlgebraError> {
    let mut degrees = max.below();
    degrees.retain(|d| !d.is_zero());
    degrees.sort_by_key(|d| (d.total(), std::cmp::Reverse(d.0.clone())));
    let mut lattices = BTreeMap::new();
    let mut rows = Vec::new();
    for d in &degrees {
        let l = graded_lattice(p, form, d)?;
        rows.push(LatticeRow {
            degree: d.0.clone(),
            dim: l.dim,
            rank: l.hnf.rank(),
            covolume: l.covolume().map(|c| format_rational(&c)),
        });
        lattices.insert(d.0.clone(), l);
    }
    let full_rank = rows.iter().all(|r| r.rank == r.dim);
    let mut closure_failures = Vec::new();
    for d1 in &degrees {
        for d2 in &degrees {
            let sum = d1 + d2;
            let Some(target) = lattices.get(&sum.0) else {
                continue;
            };
            let q1 = p.quotient(d1)?;
            let q2 = p.quotient(d2)?;
            let qs = p.quotient(&sum)?;
            let b1 = lattices[&d1.0].basis_polys(&q1);
            let b2 = lattices[&d2.0].basis_polys(&q2);
            let closed = b1.iter().all(|x| {
                b2.iter().all(|y| qs.coordinates(&x.multiply(y)).map(|c| target.contains_coords(&c)).unwrap_or(false))
            });
            if !closed {
                closure_failures.push(ClosureFailure { left: d1.0.clone(), right: d2.0.clone() });
            }
        }
    }
    Ok(LatticeReport { form, rows, full_rank, closure_failures })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormComparisonRow {
    pub degree: Vec<u32>,
    pub equal: bool,
    pub divided_power_in_tilde: bool,
    pub tilde_in_divided_power: bool,
}

/// Compares the two integral forms degree by degree.
pub fn compare_integral_forms(
    p: &SerrePresentation<BigRational>,
    max: &DimVector,
) -> Result<Vec<FormComparisonRow>, AlgebraError> {
    let mut out = Vec::new();
    for d in max.below().into_iter().filter(|d| !d.is_zero()) {
        let a = graded_lattice(p, IntegralForm::DividedPower, &d)?;
        let b = graded_lattice(p, IntegralForm::Tilde, &d)?;
        let inside = |x: &GradedLattice, y: &GradedLattice| {
            let den = BigRational::from_integer(x.denominator.clone());
            x.hnf.rows().iter().all(|r| {
                let c: Vec<BigRational> = r.iter().map(|z| BigRational::from_integer(z.clone()) / &den).collect();
                y.contains_coords(&c)
            })
        };
        let ab = inside(&a, &b);
        let ba = inside(&b, &a);
        out.push(FormComparisonRow { degree: d.0, equal: ab && ba, divided_power_in_tilde: ab, tilde_in_divided_power: ba });
    }
    Ok(out)
}
