//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic on the raw exponents, so the last entry is always the
//! leading term used by [`Poly::div_rem`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weights::WeightSystem;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, w: &WeightSystem) -> i64 {
        self.0
            .iter()
            .zip(w.weights())
            .map(|(&e, &wi)| e as i64 * wi as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables with exact rational coefficients.
///
/// No stored coefficient is zero; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

/// Outcome of the restricted quasi-smoothness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuasiSmoothness {
    QuasiSmooth,
    NotQuasiSmooth,
    Undetermined,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::term(nvars, Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(c.into()))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(nvars, i), BigRational::one())
    }

    pub fn term(nvars: usize, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.0.len(), nvars, "monomial length must match nvars");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining
    /// like terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), nvars, "monomial length must match nvars");
            p.add_term(m, c);
        }
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms.iter().map(|(e, c)| {
                (
                    Monomial::new(e.to_vec()),
                    BigRational::from_integer((*c).into()),
                )
            }),
        )
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Constant value if the polynomial has no non-constant term.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Weighted degree shared by every monomial.
    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<i64> {
        if w.num_vars() != self.nvars {
            return Err(Error::AmbientMismatch);
        }
        let mut degrees = self.terms.keys().map(|m| m.weighted_degree(w));
        let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
        for d in degrees {
            if d != first {
                return Err(Error::NotQuasiHomogeneous(first, d));
            }
        }
        Ok(first)
    }

    /// True if zero or quasi-homogeneous of weighted degree `d`.
    pub fn is_zero_or_of_degree(&self, w: &WeightSystem, d: i64) -> bool {
        self.nvars == w.num_vars() && self.terms.keys().all(|m| m.weighted_degree(w) == d)
    }

    pub fn derivative(&self, i: usize) -> Result<Poly> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.nvars,
            });
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * BigRational::from_integer(e.into()));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::constant(self.nvars, BigRational::one());
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::AmbientMismatch);
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `x_i := images[i]`; every image must share one `nvars`.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::AmbientMismatch);
        }
        let target = images.first().map_or(0, Poly::nvars);
        if images.iter().any(|p| p.nvars != target) {
            return Err(Error::AmbientMismatch);
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Division by a single divisor under the graded lexicographic order:
    /// returns `(q, r)` with `self = q * divisor + r` and no term of `r`
    /// divisible by the leading monomial of `divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if self.nvars != divisor.nvars {
            return Err(Error::AmbientMismatch);
        }
        let (lm, lc) = divisor.leading_term().ok_or(Error::ZeroDivisor)?;
        let mut p = self.clone();
        let mut q = Poly::zero(self.nvars);
        let mut r = Poly::zero(self.nvars);
        while let Some((m, c)) = p.terms.pop_last() {
            match m.div(lm) {
                Some(shift) => {
                    let factor = c / lc;
                    // The leading term cancels exactly; subtract the rest.
                    for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                        p.add_term(dm.mul(&shift), -(dc * &factor));
                    }
                    q.add_term(shift, factor);
                }
                None => r.add_term(m, c),
            }
        }
        Ok((q, r))
    }

    /// Decides quasi-smoothness for Pham–Brieskorn polynomials
    /// `sum c_i x_i^{m_i}`; anything else is `Undetermined`.
    pub fn quasi_smoothness(&self) -> Result<QuasiSmoothness> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut seen = vec![false; self.nvars];
        for m in self.terms.keys() {
            let mut support = m.0.iter().enumerate().filter(|(_, &e)| e > 0);
            match (support.next(), support.next()) {
                (Some((i, _)), None) if !seen[i] => seen[i] = true,
                _ => return Ok(QuasiSmoothness::Undetermined),
            }
        }
        Ok(if seen.iter().all(|&s| s) {
            QuasiSmoothness::QuasiSmooth
        } else {
            QuasiSmoothness::NotQuasiSmooth
        })
    }
}

/// Returns `q` with `p = q * f` when `f` divides `p`.
pub fn divides(f: &Poly, p: &Poly) -> Result<Option<Poly>> {
    let (q, r) = p.div_rem(f)?;
    Ok(r.is_zero().then_some(q))
}

/// Weighted degree of a nonzero quasi-homogeneous polynomial.
pub fn weighted_degree(f: &Poly, w: &WeightSystem) -> Result<i64> {
    f.weighted_degree(w)
}

pub fn partial_derivative(f: &Poly, i: usize) -> Result<Poly> {
    f.derivative(i)
}

pub fn is_quasi_smooth_restricted(f: &Poly) -> Result<QuasiSmoothness> {
    f.quasi_smoothness()
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &'a Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch in add");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &'a Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch in sub");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch in mul");
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Prints in the textual polynomial grammar, leading term first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{e}")
                        }
                    })
                    .collect();
            if factors.is_empty() {
                write!(f, "{}", fmt_coeff(&magnitude))?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{}*", fmt_coeff(&magnitude))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_int_terms(nvars, terms)
    }

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weighted_degree_examples() {
        let f = p(3, &[(&[1, 1, 0], 1)]);
        assert_eq!(f.weighted_degree(&ws(&[1, 1, 1])), Ok(2));

        let f = p(4, &[(&[35, 0, 0, 0], 1), (&[0, 21, 0, 0], 1)]);
        assert_eq!(f.weighted_degree(&ws(&[3, 5, 1, 7])), Ok(105));

        let f = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(
            f.weighted_degree(&ws(&[1, 2])),
            Err(Error::NotQuasiHomogeneous(2, 1))
        );
        assert_eq!(
            Poly::zero(2).weighted_degree(&ws(&[1, 2])),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn partial_derivative_examples() {
        let f = p(2, &[(&[3, 0], 1)]);
        assert_eq!(f.derivative(0).unwrap(), p(2, &[(&[2, 0], 3)]));
        let f = p(2, &[(&[0, 2], 1)]);
        assert!(f.derivative(0).unwrap().is_zero());
        let f = p(2, &[(&[2, 1], 1)]);
        assert_eq!(f.derivative(1).unwrap(), p(2, &[(&[2, 0], 1)]));
        assert_eq!(
            f.derivative(2),
            Err(Error::IndexOutOfRange { index: 2, limit: 2 })
        );
    }

    #[test]
    fn divides_examples() {
        let f = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let g = p(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let q = divides(&f, &g).unwrap().unwrap();
        assert_eq!(q, p(2, &[(&[1, 0], 1), (&[0, 1], 1)]));

        let x0 = Poly::var(2, 0);
        let x1 = Poly::var(2, 1);
        assert_eq!(divides(&x0, &x1).unwrap(), None);
        assert_eq!(divides(&Poly::zero(2), &x1), Err(Error::ZeroDivisor));
    }

    #[test]
    fn division_identity_holds_with_remainder() {
        let f = p(3, &[(&[1, 1, 0], 2), (&[0, 0, 2], -3)]);
        let g = p(3, &[(&[3, 1, 0], 1), (&[0, 2, 2], 5), (&[1, 0, 0], 7)]);
        let (q, r) = g.div_rem(&f).unwrap();
        assert_eq!(&(&q * &f) + &r, g);
        let (lm, _) = f.leading_term().unwrap();
        assert!(r.terms().all(|(m, _)| m.div(lm).is_none()));
    }

    #[test]
    fn quasi_smoothness_examples() {
        let f = p(3, &[(&[2, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 5], 1)]);
        assert_eq!(f.quasi_smoothness(), Ok(QuasiSmoothness::QuasiSmooth));
        let f = p(3, &[(&[2, 0, 0], 1), (&[0, 3, 0], 1)]);
        assert_eq!(f.quasi_smoothness(), Ok(QuasiSmoothness::NotQuasiSmooth));
        let f = p(3, &[(&[2, 1, 0], 1), (&[0, 0, 3], 1)]);
        assert_eq!(f.quasi_smoothness(), Ok(QuasiSmoothness::Undetermined));
        // Two pure powers of the same variable are not Pham–Brieskorn.
        let f = p(2, &[(&[2, 0], 1), (&[3, 0], 1), (&[0, 1], 1)]);
        assert_eq!(f.quasi_smoothness(), Ok(QuasiSmoothness::Undetermined));
        assert_eq!(Poly::zero(2).quasi_smoothness(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_is_leading_term_first() {
        let f = Poly::from_terms(
            3,
            [
                (Monomial::new(vec![2, 0, 0]), rat(1)),
                (Monomial::new(vec![0, 1, 1]), rat(3)),
                (Monomial::new(vec![1, 0, 0]), ratio(-1, 2)),
                (Monomial::new(vec![0, 0, 0]), rat(-4)),
            ],
        );
        assert_eq!(f.to_string(), "x0^2 + 3*x1*x2 - 1/2*x0 - 4");
        assert_eq!((-&Poly::var(2, 1)).to_string(), "-x1");
        assert_eq!(Poly::zero(2).to_string(), "0");
    }

    #[test]
    fn compose_with_linear_forms() {
        // (x0 + x1)^2 evaluated via substitution x0 -> y0 + y1, x1 -> y0 - y1
        let f = p(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        let imgs = [
            p(2, &[(&[1, 0], 1), (&[0, 1], 1)]),
            p(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ];
        assert_eq!(f.compose(&imgs).unwrap(), p(2, &[(&[2, 0], 4)]));
    }
}
