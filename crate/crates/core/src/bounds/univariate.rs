use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial; `coeffs[k]` multiplies `t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coeffs: Vec<BigRational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(k.into()))
                .collect(),
        )
    }

    /// `p(t) / t`, defined when the constant term vanishes.
    pub fn div_by_t(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Self::zero()),
            Some(c) if c.is_zero() => Some(Self::new(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; `None` when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let factor = &rem[top] / &lc;
            let shift = top - dd;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= c * &factor;
            }
            quot[shift] = factor;
            rem.pop();
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lc = a.leading_coeff();
            a.scale(&(BigRational::one() / lc))
        }
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn sub(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{a}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{a}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn trims_and_evaluates() {
        let p = UnivariatePoly::from_ints(&[2, -4, 3, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval(&rat(1)), rat(1));
        assert_eq!(p.derivative(), UnivariatePoly::from_ints(&[-4, 6]));
        assert_eq!(p.to_string(), "3*t^2 - 4*t + 2");
        assert_eq!(UnivariatePoly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_by_t() {
        let p = UnivariatePoly::from_ints(&[0, 5, -1]);
        assert_eq!(p.div_by_t(), Some(UnivariatePoly::from_ints(&[5, -1])));
        assert_eq!(UnivariatePoly::from_ints(&[1, 1]).div_by_t(), None);
    }

    #[test]
    fn euclid() {
        // (t-1)(t-2) and (t-1)(t+3)
        let a = UnivariatePoly::from_ints(&[2, -3, 1]);
        let b = UnivariatePoly::from_ints(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), UnivariatePoly::from_ints(&[-1, 1]));
        let (q, r) = a.div_rem(&UnivariatePoly::from_ints(&[0, 2])).unwrap();
        assert_eq!(&(&q * &UnivariatePoly::from_ints(&[0, 2])) + &r, a);
        assert_eq!(r, UnivariatePoly::from_ints(&[2]));
        assert!(a.div_rem(&UnivariatePoly::zero()).is_none());
        assert_eq!(UnivariatePoly::zero().gcd(&b).leading_coeff(), rat(1));
    }

    #[test]
    fn arithmetic() {
        let a = UnivariatePoly::from_ints(&[1, 1]);
        let b = UnivariatePoly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, UnivariatePoly::from_ints(&[-1, 0, 1]));
        assert_eq!(&a - &a, UnivariatePoly::zero());
        assert_eq!(&a + &b, UnivariatePoly::from_ints(&[0, 2]));
    }
}
