//! Certified enclosures of the positive root of `R_n(x) = x(x+1)^n - 2`.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{pow, One, Signed, Zero};

use crate::decimal::truncate_decimal;
use crate::error::{Error, Result};

/// Closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `offset + scale * [lo, hi]` for `scale >= 0`.
    pub fn affine(&self, offset: &BigRational, scale: &BigRational) -> Self {
        assert!(!scale.is_negative());
        RationalInterval::new(offset + scale * &self.lo, offset + scale * &self.hi)
    }

    /// Truncated decimal digits shared by both endpoints, if they agree.
    pub fn common_truncation(&self, places: usize) -> Option<String> {
        let lo = truncate_decimal(&self.lo, places);
        (lo == truncate_decimal(&self.hi, places)).then_some(lo)
    }
}

/// Default enclosure width, `10^-6`.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000))
}

/// `R_n(x) = x (x+1)^n - 2`.
pub fn r_n(n: usize, x: &BigRational) -> BigRational {
    x * pow(x + BigRational::one(), n) - BigRational::from_integer(2.into())
}

/// Bisection enclosure of the positive root of `R_n`, starting from
/// `[0, 2]`, until the width is at most `width`.
///
/// On return `R_n(lo) < 0 < R_n(hi)`, except when a bisection midpoint hits
/// the root exactly (only `n = 1`, root `1`), where `lo = hi = root`.
pub fn root_enclosure(n: usize, width: &BigRational) -> Result<RationalInterval> {
    if n == 0 {
        return Err(Error::DimensionTooSmall { got: 0, min: 1 });
    }
    if !width.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "enclosure width must be positive, got {width}"
        )));
    }
    // Endpoints are kept as lo / 2^k, hi / 2^k with integer numerators.
    let mut k = 0usize;
    let mut lo = BigInt::zero();
    let mut hi = BigInt::from(2);
    let dyadic = |num: &BigInt, k: usize| BigRational::new(num.clone(), BigInt::one() << k);
    while dyadic(&(&hi - &lo), k) > *width {
        let mid = &lo + &hi;
        k += 1;
        lo <<= 1;
        hi <<= 1;
        match dyadic_sign(n, &mid, k) {
            Sign::NoSign => return Ok(RationalInterval::new(dyadic(&mid, k), dyadic(&mid, k))),
            Sign::Minus => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(RationalInterval::new(dyadic(&lo, k), dyadic(&hi, k)))
}

/// Sign of `R_n(a / 2^k)`, i.e. of `a (a + 2^k)^n - 2^{k(n+1)+1}`.
fn dyadic_sign(n: usize, a: &BigInt, k: usize) -> Sign {
    let scale = BigInt::one() << k;
    let value = a * pow(a + &scale, n) - (BigInt::one() << (k * (n + 1) + 1));
    value.sign()
}

/// Enclosure of the constant `alpha_n` governing the bound in dimension
/// `n >= 3`: the positive root of `R_n` for odd `n`, `alpha_{n-1}` for even
/// `n`.
pub fn alpha_enclosure(n: usize, width: &BigRational) -> Result<RationalInterval> {
    if n < 3 {
        return Err(Error::DimensionTooSmall { got: n, min: 3 });
    }
    root_enclosure(alpha_index(n), width)
}

/// Odd index `m` with `alpha_n = alpha_m`.
pub fn alpha_index(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n - 1
    } else {
        n
    }
}
