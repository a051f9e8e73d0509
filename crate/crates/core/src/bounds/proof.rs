//! The auxiliary univariate polynomials used to bound the degree of an
//! invariant hypersurface.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::symmetric::{ipow, sigmas};
use super::univariate::UnivariatePoly;
use crate::error::{Error, Result};
use crate::weights::WeightSystem;

fn require_dim(w: &WeightSystem) -> Result<usize> {
    match w.dim() {
        n if n >= 2 => Ok(n),
        n => Err(Error::DimensionTooSmall { got: n, min: 2 }),
    }
}

/// `Psi(t) = sum_{j=0}^{n-1} (sum_{k=0}^{j} (-1)^k sigma_{j-k} t^{k+1}) (d-1)^{n-1-j}`.
pub fn psi(w: &WeightSystem, d: i64) -> Result<UnivariatePoly> {
    let n = require_dim(w)?;
    let s = sigmas(w);
    let dm1 = BigInt::from(d - 1);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for j in 0..n {
        let scale = ipow(&dm1, n - 1 - j);
        for k in 0..=j {
            let term = &s[j - k] * &scale;
            if k % 2 == 0 {
                coeffs[k + 1] += term;
            } else {
                coeffs[k + 1] -= term;
            }
        }
    }
    Ok(UnivariatePoly::new(
        coeffs.into_iter().map(BigRational::from_integer).collect(),
    ))
}

/// `Psi'` for odd `n`, `(Psi / t)'` for even `n`.
pub fn omega_poly(w: &WeightSystem, d: i64) -> Result<UnivariatePoly> {
    let n = require_dim(w)?;
    let p = psi(w, d)?;
    if n % 2 == 1 {
        Ok(p.derivative())
    } else {
        let phi = p.div_by_t().expect("psi has no constant term");
        Ok(phi.derivative())
    }
}

/// `Phi(t) = Psi(t) / t`.
pub fn phi(w: &WeightSystem, d: i64) -> Result<UnivariatePoly> {
    Ok(psi(w, d)?.div_by_t().expect("psi has no constant term"))
}

/// `P_m(t) = sum_{j=0}^{m} (-1)^j (m+1-j) t^{m-j}`; `P_0 = 1`.
pub fn p_poly(m: usize) -> UnivariatePoly {
    let coeffs = (0..=m)
        .map(|power| {
            // power = m - j
            let j = m - power;
            let c = (power + 1) as i64;
            if j.is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect::<Vec<_>>();
    UnivariatePoly::from_ints(&coeffs)
}

/// `Q_m = P_m - P_{m-1}`, `m >= 1`.
pub fn q_poly(m: usize) -> Result<UnivariatePoly> {
    if m == 0 {
        return Err(Error::IndexOutOfRange { index: 0, limit: 1 });
    }
    Ok(&p_poly(m) - &p_poly(m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    #[test]
    fn psi_examples() {
        let p = psi(&ws(&[1, 1, 1]), 3).unwrap();
        assert_eq!(p, UnivariatePoly::from_ints(&[0, 5, -1]));
        assert_eq!(p.eval(&rat(0)), rat(0));
        // j=0: t, j=1: 4t - t^2, j=2: 6t - 4t^2 + t^3
        let p = psi(&ws(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(p, UnivariatePoly::from_ints(&[0, 11, -5, 1]));
        assert_eq!(p.eval(&rat(1)), rat(7));
        assert_eq!(
            psi(&ws(&[1, 1]), 3),
            Err(Error::DimensionTooSmall { got: 1, min: 2 })
        );
    }

    #[test]
    fn psi_at_degree_one_keeps_last_row_only() {
        // 0^0 = 1: only j = n-1 survives.
        let p = psi(&ws(&[1, 1, 1]), 1).unwrap();
        assert_eq!(p, UnivariatePoly::from_ints(&[0, 3, -1]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(
            omega_poly(&ws(&[1, 1, 1]), 3).unwrap(),
            UnivariatePoly::from_ints(&[-1])
        );
        assert_eq!(
            omega_poly(&ws(&[1, 1, 1, 1]), 2).unwrap(),
            UnivariatePoly::from_ints(&[11, -10, 3])
        );
    }

    #[test]
    fn p_and_q() {
        assert_eq!(p_poly(0), UnivariatePoly::from_ints(&[1]));
        assert_eq!(p_poly(1), UnivariatePoly::from_ints(&[-1, 2]));
        assert_eq!(p_poly(2), UnivariatePoly::from_ints(&[1, -2, 3]));
        assert_eq!(q_poly(2).unwrap(), UnivariatePoly::from_ints(&[2, -4, 3]));
        assert!(q_poly(0).is_err());
    }
}
