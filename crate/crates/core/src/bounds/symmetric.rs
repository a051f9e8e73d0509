//! Elementary symmetric functions of the weights and the Baum–Bott type
//! sums built from them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, One, Zero};

use crate::error::{Error, Result};
use crate::weights::{degree_condition_ok, WeightSystem};

/// All of `sigma_0, ..., sigma_{n+1}` at once.
pub fn sigmas(w: &WeightSystem) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); w.num_vars() + 1];
    e[0] = BigInt::one();
    for (count, &wi) in w.weights().iter().enumerate() {
        let wi = BigInt::from(wi);
        for k in (1..=count + 1).rev() {
            let add = &e[k - 1] * &wi;
            e[k] += add;
        }
    }
    e
}

/// `k`-th elementary symmetric polynomial of the weights, `0 <= k <= n+1`.
pub fn sigma(w: &WeightSystem, k: usize) -> Result<BigInt> {
    let all = sigmas(w);
    all.get(k).cloned().ok_or(Error::IndexOutOfRange {
        index: k,
        limit: all.len(),
    })
}

/// `x^e` with `0^0 = 1`.
pub(crate) fn ipow(x: &BigInt, e: usize) -> BigInt {
    pow(x.clone(), e)
}

fn over_weight_product(w: &WeightSystem, total: BigInt) -> BigRational {
    BigRational::new(total, BigInt::from(w.product()))
}

/// Orbifold Milnor sum over all singularities of a degree-`d` foliation:
/// `(1 / prod w_i) * sum_{j=0}^{n} (d-1)^{n-j} sigma_j(w)`.
pub fn milnor_sum_total(w: &WeightSystem, d: i64) -> Result<BigRational> {
    if !degree_condition_ok(w, d) {
        return Err(Error::DegreeConditionViolated {
            degree: d,
            threshold: 1 - w.max_pair_sum() as i64,
        });
    }
    Ok(over_weight_product(w, milnor_numerator(w, d)))
}

/// `sum_{j=0}^{n} (d-1)^{n-j} sigma_j(w)` without the weight-product
/// denominator and without checking the degree condition.
pub fn milnor_numerator(w: &WeightSystem, d: i64) -> BigInt {
    let n = w.dim();
    let s = sigmas(w);
    let dm1 = BigInt::from(d - 1);
    (0..=n).map(|j| ipow(&dm1, n - j) * &s[j]).sum()
}

/// Milnor sum over singularities lying on an invariant hypersurface of
/// degree `d0`.
pub fn milnor_sum_on_v(w: &WeightSystem, d: i64, d0: i64) -> Result<BigRational> {
    if d0 < 1 {
        return Err(Error::InvalidArgument(format!(
            "hypersurface degree must be positive, got {d0}"
        )));
    }
    let n = w.dim();
    let dm1 = BigInt::from(d - 1);
    let mut total = BigInt::zero();
    for j in 0..n {
        total += chern_coefficient_v(w, d0, j)? * BigInt::from(d0) * ipow(&dm1, n - 1 - j);
    }
    Ok(over_weight_product(w, total))
}

/// Coefficient of `O(1)^j` in the total Chern class of a quasi-smooth
/// hypersurface of degree `d0`: `sum_{k=0}^{j} (-1)^k sigma_{j-k}(w) d0^k`.
pub fn chern_coefficient_v(w: &WeightSystem, d0: i64, j: usize) -> Result<BigInt> {
    let n = w.dim();
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, limit: n });
    }
    let s = sigmas(w);
    let d0 = BigInt::from(d0);
    Ok((0..=j)
        .map(|k| {
            let term = &s[j - k] * ipow(&d0, k);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&ws(&[1, 1, 1]), 1).unwrap(), BigInt::from(3));
        assert_eq!(sigma(&ws(&[3, 5, 1, 7]), 2).unwrap(), BigInt::from(86));
        assert_eq!(sigma(&ws(&[3, 5, 1, 7]), 3).unwrap(), BigInt::from(176));
        assert_eq!(sigma(&ws(&[3, 5, 1, 7]), 4).unwrap(), BigInt::from(105));
        assert_eq!(sigma(&ws(&[4, 9]), 0).unwrap(), BigInt::one());
        assert!(matches!(
            sigma(&ws(&[4, 9]), 3),
            Err(Error::IndexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn milnor_total_examples() {
        let p2 = ws(&[1, 1, 1]);
        assert_eq!(milnor_sum_total(&p2, 2).unwrap(), rat(7));
        assert_eq!(milnor_sum_total(&p2, 1).unwrap(), rat(3));
        assert_eq!(milnor_sum_total(&ws(&[1, 1, 2]), 2).unwrap(), rat(5));
        assert_eq!(milnor_sum_total(&ws(&[1, 2, 3]), 1).unwrap(), ratio(11, 6));
        assert!(matches!(
            milnor_sum_total(&p2, -1),
            Err(Error::DegreeConditionViolated { .. })
        ));
    }

    #[test]
    fn milnor_on_v_examples() {
        let p2 = ws(&[1, 1, 1]);
        assert_eq!(milnor_sum_on_v(&p2, 3, 4).unwrap(), rat(4));
        for d in 1..8 {
            assert_eq!(milnor_sum_on_v(&p2, d, d + 1).unwrap(), rat(d + 1));
            for d0 in 1..10 {
                assert_eq!(milnor_sum_on_v(&p2, d, d0).unwrap(), rat(d0 * (d + 2 - d0)));
            }
        }
        assert!(milnor_sum_on_v(&p2, 3, 0).is_err());
    }

    #[test]
    fn chern_examples() {
        assert_eq!(
            chern_coefficient_v(&ws(&[2, 3, 7]), 11, 0).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            chern_coefficient_v(&ws(&[1, 1, 1]), 4, 1).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            chern_coefficient_v(&ws(&[1, 1, 2]), 2, 1).unwrap(),
            BigInt::from(2)
        );
        assert!(chern_coefficient_v(&ws(&[1, 1, 1]), 2, 2).is_err());
    }
}
