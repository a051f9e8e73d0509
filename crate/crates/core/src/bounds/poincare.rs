//! Degree bounds for hypersurfaces invariant by a foliation on `P(w)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::alpha::{alpha_enclosure, alpha_index, r_n, RationalInterval};
use super::symmetric::sigma;
use crate::error::{Error, Result};
use crate::weights::{degree_condition_ok, WeightSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCase {
    /// `n = 2`: `deg V <= d + sigma_1 - 2`.
    N2Exact,
    /// `n >= 3`: `deg V < d - 1 + alpha_n sigma_1`, given `d >= sigma_1 + 1`.
    NGe3Alpha,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Exact(BigInt),
    Enclosure(RationalInterval),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub dimension: usize,
    pub weights: WeightSystem,
    pub foliation_degree: i64,
    pub case: BoundCase,
    pub hypothesis_met: bool,
    pub bound_value: BoundValue,
    pub sigma1: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundCheck {
    Satisfied,
    Violated,
    HypothesisNotMet,
}

fn require_dim(w: &WeightSystem) -> Result<usize> {
    match w.dim() {
        n if n >= 2 => Ok(n),
        n => Err(Error::DimensionTooSmall { got: n, min: 2 }),
    }
}

/// Evaluates the degree bound for a foliation of degree `d`; for `n >= 3`
/// the bound is enclosed using an `alpha_n` enclosure of the given width.
pub fn poincare_bound_with_width(
    w: &WeightSystem,
    d: i64,
    width: &BigRational,
) -> Result<BoundReport> {
    let n = require_dim(w)?;
    if !degree_condition_ok(w, d) {
        return Err(Error::DegreeConditionViolated {
            degree: d,
            threshold: 1 - w.max_pair_sum() as i64,
        });
    }
    let sigma1 = sigma(w, 1)?;
    let report = if n == 2 {
        BoundReport {
            dimension: n,
            weights: w.clone(),
            foliation_degree: d,
            case: BoundCase::N2Exact,
            hypothesis_met: true,
            bound_value: BoundValue::Exact(BigInt::from(d) + &sigma1 - 2),
            sigma1,
        }
    } else {
        let alpha = alpha_enclosure(n, width)?;
        let offset = BigRational::from_integer(BigInt::from(d - 1));
        let scale = BigRational::from_integer(sigma1.clone());
        BoundReport {
            dimension: n,
            weights: w.clone(),
            foliation_degree: d,
            case: BoundCase::NGe3Alpha,
            hypothesis_met: BigInt::from(d) > sigma1,
            bound_value: BoundValue::Enclosure(alpha.affine(&offset, &scale)),
            sigma1,
        }
    };
    Ok(report)
}

pub fn poincare_bound(w: &WeightSystem, d: i64) -> Result<BoundReport> {
    poincare_bound_with_width(w, d, &super::alpha::default_width())
}

/// Decides whether a hypersurface of degree `d0` obeys the bound.
///
/// For `n >= 3` the comparison `d0 < d - 1 + alpha sigma_1` is decided
/// exactly through the sign of `R_m((d0 - d + 1) / sigma_1)`, `R_m` being
/// increasing on the positive reals.
pub fn check_bound(w: &WeightSystem, d: i64, d0: i64) -> Result<BoundCheck> {
    let n = require_dim(w)?;
    if d0 < 1 {
        return Err(Error::InvalidArgument(format!(
            "hypersurface degree must be positive, got {d0}"
        )));
    }
    let sigma1 = sigma(w, 1)?;
    if n == 2 {
        let bound = BigInt::from(d) + &sigma1 - 2;
        return Ok(if BigInt::from(d0) <= bound {
            BoundCheck::Satisfied
        } else {
            BoundCheck::Violated
        });
    }
    if BigInt::from(d) < &sigma1 + 1 {
        return Ok(BoundCheck::HypothesisNotMet);
    }
    let q = BigRational::new(BigInt::from(d0 - d + 1), sigma1);
    if !q.is_positive() || r_n(alpha_index(n), &q).is_negative() {
        Ok(BoundCheck::Satisfied)
    } else {
        Ok(BoundCheck::Violated)
    }
}

impl BoundReport {
    /// Largest integer degree admitted by the bound, when it is decidable
    /// from the enclosure.
    pub fn max_degree(&self) -> Option<BigInt> {
        match &self.bound_value {
            BoundValue::Exact(b) => Some(b.clone()),
            BoundValue::Enclosure(iv) => {
                // deg V < value: the answer is ceil(value) - 1 when lo and hi
                // share the same ceiling.
                let lo = iv.lo.ceil().to_integer();
                let hi = iv.hi.ceil().to_integer();
                (lo == hi && !iv.lo.is_integer()).then(|| lo - 1)
            }
        }
    }

    pub fn bound_as_f64(&self) -> Option<f64> {
        match &self.bound_value {
            BoundValue::Exact(b) => b.to_f64(),
            BoundValue::Enclosure(iv) => iv.midpoint().to_f64(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    #[test]
    fn plane_bound() {
        for d in 1..=10 {
            let r = poincare_bound(&ws(&[1, 1, 1]), d).unwrap();
            assert_eq!(r.case, BoundCase::N2Exact);
            assert!(r.hypothesis_met);
            assert_eq!(r.bound_value, BoundValue::Exact(BigInt::from(d + 1)));
        }
        let r = poincare_bound(&ws(&[1, 2, 3]), 4).unwrap();
        assert_eq!(r.bound_value, BoundValue::Exact(BigInt::from(8)));
    }

    #[test]
    fn higher_dimensional_bound() {
        let r = poincare_bound(&ws(&[1, 1, 1, 1]), 5).unwrap();
        assert_eq!(r.case, BoundCase::NGe3Alpha);
        assert!(r.hypothesis_met);
        let BoundValue::Enclosure(iv) = &r.bound_value else {
            panic!("expected enclosure");
        };
        assert_eq!(iv.common_truncation(3).as_deref(), Some("6.174"));
        assert_eq!(r.max_degree(), Some(BigInt::from(6)));
        assert!(
            !poincare_bound(&ws(&[1, 1, 1, 1]), 4)
                .unwrap()
                .hypothesis_met
        );
    }

    #[test]
    fn bound_errors() {
        assert!(matches!(
            poincare_bound(&ws(&[1, 1, 1]), -1),
            Err(Error::DegreeConditionViolated { .. })
        ));
        assert_eq!(
            poincare_bound(&ws(&[1, 1]), 3),
            Err(Error::DimensionTooSmall { got: 1, min: 2 })
        );
    }

    #[test]
    fn check_bound_examples() {
        let w = ws(&[1, 1, 1, 1]);
        assert_eq!(check_bound(&w, 5, 6), Ok(BoundCheck::Satisfied));
        assert_eq!(check_bound(&w, 5, 7), Ok(BoundCheck::Violated));
        assert_eq!(check_bound(&w, 3, 2), Ok(BoundCheck::HypothesisNotMet));
        assert_eq!(check_bound(&w, 5, 1), Ok(BoundCheck::Satisfied));
        let p2 = ws(&[1, 1, 1]);
        assert_eq!(check_bound(&p2, 3, 4), Ok(BoundCheck::Satisfied));
        assert_eq!(check_bound(&p2, 3, 5), Ok(BoundCheck::Violated));
        assert!(check_bound(&p2, 3, 0).is_err());
    }

    #[test]
    fn check_bound_agrees_with_enclosure() {
        // Away from the boundary the exact sign test and the enclosure agree.
        let w = ws(&[1, 2, 2, 3, 5]);
        let width = ratio(1, 1_000_000_000);
        for d in 14..40 {
            let r = poincare_bound_with_width(&w, d, &width).unwrap();
            let max = r.max_degree().unwrap();
            for d0 in 1..80i64 {
                let expected = if BigInt::from(d0) <= max {
                    BoundCheck::Satisfied
                } else {
                    BoundCheck::Violated
                };
                assert_eq!(check_bound(&w, d, d0).unwrap(), expected, "d={d} d0={d0}");
            }
        }
    }
}
