use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{pow, Signed};

/// Decimal expansion of `x` truncated (toward zero) to `places` digits.
pub fn truncate_decimal(x: &BigRational, places: usize) -> String {
    let scale = pow(BigInt::from(10), places);
    let scaled = (x.abs() * BigRational::from_integer(scale.clone())).to_integer();
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let sign = if x.is_negative() && scaled.is_positive() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>places$}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn truncates_toward_zero() {
        assert_eq!(truncate_decimal(&ratio(2, 3), 4), "0.6666");
        assert_eq!(truncate_decimal(&ratio(-2, 3), 2), "-0.66");
        assert_eq!(truncate_decimal(&ratio(-1, 1000), 2), "0.00");
        assert_eq!(truncate_decimal(&ratio(1, 20), 3), "0.050");
        assert_eq!(truncate_decimal(&rat(12), 0), "12");
    }
}
