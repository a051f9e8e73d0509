use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::weights::WeightSystem;

/// Dimension of `H^0(P(w), O(d))`: the number of exponent vectors with
/// `sum w_i k_i = d`, counted with the usual coin-change recurrence.
pub fn sections_dimension(w: &WeightSystem, d: i64) -> BigUint {
    if d < 0 {
        return BigUint::zero();
    }
    let d = d as usize;
    let mut ways = vec![BigUint::zero(); d + 1];
    ways[0] = BigUint::one();
    for &wi in w.weights() {
        let wi = wi as usize;
        for total in wi..=d {
            let prev = ways[total - wi].clone();
            ways[total] += prev;
        }
    }
    ways.swap_remove(d)
}
