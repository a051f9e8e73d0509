use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Weights `(w_0, ..., w_n)` of a weighted projective space `P(w)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem(Vec<u64>);

impl WeightSystem {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 || weights.contains(&0) {
            return Err(Error::InvalidWeights);
        }
        Ok(WeightSystem(weights))
    }

    /// The unweighted projective space of dimension `n`.
    pub fn standard(n: usize) -> Result<Self> {
        Self::new(vec![1; n + 1])
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.0[i]
    }

    /// Number of homogeneous coordinates, `n + 1`.
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    /// Dimension `n` of the weighted projective space.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn product(&self) -> u64 {
        self.0.iter().product()
    }

    /// Largest sum `w_i + w_j` over pairs `i < j`.
    pub fn max_pair_sum(&self) -> u64 {
        let mut sorted = self.0.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        sorted[0] + sorted[1]
    }

    /// Every `n`-element subset of the weights has gcd 1.
    pub fn is_well_formed(&self) -> bool {
        (0..self.0.len()).all(|skip| {
            self.0
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .fold(0u64, |g, (_, &w)| g.gcd(&w))
                == 1
        })
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// `d > 1 - max_{i<j}(w_i + w_j)`.
pub fn degree_condition_ok(w: &WeightSystem, d: i64) -> bool {
    d > 1 - w.max_pair_sum() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_weights() {
        assert_eq!(WeightSystem::new(vec![1]), Err(Error::InvalidWeights));
        assert_eq!(WeightSystem::new(vec![1, 0, 2]), Err(Error::InvalidWeights));
    }

    #[test]
    fn well_formedness() {
        assert!(ws(&[1, 1, 2]).is_well_formed());
        assert!(!ws(&[2, 2, 3]).is_well_formed());
        assert!(ws(&[3, 5, 1, 7]).is_well_formed());
        assert!(!ws(&[2, 4]).is_well_formed());
    }

    #[test]
    fn degree_condition() {
        assert!(degree_condition_ok(&ws(&[1, 1, 1]), 0));
        assert!(!degree_condition_ok(&ws(&[1, 1, 1]), -1));
        assert!(degree_condition_ok(&ws(&[3, 5, 1, 7]), -10));
        assert!(!degree_condition_ok(&ws(&[3, 5, 1, 7]), -11));
    }
}
