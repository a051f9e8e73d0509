#![allow(dead_code)]

use num_rational::BigRational;
use qhfol::poly::{rat, ratio};
use qhfol::{Monomial, Poly, WeightSystem};
use rand::Rng;

/// All exponent vectors with `sum w_i k_i = d`, by exhaustive recursion.
pub fn monomials_of_degree(w: &[u64], d: i64) -> Vec<Vec<u32>> {
    fn go(w: &[u64], left: i64, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == w.len() {
            if left == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let wi = w[prefix.len()] as i64;
        let mut k = 0;
        while k * wi <= left {
            prefix.push(k as u32);
            go(w, left - k * wi, prefix, out);
            prefix.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    if d >= 0 {
        go(w, d, &mut Vec::new(), &mut out);
    }
    out
}

pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=4);
    if num == 0 {
        rat(1)
    } else {
        ratio(num, den)
    }
}

/// Random quasi-homogeneous polynomial of degree `d` with at most
/// `max_terms` terms; zero if no monomial of that degree exists.
pub fn random_qh<R: Rng>(rng: &mut R, w: &WeightSystem, d: i64, max_terms: usize) -> Poly {
    let monomials = monomials_of_degree(w.weights(), d);
    let n = w.num_vars();
    if monomials.is_empty() {
        return Poly::zero(n);
    }
    let count = rng.gen_range(1..=max_terms);
    Poly::from_terms(
        n,
        (0..count).map(|_| {
            let m = &monomials[rng.gen_range(0..monomials.len())];
            (Monomial::new(m.clone()), random_rational(rng))
        }),
    )
}

pub fn random_weights<R: Rng>(rng: &mut R, n: usize, max: u64) -> WeightSystem {
    WeightSystem::new((0..=n).map(|_| rng.gen_range(1..=max)).collect()).unwrap()
}

/// Random sparse polynomial (not necessarily quasi-homogeneous).
pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_terms: usize, max_exp: u32) -> Poly {
    let count = rng.gen_range(1..=max_terms);
    Poly::from_terms(
        nvars,
        (0..count).map(|_| {
            let e = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
            (Monomial::new(e), random_rational(rng))
        }),
    )
}
