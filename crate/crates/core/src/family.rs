//! Foliations on `P(a_0, b_0, ..., a_n, b_n)` with an explicit invariant
//! quasi-smooth hypersurface.
//!
//! Given pairwise coprime integers with `a_k + b_k = xi` for every `k`, and
//! `zeta` a common multiple of all of them, set `alpha_k = zeta / a_k` and
//! `beta_k = zeta / b_k`. The field
//!
//! ```text
//! Z = sum_k beta_k Y_k^{beta_k - 1} d/dX_k - alpha_k X_k^{alpha_k - 1} d/dY_k
//! ```
//!
//! annihilates `f = sum_k X_k^{alpha_k} + Y_k^{beta_k}` and has degree
//! `zeta - xi + 1`, while `deg f = zeta`. The even-dimensional variant adds
//! one coordinate `X_{n+1}` of weight `a_{n+1}` with a zero component in `Z`
//! and the term `X_{n+1}^{zeta / a_{n+1}}` in `f`.
//!
//! Coordinates are laid out as `X_k -> x_{2k}`, `Y_k -> x_{2k+1}`, extra last.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use crate::bounds::{check_bound, milnor_numerator, psi, sigma, BoundCheck};
use crate::error::{Error, Result};
use crate::field::{Invariance, VectorField};
use crate::poly::{Monomial, Poly, QuasiSmoothness};
use crate::weights::WeightSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub pairs: Vec<(u64, u64)>,
    pub extra_weight: Option<u64>,
    /// `zeta = multiplier * lcm(...)`; 1 gives the minimal choice.
    pub multiplier: u64,
}

impl FamilySpec {
    pub fn new(pairs: Vec<(u64, u64)>) -> Self {
        FamilySpec {
            pairs,
            extra_weight: None,
            multiplier: 1,
        }
    }

    pub fn with_extra(mut self, a: u64) -> Self {
        self.extra_weight = Some(a);
        self
    }

    pub fn with_multiplier(mut self, m: u64) -> Self {
        self.multiplier = m;
        self
    }

    /// Checks the family constraints, returning `xi`.
    pub fn validate(&self) -> Result<u64> {
        if self.pairs.len() < 2 {
            return Err(Error::DimensionTooSmall {
                got: 2 * self.pairs.len() + usize::from(self.extra_weight.is_some()) - 1,
                min: 3,
            });
        }
        if self.multiplier == 0
            || self.extra_weight == Some(0)
            || self.pairs.iter().any(|&(a, b)| a == 0 || b == 0)
        {
            return Err(Error::InvalidArgument(
                "family integers must be positive".into(),
            ));
        }
        let xi = self.pairs[0].0 + self.pairs[0].1;
        for &(a, b) in &self.pairs[1..] {
            if a + b != xi {
                return Err(Error::UnequalPairSums(xi, a + b));
            }
        }
        let listed: Vec<u64> = self.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        for (i, &x) in listed.iter().enumerate() {
            for &y in &listed[i + 1..] {
                if x.gcd(&y) != 1 {
                    return Err(Error::NotPairwiseCoprime(x, y));
                }
            }
        }
        if let Some(extra) = self.extra_weight {
            if let Some(&y) = listed.iter().find(|&&y| extra.gcd(&y) != 1) {
                return Err(Error::ExtraWeightNotCompatible(extra, y));
            }
        }
        Ok(xi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub spec: FamilySpec,
    pub weights: WeightSystem,
    pub zeta: u64,
    pub xi: u64,
    pub alphas: Vec<u64>,
    pub betas: Vec<u64>,
    pub extra_exponent: Option<u64>,
    pub field: VectorField,
    pub hypersurface: Poly,
    pub foliation_degree: i64,
}

pub fn generate_family(spec: &FamilySpec) -> Result<FamilyInstance> {
    let xi = spec.validate()?;
    let mut zeta = spec.multiplier;
    for &(a, b) in &spec.pairs {
        zeta = zeta.lcm(&a).lcm(&b);
    }
    if let Some(extra) = spec.extra_weight {
        zeta = zeta.lcm(&extra);
    }
    let mut weights: Vec<u64> = spec.pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    weights.extend(spec.extra_weight);
    let weights = WeightSystem::new(weights)?;
    let nvars = weights.num_vars();

    let alphas: Vec<u64> = spec.pairs.iter().map(|&(a, _)| zeta / a).collect();
    let betas: Vec<u64> = spec.pairs.iter().map(|&(_, b)| zeta / b).collect();
    let extra_exponent = spec.extra_weight.map(|a| zeta / a);

    let power = |i: usize, e: u64, c: i64| {
        let mut exps = vec![0u32; nvars];
        exps[i] = u32::try_from(e).expect("exponent fits in u32");
        Poly::term(
            nvars,
            Monomial::new(exps),
            BigRational::from_integer(c.into()),
        )
    };

    let mut components = vec![Poly::zero(nvars); nvars];
    let mut f = Poly::zero(nvars);
    for (k, (&alpha, &beta)) in alphas.iter().zip(&betas).enumerate() {
        let (x, y) = (2 * k, 2 * k + 1);
        components[x] = power(y, beta - 1, beta as i64);
        components[y] = power(x, alpha - 1, -(alpha as i64));
        f = &f + &power(x, alpha, 1);
        f = &f + &power(y, beta, 1);
    }
    if let Some(e) = extra_exponent {
        f = &f + &power(nvars - 1, e, 1);
    }
    let field = VectorField::new(weights.clone(), components)?;

    let expected_degree = zeta as i64 - xi as i64 + 1;
    if field.degree() != expected_degree {
        return Err(Error::OracleFailure(format!(
            "family field has degree {}, expected {expected_degree}",
            field.degree()
        )));
    }
    match field.is_invariant(&f)? {
        Invariance::Invariant { cofactor } if cofactor.is_zero() => {}
        other => {
            return Err(Error::OracleFailure(format!(
                "family hypersurface not annihilated by the field: {other:?}"
            )))
        }
    }
    if f.quasi_smoothness()? != QuasiSmoothness::QuasiSmooth {
        return Err(Error::OracleFailure(
            "family hypersurface is not quasi-smooth".into(),
        ));
    }

    Ok(FamilyInstance {
        spec: spec.clone(),
        weights,
        zeta,
        xi,
        alphas,
        betas,
        extra_exponent,
        field,
        hypersurface: f,
        foliation_degree: expected_degree,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub dimension: usize,
    pub zeta: u64,
    pub xi: u64,
    pub deg_f: i64,
    pub deg_v: i64,
    pub sigma1: BigInt,
    /// `Z(f) = 0` exactly.
    pub annihilated: bool,
    /// Cofactor returned by the divisibility test is zero.
    pub cofactor_zero: bool,
    /// `deg F >= sigma_1 + 1`.
    pub hypothesis_met: bool,
    pub bound: BoundCheck,
    /// `deg V - deg F = xi - 1`.
    pub degree_gap_ok: bool,
    /// `0 <= Psi(deg V) <= sum_k (d-1)^{n-k} sigma_k`.
    pub inequality_a: bool,
    pub inequality_b: bool,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.annihilated
            && self.cofactor_zero
            && self.hypothesis_met
            && self.bound == BoundCheck::Satisfied
            && self.degree_gap_ok
            && self.inequality_a
            && self.inequality_b
    }
}

pub fn verify_family(inst: &FamilyInstance) -> Result<FamilyReport> {
    let w = &inst.weights;
    let d = inst.field.degree();
    let d0 = inst.hypersurface.weighted_degree(w)?;
    let annihilated = inst.field.apply(&inst.hypersurface)?.is_zero();
    let cofactor_zero = matches!(
        inst.field.is_invariant(&inst.hypersurface)?,
        Invariance::Invariant { cofactor } if cofactor.is_zero()
    );
    let sigma1 = sigma(w, 1)?;
    let hypothesis_met = BigInt::from(d) > sigma1;
    let bound = check_bound(w, d, d0)?;
    let psi_at_v = psi(w, d)?.eval(&BigRational::from_integer(d0.into()));
    let upper = BigRational::from_integer(milnor_numerator(w, d));
    Ok(FamilyReport {
        dimension: w.dim(),
        zeta: inst.zeta,
        xi: inst.xi,
        deg_f: d,
        deg_v: d0,
        sigma1,
        annihilated,
        cofactor_zero,
        hypothesis_met,
        bound,
        degree_gap_ok: d0 - d == inst.xi as i64 - 1,
        inequality_a: !psi_at_v.lt(&BigRational::zero()),
        inequality_b: psi_at_v <= upper,
    })
}

/// Draws a valid spec with `xi <= max_xi` and 2 or 3 pairs. Returns `None`
/// if no spec was found within a fixed number of attempts.
pub fn sample_family_spec<R: Rng>(rng: &mut R, max_xi: u64) -> Option<FamilySpec> {
    for _ in 0..1000 {
        let xi = rng.gen_range(3..=max_xi.max(3));
        let wanted = rng.gen_range(2..=3usize);
        let mut candidates: Vec<(u64, u64)> = (1..xi)
            .filter(|a| a.gcd(&xi) == 1)
            .map(|a| (a, xi - a))
            .collect();
        let mut chosen: Vec<(u64, u64)> = Vec::new();
        while chosen.len() < wanted && !candidates.is_empty() {
            let (a, b) = candidates.swap_remove(rng.gen_range(0..candidates.len()));
            let fits = chosen
                .iter()
                .flat_map(|&(c, e)| [c, e])
                .all(|y| a.gcd(&y) == 1 && b.gcd(&y) == 1);
            if fits {
                chosen.push((a, b));
            }
        }
        if chosen.len() == wanted {
            let spec = FamilySpec::new(chosen);
            debug_assert!(spec.validate().is_ok());
            return Some(spec);
        }
    }
    None
}

/// Ambient dimension of the family built from `spec`.
pub fn family_dimension(spec: &FamilySpec) -> usize {
    2 * spec.pairs.len() - 1 + usize::from(spec.extra_weight.is_some())
}

impl FamilyInstance {
    pub fn degree_v(&self) -> i64 {
        self.zeta.to_i64().expect("zeta fits in i64")
    }
}
