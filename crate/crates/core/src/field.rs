//! Polynomial vector fields on `C^{n+1}` inducing foliations on `P(w)`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{divides, Monomial, Poly};
use crate::weights::WeightSystem;

/// `X = sum_i P_i d/dz_i` with each nonzero `P_i` quasi-homogeneous of
/// weighted degree `d + w_i - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    weights: WeightSystem,
    components: Vec<Poly>,
    degree: i64,
}

/// A point of `P(w)` given by rational homogeneous coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePoint(Vec<BigRational>);

impl ProjectivePoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjectivePoint(coords))
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Invariance {
    /// `X(f) = cofactor * f`.
    Invariant { cofactor: Poly },
    /// Nonzero remainder of `X(f)` on division by `f`.
    NotInvariant { remainder: Poly },
}

impl VectorField {
    /// Validates quasi-homogeneity and derives the foliation degree.
    pub fn new(weights: WeightSystem, components: Vec<Poly>) -> Result<Self> {
        if components.len() != weights.num_vars()
            || components.iter().any(|c| c.nvars() != weights.num_vars())
        {
            return Err(Error::AmbientMismatch);
        }
        let degree = infer_degree(&weights, &components)?;
        Ok(VectorField {
            weights,
            components,
            degree,
        })
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.components[i]
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.weights.num_vars()
    }

    /// `X(f) = sum_i P_i * df/dz_i`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        if f.nvars() != self.num_vars() {
            return Err(Error::AmbientMismatch);
        }
        let mut out = Poly::zero(f.nvars());
        for (i, p) in self.components.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            out = &out + &(p * &f.derivative(i)?);
        }
        Ok(out)
    }

    pub fn is_invariant(&self, f: &Poly) -> Result<Invariance> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let image = self.apply(f)?;
        let (q, r) = image.div_rem(f)?;
        Ok(if r.is_zero() {
            Invariance::Invariant { cofactor: q }
        } else {
            Invariance::NotInvariant { remainder: r }
        })
    }

    /// `g` with `other - self = g * R_w`, if one exists.
    pub fn same_foliation(&self, other: &VectorField) -> Result<Option<Poly>> {
        if self.weights != other.weights {
            return Err(Error::AmbientMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let n = self.num_vars();
        let mut cofactor: Option<Poly> = None;
        for i in 0..n {
            let diff = &other.components[i] - &self.components[i];
            let radial_i = Poly::term(
                n,
                Monomial::var(n, i),
                BigRational::from_integer(self.weights.weight(i).into()),
            );
            match divides(&radial_i, &diff)? {
                None => return Ok(None),
                Some(g) => match &cofactor {
                    None => cofactor = Some(g),
                    Some(prev) if *prev == g => {}
                    Some(_) => return Ok(None),
                },
            }
        }
        Ok(cofactor)
    }

    /// `X(p)` is parallel to `R_w(p)`: every minor
    /// `X_i(p) w_j p_j - X_j(p) w_i p_i` vanishes.
    pub fn is_singular_at(&self, p: &ProjectivePoint) -> Result<bool> {
        let coords = p.coords();
        if coords.len() != self.num_vars() {
            return Err(Error::AmbientMismatch);
        }
        let values = self
            .components
            .iter()
            .map(|c| c.eval(coords))
            .collect::<Result<Vec<_>>>()?;
        let radial: Vec<BigRational> = coords
            .iter()
            .zip(self.weights.weights())
            .map(|(x, &w)| x * BigRational::from_integer(w.into()))
            .collect();
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                if &values[i] * &radial[j] != &values[j] * &radial[i] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn infer_degree(w: &WeightSystem, components: &[Poly]) -> Result<i64> {
    let mut degree: Option<i64> = None;
    for (i, p) in components.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let d = p.weighted_degree(w)? + 1 - w.weight(i) as i64;
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => return Err(Error::InconsistentDegrees(prev, d)),
            _ => {}
        }
    }
    degree.ok_or(Error::ZeroField)
}

/// `R_w = sum_i w_i z_i d/dz_i`, of degree 1.
pub fn radial_field(w: &WeightSystem) -> VectorField {
    let n = w.num_vars();
    let components = (0..n)
        .map(|i| {
            Poly::term(
                n,
                Monomial::var(n, i),
                BigRational::from_integer(w.weight(i).into()),
            )
        })
        .collect();
    VectorField {
        weights: w.clone(),
        components,
        degree: 1,
    }
}

pub fn apply_field(x: &VectorField, f: &Poly) -> Result<Poly> {
    x.apply(f)
}

pub fn foliation_degree(x: &VectorField) -> i64 {
    x.degree()
}

pub fn is_invariant(x: &VectorField, f: &Poly) -> Result<Invariance> {
    x.is_invariant(f)
}

pub fn same_foliation(x: &VectorField, y: &VectorField) -> Result<Option<Poly>> {
    x.same_foliation(y)
}

pub fn singular_at_point(x: &VectorField, p: &ProjectivePoint) -> Result<bool> {
    x.is_singular_at(p)
}
