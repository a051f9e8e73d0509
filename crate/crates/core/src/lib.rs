//! Exact algebra for foliations on weighted projective spaces.
//!
//! Everything is computed in homogeneous coordinates with arbitrary
//! precision rationals: quasi-homogeneous polynomials and vector fields,
//! invariance of hypersurfaces, Baum–Bott type Milnor sums, the degree bound
//! for invariant hypersurfaces with certified enclosures of `alpha_n`, an
//! explicit family of invariant hypersurfaces, and seeded finite checks of
//! the inequalities behind the bound.

pub mod bounds;
pub mod decimal;
pub mod error;
pub mod family;
pub mod field;
pub mod oracle;
pub mod poly;
pub mod sections;
pub mod text;
pub mod verification;
pub mod weights;

pub use error::{Error, Result};
pub use field::{radial_field, Invariance, ProjectivePoint, VectorField};
pub use poly::{divides, Monomial, Poly, QuasiSmoothness};
pub use sections::sections_dimension;
pub use weights::{degree_condition_ok, WeightSystem};
