//! Symmetric-function formulas, the auxiliary polynomials of the degree
//! bound, certified `alpha_n` enclosures and the bound itself.

pub mod alpha;
pub mod poincare;
pub mod proof;
pub mod symmetric;
pub mod univariate;

pub use alpha::{alpha_enclosure, default_width, r_n, root_enclosure, RationalInterval};
pub use poincare::{check_bound, poincare_bound, BoundCase, BoundCheck, BoundReport, BoundValue};
pub use proof::{omega_poly, p_poly, phi, psi, q_poly};
pub use symmetric::{
    chern_coefficient_v, milnor_numerator, milnor_sum_on_v, milnor_sum_total, sigma, sigmas,
};
pub use univariate::UnivariatePoly;
