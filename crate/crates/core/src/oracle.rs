//! Independent Milnor-number oracles: the pure-power product formula and an
//! intersection count in the affine plane via resultants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bounds::{milnor_sum_total, UnivariatePoly};
use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::poly::{rat, Monomial, Poly};
use crate::weights::WeightSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMethod {
    ProductFormula,
    BivariateResultant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub label: String,
    pub value: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub total: BigRational,
    pub method: OracleMethod,
    pub details: Vec<Contribution>,
}

/// Milnor number of `(z_0^{m_0}, ..., z_n^{m_n})` at the origin: `prod m_i`.
pub fn milnor_product_oracle(exponents: &[u64]) -> Result<BigInt> {
    if exponents.contains(&0) {
        return Err(Error::InvalidArgument(
            "pure-power exponents must be positive".into(),
        ));
    }
    Ok(exponents.iter().map(|&m| BigInt::from(m)).product())
}

/// Same count as [`milnor_product_oracle`], packaged as an oracle result.
pub fn product_oracle_result(exponents: &[u64]) -> Result<OracleResult> {
    let total = BigRational::from_integer(milnor_product_oracle(exponents)?);
    Ok(OracleResult {
        total: total.clone(),
        method: OracleMethod::ProductFormula,
        details: vec![Contribution {
            label: "origin".into(),
            value: total,
        }],
    })
}

/// Shears tried in order; the first two admissible ones are compared.
const SHEARS: [i64; 5] = [1, 2, 3, 4, 5];

/// Number of common zeros of `p` and `q` in the affine plane, counted with
/// intersection multiplicity.
///
/// After the shear `x -> x + c y` both polynomials have constant leading
/// coefficient in `y`; the count is then the degree of `Res_y(p, q)`. Two
/// different shears must agree.
pub fn bivariate_intersection_total(p: &Poly, q: &Poly) -> Result<OracleResult> {
    if p.nvars() != 2 || q.nvars() != 2 {
        return Err(Error::AmbientMismatch);
    }
    if p.is_zero() || q.is_zero() {
        return Err(Error::CommonFactor);
    }
    let mut counts: Vec<(i64, usize)> = Vec::new();
    for c in SHEARS {
        let (ps, qs) = (shear(p, c)?, shear(q, c)?);
        if !(has_constant_y_leading(&ps) && has_constant_y_leading(&qs)) {
            continue;
        }
        let res = resultant_in_y(&ps, &qs);
        let degree = res.degree().ok_or(Error::CommonFactor)?;
        counts.push((c, degree));
        if counts.len() == 2 {
            break;
        }
    }
    match counts.as_slice() {
        [(c1, n1), (c2, n2)] if n1 == n2 => Ok(OracleResult {
            total: rat(*n1 as i64),
            method: OracleMethod::BivariateResultant,
            details: vec![
                Contribution {
                    label: format!("shear c={c1}"),
                    value: rat(*n1 as i64),
                },
                Contribution {
                    label: format!("shear c={c2}"),
                    value: rat(*n2 as i64),
                },
            ],
        }),
        [(c1, n1), (c2, n2)] => Err(Error::OracleFailure(format!(
            "shears {c1} and {c2} disagree: {n1} vs {n2}"
        ))),
        _ => Err(Error::ShearExhausted),
    }
}

fn shear(p: &Poly, c: i64) -> Result<Poly> {
    let x = &Poly::var(2, 0) + &Poly::var(2, 1).scale(&rat(c));
    p.compose(&[x, Poly::var(2, 1)])
}

/// Coefficients of `p` as a polynomial in `y` over `Q[x]`.
fn y_coefficients(p: &Poly) -> Vec<UnivariatePoly> {
    let deg = p.degree_in(1).unwrap_or(0) as usize;
    let mut coeffs = vec![Vec::<BigRational>::new(); deg + 1];
    for (m, c) in p.terms() {
        let (ex, ey) = (m.exponents()[0] as usize, m.exponents()[1] as usize);
        let row = &mut coeffs[ey];
        if row.len() <= ex {
            row.resize(ex + 1, BigRational::zero());
        }
        row[ex] += c;
    }
    coeffs.into_iter().map(UnivariatePoly::new).collect()
}

fn has_constant_y_leading(p: &Poly) -> bool {
    y_coefficients(p)
        .last()
        .is_some_and(|lc| lc.degree() == Some(0))
}

/// `Res_y(p, q)` as a polynomial in `x`, by evaluation at
/// `x = 0, 1, ..., deg p * deg q` and interpolation. Requires constant
/// leading coefficients in `y`, so the Sylvester matrix shape is fixed.
fn resultant_in_y(p: &Poly, q: &Poly) -> UnivariatePoly {
    let pc = y_coefficients(p);
    let qc = y_coefficients(q);
    let bound = (p.total_degree().unwrap_or(0) * q.total_degree().unwrap_or(0)) as i64;
    let xs: Vec<BigRational> = (0..=bound).map(rat).collect();
    let values: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let a: Vec<BigRational> = pc.iter().map(|c| c.eval(x)).collect();
            let b: Vec<BigRational> = qc.iter().map(|c| c.eval(x)).collect();
            determinant(sylvester(&a, &b))
        })
        .collect();
    interpolate(&xs, &values)
}

/// Sylvester matrix of `sum a_i y^i` and `sum b_j y^j`.
fn sylvester(a: &[BigRational], b: &[BigRational]) -> Vec<Vec<BigRational>> {
    let (m, k) = (a.len() - 1, b.len() - 1);
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..k {
        let mut row = vec![BigRational::zero(); size];
        for (i, c) in a.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![BigRational::zero(); size];
        for (i, c) in b.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (above, below) = m.split_at_mut(r);
            for (x, y) in below[0][col..].iter_mut().zip(&above[col][col..]) {
                *x -= y * &factor;
            }
        }
    }
    det
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> UnivariatePoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut result = UnivariatePoly::zero();
    for i in (0..n).rev() {
        let linear = UnivariatePoly::new(vec![-xs[i].clone(), BigRational::one()]);
        result = &(&result * &linear) + &UnivariatePoly::new(vec![dd[i].clone()]);
    }
    result
}

/// Outcome of comparing the planar Milnor sum with the resultant oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2SingularityReport {
    pub degree: i64,
    pub expected: BigRational,
    pub oracle: OracleResult,
    /// Third row `(a, b, 1)` of the coordinate change `z = M w` whose chart
    /// `w_2 = 1` contains every singular point.
    pub chart_row: (i64, i64),
    pub matches: bool,
}

const CHART_ROWS: [(i64, i64); 6] = [(0, 0), (1, 2), (3, -1), (2, 5), (-4, 3), (5, 7)];

/// Compares `milnor_sum_total((1,1,1), d)` with an oracle count of the
/// singular points of a foliation on `P^2` of degree `d <= 3`.
///
/// The field is moved by a unimodular change of coordinates until no
/// singular point lies on the line `w_2 = 0`; the count is then taken in the
/// single affine chart `w_2 = 1`.
pub fn check_sing_f_p2(x: &VectorField) -> Result<P2SingularityReport> {
    let p2 = WeightSystem::standard(2)?;
    if x.weights() != &p2 {
        return Err(Error::AmbientMismatch);
    }
    let d = x.degree();
    if !(0..=3).contains(&d) {
        return Err(Error::InvalidArgument(format!(
            "planar oracle supports degrees 0..=3, got {d}"
        )));
    }
    let expected = milnor_sum_total(&p2, d)?;
    for row in CHART_ROWS {
        let y = change_coordinates(x, row)?;
        if line_at_infinity_is_singular(&y, d as usize)? {
            continue;
        }
        let (a, b) = affine_chart(&y)?;
        let oracle = match bivariate_intersection_total(&a, &b) {
            Err(Error::CommonFactor) => return Err(Error::InfinitelyManySingularities),
            other => other?,
        };
        return Ok(P2SingularityReport {
            degree: d,
            matches: oracle.total == expected,
            expected,
            oracle,
            chart_row: row,
        });
    }
    Err(Error::OracleFailure(
        "every candidate chart has a singular point at infinity".into(),
    ))
}

/// `Y(w) = M^{-1} X(M w)` with `M` the identity except third row `(a, b, 1)`.
fn change_coordinates(x: &VectorField, (a, b): (i64, i64)) -> Result<Vec<Poly>> {
    let images = [
        Poly::var(3, 0),
        Poly::var(3, 1),
        &(&Poly::var(3, 0).scale(&rat(a)) + &Poly::var(3, 1).scale(&rat(b))) + &Poly::var(3, 2),
    ];
    let moved = x
        .components()
        .iter()
        .map(|c| c.compose(&images))
        .collect::<Result<Vec<_>>>()?;
    let third = &(&moved[2] - &moved[0].scale(&rat(a))) - &moved[1].scale(&rat(b));
    Ok(vec![moved[0].clone(), moved[1].clone(), third])
}

/// Whether some point `[w0 : w1 : 0]` is singular: `Y_2` and
/// `w1 Y_0 - w0 Y_1` have a common zero on the line.
fn line_at_infinity_is_singular(y: &[Poly], d: usize) -> Result<bool> {
    let on_line = |p: &Poly, t: Poly, s: Poly| p.compose(&[t, s, Poly::zero(1)]);
    let t = Poly::var(1, 0);
    let one = Poly::from_int(1, 1);
    let g = to_univariate(&on_line(&y[2], t.clone(), one.clone())?);
    let h = to_univariate(
        &(&on_line(&y[0], t.clone(), one.clone())?
            - &(&t * &on_line(&y[1], t.clone(), one.clone())?)),
    );
    let (deg_g, deg_h) = (d, d + 1);
    match (g.is_zero(), h.is_zero()) {
        (true, true) => Err(Error::InfinitelyManySingularities),
        (true, false) => Ok(deg_h >= 1),
        (false, true) => Ok(deg_g >= 1),
        (false, false) => {
            let root_at_infinity = g.degree() < Some(deg_g) && h.degree() < Some(deg_h);
            Ok(root_at_infinity || g.gcd(&h).degree() > Some(0))
        }
    }
}

fn to_univariate(p: &Poly) -> UnivariatePoly {
    let deg = p.degree_in(0).unwrap_or(0) as usize;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[0] as usize] += c;
    }
    UnivariatePoly::new(coeffs)
}

/// Affine field `(Y_0 - x Y_2, Y_1 - y Y_2)` on the chart `w_2 = 1`.
fn affine_chart(y: &[Poly]) -> Result<(Poly, Poly)> {
    let images = [Poly::var(2, 0), Poly::var(2, 1), Poly::from_int(2, 1)];
    let c = y
        .iter()
        .map(|p| p.compose(&images))
        .collect::<Result<Vec<_>>>()?;
    let xv = Poly::var(2, 0);
    let yv = Poly::var(2, 1);
    Ok((&c[0] - &(&xv * &c[2]), &c[1] - &(&yv * &c[2])))
}

/// `x^a` and `y^b` in two variables.
pub fn pure_powers(a: u32, b: u32) -> (Poly, Poly) {
    (
        Poly::term(2, Monomial::new(vec![a, 0]), BigRational::one()),
        Poly::term(2, Monomial::new(vec![0, b]), BigRational::one()),
    )
}
