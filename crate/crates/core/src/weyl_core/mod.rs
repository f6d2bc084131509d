//! Normal-ordered polynomials in `a†, a` and the skew-hermitian monomial basis.

mod index;
pub mod json;
pub mod named;
mod skew_poly;
mod weyl_poly;

pub use index::{chi, esign, theta, MultiIndex, Sign, SkewKey, Subspace};
pub use skew_poly::{monomial, SkewPoly};
pub use weyl_poly::WeylPoly;

pub type Rational = num_rational::BigRational;
pub type GaussianRational = num_complex::Complex<Rational>;

/// Shorthand for the rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
