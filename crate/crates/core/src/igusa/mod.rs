//! Igusa-type sufficient condition for two elements to generate an
//! infinite-dimensional algebra.
//!
//! For `x` of degree `d_x`, `a_0` is the coefficient of `a^{d_x}` and `a_1`
//! that of `a† a^{d_x - 1}`; likewise `b_0, b_1` for `y`. If `a_0 b_0 != 0`
//! and `delta(x, y) = d_y a_1 b_0 - d_x a_0 b_1 != 0`, then the degrees in
//! `[x, y], [[x, y], x], ...` keep growing. A symplectic change of frame can
//! make the leading coefficients generic without changing the generated algebra.

mod symplectic;

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use symplectic::{apply_exact, is_symplectic, top_symbol, transformed_leading, SymplecticParams};

use crate::error::Error;
use crate::weyl_core::{rational_to_f64, GaussianRational, MultiIndex, Rational, SkewPoly, WeylPoly};

/// Threshold for "nonzero" in sampled frames.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Infinite,
    Inconclusive,
}

/// `(a_0, a_1, degree)` of a nonzero polynomial.
pub fn leading_pair(x: &WeylPoly) -> Result<(GaussianRational, GaussianRational, u32), Error> {
    let d = x.degree().ok_or(Error::ZeroPolynomial)?;
    let a0 = x.coeff(MultiIndex::new(0, d));
    let a1 = if d >= 1 { x.coeff(MultiIndex::new(1, d - 1)) } else { GaussianRational::zero() };
    Ok((a0, a1, d))
}

/// `delta(x, y) = d_y a_1 b_0 - d_x a_0 b_1`.
pub fn delta(x: &WeylPoly, y: &WeylPoly) -> Result<GaussianRational, Error> {
    let (a0, a1, dx) = leading_pair(x)?;
    let (b0, b1, dy) = leading_pair(y)?;
    let dx = GaussianRational::from(Rational::from_integer(dx.into()));
    let dy = GaussianRational::from(Rational::from_integer(dy.into()));
    Ok(dy * a1 * &b0 - dx * a0 * b1)
}

/// Re-checkable evidence for (or against) the Igusa condition in one frame.
#[derive(Debug, Clone)]
pub struct IgusaCertificate {
    pub e1: SkewPoly,
    pub e2: SkewPoly,
    pub params: SymplecticParams,
    pub a0b0: Complex64,
    pub delta: Complex64,
    /// The four real inequalities on the untransformed coefficients (identity frame only).
    pub conditions: Option<[bool; 4]>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        ComplexJson { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub verdict: Verdict,
    pub sigma: SymplecticParams,
    pub a0b0: ComplexJson,
    pub delta: ComplexJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conditions: Option<[bool; 4]>,
}

impl IgusaCertificate {
    pub fn is_infinite(&self) -> bool {
        self.verdict == Verdict::Infinite
    }

    /// Recomputes the certificate from its inputs and parameters.
    pub fn recheck(&self) -> bool {
        let again = if self.conditions.is_some() {
            identity_check(&self.e1, &self.e2)
        } else {
            evaluate_frame(&self.e1, &self.e2, self.params)
        };
        match again {
            Ok(c) => c.verdict == self.verdict && (c.a0b0 - self.a0b0).norm() < 1e-12 && (c.delta - self.delta).norm() < 1e-12,
            Err(_) => false,
        }
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            verdict: self.verdict,
            sigma: self.params,
            a0b0: self.a0b0.into(),
            delta: self.delta.into(),
            conditions: self.conditions,
        }
    }
}

fn degree_check(e: &SkewPoly) -> Result<u32, Error> {
    match e.degree() {
        Some(d) if d > 2 => Ok(d),
        Some(d) => Err(Error::DegreeTooLow { degree: d as i64 }),
        None => Err(Error::DegreeTooLow { degree: -1 }),
    }
}

fn c64(z: &GaussianRational) -> Complex64 {
    Complex64::new(rational_to_f64(&z.re), rational_to_f64(&z.im))
}

/// The four real inequalities in the untransformed frame.
///
/// With `a_0 = i c_0 + ĉ_0`, `a_1 = i c_1 + ĉ_1` (hats from `g_-`), the real and
/// imaginary parts of `a_0 b_0` and of `delta` must all be nonzero.
pub fn identity_check(e1: &SkewPoly, e2: &SkewPoly) -> Result<IgusaCertificate, Error> {
    degree_check(e1)?;
    degree_check(e2)?;
    let (x, y) = (e1.to_weyl(), e2.to_weyl());
    let (a0, _, _) = leading_pair(&x)?;
    let (b0, _, _) = leading_pair(&y)?;
    let p = &a0 * &b0;
    let dl = delta(&x, &y)?;
    let conditions = [!p.re.is_zero(), !p.im.is_zero(), !dl.re.is_zero(), !dl.im.is_zero()];
    Ok(IgusaCertificate {
        e1: e1.clone(),
        e2: e2.clone(),
        params: SymplecticParams::IDENTITY,
        a0b0: c64(&p),
        delta: c64(&dl),
        conditions: Some(conditions),
        verdict: if conditions.iter().all(|&c| c) {
            Verdict::Infinite
        } else {
            Verdict::Inconclusive
        },
    })
}

/// Complex form of the condition after the change of frame `params`.
pub fn evaluate_frame(e1: &SkewPoly, e2: &SkewPoly, params: SymplecticParams) -> Result<IgusaCertificate, Error> {
    degree_check(e1)?;
    degree_check(e2)?;
    let sigma = params.matrix();
    let (d1, f1) = top_symbol(&e1.to_weyl()).ok_or(Error::ZeroPolynomial)?;
    let (d2, f2) = top_symbol(&e2.to_weyl()).ok_or(Error::ZeroPolynomial)?;
    let (a0, a1) = transformed_leading(d1, &f1, &sigma);
    let (b0, b1) = transformed_leading(d2, &f2, &sigma);
    let p = a0 * b0;
    let dl = (d2 as f64) * a1 * b0 - (d1 as f64) * a0 * b1;
    let ok = p.norm() > TOLERANCE && dl.norm() > TOLERANCE;
    Ok(IgusaCertificate {
        e1: e1.clone(),
        e2: e2.clone(),
        params,
        a0b0: p,
        delta: dl,
        conditions: None,
        verdict: if ok { Verdict::Infinite } else { Verdict::Inconclusive },
    })
}

/// The fixed part of the search schedule: `s in {±1/2, ±1}`, `phi, theta in {0, pi/2}`.
pub fn grid() -> Vec<SymplecticParams> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut out = Vec::new();
    for s in [0.5, -0.5, 1.0, -1.0] {
        for phi in [0.0, half_pi] {
            for theta in [0.0, half_pi] {
                out.push(SymplecticParams { s, phi, theta });
            }
        }
    }
    out
}

/// Identity frame (complex criterion), then the grid, then `samples` seeded draws
/// with `s in [-1, 1]` and angles in `[0, 2 pi)`. Returns the first success.
pub fn symplectic_search(e1: &SkewPoly, e2: &SkewPoly, samples: usize, seed: u64) -> Result<Option<IgusaCertificate>, Error> {
    let identity = evaluate_frame(e1, e2, SymplecticParams::IDENTITY)?;
    if identity.is_infinite() {
        return Ok(Some(identity));
    }
    for params in grid() {
        let c = evaluate_frame(e1, e2, params)?;
        if c.is_infinite() {
            return Ok(Some(c));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = std::f64::consts::TAU;
    for _ in 0..samples {
        let params = SymplecticParams {
            s: rng.random_range(-1.0..=1.0),
            phi: rng.random_range(0.0..tau),
            theta: rng.random_range(0.0..tau),
        };
        let c = evaluate_frame(e1, e2, params)?;
        if c.is_infinite() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::{rat, Sign};

    fn gauss(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(rat(re, 1), rat(im, 1))
    }

    #[test]
    fn delta_direct_formula() {
        let x = WeylPoly::term(MultiIndex::new(0, 3), gauss(1, 0));
        let y = WeylPoly::term(MultiIndex::new(1, 3), gauss(1, 0));
        assert_eq!(delta(&x, &y).unwrap(), gauss(-3, 0));
        assert!(delta(&x, &x).unwrap().is_zero());
        assert!(delta(&WeylPoly::zero(), &x).is_err());
    }

    #[test]
    fn cubic_pair_needs_a_frame_change() {
        let e1 = SkewPoly::g(Sign::Minus, 3, 0, 1);
        let e2 = SkewPoly::g(Sign::Plus, 3, 0, 1);
        let c = identity_check(&e1, &e2).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
        let hyper = evaluate_frame(&e1, &e2, SymplecticParams { s: 0.5, phi: 0.0, theta: 0.0 }).unwrap();
        assert_eq!(hyper.verdict, Verdict::Infinite);
        assert!(hyper.recheck());
    }

    #[test]
    fn low_degree_rejected() {
        let e = SkewPoly::g(Sign::Plus, 2, 0, 1);
        assert!(identity_check(&e, &SkewPoly::g(Sign::Plus, 3, 0, 1)).is_err());
    }

    #[test]
    fn empty_search_finds_nothing_for_identity_failure() {
        let e1 = SkewPoly::g(Sign::Minus, 3, 0, 1);
        let e2 = SkewPoly::g(Sign::Minus, 3, 0, 2);
        // proportional pair: delta vanishes in every frame
        assert!(symplectic_search(&e1, &e2, 0, 7).unwrap().is_none());
    }
}
