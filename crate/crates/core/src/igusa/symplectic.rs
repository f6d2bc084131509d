use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::weyl_core::{rational_to_f64, GaussianRational, MultiIndex, WeylPoly};

/// Skew-hermiticity preserving symplectic matrix
///
/// ```text
/// [ e^{i phi} cosh s     e^{-i theta} sinh s ]
/// [ e^{i theta} sinh s   e^{-i phi} cosh s   ]
/// ```
///
/// acting as `a† -> s11 a† + s12 a`, `a -> s21 a† + s22 a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymplecticParams {
    pub s: f64,
    pub phi: f64,
    pub theta: f64,
}

impl SymplecticParams {
    pub const IDENTITY: SymplecticParams = SymplecticParams {
        s: 0.0,
        phi: 0.0,
        theta: 0.0,
    };

    pub fn is_identity(&self) -> bool {
        *self == SymplecticParams::IDENTITY
    }

    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        let (c, sh) = (self.s.cosh(), self.s.sinh());
        [
            [Complex64::from_polar(c, self.phi), Complex64::from_polar(sh, -self.theta)],
            [Complex64::from_polar(sh, self.theta), Complex64::from_polar(c, -self.phi)],
        ]
    }

    pub fn determinant(&self) -> Complex64 {
        let m = self.matrix();
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }
}

/// Coefficients `f_k` of `(a†)^k a^{d-k}` in the top-degree part of `p`, `k = 0..=d`.
pub fn top_symbol(p: &WeylPoly) -> Option<(u32, Vec<GaussianRational>)> {
    let d = p.degree()?;
    let f = (0..=d).map(|k| p.coeff(MultiIndex::new(k, d - k))).collect();
    Some((d, f))
}

fn to_c64(z: &GaussianRational) -> Complex64 {
    Complex64::new(rational_to_f64(&z.re), rational_to_f64(&z.im))
}

/// `(alpha_0, alpha_1)`: coefficients of `a^d` and `a† a^{d-1}` in the top-degree
/// part of the transformed polynomial. Coefficients are pre-scaled so the largest
/// `|f_k|` is one.
pub fn transformed_leading(d: u32, f: &[GaussianRational], sigma: &[[Complex64; 2]; 2]) -> (Complex64, Complex64) {
    let fc: Vec<Complex64> = f.iter().map(to_c64).collect();
    let scale = fc.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let [[s11, s12], [s21, s22]] = *sigma;
    let d = d as i32;
    let mut a0 = Complex64::zero();
    let mut a1 = Complex64::zero();
    for (k, fk) in fc.iter().enumerate() {
        let k = k as i32;
        let fk = fk / scale;
        a0 += fk * s12.powi(k) * s22.powi(d - k);
        if k > 0 {
            a1 += fk * (k as f64) * s11 * s12.powi(k - 1) * s22.powi(d - k);
        }
        if k < d {
            a1 += fk * ((d - k) as f64) * s21 * s12.powi(k) * s22.powi(d - k - 1);
        }
    }
    (a0, a1)
}

/// Exact image of `p` under `a† -> m11 a† + m12 a`, `a -> m21 a† + m22 a`.
pub fn apply_exact(p: &WeylPoly, m: &[[GaussianRational; 2]; 2]) -> WeylPoly {
    let adag = WeylPoly::adag().scale(&m[0][0]).add(&WeylPoly::a().scale(&m[0][1]));
    let a = WeylPoly::adag().scale(&m[1][0]).add(&WeylPoly::a().scale(&m[1][1]));
    let mut adag_pow: BTreeMap<u32, WeylPoly> = BTreeMap::new();
    let mut a_pow: BTreeMap<u32, WeylPoly> = BTreeMap::new();
    let mut out = WeylPoly::zero();
    for (k, c) in p.terms() {
        let left = power(&adag, k.alpha, &mut adag_pow);
        let right = power(&a, k.beta, &mut a_pow);
        out = out.add(&left.mul(&right).scale(c));
    }
    out
}

fn power(x: &WeylPoly, n: u32, cache: &mut BTreeMap<u32, WeylPoly>) -> WeylPoly {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let p = if n == 0 {
        WeylPoly::one()
    } else {
        power(x, n - 1, cache).mul(x)
    };
    cache.insert(n, p.clone());
    p
}

/// `m11 m22 - m12 m21 == 1`.
pub fn is_symplectic(m: &[[GaussianRational; 2]; 2]) -> bool {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0] == GaussianRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::rat;

    #[test]
    fn unit_determinant() {
        for p in [
            SymplecticParams { s: 0.5, phi: 0.3, theta: -1.2 },
            SymplecticParams { s: -1.0, phi: 2.0, theta: 0.0 },
        ] {
            assert!((p.determinant() - Complex64::one()).norm() < 1e-12);
        }
    }

    #[test]
    fn exact_map_keeps_ccr() {
        let g = |re: i64, im: i64| GaussianRational::new(rat(re, 1), rat(im, 1));
        // det = 3 - (1+i)(1-i) = 1
        let m = [[g(3, 0), g(1, 1)], [g(1, -1), g(1, 0)]];
        assert!(is_symplectic(&m));
        let a = apply_exact(&WeylPoly::a(), &m);
        let ad = apply_exact(&WeylPoly::adag(), &m);
        assert_eq!(a.commutator(&ad), WeylPoly::one());
    }

    #[test]
    fn leading_coefficients_match_exact_image() {
        let g = |re: i64, im: i64| GaussianRational::new(rat(re, 1), rat(im, 1));
        let m = [[g(3, 0), g(1, 1)], [g(1, -1), g(1, 0)]];
        let p = crate::weyl_core::SkewPoly::g(crate::weyl_core::Sign::Minus, 3, 1, 2)
            .add(&crate::weyl_core::SkewPoly::g(crate::weyl_core::Sign::Plus, 2, 2, 1))
            .to_weyl();
        let image = apply_exact(&p, &m);
        let d = image.degree().unwrap();
        let (d0, f) = top_symbol(&p).unwrap();
        assert_eq!(d, d0);
        let sigma = m.map(|row| row.map(|z| to_c64(&z)));
        let scale = f.iter().map(|z| to_c64(z).norm()).fold(0.0, f64::max);
        let (a0, a1) = transformed_leading(d, &f, &sigma);
        let exact0 = to_c64(&image.coeff(MultiIndex::new(0, d))) / scale;
        let exact1 = to_c64(&image.coeff(MultiIndex::new(1, d - 1))) / scale;
        assert!((a0 - exact0).norm() < 1e-12 && (a1 - exact1).norm() < 1e-12);
    }
}
