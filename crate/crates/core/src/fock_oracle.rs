//! Truncated Fock-space matrices of Weyl polynomials, used as an independent
//! numerical check of the symbolic engine and of the factorized propagators.
//!
//! The matrix of `(a†)^α a^β` is built from `a|n> = √n |n-1>` directly, so it is
//! the exact compression of the operator to `span{|0>, ..., |N-1>}`. Products of
//! compressions only agree with compressions of products below the leak horizon
//! `N - (total degree)`, which is the block every check restricts to.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::Error;
use crate::weyl_core::{rational_to_f64, SkewPoly, WeylPoly};

pub type FockMatrix = DMatrix<Complex64>;

/// `sqrt(n! / (n - k)!)` for `k <= n`.
fn falling_sqrt(n: usize, k: usize) -> f64 {
    ((n - k + 1)..=n).map(|m| m as f64).product::<f64>().sqrt()
}

/// Matrix of `p` on the first `dim` number states.
pub fn fock_matrix(p: &WeylPoly, dim: usize) -> Result<FockMatrix, Error> {
    let degree = p.degree().unwrap_or(0);
    if dim <= degree as usize {
        return Err(Error::FockTooSmall { dim, degree });
    }
    let mut m = FockMatrix::zeros(dim, dim);
    for (k, c) in p.terms() {
        let c = Complex64::new(rational_to_f64(&c.re), rational_to_f64(&c.im));
        let (alpha, beta) = (k.alpha as usize, k.beta as usize);
        for n in beta..dim {
            let mid = n - beta;
            let row = mid + alpha;
            if row >= dim {
                break;
            }
            m[(row, n)] += c * falling_sqrt(n, beta) * falling_sqrt(row, alpha);
        }
    }
    Ok(m)
}

pub fn skew_matrix(p: &SkewPoly, dim: usize) -> Result<FockMatrix, Error> {
    fock_matrix(&p.to_weyl(), dim)
}

fn interior_max(m: &FockMatrix, size: usize) -> f64 {
    let mut out: f64 = 0.0;
    for i in 0..size.min(m.nrows()) {
        for j in 0..size.min(m.ncols()) {
            out = out.max(m[(i, j)].norm());
        }
    }
    out
}

/// `max |M([p, q]) - [M(p), M(q)]|` over rows and columns below `N - deg p - deg q`.
pub fn commutator_crosscheck(p: &WeylPoly, q: &WeylPoly, dim: usize) -> Result<f64, Error> {
    let dp = p.degree().unwrap_or(0) as usize;
    let dq = q.degree().unwrap_or(0) as usize;
    if dim < dp + dq + 2 {
        return Err(Error::FockTooSmall {
            dim,
            degree: (dp + dq + 1) as u32,
        });
    }
    let (mp, mq) = (fock_matrix(p, dim)?, fock_matrix(q, dim)?);
    let symbolic = fock_matrix(&p.commutator(q), dim)?;
    let numeric = &mp * &mq - &mq * &mp;
    Ok(interior_max(&(symbolic - numeric), dim - dp - dq))
}

/// `max |U†U - I|` on the leading `size x size` block.
pub fn unitarity_defect(u: &FockMatrix, size: usize) -> f64 {
    let g = u.adjoint() * u;
    interior_max(&(g - FockMatrix::identity(u.nrows(), u.ncols())), size)
}

/// `|<a|b>|^2 / (|a|^2 |b|^2)`: overlap modulo global phase.
pub fn fidelity(a: &DVector<Complex64>, b: &DVector<Complex64>) -> f64 {
    let inner = a.dotc(b).norm_sqr();
    inner / (a.norm_squared() * b.norm_squared())
}

/// `|0>` and `(|0> + |1>)/√2`.
pub fn test_states(dim: usize) -> [DVector<Complex64>; 2] {
    let mut vacuum = DVector::zeros(dim);
    vacuum[0] = Complex64::new(1.0, 0.0);
    let mut plus = DVector::zeros(dim);
    let r = std::f64::consts::FRAC_1_SQRT_2;
    plus[0] = Complex64::new(r, 0.0);
    plus[1] = Complex64::new(r, 0.0);
    [vacuum, plus]
}

/// Nonzero entries of a matrix, for fast products with banded generators.
#[derive(Debug, Clone)]
pub struct SparseOp {
    dim: usize,
    entries: Vec<(usize, usize, Complex64)>,
}

impl SparseOp {
    pub fn from_dense(m: &FockMatrix) -> Self {
        let mut entries = Vec::new();
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                if m[(i, j)] != Complex64::new(0.0, 0.0) {
                    entries.push((i, j, m[(i, j)]));
                }
            }
        }
        SparseOp { dim: m.nrows(), entries }
    }

    /// `sum_j w_j A_j` for operators of equal size.
    pub fn combine(ops: &[SparseOp], weights: &[f64]) -> SparseOp {
        let dim = ops.first().map_or(0, |o| o.dim);
        let mut dense = FockMatrix::zeros(dim, dim);
        for (op, &w) in ops.iter().zip(weights) {
            for &(i, j, v) in &op.entries {
                dense[(i, j)] += v * w;
            }
        }
        SparseOp::from_dense(&dense)
    }

    /// `self * x`.
    pub fn apply(&self, x: &FockMatrix) -> FockMatrix {
        let mut out = FockMatrix::zeros(self.dim, x.ncols());
        for c in 0..x.ncols() {
            let src = x.column(c);
            let mut dst = out.column_mut(c);
            for &(i, j, v) in &self.entries {
                dst[i] += v * src[j];
            }
        }
        out
    }
}

/// Upper bound on the unitarity loss accumulated over a whole integration.
const DRIFT_BUDGET: f64 = 1e-10;

/// Largest `||A|| dt` per RK4 substep such that the amplitude loss
/// `(||A|| dt)^6 / 72` per substep sums to at most [`DRIFT_BUDGET`] over `total_time`.
fn max_step_norm(norm: f64, total_time: f64) -> f64 {
    (72.0 * DRIFT_BUDGET / (norm * total_time).max(1e-300)).powf(0.2).min(0.1)
}

impl SparseOp {
    /// Maximum column sum of absolute values.
    pub fn norm_1(&self) -> f64 {
        let mut cols = vec![0.0; self.dim];
        for &(_, j, v) in &self.entries {
            cols[j] += v.norm();
        }
        cols.into_iter().fold(0.0, f64::max)
    }
}

/// RK4 for `dU/dt = -A(t) U`, `U(0) = I`, where `A(t) = sum_j u_j(t) G_j` is the
/// skew-hermitian generator `iH(t)`. `controls(t)` returns the `u_j(t)`.
/// Each grid step of size `h` is split into equal substeps, sized from `||A||_1` so
/// that the non-unitarity of RK4 on the fast top number states stays below `1e-10`.
/// Unitarity is checked on the interior block every `check_every` grid steps.
pub fn integrate_propagator(
    generators: &[FockMatrix],
    controls: impl Fn(f64) -> Vec<f64>,
    h: f64,
    steps: usize,
    check_every: usize,
) -> Result<FockMatrix, Error> {
    let dim = generators.first().map_or(0, |g| g.nrows());
    let ops: Vec<SparseOp> = generators.iter().map(SparseOp::from_dense).collect();
    let generator = |t: f64| SparseOp::combine(&ops, &controls(t));
    let rhs = |t: f64, u: &FockMatrix| -> FockMatrix { -generator(t).apply(u) };
    let mut u = FockMatrix::identity(dim, dim);
    let interior = dim.saturating_sub(4);
    let c = |x: f64| Complex64::new(x, 0.0);
    let total_time = h * steps as f64;
    for k in 0..steps {
        let t0 = k as f64 * h;
        let norm = generator(t0).norm_1().max(generator(t0 + h).norm_1());
        let sub = ((norm * h / max_step_norm(norm, total_time)).ceil() as usize).max(1);
        let dt = h / sub as f64;
        for s in 0..sub {
            let t = t0 + s as f64 * dt;
            let k1 = rhs(t, &u);
            let k2 = rhs(t + dt / 2.0, &(&u + &k1 * c(dt / 2.0)));
            let k3 = rhs(t + dt / 2.0, &(&u + &k2 * c(dt / 2.0)));
            let k4 = rhs(t + dt, &(&u + &k3 * c(dt)));
            u += (k1 + k2 * c(2.0) + k3 * c(2.0) + k4) * c(dt / 6.0);
        }
        if check_every > 0 && ((k + 1) % check_every == 0 || k + 1 == steps) {
            let drift = unitarity_defect(&u, interior);
            if !(drift <= 1e-9) {
                return Err(Error::UnitarityDrift {
                    drift,
                    time: (k + 1) as f64 * h,
                });
            }
        }
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_core::{named, GaussianRational, MultiIndex, Rational};

    fn mono(alpha: u32, beta: u32) -> WeylPoly {
        WeylPoly::term(MultiIndex::new(alpha, beta), GaussianRational::new(Rational::from_integer(1.into()), Rational::from_integer(0.into())))
    }

    #[test]
    fn number_and_ladder() {
        let n = fock_matrix(&mono(1, 1), 4).unwrap();
        for k in 0..4 {
            assert!((n[(k, k)].re - k as f64).abs() < 1e-15);
        }
        let a = fock_matrix(&mono(0, 1), 3).unwrap();
        assert!((a[(0, 1)].re - 1.0).abs() < 1e-15);
        assert!((a[(1, 2)].re - 2f64.sqrt()).abs() < 1e-15);
        assert!(fock_matrix(&mono(2, 1), 2).is_err());
    }

    #[test]
    fn skew_generators_are_skew() {
        let m = skew_matrix(&named::gp1(), 8).unwrap();
        assert!((&m + m.adjoint()).norm() < 1e-15);
    }

    #[test]
    fn table_entry_numerically() {
        let err = commutator_crosscheck(&named::n().to_weyl(), &named::gp1().to_weyl(), 12).unwrap();
        assert!(err < 1e-12);
        let m = fock_matrix(&named::n().bracket(&named::gp1()).to_weyl(), 12).unwrap();
        let g = fock_matrix(&named::gm1().to_weyl(), 12).unwrap();
        assert!((m - g).norm() < 1e-12);
    }

    #[test]
    fn free_evolution_is_diagonal() {
        let g = vec![skew_matrix(&named::n(), 10).unwrap()];
        let u = integrate_propagator(&g, |_| vec![1.5], 1e-3, 1000, 100).unwrap();
        for k in 0..10 {
            let expect = Complex64::from_polar(1.0, -1.5 * k as f64);
            // RK4 global error for frequency w over unit time is about (w h)^4 w / 120
            let w = 1.5 * k as f64;
            assert!((u[(k, k)] - expect).norm() < 1e-12 + 2.0 * (w * 1e-3).powi(4) * w / 120.0);
        }
    }
}
