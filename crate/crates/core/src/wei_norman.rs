//! Wei–Norman factor functions for the Schrödinger and `wh2` algebras.
//!
//! Controls are the coefficients of `iH(t) = sum_j u_j(t) g_j` and the propagator
//! is `U(t) = prod_j exp(-f_j(t) g_j)` in the order below, up to a global phase
//! `exp(-f_phase(t) i)` that is tracked separately.
//!
//! | j | generator       | Hamiltonian term      |
//! |---|-----------------|-----------------------|
//! | 1 | `i a†a`         | `u_1 a†a`             |
//! | 2 | `a - a†`        | `-i u_2 (a - a†)`     |
//! | 3 | `i(a + a†)`     | `u_3 (a + a†)`        |
//! | 4 | `a² - a†²`      | `-i u_4 (a² - a†²)`   |
//! | 5 | `i(a² + a†²)`   | `u_5 (a² + a†²)`      |
//!
//! `wh2` uses the first three rows.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fock_oracle::{self, FockMatrix};
use crate::weyl_core::{named, SkewPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Schrodinger,
    Wh2,
}

impl Algebra {
    pub fn controls(self) -> usize {
        match self {
            Algebra::Schrodinger => 5,
            Algebra::Wh2 => 3,
        }
    }

    /// Generators in factor order.
    pub fn generators(self) -> Vec<SkewPoly> {
        let all = [named::n(), named::gm1(), named::gp1(), named::gm2(), named::gp2()];
        all[..self.controls()].to_vec()
    }
}

/// One control function `u_j(t)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Control {
    Constant(f64),
    /// `offset + amplitude * sin(omega t + phase)`.
    Sinusoid {
        amplitude: f64,
        omega: f64,
        #[serde(default)]
        phase: f64,
        #[serde(default)]
        offset: f64,
    },
    /// Values on the grid `t_k = k h`, `k = 0..=n_steps`; cubic interpolation in between.
    Samples(Vec<f64>),
}

impl Control {
    pub fn eval(&self, t: f64, h: f64) -> f64 {
        match self {
            Control::Constant(c) => *c,
            Control::Sinusoid {
                amplitude,
                omega,
                phase,
                offset,
            } => offset + amplitude * (omega * t + phase).sin(),
            Control::Samples(v) => interpolate(v, t / h),
        }
    }
}

/// Four-point Lagrange interpolation at fractional index `x`.
fn interpolate(v: &[f64], x: f64) -> f64 {
    let n = v.len();
    if n == 0 {
        return 0.0;
    }
    if n < 4 {
        let k = (x.round().max(0.0) as usize).min(n - 1);
        return v[k];
    }
    let base = (x.floor() as isize - 1).clamp(0, n as isize - 4) as usize;
    let mut out = 0.0;
    for i in 0..4 {
        let xi = (base + i) as f64;
        let mut w = 1.0;
        for j in 0..4 {
            if i != j {
                let xj = (base + j) as f64;
                w *= (x - xj) / (xi - xj);
            }
        }
        out += w * v[base + i];
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControlSpec {
    pub algebra: Algebra,
    /// Grid step.
    pub h: f64,
    pub n_steps: usize,
    pub controls: Vec<Control>,
}

impl ControlSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.h > 0.0 && self.h.is_finite()) {
            return Err(Error::InvalidControls(format!("step h = {} must be positive", self.h)));
        }
        if self.controls.len() != self.algebra.controls() {
            return Err(Error::InvalidControls(format!(
                "{} controls given, {:?} needs {}",
                self.controls.len(),
                self.algebra,
                self.algebra.controls()
            )));
        }
        for (j, c) in self.controls.iter().enumerate() {
            let finite = match c {
                Control::Constant(v) => v.is_finite(),
                Control::Sinusoid {
                    amplitude,
                    omega,
                    phase,
                    offset,
                } => [amplitude, omega, phase, offset].iter().all(|v| v.is_finite()),
                Control::Samples(v) => {
                    if v.len() != self.n_steps + 1 {
                        return Err(Error::InvalidControls(format!(
                            "u{} has {} samples, expected {}",
                            j + 1,
                            v.len(),
                            self.n_steps + 1
                        )));
                    }
                    v.iter().all(|x| x.is_finite())
                }
            };
            if !finite {
                return Err(Error::InvalidControls(format!("u{} is not finite", j + 1)));
            }
        }
        Ok(())
    }

    pub fn u(&self, t: f64) -> Vec<f64> {
        self.controls.iter().map(|c| c.eval(t, self.h)).collect()
    }

    pub fn time(&self, k: usize) -> f64 {
        k as f64 * self.h
    }

    fn expect(&self, algebra: Algebra) -> Result<(), Error> {
        self.validate()?;
        if self.algebra != algebra {
            return Err(Error::InvalidControls(format!("expected {algebra:?} controls, got {:?}", self.algebra)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    ClosedFormQuadrature,
    Rk4,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorSolution {
    pub algebra: Algebra,
    pub h: f64,
    /// `f[j][k] = f_{j+1}(t_k)`.
    pub f: Vec<Vec<f64>>,
    /// `df[j][k]`: derivatives from the defining equations at the grid points.
    pub df: Vec<Vec<f64>>,
    /// Coefficient of the global phase factor `exp(-f_phase i)`.
    pub phase: Vec<f64>,
    pub method: SolveMethod,
    /// Step-halving estimate of the global error (RK4 only).
    pub error_estimate: Option<f64>,
}

impl FactorSolution {
    pub fn len(&self) -> usize {
        self.phase.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phase.is_empty()
    }

    pub fn at(&self, k: usize) -> Vec<f64> {
        self.f.iter().map(|fj| fj[k]).collect()
    }
}

/// Cubic Hermite value at the midpoint.
fn hermite_mid(y0: f64, y1: f64, d0: f64, d1: f64, h: f64) -> f64 {
    0.5 * (y0 + y1) + h * (d0 - d1) / 8.0
}

/// Integrands of the `wh2` quadratures at `(t, f_1)`: `(u_1, cos f_1 u_2 + sin f_1 u_3, cos f_1 u_3 - sin f_1 u_2)`.
fn wh2_rates(u: &[f64], f1: f64) -> [f64; 3] {
    let (c, s) = (f1.cos(), f1.sin());
    [u[0], c * u[1] + s * u[2], c * u[2] - s * u[1]]
}

/// `f_1 = ∫u_1`, `f_2 = ∫(cos f_1 u_2 + sin f_1 u_3)`, `f_3 = ∫(cos f_1 u_3 - sin f_1 u_2)`
/// and the phase `2 ∫ f_2 f_3'`, by composite Simpson with Hermite midpoints.
pub fn wh2_factors(spec: &ControlSpec) -> Result<FactorSolution, Error> {
    spec.expect(Algebra::Wh2)?;
    let (h, n) = (spec.h, spec.n_steps);
    let mut f = vec![vec![0.0; n + 1]; 3];
    let mut df = vec![vec![0.0; n + 1]; 3];
    let mut phase = vec![0.0; n + 1];
    let r0 = wh2_rates(&spec.u(0.0), 0.0);
    for j in 0..3 {
        df[j][0] = r0[j];
    }
    for k in 0..n {
        let (t0, tm, t1) = (spec.time(k), spec.time(k) + h / 2.0, spec.time(k + 1));
        let (u0, um, u1) = (spec.u(t0), spec.u(tm), spec.u(t1));
        // f_1 first: its integrand depends on t only
        f[0][k + 1] = f[0][k] + h / 6.0 * (u0[0] + 4.0 * um[0] + u1[0]);
        let f1m = hermite_mid(f[0][k], f[0][k + 1], u0[0], u1[0], h);
        let (ra, rm, rb) = (wh2_rates(&u0, f[0][k]), wh2_rates(&um, f1m), wh2_rates(&u1, f[0][k + 1]));
        for j in 1..3 {
            f[j][k + 1] = f[j][k] + h / 6.0 * (ra[j] + 4.0 * rm[j] + rb[j]);
        }
        for j in 0..3 {
            df[j][k + 1] = rb[j];
        }
        let f2m = hermite_mid(f[1][k], f[1][k + 1], ra[1], rb[1], h);
        phase[k + 1] = phase[k] + h / 3.0 * (f[1][k] * ra[2] + 4.0 * f2m * rm[2] + f[1][k + 1] * rb[2]);
    }
    Ok(FactorSolution {
        algebra: Algebra::Wh2,
        h,
        f,
        df,
        phase,
        method: SolveMethod::ClosedFormQuadrature,
        error_estimate: None,
    })
}

/// Largest `|f_4|` before `cosh(4 f_4)` and `exp(4 f_4)` lose all precision.
const SQUEEZE_LIMIT: f64 = 150.0;

/// Right-hand side of the inverted Schrödinger system; state `(f_1..f_5, f_phase)`.
fn schrodinger_rhs(u: &[f64], y: &[f64; 6]) -> [f64; 6] {
    let [f1, f2, f3, f4, _, _] = *y;
    let (c1, s1) = (f1.cos(), f1.sin());
    let (c2, s2) = ((2.0 * f1).cos(), (2.0 * f1).sin());
    let (ep, em) = ((4.0 * f4).exp(), (-4.0 * f4).exp());
    let ch = (4.0 * f4).cosh();
    let sh = (4.0 * f4).sinh();
    let d4 = u[3] * c2 + u[4] * s2;
    let d5 = (u[4] * c2 - u[3] * s2) / ch;
    let d1 = u[0] + 2.0 * sh * d5;
    let d2 = u[1] * c1 + u[2] * s1 + 2.0 * d4 * f2 + 2.0 * d5 * f3 * ep;
    let d3 = u[2] * c1 - u[1] * s1 - 2.0 * d4 * f3 + 2.0 * d5 * f2 * em;
    // coefficient of i after conjugating g_3, g_4, g_5 into the frame of the earlier factors
    let d6 = 2.0 * f2 * d3 + 4.0 * f2 * f3 * d4 - d5 * (2.0 * f2 * f2 * em - 2.0 * f3 * f3 * ep - sh);
    [d1, d2, d3, d4, d5, d6]
}

fn rk4_path(spec: &ControlSpec, h: f64, steps: usize) -> Result<Vec<[f64; 6]>, Error> {
    let mut y = [0.0; 6];
    let mut out = Vec::with_capacity(steps + 1);
    out.push(y);
    let add = |y: &[f64; 6], k: &[f64; 6], s: f64| -> [f64; 6] { std::array::from_fn(|i| y[i] + s * k[i]) };
    for k in 0..steps {
        let t = k as f64 * h;
        let k1 = schrodinger_rhs(&spec.u(t), &y);
        let k2 = schrodinger_rhs(&spec.u(t + h / 2.0), &add(&y, &k1, h / 2.0));
        let k3 = schrodinger_rhs(&spec.u(t + h / 2.0), &add(&y, &k2, h / 2.0));
        let k4 = schrodinger_rhs(&spec.u(t + h), &add(&y, &k3, h));
        y = std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
        if y.iter().any(|v| !v.is_finite()) || y[3].abs() > SQUEEZE_LIMIT {
            return Err(Error::BlowUp {
                index: k + 1,
                time: (k + 1) as f64 * h,
            });
        }
        out.push(y);
    }
    Ok(out)
}

/// RK4 on the inverted system with `f(0) = 0`, plus a step-halving error estimate.
pub fn schrodinger_factors(spec: &ControlSpec) -> Result<FactorSolution, Error> {
    spec.expect(Algebra::Schrodinger)?;
    let (h, n) = (spec.h, spec.n_steps);
    let coarse = rk4_path(spec, h, n)?;
    let fine = rk4_path(spec, h / 2.0, 2 * n)?;
    let estimate = coarse
        .iter()
        .enumerate()
        .flat_map(|(k, y)| {
            let f = &fine[2 * k];
            (0..5).map(move |j| (y[j] - f[j]).abs())
        })
        .fold(0.0, f64::max)
        / 15.0;
    let mut f = vec![vec![0.0; n + 1]; 5];
    let mut df = vec![vec![0.0; n + 1]; 5];
    let mut phase = vec![0.0; n + 1];
    for (k, y) in coarse.iter().enumerate() {
        let d = schrodinger_rhs(&spec.u(spec.time(k)), y);
        for j in 0..5 {
            f[j][k] = y[j];
            df[j][k] = d[j];
        }
        phase[k] = y[5];
    }
    Ok(FactorSolution {
        algebra: Algebra::Schrodinger,
        h,
        f,
        df,
        phase,
        method: SolveMethod::Rk4,
        error_estimate: Some(estimate),
    })
}

/// Dispatches on the algebra.
pub fn solve(spec: &ControlSpec) -> Result<FactorSolution, Error> {
    match spec.algebra {
        Algebra::Wh2 => wh2_factors(spec),
        Algebra::Schrodinger => schrodinger_factors(spec),
    }
}

/// Controls recovered from `f` and `f'` through the forward equations.
pub fn forward_controls(algebra: Algebra, f: &[f64], d: &[f64]) -> Vec<f64> {
    let (c1, s1) = (f[0].cos(), f[0].sin());
    match algebra {
        Algebra::Wh2 => vec![d[0], d[1] * c1 - d[2] * s1, d[1] * s1 + d[2] * c1],
        Algebra::Schrodinger => {
            let (f2, f3, f4) = (f[1], f[2], f[3]);
            let (c2, s2) = ((2.0 * f[0]).cos(), (2.0 * f[0]).sin());
            let (ep, em) = ((4.0 * f4).exp(), (-4.0 * f4).exp());
            let (ch, sh) = ((4.0 * f4).cosh(), (4.0 * f4).sinh());
            vec![
                d[0] - 2.0 * d[4] * sh,
                d[1] * c1 - d[2] * s1 - 2.0 * d[3] * (f2 * c1 + f3 * s1) + 2.0 * d[4] * (f2 * em * s1 - f3 * ep * c1),
                d[1] * s1 + d[2] * c1 + 2.0 * d[3] * (f3 * c1 - f2 * s1) - 2.0 * d[4] * (f2 * em * c1 + f3 * ep * s1),
                d[3] * c2 - d[4] * ch * s2,
                d[3] * s2 + d[4] * ch * c2,
            ]
        }
    }
}

/// Five-point finite-difference derivative at grid index `k`.
fn derivative(v: &[f64], k: usize, h: f64) -> f64 {
    let n = v.len();
    if n < 5 {
        return if n < 2 {
            0.0
        } else if k + 1 < n {
            (v[k + 1] - v[k]) / h
        } else {
            (v[k] - v[k - 1]) / h
        };
    }
    // stencil offsets -2..=2 shifted to stay inside the grid
    let start = k.saturating_sub(2).min(n - 5);
    let p = k - start;
    const W: [[f64; 5]; 5] = [
        [-25.0, 48.0, -36.0, 16.0, -3.0],
        [-3.0, -10.0, 18.0, -6.0, 1.0],
        [1.0, -8.0, 0.0, 8.0, -1.0],
        [-1.0, 6.0, -18.0, 10.0, 3.0],
        [3.0, -16.0, 36.0, -48.0, 25.0],
    ];
    W[p].iter().zip(&v[start..start + 5]).map(|(w, x)| w * x).sum::<f64>() / (12.0 * h)
}

/// Where the derivatives in [`residual_check_with`] come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivatives {
    FiniteDifference,
    Stored,
}

/// `max |u_reconstructed - u_input|` over the grid, with finite-difference `f'`.
pub fn residual_check(spec: &ControlSpec, sol: &FactorSolution) -> Result<f64, Error> {
    residual_check_with(spec, sol, Derivatives::FiniteDifference)
}

pub fn residual_check_with(spec: &ControlSpec, sol: &FactorSolution, source: Derivatives) -> Result<f64, Error> {
    spec.validate()?;
    if sol.algebra != spec.algebra || sol.len() != spec.n_steps + 1 || sol.h != spec.h {
        return Err(Error::InvalidControls("solution grid does not match the controls".to_string()));
    }
    let mut worst: f64 = 0.0;
    for k in 0..sol.len() {
        let f = sol.at(k);
        let d: Vec<f64> = match source {
            Derivatives::Stored => sol.df.iter().map(|dj| dj[k]).collect(),
            Derivatives::FiniteDifference => sol.f.iter().map(|fj| derivative(fj, k, sol.h)).collect(),
        };
        let rebuilt = forward_controls(sol.algebra, &f, &d);
        let input = spec.u(spec.time(k));
        for (a, b) in rebuilt.iter().zip(&input) {
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}

/// `prod_j exp(-f_j(t_k) G_j)` on `dim` number states, global phase excluded.
pub fn factored_propagator(sol: &FactorSolution, t_index: usize, dim: usize) -> Result<FockMatrix, Error> {
    if dim < 8 {
        return Err(Error::FockTooSmall { dim, degree: 7 });
    }
    let mut u = FockMatrix::identity(dim, dim);
    for (g, fj) in sol.algebra.generators().iter().zip(&sol.f) {
        let m = fock_oracle::skew_matrix(g, dim)? * Complex64::new(-fj[t_index], 0.0);
        u *= m.exp();
    }
    Ok(u)
}

/// [`factored_propagator`] times `exp(-f_phase i)`.
pub fn factored_propagator_with_phase(sol: &FactorSolution, t_index: usize, dim: usize) -> Result<FockMatrix, Error> {
    Ok(factored_propagator(sol, t_index, dim)? * Complex64::from_polar(1.0, -sol.phase[t_index]))
}

/// Direct RK4 integration of `dU/dt = -iH(t) U` on `dim` number states up to grid index `t_index`.
pub fn direct_propagator(spec: &ControlSpec, dim: usize, t_index: usize) -> Result<FockMatrix, Error> {
    spec.validate()?;
    let generators: Vec<FockMatrix> = spec
        .algebra
        .generators()
        .iter()
        .map(|g| fock_oracle::skew_matrix(g, dim))
        .collect::<Result<_, _>>()?;
    fock_oracle::integrate_propagator(&generators, |t| spec.u(t), spec.h, t_index, 100)
}

/// Minimum fidelity between `U_a psi` and `U_b psi` over `|0>` and `(|0> + |1>)/√2`.
pub fn min_fidelity(a: &FockMatrix, b: &FockMatrix) -> f64 {
    fock_oracle::test_states(a.nrows())
        .iter()
        .map(|psi| {
            let x: DVector<Complex64> = a * psi;
            let y: DVector<Complex64> = b * psi;
            fock_oracle::fidelity(&x, &y)
        })
        .fold(1.0, f64::min)
}
