//! Root extraction `Z`: monic polynomial to root multiset, via the
//! Aberth-Ehrlich simultaneous iteration, plus Cauchy's a-priori bound.
//!
//! Each sweep costs `O(n^2)`; degrees up to roughly 500 are practical.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::types::{MonicPolynomial, RootMultiset};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub max_iterations: usize,
    /// Bound on `max |p(z)| / (1 + max|a_j|)^n` at convergence.
    pub residual_tolerance: f64,
    /// Bound on the largest Aberth correction, relative to `1 + cauchy_bound`.
    pub step_tolerance: f64,
    /// Initial guesses sit on a circle of this fraction of the Cauchy radius.
    pub initial_radius_factor: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            max_iterations: 200,
            residual_tolerance: 1e-12,
            step_tolerance: 1e-13,
            initial_radius_factor: 0.9,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidArgument("max_iterations must be >= 1".into()));
        }
        if !(self.residual_tolerance > 0.0 && self.residual_tolerance.is_finite()) {
            return Err(Error::InvalidArgument("residual_tolerance must be > 0".into()));
        }
        if !(self.step_tolerance > 0.0 && self.step_tolerance.is_finite()) {
            return Err(Error::InvalidArgument("step_tolerance must be > 0".into()));
        }
        if !(self.initial_radius_factor > 0.0 && self.initial_radius_factor <= 1.0) {
            return Err(Error::InvalidArgument(
                "initial_radius_factor must lie in (0, 1]".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub roots: RootMultiset,
    pub iterations: usize,
    /// `max_k |p(z_k)| / (1 + max_j |a_j|)^n` over the returned roots.
    pub max_residual: f64,
    pub converged: bool,
}

/// `1 + max_j |a_j|`; every root lies strictly inside this radius.
pub fn cauchy_bound(p: &MonicPolynomial) -> f64 {
    1.0 + p.max_coeff_modulus()
}

fn scaled_residual(p: &MonicPolynomial, z: &[Complex64], log_scale: f64) -> f64 {
    z.iter()
        .map(|&x| {
            let r = p.eval(x).norm();
            if r == 0.0 {
                0.0
            } else {
                (r.ln() - log_scale).exp()
            }
        })
        .fold(0.0, f64::max)
}

/// Runs Aberth-Ehrlich on `p`. Non-convergence is reported through
/// `converged = false` together with the best iterate seen.
pub fn solve(p: &MonicPolynomial, cfg: &SolverConfig) -> Result<SolveReport> {
    cfg.validate()?;
    let n = p.degree();
    let bound = cauchy_bound(p);
    let log_scale = n as f64 * bound.ln();
    let step_limit = cfg.step_tolerance * (1.0 + bound);

    let radius = cfg.initial_radius_factor * bound;
    let offset = PI / (2.0 * n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + offset))
        .collect();

    let mut best = z.clone();
    let mut best_residual = scaled_residual(p, &z, log_scale);
    let mut iterations = 0;
    let mut converged = false;

    while iterations < cfg.max_iterations {
        iterations += 1;
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (val, der) = p.eval_with_derivative(z[k]);
            if val == Complex64::new(0.0, 0.0) {
                continue;
            }
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k && z[j] != z[k])
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let denom = der - val * repulsion;
            let mut step = val / denom;
            if !step.is_finite() {
                // stalled on a critical point; kick along a fixed direction
                step = Complex64::from_polar(step_limit.max(1e-8 * bound), k as f64 + 1.0);
            }
            z[k] -= step;
            max_step = max_step.max(step.norm());
        }

        let residual = scaled_residual(p, &z, log_scale);
        if residual <= best_residual {
            best_residual = residual;
            best.copy_from_slice(&z);
        }
        if max_step <= step_limit && residual <= cfg.residual_tolerance {
            converged = true;
            best.copy_from_slice(&z);
            best_residual = residual;
            break;
        }
    }

    Ok(SolveReport {
        roots: RootMultiset::new(best).expect("finite iterate"),
        iterations,
        max_residual: best_residual,
        converged,
    })
}

/// [`solve`] with default settings; non-convergence is an error.
pub fn roots_of(p: &MonicPolynomial) -> Result<RootMultiset> {
    roots_with(p, &SolverConfig::default())
}

pub fn roots_with(p: &MonicPolynomial, cfg: &SolverConfig) -> Result<RootMultiset> {
    let report = solve(p, cfg)?;
    if report.converged {
        Ok(report.roots)
    } else {
        Err(Error::NotConverged(Box::new(report)))
    }
}
