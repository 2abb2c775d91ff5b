//! Quasi-Newton (BFGS) minimizer with an Armijo backtracking line search.
//!
//! The problems here are smooth and low dimensional (the parameter vector of
//! the two-equation model), so a dense inverse-Hessian update with analytic
//! gradients is the right tool. Convergence is declared at gradient sup-norm
//! or relative objective change, whichever triggers first.

use alloc::vec;
use alloc::vec::Vec;

use crate::fmath;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct BfgsOptions {
    /// Gradient sup-norm threshold.
    pub grad_tol: f64,
    /// Relative objective-change threshold.
    pub obj_tol: f64,
    /// Cap on objective/gradient evaluations.
    pub max_evals: usize,
}

impl Default for BfgsOptions {
    fn default() -> Self {
        BfgsOptions {
            grad_tol: 1e-8,
            obj_tol: 1e-12,
            max_evals: 4000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BfgsOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub gradient: Vec<f64>,
    pub iterations: usize,
    pub evaluations: usize,
    pub converged: bool,
}

fn sup_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, &x| m.max(fmath::abs(x)))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimize `f` starting at `x0`. `f` returns the objective value and writes
/// the gradient into its second argument.
pub fn bfgs<F>(mut f: F, x0: &[f64], opts: &BfgsOptions) -> Result<BfgsOutcome>
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut g = vec![0.0; n];
    let mut evals = 0usize;
    let mut fx = f(&x, &mut g);
    evals += 1;
    if !fx.is_finite() {
        return Err(Error::InvalidInput {
            detail: alloc::string::String::from("objective not finite at start point"),
        });
    }

    // Inverse Hessian approximation, dense row-major.
    let mut h = vec![0.0; n * n];
    let reset = |h: &mut Vec<f64>| {
        h.iter_mut().for_each(|v| *v = 0.0);
        for i in 0..n {
            h[i * n + i] = 1.0;
        }
    };
    reset(&mut h);

    let mut dir = vec![0.0; n];
    let mut x_new = vec![0.0; n];
    let mut g_new = vec![0.0; n];
    let mut iterations = 0usize;

    loop {
        if sup_norm(&g) <= opts.grad_tol {
            return Ok(BfgsOutcome {
                x,
                value: fx,
                gradient: g,
                iterations,
                evaluations: evals,
                converged: true,
            });
        }
        if evals >= opts.max_evals {
            return Err(Error::OptimizerFailed { evaluations: evals });
        }

        // dir = -H g
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += h[i * n + j] * g[j];
            }
            dir[i] = -acc;
        }
        let mut slope = dot(&dir, &g);
        if !(slope < 0.0) {
            reset(&mut h);
            for i in 0..n {
                dir[i] = -g[i];
            }
            slope = -dot(&g, &g);
        }

        // Armijo backtracking.
        let mut step = 1.0;
        let c1 = 1e-4;
        let mut accepted = false;
        let mut f_new = fx;
        for _ in 0..60 {
            for i in 0..n {
                x_new[i] = x[i] + step * dir[i];
            }
            f_new = f(&x_new, &mut g_new);
            evals += 1;
            if f_new.is_finite() && f_new <= fx + c1 * step * slope {
                accepted = true;
                break;
            }
            step *= 0.5;
            if evals >= opts.max_evals {
                return Err(Error::OptimizerFailed { evaluations: evals });
            }
        }
        if !accepted {
            // Line search stalled; treat the current point as converged only
            // if the gradient is already small, else fail loudly.
            if sup_norm(&g) <= 100.0 * opts.grad_tol {
                return Ok(BfgsOutcome {
                    x,
                    value: fx,
                    gradient: g,
                    iterations,
                    evaluations: evals,
                    converged: true,
                });
            }
            return Err(Error::OptimizerFailed { evaluations: evals });
        }

        iterations += 1;
        let rel_change = fmath::abs(fx - f_new) / fmath::abs(fx).max(1.0);

        // BFGS update of the inverse Hessian.
        let mut s = vec![0.0; n];
        let mut yv = vec![0.0; n];
        for i in 0..n {
            s[i] = x_new[i] - x[i];
            yv[i] = g_new[i] - g[i];
        }
        let sy = dot(&s, &yv);
        if sy > 1e-12 * sup_norm(&s) * sup_norm(&yv).max(1e-300) {
            // h_new = (I - s y'/sy) H (I - y s'/sy) + s s'/sy
            let mut hy = vec![0.0; n];
            for i in 0..n {
                hy[i] = (0..n).map(|j| h[i * n + j] * yv[j]).sum();
            }
            let yhy = dot(&yv, &hy);
            let c = (sy + yhy) / (sy * sy);
            for i in 0..n {
                for j in 0..n {
                    h[i * n + j] += c * s[i] * s[j] - (hy[i] * s[j] + s[i] * hy[j]) / sy;
                }
            }
        }

        x.copy_from_slice(&x_new);
        g.copy_from_slice(&g_new);
        fx = f_new;

        if rel_change <= opts.obj_tol {
            return Ok(BfgsOutcome {
                x,
                value: fx,
                gradient: g,
                iterations,
                evaluations: evals,
                converged: true,
            });
        }
    }
}
