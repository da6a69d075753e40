//! Derivative-free-gradient ascent: central finite differences feed a BFGS
//! direction, and a backtracking line search halves the step on rejection.

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalOptions {
    /// Stop once the finite-difference gradient norm drops below this.
    pub grad_tol: f64,
    /// Central-difference step.
    pub fd_step: f64,
    pub max_iter: usize,
    /// Longest trial step (Euclidean norm, radians for angle parameters).
    pub initial_step: f64,
    /// Give up on a direction once the trial step is shorter than this.
    pub min_step: f64,
}

impl Default for LocalOptions {
    fn default() -> Self {
        Self {
            grad_tol: 1e-6,
            fd_step: 1e-6,
            max_iter: 10_000,
            initial_step: 0.1,
            min_step: 1e-10,
        }
    }
}

impl LocalOptions {
    pub fn with_grad_tol(mut self, tol: f64) -> Self {
        self.grad_tol = tol;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocalOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    /// Whether the gradient criterion was met. False when the iteration cap
    /// was hit or the line search stalled.
    pub converged: bool,
    /// Objective value after every accepted step, starting with the initial value.
    pub trace: Vec<f64>,
}

/// Central-difference gradient of `f` at `x`.
pub fn central_gradient<F: Fn(&[f64]) -> f64>(f: &F, x: &[f64], step: f64) -> Vec<f64> {
    let mut probe = x.to_vec();
    (0..x.len())
        .map(|i| {
            probe[i] = x[i] + step;
            let up = f(&probe);
            probe[i] = x[i] - step;
            let down = f(&probe);
            probe[i] = x[i];
            (up - down) / (2.0 * step)
        })
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Inverse-Hessian approximation (of −f) kept as a dense symmetric matrix.
struct InverseHessian {
    n: usize,
    m: Vec<f64>,
    fresh: bool,
}

impl InverseHessian {
    fn identity(n: usize) -> Self {
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = 1.0;
        }
        Self { n, m, fresh: true }
    }

    fn reset(&mut self) {
        *self = Self::identity(self.n);
    }

    fn apply(&self, g: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| dot(&self.m[i * self.n..(i + 1) * self.n], g)).collect()
    }

    /// BFGS update with step `s` and gradient change `y` of the minimized function.
    fn update(&mut self, s: &[f64], y: &[f64]) {
        let sy = dot(s, y);
        if sy.is_nan() || sy <= 1e-14 * norm(s) * norm(y) {
            return;
        }
        let rho = 1.0 / sy;
        let hy = self.apply(y);
        let yhy = dot(y, &hy);
        let c = rho * rho * yhy + rho;
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                self.m[i * n + j] += -rho * (s[i] * hy[j] + hy[i] * s[j]) + c * s[i] * s[j];
            }
        }
        self.fresh = false;
    }
}

/// Maximize `f` from `x0`.
///
/// Every accepted step satisfies the Armijo condition, so `trace` is
/// non-decreasing and the returned value is never below the start value.
pub fn maximize<F: Fn(&[f64]) -> f64>(f: F, x0: &[f64], opts: &LocalOptions) -> LocalOutcome {
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut fx = f(&x);
    let mut g = central_gradient(&f, &x, opts.fd_step);
    let mut hinv = InverseHessian::identity(n);
    let mut trace = vec![fx];
    let mut converged = false;
    let mut iterations = 0;

    while iterations < opts.max_iter {
        if norm(&g) < opts.grad_tol {
            converged = true;
            break;
        }
        let mut d = hinv.apply(&g);
        if dot(&d, &g) <= 0.0 {
            hinv.reset();
            d = g.clone();
        }
        let slope = dot(&d, &g);
        let dn = norm(&d);
        let mut alpha = if dn > opts.initial_step { opts.initial_step / dn } else { 1.0 };

        let mut accepted = None;
        while alpha * dn >= opts.min_step {
            let xn: Vec<f64> = x.iter().zip(&d).map(|(xi, di)| xi + alpha * di).collect();
            let fxn = f(&xn);
            if fxn.is_finite() && fxn >= fx + 1e-4 * alpha * slope {
                accepted = Some((xn, fxn));
                break;
            }
            alpha *= 0.5;
        }

        iterations += 1;
        let Some((xn, fxn)) = accepted else {
            if hinv.fresh {
                break;
            }
            hinv.reset();
            continue;
        };
        let gn = central_gradient(&f, &xn, opts.fd_step);
        let s: Vec<f64> = xn.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = g.iter().zip(&gn).map(|(a, b)| a - b).collect();
        hinv.update(&s, &y);
        x = xn;
        fx = fxn;
        g = gn;
        trace.push(fx);
    }

    LocalOutcome { x, value: fx, iterations, converged, trace }
}
