use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

/// Gauss–Legendre nodes and weights mapped to `(a, b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    interval: (f64, f64),
}

impl QuadratureRule {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Legendre `P_n(x)` and its derivative by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

/// `q`-point Gauss–Legendre rule on `(a, b)`; roots of `P_q` by Newton iteration.
pub fn gauss_legendre(q: usize, a: f64, b: f64) -> Result<QuadratureRule> {
    if q == 0 {
        return Err(Error::InvalidParameter { name: "quadrature order", value: 0.0 });
    }
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParameter { name: "quadrature interval width", value: b - a });
    }
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut nodes = alloc::vec![0.0; q];
    let mut weights = alloc::vec![0.0; q];
    if q == 1 {
        nodes[0] = mid;
        weights[0] = 2.0 * half;
        return Ok(QuadratureRule { nodes, weights, interval: (a, b) });
    }
    let qf = q as f64;
    for i in 0..(q + 1) / 2 {
        let mut x = libm::cos(PI * (i as f64 + 0.75) / (qf + 0.5));
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(q, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence { what: "gauss_legendre Newton iteration" });
        }
        let (_, dp) = legendre_with_derivative(q, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x runs from the right end inward
        nodes[q - 1 - i] = mid + half * x;
        nodes[i] = mid - half * x;
        weights[i] = half * w;
        weights[q - 1 - i] = half * w;
    }
    if q % 2 == 1 {
        nodes[q / 2] = mid;
    }
    Ok(QuadratureRule { nodes, weights, interval: (a, b) })
}
