use alloc::vec::Vec;

use crate::algebra::ModelParams;
use crate::{Error, Result};

/// Three-point finite-difference Hamiltonian on `M` interior points of the
/// box, Dirichlet walls. Symmetric tridiagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct GridOperator {
    points: Vec<f64>,
    diagonal: Vec<f64>,
    off_diagonal: f64,
}

impl GridOperator {
    pub fn hamiltonian(params: &ModelParams, m: usize) -> Result<Self> {
        if m < 200 {
            return Err(Error::InvalidParameter { name: "grid points", value: m as f64 });
        }
        let (a, b) = params.interval();
        let h = (b - a) / (m as f64 + 1.0);
        let kinetic = params.hbar() * params.hbar() / (2.0 * params.mass() * h * h);
        let points: Vec<f64> = (1..=m).map(|i| a + i as f64 * h).collect();
        let diagonal = points.iter().map(|&x| 2.0 * kinetic + params.potential(x)).collect();
        Ok(Self { points, diagonal, off_diagonal: -kinetic })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> f64 {
        self.off_diagonal
    }

    /// Number of eigenvalues strictly below `lambda` (Sturm sequence count).
    pub fn count_below(&self, lambda: f64) -> usize {
        let e2 = self.off_diagonal * self.off_diagonal;
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diagonal.iter().enumerate() {
            q = if i == 0 { d - lambda } else { d - lambda - e2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (d.abs() + self.off_diagonal.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The lowest `n_levels` eigenvalues, ascending, by bisection.
    pub fn lowest_eigenvalues(&self, n_levels: usize) -> Result<Vec<f64>> {
        if n_levels > self.diagonal.len() {
            return Err(Error::InvalidParameter { name: "levels", value: n_levels as f64 });
        }
        let spread = 2.0 * self.off_diagonal.abs();
        let lo0 = self.diagonal.iter().fold(f64::INFINITY, |m, &d| m.min(d - spread));
        let hi0 = self.diagonal.iter().fold(f64::NEG_INFINITY, |m, &d| m.max(d + spread));
        let mut out = Vec::with_capacity(n_levels);
        for level in 0..n_levels {
            let (mut lo, mut hi) = (out.last().copied().unwrap_or(lo0), hi0);
            let mut converged = false;
            for _ in 0..400 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    converged = true;
                    break;
                }
                if self.count_below(mid) > level {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            if !converged {
                return Err(Error::NoConvergence { what: "grid eigenvalue bisection" });
            }
            out.push(0.5 * (lo + hi));
        }
        Ok(out)
    }
}

/// Lowest `n_levels` finite-difference eigenvalues on `m` interior points.
pub fn grid_spectrum(params: &ModelParams, m: usize, n_levels: usize) -> Result<Vec<f64>> {
    GridOperator::hamiltonian(params, m)?.lowest_eigenvalues(n_levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b
    }

    #[test]
    fn square_well() {
        let p = ModelParams::with_nu(1.0).unwrap();
        let ev = grid_spectrum(&p, 2000, 4).unwrap();
        for (n, e) in ev.iter().enumerate() {
            let exact = ((n + 1) * (n + 1)) as f64;
            assert!(rel(*e, exact) < 1e-5, "n={n} {e}");
        }
    }

    #[test]
    fn poschl_teller_levels() {
        let p = ModelParams::with_nu(2.0).unwrap();
        let ev = grid_spectrum(&p, 2000, 4).unwrap();
        for (n, e) in ev.iter().enumerate() {
            assert!(rel(*e, p.energy(n)) < 1e-4, "n={n} {e}");
        }
        assert!(ev.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn second_order_convergence() {
        let p = ModelParams::with_nu(2.0).unwrap();
        let e1 = grid_spectrum(&p, 1000, 1).unwrap()[0] - p.energy(0);
        let e2 = grid_spectrum(&p, 2000, 1).unwrap()[0] - p.energy(0);
        let ratio = e1 / e2;
        assert!((ratio - 4.0).abs() < 0.4, "ratio {ratio}");
    }

    #[test]
    fn matrix_is_symmetric_with_sorted_spectrum() {
        let p = ModelParams::new(1.0, 1.0, 2.0, 3.0).unwrap();
        let g = GridOperator::hamiltonian(&p, 300).unwrap();
        assert_eq!(g.points().len(), 300);
        assert!(g.off_diagonal() < 0.0);
        let ev = g.lowest_eigenvalues(10).unwrap();
        assert!(ev.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(g.count_below(ev[3] + 1e-6 * ev[3]), 4);
    }

    #[test]
    fn rejects_small_grids() {
        let p = ModelParams::with_nu(2.0).unwrap();
        assert!(grid_spectrum(&p, 100, 2).is_err());
        assert!(grid_spectrum(&p, 200, 201).is_err());
    }
}
