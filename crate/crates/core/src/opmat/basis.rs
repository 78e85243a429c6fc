use alloc::vec::Vec;

use num_complex::Complex64;

use super::OperatorMatrix;
use crate::algebra::ModelParams;
use crate::specfun::{gegenbauer_row, QuadratureRule};
use crate::wavefun::norm_n;
use crate::{Error, Result};

/// Largest tolerated `|P − P†|` before the rule is declared too coarse.
pub const P_HERMITICITY_LIMIT: f64 = 1e-8;

/// `ψₙ(xᵢ)` and `dψₙ/dx(xᵢ)` at every quadrature node, from the Gegenbauer
/// recurrence (`C′ₙ^(ν) = 2ν Cₙ₋₁^(ν+1)`).
struct BasisTable {
    weights: Vec<f64>,
    sin: Vec<f64>,
    cos: Vec<f64>,
    values: Vec<Vec<f64>>,
    derivs: Vec<Vec<f64>>,
}

impl BasisTable {
    fn new(params: &ModelParams, size: usize, rule: &QuadratureRule) -> Result<Self> {
        let expected = params.interval();
        let found = rule.interval();
        let tol = 1e-12 * (expected.1 - expected.0);
        if (found.0 - expected.0).abs() > tol || (found.1 - expected.1).abs() > tol {
            return Err(Error::BoxMismatch { expected, found });
        }
        let nu = params.nu();
        let k = params.k();
        let norms = (0..size).map(|n| norm_n(params, n)).collect::<Result<Vec<_>>>()?;
        let mut table = Self {
            weights: rule.weights().to_vec(),
            sin: Vec::with_capacity(rule.order()),
            cos: Vec::with_capacity(rule.order()),
            values: Vec::with_capacity(rule.order()),
            derivs: Vec::with_capacity(rule.order()),
        };
        for &x in rule.nodes() {
            let (s, c) = (libm::sin(k * x), libm::cos(k * x));
            let row = gegenbauer_row(size - 1, nu, s)?;
            let shifted = gegenbauer_row(size.saturating_sub(2), nu + 1.0, s)?;
            let (cn, cn1) = (libm::pow(c, nu), libm::pow(c, nu - 1.0));
            let mut vals = Vec::with_capacity(size);
            let mut ders = Vec::with_capacity(size);
            for n in 0..size {
                let dc = if n == 0 { 0.0 } else { 2.0 * nu * shifted[n - 1] };
                vals.push(norms[n] * cn * row[n]);
                ders.push(norms[n] * k * cn1 * (-nu * s * row[n] + c * c * dc));
            }
            table.sin.push(s);
            table.cos.push(c);
            table.values.push(vals);
            table.derivs.push(ders);
        }
        Ok(table)
    }

    fn matrix<F>(&self, size: usize, mut integrand: F) -> Vec<f64>
    where
        F: FnMut(usize, usize, usize) -> f64,
    {
        let mut out = alloc::vec![0.0; size * size];
        for q in 0..self.weights.len() {
            let w = self.weights[q];
            for m in 0..size {
                for n in 0..size {
                    out[m * size + n] += w * integrand(q, m, n);
                }
            }
        }
        out
    }
}

fn check_size(size: usize) -> Result<()> {
    if size >= 2 {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name: "basis size", value: size as f64 })
    }
}

/// `Xₘₙ = ⟨ψₘ| sin(kx) |ψₙ⟩`.
pub fn build_x(params: &ModelParams, size: usize, rule: &QuadratureRule) -> Result<OperatorMatrix> {
    check_size(size)?;
    let t = BasisTable::new(params, size, rule)?;
    let data = t.matrix(size, |q, m, n| t.values[q][m] * t.sin[q] * t.values[q][n]);
    Ok(OperatorMatrix::from_fn("X", size, 1, |i, j| Complex64::new(data[i * size + j], 0.0)))
}

/// `Pₘₙ = ⟨ψₘ| k cos(kx)(−iħ d/dx) + (iħk²/2) sin(kx) |ψₙ⟩`, derivatives taken
/// analytically.
///
/// Fails with [`Error::QuadratureTooLow`] when the result is not Hermitian to
/// [`P_HERMITICITY_LIMIT`].
pub fn build_p(params: &ModelParams, size: usize, rule: &QuadratureRule) -> Result<OperatorMatrix> {
    check_size(size)?;
    let t = BasisTable::new(params, size, rule)?;
    let k = params.k();
    let data = t.matrix(size, |q, m, n| {
        t.values[q][m] * (t.cos[q] * t.derivs[q][n] - 0.5 * k * t.sin[q] * t.values[q][n])
    });
    let factor = -params.hbar() * k;
    let p = OperatorMatrix::from_fn("P", size, 1, |i, j| Complex64::new(0.0, factor * data[i * size + j]));
    let residual = p.hermiticity_residual(0);
    if !(residual <= P_HERMITICITY_LIMIT) {
        return Err(Error::QuadratureTooLow { order: rule.order(), residual });
    }
    Ok(p)
}

/// Overlap matrix `⟨ψₘ|ψₙ⟩` of the quadrature basis.
pub fn build_gram(params: &ModelParams, size: usize, rule: &QuadratureRule) -> Result<OperatorMatrix> {
    let t = BasisTable::new(params, size.max(1), rule)?;
    let data = t.matrix(size, |q, m, n| t.values[q][m] * t.values[q][n]);
    Ok(OperatorMatrix::from_fn("gram", size, 0, |i, j| Complex64::new(data[i * size + j], 0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gauss_legendre;

    fn rule(p: &ModelParams, q: usize) -> QuadratureRule {
        let (a, b) = p.interval();
        gauss_legendre(q, a, b).unwrap()
    }

    #[test]
    fn position_matrix_structure() {
        for &nu in &[1.0, 2.0, 3.7] {
            let p = ModelParams::new(1.0, 0.5, 1.3, nu).unwrap();
            let x = build_x(&p, 12, &rule(&p, 90)).unwrap();
            for i in 0..12 {
                assert!(x.get(i, i).norm() < 1e-13);
                for j in 0..12 {
                    assert_eq!(x.get(i, j).im, 0.0);
                    assert!((x.get(i, j) - x.get(j, i)).norm() < 1e-13);
                    if i.abs_diff(j) > 1 {
                        assert!(x.get(i, j).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn position_matrix_matches_recurrence_coefficient() {
        // X Cₙ = [(n+1) Cₙ₊₁ + (n+2ν−1) Cₙ₋₁] / (2(n+ν)), so
        // ⟨ψₙ₊₁|X|ψₙ⟩ = (n+1)/(2(n+ν)) · Nₙ/Nₙ₊₁
        let p = ModelParams::with_nu(2.0).unwrap();
        let x = build_x(&p, 10, &rule(&p, 80)).unwrap();
        for n in 0..9 {
            let nf = n as f64;
            let want = (nf + 1.0) / (2.0 * (nf + 2.0)) * norm_n(&p, n).unwrap() / norm_n(&p, n + 1).unwrap();
            assert!((x.get(n + 1, n).re - want).abs() < 1e-13, "n={n}");
        }
    }

    #[test]
    fn momentum_is_imaginary_bidiagonal() {
        let p = ModelParams::new(0.7, 1.1, 0.9, 2.6).unwrap();
        let m = build_p(&p, 10, &rule(&p, 80)).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                assert_eq!(m.get(i, j).re, 0.0);
                if i.abs_diff(j) != 1 {
                    assert!(m.get(i, j).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn coarse_rule_is_rejected() {
        let p = ModelParams::with_nu(2.0).unwrap();
        assert!(matches!(build_p(&p, 30, &rule(&p, 8)), Err(Error::QuadratureTooLow { .. })));
    }

    #[test]
    fn errors() {
        let p = ModelParams::with_nu(2.0).unwrap();
        assert!(build_x(&p, 1, &rule(&p, 20)).is_err());
        let wrong = gauss_legendre(20, -1.0, 1.0).unwrap();
        assert!(matches!(build_x(&p, 5, &wrong), Err(Error::BoxMismatch { .. })));
    }

    #[test]
    fn gram_is_identity() {
        for &nu in &[1.0, 1.5, 2.0, 3.7] {
            let p = ModelParams::with_nu(nu).unwrap();
            let g = build_gram(&p, 31, &rule(&p, 122)).unwrap();
            let r = g.sub(&OperatorMatrix::identity(31)).unwrap();
            assert!(r.max_abs_trusted(0) < 1e-12, "nu={nu} {}", r.max_abs_trusted(0));
        }
    }
}
