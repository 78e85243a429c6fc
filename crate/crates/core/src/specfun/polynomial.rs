use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Real polynomial in `X`; `coeffs[j]` multiplies `X^j`.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient vector and no degree.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> f64 {
        self.coeffs.last().copied().unwrap_or(0.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, &c)| j as f64 * c)
                .collect(),
        )
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// True when every nonzero coefficient sits on a power of the given parity.
    pub fn has_parity(&self, odd: bool) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(j, &c)| c == 0.0 || (j % 2 == 1) == odd)
    }
}

/// Applies `(X² − 1) d/dX + (n + 2ν) X` to `φ`, which must have degree `n`.
///
/// The image has degree `n + 1` and leading coefficient `(2n + 2ν)·lead(φ)`.
pub fn poly_ladder_step(phi: &Polynomial, n: usize, nu: f64) -> Result<Polynomial> {
    if phi.degree() != Some(n) {
        return Err(Error::DegreeMismatch { expected: n, found: phi.degree() });
    }
    let c = phi.coeffs();
    let shift = n as f64 + 2.0 * nu;
    let mut out = vec![0.0; n + 2];
    for (j, &a) in c.iter().enumerate() {
        let jf = j as f64;
        // X² d/dX X^j = j X^(j+1);  −d/dX X^j = −j X^(j−1);  X·X^j = X^(j+1)
        out[j + 1] += (jf + shift) * a;
        if j >= 1 {
            out[j - 1] -= jf * a;
        }
    }
    Ok(Polynomial::new(out))
}
