use alloc::vec;
use alloc::vec::Vec;

use super::Polynomial;
use crate::{Error, Result};

fn check_order(nu: f64) -> Result<()> {
    if nu > 0.0 && nu.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what: "gegenbauer order", value: nu })
    }
}

/// Values `[C₀^(ν)(x), …, C_{n_max}^(ν)(x)]` by forward three-term recurrence
/// `n Cₙ = 2(n+ν−1) x Cₙ₋₁ − (n+2ν−2) Cₙ₋₂`.
pub fn gegenbauer_row(n_max: usize, nu: f64, x: f64) -> Result<Vec<f64>> {
    check_order(nu)?;
    if !(x.abs() <= 1.0) {
        return Err(Error::Domain { what: "gegenbauer argument", value: x });
    }
    let mut row = Vec::with_capacity(n_max + 1);
    row.push(1.0);
    if n_max >= 1 {
        row.push(2.0 * nu * x);
    }
    for n in 2..=n_max {
        let nf = n as f64;
        let next = (2.0 * (nf + nu - 1.0) * x * row[n - 1] - (nf + 2.0 * nu - 2.0) * row[n - 2]) / nf;
        row.push(next);
    }
    Ok(row)
}

/// Monomial coefficients of `Cₙ^(ν)`, built with the same recurrence on
/// polynomials.
pub fn gegenbauer_polynomial(n: usize, nu: f64) -> Result<Polynomial> {
    check_order(nu)?;
    let mut prev = vec![1.0];
    if n == 0 {
        return Ok(Polynomial::new(prev));
    }
    let mut cur = vec![0.0, 2.0 * nu];
    for m in 2..=n {
        let mf = m as f64;
        let a = 2.0 * (mf + nu - 1.0) / mf;
        let c = (mf + 2.0 * nu - 2.0) / mf;
        let mut next = vec![0.0; m + 1];
        for (j, &v) in cur.iter().enumerate() {
            next[j + 1] += a * v;
        }
        for (j, &v) in prev.iter().enumerate() {
            next[j] -= c * v;
        }
        prev = core::mem::replace(&mut cur, next);
    }
    Ok(Polynomial::new(cur))
}
