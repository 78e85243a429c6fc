use core::f64::consts::PI;

use super::{gegenbauer_row, log_gamma};
use crate::{Error, Result};

/// Ferrers function `P^μ_λ(x)` on the lattice `λ = n + ν − 1/2`, `μ = 1/2 − ν`
/// with `n` a nonnegative integer and `ν > 1/2`, via the Gegenbauer connection
///
/// ```text
/// P^(1/2−ν)_(n+ν−1/2)(x) = 2^(ν−1/2) Γ(ν) n! / (√π Γ(n+2ν)) · (1−x²)^(ν/2−1/4) Cₙ^(ν)(x)
/// ```
pub fn assoc_legendre(lambda: f64, mu: f64, x: f64) -> Result<f64> {
    let nu = 0.5 - mu;
    if !(nu > 0.5) {
        return Err(Error::Domain { what: "assoc_legendre order", value: mu });
    }
    if !(x.abs() < 1.0) {
        return Err(Error::Domain { what: "assoc_legendre argument", value: x });
    }
    let n_real = lambda + mu;
    let n = libm::round(n_real);
    if n < 0.0 || (n_real - n).abs() > 1e-9 * (1.0 + n.abs()) {
        return Err(Error::Domain { what: "assoc_legendre degree", value: lambda });
    }
    let n = n as usize;
    let log_const = (nu - 0.5) * core::f64::consts::LN_2 + log_gamma(nu)? + log_gamma(n as f64 + 1.0)?
        - 0.5 * libm::log(PI)
        - log_gamma(n as f64 + 2.0 * nu)?;
    let c = gegenbauer_row(n, nu, x)?[n];
    Ok(libm::exp(log_const) * libm::pow(1.0 - x * x, 0.5 * nu - 0.25) * c)
}
