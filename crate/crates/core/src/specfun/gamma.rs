use core::f64::consts::PI;

use crate::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural logarithm of Γ(z) for real `z > 0`.
///
/// Lanczos approximation with `g = 7` and nine coefficients; arguments below
/// one half go through the reflection formula.
pub fn log_gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain { what: "log_gamma", value: z });
    }
    if z < 0.5 {
        // Γ(z) Γ(1−z) = π / sin(πz), with sin(πz) > 0 on (0, 1/2)
        return Ok(libm::log(PI / libm::sin(PI * z)) - lanczos(1.0 - z));
    }
    Ok(lanczos(z))
}

fn lanczos(z: f64) -> f64 {
    let z = z - 1.0;
    let mut sum = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * libm::log(2.0 * PI) + (z + 0.5) * libm::log(t) - t + libm::log(sum)
}
