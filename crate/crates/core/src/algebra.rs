//! Closed-form spectral and algebraic quantities of the Pöschl–Teller model.
//!
//! Sign convention: [`ModelParams::f_of`] returns `f` itself, so that
//! `[b, b⁺] = −f(H)`. On eigenstates `√(H/ε)` takes the value `n + ν`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{Error, Result};

/// `ν(ν−1) / d` for the denominators that occur in `f` and in the `αₙ`
/// recursion. They vanish only when `d` is itself `ν(ν−1)` at `ν = 1` (ground
/// state), so `0/0` is the ratio's limit `1`.
fn strength_over(strength: f64, d: f64, what: &'static str) -> Result<f64> {
    if d != 0.0 {
        Ok(strength / d)
    } else if strength == 0.0 {
        Ok(1.0)
    } else {
        Err(Error::Singular { what, value: d })
    }
}

/// `ν = (1 + √(1 + 4V₀/ε)) / 2`, the root that keeps the wavefunctions zero at
/// the walls.
pub fn nu_from_v0(epsilon: f64, v0: f64) -> Result<f64> {
    if !(epsilon > 0.0) {
        return Err(Error::InvalidParameter { name: "epsilon", value: epsilon });
    }
    if !(v0 >= 0.0) || !v0.is_finite() {
        return Err(Error::Domain { what: "nu_from_v0", value: v0 });
    }
    Ok(0.5 * (1.0 + libm::sqrt(1.0 + 4.0 * v0 / epsilon)))
}

/// Physical constants and potential strength.
///
/// Everything else (`ε`, `V₀`, `L`, `γ`) is derived on demand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    hbar: f64,
    mass: f64,
    k: f64,
    nu: f64,
}

impl ModelParams {
    pub fn new(hbar: f64, mass: f64, k: f64, nu: f64) -> Result<Self> {
        for (name, value) in [("hbar", hbar), ("mass", mass), ("k", k)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::InvalidParameter { name, value });
            }
        }
        if !(nu >= 1.0) || !nu.is_finite() {
            return Err(Error::InvalidParameter { name: "nu", value: nu });
        }
        Ok(Self { hbar, mass, k, nu })
    }

    /// Units `ħ = k = 1`, `m = 1/2`, so that `ε = 1`.
    pub fn with_nu(nu: f64) -> Result<Self> {
        Self::new(1.0, 0.5, 1.0, nu)
    }

    pub fn from_v0(hbar: f64, mass: f64, k: f64, v0: f64) -> Result<Self> {
        let epsilon = hbar * hbar * k * k / (2.0 * mass);
        let nu = nu_from_v0(epsilon, v0)?;
        Self::new(hbar, mass, k, nu)
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// `ε = ħ²k²/2m`.
    pub fn epsilon(&self) -> f64 {
        self.hbar * self.hbar * self.k * self.k / (2.0 * self.mass)
    }

    /// `ν(ν−1)`.
    pub fn strength(&self) -> f64 {
        self.nu * (self.nu - 1.0)
    }

    /// `V₀ = ε ν(ν−1)`.
    pub fn v0(&self) -> f64 {
        self.epsilon() * self.strength()
    }

    /// Well width `L = π/k`.
    pub fn width(&self) -> f64 {
        PI / self.k
    }

    /// Box `(−π/2k, π/2k)`.
    pub fn interval(&self) -> (f64, f64) {
        let h = 0.5 * self.width();
        (-h, h)
    }

    /// `γ = 1/(2ε)`.
    pub fn gamma(&self) -> f64 {
        0.5 / self.epsilon()
    }

    pub fn potential(&self, x: f64) -> f64 {
        let c = libm::cos(self.k * x);
        self.v0() / (c * c)
    }

    /// `Eₙ = ε (n + ν)²`.
    pub fn energy(&self, n: usize) -> f64 {
        let s = n as f64 + self.nu;
        self.epsilon() * s * s
    }

    pub fn spectral_point(&self, n: usize) -> SpectralPoint {
        SpectralPoint { n, energy: self.energy(n), sqrt_h: n as f64 + self.nu }
    }

    fn sqrt_h_over_eps(&self, e: f64) -> Result<f64> {
        if !(e > 0.0) || !e.is_finite() {
            return Err(Error::Domain { what: "energy", value: e });
        }
        Ok(libm::sqrt(e / self.epsilon()))
    }

    /// `g(E) = −ε + 2√(εE)`.
    pub fn g_of(&self, e: f64) -> Result<f64> {
        self.sqrt_h_over_eps(e)?;
        let eps = self.epsilon();
        Ok(-eps + 2.0 * libm::sqrt(eps * e))
    }

    /// `f(E)` with `−f = 1 + 2s + ν(ν−1)/(s(s−1))`, `s = √(E/ε)`.
    pub fn f_of(&self, e: f64) -> Result<f64> {
        let s = self.sqrt_h_over_eps(e)?;
        let extra = strength_over(self.strength(), s * (s - 1.0), "f_of")?;
        Ok(-(1.0 + 2.0 * s + extra))
    }

    /// The deforming function with the `ν(ν−1)` term dropped, `−(1 + 2s)`.
    /// Only exact for the square well.
    pub fn f_uncorrected_of(&self, e: f64) -> Result<f64> {
        let s = self.sqrt_h_over_eps(e)?;
        Ok(-(1.0 + 2.0 * s))
    }

    /// `h(E) = −(1 + s)² + ν(ν−1)/s`, solving `h(E) − h(E − g(E)) = f(E)`.
    pub fn h_of(&self, e: f64) -> Result<f64> {
        let s = self.sqrt_h_over_eps(e)?;
        let extra = strength_over(self.strength(), s, "h_of")?;
        Ok(-(1.0 + s) * (1.0 + s) + extra)
    }

    /// `f(Eₙ)`; never singular on the spectrum.
    pub fn f_at_level(&self, n: usize) -> f64 {
        let s = n as f64 + self.nu;
        // ν(ν−1)/((n+ν)(n+ν−1)) is exactly 1 on the ground state
        let extra = if n == 0 { 1.0 } else { self.strength() / (s * (s - 1.0)) };
        -(1.0 + 2.0 * s + extra)
    }

    pub fn g_at_level(&self, n: usize) -> f64 {
        let eps = self.epsilon();
        eps * (2.0 * (n as f64 + self.nu) - 1.0)
    }

    pub fn h_at_level(&self, n: usize) -> f64 {
        let s = n as f64 + self.nu;
        -(1.0 + s) * (1.0 + s) + self.strength() / s
    }

    /// Ladder coefficient `αₙ = √(n(n+ν)(n+2ν−1)/(n+ν−1))`, with `α₀ = 0`.
    pub fn alpha(&self, n: usize) -> f64 {
        if n == 0 {
            return 0.0;
        }
        let (nf, nu) = (n as f64, self.nu);
        libm::sqrt(nf * (nf + nu) * (nf + 2.0 * nu - 1.0) / (nf + nu - 1.0))
    }

    /// `[|α₀|, …, |α_{n_max}|]` from `|αₙ|² − |αₙ₋₁|² = 2n + 2ν − 1 + ν(ν−1)/((n+ν−1)(n+ν−2))`.
    pub fn alpha_by_recursion(&self, n_max: usize) -> Result<Vec<f64>> {
        let nu = self.nu;
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(0.0);
        let mut sq = 0.0;
        for n in 1..=n_max {
            let nf = n as f64;
            let extra = strength_over(
                self.strength(),
                (nf + nu - 1.0) * (nf + nu - 2.0),
                "alpha_by_recursion",
            )?;
            sq += 2.0 * nf + 2.0 * nu - 1.0 + extra;
            out.push(libm::sqrt(sq));
        }
        Ok(out)
    }

    /// Casimir eigenvalue `−ν(ν−1)` shared by every bound state.
    pub fn casimir_eigenvalue(&self) -> f64 {
        -self.strength()
    }

    /// su(1,1) data at level `n`: `J₀` eigenvalue `n + ν` and the coefficient
    /// `c` in `J₊|ψₙ⟩ = c|ψₙ₊₁⟩`, equal to `√((n+1)(n+2ν))`.
    pub fn su11_matrix_elements(&self, n: usize) -> (f64, f64) {
        let j0 = n as f64 + self.nu;
        (j0, self.alpha(n + 1) * libm::sqrt(j0 / (j0 + 1.0)))
    }
}

/// Energy level together with the eigenvalue of `√(H/ε)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    pub n: usize,
    pub energy: f64,
    pub sqrt_h: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const NUS: [f64; 4] = [1.0, 1.5, 2.0, 3.7];

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn nu_from_strength() {
        assert_eq!(nu_from_v0(1.0, 0.0).unwrap(), 1.0);
        assert!((nu_from_v0(1.0, 2.0).unwrap() - 2.0).abs() < 1e-15);
        assert!((nu_from_v0(0.5, 3.0).unwrap() - 3.0).abs() < 1e-15);
        assert!(nu_from_v0(1.0, -0.1).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(ModelParams::with_nu(0.99).is_err());
        assert!(ModelParams::new(0.0, 1.0, 1.0, 2.0).is_err());
        assert!(ModelParams::new(1.0, -1.0, 1.0, 2.0).is_err());
        let p = ModelParams::with_nu(1.0).unwrap();
        assert_eq!(p.v0(), 0.0);
        assert_eq!(p.epsilon(), 1.0);
        assert_eq!(p.gamma(), 0.5);
        assert!((p.width() - PI).abs() < 1e-15);
        let p = ModelParams::from_v0(2.0, 3.0, 0.7, 5.0).unwrap();
        assert!((p.v0() - 5.0).abs() < 1e-13);
        assert!(p.v0() > 0.0);
    }

    #[test]
    fn energies() {
        assert_eq!(ModelParams::with_nu(1.0).unwrap().energy(0), 1.0);
        assert_eq!(ModelParams::with_nu(2.0).unwrap().energy(3), 25.0);
        // ε = 1/2 with ħ = k = 1, m = 1
        let p = ModelParams::new(1.0, 1.0, 1.0, 2.5).unwrap();
        assert!((p.energy(0) - 3.125).abs() < 1e-15);
        let sp = p.spectral_point(2);
        assert_eq!(sp.sqrt_h, 4.5);
        assert_eq!(sp.energy, p.energy(2));
    }

    #[test]
    fn deforming_function_examples() {
        let p1 = ModelParams::with_nu(1.0).unwrap();
        for &e in &[0.3, 2.0, 4.0, 17.0] {
            let s = libm::sqrt(e);
            assert_eq!(p1.f_of(e).unwrap(), -(1.0 + 2.0 * s));
        }
        // ground state of the square well: the extra term keeps its limit 1
        assert_eq!(p1.f_of(1.0).unwrap(), -4.0);
        for &nu in &[1.0 + 1e-9, 1.001, 1.5] {
            let p = ModelParams::with_nu(nu).unwrap();
            assert!((p.f_of(p.energy(0)).unwrap() + 2.0 + 2.0 * nu).abs() < 1e-6);
        }
        let p2 = ModelParams::with_nu(2.0).unwrap();
        assert!((p2.f_of(4.0).unwrap() + 6.0).abs() < 1e-14);
        assert!((p2.h_of(4.0).unwrap() + 8.0).abs() < 1e-14);
        assert!((p2.g_of(4.0).unwrap() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn deforming_function_errors() {
        let p2 = ModelParams::with_nu(2.0).unwrap();
        assert!(matches!(p2.f_of(1.0), Err(Error::Singular { .. })));
        assert!(matches!(p2.f_of(0.0), Err(Error::Domain { .. })));
        assert!(p2.h_of(-1.0).is_err());
        assert!(p2.g_of(0.0).is_err());
        // square well: the extra term never fires
        assert!(ModelParams::with_nu(1.0).unwrap().f_of(1.0).is_ok());
    }

    #[test]
    fn level_shortcuts_match_general_forms() {
        for &nu in &NUS {
            let p = ModelParams::new(1.3, 0.8, 2.1, nu).unwrap();
            for n in 0..30 {
                let e = p.energy(n);
                assert!(rel(p.f_at_level(n), p.f_of(e).unwrap()) < 1e-13);
                assert!(rel(p.g_at_level(n), p.g_of(e).unwrap()) < 1e-13);
                assert!(rel(p.h_at_level(n), p.h_of(e).unwrap()) < 1e-13);
            }
        }
    }

    #[test]
    fn alpha_examples() {
        let p2 = ModelParams::with_nu(2.0).unwrap();
        assert_eq!(p2.alpha(0), 0.0);
        assert!((p2.alpha(1) - libm::sqrt(6.0)).abs() < 1e-15);
        let r = p2.alpha_by_recursion(2).unwrap();
        assert_eq!(r[0], 0.0);
        assert!((r[1] - 2.449_489_742_783_178).abs() < 1e-14);
        assert!((r[2] - libm::sqrt(40.0 / 3.0)).abs() < 1e-14);
        let p3 = ModelParams::with_nu(3.0).unwrap();
        assert!((p3.alpha_by_recursion(1).unwrap()[1] - libm::sqrt(8.0)).abs() < 1e-14);
        assert_eq!(p2.alpha_by_recursion(0).unwrap(), alloc::vec![0.0]);
        let p1 = ModelParams::with_nu(1.0).unwrap();
        let r1 = p1.alpha_by_recursion(30).unwrap();
        for n in 1..=30 {
            assert!(rel(p1.alpha(n), n as f64 + 1.0) < 1e-14);
            assert!(rel(r1[n], n as f64 + 1.0) < 1e-13);
        }
    }

    #[test]
    fn casimir_values() {
        assert_eq!(ModelParams::with_nu(1.0).unwrap().casimir_eigenvalue(), 0.0);
        assert_eq!(ModelParams::with_nu(2.0).unwrap().casimir_eigenvalue(), -2.0);
        assert_eq!(ModelParams::with_nu(2.5).unwrap().casimir_eigenvalue(), -3.75);
    }

    #[test]
    fn su11_examples() {
        let p2 = ModelParams::with_nu(2.0).unwrap();
        let (j0, c) = p2.su11_matrix_elements(0);
        assert_eq!(j0, 2.0);
        assert!((c - 2.0).abs() < 1e-14);
        let p1 = ModelParams::with_nu(1.0).unwrap();
        for n in 0..20 {
            let (_, c) = p1.su11_matrix_elements(n);
            let nf = n as f64;
            assert!(rel(c, libm::sqrt((nf + 1.0) * (nf + 2.0))) < 1e-14);
        }
    }

    #[test]
    fn uncorrected_commutator_fails_off_the_square_well() {
        let worst = |nu: f64| {
            let p = ModelParams::with_nu(nu).unwrap();
            (0..=20)
                .map(|n| {
                    let a = p.alpha(n + 1);
                    let b = p.alpha(n);
                    (a * a - b * b - (1.0 + 2.0 * (n as f64 + nu))).abs()
                })
                .fold(0.0f64, f64::max)
        };
        // the extra term ν(ν−1)/((n+ν)(n+ν−1)) is 1 at n = 0 for every ν ≥ 1
        assert!((worst(2.0) - 1.0).abs() < 1e-12);
        assert!(worst(2.0) > 0.3);
        assert!((worst(1.0) - 1.0).abs() < 1e-12);
        // for the square well it survives on the ground state only
        let p1 = ModelParams::with_nu(1.0).unwrap();
        for n in 1..=20 {
            let (a, b) = (p1.alpha(n + 1), p1.alpha(n));
            assert!((a * a - b * b - (1.0 + 2.0 * (n as f64 + 1.0))).abs() < 1e-12);
        }
    }

    fn nu_strategy() -> impl Strategy<Value = f64> {
        prop_oneof![Just(1.0), Just(1.5), Just(2.0), Just(3.7), 1.0f64..12.0]
    }

    proptest! {
        #[test]
        fn v0_round_trip(nu in 1.0f64..50.0, hbar in 0.1f64..3.0, mass in 0.1f64..3.0, k in 0.1f64..3.0) {
            let p = ModelParams::new(hbar, mass, k, nu).unwrap();
            let back = nu_from_v0(p.epsilon(), p.v0()).unwrap();
            prop_assert!(rel(back, nu) < 1e-13);
        }

        #[test]
        fn grading(nu in nu_strategy(), n in 1usize..60) {
            let p = ModelParams::new(1.1, 0.7, 1.9, nu).unwrap();
            let e = p.energy(n);
            prop_assert!(rel(e - p.g_of(e).unwrap(), p.energy(n - 1)) < 1e-12);
            let (a, b) = (p.spectral_point(n).sqrt_h, p.spectral_point(n - 1).sqrt_h);
            prop_assert!(a > b && b > 0.0);
        }

        #[test]
        fn corrected_commutator_diagonal(nu in nu_strategy(), n in 0usize..=50) {
            let p = ModelParams::with_nu(nu).unwrap();
            let lhs = p.alpha(n + 1).powi(2) - p.alpha(n).powi(2);
            let rhs = -p.f_of(p.energy(n)).unwrap();
            prop_assert!(rel(lhs, rhs) < 1e-11);
        }

        #[test]
        fn h_difference_equation(nu in nu_strategy(), n in 1usize..=50) {
            let p = ModelParams::with_nu(nu).unwrap();
            let lhs = p.h_of(p.energy(n)).unwrap() - p.h_of(p.energy(n - 1)).unwrap();
            let rhs = p.f_of(p.energy(n)).unwrap();
            prop_assert!((lhs - rhs).abs() < 1e-11 * rhs.abs());
        }

        #[test]
        fn casimir_consistency(nu in nu_strategy(), n in 0usize..=50) {
            let p = ModelParams::with_nu(nu).unwrap();
            let c = p.alpha(n + 1).powi(2) + p.h_of(p.energy(n)).unwrap();
            prop_assert!((c - p.casimir_eigenvalue()).abs() < 1e-11 * (1.0 + p.energy(n) / p.epsilon()));
        }

        #[test]
        fn recursion_matches_closed_form(nu in nu_strategy()) {
            let p = ModelParams::with_nu(nu).unwrap();
            let r = p.alpha_by_recursion(50).unwrap();
            for (n, a) in r.iter().enumerate().skip(1) {
                prop_assert!(rel(*a, p.alpha(n)) < 1e-12);
            }
        }

        #[test]
        fn su11_closure(nu in nu_strategy(), n in 1usize..=50) {
            let p = ModelParams::with_nu(nu).unwrap();
            let (j0, c) = p.su11_matrix_elements(n);
            let (_, c_prev) = p.su11_matrix_elements(n - 1);
            prop_assert!((c * c - c_prev * c_prev - 2.0 * j0).abs() < 1e-12 * j0 * j0);
            prop_assert!((c * c - j0 * (j0 + 1.0) + p.strength()).abs() < 1e-12 * j0 * j0);
        }

        #[test]
        fn extended_algebra_diagonal(nu in nu_strategy(), n in 0usize..=50) {
            let p = ModelParams::with_nu(nu).unwrap();
            let s = n as f64 + nu;
            let lhs = s * p.alpha(n + 1).powi(2) - (s - 1.0) * p.alpha(n).powi(2);
            let rhs = -p.strength() + s * (1.0 + 3.0 * s);
            prop_assert!(rel(lhs, rhs) < 1e-12);
        }
    }
}
