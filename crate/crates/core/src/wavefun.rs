//! Normalized bound states `ψₙ(x) = cos^ν(kx) φₙ(sin kx)` with
//! `φₙ = Nₙ Cₙ^(ν)`, built either from the closed form or by repeated
//! application of the raising operator to the ground state.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::algebra::ModelParams;
use crate::specfun::{assoc_legendre, gegenbauer_polynomial, gegenbauer_row, log_gamma, poly_ladder_step, Polynomial, QuadratureRule};
use crate::{Error, Result};

fn check_integrable(params: &ModelParams) -> Result<()> {
    if params.nu() > 0.5 {
        Ok(())
    } else {
        Err(Error::Domain { what: "normalization order", value: params.nu() })
    }
}

/// Ground-state normalization `N₀ = [k Γ(ν+1) / (√π Γ(ν+1/2))]^(1/2)`.
pub fn norm0(params: &ModelParams) -> Result<f64> {
    check_integrable(params)?;
    let nu = params.nu();
    let log = libm::log(params.k()) + log_gamma(nu + 1.0)? - 0.5 * libm::log(PI) - log_gamma(nu + 0.5)?;
    Ok(libm::exp(0.5 * log))
}

/// `Nₙ = N₀ [n! (n+ν) Γ(2ν) / (ν Γ(n+2ν))]^(1/2)`, evaluated in log space.
pub fn norm_n(params: &ModelParams, n: usize) -> Result<f64> {
    let n0 = norm0(params)?;
    let nu = params.nu();
    let nf = n as f64;
    let log_ratio = log_gamma(nf + 1.0)? + libm::log(nf + nu) + log_gamma(2.0 * nu)?
        - libm::log(nu)
        - log_gamma(nf + 2.0 * nu)?;
    Ok(n0 * libm::exp(0.5 * log_ratio))
}

/// How the polynomial part of an eigenfunction is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// `φₙ = Nₙ Cₙ^(ν)`.
    ClosedForm,
    /// `φ₀ = N₀`, then `φⱼ₊₁ = (j+ν+1)/((j+ν) αⱼ₊₁) · [(X²−1) d/dX + (j+2ν) X] φⱼ`.
    Ladder,
}

/// A normalized eigenfunction; `phi` already carries the normalization.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenfunction {
    n: usize,
    params: ModelParams,
    phi: Polynomial,
    norm: f64,
    method: Method,
}

impl Eigenfunction {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn phi(&self) -> &Polynomial {
        &self.phi
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn energy(&self) -> f64 {
        self.params.energy(self.n)
    }

    /// Same state with `φ` multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self { phi: self.phi.scale(factor), norm: self.norm * factor, ..self.clone() }
    }

    /// `(φ, φ′, φ″)` at `s`. The closed form is evaluated through the
    /// three-term recurrence, which stays accurate where the expanded
    /// monomial coefficients cancel badly.
    fn phi_at(&self, s: f64) -> Result<(f64, f64, f64)> {
        match self.method {
            Method::Ladder => {
                let d1 = self.phi.derivative();
                Ok((self.phi.eval(s), d1.eval(s), d1.derivative().eval(s)))
            }
            Method::ClosedForm => {
                let (n, nu) = (self.n, self.params.nu());
                let c0 = gegenbauer_row(n, nu, s)?[n];
                let c1 = if n >= 1 { 2.0 * nu * gegenbauer_row(n - 1, nu + 1.0, s)?[n - 1] } else { 0.0 };
                let c2 = if n >= 2 {
                    4.0 * nu * (nu + 1.0) * gegenbauer_row(n - 2, nu + 2.0, s)?[n - 2]
                } else {
                    0.0
                };
                Ok((self.norm * c0, self.norm * c1, self.norm * c2))
            }
        }
    }

    fn trig(&self, x: f64) -> Result<(f64, f64)> {
        let (a, b) = self.params.interval();
        if !(x >= a && x <= b) {
            return Err(Error::Domain { what: "position outside box", value: x });
        }
        let kx = self.params.k() * x;
        Ok((libm::cos(kx).max(0.0), libm::sin(kx)))
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        let (c, s) = self.trig(x)?;
        Ok(libm::pow(c, self.params.nu()) * self.phi_at(s)?.0)
    }

    /// `dψ/dx = k cos^(ν−1) [−ν s φ + (1 − s²) φ′]` with `s = sin kx`.
    pub fn derivative(&self, x: f64) -> Result<f64> {
        let (c, s) = self.trig(x)?;
        let nu = self.params.nu();
        let (p, p1, _) = self.phi_at(s)?;
        let w = -nu * s * p + (1.0 - s * s) * p1;
        Ok(self.params.k() * libm::pow(c, nu - 1.0) * w)
    }

    pub fn second_derivative(&self, x: f64) -> Result<f64> {
        let (c, s) = self.trig(x)?;
        let nu = self.params.nu();
        let (p, p1, p2) = self.phi_at(s)?;
        let w = -nu * s * p + (1.0 - s * s) * p1;
        let w_s = -nu * p - (nu + 2.0) * s * p1 + (1.0 - s * s) * p2;
        let mut out = libm::pow(c, nu) * w_s;
        if nu != 1.0 {
            out -= (nu - 1.0) * libm::pow(c, nu - 2.0) * s * w;
        }
        let k = self.params.k();
        Ok(k * k * out)
    }

    /// `b ψₙ` in position space: `[(1/k) cos(kx) d/dx + (n+ν) sin(kx)] ψₙ`.
    pub fn apply_lowering(&self, x: f64) -> Result<f64> {
        let (c, s) = self.trig(x)?;
        let sh = self.n as f64 + self.params.nu();
        Ok(c * self.derivative(x)? / self.params.k() + sh * s * self.value(x)?)
    }

    /// `b⁺ ψₙ` in position space:
    /// `(n+ν+1)/(n+ν) [−(1/k) cos(kx) d/dx + (n+ν) sin(kx)] ψₙ`.
    pub fn apply_raising(&self, x: f64) -> Result<f64> {
        let (c, s) = self.trig(x)?;
        let sh = self.n as f64 + self.params.nu();
        let bracket = -c * self.derivative(x)? / self.params.k() + sh * s * self.value(x)?;
        Ok((sh + 1.0) / sh * bracket)
    }

    /// `−(ħ²/2m) ψ″ + V ψ − Eₙ ψ` at `x`.
    pub fn schrodinger_residual(&self, x: f64) -> Result<f64> {
        let p = &self.params;
        let kinetic = -p.hbar() * p.hbar() / (2.0 * p.mass()) * self.second_derivative(x)?;
        let psi = self.value(x)?;
        Ok(kinetic + (p.potential(x) - self.energy()) * psi)
    }
}

/// Builds `ψₙ` by the requested method.
pub fn build_eigenfunction(params: &ModelParams, n: usize, method: Method) -> Result<Eigenfunction> {
    let norm = norm_n(params, n)?;
    let nu = params.nu();
    let phi = match method {
        Method::ClosedForm => gegenbauer_polynomial(n, nu)?.scale(norm),
        Method::Ladder => {
            let mut phi = Polynomial::constant(norm0(params)?);
            for j in 0..n {
                let s = j as f64 + nu;
                let factor = (s + 1.0) / (s * params.alpha(j + 1));
                phi = poly_ladder_step(&phi, j, nu)?.scale(factor);
            }
            phi
        }
    };
    Ok(Eigenfunction { n, params: *params, phi, norm, method })
}

/// `ψₙ(x)` from the closed form.
pub fn psi_value(ef: &Eigenfunction, x: f64) -> Result<f64> {
    ef.value(x)
}

/// `ψₙ(x) = [k (n+ν) Γ(n+2ν) / n!]^(1/2) cos^(1/2)(kx) P^(1/2−ν)_(n+ν−1/2)(sin kx)`.
pub fn psi_value_legendre(params: &ModelParams, n: usize, x: f64) -> Result<f64> {
    check_integrable(params)?;
    let (a, b) = params.interval();
    if !(x > a && x < b) {
        return Err(Error::Domain { what: "position outside box", value: x });
    }
    let nu = params.nu();
    let nf = n as f64;
    let log_pref = libm::log(params.k()) + libm::log(nf + nu) + log_gamma(nf + 2.0 * nu)? - log_gamma(nf + 1.0)?;
    let kx = params.k() * x;
    let p = assoc_legendre(nf + nu - 0.5, 0.5 - nu, libm::sin(kx))?;
    Ok(libm::exp(0.5 * log_pref) * libm::sqrt(libm::cos(kx)) * p)
}

/// `∫ ψ_a ψ_b dx` by quadrature.
pub fn overlap(a: &Eigenfunction, b: &Eigenfunction, rule: &QuadratureRule) -> Result<f64> {
    if a.params != b.params {
        return Err(Error::ParamsMismatch);
    }
    let expected = a.params.interval();
    let found = rule.interval();
    let tol = 1e-12 * (expected.1 - expected.0);
    if (found.0 - expected.0).abs() > tol || (found.1 - expected.1).abs() > tol {
        return Err(Error::BoxMismatch { expected, found });
    }
    let mut sum = 0.0;
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        sum += w * a.value(x)? * b.value(x)?;
    }
    Ok(sum)
}

/// `max |⟨ψₘ|b ψₙ⟩ − ⟨b⁺ψₘ|ψₙ⟩|` over `m, n ≤ n_max`, both sides integrated
/// by quadrature with the position-space forms of `b` and `b⁺`.
pub fn adjointness_residual(params: &ModelParams, n_max: usize, rule: &QuadratureRule) -> Result<f64> {
    let states = (0..=n_max)
        .map(|n| build_eigenfunction(params, n, Method::ClosedForm))
        .collect::<Result<Vec<_>>>()?;
    let mut lowered = Vec::with_capacity(states.len());
    let mut raised = Vec::with_capacity(states.len());
    let mut values = Vec::with_capacity(states.len());
    for ef in &states {
        let mut lo = Vec::with_capacity(rule.order());
        let mut up = Vec::with_capacity(rule.order());
        let mut va = Vec::with_capacity(rule.order());
        for &x in rule.nodes() {
            lo.push(ef.apply_lowering(x)?);
            up.push(ef.apply_raising(x)?);
            va.push(ef.value(x)?);
        }
        lowered.push(lo);
        raised.push(up);
        values.push(va);
    }
    let w = rule.weights();
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).zip(w).map(|((x, y), w)| w * x * y).sum::<f64>();
    let mut worst = 0.0f64;
    for m in 0..=n_max {
        for n in 0..=n_max {
            let lhs = dot(&values[m], &lowered[n]);
            let rhs = dot(&raised[m], &values[n]);
            worst = worst.max((lhs - rhs).abs());
        }
    }
    Ok(worst)
}

/// Chebyshev-distributed interior points, keeping `|kx| ≤ π/2 − 10⁻³`.
pub fn interior_samples(params: &ModelParams, count: usize) -> Vec<f64> {
    let half = (0.5 * PI - 1e-3) / params.k();
    (0..count)
        .map(|j| half * libm::cos(PI * (j as f64 + 0.5) / count as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gauss_legendre;

    fn rule_for(p: &ModelParams, q: usize) -> QuadratureRule {
        let (a, b) = p.interval();
        gauss_legendre(q, a, b).unwrap()
    }

    #[test]
    fn ground_state_normalization() {
        let p1 = ModelParams::with_nu(1.0).unwrap();
        assert!((norm0(&p1).unwrap() - libm::sqrt(2.0 / PI)).abs() < 1e-14);
        let p2 = ModelParams::with_nu(2.0).unwrap();
        assert!((norm0(&p2).unwrap() - 0.921_317_731_923_561).abs() < 1e-13);
        assert!((norm0(&p2).unwrap() - libm::sqrt(8.0 / (3.0 * PI))).abs() < 1e-14);
        for &nu in &[1.0, 1.5, 2.0, 3.7] {
            let a = ModelParams::new(1.0, 0.5, 1.0, nu).unwrap();
            let b = ModelParams::new(1.0, 0.5, 4.0, nu).unwrap();
            assert!((norm0(&b).unwrap() - 2.0 * norm0(&a).unwrap()).abs() < 1e-14);
        }
    }

    #[test]
    fn ground_state_norm_by_quadrature() {
        // ∫ cos^(2ν)(kx) dx against N₀⁻²
        for &nu in &[1.0, 1.5, 2.0, 3.7] {
            let p = ModelParams::new(1.0, 0.5, 1.3, nu).unwrap();
            let rule = rule_for(&p, 80);
            let integral = rule.integrate(|x| libm::pow(libm::cos(1.3 * x), 2.0 * nu));
            let n0 = norm0(&p).unwrap();
            assert!((n0 * n0 * integral - 1.0).abs() < 1e-12, "nu = {nu}");
        }
    }

    #[test]
    fn norm_examples() {
        let p2 = ModelParams::with_nu(2.0).unwrap();
        let n0 = norm0(&p2).unwrap();
        assert!((norm_n(&p2, 0).unwrap() - n0).abs() < 1e-15);
        assert!((norm_n(&p2, 1).unwrap() - n0 * libm::sqrt(3.0 / 8.0)).abs() < 1e-14);
    }

    #[test]
    fn norm_matches_recursion() {
        for &nu in &[1.0, 1.5, 2.0, 3.7] {
            let p = ModelParams::with_nu(nu).unwrap();
            let mut n_prev = norm0(&p).unwrap();
            for n in 1..=30 {
                let nf = n as f64;
                let next = n_prev * nf * (nf + nu) / ((nf + nu - 1.0) * p.alpha(n));
                let closed = norm_n(&p, n).unwrap();
                assert!((closed - next).abs() < 1e-11 * closed, "nu={nu} n={n}");
                n_prev = next;
            }
        }
    }

    #[test]
    fn eigenfunction_examples() {
        let p2 = ModelParams::with_nu(2.0).unwrap();
        let n0 = norm0(&p2).unwrap();
        for method in [Method::ClosedForm, Method::Ladder] {
            let e0 = build_eigenfunction(&p2, 0, method).unwrap();
            assert_eq!(e0.phi().degree(), Some(0));
            assert!((e0.phi().coeffs()[0] - n0).abs() < 1e-15);
            let e1 = build_eigenfunction(&p2, 1, method).unwrap();
            let want = 4.0 * n0 * libm::sqrt(3.0 / 8.0);
            assert_eq!(e1.phi().degree(), Some(1));
            assert_eq!(e1.phi().coeffs()[0], 0.0);
            assert!((e1.phi().coeffs()[1] - want).abs() < 1e-14);
            assert_eq!(e1.value(0.0).unwrap(), 0.0);
        }
        let e0 = build_eigenfunction(&p2, 0, Method::ClosedForm).unwrap();
        assert!((psi_value(&e0, 0.0).unwrap() - 0.921_317_731_923_561).abs() < 1e-13);
    }

    #[test]
    fn parity_and_walls() {
        for &nu in &[1.0, 1.5, 3.7] {
            let p = ModelParams::new(1.0, 0.5, 1.7, nu).unwrap();
            let (_, b) = p.interval();
            for n in 0..8 {
                let ef = build_eigenfunction(&p, n, Method::ClosedForm).unwrap();
                assert!(ef.phi().has_parity(n % 2 == 1));
                assert!(ef.value(b).unwrap().abs() < 1e-12);
                assert!(ef.value(-b).unwrap().abs() < 1e-12);
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                for x in interior_samples(&p, 20) {
                    let (u, v) = (ef.value(x).unwrap(), ef.value(-x).unwrap());
                    assert!((v - sign * u).abs() < 1e-13 * (1.0 + u.abs()));
                }
            }
        }
    }

    #[test]
    fn outside_box_is_an_error() {
        let p = ModelParams::with_nu(2.0).unwrap();
        let ef = build_eigenfunction(&p, 1, Method::ClosedForm).unwrap();
        assert!(ef.value(2.0).is_err());
        assert!(psi_value_legendre(&p, 1, -1.6).is_err());
    }

    #[test]
    fn legendre_form_examples() {
        let p1 = ModelParams::with_nu(1.0).unwrap();
        assert!((psi_value_legendre(&p1, 0, 0.0).unwrap() - libm::sqrt(2.0 / PI)).abs() < 1e-14);
        let p2 = ModelParams::with_nu(2.0).unwrap();
        assert_eq!(psi_value_legendre(&p2, 1, 0.0).unwrap(), 0.0);
        for n in 0..=5 {
            let ef = build_eigenfunction(&p2, n, Method::ClosedForm).unwrap();
            for x in interior_samples(&p2, 50) {
                let (a, b) = (ef.value(x).unwrap(), psi_value_legendre(&p2, n, x).unwrap());
                assert!((a - b).abs() < 1e-9, "n={n} x={x}");
            }
        }
    }

    #[test]
    fn overlap_examples() {
        let p = ModelParams::with_nu(2.0).unwrap();
        let rule = rule_for(&p, 60);
        let e0 = build_eigenfunction(&p, 0, Method::ClosedForm).unwrap();
        let e1 = build_eigenfunction(&p, 1, Method::ClosedForm).unwrap();
        assert!((overlap(&e0, &e0, &rule).unwrap() - 1.0).abs() < 1e-10);
        assert!(overlap(&e0, &e1, &rule).unwrap().abs() < 1e-10);
        assert!(overlap(&e0, &e1.scaled(2.0), &rule).unwrap().abs() < 1e-10);
        let other = ModelParams::with_nu(3.0).unwrap();
        let f0 = build_eigenfunction(&other, 0, Method::ClosedForm).unwrap();
        assert_eq!(overlap(&e0, &f0, &rule), Err(Error::ParamsMismatch));
        let bad = gauss_legendre(10, -1.0, 1.0).unwrap();
        assert!(matches!(overlap(&e0, &e1, &bad), Err(Error::BoxMismatch { .. })));
    }

    #[test]
    fn lowering_kills_ground_state() {
        for &nu in &[1.0, 1.5, 2.0, 3.7] {
            let p = ModelParams::new(0.9, 1.2, 1.4, nu).unwrap();
            let e0 = build_eigenfunction(&p, 0, Method::ClosedForm).unwrap();
            for x in interior_samples(&p, 40) {
                assert!(e0.apply_lowering(x).unwrap().abs() < 1e-10);
            }
        }
    }

    #[test]
    fn ladder_actions_in_position_space() {
        let p = ModelParams::with_nu(2.3).unwrap();
        let states: Vec<_> = (0..6).map(|n| build_eigenfunction(&p, n, Method::ClosedForm).unwrap()).collect();
        for n in 0..5 {
            let a = p.alpha(n + 1);
            for x in interior_samples(&p, 15) {
                let up = states[n].apply_raising(x).unwrap();
                assert!((up - a * states[n + 1].value(x).unwrap()).abs() < 1e-10);
                let down = states[n + 1].apply_lowering(x).unwrap();
                assert!((down - a * states[n].value(x).unwrap()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let p = ModelParams::new(1.0, 0.5, 1.2, 2.7).unwrap();
        let ef = build_eigenfunction(&p, 4, Method::ClosedForm).unwrap();
        let h = 1e-5;
        for &x in &[-0.9, -0.2, 0.1, 0.6, 1.1] {
            let fd1 = (ef.value(x + h).unwrap() - ef.value(x - h).unwrap()) / (2.0 * h);
            assert!((fd1 - ef.derivative(x).unwrap()).abs() < 1e-7);
            let fd2 = (ef.derivative(x + h).unwrap() - ef.derivative(x - h).unwrap()) / (2.0 * h);
            assert!((fd2 - ef.second_derivative(x).unwrap()).abs() < 1e-6);
        }
    }

    #[test]
    fn samples_stay_inside() {
        let p = ModelParams::new(1.0, 0.5, 2.0, 2.0).unwrap();
        let xs = interior_samples(&p, 100);
        assert_eq!(xs.len(), 100);
        assert!(xs.iter().all(|x| (2.0 * x).abs() <= 0.5 * PI - 1e-3 + 1e-15));
    }
}
