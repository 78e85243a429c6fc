//! Matrix realizations in the truncated eigenbasis and on a position grid.
//!
//! `X` and `P` come from Gauss–Legendre quadrature over the closed-form
//! eigenfunctions; every function of `H` (square roots, `f`, `g`, `h`) is a
//! diagonal matrix evaluated at the eigenvalues `Eₙ`. Each relation of the
//! algebra is then measured as the largest entry of `lhs − rhs` on the block
//! that truncation leaves intact.

mod basis;
mod grid;
mod matrix;

use alloc::vec::Vec;

use num_complex::Complex64;

pub use basis::{build_gram, build_p, build_x, P_HERMITICITY_LIMIT};
pub use grid::{grid_spectrum, GridOperator};
pub use matrix::{commutator, OperatorMatrix};

use crate::algebra::ModelParams;
use crate::specfun::gauss_legendre;
use crate::Result;

/// Rows/columns excluded from residual norms unless an expression needs more.
pub const DEFAULT_TRUST_MARGIN: usize = 4;

/// Quadrature order used when none is given: `max(2N + 60, 2N + 2ν + 10)`.
pub fn default_quadrature_order(basis_size: usize, nu: f64) -> usize {
    let floor = 2 * basis_size + 60;
    let by_nu = 2 * basis_size + libm::ceil(2.0 * nu + 10.0) as usize;
    floor.max(by_nu)
}

fn i_unit() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// `diag(E₀, …, E_{N−1})`.
pub fn build_h(params: &ModelParams, size: usize) -> OperatorMatrix {
    let diag: Vec<f64> = (0..size).map(|n| params.energy(n)).collect();
    OperatorMatrix::from_diagonal("H", &diag)
}

/// Applies `f` to the eigenvalues on the diagonal of `h`.
pub fn function_of_h<F>(h: &OperatorMatrix, label: &str, mut f: F) -> Result<OperatorMatrix>
where
    F: FnMut(f64) -> Result<f64>,
{
    let diag = h.diagonal().into_iter().map(&mut f).collect::<Result<Vec<_>>>()?;
    Ok(OperatorMatrix::from_diagonal(label, &diag))
}

/// `b = (1/2ε)[X (ε + 2√(εH)) + (iħ/m) P]` and `b⁺ = b†`.
pub fn assemble_b(
    params: &ModelParams,
    x: &OperatorMatrix,
    p: &OperatorMatrix,
    h: &OperatorMatrix,
) -> Result<(OperatorMatrix, OperatorMatrix)> {
    let eps = params.epsilon();
    let right = function_of_h(h, "ε+2√(εH)", |e| Ok(eps + 2.0 * libm::sqrt(eps * e)))?;
    let ihm = i_unit() * (params.hbar() / params.mass());
    let b = x
        .matmul(&right)?
        .add(&p.scale(ihm))?
        .scale_real(0.5 / eps)
        .with_label("b");
    let bplus = b.adjoint().with_label("b+");
    Ok((b, bplus))
}

/// `b⁺ = −(1/2ε)[X (ε − 2√(εH)) + (iħ/m) P] (ε + √(εH))/√(εH)`, the form
/// with the function of `H` on the right.
pub fn bplus_second_form(
    params: &ModelParams,
    x: &OperatorMatrix,
    p: &OperatorMatrix,
    h: &OperatorMatrix,
) -> Result<OperatorMatrix> {
    let eps = params.epsilon();
    let inner = function_of_h(h, "ε−2√(εH)", |e| Ok(eps - 2.0 * libm::sqrt(eps * e)))?;
    let outer = function_of_h(h, "(ε+√(εH))/√(εH)", |e| {
        let r = libm::sqrt(eps * e);
        Ok((eps + r) / r)
    })?;
    let ihm = i_unit() * (params.hbar() / params.mass());
    Ok(x.matmul(&inner)?
        .add(&p.scale(ihm))?
        .matmul(&outer)?
        .scale_real(-0.5 / eps)
        .with_label("b+ (second form)"))
}

/// Residuals of the extended algebra with the Casimir as a generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedAlgebraResiduals {
    pub c_h: f64,
    pub c_b: f64,
    pub c_bplus: f64,
    /// `√(H/ε) bb⁺ − (√(H/ε) − 1) b⁺b − C − √(H/ε)(1 + 3√(H/ε))`.
    pub quadratic: f64,
}

impl ExtendedAlgebraResiduals {
    pub fn max(&self) -> f64 {
        self.c_h.max(self.c_b).max(self.c_bplus).max(self.quadratic)
    }
}

/// su(1,1) generators built from the ladder operators.
#[derive(Debug, Clone, PartialEq)]
pub struct Su11 {
    pub j0: OperatorMatrix,
    /// `J₊ = b⁺ (√(H/ε)/(√(H/ε)+1))^(1/2)`.
    pub jplus: OperatorMatrix,
    /// `J₋ = J₊†`.
    pub jminus: OperatorMatrix,
    /// `J₊ = ((√(H/ε)−1)/√(H/ε))^(1/2) b⁺`.
    pub jplus_left: OperatorMatrix,
    /// `J₋ = (√(H/ε)/(√(H/ε)+1))^(1/2) b`.
    pub jminus_left: OperatorMatrix,
    /// `J₋ = b ((√(H/ε)−1)/√(H/ε))^(1/2)`.
    pub jminus_right: OperatorMatrix,
}

/// Residuals of the su(1,1) relations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su11Residuals {
    pub j0_jplus: f64,
    pub j0_jminus: f64,
    pub jplus_jminus: f64,
    pub casimir: f64,
    pub orderings: f64,
}

/// Every operator of the model in an `N`-state eigenbasis.
#[derive(Debug, Clone)]
pub struct Realization {
    params: ModelParams,
    quadrature_order: usize,
    margin: usize,
    pub x: OperatorMatrix,
    pub p: OperatorMatrix,
    pub h: OperatorMatrix,
    /// `√(H/ε) = diag(n + ν)`.
    pub sqrt_h: OperatorMatrix,
    pub b: OperatorMatrix,
    pub bplus: OperatorMatrix,
}

impl Realization {
    pub fn new(params: &ModelParams, basis_size: usize, quadrature_order: usize) -> Result<Self> {
        let (lo, hi) = params.interval();
        let rule = gauss_legendre(quadrature_order, lo, hi)?;
        let x = build_x(params, basis_size, &rule)?;
        let p = build_p(params, basis_size, &rule)?;
        let h = build_h(params, basis_size);
        let eps = params.epsilon();
        let sqrt_h = function_of_h(&h, "sqrt(H/eps)", |e| Ok(libm::sqrt(e / eps)))?;
        let (b, bplus) = assemble_b(params, &x, &p, &h)?;
        Ok(Self {
            params: *params,
            quadrature_order,
            margin: DEFAULT_TRUST_MARGIN,
            x,
            p,
            h,
            sqrt_h,
            b,
            bplus,
        })
    }

    pub fn with_default_order(params: &ModelParams, basis_size: usize) -> Result<Self> {
        Self::new(params, basis_size, default_quadrature_order(basis_size, params.nu()))
    }

    pub fn with_margin(mut self, margin: usize) -> Self {
        self.margin = margin;
        self
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn basis_size(&self) -> usize {
        self.h.size()
    }

    pub fn quadrature_order(&self) -> usize {
        self.quadrature_order
    }

    pub fn margin(&self) -> usize {
        self.margin
    }

    fn residual(&self, m: &OperatorMatrix) -> f64 {
        m.max_abs_trusted(self.margin)
    }

    fn identity(&self) -> OperatorMatrix {
        OperatorMatrix::identity(self.basis_size())
    }

    fn diag_of_levels<F: Fn(f64) -> f64>(&self, label: &str, f: F) -> OperatorMatrix {
        let d: Vec<f64> = self.sqrt_h.diagonal().into_iter().map(f).collect();
        OperatorMatrix::from_diagonal(label, &d)
    }

    pub fn g_matrix(&self) -> Result<OperatorMatrix> {
        function_of_h(&self.h, "g(H)", |e| self.params.g_of(e))
    }

    pub fn f_matrix(&self) -> Result<OperatorMatrix> {
        function_of_h(&self.h, "f(H)", |e| self.params.f_of(e))
    }

    pub fn f_uncorrected_matrix(&self) -> Result<OperatorMatrix> {
        function_of_h(&self.h, "f(H) uncorrected", |e| self.params.f_uncorrected_of(e))
    }

    pub fn h_function_matrix(&self) -> Result<OperatorMatrix> {
        function_of_h(&self.h, "h(H)", |e| self.params.h_of(e))
    }

    /// `[X, P] − iħk²(1 − X²)`.
    pub fn x_p_residual(&self) -> Result<f64> {
        let k = self.params.k();
        let lhs = commutator(&self.x, &self.p)?;
        let rhs = self.identity().sub(&self.x.matmul(&self.x)?)?.scale(i_unit() * (self.params.hbar() * k * k));
        Ok(self.residual(&lhs.sub(&rhs)?))
    }

    /// `[H, X] + (iħ/m) P`.
    pub fn h_x_residual(&self) -> Result<f64> {
        let lhs = commutator(&self.h, &self.x)?;
        let r = lhs.add(&self.p.scale(i_unit() * (self.params.hbar() / self.params.mass())))?;
        Ok(self.residual(&r))
    }

    /// `[H, P] − iħk²(2XH − εX/2 − (iħ/m) P)`.
    pub fn h_p_residual(&self) -> Result<f64> {
        let (hb, k, m, eps) = (self.params.hbar(), self.params.k(), self.params.mass(), self.params.epsilon());
        let lhs = commutator(&self.h, &self.p)?;
        let inner = self
            .x
            .matmul(&self.h)?
            .scale_real(2.0)
            .sub(&self.x.scale_real(0.5 * eps))?
            .sub(&self.p.scale(i_unit() * (hb / m)))?;
        let r = lhs.sub(&inner.scale(i_unit() * (hb * k * k)))?;
        Ok(self.residual(&r))
    }

    /// `max(|[H, b] + b g(H)|, |[H, b⁺] − g(H) b⁺|)`.
    pub fn h_b_residuals(&self) -> Result<(f64, f64)> {
        let g = self.g_matrix()?;
        let r1 = commutator(&self.h, &self.b)?.add(&self.b.matmul(&g)?)?;
        let r2 = commutator(&self.h, &self.bplus)?.sub(&g.matmul(&self.bplus)?)?;
        Ok((self.residual(&r1), self.residual(&r2)))
    }

    /// `[b, b⁺] + f(H)`, with the corrected or the uncorrected `f`.
    pub fn b_bplus_matrix(&self, corrected: bool) -> Result<OperatorMatrix> {
        let f = if corrected { self.f_matrix()? } else { self.f_uncorrected_matrix()? };
        commutator(&self.b, &self.bplus)?.add(&f)
    }

    pub fn b_bplus_residual(&self, corrected: bool) -> Result<f64> {
        Ok(self.residual(&self.b_bplus_matrix(corrected)?))
    }

    /// Diagonal entries of `[b, b⁺] + f(H)` on the trusted block.
    pub fn b_bplus_diagonal(&self, corrected: bool) -> Result<Vec<f64>> {
        let m = self.b_bplus_matrix(corrected)?;
        let t = m.trusted_size(self.margin);
        Ok((0..t).map(|i| m.get(i, i).re).collect())
    }

    /// `max |bᵢⱼ − αⱼ δᵢ,ⱼ₋₁|`: `b` lowers `ψₙ` to `αₙ ψₙ₋₁` and nothing else.
    pub fn lowering_structure_residual(&self) -> f64 {
        let t = self.b.trusted_size(self.margin);
        let mut worst = 0.0f64;
        for i in 0..t {
            for j in 0..t {
                let want = if j == i + 1 { self.params.alpha(j) } else { 0.0 };
                worst = worst.max((self.b.get(i, j) - want).norm());
            }
        }
        worst
    }

    /// Superdiagonal `b₍ₙ₋₁,ₙ₎`, real part, for `n = 1 … N−1`.
    pub fn b_superdiagonal(&self) -> Vec<f64> {
        (1..self.basis_size()).map(|n| self.b.get(n - 1, n).re).collect()
    }

    pub fn bplus_second_form_residual(&self) -> Result<f64> {
        let alt = bplus_second_form(&self.params, &self.x, &self.p, &self.h)?;
        Ok(self.residual(&alt.sub(&self.bplus)?))
    }

    /// `C = bb⁺ + h(H)`.
    pub fn casimir(&self) -> Result<OperatorMatrix> {
        Ok(self.b.matmul(&self.bplus)?.add(&self.h_function_matrix()?)?.with_label("C"))
    }

    /// `C = b⁺b + h(H) − f(H)`.
    pub fn casimir_second_form(&self) -> Result<OperatorMatrix> {
        Ok(self
            .bplus
            .matmul(&self.b)?
            .add(&self.h_function_matrix()?)?
            .sub(&self.f_matrix()?)?
            .with_label("C (second form)"))
    }

    /// `(|C₁ + ν(ν−1)|, |C₂ + ν(ν−1)|, |C₁ − C₂|)` for both printed forms.
    pub fn casimir_residuals(&self) -> Result<(f64, f64, f64)> {
        let target = self.identity().scale_real(self.params.casimir_eigenvalue());
        let c1 = self.casimir()?;
        let c2 = self.casimir_second_form()?;
        Ok((
            self.residual(&c1.sub(&target)?),
            self.residual(&c2.sub(&target)?),
            self.residual(&c1.sub(&c2)?),
        ))
    }

    /// `ν(ν−1) − (1/4ε²)[2(ε² + 2εH) + X²(ε² − 4εH) + 4(iħ/m)ε XP − (ħ²/m²)P²]`.
    pub fn check_identity_12(&self) -> Result<f64> {
        let (hb, m, eps) = (self.params.hbar(), self.params.mass(), self.params.epsilon());
        let id = self.identity();
        let t1 = id.scale_real(eps * eps).add(&self.h.scale_real(2.0 * eps))?.scale_real(2.0);
        let x2 = self.x.matmul(&self.x)?;
        let t2 = x2.matmul(&id.scale_real(eps * eps).sub(&self.h.scale_real(4.0 * eps))?)?;
        let t3 = self.x.matmul(&self.p)?.scale(i_unit() * (4.0 * hb / m * eps));
        let t4 = self.p.matmul(&self.p)?.scale_real(hb * hb / (m * m));
        let bracket = t1.add(&t2)?.add(&t3)?.sub(&t4)?.scale_real(0.25 / (eps * eps));
        let r = id.scale_real(self.params.strength()).sub(&bracket)?;
        Ok(self.residual(&r))
    }

    pub fn check_extended_algebra(&self) -> Result<ExtendedAlgebraResiduals> {
        let c = self.casimir()?;
        let s = &self.sqrt_h;
        let s_minus = s.sub(&self.identity())?;
        let bbp = self.b.matmul(&self.bplus)?;
        let bpb = self.bplus.matmul(&self.b)?;
        let tail = s.matmul(&self.identity().add(&s.scale_real(3.0))?)?;
        let quad = s.matmul(&bbp)?.sub(&s_minus.matmul(&bpb)?)?.sub(&c)?.sub(&tail)?;
        Ok(ExtendedAlgebraResiduals {
            c_h: self.residual(&commutator(&c, &self.h)?),
            c_b: self.residual(&commutator(&c, &self.b)?),
            c_bplus: self.residual(&commutator(&c, &self.bplus)?),
            quadratic: self.residual(&quad),
        })
    }

    /// Residuals of `C = S/(S+1) bb⁺ − S(S+1)` and
    /// `S/(S+1) bb⁺ − (S−1)/S b⁺b = 2S`, with `S = √(H/ε)`.
    pub fn transformed_residuals(&self) -> Result<(f64, f64)> {
        let s = &self.sqrt_h;
        let up = self.diag_of_levels("S/(S+1)", |v| v / (v + 1.0));
        let down = self.diag_of_levels("(S-1)/S", |v| (v - 1.0) / v);
        let s_s1 = self.diag_of_levels("S(S+1)", |v| v * (v + 1.0));
        let bbp = self.b.matmul(&self.bplus)?;
        let bpb = self.bplus.matmul(&self.b)?;
        let c_t = up.matmul(&bbp)?.sub(&s_s1)?;
        let r1 = self.casimir()?.sub(&c_t)?;
        let r2 = up.matmul(&bbp)?.sub(&down.matmul(&bpb)?)?.sub(&s.scale_real(2.0))?;
        Ok((self.residual(&r1), self.residual(&r2)))
    }

    pub fn build_su11(&self) -> Result<Su11> {
        let up = self.diag_of_levels("sqrt(S/(S+1))", |v| libm::sqrt(v / (v + 1.0)));
        let down = self.diag_of_levels("sqrt((S-1)/S)", |v| libm::sqrt((v - 1.0) / v));
        let jplus = self.bplus.matmul(&up)?.with_label("J+");
        let jminus = jplus.adjoint().with_label("J-");
        Ok(Su11 {
            j0: self.sqrt_h.clone().with_label("J0"),
            jplus_left: down.matmul(&self.bplus)?.with_label("J+ (left)"),
            jminus_left: up.matmul(&self.b)?.with_label("J- (left)"),
            jminus_right: self.b.matmul(&down)?.with_label("J- (right)"),
            jplus,
            jminus,
        })
    }

    pub fn su11_residuals(&self) -> Result<Su11Residuals> {
        let j = self.build_su11()?;
        let r_plus = commutator(&j.j0, &j.jplus)?.sub(&j.jplus)?;
        let r_minus = commutator(&j.j0, &j.jminus)?.add(&j.jminus)?;
        let r_pm = commutator(&j.jplus, &j.jminus)?.add(&j.j0.scale_real(2.0))?;
        let j0j0 = j.j0.matmul(&j.j0.add(&self.identity())?)?;
        let cas = j
            .jminus
            .matmul(&j.jplus)?
            .sub(&j0j0)?
            .add(&self.identity().scale_real(self.params.strength()))?;
        let orderings = self
            .residual(&j.jplus.sub(&j.jplus_left)?)
            .max(self.residual(&j.jminus.sub(&j.jminus_left)?))
            .max(self.residual(&j.jminus.sub(&j.jminus_right)?));
        Ok(Su11Residuals {
            j0_jplus: self.residual(&r_plus),
            j0_jminus: self.residual(&r_minus),
            jplus_jminus: self.residual(&r_pm),
            casimir: self.residual(&cas),
            orderings,
        })
    }

    /// `max |X − X†|`, `|P − P†|`, `|H − H†|`, `|C − C†|` on the trusted block.
    pub fn hermiticity_residuals(&self) -> Result<[f64; 4]> {
        let c = self.casimir()?;
        Ok([
            self.x.hermiticity_residual(self.margin),
            self.p.hermiticity_residual(self.margin),
            self.h.hermiticity_residual(self.margin),
            c.hermiticity_residual(self.margin.max(c.trust_margin())),
        ])
    }

    /// Deviation of `X` from a real symmetric tridiagonal matrix with zero
    /// diagonal.
    pub fn x_structure_residual(&self) -> f64 {
        let t = self.x.trusted_size(self.margin);
        let mut worst = 0.0f64;
        for i in 0..t {
            for j in 0..t {
                let z = self.x.get(i, j);
                worst = worst.max(z.im.abs());
                if i.abs_diff(j) != 1 {
                    worst = worst.max(z.re.abs());
                }
                worst = worst.max((z.re - self.x.get(j, i).re).abs());
            }
        }
        worst
    }
}
