//! The `verify` suite: every relation of the algebra as a named residual.

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use ptsga_core::opmat::{grid_spectrum, Realization};
use ptsga_core::specfun::gauss_legendre;
use ptsga_core::wavefun::{
    adjointness_residual, build_eigenfunction, interior_samples, overlap, psi_value_legendre, Method,
};
use ptsga_core::ModelParams;
use serde::{Deserialize, Deserializer, Serialize};

use crate::{CliError, RunConfig, Tolerances};

pub const SCHEMA_VERSION: u32 = 1;

/// Non-finite residuals serialize as `null`; read them back as NaN.
fn nan_from_null<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Relation {
    pub name: String,
    #[serde(deserialize_with = "nan_from_null")]
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Relation {
    pub fn new(name: &str, residual: f64, tolerance: f64) -> Self {
        Self { name: name.into(), residual, tolerance, pass: residual <= tolerance }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelEcho {
    pub hbar: f64,
    pub mass: f64,
    pub k: f64,
    pub nu: f64,
    pub v0: f64,
    pub epsilon: f64,
    pub basis_size: usize,
    pub quadrature_order: usize,
    pub grid_points: usize,
    pub trust_margin: usize,
    pub tolerance_scale: f64,
    pub use_uncorrected_f: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Versions {
    pub ptsga: String,
    pub ptsga_core: String,
}

/// The only field that changes between identical runs.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub started_unix_s: u64,
    pub elapsed_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub model: ModelEcho,
    pub relations: Vec<Relation>,
    pub pass: bool,
    pub versions: Versions,
    pub timing: Timing,
}

impl VerificationReport {
    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(|r| !r.pass)
    }
}

fn operator_relations(r: &Realization, uncorrected: bool, tol: &Tolerances) -> Result<Vec<Relation>, CliError> {
    let p = r.params();
    let m = tol.matrix;
    let mut out = Vec::new();

    let [hx, hp, hh, hc] = r.hermiticity_residuals()?;
    out.push(Relation::new("hermitian_x", hx, tol.hermiticity));
    out.push(Relation::new("hermitian_p", hp, tol.hermiticity));
    out.push(Relation::new("hermitian_h", hh, tol.hermiticity));
    out.push(Relation::new("hermitian_casimir", hc, tol.hermiticity));
    out.push(Relation::new("x_real_tridiagonal", r.x_structure_residual(), tol.hermiticity));

    out.push(Relation::new("commutator_x_p", r.x_p_residual()?, m));
    out.push(Relation::new("commutator_h_x", r.h_x_residual()?, m));
    out.push(Relation::new("commutator_h_p", r.h_p_residual()?, m));
    let (hb, hbp) = r.h_b_residuals()?;
    out.push(Relation::new("commutator_h_b", hb, m));
    out.push(Relation::new("commutator_h_bplus", hbp, m));

    out.push(Relation::new("b_lowering_structure", r.lowering_structure_residual(), m));
    out.push(Relation::new("bplus_second_form", r.bplus_second_form_residual()?, m));
    if uncorrected {
        out.push(Relation::new("uncorrected_f_commutator", r.b_bplus_residual(false)?, m));
    } else {
        out.push(Relation::new("corrected_f_commutator", r.b_bplus_residual(true)?, m));
    }

    let (c1, c2, c12) = r.casimir_residuals()?;
    out.push(Relation::new("casimir_bbplus_form", c1, m));
    out.push(Relation::new("casimir_bplusb_form", c2, m));
    out.push(Relation::new("casimir_forms_agree", c12, m));
    out.push(Relation::new("identity_nu_nu_minus_one", r.check_identity_12()?, m));

    let ext = r.check_extended_algebra()?;
    out.push(Relation::new("extended_c_commutes_h", ext.c_h, m));
    out.push(Relation::new("extended_c_commutes_b", ext.c_b, m));
    out.push(Relation::new("extended_c_commutes_bplus", ext.c_bplus, m));
    out.push(Relation::new("extended_quadratic_relation", ext.quadratic, m));
    let (t1, t2) = r.transformed_residuals()?;
    out.push(Relation::new("transformed_casimir", t1, m));
    out.push(Relation::new("transformed_commutator", t2, m));

    let su = r.su11_residuals()?;
    out.push(Relation::new("su11_j0_jplus", su.j0_jplus, m));
    out.push(Relation::new("su11_j0_jminus", su.j0_jminus, m));
    out.push(Relation::new("su11_jplus_jminus", su.jplus_jminus, m));
    out.push(Relation::new("su11_casimir", su.casimir, m));
    out.push(Relation::new("su11_orderings_agree", su.orderings, m));

    // ladder coefficients: recursion vs closed form, matrix vs closed form
    let n_alpha = 50;
    let rec = p.alpha_by_recursion(n_alpha)?;
    let worst = (1..=n_alpha)
        .map(|n| (rec[n] - p.alpha(n)).abs() / p.alpha(n))
        .fold(0.0, f64::max);
    out.push(Relation::new("alpha_recursion", worst, tol.alpha_recursion));
    let sup = r.b_superdiagonal();
    let trusted = r.basis_size() - r.margin();
    let worst = (1..trusted).map(|n| (sup[n - 1] - p.alpha(n)).abs()).fold(0.0, f64::max);
    out.push(Relation::new("alpha_matrix", worst, m));
    Ok(out)
}

fn wavefunction_relations(p: &ModelParams, size: usize, order: usize, tol: &Tolerances) -> Result<Vec<Relation>, CliError> {
    let (a, b) = p.interval();
    let rule = gauss_legendre(order, a, b)?;
    let n_gram = 20.min(size - 1);
    let states = (0..=n_gram.max(25.min(size - 1)))
        .map(|n| build_eigenfunction(p, n, Method::ClosedForm))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::new();

    let mut gram = 0.0f64;
    for m in 0..=n_gram {
        for n in 0..=n_gram {
            let want = if m == n { 1.0 } else { 0.0 };
            gram = gram.max((overlap(&states[m], &states[n], &rule)? - want).abs());
        }
    }
    out.push(Relation::new("eigenfunction_gram", gram, tol.wavefunction));

    let xs = interior_samples(p, 100);
    let mut ladder = 0.0f64;
    for (n, closed) in states.iter().enumerate().take(n_gram + 1) {
        let built = build_eigenfunction(p, n, Method::Ladder)?;
        for &x in &xs {
            ladder = ladder.max((built.value(x)? - closed.value(x)?).abs());
        }
    }
    out.push(Relation::new("ladder_vs_closed_form", ladder, tol.wavefunction));

    let mut legendre = 0.0f64;
    for ef in states.iter().take(11) {
        for &x in &xs {
            legendre = legendre.max((ef.value(x)? - psi_value_legendre(p, ef.n(), x)?).abs());
        }
    }
    out.push(Relation::new("gegenbauer_vs_legendre_form", legendre, tol.wavefunction));

    let mut schrodinger = 0.0f64;
    for ef in states.iter().take(11) {
        let peak = xs.iter().map(|&x| ef.value(x).map(f64::abs)).try_fold(0.0f64, |m, v| v.map(|v| m.max(v)))?;
        for &x in &xs {
            let r = ef.schrodinger_residual(x)?.abs() / (ef.energy().abs() * peak);
            schrodinger = schrodinger.max(r);
        }
    }
    out.push(Relation::new("schrodinger_residual", schrodinger, tol.schrodinger));

    let mut annihilation = 0.0f64;
    for &x in &xs {
        annihilation = annihilation.max(states[0].apply_lowering(x)?.abs());
    }
    out.push(Relation::new("ground_state_annihilated", annihilation, tol.ground_state));
    out.push(Relation::new("adjointness_quadrature", adjointness_residual(p, 10.min(size - 1), &rule)?, tol.adjointness));

    if p.nu() == 1.0 {
        let amp = (2.0 * p.k() / std::f64::consts::PI).sqrt();
        let mut worst = 0.0f64;
        for ef in &states {
            let n = ef.n();
            let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
            for &x in &xs {
                let arg = (n as f64 + 1.0) * p.k() * x;
                let want = sign * amp * if n % 2 == 0 { arg.cos() } else { arg.sin() };
                worst = worst.max((ef.value(x)? - want).abs());
            }
        }
        out.push(Relation::new("square_well_states", worst, tol.wavefunction));
    }
    Ok(out)
}

/// Grid-oracle relations: relative deviation for `n ≤ 5` at `M` points and
/// deviation of the error ratio between `M/2` and `M` from 4.
fn spectrum_relations(p: &ModelParams, grid_points: usize, tol: &Tolerances) -> Result<Vec<Relation>, CliError> {
    let levels = 6;
    let fine = grid_spectrum(p, grid_points, levels)?;
    let coarse = grid_spectrum(p, (grid_points / 2).max(200), levels)?;
    let mut dev = 0.0f64;
    let mut ratio_dev = 0.0f64;
    for n in 0..levels {
        let e = p.energy(n);
        dev = dev.max((fine[n] - e).abs() / e);
        let ratio = (coarse[n] - e) / (fine[n] - e);
        ratio_dev = ratio_dev.max((ratio / 4.0 - 1.0).abs());
    }
    Ok(vec![
        Relation::new("spectrum_grid_oracle", dev, tol.spectrum),
        Relation::new("spectrum_grid_convergence", ratio_dev, tol.convergence_ratio),
    ])
}

/// Runs the full suite for one model.
pub fn verify(config: &RunConfig) -> Result<VerificationReport, CliError> {
    config.validate()?;
    let clock = Instant::now();
    let started_unix_s = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    let p = config.params()?;
    let tol = config.tolerances();
    let order = config.quadrature_order_for(&p, config.basis_size);
    let realization = Realization::new(&p, config.basis_size, order)?.with_margin(config.trust_margin);

    let mut relations = operator_relations(&realization, config.use_uncorrected_f, &tol)?;
    relations.extend(wavefunction_relations(&p, config.basis_size, order, &tol)?);
    relations.extend(spectrum_relations(&p, config.grid_points, &tol)?);

    let pass = relations.iter().all(|r| r.pass);
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        model: ModelEcho {
            hbar: p.hbar(),
            mass: p.mass(),
            k: p.k(),
            nu: p.nu(),
            v0: p.v0(),
            epsilon: p.epsilon(),
            basis_size: config.basis_size,
            quadrature_order: order,
            grid_points: config.grid_points,
            trust_margin: config.trust_margin,
            tolerance_scale: config.tolerance_scale,
            use_uncorrected_f: config.use_uncorrected_f,
        },
        relations,
        pass,
        versions: Versions {
            ptsga: env!("CARGO_PKG_VERSION").into(),
            ptsga_core: ptsga_core::VERSION.into(),
        },
        timing: Timing { started_unix_s, elapsed_s: clock.elapsed().as_secs_f64() },
    })
}
