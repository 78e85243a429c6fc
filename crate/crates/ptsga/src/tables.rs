//! Result tables for the `spectrum`, `wavefunctions`, `ladder` and
//! `scan-limit` commands.

use ptsga_core::opmat::{grid_spectrum, Realization};
use ptsga_core::wavefun::{build_eigenfunction, interior_samples, psi_value_legendre, Method};
use ptsga_core::ModelParams;
use serde::{Deserialize, Serialize};

use crate::output::{Cell, Table};
use crate::{CliError, RunConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub n: usize,
    pub closed_form: f64,
    pub grid: f64,
    pub rel_diff: f64,
}

/// Closed-form levels next to the finite-difference oracle for `n ≤ n_max`.
pub fn spectrum(config: &RunConfig, n_max: usize) -> Result<Vec<SpectrumRow>, CliError> {
    config.validate()?;
    let p = config.params()?;
    let grid = grid_spectrum(&p, config.grid_points, n_max + 1)?;
    Ok(grid
        .into_iter()
        .enumerate()
        .map(|(n, g)| {
            let e = p.energy(n);
            SpectrumRow { n, closed_form: e, grid: g, rel_diff: (g - e).abs() / e }
        })
        .collect())
}

pub fn spectrum_table(rows: &[SpectrumRow]) -> Table {
    let mut t = Table::new(["n", "closed_form", "grid", "rel_diff"]);
    for r in rows {
        t.push(vec![r.n.into(), r.closed_form.into(), r.grid.into(), r.rel_diff.into()]);
    }
    t
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateSamples {
    pub n: usize,
    pub gegenbauer: Vec<f64>,
    pub legendre: Vec<f64>,
    pub max_diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionTable {
    pub x: Vec<f64>,
    pub states: Vec<StateSamples>,
}

impl WavefunctionTable {
    pub fn max_diff(&self) -> f64 {
        self.states.iter().map(|s| s.max_diff).fold(0.0, f64::max)
    }

    pub fn to_table(&self) -> Table {
        let mut headers = vec!["x".to_string()];
        for s in &self.states {
            headers.push(format!("psi{}_gegenbauer", s.n));
            headers.push(format!("psi{}_legendre", s.n));
            headers.push(format!("diff{}", s.n));
        }
        let mut t = Table::new(headers);
        for (i, &x) in self.x.iter().enumerate() {
            let mut row = vec![Cell::from(x)];
            for s in &self.states {
                let (g, l) = (s.gegenbauer[i], s.legendre[i]);
                row.extend([g.into(), l.into(), (g - l).abs().into()]);
            }
            t.push(row);
        }
        t
    }
}

/// Both closed forms of `ψₙ`, `n ≤ n_max`, at `samples` interior points.
pub fn wavefunctions(config: &RunConfig, n_max: usize, samples: usize) -> Result<WavefunctionTable, CliError> {
    config.validate()?;
    if samples == 0 {
        return Err(CliError::Config("samples must be positive".into()));
    }
    let p = config.params()?;
    let x = interior_samples(&p, samples);
    let mut states = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let ef = build_eigenfunction(&p, n, Method::ClosedForm)?;
        let gegenbauer = x.iter().map(|&x| ef.value(x)).collect::<Result<Vec<_>, _>>()?;
        let legendre = x.iter().map(|&x| psi_value_legendre(&p, n, x)).collect::<Result<Vec<_>, _>>()?;
        let max_diff = gegenbauer.iter().zip(&legendre).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        states.push(StateSamples { n, gegenbauer, legendre, max_diff });
    }
    Ok(WavefunctionTable { x, states })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LadderRow {
    pub n: usize,
    pub alpha_closed: f64,
    pub alpha_recursion: f64,
    /// Superdiagonal of the quadrature-built `b`; absent outside the trusted block.
    pub b_matrix: Option<f64>,
    pub j0: f64,
    pub jplus: f64,
}

pub fn ladder(config: &RunConfig, n_max: usize) -> Result<Vec<LadderRow>, CliError> {
    config.validate()?;
    let p = config.params()?;
    let order = config.quadrature_order_for(&p, config.basis_size);
    let r = Realization::new(&p, config.basis_size, order)?.with_margin(config.trust_margin);
    let sup = r.b_superdiagonal();
    let trusted = config.basis_size - config.trust_margin;
    let rec = p.alpha_by_recursion(n_max)?;
    Ok((0..=n_max)
        .map(|n| {
            let b_matrix = match n {
                0 => Some(0.0),
                n if n < trusted => Some(sup[n - 1]),
                _ => None,
            };
            let (j0, jplus) = p.su11_matrix_elements(n);
            LadderRow { n, alpha_closed: p.alpha(n), alpha_recursion: rec[n], b_matrix, j0, jplus }
        })
        .collect())
}

pub fn ladder_table(rows: &[LadderRow]) -> Table {
    let mut t = Table::new(["n", "alpha_closed", "alpha_recursion", "b_matrix", "j0", "jplus"]);
    for r in rows {
        t.push(vec![
            r.n.into(),
            r.alpha_closed.into(),
            r.alpha_recursion.into(),
            r.b_matrix.into(),
            r.j0.into(),
            r.jplus.into(),
        ]);
    }
    t
}

/// Uncorrected-commutator residuals for one `ν`.
///
/// `per_n` is `|⟨n|[b, b⁺] + f₀(H)|n⟩|` on the trusted block, with `f₀` the
/// uncorrected function, and `predicted_per_n` the closed-form extra term.
/// The summaries are the maximum, the mean, and the maximum over `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub nu: f64,
    pub max_residual: f64,
    pub predicted_max: f64,
    pub mean: f64,
    pub predicted_mean: f64,
    pub tail_max: f64,
    pub predicted_tail_max: f64,
    pub per_n: Vec<f64>,
    pub predicted_per_n: Vec<f64>,
}

fn summarize(v: &[f64]) -> (f64, f64, f64) {
    let max = v.iter().copied().fold(0.0, f64::max);
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    let tail = v.iter().skip(1).copied().fold(0.0, f64::max);
    (max, mean, tail)
}

pub fn scan_point(config: &RunConfig, params: &ModelParams) -> Result<ScanPoint, CliError> {
    let order = config.quadrature_order_for(params, config.basis_size);
    let r = Realization::new(params, config.basis_size, order)?.with_margin(config.trust_margin);
    let per_n: Vec<f64> = r.b_bplus_diagonal(false)?.into_iter().map(f64::abs).collect();
    let predicted_per_n = (0..per_n.len())
        .map(|n| Ok((params.f_at_level(n) - params.f_uncorrected_of(params.energy(n))?).abs()))
        .collect::<Result<Vec<_>, ptsga_core::Error>>()?;
    let (max_residual, mean, tail_max) = summarize(&per_n);
    let (predicted_max, predicted_mean, predicted_tail_max) = summarize(&predicted_per_n);
    Ok(ScanPoint {
        nu: params.nu(),
        max_residual,
        predicted_max,
        mean,
        predicted_mean,
        tail_max,
        predicted_tail_max,
        per_n,
        predicted_per_n,
    })
}

pub fn scan_limit(config: &RunConfig, nu_list: &[f64]) -> Result<Vec<ScanPoint>, CliError> {
    config.validate()?;
    if nu_list.is_empty() {
        return Err(CliError::Config("empty nu list".into()));
    }
    nu_list
        .iter()
        .map(|&nu| {
            if !(nu >= 1.0) {
                return Err(CliError::Config(format!("nu = {nu} is below 1")));
            }
            let p = ModelParams::new(config.hbar, config.mass, config.k, nu)?;
            scan_point(config, &p)
        })
        .collect()
}

pub fn scan_table(points: &[ScanPoint]) -> Table {
    let mut t = Table::new([
        "nu",
        "max_residual",
        "predicted_max",
        "mean",
        "predicted_mean",
        "tail_max",
        "predicted_tail_max",
    ]);
    for s in points {
        t.push(vec![
            s.nu.into(),
            s.max_residual.into(),
            s.predicted_max.into(),
            s.mean.into(),
            s.predicted_mean.into(),
            s.tail_max.into(),
            s.predicted_tail_max.into(),
        ]);
    }
    t
}
