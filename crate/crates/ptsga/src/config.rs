use std::path::PathBuf;

use ptsga_core::opmat::{default_quadrature_order, DEFAULT_TRUST_MARGIN};
use ptsga_core::ModelParams;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Potential strength, given either as `ν` or as `V₀`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelSpec {
    Nu(f64),
    V0(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Pass/fail thresholds; `scaled` multiplies all of them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Max-abs residual of matrix relations on the trusted block.
    pub matrix: f64,
    pub hermiticity: f64,
    /// Relative agreement of the `αₙ` closed form with its recursion.
    pub alpha_recursion: f64,
    /// Pointwise and Gram-matrix checks of the eigenfunctions.
    pub wavefunction: f64,
    pub adjointness: f64,
    pub ground_state: f64,
    /// Schrödinger residual relative to `|Eₙ|·max|ψₙ|`.
    pub schrodinger: f64,
    /// Relative deviation of the grid spectrum.
    pub spectrum: f64,
    /// Allowed relative deviation of the error ratio from 4 under grid doubling.
    pub convergence_ratio: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            matrix: 1e-8,
            hermiticity: 1e-10,
            alpha_recursion: 1e-12,
            wavefunction: 1e-9,
            adjointness: 1e-10,
            ground_state: 1e-10,
            schrodinger: 1e-6,
            spectrum: 1e-4,
            convergence_ratio: 0.1,
        }
    }
}

impl Tolerances {
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            matrix: self.matrix * factor,
            hermiticity: self.hermiticity * factor,
            alpha_recursion: self.alpha_recursion * factor,
            wavefunction: self.wavefunction * factor,
            adjointness: self.adjointness * factor,
            ground_state: self.ground_state * factor,
            schrodinger: self.schrodinger * factor,
            spectrum: self.spectrum * factor,
            convergence_ratio: self.convergence_ratio * factor,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub hbar: f64,
    pub mass: f64,
    pub k: f64,
    pub basis_size: usize,
    /// `None` picks [`default_quadrature_order`].
    pub quadrature_order: Option<usize>,
    pub grid_points: usize,
    pub trust_margin: usize,
    pub tolerance_scale: f64,
    pub use_uncorrected_f: bool,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(model: ModelSpec) -> Self {
        Self {
            model,
            hbar: 1.0,
            mass: 0.5,
            k: 1.0,
            basis_size: 30,
            quadrature_order: None,
            grid_points: 2000,
            trust_margin: DEFAULT_TRUST_MARGIN,
            tolerance_scale: 1.0,
            use_uncorrected_f: false,
            format: OutputFormat::Json,
            out: None,
        }
    }

    pub fn with_nu(nu: f64) -> Self {
        Self::new(ModelSpec::Nu(nu))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.basis_size < self.trust_margin + 2 {
            return Err(CliError::Config(format!(
                "basis size {} leaves no trusted block with margin {}",
                self.basis_size, self.trust_margin
            )));
        }
        if self.quadrature_order == Some(0) {
            return Err(CliError::Config("quadrature order must be positive".into()));
        }
        if self.grid_points < 200 {
            return Err(CliError::Config(format!("grid points {} below 200", self.grid_points)));
        }
        if !(self.tolerance_scale > 0.0) || !self.tolerance_scale.is_finite() {
            return Err(CliError::Config(format!("tolerance scale {} must be positive", self.tolerance_scale)));
        }
        self.params().map(|_| ())
    }

    pub fn params(&self) -> Result<ModelParams, CliError> {
        let p = match self.model {
            ModelSpec::Nu(nu) => ModelParams::new(self.hbar, self.mass, self.k, nu)?,
            ModelSpec::V0(v0) => ModelParams::from_v0(self.hbar, self.mass, self.k, v0)?,
        };
        Ok(p)
    }

    pub fn quadrature_order_for(&self, params: &ModelParams, basis_size: usize) -> usize {
        self.quadrature_order
            .unwrap_or_else(|| default_quadrature_order(basis_size, params.nu()))
    }

    pub fn tolerances(&self) -> Tolerances {
        Tolerances::default().scaled(self.tolerance_scale)
    }
}
