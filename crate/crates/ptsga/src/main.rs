use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use ptsga::output::{emit, to_json, Table};
use ptsga::tables::{self, ladder_table, scan_table, spectrum_table};
use ptsga::{verify, CliError, ModelSpec, OutputFormat, RunConfig, EXIT_OK, EXIT_RELATION_FAILED, EXIT_USAGE};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "ptsga", version, about = "Pöschl–Teller ladder operators and their deformed su(1,1) algebra")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Potential strength parameter ν ≥ 1
    #[arg(long, global = true, conflicts_with = "v0")]
    nu: Option<f64>,
    /// Potential depth V₀ = εν(ν−1) ≥ 0
    #[arg(long, global = true)]
    v0: Option<f64>,
    #[arg(long, global = true, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long, global = true, default_value_t = 0.5)]
    mass: f64,
    #[arg(long, global = true, default_value_t = 1.0)]
    k: f64,
    #[arg(long, global = true, default_value_t = 30)]
    basis_size: usize,
    /// Gauss–Legendre order for matrix elements [default: max(2N+60, 2N+2ν+10)]
    #[arg(long, global = true)]
    quadrature_order: Option<usize>,
    #[arg(long, global = true, default_value_t = 2000)]
    grid_points: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Compare [b, b⁺] against the uncorrected f(H)
    #[arg(long, global = true)]
    use_uncorrected_f: bool,
    /// Multiply every tolerance by this factor
    #[arg(long, global = true, default_value_t = 1.0)]
    tolerance_scale: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every algebraic relation and write a report
    Verify,
    /// Closed-form energy levels against the finite-difference oracle
    Spectrum {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
    /// Both closed forms of the eigenfunctions at interior points
    Wavefunctions {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 101)]
        samples: usize,
    },
    /// Ladder coefficients from the closed form, the recursion and the b matrix
    Ladder {
        #[arg(long, default_value_t = 25)]
        n_max: usize,
    },
    /// Uncorrected-commutator residuals along a list of ν values
    ScanLimit {
        #[arg(long, value_delimiter = ',', default_values_t = [1.0, 1.01, 1.1, 1.5, 2.0, 3.0])]
        nu_list: Vec<f64>,
    },
}

impl GlobalArgs {
    fn config(&self, model: ModelSpec) -> RunConfig {
        let mut c = RunConfig::new(model);
        c.hbar = self.hbar;
        c.mass = self.mass;
        c.k = self.k;
        c.basis_size = self.basis_size;
        c.quadrature_order = self.quadrature_order;
        c.grid_points = self.grid_points;
        c.tolerance_scale = self.tolerance_scale;
        c.use_uncorrected_f = self.use_uncorrected_f;
        c.format = match self.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        };
        c.out = self.out.clone();
        c
    }

    fn model(&self) -> Result<ModelSpec, CliError> {
        match (self.nu, self.v0) {
            (Some(nu), None) => Ok(ModelSpec::Nu(nu)),
            (None, Some(v0)) => Ok(ModelSpec::V0(v0)),
            _ => Err(CliError::Config("exactly one of --nu or --v0 is required".into())),
        }
    }
}

fn write<T: Serialize + ?Sized>(config: &RunConfig, value: &T, table: impl FnOnce() -> Table) -> Result<(), CliError> {
    let bytes = match config.format {
        OutputFormat::Json => to_json(value)?,
        OutputFormat::Csv => table().to_csv()?,
    };
    emit(&bytes, config.out.as_deref())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Verify => {
            let config = g.config(g.model()?);
            let report = verify(&config)?;
            write(&config, &report, || {
                let mut t = Table::new(["relation", "residual", "tolerance", "pass"]);
                for r in &report.relations {
                    t.push(vec![r.name.as_str().into(), r.residual.into(), r.tolerance.into(), r.pass.into()]);
                }
                t
            })?;
            for r in report.failed() {
                eprintln!("FAIL {}: residual {:e} > tolerance {:e}", r.name, r.residual, r.tolerance);
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_RELATION_FAILED })
        }
        Command::Spectrum { n_max } => {
            let config = g.config(g.model()?);
            let rows = tables::spectrum(&config, n_max)?;
            write(&config, &rows, || spectrum_table(&rows))?;
            Ok(EXIT_OK)
        }
        Command::Wavefunctions { n_max, samples } => {
            let config = g.config(g.model()?);
            let t = tables::wavefunctions(&config, n_max, samples)?;
            write(&config, &t, || t.to_table())?;
            Ok(EXIT_OK)
        }
        Command::Ladder { n_max } => {
            let config = g.config(g.model()?);
            let rows = tables::ladder(&config, n_max)?;
            write(&config, &rows, || ladder_table(&rows))?;
            Ok(EXIT_OK)
        }
        Command::ScanLimit { nu_list } => {
            // the scanned ν values replace --nu; a placeholder model keeps validation uniform
            let model = if g.nu.is_some() || g.v0.is_some() { g.model()? } else { ModelSpec::Nu(1.0) };
            let config = g.config(model);
            let points = tables::scan_limit(&config, &nu_list)?;
            write(&config, &points, || scan_table(&points))?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK),
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
