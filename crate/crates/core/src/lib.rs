//! Spectrum-generating algebra of the Pöschl–Teller well.
//!
//! The Hamiltonian `H = p²/2m + V₀/cos²(kx)` on `(−π/2k, π/2k)` together with
//! the ladder operators `b`, `b⁺` closes a nonlinear deformation of su(1,1)
//! with two deforming functions `f(H)` and `g(H)`:
//!
//! ```text
//! [H, b⁺] = g(H) b⁺        g(H) = −ε + 2√(εH)
//! [b, b⁺] = −f(H)          −f(H) = 1 + 2√(H/ε) + ν(ν−1) / (√(H/ε)(√(H/ε) − 1))
//! ```
//!
//! The crate provides the closed forms ([`algebra`]), normalized eigenfunctions
//! ([`wavefun`]), the special functions they rest on ([`specfun`]) and dense
//! matrix realizations in a truncated eigenbasis that measure every relation as a
//! numerical residual ([`opmat`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
mod error;
pub mod opmat;
pub mod specfun;
pub mod wavefun;

pub use algebra::{ModelParams, SpectralPoint};
pub use error::Error;
pub use opmat::OperatorMatrix;
pub use specfun::{Polynomial, QuadratureRule};
pub use wavefun::{Eigenfunction, Method};

pub type Result<T> = core::result::Result<T, Error>;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
