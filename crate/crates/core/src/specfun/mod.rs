//! Special functions and numerical primitives: log-gamma, Gegenbauer
//! polynomials, associated Legendre functions on the Gegenbauer lattice,
//! Gauss–Legendre quadrature and real polynomials in `X = sin(kx)`.

mod gamma;
mod gegenbauer;
mod legendre;
mod polynomial;
mod quadrature;

pub use gamma::log_gamma;
pub use gegenbauer::{gegenbauer_polynomial, gegenbauer_row};
pub use legendre::assoc_legendre;
pub use polynomial::{poly_ladder_step, Polynomial};
pub use quadrature::{gauss_legendre, QuadratureRule};
