//! Asymptotics of the boundary entropy generating function: closed-form
//! expansion coefficients in the trigonometric parametrisation, collection
//! of exact finite-size data at high precision, and extraction of expansion
//! coefficients by sliding-window extrapolation.
//!
//! - [`rparam`]: the parametrisation x(r) and its inverse, with the branch
//!   split at the crossover x = -1
//! - [`coeffs`]: cylinder coefficients f_0..f_6, the inverse-power tail,
//!   strip coefficients g_0, g_1, the sign prefactor, the universal
//!   boundary-entropy amplitude, and the special-point constant table
//! - [`consts`]: embedded high-precision constants with start-up self-tests
//! - [`series`]: exact evaluation of the reduced generating function and
//!   high-precision logs, sized by the data itself
//! - [`fit`]: basis specification and windowed linear extraction
//! - [`figures`]: comparison tables (CSV) and plots (SVG) of fitted points
//!   against the closed forms

pub mod coeffs;
pub mod consts;
pub mod figures;
pub mod fit;
pub mod rparam;
pub mod series;
pub mod svg;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] tlbe_core::Error),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("fit error: {0}")]
    Fit(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Float of the given precision from a small integer or f64 seed.
pub(crate) fn flt(prec: u32, v: f64) -> rug::Float {
    rug::Float::with_val(prec, v)
}
