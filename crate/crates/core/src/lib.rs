//! Exact finite-size machinery for the boundary entropy generating function
//! F_L(x) of the dense loop model at bulk loop weight 1 (bond percolation),
//! on a cylinder or a strip.
//!
//! - [`pattern`]: link patterns, the generator action, loop counts
//! - [`dyck`]: Dyck paths, the pattern bijection, signed tile sums, ribbons
//! - [`comb`]: alternating-sign-matrix counting families (exact products)
//! - [`groundstate`]: brute-force Hamiltonian kernel oracle
//! - [`genfun`]: the generating function as an exact integer polynomial
//! - [`closedform`]: binomial/determinant closed forms and identity checks
//!
//! Everything in this crate is exact: integers and rationals are
//! arbitrary-precision (GMP), no floating point anywhere.

pub mod closedform;
pub mod comb;
pub mod dyck;
pub mod genfun;
pub mod groundstate;
pub mod pattern;
pub mod reference;

mod error;

pub use error::Error;
pub use pattern::{BoundaryKind, LinkPattern};

pub type Result<T> = std::result::Result<T, Error>;
