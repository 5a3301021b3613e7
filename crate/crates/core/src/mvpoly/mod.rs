//! Sparse multivariate polynomials with exact coefficients.
//!
//! Variables are positional. Names only matter for parsing and printing; the
//! default names are `x1..xn` for three or fewer variables and `x0..x{n-1}`
//! otherwise.

mod gcd;
mod hpoly;
mod mpoly;
mod parse;
mod resultant;

pub use gcd::{mpoly_gcd, mv_gcd};
pub use hpoly::{HPoly, ProjPoint, RationalMap};
pub use mpoly::{default_names, Exponent, MPoly};
pub use parse::{parse_hpoly, parse_mpoly};
pub use resultant::{bivariate_resultant, interpolate};
