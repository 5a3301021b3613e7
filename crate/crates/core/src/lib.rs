//! Exact validation, classification and construction of monoid hypersurfaces.

pub mod construct;
pub mod error;
pub mod exactnum;
pub mod intersect;
pub mod linalg;
pub mod monoid;
pub mod mvpoly;
pub mod par;
pub mod quartic;
pub mod sample;
pub mod singclass;

pub use error::{MonoidError, Result};
