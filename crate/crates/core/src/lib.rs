//! Exact computations for real Lie superalgebras.

pub mod cartan;
pub mod catalog;
pub mod cliffrep;
pub mod cones;
pub mod error;
pub mod exactnum;
pub mod glinalg;
pub mod hwm;
pub mod lsa;
pub mod orbits;

pub use error::{Error, Result};
