//! Exact evaluation of multiplicities, covolumes, formal degrees and
//! L-values for integrable discrete series of SU(n,1) over imaginary
//! quadratic fields.

mod error;

pub mod dirichlet;
pub mod exact_arith;
pub mod lfunctions;
pub mod su_spectrum;
pub mod applications;
pub mod selfcheck;

pub use error::{Error, Result};
