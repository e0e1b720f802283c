//! Exact scalars: rationals, Bernoulli numbers, and the symbolic product type
//! `q * pi^a * |D|^(b/2)` every formula in this crate evaluates to.

mod bernoulli;
pub mod float;
mod rational;
mod symbolic;

pub use bernoulli::{bernoulli, bernoulli_poly};
pub use float::{HpComplex, HpFloat, DEFAULT_PRECISION};
pub use rational::{binomial, factorial, Rational};
pub use symbolic::SymbolicReal;

/// `a * b` for symbolic values.
pub fn sym_mul(a: &SymbolicReal, b: &SymbolicReal) -> crate::Result<SymbolicReal> {
    a.mul(b)
}

/// `a + b` for symbolic values with identical atoms.
pub fn sym_add(a: &SymbolicReal, b: &SymbolicReal) -> crate::Result<SymbolicReal> {
    a.add(b)
}

pub fn is_rational(a: &SymbolicReal) -> Option<Rational> {
    a.is_rational()
}

pub fn to_float(a: &SymbolicReal, precision_bits: usize) -> HpFloat {
    a.to_float(precision_bits)
}
