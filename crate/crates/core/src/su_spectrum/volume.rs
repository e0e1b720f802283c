//! Covolume of the principal arithmetic lattice in SU(n,1).

use num_bigint::BigInt;

use crate::dirichlet::{t_ell, QuadraticField};
use crate::error::{Error, Result};
use crate::exact_arith::{factorial, Rational, SymbolicReal};
use crate::lfunctions::{lambda_p, z_ell};

/// (n-1)(n+2)/4 for odd n, n(n+3)/4 for even n.
pub fn s_exponent(n: u32) -> Result<Rational> {
    if n < 3 {
        return Err(Error::validation(format!("n = {n} must be at least 3")));
    }
    let n = n as i64;
    let num = if n % 2 == 1 { (n - 1) * (n + 2) } else { n * (n + 3) };
    Rational::new(num, 4)
}

/// Net integer power of |D| in the covolume: (n^2-1)/4 for odd n, n(n+2)/4 for even n.
pub fn net_disc_power(n: u32) -> i64 {
    let n = n as i64;
    if n % 2 == 1 {
        (n * n - 1) / 4
    } else {
        n * (n + 2) / 4
    }
}

/// The covolume before whole powers of |D| are folded into the coefficient,
/// so `sqrt_d_exp` records twice the net |D| exponent.
pub fn covolume_unfolded(field: &QuadraticField, n: u32) -> Result<SymbolicReal> {
    let s = s_exponent(n)?;
    // s(n) is a half-integer at worst
    let half = &s * &Rational::from(2i64);
    let half_exp = i64::try_from(half.numer().clone()).map_err(|_| Error::domain("exponent overflow"))?;
    let mut acc = SymbolicReal::pi_power(Rational::one(), n as i64).mul(&SymbolicReal::disc_power(*field, half_exp))?;
    for i in 1..=n as u64 {
        let c = Rational::new(factorial(i - 1), BigInt::from(2).pow(i as u32 + 1))?;
        acc = acc.mul(&SymbolicReal::pi_power(c, -(i as i64 + 1)))?;
    }
    for s in 2..=n as i64 + 1 {
        acc = acc.mul(&z_ell(field, s)?)?;
    }
    if n % 2 == 1 {
        for p in t_ell(field, n)? {
            acc = acc.scale(&lambda_p(field, p, n)?);
        }
    }
    if acc.pi_exp() != n as i64 || acc.sqrt_d_exp() != 2 * net_disc_power(n) {
        return Err(Error::IdentityFailure(format!(
            "covolume exponents pi^{} |D|^({}/2) for n = {n}",
            acc.pi_exp(),
            acc.sqrt_d_exp()
        )));
    }
    Ok(acc)
}

/// vol(Gamma \ G) = pi^n |D|^s(n) prod (i-1)!/(2 pi)^(i+1) prod Z(s) prod lambda_p,
/// with whole |D| powers folded into the coefficient.
pub fn covolume(field: &QuadraticField, n: u32) -> Result<SymbolicReal> {
    Ok(covolume_unfolded(field, n)?.fold_disc())
}
