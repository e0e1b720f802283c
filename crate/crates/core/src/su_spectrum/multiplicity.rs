//! Multiplicities of integrable discrete series in principal congruence subgroups.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use super::param::{formal_degree, validate, HCParam};
use super::volume::covolume;
use crate::dirichlet::QuadraticField;
use crate::error::{Error, Result};
use crate::exact_arith::{Rational, SymbolicReal};

/// Inputs for the error envelope of the even-n multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub enum ErrInputs {
    /// A ready-made constant C and the level m.
    Constant { c: f64, m: u64 },
    /// The factors of C: |kappa|, dim E_{tau - delta_K}, the summed cusp volumes, and m.
    Factors { kappa_abs: f64, dim_e: u64, sum_cusp_vol: f64, m: u64 },
}

impl ErrInputs {
    pub fn level(&self) -> u64 {
        match *self {
            ErrInputs::Constant { m, .. } | ErrInputs::Factors { m, .. } => m,
        }
    }
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiplicityResult {
    pub main_term: SymbolicReal,
    /// The exact multiplicity (odd n).
    pub exact: Option<Rational>,
    /// |m - main_term| <= error_bound (even n, when C is known).
    pub error_bound: Option<f64>,
    #[serde(serialize_with = "ser_bigint")]
    pub h_m: BigInt,
    /// Set when an odd-n result is not an integer, which a genuine index h_m cannot produce.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

/// C = |kappa| dim E sum_vol / (k / (8 (n+1)))^(n/2), for even n.
pub fn error_constant(n: u32, k: u64, kappa_abs: f64, dim_e: u64, sum_cusp_vol: f64) -> Result<f64> {
    if n % 2 == 1 {
        return Err(Error::domain(format!("the error constant exists only for even n, got {n}")));
    }
    if k == 0 || dim_e == 0 || kappa_abs < 0.0 || sum_cusp_vol < 0.0 {
        return Err(Error::validation("error-constant inputs must be nonnegative, k and dim E positive"));
    }
    let base = k as f64 / (8.0 * (n as f64 + 1.0));
    Ok(kappa_abs * dim_e as f64 * sum_cusp_vol / base.powi(n as i32 / 2))
}

/// m(Gamma(m), pi_tau) = d_tau vol(Gamma \ G) h_m (+ O(h_m / m^n) for even n).
pub fn multiplicity(
    field: &QuadraticField,
    n: u32,
    tau: &HCParam,
    h_m: &BigInt,
    err: Option<&ErrInputs>,
) -> Result<MultiplicityResult> {
    if tau.n() != n {
        return Err(Error::validation(format!("parameter {tau} has length {}, expected {n}", tau.n())));
    }
    if !h_m.is_positive() {
        return Err(Error::validation("h_m must be positive"));
    }
    if !validate(tau).integrable {
        return Err(Error::domain(format!("{tau} is not integrable")));
    }
    let d = formal_degree(tau)?;
    let vol = covolume(field, n)?;
    let main_term = d.mul(&vol)?.scale(&Rational::from(h_m.clone())).fold_disc();
    let mut result = MultiplicityResult { main_term, exact: None, error_bound: None, h_m: h_m.clone(), warning: None };
    if n % 2 == 1 {
        let exact = result.main_term.is_rational().ok_or_else(|| {
            Error::IdentityFailure(format!("odd-n main term {} did not fold to a rational", result.main_term))
        })?;
        if !exact.is_integer() {
            let msg = format!("multiplicity {exact} is not an integer; h_m = {h_m} cannot be a genuine index");
            log::warn!("{msg}");
            result.warning = Some(msg);
        }
        result.exact = Some(exact);
    } else if let Some(e) = err {
        let m = e.level();
        if m < 3 {
            return Err(Error::validation(format!("level m = {m} must be at least 3")));
        }
        let c = match *e {
            ErrInputs::Constant { c, .. } => {
                if c < 0.0 {
                    return Err(Error::validation("C must be nonnegative"));
                }
                c
            }
            ErrInputs::Factors { kappa_abs, dim_e, sum_cusp_vol, .. } => {
                error_constant(n, field.k(), kappa_abs, dim_e, sum_cusp_vol)?
            }
        };
        let h = Rational::from(h_m.clone()).to_f64();
        result.error_bound = Some(c * h / (m as f64).powi(n as i32));
    }
    Ok(result)
}

/// `coeff * sqrt(radicand)` with a squarefree integer radicand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SqrtValue {
    pub coeff: Rational,
    pub radicand: u64,
}

impl SqrtValue {
    /// sqrt(q) * c, simplified.
    pub fn new(q: &Rational, c: Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::domain("square root of a negative number"));
        }
        // sqrt(a/b) = sqrt(a b) / b
        let ab = q.numer() * q.denom();
        let ab = u64::try_from(ab).map_err(|_| Error::domain("radicand out of range"))?;
        let (outside, inside) = split_square(ab);
        let coeff = c * Rational::new(outside, q.denom().clone())?;
        Ok(SqrtValue { coeff, radicand: inside })
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * (self.radicand as f64).sqrt()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.radicand == 1).then(|| self.coeff.clone())
    }
}

/// x = outside^2 * inside with inside squarefree.
fn split_square(mut x: u64) -> (u64, u64) {
    if x == 0 {
        return (0, 1);
    }
    let mut outside = 1u64;
    let mut p = 2u64;
    while p * p <= x {
        while x % (p * p) == 0 {
            x /= p * p;
            outside *= p;
        }
        p += 1;
    }
    (outside, x)
}

/// sqrt(k / (8 (n+1))) * m.
pub fn n2_volume_lower_bound(k: u64, n: u32, m: u64) -> Result<SqrtValue> {
    if m < 3 {
        return Err(Error::validation(format!("level m = {m} must be at least 3")));
    }
    if k == 0 {
        return Err(Error::validation("k must be positive"));
    }
    let q = Rational::new(k, 8 * (n as u64 + 1))?;
    SqrtValue::new(&q, Rational::from(m))
}

/// |C / (d_tau vol)|^(1/n): levels m at or above this give a positive multiplicity.
pub fn positivity_threshold(field: &QuadraticField, n: u32, tau: &HCParam, c: f64) -> Result<f64> {
    if c < 0.0 || c.is_nan() {
        return Err(Error::validation("C must be nonnegative"));
    }
    let main = multiplicity(field, n, tau, &BigInt::from(1), None)?.main_term;
    Ok((c / main.to_f64()).abs().powf(1.0 / n as f64))
}
