//! Cuspidal cohomology bounds and the rationality of sqrt|D| L(2n+1) / (2 pi)^(2n+1).

use num_bigint::BigInt;
use serde::Serialize;

use crate::dirichlet::{t_ell, QuadraticField};
use crate::error::{Error, Result};
use crate::exact_arith::{bernoulli, factorial, Rational, SymbolicReal};
use crate::lfunctions::l_odd_exact;
use crate::su_spectrum::{multiplicity, validate, ErrInputs, HCParam, MultiplicityResult};

/// dim H^i(g, K; pi_tau (x) F): 1 in degree n when the coefficients match, else 0.
pub fn gk_cohomology_dim(n: u32, i: u32, coefficient_matches: bool) -> Result<u8> {
    if n < 3 {
        return Err(Error::validation(format!("n = {n} must be at least 3")));
    }
    if i > 2 * n {
        return Err(Error::validation(format!("degree {i} outside [0, {}]", 2 * n)));
    }
    Ok(u8::from(coefficient_matches && i == n))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CohomologyBound {
    /// d_tau vol h_m.
    pub main_term: SymbolicReal,
    /// Exact lower bound (odd n).
    pub exact: Option<Rational>,
    /// main_term - error_bound (even n, when C is known).
    pub lower_bound: Option<f64>,
    pub defect: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Lower bound for dim H^n_cusp(Gamma(m), F_tau) from the multiplicity of pi_tau.
pub fn cusp_cohomology_lower_bound(
    field: &QuadraticField,
    n: u32,
    tau: &HCParam,
    h_m: &BigInt,
    err: Option<&ErrInputs>,
) -> Result<CohomologyBound> {
    let flags = validate(tau);
    if !flags.cohomological {
        return Err(Error::domain(format!("{tau} does not contribute to cohomology")));
    }
    let MultiplicityResult { main_term, exact, error_bound, .. } = multiplicity(field, n, tau, h_m, err)?;
    let main_f = main_term.to_f64();
    let note = (n % 2 == 0 && error_bound.is_none()).then(|| "bound requires C".to_string());
    Ok(CohomologyBound {
        lower_bound: error_bound.map(|b| main_f - b),
        defect: error_bound,
        main_term,
        exact,
        note,
    })
}

/// sqrt|D| L(2n+1, chi) / (2 pi)^(2n+1), exact.
pub fn rationality_lhs(field: &QuadraticField, n: u32) -> Result<Rational> {
    if n < 1 {
        return Err(Error::validation("n must be at least 1"));
    }
    let s = 2 * n as i64 + 1;
    let two_pi = SymbolicReal::pi_power(Rational::from(BigInt::from(2).pow(s as u32)), s).recip()?;
    let v = l_odd_exact(field, s)?.mul(&two_pi)?.mul(&SymbolicReal::disc_power(*field, 1))?;
    v.is_rational()
        .ok_or_else(|| Error::IdentityFailure(format!("{v} is not rational")))
}

/// The parameters tau_i = 2n+2-i on 2n-1 and on 2n+1 coordinates.
pub fn remark_taus(n: u32) -> Result<(HCParam, HCParam)> {
    if n < 2 {
        return Err(Error::validation("n must be at least 2"));
    }
    let t = |len: u32| HCParam::new((1..=len as i64).map(|i| 2 * n as i64 + 2 - i).collect());
    Ok((t(2 * n - 1)?, t(2 * n + 1)?))
}

fn check_pair(n: u32, tau1: &HCParam, tau2: &HCParam) -> Result<()> {
    if n < 2 {
        return Err(Error::validation("n must be at least 2"));
    }
    if tau1.n() != 2 * n - 1 || tau2.n() != 2 * n + 1 {
        return Err(Error::domain(format!(
            "parameters must have lengths {} and {}, got {} and {}",
            2 * n - 1,
            2 * n + 1,
            tau1.n(),
            tau2.n()
        )));
    }
    if tau1.taus() != &tau2.taus()[..2 * n as usize - 1] {
        return Err(Error::domain(format!("{tau1} is not the head of {tau2}")));
    }
    if !validate(tau1).integrable || !validate(tau2).integrable {
        return Err(Error::domain(format!("{tau1} and {tau2} must both be integrable")));
    }
    Ok(())
}

/// prod_{i<2n} (tau1_i - tau1_{2n}) / prod_{i<j<=2n+2, j>=2n} (tau2_i - tau2_j).
pub fn tau_product_ratio(n: u32, tau1: &HCParam, tau2: &HCParam) -> Result<Rational> {
    check_pair(n, tau1, tau2)?;
    let n = n as usize;
    let t1 = tau1.full();
    let t2 = tau2.full();
    let num: BigInt = (0..2 * n - 1).map(|i| BigInt::from(t1[i] - t1[2 * n - 1])).product();
    let mut den = BigInt::from(1);
    for j in 2 * n - 1..2 * n + 2 {
        for i in 0..j {
            den *= t2[i] - t2[j];
        }
    }
    Rational::new(num, den)
}

/// The stated simplification of [`tau_product_ratio`] for [`remark_taus`]:
/// 1/((2n-1)! (2n)! (2n^2+3n+2)) prod_{i<2n} (2n^2+5n-i)/(2n^2+5n+3-i).
pub fn remark_closed_form(n: u32) -> Result<Rational> {
    if n < 2 {
        return Err(Error::validation("n must be at least 2"));
    }
    let n = n as i64;
    let base = Rational::new(
        1,
        factorial(2 * n as u64 - 1) * factorial(2 * n as u64) * BigInt::from(2 * n * n + 3 * n + 2),
    )?;
    let prod: Rational = (1..2 * n)
        .map(|i| Rational::new(2 * n * n + 5 * n - i, 2 * n * n + 5 * n + 3 - i).expect("positive"))
        .product();
    Ok(base * prod)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalityInputs {
    pub tau1: HCParam,
    pub tau2: HCParam,
    #[serde(serialize_with = "ser_bigint")]
    pub h1: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub h2: BigInt,
    pub m1: u64,
    pub m2: u64,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl RationalityInputs {
    /// The staircase parameters of [`remark_taus`] with h = 1 and m = 3.
    pub fn remark(n: u32) -> Result<Self> {
        let (tau1, tau2) = remark_taus(n)?;
        Ok(RationalityInputs { tau1, tau2, h1: BigInt::from(1), h2: BigInt::from(1), m1: 3, m2: 3 })
    }
}

/// Terms of the right-hand side other than the power of |D|.
fn rhs_without_disc(field: &QuadraticField, n: u32, inp: &RationalityInputs) -> Result<Rational> {
    check_pair(n, &inp.tau1, &inp.tau2)?;
    if inp.m1 < 3 || inp.m2 < 3 {
        return Err(Error::domain("levels m must be at least 3"));
    }
    let m1 = multiplicity(field, 2 * n - 1, &inp.tau1, &inp.h1, None)?;
    let m2 = multiplicity(field, 2 * n + 1, &inp.tau2, &inp.h2, None)?;
    let exact = |r: &MultiplicityResult| {
        r.exact.clone().ok_or_else(|| Error::IdentityFailure("odd-n multiplicity was not exact".into()))
    };
    let ratio = exact(&m2)? / exact(&m1)?;
    let h = Rational::new(&inp.h1 * 32, inp.h2.clone())?;
    let taus = tau_product_ratio(n, &inp.tau1, &inp.tau2)?;
    let mut lambdas = Rational::one();
    for p in t_ell(field, 2 * n - 1)? {
        let pb = BigInt::from(p);
        lambdas = lambdas * Rational::new(pb.pow(2 * n) - 1, &pb + 1)?;
    }
    for p in t_ell(field, 2 * n + 1)? {
        let pb = BigInt::from(p);
        lambdas = lambdas * Rational::new(&pb + 1, pb.pow(2 * n + 2) - 1)?;
    }
    let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
    let bern = Rational::from(factorial(2 * n as u64 + 2)) / (sign * bernoulli(2 * n as usize + 2));
    Ok(ratio * h * taus * lambdas * bern)
}

/// The right-hand side of the rationality identity, assembled from the two
/// multiplicities. The power of |D| is |D|^(-2n), which is what dividing the
/// two multiplicity formulas produces.
pub fn rationality_rhs(field: &QuadraticField, n: u32, inp: &RationalityInputs) -> Result<Rational> {
    let d = Rational::from(field.abs_d());
    Ok(rhs_without_disc(field, n, inp)? * d.pow(-2 * n as i64)?)
}

/// The same expression with |D|^(2n) in place of |D|^(-2n).
pub fn rationality_rhs_printed(field: &QuadraticField, n: u32, inp: &RationalityInputs) -> Result<Rational> {
    let d = Rational::from(field.abs_d());
    Ok(rhs_without_disc(field, n, inp)? * d.pow(2 * n as i64)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalityReport {
    pub k: u64,
    pub n: u32,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
    /// The variant with |D|^(2n); equals lhs * |D|^(4n).
    pub rhs_printed: Rational,
    pub printed_over_lhs: Rational,
    pub inputs: RationalityInputs,
}

pub fn rationality_report(field: &QuadraticField, n: u32, inp: &RationalityInputs) -> Result<RationalityReport> {
    let lhs = rationality_lhs(field, n)?;
    let rhs = rationality_rhs(field, n, inp)?;
    let rhs_printed = rationality_rhs_printed(field, n, inp)?;
    let printed_over_lhs = rhs_printed.checked_div(&lhs)?;
    Ok(RationalityReport {
        k: field.k(),
        n,
        equal: lhs == rhs,
        lhs,
        rhs,
        rhs_printed,
        printed_over_lhs,
        inputs: inp.clone(),
    })
}
