//! Exact values of the shape q * pi^a * |D|^(b/2).

use std::fmt;

use astro_float::Consts;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::float::{self, HpFloat, GUARD_BITS, RM};
use super::rational::Rational;
use crate::dirichlet::QuadraticField;
use crate::error::{Error, Result};

/// `coeff * pi^pi_exp * |D|^(sqrt_d_exp / 2)`.
///
/// Canonical form: a zero coefficient carries no exponents, and the field is
/// present exactly when `sqrt_d_exp != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicReal {
    coeff: Rational,
    pi_exp: i64,
    sqrt_d_exp: i64,
    field: Option<QuadraticField>,
}

impl SymbolicReal {
    pub fn new(coeff: Rational, pi_exp: i64, sqrt_d_exp: i64, field: Option<QuadraticField>) -> Result<Self> {
        if sqrt_d_exp != 0 && field.is_none() {
            return Err(Error::validation("a |D| power needs a field context"));
        }
        Ok(Self::canonical(coeff, pi_exp, sqrt_d_exp, field))
    }

    fn canonical(coeff: Rational, pi_exp: i64, sqrt_d_exp: i64, field: Option<QuadraticField>) -> Self {
        if coeff.is_zero() {
            return SymbolicReal { coeff, pi_exp: 0, sqrt_d_exp: 0, field: None };
        }
        let field = if sqrt_d_exp == 0 { None } else { field };
        SymbolicReal { coeff, pi_exp, sqrt_d_exp, field }
    }

    pub fn rational(q: Rational) -> Self {
        Self::canonical(q, 0, 0, None)
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    /// `q * pi^a`.
    pub fn pi_power(q: Rational, pi_exp: i64) -> Self {
        Self::canonical(q, pi_exp, 0, None)
    }

    /// `|D|^(half_exp / 2)`.
    pub fn disc_power(field: QuadraticField, half_exp: i64) -> Self {
        Self::canonical(Rational::one(), 0, half_exp, Some(field))
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_exp(&self) -> i64 {
        self.pi_exp
    }

    pub fn sqrt_d_exp(&self) -> i64 {
        self.sqrt_d_exp
    }

    pub fn field(&self) -> Option<QuadraticField> {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive()
    }

    fn joint_field(&self, other: &SymbolicReal) -> Result<Option<QuadraticField>> {
        match (self.field, other.field) {
            (Some(a), Some(b)) if a.abs_d() != b.abs_d() => Err(Error::Context(a.abs_d(), b.abs_d())),
            (Some(a), _) => Ok(Some(a)),
            (None, b) => Ok(b),
        }
    }

    /// Component-wise product: coefficients multiply, exponents add.
    pub fn mul(&self, other: &SymbolicReal) -> Result<SymbolicReal> {
        let field = self.joint_field(other)?;
        Ok(Self::canonical(
            &self.coeff * &other.coeff,
            self.pi_exp + other.pi_exp,
            self.sqrt_d_exp + other.sqrt_d_exp,
            field,
        ))
    }

    pub fn scale(&self, q: &Rational) -> SymbolicReal {
        Self::canonical(&self.coeff * q, self.pi_exp, self.sqrt_d_exp, self.field)
    }

    pub fn recip(&self) -> Result<SymbolicReal> {
        Ok(Self::canonical(self.coeff.recip()?, -self.pi_exp, -self.sqrt_d_exp, self.field))
    }

    /// Sum of two values with identical atoms; anything else is an error.
    pub fn add(&self, other: &SymbolicReal) -> Result<SymbolicReal> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let field = self.joint_field(other)?;
        if self.pi_exp != other.pi_exp || self.sqrt_d_exp != other.sqrt_d_exp {
            return Err(Error::IncompatibleAtoms(format!("{self} + {other}")));
        }
        Ok(Self::canonical(&self.coeff + &other.coeff, self.pi_exp, self.sqrt_d_exp, field))
    }

    /// Moves every whole power of |D| into the coefficient, leaving
    /// `sqrt_d_exp` in {0, 1}.
    pub fn fold_disc(&self) -> SymbolicReal {
        let Some(field) = self.field else {
            return self.clone();
        };
        let rem = self.sqrt_d_exp.rem_euclid(2);
        let whole = (self.sqrt_d_exp - rem) / 2;
        let d = Rational::from(field.abs_d());
        let coeff = &self.coeff * &d.pow(whole).expect("|D| > 0");
        Self::canonical(coeff, self.pi_exp, rem, Some(field))
    }

    /// The exact rational value, when pi drops out and |D| enters to a whole power.
    pub fn is_rational(&self) -> Option<Rational> {
        if self.pi_exp != 0 || self.sqrt_d_exp % 2 != 0 {
            return None;
        }
        Some(self.fold_disc().coeff)
    }

    /// Same value after folding whole |D| powers.
    pub fn value_eq(&self, other: &SymbolicReal) -> bool {
        self.fold_disc() == other.fold_disc()
    }

    /// Numeric value with relative error below 2^(1 - precision_bits).
    pub fn to_float(&self, precision_bits: usize) -> HpFloat {
        let mut cc = float::consts();
        self.to_float_with(precision_bits, &mut cc)
    }

    pub fn to_float_with(&self, precision_bits: usize, cc: &mut Consts) -> HpFloat {
        let p = precision_bits.max(32);
        let w = p + GUARD_BITS;
        let folded = self.fold_disc();
        let mut x = float::from_rational(&folded.coeff, w);
        if folded.pi_exp != 0 {
            let pi = float::pi(w, cc);
            let pk = pi.powi(folded.pi_exp.unsigned_abs() as usize, w, RM);
            x = if folded.pi_exp > 0 { x.mul(&pk, w, RM) } else { x.div(&pk, w, RM) };
        }
        if folded.sqrt_d_exp == 1 {
            let f = folded.field.expect("canonical form keeps the field");
            let root = float::from_i64(f.abs_d() as i64, w).sqrt(w, RM);
            x = x.mul(&root, w, RM);
        }
        float::round_to(x, p)
    }

    pub fn to_f64(&self) -> f64 {
        float::to_f64(&self.to_float(128))
    }
}

impl fmt::Display for SymbolicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.pi_exp != 0 {
            write!(f, "·π^{}", self.pi_exp)?;
        }
        if self.sqrt_d_exp != 0 {
            let d = self.field.map(|q| q.abs_d()).unwrap_or(0);
            if self.sqrt_d_exp % 2 == 0 {
                write!(f, "·{}^{}", d, self.sqrt_d_exp / 2)?;
            } else {
                write!(f, "·{}^({}/2)", d, self.sqrt_d_exp)?;
            }
        }
        Ok(())
    }
}

impl Serialize for SymbolicReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let with_d = self.sqrt_d_exp != 0;
        let mut m = serializer.serialize_map(Some(if with_d { 4 } else { 3 }))?;
        m.serialize_entry("coeff", &self.coeff)?;
        m.serialize_entry("pi_exp", &self.pi_exp)?;
        m.serialize_entry("sqrtD_exp", &self.sqrt_d_exp)?;
        if let Some(f) = self.field.filter(|_| with_d) {
            m.serialize_entry("absD", &f.abs_d())?;
        }
        m.end()
    }
}
