//! High-precision binary floating point glue over `astro-float`.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::{BigInt, Sign};

use super::rational::Rational;

pub type HpFloat = BigFloat;

pub const RM: RoundingMode = RoundingMode::ToEven;

/// Default working precision in bits.
pub const DEFAULT_PRECISION: usize = 256;

/// Extra bits carried internally so that a final rounding to the requested
/// precision dominates the accumulated error.
pub const GUARD_BITS: usize = 64;

pub fn consts() -> Consts {
    Consts::new().expect("astro-float constant cache")
}

pub fn pi(p: usize, cc: &mut Consts) -> HpFloat {
    cc.pi(p, RM)
}

pub fn from_i64(n: i64, p: usize) -> HpFloat {
    BigFloat::from_i64(n, p)
}

pub fn from_bigint(n: &BigInt, p: usize) -> HpFloat {
    let (sign, limbs) = n.to_u64_digits();
    let base = BigFloat::from_u64(u64::MAX, p).add(&BigFloat::from_u64(1, p), p, RM);
    let mut acc = BigFloat::from_u64(0, p);
    for limb in limbs.iter().rev() {
        acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(*limb, p), p, RM);
    }
    if sign == Sign::Minus {
        acc.neg()
    } else {
        acc
    }
}

pub fn from_rational(q: &Rational, p: usize) -> HpFloat {
    let w = p + GUARD_BITS;
    from_bigint(q.numer(), w).div(&from_bigint(q.denom(), w), p, RM)
}

pub fn round_to(mut x: HpFloat, p: usize) -> HpFloat {
    // set_precision only fails on an invalid precision value
    let _ = x.set_precision(p, RM);
    x
}

/// Nearest f64 (via the decimal rendering, which round-trips through Rust's parser).
pub fn to_f64(x: &HpFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    x.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

/// Scientific-notation decimal string rounded to `digits` significant digits.
pub fn to_decimal(x: &HpFloat, digits: usize) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return "0".to_string();
    }
    let s = x.to_string();
    let (mant, exp) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().unwrap_or(0)),
        None => (s.as_str(), 0),
    };
    let negative = mant.starts_with('-');
    let mut ds: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    // mantissa is d.ddd; strip any leading zeros
    let mut exp = exp;
    while ds.len() > 1 && ds[0] == 0 {
        ds.remove(0);
        exp -= 1;
    }
    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    exp += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    }
    while ds.len() > 1 && *ds.last().unwrap() == 0 {
        ds.pop();
    }
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push((b'0' + ds[0]) as char);
    if ds.len() > 1 {
        out.push('.');
        out.extend(ds[1..].iter().map(|d| (b'0' + d) as char));
    }
    if exp != 0 {
        out.push_str(&format!("e{exp}"));
    }
    out
}

/// Significant decimal digits that `p` bits can honestly carry.
pub fn digits_for_bits(p: usize) -> usize {
    ((p as f64) * std::f64::consts::LOG10_2).floor() as usize - 2
}

/// |a - b| / |b| as an f64 (|a| when b = 0).
pub fn rel_diff(a: &HpFloat, b: &HpFloat, p: usize) -> f64 {
    let d = a.sub(b, p, RM).abs();
    if b.is_zero() {
        return to_f64(&d);
    }
    to_f64(&d.div(&b.abs(), p, RM))
}

#[derive(Clone, Debug)]
pub struct HpComplex {
    pub re: HpFloat,
    pub im: HpFloat,
}

impl HpComplex {
    pub fn zero(p: usize) -> Self {
        HpComplex { re: from_i64(0, p), im: from_i64(0, p) }
    }

    pub fn add(&self, o: &HpComplex, p: usize) -> HpComplex {
        HpComplex { re: self.re.add(&o.re, p, RM), im: self.im.add(&o.im, p, RM) }
    }

    pub fn sub(&self, o: &HpComplex, p: usize) -> HpComplex {
        HpComplex { re: self.re.sub(&o.re, p, RM), im: self.im.sub(&o.im, p, RM) }
    }

    pub fn mul(&self, o: &HpComplex, p: usize) -> HpComplex {
        let re = self.re.mul(&o.re, p, RM).sub(&self.im.mul(&o.im, p, RM), p, RM);
        let im = self.re.mul(&o.im, p, RM).add(&self.im.mul(&o.re, p, RM), p, RM);
        HpComplex { re, im }
    }

    pub fn scale(&self, s: &HpFloat, p: usize) -> HpComplex {
        HpComplex { re: self.re.mul(s, p, RM), im: self.im.mul(s, p, RM) }
    }

    pub fn norm_sqr(&self, p: usize) -> HpFloat {
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), p, RM)
    }

    pub fn abs(&self, p: usize) -> HpFloat {
        self.norm_sqr(p).sqrt(p, RM)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_conversion_is_exact_when_it_fits() {
        let n: BigInt = BigInt::from(3u8).pow(100);
        let f = from_bigint(&n, 256);
        assert_eq!(f.to_string().parse::<f64>().unwrap(), 3f64.powi(100));
        let neg = from_bigint(&-n, 256);
        assert!(neg.is_negative());
    }

    #[test]
    fn decimal_rounding() {
        let x = from_rational(&Rational::new(2, 3).unwrap(), 128);
        assert_eq!(to_decimal(&x, 5), "6.6667e-1");
        let y = from_rational(&Rational::new(9999999, 1).unwrap(), 128);
        assert_eq!(to_decimal(&y, 3), "1e7");
        assert_eq!(to_decimal(&from_i64(-5, 64), 4), "-5");
        assert_eq!(to_f64(&x), 2.0 / 3.0);
    }

    #[test]
    fn pi_to_f64() {
        let mut cc = consts();
        assert_eq!(to_f64(&pi(256, &mut cc)), std::f64::consts::PI);
    }
}
