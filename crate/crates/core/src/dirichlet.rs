//! Imaginary quadratic fields Q(sqrt(-k)) and their quadratic characters.
//!
//! Everything here is a pure function of small integers: discriminants,
//! the Kronecker symbol (D/n), splitting of primes, Hilbert symbols, the
//! local-norm test for -1 at ramified primes, and the Gauss sum.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::exact_arith::float::{self, HpComplex, GUARD_BITS, RM};
use crate::error::{Error, Result};

/// Q(sqrt(-k)) for squarefree k >= 1, carried by value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticField {
    k: u64,
    #[serde(rename = "D")]
    disc: i64,
}

impl QuadraticField {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::validation("k must be positive"));
        }
        if !is_squarefree(k) {
            return Err(Error::validation(format!("k = {k} is not squarefree")));
        }
        if k > (i64::MAX as u64) / 4 {
            return Err(Error::validation(format!("k = {k} is too large")));
        }
        let disc = if k % 4 == 3 { -(k as i64) } else { -4 * k as i64 };
        Ok(QuadraticField { k, disc })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// The (negative) field discriminant.
    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// |D|, which is also the conductor of the character.
    pub fn abs_d(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    /// chi_D(n) = (D / n).
    pub fn kronecker(&self, n: i64) -> i8 {
        kronecker(self.disc, n)
    }

    /// Primes dividing D, ascending.
    pub fn ramified_primes(&self) -> Vec<u64> {
        prime_factors(self.abs_d())
    }
}

pub fn make_field(k: u64) -> Result<QuadraticField> {
    QuadraticField::new(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeClass {
    Split,
    Inert,
    Ramified,
}

fn is_squarefree(mut k: u64) -> bool {
    let mut p = 2u64;
    while p * p <= k {
        if k % p == 0 {
            k /= p;
            if k % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::validation(format!("{p} is not prime")))
    }
}

/// Kronecker symbol (a / n) for arbitrary integers.
pub fn kronecker(a: i64, n: i64) -> i8 {
    // (0,1,0,-1,0,-1,0,1)[x & 7] = (2 / x) for odd x
    const TAB2: [i8; 8] = [0, 1, 0, -1, 0, -1, 0, 1];
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let v = n.trailing_zeros();
    n >>= v;
    let mut k: i8 = if v % 2 == 0 { 1 } else { TAB2[(a & 7) as usize] };
    if n < 0 {
        n = -n;
        if a < 0 {
            k = -k;
        }
    }
    a = a.rem_euclid(n);
    loop {
        if a == 0 {
            return if n == 1 { k } else { 0 };
        }
        let v = a.trailing_zeros();
        a >>= v;
        if v % 2 == 1 {
            k *= TAB2[(n & 7) as usize];
        }
        if a & n & 2 != 0 {
            k = -k;
        }
        let r = a;
        a = n % r;
        n = r;
    }
}

pub fn classify_prime(field: &QuadraticField, p: u64) -> Result<PrimeClass> {
    require_prime(p)?;
    Ok(match field.kronecker(p as i64) {
        0 => PrimeClass::Ramified,
        1 => PrimeClass::Split,
        _ => PrimeClass::Inert,
    })
}

fn split_valuation(mut x: i64, p: i64) -> (u32, i64) {
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    (v, x)
}

/// Hilbert symbol (a, b)_p for nonzero integers and a prime p.
pub fn hilbert_symbol(a: i64, b: i64, p: u64) -> Result<i8> {
    if a == 0 || b == 0 {
        return Err(Error::domain("Hilbert symbol needs nonzero arguments"));
    }
    require_prime(p)?;
    let pi = p as i64;
    let (alpha, u) = split_valuation(a, pi);
    let (beta, v) = split_valuation(b, pi);
    if p == 2 {
        let eps = |x: i64| (x.rem_euclid(4) - 1) / 2;
        let omega = |x: i64| {
            let r = x.rem_euclid(8);
            if r == 1 || r == 7 { 0 } else { 1 }
        };
        let e = eps(u) * eps(v) + alpha as i64 * omega(v) + beta as i64 * omega(u);
        Ok(if e % 2 == 0 { 1 } else { -1 })
    } else {
        let eps_p = ((p - 1) / 2) as i64;
        let mut s: i8 = if (alpha as i64 * beta as i64 * eps_p) % 2 == 0 { 1 } else { -1 };
        if beta % 2 == 1 {
            s *= kronecker(u, pi);
        }
        if alpha % 2 == 1 {
            s *= kronecker(v, pi);
        }
        Ok(s)
    }
}

/// Is `a` a norm from the completion of the field above p?
pub fn is_local_norm(field: &QuadraticField, p: u64, a: i64) -> Result<bool> {
    Ok(hilbert_symbol(a, -(field.k() as i64), p)? == 1)
}

/// Primes where SU(n,1) over the field fails to be quasi-split.
///
/// Empty for even n and whenever (n-1)/2 is even; otherwise the ramified
/// primes at which -1 is not a local norm.
pub fn t_ell(field: &QuadraticField, n: u32) -> Result<BTreeSet<u64>> {
    if n < 3 {
        return Err(Error::validation(format!("n = {n} must be at least 3")));
    }
    let mut out = BTreeSet::new();
    if n % 2 == 0 || ((n - 1) / 2) % 2 == 0 {
        return Ok(out);
    }
    for p in field.ramified_primes() {
        if !is_local_norm(field, p, -1)? {
            out.insert(p);
        }
    }
    Ok(out)
}

/// G(1, chi) = sum_{r=1}^{|D|} chi(r) e^(2 pi i r / |D|), by direct summation.
pub fn gauss_sum_numeric(field: &QuadraticField, precision_bits: usize) -> HpComplex {
    let p = precision_bits.max(64);
    let w = p + GUARD_BITS;
    let mut cc = float::consts();
    let f = field.abs_d();
    let two_pi_over_f = float::pi(w, &mut cc)
        .mul(&float::from_i64(2, w), w, RM)
        .div(&float::from_i64(f as i64, w), w, RM);
    let mut acc = HpComplex::zero(w);
    for r in 1..=f {
        let chi = field.kronecker(r as i64);
        if chi == 0 {
            continue;
        }
        let theta = two_pi_over_f.mul(&float::from_i64(r as i64, w), w, RM);
        let term = HpComplex { re: theta.cos(w, RM, &mut cc), im: theta.sin(w, RM, &mut cc) };
        acc = if chi > 0 { acc.add(&term, w) } else { acc.sub(&term, w) };
    }
    HpComplex { re: float::round_to(acc.re, p), im: float::round_to(acc.im, p) }
}

/// Sign s in G(1, chi) = s * i * sqrt(|D|), read off the numeric Gauss sum.
pub fn gauss_sum_sign(field: &QuadraticField) -> i8 {
    let g = gauss_sum_numeric(field, 128);
    if g.im.is_negative() {
        -1
    } else {
        1
    }
}
