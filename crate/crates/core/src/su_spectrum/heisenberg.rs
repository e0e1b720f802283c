//! The Heisenberg group N = exp(g_1 + g_2) inside SU(n,1), over Q(i).

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::Rational;

/// re + i im with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QComplex {
    pub re: Rational,
    pub im: Rational,
}

impl QComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        QComplex { re, im }
    }

    pub fn real(re: Rational) -> Self {
        QComplex { re, im: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        QComplex { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        QComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for &QComplex {
    type Output = QComplex;
    fn add(self, o: &QComplex) -> QComplex {
        QComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &QComplex {
    type Output = QComplex;
    fn sub(self, o: &QComplex) -> QComplex {
        QComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &QComplex {
    type Output = QComplex;
    fn mul(self, o: &QComplex) -> QComplex {
        QComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex { re: -self.re.clone(), im: -self.im.clone() }
    }
}

/// <x, y> = sum x_i conj(y_i).
pub fn hermitian(x: &[QComplex], y: &[QComplex]) -> QComplex {
    x.iter().zip(y).fold(QComplex::zero(), |acc, (a, b)| &acc + &(a * &b.conj()))
}

/// u(x, mu) with x in C^(n-1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeisenbergElement {
    pub x: Vec<QComplex>,
    pub mu: Rational,
}

pub type Matrix = Vec<Vec<QComplex>>;

impl HeisenbergElement {
    pub fn new(x: Vec<QComplex>, mu: Rational) -> Result<Self> {
        if x.len() < 2 {
            return Err(Error::validation("need n >= 3, i.e. at least two x coordinates"));
        }
        Ok(HeisenbergElement { x, mu })
    }

    pub fn identity(n: u32) -> Self {
        HeisenbergElement { x: vec![QComplex::zero(); n as usize - 1], mu: Rational::zero() }
    }

    /// The central element u_2(mu).
    pub fn central(n: u32, mu: Rational) -> Self {
        HeisenbergElement { x: vec![QComplex::zero(); n as usize - 1], mu }
    }

    pub fn n(&self) -> u32 {
        self.x.len() as u32 + 1
    }

    pub fn inverse(&self) -> Self {
        HeisenbergElement { x: self.x.iter().map(|c| -c).collect(), mu: -self.mu.clone() }
    }
}

/// u(x1, mu1) u(x2, mu2) = u(x1 + x2, mu1 + mu2 + Im <x1, x2>).
pub fn heisenberg_mul(a: &HeisenbergElement, b: &HeisenbergElement) -> Result<HeisenbergElement> {
    if a.x.len() != b.x.len() {
        return Err(Error::validation(format!("dimension mismatch: n = {} vs n = {}", a.n(), b.n())));
    }
    let x = a.x.iter().zip(&b.x).map(|(p, q)| p + q).collect();
    let mu = &(&a.mu + &b.mu) + &hermitian(&a.x, &b.x).im;
    Ok(HeisenbergElement { x, mu })
}

/// The (n+1) x (n+1) matrix u_2(mu) + X(x).
pub fn heisenberg_matrix(e: &HeisenbergElement) -> Matrix {
    let size = e.x.len() + 2;
    let last = size - 1;
    let half_norm = QComplex::real(hermitian(&e.x, &e.x).re / Rational::from(2i64));
    let i_mu = QComplex::new(Rational::zero(), e.mu.clone());
    let mut m = identity(size);
    m[0][0] = &(&m[0][0] - &i_mu) - &half_norm;
    m[0][last] = &i_mu + &half_norm;
    m[last][0] = &(-&i_mu) - &half_norm;
    m[last][last] = &(&m[last][last] + &i_mu) + &half_norm;
    for (c, xc) in e.x.iter().enumerate() {
        m[0][c + 1] = xc.clone();
        m[last][c + 1] = xc.clone();
        m[c + 1][0] = -&xc.conj();
        m[c + 1][last] = xc.conj();
    }
    m
}

pub fn identity(size: usize) -> Matrix {
    (0..size)
        .map(|r| (0..size).map(|c| if r == c { QComplex::one() } else { QComplex::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    (0..n)
        .map(|r| {
            (0..m)
                .map(|c| (0..k).fold(QComplex::zero(), |acc, t| &acc + &(&a[r][t] * &b[t][c])))
                .collect()
        })
        .collect()
}

/// Conjugate transpose.
pub fn adjoint(a: &Matrix) -> Matrix {
    let rows = a.len();
    let cols = a[0].len();
    (0..cols).map(|c| (0..rows).map(|r| a[r][c].conj()).collect()).collect()
}

/// S_{n,1} = diag(1, ..., 1, -1).
pub fn s_form(n: u32) -> Matrix {
    let mut s = identity(n as usize + 1);
    s[n as usize][n as usize] = QComplex::real(-Rational::one());
    s
}

/// M^dagger S M = S.
pub fn preserves_form(m: &Matrix) -> bool {
    let s = s_form(m.len() as u32 - 1);
    mat_mul(&mat_mul(&adjoint(m), &s), m) == s
}
