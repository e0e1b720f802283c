//! Harish-Chandra parameters and formal degrees.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{factorial, Rational, SymbolicReal};

/// (tau_1, ..., tau_n) with tau_1 > ... > tau_n; tau_{n+1} = -sum tau_i is derived.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HCParam {
    taus: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamFlags {
    pub regular_dominant: bool,
    pub integrable: bool,
    pub cohomological: bool,
}

impl HCParam {
    pub fn new(taus: Vec<i64>) -> Result<Self> {
        if taus.len() < 2 {
            return Err(Error::validation("a parameter needs at least two entries"));
        }
        if taus.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::validation(format!("{taus:?} is not strictly decreasing")));
        }
        if taus.iter().any(|t| t.unsigned_abs() > 1 << 40) {
            return Err(Error::validation("parameter entries out of range"));
        }
        Ok(HCParam { taus })
    }

    pub fn n(&self) -> u32 {
        self.taus.len() as u32
    }

    pub fn taus(&self) -> &[i64] {
        &self.taus
    }

    pub fn tau_last(&self) -> i64 {
        -self.taus.iter().sum::<i64>()
    }

    /// (tau_1, ..., tau_{n+1}).
    pub fn full(&self) -> Vec<i64> {
        let mut v = self.taus.clone();
        v.push(self.tau_last());
        v
    }

    /// tau_i, 1-based, including i = n+1.
    pub fn tau(&self, i: usize) -> i64 {
        if i == self.taus.len() + 1 {
            self.tau_last()
        } else {
            self.taus[i - 1]
        }
    }
}

impl std::fmt::Display for HCParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.taus.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for HCParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let taus = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::validation(format!("bad tau entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        HCParam::new(taus)
    }
}

impl serde::Serialize for HCParam {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.taus.serialize(s)
    }
}

pub fn validate(tau: &HCParam) -> ParamFlags {
    let n = tau.n() as i64;
    let t = tau.full();
    let last = tau.tau_last();
    let regular_dominant = t.windows(2).all(|w| w[0] > w[1]);
    let integrable = regular_dominant && tau.tau(n as usize) > last + n;
    let steps = (0..n as usize).all(|i| (i + 1..n as usize).all(|j| t[i] + i as i64 >= t[j] + j as i64));
    let floor = (1..=n).all(|i| t[i as usize - 1] >= last + n * (n + 1) / 2 + n + 1 - i);
    ParamFlags { regular_dominant, integrable, cohomological: steps && floor }
}

/// d_tau = (4 pi)^(-n) prod_i |prod_{j>i} (tau_i - tau_j)| / (i-1)!.
pub fn formal_degree(tau: &HCParam) -> Result<SymbolicReal> {
    if !validate(tau).regular_dominant {
        return Err(Error::domain(format!("{tau} with tau_(n+1) = {} is singular or not dominant", tau.tau_last())));
    }
    let n = tau.n() as usize;
    let t = tau.full();
    let mut coeff = Rational::one();
    for i in 0..n {
        let prod: BigInt = (i + 1..=n).map(|j| BigInt::from(t[i] - t[j])).product();
        coeff = coeff * Rational::new(prod.abs(), factorial(i as u64))?;
    }
    let four_n = Rational::from(BigInt::from(4).pow(n as u32));
    Ok(SymbolicReal::pi_power(coeff / four_n, -(n as i64)))
}

/// Weyl dimension prod_{i<j} (l_i - l_j + j - i) / (j - i) of a weakly decreasing weight.
pub fn weyl_dim(weight: &[Rational]) -> Result<BigInt> {
    if weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::domain("highest weight must be weakly decreasing"));
    }
    let mut acc = Rational::one();
    for i in 0..weight.len() {
        for j in i + 1..weight.len() {
            let diff = &weight[i] - &weight[j];
            if !diff.is_integer() {
                return Err(Error::domain("highest weight differences must be integers"));
            }
            let gap = Rational::from((j - i) as i64);
            acc = acc * ((diff + gap.clone()) / gap);
        }
    }
    if !acc.is_integer() {
        return Err(Error::IdentityFailure(format!("Weyl dimension {acc} is not integral")));
    }
    Ok(acc.numer().clone())
}

/// delta_K = ((n-1)/2, (n-3)/2, ..., -(n-1)/2).
pub fn delta_k(n: u32) -> Vec<Rational> {
    (0..n as i64).map(|i| Rational::new(n as i64 - 1 - 2 * i, 2).expect("nonzero")).collect()
}

/// dim E_{tau - delta_K}, the K-type dimension of the first n coordinates.
pub fn k_type_dim(tau: &HCParam) -> Result<BigInt> {
    let w: Vec<Rational> = tau
        .taus()
        .iter()
        .zip(delta_k(tau.n()))
        .map(|(t, d)| Rational::from(*t) - d)
        .collect();
    weyl_dim(&w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tau(v: &[i64]) -> HCParam {
        HCParam::new(v.to_vec()).unwrap()
    }

    #[test]
    fn flags() {
        let a = validate(&tau(&[3, 2, 1]));
        assert_eq!(a, ParamFlags { regular_dominant: true, integrable: true, cohomological: true });
        let b = validate(&tau(&[2, 1, 0]));
        assert!(b.regular_dominant && !b.integrable);
        assert!(validate(&tau(&[10, 9, 8])).integrable);
        assert!(HCParam::new(vec![1, 1, 0]).is_err());
        assert!(HCParam::new(vec![0, 1, 2]).is_err());
        assert_eq!(tau(&[3, 2, 1]).tau_last(), -6);
    }

    #[test]
    fn degrees() {
        let q = |n, d| Rational::new(n, d).unwrap();
        assert_eq!(formal_degree(&tau(&[3, 2, 1])).unwrap(), SymbolicReal::pi_power(q(63, 8), -3));
        assert_eq!(formal_degree(&tau(&[2, 1, 0])).unwrap(), SymbolicReal::pi_power(q(15, 16), -3));
        // tau_4 = 0 collides with tau_2
        assert!(matches!(formal_degree(&tau(&[1, 0, -1])), Err(Error::Domain(_))));
    }

    #[test]
    fn weyl_dimensions() {
        let r = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
        assert_eq!(weyl_dim(&r(&[0, 0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dim(&r(&[1, 0])).unwrap(), BigInt::from(2));
        assert_eq!(weyl_dim(&r(&[1, 0, 0])).unwrap(), BigInt::from(3));
        assert_eq!(weyl_dim(&r(&[2, 0, 0])).unwrap(), BigInt::from(6));
        assert_eq!(weyl_dim(&r(&[1, 1, 0])).unwrap(), BigInt::from(3));
        assert!(weyl_dim(&r(&[0, 1])).is_err());
        let half = vec![Rational::new(1, 2).unwrap(), Rational::zero()];
        assert!(weyl_dim(&half).is_err());
        assert_eq!(weyl_dim(&delta_k(4)).unwrap(), BigInt::from(64));
    }

    #[test]
    fn parse_roundtrip() {
        let t: HCParam = "3,2,1".parse().unwrap();
        assert_eq!(t, tau(&[3, 2, 1]));
        assert_eq!(t.to_string(), "(3,2,1)");
        assert!("3,x,1".parse::<HCParam>().is_err());
    }

    proptest! {
        #[test]
        fn degree_positive(start in -20i64..40, gaps in prop::collection::vec(1i64..6, 2..6)) {
            let mut v = vec![start];
            for g in gaps {
                let last = *v.last().unwrap();
                v.push(last - g);
            }
            let t = HCParam::new(v).unwrap();
            match formal_degree(&t) {
                Ok(d) => {
                    prop_assert!(d.is_positive());
                    prop_assert_eq!(d.pi_exp(), -(t.n() as i64));
                }
                Err(_) => prop_assert!(!validate(&t).regular_dominant),
            }
        }

        #[test]
        fn integrable_implies_dominant(start in -20i64..40, gaps in prop::collection::vec(1i64..6, 2..6)) {
            let mut v = vec![start];
            for g in gaps {
                let last = *v.last().unwrap();
                v.push(last - g);
            }
            let f = validate(&HCParam::new(v).unwrap());
            prop_assert!(!f.integrable || f.regular_dominant);
        }
    }
}
