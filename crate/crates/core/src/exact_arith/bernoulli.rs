//! Bernoulli numbers and polynomials.
//!
//! Convention: generating function t/(e^t - 1), so B_1 = -1/2.

use std::sync::{OnceLock, RwLock};

use super::rational::{binomial, Rational};

static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();

fn table() -> &'static RwLock<Vec<Rational>> {
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// B_n, memoized. Readers share the lock; the table only ever grows.
pub fn bernoulli(n: usize) -> Rational {
    if n >= 3 && n % 2 == 1 {
        return Rational::zero();
    }
    {
        let t = table().read().expect("bernoulli table poisoned");
        if let Some(b) = t.get(n) {
            return b.clone();
        }
    }
    let mut t = table().write().expect("bernoulli table poisoned");
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    while t.len() <= n {
        let m = t.len() as u64;
        let s: Rational = t
            .iter()
            .enumerate()
            .map(|(k, b)| Rational::from(binomial(m + 1, k as u64)) * b)
            .sum();
        let next = -(s / Rational::from(m + 1));
        t.push(next);
    }
    t[n].clone()
}

/// B_n(x) = sum_k C(n, k) B_k x^(n-k).
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    // Horner in x over coefficients C(n,k) B_k, highest power first (k = 0).
    let mut acc = Rational::zero();
    for k in 0..=n {
        acc = acc * x + Rational::from(binomial(n as u64, k as u64)) * bernoulli(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(6), q(1, 42));
        assert_eq!(bernoulli(7), Rational::zero());
        assert_eq!(bernoulli(12), q(-691, 2730));
    }

    #[test]
    fn polynomial_values() {
        assert_eq!(bernoulli_poly(1, &q(1, 2)), Rational::zero());
        assert_eq!(bernoulli_poly(3, &q(1, 4)), q(3, 64));
        assert_eq!(bernoulli_poly(2, &Rational::zero()), q(1, 6));
    }

    #[test]
    fn concurrent_reads_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || bernoulli(20 + 2 * i)))
            .collect();
        let vals: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, v) in vals.iter().enumerate() {
            assert_eq!(*v, bernoulli(20 + 2 * i));
        }
    }

    proptest! {
        #[test]
        fn recurrence_holds(n in 1usize..40) {
            let s: Rational = (0..=n)
                .map(|k| Rational::from(binomial(n as u64 + 1, k as u64)) * bernoulli(k))
                .sum();
            prop_assert!(s.is_zero());
        }

        #[test]
        fn odd_indices_vanish(k in 1usize..30) {
            prop_assert!(bernoulli(2 * k + 1).is_zero());
        }

        #[test]
        fn poly_at_zero_is_number(n in 0usize..30) {
            prop_assert_eq!(bernoulli_poly(n, &Rational::zero()), bernoulli(n));
        }

        // B_n(x + 1) - B_n(x) = n x^(n-1)
        #[test]
        fn poly_difference(n in 1usize..20, a in -20i64..20, b in 1i64..10) {
            let x = q(a, b);
            let lhs = bernoulli_poly(n, &(&x + &Rational::one())) - bernoulli_poly(n, &x);
            let rhs = Rational::from(n as i64) * x.pow(n as i64 - 1).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
