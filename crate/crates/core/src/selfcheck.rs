//! Runtime self-check suites, one per acceptance criterion.
//!
//! Each suite compares an exact route against an independent route (numeric
//! series, group orders, brute force) and reports pass/fail with timing.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::applications::{rationality_lhs, rationality_report, remark_closed_form, remark_taus, tau_product_ratio,
    RationalityInputs};
use crate::dirichlet::{gauss_sum_numeric, hilbert_symbol, is_prime, QuadraticField};
use crate::error::Result;
use crate::exact_arith::float::{self, RM};
use crate::exact_arith::{Rational, SymbolicReal};
use crate::lfunctions::{
    euler_factor_closed, euler_factor_orders, euler_product_f64, functional_equation_residual, l_numeric,
    l_odd_exact, lambda_p_closed, lambda_p_orders, primes_up_to, z_ell, zeta_even_exact,
};
use crate::su_spectrum::{
    covolume, covolume_unfolded, formal_degree, heisenberg_matrix, heisenberg_mul, mat_mul, multiplicity,
    net_disc_power, preserves_form, validate, HCParam, HeisenbergElement, QComplex,
};

#[derive(Clone, Debug)]
pub struct SelfCheckConfig {
    pub precision_bits: usize,
    pub prime_bound: u64,
    pub seed: u64,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig { precision_bits: 256, prime_bound: 10_000, seed: 0x5eed }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfCheckReport {
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

pub const SUITES: [(u8, &str, u128); 12] = [
    (1, "zeta_even_exact", 1000),
    (2, "l_odd_exact", 5000),
    (3, "lambda_dual_route", 1000),
    (4, "euler_factors", 10000),
    (5, "covolume", 10000),
    (6, "multiplicity_odd", 1000),
    (7, "rationality_identity", 5000),
    (8, "functional_equation", 5000),
    (9, "gauss_sums", 1000),
    (10, "heisenberg", 2000),
    (11, "remark_products", 1000),
    (12, "character_hilbert", 2000),
];

pub fn run_all(cfg: &SelfCheckConfig) -> SelfCheckReport {
    let suites: Vec<SuiteReport> = SUITES.iter().map(|&(id, _, _)| run_suite(id, cfg)).collect();
    SelfCheckReport { passed: suites.iter().all(|s| s.passed), suites }
}

/// Runs one suite; unknown ids fail.
pub fn run_suite(id: u8, cfg: &SelfCheckConfig) -> SuiteReport {
    let (name, budget_ms) = SUITES
        .iter()
        .find(|s| s.0 == id)
        .map(|s| (s.1, s.2))
        .unwrap_or(("unknown", 0));
    let start = Instant::now();
    let outcome = match id {
        1 => zeta_suite(cfg),
        2 => l_odd_suite(cfg),
        3 => lambda_suite(),
        4 => euler_suite(cfg),
        5 => covolume_suite(cfg),
        6 => multiplicity_suite(),
        7 => rationality_suite(cfg),
        8 => functional_equation_suite(cfg),
        9 => gauss_suite(cfg),
        10 => heisenberg_suite(cfg),
        11 => remark_suite(),
        12 => character_suite(),
        _ => Ok(Err(format!("no suite {id}"))),
    };
    let (passed, detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, e.to_string()),
    };
    SuiteReport { id, name, passed, detail, elapsed_ms: start.elapsed().as_millis(), budget_ms }
}

type Outcome = Result<std::result::Result<String, String>>;

fn fail(msg: String) -> Outcome {
    Ok(Err(msg))
}

fn field(k: u64) -> Result<QuadraticField> {
    QuadraticField::new(k)
}

/// sum_{n<=N} n^-s plus an Euler-Maclaurin tail, in extended precision.
fn zeta_series(s: u32, p: usize) -> f64 {
    const N: i64 = 10_000;
    let mut acc = float::from_i64(0, p);
    for n in 1..=N {
        let t = float::from_i64(1, p).div(&float::from_i64(n, p).powi(s as usize, p, RM), p, RM);
        acc = acc.add(&t, p, RM);
    }
    // tail = N^(1-s)/(s-1) - N^-s/2 + s N^(-s-1)/12 - s(s+1)(s+2) N^(-s-3)/720
    let nf = N as f64;
    let sf = s as f64;
    let tail = nf.powf(1.0 - sf) / (sf - 1.0) - nf.powf(-sf) / 2.0 + sf * nf.powf(-sf - 1.0) / 12.0
        - sf * (sf + 1.0) * (sf + 2.0) * nf.powf(-sf - 3.0) / 720.0;
    float::to_f64(&acc) + tail
}

fn zeta_suite(cfg: &SelfCheckConfig) -> Outcome {
    let sixth = Rational::new(1, 6)?;
    let ninetieth = Rational::new(1, 90)?;
    if zeta_even_exact(2)? != SymbolicReal::pi_power(sixth, 2) || zeta_even_exact(4)? != SymbolicReal::pi_power(ninetieth, 4) {
        return fail("zeta(2) or zeta(4) exact value wrong".into());
    }
    let mut worst = 0.0f64;
    for s in (2..=12).step_by(2) {
        let exact = zeta_even_exact(s as i64)?.to_f64();
        let series = zeta_series(s, cfg.precision_bits.min(128));
        worst = worst.max((exact - series).abs() / exact);
    }
    if worst < 1e-12 {
        Ok(Ok(format!("max rel err {worst:.2e}")))
    } else {
        fail(format!("max rel err {worst:.2e} >= 1e-12"))
    }
}

fn l_odd_suite(cfg: &SelfCheckConfig) -> Outcome {
    let expected = SymbolicReal::new(Rational::new(1, 16)?, 3, -1, Some(field(1)?))?;
    if l_odd_exact(&field(1)?, 3)? != expected {
        return fail("L(3, chi_-4) != pi^3/32".into());
    }
    let p = cfg.precision_bits.min(128);
    let mut worst = 0.0f64;
    for k in [1u64, 2, 3, 5, 7, 11] {
        let f = field(k)?;
        for s in [3i64, 5, 7] {
            let exact = l_odd_exact(&f, s)?.to_float(p);
            let num = l_numeric(&f, s as f64, p)?.value;
            worst = worst.max(float::rel_diff(&exact, &num, p));
        }
    }
    if worst < 1e-10 {
        Ok(Ok(format!("max rel err {worst:.2e}")))
    } else {
        fail(format!("max rel err {worst:.2e} >= 1e-10"))
    }
}

fn lambda_suite() -> Outcome {
    for p in [2u64, 3, 5, 7, 11] {
        for n in [3u32, 5, 7, 9] {
            let a = lambda_p_closed(p, n)?;
            let b = lambda_p_orders(p, n)?;
            if a != b {
                return fail(format!("p={p} n={n}: {a} vs {b}"));
            }
        }
    }
    Ok(Ok("20 (p, n) pairs agree".into()))
}

fn euler_suite(cfg: &SelfCheckConfig) -> Outcome {
    let mut checked = 0;
    for k in [1u64, 2, 3, 5, 7, 11] {
        let f = field(k)?;
        for n in 3..=6u32 {
            for p in primes_up_to(13) {
                let closed = euler_factor_closed(&f, p, n)?;
                if let Some(o) = euler_factor_orders(&f, p, n)? {
                    if o != closed {
                        return fail(format!("k={k} p={p} n={n}: {closed} vs {o}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    let f = field(1)?;
    let prod = euler_product_f64(&f, 3, cfg.prime_bound)?;
    let z: f64 = (2..=4).map(|s| z_ell(&f, s).map(|v| v.to_f64())).product::<Result<f64>>()?;
    let gap = (prod - z).abs() / z;
    if gap < 1e-3 {
        Ok(Ok(format!("{checked} factor pairs agree; Euler product gap {gap:.2e} at P = {}", cfg.prime_bound)))
    } else {
        fail(format!("Euler product gap {gap:.2e} >= 1e-3"))
    }
}

fn covolume_suite(cfg: &SelfCheckConfig) -> Outcome {
    let f = field(1)?;
    let v = covolume(&f, 3)?;
    if v != SymbolicReal::pi_power(Rational::new(1, 27648)?, 3) {
        return fail(format!("covolume(1, 3) = {v}"));
    }
    // pi^3 |D|^(5/2) prod (i-1)!/(2 pi)^(i+1) * Euler product * lambda_2
    let pi = std::f64::consts::PI;
    let pre = pi.powi(3) * 32.0 * (1.0 / (2.0 * pi).powi(2)) * (1.0 / (2.0 * pi).powi(3)) * (2.0 / (2.0 * pi).powi(4));
    let l3 = l_numeric(&f, 3.0, 64)?.value;
    let numeric = pre * (pi * pi / 6.0) * float::to_f64(&l3) * (pi.powi(4) / 90.0) * 5.0;
    let rel = (numeric - v.to_f64()).abs() / v.to_f64();
    if rel >= 1e-6 {
        return fail(format!("numeric product differs by {rel:.2e}"));
    }
    let _ = cfg;
    for k in [1u64, 2, 3, 5, 7, 11] {
        let f = field(k)?;
        for n in 3..=8u32 {
            let u = covolume_unfolded(&f, n)?;
            let c = covolume(&f, n)?;
            if u.pi_exp() != n as i64 || u.sqrt_d_exp() != 2 * net_disc_power(n) || c.sqrt_d_exp() != 0 {
                return fail(format!("k={k} n={n}: exponents pi^{} |D|^({}/2)", u.pi_exp(), u.sqrt_d_exp()));
            }
        }
    }
    Ok(Ok(format!("pi^3/27648 exact, numeric rel err {rel:.2e}; 36 exponent checks")))
}

fn multiplicity_suite() -> Outcome {
    let mut count = 0;
    for k in [1u64, 2, 3, 5, 7, 11] {
        let f = field(k)?;
        for n in [3u32, 5, 7] {
            for shift in 0..3i64 {
                let taus: Vec<i64> = (0..n as i64).map(|i| 3 * n as i64 - 2 * i + shift).collect();
                let tau = HCParam::new(taus)?;
                if !validate(&tau).integrable {
                    continue;
                }
                let r1 = multiplicity(&f, n, &tau, &BigInt::from(1), None)?;
                let r7 = multiplicity(&f, n, &tau, &BigInt::from(7), None)?;
                let direct = formal_degree(&tau)?.mul(&covolume(&f, n)?)?;
                let Some(e1) = r1.exact.clone() else {
                    return fail(format!("k={k} n={n} {tau}: not rational"));
                };
                if !direct.value_eq(&r1.main_term) || r7.exact != Some(e1 * Rational::from(7i64)) {
                    return fail(format!("k={k} n={n} {tau}: product or linearity mismatch"));
                }
                count += 1;
            }
        }
    }
    let r = multiplicity(&field(1)?, 3, &HCParam::new(vec![3, 2, 1])?, &BigInt::from(24576), None)?;
    if r.exact != Some(Rational::from(7i64)) {
        return fail("k=1 n=3 tau=(3,2,1) h=24576 did not give 7".into());
    }
    Ok(Ok(format!("{count} inputs exact and linear; reference value 7")))
}

/// A random tau pair satisfying the rationality identity's hypotheses.
pub fn random_admissible_pair(n: u32, rng: &mut impl Rng) -> Result<(HCParam, HCParam)> {
    loop {
        let len = 2 * n as usize + 1;
        let mut t = vec![rng.gen_range(-3i64..15)];
        for _ in 1..len {
            let last = *t.last().expect("nonempty");
            t.push(last + rng.gen_range(1i64..5));
        }
        t.reverse();
        let tau2 = HCParam::new(t.clone())?;
        let tau1 = HCParam::new(t[..2 * n as usize - 1].to_vec())?;
        if validate(&tau1).integrable && validate(&tau2).integrable {
            return Ok((tau1, tau2));
        }
    }
}

fn rationality_suite(cfg: &SelfCheckConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut count = 0;
    for k in [1u64, 2, 3, 5, 7] {
        let f = field(k)?;
        for n in [2u32, 3] {
            let (r1, r2) = random_admissible_pair(n, &mut rng)?;
            let h1 = BigInt::from(rng.gen_range(1u64..1_000_000));
            let h2 = BigInt::from(rng.gen_range(1u64..1_000_000));
            let inputs = [
                RationalityInputs::remark(n)?,
                RationalityInputs { tau1: r1, tau2: r2, h1, h2, m1: 3, m2: 5 },
            ];
            for inp in &inputs {
                let rep = rationality_report(&f, n, inp)?;
                if !rep.equal {
                    return fail(format!("k={k} n={n} {} / {}: {} vs {}", inp.tau1, inp.tau2, rep.lhs, rep.rhs));
                }
                count += 1;
            }
        }
    }
    Ok(Ok(format!("{count} exact identities")))
}

fn functional_equation_suite(cfg: &SelfCheckConfig) -> Outcome {
    let mut worst = 0.0f64;
    for k in [1u64, 2, 3] {
        for s in [3u32, 5] {
            worst = worst.max(functional_equation_residual(&field(k)?, s, cfg.precision_bits.min(128))?);
        }
    }
    if worst < 1e-8 {
        Ok(Ok(format!("max residual {worst:.2e}")))
    } else {
        fail(format!("max residual {worst:.2e} >= 1e-8"))
    }
}

fn gauss_suite(cfg: &SelfCheckConfig) -> Outcome {
    let mut signs = Vec::new();
    for k in [1u64, 2, 3, 5, 7, 11, 13] {
        let f = field(k)?;
        let g = gauss_sum_numeric(&f, cfg.precision_bits.min(128));
        let n2 = float::to_f64(&g.norm_sqr(128));
        let re = float::to_f64(&g.re).abs();
        if (n2 - f.abs_d() as f64).abs() >= 1e-9 || re >= 1e-9 {
            return fail(format!("k={k}: |G|^2 = {n2}, Re G = {re:.2e}"));
        }
        signs.push(if g.im.is_negative() { '-' } else { '+' });
    }
    Ok(Ok(format!("observed signs {}", signs.into_iter().collect::<String>())))
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-50i64..=50), rng.gen_range(1i64..=20)).expect("nonzero denominator")
}

fn random_element(n: u32, rng: &mut impl Rng) -> HeisenbergElement {
    let x = (0..n - 1).map(|_| QComplex::new(random_rational(rng), random_rational(rng))).collect();
    HeisenbergElement { x, mu: random_rational(rng) }
}

#[derive(Clone, Debug, Serialize)]
pub struct HeisenbergCheck {
    pub n: u32,
    pub count: usize,
    pub seed: u64,
    pub homomorphism_failures: usize,
    pub form_failures: usize,
    pub passed: bool,
}

/// matrix(a) matrix(b) = matrix(ab) and S_(n,1)-preservation on `count` random pairs.
pub fn heisenberg_random_check(n: u32, count: usize, seed: u64) -> Result<HeisenbergCheck> {
    if n < 3 {
        return Err(crate::Error::validation(format!("n = {n} must be at least 3")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut homomorphism_failures = 0;
    let mut form_failures = 0;
    for _ in 0..count {
        let a = random_element(n, &mut rng);
        let b = random_element(n, &mut rng);
        let ab = heisenberg_mul(&a, &b)?;
        let ma = heisenberg_matrix(&a);
        if mat_mul(&ma, &heisenberg_matrix(&b)) != heisenberg_matrix(&ab) {
            homomorphism_failures += 1;
        }
        if !preserves_form(&ma) {
            form_failures += 1;
        }
    }
    Ok(HeisenbergCheck {
        n,
        count,
        seed,
        homomorphism_failures,
        form_failures,
        passed: homomorphism_failures == 0 && form_failures == 0,
    })
}

fn heisenberg_suite(cfg: &SelfCheckConfig) -> Outcome {
    for n in [3u32, 4, 5] {
        let c = heisenberg_random_check(n, 100, cfg.seed ^ 0x4e ^ n as u64)?;
        if !c.passed {
            return fail(format!(
                "n={n}: {} homomorphism and {} form failures",
                c.homomorphism_failures, c.form_failures
            ));
        }
    }
    Ok(Ok("300 products and forms exact".into()))
}

fn remark_suite() -> Outcome {
    let mut ratios = Vec::new();
    for n in 2..=5u32 {
        let (t1, t2) = remark_taus(n)?;
        let direct = tau_product_ratio(n, &t1, &t2)?;
        let stated = remark_closed_form(n)?;
        ratios.push(format!("n={n}: {}", stated.checked_div(&direct)?));
    }
    // the direct product feeds the rationality identity
    for n in [2u32, 3] {
        let f = field(1)?;
        let rep = rationality_report(&f, n, &RationalityInputs::remark(n)?)?;
        if !rep.equal || rep.lhs != rationality_lhs(&f, n)? {
            return fail(format!("direct product fails the identity at n={n}"));
        }
    }
    Ok(Ok(format!("stated/direct ratios {}", ratios.join(", "))))
}

fn character_suite() -> Outcome {
    for k in [1u64, 2, 3, 5, 6, 7, 10, 11, 13] {
        let f = field(k)?;
        let d = f.abs_d() as i64;
        if f.kronecker(-1) != -1 {
            return fail(format!("k={k}: chi(-1) != -1"));
        }
        if (1..=d).map(|a| f.kronecker(a) as i64).sum::<i64>() != 0 {
            return fail(format!("k={k}: character sum nonzero"));
        }
        for m in -60i64..60 {
            if f.kronecker(m) != f.kronecker(m + d) {
                return fail(format!("k={k}: period fails at {m}"));
            }
            for n in -60i64..60 {
                if f.kronecker(m * n) != f.kronecker(m) * f.kronecker(n) {
                    return fail(format!("k={k}: multiplicativity fails at {m}, {n}"));
                }
            }
        }
    }
    let grid = [-1i64, 1, -2, 2, -3, 3, -5, 5];
    let primes: Vec<u64> = (2..=100).filter(|&p| is_prime(p)).collect();
    for &a in &grid {
        for &b in &grid {
            for p in [2u64, 3, 5, 7] {
                if hilbert_symbol(a, b, p)? != hilbert_symbol(b, a, p)? {
                    return fail(format!("({a},{b})_{p} not symmetric"));
                }
                for &c in &grid {
                    if hilbert_symbol(a, b * c, p)? != hilbert_symbol(a, b, p)? * hilbert_symbol(a, c, p)? {
                        return fail(format!("({a},{b}{c})_{p} not multiplicative"));
                    }
                }
            }
            let mut prod: i8 = if a < 0 && b < 0 { -1 } else { 1 };
            for &p in &primes {
                prod *= hilbert_symbol(a, b, p)?;
            }
            if prod != 1 {
                return fail(format!("product formula fails for ({a},{b})"));
            }
        }
    }
    Ok(Ok("character and Hilbert symbol grids pass".into()))
}
