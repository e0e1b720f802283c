use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use suspec::applications::{cusp_cohomology_lower_bound, rationality_report, RationalityInputs};
use suspec::dirichlet::{classify_prime, gauss_sum_sign, t_ell, QuadraticField};
use suspec::exact_arith::{bernoulli, float, Rational, SymbolicReal};
use suspec::lfunctions::{
    euler_product_f64, generalized_bernoulli, l_numeric, l_numeric_terms, l_odd_exact, primes_up_to, z_ell,
    zeta_even_exact,
};
use suspec::selfcheck::{heisenberg_random_check, run_suite, SelfCheckConfig, SUITES};
use suspec::su_spectrum::{covolume, covolume_unfolded, multiplicity, validate, ErrInputs, HCParam};
use suspec::{Error, Result};

use crate::output::Output;
use crate::{Cli, Command, Config, ErrArgs};

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::IdentityFailure(_) => 2,
        _ => 1,
    }
}

fn check_config(c: &Config) -> Result<()> {
    if c.precision_bits < 64 {
        return Err(Error::validation(format!("precision_bits = {} must be at least 64", c.precision_bits)));
    }
    if c.prime_bound < 100 {
        return Err(Error::validation(format!("prime_bound = {} must be at least 100", c.prime_bound)));
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn sym_float(v: &SymbolicReal, prec: usize) -> String {
    float::to_decimal(&v.to_float(prec), float::digits_for_bits(prec))
}

fn rat_float(q: &Rational, prec: usize) -> String {
    float::to_decimal(&float::from_rational(q, prec), float::digits_for_bits(prec))
}

/// `{prefix..., coeff, pi_exp, sqrtD_exp, [absD], float}`.
fn sym_record(mut head: Map<String, Value>, v: &SymbolicReal, prec: usize) -> Value {
    if let Value::Object(m) = to_value(v) {
        head.extend(m);
    }
    head.insert("float".into(), Value::String(sym_float(v, prec)));
    Value::Object(head)
}

fn head(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn err_inputs(e: &ErrArgs) -> Result<Option<ErrInputs>> {
    let need_m = || e.m.ok_or_else(|| Error::validation("--m is required with --c or --kappa"));
    if let Some(c) = e.c {
        return Ok(Some(ErrInputs::Constant { c, m: need_m()? }));
    }
    if let (Some(kappa_abs), Some(dim_e), Some(sum_cusp_vol)) = (e.kappa, e.dim_e, e.cusp_vol) {
        return Ok(Some(ErrInputs::Factors { kappa_abs, dim_e, sum_cusp_vol, m: need_m()? }));
    }
    if e.m.is_some() || e.dim_e.is_some() || e.cusp_vol.is_some() {
        return Err(Error::validation("give either --c and --m, or --kappa, --dim-e, --cusp-vol and --m"));
    }
    Ok(None)
}

pub fn run(cli: &Cli) -> Result<(Output, u8)> {
    let cfg = &cli.config;
    check_config(cfg)?;
    let prec = cfg.precision_bits;
    let ok = |v: Value| Ok((Output::single(v), 0));
    match &cli.command {
        Command::Field { k, n } => ok(field(*k, *n)?),
        Command::Lvalue { k, s, terms } => ok(lvalue(*k, *s, *terms, prec)?),
        Command::Zeta { s } => ok(zeta(*s, prec)?),
        Command::Volume { k, n, unfolded, numeric } => ok(volume(*k, *n, *unfolded, *numeric, cfg)?),
        Command::Multiplicity { k, n, tau, h, err } => {
            let f = QuadraticField::new(*k)?;
            let r = multiplicity(&f, *n, tau, h, err_inputs(err)?.as_ref())?;
            if let Some(w) = &r.warning {
                eprintln!("warning: {w}");
            }
            let mut m = head(&[("k", json!(k)), ("n", json!(n)), ("tau", to_value(tau))]);
            if let Value::Object(rest) = to_value(&r) {
                m.extend(rest);
            }
            m.insert("float".into(), Value::String(sym_float(&r.main_term, prec)));
            ok(Value::Object(m))
        }
        Command::Cohomology { k, n, tau, h, err } => {
            let f = QuadraticField::new(*k)?;
            let b = cusp_cohomology_lower_bound(&f, *n, tau, h, err_inputs(err)?.as_ref())?;
            let mut m = head(&[("k", json!(k)), ("n", json!(n)), ("tau", to_value(tau)), ("h", json!(h.to_string()))]);
            if let Value::Object(rest) = to_value(&b) {
                m.extend(rest);
            }
            m.insert("float".into(), Value::String(sym_float(&b.main_term, prec)));
            ok(Value::Object(m))
        }
        Command::Rationality { k, n, tau1, tau2, h1, h2, m1, m2 } => {
            let f = QuadraticField::new(*k)?;
            let mut inp = RationalityInputs::remark(*n)?;
            if let (Some(t1), Some(t2)) = (tau1, tau2) {
                inp.tau1 = t1.clone();
                inp.tau2 = t2.clone();
            }
            inp.h1 = h1.clone();
            inp.h2 = h2.clone();
            inp.m1 = *m1;
            inp.m2 = *m2;
            let r = rationality_report(&f, *n, &inp)?;
            let mut v = to_value(&r);
            if let Value::Object(m) = &mut v {
                m.insert("lhs_float".into(), Value::String(rat_float(&r.lhs, prec)));
            }
            if !r.equal {
                eprintln!("identity failure: lhs {} != rhs {}", r.lhs, r.rhs);
            }
            Ok((Output::single(v), if r.equal { 0 } else { 2 }))
        }
        Command::HeisenbergCheck { n, count, seed } => {
            let c = heisenberg_random_check(*n, *count, *seed)?;
            Ok((Output::single(to_value(&c)), if c.passed { 0 } else { 2 }))
        }
        Command::Selfcheck { suites, seed, timings } => {
            let sc = SelfCheckConfig { precision_bits: prec, prime_bound: cfg.prime_bound, seed: *seed };
            let ids: Vec<u8> = if suites.is_empty() { SUITES.iter().map(|s| s.0).collect() } else { suites.clone() };
            let reports: Vec<_> = ids.iter().map(|&id| run_suite(id, &sc)).collect();
            let passed = reports.iter().all(|r| r.passed);
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let mut v = to_value(r);
                    if let Value::Object(m) = &mut v {
                        if !timings {
                            m.remove("elapsed_ms");
                        }
                    }
                    v
                })
                .collect();
            let value = json!({ "passed": passed, "suites": rows.clone() });
            Ok((Output { value, rows: Some(rows) }, if passed { 0 } else { 2 }))
        }
        Command::Sweep { k, n, tau_offset, tau, h } => {
            let rows = sweep(k, n, tau_offset, tau, h, prec)?;
            Ok((Output { value: Value::Array(rows.clone()), rows: Some(rows) }, 0))
        }
    }
}

fn field(k: u64, n: Option<u32>) -> Result<Value> {
    let f = QuadraticField::new(k)?;
    let classes: Vec<String> = primes_up_to(30)
        .into_iter()
        .map(|p| {
            let c = classify_prime(&f, p).map(|c| to_value(&c));
            format!("{p}:{}", c.ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())
        })
        .collect();
    let mut m = head(&[
        ("k", json!(k)),
        ("D", json!(f.disc())),
        ("absD", json!(f.abs_d())),
        ("ramified_primes", json!(f.ramified_primes())),
        ("chi_minus_one", json!(f.kronecker(-1))),
        ("gauss_sum_sign", json!(gauss_sum_sign(&f))),
        ("prime_classes", json!(classes.join(" "))),
    ]);
    if let Some(n) = n {
        m.insert("n".into(), json!(n));
        m.insert("T".into(), json!(t_ell(&f, n)?.into_iter().collect::<Vec<_>>()));
    }
    Ok(Value::Object(m))
}

fn lvalue(k: u64, s: i64, terms: Option<u64>, prec: usize) -> Result<Value> {
    let f = QuadraticField::new(k)?;
    let base = head(&[("k", json!(k)), ("s", json!(s))]);
    if s <= 0 {
        // L(1 - m) = -B_{m,chi} / m
        let m = (1 - s) as usize;
        let v = -(generalized_bernoulli(&f, m) / Rational::from(m as u64));
        let mut out = base;
        out.insert("exact".into(), to_value(&v));
        out.insert("float".into(), Value::String(rat_float(&v, prec)));
        return Ok(Value::Object(out));
    }
    if s == 1 {
        return Err(Error::domain("the series at s = 1 is only conditionally convergent; use s >= 2 or s <= 0"));
    }
    let series = match terms {
        Some(t) => l_numeric_terms(&f, s as f64, prec, t)?,
        None => l_numeric(&f, s as f64, prec)?,
    };
    let mut out = if s % 2 == 1 {
        let exact = l_odd_exact(&f, s)?;
        let mut m = match sym_record(base, &exact, prec) {
            Value::Object(m) => m,
            _ => unreachable!(),
        };
        m.insert(
            "numeric_rel_diff".into(),
            json!(float::rel_diff(&series.value, &exact.to_float(prec), prec)),
        );
        m
    } else {
        base
    };
    out.insert(
        "numeric".into(),
        Value::String(float::to_decimal(&series.value, float::digits_for_bits(prec))),
    );
    out.insert("tail_bound".into(), json!(series.tail_bound));
    out.insert("terms".into(), json!(series.terms));
    Ok(Value::Object(out))
}

fn zeta(s: i64, prec: usize) -> Result<Value> {
    let base = head(&[("s", json!(s))]);
    if s <= 0 {
        // zeta(1 - m) = -B_m / m, except zeta(0) = -1/2
        let m = (1 - s) as usize;
        let v = if m == 1 { Rational::new(-1, 2)? } else { -(bernoulli(m) / Rational::from(m as u64)) };
        let mut out = base;
        out.insert("exact".into(), to_value(&v));
        out.insert("float".into(), Value::String(rat_float(&v, prec)));
        return Ok(Value::Object(out));
    }
    Ok(sym_record(base, &zeta_even_exact(s)?, prec))
}

fn volume(k: u64, n: u32, unfolded: bool, numeric: bool, cfg: &Config) -> Result<Value> {
    let f = QuadraticField::new(k)?;
    let v = if unfolded { covolume_unfolded(&f, n)? } else { covolume(&f, n)? };
    let mut out = match sym_record(head(&[("k", json!(k)), ("n", json!(n))]), &v, cfg.precision_bits) {
        Value::Object(m) => m,
        _ => unreachable!(),
    };
    if numeric {
        let mut z = SymbolicReal::one();
        for s in 2..=n as i64 + 1 {
            z = z.mul(&z_ell(&f, s)?)?;
        }
        let euler = euler_product_f64(&f, n, cfg.prime_bound)?;
        let approx = v.to_f64() / z.to_f64() * euler;
        out.insert("prime_bound".into(), json!(cfg.prime_bound));
        out.insert("euler_float".into(), json!(approx));
        out.insert("euler_rel_diff".into(), json!((approx - v.to_f64()).abs() / v.to_f64()));
    }
    Ok(Value::Object(out))
}

/// Comma-separated integers and inclusive ranges `a..b`.
pub fn parse_list(spec: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || Error::validation(format!("bad list item {part:?}"));
        if let Some((a, b)) = part.split_once("..") {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b < a || b - a > 10_000 {
                return Err(Error::validation(format!("range {part} is empty or too long")));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err(Error::validation(format!("empty list {spec:?}")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn sweep(k: &str, n: &str, offsets: &str, extra: &[HCParam], h: &str, prec: usize) -> Result<Vec<Value>> {
    let ks: Vec<QuadraticField> = parse_list(k)?
        .into_iter()
        .filter(|&k| k > 0)
        .filter_map(|k| QuadraticField::new(k as u64).ok())
        .collect();
    if ks.is_empty() {
        return Err(Error::validation("no squarefree k in range"));
    }
    let ns = parse_list(n)?;
    if ns.iter().any(|&n| !(3..=64).contains(&n)) {
        return Err(Error::validation("n must lie in 3..64"));
    }
    let offsets = parse_list(offsets)?;
    let hs = parse_list(h)?;
    if hs.iter().any(|&h| h < 1) {
        return Err(Error::validation("h must be positive"));
    }
    let mut tuples = Vec::new();
    for f in &ks {
        for &n in &ns {
            let mut taus: Vec<HCParam> = offsets
                .iter()
                .map(|c| HCParam::new((1..=n).map(|i| n + 1 - i + c).collect()))
                .collect::<Result<_>>()?;
            taus.extend(extra.iter().filter(|t| t.n() as i64 == n).cloned());
            taus.sort();
            taus.dedup();
            for t in taus {
                for &h in &hs {
                    tuples.push((*f, n as u32, t.clone(), h));
                }
            }
        }
    }
    Ok(tuples.par_iter().map(|(f, n, t, h)| sweep_row(f, *n, t, *h, prec)).collect())
}

fn sweep_row(f: &QuadraticField, n: u32, tau: &HCParam, h: i64, prec: usize) -> Value {
    let flags = validate(tau);
    let mut row = head(&[
        ("k", json!(f.k())),
        ("D", json!(f.disc())),
        ("n", json!(n)),
        ("tau", to_value(tau)),
        ("h", json!(h)),
        ("integrable", json!(flags.integrable)),
        ("cohomological", json!(flags.cohomological)),
    ]);
    match multiplicity(f, n, tau, &BigInt::from(h), None) {
        Ok(r) => {
            row.insert("main_term".into(), json!(r.main_term.to_string()));
            row.insert("exact".into(), r.exact.map(|q| json!(q.to_string())).unwrap_or(Value::Null));
            row.insert("float".into(), json!(sym_float(&r.main_term, prec)));
            row.insert("error".into(), Value::Null);
        }
        Err(e) => {
            row.insert("main_term".into(), Value::Null);
            row.insert("exact".into(), Value::Null);
            row.insert("float".into(), Value::Null);
            row.insert("error".into(), json!(e.to_string()));
        }
    }
    Value::Object(row)
}
