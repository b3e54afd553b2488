//! The invariant suite behind `cyclopell verify`.
//!
//! Each prime is checked independently with a deterministic RNG seeded by the
//! prime, so output is reproducible and ordered by `p`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::odd_primes_up_to;
use crate::cyclotomic::{cyclotomic_unit, CycInt};
use crate::error::Result;
use crate::gauss_split::{build_q, m_poly, split_fg};
use crate::pell::{classify, solve_cf, solve_dirichlet, DirichletCase};
use crate::quadratic::{legendre, p_star, sqrt_p_star};
use crate::verify_flt::{factor_product_check, frobenius_check, norm_gap};

/// Norm-heavy checks (full conjugate products) run only up to this prime.
pub const NORM_CHECK_MAX_P: u32 = 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub p: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(u32, &mut ChaCha8Rng) -> Result<std::result::Result<(), String>>;

const CHECKS: &[(&str, Check)] = &[
    ("ring-axioms", ring_axioms),
    ("galois-and-norm", galois_and_norm),
    ("lambda-congruence", lambda_congruence),
    ("primary-uniqueness", primary_uniqueness),
    ("primary-real-units", primary_real_units),
    ("quadratic-character", quadratic_character),
    ("gauss-split", gauss_split),
    ("pell", pell),
    ("flt-identities", flt_identities),
];

pub fn random_element(p: u32, bound: i64, rng: &mut impl Rng) -> CycInt {
    let raw: Vec<i64> = (0..p - 1).map(|_| rng.gen_range(-bound..=bound)).collect();
    CycInt::new(p, raw).expect("p is an odd prime")
}

/// `ζ^j · ∏ cyclotomic_unit(p, k)^{e_k}` with small random exponents.
pub fn random_unit(p: u32, rng: &mut impl Rng) -> Result<CycInt> {
    let mut u = CycInt::zeta_pow(p, rng.gen_range(0..p as i64))?;
    for k in 2..=(p - 1) / 2 {
        let e = rng.gen_range(0..=2u32);
        if e > 0 {
            u = &u * &cyclotomic_unit(p, k)?.pow(e);
        }
    }
    Ok(u)
}

pub fn run_prime(p: u32) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .enumerate()
        .map(|(i, &(name, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(((p as u64) << 8) | i as u64);
            let (passed, detail) = match check(p, &mut rng) {
                Ok(Ok(())) => (true, String::new()),
                Ok(Err(msg)) => (false, msg),
                Err(e) => (false, e.to_string()),
            };
            CheckResult {
                p,
                name,
                passed,
                detail,
            }
        })
        .collect()
}

/// Runs every check for every odd prime up to `p_max`, sorted by `p`.
pub fn run_suite(p_max: u64) -> Vec<CheckResult> {
    odd_primes_up_to(p_max)
        .into_par_iter()
        .map(run_prime)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ring_axioms(p: u32, rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    for _ in 0..10 {
        let x = random_element(p, 20, rng);
        let y = random_element(p, 20, rng);
        let z = random_element(p, 20, rng);
        let ok = &(&x * &y) * &z == &x * &(&y * &z)
            && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
            && &x * &y == &y * &x
            && &x + &y == &y + &x
            && CycInt::new(p, x.coeffs().iter().cloned())? == x;
        if !ok {
            return Ok(Err(format!("ring axioms fail for {x}, {y}, {z}")));
        }
    }
    Ok(Ok(()))
}

fn galois_and_norm(p: u32, rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let x = random_element(p, 5, rng);
    for _ in 0..5 {
        let j = rng.gen_range(1..p) as i64;
        let k = rng.gen_range(1..p) as i64;
        if x.galois(k)?.galois(j)? != x.galois(j * k)? {
            return Ok(Err(format!("sigma_{j} o sigma_{k} != sigma_{}", j * k)));
        }
    }
    if p > NORM_CHECK_MAX_P {
        return Ok(Ok(()));
    }
    let y = random_element(p, 5, rng);
    let nx = x.norm()?;
    let k = rng.gen_range(1..p) as i64;
    Ok(ensure(x.galois(k)?.norm()? == nx, || {
        format!("norm not Galois invariant under sigma_{k}")
    })
    .and(ensure((&x * &y).norm()? == &nx * y.norm()?, || {
        "norm not multiplicative".into()
    })))
}

fn lambda_congruence(p: u32, rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let lam = CycInt::lambda(p)?;
    for _ in 0..20 {
        let x = random_element(p, 50, rng);
        let diff = &x - &x.conjugate();
        match diff.div_lambda() {
            Some(q) if &q * &lam == diff => {}
            _ => return Ok(Err(format!("lambda does not divide {x} - conj"))),
        }
    }
    Ok(Ok(()))
}

fn primary_uniqueness(p: u32, rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let mut tested = 0;
    while tested < 10 {
        let x = random_element(p, 20, rng);
        if !x.is_prime_to_lambda() {
            continue;
        }
        tested += 1;
        let hits: Vec<u32> = (0..p)
            .filter(|&k| x.mul_zeta_pow(k as i64).is_primary().unwrap_or(false))
            .collect();
        if hits != [x.primary_exponent()?] {
            return Ok(Err(format!("primary exponents of {x}: {hits:?}")));
        }
    }
    Ok(Ok(()))
}

fn primary_real_units(p: u32, rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    if p > NORM_CHECK_MAX_P {
        return Ok(Ok(()));
    }
    for _ in 0..20 {
        let u = random_unit(p, rng)?;
        let (_, normalized) = u.normalize_primary()?;
        if !normalized.is_real() {
            return Ok(Err(format!("primary associate of unit {u} is not real")));
        }
        let t = u.unit_ratio_exponent()?;
        if u.is_real() && (u.primary_exponent()? != 0 || t != 0) {
            return Ok(Err(format!("real unit {u} is not primary")));
        }
    }
    Ok(Ok(()))
}

fn quadratic_character(p: u32, rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let mut sum = 0i64;
    for k in 1..p as i64 {
        sum += legendre(k, p)? as i64;
    }
    for _ in 0..20 {
        let a = rng.gen_range(-1000..1000i64);
        let b = rng.gen_range(-1000..1000i64);
        if legendre(a * b, p)? != legendre(a, p)? * legendre(b, p)? {
            return Ok(Err(format!("legendre not multiplicative at {a}, {b}")));
        }
    }
    let theta = sqrt_p_star(p)?;
    Ok(ensure(sum == 0, || format!("character sum {sum}")).and(ensure(
        (&theta * &theta).as_integer() == Some(&BigInt::from(p_star(p)?)),
        || "Gauss sum does not square to p*".into(),
    )))
}

fn gauss_split(p: u32, _: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    let s = split_fg(p)?;
    let l = (p as usize - 1) / 2;
    if s.product() != m_poly(p).scale(&BigInt::from(4)) {
        return Ok(Err("4 m_p != f^2 - p* g^2".into()));
    }
    if s.f.degree() != Some(l) || s.f.leading() != BigInt::from(2) {
        return Ok(Err(format!("f = {} has wrong degree or leading term", s.f)));
    }
    if s.reconstruct_q1()? != build_q(p, 1)? {
        return Ok(Err("f + theta g != q1".into()));
    }
    if p % 4 == 3 && p > 3 {
        let anti = (0..=l).all(|k| s.f.coeff(l - k) == -s.f.coeff(k));
        let sym = (0..=l).all(|k| s.g.coeff(l - k) == s.g.coeff(k));
        if !anti || !sym || !s.f.eval_at_one().is_zero() {
            return Ok(Err(format!("case 2 symmetry fails: f = {}, g = {}", s.f, s.g)));
        }
    }
    Ok(Ok(()))
}

fn pell(p: u32, _: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    if p <= 3 {
        return Ok(ensure(solve_cf(p as u64)?.a() == &BigInt::from(2), || {
            "cf(3) != (2, 1)".into()
        }));
    }
    let (s, t) = solve_dirichlet(p as u64)?;
    let fund = solve_cf(p as u64)?;
    if classify(&s, &fund).is_err() {
        return Ok(Err(format!("{s} is not a power of {fund}")));
    }
    if t.eq6_lhs() != BigInt::from(4 * p as u64) {
        return Ok(Err("4p != f(1)^2 - p* g(1)^2".into()));
    }
    if t.case != DirichletCase::ThreeMod4 {
        return Ok(ensure(t.eq7_lhs() == BigInt::from(4), || {
            "p xi1^2 - y1^2 != 4".into()
        }));
    }
    let odd = |n: &BigInt| !(n % 2u32).is_zero();
    Ok(ensure(odd(&t.y2) && odd(&t.xi2), || {
        format!("y2 = {}, xi2 = {} not both odd", t.y2, t.xi2)
    }))
}

fn flt_identities(p: u32, rng: &mut ChaCha8Rng) -> Result<std::result::Result<(), String>> {
    if p <= 13 {
        for i in 0..p as i64 {
            for j in i + 1..p as i64 {
                if norm_gap(i, j, p)? != BigInt::from(p) {
                    return Ok(Err(format!("N(z^{i} - z^{j}) != p")));
                }
            }
        }
    }
    if p <= 11 {
        for _ in 0..10 {
            let x = rng.gen_range(-10..=10i64);
            let y = rng.gen_range(-10..=10i64);
            if !factor_product_check(x, y, p)? {
                return Ok(Err(format!("product identity fails at ({x}, {y})")));
            }
        }
    }
    for _ in 0..5 {
        let a = random_element(p, 20, rng);
        if !frobenius_check(&a) {
            return Ok(Err(format!("Frobenius congruence fails for {a}")));
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_small_primes_pass() {
        let results = run_suite(13);
        assert_eq!(results.len(), 5 * CHECKS.len());
        for r in &results {
            assert!(r.passed, "{} p={}: {}", r.name, r.p, r.detail);
        }
        assert!(results.windows(2).all(|w| w[0].p <= w[1].p));
    }
}
