//! Solutions of `x² − d·y² = 1`.
//!
//! [`solve_dirichlet`] derives a solution for a prime `d = p > 3` from the
//! splitting `4·m_p = f² − p*·g²`: evaluating at `x = 1` (for `p ≡ 1 mod 4`)
//! or at `x = i` (for `p ≡ 3 mod 4`) produces a near-solution which is then
//! squared (or cubed and squared) into a genuine one. [`solve_cf`] is the
//! classical continued-fraction method and serves as an independent oracle.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_perfect_square, is_prime, is_squarefree, isqrt};
use crate::error::{Error, Result};
use crate::gauss_split::{split_fg, GaussianInt};

/// A non-trivial solution `a² − d·b² = 1` with `a, b > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PellSolution {
    d: u64,
    a: BigInt,
    b: BigInt,
}

impl PellSolution {
    pub fn new(d: u64, a: BigInt, b: BigInt) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::Precondition(format!(
                "solution components must be positive, got ({a}, {b})"
            )));
        }
        if &a * &a - BigInt::from(d) * &b * &b != BigInt::one() {
            return Err(Error::Precondition(format!(
                "({a}, {b}) does not satisfy a^2 - {d} b^2 = 1"
            )));
        }
        Ok(Self { d, a, b })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }
}

impl fmt::Display for PellSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DirichletCase {
    /// `p ≡ 1 (mod 8)`
    OneMod8,
    /// `p ≡ 5 (mod 8)`
    FiveMod8,
    /// `p ≡ 3 (mod 4)`
    ThreeMod4,
}

impl DirichletCase {
    pub fn of(p: u32) -> Self {
        match p % 8 {
            1 => Self::OneMod8,
            5 => Self::FiveMod8,
            _ => Self::ThreeMod4,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::OneMod8 => "1mod8",
            Self::FiveMod8 => "5mod8",
            Self::ThreeMod4 => "3mod4",
        }
    }
}

/// Intermediate values of [`solve_dirichlet`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirichletTrace {
    pub p: u32,
    pub case: DirichletCase,
    /// `f(1)`, also `x₁`.
    pub f1: BigInt,
    /// `g(1)`, also `y₁`.
    pub g1: BigInt,
    /// `x₁ / p`.
    pub xi1: BigInt,
    pub y2: BigInt,
    pub xi2: BigInt,
    /// Only for `p ≡ 5 (mod 8)`: `(y₂/8, ξ₂/8)`.
    pub y3: Option<BigInt>,
    pub xi3: Option<BigInt>,
    /// Only for `p ≡ 3 (mod 4)`: `i*`, `f(i)` and `g(i)`.
    pub i_star: Option<GaussianInt>,
    pub f_at_i: Option<GaussianInt>,
    pub g_at_i: Option<GaussianInt>,
}

impl DirichletTrace {
    pub fn x1(&self) -> &BigInt {
        &self.f1
    }

    pub fn y1(&self) -> &BigInt {
        &self.g1
    }

    /// `f(1)² − p*·g(1)²`, which equals `4p`.
    pub fn eq6_lhs(&self) -> BigInt {
        let ps = if self.p % 4 == 1 {
            BigInt::from(self.p)
        } else {
            -BigInt::from(self.p)
        };
        &self.f1 * &self.f1 - ps * &self.g1 * &self.g1
    }

    /// `p·ξ₁² − (−1)^{(p−1)/2}·y₁²`, which equals 4.
    pub fn eq7_lhs(&self) -> BigInt {
        let p = BigInt::from(self.p);
        let y1sq = &self.g1 * &self.g1;
        let base = p * &self.xi1 * &self.xi1;
        if self.p % 4 == 1 {
            base - y1sq
        } else {
            base + y1sq
        }
    }
}

fn exact_div(n: &BigInt, d: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = n.div_rem(d);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: {d} does not divide {n}")));
    }
    Ok(q)
}

/// Dirichlet's cyclotomic construction for a prime `p > 3`.
pub fn solve_dirichlet(p: u64) -> Result<(PellSolution, DirichletTrace)> {
    if p <= 3 || !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::Unsupported(format!(
            "cyclotomic method needs a prime p > 3, got {p}"
        )));
    }
    let p32 = p as u32;
    let split = split_fg(p32)?;
    let pb = BigInt::from(p);
    let f1 = split.f.eval_at_one();
    let g1 = split.g.eval_at_one();
    let xi1 = exact_div(&f1, &pb, "xi1 = f(1)/p")?;
    let case = DirichletCase::of(p32);

    let mut trace = DirichletTrace {
        p: p32,
        case,
        f1: f1.clone(),
        g1: g1.clone(),
        xi1: xi1.clone(),
        y2: BigInt::zero(),
        xi2: BigInt::zero(),
        y3: None,
        xi3: None,
        i_star: None,
        f_at_i: None,
        g_at_i: None,
    };

    let (a, b) = match case {
        DirichletCase::OneMod8 => {
            let two = BigInt::from(2);
            let y2 = exact_div(&g1, &two, "y2 = y1/2")?;
            let xi2 = exact_div(&xi1, &two, "xi2 = xi1/2")?;
            let a = &y2 * &y2 + &pb * &xi2 * &xi2;
            let b = &two * &y2 * &xi2;
            trace.y2 = y2;
            trace.xi2 = xi2;
            (a, b)
        }
        DirichletCase::FiveMod8 => {
            let three = BigInt::from(3);
            let eight = BigInt::from(8);
            let y1 = &g1;
            // (y₁ + √p ξ₁)³
            let y2 = y1 * y1 * y1 + &three * &pb * &xi1 * &xi1 * y1;
            let xi2 = &pb * &xi1 * &xi1 * &xi1 + &three * y1 * y1 * &xi1;
            let y3 = exact_div(&y2, &eight, "y3 = y2/8")?;
            let xi3 = exact_div(&xi2, &eight, "xi3 = xi2/8")?;
            let a = &y3 * &y3 + &pb * &xi3 * &xi3;
            let b = BigInt::from(2) * &y3 * &xi3;
            trace.y2 = y2;
            trace.xi2 = xi2;
            trace.y3 = Some(y3);
            trace.xi3 = Some(xi3);
            (a, b)
        }
        DirichletCase::ThreeMod4 => {
            let i_star = if p % 8 == 3 {
                -&GaussianInt::i()
            } else {
                GaussianInt::i()
            };
            let one = GaussianInt::new(1, 0);
            let f_i = split.f.eval_at_i();
            let g_i = split.g.eval_at_i();
            let integer_quotient = |num: &GaussianInt, den: &GaussianInt, what: &str| {
                num.div_exact(den)
                    .and_then(|q| q.as_integer().cloned())
                    .ok_or_else(|| {
                        Error::Internal(format!("{what}: {num} is not an integer multiple of {den}"))
                    })
            };
            let y2 = integer_quotient(&f_i, &(&one + &i_star), "f(i) = y2 (1 + i*)")?;
            let xi2 = integer_quotient(&g_i, &(&one - &i_star), "g(i) = xi2 (1 - i*)")?;
            let gap = &y2 * &y2 - &pb * &xi2 * &xi2;
            if gap.abs() != BigInt::from(2) {
                return Err(Error::Internal(format!(
                    "y2^2 - p xi2^2 = {gap}, expected +-2"
                )));
            }
            let a = exact_div(&(&y2 * &y2 + &pb * &xi2 * &xi2), &BigInt::from(2), "a")?;
            let b = &y2 * &xi2;
            trace.y2 = y2;
            trace.xi2 = xi2;
            trace.i_star = Some(i_star);
            trace.f_at_i = Some(f_i);
            trace.g_at_i = Some(g_i);
            (a, b)
        }
    };

    let solution = PellSolution::new(p, a.abs(), b.abs())
        .map_err(|e| Error::Internal(format!("cyclotomic construction for p = {p}: {e}")))?;
    Ok((solution, trace))
}

/// Fundamental solution via the continued-fraction expansion of `√d`.
pub fn solve_cf(d: u64) -> Result<PellSolution> {
    if d < 2 {
        return Err(Error::OutOfRange(format!("d = {d} must be at least 2")));
    }
    if is_perfect_square(d) {
        return Err(Error::PerfectSquare(d));
    }
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let a0 = isqrt(d);
    // √d = [a0; a1, a2, …] with (m, q) the standard complete-quotient state.
    let (mut m, mut q, mut a) = (0u64, 1u64, a0);
    let (mut h_prev, mut h) = (BigInt::one(), BigInt::from(a0));
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    let db = BigInt::from(d);
    loop {
        if &h * &h - &db * &k * &k == BigInt::one() {
            return PellSolution::new(d, h, k);
        }
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        let ab = BigInt::from(a);
        let h_next = &ab * &h + &h_prev;
        let k_next = &ab * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}

fn compose(x: &PellSolution, y: &PellSolution) -> (BigInt, BigInt) {
    let d = BigInt::from(x.d);
    (
        &x.a * &y.a + d * &x.b * &y.b,
        &x.a * &y.b + &x.b * &y.a,
    )
}

/// `(a + b√d)^n` for `n >= 1`.
pub fn power_solution(s: &PellSolution, n: u32) -> Result<PellSolution> {
    if n == 0 {
        return Err(Error::OutOfRange("power must be at least 1".into()));
    }
    let mut acc: Option<PellSolution> = None;
    let mut base = s.clone();
    let mut n = n;
    loop {
        if n & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(prev) => {
                    let (a, b) = compose(&prev, &base);
                    PellSolution { d: s.d, a, b }
                }
            });
        }
        n >>= 1;
        if n == 0 {
            break;
        }
        let (a, b) = compose(&base, &base);
        base = PellSolution { d: s.d, a, b };
    }
    Ok(acc.expect("n >= 1"))
}

/// The `n` with `s = fund^n`.
pub fn classify(s: &PellSolution, fund: &PellSolution) -> Result<u32> {
    if s.d != fund.d {
        return Err(Error::Precondition(format!(
            "solutions for different d: {} vs {}",
            s.d, fund.d
        )));
    }
    let mut power = fund.clone();
    let mut n = 1u32;
    while power.a <= s.a {
        if power == *s {
            return Ok(n);
        }
        let (a, b) = compose(&power, fund);
        power = PellSolution { d: s.d, a, b };
        n += 1;
    }
    Err(Error::NotInGroup)
}
