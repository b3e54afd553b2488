//! Exact arithmetic in the ring of integers `Z[ζ_p]` of a prime cyclotomic
//! field, together with λ-adic digits (λ = 1 − ζ), primary elements and the
//! unit criteria built on them.
//!
//! Elements are stored in the power basis `{1, ζ, …, ζ^{p-2}}`; every value
//! is kept canonical, so structural equality is ring equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{inv_mod_prime, odd_prime, rem_euclid};
use crate::error::{Error, Result};

/// An element of `Z[ζ_p]`, `Σ coeffs[k]·ζ^k` for `k < p − 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<BigInt>,
}

/// The first two digits of `α ≡ a0 + a1·λ (mod λ²)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LambdaDigits {
    pub a0: u32,
    pub a1: u32,
}

impl CycInt {
    /// Canonicalizes `Σ raw[k]·ζ^k`; `raw` may have any length.
    pub fn new<I, T>(p: u32, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let p = odd_prime(p as u64)?;
        let mut cyc = vec![BigInt::zero(); p as usize];
        for (k, c) in raw.into_iter().enumerate() {
            cyc[k % p as usize] += c.into();
        }
        Ok(Self::from_cyclic(p, cyc))
    }

    pub fn zero(p: u32) -> Result<Self> {
        Self::from_int(p, 0)
    }

    pub fn one(p: u32) -> Result<Self> {
        Self::from_int(p, 1)
    }

    pub fn from_int(p: u32, n: impl Into<BigInt>) -> Result<Self> {
        Self::new(p, [n.into()])
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(p: u32, k: i64) -> Result<Self> {
        let p = odd_prime(p as u64)?;
        let mut cyc = vec![BigInt::zero(); p as usize];
        cyc[rem_euclid(k, p) as usize] = BigInt::one();
        Ok(Self::from_cyclic(p, cyc))
    }

    /// λ = 1 − ζ.
    pub fn lambda(p: u32) -> Result<Self> {
        Self::new(p, [1, -1])
    }

    /// Reduces a length-`p` vector modulo `1 + ζ + … + ζ^{p−1}`. `p` is trusted.
    pub(crate) fn from_cyclic(p: u32, mut cyc: Vec<BigInt>) -> Self {
        debug_assert_eq!(cyc.len(), p as usize);
        let top = cyc.pop().expect("p >= 3");
        if !top.is_zero() {
            for c in cyc.iter_mut() {
                *c -= &top;
            }
        }
        Self { p, coeffs: cyc }
    }

    /// Coefficients over `{1, ζ, …, ζ^{p−1}}` with the last entry zero.
    fn cyclic(&self) -> Vec<BigInt> {
        let mut v = self.coeffs.clone();
        v.push(BigInt::zero());
        v
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if any.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p,
                right: other.p,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { p: self.p, coeffs })
    }

    /// Schoolbook product modulo `ζ^p − 1`, then reduced to the basis.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let p = self.p as usize;
        let mut cyc = vec![BigInt::zero(); p];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = (i + j) % p;
                cyc[k] += a * b;
            }
        }
        Ok(Self::from_cyclic(self.p, cyc))
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * n).collect(),
        }
    }

    /// Divides every coefficient by `n`, provided all divisions are exact.
    pub fn div_exact_int(&self, n: &BigInt) -> Option<Self> {
        if n.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(n);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Self { p: self.p, coeffs })
    }

    /// `ζ^k · self`, computed as a rotation of the cyclic coefficients.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let p = self.p as usize;
        let shift = rem_euclid(k, self.p) as usize;
        let cyc = self.cyclic();
        let mut out = vec![BigInt::zero(); p];
        for (j, c) in cyc.into_iter().enumerate() {
            out[(j + shift) % p] = c;
        }
        Self::from_cyclic(self.p, out)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Self::one(self.p).expect("valid modulus");
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The automorphism `σ_k : ζ ↦ ζ^k`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let reduced = rem_euclid(k, self.p);
        if reduced == 0 {
            return Err(Error::InvalidAutomorphism { k, p: self.p });
        }
        let k = reduced;
        let p = self.p as usize;
        let mut out = vec![BigInt::zero(); p];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j * k as usize % p] = c.clone();
        }
        Ok(Self::from_cyclic(self.p, out))
    }

    /// Complex conjugation, `σ_{p−1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(self.p as i64 - 1).expect("p - 1 is a unit mod p")
    }

    /// `∏_{k=1}^{p−1} σ_k(self)`.
    pub fn norm(&self) -> Result<BigInt> {
        let mut acc = self.clone();
        for k in 2..self.p as i64 {
            acc = &acc * &self.galois(k)?;
        }
        acc.as_integer().cloned().ok_or_else(|| {
            Error::Internal(format!("norm of {self} is not a rational integer"))
        })
    }

    /// Exact division by λ = 1 − ζ, if λ divides `self`.
    pub fn div_lambda(&self) -> Option<Self> {
        let p = BigInt::from(self.p);
        let sum: BigInt = self.coeffs.iter().sum();
        let (t, r) = sum.div_rem(&p);
        if !r.is_zero() {
            return None;
        }
        // Shift by a multiple of 1 + ζ + … + ζ^{p−1} (which is zero) so the
        // coefficient sum vanishes, then invert (1 − ζ) by running sums.
        let mut y = Vec::with_capacity(self.p as usize);
        let mut run = BigInt::zero();
        for c in self.cyclic() {
            run += c - &t;
            y.push(run.clone());
        }
        debug_assert!(y.last().is_some_and(Zero::is_zero));
        Some(Self::from_cyclic(self.p, y))
    }

    pub fn lambda_digits(&self) -> LambdaDigits {
        let p = BigInt::from(self.p);
        let mut sum = BigInt::zero();
        let mut weighted = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            sum += c;
            weighted += c * k;
        }
        let to_u32 = |x: BigInt| -> u32 {
            u32::try_from(x.mod_floor(&p)).expect("residue below p")
        };
        LambdaDigits {
            a0: to_u32(sum),
            a1: to_u32(-weighted),
        }
    }

    pub fn is_prime_to_lambda(&self) -> bool {
        self.lambda_digits().a0 != 0
    }

    /// Congruent to a rational integer modulo λ². Only defined for elements
    /// prime to λ.
    pub fn is_primary(&self) -> Result<bool> {
        let digits = self.lambda_digits();
        if digits.a0 == 0 {
            return Err(Error::NotPrimeToLambda);
        }
        Ok(digits.a1 == 0)
    }

    /// The unique `0 <= k < p` such that `ζ^k · self` is primary.
    pub fn primary_exponent(&self) -> Result<u32> {
        let LambdaDigits { a0, a1 } = self.lambda_digits();
        if a0 == 0 {
            return Err(Error::NotPrimeToLambda);
        }
        let k = a1 as u64 * inv_mod_prime(a0, self.p) as u64 % self.p as u64;
        Ok(k as u32)
    }

    /// `ζ^k · self` for `k = primary_exponent()`.
    pub fn normalize_primary(&self) -> Result<(u32, Self)> {
        let k = self.primary_exponent()?;
        Ok((k, self.mul_zeta_pow(k as i64)))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.norm()?.abs().is_one())
    }

    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// The `t` with `u = ζ^t · ū`, for a unit `u`.
    pub fn unit_ratio_exponent(&self) -> Result<u32> {
        let norm = self.norm()?;
        if !norm.abs().is_one() {
            return Err(Error::NotAUnit(norm.to_string()));
        }
        let conj = self.conjugate();
        (0..self.p)
            .find(|&t| conj.mul_zeta_pow(t as i64) == *self)
            .ok_or_else(|| Error::Internal(format!("{self} / conj({self}) is not a root of unity")))
    }
}

/// `(1 − ζ^k)/(1 − ζ) = 1 + ζ + … + ζ^{k−1}`, a unit for `1 <= k <= p − 1`.
pub fn cyclotomic_unit(p: u32, k: u32) -> Result<CycInt> {
    let p = odd_prime(p as u64)?;
    if k == 0 || k >= p {
        return Err(Error::OutOfRange(format!(
            "cyclotomic unit index {k} outside 1..={}",
            p - 1
        )));
    }
    let u = CycInt::new(p, (0..k).map(|_| 1))?;
    let norm = u.norm()?;
    if !norm.abs().is_one() {
        return Err(Error::Internal(format!(
            "cyclotomic unit {u} has norm {norm}"
        )));
    }
    Ok(u)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live in different rings.
        impl $tr<&CycInt> for &CycInt {
            type Output = CycInt;
            fn $method(self, rhs: &CycInt) -> CycInt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $tr<CycInt> for CycInt {
            type Output = CycInt;
            fn $method(self, rhs: CycInt) -> CycInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
