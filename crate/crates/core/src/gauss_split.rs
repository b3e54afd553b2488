//! The Gauss-period polynomials `q₁ = 2∏_{(k/p)=1}(x − ζ^k)` and
//! `q₋₁ = 2∏_{(k/p)=−1}(x − ζ^k)`, and their splitting `q₁ = f + √p*·g`,
//! `q₋₁ = f − √p*·g` with `f, g ∈ Z[x]`, so that `4·m_p = f² − p*·g²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::odd_prime;
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::quadratic::{legendre, p_star, sqrt_p_star, QuadChar};

/// A polynomial in `Z[x]`; `coeffs[k]` is the coefficient of `x^k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut poly = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        poly.trim();
        poly
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * n))
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Evaluation at `i = √−1`, cycling `1, i, −1, −i` over the powers.
    pub fn eval_at_i(&self) -> GaussianInt {
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            match k % 4 {
                0 => re += c,
                1 => im += c,
                2 => re -= c,
                _ => im -= c,
            }
        }
        GaussianInt { re, im }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
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
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// `re + im·i` with exact integer parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `self / rhs` when the quotient is again a Gaussian integer.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let n = rhs.norm();
        if n.is_zero() {
            return None;
        }
        let num = self * &rhs.conj();
        let (re, r0) = num.re.div_rem(&n);
        let (im, r1) = num.im.div_rem(&n);
        (r0.is_zero() && r1.is_zero()).then_some(Self { re, im })
    }

    /// The rational integer this value equals, if its imaginary part is zero.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.im.is_zero().then_some(&self.re)
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

/// `q₁ = f + θ·g` where `θ` is the Gauss sum with `θ² = p*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussSplit {
    pub p: u32,
    pub p_star: i64,
    pub f: IntPoly,
    pub g: IntPoly,
}

impl GaussSplit {
    /// `f² − p*·g²`, which equals `4·m_p`.
    pub fn product(&self) -> IntPoly {
        &(&self.f * &self.f) - &(&self.g * &self.g).scale(&BigInt::from(self.p_star))
    }

    pub fn identity_holds(&self) -> bool {
        self.product() == m_poly(self.p).scale(&BigInt::from(4))
    }

    /// Coefficients of `f + θ·g` as elements of `Z[ζ_p]`; equal to `q₁`.
    pub fn reconstruct_q1(&self) -> Result<Vec<CycInt>> {
        let theta = sqrt_p_star(self.p)?;
        let n = self.f.coeffs.len().max(self.g.coeffs.len());
        (0..n)
            .map(|k| {
                let c = CycInt::from_int(self.p, self.f.coeff(k))?;
                Ok(&c + &theta.scale(&self.g.coeff(k)))
            })
            .collect()
    }
}

/// `1 + x + … + x^{p−1}`.
pub fn m_poly(p: u32) -> IntPoly {
    IntPoly::new((0..p).map(|_| 1))
}

/// Coefficients (by degree) of `2∏(x − ζ^k)` over `k` with `(k/p) = sign`.
pub fn build_q(p: u32, sign: i8) -> Result<Vec<CycInt>> {
    let p = odd_prime(p as u64)?;
    if sign != 1 && sign != -1 {
        return Err(Error::OutOfRange(format!("character sign {sign}")));
    }
    let mut poly = vec![CycInt::from_int(p, 2)?];
    for k in 1..p {
        if legendre(k as i64, p)? != sign {
            continue;
        }
        // poly · (x − ζ^k)
        let mut next = Vec::with_capacity(poly.len() + 1);
        next.push(-poly[0].mul_zeta_pow(k as i64));
        for j in 1..poly.len() {
            next.push(&poly[j - 1] - &poly[j].mul_zeta_pow(k as i64));
        }
        next.push(poly[poly.len() - 1].clone());
        poly = next;
    }
    Ok(poly)
}

/// Splits `q₁` into integer polynomials `f, g` with `q₁ = f + θ·g`.
///
/// With `τ = σ_n` for the least non-residue `n`, each coefficient `c` of
/// `q₁` gives `f_k = (c + τc)/2` and `g_k = (c − τc)·θ/(2p*)`.
pub fn split_fg(p: u32) -> Result<GaussSplit> {
    let p = odd_prime(p as u64)?;
    let ps = p_star(p)?;
    let theta = sqrt_p_star(p)?;
    let tau = QuadChar::new(p)?.least_non_residue() as i64;
    let two = BigInt::from(2);
    let two_ps = BigInt::from(2 * ps);

    let mut f = Vec::new();
    let mut g = Vec::new();
    for (k, c) in build_q(p, 1)?.iter().enumerate() {
        let tc = c.galois(tau)?;
        let fk = (c + &tc)
            .div_exact_int(&two)
            .ok_or_else(|| Error::Internal(format!("(c + tau c)/2 inexact at x^{k}")))?;
        let gk = (&(c - &tc) * &theta)
            .div_exact_int(&two_ps)
            .ok_or_else(|| Error::Internal(format!("(c - tau c) theta/2p* inexact at x^{k}")))?;
        let rational = |e: &CycInt, name: &str| {
            e.as_integer()
                .cloned()
                .ok_or_else(|| Error::Internal(format!("{name} coefficient of x^{k} is {e}")))
        };
        f.push(rational(&fk, "f")?);
        g.push(rational(&gk, "g")?);
    }

    let split = GaussSplit {
        p,
        p_star: ps,
        f: IntPoly::new(f),
        g: IntPoly::new(g),
    };
    if !split.identity_holds() {
        return Err(Error::Internal(format!(
            "4 m_p != f^2 - p* g^2 for p = {p}"
        )));
    }
    Ok(split)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomial() {
        assert_eq!(m_poly(3), IntPoly::new([1, 1, 1]));
        assert_eq!(m_poly(5), IntPoly::new([1, 1, 1, 1, 1]));
        for p in [3u32, 5, 7, 11] {
            assert_eq!(m_poly(p).eval_at_one(), BigInt::from(p));
        }
    }

    #[test]
    fn q_for_five() {
        let q = build_q(5, 1).unwrap();
        assert_eq!(q.len(), 3);
        let theta = sqrt_p_star(5).unwrap();
        let one = CycInt::one(5).unwrap();
        assert_eq!(q[2], CycInt::from_int(5, 2).unwrap());
        assert_eq!(q[1], &one - &theta);
        assert_eq!(q[0], CycInt::from_int(5, 2).unwrap());
    }

    #[test]
    fn q_constant_term_case_two() {
        for p in [7u32, 11, 19, 23] {
            let q = build_q(p, 1).unwrap();
            assert_eq!(q[0], CycInt::from_int(p, -2).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn q_vanishes_at_residues() {
        let p = 11;
        let q = build_q(p, 1).unwrap();
        for r in QuadChar::new(p).unwrap().residues() {
            let mut acc = CycInt::zero(p).unwrap();
            for (deg, c) in q.iter().enumerate() {
                acc = &acc + &c.mul_zeta_pow(r as i64 * deg as i64);
            }
            assert!(acc.is_zero());
        }
        assert!(build_q(p, 0).is_err());
    }

    #[test]
    fn split_small_primes() {
        let s3 = split_fg(3).unwrap();
        assert_eq!(s3.f, IntPoly::new([1, 2]));
        assert_eq!(s3.g, IntPoly::new([-1]));

        let s5 = split_fg(5).unwrap();
        assert_eq!(s5.f, IntPoly::new([2, 1, 2]));
        assert_eq!(s5.g, IntPoly::new([0, -1]));

        let s7 = split_fg(7).unwrap();
        assert_eq!(s7.f, IntPoly::new([-2, -1, 1, 2]));
        assert_eq!(s7.g, IntPoly::new([0, -1, -1]));
    }

    #[test]
    fn reconstruction() {
        for p in [3u32, 5, 7, 13] {
            let s = split_fg(p).unwrap();
            assert_eq!(s.reconstruct_q1().unwrap(), build_q(p, 1).unwrap());
        }
    }

    #[test]
    fn evaluations() {
        assert_eq!(split_fg(5).unwrap().f.eval_at_one(), BigInt::from(5));
        assert!(split_fg(7).unwrap().f.eval_at_one().is_zero());
        assert_eq!(split_fg(7).unwrap().f.eval_at_i(), GaussianInt::new(-3, -3));
        assert_eq!(IntPoly::new([1, 1, 1, 1]).eval_at_i(), GaussianInt::new(0, 0));
        let poly = IntPoly::new([3, -2, 5, 7, 1]);
        assert_eq!(poly.eval(&BigInt::from(1)), poly.eval_at_one());
    }

    #[test]
    fn gaussian_division() {
        let a = GaussianInt::new(-3, -3);
        let one_plus_i = GaussianInt::new(1, 1);
        assert_eq!(a.div_exact(&one_plus_i), Some(GaussianInt::new(-3, 0)));
        assert_eq!(GaussianInt::new(1, 0).div_exact(&one_plus_i), None);
        assert_eq!(&GaussianInt::i() * &GaussianInt::i(), GaussianInt::new(-1, 0));
    }

    #[test]
    fn poly_display() {
        assert_eq!(IntPoly::new([-2, -1, 1, 2]).to_string(), "2x^3 + x^2 - x - 2");
        assert_eq!(IntPoly::new([0, -1, -1]).to_string(), "-x^2 - x");
        assert_eq!(IntPoly::default().to_string(), "0");
    }
}
