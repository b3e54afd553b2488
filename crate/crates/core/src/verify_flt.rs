//! Computable identities behind the first case of Fermat's Last Theorem for
//! regular primes: the cyclotomic factorization of `x^p + y^p`, the
//! Frobenius congruence `α^p ≡ Σ a_k^p (mod p)` and `N(ζ^i − ζ^j) = p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use crate::arith::{odd_prime, rem_euclid};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};

/// A candidate (hypothetical) solution of `x^p + y^p = z^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatTriple {
    pub x0: BigInt,
    pub y0: BigInt,
    pub z0: BigInt,
    pub p: u32,
}

impl FermatTriple {
    pub fn new(x0: impl Into<BigInt>, y0: impl Into<BigInt>, z0: impl Into<BigInt>, p: u32) -> Self {
        Self {
            x0: x0.into(),
            y0: y0.into(),
            z0: z0.into(),
            p,
        }
    }

    pub fn pairwise_coprime(&self) -> bool {
        self.x0.gcd(&self.y0) == BigInt::from(1)
            && self.y0.gcd(&self.z0) == BigInt::from(1)
            && self.x0.gcd(&self.z0) == BigInt::from(1)
    }
}

/// `∏_{i=0}^{p−1} (x + ζ^i y)` in `Z[ζ_p]`, when it is a rational integer.
pub fn cyclotomic_product(x: i64, y: i64, p: u32) -> Result<Option<BigInt>> {
    let mut acc = CycInt::one(p)?;
    let xc = CycInt::from_int(p, x)?;
    let yz = CycInt::from_int(p, y)?;
    for i in 0..p as i64 {
        acc = &acc * &(&xc + &yz.mul_zeta_pow(i));
    }
    Ok(acc.as_integer().cloned())
}

/// Checks `∏_{i=0}^{p−1} (x + ζ^i y) = x^p + y^p`.
pub fn factor_product_check(x: i64, y: i64, p: u32) -> Result<bool> {
    let expected = BigInt::from(x).pow(p) + BigInt::from(y).pow(p);
    Ok(cyclotomic_product(x, y, p)? == Some(expected))
}

/// Checks `α^p ≡ Σ a_k^p (mod p)` coefficientwise, and `α^p ≡ ᾱ^p (mod p)`.
pub fn frobenius_check(alpha: &CycInt) -> bool {
    let p = alpha.p();
    let pb = BigInt::from(p);
    let divisible = |e: &CycInt| e.coeffs().iter().all(|c| c.mod_floor(&pb).is_zero());

    let power = alpha.pow(p);
    let frob: BigInt = alpha.coeffs().iter().map(|c| c.pow(p)).sum();
    let frob = CycInt::from_int(p, frob).expect("valid modulus");
    let conj_power = alpha.conjugate().pow(p);
    divisible(&(&power - &frob)) && divisible(&(&power - &conj_power))
}

/// `N(ζ^i − ζ^j)`, which is `p` whenever `i ≢ j (mod p)`.
pub fn norm_gap(i: i64, j: i64, p: u32) -> Result<BigInt> {
    let p = odd_prime(p as u64)?;
    if rem_euclid(i - j, p) == 0 {
        return Err(Error::Degenerate(format!(
            "zeta^{i} - zeta^{j} is zero for p = {p}"
        )));
    }
    (&CycInt::zeta_pow(p, i)? - &CycInt::zeta_pow(p, j)?).norm()
}

/// Given `x₀^p + y₀^p ≡ z₀^p (mod p)`, checks that `x₀ + y₀ − z₀ ≡ 0 (mod p)`.
pub fn fermat_congruence_check(t: &FermatTriple) -> Result<bool> {
    let p = odd_prime(t.p as u64)?;
    let pb = BigInt::from(p);
    let lhs = t.x0.clone().pow(p) + t.y0.clone().pow(p) - t.z0.clone().pow(p);
    if !lhs.mod_floor(&pb).is_zero() {
        return Err(Error::Precondition(format!(
            "x0^p + y0^p is not congruent to z0^p mod {p}"
        )));
    }
    Ok((&t.x0 + &t.y0 - &t.z0).mod_floor(&pb).is_zero())
}

/// All `1 <= x <= y < z <= bound` with `x^p + y^p = z^p`.
pub fn fermat_search(bound: u64, p: u32) -> Vec<FermatTriple> {
    let pow = |n: u64| BigInt::from(n).pow(p);
    let powers: Vec<BigInt> = (0..=bound).map(pow).collect();
    let mut hits = Vec::new();
    for x in 1..=bound {
        for y in x..=bound {
            let s = &powers[x as usize] + &powers[y as usize];
            if let Ok(z) = powers[(y + 1) as usize..].binary_search(&s) {
                hits.push(FermatTriple::new(x, y, y + 1 + z as u64, p));
            }
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        for p in [3u32, 5, 7] {
            assert_eq!(cyclotomic_product(1, 0, p).unwrap(), Some(BigInt::from(1)));
        }
        assert_eq!(cyclotomic_product(2, 1, 3).unwrap(), Some(BigInt::from(9)));
        assert_eq!(cyclotomic_product(2, 3, 5).unwrap(), Some(BigInt::from(275)));
        assert!(factor_product_check(-4, 7, 7).unwrap());
    }

    #[test]
    fn frobenius() {
        assert!(frobenius_check(&CycInt::zeta_pow(3, 1).unwrap()));
        let a = CycInt::new(3, [1, 1]).unwrap();
        assert_eq!(a.pow(3), CycInt::new(3, [2, 3, 3]).unwrap());
        assert!(frobenius_check(&a));
        assert!(frobenius_check(&CycInt::from_int(7, -12).unwrap()));
    }

    #[test]
    fn norm_gaps() {
        assert_eq!(norm_gap(1, 2, 5).unwrap(), BigInt::from(5));
        assert_eq!(norm_gap(0, 1, 7).unwrap(), BigInt::from(7));
        assert_eq!(norm_gap(2, 3, 7).unwrap(), BigInt::from(7));
        assert!(matches!(norm_gap(2, 9, 7), Err(Error::Degenerate(_))));
    }

    #[test]
    fn congruences() {
        assert!(fermat_congruence_check(&FermatTriple::new(1, 1, 2, 3)).unwrap());
        assert!(fermat_congruence_check(&FermatTriple::new(2, 3, 5, 5)).unwrap());
        assert!(fermat_congruence_check(&FermatTriple::new(1, 2, 3, 7)).unwrap());
        assert!(matches!(
            fermat_congruence_check(&FermatTriple::new(1, 1, 1, 5)),
            Err(Error::Precondition(_))
        ));
        assert!(FermatTriple::new(2, 3, 5, 5).pairwise_coprime());
        assert!(!FermatTriple::new(2, 4, 5, 5).pairwise_coprime());
    }

    #[test]
    fn search_finds_squares_not_cubes() {
        let squares = fermat_search(5, 2);
        assert_eq!(squares, vec![FermatTriple::new(3, 4, 5, 2)]);
        assert!(fermat_search(30, 3).is_empty());
    }
}
