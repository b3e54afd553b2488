//! Small-integer helpers shared by the other modules.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Validates `p` as an odd prime that fits the ring modulus type.
pub fn odd_prime(p: u64) -> Result<u32> {
    if p < 3 || !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::InvalidModulus(p));
    }
    Ok(p as u32)
}

pub fn odd_primes_up_to(limit: u64) -> Vec<u32> {
    (3..=limit)
        .step_by(2)
        .filter(|&n| is_prime(n))
        .map(|n| n as u32)
        .collect()
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return false;
            }
        }
        d += 1;
    }
    true
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Least non-negative residue of `a` modulo `m`.
pub fn rem_euclid(a: i64, m: u32) -> u32 {
    a.rem_euclid(m as i64) as u32
}

/// Inverse of `a` modulo the prime `p`; `a` must be non-zero mod `p`.
pub fn inv_mod_prime(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    mod_pow(a as u64, p as u64 - 2, p as u64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_squares() {
        assert_eq!(odd_primes_up_to(20), vec![3, 5, 7, 11, 13, 17, 19]);
        assert!(odd_prime(2).is_err());
        assert!(odd_prime(9).is_err());
        assert!(is_squarefree(30));
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(49));
        assert!(is_perfect_square(49));
        assert!(!is_perfect_square(50));
        assert_eq!(isqrt(u64::MAX), 4294967295);
    }

    #[test]
    fn inverses() {
        for p in [3u32, 5, 7, 101] {
            for a in 1..p {
                assert_eq!(a as u64 * inv_mod_prime(a, p) as u64 % p as u64, 1);
            }
        }
    }
}
