//! Legendre symbols, `p* = (−1)^{(p−1)/2}·p` and an explicit square root of
//! `p*` in `Z[ζ_p]`.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::arith::{mod_pow, odd_prime, rem_euclid};
use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};

/// The quadratic residues of an odd prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadChar {
    p: u32,
    residues: BTreeSet<u32>,
}

impl QuadChar {
    pub fn new(p: u32) -> Result<Self> {
        let p = odd_prime(p as u64)?;
        let residues = (1..p as u64)
            .map(|x| (x * x % p as u64) as u32)
            .collect();
        Ok(Self { p, residues })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn residues(&self) -> impl Iterator<Item = u32> + '_ {
        self.residues.iter().copied()
    }

    pub fn non_residues(&self) -> impl Iterator<Item = u32> + '_ {
        (1..self.p).filter(|k| !self.residues.contains(k))
    }

    /// The smallest quadratic non-residue.
    pub fn least_non_residue(&self) -> u32 {
        self.non_residues().next().expect("odd prime has a non-residue")
    }

    pub fn is_residue(&self, k: i64) -> bool {
        self.residues.contains(&rem_euclid(k, self.p))
    }
}

/// `(k/p)` by Euler's criterion.
pub fn legendre(k: i64, p: u32) -> Result<i8> {
    let p = odd_prime(p as u64)?;
    let r = rem_euclid(k, p) as u64;
    if r == 0 {
        return Ok(0);
    }
    match mod_pow(r, (p as u64 - 1) / 2, p as u64) {
        1 => Ok(1),
        e if e == p as u64 - 1 => Ok(-1),
        e => Err(Error::Internal(format!(
            "Euler criterion gave {e} for ({k}/{p})"
        ))),
    }
}

pub fn p_star(p: u32) -> Result<i64> {
    let p = odd_prime(p as u64)?;
    Ok(if p % 4 == 1 { p as i64 } else { -(p as i64) })
}

/// The quadratic Gauss sum `Σ_{k=1}^{p−1} (k/p)·ζ^k`, whose square is `p*`.
pub fn sqrt_p_star(p: u32) -> Result<CycInt> {
    let ps = p_star(p)?;
    let raw = (0..p as i64)
        .map(|k| legendre(k, p).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    let theta = CycInt::new(p, raw)?;
    let square = &theta * &theta;
    if square.as_integer() != Some(&BigInt::from(ps)) {
        return Err(Error::Internal(format!(
            "Gauss sum squared to {square}, expected {ps}"
        )));
    }
    Ok(theta)
}
