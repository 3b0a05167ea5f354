//! Coefficient field selection for homology computations.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::Error;

/// Coefficient field for rank computations: the rationals, or a prime
/// field `GF(p)` with `p` fitting in a machine word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    /// Exact rational arithmetic (fraction-free elimination).
    Rationals,
    /// Arithmetic modulo a prime.
    PrimeField(u64),
}

impl FieldSpec {
    /// Validates the field: `PrimeField(p)` requires `p` prime and small
    /// enough that `p^2` fits in a `u64` multiplication via `u128`.
    pub fn validate(self) -> Result<Self, Error> {
        match self {
            FieldSpec::Rationals => Ok(self),
            FieldSpec::PrimeField(p) => {
                if p < 2 || !is_prime(p) {
                    Err(Error::NotPrime(p))
                } else {
                    Ok(self)
                }
            }
        }
    }

    /// Parses `"rat"`, `"q"`, or a prime like `"32003"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        match text.to_ascii_lowercase().as_str() {
            "rat" | "q" | "qq" | "rationals" => Ok(FieldSpec::Rationals),
            other => {
                let p: u64 = other
                    .parse()
                    .map_err(|_| Error::Parse(format!("field '{text}' is neither 'rat' nor a prime")))?;
                FieldSpec::PrimeField(p).validate()
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Deterministic Miller-Rabin, exact for all `u64` inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This witness set decides primality for every 64-bit integer.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
