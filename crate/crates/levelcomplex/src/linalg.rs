//! Exact matrix rank over the rationals and over prime fields.
//!
//! Boundary matrices here have entries in `{-1, 0, 1}`, so ranks over the
//! rationals are computed fraction-free (Bareiss): all intermediate values
//! are integer minors of the input. The machine-integer path checks every
//! multiplication and falls back to arbitrary precision on overflow.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::FieldSpec;

/// Rank of an integer matrix over the field named by `field`.
pub fn rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_rational(rows),
        FieldSpec::PrimeField(p) => rank_gfp(rows, p),
    }
}

/// Rank over the rationals via fraction-free elimination.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    match rank_bareiss_i128(rows) {
        Some(r) => r,
        None => rank_bareiss_bigint(rows),
    }
}

/// Bareiss elimination in `i128`; `None` signals overflow.
fn rank_bareiss_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        // Prefer the smallest nonzero pivot to slow entry growth.
        let pivot_row = (rank..nrows)
            .filter(|&i| a[i][col] != 0)
            .min_by_key(|&i| a[i][col].unsigned_abs());
        let Some(pivot_row) = pivot_row else { continue };
        a.swap(rank, pivot_row);
        for i in rank + 1..nrows {
            if a[i][col] == 0 && prev == 1 {
                continue;
            }
            for j in col + 1..ncols {
                let lhs = a[rank][col].checked_mul(a[i][j])?;
                let rhs = a[i][col].checked_mul(a[rank][j])?;
                a[i][j] = lhs.checked_sub(rhs)? / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
    }
    Some(rank)
}

/// Bareiss elimination in arbitrary precision.
fn rank_bareiss_bigint(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let pivot_row = (rank..nrows)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| a[i][col].abs());
        let Some(pivot_row) = pivot_row else { continue };
        a.swap(rank, pivot_row);
        for i in rank + 1..nrows {
            if a[i][col].is_zero() && prev == BigInt::from(1) {
                continue;
            }
            for j in col + 1..ncols {
                let value = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = value;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over `GF(p)` by Gaussian elimination on machine words.
pub fn rank_gfp(rows: &[Vec<i64>], p: u64) -> usize {
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mul = |x: u64, y: u64| -> u64 { ((x as u128 * y as u128) % p as u128) as u64 };
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for i in rank + 1..nrows {
            if a[i][col] == 0 {
                continue;
            }
            let factor = mul(a[i][col], inv);
            for j in col..ncols {
                let sub = mul(factor, a[rank][j]);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}
