//! Test-only oracles, independent of the engine's fraction type.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hkdecomp::ExtFraction;

/// `[x1, ..., xm]` by direct recursion on the outermost entry, in arbitrary
/// precision. `None` is ∞.
pub fn oracle_eval(entries: &[i64]) -> Option<BigRational> {
    fn go(xs: &[i64]) -> Option<BigRational> {
        match xs.split_last() {
            // [x1] = x1 + 1/∞
            None => None,
            Some((&last, inner)) => {
                let last = BigRational::from_integer(BigInt::from(last));
                match go(inner) {
                    None => Some(last),
                    Some(v) if v.is_zero() => None,
                    Some(v) => Some(last + v.recip()),
                }
            }
        }
    }
    if entries.is_empty() {
        return Some(BigRational::zero());
    }
    go(entries)
}

/// Engine fraction as an oracle value.
pub fn to_big(f: ExtFraction) -> Option<BigRational> {
    if f.is_infinite() {
        None
    } else {
        Some(BigRational::new(BigInt::from(f.num()), BigInt::from(f.den())))
    }
}

pub fn big_numer_abs(v: &BigRational) -> BigInt {
    let n = v.numer().clone();
    if n < BigInt::zero() {
        -n
    } else {
        n
    }
}

/// Brute-force normalization into (-1/2, 1/2] by stepping one unit at a time.
pub fn oracle_normalize(v: &BigRational) -> BigRational {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut r = v.clone();
    while r > half {
        r -= BigRational::one();
    }
    while r <= -half.clone() {
        r += BigRational::one();
    }
    r
}

/// Seeded random twist vectors with entries in `[-max_abs, max_abs]` and
/// length `0..=max_len`.
pub fn random_vectors(seed: u64, count: usize, max_abs: i64, max_len: usize) -> Vec<Vec<i64>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| rng.gen_range(-max_abs..=max_abs)).collect()
        })
        .collect()
}

/// Every vector with entries in `[-max_abs, max_abs]` and length `1..=max_len`.
pub fn all_vectors(max_abs: i64, max_len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for v in &layer {
            for a in -max_abs..=max_abs {
                let mut w = v.clone();
                w.push(a);
                next.push(w);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
