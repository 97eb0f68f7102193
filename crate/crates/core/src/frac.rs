//! Exact projective rationals and the continued-fraction calculus behind
//! rational 3-tangle slopes.
//!
//! Continued fractions are read with the rightmost entry outermost:
//!
//! ```text
//! [x1, ..., xm] = xm + 1 / [x1, ..., x(m-1)],    [x1] = x1,    [] = 0
//! ```
//!
//! so `[2, 0]` is `1/2` (the Hopf ρ-tangle) and `[3, 0]` is `1/3`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction `num/den` on the projective line. `den == 0` is the
/// point at infinity, stored as `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtFraction {
    num: i64,
    den: i64,
}

impl ExtFraction {
    pub const ZERO: ExtFraction = ExtFraction { num: 0, den: 1 };
    pub const INFINITY: ExtFraction = ExtFraction { num: 1, den: 0 };

    /// Builds `p/q` in lowest terms with a non-negative denominator.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroOverZero);
        }
        if q == 0 {
            return Ok(Self::INFINITY);
        }
        let (p, q) = (p as i128, q as i128);
        let g = p.gcd(&q);
        let sign = if q < 0 { -1 } else { 1 };
        let num = i64::try_from(sign * p / g).map_err(|_| Error::Overflow)?;
        let den = i64::try_from(sign * q / g).map_err(|_| Error::Overflow)?;
        Ok(Self { num, den })
    }

    pub fn integer(n: i64) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn is_finite(&self) -> bool {
        self.den != 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Checks the stored representation without repairing it: lowest terms,
    /// non-negative denominator, and `1/0` as the only infinite value.
    pub fn audit(&self) -> bool {
        match self.den {
            0 => self.num == 1,
            d if d > 0 => self.num.gcd(&d) == 1,
            _ => false,
        }
    }

    pub fn checked_neg(&self) -> Result<Self> {
        if self.is_infinite() {
            return Ok(*self);
        }
        let num = self.num.checked_neg().ok_or(Error::Overflow)?;
        Ok(Self { num, den: self.den })
    }

    /// `1/x` with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_infinite() {
            return Ok(Self::ZERO);
        }
        Self::new(self.den, self.num)
    }

    /// `x + n`; infinity absorbs.
    pub fn add_integer(&self, n: i64) -> Result<Self> {
        if self.is_infinite() {
            return Ok(*self);
        }
        let shifted = n
            .checked_mul(self.den)
            .and_then(|v| v.checked_add(self.num))
            .ok_or(Error::Overflow)?;
        Self::new(shifted, self.den)
    }

    /// Largest integer not exceeding a finite value.
    pub fn floor(&self) -> Result<i64> {
        if self.is_infinite() {
            return Err(Error::InfiniteValue);
        }
        Ok(self.num.div_euclid(self.den))
    }
}

impl fmt::Display for ExtFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExtFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFraction(s.to_string());
        let s_trim = s.trim();
        match s_trim.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                Self::new(p, q).map_err(|e| match e {
                    Error::ZeroOverZero => bad(),
                    other => other,
                })
            }
            None => s_trim.parse::<i64>().map(Self::integer).map_err(|_| bad()),
        }
    }
}

impl Serialize for ExtFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtFraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The twist sequence `(a1, ..., an+1)` of a rational tangle `R(a1, ..., an+1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistVector(Vec<i64>);

impl TwistVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Mirror image: every crossing flips sign.
    pub fn negated(&self) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl From<Vec<i64>> for TwistVector {
    fn from(entries: Vec<i64>) -> Self {
        Self(entries)
    }
}

impl fmt::Display for TwistVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Evaluates `[x1, ..., xm]`, innermost entry first. Intermediate infinities
/// are handled projectively.
pub fn cf_eval(tv: &TwistVector) -> Result<ExtFraction> {
    if tv.is_empty() {
        return Ok(ExtFraction::ZERO);
    }
    tv.entries()
        .iter()
        .try_fold(ExtFraction::INFINITY, |acc, &x| acc.recip()?.add_integer(x))
}

/// Euclidean expansion of a finite fraction. Every entry except the last
/// (outermost) one is positive, so `cf_eval(cf_expand(f)) == f`.
pub fn cf_expand(f: ExtFraction) -> Result<TwistVector> {
    if f.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    let mut outer_first = Vec::new();
    let mut rest = f;
    loop {
        let a = rest.floor()?;
        outer_first.push(a);
        let frac_part = rest.add_integer(a.checked_neg().ok_or(Error::Overflow)?)?;
        if frac_part.num() == 0 {
            break;
        }
        rest = frac_part.recip()?;
    }
    outer_first.reverse();
    Ok(TwistVector(outer_first))
}

/// Representative of `f` modulo ℤ in `(-1/2, 1/2]`.
pub fn slope_normalize(f: ExtFraction) -> Result<ExtFraction> {
    if f.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    let den = f.den();
    let mut r = f.num().rem_euclid(den);
    // r/den lies in [0, 1); fold the upper half down
    if r > den - r {
        r -= den;
    }
    ExtFraction::new(r, den)
}

/// Whether `f - g` is an integer.
pub fn mod_z_equal(f: ExtFraction, g: ExtFraction) -> Result<bool> {
    if f.is_infinite() || g.is_infinite() {
        return Err(Error::InfiniteSlope);
    }
    if f.den() != g.den() {
        return Ok(false);
    }
    let diff = (f.num() as i128) - (g.num() as i128);
    Ok(diff % (f.den() as i128) == 0)
}

/// `(|numerator of [a1..an]|, |numerator of [an..a1]|)`. The two components
/// always agree.
pub fn palindrome_numerators(tv: &TwistVector) -> Result<(i64, i64)> {
    let forward = cf_eval(tv)?;
    let backward = cf_eval(&tv.reversed())?;
    if forward.is_infinite() || backward.is_infinite() {
        return Err(Error::InfiniteValue);
    }
    let abs = |x: i64| x.checked_abs().ok_or(Error::Overflow);
    Ok((abs(forward.num())?, abs(backward.num())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: i64, q: i64) -> ExtFraction {
        ExtFraction::new(p, q).unwrap()
    }

    fn tv(v: &[i64]) -> TwistVector {
        TwistVector::new(v.to_vec())
    }

    #[test]
    fn construction_reduces_and_normalizes_sign() {
        assert_eq!(fr(2, 4), fr(1, 2));
        assert_eq!((fr(2, 4).num(), fr(2, 4).den()), (1, 2));
        assert_eq!((fr(3, -9).num(), fr(3, -9).den()), (-1, 3));
        assert_eq!(fr(5, 0), ExtFraction::INFINITY);
        assert_eq!(fr(-5, 0), ExtFraction::INFINITY);
        assert_eq!(ExtFraction::new(0, 0), Err(Error::ZeroOverZero));
        assert_eq!(fr(0, -7), ExtFraction::ZERO);
    }

    #[test]
    fn construction_overflow_is_detected() {
        assert_eq!(ExtFraction::new(i64::MIN, i64::MIN).unwrap(), ExtFraction::integer(1));
        assert_eq!(ExtFraction::new(i64::MIN, -1), Err(Error::Overflow));
        assert_eq!(ExtFraction::new(1, i64::MIN), Err(Error::Overflow));
        assert_eq!(ExtFraction::integer(i64::MAX).add_integer(1), Err(Error::Overflow));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cf_eval(&tv(&[0])).unwrap(), ExtFraction::ZERO);
        assert_eq!(cf_eval(&tv(&[2, 0])).unwrap(), fr(1, 2));
        assert_eq!(cf_eval(&tv(&[3, 0])).unwrap(), fr(1, 3));
        assert_eq!(cf_eval(&tv(&[2, 3])).unwrap(), fr(7, 2));
        assert_eq!(cf_eval(&tv(&[])).unwrap(), ExtFraction::ZERO);
        // 5 + 1/0
        assert_eq!(cf_eval(&tv(&[0, 5])).unwrap(), ExtFraction::INFINITY);
        // 1/∞ collapses back to a finite value one level out
        assert_eq!(cf_eval(&tv(&[0, 5, 2])).unwrap(), ExtFraction::integer(2));
    }

    #[test]
    fn eval_overflow() {
        let big = tv(&[i64::MAX, 1, i64::MAX]);
        assert_eq!(cf_eval(&big), Err(Error::Overflow));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(cf_expand(fr(1, 2)).unwrap(), tv(&[2, 0]));
        assert_eq!(cf_expand(ExtFraction::ZERO).unwrap(), tv(&[0]));
        let e = cf_expand(fr(7, 2)).unwrap();
        assert_eq!(cf_eval(&e).unwrap(), fr(7, 2));
        assert_eq!(cf_expand(fr(-3, 8)).unwrap(), tv(&[2, 1, 1, 1, -1]));
        assert_eq!(cf_expand(ExtFraction::INFINITY), Err(Error::InfiniteSlope));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(slope_normalize(fr(5, 2)).unwrap(), fr(1, 2));
        assert_eq!(slope_normalize(fr(-1, 2)).unwrap(), fr(1, 2));
        assert_eq!(slope_normalize(fr(-3, 8)).unwrap(), fr(-3, 8));
        assert_eq!(slope_normalize(fr(5, 8)).unwrap(), fr(-3, 8));
        assert_eq!(slope_normalize(ExtFraction::integer(-4)).unwrap(), ExtFraction::ZERO);
        assert_eq!(slope_normalize(ExtFraction::INFINITY), Err(Error::InfiniteSlope));
    }

    #[test]
    fn mod_z_examples() {
        assert!(mod_z_equal(fr(5, 2), fr(1, 2)).unwrap());
        assert!(!mod_z_equal(fr(1, 3), fr(-1, 3)).unwrap());
        assert!(mod_z_equal(fr(-3, 8), fr(5, 8)).unwrap());
        assert!(mod_z_equal(ExtFraction::integer(i64::MIN), ExtFraction::integer(i64::MAX)).unwrap());
        assert_eq!(mod_z_equal(ExtFraction::INFINITY, fr(1, 2)), Err(Error::InfiniteSlope));
    }

    #[test]
    fn palindrome_examples() {
        assert_eq!(palindrome_numerators(&tv(&[2, 3])).unwrap(), (7, 7));
        assert_eq!(palindrome_numerators(&tv(&[5])).unwrap(), (5, 5));
        assert_eq!(palindrome_numerators(&tv(&[5, 0])), Err(Error::InfiniteValue));
    }

    #[test]
    fn fraction_strings() {
        assert_eq!("-3/8".parse::<ExtFraction>().unwrap(), fr(-3, 8));
        assert_eq!("6/-4".parse::<ExtFraction>().unwrap(), fr(-3, 2));
        assert_eq!("7".parse::<ExtFraction>().unwrap(), ExtFraction::integer(7));
        assert_eq!("1/0".parse::<ExtFraction>().unwrap(), ExtFraction::INFINITY);
        assert!("0/0".parse::<ExtFraction>().is_err());
        assert!("1.5".parse::<ExtFraction>().is_err());
        assert_eq!(fr(-3, 8).to_string(), "-3/8");
        assert_eq!(ExtFraction::INFINITY.to_string(), "1/0");
    }
}
