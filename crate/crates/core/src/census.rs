//! Exhaustive enumeration of special decompositions over bounded slopes and
//! torus parameters, with deterministic CSV output.
//!
//! Column meaning depends on the census type:
//!
//! * `tautau`: `m`, `n` are the denominators of the τ slopes `1/m`, `1/n`
//!   (odd, `3 <= |m|, |n| <= max_denominator`).
//! * `taurho`: `m` is the denominator of the τ slope `1/m` (same range),
//!   `n` is the torus ρ-tangle as `p:q` with `2 <= p <= max_p`,
//!   `|q| <= max_q`, `gcd(p, q) = 1`.
//! * `rhorho`: `m`, `n` are rational ρ slopes `a/b` normalized into
//!   `(-1/2, 1/2]` with even `4 <= b <= max_denominator`; unordered pairs.

use std::io::Write;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac::{cf_expand, ExtFraction};
use crate::tangle::TangleDescriptor;
use crate::verdict::{classify, Decomposition, DecompositionKind, Verdict};

pub const MAX_BOUND: i64 = 99;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusBounds {
    pub max_denominator: i64,
    pub max_p: i64,
    pub max_q: i64,
}

impl Default for CensusBounds {
    fn default() -> Self {
        Self { max_denominator: 25, max_p: 5, max_q: 5 }
    }
}

impl CensusBounds {
    fn check(&self) -> Result<()> {
        for bound in [self.max_denominator, self.max_p, self.max_q] {
            if bound > MAX_BOUND {
                return Err(Error::BoundsTooLarge { bound, max: MAX_BOUND });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub m: String,
    pub n: String,
    pub branch: String,
    pub count: String,
}

#[derive(Clone, Debug)]
pub struct CensusCase {
    pub m: String,
    pub n: String,
    pub decomposition: Decomposition,
    pub verdict: Verdict,
}

impl CensusCase {
    fn new(m: String, n: String, decomposition: Decomposition) -> Self {
        let verdict = classify(&decomposition);
        Self { m, n, decomposition, verdict }
    }

    pub fn row(&self) -> CensusRow {
        CensusRow {
            m: self.m.clone(),
            n: self.n.clone(),
            branch: self.verdict.branch.label().to_string(),
            count: self
                .verdict
                .annulus_count
                .map(|c| c.to_string())
                .unwrap_or_else(|| format!("{:?}", self.verdict.status).to_lowercase()),
        }
    }
}

/// Odd `m` with `3 <= |m| <= max`, ascending.
fn odd_denominators(max: i64) -> Vec<i64> {
    (-max..=max).filter(|m| m.abs() >= 3 && m % 2 != 0).collect()
}

fn unit_tau(m: i64) -> TangleDescriptor {
    // [m, 0] = 1/m
    TangleDescriptor::rational_tau(vec![m, 0])
}

pub fn tautau(bounds: CensusBounds) -> Result<Vec<CensusCase>> {
    bounds.check()?;
    let ms = odd_denominators(bounds.max_denominator);
    let mut out = Vec::with_capacity(ms.len() * ms.len());
    for &m in &ms {
        for &n in &ms {
            let d = Decomposition::new(DecompositionKind::TauTau, true, unit_tau(m), unit_tau(n));
            out.push(CensusCase::new(m.to_string(), n.to_string(), d));
        }
    }
    Ok(out)
}

pub fn taurho(bounds: CensusBounds) -> Result<Vec<CensusCase>> {
    bounds.check()?;
    let mut out = Vec::new();
    for m in odd_denominators(bounds.max_denominator) {
        for p in 2..=bounds.max_p {
            for q in -bounds.max_q..=bounds.max_q {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let d = Decomposition::new(
                    DecompositionKind::TauRho,
                    true,
                    unit_tau(m),
                    TangleDescriptor::torus_rho(p, q),
                );
                out.push(CensusCase::new(m.to_string(), format!("{p}:{q}"), d));
            }
        }
    }
    Ok(out)
}

/// Normalized ρ slopes `a/b`, even `4 <= b <= max`, ascending by value.
fn rho_slopes(max: i64) -> Result<Vec<ExtFraction>> {
    let mut slopes = Vec::new();
    for b in (4..=max).step_by(2) {
        for a in (-(b / 2) + 1)..=(b / 2) {
            if a.gcd(&b) == 1 {
                slopes.push(ExtFraction::new(a, b)?);
            }
        }
    }
    slopes.sort_by(|x, y| ((x.num() as i128) * (y.den() as i128)).cmp(&((y.num() as i128) * (x.den() as i128))));
    Ok(slopes)
}

pub fn rhorho(bounds: CensusBounds) -> Result<Vec<CensusCase>> {
    bounds.check()?;
    let slopes = rho_slopes(bounds.max_denominator)?;
    let tangles = slopes
        .iter()
        .map(|s| Ok(TangleDescriptor::rational_rho(cf_expand(*s)?.entries().to_vec())))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for i in 0..slopes.len() {
        for j in i..slopes.len() {
            let d = Decomposition::new(DecompositionKind::RhoRho, false, tangles[i].clone(), tangles[j].clone());
            out.push(CensusCase::new(slopes[i].to_string(), slopes[j].to_string(), d));
        }
    }
    Ok(out)
}

pub fn census(kind: DecompositionKind, bounds: CensusBounds) -> Result<Vec<CensusCase>> {
    match kind {
        DecompositionKind::TauTau => tautau(bounds),
        DecompositionKind::TauRho => taurho(bounds),
        DecompositionKind::RhoRho => rhorho(bounds),
    }
}

/// Header `m,n,branch,count` followed by one row per case, in order.
pub fn write_csv<W: Write>(cases: &[CensusCase], out: W) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(["m", "n", "branch", "count"])?;
    for case in cases {
        w.serialize(case.row())?;
    }
    w.flush()
}
