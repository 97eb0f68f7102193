//! Good rectangles in τ- and ρ-tangle exteriors.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac::{cf_eval, TwistVector};
use crate::tangle::{ResolvedTangle, TangleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RectangleType {
    TauTypeI,
    TauTypeII,
    RhoTypeI,
    RhoTypeIStar,
    RhoTypeII,
}

impl RectangleType {
    pub fn kind(&self) -> TangleKind {
        match self {
            Self::TauTypeI | Self::TauTypeII => TangleKind::Tau,
            Self::RhoTypeI | Self::RhoTypeIStar | Self::RhoTypeII => TangleKind::Rho,
        }
    }

    /// The intersection count at which [`boundary_arc_count`] certifies
    /// this rectangle, for the types it applies to.
    pub fn certifying_count(&self) -> Option<i64> {
        match self {
            Self::TauTypeI => Some(2),
            Self::TauTypeII => Some(3),
            Self::RhoTypeII => Some(4),
            Self::RhoTypeI | Self::RhoTypeIStar => None,
        }
    }
}

impl fmt::Display for RectangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::TauTypeI => "τ type I",
            Self::TauTypeII => "τ type II",
            Self::RhoTypeI => "ρ type I",
            Self::RhoTypeIStar => "ρ type I*",
            Self::RhoTypeII => "ρ type II",
        })
    }
}

fn require(t: &ResolvedTangle, kind: TangleKind) -> Result<()> {
    if t.kind != kind {
        return Err(Error::NotApplicable(format!("expected a {kind}-tangle, got a {}-tangle", t.kind)));
    }
    if !t.atoroidal {
        return Err(Error::NotApplicable("the tangle is toroidal".into()));
    }
    if !t.essential {
        return Err(Error::NotApplicable("the tangle is inessential".into()));
    }
    Ok(())
}

/// Good rectangle types in an essential atoroidal τ-tangle exterior.
pub fn rect_types_tau(t: &ResolvedTangle) -> Result<BTreeSet<RectangleType>> {
    require(t, TangleKind::Tau)?;
    let mut out = BTreeSet::new();
    if let Some(s) = t.slope {
        // ±1/k, k odd; k = ±1 is slope 0 and never essential
        if s.num().abs() == 1 && s.den() % 2 == 1 && s.den() >= 3 {
            out.insert(RectangleType::TauTypeI);
            if s.den() == 3 {
                out.insert(RectangleType::TauTypeII);
            }
        }
    }
    Ok(out)
}

/// Good rectangle types in an essential atoroidal ρ-tangle exterior.
pub fn rect_types_rho(t: &ResolvedTangle) -> Result<BTreeSet<RectangleType>> {
    require(t, TangleKind::Rho)?;
    let mut out = BTreeSet::new();
    if let Some(torus) = t.torus {
        out.insert(RectangleType::RhoTypeI);
        out.insert(RectangleType::RhoTypeIStar);
        // (-2, ±2k+1) ~ (2, ∓(2k+1)); coprimality already makes q odd
        if torus.p() == 2 {
            out.insert(RectangleType::RhoTypeII);
        }
    }
    Ok(out)
}

/// Intersection count `|∂Q ∩ ∂D|` for the rectangle `Q` built from the
/// rational tangle `R(a1, ..., an, a(n+1))`.
///
/// The last entry only shifts the slope by an integer, so it is dropped:
/// type I counts `2 |denominator of [an, ..., a1]|`, types τ-II and ρ-II count
/// `|denominator of [a1, ..., an, 0]|`. The rectangle exists iff the count
/// equals [`RectangleType::certifying_count`].
pub fn boundary_arc_count(tv: &TwistVector, which: RectangleType) -> Result<i64> {
    let Some((_, inner)) = tv.entries().split_last() else {
        return Err(Error::NotApplicable("empty twist vector".into()));
    };
    let inner = TwistVector::new(inner.to_vec());
    let value = match which {
        RectangleType::TauTypeI => cf_eval(&inner.reversed())?,
        RectangleType::TauTypeII | RectangleType::RhoTypeII => {
            let mut with_zero = inner.entries().to_vec();
            with_zero.push(0);
            cf_eval(&TwistVector::new(with_zero))?
        }
        RectangleType::RhoTypeI | RectangleType::RhoTypeIStar => {
            return Err(Error::NotApplicable(format!("no arc count is defined for {which}")))
        }
    };
    if value.is_infinite() {
        return Err(Error::InfiniteValue);
    }
    let factor = if which == RectangleType::TauTypeI { 2 } else { 1 };
    value.den().checked_mul(factor).ok_or(Error::Overflow)
}
