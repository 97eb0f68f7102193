//! τ- and ρ-tangle descriptors and their resolved profiles.
//!
//! A descriptor is what the user states about one side of a 3-decomposition:
//! a twist vector for a rational tangle, torus parameters for a torus
//! ρ-tangle, or a set of geometric flags taken at face value. Resolution
//! turns any of these into a [`ResolvedTangle`] whose derived fields each
//! carry a provenance note.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frac::{cf_eval, slope_normalize, ExtFraction, TwistVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TangleKind {
    Tau,
    Rho,
}

impl fmt::Display for TangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleKind::Tau => f.write_str("τ"),
            TangleKind::Rho => f.write_str("ρ"),
        }
    }
}

/// Canonical parameters of a `(p, q)`-torus ρ-tangle: `p >= 2`,
/// `gcd(p, q) = 1`, with `(p, q)` and `(-p, -q)` identified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusParams {
    p: i64,
    q: i64,
}

impl TorusParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let invalid = |reason| Error::InvalidTorusParams { p, q, reason };
        if p == 0 {
            return Err(invalid("p must be nonzero"));
        }
        let (cp, cq) = if p < 0 {
            (
                p.checked_neg().ok_or(Error::Overflow)?,
                q.checked_neg().ok_or(Error::Overflow)?,
            )
        } else {
            (p, q)
        };
        if cp == 1 {
            return Err(invalid("p = ±1 is the Hopf ρ-tangle; present it as slope 1/2"));
        }
        if (cp as i128).gcd(&(cq as i128)) != 1 {
            return Err(invalid("p and q must be coprime"));
        }
        Ok(Self { p: cp, q: cq })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `(p, q) -> (p, -q)`.
    pub fn mirror(&self) -> Result<Self> {
        Self::new(self.p, self.q.checked_neg().ok_or(Error::Overflow)?)
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)
    }
}

/// `r` Dehn twists along the disk `O`: `(p, q) -> (p, q + r p)`.
pub fn twist_rho(t: TorusParams, r: i64) -> Result<TorusParams> {
    let q = r
        .checked_mul(t.p)
        .and_then(|rp| rp.checked_add(t.q))
        .ok_or(Error::Overflow)?;
    TorusParams::new(t.p, q)
}

/// Torus parameters exactly as written in a descriptor, before validation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusPair {
    pub p: i64,
    pub q: i64,
}

impl TorusPair {
    fn mirror(&self) -> Result<Self> {
        Ok(Self { p: self.p, q: self.q.checked_neg().ok_or(Error::Overflow)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbstractTau {
    pub atoroidal: bool,
    pub trivial: bool,
    pub rational: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slope: Option<ExtFraction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_fraction_slope: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum TauPresentation {
    Rational { twists: TwistVector },
    Abstract(AbstractTau),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbstractRho {
    pub atoroidal: bool,
    pub trivial: bool,
    #[serde(default)]
    pub hopf_tangle: bool,
    #[serde(default)]
    pub satellite: bool,
    #[serde(default)]
    pub cable: bool,
    #[serde(default)]
    pub hopf_summand: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<TorusPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RhoPresentation {
    Rational { twists: TwistVector },
    TorusRho { p: i64, q: i64 },
    Abstract(AbstractRho),
}

/// One side of a 3-decomposition, as the user presents it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "presentation", rename_all = "lowercase", deny_unknown_fields)]
pub enum TangleDescriptor {
    Tau(TauPresentation),
    Rho(RhoPresentation),
}

impl TangleDescriptor {
    pub fn rational_tau(twists: Vec<i64>) -> Self {
        Self::Tau(TauPresentation::Rational { twists: twists.into() })
    }

    pub fn rational_rho(twists: Vec<i64>) -> Self {
        Self::Rho(RhoPresentation::Rational { twists: twists.into() })
    }

    pub fn torus_rho(p: i64, q: i64) -> Self {
        Self::Rho(RhoPresentation::TorusRho { p, q })
    }

    pub fn kind(&self) -> TangleKind {
        match self {
            Self::Tau(_) => TangleKind::Tau,
            Self::Rho(_) => TangleKind::Rho,
        }
    }

    /// The mirror-image descriptor: twists and slopes negated, `(p, q) -> (p, -q)`.
    pub fn mirror(&self) -> Result<Self> {
        Ok(match self {
            Self::Tau(TauPresentation::Rational { twists }) => {
                Self::Tau(TauPresentation::Rational { twists: twists.negated()? })
            }
            Self::Tau(TauPresentation::Abstract(a)) => {
                let slope = a.slope.map(|s| s.checked_neg()).transpose()?;
                Self::Tau(TauPresentation::Abstract(AbstractTau { slope, ..a.clone() }))
            }
            Self::Rho(RhoPresentation::Rational { twists }) => {
                Self::Rho(RhoPresentation::Rational { twists: twists.negated()? })
            }
            Self::Rho(RhoPresentation::TorusRho { p, q }) => Self::Rho(RhoPresentation::TorusRho {
                p: *p,
                q: q.checked_neg().ok_or(Error::Overflow)?,
            }),
            Self::Rho(RhoPresentation::Abstract(a)) => {
                let torus = a.torus.map(|t| t.mirror()).transpose()?;
                Self::Rho(RhoPresentation::Abstract(AbstractRho { torus, ..a.clone() }))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum ViolationKind {
    MutualExclusivity,
    HopfTangleConflict,
    SlopeFlagMismatch,
    SlopeWithoutRational,
    InfiniteSlope,
    InvalidTorusParams { p: i64, q: i64, reason: &'static str },
    InconsistentFlags,
    Overflow,
}

/// A broken descriptor invariant. Violations are data; [`resolve`] turns the
/// first one into an [`Error`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(flatten)]
    pub kind: ViolationKind,
    pub message: String,
}

impl Violation {
    fn new(kind: ViolationKind, message: impl Into<String>) -> Self {
        Self { kind, message: message.into() }
    }

    pub fn into_error(self) -> Error {
        match self.kind {
            ViolationKind::MutualExclusivity => Error::MutualExclusivity(self.message),
            ViolationKind::InfiniteSlope => Error::InfiniteSlope,
            ViolationKind::InvalidTorusParams { p, q, reason } => {
                Error::InvalidTorusParams { p, q, reason }
            }
            ViolationKind::Overflow => Error::Overflow,
            ViolationKind::HopfTangleConflict
            | ViolationKind::SlopeFlagMismatch
            | ViolationKind::SlopeWithoutRational
            | ViolationKind::InconsistentFlags => Error::InconsistentFlags(self.message),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn twist_slope(twists: &TwistVector) -> std::result::Result<ExtFraction, Violation> {
    let value = cf_eval(twists).map_err(|_| {
        Violation::new(ViolationKind::Overflow, format!("evaluating {twists} overflows"))
    })?;
    slope_normalize(value).map_err(|_| {
        Violation::new(
            ViolationKind::InfiniteSlope,
            format!("{twists} evaluates to 1/0, which is not a rational 3-tangle slope"),
        )
    })
}

fn torus_violation(pair: TorusPair) -> Option<Violation> {
    match TorusParams::new(pair.p, pair.q) {
        Ok(_) => None,
        Err(Error::InvalidTorusParams { p, q, reason }) => Some(Violation::new(
            ViolationKind::InvalidTorusParams { p, q, reason },
            format!("torus parameters ({p}, {q}): {reason}"),
        )),
        Err(_) => Some(Violation::new(ViolationKind::Overflow, "torus parameters overflow")),
    }
}

fn is_unit(slope: ExtFraction) -> bool {
    slope.num().abs() == 1
}

fn validate_abstract_tau(a: &AbstractTau) -> Vec<Violation> {
    use ViolationKind::*;
    let mut out = Vec::new();
    if !a.rational && (a.slope.is_some() || a.unit_fraction_slope.is_some()) {
        out.push(Violation::new(
            SlopeWithoutRational,
            "a non-rational τ-tangle has no slope; drop slope and unit_fraction_slope",
        ));
    }
    let normalized = match a.slope.map(slope_normalize) {
        Some(Ok(s)) => Some(s),
        Some(Err(_)) => {
            out.push(Violation::new(InfiniteSlope, "declared slope is 1/0"));
            None
        }
        None => None,
    };
    if let (Some(s), Some(flag)) = (normalized, a.unit_fraction_slope) {
        if is_unit(s) != flag {
            out.push(Violation::new(
                SlopeFlagMismatch,
                format!("slope {s} but unit_fraction_slope = {flag}"),
            ));
        }
    }
    if a.trivial {
        if !a.atoroidal {
            out.push(Violation::new(InconsistentFlags, "the trivial tangle is atoroidal"));
        }
        if !a.rational {
            out.push(Violation::new(InconsistentFlags, "the trivial tangle is rational (slope 0)"));
        }
        if normalized.is_some_and(|s| s.num() != 0) {
            out.push(Violation::new(InconsistentFlags, "trivial tangle with a nonzero slope"));
        }
        if a.unit_fraction_slope == Some(true) {
            out.push(Violation::new(
                InconsistentFlags,
                "trivial tangle cannot have a slope of 1/n",
            ));
        }
    } else if normalized.is_some_and(|s| s.num() == 0) {
        out.push(Violation::new(
            InconsistentFlags,
            "slope 0 modulo ℤ is the trivial tangle but trivial = false",
        ));
    }
    out
}

fn validate_abstract_rho(a: &AbstractRho) -> Vec<Violation> {
    use ViolationKind::*;
    let mut out = Vec::new();
    let annulus_flags = [a.satellite, a.cable, a.hopf_summand].iter().filter(|&&f| f).count();
    if annulus_flags > 1 {
        out.push(Violation::new(
            MutualExclusivity,
            format!(
                "satellite = {}, cable = {}, hopf_summand = {}: at most one may hold",
                a.satellite, a.cable, a.hopf_summand
            ),
        ));
    }
    if a.hopf_tangle {
        if annulus_flags > 0 {
            out.push(Violation::new(
                HopfTangleConflict,
                "the Hopf ρ-tangle is not satellite, cable, or with a Hopf ρ-summand",
            ));
        }
        if a.trivial {
            out.push(Violation::new(HopfTangleConflict, "the Hopf ρ-tangle is non-trivial"));
        }
        if !a.atoroidal {
            out.push(Violation::new(HopfTangleConflict, "the Hopf ρ-tangle is rational, hence atoroidal"));
        }
        if a.torus.is_some() {
            out.push(Violation::new(
                HopfTangleConflict,
                "the Hopf ρ-tangle is not a torus ρ-tangle with p ≥ 2",
            ));
        }
    }
    if a.trivial {
        if !a.atoroidal {
            out.push(Violation::new(InconsistentFlags, "the trivial tangle is atoroidal"));
        }
        if annulus_flags > 0 || a.torus.is_some() {
            out.push(Violation::new(
                InconsistentFlags,
                "the trivial tangle carries no good annulus and no torus structure",
            ));
        }
    }
    if let Some(pair) = a.torus {
        if let Some(v) = torus_violation(pair) {
            out.push(v);
        }
        if a.cable || a.hopf_summand {
            out.push(Violation::new(
                MutualExclusivity,
                "a torus ρ-tangle is satellite, so it cannot be cable or have a Hopf ρ-summand",
            ));
        }
    }
    out
}

/// All invariant violations of a descriptor; empty when it is well formed.
pub fn validate_descriptor(d: &TangleDescriptor) -> Vec<Violation> {
    match d {
        TangleDescriptor::Tau(TauPresentation::Rational { twists })
        | TangleDescriptor::Rho(RhoPresentation::Rational { twists }) => {
            twist_slope(twists).err().into_iter().collect()
        }
        TangleDescriptor::Tau(TauPresentation::Abstract(a)) => validate_abstract_tau(a),
        TangleDescriptor::Rho(RhoPresentation::TorusRho { p, q }) => {
            torus_violation(TorusPair { p: *p, q: *q }).into_iter().collect()
        }
        TangleDescriptor::Rho(RhoPresentation::Abstract(a)) => validate_abstract_rho(a),
    }
}

/// Semantic profile of one tangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolvedTangle {
    pub kind: TangleKind,
    pub atoroidal: bool,
    pub trivial: bool,
    pub essential: bool,
    /// Normalized into `(-1/2, 1/2]` when known.
    pub slope: Option<ExtFraction>,
    pub unit_fraction_slope: Option<bool>,
    pub torus: Option<TorusParams>,
    pub satellite: bool,
    pub cable: bool,
    pub hopf_summand: bool,
    pub hopf_tangle: bool,
    pub provenance: Vec<String>,
}

impl ResolvedTangle {
    fn blank(kind: TangleKind) -> Self {
        Self {
            kind,
            atoroidal: false,
            trivial: false,
            essential: false,
            slope: None,
            unit_fraction_slope: None,
            torus: None,
            satellite: false,
            cable: false,
            hopf_summand: false,
            hopf_tangle: false,
            provenance: Vec::new(),
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.provenance.push(s.into());
    }

    fn settle_essential(&mut self) {
        self.essential = !self.trivial && !self.hopf_tangle;
        self.note(if self.atoroidal {
            "essential: atoroidal, so essential iff non-trivial and not the Hopf ρ-tangle"
        } else {
            "essential: presumed from non-triviality; the tangle is toroidal"
        });
    }

    /// Satellite, cable, or with a Hopf ρ-summand: the ρ-tangle exterior
    /// carries a good annulus.
    pub fn has_annulus_flag(&self) -> bool {
        self.satellite || self.cable || self.hopf_summand
    }

    /// Rational with a slope `1/n`.
    pub fn is_unit_fraction(&self) -> bool {
        self.unit_fraction_slope == Some(true)
    }

    /// `Some(true)` for slope `±1/3`, `Some(false)` for any other known
    /// slope, `None` if the slope was not given.
    pub fn is_one_third(&self) -> Option<bool> {
        self.slope.map(|s| s.den() == 3 && s.num().abs() == 1)
    }
}

fn resolve_rational(kind: TangleKind, twists: &TwistVector) -> Result<ResolvedTangle> {
    let slope = twist_slope(twists).map_err(Violation::into_error)?;
    let mut t = ResolvedTangle::blank(kind);
    t.atoroidal = true;
    t.note("atoroidal: rational tangles are atoroidal");
    t.slope = Some(slope);
    t.note(format!("slope: {twists} evaluates to {slope} modulo ℤ in (-1/2, 1/2]"));
    t.unit_fraction_slope = Some(is_unit(slope));
    t.trivial = slope.num() == 0;
    t.note(format!("trivial: rational tangles are classified by slope modulo ℤ; trivial iff slope is 0 (here {slope})"));
    Ok(t)
}

pub fn resolve_tau(p: &TauPresentation) -> Result<ResolvedTangle> {
    let d = TangleDescriptor::Tau(p.clone());
    if let Some(v) = validate_descriptor(&d).into_iter().next() {
        return Err(v.into_error());
    }
    let mut t = match p {
        TauPresentation::Rational { twists } => resolve_rational(TangleKind::Tau, twists)?,
        TauPresentation::Abstract(a) => {
            let mut t = ResolvedTangle::blank(TangleKind::Tau);
            t.atoroidal = a.atoroidal;
            t.trivial = a.trivial;
            t.note("atoroidal, trivial: declared");
            if a.rational {
                t.slope = a.slope.map(slope_normalize).transpose()?;
                t.unit_fraction_slope = match t.slope {
                    Some(s) => {
                        t.note(format!("unit_fraction_slope: derived from declared slope {s}"));
                        Some(is_unit(s))
                    }
                    None => a.unit_fraction_slope,
                };
            } else {
                t.unit_fraction_slope = Some(false);
                t.note("unit_fraction_slope: a non-rational τ-tangle has no slope 1/n");
            }
            t
        }
    };
    t.settle_essential();
    Ok(t)
}

pub fn resolve_rho(p: &RhoPresentation) -> Result<ResolvedTangle> {
    let d = TangleDescriptor::Rho(p.clone());
    if let Some(v) = validate_descriptor(&d).into_iter().next() {
        return Err(v.into_error());
    }
    let mut t = match p {
        RhoPresentation::Rational { twists } => {
            let mut t = resolve_rational(TangleKind::Rho, twists)?;
            let slope = t.slope.expect("rational slope");
            t.hopf_tangle = slope == ExtFraction::new(1, 2)?;
            if t.hopf_tangle {
                t.note("hopf_tangle: slope 1/2 is the Hopf ρ-tangle");
            }
            if is_unit(slope) && slope.den() % 2 == 0 && slope.den() >= 4 {
                let k = slope.den() / 2;
                let torus = TorusParams::new(k, slope.num())?;
                t.torus = Some(torus);
                t.satellite = true;
                t.note(format!("torus: slope {slope} = 1/(2k) gives the {torus}-torus ρ-tangle"));
                t.note("satellite: a torus ρ-tangle with p ≥ 2 carries a type I good annulus");
            }
            t.note("cable: a rational ρ-tangle has an unknotted loop, so it is not cable");
            t
        }
        RhoPresentation::TorusRho { p, q } => {
            let torus = TorusParams::new(*p, *q)?;
            let mut t = ResolvedTangle::blank(TangleKind::Rho);
            t.atoroidal = true;
            t.torus = Some(torus);
            t.satellite = true;
            t.note(format!("torus: declared {torus}-torus ρ-tangle; atoroidal"));
            t.note("satellite: a torus ρ-tangle with p ≥ 2 carries a type I good annulus");
            t
        }
        RhoPresentation::Abstract(a) => {
            let mut t = ResolvedTangle::blank(TangleKind::Rho);
            t.atoroidal = a.atoroidal;
            t.trivial = a.trivial;
            t.hopf_tangle = a.hopf_tangle;
            t.satellite = a.satellite;
            t.cable = a.cable;
            t.hopf_summand = a.hopf_summand;
            t.note("flags: declared");
            if let Some(pair) = a.torus {
                let torus = TorusParams::new(pair.p, pair.q)?;
                t.torus = Some(torus);
                if !t.satellite {
                    t.satellite = true;
                    t.note("satellite: a torus ρ-tangle with p ≥ 2 carries a type I good annulus");
                }
            }
            t
        }
    };
    t.settle_essential();
    Ok(t)
}

pub fn resolve(d: &TangleDescriptor) -> Result<ResolvedTangle> {
    match d {
        TangleDescriptor::Tau(p) => resolve_tau(p),
        TangleDescriptor::Rho(p) => resolve_rho(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: i64, q: i64) -> ExtFraction {
        ExtFraction::new(p, q).unwrap()
    }

    fn abstract_tau(rational: bool, slope: Option<ExtFraction>, unit: Option<bool>) -> AbstractTau {
        AbstractTau { atoroidal: true, trivial: false, rational, slope, unit_fraction_slope: unit }
    }

    fn abstract_rho() -> AbstractRho {
        AbstractRho {
            atoroidal: true,
            trivial: false,
            hopf_tangle: false,
            satellite: false,
            cable: false,
            hopf_summand: false,
            torus: None,
        }
    }

    #[test]
    fn torus_params_canonical() {
        let t = TorusParams::new(-3, -2).unwrap();
        assert_eq!((t.p(), t.q()), (3, 2));
        assert_eq!(TorusParams::new(-2, 5).unwrap(), TorusParams::new(2, -5).unwrap());
        assert!(matches!(TorusParams::new(1, 1), Err(Error::InvalidTorusParams { .. })));
        assert!(matches!(TorusParams::new(-1, 4), Err(Error::InvalidTorusParams { .. })));
        assert!(matches!(TorusParams::new(4, 6), Err(Error::InvalidTorusParams { .. })));
        assert!(matches!(TorusParams::new(0, 1), Err(Error::InvalidTorusParams { .. })));
        assert!(matches!(TorusParams::new(2, 0), Err(Error::InvalidTorusParams { .. })));
    }

    #[test]
    fn twist_examples() {
        let base = TorusParams::new(2, 1).unwrap();
        for r in -5..=5 {
            assert_eq!(twist_rho(base, r).unwrap(), TorusParams::new(2, 2 * r + 1).unwrap());
        }
        let t = TorusParams::new(3, 2).unwrap();
        assert_eq!(twist_rho(t, 0).unwrap(), t);
        assert_eq!(twist_rho(t, 2).unwrap(), TorusParams::new(3, 8).unwrap());
        assert_eq!(twist_rho(TorusParams::new(2, 1).unwrap(), i64::MAX), Err(Error::Overflow));
    }

    #[test]
    fn rational_tau() {
        let t = resolve_tau(&TauPresentation::Rational { twists: vec![3, 0].into() }).unwrap();
        assert_eq!(t.slope, Some(fr(1, 3)));
        assert!(t.essential && t.atoroidal && !t.trivial);
        assert_eq!(t.unit_fraction_slope, Some(true));
        assert!(!t.has_annulus_flag() && t.torus.is_none());

        let t = resolve_tau(&TauPresentation::Rational { twists: vec![0].into() }).unwrap();
        assert_eq!(t.slope, Some(ExtFraction::ZERO));
        assert!(t.trivial && !t.essential);
    }

    #[test]
    fn rational_tau_infinite_slope() {
        let p = TauPresentation::Rational { twists: vec![0, 4].into() };
        assert_eq!(resolve_tau(&p), Err(Error::InfiniteSlope));
    }

    #[test]
    fn abstract_tau_not_unit_fraction() {
        let a = abstract_tau(true, None, Some(false));
        let t = resolve_tau(&TauPresentation::Abstract(a)).unwrap();
        assert!(t.essential);
        assert_eq!(t.slope, None);
        assert!(!t.is_unit_fraction());
    }

    #[test]
    fn abstract_tau_violations() {
        let a = abstract_tau(true, Some(fr(2, 5)), Some(true));
        let v = validate_descriptor(&TangleDescriptor::Tau(TauPresentation::Abstract(a)));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::SlopeFlagMismatch);

        let a = abstract_tau(false, Some(fr(1, 3)), None);
        let v = validate_descriptor(&TangleDescriptor::Tau(TauPresentation::Abstract(a)));
        assert_eq!(v[0].kind, ViolationKind::SlopeWithoutRational);

        let mut a = abstract_tau(true, Some(fr(1, 5)), None);
        a.trivial = true;
        let err = resolve_tau(&TauPresentation::Abstract(a)).unwrap_err();
        assert!(matches!(err, Error::InconsistentFlags(_)));
    }

    #[test]
    fn well_formed_rational_has_no_violations() {
        assert!(validate_descriptor(&TangleDescriptor::rational_tau(vec![2, 3, 0])).is_empty());
    }

    #[test]
    fn rational_rho_generic_slope() {
        // -3/8
        let t = resolve_rho(&RhoPresentation::Rational { twists: vec![2, 1, 1, 1, -1].into() })
            .unwrap();
        assert_eq!(t.slope, Some(fr(-3, 8)));
        assert!(t.essential && t.torus.is_none() && !t.has_annulus_flag());
    }

    #[test]
    fn rational_rho_one_sixth_is_torus() {
        let t = resolve_rho(&RhoPresentation::Rational { twists: vec![6, 0].into() }).unwrap();
        assert_eq!(t.torus, Some(TorusParams::new(3, 1).unwrap()));
        assert!(t.satellite && !t.cable && !t.hopf_summand && t.essential);
        let t = resolve_rho(&RhoPresentation::Rational { twists: vec![-6, 0].into() }).unwrap();
        assert_eq!(t.torus, Some(TorusParams::new(3, -1).unwrap()));
    }

    #[test]
    fn rational_rho_hopf() {
        let t = resolve_rho(&RhoPresentation::Rational { twists: vec![2, 0].into() }).unwrap();
        assert!(t.hopf_tangle && !t.essential && !t.trivial);
        assert!(t.torus.is_none() && !t.satellite);
        // -1/2 is 1/2 modulo ℤ
        let t = resolve_rho(&RhoPresentation::Rational { twists: vec![-2, 0].into() }).unwrap();
        assert!(t.hopf_tangle);
    }

    #[test]
    fn torus_rho_presentation() {
        let t = resolve_rho(&RhoPresentation::TorusRho { p: -3, q: -2 }).unwrap();
        assert_eq!(t.torus, Some(TorusParams::new(3, 2).unwrap()));
        assert!(t.satellite && t.atoroidal && t.essential);
        assert!(matches!(
            resolve_rho(&RhoPresentation::TorusRho { p: 1, q: 3 }),
            Err(Error::InvalidTorusParams { .. })
        ));
    }

    #[test]
    fn abstract_rho_mutual_exclusivity() {
        let a = AbstractRho { satellite: true, cable: true, ..abstract_rho() };
        assert!(matches!(
            resolve_rho(&RhoPresentation::Abstract(a)),
            Err(Error::MutualExclusivity(_))
        ));
        let a = AbstractRho { satellite: true, hopf_summand: true, ..abstract_rho() };
        let v = validate_descriptor(&TangleDescriptor::Rho(RhoPresentation::Abstract(a)));
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::MutualExclusivity);
    }

    #[test]
    fn abstract_rho_hopf_conflicts() {
        let a = AbstractRho { hopf_tangle: true, cable: true, ..abstract_rho() };
        let v = validate_descriptor(&TangleDescriptor::Rho(RhoPresentation::Abstract(a)));
        assert_eq!(v[0].kind, ViolationKind::HopfTangleConflict);
        let a = AbstractRho { hopf_tangle: true, ..abstract_rho() };
        let t = resolve_rho(&RhoPresentation::Abstract(a)).unwrap();
        assert!(!t.essential);
    }

    #[test]
    fn abstract_rho_torus_implies_satellite() {
        let a = AbstractRho { torus: Some(TorusPair { p: 2, q: 3 }), ..abstract_rho() };
        let t = resolve_rho(&RhoPresentation::Abstract(a)).unwrap();
        assert!(t.satellite);
        let a = AbstractRho { torus: Some(TorusPair { p: 2, q: 3 }), cable: true, ..abstract_rho() };
        assert!(matches!(
            resolve_rho(&RhoPresentation::Abstract(a)),
            Err(Error::MutualExclusivity(_))
        ));
    }

    #[test]
    fn mirror_descriptor() {
        let d = TangleDescriptor::torus_rho(3, 2);
        assert_eq!(d.mirror().unwrap(), TangleDescriptor::torus_rho(3, -2));
        let d = TangleDescriptor::rational_tau(vec![3, 0]);
        assert_eq!(d.mirror().unwrap(), TangleDescriptor::rational_tau(vec![-3, 0]));
    }

    #[test]
    fn every_derived_field_has_provenance() {
        let t = resolve_rho(&RhoPresentation::Rational { twists: vec![4, 0].into() }).unwrap();
        for key in ["atoroidal", "slope", "trivial", "torus", "satellite", "cable", "essential"] {
            assert!(
                t.provenance.iter().any(|n| n.starts_with(key)),
                "no provenance for {key}: {:?}",
                t.provenance
            );
        }
    }
}
