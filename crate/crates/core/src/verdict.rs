//! Essential-annulus counts and hyperbolicity for 3-decompositions.
//!
//! A 3-decomposable genus two handlebody-knot is always irreducible, and it
//! is atoroidal exactly when both tangles are. For such a knot, hyperbolicity
//! (with totally geodesic boundary) is the absence of essential annuli, so
//! every verdict reduces to an annulus count read off from the tangle
//! profiles.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::annuli::{good_annulus, AnnulusType};
use crate::error::{Error, Result};
use crate::rect::{rect_types_rho, rect_types_tau, RectangleType};
use crate::tangle::{resolve, validate_descriptor, ResolvedTangle, TangleDescriptor, TangleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DecompositionKind {
    TauTau,
    TauRho,
    RhoRho,
}

impl DecompositionKind {
    pub fn tangle_kinds(&self) -> [TangleKind; 2] {
        match self {
            Self::TauTau => [TangleKind::Tau, TangleKind::Tau],
            Self::TauRho => [TangleKind::Tau, TangleKind::Rho],
            Self::RhoRho => [TangleKind::Rho, TangleKind::Rho],
        }
    }
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::TauTau => "ττ",
            Self::TauRho => "τρ",
            Self::RhoRho => "ρρ",
        })
    }
}

/// A ττ-, τρ- or ρρ-decomposition. In a τρ-decomposition the τ-tangle
/// comes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decomposition {
    #[serde(rename = "type")]
    pub kind: DecompositionKind,
    pub special: bool,
    pub tangles: [TangleDescriptor; 2],
}

impl Decomposition {
    pub fn new(kind: DecompositionKind, special: bool, first: TangleDescriptor, second: TangleDescriptor) -> Self {
        Self { kind, special, tangles: [first, second] }
    }

    pub fn first(&self) -> &TangleDescriptor {
        &self.tangles[0]
    }

    pub fn second(&self) -> &TangleDescriptor {
        &self.tangles[1]
    }

    pub fn mirror(&self) -> Result<Self> {
        Ok(Self {
            kind: self.kind,
            special: self.special,
            tangles: [self.tangles[0].mirror()?, self.tangles[1].mirror()?],
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Classified,
    Inadmissible,
    Toroidal,
}

/// Number of essential annuli up to isotopy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnnulusCount {
    Zero,
    Finite(u32),
    Infinite,
}

impl fmt::Display for AnnulusCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => f.write_str("0"),
            Self::Finite(n) => write!(f, "{n}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for AnnulusCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which clause of which classification theorem produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    TauTauInfinite,
    TauTauThree,
    TauTauOne,
    TauTauHyperbolic,
    TauRhoHyperbolic,
    TauRhoInfinite,
    TauRhoFour,
    TauRhoTwo,
    TauRhoOne,
    RhoRhoTwo,
    RhoRhoOne,
    RhoRhoHyperbolic,
    Inadmissible,
    Toroidal,
}

impl Branch {
    pub fn label(&self) -> &'static str {
        match self {
            Self::TauTauInfinite => "Thm ττ (i)",
            Self::TauTauThree => "Thm ττ (ii)",
            Self::TauTauOne => "Thm ττ (iii)",
            Self::TauTauHyperbolic => "Thm ττ, otherwise",
            Self::TauRhoHyperbolic => "Thm τρ, first clause",
            Self::TauRhoInfinite => "Thm τρ (i)",
            Self::TauRhoFour => "Thm τρ (ii)",
            Self::TauRhoTwo => "Thm τρ (iii)",
            Self::TauRhoOne => "Thm τρ (iv)",
            Self::RhoRhoTwo => "Thm ρρ (i)",
            Self::RhoRhoOne => "Thm ρρ (ii)",
            Self::RhoRhoHyperbolic => "Thm ρρ, otherwise",
            Self::Inadmissible => "inadmissible",
            Self::Toroidal => "toroidal",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    /// Present iff `status` is `Classified`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annulus_count: Option<AnnulusCount>,
    pub hyperbolic: bool,
    pub branch: Branch,
    pub annuli: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
}

const NOTE_IRREDUCIBLE: &str = "irreducible: every 3-decomposable genus two handlebody-knot is";
const NOTE_ATOROIDAL: &str = "atoroidal: both tangles are atoroidal, hence so is the handlebody-knot";
const NOTE_HYPERBOLIC: &str =
    "hyperbolic iff no essential annulus, given irreducibility and atoroidality (Thurston)";

impl Verdict {
    fn classified(count: AnnulusCount, branch: Branch, annuli: Vec<String>) -> Self {
        Self {
            status: Status::Classified,
            annulus_count: Some(count),
            hyperbolic: count == AnnulusCount::Zero,
            branch,
            annuli,
            notes: vec![NOTE_IRREDUCIBLE.into(), NOTE_ATOROIDAL.into(), NOTE_HYPERBOLIC.into()],
            violations: Vec::new(),
        }
    }

    pub fn inadmissible(violations: Vec<String>) -> Self {
        Self {
            status: Status::Inadmissible,
            annulus_count: None,
            hyperbolic: false,
            branch: Branch::Inadmissible,
            annuli: Vec::new(),
            notes: Vec::new(),
            violations,
        }
    }

    fn toroidal(which: Vec<String>) -> Self {
        Self {
            status: Status::Toroidal,
            annulus_count: None,
            hyperbolic: false,
            branch: Branch::Toroidal,
            annuli: Vec::new(),
            notes: which,
            violations: Vec::new(),
        }
    }

    /// Status, count and branch: the part of a verdict golden tests pin.
    pub fn summary(&self) -> (Status, Option<AnnulusCount>, Branch) {
        (self.status, self.annulus_count, self.branch)
    }

    /// One-line human rendering, e.g. `3 essential annuli (Thm ττ (ii))`.
    pub fn headline(&self) -> String {
        match (self.status, self.annulus_count) {
            (Status::Classified, Some(AnnulusCount::Zero)) => format!("hyperbolic ({})", self.branch),
            (Status::Classified, Some(AnnulusCount::Finite(1))) => {
                format!("1 essential annulus ({})", self.branch)
            }
            (Status::Classified, Some(AnnulusCount::Finite(n))) => {
                format!("{n} essential annuli ({})", self.branch)
            }
            (Status::Classified, Some(AnnulusCount::Infinite)) => {
                format!("infinitely many essential annuli ({})", self.branch)
            }
            (Status::Inadmissible, _) => format!("inadmissible: {}", self.violations.join("; ")),
            (Status::Toroidal, _) => "toroidal: the annulus classification does not apply".into(),
            (Status::Classified, None) => unreachable!("classified verdicts carry a count"),
        }
    }
}

fn precondition(t: &ResolvedTangle, kind: TangleKind, label: &str) -> Option<String> {
    if t.kind != kind {
        Some(format!("{label} must be a {kind}-tangle"))
    } else if !t.atoroidal {
        Some(format!("{label} is toroidal"))
    } else if !t.essential {
        Some(format!("{label} is inessential: it must be non-trivial and not a Hopf ρ-tangle"))
    } else {
        None
    }
}

fn check(pairs: [(&ResolvedTangle, TangleKind, &str); 2]) -> Option<Verdict> {
    let problems: Vec<String> =
        pairs.iter().filter_map(|(t, k, l)| precondition(t, *k, l)).collect();
    (!problems.is_empty()).then(|| Verdict::inadmissible(problems))
}

fn underdetermined(label: &str) -> Verdict {
    Verdict::inadmissible(vec![format!(
        "{label} is declared rational with a slope 1/n but the slope is not given; \
         the dispatch depends on whether n = ±3"
    )])
}

fn rect_list(kind: &str, set: &std::collections::BTreeSet<RectangleType>) -> String {
    let names: Vec<String> = set.iter().map(|r| r.to_string()).collect();
    format!("{kind} good rectangles: {}", names.join(", "))
}

pub fn classify_tautau(a: &ResolvedTangle, b: &ResolvedTangle, special: bool) -> Verdict {
    if let Some(v) = check([(a, TangleKind::Tau, "first tangle"), (b, TangleKind::Tau, "second tangle")]) {
        return v;
    }
    if !special {
        return Verdict::classified(
            AnnulusCount::Zero,
            Branch::TauTauHyperbolic,
            vec!["the decomposition is not special, so no good rectangle meets the special end".into()],
        );
    }
    if !a.is_unit_fraction() || !b.is_unit_fraction() {
        return Verdict::classified(
            AnnulusCount::Zero,
            Branch::TauTauHyperbolic,
            vec!["a τ-tangle is not rational with a slope 1/n, so it admits no good rectangle".into()],
        );
    }
    let (sa, sb) = (a.is_one_third(), b.is_one_third());
    if sa == Some(false) || sb == Some(false) {
        return Verdict::classified(
            AnnulusCount::Finite(1),
            Branch::TauTauOne,
            vec!["one essential annulus: a type I rectangle in each τ-tangle exterior, glued along the special end".into()],
        );
    }
    match (a.slope, b.slope) {
        (Some(x), Some(y)) if x == y => Verdict::classified(
            AnnulusCount::Infinite,
            Branch::TauTauInfinite,
            vec![format!("both slopes {x}: the 5_2 configuration, infinitely many essential annuli")],
        ),
        (Some(x), Some(y)) => Verdict::classified(
            AnnulusCount::Finite(3),
            Branch::TauTauThree,
            vec![format!("slopes {x} and {y}: the 4_1 configuration, three essential annuli")],
        ),
        (None, _) => underdetermined("first tangle"),
        (_, None) => underdetermined("second tangle"),
    }
}

pub fn classify_taurho(t: &ResolvedTangle, r: &ResolvedTangle, special: bool) -> Verdict {
    if let Some(v) = check([(t, TangleKind::Tau, "τ-tangle"), (r, TangleKind::Rho, "ρ-tangle")]) {
        return v;
    }
    let annulus = match good_annulus(r) {
        Ok(a) => a,
        Err(e) => return Verdict::inadmissible(vec![e.to_string()]),
    };
    let Some(annulus) = annulus else {
        return Verdict::classified(
            AnnulusCount::Zero,
            Branch::TauRhoHyperbolic,
            vec!["the ρ-tangle is not satellite or cable and has no Hopf ρ-summand".into()],
        );
    };
    let mut annuli = vec![format!("good annulus of {annulus} in the ρ-tangle exterior; {}", AnnulusType::UNIQUENESS)];

    let rectangles_meet = special && t.is_unit_fraction() && r.torus.is_some();
    if !rectangles_meet {
        return Verdict::classified(AnnulusCount::Finite(1), Branch::TauRhoOne, annuli);
    }
    let torus = r.torus.expect("checked above");
    let Some(one_third) = t.is_one_third() else {
        return underdetermined("τ-tangle");
    };
    if let (Ok(tr), Ok(rr)) = (rect_types_tau(t), rect_types_rho(r)) {
        annuli.push(rect_list("τ", &tr));
        annuli.push(rect_list("ρ", &rr));
    }
    let (count, branch) = match (one_third, torus.p() == 2) {
        (true, true) => (AnnulusCount::Infinite, Branch::TauRhoInfinite),
        (true, false) => (AnnulusCount::Finite(4), Branch::TauRhoFour),
        (false, false) => (AnnulusCount::Finite(2), Branch::TauRhoTwo),
        // slope 1/n with n ≠ ±3 against p = 2 falls through every earlier clause
        (false, true) => (AnnulusCount::Finite(1), Branch::TauRhoOne),
    };
    Verdict::classified(count, branch, annuli)
}

pub fn classify_rhorho(a: &ResolvedTangle, b: &ResolvedTangle) -> Verdict {
    if let Some(v) = check([(a, TangleKind::Rho, "first tangle"), (b, TangleKind::Rho, "second tangle")]) {
        return v;
    }
    let mut annuli = Vec::new();
    for (label, t) in [("first", a), ("second", b)] {
        match good_annulus(t) {
            Ok(Some(ty)) => annuli.push(format!("good annulus of {ty} in the {label} ρ-tangle exterior")),
            Ok(None) => {}
            Err(e) => return Verdict::inadmissible(vec![e.to_string()]),
        }
    }
    let (count, branch) = match annuli.len() {
        2 => (AnnulusCount::Finite(2), Branch::RhoRhoTwo),
        1 => (AnnulusCount::Finite(1), Branch::RhoRhoOne),
        _ => (AnnulusCount::Zero, Branch::RhoRhoHyperbolic),
    };
    Verdict::classified(count, branch, annuli)
}

/// Validates and resolves both tangles, then dispatches on the
/// decomposition type. Never fails: problems become an `Inadmissible`
/// verdict.
pub fn classify(d: &Decomposition) -> Verdict {
    let expected = d.kind.tangle_kinds();
    let mut problems = Vec::new();
    for (i, (desc, kind)) in d.tangles.iter().zip(expected).enumerate() {
        let label = if i == 0 { "first tangle" } else { "second tangle" };
        if desc.kind() != kind {
            problems.push(format!(
                "{label} is a {}-tangle but a {} decomposition needs a {kind}-tangle there",
                desc.kind(),
                d.kind
            ));
        }
        problems.extend(validate_descriptor(desc).into_iter().map(|v| format!("{label}: {v}")));
    }
    if d.kind == DecompositionKind::RhoRho && d.special {
        problems.push("the ρρ-decomposition cannot be special".into());
    }
    if !problems.is_empty() {
        return Verdict::inadmissible(problems);
    }

    let resolved: Result<Vec<ResolvedTangle>> = d.tangles.iter().map(resolve).collect();
    let [a, b] = match resolved {
        Ok(v) => <[ResolvedTangle; 2]>::try_from(v).expect("two tangles"),
        Err(e) => return Verdict::inadmissible(vec![e.to_string()]),
    };

    let inessential: Vec<String> = [("first tangle", &a), ("second tangle", &b)]
        .iter()
        .filter(|(_, t)| !t.essential)
        .map(|(l, t)| {
            let why = if t.trivial { "trivial" } else { "the Hopf ρ-tangle" };
            format!("{l} is {why}; an essential tangle must be non-trivial and not a Hopf ρ-tangle")
        })
        .collect();
    if !inessential.is_empty() {
        return Verdict::inadmissible(inessential);
    }

    let toroidal: Vec<String> = [("first tangle", &a), ("second tangle", &b)]
        .iter()
        .filter(|(_, t)| !t.atoroidal)
        .map(|(l, _)| format!("{l} is toroidal, so the handlebody-knot is toroidal"))
        .collect();
    if !toroidal.is_empty() {
        return Verdict::toroidal(toroidal);
    }

    match d.kind {
        DecompositionKind::TauTau => classify_tautau(&a, &b, d.special),
        DecompositionKind::TauRho => classify_taurho(&a, &b, d.special),
        DecompositionKind::RhoRho => classify_rhorho(&a, &b),
    }
}

/// Declared facts about the essential annuli of an atoroidal handlebody-knot
/// exterior.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnnulusProfile {
    pub atoroidal: bool,
    pub nonseparating_count: u32,
    pub nonseparating_all_type2: bool,
    pub infinitely_many: bool,
    pub in_family_l: bool,
}

impl AnnulusProfile {
    pub fn validate(&self) -> Result<()> {
        if self.atoroidal && self.nonseparating_count > 2 {
            return Err(Error::InvalidProfile(format!(
                "{} non-separating essential annuli; an atoroidal genus two exterior has at most two",
                self.nonseparating_count
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Obstruction {
    /// Two non-separating essential annuli, not both of type 2.
    Not3DecomposableByAnnulusTypes,
    /// Infinitely many essential annuli outside the family 𝓛.
    Not3DecomposableByInfiniteFamily,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Not3DecomposableByAnnulusTypes => {
                "not 3-decomposable: two non-separating essential annuli, not both of type 2"
            }
            Self::Not3DecomposableByInfiniteFamily => {
                "not 3-decomposable: infinitely many essential annuli outside the family L"
            }
        })
    }
}

/// Obstructions to 3-decomposability that a declared profile triggers.
/// Both apply to atoroidal handlebody-knots only.
pub fn obstruction_check(p: &AnnulusProfile) -> Result<Vec<Obstruction>> {
    p.validate()?;
    let mut out = Vec::new();
    if !p.atoroidal {
        return Ok(out);
    }
    if p.nonseparating_count == 2 && !p.nonseparating_all_type2 {
        out.push(Obstruction::Not3DecomposableByAnnulusTypes);
    }
    if p.infinitely_many && !p.in_family_l {
        out.push(Obstruction::Not3DecomposableByInfiniteFamily);
    }
    Ok(out)
}
