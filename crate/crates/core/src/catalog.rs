//! Built-in handlebody-knots with known verdicts.
//!
//! Tangles whose slopes are not recorded are stored as abstract descriptors
//! carrying only the property the classification needs (rational, slope not
//! of the form 1/n, or just rational for non-special decompositions).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tangle::{AbstractTau, TangleDescriptor, TauPresentation};
use crate::verdict::{
    classify, obstruction_check, AnnulusCount, AnnulusProfile, Branch, Decomposition,
    DecompositionKind, Obstruction, Status,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    DerivedByClassifier,
    StoredFact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    Verdict { status: Status, count: AnnulusCount, branch: Branch },
    Hyperbolic,
    Obstructions(Vec<Obstruction>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<AnnulusProfile>,
    pub expected: Expected,
    pub provenance: Provenance,
    pub source: String,
}

fn rational_unknown_slope() -> TangleDescriptor {
    TangleDescriptor::Tau(TauPresentation::Abstract(AbstractTau {
        atoroidal: true,
        trivial: false,
        rational: true,
        slope: None,
        unit_fraction_slope: None,
    }))
}

fn rational_not_unit_slope() -> TangleDescriptor {
    TangleDescriptor::Tau(TauPresentation::Abstract(AbstractTau {
        atoroidal: true,
        trivial: false,
        rational: true,
        slope: None,
        unit_fraction_slope: Some(false),
    }))
}

fn derived(name: &str, d: Decomposition, count: AnnulusCount, branch: Branch, source: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        decomposition: Some(d),
        profile: None,
        expected: Expected::Verdict { status: Status::Classified, count, branch },
        provenance: Provenance::DerivedByClassifier,
        source: source.into(),
    }
}

const COR_HYPERBOLICITY: &str = "corollary: 5_3, 6_2, 6_3, 6_5, 6_6, 6_7, 6_9 are hyperbolic";
const COR_HYPERBOLICITY_SEVEN: &str =
    "corollary: 7_17, 7_18, 7_21, 7_23, 7_26, 7_27, 7_33, 7_37, 7_57, 7_58 are hyperbolic";

// slopes -3/8 and -3/10 by Euclidean expansion
const TWISTS_MINUS_3_8: [i64; 5] = [2, 1, 1, 1, -1];
const TWISTS_MINUS_3_10: [i64; 4] = [3, 2, 1, -1];

/// Every entry, in table order.
pub fn catalog() -> Vec<CatalogEntry> {
    use AnnulusCount::*;
    use DecompositionKind::*;

    let special_not_unit = || Decomposition::new(TauTau, true, rational_not_unit_slope(), rational_unknown_slope());
    let not_special = || Decomposition::new(TauTau, false, rational_unknown_slope(), rational_unknown_slope());
    let taurho = |twists: &[i64]| {
        Decomposition::new(TauRho, false, rational_unknown_slope(), TangleDescriptor::rational_rho(twists.to_vec()))
    };

    let mut out = vec![
        derived(
            "4_1",
            Decomposition::new(
                TauTau,
                true,
                TangleDescriptor::rational_tau(vec![3, 0]),
                TangleDescriptor::rational_tau(vec![-3, 0]),
            ),
            Finite(3),
            Branch::TauTauThree,
            "ττ classification, clause (ii): three essential annuli, the handlebody-knot 4_1",
        ),
        derived(
            "5_2",
            Decomposition::new(
                TauTau,
                true,
                TangleDescriptor::rational_tau(vec![3, 0]),
                TangleDescriptor::rational_tau(vec![3, 0]),
            ),
            Infinite,
            Branch::TauTauInfinite,
            "ττ classification, clause (i): infinitely many essential annuli, the handlebody-knot 5_2",
        ),
    ];
    for name in ["5_3", "6_2", "6_3", "6_7"] {
        out.push(derived(name, special_not_unit(), Zero, Branch::TauTauHyperbolic, COR_HYPERBOLICITY));
    }
    for name in ["6_5", "6_6"] {
        out.push(derived(name, not_special(), Zero, Branch::TauTauHyperbolic, COR_HYPERBOLICITY));
    }
    out.push(CatalogEntry {
        name: "6_8".into(),
        decomposition: None,
        profile: None,
        expected: Expected::Hyperbolic,
        provenance: Provenance::StoredFact,
        source: "6_8 is hyperbolic (separate involution argument, not classifier-derived)".into(),
    });
    out.push(derived("6_9", taurho(&TWISTS_MINUS_3_8), Zero, Branch::TauRhoHyperbolic, COR_HYPERBOLICITY));
    for name in ["7_17", "7_18", "7_21", "7_23"] {
        out.push(derived(name, special_not_unit(), Zero, Branch::TauTauHyperbolic, COR_HYPERBOLICITY_SEVEN));
    }
    out.push(derived("7_26", taurho(&TWISTS_MINUS_3_10), Zero, Branch::TauRhoHyperbolic, COR_HYPERBOLICITY_SEVEN));
    for name in ["7_27", "7_33"] {
        out.push(derived(name, special_not_unit(), Zero, Branch::TauTauHyperbolic, COR_HYPERBOLICITY_SEVEN));
    }
    out.push(derived("7_37", taurho(&TWISTS_MINUS_3_8), Zero, Branch::TauRhoHyperbolic, COR_HYPERBOLICITY_SEVEN));
    for name in ["7_57", "7_58"] {
        out.push(derived(name, special_not_unit(), Zero, Branch::TauTauHyperbolic, COR_HYPERBOLICITY_SEVEN));
    }
    out.push(CatalogEntry {
        name: "non_3_decomposable".into(),
        decomposition: None,
        profile: Some(AnnulusProfile {
            atoroidal: true,
            nonseparating_count: 2,
            nonseparating_all_type2: false,
            infinitely_many: false,
            in_family_l: false,
        }),
        expected: Expected::Obstructions(vec![Obstruction::Not3DecomposableByAnnulusTypes]),
        provenance: Provenance::DerivedByClassifier,
        source: "atoroidal example with two non-separating essential annuli, neither of type 2".into(),
    });
    out
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RowOutcome {
    Pass { observed: String },
    Fail { observed: String, expected: String },
    StoredFact,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub name: String,
    #[serde(flatten)]
    pub outcome: RowOutcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub passed: usize,
    pub failed: usize,
    pub stored_facts: usize,
}

impl VerifyReport {
    pub fn all_match(&self) -> bool {
        self.failed == 0
    }
}

fn verify_entry(e: &CatalogEntry) -> RowOutcome {
    match (&e.expected, &e.decomposition, &e.profile) {
        (Expected::Hyperbolic, None, None) => RowOutcome::StoredFact,
        (Expected::Verdict { status, count, branch }, Some(d), _) => {
            let v = classify(d);
            let observed = v.headline();
            let expected = (*status, Some(*count), *branch);
            if v.summary() == expected {
                RowOutcome::Pass { observed }
            } else {
                RowOutcome::Fail { observed, expected: format!("{status:?} {count} ({branch})") }
            }
        }
        (Expected::Obstructions(want), None, Some(p)) => match obstruction_check(p) {
            Ok(got) if &got == want => RowOutcome::Pass { observed: format!("{got:?}") },
            Ok(got) => RowOutcome::Fail { observed: format!("{got:?}"), expected: format!("{want:?}") },
            Err(e) => RowOutcome::Fail { observed: e.to_string(), expected: format!("{want:?}") },
        },
        _ => RowOutcome::Fail { observed: "malformed entry".into(), expected: format!("{:?}", e.expected) },
    }
}

/// Runs the classifier on the given entries.
pub fn verify_entries(entries: &[CatalogEntry]) -> VerifyReport {
    let mut report = VerifyReport::default();
    for e in entries {
        let outcome = verify_entry(e);
        match outcome {
            RowOutcome::Pass { .. } => report.passed += 1,
            RowOutcome::Fail { .. } => report.failed += 1,
            RowOutcome::StoredFact => report.stored_facts += 1,
        }
        report.rows.push(VerifyRow { name: e.name.clone(), outcome });
    }
    report
}

pub fn catalog_verify() -> VerifyReport {
    verify_entries(&catalog())
}
