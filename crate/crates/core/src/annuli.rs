//! Good annuli in ρ-tangle exteriors. A τ-tangle exterior never has one.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tangle::{ResolvedTangle, TangleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AnnulusType {
    TypeISatellite,
    TypeIICable,
    HopfType,
}

impl AnnulusType {
    /// Any other good annulus in the same exterior is isotopic to this one
    /// away from the pants `P`.
    pub const UNIQUENESS: &'static str =
        "every other good annulus in the exterior is isotopic to this one in the complement of P";
}

impl fmt::Display for AnnulusType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::TypeISatellite => "type I (satellite)",
            Self::TypeIICable => "type II (cable)",
            Self::HopfType => "Hopf type",
        })
    }
}

pub fn good_annulus(t: &ResolvedTangle) -> Result<Option<AnnulusType>> {
    if !t.atoroidal || !t.essential {
        return Err(Error::NotApplicable(
            "good annuli are classified only for essential atoroidal tangles".into(),
        ));
    }
    if t.kind == TangleKind::Tau {
        return Ok(None);
    }
    let set: Vec<AnnulusType> = [
        (t.satellite, AnnulusType::TypeISatellite),
        (t.cable, AnnulusType::TypeIICable),
        (t.hopf_summand, AnnulusType::HopfType),
    ]
    .into_iter()
    .filter_map(|(flag, ty)| flag.then_some(ty))
    .collect();
    match set.as_slice() {
        [] => Ok(None),
        [one] => Ok(Some(*one)),
        _ => Err(Error::MutualExclusivity(format!(
            "{} good annulus types claimed at once",
            set.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tangle::{resolve, AbstractRho, RhoPresentation, TangleDescriptor};

    fn rho_flags(satellite: bool, cable: bool, hopf_summand: bool) -> ResolvedTangle {
        let a = AbstractRho {
            atoroidal: true,
            trivial: false,
            hopf_tangle: false,
            satellite,
            cable,
            hopf_summand,
            torus: None,
        };
        resolve(&TangleDescriptor::Rho(RhoPresentation::Abstract(a))).unwrap()
    }

    #[test]
    fn one_flag_one_type() {
        assert_eq!(good_annulus(&rho_flags(true, false, false)).unwrap(), Some(AnnulusType::TypeISatellite));
        assert_eq!(good_annulus(&rho_flags(false, true, false)).unwrap(), Some(AnnulusType::TypeIICable));
        assert_eq!(good_annulus(&rho_flags(false, false, true)).unwrap(), Some(AnnulusType::HopfType));
        assert_eq!(good_annulus(&rho_flags(false, false, false)).unwrap(), None);
    }

    #[test]
    fn rational_rho_without_torus_has_none() {
        let t = resolve(&TangleDescriptor::rational_rho(vec![2, 1, 1, 1, -1])).unwrap();
        assert_eq!(good_annulus(&t).unwrap(), None);
    }

    #[test]
    fn torus_from_unit_slope_is_satellite() {
        for k in 2..=10 {
            let t = resolve(&TangleDescriptor::rational_rho(vec![2 * k, 0])).unwrap();
            assert_eq!(good_annulus(&t).unwrap(), Some(AnnulusType::TypeISatellite));
        }
    }

    #[test]
    fn tau_never() {
        for a in [3, 5, -7] {
            let t = resolve(&TangleDescriptor::rational_tau(vec![a, 0])).unwrap();
            assert_eq!(good_annulus(&t).unwrap(), None);
        }
    }

    #[test]
    fn hopf_tangle_is_rejected() {
        let t = resolve(&TangleDescriptor::rational_rho(vec![2, 0])).unwrap();
        assert!(matches!(good_annulus(&t), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn forged_flags_are_caught() {
        let mut t = rho_flags(true, false, false);
        t.cable = true;
        assert!(matches!(good_annulus(&t), Err(Error::MutualExclusivity(_))));
    }
}
