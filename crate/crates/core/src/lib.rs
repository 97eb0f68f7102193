//! Exact decision engine for 3-decompositions of genus two handlebody-knots.
//!
//! Rational tangle slopes come from continued fractions ([`frac`]); tangle
//! descriptors resolve to semantic profiles ([`tangle`]); good rectangles
//! and good annuli of each side are classified ([`rect`], [`annuli`]); and
//! [`verdict::classify`] dispatches the ττ / τρ / ρρ classification to an
//! essential-annulus count and a hyperbolicity verdict.

pub mod annuli;
pub mod catalog;
pub mod census;
pub mod cli;
pub mod error;
pub mod frac;
pub mod rect;
pub mod tangle;
pub mod verdict;

pub use error::{Error, Result};
pub use frac::{ExtFraction, TwistVector};
pub use tangle::{ResolvedTangle, TangleDescriptor, TorusParams};
pub use verdict::{classify, AnnulusCount, Branch, Decomposition, DecompositionKind, Status, Verdict};
