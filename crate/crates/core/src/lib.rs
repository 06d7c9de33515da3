//! Exact arithmetic for Ore localizations of ℤ, ℚ[x] and the first Weyl algebra.

pub mod budget;
pub mod closure;
pub mod error;
pub mod localization;
pub mod ore;
pub mod rings;
pub mod saturation;
pub mod weyl;

pub use budget::Budget;
pub use error::{Error, Result};
pub use rings::{Elem, Int, Rat, RingId, Tri, UniPoly, WeylOp};
