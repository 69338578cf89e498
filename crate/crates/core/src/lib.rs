//! Exact computations with graded Betti tables of projective schemes:
//! Groebner bases, Koszul cohomology, rational normal scrolls and the
//! varieties that live on them, plus executable checks of Betti-number bounds.

pub mod constructions;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod kernel;
pub mod verify;

pub use error::{Error, Result};
