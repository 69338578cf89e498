//! Groebner bases and the ideal operations built on them.

pub mod basis;
pub mod ops;

pub use basis::{buchberger, ideal_equal, ideal_subset, GroebnerBasis, Ideal};
pub use ops::{
    eliminate, implicitize, intersect, quotient, quotient_ideal, restrict_linear, same_ideal, saturate,
    saturate_irrelevant, Parameterization,
};
