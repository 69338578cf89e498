//! Hilbert data, Betti tables and the invariants derived from them.

pub mod betti;
pub mod derived;
pub mod hilbert;

pub use betti::{betti_table, graded_piece_basis, koszul_betti, BettiTable, ROW_CAP};
pub use derived::{derived_invariants, sectional_genus, DerivedInvariants};
pub use hilbert::{hilbert_data, monomial_numerator, HilbertData};
