//! Exact arithmetic substrate: fields, monomials, polynomial rings and
//! linear algebra.

pub mod field;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod ring;

pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use matrix::{bareiss_rank, sparse_rank, Matrix, SparseVec};
pub use monomial::{Monomial, MonomialOrder, MAX_VARS};
pub use poly::Polynomial;
pub use ring::{Ring, RingRef};
