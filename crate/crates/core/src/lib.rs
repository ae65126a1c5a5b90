//! Exact computer algebra for the Moonshine function `J = j - 744`.
//!
//! The [`series`] kernel carries every q-expansion; [`modular`] builds
//! `E4`, `E6`, `Delta`, `j` and `J`; [`hecke`] and [`faber`] provide the two
//! sides of the replicability identities that [`lambda`] checks. [`pairs`],
//! [`supersingular`] and [`trees`] cover commuting pairs in finite groups,
//! Ogg's supersingular primes and the rooted-tree functional equation.

pub mod error;
pub mod faber;
pub mod hecke;
pub mod lambda;
pub mod modular;
pub mod pairs;
pub mod series;
pub mod supersingular;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use series::{BiSeries, LaurentSeries};

/// Exact rational coefficients, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
