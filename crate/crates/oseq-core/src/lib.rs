//! Exact arithmetic for pure O-sequences and level Hilbert functions.
//!
//! The crate computes Hilbert functions of monomial level algebras (pure
//! O-sequences) from generator sets, evaluates the classical formulas for
//! compressed Gorenstein and level algebras built from sums of powers of
//! general linear forms, decides numerical properties of the resulting
//! sequences (log-concavity, unimodality, flawlessness, Macaulay growth),
//! and cross-checks the formulas against independent linear algebra over a
//! prime field via the contraction action on inverse systems.
//!
//! All counts and products are arbitrary-precision; nothing here overflows.

pub mod apolarity;
pub mod arith;
pub mod error;
pub mod level;
pub mod monomial;
pub mod osequence;
pub mod properties;
pub mod search;
pub mod sequence;

pub use error::{Error, Result};
pub use monomial::{GeneratorSet, Monomial};
pub use properties::{Property, PropertyReport};
pub use sequence::HilbertSequence;
