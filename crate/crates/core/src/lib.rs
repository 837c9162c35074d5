//! Monomial difference ideals.
//!
//! Monomials `Y^u = Π yᵢ^{uᵢ}` have exponent vectors `u ∈ ℕ[x]ⁿ`, where
//! `yᵢ^x` stands for `σ(yᵢ)`. This crate decides membership of monomials in
//! the Δ-ideal generated by a finite set and in its radical, reflexive,
//! perfect, well-mixed and radical well-mixed closures, computes prime
//! decompositions of radical well-mixed and perfect monomial Δ-ideals, and
//! Alexander duals of the former. The [`oracle`] module holds brute-force
//! deciders used to validate all of it.

pub mod decompose;
pub mod duality;
pub mod error;
pub mod exponents;
pub mod ideals;
pub mod monomials;
pub mod oracle;
pub mod text;

pub use decompose::{Decomposition, Flavor};
pub use duality::DualityContext;
pub use error::{Error, Result};
pub use exponents::ExpPoly;
pub use ideals::{
    ClosureCheck, ClosureKind, ClosureProperty, ClosureSearchCaps, IdealPresentation,
};
pub use monomials::{CharVector, ExpVector};
pub use oracle::{OracleCaps, Verdict};
