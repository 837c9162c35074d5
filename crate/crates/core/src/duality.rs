//! Alexander duality for radical well-mixed monomial Δ-ideals.
//!
//! For a point `a` dominating every character vector of `I`, the dual is
//! `I^[a] = ∩ 𝔪^{a\b}` over the character vectors `b` of `I`, where
//! `(a\b)ᵢ = aᵢ + 1 - bᵢ` and `-1` stays `-1`. Equivalently, the components
//! `𝔪^b` of `I` turn into generators `Y^{x^{a\b}}` of the dual.

use crate::decompose::{
    components_to_generators, standard_prime_decomposition, Decomposition, Flavor,
};
use crate::error::{Error, Result};
use crate::ideals::{ClosureKind, IdealPresentation};
use crate::monomials::{CharVector, ExpVector};

/// `a\b`, defined for `-1 ≤ bᵢ ≤ aᵢ + 1`.
pub fn a_complement(a: &CharVector, b: &CharVector) -> Result<CharVector> {
    Error::check_arity(a.arity(), b.arity())?;
    let entries = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(&ai, &bi)| {
            if bi < 0 {
                Ok(-1)
            } else if bi <= ai + 1 {
                Ok(ai + 1 - bi)
            } else {
                Err(Error::Precondition(format!(
                    "cannot complement {b} in {a}: entries must satisfy b <= a + 1"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    CharVector::new(entries)
}

/// `a - b` as used by the complementation test: `aᵢ - bᵢ` where `bᵢ ≥ 0`
/// and `aᵢ + 1` where `bᵢ = -1`. Requires `b ≤ a`.
pub fn a_difference(a: &CharVector, b: &CharVector) -> Result<CharVector> {
    Error::check_arity(a.arity(), b.arity())?;
    if !b.le(a) {
        return Err(Error::Precondition(format!("{b} is not below {a}")));
    }
    let entries = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(&ai, &bi)| if bi < 0 { ai + 1 } else { ai - bi })
        .collect();
    CharVector::new(entries)
}

/// Character vectors, with the unit ideal contributing the all-absent one.
fn characters(ideal: &IdealPresentation) -> Vec<CharVector> {
    if ideal.is_unit() {
        vec![CharVector::absent(ideal.arity())]
    } else {
        ideal.character_vectors()
    }
}

/// Entrywise maximum of the character vectors (all `-1` when there are
/// none).
pub fn default_point(ideal: &IdealPresentation) -> CharVector {
    characters(ideal)
        .iter()
        .fold(CharVector::absent(ideal.arity()), |acc, b| acc.join(b))
}

/// A radical well-mixed ideal together with a duality point dominating its
/// character vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityContext {
    point: CharVector,
    ideal: IdealPresentation,
}

impl DualityContext {
    pub fn new(ideal: &IdealPresentation, point: CharVector) -> Result<Self> {
        if ideal.kind() != ClosureKind::RadicalWellMixed {
            return Err(Error::KindMismatch {
                expected: ClosureKind::RadicalWellMixed.to_string(),
                found: ideal.kind().to_string(),
            });
        }
        Error::check_arity(ideal.arity(), point.arity())?;
        if let Some(b) = characters(ideal).into_iter().find(|b| !b.le(&point)) {
            return Err(Error::PointNotDominating {
                point,
                offending: b,
            });
        }
        Ok(DualityContext {
            point,
            ideal: ideal.reduce(),
        })
    }

    /// Context at [`default_point`].
    pub fn with_default_point(ideal: &IdealPresentation) -> Result<Self> {
        Self::new(ideal, default_point(ideal))
    }

    pub fn point(&self) -> &CharVector {
        &self.point
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.ideal
    }
}

fn dual_decomposition(ideal: &IdealPresentation, a: &CharVector) -> Result<Decomposition> {
    let components = characters(ideal)
        .iter()
        .map(|b| a_complement(a, b))
        .collect::<Result<Vec<_>>>()?;
    Decomposition::from_components(ideal.arity(), Flavor::RwmPrime, components)
}

/// Components of `I^[a]`: `{a\b : b a character vector of I}`.
pub fn dual_components(ctx: &DualityContext) -> Result<Decomposition> {
    dual_decomposition(&ctx.ideal, &ctx.point)
}

/// `I^[a]`, built from the character vectors of `I`.
pub fn alexander_dual(ctx: &DualityContext) -> Result<IdealPresentation> {
    Ok(components_to_generators(&dual_components(ctx)?))
}

/// `I^[a]`, built from the components of `I`: each component `𝔪^b` gives the
/// generator `Y^{x^{a\b}}`.
pub fn alexander_dual_via_components(ctx: &DualityContext) -> Result<IdealPresentation> {
    let n = ctx.ideal.arity();
    let components = if ctx.ideal.is_unit() {
        Vec::new()
    } else {
        standard_prime_decomposition(&ctx.ideal)?
            .components()
            .to_vec()
    };
    let gens = components
        .iter()
        .map(|b| Ok(ExpVector::pattern(&a_complement(&ctx.point, b)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealPresentation::new(n, ClosureKind::RadicalWellMixed, gens)?.reduce())
}

/// The character-vector construction at `a` without the domination
/// requirement; only `bᵢ ≤ aᵢ + 1` is needed for the complements to exist.
pub fn dual_relaxed(ideal: &IdealPresentation, a: &CharVector) -> Result<IdealPresentation> {
    if ideal.kind() != ClosureKind::RadicalWellMixed {
        return Err(Error::KindMismatch {
            expected: ClosureKind::RadicalWellMixed.to_string(),
            found: ideal.kind().to_string(),
        });
    }
    Error::check_arity(ideal.arity(), a.arity())?;
    Ok(components_to_generators(&dual_decomposition(ideal, a)?))
}

/// `Y^{x^b} ∉ I` exactly when `Y^{x^{a-b}} ∈ I^[a]`, for `b ≤ a`.
pub fn complementation_check(ctx: &DualityContext, b: &CharVector) -> Result<bool> {
    let diff = a_difference(&ctx.point, b)?;
    let dual = alexander_dual(ctx)?;
    let outside = !ctx.ideal.member(&ExpVector::pattern(b))?;
    let inside_dual = dual.member(&ExpVector::pattern(&diff))?;
    Ok(outside == inside_dual)
}

/// `(I^[a])^[a] = I`, comparing minimal generators. The second dual uses the
/// relaxed bound since `a` need not dominate the character vectors of the
/// dual.
pub fn involution_check(ctx: &DualityContext) -> Result<bool> {
    let dual = alexander_dual(ctx)?;
    let back = dual_relaxed(&dual, &ctx.point)?;
    Ok(back == ctx.ideal.reduce())
}

/// A character vector of `I^[a]` not dominated by `a`, if any.
pub fn dual_domination_failure(ctx: &DualityContext) -> Result<Option<CharVector>> {
    let dual = alexander_dual(ctx)?;
    Ok(characters(&dual).into_iter().find(|c| !c.le(&ctx.point)))
}
