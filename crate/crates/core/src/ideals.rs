//! Monomial Δ-ideals presented by finite generator sets, and monomial
//! membership for each closure operator.
//!
//! A monomial Δ-ideal is determined by its support set, so membership of a
//! polynomial reduces to membership of every monomial in its support. Each
//! closure below is a union over generators of the closure of a single
//! generator, which makes every membership test an existential over
//! generators of a per-generator predicate ([`covers`]).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decompose;
use crate::error::{Error, Result};
use crate::exponents::ExpPoly;
use crate::monomials::{minimal_elements, CharVector, ExpVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureKind {
    /// `[S]`: the Δ-ideal generated by the monomials.
    Delta,
    /// `√[S]`
    Radical,
    /// `[S]*`
    Reflexive,
    /// `{S}`
    Perfect,
    /// `⟨S⟩` at the support level.
    WellMixed,
    /// `⟨S⟩_r = √⟨S⟩`
    RadicalWellMixed,
}

impl ClosureKind {
    pub const ALL: [ClosureKind; 6] = [
        ClosureKind::Delta,
        ClosureKind::Radical,
        ClosureKind::Reflexive,
        ClosureKind::Perfect,
        ClosureKind::WellMixed,
        ClosureKind::RadicalWellMixed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosureKind::Delta => "delta",
            ClosureKind::Radical => "radical",
            ClosureKind::Reflexive => "reflexive",
            ClosureKind::Perfect => "perfect",
            ClosureKind::WellMixed => "well-mixed",
            ClosureKind::RadicalWellMixed => "radical-well-mixed",
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_lowercase().replace('_', "-");
        match normalized.as_str() {
            "delta" => Ok(ClosureKind::Delta),
            "radical" => Ok(ClosureKind::Radical),
            "reflexive" => Ok(ClosureKind::Reflexive),
            "perfect" => Ok(ClosureKind::Perfect),
            "well-mixed" | "wm" => Ok(ClosureKind::WellMixed),
            "radical-well-mixed" | "rwm" => Ok(ClosureKind::RadicalWellMixed),
            _ => Err(Error::parse(0, format!("unknown closure kind '{s}'"))),
        }
    }
}

impl Serialize for ClosureKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Whether `Y^v` lies in the `kind`-closure of the single monomial `Y^u`.
///
/// Arities must already agree.
pub fn covers(kind: ClosureKind, u: &ExpVector, v: &ExpVector) -> bool {
    match kind {
        ClosureKind::Delta => u.divides_shifted_unchecked(v).is_some(),
        ClosureKind::Radical => radical_covers(u, v),
        ClosureKind::Reflexive => reflexive_root(u).divides_shifted_unchecked(v).is_some(),
        ClosureKind::Perfect => u.support_pattern().le(&v.support_pattern()),
        ClosureKind::WellMixed => u.precedes_unchecked(v),
        ClosureKind::RadicalWellMixed => u.deg_vector().le(&v.deg_vector()),
    }
}

/// Some multiple `m·v` dominates `xⁱ·u` exactly when the support of every
/// shifted coordinate of `u` sits inside the support of `v`.
fn radical_covers(u: &ExpVector, v: &ExpVector) -> bool {
    let Some(bound) = u.shift_bound(v) else {
        return false;
    };
    (0..=bound).any(|i| {
        u.coords().iter().zip(v.coords()).all(|(a, b)| {
            a.support()
                .all(|d| b.coeffs().get(d + i).is_some_and(|&c| c != 0))
        })
    })
}

/// `u` shifted down by its lowest occupied degree; `[u]* = [root(u)]`.
pub(crate) fn reflexive_root(u: &ExpVector) -> ExpVector {
    match u.lowest_degree() {
        Some(k) => u
            .unshift(k)
            .expect("lowest degree divides every coordinate"),
        None => u.clone(),
    }
}

/// `u` with every nonzero coefficient replaced by 1; `√[u] = [reduced(u)]`.
pub(crate) fn radical_root(u: &ExpVector) -> ExpVector {
    ExpVector::new(
        u.coords()
            .iter()
            .map(|c| {
                ExpPoly::from_coeffs(
                    c.coeffs()
                        .iter()
                        .map(|&k| u64::from(k != 0))
                        .collect::<Vec<_>>(),
                )
            })
            .collect(),
    )
}

/// `Π yᵢ` over the nonzero coordinates of `u`; `{u} = {support_monomial(u)}`.
pub(crate) fn support_monomial(u: &ExpVector) -> ExpVector {
    ExpVector::new(
        u.coords()
            .iter()
            .map(|c| {
                if c.is_zero() {
                    ExpPoly::zero()
                } else {
                    ExpPoly::one()
                }
            })
            .collect(),
    )
}

/// A monomial Δ-ideal given by generators and the closure applied to them.
///
/// Generators are nonzero, sorted and deduplicated. A generator equal to the
/// monomial 1 makes the ideal the unit ideal, recorded as a flag with no
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealPresentation {
    arity: usize,
    kind: ClosureKind,
    gens: Vec<ExpVector>,
    unit: bool,
}

impl IdealPresentation {
    pub fn new(arity: usize, kind: ClosureKind, gens: Vec<ExpVector>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Precondition("arity must be at least 1".into()));
        }
        for g in &gens {
            Error::check_arity(arity, g.arity())?;
        }
        if gens.iter().any(ExpVector::is_zero) {
            return Ok(Self::unit(arity, kind));
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        Ok(IdealPresentation {
            arity,
            kind,
            gens,
            unit: false,
        })
    }

    pub fn unit(arity: usize, kind: ClosureKind) -> Self {
        IdealPresentation {
            arity,
            kind,
            gens: Vec::new(),
            unit: true,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn kind(&self) -> ClosureKind {
        self.kind
    }

    pub fn generators(&self) -> &[ExpVector] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    /// Same generators, different closure.
    pub fn with_kind(&self, kind: ClosureKind) -> Self {
        IdealPresentation {
            kind,
            ..self.clone()
        }
    }

    /// Largest degree appearing in a generator (`-1` when there are none).
    pub fn max_degree(&self) -> i64 {
        self.gens
            .iter()
            .map(ExpVector::max_degree)
            .max()
            .unwrap_or(-1)
    }

    pub fn max_coeff(&self) -> u64 {
        self.gens
            .iter()
            .map(ExpVector::max_coeff)
            .max()
            .unwrap_or(0)
    }

    /// Whether `Y^v` lies in the ideal.
    pub fn member(&self, v: &ExpVector) -> Result<bool> {
        Error::check_arity(self.arity, v.arity())?;
        Ok(self.unit || self.gens.iter().any(|u| covers(self.kind, u, v)))
    }

    /// A polynomial lies in a monomial Δ-ideal iff every monomial of its
    /// support does.
    pub fn member_all(&self, support: &[ExpVector]) -> Result<bool> {
        for v in support {
            if !self.member(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A smaller presentation with the same membership function.
    ///
    /// * well-mixed: keep the `⪯`-minimal generators;
    /// * radical well-mixed: replace each generator by `Y^{x^{deg u}}` and
    ///   keep those with minimal degree vectors (the minimal generators);
    /// * perfect: replace each generator by the product of its variables and
    ///   keep minimal support patterns;
    /// * delta, radical, reflexive: drop generators lying in the closure of
    ///   another generator (ties keep the first in canonical order).
    pub fn reduce(&self) -> IdealPresentation {
        if self.unit {
            return Self::unit(self.arity, self.kind);
        }
        let gens = match self.kind {
            ClosureKind::WellMixed => {
                minimal_elements(&self.gens).expect("generators share the arity")
            }
            ClosureKind::RadicalWellMixed => {
                let patterns: Vec<_> = self
                    .gens
                    .iter()
                    .map(|u| ExpVector::pattern(&u.deg_vector()))
                    .collect();
                prune_covered(self.kind, patterns)
            }
            ClosureKind::Perfect => {
                prune_covered(self.kind, self.gens.iter().map(support_monomial).collect())
            }
            kind => prune_covered(kind, self.gens.clone()),
        };
        IdealPresentation::new(self.arity, self.kind, gens).expect("reduction keeps arity")
    }

    /// Character vectors: degree vectors of the minimal generators.
    pub fn character_vectors(&self) -> Vec<CharVector> {
        let reduced = if self.kind == ClosureKind::RadicalWellMixed {
            self.reduce()
        } else {
            self.with_kind(ClosureKind::RadicalWellMixed).reduce()
        };
        reduced.gens.iter().map(ExpVector::deg_vector).collect()
    }

    /// `I + J`: union of generators under the common closure.
    pub fn sum(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.check_compatible(other)?;
        if self.unit || other.unit {
            return Ok(Self::unit(self.arity, self.kind));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(IdealPresentation::new(self.arity, self.kind, gens)?.reduce())
    }

    /// `I ∩ J` for radical well-mixed or perfect closures, using
    /// `⟨F⟩_r ∩ ⟨G⟩_r = ⟨FG⟩_r` and `{F} ∩ {G} = {FG}`: the generators of the
    /// intersection are the pairwise products.
    pub fn intersect(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.check_compatible(other)?;
        if !matches!(
            self.kind,
            ClosureKind::RadicalWellMixed | ClosureKind::Perfect
        ) {
            return Err(Error::KindMismatch {
                expected: "radical-well-mixed or perfect".into(),
                found: self.kind.to_string(),
            });
        }
        if self.unit {
            return Ok(other.reduce());
        }
        if other.unit {
            return Ok(self.reduce());
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for w in &other.gens {
                gens.push(u.checked_add(w)?);
            }
        }
        Ok(IdealPresentation::new(self.arity, self.kind, gens)?.reduce())
    }

    fn check_compatible(&self, other: &IdealPresentation) -> Result<()> {
        Error::check_arity(self.arity, other.arity)?;
        if self.kind != other.kind {
            return Err(Error::KindMismatch {
                expected: self.kind.to_string(),
                found: other.kind.to_string(),
            });
        }
        Ok(())
    }

    fn require_kind(&self, kind: ClosureKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected: kind.to_string(),
                found: self.kind.to_string(),
            })
        }
    }

    /// Δ-ideal generators of the closure, when it is finitely generated as a
    /// Δ-ideal by monomials we can name:
    ///
    /// * radical: `√[u] = [reduced(u)]` (coefficients set to 1);
    /// * reflexive: `[u]* = [x^{-k}u]` with `k` the lowest occupied degree;
    /// * perfect and radical well-mixed: the reduced generators, when each
    ///   involves a single variable (`{yᵢ^f} = [yᵢ]`, `⟨yᵢ^f⟩_r =
    ///   [yᵢ^{x^{deg f}}]`). With two variables or more no finite set works:
    ///   `{y₁y₂}` contains every `y₁^{x^i}y₂^{x^j}`, and a common shift
    ///   cannot reach them all;
    /// * well-mixed: `None`.
    pub fn closure_delta_generators(&self) -> Option<IdealPresentation> {
        let map: fn(&ExpVector) -> ExpVector = match self.kind {
            ClosureKind::Delta => ExpVector::clone,
            ClosureKind::Radical => radical_root,
            ClosureKind::Reflexive => reflexive_root,
            ClosureKind::WellMixed => return None,
            ClosureKind::Perfect | ClosureKind::RadicalWellMixed => {
                let reduced = self.reduce();
                let single_variable = reduced
                    .gens
                    .iter()
                    .all(|g| g.coords().iter().filter(|c| !c.is_zero()).count() == 1);
                if !single_variable {
                    return None;
                }
                return Some(reduced.with_kind(ClosureKind::Delta).reduce());
            }
        };
        if self.unit {
            return Some(Self::unit(self.arity, ClosureKind::Delta));
        }
        let gens = self.gens.iter().map(map).collect();
        Some(
            IdealPresentation::new(self.arity, ClosureKind::Delta, gens)
                .expect("closure generators keep arity")
                .reduce(),
        )
    }

    /// If `[gens]` is a prime monomial Δ-ideal `𝔪^b`, return `b`.
    ///
    /// Decided by three conditions: the radical well-mixed closure has a
    /// single component `b`; each `yᵢ^{x^{bᵢ}}` lies in `[gens]`; every
    /// generator lies in `𝔪^b`.
    pub fn is_prime(&self) -> Result<Option<CharVector>> {
        self.require_kind(ClosureKind::Delta)?;
        if self.unit {
            return Ok(None);
        }
        let closure = self.with_kind(ClosureKind::RadicalWellMixed);
        let decomposition = decompose::standard_prime_decomposition(&closure)?;
        let [b] = decomposition.components() else {
            return Ok(None);
        };
        for (i, &bi) in b.entries().iter().enumerate() {
            if bi < 0 {
                continue;
            }
            let g = ExpVector::single(self.arity, i, ExpPoly::x_pow(bi as usize));
            if !self.member(&g)? {
                return Ok(None);
            }
        }
        for u in &self.gens {
            if !decompose::component_member(u, b, decompose::Flavor::RwmPrime)? {
                return Ok(None);
            }
        }
        Ok(Some(b.clone()))
    }

    /// Whether the Δ-ideal `[gens]` is already closed under `property`.
    ///
    /// When [`closure_delta_generators`](Self::closure_delta_generators)
    /// names finitely many Δ-generators of the closure (always for radical
    /// and reflexive), the answer is exact: the first generator outside
    /// `[gens]` is the witness, otherwise `Yes`.
    ///
    /// Otherwise (perfect or radical well-mixed) membership in the closure
    /// depends only on the support pattern or the degree vector, and the
    /// pattern monomial `Y^{x^e}` is the coefficientwise smallest monomial
    /// with degree vector `e`. The search runs over pattern monomials with
    /// `eᵢ ≤ degree cap`, smallest first; an exhausted window gives
    /// `Inconclusive`.
    pub fn is_closed_under(
        &self,
        property: ClosureProperty,
        caps: &ClosureSearchCaps,
    ) -> Result<ClosureCheck> {
        self.require_kind(ClosureKind::Delta)?;
        if self.unit {
            return Ok(ClosureCheck::Yes);
        }
        let target = property.kind();
        let closure = self.with_kind(target);
        if let Some(gens) = closure.closure_delta_generators() {
            for g in gens.generators() {
                if !self.member(g)? {
                    return Ok(ClosureCheck::No(g.clone()));
                }
            }
            return Ok(ClosureCheck::Yes);
        }
        let degree_cap = caps
            .degree_cap
            .unwrap_or_else(|| 2 * self.max_degree().max(0) as usize + 2);
        let per_coord = degree_cap as u128 + 2;
        let window = per_coord
            .checked_pow(self.arity as u32)
            .unwrap_or(u128::MAX);
        if window > caps.max_candidates as u128 {
            return Ok(ClosureCheck::Inconclusive);
        }
        let mut candidates: Vec<ExpVector> = Vec::with_capacity(window as usize);
        let mut entries = vec![-1i64; self.arity];
        loop {
            let b = CharVector::new(entries.clone()).expect("entries >= -1");
            if !b.is_absent() {
                candidates.push(ExpVector::pattern(&b));
            }
            // odometer over {-1, …, degree_cap}ⁿ
            let mut pos = 0;
            loop {
                if pos == self.arity {
                    break;
                }
                if entries[pos] < degree_cap as i64 {
                    entries[pos] += 1;
                    break;
                }
                entries[pos] = -1;
                pos += 1;
            }
            if pos == self.arity {
                break;
            }
        }
        candidates.sort_by_cached_key(|v| {
            let size: i64 = v.deg_vector().entries().iter().map(|e| e + 1).sum();
            (size, v.clone())
        });
        for v in candidates {
            if closure.member(&v)? && !self.member(&v)? {
                return Ok(ClosureCheck::No(v));
            }
        }
        Ok(ClosureCheck::Inconclusive)
    }
}

/// Drop every generator lying in the `kind`-closure of another one. When two
/// generators cover each other the one earlier in canonical order survives.
fn prune_covered(kind: ClosureKind, mut gens: Vec<ExpVector>) -> Vec<ExpVector> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, u)| {
            !gens
                .iter()
                .enumerate()
                .any(|(j, w)| j != i && covers(kind, w, u) && (j < i || !covers(kind, u, w)))
        })
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// Closure properties a Δ-ideal can be tested for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureProperty {
    Radical,
    Reflexive,
    Perfect,
    RadicalWellMixed,
}

impl ClosureProperty {
    pub fn kind(self) -> ClosureKind {
        match self {
            ClosureProperty::Radical => ClosureKind::Radical,
            ClosureProperty::Reflexive => ClosureKind::Reflexive,
            ClosureProperty::Perfect => ClosureKind::Perfect,
            ClosureProperty::RadicalWellMixed => ClosureKind::RadicalWellMixed,
        }
    }
}

impl FromStr for ClosureProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<ClosureKind>()? {
            ClosureKind::Radical => Ok(ClosureProperty::Radical),
            ClosureKind::Reflexive => Ok(ClosureProperty::Reflexive),
            ClosureKind::Perfect => Ok(ClosureProperty::Perfect),
            ClosureKind::RadicalWellMixed => Ok(ClosureProperty::RadicalWellMixed),
            other => Err(Error::parse(
                0,
                format!("cannot check closure under '{other}'"),
            )),
        }
    }
}

impl fmt::Display for ClosureProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind().fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureCheck {
    Yes,
    /// A monomial in the closure but not in the ideal.
    No(ExpVector),
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSearchCaps {
    /// Largest exponent degree searched; defaults to `2·(max generator
    /// degree) + 2`.
    pub degree_cap: Option<usize>,
    pub max_candidates: usize,
}

impl Default for ClosureSearchCaps {
    fn default() -> Self {
        ClosureSearchCaps {
            degree_cap: None,
            max_candidates: 1_000_000,
        }
    }
}
