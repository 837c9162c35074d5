//! Prime decompositions.
//!
//! A radical well-mixed monomial Δ-ideal is a finite intersection of primes
//! `𝔪^b = [yᵢ^{x^{bᵢ}} : bᵢ ≠ -1]`, and a perfect one a finite intersection
//! of `𝔭^b = [yᵢ : bᵢ = 1]`. The irredundant decomposition is unique.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{ClosureKind, IdealPresentation};
use crate::monomials::{CharVector, ExpVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    /// Components `𝔪^b`, entries in `ℕ ∪ {-1}`.
    #[serde(rename = "rwm-prime")]
    RwmPrime,
    /// Components `𝔭^b`, entries in `{0, 1}`.
    #[serde(rename = "perfect-prime")]
    PerfectPrime,
}

impl Flavor {
    pub fn name(self) -> &'static str {
        match self {
            Flavor::RwmPrime => "rwm-prime",
            Flavor::PerfectPrime => "perfect-prime",
        }
    }

    pub fn kind(self) -> ClosureKind {
        match self {
            Flavor::RwmPrime => ClosureKind::RadicalWellMixed,
            Flavor::PerfectPrime => ClosureKind::Perfect,
        }
    }
}

/// Whether `Y^v` lies in the prime named by `b`.
pub fn component_member(v: &ExpVector, b: &CharVector, flavor: Flavor) -> Result<bool> {
    Error::check_arity(b.arity(), v.arity())?;
    Ok(match flavor {
        Flavor::RwmPrime => b
            .entries()
            .iter()
            .zip(v.coords())
            .any(|(&bi, vi)| bi >= 0 && vi.deg() >= bi),
        Flavor::PerfectPrime => b
            .entries()
            .iter()
            .zip(v.coords())
            .any(|(&bi, vi)| bi == 1 && !vi.is_zero()),
    })
}

/// Whether the prime named by `a` is contained in the prime named by `b`.
pub fn component_contains(a: &CharVector, b: &CharVector, flavor: Flavor) -> bool {
    let pairs = a.entries().iter().zip(b.entries());
    match flavor {
        Flavor::RwmPrime => pairs
            .filter(|(&ai, _)| ai >= 0)
            .all(|(&ai, &bi)| bi >= 0 && ai >= bi),
        Flavor::PerfectPrime => pairs.filter(|(&ai, _)| ai == 1).all(|(_, &bi)| bi == 1),
    }
}

/// Display order of components: entrywise, an absent entry after every
/// threshold.
fn component_order(a: &CharVector, b: &CharVector) -> Ordering {
    let key = |e: i64| if e < 0 { i64::MAX } else { e };
    a.entries()
        .iter()
        .map(|&e| key(e))
        .cmp(b.entries().iter().map(|&e| key(e)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    #[serde(skip)]
    arity: usize,
    flavor: Flavor,
    components: Vec<CharVector>,
}

impl Decomposition {
    /// Build from arbitrary components: deduplicates, drops components
    /// containing another and sorts.
    pub fn from_components(
        arity: usize,
        flavor: Flavor,
        components: Vec<CharVector>,
    ) -> Result<Decomposition> {
        for b in &components {
            Error::check_arity(arity, b.arity())?;
            if flavor == Flavor::PerfectPrime && b.entries().iter().any(|&e| e != 0 && e != 1) {
                return Err(Error::Precondition(format!(
                    "perfect-prime component {b} has entries outside {{0, 1}}"
                )));
            }
        }
        Ok(Decomposition {
            arity,
            flavor,
            components: irredundant(components, flavor),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn components(&self) -> &[CharVector] {
        &self.components
    }

    /// Membership in the intersection of the components.
    pub fn member(&self, v: &ExpVector) -> Result<bool> {
        Error::check_arity(self.arity, v.arity())?;
        for b in &self.components {
            if !component_member(v, b, self.flavor)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether some component contains another.
    pub fn is_irredundant(&self) -> bool {
        self.components.iter().enumerate().all(|(i, a)| {
            self.components
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !component_contains(a, b, self.flavor))
        })
    }
}

fn irredundant(mut components: Vec<CharVector>, flavor: Flavor) -> Vec<CharVector> {
    components.sort_by(component_order);
    components.dedup();
    let keep: Vec<bool> = components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !components
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && component_contains(d, c, flavor))
        })
        .collect();
    components
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// The irredundant decomposition of a radical well-mixed ideal into primes
/// `𝔪^b`.
///
/// Every choice of one occupied coordinate per minimal character vector
/// gives a component whose thresholds are the smallest chosen degrees; the
/// minimal ones form the decomposition. The search skips character vectors
/// already lying in the partial component and abandons partial components
/// that contain one already found.
pub fn standard_prime_decomposition(ideal: &IdealPresentation) -> Result<Decomposition> {
    if ideal.kind() != ClosureKind::RadicalWellMixed {
        return Err(Error::KindMismatch {
            expected: ClosureKind::RadicalWellMixed.to_string(),
            found: ideal.kind().to_string(),
        });
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.arity();
    let chars = ideal.character_vectors();
    // fewest occupied coordinates first keeps the branching low early on
    let mut order: Vec<&CharVector> = chars.iter().collect();
    order.sort_by_key(|u| {
        (
            u.entries().iter().filter(|&&e| e >= 0).count(),
            (*u).clone(),
        )
    });
    let mut found = Vec::new();
    let mut partial = CharVector::absent(n);
    choose(&order, &mut partial, &mut found);
    Decomposition::from_components(n, Flavor::RwmPrime, found)
}

fn choose(rest: &[&CharVector], partial: &mut CharVector, found: &mut Vec<CharVector>) {
    if found
        .iter()
        .any(|e| component_contains(e, partial, Flavor::RwmPrime))
    {
        return;
    }
    let Some((u, rest)) = rest.split_first() else {
        found.push(partial.clone());
        return;
    };
    let covered = u
        .entries()
        .iter()
        .zip(partial.entries())
        .any(|(&ui, &bi)| ui >= 0 && bi >= 0 && ui >= bi);
    if covered {
        choose(rest, partial, found);
        return;
    }
    for (i, &ui) in u.entries().iter().enumerate() {
        if ui < 0 {
            continue;
        }
        let old = partial.get(i);
        let new = if old < 0 { ui } else { old.min(ui) };
        partial.set(i, new);
        choose(rest, partial, found);
        partial.set(i, old);
    }
}

/// Minimal hitting sets of a hypergraph on vertices `0..n`, each sorted;
/// the list is sorted too. No edges gives the empty set alone; an empty edge
/// gives no hitting set.
pub fn minimal_transversals(edges: &[BTreeSet<usize>]) -> Vec<BTreeSet<usize>> {
    let mut current: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for edge in edges {
        let mut next = Vec::new();
        for t in &current {
            if !t.is_disjoint(edge) {
                next.push(t.clone());
                continue;
            }
            for &v in edge {
                let mut grown = t.clone();
                grown.insert(v);
                next.push(grown);
            }
        }
        next.sort();
        next.dedup();
        let minimal: Vec<BTreeSet<usize>> = next
            .iter()
            .filter(|t| !next.iter().any(|s| s != *t && s.is_subset(t)))
            .cloned()
            .collect();
        current = minimal;
    }
    current.sort();
    current
}

/// The irredundant decomposition of a perfect ideal into primes `𝔭^b`: the
/// minimal transversals of the support patterns of the generators.
pub fn perfect_prime_decomposition(ideal: &IdealPresentation) -> Result<Decomposition> {
    if ideal.kind() != ClosureKind::Perfect {
        return Err(Error::KindMismatch {
            expected: ClosureKind::Perfect.to_string(),
            found: ideal.kind().to_string(),
        });
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.arity();
    let edges: Vec<BTreeSet<usize>> = ideal
        .reduce()
        .generators()
        .iter()
        .map(|u| {
            u.coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let components = minimal_transversals(&edges)
        .into_iter()
        .map(|h| {
            let entries = (0..n).map(|i| i64::from(h.contains(&i))).collect();
            CharVector::new(entries).expect("0/1 entries")
        })
        .collect();
    Decomposition::from_components(n, Flavor::PerfectPrime, components)
}

/// The decomposition matching the closure of `ideal`.
pub fn decompose(ideal: &IdealPresentation) -> Result<Decomposition> {
    match ideal.kind() {
        ClosureKind::RadicalWellMixed => standard_prime_decomposition(ideal),
        ClosureKind::Perfect => perfect_prime_decomposition(ideal),
        other => Err(Error::KindMismatch {
            expected: "radical-well-mixed or perfect".into(),
            found: other.to_string(),
        }),
    }
}

/// Generators of the intersection of the components.
///
/// Each prime is generated by single-variable pattern monomials, and the
/// intersection of closures is the closure of pairwise products, so the
/// result is an iterated product followed by reduction. No components gives
/// the unit ideal.
pub fn components_to_generators(d: &Decomposition) -> IdealPresentation {
    let kind = d.flavor.kind();
    let n = d.arity;
    let mut acc = IdealPresentation::unit(n, kind);
    for b in &d.components {
        let gens = b
            .entries()
            .iter()
            .enumerate()
            .filter_map(|(i, &bi)| match d.flavor {
                Flavor::RwmPrime if bi >= 0 => {
                    let mut e = CharVector::absent(n);
                    e.set(i, bi);
                    Some(ExpVector::pattern(&e))
                }
                Flavor::PerfectPrime if bi == 1 => {
                    let mut e = CharVector::absent(n);
                    e.set(i, 0);
                    Some(ExpVector::pattern(&e))
                }
                _ => None,
            })
            .collect();
        let prime = IdealPresentation::new(n, kind, gens).expect("component arity");
        acc = acc
            .intersect(&prime)
            .expect("pattern monomial products stay small");
    }
    acc.reduce()
}
