//! Δ-monomials `Y^u = y₁^{u₁}⋯yₙ^{uₙ}` as exponent vectors in ℕ[x]ⁿ.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exponents::ExpPoly;

/// An exponent vector `u ∈ ℕ[x]ⁿ`; the all-zero vector is the monomial 1.
///
/// The derived ordering is lexicographic over coordinates, each compared with
/// the total order on [`ExpPoly`]. All emitted sets are sorted by it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVector {
    coords: Vec<ExpPoly>,
}

/// A vector in `(ℕ ∪ {-1})ⁿ`.
///
/// Names a prime component `𝔪^b = [yᵢ^{x^{bᵢ}} | bᵢ ≠ -1]`, a character
/// vector `Π yᵢ^{x^{bᵢ}}` (with `x^{-1} = 0`), or a degree vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharVector {
    entries: Vec<i64>,
}

impl ExpVector {
    pub fn new(coords: Vec<ExpPoly>) -> Self {
        ExpVector { coords }
    }

    pub fn zero(arity: usize) -> Self {
        ExpVector {
            coords: vec![ExpPoly::zero(); arity],
        }
    }

    /// `yᵢ^p` in arity `n` (0-based `i`).
    pub fn single(arity: usize, i: usize, p: ExpPoly) -> Self {
        let mut v = Self::zero(arity);
        v.coords[i] = p;
        v
    }

    /// The pattern monomial `Y^{x^b} = Π yᵢ^{x^{bᵢ}}`, with `x^{-1} = 0`.
    pub fn pattern(b: &CharVector) -> Self {
        ExpVector {
            coords: b
                .entries()
                .iter()
                .map(|&e| {
                    if e < 0 {
                        ExpPoly::zero()
                    } else {
                        ExpPoly::x_pow(e as usize)
                    }
                })
                .collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[ExpPoly] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &ExpPoly {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<ExpPoly> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(ExpPoly::is_zero)
    }

    /// Largest coordinate degree, `-1` for the zero vector.
    pub fn max_degree(&self) -> i64 {
        self.coords.iter().map(ExpPoly::deg).max().unwrap_or(-1)
    }

    pub fn max_coeff(&self) -> u64 {
        self.coords
            .iter()
            .map(ExpPoly::max_coeff)
            .max()
            .unwrap_or(0)
    }

    /// Largest coordinate weight `|uⱼ|`.
    pub fn max_weight(&self) -> u128 {
        self.coords.iter().map(ExpPoly::weight).max().unwrap_or(0)
    }

    /// Lowest degree carrying a nonzero coefficient in any coordinate.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coords.iter().filter_map(ExpPoly::lowest_degree).min()
    }

    pub fn checked_add(&self, other: &ExpVector) -> Result<ExpVector> {
        Error::check_arity(self.arity(), other.arity())?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpVector { coords })
    }

    /// `xⁱ·u`, i.e. `σⁱ` applied to the monomial.
    pub fn shift(&self, i: usize) -> ExpVector {
        ExpVector {
            coords: self.coords.iter().map(|c| c.shift(i)).collect(),
        }
    }

    /// `x^{-k}·u` when every coordinate is divisible by `x^k`.
    pub fn unshift(&self, k: usize) -> Option<ExpVector> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.unshift(k))
            .collect::<Option<Vec<_>>>()?;
        Some(ExpVector { coords })
    }

    pub fn checked_scale(&self, m: u64) -> Result<ExpVector> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.checked_scale(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpVector { coords })
    }

    /// `g·u` for a symbolic exponent `g`.
    pub fn checked_mul_poly(&self, g: &ExpPoly) -> Result<ExpVector> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.checked_mul(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpVector { coords })
    }

    /// Coefficientwise `≤` in every coordinate.
    pub fn le_coeffwise(&self, other: &ExpVector) -> Result<bool> {
        Error::check_arity(self.arity(), other.arity())?;
        Ok(self.le_unchecked(other))
    }

    pub(crate) fn le_unchecked(&self, other: &ExpVector) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a.le_coeffwise(b))
    }

    /// Componentwise `⪯`.
    pub fn precedes(&self, other: &ExpVector) -> Result<bool> {
        Error::check_arity(self.arity(), other.arity())?;
        Ok(self.precedes_unchecked(other))
    }

    pub(crate) fn precedes_unchecked(&self, other: &ExpVector) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a.precedes(b))
    }

    /// Least `i ≥ 0` with `xⁱ·self ≤ other` coefficientwise, i.e. whether
    /// `Y^other ∈ [Y^self]` and with which shift.
    pub fn divides_shifted(&self, other: &ExpVector) -> Result<Option<usize>> {
        Error::check_arity(self.arity(), other.arity())?;
        Ok(self.divides_shifted_unchecked(other))
    }

    pub(crate) fn divides_shifted_unchecked(&self, other: &ExpVector) -> Option<usize> {
        let bound = self.shift_bound(other)?;
        (0..=bound).find(|&i| {
            self.coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| shifted_le(a, i, b))
        })
    }

    /// Largest shift `i` for which `xⁱ·self` can still fit under `other`
    /// degreewise: `min_j (deg otherⱼ - deg selfⱼ)` over nonzero `selfⱼ`.
    /// `None` when some nonzero coordinate of `self` meets a zero one.
    pub(crate) fn shift_bound(&self, other: &ExpVector) -> Option<usize> {
        let mut bound: Option<usize> = None;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            let Some(da) = a.degree() else { continue };
            let db = b.degree()?;
            let room = db.checked_sub(da)?;
            bound = Some(bound.map_or(room, |r| r.min(room)));
        }
        // a zero vector fits at shift 0
        Some(bound.unwrap_or(0))
    }

    /// `(deg u₁, …, deg uₙ)` with `deg 0 = -1`.
    pub fn deg_vector(&self) -> CharVector {
        CharVector {
            entries: self.coords.iter().map(ExpPoly::deg).collect(),
        }
    }

    /// 1 where the coordinate is nonzero, 0 elsewhere.
    pub fn support_pattern(&self) -> CharVector {
        CharVector {
            entries: self
                .coords
                .iter()
                .map(|c| i64::from(!c.is_zero()))
                .collect(),
        }
    }

    /// Number of pairs returned by [`ExpVector::splits`], saturating.
    pub fn split_count(&self) -> u128 {
        self.coords
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.split_count()))
    }

    /// All ordered pairs `(p, q)` with `p + q = self`, or
    /// [`Error::CapExceeded`] when there are more than `cap` of them.
    pub fn splits(&self, cap: usize) -> Result<Vec<(ExpVector, ExpVector)>> {
        let count = self.split_count();
        if count > cap as u128 {
            return Err(Error::CapExceeded(format!(
                "{count} splits of {self} exceed the cap of {cap}"
            )));
        }
        let mut out = vec![(Vec::new(), Vec::new())];
        for c in &self.coords {
            let local = c.splits();
            let mut next = Vec::with_capacity(out.len() * local.len());
            for (p, q) in &out {
                for (lp, lq) in &local {
                    let mut p: Vec<ExpPoly> = p.clone();
                    let mut q: Vec<ExpPoly> = q.clone();
                    p.push(lp.clone());
                    q.push(lq.clone());
                    next.push((p, q));
                }
            }
            out = next;
        }
        Ok(out
            .into_iter()
            .map(|(p, q)| (ExpVector::new(p), ExpVector::new(q)))
            .collect())
    }
}

/// `xⁱ·a ≤ b` coefficientwise, without allocating the shifted polynomial.
fn shifted_le(a: &ExpPoly, i: usize, b: &ExpPoly) -> bool {
    if a.is_zero() {
        return true;
    }
    if a.coeffs().len() + i > b.coeffs().len() {
        return false;
    }
    a.coeffs()
        .iter()
        .enumerate()
        .all(|(k, &c)| c <= b.coeffs()[k + i])
}

/// The `⪯`-minimal elements of `set`, deduplicated and sorted.
///
/// Quadratic pairwise scan; the output is an antichain and every input
/// element dominates some output element.
pub fn minimal_elements(set: &[ExpVector]) -> Result<Vec<ExpVector>> {
    if let Some(first) = set.first() {
        for v in set {
            Error::check_arity(first.arity(), v.arity())?;
        }
    }
    let mut items = set.to_vec();
    items.sort();
    items.dedup();
    let minimal = items
        .iter()
        .filter(|v| !items.iter().any(|w| w != *v && w.precedes_unchecked(v)))
        .cloned()
        .collect();
    Ok(minimal)
}

impl CharVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e < -1) {
            return Err(Error::InvalidCharEntry(bad));
        }
        Ok(CharVector { entries })
    }

    /// All entries `-1`.
    pub fn absent(arity: usize) -> Self {
        CharVector {
            entries: vec![-1; arity],
        }
    }

    pub fn arity(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    pub(crate) fn set(&mut self, i: usize, value: i64) {
        debug_assert!(value >= -1);
        self.entries[i] = value;
    }

    /// Entrywise `≤` (`-1` is below everything).
    pub fn le(&self, other: &CharVector) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Entrywise maximum.
    pub fn join(&self, other: &CharVector) -> CharVector {
        CharVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// True when every entry is `-1`.
    pub fn is_absent(&self) -> bool {
        self.entries.iter().all(|&e| e == -1)
    }
}

impl fmt::Display for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::render_monomial(self))
    }
}

impl fmt::Debug for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpVector({self})")
    }
}

impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharVector{self}")
    }
}

impl Serialize for CharVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl Serialize for ExpVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&crate::text::render_monomial(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[u64]) -> ExpPoly {
        ExpPoly::from_coeffs(coeffs.to_vec())
    }

    fn v(coords: &[&[u64]]) -> ExpVector {
        ExpVector::new(coords.iter().map(|c| p(c)).collect())
    }

    fn cv(entries: &[i64]) -> CharVector {
        CharVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn precedes_vec_examples() {
        assert!(v(&[&[2], &[]]).precedes(&v(&[&[1, 1], &[]])).unwrap());
        let u = v(&[&[1, 2], &[0, 0, 1]]);
        assert!(u.precedes(&u).unwrap());
        assert!(!v(&[&[2], &[]]).precedes(&v(&[&[0, 1], &[1]])).unwrap());
        assert!(matches!(
            v(&[&[2]]).precedes(&v(&[&[2], &[]])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn divides_shifted_examples() {
        let u = v(&[&[1, 2], &[3]]);
        assert_eq!(u.divides_shifted(&u).unwrap(), Some(0));
        assert_eq!(
            v(&[&[1, 1]]).divides_shifted(&v(&[&[0, 1, 1]])).unwrap(),
            Some(1)
        );
        assert_eq!(
            v(&[&[2], &[]])
                .divides_shifted(&v(&[&[1, 1], &[]]))
                .unwrap(),
            None
        );
        // a zero coordinate of the target blocks a nonzero generator coordinate
        assert_eq!(
            v(&[&[1], &[1]]).divides_shifted(&v(&[&[5], &[]])).unwrap(),
            None
        );
        // shift chosen by the least fitting i
        assert_eq!(
            v(&[&[1]]).divides_shifted(&v(&[&[0, 0, 1, 1]])).unwrap(),
            Some(2)
        );
        assert_eq!(
            ExpVector::zero(2).divides_shifted(&v(&[&[], &[]])).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn deg_vector_and_pattern() {
        assert_eq!(ExpVector::zero(2).deg_vector(), cv(&[-1, -1]));
        assert_eq!(v(&[&[2], &[0, 0, 1]]).deg_vector(), cv(&[0, 2]));
        assert_eq!(v(&[&[1, 1], &[]]).deg_vector(), cv(&[1, -1]));
        assert_eq!(ExpVector::zero(2).support_pattern(), cv(&[0, 0]));
        assert_eq!(v(&[&[1, 0, 1], &[]]).support_pattern(), cv(&[1, 0]));
        assert_eq!(v(&[&[2], &[0, 1]]).support_pattern(), cv(&[1, 1]));
        assert_eq!(
            ExpVector::pattern(&cv(&[2, -1, 0])),
            v(&[&[0, 0, 1], &[], &[1]])
        );
    }

    #[test]
    fn minimal_elements_examples() {
        let u = v(&[&[1, 1]]);
        assert_eq!(minimal_elements(std::slice::from_ref(&u)).unwrap(), vec![u]);
        let set = [v(&[&[2]]), v(&[&[1, 1]]), v(&[&[0, 2]])];
        assert_eq!(minimal_elements(&set).unwrap(), vec![v(&[&[2]])]);
        let set = [v(&[&[2], &[]]), v(&[&[], &[2]]), v(&[&[1, 1], &[]])];
        assert_eq!(
            minimal_elements(&set).unwrap(),
            vec![v(&[&[], &[2]]), v(&[&[2], &[]])]
        );
        assert!(minimal_elements(&[]).unwrap().is_empty());
    }

    #[test]
    fn splits_examples() {
        assert_eq!(
            ExpVector::zero(1).splits(10).unwrap(),
            vec![(ExpVector::zero(1), ExpVector::zero(1))]
        );
        assert_eq!(v(&[&[1, 1]]).splits(10).unwrap().len(), 4);
        let mut s = v(&[&[2]]).splits(10).unwrap();
        s.sort();
        assert_eq!(
            s,
            vec![
                (v(&[&[]]), v(&[&[2]])),
                (v(&[&[1]]), v(&[&[1]])),
                (v(&[&[2]]), v(&[&[]]))
            ]
        );
        assert!(matches!(
            v(&[&[3, 3]]).splits(15),
            Err(Error::CapExceeded(_))
        ));
        assert_eq!(v(&[&[3, 3]]).splits(16).unwrap().len(), 16);
    }

    #[test]
    fn char_vector_validation() {
        assert!(CharVector::new(vec![-1, 0, 4]).is_ok());
        assert_eq!(
            CharVector::new(vec![0, -2]),
            Err(Error::InvalidCharEntry(-2))
        );
        assert!(cv(&[-1, 0]).le(&cv(&[0, 0])));
        assert!(!cv(&[1, 0]).le(&cv(&[0, 0])));
    }
}
