//! Symbolic exponents: the semiring ℕ[x].
//!
//! An [`ExpPoly`] `p = Σ cᵢ xⁱ` acts on an element `a` of a difference ring as
//! `a^p = Π σⁱ(a)^cᵢ`, so exponents add under multiplication of powers and
//! `x·p` corresponds to applying σ once. Two orders live here: the total order
//! [`Ord`] (compare coefficients from the top degree down) and the partial
//! order [`ExpPoly::precedes`] (all suffix sums dominated).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An element of ℕ[x] in canonical form (no trailing zero coefficients).
///
/// `coeffs[i]` is the coefficient of `xⁱ`; the zero polynomial has no
/// coefficients. Coefficients are `u64`; every arithmetic operation that can
/// grow them is checked and reports [`Error::Overflow`] instead of wrapping.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExpPoly {
    coeffs: Vec<u64>,
}

impl ExpPoly {
    pub fn zero() -> Self {
        ExpPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: u64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·x^d`
    pub fn term(c: u64, d: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        ExpPoly { coeffs }
    }

    /// `x^d`
    pub fn x_pow(d: usize) -> Self {
        Self::term(1, d)
    }

    pub fn from_coeffs(coeffs: impl Into<Vec<u64>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ExpPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `xⁱ` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg(0) = -1`.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// `|f|`, the sum of all coefficients.
    pub fn weight(&self) -> u128 {
        self.coeffs.iter().map(|&c| c as u128).sum()
    }

    /// Largest coefficient (zero for the zero polynomial).
    pub fn max_coeff(&self) -> u64 {
        self.coeffs.iter().copied().max().unwrap_or(0)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Degrees with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }

    pub fn checked_add(&self, other: &ExpPoly) -> Result<ExpPoly> {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.checked_add(d).ok_or(Error::Overflow)?;
        }
        Ok(ExpPoly { coeffs })
    }

    /// `xⁱ·f`.
    pub fn shift(&self, i: usize) -> ExpPoly {
        if self.is_zero() || i == 0 {
            return self.clone();
        }
        let mut coeffs = vec![0; i];
        coeffs.extend_from_slice(&self.coeffs);
        ExpPoly { coeffs }
    }

    /// `x^{-k}·f` when every coefficient below degree `k` vanishes.
    pub fn unshift(&self, k: usize) -> Option<ExpPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.coeffs.iter().take(k).any(|&c| c != 0) {
            return None;
        }
        Some(ExpPoly {
            coeffs: self.coeffs.get(k..).unwrap_or(&[]).to_vec(),
        })
    }

    /// `m·f`.
    pub fn checked_scale(&self, m: u64) -> Result<ExpPoly> {
        if m == 0 {
            return Ok(ExpPoly::zero());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(m).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpPoly { coeffs })
    }

    /// `f·g` in ℕ[x].
    pub fn checked_mul(&self, other: &ExpPoly) -> Result<ExpPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(ExpPoly::zero());
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(prod).ok_or(Error::Overflow)?;
            }
        }
        Ok(ExpPoly::from_coeffs(coeffs))
    }

    /// Coefficientwise `≤`, i.e. `other - self ∈ ℕ[x]`.
    pub fn le_coeffwise(&self, other: &ExpPoly) -> bool {
        self.coeffs.len() <= other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }

    /// Coefficientwise difference `self - other`, if it stays in ℕ[x].
    pub fn checked_sub(&self, other: &ExpPoly) -> Option<ExpPoly> {
        if !other.le_coeffwise(self) {
            return None;
        }
        let mut coeffs = self.coeffs.clone();
        for (c, &d) in coeffs.iter_mut().zip(&other.coeffs) {
            *c -= d;
        }
        Some(ExpPoly::from_coeffs(coeffs))
    }

    /// `Σ_{j≥i} f_j` for `i = 0..len`.
    pub fn suffix_sums(&self) -> Vec<u128> {
        let mut sums = vec![0u128; self.coeffs.len()];
        let mut acc = 0u128;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            acc += c as u128;
            sums[i] = acc;
        }
        sums
    }

    /// The partial order `f ⪯ g`: every suffix sum of `f` is at most the
    /// corresponding suffix sum of `g`.
    pub fn precedes(&self, other: &ExpPoly) -> bool {
        if self.coeffs.len() > other.coeffs.len() {
            // f has a nonzero top coefficient where g's suffix sum is zero
            return false;
        }
        let mut f_acc = 0u128;
        let mut g_acc = 0u128;
        for i in (0..other.coeffs.len()).rev() {
            f_acc += self.coeff(i) as u128;
            g_acc += other.coeffs[i] as u128;
            if f_acc > g_acc {
                return false;
            }
        }
        true
    }

    /// Every ordered pair `(p, q)` with `p + q = self`.
    ///
    /// There are `Π (cᵢ + 1)` of them; callers bound the count first via
    /// [`ExpPoly::split_count`].
    pub fn splits(&self) -> Vec<(ExpPoly, ExpPoly)> {
        let mut out = vec![(Vec::new(), Vec::new())];
        for &c in &self.coeffs {
            let mut next = Vec::with_capacity(out.len() * (c as usize + 1));
            for (p, q) in &out {
                for k in 0..=c {
                    let mut p: Vec<u64> = p.clone();
                    let mut q: Vec<u64> = q.clone();
                    p.push(k);
                    q.push(c - k);
                    next.push((p, q));
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|(p, q)| (ExpPoly::from_coeffs(p), ExpPoly::from_coeffs(q)))
            .collect()
    }

    /// `Π (cᵢ + 1)`, saturating.
    pub fn split_count(&self) -> u128 {
        self.coeffs
            .iter()
            .fold(1u128, |acc, &c| acc.saturating_mul(c as u128 + 1))
    }
}

impl Ord for ExpPoly {
    /// Compare coefficient vectors from the highest degree down.
    fn cmp(&self, other: &Self) -> Ordering {
        // canonical form: a longer vector has a nonzero coefficient where the
        // shorter one is zero
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for ExpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for ExpPoly {
    fn from(c: u64) -> Self {
        ExpPoly::constant(c)
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (c, i) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, i) => write!(f, "x^{i}")?,
                (c, 1) => write!(f, "{c}*x")?,
                (c, i) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[u64]) -> ExpPoly {
        ExpPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn canonical_form_trims() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(ExpPoly::zero().deg(), -1);
        assert_eq!(ExpPoly::zero().weight(), 0);
        assert_eq!(p(&[3, 0, 2]).deg(), 2);
        assert_eq!(p(&[3, 0, 2]).weight(), 5);
    }

    #[test]
    fn add_examples() {
        let f = p(&[1, 1]);
        assert_eq!(ExpPoly::zero().checked_add(&f).unwrap(), f);
        assert_eq!(f.checked_add(&f).unwrap(), p(&[2, 2]));
        assert_eq!(
            p(&[0, 0, 1]).checked_add(&p(&[3, 2])).unwrap(),
            p(&[3, 2, 1])
        );
    }

    #[test]
    fn shift_examples() {
        assert_eq!(ExpPoly::zero().shift(5), ExpPoly::zero());
        assert_eq!(p(&[1, 1]).shift(1), p(&[0, 1, 1]));
        assert_eq!(p(&[2]).shift(3), ExpPoly::term(2, 3));
        assert_eq!(p(&[0, 1, 1]).unshift(1), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1]).unshift(1), None);
    }

    #[test]
    fn scale_and_mul_examples() {
        let f = p(&[4, 0, 7]);
        assert_eq!(f.checked_scale(1).unwrap(), f);
        assert_eq!(p(&[1, 1]).checked_scale(2).unwrap(), p(&[2, 2]));
        assert_eq!(ExpPoly::zero().checked_scale(3).unwrap(), ExpPoly::zero());
        assert_eq!(ExpPoly::one().checked_mul(&f).unwrap(), f);
        assert_eq!(p(&[1, 1]).checked_mul(&p(&[1, 1])).unwrap(), p(&[1, 2, 1]));
        assert_eq!(p(&[2]).checked_mul(&p(&[0, 1])).unwrap(), p(&[0, 2]));
    }

    #[test]
    fn overflow_is_reported() {
        let big = p(&[u64::MAX]);
        assert_eq!(big.checked_add(&p(&[1])), Err(Error::Overflow));
        assert_eq!(big.checked_scale(2), Err(Error::Overflow));
        assert_eq!(big.checked_mul(&p(&[2])), Err(Error::Overflow));
        assert_eq!(
            p(&[u64::MAX, u64::MAX]).checked_mul(&p(&[1, 1])),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn total_order_examples() {
        let f = p(&[3, 2]);
        assert_eq!(f.cmp(&f), Ordering::Equal);
        assert_eq!(p(&[3, 2]).cmp(&p(&[0, 0, 1])), Ordering::Less);
        assert_eq!(p(&[2]).cmp(&p(&[0, 1])), Ordering::Less);
        assert_eq!(ExpPoly::zero().cmp(&p(&[1])), Ordering::Less);
    }

    #[test]
    fn precedes_examples() {
        assert!(p(&[2]).precedes(&p(&[1, 1])));
        assert!(!p(&[2]).precedes(&p(&[0, 1])));
        assert!(!p(&[0, 1]).precedes(&p(&[2])));
        assert!(p(&[2]).precedes(&p(&[0, 2])));
        assert!(ExpPoly::zero().precedes(&ExpPoly::zero()));
        assert!(ExpPoly::zero().precedes(&p(&[0, 1])));
        assert!(!p(&[1]).precedes(&ExpPoly::zero()));
    }

    #[test]
    fn splits_enumerate_every_pair() {
        assert_eq!(
            ExpPoly::zero().splits(),
            vec![(ExpPoly::zero(), ExpPoly::zero())]
        );
        assert_eq!(p(&[1, 1]).splits().len(), 4);
        let mut s = p(&[2]).splits();
        s.sort();
        assert_eq!(
            s,
            vec![(p(&[0]), p(&[2])), (p(&[1]), p(&[1])), (p(&[2]), p(&[0]))]
        );
        assert_eq!(p(&[2, 0, 1]).split_count(), 6);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[3, 2, 1]).to_string(), "x^2+2*x+3");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(ExpPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 0, 0, 5]).to_string(), "5*x^3");
    }
}
