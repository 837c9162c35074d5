//! Brute-force deciders for closure membership.
//!
//! Nothing here calls the fast criteria of [`crate::ideals`]; the deciders
//! work from the closure rules themselves (moves for the well-mixed closure,
//! scaled/shifted/multiplied searches for the others) so that the two can be
//! compared.
//!
//! Every well-mixed move is ⪯-monotone, so any derivation of `v` runs inside
//! a ⪯-down-closed set containing `v`. The deciders search such sets: the
//! down-set of `v` itself, or a box `{deg ≤ D, |f| ≤ C}` per coordinate.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::decompose::Decomposition;
use crate::error::{Error, Result};
use crate::exponents::ExpPoly;
use crate::ideals::{ClosureKind, IdealPresentation};
use crate::monomials::ExpVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleCaps {
    pub max_degree: usize,
    pub max_coeff_sum: u64,
    pub max_states: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_degree: 3,
            max_coeff_sum: 6,
            max_states: 1_000_000,
        }
    }
}

impl OracleCaps {
    fn check(&self) -> Result<()> {
        if self.max_degree == 0 || self.max_coeff_sum == 0 || self.max_states == 0 {
            return Err(Error::Precondition("oracle caps must be positive".into()));
        }
        Ok(())
    }

    fn admits(&self, v: &ExpVector) -> Result<()> {
        self.check()?;
        let fits = v
            .coords()
            .iter()
            .all(|c| c.deg() <= self.max_degree as i64 && c.weight() <= self.max_coeff_sum as u128);
        if fits {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "{v} lies outside the oracle caps (degree {}, coefficient sum {})",
                self.max_degree, self.max_coeff_sum
            )))
        }
    }
}

/// Outcome of a bounded search. A `FalseAtCaps` verdict means the search
/// found nothing but its bounds do not cover every possible witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NotMember,
    FalseAtCaps,
}

impl Verdict {
    pub fn is_member(self) -> bool {
        self == Verdict::Member
    }
}

/// A ⪯-down-closed set of exponents with the single-coordinate well-mixed
/// moves between its elements.
#[derive(Debug, Clone)]
struct PolySpace {
    elems: Vec<ExpPoly>,
    index: HashMap<ExpPoly, usize>,
    succ: Vec<Vec<usize>>,
}

impl PolySpace {
    /// `{f : f ⪯ g}`, built top degree first from the suffix sums of `g`.
    fn down_set(g: &ExpPoly) -> Self {
        let sums = g.suffix_sums();
        let mut out = Vec::new();
        let mut coeffs = vec![0u64; sums.len()];
        fn fill(i: usize, acc: u128, sums: &[u128], coeffs: &mut Vec<u64>, out: &mut Vec<ExpPoly>) {
            if i == 0 {
                out.push(ExpPoly::from_coeffs(coeffs.clone()));
                return;
            }
            let d = i - 1;
            for c in 0..=(sums[d] - acc) {
                coeffs[d] = c as u64;
                fill(d, acc + c, sums, coeffs, out);
            }
            coeffs[d] = 0;
        }
        fill(sums.len(), 0, &sums, &mut coeffs, &mut out);
        Self::from_elems(out)
    }

    /// `{f : deg f ≤ max_degree, |f| ≤ max_weight}`.
    fn boxed(max_degree: usize, max_weight: u64) -> Self {
        Self::from_elems(box_polys(max_degree, max_weight))
    }

    fn from_elems(mut elems: Vec<ExpPoly>) -> Self {
        elems.sort();
        elems.dedup();
        let index: HashMap<ExpPoly, usize> = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        let top = elems.iter().map(ExpPoly::deg).max().unwrap_or(-1);
        let succ = elems
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let mut next = Vec::new();
                // add a unit term
                for d in 0..=top.max(0) as usize {
                    let g = f
                        .checked_add(&ExpPoly::x_pow(d))
                        .expect("small coefficients");
                    if let Some(&j) = index.get(&g) {
                        next.push(j);
                    }
                }
                // p + q ↦ p + x·q; q = f is the shift
                for (p, q) in f.splits() {
                    let g = p.checked_add(&q.shift(1)).expect("small coefficients");
                    if let Some(&j) = index.get(&g) {
                        if j != i {
                            next.push(j);
                        }
                    }
                }
                next.sort_unstable();
                next.dedup();
                next
            })
            .collect();
        PolySpace { elems, index, succ }
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    /// Everything reachable from `seed` by moves.
    fn reach(&self, seed: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([seed]);
        seen[seed] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &self.succ[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen
    }
}

/// All `f` with `deg f ≤ max_degree` and `|f| ≤ max_weight`, sorted.
pub fn box_polys(max_degree: usize, max_weight: u64) -> Vec<ExpPoly> {
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; max_degree + 1];
    fn fill(i: usize, left: u64, coeffs: &mut Vec<u64>, out: &mut Vec<ExpPoly>) {
        if i == coeffs.len() {
            out.push(ExpPoly::from_coeffs(coeffs.clone()));
            return;
        }
        for c in 0..=left {
            coeffs[i] = c;
            fill(i + 1, left - c, coeffs, out);
        }
        coeffs[i] = 0;
    }
    fill(0, max_weight, &mut coeffs, &mut out);
    out.sort();
    out
}

/// Every vector of arity `n` whose coordinates lie in the box, in canonical
/// order.
pub fn grid_vectors(arity: usize, max_degree: usize, max_coeff_sum: u64) -> Vec<ExpVector> {
    let polys = box_polys(max_degree, max_coeff_sum);
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * polys.len());
        for prefix in &out {
            for p in &polys {
                let mut v: Vec<ExpPoly> = prefix.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out = next;
    }
    let mut out: Vec<ExpVector> = out.into_iter().map(ExpVector::new).collect();
    out.sort();
    out
}

/// Vector states as a dense mixed-radix product of per-coordinate spaces.
///
/// A vector move (add a term, shift, split) changes coordinates
/// independently, and applying it one coordinate at a time passes through
/// vectors that are ⪯ the result, so single-coordinate moves generate the
/// same closure inside any down-closed product.
struct ProductSpace {
    spaces: Vec<PolySpace>,
    strides: Vec<usize>,
    total: usize,
}

impl ProductSpace {
    fn new(spaces: Vec<PolySpace>, max_states: usize) -> Result<Self> {
        let mut strides = Vec::with_capacity(spaces.len());
        let mut total = 1usize;
        for s in &spaces {
            strides.push(total);
            total = total
                .checked_mul(s.len())
                .filter(|&t| t <= max_states)
                .ok_or_else(|| {
                    Error::CapExceeded(format!("state space exceeds {max_states} states"))
                })?;
        }
        Ok(ProductSpace {
            spaces,
            strides,
            total,
        })
    }

    fn index_of(&self, v: &ExpVector) -> Option<usize> {
        v.coords()
            .iter()
            .zip(&self.spaces)
            .zip(&self.strides)
            .try_fold(0usize, |acc, ((c, s), stride)| {
                s.index.get(c).map(|&i| acc + i * stride)
            })
    }

    fn vector_at(&self, mut state: usize) -> ExpVector {
        let coords = self
            .spaces
            .iter()
            .map(|s| {
                let i = state % s.len();
                state /= s.len();
                s.elems[i].clone()
            })
            .collect();
        ExpVector::new(coords)
    }

    /// Breadth-first closure of the seeds; stops early once `target` is
    /// reached.
    fn closure(&self, seeds: impl IntoIterator<Item = usize>, target: Option<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.total];
        let mut queue = VecDeque::new();
        for s in seeds {
            if !seen[s] {
                seen[s] = true;
                queue.push_back(s);
            }
        }
        if let Some(t) = target {
            if seen[t] {
                return seen;
            }
        }
        while let Some(state) = queue.pop_front() {
            let mut rest = state;
            for (space, &stride) in self.spaces.iter().zip(&self.strides) {
                let i = rest % space.len();
                rest /= space.len();
                for &j in &space.succ[i] {
                    let next = state - i * stride + j * stride;
                    if !seen[next] {
                        seen[next] = true;
                        if Some(next) == target {
                            return seen;
                        }
                        queue.push_back(next);
                    }
                }
            }
        }
        seen
    }
}

fn check_gens(v: &ExpVector, gens: &[ExpVector]) -> Result<()> {
    for u in gens {
        Error::check_arity(v.arity(), u.arity())?;
    }
    Ok(())
}

/// Whether `v` lies in the well-mixed support closure `⟨gens⟩`, by running
/// the moves to a fixpoint over the down-set of `v`.
pub fn wm_closure_decide(v: &ExpVector, gens: &[ExpVector], caps: &OracleCaps) -> Result<bool> {
    check_gens(v, gens)?;
    caps.admits(v)?;
    let spaces = v.coords().iter().map(PolySpace::down_set).collect();
    let space = ProductSpace::new(spaces, caps.max_states)?;
    let target = space.index_of(v).expect("v lies in its own down-set");
    let seeds: Vec<usize> = gens.iter().filter_map(|u| space.index_of(u)).collect();
    Ok(space.closure(seeds, Some(target))[target])
}

/// The well-mixed closure of a generator set, tabulated over the box of
/// vectors with coordinates of degree `≤ max_degree` and coefficient sum
/// `≤ max_coeff_sum`.
pub struct WmClosureTable {
    space: ProductSpace,
    members: Vec<bool>,
}

impl WmClosureTable {
    pub fn new(
        arity: usize,
        max_degree: usize,
        max_coeff_sum: u64,
        gens: &[ExpVector],
        max_states: usize,
    ) -> Result<Self> {
        for u in gens {
            Error::check_arity(arity, u.arity())?;
        }
        let coord = PolySpace::boxed(max_degree, max_coeff_sum);
        let space = ProductSpace::new(vec![coord; arity], max_states)?;
        let seeds: Vec<usize> = gens.iter().filter_map(|u| space.index_of(u)).collect();
        let members = space.closure(seeds, None);
        Ok(WmClosureTable { space, members })
    }

    /// `None` when `v` lies outside the box.
    pub fn contains(&self, v: &ExpVector) -> Option<bool> {
        self.space.index_of(v).map(|i| self.members[i])
    }

    /// Closure members in canonical order.
    pub fn members(&self) -> Vec<ExpVector> {
        let mut out: Vec<ExpVector> = self
            .members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.space.vector_at(i))
            .collect();
        out.sort();
        out
    }
}

/// `max_j |u_j|` over the generators, at least 1. Scaling by this much is
/// always enough to reach a radical witness.
fn scale_bound(gens: &[ExpVector]) -> u64 {
    gens.iter()
        .flat_map(|u| u.coords())
        .map(|c| c.weight() as u64)
        .max()
        .unwrap_or(0)
        .max(1)
}

/// Single-coordinate reachability, memoized per `(seed, target)`.
///
/// Moves act on coordinates independently, so the closure of one generator
/// is the product of the closures of its coordinates.
#[derive(Default)]
pub struct CoordinateReach {
    spaces: HashMap<ExpPoly, PolySpace>,
    memo: HashMap<(ExpPoly, ExpPoly), bool>,
}

impl CoordinateReach {
    pub fn new() -> Self {
        Self::default()
    }

    /// Whether `target` is reachable from `seed` by single-coordinate moves.
    pub fn reaches(&mut self, seed: &ExpPoly, target: &ExpPoly, max_states: usize) -> Result<bool> {
        let key = (seed.clone(), target.clone());
        if let Some(&hit) = self.memo.get(&key) {
            return Ok(hit);
        }
        if !self.spaces.contains_key(target) {
            let space = PolySpace::down_set(target);
            if space.len() > max_states {
                return Err(Error::CapExceeded(format!(
                    "down-set of {target} exceeds {max_states} states"
                )));
            }
            self.spaces.insert(target.clone(), space);
        }
        let space = &self.spaces[target];
        let hit = match space.index.get(seed) {
            Some(&s) => space.reach(s)[space.index[target]],
            None => false,
        };
        self.memo.insert(key, hit);
        Ok(hit)
    }

    fn vector_reaches(&mut self, u: &ExpVector, v: &ExpVector, max_states: usize) -> Result<bool> {
        for (a, b) in u.coords().iter().zip(v.coords()) {
            if !self.reaches(a, b, max_states)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether `v` lies in the radical well-mixed closure `√⟨gens⟩`: some
/// multiple `m·v`, `1 ≤ m ≤ max_j |u_j|`, is reachable from a generator.
pub fn rwm_closure_decide(v: &ExpVector, gens: &[ExpVector], caps: &OracleCaps) -> Result<bool> {
    let mut reach = CoordinateReach::new();
    rwm_decide_with(&mut reach, v, gens, caps)
}

fn rwm_decide_with(
    reach: &mut CoordinateReach,
    v: &ExpVector,
    gens: &[ExpVector],
    caps: &OracleCaps,
) -> Result<bool> {
    check_gens(v, gens)?;
    caps.admits(v)?;
    for m in 1..=scale_bound(gens) {
        let mv = v.checked_scale(m)?;
        for u in gens {
            if reach.vector_reaches(u, &mv, caps.max_states)? {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `v ∈ [gens]` by trying every shift `xⁱ·u ≤ v` with `i ≤ deg v`.
pub fn delta_decide(v: &ExpVector, gens: &[ExpVector]) -> Result<bool> {
    check_gens(v, gens)?;
    let top = v.max_degree().max(0) as usize;
    Ok(gens.iter().any(|u| {
        (0..=top).any(|i| {
            u.coords()
                .iter()
                .zip(v.coords())
                .all(|(a, b)| a.shift(i).le_coeffwise(b))
        })
    }))
}

/// Bounded search for the radical, reflexive and perfect closures of
/// `[gens]`.
///
/// * radical: `m·v ∈ [gens]` for `1 ≤ m ≤ (max coefficient) · max(1, Σ|v_j|)`;
/// * reflexive: `x^m·v ∈ [gens]` for `0 ≤ m ≤ caps.max_degree`;
/// * perfect: `g·v ∈ [gens]` for `g` of degree `≤ caps.max_degree` with
///   coefficients `≤ caps.max_coeff_sum`. Membership in `[gens]` is upward
///   closed, and every such `g` is coefficientwise below
///   `c·(1 + x + … + x^d)` at the extremes, so that one product decides the
///   whole family.
///
/// A negative answer is `NotMember` only when the bounds cover every
/// possible witness: always for radical, when `caps.max_degree` reaches the
/// largest generator degree for reflexive, and when `caps.max_degree ≥
/// deg v + deg gens` and `caps.max_coeff_sum ≥` the largest generator
/// coefficient for perfect. Otherwise it is `FalseAtCaps`.
pub fn bounded_closure_decide(
    v: &ExpVector,
    gens: &[ExpVector],
    closure: ClosureKind,
    caps: &OracleCaps,
) -> Result<Verdict> {
    check_gens(v, gens)?;
    caps.admits(v)?;
    let gen_degree = gens
        .iter()
        .map(ExpVector::max_degree)
        .max()
        .unwrap_or(-1)
        .max(0);
    let gen_coeff = gens.iter().map(ExpVector::max_coeff).max().unwrap_or(0);
    let found = |w: &ExpVector| delta_decide(w, gens);
    match closure {
        ClosureKind::Radical => {
            let weight: u128 = v.coords().iter().map(ExpPoly::weight).sum();
            let bound = gen_coeff.max(1) as u128 * weight.max(1);
            for m in 1..=bound as u64 {
                if found(&v.checked_scale(m)?)? {
                    return Ok(Verdict::Member);
                }
            }
            Ok(Verdict::NotMember)
        }
        ClosureKind::Reflexive => {
            for m in 0..=caps.max_degree {
                if found(&v.shift(m))? {
                    return Ok(Verdict::Member);
                }
            }
            if caps.max_degree as i64 >= gen_degree {
                Ok(Verdict::NotMember)
            } else {
                Ok(Verdict::FalseAtCaps)
            }
        }
        ClosureKind::Perfect => {
            let g = ExpPoly::from_coeffs(vec![caps.max_coeff_sum; caps.max_degree + 1]);
            if found(&v.checked_mul_poly(&g)?)? {
                return Ok(Verdict::Member);
            }
            let complete = caps.max_degree as i64 >= v.max_degree().max(0) + gen_degree
                && caps.max_coeff_sum >= gen_coeff;
            if complete {
                Ok(Verdict::NotMember)
            } else {
                Ok(Verdict::FalseAtCaps)
            }
        }
        other => Err(Error::Precondition(format!(
            "bounded search covers radical, reflexive and perfect closures, not {other}"
        ))),
    }
}

/// Oracle verdict for any closure kind.
pub fn oracle_decide(
    ideal: &IdealPresentation,
    v: &ExpVector,
    caps: &OracleCaps,
) -> Result<Verdict> {
    Error::check_arity(ideal.arity(), v.arity())?;
    if ideal.is_unit() {
        return Ok(Verdict::Member);
    }
    let gens = ideal.generators();
    let definitive = |b: bool| {
        if b {
            Verdict::Member
        } else {
            Verdict::NotMember
        }
    };
    match ideal.kind() {
        ClosureKind::Delta => Ok(definitive(delta_decide(v, gens)?)),
        ClosureKind::WellMixed => Ok(definitive(wm_closure_decide(v, gens, caps)?)),
        ClosureKind::RadicalWellMixed => Ok(definitive(rwm_closure_decide(v, gens, caps)?)),
        kind => bounded_closure_decide(v, gens, kind, caps),
    }
}

/// Vectors of the grid on which membership in `ideal` and in the
/// intersection of the components of `d` differ.
pub fn decomposition_grid_check(
    ideal: &IdealPresentation,
    d: &Decomposition,
    caps: &OracleCaps,
) -> Result<Vec<ExpVector>> {
    Error::check_arity(ideal.arity(), d.arity())?;
    caps.check()?;
    let per_coord = box_polys(caps.max_degree, caps.max_coeff_sum).len();
    let size = (per_coord as u128).checked_pow(ideal.arity() as u32);
    if size.is_none_or(|s| s > caps.max_states as u128) {
        return Err(Error::CapExceeded(format!(
            "grid exceeds {} vectors",
            caps.max_states
        )));
    }
    let mut out = Vec::new();
    for v in grid_vectors(ideal.arity(), caps.max_degree, caps.max_coeff_sum) {
        if ideal.member(&v)? != d.member(&v)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// A random nonzero vector with coordinates in the box; each coordinate is
/// zero with probability about one third.
pub fn random_vector<R: Rng>(rng: &mut R, arity: usize, polys: &[ExpPoly]) -> ExpVector {
    loop {
        let coords: Vec<ExpPoly> = (0..arity)
            .map(|_| {
                if rng.gen_ratio(1, 3) {
                    ExpPoly::zero()
                } else {
                    polys[rng.gen_range(0..polys.len())].clone()
                }
            })
            .collect();
        let v = ExpVector::new(coords);
        if !v.is_zero() {
            return v;
        }
    }
}

/// One to `max_gens` random nonzero generators with coordinates in the box.
pub fn random_generators<R: Rng>(
    rng: &mut R,
    arity: usize,
    max_degree: usize,
    max_coeff_sum: u64,
    max_gens: usize,
) -> Vec<ExpVector> {
    let polys = box_polys(max_degree, max_coeff_sum);
    let count = rng.gen_range(1..=max_gens.max(1));
    (0..count)
        .map(|_| random_vector(rng, arity, &polys))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub arities: Vec<usize>,
    /// Grid and random generators: degree bound per coordinate.
    pub max_degree: usize,
    /// Grid and random generators: coefficient sum bound per coordinate.
    pub max_coeff_sum: u64,
    pub sets_per_arity: usize,
    pub max_gens: usize,
    pub seed: u64,
    /// Bounds for the radical, reflexive and perfect searches.
    pub caps: OracleCaps,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            arities: vec![1, 2, 3],
            max_degree: 3,
            max_coeff_sum: 3,
            sets_per_arity: 50,
            max_gens: 3,
            seed: 0,
            caps: OracleCaps {
                max_degree: 6,
                max_coeff_sum: 6,
                max_states: 1_000_000,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub kind: ClosureKind,
    pub arity: usize,
    pub generators: Vec<ExpVector>,
    pub monomial: ExpVector,
    pub fast: bool,
    pub oracle: Verdict,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct KindTally {
    pub checked: u64,
    pub members: u64,
    pub disagreements: u64,
    pub false_at_caps: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checked: u64,
    pub disagreements: Vec<Disagreement>,
    pub false_at_caps: u64,
    pub by_kind: BTreeMap<ClosureKind, KindTally>,
}

type SetTally = (ClosureKind, KindTally, Vec<Disagreement>);

/// Compare fast membership against the oracles on the whole grid for random
/// generator sets.
///
/// Well-mixed, radical well-mixed and delta verdicts must agree exactly. For
/// the bounded searches a fast `true` must be confirmed, and a fast `false`
/// must not meet an oracle `Member`; fast `false` against `FalseAtCaps` is
/// counted, not flagged.
///
/// `jobs` > 1 spreads generator sets over a thread pool; the report does not
/// depend on it.
pub fn run_verification(config: &VerifyConfig, jobs: usize) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut work = Vec::new();
    for &n in &config.arities {
        for _ in 0..config.sets_per_arity {
            let gens = random_generators(
                &mut rng,
                n,
                config.max_degree,
                config.max_coeff_sum,
                config.max_gens,
            );
            work.push((n, gens));
        }
    }
    let grids: HashMap<usize, Vec<ExpVector>> = config
        .arities
        .iter()
        .map(|&n| (n, grid_vectors(n, config.max_degree, config.max_coeff_sum)))
        .collect();
    let check = |(n, gens): &(usize, Vec<ExpVector>)| verify_set(config, *n, gens, &grids[n]);
    let results: Vec<Result<Vec<SetTally>>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?;
        pool.install(|| work.par_iter().map(check).collect())
    } else {
        work.iter().map(check).collect()
    };
    let mut by_kind: BTreeMap<ClosureKind, KindTally> = ClosureKind::ALL
        .iter()
        .map(|&k| (k, KindTally::default()))
        .collect();
    let mut disagreements = Vec::new();
    for r in results {
        for (kind, tally, mut found) in r? {
            let slot = by_kind.entry(kind).or_default();
            slot.checked += tally.checked;
            slot.members += tally.members;
            slot.disagreements += tally.disagreements;
            slot.false_at_caps += tally.false_at_caps;
            disagreements.append(&mut found);
        }
    }
    Ok(VerifyReport {
        checked: by_kind.values().map(|t| t.checked).sum(),
        false_at_caps: by_kind.values().map(|t| t.false_at_caps).sum(),
        disagreements,
        by_kind,
    })
}

fn verify_set(
    config: &VerifyConfig,
    n: usize,
    gens: &[ExpVector],
    grid: &[ExpVector],
) -> Result<Vec<SetTally>> {
    let wm_table = WmClosureTable::new(
        n,
        config.max_degree,
        config.max_coeff_sum,
        gens,
        config.caps.max_states,
    )?;
    let mut reach = CoordinateReach::new();
    let mut out = Vec::new();
    for kind in ClosureKind::ALL {
        let ideal = IdealPresentation::new(n, kind, gens.to_vec())?;
        let mut tally = KindTally::default();
        let mut found = Vec::new();
        for v in grid {
            let fast = ideal.member(v)?;
            let oracle = match kind {
                ClosureKind::Delta => definitive(delta_decide(v, gens)?),
                ClosureKind::WellMixed => {
                    definitive(wm_table.contains(v).expect("grid lies in the table box"))
                }
                ClosureKind::RadicalWellMixed => {
                    definitive(rwm_decide_with(&mut reach, v, gens, &config.caps)?)
                }
                _ => bounded_closure_decide(v, gens, kind, &config.caps)?,
            };
            tally.checked += 1;
            if fast {
                tally.members += 1;
            }
            let bad = match (fast, oracle) {
                (true, Verdict::Member) | (false, Verdict::NotMember) => false,
                (false, Verdict::FalseAtCaps) => {
                    tally.false_at_caps += 1;
                    false
                }
                _ => true,
            };
            if bad {
                tally.disagreements += 1;
                found.push(Disagreement {
                    kind,
                    arity: n,
                    generators: ideal.generators().to_vec(),
                    monomial: v.clone(),
                    fast,
                    oracle,
                });
            }
        }
        out.push((kind, tally, found));
    }
    Ok(out)
}

fn definitive(b: bool) -> Verdict {
    if b {
        Verdict::Member
    } else {
        Verdict::NotMember
    }
}
