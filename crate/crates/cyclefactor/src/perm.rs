//! Permutations of `{1..n}` and the brute-force factorization count.
//!
//! This module is the ground truth the formula paths are checked against:
//! it fixes a concrete target permutation, walks one whole conjugacy class,
//! and counts matching cofactors by direct composition.
//!
//! Composition convention, used everywhere: `(sigma * tau)(x) = sigma(tau(x))`
//! — the right factor acts first. The counts are independent of the
//! convention, but witnesses are only reproducible with a fixed one.

use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ExactInt;

/// Default cap on the size of a conjugacy class the brute-force paths will
/// walk. Overridable via the `CYCLEFACTOR_BRUTE_BUDGET` environment
/// variable or the CLI `--budget` flag.
pub const DEFAULT_BRUTE_BUDGET: u64 = 2_000_000;

/// Name of the environment variable overriding [`DEFAULT_BRUTE_BUDGET`].
pub const BRUTE_BUDGET_ENV: &str = "CYCLEFACTOR_BRUTE_BUDGET";

/// Resolve the enumeration budget: explicit value if given, else the
/// environment variable, else the default. A malformed environment value
/// is an error rather than a silent fallback.
pub fn resolve_budget(explicit: Option<u64>) -> Result<u64> {
    if let Some(b) = explicit {
        return Ok(b);
    }
    match std::env::var(BRUTE_BUDGET_ENV) {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("{BRUTE_BUDGET_ENV}={text:?} is not a valid budget"))
        }),
        Err(_) => Ok(DEFAULT_BRUTE_BUDGET),
    }
}

/// A permutation of `{1..n}` in one-line form: `images[i]` is the image of
/// the point `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Identity on `{1..n}`.
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Build from one-line form; every value in `1..=n` must appear once.
    pub fn from_one_line(images: impl Into<Vec<u32>>) -> Result<Self> {
        let images = images.into();
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    /// One-line form.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a point (1-based).
    pub fn apply(&self, x: u32) -> u32 {
        self.images[(x - 1) as usize]
    }

    /// `self * other`, with `other` acting first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::InvalidArgument(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            images: (1..=self.n()).map(|x| self.apply(other.apply(x))).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// Cycles as lists of points, each cycle led by its smallest point,
    /// cycles ordered by leading point. Fixed points are length-1 cycles.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n as usize + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type as a normalized partition of n; fixed points contribute
    /// parts equal to 1.
    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<u32> = self.cycles().iter().map(|c| c.len() as u32).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(lengths)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(1 2 3)(4 5)`; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<u32>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// The canonical n-cycle `1 -> 2 -> ... -> n -> 1`; the identity for n = 1.
pub fn canonical_cycle(n: u32) -> Permutation {
    let mut images: Vec<u32> = (2..=n).collect();
    if n >= 1 {
        images.push(1);
    }
    Permutation { images }
}

/// The canonical representative of the class `nu`: cycles of decreasing
/// length laid out left to right over consecutive points starting at 1.
/// For `nu = [n]` this is exactly [`canonical_cycle`].
pub fn canonical_representative(nu: &Partition) -> Permutation {
    let mut images: Vec<u32> = (1..=nu.n()).collect();
    let mut start = 1u32;
    for &len in nu.parts() {
        // cycle start -> start+1 -> ... -> start+len-1 -> start
        for off in 0..len - 1 {
            images[(start + off - 1) as usize] = start + off + 1;
        }
        images[(start + len - 2) as usize] = start;
        start += len;
    }
    Permutation { images }
}

/// Lazily enumerate every permutation with cycle type `lambda`, each
/// exactly once, in a fixed deterministic order.
///
/// Errors with a capacity message if the class is larger than `budget`.
pub fn enumerate_class(lambda: &Partition, budget: u64) -> Result<ClassIter> {
    let size = lambda.class_size()?;
    if size > ExactInt::from(budget) {
        return Err(Error::Capacity(format!(
            "class of {lambda} has {size} elements, over the enumeration budget {budget}"
        )));
    }
    Ok(ClassIter::new(lambda))
}

/// Depth-first enumeration of a conjugacy class.
///
/// A permutation of cycle type `lambda` is produced by repeatedly taking
/// the smallest point not yet placed as the anchor of a new cycle,
/// choosing the cycle's length among the remaining parts (largest first),
/// and choosing the ordered remaining members of that cycle (smallest
/// point first). Each permutation arises from exactly one decision
/// sequence because every cycle is anchored by its minimal point and the
/// anchor of the next cycle is forced.
#[derive(Debug)]
pub struct ClassIter {
    n: u32,
    /// remaining[s] = how many cycles of length s are still to be placed.
    remaining: Vec<u32>,
    used: Vec<bool>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

#[derive(Debug)]
struct Frame {
    anchor: u32,
    /// Distinct cycle lengths available when the frame opened, descending.
    options: Vec<u32>,
    opt_idx: usize,
    /// Ordered members after the anchor; complete at `size - 1` entries.
    members: Vec<u32>,
}

impl Frame {
    fn size(&self) -> u32 {
        self.options[self.opt_idx]
    }
}

impl ClassIter {
    fn new(lambda: &Partition) -> Self {
        let n = lambda.n();
        let mut remaining = vec![0u32; n as usize + 1];
        for &part in lambda.parts() {
            remaining[part as usize] += 1;
        }
        ClassIter {
            n,
            remaining,
            used: vec![false; n as usize + 1],
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn smallest_free(&self) -> Option<u32> {
        (1..=self.n).find(|&x| !self.used[x as usize])
    }

    fn next_free_after(&self, v: u32) -> Option<u32> {
        (v + 1..=self.n).find(|&x| !self.used[x as usize])
    }

    fn open_frame(&mut self) {
        let anchor = self.smallest_free().expect("a free point must exist");
        self.used[anchor as usize] = true;
        let options: Vec<u32> = (1..=self.n)
            .rev()
            .filter(|&s| self.remaining[s as usize] > 0)
            .collect();
        self.remaining[options[0] as usize] -= 1;
        self.stack.push(Frame {
            anchor,
            options,
            opt_idx: 0,
            members: Vec::new(),
        });
    }

    /// Greedily complete the current partial assignment with first choices.
    /// The decision tree has no dead ends, so this always reaches a leaf.
    fn fill(&mut self) {
        loop {
            let needs_member = self
                .stack
                .last()
                .is_some_and(|top| (top.members.len() as u32) < top.size() - 1);
            if needs_member {
                let v = self.smallest_free().expect("enough free points remain");
                self.used[v as usize] = true;
                self.stack.last_mut().unwrap().members.push(v);
            } else {
                if self.remaining.iter().all(|&m| m == 0) {
                    return;
                }
                self.open_frame();
            }
        }
    }

    /// Backtrack to the next unexplored decision and refill. Returns false
    /// when the whole tree is exhausted.
    fn advance(&mut self) -> bool {
        loop {
            let Some(top) = self.stack.last_mut() else {
                return false;
            };
            if let Some(v) = top.members.pop() {
                self.used[v as usize] = false;
                if let Some(w) = self.next_free_after(v) {
                    self.used[w as usize] = true;
                    self.stack.last_mut().unwrap().members.push(w);
                    self.fill();
                    return true;
                }
                // No candidate for this slot; keep popping members.
            } else {
                // All members undone: try the next cycle length, else drop
                // the frame entirely.
                let size = top.size();
                self.remaining[size as usize] += 1;
                top.opt_idx += 1;
                if top.opt_idx < top.options.len() {
                    let new_size = top.size();
                    self.remaining[new_size as usize] -= 1;
                    self.fill();
                    return true;
                }
                let anchor = top.anchor;
                self.used[anchor as usize] = false;
                self.stack.pop();
            }
        }
    }

    fn emit(&self) -> Permutation {
        let mut images: Vec<u32> = (1..=self.n).collect();
        for frame in &self.stack {
            let mut prev = frame.anchor;
            for &m in &frame.members {
                images[(prev - 1) as usize] = m;
                prev = m;
            }
            images[(prev - 1) as usize] = frame.anchor;
        }
        Permutation { images }
    }
}

impl Iterator for ClassIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.emit())
    }
}

/// Count factorizations `sigma * tau = g` with `cycle_type(sigma) = lambda`
/// and `cycle_type(tau) = mu`, where `g` is the canonical representative
/// of class `nu` (the canonical n-cycle when `nu = [n]`).
///
/// Iterates over the smaller of the two classes and derives the cofactor,
/// so the cost is `min(|C_lambda|, |C_mu|) * O(n)` rather than `(n!)^2`.
pub fn count_bruteforce(nu: &Partition, lambda: &Partition, mu: &Partition) -> Result<ExactInt> {
    count_bruteforce_with_budget(nu, lambda, mu, resolve_budget(None)?)
}

/// [`count_bruteforce`] with an explicit enumeration budget.
pub fn count_bruteforce_with_budget(
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    budget: u64,
) -> Result<ExactInt> {
    if nu.n() != lambda.n() || nu.n() != mu.n() {
        return Err(Error::WeightMismatch(format!(
            "nu = {nu}, lambda = {lambda}, mu = {mu} must all have the same weight"
        )));
    }
    if nu.n() == 0 {
        return Err(Error::InvalidArgument("counts require n >= 1".into()));
    }
    let target = canonical_representative(nu);
    count_bruteforce_for_target(&target, lambda, mu, budget)
}

/// Core loop against an explicit target; the public entry points fix the
/// canonical representative, tests use this to check that the count does
/// not depend on which class member is chosen.
pub fn count_bruteforce_for_target(
    target: &Permutation,
    lambda: &Partition,
    mu: &Partition,
    budget: u64,
) -> Result<ExactInt> {
    let size_lambda = lambda.class_size()?;
    let size_mu = mu.class_size()?;

    // Walk the smaller class; derive the cofactor from sigma * tau = g.
    let (walk, want, from_left) = if size_mu < size_lambda {
        (mu, lambda, false)
    } else {
        (lambda, mu, true)
    };
    let mut count: u64 = 0;
    for element in enumerate_class(walk, budget)? {
        let cofactor = if from_left {
            // element = sigma, tau = sigma^{-1} * g
            element.inverse().compose(target)?
        } else {
            // element = tau, sigma = g * tau^{-1}
            target.compose(&element.inverse())?
        };
        if cofactor.cycle_type() == *want {
            count += 1;
        }
    }
    Ok(ExactInt::from(count))
}

/// True when the class of `lambda` (or of `mu`, whichever is smaller) fits
/// the budget, i.e. when [`count_bruteforce`] would not refuse.
pub fn within_budget(lambda: &Partition, mu: &Partition, budget: u64) -> Result<bool> {
    let smaller = lambda.class_size()?.min(mu.class_size()?);
    Ok(smaller.to_u64().map(|s| s <= budget).unwrap_or(false))
}
