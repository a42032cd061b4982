//! Integer partitions and the classical conjugacy-class quantities attached
//! to them: the centralizer order `z_lambda` and the class size `n!/z_lambda`.
//!
//! A [`Partition`] indexes both a conjugacy class of the symmetric group
//! (by cycle type) and an irreducible representation (by Young diagram
//! shape). Values are immutable after construction and every operation here
//! is a pure function.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{factorial, ExactInt};

/// A partition of a nonnegative integer: weakly decreasing positive parts.
///
/// The empty partition is the unique partition of 0. Parts are normalized
/// (sorted descending) at construction, and the weight is cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
}

impl Partition {
    /// Build a partition from parts in any order. Parts are sorted
    /// descending; a zero part is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Parse("part 0 is not allowed".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(parts))
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    /// The hook partition `(n - r, 1^r)`; requires `0 <= r <= n - 1`.
    pub fn hook(n: u32, r: u32) -> Result<Self> {
        if n == 0 || r > n - 1 {
            return Err(Error::InvalidArgument(format!(
                "hook (n-r, 1^r) needs 0 <= r <= n-1, got n={n}, r={r}"
            )));
        }
        let mut parts = vec![n - r];
        parts.extend(std::iter::repeat(1).take(r as usize));
        Ok(Self::from_sorted(parts))
    }

    /// Internal constructor for parts already sorted descending and nonzero.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    /// The parts, sorted descending.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The weight `n` (sum of parts).
    pub fn n(&self) -> u32 {
        self.weight
    }

    /// Number of parts, usually written `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `alpha_i` of the part `i`.
    pub fn multiplicity(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Distinct parts with multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The centralizer order `z_lambda = prod_i alpha_i! * i^alpha_i`.
    ///
    /// The conjugacy class of cycle type `lambda` has `n!/z_lambda` elements.
    pub fn centralizer_order(&self) -> ExactInt {
        let mut z = ExactInt::one();
        for (part, mult) in self.multiplicities() {
            z *= factorial(mult);
            z *= ExactInt::from(part).pow(mult);
        }
        z
    }

    /// Size of the conjugacy class with this cycle type: `n!/z_lambda`.
    pub fn class_size(&self) -> Result<ExactInt> {
        let z = self.centralizer_order();
        let (q, rem) = num_integer::Integer::div_rem(&factorial(self.weight), &z);
        if !rem.is_zero() {
            return Err(Error::Internal(format!(
                "n!/z_lambda is not an integer for lambda = {self}"
            )));
        }
        Ok(q)
    }

    /// If this is a hook `(n - r, 1^r)`, return the leg length `r`.
    ///
    /// Hooks are exactly the shapes whose character is nonzero on the
    /// n-cycle class.
    pub fn is_hook(&self) -> Option<u32> {
        if self.parts.is_empty() {
            return None;
        }
        let r = self.parts.len() as u32 - 1;
        if self.parts[1..].iter().all(|&p| p == 1) {
            Some(r)
        } else {
            None
        }
    }
}

impl fmt::Display for Partition {
    /// Comma-separated decimal parts, e.g. `3,1,1`. This is the text form
    /// the CLI and the table files use.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parse a comma-separated list of positive integers, in any order.
    /// Whitespace around tokens is tolerated; the result is normalized.
    fn from_str(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty partition string".into()));
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            let part: u32 = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad token {token:?}")))?;
            if part == 0 {
                return Err(Error::Parse(format!("bad token {token:?}: parts must be >= 1")));
            }
            parts.push(part);
        }
        Partition::new(parts)
    }
}

/// Iterator over all partitions of `n` in reverse-lexicographic order:
/// `[n]` first, `[1, 1, ..., 1]` last. The order is part of the output
/// contract, so table files are diffable.
pub fn partitions_of(n: u32) -> Partitions {
    Partitions {
        current: Some(vec![n; usize::from(n > 0)]),
    }
}

pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // Successor: decrement the rightmost part > 1, then redistribute
        // everything to its right greedily with parts capped at the new value.
        if let Some(i) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur[..=i].to_vec();
            next[i] -= 1;
            let cap = next[i];
            let mut rem = (cur.len() - 1 - i) as u32 + 1;
            while rem > 0 {
                let take = rem.min(cap);
                next.push(take);
                rem -= take;
            }
            self.current = Some(next);
        }
        Some(Partition::from_sorted(cur))
    }
}
