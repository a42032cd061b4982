//! Sparse bivariate polynomials in the formal indeterminates `a`, `b`,
//! with exact rational coefficients.
//!
//! The representation is a map from exponent pairs `(k, l)` (meaning
//! `a^k * b^l`) to nonzero coefficients. A `BTreeMap` keeps iteration
//! order deterministic. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};

use crate::ExactRat;

/// A polynomial in `a` and `b` over the rationals, stored sparsely.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), ExactRat>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, ExactRat::one())
    }

    /// The single term `coeff * a^k * b^l`. Zero coefficients produce the
    /// zero polynomial.
    pub fn monomial(k: u32, l: u32, coeff: ExactRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((k, l), coeff);
        }
        BivariatePoly { terms }
    }

    pub fn from_terms(items: impl IntoIterator<Item = ((u32, u32), ExactRat)>) -> Self {
        let mut poly = Self::zero();
        for ((k, l), c) in items {
            poly.add_term(k, l, c);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `a^k * b^l`, zero if the monomial is absent.
    pub fn coeff(&self, k: u32, l: u32) -> ExactRat {
        self.terms.get(&(k, l)).cloned().unwrap_or_else(ExactRat::zero)
    }

    /// Iterate terms in ascending `(k, l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ExactRat)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<(u32, u32), ExactRat> {
        self.terms
    }

    fn add_term(&mut self, k: u32, l: u32, c: ExactRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(k, l)) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&(k, l));
                }
            }
            None => {
                self.terms.insert((k, l), c);
            }
        }
    }

    pub fn scalar_mul(&self, s: &ExactRat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        BivariatePoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    /// Divide by the indeterminate `b`. Returns `None` unless every
    /// monomial has b-exponent at least 1.
    pub fn div_b(&self) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (&(k, l), c) in &self.terms {
            if l == 0 {
                return None;
            }
            terms.insert((k, l - 1), c.clone());
        }
        Some(BivariatePoly { terms })
    }

    /// Highest total degree among the terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(k, l)| k + l).max()
    }

    /// `Some(d)` if every term has total degree exactly `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|&(k, l)| k + l);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(k, l), c) in &rhs.terms {
            out.add_term(k, l, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(k, l), c) in &rhs.terms {
            out.add_term(k, l, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(k1, l1), c1) in &self.terms {
            for (&(k2, l2), c2) in &rhs.terms {
                out.add_term(k1 + k2, l1 + l2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for BivariatePoly {
    /// Human form, highest a-power first: `2*a^4 + 4*a^2*b^2 + 2/5*b^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(k, l), c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut wrote_coeff = false;
            if !mag.is_one() || (k == 0 && l == 0) {
                write!(f, "{mag}")?;
                wrote_coeff = true;
            }
            for (sym, e) in [("a", k), ("b", l)] {
                if e == 0 {
                    continue;
                }
                if wrote_coeff {
                    write!(f, "*")?;
                }
                wrote_coeff = true;
                write!(f, "{sym}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({self})")
    }
}
