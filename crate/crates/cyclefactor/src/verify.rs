//! Cross-method verification: computes full tables by several independent
//! methods, demands bit-for-bit agreement, and checks structural
//! identities that every correct table must satisfy.
//!
//! The identities double as an absolute check (agreement alone could mask
//! a shared systematic error):
//!
//! - row sums: summing `c^n_{lambda,mu}` over `mu` counts all ways to
//!   complete a class-`lambda` element to the fixed n-cycle, one per
//!   element, so each row sums to the class size `n! / z_lambda`;
//! - grand sum: all rows together count every permutation once, so the
//!   whole table sums to `n!`;
//! - symmetry: `sigma * tau = g` maps to `tau * sigma = tau g tau^{-1}`,
//!   a bijection onto the factorizations of a conjugate n-cycle, so the
//!   table is symmetric;
//! - parity: signs multiply, so the count vanishes unless
//!   `len(lambda) + len(mu) = n + 1 (mod 2)`.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::table::{build_table, Method};
use crate::{factorial, ExactInt};

/// Two methods disagreeing on one pair. Any instance is a bug.
#[derive(Debug, Clone)]
pub struct Mismatch {
    pub n: u32,
    pub lambda: Partition,
    pub mu: Partition,
    pub baseline: Method,
    pub baseline_value: ExactInt,
    pub other: Method,
    pub other_value: ExactInt,
}

/// One structural identity violated by one method's table.
#[derive(Debug, Clone)]
pub struct IdentityFailure {
    pub n: u32,
    pub method: Method,
    pub what: String,
}

/// Outcome of a [`verify`] run.
pub struct VerifyReport {
    pub n_max: u32,
    pub methods: Vec<Method>,
    /// Ordered pairs compared, summed over n.
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub identity_failures: Vec<IdentityFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.identity_failures.is_empty()
    }

    /// Human-readable report: one line per n, then the verdict.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.methods.iter().map(|m| m.name()).collect();
        let _ = writeln!(
            out,
            "verify: n = 1..{}, methods = {}",
            self.n_max,
            names.join(", ")
        );
        for n in 1..=self.n_max {
            let bad = self.mismatches.iter().filter(|m| m.n == n).count()
                + self.identity_failures.iter().filter(|f| f.n == n).count();
            let p = partitions_of(n).count();
            if bad == 0 {
                let _ = writeln!(out, "  n = {n}: {} pairs, ok", p * p);
            } else {
                let _ = writeln!(out, "  n = {n}: {} pairs, {bad} FAILURES", p * p);
            }
        }
        for m in &self.mismatches {
            let _ = writeln!(
                out,
                "  mismatch: n = {}, lambda = {}, mu = {}: {} = {}, {} = {}",
                m.n, m.lambda, m.mu, m.baseline, m.baseline_value, m.other, m.other_value
            );
        }
        for f in &self.identity_failures {
            let _ = writeln!(out, "  identity: n = {}, method = {}: {}", f.n, f.method, f.what);
        }
        if self.passed() {
            let _ = writeln!(
                out,
                "n=1..{}: all pairs agree across {} methods",
                self.n_max,
                self.methods.len()
            );
        } else {
            let _ = writeln!(
                out,
                "n=1..{}: {} mismatches, {} identity failures",
                self.n_max,
                self.mismatches.len(),
                self.identity_failures.len()
            );
        }
        out
    }
}

/// Builds the full table for every n up to `n_max` by every requested
/// method, records all cross-method disagreements, and runs the identity
/// suite on each table.
pub fn verify(n_max: u32, methods: &[Method], budget: Option<u64>) -> Result<VerifyReport> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("verify requires n_max >= 1".into()));
    }
    if methods.is_empty() {
        return Err(Error::InvalidArgument("verify requires at least one method".into()));
    }
    let mut report = VerifyReport {
        n_max,
        methods: methods.to_vec(),
        pairs_checked: 0,
        mismatches: Vec::new(),
        identity_failures: Vec::new(),
    };
    for n in 1..=n_max {
        let parts: Vec<Partition> = partitions_of(n).collect();
        let p = parts.len();
        report.pairs_checked += p * p;
        let tables: Vec<Vec<ExactInt>> = methods
            .iter()
            .map(|&m| build_table(n, m, budget))
            .collect::<Result<_>>()?;
        for (t, &method) in tables.iter().zip(methods) {
            for what in check_identities(n, &parts, t) {
                report.identity_failures.push(IdentityFailure { n, method, what });
            }
        }
        report
            .mismatches
            .extend(compare_tables(n, &parts, methods, &tables));
    }
    Ok(report)
}

/// Cell-by-cell comparison of one n's tables across every unordered pair
/// of methods — not against a designated oracle, so a disagreement names
/// exactly which two methods differ.
fn compare_tables(
    n: u32,
    parts: &[Partition],
    methods: &[Method],
    tables: &[Vec<ExactInt>],
) -> Vec<Mismatch> {
    let p = parts.len();
    let mut mismatches = Vec::new();
    for a in 0..methods.len() {
        for b in a + 1..methods.len() {
            for k in 0..p * p {
                if tables[a][k] != tables[b][k] {
                    mismatches.push(Mismatch {
                        n,
                        lambda: parts[k / p].clone(),
                        mu: parts[k % p].clone(),
                        baseline: methods[a],
                        baseline_value: tables[a][k].clone(),
                        other: methods[b],
                        other_value: tables[b][k].clone(),
                    });
                }
            }
        }
    }
    mismatches
}

/// The structural identity suite for one full table; returns a
/// description of every violation found.
pub fn check_identities(n: u32, parts: &[Partition], counts: &[ExactInt]) -> Vec<String> {
    let p = parts.len();
    let mut failures = Vec::new();
    if counts.len() != p * p {
        failures.push(format!("table has {} entries, expected {}", counts.len(), p * p));
        return failures;
    }

    for (i, lam) in parts.iter().enumerate() {
        let row: ExactInt = counts[i * p..(i + 1) * p].iter().sum();
        let expect = lam
            .class_size()
            .expect("class size of a valid partition is integral");
        if row != expect {
            failures.push(format!(
                "row sum for lambda = {lam} is {row}, expected class size {expect}"
            ));
        }
    }

    let grand: ExactInt = counts.iter().sum();
    let n_fact = factorial(n);
    if grand != n_fact {
        failures.push(format!("grand sum is {grand}, expected {n}! = {n_fact}"));
    }

    for i in 0..p {
        for j in i + 1..p {
            if counts[i * p + j] != counts[j * p + i] {
                failures.push(format!(
                    "asymmetry at lambda = {}, mu = {}: {} vs {}",
                    parts[i],
                    parts[j],
                    counts[i * p + j],
                    counts[j * p + i]
                ));
            }
        }
    }

    for (i, lam) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            let even = (lam.len() + mu.len()) % 2 == ((n as usize) + 1) % 2;
            if !even && !counts[i * p + j].is_zero() {
                failures.push(format!(
                    "parity: c for lambda = {lam}, mu = {mu} is {}, expected 0",
                    counts[i * p + j]
                ));
            }
        }
    }

    failures
}
