//! Full count tables over all pairs of cycle types, with CSV and JSONL
//! serialization.
//!
//! [`build_table`] computes `c^n_{lambda,mu}` for every ordered pair of
//! partitions of n with one selected method, in the row-major order
//! induced by the partition enumeration. Rows parallelize with rayon;
//! results are collected in index order, so output is deterministic
//! regardless of thread count.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::character::{character_table, count_hook_from_rows, hook_character_row};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::{count_bruteforce_with_budget, resolve_budget};
use crate::positive::{
    count_positive_from_coefficients, r_coefficients, reduce_to_count, RCoefficients,
};
use crate::{factorial, ExactInt, ExactRat};

/// Selects which counting path computes a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Positive bivariate-polynomial pairing. Fast; n-cycle target only.
    Positive,
    /// Alternating hook-character sum. n-cycle target only.
    Hook,
    /// Full character sum over all shapes. Any target class; capped at
    /// [`DEFAULT_TABLE_LIMIT`].
    Frobenius,
    /// Direct enumeration of one conjugacy class. Any target; budgeted.
    Brute,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Positive,
        Method::Hook,
        Method::Frobenius,
        Method::Brute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Positive => "positive",
            Method::Hook => "hook",
            Method::Frobenius => "frobenius",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s.trim() {
            "positive" => Ok(Method::Positive),
            "hook" => Ok(Method::Hook),
            "frobenius" => Ok(Method::Frobenius),
            "brute" => Ok(Method::Brute),
            other => Err(Error::InvalidArgument(format!(
                "unknown method \"{other}\" (expected positive, hook, frobenius, or brute)"
            ))),
        }
    }
}

/// One computed count, in the shape serialized to JSONL.
///
/// `count` is a decimal string: the values overflow every fixed-width
/// integer type long before n = 20, and JSON numbers would silently lose
/// precision in most consumers.
#[derive(Debug, Clone, Serialize)]
pub struct CountRecord {
    pub n: u32,
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<u32>>,
    pub count: String,
    pub method: Method,
}

impl CountRecord {
    pub fn new(
        lambda: &Partition,
        mu: &Partition,
        nu: Option<&Partition>,
        count: &ExactInt,
        method: Method,
    ) -> CountRecord {
        CountRecord {
            n: lambda.n(),
            lambda: lambda.parts().to_vec(),
            mu: mu.parts().to_vec(),
            nu: nu.map(|p| p.parts().to_vec()),
            count: count.to_string(),
            method,
        }
    }
}

/// All counts `c^n_{lambda,mu}` for the n-cycle target, row-major in the
/// partition enumeration order: index = row * p(n) + column.
pub fn build_table(n: u32, method: Method, budget: Option<u64>) -> Result<Vec<ExactInt>> {
    if n == 0 {
        return Err(Error::InvalidArgument("table requires n >= 1".into()));
    }
    let parts: Vec<Partition> = partitions_of(n).collect();
    match method {
        Method::Positive => {
            let coeffs: Vec<RCoefficients> = parts
                .par_iter()
                .map(r_coefficients)
                .collect::<Result<_>>()?;
            pairs(parts.len())
                .map(|(i, j)| count_positive_from_coefficients(&coeffs[i], &coeffs[j], n))
                .collect()
        }
        Method::Hook => {
            let rows: Vec<Vec<ExactInt>> = parts
                .par_iter()
                .map(hook_character_row)
                .collect::<Result<_>>()?;
            let z: Vec<ExactInt> = parts.iter().map(Partition::centralizer_order).collect();
            pairs(parts.len())
                .map(|(i, j)| count_hook_from_rows(&rows[i], &rows[j], z[i].clone(), z[j].clone(), n))
                .collect()
        }
        Method::Frobenius => {
            // One shared character table; per pair only the shape sum
            // remains. Enumeration order puts the n-cycle class first and
            // the identity class (whose column is the dimensions) last.
            let table = character_table(n)?;
            let p = parts.len();
            let z: Vec<ExactInt> = parts.iter().map(Partition::centralizer_order).collect();
            let n_fact = factorial(n);
            pairs(p)
                .map(|(i, j)| {
                    let mut sum = ExactRat::zero();
                    for s in 0..p {
                        let product = table.value(s, i) * table.value(s, j) * table.value(s, 0);
                        if !product.is_zero() {
                            sum += ExactRat::new(product, table.value(s, p - 1).clone());
                        }
                    }
                    let scale = ExactRat::new(n_fact.clone(), &z[i] * &z[j]);
                    reduce_to_count(sum * scale)
                })
                .collect()
        }
        Method::Brute => {
            let cycle = Partition::new(vec![n])?;
            let budget = resolve_budget(budget)?;
            pairs(parts.len())
                .map(|(i, j)| count_bruteforce_with_budget(&cycle, &parts[i], &parts[j], budget))
                .collect()
        }
    }
}

/// Row-major pair indices as a parallel iterator; `collect` preserves
/// index order, which is what makes the output thread-count independent.
fn pairs(len: usize) -> impl IndexedParallelIterator<Item = (usize, usize)> {
    (0..len * len).into_par_iter().map(move |k| (k / len, k % len))
}

/// Sum of every entry; for a complete table this must equal n!, because
/// each of the n! permutations `sigma` pairs with exactly one `tau`.
pub fn table_checksum(counts: &[ExactInt]) -> ExactInt {
    counts.iter().sum()
}

/// Checks the grand checksum of a full table against n!.
pub fn verify_checksum(n: u32, counts: &[ExactInt]) -> bool {
    table_checksum(counts) == factorial(n)
}

/// Writes a table as CSV: header `n,lambda,mu,count`, partition fields
/// quoted (they contain commas), one row per ordered pair in table order.
pub fn write_csv<W: Write>(out: &mut W, n: u32, counts: &[ExactInt]) -> Result<()> {
    let parts: Vec<Partition> = partitions_of(n).collect();
    expect_full(n, parts.len(), counts.len())?;
    writeln!(out, "n,lambda,mu,count")?;
    for (k, count) in counts.iter().enumerate() {
        let (i, j) = (k / parts.len(), k % parts.len());
        writeln!(out, "{n},\"{}\",\"{}\",{count}", parts[i], parts[j])?;
    }
    Ok(())
}

/// Writes a table as JSONL, one [`CountRecord`] per line in table order.
pub fn write_jsonl<W: Write>(
    out: &mut W,
    n: u32,
    counts: &[ExactInt],
    method: Method,
) -> Result<()> {
    let parts: Vec<Partition> = partitions_of(n).collect();
    expect_full(n, parts.len(), counts.len())?;
    for (k, count) in counts.iter().enumerate() {
        let (i, j) = (k / parts.len(), k % parts.len());
        let record = CountRecord::new(&parts[i], &parts[j], None, count, method);
        let line = serde_json::to_string(&record)
            .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn expect_full(n: u32, p: usize, got: usize) -> Result<()> {
    if got != p * p {
        return Err(Error::Internal(format!(
            "table for n = {n} must have {} entries, got {got}",
            p * p
        )));
    }
    Ok(())
}

/// Timing for one [`bench`] run.
pub struct BenchReport {
    pub n: u32,
    pub method: Method,
    pub pairs: usize,
    pub repeats: u32,
    /// Wall time per repeat, seconds. Timing is the one floating-point
    /// quantity in the crate; the counts themselves stay exact.
    pub times: Vec<f64>,
    /// Grand sum of the computed table; must equal n!.
    pub checksum: ExactInt,
    pub expected_checksum: ExactInt,
}

impl BenchReport {
    pub fn checksum_ok(&self) -> bool {
        self.checksum == self.expected_checksum
    }

    pub fn best(&self) -> f64 {
        self.times.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn pairs_per_second(&self) -> f64 {
        self.pairs as f64 / self.best()
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "bench: n = {}, method = {}, pairs = {}, repeats = {}",
            self.n, self.method, self.pairs, self.repeats
        )?;
        for (i, t) in self.times.iter().enumerate() {
            writeln!(f, "  run {}: {:.3} s", i + 1, t)?;
        }
        writeln!(
            f,
            "  best: {:.3} s ({:.0} pairs/s)",
            self.best(),
            self.pairs_per_second()
        )?;
        if self.checksum_ok() {
            write!(f, "  checksum: {} (= {}!)", self.checksum, self.n)
        } else {
            write!(
                f,
                "  checksum: {} MISMATCH, expected {}! = {}",
                self.checksum, self.n, self.expected_checksum
            )
        }
    }
}

/// Builds the full table `repeats` times, timing each build, and checks
/// the grand checksum, so a benchmark run doubles as a smoke test.
pub fn bench(n: u32, method: Method, repeats: u32, budget: Option<u64>) -> Result<BenchReport> {
    if repeats == 0 {
        return Err(Error::InvalidArgument("bench requires at least one repeat".into()));
    }
    let mut times = Vec::with_capacity(repeats as usize);
    let mut last = None;
    for _ in 0..repeats {
        let start = std::time::Instant::now();
        let counts = build_table(n, method, budget)?;
        times.push(start.elapsed().as_secs_f64());
        last = Some(counts);
    }
    let counts = last.expect("repeats >= 1");
    Ok(BenchReport {
        n,
        method,
        pairs: counts.len(),
        repeats,
        times,
        checksum: table_checksum(&counts),
        expected_checksum: factorial(n),
    })
}

/// Runs `f` on a rayon pool with the given thread count; `None` uses the
/// global pool. Table and bench runs go through this so `--parallel` is a
/// strict wrapper, not a different code path.
pub fn with_thread_count<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> Result<T> + Send,
) -> Result<T> {
    match threads {
        None => f(),
        Some(0) => Err(Error::InvalidArgument("thread count must be >= 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(f),
    }
}

/// A single count by any method, for the n-cycle target.
pub fn count_by_method(
    method: Method,
    lambda: &Partition,
    mu: &Partition,
    budget: Option<u64>,
) -> Result<ExactInt> {
    let n = lambda.n();
    match method {
        Method::Positive => crate::positive::count_positive(lambda, mu),
        Method::Hook => crate::character::count_hook(lambda, mu),
        Method::Frobenius => {
            let cycle = Partition::new(vec![n])?;
            crate::character::count_frobenius(&cycle, lambda, mu)
        }
        Method::Brute => {
            let cycle = Partition::new(vec![n])?;
            count_bruteforce_with_budget(&cycle, lambda, mu, resolve_budget(budget)?)
        }
    }
}

/// A single count for an arbitrary target class; only the general methods
/// can serve it.
pub fn count_general(
    method: Method,
    nu: &Partition,
    lambda: &Partition,
    mu: &Partition,
    budget: Option<u64>,
) -> Result<ExactInt> {
    match method {
        Method::Frobenius => crate::character::count_frobenius(nu, lambda, mu),
        Method::Brute => count_bruteforce_with_budget(nu, lambda, mu, resolve_budget(budget)?),
        Method::Positive | Method::Hook => Err(Error::InvalidArgument(format!(
            "method {method} only counts the full-cycle target; use frobenius or brute for nu = {nu}"
        ))),
    }
}
