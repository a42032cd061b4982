//! Exact counting of the factorizations of an n-cycle in the symmetric
//! group `S_n` into an ordered product of two permutations with prescribed
//! cycle types.
//!
//! The central quantity is the connection coefficient `c^n_{lambda,mu}`:
//! fix one permutation `g` that is a single cycle of length n; then
//! `c^n_{lambda,mu}` is the number of ordered pairs `(sigma, tau)` with
//! `sigma` of cycle type `lambda`, `tau` of cycle type `mu`, and
//! `sigma * tau = g`. The crate computes it by four independent methods
//! that must agree bit for bit:
//!
//! - **positive** — a cancellation-free pairing of bivariate-polynomial
//!   coefficients, `n * 2^(-n-1) * sum_{k,l} r_lambda^{kl} r_mu^{lk} k! l!`
//!   (see [`positive`]); this is the fastest exact path and the default.
//! - **hook** — the alternating sum over hook characters
//!   `(n / (z_lambda z_mu)) * sum_r (-1)^r r! (n-1-r)! chi_lambda chi_mu`
//!   (see [`character::count_hook`]).
//! - **frobenius** — the general character sum over all irreducible
//!   representations, which also handles an arbitrary target class `nu`
//!   (see [`character::count_frobenius`]).
//! - **brute** — exhaustive enumeration of one conjugacy class, deriving
//!   the cofactor (see [`perm::count_bruteforce`]).
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals,
//! no floating point anywhere in the counting paths. The alternating sums
//! cancel catastrophically in floating point, and row sums reach `n!`,
//! which overflows `u64` at n = 21.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --release -p cyclefactor --example count_methods      # four methods, one pair
//! cargo run --release -p cyclefactor --example positive_formula   # Q_r, R_lambda, the pairing
//! cargo run --release -p cyclefactor --example character_table    # character tables + orthogonality
//! cargo run --release -p cyclefactor --example class_enumeration  # conjugacy classes, brute counts
//! cargo run --release -p cyclefactor --example identities         # row sums, grand sum, parity
//! cargo run --release -p cyclefactor --example table_csv          # CSV / JSONL table output
//! cargo run --release -p cyclefactor --example cross_verify       # all methods vs each other
//! ```
//!
//! ## CLI
//!
//! A thin binary wraps the library for scripting:
//!
//! ```bash
//! cargo run --release -p cyclefactor -- count --n 5 --lambda 5 --mu 5
//! cargo run --release -p cyclefactor -- table --n 8 --format csv
//! cargo run --release -p cyclefactor -- verify --n-max 6
//! cargo run --release -p cyclefactor -- bench --n 16 --method positive --parallel 4
//! ```
//!
//! ## Library tour
//!
//! ```
//! use cyclefactor::{count_positive, Partition};
//!
//! let lam: Partition = "2,1".parse().unwrap();
//! assert_eq!(cyclefactor::ExactInt::from(3), count_positive(&lam, &lam).unwrap());
//! ```

pub mod character;
mod error;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod positive;
pub mod table;
pub mod verify;

pub use character::{
    character, character_table, count_frobenius, count_hook, dimension, hook_character,
    CharacterTable,
};
pub use error::{Error, Result};
pub use partition::{partitions_of, Partition};
pub use perm::{
    canonical_cycle, canonical_representative, count_bruteforce, enumerate_class, resolve_budget,
    Permutation, BRUTE_BUDGET_ENV, DEFAULT_BRUTE_BUDGET,
};
pub use poly::BivariatePoly;
pub use positive::{count_positive, q_poly, r_coefficients, r_poly};
pub use table::{
    bench, build_table, count_by_method, count_general, table_checksum, verify_checksum,
    with_thread_count, write_csv, write_jsonl, BenchReport, CountRecord, Method,
};
pub use verify::{check_identities, verify, VerifyReport};

use num_traits::One;

/// Arbitrary-precision integer scalar. Every count and character value is
/// one of these; nothing in the counting paths ever rounds.
pub type ExactInt = num_bigint::BigInt;

/// Arbitrary-precision rational scalar, used for polynomial coefficients
/// and for intermediate values that only become integers after reduction.
pub type ExactRat = num_rational::BigRational;

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, k| acc * ExactInt::from(k))
}

/// Factorials `0!..=n!` as a lookup table.
pub fn factorials(n: u32) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(ExactInt::one());
    for k in 1..=n {
        let next = out.last().unwrap() * ExactInt::from(k);
        out.push(next);
    }
    out
}
