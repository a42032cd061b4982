//! Structural identities that every full table of counts satisfies, and
//! that the verification suite checks on every run:
//!
//! - each row sums to the class size n!/z_lambda,
//! - the whole table sums to n!,
//! - the table is symmetric,
//! - counts vanish unless len(lambda) + len(mu) = n + 1 (mod 2).

use cyclefactor::table::{build_table, Method};
use cyclefactor::verify::check_identities;
use cyclefactor::{factorial, partitions_of, ExactInt, Partition, Result};

fn main() -> Result<()> {
    let n = 9;
    let parts: Vec<Partition> = partitions_of(n).collect();
    let p = parts.len();
    let counts = build_table(n, Method::Positive, None)?;
    println!("full table for n = {n}: {p} x {p} = {} counts", p * p);

    // Row sums: completing a fixed class-lambda element to the n-cycle has
    // exactly one tau per element, so each row counts its whole class.
    for (i, lam) in parts.iter().enumerate().take(4) {
        let row: ExactInt = counts[i * p..(i + 1) * p].iter().sum();
        println!("  row ({lam}): sum = {row} = |class of ({lam})|");
        assert_eq!(row, lam.class_size()?);
    }
    println!("  ... and so on for all {p} rows");

    let grand: ExactInt = counts.iter().sum();
    println!("grand sum = {grand} = {n}! = {}", factorial(n));
    assert_eq!(grand, factorial(n));

    // Parity: sgn(sigma) sgn(tau) = sgn(g) fixes the count to zero on the
    // wrong side. Count how many cells it kills.
    let dead = parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (l.len() + m.len()) % 2))
        .filter(|&s| s != (n as usize + 1) % 2)
        .count();
    println!("parity forces {dead} of {} cells to zero", p * p);

    // The library's own identity checker agrees there is nothing to flag.
    let failures = check_identities(n, &parts, &counts);
    assert!(failures.is_empty(), "{failures:?}");
    println!("identity suite: no violations");
    Ok(())
}
