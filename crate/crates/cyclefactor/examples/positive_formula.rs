//! The positive formula, piece by piece.
//!
//! Building blocks:
//!
//!   Q_r(a,b) = (a+b)^r - (a-b)^r          (only odd powers of b survive)
//!   R_lambda = (1 / (z_lambda * b)) * product of Q_{lambda_i}
//!
//! R_lambda is homogeneous of degree n-1 with positive coefficients
//! r_lambda^{kl}, and the count couples two coefficient families with the
//! indices swapped:
//!
//!   c^n_{lambda,mu} = n * 2^(-n-1) * sum_{k,l} r_lambda^{kl} r_mu^{lk} k! l!

use cyclefactor::{count_positive, q_poly, r_coefficients, r_poly, Partition, Result};

fn main() -> Result<()> {
    println!("Q_r for small r:");
    for r in 1..=5 {
        println!("  Q_{r} = {}", q_poly(r)?);
    }

    println!();
    for text in ["3,1", "2,2", "4"] {
        let lam: Partition = text.parse()?;
        println!("R_({lam}) = {}", r_poly(&lam)?);
    }

    // The pairing, spelled out for lambda = mu = (2,1).
    let lam: Partition = "2,1".parse()?;
    let coeffs = r_coefficients(&lam)?;
    println!();
    println!("coefficients of R_(2,1):");
    for ((k, l), c) in &coeffs {
        println!("  r^({k},{l}) = {c}");
    }
    println!(
        "pairing r^(k,l) with r^(l,k) and scaling by n * 2^(-n-1) * k! l!:"
    );
    println!("  c^3_(2,1),(2,1) = {}", count_positive(&lam, &lam)?);

    // Positivity is structural: no term in the sum can cancel another, so
    // the formula is numerically benign at any size.
    let big_l: Partition = "6,4,3,3,2,1,1".parse()?;
    let big_m: Partition = "10,5,3,2".parse()?;
    println!();
    println!(
        "a larger case, n = {}, lambda = ({big_l}), mu = ({big_m}):\n  c = {}",
        big_l.n(),
        count_positive(&big_l, &big_m)?
    );
    Ok(())
}
