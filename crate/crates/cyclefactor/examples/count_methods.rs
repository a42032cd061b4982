//! One pair of cycle types, four independent counting methods.
//!
//! Every method must produce the same exact integer; this example prints
//! them side by side for a few pairs, including one large enough that the
//! brute-force path is the only slow one.

use cyclefactor::table::{count_by_method, Method};
use cyclefactor::{Partition, Result};

fn main() -> Result<()> {
    let pairs = [
        ("2,1", "2,1", ""),
        ("5", "5", ""),
        ("2,2,2", "5,1", ""),
        ("4,3,1", "6,2", ""),
        ("2", "2", "zero: an odd permutation cannot be a product of two transpositions"),
    ];

    for (l, m, note) in pairs {
        let lambda: Partition = l.parse()?;
        let mu: Partition = m.parse()?;
        let n = lambda.n();
        println!("c^{n} for lambda = ({lambda}), mu = ({mu}):");
        let mut last = None;
        for method in Method::ALL {
            let count = count_by_method(method, &lambda, &mu, None)?;
            println!("  {method:<10} {count}");
            if let Some(prev) = &last {
                assert_eq!(prev, &count, "methods disagree — this is a bug");
            }
            last = Some(count);
        }
        if !note.is_empty() {
            println!("  ({note})");
        }
        println!();
    }

    println!("all methods agree on every pair above");
    Ok(())
}
