//! Walking a conjugacy class element by element, and the brute-force
//! count built on top of it.

use cyclefactor::{
    canonical_cycle, count_bruteforce, enumerate_class, partitions_of, ExactInt, Partition, Result,
};

fn main() -> Result<()> {
    // Every permutation with cycle type (2,2) in S_4, in enumeration order.
    let lam: Partition = "2,2".parse()?;
    println!("class of type ({lam}) in S_4:");
    for sigma in enumerate_class(&lam, 1_000)? {
        println!("  {sigma}");
    }
    println!("class size = {} = 4!/z", lam.class_size()?);

    // The enumerator covers each class exactly once; sizes sum to n!.
    let n = 7;
    let total: ExactInt = partitions_of(n)
        .map(|p| p.class_size().unwrap())
        .sum();
    println!();
    println!("sum of class sizes for n = {n}: {total} = {n}!");

    // Brute-force counting: walk the smaller class, derive the cofactor,
    // keep the pairs that multiply to the fixed n-cycle.
    let g = canonical_cycle(5);
    println!();
    println!("target 5-cycle g = {g}");
    let five: Partition = "5".parse()?;
    let fix: Partition = "3,1,1".parse()?;
    println!(
        "pairs (sigma, tau) of types ((5), (5)) with sigma tau = g: {}",
        count_bruteforce(&five, &five, &five)?
    );
    println!(
        "pairs of types ((3,1,1), (5)): {}",
        count_bruteforce(&five, &fix, &five)?
    );
    Ok(())
}
