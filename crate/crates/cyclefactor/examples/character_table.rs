//! The character table of a small symmetric group, with the orthogonality
//! check that pins every entry down.

use cyclefactor::{character_table, dimension, hook_character, partitions_of, ExactInt, Result};

fn main() -> Result<()> {
    let n = 5;
    let table = character_table(n)?;
    let parts = table.partitions();

    // Header: one column per conjugacy class.
    print!("{:>12}", "shape\\class");
    for class in parts {
        print!("{:>10}", format!("({class})"));
    }
    println!();
    for (i, rho) in parts.iter().enumerate() {
        print!("{:>12}", format!("({rho})"));
        for j in 0..parts.len() {
            print!("{:>10}", table.value(i, j).to_string());
        }
        println!();
    }

    // Column orthogonality: the columns are orthogonal with squared norm
    // z_lambda (the centralizer order), which forces the whole table.
    println!();
    for (j, lam) in parts.iter().enumerate() {
        let norm: ExactInt = (0..parts.len())
            .map(|i| table.value(i, j) * table.value(i, j))
            .sum();
        assert_eq!(norm, lam.centralizer_order());
        println!("column ({lam}): sum of squares = {norm} = z_({lam})");
    }

    // Dimensions are the identity column; their squares sum to n!.
    let sum_sq: ExactInt = parts.iter().map(|rho| {
        let d = dimension(rho);
        &d * &d
    }).sum();
    println!();
    println!("sum of squared dimensions = {sum_sq} = {n}!");

    // Hook shapes (n-r, 1^r) are the ones the fast counting paths use.
    println!();
    for r in 0..n {
        let on_cycle = hook_character(n, r, &partitions_of(n).next().unwrap())?;
        println!("chi^(hook r={r}) on the {n}-cycle = {on_cycle}");
    }
    Ok(())
}
