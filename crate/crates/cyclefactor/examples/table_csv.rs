//! Serializing a full table: CSV for spreadsheets and diffing, JSONL for
//! stream processing. Counts are decimal strings in JSON on purpose —
//! they outgrow every native number type, n! alone passes 2^53 at n = 19.

use cyclefactor::table::{build_table, write_csv, write_jsonl, Method};
use cyclefactor::Result;

fn main() -> Result<()> {
    let n = 4;
    let counts = build_table(n, Method::Positive, None)?;

    println!("--- CSV (header + one row per ordered pair) ---");
    let mut csv = Vec::new();
    write_csv(&mut csv, n, &counts)?;
    print!("{}", String::from_utf8_lossy(&csv));

    println!("--- JSONL (same table, one object per line) ---");
    let mut jsonl = Vec::new();
    write_jsonl(&mut jsonl, n, &counts, Method::Positive)?;
    print!("{}", String::from_utf8_lossy(&jsonl));

    // Output order is the partition enumeration order on both axes, fixed
    // regardless of how many threads computed the table; byte-identical
    // reruns are part of the contract.
    Ok(())
}
