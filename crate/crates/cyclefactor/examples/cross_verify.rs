//! Exhaustive cross-method verification: every pair of cycle types up to
//! n = 6, every method against every other, plus the identity suite.
//!
//! The four methods share no code beyond partition plumbing, so exact
//! agreement on all pairs is strong evidence each one is right.

use cyclefactor::table::Method;
use cyclefactor::verify::verify;

fn main() {
    let report = verify(6, &Method::ALL, None).expect("verification run failed to execute");
    print!("{}", report.render());
    if !report.passed() {
        // Any disagreement between methods is an implementation bug.
        std::process::exit(1);
    }
}
