//! Leading terms of the 2-minors under different variable orders.
//!
//! Every order here is degree-reverse-lexicographic; only the priority
//! permutation of the grid cells changes. Each 2-minor contributes its
//! leading term -- either the diagonal or the antidiagonal product --
//! and the resulting square-free quadratic monomials generate the
//! initial ideal. This example prints, for a 3x3 grid, which term each
//! minor contributes under the three built-in orders and under a custom
//! permutation loaded from text.
//!
//! Run with: cargo run --example initial_ideals

use levelcomplex::order::{initial_ideal_generators, Minor2, MonomialOrder};
use levelcomplex::shape::MatrixShape;

fn main() {
    let shape = MatrixShape::new(3, 3).expect("valid shape");
    let minors = Minor2::all(shape);

    // A custom order: cells listed highest-priority first, one "row col"
    // pair per line. This one reads the grid column by column.
    let column_major: String = (1..=3)
        .flat_map(|j| (1..=3).map(move |i| format!("{i} {j}\n")))
        .collect();

    let orders = vec![
        MonomialOrder::PaperRows,
        MonomialOrder::NaturalRowMajor,
        MonomialOrder::PaperDiagonals,
        MonomialOrder::custom_from_text(shape, &column_major).expect("valid permutation"),
    ];

    for order in &orders {
        let generators = initial_ideal_generators(shape, order).expect("order fits shape");
        println!("order `{}`:", order.label());
        for (minor, lead) in minors.iter().zip(&generators) {
            let diagonal = *lead == minor.diagonal_term(shape);
            println!(
                "  minor rows ({},{}) cols ({},{}) -> {} ({})",
                minor.rows.0,
                minor.rows.1,
                minor.cols.0,
                minor.cols.1,
                lead,
                if diagonal { "diagonal" } else { "antidiagonal" }
            );
        }
        let square_free = generators.iter().all(|g| g.is_square_free());
        println!("  all {} leading terms square-free: {square_free}\n", generators.len());
    }
}
