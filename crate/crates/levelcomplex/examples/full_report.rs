//! Everything at once: the single-call structural report.
//!
//! `full_report` chains the whole pipeline -- initial ideal, Groebner
//! verification, complex construction, quasimanifold and Cohen-Macaulay
//! checks, canonical module, Hilbert series, graded Betti table with its
//! fact suite, and the two-way shelling -- and returns one struct that
//! renders as text or serializes to JSON. Expensive stages can be
//! switched off individually.
//!
//! Run with: cargo run --example full_report

use levelcomplex::field::FieldSpec;
use levelcomplex::order::MonomialOrder;
use levelcomplex::report::{full_report, RunOptions};
use levelcomplex::shape::MatrixShape;

fn main() {
    let shape = MatrixShape::new(3, 4).expect("valid shape");
    let options = RunOptions {
        field: FieldSpec::Rationals,
        upto: Some(6),
        sweep_limit: 16,
        with_groebner: true,
        with_betti: true,
        with_shelling: true,
    };
    let report =
        full_report(shape, &MonomialOrder::PaperRows, &options).expect("shape in range");

    println!("{}", report.render_text());

    // The same data as JSON, for machine consumption.
    let json = report.to_json();
    println!(
        "JSON document with top-level keys: {}",
        json.as_object()
            .expect("object")
            .keys()
            .cloned()
            .collect::<Vec<_>>()
            .join(", ")
    );
}
