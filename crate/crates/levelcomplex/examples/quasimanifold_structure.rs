//! Quasimanifold structure and Cohen-Macaulayness of the path complex.
//!
//! The restricted Stanley-Reisner complex of the row-major initial ideal
//! is a quasimanifold: pure, every codimension-one face lies in at most
//! two facets, and every smaller face (the empty one included) has a
//! connected link. Together with the link-vanishing (Reisner) criterion
//! this gives Cohen-Macaulayness over any field. This example checks all
//! of that for a range of shapes, over the rationals and over GF(2), and
//! also confirms that the Stanley-Reisner construction from the initial
//! ideal agrees with the direct staircase-path enumeration.
//!
//! Run with: cargo run --example quasimanifold_structure

use levelcomplex::canonical::reisner_violations;
use levelcomplex::complex::{enumerate_path_facets, is_quasimanifold, stanley_reisner_complex};
use levelcomplex::field::FieldSpec;
use levelcomplex::order::{initial_ideal_generators, MonomialOrder};
use levelcomplex::shape::MatrixShape;

fn main() {
    let fields = [FieldSpec::Rationals, FieldSpec::PrimeField(2)];

    println!(
        "{:>5} {:>6} {:>7} {:>6} {:>14} {:>9}",
        "shape", "field", "facets", "pure", "quasimanifold", "reisner"
    );
    for m in 2..=4u16 {
        for n in m..=5u16 {
            let shape = MatrixShape::new(m, n).expect("valid shape");

            // Two roads to the same complex: leading terms -> non-faces,
            // versus direct staircase-path facets (after dropping the
            // diagonal cone points, which sit in every facet).
            let generators =
                initial_ideal_generators(shape, &MonomialOrder::PaperRows).expect("fits");
            let from_ideal = stanley_reisner_complex(shape, &generators).expect("small grid");
            let keep: Vec<_> = from_ideal
                .vertices()
                .iter()
                .copied()
                .filter(|v| !from_ideal.cone_points().contains(v))
                .collect();
            let restricted = from_ideal.restrict(&keep).expect("own vertices");
            let paths = enumerate_path_facets(shape);
            assert_eq!(
                restricted.facets().len(),
                paths.facets().len(),
                "facet counts differ at {m}x{n}"
            );
            assert!(
                restricted.contains_complex(&paths) && paths.contains_complex(&restricted),
                "the two constructions disagree at {m}x{n}"
            );

            for field in fields {
                let quasi = is_quasimanifold(&restricted, field);
                let violations = reisner_violations(&restricted, field);
                assert!(quasi.is_quasimanifold, "not a quasimanifold at {m}x{n}");
                assert!(violations.is_empty(), "Reisner violation at {m}x{n}");
                println!(
                    "{:>5} {:>6} {:>7} {:>6} {:>14} {:>9}",
                    format!("{m}x{n}"),
                    format!("{field:?}")
                        .replace("PrimeField(2)", "GF(2)")
                        .replace("Rationals", "Q"),
                    restricted.facets().len(),
                    quasi.pure,
                    quasi.is_quasimanifold,
                    if violations.is_empty() { "clean" } else { "violated" },
                );
            }
        }
    }
    println!("\nboth constructions agree and every case is a Cohen-Macaulay quasimanifold");
}
