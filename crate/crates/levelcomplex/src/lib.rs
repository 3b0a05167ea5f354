//! Square-free initial ideals of the 2-minors of a generic matrix, their
//! Stanley-Reisner complexes, and the structural properties of the
//! resulting rings.
//!
//! Given an `m x n` grid of indeterminates (`2 <= m <= n`) and a
//! degree-reverse-lexicographic order driven by a priority permutation of
//! the cells, the 2-minors form a Groebner basis and their leading terms
//! generate a square-free monomial ideal. This crate:
//!
//! * builds the [built-in orders](order::MonomialOrder) (off-diagonal
//!   row-major, diagonal, plain row-major) and custom permutation orders,
//!   extracts each minor's leading term, and
//!   [verifies](groebner::verify_groebner_basis) the basis property by
//!   reducing every S-polynomial;
//! * constructs the [Stanley-Reisner complex](complex::stanley_reisner_complex)
//!   of the initial ideal, identifies its cone points, and — for the
//!   row-major order — cross-checks it against a
//!   [direct path description](complex::enumerate_path_facets) of the
//!   facets;
//! * checks the [quasimanifold property](complex::is_quasimanifold) and
//!   Cohen-Macaulayness, locates the
//!   [canonical module's generators](canonical::canonical_report) via link
//!   homology, decides levelness, and expands the module's graded
//!   dimensions three independent ways;
//! * computes [graded Betti tables](homology::betti_table) from reduced
//!   homology of vertex-subset restrictions, over the rationals or any
//!   prime field, and compares them against
//!   [embedded reference tables](fixtures::all_fixtures);
//! * orders the facets so that both the order and its reverse are
//!   [shellings](shelling::shelling_report), with each step's restriction
//!   face read off a purely combinatorial
//!   [vertex partition](shelling::vertex_partition).
//!
//! The `levelcomplex` binary exposes all of this as subcommands; the
//! `examples/` directory walks through each capability.

pub mod canonical;
pub mod complex;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod groebner;
pub mod homology;
pub mod linalg;
pub mod order;
pub mod report;
pub mod shape;
pub mod shelling;
pub mod workers;

pub use canonical::{canonical_report, CanonicalReport};
pub use complex::{
    enumerate_path_facets, is_quasimanifold, stanley_reisner_complex, Face, SimplicialComplex,
};
pub use error::Error;
pub use field::FieldSpec;
pub use groebner::verify_groebner_basis;
pub use homology::{betti_table, reduced_homology_dims, BettiTable};
pub use order::{initial_ideal_generators, Minor2, Monomial, MonomialOrder};
pub use report::{full_report, FullReport, RunOptions};
pub use shape::{MatrixShape, VariableId};
pub use shelling::{shelling_report, ShellingDirection, ShellingReport};
