//! One-call pipeline: from a matrix size and monomial order to a combined
//! structural report, with text and JSON renderings.

use serde_json::json;

use crate::canonical::{canonical_report, CanonicalReport};
use crate::complex::{
    expected_path_facet_count, h_vector_from_f, is_quasimanifold, stanley_reisner_complex,
    QuasimanifoldReport, SimplicialComplex,
};
use crate::error::Error;
use crate::field::FieldSpec;
use crate::fixtures::{
    compare_tables, fact_checks, fixture, two_row_minors_table, FactCheck, TableMismatch,
};
use crate::groebner::verify_groebner_basis;
use crate::homology::{betti_table_with_limit, BettiTable, DEFAULT_SWEEP_LIMIT};
use crate::order::{initial_ideal_generators, MonomialOrder};
use crate::shape::{MatrixShape, VariableId};
use crate::shelling::{shelling_report, ShellingDirection, ShellingReport};

/// Options for [`full_report`].
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Coefficient field for all homology computations.
    pub field: FieldSpec,
    /// Largest degree in the graded dimension listings (defaults to `n`).
    pub upto: Option<usize>,
    /// Vertex cap for the Betti sweep.
    pub sweep_limit: usize,
    /// Run the division check on the generating set.
    pub with_groebner: bool,
    /// Compute the graded Betti table.
    pub with_betti: bool,
    /// Attempt both shelling directions.
    pub with_shelling: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            field: FieldSpec::Rationals,
            upto: None,
            sweep_limit: DEFAULT_SWEEP_LIMIT,
            with_groebner: true,
            with_betti: true,
            with_shelling: true,
        }
    }
}

/// Combined structural report for one matrix size and monomial order.
#[derive(Clone, Debug)]
pub struct FullReport {
    pub shape: MatrixShape,
    pub order_label: String,
    pub field: FieldSpec,
    /// Number of generators of the initial ideal (one per 2-minor).
    pub num_generators: usize,
    /// Division check: `(pairs checked, all reduced to zero)`.
    pub groebner: Option<(usize, bool)>,
    /// Cone points of the full Stanley-Reisner complex.
    pub cone_points: Vec<VariableId>,
    /// The complex restricted to the non-cone vertices.
    pub complex: SimplicialComplex,
    /// Facet count predicted by the path formula (row-major order only).
    pub expected_facets: Option<u64>,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    pub quasimanifold: QuasimanifoldReport,
    pub canonical: CanonicalReport,
    pub betti: Option<BettiTable>,
    /// Structural facts checked on the computed table.
    pub betti_facts: Vec<FactCheck>,
    /// Differences against the matching embedded reference table.
    pub fixture_comparison: Option<(String, Vec<TableMismatch>)>,
    pub shelling_ascending: Option<ShellingReport>,
    pub shelling_descending: Option<ShellingReport>,
    /// Anything skipped or noteworthy.
    pub notes: Vec<String>,
}

/// Runs the whole pipeline for one matrix size and order.
pub fn full_report(
    shape: MatrixShape,
    order: &MonomialOrder,
    opts: &RunOptions,
) -> Result<FullReport, Error> {
    let mut notes = Vec::new();
    let field = opts.field.validate()?;

    let generators = initial_ideal_generators(shape, order)?;
    let groebner = if opts.with_groebner {
        let report = verify_groebner_basis(shape, order)?;
        Some((report.pairs_checked, report.is_groebner_basis()))
    } else {
        None
    };

    let full = stanley_reisner_complex(shape, &generators)?;
    let cone_points = full.cone_points();
    let keep: Vec<VariableId> = full
        .vertices()
        .iter()
        .copied()
        .filter(|v| !cone_points.contains(v))
        .collect();
    let complex = full.restrict(&keep)?;

    let expected_facets = (order.label() == "rows")
        .then(|| expected_path_facet_count(shape));

    let f_vector = complex.f_vector();
    let h_vector = h_vector_from_f(&f_vector);
    let quasimanifold = is_quasimanifold(&complex, field);

    let upto = opts.upto.unwrap_or(shape.n() as usize);
    let canonical = canonical_report(&complex, field, upto, cone_points.len());

    let mut betti = None;
    let mut betti_facts = Vec::new();
    let mut fixture_comparison = None;
    if opts.with_betti {
        match betti_table_with_limit(&complex, field, opts.sweep_limit) {
            Ok(table) => {
                let (m, n) = (shape.m(), shape.n());
                let reference = fixture(&format!("minors-{m}x{n}"))
                    .map(|f| f.table)
                    .or_else(|| (m == 2).then(|| two_row_minors_table(n)));
                let expected_pdim = ((m - 1) as usize) * ((n - 1) as usize);
                let expected_reg = (m - 1) as usize;
                betti_facts = fact_checks(
                    &table,
                    reference.as_ref(),
                    Some(expected_pdim),
                    Some(expected_reg),
                );
                let fixture_id = match order.label() {
                    "rows" => Some(format!("rows-{m}x{n}")),
                    "natural" => Some(format!("natural-{m}x{n}")),
                    "diag" => Some(format!("diago-{m}x{n}")),
                    _ => None,
                };
                if let Some(f) = fixture_id.as_deref().and_then(fixture) {
                    fixture_comparison =
                        Some((f.id.to_string(), compare_tables(&table, &f.table)));
                }
                betti = Some(table);
            }
            Err(Error::SweepGuard { vertices, limit }) => {
                notes.push(format!(
                    "Betti sweep skipped: {vertices} vertices exceed the cap of {limit} \
                     (raise the cap to force)"
                ));
            }
            Err(e) => return Err(e),
        }
    }

    let mut shelling_ascending = None;
    let mut shelling_descending = None;
    if opts.with_shelling {
        match shelling_report(&complex, ShellingDirection::Ascending) {
            Ok(r) => shelling_ascending = Some(r),
            Err(e) => notes.push(format!("ascending shelling skipped: {e}")),
        }
        match shelling_report(&complex, ShellingDirection::Descending) {
            Ok(r) => shelling_descending = Some(r),
            Err(e) => notes.push(format!("descending shelling skipped: {e}")),
        }
    }

    Ok(FullReport {
        shape,
        order_label: order.label().to_string(),
        field,
        num_generators: generators.len(),
        groebner,
        cone_points,
        complex,
        expected_facets,
        f_vector: f_vector.0,
        h_vector,
        quasimanifold,
        canonical,
        betti,
        betti_facts,
        fixture_comparison,
        shelling_ascending,
        shelling_descending,
        notes,
    })
}

impl FullReport {
    /// Human-readable multi-section rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        push(&mut out, format!(
            "== {}x{} matrix, order {}, field {} ==",
            self.shape.m(), self.shape.n(), self.order_label, self.field
        ));
        push(&mut out, format!("initial ideal generators: {}", self.num_generators));
        if let Some((pairs, ok)) = self.groebner {
            push(&mut out, format!(
                "division check: {pairs} pairs, {}",
                if ok { "all reduce to zero" } else { "FAILED" }
            ));
        }
        push(&mut out, format!(
            "cone points: {}",
            if self.cone_points.is_empty() {
                "none".to_string()
            } else {
                self.cone_points.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            }
        ));
        push(&mut out, format!(
            "complex: {} vertices, {} facets{}{}",
            self.complex.vertices().len(),
            self.complex.facets().len(),
            self.complex
                .dim()
                .map(|d| format!(", dimension {d}"))
                .unwrap_or_default(),
            self.expected_facets
                .map(|e| format!(" (path formula predicts {e})"))
                .unwrap_or_default(),
        ));
        push(&mut out, format!("f-vector: {:?}", self.f_vector));
        push(&mut out, format!("h-vector: {:?}", self.h_vector));
        push(&mut out, format!(
            "quasimanifold: {} (pure: {}, crowded ridges: {}, disconnected links: {})",
            self.quasimanifold.is_quasimanifold,
            self.quasimanifold.pure,
            self.quasimanifold.overcrowded_ridges.len(),
            self.quasimanifold.disconnected_links.len()
        ));

        let c = &self.canonical;
        push(&mut out, format!(
            "canonical module: {} generator(s) in degrees {:?}, type {}",
            c.generators.len(), c.degrees, c.module_type
        ));
        push(&mut out, format!(
            "cohen-macaulay: {}   level: {}   gorenstein: {}   expected generators: {}",
            c.cohen_macaulay, c.level, c.gorenstein,
            if c.matches_expected_generators { "match" } else { "MISMATCH" }
        ));
        push(&mut out, format!(
            "a-invariant: {} (reduced), {} (ambient)",
            c.a_invariant_reduced, c.a_invariant_ambient
        ));
        push(&mut out, format!("canonical graded dims:        {:?}", c.omega_dims));
        push(&mut out, format!("canonical graded dims (power rule): {:?}", c.omega_dims_power_rule));
        if !c.omega_dims_series.is_empty() {
            push(&mut out, format!("canonical graded dims (series):     {:?}", c.omega_dims_series));
        }
        for note in &c.notes {
            push(&mut out, format!("note: {note}"));
        }

        if let Some(table) = &self.betti {
            push(&mut out, String::new());
            push(&mut out, "graded Betti numbers:".to_string());
            out.push_str(&table.render_text());
            push(&mut out, format!(
                "level by last column: {}",
                table.last_column_single_degree()
            ));
            for fact in &self.betti_facts {
                push(&mut out, format!(
                    "fact: {} ... {}{}",
                    fact.name,
                    if fact.passed { "ok" } else { "FAILED" },
                    if fact.passed || fact.details.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", fact.details)
                    }
                ));
            }
            if let Some((id, mismatches)) = &self.fixture_comparison {
                if mismatches.is_empty() {
                    push(&mut out, format!("matches reference table {id}"));
                } else {
                    push(&mut out, format!(
                        "differs from reference table {id} at {} position(s):",
                        mismatches.len()
                    ));
                    for mm in mismatches {
                        push(&mut out, format!(
                            "  ({},{}): reference {} vs computed {}",
                            mm.i, mm.j, mm.expected, mm.computed
                        ));
                    }
                }
            }
        }

        for (label, report) in [
            ("ascending", &self.shelling_ascending),
            ("descending", &self.shelling_descending),
        ] {
            if let Some(r) = report {
                push(&mut out, format!(
                    "{label} shelling: {} ({} facets, h {:?}, partition agrees: {})",
                    if r.valid { "valid" } else { "INVALID" },
                    r.order.len(),
                    r.h_vector,
                    r.partition_mismatch_steps.is_empty() && r.partition_predicts_attachment
                ));
            }
        }
        for note in &self.notes {
            push(&mut out, format!("note: {note}"));
        }
        out
    }

    /// JSON rendering of the whole report.
    pub fn to_json(&self) -> serde_json::Value {
        let complex = &self.complex;
        let faces = |fs: &[crate::complex::Face]| -> Vec<Vec<[u16; 2]>> {
            fs.iter()
                .map(|&f| complex.face_vertices(f).iter().map(|v| [v.row, v.col]).collect())
                .collect()
        };
        json!({
            "m": self.shape.m(),
            "n": self.shape.n(),
            "order": self.order_label,
            "field": self.field.to_string(),
            "num_generators": self.num_generators,
            "groebner": self.groebner.map(|(pairs, ok)| json!({
                "pairs_checked": pairs,
                "all_reduce_to_zero": ok,
            })),
            "cone_points": self.cone_points.iter().map(|v| [v.row, v.col]).collect::<Vec<_>>(),
            "complex": complex.to_json(),
            "expected_facets": self.expected_facets,
            "f_vector": self.f_vector,
            "h_vector": self.h_vector,
            "quasimanifold": {
                "verdict": self.quasimanifold.is_quasimanifold,
                "pure": self.quasimanifold.pure,
                "overcrowded_ridges": faces(&self.quasimanifold.overcrowded_ridges),
                "disconnected_links": faces(&self.quasimanifold.disconnected_links),
            },
            "canonical": {
                "generators": self.canonical.generators.iter().map(|(cells, d)| json!({
                    "face": cells.iter().map(|v| [v.row, v.col]).collect::<Vec<_>>(),
                    "multiplicity": d,
                })).collect::<Vec<_>>(),
                "degrees": self.canonical.degrees,
                "type": self.canonical.module_type,
                "cohen_macaulay": self.canonical.cohen_macaulay,
                "level": self.canonical.level,
                "gorenstein": self.canonical.gorenstein,
                "matches_expected_generators": self.canonical.matches_expected_generators,
                "a_invariant": {
                    "reduced": self.canonical.a_invariant_reduced,
                    "ambient": self.canonical.a_invariant_ambient,
                },
                "omega_dims": self.canonical.omega_dims,
                "omega_dims_power_rule": self.canonical.omega_dims_power_rule,
                "omega_dims_series": self.canonical.omega_dims_series,
                "notes": self.canonical.notes,
            },
            "betti": self.betti.as_ref().map(|t| t.to_json()),
            "betti_facts": self.betti_facts.iter().map(|f| json!({
                "name": f.name,
                "passed": f.passed,
                "details": f.details,
            })).collect::<Vec<_>>(),
            "fixture_comparison": self.fixture_comparison.as_ref().map(|(id, mms)| json!({
                "fixture": id,
                "mismatches": mms.iter().map(|mm| json!({
                    "i": mm.i, "j": mm.j,
                    "reference": mm.expected,
                    "computed": mm.computed,
                })).collect::<Vec<_>>(),
            })),
            "shelling": {
                "ascending": self.shelling_ascending.as_ref().map(shelling_json),
                "descending": self.shelling_descending.as_ref().map(shelling_json),
            },
            "notes": self.notes,
        })
    }
}

fn shelling_json(r: &ShellingReport) -> serde_json::Value {
    json!({
        "direction": format!("{:?}", r.direction),
        "valid": r.valid,
        "first_invalid_step": r.first_invalid_step,
        "num_facets": r.order.len(),
        "h_vector": r.h_vector,
        "h_from_f": r.h_from_f,
        "partition_mismatch_steps": r.partition_mismatch_steps,
        "partition_predicts_attachment": r.partition_predicts_attachment,
        "restriction_faces": r
            .restriction_faces
            .iter()
            .map(|f| f.iter().map(|v| [v.row, v.col]).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "star_removals_only_in_own_facet": r.star_removals_only_in_own_facet,
        "stars_all_empty": r.stars_all_empty,
    })
}
