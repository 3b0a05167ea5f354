//! Canonical modules of Stanley-Reisner rings: generators from link
//! homology, graded dimensions, Hilbert series duality, and levelness.
//!
//! For a face `sigma`, write `d(sigma)` for the dimension of the top
//! reduced homology of its link. The canonical module of a Cohen-Macaulay
//! Stanley-Reisner ring decomposes degree by degree over faces with
//! `d != 0`, its minimal generators sit on the inclusion-minimal such
//! faces, and the ring is level exactly when those all share one
//! cardinality.

use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

use crate::complex::{binomial, h_vector_from_f, Face, SimplicialComplex};
use crate::field::FieldSpec;
use crate::homology::reduced_homology_dims;
use crate::shape::{MatrixShape, VariableId};

/// `d(sigma)`: dimension of the top reduced homology of the link.
///
/// Facets have link `{ {} }` with `d = 1`; for the empty face this is the
/// top homology of the whole complex.
pub fn d_sigma(complex: &SimplicialComplex, sigma: Face, field: FieldSpec) -> usize {
    let link = complex.link(sigma).expect("caller passes faces");
    let dims = reduced_homology_dims(&link, field);
    match link.dim() {
        None => 0,
        Some(d) => dims.dim(d),
    }
}

/// `d(sigma)` for every face, keyed by face mask.
pub fn all_d_values(complex: &SimplicialComplex, field: FieldSpec) -> HashMap<Face, usize> {
    let mut map = HashMap::new();
    for group in complex.faces_by_card() {
        for &sigma in group {
            map.insert(sigma, d_sigma(complex, sigma, field));
        }
    }
    map
}

/// Inclusion-minimal faces with `d != 0`, with their `d` values, sorted
/// by cardinality then mask.
///
/// With `monotone = true` (sound for connected quasimanifolds, where `d`
/// is nondecreasing along inclusions) the ascending sweep skips every
/// superset of a found generator. Otherwise all faces are evaluated and
/// the minimal nonzero ones selected.
pub fn minimal_d_faces(
    complex: &SimplicialComplex,
    field: FieldSpec,
    monotone: bool,
) -> Vec<(Face, usize)> {
    let mut found: Vec<(Face, usize)> = Vec::new();
    if monotone {
        for group in complex.faces_by_card() {
            for &sigma in group {
                if found.iter().any(|(g, _)| g.subset_of(sigma)) {
                    continue;
                }
                let d = d_sigma(complex, sigma, field);
                if d != 0 {
                    found.push((sigma, d));
                }
            }
        }
    } else {
        let map = all_d_values(complex, field);
        let mut nonzero: Vec<(Face, usize)> =
            map.into_iter().filter(|&(_, d)| d != 0).collect();
        nonzero.sort_by_key(|&(f, _)| (f.card(), f));
        for &(sigma, d) in &nonzero {
            if !found.iter().any(|(g, _)| g.subset_of(sigma) && *g != sigma) {
                found.push((sigma, d));
            }
        }
        // `found` kept everything without a smaller nonzero subset; the
        // scan order already guarantees minimality and sortedness.
    }
    found.sort_by_key(|&(f, _)| (f.card(), f));
    found
}

/// The expected generator set for the path complex of an `m x n` grid:
/// faces with one cell in each column `m+1, ..., n`, rows weakly
/// increasing. For `m = n` this is the single empty face.
pub fn expected_generator_set(shape: MatrixShape) -> Vec<Vec<VariableId>> {
    let m = shape.m();
    let n = shape.n();
    let len = (n - m) as usize;
    let mut out = Vec::new();
    let mut rows = vec![1u16; len];
    loop {
        out.push(
            rows.iter()
                .enumerate()
                .map(|(t, &r)| VariableId::new(r, m + 1 + t as u16))
                .collect(),
        );
        // Next weakly increasing sequence over 1..=m.
        let mut k = len;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if rows[k] < m {
                let v = rows[k] + 1;
                for slot in rows.iter_mut().skip(k) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// Rule for expanding the graded dimensions of the canonical module from
/// the faces with nonzero `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradedRule {
    /// Degree-`i` monomials with support exactly a `k`-face: the face
    /// contributes `d(sigma) * C(i-1, k-1)` (compositions of `i` into
    /// `k` positive parts).
    Compositions,
    /// Power-of-cardinality variant: each `k`-face with `d != 0` counts
    /// `k^(i-k)`, regardless of `d`.
    PowerRule,
}

/// Per-cardinality data of the nonzero-`d` faces: `(count, sum of d)`.
pub fn gprime_profile(d_map: &HashMap<Face, usize>) -> BTreeMap<usize, (u64, u64)> {
    let mut profile = BTreeMap::new();
    for (&sigma, &d) in d_map {
        if d != 0 {
            let entry = profile.entry(sigma.card()).or_insert((0, 0));
            entry.0 += 1;
            entry.1 += d as u64;
        }
    }
    profile
}

/// Graded dimension of the canonical module in degrees `0..=upto`.
pub fn omega_dims(d_map: &HashMap<Face, usize>, rule: GradedRule, upto: usize) -> Vec<u64> {
    let profile = gprime_profile(d_map);
    (0..=upto)
        .map(|i| {
            profile
                .iter()
                .map(|(&k, &(count, weight))| match rule {
                    GradedRule::Compositions => positive_compositions(i, k) * weight,
                    GradedRule::PowerRule => {
                        if k > i {
                            0
                        } else if k == 0 {
                            u64::from(i == 0)
                        } else {
                            (k as u64).pow((i - k) as u32) * count
                        }
                    }
                })
                .sum()
        })
        .collect()
}

fn positive_compositions(i: usize, k: usize) -> u64 {
    // Number of ways to write i as an ordered sum of k positive parts.
    if k == 0 {
        u64::from(i == 0)
    } else if i < k {
        0
    } else {
        binomial((i - 1) as u64, (k - 1) as u64)
    }
}

/// Independent check of the compositions rule: enumerate all exponent
/// vectors of total degree `i` over the vertices and sum `d` over their
/// support faces.
pub fn omega_dims_by_enumeration(
    complex: &SimplicialComplex,
    d_map: &HashMap<Face, usize>,
    upto: usize,
) -> Vec<u64> {
    let nv = complex.vertices().len();
    let mut out = vec![0u64; upto + 1];
    // Recursive enumeration of exponent vectors by total degree.
    fn rec(
        vertex: usize,
        nv: usize,
        remaining: usize,
        support: Face,
        d_map: &HashMap<Face, usize>,
        out_slot: &mut u64,
    ) {
        if vertex == nv {
            if remaining == 0 {
                if let Some(&d) = d_map.get(&support) {
                    *out_slot += d as u64;
                }
            }
            return;
        }
        for e in 0..=remaining {
            let sup = if e > 0 { support.with_bit(vertex) } else { support };
            rec(vertex + 1, nv, remaining - e, sup, d_map, out_slot);
        }
    }
    for (i, slot) in out.iter_mut().enumerate() {
        rec(0, nv, i, Face::EMPTY, d_map, slot);
    }
    out
}

/// A rational Hilbert series `numerator(t) / (1-t)^denominator_power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Coefficients of the numerator from `t^0` upward.
    pub numerator: Vec<i64>,
    /// Power of `(1-t)` in the denominator.
    pub denominator_power: usize,
}

impl HilbertSeries {
    /// Hilbert series of a Stanley-Reisner ring from its face counts:
    /// the `h`-polynomial over `(1-t)^(dim+1)`.
    pub fn from_f_vector(f: &crate::complex::FVector) -> Self {
        let h = h_vector_from_f(f);
        HilbertSeries { numerator: h, denominator_power: f.0.len() - 1 }
            .reduced()
    }

    /// Cancels `(1-t)` factors shared with the denominator and trims
    /// trailing zero coefficients.
    pub fn reduced(mut self) -> Self {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        while self.denominator_power > 0 && self.numerator.iter().sum::<i64>() == 0 {
            // numerator(1) = 0: divide by (1 - t).
            let mut quotient = vec![0i64; self.numerator.len().saturating_sub(1)];
            let mut carry = 0i64;
            for (k, q) in quotient.iter_mut().enumerate() {
                carry += self.numerator[k];
                *q = carry;
            }
            self.numerator = quotient;
            self.denominator_power -= 1;
            while self.numerator.last() == Some(&0) {
                self.numerator.pop();
            }
        }
        self
    }

    /// Series of the canonical module of a Cohen-Macaulay ring of Krull
    /// dimension `d` (which must be the denominator power after
    /// reduction): `(-1)^d * H(1/t)`, rewritten over `(1-t)^d`.
    pub fn canonical_dual(&self) -> HilbertSeries {
        let d = self.denominator_power;
        let e = self.numerator.len().saturating_sub(1);
        // (-1)^d H(1/t) = t^(d-e) * reverse(numerator)(t) / (1-t)^d.
        let mut numerator = vec![0i64; d - e];
        numerator.extend(self.numerator.iter().rev());
        HilbertSeries { numerator, denominator_power: d }
    }

    /// Coefficients of the series expansion in degrees `0..=upto`.
    pub fn coefficients(&self, upto: usize) -> Vec<i64> {
        let p = self.denominator_power;
        (0..=upto)
            .map(|i| {
                self.numerator
                    .iter()
                    .enumerate()
                    .take(i + 1)
                    .map(|(k, &a)| {
                        let choose = if p == 0 {
                            u64::from(i == k)
                        } else {
                            binomial((i - k + p - 1) as u64, (p - 1) as u64)
                        };
                        a * choose as i64
                    })
                    .sum()
            })
            .collect()
    }
}

/// Faces violating the link-vanishing criterion for Cohen-Macaulayness:
/// `(face, degree, homology dimension)` with nonzero homology strictly
/// below the link's top degree.
pub fn reisner_violations(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> Vec<(Face, i32, usize)> {
    let mut violations = Vec::new();
    for group in complex.faces_by_card() {
        for &sigma in group {
            let link = complex.link(sigma).expect("enumerated face");
            let Some(top) = link.dim() else { continue };
            let dims = reduced_homology_dims(&link, field);
            for (deg, dim) in dims.nonzero() {
                if deg < top {
                    violations.push((sigma, deg, dim));
                }
            }
        }
    }
    violations
}

/// Summary of the canonical module of a Stanley-Reisner ring.
#[derive(Clone, Debug, Serialize)]
pub struct CanonicalReport {
    /// Minimal generators: vertex sets with their `d` multiplicities.
    pub generators: Vec<(Vec<VariableId>, usize)>,
    /// Cardinalities of the generators, sorted.
    pub degrees: Vec<usize>,
    /// Cohen-Macaulay type: sum of `d` over the generators.
    pub module_type: u64,
    /// Whether the ring is Cohen-Macaulay (link-vanishing criterion).
    pub cohen_macaulay: bool,
    /// Cohen-Macaulay with all generators in one degree.
    pub level: bool,
    /// Type one.
    pub gorenstein: bool,
    /// Generators match the expected column-wise set for the grid.
    pub matches_expected_generators: bool,
    /// `-min(degrees)`: the a-invariant of the ring on the complex's own
    /// vertex set (cone points excluded).
    pub a_invariant_reduced: i64,
    /// a-invariant over the full ambient polynomial ring (each cone point
    /// and extra ambient variable lowers it by one).
    pub a_invariant_ambient: i64,
    /// Graded dimensions of the canonical module, degrees `0..=upto`,
    /// by the compositions rule.
    pub omega_dims: Vec<u64>,
    /// Same degrees by the power rule.
    pub omega_dims_power_rule: Vec<u64>,
    /// Same degrees from Hilbert series duality (meaningful when CM).
    pub omega_dims_series: Vec<u64>,
    /// Human-readable observations (rule disagreements and the like).
    pub notes: Vec<String>,
}

/// Builds the canonical-module report.
///
/// Cone points of the input are restricted away first (they contribute
/// polynomial variables, not homology). `ambient_extra_vars` counts
/// ambient polynomial variables beyond the input complex's vertices;
/// together with the detected cone points it shifts the ambient
/// a-invariant. `upto` bounds the graded dimension listings.
pub fn canonical_report(
    input: &SimplicialComplex,
    field: FieldSpec,
    upto: usize,
    ambient_extra_vars: usize,
) -> CanonicalReport {
    let cone = input.cone_points();
    let complex;
    let working = if cone.is_empty() {
        input
    } else {
        let keep: Vec<VariableId> = input
            .vertices()
            .iter()
            .copied()
            .filter(|v| !cone.contains(v))
            .collect();
        complex = input.restrict(&keep).expect("own vertices");
        &complex
    };

    let violations = reisner_violations(working, field);
    let cohen_macaulay = violations.is_empty();
    let quasimanifold =
        crate::complex::is_quasimanifold(working, field).is_quasimanifold;

    let d_map = all_d_values(working, field);
    let generators = {
        let mut minimal: Vec<(Face, usize)> = d_map
            .iter()
            .filter(|&(_, &d)| d != 0)
            .map(|(&f, &d)| (f, d))
            .collect();
        minimal.sort_by_key(|&(f, _)| (f.card(), f));
        let mut kept: Vec<(Face, usize)> = Vec::new();
        for &(sigma, d) in &minimal {
            if !kept.iter().any(|&(g, _)| g.subset_of(sigma)) {
                kept.push((sigma, d));
            }
        }
        kept
    };
    if quasimanifold {
        debug_assert_eq!(generators, minimal_d_faces(working, field, true));
    }

    let degrees: Vec<usize> = generators.iter().map(|&(f, _)| f.card()).collect();
    let module_type: u64 = generators.iter().map(|&(_, d)| d as u64).sum();
    let level = cohen_macaulay
        && !degrees.is_empty()
        && degrees.iter().all(|&d| d == degrees[0]);
    let gorenstein = cohen_macaulay && module_type == 1;

    let expected: Vec<Face> = expected_generator_set(working.shape())
        .iter()
        .filter_map(|cells| working.face_from_vertices(cells).ok())
        .collect();
    let got: Vec<Face> = generators.iter().map(|&(f, _)| f).collect();
    let matches_expected_generators = {
        let mut e = expected.clone();
        let mut g = got.clone();
        e.sort();
        g.sort();
        e == g && expected.len() == got.len()
    };

    let a_invariant_reduced = -(degrees.iter().min().copied().unwrap_or(0) as i64);
    let a_invariant_ambient =
        a_invariant_reduced - cone.len() as i64 - ambient_extra_vars as i64;

    let omega = omega_dims(&d_map, GradedRule::Compositions, upto);
    let omega_power = omega_dims(&d_map, GradedRule::PowerRule, upto);
    let omega_series: Vec<u64> = if cohen_macaulay {
        HilbertSeries::from_f_vector(&working.f_vector())
            .canonical_dual()
            .coefficients(upto)
            .iter()
            .map(|&c| c.max(0) as u64)
            .collect()
    } else {
        Vec::new()
    };

    let mut notes = Vec::new();
    if omega != omega_power {
        let diffs: Vec<String> = omega
            .iter()
            .zip(&omega_power)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| format!("degree {i}: {a} (compositions) vs {b} (power rule)"))
            .collect();
        notes.push(format!("graded dimension rules disagree: {}", diffs.join("; ")));
    }
    if cohen_macaulay && omega != omega_series {
        notes.push("compositions rule disagrees with Hilbert series duality".into());
    }
    if !cohen_macaulay {
        notes.push(format!(
            "not Cohen-Macaulay: {} link(s) with low-degree homology",
            violations.len()
        ));
    }

    CanonicalReport {
        generators: generators
            .iter()
            .map(|&(f, d)| (working.face_vertices(f), d))
            .collect(),
        degrees,
        module_type,
        cohen_macaulay,
        level,
        gorenstein,
        matches_expected_generators,
        a_invariant_reduced,
        a_invariant_ambient,
        omega_dims: omega,
        omega_dims_power_rule: omega_power,
        omega_dims_series: omega_series,
        notes,
    }
}

/// Closed-form count of the cardinality-`i` faces with nonzero `d` in the
/// path complex of an `m x n` grid, as a sum of multinomial terms over
/// the number of full rows and full columns of the face.
pub fn gprime_closed_formula(shape: MatrixShape, i: usize) -> u64 {
    let m = shape.m() as i64;
    let n = shape.n() as i64;
    let i = i as i64;
    let mut total = 0u64;
    for c in 0..=(m + i - n) {
        for r in (m + i + 1 - n - c)..=(m - c).min(i) {
            let parts = [r + c + n - m - i - 1, m + i - n - c, i - r];
            if r < 0 || parts.iter().any(|&p| p < 0) {
                continue;
            }
            let multinomial = factorial((i - 1) as u64)
                / (factorial(parts[0] as u64)
                    * factorial(parts[1] as u64)
                    * factorial(parts[2] as u64));
            total += binomial(m as u64, r as u64)
                * binomial((m - r) as u64, c as u64)
                * multinomial;
        }
    }
    total
}

fn factorial(k: u64) -> u64 {
    (1..=k).product::<u64>().max(1)
}
