//! Simplicial homology over a chosen field, and graded Betti numbers of
//! Stanley-Reisner rings via vertex-subset restriction.
//!
//! Chain complexes here are *augmented*: the empty face spans the degree
//! `-1` chain group, so `H_{-1}` is reported uniformly (rank one exactly
//! for the complex `{ {} }`) and relative homology with respect to the
//! contrastar of a face agrees with the reduced homology of its link
//! degree by degree.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

use crate::complex::{Face, SimplicialComplex};
use crate::error::Error;
use crate::field::FieldSpec;
use crate::linalg;

/// Dimensions of homology in each degree, indexed from `-1` upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDims {
    /// Degree of `dims[0]`.
    offset: i32,
    dims: Vec<usize>,
}

impl HomologyDims {
    /// Homology dimension in geometric degree `i` (zero outside range).
    pub fn dim(&self, i: i32) -> usize {
        let k = i - self.offset;
        if k < 0 {
            return 0;
        }
        self.dims.get(k as usize).copied().unwrap_or(0)
    }

    /// The degrees with nonzero homology, with their dimensions.
    pub fn nonzero(&self) -> Vec<(i32, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d != 0)
            .map(|(k, &d)| (self.offset + k as i32, d))
            .collect()
    }

    /// True when every degree vanishes.
    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Core computation: homology of the (relative) chain complex whose basis
/// in cardinality `c` is `groups[c]` (masks containing `sigma`), with the
/// boundary dropping only vertices outside `sigma`.
///
/// With `sigma = 0` and `groups` the full face list of a complex, this is
/// reduced homology. Cardinality `c` sits in geometric degree `c - 1`.
fn homology_from_groups(groups: &[Vec<u64>], sigma: u64, field: FieldSpec) -> HomologyDims {
    if groups.is_empty() {
        return HomologyDims { offset: -1, dims: Vec::new() };
    }
    let top = groups.len() - 1;
    // Index maps per cardinality for row lookup.
    let index: Vec<HashMap<u64, usize>> = groups
        .iter()
        .map(|g| g.iter().enumerate().map(|(k, &f)| (f, k)).collect())
        .collect();
    // ranks[c] = rank of the boundary map from cardinality c to c-1.
    let mut ranks = vec![0usize; top + 2];
    for c in 1..=top {
        if groups[c].is_empty() || groups[c - 1].is_empty() {
            continue;
        }
        let mut rows = vec![vec![0i64; groups[c].len()]; groups[c - 1].len()];
        for (col, &tau) in groups[c].iter().enumerate() {
            let mut sign = 1i64;
            for v in Face(tau).bits() {
                if sigma >> v & 1 == 0 {
                    let target = tau & !(1u64 << v);
                    rows[index[c - 1][&target]][col] = sign;
                }
                sign = -sign;
            }
        }
        ranks[c] = linalg::rank(&rows, field);
    }
    let sigma_card = sigma.count_ones() as i32;
    let offset = sigma_card - 1;
    let dims = (0..=top)
        .map(|c| groups[c].len() - ranks[c] - ranks[c + 1])
        .collect();
    HomologyDims { offset, dims }
}

/// Reduced homology dimensions of a complex over `field`.
///
/// The void complex has no homology in any degree; the complex `{ {} }`
/// has a single dimension in degree `-1`.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: FieldSpec) -> HomologyDims {
    let groups: Vec<Vec<u64>> = complex
        .faces_by_card()
        .iter()
        .map(|g| g.iter().map(|f| f.0).collect())
        .collect();
    homology_from_groups(&groups, 0, field)
}

/// Relative homology `H_*(complex, contrastar(sigma))`.
///
/// The relative chain complex is spanned by the faces containing `sigma`;
/// for the empty face the contrastar is void and this is plain reduced
/// homology. Degrees are geometric (a relative class in degree `i` comes
/// from an `i`-dimensional face).
pub fn relative_homology_dims(
    complex: &SimplicialComplex,
    sigma: Face,
    field: FieldSpec,
) -> Result<HomologyDims, Error> {
    if !complex.is_face(sigma) {
        return Err(Error::NotAFace);
    }
    let all = complex.faces_by_card();
    let low = sigma.card();
    let groups: Vec<Vec<u64>> = all[low..]
        .iter()
        .map(|g| g.iter().filter(|f| sigma.subset_of(**f)).map(|f| f.0).collect())
        .collect();
    Ok(homology_from_groups(&groups, sigma.0, field))
}

/// A table of graded Betti numbers `beta_{i,j}`, `i` the homological
/// position and `j` the internal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    /// Nonzero entries only.
    pub entries: BTreeMap<(usize, usize), u64>,
    /// Vertex count of the swept complex (the maximum possible `j`).
    pub num_vars: usize,
    /// Field the homology ran over.
    pub field: FieldSpec,
}

impl BettiTable {
    /// Builds a table from explicit entries, dropping zeros.
    pub fn from_entries(
        entries: impl IntoIterator<Item = (usize, usize, u64)>,
        num_vars: usize,
        field: FieldSpec,
    ) -> Self {
        let entries = entries
            .into_iter()
            .filter(|&(_, _, b)| b != 0)
            .map(|(i, j, b)| ((i, j), b))
            .collect();
        BettiTable { entries, num_vars, field }
    }

    /// `beta_{i,j}` (zero when absent).
    pub fn beta(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Largest homological position with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Largest `j - i` over the nonzero entries.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Alternating column sums `sum_i (-1)^i beta_{i,j}` keyed by `j`.
    ///
    /// These equal the coefficients of the numerator of the Hilbert
    /// series, so two resolutions of the same module must agree on them.
    pub fn alternating_sums(&self) -> BTreeMap<usize, i64> {
        let mut sums = BTreeMap::new();
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            *sums.entry(j).or_insert(0) += sign * b as i64;
        }
        sums.retain(|_, v| *v != 0);
        sums
    }

    /// True when every entry of `other` is bounded by this table's entry.
    pub fn dominates(&self, other: &BettiTable) -> bool {
        other.entries.iter().all(|(&(i, j), &b)| self.beta(i, j) >= b)
    }

    /// Largest degree appearing in each column: `t_i = max { j : beta_{i,j} != 0 }`.
    pub fn max_degrees(&self) -> Vec<Option<usize>> {
        let pd = self.projective_dimension();
        let mut out = vec![None; pd + 1];
        for &(i, j) in self.entries.keys() {
            let slot = &mut out[i];
            *slot = Some(slot.map_or(j, |cur: usize| cur.max(j)));
        }
        out
    }

    /// True when `t_0 < t_1 < ... < t_pd` (all columns nonempty).
    pub fn max_degrees_strictly_increasing(&self) -> bool {
        let ts = self.max_degrees();
        ts.iter().all(|t| t.is_some())
            && ts.windows(2).all(|w| w[0].unwrap() < w[1].unwrap())
    }

    /// True when the final column has exactly one nonzero degree.
    pub fn last_column_single_degree(&self) -> bool {
        let pd = self.projective_dimension();
        self.entries.keys().filter(|&&(i, _)| i == pd).count() == 1
    }

    /// Renders the table with rows indexed by `j - i` and columns by `i`.
    pub fn render_text(&self) -> String {
        if self.entries.is_empty() {
            return "(empty Betti table)\n".to_string();
        }
        let pd = self.projective_dimension();
        let reg = self.regularity();
        let min_row = self.entries.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
        let totals: Vec<u64> = (0..=pd)
            .map(|i| (min_row..=reg).map(|r| self.beta(i, i + r)).sum())
            .collect();
        let cell = |s: String| format!("{s:>7}");
        let mut out = String::new();
        out.push_str(&cell(String::new()));
        for i in 0..=pd {
            out.push_str(&cell(i.to_string()));
        }
        out.push('\n');
        out.push_str(&cell("total:".into()));
        for t in &totals {
            out.push_str(&cell(t.to_string()));
        }
        out.push('\n');
        for r in min_row..=reg {
            out.push_str(&cell(format!("{r}:")));
            for i in 0..=pd {
                let b = self.beta(i, i + r);
                out.push_str(&cell(if b == 0 { ".".into() } else { b.to_string() }));
            }
            out.push('\n');
        }
        out
    }

    /// CSV rows `i,j,beta`, sorted.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("i,j,beta\n");
        for (&(i, j), &b) in &self.entries {
            out.push_str(&format!("{i},{j},{b}\n"));
        }
        out
    }

    /// JSON document with sorted entry list.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: usize,
            beta: u64,
        }
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|(&(i, j), &beta)| Entry { i, j, beta })
            .collect();
        serde_json::json!({
            "field": self.field.to_string(),
            "num_vars": self.num_vars,
            "projective_dimension": self.projective_dimension(),
            "regularity": self.regularity(),
            "entries": entries,
        })
    }
}

/// Default cap on the vertex-subset sweep (`2^24` subsets).
pub const DEFAULT_SWEEP_LIMIT: usize = 24;

/// Graded Betti numbers of the Stanley-Reisner ring of `complex`:
/// `beta_{i,j} = sum over j-element vertex subsets W of
/// dim H~_{j-i-1}(complex restricted to W)`.
///
/// Uses the default vertex cap of [`DEFAULT_SWEEP_LIMIT`].
pub fn betti_table(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable, Error> {
    betti_table_with_limit(complex, field, DEFAULT_SWEEP_LIMIT)
}

/// Like [`betti_table`] with an explicit vertex cap; the sweep visits
/// `2^v` subsets, so raise the cap knowingly.
pub fn betti_table_with_limit(
    complex: &SimplicialComplex,
    field: FieldSpec,
    limit: usize,
) -> Result<BettiTable, Error> {
    let nv = complex.vertices().len();
    if nv > limit {
        return Err(Error::SweepGuard { vertices: nv, limit });
    }
    if complex.facets().is_empty() {
        return Ok(BettiTable::from_entries([], nv, field));
    }

    // Adjacency of the 1-skeleton, and whether the complex is flag
    // (cliques of the skeleton = faces). For flag complexes restrictions
    // are clique complexes of the restricted graph, which both enables
    // direct clique enumeration per subset and makes the cone shortcut
    // sound: a vertex adjacent to all others in W makes the restriction a
    // cone, hence acyclic.
    let adjacency = skeleton_adjacency(complex);
    let flag = is_flag(complex, &adjacency);

    let global_faces: Vec<Vec<u64>> = complex
        .faces_by_card()
        .iter()
        .map(|g| g.iter().map(|f| f.0).collect())
        .collect();

    let total: u64 = 1u64 << nv;
    const SHARD: u64 = 1 << 12;
    let shards = total.div_ceil(SHARD);

    let merged: BTreeMap<(usize, usize), u64> = (0..shards)
        .into_par_iter()
        .map(|s| {
            let mut local: BTreeMap<(usize, usize), u64> = BTreeMap::new();
            let start = s * SHARD;
            let end = (start + SHARD).min(total);
            for w in start..end {
                if flag && is_cone_subset(w, &adjacency) {
                    continue;
                }
                let groups = if flag {
                    cliques_by_card(w, &adjacency)
                } else {
                    restrict_faces(&global_faces, w)
                };
                let dims = homology_from_groups(&groups, 0, field);
                let j = w.count_ones() as usize;
                for (deg, dim) in dims.nonzero() {
                    let i = j as i32 - deg - 1;
                    debug_assert!(i >= 0);
                    *local.entry((i as usize, j)).or_insert(0) += dim as u64;
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });

    Ok(BettiTable { entries: merged, num_vars: nv, field })
}

/// Bitset adjacency of the 1-skeleton.
fn skeleton_adjacency(complex: &SimplicialComplex) -> Vec<u64> {
    let nv = complex.vertices().len();
    let mut adjacency = vec![0u64; nv];
    if let Some(edges) = complex.faces_by_card().get(2) {
        for e in edges {
            let bits: Vec<usize> = e.bits().collect();
            adjacency[bits[0]] |= 1 << bits[1];
            adjacency[bits[1]] |= 1 << bits[0];
        }
    }
    adjacency
}

/// Whether the faces are exactly the cliques of the 1-skeleton.
fn is_flag(complex: &SimplicialComplex, adjacency: &[u64]) -> bool {
    // Every clique is a face iff every maximal clique is; check that each
    // facet is a clique and each maximal clique is a face.
    for &f in complex.facets() {
        for v in f.bits() {
            let others = f.0 & !(1u64 << v);
            if others & !adjacency[v] != 0 {
                return false;
            }
        }
    }
    // Greedy check: for each non-face clique candidate we would need full
    // enumeration; instead grow each edge greedily inside each subset is
    // too costly. Compare face counts: a flag complex has as many faces
    // as its skeleton has cliques, and cliques are at least the faces, so
    // counting cliques suffices.
    let clique_count = count_cliques(u64_mask(complex.vertices().len()), adjacency);
    clique_count == complex.num_faces()
}

fn u64_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn count_cliques(w: u64, adjacency: &[u64]) -> usize {
    // Counts the current clique plus every extension by vertices from
    // `allowed`; extending only with higher-indexed vertices counts each
    // clique exactly once. The top call counts the empty clique.
    fn rec(allowed: u64, adjacency: &[u64]) -> usize {
        let mut count = 1;
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let higher = !((1u64 << v) | ((1u64 << v) - 1));
            count += rec(allowed & adjacency[v] & higher, adjacency);
        }
        count
    }
    rec(w, adjacency)
}

/// True when some vertex of `w` is adjacent to every other vertex of `w`
/// (the restriction is then a cone for flag complexes). Singletons count.
fn is_cone_subset(w: u64, adjacency: &[u64]) -> bool {
    if w == 0 {
        return false;
    }
    let mut rest = w;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if w & !adjacency[v] & !(1u64 << v) == 0 {
            return true;
        }
    }
    false
}

/// All cliques of the skeleton inside `w`, grouped by cardinality
/// (these are the faces of the restriction for a flag complex).
fn cliques_by_card(w: u64, adjacency: &[u64]) -> Vec<Vec<u64>> {
    let mut groups: Vec<Vec<u64>> = vec![vec![0]];
    fn rec(clique: u64, allowed: u64, adjacency: &[u64], groups: &mut Vec<Vec<u64>>) {
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = clique | 1u64 << v;
            let card = next.count_ones() as usize;
            if groups.len() <= card {
                groups.push(Vec::new());
            }
            groups[card].push(next);
            // Extend only with higher-indexed vertices so each clique is
            // produced exactly once, in increasing mask order per level.
            let higher = !((1u64 << v) | ((1u64 << v) - 1));
            rec(next, allowed & adjacency[v] & higher, adjacency, groups);
        }
    }
    rec(0, w, adjacency, &mut groups);
    for g in &mut groups {
        g.sort_unstable();
    }
    groups
}

/// Faces of the restriction to `w`, filtered from the global face list.
fn restrict_faces(global: &[Vec<u64>], w: u64) -> Vec<Vec<u64>> {
    let mut groups: Vec<Vec<u64>> = global
        .iter()
        .map(|g| g.iter().copied().filter(|f| f & !w == 0).collect())
        .collect();
    while groups.len() > 1 && groups.last().is_some_and(|g| g.is_empty()) {
        groups.pop();
    }
    groups
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_path_facets;
    use crate::shape::{MatrixShape, VariableId};

    fn path_complex(m: u16, n: u16) -> SimplicialComplex {
        enumerate_path_facets(MatrixShape::new(m, n).unwrap())
    }

    #[test]
    fn homology_of_point_and_empty() {
        let shape = MatrixShape::new(2, 2).unwrap();
        let v = VariableId::new(1, 2);
        let point =
            SimplicialComplex::from_facets(shape, vec![v], &[vec![v]]).unwrap();
        let dims = reduced_homology_dims(&point, FieldSpec::Rationals);
        assert!(dims.is_zero());

        let empty = SimplicialComplex::from_facets(shape, vec![v], &[vec![]]).unwrap();
        let dims = reduced_homology_dims(&empty, FieldSpec::Rationals);
        assert_eq!(dims.dim(-1), 1);
        assert_eq!(dims.nonzero(), vec![(-1, 1)]);
    }

    #[test]
    fn zero_sphere_2x2() {
        // The 2x2 path complex is two isolated vertices: a zero-sphere.
        let complex = path_complex(2, 2);
        assert_eq!(complex.f_vector().0, vec![1, 2]);
        let dims = reduced_homology_dims(&complex, FieldSpec::Rationals);
        assert_eq!(dims.nonzero(), vec![(0, 1)]);
    }

    #[test]
    fn contractible_rectangular_cases() {
        for (m, n) in [(2, 3), (2, 4), (3, 4)] {
            let complex = path_complex(m, n);
            let dims = reduced_homology_dims(&complex, FieldSpec::Rationals);
            assert!(dims.is_zero(), "({m},{n}) should be acyclic");
            let dims2 = reduced_homology_dims(&complex, FieldSpec::PrimeField(2));
            assert!(dims2.is_zero());
        }
    }

    #[test]
    fn square_case_top_homology() {
        let complex = path_complex(3, 3);
        let dims = reduced_homology_dims(&complex, FieldSpec::Rationals);
        assert_eq!(dims.nonzero(), vec![(1, 1)]);
    }

    #[test]
    fn relative_equals_link_homology() {
        let complex = path_complex(3, 4);
        let field = FieldSpec::Rationals;
        let groups = complex.faces_by_card().to_vec();
        for group in &groups {
            for &sigma in group {
                let link = complex.link(sigma).unwrap();
                let link_dims = reduced_homology_dims(&link, field);
                let rel = relative_homology_dims(&complex, sigma, field).unwrap();
                let card = sigma.card() as i32;
                for i in -1..=3 {
                    assert_eq!(
                        link_dims.dim(i - card),
                        rel.dim(i),
                        "face {} degree {i}",
                        complex.face_label(sigma)
                    );
                }
            }
        }
    }

    #[test]
    fn betti_table_3x4() {
        // Frozen from two independent computations (the subset sweep and
        // the brute-force restriction in `sweep_matches_bruteforce`); the
        // alternating column sums agree with the Hilbert numerator
        // (1 + 6t + 3t^2)(1 - t)^6, and the entry at (2,4) is certified by
        // the induced four-cycle on (1,2),(1,3),(2,4),(3,4).
        let complex = path_complex(3, 4);
        let table = betti_table(&complex, FieldSpec::Rationals).unwrap();
        let expected: Vec<(usize, usize, u64)> = vec![
            (0, 0, 1),
            (1, 2, 18),
            (2, 3, 52),
            (2, 4, 1),
            (3, 4, 61),
            (3, 5, 6),
            (4, 5, 30),
            (4, 6, 14),
            (5, 6, 4),
            (5, 7, 12),
            (6, 8, 3),
        ];
        let got: Vec<(usize, usize, u64)> =
            table.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        assert_eq!(got, expected);
        assert_eq!(table.projective_dimension(), 6);
        assert_eq!(table.regularity(), 2);
        assert!(table.last_column_single_degree());
        assert!(table.max_degrees_strictly_increasing());
    }

    /// Independent oracle for the sweep: restrict the complex to every
    /// vertex subset, enumerate the restriction's faces from its facets,
    /// and take reduced homology — no clique enumeration, no cone-subset
    /// skipping.
    fn bruteforce_betti(complex: &SimplicialComplex, field: FieldSpec) -> BettiTable {
        let nv = complex.vertices().len();
        let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        entries.insert((0, 0), 1);
        for mask in 1u64..(1u64 << nv) {
            let sub: Vec<_> = (0..nv)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| complex.vertices()[k])
                .collect();
            let restriction = complex.restrict(&sub).unwrap();
            let dims = reduced_homology_dims(&restriction, field);
            let j = mask.count_ones() as usize;
            for (deg, d) in dims.nonzero() {
                let i = (j as i64 - deg as i64 - 1) as usize;
                *entries.entry((i, j)).or_insert(0) += d as u64;
            }
        }
        BettiTable::from_entries(
            entries.iter().map(|(&(i, j), &v)| (i, j, v)),
            nv,
            field,
        )
    }

    #[test]
    fn sweep_matches_bruteforce() {
        for (m, n) in [(2, 3), (3, 3), (3, 4)] {
            let complex = path_complex(m, n);
            for field in [FieldSpec::Rationals, FieldSpec::PrimeField(2)] {
                let sweep = betti_table(&complex, field).unwrap();
                let brute = bruteforce_betti(&complex, field);
                assert_eq!(sweep.entries, brute.entries, "({m},{n}) over {field}");
            }
        }
    }

    #[test]
    fn flag_detection() {
        let complex = path_complex(3, 4);
        let adjacency = skeleton_adjacency(&complex);
        assert!(is_flag(&complex, &adjacency));
    }

    #[test]
    fn sweep_guard_trips() {
        let complex = path_complex(3, 4);
        let err = betti_table_with_limit(&complex, FieldSpec::Rationals, 4).unwrap_err();
        assert!(matches!(err, Error::SweepGuard { vertices: 9, limit: 4 }));
    }
}
