//! Simplicial complexes on matrix cells, stored as facet bitmasks.
//!
//! A [`SimplicialComplex`] owns an ordered vertex list (cells of a
//! [`MatrixShape`]) and its facets as bitmasks over that list. The main
//! constructors are [`stanley_reisner_complex`] (from square-free monomial
//! generators) and [`enumerate_path_facets`] (direct combinatorial
//! description of the same complex for the row-major order, used to
//! cross-check the algebraic route).

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::Error;
use crate::field::FieldSpec;
use crate::order::Monomial;
use crate::shape::{MatrixShape, VariableId};

/// A face: bitmask over the owning complex's vertex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face(pub u64);

impl Face {
    /// The empty face.
    pub const EMPTY: Face = Face(0);

    /// Number of vertices in the face.
    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Geometric dimension, `card - 1` (the empty face has dimension -1).
    pub fn dim(self) -> i32 {
        self.card() as i32 - 1
    }

    /// True when `self` is a subset of `other`.
    pub fn subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when the vertex at `bit` belongs to the face.
    pub fn contains_bit(self, bit: usize) -> bool {
        self.0 >> bit & 1 == 1
    }

    /// Set union.
    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    /// Set intersection.
    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    /// Set difference.
    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// With one extra vertex.
    pub fn with_bit(self, bit: usize) -> Face {
        Face(self.0 | 1 << bit)
    }

    /// Without one vertex.
    pub fn without_bit(self, bit: usize) -> Face {
        Face(self.0 & !(1 << bit))
    }

    /// Iterates the vertex bit positions in increasing order.
    pub fn bits(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(bit)
            }
        })
    }

    /// All subsets of the face, the face and the empty face included.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let mask = self.0;
        let mut current = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let result = Face(current);
            if current == mask {
                done = true;
            } else {
                current = (current.wrapping_sub(mask)) & mask;
            }
            Some(result)
        })
    }
}

/// Face counts by cardinality: `counts[k]` is the number of faces with `k`
/// vertices, so `counts[0] = 1` accounts for the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i` with the geometric index convention (`f_{-1} = 1`).
    pub fn f(&self, i: i32) -> u64 {
        let k = (i + 1) as usize;
        self.0.get(k).copied().unwrap_or(0)
    }
}

/// A finite simplicial complex on an ordered list of matrix cells.
///
/// `facets` is kept minimal (no facet contains another), deduplicated, and
/// sorted by bitmask value so identical complexes compare equal. The empty
/// complex `{ {} }` is stored as one empty facet; a complex with *no* faces
/// at all (the void complex) has an empty facet list.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    shape: MatrixShape,
    vertices: Vec<VariableId>,
    facets: Vec<Face>,
    index: HashMap<VariableId, usize>,
    faces_cache: OnceLock<Vec<Vec<Face>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.vertices == other.vertices && self.facets == other.facets
    }
}
impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from facet vertex sets, minimizing and sorting.
    pub fn from_facets(
        shape: MatrixShape,
        vertices: Vec<VariableId>,
        facet_sets: &[Vec<VariableId>],
    ) -> Result<Self, Error> {
        if vertices.len() > 64 {
            return Err(Error::TooManyVertices(vertices.len()));
        }
        let mut index = HashMap::new();
        for (k, &v) in vertices.iter().enumerate() {
            if !shape.contains(v) {
                return Err(Error::CellOutOfRange { shape, cell: v });
            }
            if index.insert(v, k).is_some() {
                return Err(Error::Parse(format!("vertex {v} listed twice")));
            }
        }
        let mut masks = Vec::new();
        for set in facet_sets {
            let mut mask = Face::EMPTY;
            for v in set {
                let bit = *index.get(v).ok_or(Error::UnknownVertex { vertex: *v })?;
                mask = mask.with_bit(bit);
            }
            masks.push(mask);
        }
        Ok(Self::from_facet_masks(shape, vertices, index, masks))
    }

    fn from_facet_masks(
        shape: MatrixShape,
        vertices: Vec<VariableId>,
        index: HashMap<VariableId, usize>,
        masks: Vec<Face>,
    ) -> Self {
        let facets = minimize_facets(masks);
        SimplicialComplex { shape, vertices, facets, index, faces_cache: OnceLock::new() }
    }

    /// The grid the vertex cells come from.
    pub fn shape(&self) -> MatrixShape {
        self.shape
    }

    /// Vertex list; bit `k` of every [`Face`] refers to `vertices()[k]`.
    pub fn vertices(&self) -> &[VariableId] {
        &self.vertices
    }

    /// Minimal facet masks, sorted by bitmask value.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Dimension: largest face dimension, `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.dim()).max()
    }

    /// True when every facet has the same dimension.
    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => {
                let card = self.facets.iter().map(|f| f.card()).max().unwrap_or(first.card());
                self.facets.iter().all(|f| f.card() == card)
            }
        }
    }

    /// Bit position of a vertex.
    pub fn vertex_bit(&self, v: VariableId) -> Result<usize, Error> {
        self.index.get(&v).copied().ok_or(Error::UnknownVertex { vertex: v })
    }

    /// Builds a face mask from explicit vertices.
    pub fn face_from_vertices(&self, cells: &[VariableId]) -> Result<Face, Error> {
        let mut mask = Face::EMPTY;
        for &v in cells {
            mask = mask.with_bit(self.vertex_bit(v)?);
        }
        Ok(mask)
    }

    /// The vertices of a face, in bit order.
    pub fn face_vertices(&self, face: Face) -> Vec<VariableId> {
        face.bits().map(|b| self.vertices[b]).collect()
    }

    /// Human-readable face like `{(1,2),(3,4)}`.
    pub fn face_label(&self, face: Face) -> String {
        let cells: Vec<String> = self
            .face_vertices(face)
            .iter()
            .map(|v| format!("({},{})", v.row, v.col))
            .collect();
        format!("{{{}}}", cells.join(","))
    }

    /// True when the mask is a face of the complex.
    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.subset_of(*f))
    }

    /// All faces grouped by cardinality (`[k]` holds the k-vertex faces,
    /// sorted by mask). Cached after the first call. The void complex
    /// returns an empty grouping; otherwise group 0 holds the empty face.
    pub fn faces_by_card(&self) -> &[Vec<Face>] {
        self.faces_cache.get_or_init(|| {
            let mut seen: HashSet<Face> = HashSet::new();
            for &facet in &self.facets {
                // Enumerate each facet's subsets, skipping those seen via
                // an earlier facet (masks of shared subfaces coincide).
                for sub in facet.subsets() {
                    seen.insert(sub);
                }
            }
            let max_card = self.facets.iter().map(|f| f.card()).max();
            let Some(max_card) = max_card else {
                return Vec::new();
            };
            let mut grouped: Vec<Vec<Face>> = vec![Vec::new(); max_card + 1];
            for face in seen {
                grouped[face.card()].push(face);
            }
            for group in &mut grouped {
                group.sort();
            }
            grouped
        })
    }

    /// Total number of faces, empty face included.
    pub fn num_faces(&self) -> usize {
        self.faces_by_card().iter().map(|g| g.len()).sum()
    }

    /// Vertices contained in every facet.
    pub fn cone_points(&self) -> Vec<VariableId> {
        let Some(first) = self.facets.first() else {
            return Vec::new();
        };
        let common = self.facets.iter().fold(first.0, |acc, f| acc & f.0);
        Face(common).bits().map(|b| self.vertices[b]).collect()
    }

    /// Induced subcomplex on a subset of the vertices. The surviving
    /// vertices keep their relative order; bit positions are renumbered.
    pub fn restrict(&self, keep: &[VariableId]) -> Result<SimplicialComplex, Error> {
        let mut keep_mask = Face::EMPTY;
        for &v in keep {
            keep_mask = keep_mask.with_bit(self.vertex_bit(v)?);
        }
        let new_vertices: Vec<VariableId> =
            self.vertices.iter().copied().filter(|v| keep.contains(v)).collect();
        let old_bits: Vec<usize> =
            (0..self.vertices.len()).filter(|&b| keep_mask.contains_bit(b)).collect();
        let remap: HashMap<usize, usize> =
            old_bits.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let masks: Vec<Face> = self
            .facets
            .iter()
            .map(|f| {
                f.intersection(keep_mask)
                    .bits()
                    .fold(Face::EMPTY, |acc, b| acc.with_bit(remap[&b]))
            })
            .collect();
        let index = new_vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        Ok(Self::from_facet_masks(self.shape, new_vertices, index, masks))
    }

    /// Link of a face: all faces disjoint from `face` whose union with it
    /// is again a face. Keeps the same vertex numbering.
    pub fn link(&self, face: Face) -> Result<SimplicialComplex, Error> {
        if !self.is_face(face) {
            return Err(Error::NotAFace);
        }
        let masks: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| face.subset_of(**f))
            .map(|f| f.minus(face))
            .collect();
        Ok(Self::from_facet_masks(self.shape, self.vertices.clone(), self.index.clone(), masks))
    }

    /// Contrastar of a face: the subcomplex of all faces *not* containing
    /// `face`. For the empty face this is the void complex, since every
    /// face contains the empty set.
    pub fn contrastar(&self, face: Face) -> Result<SimplicialComplex, Error> {
        if !self.is_face(face) {
            return Err(Error::NotAFace);
        }
        let mut masks = Vec::new();
        if face == Face::EMPTY {
            // No face avoids the empty set.
        } else {
            for &facet in &self.facets {
                if face.subset_of(facet) {
                    for bit in face.bits() {
                        masks.push(facet.without_bit(bit));
                    }
                } else {
                    masks.push(facet);
                }
            }
        }
        Ok(Self::from_facet_masks(self.shape, self.vertices.clone(), self.index.clone(), masks))
    }

    /// True when every facet of `sub` is a face of `self` (and the vertex
    /// numbering agrees).
    pub fn contains_complex(&self, sub: &SimplicialComplex) -> bool {
        self.vertices == sub.vertices && sub.facets.iter().all(|f| self.is_face(*f))
    }

    /// Face counts by cardinality.
    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_card().iter().map(|g| g.len() as u64).collect())
    }

    /// Faces of codimension one lying in exactly one facet.
    ///
    /// Requires a pure complex so that "codimension one" is meaningful.
    pub fn boundary_faces(&self) -> Result<Vec<Face>, Error> {
        if !self.is_pure() {
            return Err(Error::Parse("boundary faces need a pure complex".into()));
        }
        let Some(dim) = self.dim() else {
            return Ok(Vec::new());
        };
        let card = dim as usize; // one less vertex than a facet
        let groups = self.faces_by_card();
        let Some(candidates) = groups.get(card) else {
            return Ok(Vec::new());
        };
        Ok(candidates
            .iter()
            .copied()
            .filter(|&sigma| self.facets.iter().filter(|f| sigma.subset_of(**f)).count() == 1)
            .collect())
    }

    /// Exports the complex in the interchange JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<[u16; 2]> = self.vertices.iter().map(|v| [v.row, v.col]).collect();
        let facets: Vec<Vec<usize>> =
            self.facets.iter().map(|f| f.bits().collect()).collect();
        serde_json::json!({
            "m": self.shape.m(),
            "n": self.shape.n(),
            "vertices": vertices,
            "facets": facets,
        })
    }

    /// Imports a complex from the interchange JSON form.
    pub fn from_json(value: &serde_json::Value) -> Result<SimplicialComplex, Error> {
        #[derive(Deserialize)]
        struct Doc {
            m: u16,
            n: u16,
            vertices: Vec<[u16; 2]>,
            facets: Vec<Vec<usize>>,
        }
        let doc: Doc = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("complex document: {e}")))?;
        let shape = MatrixShape::new(doc.m, doc.n)?;
        let vertices: Vec<VariableId> =
            doc.vertices.iter().map(|&[i, j]| VariableId::new(i, j)).collect();
        let facet_sets: Vec<Vec<VariableId>> = doc
            .facets
            .iter()
            .map(|idxs| {
                idxs.iter()
                    .map(|&k| {
                        vertices.get(k).copied().ok_or_else(|| {
                            Error::Parse(format!("facet refers to vertex index {k} out of range"))
                        })
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        SimplicialComplex::from_facets(shape, vertices, &facet_sets)
    }
}

fn minimize_facets(mut masks: Vec<Face>) -> Vec<Face> {
    masks.sort_by_key(|f| std::cmp::Reverse(f.card()));
    let mut kept: Vec<Face> = Vec::new();
    for mask in masks {
        if !kept.iter().any(|k| mask.subset_of(*k)) {
            kept.push(mask);
        }
    }
    kept.sort();
    kept
}

/// Stanley-Reisner complex of square-free monomial generators on the full
/// cell grid: faces are the cell sets containing no generator's support.
///
/// Quadratic generators (the 2-minor case) go through maximal-clique
/// enumeration on the compatibility graph; anything else falls back to a
/// generic maximal-independent-set search.
pub fn stanley_reisner_complex(
    shape: MatrixShape,
    generators: &[Monomial],
) -> Result<SimplicialComplex, Error> {
    let vertices: Vec<VariableId> = shape.cells().collect();
    if vertices.len() > 64 {
        return Err(Error::TooManyVertices(vertices.len()));
    }
    let index: HashMap<VariableId, usize> =
        vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();

    let mut gen_masks = Vec::new();
    for g in generators {
        if g.shape() != shape {
            return Err(Error::ShapeMismatch { left: shape, right: g.shape() });
        }
        if !g.is_square_free() {
            return Err(Error::NotSquareFree(g.to_string()));
        }
        let mask = g
            .support()
            .iter()
            .fold(Face::EMPTY, |acc, v| acc.with_bit(index[v]));
        gen_masks.push(mask);
    }
    gen_masks.sort();
    gen_masks.dedup();

    let n = vertices.len();
    let facets = if gen_masks.iter().all(|g| g.card() == 2) {
        let mut adjacency = vec![u64::MAX >> (64 - n); n];
        for (k, row) in adjacency.iter_mut().enumerate() {
            *row &= !(1u64 << k);
        }
        for g in &gen_masks {
            let bits: Vec<usize> = g.bits().collect();
            adjacency[bits[0]] &= !(1u64 << bits[1]);
            adjacency[bits[1]] &= !(1u64 << bits[0]);
        }
        maximal_cliques(n, &adjacency)
    } else {
        let raw: Vec<u64> = gen_masks.iter().map(|g| g.0).collect();
        maximal_independent_sets(n, &raw)
    };

    Ok(SimplicialComplex::from_facet_masks(
        shape,
        vertices,
        index,
        facets.into_iter().map(Face).collect(),
    ))
}

/// Bron-Kerbosch with pivoting over bitset adjacency rows.
fn maximal_cliques(n: usize, adjacency: &[u64]) -> Vec<u64> {
    fn recurse(adjacency: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = Face(p | x)
            .bits()
            .max_by_key(|&u| (p & adjacency[u]).count_ones())
            .expect("p | x is nonempty");
        let mut candidates = p & !adjacency[pivot];
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            let bit = 1u64 << v;
            candidates &= !bit;
            recurse(adjacency, r | bit, p & adjacency[v], x & adjacency[v], out);
            p &= !bit;
            x |= bit;
        }
    }
    let mut out = Vec::new();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    recurse(adjacency, 0, all, 0, &mut out);
    out
}

/// Maximal sets containing none of the generator masks, by branch-and-prune.
fn maximal_independent_sets(n: usize, gen_masks: &[u64]) -> Vec<u64> {
    fn recurse(s: u64, gen_masks: &[u64], visited: &mut HashSet<u64>, out: &mut Vec<u64>) {
        if !visited.insert(s) {
            return;
        }
        match gen_masks.iter().find(|g| *g & s == **g) {
            None => out.push(s),
            Some(&g) => {
                let mut rest = g;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest &= !bit;
                    recurse(s & !bit, gen_masks, visited, out);
                }
            }
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut candidates = Vec::new();
    recurse(all, gen_masks, &mut HashSet::new(), &mut candidates);
    // Some branches yield non-maximal independent sets; keep the maxima.
    candidates.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for s in candidates {
        if !kept.iter().any(|k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept
}

/// The path complex for the row-major order, built directly: one facet per
/// monotone lattice path.
///
/// For each nonempty row subset `r` of `[m]`, with complementary column set
/// `c = [n] \ r`, the facets are the monotone paths from the top-left to
/// the bottom-right corner of the submatrix with rows `r` and columns `c`
/// (each step moves one column right or one row down). Every facet has
/// `n - 1` vertices, all off-diagonal.
pub fn enumerate_path_facets(shape: MatrixShape) -> SimplicialComplex {
    let vertices: Vec<VariableId> = shape.off_diagonal_cells().collect();
    let index: HashMap<VariableId, usize> =
        vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();

    let m = shape.m() as usize;
    let n = shape.n() as usize;
    let mut facets = Vec::new();
    for rows_mask in 1u32..(1 << m) {
        let rows: Vec<u16> = (0..m).filter(|k| rows_mask >> k & 1 == 1).map(|k| k as u16 + 1).collect();
        let cols: Vec<u16> = (1..=n as u16).filter(|j| !rows.contains(j)).collect();
        if cols.is_empty() {
            continue;
        }
        // Walk all right/down step sequences through the rows x cols grid.
        let steps = rows.len() + cols.len() - 2;
        let downs = rows.len() - 1;
        for step_mask in 0u32..(1 << steps) {
            if (step_mask.count_ones() as usize) != downs {
                continue;
            }
            let (mut ri, mut ci) = (0usize, 0usize);
            let mut face = Face::EMPTY;
            face = face.with_bit(index[&VariableId::new(rows[0], cols[0])]);
            for s in 0..steps {
                if step_mask >> s & 1 == 1 {
                    ri += 1;
                } else {
                    ci += 1;
                }
                face = face.with_bit(index[&VariableId::new(rows[ri], cols[ci])]);
            }
            facets.push(face);
        }
    }
    SimplicialComplex::from_facet_masks(shape, vertices, index, facets)
}

/// Expected facet count of the path complex: sum over the row-subset size
/// `k` of `C(m,k) * C(n-2, k-1)`.
pub fn expected_path_facet_count(shape: MatrixShape) -> u64 {
    let (m, n) = (shape.m() as u64, shape.n() as u64);
    (1..=m).map(|k| binomial(m, k) * binomial(n - 2, k - 1)).sum()
}

/// Binomial coefficient with the usual `k > n` convention of zero.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u64 = 1;
    for step in 0..k {
        result = result * (n - step) / (step + 1);
    }
    result
}

/// `h`-vector computed from the face counts:
/// `h(t) = sum_i f_{i-1} t^i (1-t)^{d-i}` with `d = dim + 1`.
pub fn h_vector_from_f(f: &FVector) -> Vec<i64> {
    let d = f.0.len().saturating_sub(1);
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.0.iter().enumerate() {
        // Add f_{i-1} * t^i * (1-t)^(d-i).
        for j in 0..=(d - i) {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            h[i + j] += sign * binomial((d - i) as u64, j as u64) as i64 * fi as i64;
        }
    }
    h
}

/// Report produced by [`is_quasimanifold`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuasimanifoldReport {
    /// Dimension `d` the check ran at (`None` for the void complex).
    pub dim: Option<i32>,
    /// Whether all facets have equal dimension.
    pub pure: bool,
    /// Codimension-one faces contained in more than two facets.
    pub overcrowded_ridges: Vec<Face>,
    /// Faces of dimension `< d-1` whose link is disconnected.
    pub disconnected_links: Vec<Face>,
    /// The final verdict.
    pub is_quasimanifold: bool,
}

/// Checks the quasimanifold property: pure of dimension `d`, every
/// `(d-1)`-face lies in at most two facets, and every face of smaller
/// dimension (the empty face included) has a connected link.
///
/// Link connectivity is read off the rank of reduced homology in degree
/// zero over the given coefficient field.
pub fn is_quasimanifold(complex: &SimplicialComplex, field: FieldSpec) -> QuasimanifoldReport {
    let dim = complex.dim();
    let pure = complex.is_pure();
    let mut overcrowded = Vec::new();
    let mut disconnected = Vec::new();
    if let Some(d) = dim {
        if d >= 0 {
            let groups = complex.faces_by_card();
            if let Some(ridges) = groups.get(d as usize) {
                for &sigma in ridges {
                    let count =
                        complex.facets().iter().filter(|f| sigma.subset_of(**f)).count();
                    if count > 2 {
                        overcrowded.push(sigma);
                    }
                }
            }
            for card in 0..d as usize {
                for &sigma in groups.get(card).map(|g| g.as_slice()).unwrap_or(&[]) {
                    let link = complex.link(sigma).expect("enumerated faces are faces");
                    let dims = crate::homology::reduced_homology_dims(&link, field);
                    if dims.dim(0) != 0 {
                        disconnected.push(sigma);
                    }
                }
            }
        }
    }
    let is_quasimanifold =
        pure && overcrowded.is_empty() && disconnected.is_empty() && dim.is_some();
    QuasimanifoldReport {
        dim,
        pure,
        overcrowded_ridges: overcrowded,
        disconnected_links: disconnected,
        is_quasimanifold,
    }
}

/// Row and column index sets of a vertex set.
pub fn rows_and_cols(complex: &SimplicialComplex, face: Face) -> (Vec<u16>, Vec<u16>) {
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    for v in complex.face_vertices(face) {
        if !rows.contains(&v.row) {
            rows.push(v.row);
        }
        if !cols.contains(&v.col) {
            cols.push(v.col);
        }
    }
    rows.sort_unstable();
    cols.sort_unstable();
    (rows, cols)
}
