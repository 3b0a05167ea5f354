//! Two-way shelling of the path complex: a facet comparator that shells
//! ascending and descending, a three-way vertex partition per facet, and
//! verification that the partition predicts the restriction faces.
//!
//! Every facet of the path complex is a monotone path through a submatrix
//! `M^F`: its distinct rows `r(F)` in order, its distinct columns `c(F) =
//! [n] \ r(F)` in order, and steps that move one row down or one column
//! right. The shelling order sorts by the row set (lexicographically as a
//! sequence), then by the first path position where the facets differ,
//! earlier rows first.

use serde::Serialize;
use std::cmp::Ordering;
use std::collections::HashMap;

use crate::complex::{h_vector_from_f, Face, SimplicialComplex};
use crate::error::Error;
use crate::shape::VariableId;

/// Role of a vertex inside its path facet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexKind {
    /// Entered from the left, left downward: the path turns clockwise.
    RightTurning,
    /// Entered from above, left rightward: the path turns counterclockwise.
    LeftTurning,
    /// The only path vertex in its column (and not a turning point).
    Horizontal,
    /// The only path vertex in its row (and not a turning point).
    Vertical,
}

/// The three-way split of a facet's vertices driving the two shellings.
#[derive(Clone, Debug, Serialize)]
pub struct FacetPartition {
    /// Path order of the facet's vertices.
    pub path: Vec<VariableId>,
    /// Kind of each path vertex, parallel to `path`.
    pub kinds: Vec<VertexKind>,
    /// Vertices removable exactly in the descending shelling.
    pub plus: Vec<VariableId>,
    /// Vertices removable exactly in the ascending shelling.
    pub minus: Vec<VariableId>,
    /// Vertices in neither restriction face (columns beyond `m`).
    pub star: Vec<VariableId>,
}

/// The facet's vertices in path order, validating that it really is a
/// monotone path: distinct rows and columns partition `[n]`, and each
/// step moves to the next row or next column of the submatrix.
pub fn path_vertices(
    complex: &SimplicialComplex,
    facet: Face,
) -> Result<Vec<VariableId>, Error> {
    let mut cells = complex.face_vertices(facet);
    cells.sort_by_key(|v| (v.row, v.col));
    let n = complex.shape().n();
    let mut rows: Vec<u16> = cells.iter().map(|v| v.row).collect();
    rows.dedup();
    let mut cols: Vec<u16> = cells.iter().map(|v| v.col).collect();
    cols.sort_unstable();
    cols.dedup();
    let mut all: Vec<u16> = rows.iter().chain(cols.iter()).copied().collect();
    all.sort_unstable();
    let partitions_n = all.len() == n as usize
        && all == (1..=n).collect::<Vec<u16>>();
    if !partitions_n {
        return Err(Error::Parse(format!(
            "facet {} is not a path: rows and columns do not partition 1..{n}",
            complex.face_label(facet)
        )));
    }
    let row_rank: HashMap<u16, usize> =
        rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
    let col_rank: HashMap<u16, usize> =
        cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let coords: Vec<(usize, usize)> = cells
        .iter()
        .map(|v| (row_rank[&v.row], col_rank[&v.col]))
        .collect();
    let starts_at_corner = coords.first() == Some(&(0, 0));
    let ends_at_corner = coords.last() == Some(&(rows.len() - 1, cols.len() - 1));
    let unit_steps = coords.windows(2).all(|w| {
        let ((r0, c0), (r1, c1)) = (w[0], w[1]);
        (r1 == r0 + 1 && c1 == c0) || (r1 == r0 && c1 == c0 + 1)
    });
    if !(starts_at_corner && ends_at_corner && unit_steps) {
        return Err(Error::Parse(format!(
            "facet {} is not a monotone path through its submatrix",
            complex.face_label(facet)
        )));
    }
    Ok(cells)
}

/// The sorted distinct rows of a facet (the row set indexing the shelling).
pub fn facet_row_set(complex: &SimplicialComplex, facet: Face) -> Vec<u16> {
    let mut rows: Vec<u16> = complex
        .face_vertices(facet)
        .iter()
        .map(|v| v.row)
        .collect();
    rows.sort_unstable();
    rows.dedup();
    rows
}

/// Classifies each path vertex and splits the facet.
pub fn vertex_partition(
    complex: &SimplicialComplex,
    facet: Face,
) -> Result<FacetPartition, Error> {
    let path = path_vertices(complex, facet)?;
    let m = complex.shape().m();
    let max_row = path.iter().map(|v| v.row).max().expect("facets are nonempty");

    #[derive(PartialEq)]
    enum Dir {
        None,
        SameRow,
        SameCol,
    }
    let dir = |a: Option<&VariableId>, b: &VariableId| -> Dir {
        match a {
            None => Dir::None,
            Some(a) if a.row == b.row => Dir::SameRow,
            Some(_) => Dir::SameCol,
        }
    };

    let mut kinds = Vec::with_capacity(path.len());
    for (t, v) in path.iter().enumerate() {
        let prev = dir(t.checked_sub(1).and_then(|s| path.get(s)), v);
        let next = dir(path.get(t + 1), v);
        let kind = if prev == Dir::SameRow && next == Dir::SameCol {
            VertexKind::RightTurning
        } else if prev == Dir::SameCol && next == Dir::SameRow {
            VertexKind::LeftTurning
        } else if prev != Dir::SameCol && next != Dir::SameCol {
            // No vertical neighbor: alone in its column. A vertex alone in
            // both (a singleton facet) counts as horizontal.
            VertexKind::Horizontal
        } else {
            VertexKind::Vertical
        };
        kinds.push(kind);
    }

    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut star = Vec::new();
    for (v, kind) in path.iter().zip(&kinds) {
        match kind {
            VertexKind::RightTurning => plus.push(*v),
            VertexKind::LeftTurning => minus.push(*v),
            VertexKind::Horizontal => {
                if v.col > m {
                    star.push(*v);
                } else if v.col > max_row {
                    plus.push(*v);
                } else {
                    minus.push(*v);
                }
            }
            VertexKind::Vertical => {
                if v.row < max_row {
                    plus.push(*v);
                } else {
                    minus.push(*v);
                }
            }
        }
    }
    Ok(FacetPartition { path, kinds, plus, minus, star })
}

/// Shelling comparator: row sets as sequences first, then the first path
/// position where the facets differ, smaller row first.
pub fn compare_facets(complex: &SimplicialComplex, a: Face, b: Face) -> Ordering {
    let rows_a = facet_row_set(complex, a);
    let rows_b = facet_row_set(complex, b);
    rows_a.cmp(&rows_b).then_with(|| {
        let path_a = sorted_cells(complex, a);
        let path_b = sorted_cells(complex, b);
        for (va, vb) in path_a.iter().zip(&path_b) {
            if va != vb {
                return va.row.cmp(&vb.row).then(va.col.cmp(&vb.col));
            }
        }
        path_a.len().cmp(&path_b.len()).then(a.cmp(&b))
    })
}

fn sorted_cells(complex: &SimplicialComplex, facet: Face) -> Vec<VariableId> {
    let mut cells = complex.face_vertices(facet);
    cells.sort_by_key(|v| (v.row, v.col));
    cells
}

/// Direction of a shelling order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ShellingDirection {
    /// Increasing comparator order; restriction faces should be `minus`.
    Ascending,
    /// Decreasing comparator order; restriction faces should be `plus`.
    Descending,
}

/// Facets sorted by the shelling comparator.
pub fn shelling_order(
    complex: &SimplicialComplex,
    direction: ShellingDirection,
) -> Vec<Face> {
    let mut order: Vec<Face> = complex.facets().to_vec();
    order.sort_by(|&a, &b| compare_facets(complex, a, b));
    if direction == ShellingDirection::Descending {
        order.reverse();
    }
    order
}

/// Brute-force shelling check of an arbitrary facet order.
///
/// Returns whether each prefix attaches the next facet along a pure
/// codimension-one part of its boundary, the first failing step, and the
/// restriction face of every step (vertices whose removal lands inside
/// the earlier facets).
pub fn verify_shelling(order: &[Face]) -> (bool, Option<usize>, Vec<Face>) {
    let mut restrictions = Vec::with_capacity(order.len());
    let mut first_bad = None;
    for (i, &facet) in order.iter().enumerate() {
        let earlier = &order[..i];
        let mut restriction = Face::EMPTY;
        for v in facet.bits() {
            let ridge = facet.without_bit(v);
            if earlier.iter().any(|&g| ridge.subset_of(g)) {
                restriction = restriction.with_bit(v);
            }
        }
        // Valid step: a subset lies in an earlier facet exactly when it
        // misses a restriction vertex.
        let ok = facet.subsets().all(|sigma| {
            let in_earlier = earlier.iter().any(|&g| sigma.subset_of(g));
            in_earlier == !restriction.subset_of(sigma)
        });
        if !ok && first_bad.is_none() {
            first_bad = Some(i);
        }
        restrictions.push(restriction);
    }
    (first_bad.is_none(), first_bad, restrictions)
}

/// Full report of one direction of the two-way shelling.
#[derive(Clone, Debug, Serialize)]
pub struct ShellingReport {
    /// Which direction was run.
    pub direction: ShellingDirection,
    /// Facets in shelling order, each in path order.
    pub order: Vec<Vec<VariableId>>,
    /// Whether the order is a shelling.
    pub valid: bool,
    /// First failing step, if any.
    pub first_invalid_step: Option<usize>,
    /// Size of each step's restriction face.
    pub restriction_sizes: Vec<usize>,
    /// `h[j]` = number of steps with a `j`-vertex restriction face.
    pub h_vector: Vec<u64>,
    /// The same `h`-vector recomputed from the face counts.
    pub h_from_f: Vec<i64>,
    /// Each step's restriction face (vertices whose removal lands in the
    /// earlier facets), as cells.
    pub restriction_faces: Vec<Vec<VariableId>>,
    /// Steps whose restriction face differs from the predicted partition
    /// side (`minus` ascending, `plus` descending).
    pub partition_mismatch_steps: Vec<usize>,
    /// Whether, at every step, a subset lies in an earlier facet exactly
    /// when it fails to contain the predicted partition side.
    pub partition_predicts_attachment: bool,
    /// Whether, for every facet `F` and vertex `v`, removing `v` leaves a
    /// face contained in no other facet exactly when `v` is a `star`
    /// vertex.
    pub star_removals_only_in_own_facet: bool,
    /// Every facet has an empty `star` part (expected exactly for square
    /// grids, which have no column index beyond the row count).
    pub stars_all_empty: bool,
}

/// Orders the facets, verifies the shelling, and checks the partition
/// predictions. Requires every facet to be a monotone path.
pub fn shelling_report(
    complex: &SimplicialComplex,
    direction: ShellingDirection,
) -> Result<ShellingReport, Error> {
    let order = shelling_order(complex, direction);
    let partitions: Vec<FacetPartition> = order
        .iter()
        .map(|&f| vertex_partition(complex, f))
        .collect::<Result<_, _>>()?;
    let (valid, first_invalid_step, restrictions) = verify_shelling(&order);

    let restriction_sizes: Vec<usize> = restrictions.iter().map(|r| r.card()).collect();
    let max_card = order.iter().map(|f| f.card()).max().unwrap_or(0);
    let mut h_vector = vec![0u64; max_card + 1];
    for &s in &restriction_sizes {
        h_vector[s] += 1;
    }
    let h_from_f = h_vector_from_f(&complex.f_vector());

    let mut partition_mismatch_steps = Vec::new();
    let mut partition_predicts_attachment = true;
    for (i, (&facet, partition)) in order.iter().zip(&partitions).enumerate() {
        let predicted = match direction {
            ShellingDirection::Ascending => &partition.minus,
            ShellingDirection::Descending => &partition.plus,
        };
        let predicted = complex
            .face_from_vertices(predicted)
            .expect("partition vertices come from the facet");
        if predicted != restrictions[i] {
            partition_mismatch_steps.push(i);
        }
        let earlier = &order[..i];
        let predicts = facet.subsets().all(|sigma| {
            let in_earlier = earlier.iter().any(|&g| sigma.subset_of(g));
            in_earlier == !predicted.subset_of(sigma)
        });
        partition_predicts_attachment &= predicts;
    }

    // A vertex is a star vertex exactly when removing it leaves a face
    // contained in no other facet (a boundary ridge seen from inside).
    let mut star_removals_only_in_own_facet = true;
    for (&facet, partition) in order.iter().zip(&partitions) {
        let star = complex
            .face_from_vertices(&partition.star)
            .expect("partition vertices come from the facet");
        for v in facet.bits() {
            let ridge = facet.without_bit(v);
            let elsewhere = complex
                .facets()
                .iter()
                .any(|&g| g != facet && ridge.subset_of(g));
            star_removals_only_in_own_facet &= elsewhere == !star.contains_bit(v);
        }
    }

    Ok(ShellingReport {
        direction,
        order: partitions.iter().map(|p| p.path.clone()).collect(),
        valid,
        first_invalid_step,
        restriction_sizes,
        h_vector,
        h_from_f,
        restriction_faces: restrictions
            .iter()
            .map(|&r| complex.face_vertices(r))
            .collect(),
        partition_mismatch_steps,
        partition_predicts_attachment,
        star_removals_only_in_own_facet,
        stars_all_empty: partitions.iter().all(|p| p.star.is_empty()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_path_facets;
    use crate::shape::MatrixShape;

    fn path_complex(m: u16, n: u16) -> SimplicialComplex {
        enumerate_path_facets(MatrixShape::new(m, n).unwrap())
    }

    fn cells(pairs: &[(u16, u16)]) -> Vec<VariableId> {
        pairs.iter().map(|&(i, j)| VariableId::new(i, j)).collect()
    }

    #[test]
    fn ascending_order_3x4() {
        let complex = path_complex(3, 4);
        let order = shelling_order(&complex, ShellingDirection::Ascending);
        let expected: Vec<Vec<VariableId>> = [
            vec![(1, 2), (1, 3), (1, 4)],
            vec![(1, 3), (1, 4), (2, 4)],
            vec![(1, 3), (2, 3), (2, 4)],
            vec![(1, 4), (2, 4), (3, 4)],
            vec![(1, 2), (1, 4), (3, 4)],
            vec![(1, 2), (3, 2), (3, 4)],
            vec![(2, 1), (2, 3), (2, 4)],
            vec![(2, 1), (2, 4), (3, 4)],
            vec![(2, 1), (3, 1), (3, 4)],
            vec![(3, 1), (3, 2), (3, 4)],
        ]
        .iter()
        .map(|f| cells(&f.iter().copied().collect::<Vec<_>>()))
        .collect();
        let got: Vec<Vec<VariableId>> = order
            .iter()
            .map(|&f| path_vertices(&complex, f).unwrap())
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn partition_examples_3x4() {
        let complex = path_complex(3, 4);
        let top = complex
            .face_from_vertices(&cells(&[(1, 2), (1, 3), (1, 4)]))
            .unwrap();
        let p = vertex_partition(&complex, top).unwrap();
        assert_eq!(p.plus, cells(&[(1, 2), (1, 3)]));
        assert!(p.minus.is_empty());
        assert_eq!(p.star, cells(&[(1, 4)]));

        let bottom = complex
            .face_from_vertices(&cells(&[(3, 1), (3, 2), (3, 4)]))
            .unwrap();
        let p = vertex_partition(&complex, bottom).unwrap();
        assert!(p.plus.is_empty());
        assert_eq!(p.minus, cells(&[(3, 1), (3, 2)]));
        assert_eq!(p.star, cells(&[(3, 4)]));
    }

    #[test]
    fn partition_example_7x9() {
        let shape = MatrixShape::new(7, 9).unwrap();
        let facet = cells(&[
            (1, 2),
            (3, 2),
            (3, 4),
            (3, 7),
            (3, 8),
            (3, 9),
            (5, 9),
            (6, 9),
        ]);
        let complex =
            SimplicialComplex::from_facets(shape, facet.clone(), &[facet.clone()]).unwrap();
        let mask = complex.face_from_vertices(&facet).unwrap();
        let p = vertex_partition(&complex, mask).unwrap();
        assert_eq!(p.plus, cells(&[(1, 2), (3, 7), (3, 9), (5, 9)]));
        assert_eq!(p.minus, cells(&[(3, 2), (3, 4), (6, 9)]));
        assert_eq!(p.star, cells(&[(3, 8)]));
    }

    #[test]
    fn both_directions_shell_3x4() {
        let complex = path_complex(3, 4);
        for direction in [ShellingDirection::Ascending, ShellingDirection::Descending] {
            let report = shelling_report(&complex, direction).unwrap();
            assert!(report.valid, "{direction:?}");
            assert!(report.partition_mismatch_steps.is_empty(), "{direction:?}");
            assert!(report.partition_predicts_attachment, "{direction:?}");
            assert_eq!(report.h_vector, vec![1, 6, 3, 0]);
            assert_eq!(report.h_from_f, vec![1, 6, 3, 0]);
            assert!(report.star_removals_only_in_own_facet);
            assert!(!report.stars_all_empty);
            assert_eq!(
                report
                    .restriction_faces
                    .iter()
                    .map(|f| f.len())
                    .collect::<Vec<_>>(),
                report.restriction_sizes
            );
        }
        // Not every facet has a star vertex: {(1,3),(1,4),(2,4)} has none.
        let f = complex
            .face_from_vertices(&cells(&[(1, 3), (1, 4), (2, 4)]))
            .unwrap();
        let p = vertex_partition(&complex, f).unwrap();
        assert!(p.star.is_empty());
        assert_eq!(p.plus, cells(&[(1, 3), (1, 4)]));
        assert_eq!(p.minus, cells(&[(2, 4)]));
    }

    #[test]
    fn square_case_has_empty_stars() {
        let complex = path_complex(2, 2);
        let report = shelling_report(&complex, ShellingDirection::Ascending).unwrap();
        assert!(report.valid);
        assert!(report.stars_all_empty);
        assert!(report.star_removals_only_in_own_facet);
        assert_eq!(report.h_vector, vec![1, 1]);
        let report = shelling_report(&complex, ShellingDirection::Descending).unwrap();
        assert!(report.valid);
        assert!(report.partition_mismatch_steps.is_empty());
    }

    #[test]
    fn random_order_usually_fails() {
        // The reversed-ascending order is a valid shelling (that is the
        // point of the two-way statement), so scramble instead: swapping
        // the first and last ascending facets breaks the second step.
        let complex = path_complex(3, 4);
        let mut order = shelling_order(&complex, ShellingDirection::Ascending);
        let last = order.len() - 1;
        order.swap(0, last);
        let (valid, first_bad, _) = verify_shelling(&order);
        assert!(!valid);
        assert!(first_bad.is_some());
    }
}
