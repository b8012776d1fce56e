//! Triangulations of lattice polytopes.
//!
//! The constructions here are deterministic and exact:
//!
//! - [`placing_triangulation`] triangulates the convex hull of a lattice
//!   point set by inserting the points in lexicographic order and coning
//!   each new point over the boundary faces it can see. Every input point
//!   becomes a vertex of the complex (a lexicographically larger point is
//!   never inside the hull of its predecessors).
//! - [`boundary_triangulation`] triangulates each facet of a reflexive
//!   polytope by the placing rule. Because every facet uses the same global
//!   (lexicographic) insertion order, the facet triangulations agree on
//!   shared faces.
//! - [`centric_triangulation`] cones a boundary triangulation with the
//!   origin, producing a full-dimensional triangulation in which every cell
//!   contains the origin.
//!
//! Verification is independent of construction: [`verify_triangulation`]
//! checks affine independence cell by cell, compares the summed cell
//! volumes against a recursive pyramid-decomposition volume oracle
//! ([`normalized_volume`]), and — in ambient dimension at most 4 — checks
//! exactly that every pairwise cell intersection is a common face.
//! [`is_unimodular_triangulation`] decides whether each cell is a lattice
//! basis simplex for the lattice of its own affine span.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    det, dot, dot_int_rat, hermite_normal_form, index_combinations, int_to_rat, ints_to_rats,
    inverse_unimodular, Int, IntMatrix, Rat,
};
use crate::geometry::bits::BitSet;
use crate::geometry::{coordinates_in_row_span, vertices_of_system, Containment, Polytope};
use crate::lattice::lattice_points;

/// A simplicial complex on an explicit list of lattice points.
///
/// `points` are deduplicated and sorted lexicographically; each cell is a
/// sorted list of point indices, affinely independent by construction, and
/// the cell list itself is sorted. Cells of a triangulation of a
/// `k`-dimensional hull have `k + 1` elements (boundary triangulations of a
/// `d`-polytope therefore carry cells of `d` points each). Lower-dimensional
/// faces are implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    /// Ambient dimension of the points.
    pub dim: usize,
    /// The point set the cells index into, sorted lexicographically.
    pub points: Vec<Vec<Int>>,
    /// Maximal cells, each a sorted list of indices into `points`.
    pub cells: Vec<Vec<usize>>,
}

impl Triangulation {
    /// Number of maximal cells.
    pub fn n_cells(&self) -> usize {
        self.cells.len()
    }

    /// The coordinates of one cell's points.
    pub fn cell_points(&self, cell: usize) -> Vec<Vec<Int>> {
        self.cells[cell]
            .iter()
            .map(|&i| self.points[i].clone())
            .collect()
    }

    /// Indices of all points that appear in at least one cell, sorted.
    pub fn used_point_indices(&self) -> Vec<usize> {
        let mut used: Vec<usize> = self.cells.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used
    }
}

/// Triangulates the convex hull of `points` by lexicographic insertion.
///
/// Points are deduplicated and sorted; the first point seeds the complex and
/// each later point is joined to every boundary face visible from it. A
/// point extending the current affine span cones the whole complex instead.
/// The result triangulates the hull inside its own affine span (input of any
/// affine dimension is accepted, so facet point sets work unchanged), and
/// every input point is used as a cell vertex.
///
/// Errors with [`Error::DegenerateInput`] when no points are given and with
/// [`Error::DimensionMismatch`] when the points disagree on ambient
/// dimension.
pub fn placing_triangulation(points: &[Vec<Int>]) -> Result<Triangulation> {
    if points.is_empty() {
        return Err(Error::DegenerateInput(
            "placing triangulation needs at least one point".into(),
        ));
    }
    let ambient = points[0].len();
    for p in points {
        if p.len() != ambient {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: p.len(),
            });
        }
    }
    let mut pts: Vec<Vec<Int>> = points.to_vec();
    pts.sort();
    pts.dedup();

    // Basis of integer difference vectors spanning the inserted points'
    // affine span, and each inserted point's exact coordinates in it.
    let mut basis: Vec<Vec<Int>> = Vec::new();
    let mut coords: Vec<Vec<Rat>> = vec![Vec::new()];
    let mut cells: Vec<Vec<usize>> = vec![vec![0]];

    for i in 1..pts.len() {
        let diff: Vec<Int> = pts[i].iter().zip(&pts[0]).map(|(a, b)| a - b).collect();
        let in_span = if basis.is_empty() {
            None
        } else {
            coordinates_in_row_span(&basis, &ints_to_rats(&diff)).ok()
        };
        match in_span {
            Some(c) => {
                let r = basis.len();
                let new_cells = visible_cone_cells(&coords, &cells, &c, i, r);
                assert!(
                    !new_cells.is_empty(),
                    "lexicographic insertion: point {i} sees no boundary face"
                );
                coords.push(c);
                cells.extend(new_cells);
            }
            None => {
                // The new point leaves the current affine span: the complex
                // becomes a pyramid over itself with this point as apex.
                basis.push(diff);
                let r = basis.len();
                for c in coords.iter_mut() {
                    c.push(Rat::zero());
                }
                let mut c = vec![Rat::zero(); r];
                c[r - 1] = Rat::one();
                coords.push(c);
                for cell in cells.iter_mut() {
                    cell.push(i);
                }
            }
        }
    }
    cells.sort();
    Ok(Triangulation {
        dim: ambient,
        points: pts,
        cells,
    })
}

/// New cells obtained by joining inserted point `i` (span coordinates `c`)
/// to every boundary face of the current complex it strictly sees.
fn visible_cone_cells(
    coords: &[Vec<Rat>],
    cells: &[Vec<usize>],
    c: &[Rat],
    i: usize,
    r: usize,
) -> Vec<Vec<usize>> {
    // A face (cell minus one vertex) is on the boundary iff exactly one cell
    // contains it; remember one opposite vertex to orient its hyperplane.
    let mut owners: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for cell in cells {
        for k in 0..cell.len() {
            let mut face = cell.clone();
            let opposite = face.remove(k);
            owners.entry(face).or_default().push(opposite);
        }
    }
    let mut new_cells = Vec::new();
    for (face, opposites) in owners {
        if opposites.len() != 1 {
            continue;
        }
        let (nu, offset) = face_functional(coords, &face, r);
        let side_opposite = dot_int_rat(&nu, &coords[opposites[0]]) - &offset;
        let side_new = dot_int_rat(&nu, c) - &offset;
        debug_assert!(!side_opposite.is_zero(), "opposite vertex on its own face");
        if !side_new.is_zero() && side_new.is_positive() != side_opposite.is_positive() {
            let mut cell = face;
            cell.push(i);
            cell.sort_unstable();
            new_cells.push(cell);
        }
    }
    new_cells
}

/// Integer normal and rational offset of the hyperplane through a face of
/// `r` affinely independent points in `r`-dimensional span coordinates.
fn face_functional(coords: &[Vec<Rat>], face: &[usize], r: usize) -> (Vec<Int>, Rat) {
    if r == 1 {
        return (vec![Int::one()], coords[face[0]][0].clone());
    }
    // Scale each difference row to integers (a positive factor per row
    // scales every minor by the same positive amount, so signs survive).
    let rows: Vec<Vec<Int>> = (1..r)
        .map(|j| {
            let d: Vec<Rat> = coords[face[j]]
                .iter()
                .zip(&coords[face[0]])
                .map(|(a, b)| a - b)
                .collect();
            scale_rat_row(&d)
        })
        .collect();
    let mut nu = Vec::with_capacity(r);
    for k in 0..r {
        let minor: Vec<Vec<Int>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != k)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let d = det(&IntMatrix::from_rows(minor)).expect("square minor");
        nu.push(if k % 2 == 0 { d } else { -d });
    }
    debug_assert!(
        nu.iter().any(|x| !x.is_zero()),
        "face is affinely dependent"
    );
    let offset = dot_int_rat(&nu, &coords[face[0]]);
    (nu, offset)
}

/// Clears denominators of a rational row by its (positive) common factor.
fn scale_rat_row(row: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter()
        .map(|x| {
            let scaled = x * int_to_rat(&lcm);
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect()
}

/// Requires every facet of the (lattice) polytope at lattice distance one
/// from the origin — the syntactic shape shared by all constructions here.
fn require_unit_facet_distances(p: &Polytope, what: &str) -> Result<()> {
    let minus_one = -Int::one();
    if !p.is_lattice() || !p.rhs().iter().all(|b| *b == minus_one) {
        return Err(Error::DegenerateInput(format!(
            "{what} requires a reflexive polytope: every facet at lattice distance one \
             from the interior origin"
        )));
    }
    Ok(())
}

/// Triangulates the boundary of a reflexive polytope facet by facet.
///
/// Each facet's lattice points are triangulated by [`placing_triangulation`];
/// the shared lexicographic insertion order makes the facet triangulations
/// agree on common faces. The returned points are exactly the boundary
/// lattice points of `p`, and every cell has `p.dim()` elements.
pub fn boundary_triangulation(p: &Polytope) -> Result<Triangulation> {
    require_unit_facet_distances(p, "a boundary triangulation")?;
    let d = p.dim();
    let pts = lattice_points(p).points;
    let on_boundary = |x: &Vec<Int>| {
        p.normals()
            .iter()
            .zip(p.rhs())
            .any(|(a, b)| dot(a, x) == *b)
    };
    let boundary: Vec<Vec<Int>> = pts.into_iter().filter(on_boundary).collect();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (a, b) in p.normals().iter().zip(p.rhs()) {
        let facet_pts: Vec<Vec<Int>> = boundary
            .iter()
            .filter(|x| dot(a, x) == *b)
            .cloned()
            .collect();
        let t = placing_triangulation(&facet_pts)?;
        let global: Vec<usize> = t
            .points
            .iter()
            .map(|q| {
                boundary
                    .binary_search(q)
                    .expect("facet point is a boundary point")
            })
            .collect();
        for cell in t.cells {
            let mut mapped: Vec<usize> = cell.iter().map(|&i| global[i]).collect();
            mapped.sort_unstable();
            cells.push(mapped);
        }
    }
    cells.sort();
    cells.dedup();
    Ok(Triangulation {
        dim: d,
        points: boundary,
        cells,
    })
}

/// Cones a boundary triangulation of a reflexive polytope with the origin.
///
/// Every cell of the result is a boundary cell joined with the origin, so
/// all cells are full-dimensional and contain the origin. Errors when `p`
/// is not reflexive or when `boundary` already lists the origin.
pub fn centric_triangulation(p: &Polytope, boundary: &Triangulation) -> Result<Triangulation> {
    require_unit_facet_distances(p, "a centric triangulation")?;
    if boundary.dim != p.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: boundary.dim,
        });
    }
    let origin = vec![Int::zero(); p.dim()];
    let pos = match boundary.points.binary_search(&origin) {
        Ok(_) => {
            return Err(Error::DegenerateInput(
                "the origin already lies among the boundary points".into(),
            ));
        }
        Err(pos) => pos,
    };
    let mut points = boundary.points.clone();
    points.insert(pos, origin);
    let mut cells: Vec<Vec<usize>> = boundary
        .cells
        .iter()
        .map(|cell| {
            let mut mapped: Vec<usize> = cell
                .iter()
                .map(|&i| if i < pos { i } else { i + 1 })
                .collect();
            mapped.push(pos);
            mapped.sort_unstable();
            mapped
        })
        .collect();
    cells.sort();
    Ok(Triangulation {
        dim: p.dim(),
        points,
        cells,
    })
}

/// Normalized volume (Euclidean volume times `dim!`) of a lattice polytope,
/// computed by a recursive pyramid decomposition over the facet structure:
/// the lattice distance from the lexicographically smallest vertex to each
/// facet, times the facet's own normalized volume in its induced lattice.
///
/// This path shares no machinery with the cell-by-cell determinant sums it
/// is used to cross-check.
pub fn normalized_volume(p: &Polytope) -> Result<Int> {
    let verts = p.lattice_vertices().ok_or_else(|| {
        Error::DegenerateInput("the volume oracle requires a lattice polytope".into())
    })?;
    if p.dim() == 1 {
        return Ok(&verts[1][0] - &verts[0][0]);
    }
    let apex = &verts[0];
    let mut total = Int::zero();
    for (fi, (a, b)) in p.normals().iter().zip(p.rhs()).enumerate() {
        let dist = dot(a, apex) - b;
        debug_assert!(!dist.is_negative(), "vertex outside its own polytope");
        if dist.is_zero() {
            continue;
        }
        let fverts: Vec<Vec<Int>> = p
            .vertices_of_facet(fi)?
            .into_iter()
            .map(|v| verts[v].clone())
            .collect();
        let projected = project_to_hyperplane_lattice(&fverts, a)?;
        let facet = Polytope::from_lattice_points(&projected)?;
        total += dist * normalized_volume(&facet)?;
    }
    Ok(total)
}

/// Rewrites lattice points lying on a common hyperplane `<a, x> = const`
/// (with `a` primitive) in a lattice basis adapted to the hyperplane, then
/// drops the constant coordinate. The image spans one dimension less and
/// the induced lattice becomes the full integer lattice there.
fn project_to_hyperplane_lattice(points: &[Vec<Int>], a: &[Int]) -> Result<Vec<Vec<Int>>> {
    let column = IntMatrix::from_rows(a.iter().map(|x| vec![x.clone()]).collect());
    let (h, u) = hermite_normal_form(&column);
    if !h.get(0, 0).is_one() {
        return Err(Error::DegenerateInput(
            "hyperplane normal is not primitive".into(),
        ));
    }
    // Rows of `u` form a basis with <a, u_0> = 1 and <a, u_k> = 0 for k > 0,
    // so a point's first coordinate in that basis is the constant <a, x>.
    let w = inverse_unimodular(&u)?;
    Ok(points
        .iter()
        .map(|x| {
            let c = row_times_matrix(x, &w);
            c[1..].to_vec()
        })
        .collect())
}

/// Row vector times matrix.
fn row_times_matrix(x: &[Int], m: &IntMatrix) -> Vec<Int> {
    (0..m.ncols())
        .map(|j| {
            let mut acc = Int::zero();
            for (k, xk) in x.iter().enumerate() {
                acc += xk * m.get(k, j);
            }
            acc
        })
        .collect()
}

/// Checks that `t` is a valid triangulation of the full-dimensional lattice
/// polytope `p`:
///
/// (a) every cell has `dim + 1` affinely independent points inside `p`,
/// (b) the cell volumes sum exactly to the volume of `p` (via
///     [`normalized_volume`]), and
/// (c) in ambient dimension at most 4, every pairwise cell intersection is
///     a common face (checked exactly).
///
/// Never errors: any structural defect simply yields `false`.
pub fn verify_triangulation(p: &Polytope, t: &Triangulation) -> bool {
    let d = p.dim();
    if t.dim != d || t.cells.is_empty() || !p.is_lattice() {
        return false;
    }
    if t.points.iter().any(|q| q.len() != d) {
        return false;
    }
    for q in &t.points {
        if !p.contains_lattice(q, Containment::Closed).unwrap_or(false) {
            return false;
        }
    }
    let mut total = Int::zero();
    for cell in &t.cells {
        if cell.len() != d + 1 || cell.iter().any(|&i| i >= t.points.len()) {
            return false;
        }
        match cell_determinant(&t.points, cell) {
            Some(v) if !v.is_zero() => total += v.abs(),
            _ => return false,
        }
    }
    match normalized_volume(p) {
        Ok(v) if v == total => {}
        _ => return false,
    }
    if d <= 4 && t.cells.len() > 1 {
        pairwise_cells_are_common_faces(p, t)
    } else {
        true
    }
}

/// Determinant of a full-dimensional cell's edge matrix from its first
/// vertex; `None` when the cell is not square in its ambient dimension.
fn cell_determinant(points: &[Vec<Int>], cell: &[usize]) -> Option<Int> {
    let d = points[cell[0]].len();
    if cell.len() != d + 1 {
        return None;
    }
    let rows: Vec<Vec<Int>> = cell[1..]
        .iter()
        .map(|&i| {
            points[i]
                .iter()
                .zip(&points[cell[0]])
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    det(&IntMatrix::from_rows(rows)).ok()
}

/// Exact pairwise common-face check.
///
/// A star-shaped shortcut applies when every cell shares one strictly
/// interior apex point and each cell minus the apex lies in a facet: rays
/// from the apex meet the boundary once, so cells intersect in a common
/// face exactly when their boundary parts do, one dimension lower.
fn pairwise_cells_are_common_faces(p: &Polytope, t: &Triangulation) -> bool {
    let tight: Vec<BitSet> = t
        .points
        .iter()
        .map(|q| {
            let mut s = BitSet::new(p.n_facets());
            for (fi, (a, b)) in p.normals().iter().zip(p.rhs()).enumerate() {
                if dot(a, q) == *b {
                    s.insert(fi);
                }
            }
            s
        })
        .collect();

    let mut cells: Vec<Vec<usize>> = t.cells.clone();
    let mut shared: Vec<usize> = cells[0].clone();
    for cell in &cells[1..] {
        shared.retain(|i| cell.binary_search(i).is_ok());
    }
    if shared.len() == 1 {
        let apex = shared[0];
        let apex_interior = tight[apex].count() == 0;
        let reduced: Vec<Vec<usize>> = cells
            .iter()
            .map(|cell| cell.iter().copied().filter(|&i| i != apex).collect())
            .collect();
        let supported = reduced.iter().all(|cell: &Vec<usize>| {
            !cell.is_empty()
                && cell.iter().any(|&i| tight[i].count() > 0)
                && common_tight(&tight, cell).count() > 0
        });
        if apex_interior && supported {
            cells = reduced;
        }
    }

    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if !cell_pair_meets_in_common_face(t, &tight, &cells[i], &cells[j]) {
                return false;
            }
        }
    }
    true
}

/// Facets tight on every point of the cell.
fn common_tight(tight: &[BitSet], cell: &[usize]) -> BitSet {
    let mut acc = tight[cell[0]].clone();
    for &i in &cell[1..] {
        acc = acc.intersection(&tight[i]);
    }
    acc
}

/// Whether `conv(a) ∩ conv(b) = conv(a ∩ b)` for two affinely independent
/// index cells. Peels each side down by facets that are tight on the whole
/// other side (the intersection cannot leave such a facet's hyperplane);
/// the few pairs that remain go to an exact joint vertex enumeration.
fn cell_pair_meets_in_common_face(
    t: &Triangulation,
    tight: &[BitSet],
    a: &[usize],
    b: &[usize],
) -> bool {
    let s: Vec<usize> = a
        .iter()
        .copied()
        .filter(|i| b.binary_search(i).is_ok())
        .collect();
    let mut a: Vec<usize> = a.to_vec();
    let mut b: Vec<usize> = b.to_vec();
    loop {
        if a.is_empty() || b.is_empty() {
            return s.is_empty();
        }
        let mut progressed = false;
        for f in common_tight(tight, &a).iter() {
            if !b.iter().all(|&i| tight[i].contains(f)) {
                b.retain(|&i| tight[i].contains(f));
                progressed = true;
                break;
            }
        }
        if !progressed {
            for f in common_tight(tight, &b).iter() {
                if !a.iter().all(|&i| tight[i].contains(f)) {
                    a.retain(|&i| tight[i].contains(f));
                    progressed = true;
                    break;
                }
            }
        }
        if !progressed {
            break;
        }
    }
    if a.is_empty() || b.is_empty() {
        return s.is_empty();
    }
    if a == s || b == s {
        // One side shrank to the shared points, whose hull lies inside the
        // other side's hull; the intersection is exactly that hull.
        return true;
    }
    joint_intersection_is_shared_hull(t, &a, &b, &s)
}

/// Decides `conv(a) ∩ conv(b) = conv(s)` by enumerating the vertices of the
/// polytope of convex-combination pairs `(λ, μ)` with `Σλ a = Σμ b` and
/// checking that each witnessed intersection point has a nonnegative
/// barycentric expression over `s`.
fn joint_intersection_is_shared_hull(
    t: &Triangulation,
    a: &[usize],
    b: &[usize],
    s: &[usize],
) -> bool {
    let d = t.dim;
    let m = a.len();
    let n = b.len();
    let nvars = m + n;
    let mut normals: Vec<Vec<Int>> = Vec::new();
    let mut rhs: Vec<Int> = Vec::new();
    for i in 0..nvars {
        let mut row = vec![Int::zero(); nvars];
        row[i] = Int::one();
        normals.push(row);
        rhs.push(Int::zero());
    }
    for (lo, hi) in [(0, m), (m, nvars)] {
        let mut row = vec![Int::zero(); nvars];
        for x in &mut row[lo..hi] {
            *x = Int::one();
        }
        normals.push(row.clone());
        rhs.push(Int::one());
        normals.push(row.iter().map(|x| -x).collect());
        rhs.push(-Int::one());
    }
    for k in 0..d {
        let mut row = Vec::with_capacity(nvars);
        for &i in a {
            row.push(t.points[i][k].clone());
        }
        for &j in b {
            row.push(-&t.points[j][k]);
        }
        normals.push(row.iter().map(|x| -x).collect());
        normals.push(row);
        rhs.push(Int::zero());
        rhs.push(Int::zero());
    }
    let witnesses = match vertices_of_system(nvars, &normals, &rhs) {
        Err(Error::Empty) => return s.is_empty(),
        Err(_) => return false,
        Ok(vs) => vs,
    };
    if s.is_empty() {
        return witnesses.is_empty();
    }
    let barycentric_basis: Vec<Vec<Int>> = s
        .iter()
        .map(|&i| {
            let mut row = t.points[i].clone();
            row.push(Int::one());
            row
        })
        .collect();
    for w in witnesses {
        let mut x: Vec<Rat> = vec![Rat::zero(); d];
        for (idx, &i) in a.iter().enumerate() {
            for (xk, pk) in x.iter_mut().zip(&t.points[i]) {
                *xk += w[idx].clone() * int_to_rat(pk);
            }
        }
        x.push(Rat::one());
        match coordinates_in_row_span(&barycentric_basis, &x) {
            Ok(alpha) => {
                if alpha.iter().any(|c| c.is_negative()) {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

/// Whether every cell of `t` is a lattice basis simplex of its own affine
/// span: the greatest common divisor of the maximal minors of the cell's
/// edge matrix is 1. For a full-dimensional cell this is `|det| = 1`.
pub fn is_unimodular_triangulation(t: &Triangulation) -> bool {
    if t.cells.is_empty() {
        return false;
    }
    t.cells.iter().all(|cell| {
        let m = cell.len();
        if m == 0 || m > t.dim + 1 {
            return false;
        }
        if m == 1 {
            return true;
        }
        let rows: Vec<Vec<Int>> = cell[1..]
            .iter()
            .map(|&i| {
                t.points[i]
                    .iter()
                    .zip(&t.points[cell[0]])
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let matrix = IntMatrix::from_rows(rows);
        let all_rows: Vec<usize> = (0..m - 1).collect();
        let mut g = Int::zero();
        for cols in index_combinations(t.dim, m - 1) {
            let minor = matrix.submatrix(&all_rows, &cols);
            if let Ok(v) = det(&minor) {
                g = g.gcd(&v);
                if g.is_one() {
                    return true;
                }
            }
        }
        g.is_one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vec_i;
    use crate::lattice::is_idp;
    use proptest::prelude::*;

    fn poly(vertices: &[&[i64]]) -> Polytope {
        let pts: Vec<Vec<Int>> = vertices.iter().map(|v| vec_i(v)).collect();
        Polytope::from_lattice_points(&pts).unwrap()
    }

    fn cross2() -> Polytope {
        poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]])
    }

    fn hexagon() -> Polytope {
        poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1], &[-1, -1]])
    }

    fn cross3() -> Polytope {
        poly(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[-1, 0, 0],
            &[0, -1, 0],
            &[0, 0, -1],
        ])
    }

    fn parity_tetrahedron() -> Polytope {
        poly(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn placing_examples() {
        // Three non-collinear points: a single triangle.
        let t = placing_triangulation(&[vec_i(&[0, 0]), vec_i(&[2, 0]), vec_i(&[0, 3])]).unwrap();
        assert_eq!(t.cells, vec![vec![0, 1, 2]]);

        // The unit square's vertices: two triangles along a diagonal.
        let square: Vec<Vec<Int>> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|v| vec_i(v))
            .collect();
        let t = placing_triangulation(&square).unwrap();
        assert_eq!(t.cells.len(), 2);
        assert_eq!(t.used_point_indices(), vec![0, 1, 2, 3]);
        let p = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(verify_triangulation(&p, &t));
        assert!(is_unimodular_triangulation(&t));

        // Collinear input in a larger ambient space triangulates its span.
        let segment: Vec<Vec<Int>> = [[0, 0], [1, 0], [2, 0], [3, 0]]
            .iter()
            .map(|v| vec_i(v))
            .collect();
        let t = placing_triangulation(&segment).unwrap();
        assert_eq!(t.cells, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);

        assert!(matches!(
            placing_triangulation(&[]),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn placing_hexagon_with_center_uses_every_point() {
        let hex = hexagon();
        let pts = lattice_points(&hex).points;
        assert_eq!(pts.len(), 7);
        let t = placing_triangulation(&pts).unwrap();
        // Any triangulation of a polygon using 6 boundary points and the
        // interior center has exactly 2*1 + 6 - 2 = 6 triangles.
        assert_eq!(t.cells.len(), 6);
        assert_eq!(t.used_point_indices().len(), 7);
        assert!(verify_triangulation(&hex, &t));
        assert!(is_unimodular_triangulation(&t));
    }

    #[test]
    fn boundary_examples() {
        let t = boundary_triangulation(&cross2()).unwrap();
        assert_eq!(t.points.len(), 4);
        assert_eq!(t.cells.len(), 4);
        assert!(t.cells.iter().all(|c| c.len() == 2));
        assert!(is_unimodular_triangulation(&t));

        let t = boundary_triangulation(&hexagon()).unwrap();
        assert_eq!(t.points.len(), 6);
        assert_eq!(t.cells.len(), 6);
        assert!(is_unimodular_triangulation(&t));

        let t = boundary_triangulation(&cross3()).unwrap();
        assert_eq!(t.points.len(), 6);
        assert_eq!(t.cells.len(), 8);
        assert!(t.cells.iter().all(|c| c.len() == 3));
        assert!(is_unimodular_triangulation(&t));

        // The unit square is not reflexive (origin is a vertex).
        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(
            boundary_triangulation(&unit),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn centric_examples() {
        for (p, expect_cells) in [(cross2(), 4), (hexagon(), 6), (cross3(), 8)] {
            let boundary = boundary_triangulation(&p).unwrap();
            let t = centric_triangulation(&p, &boundary).unwrap();
            assert_eq!(t.cells.len(), expect_cells);
            let origin = vec![Int::zero(); p.dim()];
            let origin_idx = t.points.binary_search(&origin).unwrap();
            assert!(t.cells.iter().all(|c| c.contains(&origin_idx)));
            assert!(verify_triangulation(&p, &t));
            assert!(is_unimodular_triangulation(&t));
        }

        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let boundary = boundary_triangulation(&cross2()).unwrap();
        assert!(matches!(
            centric_triangulation(&unit, &boundary),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn centric_segment_in_dimension_one() {
        let seg = poly(&[&[-1], &[1]]);
        let boundary = boundary_triangulation(&seg).unwrap();
        assert_eq!(boundary.cells, vec![vec![0], vec![1]]);
        let t = centric_triangulation(&seg, &boundary).unwrap();
        assert_eq!(t.cells, vec![vec![0, 1], vec![1, 2]]);
        assert!(verify_triangulation(&seg, &t));
        assert!(is_unimodular_triangulation(&t));
    }

    #[test]
    fn volume_oracle_values() {
        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(normalized_volume(&unit).unwrap(), Int::from(2));
        let cube3 = poly(&[
            &[-1, -1, -1],
            &[-1, -1, 1],
            &[-1, 1, -1],
            &[-1, 1, 1],
            &[1, -1, -1],
            &[1, -1, 1],
            &[1, 1, -1],
            &[1, 1, 1],
        ]);
        assert_eq!(normalized_volume(&cube3).unwrap(), Int::from(48));
        assert_eq!(normalized_volume(&hexagon()).unwrap(), Int::from(6));
        assert_eq!(normalized_volume(&cross3()).unwrap(), Int::from(8));
        assert_eq!(
            normalized_volume(&parity_tetrahedron()).unwrap(),
            Int::from(2)
        );
        assert_eq!(
            normalized_volume(&poly(&[&[-1], &[1]])).unwrap(),
            Int::from(2)
        );
    }

    #[test]
    fn verify_examples() {
        // The standard simplex as its own single cell: valid and unimodular.
        let simplex = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let t = Triangulation {
            dim: 3,
            points: lattice_points(&simplex).points,
            cells: vec![vec![0, 1, 2, 3]],
        };
        assert!(verify_triangulation(&simplex, &t));
        assert!(is_unimodular_triangulation(&t));

        // A lattice tetrahedron of normalized volume 2: valid, not unimodular.
        let pt = parity_tetrahedron();
        let t = Triangulation {
            dim: 3,
            points: pt.lattice_vertices().unwrap(),
            cells: vec![vec![0, 1, 2, 3]],
        };
        assert!(verify_triangulation(&pt, &t));
        assert!(!is_unimodular_triangulation(&t));
    }

    #[test]
    fn verify_rejects_broken_complexes() {
        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let points: Vec<Vec<Int>> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|v| vec_i(v))
            .collect();

        // {(0,0),(0,1),(1,0)} and {(0,1),(1,0),(1,1)} tile the square.
        let tiled = Triangulation {
            dim: 2,
            points: points.clone(),
            cells: vec![vec![0, 1, 2], vec![1, 2, 3]],
        };
        assert!(verify_triangulation(&unit, &tiled));

        // {(0,0),(0,1),(1,0)} and {(0,0),(1,0),(1,1)} overlap near the
        // origin, yet their volumes still sum to the square's: only the
        // pairwise common-face check can reject this complex.
        let overlapping = Triangulation {
            dim: 2,
            points: points.clone(),
            cells: vec![vec![0, 1, 2], vec![0, 2, 3]],
        };
        assert!(!verify_triangulation(&unit, &overlapping));

        // A single triangle misses half the square: volume identity fails.
        let half = Triangulation {
            dim: 2,
            points: points.clone(),
            cells: vec![vec![0, 1, 2]],
        };
        assert!(!verify_triangulation(&unit, &half));

        // A point outside the polytope fails containment.
        let stray = Triangulation {
            dim: 2,
            points: vec![vec_i(&[0, 0]), vec_i(&[2, 0]), vec_i(&[0, 1])],
            cells: vec![vec![0, 1, 2]],
        };
        assert!(!verify_triangulation(&unit, &stray));

        // A degenerate (affinely dependent) cell is rejected.
        let flat = Triangulation {
            dim: 2,
            points: vec![vec_i(&[0, 0]), vec_i(&[1, 0]), vec_i(&[1, 1])],
            cells: vec![vec![0, 1, 1]],
        };
        assert!(!verify_triangulation(&unit, &flat));
    }

    #[test]
    fn star_unions_over_facets_have_idp() {
        // The union of centric cells over one facet is the pyramid from the
        // origin over that facet; for these reflexive polytopes each such
        // pyramid has the integer decomposition property.
        for p in [cross2(), hexagon(), cross3()] {
            for fi in 0..p.n_facets() {
                let verts = p.lattice_vertices().unwrap();
                let mut pts: Vec<Vec<Int>> = p
                    .vertices_of_facet(fi)
                    .unwrap()
                    .into_iter()
                    .map(|v| verts[v].clone())
                    .collect();
                pts.push(vec![Int::zero(); p.dim()]);
                let star = Polytope::from_lattice_points(&pts).unwrap();
                assert!(is_idp(&star, 3).unwrap().holds, "facet {fi} star");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn placing_triangulations_verify(
            raw in proptest::collection::vec(
                proptest::collection::vec(-3i64..=3, 2),
                3..7,
            )
        ) {
            let pts: Vec<Vec<Int>> = raw.iter().map(|v| vec_i(v)).collect();
            if let Ok(p) = Polytope::from_lattice_points(&pts) {
                let all = lattice_points(&p).points;
                let t = placing_triangulation(&all).unwrap();
                prop_assert!(verify_triangulation(&p, &t));
                prop_assert_eq!(t.used_point_indices().len(), all.len());
            }
        }

        #[test]
        fn placing_triangulations_verify_3d(
            raw in proptest::collection::vec(
                proptest::collection::vec(-2i64..=2, 3),
                4..7,
            )
        ) {
            let pts: Vec<Vec<Int>> = raw.iter().map(|v| vec_i(v)).collect();
            if let Ok(p) = Polytope::from_lattice_points(&pts) {
                let all = lattice_points(&p).points;
                let t = placing_triangulation(&all).unwrap();
                prop_assert!(verify_triangulation(&p, &t));
                prop_assert_eq!(t.used_point_indices().len(), all.len());
            }
        }
    }
}
