//! Exact polytope representations, hull/facet conversion, duality, and face
//! structure.
//!
//! A polytope can be described by its vertices (`VRep`) or by irredundant
//! facet inequalities `<a, x> >= b` with primitive integer inward normals
//! (`HRep`). [`Polytope`] carries both descriptions plus the facet-vertex
//! incidence structure, computed eagerly at construction, so values are
//! immutable and freely shareable afterwards.
//!
//! All conversions run through one exact kernel: the double description
//! method on a pointed cone (see `dd`). Vertex enumeration homogenizes the
//! inequality system, facet enumeration dualizes the homogenized points, and
//! cone containment dualizes generator cones; nothing is ever rounded.
//!
//! The inward convention `<a, x> >= b` makes reflexivity the syntactic test
//! "every rhs equals -1", matching the dual-polytope definition
//! `{u : <u, v> >= -1}` used throughout the classification routines.

pub(crate) mod bits;
pub(crate) mod dd;
pub mod fan;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    dot_int_rat, int_to_rat, ints_to_rats, primitive, rank, rats_to_ints, Int, IntMatrix, Rat,
};
use bits::BitSet;

pub use fan::{face_fan, fan_refines, normal_fan, Cone, Fan};

/// Vertex description: an irredundant list of rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<Vec<Rat>>,
}

impl VRep {
    /// Wraps a vertex list after shape validation (nonempty, common positive
    /// dimension). Irredundancy is the producer's responsibility; use
    /// [`convex_hull`] to reduce an arbitrary point list.
    pub fn new(vertices: Vec<Vec<Rat>>) -> Result<VRep> {
        let dim = check_common_dim(&vertices)?;
        Ok(VRep { dim, vertices })
    }
}

/// Facet description: inequalities `<a_i, x> >= b_i` with inward normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub normals: Vec<Vec<Int>>,
    pub rhs: Vec<Int>,
}

impl HRep {
    /// Wraps an inequality system after shape validation. Normals need not
    /// be primitive or irredundant here; conversions canonicalize.
    pub fn new(normals: Vec<Vec<Int>>, rhs: Vec<Int>) -> Result<HRep> {
        let dim = check_common_dim(&normals)?;
        if normals.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                left: normals.len(),
                right: rhs.len(),
            });
        }
        Ok(HRep { dim, normals, rhs })
    }
}

/// Containment query mode for [`Polytope::contains`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    /// All inequalities hold.
    Closed,
    /// All inequalities hold strictly.
    Strict,
    /// Closed, and at least one inequality is tight.
    Boundary,
}

/// A full-dimensional bounded polytope with both exact descriptions.
///
/// Vertices are sorted lexicographically; facets are sorted by
/// (normal, rhs) with primitive inward normals; the incidence structure
/// records which vertices each facet is tight on. Everything is computed at
/// construction, so a `Polytope` is immutable and cheap to share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
    normals: Vec<Vec<Int>>,
    rhs: Vec<Int>,
    facet_vertices: Vec<BitSet>,
    vertex_facets: Vec<BitSet>,
}

impl Polytope {
    /// Builds the polytope spanned by `points`, which must be
    /// full-dimensional. Redundant points are dropped.
    pub fn from_vertices(points: &[Vec<Rat>]) -> Result<Polytope> {
        let dim = check_common_dim(points)?;
        let pts = dedup_sorted(points);
        let span = affine_span_rank(&pts);
        if span < dim {
            return Err(Error::NotFullDimensional { ambient: dim, span });
        }
        let (normals, rhs) = facets_of_hull(&pts)?;

        // A point of the hull is a vertex iff its tight normals span the
        // ambient space; the same evaluations give the incidence structure.
        let mut vertices = Vec::new();
        let mut tight_sets: Vec<Vec<usize>> = Vec::new();
        for p in &pts {
            let tight: Vec<usize> = (0..normals.len())
                .filter(|&i| dot_int_rat(&normals[i], p) == int_to_rat(&rhs[i]))
                .collect();
            let rows: Vec<Vec<Int>> = tight.iter().map(|&i| normals[i].clone()).collect();
            if !rows.is_empty() && rank(&IntMatrix::from_rows(rows)) == dim {
                vertices.push(p.clone());
                tight_sets.push(tight);
            }
        }

        let mut facet_vertices = vec![BitSet::new(vertices.len()); normals.len()];
        let mut vertex_facets = vec![BitSet::new(normals.len()); vertices.len()];
        for (j, tight) in tight_sets.iter().enumerate() {
            for &i in tight {
                facet_vertices[i].insert(j);
                vertex_facets[j].insert(i);
            }
        }
        debug_assert!(facet_vertices.iter().all(|s| s.count() >= dim));
        debug_assert!(vertex_facets.iter().all(|s| s.count() >= dim));
        Ok(Polytope {
            dim,
            vertices,
            normals,
            rhs,
            facet_vertices,
            vertex_facets,
        })
    }

    /// Convenience constructor for integer points.
    pub fn from_lattice_points(points: &[Vec<Int>]) -> Result<Polytope> {
        let rats: Vec<Vec<Rat>> = points.iter().map(|p| ints_to_rats(p)).collect();
        Polytope::from_vertices(&rats)
    }

    /// Builds the polytope cut out by `<normals[i], x> >= rhs[i]`, which
    /// must be bounded, nonempty, and full-dimensional. Redundant
    /// inequalities are dropped and the rest are scaled primitive.
    pub fn from_inequalities(normals: &[Vec<Int>], rhs: &[Int]) -> Result<Polytope> {
        let h = HRep::new(normals.to_vec(), rhs.to_vec())?;
        let verts = vertices_of_system(h.dim, &h.normals, &h.rhs)?;
        Polytope::from_vertices(&verts)
    }

    /// Ambient (= affine) dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices, sorted lexicographically.
    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// Vertices as integer points, or `None` if some vertex is not integral.
    pub fn lattice_vertices(&self) -> Option<Vec<Vec<Int>>> {
        self.vertices.iter().map(|v| rats_to_ints(v)).collect()
    }

    /// True iff every vertex is a lattice point.
    pub fn is_lattice(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(|c| c.is_integer()))
    }

    /// Primitive inward facet normals, sorted together with [`Self::rhs`].
    pub fn normals(&self) -> &[Vec<Int>] {
        &self.normals
    }

    /// Facet right-hand sides (`<a_i, x> >= b_i`).
    pub fn rhs(&self) -> &[Int] {
        &self.rhs
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_facets(&self) -> usize {
        self.normals.len()
    }

    /// The vertex description.
    pub fn vrep(&self) -> VRep {
        VRep {
            dim: self.dim,
            vertices: self.vertices.clone(),
        }
    }

    /// The facet description.
    pub fn hrep(&self) -> HRep {
        HRep {
            dim: self.dim,
            normals: self.normals.clone(),
            rhs: self.rhs.clone(),
        }
    }

    /// Indices of the vertices a facet is tight on, increasing.
    pub fn vertices_of_facet(&self, facet: usize) -> Result<Vec<usize>> {
        if facet >= self.normals.len() {
            return Err(Error::NoSuchFacet {
                index: facet,
                count: self.normals.len(),
            });
        }
        Ok(self.facet_vertices[facet].iter().collect())
    }

    /// Indices of the facets tight on a vertex, increasing.
    pub fn facets_of_vertex(&self, vertex: usize) -> Result<Vec<usize>> {
        if vertex >= self.vertices.len() {
            return Err(Error::NotAVertex);
        }
        Ok(self.vertex_facets[vertex].iter().collect())
    }

    /// True iff the origin satisfies every inequality strictly.
    pub fn origin_strictly_interior(&self) -> bool {
        self.rhs.iter().all(|b| b.is_negative())
    }

    /// Containment test for a rational point.
    pub fn contains(&self, x: &[Rat], mode: Containment) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: x.len(),
                right: self.dim,
            });
        }
        let mut any_tight = false;
        for (a, b) in self.normals.iter().zip(&self.rhs) {
            let slack = dot_int_rat(a, x) - int_to_rat(b);
            if slack.is_negative() {
                return Ok(false);
            }
            if slack.is_zero() {
                any_tight = true;
            }
        }
        Ok(match mode {
            Containment::Closed => true,
            Containment::Strict => !any_tight,
            Containment::Boundary => any_tight,
        })
    }

    /// Containment test for a lattice point.
    pub fn contains_lattice(&self, x: &[Int], mode: Containment) -> Result<bool> {
        self.contains(&ints_to_rats(x), mode)
    }

    /// The dual polytope `{u : <u, v> >= -1 for all v in P}`.
    ///
    /// Vertices of the dual correspond to facets of `P` via `a / (-b)`;
    /// facets of the dual correspond to vertices of `P`. Requires the
    /// origin strictly interior; fails with `NonIntegralDual` if a vertex
    /// of `P` yields a facet hyperplane that has no integer form.
    pub fn dual(&self) -> Result<Polytope> {
        if !self.origin_strictly_interior() {
            return Err(Error::DualUndefined);
        }
        let dual_vertices: Vec<Vec<Rat>> = self
            .normals
            .iter()
            .zip(&self.rhs)
            .map(|(a, b)| {
                let scale = -int_to_rat(b);
                a.iter().map(|c| int_to_rat(c) / scale.clone()).collect()
            })
            .collect();
        // Facet of the dual from vertex v of P: <v, y> >= -1, scaled to a
        // primitive integer normal. With w = lambda * v (lambda clearing
        // denominators) and g = gcd(w), the inequality is
        // <w/g, y> >= -lambda/g, which must have an integer right-hand side.
        let mut dual_facets: Vec<(Vec<Int>, Int)> = Vec::new();
        for (j, v) in self.vertices.iter().enumerate() {
            let (w, lambda) = scale_to_integer(v);
            let (normal, g) = primitive(&w).map_err(|_| Error::NonIntegralDual { index: j })?;
            let (q, r) = lambda.div_rem(&g);
            if !r.is_zero() {
                return Err(Error::NonIntegralDual { index: j });
            }
            dual_facets.push((normal, -q));
        }
        dual_facets.sort();
        let mut vertices = dual_vertices;
        vertices.sort();
        let normals: Vec<Vec<Int>> = dual_facets.iter().map(|(a, _)| a.clone()).collect();
        let rhs: Vec<Int> = dual_facets.iter().map(|(_, b)| b.clone()).collect();

        let mut facet_vertices = vec![BitSet::new(vertices.len()); normals.len()];
        let mut vertex_facets = vec![BitSet::new(normals.len()); vertices.len()];
        for (i, (a, b)) in normals.iter().zip(&rhs).enumerate() {
            for (j, u) in vertices.iter().enumerate() {
                let slack = dot_int_rat(a, u) - int_to_rat(b);
                assert!(!slack.is_negative(), "dual vertex violates a dual facet");
                if slack.is_zero() {
                    facet_vertices[i].insert(j);
                    vertex_facets[j].insert(i);
                }
            }
        }
        debug_assert!(facet_vertices.iter().all(|s| s.count() >= self.dim));
        debug_assert!(vertex_facets.iter().all(|s| s.count() >= self.dim));
        Ok(Polytope {
            dim: self.dim,
            vertices,
            normals,
            rhs,
            facet_vertices,
            vertex_facets,
        })
    }

    /// Primitive directions of the edges leaving vertex `v`, sorted.
    pub fn edges_at_vertex(&self, v: &[Rat]) -> Result<Vec<Vec<Int>>> {
        let j = self
            .vertices
            .iter()
            .position(|u| u.as_slice() == v)
            .ok_or(Error::NotAVertex)?;
        let mut dirs = Vec::new();
        for k in 0..self.vertices.len() {
            if k == j {
                continue;
            }
            let common = self.vertex_facets[j].intersection(&self.vertex_facets[k]);
            // An edge lies on at least dim - 1 facets.
            if common.count() + 1 < self.dim {
                continue;
            }
            // The smallest face containing both vertices is an edge iff no
            // third vertex is tight on all those facets.
            let face_is_edge = (0..self.vertices.len())
                .filter(|&l| common.is_subset(&self.vertex_facets[l]))
                .all(|l| l == j || l == k);
            if face_is_edge {
                let diff: Vec<Rat> = self.vertices[k]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect();
                dirs.push(primitive_direction(&diff)?);
            }
        }
        dirs.sort();
        Ok(dirs)
    }
}

/// Irredundant vertex set of the convex hull of `points` (any dimension):
/// a point is kept iff it is not in the hull of the others.
pub fn convex_hull(points: &[Vec<Rat>]) -> Result<VRep> {
    let dim = check_common_dim(points)?;
    let pts = dedup_sorted(points);
    if pts.len() == 1 {
        return Ok(VRep { dim, vertices: pts });
    }
    let span = affine_span_rank(&pts);
    if span == dim {
        let p = Polytope::from_vertices(&pts)?;
        return Ok(VRep {
            dim,
            vertices: p.vertices().to_vec(),
        });
    }

    // Lower-dimensional hull: write every point in exact coordinates with
    // respect to a basis of the affine span, recurse there, and map back.
    let origin = pts[0].clone();
    let diffs: Vec<Vec<Rat>> = pts
        .iter()
        .map(|p| {
            p.iter()
                .zip(&origin)
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .collect();
    let basis = independent_rational_rows(&diffs);
    debug_assert_eq!(basis.len(), span);
    let basis_rows: Vec<Vec<Int>> = basis
        .iter()
        .map(|&i| scale_to_integer(&diffs[i]).0)
        .collect();
    let coords: Vec<Vec<Rat>> = diffs
        .iter()
        .map(|d| coordinates_in_row_span(&basis_rows, d))
        .collect::<Result<_>>()?;
    let sub = convex_hull(&coords)?;
    let mut vertices: Vec<Vec<Rat>> = sub
        .vertices
        .iter()
        .map(|c| {
            let mut p = origin.clone();
            for (cj, row) in c.iter().zip(&basis_rows) {
                for (pc, rc) in p.iter_mut().zip(row) {
                    *pc += cj * int_to_rat(rc);
                }
            }
            p
        })
        .collect();
    vertices.sort();
    Ok(VRep { dim, vertices })
}

/// Facet description of the polytope spanned by a vertex description
/// (which must be full-dimensional).
pub fn vrep_to_hrep(v: &VRep) -> Result<HRep> {
    let dim = check_common_dim(&v.vertices)?;
    let pts = dedup_sorted(&v.vertices);
    let span = affine_span_rank(&pts);
    if span < dim {
        return Err(Error::NotFullDimensional { ambient: dim, span });
    }
    let (normals, rhs) = facets_of_hull(&pts)?;
    Ok(HRep { dim, normals, rhs })
}

/// Vertex description of a bounded, feasible inequality system.
pub fn hrep_to_vrep(h: &HRep) -> Result<VRep> {
    let vertices = vertices_of_system(h.dim, &h.normals, &h.rhs)?;
    Ok(VRep {
        dim: h.dim,
        vertices,
    })
}

/// The primitive integer vector pointing in the direction of a nonzero
/// rational vector.
pub fn primitive_direction(x: &[Rat]) -> Result<Vec<Int>> {
    let (scaled, _) = scale_to_integer(x);
    let (dir, _) = primitive(&scaled)?;
    Ok(dir)
}

/// Deletes coordinate `k` from every point: the exact-coordinate projection
/// used to flatten a polytope known to lie in a coordinate hyperplane.
pub fn delete_coordinate(points: &[Vec<Int>], k: usize) -> Vec<Vec<Int>> {
    points
        .iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, c)| c.clone())
                .collect()
        })
        .collect()
}

/// Scales a rational vector by the least common denominator: returns
/// `(lambda * x, lambda)` with `lambda > 0` integral.
fn scale_to_integer(x: &[Rat]) -> (Vec<Int>, Int) {
    let lambda = x.iter().fold(Int::one(), |l, c| l.lcm(c.denom()));
    let ints = x
        .iter()
        .map(|c| c.numer() * (&lambda / c.denom()))
        .collect();
    (ints, lambda)
}

fn check_common_dim<T>(rows: &[Vec<T>]) -> Result<usize> {
    let first = rows
        .first()
        .ok_or_else(|| Error::DegenerateInput("empty input list".into()))?;
    let dim = first.len();
    if dim == 0 {
        return Err(Error::DegenerateInput(
            "ambient dimension must be positive".into(),
        ));
    }
    for r in rows {
        if r.len() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: r.len(),
            });
        }
    }
    Ok(dim)
}

fn dedup_sorted(points: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    pts
}

/// Dimension of the affine span of a (deduplicated) point list.
fn affine_span_rank(pts: &[Vec<Rat>]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let rows: Vec<Vec<Int>> = pts[1..]
        .iter()
        .map(|p| {
            let diff: Vec<Rat> = p
                .iter()
                .zip(&pts[0])
                .map(|(a, b)| a.clone() - b.clone())
                .collect();
            scale_to_integer(&diff).0
        })
        .collect();
    rank(&IntMatrix::from_rows(rows))
}

/// Greedy maximal independent subset of rational rows (indices).
fn independent_rational_rows(rows: &[Vec<Rat>]) -> Vec<usize> {
    let mut picked: Vec<usize> = Vec::new();
    let mut picked_rows: Vec<Vec<Int>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let scaled = scale_to_integer(row).0;
        if scaled.iter().all(|c| c.is_zero()) {
            continue;
        }
        let mut candidate = picked_rows.clone();
        candidate.push(scaled.clone());
        if rank(&IntMatrix::from_rows(candidate)) > picked_rows.len() {
            picked_rows.push(scaled);
            picked.push(i);
        }
    }
    picked
}

/// Exact coordinates of `target` in the row span of integer rows `basis`
/// (full row rank): the unique `c` with `c * basis = target`.
pub(crate) fn coordinates_in_row_span(basis: &[Vec<Int>], target: &[Rat]) -> Result<Vec<Rat>> {
    use crate::exact::{adjugate, det};
    let r = basis.len();
    if r == 0 {
        return Ok(Vec::new());
    }
    let b = IntMatrix::from_rows(basis.to_vec());
    let cols: Vec<usize> = crate::exact::independent_rows(&b.transpose());
    debug_assert_eq!(cols.len(), r);
    let bj = b.submatrix(&(0..r).collect::<Vec<_>>(), &cols);
    let d = det(&bj)?;
    let adj = adjugate(&bj)?;
    // c = target_J * adj(B_J) / det(B_J).
    let c: Vec<Rat> = (0..r)
        .map(|k| {
            let mut acc = Rat::zero();
            for (row, &col) in cols.iter().enumerate() {
                acc += target[col].clone() * int_to_rat(&adj.get(row, k).clone());
            }
            acc / int_to_rat(&d)
        })
        .collect();
    // The target must lie in the row span; verify every coordinate.
    for (col, t) in target.iter().enumerate() {
        let mut acc = Rat::zero();
        for (k, ck) in c.iter().enumerate() {
            acc += ck.clone() * int_to_rat(&b.get(k, col).clone());
        }
        if &acc != t {
            return Err(Error::DegenerateInput(
                "point does not lie in the affine span of the basis".into(),
            ));
        }
    }
    Ok(c)
}

/// Irredundant facet list (primitive inward normals, sorted) of the hull of
/// a full-dimensional, deduplicated point list.
fn facets_of_hull(pts: &[Vec<Rat>]) -> Result<(Vec<Vec<Int>>, Vec<Int>)> {
    let dim = pts[0].len();
    // Homogenize each point to an integer row (lambda*p | lambda); the
    // extreme rays (a | c) of { z : rows * z >= 0 } are exactly the facets
    // <a, x> >= -c of the hull.
    let rows: Vec<Vec<Int>> = pts
        .iter()
        .map(|p| {
            let (mut w, lambda) = scale_to_integer(p);
            w.push(lambda);
            w
        })
        .collect();
    let rays = dd::extreme_rays(&rows)?;
    let mut facets: Vec<(Vec<Int>, Int)> = Vec::with_capacity(rays.len());
    for ray in rays {
        let a = &ray.dir[..dim];
        let c = &ray.dir[dim];
        assert!(
            a.iter().any(|x| !x.is_zero()),
            "trivial inequality cannot be a facet of a bounded full-dimensional hull"
        );
        let (normal, g) = primitive(a)?;
        let (q, r) = (-c).div_rem(&g);
        if !r.is_zero() {
            return Err(Error::NonIntegralFacet);
        }
        facets.push((normal, q));
    }
    facets.sort();
    let normals = facets.iter().map(|(a, _)| a.clone()).collect();
    let rhs = facets.iter().map(|(_, b)| b.clone()).collect();
    Ok((normals, rhs))
}

/// Vertices of `{ x : normals * x >= rhs }`, which must be bounded and
/// feasible. Zero rows are resolved directly; a system whose normals do not
/// span the ambient space is unbounded along the common null directions, so
/// it reduces to an independent-column subsystem to distinguish "empty"
/// from "unbounded".
pub(crate) fn vertices_of_system(
    dim: usize,
    normals: &[Vec<Int>],
    rhs: &[Int],
) -> Result<Vec<Vec<Rat>>> {
    let mut rows_a: Vec<Vec<Int>> = Vec::new();
    let mut rows_b: Vec<Int> = Vec::new();
    for (a, b) in normals.iter().zip(rhs) {
        if a.iter().all(|c| c.is_zero()) {
            if b.is_positive() {
                return Err(Error::Empty);
            }
            continue;
        }
        rows_a.push(a.clone());
        rows_b.push(b.clone());
    }
    if rows_a.is_empty() {
        return Err(Error::Unbounded);
    }

    let a_matrix = IntMatrix::from_rows(rows_a.clone());
    if rank(&a_matrix) < dim {
        // The system is invariant along null(A): nonzero lineality. It is
        // empty iff its restriction to an independent column set is empty;
        // otherwise it is unbounded.
        let cols = crate::exact::independent_rows(&a_matrix.transpose());
        let reduced: Vec<Vec<Int>> = rows_a
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        return match vertices_of_system(cols.len(), &reduced, &rows_b) {
            Err(Error::Empty) => Err(Error::Empty),
            _ => Err(Error::Unbounded),
        };
    }

    let mut rows: Vec<Vec<Int>> = rows_a
        .iter()
        .zip(&rows_b)
        .map(|(a, b)| {
            let mut row = a.clone();
            row.push(-b.clone());
            row
        })
        .collect();
    let mut t_row = vec![Int::zero(); dim];
    t_row.push(Int::one());
    rows.push(t_row);

    let rays = dd::extreme_rays(&rows)?;
    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    let mut recession = false;
    for ray in &rays {
        let t = &ray.dir[dim];
        if t.is_zero() {
            recession = true;
        } else {
            let tr = int_to_rat(t);
            vertices.push(
                ray.dir[..dim]
                    .iter()
                    .map(|c| int_to_rat(c) / tr.clone())
                    .collect(),
            );
        }
    }
    if vertices.is_empty() {
        return Err(Error::Empty);
    }
    if recession {
        return Err(Error::Unbounded);
    }
    vertices.sort();
    Ok(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, vec_i, vec_r};
    use proptest::prelude::*;

    fn lattice(points: &[&[i64]]) -> Polytope {
        let pts: Vec<Vec<Int>> = points.iter().map(|p| vec_i(p)).collect();
        Polytope::from_lattice_points(&pts).unwrap()
    }

    fn rats(points: &[&[i64]]) -> Vec<Vec<Rat>> {
        points.iter().map(|p| vec_r(p)).collect()
    }

    /// The hexagon with vertices {±e1, ±e2, ±(e1−e2)}.
    fn hexagon() -> Polytope {
        lattice(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, -1], &[-1, 1]])
    }

    #[test]
    fn unit_square_faces() {
        let p = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            p.vertices(),
            rats(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]).as_slice()
        );
        assert_eq!(
            p.normals(),
            vec![
                vec_i(&[-1, 0]),
                vec_i(&[0, -1]),
                vec_i(&[0, 1]),
                vec_i(&[1, 0])
            ]
            .as_slice()
        );
        assert_eq!(p.rhs(), vec![int(-1), int(-1), int(0), int(0)].as_slice());
        // Each edge of the square has exactly two incident vertices.
        for i in 0..p.n_facets() {
            assert_eq!(p.vertices_of_facet(i).unwrap().len(), 2);
        }
    }

    #[test]
    fn cross_polytope_hrep() {
        let p = lattice(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(
            p.normals(),
            vec![
                vec_i(&[-1, -1]),
                vec_i(&[-1, 1]),
                vec_i(&[1, -1]),
                vec_i(&[1, 1]),
            ]
            .as_slice()
        );
        assert!(p.rhs().iter().all(|b| *b == int(-1)));
    }

    #[test]
    fn simplex_hrep_to_vrep() {
        // x >= 0, y >= 0, x + y <= 1.
        let h = HRep::new(
            vec![vec_i(&[1, 0]), vec_i(&[0, 1]), vec_i(&[-1, -1])],
            vec![int(0), int(0), int(-1)],
        )
        .unwrap();
        let v = hrep_to_vrep(&h).unwrap();
        assert_eq!(v.vertices, rats(&[&[0, 0], &[0, 1], &[1, 0]]));
    }

    #[test]
    fn hull_drops_interior_and_keeps_degenerate_inputs() {
        let mut pts = rats(&[&[0, 0], &[0, 1], &[1, 0]]);
        pts.push(vec![rat(1, 4), rat(1, 4)]);
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.vertices, rats(&[&[0, 0], &[0, 1], &[1, 0]]));

        // All three points of this triangle-free triple are kept.
        let hull = convex_hull(&rats(&[&[0, 0], &[2, 1], &[3, 1]])).unwrap();
        assert_eq!(hull.vertices, rats(&[&[0, 0], &[2, 1], &[3, 1]]));

        // Single point.
        let hull = convex_hull(&rats(&[&[5, -3]])).unwrap();
        assert_eq!(hull.vertices, rats(&[&[5, -3]]));
    }

    #[test]
    fn lower_dimensional_hull() {
        // Collinear points in the plane: the middle one is redundant.
        let hull = convex_hull(&rats(&[&[0, 0], &[1, 1], &[2, 2]])).unwrap();
        assert_eq!(hull.vertices, rats(&[&[0, 0], &[2, 2]]));

        // A triangle inside the hyperplane x + y + z = 1, with a redundant
        // midpoint-ish interior point.
        let mut pts = rats(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        pts.push(vec![rat(1, 3), rat(1, 3), rat(1, 3)]);
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.vertices, rats(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    }

    #[test]
    fn unbounded_and_empty_systems() {
        // Half-line: unbounded.
        let h = HRep::new(vec![vec_i(&[1])], vec![int(0)]).unwrap();
        assert!(matches!(hrep_to_vrep(&h), Err(Error::Unbounded)));

        // x >= 1 and x <= 0: empty.
        let h = HRep::new(vec![vec_i(&[1]), vec_i(&[-1])], vec![int(1), int(0)]).unwrap();
        assert!(matches!(hrep_to_vrep(&h), Err(Error::Empty)));

        // Strip with lineality: { 0 <= x + y <= 1 } is unbounded...
        let h = HRep::new(
            vec![vec_i(&[1, 1]), vec_i(&[-1, -1])],
            vec![int(0), int(-1)],
        )
        .unwrap();
        assert!(matches!(hrep_to_vrep(&h), Err(Error::Unbounded)));

        // ...while { 1 <= x + y <= 0 } is empty despite the same lineality.
        let h = HRep::new(vec![vec_i(&[1, 1]), vec_i(&[-1, -1])], vec![int(1), int(0)]).unwrap();
        assert!(matches!(hrep_to_vrep(&h), Err(Error::Empty)));

        // Trivially false row: empty.
        let h = HRep::new(vec![vec_i(&[0, 0]), vec_i(&[1, 0])], vec![int(1), int(0)]).unwrap();
        assert!(matches!(hrep_to_vrep(&h), Err(Error::Empty)));
    }

    #[test]
    fn hexagon_facets_and_dual() {
        let p = hexagon();
        assert_eq!(p.n_facets(), 6);
        assert!(p.rhs().iter().all(|b| *b == int(-1)));

        let dual = p.dual().unwrap();
        let expected = lattice(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1], &[-1, -1]]);
        assert_eq!(dual, expected);
        assert_eq!(dual.dual().unwrap(), p);
    }

    #[test]
    fn cube_dual_is_cross_polytope() {
        let cube = lattice(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        let cross = lattice(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(cube.dual().unwrap(), cross);
        assert_eq!(cross.dual().unwrap(), cube);
    }

    #[test]
    fn dual_error_cases() {
        // Origin on the boundary.
        let simplex = lattice(&[&[0, 0], &[0, 1], &[1, 0]]);
        assert!(matches!(simplex.dual(), Err(Error::DualUndefined)));

        // [-2, 2]^2 has facets at lattice distance 2: its dual's facets
        // from the primal vertices have no integer hyperplane.
        let big = lattice(&[&[2, 2], &[2, -2], &[-2, 2], &[-2, -2]]);
        assert!(matches!(big.dual(), Err(Error::NonIntegralDual { .. })));
    }

    #[test]
    fn containment_modes() {
        let square = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let half = vec![rat(1, 2), rat(1, 2)];
        assert!(square.contains(&half, Containment::Strict).unwrap());
        assert!(!square.contains(&half, Containment::Boundary).unwrap());
        assert!(square
            .contains(&vec_r(&[1, 0]), Containment::Boundary)
            .unwrap());
        assert!(!square
            .contains(&vec_r(&[1, 0]), Containment::Strict)
            .unwrap());
        assert!(!square
            .contains(&vec_r(&[2, 0]), Containment::Closed)
            .unwrap());

        let triangle = lattice(&[&[0, 0], &[0, 1], &[1, 0]]);
        assert!(!triangle
            .contains(&vec_r(&[1, 1]), Containment::Closed)
            .unwrap());
    }

    #[test]
    fn edge_directions() {
        let square = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            square.edges_at_vertex(&vec_r(&[0, 0])).unwrap(),
            vec![vec_i(&[0, 1]), vec_i(&[1, 0])]
        );

        assert_eq!(
            hexagon().edges_at_vertex(&vec_r(&[1, 0])).unwrap(),
            vec![vec_i(&[-1, 1]), vec_i(&[0, -1])]
        );

        let simplex3 = lattice(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            simplex3.edges_at_vertex(&vec_r(&[0, 0, 0])).unwrap(),
            vec![vec_i(&[0, 0, 1]), vec_i(&[0, 1, 0]), vec_i(&[1, 0, 0])]
        );

        assert!(matches!(
            square.edges_at_vertex(&vec_r(&[2, 2])),
            Err(Error::NotAVertex)
        ));
    }

    #[test]
    fn delete_coordinate_projects() {
        let pts = vec![vec_i(&[1, 2, 3]), vec_i(&[4, 5, 6])];
        assert_eq!(
            delete_coordinate(&pts, 2),
            vec![vec_i(&[1, 2]), vec_i(&[4, 5])]
        );
        assert_eq!(
            delete_coordinate(&pts, 0),
            vec![vec_i(&[2, 3]), vec_i(&[5, 6])]
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Hulls of random 0/1 point sets in dim <= 4 round-trip through
        /// both representations, and every facet is tight on >= dim
        /// vertices while being valid on all.
        #[test]
        fn zero_one_round_trip(dim in 2usize..=4, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n_points = 1 << dim;
            let mut pts: Vec<Vec<Int>> = Vec::new();
            for code in 0..n_points {
                if rng.gen_bool(0.6) {
                    pts.push((0..dim).map(|i| int((code >> i) & 1)).collect());
                }
            }
            let full_dim = pts.len() > dim && {
                let rats: Vec<Vec<Rat>> = pts.iter().map(|p| ints_to_rats(p)).collect();
                affine_span_rank(&dedup_sorted(&rats)) == dim
            };
            prop_assume!(full_dim);
            let p = Polytope::from_lattice_points(&pts).unwrap();

            // Round trip.
            let v = hrep_to_vrep(&p.hrep()).unwrap();
            prop_assert_eq!(v.vertices.as_slice(), p.vertices());
            let h = vrep_to_hrep(&p.vrep()).unwrap();
            prop_assert_eq!(h.normals.as_slice(), p.normals());
            prop_assert_eq!(h.rhs.as_slice(), p.rhs());

            // Facet tightness and validity.
            for i in 0..p.n_facets() {
                prop_assert!(p.vertices_of_facet(i).unwrap().len() >= dim);
            }
            for pt in &pts {
                prop_assert!(p.contains_lattice(pt, Containment::Closed).unwrap());
            }
        }
    }
}
