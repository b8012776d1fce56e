//! Face fans, normal fans, and fan refinement.
//!
//! A fan is stored through its maximal cones only; the face structure is
//! implicit. Cone containment queries convert the candidate container to
//! inequality form on the fly (via the same double description kernel used
//! everywhere else) and test generators exactly.

use num_traits::Signed;

use super::{dd, primitive_direction, Polytope};
use crate::error::{Error, Result};
use crate::exact::{dot, dot_int_rat, primitive, Int, Rat};

/// A polyhedral cone with apex at the origin, described by primitive
/// integer generators (sorted, deduplicated).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<Int>>,
}

impl Cone {
    /// Canonicalizes a nonempty generator list: each generator is scaled
    /// primitive, then the list is sorted and deduplicated.
    pub fn new(dim: usize, rays: Vec<Vec<Int>>) -> Result<Cone> {
        if rays.is_empty() {
            return Err(Error::DegenerateInput(
                "cone needs at least one generator".into(),
            ));
        }
        let mut prim = Vec::with_capacity(rays.len());
        for r in &rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: r.len(),
                });
            }
            prim.push(primitive(r)?.0);
        }
        prim.sort();
        prim.dedup();
        Ok(Cone { dim, rays: prim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.rays
    }

    /// Inequality description `{z : <h, z> >= 0 for all h}`.
    ///
    /// The rows are the extreme rays of the dual cone, so the cone must be
    /// full-dimensional (otherwise its dual is not pointed).
    pub fn inequalities(&self) -> Result<Vec<Vec<Int>>> {
        let dual = dd::extreme_rays(&self.rays).map_err(|_| {
            Error::DegenerateInput(
                "cone is not full-dimensional: no pointed dual description".into(),
            )
        })?;
        Ok(dual.into_iter().map(|r| r.dir).collect())
    }

    /// Closed containment of a rational point.
    pub fn contains_point(&self, x: &[Rat]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: x.len(),
                right: self.dim,
            });
        }
        let ineqs = self.inequalities()?;
        Ok(ineqs.iter().all(|h| !dot_int_rat(h, x).is_negative()))
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                left: other.dim,
                right: self.dim,
            });
        }
        let ineqs = self.inequalities()?;
        Ok(other
            .rays
            .iter()
            .all(|r| ineqs.iter().all(|h| !dot(h, r).is_negative())))
    }
}

/// A fan, stored as its list of maximal cones (sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    cones: Vec<Cone>,
}

impl Fan {
    pub fn new(dim: usize, cones: Vec<Cone>) -> Result<Fan> {
        if cones.is_empty() {
            return Err(Error::DegenerateInput("fan needs at least one cone".into()));
        }
        for c in &cones {
            if c.dim != dim {
                return Err(Error::DimensionMismatch {
                    left: c.dim,
                    right: dim,
                });
            }
        }
        let mut cones = cones;
        cones.sort();
        cones.dedup();
        Ok(Fan { dim, cones })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// Indices of the maximal cones containing a rational point. For a
    /// complete fan the result is nonempty, and a singleton when the point
    /// avoids all shared faces.
    pub fn cones_containing_point(&self, x: &[Rat]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, c) in self.cones.iter().enumerate() {
            if c.contains_point(x)? {
                out.push(i);
            }
        }
        Ok(out)
    }
}

/// The face fan of a polytope with the origin strictly interior: one
/// maximal cone per facet, generated by that facet's vertices.
pub fn face_fan(p: &Polytope) -> Result<Fan> {
    if !p.origin_strictly_interior() {
        return Err(Error::DegenerateInput(
            "face fan requires the origin strictly interior".into(),
        ));
    }
    let mut cones = Vec::with_capacity(p.n_facets());
    for i in 0..p.n_facets() {
        let rays: Vec<Vec<Int>> = p
            .vertices_of_facet(i)?
            .into_iter()
            .map(|j| primitive_direction(&p.vertices()[j]))
            .collect::<Result<_>>()?;
        cones.push(Cone::new(p.dim(), rays)?);
    }
    Fan::new(p.dim(), cones)
}

/// The normal fan: one maximal cone per vertex, generated by the inward
/// normals of the facets meeting that vertex. (For a polytope with interior
/// origin this equals the face fan of its dual, but it is computed from the
/// incidence structure directly, so no interior origin is needed.)
pub fn normal_fan(p: &Polytope) -> Fan {
    let cones: Vec<Cone> = (0..p.n_vertices())
        .map(|j| {
            let rays: Vec<Vec<Int>> = p
                .facets_of_vertex(j)
                .expect("vertex index in range")
                .into_iter()
                .map(|i| p.normals()[i].clone())
                .collect();
            Cone::new(p.dim(), rays).expect("facet normals of a vertex form a cone")
        })
        .collect();
    Fan::new(p.dim(), cones).expect("a polytope has at least one vertex")
}

/// True iff every maximal cone of `fine` is contained in some maximal cone
/// of `coarse`. Both fans must be complete (full-dimensional maximal cones)
/// and share the ambient dimension.
pub fn fan_refines(fine: &Fan, coarse: &Fan) -> Result<bool> {
    if fine.dim != coarse.dim {
        return Err(Error::DimensionMismatch {
            left: fine.dim,
            right: coarse.dim,
        });
    }
    let coarse_ineqs: Vec<Vec<Vec<Int>>> = coarse
        .cones
        .iter()
        .map(|c| c.inequalities())
        .collect::<Result<_>>()?;
    for sigma in &fine.cones {
        let contained = coarse_ineqs.iter().any(|ineqs| {
            sigma
                .rays
                .iter()
                .all(|r| ineqs.iter().all(|h| !dot(h, r).is_negative()))
        });
        if !contained {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{vec_i, vec_r, Rat};

    fn lattice(points: &[&[i64]]) -> Polytope {
        let pts: Vec<Vec<Int>> = points.iter().map(|p| vec_i(p)).collect();
        Polytope::from_lattice_points(&pts).unwrap()
    }

    fn cone2(rays: &[&[i64]]) -> Cone {
        Cone::new(rays[0].len(), rays.iter().map(|r| vec_i(r)).collect()).unwrap()
    }

    fn cross2() -> Polytope {
        lattice(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])
    }

    /// Hexagon with vertices {±e1, ±e2, ±(e1+e2)}.
    fn hexagon_plus() -> Polytope {
        lattice(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, 1], &[-1, -1]])
    }

    #[test]
    fn face_fan_of_square_and_cross() {
        let square = lattice(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        let fan = face_fan(&square).unwrap();
        assert_eq!(fan.cones().len(), 4);
        assert!(fan.cones().contains(&cone2(&[&[1, -1], &[1, 1]])));

        let fan = face_fan(&cross2()).unwrap();
        assert_eq!(fan.cones().len(), 4);
        // The four coordinate quadrants.
        assert!(fan.cones().contains(&cone2(&[&[1, 0], &[0, 1]])));
        assert!(fan.cones().contains(&cone2(&[&[-1, 0], &[0, -1]])));

        assert_eq!(face_fan(&hexagon_plus()).unwrap().cones().len(), 6);
    }

    #[test]
    fn face_fan_needs_interior_origin() {
        let simplex = lattice(&[&[0, 0], &[0, 1], &[1, 0]]);
        assert!(face_fan(&simplex).is_err());
    }

    #[test]
    fn normal_fan_is_face_fan_of_dual() {
        let cube = lattice(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        assert_eq!(normal_fan(&cube), face_fan(&cross2()).unwrap());
        assert_eq!(normal_fan(&cross2()), face_fan(&cube).unwrap());

        let hexagon_minus = lattice(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, -1], &[-1, 1]]);
        assert_eq!(
            normal_fan(&hexagon_minus),
            face_fan(&hexagon_minus.dual().unwrap()).unwrap()
        );
    }

    #[test]
    fn refinement_examples() {
        let hex_fan = face_fan(&hexagon_plus()).unwrap();
        let cross_fan = face_fan(&cross2()).unwrap();
        assert!(fan_refines(&hex_fan, &hex_fan).unwrap());
        assert!(fan_refines(&hex_fan, &cross_fan).unwrap());
        assert!(!fan_refines(&cross_fan, &hex_fan).unwrap());
    }

    #[test]
    fn complete_fan_covers_directions() {
        use rand::{Rng, SeedableRng};
        let fan = face_fan(&hexagon_plus()).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let x: Vec<Rat> = (0..2)
                .map(|_| Rat::from_integer(crate::exact::int(rng.gen_range(-9..=9))))
                .collect();
            let hits = fan.cones_containing_point(&x).unwrap();
            assert!(!hits.is_empty(), "direction {x:?} missed every cone");
        }
    }

    #[test]
    fn cone_queries() {
        let quadrant = cone2(&[&[1, 0], &[0, 1]]);
        assert!(quadrant.contains_point(&vec_r(&[3, 5])).unwrap());
        assert!(!quadrant.contains_point(&vec_r(&[-1, 5])).unwrap());
        assert!(quadrant.contains_cone(&cone2(&[&[1, 1], &[2, 1]])).unwrap());
        assert!(!quadrant.contains_cone(&cone2(&[&[1, -1]])).unwrap());

        // Non-full-dimensional cone has no pointed dual.
        let ray = cone2(&[&[1, 1]]);
        assert!(ray.inequalities().is_err());
    }
}
