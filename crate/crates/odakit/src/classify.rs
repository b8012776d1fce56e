//! Structural predicates on lattice polytopes: reflexivity, simpliciality,
//! smoothness, smooth Fano, the per-facet lattice-point bound, and the
//! composite hypothesis check for the triangulation-based pair
//! decomposition result.
//!
//! Reflexivity is decided twice over — by facet distances and by duality —
//! and the two verdicts are asserted equal on every call.

use num_traits::{One, Signed, Zero};

use crate::exact::{det, dot, Int, IntMatrix};
use crate::geometry::{Containment, Polytope};
use crate::lattice::lattice_points;
use crate::triangulate::{
    boundary_triangulation, centric_triangulation, is_unimodular_triangulation,
    verify_triangulation,
};

/// Why a polytope is not reflexive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReflexivityFailure {
    /// Some vertex is not a lattice point.
    NotLattice,
    /// The origin is not strictly interior.
    OriginNotInterior,
    /// The named facet's primitive inequality has right-hand side ≠ −1.
    FacetDistance { facet: usize },
}

/// Why a polytope is not smooth Fano.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmoothFanoFailure {
    NotReflexive,
    NotSimplicial,
    /// The named facet's vertices do not form a lattice basis.
    FacetNotBasis {
        facet: usize,
    },
}

/// All predicate outcomes for one polytope, with failure witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub reflexive: bool,
    pub simplicial: bool,
    pub smooth: bool,
    pub smooth_fano: bool,
    /// Lattice points on each facet, in facet order.
    pub facet_lattice_counts: Vec<usize>,
    /// Whether every facet has at most dim + 1 lattice points.
    pub facet_bound_satisfied: bool,
    /// Present exactly when the matching flag is false.
    pub reflexivity_failure: Option<ReflexivityFailure>,
    /// A facet with the wrong vertex count (present iff not simplicial).
    pub simplicial_failure: Option<usize>,
    /// A vertex with bad edge structure (present iff not smooth).
    pub smooth_failure: Option<usize>,
    pub smooth_fano_failure: Option<SmoothFanoFailure>,
}

fn reflexivity_failure(p: &Polytope) -> Option<ReflexivityFailure> {
    if !p.is_lattice() {
        return Some(ReflexivityFailure::NotLattice);
    }
    if !p.origin_strictly_interior() {
        return Some(ReflexivityFailure::OriginNotInterior);
    }
    let minus_one = -Int::one();
    (0..p.n_facets())
        .find(|&f| p.rhs()[f] != minus_one)
        .map(|facet| ReflexivityFailure::FacetDistance { facet })
}

/// Whether `p` is reflexive: a lattice polytope with the origin strictly
/// interior whose facets all lie at lattice distance one (primitive
/// inequality right-hand sides all −1); equivalently, whose dual is again
/// a lattice polytope. Both characterizations are computed and asserted
/// equal.
pub fn is_reflexive(p: &Polytope) -> bool {
    let by_facets = reflexivity_failure(p).is_none();
    let by_dual = p.is_lattice() && p.dual().is_ok_and(|d| d.is_lattice());
    assert_eq!(by_facets, by_dual, "reflexivity criteria disagree");
    by_facets
}

fn simplicial_failure(p: &Polytope) -> Option<usize> {
    (0..p.n_facets())
        .find(|&f| p.vertices_of_facet(f).expect("facet index in range").len() != p.dim())
}

/// Whether every facet of `p` has exactly `dim` vertices.
pub fn is_simplicial(p: &Polytope) -> bool {
    simplicial_failure(p).is_none()
}

fn smooth_failure(p: &Polytope) -> Option<usize> {
    for (i, v) in p.vertices().iter().enumerate() {
        let dirs = p.edges_at_vertex(v).expect("iterating actual vertices");
        if dirs.len() != p.dim() {
            return Some(i);
        }
        let d = det(&IntMatrix::from_rows(dirs)).expect("dim-many rows");
        if !d.abs().is_one() {
            return Some(i);
        }
    }
    None
}

/// Whether `p` is smooth: every vertex meets exactly `dim` edges and the
/// primitive edge directions there form a lattice basis.
pub fn is_smooth(p: &Polytope) -> bool {
    smooth_failure(p).is_none()
}

fn smooth_fano_failure(p: &Polytope) -> Option<SmoothFanoFailure> {
    if !is_reflexive(p) {
        return Some(SmoothFanoFailure::NotReflexive);
    }
    if !is_simplicial(p) {
        return Some(SmoothFanoFailure::NotSimplicial);
    }
    let verts = p
        .lattice_vertices()
        .expect("reflexive polytopes are lattice");
    for f in 0..p.n_facets() {
        let ids = p.vertices_of_facet(f).expect("facet index in range");
        let m = IntMatrix::from_rows(ids.iter().map(|&i| verts[i].clone()).collect());
        if !det(&m).expect("simplicial facet").abs().is_one() {
            return Some(SmoothFanoFailure::FacetNotBasis { facet: f });
        }
    }
    None
}

/// Whether `p` is smooth Fano: simplicial reflexive with the vertices of
/// each facet forming a lattice basis.
pub fn is_smooth_fano(p: &Polytope) -> bool {
    smooth_fano_failure(p).is_none()
}

/// Lattice points lying on each facet, in facet order.
pub fn facet_lattice_counts(p: &Polytope) -> Vec<usize> {
    let pts = lattice_points(p);
    let mut counts = vec![0usize; p.n_facets()];
    for x in &pts.points {
        for (f, (a, b)) in p.normals().iter().zip(p.rhs()).enumerate() {
            if dot(a, x) == *b {
                counts[f] += 1;
            }
        }
    }
    counts
}

/// The largest per-facet lattice-point count, and whether it stays within
/// `dim + 1` (the bound the pair decomposition hypothesis asks for).
pub fn facet_lattice_bound(p: &Polytope) -> (usize, bool) {
    let max = facet_lattice_counts(p).into_iter().max().unwrap_or(0);
    (max, max <= p.dim() + 1)
}

/// All predicates evaluated at once, with witnesses for every failure.
pub fn classify(p: &Polytope) -> ClassificationReport {
    let reflexivity_failure = reflexivity_failure(p);
    let simplicial_failure = simplicial_failure(p);
    let smooth_failure = smooth_failure(p);
    let smooth_fano_failure = smooth_fano_failure(p);
    let facet_lattice_counts = facet_lattice_counts(p);
    let facet_bound_satisfied = facet_lattice_counts.iter().all(|&c| c <= p.dim() + 1);
    // Run the duality cross-check even when assembling the report.
    let reflexive = is_reflexive(p);
    debug_assert_eq!(reflexive, reflexivity_failure.is_none());
    ClassificationReport {
        reflexive,
        simplicial: simplicial_failure.is_none(),
        smooth: smooth_failure.is_none(),
        smooth_fano: smooth_fano_failure.is_none(),
        facet_lattice_counts,
        facet_bound_satisfied,
        reflexivity_failure,
        simplicial_failure,
        smooth_failure,
        smooth_fano_failure,
    }
}

/// Outcome of the constructive search for a centric unimodular
/// triangulation. "Not constructed" means this pipeline failed, never
/// that no unimodular triangulation exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangulationOutcome {
    Constructed { cells: usize },
    NotConstructed { reason: String },
}

/// Hypothesis-by-hypothesis report for the pair decomposition criterion:
/// a simplicial reflexive `P` with at most `dim + 1` lattice points per
/// facet and a (constructed) unimodular triangulation, and a lattice `Q`
/// containing the origin whose vertices all come from `V(P) ∪ {0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairHypothesesReport {
    pub p_reflexive: bool,
    pub p_simplicial: bool,
    pub facet_bound_max: usize,
    pub facet_bound_satisfied: bool,
    pub q_is_lattice: bool,
    pub q_contains_origin: bool,
    /// Every vertex of `Q` is a vertex of `P` or the origin (false on an
    /// ambient dimension mismatch).
    pub q_vertices_from_p: bool,
    pub triangulation: TriangulationOutcome,
}

impl PairHypothesesReport {
    /// Whether every hypothesis is satisfied (triangulation included).
    pub fn all_hold(&self) -> bool {
        self.p_reflexive
            && self.p_simplicial
            && self.facet_bound_satisfied
            && self.q_is_lattice
            && self.q_contains_origin
            && self.q_vertices_from_p
            && matches!(self.triangulation, TriangulationOutcome::Constructed { .. })
    }
}

/// Checks each hypothesis of the pair decomposition criterion for
/// `(p, q)`. The triangulation hypothesis is checked constructively:
/// boundary placing triangulation, centric extension, full verification,
/// unimodularity.
pub fn check_pair_hypotheses(p: &Polytope, q: &Polytope) -> PairHypothesesReport {
    let (facet_bound_max, facet_bound_satisfied) = facet_lattice_bound(p);
    let origin = vec![Int::zero(); q.dim()];
    let q_contains_origin = q
        .contains_lattice(&origin, Containment::Closed)
        .expect("origin has q's dimension");
    let q_vertices_from_p = p.dim() == q.dim()
        && q.vertices()
            .iter()
            .all(|v| v.iter().all(|c| c.is_zero()) || p.vertices().contains(v));
    let triangulation = match boundary_triangulation(p).and_then(|b| centric_triangulation(p, &b)) {
        Ok(t) => {
            if !verify_triangulation(p, &t) {
                TriangulationOutcome::NotConstructed {
                    reason: "constructed complex failed verification".into(),
                }
            } else if !is_unimodular_triangulation(&t) {
                TriangulationOutcome::NotConstructed {
                    reason: "constructed triangulation is not unimodular".into(),
                }
            } else {
                TriangulationOutcome::Constructed { cells: t.n_cells() }
            }
        }
        Err(e) => TriangulationOutcome::NotConstructed {
            reason: e.to_string(),
        },
    };
    PairHypothesesReport {
        p_reflexive: is_reflexive(p),
        p_simplicial: is_simplicial(p),
        facet_bound_max,
        facet_bound_satisfied,
        q_is_lattice: q.is_lattice(),
        q_contains_origin,
        q_vertices_from_p,
        triangulation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, vec_i};
    use proptest::prelude::*;

    fn poly(vertices: &[&[i64]]) -> Polytope {
        let pts: Vec<Vec<Int>> = vertices.iter().map(|v| vec_i(v)).collect();
        Polytope::from_lattice_points(&pts).unwrap()
    }

    fn cross(d: usize) -> Polytope {
        let mut pts = Vec::new();
        for i in 0..d {
            for s in [1i64, -1] {
                let mut v = vec![Int::zero(); d];
                v[i] = int(s);
                pts.push(v);
            }
        }
        Polytope::from_lattice_points(&pts).unwrap()
    }

    fn cube(d: usize, lo: i64, hi: i64) -> Polytope {
        let mut pts = Vec::new();
        for mask in 0u32..(1 << d) {
            pts.push(
                (0..d)
                    .map(|i| int(if mask >> i & 1 == 1 { hi } else { lo }))
                    .collect::<Vec<_>>(),
            );
        }
        Polytope::from_lattice_points(&pts).unwrap()
    }

    fn hexagon_minus() -> Polytope {
        poly(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1], &[1, -1], &[-1, 1]])
    }

    #[test]
    fn reflexivity_examples() {
        assert!(is_reflexive(&cross(2)));
        assert!(is_reflexive(&cross(3)));
        assert!(is_reflexive(&cube(2, -1, 1)));
        assert!(is_reflexive(&hexagon_minus()));
        // Origin on the boundary.
        let p = poly(&[&[0, 0], &[0, 1], &[1, 0]]);
        assert!(!is_reflexive(&p));
        assert_eq!(
            classify(&p).reflexivity_failure,
            Some(ReflexivityFailure::OriginNotInterior)
        );
        // Origin interior but a facet at lattice distance two.
        let p = poly(&[&[2, 0], &[-2, 0], &[0, 1], &[0, -1]]);
        assert!(!is_reflexive(&p));
        assert!(matches!(
            classify(&p).reflexivity_failure,
            Some(ReflexivityFailure::FacetDistance { .. })
        ));
    }

    #[test]
    fn simpliciality_examples() {
        assert!(is_simplicial(&cross(3)));
        assert!(!is_simplicial(&cube(3, -1, 1)));
        assert!(is_simplicial(&hexagon_minus()));
        let report = classify(&cube(3, -1, 1));
        assert!(report.simplicial_failure.is_some());
        assert!(classify(&cross(3)).simplicial_failure.is_none());
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth(&cube(2, 0, 1)));
        assert!(is_smooth(&cube(3, -1, 1)));
        let parity = poly(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert!(!is_smooth(&parity));
        assert!(classify(&parity).smooth_failure.is_some());
        // The cross-polytope in dim 3 is not smooth: vertex e1 has four
        // edges.
        assert!(!is_smooth(&cross(3)));
    }

    #[test]
    fn smooth_fano_examples() {
        assert!(is_smooth_fano(&hexagon_minus()));
        assert!(is_smooth_fano(&cross(2)));
        // Not smooth as a polytope (see above), yet smooth Fano: every
        // facet's vertex triple is a signed permutation basis.
        let p = cross(3);
        assert!(is_reflexive(&p) && is_simplicial(&p));
        assert!(is_smooth_fano(&p));
        // The 2-cube is reflexive but not simplicial in dim 3.
        assert_eq!(
            classify(&cube(3, -1, 1)).smooth_fano_failure,
            Some(SmoothFanoFailure::NotSimplicial)
        );
        assert_eq!(
            classify(&poly(&[&[0, 0], &[0, 1], &[1, 0]])).smooth_fano_failure,
            Some(SmoothFanoFailure::NotReflexive)
        );
    }

    #[test]
    fn facet_bound_examples() {
        assert_eq!(facet_lattice_bound(&cross(3)), (3, true));
        assert_eq!(facet_lattice_bound(&cube(2, -1, 1)), (3, true));
        let (max, ok) = facet_lattice_bound(&cube(3, -1, 1));
        assert_eq!((max, ok), (9, false));
        assert_eq!(facet_lattice_bound(&hexagon_minus()), (2, true));
        // Per-facet counts for the square: every edge has 3 points.
        assert_eq!(facet_lattice_counts(&cube(2, -1, 1)), vec![3, 3, 3, 3]);
    }

    #[test]
    fn pair_hypotheses_examples() {
        let report = check_pair_hypotheses(&cross(2), &poly(&[&[0, 0], &[1, 0], &[0, 1]]));
        assert!(report.all_hold(), "{report:?}");
        assert_eq!(
            report.triangulation,
            TriangulationOutcome::Constructed { cells: 4 }
        );

        let c = cube(3, -1, 1);
        let report = check_pair_hypotheses(&c, &c);
        assert!(!report.all_hold());
        assert!(!report.p_simplicial);
        assert!(!report.facet_bound_satisfied);

        let report = check_pair_hypotheses(&hexagon_minus(), &poly(&[&[0, 0], &[1, 0], &[0, -1]]));
        assert!(report.all_hold(), "{report:?}");

        // Q with a vertex from outside V(P) ∪ {0} fails that hypothesis.
        let report = check_pair_hypotheses(&cross(2), &poly(&[&[0, 0], &[1, 0], &[1, 1]]));
        assert!(!report.q_vertices_from_p);
        assert!(!report.all_hold());
    }

    #[test]
    fn smooth_fano_implies_reflexive_and_simplicial() {
        let catalog = vec![
            cross(2),
            cross(3),
            cube(2, -1, 1),
            cube(3, -1, 1),
            cube(2, 0, 1),
            hexagon_minus(),
            poly(&[&[0, 0], &[0, 1], &[1, 0]]),
            poly(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
        ];
        for p in &catalog {
            let r = classify(p);
            if r.smooth_fano {
                assert!(r.reflexive && r.simplicial);
            }
            // Witnesses appear exactly when the flag is down.
            assert_eq!(r.reflexive, r.reflexivity_failure.is_none());
            assert_eq!(r.simplicial, r.simplicial_failure.is_none());
            assert_eq!(r.smooth, r.smooth_failure.is_none());
            assert_eq!(r.smooth_fano, r.smooth_fano_failure.is_none());
        }
    }

    /// A small unimodular matrix built from random elementary operations.
    fn unimodular_from_ops(dim: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
        let mut rows: Vec<Vec<Int>> = (0..dim)
            .map(|i| (0..dim).map(|j| int(i64::from(i == j))).collect())
            .collect();
        for &(i, j, c) in ops {
            let (i, j) = (i % dim, j % dim);
            if i == j {
                continue;
            }
            let src = rows[j].clone();
            for (k, x) in rows[i].iter_mut().enumerate() {
                *x += &src[k] * int(c);
            }
        }
        IntMatrix::from_rows(rows)
    }

    fn transform(p: &Polytope, u: &IntMatrix) -> Polytope {
        let verts = p.lattice_vertices().expect("catalog polytopes are lattice");
        let moved = IntMatrix::from_rows(verts).mul(u);
        Polytope::from_lattice_points(&moved.to_rows()).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Every predicate is invariant under unimodular coordinate
        /// changes.
        #[test]
        fn predicates_are_unimodular_invariants(
            ops in proptest::collection::vec(
                (0usize..3, 0usize..3, -2i64..=2),
                1..5,
            ),
            which in 0usize..4,
        ) {
            let p = match which {
                0 => cross(2),
                1 => hexagon_minus(),
                2 => cube(2, -1, 1),
                _ => poly(&[&[0, 0], &[0, 1], &[1, 0]]),
            };
            let u = unimodular_from_ops(p.dim(), &ops);
            prop_assert!(det(&u).unwrap().abs().is_one());
            let q = transform(&p, &u);
            prop_assert_eq!(is_reflexive(&p), is_reflexive(&q));
            prop_assert_eq!(is_simplicial(&p), is_simplicial(&q));
            prop_assert_eq!(is_smooth(&p), is_smooth(&q));
            prop_assert_eq!(is_smooth_fano(&p), is_smooth_fano(&q));
            prop_assert_eq!(facet_lattice_bound(&p), facet_lattice_bound(&q));
        }
    }
}
