//! Lattice-point enumeration, dilation, the integer decomposition property,
//! and normality with respect to the difference lattice.
//!
//! Enumeration is an axis-aligned bounding-box scan filtered by the exact
//! facet inequalities: trivially correct, and ample at the scale this crate
//! targets. Sumsets are sorted, deduplicated point lists, so memory is
//! bounded by the output.
//!
//! Two increasingly fine properties of a polytope `P` are reported per
//! dilation factor `k`:
//!
//! * **IDP**: every lattice point of `kP` splits into a sum of `k` lattice
//!   points of `P`.
//! * **Normality**: the same, but only demanded of points in the affine
//!   lattice generated by `P`'s own lattice points — the coset
//!   `k·v + L_0`, where `L_0` is spanned by all pairwise differences of
//!   points of `P ∩ Z^n` and `v` is a fixed base point. A polytope can be
//!   normal yet fail IDP when that lattice is a proper sublattice of `Z^n`.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{dot, hermite_normal_form, int, rats_to_ints, Int, IntMatrix, Rat};
use crate::geometry::Polytope;

/// A sorted, duplicate-free list of integer points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePointSet {
    pub dim: usize,
    pub points: Vec<Vec<Int>>,
}

impl LatticePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Membership by binary search.
    pub fn contains(&self, x: &[Int]) -> bool {
        self.points
            .binary_search_by(|p| p.as_slice().cmp(x))
            .is_ok()
    }
}

/// All integer points of a polytope, lexicographically sorted.
pub fn lattice_points(p: &Polytope) -> LatticePointSet {
    let dim = p.dim();
    let mut lo: Vec<Int> = Vec::with_capacity(dim);
    let mut hi: Vec<Int> = Vec::with_capacity(dim);
    for i in 0..dim {
        let coords = p.vertices().iter().map(|v| &v[i]);
        let min = coords.clone().min().expect("polytope has vertices");
        let max = coords.max().expect("polytope has vertices");
        lo.push(min.ceil().to_integer());
        hi.push(max.floor().to_integer());
    }
    let mut points = Vec::new();
    if (0..dim).any(|i| lo[i] > hi[i]) {
        return LatticePointSet { dim, points };
    }
    let inside = |x: &[Int]| {
        p.normals()
            .iter()
            .zip(p.rhs())
            .all(|(a, b)| dot(a, x) >= *b)
    };
    // Odometer scan with the last coordinate fastest: output comes out in
    // lexicographic order without a final sort.
    let mut x = lo.clone();
    loop {
        if inside(&x) {
            points.push(x.clone());
        }
        let mut i = dim - 1;
        loop {
            x[i] += Int::one();
            if x[i] <= hi[i] {
                break;
            }
            x[i] = lo[i].clone();
            if i == 0 {
                return LatticePointSet { dim, points };
            }
            i -= 1;
        }
    }
}

/// The dilation `kP` for an integer factor `k >= 1`.
pub fn dilate(p: &Polytope, k: i64) -> Result<Polytope> {
    if k < 1 {
        return Err(Error::BadDilation { got: k.to_string() });
    }
    if k == 1 {
        return Ok(p.clone());
    }
    let factor = Rat::from_integer(int(k));
    let scaled: Vec<Vec<Rat>> = p
        .vertices()
        .iter()
        .map(|v| v.iter().map(|c| c * &factor).collect())
        .collect();
    Polytope::from_vertices(&scaled)
}

/// The pairwise sumset `{a + b}` of two point sets in the same dimension.
pub fn sumset(a: &LatticePointSet, b: &LatticePointSet) -> Result<LatticePointSet> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    let mut set = std::collections::BTreeSet::new();
    for x in &a.points {
        for y in &b.points {
            let s: Vec<Int> = x.iter().zip(y).map(|(u, v)| u + v).collect();
            set.insert(s);
        }
    }
    Ok(LatticePointSet {
        dim: a.dim,
        points: set.into_iter().collect(),
    })
}

/// Verdict for one dilation factor: does every counted point of `kP`
/// decompose into `k` lattice points of `P`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilationReport {
    pub k: i64,
    pub holds: bool,
    /// Lattice points of `kP` subject to the check (all of them for IDP;
    /// only those in the difference-lattice coset for normality).
    pub checked_count: usize,
    /// Size of the k-fold sumset of `P`'s lattice points.
    pub sumset_count: usize,
    /// Checked points with no decomposition, sorted.
    pub gaps: Vec<Vec<Int>>,
}

/// Per-k report of the integer decomposition property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdpReport {
    pub holds: bool,
    pub per_k: Vec<DilationReport>,
}

/// Checks, for each `k` in `2..=k_max`, whether the lattice points of `kP`
/// all decompose as sums of `k` lattice points of `P`.
pub fn is_idp(p: &Polytope, k_max: i64) -> Result<IdpReport> {
    if k_max < 2 {
        return Err(Error::BadKMax {
            got: k_max.to_string(),
        });
    }
    let base = lattice_points(p);
    let mut fold = base.clone();
    let mut per_k = Vec::new();
    for k in 2..=k_max {
        fold = sumset(&fold, &base)?;
        let dilated = lattice_points(&dilate(p, k)?);
        let gaps: Vec<Vec<Int>> = dilated
            .points
            .iter()
            .filter(|q| !fold.contains(q))
            .cloned()
            .collect();
        per_k.push(DilationReport {
            k,
            holds: gaps.is_empty(),
            checked_count: dilated.len(),
            sumset_count: fold.len(),
            gaps,
        });
    }
    Ok(IdpReport {
        holds: per_k.iter().all(|r| r.holds),
        per_k,
    })
}

/// Per-k normality report relative to the difference lattice of
/// `P ∩ Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub holds: bool,
    pub per_k: Vec<DilationReport>,
    /// Base point `v` anchoring the affine lattice `v + L_0`.
    pub base_point: Vec<Int>,
    /// Index of `L_0` in `Z^n` when it has full rank (product of the
    /// Hermite normal form pivots), `None` otherwise.
    pub lattice_index: Option<Int>,
}

/// Checks, for each `k` in `2..=k_max`, whether every point of
/// `kP ∩ (k·v + L_0)` decomposes into `k` lattice points of `P`.
///
/// `L_0` is the lattice spanned by all pairwise differences of the lattice
/// points of `P`. The definition names a translate `v + L_0`, which is a
/// coset rather than a subgroup; a point of `kP` that is a sum of `k`
/// points from `v + L_0` necessarily lies in `k·v + L_0`, so that coset is
/// the one each dilation is intersected with. The base point `v` is the
/// lexicographically smallest vertex when it is integral, otherwise the
/// lexicographically smallest lattice point.
pub fn is_normal(p: &Polytope, k_max: i64) -> Result<NormalityReport> {
    if k_max < 2 {
        return Err(Error::BadKMax {
            got: k_max.to_string(),
        });
    }
    let base = lattice_points(p);
    if base.is_empty() {
        return Err(Error::NoLatticePoints);
    }
    let v: Vec<Int> = rats_to_ints(&p.vertices()[0]).unwrap_or_else(|| base.points[0].clone());

    // Differences to the base point span the same lattice as all pairwise
    // differences: x - y = (x - v) - (y - v).
    let rows: Vec<Vec<Int>> = base
        .points
        .iter()
        .map(|x| x.iter().zip(&v).map(|(a, b)| a - b).collect())
        .collect();
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(rows));
    let basis: Vec<Vec<Int>> = (0..h.nrows())
        .map(|i| h.row(i).to_vec())
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect();
    let lattice_index = (basis.len() == p.dim()).then(|| {
        basis
            .iter()
            .map(|row| {
                let pivot = row.iter().position(|c| !c.is_zero()).expect("nonzero row");
                row[pivot].clone()
            })
            .product()
    });

    let mut fold = base.clone();
    let mut per_k = Vec::new();
    for k in 2..=k_max {
        fold = sumset(&fold, &base)?;
        let dilated = lattice_points(&dilate(p, k)?);
        let anchor: Vec<Int> = v.iter().map(|c| c * int(k)).collect();
        let in_coset: Vec<Vec<Int>> = dilated
            .points
            .iter()
            .filter(|q| {
                let diff: Vec<Int> = q.iter().zip(&anchor).map(|(a, b)| a - b).collect();
                in_row_lattice(&basis, &diff)
            })
            .cloned()
            .collect();
        let gaps: Vec<Vec<Int>> = in_coset
            .iter()
            .filter(|q| !fold.contains(q))
            .cloned()
            .collect();
        per_k.push(DilationReport {
            k,
            holds: gaps.is_empty(),
            checked_count: in_coset.len(),
            sumset_count: fold.len(),
            gaps,
        });
    }
    Ok(NormalityReport {
        holds: per_k.iter().all(|r| r.holds),
        per_k,
        base_point: v,
        lattice_index,
    })
}

/// Membership of `target` in the row lattice of an echelon (Hermite) basis.
fn in_row_lattice(basis: &[Vec<Int>], target: &[Int]) -> bool {
    let mut t = target.to_vec();
    for row in basis {
        let pivot = row
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero basis row");
        // Entries left of this pivot can no longer be cleared by later
        // rows (their pivots are further right).
        if t[..pivot].iter().any(|c| !c.is_zero()) {
            return false;
        }
        let (q, r) = t[pivot].div_rem(&row[pivot]);
        if !r.is_zero() {
            return false;
        }
        for (tc, rc) in t.iter_mut().zip(row) {
            *tc -= &q * rc;
        }
    }
    t.iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vec_i;
    use crate::geometry::Containment;
    use proptest::prelude::*;

    fn lattice(points: &[&[i64]]) -> Polytope {
        let pts: Vec<Vec<Int>> = points.iter().map(|p| vec_i(p)).collect();
        Polytope::from_lattice_points(&pts).unwrap()
    }

    fn pts(points: &[&[i64]]) -> Vec<Vec<Int>> {
        points.iter().map(|p| vec_i(p)).collect()
    }

    /// Tetrahedron whose only lattice points are its four vertices; it is
    /// normal with respect to its difference lattice but not IDP.
    fn parity_tetrahedron() -> Polytope {
        lattice(&[&[0, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn enumeration_examples() {
        let square = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            lattice_points(&square).points,
            pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]])
        );

        // conv((0,0),(2,1),(3,1)) holds exactly its three vertices; in
        // particular (1,1) is outside.
        let q = lattice(&[&[0, 0], &[2, 1], &[3, 1]]);
        assert_eq!(lattice_points(&q).points, pts(&[&[0, 0], &[2, 1], &[3, 1]]));

        let tet = parity_tetrahedron();
        assert_eq!(
            lattice_points(&tet).points,
            pts(&[&[0, 0, 0], &[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])
        );
    }

    #[test]
    fn dilation_examples() {
        let segment = lattice(&[&[0], &[1]]);
        let doubled = dilate(&segment, 2).unwrap();
        assert_eq!(doubled, lattice(&[&[0], &[2]]));

        let tet = parity_tetrahedron();
        assert_eq!(dilate(&tet, 1).unwrap(), tet);
        let twice = dilate(&tet, 2).unwrap();
        assert!(twice
            .contains_lattice(&vec_i(&[1, 1, 1]), Containment::Closed)
            .unwrap());
        assert_eq!(lattice_points(&twice).len(), 11);

        assert!(matches!(dilate(&tet, 0), Err(Error::BadDilation { .. })));
    }

    #[test]
    fn sumset_counts() {
        let square = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let base = lattice_points(&square);
        let double = sumset(&base, &base).unwrap();
        assert_eq!(double.len(), 9);
        assert!(double.contains(&vec_i(&[2, 2])));
    }

    #[test]
    fn idp_verdicts() {
        let square = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let report = is_idp(&square, 3).unwrap();
        assert!(report.holds);
        assert_eq!(report.per_k.len(), 2);

        let cross = lattice(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert!(is_idp(&cross, 2).unwrap().holds);

        let tet = parity_tetrahedron();
        let report = is_idp(&tet, 3).unwrap();
        assert!(!report.holds);
        assert_eq!(report.per_k[0].k, 2);
        assert!(!report.per_k[0].holds);
        assert_eq!(report.per_k[0].gaps, pts(&[&[1, 1, 1]]));
        assert_eq!(report.per_k[0].checked_count, 11);
        assert_eq!(report.per_k[0].sumset_count, 10);
        // The k = 3 gaps are the odd-coordinate-sum points of 3P.
        assert_eq!(
            report.per_k[1].gaps,
            pts(&[&[1, 1, 1], &[1, 2, 2], &[2, 1, 2], &[2, 2, 1]])
        );

        assert!(matches!(is_idp(&square, 1), Err(Error::BadKMax { .. })));
    }

    #[test]
    fn normality_verdicts() {
        let square = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let report = is_normal(&square, 3).unwrap();
        assert!(report.holds);
        assert_eq!(report.lattice_index, Some(int(1)));

        // The parity tetrahedron is normal relative to its index-2
        // difference lattice even though it is not IDP: the lone IDP gap
        // (1,1,1) has odd coordinate sum, so it is outside the lattice.
        let tet = parity_tetrahedron();
        let report = is_normal(&tet, 3).unwrap();
        assert!(report.holds);
        assert_eq!(report.lattice_index, Some(int(2)));
        assert_eq!(report.base_point, vec_i(&[0, 0, 0]));
        assert_eq!(report.per_k[0].checked_count, 10);
        assert_eq!(report.per_k[1].checked_count, 20);

        // A unimodular simplex is normal and IDP for every k.
        let simplex = lattice(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(is_normal(&simplex, 4).unwrap().holds);
        assert!(is_idp(&simplex, 4).unwrap().holds);
    }

    #[test]
    fn lattice_membership_helper() {
        // Basis {(1,1,0),(0,2,0)}: contains (1,3,0) but not (1,2,0) or
        // anything with a third coordinate.
        let basis = pts(&[&[1, 1, 0], &[0, 2, 0]]);
        assert!(in_row_lattice(&basis, &vec_i(&[1, 3, 0])));
        assert!(!in_row_lattice(&basis, &vec_i(&[1, 2, 0])));
        assert!(!in_row_lattice(&basis, &vec_i(&[0, 0, 1])));
        assert!(in_row_lattice(&basis, &vec_i(&[0, 0, 0])));
    }

    /// Random 0/1 polytope of the given dimension, if the sampled point
    /// set is full-dimensional.
    fn random_01_polytope(dim: usize, seed: u64) -> Option<Polytope> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<Vec<Int>> = Vec::new();
        for code in 0..(1i64 << dim) {
            if rng.gen_bool(0.6) {
                points.push((0..dim).map(|i| int((code >> i) & 1)).collect());
            }
        }
        if points.len() <= dim {
            return None;
        }
        Polytope::from_lattice_points(&points).ok()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn dilation_point_counts_are_monotone(dim in 2usize..=3, seed in any::<u64>()) {
            let p = match random_01_polytope(dim, seed) {
                Some(p) => p,
                None => return Ok(()),
            };
            let mut last = 0usize;
            for k in 1..=3 {
                let n = lattice_points(&dilate(&p, k).unwrap()).len();
                prop_assert!(n >= last);
                last = n;
            }
        }

        /// A unimodular change of coordinates maps the lattice-point set of
        /// a polytope bijectively onto the transformed set.
        #[test]
        fn unimodular_invariance(dim in 2usize..=3, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let p = match random_01_polytope(dim, seed) {
                Some(p) => p,
                None => return Ok(()),
            };
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
            // Random unimodular map: a few integer shear operations on the
            // identity.
            let mut u = IntMatrix::identity(dim);
            for _ in 0..6 {
                let i = rng.gen_range(0..dim);
                let mut j = rng.gen_range(0..dim);
                if i == j {
                    j = (j + 1) % dim;
                }
                let c = int(rng.gen_range(-2..=2));
                let mut rows = u.to_rows();
                let source = rows[j].clone();
                for (a, b) in rows[i].iter_mut().zip(&source) {
                    *a += &c * b;
                }
                u = IntMatrix::from_rows(rows);
            }
            {
                use num_traits::Signed;
                prop_assert_eq!(crate::exact::det(&u).unwrap().abs(), int(1));
            }

            let apply = |x: &[Int]| -> Vec<Int> {
                (0..dim).map(|r| dot(u.row(r), x)).collect()
            };
            let transformed_vertices: Vec<Vec<Rat>> = p
                .vertices()
                .iter()
                .map(|v| {
                    let iv = rats_to_ints(v).unwrap();
                    apply(&iv).iter().map(|c| Rat::from_integer(c.clone())).collect()
                })
                .collect();
            let q = Polytope::from_vertices(&transformed_vertices).unwrap();

            let mut mapped: Vec<Vec<Int>> = lattice_points(&p)
                .points
                .iter()
                .map(|x| apply(x))
                .collect();
            mapped.sort();
            prop_assert_eq!(lattice_points(&q).points, mapped);
        }
    }

    #[test]
    fn lattice_point_free_sliver() {
        // A full-dimensional quadrilateral with integral facets but
        // rational vertices and no lattice points at all: normality is
        // undefined, while the IDP check simply fails once a dilation
        // picks up lattice points.
        let sliver = Polytope::from_inequalities(
            &[
                vec_i(&[1, 0]),
                vec_i(&[1, 3]),
                vec_i(&[1, -3]),
                vec_i(&[-4, 1]),
            ],
            &[int(0), int(1), int(-2), int(-2)],
        )
        .unwrap();
        assert_eq!(sliver.n_vertices(), 4);
        assert!(lattice_points(&sliver).is_empty());
        assert!(matches!(is_normal(&sliver, 2), Err(Error::NoLatticePoints)));

        let report = is_idp(&sliver, 2).unwrap();
        assert!(!report.holds);
        assert!(report.per_k[0].gaps.contains(&vec_i(&[0, 1])));
        assert_eq!(report.per_k[0].sumset_count, 0);
    }
}
