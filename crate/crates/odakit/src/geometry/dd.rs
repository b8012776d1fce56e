//! Double description kernel: extreme rays of a pointed polyhedral cone.
//!
//! Everything that converts between vertex and inequality descriptions is
//! reduced to one primitive: given integer rows `m_1, ..., m_k`, enumerate
//! the extreme rays of `{ z : <m_i, z> >= 0 for all i }`, which must be a
//! pointed cone (the rows have full column rank). Rays are returned as
//! primitive integer vectors together with the set of rows they satisfy
//! with equality.

use num_traits::{Signed, Zero};

use super::bits::BitSet;
use crate::error::{Error, Result};
use crate::exact::{adjugate, det, dot, independent_rows, primitive, Int, IntMatrix};

/// An extreme ray: primitive direction plus the set of input rows tight on it.
#[derive(Clone, Debug)]
pub struct Ray {
    pub dir: Vec<Int>,
    pub tight: BitSet,
}

/// Enumerates the extreme rays of `{ z : rows * z >= 0 }`.
///
/// Requires the rows to have full column rank (a pointed cone); otherwise a
/// `DegenerateInput` error is returned — callers check rank up front when
/// they want a domain-specific error instead. Rays come back sorted by
/// direction, with tight sets indexed against `rows`.
pub fn extreme_rays(rows: &[Vec<Int>]) -> Result<Vec<Ray>> {
    let dim = match rows.first() {
        Some(r) => r.len(),
        None => return Err(Error::DegenerateInput("no inequality rows given".into())),
    };
    assert!(
        rows.iter().all(|r| r.len() == dim),
        "ragged inequality rows"
    );
    let matrix = IntMatrix::from_rows(rows.to_vec());
    let basis = independent_rows(&matrix);
    if basis.len() < dim {
        return Err(Error::DegenerateInput(format!(
            "cone is not pointed: rows have rank {} in dimension {dim}",
            basis.len()
        )));
    }

    // Process the D independent rows first; their adjugate gives the initial
    // simplicial cone. Remaining rows are cut in afterwards.
    let mut order = basis.clone();
    let in_basis: BitSet = basis.iter().copied().collect();
    order.extend((0..rows.len()).filter(|i| !in_basis.contains(*i)));

    let b = matrix.submatrix(&basis, &(0..dim).collect::<Vec<_>>());
    let b_det = det(&b).expect("basis submatrix is square");
    let adj = adjugate(&b)?;
    // B * adj = det(B) * I, so column j of adj (negated if det < 0) satisfies
    // all basis rows with equality except row j, where it is positive.
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let mut col: Vec<Int> = (0..dim).map(|i| adj.get(i, j).clone()).collect();
            if b_det.is_negative() {
                for c in &mut col {
                    *c = -c.clone();
                }
            }
            let (dir, _) = primitive(&col).expect("adjugate column of a nonsingular matrix");
            Ray {
                dir,
                tight: BitSet::new(rows.len()),
            }
        })
        .collect();
    let processed: Vec<usize> = order[..dim].to_vec();
    for ray in &mut rays {
        ray.tight = tight_set(&ray.dir, rows, &processed);
    }

    let mut processed = processed;
    for &t in &order[dim..] {
        let row = &rows[t];
        let signs: Vec<Int> = rays.iter().map(|r| dot(row, &r.dir)).collect();
        let any_negative = signs.iter().any(|s| s.is_negative());
        processed.push(t);
        if !any_negative {
            for (ray, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    ray.tight.insert(t);
                }
            }
            continue;
        }

        let pos: Vec<usize> = (0..rays.len())
            .filter(|&i| signs[i].is_positive())
            .collect();
        let neg: Vec<usize> = (0..rays.len())
            .filter(|&i| signs[i].is_negative())
            .collect();
        let mut next: Vec<Ray> = Vec::new();
        for i in (0..rays.len()).filter(|&i| !signs[i].is_negative()) {
            let mut ray = rays[i].clone();
            if signs[i].is_zero() {
                ray.tight.insert(t);
            }
            next.push(ray);
        }
        for &p in &pos {
            for &n in &neg {
                if !adjacent(&rays, p, n, dim) {
                    continue;
                }
                // s_p * dir_n - s_n * dir_p is a nonnegative combination
                // (s_n < 0) lying on the new hyperplane.
                let combo: Vec<Int> = rays[n]
                    .dir
                    .iter()
                    .zip(&rays[p].dir)
                    .map(|(dn, dp)| &signs[p] * dn - &signs[n] * dp)
                    .collect();
                let (dir, _) = primitive(&combo).expect("combination of distinct rays");
                let tight = tight_set(&dir, rows, &processed);
                next.push(Ray { dir, tight });
            }
        }
        next.sort_by(|a, b| a.dir.cmp(&b.dir));
        next.dedup_by(|a, b| a.dir == b.dir);
        rays = next;
    }

    for ray in &mut rays {
        ray.tight = tight_set(&ray.dir, rows, &(0..rows.len()).collect::<Vec<_>>());
    }
    rays.sort_by(|a, b| a.dir.cmp(&b.dir));
    Ok(rays)
}

/// Rows from `which` that vanish on `dir`.
fn tight_set(dir: &[Int], rows: &[Vec<Int>], which: &[usize]) -> BitSet {
    let mut s = BitSet::new(rows.len());
    for &i in which {
        if dot(&rows[i], dir).is_zero() {
            s.insert(i);
        }
    }
    s
}

/// Combinatorial adjacency test: rays `p` and `n` span a 2-face iff no other
/// current ray is tight on everything both of them are tight on.
fn adjacent(rays: &[Ray], p: usize, n: usize, dim: usize) -> bool {
    let common = rays[p].tight.intersection(&rays[n].tight);
    // A 2-face of a pointed cone in dimension `dim` has at least dim - 2
    // linearly independent tight rows.
    if common.count() + 2 < dim {
        return false;
    }
    !rays
        .iter()
        .enumerate()
        .any(|(i, r)| i != p && i != n && common.is_subset(&r.tight))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vec_i;

    fn dirs(rays: &[Ray]) -> Vec<Vec<Int>> {
        rays.iter().map(|r| r.dir.clone()).collect()
    }

    #[test]
    fn orthant_rays() {
        // { z >= 0 } in dimension 3: extreme rays are the unit vectors.
        let rows = vec![vec_i(&[1, 0, 0]), vec_i(&[0, 1, 0]), vec_i(&[0, 0, 1])];
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(
            dirs(&rays),
            vec![vec_i(&[0, 0, 1]), vec_i(&[0, 1, 0]), vec_i(&[1, 0, 0])]
        );
        for ray in &rays {
            assert_eq!(ray.tight.count(), 2);
        }
    }

    #[test]
    fn square_cone_rays() {
        // Homogenized unit square: x >= 0, y >= 0, x <= t, y <= t.
        let rows = vec![
            vec_i(&[1, 0, 0]),
            vec_i(&[0, 1, 0]),
            vec_i(&[-1, 0, 1]),
            vec_i(&[0, -1, 1]),
        ];
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(
            dirs(&rays),
            vec![
                vec_i(&[0, 0, 1]),
                vec_i(&[0, 1, 1]),
                vec_i(&[1, 0, 1]),
                vec_i(&[1, 1, 1]),
            ]
        );
    }

    #[test]
    fn redundant_and_duplicate_rows_are_harmless() {
        let rows = vec![
            vec_i(&[1, 0]),
            vec_i(&[0, 1]),
            vec_i(&[1, 0]),
            vec_i(&[1, 1]),
            vec_i(&[0, 0]),
        ];
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(dirs(&rays), vec![vec_i(&[0, 1]), vec_i(&[1, 0])]);
    }

    #[test]
    fn not_pointed_is_an_error() {
        let rows = vec![vec_i(&[1, 0, 0]), vec_i(&[0, 1, 0])];
        assert!(extreme_rays(&rows).is_err());
    }

    #[test]
    fn hexagon_cone_has_six_rays() {
        // Homogenization of the hexagon with facet normals the six lattice
        // directions at distance 1.
        let normals = [[1i64, 0], [0, 1], [-1, 0], [0, -1], [1, 1], [-1, -1]];
        let mut rows: Vec<Vec<Int>> = normals.iter().map(|a| vec_i(&[a[0], a[1], 1])).collect();
        rows.push(vec_i(&[0, 0, 1]));
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(rays.len(), 6);
        // All rays have t = 1 (lattice vertices) and lie tight on exactly
        // two facet rows.
        for ray in &rays {
            assert_eq!(ray.dir[2], crate::exact::int(1));
            assert_eq!(ray.tight.count(), 2);
        }
    }
}
