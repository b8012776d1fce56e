//! Arbitrary-precision integer/rational scalars and fraction-free integer
//! linear algebra: exact determinants, adjugates, Hermite normal form.
//!
//! Everything downstream builds on this module; there is no floating point
//! anywhere in the crate. Rationals are always kept in lowest terms with a
//! positive denominator (enforced by `num-rational`).

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;

/// Exact rational number, always reduced, denominator positive.
pub type Rat = num_rational::BigRational;

/// Shorthand for converting a machine integer.
pub fn int(x: i64) -> Int {
    Int::from(x)
}

/// Shorthand for an exact fraction `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Embeds an integer into the rationals.
pub fn int_to_rat(x: &Int) -> Rat {
    Rat::from_integer(x.clone())
}

/// Converts a machine-integer slice into a big-integer vector.
pub fn vec_i(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| int(x)).collect()
}

/// Converts a machine-integer slice into a rational vector.
pub fn vec_r(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| Rat::from_integer(int(x))).collect()
}

/// Converts an integer vector into a rational vector.
pub fn ints_to_rats(xs: &[Int]) -> Vec<Rat> {
    xs.iter().map(int_to_rat).collect()
}

/// Extracts the integer vector from a rational one, if all entries are integral.
pub fn rats_to_ints(xs: &[Rat]) -> Option<Vec<Int>> {
    xs.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// Exact dot product of integer vectors.
///
/// # Panics
/// Panics on length mismatch (an internal-invariant error, not a data error).
pub fn dot(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact dot product of rational vectors.
pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot_rat: length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Exact dot product of an integer vector with a rational point.
pub fn dot_int_rat(a: &[Int], x: &[Rat]) -> Rat {
    assert_eq!(a.len(), x.len(), "dot_int_rat: length mismatch");
    a.iter()
        .zip(x)
        .map(|(c, v)| Rat::from_integer(c.clone()) * v)
        .sum()
}

/// Divides a nonzero integer vector by the gcd of its entries.
///
/// Returns the primitive vector and the (positive) multiplier `g` such that
/// `v = g * primitive`.
pub fn primitive(v: &[Int]) -> Result<(Vec<Int>, Int)> {
    let mut g = Int::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    let p = v.iter().map(|x| x / &g).collect();
    Ok((p, g))
}

/// Dense row-major matrix of exact integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    /// Builds a matrix from a list of equal-length rows.
    ///
    /// # Panics
    /// Panics if the rows have differing lengths.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from machine-integer rows (test/fixture convenience).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| vec_i(r)).collect())
    }

    /// The `n`-by-`n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix {
            rows: n,
            cols: n,
            data: vec![Int::zero(); n * n],
        };
        for i in 0..n {
            m.data[i * n + i] = Int::one();
        }
        m
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Immutable entry access.
    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    /// One row as a slice.
    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// All rows as owned vectors.
    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Transposed copy.
    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Exact matrix product `self * other`.
    ///
    /// # Panics
    /// Panics on inner-dimension mismatch.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product: inner dimensions differ"
        );
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut s = Int::zero();
                for k in 0..self.cols {
                    s += self.get(i, k) * other.get(k, j);
                }
                data.push(s);
            }
        }
        IntMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// The submatrix selected by row and column index lists (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        IntMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(i)
                    .iter()
                    .map(Int::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )?;
        }
        write!(f, "]")
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
///
/// Intermediate entries stay integral (each division is exact), which keeps
/// growth polynomial instead of the exponential blowup of naive fractions.
pub fn det(m: &IntMatrix) -> Result<Int> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(Int::one());
    }
    let mut a = m.to_rows();
    let mut sign = 1i32;
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Int::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Sylvester's identity
            }
            a[i][k] = Int::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// The adjugate matrix: `m * adjugate(m) = det(m) * identity`.
///
/// Computed by cofactor determinants; intended for the small square systems
/// that seed the double description method (n <= 7 in practice).
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let idx: Vec<usize> = (0..n).collect();
    let mut data = vec![Int::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            // Cofactor C_{j,i} goes to entry (i, j) of the adjugate.
            let rs: Vec<usize> = idx.iter().copied().filter(|&r| r != j).collect();
            let cs: Vec<usize> = idx.iter().copied().filter(|&c| c != i).collect();
            let minor = det(&m.submatrix(&rs, &cs))?;
            data[i * n + j] = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    Ok(IntMatrix {
        rows: n,
        cols: n,
        data,
    })
}

/// Inverse of a matrix with determinant ±1 (an integer matrix again).
pub fn inverse_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let d = det(m)?;
    if !d.abs().is_one() {
        return Err(Error::NotALatticeBasis { det: d.to_string() });
    }
    let adj = adjugate(m)?;
    if d.is_one() {
        Ok(adj)
    } else {
        let data = adj.data.into_iter().map(|x| -x).collect();
        Ok(IntMatrix {
            rows: adj.rows,
            cols: adj.cols,
            data,
        })
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `H = U * M`, `U` integral with `det(U) = ±1`, `H`
/// in upper-echelon form: pivot columns strictly increase, pivots are
/// positive, entries above each pivot are reduced into `[0, pivot)`, and zero
/// rows sit at the bottom. `H` is a canonical representative of the row
/// lattice of `M`, so two integer matrices generate the same lattice exactly
/// when their forms agree.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut h = m.to_rows();
    let mut u = IntMatrix::identity(rows).to_rows();
    let mut r = 0usize;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // Repeatedly combine rows until at most one nonzero remains in this
        // column at or below position r.
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !h[i][col].is_zero() {
                    best = match best {
                        None => Some(i),
                        Some(b) if h[i][col].abs() < h[b][col].abs() => Some(i),
                        keep => keep,
                    };
                }
            }
            let Some(b) = best else { break };
            h.swap(r, b);
            u.swap(r, b);
            if h[r][col].is_negative() {
                negate_row(&mut h[r]);
                negate_row(&mut u[r]);
            }
            let mut done = true;
            for i in r + 1..rows {
                if !h[i][col].is_zero() {
                    let q = h[i][col].div_floor(&h[r][col]);
                    row_sub_mul(&mut h, i, r, &q);
                    row_sub_mul(&mut u, i, r, &q);
                    if !h[i][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h[r][col].is_zero() {
            continue; // no pivot in this column
        }
        // Reduce the entries above the pivot into [0, pivot).
        for i in 0..r {
            if !h[i][col].is_zero() {
                let q = h[i][col].div_floor(&h[r][col]);
                row_sub_mul(&mut h, i, r, &q);
                row_sub_mul(&mut u, i, r, &q);
            }
        }
        r += 1;
    }
    (IntMatrix::from_rows(h), IntMatrix::from_rows(u))
}

fn negate_row(row: &mut [Int]) {
    for x in row {
        *x = -std::mem::take(x);
    }
}

/// `rows[i] -= q * rows[j]`, with `i != j`.
fn row_sub_mul(rows: &mut [Vec<Int>], i: usize, j: usize, q: &Int) {
    if q.is_zero() {
        return;
    }
    let rj = rows[j].clone();
    for (x, y) in rows[i].iter_mut().zip(rj) {
        *x -= q * y;
    }
}

/// Matrix rank over the rationals (= rank over the integers).
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.nrows())
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .count()
}

/// Indices of a maximal linearly independent subset of rows, greedily from
/// the top (deterministic).
pub fn independent_rows(m: &IntMatrix) -> Vec<usize> {
    let mut basis: Vec<Vec<Rat>> = Vec::new(); // reduced echelon rows
    let mut picked = Vec::new();
    for i in 0..m.nrows() {
        let mut w: Vec<Rat> = m.row(i).iter().map(int_to_rat).collect();
        for b in &basis {
            let p = b
                .iter()
                .position(|x| !x.is_zero())
                .expect("basis rows nonzero");
            if !w[p].is_zero() {
                let f = w[p].clone() / b[p].clone();
                for (x, y) in w.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if w.iter().any(|x| !x.is_zero()) {
            basis.push(w);
            picked.push(i);
        }
    }
    picked
}

/// All `k`-element subsets of `{0, .., n-1}` in lexicographic order.
pub(crate) fn index_combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance to the next combination, rightmost movable index first.
        let mut i = k;
        while i > 0 {
            i -= 1;
            if cur[i] != i + n - k {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor-expansion determinant: independent oracle for sizes <= 4.
    fn det_cofactor(m: &IntMatrix) -> Int {
        let n = m.nrows();
        assert_eq!(n, m.ncols());
        if n == 0 {
            return Int::one();
        }
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Int::zero();
        let rows: Vec<usize> = (1..n).collect();
        for j in 0..n {
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = det_cofactor(&m.submatrix(&rows, &cols));
            let term = m.get(0, j) * minor;
            acc += if j % 2 == 0 { term } else { -term };
        }
        acc
    }

    fn is_echelon(h: &IntMatrix) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero_row = false;
        for i in 0..h.nrows() {
            let pivot = h.row(i).iter().position(|x| !x.is_zero());
            match pivot {
                None => seen_zero_row = true,
                Some(p) => {
                    if seen_zero_row {
                        return false; // nonzero row below a zero row
                    }
                    if let Some(lp) = last_pivot {
                        if p <= lp {
                            return false;
                        }
                    }
                    if h.get(i, p).is_negative() {
                        return false;
                    }
                    for r in 0..i {
                        let e = h.get(r, p);
                        if e.is_negative() || e >= h.get(i, p) {
                            return false;
                        }
                    }
                    last_pivot = Some(p);
                }
            }
        }
        true
    }

    #[test]
    fn primitive_examples() {
        let (p, g) = primitive(&vec_i(&[2, 4, -6])).unwrap();
        assert_eq!(p, vec_i(&[1, 2, -3]));
        assert_eq!(g, int(2));

        let (p, g) = primitive(&vec_i(&[0, 0, -1])).unwrap();
        assert_eq!(p, vec_i(&[0, 0, -1]));
        assert_eq!(g, int(1));

        let (p, g) = primitive(&vec_i(&[6, 10])).unwrap();
        assert_eq!(p, vec_i(&[3, 5]));
        assert_eq!(g, int(2));

        assert!(matches!(primitive(&vec_i(&[0, 0])), Err(Error::ZeroVector)));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&IntMatrix::identity(4)).unwrap(), int(1));
        assert_eq!(
            det(&IntMatrix::from_i64_rows(&[&[1, 1], &[1, -1]])).unwrap(),
            int(-2)
        );
        // |det| = 2 here matches the index-2 row lattice of the same matrix
        // (see `hnf_examples`); the sign is negative by cofactor expansion.
        assert_eq!(
            det(&IntMatrix::from_i64_rows(&[
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1]
            ]))
            .unwrap(),
            int(-2)
        );
        assert!(det(&IntMatrix::from_i64_rows(&[&[1, 2]])).is_err());
    }

    #[test]
    fn det_zero_and_pivoting() {
        // Singular matrix and a matrix that needs a row swap at step 0.
        assert_eq!(
            det(&IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])).unwrap(),
            int(0)
        );
        assert_eq!(
            det(&IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])).unwrap(),
            int(-1)
        );
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(3));
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));

        let m = IntMatrix::from_i64_rows(&[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let (h, u) = hermite_normal_form(&m);
        assert_eq!(u.mul(&m), h);
        assert!(is_echelon(&h));
        let diag_product: Int = (0..3).map(|i| h.get(i, i).clone()).product();
        assert_eq!(diag_product, int(2)); // index-2 sublattice of Z^3

        let m = IntMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        let (h, _) = hermite_normal_form(&m);
        assert_eq!(
            h,
            IntMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 0]]),
            "redundant generator eliminated"
        );
    }

    #[test]
    fn adjugate_and_inverse() {
        let m = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        let inv = inverse_unimodular(&m).unwrap();
        assert_eq!(m.mul(&inv), IntMatrix::identity(2));
        assert_eq!(inv.mul(&m), IntMatrix::identity(2));

        let m2 = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]);
        assert!(inverse_unimodular(&m2).is_err());

        let a = IntMatrix::from_i64_rows(&[&[3, 1], &[4, 2]]);
        let adj = adjugate(&a).unwrap();
        let d = det(&a).unwrap();
        let prod = a.mul(&adj);
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { d.clone() } else { Int::zero() };
                assert_eq!(*prod.get(i, j), want);
            }
        }
    }

    #[test]
    fn combination_enumeration() {
        assert_eq!(
            index_combinations(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(
            index_combinations(4, 1),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(index_combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(index_combinations(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(index_combinations(5, 0), vec![Vec::<usize>::new()]);
        assert_eq!(index_combinations(6, 3).len(), 20);
    }

    #[test]
    fn rank_and_independent_rows() {
        let m = IntMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(independent_rows(&m), vec![0, 1]);

        let m = IntMatrix::from_i64_rows(&[&[0, 0], &[2, 4], &[1, 2], &[0, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(independent_rows(&m), vec![1, 3]);
    }

    proptest! {
        #[test]
        fn det_matches_cofactor_oracle(entries in proptest::collection::vec(-6i64..=6, 16)) {
            for n in 1usize..=4 {
                let rows: Vec<Vec<Int>> =
                    (0..n).map(|i| vec_i(&entries[i * n..(i + 1) * n])).collect();
                let m = IntMatrix::from_rows(rows);
                prop_assert_eq!(det(&m).unwrap(), det_cofactor(&m));
            }
        }

        #[test]
        fn det_is_multiplicative(a in proptest::collection::vec(-4i64..=4, 25),
                                 b in proptest::collection::vec(-4i64..=4, 25)) {
            for n in 3usize..=5 {
                let ma = IntMatrix::from_rows((0..n).map(|i| vec_i(&a[i * n..(i + 1) * n])).collect());
                let mb = IntMatrix::from_rows((0..n).map(|i| vec_i(&b[i * n..(i + 1) * n])).collect());
                prop_assert_eq!(
                    det(&ma.mul(&mb)).unwrap(),
                    det(&ma).unwrap() * det(&mb).unwrap()
                );
            }
        }

        #[test]
        fn primitive_scales(v in proptest::collection::vec(-9i64..=9, 1..6), k in 1i64..=7) {
            prop_assume!(v.iter().any(|&x| x != 0));
            let vi = vec_i(&v);
            let scaled: Vec<Int> = vi.iter().map(|x| x * int(k)).collect();
            let (p, g) = primitive(&vi).unwrap();
            let (pk, gk) = primitive(&scaled).unwrap();
            prop_assert_eq!(pk, p);
            prop_assert_eq!(gk, g * int(k));
        }

        #[test]
        fn hnf_contract(entries in proptest::collection::vec(-9i64..=9, 12)) {
            // 4x3 and 3x4 shapes.
            for &(r, c) in &[(4usize, 3usize), (3, 4)] {
                let m = IntMatrix::from_rows((0..r).map(|i| vec_i(&entries[i * c..(i + 1) * c])).collect());
                let (h, u) = hermite_normal_form(&m);
                prop_assert_eq!(u.mul(&m), h.clone());
                prop_assert!(det(&u).unwrap().abs().is_one());
                prop_assert!(is_echelon(&h));
                // Canonical: re-running on H is a fixed point.
                let (h2, _) = hermite_normal_form(&h);
                prop_assert_eq!(h2, h);
            }
        }
    }
}
