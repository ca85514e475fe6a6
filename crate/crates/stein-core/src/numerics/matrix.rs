use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: alloc::vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from rows; all rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(i, k)];
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += x * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// A square symmetric integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSymMatrix(IntMatrix);

impl IntSymMatrix {
    pub fn new(m: IntMatrix) -> Option<Self> {
        m.is_symmetric().then_some(IntSymMatrix(m))
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Option<Self> {
        Self::new(IntMatrix::from_rows(rows))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }
}

impl Index<(usize, usize)> for IntSymMatrix {
    type Output = BigInt;
    fn index(&self, ij: (usize, usize)) -> &BigInt {
        &self.0[ij]
    }
}

/// `left * M * right = diag(diag)` with unimodular witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    /// Nonnegative diagonal entries forming a divisibility chain; length `min(rows, cols)`.
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// Smith normal form by elementary operations with smallest-pivot selection.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut left = IntMatrix::identity(r);
    let mut right = IntMatrix::identity(c);
    let n = r.min(c);
    for t in 0..n {
        loop {
            let Some((pi, pj)) = min_pivot(&a, t) else {
                break;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..r {
                if !a[(i, t)].is_zero() {
                    let qt = -a[(i, t)].div_floor(&a[(t, t)]);
                    a.add_row(i, t, &qt);
                    left.add_row(i, t, &qt);
                    clean &= a[(i, t)].is_zero();
                }
            }
            for j in t + 1..c {
                if !a[(t, j)].is_zero() {
                    let qt = -a[(t, j)].div_floor(&a[(t, t)]);
                    a.add_col(j, t, &qt);
                    right.add_col(j, t, &qt);
                    clean &= a[(t, j)].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let p = a[(t, t)].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    left.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }
    let diag = (0..n).map(|i| a[(i, i)].clone()).collect();
    Snf { diag, left, right }
}

/// Position of the smallest nonzero entry of the block `[t.., t..]`.
fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

impl Snf {
    /// Rebuilds the diagonal matrix `D` of the decomposition.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

/// Determinant of a unimodular-candidate matrix via fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[(n - 1, n - 1)]
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;
    use std::vec;

    use super::*;
    use proptest::prelude::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let s = smith_normal_form(&IntMatrix::from_rows(rows));
        s.diag.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 3]]), [1, 6]);
        assert_eq!(diag_of(&[vec![0, 4], vec![4, 0]]), [4, 4]);
        assert_eq!(diag_of(&[vec![0]]), [0]);
        assert_eq!(diag_of(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), [2, 6, 12]);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&IntMatrix::from_rows(&[vec![2, 1], vec![7, 4]])), BigInt::from(1));
        assert_eq!(determinant(&IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]])), BigInt::from(-2));
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-9i64..10, c), r))
    }

    /// Random unimodular matrix as a product of elementary operations.
    pub(crate) fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
        let mut u = IntMatrix::identity(n);
        for &(i, j, k) in ops {
            let (i, j) = (i % n, j % n);
            if i == j {
                u.swap_rows(i, (i + 1) % n);
            } else {
                u.add_row(i, j, &BigInt::from(k));
            }
        }
        u
    }

    proptest! {
        #[test]
        fn witnesses_reproduce(rows in arb_matrix(6)) {
            let m = IntMatrix::from_rows(&rows);
            let s = smith_normal_form(&m);
            prop_assert_eq!(s.left.mul(&m).mul(&s.right), s.diagonal_matrix());
            prop_assert_eq!(determinant(&s.left).abs(), BigInt::one());
            prop_assert_eq!(determinant(&s.right).abs(), BigInt::one());
            for w in s.diag.windows(2) {
                prop_assert!(!w[0].is_negative());
                prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
            }
        }

        #[test]
        fn invariant_under_unimodular_change(
            rows in arb_matrix(5),
            lops in proptest::collection::vec((0usize..5, 0usize..5, -3i64..4), 0..8),
            rops in proptest::collection::vec((0usize..5, 0usize..5, -3i64..4), 0..8),
        ) {
            let m = IntMatrix::from_rows(&rows);
            let u = unimodular(m.rows(), &lops);
            let v = unimodular(m.cols(), &rops);
            let m2 = u.mul(&m).mul(&v);
            prop_assert_eq!(smith_normal_form(&m).diag, smith_normal_form(&m2).diag);
        }
    }
}
