use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, IntSymMatrix};

/// Dense rational matrix as a list of rows.
pub type RatMatrix = Vec<Vec<BigRational>>;

pub(crate) fn to_rat(m: &IntMatrix) -> RatMatrix {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(a: &mut RatMatrix, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..a[i].len() {
                    let v = &f * &a[row][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    pivots
}

/// Some solution of `A y = b` over the rationals, or `None` if inconsistent.
pub fn rat_solve(a: &RatMatrix, cols: usize, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.len(), b.len());
    let mut aug: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut y = alloc::vec![BigRational::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        y[pc] = aug[row][cols].clone();
    }
    Some(y)
}

/// A basis of the right kernel of `A` (as column vectors).
pub fn rat_kernel(a: &RatMatrix, cols: usize) -> Vec<Vec<BigRational>> {
    let mut m = a.clone();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
pub fn signature_rational(q: &RatMatrix) -> i64 {
    let n = q.len();
    let mut a = q.clone();
    let mut sig = 0i64;
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                sym_swap(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // a_kk becomes 2 a_kj after adding index j to index k.
                sym_add(&mut a, k, j, &BigRational::one());
            } else {
                k += 1;
                continue;
            }
        }
        let p = a[k][k].clone();
        sig += if p.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if !a[i][k].is_zero() {
                let f = -(&a[i][k] / &p);
                sym_add(&mut a, i, k, &f);
            }
        }
        k += 1;
    }
    sig
}

/// Signature of a symmetric integer matrix.
pub fn signature(q: &IntSymMatrix) -> i64 {
    signature_rational(&to_rat(q.matrix()))
}

fn sym_swap(a: &mut RatMatrix, i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Row and column `dst += f * src`.
fn sym_add(a: &mut RatMatrix, dst: usize, src: usize, f: &BigRational) {
    let n = a.len();
    for j in 0..n {
        let v = f * &a[src][j];
        a[dst][j] += v;
    }
    for row in a.iter_mut() {
        let v = f * &row[src];
        row[dst] += v;
    }
}

/// Integer vector as rationals.
pub(crate) fn rat_vec(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}
