use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{expand_rational, SurgeryPresentation};
use crate::numerics::{rat_solve, rat_vec, smith_normal_form, to_rat, BigRational, IntMatrix};

/// Finitely generated abelian group `Z^rank ⊕ Z/d1 ⊕ ... ⊕ Z/dk` with
/// `1 < d1 | d2 | ... | dk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
    rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new(), rank: 0 }
    }

    /// The direct sum of the cyclic groups `Z/n` (with `Z/0 = Z`), in
    /// invariant-factor form.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let mut rank = 0;
        let mut ds: Vec<BigInt> = Vec::new();
        for n in orders {
            let n = n.abs();
            if n.is_zero() {
                rank += 1;
            } else if !n.is_one() {
                ds.push(n);
            }
        }
        // Replace any non-dividing pair by (gcd, lcm) until the chain holds.
        loop {
            let mut changed = false;
            for i in 0..ds.len() {
                for j in i + 1..ds.len() {
                    if !(&ds[j] % &ds[i]).is_zero() {
                        let (g, l) = (ds[i].gcd(&ds[j]), ds[i].lcm(&ds[j]));
                        ds[i] = g;
                        ds[j] = l;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        ds.retain(|d| !d.is_one());
        ds.sort();
        AbelianGroup { factors: ds, rank }
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.factors.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.factors.iter().product())
    }

    /// Dimension of `Hom(G, Z/2)`.
    pub fn mod2_dimension(&self) -> usize {
        self.rank + self.factors.iter().filter(|d| d.is_even()).count()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in &self.factors {
            write!(f, "{}Z/{d}", if first { "" } else { " + " })?;
            first = false;
        }
        match self.rank {
            0 => Ok(()),
            1 => write!(f, "{}Z", if first { "" } else { " + " }),
            r => write!(f, "{}Z^{r}", if first { "" } else { " + " }),
        }
    }
}

/// First homology of the surgered manifold, as the cokernel of the
/// linking matrix of the integer expansion.
pub fn h1(p: &SurgeryPresentation) -> AbelianGroup {
    let e = expand_rational(p);
    if e.is_empty() {
        return AbelianGroup::trivial();
    }
    let m = e.integer_matrix().expect("expansion is integral");
    AbelianGroup::from_orders(&smith_normal_form(&m).diag)
}

/// Cokernel of an arbitrary integer matrix.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    let mut orders = snf.diag.clone();
    orders.resize(m.rows(), BigInt::zero());
    AbelianGroup::from_orders(&orders)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkingFormError {
    #[error("linking form needs an integer presentation")]
    NotInteger,
    #[error("class vectors must have one entry per component")]
    Shape,
    #[error("class is not torsion")]
    NonTorsion,
}

/// `-x^T Q^{-1} y` in `[0, 1)`, for torsion classes given in meridian
/// coordinates.
pub fn linking_form(p: &SurgeryPresentation, x: &[BigInt], y: &[BigInt]) -> Result<BigRational, LinkingFormError> {
    let q = p.integer_matrix().ok_or(LinkingFormError::NotInteger)?;
    linking_form_matrix(&q, x, y)
}

pub(crate) fn linking_form_matrix(q: &IntMatrix, x: &[BigInt], y: &[BigInt]) -> Result<BigRational, LinkingFormError> {
    let n = q.rows();
    if x.len() != n || y.len() != n {
        return Err(LinkingFormError::Shape);
    }
    let a = to_rat(q);
    let rx = rat_vec(x);
    let ry = rat_vec(y);
    rat_solve(&a, n, &rx).ok_or(LinkingFormError::NonTorsion)?;
    let z = rat_solve(&a, n, &ry).ok_or(LinkingFormError::NonTorsion)?;
    let v: BigRational = -rx.iter().zip(&z).map(|(a, b)| a * b).sum::<BigRational>();
    Ok(&v - v.floor())
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;
    use std::vec;

    use super::super::Component;
    use super::*;
    use crate::numerics::ExtRational;
    use proptest::prelude::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn unknot(r: ExtRational) -> SurgeryPresentation {
        SurgeryPresentation::split(vec![Component::unknot(r)])
    }

    #[test]
    fn group_normalization() {
        assert_eq!(AbelianGroup::from_orders(&b(&[2, 3])).factors(), &b(&[6])[..]);
        assert_eq!(AbelianGroup::from_orders(&b(&[4, 6, 0, 1])).to_string(), "Z/2 + Z/12 + Z");
        assert_eq!(AbelianGroup::from_orders(&b(&[1, -1])).to_string(), "0");
        assert_eq!(AbelianGroup::from_orders(&b(&[0, 0])).to_string(), "Z^2");
    }

    #[test]
    fn h1_examples() {
        assert_eq!(h1(&unknot(ExtRational::zero())).to_string(), "Z");
        assert_eq!(h1(&unknot(ExtRational::ratio(-7, 2))).to_string(), "Z/7");
        assert!(h1(&SurgeryPresentation::empty()).is_trivial());
        let borromean = SurgeryPresentation::split(vec![
            Component::unknot(ExtRational::ratio(4, 3)),
            Component::unknot(ExtRational::ratio(-6, 5)),
            Component::unknot(ExtRational::ratio(9, 2)),
        ]);
        assert_eq!(h1(&borromean), AbelianGroup::from_orders(&b(&[4, 6, 9])));
    }

    #[test]
    fn linking_form_examples() {
        for n in [-5i64, -1, 2, 7] {
            let p = unknot(ExtRational::int(n));
            let v = linking_form(&p, &b(&[1]), &b(&[1])).unwrap();
            let expect = crate::numerics::q(-1, n);
            assert_eq!(v, &expect - expect.floor());
            assert!(linking_form(&p, &b(&[1]), &b(&[0])).unwrap().is_zero());
            let k = linking_form(&p, &b(&[3]), &b(&[3])).unwrap();
            let nine = &v * BigRational::from_integer(9.into());
            assert_eq!(k, &nine - nine.floor());
        }
        assert_eq!(linking_form(&unknot(ExtRational::zero()), &b(&[1]), &b(&[1])), Err(LinkingFormError::NonTorsion));
    }

    fn arb_sym(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(-6i64..7, n * n).prop_map(move |v| {
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in i..n {
                    m[i][j] = v[i * n + j];
                    m[j][i] = v[i * n + j];
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn linking_form_symmetric_bilinear(
            rows in (1usize..5).prop_flat_map(arb_sym),
            xs in proptest::collection::vec(-4i64..5, 12),
        ) {
            let q = IntMatrix::from_rows(&rows);
            let n = q.rows();
            let (x, y, z) = (b(&xs[..n]), b(&xs[4..4 + n]), b(&xs[8..8 + n]));
            let (Ok(xy), Ok(yx)) = (linking_form_matrix(&q, &x, &y), linking_form_matrix(&q, &y, &x)) else {
                return Ok(());
            };
            prop_assert_eq!(&xy, &yx);
            if let Ok(xz) = linking_form_matrix(&q, &x, &z) {
                let yz: Vec<BigInt> = y.iter().zip(&z).map(|(a, b)| a + b).collect();
                let s = linking_form_matrix(&q, &x, &yz).unwrap();
                let t = xy + xz;
                prop_assert_eq!(s, &t - t.floor());
            }
        }
    }
}
