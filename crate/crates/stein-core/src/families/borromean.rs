use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::FamilyError;
use crate::numerics::{floor_q, q, BigRational, ExtRational};

/// Surgery coefficients on the three components of the Borromean rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorromeanCoeffs {
    pub r: [ExtRational; 3],
}

impl BorromeanCoeffs {
    pub fn new(r1: ExtRational, r2: ExtRational, r3: ExtRational) -> Self {
        BorromeanCoeffs { r: [r1, r2, r3] }
    }

    pub fn ints(r1: i64, r2: i64, r3: i64) -> Self {
        Self::new(ExtRational::int(r1), ExtRational::int(r2), ExtRational::int(r3))
    }
}

impl fmt::Display for BorromeanCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.r[0], self.r[1], self.r[2])
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Membership {
    pub in_a0: bool,
    pub in_a2: bool,
    pub in_a3: bool,
}

impl Membership {
    pub fn any(&self) -> bool {
        self.in_a0 || self.in_a2 || self.in_a3
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorromeanReason {
    /// Deleting a component leaves a connected sum of lens spaces.
    InfiniteCoefficient(usize),
    OutsideExceptionalSets,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BorromeanDecision {
    Yes(BorromeanReason),
    Unknown(Membership),
}

impl BorromeanDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, BorromeanDecision::Yes(_))
    }
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn int(n: i64) -> BigRational {
    q(n, 1)
}

/// `⟦-1/r⟧` for `r < 0`.
fn neg_recip_floor(r: &BigRational) -> BigRational {
    BigRational::from_integer(floor_q(&(-r.recip())))
}

fn in_a0(r: &[BigRational; 3]) -> bool {
    r.iter().all(|x| *x >= int(1) && *x < int(4))
}

fn in_a2(r: &[BigRational; 3]) -> bool {
    PERMS.iter().any(|&[i, j, k]| {
        let (r1, r2, r3) = (&r[i], &r[j], &r[k]);
        !r1.is_negative()
            && *r2 >= q(-1, 3)
            && r2.is_negative()
            && *r3 >= int(-2) * neg_recip_floor(r2) - int(1)
            && *r3 < int(-6)
    })
}

fn in_a3(r: &[BigRational; 3]) -> bool {
    if !r.iter().all(Signed::is_negative) {
        return false;
    }
    let within = PERMS.iter().all(|&[i, j, k]| {
        let bound = int(-2) * (neg_recip_floor(&r[i]) + neg_recip_floor(&r[j]) + int(1));
        r[k] >= bound
    });
    let deleted = r.iter().all(|x| *x >= int(-6)) && r.iter().filter(|x| **x >= int(-1)).count() >= 2;
    within && !deleted
}

/// Membership in the exceptional sets `A₀`, `A₂`, `A₃`.
pub fn borromean_membership(c: &BorromeanCoeffs) -> Result<Membership, FamilyError> {
    let mut r: [BigRational; 3] = Default::default();
    for (i, x) in c.r.iter().enumerate() {
        r[i] = x.as_finite().ok_or(FamilyError::Infinite(i))?.clone();
    }
    Ok(Membership { in_a0: in_a0(&r), in_a2: in_a2(&r), in_a3: in_a3(&r) })
}

pub fn decide_borromean(c: &BorromeanCoeffs) -> BorromeanDecision {
    match borromean_membership(c) {
        Err(FamilyError::Infinite(i)) => BorromeanDecision::Yes(BorromeanReason::InfiniteCoefficient(i)),
        Err(_) => unreachable!("membership only fails on infinite coefficients"),
        Ok(m) if m.any() => BorromeanDecision::Unknown(m),
        Ok(_) => BorromeanDecision::Yes(BorromeanReason::OutsideExceptionalSets),
    }
}

/// Surgeries that reduce to Borromean surgeries by Rolfsen twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedFamily {
    /// `r`-surgery on the knot `K(l, m)`; `l = m = ±1` are twist knots.
    TwistKnot { l: i64, m: i64, r: ExtRational },
    /// Surgery on the symmetric link `L(m)`; `m = ±1` are Whitehead links.
    TwoComponent { m: i64, r1: ExtRational, r2: ExtRational },
}

fn neg_recip_int(n: i64) -> ExtRational {
    ExtRational::from_bigint(BigInt::from(n)).recip().neg()
}

pub fn derived_surgery(kind: &DerivedFamily) -> (BorromeanCoeffs, BorromeanDecision) {
    let c = match kind {
        DerivedFamily::TwistKnot { l, m, r } => BorromeanCoeffs::new(neg_recip_int(*l), neg_recip_int(*m), r.clone()),
        DerivedFamily::TwoComponent { m, r1, r2 } => BorromeanCoeffs::new(neg_recip_int(*m), r1.clone(), r2.clone()),
    };
    let d = decide_borromean(&c);
    (c, d)
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;

    use super::*;
    use proptest::prelude::*;

    fn member(a: i64, b: i64, c: i64) -> Membership {
        borromean_membership(&BorromeanCoeffs::ints(a, b, c)).unwrap()
    }

    #[test]
    fn examples() {
        assert!(member(1, 1, 1).in_a0);
        assert!(member(-2, -2, -2).in_a3);
        assert_eq!(member(5, 1, 1), Membership::default());
        assert!(decide_borromean(&BorromeanCoeffs::ints(0, 0, 0)).is_yes());
        let inf = BorromeanCoeffs::new(ExtRational::int(1), ExtRational::Infinity, ExtRational::int(1));
        assert_eq!(decide_borromean(&inf), BorromeanDecision::Yes(BorromeanReason::InfiniteCoefficient(1)));
        assert_eq!(borromean_membership(&inf), Err(FamilyError::Infinite(1)));
        assert!(!decide_borromean(&BorromeanCoeffs::ints(-1, -2, -2)).is_yes());
        let (c, d) = derived_surgery(&DerivedFamily::TwistKnot { l: 1, m: 1, r: ExtRational::int(-10) });
        assert_eq!(c, BorromeanCoeffs::ints(-1, -1, -10));
        assert!(d.is_yes());
        let (c, _) = derived_surgery(&DerivedFamily::TwoComponent { m: 0, r1: ExtRational::int(1), r2: ExtRational::int(2) });
        assert_eq!(c.r[0], ExtRational::Infinity);
    }

    #[test]
    fn integer_census() {
        for a in -10..=10i64 {
            for b in -10..=10i64 {
                for c in -10..=10i64 {
                    let s = [a, b, c];
                    let listed = s.iter().all(|x| (1..=3).contains(x))
                        || (s.iter().filter(|&&x| x == -1).count() == 1
                            && s.iter().filter(|&&x| (-4..=-2).contains(&x)).count() == 2)
                        || s == [-2, -2, -2];
                    let unknown = !decide_borromean(&BorromeanCoeffs::ints(a, b, c)).is_yes();
                    assert_eq!(unknown, listed, "{s:?}");
                }
            }
        }
    }

    fn quarter_grid(lo: i64, hi: i64) -> Vec<BigRational> {
        (4 * lo..=4 * hi).map(|n| q(n, 4)).collect()
    }

    #[test]
    fn twist_knot_exceptions() {
        for l in -4..=4i64 {
            for m in -4..=4i64 {
                for r in quarter_grid(-24, 12) {
                    let kind = DerivedFamily::TwistKnot { l, m, r: ExtRational::Finite(r.clone()) };
                    let unknown = !derived_surgery(&kind).1.is_yes();
                    let i = l == -1 && m == -1 && r >= int(1) && r < int(4);
                    let ii = |l: i64, m: i64| l < 0 && m >= 3 && r >= int(-2 * m - 1) && r < int(-6);
                    let iii = l > 0 && m > 0 && r >= int(-2 * (l + m + 1)) && r < int(-6);
                    assert_eq!(unknown, i || ii(l, m) || ii(m, l) || iii, "l={l} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn two_component_exceptions() {
        let mut grid: Vec<BigRational> = (-28..=16).map(|n| q(n, 2)).collect();
        grid.extend([q(-1, 3), q(-1, 4), q(-1, 5), q(-1, 6), q(-1, 7), q(-2, 7), q(-1, 10)]);
        for m in -4..=4i64 {
            for r1 in &grid {
                for r2 in &grid {
                    let kind = DerivedFamily::TwoComponent {
                        m,
                        r1: ExtRational::Finite(r1.clone()),
                        r2: ExtRational::Finite(r2.clone()),
                    };
                    let unknown = !derived_surgery(&kind).1.is_yes();
                    let a0 = |x: &BigRational| *x >= int(1) && *x < int(4);
                    let i = m == -1 && a0(r1) && a0(r2);
                    let ii = |ri: &BigRational, rj: &BigRational| {
                        m < 0
                            && *ri >= q(-1, 3)
                            && ri.is_negative()
                            && *rj >= int(-2) * neg_recip_floor(ri) - int(1)
                            && *rj < int(-6)
                    };
                    let iii = |ri: &BigRational, rj: &BigRational| {
                        m >= 3 && !ri.is_negative() && *rj >= int(-2 * m - 1) && *rj < int(-6)
                    };
                    let iv = m > 0
                        && r1.is_negative()
                        && r2.is_negative()
                        && (*r1 < int(-6) || *r2 < int(-6) || (*r1 < int(-1) && *r2 < int(-1)))
                        && *r1 >= int(-2) * (neg_recip_floor(r2) + int(m + 1))
                        && *r2 >= int(-2) * (neg_recip_floor(r1) + int(m + 1));
                    let listed = i || ii(r1, r2) || ii(r2, r1) || iii(r1, r2) || iii(r2, r1) || iv;
                    assert_eq!(unknown, listed, "m={m} r1={r1} r2={r2}");
                }
            }
        }
    }

    fn arb_coeff() -> impl Strategy<Value = ExtRational> {
        prop_oneof![
            8 => (-60i64..60, 1i64..12).prop_map(|(p, q)| ExtRational::ratio(p, q)),
            1 => (-12i64..-1).prop_map(|d| ExtRational::ratio(-1, -d)),
            1 => Just(ExtRational::Infinity),
        ]
    }

    proptest! {
        #[test]
        fn decision_is_permutation_invariant(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
            let base = decide_borromean(&BorromeanCoeffs::new(a.clone(), b.clone(), c.clone())).is_yes();
            for p in PERMS {
                let r = [a.clone(), b.clone(), c.clone()];
                let permuted = BorromeanCoeffs::new(r[p[0]].clone(), r[p[1]].clone(), r[p[2]].clone());
                prop_assert_eq!(decide_borromean(&permuted).is_yes(), base);
            }
        }

        #[test]
        fn points_of_a_j_have_j_negative_coordinates(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
            let coeffs = BorromeanCoeffs::new(a, b, c);
            if let Ok(m) = borromean_membership(&coeffs) {
                let neg = coeffs.r.iter().filter(|x| x.as_finite().unwrap().is_negative()).count();
                if m.in_a0 { prop_assert_eq!(neg, 0); }
                if m.in_a2 { prop_assert_eq!(neg, 2); }
                if m.in_a3 { prop_assert_eq!(neg, 3); }
            }
        }
    }
}
