use alloc::vec::Vec;

use num_integer::Integer;

use super::{Base, FamilyError, SeifertData};
use crate::numerics::{ExtRational, MobiusMap};

/// Sign of `c = q1 p2 p3 + p1 q2 p3 + p1 p2 q3`; `+` is the orientation as
/// the link of `z1^p1 + z2^p2 + z3^p3 = 0`, with negative Euler number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }
}

/// The Brieskorn sphere `Σ(p1, p2, p3)` as Seifert data with coefficients
/// `p_i / q_i`, normalized to `q1 ∈ (-p1, 0)` and `q2 ∈ (-p2, 0)`.
pub fn brieskorn(p: [i64; 3], orientation: Orientation) -> Result<SeifertData, FamilyError> {
    let qs = brieskorn_denominators(p, orientation.sign())?;
    let cs = p.iter().zip(&qs).map(|(&pi, &qi)| ExtRational::ratio(pi, qi)).collect();
    SeifertData::new(Base::Orientable(0), cs)
}

/// Solves `q1 p2 p3 + p1 q2 p3 + p1 p2 q3 = c`.
pub(crate) fn brieskorn_denominators(p: [i64; 3], c: i64) -> Result<[i64; 3], FamilyError> {
    let [p1, p2, p3] = p;
    if p.iter().any(|&x| x < 2) || p1.gcd(&p2) != 1 || p1.gcd(&p3) != 1 || p2.gcd(&p3) != 1 {
        return Err(FamilyError::NotCoprime);
    }
    let too_large = FamilyError::TooLarge("multiplicities");
    let (p1, p2, p3) = (i128::from(p1), i128::from(p2), i128::from(p3));
    // q_i = c (p_j p_k)^-1 mod p_i, shifted into (-p_i, 0).
    let residue = |pi: i128, other: i128| -> i128 {
        let inv = other.extended_gcd(&pi).x;
        let r = (c as i128 * inv).mod_floor(&pi);
        r - pi
    };
    let q1 = residue(p1, p2 * p3);
    let q2 = residue(p2, p1 * p3);
    let rest = c as i128 - q1 * p2 * p3 - p1 * q2 * p3;
    let q3 = rest / (p1 * p2);
    debug_assert_eq!(rest % (p1 * p2), 0);
    let conv = |x: i128| i64::try_from(x).map_err(|_| too_large.clone());
    Ok([conv(q1)?, conv(q2)?, conv(q3)?])
}

/// `q1 p2 p3 + p1 q2 p3 + p1 p2 q3` for coefficients `p_i / q_i`, or `None`
/// when a coefficient is infinite.
pub fn brieskorn_c(coefficients: &[ExtRational]) -> Option<num_bigint::BigInt> {
    let mut ps: Vec<num_bigint::BigInt> = Vec::new();
    let mut qs: Vec<num_bigint::BigInt> = Vec::new();
    for r in coefficients {
        let q = r.as_finite()?;
        let sign = if q.numer() < &num_bigint::BigInt::from(0) { -1 } else { 1 };
        ps.push(q.numer() * sign);
        qs.push(q.denom() * sign);
    }
    let mut c = num_bigint::BigInt::from(0);
    for i in 0..ps.len() {
        let mut term = qs[i].clone();
        for (j, pj) in ps.iter().enumerate() {
            if j != i {
                term *= pj;
            }
        }
        c += term;
    }
    Some(c)
}

/// Families of Brieskorn spheres with explicit coefficients giving
/// `e0 = -1`, each with the condition that makes them Stein boundaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BrieskornFamily {
    /// `Σ(2, 4l±1, 2(4l±1)m + 4l∓1)`.
    TwoFourLOne,
    /// `Σ(2, 4l±3, 2(4l±3)m + 4l±1)`.
    TwoFourLThree,
    /// `Σ(2, 7, 14m±3)`.
    TwoSeven,
    /// `Σ(2, 9, 18m±5)`.
    TwoNine,
    /// `Σ(3, 4, 12m±5)`.
    ThreeFour,
    /// `Σ(3, 5, 15m±2)`.
    ThreeFiveTwo,
    /// `Σ(3, 5, 15m±4)`.
    ThreeFiveFour,
    /// `Σ(3, 5, 15m±7)`.
    ThreeFiveSeven,
}

/// The condition expected to certify a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyReason {
    /// One coefficient normalizes to the given `r'` and fixes the closed-form bound.
    ClosedForm,
    AllBelowMinusTwo,
    Matrix(MobiusMap),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrieskornInstance {
    pub multiplicities: [i64; 3],
    pub data: SeifertData,
    pub reason: FamilyReason,
}

impl BrieskornFamily {
    pub const ALL: [BrieskornFamily; 8] = [
        BrieskornFamily::TwoFourLOne,
        BrieskornFamily::TwoFourLThree,
        BrieskornFamily::TwoSeven,
        BrieskornFamily::TwoNine,
        BrieskornFamily::ThreeFour,
        BrieskornFamily::ThreeFiveTwo,
        BrieskornFamily::ThreeFiveFour,
        BrieskornFamily::ThreeFiveSeven,
    ];

    /// Whether the family depends on `l`.
    pub fn uses_l(self) -> bool {
        matches!(self, BrieskornFamily::TwoFourLOne | BrieskornFamily::TwoFourLThree)
    }

    pub fn reason(self) -> FamilyReason {
        use BrieskornFamily::*;
        match self {
            TwoFourLOne | TwoFourLThree | ThreeFiveSeven => FamilyReason::ClosedForm,
            TwoSeven | TwoNine => FamilyReason::Matrix(MobiusMap { a: 3, b: 1, c: 2, d: 1 }),
            ThreeFour | ThreeFiveTwo | ThreeFiveFour => FamilyReason::AllBelowMinusTwo,
        }
    }

    /// Coefficients as `(numerator, denominator)` pairs for parameters `l`,
    /// `m` and sign `t = ±1`.
    pub fn coefficients(self, l: i64, m: i64, t: i64) -> [(i64, i64); 3] {
        use BrieskornFamily::*;
        match self {
            TwoFourLOne => {
                let p2 = 4 * l + t;
                [(2, 1), (p2, -l), (2 * p2 * m + 4 * l - t, -(2 * l + t) * m - l)]
            }
            TwoFourLThree => {
                let p2 = 4 * l + 3 * t;
                [(2, 1), (p2, -l - t), (2 * p2 * m + 4 * l + t, -(2 * l + t) * m - l)]
            }
            TwoSeven => [(2, 1), (14 * m + 3 * t, -5 * m - t), (7, -1)],
            TwoNine => [(2, 1), (18 * m + 5 * t, -7 * m - 2 * t), (9, -1)],
            ThreeFour => [(3, 2), (4, -1), (12 * m + 5 * t, -5 * m - 2 * t)],
            ThreeFiveTwo => [(3, -1), (5, -1), (15 * m + 2 * t, 8 * m + t)],
            ThreeFiveFour => [(3, 2), (5, -2), (15 * m + 4 * t, -4 * m - t)],
            ThreeFiveSeven => [(3, 1), (5, -1), (15 * m + 7 * t, -2 * m - t)],
        }
    }

    /// An admissible instance: multiplicities at least 2 and pairwise
    /// coprime, nonzero denominators, and not of the form
    /// `Σ(a, b, k a b ± 1)` already covered by the direct matrix argument.
    pub fn instance(self, l: i64, m: i64, t: i64) -> Option<BrieskornInstance> {
        let cs = self.coefficients(l, m, t);
        if cs.iter().any(|&(p, q)| p == 0 || q == 0) {
            return None;
        }
        let mut mult = [0i64; 3];
        for (k, &(p, _)) in cs.iter().enumerate() {
            mult[k] = p.abs();
        }
        if mult.iter().any(|&p| p < 2) || (0..3).any(|i| (i + 1..3).any(|j| mult[i].gcd(&mult[j]) != 1)) {
            return None;
        }
        if is_product_plus_minus_one(mult) {
            return None;
        }
        let data = SeifertData::new(Base::Orientable(0), cs.iter().map(|&(p, q)| ExtRational::ratio(p, q)).collect()).ok()?;
        let mut sorted = mult;
        sorted.sort_unstable();
        Some(BrieskornInstance { multiplicities: sorted, data, reason: self.reason() })
    }
}

fn is_product_plus_minus_one(p: [i64; 3]) -> bool {
    (0..3).any(|k| {
        let (a, b) = (p[(k + 1) % 3], p[(k + 2) % 3]);
        let ab = a * b;
        [p[k] - 1, p[k] + 1].iter().any(|&x| x >= ab && x % ab == 0)
    })
}
