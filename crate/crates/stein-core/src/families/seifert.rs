use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::nfunc::{search, NFunctionResult, NValue};
use super::{Decision, FamilyError};
use crate::numerics::{floor_frac, floor_q, BigRational, ExtRational, MobiusMap};
use crate::presentation::{Component, SurgeryPresentation};

/// Base orbifold surface, by orientability and genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Orientable(u32),
    Nonorientable(u32),
}

impl Base {
    pub fn is_sphere(&self) -> bool {
        *self == Base::Orientable(0)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Orientable(g) => write!(f, "o{g}"),
            Base::Nonorientable(g) => write!(f, "n{g}"),
        }
    }
}

/// A Seifert fibered space as surgery on fibers of the trivial bundle,
/// with the central curve 0-framed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    base: Base,
    coefficients: Vec<ExtRational>,
}

impl SeifertData {
    pub fn new(base: Base, coefficients: Vec<ExtRational>) -> Result<Self, FamilyError> {
        if base == Base::Nonorientable(0) {
            return Err(FamilyError::NonorientableGenus);
        }
        if let Some(i) = coefficients.iter().position(ExtRational::is_zero) {
            return Err(FamilyError::ZeroCoefficient(i));
        }
        Ok(SeifertData { base, coefficients })
    }

    /// From unnormalized Seifert invariants `(p_i, q_i)` over an orientable
    /// base, where the coefficients are `p_i / q_i`.
    pub fn from_invariants(genus: u32, invariants: &[(i64, i64)]) -> Result<Self, FamilyError> {
        let cs = invariants.iter().map(|&(p, q)| ExtRational::ratio(p, q)).collect();
        Self::new(Base::Orientable(genus), cs)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn coefficients(&self) -> &[ExtRational] {
        &self.coefficients
    }

    /// The same space with the opposite orientation.
    pub fn reversed(&self) -> Self {
        SeifertData { base: self.base, coefficients: self.coefficients.iter().map(ExtRational::neg).collect() }
    }

    /// Surgery presentation over an orientable base: a 0-framed unknot, one
    /// 0-framed unknot per handle of the base (algebraically unlinked) and a
    /// meridian per fiber coefficient. `None` for nonorientable bases.
    pub fn presentation(&self) -> Option<SurgeryPresentation> {
        let Base::Orientable(g) = self.base else { return None };
        let mut p = SurgeryPresentation::split(alloc::vec![Component::unknot(ExtRational::zero())]);
        for _ in 0..2 * g {
            p.push(Component::unknot(ExtRational::zero()));
        }
        for r in &self.coefficients {
            let j = p.push(Component::unknot(r.clone()));
            p.set_lk(0, j, BigInt::one());
        }
        Some(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertNormalForm {
    /// Euler number.
    pub e: BigRational,
    pub e0: BigInt,
    /// Normalized coefficients in `[-inf, -1)`, the single infinity read as `-inf`.
    pub rprime: Vec<ExtRational>,
    /// Coefficients whose reciprocal is not an integer.
    pub k0: usize,
}

pub fn seifert_normalize(s: &SeifertData) -> SeifertNormalForm {
    let mut e = match s.base {
        Base::Orientable(_) => BigRational::zero(),
        Base::Nonorientable(g) => BigRational::from_integer(BigInt::from(-2 * i64::from(g))),
    };
    let mut e0 = BigInt::zero();
    let mut rprime = Vec::with_capacity(s.coefficients.len());
    let mut k0 = 0;
    for r in &s.coefficients {
        let minus_inv = r.recip().neg();
        let (fl, frac) = floor_frac(&minus_inv).expect("coefficients are nonzero");
        e += minus_inv.as_finite().expect("finite");
        e0 += fl;
        if frac.is_zero() {
            rprime.push(ExtRational::Infinity);
        } else {
            k0 += 1;
            rprime.push(ExtRational::Finite(-frac.recip()));
        }
    }
    SeifertNormalForm { e, e0, rprime, k0 }
}

/// Why a Seifert fibered space is a Stein boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeifertReason {
    /// The base is not a sphere.
    NotSphereBase,
    /// `e0 != -1`.
    E0,
    /// At most two exceptional fibers.
    FewFibers,
    /// Every normalized coefficient is below `-2`.
    AllBelowMinusTwo,
    /// Every other coefficient lies below `l = -[[1/(1/r'_first + 1)]] - 1`.
    ClosedForm { first: usize, ell: BigInt },
    /// `s = r'_second`.
    Sentinel { first: usize, second: usize },
    /// `n_A(r'_first, r'_second)` exceeds every other coefficient.
    Search { first: usize, second: usize, witness: MobiusMap, value: NValue },
}

impl SeifertReason {
    /// The condition of the criterion that applies: `a`, `b` or `c`.
    pub fn letter(&self) -> char {
        match self {
            SeifertReason::NotSphereBase => 'a',
            SeifertReason::E0 => 'b',
            _ => 'c',
        }
    }
}

impl fmt::Display for SeifertReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())?;
        match self {
            SeifertReason::NotSphereBase | SeifertReason::E0 => Ok(()),
            SeifertReason::FewFibers => f.write_str(": at most two fibers"),
            SeifertReason::AllBelowMinusTwo => f.write_str(": all r' < -2"),
            SeifertReason::ClosedForm { first, ell } => write!(f, ": r'_{} gives l = {ell}", first + 1),
            SeifertReason::Sentinel { first, second } => write!(f, ": s = r'_{} from r'_{}", second + 1, first + 1),
            SeifertReason::Search { first, second, witness, value } => {
                write!(f, ": n_A(r'_{}, r'_{}) = {value} with A = {witness}", first + 1, second + 1)
            }
        }
    }
}

fn below(r: &ExtRational, bound: &BigInt) -> bool {
    NValue::Finite(bound.clone()).exceeds(r)
}

/// `-[[1/(1/r' + 1)]] - 1`, the largest integer strictly between the
/// partner coefficient bound and `s`.
fn closed_form_ell(r1p: &ExtRational) -> BigInt {
    let inv = r1p.recip();
    let ExtRational::Finite(q) = inv else { unreachable!("r' is never 0") };
    let denom = q + BigRational::one();
    -floor_q(&denom.recip()) - 1
}

/// Decides Stein fillability of a Seifert fibered space by the three
/// sufficient conditions. Never answers no.
pub fn decide_seifert(s: &SeifertData, search_bound: u32) -> Result<Decision<SeifertReason>, FamilyError> {
    if !s.base.is_sphere() {
        return Ok(Decision::Yes(SeifertReason::NotSphereBase));
    }
    let nf = seifert_normalize(s);
    if nf.e0 != BigInt::from(-1) {
        return Ok(Decision::Yes(SeifertReason::E0));
    }
    let rp = &nf.rprime;
    let k = rp.len();
    if k <= 2 {
        return Ok(Decision::Yes(SeifertReason::FewFibers));
    }
    if rp.iter().all(|r| below(r, &BigInt::from(-2))) {
        return Ok(Decision::Yes(SeifertReason::AllBelowMinusTwo));
    }
    for first in 0..k {
        let ell = closed_form_ell(&rp[first]);
        if (0..k).filter(|&j| j != first).all(|j| below(&rp[j], &ell)) {
            return Ok(Decision::Yes(SeifertReason::ClosedForm { first, ell }));
        }
    }
    for first in 0..k {
        for second in (0..k).filter(|&j| j != first) {
            let rest: Vec<&ExtRational> = (0..k).filter(|&j| j != first && j != second).map(|j| &rp[j]).collect();
            let clears = |v: &NValue| rest.iter().all(|r| v.exceeds(r));
            match search(&rp[first], &rp[second], search_bound, &clears)? {
                NFunctionResult::Sentinel => return Ok(Decision::Yes(SeifertReason::Sentinel { first, second })),
                NFunctionResult::LowerBound { value, witness } if clears(&value) => {
                    return Ok(Decision::Yes(SeifertReason::Search { first, second, witness, value }));
                }
                NFunctionResult::LowerBound { .. } => {}
            }
        }
    }
    Ok(Decision::Unknown)
}
