use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::NumericsError;

/// A rational number or the single point at infinity of the projective line.
///
/// There is exactly one infinity, stored as `1/0`. Ordering against it is
/// only meaningful inside an [`Interval`] that states whether the infinite
/// endpoint is included.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRational {
    Finite(BigRational),
    Infinity,
}

impl ExtRational {
    /// `p/q` in lowest terms with `q >= 0`; `p/0` is infinity and `0/0` is rejected.
    pub fn new(p: BigInt, q: BigInt) -> Result<Self, NumericsError> {
        if q.is_zero() {
            if p.is_zero() {
                return Err(NumericsError::Indeterminate);
            }
            return Ok(ExtRational::Infinity);
        }
        Ok(ExtRational::Finite(BigRational::new(p, q)))
    }

    /// Convenience constructor from machine integers. Panics on `0/0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::new(BigInt::from(p), BigInt::from(q)).expect("0/0")
    }

    pub fn int(p: i64) -> Self {
        ExtRational::Finite(BigRational::from_integer(BigInt::from(p)))
    }

    pub fn from_bigint(p: BigInt) -> Self {
        ExtRational::Finite(BigRational::from_integer(p))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtRational::Finite(q) if q.is_zero())
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExtRational::Finite(q) if q.is_integer())
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtRational::Finite(q) => Some(q),
            ExtRational::Infinity => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            ExtRational::Finite(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            ExtRational::Finite(q) => q.numer().clone(),
            ExtRational::Infinity => BigInt::one(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            ExtRational::Finite(q) => q.denom().clone(),
            ExtRational::Infinity => BigInt::zero(),
        }
    }

    /// `1/r`, with `1/0 = inf` and `1/inf = 0`.
    pub fn recip(&self) -> Self {
        match self {
            ExtRational::Infinity => Self::zero(),
            ExtRational::Finite(q) if q.is_zero() => ExtRational::Infinity,
            ExtRational::Finite(q) => ExtRational::Finite(q.recip()),
        }
    }

    /// Negation; infinity is fixed.
    pub fn neg(&self) -> Self {
        match self {
            ExtRational::Infinity => ExtRational::Infinity,
            ExtRational::Finite(q) => ExtRational::Finite(-q),
        }
    }

    /// `self + q` for finite `q`; infinity absorbs.
    pub fn add_q(&self, q: &BigRational) -> Self {
        match self {
            ExtRational::Infinity => ExtRational::Infinity,
            ExtRational::Finite(x) => ExtRational::Finite(x + q),
        }
    }

    /// Sum, undefined only for `inf + inf`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        match (self, other) {
            (ExtRational::Infinity, ExtRational::Infinity) => None,
            (ExtRational::Infinity, _) | (_, ExtRational::Infinity) => Some(ExtRational::Infinity),
            (ExtRational::Finite(a), ExtRational::Finite(b)) => Some(ExtRational::Finite(a + b)),
        }
    }

    /// Comparison of two finite values; `None` if either is infinite.
    pub fn cmp_finite(&self, other: &Self) -> Option<Ordering> {
        Some(self.as_finite()?.cmp(other.as_finite()?))
    }

    /// Membership in an interval, with the infinite point resolved by the
    /// interval's explicit convention.
    pub fn in_interval(&self, iv: &Interval) -> bool {
        iv.contains(self)
    }
}

impl From<BigRational> for ExtRational {
    fn from(q: BigRational) -> Self {
        ExtRational::Finite(q)
    }
}

impl From<i64> for ExtRational {
    fn from(p: i64) -> Self {
        ExtRational::int(p)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Infinity => f.write_str("inf"),
            ExtRational::Finite(q) => fmt_rational(q, f),
        }
    }
}

/// Writes `p/q`, eliding a unit denominator.
pub(crate) fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?} as a rational or inf")]
pub struct ParseExtRationalError {
    pub input: String,
}

impl FromStr for ExtRational {
    type Err = ParseExtRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseExtRationalError { input: s.into() };
        let t = s.trim();
        if t == "inf" {
            return Ok(ExtRational::Infinity);
        }
        let parse_int = |x: &str| -> Result<BigInt, ParseExtRationalError> {
            let body = x.strip_prefix(['-', '+']).unwrap_or(x);
            if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            x.parse::<BigInt>().map_err(|_| err())
        };
        match t.split_once('/') {
            None => Ok(ExtRational::from_bigint(parse_int(t)?)),
            Some((p, q)) => {
                let p = parse_int(p)?;
                let q = parse_int(q)?;
                if q.is_negative() {
                    return ExtRational::new(-p, -q).map_err(|_| err());
                }
                ExtRational::new(p, q).map_err(|_| err())
            }
        }
    }
}

/// `r = floor + frac` with `frac` in `[0, 1)`.
pub fn floor_frac(r: &ExtRational) -> Result<(BigInt, BigRational), NumericsError> {
    let q = r.as_finite().ok_or(NumericsError::Infinite("floor_frac"))?;
    let fl = q.numer().div_floor(q.denom());
    let frac = q - BigRational::from_integer(fl.clone());
    Ok((fl, frac))
}

/// One end of an [`Interval`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Closed(BigRational),
    Open(BigRational),
    /// No finite bound on this side. The flag says whether the point at
    /// infinity belongs to the interval (written `[-inf` or `inf]`).
    Unbounded { includes_infinity: bool },
}

impl Bound {
    pub fn closed(q: BigRational) -> Self {
        Bound::Closed(q)
    }

    pub fn open(q: BigRational) -> Self {
        Bound::Open(q)
    }

    pub fn inf_closed() -> Self {
        Bound::Unbounded { includes_infinity: true }
    }

    pub fn inf_open() -> Self {
        Bound::Unbounded { includes_infinity: false }
    }
}

/// An interval of the extended line with explicit infinity convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, x: &ExtRational) -> bool {
        match x {
            ExtRational::Infinity => {
                matches!(self.lo, Bound::Unbounded { includes_infinity: true })
                    || matches!(self.hi, Bound::Unbounded { includes_infinity: true })
            }
            ExtRational::Finite(q) => self.contains_finite(q),
        }
    }

    pub fn contains_finite(&self, q: &BigRational) -> bool {
        let lo_ok = match &self.lo {
            Bound::Closed(a) => q >= a,
            Bound::Open(a) => q > a,
            Bound::Unbounded { .. } => true,
        };
        let hi_ok = match &self.hi {
            Bound::Closed(b) => q <= b,
            Bound::Open(b) => q < b,
            Bound::Unbounded { .. } => true,
        };
        lo_ok && hi_ok
    }
}
