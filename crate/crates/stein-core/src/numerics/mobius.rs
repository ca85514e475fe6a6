use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ExtRational;

/// `±[a b; c d]` in PSL(2,Z), acting by `r -> (c + d r)/(a + b r)`.
///
/// This is the matrix acting on column vectors `(x, y)` with `r = y/x`, so
/// composition is matrix multiplication.
#[derive(Clone, Copy, Debug)]
pub struct MobiusMap {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl MobiusMap {
    /// Returns `None` unless `ad - bc = 1`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Option<Self> {
        let det = i128::from(a) * i128::from(d) - i128::from(b) * i128::from(c);
        (det == 1).then_some(MobiusMap { a, b, c, d })
    }

    pub fn identity() -> Self {
        MobiusMap { a: 1, b: 0, c: 0, d: 1 }
    }

    /// Representative with the first nonzero entry of the top row positive.
    pub fn normalized(self) -> Self {
        if self.a < 0 || (self.a == 0 && self.b < 0) {
            MobiusMap { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
        } else {
            self
        }
    }

    /// `self ∘ other`; `None` on overflow.
    pub fn compose(&self, other: &Self) -> Option<Self> {
        let m = |x: i64, y: i64, z: i64, w: i64| -> Option<i64> { x.checked_mul(y)?.checked_add(z.checked_mul(w)?) };
        Some(MobiusMap {
            a: m(self.a, other.a, self.b, other.c)?,
            b: m(self.a, other.b, self.b, other.d)?,
            c: m(self.c, other.a, self.d, other.c)?,
            d: m(self.c, other.b, self.d, other.d)?,
        })
    }

    pub fn apply(&self, r: &ExtRational) -> ExtRational {
        let (x, y) = match r {
            ExtRational::Infinity => (BigInt::zero(), BigInt::from(1)),
            ExtRational::Finite(q) => (q.denom().clone(), q.numer().clone()),
        };
        let (x2, y2) = self.act(&x, &y);
        ExtRational::new(y2, x2).expect("unimodular image of a primitive vector is nonzero")
    }

    /// Image of the slope vector `(x, y)`.
    pub fn act(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (x * self.a + y * self.b, x * self.c + y * self.d)
    }

    /// `max(|a|, |c|)` and `min(|a|, |c|)`.
    pub fn column_extremes(&self) -> (u64, u64) {
        let (a, c) = (self.a.unsigned_abs(), self.c.unsigned_abs());
        (a.max(c), a.min(c))
    }
}

impl PartialEq for MobiusMap {
    fn eq(&self, other: &Self) -> bool {
        let (x, y) = (self.normalized(), other.normalized());
        (x.a, x.b, x.c, x.d) == (y.a, y.b, y.c, y.d)
    }
}

impl Eq for MobiusMap {}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.normalized();
        write!(f, "[{},{};{},{}]", m.a, m.b, m.c, m.d)
    }
}
