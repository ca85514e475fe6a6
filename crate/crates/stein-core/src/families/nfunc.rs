use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::FamilyError;
use crate::numerics::{floor_q, BigRational, ExtRational, MobiusMap};

/// Largest matrix entry searched by default.
pub const DEFAULT_SEARCH_BOUND: u32 = 100;

/// A value of `n`: an integer or `+inf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NValue {
    Finite(BigInt),
    PlusInfinity,
}

impl NValue {
    /// `r < self` for `r` in `[-inf, -1)`, reading the single infinity as `-inf`.
    pub fn exceeds(&self, r: &ExtRational) -> bool {
        match (self, r) {
            (_, ExtRational::Infinity) | (NValue::PlusInfinity, _) => true,
            (NValue::Finite(n), ExtRational::Finite(q)) => q < &BigRational::from_integer(n.clone()),
        }
    }
}

impl fmt::Display for NValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NValue::Finite(n) => write!(f, "{n}"),
            NValue::PlusInfinity => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NFunctionResult {
    /// `s = r2'`: realizable whatever the remaining coefficients are.
    Sentinel,
    /// The best `n_A` found, with the map attaining it.
    LowerBound { value: NValue, witness: MobiusMap },
}

impl NFunctionResult {
    pub fn exceeds(&self, r: &ExtRational) -> bool {
        match self {
            NFunctionResult::Sentinel => true,
            NFunctionResult::LowerBound { value, .. } => value.exceeds(r),
        }
    }
}

/// Primitive slope vector `(x, y)` for `y/x`, with `x > 0` or `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slope {
    x: i128,
    y: i128,
}

impl Slope {
    fn of(r: &ExtRational, what: &'static str) -> Result<Self, FamilyError> {
        match r {
            ExtRational::Infinity => Ok(Slope { x: 0, y: 1 }),
            ExtRational::Finite(q) => {
                let x = q.denom().to_i64().ok_or(FamilyError::TooLarge(what))?;
                let y = q.numer().to_i64().ok_or(FamilyError::TooLarge(what))?;
                Ok(Slope { x: x.into(), y: y.into() })
            }
        }
    }

    fn normalized(x: i128, y: i128) -> Self {
        if x < 0 || (x == 0 && y < 0) {
            Slope { x: -x, y: -y }
        } else {
            Slope { x, y }
        }
    }

    fn image(self, a: &MobiusMap) -> Self {
        let (a0, b0, c0, d0) = (i128::from(a.a), i128::from(a.b), i128::from(a.c), i128::from(a.d));
        Slope::normalized(a0 * self.x + b0 * self.y, c0 * self.x + d0 * self.y)
    }

    /// In `(-1, 0]`.
    fn in_upper_unit(self) -> bool {
        self.x > 0 && -self.x < self.y && self.y <= 0
    }

    /// In `[-inf, -1)`.
    fn below_minus_one(self) -> bool {
        self.x == 0 || self.y < -self.x
    }
}

/// `s` with `1/s = -1 - 1/r1'`.
fn s_of(r1p: &ExtRational) -> ExtRational {
    let inv = r1p.recip();
    let minus_one = ExtRational::int(-1);
    let sum = match inv {
        ExtRational::Finite(q) => minus_one.add_q(&-q),
        ExtRational::Infinity => unreachable!("r1' is never 0"),
    };
    sum.recip()
}

fn check_range(r: &ExtRational, what: &'static str) -> Result<(), FamilyError> {
    match r {
        ExtRational::Infinity => Ok(()),
        ExtRational::Finite(q) if q < &-BigRational::one() => Ok(()),
        _ => Err(FamilyError::OutOfRange(what)),
    }
}

/// `n_A(r1', r2')` for one map, or `None` if `A` violates `As ∈ (-1, 0]`
/// or `A r2' ∈ [-inf, -1)`.
pub fn n_a(a: &MobiusMap, r1p: &ExtRational, r2p: &ExtRational) -> Result<Option<NValue>, FamilyError> {
    check_range(r1p, "r1'")?;
    check_range(r2p, "r2'")?;
    let s = Slope::of(&s_of(r1p), "s")?;
    let r2 = Slope::of(r2p, "r2'")?;
    Ok(n_a_slopes(a, s, r2).map(|v| match v {
        Some(n) => NValue::Finite(n.into()),
        None => NValue::PlusInfinity,
    }))
}

/// `Some(None)` stands for `+inf`.
fn n_a_slopes(a: &MobiusMap, s: Slope, r2: Slope) -> Option<Option<i128>> {
    let as_ = s.image(a);
    let ar2 = r2.image(a);
    if !as_.in_upper_unit() || !ar2.below_minus_one() {
        return None;
    }
    let (big, small) = a.column_extremes();
    let (big, small) = (i128::from(big), i128::from(small));
    // A0 is the slope of (a, c).
    let zero_image = Slope::normalized(a.a.into(), a.c.into());
    let t = if zero_image.x == 0 || zero_image.y >= 0 {
        Slope { x: 1, y: 0 }
    } else if -zero_image.y <= zero_image.x {
        // 1/As, with As = 0 giving -inf.
        Slope::normalized(as_.y, as_.x)
    } else {
        ar2
    };
    if t.x == 0 {
        return Some(if small == 0 { Some(-big) } else { None });
    }
    let fl = Integer::div_floor(&t.y, &t.x);
    Some(Some(-small * (fl + 1) - big))
}

fn better(a: &(Option<i128>, MobiusMap), b: &(Option<i128>, MobiusMap)) -> bool {
    let key = |v: &Option<i128>| match v {
        None => (1u8, 0i128),
        Some(n) => (0, *n),
    };
    match key(&a.0).cmp(&key(&b.0)) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => {
            let (x, y) = (a.1.normalized(), b.1.normalized());
            (x.a, x.b, x.c, x.d) < (y.a, y.b, y.c, y.d)
        }
    }
}

/// Maps that are always admissible, independent of the bound: the map
/// with `As = 0`, and the translation realizing the largest integer strictly
/// between `r2'` and `s` when there is one.
fn seeds(s: &ExtRational, r2p: &ExtRational) -> alloc::vec::Vec<MobiusMap> {
    let mut out = alloc::vec::Vec::new();
    let ExtRational::Finite(sq) = s else { return out };
    // Largest integer l < s.
    let l: num_bigint::BigInt = {
        let fl = floor_q(sq);
        if sq.is_integer() {
            fl - 1
        } else {
            fl
        }
    };
    let gap = match r2p {
        ExtRational::Infinity => true,
        ExtRational::Finite(r) => r < &BigRational::from_integer(l.clone()),
    };
    if gap {
        if let Some(k) = (-&l - BigInt::one()).to_i64() {
            out.extend(MobiusMap::new(1, 0, k, 1));
        }
    }
    if let (Some(p), Some(q)) = (sq.numer().to_i64(), sq.denom().to_i64()) {
        // c + d s = 0 with (c, d) = (p, -q); pick (a, b) with -a q - b p = 1.
        let e = q.extended_gcd(&p);
        if e.gcd == 1 {
            let (a, b) = (-e.x, -e.y);
            if let Some(base) = MobiusMap::new(a, b, p, -q) {
                if let Ok(r2) = Slope::of(r2p, "") {
                    let img = r2.image(&base);
                    // Shift by [[1, k], [0, 1]] so that 1/(A r2') = x/y + k lies in (-1, 0].
                    if img.y != 0 {
                        let k = -Integer::div_ceil(&img.x, &img.y);
                        if let Some(k) = k.to_i64() {
                            let shift = MobiusMap { a: 1, b: k, c: 0, d: 1 };
                            out.extend(shift.compose(&base));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Searches all maps with entries bounded by `bound`, stopping as soon as
/// `stop` accepts a value. Returns the best value and witness.
pub(crate) fn search(
    r1p: &ExtRational,
    r2p: &ExtRational,
    bound: u32,
    stop: &dyn Fn(&NValue) -> bool,
) -> Result<NFunctionResult, FamilyError> {
    check_range(r1p, "r1'")?;
    check_range(r2p, "r2'")?;
    let s_ext = s_of(r1p);
    if &s_ext == r2p {
        return Ok(NFunctionResult::Sentinel);
    }
    let s = Slope::of(&s_ext, "s")?;
    let r2 = Slope::of(r2p, "r2'")?;
    let to_value = |v: Option<i128>| match v {
        Some(n) => NValue::Finite(n.into()),
        None => NValue::PlusInfinity,
    };
    let mut best: Option<(Option<i128>, MobiusMap)> = None;
    let consider = |a: MobiusMap, best: &mut Option<(Option<i128>, MobiusMap)>| -> bool {
        if let Some(v) = n_a_slopes(&a, s, r2) {
            let cand = (v, a.normalized());
            if best.as_ref().is_none_or(|b| better(&cand, b)) {
                *best = Some(cand);
            }
            return stop(&to_value(v));
        }
        false
    };
    let finish = |best: Option<(Option<i128>, MobiusMap)>| {
        let (v, witness) = best.expect("the map with As = 0 is always admissible");
        Ok(NFunctionResult::LowerBound { value: to_value(v), witness })
    };
    for a in seeds(&s_ext, r2p) {
        if consider(a, &mut best) {
            return finish(best);
        }
    }
    let n = i64::from(bound);
    for h in 1..=n {
        for (a, b) in rows_of_height(h) {
            let e = a.extended_gcd(&b);
            if e.gcd != 1 {
                continue;
            }
            // a d - b c = 1 with d = x, c = -y.
            let (c0, d0) = (-e.y, e.x);
            let Some((lo, hi)) = k_range(a, c0, n).and_then(|r1| intersect(r1, k_range(b, d0, n)?)) else {
                continue;
            };
            for k in lo..=hi {
                let m = MobiusMap { a, b, c: c0 + k * a, d: d0 + k * b };
                if consider(m, &mut best) {
                    return finish(best);
                }
            }
        }
    }
    finish(best)
}

/// Top rows `(a, b)` with `max(|a|, |b|) = h`, first nonzero entry positive.
fn rows_of_height(h: i64) -> impl Iterator<Item = (i64, i64)> {
    let top = (-h..=h).map(move |b| (h, b));
    let sides = (0..h).flat_map(move |a| [(a, h), (a, -h)]).filter(|&(a, b)| a > 0 || b > 0);
    top.chain(sides)
}

/// Integers `k` with `|v0 + k v| <= n`.
fn k_range(v: i64, v0: i64, n: i64) -> Option<(i64, i64)> {
    match v.cmp(&0) {
        Ordering::Equal => (v0.abs() <= n).then_some((i64::MIN / 4, i64::MAX / 4)),
        Ordering::Greater => Some((Integer::div_ceil(&(-n - v0), &v), Integer::div_floor(&(n - v0), &v))),
        Ordering::Less => Some((Integer::div_ceil(&(n - v0), &v), Integer::div_floor(&(-n - v0), &v))),
    }
}

fn intersect(a: (i64, i64), b: (i64, i64)) -> Option<(i64, i64)> {
    let (lo, hi) = (a.0.max(b.0), a.1.min(b.1));
    (lo <= hi).then_some((lo, hi))
}

/// A certified lower bound for `n(r1', r2')` from all maps with entries at
/// most `search_bound`, plus the two maps constructed directly.
pub fn n_function(r1p: &ExtRational, r2p: &ExtRational, search_bound: u32) -> Result<NFunctionResult, FamilyError> {
    search(r1p, r2p, search_bound, &|_| false)
}
