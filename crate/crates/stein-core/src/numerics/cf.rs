use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{floor_frac, ExtRational, NumericsError};

/// `a0 - 1/(a1 - 1/(... - 1/ak))` with every `aj <= -2` for `j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
}

impl ContinuedFraction {
    /// Checks the tail condition; returns `None` for an empty list or a tail term above -2.
    pub fn from_terms(terms: Vec<BigInt>) -> Option<Self> {
        let minus_two = BigInt::from(-2);
        if terms.is_empty() || terms.iter().skip(1).any(|a| *a > minus_two) {
            return None;
        }
        Some(ContinuedFraction { terms })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// Evaluates from the innermost term outward.
    pub fn evaluate(&self) -> BigRational {
        let mut it = self.terms.iter().rev();
        let mut acc = BigRational::from_integer(it.next().expect("nonempty").clone());
        for a in it {
            acc = BigRational::from_integer(a.clone()) - acc.recip();
        }
        acc
    }
}

/// The unique expansion with `a0 = floor(r)` and tail terms at most -2.
pub fn neg_continued_fraction(r: &ExtRational) -> Result<ContinuedFraction, NumericsError> {
    let (a0, mut frac) = floor_frac(r).map_err(|_| NumericsError::Infinite("neg_continued_fraction"))?;
    let mut terms = alloc::vec![a0];
    while !frac.is_zero() {
        // a + f = a - 1/x with x = -1/f < -1, hence floor(x) <= -2.
        let x = -(frac.recip());
        let a = x.floor().to_integer();
        frac = x - BigRational::from_integer(a.clone());
        terms.push(a);
    }
    Ok(ContinuedFraction { terms })
}
