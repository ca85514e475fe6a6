//! Stein-realizability deciders for Seifert fibered spaces, Brieskorn
//! spheres and surgeries on the Borromean rings.
//!
//! Every decider is one-directional: it either certifies a Stein filling or
//! answers [`Decision::Unknown`].

mod borromean;
mod brieskorn;
mod nfunc;
mod seifert;

pub use borromean::{
    borromean_membership, decide_borromean, derived_surgery, BorromeanCoeffs, BorromeanDecision, BorromeanReason,
    DerivedFamily, Membership,
};
pub use brieskorn::{brieskorn, brieskorn_c, BrieskornFamily, BrieskornInstance, FamilyReason, Orientation};
pub use nfunc::{n_a, n_function, NFunctionResult, NValue, DEFAULT_SEARCH_BOUND};
pub use seifert::{decide_seifert, seifert_normalize, Base, SeifertData, SeifertNormalForm, SeifertReason};

/// Outcome of a one-directional decider.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision<R> {
    Yes(R),
    Unknown,
}

impl<R> Decision<R> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("coefficient {0} is zero")]
    ZeroCoefficient(usize),
    #[error("nonorientable base needs genus at least 1")]
    NonorientableGenus,
    #[error("{0} must lie in [-inf, -1)")]
    OutOfRange(&'static str),
    #[error("{0} does not fit in machine integers")]
    TooLarge(&'static str),
    #[error("multiplicities must be pairwise coprime and at least 2")]
    NotCoprime,
    #[error("coefficient {0} is infinite")]
    Infinite(usize),
}
