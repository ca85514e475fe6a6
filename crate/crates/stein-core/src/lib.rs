//! Exact computations for Legendrian fronts in standard form, rational
//! surgery presentations and the Stein-realizability deciders for
//! Seifert fibered spaces and Borromean-ring surgeries.
//!
//! Everything is arbitrary-precision integer arithmetic. The crate is
//! `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod families;
pub mod front;
pub mod invariants;
pub mod numerics;
pub mod presentation;

pub use numerics::{ExtRational, MobiusMap};
