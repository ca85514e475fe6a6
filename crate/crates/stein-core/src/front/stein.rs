use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{Coefficient, FrontDiagram, FrontError};
use crate::numerics::ExtRational;
use crate::presentation::{Component, SurgeryPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SteinFailure {
    MissingCoefficient { component: usize },
    NotInteger { component: usize, coefficient: ExtRational },
    FramingMismatch { component: usize, coefficient: ExtRational, tb: i64 },
    /// `tb + r + 1` disagrees in parity with the handle passages.
    Parity { component: usize },
}

impl fmt::Display for SteinFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SteinFailure::MissingCoefficient { component } => write!(f, "component {component}: no coefficient"),
            SteinFailure::NotInteger { component, coefficient } => {
                write!(f, "component {component}: coefficient {coefficient} is not an integer")
            }
            SteinFailure::FramingMismatch { component, coefficient, tb } => {
                write!(f, "component {component}: framing ≠ tb−1 ({coefficient} vs tb {tb})")
            }
            SteinFailure::Parity { component } => write!(f, "component {component}: convention corruption"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SteinReport {
    pub failures: Vec<SteinFailure>,
}

impl SteinReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that every framing is `tb - 1` and that the parity identity holds.
pub fn check_stein_form(d: &FrontDiagram) -> Result<SteinReport, FrontError> {
    let stats = d.all_stats()?;
    let mut failures = Vec::new();
    for (k, s) in stats.iter().enumerate() {
        let c = k + 1;
        if (s.tb + s.r + 1).rem_euclid(2) as u64 != s.total_passages() % 2 {
            failures.push(SteinFailure::Parity { component: c });
        }
        match d.coefficients.get(&c) {
            None => failures.push(SteinFailure::MissingCoefficient { component: c }),
            Some(Coefficient::Stein) => {}
            Some(Coefficient::Value(v)) => match v.to_integer() {
                None => failures.push(SteinFailure::NotInteger { component: c, coefficient: v.clone() }),
                Some(n) if n != BigInt::from(s.tb - 1) => {
                    failures.push(SteinFailure::FramingMismatch { component: c, coefficient: v.clone(), tb: s.tb })
                }
                Some(_) => {}
            },
        }
    }
    Ok(SteinReport { failures })
}

/// Replaces each 1-handle by a 0-framed unknot in L0.
///
/// Diagram components come first, in id order, followed by one unknot per
/// handle. Each component links the unknot of a handle by its signed run
/// count over that handle.
pub fn surger_handles(d: &FrontDiagram) -> Result<SurgeryPresentation, FrontError> {
    let stats = d.all_stats()?;
    let n = stats.len();
    let mut p = SurgeryPresentation::empty();
    for (k, s) in stats.iter().enumerate() {
        let coefficient = match d.coefficients.get(&(k + 1)) {
            None => return Err(FrontError::MissingCoefficient(k + 1)),
            Some(Coefficient::Stein) => ExtRational::int(s.tb - 1),
            Some(Coefficient::Value(v)) => v.clone(),
        };
        p.push(Component { rot: Some(s.r), tb: Some(s.tb), ..Component::new(coefficient) });
    }
    for _ in 0..d.n_handles() {
        p.push(Component::l0());
    }
    for a in 1..=n {
        for b in a + 1..=n {
            p.set_lk(a - 1, b - 1, BigInt::from(d.linking_number(a, b)?));
        }
        for (h, &runs) in stats[a - 1].handle_runs.iter().enumerate() {
            p.set_lk(a - 1, n + h, BigInt::from(runs));
        }
    }
    Ok(p)
}
