//! Legendrian fronts in standard form, encoded as event words.
//!
//! A diagram is a box whose left and right edges carry the strands entering
//! the 1-handle balls. Reading left to right, every column holds one event:
//! a left cusp creating two strands, a right cusp joining two, or a crossing
//! of two adjacent strands. Heights are 1-based and count the strands present
//! just before the event, top to bottom. The k-th strand on the right edge
//! continues through its handle as the k-th strand on the left edge.

mod moves;
mod stein;
mod trace;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::numerics::ExtRational;

pub use moves::{apply_move, around_handle_runs, commute, stabilize, Move, Stabilization};
pub use stein::{check_stein_form, surger_handles, SteinFailure, SteinReport};
pub use trace::ComponentStats;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    LeftCusp(usize),
    RightCusp(usize),
    Crossing(usize),
}

impl Event {
    pub fn height(self) -> usize {
        match self {
            Event::LeftCusp(h) | Event::RightCusp(h) | Event::Crossing(h) => h,
        }
    }

    pub fn with_height(self, h: usize) -> Self {
        match self {
            Event::LeftCusp(_) => Event::LeftCusp(h),
            Event::RightCusp(_) => Event::RightCusp(h),
            Event::Crossing(_) => Event::Crossing(h),
        }
    }

    /// Change in the strand count across the event.
    pub fn delta(self) -> isize {
        match self {
            Event::LeftCusp(_) => 2,
            Event::RightCusp(_) => -2,
            Event::Crossing(_) => 0,
        }
    }

    pub fn is_cusp(self) -> bool {
        !matches!(self, Event::Crossing(_))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::LeftCusp(h) => write!(f, "L{h}"),
            Event::RightCusp(h) => write!(f, "R{h}"),
            Event::Crossing(h) => write!(f, "X{h}"),
        }
    }
}

/// Horizontal traversal direction of a strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Rightward,
    Leftward,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Rightward => Direction::Leftward,
            Direction::Leftward => Direction::Rightward,
        }
    }

    /// `+1` for rightward.
    pub fn sign(self) -> i64 {
        match self {
            Direction::Rightward => 1,
            Direction::Leftward => -1,
        }
    }
}

/// Surgery coefficient attached to a component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Value(ExtRational),
    /// Stands for `tb - 1`.
    Stein,
}

/// Event-word front with handle slots, orientations and coefficients.
///
/// Component ids are 1-based and assigned by first occurrence, scanning
/// gaps left to right and strands top to bottom. Gap `g` is the vertical
/// line just before event `g`; gap `events.len()` is the right edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrontDiagram {
    /// Slot count of each handle, top to bottom.
    pub slots: Vec<usize>,
    pub events: Vec<Event>,
    /// Direction at the component's first strand occurrence.
    pub orientations: BTreeMap<usize, Direction>,
    pub coefficients: BTreeMap<usize, Coefficient>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    HeightOutOfRange { column: usize, event: Event, strands: usize },
    SlotPairing { right_edge: usize, slots: usize },
    EmptyHandle { handle: usize },
    MissingOrientation { component: usize },
    UnknownComponent { component: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HeightOutOfRange { column, event, strands } => {
                write!(f, "column {column}: height out of range ({event} with {strands} strands)")
            }
            Violation::SlotPairing { right_edge, slots } => {
                write!(f, "slot pairing: right edge has {right_edge} strands, handles provide {slots} slots")
            }
            Violation::EmptyHandle { handle } => write!(f, "slot pairing: handle {handle} has no slots"),
            Violation::MissingOrientation { component } => write!(f, "component {component} has no orientation"),
            Violation::UnknownComponent { component } => write!(f, "component {component} does not exist"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FrontError {
    #[error("invalid diagram: {}", .0.first().map(|v| alloc::format!("{v}")).unwrap_or_default())]
    Invalid(Vec<Violation>),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("linking number of a component with itself")]
    SameComponent,
    #[error("invalid location: {0}")]
    BadLocation(&'static str),
    #[error("pattern mismatch at column {column}: {reason}")]
    PatternMismatch { column: usize, reason: &'static str },
    #[error("component {0} has no coefficient")]
    MissingCoefficient(usize),
}

impl FrontDiagram {
    /// Closed diagram without handles.
    pub fn closed(events: Vec<Event>) -> Self {
        FrontDiagram { events, ..Self::default() }
    }

    pub fn n_handles(&self) -> usize {
        self.slots.len()
    }

    pub fn edge_strands(&self) -> usize {
        self.slots.iter().sum()
    }

    /// Strand count in every gap, or the first height violation.
    fn gap_counts(&self) -> Result<Vec<usize>, Violation> {
        let mut counts = Vec::with_capacity(self.events.len() + 1);
        let mut n = self.edge_strands();
        counts.push(n);
        for (column, &event) in self.events.iter().enumerate() {
            let h = event.height();
            let ok = match event {
                Event::LeftCusp(_) => (1..=n + 1).contains(&h),
                _ => h >= 1 && h < n,
            };
            if !ok {
                return Err(Violation::HeightOutOfRange { column, event, strands: n });
            }
            n = n.checked_add_signed(event.delta()).expect("checked above");
            counts.push(n);
        }
        Ok(counts)
    }

    /// All violations, empty when the diagram is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (h, &k) in self.slots.iter().enumerate() {
            if k == 0 {
                out.push(Violation::EmptyHandle { handle: h + 1 });
            }
        }
        match self.gap_counts() {
            Err(v) => {
                out.push(v);
                return out;
            }
            Ok(counts) => {
                let right = *counts.last().expect("nonempty");
                if right != self.edge_strands() {
                    out.push(Violation::SlotPairing { right_edge: right, slots: self.edge_strands() });
                    return out;
                }
            }
        }
        let n = trace::Trace::new(self).expect("structure checked").n_components();
        for c in 1..=n {
            if !self.orientations.contains_key(&c) {
                out.push(Violation::MissingOrientation { component: c });
            }
        }
        for &c in self.orientations.keys().chain(self.coefficients.keys()) {
            if c == 0 || c > n {
                out.push(Violation::UnknownComponent { component: c });
            }
        }
        out.dedup();
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn checked_trace(&self) -> Result<trace::Trace, FrontError> {
        let v = self.validate();
        if !v.is_empty() {
            return Err(FrontError::Invalid(v));
        }
        Ok(trace::Trace::new(self).expect("validated"))
    }

    pub fn n_components(&self) -> Result<usize, FrontError> {
        Ok(self.checked_trace()?.n_components())
    }

    pub fn component_stats(&self, c: usize) -> Result<ComponentStats, FrontError> {
        let t = self.checked_trace()?;
        t.check_component(c)?;
        Ok(t.stats(self, c))
    }

    pub fn all_stats(&self) -> Result<Vec<ComponentStats>, FrontError> {
        let t = self.checked_trace()?;
        Ok((1..=t.n_components()).map(|c| t.stats(self, c)).collect())
    }

    /// Half the signed count of crossings between two components.
    pub fn linking_number(&self, c1: usize, c2: usize) -> Result<i64, FrontError> {
        if c1 == c2 {
            return Err(FrontError::SameComponent);
        }
        let t = self.checked_trace()?;
        t.check_component(c1)?;
        t.check_component(c2)?;
        Ok(t.linking(self, c1, c2))
    }

    /// Height of the topmost strand of component `c` in gap `gap`.
    pub fn strand_of(&self, c: usize, gap: usize) -> Result<usize, FrontError> {
        let t = self.checked_trace()?;
        t.check_component(c)?;
        t.strand_of(c, gap).ok_or(FrontError::BadLocation("component has no strand in that gap"))
    }

    /// Component id of the strand at `height` in `gap`.
    pub fn component_at(&self, gap: usize, height: usize) -> Result<usize, FrontError> {
        let t = self.checked_trace()?;
        t.component_at(gap, height).ok_or(FrontError::BadLocation("no strand there"))
    }
}

#[cfg(test)]
mod tests {
    use std::prelude::rust_2021::*;
    use std::vec;

    use super::*;
    use Event::*;

    pub(crate) fn oriented(slots: Vec<usize>, events: Vec<Event>) -> FrontDiagram {
        let mut d = FrontDiagram { slots, events, ..Default::default() };
        let n = trace::Trace::new(&d).unwrap().n_components();
        for c in 1..=n {
            d.orientations.insert(c, Direction::Rightward);
        }
        d
    }

    #[test]
    fn validation_examples() {
        assert!(oriented(vec![], vec![LeftCusp(1), RightCusp(1)]).is_valid());
        let d = FrontDiagram::closed(vec![RightCusp(1)]);
        let v = d.validate();
        assert!(v[0].to_string().contains("height out of range"), "{v:?}");
        let d = FrontDiagram { slots: vec![2], events: vec![RightCusp(1)], ..Default::default() };
        assert!(d.validate()[0].to_string().contains("slot pairing"));
        let d = FrontDiagram::closed(vec![LeftCusp(1), RightCusp(1)]);
        assert_eq!(d.validate(), vec![Violation::MissingOrientation { component: 1 }]);
        let mut d = oriented(vec![], vec![LeftCusp(1), RightCusp(1)]);
        d.coefficients.insert(2, Coefficient::Stein);
        assert_eq!(d.validate(), vec![Violation::UnknownComponent { component: 2 }]);
    }

    #[test]
    fn linking_requires_distinct_components() {
        let d = oriented(vec![], vec![LeftCusp(1), RightCusp(1)]);
        assert_eq!(d.linking_number(1, 1), Err(FrontError::SameComponent));
        assert_eq!(d.linking_number(1, 2), Err(FrontError::UnknownComponent(2)));
    }
}
