use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::trace::{crossing_sign, Trace};
use super::{Direction, Event, FrontDiagram, FrontError};

/// Kind of zig-zag added by a stabilization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stabilization {
    /// Two upward cusps; `r` decreases by one.
    Up,
    /// Two downward cusps; `r` increases by one.
    Down,
}

/// A local rewrite of the event word.
///
/// `column` is an event index for patterns that are already present and a
/// gap index for insertions. Heights are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Move 1: add a kink on the strand at `height` in gap `gap`. The
    /// `lower` variant grows the loop below the strand.
    KinkInsert { gap: usize, height: usize, lower: bool },
    /// Move 1 backwards: remove a kink occupying columns `column..column + 3`.
    KinkRemove { column: usize },
    /// Move 2: push the cusp in `column` past the neighbouring strand above
    /// or below it.
    CuspPastStrand { column: usize, above: bool },
    /// Move 2 backwards on columns `column..column + 3`.
    CuspPastStrandUndo { column: usize },
    /// Move 3 on columns `column..column + 3`.
    TripleCrossing { column: usize },
    /// Move 4: carry the last cusp to the front through a handle, or the
    /// first cusp to the back. `handle` breaks ties when the cusp sits on
    /// the boundary between two balls.
    CuspOverHandle { to_front: bool, handle: Option<usize> },
    /// Move 5: carry the last crossing to the front, or the first to the back.
    CrossingOverHandle { to_front: bool },
    /// Move 6: swing the top (or bottom) strand of a handle ball around the
    /// ball so that it ends at the other extreme.
    AroundHandle { handle: usize, from_top: bool },
}

impl Move {
    pub fn number(&self) -> u8 {
        match self {
            Move::KinkInsert { .. } | Move::KinkRemove { .. } => 1,
            Move::CuspPastStrand { .. } | Move::CuspPastStrandUndo { .. } => 2,
            Move::TripleCrossing { .. } => 3,
            Move::CuspOverHandle { .. } => 4,
            Move::CrossingOverHandle { .. } => 5,
            Move::AroundHandle { .. } => 6,
        }
    }
}

use Event::{Crossing as X, LeftCusp as L, RightCusp as R};

fn mismatch(column: usize, reason: &'static str) -> FrontError {
    FrontError::PatternMismatch { column, reason }
}

/// Builds the rewritten diagram and carries orientations and coefficients
/// across. `gap_map` sends an old gap to a new gap holding the same strands
/// in the same order.
fn rebuild(
    old: &FrontDiagram,
    old_trace: &Trace,
    slots: Vec<usize>,
    events: Vec<Event>,
    gap_map: impl Fn(usize) -> Option<usize>,
) -> Result<FrontDiagram, FrontError> {
    let mut d = FrontDiagram { slots, events, orientations: BTreeMap::new(), coefficients: BTreeMap::new() };
    let fresh = Trace::new(&d).ok_or(mismatch(0, "rewrite produced an inconsistent word"))?;
    let mut assigned = alloc::vec![None; fresh.n_components() + 1];
    for g in 0..old_trace.n_gaps() {
        let Some(ng) = gap_map(g) else { continue };
        for p in 0..old_trace.gap_len(g) {
            let c = fresh.comp(ng, p);
            let same = fresh.dir(ng, p) == old_trace.dir(g, p);
            let oc = old_trace.comp(g, p);
            match assigned[c] {
                None => assigned[c] = Some((oc, same)),
                Some(prev) if prev != (oc, same) => return Err(mismatch(0, "rewrite is not an isotopy")),
                Some(_) => {}
            }
        }
    }
    for (c, a) in assigned.iter().enumerate().skip(1) {
        let (oc, same) = a.ok_or(mismatch(0, "rewrite created a component"))?;
        // Fresh traces run rightward at each first occurrence.
        d.orientations.insert(c, if same { Direction::Rightward } else { Direction::Leftward });
        if let Some(k) = old.coefficients.get(&oc) {
            d.coefficients.insert(c, k.clone());
        }
    }
    Ok(d)
}

/// Replaces `len` events starting at `column` by `with`.
fn splice(
    d: &FrontDiagram,
    t: &Trace,
    column: usize,
    len: usize,
    with: &[Event],
) -> Result<FrontDiagram, FrontError> {
    let mut events = d.events.clone();
    events.splice(column..column + len, with.iter().copied());
    let shift = |g: usize| {
        if g <= column {
            Some(g)
        } else if g >= column + len {
            Some(g + with.len() - len)
        } else {
            None
        }
    };
    rebuild(d, t, d.slots.clone(), events, shift)
}

/// Adds a zig-zag on component `c` at the strand of height `height` in `gap`.
pub fn stabilize(
    d: &FrontDiagram,
    c: usize,
    gap: usize,
    height: usize,
    kind: Stabilization,
) -> Result<FrontDiagram, FrontError> {
    let t = d.checked_trace()?;
    t.check_component(c)?;
    if t.component_at(gap, height) != Some(c) {
        return Err(FrontError::BadLocation("strand is not on the component"));
    }
    let rightward = t.dir(gap, height - 1) == Direction::Rightward;
    let h = height;
    let zig = if (kind == Stabilization::Down) == rightward { [L(h + 1), R(h)] } else { [L(h), R(h + 1)] };
    splice(d, &t, gap, 0, &zig)
}

/// Swaps two adjacent columns whose events touch disjoint strands.
pub fn commute(d: &FrontDiagram, column: usize) -> Result<FrontDiagram, FrontError> {
    let t = d.checked_trace()?;
    if column + 1 >= d.events.len() {
        return Err(mismatch(column, "needs two columns"));
    }
    let (e1, e2) = (d.events[column], d.events[column + 1]);
    // Occupied intervals in boundary coordinates.
    let out1 = match e1 {
        R(i) => (i - 1, i - 1),
        L(i) | X(i) => (i - 1, i + 1),
    };
    let in2 = match e2 {
        L(i) => (i - 1, i - 1),
        R(i) | X(i) => (i - 1, i + 1),
    };
    let shifted = |e: Event, by: isize| e.with_height(e.height().checked_add_signed(by).expect("stays positive"));
    let (n1, n2) = if in2.1 <= out1.0 {
        (e2, shifted(e1, e2.delta()))
    } else if in2.0 >= out1.1 {
        (shifted(e2, -e1.delta()), e1)
    } else {
        return Err(mismatch(column, "events share a strand"));
    };
    splice(d, &t, column, 2, &[n1, n2])
}

pub fn apply_move(d: &FrontDiagram, mv: &Move) -> Result<FrontDiagram, FrontError> {
    let t = d.checked_trace()?;
    let ev = |k: usize| d.events.get(k).copied();
    match *mv {
        Move::KinkInsert { gap, height, lower } => {
            if t.component_at(gap, height).is_none() {
                return Err(FrontError::BadLocation("no strand there"));
            }
            let h = height;
            let kink = if lower { [L(h), X(h + 1), R(h)] } else { [L(h + 1), X(h), R(h + 1)] };
            splice(d, &t, gap, 0, &kink)
        }
        Move::KinkRemove { column } => match (ev(column), ev(column + 1), ev(column + 2)) {
            (Some(L(a)), Some(X(b)), Some(R(c))) if a == c && (b + 1 == a || b == a + 1) => splice(d, &t, column, 3, &[]),
            _ => Err(mismatch(column, "no kink here")),
        },
        Move::CuspPastStrand { column, above } => {
            let e = ev(column).ok_or(mismatch(column, "no such column"))?;
            let n = t.gap_len(column);
            let with = match (e, above) {
                (L(i), true) if i >= 2 => [L(i - 1), X(i), X(i - 1)],
                (L(i), false) if i <= n => [L(i + 1), X(i), X(i + 1)],
                (R(i), true) if i >= 2 => [X(i - 1), X(i), R(i - 1)],
                (R(i), false) if i + 2 <= n => [X(i + 1), X(i), R(i + 1)],
                (X(_), _) => return Err(mismatch(column, "not a cusp")),
                _ => return Err(mismatch(column, "no strand on that side")),
            };
            splice(d, &t, column, 1, &with)
        }
        Move::CuspPastStrandUndo { column } => {
            let with = match (ev(column), ev(column + 1), ev(column + 2)) {
                (Some(L(p)), Some(X(a)), Some(X(b))) if a == p + 1 && b == p => L(p + 1),
                (Some(L(q)), Some(X(a)), Some(X(b))) if q >= 2 && a == q - 1 && b == q => L(q - 1),
                (Some(X(a)), Some(X(b)), Some(R(p))) if a == p && b == p + 1 => R(p + 1),
                (Some(X(a)), Some(X(b)), Some(R(q))) if q >= 2 && a == q && b == q - 1 => R(q - 1),
                _ => return Err(mismatch(column, "no cusp-past-strand pattern")),
            };
            splice(d, &t, column, 3, &[with])
        }
        Move::TripleCrossing { column } => match (ev(column), ev(column + 1), ev(column + 2)) {
            (Some(X(a)), Some(X(b)), Some(X(c))) if a == c && (b == a + 1 || b + 1 == a) => {
                splice(d, &t, column, 3, &[X(b), X(a), X(b)])
            }
            _ => Err(mismatch(column, "no triple-crossing pattern")),
        },
        Move::CuspOverHandle { to_front, handle } => over_handle(d, &t, to_front, handle, true),
        Move::CrossingOverHandle { to_front } => over_handle(d, &t, to_front, None, false),
        Move::AroundHandle { handle, from_top } => {
            let (start, k) = ball(d, handle)?;
            let e = d.events.len();
            let down: Vec<Event> = (start + 1..start + k).map(X).collect();
            let up: Vec<Event> = down.iter().rev().copied().collect();
            let (pre, post) = if from_top { (up, down) } else { (down, up) };
            let mut events = pre.clone();
            events.extend_from_slice(&d.events);
            events.extend(post);
            let shift = pre.len();
            rebuild(d, &t, d.slots.clone(), events, |g| (g <= e).then_some(g + shift))
        }
    }
}

/// First slot (0-based) and slot count of a 1-based handle.
fn ball(d: &FrontDiagram, handle: usize) -> Result<(usize, usize), FrontError> {
    if handle == 0 || handle > d.n_handles() {
        return Err(FrontError::BadLocation("no such handle"));
    }
    Ok((d.slots[..handle - 1].iter().sum(), d.slots[handle - 1]))
}

/// Handle containing both 0-based edge slots `i` and `i + 1`.
fn handle_of_pair(slots: &[usize], i: usize) -> Option<usize> {
    let mut start = 0;
    for (h, &k) in slots.iter().enumerate() {
        if start <= i && i + 1 < start + k {
            return Some(h);
        }
        start += k;
    }
    None
}

fn over_handle(
    d: &FrontDiagram,
    t: &Trace,
    to_front: bool,
    hint: Option<usize>,
    cusp: bool,
) -> Result<FrontDiagram, FrontError> {
    let e = d.events.len();
    if e == 0 {
        return Err(mismatch(0, "empty word"));
    }
    let column = if to_front { e - 1 } else { 0 };
    let event = d.events[column];
    if event.is_cusp() != cusp {
        return Err(mismatch(column, if cusp { "not a cusp" } else { "not a crossing" }));
    }
    let i = event.height() - 1;
    // Edge-side effect: strands i, i+1 appear (+) or disappear (-) at the seam.
    let appear = matches!((event, to_front), (R(_), true) | (L(_), false));
    let mut slots = d.slots.clone();
    match event {
        X(_) => {
            handle_of_pair(&slots, i).ok_or(mismatch(column, "strands lie in different handles"))?;
        }
        _ if appear => {
            let mut start = 0;
            let mut found = None;
            for (h, &k) in slots.iter().enumerate() {
                if start <= i && i <= start + k && hint.map_or(true, |x| x == h + 1) {
                    found = Some(h);
                    break;
                }
                start += k;
            }
            let h = found.ok_or(mismatch(column, "cusp does not meet that handle"))?;
            slots[h] += 2;
        }
        _ => {
            let h = handle_of_pair(&slots, i).ok_or(mismatch(column, "cusp strands lie in different handles"))?;
            if slots[h] <= 2 || hint.is_some_and(|x| x != h + 1) {
                return Err(mismatch(column, "handle would be emptied"));
            }
            slots[h] -= 2;
        }
    }
    let mut events = d.events.clone();
    if to_front {
        let last = events.pop().expect("nonempty");
        events.insert(0, last);
        rebuild(d, t, slots, events, |g| Some(if g == e { 1 } else { g + 1 }))
    } else {
        let first = events.remove(0);
        events.push(first);
        rebuild(d, t, slots, events, |g| Some(if g == 0 { e - 1 } else { g - 1 }))
    }
}

/// Component of the strand swung by move 6 and the signed count of the
/// other strands of that component in the ball, each weighted by the sign
/// of the crossing the swing creates with it.
pub fn around_handle_runs(d: &FrontDiagram, handle: usize, from_top: bool) -> Result<(usize, i64), FrontError> {
    let t = d.checked_trace()?;
    let (start, k) = ball(d, handle)?;
    let x = if from_top { start } else { start + k - 1 };
    let c = t.comp(0, x);
    let runs = (start..start + k)
        .filter(|&p| p != x && t.comp(0, p) == c)
        .map(|p| crossing_sign(t.dir(0, x), t.dir(0, p)))
        .sum();
    Ok((c, runs))
}
