use alloc::vec::Vec;

use super::{Direction, Event, FrontDiagram, FrontError};

/// Classical invariants of one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub w: i64,
    pub lambda: u64,
    pub rho: u64,
    pub lambda_plus: u64,
    pub lambda_minus: u64,
    pub rho_plus: u64,
    pub rho_minus: u64,
    pub t_plus: u64,
    pub t_minus: u64,
    pub tb: i64,
    pub r: i64,
    /// Signed passages through each handle, rightward counting `+1`.
    pub handle_runs: Vec<i64>,
    /// Unsigned passages through each handle.
    pub handle_passages: Vec<u64>,
}

impl ComponentStats {
    pub fn total_passages(&self) -> u64 {
        self.handle_passages.iter().sum()
    }
}

/// Sign of a crossing between strands traversed in the given directions:
/// positive exactly when they run in the same horizontal direction.
pub(crate) fn crossing_sign(a: Direction, b: Direction) -> i64 {
    a.sign() * b.sign()
}

/// Component and traversal direction of every strand in every gap.
pub(crate) struct Trace {
    comp: Vec<Vec<usize>>,
    dir: Vec<Vec<Direction>>,
    n: usize,
}

/// One step of the traversal from strand `p` of gap `g` moving in `dir`.
fn step(events: &[Event], g: usize, p: usize, dir: Direction) -> (usize, usize, Direction) {
    let e = events.len();
    match dir {
        Direction::Rightward => {
            if g == e {
                return (0, p, dir);
            }
            let i = events[g].height() - 1;
            match events[g] {
                Event::Crossing(_) if p == i => (g + 1, i + 1, dir),
                Event::Crossing(_) if p == i + 1 => (g + 1, i, dir),
                Event::Crossing(_) => (g + 1, p, dir),
                Event::LeftCusp(_) => (g + 1, if p < i { p } else { p + 2 }, dir),
                Event::RightCusp(_) if p == i => (g, i + 1, Direction::Leftward),
                Event::RightCusp(_) if p == i + 1 => (g, i, Direction::Leftward),
                Event::RightCusp(_) => (g + 1, if p < i { p } else { p - 2 }, dir),
            }
        }
        Direction::Leftward => {
            if g == 0 {
                return (e, p, dir);
            }
            let i = events[g - 1].height() - 1;
            match events[g - 1] {
                Event::Crossing(_) if p == i => (g - 1, i + 1, dir),
                Event::Crossing(_) if p == i + 1 => (g - 1, i, dir),
                Event::Crossing(_) => (g - 1, p, dir),
                Event::RightCusp(_) => (g - 1, if p < i { p } else { p + 2 }, dir),
                Event::LeftCusp(_) if p == i => (g, i + 1, Direction::Rightward),
                Event::LeftCusp(_) if p == i + 1 => (g, i, Direction::Rightward),
                Event::LeftCusp(_) => (g - 1, if p < i { p } else { p - 2 }, dir),
            }
        }
    }
}

impl Trace {
    /// Requires heights in range and matching edge counts.
    pub(crate) fn new(d: &FrontDiagram) -> Option<Self> {
        let counts = d.gap_counts().ok()?;
        if *counts.last()? != d.edge_strands() {
            return None;
        }
        let mut comp: Vec<Vec<usize>> = counts.iter().map(|&k| alloc::vec![0; k]).collect();
        let mut dir: Vec<Vec<Direction>> = counts.iter().map(|&k| alloc::vec![Direction::Rightward; k]).collect();
        let mut n = 0;
        for g in 0..counts.len() {
            for p in 0..counts[g] {
                if comp[g][p] != 0 {
                    continue;
                }
                n += 1;
                let flip = d.orientations.get(&n) == Some(&Direction::Leftward);
                let start = (g, p, Direction::Rightward);
                let mut cur = start;
                loop {
                    comp[cur.0][cur.1] = n;
                    dir[cur.0][cur.1] = if flip { cur.2.reversed() } else { cur.2 };
                    cur = step(&d.events, cur.0, cur.1, cur.2);
                    if cur == start {
                        break;
                    }
                }
            }
        }
        Some(Trace { comp, dir, n })
    }

    pub(crate) fn n_components(&self) -> usize {
        self.n
    }

    pub(crate) fn check_component(&self, c: usize) -> Result<(), FrontError> {
        if (1..=self.n).contains(&c) {
            Ok(())
        } else {
            Err(FrontError::UnknownComponent(c))
        }
    }

    pub(crate) fn comp(&self, g: usize, p: usize) -> usize {
        self.comp[g][p]
    }

    pub(crate) fn dir(&self, g: usize, p: usize) -> Direction {
        self.dir[g][p]
    }

    pub(crate) fn gap_len(&self, g: usize) -> usize {
        self.comp[g].len()
    }

    pub(crate) fn n_gaps(&self) -> usize {
        self.comp.len()
    }

    pub(crate) fn strand_of(&self, c: usize, g: usize) -> Option<usize> {
        self.comp.get(g)?.iter().position(|&x| x == c).map(|p| p + 1)
    }

    pub(crate) fn component_at(&self, g: usize, height: usize) -> Option<usize> {
        self.comp.get(g)?.get(height.checked_sub(1)?).copied()
    }

    /// Sign of the crossing in `column` and the two components involved.
    fn crossing(&self, column: usize, i: usize) -> (i64, usize, usize) {
        let s = crossing_sign(self.dir[column][i], self.dir[column][i + 1]);
        (s, self.comp[column][i], self.comp[column][i + 1])
    }

    /// Whether the cusp in `column` is traversed from lower to upper branch.
    fn cusp_is_up(&self, column: usize, event: Event) -> bool {
        let i = event.height() - 1;
        match event {
            Event::LeftCusp(_) => self.dir[column + 1][i] == Direction::Rightward,
            Event::RightCusp(_) => self.dir[column][i] == Direction::Leftward,
            Event::Crossing(_) => unreachable!("not a cusp"),
        }
    }

    fn cusp_component(&self, column: usize, event: Event) -> usize {
        let i = event.height() - 1;
        match event {
            Event::LeftCusp(_) => self.comp[column + 1][i],
            _ => self.comp[column][i],
        }
    }

    pub(crate) fn stats(&self, d: &FrontDiagram, c: usize) -> ComponentStats {
        let mut s = ComponentStats {
            w: 0,
            lambda: 0,
            rho: 0,
            lambda_plus: 0,
            lambda_minus: 0,
            rho_plus: 0,
            rho_minus: 0,
            t_plus: 0,
            t_minus: 0,
            tb: 0,
            r: 0,
            handle_runs: alloc::vec![0; d.n_handles()],
            handle_passages: alloc::vec![0; d.n_handles()],
        };
        for (column, &event) in d.events.iter().enumerate() {
            match event {
                Event::Crossing(h) => {
                    let (sign, a, b) = self.crossing(column, h - 1);
                    if a == c && b == c {
                        s.w += sign;
                    }
                }
                _ if self.cusp_component(column, event) != c => {}
                Event::LeftCusp(_) => {
                    if self.cusp_is_up(column, event) {
                        s.lambda_plus += 1;
                    } else {
                        s.lambda_minus += 1;
                    }
                }
                Event::RightCusp(_) => {
                    if self.cusp_is_up(column, event) {
                        s.rho_plus += 1;
                    } else {
                        s.rho_minus += 1;
                    }
                }
            }
        }
        let mut p = 0;
        for (h, &k) in d.slots.iter().enumerate() {
            for _ in 0..k {
                if self.comp[0][p] == c {
                    s.handle_runs[h] += self.dir[0][p].sign();
                    s.handle_passages[h] += 1;
                }
                p += 1;
            }
        }
        s.lambda = s.lambda_plus + s.lambda_minus;
        s.rho = s.rho_plus + s.rho_minus;
        s.t_plus = s.lambda_plus + s.rho_plus;
        s.t_minus = s.lambda_minus + s.rho_minus;
        s.tb = s.w - s.lambda as i64;
        s.r = (s.t_minus as i64 - s.t_plus as i64) / 2;
        s
    }

    pub(crate) fn linking(&self, d: &FrontDiagram, c1: usize, c2: usize) -> i64 {
        let mut total = 0;
        for (column, &event) in d.events.iter().enumerate() {
            if let Event::Crossing(h) = event {
                let (sign, a, b) = self.crossing(column, h - 1);
                if (a, b) == (c1, c2) || (a, b) == (c2, c1) {
                    total += sign;
                }
            }
        }
        total / 2
    }
}
