//! Line-oriented text formats for fronts and surgery presentations.
//!
//! Both formats start with a versioned header line. `#` starts a comment.
//! Components and handles are numbered from 1.
//!
//! ```text
//! front 1
//! handles 1
//! handle 1 slots 2
//! events L1 L1 X2 R1 R1
//! orient 1 +
//! coeff 1 stein
//! ```
//!
//! ```text
//! surgery 1
//! components 2
//! coeff 1 0
//! rot 1 0
//! coeff 2 0
//! l0 2
//! lk 1 2 0
//! ```

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use stein_core::front::{Coefficient, Direction, Event, FrontDiagram, Violation};
use stein_core::presentation::{Component, SurgeryPresentation};
use stein_core::ExtRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Invariant,
}

/// A diagnostic pointing at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {} error: {message}", match .kind { ErrorKind::Syntax => "syntax", ErrorKind::Invariant => "invariant" })]
pub struct ParseError {
    pub kind: ErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError { kind: ErrorKind::Syntax, line: self.line, column: self.column, message: message.into() }
    }

    fn invariant(&self, message: impl Into<String>) -> ParseError {
        ParseError { kind: ErrorKind::Invariant, line: self.line, column: self.column, message: message.into() }
    }

    fn parse<T: std::str::FromStr>(&self, what: &str) -> Result<T, ParseError> {
        self.text.parse().map_err(|_| self.syntax(format!("expected {what}, found {:?}", self.text)))
    }

    fn index(&self, what: &str, count: usize) -> Result<usize, ParseError> {
        let i: usize = self.parse(what)?;
        if i == 0 || i > count {
            return Err(self.invariant(format!("{what} {i} out of range 1..={count}")));
        }
        Ok(i)
    }
}

/// Non-empty lines split into tokens, comments removed.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    let column = body[..s].chars().count() + 1;
                    tokens.push(Token { text: &body[s..i], line: n + 1, column });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

fn end_of_input(text: &str) -> Token<'_> {
    Token { text: "", line: text.lines().count().max(1), column: 1 }
}

fn arity(tokens: &[Token<'_>], n: usize) -> Result<(), ParseError> {
    if tokens.len() != n {
        let at = tokens.get(n).copied().unwrap_or(tokens[0]);
        return Err(at.syntax(format!("{:?} takes {} argument(s)", tokens[0].text, n - 1)));
    }
    Ok(())
}

fn header<'a>(text: &'a str, lines: &[Vec<Token<'a>>], kind: &str) -> Result<(), ParseError> {
    let Some(first) = lines.first() else {
        return Err(end_of_input(text).syntax(format!("empty input, expected \"{kind} 1\"")));
    };
    if first[0].text != kind {
        return Err(first[0].syntax(format!("expected header \"{kind} 1\"")));
    }
    arity(first, 2)?;
    if first[1].text != "1" {
        return Err(first[1].syntax(format!("unsupported {kind} format version {}", first[1].text)));
    }
    Ok(())
}

fn parse_event(t: &Token<'_>) -> Result<Event, ParseError> {
    let bad = || t.syntax(format!("expected an event like L1, R2 or X3, found {:?}", t.text));
    let mut chars = t.text.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let h: usize = chars.as_str().parse().map_err(|_| bad())?;
    match kind {
        'L' => Ok(Event::LeftCusp(h)),
        'R' => Ok(Event::RightCusp(h)),
        'X' => Ok(Event::Crossing(h)),
        _ => Err(bad()),
    }
}

/// Parses a FRONT file and validates the resulting diagram.
pub fn parse_front(text: &str) -> Result<FrontDiagram, ParseError> {
    let lines = lines(text);
    header(text, &lines, "front")?;
    let mut handles: Option<(usize, Token<'_>)> = None;
    let mut slots: BTreeMap<usize, usize> = BTreeMap::new();
    let mut events = Vec::new();
    let mut event_tokens = Vec::new();
    let mut orientations = BTreeMap::new();
    let mut coefficients = BTreeMap::new();
    let mut keyed: BTreeMap<(&str, usize), Token<'_>> = BTreeMap::new();
    for tokens in &lines[1..] {
        let key = tokens[0];
        match key.text {
            "handles" => {
                arity(tokens, 2)?;
                if handles.is_some() {
                    return Err(key.syntax("duplicate \"handles\" line"));
                }
                if !events.is_empty() || !slots.is_empty() {
                    return Err(key.syntax("\"handles\" must come before handles and events"));
                }
                handles = Some((tokens[1].parse("a handle count")?, key));
            }
            "handle" => {
                arity(tokens, 4)?;
                let Some((n, _)) = handles else {
                    return Err(key.syntax("\"handle\" before \"handles\""));
                };
                let h = tokens[1].index("handle", n)?;
                if tokens[2].text != "slots" {
                    return Err(tokens[2].syntax("expected \"slots\""));
                }
                let k = tokens[3].parse("a slot count")?;
                if slots.insert(h, k).is_some() {
                    return Err(key.syntax(format!("handle {h} given twice")));
                }
            }
            "events" => {
                for t in &tokens[1..] {
                    events.push(parse_event(t)?);
                    event_tokens.push(*t);
                }
            }
            "orient" | "coeff" => {
                arity(tokens, 3)?;
                let c: usize = tokens[1].parse("a component id")?;
                if keyed.insert((key.text, c), key).is_some() {
                    return Err(key.syntax(format!("{} for component {c} given twice", key.text)));
                }
                if key.text == "orient" {
                    let d = match tokens[2].text {
                        "+" => Direction::Rightward,
                        "-" => Direction::Leftward,
                        _ => return Err(tokens[2].syntax("expected + or -")),
                    };
                    orientations.insert(c, d);
                } else {
                    let v = if tokens[2].text == "stein" {
                        Coefficient::Stein
                    } else {
                        Coefficient::Value(tokens[2].parse("a coefficient p/q, p, inf or stein")?)
                    };
                    coefficients.insert(c, v);
                }
            }
            other => return Err(key.syntax(format!("unknown key {other:?}"))),
        }
    }
    let n = handles.map_or(0, |(n, _)| n);
    if let Some(h) = (1..=n).find(|h| !slots.contains_key(h)) {
        return Err(handles.expect("n > 0").1.invariant(format!("handle {h} has no slot count")));
    }
    let d = FrontDiagram { slots: slots.into_values().collect(), events, orientations, coefficients };
    if let Some(v) = d.validate().into_iter().next() {
        let at = match &v {
            Violation::HeightOutOfRange { column, .. } => event_tokens[*column],
            Violation::SlotPairing { .. } => event_tokens.last().copied().unwrap_or_else(|| end_of_input(text)),
            Violation::EmptyHandle { .. } => handles.map_or_else(|| end_of_input(text), |(_, t)| t),
            Violation::MissingOrientation { .. } => end_of_input(text),
            Violation::UnknownComponent { component } => keyed
                .iter()
                .find(|((_, c), _)| c == component)
                .map_or_else(|| end_of_input(text), |(_, t)| *t),
        };
        return Err(at.invariant(v.to_string()));
    }
    Ok(d)
}

pub fn write_front(d: &FrontDiagram) -> String {
    let mut s = String::from("front 1\n");
    writeln!(s, "handles {}", d.slots.len()).unwrap();
    for (h, k) in d.slots.iter().enumerate() {
        writeln!(s, "handle {} slots {k}", h + 1).unwrap();
    }
    s.push_str("events");
    for e in &d.events {
        write!(s, " {e}").unwrap();
    }
    s.push('\n');
    for (c, dir) in &d.orientations {
        writeln!(s, "orient {c} {}", if *dir == Direction::Rightward { '+' } else { '-' }).unwrap();
    }
    for (c, v) in &d.coefficients {
        match v {
            Coefficient::Stein => writeln!(s, "coeff {c} stein").unwrap(),
            Coefficient::Value(r) => writeln!(s, "coeff {c} {r}").unwrap(),
        }
    }
    s
}

/// Parses a SURGERY file.
pub fn parse_surgery(text: &str) -> Result<SurgeryPresentation, ParseError> {
    let lines = lines(text);
    header(text, &lines, "surgery")?;
    let Some(second) = lines.get(1) else {
        return Err(end_of_input(text).syntax("expected \"components m\""));
    };
    if second[0].text != "components" {
        return Err(second[0].syntax("expected \"components m\" after the header"));
    }
    arity(second, 2)?;
    let n: usize = second[1].parse("a component count")?;
    let mut coeffs: Vec<Option<ExtRational>> = vec![None; n];
    let mut flags = vec![Component::new(ExtRational::zero()); n];
    let mut lk = vec![vec![BigInt::from(0); n]; n];
    let mut lk_seen: BTreeMap<(usize, usize), Token<'_>> = BTreeMap::new();
    let mut l0_tokens = vec![None; n];
    let mut seen: BTreeMap<(&str, usize), ()> = BTreeMap::new();
    for tokens in &lines[2..] {
        let key = tokens[0];
        match key.text {
            "coeff" | "rot" | "tb" | "unknot" | "l0" => {
                arity(tokens, if matches!(key.text, "unknot" | "l0") { 2 } else { 3 })?;
                let i = tokens[1].index("component", n)? - 1;
                if seen.insert((key.text, i), ()).is_some() {
                    return Err(key.syntax(format!("{} for component {} given twice", key.text, i + 1)));
                }
                match key.text {
                    "coeff" => coeffs[i] = Some(tokens[2].parse("a coefficient p/q, p or inf")?),
                    "rot" => flags[i].rot = Some(tokens[2].parse("an integer")?),
                    "tb" => flags[i].tb = Some(tokens[2].parse("an integer")?),
                    "unknot" => flags[i].is_unknot = true,
                    _ => {
                        flags[i].is_unknot = true;
                        flags[i].in_l0 = true;
                        l0_tokens[i] = Some(key);
                    }
                }
            }
            "lk" => {
                arity(tokens, 4)?;
                let i = tokens[1].index("component", n)? - 1;
                let j = tokens[2].index("component", n)? - 1;
                if i == j {
                    return Err(tokens[2].invariant("self-linking is the coefficient"));
                }
                let v: BigInt = tokens[3].parse("an integer")?;
                let pair = (i.min(j), i.max(j));
                if let Some(prev) = lk_seen.get(&pair) {
                    if lk[i][j] != v {
                        return Err(key.invariant(format!(
                            "asymmetric linking between {} and {}: {} here, {} at line {}",
                            i + 1,
                            j + 1,
                            v,
                            lk[i][j],
                            prev.line
                        )));
                    }
                }
                lk_seen.insert(pair, key);
                lk[i][j] = v.clone();
                lk[j][i] = v;
            }
            "components" => return Err(key.syntax("duplicate \"components\" line")),
            other => return Err(key.syntax(format!("unknown key {other:?}"))),
        }
    }
    let mut components = Vec::with_capacity(n);
    for (i, (c, f)) in coeffs.into_iter().zip(flags).enumerate() {
        let Some(c) = c else {
            return Err(second[0].invariant(format!("component {} has no coefficient", i + 1)));
        };
        components.push(Component { coefficient: c, ..f });
    }
    SurgeryPresentation::new(components, lk).map_err(|e| {
        let at = match e {
            stein_core::presentation::PresentationError::BadL0(i) => l0_tokens[i].unwrap_or(second[0]),
            _ => second[0],
        };
        at.invariant(e.to_string())
    })
}

pub fn write_surgery(p: &SurgeryPresentation) -> String {
    let mut s = String::from("surgery 1\n");
    writeln!(s, "components {}", p.len()).unwrap();
    for (k, c) in p.components().iter().enumerate() {
        let i = k + 1;
        writeln!(s, "coeff {i} {}", c.coefficient).unwrap();
        if c.in_l0 {
            writeln!(s, "l0 {i}").unwrap();
        } else if c.is_unknot {
            writeln!(s, "unknot {i}").unwrap();
        }
        if let Some(r) = c.rot {
            writeln!(s, "rot {i} {r}").unwrap();
        }
        if let Some(t) = c.tb {
            writeln!(s, "tb {i} {t}").unwrap();
        }
    }
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            let v = p.lk(i, j);
            if *v != BigInt::from(0) {
                writeln!(s, "lk {} {} {v}", i + 1, j + 1).unwrap();
            }
        }
    }
    s
}

/// Either file kind, told apart by the header.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Front(FrontDiagram),
    Surgery(SurgeryPresentation),
}

pub fn parse_any(text: &str) -> Result<Input, ParseError> {
    let first = lines(text).into_iter().next();
    match first.as_ref().map(|t| t[0].text) {
        Some("surgery") => parse_surgery(text).map(Input::Surgery),
        _ => parse_front(text).map(Input::Front),
    }
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::Front(d) => f.write_str(&write_front(d)),
            Input::Surgery(p) => f.write_str(&write_surgery(p)),
        }
    }
}
