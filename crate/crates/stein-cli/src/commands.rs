use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};
use std::path::Path;

use num_bigint::BigInt;
use stein_core::families::{
    borromean_membership, brieskorn, brieskorn_c, decide_borromean, decide_seifert, derived_surgery, seifert_normalize,
    Base, BorromeanCoeffs, BorromeanDecision, BorromeanReason, Decision, DerivedFamily, Orientation, SeifertData,
};
use stein_core::front::{apply_move, check_stein_form, stabilize, surger_handles, FrontDiagram, Move, Stabilization};
use stein_core::invariants::{characteristic_sublinks, plane_field_invariants, theta, theta_f0_and_d, SteinPresentation};
use stein_core::presentation::{
    blow_down, expand_rational, CalculusError, h1, rolfsen_twist, slam_dunk, slam_dunk_inverse, stein_plan, SurgeryPresentation,
};
use stein_core::ExtRational;

use crate::cli::{BorromeanArgs, SeifertArgs, Sign, UpDown, Verb};
use crate::format::{parse_any, parse_front, parse_surgery, write_front, write_surgery, Input};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invalid(_) => 2,
        }
    }
}

fn invalid(e: impl Display) -> CliError {
    CliError::Invalid(e.to_string())
}

/// Calculus errors with 1-based component numbers.
fn calculus(e: CalculusError) -> CliError {
    use CalculusError::*;
    let e = match e {
        NoComponent(i) => NoComponent(i + 1),
        NotUnknot(i) => NotUnknot(i + 1),
        NotInteger(i) => NotInteger(i + 1),
        NotUnit(i) => NotUnit(i + 1),
        NotMeridian(i, j) => NotMeridian(i + 1, j + 1),
        ExtraLinking(i, j) => ExtraLinking(i + 1, j + 1),
        InverseNotInteger(i) => InverseNotInteger(i + 1),
        SameComponent => SameComponent,
    };
    invalid(e)
}

fn usage(e: impl Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Ordered `key: value` lines.
#[derive(Default)]
struct Report(String);

impl Report {
    fn line(&mut self, key: &str, value: impl Display) {
        let value = value.to_string();
        if value.is_empty() {
            writeln!(self.0, "{key}:").unwrap();
        } else {
            writeln!(self.0, "{key}: {value}").unwrap();
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn with_path(path: &Path, e: impl Display) -> CliError {
    invalid(format!("{}:{e}", path.display()))
}

fn front(path: &Path) -> Result<FrontDiagram, CliError> {
    parse_front(&read(path)?).map_err(|e| with_path(path, e))
}

fn surgery(path: &Path) -> Result<SurgeryPresentation, CliError> {
    parse_surgery(&read(path)?).map_err(|e| with_path(path, e))
}

/// A surgery presentation from either file kind; fronts are surgered.
fn presentation(path: &Path) -> Result<SurgeryPresentation, CliError> {
    match parse_any(&read(path)?).map_err(|e| with_path(path, e))? {
        Input::Surgery(p) => Ok(p),
        Input::Front(d) => surger_handles(&d).map_err(invalid),
    }
}

fn stein_presentation(path: &Path) -> Result<SteinPresentation, CliError> {
    SteinPresentation::from_surgery(&presentation(path)?).map_err(invalid)
}

fn index(i: usize, n: usize) -> Result<usize, CliError> {
    if i == 0 || i > n {
        return Err(invalid(format!("component {i} out of range 1..={n}")));
    }
    Ok(i - 1)
}

fn coefficient(s: &str) -> Result<ExtRational, CliError> {
    s.parse().map_err(usage)
}

fn integer(s: &str) -> Result<i64, CliError> {
    s.parse().map_err(|_| usage(format!("expected an integer, found {s:?}")))
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn execute(verb: &Verb) -> Result<String, CliError> {
    let mut out = Report::default();
    match verb {
        Verb::Stats { file } => {
            let d = front(file)?;
            let stats = d.all_stats().map_err(invalid)?;
            out.line("components", stats.len());
            out.line("handles", d.n_handles());
            for (k, s) in stats.iter().enumerate() {
                out.line("component", k + 1);
                out.line("tb", s.tb);
                out.line("r", s.r);
                out.line("w", s.w);
                out.line("lambda", s.lambda);
                out.line("rho", s.rho);
                out.line("t_plus", s.t_plus);
                out.line("t_minus", s.t_minus);
                out.line("handle_runs", join(&s.handle_runs, " "));
            }
            for a in 1..=stats.len() {
                for b in a + 1..=stats.len() {
                    out.line(&format!("lk {a} {b}"), d.linking_number(a, b).map_err(invalid)?);
                }
            }
        }
        Verb::Lint { file } => match parse_any(&read(file)?) {
            Ok(Input::Front(d)) => {
                out.line("kind", "front");
                out.line("components", d.n_components().map_err(invalid)?);
                out.line("valid", true);
            }
            Ok(Input::Surgery(p)) => {
                out.line("kind", "surgery");
                out.line("components", p.len());
                out.line("valid", true);
            }
            Err(e) => return Err(with_path(file, e)),
        },
        Verb::CheckStein { file } => {
            let report = check_stein_form(&front(file)?).map_err(invalid)?;
            out.line("stein", report.passed());
            for f in &report.failures {
                out.line("failure", f);
            }
        }
        Verb::Surger { file } => return Ok(write_surgery(&surger_handles(&front(file)?).map_err(invalid)?)),
        Verb::H1 { file } => {
            let g = h1(&presentation(file)?);
            out.line("h1", &g);
            out.line("rank", g.rank());
            if let Some(o) = g.order() {
                out.line("order", o);
            }
        }
        Verb::Expand { file } => return Ok(write_surgery(&expand_rational(&surgery(file)?))),
        Verb::Twist { component, m, file } => {
            let p = surgery(file)?;
            let i = index(*component, p.len())?;
            return Ok(write_surgery(&rolfsen_twist(&p, i, *m).map_err(calculus)?));
        }
        Verb::Dunk { i, rest, inverse } => {
            let (j, file) = match (rest.as_slice(), inverse) {
                ([file], Some(_)) => (None, file),
                ([j, file], None) => (Some(j.parse::<usize>().map_err(usage)?), file),
                ([_], None) => return Err(usage("dunk needs <j> or --inverse <coeff>")),
                _ => return Err(usage("--inverse takes the place of <j>")),
            };
            let p = surgery(Path::new(file))?;
            let i = index(*i, p.len())?;
            let q = match (j, inverse) {
                (Some(j), _) => slam_dunk(&p, i, index(j, p.len())?).map_err(calculus)?,
                (None, Some(c)) => slam_dunk_inverse(&p, i, &coefficient(c)?).map_err(calculus)?.0,
                (None, None) => unreachable!(),
            };
            return Ok(write_surgery(&q));
        }
        Verb::Blowdown { component, file } => {
            let p = surgery(file)?;
            let i = index(*component, p.len())?;
            return Ok(write_surgery(&blow_down(&p, i).map_err(calculus)?));
        }
        Verb::Plan { file } => plan(&surgery(file)?, &mut out),
        Verb::Gamma { file } => {
            let x = stein_presentation(file)?;
            let sublinks = characteristic_sublinks(&x);
            out.line("spin_structures", sublinks.len());
            for s in &sublinks {
                let inv = plane_field_invariants(&x, s).map_err(invalid)?;
                out.line("sublink", s);
                out.line("gamma", &inv.gamma);
                let coords = inv.gamma.coordinates.iter().zip(&inv.gamma.moduli).map(|(c, m)| {
                    if *m == BigInt::from(0) {
                        c.to_string()
                    } else {
                        format!("{c} mod {m}")
                    }
                });
                out.line("coordinates", format!("[{}]", join(coords, ", ")));
            }
        }
        Verb::Theta { file } => {
            let x = stein_presentation(file)?;
            let (d, f0) = theta_f0_and_d(&x);
            out.line("chern", format!("({})", join(stein_core::invariants::chern_cocycle(&x), ",")));
            out.line("d", d);
            out.line("theta_f0", f0);
            match theta(&x) {
                Ok(t) => out.line("theta", ExtRational::Finite(t)),
                Err(stein_core::invariants::InvariantError::ThetaUndefined) => out.line("theta", "undefined"),
                Err(e) => return Err(invalid(e)),
            }
        }
        Verb::Seifert(args) => seifert(args, &mut out)?,
        Verb::Brieskorn { p, orientation, search_bound } => {
            let s = brieskorn([p[0], p[1], p[2]], orientation_of(*orientation)).map_err(invalid)?;
            out.line("multiplicities", join(p, " "));
            out.line("orientation", if *orientation == Sign::Plus { "+" } else { "-" });
            out.line("c", brieskorn_c(s.coefficients()).expect("finite"));
            report_seifert(&s, *search_bound, &mut out)?;
        }
        Verb::Borromean(args) => borromean(args, &mut out)?,
        Verb::Move { n, at, height, lower, below, undo, back, bottom, file } => {
            let d = front(file)?;
            let need_at = || at.ok_or_else(|| usage(format!("move {n} needs --at")));
            let mv = match n {
                1 if *undo => Move::KinkRemove { column: need_at()? },
                1 => Move::KinkInsert {
                    gap: need_at()?,
                    height: height.ok_or_else(|| usage("move 1 needs --height"))?,
                    lower: *lower,
                },
                2 if *undo => Move::CuspPastStrandUndo { column: need_at()? },
                2 => Move::CuspPastStrand { column: need_at()?, above: !*below },
                3 => Move::TripleCrossing { column: need_at()? },
                4 => Move::CuspOverHandle { to_front: !*back, handle: *at },
                5 => Move::CrossingOverHandle { to_front: !*back },
                6 => Move::AroundHandle { handle: need_at()?, from_top: !*bottom },
                _ => return Err(usage(format!("no move {n}; moves are 1 to 6"))),
            };
            return Ok(write_front(&apply_move(&d, &mv).map_err(invalid)?));
        }
        Verb::Stabilize { component, direction, at, file } => {
            let d = front(file)?;
            let height = d.strand_of(*component, *at).map_err(invalid)?;
            let kind = match direction {
                UpDown::Up => Stabilization::Up,
                UpDown::Down => Stabilization::Down,
            };
            return Ok(write_front(&stabilize(&d, *component, *at, height, kind).map_err(invalid)?));
        }
    }
    Ok(out.0)
}

fn plan(p: &SurgeryPresentation, out: &mut Report) {
    let tb: BTreeMap<usize, i64> = p.components().iter().enumerate().filter_map(|(i, c)| Some((i, c.tb?))).collect();
    match stein_plan(p, &tb) {
        Err(rejection) => {
            out.line("plan", "none");
            out.line("reason", rejection);
        }
        Ok(plan) => {
            out.line("plan", "ok");
            for c in &plan.components {
                out.line("component", c.original + 1);
                if c.deleted() {
                    out.line("deleted", true);
                    continue;
                }
                out.line("chain", join(c.chain.iter().map(|e| e.coefficient), " "));
                out.line("zigzags", join(c.chain.iter().map(|e| e.zigzags), " "));
                out.line("tb", join(c.chain.iter().map(|e| e.tb), " "));
                let rot = c.chain.iter().map(|e| e.rot.map_or_else(|| "?".to_string(), |r| r.to_string()));
                out.line("rot", join(rot, " "));
            }
        }
    }
}

fn orientation_of(s: Sign) -> Orientation {
    match s {
        Sign::Plus => Orientation::Positive,
        Sign::Minus => Orientation::Negative,
    }
}

fn parse_base(s: &str) -> Result<Base, CliError> {
    let bad = || usage(format!("base must be o<g> or n<g>, found {s:?}"));
    let (kind, g) = s.split_at_checked(1).ok_or_else(bad)?;
    let g: u32 = g.parse().map_err(|_| bad())?;
    match kind {
        "o" => Ok(Base::Orientable(g)),
        "n" => Ok(Base::Nonorientable(g)),
        _ => Err(bad()),
    }
}

fn seifert(args: &SeifertArgs, out: &mut Report) -> Result<(), CliError> {
    let s = match &args.brieskorn {
        Some(p) => brieskorn([p[0], p[1], p[2]], orientation_of(args.orientation)).map_err(invalid)?,
        None => {
            let coeffs = args.coeff.iter().map(|c| coefficient(c)).collect::<Result<Vec<_>, _>>()?;
            SeifertData::new(parse_base(&args.base)?, coeffs).map_err(invalid)?
        }
    };
    report_seifert(&s, args.search_bound, out)
}

fn report_seifert(s: &SeifertData, bound: u32, out: &mut Report) -> Result<(), CliError> {
    let nf = seifert_normalize(s);
    out.line("base", s.base());
    out.line("coefficients", join(s.coefficients(), " "));
    out.line("e", ExtRational::Finite(nf.e.clone()));
    out.line("e0", &nf.e0);
    out.line("rprime", join(&nf.rprime, " "));
    match decide_seifert(s, bound).map_err(invalid)? {
        Decision::Yes(reason) => {
            out.line("decision", format!("YES({})", reason.letter()));
            out.line("reason", reason);
        }
        Decision::Unknown => out.line("decision", "UNKNOWN"),
    }
    Ok(())
}

fn borromean(args: &BorromeanArgs, out: &mut Report) -> Result<(), CliError> {
    let given = [!args.coefficients.is_empty(), args.borromean.is_some(), args.twist_knot.is_some(), args.two_component.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(usage("give exactly one of r1 r2 r3, --borromean, --twist-knot or --two-component"));
    }
    let triple = |v: &[String]| -> Result<BorromeanCoeffs, CliError> {
        if v.len() != 3 {
            return Err(usage("need three coefficients"));
        }
        Ok(BorromeanCoeffs::new(coefficient(&v[0])?, coefficient(&v[1])?, coefficient(&v[2])?))
    };
    let (c, decision) = if let Some(v) = &args.twist_knot {
        out.line("family", "twist-knot");
        derived_surgery(&DerivedFamily::TwistKnot { l: integer(&v[0])?, m: integer(&v[1])?, r: coefficient(&v[2])? })
    } else if let Some(v) = &args.two_component {
        out.line("family", "two-component");
        derived_surgery(&DerivedFamily::TwoComponent { m: integer(&v[0])?, r1: coefficient(&v[1])?, r2: coefficient(&v[2])? })
    } else {
        let c = triple(args.borromean.as_deref().unwrap_or(&args.coefficients))?;
        let d = decide_borromean(&c);
        (c, d)
    };
    out.line("coefficients", &c);
    match decision {
        BorromeanDecision::Yes(BorromeanReason::InfiniteCoefficient(i)) => {
            out.line("decision", "YES");
            out.line("reason", format!("r{} = inf", i + 1));
        }
        BorromeanDecision::Yes(BorromeanReason::OutsideExceptionalSets) => {
            out.line("decision", "YES");
            out.line("reason", "outside A0, A2, A3");
        }
        BorromeanDecision::Unknown(_) => out.line("decision", "UNKNOWN"),
    }
    if let Ok(m) = borromean_membership(&c) {
        out.line("inA0", m.in_a0);
        out.line("inA2", m.in_a2);
        out.line("inA3", m.in_a3);
    }
    Ok(())
}
