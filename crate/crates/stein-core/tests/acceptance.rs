//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are expected to fail; the test
//! checks that they still fail so a change in behavior is noticed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;
use stein_core::families::{
    brieskorn, brieskorn_c, decide_borromean, decide_seifert, derived_surgery, n_a, seifert_normalize,
    BorromeanCoeffs, BrieskornFamily, Decision, DerivedFamily, FamilyReason, Orientation, SeifertReason,
};
use stein_core::front::{
    apply_move, around_handle_runs, check_stein_form, commute, stabilize, surger_handles, Coefficient, Direction,
    Event, FrontDiagram, Move, Stabilization,
};
use stein_core::invariants::{
    characteristic_sublinks, gamma, gamma_vector, theta, Cokernel, SpinStructure, SteinPresentation,
};
use stein_core::numerics::{
    floor_q, neg_continued_fraction, q, qi, smith_normal_form, BigRational, IntMatrix, IntSymMatrix,
};
use stein_core::presentation::{
    blow_down, expand_rational, h1, linking_form, rolfsen_twist, slam_dunk, slam_dunk_inverse, AbelianGroup,
    Component, SurgeryPresentation,
};
use stein_core::ExtRational;

const KNOWN_UNATTAINABLE: &[usize] = &[5];

type Outcome = Result<String, String>;

fn sample<S: Strategy>(runner: &mut TestRunner, s: &S) -> S::Value {
    s.new_tree(runner).expect("strategy produces values").current()
}

fn b(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn oriented(slots: Vec<usize>, events: Vec<Event>, flips: &[bool]) -> FrontDiagram {
    let mut d = FrontDiagram { slots, events, ..Default::default() };
    let mut c = 1;
    while d.validate().iter().any(|v| matches!(v, stein_core::front::Violation::MissingOrientation { .. })) {
        let dir = if flips[c % flips.len()] { Direction::Leftward } else { Direction::Rightward };
        d.orientations.insert(c, dir);
        c += 1;
    }
    d
}

/// Valid oriented fronts with at most `max_events` events and `max_handles` handles.
fn fronts(max_events: usize, max_handles: usize) -> impl Strategy<Value = FrontDiagram> {
    (
        prop::collection::vec(1usize..=3, 0..=max_handles),
        prop::collection::vec((0u8..3, any::<u16>()), 0..=max_events),
        prop::collection::vec(any::<bool>(), 8),
    )
        .prop_map(move |(mut slots, raw, flips)| {
            if slots.iter().sum::<usize>() % 2 == 1 {
                slots.push(1);
                if slots.len() > max_handles {
                    slots.truncate(slots.len() - 2);
                }
            }
            let base: usize = slots.iter().sum();
            let mut n = base;
            let mut events = Vec::new();
            let total = raw.len();
            for (k, (kind, h)) in raw.into_iter().enumerate() {
                let left = total - k - 1;
                let can_grow = n + 2 <= base + 2 * left;
                let can_shrink = n >= 2 && n - 2 + 2 * left >= base;
                let e = match kind {
                    0 if can_grow => Event::LeftCusp(h as usize % (n + 1) + 1),
                    1 if can_shrink => Event::RightCusp(h as usize % (n - 1) + 1),
                    _ if n >= 2 => Event::Crossing(h as usize % (n - 1) + 1),
                    _ if can_grow => Event::LeftCusp(h as usize % (n + 1) + 1),
                    _ => continue,
                };
                n = n.checked_add_signed(e.delta()).unwrap();
                events.push(e);
            }
            while n > base {
                events.push(Event::RightCusp(1));
                n -= 2;
            }
            oriented(slots, events, &flips)
        })
        .prop_filter("valid", move |d| d.is_valid() && d.events.len() <= max_events)
}

fn tagged(mut d: FrontDiagram) -> FrontDiagram {
    for c in 1..=d.n_components().unwrap() {
        d.coefficients.insert(c, Coefficient::Value(ExtRational::int(c as i64)));
    }
    d
}

/// `(tb, r, passages)` keyed by the tag carried in the coefficient.
fn by_tag(d: &FrontDiagram) -> BTreeMap<i64, (i64, i64, u64)> {
    d.all_stats()
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(k, s)| {
            let Coefficient::Value(v) = &d.coefficients[&(k + 1)] else { unreachable!() };
            (i64::try_from(v.to_integer().unwrap()).unwrap(), (s.tb, s.r, s.total_passages()))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    use Event::*;
    let trefoil = oriented(vec![], vec![LeftCusp(1), LeftCusp(1), Crossing(2), Crossing(2), Crossing(2), RightCusp(1), RightCusp(1)], &[false]);
    let unknot = oriented(vec![], vec![LeftCusp(1), RightCusp(1)], &[false]);
    let t = trefoil.component_stats(1).map_err(|e| e.to_string())?;
    let u = unknot.component_stats(1).map_err(|e| e.to_string())?;
    if (t.tb, u.tb) != (1, -1) {
        return Err(format!("tb(trefoil) = {}, tb(unknot) = {}", t.tb, u.tb));
    }
    Ok(format!("tb(trefoil) = 1 (w {}, lambda {}), tb(unknot) = -1", t.w, t.lambda))
}

fn criterion_2() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let strategy = fronts(12, 2);
    let mut failures = 0;
    let mut components = 0;
    for _ in 0..1000 {
        let d = sample(&mut runner, &strategy);
        for s in d.all_stats().unwrap() {
            components += 1;
            if (s.tb + s.r + 1).rem_euclid(2) as u64 != s.total_passages() % 2 {
                failures += 1;
            }
        }
        let mut d = d;
        for c in 1..=d.n_components().unwrap() {
            d.coefficients.insert(c, Coefficient::Stein);
        }
        if !check_stein_form(&d).unwrap().passed() {
            failures += 1;
        }
    }
    if failures > 0 {
        return Err(format!("{failures} parity failures"));
    }
    Ok(format!("1000 diagrams, {components} components, 0 failures"))
}

fn random_move(d: &FrontDiagram, sel: u32, a: usize, h: usize, flag: bool) -> Option<FrontDiagram> {
    let e = d.events.len();
    let col = if e == 0 { 0 } else { a % e };
    let mv = match sel % 8 {
        0 => {
            let gap = a % (e + 1);
            let n = (d.slots.iter().sum::<usize>() as isize + d.events[..gap].iter().map(|x| x.delta()).sum::<isize>())
                as usize;
            if n == 0 {
                return None;
            }
            Move::KinkInsert { gap, height: h % n + 1, lower: flag }
        }
        1 => Move::KinkRemove { column: col },
        2 => Move::CuspPastStrand { column: col, above: flag },
        3 => Move::CuspPastStrandUndo { column: col },
        4 => Move::TripleCrossing { column: col },
        5 => Move::CuspOverHandle { to_front: flag, handle: None },
        6 => Move::CrossingOverHandle { to_front: flag },
        _ => return commute(d, col).ok(),
    };
    apply_move(d, &mv).ok()
}

fn criterion_3() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let strategy = fronts(12, 2);
    let step = (any::<u32>(), any::<usize>(), any::<usize>(), any::<bool>());
    let mut applied = BTreeMap::<u8, usize>::new();
    let mut total = 0;
    let mut attempts = 0;
    while total < 10_000 {
        attempts += 1;
        if attempts > 2_000_000 {
            return Err(format!("only {total} moves applied"));
        }
        let mut cur = tagged(sample(&mut runner, &strategy));
        let before = by_tag(&cur);
        for _ in 0..20 {
            let (sel, a, h, flag) = sample(&mut runner, &step);
            let Some(next) = random_move(&cur, sel, a, h, flag) else { continue };
            if sel % 8 != 7 {
                let n = [1, 1, 2, 2, 3, 4, 5][(sel % 8) as usize];
                *applied.entry(n).or_default() += 1;
                total += 1;
            }
            let after = by_tag(&next);
            if after.iter().map(|(k, v)| (k, v.0, v.1)).ne(before.iter().map(|(k, v)| (k, v.0, v.1))) {
                return Err(format!("(tb, r) changed from {before:?} to {after:?}"));
            }
            cur = next;
        }
    }
    let mut swings = 0;
    let mut nonzero = 0;
    while swings < 1000 {
        let d = tagged(sample(&mut runner, &strategy));
        if d.n_handles() == 0 {
            continue;
        }
        for handle in 1..=d.n_handles() {
            for from_top in [true, false] {
                let (c, runs) = around_handle_runs(&d, handle, from_top).map_err(|e| e.to_string())?;
                let m = apply_move(&d, &Move::AroundHandle { handle, from_top }).map_err(|e| e.to_string())?;
                let (x, y) = (by_tag(&d), by_tag(&m));
                for (k, v) in &x {
                    let w = y[k];
                    let expect = if *k == c as i64 { 2 * runs } else { 0 };
                    if w.0 - v.0 != expect || w.1 != v.1 {
                        return Err(format!("move 6 on handle {handle}: {v:?} -> {w:?}, runs {runs}"));
                    }
                }
                swings += 1;
                nonzero += usize::from(runs != 0);
            }
        }
    }
    Ok(format!("{total} moves 1-5 applied {applied:?}; {swings} move 6 swings ({nonzero} with nonzero runs)"))
}

fn through_handle_front(p: usize) -> FrontDiagram {
    let mut d = oriented(vec![2 * p], (1..2 * p).map(Event::Crossing).collect(), &[false]);
    for k in 0..2 * (p - 1) {
        let kind = if k % 2 == 0 { Stabilization::Up } else { Stabilization::Down };
        d = stabilize(&d, 1, 0, 1, kind).unwrap();
    }
    d.coefficients.insert(1, Coefficient::Value(ExtRational::zero()));
    d
}

fn criterion_4() -> Outcome {
    for p in 1..=5i64 {
        let d = through_handle_front(p as usize);
        let s = d.component_stats(1).unwrap();
        if (s.tb, s.r) != (1, 0) || !check_stein_form(&d).unwrap().passed() {
            return Err(format!("p = {p}: front has tb {} r {}", s.tb, s.r));
        }
        let x = SteinPresentation::from_surgery(&surger_handles(&d).unwrap()).map_err(|e| e.to_string())?;
        if x.q_star().to_rows() != vec![b(&[0, 2 * p]), b(&[2 * p, 0])] {
            return Err(format!("p = {p}: surgered matrix {:?}", x.q_star().to_rows()));
        }
        let sublinks = characteristic_sublinks(&x);
        if sublinks.len() != 4 {
            return Err(format!("p = {p}: {} characteristic sublinks", sublinks.len()));
        }
        let empty = SpinStructure { sublink: vec![false, false] };
        let g = gamma(&x, &empty).map_err(|e| e.to_string())?;
        if g != Cokernel::new(&x.q_star()).class(&b(&[p, 0])) || g.representative != b(&[p, 0]) {
            return Err(format!("p = {p}: gamma {g}"));
        }
        if theta(&x) != Ok(qi(-2)) {
            return Err(format!("p = {p}: theta {:?}", theta(&x)));
        }
    }
    Ok("p = 1..5: [[0,2p],[2p,0]], 4 sublinks, gamma (p,0), theta -2".into())
}

fn knot(n: i64, r: i64) -> SteinPresentation {
    SteinPresentation::new(IntSymMatrix::from_rows(&[vec![n]]).unwrap(), IntMatrix::zeros(0, 1), b(&[r])).unwrap()
}

/// Pairs `(n, r1), (-n, r2)` with `n > 0` whose θ agree.
fn theta_collisions() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for n in 1..=50i64 {
        for r1 in -20..=20i64 {
            for r2 in -20..=20i64 {
                if theta(&knot(n, r1)).unwrap() == theta(&knot(-n, r2)).unwrap() {
                    out.push((n, r1, r2));
                }
            }
        }
    }
    out
}

/// The linking forms of `n` and `-n` surgery are not isometric: no unit
/// `k` with `k² lf(n) = lf(-n)` modulo 1.
fn linking_forms_differ(n: i64) -> bool {
    let lf = |m: i64| {
        let p = SurgeryPresentation::split(vec![Component::new(ExtRational::int(m))]);
        linking_form(&p, &b(&[1]), &b(&[1])).unwrap()
    };
    let (a, c) = (lf(n), lf(-n));
    (1..n).filter(|k| k.gcd(&n) == 1).all(|k| {
        let d = &a * qi(k * k) - &c;
        !d.is_integer()
    })
}

/// The argument behind the θ separation: collisions force
/// `r1² + r2² = 6n` and are then told apart by the linking form.
fn criterion_5_full_argument() -> Result<usize, String> {
    let collisions = theta_collisions();
    for &(n, r1, r2) in &collisions {
        if r1 * r1 + r2 * r2 != 6 * n || n % 3 != 0 {
            return Err(format!("collision ({n}, {r1}), ({}, {r2}) outside r1² + r2² = 6n with 3 | n", -n));
        }
        if !linking_forms_differ(n) {
            return Err(format!("linking forms of {n} and {} agree", -n));
        }
    }
    Ok(collisions.len())
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for n in (-50..=50i64).filter(|&n| n != 0) {
        for r in -20..=20i64 {
            let expect = q(r * r, n) - qi(4) - qi(3 * n.signum());
            let got = theta(&knot(n, r)).map_err(|e| e.to_string())?;
            if got != expect {
                return Err(format!("theta({n}, {r}) = {got}, expected {expect}"));
            }
            checked += 1;
        }
    }
    let collisions = theta_collisions();
    let argument = match criterion_5_full_argument() {
        Ok(k) => format!("all {k} resolved by the linking form"),
        Err(e) => format!("linking-form argument fails: {e}"),
    };
    match collisions.first() {
        None => Ok(format!("closed form on {checked} pairs; no shared theta")),
        Some(&(n, r1, r2)) => Err(format!(
            "closed form holds on {checked} pairs, but {} pairs share theta, e.g. ({n}, {r1}) and ({}, {r2}) give {}; {argument}",
            collisions.len(),
            -n,
            theta(&knot(n, r1)).unwrap()
        )),
    }
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for g in 0..=5i64 {
        for e in (-10..=10i64).filter(|&e| e != 0 && e <= 2 * g - 2) {
            let bound = 2 * g - 2 - e;
            for r in (-bound..=bound).filter(|r| (r - e).rem_euclid(2) == 0) {
                let rows = vec![vec![0i64]; 2 * g as usize];
                let rmat = if rows.is_empty() { IntMatrix::zeros(0, 1) } else { IntMatrix::from_rows(&rows) };
                let x = SteinPresentation::new(IntSymMatrix::from_rows(&[vec![e]]).unwrap(), rmat, b(&[r])).unwrap();
                let mut sublink = vec![false; 1 + 2 * g as usize];
                sublink[0] = true;
                let s = SpinStructure { sublink };
                let gv = gamma_vector(&x, &s).map_err(|err| err.to_string())?;
                if gv[0] != BigInt::from((r + e) / 2) {
                    return Err(format!("g {g} e {e} r {r}: gamma {gv:?}"));
                }
                let expect = q(r * r, e) - qi(2 * (2 - 2 * g)) - qi(3 * e.signum());
                if theta(&x) != Ok(expect.clone()) {
                    return Err(format!("g {g} e {e} r {r}: theta {:?}, expected {expect}", theta(&x)));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} bundles with admissible r"))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for p in -50..=50i64 {
        for qd in 1..=50i64 {
            if p.gcd(&qd) != 1 {
                continue;
            }
            let r = ExtRational::ratio(p, qd);
            let cf = neg_continued_fraction(&r).map_err(|e| e.to_string())?;
            if ExtRational::Finite(cf.evaluate()) != r {
                return Err(format!("{r}: evaluates to {}", cf.evaluate()));
            }
            if cf.terms()[1..].iter().any(|t| *t > BigInt::from(-2)) {
                return Err(format!("{r}: tail {:?}", cf.terms()));
            }
            let mut x = expand_rational(&SurgeryPresentation::split(vec![Component::unknot(r.clone())]));
            while x.len() > 1 {
                x = slam_dunk(&x, x.len() - 2, x.len() - 1).map_err(|e| format!("{r}: {e}"))?;
            }
            if x.component(0).coefficient != r {
                return Err(format!("{r}: chain collapses to {}", x.component(0).coefficient));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} reduced fractions"))
}

fn criterion_8() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let coeff = (-20i64..=20, 1i64..=20).prop_filter("reduced", |(p, q)| p.gcd(q) == 1);
    let triple = (coeff.clone(), coeff.clone(), coeff);
    for _ in 0..200 {
        let ((p1, q1), (p2, q2), (p3, q3)) = sample(&mut runner, &triple);
        let comps = [(p1, q1), (p2, q2), (p3, q3)].map(|(p, q)| Component::unknot(ExtRational::ratio(p, q)));
        let x = SurgeryPresentation::split(comps.to_vec());
        let expect = AbelianGroup::from_orders(&b(&[p1, p2, p3]));
        if h1(&x) != expect {
            return Err(format!("({p1}/{q1}, {p2}/{q2}, {p3}/{q3}): {} vs {expect}", h1(&x)));
        }
        let expanded = h1(&expand_rational(&x));
        if expanded != expect {
            return Err(format!("({p1}/{q1}, {p2}/{q2}, {p3}/{q3}): expanded {expanded}"));
        }
    }
    Ok("200 triples, also after expansion to integer chains".into())
}

fn criterion_9() -> Outcome {
    let mut instances = 0;
    for f in BrieskornFamily::ALL {
        for l in 0..=5 {
            for m in 0..=5 {
                for t in [1, -1] {
                    let Some(inst) = f.instance(l, m, t) else { continue };
                    let c = brieskorn_c(inst.data.coefficients()).unwrap();
                    let nf = seifert_normalize(&inst.data);
                    if c.abs() != BigInt::from(1) || nf.e0 != BigInt::from(-1) {
                        return Err(format!("{f:?} ({l}, {m}, {t}): c {c}, e0 {}", nf.e0));
                    }
                    let Decision::Yes(why) = decide_seifert(&inst.data, 20).map_err(|e| e.to_string())? else {
                        return Err(format!("{f:?} ({l}, {m}, {t}) undecided"));
                    };
                    let consistent = match inst.reason {
                        FamilyReason::ClosedForm => matches!(why, SeifertReason::ClosedForm { .. }),
                        FamilyReason::AllBelowMinusTwo => why == SeifertReason::AllBelowMinusTwo,
                        FamilyReason::Matrix(a) => {
                            let r = &nf.rprime;
                            (0..3).any(|i| {
                                (0..3).filter(|&j| j != i).any(|j| {
                                    n_a(&a, &r[i], &r[j]).unwrap().is_some_and(|v| v.exceeds(&r[3 - i - j]))
                                })
                            })
                        }
                    };
                    if !consistent {
                        return Err(format!("{f:?} ({l}, {m}, {t}): reason {why}"));
                    }
                    instances += 1;
                }
            }
        }
    }
    let poincare = brieskorn([2, 3, 5], Orientation::Negative).map_err(|e| e.to_string())?;
    let e = seifert_normalize(&poincare).e;
    if !e.is_positive() || decide_seifert(&poincare, 100).map_err(|e| e.to_string())? != Decision::Unknown {
        return Err("Σ(2,3,5) with positive Euler number was decided".into());
    }
    Ok(format!("{instances} instances over 8 rows; Σ(2,3,5) with e = {e} is UNKNOWN"))
}

fn neg_recip_floor(r: &BigRational) -> BigRational {
    BigRational::from_integer(floor_q(&(-r.recip())))
}

fn criterion_10() -> Outcome {
    let mut unknown = 0;
    for a in -10..=10i64 {
        for bb in -10..=10i64 {
            for c in -10..=10i64 {
                let s = [a, bb, c];
                let listed = s.iter().all(|x| (1..=3).contains(x))
                    || (s.iter().filter(|&&x| x == -1).count() == 1
                        && s.iter().filter(|&&x| (-4..=-2).contains(&x)).count() == 2)
                    || s == [-2, -2, -2];
                let u = !decide_borromean(&BorromeanCoeffs::ints(a, bb, c)).is_yes();
                if u != listed {
                    return Err(format!("{s:?}: unknown {u}, listed {listed}"));
                }
                unknown += usize::from(u);
            }
        }
    }
    let grid: Vec<BigRational> = (-48..=48).map(|k| q(k, 4)).collect();
    let int = |k: i64| qi(k);
    let mut knot_cases = 0;
    for l in -6..=6i64 {
        for m in -6..=6i64 {
            for r in &grid {
                let kind = DerivedFamily::TwistKnot { l, m, r: ExtRational::Finite(r.clone()) };
                let u = !derived_surgery(&kind).1.is_yes();
                let i = l == -1 && m == -1 && *r >= int(1) && *r < int(4);
                let ii = |l: i64, m: i64| l < 0 && m >= 3 && *r >= int(-2 * m - 1) && *r < int(-6);
                let iii = l > 0 && m > 0 && *r >= int(-2 * (l + m + 1)) && *r < int(-6);
                if u != (i || ii(l, m) || ii(m, l) || iii) {
                    return Err(format!("K({l},{m}) r = {r}: unknown {u}"));
                }
                knot_cases += 1;
            }
        }
    }
    let mut link_cases = 0;
    for m in -5..=5i64 {
        for r1 in &grid {
            for r2 in &grid {
                let kind = DerivedFamily::TwoComponent {
                    m,
                    r1: ExtRational::Finite(r1.clone()),
                    r2: ExtRational::Finite(r2.clone()),
                };
                let u = !derived_surgery(&kind).1.is_yes();
                let a0 = |x: &BigRational| *x >= int(1) && *x < int(4);
                let i = m == -1 && a0(r1) && a0(r2);
                let ii = |ri: &BigRational, rj: &BigRational| {
                    m < 0
                        && *ri >= q(-1, 3)
                        && ri.is_negative()
                        && *rj >= int(-2) * neg_recip_floor(ri) - int(1)
                        && *rj < int(-6)
                };
                let iii = |ri: &BigRational, rj: &BigRational| {
                    m >= 3 && !ri.is_negative() && *rj >= int(-2 * m - 1) && *rj < int(-6)
                };
                let iv = m > 0
                    && r1.is_negative()
                    && r2.is_negative()
                    && (*r1 < int(-6) || *r2 < int(-6) || (*r1 < int(-1) && *r2 < int(-1)))
                    && *r1 >= int(-2) * (neg_recip_floor(r2) + int(m + 1))
                    && *r2 >= int(-2) * (neg_recip_floor(r1) + int(m + 1));
                if u != (i || ii(r1, r2) || ii(r2, r1) || iii(r1, r2) || iii(r2, r1) || iv) {
                    return Err(format!("L({m}) r = ({r1}, {r2}): unknown {u}"));
                }
                link_cases += 1;
            }
        }
    }
    Ok(format!("{unknown} UNKNOWN integer triples match; {knot_cases} knot and {link_cases} link surgeries match"))
}

fn criterion_11() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let matrices = (1usize..=8).prop_flat_map(|n| prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| (n, v)));
    for _ in 0..100 {
        let (n, v) = sample(&mut runner, &matrices);
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| v[i.min(j) * n + i.max(j)]).collect()).collect();
        let qm = IntSymMatrix::from_rows(&rows).unwrap();
        let x = SteinPresentation::new(qm.clone(), IntMatrix::zeros(0, n), vec![BigInt::zero(); n]).unwrap();
        let count = characteristic_sublinks(&x).len();
        let snf = smith_normal_form(qm.matrix());
        let even = (0..n).filter(|&i| snf.diag.get(i).map_or(true, |d| d.is_even())).count();
        if count != 1 << even {
            return Err(format!("{rows:?}: {count} sublinks, |H^1(M; Z/2)| = {}", 1 << even));
        }
    }
    Ok("100 matrices of dimension <= 8".into())
}

fn criterion_12() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let comps = prop::collection::vec((-6i64..=6, 1i64..=4, any::<bool>()), 1..=4);
    let presentations = comps.prop_flat_map(|c| {
        let n = c.len();
        (Just(c), prop::collection::vec(-2i64..=2, n * n))
    });
    let op = (0u8..5, any::<usize>(), any::<usize>(), -3i64..=3);
    let mut applied = BTreeMap::<&str, usize>::new();
    for _ in 0..1000 {
        let (c, lk) = sample(&mut runner, &presentations);
        let n = c.len();
        let components = c
            .iter()
            .map(|&(p, q, unknot)| {
                let r = if p == 0 { ExtRational::int(q) } else { ExtRational::ratio(p, q) };
                if unknot { Component::unknot(r) } else { Component::new(r) }
            })
            .collect();
        let m = (0..n).map(|i| (0..n).map(|j| BigInt::from(lk[i.min(j) * n + i.max(j)])).collect()).collect();
        let mut x = SurgeryPresentation::new(components, m).unwrap();
        let start = h1(&x);
        for _ in 0..8 {
            let (kind, i, j, k) = sample(&mut runner, &op);
            let (i, j) = (i % x.len(), j % x.len());
            let (name, next) = match kind {
                0 => ("expand", Some(expand_rational(&x))),
                1 => ("twist", rolfsen_twist(&x, i, k).ok()),
                2 => ("dunk", slam_dunk(&x, i, j).ok()),
                3 => ("blowdown", blow_down(&x, i).ok()),
                _ => {
                    let c = if k == 0 { ExtRational::int(1) } else { ExtRational::int(k.signum()) };
                    ("dunk", slam_dunk_inverse(&x, i, &c).ok().map(|(p, _)| p))
                }
            };
            let Some(next) = next else { continue };
            if next.is_empty() && !x.is_empty() && x.len() > 1 {
                continue;
            }
            *applied.entry(name).or_default() += 1;
            if h1(&next) != start {
                return Err(format!("{name} changed h1 from {start} to {}", h1(&next)));
            }
            x = next;
            if x.is_empty() {
                break;
            }
        }
    }
    Ok(format!("1000 sequences, moves applied {applied:?}"))
}

/// Written to stderr directly so the report survives output capture.
fn report(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut unexpected = Vec::new();
    for (k, run) in criteria {
        let outcome = run();
        match &outcome {
            Ok(detail) => report(format_args!("criterion {k:>2}: PASS: {detail}")),
            Err(detail) => report(format_args!("criterion {k:>2}: FAIL: {detail}")),
        }
        if outcome.is_ok() == KNOWN_UNATTAINABLE.contains(&k) {
            unexpected.push(k);
        }
    }
    assert!(unexpected.is_empty(), "criteria with unexpected outcomes: {unexpected:?}");
}

#[test]
fn theta_collisions_are_separated_by_linking_form() {
    let resolved = criterion_5_full_argument().unwrap();
    assert!(resolved > 0);
}
