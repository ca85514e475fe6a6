use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Component, SurgeryPresentation};
use crate::numerics::{neg_continued_fraction, BigRational, ExtRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalculusError {
    #[error("component {0} does not exist")]
    NoComponent(usize),
    #[error("component {0} is not asserted to be an unknot")]
    NotUnknot(usize),
    #[error("component {0} must have an integer coefficient")]
    NotInteger(usize),
    #[error("component {0} must have coefficient +1 or -1")]
    NotUnit(usize),
    #[error("components {0} and {1} must link once")]
    NotMeridian(usize, usize),
    #[error("component {0} links a component other than {1}")]
    ExtraLinking(usize, usize),
    #[error("a component cannot be dunked into itself")]
    SameComponent,
    #[error("inverse slam-dunk would give component {0} a non-integer coefficient")]
    InverseNotInteger(usize),
}

fn check(p: &SurgeryPresentation, i: usize) -> Result<(), CalculusError> {
    if i < p.len() {
        Ok(())
    } else {
        Err(CalculusError::NoComponent(i))
    }
}

fn add_int(r: &ExtRational, k: &BigInt) -> ExtRational {
    r.add_q(&BigRational::from_integer(k.clone()))
}

/// Forgets geometric knowledge about `j` after the diagram was twisted.
fn forget(c: &mut Component) {
    c.is_unknot = false;
    c.in_l0 = false;
    c.tb = None;
    c.rot = None;
}

/// Twists `m` times along the disk bounded by the unknot `i`.
pub fn rolfsen_twist(p: &SurgeryPresentation, i: usize, m: i64) -> Result<SurgeryPresentation, CalculusError> {
    check(p, i)?;
    if !p.component(i).is_unknot {
        return Err(CalculusError::NotUnknot(i));
    }
    if m == 0 {
        return Ok(p.clone());
    }
    let m = BigInt::from(m);
    let mut out = p.clone();
    let n = p.len();
    let ri = &p.component(i).coefficient;
    let ci = out.component_mut(i);
    ci.coefficient = add_int(&ri.recip(), &m).recip();
    ci.tb = None;
    ci.rot = None;
    ci.in_l0 = false;
    for j in (0..n).filter(|&j| j != i) {
        let lij = p.lk(i, j);
        let c = out.component_mut(j);
        c.coefficient = add_int(&c.coefficient, &(&m * lij * lij));
        forget(c);
        for k in (j + 1..n).filter(|&k| k != i) {
            let v = p.lk(j, k) + &m * lij * p.lk(i, k);
            out.set_lk(j, k, v);
        }
    }
    Ok(out)
}

/// Slam-dunks the meridian `j` into `i`: `r_i <- r_i - 1/r_j`.
pub fn slam_dunk(p: &SurgeryPresentation, i: usize, j: usize) -> Result<SurgeryPresentation, CalculusError> {
    check(p, i)?;
    check(p, j)?;
    if i == j {
        return Err(CalculusError::SameComponent);
    }
    if !p.component(i).coefficient.is_integer() {
        return Err(CalculusError::NotInteger(i));
    }
    if !p.component(j).is_unknot {
        return Err(CalculusError::NotUnknot(j));
    }
    if !p.lk(i, j).abs().is_one() {
        return Err(CalculusError::NotMeridian(i, j));
    }
    if (0..p.len()).any(|k| k != i && k != j && !p.lk(j, k).is_zero()) {
        return Err(CalculusError::ExtraLinking(j, i));
    }
    let mut out = p.clone();
    let ci = out.component_mut(i);
    ci.coefficient = match p.component(j).coefficient.recip() {
        ExtRational::Infinity => ExtRational::Infinity,
        ExtRational::Finite(q) => ci.coefficient.add_q(&-q),
    };
    ci.tb = None;
    ci.rot = None;
    ci.in_l0 = false;
    out.remove(j);
    Ok(out)
}

/// Adds a meridian of `i` with coefficient `c`, raising `r_i` by `1/c`.
/// Returns the new presentation and the index of the meridian.
pub fn slam_dunk_inverse(
    p: &SurgeryPresentation,
    i: usize,
    c: &ExtRational,
) -> Result<(SurgeryPresentation, usize), CalculusError> {
    check(p, i)?;
    let ri = &p.component(i).coefficient;
    let new = match (ri, c.recip()) {
        (ExtRational::Finite(_), ExtRational::Finite(q)) => ri.add_q(&q),
        _ => return Err(CalculusError::InverseNotInteger(i)),
    };
    if !new.is_integer() {
        return Err(CalculusError::InverseNotInteger(i));
    }
    let mut out = p.clone();
    let ci = out.component_mut(i);
    ci.coefficient = new;
    ci.tb = None;
    ci.rot = None;
    ci.in_l0 = false;
    let j = out.push(Component::unknot(c.clone()));
    out.set_lk(i, j, BigInt::one());
    Ok((out, j))
}

/// Blows down the `±1`-framed unknot `i`.
pub fn blow_down(p: &SurgeryPresentation, i: usize) -> Result<SurgeryPresentation, CalculusError> {
    check(p, i)?;
    let ci = p.component(i);
    if !ci.is_unknot {
        return Err(CalculusError::NotUnknot(i));
    }
    let eps = match ci.coefficient.to_integer() {
        Some(e) if e.abs().is_one() => e,
        _ => return Err(CalculusError::NotUnit(i)),
    };
    let n = p.len();
    let mut out = p.clone();
    for j in (0..n).filter(|&j| j != i) {
        let lij = p.lk(i, j);
        let c = out.component_mut(j);
        c.coefficient = add_int(&c.coefficient, &-(&eps * lij * lij));
        forget(c);
        for k in (j + 1..n).filter(|&k| k != i) {
            let v = p.lk(j, k) - &eps * lij * p.lk(i, k);
            out.set_lk(j, k, v);
        }
    }
    out.remove(i);
    Ok(out)
}

/// Result of expanding rational coefficients into chains.
pub(crate) struct Expansion {
    pub presentation: SurgeryPresentation,
    /// New index of each original component; `None` for deleted ones.
    pub position: Vec<Option<usize>>,
    /// Continued-fraction terms of each original component, if kept.
    pub terms: Vec<Vec<BigInt>>,
    /// Indices of the chain unknots of each original component.
    pub chains: Vec<Vec<usize>>,
}

pub(crate) fn expand(p: &SurgeryPresentation) -> Expansion {
    let mut out = p.clone();
    for i in (0..p.len()).rev() {
        if p.component(i).coefficient.is_infinite() {
            out.remove(i);
        }
    }
    let mut position = Vec::with_capacity(p.len());
    let mut next = 0;
    for c in p.components() {
        if c.coefficient.is_infinite() {
            position.push(None);
        } else {
            position.push(Some(next));
            next += 1;
        }
    }
    let mut terms = alloc::vec![Vec::new(); p.len()];
    let mut chains = alloc::vec![Vec::new(); p.len()];
    for (i, pos) in position.iter().enumerate() {
        let Some(k) = *pos else { continue };
        let cf = neg_continued_fraction(&p.component(i).coefficient).expect("finite");
        let t = cf.terms().to_vec();
        out.component_mut(k).coefficient = ExtRational::from_bigint(t[0].clone());
        let mut prev = k;
        for a in &t[1..] {
            let j = out.push(Component::unknot(ExtRational::from_bigint(a.clone())));
            out.set_lk(prev, j, BigInt::one());
            chains[i].push(j);
            prev = j;
        }
        terms[i] = t;
    }
    Expansion { presentation: out, position, terms, chains }
}

/// Integer presentation of the same manifold: infinite components are
/// deleted and every other rational coefficient becomes a linear chain.
pub fn expand_rational(p: &SurgeryPresentation) -> SurgeryPresentation {
    expand(p).presentation
}
