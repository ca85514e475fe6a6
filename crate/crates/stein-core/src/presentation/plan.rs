use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::calculus::expand;
use super::SurgeryPresentation;
use crate::numerics::{BigRational, ContinuedFraction, ExtRational};

/// One Legendrian unknot or knot of a realized chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainElement {
    /// Index in the expanded presentation.
    pub index: usize,
    pub coefficient: i64,
    /// Upward zig-zags added to the starting representative.
    pub zigzags: i64,
    pub tb: i64,
    /// `None` when the original rotation number was not supplied.
    pub rot: Option<i64>,
}

impl ChainElement {
    pub fn framing(&self) -> i64 {
        self.coefficient
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPlan {
    pub original: usize,
    /// Empty for components with coefficient infinity, which are deleted.
    pub chain: Vec<ChainElement>,
}

impl ComponentPlan {
    pub fn deleted(&self) -> bool {
        self.chain.is_empty()
    }
}

/// An integer Stein presentation realizing a rational one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinPlan {
    pub presentation: SurgeryPresentation,
    pub components: Vec<ComponentPlan>,
}

impl SteinPlan {
    /// Every element has framing `tb - 1` and every chain re-evaluates to
    /// the coefficient it replaces.
    pub fn verify(&self, original: &SurgeryPresentation) -> bool {
        self.components.iter().all(|c| {
            let framings_ok = c.chain.iter().all(|e| {
                e.framing() == e.tb - 1
                    && self.presentation.component(e.index).tb == Some(e.tb)
                    && self.presentation.component(e.index).coefficient == ExtRational::int(e.coefficient)
            });
            let value = if c.deleted() {
                ExtRational::Infinity
            } else {
                let terms = c.chain.iter().map(|e| BigInt::from(e.coefficient)).collect();
                match ContinuedFraction::from_terms(terms) {
                    Some(cf) => ExtRational::Finite(cf.evaluate()),
                    None => return false,
                }
            };
            framings_ok && value == original.component(c.original).coefficient
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanRejection {
    /// Components with `r >= tb`.
    pub offending: Vec<usize>,
    /// Finite components without a Thurston–Bennequin number.
    pub missing_tb: Vec<usize>,
    /// Components whose chain does not fit machine integers.
    pub too_large: Vec<usize>,
}

impl fmt::Display for PlanRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|i| alloc::format!("{}", i + 1)).collect::<Vec<_>>().join(",");
        let mut parts = Vec::new();
        if !self.offending.is_empty() {
            parts.push(alloc::format!("coefficient not below tb on {}", list(&self.offending)));
        }
        if !self.missing_tb.is_empty() {
            parts.push(alloc::format!("no tb for {}", list(&self.missing_tb)));
        }
        if !self.too_large.is_empty() {
            parts.push(alloc::format!("coefficients too large on {}", list(&self.too_large)));
        }
        write!(f, "{}", parts.join("; "))
    }
}

impl core::error::Error for PlanRejection {}

/// Realizes `p` as the boundary of a Stein surface when every finite
/// coefficient lies strictly below the Thurston–Bennequin number of its
/// component. `tb_of` is keyed by 0-based component index.
///
/// Each knot keeps its first continued-fraction term `a0 <= tb - 1` and
/// receives `tb - 1 - a0` upward zig-zags. Each chain unknot with term `a`
/// is the `tb = -1` unknot with `-a - 2` upward zig-zags.
pub fn stein_plan(p: &SurgeryPresentation, tb_of: &BTreeMap<usize, i64>) -> Result<SteinPlan, PlanRejection> {
    let mut rejection = PlanRejection { offending: Vec::new(), missing_tb: Vec::new(), too_large: Vec::new() };
    for (i, c) in p.components().iter().enumerate() {
        let ExtRational::Finite(r) = &c.coefficient else { continue };
        match tb_of.get(&i) {
            None => rejection.missing_tb.push(i),
            Some(&tb) if *r >= BigRational::from_integer(tb.into()) => rejection.offending.push(i),
            Some(_) => {}
        }
    }
    if !rejection.offending.is_empty() || !rejection.missing_tb.is_empty() {
        return Err(rejection);
    }
    let ex = expand(p);
    let mut out = ex.presentation;
    let mut components = Vec::with_capacity(p.len());
    for i in 0..p.len() {
        let Some(k) = ex.position[i] else {
            components.push(ComponentPlan { original: i, chain: Vec::new() });
            continue;
        };
        let Some(terms) = ex.terms[i].iter().map(ToPrimitive::to_i64).collect::<Option<Vec<i64>>>() else {
            rejection.too_large.push(i);
            continue;
        };
        let tb = tb_of[&i];
        let a0 = terms[0];
        let zig = tb - 1 - a0;
        let rot = p.component(i).rot.map(|r| r - zig);
        let mut chain = alloc::vec![ChainElement { index: k, coefficient: a0, zigzags: zig, tb: a0 + 1, rot }];
        for (&j, &a) in ex.chains[i].iter().zip(&terms[1..]) {
            chain.push(ChainElement { index: j, coefficient: a, zigzags: -a - 2, tb: a + 1, rot: Some(a + 2) });
        }
        for e in &chain {
            let c = out.component_mut(e.index);
            c.tb = Some(e.tb);
            c.rot = e.rot;
        }
        components.push(ComponentPlan { original: i, chain });
    }
    if !rejection.too_large.is_empty() {
        return Err(rejection);
    }
    Ok(SteinPlan { presentation: out, components })
}
