//! Rational surgery presentations and the surgery calculus on them.

mod calculus;
mod homology;
mod plan;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numerics::ExtRational;

pub use calculus::{blow_down, expand_rational, rolfsen_twist, slam_dunk, slam_dunk_inverse, CalculusError};
pub use homology::{cokernel, h1, linking_form, AbelianGroup, LinkingFormError};
#[cfg(test)]
pub(crate) use homology::linking_form_matrix;
pub use plan::{stein_plan, ChainElement, ComponentPlan, PlanRejection, SteinPlan};

/// One framed component of a surgery link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub coefficient: ExtRational,
    /// Asserted, never computed.
    pub is_unknot: bool,
    pub in_l0: bool,
    pub rot: Option<i64>,
    pub tb: Option<i64>,
}

impl Component {
    pub fn new(coefficient: ExtRational) -> Self {
        Component { coefficient, is_unknot: false, in_l0: false, rot: None, tb: None }
    }

    pub fn unknot(coefficient: ExtRational) -> Self {
        Component { is_unknot: true, ..Self::new(coefficient) }
    }

    /// A 0-framed unknot standing in for a surgered 1-handle.
    pub fn l0() -> Self {
        Component { in_l0: true, ..Self::unknot(ExtRational::zero()) }
    }
}

/// Coefficients, a symmetric linking matrix and per-component flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryPresentation {
    components: Vec<Component>,
    lk: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("linking data is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("linking matrix has the wrong size")]
    Shape,
    #[error("component {0} is in L0 but is not a 0-framed unknot")]
    BadL0(usize),
}

impl SurgeryPresentation {
    pub fn empty() -> Self {
        SurgeryPresentation { components: Vec::new(), lk: Vec::new() }
    }

    /// Validates symmetry and the L0 flags. Diagonal entries are ignored.
    pub fn new(components: Vec<Component>, lk: Vec<Vec<BigInt>>) -> Result<Self, PresentationError> {
        let n = components.len();
        if lk.len() != n || lk.iter().any(|r| r.len() != n) {
            return Err(PresentationError::Shape);
        }
        for i in 0..n {
            for j in 0..i {
                if lk[i][j] != lk[j][i] {
                    return Err(PresentationError::Asymmetric(j, i));
                }
            }
        }
        for (i, c) in components.iter().enumerate() {
            if c.in_l0 && !(c.is_unknot && c.coefficient.is_zero()) {
                return Err(PresentationError::BadL0(i));
            }
        }
        let mut lk = lk;
        for (i, row) in lk.iter_mut().enumerate() {
            row[i] = BigInt::zero();
        }
        Ok(SurgeryPresentation { components, lk })
    }

    /// Components without any linking.
    pub fn split(components: Vec<Component>) -> Self {
        let n = components.len();
        SurgeryPresentation { components, lk: alloc::vec![alloc::vec![BigInt::zero(); n]; n] }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Component {
        &self.components[i]
    }

    pub fn component_mut(&mut self, i: usize) -> &mut Component {
        &mut self.components[i]
    }

    pub fn lk(&self, i: usize, j: usize) -> &BigInt {
        &self.lk[i][j]
    }

    pub fn set_lk(&mut self, i: usize, j: usize, v: BigInt) {
        assert_ne!(i, j, "self-linking is the coefficient");
        self.lk[i][j] = v.clone();
        self.lk[j][i] = v;
    }

    /// Number of surgered 1-handles.
    pub fn n_handles_surgered(&self) -> usize {
        self.components.iter().filter(|c| c.in_l0).count()
    }

    pub fn push(&mut self, c: Component) -> usize {
        for row in self.lk.iter_mut() {
            row.push(BigInt::zero());
        }
        self.components.push(c);
        self.lk.push(alloc::vec![BigInt::zero(); self.components.len()]);
        self.components.len() - 1
    }

    pub fn remove(&mut self, i: usize) -> Component {
        self.lk.remove(i);
        for row in self.lk.iter_mut() {
            row.remove(i);
        }
        self.components.remove(i)
    }

    /// Integer linking matrix with coefficients on the diagonal, if all are integers.
    pub fn integer_matrix(&self) -> Option<crate::numerics::IntMatrix> {
        let n = self.len();
        let mut m = crate::numerics::IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = if i == j { self.components[i].coefficient.to_integer()? } else { self.lk[i][j].clone() };
            }
        }
        Some(m)
    }
}
