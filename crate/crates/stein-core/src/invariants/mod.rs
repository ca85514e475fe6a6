//! Invariants of the contact structure induced on the boundary of a Stein
//! handlebody: the Chern cocycle, spin structures as characteristic
//! sublinks, the 2-dimensional invariant Γ and the 3-dimensional
//! invariants θ and Θ.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::numerics::{
    rat_kernel, rat_solve, rat_vec, signature_rational, smith_normal_form, solve_gf2_affine, to_rat, BigRational,
    IntMatrix, IntSymMatrix, RatMatrix, Snf,
};
use crate::presentation::SurgeryPresentation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("matrix sizes do not agree")]
    Shape,
    #[error("component {0} has a non-integral framing")]
    NotInteger(usize),
    #[error("component {0} has no rotation number")]
    MissingRotation(usize),
    #[error("surgered handles {0} and {1} are linked")]
    LinkedHandles(usize, usize),
    #[error("sublink is not characteristic")]
    NotCharacteristic,
    #[error("rotation and linking parity disagree at slot {0}; the presentation is not Stein")]
    ParityViolation(usize),
    #[error("θ undefined: c₁ has infinite order")]
    ThetaUndefined,
}

/// A Stein handlebody with `m` 2-handles and `n1` 1-handles, read through
/// its surgered link: the 2-handles followed by one 0-framed unknot per
/// 1-handle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinPresentation {
    q: IntSymMatrix,
    /// `n1 x m`: algebraic runs of each attaching circle over each handle.
    r: IntMatrix,
    rot: Vec<BigInt>,
    /// Number of 0-handles; more than one only for disjoint unions.
    zero_handles: usize,
}

impl SteinPresentation {
    pub fn new(q: IntSymMatrix, r: IntMatrix, rot: Vec<BigInt>) -> Result<Self, InvariantError> {
        let m = q.dim();
        if rot.len() != m || r.cols() != m && r.rows() != 0 {
            return Err(InvariantError::Shape);
        }
        let r = if r.rows() == 0 { IntMatrix::zeros(0, m) } else { r };
        Ok(SteinPresentation { q, r, rot, zero_handles: 1 })
    }

    /// Reads the 2-handles off the components outside L0 and the 1-handles
    /// off L0. Slots keep the relative order of the presentation within
    /// each group; see [`SteinPresentation::slots`].
    pub fn from_surgery(p: &SurgeryPresentation) -> Result<Self, InvariantError> {
        let (ks, hs) = Self::split_indices(p);
        let mut q = IntMatrix::zeros(ks.len(), ks.len());
        let mut rot = Vec::with_capacity(ks.len());
        for (a, &i) in ks.iter().enumerate() {
            let c = p.component(i);
            q[(a, a)] = c.coefficient.to_integer().ok_or(InvariantError::NotInteger(i))?;
            rot.push(BigInt::from(c.rot.ok_or(InvariantError::MissingRotation(i))?));
            for (b, &j) in ks.iter().enumerate() {
                if a != b {
                    q[(a, b)] = p.lk(i, j).clone();
                }
            }
        }
        for (x, &h) in hs.iter().enumerate() {
            if let Some(&g) = hs[x + 1..].iter().find(|&&g| !p.lk(h, g).is_zero()) {
                return Err(InvariantError::LinkedHandles(h, g));
            }
        }
        let mut r = IntMatrix::zeros(hs.len(), ks.len());
        for (x, &h) in hs.iter().enumerate() {
            for (a, &i) in ks.iter().enumerate() {
                r[(x, a)] = p.lk(h, i).clone();
            }
        }
        let q = IntSymMatrix::new(q).expect("linking is symmetric");
        Self::new(q, r, rot)
    }

    fn split_indices(p: &SurgeryPresentation) -> (Vec<usize>, Vec<usize>) {
        (0..p.len()).partition(|&i| !p.component(i).in_l0)
    }

    /// Presentation index of each slot of `Q*`.
    pub fn slots(p: &SurgeryPresentation) -> Vec<usize> {
        let (mut ks, hs) = Self::split_indices(p);
        ks.extend(hs);
        ks
    }

    /// Block sum with separate 0-handles.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let (m1, m2) = (self.m(), other.m());
        let (h1, h2) = (self.n1(), other.n1());
        let mut q = IntMatrix::zeros(m1 + m2, m1 + m2);
        let mut r = IntMatrix::zeros(h1 + h2, m1 + m2);
        for i in 0..m1 {
            for j in 0..m1 {
                q[(i, j)] = self.q[(i, j)].clone();
            }
        }
        for i in 0..m2 {
            for j in 0..m2 {
                q[(m1 + i, m1 + j)] = other.q[(i, j)].clone();
            }
        }
        for x in 0..h1 {
            for i in 0..m1 {
                r[(x, i)] = self.r[(x, i)].clone();
            }
        }
        for x in 0..h2 {
            for i in 0..m2 {
                r[(h1 + x, m1 + i)] = other.r[(x, i)].clone();
            }
        }
        let mut rot = self.rot.clone();
        rot.extend(other.rot.iter().cloned());
        SteinPresentation {
            q: IntSymMatrix::new(q).expect("block sum is symmetric"),
            r,
            rot,
            zero_handles: self.zero_handles + other.zero_handles,
        }
    }

    pub fn m(&self) -> usize {
        self.q.dim()
    }

    pub fn n1(&self) -> usize {
        self.r.rows()
    }

    pub fn q(&self) -> &IntSymMatrix {
        &self.q
    }

    pub fn r(&self) -> &IntMatrix {
        &self.r
    }

    pub fn rot(&self) -> &[BigInt] {
        &self.rot
    }

    /// `[[Q, R^T], [R, 0]]`.
    pub fn q_star(&self) -> IntMatrix {
        let (m, n1) = (self.m(), self.n1());
        let mut s = IntMatrix::zeros(m + n1, m + n1);
        for i in 0..m {
            for j in 0..m {
                s[(i, j)] = self.q[(i, j)].clone();
            }
        }
        for x in 0..n1 {
            for i in 0..m {
                s[(m + x, i)] = self.r[(x, i)].clone();
                s[(i, m + x)] = self.r[(x, i)].clone();
            }
        }
        s
    }

    /// Euler characteristic of the handlebody.
    pub fn euler_characteristic(&self) -> i64 {
        self.zero_handles as i64 - self.n1() as i64 + self.m() as i64
    }

    /// Signature of `Q` on the rational kernel of `R`.
    pub fn signature(&self) -> i64 {
        let q = to_rat(self.q.matrix());
        let basis = rat_kernel(&to_rat(&self.r), self.m());
        let restricted: RatMatrix = basis
            .iter()
            .map(|u| basis.iter().map(|v| bilinear(&q, u, v)).collect())
            .collect();
        signature_rational(&restricted)
    }
}

fn bilinear(q: &RatMatrix, u: &[BigRational], v: &[BigRational]) -> BigRational {
    let mut s = BigRational::zero();
    for (i, row) in q.iter().enumerate() {
        if u[i].is_zero() {
            continue;
        }
        for (j, x) in row.iter().enumerate() {
            s += &u[i] * x * &v[j];
        }
    }
    s
}

/// A spin structure, as the indicator of a characteristic sublink over the
/// slots of `Q*`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpinStructure {
    pub sublink: Vec<bool>,
}

impl SpinStructure {
    pub fn is_characteristic(&self, q_star: &IntMatrix) -> bool {
        let n = q_star.rows();
        self.sublink.len() == n
            && (0..n).all(|i| {
                let s: BigInt = (0..n).filter(|&j| self.sublink[j]).map(|j| &q_star[(i, j)]).sum();
                (s - &q_star[(i, i)]).is_even()
            })
    }
}

impl fmt::Display for SpinStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<_> = (0..self.sublink.len()).filter(|&i| self.sublink[i]).map(|i| i + 1).collect();
        write!(f, "{{")?;
        for (k, i) in members.iter().enumerate() {
            write!(f, "{}{i}", if k == 0 { "" } else { "," })?;
        }
        write!(f, "}}")
    }
}

/// An element of `coker(Q*)` with coordinates in the Smith basis.
///
/// Coordinates along a `Z/d` factor are reduced into `[0, d)`; trivial
/// factors are dropped and free coordinates are kept as integers.
#[derive(Clone, Debug)]
pub struct CokernelClass {
    pub representative: Vec<BigInt>,
    pub coordinates: Vec<BigInt>,
    /// `0` marks a free coordinate.
    pub moduli: Vec<BigInt>,
}

impl PartialEq for CokernelClass {
    fn eq(&self, other: &Self) -> bool {
        self.coordinates == other.coordinates && self.moduli == other.moduli
    }
}

impl Eq for CokernelClass {}

impl fmt::Display for CokernelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.representative.iter().enumerate() {
            write!(f, "{}{x}", if k == 0 { "" } else { "," })?;
        }
        write!(f, ") mod im(Q*)")
    }
}

/// `coker` of a square integer matrix, for reducing vectors to canonical
/// coordinates.
#[derive(Clone, Debug)]
pub struct Cokernel {
    snf: Snf,
}

impl Cokernel {
    pub fn new(m: &IntMatrix) -> Self {
        assert_eq!(m.rows(), m.cols());
        Cokernel { snf: smith_normal_form(m) }
    }

    fn order(&self, i: usize) -> BigInt {
        self.snf.diag.get(i).cloned().unwrap_or_default()
    }

    pub fn class(&self, v: &[BigInt]) -> CokernelClass {
        let u = self.snf.left.mul_vec(v);
        let mut coordinates = Vec::new();
        let mut moduli = Vec::new();
        for (i, x) in u.into_iter().enumerate() {
            let d = self.order(i);
            if d == BigInt::from(1) {
                continue;
            }
            coordinates.push(if d.is_zero() { x } else { x.mod_floor(&d) });
            moduli.push(d);
        }
        CokernelClass { representative: v.to_vec(), coordinates, moduli }
    }

    /// Divisibility of the image of `v` in the free quotient; `0` for torsion.
    pub fn divisibility(&self, v: &[BigInt]) -> BigInt {
        let u = self.snf.left.mul_vec(v);
        let mut g = BigInt::zero();
        for (i, x) in u.iter().enumerate() {
            if self.order(i).is_zero() {
                g = g.gcd(x);
            }
        }
        g
    }
}

/// `(rot, 0 on L0)`.
pub fn chern_cocycle(x: &SteinPresentation) -> Vec<BigInt> {
    let mut c = x.rot.clone();
    c.resize(x.m() + x.n1(), BigInt::zero());
    c
}

/// All solutions of `Q* s = diag(Q*)` over GF(2), in binary-counter order.
pub fn characteristic_sublinks(x: &SteinPresentation) -> Vec<SpinStructure> {
    let s = x.q_star();
    let n = s.rows();
    let a: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| s[(i, j)].is_odd()).collect()).collect();
    let b: Vec<bool> = (0..n).map(|i| s[(i, i)].is_odd()).collect();
    if n == 0 {
        return alloc::vec![SpinStructure { sublink: Vec::new() }];
    }
    solve_gf2_affine(&a, &b)
        .expect("the diagonal of a symmetric form is characteristic")
        .solutions()
        .into_iter()
        .map(|sublink| SpinStructure { sublink })
        .collect()
}

/// The vector `ρ` with `ρ_i = (rot_i + lk(K_i, L0 + L')) / 2`.
pub fn gamma_vector(x: &SteinPresentation, s: &SpinStructure) -> Result<Vec<BigInt>, InvariantError> {
    let q = x.q_star();
    if !s.is_characteristic(&q) {
        return Err(InvariantError::NotCharacteristic);
    }
    let (m, n) = (x.m(), q.rows());
    let c = chern_cocycle(x);
    (0..n)
        .map(|i| {
            let mut t = c[i].clone();
            for j in 0..n {
                let weight = usize::from(j >= m) + usize::from(s.sublink[j]);
                if weight > 0 {
                    t += &q[(i, j)] * BigInt::from(weight);
                }
            }
            if t.is_odd() {
                Err(InvariantError::ParityViolation(i))
            } else {
                Ok(t / 2)
            }
        })
        .collect()
}

/// Γ of the induced contact structure for the spin structure `s`.
pub fn gamma(x: &SteinPresentation, s: &SpinStructure) -> Result<CokernelClass, InvariantError> {
    let rho = gamma_vector(x, s)?;
    Ok(Cokernel::new(&x.q_star()).class(&rho))
}

/// `θ = c² - 2χ - 3σ`, defined when the Chern class is torsion.
pub fn theta(x: &SteinPresentation) -> Result<BigRational, InvariantError> {
    let c = chern_cocycle(x);
    let q = to_rat(&x.q_star());
    let rc = rat_vec(&c);
    let y = rat_solve(&q, c.len(), &rc).ok_or(InvariantError::ThetaUndefined)?;
    let square: BigRational = y.iter().zip(&rc).map(|(a, b)| a * b).sum();
    Ok(square - BigRational::from_integer(BigInt::from(2 * x.euler_characteristic() + 3 * x.signature())))
}

/// Θ at the 0-framing on the meridians, an element of `Z/2d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaResidue {
    /// `-2χ - 3σ`, unreduced.
    pub value: BigInt,
    /// `2d`; zero means the value is an integer.
    pub modulus: BigInt,
}

impl ThetaResidue {
    /// Canonical representative: in `[0, 2d)` when `d > 0`.
    pub fn residue(&self) -> BigInt {
        if self.modulus.is_zero() {
            self.value.clone()
        } else {
            self.value.mod_floor(&self.modulus)
        }
    }

    pub fn congruent(&self, v: &BigInt) -> bool {
        let diff = &self.value - v;
        if self.modulus.is_zero() {
            diff.is_zero()
        } else {
            diff.is_multiple_of(&self.modulus)
        }
    }
}

impl fmt::Display for ThetaResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.is_zero() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} mod {}", self.value, self.modulus)
        }
    }
}

/// Divisibility `d` of `c1` modulo torsion and Θ at the canonical 0-framing.
pub fn theta_f0_and_d(x: &SteinPresentation) -> (BigInt, ThetaResidue) {
    let d = Cokernel::new(&x.q_star()).divisibility(&chern_cocycle(x));
    let value = BigInt::from(-2 * x.euler_characteristic() - 3 * x.signature());
    let modulus: BigInt = (&d * BigInt::from(2)).abs();
    (d, ThetaResidue { value, modulus })
}

/// Everything computed for one spin structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneFieldInvariants {
    pub chern_cocycle: Vec<BigInt>,
    pub d: BigInt,
    pub gamma: CokernelClass,
    pub theta: Option<BigRational>,
    pub theta_f0: ThetaResidue,
}

pub fn plane_field_invariants(x: &SteinPresentation, s: &SpinStructure) -> Result<PlaneFieldInvariants, InvariantError> {
    let gamma = gamma(x, s)?;
    let theta = match theta(x) {
        Ok(t) => Some(t),
        Err(InvariantError::ThetaUndefined) => None,
        Err(e) => return Err(e),
    };
    let (d, theta_f0) = theta_f0_and_d(x);
    Ok(PlaneFieldInvariants { chern_cocycle: chern_cocycle(x), d, gamma, theta, theta_f0 })
}
