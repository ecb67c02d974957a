//! Theorem engines over a fixed curvature tensor: semi-symmetry, Ricci
//! commutation, the Ricci and primitive decompositions, the Lorentzian
//! structure report and the Jacobi check on `h ⊕ V`.
//!
//! Every certificate is an exact yes/no. A failed certificate is reported
//! in the returned value with a witness, never by panicking.

mod jacobi;
mod lorentzian;
mod primitive;
mod ricci;

pub(crate) use jacobi::jacobi_check_in;
pub use jacobi::{jacobi_check, JacobiReport, SymmetricPair, TripleCounts, TripleType};
pub use lorentzian::{lorentzian_report, lorentzian_report_from, FactorRealness, LorentzianCase, LorentzianReport};
pub use primitive::primitive_decomposition;
pub(crate) use primitive::primitive_decomposition_in;
pub(crate) use ricci::ricci_decomposition_unchecked;
pub use ricci::{ricci_decomposition, HolonomySplit};

use crate::bivector::{derivation_matrix, skew_of_bivector, Bivector};
use crate::curvature::CurvatureTensor;
use crate::error::{Error, Result};
use crate::exactnum::{Mat, Poly, Scalar};
use crate::holonomy::Subspace;
use serde::Serialize;
use std::fmt;

/// Role of a block in a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockTag {
    /// `ker Ric²`
    E0,
    /// `ker f(Ric)` for the `i`-th non-`X` factor, counted from 1.
    E(usize),
    /// Common kernel of the holonomy algebra.
    V0,
    /// `i`-th primitive component, counted from 1.
    V(usize),
    /// Isotropic dual of `V₀ ∩ ΣVᵢ`.
    V0Dual,
}

impl fmt::Display for BlockTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockTag::E0 => write!(f, "E0"),
            BlockTag::E(i) => write!(f, "E{i}"),
            BlockTag::V0 => write!(f, "V0"),
            BlockTag::V(i) => write!(f, "V{i}"),
            BlockTag::V0Dual => write!(f, "V0'"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Block<T> {
    pub tag: BlockTag,
    pub subspace: Subspace<T>,
    /// The minimal-polynomial factor whose kernel this is (E-blocks).
    pub factor: Option<Poly<T>>,
    /// `λ` when `Ric` restricts to `λ·Id` on the block.
    pub einstein: Option<T>,
}

/// Certificate flags of a decomposition. `None` means not applicable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub orthogonal_certified: bool,
    pub invariant_certified: bool,
    pub cross_vanishing_certified: bool,
    /// Every nonzero-eigenvalue block has dimension at least 2.
    pub dimension_certified: Option<bool>,
    /// The blocks sum to `V`.
    pub spans: bool,
    /// The block dimensions add up to `n` (the sum is direct).
    pub direct: bool,
    /// Some block is the kernel of an irreducible-looking factor of degree ≥ 2.
    pub coarse: bool,
    /// Some component's indecomposability is heuristic only.
    pub heuristic: bool,
    /// `⟨pᵢ, qⱼ⟩ = δᵢⱼ` and `V₀′` totally isotropic.
    pub dual_pairing_certified: Option<bool>,
}

/// Ordered block list with certificates.
#[derive(Clone, Debug)]
pub struct Decomposition<T> {
    pub blocks: Vec<Block<T>>,
    pub flags: Flags,
    /// Human-readable witnesses of failed certificates.
    pub failures: Vec<String>,
    /// Item 6 data (Ricci decomposition only).
    pub holonomy: Option<HolonomySplit>,
}

impl<T: Scalar> Decomposition<T> {
    pub fn block(&self, tag: BlockTag) -> Option<&Block<T>> {
        self.blocks.iter().find(|b| b.tag == tag)
    }

    /// All mandatory certificates hold.
    pub fn certified(&self) -> bool {
        self.failures.is_empty()
    }
}

/// First violation of `[K(u,v), K(a,b)] = K(K(u,v)a, b) + K(a, K(u,v)b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SemisymmetryWitness<T> {
    pub u: usize,
    pub v: usize,
    pub a: usize,
    pub b: usize,
    /// Left side minus right side, a skew endomorphism.
    pub residual: Mat<T>,
}

impl<T: Scalar> fmt::Display for SemisymmetryWitness<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(u,v,a,b) = (e{},e{},e{},e{}), residual {}",
            self.u,
            self.v,
            self.a,
            self.b,
            render_matrix(&self.residual)
        )
    }
}

pub(crate) fn render_matrix<T: Scalar>(m: &Mat<T>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

pub(crate) fn render_vector<T: Scalar>(v: &[T]) -> String {
    let cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", cells.join(","))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SemisymmetryVerdict<T> {
    pub holds: bool,
    pub witness: Option<SemisymmetryWitness<T>>,
}

/// `K.K = 0`, checked as `[D_{K(eᵤ,eᵥ)}, T] = 0` on `Λ²V` for every `u < v`.
///
/// Column `(ab)` of that commutator is exactly the bivector of
/// `[K(u,v),K(a,b)] − K(K(u,v)a,b) − K(a,K(u,v)b)`, so the first nonzero
/// entry in lexicographic `(u,v,a,b)` order is the reported witness.
pub fn is_semisymmetric<T: Scalar>(k: &CurvatureTensor<T>) -> SemisymmetryVerdict<T> {
    let s = k.space();
    let basis = s.bivectors();
    let t = k.matrix();
    for (kk, endo) in k.basis_endomorphisms().iter().enumerate() {
        if endo.is_zero() {
            continue;
        }
        let d = derivation_matrix(basis, endo);
        let r = &(&d * t) - &(t * &d);
        if let Some(col) = (0..r.cols()).find(|&j| (0..r.rows()).any(|i| !r[(i, j)].is_zero())) {
            let (u, v) = basis.pairs()[kk];
            let (a, b) = basis.pairs()[col];
            let residual = skew_of_bivector(s, &Bivector { coords: r.col(col) });
            return SemisymmetryVerdict {
                holds: false,
                witness: Some(SemisymmetryWitness { u, v, a, b, residual }),
            };
        }
    }
    SemisymmetryVerdict {
        holds: true,
        witness: None,
    }
}

pub(crate) fn require_semisymmetric<T: Scalar>(k: &CurvatureTensor<T>) -> Result<()> {
    match is_semisymmetric(k).witness {
        None => Ok(()),
        Some(w) => Err(Error::NotSemisymmetric { witness: w.to_string() }),
    }
}

/// `K(u,v)∘Ric = Ric∘K(u,v)` for all basis pairs.
pub fn ricci_commutes<T: Scalar>(k: &CurvatureTensor<T>) -> bool {
    let ric = k.ricci().operator;
    k.basis_endomorphisms().iter().all(|a| a.commutator(&ric).is_zero())
}

/// `K(u, v) = 0` for all `u ∈ a`, `v ∈ b`; returns the first failing pair.
pub(crate) fn cross_vanishing<T: Scalar>(
    k: &CurvatureTensor<T>,
    a: &Subspace<T>,
    b: &Subspace<T>,
) -> Option<(Vec<T>, Vec<T>)> {
    for u in a.basis() {
        for v in b.basis() {
            if !k.apply_K(u, v).is_zero() {
                return Some((u.clone(), v.clone()));
            }
        }
    }
    None
}

/// `⟨u, v⟩ = 0` for all `u ∈ a`, `v ∈ b`.
pub(crate) fn orthogonal<T: Scalar>(a: &Subspace<T>, b: &Subspace<T>) -> bool {
    let s = a.space();
    a.basis()
        .iter()
        .all(|u| b.basis().iter().all(|v| s.inner(u, v).is_zero()))
}

/// `λ` with `Ric·x = λx` on all of `w`, if any.
pub(crate) fn einstein_constant<T: Scalar>(ric: &Mat<T>, w: &Subspace<T>) -> Option<T> {
    let first = w.basis().first()?;
    let image = ric.mul_vec(first);
    let idx = first.iter().position(|c| !c.is_zero())?;
    let lambda = image[idx].clone() / &first[idx];
    w.basis()
        .iter()
        .all(|x| ric.mul_vec(x).iter().zip(x).all(|(y, xi)| *y == lambda.clone() * xi))
        .then_some(lambda)
}
