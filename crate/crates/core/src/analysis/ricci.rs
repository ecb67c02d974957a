use super::{
    cross_vanishing, einstein_constant, orthogonal, render_vector, require_semisymmetric, Block, BlockTag,
    Decomposition, Flags,
};
use crate::curvature::CurvatureTensor;
use crate::error::{Error, Result};
use crate::exactnum::{Echelon, Poly, Scalar};
use crate::holonomy::{h_span, SkewAlgebra, Subspace};
use serde::Serialize;

/// Splitting of `h(K)` along the Ricci blocks: `hᵢ = span{K(u,v) : u,v ∈ Eᵢ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolonomySplit {
    pub dims: Vec<usize>,
    pub total_dim: usize,
    /// Every `hᵢ ⊆ h(K)`.
    pub contained: bool,
    /// `h(K) = Σ hᵢ`.
    pub sums_to_h: bool,
    /// `Σ dim hᵢ = dim h(K)`. Recorded, not required.
    pub direct: bool,
    /// Every `hᵢ` is bracket-closed.
    pub subalgebras: bool,
}

/// `V = E₀ ⊕ E₁ ⊕ … ⊕ E_r` with `E₀ = ker Ric²` and `Eᵢ = ker fᵢ(Ric)` for
/// the non-`X` squarefree factors `fᵢ` of the Ricci minimal polynomial.
///
/// Errors with `FactorMultiplicityViolation` when a non-`X` factor is
/// repeated or `X` appears to a power above 2.
pub fn ricci_decomposition<T: Scalar>(k: &CurvatureTensor<T>) -> Result<Decomposition<T>> {
    require_semisymmetric(k)?;
    ricci_decomposition_unchecked(k)
}

/// [`ricci_decomposition`] for a tensor known to be semi-symmetric.
pub(crate) fn ricci_decomposition_unchecked<T: Scalar>(k: &CurvatureTensor<T>) -> Result<Decomposition<T>> {
    let s = k.space();
    let rd = k.ricci();
    let ric = &rd.operator;
    let x = Poly::<T>::x();
    for (f, m) in &rd.factors {
        let limit = if *f == x { 2 } else { 1 };
        if *m > limit {
            return Err(Error::FactorMultiplicityViolation {
                factor: f.to_string(),
                multiplicity: *m,
            });
        }
    }

    let mut blocks = Vec::new();
    let e0 = Subspace::span(s, &(ric * ric).kernel());
    if e0.dim() > 0 {
        blocks.push(Block {
            tag: BlockTag::E0,
            einstein: einstein_constant(ric, &e0),
            subspace: e0,
            factor: None,
        });
    }
    let mut coarse = false;
    for (i, (f, _)) in rd.factors.iter().filter(|(f, _)| *f != x).enumerate() {
        coarse |= f.degree().unwrap_or(0) >= 2;
        let sub = Subspace::span(s, &f.eval_matrix(ric).kernel());
        blocks.push(Block {
            tag: BlockTag::E(i + 1),
            einstein: einstein_constant(ric, &sub),
            subspace: sub,
            factor: Some(f.clone()),
        });
    }

    let h = h_span(k);
    let mut failures = Vec::new();
    let mut orthogonal_certified = true;
    let mut cross_vanishing_certified = true;
    for (i, a) in blocks.iter().enumerate() {
        for b in &blocks[i + 1..] {
            if !orthogonal(&a.subspace, &b.subspace) {
                orthogonal_certified = false;
                failures.push(format!("{} and {} are not orthogonal", a.tag, b.tag));
            }
            if let Some((u, v)) = cross_vanishing(k, &a.subspace, &b.subspace) {
                cross_vanishing_certified = false;
                failures.push(format!(
                    "K(u,v) != 0 for u = {} in {}, v = {} in {}",
                    render_vector(&u),
                    a.tag,
                    render_vector(&v),
                    b.tag
                ));
            }
        }
    }
    let mut invariant_certified = true;
    for b in &blocks {
        if !b.subspace.is_invariant_under(h.basis()) {
            invariant_certified = false;
            failures.push(format!("{} is not h(K)-invariant", b.tag));
        }
    }
    let mut dimension_certified = true;
    for b in blocks.iter().filter(|b| b.tag != BlockTag::E0) {
        if b.subspace.dim() < 2 {
            dimension_certified = false;
            failures.push(format!("{} has dimension {}", b.tag, b.subspace.dim()));
        }
    }
    let total: usize = blocks.iter().map(|b| b.subspace.dim()).sum();
    let sum = blocks.iter().fold(Subspace::zero(s), |acc, b| acc.sum(&b.subspace));
    let spans = sum.dim() == s.dim();
    if !spans || total != s.dim() {
        failures.push(format!(
            "blocks span dimension {} with total {} in dimension {}",
            sum.dim(),
            total,
            s.dim()
        ));
    }

    let split = holonomy_split(k, &h, &blocks);
    if !(split.contained && split.sums_to_h && split.subalgebras) {
        failures.push(format!("holonomy does not split along the blocks: {split:?}"));
    }

    Ok(Decomposition {
        blocks,
        flags: Flags {
            orthogonal_certified,
            invariant_certified,
            cross_vanishing_certified,
            dimension_certified: Some(dimension_certified),
            spans,
            direct: spans && total == s.dim(),
            coarse,
            heuristic: false,
            dual_pairing_certified: None,
        },
        failures,
        holonomy: Some(split),
    })
}

fn holonomy_split<T: Scalar>(k: &CurvatureTensor<T>, h: &SkewAlgebra<T>, blocks: &[Block<T>]) -> HolonomySplit {
    let s = k.space();
    let n = s.dim();
    let mut sum = Echelon::new(n * n);
    let mut dims = Vec::new();
    let mut contained = true;
    let mut subalgebras = true;
    for b in blocks {
        let basis = b.subspace.basis();
        let mut gens = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            for v in &basis[i + 1..] {
                gens.push(k.apply_K(u, v));
            }
        }
        let hi = SkewAlgebra::from_generators(s, &gens).expect("K(u,v) is metric-skew");
        for a in hi.basis() {
            contained &= h.contains(a);
            sum.insert(a.as_slice());
        }
        subalgebras &= hi.brackets_close();
        dims.push(hi.dim());
    }
    let total_dim = h.dim();
    HolonomySplit {
        direct: dims.iter().sum::<usize>() == total_dim,
        sums_to_h: sum.dim() == total_dim,
        dims,
        total_dim,
        contained,
        subalgebras,
    }
}
