use super::{
    cross_vanishing, einstein_constant, orthogonal, render_vector, require_semisymmetric, Block, BlockTag,
    Decomposition, Flags,
};
use crate::curvature::CurvatureTensor;
use crate::error::Result;
use crate::exactnum::{axpy, Echelon, Mat, Scalar};
use crate::holonomy::{h_span, invariant_subspace_split, lie_closure, SkewAlgebra, Subspace};

/// `V = V₀ + V₁ + … + V_s + V₀′`.
///
/// `V₀` is the common kernel of `h̄(K)`, the `Vᵢ` are the images `h̄·Uᵢ` of
/// the nondegenerate invariant pieces on which the algebra acts nontrivially,
/// and `V₀′` is an isotropic dual of `W = V₀ ∩ ΣVᵢ` (omitted when `W = 0`).
/// The sum need not be direct; `flags.direct` records whether it is.
pub fn primitive_decomposition<T: Scalar>(k: &CurvatureTensor<T>) -> Result<Decomposition<T>> {
    require_semisymmetric(k)?;
    let h = lie_closure(&h_span(k))?;
    Ok(primitive_decomposition_in(k, &h))
}

/// [`primitive_decomposition`] for a tensor known to be semi-symmetric,
/// with the closure `h̄(K)` already computed.
pub(crate) fn primitive_decomposition_in<T: Scalar>(k: &CurvatureTensor<T>, h: &SkewAlgebra<T>) -> Decomposition<T> {
    let s = k.space();
    let ric = k.ricci().operator;
    let split = invariant_subspace_split(h);

    let mut blocks = vec![Block {
        tag: BlockTag::V0,
        einstein: None,
        subspace: split.v0.clone(),
        factor: None,
    }];
    for (i, c) in split.components.iter().enumerate() {
        blocks.push(Block {
            tag: BlockTag::V(i + 1),
            einstein: einstein_constant(&ric, c),
            subspace: c.clone(),
            factor: None,
        });
    }
    let sum_v = split.components.iter().fold(Subspace::zero(s), |acc, c| acc.sum(c));
    let w = split.v0.intersection(&sum_v);
    let mut failures = Vec::new();
    let mut dual_pairing = None;
    if w.dim() > 0 {
        if !w.is_totally_isotropic() {
            failures.push("V0 ∩ ΣVi is not totally isotropic".to_string());
        }
        let mut preferred: Vec<Vec<T>> = split.components.iter().flat_map(|c| c.basis().to_vec()).collect();
        preferred.extend(split.v0.basis().iter().cloned());
        let duals = isotropic_dual(&w, &preferred);
        let ok = pairing_holds(&w, &duals);
        let dual = Subspace::span(s, &duals);
        if !ok {
            failures.push("V0' is not an isotropic dual of V0 ∩ ΣVi".to_string());
        }
        dual_pairing = Some(ok);
        blocks.push(Block {
            tag: BlockTag::V0Dual,
            einstein: None,
            subspace: dual,
            factor: None,
        });
    }

    let mut invariant_certified = true;
    for b in &blocks[..=split.components.len()] {
        if !b.subspace.is_invariant_under(h.basis()) {
            invariant_certified = false;
            failures.push(format!("{} is not invariant", b.tag));
        }
    }
    let mut orthogonal_certified = true;
    let mut cross_vanishing_certified = true;
    let comps = &blocks[1..=split.components.len()];
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
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
    if let Some((u, v)) = cross_vanishing(k, &split.v0, &Subspace::whole(s)) {
        cross_vanishing_certified = false;
        failures.push(format!(
            "K(u,v) != 0 for u = {} in V0, v = {}",
            render_vector(&u),
            render_vector(&v)
        ));
    }

    let total: usize = blocks.iter().map(|b| b.subspace.dim()).sum();
    let spans = blocks
        .iter()
        .fold(Subspace::zero(s), |acc, b| acc.sum(&b.subspace))
        .dim()
        == s.dim();
    if !spans {
        failures.push("V0 + ΣVi + V0' does not span V".to_string());
    }
    Decomposition {
        blocks,
        flags: Flags {
            orthogonal_certified,
            invariant_certified,
            cross_vanishing_certified,
            dimension_certified: None,
            spans,
            direct: spans && total == s.dim(),
            coarse: false,
            heuristic: !split.certified,
            dual_pairing_certified: dual_pairing,
        },
        failures,
        holonomy: None,
    }
}

/// Isotropic `q₁…q_k` with `⟨pᵢ, qⱼ⟩ = δᵢⱼ`, orthogonal to a complement
/// `C` of `W` in `W^⊥`, for a totally isotropic `W = span{p₁…p_k}`.
///
/// `C` is grown greedily from `preferred` (all of which lie in `W^⊥`) and
/// then the `W^⊥` basis, keeping each vector independent of `W` and of the
/// earlier picks. The `q′ⱼ ∈ C^⊥` solving the pairing equations are then
/// made isotropic by `qⱼ = q′ⱼ − ½ Σᵢ ⟨q′ᵢ, q′ⱼ⟩ pᵢ`.
fn isotropic_dual<T: Scalar>(w: &Subspace<T>, preferred: &[Vec<T>]) -> Vec<Vec<T>> {
    let s = w.space();
    let p = w.basis();
    let perp = w.orthogonal_complement();
    let mut e = Echelon::new(s.dim());
    for v in p {
        e.insert(v);
    }
    let complement: Vec<Vec<T>> = preferred
        .iter()
        .filter(|v| perp.contains(v))
        .chain(perp.basis())
        .filter(|v| e.insert(v))
        .cloned()
        .collect();
    let c_perp = Subspace::span(s, &complement).orthogonal_complement();
    let b = c_perp.basis();
    let pairing = Mat::from_fn(p.len(), b.len(), |i, j| s.inner(&p[i], &b[j]));
    let mut primes: Vec<Vec<T>> = Vec::new();
    for j in 0..p.len() {
        let mut rhs = vec![T::zero(); p.len()];
        rhs[j] = T::one();
        let Some(c) = pairing.solve(&rhs) else {
            return Vec::new();
        };
        let mut q = vec![T::zero(); s.dim()];
        for (cj, bj) in c.iter().zip(b) {
            axpy(&mut q, cj, bj);
        }
        primes.push(q);
    }
    let half = T::ratio(1, 2);
    (0..p.len())
        .map(|j| {
            let mut q = primes[j].clone();
            for (i, pi) in p.iter().enumerate() {
                let c = -(s.inner(&primes[i], &primes[j]) * &half);
                axpy(&mut q, &c, pi);
            }
            q
        })
        .collect()
}

fn pairing_holds<T: Scalar>(w: &Subspace<T>, duals: &[Vec<T>]) -> bool {
    let s = w.space();
    let p = w.basis();
    duals.len() == p.len()
        && (0..p.len()).all(|i| {
            (0..p.len()).all(|j| {
                let want = if i == j { T::one() } else { T::zero() };
                s.inner(&p[i], &duals[j]) == want && s.inner(&duals[i], &duals[j]).is_zero()
            })
        })
}
