use super::{einstein_constant, primitive_decomposition, ricci_decomposition, BlockTag, Decomposition};
use crate::bivector::Bivector;
use crate::curvature::CurvatureTensor;
use crate::error::{Error, Result};
use crate::exactnum::{sturm_real_root_count, Interval, Poly, Scalar};
use crate::holonomy::Subspace;

/// Sturm count of one non-`X` factor of the Ricci minimal polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorRealness<T> {
    pub factor: Poly<T>,
    pub degree: usize,
    pub real_roots: usize,
}

impl<T> FactorRealness<T> {
    pub fn all_real(&self) -> bool {
        self.real_roots == self.degree
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LorentzianCase {
    /// `ker Ric = ker Ric²`
    Diagonalizable,
    /// `ker Ric ⊊ ker Ric²`
    IsotropicType,
}

/// Pointwise structure statements for a semi-symmetric Lorentzian tensor.
#[derive(Clone, Debug)]
pub struct LorentzianReport<T> {
    /// (1) Real spectrum, one entry per non-`X` factor.
    pub realness: Vec<FactorRealness<T>>,
    /// (2)
    pub case: LorentzianCase,
    /// Index (into `primitive.blocks`) of the only non-definite component, if any.
    pub lorentzian_component: Option<usize>,
    /// (3) Einstein constants of the definite components, by block index.
    pub riemannian_components: Vec<(usize, Option<T>)>,
    /// (4) With exactly one nonzero Ricci eigenvalue `λ`: whether
    /// `V = ker(Ric − λ) ⊕ V₀`. Informational.
    pub single_eigenvalue_shape: Option<bool>,
    /// `V₀ ∩ V₁` is a nonzero isotropic subspace.
    pub degenerate_case: bool,
    /// (5) `K∘K = 0` on `Λ²E₀`, certified in the degenerate case.
    pub k_squared_on_e0: Option<bool>,
    /// `K∘K = 0` on all of `Λ²V`. Informational.
    pub k_squared_zero: bool,
    /// `K(a,b)∘K(u,v) = 0` for all basis pairs. Informational.
    pub k_composition_zero: bool,
    pub ricci: Decomposition<T>,
    pub primitive: Decomposition<T>,
    /// Failed certificates, with witnesses.
    pub violations: Vec<String>,
}

impl<T: Scalar> LorentzianReport<T> {
    pub fn certified(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Certifies, for a semi-symmetric tensor on a Lorentzian space:
///
/// 1. every non-`X` factor of the Ricci minimal polynomial has only real
///    roots (Sturm count equals degree);
/// 2. the case `ker Ric = ker Ric²` or `ker Ric ⊊ ker Ric²`;
/// 3. every primitive component other than a single non-definite one is
///    definite, of dimension at least 2 and Einstein. When `E₀` is definite
///    the non-definite component is Einstein too and `V₀ = E₀`; in the
///    isotropic case `E₀ = V₀ + V₁ + V₀′` with `dim V₀′ = 1`;
/// 4. informational: the single-eigenvalue shape `V = ker(Ric − λ) ⊕ V₀`;
/// 5. when `V₀ ∩ V₁` is nonzero and isotropic, `K∘K = 0` on `Λ²E₀`.
///
/// The Ricci and primitive decompositions are included with their own
/// certificates, whose failures are also listed as violations.
pub fn lorentzian_report<T: Scalar>(k: &CurvatureTensor<T>) -> Result<LorentzianReport<T>> {
    let s = k.space();
    let sig = s.signature();
    if !sig.is_lorentzian() {
        return Err(Error::NotLorentzian {
            positive: sig.positive,
            negative: sig.negative,
        });
    }
    let ricci = ricci_decomposition(k)?;
    let primitive = primitive_decomposition(k)?;
    lorentzian_report_from(k, ricci, primitive)
}

/// [`lorentzian_report`] over decompositions the caller already holds.
/// The space must be Lorentzian.
pub fn lorentzian_report_from<T: Scalar>(
    k: &CurvatureTensor<T>,
    ricci: Decomposition<T>,
    primitive: Decomposition<T>,
) -> Result<LorentzianReport<T>> {
    let s = k.space();
    if !s.signature().is_lorentzian() {
        return Err(Error::NotLorentzian {
            positive: s.signature().positive,
            negative: s.signature().negative,
        });
    }
    let rd = k.ricci();
    let ric = &rd.operator;
    let mut violations: Vec<String> = ricci.failures.iter().chain(&primitive.failures).cloned().collect();

    // (1)
    let x = Poly::<T>::x();
    let mut realness = Vec::new();
    for (f, _) in rd.factors.iter().filter(|(f, _)| *f != x) {
        let degree = f.degree().unwrap_or(0);
        let real_roots = sturm_real_root_count(f, &Interval::real_line())?;
        if real_roots != degree {
            violations.push(format!("factor {f} has {real_roots} real roots out of {degree}"));
        }
        realness.push(FactorRealness {
            factor: f.clone(),
            degree,
            real_roots,
        });
    }

    // (2)
    let ker1 = Subspace::span(s, &ric.kernel());
    let e0 = Subspace::span(s, &(ric * ric).kernel());
    let case = if ker1.dim() == e0.dim() {
        LorentzianCase::Diagonalizable
    } else {
        LorentzianCase::IsotropicType
    };

    // (3)
    let mut lorentzian_component: Option<usize> = None;
    let mut riemannian_components = Vec::new();
    for (i, b) in primitive.blocks.iter().enumerate() {
        if !matches!(b.tag, BlockTag::V(_)) {
            continue;
        }
        if b.subspace.is_definite() {
            if b.subspace.dim() < 2 {
                violations.push(format!(
                    "definite component {} has dimension {}",
                    b.tag,
                    b.subspace.dim()
                ));
            }
            let lambda = einstein_constant(ric, &b.subspace);
            if lambda.is_none() {
                violations.push(format!("definite component {} is not Einstein", b.tag));
            }
            riemannian_components.push((i, lambda));
        } else if let Some(j) = lorentzian_component {
            let first = &primitive.blocks[j].tag;
            violations.push(format!("components {} and {} are both non-definite", first, b.tag));
        } else {
            lorentzian_component = Some(i);
        }
    }
    let v0 = &primitive.blocks[0].subspace;
    let v1 = lorentzian_component.map(|i| &primitive.blocks[i].subspace);
    if e0.is_definite() {
        if let Some(v1) = v1 {
            if einstein_constant(ric, v1).is_none() {
                violations.push("E0 is definite but the non-definite component is not Einstein".into());
            }
        }
        if *v0 != e0 {
            violations.push(format!(
                "E0 is definite but V0 (dim {}) != E0 (dim {})",
                v0.dim(),
                e0.dim()
            ));
        }
    }
    if case == LorentzianCase::IsotropicType {
        let dual = primitive.block(BlockTag::V0Dual).map(|b| &b.subspace);
        let dual_dim = dual.map_or(0, |d| d.dim());
        let mut sum = v0.clone();
        if let Some(v1) = v1 {
            sum = sum.sum(v1);
        }
        if let Some(d) = dual {
            sum = sum.sum(d);
        }
        if sum != e0 {
            violations.push(format!("E0 (dim {}) != V0 + V1 + V0' (dim {})", e0.dim(), sum.dim()));
        }
        if dual_dim != 1 {
            violations.push(format!("isotropic case with dim V0' = {dual_dim}"));
        }
    }

    // (4)
    let nonzero: Vec<&Poly<T>> = rd.factors.iter().map(|(f, _)| f).filter(|f| **f != x).collect();
    let single_eigenvalue_shape = match nonzero.as_slice() {
        [f] if f.degree() == Some(1) => {
            let eig = Subspace::span(s, &f.eval_matrix(ric).kernel());
            Some(eig.intersection(v0).dim() == 0 && eig.dim() + v0.dim() == s.dim())
        }
        _ => None,
    };

    // (5)
    let degenerate_case = v1.is_some_and(|v1| {
        let w = v0.intersection(v1);
        w.dim() > 0 && w.is_totally_isotropic()
    });
    let square = k.square();
    let k_squared_on_e0 = degenerate_case.then(|| {
        let basis = e0.basis();
        let ok = (0..basis.len()).all(|i| {
            (i + 1..basis.len()).all(|j| {
                let w = Bivector::wedge(s.bivectors(), &basis[i], &basis[j]);
                square.mul_vec(&w.coords).iter().all(|c| c.is_zero())
            })
        });
        if !ok {
            violations.push("K∘K does not vanish on Λ²E0 in the degenerate case".to_string());
        }
        ok
    });
    let endos = k.basis_endomorphisms();
    let k_composition_zero = endos.iter().all(|a| endos.iter().all(|b| (a * b).is_zero()));

    Ok(LorentzianReport {
        realness,
        case,
        lorentzian_component,
        riemannian_components,
        single_eigenvalue_shape,
        degenerate_case,
        k_squared_on_e0,
        k_squared_zero: square.is_zero(),
        k_composition_zero,
        ricci,
        primitive,
        violations,
    })
}
