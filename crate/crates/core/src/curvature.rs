//! Curvature tensors as self-adjoint operators on `Λ²V`.
//!
//! A tensor is stored as the matrix `T` of `K : Λ²V → Λ²V` in the
//! lexicographic bivector basis, columns holding images:
//! `K(eᵢ∧eⱼ) = Σ T[(kl),(ij)] eₖ∧eₗ`. The associated 4-tensor
//! `K(a,b,u,v) = ⟨K(a∧b)u, v⟩` has component matrix `C = M·T` where `M` is
//! the induced bivector metric, so self-adjointness is `C = Cᵀ`.
//!
//! The Ricci form follows `ric(u,v) = trace(a ↦ K(u,a)v)`. With this sign
//! the constant tensor `λ·Id` on an `n`-dimensional space has
//! `Ric = λ(1−n)·Id`, negative on the round sphere. Textbooks using the
//! opposite contraction get the opposite sign.

use crate::bivector::{skew_of_bivector, Bivector, BivectorBasis};
use crate::error::{Error, Result};
use crate::exactnum::{minimal_polynomial, squarefree_rational_factors, Mat, Poly, Scalar};
use crate::space::MetricSpace;
use std::fmt;

/// A tensor in the kernel of the Bianchi map, with its metric space.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureTensor<T> {
    space: MetricSpace<T>,
    matrix: Mat<T>,
}

/// `⟨Ric u, v⟩ = ric(u, v)`, with the minimal polynomial `χ` of `Ric` and
/// its squarefree factorisation.
#[derive(Clone, Debug, PartialEq)]
pub struct RicciData<T> {
    pub operator: Mat<T>,
    pub form: Mat<T>,
    pub minpoly: Poly<T>,
    pub factors: Vec<(Poly<T>, usize)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RicciClass<T> {
    Einstein(T),
    RicciIsotropic,
    Zero,
    Other,
}

impl<T: fmt::Display> fmt::Display for RicciClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RicciClass::Einstein(l) => write!(f, "einstein({l})"),
            RicciClass::RicciIsotropic => write!(f, "ricci-isotropic"),
            RicciClass::Zero => write!(f, "zero"),
            RicciClass::Other => write!(f, "other"),
        }
    }
}

/// Outcome of the exact symmetry checks over all basis 4-tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub antisymmetric_first_pair: bool,
    pub antisymmetric_second_pair: bool,
    pub first_bianchi: bool,
    pub pair_symmetry: bool,
    /// `⟨K(a∧b)u, v⟩ = ⟨K(u∧v)a, b⟩`
    pub exchange: bool,
    /// First failing `(a, b, u, v)` and the identity it breaks.
    pub witness: Option<(usize, usize, usize, usize, &'static str)>,
}

impl SymmetryReport {
    pub fn all_hold(&self) -> bool {
        self.antisymmetric_first_pair
            && self.antisymmetric_second_pair
            && self.first_bianchi
            && self.pair_symmetry
            && self.exchange
    }
}

/// `C[(ab),(uv)]` extended to all index pairs by antisymmetry.
fn entry<T: Scalar>(c: &Mat<T>, basis: &BivectorBasis, a: usize, b: usize, u: usize, v: usize) -> T {
    let (Some((i, s1)), Some((j, s2))) = (basis.signed_index(a, b), basis.signed_index(u, v)) else {
        return T::zero();
    };
    if s1 == s2 {
        c[(i, j)].clone()
    } else {
        -c[(i, j)].clone()
    }
}

/// Cyclic sum `R_abcd + R_bcad + R_cabd` on component matrices.
fn bianchi_components<T: Scalar>(c: &Mat<T>, basis: &BivectorBasis) -> Mat<T> {
    let p = basis.pairs();
    Mat::from_fn(p.len(), p.len(), |x, y| {
        let (a, b) = p[x];
        let (cc, d) = p[y];
        entry(c, basis, a, b, cc, d) + entry(c, basis, b, cc, a, d) + entry(c, basis, cc, a, b, d)
    })
}

/// `M·T` symmetric.
pub fn is_self_adjoint<T: Scalar>(s: &MetricSpace<T>, t: &Mat<T>) -> bool {
    let n = s.bivectors().len();
    t.rows() == n && t.cols() == n && (s.bivector_gram() * t).is_symmetric()
}

/// The Bianchi map
/// `B((a∧b)∨(c∧d)) = (a∧b)∨(c∧d) + (b∧c)∨(a∧d) + (c∧a)∨(b∧d)`,
/// evaluated as the cyclic sum on the 4-tensor components.
pub fn bianchi_map<T: Scalar>(s: &MetricSpace<T>, t: &Mat<T>) -> Mat<T> {
    let c = s.bivector_gram() * t;
    s.bivector_gram_inv() * &bianchi_components(&c, s.bivectors())
}

/// Projection of a self-adjoint `T` onto `ker B` along `im B`.
///
/// `B² = 3B`, so `T − B(T)/3` is the projection; the residual is checked
/// and the exact kernel/image solve is used if it is ever nonzero.
///
/// Panics if `T` is not self-adjoint.
pub fn project_to_curvature<T: Scalar>(s: &MetricSpace<T>, t: &Mat<T>) -> CurvatureTensor<T> {
    assert!(is_self_adjoint(s, t), "project_to_curvature: input is not self-adjoint");
    let third = T::ratio(1, 3);
    let p = t - &bianchi_map(s, t).scale(&third);
    let matrix = if bianchi_map(s, &p).is_zero() {
        p
    } else {
        project_exact(s, t)
    };
    CurvatureTensor {
        space: s.clone(),
        matrix,
    }
}

/// Kernel/image projection onto `ker B`, computed on the upper triangle of
/// the component matrix.
pub fn project_exact<T: Scalar>(s: &MetricSpace<T>, t: &Mat<T>) -> Mat<T> {
    let basis = s.bivectors();
    let n = basis.len();
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let m = slots.len();
    let to_vec = |c: &Mat<T>| slots.iter().map(|&(i, j)| c[(i, j)].clone()).collect::<Vec<T>>();
    let from_vec = |v: &[T]| {
        let mut c = Mat::zeros(n, n);
        for (k, &(i, j)) in slots.iter().enumerate() {
            c[(i, j)] = v[k].clone();
            c[(j, i)] = v[k].clone();
        }
        c
    };
    let columns: Vec<Vec<T>> = (0..m)
        .map(|k| {
            let mut e = vec![T::zero(); m];
            e[k] = T::one();
            to_vec(&bianchi_components(&from_vec(&e), basis))
        })
        .collect();
    let b = Mat::from_cols(m, &columns);
    let kernel = b.kernel();
    let (_, pivots) = b.rref();
    let mut split: Vec<Vec<T>> = kernel.clone();
    split.extend(pivots.iter().map(|&p| columns[p].clone()));
    let coeffs = Mat::from_cols(m, &split)
        .solve(&to_vec(&(s.bivector_gram() * t)))
        .expect("ker B and im B span the symmetric tensors");
    let mut c = vec![T::zero(); m];
    for (k, v) in kernel.iter().enumerate() {
        crate::exactnum::axpy(&mut c, &coeffs[k], v);
    }
    s.bivector_gram_inv() * &from_vec(&c)
}

fn render_pair(basis: &BivectorBasis, k: usize) -> String {
    let (i, j) = basis.pairs()[k];
    format!("e{i}^e{j}")
}

impl<T: Scalar> CurvatureTensor<T> {
    /// Validates shape, self-adjointness and a zero Bianchi residual.
    pub fn new(space: MetricSpace<T>, matrix: Mat<T>) -> Result<Self> {
        let n = space.bivectors().len();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: if matrix.rows() != n {
                    matrix.rows()
                } else {
                    matrix.cols()
                },
            });
        }
        let c = space.bivector_gram() * &matrix;
        for i in 0..n {
            for j in i + 1..n {
                if c[(i, j)] != c[(j, i)] {
                    return Err(Error::Validation {
                        invariant: "self-adjoint on bivectors".into(),
                        witness: format!(
                            "<K({a}),{b}> = {} but <{a},K({b})> = {}",
                            c[(j, i)],
                            c[(i, j)],
                            a = render_pair(space.bivectors(), i),
                            b = render_pair(space.bivectors(), j),
                        ),
                    });
                }
            }
        }
        let residual = bianchi_components(&c, space.bivectors());
        for i in 0..n {
            for j in 0..n {
                if !residual[(i, j)].is_zero() {
                    return Err(Error::Validation {
                        invariant: "bianchi".into(),
                        witness: format!(
                            "cyclic sum at ({}, {}) = {}",
                            render_pair(space.bivectors(), i),
                            render_pair(space.bivectors(), j),
                            residual[(i, j)]
                        ),
                    });
                }
            }
        }
        Ok(Self { space, matrix })
    }

    pub fn zero(space: &MetricSpace<T>) -> Self {
        let n = space.bivectors().len();
        Self {
            space: space.clone(),
            matrix: Mat::zeros(n, n),
        }
    }

    /// `K = λ·Id` on `Λ²V`.
    pub fn constant(space: &MetricSpace<T>, lambda: T) -> Self {
        let n = space.bivectors().len();
        Self {
            space: space.clone(),
            matrix: Mat::identity(n).scale(&lambda),
        }
    }

    pub(crate) fn from_parts_unchecked(space: MetricSpace<T>, matrix: Mat<T>) -> Self {
        Self { space, matrix }
    }

    pub fn space(&self) -> &MetricSpace<T> {
        &self.space
    }

    pub fn matrix(&self) -> &Mat<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Component matrix `C[(ab),(uv)] = K(a,b,u,v)`.
    pub fn components(&self) -> Mat<T> {
        self.space.bivector_gram() * &self.matrix
    }

    /// `K(a,b,u,v) = ⟨K(a∧b)u, v⟩`
    pub fn four_tensor(&self, a: &[T], b: &[T], u: &[T], v: &[T]) -> T {
        let basis = self.space.bivectors();
        let x = Bivector::wedge(basis, a, b).coords;
        let y = Bivector::wedge(basis, u, v).coords;
        crate::exactnum::dot(&x, &self.components().mul_vec(&y))
    }

    /// `K(ω)` as a skew endomorphism.
    pub fn apply_bivector(&self, w: &Bivector<T>) -> Mat<T> {
        let image = Bivector {
            coords: self.matrix.mul_vec(&w.coords),
        };
        skew_of_bivector(&self.space, &image)
    }

    /// `K(u,v) = K(u∧v)` as a skew endomorphism.
    #[allow(non_snake_case)]
    pub fn apply_K(&self, u: &[T], v: &[T]) -> Mat<T> {
        self.apply_bivector(&Bivector::wedge(self.space.bivectors(), u, v))
    }

    /// `K(eᵢ∧eⱼ)` for every basis pair, in lexicographic order.
    pub fn basis_endomorphisms(&self) -> Vec<Mat<T>> {
        let n = self.space.bivectors().len();
        (0..n)
            .map(|k| {
                skew_of_bivector(
                    &self.space,
                    &Bivector {
                        coords: self.matrix.col(k),
                    },
                )
            })
            .collect()
    }

    /// `K(eₐ,e_b)` for all `a, b` (zero on the diagonal).
    fn endomorphism_table(&self) -> Vec<Vec<Mat<T>>> {
        let n = self.dim();
        let basis = self.space.bivectors();
        let endos = self.basis_endomorphisms();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| match basis.signed_index(a, b) {
                        None => Mat::zeros(n, n),
                        Some((k, true)) => endos[k].clone(),
                        Some((k, false)) => -&endos[k],
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks the Riemann symmetries on every basis 4-tuple, reading the
    /// components off the endomorphisms `K(eₐ, e_b)` directly.
    pub fn check_symmetries(&self) -> SymmetryReport {
        let n = self.dim();
        let g = self.space.gram();
        let table = self.endomorphism_table();
        let ga: Vec<Vec<Mat<T>>> = table.iter().map(|row| row.iter().map(|k| g * k).collect()).collect();
        // r(a,b,c,d) = ⟨K(eₐ,e_b)e_c, e_d⟩
        let r = |a: usize, b: usize, c: usize, d: usize| ga[a][b][(d, c)].clone();
        let mut rep = SymmetryReport {
            antisymmetric_first_pair: true,
            antisymmetric_second_pair: true,
            first_bianchi: true,
            pair_symmetry: true,
            exchange: true,
            witness: None,
        };
        let raw = self.components();
        let basis = self.space.bivectors();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let v = r(a, b, c, d);
                        let fail = |flag: &mut bool, name: &'static str, w: &mut Option<_>| {
                            *flag = false;
                            if w.is_none() {
                                *w = Some((a, b, c, d, name));
                            }
                        };
                        if !(v.clone() + r(b, a, c, d)).is_zero() {
                            fail(
                                &mut rep.antisymmetric_first_pair,
                                "antisymmetry in (a,b)",
                                &mut rep.witness,
                            );
                        }
                        if !(v.clone() + r(a, b, d, c)).is_zero() {
                            fail(
                                &mut rep.antisymmetric_second_pair,
                                "antisymmetry in (u,v)",
                                &mut rep.witness,
                            );
                        }
                        if !(v.clone() + r(b, c, a, d) + r(c, a, b, d)).is_zero() {
                            fail(&mut rep.first_bianchi, "first bianchi", &mut rep.witness);
                        }
                        if v != r(c, d, a, b) {
                            fail(&mut rep.pair_symmetry, "pair symmetry", &mut rep.witness);
                        }
                        // Same identity read through the stored component matrix.
                        if v != entry(&raw, basis, c, d, a, b) {
                            fail(&mut rep.exchange, "<K(a^b)u,v> = <K(u^v)a,b>", &mut rep.witness);
                        }
                    }
                }
            }
        }
        rep
    }

    /// `K∘K` on `Λ²V`.
    pub fn square(&self) -> Mat<T> {
        &self.matrix * &self.matrix
    }

    /// The Ricci form `ric(u,v) = trace(a ↦ K(u,a)v)` and operator `G⁻¹·ric`.
    pub fn ricci(&self) -> RicciData<T> {
        let n = self.dim();
        let table = self.endomorphism_table();
        let form = Mat::from_fn(n, n, |i, j| {
            let mut acc = T::zero();
            for (k, e) in table[i].iter().enumerate() {
                acc += &e[(k, j)];
            }
            acc
        });
        let operator = self.space.gram_inv() * &form;
        let minpoly = minimal_polynomial(&operator);
        let factors = squarefree_rational_factors(&minpoly);
        RicciData {
            operator,
            form,
            minpoly,
            factors,
        }
    }

    /// Replaces the operator matrix without revalidating it.
    pub(crate) fn with_matrix(&self, matrix: Mat<T>) -> Self {
        Self {
            space: self.space.clone(),
            matrix,
        }
    }
}

impl<T: Scalar> RicciData<T> {
    pub fn classify(&self) -> RicciClass<T> {
        classify_ricci(self)
    }
}

/// Einstein (`Ric = λ·Id`, `λ ≠ 0`), Ricci isotropic (`Ric ≠ 0`, `Ric² = 0`),
/// zero, or none of these.
pub fn classify_ricci<T: Scalar>(rd: &RicciData<T>) -> RicciClass<T> {
    let r = &rd.operator;
    if r.is_zero() {
        return RicciClass::Zero;
    }
    let lambda = r[(0, 0)].clone();
    if *r == Mat::identity(r.rows()).scale(&lambda) {
        return RicciClass::Einstein(lambda);
    }
    if (r * r).is_zero() {
        return RicciClass::RicciIsotropic;
    }
    RicciClass::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivector::vee_bivectors;
    use crate::exactnum::{frac, rat, unit, Rational};

    type Q = Rational;

    fn wedge(s: &MetricSpace<Q>, u: &[Q], v: &[Q]) -> Bivector<Q> {
        Bivector::wedge(s.bivectors(), u, v)
    }

    fn vee4(s: &MetricSpace<Q>, a: &[Q], b: &[Q], c: &[Q], d: &[Q]) -> Mat<Q> {
        vee_bivectors(s, &wedge(s, a, b), &wedge(s, c, d))
    }

    fn e(n: usize, i: usize) -> Vec<Q> {
        unit(n, i)
    }

    fn null_minkowski() -> MetricSpace<Q> {
        MetricSpace::new(Mat::from_rows(vec![
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ]))
        .unwrap()
    }

    /// `B` on one generator, straight from the three-term definition.
    fn bianchi_generator(s: &MetricSpace<Q>, a: &[Q], b: &[Q], c: &[Q], d: &[Q]) -> Mat<Q> {
        &(&vee4(s, a, b, c, d) + &vee4(s, b, c, a, d)) + &vee4(s, c, a, b, d)
    }

    #[test]
    fn bianchi_of_zero_is_zero() {
        let s = MetricSpace::<Q>::euclidean(4);
        assert!(bianchi_map(&s, &Mat::zeros(6, 6)).is_zero());
    }

    #[test]
    fn bianchi_collapses_on_repeated_pair() {
        let s = MetricSpace::<Q>::euclidean(3);
        let t = vee4(&s, &e(3, 0), &e(3, 1), &e(3, 0), &e(3, 1));
        assert!(bianchi_map(&s, &t).is_zero());
    }

    #[test]
    fn bianchi_matches_generator_definition() {
        let s = MetricSpace::<Q>::euclidean(4);
        let (a, b, c, d) = (e(4, 0), e(4, 1), e(4, 2), e(4, 3));
        let t = vee4(&s, &a, &b, &c, &d);
        let bt = bianchi_map(&s, &t);
        assert!(!bt.is_zero());
        assert_eq!(bt, bianchi_generator(&s, &a, &b, &c, &d));

        let s = MetricSpace::<Q>::new(Mat::from_rows(vec![
            vec![rat(0), rat(1), rat(0), rat(0)],
            vec![rat(1), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(2), rat(1)],
            vec![rat(0), rat(0), rat(1), rat(-3)],
        ]))
        .unwrap();
        let a = vec![rat(1), rat(2), rat(0), rat(-1)];
        let b = vec![rat(0), frac(1, 2), rat(3), rat(1)];
        let c = vec![rat(2), rat(0), rat(1), rat(1)];
        let d = vec![rat(-1), rat(1), rat(1), rat(0)];
        let t = vee4(&s, &a, &b, &c, &d);
        assert_eq!(bianchi_map(&s, &t), bianchi_generator(&s, &a, &b, &c, &d));
        // B² = 3B on generators.
        assert_eq!(
            bianchi_map(&s, &bianchi_map(&s, &t)),
            bianchi_map(&s, &t).scale(&rat(3))
        );
    }

    #[test]
    fn constant_tensor_is_bianchi_flat() {
        for n in 2..=4 {
            let s = MetricSpace::<Q>::standard(n - 1, 1);
            let k = CurvatureTensor::constant(&s, rat(5));
            assert!(bianchi_map(&s, k.matrix()).is_zero());
            assert_eq!(project_to_curvature(&s, k.matrix()), k);
        }
    }

    #[test]
    fn isotropic_generator_is_fixed_by_projection() {
        let s = null_minkowski();
        let t = vee4(&s, &e(3, 0), &e(3, 2), &e(3, 0), &e(3, 2));
        assert_eq!(project_to_curvature(&s, &t).matrix(), &t);
    }

    #[test]
    fn projection_of_mixed_generator() {
        let s = MetricSpace::<Q>::euclidean(4);
        let t = vee4(&s, &e(4, 0), &e(4, 1), &e(4, 2), &e(4, 3));
        let k = project_to_curvature(&s, &t);
        assert_eq!(*k.matrix(), &t - &bianchi_map(&s, &t).scale(&frac(1, 3)));
        assert!(bianchi_map(&s, k.matrix()).is_zero());
        assert_eq!(project_exact(&s, &t), *k.matrix());
        assert!(CurvatureTensor::new(s.clone(), t).is_err());
    }

    #[test]
    fn exact_projection_agrees_with_closed_form() {
        let s = MetricSpace::<Q>::standard(2, 2);
        let a = vec![rat(1), rat(2), rat(0), rat(-1)];
        let b = vec![rat(0), rat(1), rat(3), rat(1)];
        let c = vec![rat(2), rat(0), rat(1), rat(1)];
        let d = vec![rat(-1), rat(1), rat(1), rat(0)];
        let t = &vee4(&s, &a, &b, &c, &d) + &vee4(&s, &a, &c, &a, &c).scale(&rat(2));
        assert_eq!(project_exact(&s, &t), *project_to_curvature(&s, &t).matrix());
    }

    #[test]
    fn four_tensor_examples() {
        let s = MetricSpace::<Q>::euclidean(3);
        let k = CurvatureTensor::constant(&s, rat(2));
        let (a, b) = (e(3, 0), e(3, 1));
        assert_eq!(k.four_tensor(&a, &a, &b, &e(3, 2)), rat(0));
        // λ⟨e₁∧e₂, e₁∧e₂⟩ with the negative definite bivector metric.
        assert_eq!(k.four_tensor(&a, &b, &a, &b), rat(-2));
        assert!(k.check_symmetries().all_hold());
    }

    #[test]
    fn apply_examples() {
        let s = null_minkowski();
        let k = CurvatureTensor::constant(&s, rat(3));
        let u = vec![rat(1), rat(2), rat(0)];
        let v = vec![rat(0), rat(1), rat(-1)];
        assert_eq!(k.apply_K(&u, &v), s.wedge_endo(&u, &v).scale(&rat(3)));
        assert!(k.apply_K(&u, &u).is_zero());

        let (p, x) = (e(3, 0), e(3, 2));
        let px = wedge(&s, &p, &x);
        let k = CurvatureTensor::new(s.clone(), vee_bivectors(&s, &px, &px)).unwrap();
        let uv = wedge(&s, &u, &v);
        let c = crate::bivector::bivector_inner(&s, &px, &uv);
        assert_eq!(k.apply_K(&u, &v), s.wedge_endo(&p, &x).scale(&c));
        assert!(s.is_metric_skew(&k.apply_K(&u, &v)));
    }

    #[test]
    fn constant_curvature_ricci() {
        let s = MetricSpace::<Q>::euclidean(3);
        let rd = CurvatureTensor::constant(&s, rat(1)).ricci();
        assert_eq!(rd.operator, Mat::identity(3).scale(&rat(-2)));
        assert_eq!(rd.classify(), RicciClass::Einstein(rat(-2)));
        assert_eq!(rd.minpoly, Poly::linear(rat(-2)));
        for n in 2..=5 {
            let s = MetricSpace::<Q>::standard(n - 2, 2);
            let rd = CurvatureTensor::constant(&s, frac(1, 2)).ricci();
            assert_eq!(rd.operator, Mat::identity(n).scale(&(frac(1, 2) * rat(1 - n as i64))));
        }
    }

    #[test]
    fn isotropic_ricci() {
        let s = null_minkowski();
        let (p, q, x) = (e(3, 0), e(3, 1), e(3, 2));
        let t = vee4(&s, &p, &x, &p, &x);
        let rd = CurvatureTensor::new(s, t).unwrap().ricci();
        let mut form = Mat::zeros(3, 3);
        form[(1, 1)] = rat(1);
        assert_eq!(rd.form, form);
        assert_eq!(rd.operator.mul_vec(&q), p);
        assert!(rd.operator.mul_vec(&p).iter().all(|c| c == &rat(0)));
        assert!(rd.operator.mul_vec(&x).iter().all(|c| c == &rat(0)));
        assert_eq!(rd.classify(), RicciClass::RicciIsotropic);
        assert_eq!(rd.minpoly, Poly::x().pow(2));
    }

    #[test]
    fn zero_tensor_classification() {
        let s = MetricSpace::<Q>::standard(2, 1);
        assert_eq!(CurvatureTensor::zero(&s).ricci().classify(), RicciClass::Zero);
    }

    #[test]
    fn validation_rejects_non_self_adjoint() {
        let s = MetricSpace::<Q>::euclidean(3);
        let mut t = Mat::zeros(3, 3);
        t[(0, 1)] = rat(1);
        let err = CurvatureTensor::new(s, t).unwrap_err();
        assert!(matches!(err, Error::Validation { ref invariant, .. } if invariant.contains("self-adjoint")));
    }

    #[test]
    fn symmetry_report_flags_non_bianchi() {
        let s = MetricSpace::<Q>::euclidean(4);
        let t = vee4(&s, &e(4, 0), &e(4, 1), &e(4, 2), &e(4, 3));
        let k = CurvatureTensor::from_parts_unchecked(s, t);
        let rep = k.check_symmetries();
        assert!(!rep.first_bianchi);
        assert!(rep.pair_symmetry && rep.antisymmetric_first_pair && rep.antisymmetric_second_pair);
        assert!(rep.witness.is_some());
    }
}
