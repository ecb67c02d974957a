//! Pseudo-Riemannian vector spaces `(V, G)` in a fixed (arbitrary) basis.

use crate::bivector::{induced_gram, BivectorBasis};
use crate::error::{Error, Result};
use crate::exactnum::{dot, Mat, Scalar};
use serde::Serialize;

/// Sylvester inertia `(p, q)`: counts of positive and negative squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
}

impl Signature {
    pub fn dim(&self) -> usize {
        self.positive + self.negative
    }

    /// One timelike (or one spacelike) direction, in either sign convention.
    pub fn is_lorentzian(&self) -> bool {
        self.positive.min(self.negative) == 1
    }

    pub fn is_definite(&self) -> bool {
        self.positive == 0 || self.negative == 0
    }
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix.
///
/// Symmetric Gaussian congruence: pivot on a nonzero diagonal entry when one
/// exists, otherwise split off a hyperbolic pair `[[0,c],[c,0]]` (one
/// positive and one negative square) through its Schur complement.
pub fn inertia<T: Scalar>(g: &Mat<T>) -> (usize, usize, usize) {
    assert!(g.is_symmetric(), "inertia of a non-symmetric matrix");
    let mut a = g.clone();
    let mut live: Vec<usize> = (0..g.rows()).collect();
    let (mut pos, mut neg) = (0, 0);
    while !live.is_empty() {
        if let Some(&i) = live.iter().find(|&&i| !a[(i, i)].is_zero()) {
            let d = a[(i, i)].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            live.retain(|&k| k != i);
            for &r in &live {
                if a[(r, i)].is_zero() {
                    continue;
                }
                let f = a[(r, i)].clone() / &d;
                for &c in &live {
                    let v = f.clone() * &a[(i, c)];
                    a[(r, c)] -= &v;
                }
            }
            continue;
        }
        let pair = live
            .iter()
            .enumerate()
            .find_map(|(k, &i)| live[k + 1..].iter().find(|&&j| !a[(i, j)].is_zero()).map(|&j| (i, j)));
        let Some((i, j)) = pair else { break };
        pos += 1;
        neg += 1;
        live.retain(|&k| k != i && k != j);
        // Schur complement of the block [[0,c],[c,0]], whose inverse is [[0,1/c],[1/c,0]].
        let inv_c = T::one() / &a[(i, j)];
        for &r in &live {
            for &c in &live {
                let t = (a[(r, i)].clone() * &a[(j, c)] + a[(r, j)].clone() * &a[(i, c)]) * &inv_c;
                a[(r, c)] -= &t;
            }
        }
    }
    let zero = g.rows() - pos - neg;
    (pos, neg, zero)
}

/// A finite-dimensional real vector space with a nondegenerate symmetric
/// bilinear form, together with its cached bivector data.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricSpace<T> {
    gram: Mat<T>,
    gram_inv: Mat<T>,
    signature: Signature,
    bivectors: BivectorBasis,
    biv_gram: Mat<T>,
    biv_gram_inv: Mat<T>,
}

/// Validates a Gram matrix and computes its signature.
pub fn make_space<T: Scalar>(gram: Mat<T>) -> Result<MetricSpace<T>> {
    MetricSpace::new(gram)
}

impl<T: Scalar> MetricSpace<T> {
    pub fn new(gram: Mat<T>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if gram.determinant().is_zero() {
            return Err(Error::DegenerateMetric);
        }
        let (positive, negative, zero) = inertia(&gram);
        if zero != 0 {
            return Err(Error::Internal("nonzero determinant but degenerate inertia".into()));
        }
        let gram_inv = gram.inverse().ok_or(Error::DegenerateMetric)?;
        let bivectors = BivectorBasis::new(gram.rows());
        let biv_gram = induced_gram(&gram, &bivectors);
        let biv_gram_inv = biv_gram
            .inverse()
            .ok_or_else(|| Error::Internal("induced bivector metric is degenerate".into()))?;
        Ok(Self {
            gram,
            gram_inv,
            signature: Signature { positive, negative },
            bivectors,
            biv_gram,
            biv_gram_inv,
        })
    }

    /// Diagonal metric with `p` entries `+1` followed by `q` entries `−1`.
    pub fn standard(p: usize, q: usize) -> Self {
        let diag: Vec<T> = (0..p + q).map(|i| if i < p { T::one() } else { -T::one() }).collect();
        Self::new(Mat::diagonal(&diag)).expect("diagonal ±1 metric is nondegenerate")
    }

    pub fn euclidean(n: usize) -> Self {
        Self::standard(n, 0)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Mat<T> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Mat<T> {
        &self.gram_inv
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn is_lorentzian(&self) -> bool {
        self.signature.is_lorentzian()
    }

    pub fn bivectors(&self) -> &BivectorBasis {
        &self.bivectors
    }

    /// The induced metric on `Λ²V` in the lexicographic basis.
    pub fn bivector_gram(&self) -> &Mat<T> {
        &self.biv_gram
    }

    pub fn bivector_gram_inv(&self) -> &Mat<T> {
        &self.biv_gram_inv
    }

    pub fn inner(&self, u: &[T], v: &[T]) -> T {
        dot(u, &self.gram.mul_vec(v))
    }

    /// `(u∧v)w = ⟨v,w⟩u − ⟨u,w⟩v`
    pub fn wedge_endo(&self, u: &[T], v: &[T]) -> Mat<T> {
        let gu = self.gram.mul_vec(u);
        let gv = self.gram.mul_vec(v);
        Mat::from_fn(self.dim(), self.dim(), |i, j| {
            u[i].clone() * &gv[j] - v[i].clone() * &gu[j]
        })
    }

    /// `(u∨v)w = ½(⟨v,w⟩u + ⟨u,w⟩v)`
    pub fn vee_endo(&self, u: &[T], v: &[T]) -> Mat<T> {
        let gu = self.gram.mul_vec(u);
        let gv = self.gram.mul_vec(v);
        let half = T::ratio(1, 2);
        Mat::from_fn(self.dim(), self.dim(), |i, j| {
            (u[i].clone() * &gv[j] + v[i].clone() * &gu[j]) * &half
        })
    }

    /// `GA + AᵀG = 0`
    pub fn is_metric_skew(&self, a: &Mat<T>) -> bool {
        a.rows() == self.dim() && a.cols() == self.dim() && (&self.gram * a).is_antisymmetric()
    }

    /// `GA` symmetric.
    pub fn is_metric_symmetric(&self, a: &Mat<T>) -> bool {
        a.rows() == self.dim() && a.cols() == self.dim() && (&self.gram * a).is_symmetric()
    }

    /// `QᵀGQ = G`
    pub fn is_isometry(&self, q: &Mat<T>) -> bool {
        q.rows() == self.dim() && q.cols() == self.dim() && self.gram.congruence(q) == self.gram
    }

    /// Metric-adjoint `A* = G⁻¹AᵀG`.
    pub fn adjoint(&self, a: &Mat<T>) -> Mat<T> {
        &(&self.gram_inv * &a.transpose()) * &self.gram
    }

    /// Orthogonal direct sum `V₁ ⊕ V₂ ⊕ …`.
    pub fn direct_sum(spaces: &[&MetricSpace<T>]) -> Self {
        let grams: Vec<&Mat<T>> = spaces.iter().map(|s| &s.gram).collect();
        Self::new(Mat::block_diagonal(&grams)).expect("sum of nondegenerate metrics")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, rat, unit, Rational};

    fn space(rows: &[&[i64]]) -> Result<MetricSpace<Rational>> {
        MetricSpace::new(Mat::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        ))
    }

    fn e(n: usize, i: usize) -> Vec<Rational> {
        unit(n, i)
    }

    #[test]
    fn signatures() {
        let s = space(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(
            s.signature(),
            Signature {
                positive: 3,
                negative: 0
            }
        );
        assert!(!s.is_lorentzian());
        let s = space(&[&[-1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
        assert_eq!(
            s.signature(),
            Signature {
                positive: 3,
                negative: 1
            }
        );
        assert!(s.is_lorentzian());
        // Hand congruence: [[0,1],[1,0]] ~ diag(1,-1).
        let s = space(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(
            s.signature(),
            Signature {
                positive: 1,
                negative: 1
            }
        );
        assert!(s.is_lorentzian());
    }

    #[test]
    fn hyperbolic_pairs_inside_larger_blocks() {
        // Zero diagonal everywhere: eigenvalues 2, -1, -1.
        let s = space(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        assert_eq!(
            s.signature(),
            Signature {
                positive: 1,
                negative: 2
            }
        );
        let s = space(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 3], &[0, 0, 3, 0]]).unwrap();
        assert_eq!(
            s.signature(),
            Signature {
                positive: 2,
                negative: 2
            }
        );
    }

    #[test]
    fn construction_errors() {
        assert_eq!(space(&[&[1, 1], &[1, 1]]), Err(Error::DegenerateMetric));
        assert_eq!(space(&[&[1, 2], &[0, 1]]), Err(Error::NotSymmetric));
        assert!(matches!(
            MetricSpace::new(Mat::<Rational>::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        let (p, q, z) = inertia(&Mat::from_rows(vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]));
        assert_eq!((p, q, z), (1, 0, 1));
    }

    #[test]
    fn wedge_on_euclidean_plane() {
        let s = MetricSpace::<Rational>::euclidean(2);
        let w = s.wedge_endo(&e(2, 0), &e(2, 1));
        assert_eq!(w.mul_vec(&e(2, 1)), e(2, 0));
        assert_eq!(w.mul_vec(&e(2, 0)), vec![rat(0), rat(-1)]);
        assert!(s.wedge_endo(&e(2, 0), &e(2, 0)).is_zero());
        assert!(s.is_metric_skew(&w));
    }

    #[test]
    fn wedge_on_minkowski_null_basis() {
        // Basis p, q, x with <p,q> = 1, <x,x> = 1.
        let s = space(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        let (p, q, x) = (e(3, 0), e(3, 1), e(3, 2));
        let a = s.wedge_endo(&p, &x);
        let neg_x: Vec<Rational> = x.iter().map(|c| -c.clone()).collect();
        assert_eq!(a.mul_vec(&q), neg_x);
        assert_eq!(a.mul_vec(&x), p);
        assert!(a.mul_vec(&p).iter().all(|c| c == &rat(0)));
        assert!(s.is_metric_skew(&a));

        let pp = s.vee_endo(&p, &p);
        assert_eq!(pp.mul_vec(&q), p);
    }

    #[test]
    fn vee_products() {
        let s = MetricSpace::<Rational>::euclidean(2);
        let v = s.vee_endo(&e(2, 0), &e(2, 0));
        assert_eq!(v.mul_vec(&e(2, 0)), e(2, 0));
        assert!(v.mul_vec(&e(2, 1)).iter().all(|c| c == &rat(0)));
        let v = s.vee_endo(&e(2, 0), &e(2, 1));
        assert_eq!(v.mul_vec(&e(2, 0)), vec![rat(0), frac(1, 2)]);
        assert!(s.is_metric_symmetric(&v));
        assert!(!s.is_metric_skew(&v));
        assert!(!s.is_metric_skew(&Mat::identity(2)));
        assert!(!MetricSpace::<Rational>::euclidean(1).is_metric_skew(&Mat::identity(1)));
    }

    #[test]
    fn f64_space_matches_exact_signature() {
        let s = MetricSpace::<f64>::new(Mat::from_rows(vec![vec![0.0, 1.0], vec![1.0, 0.0]])).unwrap();
        assert_eq!(
            s.signature(),
            Signature {
                positive: 1,
                negative: 1
            }
        );
    }
}
