//! The bivector space `Λ²V` in the lexicographic basis `{eᵢ∧eⱼ : i < j}`,
//! and its identification with metric-skew endomorphisms.
//!
//! The lexicographic order is the only basis used anywhere, including the
//! instance file format: index 0 is `e₀∧e₁`, then `e₀∧e₂`, …, `e₀∧e_{n−1}`,
//! `e₁∧e₂`, and so on.

use crate::error::{Error, Result};
use crate::exactnum::{dot, Mat, Scalar};
use crate::space::MetricSpace;

/// Lexicographic pair basis of `Λ²ℝⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivectorBasis {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl BivectorBasis {
    pub fn new(n: usize) -> Self {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self { n, pairs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N = n(n−1)/2`
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Position of `eᵢ∧eⱼ` for `i < j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    /// Position and sign of `eᵢ∧eⱼ` for any `i ≠ j`.
    pub fn signed_index(&self, i: usize, j: usize) -> Option<(usize, bool)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Some((self.index(i, j), true)),
            std::cmp::Ordering::Greater => Some((self.index(j, i), false)),
            std::cmp::Ordering::Equal => None,
        }
    }
}

/// Element of `Λ²V` in lexicographic coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Bivector<T> {
    pub coords: Vec<T>,
}

impl<T: Scalar> Bivector<T> {
    pub fn zero(len: usize) -> Self {
        Self {
            coords: vec![T::zero(); len],
        }
    }

    /// `u∧v`, coordinates `uᵢvⱼ − uⱼvᵢ`.
    pub fn wedge(basis: &BivectorBasis, u: &[T], v: &[T]) -> Self {
        Self {
            coords: basis
                .pairs()
                .iter()
                .map(|&(i, j)| u[i].clone() * &v[j] - u[j].clone() * &v[i])
                .collect(),
        }
    }

    /// The antisymmetric coefficient matrix `W` with `ω = Σ_{i<j} Wᵢⱼ eᵢ∧eⱼ`.
    pub fn to_antisymmetric(&self, basis: &BivectorBasis) -> Mat<T> {
        let mut w = Mat::zeros(basis.n(), basis.n());
        for (k, &(i, j)) in basis.pairs().iter().enumerate() {
            w[(i, j)] = self.coords[k].clone();
            w[(j, i)] = -self.coords[k].clone();
        }
        w
    }

    pub fn from_antisymmetric(basis: &BivectorBasis, w: &Mat<T>) -> Self {
        Self {
            coords: basis.pairs().iter().map(|&(i, j)| w[(i, j)].clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Induced metric `⟨eᵢ∧eⱼ, eₖ∧eₗ⟩ = GⱼₖGᵢₗ − GᵢₖGⱼₗ` on the pair basis.
pub fn induced_gram<T: Scalar>(gram: &Mat<T>, basis: &BivectorBasis) -> Mat<T> {
    let p = basis.pairs();
    Mat::from_fn(p.len(), p.len(), |a, b| {
        let (i, j) = p[a];
        let (k, l) = p[b];
        gram[(j, k)].clone() * &gram[(i, l)] - gram[(i, k)].clone() * &gram[(j, l)]
    })
}

/// `⟨α, β⟩` in `Λ²V`.
pub fn bivector_inner<T: Scalar>(s: &MetricSpace<T>, a: &Bivector<T>, b: &Bivector<T>) -> T {
    dot(&a.coords, &s.bivector_gram().mul_vec(&b.coords))
}

/// The skew endomorphism `Σ ωᵢⱼ (eᵢ∧eⱼ)`, which is `W·G`.
pub fn skew_of_bivector<T: Scalar>(s: &MetricSpace<T>, w: &Bivector<T>) -> Mat<T> {
    &w.to_antisymmetric(s.bivectors()) * s.gram()
}

/// Inverse of [`skew_of_bivector`]: `W = A·G⁻¹`.
pub fn bivector_of_skew<T: Scalar>(s: &MetricSpace<T>, a: &Mat<T>) -> Result<Bivector<T>> {
    if !s.is_metric_skew(a) {
        return Err(Error::NotSkew);
    }
    Ok(Bivector::from_antisymmetric(s.bivectors(), &(a * s.gram_inv())))
}

/// Matrix of `ω ↦ [A, ω]` on `Λ²V` for a skew `A`; on coefficient
/// matrices this is `W ↦ AW + WAᵀ`, i.e. `Au∧v + u∧Av`.
pub fn derivation_matrix<T: Scalar>(basis: &BivectorBasis, a: &Mat<T>) -> Mat<T> {
    let p = basis.pairs();
    Mat::from_fn(p.len(), p.len(), |row, col| {
        let (i, j) = p[row];
        let (k, l) = p[col];
        let mut v = T::zero();
        if j == l {
            v += &a[(i, k)];
        }
        if j == k {
            v -= &a[(i, l)];
        }
        if i == k {
            v += &a[(j, l)];
        }
        if i == l {
            v -= &a[(j, k)];
        }
        v
    })
}

/// Matrix of `Λ²Q : u∧v ↦ Qu∧Qv`, i.e. `W ↦ QWQᵀ`.
pub fn induced_action<T: Scalar>(basis: &BivectorBasis, q: &Mat<T>) -> Mat<T> {
    let p = basis.pairs();
    Mat::from_fn(p.len(), p.len(), |row, col| {
        let (i, j) = p[row];
        let (k, l) = p[col];
        q[(i, k)].clone() * &q[(j, l)] - q[(i, l)].clone() * &q[(j, k)]
    })
}

/// Matrix of the symmetric product `α∨β : ω ↦ ½(⟨β,ω⟩α + ⟨α,ω⟩β)` on `Λ²V`.
pub fn vee_bivectors<T: Scalar>(s: &MetricSpace<T>, a: &Bivector<T>, b: &Bivector<T>) -> Mat<T> {
    let ma = s.bivector_gram().mul_vec(&a.coords);
    let mb = s.bivector_gram().mul_vec(&b.coords);
    let half = T::ratio(1, 2);
    let n = a.coords.len();
    Mat::from_fn(n, n, |i, j| {
        (a.coords[i].clone() * &mb[j] + b.coords[i].clone() * &ma[j]) * &half
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, unit, Rational};

    fn null_minkowski() -> MetricSpace<Rational> {
        MetricSpace::new(Mat::from_rows(vec![
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ]))
        .unwrap()
    }

    #[test]
    fn lexicographic_indexing() {
        let b = BivectorBasis::new(4);
        assert_eq!(b.len(), 6);
        for (k, &(i, j)) in b.pairs().iter().enumerate() {
            assert_eq!(b.index(i, j), k);
            assert_eq!(b.signed_index(j, i), Some((k, false)));
        }
        assert_eq!(b.pairs()[2], (0, 3));
        assert_eq!(b.pairs()[3], (1, 2));
    }

    #[test]
    fn induced_gram_euclidean_three() {
        // ⟨eᵢ∧eⱼ, eᵢ∧eⱼ⟩ = GⱼᵢGᵢⱼ − GᵢᵢGⱼⱼ = −1 on an orthonormal basis.
        let s = MetricSpace::<Rational>::euclidean(3);
        assert_eq!(*s.bivector_gram(), Mat::identity(3).scale(&rat(-1)));
    }

    #[test]
    fn induced_gram_decomposable_formula() {
        let s = null_minkowski();
        let u = vec![rat(1), rat(2), rat(-1)];
        let v = vec![rat(0), rat(3), rat(5)];
        let w = Bivector::wedge(s.bivectors(), &u, &v);
        let expected = s.inner(&u, &v) * s.inner(&u, &v) - s.inner(&u, &u) * s.inner(&v, &v);
        assert_eq!(bivector_inner(&s, &w, &w), expected);
        // ⟨u∧v, w∧t⟩ is ⟨(u∧v)w, t⟩.
        let t = vec![rat(2), rat(-1), rat(1)];
        let z = vec![rat(1), rat(1), rat(1)];
        let lhs = bivector_inner(&s, &w, &Bivector::wedge(s.bivectors(), &z, &t));
        let rhs = s.inner(&s.wedge_endo(&u, &v).mul_vec(&z), &t);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_gram_minkowski_timelike_plane() {
        let s = MetricSpace::<Rational>::new(Mat::diagonal(&[rat(-1), rat(1), rat(1)])).unwrap();
        assert_eq!(s.bivector_gram()[(0, 0)], rat(1));
        assert_eq!(s.bivector_gram()[(2, 2)], rat(-1));
    }

    #[test]
    fn identification_round_trips() {
        let s = null_minkowski();
        let a = s.wedge_endo(&unit(3, 0), &unit(3, 1));
        let w = bivector_of_skew(&s, &a).unwrap();
        assert_eq!(w.coords, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(skew_of_bivector(&s, &w), a);
        let z = bivector_of_skew(&s, &Mat::zeros(3, 3)).unwrap();
        assert!(z.is_zero());
        assert!(skew_of_bivector(&s, &Bivector::zero(3)).is_zero());
        assert_eq!(bivector_of_skew(&s, &Mat::identity(3)), Err(Error::NotSkew));
    }

    #[test]
    fn basis_bivectors_map_to_wedges() {
        let s = null_minkowski();
        for (k, &(i, j)) in s.bivectors().pairs().iter().enumerate() {
            let w = Bivector { coords: unit(3, k) };
            assert_eq!(skew_of_bivector(&s, &w), s.wedge_endo(&unit(3, i), &unit(3, j)));
        }
    }

    #[test]
    fn derivation_matrix_is_the_commutator() {
        let s = null_minkowski();
        let a = &s.wedge_endo(&unit(3, 0), &unit(3, 2)) + &s.wedge_endo(&unit(3, 1), &unit(3, 2)).scale(&rat(3));
        let d = derivation_matrix(s.bivectors(), &a);
        for k in 0..3 {
            let w = Bivector { coords: unit(3, k) };
            let lhs = Bivector {
                coords: d.mul_vec(&w.coords),
            };
            let rhs = bivector_of_skew(&s, &a.commutator(&skew_of_bivector(&s, &w))).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn induced_action_maps_wedges() {
        let b = BivectorBasis::new(3);
        let q = Mat::from_rows(vec![
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(1), rat(-1)],
            vec![rat(3), rat(0), rat(1)],
        ]);
        let u = vec![rat(1), rat(-1), rat(2)];
        let v = vec![rat(0), rat(4), rat(1)];
        let lhs = induced_action(&b, &q).mul_vec(&Bivector::wedge(&b, &u, &v).coords);
        let rhs = Bivector::wedge(&b, &q.mul_vec(&u), &q.mul_vec(&v)).coords;
        assert_eq!(lhs, rhs);
    }
}
