//! Holonomy data: the span `h(K)` of all `K(u,v)`, its Lie closure, the
//! algebra and group actions on curvature tensors, and invariant subspaces.

use crate::bivector::{derivation_matrix, induced_action};
use crate::curvature::CurvatureTensor;
use crate::error::{Error, Result};
use crate::exactnum::{
    is_zero_vec, minimal_polynomial, primitive, squarefree_rational_factors, unit, Echelon, Mat, Scalar,
};
use crate::space::MetricSpace;
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

/// A linearly independent family of metric-skew endomorphisms.
#[derive(Clone, Debug)]
pub struct SkewAlgebra<T> {
    space: MetricSpace<T>,
    basis: Vec<Mat<T>>,
    span: Echelon<T>,
    closed: bool,
}

impl<T: Scalar> SkewAlgebra<T> {
    /// Independent subfamily of `generators`, in order. Errors with
    /// `NotSkew` if any generator is not metric-skew.
    pub fn from_generators(space: &MetricSpace<T>, generators: &[Mat<T>]) -> Result<Self> {
        let n = space.dim();
        let mut alg = Self {
            space: space.clone(),
            basis: Vec::new(),
            span: Echelon::new(n * n),
            closed: false,
        };
        for g in generators {
            if !space.is_metric_skew(g) {
                return Err(Error::NotSkew);
            }
            alg.push(g);
        }
        alg.closed = alg.basis.is_empty();
        Ok(alg)
    }

    fn push(&mut self, a: &Mat<T>) -> bool {
        if self.span.insert(a.as_slice()) {
            self.basis.push(a.clone());
            true
        } else {
            false
        }
    }

    pub fn space(&self) -> &MetricSpace<T> {
        &self.space
    }

    pub fn basis(&self) -> &[Mat<T>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether bracket closure has been certified.
    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, a: &Mat<T>) -> bool {
        self.span.contains(a.as_slice())
    }

    /// Coordinates of `a` in the basis, if `a` lies in the span.
    pub fn coordinates(&self, a: &Mat<T>) -> Option<Vec<T>> {
        self.span.coordinates(a.as_slice())
    }

    /// Exact check that every bracket of basis elements lies in the span.
    pub fn brackets_close(&self) -> bool {
        (0..self.dim()).all(|i| (i + 1..self.dim()).all(|j| self.contains(&self.basis[i].commutator(&self.basis[j]))))
    }
}

/// `h(K) = span{K(eᵢ, eⱼ)}`.
pub fn h_span<T: Scalar>(k: &CurvatureTensor<T>) -> SkewAlgebra<T> {
    SkewAlgebra::from_generators(k.space(), &k.basis_endomorphisms()).expect("K(u,v) is metric-skew")
}

/// Smallest Lie subalgebra containing `alg`.
pub fn lie_closure<T: Scalar>(alg: &SkewAlgebra<T>) -> Result<SkewAlgebra<T>> {
    let mut out = alg.clone();
    let cap = out.space.bivectors().len() + 1;
    // Brackets of every element with the ones added in the previous round.
    let mut fresh = 0;
    for _ in 0..=cap {
        let end = out.dim();
        let mut added = false;
        for j in fresh..end {
            for i in 0..j {
                let c = out.basis[i].commutator(&out.basis[j]);
                added |= out.push(&c);
            }
        }
        if !added {
            out.closed = true;
            debug_assert!(out.brackets_close());
            return Ok(out);
        }
        fresh = end;
    }
    Err(Error::IterationCap { rounds: cap })
}

/// `(A.K)(ω) = [A, K(ω)] − K([A, ω])`, i.e. `D_A·T − T·D_A` on `Λ²V`.
pub fn act_algebra<T: Scalar>(a: &Mat<T>, k: &CurvatureTensor<T>) -> Result<CurvatureTensor<T>> {
    if !k.space().is_metric_skew(a) {
        return Err(Error::NotSkew);
    }
    let d = derivation_matrix(k.space().bivectors(), a);
    let t = k.matrix();
    Ok(k.with_matrix(&(&d * t) - &(t * &d)))
}

/// `(σ.K)(a,b) = σ∘K(σ⁻¹a, σ⁻¹b)∘σ⁻¹`, i.e. `Λ²σ · T · Λ²σ⁻¹`.
pub fn act_group<T: Scalar>(q: &Mat<T>, k: &CurvatureTensor<T>) -> Result<CurvatureTensor<T>> {
    if !k.space().is_isometry(q) {
        return Err(Error::NotIsometry);
    }
    let q_inv = q.inverse().ok_or(Error::NotIsometry)?;
    let basis = k.space().bivectors();
    let l = induced_action(basis, q);
    let l_inv = induced_action(basis, &q_inv);
    Ok(k.with_matrix(&(&l * k.matrix()) * &l_inv))
}

/// Cayley transform `(I − S)(I + S)⁻¹` of a metric-skew `S`, a rational
/// isometry whenever `I + S` is invertible.
pub fn cayley<T: Scalar>(space: &MetricSpace<T>, s: &Mat<T>) -> Result<Mat<T>> {
    if !space.is_metric_skew(s) {
        return Err(Error::NotSkew);
    }
    let id = Mat::identity(space.dim());
    let inv = (&id + s).inverse().ok_or_else(|| Error::Validation {
        invariant: "cayley".into(),
        witness: "I + S is singular".into(),
    })?;
    Ok(&(&id - s) * &inv)
}

/// A subspace of a metric space, with its restricted Gram rank.
#[derive(Clone, Debug)]
pub struct Subspace<T> {
    space: MetricSpace<T>,
    basis: Vec<Vec<T>>,
    restricted_gram_rank: usize,
}

impl<T: Scalar> PartialEq for Subspace<T> {
    /// Equality as subspaces, not as bases.
    fn eq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }
}

impl<T: Scalar> Subspace<T> {
    /// Span of `vectors`: dependent vectors are dropped, order is kept and
    /// each kept vector is rescaled to coprime integers (exact scalars).
    pub fn span(space: &MetricSpace<T>, vectors: &[Vec<T>]) -> Self {
        let mut e = Echelon::new(space.dim());
        for v in vectors {
            e.insert(v);
        }
        let basis: Vec<Vec<T>> = e.into_basis().iter().map(|v| primitive(v)).collect();
        let gram = Mat::from_fn(basis.len(), basis.len(), |i, j| space.inner(&basis[i], &basis[j]));
        Self {
            space: space.clone(),
            restricted_gram_rank: gram.rank(),
            basis,
        }
    }

    pub fn zero(space: &MetricSpace<T>) -> Self {
        Self::span(space, &[])
    }

    pub fn whole(space: &MetricSpace<T>) -> Self {
        let n = space.dim();
        Self::span(space, &(0..n).map(|i| unit(n, i)).collect::<Vec<_>>())
    }

    pub fn space(&self) -> &MetricSpace<T> {
        &self.space
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn restricted_gram(&self) -> Mat<T> {
        let b = &self.basis;
        Mat::from_fn(b.len(), b.len(), |i, j| self.space.inner(&b[i], &b[j]))
    }

    pub fn restricted_gram_rank(&self) -> usize {
        self.restricted_gram_rank
    }

    pub fn is_degenerate(&self) -> bool {
        self.restricted_gram_rank < self.dim()
    }

    pub fn is_totally_isotropic(&self) -> bool {
        self.restricted_gram_rank == 0
    }

    /// `(positive, negative, zero)` of the restricted form.
    pub fn inertia(&self) -> (usize, usize, usize) {
        crate::space::inertia(&self.restricted_gram())
    }

    /// Nondegenerate with a definite restricted form.
    pub fn is_definite(&self) -> bool {
        let (p, q, z) = self.inertia();
        z == 0 && (p == 0 || q == 0)
    }

    fn echelon(&self) -> Echelon<T> {
        let mut e = Echelon::new(self.space.dim());
        for v in &self.basis {
            e.insert(v);
        }
        e
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.echelon().contains(v)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        let e = self.echelon();
        other.basis.iter().all(|v| e.contains(v))
    }

    /// Coordinates of `v` in the basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        self.echelon().coordinates(v)
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::span(&self.space, &all)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.space.dim();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Self::zero(&self.space);
        }
        let m = Mat::from_fn(n, a + b, |i, j| {
            if j < a {
                self.basis[j][i].clone()
            } else {
                -other.basis[j - a][i].clone()
            }
        });
        let vectors: Vec<Vec<T>> = m.kernel().iter().map(|c| self.combine(&c[..a])).collect();
        Self::span(&self.space, &vectors)
    }

    fn combine(&self, coeffs: &[T]) -> Vec<T> {
        let mut v = vec![T::zero(); self.space.dim()];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            crate::exactnum::axpy(&mut v, c, b);
        }
        v
    }

    /// `{u ∈ self : ⟨u, w⟩ = 0 for all w ∈ other}`.
    pub fn orthogonal_within(&self, other: &Self) -> Self {
        if other.dim() == 0 {
            return self.clone();
        }
        let m = Mat::from_fn(other.dim(), self.dim(), |i, j| {
            self.space.inner(&other.basis[i], &self.basis[j])
        });
        let vectors: Vec<Vec<T>> = m.kernel().iter().map(|c| self.combine(c)).collect();
        Self::span(&self.space, &vectors)
    }

    /// `other^⊥` in the whole space.
    pub fn orthogonal_complement(&self) -> Self {
        Self::whole(&self.space).orthogonal_within(self)
    }

    /// Radical `U ∩ U^⊥`.
    pub fn radical(&self) -> Self {
        self.orthogonal_within(self)
    }

    /// `A(U)` summed over a family of endomorphisms.
    pub fn image_under(&self, maps: &[Mat<T>]) -> Self {
        let vectors: Vec<Vec<T>> = maps
            .iter()
            .flat_map(|a| self.basis.iter().map(move |v| a.mul_vec(v)))
            .collect();
        Self::span(&self.space, &vectors)
    }

    pub fn is_invariant_under(&self, maps: &[Mat<T>]) -> bool {
        let e = self.echelon();
        maps.iter()
            .all(|a| self.basis.iter().all(|v| e.contains(&a.mul_vec(v))))
    }

    /// Matrices of the maps restricted to an invariant subspace, in its basis.
    pub fn restrict(&self, maps: &[Mat<T>]) -> Option<Vec<Mat<T>>> {
        let e = self.echelon();
        let m = self.dim();
        maps.iter()
            .map(|a| {
                let cols: Option<Vec<Vec<T>>> = self.basis.iter().map(|v| e.coordinates(&a.mul_vec(v))).collect();
                cols.map(|c| Mat::from_cols(m, &c))
            })
            .collect()
    }

    /// `G`-orthogonal projection onto a nondegenerate subspace.
    pub fn project(&self, v: &[T]) -> Option<Vec<T>> {
        let rhs: Vec<T> = self.basis.iter().map(|b| self.space.inner(b, v)).collect();
        let c = self.restricted_gram().solve(&rhs)?;
        Some(self.combine(&c))
    }
}

/// Smallest subspace containing `seed` and invariant under `maps`.
pub fn orbit_span<T: Scalar>(space: &MetricSpace<T>, maps: &[Mat<T>], seed: &[T]) -> Subspace<T> {
    let mut e = Echelon::new(space.dim());
    let mut queue = Vec::new();
    if e.insert(seed) {
        queue.push(seed.to_vec());
    }
    while let Some(v) = queue.pop() {
        for a in maps {
            let w = a.mul_vec(&v);
            if !is_zero_vec(&w) && e.insert(&w) {
                queue.push(w);
            }
        }
    }
    Subspace::span(space, e.basis())
}

/// Common kernel of a family of endomorphisms.
pub fn common_kernel<T: Scalar>(space: &MetricSpace<T>, maps: &[Mat<T>]) -> Subspace<T> {
    let n = space.dim();
    if maps.is_empty() {
        return Subspace::whole(space);
    }
    let stacked = Mat::from_fn(n * maps.len(), n, |i, j| maps[i / n][(i % n, j)].clone());
    Subspace::span(space, &stacked.kernel())
}

/// Result of [`invariant_subspace_split`].
#[derive(Clone, Debug)]
pub struct InvariantSplit<T> {
    /// Common kernel of the algebra.
    pub v0: Subspace<T>,
    /// The images `h·Uⱼ` of the nondegenerate pieces `Uⱼ` that carry a
    /// nonzero action, in discovery order.
    pub components: Vec<Subspace<T>>,
    /// The nondegenerate invariant pieces `Uⱼ` themselves, `V = ⊕ Uⱼ`.
    pub pieces: Vec<Subspace<T>>,
    /// Per piece: indecomposability proven (not only heuristic).
    pub piece_certified: Vec<bool>,
    /// All pieces certified.
    pub certified: bool,
}

const PROBES: usize = 20;
const PROBE_SEED: u64 = 0x005e_ed0f_0b17;

/// Splits `V` orthogonally into nondegenerate invariant pieces.
///
/// Candidates for a split of a piece `U` are, in order: the common kernel
/// on `U` and `h·U`; primary components of self-adjoint elements of the
/// commutant of `h` on `U` (basis elements, then pseudo-random
/// combinations); orbit spans of the projections of the standard basis
/// onto `U`; orbit spans of 20 pseudo-random vectors of `U`. Every subspace candidate is
/// also tried through its radical and its orthogonal complement in `U`.
///
/// A piece that does not split is certified indecomposable when it has
/// dimension at most one, when the algebra restricts to all of `so(U)`, or
/// when its self-adjoint commutant is only the scalars (an orthogonal
/// invariant splitting would contribute its projection). Otherwise the
/// verdict is heuristic.
pub fn invariant_subspace_split<T: Scalar>(alg: &SkewAlgebra<T>) -> InvariantSplit<T> {
    let space = alg.space();
    let maps = alg.basis();
    let v0 = common_kernel(space, maps);
    let mut rng = SplitMix64::seed_from_u64(PROBE_SEED);
    let mut pending = vec![Subspace::whole(space)];
    let mut pieces = Vec::new();
    while let Some(u) = pending.pop() {
        match find_split(space, maps, &u, &mut rng) {
            Some(c) => {
                let rest = u.orthogonal_within(&c);
                // Keep discovery order stable: process `c` before its complement.
                pending.push(rest);
                pending.push(c);
            }
            None => pieces.push(u),
        }
    }
    let mut components = Vec::new();
    let mut piece_certified = Vec::new();
    for u in &pieces {
        let image = u.image_under(maps);
        let ok = image.dim() == 0
            || u.dim() <= 1
            || restricts_to_full(u, maps)
            || self_adjoint_commutant(u, maps).len() == 1;
        piece_certified.push(ok);
        if image.dim() > 0 {
            components.push(image);
        }
    }
    let certified = piece_certified.iter().all(|&c| c);
    InvariantSplit {
        v0,
        components,
        pieces,
        piece_certified,
        certified,
    }
}

fn restricts_to_full<T: Scalar>(u: &Subspace<T>, maps: &[Mat<T>]) -> bool {
    let m = u.dim();
    let Some(restricted) = u.restrict(maps) else {
        return false;
    };
    let mut e = Echelon::new(m * m);
    for r in &restricted {
        e.insert(r.as_slice());
    }
    e.dim() == m * (m - 1) / 2
}

fn find_split<T: Scalar>(
    space: &MetricSpace<T>,
    maps: &[Mat<T>],
    u: &Subspace<T>,
    rng: &mut SplitMix64,
) -> Option<Subspace<T>> {
    let m = u.dim();
    if m <= 1 {
        return None;
    }
    let usable = |c: &Subspace<T>| c.dim() > 0 && c.dim() < m && !c.is_degenerate();
    let try_candidate = |w: Subspace<T>| -> Option<Subspace<T>> {
        let radical = w.radical();
        let perp = u.orthogonal_within(&w);
        let perp_radical = perp.radical();
        [w, radical, perp, perp_radical].into_iter().find(|c| usable(c))
    };
    let kernel = common_kernel(space, maps).intersection(u);
    if let Some(c) = try_candidate(kernel) {
        return Some(c);
    }
    if let Some(c) = try_candidate(u.image_under(maps)) {
        return Some(c);
    }
    let commutant = self_adjoint_commutant(u, maps);
    if commutant.len() > 1 {
        let mut probes = commutant.clone();
        for _ in 0..PROBES {
            let mut c = Mat::zeros(m, m);
            for b in &commutant {
                c = &c + &b.scale(&small_int(rng));
            }
            probes.push(c);
        }
        for c in &probes {
            if let Some(w) = primary_component(u, c) {
                if let Some(c) = try_candidate(w) {
                    return Some(c);
                }
            }
        }
    }
    let n = space.dim();
    for seed in (0..n).filter_map(|i| u.project(&unit(n, i))) {
        if !is_zero_vec(&seed) {
            if let Some(c) = try_candidate(orbit_span(space, maps, &seed)) {
                return Some(c);
            }
        }
    }
    for _ in 0..PROBES {
        let coeffs: Vec<T> = (0..m).map(|_| small_int(rng)).collect();
        let seed = u.combine(&coeffs);
        if !is_zero_vec(&seed) {
            if let Some(c) = try_candidate(orbit_span(space, maps, &seed)) {
                return Some(c);
            }
        }
    }
    None
}

fn small_int<T: Scalar>(rng: &mut SplitMix64) -> T {
    T::from_int((rng.next_u64() % 7) as i64 - 3)
}

/// Basis (in `U`-coordinates) of `{C : [C, A|_U] = 0 for all A, C self-adjoint on U}`.
/// Requires `U` invariant and nondegenerate.
///
/// Starts from the self-adjoint maps `g⁻¹S`, `S` symmetric, and cuts the
/// family down one map at a time, which keeps each linear system small.
fn self_adjoint_commutant<T: Scalar>(u: &Subspace<T>, maps: &[Mat<T>]) -> Vec<Mat<T>> {
    let m = u.dim();
    let Some(restricted) = u.restrict(maps) else {
        return Vec::new();
    };
    let Some(g_inv) = u.restricted_gram().inverse() else {
        return Vec::new();
    };
    let mut family: Vec<Mat<T>> = Vec::new();
    for i in 0..m {
        for j in i..m {
            let mut sym = Mat::zeros(m, m);
            sym[(i, j)] = T::one();
            sym[(j, i)] = T::one();
            family.push(&g_inv * &sym);
        }
    }
    for a in restricted.iter().filter(|a| !a.is_zero()) {
        if family.len() <= 1 {
            break;
        }
        let cols: Vec<Vec<T>> = family.iter().map(|c| c.commutator(a).as_slice().to_vec()).collect();
        let system = Mat::from_cols(m * m, &cols);
        family = system
            .kernel()
            .into_iter()
            .map(|coeffs| {
                let mut c = Mat::zeros(m, m);
                for (x, b) in coeffs.iter().zip(&family) {
                    if !x.is_zero() {
                        c = &c + &b.scale(x);
                    }
                }
                c
            })
            .collect();
    }
    family
}

/// `ker f(C)^k ⊆ U` for the first primary factor `f^k` of `C`'s minimal
/// polynomial, when there are at least two coprime factors.
fn primary_component<T: Scalar>(u: &Subspace<T>, c: &Mat<T>) -> Option<Subspace<T>> {
    let factors = squarefree_rational_factors(&minimal_polynomial(c));
    if factors.len() < 2 {
        return None;
    }
    let (f, k) = &factors[0];
    let kernel = f.pow(*k).eval_matrix(c).kernel();
    let vectors: Vec<Vec<T>> = kernel.iter().map(|x| u.combine(x)).collect();
    Some(Subspace::span(u.space(), &vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivector::vee_bivectors;
    use crate::bivector::Bivector;
    use crate::exactnum::{frac, rat, Rational};

    type Q = Rational;

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

    fn isotropic_example() -> CurvatureTensor<Q> {
        let s = null_minkowski();
        let px = Bivector::wedge(s.bivectors(), &e(3, 0), &e(3, 2));
        let t = vee_bivectors(&s, &px, &px);
        CurvatureTensor::new(s, t).unwrap()
    }

    #[test]
    fn span_examples() {
        let s = MetricSpace::<Q>::euclidean(3);
        assert_eq!(h_span(&CurvatureTensor::zero(&s)).dim(), 0);
        assert_eq!(h_span(&CurvatureTensor::constant(&s, rat(2))).dim(), 3);
        let k = isotropic_example();
        let h = h_span(&k);
        assert_eq!(h.dim(), 1);
        assert!(h.contains(&k.space().wedge_endo(&e(3, 0), &e(3, 2))));
    }

    #[test]
    fn closure_examples() {
        let s = MetricSpace::<Q>::euclidean(3);
        let a = SkewAlgebra::from_generators(&s, &[s.wedge_endo(&e(3, 0), &e(3, 1))]).unwrap();
        assert_eq!(lie_closure(&a).unwrap().dim(), 1);
        let b = SkewAlgebra::from_generators(
            &s,
            &[s.wedge_endo(&e(3, 0), &e(3, 1)), s.wedge_endo(&e(3, 1), &e(3, 2))],
        )
        .unwrap();
        let c = lie_closure(&b).unwrap();
        assert_eq!(c.dim(), 3);
        assert!(c.is_closed() && c.brackets_close());
        assert!(c.contains(&s.wedge_endo(&e(3, 0), &e(3, 2))));
        assert_eq!(lie_closure(&c).unwrap().dim(), 3);
        assert_eq!(
            SkewAlgebra::from_generators(&s, &[Mat::identity(3)]).unwrap_err(),
            Error::NotSkew
        );
    }

    #[test]
    fn algebra_action_examples() {
        let s = MetricSpace::<Q>::standard(2, 1);
        let k = CurvatureTensor::constant(&s, rat(3));
        assert!(act_algebra(&Mat::zeros(3, 3), &k).unwrap().is_zero());
        let a = &s.wedge_endo(&e(3, 0), &e(3, 2)) + &s.wedge_endo(&e(3, 1), &e(3, 2)).scale(&rat(2));
        assert!(act_algebra(&a, &k).unwrap().is_zero());
        let iso = isotropic_example();
        let px = iso.space().wedge_endo(&e(3, 0), &e(3, 2));
        assert!(act_algebra(&px, &iso).unwrap().is_zero());
        assert_eq!(act_algebra(&Mat::identity(3), &k).unwrap_err(), Error::NotSkew);
    }

    #[test]
    fn algebra_action_matches_endomorphism_formula() {
        // (A.K)(a,b) = [A, K(a,b)] − K(Aa, b) − K(a, Ab)
        let iso = isotropic_example();
        let s = iso.space().clone();
        let a = s.wedge_endo(&e(3, 1), &e(3, 2));
        let ak = act_algebra(&a, &iso).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let (u, v) = (e(3, i), e(3, j));
                let expected = &(&a.commutator(&iso.apply_K(&u, &v)) - &iso.apply_K(&a.mul_vec(&u), &v))
                    - &iso.apply_K(&u, &a.mul_vec(&v));
                assert_eq!(ak.apply_K(&u, &v), expected);
            }
        }
    }

    #[test]
    fn group_action_examples() {
        let s = MetricSpace::<Q>::standard(2, 1);
        let k = isotropic_example();
        assert_eq!(act_group(&Mat::identity(3), &k).unwrap(), k);
        assert_eq!(act_group(&Mat::identity(3).scale(&rat(-1)), &k).unwrap(), k);
        let skew = &s.wedge_endo(&e(3, 0), &e(3, 1)) + &s.wedge_endo(&e(3, 1), &e(3, 2)).scale(&frac(1, 2));
        let q = cayley(&s, &skew).unwrap();
        assert!(s.is_isometry(&q));
        let c = CurvatureTensor::constant(&s, frac(-2, 3));
        assert_eq!(act_group(&q, &c).unwrap(), c);
        assert_eq!(
            act_group(&Mat::identity(3).scale(&rat(2)), &c).unwrap_err(),
            Error::NotIsometry
        );
    }

    #[test]
    fn group_action_conjugates_ricci() {
        let k = isotropic_example();
        let s = k.space().clone();
        let skew = s.wedge_endo(&[rat(1), rat(2), rat(0)], &[rat(0), rat(1), rat(1)]);
        let q = cayley(&s, &skew).unwrap();
        let moved = act_group(&q, &k).unwrap();
        let lhs = moved.ricci().operator;
        let rhs = &(&q * &k.ricci().operator) * &q.inverse().unwrap();
        assert_eq!(lhs, rhs);
        assert!(CurvatureTensor::new(s, moved.matrix().clone()).is_ok());
    }

    #[test]
    fn split_of_zero_algebra() {
        let s = MetricSpace::<Q>::euclidean(3);
        let split = invariant_subspace_split(&SkewAlgebra::from_generators(&s, &[]).unwrap());
        assert_eq!(split.v0.dim(), 3);
        assert!(split.components.is_empty());
    }

    #[test]
    fn split_of_plane_rotation() {
        let s = MetricSpace::<Q>::euclidean(3);
        let alg = SkewAlgebra::from_generators(&s, &[s.wedge_endo(&e(3, 0), &e(3, 1))]).unwrap();
        let split = invariant_subspace_split(&alg);
        assert_eq!(split.v0, Subspace::span(&s, &[e(3, 2)]));
        assert_eq!(split.components.len(), 1);
        assert_eq!(split.components[0], Subspace::span(&s, &[e(3, 0), e(3, 1)]));
        assert!(split.certified);
    }

    #[test]
    fn split_of_null_rotation() {
        let k = isotropic_example();
        let s = k.space().clone();
        let split = invariant_subspace_split(&h_span(&k));
        let p = e(3, 0);
        assert_eq!(split.v0, Subspace::span(&s, std::slice::from_ref(&p)));
        assert_eq!(orbit_span(&s, h_span(&k).basis(), &e(3, 1)).dim(), 3);
        assert_eq!(split.components.len(), 1);
        let v1 = &split.components[0];
        assert_eq!(*v1, Subspace::span(&s, &[p.clone(), e(3, 2)]));
        let w = split.v0.intersection(v1);
        assert_eq!(w.dim(), 1);
        assert!(w.is_totally_isotropic());
        assert!(!split.certified);
    }

    #[test]
    fn subspace_operations() {
        let s = null_minkowski();
        let a = Subspace::span(&s, &[e(3, 0), e(3, 2)]);
        let b = Subspace::span(&s, &[e(3, 1), e(3, 2)]);
        assert_eq!(a.intersection(&b), Subspace::span(&s, &[e(3, 2)]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.radical(), Subspace::span(&s, &[e(3, 0)]));
        assert_eq!(a.orthogonal_complement(), Subspace::span(&s, &[e(3, 0)]));
        assert!(a.is_degenerate() && !a.is_totally_isotropic());
        assert!(Subspace::span(&s, &[e(3, 0)]).is_totally_isotropic());
        assert!(b.project(&[rat(1), rat(1), rat(1)]).is_none());
    }
}
