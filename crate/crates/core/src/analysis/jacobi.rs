use crate::curvature::CurvatureTensor;
use crate::error::Result;
use crate::exactnum::{axpy, is_zero_vec, Scalar};
use crate::holonomy::{h_span, lie_closure, SkewAlgebra};
use crate::space::MetricSpace;

/// The algebra `g = h ⊕ V` with `[X,Y] = K(X,Y)`, `[A,X] = A(X)` and
/// `[A,B] = AB − BA`, as structure constants on the basis
/// `A₁…A_m, e₁…e_n`.
#[derive(Clone, Debug)]
pub struct SymmetricPair<T> {
    pub h: SkewAlgebra<T>,
    pub space: MetricSpace<T>,
    /// `table[α][β] = [b_α, b_β]` in coordinates.
    table: Vec<Vec<Vec<T>>>,
}

impl<T: Scalar> SymmetricPair<T> {
    /// Requires `h` closed and containing every `K(u,v)`.
    #[allow(clippy::needless_range_loop)]
    pub fn new(k: &CurvatureTensor<T>, h: SkewAlgebra<T>) -> Self {
        let space = k.space().clone();
        let (m, n) = (h.dim(), space.dim());
        let d = m + n;
        let mut table = vec![vec![vec![T::zero(); d]; d]; d];
        let hcoords = |a: &crate::exactnum::Mat<T>| h.coordinates(a).expect("bracket lands in the closed algebra");
        for a in 0..m {
            for b in a + 1..m {
                let c = hcoords(&h.basis()[a].commutator(&h.basis()[b]));
                let mut v = c;
                v.resize(d, T::zero());
                table[b][a] = v.iter().map(|x| -x.clone()).collect();
                table[a][b] = v;
            }
            for i in 0..n {
                let mut v = vec![T::zero(); d];
                for (r, x) in h.basis()[a].col(i).into_iter().enumerate() {
                    v[m + r] = x;
                }
                table[m + i][a] = v.iter().map(|x| -x.clone()).collect();
                table[a][m + i] = v;
            }
        }
        let unit = |i: usize| crate::exactnum::unit::<T>(n, i);
        for i in 0..n {
            for j in i + 1..n {
                let mut v = hcoords(&k.apply_K(&unit(i), &unit(j)));
                v.resize(d, T::zero());
                table[m + j][m + i] = v.iter().map(|x| -x.clone()).collect();
                table[m + i][m + j] = v;
            }
        }
        Self { h, space, table }
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    /// `[b_α, x]` for a basis element and a general vector.
    fn bracket_basis(&self, alpha: usize, x: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.dim()];
        for (beta, c) in x.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.table[alpha][beta]);
            }
        }
        out
    }

    /// `[b_α,[b_β,b_γ]] + [b_β,[b_γ,b_α]] + [b_γ,[b_α,b_β]]`
    pub fn jacobiator(&self, a: usize, b: usize, c: usize) -> Vec<T> {
        let mut out = self.bracket_basis(a, &self.table[b][c]);
        let t = self.bracket_basis(b, &self.table[c][a]);
        axpy(&mut out, &T::one(), &t);
        let t = self.bracket_basis(c, &self.table[a][b]);
        axpy(&mut out, &T::one(), &t);
        out
    }
}

/// Triple types by the number of `h`-basis elements involved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleType {
    Xyz,
    Axy,
    Abx,
    Abc,
}

impl TripleType {
    pub const ALL: [TripleType; 4] = [TripleType::Xyz, TripleType::Axy, TripleType::Abx, TripleType::Abc];

    pub fn label(&self) -> &'static str {
        match self {
            TripleType::Xyz => "(X,Y,Z)",
            TripleType::Axy => "(A,X,Y)",
            TripleType::Abx => "(A,B,X)",
            TripleType::Abc => "(A,B,C)",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TripleCounts {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub holds: bool,
    /// Dimension of `h(K)` before closure.
    pub span_dim: usize,
    /// Dimension of the closed algebra used for `g`.
    pub closure_dim: usize,
    /// Counts indexed like [`TripleType::ALL`].
    pub counts: [TripleCounts; 4],
    /// For each basis element `A` of the closed algebra: all `(A, X, Y)`
    /// Jacobi identities hold.
    pub axy_by_generator: Vec<bool>,
    /// First failing triple of basis indices (h-basis first, then `eᵢ`).
    pub first_failure: Option<(TripleType, usize, usize, usize)>,
}

impl JacobiReport {
    pub fn count(&self, t: TripleType) -> TripleCounts {
        self.counts[TripleType::ALL.iter().position(|x| *x == t).unwrap()]
    }
}

/// Jacobi identity on `g = h̄(K) ⊕ V` over all basis triples.
///
/// The `(X,Y,Z)` part is the first Bianchi identity and the `(A,X,Y)` part
/// is `A.K = 0`; the other two types hold for any matrix algebra.
pub fn jacobi_check<T: Scalar>(k: &CurvatureTensor<T>) -> Result<JacobiReport> {
    let span = h_span(k);
    let h = lie_closure(&span)?;
    Ok(jacobi_check_in(k, span.dim(), h))
}

/// [`jacobi_check`] with the closure `h̄(K)` already computed.
#[allow(clippy::needless_range_loop)]
pub(crate) fn jacobi_check_in<T: Scalar>(k: &CurvatureTensor<T>, span_dim: usize, h: SkewAlgebra<T>) -> JacobiReport {
    let m = h.dim();
    let pair = SymmetricPair::new(k, h);
    let d = pair.dim();
    let mut counts = [TripleCounts::default(); 4];
    let mut axy_by_generator = vec![true; m];
    let mut first_failure = None;
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                let in_h = [a, b, c].iter().filter(|&&x| x < m).count();
                let ty = match in_h {
                    0 => TripleType::Xyz,
                    1 => TripleType::Axy,
                    2 => TripleType::Abx,
                    _ => TripleType::Abc,
                };
                let slot = &mut counts[in_h];
                slot.checked += 1;
                if !is_zero_vec(&pair.jacobiator(a, b, c)) {
                    slot.failed += 1;
                    if ty == TripleType::Axy {
                        axy_by_generator[a] = false;
                    }
                    first_failure.get_or_insert((ty, a, b, c));
                }
            }
        }
    }
    JacobiReport {
        holds: first_failure.is_none(),
        span_dim,
        closure_dim: m,
        counts,
        axy_by_generator,
        first_failure,
    }
}
