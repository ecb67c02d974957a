//! Seeded constructors of curvature tensors.
//!
//! All randomness comes from SplitMix64 (state `x ← x + 0x9E3779B97F4A7C15`,
//! output mixed by `z ← (z ^ (z >> 30))·0xBF58476D1CE4E5B9`,
//! `z ← (z ^ (z >> 27))·0x94D049BB133111EB`, `z ^ (z >> 31)`), seeded with
//! the spec's 64-bit seed as the initial state. An integer in `[0, k)` is
//! drawn as `next_u64() % k`. Every draw below is made in a fixed order, so
//! a spec determines its instance bit for bit.

use crate::analysis::{is_semisymmetric, SemisymmetryWitness};
use crate::bivector::{induced_action, vee_bivectors, Bivector};
use crate::curvature::{project_to_curvature, CurvatureTensor};
use crate::error::{Error, Result};
use crate::exactnum::{frac, rat, Mat, Rational};
use crate::holonomy::{act_group, cayley};
use crate::io::rational_string;
use crate::space::MetricSpace;
use num_traits::{One, Zero};
use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

type Q = Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Constant,
    Product,
    DirectSum,
    Isotropic,
    RandomSemisym,
    Adversarial,
}

/// One orthogonal summand of a generated instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BlockSpec {
    Flat {
        positive: usize,
        negative: usize,
    },
    Constant {
        positive: usize,
        negative: usize,
        #[serde(with = "rational_string")]
        lambda: Q,
    },
    /// Hyperbolic pair `(p, q)` plus `positive − 1` spacelike and
    /// `negative − 1` timelike unit vectors `xₐ`, with
    /// `K = Σ Sₐᵦ (p∧xₐ)∨(p∧xᵦ)` for a seeded symmetric `S`.
    Isotropic {
        positive: usize,
        negative: usize,
    },
}

impl BlockSpec {
    pub fn dim(&self) -> usize {
        match self {
            BlockSpec::Flat { positive, negative }
            | BlockSpec::Constant { positive, negative, .. }
            | BlockSpec::Isotropic { positive, negative } => positive + negative,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub kind: GeneratorKind,
    /// Summands for `constant`, `direct_sum`, `isotropic`, `random_semisym`
    /// and the base of `adversarial`.
    #[serde(default)]
    pub blocks: Vec<BlockSpec>,
    /// Signature `(p, q)` for `product`.
    #[serde(default)]
    pub signature: Option<(usize, usize)>,
    /// Number of random `(a∧b)∨(c∧d)` terms for `product`.
    #[serde(default)]
    pub terms: usize,
    /// Perturbation scale for `adversarial`; defaults to 1.
    #[serde(default, with = "rational_string::option")]
    pub epsilon: Option<Q>,
    /// Conjugate by a seeded Cayley isometry (`random_semisym`, `adversarial`).
    #[serde(default)]
    pub conjugate: bool,
    /// Follow with a seeded unimodular change of basis, so the Gram matrix
    /// is no longer diagonal.
    #[serde(default)]
    pub change_basis: bool,
}

impl GeneratorSpec {
    pub fn new(seed: u64, kind: GeneratorKind, blocks: Vec<BlockSpec>) -> Self {
        Self {
            seed,
            kind,
            blocks,
            signature: None,
            terms: 0,
            epsilon: None,
            conjugate: false,
            change_basis: false,
        }
    }
}

/// Thin wrapper fixing how values are drawn.
pub struct Draw {
    rng: SplitMix64,
}

impl Draw {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform-ish integer in `[lo, hi]` as `lo + next_u64() % (hi − lo + 1)`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    /// `num/den` with `num ∈ [−m, m]`, `den ∈ [1, 3]`.
    pub fn rational(&mut self, m: i64) -> Q {
        let num = self.int(-m, m);
        let den = self.int(1, 3);
        frac(num, den)
    }

    pub fn nonzero_rational(&mut self, m: i64) -> Q {
        loop {
            let r = self.rational(m);
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn vector(&mut self, n: usize, m: i64) -> Vec<Q> {
        (0..n).map(|_| rat(self.int(-m, m))).collect()
    }
}

/// `K = λ·Id` on `Λ²V`.
pub fn constant_curvature(space: &MetricSpace<Q>, lambda: Q) -> CurvatureTensor<Q> {
    CurvatureTensor::constant(space, lambda)
}

/// `(a, b, c, d, coefficient)` of one `(a∧b)∨(c∧d)` term.
pub type Quadruple = (Vec<Q>, Vec<Q>, Vec<Q>, Vec<Q>, Q);

/// `Σ c·(a∧b)∨(c∧d)` projected to the kernel of the Bianchi map.
pub fn product_tensor(space: &MetricSpace<Q>, quadruples: &[Quadruple]) -> CurvatureTensor<Q> {
    let n = space.bivectors().len();
    let mut t = Mat::zeros(n, n);
    for (a, b, c, d, coeff) in quadruples {
        let ab = Bivector::wedge(space.bivectors(), a, b);
        let cd = Bivector::wedge(space.bivectors(), c, d);
        t = &t + &vee_bivectors(space, &ab, &cd).scale(coeff);
    }
    project_to_curvature(space, &t)
}

/// Orthogonal direct sum, with `K` block-diagonal on `Λ²` and zero on mixed
/// bivectors.
pub fn direct_sum(blocks: &[(MetricSpace<Q>, CurvatureTensor<Q>)]) -> (MetricSpace<Q>, CurvatureTensor<Q>) {
    let spaces: Vec<&MetricSpace<Q>> = blocks.iter().map(|(s, _)| s).collect();
    let total = MetricSpace::direct_sum(&spaces);
    let basis = total.bivectors();
    let mut t = Mat::zeros(basis.len(), basis.len());
    let mut offset = 0;
    for (s, k) in blocks {
        let local = s.bivectors();
        let global: Vec<usize> = local
            .pairs()
            .iter()
            .map(|&(i, j)| basis.index(offset + i, offset + j))
            .collect();
        for (a, &ga) in global.iter().enumerate() {
            for (b, &gb) in global.iter().enumerate() {
                t[(ga, gb)] = k.matrix()[(a, b)].clone();
            }
        }
        offset += s.dim();
    }
    let k = CurvatureTensor::from_parts_unchecked(total.clone(), t);
    (total, k)
}

/// `(V, K)` rewritten in the basis `fⱼ = Σᵢ Pᵢⱼ eᵢ`: Gram `PᵀGP`, tensor
/// `Λ²P⁻¹ · T · Λ²P`.
pub fn change_basis(
    space: &MetricSpace<Q>,
    k: &CurvatureTensor<Q>,
    p: &Mat<Q>,
) -> Result<(MetricSpace<Q>, CurvatureTensor<Q>)> {
    let p_inv = p.inverse().ok_or(Error::DegenerateMetric)?;
    let new_space = MetricSpace::new(space.gram().congruence(p))?;
    let basis = space.bivectors();
    let t = &(&induced_action(basis, &p_inv) * k.matrix()) * &induced_action(basis, p);
    let k = CurvatureTensor::from_parts_unchecked(new_space.clone(), t);
    Ok((new_space, k))
}

fn block_space(positive: usize, negative: usize) -> MetricSpace<Q> {
    MetricSpace::standard(positive, negative)
}

/// Hyperbolic pair first: Gram `[[0,1],[1,0]] ⊕ diag(1…, −1…)`.
fn isotropic_space(positive: usize, negative: usize) -> MetricSpace<Q> {
    let m = positive + negative - 2;
    let mut g = Mat::zeros(m + 2, m + 2);
    g[(0, 1)] = rat(1);
    g[(1, 0)] = rat(1);
    for a in 0..m {
        g[(a + 2, a + 2)] = if a < positive - 1 { rat(1) } else { rat(-1) };
    }
    MetricSpace::new(g).expect("hyperbolic pair plus unit vectors")
}

/// `Σ Sₐᵦ (p∧xₐ)∨(p∧xᵦ)` on [`isotropic_space`], with `p = e₀`, `xₐ = e_{a+2}`.
pub fn isotropic_tensor(space: &MetricSpace<Q>, s: &Mat<Q>) -> CurvatureTensor<Q> {
    let n = space.dim();
    let e = |i: usize| crate::exactnum::unit::<Q>(n, i);
    let mut quads = Vec::new();
    for a in 0..s.rows() {
        for b in 0..s.cols() {
            if !s[(a, b)].is_zero() {
                quads.push((e(0), e(a + 2), e(0), e(b + 2), s[(a, b)].clone()));
            }
        }
    }
    product_tensor(space, &quads)
}

fn build_block(block: &BlockSpec, draw: &mut Draw) -> Result<(MetricSpace<Q>, CurvatureTensor<Q>)> {
    match *block {
        BlockSpec::Flat { positive, negative } => {
            let s = block_space(positive, negative);
            let k = CurvatureTensor::zero(&s);
            Ok((s, k))
        }
        BlockSpec::Constant {
            positive,
            negative,
            ref lambda,
        } => {
            let s = block_space(positive, negative);
            let k = constant_curvature(&s, lambda.clone());
            Ok((s, k))
        }
        BlockSpec::Isotropic { positive, negative } => {
            if positive == 0 || negative == 0 {
                return Err(Error::SpecInvalid(format!(
                    "isotropic block needs an indefinite signature, got ({positive},{negative})"
                )));
            }
            let s = isotropic_space(positive, negative);
            let m = positive + negative - 2;
            let mut sym = Mat::zeros(m, m);
            for a in 0..m {
                for b in a..m {
                    let v = draw.rational(3);
                    sym[(a, b)] = v.clone();
                    sym[(b, a)] = v;
                }
            }
            let k = isotropic_tensor(&s, &sym);
            Ok((s, k))
        }
    }
}

/// Rational metric-skew `S = W·G` from a random antisymmetric `W`, redrawn
/// until `I + S` is invertible.
pub fn random_skew(space: &MetricSpace<Q>, draw: &mut Draw) -> Mat<Q> {
    let n = space.dim();
    loop {
        let mut w = Mat::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = rat(draw.int(-1, 1));
                w[(i, j)] = v.clone();
                w[(j, i)] = -v;
            }
        }
        let s = &w * space.gram();
        if (&Mat::identity(n) + &s).inverse().is_some() {
            return s;
        }
    }
}

pub fn random_isometry(space: &MetricSpace<Q>, draw: &mut Draw) -> Mat<Q> {
    let s = random_skew(space, draw);
    cayley(space, &s).expect("I + S invertible by construction")
}

/// Unit upper-triangular matrix with entries in `{−1, 0, 1}` above the diagonal.
pub fn random_unimodular(n: usize, draw: &mut Draw) -> Mat<Q> {
    Mat::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Q::one(),
        std::cmp::Ordering::Less => rat(draw.int(-1, 1)),
        std::cmp::Ordering::Greater => Q::zero(),
    })
}

/// Direct sum of the spec's blocks, then (optionally) a Cayley conjugation
/// and a change of basis. The result is checked to be semi-symmetric.
pub fn random_semisymmetric(spec: &GeneratorSpec) -> Result<(MetricSpace<Q>, CurvatureTensor<Q>)> {
    let mut draw = Draw::new(spec.seed);
    let (s, k) = assemble(spec, &mut draw)?;
    if let Some(w) = is_semisymmetric(&k).witness {
        return Err(Error::Internal(format!("generated tensor is not semi-symmetric: {w}")));
    }
    Ok((s, k))
}

fn assemble(spec: &GeneratorSpec, draw: &mut Draw) -> Result<(MetricSpace<Q>, CurvatureTensor<Q>)> {
    if spec.blocks.is_empty() {
        return Err(Error::SpecInvalid("no blocks given".into()));
    }
    let parts: Vec<(MetricSpace<Q>, CurvatureTensor<Q>)> = spec
        .blocks
        .iter()
        .map(|b| build_block(b, draw))
        .collect::<Result<_>>()?;
    let (mut s, mut k) = if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        direct_sum(&parts)
    };
    if spec.conjugate {
        let q = random_isometry(&s, draw);
        k = act_group(&q, &k)?;
    }
    if spec.change_basis {
        let p = random_unimodular(s.dim(), draw);
        (s, k) = change_basis(&s, &k, &p)?;
    }
    Ok((s, k))
}

/// A non-semi-symmetric perturbation together with its provenance.
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub tensor: CurvatureTensor<Q>,
    /// Number of draws rejected before success.
    pub retries: usize,
    pub witness: Option<SemisymmetryWitness<Q>>,
}

pub const MAX_RETRIES: usize = 1000;

/// `K + ε·P((a∧b)∨(c∧d))` for seeded vectors, redrawn until the result is
/// not semi-symmetric. With `ε = 0` the input is returned unchanged.
pub fn adversarial_perturbation(k: &CurvatureTensor<Q>, seed: u64, epsilon: &Q) -> Result<Perturbation> {
    if epsilon.is_zero() {
        return Ok(Perturbation {
            tensor: k.clone(),
            retries: 0,
            witness: is_semisymmetric(k).witness,
        });
    }
    let s = k.space();
    let n = s.dim();
    let mut draw = Draw::new(seed);
    for retries in 0..MAX_RETRIES {
        let (a, b, c, d) = (
            draw.vector(n, 2),
            draw.vector(n, 2),
            draw.vector(n, 2),
            draw.vector(n, 2),
        );
        let p = product_tensor(s, &[(a, b, c, d, epsilon.clone())]);
        let candidate = k.with_matrix(k.matrix() + p.matrix());
        if let Some(w) = is_semisymmetric(&candidate).witness {
            return Ok(Perturbation {
                tensor: candidate,
                retries,
                witness: Some(w),
            });
        }
    }
    Err(Error::GaveUp { retries: MAX_RETRIES })
}

/// Builds the instance described by `spec`.
pub fn generate(spec: &GeneratorSpec) -> Result<(MetricSpace<Q>, CurvatureTensor<Q>)> {
    match spec.kind {
        GeneratorKind::Constant | GeneratorKind::DirectSum | GeneratorKind::Isotropic => {
            let mut draw = Draw::new(spec.seed);
            assemble(spec, &mut draw)
        }
        GeneratorKind::RandomSemisym => random_semisymmetric(spec),
        GeneratorKind::Product => {
            let (p, q) = spec
                .signature
                .ok_or_else(|| Error::SpecInvalid("product needs a signature".into()))?;
            let s = MetricSpace::standard(p, q);
            let mut draw = Draw::new(spec.seed);
            let n = s.dim();
            let quads: Vec<_> = (0..spec.terms)
                .map(|_| {
                    let v = (
                        draw.vector(n, 2),
                        draw.vector(n, 2),
                        draw.vector(n, 2),
                        draw.vector(n, 2),
                    );
                    (v.0, v.1, v.2, v.3, draw.nonzero_rational(3))
                })
                .collect();
            let k = product_tensor(&s, &quads);
            Ok((s, k))
        }
        GeneratorKind::Adversarial => {
            let mut draw = Draw::new(spec.seed);
            let (s, k) = assemble(spec, &mut draw)?;
            let eps = spec.epsilon.clone().unwrap_or_else(Q::one);
            let p = adversarial_perturbation(&k, draw.next_u64(), &eps)?;
            Ok((s, p.tensor))
        }
    }
}
