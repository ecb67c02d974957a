//! Exact curvature tensors on pseudo-Riemannian vector spaces.
//!
//! A curvature tensor is stored as a self-adjoint operator on the bivector
//! space `Λ²V` (lexicographic basis `eᵢ∧eⱼ`, `i < j`) lying in the kernel of
//! the Bianchi map. On top of that the crate computes Ricci data, the
//! holonomy span and its Lie closure, and certifies semi-symmetry together
//! with the Ricci and primitive decompositions and the Lorentzian structure
//! statements.
//!
//! All algorithms are generic over [`Scalar`]; the aliases below fix the
//! scalar to [`Rational`], which is what certification requires.
//!
//! Sign conventions:
//!
//! * `(u∧v)w = ⟨v,w⟩u − ⟨u,w⟩v` and `(u∨v)w = ½(⟨v,w⟩u + ⟨u,w⟩v)`;
//! * `⟨u∧v, w∧t⟩ = ⟨v,w⟩⟨u,t⟩ − ⟨u,w⟩⟨v,t⟩`, which is negative definite on
//!   a Euclidean space;
//! * `ric(u,v) = trace(a ↦ K(u,a)v)`, so constant curvature `K = λ·Id` has
//!   `Ric = λ(1 − n)·Id`.

pub mod analysis;
pub mod bivector;
pub mod curvature;
pub mod error;
pub mod exactnum;
pub mod generators;
pub mod holonomy;
pub mod io;
pub mod report;
pub mod space;
pub mod suite;

pub use error::{Error, Result};
pub use exactnum::{frac, rat, Mat, Poly, Rational, Scalar};

/// Exact rational matrix.
pub type Matrix = exactnum::Mat<Rational>;
/// Polynomial with rational coefficients.
pub type Polynomial = exactnum::Poly<Rational>;
pub type MetricSpace = space::MetricSpace<Rational>;
pub type Bivector = bivector::Bivector<Rational>;
pub type CurvatureTensor = curvature::CurvatureTensor<Rational>;
pub type RicciData = curvature::RicciData<Rational>;
pub type SkewAlgebra = holonomy::SkewAlgebra<Rational>;
pub type Subspace = holonomy::Subspace<Rational>;
pub type Decomposition = analysis::Decomposition<Rational>;

/// Floating-point instantiations, for exploration only (no certificates).
pub type MatrixF64 = exactnum::Mat<f64>;
pub type MetricSpaceF64 = space::MetricSpace<f64>;
pub type CurvatureTensorF64 = curvature::CurvatureTensor<f64>;
