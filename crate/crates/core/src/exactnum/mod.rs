//! Scalars, dense matrices and univariate polynomials over a field.
//!
//! Everything in the crate is generic over [`Scalar`]. Certification only
//! means something for exact fields, so the crate root aliases everything to
//! [`Rational`] (arbitrary precision); `f64` instantiations are available for
//! exploratory use and are exact only when no rounding happens.

mod matrix;
mod poly;

pub use matrix::{Echelon, Mat};
pub use poly::{
    all_roots_real, minimal_polynomial, rational_roots, squarefree_rational_factors, sturm_chain,
    sturm_real_root_count, Bound, Interval, Poly,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, NumAssignRef, NumRef, One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = BigRational;

/// A field scalar with exact zero tests.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Signed
    + NumRef
    + NumAssignRef
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    /// The value as an exact rational, if the representation is one.
    fn to_rational(&self) -> Option<Rational>;

    fn from_rational(r: &Rational) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar field contains the integers")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

impl Scalar for Rational {
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn to_rational(&self) -> Option<Rational> {
        None
    }

    fn from_rational(r: &Rational) -> Self {
        r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn to_rational(&self) -> Option<Rational> {
        None
    }

    fn from_rational(r: &Rational) -> Self {
        (r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)) as f32
    }
}

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Shorthand for `num/den` as a [`Rational`]. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc += &(x.clone() * y);
    }
    acc
}

pub(crate) fn is_zero_vec<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `y += alpha * x`
pub(crate) fn axpy<T: Scalar>(y: &mut [T], alpha: &T, x: &[T]) {
    if alpha.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(alpha.clone() * xi);
        }
    }
}

/// Positive multiple of `v` with coprime integer entries, for exact
/// scalars; `v` itself otherwise. Keeps entry sizes down in bases.
pub(crate) fn primitive<T: Scalar>(v: &[T]) -> Vec<T> {
    let Some(q) = v.iter().map(Scalar::to_rational).collect::<Option<Vec<_>>>() else {
        return v.to_vec();
    };
    let den = q.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = q.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.iter()
        .map(|x| T::from_rational(&Rational::from_integer(x / &g)))
        .collect()
}

/// Standard basis vector `eᵢ` of length `n`.
pub fn unit<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}
