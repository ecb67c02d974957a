use super::{Echelon, Mat, Rational, Scalar};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Univariate polynomial, coefficients lowest degree first.
///
/// Always trimmed: the leading coefficient is nonzero unless the polynomial
/// is zero, which is represented by an empty coefficient list.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `X − root`
    pub fn linear(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Divides through by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = T::one() / lc;
                Self::new(self.coeffs.iter().map(|c| c.clone() * &inv).collect())
            }
        }
    }

    pub fn scale(&self, alpha: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * alpha).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(c.clone() * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "exact_div: nonzero remainder");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &T::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Mat<T>) -> Mat<T> {
        assert!(m.is_square());
        let n = m.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Product of the distinct monic irreducible factors, `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.exact_div(&self.gcd(&self.derivative())).monic()
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                let s = mag.to_string();
                if i > 0 && s.contains('/') {
                    write!(f, "({s})")?;
                } else {
                    write!(f, "{s}")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}X", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}X^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Minimal polynomial of a square matrix.
///
/// Finds the first linear dependence among `I, M, M², …` by exact
/// elimination on the flattened powers, so the result is monic, annihilates
/// `M`, and no monic polynomial of smaller degree does.
pub fn minimal_polynomial<T: Scalar>(m: &Mat<T>) -> Poly<T> {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    let mut span: Echelon<T> = Echelon::new(n * n);
    let mut power: Mat<T> = Mat::identity(n);
    for k in 0..=n {
        if let Some(c) = span.coordinates(power.as_slice()) {
            let mut coeffs: Vec<T> = c.into_iter().map(|x| -x).collect();
            coeffs.push(T::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Poly::new(coeffs);
        }
        span.insert(power.as_slice());
        power = &power * m;
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Squarefree decomposition with rational roots split off.
///
/// Returns monic, pairwise coprime, squarefree factors `f` with
/// multiplicities `m` such that `∏ f^m` equals `p` up to its leading
/// coefficient. Every rational root appears as its own linear factor; the
/// remaining part of each multiplicity class is split further only when it
/// is a polynomial in `Xᵏ` whose rational roots give factors `Xᵏ − c`; no
/// irreducible factorization is attempted beyond that. Sorted by
/// multiplicity, then degree, then coefficients. Empty for constants;
/// panics on the zero polynomial.
pub fn squarefree_rational_factors<T: Scalar>(p: &Poly<T>) -> Vec<(Poly<T>, usize)> {
    assert!(!p.is_zero(), "factoring the zero polynomial");
    let mut out = Vec::new();
    for (part, mult) in yun(&p.monic()) {
        let mut rest = part;
        let mut roots = rational_roots(&rest);
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for r in roots {
            let lin = Poly::linear(r);
            rest = rest.exact_div(&lin);
            out.push((lin, mult));
        }
        for piece in split_composed(&rest) {
            out.push((piece, mult));
        }
    }
    out.sort_by(|(f, m), (g, k)| {
        m.cmp(k).then(f.coeffs.len().cmp(&g.coeffs.len())).then_with(|| {
            f.coeffs
                .iter()
                .zip(&g.coeffs)
                .map(|(a, b)| a.partial_cmp(b).unwrap())
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
                .reverse()
        })
    });
    out
}

/// Splits `p(X) = r(Xᵏ)` into the factors `Xᵏ − c` for rational roots `c` of
/// `r`, keeping the remainder whole. Returns monic pieces; empty for constants.
fn split_composed<T: Scalar>(p: &Poly<T>) -> Vec<Poly<T>> {
    if p.is_constant() {
        return Vec::new();
    }
    let k = p
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .fold(0usize, |g, (i, _)| num_integer::gcd(g, i));
    if k < 2 {
        return vec![p.monic()];
    }
    let inner = Poly::new(p.coeffs.iter().step_by(k).cloned().collect());
    let mut roots = rational_roots(&inner);
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut rest = p.monic();
    let mut out = Vec::new();
    for c in roots {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[0] = -c;
        coeffs[k] = T::one();
        let f = Poly::new(coeffs);
        rest = rest.exact_div(&f);
        out.push(f);
    }
    if !rest.is_constant() {
        out.push(rest.monic());
    }
    out
}

/// Yun's algorithm on a monic polynomial: `p = ∏ a_i^i` with squarefree, coprime `a_i`.
fn yun<T: Scalar>(p: &Poly<T>) -> Vec<(Poly<T>, usize)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let b = p.gcd(&dp);
    let mut c = p.exact_div(&b);
    let mut d = dp.exact_div(&b).sub(&c.derivative());
    let mut i = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        c = c.exact_div(&a);
        d = d.exact_div(&a).sub(&c.derivative());
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Distinct rational roots of `p`.
///
/// With `p` scaled to a primitive integer polynomial of leading coefficient
/// `a` and degree `d`, the roots `x` of `p` correspond to the roots `y = a·x`
/// of the monic integer polynomial `g(y) = a^{d−1} p(y/a)`, and those are
/// integers. They are found by bisection on integer endpoints inside the
/// Cauchy bound, pruning intervals by Sturm counts, and checked exactly.
/// Empty when the scalar type has no exact rational form.
pub fn rational_roots<T: Scalar>(p: &Poly<T>) -> Vec<T> {
    if p.is_constant() {
        return Vec::new();
    }
    let Some(coeffs) = p.coeffs.iter().map(Scalar::to_rational).collect::<Option<Vec<_>>>() else {
        return Vec::new();
    };
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    let mut roots = Vec::new();
    let tz = ints.iter().position(|c| !c.is_zero()).unwrap();
    if tz > 0 {
        roots.push(T::zero());
        ints.drain(..tz);
    }
    let d = ints.len() - 1;
    if d == 0 {
        return roots;
    }
    let lead = ints[d].clone();
    let g: Vec<BigInt> = (0..=d)
        .map(|i| {
            if i == d {
                BigInt::one()
            } else {
                &ints[i] * lead.pow((d - 1 - i) as u32)
            }
        })
        .collect();
    let bound = g.iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let gq = Poly::new(g.iter().cloned().map(Rational::from_integer).collect());
    let chain = sturm_chain(&gq.squarefree_part());
    let at = |y: &BigInt| Bound::Finite(Rational::from_integer(y.clone()));
    let is_root = |y: &BigInt| eval_int_poly(&g, &Rational::from_integer(y.clone())).is_zero();
    // Distinct roots in (lo, hi].
    let count = |lo: &BigInt, hi: &BigInt| sign_changes(&chain, &at(lo)) - sign_changes(&chain, &at(hi));
    let two = BigInt::from(2);
    let mut found = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        if &hi - &lo < two || count(&lo, &hi) == 0 {
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&two);
        if is_root(&mid) {
            found.push(Rational::new(mid.clone(), lead.clone()));
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    found.sort();
    roots.extend(found.iter().map(T::from_rational));
    roots
}

fn eval_int_poly(coeffs: &[BigInt], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + Rational::from_integer(c.clone());
    }
    acc
}

/// Endpoint of an open interval.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound<T> {
    NegInf,
    Finite(T),
    PosInf,
}

/// Open interval `(lo, hi)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval<T> {
    pub lo: Bound<T>,
    pub hi: Bound<T>,
}

impl<T: Scalar> Interval<T> {
    pub fn real_line() -> Self {
        Self {
            lo: Bound::NegInf,
            hi: Bound::PosInf,
        }
    }

    pub fn open(lo: T, hi: T) -> Self {
        Self {
            lo: Bound::Finite(lo),
            hi: Bound::Finite(hi),
        }
    }
}

/// Sturm sequence `p, p', −rem(p, p'), …` down to a constant.
pub fn sturm_chain<T: Scalar>(p: &Poly<T>) -> Vec<Poly<T>> {
    let mut chain = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let r = chain.last().unwrap().rem(&next);
        chain.push(next);
        next = r.scale(&-T::one());
    }
    chain
}

fn sign_at<T: Scalar>(p: &Poly<T>, at: &Bound<T>) -> i8 {
    let Some(deg) = p.degree() else { return 0 };
    let lc_sign = if p.leading().unwrap().is_positive() { 1 } else { -1 };
    match at {
        Bound::PosInf => lc_sign,
        Bound::NegInf => {
            if deg % 2 == 0 {
                lc_sign
            } else {
                -lc_sign
            }
        }
        Bound::Finite(x) => {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
    }
}

fn sign_changes<T: Scalar>(chain: &[Poly<T>], at: &Bound<T>) -> usize {
    let signs: Vec<i8> = chain.iter().map(|p| sign_at(p, at)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a squarefree polynomial in an open interval.
pub fn sturm_real_root_count<T: Scalar>(p: &Poly<T>, interval: &Interval<T>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NonSquarefreeInput);
    }
    let empty = match (&interval.lo, &interval.hi) {
        (Bound::PosInf, _) | (_, Bound::NegInf) => true,
        (Bound::Finite(a), Bound::Finite(b)) => a >= b,
        _ => false,
    };
    if empty {
        return Err(Error::InvalidInterval);
    }
    let chain = sturm_chain(p);
    // V(a) − V(b) counts the roots in (a, b]; drop b itself for the open interval.
    let va = sign_changes(&chain, &interval.lo);
    let vb = sign_changes(&chain, &interval.hi);
    let at_hi = matches!(&interval.hi, Bound::Finite(b) if p.eval(b).is_zero());
    Ok(va - vb - usize::from(at_hi))
}

/// Whether every complex root of `p` is real. Zero polynomial: false; constants: true.
pub fn all_roots_real<T: Scalar>(p: &Poly<T>) -> bool {
    if p.is_zero() {
        return false;
    }
    let sf = p.squarefree_part();
    let deg = sf.degree().unwrap_or(0);
    deg == 0 || sturm_real_root_count(&sf, &Interval::real_line()).is_ok_and(|c| c == deg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, rat};

    fn poly(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&x| rat(x)).collect())
    }

    fn m(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn minimal_polynomial_identity_and_nilpotent() {
        assert_eq!(minimal_polynomial(&Mat::<Rational>::identity(3)), poly(&[-1, 1]));
        assert_eq!(minimal_polynomial(&m(&[&[0, 1], &[0, 0]])), poly(&[0, 0, 1]));
        assert_eq!(minimal_polynomial(&Mat::<Rational>::zeros(2, 2)), poly(&[0, 1]));
        assert_eq!(minimal_polynomial(&Mat::<Rational>::zeros(0, 0)), poly(&[1]));
    }

    #[test]
    fn minimal_polynomial_repeated_eigenvalue_brute_force() {
        let d = Mat::diagonal(&[rat(2), rat(2), rat(5)]);
        let p = minimal_polynomial(&d);
        // Oracle: (X-2)(X-5) kills d, and every proper monic divisor does not.
        let expected = Poly::linear(rat(2)).mul(&Poly::linear(rat(5)));
        assert_eq!(p, expected);
        assert!(p.eval_matrix(&d).is_zero());
        for proper in [Poly::one(), Poly::linear(rat(2)), Poly::linear(rat(5))] {
            assert!(!proper.eval_matrix(&d).is_zero());
        }
    }

    #[test]
    fn squarefree_examples() {
        let f = squarefree_rational_factors(&poly(&[-1, 0, 1]));
        assert_eq!(f, vec![(poly(&[1, 1]), 1), (poly(&[-1, 1]), 1)]);

        let f = squarefree_rational_factors(&poly(&[0, 0, -1, 1]));
        assert_eq!(f, vec![(poly(&[-1, 1]), 1), (poly(&[0, 1]), 2)]);

        let p = poly(&[6, 0, -5, 0, 1]);
        let f = squarefree_rational_factors(&p);
        assert_eq!(f, vec![(poly(&[-2, 0, 1]), 1), (poly(&[-3, 0, 1]), 1)]);
        // Oracle: coprime and the product reproduces p.
        assert!(f[0].0.gcd(&f[1].0).is_one_poly());
        assert_eq!(f[0].0.mul(&f[1].0), p);
    }

    #[test]
    fn squarefree_mixed_multiplicities() {
        // 2 (X - 1/2)^3 (X^2 + 1) (X + 3)
        let p = Poly::linear(frac(1, 2))
            .pow(3)
            .mul(&poly(&[1, 0, 1]))
            .mul(&poly(&[3, 1]))
            .scale(&rat(2));
        let f = squarefree_rational_factors(&p);
        assert_eq!(
            f,
            vec![(poly(&[3, 1]), 1), (poly(&[1, 0, 1]), 1), (Poly::linear(frac(1, 2)), 3)]
        );
        let prod = f.iter().fold(Poly::one(), |acc, (g, k)| acc.mul(&g.pow(*k)));
        assert_eq!(prod.scale(&rat(2)), p);
    }

    #[test]
    fn sturm_examples() {
        let line = Interval::real_line();
        assert_eq!(sturm_real_root_count(&poly(&[1, 0, 1]), &line), Ok(0));
        assert_eq!(sturm_real_root_count(&poly(&[-2, 0, 1]), &line), Ok(2));
        assert_eq!(
            sturm_real_root_count(&poly(&[-3, 1]), &Interval::open(rat(0), rat(1))),
            Ok(0)
        );
        assert_eq!(
            sturm_real_root_count(&poly(&[0, 0, 1]), &line),
            Err(Error::NonSquarefreeInput)
        );
        assert_eq!(sturm_real_root_count(&Poly::zero(), &line), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sturm_hand_chain_for_x2_minus_2() {
        let chain = sturm_chain(&poly(&[-2, 0, 1]));
        assert_eq!(chain, vec![poly(&[-2, 0, 1]), poly(&[0, 2]), poly(&[2])]);
    }

    #[test]
    fn sturm_open_endpoints_exclude_roots() {
        // (X-1)(X-2)(X-3)
        let p = poly(&[-6, 11, -6, 1]);
        assert_eq!(sturm_real_root_count(&p, &Interval::open(rat(1), rat(3))), Ok(1));
        assert_eq!(sturm_real_root_count(&p, &Interval::open(rat(0), rat(3))), Ok(2));
        assert_eq!(sturm_real_root_count(&p, &Interval::open(rat(1), rat(4))), Ok(2));
        assert_eq!(
            sturm_real_root_count(
                &p,
                &Interval {
                    lo: Bound::NegInf,
                    hi: Bound::Finite(rat(2))
                }
            ),
            Ok(1)
        );
        assert_eq!(
            sturm_real_root_count(&p, &Interval::open(rat(2), rat(2))),
            Err(Error::InvalidInterval)
        );
    }

    #[test]
    fn all_roots_real_predicate() {
        assert!(all_roots_real(&poly(&[-6, 11, -6, 1])));
        assert!(all_roots_real(&poly(&[0, 0, 1])));
        assert!(!all_roots_real(&poly(&[1, 0, 1])));
        assert!(all_roots_real(&poly(&[-2, 0, 1]).mul(&poly(&[-2, 0, 1]))));
        assert!(!all_roots_real(&poly(&[-1, 1]).mul(&poly(&[1, 1, 1]))));
    }

    #[test]
    fn float_instantiation_agrees_on_dyadic_input() {
        let p: Poly<f64> = Poly::new(vec![-2.0, 0.0, 1.0]);
        assert_eq!(sturm_real_root_count(&p, &Interval::real_line()), Ok(2));
        let id = Mat::<f64>::identity(3).scale(&4.0);
        assert_eq!(minimal_polynomial(&id), Poly::new(vec![-4.0, 1.0]));
        // No exact form for floats: rational roots are not extracted.
        assert!(rational_roots(&Poly::new(vec![-1.0, 1.0])).is_empty());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(poly(&[6, 0, -5, 0, 1]).to_string(), "X^4 - 5*X^2 + 6");
        assert_eq!(Poly::linear(frac(-1, 2)).to_string(), "X + 1/2");
        assert_eq!(Poly::<Rational>::zero().to_string(), "0");
    }

    trait OnePoly {
        fn is_one_poly(&self) -> bool;
    }

    impl OnePoly for Poly<Rational> {
        fn is_one_poly(&self) -> bool {
            *self == Poly::one()
        }
    }
}
