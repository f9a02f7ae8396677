//! Sparse Laurent polynomials in `t`.
//!
//! Besides the ring operations this module holds the normalized-polynomial
//! predicate (`Δ(1/t) = Δ(t)`, `Δ(1) = 1`), the torus polynomials
//! `D_p = t^{-(p-1)/2} (t^p + 1)/(t + 1)`, and the basis
//! `1 + a_0 (2 - t - 1/t) + Σ_{i≥1} a_i (t^i + t^-i)(2 - t - 1/t)` in which
//! every normalized polynomial has a unique integer expansion.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::serial;
use crate::univariate::Poly;
use crate::DEFAULT_MAX_P;

/// Finite sum `Σ c_e t^e` over integer exponents; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn new(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut map: BTreeMap<i64, T> = BTreeMap::new();
        for (e, c) in terms {
            let slot = map.entry(e).or_insert_with(T::zero);
            *slot = slot.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i64, c: T) -> Self {
        Self::new([(e, c)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `t ↦ t^{-1}`.
    pub fn invert(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e).is_some_and(|d| d == c))
    }

    /// Value at `t = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> T {
        self.terms.values().fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::new(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Splits off the lowest power: `self = t^shift · poly`.
    pub fn to_poly(&self) -> (Poly<T>, i64) {
        let Some(lo) = self.min_exponent() else {
            return (Poly::zero(), 0);
        };
        let hi = self.max_exponent().unwrap();
        let coeffs = (lo..=hi).map(|e| self.coeff(e)).collect();
        (Poly::new(coeffs), lo)
    }

    pub fn from_poly(p: &Poly<T>, shift: i64) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    /// Rewrites a symmetric polynomial in `x = t + 1/t`: the result `Q`
    /// satisfies `Q(z + 1/z) = self(z)`, so on the unit circle
    /// `self(e^{iθ}) = Q(2 cos θ)`.
    pub fn to_chebyshev(&self) -> Result<Poly<T>> {
        if !self.is_symmetric() {
            return Err(Error::Asymmetric(self.sketch()));
        }
        let top = self.max_exponent().unwrap_or(0).max(0) as usize;
        // v[i] = t^i + t^-i written in x; v[0] = 2, v[1] = x.
        let x = Poly::<T>::x();
        let mut out = Poly::constant(self.coeff(0));
        let mut prev = Poly::constant(T::one() + T::one());
        let mut cur = x.clone();
        for i in 1..=top {
            out = &out + &cur.scale(&self.coeff(i as i64));
            let next = &(&x * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        Ok(out)
    }

    /// Inverse of [`to_chebyshev`](Self::to_chebyshev): substitutes `x = t + 1/t`.
    pub fn from_chebyshev(q: &Poly<T>) -> Self {
        let x = Self::new([(1, T::one()), (-1, T::one())]);
        q.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &x) + &Self::constant(c.clone()))
    }

    fn sketch(&self) -> String {
        self.terms
            .iter()
            .map(|(e, c)| format!("{c:?}*t^{e}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<T: Scalar> Add<&LaurentPoly<T>> for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        LaurentPoly::new(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl<T: Scalar> Sub<&LaurentPoly<T>> for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Mul<&LaurentPoly<T>> for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &LaurentPoly<T>) -> LaurentPoly<T> {
        LaurentPoly::new(self.terms.iter().flat_map(|(e1, c1)| {
            rhs.terms
                .iter()
                .map(move |(e2, c2)| (e1 + e2, c1.clone() * c2.clone()))
        }))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl LaurentPoly<BigInt> {
    /// Exact division in `Z[t, 1/t]`, `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (a, sa) = self.to_poly();
        let (b, sb) = d.to_poly();
        let q = a.div_exact(&b)?;
        Some(Self::from_poly(&q, sa - sb))
    }
}

impl fmt::Display for LaurentPoly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (*e, BigRational::from_integer(c.clone())));
        f.write_str(&serial::format_terms(terms, 't'))
    }
}

impl FromStr for LaurentPoly<BigInt> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = serial::parse_terms(s, 't', "Laurent polynomial")?;
        if terms.iter().any(|(_, c)| !c.is_integer()) {
            return Err(Error::parse("Laurent polynomial", s, "non-integer coefficient"));
        }
        Ok(Self::new(terms.into_iter().map(|(e, c)| (e, c.to_integer()))))
    }
}

impl Serialize for LaurentPoly<BigInt> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly<BigInt> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// True iff `d(1/t) = d(t)` and `d(1) = 1`.
pub fn is_normalized(d: &LaurentPoly<BigInt>) -> bool {
    d.is_symmetric() && d.eval_at_one().is_one()
}

/// `D_p(t) = t^{-(p-1)/2} (t^p + 1)/(t + 1)`, expanded to its `p` alternating
/// coefficients. Refuses `p` above [`DEFAULT_MAX_P`].
pub fn torus_poly(p: u64) -> Result<LaurentPoly<BigInt>> {
    torus_poly_with_limit(p, DEFAULT_MAX_P)
}

pub fn torus_poly_with_limit(p: u64, limit: u64) -> Result<LaurentPoly<BigInt>> {
    check_generator_parameter(p)?;
    if p > limit {
        return Err(Error::MaterializationLimit {
            p: p.to_string(),
            limit,
        });
    }
    let half = ((p - 1) / 2) as i64;
    Ok(LaurentPoly::new((-half..=half).map(|e| {
        let c = if (e + half).is_even() { 1 } else { -1 };
        (e, BigInt::from(c))
    })))
}

pub(crate) fn check_generator_parameter(p: u64) -> Result<()> {
    if p.is_even() {
        return Err(Error::EvenParameter(p.to_string()));
    }
    if p < 3 {
        return Err(Error::ParameterTooSmall(p.to_string()));
    }
    Ok(())
}

/// The `i`-th basis element minus the constant: `2 - t - 1/t` for `i = 0`,
/// `(t^i + t^-i)(2 - t - 1/t)` otherwise.
fn basis_element(i: usize) -> LaurentPoly<BigInt> {
    let base = LaurentPoly::new([(0, BigInt::from(2)), (1, BigInt::from(-1)), (-1, BigInt::from(-1))]);
    if i == 0 {
        return base;
    }
    let i = i as i64;
    let sym = LaurentPoly::new([(i, BigInt::one()), (-i, BigInt::one())]);
    &sym * &base
}

/// Integer coordinates `a_0, …, a_n` of a normalized polynomial, with
/// trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct BasisCoeffs(Vec<BigInt>);

impl BasisCoeffs {
    pub fn new(mut a: Vec<BigInt>) -> Self {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        BasisCoeffs(a)
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<i64>> for BasisCoeffs {
    fn from(v: Vec<i64>) -> Self {
        BasisCoeffs::new(v.into_iter().map(BigInt::from).collect())
    }
}

impl From<BasisCoeffs> for Vec<String> {
    fn from(a: BasisCoeffs) -> Self {
        a.0.iter().map(|c| c.to_string()).collect()
    }
}

impl TryFrom<Vec<String>> for BasisCoeffs {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        v.iter()
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse("basis coefficient", s, "not an integer"))
            })
            .collect::<Result<Vec<_>>>()
            .map(BasisCoeffs::new)
    }
}

impl fmt::Display for BasisCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for BasisCoeffs {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if inner.is_empty() {
            return Ok(BasisCoeffs::default());
        }
        inner
            .split(',')
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .try_into()
    }
}

/// Unique coordinates of `d` in the basis, found by clearing the top exponent
/// first: the element indexed `i` has leading term `-t^{i+1}`.
pub fn to_basis(d: &LaurentPoly<BigInt>) -> Result<BasisCoeffs> {
    if !is_normalized(d) {
        return Err(Error::NotNormalized(d.to_string()));
    }
    let top = d.max_exponent().unwrap_or(0);
    let mut a = vec![BigInt::zero(); top.max(0) as usize];
    let mut rest = d - &LaurentPoly::one();
    for e in (1..=top).rev() {
        let ai = -rest.coeff(e);
        let i = (e - 1) as usize;
        if !ai.is_zero() {
            rest = &rest - &basis_element(i).scale(&ai);
        }
        a[i] = ai;
    }
    debug_assert!(rest.is_zero(), "normalized input leaves no remainder");
    Ok(BasisCoeffs::new(a))
}

/// `1 + a_0 (2 - t - 1/t) + Σ_{i≥1} a_i (t^i + t^-i)(2 - t - 1/t)`.
pub fn from_basis(a: &BasisCoeffs) -> LaurentPoly<BigInt> {
    a.0.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(LaurentPoly::one(), |acc, (i, c)| &acc + &basis_element(i).scale(c))
}

/// Laurent polynomial whose coefficients are integers or half-integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfLaurent(LaurentPoly<BigRational>);

impl HalfLaurent {
    pub fn new(p: LaurentPoly<BigRational>) -> Result<Self> {
        let two = BigInt::from(2);
        if p.terms().all(|(_, c)| (&two % c.denom()).is_zero()) {
            Ok(HalfLaurent(p))
        } else {
            Err(Error::NotHalfIntegral)
        }
    }

    pub fn as_laurent(&self) -> &LaurentPoly<BigRational> {
        &self.0
    }
}

impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.0.terms().map(|(e, c)| (e, c.clone()));
        f.write_str(&serial::format_terms(terms, 't'))
    }
}

impl FromStr for HalfLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let terms = serial::parse_terms(s, 't', "half-integral Laurent polynomial")?;
        HalfLaurent::new(LaurentPoly::new(terms))
    }
}

/// `1/2 + a_0 (1 - t) + Σ_{i≥1} a_i (t^i + t^-i)(1 - t)`: the coefficient
/// content of the self-linking chord expression whose symmetric part is
/// [`from_basis`].
pub fn linking_form(a: &BasisCoeffs) -> HalfLaurent {
    let q = |n: i64| BigRational::from_integer(BigInt::from(n));
    let one_minus_t = LaurentPoly::new([(0, q(1)), (1, q(-1))]);
    let mut out = LaurentPoly::constant(BigRational::new(BigInt::one(), BigInt::from(2)));
    for (i, c) in a.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = BigRational::from_integer(c.clone());
        let term = if i == 0 {
            one_minus_t.clone()
        } else {
            let i = i as i64;
            &LaurentPoly::new([(i, q(1)), (-i, q(1))]) * &one_minus_t
        };
        out = &out + &term.scale(&c);
    }
    HalfLaurent(out)
}

/// `f(t) + f(1/t)`, which must have integer coefficients.
pub fn symmetrize(f: &HalfLaurent) -> Result<LaurentPoly<BigInt>> {
    let s = &f.0 + &f.0.invert();
    if s.terms().any(|(_, c)| !c.is_integer()) {
        return Err(Error::NonIntegralSymmetrization);
    }
    Ok(LaurentPoly::new(s.terms().map(|(e, c)| (e, c.to_integer()))))
}

/// Free-function form of [`LaurentPoly::to_chebyshev`].
pub fn to_chebyshev<T: Scalar>(d: &LaurentPoly<T>) -> Result<Poly<T>> {
    d.to_chebyshev()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly<BigInt> {
        s.parse().unwrap()
    }

    const FIG: &str = "-t^-2+3t^-1-3+3t-t^2";

    #[test]
    fn normalized_predicate() {
        assert!(is_normalized(&LaurentPoly::one()));
        assert!(is_normalized(&lp(FIG)));
        assert!(!is_normalized(&lp("t-1")));
        // symmetric but Δ(1) = -1
        assert!(!is_normalized(&lp("-1")));
    }

    #[test]
    fn torus_small_cases() {
        assert_eq!(torus_poly(3).unwrap(), lp("t^-1-1+t"));
        assert_eq!(torus_poly(5).unwrap(), lp("t^-2-t^-1+1-t+t^2"));
        assert_eq!(torus_poly(4), Err(Error::EvenParameter("4".into())));
        assert_eq!(torus_poly(1), Err(Error::ParameterTooSmall("1".into())));
        assert!(matches!(
            torus_poly_with_limit(101, 99),
            Err(Error::MaterializationLimit { .. })
        ));
    }

    #[test]
    fn torus_matches_division_oracle() {
        // (t^p + 1) / (t + 1) by long division, then shift.
        for p in (3..40u64).step_by(2) {
            let mut num = vec![BigInt::zero(); p as usize + 1];
            num[0] = BigInt::one();
            num[p as usize] = BigInt::one();
            let q = Poly::new(num)
                .div_exact(&Poly::new(vec![BigInt::one(), BigInt::one()]))
                .unwrap();
            let expected = LaurentPoly::from_poly(&q, -(((p - 1) / 2) as i64));
            let d = torus_poly(p).unwrap();
            assert_eq!(d, expected);
            assert!(is_normalized(&d));
            assert_eq!(d.min_exponent(), Some(-(((p - 1) / 2) as i64)));
        }
    }

    #[test]
    fn basis_examples() {
        assert!(to_basis(&LaurentPoly::one()).unwrap().is_empty());
        assert_eq!(to_basis(&lp(FIG)).unwrap(), BasisCoeffs::from(vec![-1, 1]));
        assert_eq!(to_basis(&lp("t^-1-1+t")).unwrap(), BasisCoeffs::from(vec![-1]));
        assert!(matches!(to_basis(&lp("t-1")), Err(Error::NotNormalized(_))));

        assert_eq!(from_basis(&BasisCoeffs::default()), LaurentPoly::one());
        assert_eq!(from_basis(&BasisCoeffs::from(vec![-1, 1])), lp(FIG));
        assert_eq!(from_basis(&BasisCoeffs::from(vec![1])), lp("-t^-1+3-t"));
    }

    #[test]
    fn linking_form_examples() {
        assert_eq!(linking_form(&BasisCoeffs::default()).to_string(), "1/2");
        assert_eq!(linking_form(&BasisCoeffs::from(vec![1])).to_string(), "3/2-t");
        let f = linking_form(&BasisCoeffs::from(vec![0, 1]));
        assert_eq!(f, "1/2+t+t^-1-t^2-1".parse().unwrap());
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(symmetrize(&"1/2".parse().unwrap()).unwrap(), LaurentPoly::one());
        assert_eq!(
            symmetrize(&linking_form(&BasisCoeffs::from(vec![-1, 1]))).unwrap(),
            lp(FIG)
        );
        assert_eq!(symmetrize(&"3/2-t".parse().unwrap()).unwrap(), lp("3-t-t^-1"));
        // 1/2 t has symmetrization (t + 1/t)/2
        assert_eq!(
            symmetrize(&"1/2*t".parse().unwrap()),
            Err(Error::NonIntegralSymmetrization)
        );
        assert_eq!("1/3".parse::<HalfLaurent>(), Err(Error::NotHalfIntegral));
    }

    #[test]
    fn chebyshev_examples() {
        let q = |s: &str| s.parse::<Poly<BigInt>>().unwrap();
        assert_eq!(to_chebyshev(&lp("t^-1-1+t")).unwrap(), q("x-1"));
        assert_eq!(to_chebyshev(&lp(FIG)).unwrap(), q("-x^2+3x-1"));
        assert_eq!(to_chebyshev(&LaurentPoly::<BigInt>::one()).unwrap(), q("1"));
        assert!(matches!(to_chebyshev(&lp("t-1")), Err(Error::Asymmetric(_))));
        for p in [3u64, 5, 7, 15] {
            let d = torus_poly(p).unwrap();
            let back = LaurentPoly::from_chebyshev(&to_chebyshev(&d).unwrap());
            assert_eq!(back, d);
        }
    }

    #[test]
    fn chebyshev_generic_over_float() {
        let d: LaurentPoly<f64> = LaurentPoly::new([(-1, 1.0), (0, -1.0), (1, 1.0)]);
        let q = d.to_chebyshev().unwrap();
        // D_3(e^{iθ}) = 2cos θ - 1
        let theta = 0.7f64;
        assert!((q.eval(&(2.0 * theta.cos())) - (2.0 * theta.cos() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn text_round_trip() {
        for s in [FIG, "0", "1", "t", "-t^-1", "12t^-40+7"] {
            assert_eq!(lp(s).to_string().parse::<LaurentPoly<BigInt>>().unwrap(), lp(s));
        }
        assert_eq!(lp(FIG).to_string(), FIG);
        assert_eq!("(-1,1)".parse::<BasisCoeffs>().unwrap(), BasisCoeffs::from(vec![-1, 1]));
        assert_eq!(BasisCoeffs::from(vec![-1, 1, 0]).to_string(), "(-1,1)");
    }

    #[test]
    fn division_in_laurent_ring() {
        let d3 = torus_poly(3).unwrap();
        let d5 = torus_poly(5).unwrap();
        assert_eq!((&d3 * &d5).div_exact(&d5), Some(d3.clone()));
        assert_eq!(d5.div_exact(&d3), None);
    }
}
