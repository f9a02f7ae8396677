//! Dense univariate polynomials.
//!
//! `Poly<T>` is generic over any [`Scalar`]; the integer instantiation adds the
//! content/primitive-part machinery that Sturm sequences and exact division
//! need.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;
use crate::serial;

/// Polynomial stored as ascending coefficients with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![T::zero(), T::one()])
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

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_count(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }
}

impl<T: Scalar> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Poly<BigInt> {
    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Poly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive part with a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        match p.leading() {
            Some(lc) if lc.is_negative() => -&p,
            _ => p,
        }
    }

    /// `lc(d)^(deg self - deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let steps = self.degree().map_or(0, |ds| (ds + 1).saturating_sub(dd));
        let mut r = self.clone();
        let mut done = 0;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let term = Poly::constant(r.leading().unwrap().clone()).shift(dr - dd);
            r = &r.scale(&lc) - &(&term * d);
            done += 1;
        }
        for _ in done..steps {
            r = r.scale(&lc);
        }
        r
    }

    /// Exact quotient over the integers, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lc = d.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (qc, rem) = r.leading().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let term = Poly::constant(qc.clone()).shift(dr - dd);
            r = &r - &(&term * d);
            q[dr - dd] = qc;
        }
        Some(Poly::new(q))
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)
            .expect("gcd divides its argument")
            .normalized()
    }

    /// `d^deg · self(n/d)` as an integer, by homogeneous Horner.
    fn eval_scaled(&self, x: &BigRational) -> (BigInt, BigInt) {
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        // the loop multiplied in one factor of d too many
        (acc, dpow / d)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        if self.coeffs.is_empty() {
            return BigRational::zero();
        }
        let (num, den) = self.eval_scaled(x);
        BigRational::new(num, den)
    }

    /// Sign of the value at `x`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.coeffs.is_empty() {
            return Ordering::Equal;
        }
        self.eval_scaled(x).0.cmp(&BigInt::zero())
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

/// The `n`-th cyclotomic polynomial, from `Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic(n: u64) -> Poly<BigInt> {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = Poly::one();
    let mut den = Poly::one();
    for d in (1..=n).filter(|d| n % d == 0) {
        let mut c = vec![BigInt::zero(); d as usize + 1];
        c[0] = BigInt::from(-1);
        c[d as usize] = BigInt::one();
        let f = Poly::new(c);
        match mobius(n / d) {
            1 => num = &num * &f,
            -1 => den = &den * &f,
            _ => {}
        }
    }
    num.div_exact(&den).expect("cyclotomic quotient is exact")
}

fn mobius(mut n: u64) -> i8 {
    let mut result = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Euler's totient.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64, BigRational::from_integer(c.clone())));
        f.write_str(&serial::format_terms(terms, 'x'))
    }
}

impl std::str::FromStr for Poly<BigInt> {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let terms = serial::parse_terms(s, 'x', "polynomial")?;
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in terms {
            if e < 0 {
                return Err(crate::Error::parse("polynomial", s, "negative exponent"));
            }
            if !c.is_integer() {
                return Err(crate::Error::parse("polynomial", s, "non-integer coefficient"));
            }
            let e = e as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c.to_integer();
        }
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> Poly<BigInt> {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = zp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(zp(&[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic_generic_over_scalar() {
        let a = Poly::new(vec![1.0f64, 1.0]);
        let b = Poly::new(vec![-1.0f64, 1.0]);
        assert_eq!((&a * &b).coeffs(), &[-1.0, 0.0, 1.0]);
        let c = Poly::new(vec![1i64, 2, 3]);
        assert_eq!(c.eval(&2), 17);
        assert_eq!(c.derivative().coeffs(), &[2, 6]);
    }

    #[test]
    fn pseudo_remainder_identity() {
        // lc(d)^(m-n+1) a = q d + r with deg r < deg d
        let a = zp(&[3, -1, 4, 1, -5]);
        let d = zp(&[1, 0, 2]);
        let r = a.pseudo_rem(&d);
        assert!(r.degree().unwrap_or(0) < 2);
        let scaled = a.scale(&BigInt::from(8)); // 2^3
        let diff = &scaled - &r;
        assert!(diff.div_exact(&d).is_some());
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = zp(&[-1, 1]); // x - 1
        let g = zp(&[2, 1]); // x + 2
        let ff = &(&f * &f) * &g;
        assert_eq!(ff.gcd(&(&f * &zp(&[5, 3]))), f);
        assert_eq!(ff.squarefree_part(), (&f * &g).normalized());
    }

    #[test]
    fn exact_division_detects_non_divisors() {
        let f = zp(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&zp(&[1, 1])), Some(zp(&[-1, 1])));
        assert_eq!(f.div_exact(&zp(&[1, 2])), None);
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), zp(&[-1, 1]));
        assert_eq!(cyclotomic(2), zp(&[1, 1]));
        assert_eq!(cyclotomic(6), zp(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), zp(&[1, 0, -1, 0, 1]));
        for n in 1..60u64 {
            assert_eq!(cyclotomic(n).degree(), Some(totient(n) as usize));
        }
    }

    #[test]
    fn display_and_parse() {
        let q = zp(&[-1, 3, -1]);
        assert_eq!(q.to_string(), "-1+3x-x^2");
        assert_eq!("-x^2+3x-1".parse::<Poly<BigInt>>().unwrap(), q);
    }
}
