use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// Coefficient ring for the polynomial types.
///
/// Anything that behaves like a commutative ring with exact equality works:
/// `BigInt`, `BigRational`, the primitive integers, and `f32`/`f64` for
/// numeric spot checks.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug {
    /// `n · 1` computed by double-and-add, so no conversion trait is needed.
    fn from_count(n: usize) -> Self {
        let mut acc = Self::zero();
        let mut base = Self::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            n >>= 1;
        }
        acc
    }
}

impl<T> Scalar for T where T: Num + Neg<Output = T> + Clone + Debug {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn from_count_matches_literal() {
        for n in 0..40usize {
            assert_eq!(<i64 as Scalar>::from_count(n), n as i64);
            assert_eq!(<BigInt as Scalar>::from_count(n), BigInt::from(n));
        }
        assert_eq!(<f64 as Scalar>::from_count(7), 7.0);
    }
}
