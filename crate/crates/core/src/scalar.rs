//! Coefficient fields.
//!
//! All algebra in this crate is written against [`Field`]; the concrete
//! coefficient type used by the parser and the module layer is
//! [`Rational`](crate::Rational), an arbitrary-precision fraction kept in
//! lowest terms with a positive denominator.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, NumAssign, Signed};

/// An exact field of characteristic zero.
pub trait Field:
    NumAssign
    + for<'a> std::ops::AddAssign<&'a Self>
    + for<'a> std::ops::SubAssign<&'a Self>
    + for<'a> std::ops::MulAssign<&'a Self>
    + for<'a> std::ops::DivAssign<&'a Self>
    + std::ops::Neg<Output = Self>
    + Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self;

    fn is_negative(&self) -> bool;

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out *= other;
        out
    }

    fn div_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out /= other;
        out
    }

    fn inverse(&self) -> Self {
        Self::one().div_ref(self)
    }
}

impl<T> Field for Ratio<T>
where
    T: Integer + Signed + NumAssign + Clone + Debug + Display + Hash + FromPrimitive + Send + Sync + 'static,
    for<'a> Ratio<T>: std::ops::AddAssign<&'a Ratio<T>>
        + std::ops::SubAssign<&'a Ratio<T>>
        + std::ops::MulAssign<&'a Ratio<T>>
        + std::ops::DivAssign<&'a Ratio<T>>,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for coefficient type"))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Binomial coefficient `n choose k` as a field element.
pub fn binomial<C: Field>(n: u32, k: u32) -> C {
    if k > n {
        return C::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1u32);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    let v: i64 = acc.try_into().expect("binomial coefficient overflow");
    C::from_int(v)
}

/// Plain integer binomial, used for counting.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn binomials() {
        assert_eq!(binomial::<Rational>(4, 2), Rational::from_int(6));
        assert_eq!(binomial::<Rational>(3, 5), Rational::from_int(0));
        assert_eq!(binomial_usize(6, 2), 15);
        assert_eq!(binomial_usize(7, 0), 1);
    }

    #[test]
    fn inverse_and_lowest_terms() {
        let a = Rational::new(6.into(), (-4).into());
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(a.inverse(), Rational::new((-2).into(), 3.into()));
    }
}
