//! Scalar traits.
//!
//! Only exact scalars are intended: machine or big integers for [`IntegerRing`],
//! and `Ratio` over those for [`Field`]. Division in [`Ring`] code paths is only
//! ever applied where the quotient is known to be exact.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed};

/// An exact integral domain with a total sign.
pub trait Ring: Clone + Debug + Display + PartialEq + Num + Signed {}

impl<T> Ring for T where T: Clone + Debug + Display + PartialEq + Num + Signed {}

/// A Euclidean ring of integers.
pub trait IntegerRing: Ring + Integer + Ord {
    /// `(g, x, y)` with `g = gcd(a, b) >= 0` and `x*a + y*b = g`.
    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let e = a.extended_gcd(b);
        if e.gcd.is_negative() {
            (-e.gcd, -e.x, -e.y)
        } else {
            (e.gcd, e.x, e.y)
        }
    }
}

impl<T> IntegerRing for T where T: Ring + Integer + Ord {}

/// An exact field.
pub trait Field: Ring {
    /// Positive factor `s` such that `s * coeffs` is the canonical
    /// representative of the projective class of `coeffs` up to sign.
    ///
    /// For rationals this makes the vector a primitive integer vector.
    fn primitive_scale(coeffs: &[Self]) -> Self;
}

impl<I: IntegerRing> Field for Ratio<I> {
    fn primitive_scale(coeffs: &[Self]) -> Self {
        let mut den = I::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = I::zero();
        for c in coeffs {
            let scaled = c.numer().clone() * (den.clone() / c.denom().clone());
            num = num.gcd(&scaled);
        }
        if num.is_zero() {
            return Self::one();
        }
        Ratio::new(den, num)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<BigInt>;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn primitive_scale_clears_denominators() {
        let v = [q(1, 2), q(-3, 4), q(0, 1)];
        let s = Q::primitive_scale(&v);
        let scaled: Vec<Q> = v.iter().map(|c| c * &s).collect();
        assert_eq!(scaled, vec![q(2, 1), q(-3, 1), q(0, 1)]);
    }

    #[test]
    fn primitive_scale_of_zero_is_one() {
        assert_eq!(Q::primitive_scale(&[q(0, 1)]), q(1, 1));
    }

    #[test]
    fn xgcd_is_bezout_with_nonnegative_gcd() {
        for (a, b) in [(12i64, -18i64), (-7, 0), (0, 5), (0, 0), (-4, -6)] {
            let (g, x, y) = i64::xgcd(&a, &b);
            assert!(g >= 0);
            assert_eq!(x * a + y * b, g);
            assert_eq!(g, a.gcd(&b));
        }
    }
}
