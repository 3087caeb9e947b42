//! Field scalars.
//!
//! Every algorithm in this crate is written against [`Scalar`], a thin
//! extension of [`num_traits::Num`]. The reference instantiation is the
//! arbitrary precision [`Rational`](crate::Rational). `Ratio<i64>`
//! ([`SmallRational`](crate::SmallRational)) also implements it; it is
//! faster but overflows on large eliminations.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// A field element usable by the exact linear algebra engine.
pub trait Scalar: Num + Clone + Debug + Display + FromStr + Signed + Send + Sync + 'static {
    fn from_int(v: i64) -> Self;

    /// Renders the value as `"p"` or `"p/q"`.
    fn to_exact_string(&self) -> String {
        self.to_string()
    }

    /// Parses `"p"` or `"p/q"`.
    fn parse_exact(s: &str) -> Option<Self> {
        Self::from_str(s.trim()).ok()
    }

    /// Returns the value as an integer when it is one.
    fn to_int(&self) -> Option<i64>;
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_int(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn to_int(&self) -> Option<i64> {
        self.is_integer().then(|| self.to_integer())
    }
}

/// `p/q` as a scalar; panics when `q == 0`.
pub fn ratio<F: Scalar>(p: i64, q: i64) -> F {
    assert!(q != 0, "zero denominator");
    F::from_int(p) / F::from_int(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn exact_strings_round_trip() {
        let x: Rational = ratio(-6, 4);
        assert_eq!(x.to_exact_string(), "-3/2");
        assert_eq!(Rational::parse_exact("-3/2"), Some(x));
        assert_eq!(Rational::parse_exact(" 7 ").and_then(|v| v.to_int()), Some(7));
        assert_eq!(Rational::parse_exact("x"), None);
    }

    #[test]
    fn small_instance() {
        assert_eq!(<Ratio<i64> as Scalar>::from_int(3).to_int(), Some(3));
        assert_eq!(ratio::<Ratio<i64>>(1, 3).to_int(), None);
    }
}
