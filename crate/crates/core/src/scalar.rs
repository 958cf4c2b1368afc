//! Exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graded::Sign;

/// An arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_sign(sign: Sign) -> Self {
        match sign {
            Sign::Plus => Scalar::one(),
            Sign::Minus => -Scalar::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn signed(&self, sign: Sign) -> Self {
        match sign {
            Sign::Plus => self.clone(),
            Sign::Minus => -self.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        Scalar(self.0.recip())
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Sign> for Scalar {
    fn from(sign: Sign) -> Self {
        Scalar::from_sign(sign)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseScalarError(pub String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let numer: BigInt = n.parse().map_err(|_| err())?;
        let denom: BigInt = d.parse().map_err(|_| err())?;
        if denom.is_zero() {
            return Err(err());
        }
        Ok(Scalar(BigRational::new(numer, denom)))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $assign_tr for Scalar {
            fn $assign(&mut self, rhs: Scalar) {
                self.0.$assign(rhs.0);
            }
        }
        impl<'a> $assign_tr<&'a Scalar> for Scalar {
            fn $assign(&mut self, rhs: &'a Scalar) {
                self.0.$assign(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_reduced_with_positive_denominator() {
        assert_eq!(Scalar::ratio(2, -4).to_string(), "-1/2");
        assert_eq!(Scalar::from_int(3).to_string(), "3/1");
        assert_eq!(Scalar::zero().to_string(), "0/1");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["1/1", "-3/7", "0/1", "12/5"] {
            assert_eq!(s.parse::<Scalar>().unwrap().to_string(), s);
        }
        assert_eq!("4/6".parse::<Scalar>().unwrap(), Scalar::ratio(2, 3));
        assert_eq!("5".parse::<Scalar>().unwrap(), Scalar::from_int(5));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Scalar::ratio(1, 2);
        let b = Scalar::ratio(1, 3);
        assert_eq!(&a + &b, Scalar::ratio(5, 6));
        assert_eq!(&a * &b, Scalar::ratio(1, 6));
        assert_eq!(&a - &a, Scalar::zero());
        assert_eq!(a.signed(Sign::Minus), Scalar::ratio(-1, 2));
    }
}
