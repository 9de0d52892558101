//! Exact rational numbers.
//!
//! `Rat` wraps an arbitrary-precision reduced fraction with positive
//! denominator. All arithmetic is exact; nothing in this crate rounds.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used throughout the crate.
pub type Int = BigInt;

/// An exact rational, always stored reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Build num/den. Fails with `ZeroDenominator` when den = 0.
    pub fn new(num: Int, den: Int) -> Result<Rat> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn from_int<T: Into<Int>>(n: T) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &Int {
        self.0.numer()
    }

    pub fn denom(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    /// Decimal expansion with exactly `places` fractional digits,
    /// rounded half away from zero. Used only for report formatting;
    /// certificates always carry exact fractions.
    pub fn to_decimal_string(&self, places: usize) -> String {
        let scale = Int::from(10u32).pow(places as u32);
        let num = self.numer().magnitude().clone() * scale.magnitude();
        let den = self.denom().magnitude().clone();
        let rounded: num_bigint::BigUint = (num + (&den >> 1)) / den;
        let digits = rounded.to_string();
        let sign = if self.signum() < 0 && !rounded.is_zero() {
            "-"
        } else {
            ""
        };
        if places == 0 {
            return format!("{sign}{digits}");
        }
        if digits.len() <= places {
            format!("{sign}0.{digits:0>places$}")
        } else {
            let (int_part, frac_part) = digits.split_at(digits.len() - places);
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

impl fmt::Display for Rat {
    /// Lowest terms, `num/den`, integers without the `/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `num/den`, a plain integer, or a decimal string such as
    /// `2.618033988` (converted exactly).
    fn from_str(s: &str) -> Result<Rat> {
        let bad = || Error::ParseRat(s.to_string());
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: Int = num.trim().parse().map_err(|_| bad())?;
            let den: Int = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            return Rat::new(num, den);
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let negative = int_part.trim_start().starts_with('-');
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let int_part = if int_part.is_empty() || int_part == "-" || int_part == "+" {
                Int::zero()
            } else {
                int_part.parse().map_err(|_| bad())?
            };
            let scale = Int::from(10u32).pow(frac_part.len() as u32);
            let frac: Int = frac_part.parse().map_err(|_| bad())?;
            let num = if negative {
                int_part * &scale - frac
            } else {
                int_part * &scale + frac
            };
            return Rat::new(num, scale);
        }
        let n: Int = s.parse().map_err(|_| bad())?;
        Ok(Rat::from_int(n))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d)).unwrap()
    }

    #[test]
    fn reduced_with_positive_denominator() {
        let x = r(26, -27);
        assert_eq!(x.numer(), &Int::from(-26));
        assert_eq!(x.denom(), &Int::from(27));
        assert_eq!(r(4, 6), r(2, 3));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Rat::new(Int::from(1), Int::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn display_lowest_terms() {
        assert_eq!(r(26, 27).to_string(), "26/27");
        assert_eq!(r(6, 2).to_string(), "3");
        assert_eq!(r(-7, 2).to_string(), "-7/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("26/27".parse::<Rat>().unwrap(), r(26, 27));
        assert_eq!("-7/2".parse::<Rat>().unwrap(), r(-7, 2));
        assert_eq!("3".parse::<Rat>().unwrap(), r(3, 1));
        assert_eq!("2.5".parse::<Rat>().unwrap(), r(5, 2));
        assert_eq!("-0.25".parse::<Rat>().unwrap(), r(-1, 4));
        assert_eq!(".5".parse::<Rat>().unwrap(), r(1, 2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
    }

    #[test]
    fn decimal_formatting() {
        assert_eq!(r(1, 3).to_decimal_string(6), "0.333333");
        assert_eq!(r(2, 3).to_decimal_string(6), "0.666667");
        assert_eq!(r(-5, 2).to_decimal_string(3), "-2.500");
        assert_eq!(r(0, 1).to_decimal_string(2), "0.00");
        assert_eq!(r(1, 1).to_decimal_string(0), "1");
    }
}
