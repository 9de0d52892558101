//! Dense univariate integer polynomials.
//!
//! Coefficients are stored in ascending degree order; the zero polynomial
//! is the empty vector and the leading coefficient is otherwise nonzero.
//! Degrees in this crate stay tiny (the half-relation builder never goes
//! past the word length), so dense storage is the right shape.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{Int, Rat};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(Int::from(1))
    }

    /// The variable itself.
    pub fn var() -> IntPoly {
        IntPoly::from_coeffs(vec![Int::zero(), Int::from(1)])
    }

    pub fn constant(c: Int) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// Ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Int>) -> IntPoly {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or_else(Int::zero)
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn scalar_mul(&self, c: &Int) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval(&self, q: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Rat::from_int(c.clone());
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divide by the variable once. The constant term must be zero;
    /// a nonzero constant term signals a violated structural invariant
    /// upstream, reported as `Divisibility`.
    pub fn div_exact_var(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::Divisibility);
        }
        Ok(IntPoly::from_coeffs(self.coeffs[1..].to_vec()))
    }

    /// Multiply by the variable once.
    pub fn mul_var(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Int::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    /// Human form in descending degree, e.g. `2*q^2 - 8*q + 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = mag == &num_bigint::BigUint::from(1u32);
            match (k, one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}
