//! Freely reduced words in the rank-2 free group and their evaluation
//! as 2x2 matrices.
//!
//! A word is a sequence of syllables (generator, nonzero exponent) with
//! adjacent syllables on distinct generators; the empty word is the
//! identity. Evaluation substitutes the two parabolic generators, using
//! the closed forms for powers so that huge exponents cost one ring
//! operation per syllable.

use std::fmt;

use num_traits::Zero;

use crate::mat2::Mat2;
use crate::poly::IntPoly;
use crate::rat::{Int, Rat};

/// Free-group generator: `A` is the upper parabolic, `B` the lower one.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Gen {
    A,
    B,
}

impl Gen {
    pub fn letter(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Word {
    syllables: Vec<(Gen, Int)>,
}

/// Free reduction: elide zero exponents, merge equal adjacent generators,
/// cascade cancellations.
pub fn free_reduce<I>(raw: I) -> Word
where
    I: IntoIterator<Item = (Gen, Int)>,
{
    let mut out: Vec<(Gen, Int)> = Vec::new();
    for (gen, exp) in raw {
        if exp.is_zero() {
            continue;
        }
        match out.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if e.is_zero() {
                    out.pop();
                }
            }
            _ => out.push((gen, exp)),
        }
    }
    Word { syllables: out }
}

impl Word {
    pub fn identity() -> Word {
        Word {
            syllables: Vec::new(),
        }
    }

    /// Reduced constructor; accepts arbitrary raw syllables.
    pub fn from_syllables<I>(raw: I) -> Word
    where
        I: IntoIterator<Item = (Gen, Int)>,
    {
        free_reduce(raw)
    }

    pub fn syllables(&self) -> &[(Gen, Int)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_len(&self) -> usize {
        self.syllables.len()
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|(g, e)| (*g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        free_reduce(self.syllables.iter().chain(other.syllables.iter()).cloned())
    }

    /// Exact product of the generator powers at a rational parameter.
    /// The determinant is 1 by construction.
    pub fn eval(&self, q: &Rat) -> Mat2<Rat> {
        let mut m = Mat2::identity();
        for (gen, exp) in &self.syllables {
            let n = Rat::from_int(exp.clone());
            let factor = match gen {
                Gen::A => Mat2::new(Rat::one(), n, Rat::zero(), Rat::one()),
                Gen::B => Mat2::new(Rat::one(), Rat::zero(), &n * q, Rat::one()),
            };
            m = m.mul(&factor);
        }
        m
    }

    /// Matrix of integer polynomials in q; specializing at any rational q
    /// agrees with `eval`.
    pub fn eval_symbolic(&self) -> Mat2<IntPoly> {
        let mut m = Mat2::identity();
        for (gen, exp) in &self.syllables {
            let n = IntPoly::constant(exp.clone());
            let factor = match gen {
                Gen::A => Mat2::new(IntPoly::one(), n, IntPoly::zero(), IntPoly::one()),
                Gen::B => Mat2::new(IntPoly::one(), IntPoly::zero(), n.mul_var(), IntPoly::one()),
            };
            m = m.mul(&factor);
        }
        m
    }
}

impl fmt::Display for Word {
    /// `a b^54 a`, unit exponents without the caret; `1` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == Int::from(1) {
                write!(f, "{}", g.letter())?;
            } else {
                write!(f, "{}^{}", g.letter(), e)?;
            }
        }
        Ok(())
    }
}
