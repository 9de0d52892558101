//! 2x2 matrices over a commutative ring (rationals or integer polynomials).

use crate::poly::IntPoly;
use crate::rat::Rat;

/// The minimal ring interface the matrix layer needs.
pub trait Ring: Clone + PartialEq {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_add(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
}

impl Ring for Rat {
    fn ring_zero() -> Self {
        Rat::zero()
    }
    fn ring_one() -> Self {
        Rat::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self + other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Ring for IntPoly {
    fn ring_zero() -> Self {
        IntPoly::zero()
    }
    fn ring_one() -> Self {
        IntPoly::one()
    }
    fn ring_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

/// Row-major 2x2 matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2<R> {
    pub c11: R,
    pub c12: R,
    pub c21: R,
    pub c22: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(c11: R, c12: R, c21: R, c22: R) -> Mat2<R> {
        Mat2 { c11, c12, c21, c22 }
    }

    pub fn identity() -> Mat2<R> {
        Mat2 {
            c11: R::ring_one(),
            c12: R::ring_zero(),
            c21: R::ring_zero(),
            c22: R::ring_one(),
        }
    }

    pub fn mul(&self, other: &Mat2<R>) -> Mat2<R> {
        Mat2 {
            c11: self
                .c11
                .ring_mul(&other.c11)
                .ring_add(&self.c12.ring_mul(&other.c21)),
            c12: self
                .c11
                .ring_mul(&other.c12)
                .ring_add(&self.c12.ring_mul(&other.c22)),
            c21: self
                .c21
                .ring_mul(&other.c11)
                .ring_add(&self.c22.ring_mul(&other.c21)),
            c22: self
                .c21
                .ring_mul(&other.c12)
                .ring_add(&self.c22.ring_mul(&other.c22)),
        }
    }

    pub fn det(&self) -> R {
        self.c11
            .ring_mul(&self.c22)
            .ring_sub(&self.c12.ring_mul(&self.c21))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.c21 == R::ring_zero()
    }
}
