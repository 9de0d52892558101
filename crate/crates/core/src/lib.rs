//! Exact-arithmetic machinery for certifying rational parameters q as
//! non-free for the group generated by the two parabolic matrices
//! `[[1,1],[0,1]]` and `[[1,0],[q,1]]`.
//!
//! The crate is organized around:
//! - [`rat`], [`poly`], [`mat2`], [`word`]: arbitrary-precision rationals,
//!   integer polynomials in q, 2x2 matrices over either, and freely
//!   reduced words with closed-form power evaluation;
//! - [`roots`]: integer square roots and Sturm-based real-root isolation;
//! - [`halfrel`]: half-relation polynomials, identity-word certificates,
//!   and the one-step calculus;
//! - [`conic`]: the length-5 discriminant conics, generalized Pell orbit
//!   enumeration of integer points, rational roots, and limit maps;
//! - [`families`]: geometric-series and Pell/half-companion-Pell families.
//!
//! Everything is immutable and exact; floats never enter the computation
//! path (decimal output is formatted from exact rationals).

pub mod conic;
pub mod error;
pub mod families;
pub mod halfrel;
pub mod mat2;
pub mod poly;
pub mod rat;
pub mod roots;
pub mod word;

pub use error::{Error, Result};
pub use halfrel::{Certificate, CertificateKind, Tuple};
pub use rat::{Int, Rat};
