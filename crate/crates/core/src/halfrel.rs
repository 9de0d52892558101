//! Half-relation polynomials, identity-word certificates, and the
//! complete one-step calculus.
//!
//! A tuple (a_1, ..., a_l) of nonzero integers determines the alternating
//! word a^{a_1} b^{a_2} ... ; the tuple is a half-relation for q when the
//! evaluated matrix satisfies the symmetry q*c12 = c21 (odd length) or
//! c11 = c22 (even length). Vanishing of the half-relation polynomial is
//! equivalent to that condition, and a half-relation yields a genuine
//! relator: the alternating word equals its mirror, so their quotient is
//! a nonempty reduced word evaluating to the identity. Certificates are
//! never emitted unverified; both checks re-run on every construction.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::rat::{Int, Rat};
use crate::word::{free_reduce, Gen, Word};

/// Exponent tuple with every entry nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tuple {
    entries: Vec<Int>,
}

impl Tuple {
    pub fn new(entries: Vec<Int>) -> Result<Tuple> {
        if entries.is_empty() {
            return Err(Error::EmptyTuple);
        }
        if entries.iter().any(|a| a.is_zero()) {
            return Err(Error::ZeroEntry);
        }
        Ok(Tuple { entries })
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Tuple> {
        Tuple::new(entries.iter().map(|&a| Int::from(a)).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// The alternating word a^{a_1} b^{a_2} a^{a_3} ...; already reduced
/// because every exponent is nonzero.
pub fn alt_word(t: &Tuple) -> Word {
    Word::from_syllables(t.entries.iter().enumerate().map(|(i, a)| {
        let gen = if i % 2 == 0 { Gen::A } else { Gen::B };
        (gen, a.clone())
    }))
}

/// The mirrored word b^{a_l} a^{a_{l-1}} b^{a_{l-2}} ...: exponents in
/// reverse order, strict alternation starting from b.
pub fn mirror_word(t: &Tuple) -> Word {
    let l = t.entries.len();
    Word::from_syllables((0..l).map(|i| {
        let gen = if i % 2 == 0 { Gen::B } else { Gen::A };
        (gen, t.entries[l - 1 - i].clone())
    }))
}

/// The half-relation polynomial as an exact integer polynomial in q.
///
/// Built from the symbolic word matrix M: for odd length the combination
/// q*c12(M) - c21(M), for even length c11(M) - c22(M); both vanish at
/// q = 0, so one exact division by q gives an integer polynomial with the
/// same nonzero roots. A failed division is a structural-invariant
/// violation and surfaces as `Divisibility`.
pub fn half_relation_poly(t: &Tuple) -> Result<IntPoly> {
    let m = alt_word(t).eval_symbolic();
    let combo = if t.len() % 2 == 1 {
        m.c12.mul_var().sub(&m.c21)
    } else {
        m.c11.sub(&m.c22)
    };
    combo.div_exact_var()
}

/// True iff the half-relation polynomial vanishes at q. Rejects q = 0,
/// where the defining symmetry divides by q.
pub fn is_half_relation(t: &Tuple, q: &Rat) -> Result<bool> {
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    Ok(half_relation_poly(t)?.eval(q).is_zero())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertificateKind {
    HalfRelation,
    OneStep,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::HalfRelation => "half-relation",
            CertificateKind::OneStep => "one-step",
        }
    }
}

/// Exact, independently checkable witness of non-freeness: a nonempty
/// reduced word whose evaluation at q is the identity matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub tuple: Tuple,
    pub q: Rat,
    pub relator: Word,
    pub identity_verified: bool,
    pub nontrivial_verified: bool,
}

impl Certificate {
    pub fn is_fully_verified(&self) -> bool {
        self.identity_verified && self.nontrivial_verified
    }

    /// Fixed-key-order JSON object. All content is digits, fraction
    /// slashes and generator letters, so no escaping is ever needed.
    pub fn to_json(&self) -> String {
        let tuple = self
            .tuple
            .entries()
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let relator = self
            .relator
            .syllables()
            .iter()
            .map(|(g, e)| format!("[\"{}\",{}]", g.letter(), e))
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{{\"kind\":\"{}\",\"tuple\":[{}],\"q\":\"{}\",\"relator\":[{}],\"identity_verified\":{},\"nontrivial_verified\":{}}}",
            self.kind.as_str(),
            tuple,
            self.q,
            relator,
            self.identity_verified,
            self.nontrivial_verified
        )
    }
}

fn verified_certificate(
    kind: CertificateKind,
    tuple: Tuple,
    q: Rat,
    relator: Word,
) -> Result<Certificate> {
    let identity_verified = relator.eval(&q).is_identity();
    let nontrivial_verified = !relator.is_identity();
    if !identity_verified {
        return Err(Error::CertificateFailure(
            "relator does not evaluate to the identity",
        ));
    }
    if !nontrivial_verified {
        return Err(Error::CertificateFailure(
            "relator reduced to the empty word",
        ));
    }
    Ok(Certificate {
        kind,
        tuple,
        q,
        relator,
        identity_verified,
        nontrivial_verified,
    })
}

/// Certificate for a half-relation: relator = alt * mirror^{-1}, reduced.
/// Errors with `NotAHalfRelation` when the precondition fails and
/// `CertificateFailure` if verification fails (which would indicate a
/// broken mirror convention, never silently passed).
pub fn certify_half_relation(t: &Tuple, q: &Rat) -> Result<Certificate> {
    if !is_half_relation(t, q)? {
        return Err(Error::NotAHalfRelation);
    }
    let relator = alt_word(t).concat(&mirror_word(t).inverse());
    verified_certificate(CertificateKind::HalfRelation, t.clone(), q.clone(), relator)
}

// ---- One-step calculus ----

fn require_nonzero(vals: &[i64]) -> Result<()> {
    if vals.contains(&0) {
        return Err(Error::ZeroArg);
    }
    Ok(())
}

/// (r+t)/(rst) in lowest terms.
pub fn one_step_q(r: i64, s: i64, t: i64) -> Result<Rat> {
    require_nonzero(&[r, s, t])?;
    Rat::new(
        Int::from(r) + Int::from(t),
        Int::from(r) * Int::from(s) * Int::from(t),
    )
}

/// The word b^r a^{-s} b^t.
pub fn one_step_word(r: i64, s: i64, t: i64) -> Word {
    assert!(
        r != 0 && s != 0 && t != 0,
        "one_step_word requires nonzero exponents"
    );
    Word::from_syllables([
        (Gen::B, Int::from(r)),
        (Gen::A, Int::from(-s)),
        (Gen::B, Int::from(t)),
    ])
}

/// Whether b^r a^{-s} b^t evaluates upper-triangular at q. For q != 0
/// this holds exactly when q = (r+t)/(rst).
pub fn is_one_step_upper_triangular(r: i64, s: i64, t: i64, q: &Rat) -> bool {
    one_step_word(r, s, t).eval(q).is_upper_triangular()
}

/// Smallest (r,s,t) with |r|,|s|,|t| <= bound and (r+t)/(rst) = q, under
/// the lexicographic order on (|r|,|s|,|t|) with sign pattern (+ before -)
/// as the final tie-break. None when no solution exists within the bound.
pub fn one_step_search(q: &Rat, bound: i64) -> Option<(i64, i64, i64)> {
    assert!(bound >= 1);
    if q.is_zero() {
        return None;
    }
    let signs = [
        (1i64, 1i64, 1i64),
        (1, 1, -1),
        (1, -1, 1),
        (1, -1, -1),
        (-1, 1, 1),
        (-1, 1, -1),
        (-1, -1, 1),
        (-1, -1, -1),
    ];
    for ra in 1..=bound {
        for sa in 1..=bound {
            for ta in 1..=bound {
                for (sr, ss, st) in signs {
                    let (r, s, t) = (sr * ra, ss * sa, st * ta);
                    if one_step_q(r, s, t).as_ref() == Ok(q) {
                        return Some((r, s, t));
                    }
                }
            }
        }
    }
    None
}

/// Certificate for the one-step relator [w a w^{-1}, a] with
/// w = b^r a^{-s} b^t at q = (r+t)/(rst). Needs r + t != 0 so that q is
/// a usable nonzero parameter.
pub fn one_step_certificate(r: i64, s: i64, t: i64) -> Result<Certificate> {
    let q = one_step_q(r, s, t)?;
    if q.is_zero() {
        return Err(Error::ZeroQ);
    }
    let w = one_step_word(r, s, t);
    let a = Word::from_syllables([(Gen::A, Int::from(1))]);
    let conj = w.concat(&a).concat(&w.inverse());
    let relator = free_reduce(
        conj.syllables()
            .iter()
            .chain(a.syllables())
            .chain(conj.inverse().syllables())
            .chain(a.inverse().syllables())
            .cloned(),
    );
    let tuple = Tuple::from_i64s(&[r, s, t])?;
    verified_certificate(CertificateKind::OneStep, tuple, q, relator)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tup(entries: &[i64]) -> Tuple {
        Tuple::from_i64s(entries).unwrap()
    }

    fn rq(n: i64, d: i64) -> Rat {
        Rat::new(Int::from(n), Int::from(d)).unwrap()
    }

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn tuple_validation() {
        assert_eq!(Tuple::from_i64s(&[1, 0, 1]), Err(Error::ZeroEntry));
        assert_eq!(Tuple::new(vec![]), Err(Error::EmptyTuple));
        assert_eq!(tup(&[1, 54, 1]).len(), 3);
    }

    #[test]
    fn alt_word_examples() {
        assert_eq!(alt_word(&tup(&[1, 54, 1])).to_string(), "a b^54 a");
        assert_eq!(alt_word(&tup(&[3])).to_string(), "a^3");
        assert_eq!(
            alt_word(&tup(&[1, -4, 1, -1, 1, -1])).to_string(),
            "a b^-4 a b^-1 a b^-1"
        );
    }

    #[test]
    fn mirror_word_examples() {
        assert_eq!(mirror_word(&tup(&[1, 54, 1])).to_string(), "b a^54 b");
        assert_eq!(mirror_word(&tup(&[7])).to_string(), "b^7");
        assert_eq!(
            mirror_word(&tup(&[1, -4, 1, -1, 1, -1])).to_string(),
            "b^-1 a b^-1 a b^-4 a"
        );
    }

    #[test]
    fn length_three_poly() {
        assert_eq!(
            half_relation_poly(&tup(&[1, 54, 1])).unwrap(),
            poly(&[-52, 54])
        );
        // a1*a2*a3*q + a1 - a2 + a3 for (2,3,5)
        assert_eq!(
            half_relation_poly(&tup(&[2, 3, 5])).unwrap(),
            poly(&[4, 30])
        );
    }

    #[test]
    fn length_five_poly_closed_form() {
        // (1,-1,1,-1,2): c2 = 2, c1 = -8, c0 = 6
        assert_eq!(
            half_relation_poly(&tup(&[1, -1, 1, -1, 2])).unwrap(),
            poly(&[6, -8, 2])
        );
    }

    #[test]
    fn degenerate_lengths_are_well_defined() {
        // length 1: constant a1; length 2: constant a1*a2
        assert_eq!(half_relation_poly(&tup(&[7])).unwrap(), poly(&[7]));
        assert_eq!(half_relation_poly(&tup(&[3, -4])).unwrap(), poly(&[-12]));
    }

    #[test]
    fn is_half_relation_examples() {
        assert!(is_half_relation(&tup(&[1, 54, 1]), &rq(26, 27)).unwrap());
        assert!(is_half_relation(&tup(&[1, 520, 64]), &rq(7, 512)).unwrap());
        assert!(!is_half_relation(&tup(&[1, 54, 1]), &rq(1, 2)).unwrap());
        assert!(!is_half_relation(&tup(&[1, 54, 1]), &rq(1, 3)).unwrap());
        assert_eq!(
            is_half_relation(&tup(&[1, 54, 1]), &Rat::zero()),
            Err(Error::ZeroQ)
        );
    }

    #[test]
    fn certificates_for_worked_examples() {
        for (t, q) in [
            (tup(&[1, -4, 1, -1, 1, -1]), rq(5, 2)),
            (tup(&[1, 54, 1]), rq(26, 27)),
            (tup(&[1, 405, 4]), rq(20, 81)),
        ] {
            let cert = certify_half_relation(&t, &q).unwrap();
            assert!(cert.is_fully_verified());
            assert_eq!(cert.kind, CertificateKind::HalfRelation);
            assert!(!cert.relator.is_identity());
            assert!(cert.relator.eval(&q).is_identity());
        }
    }

    #[test]
    fn certify_rejects_non_half_relation() {
        assert_eq!(
            certify_half_relation(&tup(&[1, 54, 1]), &rq(1, 2)),
            Err(Error::NotAHalfRelation)
        );
    }

    #[test]
    fn one_step_value() {
        assert_eq!(one_step_q(5, 2, 5).unwrap(), rq(1, 5));
        assert_eq!(one_step_q(1, 1, 1).unwrap(), rq(2, 1));
        assert_eq!(one_step_q(1, 1, 2).unwrap(), rq(3, 2));
        assert_eq!(one_step_q(0, 1, 1), Err(Error::ZeroArg));
        assert!(one_step_q(1, 1, -1).unwrap().is_zero());
    }

    #[test]
    fn one_step_triangularity() {
        assert!(is_one_step_upper_triangular(1, 1, 2, &rq(3, 2)));
        assert!(!is_one_step_upper_triangular(1, 1, 2, &Rat::one()));
        for n in [2i64, 3, 5, 7] {
            assert!(is_one_step_upper_triangular(n, 2, n, &rq(1, n)));
        }
    }

    #[test]
    fn one_step_search_deterministic() {
        // (1,4,-5) also satisfies (r+t)/(rst) = 1/5 and precedes (5,2,5)
        // in the (|r|,|s|,|t|, signs) order.
        assert_eq!(one_step_search(&rq(1, 5), 10), Some((1, 4, -5)));
        assert_eq!(one_step_search(&rq(2, 1), 2), Some((1, 1, 1)));
        assert_eq!(one_step_search(&rq(7, 2), 3), None);
    }

    #[test]
    fn one_step_certificates() {
        for (r, s, t) in [(3i64, 2, 3), (1, 1, 1), (1, 1, 2)] {
            let cert = one_step_certificate(r, s, t).unwrap();
            assert!(cert.is_fully_verified());
            assert_eq!(cert.kind, CertificateKind::OneStep);
            assert_eq!(cert.q, one_step_q(r, s, t).unwrap());
        }
        assert_eq!(one_step_certificate(3, 2, 3).unwrap().q, rq(1, 3));
        assert_eq!(one_step_certificate(1, 2, -1), Err(Error::ZeroQ));
    }

    #[test]
    fn certificate_json_shape() {
        let cert = certify_half_relation(&tup(&[1, 54, 1]), &rq(26, 27)).unwrap();
        let json = cert.to_json();
        assert!(json.starts_with("{\"kind\":\"half-relation\",\"tuple\":[1,54,1],\"q\":\"26/27\",\"relator\":[[\"a\",1],"));
        assert!(json.ends_with("\"identity_verified\":true,\"nontrivial_verified\":true}"));
    }
}
