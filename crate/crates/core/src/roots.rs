//! Integer square roots and exact real-root isolation.
//!
//! Root isolation runs entirely over rationals: Sturm counts on a
//! square-free part locate the roots, rational bisection shrinks the
//! isolating intervals below the requested width. No floating point.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPoly;
use crate::rat::{Int, Rat};

/// Floor square root together with an exactness flag. Panics on negative
/// input; callers gate on sign.
pub fn integer_sqrt(n: &Int) -> (Int, bool) {
    assert!(!n.is_negative(), "integer_sqrt of negative value");
    let root = n.sqrt();
    let exact = &root * &root == *n;
    (root, exact)
}

/// Some(root) iff n is a perfect square (n >= 0).
pub fn perfect_square_root(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let (root, exact) = integer_sqrt(n);
    exact.then_some(root)
}

/// Rational bracket lo <= sqrt(n) <= hi with hi - lo <= 10^-scale.
/// Exact squares collapse to a zero-width bracket.
pub fn sqrt_bracket(n: &Int, scale: u32) -> (Rat, Rat) {
    assert!(!n.is_negative(), "sqrt_bracket of negative value");
    let (root, exact) = integer_sqrt(n);
    if exact {
        let r = Rat::from_int(root);
        return (r.clone(), r);
    }
    let denom = Int::from(10u32).pow(scale);
    let scaled = (n * &denom * &denom).sqrt();
    let lo = Rat::new(scaled.clone(), denom.clone()).expect("positive denominator");
    let hi = Rat::new(scaled + 1, denom).expect("positive denominator");
    (lo, hi)
}

// ---- Rational polynomials, private to the isolation machinery ----

#[derive(Clone, Debug)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn from_int(p: &IntPoly) -> RatPoly {
        RatPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(Int::from(k)))
            .collect();
        let mut p = RatPoly { coeffs };
        p.trim();
        p
    }

    /// Scale so the leading coefficient has absolute value 1; keeps signs
    /// stable for Sturm counting with smaller intermediate fractions.
    fn normalize_leading(mut self) -> RatPoly {
        if let Some(lc) = self.coeffs.last().cloned() {
            let scale = lc.abs();
            for c in &mut self.coeffs {
                *c /= &scale;
            }
        }
        self
    }

    /// Polynomial remainder self mod div (div nonzero).
    fn rem(&self, div: &RatPoly) -> RatPoly {
        let mut r = self.clone();
        r.trim();
        let dd = div.degree();
        let dlc = div.coeffs.last().expect("nonzero divisor");
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let factor = r.coeffs.last().expect("nonzero") / dlc;
            for (k, c) in div.coeffs.iter().enumerate() {
                let delta = c * &factor;
                r.coeffs[k + shift] -= delta;
            }
            r.trim();
        }
        r
    }
}

/// Sturm chain of the square-free part of a polynomial.
struct Sturm {
    chain: Vec<RatPoly>,
}

impl Sturm {
    fn new(p: &IntPoly) -> Sturm {
        let p = RatPoly::from_int(p);
        let squarefree = {
            // p / gcd(p, p') shares the real roots of p, all simple.
            let g = poly_gcd(&p, &p.derivative());
            if g.degree() == 0 {
                p.clone()
            } else {
                poly_div_exact(&p, &g)
            }
        };
        let mut chain = vec![
            squarefree.clone().normalize_leading(),
            squarefree.derivative().normalize_leading(),
        ];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let mut r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            for c in &mut r.coeffs {
                *c = -c.clone();
            }
            chain.push(r.normalize_leading());
        }
        Sturm { chain }
    }

    fn sign_changes(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| p.eval(x))
            .filter(|v| !v.is_zero())
            .map(|v| if v.is_negative() { -1 } else { 1 })
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in (lo, hi].
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.sign_changes(lo) - self.sign_changes(hi)
    }

    /// Cauchy bound: every real root lies strictly inside (-m, m).
    fn cauchy_bound(&self) -> BigRational {
        let p = &self.chain[0];
        let lc = p.coeffs.last().expect("nonzero").abs();
        let max = p
            .coeffs
            .iter()
            .take(p.coeffs.len() - 1)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        BigRational::one() + max / lc
    }
}

fn poly_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    a.trim();
    b.trim();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.normalize_leading()
}

fn poly_div_exact(num: &RatPoly, den: &RatPoly) -> RatPoly {
    let mut r = num.clone();
    r.trim();
    let dd = den.degree();
    let dlc = den.coeffs.last().expect("nonzero divisor");
    let mut q = vec![BigRational::zero(); r.coeffs.len().saturating_sub(dd)];
    while !r.is_zero() && r.degree() >= dd {
        let shift = r.degree() - dd;
        let factor = r.coeffs.last().expect("nonzero") / dlc;
        q[shift] = factor.clone();
        for (k, c) in den.coeffs.iter().enumerate() {
            let delta = c * &factor;
            r.coeffs[k + shift] -= delta;
        }
        r.trim();
    }
    let mut out = RatPoly { coeffs: q };
    out.trim();
    out
}

/// Isolating intervals for every distinct real root of `p`, sorted,
/// pairwise disjoint, each of width at most `precision` and containing
/// exactly one root. Panics on the zero polynomial; constants have no
/// roots.
pub fn real_roots(p: &IntPoly, precision: &Rat) -> Vec<(Rat, Rat)> {
    assert!(!p.is_zero(), "real_roots of the zero polynomial");
    assert!(precision.signum() > 0, "precision must be positive");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let sturm = Sturm::new(p);
    if sturm.chain[0].degree() == 0 {
        return Vec::new();
    }
    let bound = sturm.cauchy_bound();
    let lo = -bound.clone();
    let eps = BigRational::new(precision.numer().clone(), precision.denom().clone());
    let mut found: Vec<(BigRational, BigRational)> = Vec::new();
    isolate(&sturm, lo, bound, &eps, &mut found);
    found
        .into_iter()
        .map(|(a, b)| {
            let lo = Rat::new(a.numer().clone(), a.denom().clone()).expect("nonzero denom");
            let hi = Rat::new(b.numer().clone(), b.denom().clone()).expect("nonzero denom");
            (lo, hi)
        })
        .collect()
}

/// Subdivide (lo, hi] until each piece holds one root, then refine.
/// Appends intervals in ascending order.
fn isolate(
    sturm: &Sturm,
    lo: BigRational,
    hi: BigRational,
    eps: &BigRational,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let n = sturm.count(&lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(refine(sturm, lo, hi, eps));
        return;
    }
    let two = BigRational::from_integer(Int::from(2));
    let mid = (&lo + &hi) / &two;
    if sturm.chain[0].eval(&mid).is_zero() {
        // The midpoint is itself a root; carve out a tight interval around
        // it so the flanking segments have clean endpoints.
        let mut delta = (&hi - &lo) / BigRational::from_integer(Int::from(4));
        loop {
            let a = &mid - &delta;
            let b = &mid + &delta;
            if sturm.count(&a, &b) == 1 && &(&b - &a) <= eps {
                isolate(sturm, lo, a.clone(), eps, out);
                out.push((a, b.clone()));
                isolate(sturm, b, hi, eps, out);
                return;
            }
            delta /= &two;
        }
    }
    isolate(sturm, lo, mid.clone(), eps, out);
    isolate(sturm, mid, hi, eps, out);
}

/// Shrink an interval known to hold exactly one simple root.
fn refine(
    sturm: &Sturm,
    mut lo: BigRational,
    mut hi: BigRational,
    eps: &BigRational,
) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(Int::from(2));
    let p = &sturm.chain[0];
    while &(&hi - &lo) > eps {
        let mid = (&lo + &hi) / &two;
        let v = p.eval(&mid);
        if v.is_zero() {
            // Exact rational root: pin it inside a width-eps interval.
            let mut delta = (&hi - &lo) / BigRational::from_integer(Int::from(4));
            loop {
                let a = &mid - &delta;
                let b = &mid + &delta;
                if &(&b - &a) <= eps && sturm.count(&a, &b) == 1 {
                    return (a, b);
                }
                delta /= &two;
            }
        }
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}
