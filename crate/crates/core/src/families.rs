//! Explicit certified families: geometric-series half-relations and the
//! Pell / half-companion-Pell families converging to 1 + sqrt(2).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::halfrel::Tuple;
use crate::rat::{Int, Rat};

fn pow(k: i64, e: i64) -> Int {
    debug_assert!(e >= 0);
    Int::from(k).pow(e as u32)
}

/// Block family: q = (k-1) * sum of k^-n for n in [s, t]
///            = k^(1-s) - k^-t, tuple (1, k^(t-s)(k^s + k), k^(s-1)).
/// Requires k >= 2, 1 <= s <= t.
pub fn geom_block(k: i64, s: i64, t: i64) -> Result<(Rat, Tuple)> {
    if k < 2 || s < 1 || t < s {
        return Err(Error::BadParams(format!(
            "block family needs k >= 2 and 1 <= s <= t, got (k,s,t) = ({k},{s},{t})"
        )));
    }
    let q = Rat::new(pow(k, t - s + 1) - 1, pow(k, t))?;
    let tuple = Tuple::new(vec![
        Int::from(1),
        pow(k, t - s) * (pow(k, s) + Int::from(k)),
        pow(k, s - 1),
    ])?;
    Ok((q, tuple))
}

/// Alternating family: q = (k-1) * sum of k^(-s-2n) for n in [0, t],
/// tuple (k^(s-2), (k^(s-2) + k + 1) k^(2t+2), k + 1).
/// Requires k >= 2, s >= 2, t >= 1.
pub fn geom_alternating(k: i64, s: i64, t: i64) -> Result<(Rat, Tuple)> {
    if k < 2 || s < 2 || t < 1 {
        return Err(Error::BadParams(format!(
            "alternating family needs k >= 2, s >= 2, t >= 1, got (k,s,t) = ({k},{s},{t})"
        )));
    }
    let q = Rat::new(pow(k, 2 * t + 2) - 1, pow(k, s + 2 * t) * Int::from(k + 1))?;
    let head = pow(k, s - 2);
    let tuple = Tuple::new(vec![
        head.clone(),
        (head + Int::from(k + 1)) * pow(k, 2 * t + 2),
        Int::from(k + 1),
    ])?;
    Ok((q, tuple))
}

/// Pell and half-companion Pell values at one index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PellState {
    pub n: u32,
    /// Pell number: 0, 1, 2, 5, 12, 29, 70, 169, ...
    pub p: Int,
    /// Half-companion Pell number: 1, 1, 3, 7, 17, 41, 99, 239, ...
    pub h: Int,
}

/// Memoized Pell/half-companion table, extended on demand. Thread-confined;
/// every other operation in this module is a pure function.
#[derive(Clone, Debug)]
pub struct PellTable {
    p: Vec<Int>,
    h: Vec<Int>,
}

impl Default for PellTable {
    fn default() -> Self {
        PellTable::new()
    }
}

impl PellTable {
    pub fn new() -> PellTable {
        PellTable {
            p: vec![Int::zero(), Int::from(1)],
            h: vec![Int::from(1), Int::from(1)],
        }
    }

    pub fn state(&mut self, n: u32) -> PellState {
        let n_us = n as usize;
        while self.p.len() <= n_us {
            let k = self.p.len();
            self.p.push(Int::from(2) * &self.p[k - 1] + &self.p[k - 2]);
            self.h.push(Int::from(2) * &self.h[k - 1] + &self.h[k - 2]);
        }
        PellState {
            n,
            p: self.p[n_us].clone(),
            h: self.h[n_us].clone(),
        }
    }
}

/// Both sequence values at index n (recurrence, never closed form).
pub fn pell_state(n: u32) -> PellState {
    PellTable::new().state(n)
}

/// The Pell-ratio half-relation: q_n = P_{n+1}/P_n with tuple
/// (1, x_n, 1, -1, 1, -1), x_n = (-1)^(n+1) * 2 * P_n * P_{n-1}.
pub fn pell_tuple(n: u32) -> Result<(Rat, Tuple)> {
    if n < 2 {
        return Err(Error::IndexTooSmall);
    }
    let mut table = PellTable::new();
    let prev = table.state(n - 1).p;
    let cur = table.state(n).p;
    let next = table.state(n + 1).p;
    let mut x = Int::from(2) * &cur * prev;
    if n.is_multiple_of(2) {
        x = -x;
    }
    let q = Rat::new(next, cur)?;
    Ok((q, middle_slot_tuple(x)?))
}

/// The half-companion variant: a_n = H_{n+1}/H_n with
/// y_n = (-1)^n * H_n * H_{n-1}.
pub fn half_pell_tuple(n: u32) -> Result<(Rat, Tuple)> {
    if n < 2 {
        return Err(Error::IndexTooSmall);
    }
    let mut table = PellTable::new();
    let prev = table.state(n - 1).h;
    let cur = table.state(n).h;
    let next = table.state(n + 1).h;
    let mut y = &cur * prev;
    if n % 2 == 1 {
        y = -y;
    }
    let q = Rat::new(next, cur)?;
    Ok((q, middle_slot_tuple(y)?))
}

fn middle_slot_tuple(x: Int) -> Result<Tuple> {
    Tuple::new(vec![
        Int::from(1),
        x,
        Int::from(1),
        Int::from(-1),
        Int::from(1),
        Int::from(-1),
    ])
}

/// The vanishing polynomial of the Pell families:
/// f(q, x) = q^2 x - 2qx + 2q - x - 4, equal to the length-6
/// half-relation polynomial of (1, x, 1, -1, 1, -1) at q.
pub fn f_check(q: &Rat, x: &Int) -> Rat {
    let x = Rat::from_int(x.clone());
    let two = Rat::from(2);
    let four = Rat::from(4);
    &(&(&(&(q * q) * &x) - &(&(&two * q) * &x)) + &(&two * q)) - &(&x + &four)
}

/// Exact value of the fractional base-k expansion "0.d1d2...".
/// Digits 0-9 then a-z (case-insensitive), each below k; 2 <= k <= 36.
pub fn base_k_parse(digits: &str, k: u32) -> Result<Rat> {
    if !(2..=36).contains(&k) {
        return Err(Error::BadParams(format!("base must be in 2..=36, got {k}")));
    }
    let rest = digits
        .strip_prefix("0.")
        .or_else(|| digits.strip_prefix('.'))
        .ok_or_else(|| {
            Error::BadParams(format!(
                "expected a fractional expansion like \"0.d1d2...\", got \"{digits}\""
            ))
        })?;
    if rest.is_empty() {
        return Err(Error::BadParams("expected at least one digit".to_string()));
    }
    let mut num = Int::zero();
    for c in rest.chars() {
        let d = c.to_digit(36).ok_or(Error::BadDigit(c))?;
        if d >= k {
            return Err(Error::BadDigit(c));
        }
        num = num * Int::from(k) + Int::from(d);
    }
    Rat::new(num, Int::from(k).pow(rest.len() as u32))
}
