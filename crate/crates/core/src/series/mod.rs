//! Truncated formal power series over GF(2).
//!
//! A [`Gf2Series`] of order `N` stores the coefficients of `z^0 .. z^{N-1}`
//! packed into 64-bit words. Addition is XOR and multiplication is
//! carryless convolution, so every operation here is exact modulo 2.

mod expr;

pub use expr::{evaluate, parse, Builtin, SeriesExpr};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown builtin `{name}` at offset {offset}")]
    UnknownBuiltin { name: String, offset: usize },
    #[error("requested order {requested} exceeds available order {available}")]
    OrderExceeded { requested: usize, available: usize },
    #[error("series has constant term 0 and cannot be inverted")]
    ZeroConstantTerm,
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("fixed-point iteration for `{0}` did not converge")]
    NoConvergence(Builtin),
}

/// Selects the even- or odd-indexed subsequence of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Series {
    words: Vec<u64>,
    order: usize,
}

fn words_for(order: usize) -> usize {
    order.div_ceil(64)
}

impl Gf2Series {
    pub fn zero(order: usize) -> Self {
        Gf2Series {
            words: vec![0; words_for(order)],
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.set(0, true);
        }
        s
    }

    /// The monomial `z^k`, truncated to `order`.
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.set(k, true);
        }
        s
    }

    pub fn from_coeffs<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        let bits: Vec<bool> = coeffs.into_iter().collect();
        let mut s = Self::zero(bits.len());
        for (k, b) in bits.into_iter().enumerate() {
            s.set(k, b);
        }
        s
    }

    /// Builds a series from 0/1 digits; any odd value counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::from_coeffs(bits.iter().map(|b| b & 1 == 1))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `z^k`. Indices at or beyond the order are undefined
    /// and reported as `None`.
    pub fn get(&self, k: usize) -> Option<bool> {
        (k < self.order).then(|| self.bit(k))
    }

    /// Coefficient of `z^k`.
    ///
    /// Panics if `k` is not below the truncation order.
    pub fn coeff(&self, k: usize) -> bool {
        assert!(
            k < self.order,
            "coefficient {k} beyond truncation order {}",
            self.order
        );
        self.bit(k)
    }

    fn bit(&self, k: usize) -> bool {
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    fn set(&mut self, k: usize, value: bool) {
        let mask = 1u64 << (k % 64);
        if value {
            self.words[k / 64] |= mask;
        } else {
            self.words[k / 64] &= !mask;
        }
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.order).map(|k| self.bit(k) as u8).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Indices of the nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Prefix of length `order`.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::OrderExceeded {
                requested: order,
                available: self.order,
            });
        }
        let mut s = Self::zero(order);
        let n = words_for(order);
        s.words.copy_from_slice(&self.words[..n]);
        s.clear_tail();
        Ok(s)
    }

    fn clear_tail(&mut self) {
        let rem = self.order % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Sum modulo 2; the result has the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut s = Self::zero(order);
        for (i, w) in s.words.iter_mut().enumerate() {
            *w = self.words[i] ^ other.words[i];
        }
        s.clear_tail();
        s
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order);
        xor_shifted(&mut s.words, &self.words, k, self.order);
        s
    }

    /// Drops the first `k` coefficients (division by `z^k`); the order
    /// shrinks by `k`.
    pub fn shift_down(&self, k: usize) -> Self {
        let order = self.order.saturating_sub(k);
        Self::from_coeffs((0..order).map(|i| self.bit(i + k)))
    }

    /// Multiplies by `z^k` and extends the order by `k`, so no
    /// information is lost.
    pub fn times_z_pow(&self, k: usize) -> Self {
        let order = self.order + k;
        let mut s = Self::zero(order);
        xor_shifted(&mut s.words, &self.words, k, order);
        s
    }
}

impl fmt::Debug for Gf2Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Series({self})")
    }
}

impl fmt::Display for Gf2Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.order {
            f.write_str(if self.bit(k) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `dst ^= (src << shift)` restricted to the first `order` bits of `dst`.
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize, order: usize) {
    if shift >= order {
        return;
    }
    let word_shift = shift / 64;
    let bit_shift = shift % 64;
    let dst_words = words_for(order);
    for (i, &w) in src.iter().enumerate() {
        let lo = i + word_shift;
        if lo >= dst_words {
            break;
        }
        dst[lo] ^= w << bit_shift;
        if bit_shift != 0 && lo + 1 < dst_words {
            dst[lo + 1] ^= w >> (64 - bit_shift);
        }
    }
    let rem = order % 64;
    if rem != 0 {
        dst[dst_words - 1] &= (1u64 << rem) - 1;
    }
}

/// Truncated product of two series.
pub fn mul_trunc(a: &Gf2Series, b: &Gf2Series, order: usize) -> Result<Gf2Series, SeriesError> {
    let available = a.order.min(b.order);
    if order > available {
        return Err(SeriesError::OrderExceeded {
            requested: order,
            available,
        });
    }
    let mut out = Gf2Series::zero(order);
    let b = b.truncate(order)?;
    for i in a.support() {
        if i >= order {
            break;
        }
        xor_shifted(&mut out.words, &b.words, i, order);
    }
    Ok(out)
}

/// Multiplicative inverse truncated to `order`.
pub fn reciprocal(a: &Gf2Series, order: usize) -> Result<Gf2Series, SeriesError> {
    if order > a.order {
        return Err(SeriesError::OrderExceeded {
            requested: order,
            available: a.order,
        });
    }
    if order == 0 {
        return Ok(Gf2Series::zero(0));
    }
    if !a.coeff(0) {
        return Err(SeriesError::ZeroConstantTerm);
    }
    // r_k = sum_{i=1..k} a_i r_{k-i}
    let mut r = Gf2Series::zero(order);
    r.set(0, true);
    let taps: Vec<usize> = a.support().filter(|&i| i > 0 && i < order).collect();
    for k in 1..order {
        let mut acc = false;
        for &i in &taps {
            if i > k {
                break;
            }
            acc ^= r.bit(k - i);
        }
        r.set(k, acc);
    }
    Ok(r)
}

/// Even- or odd-indexed subsequence: `result_k = a_{2k}` or `a_{2k+1}`.
///
/// Mod 2 the derivative kills every even-index term, which makes
/// `g'(sqrt z)` equal to the odd part of `g` and `(zg)'(sqrt z)` equal to
/// the even part. The result keeps exactly the indices that are defined.
pub fn parity_part(a: &Gf2Series, parity: Parity) -> Gf2Series {
    let (offset, order) = match parity {
        Parity::Even => (0, a.order.div_ceil(2)),
        Parity::Odd => (1, a.order / 2),
    };
    Gf2Series::from_coeffs((0..order).map(|k| a.bit(2 * k + offset)))
}

/// Solves the defining equation of a builtin series by iterating
/// `s <- phi(s)` from `s = 1`. Each pass fixes at least one more
/// coefficient.
pub fn solve_fixed_point(builtin: Builtin, order: usize) -> Result<Gf2Series, SeriesError> {
    if order == 0 {
        return Err(SeriesError::ZeroOrder);
    }
    let one = Gf2Series::one(order);
    let step = |s: &Gf2Series| -> Result<Gf2Series, SeriesError> {
        let sq = mul_trunc(s, s, order)?;
        Ok(match builtin {
            // C = 1 + z C^2
            Builtin::Catalan => one.add(&sq.shift_up(1)),
            // M = 1 + z M + z^2 M^2
            Builtin::Motzkin => one.add(&s.shift_up(1)).add(&sq.shift_up(2)),
        })
    };
    let mut s = one.clone();
    for _ in 0..=order {
        let next = step(&s)?;
        if next == s {
            return Ok(s);
        }
        s = next;
    }
    Err(SeriesError::NoConvergence(builtin))
}
