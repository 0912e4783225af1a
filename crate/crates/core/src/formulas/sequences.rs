use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::counting::BigCount;
use crate::graphs::DeltaVariant;

use super::FormulaError;

/// Integer polynomial with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        while p.coeffs.last().is_some_and(Zero::is_zero) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + sum x^e` over the given exponents.
    pub fn one_plus_monomials(exponents: &[usize]) -> Self {
        let len = exponents.iter().copied().max().unwrap_or(0) + 1;
        let mut c = vec![BigInt::zero(); len];
        c[0] += 1;
        for &e in exponents {
            c[e] += 1;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }
}

/// First `count` coefficients of `num / den`, where `den(0) = +-1`,
/// via the linear recurrence the denominator induces.
pub fn rational_series(
    num: &IntPolynomial,
    den: &IntPolynomial,
    count: usize,
) -> Result<Vec<BigInt>, FormulaError> {
    let d0 = den.coeff(0);
    if d0.abs() != BigInt::one() {
        return Err(FormulaError::NonUnitDenominator);
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for m in 0..count {
        let mut acc = num.coeff(m);
        for (j, dj) in den.coeffs().iter().enumerate().skip(1).take(m) {
            acc -= dj * &out[m - j];
        }
        out.push(acc * &d0);
    }
    Ok(out)
}

/// `F(0) = F(1) = 1`, `F(n) = F(n-1) + F(n-2)`.
pub fn fibonacci(n: usize) -> BigCount {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 1..n {
        let c = &a + &b;
        a = std::mem::replace(&mut b, c);
    }
    b
}

/// `F_k(1) = ... = F_k(k) = 1`, `F_k(n) = F_k(n-1) + F_k(n-k)`.
pub fn k_fibonacci(k: usize, n: usize) -> Result<BigCount, FormulaError> {
    if k < 2 {
        return Err(FormulaError::KTooSmall(k));
    }
    if n == 0 {
        return Err(FormulaError::IndexOutOfDomain(0));
    }
    let mut seq: Vec<BigUint> = vec![BigUint::one(); k.min(n)];
    for m in k + 1..=n {
        let next = &seq[m - 2] + &seq[m - 1 - k];
        seq.push(next);
    }
    Ok(seq.pop().expect("n >= 1"))
}

/// `P_0 = 0`, `P_1 = 1`, `P_n = 2 P_{n-1} + P_{n-2}`.
pub fn pell(n: usize) -> BigCount {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = &b * 2u32 + &a;
        a = std::mem::replace(&mut b, c);
    }
    b
}

/// `P_n` from `((1+sqrt2)^n - (1-sqrt2)^n) / (2 sqrt2)`, evaluated exactly:
/// writing `(1+sqrt2)^n = a + b sqrt2`, the quotient is `b`.
pub fn pell_binet(n: usize) -> BigCount {
    let (mut a, mut b) = (BigUint::one(), BigUint::zero());
    for _ in 0..n {
        // (a + b sqrt2)(1 + sqrt2) = (a + 2b) + (a + b) sqrt2
        let na = &a + &b * 2u32;
        let nb = &a + &b;
        a = na;
        b = nb;
    }
    b
}

/// `delta_n` (plain) or `tilde-delta_n`, the independent-set counts of the
/// Δ graphs, from their Pell closed forms. Nonpositive indices give 1.
pub fn delta(n: i64, variant: DeltaVariant) -> BigCount {
    if n <= 0 {
        return BigUint::one();
    }
    let n = n as usize;
    if n.is_multiple_of(2) {
        return pell(n / 2) + pell(n / 2 + 1);
    }
    match variant {
        DeltaVariant::Plain => pell(n.div_ceil(2)) * 2u32,
        DeltaVariant::Tilde => pell((n - 1) / 2) + pell(n.div_ceil(2)) * 2u32,
    }
}

/// Plain `delta_n` from `delta_{2m} = delta_{2m-1} + delta_{2m-2}`,
/// `delta_{2m+1} = delta_{2m} + delta_{2m-2}`, starting at 1, 2, 3.
pub fn delta_by_recurrence(n: usize) -> BigCount {
    let mut seq: Vec<BigUint> = vec![1u32.into(), 2u32.into(), 3u32.into()];
    for m in 3..=n {
        let next = if m % 2 == 0 {
            &seq[m - 1] + &seq[m - 2]
        } else {
            &seq[m - 1] + &seq[m - 3]
        };
        seq.push(next);
    }
    seq.swap_remove(n)
}

/// `delta_n` from the generating functions
/// `(1+2z+z^2)/(1-2z^2-z^4)` and `(1+2z+z^2+z^3)/(1-2z^2-z^4)`.
pub fn delta_by_series(n: usize, variant: DeltaVariant) -> BigCount {
    let num = match variant {
        DeltaVariant::Plain => IntPolynomial::from_i64(&[1, 2, 1]),
        DeltaVariant::Tilde => IntPolynomial::from_i64(&[1, 2, 1, 1]),
    };
    let den = IntPolynomial::from_i64(&[1, 0, -2, 0, -1]);
    let coeffs = rational_series(&num, &den, n + 1).expect("unit denominator");
    coeffs[n].to_biguint().expect("counts are nonnegative")
}
