//! Integer polynomials in `q` and exact interpolation of point counts.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Σ c_i q^i` with no trailing zero coefficients; the zero polynomial has no
/// coefficients and stands for the empty variety.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub struct PoincarePolynomial {
    coeffs: Vec<i64>,
}

impl PoincarePolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        PoincarePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PoincarePolynomial { coeffs: vec![1] }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        PoincarePolynomial { coeffs }
    }

    /// `(1 + q)^m`.
    pub fn one_plus_q_pow(m: usize) -> Self {
        let mut acc = Self::one();
        let base = PoincarePolynomial { coeffs: vec![1, 1] };
        for _ in 0..m {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> i64 {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0) + other.coeffs.get(i).copied().unwrap_or(0))
            .collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// `q^k · self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    pub fn eval(&self, q: u64) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| acc * q as i128 + c as i128)
    }

    /// Largest `m` with `(1 + q)^m` dividing `self`, and the cofactor.
    pub fn split_one_plus_q(&self) -> (usize, PoincarePolynomial) {
        let mut m = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_one_plus_q() {
            cur = next;
            m += 1;
        }
        (m, cur)
    }

    fn div_one_plus_q(&self) -> Option<PoincarePolynomial> {
        if self.coeffs.len() < 2 {
            return None;
        }
        // synthetic division by (q + 1), from the top
        let n = self.coeffs.len();
        let mut quot = vec![0i64; n - 1];
        let mut carry = 0i64;
        for i in (1..n).rev() {
            let c = self.coeffs[i] - carry;
            quot[i - 1] = c;
            carry = c;
        }
        (self.coeffs[0] - carry == 0).then(|| Self::new(quot))
    }

    /// Space separated coefficients, low degree first; `0` for the zero polynomial.
    pub fn coefficient_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }

    /// `(1+q)^m · rest` when a factor `1 + q` divides, else `None`.
    pub fn factored(&self) -> Option<String> {
        let (m, rest) = self.split_one_plus_q();
        if m == 0 {
            return None;
        }
        let power = if m == 1 { "(1+q)".to_string() } else { format!("(1+q)^{m}") };
        if rest == Self::one() {
            Some(power)
        } else {
            Some(format!("{power}·({rest})"))
        }
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (i, a) {
                (0, _) => a.to_string(),
                (1, 1) => "q".into(),
                (1, _) => format!("{a}q"),
                (_, 1) => format!("q^{i}"),
                _ => format!("{a}q^{i}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// The unique polynomial of degree `< points.len()` through `(x, y)` pairs,
/// required to have integer coefficients.
pub fn interpolate(points: &[(u64, u64)]) -> Result<PoincarePolynomial> {
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|&(x, _)| BigRational::from_integer(BigInt::from(x))).collect();
    // Newton divided differences
    let mut table: Vec<BigRational> = points.iter().map(|&(_, y)| BigRational::from_integer(BigInt::from(y))).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = &xs[i] - &xs[i - level];
            if denom.is_zero() {
                return Err(Error::input("interpolation nodes must be distinct"));
            }
            table[i] = (&table[i] - &table[i - 1]) / denom;
        }
    }
    // expand Σ a_k Π_{j<k} (q - x_j)
    let mut coeffs = vec![BigRational::zero(); n.max(1)];
    let mut basis = vec![BigRational::one()];
    for (k, a) in table.iter().enumerate() {
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += a * b;
        }
        if k + 1 < n {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= &xs[k] * b;
            }
            basis = next;
        }
    }
    let ints = coeffs
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(Error::PolynomialCountViolated(format!("non-integer coefficient {c}")));
            }
            c.to_integer()
                .to_i64()
                .ok_or_else(|| Error::PolynomialCountViolated(format!("coefficient {c} out of range")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PoincarePolynomial::new(ints))
}

/// The first `n` primes.
pub fn first_primes(n: usize) -> Vec<u32> {
    (2u32..).filter(|&p| crate::linalg::is_prime(p as u64)).take(n).collect()
}
