//! Univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored constant term first. The zero polynomial is the
//! empty coefficient vector; otherwise the leading coefficient is nonzero.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients, constant term first.
    /// Trailing zeros are stripped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial c * x^d.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        IntPolynomial { coeffs }
    }

    /// x - r
    pub fn linear_root(r: &BigInt) -> Self {
        IntPolynomial {
            coeffs: vec![-r.clone(), BigInt::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root 0 (the largest t with x^t dividing self). Zero polynomial: 0.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    /// Divides by x^t. Panics if x^t does not divide self.
    pub fn shift_down(&self, t: usize) -> Self {
        assert!(self.trailing_zeros() >= t || self.is_zero());
        if self.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs[t..].to_vec(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Synthetic division by (x - r). Returns the quotient if the remainder
    /// is zero, i.e. if r is a root.
    pub fn div_by_root(&self, r: &BigInt) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.coeffs.len() - 1;
        if d == 0 {
            return None;
        }
        let mut q = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..d).rev() {
            carry = &self.coeffs[i + 1] + r * &carry;
            q[i] = carry.clone();
        }
        let rem = &self.coeffs[0] + r * carry;
        if rem.is_zero() {
            Some(IntPolynomial { coeffs: q })
        } else {
            None
        }
    }

    /// Schoolbook division by a monic divisor; exact over the integers.
    /// Returns (quotient, remainder). Panics if the divisor is not monic.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let qd = rem.len() - 1 - dd;
        let mut quot = vec![BigInt::zero(); qd + 1];
        for i in (0..=qd).rev() {
            let c = rem[i + dd].clone();
            if c.is_zero() {
                continue;
            }
            quot[i] = c.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[i + j] -= t;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Substitutes x -> (s - x) and renormalizes the sign so the result is
    /// monic whenever self is monic.
    pub fn reflect_at(&self, s: &BigInt) -> Self {
        // Horner in the polynomial ring: acc = acc*(s - x) + c_i.
        let linear = IntPolynomial {
            coeffs: vec![s.clone(), BigInt::from(-1)],
        };
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear).add(&Self::monomial(c.clone(), 0));
        }
        if let Some(lead) = acc.leading() {
            if lead.is_negative() {
                return acc.neg();
            }
        }
        acc
    }

    /// True if only even powers of x carry nonzero coefficients.
    pub fn is_even_polynomial(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// For an even polynomial p(x) = q(x^2), returns q.
    pub fn even_part(&self) -> Option<Self> {
        if !self.is_even_polynomial() {
            return None;
        }
        Some(Self::new(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// Substitutes x -> x^2.
    pub fn compose_square(&self) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[2 * i] = c.clone();
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}", mag)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}
