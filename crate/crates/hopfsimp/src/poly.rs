//! Dense univariate polynomials with exact rational coefficients.
//!
//! One representation serves both polynomial rings used here: `PolyQ` (variable
//! `q`, character values) and `PolyT` (variable `t`, chromatic polynomials).
//! Coefficients are stored ascending by degree with no trailing zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in the formal variable `q`.
pub type PolyQ = Poly;
/// Polynomial in the formal variable `t`.
pub type PolyT = Poly;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute `x := -x` (negate odd-degree coefficients).
    pub fn substitute_neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Poly { coeffs }
    }

    /// Substitute `x := x + c` for an integer shift `c`.
    pub fn substitute_shift(&self, c: i64) -> Self {
        let shift = Poly::from_coeffs(vec![
            BigRational::from_integer(BigInt::from(c)),
            BigRational::one(),
        ]);
        let mut acc = Poly::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Poly::constant(coeff.clone());
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Render with the given variable name, descending powers, exact coefficients.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if k == 0 {
                format!("{mag}")
            } else if mag.is_one() {
                power(var, k)
            } else {
                format!("{mag}*{}", power(var, k))
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{term}") } else { term });
            } else {
                parts.push(format!("{} {term}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

fn power(var: &str, k: usize) -> String {
    if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("q"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::monomial(BigRational::one(), 1)
    }

    #[test]
    fn arithmetic_basics() {
        let p = &(&q() * &q()) + &Poly::from_int(3); // q^2 + 3
        assert_eq!(p.coeff(0), BigRational::from_integer(3.into()));
        assert_eq!(p.coeff(2), BigRational::one());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.eval_int(2), BigRational::from_integer(7.into()));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn shift_and_neg_substitution() {
        // (q+1)^2 = q^2 + 2q + 1
        let p = q().pow(2).substitute_shift(1);
        assert_eq!(p, Poly::from_coeffs(vec![
            BigRational::one(),
            BigRational::from_integer(2.into()),
            BigRational::one(),
        ]));
        // (-q)^3 = -q^3
        let c = q().pow(3).substitute_neg();
        assert_eq!(c, Poly::monomial(-BigRational::one(), 3));
    }

    #[test]
    fn display_descending_exact() {
        let p = &(&q().pow(3).scale(&BigRational::from_integer(2.into()))
            - &q().scale(&BigRational::new(1.into(), 2.into())))
            + &Poly::from_int(-1);
        assert_eq!(p.display("q"), "2*q^3 - 1/2*q - 1");
        assert_eq!(Poly::zero().display("t"), "0");
        assert_eq!(Poly::one().display("t"), "1");
    }

    #[test]
    fn derivative_rule() {
        // d/dq (q^3 + 2q) = 3q^2 + 2
        let p = &q().pow(3) + &q().scale(&BigRational::from_integer(2.into()));
        let d = p.derivative();
        assert_eq!(d.coeff(2), BigRational::from_integer(3.into()));
        assert_eq!(d.coeff(0), BigRational::from_integer(2.into()));
    }
}
