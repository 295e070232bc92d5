//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Degree of a polynomial; the zero polynomial has degree minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

/// Polynomial in `x` over the integers, constant term first.
///
/// Always canonical: no trailing zero coefficients, so the zero polynomial
/// is the empty vector and equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    /// `(x - 1)^k`, expanded with alternating binomial coefficients.
    pub fn pow_x_minus_one(k: usize) -> Self {
        let coeffs = (0..=k)
            .map(|j| {
                let b = binomial(BigInt::from(k), BigInt::from(j));
                if (k - j) % 2 == 1 {
                    -b
                } else {
                    b
                }
            })
            .collect();
        Self::new(coeffs)
    }

    /// Coefficients, constant term first.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Coefficient of `x^degree`; zero past the leading term.
    pub fn coefficient_of(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_default()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// `self * x^k`
    pub fn shift_mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// Floating-point Horner evaluation; coefficients are rounded to `f64`.
    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// First exponent at which `self` and `other` differ, if any.
    pub fn first_difference(&self, other: &IntPolynomial) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coefficient_of(i) != other.coefficient_of(i))
    }

    /// Decimal coefficient strings, constant term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_str_radix(10)).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(
        coeffs: &[S],
    ) -> Result<Self, num_bigint::ParseBigIntError> {
        coeffs
            .iter()
            .map(|s| s.as_ref().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = exp == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match exp {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{exp}")?,
            }
        }
        Ok(())
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -self.clone()
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(mut self, rhs: &IntPolynomial) -> IntPolynomial {
                self.$assign(rhs);
                self
            }
        }
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(mut self, rhs: IntPolynomial) -> IntPolynomial {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Mul<&IntPolynomial> for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        &self * rhs
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p(&[-1, 0, 1]) + p(&[0, 1]), p(&[-1, 1, 1]));
        assert_eq!(p(&[-1, 1]) * p(&[1, 1]), p(&[-1, 0, 1]));
        let q = p(&[3, -2, 5]);
        assert!((q.clone() + (-q)).is_zero());
        assert_eq!(p(&[1, 2]).scale(&BigInt::from(-3)), p(&[-3, -6]));
    }

    #[test]
    fn shifts() {
        assert_eq!(p(&[-1, 0, 1]).shift_mul_x_pow(1), p(&[0, -1, 0, 1]));
        assert_eq!(p(&[4, 5]).shift_mul_x_pow(0), p(&[4, 5]));
        assert_eq!(p(&[-2, 1]).shift_mul_x_pow(2), p(&[0, 0, -2, 1]));
        assert!(IntPolynomial::zero().shift_mul_x_pow(3).is_zero());
    }

    #[test]
    fn powers_of_x_minus_one() {
        assert_eq!(IntPolynomial::pow_x_minus_one(0), p(&[1]));
        assert_eq!(IntPolynomial::pow_x_minus_one(2), p(&[1, -2, 1]));
        assert_eq!(IntPolynomial::pow_x_minus_one(3), p(&[-1, 3, -3, 1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[0, -2, 0, 1]).eval_i64(2), BigInt::from(4));
        assert_eq!(p(&[7, 3, 1]).eval_i64(0), BigInt::from(7));
        assert_eq!(p(&[2, -1, -2, 1]).eval_i64(3), BigInt::from(8));
    }

    #[test]
    fn accessors() {
        let q = p(&[2, -1, -2, 1]);
        assert_eq!(q.coefficient_of(2), BigInt::from(-2));
        assert_eq!(q.coefficient_of(9), BigInt::zero());
        assert_eq!(q.degree(), Degree::Finite(3));
        assert!(q.is_monic());
        assert_eq!(IntPolynomial::zero().degree(), Degree::NegInfinity);
        assert_eq!(p(&[1, 0, 0]).degree(), Degree::Finite(0));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[2, -1, -2, 1]).to_string(), "x^3 - 2x^2 - x + 2");
        assert_eq!(p(&[0, 0, 0, 1]).to_string(), "x^3");
        assert_eq!(p(&[-2, -3, 0, 1]).to_string(), "x^3 - 3x - 2");
        assert_eq!(p(&[0, 0, -1]).to_string(), "-x^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[-5]).to_string(), "-5");
    }

    #[test]
    fn decimal_strings() {
        let q = p(&[2, -1, -2, 1]);
        assert_eq!(q.to_decimal_strings(), ["2", "-1", "-2", "1"]);
        assert_eq!(
            IntPolynomial::from_decimal_strings(&q.to_decimal_strings()).unwrap(),
            q
        );
        assert!(IntPolynomial::from_decimal_strings(&["1.5"]).is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn eval_is_a_homomorphism(a in small_poly(), b in small_poly(), t in -6i64..6) {
            prop_assert_eq!((&a * &b).eval_i64(t), a.eval_i64(t) * b.eval_i64(t));
            prop_assert_eq!((&a + &b).eval_i64(t), a.eval_i64(t) + b.eval_i64(t));
        }

        #[test]
        fn x_minus_one_power_vanishes_at_one(k in 0usize..30) {
            let expected = if k == 0 { BigInt::one() } else { BigInt::zero() };
            prop_assert_eq!(IntPolynomial::pow_x_minus_one(k).eval_i64(1), expected);
        }

        #[test]
        fn canonical_form(a in small_poly()) {
            prop_assert!(a.coefficients().last().is_none_or(|c| !c.is_zero()));
        }
    }
}
