use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::QSeriesError;
use crate::exact::rational_vec_serde;

/// Dense polynomial in `q`, constant term first, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// `1 - q^j`
    pub fn one_minus_q_pow(j: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); j + 1];
        coeffs[0] = BigRational::one();
        coeffs[j] -= BigRational::one();
        Self::new(coeffs)
    }

    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        rational_vec_serde::serialize(&self.coeffs, s)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        Polynomial::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial::new(coeffs)
    }
}

/// `num / den` over the rationals. Not reduced; equality is decided by
/// cross-multiplication.
#[derive(Debug, Clone, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, QSeriesError> {
        if den.is_zero() {
            return Err(QSeriesError::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// `1 / Π_j (1 - q^j)^{e_j}` for the given `(j, e_j)` pairs.
    pub fn inverse_cyclotomic_product(exponents: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let den = exponents
            .into_iter()
            .fold(Polynomial::one(), |acc, (j, e)| &acc * &Polynomial::one_minus_q_pow(j).pow(e));
        Self {
            num: Polynomial::one(),
            den,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self {
            num: Polynomial::constant(BigRational::from_integer(BigInt::from(n))),
            den: Polynomial::one(),
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert_eq!(&poly(&[1, 1]) - &poly(&[1, 1]), Polynomial::zero());
    }

    #[test]
    fn products() {
        // (1 - q)(1 + q) = 1 - q²
        assert_eq!(&poly(&[1, -1]) * &poly(&[1, 1]), Polynomial::one_minus_q_pow(2));
        assert_eq!(poly(&[1, 1]).pow(3), poly(&[1, 3, 3, 1]));
        assert_eq!(poly(&[5]).pow(0), Polynomial::one());
    }

    #[test]
    fn equality_by_cross_multiplication() {
        // (1+q)/(1-q²) = 1/(1-q)
        let a = RationalFunction::new(poly(&[1, 1]), Polynomial::one_minus_q_pow(2)).unwrap();
        let b = RationalFunction::inverse_cyclotomic_product([(1, 1)]);
        assert_eq!(a, b);
        assert_ne!(a, RationalFunction::from_integer(1));
    }

    #[test]
    fn addition_over_distinct_denominators() {
        // 1/(1-q) + 1/(1+q) = 2/(1-q²)
        let a = RationalFunction::new(Polynomial::one(), poly(&[1, -1])).unwrap();
        let b = RationalFunction::new(Polynomial::one(), poly(&[1, 1])).unwrap();
        let expected = RationalFunction::new(poly(&[2]), Polynomial::one_minus_q_pow(2)).unwrap();
        assert_eq!(&a + &b, expected);
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(Polynomial::one(), Polynomial::zero()).unwrap_err(),
            QSeriesError::ZeroDenominator
        );
    }

    #[test]
    fn json_shape() {
        let r = RationalFunction::new(poly(&[1]), Polynomial::one_minus_q_pow(2)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"num":["1"],"den":["1","0","-1"]}"#
        );
    }
}
