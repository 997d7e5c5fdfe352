use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::QSeriesError;
use crate::exact::rational_vec_serde;

/// Power series in `q` with exact rational coefficients, known modulo
/// `q^{order+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    #[serde(with = "rational_vec_serde")]
    coeffs: Vec<BigRational>,
    order: usize,
}

impl From<TruncatedSeries> for SeriesRepr {
    fn from(s: TruncatedSeries) -> Self {
        let order = s.order();
        Self {
            coeffs: s.coeffs,
            order,
        }
    }
}

impl TryFrom<SeriesRepr> for TruncatedSeries {
    type Error = String;

    fn try_from(r: SeriesRepr) -> Result<Self, String> {
        if r.coeffs.len() != r.order + 1 {
            return Err(format!(
                "order {} needs {} coefficients, found {}",
                r.order,
                r.order + 1,
                r.coeffs.len()
            ));
        }
        Ok(Self { coeffs: r.coeffs })
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c · q^power`, which is zero if `power > order`.
    pub fn monomial(c: BigRational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Pads with zeros or drops coefficients beyond `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate().take((order + 1).saturating_sub(k)) {
            coeffs[i + k] = c.clone();
        }
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, QSeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(QSeriesError::NotInvertible);
        }
        let inv0 = a0.recip();
        let order = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out[n - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// `exp(a)` for a series with zero constant term, from `f' = a' f`:
    /// `n f_n = Σ_{i=1}^{n} i a_i f_{n-i}`.
    pub fn exp(&self) -> Result<Self, QSeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(QSeriesError::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        out.push(BigRational::one());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += BigRational::from_integer(BigInt::from(i)) * &self.coeffs[i] * &out[n - i];
                }
            }
            out.push(acc / BigRational::from_integer(BigInt::from(n)));
        }
        Ok(Self { coeffs: out })
    }
}

pub fn series_exp(a: &TruncatedSeries) -> Result<TruncatedSeries, QSeriesError> {
    a.exp()
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Schoolbook product, truncated to the smaller order.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Add for TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self + &rhs
    }
}

impl Sub for TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self - &rhs
    }
}

impl Mul for TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self * &rhs
    }
}
