//! Exact arithmetic: Bernoulli numbers, `ζ(2m)` as a rational multiple of
//! `π^{2m}`, and the partition-of-size expansion of `ζ_P({2m}^k)`.
//!
//! Nothing in here touches floating point except [`PiPower::to_f64`].

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partitions::enumerate_partitions_of_size;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("argument must be a positive even integer, got {0}")]
    NotPositiveEven(u32),
    #[error("argument must be positive")]
    NonPositive,
    #[error("cannot add pi^{left} and pi^{right}")]
    ExponentMismatch { left: u32, right: u32 },
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

impl ExactError {
    /// Variant name, used verbatim in structured error reports.
    pub fn name(&self) -> &'static str {
        match self {
            Self::NotPositiveEven(_) => "NotPositiveEven",
            Self::NonPositive => "NonPositive",
            Self::ExponentMismatch { .. } => "ExponentMismatch",
            Self::BadRational(_) => "BadRational",
        }
    }
}

/// Formats a rational as `num/den` in lowest terms, or just `num` when the
/// denominator is 1.
pub fn rational_to_string(r: &BigRational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let bad = || ExactError::BadRational(s.to_owned());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub(crate) mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod rational_vec_serde {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational_to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let text = Vec::<String>::deserialize(d)?;
        text.iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Exact value `coeff · π^exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiPower {
    #[serde(with = "rational_serde")]
    pub coeff: BigRational,
    #[serde(rename = "pi_power")]
    pub exponent: u32,
}

impl PiPower {
    pub fn new(coeff: BigRational, exponent: u32) -> Self {
        Self { coeff, exponent }
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), 0)
    }

    pub fn zero(exponent: u32) -> Self {
        Self::new(BigRational::zero(), exponent)
    }

    pub fn checked_add(&self, other: &PiPower) -> Result<PiPower, ExactError> {
        if self.exponent != other.exponent {
            return Err(ExactError::ExponentMismatch {
                left: self.exponent,
                right: other.exponent,
            });
        }
        Ok(PiPower::new(&self.coeff + &other.coeff, self.exponent))
    }

    pub fn scale(&self, factor: &BigRational) -> PiPower {
        PiPower::new(&self.coeff * factor, self.exponent)
    }

    pub fn pow(&self, e: u32) -> PiPower {
        PiPower::new(num_traits::pow(self.coeff.clone(), e as usize), self.exponent * e)
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        c * std::f64::consts::PI.powi(self.exponent as i32)
    }
}

impl Mul for &PiPower {
    type Output = PiPower;

    fn mul(self, rhs: &PiPower) -> PiPower {
        PiPower::new(&self.coeff * &rhs.coeff, self.exponent + rhs.exponent)
    }
}

impl Mul for PiPower {
    type Output = PiPower;

    fn mul(self, rhs: PiPower) -> PiPower {
        &self * &rhs
    }
}

impl fmt::Display for PiPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})*pi", self.coeff),
            e => write!(f, "({})*pi^{e}", self.coeff),
        }
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn bernoulli_cache() -> &'static Mutex<Vec<BigRational>> {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// `B_0..=B_{n_max}` with the convention `B_1 = -1/2`, from the recurrence
/// `Σ_{j=0}^{n} C(n+1, j) B_j = 0`. Values are memoized per process.
pub fn bernoulli_numbers(n_max: u32) -> Vec<BigRational> {
    let mut cache = bernoulli_cache().lock().unwrap_or_else(|e| e.into_inner());
    while cache.len() <= n_max as usize {
        let n = cache.len() as u32;
        let b = if n > 1 && n % 2 == 1 {
            BigRational::zero()
        } else {
            let sum = cache
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (j, bj)| {
                    acc + bj * BigRational::from_integer(binomial(n + 1, j as u32))
                });
            -sum / BigRational::from_integer(BigInt::from(n + 1))
        };
        cache.push(b);
    }
    cache[..=n_max as usize].to_vec()
}

pub fn bernoulli(n: u32) -> BigRational {
    bernoulli_numbers(n).pop().expect("non-empty")
}

/// `ζ(2m) = (-1)^{m+1} (2π)^{2m} B_{2m} / (2 (2m)!)`, returned as the exact
/// coefficient of `π^{2m}`.
pub fn zeta_even_exact(two_m: u32) -> Result<PiPower, ExactError> {
    if two_m == 0 || two_m % 2 == 1 {
        return Err(ExactError::NotPositiveEven(two_m));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, PiPower>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&two_m) {
        return Ok(hit.clone());
    }

    let m = two_m / 2;
    let sign = if m % 2 == 1 { 1 } else { -1 };
    let two_pow = BigInt::from(2u32).pow(two_m);
    let fact = BigInt::from(crate::partitions::factorial(two_m));
    let coeff = bernoulli(two_m) * BigRational::new(BigInt::from(sign) * two_pow, fact * 2);
    let value = PiPower::new(coeff, two_m);

    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert(two_m, value.clone());
    Ok(value)
}

/// `ζ_P({2m}^k) = Σ_{λ⊢k} Π_j ζ(2mj)^{m_j} / (N(λ) Π_j m_j!)` in exact
/// arithmetic. Every term carries `π^{2mk}`, so the sum is a single
/// [`PiPower`] with that exponent.
pub fn partition_zeta_exact(m: u32, k: u32) -> Result<PiPower, ExactError> {
    if m == 0 {
        return Err(ExactError::NonPositive);
    }
    let zetas: Vec<PiPower> = (1..=k)
        .map(|j| zeta_even_exact(2 * m * j))
        .collect::<Result<_, _>>()?;

    let mut total = PiPower::zero(2 * m * k);
    for lambda in enumerate_partitions_of_size(k) {
        let mult = lambda.multiplicities();
        let mut term = PiPower::one();
        for (j, mj) in mult.iter() {
            term = &term * &zetas[j as usize - 1].pow(mj);
        }
        let weight = BigRational::new(
            BigInt::one(),
            BigInt::from(lambda.norm() * mult.factorial_product()),
        );
        total = total.checked_add(&term.scale(&weight))?;
    }
    Ok(total)
}

/// `(2^{2k-1} - 1) / 2^{2k-2}`, the factor relating `ζ_P({2}^k)` to `ζ(2k)`.
pub fn schneider_coefficient(k: u32) -> Result<BigRational, ExactError> {
    if k == 0 {
        return Err(ExactError::NonPositive);
    }
    let num = BigInt::from(2u32).pow(2 * k - 1) - 1;
    let den = BigInt::from(BigUint::from(2u32).pow(2 * k - 2));
    Ok(BigRational::new(num, den))
}

/// Whether the rational is in lowest terms with a positive denominator.
pub fn is_reduced(r: &BigRational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
