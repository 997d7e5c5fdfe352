use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::gamma::{ln_gamma, sin_pi};
use super::{ensure_finite, inv_pow, EvalResult, NumericError, POLE_EXCLUSION_RADIUS};
use crate::exact::bernoulli_numbers;
use crate::partitions::factorial;

/// Tuning for [`riemann_zeta_with`].
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaConfig {
    /// Lower bound on the number of directly summed terms.
    pub min_terms: usize,
    /// Direct terms per unit of `⌈2 + |Im s|⌉`.
    pub terms_per_height: usize,
    /// Number of Bernoulli correction terms.
    pub corrections: usize,
    /// Below this real part the functional equation is used.
    pub switchover: f64,
    /// Disk around `s = 0` that stays on the Euler–Maclaurin branch, where
    /// the reflected evaluation would multiply a zero by the pole of `ζ(1-s)`.
    pub origin_radius: f64,
    /// Relative error above which a result is reported as `PrecisionLoss`.
    pub max_rel_error: f64,
}

impl Default for ZetaConfig {
    fn default() -> Self {
        Self {
            min_terms: 20,
            terms_per_height: 3,
            corrections: 12,
            switchover: 0.5,
            origin_radius: 0.1,
            max_rel_error: 1e-8,
        }
    }
}

const MAX_CORRECTIONS: usize = 40;

// B_{2r} / (2r)! for r = 0..=MAX_CORRECTIONS
fn correction_coeffs() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let b = bernoulli_numbers(2 * MAX_CORRECTIONS as u32 + 2);
        (0..=MAX_CORRECTIONS + 1)
            .map(|r| {
                let n = 2 * r as u32;
                let f = BigRational::from_integer(BigInt::from(factorial(n)));
                (&b[n as usize] / f).to_f64().unwrap_or(0.0)
            })
            .collect()
    })
}

pub fn riemann_zeta(s: Complex64) -> Result<EvalResult, NumericError> {
    riemann_zeta_with(s, &ZetaConfig::default())
}

/// `ζ(s)` anywhere except the pole at `s = 1`.
///
/// Uses Euler–Maclaurin summation for `Re s >= switchover` (and near the
/// origin) and the functional equation elsewhere.
pub fn riemann_zeta_with(s: Complex64, cfg: &ZetaConfig) -> Result<EvalResult, NumericError> {
    if (s - 1.0).norm() < POLE_EXCLUSION_RADIUS {
        return Err(NumericError::PoleAt1);
    }
    let result = if s.re >= cfg.switchover || s.norm() < cfg.origin_radius {
        zeta_euler_maclaurin(s, cfg)?
    } else {
        zeta_functional_equation(s, cfg)?
    };
    let scale = result.value.norm().max(1.0);
    if result.est_error > cfg.max_rel_error * scale {
        return Err(NumericError::PrecisionLoss { partial: result });
    }
    Ok(result)
}

/// Euler–Maclaurin branch, valid on the whole plane but only accurate for
/// moderate negative real parts:
///
/// `ζ(s) = Σ_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
///        + Σ_{r=1}^{K} B_{2r}/(2r)! · s(s+1)…(s+2r-2) · N^{-s-2r+1}`
pub fn zeta_euler_maclaurin(s: Complex64, cfg: &ZetaConfig) -> Result<EvalResult, NumericError> {
    if (s - 1.0).norm() < POLE_EXCLUSION_RADIUS {
        return Err(NumericError::PoleAt1);
    }
    let corrections = cfg.corrections.min(MAX_CORRECTIONS);
    let height = (2.0 + s.im.abs()).ceil() as usize;
    let n = cfg.min_terms.max(height * cfg.terms_per_height).max(2);
    let nf = n as f64;

    let mut head = Complex64::new(0.0, 0.0);
    for m in 1..n as u64 {
        head += inv_pow(m, s);
    }
    let n_pow = inv_pow(n as u64, s);
    let mut sum = head + n_pow * nf / (s - 1.0) + 0.5 * n_pow;

    let coeffs = correction_coeffs();
    let mut rising = s;
    let mut power = n_pow / nf;
    let mut next_term = Complex64::new(0.0, 0.0);
    for (r, &c) in coeffs.iter().enumerate().take(corrections + 2).skip(1) {
        let term = c * rising * power;
        if r <= corrections {
            sum += term;
        } else {
            next_term = term;
        }
        let a = s + (2 * r - 1) as f64;
        rising *= a * (a + 1.0);
        power /= nf * nf;
    }

    let rounding = 4.0 * f64::EPSILON * (head.norm() + sum.norm());
    ensure_finite(EvalResult {
        value: sum,
        est_error: next_term.norm() + rounding,
        terms_used: (n - 1 + corrections) as u64,
    })
}

/// Functional-equation branch:
/// `ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)`, with `ζ(1-s)` from
/// [`zeta_euler_maclaurin`].
pub fn zeta_functional_equation(s: Complex64, cfg: &ZetaConfig) -> Result<EvalResult, NumericError> {
    let reflected = zeta_euler_maclaurin(1.0 - s, cfg)?;
    let log_factor = s * 2f64.ln() + (s - 1.0) * PI.ln() + ln_gamma(1.0 - s);
    let factor = log_factor.exp() * sin_pi(s / 2.0);
    let value = factor * reflected.value;
    let rounding = 16.0 * f64::EPSILON * (1.0 + log_factor.norm()) * value.norm();
    ensure_finite(EvalResult {
        value,
        est_error: factor.norm() * reflected.est_error + rounding,
        terms_used: reflected.terms_used,
    })
}
