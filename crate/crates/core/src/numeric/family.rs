use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{ensure_finite, riemann_zeta_with, EvalResult, NumericError, ZetaConfig, POLE_EXCLUSION_RADIUS};
use crate::partitions::enumerate_partitions_of_size;

pub fn partition_zeta_family(s: Complex64, k: u32) -> Result<EvalResult, NumericError> {
    partition_zeta_family_with(s, k, &ZetaConfig::default())
}

/// `ζ_P({s}^k)` over partitions of length `k`, evaluated as
/// `Σ_{λ⊢k} Π_j ζ(js)^{m_j} / (N(λ) Π_j m_j!)`.
///
/// Defined on the whole plane except `s = 1/j`, `1 <= j <= k`.
pub fn partition_zeta_family_with(
    s: Complex64,
    k: u32,
    cfg: &ZetaConfig,
) -> Result<EvalResult, NumericError> {
    if k == 0 {
        return Ok(EvalResult::exact(Complex64::new(1.0, 0.0)));
    }
    for j in 1..=k {
        if (s - 1.0 / f64::from(j)).norm() < POLE_EXCLUSION_RADIUS {
            return Err(NumericError::PoleProximity { j });
        }
    }

    let mut zetas = Vec::with_capacity(k as usize);
    let mut terms_used = 0;
    for j in 1..=k {
        let z = riemann_zeta_with(s * f64::from(j), cfg)?;
        terms_used += z.terms_used;
        zetas.push(z);
    }

    let mut value = Complex64::new(0.0, 0.0);
    let mut est_error = 0.0;
    let mut magnitude = 0.0;
    for lambda in enumerate_partitions_of_size(k) {
        let mult = lambda.multiplicities();
        let weight = (lambda.norm() * mult.factorial_product())
            .to_f64()
            .ok_or(NumericError::NonFinite)?
            .recip();
        let mut term = Complex64::new(weight, 0.0);
        let mut abs_term = weight;
        let mut abs_upper = weight;
        for (j, mj) in mult.iter() {
            let z = &zetas[j as usize - 1];
            term *= z.value.powu(mj);
            abs_term *= z.value.norm().powi(mj as i32);
            abs_upper *= (z.value.norm() + z.est_error).powi(mj as i32);
        }
        value += term;
        magnitude += abs_term;
        est_error += abs_upper - abs_term;
    }
    est_error += 4.0 * f64::from(k) * f64::EPSILON * magnitude;

    ensure_finite(EvalResult {
        value,
        est_error,
        terms_used,
    })
}

/// Raw two-scale fit behind [`pole_order_estimate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleFit {
    pub j: u32,
    pub location: f64,
    /// `log|f(p+2ε)/f(p+ε)| / log(1/2)` for `ε = 1e-3` and `ε = 5e-4`.
    pub raw: [f64; 2],
    pub order: u32,
}

const FIT_STEPS: [f64; 2] = [1e-3, 5e-4];

pub fn pole_order_fit(k: u32, j: u32) -> Result<PoleFit, NumericError> {
    if j == 0 || j > k {
        return Err(NumericError::InvalidArgument(format!(
            "pole index j = {j} must lie in 1..={k}"
        )));
    }
    let location = 1.0 / f64::from(j);
    let f = |eps: f64| -> Result<f64, NumericError> {
        Ok(partition_zeta_family(Complex64::new(location + eps, 0.0), k)?
            .value
            .norm())
    };
    let mut raw = [0.0; 2];
    for (slot, &eps) in raw.iter_mut().zip(&FIT_STEPS) {
        *slot = (f(2.0 * eps)? / f(eps)?).ln() / 0.5f64.ln();
    }
    let rounded = raw.map(f64::round);
    if rounded[0] != rounded[1] || !rounded[0].is_finite() || rounded[0] < 0.0 {
        return Err(NumericError::FitUnstable { j, estimates: raw });
    }
    Ok(PoleFit {
        j,
        location,
        raw,
        order: rounded[0] as u32,
    })
}

/// Numerically estimated order of the pole of `ζ_P({s}^k)` at `s = 1/j`.
pub fn pole_order_estimate(k: u32, j: u32) -> Result<u32, NumericError> {
    pole_order_fit(k, j).map(|fit| fit.order)
}
