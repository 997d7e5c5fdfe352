use num_complex::Complex64;

use crate::numeric::NumericError;

/// Coefficients of `z^0..=z^{k_max}` in `Π_{n=1}^{M} (1 - z n^{-s})^{-1}`,
/// expanding each factor as a geometric series in `z` and multiplying
/// polynomials.
pub fn restricted_genfun_coeffs(
    s: Complex64,
    max_part: u64,
    k_max: usize,
) -> Result<Vec<Complex64>, NumericError> {
    if s.re <= 1.0 {
        return Err(NumericError::DivergenceRegion { re: s.re });
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); k_max + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    let mut powers = vec![Complex64::new(1.0, 0.0); k_max + 1];
    for n in 1..=max_part {
        let x = (-s * (n as f64).ln()).exp();
        for i in 1..=k_max {
            powers[i] = powers[i - 1] * x;
        }
        // descending so that coeffs[j - i] is still the old value
        for j in (1..=k_max).rev() {
            let mut acc = coeffs[j];
            for i in 1..=j {
                acc += powers[i] * coeffs[j - i];
            }
            coeffs[j] = acc;
        }
    }
    if coeffs.iter().all(|c| c.is_finite()) {
        Ok(coeffs)
    } else {
        Err(NumericError::NonFinite)
    }
}
