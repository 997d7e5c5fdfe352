//! Complex log-gamma via the Lanczos approximation (g = 7, 9 terms).

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `sin(πx)` for real `x`, exact at integers.
pub fn sin_pi_real(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        0.0
    } else {
        (PI * r).sin()
    }
}

/// `cos(πx)` for real `x`, exact at half-integers.
pub fn cos_pi_real(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r.abs() == 0.5 {
        0.0
    } else {
        (PI * r).cos()
    }
}

/// `sin(πz)` with the real part reduced before scaling by π.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let b = PI * z.im;
    Complex64::new(sin_pi_real(z.re) * b.cosh(), cos_pi_real(z.re) * b.sinh())
}

/// A branch of `log Γ(z)`; only meaningful up to multiples of `2πi`.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection: Γ(z) Γ(1-z) = π / sin(πz)
        return Complex64::new(PI.ln(), 0.0) - sin_pi(z).ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + series.ln()
}

pub fn gamma(z: Complex64) -> Complex64 {
    ln_gamma(z).exp()
}
