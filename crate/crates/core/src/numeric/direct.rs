use num_complex::Complex64;

use super::{ensure_finite, inv_pow, require_convergent, EvalResult, NumericError};

/// `Σ N(λ)^{-s}` over partitions with exactly `k` parts, all at most
/// `max_part`.
///
/// Terms are grouped by largest part: the partitions whose largest part is
/// `n` contribute `n^{-s}` times the same sum for `k - 1` parts bounded by
/// `n`. This runs in `O(k · max_part)` instead of touching each of the
/// `C(max_part + k - 1, k)` partitions.
///
/// `est_error` is the heuristic tail bound `ζ_M(σ)^{k-1} · ∫_M^∞ x^{-σ} dx`
/// with `σ = Re s` and `ζ_M` the truncated zeta sum.
pub fn direct_sum_truncated(
    s: Complex64,
    k: u32,
    max_part: u64,
) -> Result<EvalResult, NumericError> {
    require_convergent(s)?;
    if k == 0 || max_part == 0 {
        return Err(NumericError::InvalidArgument(
            "length and max part must be positive".into(),
        ));
    }
    let sigma = s.re;
    let k = k as usize;

    // bounded[j] = sum over partitions of length j with parts <= n
    let mut bounded = vec![Complex64::new(0.0, 0.0); k + 1];
    bounded[0] = Complex64::new(1.0, 0.0);
    let mut truncated_zeta = 0.0;
    for n in 1..=max_part {
        let x = inv_pow(n, s);
        for j in 1..=k {
            let prev = bounded[j - 1];
            bounded[j] += x * prev;
        }
        truncated_zeta += (n as f64).powf(-sigma);
    }

    let m = max_part as f64;
    let tail = m.powf(1.0 - sigma) / (sigma - 1.0);
    let est_error = truncated_zeta.powi(k as i32 - 1) * tail;
    ensure_finite(EvalResult {
        value: bounded[k],
        est_error,
        terms_used: max_part,
    })
}
