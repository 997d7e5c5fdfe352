use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::{ensure_finite, inv_pow, require_convergent, EvalResult, NumericError};

type PartPredicate = Arc<dyn Fn(u64) -> bool + Send + Sync>;

/// Which partitions an Euler product ranges over.
#[derive(Clone)]
pub enum ProductForm {
    /// Partitions into parts from a set `S` with `1 ∉ S`:
    /// `Π_{n∈S} (1 - n^{-s})^{-1}`.
    SubsetParts { label: String, admits: PartPredicate },
    /// Partitions into distinct parts: `Π_{n>=1} (1 + n^{-s})`.
    DistinctParts,
    /// Partitions with no part equal to 1: `Π_{n>=2} (1 - n^{-s})^{-1}`.
    PartsNotOne,
}

impl ProductForm {
    pub fn subset<F>(label: impl Into<String>, admits: F) -> Result<Self, NumericError>
    where
        F: Fn(u64) -> bool + Send + Sync + 'static,
    {
        let label = label.into();
        if admits(1) {
            return Err(NumericError::InvalidForm(format!(
                "part set {label:?} contains 1, so the partition zeta sum diverges"
            )));
        }
        Ok(Self::SubsetParts {
            label,
            admits: Arc::new(admits),
        })
    }

    pub fn even_parts() -> Self {
        Self::subset("even", |n| n % 2 == 0).expect("1 is odd")
    }

    /// Parts `n >= 1` with `n ≡ residue (mod modulus)`.
    pub fn residue_class(modulus: u64, residue: u64) -> Result<Self, NumericError> {
        if modulus == 0 {
            return Err(NumericError::InvalidForm("modulus must be positive".into()));
        }
        let residue = residue % modulus;
        Self::subset(format!("{residue} mod {modulus}"), move |n| {
            n % modulus == residue
        })
    }

    pub fn label(&self) -> &str {
        match self {
            Self::SubsetParts { label, .. } => label,
            Self::DistinctParts => "distinct",
            Self::PartsNotOne => "not-one",
        }
    }

    fn admits(&self, n: u64) -> bool {
        match self {
            Self::SubsetParts { admits, .. } => admits(n),
            Self::DistinctParts => true,
            Self::PartsNotOne => n >= 2,
        }
    }
}

impl fmt::Debug for ProductForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("ProductForm").field(&self.label()).finish()
    }
}

// -log(1 - x), accurate for small |x|
fn neg_log_one_minus(x: Complex64) -> Complex64 {
    if x.norm() < 1e-4 {
        x + x * x / 2.0 + x * x * x / 3.0
    } else {
        -(1.0 - x).ln()
    }
}

// log(1 + x), accurate for small |x|
fn log_one_plus(x: Complex64) -> Complex64 {
    if x.norm() < 1e-4 {
        x - x * x / 2.0 + x * x * x / 3.0
    } else {
        (1.0 + x).ln()
    }
}

/// `Σ_{n>m} n^{-s}` by Euler–Maclaurin from `m`.
fn zeta_tail(s: Complex64, m: f64) -> Complex64 {
    let p = (-s * m.ln()).exp();
    p * m / (s - 1.0) - 0.5 * p + s * p / (12.0 * m)
}

/// Evaluates an Euler product in the log domain over factors `n <= max_factor`,
/// then adds a first-order estimate of the log of the remaining factors.
pub fn euler_product_eval(
    form: &ProductForm,
    s: Complex64,
    max_factor: u64,
) -> Result<EvalResult, NumericError> {
    require_convergent(s)?;
    if max_factor == 0 {
        return Err(NumericError::InvalidArgument("max_factor must be positive".into()));
    }

    let mut log_sum = Complex64::new(0.0, 0.0);
    let mut factors = 0u64;
    for n in 1..=max_factor {
        if !form.admits(n) {
            continue;
        }
        let x = inv_pow(n, s);
        log_sum += match form {
            ProductForm::DistinctParts => log_one_plus(x),
            _ => neg_log_one_minus(x),
        };
        factors += 1;
    }

    let m = max_factor as f64;
    let sigma = s.re;
    let last = m.powf(-sigma);
    let tail = match form {
        ProductForm::DistinctParts | ProductForm::PartsNotOne => zeta_tail(s, m),
        ProductForm::SubsetParts { .. } => {
            // empirical density of admitted parts over the upper half of the range
            let lo = max_factor / 2;
            let admitted = (lo + 1..=max_factor).filter(|&n| form.admits(n)).count();
            let density = admitted as f64 / (max_factor - lo) as f64;
            density * (-s * m.ln()).exp() * m / (s - 1.0)
        }
    };
    // second-order terms of the log expansion beyond the cutoff
    let second_order = m.powf(1.0 - 2.0 * sigma) / (2.0 * (2.0 * sigma - 1.0));
    let tail_model = match form {
        ProductForm::SubsetParts { .. } => last,
        _ => s.norm() * (s + 1.0).norm() * (s + 2.0).norm() * last / (720.0 * m * m * m),
    };

    let value = (log_sum + tail).exp();
    let rounding = f64::EPSILON * factors as f64 * value.norm();
    ensure_finite(EvalResult {
        value,
        est_error: value.norm() * (second_order + tail_model) + rounding,
        terms_used: factors,
    })
}
