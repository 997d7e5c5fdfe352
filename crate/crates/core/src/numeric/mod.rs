//! Double-precision evaluation on the complex plane.
//!
//! [`riemann_zeta`] continues `ζ(s)` to the whole plane; everything else
//! is built on top of it. Error estimates in [`EvalResult`] are heuristic.

mod direct;
mod euler_product;
mod family;
pub mod gamma;
mod zeta;

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use direct::direct_sum_truncated;
pub use euler_product::{euler_product_eval, ProductForm};
pub use family::{partition_zeta_family, partition_zeta_family_with, pole_order_estimate, pole_order_fit, PoleFit};
pub use zeta::{
    riemann_zeta, riemann_zeta_with, zeta_euler_maclaurin, zeta_functional_equation, ZetaConfig,
};

pub type ComplexValue = Complex64;

/// Distance from a pole inside which evaluation is refused.
pub const POLE_EXCLUSION_RADIUS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub est_error: f64,
    pub terms_used: u64,
}

impl EvalResult {
    pub fn exact(value: Complex64) -> Self {
        Self {
            value,
            est_error: 0.0,
            terms_used: 0,
        }
    }
}

/// Serializes a complex number as `{"re": .., "im": ..}`.
pub fn complex_json<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Complex", 2)?;
    st.serialize_field("im", &z.im)?;
    st.serialize_field("re", &z.re)?;
    st.end()
}

struct ComplexRef<'a>(&'a Complex64);

impl Serialize for ComplexRef<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        complex_json(self.0, s)
    }
}

impl Serialize for EvalResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EvalResult", 3)?;
        st.serialize_field("est_error", &self.est_error)?;
        st.serialize_field("terms_used", &self.terms_used)?;
        st.serialize_field("value", &ComplexRef(&self.value))?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("s is within the exclusion radius of the pole at s = 1")]
    PoleAt1,
    #[error("s is within the exclusion radius of the pole at s = 1/{j}")]
    PoleProximity { j: u32 },
    #[error("estimated error {:e} exceeds the precision target", partial.est_error)]
    PrecisionLoss { partial: EvalResult },
    #[error("the series diverges for Re(s) = {re} <= 1")]
    DivergenceRegion { re: f64 },
    #[error("invalid product form: {0}")]
    InvalidForm(String),
    #[error("pole order fit at s = 1/{j} is unstable (raw estimates {estimates:?})")]
    FitUnstable { j: u32, estimates: [f64; 2] },
    #[error("evaluation produced a non-finite value")]
    NonFinite,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl NumericError {
    /// Variant name, used verbatim in structured error reports.
    pub fn name(&self) -> &'static str {
        match self {
            Self::PoleAt1 => "PoleAt1",
            Self::PoleProximity { .. } => "PoleProximity",
            Self::PrecisionLoss { .. } => "PrecisionLoss",
            Self::DivergenceRegion { .. } => "DivergenceRegion",
            Self::InvalidForm(_) => "InvalidForm",
            Self::FitUnstable { .. } => "FitUnstable",
            Self::NonFinite => "NonFinite",
            Self::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub(crate) fn ensure_finite(r: EvalResult) -> Result<EvalResult, NumericError> {
    if r.value.is_finite() && r.est_error.is_finite() {
        Ok(r)
    } else {
        Err(NumericError::NonFinite)
    }
}

pub(crate) fn require_convergent(s: Complex64) -> Result<(), NumericError> {
    if s.re > 1.0 {
        Ok(())
    } else {
        Err(NumericError::DivergenceRegion { re: s.re })
    }
}

/// `n^{-s}` for a positive integer `n`.
#[inline]
pub(crate) fn inv_pow(n: u64, s: Complex64) -> Complex64 {
    (-s * (n as f64).ln()).exp()
}
