//! Partition zeta functions `ζ_P({s}^k) = Σ_{ℓ(λ)=k} N(λ)^{-s}` summed over
//! integer partitions of fixed length `k`.
//!
//! - [`partitions`]: enumeration and the size/length/norm/multiplicity statistics.
//! - [`exact`]: exact values at even arguments, as rational multiples of powers of π.
//! - [`numeric`]: double-precision evaluation on the complex plane, with the
//!   direct truncated sum as an independent oracle.
//! - [`qseries`]: exact q-series checks of the MacMahon and Faà di Bruno identities.

pub mod exact;
pub mod numeric;
pub mod partitions;
pub mod qseries;

pub use exact::{partition_zeta_exact, schneider_coefficient, zeta_even_exact, ExactError, PiPower};
pub use num_complex::Complex64;
pub use num_rational::BigRational;
pub use numeric::{
    direct_sum_truncated, euler_product_eval, partition_zeta_family, pole_order_estimate,
    riemann_zeta, ComplexValue, EvalResult, NumericError, ProductForm,
};
pub use partitions::{Partition, PartitionError};
pub use qseries::{QSeriesError, TruncatedSeries};
