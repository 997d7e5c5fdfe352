//! Exact formal power series and rational functions in `q`, used to check
//! MacMahon's partial fractions and Faà di Bruno's formula, plus the
//! finite generating-function product in `z` for the partition zeta family.

mod faa_di_bruno;
mod genfun;
mod macmahon;
mod polynomial;
mod series;

use thiserror::Error;

pub use faa_di_bruno::{faa_di_bruno_check, faa_di_bruno_partition_side};
pub use genfun::restricted_genfun_coeffs;
pub use macmahon::{
    macmahon_decomposition_series, macmahon_exact_identity, macmahon_lhs, macmahon_rational_functions,
    macmahon_rhs,
};
pub use polynomial::{Polynomial, RationalFunction};
pub use series::{series_exp, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("exp requires a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("series with zero constant term has no reciprocal")]
    NotInvertible,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl QSeriesError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::NonzeroConstantTerm => "NonzeroConstantTerm",
            Self::NotInvertible => "NotInvertible",
            Self::ZeroDenominator => "ZeroDenominator",
            Self::InvalidArgument(_) => "InvalidArgument",
        }
    }
}
