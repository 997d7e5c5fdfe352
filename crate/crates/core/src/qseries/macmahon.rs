//! MacMahon's partial fraction decomposition of the generating function
//! for partitions with at most `k` parts, and its exact-length variant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::polynomial::{Polynomial, RationalFunction};
use super::series::TruncatedSeries;
use super::QSeriesError;
use crate::partitions::{enumerate_partitions_of_size, MultiplicityVector};

fn check_args(k: u32, order: usize) -> Result<(), QSeriesError> {
    if k == 0 {
        return Err(QSeriesError::InvalidArgument("k must be positive".into()));
    }
    if order < k as usize {
        return Err(QSeriesError::InvalidArgument(format!(
            "order {order} must be at least k = {k}"
        )));
    }
    Ok(())
}

/// `1 / (N(λ) Π_j m_j!)`
fn macmahon_weight(mult: &MultiplicityVector) -> BigRational {
    BigRational::new(
        BigInt::one(),
        BigInt::from(mult.norm() * mult.factorial_product()),
    )
}

/// `q^k / Π_{j=1}^{k} (1 - q^j)`, built by repeated in-place division by
/// `1 - q^j`. The coefficient of `q^n` counts partitions of `n` into
/// exactly `k` parts.
pub fn macmahon_lhs(k: u32, order: usize) -> Result<TruncatedSeries, QSeriesError> {
    check_args(k, order)?;
    let mut coeffs = TruncatedSeries::monomial(BigRational::one(), k as usize, order)
        .coeffs()
        .to_vec();
    for j in 1..=k as usize {
        for n in j..=order {
            let prev = coeffs[n - j].clone();
            coeffs[n] += prev;
        }
    }
    Ok(TruncatedSeries::from_coeffs(coeffs, order))
}

// Σ_{λ⊢k} weight(λ) · q^{shift(λ)} / Π_j (1 - q^j)^{m_j}, expanded through
// series reciprocals.
fn decomposition_sum(
    k: u32,
    order: usize,
    shift: impl Fn(&MultiplicityVector) -> usize,
) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    for lambda in enumerate_partitions_of_size(k) {
        let mult = lambda.multiplicities();
        let den = mult.iter().fold(TruncatedSeries::one(order), |acc, (j, mj)| {
            let factor = TruncatedSeries::one(order)
                - TruncatedSeries::monomial(BigRational::one(), j as usize, order);
            &acc * &factor.pow(mj)
        });
        let term = den
            .reciprocal()
            .expect("constant term is 1")
            .shift(shift(&mult))
            .scale(&macmahon_weight(&mult));
        total = &total + &term;
    }
    total
}

/// `Σ_{λ⊢k} q^{m_1} q^{2m_2}⋯q^{k m_k} / (N(λ) m_1!⋯m_k! (1-q)^{m_1}⋯(1-q^k)^{m_k})`.
/// The numerator exponent `Σ j m_j` equals `k` for every `λ ⊢ k`.
pub fn macmahon_rhs(k: u32, order: usize) -> Result<TruncatedSeries, QSeriesError> {
    check_args(k, order)?;
    Ok(decomposition_sum(k, order, |mult| {
        mult.iter().map(|(j, mj)| (j * mj) as usize).sum()
    }))
}

/// Series expansion of the partial-fraction side for partitions with at
/// most `k` parts: `Σ_{λ⊢k} 1 / (N(λ) Π_j m_j! (1-q^j)^{m_j})`.
pub fn macmahon_decomposition_series(k: u32, order: usize) -> Result<TruncatedSeries, QSeriesError> {
    check_args(k, order)?;
    Ok(decomposition_sum(k, order, |_| 0))
}

/// Both sides of the at-most-`k` decomposition as rational functions. The
/// right side sits over the common denominator `Π_j (1-q^j)^{⌊k/j⌋}`, the
/// largest multiplicity of `j` over all `λ ⊢ k`.
pub fn macmahon_rational_functions(k: u32) -> Result<(RationalFunction, RationalFunction), QSeriesError> {
    if k == 0 {
        return Err(QSeriesError::InvalidArgument("k must be positive".into()));
    }
    let lhs = RationalFunction::inverse_cyclotomic_product((1..=k as usize).map(|j| (j, 1)));

    let max_mult: Vec<u32> = (1..=k).map(|j| k / j).collect();
    let common_den = (1..=k as usize).fold(Polynomial::one(), |acc, j| {
        &acc * &Polynomial::one_minus_q_pow(j).pow(max_mult[j - 1])
    });

    let mut num = Polynomial::zero();
    for lambda in enumerate_partitions_of_size(k) {
        let mult = lambda.multiplicities();
        let complement = (1..=k).fold(Polynomial::one(), |acc, j| {
            let missing = max_mult[j as usize - 1] - mult.get(j);
            &acc * &Polynomial::one_minus_q_pow(j as usize).pow(missing)
        });
        num = &num + &complement.scale(&macmahon_weight(&mult));
    }
    let rhs = RationalFunction::new(num, common_den)?;
    Ok((lhs, rhs))
}

/// Exact check of `Π_{j=1}^{k} 1/(1-q^j) = Σ_{λ⊢k} 1/(N(λ) Π m_j! (1-q^j)^{m_j})`.
pub fn macmahon_exact_identity(k: u32) -> bool {
    macmahon_rational_functions(k).is_ok_and(|(lhs, rhs)| lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn lhs_counts() {
        assert_eq!(ints(&macmahon_lhs(2, 6).unwrap()), vec![0, 0, 1, 1, 2, 2, 3]);
        assert_eq!(ints(&macmahon_lhs(1, 5).unwrap()), vec![0, 1, 1, 1, 1, 1]);
        assert_eq!(ints(&macmahon_lhs(3, 6).unwrap()), vec![0, 0, 0, 1, 1, 2, 3]);
    }

    #[test]
    fn rhs_matches_lhs_small() {
        assert_eq!(macmahon_rhs(1, 5).unwrap(), macmahon_lhs(1, 5).unwrap());
        assert_eq!(macmahon_rhs(2, 6).unwrap(), macmahon_lhs(2, 6).unwrap());
        assert_eq!(macmahon_rhs(3, 8).unwrap(), macmahon_lhs(3, 8).unwrap());
    }

    #[test]
    fn k_two_terms() {
        // q²/(2(1-q)²) + q²/(2(1-q²))
        let half = BigRational::new(1.into(), 2.into());
        let order = 8;
        let one_minus = |j: usize| {
            TruncatedSeries::one(order) - TruncatedSeries::monomial(BigRational::one(), j, order)
        };
        let a = one_minus(1).pow(2).reciprocal().unwrap().shift(2).scale(&half);
        let b = one_minus(2).reciprocal().unwrap().shift(2).scale(&half);
        assert_eq!(&a + &b, macmahon_rhs(2, order).unwrap());
    }

    #[test]
    fn exact_identity_small() {
        assert!(macmahon_exact_identity(1));
        assert!(macmahon_exact_identity(2));
        assert!(macmahon_exact_identity(5));
        assert!(!macmahon_exact_identity(0));
    }

    #[test]
    fn wrong_weights_are_detected() {
        // dropping one partial fraction must break the identity
        let (lhs, rhs) = macmahon_rational_functions(3).unwrap();
        let broken = RationalFunction::new(
            &rhs.num().clone() - &Polynomial::constant(BigRational::new(1.into(), 3.into())),
            rhs.den().clone(),
        )
        .unwrap();
        assert!(lhs == rhs);
        assert!(lhs != broken);
    }

    #[test]
    fn argument_checks() {
        assert!(macmahon_lhs(0, 5).is_err());
        assert!(macmahon_rhs(4, 3).is_err());
        assert!(macmahon_decomposition_series(4, 3).is_err());
    }
}
