use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::TruncatedSeries;
use crate::partitions::enumerate_partitions_of_size;

/// Partition side of Faà di Bruno's formula: for each `0 <= k <= order`,
/// `Σ_{λ⊢k} Π_j a_j^{m_j} / m_j!`, with `a_j = 0` past the end of `a`.
pub fn faa_di_bruno_partition_side(a: &[BigRational], order: usize) -> Vec<BigRational> {
    (0..=order as u32)
        .map(|k| {
            enumerate_partitions_of_size(k)
                .map(|lambda| {
                    let mult = lambda.multiplicities();
                    let mut term = BigRational::one();
                    for (j, mj) in mult.iter() {
                        match a.get(j as usize - 1) {
                            Some(aj) if !aj.is_zero() => {
                                term *= num_traits::pow(aj.clone(), mj as usize);
                            }
                            _ => return BigRational::zero(),
                        }
                    }
                    term / BigRational::from_integer(BigInt::from(mult.factorial_product()))
                })
                .fold(BigRational::zero(), |acc, t| acc + t)
        })
        .collect()
}

/// Compares `exp(Σ_{j>=1} a_j x^j)` computed as a series against the
/// partition-indexed expansion, coefficient by coefficient up to `x^order`.
pub fn faa_di_bruno_check(a: &[BigRational], order: usize) -> bool {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(BigRational::zero());
    coeffs.extend(a.iter().take(order).cloned());
    let series = TruncatedSeries::from_coeffs(coeffs, order);
    let Ok(exp) = series.exp() else {
        return false;
    };
    exp.coeffs() == faa_di_bruno_partition_side(a, order).as_slice()
}
