//! Integer partitions and the statistics every formula in this crate is
//! phrased in: size, length, norm and multiplicities.
//!
//! Enumeration is streaming and always in reverse-lexicographic order on
//! the parts, so `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)` for size 4.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive, found 0 at index {0}")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing, index {0} breaks the order")]
    NotDecreasing(usize),
}

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::ZeroPart(i));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(PartitionError::NotDecreasing(i));
            }
        }
        Ok(Self { parts })
    }

    /// Sorts the given parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Product of the parts; 1 for the empty partition.
    pub fn norm(&self) -> BigUint {
        self.parts
            .iter()
            .fold(BigUint::one(), |acc, &p| acc * BigUint::from(p))
    }

    pub fn multiplicities(&self) -> MultiplicityVector {
        let mut entries = BTreeMap::new();
        for &p in &self.parts {
            *entries.entry(p).or_insert(0u32) += 1;
        }
        MultiplicityVector { entries }
    }
}

impl fmt::Display for Partition {
    /// Canonical textual form, e.g. `[3,2,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// Sparse map from part value `j` to its multiplicity `m_j`. Absent keys
/// mean `m_j = 0`; stored multiplicities are always at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityVector {
    entries: BTreeMap<u32, u32>,
}

impl MultiplicityVector {
    pub fn get(&self, part: u32) -> u32 {
        self.entries.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&j, &m)| (j, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Dense vector `[m_1, ..., m_k]`.
    pub fn to_dense(&self, k: usize) -> Vec<u32> {
        let mut dense = vec![0; k];
        for (j, m) in self.iter() {
            if let Some(slot) = dense.get_mut(j as usize - 1) {
                *slot = m;
            }
        }
        dense
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .entries
            .iter()
            .rev()
            .flat_map(|(&j, &m)| std::iter::repeat_n(j, m as usize))
            .collect();
        Partition { parts }
    }

    /// `Π_j j^{m_j}`, equal to the norm of the partition.
    pub fn norm(&self) -> BigUint {
        self.iter()
            .fold(BigUint::one(), |acc, (j, m)| acc * BigUint::from(j).pow(m))
    }

    /// `Π_j m_j!`
    pub fn factorial_product(&self) -> BigUint {
        self.iter()
            .fold(BigUint::one(), |acc, (_, m)| acc * factorial(m))
    }
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Streams every partition of `n` in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct PartitionsOfSize {
    current: Option<Vec<u32>>,
}

impl Iterator for PartitionsOfSize {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = next_by_size(&parts);
        Some(Partition { parts })
    }
}

// Successor in reverse-lex order: the rightmost part above 1 and the ones
// after it are replaced by a greedy fill using parts one smaller.
fn next_by_size(parts: &[u32]) -> Option<Vec<u32>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let value = parts[pivot] - 1;
    let mut rest = value + (parts.len() - pivot) as u32;
    let mut next = parts[..pivot].to_vec();
    while rest > 0 {
        let p = value.min(rest);
        next.push(p);
        rest -= p;
    }
    Some(next)
}

pub fn enumerate_partitions_of_size(n: u32) -> PartitionsOfSize {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    PartitionsOfSize {
        current: Some(first),
    }
}

/// Streams every partition with exactly `length` parts, each at most
/// `max_part`, in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct PartitionsFixedLength {
    current: Option<Vec<u32>>,
}

impl Iterator for PartitionsFixedLength {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let mut next = parts.clone();
        if let Some(pivot) = next.iter().rposition(|&p| p > 1) {
            let value = next[pivot] - 1;
            for p in &mut next[pivot..] {
                *p = value;
            }
            self.current = Some(next);
        }
        Some(Partition { parts })
    }
}

pub fn enumerate_partitions_fixed_length(length: usize, max_part: u32) -> PartitionsFixedLength {
    let current = if length == 0 || max_part == 0 {
        None
    } else {
        Some(vec![max_part; length])
    };
    PartitionsFixedLength { current }
}
