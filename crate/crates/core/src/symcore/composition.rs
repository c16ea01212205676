use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::binomial;
use crate::{Error, Result};

/// An ordered list of positive row sizes. The rows of a tabloid of this shape
/// have exactly these sizes, top row first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Arc<[usize]>,
}

impl Composition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let parts = parts.into();
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition {
            parts: parts.into(),
        })
    }

    /// `(1, 1, ..., 1)`: tabloids are full rankings.
    pub fn full_ranking(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    /// `(1, n - 1)`: tabloids are single candidates (the top row).
    pub fn candidates(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "the candidate shape (1, n-1) needs n >= 2, got n = {n}"
            )));
        }
        Self::new(vec![1, n - 1])
    }

    /// `(1, 1, n - 2)`, or `(1, 1)` when `n = 2`: tabloids are ordered pairs.
    pub fn ordered_pairs(n: usize) -> Result<Self> {
        match n {
            0 | 1 => Err(Error::InvalidArgument(format!(
                "ordered pairs need n >= 2, got n = {n}"
            ))),
            2 => Self::new(vec![1, 1]),
            _ => Self::new(vec![1, 1, n - 2]),
        }
    }

    /// `(k, n - k)`, or `(n)` when `k = n`: tabloids are `k`-element subsets.
    pub fn subsets(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidArgument(format!(
                "subset size k = {k} must satisfy 1 <= k <= n = {n}"
            )));
        }
        if k == n {
            Self::new(vec![n])
        } else {
            Self::new(vec![k, n - k])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_full_ranking(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// The associated partition: parts in non-increasing order.
    pub fn sorted(&self) -> Composition {
        let mut parts = self.parts.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition {
            parts: parts.into(),
        }
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// Number of tabloids, the multinomial `n! / (λ₁! ⋯ λ_m!)`.
    pub fn tabloid_count(&self) -> Result<u128> {
        self.count_from_row(0).ok_or(Error::Capacity {
            what: "tabloid count",
            needed: u128::MAX,
            limit: u128::MAX,
        })
    }

    /// Number of ways to fill rows `row..` with the labels left over once the
    /// rows above have been chosen.
    pub(crate) fn count_from_row(&self, row: usize) -> Option<u128> {
        let mut remaining: usize = self.parts[row..].iter().sum();
        let mut acc: u128 = 1;
        for &part in &self.parts[row..] {
            acc = acc.checked_mul(binomial(remaining as u64, part as u64))?;
            remaining -= part;
        }
        Some(acc)
    }

    pub(crate) fn row_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &p in self.parts.iter() {
            acc += p;
            offsets.push(acc);
        }
        offsets
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Composition::new(parts).map_err(serde::de::Error::custom)
    }
}
