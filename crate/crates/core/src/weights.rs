//! Weight vectors of the circle action `z_i -> e^{i m_i t} z_i`, their block
//! partition into equal-weight runs, and the resonance sets
//! `E_i = { alpha : m . alpha = m_i }`.
//!
//! Weights are stored as `u64` and weighted degrees `m . alpha` are computed in
//! `u128`. With `u32` exponents a product `m_j * alpha_j` stays below `2^96`,
//! so no accumulation over a realistic dimension can overflow.

use std::fmt;
use std::ops::Range;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Exponent vector `alpha` of a monomial `z^alpha`.
///
/// Ordering is lexicographic on the exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The unit multi-index `e_j` (0-based `j`).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Total degree `|alpha|`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    /// Weighted degree `m . alpha`.
    ///
    /// Panics if the lengths differ.
    pub fn weighted_degree(&self, m: &WeightVector) -> u128 {
        assert_eq!(self.len(), m.dim(), "multi-index and weight vector lengths differ");
        self.0
            .iter()
            .zip(m.as_slice())
            .map(|(&a, &w)| u128::from(a) * u128::from(w))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Indices (0-based) of the variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &a)| a > 0).map(|(j, _)| j)
    }
}

impl std::ops::Index<usize> for MultiIndex {
    type Output = u32;

    fn index(&self, j: usize) -> &u32 {
        &self.0[j]
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, a) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A validated weight vector `m = (m_1, ..., m_n)`: positive, nondecreasing,
/// with gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    /// Validates raw weights without normalizing them.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyWeights);
        }
        if let Some((i, &v)) = raw.iter().enumerate().find(|(_, &v)| v <= 0) {
            return Err(Error::NonPositiveWeight { index: i + 1, value: v });
        }
        if let Some(i) = raw.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::Unsorted { index: i + 1 });
        }
        let m: Vec<u64> = raw.iter().map(|&v| v as u64).collect();
        let g = m.iter().fold(0u64, |g, &v| g.gcd(&v));
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        Ok(WeightVector(m))
    }

    /// Sorts and divides by the gcd. Returns the canonical weights together with
    /// the permutation `perm` such that canonical coordinate `k` is raw
    /// coordinate `perm[k]` (0-based). The sort is stable.
    pub fn canonicalize(raw: &[i64]) -> Result<(Self, Vec<usize>)> {
        if raw.is_empty() {
            return Err(Error::EmptyWeights);
        }
        if let Some((i, &v)) = raw.iter().enumerate().find(|(_, &v)| v <= 0) {
            return Err(Error::NonPositiveWeight { index: i + 1, value: v });
        }
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by_key(|&k| raw[k]);
        let g = raw.iter().fold(0i64, |g, &v| g.gcd(&v));
        let sorted: Vec<i64> = perm.iter().map(|&k| raw[k] / g).collect();
        Ok((WeightVector::new(&sorted)?, perm))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// `m_i` for a 1-based index.
    pub fn weight(&self, i: usize) -> Result<u64> {
        self.check_index(i)?;
        Ok(self.0[i - 1])
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim() {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.dim(),
            })
        } else {
            Ok(())
        }
    }

    pub fn block_partition(&self) -> BlockPartition {
        let mut boundaries = vec![0];
        for k in 1..self.dim() {
            if self.0[k] > self.0[k - 1] {
                boundaries.push(k);
            }
        }
        boundaries.push(self.dim());
        BlockPartition { boundaries }
    }

    /// The resonance set `E_i` (1-based `i`), in lexicographic order.
    pub fn resonance_set(&self, i: usize) -> Result<Vec<MultiIndex>> {
        let target = self.weight(i)?;
        Ok(solve_knapsack(&self.0, target))
    }

    pub fn resonance_profile(&self) -> ResonanceProfile {
        let sets: Vec<Vec<MultiIndex>> = (1..=self.dim())
            .map(|i| solve_knapsack(&self.0, self.0[i - 1]))
            .collect();
        let orders: Vec<u64> = sets
            .iter()
            .map(|set| set.iter().map(MultiIndex::degree).max().unwrap_or(0))
            .collect();
        let order = orders.iter().copied().max().unwrap_or(0);
        ResonanceProfile { sets, orders, order }
    }

    /// The resonance order `mu`.
    pub fn resonance_order(&self) -> u64 {
        self.resonance_profile().order
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `alpha` in `N^n` with `sum_j weights[j] * alpha[j] == target`, lexicographic.
///
/// Weights must be positive. The search descends coordinate by coordinate and
/// never visits a partial sum above `target`.
pub fn solve_knapsack(weights: &[u64], target: u64) -> Vec<MultiIndex> {
    fn descend(weights: &[u64], j: usize, rem: u64, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if j + 1 == weights.len() {
            if rem.is_multiple_of(weights[j]) {
                cur.push((rem / weights[j]) as u32);
                out.push(MultiIndex(cur.clone()));
                cur.pop();
            }
            return;
        }
        let max = rem / weights[j];
        for a in 0..=max {
            cur.push(a as u32);
            descend(weights, j + 1, rem - a * weights[j], cur, out);
            cur.pop();
        }
    }

    let mut out = Vec::new();
    if weights.is_empty() {
        if target == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return out;
    }
    descend(weights, 0, target, &mut Vec::with_capacity(weights.len()), &mut out);
    out
}

/// Boundaries `0 = k_0 < k_1 < ... < k_l = n` of the maximal equal-weight runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockPartition {
    boundaries: Vec<usize>,
}

impl BlockPartition {
    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    /// Number of blocks `l`.
    pub fn block_count(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn dim(&self) -> usize {
        *self.boundaries.last().unwrap()
    }

    /// 0-based coordinate range of block `p` (0-based).
    pub fn block(&self, p: usize) -> Range<usize> {
        self.boundaries[p]..self.boundaries[p + 1]
    }

    pub fn blocks(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        self.boundaries.windows(2).map(|w| w[0]..w[1])
    }

    /// Block (0-based) containing the 0-based coordinate `k`.
    pub fn block_of(&self, k: usize) -> usize {
        self.boundaries.partition_point(|&b| b <= k) - 1
    }
}

/// Resonance sets `E_1..E_n`, per-index orders `mu_i` and the order `mu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResonanceProfile {
    pub sets: Vec<Vec<MultiIndex>>,
    pub orders: Vec<u64>,
    pub order: u64,
}
