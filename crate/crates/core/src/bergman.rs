//! Support patterns forced on the Bergman metric tensor `T(z, 0)` by the
//! circle action, and the matching structure check for the Jacobian of a
//! triangular resonant map.
//!
//! Invariance under `z_i -> e^{i m_i t} z_i` allows the coefficient of `z^alpha`
//! in entry `(i, j)` only when `m . alpha = m_i - m_j`, i.e. when
//! `alpha + e_j` lies in `E_i`. Only these support constraints are modelled
//! here; the tensor values themselves depend on the domain.

use crate::error::Result;
use crate::poly::Polynomial;
use crate::resonant::TriangularResonantMap;
use crate::weights::{solve_knapsack, MultiIndex, WeightVector};

/// `{alpha : m . alpha = m_i - m_j}` in lexicographic order (1-based indices).
/// Empty when `m_i < m_j`.
pub fn admissible_exponents(m: &WeightVector, i: usize, j: usize) -> Result<Vec<MultiIndex>> {
    let mi = m.weight(i)?;
    let mj = m.weight(j)?;
    if mi < mj {
        return Ok(Vec::new());
    }
    Ok(solve_knapsack(m.as_slice(), mi - mj))
}

/// Admissible exponents for every entry `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityPattern {
    /// `entries[i][j]` for 0-based `i`, `j`.
    pub entries: Vec<Vec<Vec<MultiIndex>>>,
}

pub fn admissibility_pattern(m: &WeightVector) -> AdmissibilityPattern {
    let n = m.dim();
    let entries = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| admissible_exponents(m, i, j).expect("indices in range"))
                .collect()
        })
        .collect();
    AdmissibilityPattern { entries }
}

/// `allowed[p][q]`: whether block `(p, q)` of the nonconstant part `M(z)` of
/// `T(z, 0)` may be nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPattern {
    pub allowed: Vec<Vec<bool>>,
}

impl BlockPattern {
    /// No block on or above the block diagonal is allowed.
    pub fn is_strictly_block_lower(&self) -> bool {
        self.allowed
            .iter()
            .enumerate()
            .all(|(p, row)| row.iter().enumerate().all(|(q, &a)| p > q || !a))
    }
}

/// A block is allowed iff some entry inside it admits a nonzero exponent.
pub fn tensor_block_pattern(m: &WeightVector) -> BlockPattern {
    let partition = m.block_partition();
    let pattern = admissibility_pattern(m);
    let l = partition.block_count();
    let allowed = (0..l)
        .map(|p| {
            (0..l)
                .map(|q| {
                    partition.block(p).any(|i| {
                        partition
                            .block(q)
                            .any(|j| pattern.entries[i][j].iter().any(|a| !a.is_zero()))
                    })
                })
                .collect()
        })
        .collect();
    BlockPattern { allowed }
}

/// One way the Jacobian of `sigma` departs from `I + N` with `N` strictly
/// block-lower and supported on admissible exponents. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobianViolation {
    DiagonalNotOne { i: usize },
    NonzeroOnOrAboveBlockDiagonal { i: usize, j: usize },
    InadmissibleExponent { i: usize, j: usize, alpha: MultiIndex },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianReport {
    /// Symbolic Jacobian, `jacobian[i][j] = d sigma_i / d z_j` (0-based).
    pub jacobian: Vec<Vec<Polynomial>>,
    pub violations: Vec<JacobianViolation>,
}

impl JacobianReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Differentiates `sigma` and checks the Jacobian's shape.
pub fn check_sigma_jacobian_structure(sigma: &TriangularResonantMap) -> JacobianReport {
    let m = sigma.weights();
    let n = m.dim();
    let partition = m.block_partition();
    let f = sigma.to_poly_map();
    let jacobian: Vec<Vec<Polynomial>> = f
        .components()
        .iter()
        .map(|p| (0..n).map(|j| p.derivative(j)).collect())
        .collect();

    let mut violations = Vec::new();
    for (i, row) in jacobian.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if i == j {
                if *entry != Polynomial::one(n) {
                    violations.push(JacobianViolation::DiagonalNotOne { i: i + 1 });
                }
                continue;
            }
            if entry.is_zero() {
                continue;
            }
            if partition.block_of(i) <= partition.block_of(j) {
                violations.push(JacobianViolation::NonzeroOnOrAboveBlockDiagonal { i: i + 1, j: j + 1 });
            }
            let admissible = admissible_exponents(m, i + 1, j + 1).expect("indices in range");
            for (alpha, _) in entry.terms() {
                if admissible.binary_search(alpha).is_err() {
                    violations.push(JacobianViolation::InadmissibleExponent {
                        i: i + 1,
                        j: j + 1,
                        alpha: alpha.clone(),
                    });
                }
            }
        }
    }
    JacobianReport { jacobian, violations }
}
