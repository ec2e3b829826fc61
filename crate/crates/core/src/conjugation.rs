//! Conjugation of linear maps by triangular resonant maps, `sigma^{-1} ∘ L ∘ sigma`,
//! and the checks built on it: block-diagonality of `L`, degree against the
//! resonance order, witness search for degree-exceeding conjugates, the
//! empirical degree estimate, and recovery of `(sigma, J)` from a given map.
//!
//! Randomized operations derive one sub-seed per trial from `(seed, trial)`,
//! so the outcome of trial `t` does not depend on the other trials.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linear::{solve_linear_system, LinearMap, LinearSolution};
use crate::poly::{PolyMap, Polynomial, Rational};
use crate::resonant::{default_pool, nonlinear_resonant_monomials, TriangularResonantMap};
use crate::weights::{BlockPartition, MultiIndex, WeightVector};

/// Whether every entry outside the diagonal blocks of `p` is zero.
pub fn is_block_diagonal(l: &LinearMap, p: &BlockPartition) -> Result<bool> {
    if l.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: l.dim(),
        });
    }
    let n = l.dim();
    Ok((0..n).all(|i| (0..n).all(|j| p.block_of(i) == p.block_of(j) || l.get(i, j).is_zero())))
}

/// `sigma^{-1} ∘ L ∘ sigma` as a polynomial map.
pub fn conjugate(sigma: &TriangularResonantMap, l: &LinearMap) -> Result<PolyMap> {
    if l.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: sigma.dim(),
            found: l.dim(),
        });
    }
    if !l.is_invertible() {
        return Err(Error::SingularLinearMap);
    }
    let inner = PolyMap::from_linear(l).compose(&sigma.to_poly_map())?;
    sigma.invert().to_poly_map().compose(&inner)
}

/// Everything [`check_theorem_instance`] reports about one conjugate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationReport {
    pub result: PolyMap,
    pub degree: u64,
    pub block_diagonal: bool,
    pub component_resonant: Vec<bool>,
    pub bound_mu: u64,
    pub within_bound: bool,
}

impl ConjugationReport {
    pub fn all_resonant(&self) -> bool {
        self.component_resonant.iter().all(|&r| r)
    }
}

/// Conjugates and classifies. When `L` is block diagonal the conjugate always
/// has degree at most `mu` and each component `i` is `i`-th resonant.
pub fn check_theorem_instance(
    m: &WeightVector,
    sigma: &TriangularResonantMap,
    l: &LinearMap,
) -> Result<ConjugationReport> {
    check_weights(m, sigma)?;
    let result = conjugate(sigma, l)?;
    let degree = result.total_degree();
    let bound_mu = m.resonance_order();
    let block_diagonal = is_block_diagonal(l, &m.block_partition())?;
    let component_resonant = result
        .components()
        .iter()
        .enumerate()
        .map(|(k, p)| p.is_i_resonant(m, k + 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjugationReport {
        result,
        degree,
        block_diagonal,
        component_resonant,
        bound_mu,
        within_bound: degree <= bound_mu,
    })
}

fn check_weights(m: &WeightVector, sigma: &TriangularResonantMap) -> Result<()> {
    if sigma.weights() != m {
        return Err(Error::WeightMismatch {
            left: m.to_string(),
            right: sigma.weights().to_string(),
        });
    }
    Ok(())
}

/// Sub-seed of trial `trial` (splitmix64 finalizer over the pair).
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Entries used by the linear-map samplers: `{-2, -1, 0, 1, 2}`.
pub fn linear_pool() -> Vec<Rational> {
    (-2..=2).map(|v: i64| Rational::from_integer(v.into())).collect()
}

/// A random invertible `n x n` matrix with entries from `pool`. Draws are
/// repeated until the matrix is invertible; `pool` must contain a nonzero value.
pub fn random_linear(n: usize, seed: u64, pool: &[Rational]) -> Result<LinearMap> {
    random_invertible(n, seed, pool, |_, _| true)
}

/// A random invertible matrix that is block diagonal for `p`.
pub fn random_block_diagonal_linear(p: &BlockPartition, seed: u64, pool: &[Rational]) -> Result<LinearMap> {
    random_invertible(p.dim(), seed, pool, |i, j| p.block_of(i) == p.block_of(j))
}

fn random_invertible(
    n: usize,
    seed: u64,
    pool: &[Rational],
    allowed: impl Fn(usize, usize) -> bool,
) -> Result<LinearMap> {
    if pool.iter().all(Zero::is_zero) {
        return Err(Error::EmptyPool);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                if allowed(i, j) {
                    entries.push(pool[rng.gen_range(0..pool.len())].clone());
                } else {
                    entries.push(Rational::zero());
                }
            }
        }
        let l = LinearMap::new(n, entries)?;
        if l.is_invertible() {
            return Ok(l);
        }
    }
}

/// A `sigma` whose conjugate of `L` exceeds the resonance order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationWitness {
    pub sigma: TriangularResonantMap,
    pub degree: u64,
    pub bound_mu: u64,
    pub trial: u64,
}

/// Searches `trials` random `sigma` for one with `deg(sigma^{-1} ∘ L ∘ sigma) > mu`.
///
/// `None` means the budget ran out, not that no witness exists.
pub fn find_violation(m: &WeightVector, l: &LinearMap, trials: u64, seed: u64) -> Result<Option<ViolationWitness>> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    if l.dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: l.dim(),
        });
    }
    if !l.is_invertible() {
        return Err(Error::SingularLinearMap);
    }
    if is_block_diagonal(l, &m.block_partition())? {
        return Err(Error::BlockDiagonalInput);
    }
    let mu = m.resonance_order();
    let pool = default_pool();
    for t in 0..trials {
        let sigma = TriangularResonantMap::random(m, trial_seed(seed, t), &pool)?;
        let degree = conjugate(&sigma, l)?.total_degree();
        if degree > mu {
            return Ok(Some(ViolationWitness {
                sigma,
                degree,
                bound_mu: mu,
                trial: t,
            }));
        }
    }
    Ok(None)
}

/// Maximal degree observed over random conjugates, with the a-priori cap `mu^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuasiResonanceEstimate {
    pub observed_max: u64,
    pub cap: u64,
    pub trials: u64,
}

/// Lower estimate of the largest degree reachable by `sigma^{-1} ∘ L ∘ sigma`.
///
/// Trial `t` draws `sigma` from sub-seed `(seed, 2t)` with the default
/// coefficient pool and `L` from sub-seed `(seed, 2t + 1)` with
/// [`linear_pool`].
pub fn quasi_resonance_estimate(m: &WeightVector, trials: u64, seed: u64) -> Result<QuasiResonanceEstimate> {
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let mu = m.resonance_order();
    let sigma_pool = default_pool();
    let l_pool = linear_pool();
    let mut observed_max = 0;
    for t in 0..trials {
        let sigma = TriangularResonantMap::random(m, trial_seed(seed, 2 * t), &sigma_pool)?;
        let l = random_linear(m.dim(), trial_seed(seed, 2 * t + 1), &l_pool)?;
        observed_max = observed_max.max(conjugate(&sigma, &l)?.total_degree());
    }
    Ok(QuasiResonanceEstimate {
        observed_max,
        cap: mu * mu,
        trials,
    })
}

/// A decomposition `sigma ∘ f = J ∘ sigma` found by [`solve_conjugacy`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacySolution {
    pub sigma: TriangularResonantMap,
    pub linear: LinearMap,
    pub residual_zero: bool,
    /// Unknown coefficients left undetermined by the system and set to zero.
    /// A positive count means the decomposition is not unique.
    pub free_parameters: usize,
}

/// Finds a triangular resonant `sigma` with `sigma ∘ f = J ∘ sigma`, where `J`
/// is the linear part of `f`.
///
/// The unknowns are the coefficients `c_{i,alpha}` of `g`, one per nonlinear
/// `i`-th resonant monomial. Component `r` of `sigma ∘ f - J ∘ sigma` is
///
/// `f_r - (J z)_r + sum_alpha c_{r,alpha} f^alpha - sum_{i,alpha} J_{r,i} c_{i,alpha} z^alpha`,
///
/// which is affine in the unknowns. Setting every coefficient to zero gives an
/// exact linear system, solved over `Q` with free unknowns set to zero.
pub fn solve_conjugacy(f: &PolyMap, m: &WeightVector) -> Result<ConjugacySolution> {
    let n = m.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: f.dim(),
        });
    }
    let j = f.linear_part()?;
    if !j.is_invertible() {
        return Err(Error::SingularLinearPart);
    }
    let jz = PolyMap::from_linear(&j);

    let mut unknowns: Vec<(usize, MultiIndex)> = Vec::new();
    for i in 1..=n {
        for alpha in nonlinear_resonant_monomials(m, i)? {
            unknowns.push((i, alpha));
        }
    }
    let monomials: Vec<Polynomial> = unknowns
        .iter()
        .map(|(_, alpha)| Polynomial::monomial(alpha.clone(), Rational::one()))
        .collect();
    let f_powers = Polynomial::substitute_all(&monomials, f.components())?;

    // rows[(r, gamma)][u] = coefficient of unknown u at monomial gamma in component r
    let mut rows: BTreeMap<(usize, MultiIndex), BTreeMap<usize, Rational>> = BTreeMap::new();
    let mut add = |r: usize, p: &Polynomial, u: usize, scale: &Rational| {
        for (gamma, c) in p.terms() {
            let entry = rows
                .entry((r, gamma.clone()))
                .or_default()
                .entry(u)
                .or_insert_with(Rational::zero);
            *entry += c * scale;
        }
    };
    let one = Rational::one();
    for (u, ((i, alpha), fa)) in unknowns.iter().zip(&f_powers).enumerate() {
        add(i - 1, fa, u, &one);
        let za = Polynomial::monomial(alpha.clone(), Rational::one());
        for r in 0..n {
            let jri = j.get(r, i - 1);
            if !jri.is_zero() {
                add(r, &za, u, &-jri);
            }
        }
    }
    let constant: Vec<Polynomial> = f.components().iter().zip(jz.components()).map(|(a, b)| a - b).collect();
    for (r, p) in constant.iter().enumerate() {
        for (gamma, _) in p.terms() {
            rows.entry((r, gamma.clone())).or_default();
        }
    }

    let mut matrix = Vec::with_capacity(rows.len());
    let mut rhs = Vec::with_capacity(rows.len());
    for ((r, gamma), entries) in &rows {
        let mut row = vec![Rational::zero(); unknowns.len()];
        for (u, c) in entries {
            row[*u] = c.clone();
        }
        matrix.push(row);
        rhs.push(-constant[*r].coeff(gamma));
    }

    let (values, free) = match solve_linear_system(&matrix, &rhs, unknowns.len()) {
        LinearSolution::Inconsistent => return Err(Error::NoResonantConjugacy),
        LinearSolution::Solved { values, free } => (values, free),
    };
    let coeffs: BTreeMap<(usize, MultiIndex), Rational> = unknowns
        .iter()
        .cloned()
        .zip(values)
        .filter(|(_, c)| !c.is_zero())
        .collect();

    // sigma ∘ f, reusing the powers f^alpha computed above
    let mut lhs: Vec<Polynomial> = f.components().to_vec();
    for ((i, alpha), fa) in unknowns.iter().zip(&f_powers) {
        let c = coeffs.get(&(*i, alpha.clone())).cloned().unwrap_or_else(Rational::zero);
        if !c.is_zero() {
            lhs[i - 1] = &lhs[i - 1] + &fa.scale(&c);
        }
    }
    let sigma = TriangularResonantMap::from_coefficients(m, &coeffs)?;
    let rhs = jz.compose(&sigma.to_poly_map())?;
    let residual_zero = lhs.iter().zip(rhs.components()).all(|(a, b)| a == b);
    Ok(ConjugacySolution {
        sigma,
        linear: j,
        residual_zero,
        free_parameters: free,
    })
}
