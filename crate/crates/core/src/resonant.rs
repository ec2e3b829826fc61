//! Triangular resonant maps `sigma = id + g`, where every monomial of `g_i`
//! lies in the resonance set `E_i` and has total degree at least 2.
//!
//! A nonlinear monomial `z^alpha` with `m . alpha = m_i` can only involve
//! variables of weight strictly below `m_i`, so `g_i` depends on earlier
//! blocks only. That makes `sigma` triangular and its inverse computable by
//! forward substitution.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{PolyMap, Polynomial, Rational};
use crate::weights::{MultiIndex, WeightVector};

/// `{alpha in E_i : |alpha| >= 2}` in lexicographic order (1-based `i`).
pub fn nonlinear_resonant_monomials(m: &WeightVector, i: usize) -> Result<Vec<MultiIndex>> {
    Ok(m.resonance_set(i)?.into_iter().filter(|a| a.degree() >= 2).collect())
}

/// The coefficient pool used when none is supplied: `{-2, -1, -1/2, 1/2, 1, 2}`.
pub fn default_pool() -> Vec<Rational> {
    [(-2, 1), (-1, 1), (-1, 2), (1, 2), (1, 1), (2, 1)]
        .into_iter()
        .map(|(a, b)| Rational::new(a.into(), b.into()))
        .collect()
}

/// A map `sigma(z) = z + g(z)` whose nonlinear part is built from nonlinear
/// resonant monomials only. Constructed through validating constructors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangularResonantMap {
    weights: WeightVector,
    g: Vec<Polynomial>,
}

impl TriangularResonantMap {
    pub fn identity(m: &WeightVector) -> Self {
        let n = m.dim();
        TriangularResonantMap {
            weights: m.clone(),
            g: vec![Polynomial::zero(n); n],
        }
    }

    /// Builds `sigma` from coefficients keyed by 1-based component index and
    /// exponent. Unlisted coefficients are zero.
    pub fn from_coefficients(m: &WeightVector, coeffs: &BTreeMap<(usize, MultiIndex), Rational>) -> Result<Self> {
        let n = m.dim();
        let mut g = vec![Polynomial::zero(n); n];
        for ((i, alpha), c) in coeffs {
            m.check_index(*i)?;
            if alpha.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: alpha.len(),
                });
            }
            check_monomial(m, *i, alpha)?;
            g[i - 1].add_term(alpha.clone(), c.clone());
        }
        Ok(TriangularResonantMap { weights: m.clone(), g })
    }

    /// Validates the nonlinear parts `g_1..g_n` directly.
    pub fn from_nonlinear_parts(m: &WeightVector, g: Vec<Polynomial>) -> Result<Self> {
        let n = m.dim();
        if g.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.len(),
            });
        }
        for (k, gi) in g.iter().enumerate() {
            if gi.dim() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: gi.dim(),
                });
            }
            for (alpha, _) in gi.terms() {
                check_monomial(m, k + 1, alpha)?;
            }
        }
        Ok(TriangularResonantMap { weights: m.clone(), g })
    }

    /// Recovers `sigma` from a polynomial map of the form `z + g(z)`.
    pub fn from_poly_map(m: &WeightVector, f: &PolyMap) -> Result<Self> {
        let n = m.dim();
        if f.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: f.dim(),
            });
        }
        let g = f
            .components()
            .iter()
            .enumerate()
            .map(|(k, fk)| fk - &Polynomial::var(n, k))
            .collect();
        Self::from_nonlinear_parts(m, g)
    }

    /// Draws one coefficient from `pool` for every admissible monomial, in
    /// component order and then lexicographic exponent order. The result is a
    /// pure function of `(m, seed, pool)`.
    pub fn random(m: &WeightVector, seed: u64, pool: &[Rational]) -> Result<Self> {
        if pool.is_empty() {
            return Err(Error::EmptyPool);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = m.dim();
        let mut g = Vec::with_capacity(n);
        for i in 1..=n {
            let mut gi = Polynomial::zero(n);
            for alpha in nonlinear_resonant_monomials(m, i)? {
                let c = pool[rng.gen_range(0..pool.len())].clone();
                gi.add_term(alpha, c);
            }
            g.push(gi);
        }
        Ok(TriangularResonantMap { weights: m.clone(), g })
    }

    #[cfg(test)]
    pub(crate) fn new_unchecked(m: &WeightVector, g: Vec<Polynomial>) -> Self {
        TriangularResonantMap { weights: m.clone(), g }
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    /// The nonlinear parts `g_1..g_n`.
    pub fn nonlinear_parts(&self) -> &[Polynomial] {
        &self.g
    }

    pub fn is_identity(&self) -> bool {
        self.g.iter().all(Polynomial::is_zero)
    }

    pub fn to_poly_map(&self) -> PolyMap {
        let n = self.dim();
        let components = self
            .g
            .iter()
            .enumerate()
            .map(|(k, gk)| &Polynomial::var(n, k) + gk)
            .collect();
        PolyMap::new(components).expect("components share the ambient dimension")
    }

    pub fn total_degree(&self) -> u64 {
        self.to_poly_map().total_degree()
    }

    /// The inverse `tau = id + h` with
    /// `h_i = -g_i(tau_1, ..., tau_{i-1}, 0, ..., 0)`.
    pub fn invert(&self) -> TriangularResonantMap {
        let n = self.dim();
        let m = self.weights.as_slice();
        let mut tau: Vec<Polynomial> = Vec::with_capacity(n);
        let mut h = Vec::with_capacity(n);
        for (i, gi) in self.g.iter().enumerate() {
            // g_i must not see z_i or anything after it
            for j in gi.variables() {
                assert!(
                    m[j] < m[i],
                    "g_{} involves z_{} of weight {} >= {}",
                    i + 1,
                    j + 1,
                    m[j],
                    m[i]
                );
            }
            let args: Vec<Polynomial> = (0..n)
                .map(|j| if j < i { tau[j].clone() } else { Polynomial::zero(n) })
                .collect();
            let hi = -&gi.substitute(&args).expect("arguments share the ambient dimension");
            tau.push(&Polynomial::var(n, i) + &hi);
            h.push(hi);
        }
        TriangularResonantMap::from_nonlinear_parts(&self.weights, h)
            .expect("inverse of a triangular resonant map is triangular resonant")
    }

    /// `self ∘ other`, revalidated.
    pub fn compose(&self, other: &TriangularResonantMap) -> Result<TriangularResonantMap> {
        if self.weights != other.weights {
            return Err(Error::WeightMismatch {
                left: self.weights.to_string(),
                right: other.weights.to_string(),
            });
        }
        let f = self.to_poly_map().compose(&other.to_poly_map())?;
        Self::from_poly_map(&self.weights, &f)
    }

    /// Coefficients keyed by 1-based component index and exponent.
    pub fn coefficients(&self) -> BTreeMap<(usize, MultiIndex), Rational> {
        let mut out = BTreeMap::new();
        for (k, gk) in self.g.iter().enumerate() {
            for (alpha, c) in gk.terms() {
                if !c.is_zero() {
                    out.insert((k + 1, alpha.clone()), c.clone());
                }
            }
        }
        out
    }
}

fn check_monomial(m: &WeightVector, i: usize, alpha: &MultiIndex) -> Result<()> {
    if alpha.weighted_degree(m) != u128::from(m.as_slice()[i - 1]) {
        return Err(Error::NotResonant {
            index: i,
            alpha: alpha.to_string(),
        });
    }
    if alpha.degree() < 2 {
        return Err(Error::NotNonlinear {
            index: i,
            alpha: alpha.to_string(),
        });
    }
    Ok(())
}
