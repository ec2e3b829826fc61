//! Independent reference computations for the integration and acceptance
//! suites. None of these call the code paths they are used to check.

#![allow(dead_code)]

use num_integer::Integer;
use num_traits::{One, Zero};
use resonant_core::{LinearMap, MultiIndex, PolyMap, Polynomial, Rational, WeightVector};

/// Every sorted weight vector with gcd 1, `1 <= n <= max_n` and entries in `1..=max_entry`.
pub fn all_weight_vectors(max_n: usize, max_entry: i64) -> Vec<WeightVector> {
    fn extend(cur: &mut Vec<i64>, max_n: usize, max_entry: i64, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_n {
            return;
        }
        let start = cur.last().copied().unwrap_or(1);
        for v in start..=max_entry {
            cur.push(v);
            extend(cur, max_n, max_entry, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    extend(&mut Vec::new(), max_n, max_entry, &mut raw);
    raw.into_iter()
        .filter(|v| v.iter().fold(0i64, |g, x| g.gcd(x)) == 1)
        .map(|v| WeightVector::new(&v).unwrap())
        .collect()
}

/// All `alpha` in the box `prod_j {0..=target / m_j}` with `m . alpha == target`,
/// found by visiting every point of the box. Sorted lexicographically.
pub fn box_enumeration(m: &[u64], target: u64) -> Vec<Vec<u32>> {
    let bounds: Vec<u64> = m.iter().map(|&w| target / w).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u64; m.len()];
    'outer: loop {
        let s: u64 = cur.iter().zip(m).map(|(a, w)| a * w).sum();
        if s == target {
            out.push(cur.iter().map(|&a| a as u32).collect());
        }
        for k in (0..m.len()).rev() {
            if cur[k] < bounds[k] {
                cur[k] += 1;
                continue 'outer;
            }
            cur[k] = 0;
        }
        break;
    }
    out.sort();
    out
}

pub fn box_resonance_set(m: &WeightVector, i: usize) -> Vec<MultiIndex> {
    let w = m.as_slice();
    box_enumeration(w, w[i - 1]).into_iter().map(MultiIndex::new).collect()
}

/// `{alpha : m . alpha = m_i - m_j}` by box enumeration; empty for negative targets.
pub fn box_admissible(m: &WeightVector, i: usize, j: usize) -> Vec<MultiIndex> {
    let w = m.as_slice();
    if w[i - 1] < w[j - 1] {
        return Vec::new();
    }
    box_enumeration(w, w[i - 1] - w[j - 1])
        .into_iter()
        .map(MultiIndex::new)
        .collect()
}

/// Term-by-term substitution with plain repeated multiplication.
pub fn naive_substitute(p: &Polynomial, args: &[Polynomial]) -> Polynomial {
    substitute_up_to(p, args, u64::MAX)
}

/// Like [`naive_substitute`], dropping terms above total degree `max_degree`
/// after every multiplication.
pub fn substitute_up_to(p: &Polynomial, args: &[Polynomial], max_degree: u64) -> Polynomial {
    let n = args[0].dim();
    let mut out = Polynomial::zero(n);
    for (alpha, c) in p.terms() {
        let mut t = Polynomial::constant(n, c.clone());
        for (j, &a) in alpha.exponents().iter().enumerate() {
            for _ in 0..a {
                t = (&t * &args[j]).truncate(max_degree);
            }
        }
        out = &out + &t;
    }
    out
}

pub fn naive_compose(f: &PolyMap, g: &PolyMap) -> PolyMap {
    PolyMap::new(
        f.components()
            .iter()
            .map(|p| naive_substitute(p, g.components()))
            .collect(),
    )
    .unwrap()
}

/// `P(lambda^{m_1} z_1, ..., lambda^{m_n} z_n) == lambda^k P(z)`, checked in
/// `n + 1` variables with `lambda` as the last one.
pub fn lambda_substitution_homogeneous(p: &Polynomial, m: &WeightVector, k: u32) -> bool {
    let n = p.dim();
    let lift = |alpha: &MultiIndex, extra: u32| {
        let mut e = alpha.exponents().to_vec();
        e.push(extra);
        MultiIndex::new(e)
    };
    let lambda = Polynomial::var(n + 1, n);
    let args: Vec<Polynomial> = (0..n)
        .map(|j| &Polynomial::var(n + 1, j) * &lambda.pow(m.as_slice()[j] as u32))
        .collect();
    let lifted = Polynomial::from_terms(n + 1, p.terms().map(|(a, c)| (lift(a, 0), c.clone())));
    let lhs = naive_substitute(&lifted, &args);
    let rhs = Polynomial::from_terms(n + 1, p.terms().map(|(a, c)| (lift(a, k), c.clone())));
    lhs == rhs
}

/// Compositional inverse of a map tangent to the identity, as a power series
/// truncated at total degree `max_degree`.
///
/// Writing `sigma = id + g` and `tau = id + h`, the identity `sigma ∘ tau = id`
/// reads `h = -g ∘ tau`. Since `g` has no terms below degree 2, the degree-`d`
/// part of `g ∘ tau` depends only on the parts of `tau` below degree `d`, so
/// `h` is determined one degree at a time.
pub fn power_series_inverse(sigma: &PolyMap, max_degree: u64) -> PolyMap {
    let n = sigma.dim();
    let g: Vec<Polynomial> = sigma
        .components()
        .iter()
        .enumerate()
        .map(|(k, p)| p - &Polynomial::var(n, k))
        .collect();
    let mut tau: Vec<Polynomial> = (0..n).map(|k| Polynomial::var(n, k)).collect();
    for d in 2..=max_degree {
        let composed: Vec<Polynomial> = g.iter().map(|gk| substitute_up_to(gk, &tau, d)).collect();
        for k in 0..n {
            let part = composed[k].homogeneous_part(d);
            tau[k] = &tau[k] - &part;
        }
    }
    PolyMap::new(tau).unwrap()
}

/// Block-diagonality straight from the weights: `L_ij = 0` whenever `m_i != m_j`.
pub fn weight_preserving(l: &LinearMap, m: &WeightVector) -> bool {
    let w = m.as_slice();
    (0..l.dim()).all(|i| (0..l.dim()).all(|j| w[i] == w[j] || l.get(i, j).is_zero()))
}

pub fn rational(a: i64, b: i64) -> Rational {
    Rational::new(a.into(), b.into())
}

pub fn is_identity_map(f: &PolyMap) -> bool {
    let n = f.dim();
    f.components()
        .iter()
        .enumerate()
        .all(|(k, p)| p.len() == 1 && p.coeff(&MultiIndex::unit(n, k)).is_one())
}

/// The fixed ten-vector set used by the round-trip and theorem checks.
pub fn test_set() -> Vec<WeightVector> {
    [
        vec![1, 1],
        vec![1, 2],
        vec![2, 3],
        vec![1, 1, 2],
        vec![1, 2, 2],
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 1, 2, 3],
        vec![1, 2, 3, 5],
        vec![1, 2, 3, 6],
    ]
    .iter()
    .map(|v| WeightVector::new(v).unwrap())
    .collect()
}
