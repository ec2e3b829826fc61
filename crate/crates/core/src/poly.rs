//! Sparse multivariate polynomials over `Q` and polynomial maps `Q^n -> Q^n`.
//!
//! A [`Polynomial`] keeps its terms in a `BTreeMap` keyed by exponent vector and
//! never stores a zero coefficient, so structural equality is mathematical
//! equality. The arithmetic operators on references panic on a dimension
//! mismatch; the `checked_*` methods report it as an error instead.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linear::LinearMap;
use crate::weights::{MultiIndex, WeightVector};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(MultiIndex::zero(n), c)
    }

    /// The coordinate function `z_{j+1}` (0-based `j`).
    pub fn var(n: usize, j: usize) -> Self {
        Self::monomial(MultiIndex::unit(n, j), Rational::one())
    }

    pub fn monomial(alpha: MultiIndex, c: Rational) -> Self {
        let n = alpha.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(alpha, c);
        }
        Polynomial { n, terms }
    }

    /// Sums the given terms. Panics if an exponent has the wrong length.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (alpha, c) in terms {
            assert_eq!(alpha.len(), n, "exponent length differs from dimension");
            p.add_term(alpha, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, alpha: MultiIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of their exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Rational {
        self.terms.get(alpha).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&MultiIndex::zero(self.n))
    }

    /// Maximum `|alpha|` over the stored terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(MultiIndex::degree).max().unwrap_or(0)
    }

    /// Whether every term has weighted degree `m . alpha == k`.
    pub fn is_m_homogeneous(&self, m: &WeightVector, k: u128) -> Result<bool> {
        self.check_weights(m)?;
        Ok(self.terms.keys().all(|alpha| alpha.weighted_degree(m) == k))
    }

    /// Splits the polynomial by weighted degree `m . alpha`.
    pub fn m_order_decomposition(&self, m: &WeightVector) -> Result<MOrderDecomposition> {
        self.check_weights(m)?;
        let mut parts: BTreeMap<u128, Polynomial> = BTreeMap::new();
        for (alpha, c) in &self.terms {
            parts
                .entry(alpha.weighted_degree(m))
                .or_insert_with(|| Polynomial::zero(self.n))
                .terms
                .insert(alpha.clone(), c.clone());
        }
        Ok(MOrderDecomposition { parts })
    }

    /// Whether the polynomial is `m`-homogeneous of order `m_i` (1-based `i`).
    pub fn is_i_resonant(&self, m: &WeightVector, i: usize) -> Result<bool> {
        let mi = m.weight(i)?;
        self.is_m_homogeneous(m, u128::from(mi))
    }

    fn check_weights(&self, m: &WeightVector) -> Result<()> {
        if m.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m.dim(),
            });
        }
        Ok(())
    }

    fn check_dim(&self, other: &Polynomial) -> Result<()> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_dim(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (alpha, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(alpha.exponents()) {
                if a > 0 {
                    t *= num_traits::pow(x.clone(), a as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `z_{j+1}` (0-based `j`).
    pub fn derivative(&self, j: usize) -> Polynomial {
        let e = MultiIndex::unit(self.n, j);
        let mut out = Polynomial::zero(self.n);
        for (alpha, c) in &self.terms {
            let a = alpha[j];
            if a > 0 {
                let lowered = alpha.checked_sub(&e).unwrap();
                out.terms.insert(lowered, c * Rational::from_integer(a.into()));
            }
        }
        out
    }

    /// The part of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u64) -> Polynomial {
        self.filter_terms(|alpha| alpha.degree() == d)
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u64) -> Polynomial {
        self.filter_terms(|alpha| alpha.degree() <= d)
    }

    fn filter_terms(&self, keep: impl Fn(&MultiIndex) -> bool) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| keep(a))
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    /// Indices (0-based) of variables occurring in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.n];
        for alpha in self.terms.keys() {
            for j in alpha.support() {
                used[j] = true;
            }
        }
        (0..self.n).filter(|&j| used[j]).collect()
    }

    /// `p(args_1, ..., args_n)`. All arguments must share one dimension, which
    /// becomes the dimension of the result.
    pub fn substitute(&self, args: &[Polynomial]) -> Result<Polynomial> {
        if args.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: args.len(),
            });
        }
        let target = args.first().map_or(0, Polynomial::dim);
        if let Some(bad) = args.iter().find(|a| a.n != target) {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: bad.n,
            });
        }
        let mut cache = PowerCache::new(args, target);
        Ok(self.substitute_cached(&mut cache))
    }

    /// Substitutes the same arguments into several polynomials, sharing powers.
    pub fn substitute_all(polys: &[Polynomial], args: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let n = args.len();
        if let Some(bad) = polys.iter().find(|p| p.n != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.n,
            });
        }
        let target = args.first().map_or(0, Polynomial::dim);
        if let Some(bad) = args.iter().find(|a| a.n != target) {
            return Err(Error::DimensionMismatch {
                expected: target,
                found: bad.n,
            });
        }
        let mut cache = PowerCache::new(args, target);
        Ok(polys.iter().map(|p| p.substitute_cached(&mut cache)).collect())
    }

    fn substitute_cached(&self, cache: &mut PowerCache<'_>) -> Polynomial {
        let terms: Vec<(&[u32], &Rational)> = self.terms.iter().map(|(a, c)| (a.exponents(), c)).collect();
        horner(&terms, 0, cache)
    }
}

/// Substitution grouped by the exponent of one variable at a time:
/// `p = sum_e z_j^e * p_e(z_{j+1}, ...)`, with the powers of the substituted
/// argument memoized.
fn horner(terms: &[(&[u32], &Rational)], j: usize, cache: &mut PowerCache<'_>) -> Polynomial {
    if j == cache.args.len() {
        let mut c = Rational::zero();
        for (_, v) in terms {
            c += *v;
        }
        return Polynomial::constant(cache.target, c);
    }
    let mut groups: BTreeMap<u32, Vec<(&[u32], &Rational)>> = BTreeMap::new();
    for &(e, c) in terms {
        groups.entry(e[j]).or_default().push((e, c));
    }
    let mut out = Polynomial::zero(cache.target);
    for (e, group) in groups {
        let inner = horner(&group, j + 1, cache);
        if inner.is_zero() {
            continue;
        }
        if e == 0 {
            out = &out + &inner;
        } else {
            let pw = cache.power(j, e);
            out = &out + &(&inner * pw);
        }
    }
    out
}

struct PowerCache<'a> {
    args: &'a [Polynomial],
    target: usize,
    // powers[j][k] = args[j]^(k+1)
    powers: Vec<Vec<Polynomial>>,
}

impl<'a> PowerCache<'a> {
    fn new(args: &'a [Polynomial], target: usize) -> Self {
        PowerCache {
            args,
            target,
            powers: vec![Vec::new(); args.len()],
        }
    }

    fn power(&mut self, j: usize, e: u32) -> &Polynomial {
        let e = e as usize;
        while self.powers[j].len() < e {
            let next = match self.powers[j].last() {
                None => self.args[j].clone(),
                Some(last) => last * &self.args[j],
            };
            self.powers[j].push(next);
        }
        &self.powers[j][e - 1]
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimensions differ");
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (a, c) in &small.terms {
            big.add_term(a.clone(), c.clone());
        }
        big
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimensions differ");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomial dimensions differ");
        let mut acc: HashMap<MultiIndex, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let prod = c * d;
                match acc.entry(a.add(b)) {
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    Entry::Occupied(mut e) => *e.get_mut() += prod,
                }
            }
        }
        Polynomial {
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// A polynomial split into its `m`-homogeneous parts, keyed by `m`-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MOrderDecomposition {
    pub parts: BTreeMap<u128, Polynomial>,
}

impl MOrderDecomposition {
    /// Sum of the parts. `n` is only used when there are no parts.
    pub fn recombine(&self, n: usize) -> Polynomial {
        self.parts.values().fold(Polynomial::zero(n), |acc, p| &acc + p)
    }
}

/// A polynomial map `z -> (f_1(z), ..., f_n(z))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    components: Vec<Polynomial>,
}

impl PolyMap {
    /// Requires exactly `n` components, each in `n` variables.
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|p| p.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        Ok(PolyMap { components })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            components: (0..n).map(|j| Polynomial::var(n, j)).collect(),
        }
    }

    /// `z -> L z`.
    pub fn from_linear(l: &LinearMap) -> Self {
        let n = l.dim();
        let components = (0..n)
            .map(|i| Polynomial::from_terms(n, (0..n).map(|j| (MultiIndex::unit(n, j), l.get(i, j).clone()))))
            .collect();
        PolyMap { components }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    /// `self ∘ inner`, i.e. `z -> self(inner(z))`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: inner.dim(),
            });
        }
        let mut cache = PowerCache::new(&inner.components, inner.dim());
        let components = self
            .components
            .iter()
            .map(|p| p.substitute_cached(&mut cache))
            .collect();
        Ok(PolyMap { components })
    }

    /// Maximum total degree over the components.
    pub fn total_degree(&self) -> u64 {
        self.components.iter().map(Polynomial::total_degree).max().unwrap_or(0)
    }

    /// Matrix of the degree-one coefficients, `Jac_f(0)`.
    pub fn linear_part(&self) -> Result<LinearMap> {
        let n = self.dim();
        if let Some(i) = self.components.iter().position(|p| !p.constant_term().is_zero()) {
            return Err(Error::DoesNotFixOrigin { component: i + 1 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for p in &self.components {
            for j in 0..n {
                entries.push(p.coeff(&MultiIndex::unit(n, j)));
            }
        }
        LinearMap::new(n, entries)
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity(self.dim())
    }

    pub fn checked_sub(&self, other: &PolyMap) -> Result<PolyMap> {
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(PolyMap {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|p| p.evaluate(point)).collect()
    }
}
