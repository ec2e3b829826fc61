//! Square matrices over `Q` and exact linear system solving.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Rational;

/// An `n x n` rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    n: usize,
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        Ok(LinearMap { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(LinearMap {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        LinearMap { n, entries }
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut entries = vec![Rational::zero(); n * n];
        for (i, v) in d.iter().enumerate() {
            entries[i * n + i] = v.clone();
        }
        LinearMap { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn mul(&self, rhs: &LinearMap) -> Result<LinearMap> {
        if rhs.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: rhs.n,
            });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
                entries.push(acc);
            }
        }
        Ok(LinearMap { n, entries })
    }

    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut a: Vec<Vec<Rational>> = self.rows().map(<[Rational]>::to_vec).collect();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                let (upper, lower) = a.split_at_mut(r);
                for (x, y) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                    *x -= &factor * y;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<LinearMap> {
        let n = self.n;
        let mut a: Vec<Vec<Rational>> = self.rows().map(<[Rational]>::to_vec).collect();
        let mut inv: Vec<Vec<Rational>> = LinearMap::identity(n).rows().map(<[Rational]>::to_vec).collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularLinearMap)?;
            a.swap(piv, col);
            inv.swap(piv, col);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    a[r][c] -= da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        LinearMap::from_rows(inv)
    }
}

/// Outcome of [`solve_linear_system`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    /// No solution exists.
    Inconsistent,
    /// A solution with every free unknown set to zero; `free` counts them.
    Solved { values: Vec<Rational>, free: usize },
}

/// Solves `A x = b` exactly.
///
/// Rows are scaled to integer form and reduced to row echelon form by
/// fraction-free elimination: each update is
/// `row <- (p/g) row - (a/g) pivot_row` with `g = gcd(p, a)`, followed by
/// division by the row content. Back substitution is done in `Q`. Free
/// unknowns are set to zero, which gives a solution of minimal support among
/// those sharing the pivot columns.
pub fn solve_linear_system(a: &[Vec<Rational>], b: &[Rational], unknowns: usize) -> LinearSolution {
    assert_eq!(a.len(), b.len(), "row count differs from right-hand side length");
    let mut rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), unknowns, "row length differs from unknown count");
            integer_row(row.iter().chain(std::iter::once(rhs)))
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..unknowns {
        let Some(piv) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].abs())
        else {
            continue;
        };
        rows.swap(rank, piv);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = &pivot_row[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = p.gcd(&row[col]);
            let row_m = p / &g;
            let piv_m = &row[col] / &g;
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &*x * &row_m - y * &piv_m;
            }
            normalize(row);
        }
        pivots.push(col);
        rank += 1;
    }

    if rows[rank..].iter().any(|r| !r[unknowns].is_zero()) {
        return LinearSolution::Inconsistent;
    }

    let mut values = vec![Rational::zero(); unknowns];
    for (r, &col) in pivots.iter().enumerate().rev() {
        let row = &rows[r];
        let mut acc = Rational::from_integer(row[unknowns].clone());
        for c in col + 1..unknowns {
            if !row[c].is_zero() && !values[c].is_zero() {
                acc -= Rational::from_integer(row[c].clone()) * &values[c];
            }
        }
        values[col] = acc / Rational::from_integer(row[col].clone());
    }
    LinearSolution::Solved {
        values,
        free: unknowns - rank,
    }
}

fn integer_row<'a>(entries: impl Iterator<Item = &'a Rational> + Clone) -> Vec<BigInt> {
    let lcm = entries.clone().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    let mut row: Vec<BigInt> = entries.map(|v| v.numer() * (&lcm / v.denom())).collect();
    normalize(&mut row);
    row
}

fn normalize(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}
