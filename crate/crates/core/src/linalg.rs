//! Exact linear algebra over the rationals.
//!
//! Elimination is fraction-free: every row is first cleared to integers,
//! then reduced with the Bareiss form of Gauss-Jordan elimination, in which
//! each update `(p * a_ij - a_ic * a_rj) / prev` divides exactly. Pivots are
//! chosen as the first row with a nonzero entry in the leftmost remaining
//! column, so results are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, Rational};
use crate::{Error, Result};

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Structure("ragged matrix rows".into()));
        }
        Ok(Self { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Rows scaled to primitive integer vectors; the row space is unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let d = common_denominator(row);
                row.iter().map(|x| (x * Rational::from_integer(d.clone())).to_integer()).collect()
            })
            .collect()
    }
}

/// Reduced row-echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Nonzero rows of the RREF, each with a 1 in its pivot column.
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel basis, one vector per free column, each cleared to a primitive
    /// integer vector with a positive entry at its free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                primitive(v)
            })
            .collect()
    }

    /// Reduces `v` modulo the row space: clears every pivot coordinate.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }
}

/// Scales `v` to a primitive integer vector, keeping its direction.
pub fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let d = Rational::from_integer(common_denominator(&v));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &d).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Fraction-free Gauss-Jordan elimination to reduced row-echelon form.
pub fn echelon(m: &Matrix) -> Echelon {
    let mut a = m.integer_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[c].clone();
            for j in 0..cols {
                let updated = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!(updated.is_multiple_of(&prev));
                row[j] = updated / &prev;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    let rows = a
        .into_iter()
        .take(pivots.len())
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = Rational::from_integer(row[p].clone());
            row.into_iter().map(|x| Rational::from_integer(x) / &lead).collect()
        })
        .collect();
    Echelon { rows, pivots, cols }
}

pub fn rank(m: &Matrix) -> usize {
    echelon(m).rank()
}

pub fn kernel(m: &Matrix) -> Vec<Vec<Rational>> {
    echelon(m).kernel()
}

/// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`, computed as
/// the Bareiss pivots of the unpermuted elimination. Stops (returning the
/// minors found so far plus a zero) as soon as a minor vanishes.
pub fn leading_minors(m: &Matrix) -> Vec<Rational> {
    let n = m.rows().min(m.cols());
    // Clear all denominators with one global scale so minors stay comparable.
    let d = common_denominator(m.data.iter());
    let scale = Rational::from_integer(d.clone());
    let mut a: Vec<Vec<BigInt>> =
        (0..m.rows()).map(|r| m.row(r).iter().map(|x| (x * &scale).to_integer()).collect()).collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        let mut d_pow = BigInt::one();
        for _ in 0..=k {
            d_pow *= &d;
        }
        minors.push(Rational::new(pivot.clone(), d_pow));
        if pivot.is_zero() {
            break;
        }
        let pivot_row = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            let factor = row[k].clone();
            for j in k..m.cols() {
                row[j] = (&pivot * &row[j] - &factor * &pivot_row[j]) / &prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Whether the symmetric matrix `m` is positive definite (all leading
/// principal minors positive).
pub fn is_positive_definite(m: &Matrix) -> bool {
    let minors = leading_minors(m);
    minors.len() == m.rows() && minors.iter().all(|x| x.is_positive())
}
