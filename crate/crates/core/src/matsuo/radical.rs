//! The radical of the form and the non-degenerate quotient.

use num_traits::Zero;
use rayon::prelude::*;

use super::{AlgebraVector, MatsuoAlgebra, Terms};
use crate::linalg::{self, Echelon, Matrix};
use crate::rational::Rational;
use crate::{Error, Result};

/// Basis of `{v : (v | w) = 0 for all w}` together with its echelon form,
/// which is used to reduce vectors modulo the radical.
#[derive(Clone, Debug)]
pub struct Radical {
    /// Primitive integer vectors, one per free column of the Gram matrix.
    pub basis: Vec<AlgebraVector>,
    echelon: Echelon,
}

impl Radical {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates that survive reduction: the complement of the pivots of
    /// the radical basis. Their axes span a complement of the radical.
    pub fn representatives(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.echelon.cols];
        for &p in &self.echelon.pivots {
            is_pivot[p] = true;
        }
        (0..self.echelon.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Canonical representative of `v + R`.
    pub fn reduce(&self, v: &mut AlgebraVector) {
        self.echelon.reduce(&mut v.0);
    }
}

/// Exact kernel of the Gram matrix.
pub fn gram_radical(algebra: &MatsuoAlgebra) -> Radical {
    let gram = algebra.gram_matrix();
    let basis: Vec<AlgebraVector> = linalg::kernel(&gram).into_iter().map(AlgebraVector).collect();
    let rows = Matrix::from_rows(basis.iter().map(|v| v.0.clone()).collect())
        .unwrap_or_else(|_| Matrix::zeros(0, algebra.dim()));
    let echelon = if basis.is_empty() {
        linalg::echelon(&Matrix::zeros(0, algebra.dim()))
    } else {
        linalg::echelon(&rows)
    };
    Radical { basis, echelon }
}

/// `B / R` in the basis given by the representative axes.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    algebra: MatsuoAlgebra,
    radical: Radical,
    representatives: Vec<usize>,
    position: Vec<Option<usize>>,
    gram: Matrix,
}

/// Builds the quotient by `radical`, after checking that the radical is an
/// ideal (`x^i r` lies in the radical for every axis and basis vector) and
/// that the induced form is non-degenerate.
pub fn quotient(algebra: &MatsuoAlgebra, radical: &Radical) -> Result<QuotientAlgebra> {
    let n = algebra.dim();
    let gram = algebra.gram_matrix();
    radical.basis.par_iter().enumerate().try_for_each(|(r, v)| -> Result<()> {
        for axis in 0..n {
            let w = algebra.multiply_axis(axis, v)?;
            if w.is_zero() {
                continue;
            }
            if gram.apply(&w.0).iter().any(|x| !x.is_zero()) {
                return Err(Error::RadicalNotIdeal { axis, vector: r });
            }
        }
        Ok(())
    })?;

    let representatives = radical.representatives();
    let mut position = vec![None; n];
    for (k, &c) in representatives.iter().enumerate() {
        position[c] = Some(k);
    }
    let q = representatives.len();
    let mut qgram = Matrix::zeros(q, q);
    for (a, &i) in representatives.iter().enumerate() {
        for (b, &j) in representatives.iter().enumerate() {
            let v = gram.get(i, j);
            if !v.is_zero() {
                qgram.set(a, b, v.clone());
            }
        }
    }
    if linalg::rank(&qgram) != q {
        return Err(Error::internal("induced form on the quotient is degenerate"));
    }
    Ok(QuotientAlgebra {
        algebra: algebra.clone(),
        radical: radical.clone(),
        representatives,
        position,
        gram: qgram,
    })
}

impl QuotientAlgebra {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Axes whose images form the quotient basis.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn gram_matrix(&self) -> &Matrix {
        &self.gram
    }

    /// Image of a vector of `B` in quotient coordinates.
    pub fn project(&self, v: &AlgebraVector) -> Vec<Rational> {
        let mut w = v.clone();
        self.radical.reduce(&mut w);
        let mut out = vec![Rational::zero(); self.dim()];
        for (c, x) in w.0.into_iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match self.position[c] {
                Some(k) => out[k] = x,
                None => unreachable!("reduction leaves only representative coordinates"),
            }
        }
        out
    }

    /// Product of quotient basis elements `a` and `b`, as sparse terms.
    pub fn basis_product(&self, a: usize, b: usize) -> Terms {
        let (i, j) = (self.representatives[a], self.representatives[b]);
        let terms = self.algebra.basis_product(i, j);
        let v = AlgebraVector::from_terms(self.algebra.dim(), &terms);
        self.project(&v).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Product of two vectors given in quotient coordinates.
    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        if u.len() != self.dim() || v.len() != self.dim() {
            return Err(Error::Structure("vector length does not match the quotient".into()));
        }
        let lift = |x: &[Rational]| {
            let mut w = AlgebraVector::zero(self.algebra.dim());
            for (k, c) in x.iter().enumerate() {
                w.0[self.representatives[k]] = c.clone();
            }
            w
        };
        Ok(self.project(&self.algebra.multiply(&lift(u), &lift(v))?))
    }

    pub fn form(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let gv = self.gram.apply(v);
        u.iter().zip(&gv).map(|(a, b)| a * b).sum()
    }
}
