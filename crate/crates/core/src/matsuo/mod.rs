//! Matsuo algebras `B(alpha, beta)` over exact rationals.
//!
//! The basis is `{x^i : i in I}` with product and form
//!
//! ```text
//! x^i x^j = 2 x^i                              (i = j)
//!         = alpha/2 (x^i + x^j - x^{i∘j})      (i ~ j)
//!         = 0                                  otherwise
//! (x^i | x^j) = beta/2 | alpha beta/8 | 0      in the same three cases.
//! ```
//!
//! `x^i / 2` is an idempotent and the form is invariant: `(uv | w) = (u | vw)`.

mod radical;
mod sigma;
mod spectrum;

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::fischer::FischerGraph;
use crate::linalg::Matrix;
use crate::rational::{common_denominator, int, rat, Rational};
use crate::{Error, Result};

pub use radical::{gram_radical, quotient, QuotientAlgebra, Radical};
pub use sigma::{pair_type, sigma_homomorphism, sigma_image, PairType, SigmaHomomorphism};
pub use spectrum::{
    adjoint_matrix, adjoint_spectrum, eigenspace_dimension, miyamoto, MiyamotoMap, Spectrum, SpectrumDims,
};

/// Default cap on the number of axes for which an algebra is built.
pub const DEFAULT_MAX_AXES: usize = 512;

/// A vector of `B(alpha, beta)` in the axis basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraVector(pub Vec<Rational>);

impl AlgebraVector {
    pub fn zero(dim: usize) -> Self {
        Self(vec![Rational::zero(); dim])
    }

    pub fn axis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = int(1);
        v
    }

    /// `sum_k c_k x^{i_k}`.
    pub fn from_terms(dim: usize, terms: &[(usize, Rational)]) -> Self {
        let mut v = Self::zero(dim);
        for (i, c) in terms {
            v.0[*i] += c;
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Relabels coordinates: `x^j -> x^{perm[j]}`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.dim());
        for (j, c) in self.0.iter().enumerate() {
            out.0[perm[j]] = c.clone();
        }
        out
    }

    fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

/// A basis product: at most three `(index, coefficient)` terms, sorted by index.
pub type Terms = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
pub struct MatsuoAlgebra {
    graph: FischerGraph,
    alpha: Rational,
    beta: Rational,
    half_alpha: Rational,
    gram_diagonal: Rational,
    gram_adjacent: Rational,
}

/// Builds `B(alpha, beta)` over the Fischer graph `graph`. Any rational
/// parameters are accepted; degenerate values only matter for the spectral
/// routines.
pub fn build_algebra(graph: &FischerGraph, alpha: Rational, beta: Rational) -> MatsuoAlgebra {
    MatsuoAlgebra {
        graph: graph.clone(),
        half_alpha: &alpha / int(2),
        gram_diagonal: &beta / int(2),
        gram_adjacent: &alpha * &beta / int(8),
        alpha,
        beta,
    }
}

impl MatsuoAlgebra {
    pub fn dim(&self) -> usize {
        self.graph.len()
    }

    pub fn graph(&self) -> &FischerGraph {
        &self.graph
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `x^i x^j` as sparse terms.
    pub fn basis_product(&self, i: usize, j: usize) -> Terms {
        if i == j {
            return vec![(i, int(2))];
        }
        match self.graph.circ(i, j) {
            Some(k) => {
                let mut terms = vec![
                    (i, self.half_alpha.clone()),
                    (j, self.half_alpha.clone()),
                    (k, -self.half_alpha.clone()),
                ];
                terms.sort_by_key(|t| t.0);
                terms.retain(|t| !t.1.is_zero());
                terms
            }
            None => Vec::new(),
        }
    }

    /// `(x^i | x^j)`.
    pub fn gram_entry(&self, i: usize, j: usize) -> Rational {
        if i == j {
            self.gram_diagonal.clone()
        } else if self.graph.adjacent(i, j) {
            self.gram_adjacent.clone()
        } else {
            Rational::zero()
        }
    }

    pub fn gram_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = self.gram_entry(i, j);
                if !v.is_zero() {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    fn check_dim(&self, v: &AlgebraVector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(Error::Structure(format!(
                "vector of length {} in an algebra of dimension {}",
                v.dim(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// Bilinear extension of the basis product.
    pub fn multiply(&self, u: &AlgebraVector, v: &AlgebraVector) -> Result<AlgebraVector> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let mut out = AlgebraVector::zero(self.dim());
        let v_support: Vec<(usize, &Rational)> = v.support().collect();
        for (i, a) in u.support() {
            for &(j, b) in &v_support {
                if i == j {
                    out.0[i] += a * b * int(2);
                } else if let Some(k) = self.graph.circ(i, j) {
                    let h = a * b * &self.half_alpha;
                    out.0[i] += &h;
                    out.0[j] += &h;
                    out.0[k] -= h;
                }
            }
        }
        Ok(out)
    }

    /// `x^i v`, the adjoint action of an axis.
    pub fn multiply_axis(&self, i: usize, v: &AlgebraVector) -> Result<AlgebraVector> {
        self.multiply(&AlgebraVector::axis(self.dim(), i), v)
    }

    pub fn form(&self, u: &AlgebraVector, v: &AlgebraVector) -> Result<Rational> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let mut acc = Rational::zero();
        let v_support: Vec<(usize, &Rational)> = v.support().collect();
        for (i, a) in u.support() {
            for &(j, b) in &v_support {
                let g = self.gram_entry(i, j);
                if !g.is_zero() {
                    acc += a * b * g;
                }
            }
        }
        Ok(acc)
    }

    /// `(x^a x^b | x^c)` from the sparse tables.
    fn triple_form(&self, a: usize, b: usize, c: usize) -> Rational {
        self.basis_product(a, b).into_iter().map(|(k, coef)| coef * self.gram_entry(k, c)).sum()
    }

    /// The invariance check on all basis triples with denominators cleared,
    /// so that it runs in checked `i128`. `None` on overflow.
    fn invariant_scaled(&self) -> Option<bool> {
        let n = self.dim();
        let d1 = Rational::from_integer(common_denominator([&self.half_alpha]));
        let d2 = Rational::from_integer(common_denominator([&self.gram_diagonal, &self.gram_adjacent]));
        let scaled = |x: &Rational, d: &Rational| (x * d).to_integer().to_i128();
        let (two, h) = (scaled(&int(2), &d1)?, scaled(&self.half_alpha, &d1)?);
        let (gd, ga) = (scaled(&self.gram_diagonal, &d2)?, scaled(&self.gram_adjacent, &d2)?);
        let g = |i: usize, j: usize| {
            if i == j {
                gd
            } else if self.graph.adjacent(i, j) {
                ga
            } else {
                0
            }
        };
        // (x^a x^b | x^c) for the sparse product of x^a and x^b.
        let lhs = |a: usize, b: usize, c: usize| -> Option<i128> {
            if a == b {
                return two.checked_mul(g(a, c));
            }
            let Some(k) = self.graph.circ(a, b) else { return Some(0) };
            h.checked_mul(g(a, c).checked_add(g(b, c))?.checked_sub(g(k, c))?)
        };
        (0..n)
            .into_par_iter()
            .map(|a| {
                for b in 0..n {
                    for c in 0..n {
                        if lhs(a, b, c)? != lhs(b, c, a)? {
                            return Some(false);
                        }
                    }
                }
                Some(true)
            })
            .collect::<Option<Vec<bool>>>()
            .map(|v| v.into_iter().all(|x| x))
    }

    /// Exhaustive check of the algebra axioms on basis elements:
    /// commutativity, symmetry of the form and invariance
    /// `(x^a x^b | x^c) = (x^a | x^b x^c)`.
    pub fn check_axioms(&self) -> AxiomCheck {
        let n = self.dim();
        let commutative = (0..n)
            .into_par_iter()
            .all(|a| (a..n).all(|b| self.basis_product(a, b) == self.basis_product(b, a)));
        let symmetric_form = self.gram_matrix().is_symmetric();
        let invariant = self.invariant_scaled().unwrap_or_else(|| {
            (0..n).into_par_iter().all(|a| {
                (0..n).all(|b| (0..n).all(|c| self.triple_form(a, b, c) == self.triple_form(b, c, a)))
            })
        });
        let idempotents = (0..n).all(|i| {
            let half = AlgebraVector::axis(n, i).scaled(&rat(1, 2));
            self.multiply(&half, &half).map(|p| p == half).unwrap_or(false)
                && self.gram_entry(i, i) == self.gram_diagonal
        });
        AxiomCheck { dim: n, commutative, symmetric_form, invariant, idempotents }
    }

    /// `omega = 4/(k alpha + 4) sum_{i in C} x^i` for a connected component
    /// `C` of valency `k`, checked to satisfy `omega x^i = 2 x^i` and
    /// `(omega | x^i) = beta/2`. `None` when `k alpha + 4 = 0`.
    pub fn unity(&self, component: &[usize]) -> Result<Option<AlgebraVector>> {
        let k = self.graph.valency(component)?;
        let denom = int(k as i64) * &self.alpha + int(4);
        if denom.is_zero() {
            return Ok(None);
        }
        let scale = int(4) / denom;
        let n = self.dim();
        let mut omega = AlgebraVector::zero(n);
        for &i in component {
            omega.0[i] = scale.clone();
        }
        for &i in component {
            let xi = AlgebraVector::axis(n, i);
            if self.multiply(&omega, &xi)? != xi.scaled(&int(2)) {
                return Err(Error::internal(format!("omega x^{i} != 2 x^{i}")));
            }
            if self.form(&omega, &xi)? != self.gram_diagonal {
                return Err(Error::internal(format!("(omega | x^{i}) != beta/2")));
            }
        }
        let half = omega.scaled(&rat(1, 2));
        if self.multiply(&half, &half)? != half {
            return Err(Error::internal("omega/2 is not idempotent"));
        }
        Ok(Some(omega))
    }

    /// Leading principal minors of the Gram matrix; all positive iff the form
    /// is positive definite.
    pub fn positive_definite(&self) -> bool {
        crate::linalg::is_positive_definite(&self.gram_matrix())
    }

    /// Structure constants as rows `(i, j, k, c)` meaning `x^i x^j` has
    /// coefficient `c` at `x^k`, for `i <= j`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, k, c));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub dim: usize,
    pub commutative: bool,
    pub symmetric_form: bool,
    pub invariant: bool,
    pub idempotents: bool,
}

impl AxiomCheck {
    pub fn all_hold(&self) -> bool {
        self.commutative && self.symmetric_form && self.invariant && self.idempotents
    }
}
