//! Eigenstructure of `ad x^i` and the Miyamoto involutions.
//!
//! For an axis `x^i` with neighbours `N(i)` (which pair up as `{j, i∘j}`):
//!
//! ```text
//! 2     : x^i
//! alpha : x^j - x^{i∘j}                          one per pair in N(i)
//! 0     : x^j                   (j not adjacent, j != i)
//!         x^j + x^{i∘j} - alpha/2 x^i           one per pair in N(i)
//! ```
//!
//! These `n` vectors are independent, so when `alpha` is neither 0 nor 2
//! `ad x^i` is diagonalisable and the three families are exact eigenbases.

use num_traits::Zero;
use serde::Serialize;

use super::{AlgebraVector, MatsuoAlgebra};
use crate::linalg::{self, Matrix};
use crate::rational::{format_rational, int, Rational};
use crate::{Error, Result};

/// Matrix of `v -> x^i v` (column `j` holds `x^i x^j`).
pub fn adjoint_matrix(algebra: &MatsuoAlgebra, i: usize) -> Matrix {
    let n = algebra.dim();
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        for (k, c) in algebra.basis_product(i, j) {
            m.set(k, j, c);
        }
    }
    m
}

/// `dim ker(ad x^i - lambda)`, by exact elimination.
pub fn eigenspace_dimension(algebra: &MatsuoAlgebra, i: usize, lambda: &Rational) -> usize {
    let mut m = adjoint_matrix(algebra, i);
    for d in 0..algebra.dim() {
        let v = m.get(d, d) - lambda;
        m.set(d, d, v);
    }
    algebra.dim() - linalg::rank(&m)
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub axis: usize,
    pub alpha: Rational,
    pub two: Vec<AlgebraVector>,
    pub alpha_space: Vec<AlgebraVector>,
    pub zero_space: Vec<AlgebraVector>,
}

impl Spectrum {
    pub fn dims(&self) -> SpectrumDims {
        SpectrumDims { two: self.two.len(), alpha: self.alpha_space.len(), zero: self.zero_space.len() }
    }

    /// Eigenvalues that actually occur, in the order 2, 0, alpha.
    pub fn eigenvalues(&self) -> Vec<Rational> {
        let mut out = vec![int(2)];
        if !self.zero_space.is_empty() {
            out.push(int(0));
        }
        if !self.alpha_space.is_empty() {
            out.push(self.alpha.clone());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumDims {
    pub two: usize,
    pub alpha: usize,
    pub zero: usize,
}

/// Neighbour pairs `(j, i∘j)` with `j < i∘j`.
fn neighbour_pairs(algebra: &MatsuoAlgebra, i: usize) -> Result<Vec<(usize, usize)>> {
    let g = algebra.graph();
    let mut pairs = Vec::new();
    for &j in g.neighbors(i) {
        let k = g.circ(i, j).filter(|&k| g.circ(i, k) == Some(j));
        match k {
            Some(k) if j < k => pairs.push((j, k)),
            Some(_) => {}
            None => return Err(Error::internal(format!("neighbour {j} of {i} has no partner"))),
        }
    }
    Ok(pairs)
}

/// Eigenbases of `ad x^i`, each vector verified by multiplication.
pub fn adjoint_spectrum(algebra: &MatsuoAlgebra, i: usize) -> Result<Spectrum> {
    let alpha = algebra.alpha().clone();
    if alpha.is_zero() || alpha == int(2) {
        return Err(Error::DegenerateAlpha { alpha: format_rational(&alpha) });
    }
    let n = algebra.dim();
    if i >= n {
        return Err(Error::Structure(format!("axis {i} out of range 0..{n}")));
    }
    let g = algebra.graph();
    let pairs = neighbour_pairs(algebra, i)?;
    let half_alpha = &alpha / int(2);

    let two = vec![AlgebraVector::axis(n, i)];
    let alpha_space: Vec<AlgebraVector> =
        pairs.iter().map(|&(j, k)| AlgebraVector::from_terms(n, &[(j, int(1)), (k, int(-1))])).collect();
    let mut zero_space: Vec<AlgebraVector> =
        (0..n).filter(|&j| j != i && !g.adjacent(i, j)).map(|j| AlgebraVector::axis(n, j)).collect();
    zero_space.extend(
        pairs.iter().map(|&(j, k)| {
            AlgebraVector::from_terms(n, &[(j, int(1)), (k, int(1)), (i, -half_alpha.clone())])
        }),
    );

    for (lambda, space) in [(int(2), &two), (alpha.clone(), &alpha_space), (int(0), &zero_space)] {
        for v in space {
            if algebra.multiply_axis(i, v)? != v.scaled(&lambda) {
                return Err(Error::internal(format!(
                    "eigenvector for {} of ad x^{i} fails its equation",
                    format_rational(&lambda)
                )));
            }
        }
    }
    // Every vector above has its own private coordinate (i, j or the
    // smaller of a pair), so the family is independent; the count pins the
    // dimensions.
    if two.len() + alpha_space.len() + zero_space.len() != n {
        return Err(Error::internal(format!("eigenvectors of ad x^{i} do not span")));
    }
    Ok(Spectrum { axis: i, alpha, two, alpha_space, zero_space })
}

/// `sigma_i`: the basis permutation `x^j -> x^{i∘j}` (identity off the
/// neighbourhood of `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MiyamotoMap {
    pub axis: usize,
    pub permutation: Vec<usize>,
}

impl MiyamotoMap {
    pub fn apply(&self, v: &AlgebraVector) -> AlgebraVector {
        v.permuted(&self.permutation)
    }

    pub fn is_involution(&self) -> bool {
        self.permutation.iter().enumerate().all(|(j, &k)| self.permutation[k] == j)
    }

    /// Number of cycles, i.e. the dimension of the fixed space.
    pub fn fixed_dimension(&self) -> usize {
        self.permutation.iter().enumerate().filter(|&(j, &k)| j <= k).count()
    }
}

/// Builds `sigma_i` and verifies it: an involution, `+1` on the 2- and
/// 0-eigenspaces and `-1` on the alpha-eigenspace, an automorphism on all
/// basis pairs and an isometry, with fixed space `R x^i + ker(ad x^i)`.
pub fn miyamoto(algebra: &MatsuoAlgebra, i: usize) -> Result<MiyamotoMap> {
    let n = algebra.dim();
    let g = algebra.graph();
    let map = MiyamotoMap { axis: i, permutation: (0..n).map(|j| g.conjugate(i, j)).collect() };
    let fail = |what: &str| Err(Error::internal(format!("sigma_{i}: {what}")));
    if !map.is_involution() {
        return fail("not an involution");
    }
    let spectrum = adjoint_spectrum(algebra, i)?;
    let fixed = spectrum.two.iter().chain(&spectrum.zero_space);
    if !fixed.clone().all(|v| map.apply(v) == *v) {
        return fail("moves a vector of eigenvalue 2 or 0");
    }
    if !spectrum.alpha_space.iter().all(|v| map.apply(v) == v.scaled(&int(-1))) {
        return fail("does not negate the alpha-eigenspace");
    }
    if map.fixed_dimension() != spectrum.two.len() + spectrum.zero_space.len() {
        return fail("fixed space differs from R x^i + ker(ad x^i)");
    }
    // With alpha != 0 the product and the form are functions of the ∘ table
    // and of adjacency, so comparing those on all pairs is exact.
    let p = &map.permutation;
    for a in 0..n {
        for b in a + 1..n {
            if g.circ(p[a], p[b]) != g.circ(a, b).map(|k| p[k]) {
                return fail("not multiplicative");
            }
            if g.adjacent(a, b) != g.adjacent(p[a], p[b]) {
                return fail("not an isometry");
            }
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::super::build_algebra;
    use super::super::tests::{symmetric_graph, triangle};
    use super::*;
    use crate::fischer::FischerGraph;
    use crate::rational::rat;

    #[test]
    fn s3_axis_zero() {
        let a = build_algebra(&triangle(), rat(1, 2), rat(1, 2));
        let s = adjoint_spectrum(&a, 0).unwrap();
        assert_eq!(s.dims(), SpectrumDims { two: 1, alpha: 1, zero: 1 });
        assert_eq!(s.alpha_space[0].0, vec![int(0), int(1), int(-1)]);
        assert_eq!(s.eigenvalues(), vec![int(2), int(0), rat(1, 2)]);
    }

    #[test]
    fn isolated_axis() {
        let g = FischerGraph::from_circ_table(2, &[]).unwrap();
        let a = build_algebra(&g, rat(1, 2), rat(1, 2));
        let s = adjoint_spectrum(&a, 0).unwrap();
        assert_eq!(s.dims(), SpectrumDims { two: 1, alpha: 0, zero: 1 });
        assert_eq!(s.eigenvalues(), vec![int(2), int(0)]);
    }

    #[test]
    fn degenerate_alpha_rejected() {
        for al in [int(0), int(2)] {
            let a = build_algebra(&triangle(), al, rat(1, 2));
            assert!(matches!(adjoint_spectrum(&a, 0), Err(Error::DegenerateAlpha { .. })));
        }
    }

    #[test]
    fn elimination_agrees_with_eigenbases() {
        for n in 3..=6 {
            let g = symmetric_graph(n);
            for al in [rat(1, 2), rat(2, 5), int(-3)] {
                let a = build_algebra(&g, al.clone(), rat(1, 2));
                let s = adjoint_spectrum(&a, 0).unwrap();
                let d = s.dims();
                assert_eq!(eigenspace_dimension(&a, 0, &int(2)), d.two);
                assert_eq!(eigenspace_dimension(&a, 0, &al), d.alpha);
                assert_eq!(eigenspace_dimension(&a, 0, &int(0)), d.zero);
                assert_eq!(d.alpha * 2, g.degree(0));
            }
        }
    }

    #[test]
    fn miyamoto_on_s3() {
        let a = build_algebra(&triangle(), rat(1, 2), rat(1, 2));
        let m = miyamoto(&a, 0).unwrap();
        assert_eq!(m.permutation, vec![0, 2, 1]);
        assert_eq!(m.fixed_dimension(), 2);
    }

    #[test]
    fn miyamoto_on_s5_all_axes() {
        let a = build_algebra(&symmetric_graph(5), rat(2, 5), rat(4, 5));
        for i in 0..10 {
            let m = miyamoto(&a, i).unwrap();
            assert!(m.is_involution());
            assert_eq!(m.fixed_dimension(), 10 - 6 / 2);
        }
    }
}
