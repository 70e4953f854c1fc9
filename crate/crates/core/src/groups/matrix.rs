use serde::{Deserialize, Serialize};

use super::GroupElement;
use crate::{Error, Result};

/// A square matrix over the prime field F2 or F3, acting on column vectors.
///
/// Entries are stored row-major as residues in `[0, p)`; the derived ordering
/// compares `(p, dim, entries)` lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct FpMatrix {
    p: u8,
    dim: u8,
    entries: Box<[u8]>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    p: u8,
    dim: u8,
    entries: Vec<u8>,
}

impl FpMatrix {
    pub const MAX_DIM: usize = 16;

    pub fn new(p: u8, dim: usize, entries: Vec<u8>) -> Result<Self> {
        if p != 2 && p != 3 {
            return Err(Error::Structure(format!("unsupported modulus {p}")));
        }
        if dim == 0 || dim > Self::MAX_DIM || entries.len() != dim * dim {
            return Err(Error::Structure(format!(
                "{} entries do not form a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|&e| e >= p) {
            return Err(Error::Structure(format!("entries not reduced mod {p}")));
        }
        Ok(Self { p, dim: dim as u8, entries: entries.into_boxed_slice() })
    }

    /// Builds `I + u w^T`, reducing the outer product mod `p`.
    pub fn identity_plus_outer(p: u8, u: &[u8], w: &[u8]) -> Result<Self> {
        let dim = u.len();
        if w.len() != dim {
            return Err(Error::Structure("outer product of unequal lengths".into()));
        }
        let mut entries = vec![0u8; dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                let delta = u8::from(r == c);
                entries[r * dim + c] = ((delta as u32 + u[r] as u32 * w[c] as u32) % p as u32) as u8;
            }
        }
        Self::new(p, dim, entries)
    }

    pub fn identity(p: u8, dim: usize) -> Result<Self> {
        let mut entries = vec![0u8; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self::new(p, dim, entries)
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.entries[row * self.dim() + col]
    }

    /// `M x` for a column vector `x` of residues.
    pub fn apply(&self, x: &[u8]) -> Vec<u8> {
        let n = self.dim();
        let p = self.p as u32;
        (0..n)
            .map(|r| {
                let row = &self.entries[r * n..(r + 1) * n];
                (row.iter().zip(x).map(|(&a, &b)| a as u32 * b as u32).sum::<u32>() % p) as u8
            })
            .collect()
    }

    /// Determinant mod `p` by Gaussian elimination.
    pub fn determinant(&self) -> u8 {
        let n = self.dim();
        let p = self.p as u32;
        let mut a: Vec<u32> = self.entries.iter().map(|&e| e as u32).collect();
        let mut det: u32 = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = det * pv % p;
            let inv = inverse_mod(pv, p);
            for r in col + 1..n {
                let f = a[r * n + col] * inv % p;
                if f == 0 {
                    continue;
                }
                for c in col..n {
                    a[r * n + c] = (a[r * n + c] + p * p - f * a[col * n + c] % p) % p;
                }
            }
        }
        det as u8
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant() != 0
    }
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // p is 2 or 3: every nonzero residue is its own inverse.
    debug_assert!(!a.is_multiple_of(p) && p <= 3);
    a % p
}

impl TryFrom<RawMatrix> for FpMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        Self::new(raw.p, raw.dim as usize, raw.entries)
    }
}

impl From<FpMatrix> for RawMatrix {
    fn from(m: FpMatrix) -> Self {
        RawMatrix { p: m.p, dim: m.dim, entries: m.entries.into_vec() }
    }
}

impl GroupElement for FpMatrix {
    const KIND: &'static str = "fp-matrix";

    fn compatible(&self, other: &Self) -> bool {
        self.p == other.p && self.dim == other.dim
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.compatible(other));
        let n = self.dim();
        let p = self.p as u32;
        let mut entries = vec![0u8; n * n];
        for r in 0..n {
            let row = &self.entries[r * n..(r + 1) * n];
            for c in 0..n {
                let mut acc = 0u32;
                for (k, &a) in row.iter().enumerate() {
                    acc += a as u32 * other.entries[k * n + c] as u32;
                }
                entries[r * n + c] = (acc % p) as u8;
            }
        }
        Self { p: self.p, dim: self.dim, entries: entries.into_boxed_slice() }
    }

    /// Gauss-Jordan inverse mod `p`. Panics on a singular matrix, which
    /// cannot be a group element.
    fn inverse(&self) -> Self {
        let n = self.dim();
        let p = self.p as u32;
        let w = 2 * n;
        let mut a = vec![0u32; n * w];
        for r in 0..n {
            for c in 0..n {
                a[r * w + c] = self.get(r, c) as u32;
            }
            a[r * w + n + r] = 1;
        }
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * w + col] != 0).expect("singular matrix has no inverse");
            for c in 0..w {
                a.swap(pivot * w + c, col * w + c);
            }
            let inv = inverse_mod(a[col * w + col], p);
            for c in 0..w {
                a[col * w + c] = a[col * w + c] * inv % p;
            }
            for r in 0..n {
                if r == col || a[r * w + col] == 0 {
                    continue;
                }
                let f = a[r * w + col];
                for c in 0..w {
                    a[r * w + c] = (a[r * w + c] + p * p - f * a[col * w + c] % p) % p;
                }
            }
        }
        let entries = (0..n)
            .flat_map(|r| (0..n).map(move |c| (r, c)))
            .map(|(r, c)| a[r * w + n + c] as u8)
            .collect::<Vec<_>>();
        Self { p: self.p, dim: self.dim, entries: entries.into_boxed_slice() }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.p, self.dim()).expect("shape already validated")
    }

    fn is_identity(&self) -> bool {
        let n = self.dim();
        self.entries.iter().enumerate().all(|(k, &e)| e == u8::from(k / n == k % n))
    }

    fn shape(&self) -> String {
        format!("{}x{} matrix over F{}", self.dim, self.dim, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_shape_and_residues() {
        assert!(FpMatrix::new(5, 2, vec![1, 0, 0, 1]).is_err());
        assert!(FpMatrix::new(2, 2, vec![1, 0, 0]).is_err());
        assert!(FpMatrix::new(2, 2, vec![1, 2, 0, 1]).is_err());
        assert!(FpMatrix::new(3, 2, vec![1, 2, 0, 1]).is_ok());
    }

    #[test]
    fn product_and_inverse_over_f3() {
        let a = FpMatrix::new(3, 2, vec![1, 1, 0, 1]).unwrap();
        assert_eq!(a.order(10).unwrap(), 3);
        let b = FpMatrix::new(3, 2, vec![0, 2, 1, 0]).unwrap();
        assert_eq!(b.order(10).unwrap(), 4);
        for m in [&a, &b] {
            assert!(m.mul(&m.inverse()).is_identity());
            assert!(m.inverse().mul(m).is_identity());
        }
        assert_eq!(a.mul(&b).entries(), &[1, 2, 1, 0]);
    }

    #[test]
    fn determinant_mod_p() {
        assert_eq!(FpMatrix::new(3, 2, vec![1, 1, 1, 2]).unwrap().determinant(), 1);
        assert_eq!(FpMatrix::new(3, 2, vec![1, 1, 1, 1]).unwrap().determinant(), 0);
        assert_eq!(FpMatrix::new(3, 2, vec![0, 1, 1, 0]).unwrap().determinant(), 2);
        assert!(!FpMatrix::new(2, 2, vec![1, 1, 1, 1]).unwrap().is_invertible());
    }

    #[test]
    fn transvection_is_an_involution() {
        // x -> x + (x2) e1 over F2
        let t = FpMatrix::identity_plus_outer(2, &[1, 0], &[0, 1]).unwrap();
        assert!(t.is_involution());
        assert_eq!(t.apply(&[0, 1]), vec![1, 1]);
    }

    #[test]
    fn mismatched_shapes_do_not_compose() {
        let a = FpMatrix::identity(2, 2).unwrap();
        let b = FpMatrix::identity(3, 2).unwrap();
        assert!(crate::groups::compose(&a, &b).is_err());
    }
}
