use serde::{Deserialize, Serialize};

use super::GroupElement;
use crate::{Error, Result};

/// A permutation of `{0, .., n-1}` stored by its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Structure(format!("image array {images:?} is not a bijection on 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree as u32).collect() }
    }

    /// The transposition swapping `i` and `j` in degree `degree`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_cycles(degree, &[&[i, j]])
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` maps
    /// `0 -> 1 -> 2 -> 0`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= degree || b >= degree || touched[a] {
                    return Err(Error::Structure(format!(
                        "cycles {cycles:?} are not disjoint cycles in degree {degree}"
                    )));
                }
                touched[a] = true;
                images[a] = b as u32;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Lengths of all cycles, fixed points included, in order of smallest point.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<u32>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl GroupElement for Permutation {
    const KIND: &'static str = "permutation";

    fn compatible(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.compatible(other));
        Self { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Self { images }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.degree())
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    fn shape(&self) -> String {
        format!("permutation of degree {}", self.degree())
    }

    /// The lcm of the cycle lengths.
    fn order(&self, cap: u64) -> Result<u64> {
        use num_integer::Integer;
        let mut order: u64 = 1;
        for len in self.cycle_lengths() {
            order = order.lcm(&(len as u64));
            if order > cap {
                return Err(Error::OrderOverflow { cap });
            }
        }
        Ok(order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize, j: usize) -> Permutation {
        Permutation::transposition(n, i, j).unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (0 1)·(1 2): 0 -> 0 -> 1, 1 -> 2 -> 2, 2 -> 1 -> 0
        let p = t(3, 0, 1).mul(&t(3, 1, 2));
        assert_eq!(p.images(), &[1, 2, 0]);
        assert_eq!(p, Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap());
        assert_eq!(p.order(100).unwrap(), 3);
    }

    #[test]
    fn identity_and_inverse() {
        let g = Permutation::from_cycles(5, &[&[0, 3, 1], &[2, 4]]).unwrap();
        let id = Permutation::identity(5);
        assert_eq!(id.mul(&g), g);
        assert!(g.mul(&g.inverse()).is_identity());
        assert_eq!(id.order(1).unwrap(), 1);
        assert_eq!(g.order(100).unwrap(), 6);
    }

    #[test]
    fn order_of_disjoint_transpositions() {
        let g = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(g.order(10).unwrap(), 2);
        assert!(g.is_involution());
    }

    #[test]
    fn order_cap() {
        let g = Permutation::from_cycles(7, &[&[0, 1, 2, 3, 4, 5, 6]]).unwrap();
        assert!(matches!(g.order(6), Err(Error::OrderOverflow { cap: 6 })));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn serde_uses_image_arrays() {
        let g = t(3, 0, 2);
        assert_eq!(serde_json::to_string(&g).unwrap(), "[2,1,0]");
        assert!(serde_json::from_str::<Permutation>("[1,1,0]").is_err());
    }
}
