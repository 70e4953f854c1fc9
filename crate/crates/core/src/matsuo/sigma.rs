//! The conjugation action `G -> Aut B` and pair types at `alpha = beta = 1/2`.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::MatsuoAlgebra;
use crate::fischer::TranspositionSystem;
use crate::groups::{self, GeneratedGroup, GroupElement};
use crate::rational::{format_rational, rat, Rational};
use crate::virasoro::{sakuma_lookup_inner, sakuma_record, SakumaMatch};
use crate::{Error, Result};

/// `sigma_g : x^t -> x^{g t g^-1}` on the basis, for every element of an
/// enumerated group.
#[derive(Clone, Debug)]
pub struct SigmaHomomorphism {
    /// Basis permutations of the generators, in generator order.
    pub generator_images: Vec<Vec<usize>>,
    /// Group indices of the elements acting trivially, sorted.
    pub kernel: Vec<usize>,
    /// Group indices of the center, sorted.
    pub center: Vec<usize>,
}

impl SigmaHomomorphism {
    pub fn kernel_is_center(&self) -> bool {
        self.kernel == self.center
    }
}

/// Basis permutation of `g`.
pub fn sigma_image<E: GroupElement>(sys: &TranspositionSystem<E>, g: &E) -> Result<Vec<usize>> {
    (0..sys.len()).map(|t| sys.conjugate_index(g, t)).collect()
}

fn preserves_structure(algebra: &MatsuoAlgebra, p: &[usize]) -> bool {
    let n = algebra.dim();
    (0..n).into_par_iter().all(|a| {
        (a..n).all(|b| {
            let mut image: Vec<(usize, Rational)> =
                algebra.basis_product(a, b).into_iter().map(|(k, c)| (p[k], c)).collect();
            image.sort_by_key(|t| t.0);
            image == algebra.basis_product(p[a], p[b])
                && algebra.gram_entry(a, b) == algebra.gram_entry(p[a], p[b])
        })
    })
}

/// Computes the kernel of `sigma` over the whole group and compares it with
/// the center. Also checks `sigma_{gh} = sigma_g sigma_h` on all generator
/// pairs and that each generator acts by a product- and form-preserving
/// permutation.
pub fn sigma_homomorphism<E: GroupElement>(
    algebra: &MatsuoAlgebra,
    sys: &TranspositionSystem<E>,
    group: &GeneratedGroup<E>,
) -> Result<SigmaHomomorphism> {
    if algebra.dim() != sys.len() {
        return Err(Error::Structure("algebra and transposition system differ in size".into()));
    }
    let gens = group.generators();
    let generator_images: Vec<Vec<usize>> =
        gens.iter().map(|g| sigma_image(sys, g)).collect::<Result<_>>()?;
    for (a, ga) in gens.iter().zip(&generator_images) {
        if !preserves_structure(algebra, ga) {
            return Err(Error::internal("a generator does not act as an automorphism"));
        }
        for (b, gb) in gens.iter().zip(&generator_images) {
            let composed: Vec<usize> = gb.iter().map(|&t| ga[t]).collect();
            if sigma_image(sys, &a.mul(b))? != composed {
                return Err(Error::internal("sigma is not multiplicative on generators"));
            }
        }
    }

    let n = sys.len();
    let transpositions = sys.transpositions();
    let kernel: Vec<usize> = (0..group.order())
        .into_par_iter()
        .filter(|&k| {
            let g = group.element(k);
            (0..n).all(|t| transpositions[t].conjugate_by(g) == transpositions[t])
        })
        .collect();
    let mut center: Vec<usize> =
        groups::center(group).iter().map(|z| group.index_of(z).expect("center lies in the group")).collect();
    center.sort_unstable();
    let hom = SigmaHomomorphism { generator_images, kernel, center };
    if !hom.kernel_is_center() {
        return Err(Error::internal(format!(
            "ker sigma has order {}, center has order {}",
            hom.kernel.len(),
            hom.center.len()
        )));
    }
    Ok(hom)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PairType {
    #[serde(rename = "1A")]
    OneA,
    #[serde(rename = "2A")]
    TwoA,
    #[serde(rename = "2B")]
    TwoB,
}

impl PairType {
    pub fn tag(self) -> &'static str {
        match self {
            Self::OneA => "1A",
            Self::TwoA => "2A",
            Self::TwoB => "2B",
        }
    }
}

impl std::fmt::Display for PairType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Type of the pair of axes `x^i`, `x^j` in `B(1/2, 1/2)`, read off the form
/// value and checked against the dihedral table.
pub fn pair_type(algebra: &MatsuoAlgebra, i: usize, j: usize) -> Result<PairType> {
    let half = rat(1, 2);
    if algebra.alpha() != &half || algebra.beta() != &half {
        return Err(Error::NotSigmaConfiguration(format!(
            "pair types need alpha = beta = 1/2, got {} and {}",
            format_rational(algebra.alpha()),
            format_rational(algebra.beta())
        )));
    }
    if i >= algebra.dim() || j >= algebra.dim() {
        return Err(Error::Structure(format!("axis pair ({i}, {j}) out of range")));
    }
    let value = algebra.gram_entry(i, j);
    let ty = if i == j {
        PairType::OneA
    } else if value.is_zero() {
        PairType::TwoB
    } else if value == rat(1, 32) {
        PairType::TwoA
    } else {
        return Err(Error::NotSigmaConfiguration(format!(
            "form value {} on ({i}, {j})",
            format_rational(&value)
        )));
    };
    let record = sakuma_record(ty.tag())?;
    let matches = matches!(
        sakuma_lookup_inner(&value)?,
        SakumaMatch::Unique(r) if r.tag == ty.tag()
    );
    if !matches || record.miyamoto_kind != crate::virasoro::MiyamotoKind::Sigma {
        return Err(Error::internal(format!("pair type {ty} disagrees with the dihedral table")));
    }
    Ok(ty)
}
