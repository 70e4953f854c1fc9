//! Concrete finite groups.
//!
//! Elements are either [`Permutation`]s or invertible [`FpMatrix`]es over F2
//! or F3. Both implement [`GroupElement`], and the closure routines in this
//! module are generic over it.
//!
//! Composition convention, used everywhere in the crate: `a.mul(&b)` is the
//! element acting as "apply `b` first, then `a`". Conjugation of `x` by `g`
//! is `g x g^-1`.

pub mod cache;
mod closure;
mod matrix;
mod perm;

use std::fmt::Debug;
use std::hash::Hash;

use serde::{de::DeserializeOwned, Serialize};

use crate::{Error, Result};

pub use closure::{center, conjugacy_closure, generate, GeneratedGroup, DEFAULT_MAX_ORDER};
pub use matrix::FpMatrix;
pub use perm::Permutation;

pub trait GroupElement: Clone + Eq + Hash + Ord + Debug + Send + Sync + Serialize + DeserializeOwned {
    /// Tag used in serialized group files.
    const KIND: &'static str;

    /// Whether `self` and `other` live in the same ambient group.
    fn compatible(&self, other: &Self) -> bool;

    /// Product `self · other` (`other` acts first). Callers must ensure the
    /// operands are [`compatible`](Self::compatible).
    fn mul(&self, other: &Self) -> Self;

    fn inverse(&self) -> Self;

    /// The identity of the ambient group of `self`.
    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool;

    /// Describes the ambient group, for error messages.
    fn shape(&self) -> String;

    /// Least `k >= 1` with `self^k = 1`, or [`Error::OrderOverflow`] past `cap`.
    fn order(&self, cap: u64) -> Result<u64> {
        let mut power = self.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return Ok(k);
            }
            power = power.mul(self);
        }
        Err(Error::OrderOverflow { cap })
    }

    fn is_involution(&self) -> bool {
        !self.is_identity() && self.mul(self).is_identity()
    }

    /// `g self g^-1`.
    fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.identity_like();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }
}

/// Checked product `a · b`.
pub fn compose<E: GroupElement>(a: &E, b: &E) -> Result<E> {
    if !a.compatible(b) {
        return Err(Error::Structure(format!("cannot compose {} with {}", a.shape(), b.shape())));
    }
    Ok(a.mul(b))
}

pub fn element_order<E: GroupElement>(g: &E, cap: u64) -> Result<u64> {
    g.order(cap)
}

pub(crate) fn check_compatible<E: GroupElement>(elements: &[E]) -> Result<()> {
    if let Some(first) = elements.first() {
        if let Some(bad) = elements.iter().find(|e| !first.compatible(e)) {
            return Err(Error::Structure(format!(
                "mixed element shapes: {} and {}",
                first.shape(),
                bad.shape()
            )));
        }
    }
    Ok(())
}
