//! Unitary-series Virasoro data: central charges, highest weights, fusion
//! of irreducible `L(c_m, 0)`-modules and the `tau` / `sigma` gradings.
//!
//! ```text
//! c_m       = 1 - 6 / ((m+2)(m+3))
//! h_{r,s}   = ((r(m+3) - s(m+2))^2 - 1) / (4(m+2)(m+3)),  1 <= r <= m+1, 1 <= s <= m+2
//! ```
//!
//! `(r, s)` and `(m+2-r, m+3-s)` name the same module; labels are stored as
//! the lexicographically smaller of the two.

mod sakuma;
mod w3;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::rational::{rat, Rational};
use crate::{Error, Result};

pub use sakuma::{sakuma_lookup_inner, sakuma_record, sakuma_table, MiyamotoKind, SakumaMatch, SakumaRecord};
pub use w3::{w3_modules, W3Module};

/// Largest series index accepted; weights stay well inside `i64`.
pub const MAX_M: u32 = 1000;

fn check_m(m: u32) -> Result<()> {
    if m == 0 || m > MAX_M {
        return Err(Error::InvalidParameter(format!("series index m = {m} outside 1..={MAX_M}")));
    }
    Ok(())
}

/// `c_m`.
pub fn central_charge(m: u32) -> Result<Rational> {
    check_m(m)?;
    let p = i64::from(m + 2) * i64::from(m + 3);
    Ok(rat(1, 1) - rat(6, p))
}

/// `h_{r,s}` for an in-range pair (not necessarily canonical).
pub fn weight(m: u32, r: u32, s: u32) -> Result<Rational> {
    Label::new(m, r, s).map(|l| l.weight())
}

fn raw_weight(m: u32, r: u32, s: u32) -> Rational {
    let (m, r, s) = (i64::from(m), i64::from(r), i64::from(s));
    let d = r * (m + 3) - s * (m + 2);
    rat(d * d - 1, 4 * (m + 2) * (m + 3))
}

/// An irreducible `L(c_m, 0)`-module, in canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Label {
    pub m: u32,
    pub r: u32,
    pub s: u32,
}

impl Label {
    pub fn new(m: u32, r: u32, s: u32) -> Result<Self> {
        check_m(m)?;
        if !(1..=m + 1).contains(&r) || !(1..=m + 2).contains(&s) {
            return Err(Error::InvalidParameter(format!(
                "label ({r}, {s}) outside 1..={} x 1..={} for m = {m}",
                m + 1,
                m + 2
            )));
        }
        let partner = (m + 2 - r, m + 3 - s);
        let (r, s) = (r, s).min(partner);
        Ok(Self { m, r, s })
    }

    pub fn vacuum(m: u32) -> Result<Self> {
        Self::new(m, 1, 1)
    }

    /// The other name `(m+2-r, m+3-s)` of the same module.
    pub fn partner(&self) -> (u32, u32) {
        (self.m + 2 - self.r, self.m + 3 - self.s)
    }

    pub fn weight(&self) -> Rational {
        raw_weight(self.m, self.r, self.s)
    }

    /// `tau_x` on this sector: `(-1)^{r+1}` for even `m`, `(-1)^{s+1}` for odd.
    pub fn tau_sign(&self) -> i8 {
        let e = if self.m.is_multiple_of(2) { self.r } else { self.s };
        if e % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// The representative of the form `(1, s)` (even `m`) or `(r, 1)` (odd
    /// `m`), when there is one.
    fn sector_index(&self) -> Option<u32> {
        let (pr, ps) = self.partner();
        if self.m.is_multiple_of(2) {
            [(self.r, self.s), (pr, ps)].iter().find(|p| p.0 == 1).map(|p| p.1)
        } else {
            [(self.r, self.s), (pr, ps)].iter().find(|p| p.1 == 1).map(|p| p.0)
        }
    }

    pub fn in_sigma_sector(&self) -> bool {
        self.sector_index().is_some()
    }

    /// `sigma_x` on a sector of `P_m`: `(-1)^{s+1}` on `h_{1,s}` (even `m`),
    /// `(-1)^{r+1}` on `h_{r,1}` (odd `m`).
    pub fn sigma_sign(&self) -> Result<i8> {
        match self.sector_index() {
            Some(k) if k % 2 == 1 => Ok(1),
            Some(_) => Ok(-1),
            None => Err(Error::InvalidParameter(format!("{self} is not in P_{}", self.m))),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)
    }
}

/// All irreducible modules for `c_m`, sorted; there are `(m+1)(m+2)/2`.
pub fn irreducibles(m: u32) -> Result<Vec<Label>> {
    check_m(m)?;
    let mut set = BTreeSet::new();
    for r in 1..=m + 1 {
        for s in 1..=m + 2 {
            set.insert(Label::new(m, r, s)?);
        }
    }
    Ok(set.into_iter().collect())
}

/// Distinct highest weights for `c_m`, sorted.
pub fn weights(m: u32) -> Result<Vec<Rational>> {
    let set: BTreeSet<Rational> = irreducibles(m)?.iter().map(Label::weight).collect();
    Ok(set.into_iter().collect())
}

/// Whether `h` is the highest weight of some irreducible module for `c_m`.
pub fn weight_exists(m: u32, h: &Rational) -> Result<bool> {
    Ok(irreducibles(m)?.iter().any(|l| &l.weight() == h))
}

/// Fusion product `a x b`, as a sorted set of canonical labels.
pub fn fuse(a: &Label, b: &Label) -> Result<Vec<Label>> {
    if a.m != b.m {
        return Err(Error::InvalidParameter(format!("cannot fuse labels of m = {} and m = {}", a.m, b.m)));
    }
    let m = a.m;
    let big_i = [a.r, b.r, m + 2 - a.r, m + 2 - b.r].into_iter().min().unwrap_or(0);
    let big_j = [a.s, b.s, m + 3 - a.s, m + 3 - b.s].into_iter().min().unwrap_or(0);
    let mut out = BTreeSet::new();
    for i in 1..=big_i {
        for j in 1..=big_j {
            out.insert(Label::new(m, a.r.abs_diff(b.r) + 2 * i - 1, a.s.abs_diff(b.s) + 2 * j - 1)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// `P_m`, sorted.
pub fn sigma_sector(m: u32) -> Result<Vec<Label>> {
    check_m(m)?;
    let mut set = BTreeSet::new();
    if m.is_multiple_of(2) {
        for s in 1..=m + 2 {
            set.insert(Label::new(m, 1, s)?);
        }
    } else {
        for r in 1..=m + 1 {
            set.insert(Label::new(m, r, 1)?);
        }
    }
    Ok(set.into_iter().collect())
}

/// One row of a weight grid, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightEntry {
    pub r: u32,
    pub s: u32,
    #[serde(with = "crate::rational::as_string")]
    pub weight: Rational,
    pub tau: i8,
    pub sigma: Option<i8>,
}

pub fn weight_grid(m: u32) -> Result<Vec<WeightEntry>> {
    irreducibles(m)?
        .into_iter()
        .map(|l| {
            Ok(WeightEntry {
                r: l.r,
                s: l.s,
                weight: l.weight(),
                tau: l.tau_sign(),
                sigma: l.sigma_sign().ok(),
            })
        })
        .collect()
}
