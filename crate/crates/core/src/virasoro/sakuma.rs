//! Dihedral subalgebras generated by two Ising vectors `e`, `f`.

use std::fmt;

use serde::Serialize;

use crate::rational::{format_rational, int, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MiyamotoKind {
    #[serde(rename = "sigma")]
    Sigma,
    #[serde(rename = "tau")]
    Tau,
}

impl fmt::Display for MiyamotoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Sigma => "sigma",
            Self::Tau => "tau",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SakumaRecord {
    pub tag: &'static str,
    /// Largest possible order of `tau_e tau_f`.
    pub max_tau_order: u32,
    /// `2^10 (e | f)`.
    pub inner_product_times_1024: u32,
    /// Dimension of the weight-2 part of `<e, f>`.
    pub griess_dim: u32,
    pub ising_count: u32,
    pub miyamoto_kind: MiyamotoKind,
}

impl SakumaRecord {
    /// `(e | f)` as an exact rational.
    pub fn inner_product(&self) -> Rational {
        int(i64::from(self.inner_product_times_1024)) / int(1024)
    }
}

const fn row(
    tag: &'static str,
    max_tau_order: u32,
    inner_product_times_1024: u32,
    griess_dim: u32,
    ising_count: u32,
    miyamoto_kind: MiyamotoKind,
) -> SakumaRecord {
    SakumaRecord { tag, max_tau_order, inner_product_times_1024, griess_dim, ising_count, miyamoto_kind }
}

use MiyamotoKind::{Sigma, Tau};

static TABLE: [SakumaRecord; 9] = [
    row("1A", 1, 256, 1, 1, Sigma),
    row("2A", 2, 32, 3, 3, Sigma),
    row("3A", 3, 13, 4, 3, Tau),
    row("4A", 4, 8, 5, 4, Tau),
    row("5A", 5, 6, 6, 5, Tau),
    row("6A", 6, 5, 8, 7, Tau),
    row("4B", 4, 4, 5, 5, Tau),
    row("2B", 2, 0, 2, 2, Sigma),
    row("3C", 3, 4, 3, 3, Tau),
];

/// The nine rows, in the customary column order.
pub fn sakuma_table() -> &'static [SakumaRecord] {
    &TABLE
}

/// Looks a row up by its tag (`"3A"`, case-insensitive).
pub fn sakuma_record(tag: &str) -> Result<&'static SakumaRecord> {
    TABLE
        .iter()
        .find(|r| r.tag.eq_ignore_ascii_case(tag.trim()))
        .ok_or_else(|| Error::NotInTable(format!("no dihedral type {tag:?}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "match", content = "records", rename_all = "kebab-case")]
pub enum SakumaMatch {
    Unique(&'static SakumaRecord),
    /// Several rows share the value (`4/1024` is both 4B and 3C).
    Ambiguous(Vec<&'static SakumaRecord>),
}

/// Looks rows up by the value of `(e | f)`.
pub fn sakuma_lookup_inner(value: &Rational) -> Result<SakumaMatch> {
    let hits: Vec<&'static SakumaRecord> = TABLE.iter().filter(|r| &r.inner_product() == value).collect();
    match hits.len() {
        0 => Err(Error::NotInTable(format!("(e | f) = {} is not in the table", format_rational(value)))),
        1 => Ok(SakumaMatch::Unique(hits[0])),
        _ => Ok(SakumaMatch::Ambiguous(hits)),
    }
}
