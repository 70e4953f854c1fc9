//! Report types. Every rational is a `"p/q"` string.

use fischer_lab::fischer::ComponentSummary;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotRun,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub reason: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Self { status: Status::Pass, reason: None }
    }

    pub fn fail(reason: impl Into<String>) -> Self {
        Self { status: Status::Fail, reason: Some(reason.into()) }
    }

    pub fn not_run(reason: impl Into<String>) -> Self {
        Self { status: Status::NotRun, reason: Some(reason.into()) }
    }

    pub fn from_result<T>(r: &fischer_lab::Result<T>) -> Self {
        match r {
            Ok(_) => Self::pass(),
            Err(e) => Self::fail(e.to_string()),
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn label(&self) -> &'static str {
        match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotRun => "not-run",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub descriptor: String,
    pub family: String,
    pub group: GroupSection,
    pub fischer: FischerSection,
    pub matsuo: MatsuoSection,
}

impl AnalysisReport {
    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        let m = &self.matsuo;
        vec![
            ("three-transposition", &self.fischer.three_transposition),
            ("h-subgroup", &self.fischer.h_subgroup),
            ("axioms", &m.axioms),
            ("unity", &m.unity_verdict),
            ("quotient", &m.quotient),
            ("spectra", &m.spectra_verdict),
            ("miyamoto", &m.miyamoto),
            ("sigma", &m.sigma.verdict),
            ("pair-types", &m.pair_types.verdict),
        ]
    }

    pub fn any_failure(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| v.is_fail())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSection {
    pub generators: usize,
    pub order: usize,
    pub center_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FischerSection {
    pub transpositions: usize,
    pub components: Vec<ComponentSummary>,
    pub connected: bool,
    pub three_transposition: Verdict,
    /// `"symplectic"` or `"non-symplectic (undetermined beyond H)"`.
    pub symplectic_type: String,
    pub h_triple: Option<[usize; 3]>,
    pub h_subgroup: Verdict,
    pub h_subgroup_order: Option<usize>,
    pub h_center_order: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatsuoSection {
    pub alpha: String,
    pub beta: String,
    pub dim: usize,
    pub form_diagonal: String,
    pub form_adjacent: String,
    pub axioms: Verdict,
    pub unity: Vec<UnitySummary>,
    pub unity_verdict: Verdict,
    pub radical_dim: usize,
    pub quotient_dim: usize,
    pub quotient: Verdict,
    pub positive_definite: bool,
    pub spectra: Vec<SpectrumSummary>,
    pub spectra_verdict: Verdict,
    pub miyamoto: Verdict,
    pub sigma: SigmaSummary,
    pub pair_types: PairTypeSummary,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitySummary {
    /// Smallest axis of the component.
    pub component: usize,
    pub valency: usize,
    /// Common coefficient `4/(k alpha + 4)`, or `None` when `k alpha + 4 = 0`.
    pub coefficient: Option<String>,
}

/// Eigenstructure of `ad x^i` for the first axis of a component.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumSummary {
    pub axis: usize,
    pub eigenvalues: Vec<String>,
    pub dim_two: usize,
    pub dim_zero: usize,
    pub dim_alpha: usize,
    pub valency: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaSummary {
    pub verdict: Verdict,
    pub kernel_order: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairTypeSummary {
    pub verdict: Verdict,
    /// Unordered pairs of distinct axes of type 2A and 2B; 1A is the diagonal.
    pub count_2a: Option<usize>,
    pub count_2b: Option<usize>,
}

/// Serialises through `serde_json::Value` (sorted keys), so that parsing
/// the output and writing it again is byte-identical.
pub fn canonical_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let v = serde_json::to_value(value)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

/// Text output drops the `/1` that the JSON keeps on integers.
pub fn plain(pq: &str) -> &str {
    pq.strip_suffix("/1").unwrap_or(pq)
}
