//! Orchestrates every checkable claim: builds reference series, runs the
//! engine, compares, and emits machine-readable verdict reports.
//!
//! Default expectations encode the knowledge state per claim: proved results
//! must match (regression tests), known counterexamples must differ, open
//! questions are reported without a pass/fail. Counterexample checks are
//! confirmed over two distinct primes, since rank over F_p can only drop
//! against the generic value.

mod checks;
mod grid;
mod multi;

pub use grid::{parse_grid_config, run_grid, GridCell, GridConfig, GridSummary};
pub use multi::{multi_p1_expected, multi_p1_quotient, MultiP1Outcome};

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bigraded::TruncatedBiSeries;
use crate::engine::{RankProfile, DEFAULT_PRIME};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::Degree;
use crate::series::{compare_series, CoeffwiseOrder, DegreeSequence, TruncatedSeries};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 42;

/// Every dispatchable claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// Generic quotient series equals the conjectured minimal series.
    Froberg,
    /// Replacing n generic forms by variable powers keeps the series.
    StanleySubst,
    /// k-th powers of generic degree-d forms vs generic forms of degree dk.
    Powers,
    /// Products of generic forms vs generic forms of the product degree.
    Products,
    /// Products of powers of generic linear forms vs generic forms.
    LinpowerProducts,
    /// I^s of a generic ideal vs the matching count of generic forms.
    IdealPower,
    /// The conjectured series is correct in degree min(d_i) + 1.
    HlDegree,
    /// d-th powers of generic linear forms vs generic degree-d forms, with
    /// the known exception list.
    LinpowersIarrobino,
    /// s linear powers mixed with generic forms vs all-generic.
    MixedLinpowers,
    /// Powers of the 2^{n-1} odd-subset sums vs generic forms.
    OddSums,
    /// The eight (x1 +- x2 +- x3 +- x4)^d forms vs eight generic forms.
    SignedSums,
    /// Weak Lefschetz: generic linear multiplication has maximal rank.
    Wlp,
    /// Strong Lefschetz: powers of a generic linear form.
    Slp,
    /// Maximal rank property: generic forms of any degree.
    Mrp,
    /// The degreewise initial ideal of generic forms is almost degrevlex.
    AlmostRevlex,
    /// Multiplication by x_{n-i} on the gin-quotient has maximal rank.
    PaRanks,
    /// Tensor quotient by generic forms vs the Anick bound.
    TensorGeneric,
    /// The three-relation family with series (1-4z+3z^2-z^{q+3})^{-1}.
    TensorFlFamily,
    /// Generic quadratic Lie elements vs the Anick bound.
    LieQuadratic,
    /// T(V)/([x1,x2],...,[x1,xn]) has series (1-nz+(n-1)z^2)^{-1}.
    LieCommutatorExample,
    /// Exterior quotient vs the expected series.
    ExteriorGeneric,
    /// Two generic exterior quadrics vs the lattice-path series.
    ExteriorPaths,
    /// Squares of variables plus squares of linear forms vs the exterior
    /// quotient by the same number of generic quadrics.
    ExteriorVsSquares,
    /// Bigraded quotient vs the bigraded truncation formula.
    Bigraded,
    /// Multigraded quotients of products of projective lines.
    MultiP1,
    /// Stanley substitution over a small prime field vs the conjectured
    /// series.
    Poschar,
}

impl CheckId {
    pub fn name(&self) -> &'static str {
        match self {
            CheckId::Froberg => "froberg",
            CheckId::StanleySubst => "stanley-subst",
            CheckId::Powers => "powers",
            CheckId::Products => "products",
            CheckId::LinpowerProducts => "linpower-products",
            CheckId::IdealPower => "ideal-power",
            CheckId::HlDegree => "hl-degree",
            CheckId::LinpowersIarrobino => "linpowers-iarrobino",
            CheckId::MixedLinpowers => "mixed-linpowers",
            CheckId::OddSums => "odd-sums",
            CheckId::SignedSums => "signed-sums",
            CheckId::Wlp => "wlp",
            CheckId::Slp => "slp",
            CheckId::Mrp => "mrp",
            CheckId::AlmostRevlex => "almost-revlex",
            CheckId::PaRanks => "pa-ranks",
            CheckId::TensorGeneric => "tensor-generic",
            CheckId::TensorFlFamily => "tensor-fl-family",
            CheckId::LieQuadratic => "lie-quadratic",
            CheckId::LieCommutatorExample => "lie-commutator-example",
            CheckId::ExteriorGeneric => "exterior-generic",
            CheckId::ExteriorPaths => "exterior-paths",
            CheckId::ExteriorVsSquares => "exterior-vs-squares",
            CheckId::Bigraded => "bigraded",
            CheckId::MultiP1 => "multi-p1",
            CheckId::Poschar => "poschar",
        }
    }

    pub fn all() -> &'static [CheckId] {
        use CheckId::*;
        &[
            Froberg,
            StanleySubst,
            Powers,
            Products,
            LinpowerProducts,
            IdealPower,
            HlDegree,
            LinpowersIarrobino,
            MixedLinpowers,
            OddSums,
            SignedSums,
            Wlp,
            Slp,
            Mrp,
            AlmostRevlex,
            PaRanks,
            TensorGeneric,
            TensorFlFamily,
            LieQuadratic,
            LieCommutatorExample,
            ExteriorGeneric,
            ExteriorPaths,
            ExteriorVsSquares,
            Bigraded,
            MultiP1,
            Poschar,
        ]
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::all()
            .iter()
            .find(|c| c.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown check id '{s}'")))
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Parameter bag for a check; unused fields stay None.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degrees: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bidegrees: Option<Vec<(u32, u32)>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub multidegrees: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q_infinite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factors: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub with_squares: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub second_prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trials: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prec_x: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prec_y: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strict: Option<bool>,
}

impl CheckParams {
    pub fn n_or_err(&self) -> Result<u32> {
        self.n.ok_or_else(|| Error::InvalidParameter("check needs --n".into()))
    }

    /// Generator degrees: an explicit list, or d x r.
    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        if let Some(list) = &self.degrees {
            return DegreeSequence::new(list.clone());
        }
        match (self.d, self.r) {
            (Some(d), Some(r)) => DegreeSequence::uniform(d, r as usize),
            _ => Err(Error::InvalidParameter("check needs --degrees or --d with --r".into())),
        }
    }

    pub fn field(&self) -> Result<FieldSpec> {
        FieldSpec::new(self.prime.unwrap_or(DEFAULT_PRIME))
    }

    pub fn seed_or_default(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    /// Compact "k=v;k=v" rendering for CSV output.
    pub fn compact(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |k: &str, v: String| parts.push(format!("{k}={v}"));
        if let Some(v) = self.n {
            push("n", v.to_string());
        }
        if let Some(v) = self.m {
            push("m", v.to_string());
        }
        if let Some(v) = &self.degrees {
            push("degrees", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
        }
        if let Some(v) = &self.bidegrees {
            push("bidegrees", v.iter().map(|(a, b)| format!("{a}:{b}")).collect::<Vec<_>>().join(","));
        }
        if let Some(v) = &self.multidegrees {
            push(
                "multidegrees",
                v.iter()
                    .map(|m| m.iter().map(u32::to_string).collect::<Vec<_>>().join(":"))
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        for (k, v) in [
            ("d", self.d),
            ("r", self.r),
            ("k", self.k),
            ("s", self.s),
            ("q", self.q),
            ("i", self.i),
            ("max_degree", self.max_degree),
        ] {
            if let Some(v) = v {
                push(k, v.to_string());
            }
        }
        if self.q_infinite == Some(true) {
            push("q", "inf".into());
        }
        if let Some(v) = &self.factors {
            push("factors", v.iter().map(u32::to_string).collect::<Vec<_>>().join("+"));
        }
        if let Some(v) = self.strict {
            push("strict", v.to_string());
        }
        parts.join(";")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    MustMatch,
    MustDiffer,
    Report,
}

impl FromStr for Expectation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "match" | "must-match" => Ok(Expectation::MustMatch),
            "differ" | "must-differ" => Ok(Expectation::MustDiffer),
            "report" => Ok(Expectation::Report),
            other => Err(Error::Parse(format!("unknown expectation '{other}'"))),
        }
    }
}

/// Outcome of comparing computed against reference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch { degree: Degree },
    Incomparable { degree: Degree },
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        matches!(self, Verdict::Match)
    }

    pub fn from_comparison(cmp: &crate::series::SeriesComparison) -> Verdict {
        match (cmp.coeffwise, cmp.first_divergence) {
            (CoeffwiseOrder::Equal, _) => Verdict::Match,
            (CoeffwiseOrder::Incomparable, Some(t)) => {
                Verdict::Incomparable { degree: Degree::Total(t as u32) }
            }
            (_, Some(t)) => Verdict::Mismatch { degree: Degree::Total(t as u32) },
            _ => Verdict::Match,
        }
    }

    pub fn from_bi_comparison(ord: CoeffwiseOrder, first: Option<(usize, usize)>) -> Verdict {
        match (ord, first) {
            (CoeffwiseOrder::Equal, _) => Verdict::Match,
            (CoeffwiseOrder::Incomparable, Some((i, j))) => {
                Verdict::Incomparable { degree: Degree::Bi(i as u32, j as u32) }
            }
            (_, Some((i, j))) => Verdict::Mismatch { degree: Degree::Bi(i as u32, j as u32) },
            _ => Verdict::Match,
        }
    }
}

/// A series payload of either grading.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesPayload {
    Uni(TruncatedSeries),
    Bi(TruncatedBiSeries),
}

/// One fully specified check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckSpec {
    pub check_id: CheckId,
    pub params: CheckParams,
    /// None means: use the default expectation for this cell.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expectation: Option<Expectation>,
}

/// Machine-readable verdict record. The embedded series are sufficient to
/// recompute the verdict (see [`recheck`]).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub version: String,
    pub check_id: CheckId,
    pub params: CheckParams,
    pub expectation: Expectation,
    pub verdict: Verdict,
    pub expectation_met: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub computed: Option<SeriesPayload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reference: Option<SeriesPayload>,
    /// Which truncation or comparison convention the check used, when that
    /// is ambiguous in the source material.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub convention: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub detail: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub profile: Option<RankProfile>,
    pub seed: u64,
    pub primes: Vec<u64>,
    pub trials: u32,
    pub wall_ms: u64,
}

impl VerificationReport {
    /// First divergence point, for CSV output.
    pub fn first_divergence(&self) -> Option<Degree> {
        match self.verdict {
            Verdict::Match => None,
            Verdict::Mismatch { degree } | Verdict::Incomparable { degree } => Some(degree),
        }
    }
}

/// Re-derive the verdict from the series embedded in a report.
pub fn recheck(report: &VerificationReport) -> Result<Verdict> {
    match (&report.computed, &report.reference) {
        (Some(SeriesPayload::Uni(a)), Some(SeriesPayload::Uni(b))) => {
            let prec = a.precision().min(b.precision());
            let cmp = compare_series(&a.truncate_to(prec), &b.truncate_to(prec))?;
            Ok(Verdict::from_comparison(&cmp))
        }
        (Some(SeriesPayload::Bi(a)), Some(SeriesPayload::Bi(b))) => {
            let (ord, first) = a.compare(b);
            Ok(Verdict::from_bi_comparison(ord, first))
        }
        _ => Err(Error::InvalidParameter(
            "report does not embed a comparable computed/reference pair".into(),
        )),
    }
}

/// Run one check: build the reference, run the engine, compare, report.
pub fn check(spec: &CheckSpec) -> Result<VerificationReport> {
    checks::dispatch(spec)
}

/// Default expectation for a cell, encoding the knowledge state.
pub fn default_expectation(check_id: CheckId, params: &CheckParams) -> Expectation {
    checks::default_expectation(check_id, params)
}

/// The first-nontrivial-degree comparison: the conjectured series is exact
/// in degree min(d_i) + 1.
pub fn first_nontrivial_check(
    n: u32,
    degrees: &DegreeSequence,
    field: FieldSpec,
    seed: u64,
) -> Result<VerificationReport> {
    let spec = CheckSpec {
        check_id: CheckId::HlDegree,
        params: CheckParams {
            n: Some(n),
            degrees: Some(degrees.as_slice().to_vec()),
            prime: Some(field.prime()),
            seed: Some(seed),
            ..Default::default()
        },
        expectation: None,
    };
    check(&spec)
}
