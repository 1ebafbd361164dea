//! Machine-checkable verdicts for the triangle/eigenvalue identities,
//! bounds, threshold theorems and open conjectures.
//!
//! Every verdict compares an `actual` value against a `bound` and reports
//! `slack = actual − bound`. Floating-point comparisons are banded:
//!
//! * `|slack| ≤ 10·tol` counts as equality,
//! * a violation needs `slack < −1000·tol`, a clearly satisfied hypothesis and
//!   no matching exception graph; anything in between is
//!   [`Outcome::BoundaryInconclusive`].
//!
//! Exception graphs are recognised structurally (see [`crate::patterns`]),
//! so they are decided exactly even when the spectrum sits on a boundary.

mod theorems;
mod sk2_threshold;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::analysis::AnalysisError;

pub use theorems::*;
pub use sk2_threshold::sk2_spectral_radius;

/// Multiple of `tol` within which two values are equal.
pub const EQUALITY_FACTOR: f64 = 10.0;
/// Multiple of `tol` a bound must be missed by to count as violated.
pub const VIOLATION_FACTOR: f64 = 1000.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("conjecture for r = {r} needs r >= 2 and at least r + 1 vertices (n = {n})")]
    ConjectureDomain { r: usize, n: usize },
    #[error("{0} needs at least one edge")]
    NoEdges(TheoremId),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

/// Identifier of one verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Exact reconstruction of t(G) from the spectrum.
    TriangleIdentity,
    /// `t ≥ λ(λ² − m)/3`
    BnSize,
    /// `t ≥ (n²/12)(λ − n/2)`
    BnOrder,
    /// `λ ≥ √m ⇒ t ≥ ⌊(√m − 1)/2⌋` unless complete bipartite
    CountingSize,
    /// `λ ≥ √⌊n²/4⌋ ⇒ t ≥ ⌊n/2⌋ − 1` unless `T_{n,2}`
    CountingOrder,
    /// `λ > √m ⇒ t ≥ 1`
    Nosal,
    /// `λ ≥ √m ⇒ t ≥ 1` unless complete bipartite
    Nikiforov,
    /// non-bipartite, `λ ≥ √(m−1) ⇒ t ≥ 1` unless C5
    NonBipartite,
    /// non-bipartite, odd m, `λ ≥ λ(SK_{2,(m−1)/2}) ⇒ t ≥ 1` unless that graph
    Sk2Threshold,
    /// `m > t_{n,2} ⇒ t ≥ ⌊n/2⌋`
    Rademacher,
    /// `m = t_{n,2} + k`, `1 ≤ k < n/2 ⇒ t ≥ k⌊n/2⌋`
    LovaszSimonovits,
    /// `K_{r+1}`-free ⇒ `λ₁² + λ₂² ≤ 2m(1 − 1/r)` (open for r ≥ 3)
    BnConjecture(u8),
    /// `λ₁² + … + λ_ℓ² ≤ 2m(ω − 1)/ω`, `ℓ = min(n⁺, ω)` (open)
    ElwConjecture,
}

impl TheoremId {
    /// Every proven statement, in report order.
    pub const PROVEN: [TheoremId; 11] = [
        TheoremId::TriangleIdentity,
        TheoremId::BnSize,
        TheoremId::BnOrder,
        TheoremId::CountingSize,
        TheoremId::CountingOrder,
        TheoremId::Nosal,
        TheoremId::Nikiforov,
        TheoremId::NonBipartite,
        TheoremId::Sk2Threshold,
        TheoremId::Rademacher,
        TheoremId::LovaszSimonovits,
    ];

    /// The four spectral triangle-existence thresholds.
    pub const EXISTENCE: [TheoremId; 4] = [
        TheoremId::Nosal,
        TheoremId::Nikiforov,
        TheoremId::NonBipartite,
        TheoremId::Sk2Threshold,
    ];

    pub fn is_conjecture(&self) -> bool {
        matches!(self, TheoremId::BnConjecture(_) | TheoremId::ElwConjecture)
    }

    /// Parses a comma-separated list. `all` expands to the proven set,
    /// `conjectures` to the BN conjecture for r = 2, 3, 4 plus ELW.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>, BoundError> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "all" | "proven" => out.extend(TheoremId::PROVEN),
                "existence" => out.extend(TheoremId::EXISTENCE),
                "conjectures" => out.extend([
                    TheoremId::BnConjecture(2),
                    TheoremId::BnConjecture(3),
                    TheoremId::BnConjecture(4),
                    TheoremId::ElwConjecture,
                ]),
                other => out.push(other.parse()?),
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::TriangleIdentity => "triangle_identity",
            TheoremId::BnSize => "bn_size",
            TheoremId::BnOrder => "bn_order",
            TheoremId::CountingSize => "counting_size",
            TheoremId::CountingOrder => "counting_order",
            TheoremId::Nosal => "nosal",
            TheoremId::Nikiforov => "nikiforov",
            TheoremId::NonBipartite => "non_bipartite",
            TheoremId::Sk2Threshold => "sk2_threshold",
            TheoremId::Rademacher => "rademacher",
            TheoremId::LovaszSimonovits => "lovasz_simonovits",
            TheoremId::BnConjecture(r) => return write!(f, "bn_conjecture_r{r}"),
            TheoremId::ElwConjecture => "elw_conjecture",
        };
        f.write_str(s)
    }
}

impl FromStr for TheoremId {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let id = match s {
            "triangle_identity" => TheoremId::TriangleIdentity,
            "bn_size" => TheoremId::BnSize,
            "bn_order" => TheoremId::BnOrder,
            "counting_size" => TheoremId::CountingSize,
            "counting_order" => TheoremId::CountingOrder,
            "nosal" => TheoremId::Nosal,
            "nikiforov" => TheoremId::Nikiforov,
            "non_bipartite" => TheoremId::NonBipartite,
            "sk2_threshold" => TheoremId::Sk2Threshold,
            "rademacher" => TheoremId::Rademacher,
            "lovasz_simonovits" => TheoremId::LovaszSimonovits,
            "elw_conjecture" | "elw" => TheoremId::ElwConjecture,
            other => {
                let r = other
                    .strip_prefix("bn_conjecture_r")
                    .and_then(|r| r.parse::<u8>().ok())
                    .filter(|&r| r >= 2)
                    .ok_or_else(|| BoundError::UnknownTheorem(other.to_string()))?;
                TheoremId::BnConjecture(r)
            }
        };
        Ok(id)
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Satisfied,
    Failed,
    /// Within the tolerance band of the threshold.
    Boundary,
}

impl Hypothesis {
    /// `value ≥ threshold` (or `>`; the band makes them identical) with a
    /// symmetric uncertainty band.
    pub fn at_least(value: f64, threshold: f64, band: f64) -> Self {
        if value - threshold > band {
            Hypothesis::Satisfied
        } else if threshold - value > band {
            Hypothesis::Failed
        } else {
            Hypothesis::Boundary
        }
    }

    pub fn exact(holds: bool) -> Self {
        if holds {
            Hypothesis::Satisfied
        } else {
            Hypothesis::Failed
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Satisfied => "satisfied",
            Hypothesis::Failed => "failed",
            Hypothesis::Boundary => "boundary",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    Violated,
    BoundaryInconclusive,
    HypothesisNotMet,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Holds => "holds",
            Outcome::Violated => "violated",
            Outcome::BoundaryInconclusive => "boundary_inconclusive",
            Outcome::HypothesisNotMet => "hypothesis_not_met",
        })
    }
}

/// Result of checking one statement on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundVerdict {
    pub theorem: TheoremId,
    pub hypothesis: Hypothesis,
    pub bound_value: f64,
    pub actual_value: f64,
    /// `actual − bound` for lower bounds, `bound − actual` for the
    /// conjectured upper bounds; negative means the statement failed.
    pub slack: f64,
    pub exception_matched: bool,
    pub outcome: Outcome,
    /// Tolerance the verdict was judged with; 0 for integer-only checks.
    pub tol: f64,
}

impl BoundVerdict {
    /// Grades a lower-bound style claim `actual ≥ bound`.
    pub fn judge(
        theorem: TheoremId,
        hypothesis: Hypothesis,
        bound_value: f64,
        actual_value: f64,
        exception_matched: bool,
        tol: f64,
    ) -> Self {
        Self::from_slack(
            theorem,
            hypothesis,
            bound_value,
            actual_value,
            actual_value - bound_value,
            exception_matched,
            tol,
        )
    }

    /// Grades an upper-bound style claim `actual ≤ bound`.
    pub fn judge_upper(
        theorem: TheoremId,
        hypothesis: Hypothesis,
        bound_value: f64,
        actual_value: f64,
        tol: f64,
    ) -> Self {
        Self::from_slack(
            theorem,
            hypothesis,
            bound_value,
            actual_value,
            bound_value - actual_value,
            false,
            tol,
        )
    }

    fn from_slack(
        theorem: TheoremId,
        hypothesis: Hypothesis,
        bound_value: f64,
        actual_value: f64,
        slack: f64,
        exception_matched: bool,
        tol: f64,
    ) -> Self {
        let outcome = match hypothesis {
            Hypothesis::Failed => Outcome::HypothesisNotMet,
            _ if exception_matched => Outcome::Holds,
            _ if slack >= -EQUALITY_FACTOR * tol => Outcome::Holds,
            Hypothesis::Satisfied if slack < -VIOLATION_FACTOR * tol => Outcome::Violated,
            _ => Outcome::BoundaryInconclusive,
        };
        Self {
            theorem,
            hypothesis,
            bound_value,
            actual_value,
            slack,
            exception_matched,
            outcome,
            tol,
        }
    }

    /// Placeholder for a statement whose preconditions do not apply.
    pub fn not_applicable(theorem: TheoremId) -> Self {
        Self {
            theorem,
            hypothesis: Hypothesis::Failed,
            bound_value: 0.0,
            actual_value: 0.0,
            slack: 0.0,
            exception_matched: false,
            outcome: Outcome::HypothesisNotMet,
            tol: 0.0,
        }
    }

    /// Equality (within `10·tol`) under a satisfied hypothesis.
    pub fn is_tight(&self) -> bool {
        self.hypothesis == Hypothesis::Satisfied && self.slack.abs() <= EQUALITY_FACTOR * self.tol
    }
}
