//! Verdicts emitted by the structure checks: a four-way status, a reason
//! code for the non-answers, and typed witnesses for everything else.

use std::fmt;

use serde::{Deserialize, Serialize};

/// PASS means the conclusion held; FAIL means hypothesis held but the
/// conclusion did not (always with a witness); VACUOUS means the statement
/// quantified over nothing; NOT_APPLICABLE means a hypothesis failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
            Status::NotApplicable => "NOT_APPLICABLE",
        };
        f.write_str(s)
    }
}

/// Why a check returned VACUOUS or NOT_APPLICABLE.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReasonCode {
    EmptyGraph,
    ClosureFailed,
    InterpolationFailed,
    FewerThanThreeVertices,
    FewerThanTwoVertices,
    NotConnected,
    DiameterExceedsThree,
    PinchedPath,
    NoCycle,
    NoNilpotent,
    NoUniqueMaximum,
    AnnihilatorConditionFailed,
    NotContentSemimodule,
    ContentNotOnto,
    NoUniqueMaximalIdeal,
    MaximalIdealSquareNonzero,
    NoPathOfLengthTwo,
    CapExceeded,
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_string(self).expect("reason codes serialize");
        f.write_str(s.trim_matches('"'))
    }
}

/// One edge together with a short cycle through it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveredEdge {
    pub u: String,
    pub v: String,
    pub cycle: Vec<String>,
}

/// Structured evidence attached to a verdict. FAIL verdicts always carry
/// one; PASS verdicts may carry one when the conclusion has content worth
/// keeping (e.g. the covering cycles).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two vertices too far apart, or in different components (no distance).
    DistantPair {
        u: String,
        v: String,
        distance: Option<u32>,
    },
    /// f(x)f(y) is a nonzero product outside the image of f.
    MissingProduct {
        x: String,
        y: String,
        product: String,
    },
    /// No image value interpolates between f(w)f(z) and the factors.
    InterpolationGap {
        w: String,
        z: String,
        product: String,
    },
    /// An edge on no cycle of length <= max_len.
    UncoveredEdge { u: String, v: String, max_len: usize },
    /// Every listed edge sits on its recorded short cycle.
    CycleCover { covers: Vec<CoveredEdge> },
    /// A path a - x - b whose endpoints meet only at x.
    PinchedPath { a: String, x: String, b: String },
    /// A path violating the common-neighbor dichotomy.
    DichotomyGap { a: String, x: String, b: String },
    /// No single element has the same annihilator as the pair.
    AnnihilatorGap { x: String, y: String },
    /// An element outside the span of its own content ideal.
    ContentGap { x: String },
    /// An ideal hit by no content value.
    MissedIdeal { ideal: String },
    /// A residuation law violated on submodules p, q at the given element.
    ResidualViolation {
        clause: String,
        p: String,
        q: String,
        element: String,
    },
    /// The largest-nilpotent hypothesis actually held.
    NilpotentMaximum { d: String },
}

/// Identifier of one executable check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    ClosureDiameter,
    OrderedInterpolationDiameter,
    TriangleRectangleCover,
    CoreShortCycles,
    PathCommonNeighborDichotomy,
    SemilatticeDiameterOne,
    ResidualIdealLaws,
    AnnihilatorIntersection,
    AnnihilatorCondition,
    AnnihilatorConditionDiameter,
    ContentSemimodule,
    ContentOntoIdeals,
    ContentDiameter,
    ResidualGraphDiameter,
    NilpotentMaximalIdealDiameter,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::ClosureDiameter,
        CheckId::OrderedInterpolationDiameter,
        CheckId::TriangleRectangleCover,
        CheckId::CoreShortCycles,
        CheckId::PathCommonNeighborDichotomy,
        CheckId::SemilatticeDiameterOne,
        CheckId::ResidualIdealLaws,
        CheckId::AnnihilatorIntersection,
        CheckId::AnnihilatorCondition,
        CheckId::AnnihilatorConditionDiameter,
        CheckId::ContentSemimodule,
        CheckId::ContentOntoIdeals,
        CheckId::ContentDiameter,
        CheckId::ResidualGraphDiameter,
        CheckId::NilpotentMaximalIdealDiameter,
    ];
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_string(self).expect("check ids serialize");
        f.write_str(s.trim_matches('"'))
    }
}

/// Outcome of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub check_id: CheckId,
    pub instance_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<ReasonCode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl VerdictReport {
    pub fn pass(check_id: CheckId, instance_ref: impl Into<String>) -> Self {
        VerdictReport {
            check_id,
            instance_ref: instance_ref.into(),
            status: Status::Pass,
            reason: None,
            witness: None,
        }
    }

    pub fn pass_with(
        check_id: CheckId,
        instance_ref: impl Into<String>,
        witness: Witness,
    ) -> Self {
        VerdictReport {
            check_id,
            instance_ref: instance_ref.into(),
            status: Status::Pass,
            reason: None,
            witness: Some(witness),
        }
    }

    pub fn fail(check_id: CheckId, instance_ref: impl Into<String>, witness: Witness) -> Self {
        VerdictReport {
            check_id,
            instance_ref: instance_ref.into(),
            status: Status::Fail,
            reason: None,
            witness: Some(witness),
        }
    }

    pub fn vacuous(
        check_id: CheckId,
        instance_ref: impl Into<String>,
        reason: ReasonCode,
    ) -> Self {
        VerdictReport {
            check_id,
            instance_ref: instance_ref.into(),
            status: Status::Vacuous,
            reason: Some(reason),
            witness: None,
        }
    }

    pub fn not_applicable(
        check_id: CheckId,
        instance_ref: impl Into<String>,
        reason: ReasonCode,
    ) -> Self {
        VerdictReport {
            check_id,
            instance_ref: instance_ref.into(),
            status: Status::NotApplicable,
            reason: Some(reason),
            witness: None,
        }
    }

    pub fn not_applicable_with(
        check_id: CheckId,
        instance_ref: impl Into<String>,
        reason: ReasonCode,
        witness: Witness,
    ) -> Self {
        VerdictReport {
            check_id,
            instance_ref: instance_ref.into(),
            status: Status::NotApplicable,
            reason: Some(reason),
            witness: Some(witness),
        }
    }
}
