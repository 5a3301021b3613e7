//! JSON documents emitted by every command.

use monoid_core::construct::{ConstructionSpec, NodesSummary};
use monoid_core::monoid::ValidityLevel;
use monoid_core::quartic::QuarticReportView;
use monoid_core::singclass::SurfaceReportView;
use monoid_core::MonoidError;
use serde::Serialize;

use crate::input::{InputEcho, InputError};

pub const SCHEMA_VERSION: &str = "1.0.0";

/// The JSON schema describing [`ReportDocument`].
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct PolynomialText {
    pub f_lo: String,
    pub f_hi: String,
    pub whole: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
}

impl ErrorInfo {
    pub fn from_error(e: &MonoidError) -> Self {
        let position = match e {
            MonoidError::Syntax { pos, .. } => Some(*pos),
            _ => None,
        };
        ErrorInfo { kind: e.kind().into(), message: e.to_string(), line: None, position }
    }

    pub fn from_input(e: &InputError) -> Self {
        ErrorInfo { line: e.line, ..Self::from_error(&e.error) }
    }

    pub fn usage(message: String) -> Self {
        ErrorInfo { kind: "Usage".into(), message, line: None, position: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionInfo {
    pub kind: String,
    /// Parameter points actually used, as `(α:β)^m` per component.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<NodesSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    pub round_trip: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: &'static str,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<ConstructionSpec>,
    pub seed: u64,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validity_level: Option<ValidityLevel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<PolynomialText>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceReportView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quartic: Option<QuarticReportView>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionInfo>,
    pub notes: Vec<String>,
    /// Wall-clock time; only present with `--timing`, since it breaks
    /// byte-identical output.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub exit_code: i32,
}

impl ReportDocument {
    pub fn new(command: &'static str, seed: u64) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command,
            input: None,
            spec: None,
            seed,
            valid: false,
            validity_level: None,
            degree: None,
            polynomial: None,
            error: None,
            surface: None,
            quartic: None,
            construction: None,
            notes: Vec::new(),
            timing_ms: None,
            exit_code: EXIT_OK,
        }
    }

    pub fn fail(&mut self, e: &MonoidError) {
        self.error = Some(ErrorInfo::from_error(e));
        self.exit_code = exit_code(e);
    }
}

/// 2 for invalid input, 3 for unparseable text, 4 for internal inconsistency.
pub fn exit_code(e: &MonoidError) -> i32 {
    match e {
        MonoidError::Syntax { .. } | MonoidError::UnknownVariable(_) => EXIT_PARSE,
        e if e.is_internal() => EXIT_INTERNAL,
        _ => EXIT_INVALID,
    }
}
