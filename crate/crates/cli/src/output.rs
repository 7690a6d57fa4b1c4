use std::time::Duration;

use beatty::Big;
use serde::Serialize;
use serde_json::{Map, Value};

/// How far an answer can be trusted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Exact,
    /// Established only with quantifiers over `[-B, B]`.
    Bounded(Big),
    Unknown,
}

/// What a subcommand produced, before rendering.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub exit: u8,
    pub fields: Map<String, Value>,
    pub provenance: Provenance,
}

impl Outcome {
    fn with<const N: usize>(text: String, exit: u8, fields: [(&str, Value); N]) -> Self {
        let fields = fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        Outcome { text, exit, fields, provenance: Provenance::Exact }
    }

    pub fn answered<const N: usize>(text: String, fields: [(&str, Value); N]) -> Self {
        Self::with(text, 0, fields)
    }

    /// False, no solution, empty window.
    pub fn negative<const N: usize>(text: String, fields: [(&str, Value); N]) -> Self {
        Self::with(text, 1, fields)
    }

    pub fn unknown<const N: usize>(text: String, fields: [(&str, Value); N]) -> Self {
        let mut out = Self::with(text, 2, fields);
        out.provenance = Provenance::Unknown;
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ProvenanceRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    pub kind: &'static str,
}

#[derive(Debug, Serialize)]
pub struct TimingRecord {
    pub micros: String,
}

/// The `--json` line. Numbers are decimal strings so nothing loses precision; keys
/// are emitted in sorted order at every level.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub exit_code: u8,
    pub provenance: ProvenanceRecord,
    pub result: Map<String, Value>,
    pub timing: TimingRecord,
}

impl OutputRecord {
    pub fn new(command: String, outcome: &Outcome, elapsed: Duration) -> Self {
        let provenance = match &outcome.provenance {
            Provenance::Exact => ProvenanceRecord { kind: "exact", bound: None },
            Provenance::Bounded(b) => ProvenanceRecord { kind: "bounded", bound: Some(b.to_string()) },
            Provenance::Unknown => ProvenanceRecord { kind: "unknown", bound: None },
        };
        let mut result = outcome.fields.clone();
        result.insert("text".into(), Value::String(outcome.text.clone()));
        OutputRecord {
            command,
            exit_code: outcome.exit,
            provenance,
            result,
            timing: TimingRecord { micros: elapsed.as_micros().to_string() },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}
