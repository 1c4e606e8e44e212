//! Result envelopes: one structured document per command, with citations,
//! warnings, and an exit status.

use serde::Serialize;
use serde_json::{json, Value};

/// Extra citation tags used by the front end.
pub mod tags {
    pub const S_DEFINITION: &str = "s-equals-order-of-central-projection";
    pub const S_LCM: &str = "s-equals-lcm-of-factor-orders";
    pub const SURFACE_LOOPS: &str = "surface-gauge-group-loop-splitting";
    pub const TRIVIAL_SPLITTING: &str = "trivial-samelson-class-splits-gauge-group";
    pub const EVALUATION_FIBRATION: &str = "evaluation-fibration-exact-sequence";
    pub const BOTT_MULTIPLIER: &str = "bott-samelson-class-multiplier";
    pub const DU_RANGE: &str = "daskalopoulos-uhlenbeck-range";
    pub const WU_FORMULA: &str = "wu-formula";
    pub const SQ_LEMMA: &str = "steenrod-square-decomposability-cases";
    pub const CRITERION: &str = "steenrod-operation-nontriviality-criterion";
    pub const COMMUTATOR: &str = "hopf-commutator-pullback";
    pub const CONNECTED: &str = "gauge-group-components-from-loop-factors";
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "OK")]
    Ok,
    #[serde(rename = "UNKNOWN")]
    Unknown,
    #[serde(rename = "OUT_OF_RANGE")]
    OutOfRange,
    #[serde(rename = "REJECTED")]
    Rejected,
    #[serde(rename = "INVALID")]
    Invalid,
    #[serde(rename = "VERIFICATION_FAILED")]
    VerificationFailed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Unknown => 0,
            Status::Invalid | Status::Rejected | Status::OutOfRange => 2,
            Status::VerificationFailed => 3,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: String,
    pub status: Status,
    pub result: Value,
    pub citations: Vec<&'static str>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

impl Envelope {
    pub fn new(command: impl Into<String>, status: Status, result: Value) -> Self {
        Envelope {
            command: command.into(),
            status,
            result,
            citations: Vec::new(),
            warnings: Vec::new(),
            trace: Vec::new(),
        }
    }

    pub fn cite(mut self, tag: &'static str) -> Self {
        if !self.citations.contains(&tag) {
            self.citations.push(tag);
        }
        self
    }

    pub fn warn(mut self, w: impl Into<String>) -> Self {
        self.warnings.push(w.into());
        self
    }

    pub fn with_trace(mut self, trace: Vec<String>) -> Self {
        self.trace = trace;
        self
    }

    pub fn invalid(command: impl Into<String>, message: impl std::fmt::Display) -> Self {
        Envelope::new(command, Status::Invalid, json!({ "error": message.to_string() }))
    }

    /// Render for human eyes; machine consumers use `--format json`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("status: {}\n", status_str(self.status)));
        render_value(&mut out, &self.result, 0);
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if !self.citations.is_empty() {
            out.push_str(&format!("citations: {}\n", self.citations.join(", ")));
        }
        for t in &self.trace {
            out.push_str(&format!("  trace: {t}\n"));
        }
        out
    }
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Ok => "OK",
        Status::Unknown => "UNKNOWN",
        Status::OutOfRange => "OUT_OF_RANGE",
        Status::Rejected => "REJECTED",
        Status::Invalid => "INVALID",
        Status::VerificationFailed => "VERIFICATION_FAILED",
    }
}

fn render_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(out, v, indent + 1);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", plain(v))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render_value(out, item, indent + 1);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", plain(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", plain(v))),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
