//! Machine-readable reports: a fixed JSON envelope around a command payload.

use serde::Serialize;

use crate::singeq::Verdict;

pub const SCHEMA_ID: &str = "abcat-report";
pub const SCHEMA_VERSION: u32 = 1;
/// JSON Schema describing the envelope.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Debug, Clone, Serialize)]
pub struct Report<T: Serialize> {
    pub schema: &'static str,
    pub schema_version: u32,
    pub command: String,
    pub field: String,
    pub verdict: Option<Verdict>,
    pub payload: T,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: impl Into<String>, field: impl Into<String>, verdict: Option<Verdict>, payload: T) -> Self {
        Report { schema: SCHEMA_ID, schema_version: SCHEMA_VERSION, command: command.into(), field: field.into(), verdict, payload }
    }

    /// Pretty JSON with a trailing newline; field order is fixed by the types.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report payloads serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_keys_and_schema_agree() {
        let r = Report::new("hom", "Q", Some(Verdict::Pass), vec![1, 2]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
        let required: Vec<&str> = schema["required"].as_array().unwrap().iter().map(|k| k.as_str().unwrap()).collect();
        for k in &required {
            assert!(v.get(k).is_some(), "missing {k}");
        }
        assert_eq!(v.as_object().unwrap().len(), required.len());
        assert_eq!(v["verdict"], "pass");
    }
}
