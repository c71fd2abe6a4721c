use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Silent,
    Falsified,
    Sampled,
}

#[derive(Debug, Serialize)]
pub struct VerdictEntry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config: Value,
    pub input_digest: String,
    pub results: Value,
    pub verdicts: Vec<VerdictEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn falsified(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == Status::Falsified)
    }
}

/// Collects verdicts while a command runs.
#[derive(Default)]
pub struct Verdicts(pub Vec<VerdictEntry>);

impl Verdicts {
    pub fn push(&mut self, name: &str, status: Status, detail: Option<String>) {
        self.0.push(VerdictEntry { name: name.to_string(), status, detail });
    }

    /// Verified when `ok`, falsified otherwise.
    pub fn check(&mut self, name: &str, ok: bool, detail: impl Into<Option<String>>) {
        let status = if ok { Status::Verified } else { Status::Falsified };
        self.push(name, status, detail.into());
    }
}

/// SHA-256 over the input file bytes followed by the canonical configuration.
pub fn digest(inputs: &[Vec<u8>], config: &Value) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    h.update(config.to_string().as_bytes());
    hex::encode(h.finalize())
}
