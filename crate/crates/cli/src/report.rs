use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// JSON envelope for every command. Keys come out sorted because
/// `serde_json::Map` is a `BTreeMap` without the `preserve_order` feature.
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: String,
    pub results: Value,
    pub seed: Option<u64>,
    pub wall_time_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: Vec<String>, input_digest: String, results: impl Serialize) -> anyhow::Result<Self> {
        Ok(Self { command, input_digest, results: serde_json::to_value(results)?, seed: None, wall_time_ms: None })
    }

    fn body(&self) -> Value {
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "seed": self.seed,
        })
    }

    /// SHA-256 of the compact body; wall time is not part of it.
    pub fn digest(&self) -> String {
        sha256_hex(self.body().to_string().as_bytes())
    }

    pub fn to_json(&self) -> Value {
        let mut out = self.body();
        out["digest"] = Value::String(self.digest());
        if let Some(ms) = self.wall_time_ms {
            out["wall_time_ms"] = json!(ms);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_ignores_wall_time() {
        let mut a = RunReport::new(vec!["solve".into()], "00".into(), json!({"b": 1, "a": [2, 1]})).unwrap();
        let d = a.digest();
        a.wall_time_ms = Some(12.5);
        assert_eq!(a.digest(), d);
        let text = a.to_json().to_string();
        assert!(text.find("\"command\"").unwrap() < text.find("\"digest\"").unwrap());
        assert!(text.find("\"a\"").unwrap() < text.find("\"b\"").unwrap());
        a.seed = Some(1);
        assert_ne!(a.digest(), d);
    }
}
