//! JSON sidecar that records how an output file was produced.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunManifest {
    pub command: String,
    /// The arguments exactly as given, without the program name.
    pub argv: Vec<String>,
    /// Resolved parameters, including defaults and the work budget.
    pub params: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub version: String,
    /// Column layout identifier, `<command>/<revision>`.
    pub schema: String,
    pub timestamp: String,
    pub output_sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RunManifest {
    pub fn new(
        command: &str,
        argv: Vec<String>,
        params: BTreeMap<String, String>,
        seed: Option<u64>,
        schema: &str,
        output: &[u8],
    ) -> Self {
        RunManifest {
            command: command.to_string(),
            argv,
            params,
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            schema: schema.to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            output_sha256: sha256_hex(output),
        }
    }

    /// `results.csv` -> `results.csv.manifest.json`.
    pub fn path_for(out: &Path) -> PathBuf {
        let mut name = out.as_os_str().to_owned();
        name.push(".manifest.json");
        PathBuf::from(name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes") + "\n"
    }

    pub fn write(&self, out: &Path) -> std::io::Result<PathBuf> {
        let path = Self::path_for(out);
        std::fs::write(&path, self.to_json())?;
        Ok(path)
    }
}
