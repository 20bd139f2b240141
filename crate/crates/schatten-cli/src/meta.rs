//! Run metadata embedded verbatim in every JSON and CSV output.

use std::collections::BTreeMap;

use serde::Serialize;

pub const TOOL_NAME: &str = "schatten";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct RunMetadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub command_line: String,
    pub seed: Option<u64>,
    pub timestamp: String,
    pub prng: &'static str,
    pub tolerances: BTreeMap<&'static str, f64>,
}

impl RunMetadata {
    pub fn new(seed: Option<u64>, tolerances: BTreeMap<&'static str, f64>) -> Self {
        Self {
            tool: TOOL_NAME,
            version: TOOL_VERSION,
            command_line: std::env::args().collect::<Vec<_>>().join(" "),
            seed,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            prng: schatten::PRNG_NAME,
            tolerances,
        }
    }

    /// The same metadata as `#`-prefixed comment lines for CSV headers.
    pub fn csv_comment_lines(&self) -> String {
        let seed = match self.seed {
            Some(s) => s.to_string(),
            None => "none".into(),
        };
        let tolerances = if self.tolerances.is_empty() {
            "none".to_string()
        } else {
            self.tolerances
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "# tool: {} {}\n# command_line: {}\n# seed: {}\n# timestamp: {}\n# prng: {}\n# tolerances: {}\n",
            self.tool, self.version, self.command_line, seed, self.timestamp, self.prng, tolerances
        )
    }
}
